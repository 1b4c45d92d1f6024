//! Oriented and unoriented hypermaps as transitive permutation
//! representations, with type/Euler/genus data, operation application,
//! isomorphism testing and the flag double cover linking the two kinds.
//!
//! An oriented hypermap is a pair (rho0, rho2) of permutations of its
//! darts generating a transitive group; rho1 is derived from
//! rho0 rho1 rho2 = 1. An unoriented hypermap is a transitive triple of
//! involutions (r0, r1, r2) of its flags.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freegroup::{inverse_endo_from_opword, inverse_extend_named, DWord, FGen, FWord};
use crate::genwords::GenWord;
use crate::perm::{is_transitive, orbits, Perm, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("permutation degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("generators do not act transitively")]
    NotTransitive,
    #[error("r{0} is not an involution")]
    NotInvolution(u8),
    #[error("hypermap must have at least one dart or flag")]
    Empty,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("cannot parse hypermap JSON: {0}")]
    Json(String),
}

/// Type, constituent counts, Euler characteristic and genus of an
/// oriented hypermap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapInfo {
    /// Orders of rho0, rho1, rho2.
    pub type_triple: (u64, u64, u64),
    pub hypervertices: usize,
    pub hyperedges: usize,
    pub hyperfaces: usize,
    pub euler: i64,
    pub genus: u64,
}

/// Oriented hypermap on darts 1..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OMap {
    rho0: Perm,
    rho2: Perm,
}

impl OMap {
    pub fn new(rho0: Perm, rho2: Perm) -> Result<OMap, MapError> {
        if rho0.degree() != rho2.degree() {
            return Err(MapError::DegreeMismatch(rho0.degree(), rho2.degree()));
        }
        if rho0.degree() == 0 {
            return Err(MapError::Empty);
        }
        if !is_transitive(rho0.degree(), &[&rho0, &rho2]) {
            return Err(MapError::NotTransitive);
        }
        Ok(OMap { rho0, rho2 })
    }

    pub fn darts(&self) -> usize {
        self.rho0.degree()
    }

    pub fn rho0(&self) -> &Perm {
        &self.rho0
    }

    pub fn rho2(&self) -> &Perm {
        &self.rho2
    }

    /// The unique permutation with rho0 rho1 rho2 = 1 under left-to-right
    /// composition.
    pub fn rho1(&self) -> Perm {
        self.rho0.inverse().then(&self.rho2.inverse())
    }

    pub fn info(&self) -> MapInfo {
        let rho1 = self.rho1();
        let n = self.darts() as i64;
        let c0 = self.rho0.cycle_count();
        let c1 = rho1.cycle_count();
        let c2 = self.rho2.cycle_count();
        let euler = c0 as i64 + c1 as i64 + c2 as i64 - n;
        debug_assert!(euler % 2 == 0 && euler <= 2);
        MapInfo {
            type_triple: (self.rho0.order(), rho1.order(), self.rho2.order()),
            hypervertices: c0,
            hyperedges: c1,
            hyperfaces: c2,
            euler,
            genus: ((2 - euler) / 2) as u64,
        }
    }

    /// Evaluates a free-group word at (rho2, rho0) by left-to-right
    /// permutation products.
    pub fn eval_fword(&self, w: &FWord) -> Perm {
        let rho2_inv = self.rho2.inverse();
        let rho0_inv = self.rho0.inverse();
        let mut acc = Perm::identity(self.darts());
        for l in w.letters() {
            let step = match (l.gen, l.inv) {
                (FGen::Rho2, false) => &self.rho2,
                (FGen::Rho2, true) => &rho2_inv,
                (FGen::Rho0, false) => &self.rho0,
                (FGen::Rho0, true) => &rho0_inv,
            };
            acc = acc.then(step);
        }
        acc
    }

    /// Applies the operation named by a word: the new map represents each
    /// generator by the old evaluation of its image under the inverse of
    /// the word's automorphism. The dart set is kept fixed.
    pub fn apply_operation(&self, w: &GenWord) -> OMap {
        let alpha_inv = inverse_endo_from_opword(w);
        let rho2 = self.eval_fword(&alpha_inv.img2);
        let rho0 = self.eval_fword(&alpha_inv.img0);
        // an automorphism image generates the same permutation group
        OMap { rho0, rho2 }
    }

    /// Searches for a dart bijection conjugating (rho0, rho2) to the other
    /// map's pair: the image of dart 1 determines the rest by transitivity.
    pub fn isomorphism(&self, other: &OMap) -> Option<Perm> {
        if self.darts() != other.darts() {
            return None;
        }
        let n = self.darts();
        'candidates: for cand in 0..n {
            let mut map = vec![usize::MAX; n];
            map[0] = cand;
            let mut queue = vec![0usize];
            let mut head = 0;
            while head < queue.len() {
                let d = queue[head];
                head += 1;
                for (g_self, g_other) in
                    [(&self.rho0, &other.rho0), (&self.rho2, &other.rho2)]
                {
                    let from = g_self.apply(d);
                    let to = g_other.apply(map[d]);
                    if map[from] == usize::MAX {
                        map[from] = to;
                        queue.push(from);
                    } else if map[from] != to {
                        continue 'candidates;
                    }
                }
            }
            // consistent and surjective onto a transitive map of equal size
            return Some(Perm::from_images(map).expect("consistent witness is a bijection"));
        }
        None
    }

    pub fn is_isomorphic(&self, other: &OMap) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Invariant under orientation reversal?
    pub fn is_reflexible(&self) -> bool {
        let mirror = OMap { rho0: self.rho0.inverse(), rho2: self.rho2.inverse() };
        self.is_isomorphic(&mirror)
    }

    /// Canonical bucketing key: the lexicographic minimum over base darts
    /// of the breadth-first relabeled image arrays of (rho0, rho2). Two
    /// maps are isomorphic iff their keys coincide.
    pub fn canonical_key(&self) -> Vec<u32> {
        let n = self.darts();
        let mut best: Option<Vec<u32>> = None;
        for base in 0..n {
            let mut label = vec![usize::MAX; n];
            let mut order = Vec::with_capacity(n);
            label[base] = 0;
            order.push(base);
            let mut head = 0;
            while head < order.len() {
                let d = order[head];
                head += 1;
                for g in [&self.rho0, &self.rho2] {
                    let image = g.apply(d);
                    if label[image] == usize::MAX {
                        label[image] = order.len();
                        order.push(image);
                    }
                }
            }
            let mut key = Vec::with_capacity(2 * n);
            for &d in &order {
                key.push(label[self.rho0.apply(d)] as u32);
            }
            for &d in &order {
                key.push(label[self.rho2.apply(d)] as u32);
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.expect("nonempty map")
    }

    /// Flag double cover: flags are darts x {+, -}; r1 swaps the copies,
    /// r0 and r2 are chosen so that r0 r1 acts as rho2 and r1 r2 as rho0
    /// on the + copy.
    pub fn underlying_flags(&self) -> UMap {
        let n = self.darts();
        let rho0_inv = self.rho0.inverse();
        let rho2_inv = self.rho2.inverse();
        let mut r0 = vec![0usize; 2 * n];
        let mut r1 = vec![0usize; 2 * n];
        let mut r2 = vec![0usize; 2 * n];
        for d in 0..n {
            r1[d] = n + d;
            r1[n + d] = d;
            r0[d] = n + self.rho2.apply(d);
            r0[n + d] = rho2_inv.apply(d);
            r2[d] = n + rho0_inv.apply(d);
            r2[n + d] = self.rho0.apply(d);
        }
        let build = |v: Vec<usize>| Perm::from_images(v).expect("cover images are bijective");
        UMap::new(build(r0), build(r1), build(r2)).expect("cover of a valid map is valid")
    }
}

/// Type and surface data for an unoriented hypermap. For orientable maps
/// `genus` is the orientable genus; otherwise it is the crosscap number
/// 2 - euler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UMapInfo {
    pub type_triple: (u64, u64, u64),
    pub hypervertices: usize,
    pub hyperedges: usize,
    pub hyperfaces: usize,
    pub euler: i64,
    pub orientable: bool,
    pub genus: u64,
}

/// Unoriented hypermap on flags 1..m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UMap {
    r: [Perm; 3],
}

impl UMap {
    pub fn new(r0: Perm, r1: Perm, r2: Perm) -> Result<UMap, MapError> {
        let m = r0.degree();
        if r1.degree() != m {
            return Err(MapError::DegreeMismatch(m, r1.degree()));
        }
        if r2.degree() != m {
            return Err(MapError::DegreeMismatch(m, r2.degree()));
        }
        if m == 0 {
            return Err(MapError::Empty);
        }
        let r = [r0, r1, r2];
        for (i, ri) in r.iter().enumerate() {
            if !ri.then(ri).is_identity() {
                return Err(MapError::NotInvolution(i as u8));
            }
        }
        if !is_transitive(m, &[&r[0], &r[1], &r[2]]) {
            return Err(MapError::NotTransitive);
        }
        Ok(UMap { r })
    }

    pub fn flags(&self) -> usize {
        self.r[0].degree()
    }

    pub fn r(&self, i: usize) -> &Perm {
        &self.r[i]
    }

    pub fn eval_dword(&self, w: &DWord) -> Perm {
        let mut acc = Perm::identity(self.flags());
        for &l in w.letters() {
            acc = acc.then(&self.r[l as usize]);
        }
        acc
    }

    /// rho0 = r1 r2, rho1 = r2 r0, rho2 = r0 r1 acting on flags.
    fn even_generators(&self) -> (Perm, Perm, Perm) {
        (
            self.r[1].then(&self.r[2]),
            self.r[2].then(&self.r[0]),
            self.r[0].then(&self.r[1]),
        )
    }

    /// Orientable iff the even subgroup splits the flags in two orbits.
    pub fn is_orientable(&self) -> bool {
        let (rho0, _, rho2) = self.even_generators();
        orbits(self.flags(), &[&rho0, &rho2]).len() == 2
    }

    /// The Euler characteristic is computed on the orientation double
    /// cover (the even-subgroup action on all flags) and halved.
    pub fn info(&self) -> UMapInfo {
        let (rho0, rho1, rho2) = self.even_generators();
        let m = self.flags() as i64;
        let cover_euler =
            rho0.cycle_count() as i64 + rho1.cycle_count() as i64 + rho2.cycle_count() as i64 - m;
        let euler = cover_euler / 2;
        let orientable = self.is_orientable();
        let genus = if orientable { ((2 - euler) / 2) as u64 } else { (2 - euler) as u64 };
        UMapInfo {
            type_triple: (rho0.order(), rho1.order(), rho2.order()),
            hypervertices: orbits(self.flags(), &[&self.r[1], &self.r[2]]).len(),
            hyperedges: orbits(self.flags(), &[&self.r[2], &self.r[0]]).len(),
            hyperfaces: orbits(self.flags(), &[&self.r[0], &self.r[1]]).len(),
            euler,
            orientable,
            genus,
        }
    }

    /// Applies the operation named by a projective word.
    pub fn apply_operation(&self, w: &GenWord) -> UMap {
        let alpha_inv = inverse_extend_named(w);
        let images = [
            self.eval_dword(&alpha_inv.img[0]),
            self.eval_dword(&alpha_inv.img[1]),
            self.eval_dword(&alpha_inv.img[2]),
        ];
        let [r0, r1, r2] = images;
        UMap { r: [r0, r1, r2] }
    }

    /// Images under the six generator permutations, in lexicographic order
    /// of the permutation (identity first).
    pub fn associates(&self) -> Vec<UMap> {
        const PERMS: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        PERMS
            .iter()
            .map(|sigma| {
                // theta'(r_i) = theta(r_{sigma^-1(i)})
                let mut inv = [0usize; 3];
                for (i, &s) in sigma.iter().enumerate() {
                    inv[s] = i;
                }
                UMap {
                    r: [
                        self.r[inv[0]].clone(),
                        self.r[inv[1]].clone(),
                        self.r[inv[2]].clone(),
                    ],
                }
            })
            .collect()
    }

    pub fn isomorphism(&self, other: &UMap) -> Option<Perm> {
        if self.flags() != other.flags() {
            return None;
        }
        let m = self.flags();
        'candidates: for cand in 0..m {
            let mut map = vec![usize::MAX; m];
            map[0] = cand;
            let mut queue = vec![0usize];
            let mut head = 0;
            while head < queue.len() {
                let d = queue[head];
                head += 1;
                for i in 0..3 {
                    let from = self.r[i].apply(d);
                    let to = other.r[i].apply(map[d]);
                    if map[from] == usize::MAX {
                        map[from] = to;
                        queue.push(from);
                    } else if map[from] != to {
                        continue 'candidates;
                    }
                }
            }
            return Some(Perm::from_images(map).expect("consistent witness is a bijection"));
        }
        None
    }

    pub fn is_isomorphic(&self, other: &UMap) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Restricts the even-subgroup action to one of its two orbits;
    /// `None` when the map is non-orientable.
    pub fn orientation_lift(&self) -> Option<OMap> {
        let (rho0, _, rho2) = self.even_generators();
        let orbs = orbits(self.flags(), &[&rho0, &rho2]);
        if orbs.len() != 2 {
            return None;
        }
        let orbit = &orbs[0];
        let mut index = vec![usize::MAX; self.flags()];
        for (i, &f) in orbit.iter().enumerate() {
            index[f] = i;
        }
        let restrict = |p: &Perm| {
            Perm::from_images(orbit.iter().map(|&f| index[p.apply(f)]).collect())
                .expect("orbit restriction is bijective")
        };
        Some(OMap { rho0: restrict(&rho0), rho2: restrict(&rho2) })
    }
}

// --- JSON wire format ----------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MapFile {
    Oriented { darts: usize, rho0: Vec<usize>, rho2: Vec<usize> },
    Unoriented { flags: usize, r0: Vec<usize>, r1: Vec<usize>, r2: Vec<usize> },
}

/// Either kind of hypermap, as read from a file.
#[derive(Debug, Clone)]
pub enum AnyMap {
    Oriented(OMap),
    Unoriented(UMap),
}

impl MapFile {
    pub fn from_map(map: &AnyMap) -> MapFile {
        match map {
            AnyMap::Oriented(m) => MapFile::Oriented {
                darts: m.darts(),
                rho0: m.rho0().one_based_images(),
                rho2: m.rho2().one_based_images(),
            },
            AnyMap::Unoriented(u) => MapFile::Unoriented {
                flags: u.flags(),
                r0: u.r(0).one_based_images(),
                r1: u.r(1).one_based_images(),
                r2: u.r(2).one_based_images(),
            },
        }
    }

    pub fn into_map(self) -> Result<AnyMap, MapError> {
        match self {
            MapFile::Oriented { darts, rho0, rho2 } => {
                if rho0.len() != darts || rho2.len() != darts {
                    return Err(MapError::DegreeMismatch(darts, rho0.len().max(rho2.len())));
                }
                Ok(AnyMap::Oriented(OMap::new(
                    Perm::from_one_based(&rho0)?,
                    Perm::from_one_based(&rho2)?,
                )?))
            }
            MapFile::Unoriented { flags, r0, r1, r2 } => {
                if r0.len() != flags || r1.len() != flags || r2.len() != flags {
                    return Err(MapError::DegreeMismatch(flags, r0.len()));
                }
                Ok(AnyMap::Unoriented(UMap::new(
                    Perm::from_one_based(&r0)?,
                    Perm::from_one_based(&r1)?,
                    Perm::from_one_based(&r2)?,
                )?))
            }
        }
    }
}

pub fn map_from_json(s: &str) -> Result<AnyMap, MapError> {
    let file: MapFile = serde_json::from_str(s).map_err(|e| MapError::Json(e.to_string()))?;
    file.into_map()
}

pub fn map_to_json(map: &AnyMap) -> String {
    serde_json::to_string(&MapFile::from_map(map)).expect("map serialization cannot fail")
}
