//! Orientably regular hypermaps as finite permutation groups with
//! generating pairs: Cayley maps, enumeration of equivalence classes of
//! generating pairs over a small group, and orbits of operation sets on
//! those classes.
//!
//! Group orders and membership run through a deterministic stabilizer
//! chain; element lists come from a breadth-first enumeration so dart
//! labels and canonical keys are reproducible across runs.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::genwords::GenWord;
use crate::hypermap::OMap;
use crate::perm::{Perm, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegularError {
    #[error("the pair does not generate the group (subgroup order {got} of {want})")]
    NotGenerating { got: u64, want: u64 },
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },
    #[error("unknown group specification {0:?}")]
    BadGroupSpec(String),
    #[error("operation image left the class list; enumeration is inconsistent")]
    MissingImage,
    #[error(transparent)]
    Perm(#[from] PermError),
}

// --- stabilizer chain -----------------------------------------------------

struct ChainLevel {
    base: usize,
    /// Strong generators homed here: they fix every base above this level
    /// and move this one. The generating set of the level's group is the
    /// union of the gens of this level and of all deeper levels.
    gens: Vec<Perm>,
    // transversal[p] maps base to p; inverses cached for sifting
    transversal: Vec<Option<(Perm, Perm)>>,
    orbit: Vec<usize>,
}

impl ChainLevel {
    fn new(degree: usize, base: usize) -> ChainLevel {
        ChainLevel { base, gens: Vec::new(), transversal: vec![None; degree], orbit: Vec::new() }
    }
}

/// Deterministic Schreier-Sims stabilizer chain: supports order and
/// membership for permutation groups given by generators.
pub struct StabChain {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Perm]) -> StabChain {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in generators {
            chain.insert(g.clone());
        }
        chain
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.residue(g, 0).is_ok()
    }

    fn cumulative_gens(&self, level: usize) -> Vec<Perm> {
        self.levels[level..].iter().flat_map(|l| l.gens.iter().cloned()).collect()
    }

    fn recompute_orbit(&mut self, level: usize) {
        let gens = self.cumulative_gens(level);
        let lvl = &mut self.levels[level];
        lvl.transversal = vec![None; self.degree];
        lvl.orbit = vec![lvl.base];
        let id = Perm::identity(self.degree);
        lvl.transversal[lvl.base] = Some((id.clone(), id));
        let mut head = 0;
        while head < lvl.orbit.len() {
            let point = lvl.orbit[head];
            head += 1;
            let u = lvl.transversal[point].as_ref().unwrap().0.clone();
            for g in &gens {
                let image = g.apply(point);
                if lvl.transversal[image].is_none() {
                    let rep = u.then(g);
                    let rep_inv = rep.inverse();
                    lvl.transversal[image] = Some((rep, rep_inv));
                    lvl.orbit.push(image);
                }
            }
        }
    }

    /// Sifts g from `level`; Ok means it reduced to the identity.
    fn residue(&self, g: &Perm, level: usize) -> Result<(), (usize, Perm)> {
        let mut r = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(level) {
            if r.is_identity() {
                return Ok(());
            }
            let image = r.apply(lvl.base);
            match &lvl.transversal[image] {
                Some((_, u_inv)) => r = r.then(u_inv),
                None => return Err((i, r)),
            }
        }
        if r.is_identity() {
            Ok(())
        } else {
            Err((self.levels.len(), r))
        }
    }

    /// Adds a generator; returns true when the group grew.
    pub fn insert(&mut self, g: Perm) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        if g.is_identity() || self.contains(&g) {
            return false;
        }
        // home level: the deepest base prefix the new generator fixes
        let mut home = 0;
        while home < self.levels.len() && g.apply(self.levels[home].base) == self.levels[home].base
        {
            home += 1;
        }
        if home == self.levels.len() {
            let base =
                (0..self.degree).find(|&p| g.apply(p) != p).expect("non-identity moves a point");
            self.levels.push(ChainLevel::new(self.degree, base));
        }
        self.levels[home].gens.push(g);
        // the generator joins the generating set of every level above its
        // home, so re-close them all, deepest first
        for level in (0..=home).rev() {
            self.close_level(level);
        }
        true
    }

    /// Recomputes the orbit at `level` and sifts every Schreier generator
    /// into the deeper chain until all of them reduce to the identity, so
    /// the level's point stabilizer is generated by the levels below it.
    fn close_level(&mut self, level: usize) {
        self.recompute_orbit(level);
        let gens = self.cumulative_gens(level);
        let orbit = self.levels[level].orbit.clone();
        for &point in &orbit {
            for g in &gens {
                let u = self.levels[level].transversal[point].as_ref().unwrap().0.clone();
                let image = g.apply(point);
                let u_image_inv =
                    self.levels[level].transversal[image].as_ref().unwrap().1.clone();
                let schreier = u.then(g).then(&u_image_inv);
                if schreier.is_identity() {
                    continue;
                }
                while let Err((stuck, residue)) = self.residue(&schreier, level + 1) {
                    if stuck == self.levels.len() {
                        let base = (0..self.degree)
                            .find(|&p| residue.apply(p) != p)
                            .expect("non-identity moves a point");
                        self.levels.push(ChainLevel::new(self.degree, base));
                    }
                    self.levels[stuck].gens.push(residue);
                    for l in (level + 1..=stuck).rev() {
                        self.close_level(l);
                    }
                }
            }
        }
    }
}

/// Generators actually needed to span the group, in input order.
pub fn reduce_generators(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut chain = StabChain::new(degree, &[]);
    let mut kept = Vec::new();
    for g in gens {
        if chain.insert(g.clone()) {
            kept.push(g.clone());
        }
    }
    kept
}

// --- finite groups --------------------------------------------------------

/// Finite permutation group given by generators on 1..degree.
#[derive(Debug, Clone)]
pub struct FinGroup {
    degree: usize,
    gens: Vec<Perm>,
    order: OnceLock<u64>,
}

impl FinGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> FinGroup {
        debug_assert!(gens.iter().all(|g| g.degree() == degree));
        FinGroup { degree, gens, order: OnceLock::new() }
    }

    pub fn trivial() -> FinGroup {
        FinGroup::new(1, Vec::new())
    }

    /// Cyclic group generated by an n-cycle.
    pub fn cyclic(n: usize) -> FinGroup {
        assert!(n >= 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        FinGroup::new(n, vec![Perm::from_images(cycle).unwrap()])
    }

    /// Dihedral group of order 2n acting on the vertices of an n-gon.
    pub fn dihedral(n: usize) -> FinGroup {
        assert!(n >= 3);
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FinGroup::new(
            n,
            vec![Perm::from_images(rotation).unwrap(), Perm::from_images(reflection).unwrap()],
        )
    }

    pub fn symmetric(n: usize) -> FinGroup {
        assert!(n >= 1);
        if n == 1 {
            return FinGroup::new(1, Vec::new());
        }
        let mut gens = vec![Perm::parse_cycles("(1,2)", n).unwrap()];
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            gens.push(Perm::from_images(cycle).unwrap());
        }
        FinGroup::new(n, gens)
    }

    pub fn alternating(n: usize) -> FinGroup {
        assert!(n >= 3);
        let three = Perm::parse_cycles("(1,2,3)", n).unwrap();
        if n == 3 {
            return FinGroup::new(3, vec![three]);
        }
        let long = if n % 2 == 1 {
            // the full n-cycle is even
            Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()
        } else {
            // (2,3,...,n) fixing 1 is even
            let images = (0..n)
                .map(|i| if i == 0 { 0 } else if i + 1 < n { i + 1 } else { 1 })
                .collect();
            Perm::from_images(images).unwrap()
        };
        FinGroup::new(n, vec![three, long])
    }

    /// Parses `A5`, `S4`, `C7`, `D6`, ... or inline JSON
    /// `{"degree":n,"generators":[[...],[...]]}` with 1-based image arrays.
    pub fn parse_spec(spec: &str) -> Result<FinGroup, RegularError> {
        let spec = spec.trim();
        if spec.starts_with('{') {
            #[derive(serde::Deserialize)]
            struct GroupFile {
                degree: usize,
                generators: Vec<Vec<usize>>,
            }
            let parsed: GroupFile = serde_json::from_str(spec)
                .map_err(|_| RegularError::BadGroupSpec(spec.to_string()))?;
            let gens: Result<Vec<Perm>, PermError> = parsed
                .generators
                .iter()
                .map(|images| Perm::from_one_based(images))
                .collect();
            return Ok(FinGroup::new(parsed.degree, gens?));
        }
        let (family, digits) = spec.split_at(1);
        let n: usize = digits.parse().map_err(|_| RegularError::BadGroupSpec(spec.to_string()))?;
        match (family, n) {
            ("C", n) if n >= 1 => Ok(FinGroup::cyclic(n)),
            ("S", n) if n >= 1 => Ok(FinGroup::symmetric(n)),
            ("A", n) if n >= 3 => Ok(FinGroup::alternating(n)),
            ("D", n) if n >= 3 => Ok(FinGroup::dihedral(n)),
            _ => Err(RegularError::BadGroupSpec(spec.to_string())),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> u64 {
        *self.order.get_or_init(|| StabChain::new(self.degree, &self.gens).order())
    }

    /// Elements in breadth-first order from the identity, right-multiplying
    /// by the generators in their listed order.
    pub fn elements(&self) -> Vec<Perm> {
        elements_from(self.degree, &self.gens)
    }
}

fn elements_from(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut elements = vec![Perm::identity(degree)];
    let mut seen: HashMap<Perm, usize> = HashMap::new();
    seen.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in gens {
            let next = current.then(g);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    elements
}

/// Generating pair (g2, g0): the images of rho2 and rho0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenPair {
    pub g2: Perm,
    pub g0: Perm,
}

impl GenPair {
    pub fn new(g2: Perm, g0: Perm) -> GenPair {
        GenPair { g2, g0 }
    }

    /// Derived image of rho1 = rho0^-1 rho2^-1.
    pub fn g1(&self) -> Perm {
        self.g0.inverse().then(&self.g2.inverse())
    }

    /// Parses `"<cycles>;<cycles>"` as (g2, g0).
    pub fn parse(s: &str, degree: usize) -> Result<GenPair, PermError> {
        let (left, right) = s.split_once(';').ok_or(PermError::Parse(s.to_string()))?;
        Ok(GenPair::new(
            Perm::parse_cycles(left, degree)?,
            Perm::parse_cycles(right, degree)?,
        ))
    }
}

impl std::fmt::Display for GenPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{};{}", self.g2, self.g0)
    }
}

pub fn generates(group: &FinGroup, pair: &GenPair) -> bool {
    StabChain::new(group.degree(), &[pair.g2.clone(), pair.g0.clone()]).order() == group.order()
}

/// Cayley map of a generating pair: darts are the group elements in
/// breadth-first order over (g2, g0); rho2 and rho0 act by right
/// multiplication.
pub fn cayley(group: &FinGroup, pair: &GenPair) -> Result<OMap, RegularError> {
    let sub_order = StabChain::new(group.degree(), &[pair.g2.clone(), pair.g0.clone()]).order();
    if sub_order != group.order() {
        return Err(RegularError::NotGenerating { got: sub_order, want: group.order() });
    }
    Ok(cayley_unchecked(group.degree(), pair))
}

fn cayley_unchecked(degree: usize, pair: &GenPair) -> OMap {
    let elements = elements_from(degree, &[pair.g2.clone(), pair.g0.clone()]);
    let mut index: HashMap<&Perm, usize> = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        index.insert(e, i);
    }
    let image_under = |g: &Perm| -> Perm {
        let images: Vec<usize> = elements.iter().map(|e| index[&e.then(g)]).collect();
        Perm::from_images(images).expect("right multiplication permutes the elements")
    };
    let rho2 = image_under(&pair.g2);
    let rho0 = image_under(&pair.g0);
    OMap::new(rho0, rho2).expect("Cayley action of a generating pair is transitive")
}

/// Equivalence class of generating pairs under regular-map isomorphism
/// (equivalently, under the automorphism group of G).
#[derive(Debug, Clone)]
pub struct RegularClass {
    pub key: Vec<u32>,
    pub representative: GenPair,
    pub type_triple: (u64, u64, u64),
    pub genus: u64,
    pub class_size: u64,
}

/// Enumerates the classes of generating pairs of `group`, bucketing by the
/// canonical key of the Cayley map. `threads` > 1 splits the pair range;
/// the output is identical for any thread count.
pub fn enumerate_classes(
    group: &FinGroup,
    bound: u64,
    threads: usize,
) -> Result<Vec<RegularClass>, RegularError> {
    let order = group.order();
    if order > bound {
        return Err(RegularError::BoundExceeded { order, bound });
    }
    let elements = group.elements();
    let n = elements.len();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    type PairRecord = ((usize, usize), Vec<u32>, (u64, u64, u64), u64);
    let process = |chunk: &[(usize, usize)]| -> Vec<PairRecord> {
        let mut out = Vec::new();
        for &(i, j) in chunk {
            let pair = GenPair::new(elements[i].clone(), elements[j].clone());
            let sub = StabChain::new(group.degree(), &[pair.g2.clone(), pair.g0.clone()]);
            if sub.order() != order {
                continue;
            }
            let map = cayley_unchecked(group.degree(), &pair);
            let info = map.info();
            out.push(((i, j), map.canonical_key(), info.type_triple, info.genus));
        }
        out
    };
    let results: Vec<PairRecord> = if threads <= 1 {
        process(&pairs)
    } else {
        let chunk_size = pairs.len().div_ceil(threads);
        let chunks: Vec<&[(usize, usize)]> = pairs.chunks(chunk_size).collect();
        let process = &process;
        let mut collected: Vec<Vec<_>> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> =
                chunks.iter().map(|&chunk| scope.spawn(move || process(chunk))).collect();
            for h in handles {
                collected.push(h.join().expect("enumeration worker panicked"));
            }
        });
        // chunks are merged in pair-index order, so the output ordering is
        // independent of the thread count
        collected.into_iter().flatten().collect()
    };
    let mut buckets: BTreeMap<Vec<u32>, RegularClass> = BTreeMap::new();
    for ((i, j), key, type_triple, genus) in results {
        buckets
            .entry(key.clone())
            .and_modify(|c| c.class_size += 1)
            .or_insert_with(|| RegularClass {
                key,
                representative: GenPair::new(elements[i].clone(), elements[j].clone()),
                type_triple,
                genus,
                class_size: 1,
            });
    }
    let mut classes: Vec<RegularClass> = buckets.into_values().collect();
    classes.sort_by(|a, b| {
        (a.type_triple, a.genus, &a.key).cmp(&(b.type_triple, b.genus, &b.key))
    });
    Ok(classes)
}

/// Partition of the classes into orbits under the given operation words.
/// Blocks and their members are reported as indices into `classes`,
/// ordered by smallest member.
pub fn operation_orbits(
    group: &FinGroup,
    classes: &[RegularClass],
    ops: &[GenWord],
) -> Result<Vec<Vec<usize>>, RegularError> {
    let key_index: HashMap<&[u32], usize> =
        classes.iter().enumerate().map(|(i, c)| (c.key.as_slice(), i)).collect();
    // union-find over class indices
    let mut parent: Vec<usize> = (0..classes.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (i, class) in classes.iter().enumerate() {
        let map = cayley_unchecked(group.degree(), &class.representative);
        for op in ops {
            let image_key = map.apply_operation(op).canonical_key();
            let j = *key_index
                .get(image_key.as_slice())
                .ok_or(RegularError::MissingImage)?;
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..classes.len() {
        let root = find(&mut parent, i);
        blocks.entry(root).or_default().push(i);
    }
    Ok(blocks.into_values().collect())
}

/// The pair of the image map: g2' and g0' evaluate the inverse-automorphism
/// images of rho2 and rho0 at the old pair.
pub fn transform_pair(pair: &GenPair, w: &GenWord) -> GenPair {
    let alpha_inv = crate::freegroup::inverse_endo_from_opword(w);
    GenPair::new(
        eval_fword_at_pair(&alpha_inv.img2, pair),
        eval_fword_at_pair(&alpha_inv.img0, pair),
    )
}

/// Evaluates a free-group word at (g2, g0).
pub fn eval_fword_at_pair(w: &crate::freegroup::FWord, pair: &GenPair) -> Perm {
    let g2_inv = pair.g2.inverse();
    let g0_inv = pair.g0.inverse();
    let mut acc = Perm::identity(pair.g2.degree());
    for l in w.letters() {
        let step = match (l.gen, l.inv) {
            (crate::freegroup::FGen::Rho2, false) => &pair.g2,
            (crate::freegroup::FGen::Rho2, true) => &g2_inv,
            (crate::freegroup::FGen::Rho0, false) => &pair.g0,
            (crate::freegroup::FGen::Rho0, true) => &g0_inv,
        };
        acc = acc.then(step);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genwords::GenWord;

    fn a5() -> FinGroup {
        FinGroup::alternating(5)
    }

    #[test]
    fn constructor_orders() {
        assert_eq!(FinGroup::cyclic(7).order(), 7);
        assert_eq!(FinGroup::dihedral(5).order(), 10);
        assert_eq!(FinGroup::symmetric(4).order(), 24);
        assert_eq!(a5().order(), 60);
        assert_eq!(FinGroup::alternating(6).order(), 360);
        assert_eq!(FinGroup::trivial().order(), 1);
    }

    #[test]
    fn element_enumeration_is_complete_and_deterministic() {
        let g = FinGroup::symmetric(4);
        let elements = g.elements();
        assert_eq!(elements.len(), 24);
        assert_eq!(elements, g.elements());
        assert_eq!(elements[0], Perm::identity(4));
    }

    #[test]
    fn stabchain_membership() {
        let g = a5();
        let chain = StabChain::new(5, g.generators());
        assert_eq!(chain.order(), 60);
        assert!(chain.contains(&Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap()));
        assert!(chain.contains(&Perm::parse_cycles("(1,2)(3,4)", 5).unwrap()));
        // odd permutations are outside A5
        assert!(!chain.contains(&Perm::parse_cycles("(1,2)", 5).unwrap()));
        let reduced = reduce_generators(5, &[ // padded generating set shrinks
            Perm::parse_cycles("(1,2,3)", 5).unwrap(),
            Perm::parse_cycles("(1,2,3)", 5).unwrap(),
            Perm::parse_cycles("(3,4,5)", 5).unwrap(),
            Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        ]);
        assert!(reduced.len() <= 3);
        assert_eq!(StabChain::new(5, &reduced).order(), 60);
    }

    #[test]
    fn cayley_of_icosahedral_pair() {
        let pair = GenPair::new(
            Perm::parse_cycles("(2,5,4)", 5).unwrap(),
            Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        );
        let map = cayley(&a5(), &pair).unwrap();
        assert_eq!(map.darts(), 60);
        let info = map.info();
        assert_eq!(info.type_triple, (5, 2, 3));
        assert_eq!(info.genus, 0);
    }

    #[test]
    fn cayley_trivial_and_degenerate_pairs() {
        let trivial = FinGroup::trivial();
        let pair = GenPair::new(Perm::identity(1), Perm::identity(1));
        let map = cayley(&trivial, &pair).unwrap();
        assert_eq!(map.darts(), 1);
        assert_eq!(map.info().euler, 2);
        // C5 generated by rho2 alone: type (1,5,5), genus 0
        let c5 = FinGroup::cyclic(5);
        let pair = GenPair::new(
            Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
            Perm::identity(5),
        );
        let map = cayley(&c5, &pair).unwrap();
        assert_eq!(map.info().type_triple, (1, 5, 5));
        assert_eq!(map.info().genus, 0);
        // a non-generating pair is rejected
        let bad = GenPair::new(Perm::identity(5), Perm::identity(5));
        assert!(matches!(cayley(&c5, &bad), Err(RegularError::NotGenerating { .. })));
    }

    #[test]
    fn class_counts_for_small_groups() {
        let c5 = enumerate_classes(&FinGroup::cyclic(5), 120, 1).unwrap();
        assert_eq!(c5.len(), 6);
        assert!(c5.iter().all(|c| c.class_size == 4));
        let s3 = enumerate_classes(&FinGroup::symmetric(3), 120, 1).unwrap();
        assert_eq!(s3.len(), 3);
        assert!(s3.iter().all(|c| c.class_size == 6));
        // (#classes) x (bucket size) = (#generating pairs)
        let total: u64 = s3.iter().map(|c| c.class_size).sum();
        assert_eq!(total, 18);
    }

    #[test]
    fn enumeration_respects_bound_and_threads() {
        assert!(matches!(
            enumerate_classes(&a5(), 10, 1),
            Err(RegularError::BoundExceeded { order: 60, bound: 10 })
        ));
        let single = enumerate_classes(&FinGroup::symmetric(4), 120, 1).unwrap();
        let multi = enumerate_classes(&FinGroup::symmetric(4), 120, 4).unwrap();
        assert_eq!(single.len(), multi.len());
        for (a, b) in single.iter().zip(&multi) {
            assert_eq!(a.key, b.key);
            assert_eq!(a.class_size, b.class_size);
            assert_eq!(a.representative, b.representative);
        }
    }

    #[test]
    fn genus_consistency_over_s4() {
        let classes = enumerate_classes(&FinGroup::symmetric(4), 120, 1).unwrap();
        for c in &classes {
            let (o0, o1, o2) = c.type_triple;
            let g = 24u64;
            let euler = (g / o0 + g / o1 + g / o2) as i64 - g as i64;
            assert_eq!(c.genus as i64, (2 - euler) / 2);
        }
    }

    #[test]
    fn empty_op_list_gives_singletons() {
        let classes = enumerate_classes(&FinGroup::cyclic(5), 120, 1).unwrap();
        let orbits = operation_orbits(&FinGroup::cyclic(5), &classes, &[]).unwrap();
        assert_eq!(orbits.len(), classes.len());
        assert!(orbits.iter().all(|b| b.len() == 1));
    }

    #[test]
    fn transform_pair_matches_cayley_operation() {
        let pair = GenPair::new(
            Perm::parse_cycles("(2,5,4)", 5).unwrap(),
            Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        );
        let w = GenWord::parse("X T", false).unwrap();
        let transformed = transform_pair(&pair, &w);
        // the twisting operation inverts rho2 and fixes rho0
        assert_eq!(transformed.g2, pair.g2.inverse());
        assert_eq!(transformed.g0, pair.g0);
        let direct = cayley(&a5(), &pair).unwrap().apply_operation(&w);
        let via_pair = cayley(&a5(), &transformed).unwrap();
        assert_eq!(direct.canonical_key(), via_pair.canonical_key());
    }

    #[test]
    fn equivalent_pairs_share_keys_and_orbits() {
        // conjugating a pair by a group element is an automorphism of the
        // group, so the canonical key and every operation image agree
        use rand::{Rng, SeedableRng};
        let group = FinGroup::symmetric(4);
        let classes = enumerate_classes(&group, 120, 1).unwrap();
        let ops = [GenWord::parse("X", false).unwrap(), GenWord::parse("T", false).unwrap()];
        let elements = group.elements();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(67);
        for class in classes.iter().take(4) {
            let c = &elements[rng.gen_range(0..elements.len())];
            let moved = GenPair::new(
                class.representative.g2.conjugated_by(c),
                class.representative.g0.conjugated_by(c),
            );
            let original = cayley(&group, &class.representative).unwrap();
            let relabeled = cayley(&group, &moved).unwrap();
            assert_eq!(original.canonical_key(), relabeled.canonical_key());
            for op in &ops {
                assert_eq!(
                    original.apply_operation(op).canonical_key(),
                    relabeled.apply_operation(op).canonical_key()
                );
            }
        }
    }

    #[test]
    fn group_spec_parsing() {
        assert_eq!(FinGroup::parse_spec("A5").unwrap().order(), 60);
        assert_eq!(FinGroup::parse_spec("C12").unwrap().order(), 12);
        assert_eq!(FinGroup::parse_spec("D4").unwrap().order(), 8);
        assert_eq!(FinGroup::parse_spec("S3").unwrap().order(), 6);
        let json = r#"{"degree":3,"generators":[[2,3,1],[2,1,3]]}"#;
        assert_eq!(FinGroup::parse_spec(json).unwrap().order(), 6);
        assert!(FinGroup::parse_spec("Q8").is_err());
        assert!(FinGroup::parse_spec("A2").is_err());
    }
}
