//! Generalized chirality groups of orientably regular hypermaps under a
//! periodic operation: Schreier generators of the kernel subgroup, the
//! upper group (images of the kernel joined over all powers of the
//! automorphism, modulo the kernel), the lower group (kernel modulo the
//! intersection of the images), and the associated invariant covers and
//! quotients.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::freegroup::{endo_from_opword, inverse_endo_from_opword, Endo, FLetter, FWord};
use crate::genwords::{eval_word, GenWord};
use crate::gl2::{classify_gl, Gl2Error};
use crate::perm::Perm;
use crate::regular::{
    eval_fword_at_pair, reduce_generators, FinGroup, GenPair, RegularError, StabChain,
};

/// Default guard on subgroup orders computed in product groups; override
/// per call or via `HYPEROP_MAX_ORDER` on the CLI.
pub const DEFAULT_MAX_ORDER: u64 = 10_000_000;

// Descriptor details (abelian invariants, simplicity) require enumerating
// the subgroup; above this order only the order and abelianness are given.
const DESCRIPTOR_ENUM_BOUND: u64 = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChiralityError {
    #[error("operation word {0:?} is not periodic; chirality needs a finite-order operation")]
    NonPeriodic(String),
    #[error(transparent)]
    Regular(#[from] RegularError),
    #[error(transparent)]
    Matrix(#[from] Gl2Error),
    #[error("subgroup order exceeds the guard {bound}; raise HYPEROP_MAX_ORDER to proceed")]
    OrderBound { bound: u64 },
}

/// Coset transversal of the kernel of theta: for each group element a
/// word mapping to it, built breadth-first so the words are prefix-closed.
pub struct Transversal {
    pub elements: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
    pub words: Vec<FWord>,
}

impl Transversal {
    pub fn new(pair: &GenPair) -> Transversal {
        let degree = pair.g2.degree();
        let steps = [
            (pair.g2.clone(), FLetter::RHO2),
            (pair.g0.clone(), FLetter::RHO0),
            (pair.g2.inverse(), FLetter::RHO2_INV),
            (pair.g0.inverse(), FLetter::RHO0_INV),
        ];
        let mut elements = vec![Perm::identity(degree)];
        let mut words = vec![FWord::empty()];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            let word = words[head].clone();
            head += 1;
            for (g, letter) in &steps {
                let next = current.then(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    words.push(word.mul(&FWord::from_letters([*letter])));
                }
            }
        }
        Transversal { elements, index, words }
    }
}

/// Schreier generators of the kernel subgroup: for every group element g
/// and generator s, the reduced word u_g s u_{g theta(s)}^-1, trivial words
/// dropped. A prefix-closed transversal leaves exactly |G| + 1 of them.
pub fn schreier_generators(group: &FinGroup, pair: &GenPair) -> Result<Vec<FWord>, ChiralityError> {
    if !crate::regular::generates(group, pair) {
        return Err(RegularError::NotGenerating {
            got: StabChain::new(group.degree(), &[pair.g2.clone(), pair.g0.clone()]).order(),
            want: group.order(),
        }
        .into());
    }
    Ok(schreier_generators_unchecked(&Transversal::new(pair), pair))
}

fn schreier_generators_unchecked(transversal: &Transversal, pair: &GenPair) -> Vec<FWord> {
    let steps = [(pair.g2.clone(), FWord::rho2()), (pair.g0.clone(), FWord::rho0())];
    let mut out = Vec::new();
    for (i, element) in transversal.elements.iter().enumerate() {
        for (g, s_word) in &steps {
            let target = transversal.index[&element.then(g)];
            let word = transversal.words[i].mul(s_word).mul(&transversal.words[target].inverse());
            if !word.is_empty() {
                out.push(word);
            }
        }
    }
    out
}

/// Summary of a subgroup: order, abelianness, abelian invariants in
/// primary (elementary divisor) form when abelian, and a simplicity flag.
/// The detailed fields are omitted for groups too large to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub order: u64,
    pub is_abelian: bool,
    pub abelian_invariants: Option<Vec<u64>>,
    pub simple: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct ChiralityReport {
    pub word: String,
    /// Order of the operation's matrix class.
    pub period: u32,
    pub upper_order: u64,
    pub lower_order: u64,
    /// Order of the full quotient by the intersection of the kernel images;
    /// always |G| times `lower_order`.
    pub full_lower_order: u64,
    pub upper_is_normal: bool,
    pub upper: GroupDescriptor,
}

fn period_of(w: &GenWord) -> Result<u32, ChiralityError> {
    let label = classify_gl(&eval_word(w)?)?;
    label.finite_order().ok_or_else(|| ChiralityError::NonPeriodic(w.to_string()))
}

fn ensure_generating(group: &FinGroup, pair: &GenPair) -> Result<(), ChiralityError> {
    let got = StabChain::new(group.degree(), &[pair.g2.clone(), pair.g0.clone()]).order();
    if got != group.order() {
        return Err(RegularError::NotGenerating { got, want: group.order() }.into());
    }
    Ok(())
}

/// Permutation of k disjoint copies of the domain, block i acting as
/// theta(alpha^-i(w)).
fn phi_image(word: &FWord, pair: &GenPair, alpha_inv: &Endo, k: u32) -> Perm {
    let n = pair.g2.degree();
    let mut images = Vec::with_capacity(k as usize * n);
    let mut w = word.clone();
    for i in 0..k {
        let block = eval_fword_at_pair(&w, pair);
        let offset = i as usize * n;
        images.extend(block.images().iter().map(|&x| x + offset));
        if i + 1 < k {
            w = alpha_inv.apply(&w);
        }
    }
    Perm::from_images(images).expect("blockwise images are bijective")
}

/// Generalized chirality data of the regular hypermap of `pair` under the
/// periodic operation `w`.
///
/// Upper group: subgroup of G generated by the theta-images of
/// alpha^i(kernel) for i = 1..period-1. Lower group: image of the kernel
/// in G^period under v -> (theta(alpha^-i(v)))_i; its order measures the
/// kernel modulo the intersection of its images. The images cycle with
/// the matrix period because alpha^period is inner and the kernel normal.
pub fn chirality(
    group: &FinGroup,
    pair: &GenPair,
    w: &GenWord,
    max_order: u64,
) -> Result<ChiralityReport, ChiralityError> {
    let k = period_of(w)?;
    ensure_generating(group, pair)?;
    let transversal = Transversal::new(pair);
    let kernel_gens = schreier_generators_unchecked(&transversal, pair);
    let alpha = endo_from_opword(w);
    let alpha_inv = inverse_endo_from_opword(w);
    let degree = group.degree();

    // upper group
    let mut upper_chain = StabChain::new(degree, &[]);
    let mut upper_gens: Vec<Perm> = Vec::new();
    let mut seen: HashSet<Perm> = HashSet::new();
    for h in &kernel_gens {
        let mut image = h.clone();
        for _ in 1..k {
            image = alpha.apply(&image);
            let perm = eval_fword_at_pair(&image, pair);
            if !perm.is_identity() && seen.insert(perm.clone()) && upper_chain.insert(perm.clone())
            {
                upper_gens.push(perm);
            }
        }
    }
    let upper_order = upper_chain.order();

    // the upper group is a theta-image of a normal subgroup, so the check
    // must pass; a failure would be an internal fault
    let conjugators =
        [pair.g2.clone(), pair.g0.clone(), pair.g2.inverse(), pair.g0.inverse()];
    let upper_is_normal = upper_gens.iter().all(|u| {
        conjugators.iter().all(|c| upper_chain.contains(&u.conjugated_by(c)))
    });

    // lower group in G^k
    let mut lower_chain = StabChain::new(degree * k as usize, &[]);
    for h in &kernel_gens {
        lower_chain.insert(phi_image(h, pair, &alpha_inv, k));
    }
    let lower_order = lower_chain.order();
    if lower_order > max_order {
        return Err(ChiralityError::OrderBound { bound: max_order });
    }
    let full_chain = StabChain::new(
        degree * k as usize,
        &[
            phi_image(&FWord::rho2(), pair, &alpha_inv, k),
            phi_image(&FWord::rho0(), pair, &alpha_inv, k),
        ],
    );
    let full_lower_order = full_chain.order();
    if full_lower_order > max_order {
        return Err(ChiralityError::OrderBound { bound: max_order });
    }

    let upper = describe_group(degree, &upper_gens, upper_order);
    Ok(ChiralityReport {
        word: w.to_string(),
        period: k,
        upper_order,
        lower_order,
        full_lower_order,
        upper_is_normal,
        upper,
    })
}

/// The regular cover carried by the first `depth` kernel images: the
/// subgroup of G^depth generated by the blockwise pair. `depth` equal to
/// the period gives the smallest cover invariant under the operation.
pub fn cover_at_depth(
    group: &FinGroup,
    pair: &GenPair,
    w: &GenWord,
    depth: u32,
) -> Result<(FinGroup, GenPair), ChiralityError> {
    ensure_generating(group, pair)?;
    let alpha_inv = inverse_endo_from_opword(w);
    let g2 = phi_image(&FWord::rho2(), pair, &alpha_inv, depth);
    let g0 = phi_image(&FWord::rho0(), pair, &alpha_inv, depth);
    let cover_group = FinGroup::new(group.degree() * depth as usize, vec![g2.clone(), g0.clone()]);
    Ok((cover_group, GenPair::new(g2, g0)))
}

/// Smallest cover of the input fixed by the operation, as a subgroup of
/// G^period with its generating pair.
pub fn invariant_cover(
    group: &FinGroup,
    pair: &GenPair,
    w: &GenWord,
) -> Result<(FinGroup, GenPair), ChiralityError> {
    let k = period_of(w)?;
    cover_at_depth(group, pair, w, k)
}

/// Largest quotient of the input fixed by the operation: G modulo the
/// upper group, acting on its cosets.
pub fn invariant_quotient(
    group: &FinGroup,
    pair: &GenPair,
    w: &GenWord,
    max_order: u64,
) -> Result<(FinGroup, GenPair), ChiralityError> {
    let report = chirality(group, pair, w, max_order)?;
    if report.upper_order == 1 {
        return Ok((group.clone(), pair.clone()));
    }
    if group.order() > max_order {
        return Err(ChiralityError::OrderBound { bound: max_order });
    }
    // rebuild the upper subgroup chain for membership tests
    let k = report.period;
    let transversal = Transversal::new(pair);
    let kernel_gens = schreier_generators_unchecked(&transversal, pair);
    let alpha = endo_from_opword(w);
    let mut chain = StabChain::new(group.degree(), &[]);
    for h in &kernel_gens {
        let mut image = h.clone();
        for _ in 1..k {
            image = alpha.apply(&image);
            chain.insert(eval_fword_at_pair(&image, pair));
        }
    }
    // breadth-first over right cosets: Na = Nb iff a b^-1 is in N
    let mut reps: Vec<Perm> = vec![Perm::identity(group.degree())];
    let mut images: Vec<[usize; 2]> = Vec::new();
    let gens = [pair.g2.clone(), pair.g0.clone()];
    let mut head = 0;
    while head < reps.len() {
        let rep = reps[head].clone();
        let mut row = [usize::MAX; 2];
        for (slot, g) in gens.iter().enumerate() {
            let candidate = rep.then(g);
            let found = reps
                .iter()
                .position(|r| chain.contains(&candidate.then(&r.inverse())));
            row[slot] = match found {
                Some(i) => i,
                None => {
                    reps.push(candidate);
                    reps.len() - 1
                }
            };
        }
        images.push(row);
        head += 1;
    }
    let index = reps.len();
    let collect = |slot: usize| {
        Perm::from_images(images.iter().map(|row| row[slot]).collect())
            .expect("coset action is a permutation")
    };
    let q2 = collect(0);
    let q0 = collect(1);
    let quotient = FinGroup::new(index, vec![q2.clone(), q0.clone()]);
    Ok((quotient, GenPair::new(q2, q0)))
}

// --- group descriptors ----------------------------------------------------

fn describe_group(degree: usize, gens: &[Perm], order: u64) -> GroupDescriptor {
    let reduced = reduce_generators(degree, gens);
    let is_abelian = reduced
        .iter()
        .enumerate()
        .all(|(i, a)| reduced.iter().skip(i + 1).all(|b| a.commutes_with(b)));
    if order > DESCRIPTOR_ENUM_BOUND {
        return GroupDescriptor { order, is_abelian, abelian_invariants: None, simple: None };
    }
    let elements = crate::regular::FinGroup::new(degree, reduced.clone()).elements();
    debug_assert_eq!(elements.len() as u64, order);
    let abelian_invariants =
        if is_abelian { Some(abelian_invariants(&elements)) } else { None };
    let simple = Some(is_simple(degree, &reduced, &elements, is_abelian));
    GroupDescriptor { order, is_abelian, abelian_invariants, simple }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primary (prime-power) cyclic factors of an abelian group, recovered
/// from the counts of solutions of x^(p^j) = 1.
fn abelian_invariants(elements: &[Perm]) -> Vec<u64> {
    let order = elements.len() as u64;
    let mut invariants = Vec::new();
    let mut rest = order;
    let mut p = 2u64;
    while rest > 1 {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            // d_j = #factors of order >= p^j, from f(j) = p^(sum min(lambda_i, j))
            let mut d: Vec<u32> = Vec::new();
            let mut prev_log = 0u32;
            loop {
                let pj = p.pow(d.len() as u32 + 1);
                let count =
                    elements.iter().filter(|e| pj.is_multiple_of(e.order())).count() as u64;
                let mut log = 0u32;
                let mut c = count;
                while c > 1 {
                    debug_assert!(c.is_multiple_of(p), "solution count must be a p-power");
                    c /= p;
                    log += 1;
                }
                let dj = log - prev_log;
                if dj == 0 {
                    break;
                }
                d.push(dj);
                prev_log = log;
            }
            for i in 1..=(*d.first().unwrap_or(&0)) {
                let lambda = d.iter().filter(|&&dj| dj >= i).count() as u32;
                invariants.push(p.pow(lambda));
            }
        }
        p += 1;
    }
    invariants.sort_unstable();
    invariants
}

/// A group is simple iff the normal closure of every conjugacy class is
/// the whole group (prime cyclic groups shortcut to true, the trivial
/// group to false).
fn is_simple(degree: usize, gens: &[Perm], elements: &[Perm], is_abelian: bool) -> bool {
    let order = elements.len() as u64;
    if order == 1 {
        return false;
    }
    if is_abelian {
        return is_prime(order);
    }
    let index: HashMap<&Perm, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let conjugators: Vec<Perm> = gens
        .iter()
        .flat_map(|g| [g.clone(), g.inverse()])
        .collect();
    let mut visited = vec![false; elements.len()];
    for start in 0..elements.len() {
        if visited[start] || elements[start].is_identity() {
            continue;
        }
        let mut class = vec![start];
        visited[start] = true;
        let mut head = 0;
        while head < class.len() {
            let e = elements[class[head]].clone();
            head += 1;
            for c in &conjugators {
                let conj = e.conjugated_by(c);
                let i = index[&conj];
                if !visited[i] {
                    visited[i] = true;
                    class.push(i);
                }
            }
        }
        let closure_gens: Vec<Perm> = class.iter().map(|&i| elements[i].clone()).collect();
        if StabChain::new(degree, &closure_gens).order() < order {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::regular::cayley;

    /// A5 pair of type (2,3,5): g0 = (1,2)(3,4), g2 = ((1,2)(3,4)*(1,3,5))^-1.
    fn triangle_pair() -> (FinGroup, GenPair) {
        let g0 = Perm::parse_cycles("(1,2)(3,4)", 5).unwrap();
        let g1 = Perm::parse_cycles("(1,3,5)", 5).unwrap();
        let g2 = g0.then(&g1).inverse();
        (FinGroup::alternating(5), GenPair::new(g2, g0))
    }

    fn word(s: &str) -> GenWord {
        GenWord::parse(s, false).unwrap()
    }

    #[test]
    fn triangle_pair_has_type_2_3_5() {
        let (group, pair) = triangle_pair();
        let map = cayley(&group, &pair).unwrap();
        assert_eq!(map.info().type_triple, (2, 3, 5));
    }

    #[test]
    fn schreier_count_for_trivial_group() {
        let group = FinGroup::trivial();
        let pair = GenPair::new(Perm::identity(1), Perm::identity(1));
        let gens = schreier_generators(&group, &pair).unwrap();
        assert_eq!(gens, vec![FWord::rho2(), FWord::rho0()]);
    }

    #[test]
    fn schreier_count_for_c2() {
        let group = FinGroup::cyclic(2);
        let swap = Perm::parse_cycles("(1,2)", 2).unwrap();
        let pair = GenPair::new(swap.clone(), swap);
        let gens = schreier_generators(&group, &pair).unwrap();
        assert_eq!(gens.len(), 3);
    }

    #[test]
    fn schreier_rank_matches_index() {
        for group in [FinGroup::cyclic(6), FinGroup::symmetric(3), FinGroup::alternating(4)] {
            let elements = group.elements();
            // find some generating pair
            let pair = elements
                .iter()
                .flat_map(|a| elements.iter().map(move |b| GenPair::new(a.clone(), b.clone())))
                .find(|p| crate::regular::generates(&group, p))
                .expect("2-generated group");
            let gens = schreier_generators(&group, &pair).unwrap();
            assert_eq!(gens.len() as u64, group.order() + 1);
        }
    }

    #[test]
    fn reflexible_map_has_trivial_chirality() {
        let (group, pair) = triangle_pair();
        assert!(cayley(&group, &pair).unwrap().is_reflexible());
        let report = chirality(&group, &pair, &word("-I"), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(report.period, 2);
        assert_eq!(report.upper_order, 1);
        assert_eq!(report.lower_order, 1);
        assert_eq!(report.full_lower_order, 60);
        assert!(report.upper_is_normal);
    }

    #[test]
    fn triality_on_the_triangle_map() {
        let (group, pair) = triangle_pair();
        let triality = word("Y Y");
        let report = chirality(&group, &pair, &triality, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(report.period, 3);
        assert_eq!(report.upper_order, 60);
        assert_eq!(report.lower_order, 3600);
        assert_eq!(report.full_lower_order, 216_000);
        assert!(report.upper_is_normal);
        assert!(!report.upper.is_abelian);
        assert_eq!(report.upper.simple, Some(true));
    }

    #[test]
    fn dualities_share_chirality_groups() {
        let (group, pair) = triangle_pair();
        let plain = chirality(&group, &pair, &word("T"), DEFAULT_MAX_ORDER).unwrap();
        let reversing = chirality(&group, &pair, &word("-I T"), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(plain.upper_order, reversing.upper_order);
        assert_eq!(plain.lower_order, reversing.lower_order);
    }

    #[test]
    fn non_periodic_word_is_rejected() {
        let (group, pair) = triangle_pair();
        let infinite = word("X Y");
        assert!(matches!(
            chirality(&group, &pair, &infinite, DEFAULT_MAX_ORDER),
            Err(ChiralityError::NonPeriodic(_))
        ));
    }

    #[test]
    fn invariant_quotient_cases() {
        let (group, pair) = triangle_pair();
        // reflexible input: the quotient is the input itself
        let (q, qpair) = invariant_quotient(&group, &pair, &word("-I"), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(q.order(), 60);
        assert_eq!(qpair, pair);
        // triality: upper group is everything, quotient trivial
        let (q, _) = invariant_quotient(&group, &pair, &word("Y Y"), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(q.order(), 1);
        // identity word: the input itself
        let (q, qpair) =
            invariant_quotient(&group, &pair, &GenWord::identity(false), DEFAULT_MAX_ORDER)
                .unwrap();
        assert_eq!(q.order(), 60);
        assert_eq!(qpair, pair);
    }

    #[test]
    fn cover_for_reflexible_input_is_the_input() {
        let (group, pair) = triangle_pair();
        let (cover, cover_pair) = invariant_cover(&group, &pair, &word("-I")).unwrap();
        assert_eq!(cover.order(), 60);
        let original = cayley(&group, &pair).unwrap();
        let covered = cayley(&cover, &cover_pair).unwrap();
        assert!(original.is_isomorphic(&covered));
    }

    #[test]
    fn abelian_invariant_computation() {
        // C6 = C2 x C3 in primary form
        let c6 = FinGroup::cyclic(6);
        assert_eq!(abelian_invariants(&c6.elements()), vec![2, 3]);
        let klein = FinGroup::new(
            4,
            vec![
                Perm::parse_cycles("(1,2)(3,4)", 4).unwrap(),
                Perm::parse_cycles("(1,3)(2,4)", 4).unwrap(),
            ],
        );
        assert_eq!(abelian_invariants(&klein.elements()), vec![2, 2]);
        let c12 = FinGroup::cyclic(12);
        assert_eq!(abelian_invariants(&c12.elements()), vec![3, 4]);
    }

    #[test]
    fn simplicity_flags() {
        let a5 = FinGroup::alternating(5);
        assert!(is_simple(5, a5.generators(), &a5.elements(), false));
        let s4 = FinGroup::symmetric(4);
        assert!(!is_simple(4, s4.generators(), &s4.elements(), false));
        let c5 = FinGroup::cyclic(5);
        assert!(is_simple(5, c5.generators(), &c5.elements(), true));
        let c6 = FinGroup::cyclic(6);
        assert!(!is_simple(6, c6.generators(), &c6.elements(), true));
    }

    #[test]
    fn equivalent_pairs_give_identical_reports() {
        let (group, pair) = triangle_pair();
        let c = Perm::parse_cycles("(1,4,2)", 5).unwrap();
        let moved = GenPair::new(pair.g2.conjugated_by(&c), pair.g0.conjugated_by(&c));
        for w in ["-I", "T", "Y Y"] {
            let a = chirality(&group, &pair, &word(w), DEFAULT_MAX_ORDER).unwrap();
            let b = chirality(&group, &moved, &word(w), DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(a.upper_order, b.upper_order, "{w}");
            assert_eq!(a.lower_order, b.lower_order, "{w}");
            assert_eq!(a.full_lower_order, b.full_lower_order, "{w}");
        }
    }

    #[test]
    fn cover_projects_onto_the_input() {
        // block 0 of the cover pair is the input pair, so quotienting the
        // cover by the complement blocks reproduces the input map
        let (group, pair) = triangle_pair();
        let (cover, cover_pair) = invariant_cover(&group, &pair, &word("Y Y")).unwrap();
        assert_eq!(cover.degree(), 3 * group.degree());
        let restrict = |p: &Perm| {
            Perm::from_images((0..group.degree()).map(|x| p.apply(x)).collect()).unwrap()
        };
        assert_eq!(restrict(&cover_pair.g2), pair.g2);
        assert_eq!(restrict(&cover_pair.g0), pair.g0);
    }

    #[test]
    fn full_lower_order_factors_through_group_order() {
        let (group, pair) = triangle_pair();
        for w in ["T", "-I", "X", "X T", "Y Y"] {
            let report = chirality(&group, &pair, &word(w), DEFAULT_MAX_ORDER).unwrap();
            assert_eq!(report.full_lower_order, group.order() * report.lower_order, "{w}");
            assert_eq!(group.order() % report.upper_order, 0, "{w}");
            if report.period == 2 {
                assert_eq!(report.upper_order, report.lower_order, "{w}");
            }
        }
    }

    #[test]
    fn identity_word_report_is_trivial() {
        let (group, pair) = triangle_pair();
        let report =
            chirality(&group, &pair, &GenWord::identity(false), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(report.period, 1);
        assert_eq!(report.upper_order, 1);
        assert_eq!(report.lower_order, 1);
        assert_eq!(report.full_lower_order, 60);
        assert!(report.upper_is_normal);
        assert_eq!(report.upper.abelian_invariants.as_deref(), Some(&[][..]));
    }
}
