//! Generalized chirality groups under an order-3 operation.
//!
//! For the type-(2,3,5) regular hypermap over the alternating group on
//! five points, the triality images are mutually non-isomorphic, the upper
//! chirality group is the whole simple group, and the lower group is its
//! square; on the two-image cover the orders reverse.
//!
//! Run with: cargo run --release --example chirality_triality

use hyperops::chirality::{chirality, cover_at_depth, invariant_cover, DEFAULT_MAX_ORDER};
use hyperops::genwords::GenWord;
use hyperops::perm::Perm;
use hyperops::regular::{cayley, FinGroup, GenPair};

fn main() {
    let g0 = Perm::parse_cycles("(1,2)(3,4)", 5).unwrap();
    let g1 = Perm::parse_cycles("(1,3,5)", 5).unwrap();
    let g2 = g0.then(&g1).inverse();
    let group = FinGroup::alternating(5);
    let pair = GenPair::new(g2, g0);
    let map = cayley(&group, &pair).unwrap();
    let (a, b, c) = map.info().type_triple;
    println!("input: the ({a},{b},{c}) regular map over the simple group of order {}", group.order());
    println!("reflexible: {}", map.is_reflexible());
    println!();

    let reversal = GenWord::parse("-I", false).unwrap();
    let report = chirality(&group, &pair, &reversal, DEFAULT_MAX_ORDER).unwrap();
    println!("under orientation reversal (order {}):", report.period);
    println!("  upper {} / lower {} -> the map is its own mirror", report.upper_order, report.lower_order);
    println!();

    let triality = GenWord::parse("Y Y", false).unwrap();
    let report = chirality(&group, &pair, &triality, DEFAULT_MAX_ORDER).unwrap();
    println!("under the triality {} (order {}):", report.word, report.period);
    println!("  upper group order  {}", report.upper_order);
    println!("  lower group order  {}", report.lower_order);
    println!("  full cover order   {}", report.full_lower_order);
    println!(
        "  upper group: normal {}, abelian {}, simple {:?}",
        report.upper_is_normal, report.upper.is_abelian, report.upper.simple
    );
    println!();

    let (cover, _) = invariant_cover(&group, &pair, &triality).unwrap();
    println!("smallest triality-invariant cover: order {}", cover.order());

    let (k_group, k_pair) = cover_at_depth(&group, &pair, &triality, 2).unwrap();
    let reversed = chirality(&k_group, &k_pair, &triality, DEFAULT_MAX_ORDER).unwrap();
    println!(
        "on the two-image cover of order {}: upper {} / lower {} (reversed)",
        k_group.order(),
        reversed.upper_order,
        reversed.lower_order
    );
}
