//! Unoriented hypermaps: the flag double cover, duality, the six
//! associates, and orientability.
//!
//! The lowercase operation words act on flags through the reflection
//! group; the duality t transposes hypervertices and hyperfaces, and its
//! restriction to oriented hypermaps reverses orientation on top of the
//! classical duality.
//!
//! Run with: cargo run --example unoriented_duality

use hyperops::genwords::GenWord;
use hyperops::hypermap::{OMap, UMap};
use hyperops::perm::Perm;

fn main() {
    let map = OMap::new(
        Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        Perm::parse_cycles("(2,5,4)", 5).unwrap(),
    )
    .unwrap();
    let flags = map.underlying_flags();
    let info = flags.info();
    println!("flag double cover of the 5-dart icosahedron:");
    println!(
        "  {} flags, {} hypervertices, {} hyperedges, {} hyperfaces, euler {}, orientable {}",
        flags.flags(),
        info.hypervertices,
        info.hyperedges,
        info.hyperfaces,
        info.euler,
        info.orientable
    );

    let dual = flags.apply_operation(&GenWord::parse("t", true).unwrap());
    let dual_info = dual.info();
    println!(
        "  after duality t: {} hypervertices, {} hyperfaces (transposed)",
        dual_info.hypervertices, dual_info.hyperfaces
    );

    // duality upstairs equals orientation-reversing duality downstairs
    let downstairs = map
        .apply_operation(&GenWord::parse("-I T", false).unwrap())
        .underlying_flags();
    println!("  matches the -I T image downstairs: {}", dual.is_isomorphic(&downstairs));
    println!();

    println!("the six associates permute the type components:");
    for assoc in flags.associates() {
        let (a, b, c) = assoc.info().type_triple;
        println!("  type ({a},{b},{c})");
    }
    println!();

    println!("orientability from the even subgroup:");
    let projective_plane = UMap::new(
        Perm::parse_cycles("(1,2)(3,4)", 4).unwrap(),
        Perm::parse_cycles("(1,3)(2,4)", 4).unwrap(),
        Perm::parse_cycles("(1,4)(2,3)", 4).unwrap(),
    )
    .unwrap();
    let info = projective_plane.info();
    println!(
        "  4-flag quotient map: euler {}, orientable {} (one crosscap)",
        info.euler, info.orientable
    );
    let lifted = flags.orientation_lift().expect("the flag cover is orientable");
    println!(
        "  the flag cover lifts back to {} darts, isomorphic to the input or its mirror: {}",
        lifted.darts(),
        lifted.is_isomorphic(&map)
            || lifted.is_isomorphic(&map.apply_operation(&GenWord::parse("-I", false).unwrap()))
    );
}
