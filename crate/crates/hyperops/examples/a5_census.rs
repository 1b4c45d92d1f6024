//! Census of orientably regular hypermaps over the alternating group on
//! five points: 19 equivalence classes of generating pairs, falling into
//! two orbits of sizes 9 and 10 under the operations X, Y, T.
//!
//! Run with: cargo run --release --example a5_census

use hyperops::genwords::GenWord;
use hyperops::regular::{enumerate_classes, operation_orbits, FinGroup};

fn main() {
    let group = FinGroup::alternating(5);
    let classes = enumerate_classes(&group, 120, 1).expect("order 60 is within the bound");
    println!("{} classes of generating pairs, each of size {}:", classes.len(), classes[0].class_size);
    println!("{:<4} {:<10} {:<6} representative (g2; g0)", "id", "type", "genus");
    for (i, class) in classes.iter().enumerate() {
        let (a, b, c) = class.type_triple;
        println!(
            "{:<4} ({a},{b},{c})    {:<6} {}",
            i + 1,
            class.genus,
            class.representative
        );
    }
    println!();

    let ops: Vec<GenWord> =
        ["X", "Y", "T"].iter().map(|w| GenWord::parse(w, false).unwrap()).collect();
    let orbits = operation_orbits(&group, &classes, &ops).unwrap();
    println!("orbits under the operations X, Y, T:");
    for (i, block) in orbits.iter().enumerate() {
        let ids: Vec<String> = block.iter().map(|c| (c + 1).to_string()).collect();
        println!("  orbit {} (size {:>2}): classes {}", i + 1, block.len(), ids.join(", "));
    }
}
