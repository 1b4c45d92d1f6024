//! Operations on an oriented hypermap: the icosahedron on five darts.
//!
//! An operation word acts by replacing the generator images with the
//! images of their preimages under the word's automorphism. Orientation
//! reversal and duality preserve type and genus; the twisting operations
//! can change both.
//!
//! Run with: cargo run --example icosahedron_operations

use hyperops::genwords::GenWord;
use hyperops::hypermap::OMap;
use hyperops::perm::Perm;

fn show(tag: &str, map: &OMap) {
    let info = map.info();
    let (a, b, c) = info.type_triple;
    println!(
        "  {tag:<10} rho0 = {:<12} rho1 = {:<12} rho2 = {:<10} type ({a},{b},{c}), genus {}",
        map.rho0().to_string(),
        map.rho1().to_string(),
        map.rho2().to_string(),
        info.genus
    );
}

fn main() {
    let map = OMap::new(
        Perm::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        Perm::parse_cycles("(2,5,4)", 5).unwrap(),
    )
    .unwrap();
    println!("the icosahedron as a 5-dart oriented hypermap:");
    show("input", &map);
    println!();

    println!("images under the named periodic operations:");
    for word in ["-I", "T", "X", "X T", "Y Y"] {
        let w = GenWord::parse(word, false).unwrap();
        show(word, &map.apply_operation(&w));
    }
    println!();

    println!("invariance checks:");
    println!("  reflexible: {}", map.is_reflexible());
    let twisted = map.apply_operation(&GenWord::parse("X T", false).unwrap());
    println!("  isomorphic to its twist: {}", map.is_isomorphic(&twisted));
    let dual = map.apply_operation(&GenWord::parse("T", false).unwrap());
    let double_dual = dual.apply_operation(&GenWord::parse("T", false).unwrap());
    println!("  double dual isomorphic to input: {}", map.is_isomorphic(&double_dual));
}
