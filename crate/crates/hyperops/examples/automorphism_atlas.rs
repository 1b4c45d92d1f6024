//! The automorphism atlas behind the operations.
//!
//! Operation words act through named automorphisms of the free group on
//! rho2, rho0; abelianization recovers the 2x2 matrix, and the atlas
//! members extend to the reflection group on r0, r1, r2. Restricting the
//! plain duality that swaps r0 and r2 gives the orientation-reversing
//! duality downstairs, not the plain one.
//!
//! Run with: cargo run --example automorphism_atlas

use hyperops::freegroup::{
    compose, endo_from_opword, inner, inverse_endo_from_opword, DEndo, DWord, Endo, FWord,
};
use hyperops::genwords::GenWord;

fn main() {
    println!("the atlas and its abelianized matrices:");
    let atlas = [
        ("alpha_X", Endo::alpha_x()),
        ("alpha_Y", Endo::alpha_y()),
        ("alpha_T", Endo::alpha_t()),
        ("alpha_XT", Endo::alpha_xt()),
        ("alpha_Y2", Endo::alpha_y2()),
        ("alpha_r", Endo::alpha_r()),
    ];
    for (name, e) in &atlas {
        println!("  {name:<9} {:<28} matrix [{}]", e.to_string(), e.abelianize());
    }
    println!();

    println!("composition follows word order:");
    let xt = compose(&Endo::alpha_x(), &Endo::alpha_t());
    println!("  alpha_X then alpha_T = {xt}  (the twist alpha_XT: {})", xt == Endo::alpha_xt());
    let squared = compose(&Endo::alpha_x(), &Endo::alpha_x());
    println!("  alpha_X twice        = {squared}  (orientation reversal: {})", squared == Endo::alpha_r());
    println!();

    println!("any operation word yields an automorphism acting as its matrix:");
    let word = GenWord::parse("Y' X T", false).unwrap();
    let e = endo_from_opword(&word);
    println!("  word {word}: {e}");
    println!("  abelianization [{}] matches eval: {}", e.abelianize(), {
        e.abelianize() == hyperops::genwords::eval_word(&word).unwrap()
    });
    let roundtrip = compose(&e, &inverse_endo_from_opword(&word));
    println!("  composed with its inverse: identity {}", roundtrip == Endo::identity());
    println!();

    println!("inner automorphisms act trivially on hypermaps:");
    let conj = inner(&FWord::parse("a b'").unwrap());
    println!("  conjugation by a b': {} -> matrix [{}]", conj, conj.abelianize());
    println!();

    println!("restriction from the reflection group:");
    for (name, d) in [
        ("alpha_t  (duality by conjugated swap)", DEndo::alpha_t()),
        ("alpha_02 (plain swap of r0 and r2)   ", DEndo::alpha_02()),
        ("conjugation by r1                    ", hyperops::freegroup::inner_delta(&DWord::gen(1))),
    ] {
        let restricted = d.restrict().unwrap();
        println!("  {name} restricts to {restricted}  [{}]", restricted.abelianize());
    }
}
