//! Canonical words: every unimodular integer 2x2 matrix is a unique
//! product +-w(X,Y) T^eta with w a reduced word alternating between X and
//! Y^{+-1}. Row reduction produces the word; cyclic reduction and the
//! palindrome criterion read off order and conjugacy class from it.
//!
//! Run with: cargo run --example canonical_words

use hyperops::genwords::{canonical_form, eval_word, word_class, GenWord};
use hyperops::gl2::{Group, Mat2};

fn main() {
    let a = Mat2::new(-2, -3, 1, 2);
    let word = canonical_form(&a).unwrap();
    println!("matrix [{a}]");
    println!("  canonical word : {word}");
    println!("  evaluates back : [{}]", eval_word(&word).unwrap());
    println!("  class by word  : {}", word_class(&word, Group::Gl));
    println!();

    println!("word normalization (same grammar as the CLI):");
    for input in ["Y' X' Y X' Y' X' X T", "Y Y", "X X", "T Y T", "X Y Y' X X X"] {
        let w = GenWord::parse(input, false).unwrap();
        println!("  {input:<24} -> {}", if w.is_identity() { "(identity)".to_string() } else { w.to_string() });
    }
    println!();

    println!("order and conjugacy class from the word alone:");
    for input in ["Y T", "Y' X Y X Y' T", "X T", "X Y", "Y Y", "X Y' X"] {
        let w = GenWord::parse(input, false).unwrap();
        let label = word_class(&w, Group::Gl);
        println!("  {:<16} class {label:<9} order {}", w.to_string(), label.order);
    }
}
