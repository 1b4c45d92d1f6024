//! Classify periodic elements of GL2(Z) and PGL2(Z).
//!
//! Every element of finite order is conjugate to one of a short list of
//! representatives, recognizable from determinant and trace alone; the one
//! ambiguous case (determinant -1, trace 0) is settled by reducing the
//! off-diagonal entries mod 2.
//!
//! Run with: cargo run --example classify_matrices

use hyperops::gl2::{self, classify_gl, classify_pgl, Mat2};

fn main() {
    println!("representatives of the periodic conjugacy classes:");
    let reps = [
        ("I", gl2::I),
        ("-I", gl2::NEG_I),
        ("T", gl2::T),
        ("XT", gl2::XT),
        ("Y^2", gl2::Y2),
        ("X", gl2::X),
        ("Y", gl2::Y),
    ];
    for (name, m) in reps {
        let lin = classify_gl(&m).unwrap();
        let proj = classify_pgl(&m).unwrap();
        println!(
            "  {name:<4} = [{m}]  det {:+} trace {:+}  ->  GL class {lin} (order {}), PGL class {proj} (order {})",
            m.det().unwrap(),
            m.trace().unwrap(),
            lin.order,
            proj.order
        );
    }

    println!();
    println!("determinant -1, trace 0 splits by entries mod 2:");
    for m in [Mat2::new(-2, -3, 1, 2), Mat2::new(3, 2, -4, -3), Mat2::new(0, 1, 1, 0)] {
        let label = classify_gl(&m).unwrap();
        println!("  [{m}] -> {label} (b, c even: {})", m.b % 2 == 0 && m.c % 2 == 0);
    }

    println!();
    println!("everything else has infinite order:");
    for m in [Mat2::new(1, 1, 0, 1), Mat2::new(2, 1, 1, 1)] {
        println!("  [{m}] -> {}", classify_gl(&m).unwrap());
    }
}
