//! Littlewood-Richardson arithmetic: products of Schur functions, wedge and
//! symmetric squares, irreducible dimensions by the hook-content formula,
//! and the convolution labels of the fundamental-sheaf decomposition.
//!
//! Run with `cargo run --example schur_products`.

use num::One;
use theta_e6::schur::{
    convolution_labels, dim_irrep, lr_product, wedge_or_sym_square, Partition, SchurVector,
    SquareKind,
};

fn format_schur(v: &SchurVector) -> String {
    let terms: Vec<String> = v
        .coeffs
        .iter()
        .map(|(p, c)| {
            if c.is_one() {
                format!("s{p}")
            } else {
                format!("{c}·s{p}")
            }
        })
        .collect();
    terms.join(" + ")
}

fn main() {
    let col3 = Partition::new(vec![1, 1, 1]).unwrap();

    // s(1,1,1) * s(1,1,1) by the Littlewood-Richardson rule.
    let square = lr_product(&col3, &col3, 6);
    println!("s(1,1,1)^2 = {}", format_schur(&square));

    // Wedge and symmetric squares, and their dimensions over GL(6).
    let f = SchurVector::single(col3.clone(), 6).unwrap();
    let wedge = wedge_or_sym_square(&f, SquareKind::Wedge).unwrap();
    let sym = wedge_or_sym_square(&f, SquareKind::Sym).unwrap();
    println!("wedge^2 s(1,1,1) = {}", format_schur(&wedge));
    println!("sym^2   s(1,1,1) = {}", format_schur(&sym));
    println!(
        "dims over GL(6): wedge {} + sym {} = {} = dim(s(1,1,1))^2",
        wedge.dimension(6).unwrap(),
        sym.dimension(6).unwrap(),
        square.dimension(6).unwrap()
    );

    let mu = Partition::new(vec![2, 2, 1, 1]).unwrap();
    println!(
        "hook-content dimension of {mu} over GL(6): {}",
        dim_irrep(&mu, 6).unwrap()
    );

    // Labels appearing in the convolution of fundamental sheaves at g = 4.
    for (m, n) in [(3, 3), (4, 2)] {
        let labels = convolution_labels(m, n, 4).unwrap();
        let names: Vec<String> = labels.labels.iter().map(|p| p.to_string()).collect();
        println!(
            "convolution ({m},{n}): {}{}",
            names.join(" + "),
            if labels.negligible { "  (+ negligible summand)" } else { "" }
        );
    }
}
