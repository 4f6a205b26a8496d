//! Group cohomology of an involution acting on integral lattices: compute
//! H^p(Z/2, M) for the three basic module types, print E2-tableau rows, and
//! assemble H^2 of a quotient surface from its graded pieces.
//!
//! Run with `cargo run --example cohomology_tableau`.

use theta_e6::cohomology::{assemble_h2_quotient, e2_tableau, InvolutionModule};

fn main() {
    // The three building blocks: sigma = -1 on Z^8, sigma = +1 on Z, and the
    // rank-2 swap module (which is cohomologically trivial in positive degree).
    let minus8 = InvolutionModule::minus_one(8);
    let plus1 = InvolutionModule::plus_one(1);
    let swap = InvolutionModule::swap();

    let rows = e2_tableau(
        &[(1, minus8.clone()), (0, plus1.clone()), (0, swap)],
        4,
    );
    for (q, row) in &rows {
        let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
        println!("q = {q}:  {}", cells.join("  |  "));
    }

    // The kernel of the edge surjection onto the invariant free part is an
    // iterated extension of two 2-torsion pieces, hence elementary abelian.
    let h11 = minus8.h_p(1);
    let h20 = plus1.h_p(2);
    println!("\nH^1(Z/2, H^1) = {h11}");
    println!("H^2(Z/2, H^0) = {h20}");

    let assembled = assemble_h2_quotient(34, &[h11, h20]).expect("assembled H^2");
    println!("assembled H^2 of the quotient: {assembled}");
}
