//! Exterior-algebra arithmetic on H^1 of an abelian fourfold: the theta
//! class, its top self-intersection, the Gram matrix of the natural degree-2
//! basis, and the intersection numbers of the Prym curve class.
//!
//! Run with `cargo run --example exterior_gram`.

use theta_e6::exterior::{
    deg_top, gram_lx, lx_basis_labels, prym_class_report, theta_class, verify_k2_decomposition,
};
use theta_e6::lattice::signature_of;
use theta_e6::matrix::to_rat;

fn main() {
    let g = 4;
    let theta = theta_class(g);
    let theta4 = theta.wedge_pow(4).expect("theta^4");
    println!("deg(theta^4) = {}", deg_top(&theta4, g).expect("top degree"));

    let labels = lx_basis_labels();
    let gram = gram_lx();
    println!("degree-2 basis has {} elements: {} ... {}", labels.len(), labels[0], labels.last().unwrap());
    let (p, q) = signature_of(&to_rat(&gram));
    println!("Gram signature: ({p},{q})");

    let (ok, perm) = verify_k2_decomposition();
    println!("basis matches U^12 + Lambda4 block Gram (up to signed permutation): {ok}");
    println!("signed permutation touches {} basis vectors", perm.len());

    let report = prym_class_report();
    println!("deg(alpha^2)      = {}", report.deg_alpha_sq);
    println!("deg(lambda . K_Y) = {}", report.deg_lambda_ky);
    println!("deg(lambda^2)     = {}", report.deg_lambda_sq);
    println!("deg(beta^2)       = {}", report.deg_beta_sq);
    println!("(e^2)/2           = {}", report.half_norm_e);
}
