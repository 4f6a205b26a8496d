//! Glue K = U^12 + Lambda4 and E6(-1) along their order-3 discriminant
//! groups to obtain an even unimodular lattice of signature (13,21), then
//! recover E6(-1) as the orthocomplement of the embedded K.
//!
//! Run with `cargo run --example glue_pipeline`.

use num::{One, Zero};
use theta_e6::isometry::{glue_by_diagonal_class, is_isometric, orthocomplement};
use theta_e6::matrix::Rat;
use theta_e6::Lattice;

fn main() {
    let k = Lattice::named("K").expect("K");
    let e6_neg = Lattice::named("E6_neg").expect("E6(-1)");

    let (over, class) = glue_by_diagonal_class(&k, &e6_neg).expect("glue");
    let glued = &over.lattice;
    let (p, q) = glued.signature();
    println!("glued lattice: rank {}, signature ({},{})", glued.rank(), p, q);
    println!("even: {}, unimodular: {}", glued.is_even(), glued.is_unimodular());
    println!("glue class (base coordinates): {} nonzero entries",
        class.iter().filter(|c| !c.is_zero()).count());

    // Coordinates of the K unit vectors inside the overlattice give the
    // embedded copy of K; its orthocomplement is the glued E6(-1).
    let ambient_rank = k.rank() + e6_neg.rank();
    let mut k_rows = Vec::new();
    for i in 0..k.rank() {
        let mut e = vec![Rat::zero(); ambient_rank];
        e[i] = Rat::one();
        k_rows.push(over.coords_of(&e).expect("K embeds in the overlattice"));
    }
    let comp = orthocomplement(glued, &k_rows).expect("orthocomplement");
    println!(
        "orthocomplement of K: rank {}, disc {}, even: {}",
        comp.lattice.rank(),
        comp.lattice.discriminant(),
        comp.lattice.is_even()
    );

    let witness = is_isometric(&comp.lattice, &e6_neg).expect("isometry search");
    println!("isometric to E6(-1): {}", witness.is_some());
}
