//! Build the named lattices and print their basic invariants: rank,
//! signature, discriminant, parity and the discriminant group.
//!
//! Run with `cargo run --example lattice_invariants`.

use theta_e6::Lattice;

fn main() {
    for name in ["U", "Lambda4", "E6", "E8", "E6_neg", "E8_neg", "K", "L"] {
        let l = Lattice::named(name).expect("named lattice");
        let (p, q) = l.signature();
        println!(
            "{:8} rank {:2}  signature ({:2},{:2})  disc {:>12}  even: {:5}  unimodular: {:5}  disc group order {}",
            name,
            l.rank(),
            p,
            q,
            l.discriminant(),
            l.is_even(),
            l.is_unimodular(),
            l.discriminant_group().order(),
        );
    }

    // Direct sums and rescalings stay exact: E8(-1) has the negated Gram.
    let e8 = Lattice::named("E8").unwrap();
    let e8_neg = e8.rescale(&theta_e6::matrix::int(-1)).unwrap();
    assert_eq!(e8_neg.gram(), Lattice::named("E8_neg").unwrap().gram());

    let u = Lattice::named("U").unwrap();
    let sum = u.direct_sum(&e8_neg);
    let (p, q) = sum.signature();
    println!("\nU + E8(-1): rank {}, signature ({},{})", sum.rank(), p, q);
}
