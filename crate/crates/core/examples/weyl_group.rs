//! Generate the Weyl group W(E6) from simple reflections, compute its
//! rotation subgroup and full automorphism group, and report the orbit
//! structure on root lines and on the short dual vectors.
//!
//! Run with `cargo run --example weyl_group`.

use theta_e6::matrix::rat;
use theta_e6::weyl::{
    character_irreducibility, discriminant_action, dual_vectors_with_norm, flat_neg_identity,
    generate, line_orbits, roots, sign_kernel, simple_reflections,
};
use theta_e6::Lattice;

fn main() {
    let e6 = Lattice::named("E6").expect("E6");

    let root_vectors = roots(&e6).expect("roots");
    println!("E6 has {} roots", root_vectors.len());

    let gens = simple_reflections(&e6).expect("simple reflections");
    let w = generate(&e6, &gens, 100_000).expect("W(E6)");
    println!("|W(E6)| = {}", w.order());

    let rot = sign_kernel(&w);
    println!("|W(E6)+| (determinant-1 subgroup) = {}", rot.order());

    // Adjoining -1 doubles the group: the full automorphism group of E6.
    let mut aut_gens = gens.clone();
    aut_gens.push(flat_neg_identity(6));
    let aut = generate(&e6, &aut_gens, 200_000).expect("Aut(E6)");
    println!("|Aut(E6)| = {}", aut.order());

    let action = discriminant_action(&w, &e6).expect("discriminant action");
    println!(
        "W(E6) acts trivially on the order-{} discriminant group: {}",
        action.modulus,
        action.is_trivial()
    );

    let orbits = line_orbits(&w, &root_vectors).expect("root line orbits");
    for (size, stab) in &orbits {
        println!("root-line orbit: {size} lines, stabilizer order {stab}");
    }

    let duals = dual_vectors_with_norm(&e6, &rat(4, 3)).expect("dual vectors");
    println!("{} dual vectors of norm 4/3", duals.len());
    let dual_orbits = line_orbits(&w, &duals).expect("dual line orbits");
    for (size, stab) in &dual_orbits {
        println!("dual-line orbit: {size} lines, stabilizer order {stab}");
    }

    println!(
        "6-dimensional representation of W(E6) is irreducible: {}",
        character_irreducibility(&w)
    );
}
