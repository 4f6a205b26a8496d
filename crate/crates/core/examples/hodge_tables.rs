//! Hodge-number arithmetic for the intersection surface Y and its quotient
//! Y+: Euler characteristics, the Hodge diamonds, and the signature table of
//! the relevant cohomology pieces.
//!
//! Run with `cargo run --example hodge_tables`.

use theta_e6::hodge::{
    difference_degree, euler_characteristic, hodge_diamond, holomorphic_euler, signature_table,
    Surface,
};

fn main() {
    println!("topological Euler characteristic e(Y) at g = 4: {}", euler_characteristic(4));

    for surface in [Surface::Y, Surface::Yplus] {
        let d = hodge_diamond(surface);
        println!(
            "\n{surface:?}: chi(O) = {}, b1 = {}, b2 = {}, e = {}",
            holomorphic_euler(surface),
            d.b1(),
            d.b2(),
            d.euler()
        );
        println!("        {}", d.h00);
        println!("      {}   {}", d.h10, d.h01);
        println!("    {}   {}   {}", d.h20, d.h11, d.h02);
    }

    println!("\nsignature table:");
    let table = signature_table();
    for (name, (plus, minus)) in table.rows() {
        println!("  {:7} ({:2}, {:2})", name, plus, minus);
    }

    println!("\ndegree of the difference morphism at n = 2: {}", difference_degree(2));
}
