//! Permutation groups of difference morphisms: the induced actions on
//! k-subsets, their orbital ranks, and the exhaustive overgroup scan
//! certifying that every 2-transitive overgroup contains the alternating
//! group.
//!
//! Run with `cargo run --example galois_scan`.

use theta_e6::perm::{contains_alternating, overgroup_scan, rank_orbitals, subset_action};

fn main() {
    // S4 acting on the 6 two-element subsets of {1..4}: the monodromy image
    // of the degree-6 difference morphism.
    let g2 = subset_action(2).expect("subset action");
    println!("degree {}  order {}", g2.degree(), g2.order());
    println!("transitive: {}", g2.is_transitive());
    println!("orbital rank: {}", rank_orbitals(&g2).expect("rank"));

    // Enumerate every subgroup of S6 containing this image by iterated
    // adjunction and test the 2-transitive ones.
    let scan = overgroup_scan(&g2).expect("overgroup scan");
    println!("\n{} subgroups of S6 contain the image:", scan.overgroups.len());
    for record in &scan.overgroups {
        println!(
            "  order {:>4}  rank {:2}  2-transitive: {:5}  contains alternating: {}",
            record.order, record.rank, record.two_transitive, record.contains_alternating
        );
    }
    println!(
        "every 2-transitive overgroup contains the alternating group: {}",
        scan.all_two_transitive_contain_alternating
    );

    // The degree-20 action of S6 on 3-subsets, too large for a full scan but
    // cheap to analyse directly.
    let g3 = subset_action(3).expect("subset action");
    println!(
        "\nS6 on 3-subsets: degree {}, order {}, rank {}, contains A20: {}",
        g3.degree(),
        g3.order(),
        rank_orbitals(&g3).expect("rank"),
        contains_alternating(&g3)
    );
}
