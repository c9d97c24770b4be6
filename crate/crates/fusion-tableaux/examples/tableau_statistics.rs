//! Two-row standard Young tableaux and their statistics.
//!
//! Enumerates the tableaux of each shape of a given size, prints descent
//! sets, major index, and charge, and checks the complement identity
//! maj + charge = N(N-1)/2 together with the Schur-Weyl dimension count
//! Σ (2k+1)·f^{(n+k,n-k)} = 2^N.
//!
//! ```bash
//! cargo run --example tableau_statistics
//! ```

use fusion_tableaux::tableaux::TwoRowSYT;

fn main() {
    let n_total = 6u32;
    let target = n_total as u64 * (n_total as u64 - 1) / 2;
    println!("=== Two-row standard tableaux of length {n_total} ===\n");

    let mut weighted_total = 0u64;
    for k in (0..=n_total / 2).rev() {
        let tableaux = TwoRowSYT::enumerate(n_total, k).unwrap();
        let shape = tableaux[0].shape();
        println!(
            "shape {shape}  (k = {k}): {} tableaux",
            tableaux.len()
        );
        for t in &tableaux {
            let des = t.descent_set();
            println!(
                "  {t}  des = {des:?}  maj = {}  charge = {}",
                t.maj(),
                t.charge()
            );
            assert_eq!(t.maj() + t.charge(), target);
        }
        weighted_total += (2 * k as u64 + 1) * tableaux.len() as u64;
        println!();
    }

    println!("every tableau satisfies maj + charge = {target}");
    println!(
        "Σ (2k+1)·f^(shape) = {weighted_total} = 2^{n_total} = {}",
        1u64 << n_total
    );
}
