//! The fusion-product grading of (C²)^⊗N by exact elimination.
//!
//! Builds the degree filtration spanned by raising-current monomials at
//! two different sets of evaluation points, prints the graded dimension
//! table, extracts the multiplicity q-characters, and compares them with
//! the major-index distributions of the matching two-row shapes.
//!
//! ```bash
//! cargo run --example fusion_grading
//! ```

use fusion_tableaux::fusion::{
    build_filtration, multiplicity_qcharacters_from_table, EvaluationParams,
};
use fusion_tableaux::partition::Partition;
use fusion_tableaux::qseries::maj_gf;

fn main() {
    let n_total = 6u32;
    let n = n_total / 2;

    println!("=== Fusion filtration of (C²)^⊗{n_total} ===\n");
    let consecutive = build_filtration(n_total, &EvaluationParams::consecutive(n_total as usize))
        .expect("distinct points");
    let geometric = build_filtration(n_total, &EvaluationParams::geometric(n_total as usize))
        .expect("distinct points");
    assert_eq!(consecutive, geometric);
    println!(
        "z = (1,…,{n_total}) and z = (1,3,7,…) give identical tables; total dimension {}\n",
        consecutive.total_dimension()
    );

    print!("{}", consecutive.to_tsv());

    println!("\n=== Multiplicity q-characters vs major-index distributions ===\n");
    let mults = multiplicity_qcharacters_from_table(&consecutive).unwrap();
    for k in (0..=n).rev() {
        let shape = Partition::two_row(n + k, n - k).unwrap();
        let fusion = &mults[&k];
        let maj = maj_gf(&shape).unwrap();
        assert_eq!(fusion, &maj);
        println!("k = {k}  shape {shape}:  ch_q M_{k} = {fusion}");
    }
    println!("\nfusion grading = maj grading, shape by shape");
}
