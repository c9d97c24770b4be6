//! Three routes to the same q-binomial coefficient.
//!
//! The stable-major generating function over level-K tableaux, the
//! Gaussian binomial [2K choose K]_q from the q-Pascal recurrence, and the
//! size generating function of partitions in the K×K box are computed
//! independently and compared, and the low coefficients are shown
//! stabilizing to the partition numbers p(d).
//!
//! ```bash
//! cargo run --example qbinomial_level
//! ```

use num_bigint::BigInt;

use fusion_tableaux::partition::Partition;
use fusion_tableaux::qpoly::QPoly;
use fusion_tableaux::qseries::{box_partition_gf, gauss_binomial};
use fusion_tableaux::tableaux::StableTableau;

fn main() {
    println!("=== Σ_τ q^r(τ) = [2K choose K]_q = Σ_(λ ⊂ K×K) q^|λ| ===\n");
    for level in 1..=5u32 {
        let mut tableau_gf = QPoly::zero();
        for t in StableTableau::enumerate_level(level).unwrap() {
            tableau_gf.add_term(&BigInt::from(1), t.stable_major_index() as usize);
        }
        let gauss = gauss_binomial(2 * level, level).unwrap();
        let boxes = box_partition_gf(level);
        assert_eq!(tableau_gf, gauss);
        assert_eq!(gauss, boxes);
        println!("K = {level}: {gauss}");
    }

    println!("\n=== Coefficients stabilize to the partition numbers ===\n");
    let top = gauss_binomial(16, 8).unwrap();
    print!("p(d) for d ≤ 8:      ");
    for d in 0..=8u32 {
        print!("{} ", Partition::all_of(d).len());
    }
    print!("\n[16 choose 8]_q:     ");
    for d in 0..=8usize {
        print!("{} ", top.coeff(d));
    }
    println!();
}
