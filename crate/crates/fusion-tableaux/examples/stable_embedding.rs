//! The stabilizing embedding and the stable major index.
//!
//! Follows a tableau through repeated embeddings (N+1 into row 1, N+2
//! into row 2), watching maj grow by exactly N+1 each step while
//! r = n² - maj stays fixed, and prints the principal tableaux τ_k whose
//! stable major index is k².
//!
//! ```bash
//! cargo run --example stable_embedding
//! ```

use fusion_tableaux::tableaux::{StableTableau, TwoRowSYT};

fn main() {
    println!("=== Embedding a tableau and the invariant r = n² - maj ===\n");
    let mut t = TwoRowSYT::new(vec![1, 2, 3], vec![4, 5, 6]).unwrap();
    for _ in 0..5 {
        let s = StableTableau::new(t.clone()).unwrap();
        println!(
            "N = {:2}  maj = {:3}  r = {}   {t}",
            t.len(),
            t.maj(),
            s.stable_major_index()
        );
        t = t.embed();
    }

    println!("\n=== Principal tableaux: r(τ_k) = k² ===\n");
    for k in 0..=4u32 {
        let prefix = TwoRowSYT::principal(k, 2 * k.max(1) + 6).unwrap();
        let s = StableTableau::new(prefix.clone()).unwrap();
        println!("τ_{k} prefix {prefix}  r = {}", s.stable_major_index());
    }

    println!("\n=== Level 2: all stabilized prefixes of length 4 ===\n");
    for s in StableTableau::enumerate_level(2).unwrap() {
        println!(
            "{s}  maj = {}  r = {}",
            s.prefix().maj(),
            s.stable_major_index()
        );
    }
}
