//! Schur functions from raising-current words.
//!
//! Evaluates e_{-i_1}…e_{-i_k} Ω_{-2k} as a symmetric function via
//! Vandermonde coefficient extraction, shows the rectangular case
//! e_{-m}^k Ω_{-2k} = (-1)^(k(k-1)/2) k! s_((k-m)^k), reconstructs
//! arbitrary s_ν inside the k×k box from Kostka-weighted word sums, and
//! checks that the level-2k words span exactly Λ_{k×k}.
//!
//! ```bash
//! cargo run --example vertex_schur
//! ```

use fusion_tableaux::fock::{
    e_word_apply, f2n_span_check, f2n_zero_basis, l0_spectrum_on_box, schur_via_gensegal, EWord,
};
use fusion_tableaux::partition::Partition;
use fusion_tableaux::tableaux::StableTableau;

fn main() {
    println!("=== Images of raising words (k = 2) ===\n");
    for word in f2n_zero_basis(2).unwrap() {
        println!("{word}  =  {}", e_word_apply(&word));
    }

    println!("\n=== Rectangular diagrams: e_-m^k Ω_-2k ===\n");
    for (k, m) in [(2u32, 0u32), (2, 1), (3, 0), (3, 1), (4, 2)] {
        let word = EWord::new(k, vec![m; k as usize]).unwrap();
        println!("{word}  =  {}", e_word_apply(&word));
    }

    println!("\n=== Reconstructing every s_ν in the 2×2 box ===\n");
    for nu in Partition::all_in_box(2, 2) {
        let s = schur_via_gensegal(&nu, 2).unwrap();
        println!("ν = {nu}: Kostka-weighted word sum = {s}");
    }

    println!("\n=== Span of the level-2n words ===\n");
    for n in 1..=3u32 {
        let rep = f2n_span_check(n).unwrap();
        println!(
            "n = {n}: {} words, rank {} = dim Λ_({n}×{n}) = {}",
            rep.word_count, rep.rank, rep.box_dimension
        );
        assert!(rep.passed);
    }

    println!("\n=== L_0 spectrum on Λ_(K×K) vs stable major indices ===\n");
    for level in 1..=3u32 {
        let spectrum = l0_spectrum_on_box(level).unwrap();
        let mut stable: Vec<u64> = StableTableau::enumerate_level(level)
            .unwrap()
            .iter()
            .map(StableTableau::stable_major_index)
            .collect();
        stable.sort_unstable();
        assert_eq!(spectrum, stable);
        println!("K = {level}: {spectrum:?}");
    }
}
