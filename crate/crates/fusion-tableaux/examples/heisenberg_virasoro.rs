//! The free-boson operators on symmetric functions.
//!
//! Demonstrates the Heisenberg action (h_n = 2n ∂/∂p_n, h_{-n} = p_n·),
//! the canonical commutation relations, the Virasoro operators built from
//! them with central charge 1, the singular vectors s_(k^k), and
//! adjointness under the modified inner product.
//!
//! ```bash
//! cargo run --example heisenberg_virasoro
//! ```

use fusion_tableaux::fock::{
    adjointness_check, heisenberg_apply, heisenberg_ccr_check, singular_vector_check,
    virasoro_apply, virasoro_commutator_check,
};
use fusion_tableaux::partition::Partition;
use fusion_tableaux::symfunc::{Basis, SymFunc};

fn p(parts: &[u32]) -> SymFunc {
    SymFunc::basis_element(Basis::P, Partition::new(parts.to_vec()).unwrap())
}

fn main() {
    println!("=== Heisenberg action on Λ ===\n");
    println!("h_1 p_1      = {}", heisenberg_apply(1, &p(&[1])).unwrap());
    println!("h_2 p_(2,2)  = {}", heisenberg_apply(2, &p(&[2, 2])).unwrap());
    println!("h_-2 · 1     = {}", heisenberg_apply(-2, &SymFunc::unit(Basis::P)).unwrap());
    println!("h_-1 p_(2)   = {}", heisenberg_apply(-1, &p(&[2])).unwrap());

    println!("\n=== CCR: [h_n, h_-m] = 2n δ_nm on degrees ≤ 8 ===\n");
    for n in 1..=3u32 {
        for m in 1..=3u32 {
            let rep = heisenberg_ccr_check(n, m, 8).unwrap();
            println!("[h_{n}, h_-{m}]: {} ({} monomials)", verdict(rep.passed), rep.cases_checked);
        }
    }

    println!("\n=== Virasoro operators ===\n");
    println!("L_0 p_(3,1)  = {}", virasoro_apply(0, &p(&[3, 1])));
    println!("L_1 p_(2)    = {}", virasoro_apply(1, &p(&[2])));
    println!("L_-2 · 1     = {}", virasoro_apply(-2, &SymFunc::unit(Basis::P)));
    let one = SymFunc::unit(Basis::P);
    let bracket = &virasoro_apply(2, &virasoro_apply(-2, &one))
        - &virasoro_apply(-2, &virasoro_apply(2, &one));
    println!("[L_2, L_-2]·1 = {bracket}   (central term (2³-2)/12 = 1/2)");

    println!("\n=== Commutator grid: [L_m, L_n] = (m-n)L_(m+n) + δ(m³-m)/12 ===\n");
    for (m, n) in [(1i64, -1i64), (2, -2), (3, -3), (2, 3), (-1, 4)] {
        let rep = virasoro_commutator_check(m, n, 8);
        println!("[L_{m}, L_{n}]: {} ({} monomials)", verdict(rep.passed), rep.cases_checked);
    }

    println!("\n=== Singular vectors: L_n s_(k^k) = 0, L_0 s_(k^k) = k² s_(k^k) ===\n");
    for k in 1..=3u32 {
        let rep = singular_vector_check(k, 4).unwrap();
        println!("s_(({k}^{k})): {}", verdict(rep.passed));
    }

    println!("\n=== Adjointness under ⟨p_λ, p_μ⟩ = δ z_λ 2^l(λ) ===\n");
    for n in 1..=3u32 {
        let rep = adjointness_check(n, 6).unwrap();
        println!("⟨h_{n} f, g⟩ = ⟨f, h_-{n} g⟩: {} ({} pairs)", verdict(rep.passed), rep.cases_checked);
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "ok"
    } else {
        "FAILED"
    }
}
