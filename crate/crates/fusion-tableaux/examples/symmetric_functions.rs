//! Basis conversions, Kostka numbers, and inner products in Λ.
//!
//! ```bash
//! cargo run --example symmetric_functions
//! ```

use fusion_tableaux::partition::Partition;
use fusion_tableaux::symfunc::{
    hall_inner, kostka_number, modified_inner, schur_poly, z_lambda, Basis, SymFunc,
};

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn main() {
    println!("=== Schur functions in the four bases ===\n");
    let s22 = SymFunc::basis_element(Basis::S, part(&[2, 2]));
    for basis in [Basis::P, Basis::H, Basis::M] {
        println!("s(2,2) = {}", s22.convert(basis));
    }

    println!("\n=== Kostka numbers K_νμ for |ν| = 4 ===\n");
    let shapes = Partition::all_of(4);
    print!("{:10}", "ν \\ μ");
    for mu in &shapes {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for nu in &shapes {
        print!("{:10}", nu.to_string());
        for mu in &shapes {
            print!("{:>10}", kostka_number(nu, mu).unwrap());
        }
        println!();
    }

    println!("\n=== z_λ and the two inner products ===\n");
    for lam in Partition::all_of(3) {
        let p = SymFunc::basis_element(Basis::P, lam.clone());
        println!(
            "λ = {lam}: z_λ = {}, ⟨p_λ,p_λ⟩ = {}, modified = {}",
            z_lambda(&lam),
            hall_inner(&p, &p),
            modified_inner(&p, &p)
        );
    }

    println!("\n=== Schur orthonormality under the Hall pairing ===\n");
    let s31 = SymFunc::basis_element(Basis::S, part(&[3, 1]));
    let s211 = SymFunc::basis_element(Basis::S, part(&[2, 1, 1]));
    println!("⟨s(3,1), s(3,1)⟩   = {}", hall_inner(&s31, &s31));
    println!("⟨s(3,1), s(2,1,1)⟩ = {}", hall_inner(&s31, &s211));

    println!("\n=== Finite-variable Schur polynomials ===\n");
    for (lam, vars) in [(part(&[2, 1]), 2), (part(&[1, 1]), 3), (part(&[2]), 2)] {
        let poly = schur_poly(&lam, vars).unwrap();
        let monomials: Vec<String> = poly
            .terms()
            .map(|(e, c)| format!("{c}·z^{e:?}"))
            .collect();
        println!("s_{lam}(z_1..z_{vars}) = {}", monomials.join(" + "));
    }
}
