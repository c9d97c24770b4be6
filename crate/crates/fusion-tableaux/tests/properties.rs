//! Property tests for the algebraic invariants that hold on all inputs,
//! not just the worked examples.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use fusion_tableaux::fock::{e_word_apply, EWord};
use fusion_tableaux::partition::Partition;
use fusion_tableaux::qpoly::QPoly;
use fusion_tableaux::symfunc::{Basis, SymFunc};
use fusion_tableaux::tableaux::TwoRowSYT;

fn arb_qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-20i64..=20, 0..8).prop_map(|cs| QPoly::from_ints(&cs))
}

/// A uniformly random ballot word of length `n`, folded into a tableau.
fn arb_tableau() -> impl Strategy<Value = TwoRowSYT> {
    (1usize..=12, prop::collection::vec(prop::bool::ANY, 12)).prop_map(|(n, coin)| {
        let mut row1 = Vec::new();
        let mut row2 = Vec::new();
        for v in 1..=n as u32 {
            if row2.len() < row1.len() && coin[(v - 1) as usize] {
                row2.push(v);
            } else {
                row1.push(v);
            }
        }
        TwoRowSYT::new(row1, row2).expect("ballot construction is valid")
    })
}

fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(move |n| {
        let all = Partition::all_of(n);
        let len = all.len();
        (0..len).prop_map(move |i| all[i].clone())
    })
}

fn arb_symfunc() -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((arb_partition(5), -9i64..=9, 1i64..=4), 1..5).prop_map(|terms| {
        SymFunc::from_terms(
            Basis::P,
            terms.into_iter().map(|(p, num, den)| {
                (p, BigRational::new(BigInt::from(num), BigInt::from(den)))
            }),
        )
    })
}

proptest! {
    #[test]
    fn qpoly_mul_distributes(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
        let left = &a * &(&b + &c);
        let right = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn qpoly_exact_division_inverts_multiplication(a in arb_qpoly(), b in arb_qpoly()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).div_exact(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn qpoly_reversal_is_an_involution(a in arb_qpoly(), extra in 0usize..4) {
        let top = a.degree().unwrap_or(0) + extra;
        let twice = a.reversed(top).unwrap().reversed(top).unwrap();
        prop_assert_eq!(twice, a);
    }

    #[test]
    fn maj_charge_complement_on_random_tableaux(t in arb_tableau()) {
        let n = t.len() as u64;
        prop_assert_eq!(t.maj() + t.charge(), n * (n - 1) / 2);
    }

    #[test]
    fn embedding_raises_maj_by_n_plus_one(t in arb_tableau()) {
        let n = t.len() as u64;
        prop_assert_eq!(t.embed().maj(), t.maj() + n + 1);
    }

    #[test]
    fn symfunc_conversions_round_trip(f in arb_symfunc(), basis in prop::sample::select(vec![Basis::M, Basis::H, Basis::S])) {
        prop_assert_eq!(f.convert(basis).convert(Basis::P), f);
    }

    #[test]
    fn e_word_images_are_homogeneous_of_word_degree(
        k in 1u32..=3,
        seed in prop::collection::vec(0u32..=3, 3),
    ) {
        let indices: Vec<u32> = seed.iter().take(k as usize).map(|&i| i.min(k)).collect();
        let word = EWord::new(k, indices).unwrap();
        let image = e_word_apply(&word);
        prop_assert!(image.is_homogeneous());
        if !image.is_zero() {
            prop_assert_eq!(image.degree(), Some(word.degree()));
        }
    }
}
