//! Brute-force oracle for the fusion filtration: enumerate every raising
//! monomial on the full dense tensor space and row-reduce over the
//! rationals with a fresh, unoptimized elimination. The optimized
//! per-weight-block engine must produce the identical graded table.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use fusion_tableaux::fusion::{apply_e, build_filtration, EvaluationParams, TensorVector};

/// Plain rational row echelon, written here so the oracle shares no code
/// with the library's elimination.
struct NaiveEchelon {
    rows: Vec<Vec<BigRational>>,
}

impl NaiveEchelon {
    fn new() -> Self {
        NaiveEchelon { rows: Vec::new() }
    }

    fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for row in &self.rows {
            let lead = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if !v[lead].is_zero() {
                let factor = &v[lead] / &row[lead];
                for (a, b) in v.iter_mut().zip(row) {
                    let t = b * &factor;
                    *a -= t;
                }
            }
        }
        if v.iter().all(Zero::is_zero) {
            return false;
        }
        self.rows.push(v);
        true
    }
}

/// All weakly decreasing index sequences with entries `≤ max_index` and
/// length `≤ max_len`, i.e. every raising monomial worth applying.
fn monomials(max_index: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            let cap = stem.last().copied().unwrap_or(max_index);
            for i in 0..=cap {
                let mut m = stem.clone();
                m.push(i);
                next.push(m);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn naive_table(n: u32, z: &EvaluationParams) -> BTreeMap<(u32, i32), u64> {
    let slots = n as usize;
    // vector of every monomial, keyed by (degree, weight)
    let mut by_weight: BTreeMap<i32, Vec<(u32, Vec<BigRational>)>> = BTreeMap::new();
    for mono in monomials(n - 1, slots) {
        let mut v = TensorVector::lowest(slots);
        for &i in &mono {
            v = apply_e(i, &v, z).unwrap();
        }
        let degree: u32 = mono.iter().sum();
        let weight = 2 * mono.len() as i32 - n as i32;
        let amps: Vec<BigRational> = (0..1usize << slots).map(|m| v.amplitude(m).clone()).collect();
        by_weight.entry(weight).or_default().push((degree, amps));
    }

    let mut dims = BTreeMap::new();
    for (weight, mut vectors) in by_weight {
        vectors.sort_by_key(|(d, _)| *d);
        let mut ech = NaiveEchelon::new();
        for (degree, v) in vectors {
            if ech.insert(v) {
                *dims.entry((degree, weight)).or_insert(0u64) += 1;
            }
        }
    }
    dims
}

#[test]
fn optimized_engine_matches_brute_force() {
    for n in [2u32, 4, 6] {
        for z in [
            EvaluationParams::consecutive(n as usize),
            EvaluationParams::geometric(n as usize),
        ] {
            let expected = naive_table(n, &z);
            let table = build_filtration(n, &z).unwrap();
            let got: BTreeMap<(u32, i32), u64> =
                table.rows().map(|(d, w, dim)| ((d, w), dim)).collect();
            assert_eq!(got, expected, "N = {n}");
        }
    }
}

#[test]
fn brute_force_matches_rational_points() {
    let z = EvaluationParams::new(vec![
        BigRational::new(1.into(), 2.into()),
        BigRational::new((-3).into(), 4.into()),
        BigRational::new(5.into(), 1.into()),
        BigRational::new(7.into(), 3.into()),
    ])
    .unwrap();
    let expected = naive_table(4, &z);
    let table = build_filtration(4, &z).unwrap();
    let got: BTreeMap<(u32, i32), u64> = table.rows().map(|(d, w, dim)| ((d, w), dim)).collect();
    assert_eq!(got, expected);
}
