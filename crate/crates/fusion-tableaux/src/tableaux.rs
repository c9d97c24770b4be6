//! Two-row standard Young tableaux and their statistics: descents, major
//! index, charge, the stabilizing embedding, principal tableaux, and the
//! stable major index.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::partition::Partition;
use crate::Result;

/// A standard Young tableau with at most two rows, stored as the two
/// strictly increasing rows. Their disjoint union is `{1, …, N}` and the
/// columns increase downward.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TwoRowSYT {
    row1: Vec<u32>,
    row2: Vec<u32>,
}

impl TwoRowSYT {
    pub fn new(row1: Vec<u32>, row2: Vec<u32>) -> Result<Self> {
        if row2.len() > row1.len() {
            return Err(Error::domain("second row longer than first"));
        }
        for row in [&row1, &row2] {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::domain("rows must be strictly increasing"));
            }
        }
        // column strictness
        for (j, &b) in row2.iter().enumerate() {
            if b <= row1[j] {
                return Err(Error::domain(format!(
                    "column {} not strictly increasing downward",
                    j + 1
                )));
            }
        }
        // entries are exactly 1..=N
        let n = row1.len() + row2.len();
        let mut seen = vec![false; n + 1];
        for &v in row1.iter().chain(row2.iter()) {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::domain(format!("entries must be a permutation of 1..={n}")));
            }
            seen[v as usize] = true;
        }
        Ok(TwoRowSYT { row1, row2 })
    }

    /// Total number of cells `N`.
    pub fn len(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row1.is_empty()
    }

    pub fn row1(&self) -> &[u32] {
        &self.row1
    }

    pub fn row2(&self) -> &[u32] {
        &self.row2
    }

    pub fn shape(&self) -> Partition {
        Partition::two_row(self.row1.len() as u32, self.row2.len() as u32)
            .expect("valid tableau has a valid shape")
    }

    /// Half the row-length difference. Only meaningful when `N` is even
    /// (the difference is then even too).
    pub fn k(&self) -> u32 {
        debug_assert!(self.len().is_multiple_of(2), "k(τ) is defined for even length");
        (self.row1.len() - self.row2.len()) as u32 / 2
    }

    /// Row (1 or 2) containing each value; index 0 unused.
    fn row_of(&self) -> Vec<u8> {
        let mut rows = vec![0u8; self.len() + 1];
        for &v in &self.row1 {
            rows[v as usize] = 1;
        }
        for &v in &self.row2 {
            rows[v as usize] = 2;
        }
        rows
    }

    /// Column of each value; index 0 unused.
    fn col_of(&self) -> Vec<u32> {
        let mut cols = vec![0u32; self.len() + 1];
        for (j, &v) in self.row1.iter().enumerate() {
            cols[v as usize] = j as u32 + 1;
        }
        for (j, &v) in self.row2.iter().enumerate() {
            cols[v as usize] = j as u32 + 1;
        }
        cols
    }

    /// Descent set: the `i ≤ N-1` such that `i+1` sits in a lower row
    /// than `i`.
    pub fn descent_set(&self) -> Vec<u32> {
        let rows = self.row_of();
        (1..self.len() as u32)
            .filter(|&i| rows[i as usize] == 1 && rows[i as usize + 1] == 2)
            .collect()
    }

    /// Major index: the sum of the descent set.
    pub fn maj(&self) -> u64 {
        self.descent_set().iter().map(|&i| i as u64).sum()
    }

    /// Charge: the sum of the `i ≤ N-1` such that `i+1` sits strictly to
    /// the right of `i`. Computed from columns, not as the complement of
    /// `maj`, so the identity `maj + charge = N(N-1)/2` is a genuine
    /// cross-check of both implementations.
    pub fn charge(&self) -> u64 {
        let cols = self.col_of();
        (1..self.len() as u32)
            .filter(|&i| cols[i as usize + 1] > cols[i as usize])
            .map(|i| i as u64)
            .sum()
    }

    /// The stabilizing embedding: appends `N+1` to the first row and
    /// `N+2` to the second. Raises the major index by exactly `N+1`.
    pub fn embed(&self) -> TwoRowSYT {
        let n = self.len() as u32;
        let mut row1 = self.row1.clone();
        let mut row2 = self.row2.clone();
        row1.push(n + 1);
        row2.push(n + 2);
        TwoRowSYT { row1, row2 }
    }

    /// All standard tableaux of a two-row shape, generated as ballot
    /// (lattice) words in lexicographic order, so output order is
    /// deterministic and reproducible.
    pub fn enumerate_shape(shape: &Partition) -> Result<Vec<TwoRowSYT>> {
        if shape.len() > 2 {
            return Err(Error::domain(format!("{shape} has more than two rows")));
        }
        let a = shape.part(0) as usize;
        let b = shape.part(1) as usize;
        let mut out = Vec::new();
        let mut row1 = Vec::with_capacity(a);
        let mut row2 = Vec::with_capacity(b);
        fn rec(
            v: u32,
            n: usize,
            a: usize,
            b: usize,
            row1: &mut Vec<u32>,
            row2: &mut Vec<u32>,
            out: &mut Vec<TwoRowSYT>,
        ) {
            if v as usize > n {
                out.push(TwoRowSYT {
                    row1: row1.clone(),
                    row2: row2.clone(),
                });
                return;
            }
            if row1.len() < a {
                row1.push(v);
                rec(v + 1, n, a, b, row1, row2, out);
                row1.pop();
            }
            // ballot condition: row 2 must stay strictly shorter than the
            // part of row 1 already placed
            if row2.len() < b && row2.len() < row1.len() {
                row2.push(v);
                rec(v + 1, n, a, b, row1, row2, out);
                row2.pop();
            }
        }
        rec(1, a + b, a, b, &mut row1, &mut row2, &mut out);
        Ok(out)
    }

    /// All standard tableaux of shape `(n+k, n-k)` with `N = 2n`.
    pub fn enumerate(n_total: u32, k: u32) -> Result<Vec<TwoRowSYT>> {
        if n_total == 0 || !n_total.is_multiple_of(2) {
            return Err(Error::domain(format!("length {n_total} must be even and positive")));
        }
        let n = n_total / 2;
        if k > n {
            return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
        }
        TwoRowSYT::enumerate_shape(&Partition::two_row(n + k, n - k)?)
    }

    /// The length-`length` prefix of the principal tableau `τ_k`:
    /// `row1 = (1, …, 2k, 2k+1, 2k+3, …)`, `row2 = (2k+2, 2k+4, …)`.
    pub fn principal(k: u32, length: u32) -> Result<TwoRowSYT> {
        if !length.is_multiple_of(2) {
            return Err(Error::domain("principal prefixes have even length"));
        }
        if length < 2 * k {
            return Err(Error::domain(format!(
                "length {length} is too short for the principal tableau τ_{k}"
            )));
        }
        let mut row1: Vec<u32> = (1..=2 * k).collect();
        let mut row2 = Vec::new();
        let mut v = 2 * k + 1;
        while v <= length {
            row1.push(v);
            row2.push(v + 1);
            v += 2;
        }
        Ok(TwoRowSYT { row1, row2 })
    }
}

impl fmt::Display for TwoRowSYT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.row1.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, " | ")?;
        for (i, v) in self.row2.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for TwoRowSYT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An infinite two-row tableau that follows the principal pattern beyond a
/// finite even prefix. Only the prefix is stored; `k` is derived from its
/// shape, never stored, so the two can not drift apart.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct StableTableau {
    prefix: TwoRowSYT,
}

impl StableTableau {
    pub fn new(prefix: TwoRowSYT) -> Result<Self> {
        if !prefix.len().is_multiple_of(2) || prefix.is_empty() {
            return Err(Error::domain("stable prefixes must have even positive length"));
        }
        Ok(StableTableau { prefix })
    }

    pub fn prefix(&self) -> &TwoRowSYT {
        &self.prefix
    }

    /// Half the prefix length.
    pub fn level(&self) -> u32 {
        self.prefix.len() as u32 / 2
    }

    pub fn k(&self) -> u32 {
        self.prefix.k()
    }

    /// The stable major index `r = n² - maj(prefix)` for prefix length
    /// `2n`. Extending the prefix by its principal continuation leaves
    /// this unchanged, which is what makes it a statistic of the infinite
    /// tableau.
    pub fn stable_major_index(&self) -> u64 {
        let n = self.level() as u64;
        let maj = self.prefix.maj();
        assert!(
            maj <= n * n,
            "maj of an even two-row tableau never exceeds n²"
        );
        n * n - maj
    }

    /// Extends the stored prefix by one principal step (two cells). The
    /// stable major index is invariant under this.
    pub fn extended(&self) -> StableTableau {
        StableTableau {
            prefix: self.prefix.embed(),
        }
    }

    /// Every stable tableau readable from level `2K`: each two-row SYT of
    /// length `2K` determines its own principal continuation, so these are
    /// exactly the length-`2K` tableaux. There are `C(2K, K)` of them.
    pub fn enumerate_level(k_level: u32) -> Result<Vec<StableTableau>> {
        if k_level == 0 {
            return Err(Error::domain("level must be positive"));
        }
        let mut out = Vec::new();
        for k in 0..=k_level {
            for t in TwoRowSYT::enumerate(2 * k_level, k)? {
                out.push(StableTableau { prefix: t });
            }
        }
        Ok(out)
    }
}

impl fmt::Display for StableTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~τ_{}", self.prefix, self.k())
    }
}

impl fmt::Debug for StableTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(row1: &[u32], row2: &[u32]) -> TwoRowSYT {
        TwoRowSYT::new(row1.to_vec(), row2.to_vec()).unwrap()
    }

    /// Two-row hook-length count `f^{(a,b)} = C(N, b) - C(N, b-1)`,
    /// independent of the ballot-word enumeration.
    fn hook_count(a: u64, b: u64) -> u64 {
        fn binom(n: u64, k: u64) -> u64 {
            if k > n {
                return 0;
            }
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        let n = a + b;
        binom(n, b) - if b == 0 { 0 } else { binom(n, b - 1) }
    }

    #[test]
    fn validation() {
        assert!(TwoRowSYT::new(vec![1, 2], vec![]).is_ok());
        assert!(TwoRowSYT::new(vec![1], vec![2, 3]).is_err()); // row2 longer
        assert!(TwoRowSYT::new(vec![2, 1], vec![]).is_err()); // not increasing
        assert!(TwoRowSYT::new(vec![2, 3], vec![1]).is_err()); // column violated
        assert!(TwoRowSYT::new(vec![1, 3], vec![2, 5]).is_err()); // not 1..=4
    }

    #[test]
    fn enumerate_smallest_shapes() {
        assert_eq!(TwoRowSYT::enumerate(2, 1).unwrap(), vec![syt(&[1, 2], &[])]);
        assert_eq!(TwoRowSYT::enumerate(2, 0).unwrap(), vec![syt(&[1], &[2])]);
        let two = TwoRowSYT::enumerate(4, 0).unwrap();
        assert_eq!(two, vec![syt(&[1, 2], &[3, 4]), syt(&[1, 3], &[2, 4])]);
        assert!(TwoRowSYT::enumerate(4, 3).is_err());
    }

    #[test]
    fn enumeration_counts_match_hook_formula() {
        for n_total in [2u32, 4, 6, 8, 10] {
            for k in 0..=n_total / 2 {
                let count = TwoRowSYT::enumerate(n_total, k).unwrap().len() as u64;
                let (a, b) = ((n_total / 2 + k) as u64, (n_total / 2 - k) as u64);
                assert_eq!(count, hook_count(a, b), "shape ({a},{b})");
            }
        }
        // odd shapes too
        let odd = TwoRowSYT::enumerate_shape(&Partition::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(odd.len() as u64, hook_count(2, 1));
    }

    #[test]
    fn descents_maj_charge() {
        assert_eq!(syt(&[1, 2], &[]).descent_set(), Vec::<u32>::new());
        assert_eq!(syt(&[1], &[2]).descent_set(), vec![1]);
        assert_eq!(syt(&[1, 3], &[2, 4]).descent_set(), vec![1, 3]);

        assert_eq!(syt(&[1, 2], &[]).maj(), 0);
        assert_eq!(syt(&[1, 3], &[2, 4]).maj(), 4);

        assert_eq!(syt(&[1, 2], &[]).charge(), 1);
        assert_eq!(syt(&[1], &[2]).charge(), 0);
        assert_eq!(syt(&[1, 3], &[2, 4]).charge(), 2);
    }

    #[test]
    fn maj_charge_complement() {
        for n_total in [2u32, 4, 6, 8] {
            let target = (n_total as u64) * (n_total as u64 - 1) / 2;
            for k in 0..=n_total / 2 {
                for t in TwoRowSYT::enumerate(n_total, k).unwrap() {
                    assert_eq!(t.maj() + t.charge(), target, "{t}");
                }
            }
        }
    }

    #[test]
    fn embedding() {
        assert_eq!(syt(&[1], &[2]).embed(), syt(&[1, 3], &[2, 4]));
        assert_eq!(syt(&[1, 2], &[]).embed(), syt(&[1, 2, 3], &[4]));
        // maj chain 1 → 4 → 9 under repeated embedding
        let t = syt(&[1], &[2]);
        assert_eq!(t.maj(), 1);
        assert_eq!(t.embed().maj(), 4);
        assert_eq!(t.embed().embed().maj(), 9);
    }

    #[test]
    fn embed_law_and_k_preserved() {
        for n_total in [2u32, 4, 6] {
            for k in 0..=n_total / 2 {
                for t in TwoRowSYT::enumerate(n_total, k).unwrap() {
                    let e = t.embed();
                    assert_eq!(e.maj(), t.maj() + n_total as u64 + 1);
                    assert_eq!(e.k(), t.k());
                }
            }
        }
    }

    #[test]
    fn principal_tableaux() {
        assert_eq!(TwoRowSYT::principal(0, 4).unwrap(), syt(&[1, 3], &[2, 4]));
        assert_eq!(TwoRowSYT::principal(1, 4).unwrap(), syt(&[1, 2, 3], &[4]));
        assert_eq!(TwoRowSYT::principal(2, 4).unwrap(), syt(&[1, 2, 3, 4], &[]));
        assert!(TwoRowSYT::principal(3, 4).is_err());
    }

    #[test]
    fn stable_major_index_values() {
        // r(τ_k) = k²
        for k in 0..=6u32 {
            for len in [2 * k.max(1), 2 * k + 4, 2 * k + 8] {
                let t = StableTableau::new(TwoRowSYT::principal(k, len).unwrap()).unwrap();
                assert_eq!(t.stable_major_index(), (k as u64).pow(2));
            }
        }
        let t = StableTableau::new(syt(&[1, 2], &[])).unwrap();
        assert_eq!(t.stable_major_index(), 1);
        let t = StableTableau::new(syt(&[1, 3], &[2, 4])).unwrap();
        assert_eq!(t.stable_major_index(), 0);
    }

    #[test]
    fn r_is_stable_under_extension() {
        for k in 0..=3u32 {
            for t in TwoRowSYT::enumerate(6, k).unwrap() {
                let s = StableTableau::new(t).unwrap();
                assert_eq!(s.stable_major_index(), s.extended().stable_major_index());
                assert_eq!(
                    s.stable_major_index(),
                    s.extended().extended().stable_major_index()
                );
            }
        }
    }

    #[test]
    fn level_enumeration() {
        let l1 = StableTableau::enumerate_level(1).unwrap();
        let mut r1: Vec<u64> = l1.iter().map(|t| t.stable_major_index()).collect();
        r1.sort_unstable();
        assert_eq!(r1, vec![0, 1]);

        let l2 = StableTableau::enumerate_level(2).unwrap();
        let mut r2: Vec<u64> = l2.iter().map(|t| t.stable_major_index()).collect();
        r2.sort_unstable();
        assert_eq!(r2, vec![0, 1, 2, 2, 3, 4]);

        // |T^{(2K)}| = C(2K, K)
        assert_eq!(StableTableau::enumerate_level(3).unwrap().len(), 20);
        assert_eq!(StableTableau::enumerate_level(4).unwrap().len(), 70);
    }

    #[test]
    fn schur_weyl_dimension_identity() {
        for n_total in [2u32, 4, 6, 8, 10] {
            let total: u64 = (0..=n_total / 2)
                .map(|k| {
                    (2 * k as u64 + 1) * TwoRowSYT::enumerate(n_total, k).unwrap().len() as u64
                })
                .sum();
            assert_eq!(total, 1u64 << n_total);
        }
    }
}
