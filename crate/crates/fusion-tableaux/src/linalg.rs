//! Exact linear algebra over the rationals.
//!
//! [`IntEchelon`] keeps an incremental row-echelon basis of a growing
//! Q-span using fraction-free integer arithmetic: rows are scaled to
//! primitive integer vectors, combined with `gcd`-reduced multipliers, and
//! pivots are kept mutually reduced so offering a row is a single pass.
//! This is the reference engine behind the fusion filtration and the
//! Fock-space span checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// A pivot row: primitive (content 1), positive leading entry, and zero in
/// the lead column of every other pivot.
struct PivotRow {
    lead: usize,
    entries: Vec<BigInt>,
}

/// Incremental row-echelon form of a set of integer rows, tracking the rank
/// of their span over Q.
pub struct IntEchelon {
    cols: usize,
    pivots: Vec<PivotRow>, // sorted by lead column
}

impl IntEchelon {
    pub fn new(cols: usize) -> Self {
        IntEchelon {
            cols,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `row` against the current pivots in place.
    fn reduce(&self, row: &mut [BigInt]) {
        for p in &self.pivots {
            let c = row[p.lead].clone();
            if c.is_zero() {
                continue;
            }
            let rho = &p.entries[p.lead];
            let g = c.gcd(rho);
            let scale_row = rho / &g;
            let scale_piv = &c / &g;
            for (e, pe) in row.iter_mut().zip(&p.entries) {
                if !scale_row.is_one() {
                    *e *= &scale_row;
                }
                if !pe.is_zero() {
                    *e -= pe * &scale_piv;
                }
            }
            debug_assert!(row[p.lead].is_zero());
            strip_content(row);
        }
    }

    /// Offers a row to the span. Returns the reduced, normalized row if it
    /// increased the rank, `None` if it was already in the span.
    pub fn offer(&mut self, mut row: Vec<BigInt>) -> Option<Vec<BigInt>> {
        debug_assert_eq!(row.len(), self.cols);
        self.reduce(&mut row);
        let lead = row.iter().position(|e| !e.is_zero())?;
        normalize(&mut row, lead);
        // keep existing pivots reduced at the new lead column, so future
        // single-pass reductions stay correct
        for p in &mut self.pivots {
            let c = p.entries[lead].clone();
            if c.is_zero() {
                continue;
            }
            let rho = &row[lead];
            let g = c.gcd(rho);
            let scale_p = rho / &g;
            let scale_new = &c / &g;
            for (pe, ne) in p.entries.iter_mut().zip(&row) {
                if !scale_p.is_one() {
                    *pe *= &scale_p;
                }
                if !ne.is_zero() {
                    *pe -= ne * &scale_new;
                }
            }
            debug_assert!(p.entries[lead].is_zero());
            let plead = p.lead;
            normalize(&mut p.entries, plead);
        }
        let snapshot = row.clone();
        let pos = self.pivots.partition_point(|p| p.lead < lead);
        self.pivots.insert(pos, PivotRow { lead, entries: row });
        Some(snapshot)
    }

    /// Offers a rational row, clearing denominators first.
    pub fn offer_rational(&mut self, row: &[BigRational]) -> Option<Vec<BigInt>> {
        self.offer(clear_denominators(row))
    }
}

/// Divides a row by the gcd of its entries and flips signs so the entry at
/// `lead` is positive.
fn normalize(row: &mut [BigInt], lead: usize) {
    let mut g = BigInt::zero();
    for e in row.iter() {
        if !e.is_zero() {
            g = g.gcd(e);
            if g.is_one() {
                break;
            }
        }
    }
    let negate = row[lead].is_negative();
    if g.is_one() && !negate {
        return;
    }
    for e in row.iter_mut() {
        if !g.is_one() && !e.is_zero() {
            *e /= &g;
        }
        if negate {
            *e = -std::mem::take(e);
        }
    }
}

/// Divides out the content (gcd of all entries) if it is nontrivial.
fn strip_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for e in row.iter() {
        if !e.is_zero() {
            g = g.gcd(e);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for e in row.iter_mut() {
        if !e.is_zero() {
            *e /= &g;
        }
    }
}

/// Scales a rational row to a primitive integer row spanning the same line.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for r in row {
        if !r.is_zero() {
            lcm = lcm.lcm(r.denom());
        }
    }
    row.iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect()
}

/// Rank over Q of a list of rational rows.
pub fn rational_rank(rows: &[Vec<BigRational>], cols: usize) -> usize {
    let mut ech = IntEchelon::new(cols);
    for row in rows {
        ech.offer_rational(row);
    }
    ech.rank()
}

/// Inverts a square rational matrix by Gauss–Jordan elimination. The
/// matrices this crate inverts (basis transition matrices) are provably
/// nonsingular, so a singular input reports as an internal error.
pub fn invert_rational(mat: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = mat.len();
    let mut a: Vec<Vec<BigRational>> = mat.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::internal("singular transition matrix"))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let d = a[col][col].clone();
        for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
            *x /= d.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let t = &a[col][c] * &f;
                a[r][c] -= t;
                let t = &inv[col][c] * &f;
                inv[r][c] -= t;
            }
        }
    }
    Ok(inv)
}
