//! Sparse multivariate Laurent polynomials with exact rational
//! coefficients: the scratch space for alternants, Vandermonde
//! determinants, and the coefficient extractions behind the
//! vertex-operator formulas. Exponents may be negative — that is how
//! `a_{λ+δ}(z^{-1})` is represented.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::Result;

/// Finitely supported map from integer exponent vectors to rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariatePoly {
    vars: usize,
    terms: BTreeMap<Vec<i32>, BigRational>,
}

impl MultivariatePoly {
    pub fn zero(vars: usize) -> Self {
        MultivariatePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        MultivariatePoly::monomial(vars, vec![0; vars], BigRational::one())
    }

    pub fn monomial(vars: usize, exps: Vec<i32>, coeff: BigRational) -> Self {
        assert_eq!(exps.len(), vars);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MultivariatePoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i32>, coeff: BigRational) {
        assert_eq!(exps.len(), self.vars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultivariatePoly::zero(self.vars);
        }
        MultivariatePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// The coefficient of the empty monomial `z^0` in `self · rhs`,
    /// computed without materializing the product:
    /// `Σ_e self[e] · rhs[-e]`. This is the pairing `[1](F · A)` used to
    /// read Schur coefficients off vertex-operator products.
    pub fn zero_coeff_of_product(&self, rhs: &Self) -> BigRational {
        assert_eq!(self.vars, rhs.vars);
        let (small, large) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = BigRational::zero();
        for (e, c) in &small.terms {
            let neg: Vec<i32> = e.iter().map(|&x| -x).collect();
            if let Some(d) = large.terms.get(&neg) {
                acc += c * d;
            }
        }
        acc
    }

    /// The Vandermonde determinant `a_δ(z) = Π_{i<j} (z_i - z_j)`.
    pub fn vandermonde(vars: usize) -> Self {
        let mut prod = MultivariatePoly::one(vars);
        for i in 0..vars {
            for j in i + 1..vars {
                let mut factor = MultivariatePoly::zero(vars);
                let mut ei = vec![0; vars];
                ei[i] = 1;
                factor.add_term(ei, BigRational::one());
                let mut ej = vec![0; vars];
                ej[j] = 1;
                factor.add_term(ej, -BigRational::one());
                prod = &prod * &factor;
            }
        }
        prod
    }

    /// The alternant `det[z_i^{e_j}]`, expanded over permutations.
    /// Negative exponents are allowed, giving alternants in `z^{-1}`.
    pub fn alternant(exponents: &[i32]) -> Self {
        let k = exponents.len();
        let mut out = MultivariatePoly::zero(k);
        for (perm, sign) in permutations_with_sign(k) {
            let exps: Vec<i32> = (0..k).map(|i| exponents[perm[i]]).collect();
            let c = if sign > 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            out.add_term(exps, c);
        }
        out
    }

    /// The monomial symmetric polynomial `m_μ(z_1..z_vars)`: the sum of all
    /// distinct permutations of the exponent vector `μ` padded with zeros.
    /// Zero when `μ` has more parts than there are variables.
    pub fn monomial_symmetric(mu: &[u32], vars: usize) -> Self {
        if mu.len() > vars {
            return MultivariatePoly::zero(vars);
        }
        let mut exps: Vec<i32> = mu.iter().map(|&p| p as i32).collect();
        exps.resize(vars, 0);
        exps.sort_unstable();
        let mut out = MultivariatePoly::zero(vars);
        loop {
            out.add_term(exps.clone(), BigRational::one());
            if !next_permutation(&mut exps) {
                break;
            }
        }
        out
    }

    /// Exact division by `z_i - z_j` via synthetic (Horner) division in
    /// `z_i`. All exponents of `z_i` must be nonnegative; a nonzero
    /// remainder is an internal error, since every division performed by
    /// this crate is backed by an antisymmetry argument.
    pub fn div_exact_linear_diff(&self, i: usize, j: usize) -> Result<Self> {
        assert!(i != j && i < self.vars && j < self.vars);
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut max_deg = 0i32;
        for e in self.terms.keys() {
            if e[i] < 0 {
                return Err(Error::domain(
                    "synthetic division needs nonnegative exponents in the divided variable",
                ));
            }
            max_deg = max_deg.max(e[i]);
        }
        // coefficients of z_i^d, as polynomials with the i-th exponent zeroed
        let mut by_deg: Vec<MultivariatePoly> =
            vec![MultivariatePoly::zero(self.vars); max_deg as usize + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let d = rest[i] as usize;
            rest[i] = 0;
            by_deg[d].add_term(rest, c.clone());
        }
        // P = (z_i - z_j) Q + R with q_{d-1} = c_d + z_j q_d
        let mut quot = MultivariatePoly::zero(self.vars);
        let mut carry = MultivariatePoly::zero(self.vars); // q_d, descending d
        for d in (1..=max_deg as usize).rev() {
            carry = &by_deg[d] + &shift_var(&carry, j);
            for (e, c) in &carry.terms {
                let mut exps = e.clone();
                exps[i] += d as i32 - 1;
                quot.add_term(exps, c.clone());
            }
        }
        let remainder = &by_deg[0] + &shift_var(&carry, j);
        if !remainder.is_zero() {
            return Err(Error::internal("linear-difference division left a remainder"));
        }
        Ok(quot)
    }
}

/// Multiplies by `z_v`.
fn shift_var(p: &MultivariatePoly, v: usize) -> MultivariatePoly {
    let mut out = MultivariatePoly::zero(p.vars);
    for (e, c) in &p.terms {
        let mut exps = e.clone();
        exps[v] += 1;
        out.add_term(exps, c.clone());
    }
    out
}

/// All permutations of `0..k` with their signs.
fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    fn rec(t: usize, perm: &mut Vec<usize>, sign: i8, out: &mut Vec<(Vec<usize>, i8)>) {
        let k = perm.len();
        if t == k {
            out.push((perm.clone(), sign));
            return;
        }
        for pos in t..k {
            perm.swap(t, pos);
            let s = if pos == t { sign } else { -sign };
            rec(t + 1, perm, s, out);
            perm.swap(t, pos);
        }
    }
    rec(0, &mut perm, 1, &mut out);
    out
}

/// Steps `a` to its next lexicographic permutation; false when exhausted.
fn next_permutation(a: &mut [i32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rfind(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = a.iter().rposition(|x| *x > a[i]).expect("exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

impl Add for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn add(self, rhs: &MultivariatePoly) -> MultivariatePoly {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn sub(self, rhs: &MultivariatePoly) -> MultivariatePoly {
        self + &(-rhs)
    }
}

impl Neg for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn neg(self) -> MultivariatePoly {
        MultivariatePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultivariatePoly {
    type Output = MultivariatePoly;
    fn mul(self, rhs: &MultivariatePoly) -> MultivariatePoly {
        assert_eq!(self.vars, rhs.vars);
        let mut out = MultivariatePoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}
