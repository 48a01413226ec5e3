//! Sparse multivariate Laurent polynomials with rational coefficients.
//!
//! Exponents are signed so that powers like `L^-3` can be carried without a separate
//! denominator. Division routines require the divided variable to appear with
//! non-negative exponents only in the divisor.

use crate::field::q;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, q(1))
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, q(c))
    }

    pub fn monomial(exps: Vec<i32>, c: BigRational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    /// The variable `x_i^k`.
    pub fn var_pow(nvars: usize, i: usize, k: i32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::monomial(e, q(1))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(q(0)),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn insert(&mut self, e: Vec<i32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<Vec<i32>, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { nvars: self.nvars, terms: acc }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x_var^k`.
    pub fn shift(&self, var: usize, k: i32) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[var] += k;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).min()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] != 0)
    }

    /// Leading coefficient with respect to `var`, as a polynomial in the other variables.
    fn leading_in(&self, var: usize) -> (i32, MPoly) {
        let deg = self.degree_in(var).expect("nonzero polynomial");
        let mut lead = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == deg {
                let mut e = e.clone();
                e[var] = 0;
                lead.insert(e, c.clone());
            }
        }
        (deg, lead)
    }

    /// Division by a divisor whose leading coefficient in `var` is `1`.
    ///
    /// Negative powers of `var` in `self` are handled by shifting first. Returns the
    /// quotient when the remainder vanishes.
    pub fn div_exact_monic(&self, divisor: &MPoly, var: usize) -> Option<MPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (ddeg, dlead) = divisor.leading_in(var);
        assert!(
            dlead.as_constant().is_some_and(|c| c.is_one()),
            "divisor must be monic in the division variable"
        );
        assert!(divisor.min_degree_in(var).unwrap() >= 0);
        let lo = self.min_degree_in(var).unwrap().min(0);
        let mut rem = self.shift(var, -lo);
        let mut quot = MPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rdeg, rlead) = rem.leading_in(var);
            if rdeg < ddeg {
                return None;
            }
            let step = rlead.shift(var, rdeg - ddeg);
            rem = rem.sub(&step.mul(divisor));
            quot = quot.add(&step);
        }
        Some(quot.shift(var, lo))
    }

    /// Substitute the given variables by rational values, keeping the others.
    pub fn substitute(&self, values: &[(usize, BigRational)]) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = e.clone();
            for (var, val) in values {
                let k = e[*var];
                if k != 0 {
                    if val.is_zero() {
                        assert!(k > 0, "negative power of a variable set to zero");
                        coeff = BigRational::zero();
                    } else {
                        coeff *= pow_rational(val, k);
                    }
                    e[*var] = 0;
                }
            }
            out.insert(e, coeff);
        }
        out
    }

    /// Coefficients of powers of a single remaining variable (all others must be absent).
    pub fn univariate_coeffs(&self, var: usize) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = Vec::new();
        for (e, c) in &self.terms {
            assert!(
                e.iter().enumerate().all(|(i, &k)| i == var || k == 0),
                "polynomial still depends on other variables"
            );
            assert!(e[var] >= 0, "negative power in univariate extraction");
            let k = e[var] as usize;
            if out.len() <= k {
                out.resize(k + 1, BigRational::zero());
            }
            out[k] += c;
        }
        out
    }

    /// Render using the supplied variable names.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            parts.push(format!("{sign} {body}"));
        }
        let joined = parts.join(" ");
        joined
            .strip_prefix("+ ")
            .map(str::to_string)
            .unwrap_or_else(|| format!("-{}", &joined[2..]))
    }
}

fn pow_rational(x: &BigRational, k: i32) -> BigRational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Integer-valued rational helper.
pub fn big(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}
