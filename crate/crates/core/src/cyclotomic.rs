//! Cyclotomic polynomials and exact arithmetic in `Q(zeta_d)`.

use crate::field::{q, Field};
use crate::upoly::UPoly;
use num_rational::BigRational;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// `Phi_e` with rational coefficients, from `t^e - 1 = prod_{k | e} Phi_k`.
pub fn cyclotomic_poly(e: u32) -> UPoly<BigRational> {
    static CACHE: OnceLock<Mutex<HashMap<u32, UPoly<BigRational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&e) {
        return hit.clone();
    }
    assert!(e >= 1);
    let mut poly = UPoly::monomial(q(1), e as usize).sub(&UPoly::one());
    for k in 1..e {
        if e % k == 0 {
            poly = poly
                .div_exact(&cyclotomic_poly(k))
                .expect("cyclotomic factor divides t^e - 1");
        }
    }
    cache.lock().unwrap().insert(e, poly.clone());
    poly
}

/// An element of `Q(zeta_d)` stored as a polynomial in `zeta_d` of degree `< phi(d)`.
///
/// Rational constants carry `d = 1` and adopt the field of whatever they are combined with.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    d: u32,
    coeffs: UPoly<BigRational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl CyclotomicNumber {
    pub fn rational(c: BigRational) -> Self {
        CyclotomicNumber { d: 1, coeffs: UPoly::constant(c) }
    }

    /// `zeta_d^k` for any integer `k`.
    pub fn zeta_power(d: u32, k: i64) -> Self {
        let k = k.rem_euclid(d as i64) as usize;
        Self::from_poly(d, UPoly::monomial(q(1), k))
    }

    /// `sum_j counts[j] * zeta_d^j`.
    pub fn from_counts(d: u32, counts: &[i64]) -> Self {
        Self::from_poly(d, UPoly::new(counts.iter().map(|&c| q(c)).collect()))
    }

    fn from_poly(d: u32, poly: UPoly<BigRational>) -> Self {
        match d {
            // Q(zeta_1) = Q(zeta_2) = Q.
            1 => Self::rational(poly.eval(&q(1))),
            2 => Self::rational(poly.eval(&q(-1))),
            _ => CyclotomicNumber { d, coeffs: poly.div_rem(&cyclotomic_poly(d)).1 },
        }
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    /// Coefficients in the power basis `1, zeta, zeta^2, ...`.
    pub fn coefficients(&self) -> &[BigRational] {
        self.coeffs.coeffs()
    }

    /// The rational value, when the number lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.degree() {
            None => Some(q(0)),
            Some(0) => Some(self.coeffs.coeff(0)),
            _ => None,
        }
    }

    fn common(&self, other: &Self) -> u32 {
        match (self.d, other.d) {
            (1, d) | (d, 1) => d,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing Q(zeta_{a}) with Q(zeta_{b})"),
        }
    }
}

impl Field for CyclotomicNumber {
    fn zero() -> Self {
        Self::rational(q(0))
    }
    fn one() -> Self {
        Self::rational(q(1))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let d = self.common(other);
        CyclotomicNumber { d, coeffs: self.coeffs.add(&other.coeffs) }
    }
    fn sub(&self, other: &Self) -> Self {
        let d = self.common(other);
        CyclotomicNumber { d, coeffs: self.coeffs.sub(&other.coeffs) }
    }
    fn mul(&self, other: &Self) -> Self {
        let d = self.common(other);
        Self::from_poly(d, self.coeffs.mul(&other.coeffs))
    }
    fn neg(&self) -> Self {
        CyclotomicNumber { d: self.d, coeffs: self.coeffs.neg() }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.d == 1 {
            return Self::rational(self.coeffs.coeff(0).inv());
        }
        // Extended Euclid against Phi_d.
        let modulus = cyclotomic_poly(self.d);
        let (mut r0, mut r1) = (modulus.clone(), self.coeffs.clone());
        let (mut s0, mut s1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (quot, r2) = r0.div_rem(&r1);
            let s2 = s0.sub(&quot.mul(&s1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        assert_eq!(r0.degree(), Some(0), "Phi_d is irreducible, so the gcd is a unit");
        let scaled = s0.scale(&r0.coeff(0).inv());
        Self::from_poly(self.d, scaled)
    }
    fn from_rational(c: &BigRational) -> Self {
        Self::rational(c.clone())
    }
    fn render(&self) -> String {
        if self.d == 1 || self.coeffs.degree().unwrap_or(0) == 0 {
            return self.coeffs.coeff(0).to_string();
        }
        format!("({})", self.coeffs.render(&format!("z{}", self.d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), UPoly::new(vec![q(-1), q(1)]));
        assert_eq!(cyclotomic_poly(3), UPoly::new(vec![q(1), q(1), q(1)]));
        assert_eq!(cyclotomic_poly(4), UPoly::new(vec![q(1), q(0), q(1)]));
        assert_eq!(cyclotomic_poly(6), UPoly::new(vec![q(1), q(-1), q(1)]));
        assert_eq!(cyclotomic_poly(12).degree(), Some(4));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for d in [3u32, 4, 5, 6, 12] {
            let s = (0..d as i64)
                .map(|k| CyclotomicNumber::zeta_power(d, k))
                .fold(CyclotomicNumber::zero(), |a, b| a.add(&b));
            assert!(s.is_zero(), "d = {d}");
        }
    }

    #[test]
    fn inverse_round_trip() {
        let x = CyclotomicNumber::from_counts(5, &[2, 0, 1, 3]);
        let y = x.inv();
        assert!(x.mul(&y).is_one());
        let i = CyclotomicNumber::zeta_power(4, 1);
        assert_eq!(i.mul(&i), CyclotomicNumber::rational(q(-1)));
    }
}
