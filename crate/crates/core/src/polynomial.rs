//! Integer polynomials in up to six variables: parsing, printing, restriction.
//!
//! Variables are named `x, y, z, w, u, v` in that order. Terms are kept in a map keyed by
//! exponent vector; printing lists them in decreasing lexicographic order.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

pub const VARIABLES: [char; 6] = ['x', 'y', 'z', 'w', 'u', 'v'];
pub const MAX_VARS: usize = VARIABLES.len();

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unexpected character {ch:?} at position {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("variable {var} is outside the first {n} variables")]
    VariableOutOfRange { var: char, n: usize },
    #[error("number of variables must be between 1 and {MAX_VARS}, got {0}")]
    BadDimension(usize),
    #[error("exponent too large at position {0}")]
    ExponentOverflow(usize),
    #[error("the polynomial is zero")]
    Zero,
    #[error("the polynomial has a nonzero constant term")]
    NonzeroConstant,
    #[error("point is not a support point of the polynomial")]
    ForeignFace,
}

/// A polynomial in `n` variables with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut map: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length");
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        IntPolynomial { n, terms: map }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_terms(n: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::new(n, terms.iter().map(|(c, e)| (e.to_vec(), BigInt::from(*c))))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Exponent vectors of the nonzero terms, in increasing lexicographic order.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&k| k as i64).collect())
            .collect()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.n])
    }

    /// Checks the standing assumptions `f != 0` and `f(0) = 0`.
    pub fn check_vanishes_at_origin(&self) -> Result<(), PolyError> {
        if self.is_zero() {
            return Err(PolyError::Zero);
        }
        if !self.constant_term().is_zero() {
            return Err(PolyError::NonzeroConstant);
        }
        Ok(())
    }

    /// Terms whose exponents lie in `points`.
    pub fn restrict_to_points(&self, points: &[Vec<i64>]) -> IntPolynomial {
        let wanted: BTreeSet<Vec<u32>> = points
            .iter()
            .map(|p| p.iter().map(|&k| k as u32).collect())
            .collect();
        IntPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| wanted.contains(*e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> IntPolynomial {
        assert!(var < self.n);
        let terms = self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut e = e.clone();
            let k = e[var];
            e[var] -= 1;
            (e, c * BigInt::from(k))
        });
        IntPolynomial::new(self.n, terms)
    }

    /// Evaluate at an integer point modulo `m`.
    pub fn eval_mod(&self, x: &[u64], m: u64) -> u64 {
        let mut acc: u128 = 0;
        let mm = m as u128;
        for (e, c) in &self.terms {
            let cm = c.mod_floor_u64(m) as u128;
            let mut term = cm;
            for (xi, &k) in x.iter().zip(e) {
                term = term * crate::arith::pow_mod(*xi, k as u64, m) as u128 % mm;
            }
            acc = (acc + term) % mm;
        }
        acc as u64
    }

    /// Reduce coefficients modulo `m` into `[0, m)`, keeping exponents.
    pub fn coefficients_mod(&self, m: u64) -> Vec<(Vec<u32>, u64)> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.mod_floor_u64(m)))
            .collect()
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        let r = self % BigInt::from(m);
        let r = if r.is_negative() { r + BigInt::from(m) } else { r };
        r.to_u64().expect("residue fits in u64")
    }
}

/// Parse a polynomial written like `x^3 + x*y + y^2 + z^2` or `2xy - 3 z^4`.
///
/// `n` fixes the number of variables; variables beyond the first `n` are rejected.
pub fn parse_polynomial(text: &str, n: usize) -> Result<IntPolynomial, PolyError> {
    if n == 0 || n > MAX_VARS {
        return Err(PolyError::BadDimension(n));
    }
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(PolyError::UnexpectedEnd);
    }
    let mut pos = 0usize;
    let mut terms: Vec<(Vec<u32>, BigInt)> = Vec::new();
    let mut first = true;
    while pos < chars.len() {
        let mut sign = BigInt::one();
        match chars[pos].1 {
            '+' => pos += 1,
            '-' => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            ch => return Err(PolyError::UnexpectedChar { pos: chars[pos].0, ch }),
        }
        first = false;
        let (exps, coeff) = parse_term(&chars, &mut pos, n)?;
        terms.push((exps, sign * coeff));
    }
    Ok(IntPolynomial::new(n, terms))
}

fn parse_digits(chars: &[(usize, char)], pos: &mut usize) -> Option<String> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].1.is_ascii_digit() {
        *pos += 1;
    }
    (*pos > start).then(|| chars[start..*pos].iter().map(|(_, c)| c).collect())
}

fn parse_term(chars: &[(usize, char)], pos: &mut usize, n: usize) -> Result<(Vec<u32>, BigInt), PolyError> {
    let mut exps = vec![0u32; n];
    let mut coeff = BigInt::one();
    let mut saw_factor = false;
    if let Some(digits) = parse_digits(chars, pos) {
        coeff = digits.parse().expect("digits parse as an integer");
        saw_factor = true;
    }
    loop {
        if *pos >= chars.len() {
            break;
        }
        let (at, ch) = chars[*pos];
        if ch == '*' {
            if !saw_factor {
                return Err(PolyError::UnexpectedChar { pos: at, ch });
            }
            *pos += 1;
            if *pos >= chars.len() {
                return Err(PolyError::UnexpectedEnd);
            }
            continue;
        }
        if ch == '+' || ch == '-' {
            break;
        }
        let idx = VARIABLES
            .iter()
            .position(|&v| v == ch)
            .ok_or(PolyError::UnexpectedChar { pos: at, ch })?;
        if idx >= n {
            return Err(PolyError::VariableOutOfRange { var: ch, n });
        }
        *pos += 1;
        let mut k = 1u32;
        if *pos < chars.len() && chars[*pos].1 == '^' {
            *pos += 1;
            let digits = parse_digits(chars, pos).ok_or_else(|| match chars.get(*pos) {
                Some(&(at, ch)) => PolyError::UnexpectedChar { pos: at, ch },
                None => PolyError::UnexpectedEnd,
            })?;
            k = digits.parse().map_err(|_| PolyError::ExponentOverflow(at))?;
        }
        exps[idx] = exps[idx].checked_add(k).ok_or(PolyError::ExponentOverflow(at))?;
        saw_factor = true;
    }
    if !saw_factor {
        return match chars.get(*pos) {
            Some(&(at, ch)) => Err(PolyError::UnexpectedChar { pos: at, ch }),
            None => Err(PolyError::UnexpectedEnd),
        };
    }
    Ok((exps, coeff))
}

fn render_monomial(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { VARIABLES[i].to_string() } else { format!("{}^{}", VARIABLES[i], k) })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = render_monomial(e);
            let abs = c.abs();
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_canonically() {
        let f = parse_polynomial("z^2 + y^2 + x*y + x^3", 3).unwrap();
        assert_eq!(f.to_string(), "x^3 + x*y + y^2 + z^2");
        let g = parse_polynomial("2xy - 3 z^4 + x x", 3).unwrap();
        assert_eq!(g.to_string(), "x^2 + 2*x*y - 3*z^4");
        assert_eq!(g.coefficient(&[1, 1, 0]), BigInt::from(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_polynomial("x^", 3), Err(PolyError::UnexpectedEnd)));
        assert!(matches!(parse_polynomial("x + w", 3), Err(PolyError::VariableOutOfRange { .. })));
        assert!(matches!(parse_polynomial("x # y", 3), Err(PolyError::UnexpectedChar { .. })));
        assert!(matches!(parse_polynomial("x*", 2), Err(PolyError::UnexpectedEnd)));
        assert_eq!(parse_polynomial("x - x", 2).unwrap().check_vanishes_at_origin(), Err(PolyError::Zero));
        assert_eq!(
            parse_polynomial("x + 1", 2).unwrap().check_vanishes_at_origin(),
            Err(PolyError::NonzeroConstant)
        );
    }

    #[test]
    fn derivative_and_mod_eval() {
        let f = parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap();
        assert_eq!(f.partial_derivative(0).to_string(), "3*x^2 + y");
        assert_eq!(f.eval_mod(&[1, 2, 3], 5), (1 + 2 + 4 + 9) % 5);
        let g = parse_polynomial("-x", 1).unwrap();
        assert_eq!(g.eval_mod(&[2], 7), 5);
    }
}
