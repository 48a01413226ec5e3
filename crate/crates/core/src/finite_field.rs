//! Exhaustive computations over the torus `(F_p^x)^n`.

use crate::arith::{is_prime, primitive_root};
use crate::cyclotomic::CyclotomicNumber;
use crate::newton::{FaceId, NewtonPolyhedron};
use crate::polynomial::IntPolynomial;
use serde::Serialize;
use thiserror::Error;

/// Largest torus size enumerated point by point.
pub const TORUS_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("torus of size {0} exceeds the enumeration budget {TORUS_BUDGET}")]
    TooLarge(u64),
    #[error("character order {d} does not divide p - 1 = {}", .p - 1)]
    BadCharacterOrder { d: u64, p: u64 },
}

pub fn check_prime(p: u64) -> Result<(), FieldError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(FieldError::NotPrime(p))
    }
}

/// Evaluates a fixed polynomial modulo `p` using precomputed power tables.
struct ModEvaluator {
    p: u64,
    terms: Vec<(u64, Vec<u32>)>,
    powers: Vec<Vec<u64>>,
}

impl ModEvaluator {
    fn new(f: &IntPolynomial, p: u64) -> Self {
        let terms: Vec<(u64, Vec<u32>)> =
            f.coefficients_mod(p).into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (c, e)).collect();
        let max_e = terms.iter().flat_map(|(_, e)| e.iter().copied()).max().unwrap_or(0) as usize;
        let powers = (0..p)
            .map(|x| {
                let mut row = Vec::with_capacity(max_e + 1);
                let mut acc = 1 % p;
                for _ in 0..=max_e {
                    row.push(acc);
                    acc = acc * x % p;
                }
                row
            })
            .collect();
        ModEvaluator { p, terms, powers }
    }

    fn eval(&self, x: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (c, e) in &self.terms {
            let mut t = *c;
            for (xi, &k) in x.iter().zip(e) {
                t = t * self.powers[*xi as usize][k as usize] % self.p;
            }
            acc = (acc + t) % self.p;
        }
        acc
    }
}

/// Calls `visit` on every point of `(F_p^x)^n`.
fn for_each_torus_point(n: usize, p: u64, mut visit: impl FnMut(&[u64])) -> Result<(), FieldError> {
    let size = (p - 1).checked_pow(n as u32).unwrap_or(u64::MAX);
    if size > TORUS_BUDGET {
        return Err(FieldError::TooLarge(size));
    }
    let mut x = vec![1u64; n];
    loop {
        visit(&x);
        let mut i = 0;
        loop {
            if i == n {
                return Ok(());
            }
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 1;
            i += 1;
        }
    }
}

/// `#{x in (F_p^x)^n : f(x) = 0}`.
pub fn count_torus_solutions(f: &IntPolynomial, p: u64) -> Result<u64, FieldError> {
    check_prime(p)?;
    let ev = ModEvaluator::new(f, p);
    let mut count = 0u64;
    for_each_torus_point(f.nvars(), p, |x| {
        if ev.eval(x) == 0 {
            count += 1;
        }
    })?;
    Ok(count)
}

/// A compact face whose restriction has a singular zero on the torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Degeneracy {
    pub face: FaceId,
    pub point: Vec<u64>,
}

/// Checks that no `f_tau` (compact `tau`) has a common zero with all its partials on the torus.
pub fn nondegeneracy_witness(np: &NewtonPolyhedron, p: u64) -> Result<Option<Degeneracy>, FieldError> {
    check_prime(p)?;
    for face in np.compact_faces() {
        let ft = np.restriction(face.id);
        let mut evs = vec![ModEvaluator::new(&ft, p)];
        for i in 0..np.nvars() {
            evs.push(ModEvaluator::new(&ft.partial_derivative(i), p));
        }
        let mut witness: Option<Vec<u64>> = None;
        for_each_torus_point(np.nvars(), p, |x| {
            if witness.is_none() && evs.iter().all(|e| e.eval(x) == 0) {
                witness = Some(x.to_vec());
            }
        })?;
        if let Some(point) = witness {
            return Ok(Some(Degeneracy { face: face.id, point }));
        }
    }
    Ok(None)
}

pub fn is_nondegenerate_fp(np: &NewtonPolyhedron, p: u64) -> Result<bool, FieldError> {
    Ok(nondegeneracy_witness(np, p)?.is_none())
}

/// Discrete logarithms base the smallest primitive root; index 0 is unused.
fn discrete_logs(p: u64) -> Vec<u64> {
    let g = primitive_root(p);
    let mut logs = vec![0u64; p as usize];
    let mut acc = 1u64;
    for a in 0..p - 1 {
        logs[acc as usize] = a;
        acc = acc * g % p;
    }
    logs
}

/// `sum_{x in torus} chi_bar(f(x))`, where `chi_bar(g) = zeta_d` for the smallest
/// primitive root `g` and `chi_bar(0) = 0`.
pub fn character_sum(f: &IntPolynomial, p: u64, d: u64) -> Result<CyclotomicNumber, FieldError> {
    check_prime(p)?;
    if d == 0 || (p - 1) % d != 0 {
        return Err(FieldError::BadCharacterOrder { d, p });
    }
    let logs = discrete_logs(p);
    let ev = ModEvaluator::new(f, p);
    let mut bins = vec![0i64; d as usize];
    for_each_torus_point(f.nvars(), p, |x| {
        let v = ev.eval(x);
        if v != 0 {
            bins[(logs[v as usize] % d) as usize] += 1;
        }
    })?;
    Ok(CyclotomicNumber::from_counts(d as u32, &bins))
}

/// Sum of `chi_bar` over `F_p^x`; zero for any nontrivial character.
pub fn character_total(p: u64, d: u64) -> Result<CyclotomicNumber, FieldError> {
    let f = IntPolynomial::from_terms(1, &[(1, &[1])]);
    character_sum(&f, p, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Field};
    use crate::polynomial::parse_polynomial;

    #[test]
    fn counts_of_small_curves() {
        // x^2 + y^2 = 0 on the torus: (p-1) * #{x : x^2 = -1}.
        let f = parse_polynomial("x^2 + y^2", 2).unwrap();
        assert_eq!(count_torus_solutions(&f, 5).unwrap(), 8);
        assert_eq!(count_torus_solutions(&f, 7).unwrap(), 0);
        let g = parse_polynomial("x*y + x^3", 2).unwrap();
        assert_eq!(count_torus_solutions(&g, 5).unwrap(), 4);
    }

    #[test]
    fn rejects_composites_and_bad_orders() {
        let f = parse_polynomial("x", 1).unwrap();
        assert_eq!(count_torus_solutions(&f, 9), Err(FieldError::NotPrime(9)));
        assert_eq!(character_sum(&f, 7, 4).unwrap_err(), FieldError::BadCharacterOrder { d: 4, p: 7 });
    }

    #[test]
    fn character_sums_vanish() {
        for (p, d) in [(5, 2), (5, 4), (7, 3), (13, 12)] {
            assert!(character_total(p, d).unwrap().is_zero());
        }
        let f = parse_polynomial("x^2", 1).unwrap();
        assert_eq!(character_sum(&f, 5, 2).unwrap(), CyclotomicNumber::rational(q(4)));
    }

    #[test]
    fn degenerate_face_is_found() {
        // (x + y)^2 restricted to its edge is singular along x = -y.
        let np = NewtonPolyhedron::new(&parse_polynomial("x^2 + 2*x*y + y^2", 2).unwrap()).unwrap();
        assert!(!is_nondegenerate_fp(&np, 5).unwrap());
        let np = NewtonPolyhedron::new(&parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap()).unwrap();
        assert!(is_nondegenerate_fp(&np, 5).unwrap());
    }
}
