//! Local zeta functions over `p Z_p^n` for polynomials non-degenerate over `F_p`.
//!
//! The function is assembled face by face:
//! `Z = sum over compact faces tau of L_tau * S(Delta_tau)`, with
//! `L_tau = ((p-1)/p)^n - (N_tau / p^(n-1)) (1 - t)/(p - t)` and
//! `S(Delta) = sum over simplicial pieces of sum_h p^sigma(h) t^(M - m(h)) / prod(p^sigma_j - t^m_j)`,
//! where `t = p^(-s)`, `N_tau` counts torus zeros of `f_tau`, `h` runs over the fundamental
//! parallelepiped of the piece and `M` is the sum of the generator weights `m_j`.
//! With a multiplicative character of order `d >= 2` the same cone sums are paired with
//! `L_tau = p^(-n) sum_x chi_bar(f_tau(x))`.

mod b1;
mod reduce;
mod symbolic;

pub use b1::*;
pub use reduce::*;
pub use symbolic::*;

use crate::cyclotomic::CyclotomicNumber;
use crate::field::{q, qpow, Field};
use crate::finite_field::{self, check_prime, Degeneracy, FieldError};
use crate::lattice::{Convention, LatticeError, SimplicialCone};
use crate::newton::{FaceId, NewtonError, NewtonPolyhedron};
use crate::polynomial::{IntPolynomial, PolyError};
use crate::upoly::UPoly;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZetaError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("f is degenerate over F_p on face {} at torus point {:?}", .0.face, .0.point)]
    Degenerate(Degeneracy),
    #[error("the character must be nontrivial (order at least 2)")]
    TrivialCharacter,
}

impl From<NewtonError> for ZetaError {
    fn from(e: NewtonError) -> Self {
        match e {
            NewtonError::Poly(p) => ZetaError::Poly(p),
            NewtonError::BadWeight { .. } => unreachable!("weights are generated internally"),
        }
    }
}

/// Parallelepiped data of one simplicial piece: generator weights and lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceSeries {
    /// `(m_j, sigma_j)` per generator.
    pub weights: Vec<(i64, i64)>,
    /// `(sigma(h), m(h))` per parallelepiped point.
    pub points: Vec<(i64, i64)>,
    pub multiplicity: u64,
}

/// Parallelepiped of the cone spanned by `generators`, with `m` extended linearly from
/// the generator values `ms`.
pub fn piece_series(generators: &[Vec<i64>], ms: &[i64], convention: Convention) -> Result<PieceSeries, LatticeError> {
    let cone = SimplicialCone::new(generators.to_vec())?;
    let pts = cone.enumerate_parallelepiped(convention)?;
    let points = pts
        .iter()
        .map(|pp| {
            let m: BigRational = pp.coeffs.iter().zip(ms).map(|(c, &m)| c * q(m)).sum();
            assert!(m.is_integer(), "m is integral on lattice points of the cone");
            (pp.point.iter().sum::<i64>(), m.to_integer().to_i64().expect("small weight"))
        })
        .collect();
    Ok(PieceSeries {
        weights: generators.iter().zip(ms).map(|(g, &m)| (m, g.iter().sum())).collect(),
        points,
        multiplicity: cone.multiplicity(),
    })
}

impl PieceSeries {
    /// `sum_h p^sigma(h) t^(M - m(h)) / prod(p^sigma_j - t^m_j)` at the prime `p`.
    pub fn at_prime<K: Field>(&self, p: u64) -> ZetaRational<K> {
        let total_m: i64 = self.weights.iter().map(|w| w.0).sum();
        let mut num = UPoly::zero();
        for &(sigma_h, m_h) in &self.points {
            num = num.add(&UPoly::monomial(K::from_rational(&qpow(p, sigma_h)), (total_m - m_h) as usize));
        }
        let mut tags = BTreeMap::new();
        let mut scalar = q(1);
        for &(m, sigma) in &self.weights {
            if m == 0 {
                scalar /= qpow(p, sigma) - q(1);
            } else {
                *tags.entry(DenFactor::Power { m, sigma }).or_insert(0) += 1;
            }
        }
        ZetaRational::new(p, num.scale(&K::from_rational(&scalar)), tags)
    }
}

/// Simplicial pieces of the cone of a face, as facet indices with their series.
pub fn face_cone_series(np: &NewtonPolyhedron, face: FaceId, convention: Convention) -> Result<Vec<(Vec<usize>, PieceSeries)>, LatticeError> {
    np.cone_pieces(face)
        .into_iter()
        .map(|piece| {
            let gens: Vec<Vec<i64>> = piece.iter().map(|&j| np.facets()[j].normal.clone()).collect();
            let ms: Vec<i64> = piece.iter().map(|&j| np.facets()[j].m).collect();
            piece_series(&gens, &ms, convention).map(|s| (piece, s))
        })
        .collect()
}

/// `S(Delta)` for the open cone spanned by arbitrary generators, with `m` linear in the
/// given values on each piece.
pub fn cone_sum_at_prime<K: Field>(
    generators: &[Vec<i64>],
    ms: &[i64],
    pieces: &[Vec<usize>],
    p: u64,
) -> Result<ZetaRational<K>, LatticeError> {
    let mut acc = ZetaRational::zero(p);
    for piece in pieces {
        let gens: Vec<Vec<i64>> = piece.iter().map(|&i| generators[i].clone()).collect();
        let pm: Vec<i64> = piece.iter().map(|&i| ms[i]).collect();
        acc = acc.add(&piece_series(&gens, &pm, Convention::HalfOpenLow)?.at_prime(p));
    }
    Ok(acc)
}

/// One row of the face table.
#[derive(Clone, Debug)]
pub struct FaceContribution<K: Field> {
    pub face: FaceId,
    pub label: String,
    pub restriction: IntPolynomial,
    /// `N_tau` (concrete mode only).
    pub count: Option<u64>,
    pub l: ZetaRational<K>,
    pub s: ZetaRational<K>,
    pub pieces: Vec<(Vec<usize>, u64)>,
}

/// The local zeta function with its face-by-face decomposition.
#[derive(Clone, Debug)]
pub struct ZetaComputation<K: Field> {
    pub p: u64,
    pub faces: Vec<FaceContribution<K>>,
    pub total: ZetaRational<K>,
    pub reduced: ReducedZeta<K>,
}

/// `L_tau` for a face with `N_tau` torus zeros.
pub fn l_factor(n: usize, p: u64, count: u64) -> ZetaRational<BigRational> {
    let base = (q(p as i64 - 1) / q(p as i64)).pow(n as i32);
    if count == 0 {
        return ZetaRational::constant(p, base);
    }
    let c = q(count as i64) / qpow(p, n as i64 - 1);
    // base * (p - t) - c * (1 - t), over (p - t).
    let num = UPoly::new(vec![&base * q(p as i64) - &c, &c - &base]);
    let mut tags = BTreeMap::new();
    tags.insert(DenFactor::Shift, 1);
    ZetaRational::new(p, num, tags)
}

fn prepare(f: &IntPolynomial, p: u64) -> Result<NewtonPolyhedron, ZetaError> {
    check_prime(p)?;
    let np = NewtonPolyhedron::new(f)?;
    if let Some(w) = finite_field::nondegeneracy_witness(&np, p)? {
        return Err(ZetaError::Degenerate(w));
    }
    Ok(np)
}

fn assemble<K: Field>(
    np: &NewtonPolyhedron,
    p: u64,
    mut l_of: impl FnMut(FaceId, &IntPolynomial) -> Result<(Option<u64>, ZetaRational<K>), ZetaError>,
) -> Result<ZetaComputation<K>, ZetaError> {
    let mut faces = Vec::new();
    let mut total = ZetaRational::zero(p);
    for face in np.compact_faces() {
        let restriction = np.restriction(face.id);
        let (count, l) = l_of(face.id, &restriction)?;
        let series = face_cone_series(np, face.id, Convention::HalfOpenLow)?;
        let s = series.iter().fold(ZetaRational::zero(p), |acc, (_, ps)| acc.add(&ps.at_prime(p)));
        total = total.add(&l.mul(&s));
        faces.push(FaceContribution {
            face: face.id,
            label: face.label(),
            restriction,
            count,
            l,
            s,
            pieces: series.iter().map(|(pc, ps)| (pc.clone(), ps.multiplicity)).collect(),
        });
    }
    let reduced = total.reduce();
    Ok(ZetaComputation { p, faces, total, reduced })
}

/// `Z_f(s)` as a rational function of `t = p^(-s)`.
pub fn local_igusa_zeta(f: &IntPolynomial, p: u64) -> Result<ZetaComputation<BigRational>, ZetaError> {
    let np = prepare(f, p)?;
    local_igusa_zeta_with(&np, p)
}

/// Same as [`local_igusa_zeta`] for an already built polyhedron; skips the
/// non-degeneracy check.
pub fn local_igusa_zeta_with(np: &NewtonPolyhedron, p: u64) -> Result<ZetaComputation<BigRational>, ZetaError> {
    let n = np.nvars();
    assemble(np, p, |_, ft| {
        let count = finite_field::count_torus_solutions(ft, p)?;
        Ok((Some(count), l_factor(n, p, count)))
    })
}

/// `Z_f(s, chi)` for the character of order `d` with `chi_bar(g) = zeta_d`, `g` the
/// smallest primitive root mod `p`.
pub fn character_zeta(f: &IntPolynomial, p: u64, d: u64) -> Result<ZetaComputation<CyclotomicNumber>, ZetaError> {
    if d < 2 {
        return Err(ZetaError::TrivialCharacter);
    }
    let np = prepare(f, p)?;
    let n = np.nvars();
    let scale = CyclotomicNumber::rational(qpow(p, -(n as i64)));
    assemble(&np, p, |_, ft| {
        let sum = finite_field::character_sum(ft, p, d)?;
        Ok((None, ZetaRational::constant(p, sum.mul(&scale))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    #[test]
    fn single_variable_cases() {
        // f = z in three variables: (p-1) t / (p^3 (p - t)).
        let f = parse_polynomial("z", 3).unwrap();
        for p in [3u64, 5] {
            let z = local_igusa_zeta(&f, p).unwrap().reduced;
            let mut tags = BTreeMap::new();
            tags.insert(DenFactor::Shift, 1);
            let expect = ZetaRational::new(p, UPoly::monomial(q(p as i64 - 1) / qpow(p, 3), 1), tags).reduce();
            assert_eq!(z, expect);
        }
    }

    #[test]
    fn character_twist_of_z_vanishes() {
        let f = parse_polynomial("z", 3).unwrap();
        let z = character_zeta(&f, 5, 2).unwrap();
        assert!(z.reduced.numerator.is_zero());
    }

    /// `(p-1)(p^3 - t) t^2 / (p^3 (p - t)(p^3 - t^2))`.
    fn example_closed_form(p: u64) -> ReducedZeta<BigRational> {
        let pp = q(p as i64);
        let num = UPoly::new(vec![q(0), q(0), pp.pow(3), q(-1)]).scale(&((&pp - q(1)) / pp.pow(3)));
        let mut tags = BTreeMap::new();
        tags.insert(DenFactor::Shift, 1);
        tags.insert(DenFactor::Power { m: 2, sigma: 3 }, 1);
        ZetaRational::new(p, num, tags).reduce()
    }

    #[test]
    fn example_closed_form_at_small_primes() {
        let f = parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap();
        for p in [3u64, 5, 7] {
            let z = local_igusa_zeta(&f, p).unwrap();
            assert_eq!(z.faces.len(), 11);
            assert_eq!(z.reduced, example_closed_form(p));
            assert!(!z.reduced.survives(crate::newton::PoleClass { m: 2, sigma: 3, e: 3 }));
        }
    }

    #[test]
    fn example_symbolic_has_no_count_symbols() {
        let f = parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap();
        let z = local_igusa_zeta_symbolic(&f).unwrap();
        assert!(!z.depends_on_symbols(), "{}", z.reduced.render(&z.names));
        let np = NewtonPolyhedron::new(&f).unwrap();
        for p in [3u64, 5] {
            assert_eq!(z.specialize(&np, p).unwrap(), example_closed_form(p));
        }
    }
}
