//! The local motivic zeta function of a polynomial non-degenerate over `C`.
//!
//! Coefficients live in a Laurent ring in `L` and one symbol per face class that cannot
//! be written down directly; `T` plays the role of `L^(-s)`. Faces lying in coordinate
//! hyperplanes use the primed classes and the extended cones, so no `1 - L^(-1)` ever
//! appears in a denominator. Specializing `L -> p`, `T -> t` and the class symbols to point
//! counts recovers the p-adic function.

use crate::field::{q, qpow};
use crate::finite_field::{self, count_torus_solutions};
use crate::lattice::Convention;
use crate::mpoly::MPoly;
use crate::newton::{FaceId, NewtonPolyhedron, PoleClass};
use crate::polynomial::IntPolynomial;
use crate::zeta::{
    class_rule, face_cone_series, piece_series, symbol_faces, ClassRule, ReducedZeta, SymRational, ZetaError, P_VAR, T_VAR,
};
use num_rational::BigRational;
use std::collections::BTreeMap;
use thiserror::Error;

/// Index of `L` in motivic coefficients.
pub const L_VAR: usize = P_VAR;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MotivicError {
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("no value supplied for the class symbol {0}")]
    MissingSymbol(String),
}

/// One compact face with its factors.
#[derive(Clone, Debug)]
pub struct MotivicFace {
    pub face: FaceId,
    pub label: String,
    /// Coordinates `rho` with the face inside `x_rho = 0`.
    pub hyperplanes: Vec<usize>,
    /// `[X_tau]`, or `[X'_tau]` when `hyperplanes` is non-empty.
    pub class: MPoly,
    pub l: SymRational,
    pub s: SymRational,
}

#[derive(Clone, Debug)]
pub struct MotivicZeta {
    /// `T`, `L`, then one `X[...]` per symbol face.
    pub names: Vec<String>,
    pub symbol_faces: Vec<FaceId>,
    pub faces: Vec<MotivicFace>,
    pub total: SymRational,
    pub reduced: SymRational,
    /// Primes at which `f` was checked non-degenerate over `F_p`, as a stand-in for the
    /// hypothesis over `C`.
    pub checked_primes: Vec<(u64, bool)>,
}

fn coordinate_hyperplanes(np: &NewtonPolyhedron, face: FaceId) -> Vec<usize> {
    let vs = &np.face(face).vertices;
    (0..np.nvars()).filter(|&r| vs.iter().all(|v| v[r] == 0)).collect()
}

/// Class of the face in `n - |P_tau|` torus variables, as a polynomial in `L` and symbols.
fn primed_class(np: &NewtonPolyhedron, face: FaceId, symbols: &[FaceId], nv: usize) -> MPoly {
    let n = np.nvars();
    let p_tau = coordinate_hyperplanes(np, face).len();
    match class_rule(np, face) {
        ClassRule::Zero => MPoly::zero(nv),
        ClassRule::Symbol => {
            let idx = symbols.iter().position(|&s| s == face).expect("symbol registered");
            MPoly::var(nv, 2 + idx)
        }
        ClassRule::Split { base, .. } => {
            let lm1 = MPoly::var(nv, L_VAR).sub(&MPoly::one(nv));
            let p_base = coordinate_hyperplanes(np, base).len();
            let b = primed_class(np, base, symbols, nv);
            lm1.pow((n - p_tau - 1) as u32).sub(&lm1.pow((p_base - p_tau - 1) as u32).mul(&b))
        }
    }
}

/// `Z_mot(T)` by the face formula.
pub fn motivic_local_zeta(f: &IntPolynomial) -> Result<MotivicZeta, ZetaError> {
    let np = NewtonPolyhedron::new(f)?;
    let n = np.nvars();
    let symbols = symbol_faces(&np);
    let nv = 2 + symbols.len();
    let mut names = vec!["T".to_string(), "L".to_string()];
    names.extend(symbols.iter().map(|&s| format!("X{}", np.face(s).label())));
    let one = MPoly::one(nv);
    let lvar = MPoly::var(nv, L_VAR);
    let one_minus_linv = one.sub(&MPoly::var_pow(nv, L_VAR, -1));
    let shift_atom = PoleClass { m: 1, sigma: 1, e: 1 };
    let mut faces = Vec::new();
    let mut total = SymRational::zero(nv);
    for face in np.compact_faces() {
        let hyperplanes = coordinate_hyperplanes(&np, face.id);
        let d = n - hyperplanes.len();
        let class = primed_class(&np, face.id, &symbols, nv);
        // (1 - L^-1)^d - L^-d [X] (1 - T)/(1 - L^-1 T), with 1/(1 - L^-1 T) = -L/(T - L).
        let mut l = SymRational::from_poly(one_minus_linv.pow(d as u32));
        if !class.is_zero() {
            let one_minus_t = one.sub(&MPoly::var(nv, T_VAR));
            let mut extra = SymRational::from_poly(class.mul(&one_minus_t).shift(L_VAR, 1 - d as i32));
            extra.atoms.insert(shift_atom, 1);
            l = l.add(&extra);
        }
        let mut s = SymRational::zero(nv);
        for (_, piece) in face_cone_series(&np, face.id, Convention::HalfOpenHigh)? {
            let in_hyperplanes = piece.weights.iter().filter(|w| w.0 == 0).count();
            let mut num = MPoly::zero(nv);
            for &(sigma_h, m_h) in &piece.points {
                let mut e = vec![0i32; nv];
                e[T_VAR] = m_h as i32;
                e[L_VAR] = -(sigma_h as i32);
                num = num.add(&MPoly::monomial(e, q(1)));
            }
            num = num.mul(&one_minus_linv.pow((hyperplanes.len() - in_hyperplanes) as u32));
            let mut term = SymRational::from_poly(num);
            for &(m, sigma) in piece.weights.iter().filter(|w| w.0 > 0) {
                // 1/(1 - L^-sigma T^m) = -L^sigma / prod of atoms.
                term.num = term.num.mul(&lvar.pow(sigma as u32)).neg();
                for c in PoleClass::of_family(m, sigma) {
                    *term.atoms.entry(c).or_insert(0) += 1;
                }
            }
            s = s.add(&term);
        }
        total = total.add(&l.mul(&s));
        faces.push(MotivicFace { face: face.id, label: face.label(), hyperplanes, class, l, s });
    }
    let reduced = total.reduce();
    let checked_primes = [3u64, 5, 7]
        .iter()
        .map(|&p| Ok((p, finite_field::is_nondegenerate_fp(&np, p)?)))
        .collect::<Result<_, ZetaError>>()?;
    Ok(MotivicZeta { names, symbol_faces: symbols, faces, total, reduced, checked_primes })
}

impl MotivicZeta {
    /// Symbols still present after reduction.
    pub fn remaining_symbols(&self) -> Vec<String> {
        (2..self.names.len()).filter(|&v| self.reduced.num.uses_var(v)).map(|v| self.names[v].clone()).collect()
    }

    /// `L -> p`, `T -> t`, symbols from `values` (keyed by face).
    pub fn specialize(
        &self,
        p: u64,
        values: &BTreeMap<FaceId, BigRational>,
    ) -> Result<ReducedZeta<BigRational>, MotivicError> {
        let mut subs = Vec::new();
        for (i, face) in self.symbol_faces.iter().enumerate() {
            match values.get(face) {
                Some(v) => subs.push((2 + i, v.clone())),
                None => return Err(MotivicError::MissingSymbol(self.names[2 + i].clone())),
            }
        }
        Ok(self.reduced.specialize(p, &subs))
    }

    /// Class values by point counting: `[X'_tau] -> N_tau / (p - 1)^|P_tau|`.
    pub fn counted_values(&self, np: &NewtonPolyhedron, p: u64) -> Result<BTreeMap<FaceId, BigRational>, ZetaError> {
        let mut out = BTreeMap::new();
        for &face in &self.symbol_faces {
            let count = count_torus_solutions(&np.restriction(face), p)?;
            let k = coordinate_hyperplanes(np, face).len() as i32;
            out.insert(face, q(count as i64) / q(p as i64 - 1).pow(k));
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        self.reduced.render(&self.names)
    }
}

/// Checks `sum over the open cone of x^sigma(k) y^m(k)` two ways at a rational point:
/// through the low parallelepiped reflected to `sum v_j - h` (the form used by the p-adic
/// assembly) and through the high parallelepiped. Both use geometric series from zero.
/// Requires `|x^sigma_j y^m_j| < 1` for every generator.
pub fn convention_equivalence(generators: &[Vec<i64>], ms: &[i64], x: &BigRational, y: &BigRational) -> Result<bool, ZetaError> {
    let low = piece_series(generators, ms, Convention::HalfOpenLow)?;
    let high = piece_series(generators, ms, Convention::HalfOpenHigh)?;
    let mono = |sigma: i64, m: i64| x.pow(sigma as i32) * y.pow(m as i32);
    let (sig_sum, m_sum) = low.weights.iter().fold((0, 0), |(a, b), &(m, s)| (a + s, b + m));
    let mut low_v: BigRational = low.points.iter().map(|&(s, m)| mono(sig_sum - s, m_sum - m)).sum();
    let mut high_v: BigRational = high.points.iter().map(|&(s, m)| mono(s, m)).sum();
    for &(m, sigma) in &low.weights {
        let geo = q(1) / (q(1) - mono(sigma, m));
        low_v *= &geo;
        high_v *= geo;
    }
    Ok(low_v == high_v)
}

/// `p^k`, for callers comparing specializations.
pub fn lp(p: u64, k: i64) -> BigRational {
    qpow(p, k)
}
