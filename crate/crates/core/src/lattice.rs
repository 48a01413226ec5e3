//! Lattice points of simplicial cones.
//!
//! A simplicial cone is spanned by linearly independent primitive integer vectors
//! `v_1..v_r`. Its fundamental parallelepiped is the set of lattice points
//! `sum h_j v_j` with every `h_j` in `[0, 1)` (or `(0, 1]` for the high convention); it has
//! exactly `mult(cone)` elements, the gcd of the maximal minors of the generator matrix.
//!
//! For three independent vectors in `Z^3` there is an explicit parametrisation of the
//! parallelepiped by three indices; [`h3_invariants`] computes the numbers it needs and
//! [`closed_form_h3`] lists the points.

use crate::arith::{bezout, ext_gcd, floor_div, gcd, lcm, rem};
use crate::linalg::{self, coordinates, det, integer_kernel, maximal_minors, rank};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("no generators given")]
    Empty,
    #[error("generator {0} is the zero vector")]
    ZeroGenerator(usize),
    #[error("generators have inconsistent lengths")]
    RaggedInput,
    #[error("generators are linearly dependent")]
    Dependent,
    #[error("generator {0} has a negative coordinate")]
    NegativeGenerator(usize),
    #[error("parallelepiped would have {0} points, above the limit {1}")]
    TooLarge(u64, u64),
}

/// Which half-open unit interval the parallelepiped coefficients come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// Coefficients in `[0, 1)`; contains the origin.
    HalfOpenLow,
    /// Coefficients in `(0, 1]`; contains the sum of the generators.
    HalfOpenHigh,
}

/// Simplicial cone with linearly independent generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialCone {
    generators: Vec<Vec<i64>>,
}

/// One lattice point of a fundamental parallelepiped with its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelepipedPoint {
    pub point: Vec<i64>,
    pub coeffs: Vec<BigRational>,
}

/// Upper bound on parallelepiped sizes enumerated point by point.
pub const MAX_PARALLELEPIPED: u64 = 5_000_000;

fn validate(generators: &[Vec<i64>]) -> Result<usize, LatticeError> {
    let first = generators.first().ok_or(LatticeError::Empty)?;
    let n = first.len();
    for (i, g) in generators.iter().enumerate() {
        if g.len() != n {
            return Err(LatticeError::RaggedInput);
        }
        if g.iter().all(|&x| x == 0) {
            return Err(LatticeError::ZeroGenerator(i));
        }
    }
    Ok(n)
}

impl SimplicialCone {
    pub fn new(generators: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        validate(&generators)?;
        let rows: Vec<Vec<i128>> = generators.iter().map(|g| linalg::to_i128(g)).collect();
        if rank(&rows) != rows.len() {
            return Err(LatticeError::Dependent);
        }
        Ok(SimplicialCone { generators })
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators[0].len()
    }

    fn rows(&self) -> Vec<Vec<i128>> {
        self.generators.iter().map(|g| linalg::to_i128(g)).collect()
    }

    /// Index of the sublattice spanned by the generators inside the saturated lattice.
    pub fn multiplicity(&self) -> u64 {
        let g = maximal_minors(&self.rows()).into_iter().fold(0, gcd);
        g as u64
    }

    /// Coefficients of an integer vector with respect to the generators.
    pub fn coefficients_of(&self, x: &[i64]) -> Option<Vec<BigRational>> {
        coordinates(&self.rows(), &linalg::to_i128(x))
    }

    /// Lattice basis of `span(generators) ∩ Z^n`.
    pub fn saturated_basis(&self) -> Vec<Vec<i128>> {
        let n = self.ambient_dim();
        if self.dim() == n {
            return (0..n).map(|i| linalg::one_hot(n, i)).collect();
        }
        let complement = integer_kernel(&self.rows(), n);
        integer_kernel(&complement, n)
    }

    /// Reduce a lattice point of the span into the low parallelepiped.
    fn reduce(&self, x: &[i128]) -> Vec<i128> {
        let c = coordinates(&self.rows(), x).expect("point lies in the span");
        let mut out = x.to_vec();
        for (coef, g) in c.iter().zip(&self.generators) {
            let fl = coef.floor().to_integer();
            let fl = fl.to_i128().expect("small coefficient");
            for (o, gi) in out.iter_mut().zip(g) {
                *o -= fl * (*gi as i128);
            }
        }
        out
    }

    /// All lattice points of the fundamental parallelepiped, sorted lexicographically.
    ///
    /// Works by closing `{0}` under addition of a saturated lattice basis modulo the
    /// generators; the closure is the quotient group, of order `multiplicity()`.
    pub fn enumerate_parallelepiped(
        &self,
        convention: Convention,
    ) -> Result<Vec<ParallelepipedPoint>, LatticeError> {
        let mult = self.multiplicity();
        if mult > MAX_PARALLELEPIPED {
            return Err(LatticeError::TooLarge(mult, MAX_PARALLELEPIPED));
        }
        let n = self.ambient_dim();
        let basis = self.saturated_basis();
        let mut seen: BTreeSet<Vec<i128>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i128>> = VecDeque::new();
        seen.insert(vec![0; n]);
        queue.push_back(vec![0; n]);
        while let Some(x) = queue.pop_front() {
            for b in &basis {
                let y: Vec<i128> = x.iter().zip(b).map(|(a, c)| a + c).collect();
                let y = self.reduce(&y);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        debug_assert_eq!(seen.len() as u64, mult);
        let mut out: Vec<ParallelepipedPoint> = seen
            .into_iter()
            .map(|x| {
                let mut coeffs = coordinates(&self.rows(), &x).expect("point lies in the span");
                let mut point: Vec<i64> = x.iter().map(|&v| v as i64).collect();
                if convention == Convention::HalfOpenHigh {
                    for (j, c) in coeffs.iter_mut().enumerate() {
                        if c.is_zero() {
                            *c = BigRational::from_integer(1.into());
                            for (p, g) in point.iter_mut().zip(&self.generators[j]) {
                                *p += g;
                            }
                        }
                    }
                }
                ParallelepipedPoint { point, coeffs }
            })
            .collect();
        out.sort_by(|a, b| a.point.cmp(&b.point));
        Ok(out)
    }
}

/// One relatively open simplicial piece of a decomposed cone, as indices into the
/// original generator list (increasing).
pub type ConePiece = Vec<usize>;

/// Partition the relatively open cone spanned by `generators` into relatively open
/// simplicial cones, using only the given generators as rays.
///
/// Generators are inserted one at a time, from the last to the first (a placing
/// triangulation). Every face of the triangulation that is not on the boundary of the
/// whole cone becomes a piece, so lower-dimensional separating walls are included.
pub fn simplicial_decomposition(generators: &[Vec<i64>]) -> Result<Vec<ConePiece>, LatticeError> {
    let n = validate(generators)?;
    for (i, g) in generators.iter().enumerate() {
        if g.iter().any(|&x| x < 0) {
            return Err(LatticeError::NegativeGenerator(i));
        }
    }
    let rows: Vec<Vec<i128>> = generators.iter().map(|g| linalg::to_i128(g)).collect();
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    let mut k = 0usize;
    for idx in (0..rows.len()).rev() {
        if simplices.is_empty() {
            simplices.push(vec![idx]);
            k = 1;
            continue;
        }
        let mut probe: Vec<Vec<i128>> = simplices[0].iter().map(|&j| rows[j].clone()).collect();
        probe.push(rows[idx].clone());
        if rank(&probe) > k {
            for s in simplices.iter_mut() {
                s.push(idx);
                s.sort_unstable();
            }
            k += 1;
            continue;
        }
        let cols = projection_columns(&probe[..k], n);
        let mut added = Vec::new();
        for (facet, opposite) in boundary_facets(&simplices) {
            let sg = facet_side(&rows, &facet, &rows[idx], &cols);
            let sa = facet_side(&rows, &facet, &rows[opposite], &cols);
            if sg != 0 && sg == -sa {
                let mut s = facet.clone();
                s.push(idx);
                s.sort_unstable();
                added.push(s);
            }
        }
        simplices.extend(added);
    }
    let boundary: Vec<Vec<usize>> = boundary_facets(&simplices).into_iter().map(|(f, _)| f).collect();
    let mut pieces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in &simplices {
        for mask in 1u32..(1 << s.len()) {
            let face: Vec<usize> = s.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect();
            let on_boundary = boundary.iter().any(|f| face.iter().all(|i| f.contains(i)));
            if !on_boundary {
                pieces.insert(face);
            }
        }
    }
    Ok(pieces.into_iter().collect())
}

/// Facets of maximal simplices lying in exactly one simplex, with the opposite vertex.
fn boundary_facets(simplices: &[Vec<usize>]) -> Vec<(Vec<usize>, usize)> {
    let mut count: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
    for s in simplices {
        for (skip, &opp) in s.iter().enumerate() {
            let facet: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &i)| i).collect();
            let e = count.entry(facet).or_insert((0, opp));
            e.0 += 1;
        }
    }
    count.into_iter().filter(|(_, (c, _))| *c == 1).map(|(f, (_, opp))| (f, opp)).collect()
}

/// Coordinate subset on which projection of the span of `basis` is injective.
fn projection_columns(basis: &[Vec<i128>], n: usize) -> Vec<usize> {
    for cols in linalg::combinations(n, basis.len()) {
        let sub: Vec<Vec<i128>> = basis.iter().map(|v| cols.iter().map(|&c| v[c]).collect()).collect();
        if det(&sub) != 0 {
            return cols;
        }
    }
    unreachable!("independent vectors have a nonzero maximal minor")
}

fn facet_side(rows: &[Vec<i128>], facet: &[usize], x: &[i128], cols: &[usize]) -> i128 {
    let mut m: Vec<Vec<i128>> = facet.iter().map(|&i| cols.iter().map(|&c| rows[i][c]).collect()).collect();
    m.push(cols.iter().map(|&c| x[c]).collect());
    det(&m).signum()
}

/// Divisibility data of three independent vectors `w1, w2, w3` in `Z^3`.
///
/// `mu_i` is the multiplicity of the pair obtained by dropping `w_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuProfile {
    pub mu: i128,
    pub mu1: i128,
    pub mu2: i128,
    pub mu3: i128,
    pub gamma: i128,
    pub lambda: i128,
    pub phi1: i128,
    pub phi2: i128,
    pub phi3: i128,
}

/// Signed minors `d_ij = det(M_ij)` of the matrix with rows `w1, w2, w3`.
pub fn signed_minors(w: &[[i64; 3]; 3]) -> [[i128; 3]; 3] {
    let mut out = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let sub: Vec<Vec<i128>> = (0..3)
                .filter(|&r| r != i)
                .map(|r| (0..3).filter(|&c| c != j).map(|c| w[r][c] as i128).collect())
                .collect();
            out[i][j] = det(&sub);
        }
    }
    out
}

pub fn determinant3(w: &[[i64; 3]; 3]) -> i128 {
    det(&w.iter().map(|r| linalg::to_i128(r)).collect::<Vec<_>>())
}

pub fn mu_profile(w: &[[i64; 3]; 3]) -> Result<MuProfile, LatticeError> {
    let d = determinant3(w);
    if d == 0 {
        return Err(LatticeError::Dependent);
    }
    let m = signed_minors(w);
    let mu_i = |i: usize| m[i].iter().fold(0, |g, &x| gcd(g, x));
    let (mu, mu1, mu2, mu3) = (d.abs(), mu_i(0), mu_i(1), mu_i(2));
    Ok(MuProfile {
        mu,
        mu1,
        mu2,
        mu3,
        gamma: gcd(mu1, mu2),
        lambda: lcm(mu1, mu2),
        phi1: mu / (mu2 * mu3),
        phi2: mu / (mu1 * mu3),
        phi3: mu / (mu1 * mu2),
    })
}

/// Smallest `xi` in `[0, modulus)` with `(wa + xi * wb) / modulus` integral, by search.
pub fn xi_pair(wa: &[i64], wb: &[i64], modulus: i128) -> Option<i128> {
    (0..modulus).find(|&xi| wa.iter().zip(wb).all(|(&a, &b)| rem(a as i128 + xi * b as i128, modulus) == 0))
}

/// The same `xi` obtained by solving the coordinate congruences `b_c x = -a_c (mod modulus)`.
pub fn xi_pair_crt(wa: &[i64], wb: &[i64], modulus: i128) -> Option<i128> {
    let system: Vec<Congruence> = wa
        .iter()
        .zip(wb)
        .map(|(&a, &b)| Congruence { a: b as i128, b: -(a as i128), modulus })
        .collect();
    match solve_congruences(&system) {
        CongruenceSolution::Solved { residue, .. } => Some(residue),
        CongruenceSolution::Infeasible { .. } => None,
    }
}

/// The congruence `a * x = b (mod modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Congruence {
    pub a: i128,
    pub b: i128,
    pub modulus: i128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CongruenceSolution {
    /// All solutions are `residue + k * modulus`, with `0 <= residue < modulus`.
    Solved { residue: i128, modulus: i128 },
    /// Congruence `first` alone is unsolvable (`second == None`), or congruences `first`
    /// and `second` are incompatible.
    Infeasible { first: usize, second: Option<usize> },
}

/// Generalized Chinese remaindering for linear congruences with arbitrary moduli.
pub fn solve_congruences(system: &[Congruence]) -> CongruenceSolution {
    let (mut res, mut modulus) = (0i128, 1i128);
    // Remember which congruence last tightened each prime-power part; for diagnostics the
    // index of the first incompatible partner is enough.
    let mut reduced: Vec<(i128, i128)> = Vec::new();
    for (idx, c) in system.iter().enumerate() {
        assert!(c.modulus > 0, "modulus must be positive");
        let g = gcd(c.a, c.modulus);
        if rem(c.b, g) != 0 {
            return CongruenceSolution::Infeasible { first: idx, second: None };
        }
        let m = c.modulus / g;
        let a = rem(c.a / g, m);
        let b = rem(c.b / g, m);
        let inv = if m == 1 { 0 } else { crate::arith::mod_inv(a, m).expect("coprime after division") };
        let r = rem(b * inv, m);
        reduced.push((r, m));
        // Combine x = res (mod modulus) with x = r (mod m).
        let (g2, s, _) = ext_gcd(modulus, m);
        if rem(r - res, g2) != 0 {
            let partner = reduced[..idx]
                .iter()
                .position(|&(r0, m0)| rem(r - r0, gcd(m, m0)) != 0)
                .unwrap_or(0);
            return CongruenceSolution::Infeasible { first: partner, second: Some(idx) };
        }
        let new_mod = modulus / g2 * m;
        let step = rem((r - res) / g2 * s, m / g2);
        res = rem(res + modulus * step, new_mod);
        modulus = new_mod;
    }
    CongruenceSolution::Solved { residue: res, modulus }
}

/// Numbers parametrising the parallelepiped of three independent vectors in `Z^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H3Invariants {
    pub det: i128,
    pub minors: [[i128; 3]; 3],
    pub profile: MuProfile,
    /// `(1/mu1) w2 + (xi1/mu1) w3` is integral.
    pub xi1: i128,
    /// `(1/mu2) w1 + (xi2/mu2) w3` is integral.
    pub xi2: i128,
    /// `(1/mu3) w1 + (xi3/mu3) w2` is integral.
    pub xi3: i128,
    pub mu1p: i128,
    pub mu2p: i128,
    pub mu3p: i128,
    pub phi3p: i128,
    /// Bezout coefficients with `sum lambda_j d'_1j = 1`.
    pub bezout: [i128; 3],
    pub eta: i128,
    pub eta_p: i128,
    pub l0: i128,
    /// Coefficients of the point `h(0,0,1)` with respect to `w1, w2, w3`, as
    /// `(numerator, denominator)` pairs.
    pub h001: [(i128, i128); 3],
}

pub fn h3_invariants(w: &[[i64; 3]; 3]) -> Result<H3Invariants, LatticeError> {
    let profile = mu_profile(w)?;
    let minors = signed_minors(w);
    let d = determinant3(w);
    let MuProfile { mu1, mu2, mu3, gamma, lambda, phi3, .. } = profile.clone();
    let xi1 = xi_pair(&w[1], &w[2], mu1).expect("pair multiplicity admits xi");
    let xi2 = xi_pair(&w[0], &w[2], mu2).expect("pair multiplicity admits xi");
    let xi3 = xi_pair(&w[0], &w[1], mu3).expect("pair multiplicity admits xi");
    let (mu1p, mu2p, mu3p) = (mu1 / gamma, mu2 / gamma, mu3 / gamma);
    let phi3p = phi3 / mu3p;
    let dp = |i: usize, j: usize| minors[i][j] / [mu1, mu2, mu3][i];
    let (g, lam) = bezout(&[dp(0, 0), dp(0, 1), dp(0, 2)]);
    assert_eq!(g, 1, "reduced minors of a row are coprime");
    let bez = [lam[0], lam[1], lam[2]];
    let a = -(0..3).map(|j| bez[j] * dp(1, j)).sum::<i128>();
    let b: i128 = (0..3).map(|j| bez[j] * dp(2, j)).sum();
    let eta = rem(a, phi3);
    let eta_p = rem(b, phi3p);
    let i0 = rem(floor_div(a, phi3), mu1);
    let l0 = rem(floor_div(b, phi3p) - i0 * xi1 * mu2p, lambda);
    let h001 = [(1, mu2 * phi3), (eta, mu1 * phi3), (l0 * phi3p + eta_p, lambda * phi3p)];
    Ok(H3Invariants {
        det: d,
        minors,
        profile,
        xi1,
        xi2,
        xi3,
        mu1p,
        mu2p,
        mu3p,
        phi3p,
        bezout: bez,
        eta,
        eta_p,
        l0,
        h001,
    })
}

/// Lattice point `sum (num_j / den_j) w_j`, or `None` if it is not integral.
pub fn combine3(w: &[[i64; 3]; 3], coeffs: &[(i128, i128); 3]) -> Option<Vec<i64>> {
    let mut out = Vec::with_capacity(3);
    for c in 0..3 {
        let s: BigRational = (0..3)
            .map(|j| BigRational::new(BigInt::from(coeffs[j].0 * w[j][c] as i128), BigInt::from(coeffs[j].1)))
            .sum();
        if !s.is_integer() {
            return None;
        }
        out.push(s.to_integer().to_i64()?);
    }
    Some(out)
}

/// Parallelepiped points of `(w1, w2, w3)` from the three-index closed form.
///
/// Returns the points together with their coefficient triples, in index order
/// `(i, j, k)` with `i < mu1`, `j < mu2`, `k < phi3`.
pub fn closed_form_h3(w: &[[i64; 3]; 3]) -> Result<Vec<(Vec<i64>, [(i128, i128); 3])>, LatticeError> {
    let inv = h3_invariants(w)?;
    let MuProfile { mu1, mu2, lambda, phi3, .. } = inv.profile;
    if (mu1 * mu2 * phi3) as u64 > MAX_PARALLELEPIPED {
        return Err(LatticeError::TooLarge((mu1 * mu2 * phi3) as u64, MAX_PARALLELEPIPED));
    }
    let phi3p = inv.phi3p;
    let mut out = Vec::new();
    for k in 0..phi3 {
        let ik = rem(floor_div(k * inv.eta, phi3), mu1);
        let keta = rem(k * inv.eta, phi3);
        let ketap = rem(k * inv.eta_p, phi3p);
        for i in 0..mu1 {
            for j in 0..mu2 {
                let l = rem(
                    (i - ik) * inv.xi1 * inv.mu2p
                        + j * inv.xi2 * inv.mu1p
                        + k * inv.l0
                        + floor_div(k * inv.eta_p, phi3p),
                    lambda,
                );
                let coeffs = [
                    (j * phi3 + k, mu2 * phi3),
                    (i * phi3 + keta, mu1 * phi3),
                    (l * phi3p + ketap, lambda * phi3p),
                ];
                let point = combine3(w, &coeffs).expect("closed-form point is integral");
                out.push((point, coeffs));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_cone_of_a() {
        // Cone spanned by (2,4,3), (0,1,0), (0,0,1): multiplicity 2 with extra point (1,2,2).
        let cone = SimplicialCone::new(vec![vec![2, 4, 3], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(cone.multiplicity(), 2);
        let pts = cone.enumerate_parallelepiped(Convention::HalfOpenLow).unwrap();
        let pts: Vec<Vec<i64>> = pts.into_iter().map(|p| p.point).collect();
        assert_eq!(pts, vec![vec![0, 0, 0], vec![1, 2, 2]]);
    }

    #[test]
    fn lower_dimensional_cone() {
        let cone = SimplicialCone::new(vec![vec![2, 4, 3], vec![0, 0, 1]]).unwrap();
        assert_eq!(cone.multiplicity(), 2);
        let pts = cone.enumerate_parallelepiped(Convention::HalfOpenHigh).unwrap();
        let pts: Vec<Vec<i64>> = pts.into_iter().map(|p| p.point).collect();
        assert_eq!(pts, vec![vec![1, 2, 2], vec![2, 4, 4]]);
    }

    #[test]
    fn quadrilateral_cone_pieces() {
        let gens = vec![vec![2, 4, 3], vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0]];
        let pieces = simplicial_decomposition(&gens).unwrap();
        assert_eq!(pieces, vec![vec![0, 1, 3], vec![1, 2, 3], vec![1, 3]]);
    }

    #[test]
    fn planar_cone_with_interior_ray() {
        let gens = vec![vec![1, 0], vec![1, 1], vec![0, 1]];
        let pieces = simplicial_decomposition(&gens).unwrap();
        assert_eq!(pieces, vec![vec![0, 1], vec![1], vec![1, 2]]);
    }

    #[test]
    fn congruences() {
        let sys = [
            Congruence { a: 1, b: 2, modulus: 3 },
            Congruence { a: 1, b: 3, modulus: 5 },
        ];
        assert_eq!(solve_congruences(&sys), CongruenceSolution::Solved { residue: 8, modulus: 15 });
        let bad = [Congruence { a: 2, b: 1, modulus: 4 }];
        assert_eq!(solve_congruences(&bad), CongruenceSolution::Infeasible { first: 0, second: None });
        let clash = [
            Congruence { a: 1, b: 1, modulus: 4 },
            Congruence { a: 1, b: 2, modulus: 6 },
        ];
        assert_eq!(solve_congruences(&clash), CongruenceSolution::Infeasible { first: 0, second: Some(1) });
    }

    #[test]
    fn closed_form_on_small_example() {
        let w = [[2, 4, 3], [0, 1, 0], [0, 0, 1]];
        let inv = h3_invariants(&w).unwrap();
        assert_eq!(inv.profile.mu, 2);
        let pts = closed_form_h3(&w).unwrap();
        let mut got: Vec<Vec<i64>> = pts.into_iter().map(|(p, _)| p).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 0, 0], vec![1, 2, 2]]);
    }
}
