//! Candidate poles read off the polyhedron, B1-facets, and the hypotheses of the
//! non-pole criterion for three variables.

use super::{FaceId, NewtonPolyhedron};
use crate::arith::{divisors, gcd};
use crate::linalg::{self, coordinates, rank};
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// A complex number `s0 = -q + 2 pi i r / log p`, with `r` reduced modulo `1`.
///
/// Only `q` and `r` matter for which facets contribute, so the prime never appears.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComplexCandidate {
    #[serde(serialize_with = "ser_ratio")]
    pub q: Ratio<i64>,
    #[serde(serialize_with = "ser_ratio")]
    pub r: Ratio<i64>,
}

fn ser_ratio<S: serde::Serializer>(x: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl ComplexCandidate {
    pub fn new(q: Ratio<i64>, r: Ratio<i64>) -> Self {
        let r = r - r.floor();
        ComplexCandidate { q, r }
    }

    /// Representative of the class `(m', sigma', e)`: `q = sigma'/m'` and `m' r` of exact order `e`.
    pub fn of_class(class: PoleClass) -> Self {
        let PoleClass { m, sigma, e } = class;
        let r = if e == 1 { Ratio::zero() } else { Ratio::new(1, e * m) };
        ComplexCandidate::new(Ratio::new(sigma, m), r)
    }

    /// Class `(m', sigma', e)` of this candidate.
    pub fn class(&self) -> PoleClass {
        let m = *self.q.denom();
        let sigma = *self.q.numer();
        let mr = self.r * m;
        let frac = mr - mr.floor();
        PoleClass { m, sigma, e: *frac.denom() }
    }

    pub fn real_part_is_minus_one(&self) -> bool {
        self.q == Ratio::from_integer(1)
    }
}

/// Poles sharing the same atomic denominator factor
/// `F(t) = p^(sigma' phi(e)) Phi_e(t^m' / p^sigma')`, where `gcd(m', sigma') = 1`.
///
/// The roots of `F` are the values `t = p^(-s0)` for all candidates `s0` with
/// `-Re(s0) = sigma'/m'` and `m' r` of exact order `e` in `Q/Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PoleClass {
    pub m: i64,
    pub sigma: i64,
    pub e: i64,
}

impl PoleClass {
    /// Classes whose atoms divide `t^m - p^sigma`.
    pub fn of_family(m: i64, sigma: i64) -> Vec<PoleClass> {
        let d = gcd(m as i128, sigma as i128) as i64;
        divisors(d as u64)
            .into_iter()
            .map(|e| PoleClass { m: m / d, sigma: sigma / d, e: e as i64 })
            .collect()
    }

    /// Residues `k mod m` (for the family `(m, sigma)`) of the candidates
    /// `-sigma/m + 2 pi i k / (m log p)` in this class.
    pub fn residues_in_family(&self, m: i64, sigma: i64) -> Vec<i64> {
        let d = m / self.m;
        if self.sigma * d != sigma || self.m * d != m || d % self.e != 0 {
            return Vec::new();
        }
        (0..m).filter(|&k| gcd(k as i128, d as i128) as i64 == d / self.e).collect()
    }
}

impl std::fmt::Display for PoleClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(m'={}, sigma'={}, e={})", self.m, self.sigma, self.e)
    }
}

/// Ways a facet can be a B1-facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum B1Kind {
    /// Compact simplex with `n - 1` vertices in `{x_var = 0}` and one in `{x_var = 1}`.
    Simplex { var: usize },
    /// Unbounded exactly in direction `e_along`, and projecting along it to a B1-simplex for `x_var`.
    NonCompact { var: usize, along: usize },
}

impl B1Kind {
    pub fn var(&self) -> usize {
        match *self {
            B1Kind::Simplex { var } | B1Kind::NonCompact { var, .. } => var,
        }
    }
}

/// Whether `points` (distinct, integer) span a simplex that is B1 for coordinate `var`:
/// `dim + 1` vertices, all but one in `{x_var = 0}`, the last in `{x_var = 1}`.
fn is_b1_simplex(points: &[Vec<i64>], var: usize, dim: usize) -> bool {
    if points.iter().any(|p| p[var] < 0 || p[var] > 1) {
        return false;
    }
    let apex: Vec<&Vec<i64>> = points.iter().filter(|p| p[var] == 1).collect();
    if apex.len() != 1 {
        return false;
    }
    let base: Vec<Vec<i64>> = points.iter().filter(|p| p[var] == 0).cloned().collect();
    if base.is_empty() || affine_rank(points) != dim {
        return false;
    }
    simplex_hull(&base, dim - 1)
}

fn affine_rank(points: &[Vec<i64>]) -> usize {
    let vecs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    rank(&vecs)
}

/// True when the convex hull of `points` is a simplex with `k + 1` vertices taken from them.
fn simplex_hull(points: &[Vec<i64>], k: usize) -> bool {
    if affine_rank(points) != k {
        return false;
    }
    for combo in linalg::combinations(points.len(), k + 1) {
        let verts: Vec<&Vec<i64>> = combo.iter().map(|&i| &points[i]).collect();
        if affine_rank(&verts.iter().map(|v| (*v).clone()).collect::<Vec<_>>()) != k {
            continue;
        }
        // Barycentric coordinates relative to verts[0].
        let basis: Vec<Vec<i128>> = verts[1..]
            .iter()
            .map(|v| v.iter().zip(verts[0]).map(|(a, b)| (a - b) as i128).collect())
            .collect();
        let inside = points.iter().all(|p| {
            let rel: Vec<i128> = p.iter().zip(verts[0]).map(|(a, b)| (a - b) as i128).collect();
            match coordinates(&basis, &rel) {
                Some(c) => {
                    let total: num_rational::BigRational = c.iter().sum();
                    c.iter().all(|x| !x.is_negative()) && total <= num_rational::BigRational::from_integer(1.into())
                }
                None => false,
            }
        });
        if inside {
            return true;
        }
    }
    false
}

/// Verdict of the hypothesis check for one candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Hypotheses {
    /// Every contributing facet is B1 and every pair is compatible.
    Satisfied,
    /// The criterion needs exactly three variables.
    WrongDimension(usize),
    /// The criterion excludes real part `-1`.
    RealPartMinusOne,
    /// No facet contributes: not a candidate pole at all.
    NoContributor,
    /// A contributing facet is not a B1-facet.
    NotB1 { facet: usize },
    /// Two contributing facets are B1 for no common variable and share more than a point.
    IncompatiblePair { first: usize, second: usize },
}

/// A real part `-q` of candidate poles, with the families producing it and its classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidatePole {
    #[serde(serialize_with = "ser_ratio")]
    pub q: Ratio<i64>,
    /// Denominator families `(m, sigma)` with `sigma / m = q`.
    pub families: Vec<(i64, i64)>,
    pub classes: Vec<ClassCandidate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCandidate {
    pub class: PoleClass,
    pub representative: ComplexCandidate,
    pub contributing_facets: Vec<usize>,
    pub expected_order: u32,
    pub hypotheses: Hypotheses,
}

impl NewtonPolyhedron {
    /// B1 roles of a facet (possibly several, one per variable).
    pub fn classify_b1(&self, facet: usize) -> Vec<B1Kind> {
        let n = self.nvars();
        let face = self.face(self.facets()[facet].face);
        let mut out = Vec::new();
        if face.is_compact() {
            if face.vertices.len() == n {
                for var in 0..n {
                    if is_b1_simplex(&face.vertices, var, n - 1) {
                        out.push(B1Kind::Simplex { var });
                    }
                }
            }
            return out;
        }
        if n < 3 || face.rays.len() != 1 {
            return out;
        }
        let along = face.rays[0];
        let projected: BTreeSet<Vec<i64>> = face
            .points
            .iter()
            .map(|p| p.iter().enumerate().filter(|&(i, _)| i != along).map(|(_, &x)| x).collect())
            .collect();
        let projected: Vec<Vec<i64>> = projected.into_iter().collect();
        for var in (0..n).filter(|&v| v != along) {
            let pvar = if var > along { var - 1 } else { var };
            if is_b1_simplex(&projected, pvar, n - 2) {
                out.push(B1Kind::NonCompact { var, along });
            }
        }
        out
    }

    /// Whether facet `j` contributes to the candidate: `sigma = m q` and `m r` integral.
    pub fn contributes(&self, facet: usize, cand: &ComplexCandidate) -> bool {
        let f = &self.facets()[facet];
        f.m > 0 && Ratio::from_integer(f.sigma) == cand.q * f.m && (cand.r * f.m).is_integer()
    }

    pub fn contributing_facets(&self, cand: &ComplexCandidate) -> Vec<usize> {
        (0..self.facets().len()).filter(|&j| self.contributes(j, cand)).collect()
    }

    /// Whether a compact face contributes: it lies in a contributing facet.
    pub fn face_contributes(&self, id: FaceId, cand: &ComplexCandidate) -> bool {
        self.face(id).facets.iter().any(|&j| self.contributes(j, cand))
    }

    /// Largest pole order of `L_tau S(Delta_tau)` at the candidate over compact faces,
    /// counted as contributing rays of a simplicial piece, plus one at real part `-1`
    /// (with integral `r`) when `f_tau` is not a monomial.
    pub fn expected_order(&self, cand: &ComplexCandidate) -> u32 {
        let l_pole = cand.real_part_is_minus_one() && cand.r.is_integer();
        self.compact_faces()
            .map(|face| {
                let s = self
                    .cone_pieces(face.id)
                    .iter()
                    .map(|piece| piece.iter().filter(|&&j| self.contributes(j, cand)).count() as u32)
                    .max()
                    .unwrap_or(0);
                s + u32::from(l_pole && !face.is_vertex())
            })
            .max()
            .unwrap_or(0)
    }

    pub fn check_theorem_hypotheses(&self, cand: &ComplexCandidate) -> Hypotheses {
        if self.nvars() != 3 {
            return Hypotheses::WrongDimension(self.nvars());
        }
        if cand.real_part_is_minus_one() {
            return Hypotheses::RealPartMinusOne;
        }
        let contributors = self.contributing_facets(cand);
        if contributors.is_empty() {
            return Hypotheses::NoContributor;
        }
        let roles: Vec<Vec<B1Kind>> = contributors.iter().map(|&j| self.classify_b1(j)).collect();
        if let Some(pos) = roles.iter().position(|r| r.is_empty()) {
            return Hypotheses::NotB1 { facet: contributors[pos] };
        }
        for a in 0..contributors.len() {
            for b in a + 1..contributors.len() {
                let shared = roles[a].iter().any(|x| roles[b].iter().any(|y| x.var() == y.var()));
                let small = match self.facet_intersection(contributors[a], contributors[b]) {
                    None => true,
                    Some(id) => self.face(id).is_vertex(),
                };
                if !shared && !small {
                    return Hypotheses::IncompatiblePair { first: contributors[a], second: contributors[b] };
                }
            }
        }
        Hypotheses::Satisfied
    }

    /// Denominator families `(m, sigma)` of facets with `m > 0`, plus `(1, 1)`.
    pub fn families(&self) -> Vec<(i64, i64)> {
        let mut fams: BTreeSet<(i64, i64)> = self.facets().iter().filter(|f| f.m > 0).map(|f| (f.m, f.sigma)).collect();
        fams.insert((1, 1));
        fams.into_iter().collect()
    }

    /// All candidate real parts with their pole classes, sorted by `q`.
    pub fn candidate_poles(&self) -> Vec<CandidatePole> {
        let fams = self.families();
        let qs: BTreeSet<Ratio<i64>> = fams.iter().map(|&(m, s)| Ratio::new(s, m)).collect();
        qs.into_iter()
            .map(|q| {
                let families: Vec<(i64, i64)> = fams.iter().copied().filter(|&(m, s)| Ratio::new(s, m) == q).collect();
                let classes: BTreeSet<PoleClass> =
                    families.iter().flat_map(|&(m, s)| PoleClass::of_family(m, s)).collect();
                let classes = classes
                    .into_iter()
                    .map(|class| {
                        let representative = ComplexCandidate::of_class(class);
                        ClassCandidate {
                            class,
                            representative,
                            contributing_facets: self.contributing_facets(&representative),
                            expected_order: self.expected_order(&representative),
                            hypotheses: self.check_theorem_hypotheses(&representative),
                        }
                    })
                    .collect();
                CandidatePole { q, families, classes }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    fn example() -> NewtonPolyhedron {
        NewtonPolyhedron::new(&parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap()).unwrap()
    }

    #[test]
    fn b1_roles() {
        let np = example();
        assert_eq!(np.classify_b1(0), vec![B1Kind::Simplex { var: 1 }]);
        assert_eq!(np.classify_b1(1), vec![B1Kind::Simplex { var: 0 }]);
        assert!(np.classify_b1(2).is_empty());
    }

    #[test]
    fn classes_and_orders() {
        let np = example();
        let k1 = ComplexCandidate::new(Ratio::new(3, 2), Ratio::new(1, 6));
        assert_eq!(k1.class(), PoleClass { m: 2, sigma: 3, e: 3 });
        assert_eq!(np.contributing_facets(&k1), vec![0]);
        assert_eq!(np.expected_order(&k1), 1);
        assert_eq!(np.check_theorem_hypotheses(&k1), Hypotheses::Satisfied);
        let k3 = ComplexCandidate::new(Ratio::new(3, 2), Ratio::new(1, 2));
        assert_eq!(k3.class(), PoleClass { m: 2, sigma: 3, e: 1 });
        assert_eq!(np.contributing_facets(&k3), vec![0, 1]);
        assert_eq!(np.expected_order(&k3), 2);
        assert_eq!(np.check_theorem_hypotheses(&k3), Hypotheses::IncompatiblePair { first: 0, second: 1 });
        assert_eq!(PoleClass { m: 2, sigma: 3, e: 3 }.residues_in_family(6, 9), vec![1, 2, 4, 5]);
        assert_eq!(PoleClass { m: 2, sigma: 3, e: 1 }.residues_in_family(6, 9), vec![0, 3]);
    }

    #[test]
    fn noncompact_b1() {
        // x^2 + x*y + y^3: every facet with m > 0 is unbounded along z.
        let np = NewtonPolyhedron::new(&parse_polynomial("x^2 + x*y + y^3", 3).unwrap()).unwrap();
        let role = |normal: &[i64]| {
            let j = np.facets().iter().position(|f| f.normal == normal).unwrap();
            np.classify_b1(j)
        };
        // [AB] with A(2,0,0), B(1,1,0) is B1 for y; [BC] with C(0,3,0) is B1 for x.
        assert_eq!(role(&[1, 1, 0]), vec![B1Kind::NonCompact { var: 1, along: 2 }]);
        assert_eq!(role(&[2, 1, 0]), vec![B1Kind::NonCompact { var: 0, along: 2 }]);
        assert!(role(&[0, 0, 1]).is_empty());
    }
}
