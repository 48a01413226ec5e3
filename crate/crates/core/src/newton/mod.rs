//! Global Newton polyhedra `conv(supp f) + R_{>=0}^n` and their faces.
//!
//! Facets are found from candidate normals: every `n - 1` linearly independent vectors
//! among the differences of undominated support points and the unit vectors determine a
//! normal, and a normal is kept when the face it cuts out has dimension `n - 1`.
//! All other proper faces are intersections of facets.

mod poles;

pub use poles::*;

use crate::lattice::{self, ConePiece};
use crate::linalg::{self, normal_vector, primitive, rank};
use crate::polynomial::{IntPolynomial, PolyError};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub type FaceId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NewtonError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("weight vector must have {expected} non-negative entries")]
    BadWeight { expected: usize },
}

/// A facet with primitive inward normal `v`, `m = m(v)` and `sigma = sum v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub m: i64,
    pub sigma: i64,
    pub face: FaceId,
}

impl Facet {
    /// True for the coordinate hyperplanes `{x_i = 0}`.
    pub fn is_coordinate(&self) -> bool {
        self.m == 0
    }
}

/// A proper face of the polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: FaceId,
    /// Vertices of the polyhedron lying on the face, in decreasing lexicographic order.
    pub vertices: Vec<Vec<i64>>,
    /// All support points of `f` on the face, in decreasing lexicographic order.
    pub points: Vec<Vec<i64>>,
    /// Indices `i` such that the face is unbounded in direction `e_i`.
    pub rays: Vec<usize>,
    pub dim: usize,
    /// Indices of the facets containing the face.
    pub facets: Vec<usize>,
    /// Coordinate hyperplanes `{x_i = 0}` containing the face.
    pub hyperplanes: Vec<usize>,
}

impl Face {
    pub fn is_compact(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.dim == 0
    }

    /// Short name listing the vertices, with `+e_i` for unbounded directions.
    pub fn label(&self) -> String {
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let mut s = vs.join("");
        for r in &self.rays {
            s.push_str(&format!("+e{}", r + 1));
        }
        if self.dim == 0 {
            s
        } else {
            format!("[{s}]")
        }
    }
}

#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    f: IntPolynomial,
    n: usize,
    support: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    faces: Vec<Face>,
    by_facets: BTreeMap<Vec<usize>, FaceId>,
}

impl NewtonPolyhedron {
    pub fn new(f: &IntPolynomial) -> Result<Self, NewtonError> {
        f.check_vanishes_at_origin()?;
        let n = f.nvars();
        let support = f.support();
        let normals = facet_normals(&support, n);
        let mut facets: Vec<(Vec<i64>, i64, Vec<Vec<i64>>, Vec<usize>)> = normals
            .into_iter()
            .map(|v| {
                let (m, pts) = minimizers(&support, &v);
                let rays = (0..n).filter(|&i| v[i] == 0).collect();
                (v, m, pts, rays)
            })
            .collect();
        facets.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| b.0.cmp(&a.0)));

        let mut poly = NewtonPolyhedron { f: f.clone(), n, support, facets: Vec::new(), faces: Vec::new(), by_facets: BTreeMap::new() };
        poly.facets = facets
            .iter()
            .map(|(v, m, _, _)| Facet { normal: v.clone(), m: *m, sigma: v.iter().sum(), face: usize::MAX })
            .collect();

        // Close the facet set under intersection; each face is keyed by its facet set.
        let mut raw: BTreeMap<Vec<usize>, (Vec<Vec<i64>>, Vec<usize>)> = BTreeMap::new();
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        for (_, _, pts, rays) in &facets {
            let key = poly.containing_facets(pts, rays);
            if raw.insert(key.clone(), (pts.clone(), rays.clone())).is_none() {
                frontier.push(key);
            }
        }
        let facet_keys: Vec<Vec<usize>> = raw.keys().cloned().collect();
        while let Some(key) = frontier.pop() {
            let (pts, rays) = raw[&key].clone();
            for fk in &facet_keys {
                let (fpts, frays) = &raw[fk];
                let ipts: Vec<Vec<i64>> = pts.iter().filter(|p| fpts.contains(p)).cloned().collect();
                if ipts.is_empty() {
                    continue;
                }
                let irays: Vec<usize> = rays.iter().filter(|r| frays.contains(r)).cloned().collect();
                let ikey = poly.containing_facets(&ipts, &irays);
                if let std::collections::btree_map::Entry::Vacant(e) = raw.entry(ikey.clone()) {
                    e.insert((ipts, irays));
                    frontier.push(ikey);
                }
            }
        }

        let mut faces: Vec<Face> = raw
            .into_iter()
            .map(|(key, (mut pts, rays))| {
                pts.sort_by(|a, b| b.cmp(a));
                let dim = affine_dim(&pts, &rays, n);
                let hyperplanes = (0..n).filter(|&i| !rays.contains(&i) && pts.iter().all(|p| p[i] == 0)).collect();
                Face { id: 0, vertices: Vec::new(), points: pts, rays, dim, facets: key, hyperplanes }
            })
            .collect();
        let vertex_set: BTreeSet<Vec<i64>> = faces.iter().filter(|f| f.dim == 0).map(|f| f.points[0].clone()).collect();
        for face in faces.iter_mut() {
            face.vertices = face.points.iter().filter(|p| vertex_set.contains(*p)).cloned().collect();
        }
        faces.sort_by(|a, b| {
            b.is_compact()
                .cmp(&a.is_compact())
                .then(a.dim.cmp(&b.dim))
                .then_with(|| b.vertices.cmp(&a.vertices))
                .then_with(|| a.rays.cmp(&b.rays))
        });
        for (id, face) in faces.iter_mut().enumerate() {
            face.id = id;
            poly.by_facets.insert(face.facets.clone(), id);
        }
        for (j, facet) in poly.facets.iter_mut().enumerate() {
            facet.face = poly.by_facets[&vec![j]];
        }
        poly.faces = faces;
        Ok(poly)
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.f
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[Vec<i64>] {
        &self.support
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn compact_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.is_compact())
    }

    /// Vertices of the polyhedron in decreasing lexicographic order.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        self.faces.iter().filter(|f| f.is_vertex()).map(|f| f.vertices[0].clone()).collect()
    }

    /// Face whose vertex list (in any order) is exactly `vertices` and which is compact.
    pub fn compact_face_with_vertices(&self, vertices: &[Vec<i64>]) -> Option<FaceId> {
        let want: BTreeSet<&Vec<i64>> = vertices.iter().collect();
        self.faces
            .iter()
            .find(|f| f.is_compact() && f.vertices.iter().collect::<BTreeSet<_>>() == want)
            .map(|f| f.id)
    }

    fn containing_facets(&self, pts: &[Vec<i64>], rays: &[usize]) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, fc)| {
                rays.iter().all(|&r| fc.normal[r] == 0)
                    && pts.iter().all(|p| dot(&fc.normal, p) == fc.m)
            })
            .map(|(j, _)| j)
            .collect()
    }

    /// Face of the polyhedron generated by the given support points and rays.
    pub fn face_spanned_by(&self, pts: &[Vec<i64>], rays: &[usize]) -> Option<FaceId> {
        self.by_facets.get(&self.containing_facets(pts, rays)).copied()
    }

    /// `m(k) = min_{w in supp f} k.w` and the first meet locus `F(k)`.
    ///
    /// `F(0)` is the whole polyhedron and is reported as `None`.
    pub fn m_and_face(&self, k: &[i64]) -> Result<(i64, Option<FaceId>), NewtonError> {
        if k.len() != self.n || k.iter().any(|&x| x < 0) {
            return Err(NewtonError::BadWeight { expected: self.n });
        }
        let (m, pts) = minimizers(&self.support, k);
        if k.iter().all(|&x| x == 0) {
            return Ok((0, None));
        }
        let rays: Vec<usize> = (0..self.n).filter(|&i| k[i] == 0).collect();
        Ok((m, self.face_spanned_by(&pts, &rays)))
    }

    /// `m(k)` alone.
    pub fn m_of(&self, k: &[i64]) -> i64 {
        minimizers(&self.support, k).0
    }

    /// Facet indices generating the cone of weights whose first meet locus is the face.
    pub fn cone_generators(&self, id: FaceId) -> &[usize] {
        &self.faces[id].facets
    }

    /// Decomposition of the face's cone into open simplicial pieces, as facet indices.
    pub fn cone_pieces(&self, id: FaceId) -> Vec<Vec<usize>> {
        let gens = self.cone_generators(id);
        let vecs: Vec<Vec<i64>> = gens.iter().map(|&j| self.facets[j].normal.clone()).collect();
        let pieces: Vec<ConePiece> = lattice::simplicial_decomposition(&vecs).expect("facet normals are valid cone generators");
        pieces.into_iter().map(|p| p.into_iter().map(|i| gens[i]).collect()).collect()
    }

    /// `f_tau`: the terms of `f` whose exponents lie on the face.
    pub fn restriction(&self, id: FaceId) -> IntPolynomial {
        self.f.restrict_to_points(&self.faces[id].points)
    }

    /// Faces common to two facets (`None` when they are disjoint).
    pub fn facet_intersection(&self, a: usize, b: usize) -> Option<FaceId> {
        let fa = &self.faces[self.facets[a].face];
        let fb = &self.faces[self.facets[b].face];
        let pts: Vec<Vec<i64>> = fa.points.iter().filter(|p| fb.points.contains(p)).cloned().collect();
        if pts.is_empty() {
            return None;
        }
        let rays: Vec<usize> = fa.rays.iter().filter(|r| fb.rays.contains(r)).cloned().collect();
        self.face_spanned_by(&pts, &rays)
    }

    /// Variables `x_i` for which the face has support points only at heights `0` and `1`,
    /// with exactly one support point at height `1`, paired with the face `tau ∩ {x_i = 0}`.
    ///
    /// For such a face `f_tau = c x_i x^a + f_base`, so its torus zeros are counted from
    /// those of the base. The candidates are ordered by the vertex list of the base.
    pub fn height_one_splits(&self, id: FaceId) -> Vec<(usize, FaceId)> {
        let face = &self.faces[id];
        if face.is_vertex() {
            return Vec::new();
        }
        let mut out: Vec<(usize, FaceId)> = Vec::new();
        for i in 0..self.n {
            if face.rays.contains(&i) {
                continue;
            }
            let heights: Vec<i64> = face.points.iter().map(|p| p[i]).collect();
            if heights.iter().any(|&h| h > 1) || heights.iter().filter(|&&h| h == 1).count() != 1 {
                continue;
            }
            let base: Vec<Vec<i64>> = face.points.iter().filter(|p| p[i] == 0).cloned().collect();
            if base.is_empty() {
                continue;
            }
            if let Some(b) = self.face_spanned_by(&base, &face.rays) {
                if self.faces[b].points == base {
                    out.push((i, b));
                }
            }
        }
        out.sort_by(|a, b| self.faces[a.1].vertices.cmp(&self.faces[b.1].vertices).then(a.0.cmp(&b.0)));
        out
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn minimizers(support: &[Vec<i64>], v: &[i64]) -> (i64, Vec<Vec<i64>>) {
    let m = support.iter().map(|w| dot(v, w)).min().expect("nonempty support");
    (m, support.iter().filter(|w| dot(v, w) == m).cloned().collect())
}

fn affine_dim(pts: &[Vec<i64>], rays: &[usize], n: usize) -> usize {
    let mut vecs: Vec<Vec<i128>> = pts.iter().skip(1).map(|p| p.iter().zip(&pts[0]).map(|(a, b)| (a - b) as i128).collect()).collect();
    vecs.extend(rays.iter().map(|&r| linalg::one_hot(n, r)));
    rank(&vecs)
}

/// Points not dominated coordinatewise by another support point.
fn undominated(support: &[Vec<i64>]) -> Vec<Vec<i64>> {
    support
        .iter()
        .filter(|w| !support.iter().any(|u| u != *w && u.iter().zip(w.iter()).all(|(a, b)| a <= b)))
        .cloned()
        .collect()
}

fn facet_normals(support: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let pts = undominated(support);
    let mut dirs: BTreeSet<Vec<i128>> = BTreeSet::new();
    for (a, pa) in pts.iter().enumerate() {
        for pb in &pts[a + 1..] {
            let d: Vec<i128> = pa.iter().zip(pb).map(|(x, y)| (x - y) as i128).collect();
            let mut d = primitive(&d);
            if d.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                d.iter_mut().for_each(|x| *x = -*x);
            }
            dirs.insert(d);
        }
    }
    for i in 0..n {
        dirs.insert(linalg::one_hot(n, i));
    }
    let dirs: Vec<Vec<i128>> = dirs.into_iter().collect();
    let mut normals: BTreeSet<Vec<i64>> = BTreeSet::new();
    for combo in linalg::combinations(dirs.len(), n - 1) {
        let vs: Vec<Vec<i128>> = combo.iter().map(|&c| dirs[c].clone()).collect();
        let mut v = primitive(&normal_vector(&vs));
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        if v.iter().all(|&x| x <= 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        if v.iter().any(|&x| x < 0) {
            continue;
        }
        normals.insert(v.iter().map(|&x| x as i64).collect());
    }
    normals
        .into_iter()
        .filter(|v| {
            let (_, pts) = minimizers(support, v);
            let rays: Vec<usize> = (0..n).filter(|&i| v[i] == 0).collect();
            affine_dim(&pts, &rays, n) == n - 1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    fn example() -> NewtonPolyhedron {
        NewtonPolyhedron::new(&parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap()).unwrap()
    }

    #[test]
    fn facets_of_the_running_example() {
        let np = example();
        let got: Vec<(Vec<i64>, i64, i64)> = np.facets().iter().map(|f| (f.normal.clone(), f.m, f.sigma)).collect();
        assert_eq!(
            got,
            vec![
                (vec![2, 4, 3], 6, 9),
                (vec![1, 1, 1], 2, 3),
                (vec![1, 0, 0], 0, 1),
                (vec![0, 1, 0], 0, 1),
                (vec![0, 0, 1], 0, 1),
            ]
        );
        assert_eq!(np.vertices(), vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        assert_eq!(np.compact_faces().count(), 11);
    }

    #[test]
    fn first_meet_locus() {
        let np = example();
        let (m, face) = np.m_and_face(&[1, 2, 2]).unwrap();
        assert_eq!(m, 3);
        let face = np.face(face.unwrap());
        assert_eq!(face.vertices, vec![vec![3, 0, 0], vec![1, 1, 0]]);
        assert_eq!(np.m_and_face(&[0, 0, 0]).unwrap(), (0, None));
    }

    #[test]
    fn cone_of_vertex_d() {
        let np = example();
        let d = np.compact_face_with_vertices(&[vec![0, 0, 2]]).unwrap();
        assert_eq!(np.cone_generators(d), &[0, 1, 2, 3]);
        assert_eq!(np.cone_pieces(d), vec![vec![0, 1, 3], vec![1, 2, 3], vec![1, 3]]);
        assert_eq!(np.face(d).hyperplanes, vec![0, 1]);
    }

    #[test]
    fn monomial_polyhedron() {
        let np = NewtonPolyhedron::new(&parse_polynomial("x*y*z", 3).unwrap()).unwrap();
        assert_eq!(np.facets().len(), 3);
        assert!(np.facets().iter().all(|f| f.m == 1 && f.sigma == 1));
        assert_eq!(np.compact_faces().count(), 1);
    }
}
