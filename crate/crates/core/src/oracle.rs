//! Brute-force cross-checks that share no cone or zeta code with the main pipeline,
//! plus seeded generators for randomized runs.

use crate::arith::{gcd, is_prime, primitive_root};
use crate::cyclotomic::CyclotomicNumber;
use crate::field::q;
use crate::polynomial::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest number of residues visited by the series oracle.
pub const SERIES_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("enumeration of {0} residues exceeds the budget {SERIES_BUDGET}")]
    Budget(u128),
    #[error("generators are linearly dependent or empty")]
    Dependent,
    #[error("character order {d} does not divide p - 1 = {}", .p - 1)]
    BadCharacterOrder { d: u64, p: u64 },
}

/// Calls `visit(ord_p f(x), f(x) / p^ord mod p)` for every `x` in `(pZ / p^(lmax+1))^n`;
/// the order is `None` when `f(x) = 0` modulo `p^(lmax+1)`.
fn scan_orders(f: &IntPolynomial, p: u64, lmax: u32, mut visit: impl FnMut(Option<u32>, u64)) -> Result<(), OracleError> {
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    let n = f.nvars() as u32;
    let size = (p as u128).checked_pow(n * lmax).unwrap_or(u128::MAX);
    if size > SERIES_BUDGET as u128 {
        return Err(OracleError::Budget(size));
    }
    let modulus = (p as u128).pow(lmax + 1);
    let terms: Vec<(u128, Vec<u32>)> = f
        .terms()
        .map(|(e, c)| {
            let m = BigInt::from(modulus);
            let r = ((c % &m) + &m) % &m;
            (u128::try_from(r).expect("residue fits"), e.clone())
        })
        .collect();
    let steps = (p as u128).pow(lmax);
    let mut idx = vec![0u128; n as usize];
    loop {
        let x: Vec<u128> = idx.iter().map(|&i| i * p as u128).collect();
        let mut value = 0u128;
        for (c, e) in &terms {
            let mut t = *c;
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t = t * xi % modulus;
                }
            }
            value = (value + t) % modulus;
        }
        if value == 0 {
            visit(None, 0);
        } else {
            let mut ord = 0u32;
            let mut v = value;
            while v % p as u128 == 0 {
                v /= p as u128;
                ord += 1;
            }
            visit(Some(ord), (v % p as u128) as u64);
        }
        let mut i = 0;
        loop {
            if i == n as usize {
                return Ok(());
            }
            idx[i] += 1;
            if idx[i] < steps {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Coefficients of `t^0 .. t^lmax` in `int_{pZ_p^n} |f|^s`: the coefficient of `t^l` is
/// `p^(-n(l+1))` times the number of `x` in `(pZ/p^(l+1))^n` with `ord_p f(x) = l`.
pub fn series_coefficients_padic(f: &IntPolynomial, p: u64, lmax: u32) -> Result<Vec<BigRational>, OracleError> {
    let mut counts = vec![0u64; lmax as usize + 1];
    scan_orders(f, p, lmax, |ord, _| {
        if let Some(l) = ord {
            counts[l as usize] += 1;
        }
    })?;
    // A class mod p^(l+1) lifts to p^(n(lmax-l)) classes mod p^(lmax+1).
    let scale = q(p as i64).pow(-((f.nvars() as i32) * (lmax as i32 + 1)));
    Ok(counts.into_iter().map(|c| q(c as i64) * &scale).collect())
}

/// Same with the weight `chi_bar(ac f(x))`, where `chi_bar(g) = zeta_d` for the smallest
/// primitive root `g` mod `p`.
pub fn character_series_padic(f: &IntPolynomial, p: u64, d: u64, lmax: u32) -> Result<Vec<CyclotomicNumber>, OracleError> {
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    if d == 0 || (p - 1) % d != 0 {
        return Err(OracleError::BadCharacterOrder { d, p });
    }
    let g = primitive_root(p);
    let mut log = vec![0u64; p as usize];
    let mut acc = 1u64;
    for a in 0..p - 1 {
        log[acc as usize] = a;
        acc = acc * g % p;
    }
    let mut bins = vec![vec![0i64; d as usize]; lmax as usize + 1];
    scan_orders(f, p, lmax, |ord, unit| {
        if let Some(l) = ord {
            bins[l as usize][(log[unit as usize] % d) as usize] += 1;
        }
    })?;
    let scale = CyclotomicNumber::rational(q(p as i64).pow(-((f.nvars() as i32) * (lmax as i32 + 1))));
    use crate::field::Field;
    Ok(bins.iter().map(|b| CyclotomicNumber::from_counts(d as u32, b).mul(&scale)).collect())
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| [&r[..c], &r[c + 1..]].concat()).collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

/// Solves `sum c_j g_j = x` exactly: `solve` returns the numerators of the `c_j` over the
/// positive denominator `det`, or `None` when `x` is outside the span.
struct SpanSolver {
    gens: Vec<Vec<i64>>,
    rows: Vec<usize>,
    adj: Vec<Vec<i128>>,
    det: i128,
}

impl SpanSolver {
    fn new(gens: &[Vec<i64>]) -> Result<Self, OracleError> {
        let k = gens.len();
        let n = gens.first().ok_or(OracleError::Dependent)?.len();
        let rows = crate::linalg::combinations(n, k)
            .into_iter()
            .find(|rows| det(&square(gens, rows)) != 0)
            .ok_or(OracleError::Dependent)?;
        let sq = square(gens, &rows);
        let mut d = det(&sq);
        // adj[j][i] = cofactor(i, j)
        let mut adj = vec![vec![0i128; k]; k];
        for i in 0..k {
            for j in 0..k {
                let minor: Vec<Vec<i128>> = (0..k)
                    .filter(|&r| r != i)
                    .map(|r| (0..k).filter(|&c| c != j).map(|c| sq[r][c]).collect())
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[j][i] = sign * det(&minor);
            }
        }
        if d < 0 {
            d = -d;
            adj.iter_mut().flatten().for_each(|a| *a = -*a);
        }
        Ok(SpanSolver { gens: gens.to_vec(), rows, adj, det: d })
    }

    fn solve(&self, x: &[i64]) -> Option<Vec<i128>> {
        let xs: Vec<i128> = self.rows.iter().map(|&r| x[r] as i128).collect();
        let c: Vec<i128> = self.adj.iter().map(|row| row.iter().zip(&xs).map(|(a, b)| a * b).sum()).collect();
        let n = x.len();
        let fits = (0..n).all(|r| {
            let lhs: i128 = self.gens.iter().zip(&c).map(|(g, cj)| g[r] as i128 * cj).sum();
            lhs == self.det * x[r] as i128
        });
        fits.then_some(c)
    }
}

/// `m[r][j] = gens[j][rows[r]]`.
fn square(gens: &[Vec<i64>], rows: &[usize]) -> Vec<Vec<i128>> {
    rows.iter().map(|&r| gens.iter().map(|g| g[r] as i128).collect()).collect()
}

fn for_each_box_point(lo: &[i64], hi: &[i64], mut visit: impl FnMut(&[i64])) {
    let n = lo.len();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return;
    }
    let mut x = lo.to_vec();
    loop {
        visit(&x);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            x[i] += 1;
            if x[i] <= hi[i] {
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// Lattice points of the fundamental parallelepiped by scanning its bounding box.
/// `high` selects coefficients in `(0, 1]` instead of `[0, 1)`.
pub fn brute_parallelepiped(gens: &[Vec<i64>], high: bool) -> Result<BTreeSet<Vec<i64>>, OracleError> {
    let solver = SpanSolver::new(gens)?;
    let n = gens[0].len();
    let lo: Vec<i64> = (0..n).map(|i| gens.iter().map(|g| g[i].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..n).map(|i| gens.iter().map(|g| g[i].max(0)).sum()).collect();
    let d = solver.det;
    let mut out = BTreeSet::new();
    for_each_box_point(&lo, &hi, |x| {
        if let Some(c) = solver.solve(x) {
            let ok = if high { c.iter().all(|&v| v > 0 && v <= d) } else { c.iter().all(|&v| v >= 0 && v < d) };
            if ok {
                out.insert(x.to_vec());
            }
        }
    });
    Ok(out)
}

fn rank(vectors: &[Vec<i64>]) -> usize {
    let n = vectors.first().map_or(0, |v| v.len());
    (1..=vectors.len().min(n))
        .rev()
        .find(|&k| {
            crate::linalg::combinations(vectors.len(), k).iter().any(|cols| {
                let sub: Vec<Vec<i64>> = cols.iter().map(|&c| vectors[c].clone()).collect();
                crate::linalg::combinations(n, k).iter().any(|rows| det(&square(&sub, rows)) != 0)
            })
        })
        .unwrap_or(0)
}

/// Relative interior of a (not necessarily simplicial) cone, described by its facet
/// inequalities inside its span.
struct OpenCone {
    basis_rows: Vec<usize>,
    span: Vec<Vec<i64>>,
    facets: Vec<Vec<i128>>,
    dim: usize,
}

impl OpenCone {
    fn new(gens: &[Vec<i64>]) -> Self {
        let dim = rank(gens);
        let n = gens[0].len();
        // Coordinates on which the span projects injectively.
        let basis_rows = crate::linalg::combinations(n, dim)
            .into_iter()
            .find(|rows| {
                crate::linalg::combinations(gens.len(), dim).iter().any(|cols| {
                    let sub: Vec<Vec<i64>> = cols.iter().map(|&c| gens[c].clone()).collect();
                    det(&square(&sub, rows)) != 0
                })
            })
            .expect("rank is attained on some rows");
        let proj: Vec<Vec<i128>> = gens.iter().map(|g| basis_rows.iter().map(|&r| g[r] as i128).collect()).collect();
        let mut facets = Vec::new();
        for subset in crate::linalg::combinations(gens.len(), dim.saturating_sub(1)) {
            // Normal to the projected subset: signed maximal minors.
            let normal: Vec<i128> = (0..dim)
                .map(|c| {
                    let m: Vec<Vec<i128>> =
                        subset.iter().map(|&s| (0..dim).filter(|&j| j != c).map(|j| proj[s][j]).collect()).collect();
                    if c % 2 == 0 {
                        det(&m)
                    } else {
                        -det(&m)
                    }
                })
                .collect();
            if normal.iter().all(|&v| v == 0) {
                continue;
            }
            let vals: Vec<i128> = proj.iter().map(|g| g.iter().zip(&normal).map(|(a, b)| a * b).sum()).collect();
            let normal = if vals.iter().all(|&v| v >= 0) {
                normal
            } else if vals.iter().all(|&v| v <= 0) {
                normal.iter().map(|v| -v).collect()
            } else {
                continue;
            };
            if !facets.contains(&normal) {
                facets.push(normal);
            }
        }
        OpenCone { basis_rows, span: gens.to_vec(), facets, dim }
    }

    fn contains(&self, x: &[i64]) -> bool {
        if x.iter().all(|&v| v == 0) {
            return false;
        }
        let mut with = self.span.clone();
        with.push(x.to_vec());
        if rank(&with) != self.dim {
            return false;
        }
        let px: Vec<i128> = self.basis_rows.iter().map(|&r| x[r] as i128).collect();
        self.facets.iter().all(|f| f.iter().zip(&px).map(|(a, b)| a * b).sum::<i128>() > 0)
    }
}

/// Every integer point of `[-radius, radius]^n` in the relatively open parent cone lies in
/// exactly one relatively open simplicial piece, and no piece leaves the parent.
pub fn brute_cone_partition_check(parent: &[Vec<i64>], pieces: &[Vec<Vec<i64>>], radius: i64) -> bool {
    let Some(first) = parent.first() else { return pieces.is_empty() };
    let n = first.len();
    let outer = OpenCone::new(parent);
    let solvers: Vec<Option<SpanSolver>> = pieces.iter().map(|g| SpanSolver::new(g).ok()).collect();
    if solvers.iter().any(|s| s.is_none()) {
        return false;
    }
    let lo = vec![-radius; n];
    let hi = vec![radius; n];
    let mut ok = true;
    for_each_box_point(&lo, &hi, |x| {
        if !ok {
            return;
        }
        let hits = solvers
            .iter()
            .flatten()
            .filter(|s| s.solve(x).is_some_and(|c| c.iter().all(|&v| v > 0)))
            .count();
        let inside = outer.contains(x);
        if (inside && hits != 1) || (!inside && hits != 0) {
            ok = false;
        }
    });
    ok
}

/// The generator behind every randomized check.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn primitive_vector(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x as i128));
        if g == 1 {
            return v;
        }
    }
}

/// A linearly independent triple of primitive non-negative vectors, coordinates `<= max`.
pub fn random_triple(rng: &mut ChaCha8Rng, max: i64) -> [[i64; 3]; 3] {
    loop {
        let t: Vec<Vec<i64>> = (0..3).map(|_| primitive_vector(rng, 3, max)).collect();
        let m: Vec<Vec<i128>> = t.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        if det(&m) != 0 {
            return [[t[0][0], t[0][1], t[0][2]], [t[1][0], t[1][1], t[1][2]], [t[2][0], t[2][1], t[2][2]]];
        }
    }
}

/// `k` distinct primitive non-negative vectors spanning `R^n`.
pub fn random_cone(rng: &mut ChaCha8Rng, n: usize, k: usize, max: i64) -> Vec<Vec<i64>> {
    assert!(k >= n);
    loop {
        let mut gens: Vec<Vec<i64>> = Vec::new();
        while gens.len() < k {
            let v = primitive_vector(rng, n, max);
            if !gens.contains(&v) {
                gens.push(v);
            }
        }
        if rank(&gens) == n {
            return gens;
        }
    }
}

fn monomial(n: usize, parts: &[(usize, u32)]) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for &(v, k) in parts {
        e[v] += k;
    }
    e
}

/// A polynomial in three variables built from pure powers and terms of height one in
/// some variable, so that B1 facets are common. It may be degenerate.
pub fn random_b1_polynomial(rng: &mut ChaCha8Rng) -> IntPolynomial {
    let n = 3;
    let mut exps: BTreeSet<Vec<u32>> = BTreeSet::new();
    let dropped = if rng.gen_bool(0.25) { Some(rng.gen_range(0..n)) } else { None };
    for v in 0..n {
        if Some(v) != dropped {
            exps.insert(monomial(n, &[(v, rng.gen_range(2..=5))]));
        }
    }
    let extra = rng.gen_range(1..=3);
    while exps.len() < n - usize::from(dropped.is_some()) + extra {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut parts = vec![(i, 1), (j, rng.gen_range(1..=3))];
        if rng.gen_bool(0.2) {
            parts.push((3 - i - j, 1));
        }
        exps.insert(monomial(n, &parts));
    }
    if let Some(v) = dropped {
        // Keep every variable present.
        if !exps.iter().any(|e| e[v] > 0) {
            exps.insert(monomial(n, &[(v, 1), ((v + 1) % n, rng.gen_range(1..=3))]));
        }
    }
    let terms = exps.into_iter().map(|e| {
        let c: i64 = loop {
            let c = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        (e, BigInt::from(c))
    });
    IntPolynomial::new(n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;
    use rand::SeedableRng;

    #[test]
    fn series_of_a_coordinate() {
        let f = parse_polynomial("z", 3).unwrap();
        let s = series_coefficients_padic(&f, 3, 2).unwrap();
        assert_eq!(s[0], q(0));
        assert_eq!(s[1], q(2) / q(81));
        assert_eq!(s[2], q(2) / q(243));
    }

    #[test]
    fn budget_is_enforced() {
        let f = parse_polynomial("x + y + z", 3).unwrap();
        assert!(matches!(series_coefficients_padic(&f, 7, 4), Err(OracleError::Budget(_))));
    }

    #[test]
    fn parallelepipeds() {
        let a = brute_parallelepiped(&[vec![2, 4, 3], vec![0, 1, 0], vec![0, 0, 1]], false).unwrap();
        assert_eq!(a.into_iter().collect::<Vec<_>>(), vec![vec![0, 0, 0], vec![1, 2, 2]]);
        let e = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(brute_parallelepiped(&e, false).unwrap().len(), 1);
        assert!(brute_parallelepiped(&e, true).unwrap().contains(&vec![1, 1, 1]));
        assert_eq!(brute_parallelepiped(&[vec![1, 1], vec![2, 2]], false), Err(OracleError::Dependent));
    }

    #[test]
    fn partition_checks() {
        let v: Vec<Vec<i64>> = vec![vec![2, 4, 3], vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0]];
        let pieces: Vec<Vec<Vec<i64>>> = [vec![0, 1, 3], vec![1, 2, 3], vec![1, 3]]
            .iter()
            .map(|p| p.iter().map(|&i| v[i].clone()).collect())
            .collect();
        assert!(brute_cone_partition_check(&v, &pieces, 12));
        let mut doubled = pieces.clone();
        doubled.push(pieces[0].clone());
        assert!(!brute_cone_partition_check(&v, &doubled, 12));
        let ray = vec![vec![1, 2, 0]];
        assert!(brute_cone_partition_check(&ray, &[ray.clone()], 6));
    }

    #[test]
    fn generators_are_reproducible() {
        let a = random_b1_polynomial(&mut ChaCha8Rng::seed_from_u64(7));
        let b = random_b1_polynomial(&mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        let t = random_triple(&mut ChaCha8Rng::seed_from_u64(1), 8);
        assert!(t.iter().flatten().all(|&x| (0..=8).contains(&x)));
    }
}
