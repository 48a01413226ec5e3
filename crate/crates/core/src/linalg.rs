//! Exact linear algebra on small integer matrices.

use crate::arith::{ext_gcd, gcd};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub fn det(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank of a list of integer vectors.
pub fn rank(vectors: &[Vec<i128>]) -> usize {
    let mut rows: Vec<Vec<i128>> = vectors.iter().filter(|v| v.iter().any(|&x| x != 0)).cloned().collect();
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        for i in r + 1..rows.len() {
            if rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                for j in 0..cols {
                    rows[i][j] = rows[i][j] * a - rows[r][j] * b;
                }
                let g = rows[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Generator of the orthogonal complement of `n - 1` vectors in `Z^n`, by signed minors.
///
/// Returns the zero vector when the inputs are dependent.
pub fn normal_vector(vectors: &[Vec<i128>]) -> Vec<i128> {
    let n = vectors.len() + 1;
    (0..n)
        .map(|k| {
            let minor: Vec<Vec<i128>> = vectors
                .iter()
                .map(|v| v.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect())
                .collect();
            let d = det(&minor);
            if k % 2 == 0 { d } else { -d }
        })
        .collect()
}

/// Divide by the gcd of the entries.
pub fn primitive(v: &[i128]) -> Vec<i128> {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

/// All maximal minors of an `r x n` matrix (rows given), in lexicographic column order.
pub fn maximal_minors(rows: &[Vec<i128>]) -> Vec<i128> {
    let r = rows.len();
    let n = rows.first().map_or(0, |v| v.len());
    let mut out = Vec::new();
    for cols in combinations(n, r) {
        let sub: Vec<Vec<i128>> = rows.iter().map(|v| cols.iter().map(|&c| v[c]).collect()).collect();
        out.push(det(&sub));
    }
    out
}

/// All `k`-subsets of `0..n`, lexicographically.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Lattice basis of `{x in Z^n : A x = 0}` by unimodular column operations.
pub fn integer_kernel(rows: &[Vec<i128>], n: usize) -> Vec<Vec<i128>> {
    let m = rows.len();
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    // u holds the accumulated column operations; its columns are stored as rows of `u`.
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut pivot_col = 0usize;
    for row in 0..m {
        if pivot_col >= n {
            break;
        }
        // Reduce entries a[row][pivot_col..] to a single nonzero at pivot_col.
        for c in pivot_col + 1..n {
            let (x, y) = (a[row][pivot_col], a[row][c]);
            if y == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(x, y);
            let (xg, yg) = (x / g, y / g);
            // New col_p = s*col_p + t*col_c; new col_c = -yg*col_p + xg*col_c.
            for r in a.iter_mut() {
                let (cp, cc) = (r[pivot_col], r[c]);
                r[pivot_col] = s * cp + t * cc;
                r[c] = -yg * cp + xg * cc;
            }
            let (cp, cc) = (u[pivot_col].clone(), u[c].clone());
            u[pivot_col] = cp.iter().zip(&cc).map(|(p, q)| s * p + t * q).collect();
            u[c] = cp.iter().zip(&cc).map(|(p, q)| -yg * p + xg * q).collect();
        }
        if a[row][pivot_col] != 0 {
            pivot_col += 1;
        }
    }
    (pivot_col..n).map(|c| u[c].clone()).collect()
}

/// Coordinates of `target` in terms of `basis` (linearly independent), if it lies in their span.
pub fn coordinates(basis: &[Vec<i128>], target: &[i128]) -> Option<Vec<BigRational>> {
    let r = basis.len();
    let n = target.len();
    // Augmented system: columns are basis vectors, right-hand side is target.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from_integer(BigInt::from(b[i]))).collect();
            row.push(BigRational::from_integer(BigInt::from(target[i])));
            row
        })
        .collect();
    let mut piv_row = 0;
    let mut pivots = Vec::new();
    for c in 0..r {
        let Some(p) = (piv_row..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(piv_row, p);
        let inv = m[piv_row][c].recip();
        for x in m[piv_row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != piv_row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=r {
                    let delta = &f * &m[piv_row][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        piv_row += 1;
    }
    assert_eq!(pivots.len(), r, "basis vectors must be independent");
    if m[piv_row..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    let mut out = vec![BigRational::zero(); r];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = m[i][r].clone();
    }
    Some(out)
}

pub fn one_hot(n: usize, i: usize) -> Vec<i128> {
    (0..n).map(|j| i128::from(j == i)).collect()
}

pub fn to_i128(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

pub fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// True when every coordinate is an integer.
pub fn all_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// `1` as a BigRational.
pub fn rone() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(det(&[vec![2, 4, 3], vec![1, 0, 0], vec![0, 0, 1]]), -4);
        assert_eq!(det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn ranks_and_normals() {
        assert_eq!(rank(&[vec![1, 1, 1], vec![2, 2, 2], vec![0, 1, 0]]), 2);
        let nv = normal_vector(&[vec![-2, 1, 0], vec![-3, 0, 2]]);
        assert_eq!(primitive(&nv), vec![2, 4, 3]);
    }

    #[test]
    fn kernel_is_saturated() {
        // x + y + z = 0 in Z^3: kernel lattice has determinant-one Gram structure.
        let k = integer_kernel(&[vec![2, 2, 2]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(dot(v, &[1, 1, 1]), 0);
        }
        let minors = maximal_minors(&k);
        let g = minors.iter().fold(0, |g, &x| gcd(g, x));
        assert_eq!(g, 1);
    }

    #[test]
    fn coordinates_in_span() {
        let basis = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let c = coordinates(&basis, &[2, 3, 5]).unwrap();
        assert_eq!(c, vec![BigRational::from_integer(2.into()), BigRational::from_integer(3.into())]);
        assert!(coordinates(&basis, &[1, 1, 1]).is_none());
    }
}
