//! The local zeta function with `p` kept as a variable `P`.
//!
//! Torus counts `N_tau` become expressions in `P` and one fresh symbol per face whose
//! count cannot be derived from a smaller face. Denominators are tracked as powers of
//! `P - 1` and of atoms, which are monic in `t` and irreducible over `Q(P, symbols)`,
//! so reduction is exact division.

use super::reduce::{DenFactor, ReducedZeta, ZetaRational};
use super::{face_cone_series, ZetaError};
use crate::arith::totient;
use crate::cyclotomic::cyclotomic_poly;
use crate::field::{q, qpow};
use crate::lattice::Convention;
use crate::mpoly::MPoly;
use crate::newton::{FaceId, NewtonPolyhedron, PoleClass};
use crate::polynomial::IntPolynomial;
use crate::upoly::UPoly;
use num_rational::BigRational;
use std::collections::BTreeMap;

/// Index of `t` (or `T`) in symbolic polynomials.
pub const T_VAR: usize = 0;
/// Index of `P` (or `L`) in symbolic polynomials.
pub const P_VAR: usize = 1;

/// `P^(sigma' phi(e)) Phi_e(t^m' / P^sigma')` as a polynomial in `(t, P, ...)`.
pub fn atom_mpoly(class: PoleClass, nvars: usize) -> MPoly {
    let phi = cyclotomic_poly(class.e as u32);
    let deg = totient(class.e as u64) as i32;
    let mut out = MPoly::zero(nvars);
    for (k, c) in phi.coeffs().iter().enumerate() {
        let mut e = vec![0i32; nvars];
        e[T_VAR] = class.m as i32 * k as i32;
        e[P_VAR] = class.sigma as i32 * (deg - k as i32);
        out = out.add(&MPoly::monomial(e, c.clone()));
    }
    out
}

/// `num / ((P - 1)^pm1 * prod atoms)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRational {
    pub num: MPoly,
    pub pm1: u32,
    pub atoms: BTreeMap<PoleClass, u32>,
}

impl SymRational {
    pub fn from_poly(num: MPoly) -> Self {
        SymRational { num, pm1: 0, atoms: BTreeMap::new() }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MPoly::zero(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn den_poly(&self, pm1: u32, atoms: &BTreeMap<PoleClass, u32>) -> MPoly {
        let nv = self.nvars();
        let base = MPoly::var(nv, P_VAR).sub(&MPoly::one(nv)).pow(pm1);
        atoms.iter().fold(base, |acc, (c, &k)| acc.mul(&atom_mpoly(*c, nv).pow(k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut atoms = self.atoms.clone();
        for (c, k) in &other.atoms {
            *atoms.entry(*c).or_insert(0) += k;
        }
        SymRational { num: self.num.mul(&other.num), pm1: self.pm1 + other.pm1, atoms }
    }

    pub fn mul_poly(&self, f: &MPoly) -> Self {
        SymRational { num: self.num.mul(f), pm1: self.pm1, atoms: self.atoms.clone() }
    }

    pub fn neg(&self) -> Self {
        SymRational { num: self.num.neg(), pm1: self.pm1, atoms: self.atoms.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let pm1 = self.pm1.max(other.pm1);
        let mut atoms = self.atoms.clone();
        for (c, &k) in &other.atoms {
            let e = atoms.entry(*c).or_insert(0);
            *e = (*e).max(k);
        }
        let lift = |x: &SymRational| {
            let missing: BTreeMap<PoleClass, u32> = atoms
                .iter()
                .map(|(c, &k)| (*c, k - x.atoms.get(c).copied().unwrap_or(0)))
                .filter(|(_, k)| *k > 0)
                .collect();
            x.num.mul(&x.den_poly(pm1 - x.pm1, &missing))
        };
        SymRational { num: lift(self).add(&lift(other)), pm1, atoms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cancel atoms and factors `P - 1` dividing the numerator.
    pub fn reduce(&self) -> SymRational {
        let nv = self.nvars();
        let mut num = self.num.clone();
        if num.is_zero() {
            return SymRational::zero(nv);
        }
        let mut atoms = BTreeMap::new();
        for (c, &k) in &self.atoms {
            let a = atom_mpoly(*c, nv);
            let mut left = k;
            while left > 0 {
                match num.div_exact_monic(&a, T_VAR) {
                    Some(qq) => {
                        num = qq;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                atoms.insert(*c, left);
            }
        }
        let pm1_poly = MPoly::var(nv, P_VAR).sub(&MPoly::one(nv));
        let mut pm1 = self.pm1;
        while pm1 > 0 {
            match num.div_exact_monic(&pm1_poly, P_VAR) {
                Some(qq) => {
                    num = qq;
                    pm1 -= 1;
                }
                None => break,
            }
        }
        SymRational { num, pm1, atoms }
    }

    /// True when any variable from index `first` onwards occurs in the numerator.
    pub fn uses_symbols_from(&self, first: usize) -> bool {
        (first..self.nvars()).any(|v| self.num.uses_var(v))
    }

    /// Substitute `P = p` and symbol values, producing a reduced function of `t`.
    pub fn specialize(&self, p: u64, symbols: &[(usize, BigRational)]) -> ReducedZeta<BigRational> {
        let mut subs = vec![(P_VAR, q(p as i64))];
        subs.extend(symbols.iter().cloned());
        let uni = self.num.substitute(&subs);
        let num = UPoly::new(uni.univariate_coeffs(T_VAR));
        let scale = (q(p as i64) - q(1)).pow(-(self.pm1 as i32));
        let tags = self.atoms.iter().map(|(c, &k)| (DenFactor::Atom(*c), k)).collect();
        ZetaRational::new(p, num.scale(&scale), tags).reduce()
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut den: Vec<String> = Vec::new();
        if self.pm1 > 0 {
            let base = format!("({} - 1)", names[P_VAR]);
            den.push(if self.pm1 == 1 { base } else { format!("{base}^{}", self.pm1) });
        }
        for (c, &k) in &self.atoms {
            let base = format!("({})", atom_mpoly(*c, self.nvars()).render(names));
            den.push(if k == 1 { base } else { format!("{base}^{k}") });
        }
        if den.is_empty() {
            self.num.render(names)
        } else {
            format!("({}) / ({})", self.num.render(names), den.join(" * "))
        }
    }
}

/// How the torus-point class of a face is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassRule {
    /// A vertex: `f_tau` is a monomial without torus zeros.
    Zero,
    /// `f_tau = c x_var x^a + f_base`: zeros are counted through the base face.
    Split { var: usize, base: FaceId },
    /// No reduction applies; a fresh symbol is introduced.
    Symbol,
}

pub fn class_rule(np: &NewtonPolyhedron, face: FaceId) -> ClassRule {
    if np.face(face).is_vertex() {
        return ClassRule::Zero;
    }
    match np.height_one_splits(face).first() {
        Some(&(var, base)) => ClassRule::Split { var, base },
        None => ClassRule::Symbol,
    }
}

/// Faces needing a symbol, in face order, reached from the compact faces.
pub fn symbol_faces(np: &NewtonPolyhedron) -> Vec<FaceId> {
    let mut out: Vec<FaceId> = Vec::new();
    for face in np.compact_faces() {
        let mut cur = face.id;
        loop {
            match class_rule(np, cur) {
                ClassRule::Zero => break,
                ClassRule::Split { base, .. } => cur = base,
                ClassRule::Symbol => {
                    if !out.contains(&cur) {
                        out.push(cur);
                    }
                    break;
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Symbolic face table and total.
#[derive(Clone, Debug)]
pub struct SymbolicZeta {
    /// Variable names: `t`, `P`, then one `N[...]` per symbol face.
    pub names: Vec<String>,
    pub symbol_faces: Vec<FaceId>,
    pub faces: Vec<SymbolicFace>,
    pub total: SymRational,
    pub reduced: SymRational,
}

#[derive(Clone, Debug)]
pub struct SymbolicFace {
    pub face: FaceId,
    pub label: String,
    pub count: SymRational,
    pub l: SymRational,
    pub s: SymRational,
}

impl SymbolicZeta {
    /// True when the reduced result still involves any face symbol.
    pub fn depends_on_symbols(&self) -> bool {
        self.reduced.uses_symbols_from(2)
    }

    /// Substitute the prime and the torus counts of the symbol faces.
    pub fn specialize(&self, np: &NewtonPolyhedron, p: u64) -> Result<ReducedZeta<BigRational>, ZetaError> {
        let mut values = Vec::new();
        for (i, &face) in self.symbol_faces.iter().enumerate() {
            let c = crate::finite_field::count_torus_solutions(&np.restriction(face), p)?;
            values.push((2 + i, q(c as i64)));
        }
        Ok(self.reduced.specialize(p, &values))
    }
}

/// Symbolic torus count of each face, by the rules of [`class_rule`].
fn symbolic_count(np: &NewtonPolyhedron, face: FaceId, symbols: &[FaceId], nv: usize) -> SymRational {
    let n = np.nvars() as u32;
    match class_rule(np, face) {
        ClassRule::Zero => SymRational::zero(nv),
        ClassRule::Symbol => {
            let idx = symbols.iter().position(|&s| s == face).expect("symbol registered");
            SymRational::from_poly(MPoly::var(nv, 2 + idx))
        }
        ClassRule::Split { base, .. } => {
            let pm1 = MPoly::var(nv, P_VAR).sub(&MPoly::one(nv));
            let mut b = symbolic_count(np, base, symbols, nv);
            b.pm1 += 1;
            SymRational::from_poly(pm1.pow(n - 1)).sub(&b)
        }
    }
}

/// `Z_f` with `p` symbolic; assumes `f` non-degenerate over `F_p` and the height-one
/// coefficients are `p`-units for the primes of interest.
pub fn local_igusa_zeta_symbolic(f: &IntPolynomial) -> Result<SymbolicZeta, ZetaError> {
    let np = NewtonPolyhedron::new(f)?;
    let n = np.nvars();
    let symbols = symbol_faces(&np);
    let nv = 2 + symbols.len();
    let mut names = vec!["t".to_string(), "P".to_string()];
    names.extend(symbols.iter().map(|&s| format!("N{}", np.face(s).label())));
    let pvar = MPoly::var(nv, P_VAR);
    let one = MPoly::one(nv);
    let shift_atom = PoleClass { m: 1, sigma: 1, e: 1 };
    let mut faces = Vec::new();
    let mut total = SymRational::zero(nv);
    for face in np.compact_faces() {
        let count = symbolic_count(&np, face.id, &symbols, nv);
        // ((P-1)/P)^n - N P^(1-n) (1 - t)/(P - t), and (P - t) = -(t - P).
        let mut l = SymRational::from_poly(pvar.sub(&one).pow(n as u32).shift(P_VAR, -(n as i32)));
        if !count.is_zero() {
            let one_minus_t = one.sub(&MPoly::var(nv, T_VAR));
            let mut extra = count.mul_poly(&one_minus_t.shift(P_VAR, 1 - n as i32));
            *extra.atoms.entry(shift_atom).or_insert(0) += 1;
            l = l.add(&extra);
        }
        let mut s = SymRational::zero(nv);
        for (_, piece) in face_cone_series(&np, face.id, Convention::HalfOpenLow)? {
            let total_m: i64 = piece.weights.iter().map(|w| w.0).sum();
            let mut num = MPoly::zero(nv);
            for &(sigma_h, m_h) in &piece.points {
                let mut e = vec![0i32; nv];
                e[T_VAR] = (total_m - m_h) as i32;
                e[P_VAR] = sigma_h as i32;
                num = num.add(&MPoly::monomial(e, q(1)));
            }
            let mut term = SymRational::from_poly(num);
            for &(m, sigma) in &piece.weights {
                if m == 0 {
                    assert_eq!(sigma, 1, "weight-zero generators are unit vectors");
                    term.pm1 += 1;
                } else {
                    term.num = term.num.neg();
                    for c in PoleClass::of_family(m, sigma) {
                        *term.atoms.entry(c).or_insert(0) += 1;
                    }
                }
            }
            s = s.add(&term);
        }
        total = total.add(&l.mul(&s));
        faces.push(SymbolicFace { face: face.id, label: face.label(), count, l, s });
    }
    let reduced = total.reduce();
    Ok(SymbolicZeta { names, symbol_faces: symbols, faces, total, reduced })
}

/// `p^k` helper for callers building expected values.
pub fn p_power(p: u64, k: i64) -> BigRational {
    qpow(p, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    #[test]
    fn atom_in_two_variables() {
        let a = atom_mpoly(PoleClass { m: 2, sigma: 3, e: 3 }, 2);
        let names = vec!["t".to_string(), "P".to_string()];
        assert_eq!(a.render(&names), "t^4 + t^2*P^3 + P^6");
    }

    #[test]
    fn symbolic_z_specializes() {
        let f = parse_polynomial("z", 3).unwrap();
        let z = local_igusa_zeta_symbolic(&f).unwrap();
        assert!(z.symbol_faces.is_empty());
        let np = NewtonPolyhedron::new(&f).unwrap();
        for p in [3u64, 5, 7] {
            let concrete = super::super::local_igusa_zeta(&f, p).unwrap().reduced;
            assert_eq!(z.specialize(&np, p).unwrap(), concrete);
        }
    }
}
