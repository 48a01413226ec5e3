//! Rational functions in `t = p^(-s)` with tagged denominators, their reduction, and
//! the pole report.
//!
//! Every denominator factor that can occur is a product of atoms
//! `F(t) = p^(sigma' phi(e)) Phi_e(t^m' / p^sigma')` (see [`PoleClass`]); atoms of
//! distinct classes are coprime, so reduction only needs division by atoms and by
//! their gcds with the numerator.

use crate::arith::totient;
use crate::cyclotomic::cyclotomic_poly;
use crate::field::{qpow, Field};
use crate::newton::PoleClass;
use crate::upoly::UPoly;
use serde::Serialize;
use std::collections::BTreeMap;

/// A denominator factor before reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DenFactor {
    /// `p^sigma - t^m` with `m >= 1`, coming from a cone generator.
    Power { m: i64, sigma: i64 },
    /// `p - t`, coming from `(p^s - 1)/(p^(s+1) - 1) = (1 - t)/(p - t)`.
    Shift,
    /// A single atom, monic in `t`.
    Atom(PoleClass),
}

impl DenFactor {
    /// The atoms of the factor and the sign `c` with `factor = c * prod(atoms)`.
    pub fn atoms(&self) -> (Vec<PoleClass>, i64) {
        match *self {
            DenFactor::Power { m, sigma } => (PoleClass::of_family(m, sigma), -1),
            DenFactor::Shift => (vec![PoleClass { m: 1, sigma: 1, e: 1 }], -1),
            DenFactor::Atom(c) => (vec![c], 1),
        }
    }

    pub fn poly<K: Field>(&self, p: u64) -> UPoly<K> {
        match *self {
            DenFactor::Power { m, sigma } => UPoly::constant(K::from_rational(&qpow(p, sigma)))
                .sub(&UPoly::monomial(K::one(), m as usize)),
            DenFactor::Shift => UPoly::new(vec![K::from_int(p as i64), K::one().neg()]),
            DenFactor::Atom(c) => atom_poly(c, p),
        }
    }

    pub fn render(&self) -> String {
        match *self {
            DenFactor::Power { m, sigma } => format!("(p^{sigma} - t^{m})"),
            DenFactor::Shift => "(p - t)".into(),
            DenFactor::Atom(c) => format!("F{c}"),
        }
    }
}

/// `p^(sigma' phi(e)) Phi_e(t^m' / p^sigma')`, monic of degree `m' phi(e)`.
pub fn atom_poly<K: Field>(class: PoleClass, p: u64) -> UPoly<K> {
    let phi = cyclotomic_poly(class.e as u32);
    let deg = totient(class.e as u64) as i64;
    let mut coeffs = vec![K::zero(); (class.m * deg) as usize + 1];
    for (k, c) in phi.coeffs().iter().enumerate() {
        let scale = qpow(p, class.sigma * (deg - k as i64));
        coeffs[class.m as usize * k] = K::from_rational(&(c * scale));
    }
    UPoly::new(coeffs)
}

/// `numerator / prod(tags)` at a fixed prime.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaRational<K: Field> {
    pub p: u64,
    pub numerator: UPoly<K>,
    pub tags: BTreeMap<DenFactor, u32>,
}

impl<K: Field> ZetaRational<K> {
    pub fn zero(p: u64) -> Self {
        ZetaRational { p, numerator: UPoly::zero(), tags: BTreeMap::new() }
    }

    pub fn constant(p: u64, c: K) -> Self {
        ZetaRational { p, numerator: UPoly::constant(c), tags: BTreeMap::new() }
    }

    pub fn new(p: u64, numerator: UPoly<K>, tags: BTreeMap<DenFactor, u32>) -> Self {
        let tags = tags.into_iter().filter(|(_, k)| *k > 0).collect();
        ZetaRational { p, numerator, tags }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn tag_product(&self, tags: &BTreeMap<DenFactor, u32>) -> UPoly<K> {
        tags.iter()
            .fold(UPoly::one(), |acc, (f, &k)| acc.mul(&f.poly::<K>(self.p).pow(k)))
    }

    pub fn denominator(&self) -> UPoly<K> {
        self.tag_product(&self.tags)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut tags = self.tags.clone();
        for (f, k) in &other.tags {
            *tags.entry(*f).or_insert(0) += k;
        }
        ZetaRational::new(self.p, self.numerator.mul(&other.numerator), tags)
    }

    pub fn scale(&self, c: &K) -> Self {
        ZetaRational { p: self.p, numerator: self.numerator.scale(c), tags: self.tags.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut tags = self.tags.clone();
        for (f, &k) in &other.tags {
            let e = tags.entry(*f).or_insert(0);
            *e = (*e).max(k);
        }
        let missing = |own: &BTreeMap<DenFactor, u32>| -> BTreeMap<DenFactor, u32> {
            tags.iter()
                .map(|(f, &k)| (*f, k - own.get(f).copied().unwrap_or(0)))
                .filter(|(_, k)| *k > 0)
                .collect()
        };
        let a = self.numerator.mul(&self.tag_product(&missing(&self.tags)));
        let b = other.numerator.mul(&self.tag_product(&missing(&other.tags)));
        ZetaRational::new(self.p, a.add(&b), tags)
    }

    /// Cancel common factors; the result is in lowest terms with a monic denominator.
    pub fn reduce(&self) -> ReducedZeta<K> {
        let mut by_class: BTreeMap<PoleClass, u32> = BTreeMap::new();
        let mut sign = 1i64;
        for (f, &k) in &self.tags {
            let (atoms, c) = f.atoms();
            if c < 0 && k % 2 == 1 {
                sign = -sign;
            }
            for a in atoms {
                *by_class.entry(a).or_insert(0) += k;
            }
        }
        let mut num = self.numerator.scale(&K::from_int(sign));
        let mut work: Vec<DenomPart<K>> = by_class
            .into_iter()
            .map(|(class, k)| DenomPart { poly: atom_poly(class, self.p), multiplicity: k, class, partial: false })
            .collect();
        let mut done: Vec<DenomPart<K>> = Vec::new();
        if num.is_zero() {
            work.clear();
        }
        while let Some(mut part) = work.pop() {
            let mut split = false;
            while part.multiplicity > 0 {
                let (quot, rem) = num.div_rem(&part.poly);
                if rem.is_zero() {
                    num = quot;
                    part.multiplicity -= 1;
                    continue;
                }
                let g = rem.gcd(&part.poly);
                if g.degree() == Some(0) {
                    break;
                }
                // A proper factor of the atom divides the numerator: split and retry.
                num = num.div_exact(&g).expect("gcd divides numerator");
                let h = part.poly.div_exact(&g).expect("gcd divides atom");
                work.push(DenomPart { poly: g, multiplicity: part.multiplicity - 1, class: part.class, partial: true });
                work.push(DenomPart { poly: h, multiplicity: part.multiplicity, class: part.class, partial: true });
                split = true;
                break;
            }
            if !split && part.multiplicity > 0 {
                done.push(part);
            }
        }
        done.sort_by(|a, b| a.class.cmp(&b.class).then(a.poly.degree().cmp(&b.poly.degree())));
        let families = self.tags.keys().copied().collect();
        ReducedZeta { p: self.p, numerator: num, factors: done, families }
    }
}

/// One factor of a reduced denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct DenomPart<K: Field> {
    pub poly: UPoly<K>,
    pub multiplicity: u32,
    pub class: PoleClass,
    /// True when only a proper factor of the class atom survives.
    pub partial: bool,
}

/// A rational function in lowest terms: `numerator / prod(poly^multiplicity)`.
#[derive(Clone, Debug)]
pub struct ReducedZeta<K: Field> {
    pub p: u64,
    pub numerator: UPoly<K>,
    pub factors: Vec<DenomPart<K>>,
    /// Denominator factors present before reduction.
    pub families: Vec<DenFactor>,
}

impl<K: Field> PartialEq for ReducedZeta<K> {
    /// Equality of canonical forms (numerator and monic denominator).
    fn eq(&self, other: &Self) -> bool {
        self.numerator == other.numerator && self.denominator() == other.denominator()
    }
}

impl<K: Field> ReducedZeta<K> {
    pub fn denominator(&self) -> UPoly<K> {
        self.factors.iter().fold(UPoly::one(), |acc, f| acc.mul(&f.poly.pow(f.multiplicity)))
    }

    /// Multiplicity of the full atom of `class` in the denominator.
    pub fn multiplicity(&self, class: PoleClass) -> u32 {
        self.factors.iter().filter(|f| f.class == class && !f.partial).map(|f| f.multiplicity).sum()
    }

    /// True when some factor of the class atom (full or partial) survives.
    pub fn survives(&self, class: PoleClass) -> bool {
        self.factors.iter().any(|f| f.class == class)
    }

    /// Power series coefficients of `t^0 .. t^(len-1)`.
    pub fn series(&self, len: usize) -> Vec<K> {
        self.numerator.series_div(&self.denominator(), len)
    }

    pub fn render(&self) -> String {
        if self.factors.is_empty() {
            return self.numerator.to_string();
        }
        let den: Vec<String> = self
            .factors
            .iter()
            .map(|f| {
                let base = format!("({})", f.poly);
                if f.multiplicity == 1 {
                    base
                } else {
                    format!("{base}^{}", f.multiplicity)
                }
            })
            .collect();
        format!("({}) / ({})", self.numerator, den.join(" * "))
    }

    /// Per-class account of which candidate poles survive.
    pub fn pole_report(&self) -> PoleReport {
        let mut classes: BTreeMap<PoleClass, Vec<(i64, i64)>> = BTreeMap::new();
        for fam in &self.families {
            let (atoms, _) = fam.atoms();
            let (m, sigma) = match *fam {
                DenFactor::Power { m, sigma } => (m, sigma),
                DenFactor::Shift => (1, 1),
                DenFactor::Atom(c) => (c.m * c.e, c.sigma * c.e),
            };
            for a in atoms {
                let list = classes.entry(a).or_default();
                if !list.contains(&(m, sigma)) {
                    list.push((m, sigma));
                }
            }
        }
        let entries = classes
            .into_iter()
            .map(|(class, fams)| {
                let partial: Vec<(String, u32)> = self
                    .factors
                    .iter()
                    .filter(|f| f.class == class && f.partial)
                    .map(|f| (f.poly.to_string(), f.multiplicity))
                    .collect();
                ClassReport {
                    class,
                    real_part: format!("-{}", num_rational::Ratio::new(class.sigma, class.m)),
                    atom: atom_poly::<K>(class, self.p).to_string(),
                    multiplicity: self.multiplicity(class),
                    partial_factors: partial,
                    residues: fams
                        .iter()
                        .map(|&(m, sigma)| FamilyResidues { m, sigma, residues: class.residues_in_family(m, sigma) })
                        .collect(),
                }
            })
            .collect();
        PoleReport { p: self.p, classes: entries }
    }
}

/// Surviving multiplicities per pole class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleReport {
    pub p: u64,
    pub classes: Vec<ClassReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub class: PoleClass,
    pub real_part: String,
    pub atom: String,
    /// Multiplicity of the whole atom in the reduced denominator (the pole order).
    pub multiplicity: u32,
    /// Proper factors of the atom that survive when the atom itself does not divide cleanly.
    pub partial_factors: Vec<(String, u32)>,
    /// Candidates `-sigma/m + 2 pi i k/(m log p)` of the class, listed as residues `k mod m`.
    pub residues: Vec<FamilyResidues>,
}

impl ClassReport {
    pub fn survives(&self) -> bool {
        self.multiplicity > 0 || !self.partial_factors.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyResidues {
    pub m: i64,
    pub sigma: i64,
    pub residues: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;
    use num_rational::BigRational;

    #[test]
    fn atoms_factor_the_families() {
        // t^6 - p^9 = (t^2 - p^3)(t^4 + p^3 t^2 + p^6)
        let p = 3;
        let fam: UPoly<BigRational> = DenFactor::Power { m: 6, sigma: 9 }.poly(p).neg();
        let prod = PoleClass::of_family(6, 9)
            .into_iter()
            .fold(UPoly::one(), |acc, c| acc.mul(&atom_poly::<BigRational>(c, p)));
        assert_eq!(fam, prod);
        let f3: UPoly<BigRational> = atom_poly(PoleClass { m: 2, sigma: 3, e: 3 }, p);
        assert_eq!(f3, UPoly::new(vec![q(729), q(0), q(27), q(0), q(1)]));
    }

    #[test]
    fn reduction_cancels_common_atoms() {
        // (p - t) (p^2 - t^2) / ((p - t)^2 (p^2 - t^2)) = 1 / (p - t)
        let p = 5;
        let num = DenFactor::Shift.poly::<BigRational>(p).mul(&DenFactor::Power { m: 2, sigma: 2 }.poly(p));
        let mut tags = BTreeMap::new();
        tags.insert(DenFactor::Shift, 2);
        tags.insert(DenFactor::Power { m: 2, sigma: 2 }, 1);
        let z = ZetaRational::new(p, num, tags).reduce();
        let mut expect_tags = BTreeMap::new();
        expect_tags.insert(DenFactor::Shift, 1);
        let expect = ZetaRational::new(p, UPoly::one(), expect_tags).reduce();
        assert_eq!(z, expect);
        assert_eq!(z.multiplicity(PoleClass { m: 1, sigma: 1, e: 1 }), 1);
        assert_eq!(z.multiplicity(PoleClass { m: 1, sigma: 1, e: 2 }), 0);
    }

    #[test]
    fn partial_cancellation_is_reported() {
        // At p = 2 the atom of class (2,1,4) is t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2).
        let p = 2;
        let class = PoleClass { m: 2, sigma: 1, e: 4 };
        let atom: UPoly<BigRational> = atom_poly(class, p);
        assert_eq!(atom, UPoly::new(vec![q(4), q(0), q(0), q(0), q(1)]));
        let mut tags = BTreeMap::new();
        tags.insert(DenFactor::Atom(class), 1);
        let z = ZetaRational::new(p, UPoly::new(vec![q(2), q(2), q(1)]), tags).reduce();
        assert_eq!(z.multiplicity(class), 0);
        assert!(z.survives(class));
        assert_eq!(z.denominator(), UPoly::new(vec![q(2), q(-2), q(1)]));
    }
}
