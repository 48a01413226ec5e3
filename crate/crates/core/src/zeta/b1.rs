//! Empirical check of the B1 criterion: candidates whose contributing facets are all
//! B1 (and pairwise compatible) must not survive in the reduced zeta function.

use super::{local_igusa_zeta, ZetaError};
use crate::newton::{Hypotheses, NewtonPolyhedron, PoleClass};
use crate::polynomial::IntPolynomial;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub class: PoleClass,
    pub real_part: String,
    pub hypotheses: Hypotheses,
    pub expected_order: u32,
    /// Order in the reduced function (full atom multiplicity).
    pub order: u32,
    pub survives: bool,
    /// False when the criterion applies but the class survives, or the order exceeds
    /// the expected order.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct B1Report {
    pub p: u64,
    pub verdicts: Vec<ClassVerdict>,
    pub all_consistent: bool,
}

impl B1Report {
    /// Classes for which the criterion applied.
    pub fn applicable(&self) -> impl Iterator<Item = &ClassVerdict> {
        self.verdicts.iter().filter(|v| v.hypotheses == Hypotheses::Satisfied)
    }
}

pub fn verify_b1_theorem(f: &IntPolynomial, p: u64) -> Result<B1Report, ZetaError> {
    let z = local_igusa_zeta(f, p)?;
    let np = NewtonPolyhedron::new(f)?;
    let mut verdicts = Vec::new();
    for cand in np.candidate_poles() {
        for c in cand.classes {
            let survives = z.reduced.survives(c.class);
            let order = z.reduced.multiplicity(c.class);
            let applies = c.hypotheses == Hypotheses::Satisfied;
            verdicts.push(ClassVerdict {
                class: c.class,
                real_part: format!("-{}", cand.q),
                hypotheses: c.hypotheses,
                expected_order: c.expected_order,
                order,
                survives,
                consistent: !(applies && survives) && order <= c.expected_order,
            });
        }
    }
    let all_consistent = verdicts.iter().all(|v| v.consistent);
    Ok(B1Report { p, verdicts, all_consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::parse_polynomial;

    #[test]
    fn example_classes() {
        let f = parse_polynomial("x^3 + x*y + y^2 + z^2", 3).unwrap();
        for p in [3u64, 5] {
            let r = verify_b1_theorem(&f, p).unwrap();
            assert!(r.all_consistent);
            let applied: Vec<PoleClass> = r.applicable().map(|v| v.class).collect();
            assert_eq!(applied, vec![PoleClass { m: 2, sigma: 3, e: 3 }]);
        }
    }
}
