//! Zadeh fuzzy order axioms and linearity, with complete witness lists.
//!
//! Witnesses are emitted in row-major order. A verdict passes iff its witness
//! list is empty.

use serde::Serialize;

use crate::membership::Membership;
use crate::relation::{FuzzyRelation, Pair};

/// A diagonal entry different from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityWitness {
    pub element: usize,
    pub value: Membership,
}

/// An unordered pair `(x, y)`, `x < y`, with both directions positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AntisymmetryWitness {
    pub pair: Pair,
    pub forward: Membership,
    pub backward: Membership,
}

/// A triple with `r(x, z) < min(r(x, y), r(y, z))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub direct: Membership,
    pub through: Membership,
}

impl ReflexivityWitness {
    pub fn holds_in(&self, r: &FuzzyRelation) -> bool {
        !r.get(self.element, self.element).is_one()
    }
}

impl AntisymmetryWitness {
    pub fn holds_in(&self, r: &FuzzyRelation) -> bool {
        let Pair { first, second } = self.pair;
        first != second && r.get(first, second).is_positive() && r.get(second, first).is_positive()
    }
}

impl TransitivityWitness {
    pub fn holds_in(&self, r: &FuzzyRelation) -> bool {
        r.get(self.x, self.z) < r.get(self.x, self.y).min(r.get(self.y, self.z))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub reflexivity: Vec<ReflexivityWitness>,
    pub antisymmetry: Vec<AntisymmetryWitness>,
    pub transitivity: Vec<TransitivityWitness>,
}

impl AxiomReport {
    pub fn reflexive(&self) -> bool {
        self.reflexivity.is_empty()
    }

    pub fn antisymmetric(&self) -> bool {
        self.antisymmetry.is_empty()
    }

    pub fn transitive(&self) -> bool {
        self.transitivity.is_empty()
    }

    /// True iff all three axioms hold.
    pub fn is_order(&self) -> bool {
        self.reflexive() && self.antisymmetric() && self.transitive()
    }

    /// Comma-separated names of the failing axioms.
    pub fn failed_axioms(&self) -> String {
        let mut names = Vec::new();
        if !self.reflexive() {
            names.push("reflexivity");
        }
        if !self.antisymmetric() {
            names.push("antisymmetry");
        }
        if !self.transitive() {
            names.push("transitivity");
        }
        names.join(", ")
    }
}

pub fn reflexivity_witnesses(r: &FuzzyRelation) -> Vec<ReflexivityWitness> {
    (0..r.len())
        .filter(|&x| !r.get(x, x).is_one())
        .map(|x| ReflexivityWitness {
            element: x,
            value: r.get(x, x),
        })
        .collect()
}

pub fn antisymmetry_witnesses(r: &FuzzyRelation) -> Vec<AntisymmetryWitness> {
    let n = r.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let (forward, backward) = (r.get(x, y), r.get(y, x));
            if forward.is_positive() && backward.is_positive() {
                out.push(AntisymmetryWitness {
                    pair: Pair::new(x, y),
                    forward,
                    backward,
                });
            }
        }
    }
    out
}

pub fn transitivity_witnesses(r: &FuzzyRelation) -> Vec<TransitivityWitness> {
    let n = r.len();
    let mut out = Vec::new();
    for x in 0..n {
        let row_x = r.row(x);
        for y in 0..n {
            let xy = row_x[y];
            if xy.is_zero() {
                continue;
            }
            let row_y = r.row(y);
            for z in 0..n {
                let through = xy.min(row_y[z]);
                if row_x[z] < through {
                    out.push(TransitivityWitness {
                        x,
                        y,
                        z,
                        direct: row_x[z],
                        through,
                    });
                }
            }
        }
    }
    out.sort_by_key(|w| (w.x, w.z, w.y));
    out
}

pub fn is_reflexive(r: &FuzzyRelation) -> bool {
    (0..r.len()).all(|x| r.get(x, x).is_one())
}

pub fn is_antisymmetric(r: &FuzzyRelation) -> bool {
    antisymmetry_witnesses(r).is_empty()
}

/// `r(x, z) ≥ max_y min(r(x, y), r(y, z))` for all `x`, `z`.
pub fn is_transitive(r: &FuzzyRelation) -> bool {
    let n = r.len();
    (0..n).all(|x| {
        let row_x = r.row(x);
        (0..n).all(|y| {
            let xy = row_x[y];
            xy.is_zero()
                || r.row(y)
                    .iter()
                    .zip(row_x)
                    .all(|(&yz, &xz)| xz >= xy.min(yz))
        })
    })
}

pub fn check_order(r: &FuzzyRelation) -> AxiomReport {
    AxiomReport {
        reflexivity: reflexivity_witnesses(r),
        antisymmetry: antisymmetry_witnesses(r),
        transitivity: transitivity_witnesses(r),
    }
}

pub fn is_order(r: &FuzzyRelation) -> bool {
    is_reflexive(r) && is_antisymmetric(r) && is_transitive(r)
}

/// Every pair of distinct elements is comparable. The witnesses are
/// [`FuzzyRelation::incomparable_pairs`].
pub fn is_linear(r: &FuzzyRelation) -> bool {
    r.first_incomparable_pair().is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::default_labels;

    fn rel(rows: &[&[f64]]) -> FuzzyRelation {
        FuzzyRelation::from_unlabelled_rows(rows).unwrap()
    }

    #[test]
    fn reflexivity_examples() {
        assert!(check_order(&rel(&[&[1.0]])).reflexive());
        let r = rel(&[&[0.9, 0.0], &[0.0, 1.0]]);
        let report = check_order(&r);
        assert_eq!(
            report.reflexivity,
            vec![ReflexivityWitness {
                element: 0,
                value: Membership::new(0.9).unwrap()
            }]
        );
        assert!(!is_reflexive(&r));
    }

    #[test]
    fn antisymmetry_examples() {
        let r = rel(&[&[1.0, 0.3], &[0.2, 1.0]]);
        let report = check_order(&r);
        assert_eq!(report.antisymmetry.len(), 1);
        let w = report.antisymmetry[0];
        assert_eq!(w.pair, Pair::new(0, 1));
        assert_eq!(w.forward.value(), 0.3);
        assert_eq!(w.backward.value(), 0.2);
        assert!(report.reflexive() && report.transitive());
        assert_eq!(report.failed_axioms(), "antisymmetry");

        let id = FuzzyRelation::identity(default_labels(4)).unwrap();
        assert!(is_antisymmetric(&id));
    }

    #[test]
    fn transitivity_examples() {
        let r = rel(&[&[1.0, 0.5, 0.0], &[0.0, 1.0, 0.5], &[0.0, 0.0, 1.0]]);
        let report = check_order(&r);
        assert_eq!(
            report.transitivity,
            vec![TransitivityWitness {
                x: 0,
                y: 1,
                z: 2,
                direct: Membership::ZERO,
                through: Membership::new(0.5).unwrap(),
            }]
        );
        assert!(!is_transitive(&r));
        assert!(is_transitive(
            &FuzzyRelation::identity(default_labels(3)).unwrap()
        ));
    }

    #[test]
    fn non_reflexive_singleton() {
        let report = check_order(&rel(&[&[0.5]]));
        assert!(!report.reflexive());
        assert!(report.antisymmetric() && report.transitive());
        assert!(!report.is_order());
    }

    #[test]
    fn witnesses_recheck() {
        let r = rel(&[&[0.7, 0.5, 0.0], &[0.4, 1.0, 0.5], &[0.0, 0.9, 1.0]]);
        let report = check_order(&r);
        assert!(!report.is_order());
        assert!(report.reflexivity.iter().all(|w| w.holds_in(&r)));
        assert!(report.antisymmetry.iter().all(|w| w.holds_in(&r)));
        assert!(report.transitivity.iter().all(|w| w.holds_in(&r)));
    }

    #[test]
    fn singleton_is_linear() {
        assert!(is_linear(&rel(&[&[1.0]])));
    }
}
