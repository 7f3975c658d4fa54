//! One-step pivot extension and the iterative linearization built on it.
//!
//! Pivoting on `(a, b)` with `r(b, a) = 0` produces
//! `r'(x, y) = max(r(x, y), min(r(x, a), r(b, y)))`, which is again a Zadeh
//! fuzzy order, extends `r`, and has `r'(a, b) = 1`, `r'(b, a) = 0`.
//! Linearization repeats the pivot on incomparable pairs until none remain.

use serde::Serialize;

use crate::axioms::check_order;
use crate::error::{Error, Result};
use crate::membership::Membership;
use crate::relation::{FuzzyRelation, Pair};

/// A single entry changed by a pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RaisedEntry {
    pub pair: Pair,
    pub old: Membership,
    pub new: Membership,
}

/// One application of the pivot extension inside a linearization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PivotStep {
    /// 1-based position in the trace.
    pub step_index: usize,
    pub a: usize,
    pub b: usize,
    pub entries_raised: Vec<RaisedEntry>,
}

/// Which orientation to impose on an incomparable pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum PivotPolicy {
    /// Scan unordered pairs `(i, j)`, `i < j`, row-major and place `x_i`
    /// below `x_j`.
    #[default]
    LowFirst,
    /// Same scan, but place `x_j` below `x_i`.
    HighFirst,
    /// Pivot on these ordered pairs first, in order, skipping any that are
    /// already comparable; remaining pairs are resolved with `LowFirst`.
    Explicit(Vec<Pair>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizationResult {
    pub relation: FuzzyRelation,
    pub trace: Vec<PivotStep>,
    /// Number of pivots applied.
    pub k: usize,
    /// Ordered incomparable entries of the input.
    pub m: usize,
}

impl LinearizationResult {
    pub fn pivots(&self) -> impl Iterator<Item = Pair> + '_ {
        self.trace.iter().map(|s| Pair::new(s.a, s.b))
    }
}

fn require_order(r: &FuzzyRelation) -> Result<()> {
    let report = check_order(r);
    if report.is_order() {
        Ok(())
    } else {
        Err(Error::NotAnOrder(format!(
            "fails {}",
            report.failed_axioms()
        )))
    }
}

fn check_pivot(r: &FuzzyRelation, a: usize, b: usize) -> Result<()> {
    r.check_index(a)?;
    r.check_index(b)?;
    if a == b {
        return Err(Error::EqualPivots(r.label(a).to_owned()));
    }
    let back = r.get(b, a);
    if back.is_positive() {
        return Err(Error::ReverseEntryPositive {
            a: r.label(a).to_owned(),
            b: r.label(b).to_owned(),
            value: back.value(),
        });
    }
    Ok(())
}

/// Applies the pivot formula without checking preconditions and returns the
/// raised entries in row-major order.
pub(crate) fn apply_pivot(r: &mut FuzzyRelation, a: usize, b: usize) -> Vec<RaisedEntry> {
    let n = r.len();
    let col_a: Vec<Membership> = (0..n).map(|x| r.get(x, a)).collect();
    let row_b: Vec<Membership> = r.row(b).to_vec();
    let mut raised = Vec::new();
    for (x, &xa) in col_a.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (y, &by) in row_b.iter().enumerate() {
            let old = r.get(x, y);
            let candidate = xa.min(by);
            if candidate > old {
                r.set(x, y, candidate);
                raised.push(RaisedEntry {
                    pair: Pair::new(x, y),
                    old,
                    new: candidate,
                });
            }
        }
    }
    raised
}

/// Extends the order `r` so that `a` lies below `b` with grade 1.
///
/// Fails when `r` is not a Zadeh fuzzy order, when `a == b`, or when
/// `r(b, a) > 0`.
pub fn pivot_extend(r: &FuzzyRelation, a: usize, b: usize) -> Result<FuzzyRelation> {
    require_order(r)?;
    check_pivot(r, a, b)?;
    let mut out = r.clone();
    apply_pivot(&mut out, a, b);
    Ok(out)
}

/// Label-addressed [`pivot_extend`].
pub fn pivot_extend_by_label(r: &FuzzyRelation, a: &str, b: &str) -> Result<FuzzyRelation> {
    pivot_extend(r, r.index_of(a)?, r.index_of(b)?)
}

pub fn linearize(r: &FuzzyRelation) -> Result<LinearizationResult> {
    linearize_with(r, &PivotPolicy::LowFirst)
}

pub fn linearize_with(r: &FuzzyRelation, policy: &PivotPolicy) -> Result<LinearizationResult> {
    require_order(r)?;
    let m = r.count_incomparable_entries();
    let mut current = r.clone();
    let mut trace = Vec::new();

    let mut pivot = |current: &mut FuzzyRelation, a: usize, b: usize| {
        let entries_raised = apply_pivot(current, a, b);
        trace.push(PivotStep {
            step_index: trace.len() + 1,
            a,
            b,
            entries_raised,
        });
    };

    if let PivotPolicy::Explicit(pairs) = policy {
        for p in pairs {
            r.check_index(p.first)?;
            r.check_index(p.second)?;
            if current.is_incomparable(p.first, p.second) {
                pivot(&mut current, p.first, p.second);
            }
        }
    }

    while let Some(p) = current.first_incomparable_pair() {
        let (a, b) = match policy {
            PivotPolicy::HighFirst => (p.second, p.first),
            _ => (p.first, p.second),
        };
        pivot(&mut current, a, b);
    }

    let k = trace.len();
    Ok(LinearizationResult {
        relation: current,
        trace,
        k,
        m,
    })
}

/// Re-applies a trace's pivots to `r` in order.
pub fn replay(r: &FuzzyRelation, trace: &[PivotStep]) -> Result<FuzzyRelation> {
    let mut current = r.clone();
    for step in trace {
        current = pivot_extend(&current, step.a, step.b)?;
    }
    Ok(current)
}
