//! Finite fuzzy relations and the definitional predicates that do not need a
//! full axiom report: incomparability, the extension ordering and pointwise
//! infimum.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::membership::Membership;

/// An element of the carrier: its label and its position in the carrier
/// ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    pub index: usize,
    pub label: String,
}

/// An ordered pair of carrier positions.
///
/// Unordered pairs (incomparable pairs) are canonicalized with
/// `first < second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pair {
    pub first: usize,
    pub second: usize,
}

impl Pair {
    pub fn new(first: usize, second: usize) -> Self {
        Pair { first, second }
    }

    pub fn reversed(self) -> Self {
        Pair {
            first: self.second,
            second: self.first,
        }
    }
}

/// A fuzzy relation `r : X × X → [0, 1]` on a finite, labelled carrier.
///
/// Entry `(i, j)` of the grid holds `r(x_i, x_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyRelation {
    labels: Vec<String>,
    grid: Vec<Membership>,
}

impl FuzzyRelation {
    /// Builds a relation from labels and a row-major grid of validated grades.
    pub fn from_grid(labels: Vec<String>, grid: Vec<Membership>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if grid.len() != n * n {
            return Err(Error::NonSquare {
                n,
                entries: grid.len(),
                expected: n * n,
            });
        }
        let mut seen = HashSet::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel(i));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(FuzzyRelation { labels, grid })
    }

    /// Builds a relation from labels and raw rows, validating every value.
    pub fn from_rows<L, R>(labels: &[L], rows: &[R]) -> Result<Self>
    where
        L: AsRef<str>,
        R: AsRef<[f64]>,
    {
        let n = labels.len();
        if rows.len() != n {
            return Err(Error::NonSquare {
                n,
                entries: rows.iter().map(|r| r.as_ref().len()).sum(),
                expected: n * n,
            });
        }
        let mut grid = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NonSquare {
                    n,
                    entries: rows.iter().map(|r| r.as_ref().len()).sum(),
                    expected: n * n,
                });
            }
            for &v in row {
                grid.push(Membership::new(v)?);
            }
        }
        let labels = labels.iter().map(|l| l.as_ref().to_owned()).collect();
        FuzzyRelation::from_grid(labels, grid)
    }

    /// Same as [`FuzzyRelation::from_rows`] with labels `x0, x1, ...`.
    pub fn from_unlabelled_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        FuzzyRelation::from_rows(&default_labels(rows.len()), rows)
    }

    /// The crisp identity relation: 1 on the diagonal, 0 elsewhere.
    pub fn identity(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        let mut grid = vec![Membership::ZERO; n * n];
        for i in 0..n {
            grid[i * n + i] = Membership::ONE;
        }
        FuzzyRelation::from_grid(labels, grid)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: carriers are nonempty by construction.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn element(&self, index: usize) -> Element {
        Element {
            index,
            label: self.labels[index].clone(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                n: self.len(),
            })
        }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Membership {
        self.grid[x * self.len() + y]
    }

    #[inline]
    pub(crate) fn set(&mut self, x: usize, y: usize, value: Membership) {
        let n = self.len();
        self.grid[x * n + y] = value;
    }

    /// Row-major view of the grid.
    pub fn grid(&self) -> &[Membership] {
        &self.grid
    }

    pub fn row(&self, x: usize) -> &[Membership] {
        let n = self.len();
        &self.grid[x * n..(x + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Membership]> {
        self.grid.chunks(self.len())
    }

    /// Raw `f64` rows, mostly for tests and serialization.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows()
            .map(|row| row.iter().map(|m| m.value()).collect())
            .collect()
    }

    pub fn same_carrier(&self, other: &FuzzyRelation) -> bool {
        self.labels == other.labels
    }

    pub(crate) fn ensure_same_carrier(&self, other: &FuzzyRelation) -> Result<()> {
        if self.same_carrier(other) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    /// Distinct `x`, `y` with `r(x, y) = r(y, x) = 0`.
    #[inline]
    pub fn is_incomparable(&self, x: usize, y: usize) -> bool {
        x != y && self.get(x, y).is_zero() && self.get(y, x).is_zero()
    }

    /// Every incomparable unordered pair `(i, j)`, `i < j`, in row-major order.
    pub fn incomparable_pairs(&self) -> Vec<Pair> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.is_incomparable(i, j) {
                    out.push(Pair::new(i, j));
                }
            }
        }
        out
    }

    pub(crate) fn first_incomparable_pair(&self) -> Option<Pair> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| Pair::new(i, j)))
            .find(|p| self.is_incomparable(p.first, p.second))
    }

    /// Number of ordered pairs `(x, y)`, `x ≠ y`, with both directions 0.
    /// Always even.
    pub fn count_incomparable_entries(&self) -> usize {
        2 * self.incomparable_pairs().len()
    }

    /// Ordered pairs `(x, y)`, `x ≠ y`, with `r(x, y) > 0`, row-major.
    pub fn positive_off_diagonal(&self) -> Vec<Pair> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && self.get(x, y).is_positive() {
                    out.push(Pair::new(x, y));
                }
            }
        }
        out
    }

    pub fn pair_labels(&self, pair: Pair) -> (&str, &str) {
        (self.label(pair.first), self.label(pair.second))
    }
}

impl fmt::Display for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows()
            .map(|row| row.iter().map(|m| m.to_string()).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .chain(self.labels.iter().map(String::len))
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$}", "")?;
        for label in &self.labels {
            write!(f, " {label:>width$}")?;
        }
        writeln!(f)?;
        for (label, row) in self.labels.iter().zip(&cells) {
            write!(f, "{label:>width$}")?;
            for cell in row {
                write!(f, " {cell:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// `hi` extends `lo` when `lo(x, y) ≤ hi(x, y)` for every ordered pair.
pub fn extends(lo: &FuzzyRelation, hi: &FuzzyRelation) -> Result<bool> {
    lo.ensure_same_carrier(hi)?;
    Ok(lo.grid.iter().zip(&hi.grid).all(|(l, h)| l <= h))
}

/// Entrywise minimum (fuzzy intersection) of a nonempty family.
pub fn pointwise_inf<'a, I>(family: I) -> Result<FuzzyRelation>
where
    I: IntoIterator<Item = &'a FuzzyRelation>,
{
    let mut iter = family.into_iter();
    let mut acc = iter.next().ok_or(Error::EmptyFamily)?.clone();
    for member in iter {
        acc.ensure_same_carrier(member)?;
        for (a, m) in acc.grid.iter_mut().zip(&member.grid) {
            *a = (*a).min(*m);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> FuzzyRelation {
        FuzzyRelation::from_rows(
            &["a", "b", "c"],
            &[[1.0, 0.0, 0.4], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        )
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        let empty: [&str; 0] = [];
        let no_rows: [[f64; 0]; 0] = [];
        assert_eq!(
            FuzzyRelation::from_rows(&empty, &no_rows),
            Err(Error::EmptyCarrier)
        );
        assert!(matches!(
            FuzzyRelation::from_rows(&["a", "b"], &[vec![1.0, 0.0], vec![1.0]]),
            Err(Error::NonSquare { .. })
        ));
        assert_eq!(
            FuzzyRelation::from_rows(&["a", "a"], &[[1.0, 0.0], [0.0, 1.0]]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!(
            FuzzyRelation::from_rows(&["a", ""], &[[1.0, 0.0], [0.0, 1.0]]),
            Err(Error::EmptyLabel(1))
        );
        assert_eq!(
            FuzzyRelation::from_rows(&["a"], &[[1.5]]),
            Err(Error::InvalidMembership(1.5))
        );
    }

    #[test]
    fn incomparable_pairs_of_three_element_example() {
        let r = ex1();
        assert_eq!(
            r.incomparable_pairs(),
            vec![Pair::new(0, 1), Pair::new(1, 2)]
        );
        assert_eq!(r.count_incomparable_entries(), 4);
    }

    #[test]
    fn extends_is_reflexive_and_detects_carrier_mismatch() {
        let r = ex1();
        assert!(extends(&r, &r).unwrap());
        let other = FuzzyRelation::identity(default_labels(3)).unwrap();
        assert_eq!(extends(&r, &other), Err(Error::CarrierMismatch));
    }

    #[test]
    fn pointwise_inf_examples() {
        let r = ex1();
        assert_eq!(pointwise_inf([&r]).unwrap(), r);

        let up = FuzzyRelation::from_unlabelled_rows(&[[1.0, 1.0], [0.0, 1.0]]).unwrap();
        let down = FuzzyRelation::from_unlabelled_rows(&[[1.0, 0.0], [1.0, 1.0]]).unwrap();
        let id = FuzzyRelation::from_unlabelled_rows(&[[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(pointwise_inf([&up, &down]).unwrap(), id);

        assert_eq!(
            pointwise_inf(std::iter::empty::<&FuzzyRelation>()),
            Err(Error::EmptyFamily)
        );
        assert_eq!(pointwise_inf([&r, &up]), Err(Error::CarrierMismatch));
    }

    #[test]
    fn positive_off_diagonal_is_row_major() {
        let r = ex1();
        assert_eq!(r.positive_off_diagonal(), vec![Pair::new(0, 2)]);
    }
}
