//! Value-preserving linear extensions and the certifying family.
//!
//! For a comparable ordered pair `(a, b)` the clamp construction caps a
//! linear extension `r'` at `β = r(a, b)` wherever `r ≤ β`:
//!
//! ```text
//! s(x, y) = r'(x, y)          if r(x, y) > β
//!         = min(β, r'(x, y))  otherwise
//! ```
//!
//! `s` is a linear Zadeh order extending `r` with `s(a, b) = r(a, b)`. Two
//! orienting extensions per incomparable pair plus one clamp per positive
//! off-diagonal entry form a finite family whose pointwise infimum is `r`.

use serde::Serialize;

use crate::axioms::{check_order, is_linear};
use crate::error::{Error, Result};
use crate::extension::{apply_pivot, linearize};
use crate::membership::Membership;
use crate::relation::{pointwise_inf, FuzzyRelation, Pair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClampResult {
    pub relation: FuzzyRelation,
    pub beta: Membership,
    /// The linear extension that was clamped.
    pub base: FuzzyRelation,
    pub preserved_pair: Pair,
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

/// Clamps `base` at `beta` wherever `r ≤ beta`.
pub fn clamp(r: &FuzzyRelation, base: &FuzzyRelation, beta: Membership) -> Result<FuzzyRelation> {
    r.ensure_same_carrier(base)?;
    let grid = r
        .grid()
        .iter()
        .zip(base.grid())
        .map(|(&orig, &ext)| if orig > beta { ext } else { beta.min(ext) })
        .collect();
    FuzzyRelation::from_grid(r.labels().to_vec(), grid)
}

/// A linear extension of `r` that keeps `r(a, b)` unchanged.
pub fn clamp_extend(r: &FuzzyRelation, a: usize, b: usize) -> Result<ClampResult> {
    require_order(r)?;
    r.check_index(a)?;
    r.check_index(b)?;
    let beta = r.get(a, b);
    if beta.is_zero() {
        return Err(Error::ZeroPreservedEntry {
            a: r.label(a).to_owned(),
            b: r.label(b).to_owned(),
        });
    }
    let preserved_pair = Pair::new(a, b);

    if is_linear(r) {
        return Ok(ClampResult {
            relation: r.clone(),
            beta,
            base: r.clone(),
            preserved_pair,
        });
    }

    let base = linearize(r)?.relation;
    let relation = if base.get(a, b) == beta {
        base.clone()
    } else {
        clamp(r, &base, beta)?
    };
    Ok(ClampResult {
        relation,
        beta,
        base,
        preserved_pair,
    })
}

pub fn clamp_extend_by_label(r: &FuzzyRelation, a: &str, b: &str) -> Result<ClampResult> {
    clamp_extend(r, r.index_of(a)?, r.index_of(b)?)
}

/// Why a relation belongs to a certifying family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `a` placed below `b` for an incomparable pair: value 1 at `(a, b)`,
    /// 0 at `(b, a)`.
    Orients { a: usize, b: usize },
    /// `r(a, b)` attained exactly.
    Preserves { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub relation: FuzzyRelation,
    pub tags: Vec<Certificate>,
}

/// A finite set of linear extensions, each tagged with what it certifies.
/// Bit-identical members are stored once with merged tags.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtensionFamily {
    members: Vec<FamilyMember>,
}

impl ExtensionFamily {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a member, merging tags into an existing identical member.
    pub fn insert(&mut self, relation: FuzzyRelation, tags: impl IntoIterator<Item = Certificate>) {
        let pos = match self.members.iter().position(|m| m.relation == relation) {
            Some(pos) => pos,
            None => {
                self.members.push(FamilyMember {
                    relation,
                    tags: Vec::new(),
                });
                self.members.len() - 1
            }
        };
        let member = &mut self.members[pos];
        for tag in tags {
            if !member.tags.contains(&tag) {
                member.tags.push(tag);
            }
        }
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    /// Number of distinct relations.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of certificates over all members (the family size before
    /// deduplication).
    pub fn certificate_count(&self) -> usize {
        self.members.iter().map(|m| m.tags.len()).sum()
    }

    pub fn relations(&self) -> impl Iterator<Item = &FuzzyRelation> {
        self.members.iter().map(|m| &m.relation)
    }

    pub fn members_tagged(&self, tag: Certificate) -> impl Iterator<Item = &FamilyMember> {
        self.members.iter().filter(move |m| m.tags.contains(&tag))
    }

    /// A copy without any member that carries `tag`.
    pub fn without(&self, tag: Certificate) -> ExtensionFamily {
        ExtensionFamily {
            members: self
                .members
                .iter()
                .filter(|m| !m.tags.contains(&tag))
                .cloned()
                .collect(),
        }
    }
}

/// Builds the certifying family of the order `r`.
///
/// A linear `r` yields the singleton `{r}`. Otherwise every incomparable pair
/// `{a, b}` contributes `linearize(pivot(r, a, b))` and
/// `linearize(pivot(r, b, a))`, and every positive off-diagonal `(a, b)`
/// contributes `clamp_extend(r, a, b)`.
pub fn certifying_family(r: &FuzzyRelation) -> Result<ExtensionFamily> {
    require_order(r)?;
    let mut family = ExtensionFamily::new();
    let preserves = r
        .positive_off_diagonal()
        .into_iter()
        .map(|p| Certificate::Preserves {
            a: p.first,
            b: p.second,
        });

    if is_linear(r) {
        family.insert(r.clone(), preserves);
        return Ok(family);
    }

    for pair in r.incomparable_pairs() {
        for (a, b) in [(pair.first, pair.second), (pair.second, pair.first)] {
            let mut oriented = r.clone();
            apply_pivot(&mut oriented, a, b);
            let member = linearize(&oriented)?.relation;
            family.insert(member, [Certificate::Orients { a, b }]);
        }
    }
    for tag in preserves {
        let Certificate::Preserves { a, b } = tag else {
            unreachable!()
        };
        family.insert(clamp_extend(r, a, b)?.relation, [tag]);
    }
    Ok(family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub pair: Pair,
    pub infimum: Membership,
    pub expected: Membership,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub infimum: FuzzyRelation,
    pub mismatches: Vec<Mismatch>,
}

impl IntersectionReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn mismatch_at(&self, pair: Pair) -> Option<&Mismatch> {
        self.mismatches.iter().find(|m| m.pair == pair)
    }
}

/// Compares the pointwise infimum of `family` with `r`, bit-exactly.
pub fn verify_intersection(
    r: &FuzzyRelation,
    family: &ExtensionFamily,
) -> Result<IntersectionReport> {
    verify_relations(r, family.relations())
}

pub fn verify_relations<'a, I>(r: &FuzzyRelation, family: I) -> Result<IntersectionReport>
where
    I: IntoIterator<Item = &'a FuzzyRelation>,
{
    let infimum = pointwise_inf(family)?;
    r.ensure_same_carrier(&infimum)?;
    let n = r.len();
    let mut mismatches = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (inf, expected) = (infimum.get(x, y), r.get(x, y));
            if inf != expected {
                mismatches.push(Mismatch {
                    pair: Pair::new(x, y),
                    infimum: inf,
                    expected,
                });
            }
        }
    }
    Ok(IntersectionReport {
        infimum,
        mismatches,
    })
}
