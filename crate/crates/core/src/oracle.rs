//! Brute-force checks and a seeded generator of random Zadeh fuzzy orders.
//!
//! Nothing here calls into the axiom checker or the extension code paths; the
//! loops read raw grades only, so they can serve as an independent oracle.
//!
//! The generator draws from `Xoshiro256PlusPlus` seeded through SplitMix64
//! (`SeedableRng::seed_from_u64`), which is portable across platforms: a
//! given spec always produces the same relation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::membership::Membership;
use crate::preserve::{certifying_family, verify_intersection};
use crate::relation::{default_labels, FuzzyRelation};

pub const MAX_GENERATED_N: usize = 12;

/// Exhaustive check of reflexivity (n), antisymmetry (n²) and transitivity
/// (n³, every triple without pruning).
pub fn brute_check_order(r: &FuzzyRelation) -> bool {
    let n = r.len();
    let v = |x: usize, y: usize| r.get(x, y).value();

    for x in 0..n {
        if v(x, x) != 1.0 {
            return false;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && v(x, y) > 0.0 && v(y, x) != 0.0 {
                return false;
            }
        }
    }
    for x in 0..n {
        for z in 0..n {
            let mut sup = 0.0f64;
            for y in 0..n {
                let t = if v(x, y) < v(y, z) { v(x, y) } else { v(y, z) };
                if t > sup {
                    sup = t;
                }
            }
            if v(x, z) < sup {
                return false;
            }
        }
    }
    true
}

/// Parameters of [`random_zadeh_order`].
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    /// Carrier size, `1..=12`.
    pub n: usize,
    /// Probability of each forward edge of the hidden DAG.
    pub density: f64,
    pub value_pool: Vec<Membership>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(n: usize, density: f64, seed: u64) -> Self {
        GeneratorSpec {
            n,
            density,
            value_pool: default_value_pool(),
            seed,
        }
    }

    pub fn with_value_pool(mut self, pool: Vec<Membership>) -> Self {
        self.value_pool = pool;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(1..=MAX_GENERATED_N).contains(&self.n) {
            return Err(Error::InvalidSpec(format!(
                "n = {} is outside 1..={MAX_GENERATED_N}",
                self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidSpec(format!(
                "density = {} is outside [0, 1]",
                self.density
            )));
        }
        if self.value_pool.iter().any(|m| m.is_zero()) || self.value_pool.is_empty() {
            return Err(Error::InvalidSpec(
                "value pool must be nonempty and strictly positive".into(),
            ));
        }
        Ok(())
    }
}

/// `{0.1, 0.2, ..., 0.9, 1.0}` as decimal literals.
pub fn default_value_pool() -> Vec<Membership> {
    [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
        .into_iter()
        .map(|v| Membership::new(v).expect("pool value in range"))
        .collect()
}

/// Draws a Zadeh fuzzy order.
///
/// Forward edges of a randomly permuted carrier are sampled with the given
/// density, the crisp edge set is transitively closed, each related pair gets
/// a grade from the pool, and grades are lifted by max-min composition on the
/// support until they stop changing.
#[allow(clippy::needless_range_loop)]
pub fn random_zadeh_order(spec: &GeneratorSpec) -> Result<FuzzyRelation> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed);

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);

    let mut support = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(spec.density) {
                support[perm[i]][perm[j]] = true;
            }
        }
    }
    // Warshall closure.
    for k in 0..n {
        for i in 0..n {
            if support[i][k] {
                for j in 0..n {
                    if support[k][j] {
                        support[i][j] = true;
                    }
                }
            }
        }
    }

    let mut grid = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                grid[i][j] = 1.0;
            } else if support[i][j] {
                grid[i][j] = spec
                    .value_pool
                    .choose(&mut rng)
                    .expect("nonempty pool")
                    .value();
            }
        }
    }

    // Max-min lift restricted to the support; the support is transitive and
    // acyclic so no new positive entries appear.
    loop {
        let mut changed = false;
        for x in 0..n {
            for z in 0..n {
                if x == z || !support[x][z] {
                    continue;
                }
                let mut best = grid[x][z];
                for y in 0..n {
                    let t = grid[x][y].min(grid[y][z]);
                    if y != x && y != z && t > best {
                        best = t;
                    }
                }
                if best > grid[x][z] {
                    grid[x][z] = best;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    FuzzyRelation::from_rows(&default_labels(n), &grid)
}

/// Certifying family, intersection check, and an independent entrywise
/// minimum over the same members. Passes iff both routes reproduce `r`.
pub fn inf_reconstruction_probe(r: &FuzzyRelation) -> bool {
    let Ok(family) = certifying_family(r) else {
        return false;
    };
    let Ok(report) = verify_intersection(r, &family) else {
        return false;
    };

    let n = r.len();
    let members: Vec<&FuzzyRelation> = family.relations().collect();
    let mut second = vec![1.0f64; n * n];
    for member in &members {
        if member.labels() != r.labels() {
            return false;
        }
        for (idx, slot) in second.iter_mut().enumerate() {
            let v = member.get(idx / n, idx % n).value();
            if v < *slot {
                *slot = v;
            }
        }
    }
    let fold_matches = second
        .iter()
        .enumerate()
        .all(|(idx, v)| v.to_bits() == r.get(idx / n, idx % n).value().to_bits());

    !members.is_empty() && report.holds() && fold_matches && report.infimum == *r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_order, is_linear};

    #[test]
    fn brute_examples() {
        let bad = FuzzyRelation::from_unlabelled_rows(&[
            [1.0, 0.5, 0.0],
            [0.0, 1.0, 0.5],
            [0.0, 0.0, 1.0],
        ])
        .unwrap();
        assert!(!brute_check_order(&bad));
        assert!(brute_check_order(
            &FuzzyRelation::identity(default_labels(4)).unwrap()
        ));
    }

    #[test]
    fn generator_edge_cases() {
        for seed in 0..5 {
            let one = random_zadeh_order(&GeneratorSpec::new(1, 0.5, seed)).unwrap();
            assert_eq!(one.to_rows(), vec![vec![1.0]]);
        }
        let id = random_zadeh_order(&GeneratorSpec::new(5, 0.0, 3)).unwrap();
        assert_eq!(id, FuzzyRelation::identity(default_labels(5)).unwrap());
        for seed in 0..20 {
            let chain = random_zadeh_order(&GeneratorSpec::new(5, 1.0, seed)).unwrap();
            assert!(is_linear(&chain));
            assert!(brute_check_order(&chain));
            for x in 0..5 {
                for y in x + 1..5 {
                    assert!(chain.get(x, y).is_positive() != chain.get(y, x).is_positive());
                }
            }
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let spec = GeneratorSpec::new(8, 0.4, 12345);
        assert_eq!(
            random_zadeh_order(&spec).unwrap(),
            random_zadeh_order(&spec).unwrap()
        );
    }

    #[test]
    fn generator_rejects_bad_specs() {
        for spec in [
            GeneratorSpec::new(0, 0.5, 0),
            GeneratorSpec::new(13, 0.5, 0),
            GeneratorSpec::new(3, 1.5, 0),
            GeneratorSpec::new(3, f64::NAN, 0),
            GeneratorSpec::new(3, 0.5, 0).with_value_pool(vec![]),
        ] {
            assert!(matches!(
                random_zadeh_order(&spec),
                Err(Error::InvalidSpec(_))
            ));
        }
    }

    #[test]
    fn generated_orders_agree_with_checker() {
        for seed in 0..200 {
            let spec = GeneratorSpec::new(
                1 + (seed as usize % 12),
                [0.0, 0.3, 0.7, 1.0][seed as usize % 4],
                seed,
            );
            let r = random_zadeh_order(&spec).unwrap();
            assert!(brute_check_order(&r));
            assert!(check_order(&r).is_order());
        }
    }

    #[test]
    fn probe_examples() {
        let r = random_zadeh_order(&GeneratorSpec::new(6, 0.4, 7)).unwrap();
        assert!(inf_reconstruction_probe(&r));
        let chain = FuzzyRelation::from_unlabelled_rows(&[[1.0, 0.2], [0.0, 1.0]]).unwrap();
        assert!(inf_reconstruction_probe(&chain));
    }
}
