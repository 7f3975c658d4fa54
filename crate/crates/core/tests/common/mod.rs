#![allow(dead_code)]

use std::path::PathBuf;

use fuzzy_linext::io::read_relation;
use fuzzy_linext::oracle::{random_zadeh_order, GeneratorSpec};
use fuzzy_linext::FuzzyRelation;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> FuzzyRelation {
    read_relation(&fixture_path(name))
        .expect("fixture parses")
        .0
}

pub const DENSITIES: [f64; 6] = [0.0, 0.15, 0.3, 0.5, 0.7, 1.0];

/// Deterministic corpus of generated orders with `n` cycling through 1..=8.
pub fn corpus(count: u64) -> Vec<FuzzyRelation> {
    (0..count)
        .map(|seed| {
            let n = 1 + (seed % 8) as usize;
            let density = DENSITIES[((seed / 8) % DENSITIES.len() as u64) as usize];
            random_zadeh_order(&GeneratorSpec::new(n, density, seed)).expect("valid spec")
        })
        .collect()
}

/// The pivot formula evaluated directly on raw rows.
pub fn raw_pivot(r: &[Vec<f64>], a: usize, b: usize) -> Vec<Vec<f64>> {
    let n = r.len();
    (0..n)
        .map(|x| (0..n).map(|y| r[x][y].max(r[x][a].min(r[b][y]))).collect())
        .collect()
}

/// The clamp formula evaluated directly on raw rows.
pub fn raw_clamp(r: &[Vec<f64>], base: &[Vec<f64>], beta: f64) -> Vec<Vec<f64>> {
    let n = r.len();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if r[x][y] > beta {
                        base[x][y]
                    } else {
                        beta.min(base[x][y])
                    }
                })
                .collect()
        })
        .collect()
}

pub fn bits(rows: &[Vec<f64>]) -> Vec<Vec<u64>> {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_bits()).collect())
        .collect()
}
