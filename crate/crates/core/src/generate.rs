//! Seeded random tournaments, exhaustive enumeration and isomorphism classes.
//!
//! Random tournaments use SplitMix64 (Steele, Lea & Flood, 2014) seeded
//! directly with the 64-bit seed. The pair `{u,v}`, `u < v`, taken in packed
//! lexicographic pair order, consumes one output word `w`; `u` beats `v` when
//! the top bit of `w` is set.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::tournament::{pair_count, Tournament};

/// Default cap on exhaustive enumeration.
pub const ENUM_LIMIT: usize = 6;
/// Cap with the explicit large-enumeration override (2^21 tournaments).
pub const ENUM_LIMIT_OVERRIDE: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl From<u64> for Seed {
    fn from(value: u64) -> Self {
        Seed(value)
    }
}

pub fn random_tournament(n: usize, seed: Seed) -> Result<Tournament> {
    if n == 0 {
        return Err(Error::ZeroVertices);
    }
    let mut rng = SplitMix64::seed_from_u64(seed.0);
    Ok(Tournament::from_fn(n, |_, _| rng.next_u64() >> 63 == 1))
}

/// Iterator over every labelled tournament on `n` vertices in increasing code order.
#[derive(Debug, Clone)]
pub struct AllTournaments {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for AllTournaments {
    type Item = Tournament;

    fn next(&mut self) -> Option<Tournament> {
        if self.next >= self.end {
            return None;
        }
        let t = Tournament::from_code(self.n, self.next).expect("order checked at construction");
        self.next += 1;
        Some(t)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllTournaments {}

/// All `2^(n(n-1)/2)` labelled tournaments on `1 ≤ n ≤ 6` vertices.
pub fn all_tournaments(n: usize) -> Result<AllTournaments> {
    all_tournaments_with_override(n, false)
}

/// As [`all_tournaments`], additionally admitting `n = 7` when `allow_large` is set.
pub fn all_tournaments_with_override(n: usize, allow_large: bool) -> Result<AllTournaments> {
    let limit = if allow_large { ENUM_LIMIT_OVERRIDE } else { ENUM_LIMIT };
    if n == 0 {
        return Err(Error::ZeroVertices);
    }
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    Ok(AllTournaments { n, next: 0, end: 1u64 << pair_count(n) })
}

/// Relabelling tables: for each permutation, the image of every pair as
/// `(target pair index, flipped)`.
fn relabel_tables(n: usize) -> Vec<Vec<(usize, bool)>> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut table = Vec::with_capacity(pair_count(n));
            for u in 0..n {
                for v in u + 1..n {
                    let (pu, pv) = (perm[u], perm[v]);
                    let (lo, hi, flipped) = if pu < pv { (pu, pv, false) } else { (pv, pu, true) };
                    table.push((crate::tournament::pair_index(n, lo, hi), flipped));
                }
            }
            table
        })
        .collect()
}

fn min_code(code: u64, tables: &[Vec<(usize, bool)>]) -> u64 {
    tables
        .iter()
        .map(|table| {
            table.iter().enumerate().fold(0u64, |acc, (k, &(target, flipped))| {
                let bit = (code >> k & 1 == 1) != flipped;
                acc | (bit as u64) << target
            })
        })
        .min()
        .unwrap_or(code)
}

/// Canonical form of `t`: the relabelling with the least packed code, `n ≤ 7`.
pub fn canonical_form(t: &Tournament) -> Result<Tournament> {
    let n = t.n();
    if n > ENUM_LIMIT_OVERRIDE {
        return Err(Error::TooLarge { n, limit: ENUM_LIMIT_OVERRIDE });
    }
    let code = t.code().expect("n ≤ 7 fits a code");
    Tournament::from_code(n, min_code(code, &relabel_tables(n)))
}

/// One canonical representative per isomorphism class, sorted by code.
pub fn nonisomorphic_representatives(n: usize) -> Result<Vec<Tournament>> {
    let tables = relabel_tables(n);
    let codes: BTreeSet<u64> = all_tournaments(n)?
        .map(|t| min_code(t.code().expect("n ≤ 6"), &tables))
        .collect();
    codes.into_iter().map(|c| Tournament::from_code(n, c)).collect()
}
