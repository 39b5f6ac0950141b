//! Tournaments, i.e. weak selections on a finite vertex set.
//!
//! A weak selection `σ` picks one element of every two-point set. Read as a
//! tournament, `u → v` ("u beats v") holds exactly when `σ({u,v}) = v`, which
//! is the same as `v <σ u`. The selection always returns the loser.
//!
//! Orientations are packed one bit per unordered pair `{u,v}`, `u < v`, in
//! lexicographic pair order `(0,1), (0,2), …, (0,n-1), (1,2), …`. A set bit
//! means the lower index beats the higher one. For `n ≤ 11` the whole
//! orientation fits in a single `u64` *code*, which is the key used for
//! enumeration order and canonical forms.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Position of the pair `{u,v}` (`u < v`) in the packed orientation.
#[inline]
pub(crate) fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Number of unordered pairs on `n` vertices.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A complete asymmetric orientation of `n` labelled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    bits: Vec<u64>,
}

impl Tournament {
    /// Largest `n` whose orientation fits in one `u64` code.
    pub const MAX_CODE_ORDER: usize = 11;

    /// Builds a tournament from a predicate over pairs `u < v`: `lower_wins(u, v)`
    /// returns true when `u → v`.
    pub fn from_fn<F>(n: usize, mut lower_wins: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut bits = vec![0u64; pair_count(n).div_ceil(64)];
        for u in 0..n {
            for v in u + 1..n {
                if lower_wins(u, v) {
                    let k = pair_index(n, u, v);
                    bits[k / 64] |= 1 << (k % 64);
                }
            }
        }
        Tournament { n, bits }
    }

    /// Builds a tournament from an explicit arc list, `(u, v)` meaning `u → v`.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = vec![None::<bool>; pair_count(n)];
        for &(u, v) in arcs {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::SelfArc(u));
            }
            let (lo, hi, lower_wins) = if u < v { (u, v, true) } else { (v, u, false) };
            let slot = &mut seen[pair_index(n, lo, hi)];
            match *slot {
                Some(prev) if prev != lower_wins => return Err(Error::ConflictingArcs(lo, hi)),
                _ => *slot = Some(lower_wins),
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if seen[pair_index(n, u, v)].is_none() {
                    return Err(Error::MissingPair(u, v));
                }
            }
        }
        Ok(Self::from_fn(n, |u, v| seen[pair_index(n, u, v)] == Some(true)))
    }

    /// Decodes a packed orientation code; bit `k` orients the `k`-th pair.
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        if n > Self::MAX_CODE_ORDER {
            return Err(Error::TooLarge { n, limit: Self::MAX_CODE_ORDER });
        }
        let m = pair_count(n);
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let bits = if m == 0 { Vec::new() } else { vec![code & mask] };
        Ok(Tournament { n, bits })
    }

    /// The transitive tournament in which `u → v` whenever `u < v`.
    ///
    /// Vertex 0 is the emperor, vertex `n-1` the slave, and vertex `i` has score `n-1-i`.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    /// The rotational tournament on an odd number of vertices: `i` beats
    /// `i+1, …, i+(n-1)/2` modulo `n`. Every score equals `(n-1)/2`.
    pub fn rotational(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::WrongOrder(format!("rotational tournament needs odd n, got {n}")));
        }
        let half = (n - 1) / 2;
        Ok(Self::from_fn(n, |u, v| v - u <= half))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True when `u → v`. Always false for `u == v`.
    ///
    /// Panics if either index is out of range.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return false;
        }
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let k = pair_index(self.n, lo, hi);
        let lower_wins = self.bits[k / 64] >> (k % 64) & 1 == 1;
        lower_wins == (u < v)
    }

    /// The packed code, available for `n ≤ 11`.
    pub fn code(&self) -> Option<u64> {
        if self.n > Self::MAX_CODE_ORDER {
            None
        } else {
            Some(self.bits.first().copied().unwrap_or(0))
        }
    }

    /// All arcs `(winner, loser)`, sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(pair_count(self.n));
        for u in 0..self.n {
            for v in 0..self.n {
                if self.beats(u, v) {
                    arcs.push((u, v));
                }
            }
        }
        arcs
    }

    /// Out-neighbours of `v` in increasing order.
    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.beats(v, u))
    }

    /// The converse tournament (complementary selection): every arc reversed.
    pub fn converse(&self) -> Self {
        Self::from_fn(self.n, |u, v| !self.beats(u, v))
    }

    /// Restriction to the listed vertices; vertex `k` of the result is `subset[k]`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen = HashSet::with_capacity(subset.len());
        for &index in subset {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
            if !seen.insert(index) {
                return Err(Error::DuplicateIndex(index));
            }
        }
        Ok(Self::from_fn(subset.len(), |i, j| self.beats(subset[i], subset[j])))
    }

    /// `σ ∼ η`: the other tournament equals this one or its converse.
    pub fn equivalent(&self, other: &Tournament) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(self == other || *self == other.converse())
    }

    /// Decides `σ ∼ η` by checking that every three-vertex restriction of the
    /// two tournaments is equal or converse.
    ///
    /// The two answers always coincide, but this routine never consults
    /// [`Tournament::equivalent`]; the test suites use it as an oracle.
    pub fn equivalent_via_triples(&self, other: &Tournament) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        if self.n < 3 {
            return Err(Error::TooFewVertices { needed: 3, n: self.n });
        }
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let pairs = [(a, b), (a, c), (b, c)];
                    let same = pairs.iter().all(|&(u, v)| self.beats(u, v) == other.beats(u, v));
                    let flipped = pairs.iter().all(|&(u, v)| self.beats(u, v) == other.beats(v, u));
                    if !same && !flipped {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tournament").field("n", &self.n).field("arcs", &self.arcs()).finish()
    }
}
