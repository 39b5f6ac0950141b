//! Complete (Hamiltonian) paths, transitivity and triple counts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate::all_tournaments;
use crate::scores::{score_sequence, scores};
use crate::tournament::Tournament;

/// Largest order for which complete paths are counted (8! orderings).
pub const PATH_COUNT_LIMIT: usize = 8;

/// A permutation of the vertices in which each vertex beats its successor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CompletePath(Vec<usize>);

impl CompletePath {
    /// Validates `order` against `t`.
    pub fn new(t: &Tournament, order: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; t.n()];
        let is_perm = order.len() == t.n()
            && order.iter().all(|&v| v < t.n() && !std::mem::replace(&mut seen[v], true));
        let forward = order.windows(2).all(|w| t.beats(w[0], w[1]));
        (is_perm && forward).then_some(CompletePath(order))
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }
}

/// Builds a complete path by insertion: vertex `k` goes in front of the first
/// path vertex it beats, or at the end when it beats none.
///
/// Inserting before the first beaten vertex `p[i]` is valid because `p[i-1]`
/// is not beaten by `k`, so `p[i-1] → k`.
pub fn redei_path(t: &Tournament) -> CompletePath {
    let mut order: Vec<usize> = Vec::with_capacity(t.n());
    for k in 0..t.n() {
        let at = order.iter().position(|&p| t.beats(k, p)).unwrap_or(order.len());
        order.insert(at, k);
    }
    CompletePath::new(t, order).expect("insertion always yields a complete path")
}

/// Exact number of complete paths, counted by depth-first extension of
/// every valid prefix. `n ≤ 8`.
pub fn count_complete_paths(t: &Tournament) -> Result<u64> {
    let n = t.n();
    if n > PATH_COUNT_LIMIT {
        return Err(Error::TooLarge { n, limit: PATH_COUNT_LIMIT });
    }
    if n == 0 {
        return Ok(1);
    }
    fn extend(t: &Tournament, last: usize, used: u32, depth: usize) -> u64 {
        if depth == t.n() {
            return 1;
        }
        t.out_neighbors(last)
            .filter(|&v| used & 1 << v == 0)
            .map(|v| extend(t, v, used | 1 << v, depth + 1))
            .sum()
    }
    Ok((0..n).map(|start| extend(t, start, 1 << start, 1)).sum())
}

/// `C(n,3)`, the number of vertex triples.
pub fn triple_count(n: usize) -> u64 {
    let n = n as u64;
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Transitive triples from the score sequence: `Σ s(s-1)/2`.
pub fn transitive_triples_count(t: &Tournament) -> u64 {
    scores(t).iter().map(|&s| (s * s.saturating_sub(1) / 2) as u64).sum()
}

/// Cyclic triples: `C(n,3)` minus the transitive ones.
pub fn cyclic_triples_count(t: &Tournament) -> u64 {
    triple_count(t.n()) - transitive_triples_count(t)
}

/// Largest cyclic triple count over all tournaments of order `n`:
/// `(n³-n)/24` for odd `n`, `(n³-4n)/24` for even `n`.
pub fn max_cyclic_triples(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroVertices);
    }
    let n = n as u64;
    let cube = n * n * n;
    Ok(if n % 2 == 1 { (cube - n) / 24 } else { (cube - 4 * n) / 24 })
}

/// Exhaustive maximum of the cyclic triple count at order `n ≤ 6`, with the
/// lowest-code tournament attaining it.
pub fn cyclic_triples_extremal(n: usize) -> Result<(u64, Tournament)> {
    let mut best: Option<(u64, Tournament)> = None;
    for t in all_tournaments(n)? {
        let c = cyclic_triples_count(&t);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            best = Some((c, t));
        }
    }
    Ok(best.expect("n ≥ 1 yields at least one tournament"))
}

/// Every condition of the transitivity characterization, each evaluated on
/// its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub is_transitive: bool,
    pub has_cycle: bool,
    pub complete_path_count: Option<u64>,
    pub score_is_identity_staircase: bool,
    pub transitive_triples: u64,
    pub cyclic_triples: u64,
}

impl TransitivityReport {
    /// The conditions agree with each other and the triple counts add up.
    pub fn is_consistent(&self, n: usize) -> bool {
        let t = self.is_transitive;
        self.transitive_triples + self.cyclic_triples == triple_count(n)
            && t == !self.has_cycle
            && t == self.score_is_identity_staircase
            && t == (self.transitive_triples == triple_count(n))
            && self.complete_path_count.is_none_or(|c| t == (c == 1))
    }
}

fn relation_is_transitive(t: &Tournament) -> bool {
    let n = t.n();
    (0..n).all(|a| {
        t.out_neighbors(a).all(|b| t.out_neighbors(b).all(|c| t.beats(a, c)))
    })
}

/// Directed cycle detection by three-colour depth-first search.
fn has_directed_cycle(t: &Tournament) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Colour {
        White,
        Grey,
        Black,
    }
    fn visit(t: &Tournament, v: usize, colour: &mut [Colour]) -> bool {
        colour[v] = Colour::Grey;
        for w in t.out_neighbors(v) {
            let state = colour[w];
            if state == Colour::Grey || (state == Colour::White && visit(t, w, colour)) {
                return true;
            }
        }
        colour[v] = Colour::Black;
        false
    }
    let mut colour = vec![Colour::White; t.n()];
    (0..t.n()).any(|v| colour[v] == Colour::White && visit(t, v, &mut colour))
}

pub fn transitivity_report(t: &Tournament, count_paths: bool) -> Result<TransitivityReport> {
    let complete_path_count = if count_paths { Some(count_complete_paths(t)?) } else { None };
    Ok(TransitivityReport {
        is_transitive: relation_is_transitive(t),
        has_cycle: has_directed_cycle(t),
        complete_path_count,
        score_is_identity_staircase: score_sequence(t).is_staircase(),
        transitive_triples: transitive_triples_count(t),
        cyclic_triples: cyclic_triples_count(t),
    })
}
