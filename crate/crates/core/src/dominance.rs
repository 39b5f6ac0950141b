//! Pecking order analysis: emperors, slaves, serfs, kings and σ-distance.
//!
//! A *king* reaches every other vertex along a directed path of length at
//! most two. An *emperor* beats everyone and a *slave* is beaten by everyone.
//! There is at most one slave: two score-0 vertices would have to be joined
//! by an arc, giving one of them a win. For `n = 1` the lone vertex counts as
//! emperor (it beats everyone vacuously) and not as a slave, so the three
//! classes always partition the vertex set.

use std::collections::VecDeque;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::scores::scores;
use crate::tournament::Tournament;

/// All-pairs shortest path lengths; `None` marks an unreachable target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, from: usize, to: usize) -> Option<usize> {
        self.entries[from * self.n + to]
    }

    pub fn row(&self, from: usize) -> &[Option<usize>] {
        &self.entries[from * self.n..(from + 1) * self.n]
    }

    /// Largest distance from `from`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, from: usize) -> Option<usize> {
        self.row(from).iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

fn bfs_all<I, F>(n: usize, out: F) -> DistanceMatrix
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut entries = vec![None; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for src in 0..n {
        let row = &mut entries[src * n..(src + 1) * n];
        row[src] = Some(0);
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = row[v].expect("queued vertices have a distance");
            for w in out(v) {
                if row[w].is_none() {
                    row[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, entries }
}

/// σ-distances by breadth-first search from every source.
pub fn distance_matrix(t: &Tournament) -> DistanceMatrix {
    bfs_all(t.n(), |v| t.out_neighbors(v))
}

pub fn digraph_distance_matrix(d: &Digraph) -> DistanceMatrix {
    bfs_all(d.n(), |v| d.out_neighbors(v))
}

pub fn emperor_of(t: &Tournament) -> Option<usize> {
    (0..t.n()).find(|&v| (0..t.n()).all(|u| u == v || t.beats(v, u)))
}

fn slave_of(t: &Tournament) -> Option<usize> {
    if t.n() < 2 {
        return None;
    }
    (0..t.n()).find(|&v| (0..t.n()).all(|u| u == v || t.beats(u, v)))
}

/// Kings straight from the definition: every other `u` is beaten by `v`
/// directly or through some intermediate `w`.
fn kings_by_definition(t: &Tournament) -> Vec<usize> {
    let n = t.n();
    (0..n)
        .filter(|&v| {
            (0..n).all(|u| u == v || t.beats(v, u) || (0..n).any(|w| t.beats(v, w) && t.beats(w, u)))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub emperor: Option<usize>,
    pub slaves: Vec<usize>,
    pub serfs: Vec<usize>,
    pub kings: Vec<usize>,
    pub distances: DistanceMatrix,
    #[serde(skip)]
    scores: Vec<usize>,
}

impl DominanceReport {
    /// The lowest-index king of maximal score.
    pub fn king(&self) -> usize {
        let top = self.kings.iter().map(|&k| self.scores[k]).max().expect("kings are nonempty");
        *self.kings.iter().find(|&&k| self.scores[k] == top).unwrap()
    }
}

pub fn classify(t: &Tournament) -> DominanceReport {
    let n = t.n();
    let emperor = emperor_of(t);
    let slaves: Vec<usize> = slave_of(t).into_iter().collect();
    let serfs = (0..n).filter(|&v| Some(v) != emperor && !slaves.contains(&v)).collect();
    let kings = kings_by_definition(t);
    assert!(!kings.is_empty(), "every tournament has a king");
    if let Some(e) = emperor {
        assert_eq!(kings, vec![e], "an emperor is the only king");
    }
    DominanceReport { emperor, slaves, serfs, kings, distances: distance_matrix(t), scores: scores(t) }
}

/// All vertices of maximal score. Each of them is a king.
pub fn kings_by_max_score(t: &Tournament) -> Vec<usize> {
    let s = scores(t);
    let Some(&top) = s.iter().max() else {
        return Vec::new();
    };
    (0..t.n()).filter(|&v| s[v] == top).collect()
}

/// The kings of an emperor-free tournament; there are always at least three.
pub fn deadbeat_witnesses(t: &Tournament) -> Result<Vec<usize>> {
    if t.n() < 3 {
        return Err(Error::TooFewVertices { needed: 3, n: t.n() });
    }
    if let Some(e) = emperor_of(t) {
        return Err(Error::HasEmperor(e));
    }
    let kings = classify(t).kings;
    assert!(kings.len() >= 3, "emperor-free tournaments have at least three kings");
    Ok(kings)
}

/// Vertices that reach everyone else in one or two stages, for a network in
/// which every pair is linked in at least one direction.
pub fn two_stage_communicators(d: &Digraph) -> Result<Vec<usize>> {
    if let Some((u, v)) = d.first_unlinked_pair() {
        return Err(Error::HypothesisViolated(u, v));
    }
    let dist = digraph_distance_matrix(d);
    let found: Vec<usize> = (0..d.n()).filter(|&v| dist.eccentricity(v).is_some_and(|e| e <= 2)).collect();
    assert!(d.n() == 0 || !found.is_empty(), "someone reaches everyone in two stages");
    Ok(found)
}

/// Vertices reached by everyone else in one or two stages.
pub fn two_stage_receivers(d: &Digraph) -> Result<Vec<usize>> {
    two_stage_communicators(&d.converse())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Tournament {
        Tournament::from_arcs(3, &[(0, 2), (2, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn emperor_examples() {
        assert_eq!(emperor_of(&Tournament::transitive(4)), Some(0));
        assert_eq!(emperor_of(&three_cycle()), None);
        assert_eq!(emperor_of(&Tournament::transitive(1)), Some(0));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&three_cycle());
        assert_eq!(r.kings, vec![0, 1, 2]);
        assert_eq!(r.emperor, None);
        assert!(r.slaves.is_empty());
        assert_eq!(r.serfs, vec![0, 1, 2]);

        let r = classify(&Tournament::transitive(5));
        assert_eq!(r.kings, vec![0]);
        assert_eq!(r.emperor, Some(0));
        assert_eq!(r.slaves, vec![4]);
        assert_eq!(r.serfs, vec![1, 2, 3]);

        let r = classify(&Tournament::from_arcs(2, &[(1, 0)]).unwrap());
        assert_eq!((r.emperor, r.kings.clone(), r.slaves.clone()), (Some(1), vec![1], vec![0]));
        assert!(r.serfs.is_empty());

        let r = classify(&Tournament::transitive(1));
        assert_eq!((r.emperor, r.slaves.len(), r.serfs.len()), (Some(0), 0, 0));
    }

    #[test]
    fn king_accessor_prefers_high_score() {
        // scores (2,2,1,1); kings are 0, 1 and 3
        let t = Tournament::from_arcs(4, &[(0, 1), (0, 2), (1, 2), (3, 0), (2, 3), (1, 3)]).unwrap();
        let r = classify(&t);
        assert_eq!(r.kings, vec![0, 1, 3]);
        assert_eq!(r.king(), 0);
    }

    #[test]
    fn max_score_examples() {
        assert_eq!(kings_by_max_score(&three_cycle()), vec![0, 1, 2]);
        assert_eq!(kings_by_max_score(&Tournament::transitive(4)), vec![0]);
        assert_eq!(kings_by_max_score(&Tournament::rotational(5).unwrap()), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn distance_examples() {
        // u→w→v→u with u=0, w=1, v=2
        let t = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let d = distance_matrix(&t);
        assert_eq!(d.get(0, 1), Some(1));
        assert_eq!(d.get(1, 0), Some(2));
        let tr = distance_matrix(&Tournament::transitive(3));
        assert_eq!(tr.get(2, 0), None);
        assert_eq!(tr.eccentricity(2), None);
        for v in 0..3 {
            assert_eq!(d.get(v, v), Some(0));
        }
    }

    #[test]
    fn deadbeat_examples() {
        assert_eq!(deadbeat_witnesses(&three_cycle()).unwrap(), vec![0, 1, 2]);
        assert_eq!(deadbeat_witnesses(&Tournament::transitive(4)).unwrap_err(), Error::HasEmperor(0));
        assert_eq!(
            deadbeat_witnesses(&Tournament::transitive(2)).unwrap_err(),
            Error::TooFewVertices { needed: 3, n: 2 }
        );
    }

    #[test]
    fn communicator_examples() {
        let t = Tournament::rotational(5).unwrap();
        assert_eq!(two_stage_communicators(&Digraph::from(&t)).unwrap(), classify(&t).kings);

        let both = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(two_stage_communicators(&both).unwrap(), vec![0, 1]);

        let gap = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(two_stage_communicators(&gap).unwrap_err(), Error::HypothesisViolated(0, 2));
    }

    #[test]
    fn receivers_are_converse_kings() {
        let t = Tournament::transitive(4);
        assert_eq!(two_stage_receivers(&Digraph::from(&t)).unwrap(), vec![3]);
        assert_eq!(classify(&t.converse()).kings, vec![3]);
    }
}
