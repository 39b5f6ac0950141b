//! Score sequences, Landau's condition and constructive realization.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Score (outdegree) of `v`.
pub fn score_of(t: &Tournament, v: usize) -> Result<usize> {
    check_vertex(t, v)?;
    Ok(t.out_neighbors(v).count())
}

/// Indegree of `v`: the number of pairs whose selection picks `v`.
pub fn indegree_of(t: &Tournament, v: usize) -> Result<usize> {
    check_vertex(t, v)?;
    Ok((0..t.n()).filter(|&u| t.beats(u, v)).count())
}

fn check_vertex(t: &Tournament, v: usize) -> Result<()> {
    if v >= t.n() {
        Err(Error::IndexOutOfRange { index: v, n: t.n() })
    } else {
        Ok(())
    }
}

/// Per-vertex scores in vertex order (unsorted).
pub fn scores(t: &Tournament) -> Vec<usize> {
    (0..t.n()).map(|v| t.out_neighbors(v).count()).collect()
}

/// A nondecreasing sequence of scores, each at most `n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScoreSequence(Vec<usize>);

impl ScoreSequence {
    /// Sorts the input; rejects an entry larger than `len-1`.
    pub fn new(mut scores: Vec<usize>) -> Result<Self> {
        let max = scores.len().saturating_sub(1);
        if let Some(&score) = scores.iter().find(|&&s| s > max) {
            return Err(Error::InvalidScore { score, max });
        }
        scores.sort_unstable();
        Ok(ScoreSequence(scores))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(0, 1, …, n-1)`, the score sequence of a transitive tournament.
    pub fn is_staircase(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| i == s)
    }
}

impl fmt::Display for ScoreSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ScoreSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return ScoreSequence::new(Vec::new());
        }
        let scores = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("`{}` is not a nonnegative integer", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        ScoreSequence::new(scores)
    }
}

pub fn score_sequence(t: &Tournament) -> ScoreSequence {
    ScoreSequence::new(scores(t)).expect("scores of a tournament are at most n-1")
}

/// Why a sequence fails Landau's condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LandauViolation {
    Empty,
    /// Total is not `n(n-1)/2`.
    Sum { expected: usize, actual: usize },
    /// The `k` smallest scores sum to less than `k(k-1)/2`.
    Prefix { k: usize, required: usize, actual: usize },
}

impl fmt::Display for LandauViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LandauViolation::Empty => write!(f, "empty"),
            LandauViolation::Sum { expected, actual } => {
                write!(f, "sum {actual} != {expected}")
            }
            LandauViolation::Prefix { k, required, actual } => {
                write!(f, "prefix k={k} sums to {actual} < {required}")
            }
        }
    }
}

pub fn landau_violation(seq: &ScoreSequence) -> Option<LandauViolation> {
    let s = seq.as_slice();
    let n = s.len();
    if n == 0 {
        return Some(LandauViolation::Empty);
    }
    let total: usize = s.iter().sum();
    if total != n * (n - 1) / 2 {
        return Some(LandauViolation::Sum { expected: n * (n - 1) / 2, actual: total });
    }
    let mut prefix = 0;
    for k in 1..n {
        prefix += s[k - 1];
        let required = k * (k - 1) / 2;
        if prefix < required {
            return Some(LandauViolation::Prefix { k, required, actual: prefix });
        }
    }
    None
}

pub fn landau_check(seq: &ScoreSequence) -> bool {
    landau_violation(seq).is_none()
}

/// Builds a tournament whose vertex `i` has score `seq[i]`.
///
/// Repeatedly takes the active vertex with the largest outstanding score
/// (lowest index on ties). It beats the `s` other active vertices with the
/// smallest outstanding scores and loses to the rest, each of which is then
/// credited one win.
pub fn realize(seq: &ScoreSequence) -> Result<Tournament> {
    if let Some(v) = landau_violation(seq) {
        return Err(Error::NotRealizable(v.to_string()));
    }
    let n = seq.len();
    let mut need: Vec<usize> = seq.as_slice().to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut wins = vec![false; n * n];

    while let Some(pos) = active
        .iter()
        .enumerate()
        .max_by_key(|&(_, &v)| (need[v], std::cmp::Reverse(v)))
        .map(|(pos, _)| pos)
    {
        let v = active.remove(pos);
        let mut others = active.clone();
        others.sort_by_key(|&u| (need[u], u));
        let (beaten, winners) = others.split_at(need[v]);
        for &u in beaten {
            wins[v * n + u] = true;
        }
        for &u in winners {
            wins[u * n + v] = true;
            need[u] = need[u]
                .checked_sub(1)
                .expect("Landau-valid sequences never run out of outstanding wins");
        }
    }
    Ok(Tournament::from_fn(n, |u, v| wins[u * n + v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> ScoreSequence {
        ScoreSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn score_examples() {
        assert_eq!(score_of(&Tournament::transitive(1), 0).unwrap(), 0);
        let c = Tournament::from_arcs(3, &[(0, 2), (2, 1), (1, 0)]).unwrap();
        for v in 0..3 {
            assert_eq!(score_of(&c, v).unwrap(), 1);
            assert_eq!(indegree_of(&c, v).unwrap(), 1);
        }
        assert_eq!(score_of(&Tournament::transitive(4), 0).unwrap(), 3);
        assert_eq!(score_of(&c, 3).unwrap_err(), Error::IndexOutOfRange { index: 3, n: 3 });
    }

    #[test]
    fn sequence_examples() {
        let c = Tournament::from_arcs(3, &[(0, 2), (2, 1), (1, 0)]).unwrap();
        assert_eq!(score_sequence(&c), seq(&[1, 1, 1]));
        assert_eq!(score_sequence(&Tournament::transitive(4)), seq(&[0, 1, 2, 3]));
        assert_eq!(score_sequence(&Tournament::rotational(5).unwrap()), seq(&[2, 2, 2, 2, 2]));
    }

    #[test]
    fn construction_sorts_and_bounds() {
        assert_eq!(seq(&[2, 0, 1]).as_slice(), &[0, 1, 2]);
        assert_eq!(ScoreSequence::new(vec![0, 2]).unwrap_err(), Error::InvalidScore { score: 2, max: 1 });
        assert_eq!("3, 0,2,1".parse::<ScoreSequence>().unwrap(), seq(&[0, 1, 2, 3]));
        assert!(matches!("1,x".parse::<ScoreSequence>(), Err(Error::Parse(_))));
        assert_eq!(seq(&[0, 1, 2]).to_string(), "0,1,2");
    }

    #[test]
    fn landau_examples() {
        assert!(landau_check(&seq(&[0, 5, 5, 5, 5, 5, 5, 5, 5, 5])));
        assert!(!landau_check(&seq(&[0, 0])));
        assert_eq!(landau_violation(&seq(&[0, 0])), Some(LandauViolation::Sum { expected: 1, actual: 0 }));
        assert!(landau_check(&seq(&[2, 2, 2, 2, 2])));
        assert_eq!(landau_violation(&seq(&[])), Some(LandauViolation::Empty));
        assert_eq!(
            landau_violation(&seq(&[0, 1, 1, 3])),
            Some(LandauViolation::Sum { expected: 6, actual: 5 })
        );
        assert_eq!(
            landau_violation(&seq(&[0, 0, 3, 3])),
            Some(LandauViolation::Prefix { k: 2, required: 1, actual: 0 })
        );
    }

    #[test]
    fn no_ten_team_league_has_ten_winning_records() {
        // all ten scores ≥ 5 would need a sum ≥ 50 > 45
        assert!(!landau_check(&seq(&[5; 10])));
    }

    #[test]
    fn realize_examples() {
        let t = realize(&seq(&[0, 1, 2])).unwrap();
        assert_eq!(score_sequence(&t), seq(&[0, 1, 2]));
        let c = realize(&seq(&[1, 1, 1])).unwrap();
        assert_eq!(score_sequence(&c), seq(&[1, 1, 1]));
        let r = realize(&seq(&[2, 2, 2, 2, 2])).unwrap();
        assert_eq!(score_sequence(&r), seq(&[2, 2, 2, 2, 2]));
        assert!(matches!(realize(&seq(&[0, 0])), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn realize_assigns_scores_in_listed_order() {
        let s = seq(&[0, 5, 5, 5, 5, 5, 5, 5, 5, 5]);
        let t = realize(&s).unwrap();
        assert_eq!(scores(&t), s.as_slice());
    }
}
