//! Selections on the `p`-element subsets of `K_m` and their preimage
//! profile `κ(x) = |σ⁻¹(x)|`.
//!
//! Subsets are kept as bitmasks in increasing numeric order, which is
//! colexicographic order; a subset's position in that order is its rank.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Largest `m` accepted when materializing all `p`-subsets.
pub const MAX_SUBSET_VERTICES: usize = 20;

/// Default node budget for [`search_constant_kappa`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_parameters(m: usize, p: usize) -> Result<()> {
    if p < 2 || p >= m {
        return Err(Error::BadParameters(format!("need 2 ≤ p < m, got m = {m}, p = {p}")));
    }
    Ok(())
}

/// All `p`-subsets of `[0,m)` as bitmasks, in colex order.
fn subsets(m: usize, p: usize) -> Result<Vec<u32>> {
    if m > MAX_SUBSET_VERTICES {
        return Err(Error::TooLarge { n: m, limit: MAX_SUBSET_VERTICES });
    }
    Ok((0u32..1 << m).filter(|s| s.count_ones() as usize == p).collect())
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

fn mask_of(subset: &[usize]) -> u32 {
    subset.iter().fold(0, |acc, &v| acc | 1 << v)
}

/// A choice of one element from every `p`-subset of `K_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSelection {
    m: usize,
    p: usize,
    subsets: Vec<u32>,
    // per rank: position of the chosen element within the sorted subset
    choice: Vec<u8>,
}

impl SubsetSelection {
    /// Builds a selection from `choose`, which receives each subset sorted
    /// ascending and must return one of its elements.
    pub fn from_fn<F>(m: usize, p: usize, mut choose: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> usize,
    {
        check_parameters(m, p)?;
        let subsets = subsets(m, p)?;
        let mut choice = Vec::with_capacity(subsets.len());
        for &mask in &subsets {
            let s: Vec<usize> = members(mask).collect();
            let x = choose(&s);
            let pos = s
                .iter()
                .position(|&v| v == x)
                .ok_or_else(|| Error::BadParameters(format!("choice {x} is not in {}", fmt_subset(&s))))?;
            choice.push(pos as u8);
        }
        Ok(SubsetSelection { m, p, subsets, choice })
    }

    /// The weak selection of a tournament: each pair selects its loser.
    pub fn from_tournament(t: &Tournament) -> Result<Self> {
        Self::from_fn(t.n(), 2, |s| if t.beats(s[0], s[1]) { s[1] } else { s[0] })
    }

    /// The tournament induced by a `p = 2` selection.
    pub fn to_tournament(&self) -> Option<Tournament> {
        (self.p == 2).then(|| Tournament::from_fn(self.m, |u, v| self.select(&[u, v]) == Some(v)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// The element chosen from `subset` (any order), or `None` if `subset`
    /// is not a `p`-subset of `[0,m)`.
    pub fn select(&self, subset: &[usize]) -> Option<usize> {
        if subset.len() != self.p || subset.iter().any(|&v| v >= self.m) {
            return None;
        }
        let mask = mask_of(subset);
        let rank = self.subsets.binary_search(&mask).ok()?;
        Some(self.chosen_at(rank))
    }

    fn chosen_at(&self, rank: usize) -> usize {
        members(self.subsets[rank]).nth(self.choice[rank] as usize).expect("choice within subset")
    }

    /// `(subset, chosen)` pairs in colex order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, usize)> + '_ {
        (0..self.subsets.len()).map(|r| (members(self.subsets[r]).collect(), self.chosen_at(r)))
    }

    /// Line format: a header `m <m> p <p>` then `{a,b,…} -> x` per subset.
    pub fn to_text(&self) -> String {
        let mut out = format!("m {} p {}\n", self.m, self.p);
        for (s, x) in self.entries() {
            out.push_str(&format!("{} -> {x}\n", fmt_subset(&s)));
        }
        out
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = src.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty selection document".into()))?;
        let (m, p) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["m", m, "p", p] => (
                m.parse().map_err(|_| Error::Parse(format!("bad m `{m}`")))?,
                p.parse().map_err(|_| Error::Parse(format!("bad p `{p}`")))?,
            ),
            _ => return Err(Error::Parse(format!("bad header `{header}`"))),
        };
        check_parameters(m, p)?;
        let mut chosen = std::collections::HashMap::new();
        for line in lines {
            let (lhs, rhs) =
                line.split_once("->").ok_or_else(|| Error::Parse(format!("missing `->` in `{line}`")))?;
            let inner = lhs.trim().strip_prefix('{').and_then(|s| s.strip_suffix('}'));
            let inner = inner.ok_or_else(|| Error::Parse(format!("bad subset `{}`", lhs.trim())))?;
            let subset = inner
                .split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex `{v}`"))))
                .collect::<Result<Vec<_>>>()?;
            if subset.len() != p || subset.iter().any(|&v| v >= m) {
                return Err(Error::Parse(format!("`{}` is not a {p}-subset of [0,{m})", lhs.trim())));
            }
            let x: usize = rhs.trim().parse().map_err(|_| Error::Parse(format!("bad choice `{}`", rhs.trim())))?;
            if chosen.insert(mask_of(&subset), x).is_some() {
                return Err(Error::Parse(format!("subset `{}` listed twice", lhs.trim())));
            }
        }
        let mut missing = None;
        let sel = Self::from_fn(m, p, |s| match chosen.get(&mask_of(s)) {
            Some(&x) => x,
            None => {
                missing.get_or_insert_with(|| fmt_subset(s));
                s[0]
            }
        })?;
        match missing {
            Some(s) => Err(Error::Parse(format!("subset {s} has no choice"))),
            None => Ok(sel),
        }
    }
}

fn fmt_subset(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for SubsetSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Per-vertex preimage counts of a selection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaProfile {
    pub counts: Vec<usize>,
}

impl KappaProfile {
    pub fn is_constant(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `{x : κ(x) = min κ}`; a proper nonempty subset whenever `κ` is not constant.
    pub fn minimizers(&self) -> Vec<usize> {
        let Some(&low) = self.counts.iter().min() else {
            return Vec::new();
        };
        (0..self.counts.len()).filter(|&x| self.counts[x] == low).collect()
    }
}

pub fn kappa(sel: &SubsetSelection) -> KappaProfile {
    let mut counts = vec![0; sel.m];
    for r in 0..sel.subsets.len() {
        counts[sel.chosen_at(r)] += 1;
    }
    KappaProfile { counts }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// `m` does not divide `C(m,p)`, so `κ` cannot be constant.
    ImpossibleByCount,
    /// `p` is prime and divides `m`.
    ImpossibleByPrime,
    Candidate,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Cheap necessary conditions for a constant-`κ` selection.
///
/// For prime `p` dividing `m` the count test already fails, because
/// `C(m,p)/m = C(m-1,p-1)/p` and `C(m-1,p-1) ≡ 1 (mod p)` by Lucas' theorem.
/// [`Verdict::ImpossibleByPrime`] is therefore never returned in practice;
/// it is kept so the prime criterion stays visible as its own check.
pub fn constant_kappa_precheck(m: usize, p: usize) -> Result<Verdict> {
    check_parameters(m, p)?;
    Ok(if !binomial(m as u64, p as u64).is_multiple_of(m as u128) {
        Verdict::ImpossibleByCount
    } else if is_prime(p) && m.is_multiple_of(p) {
        Verdict::ImpossibleByPrime
    } else {
        Verdict::Candidate
    })
}

struct Search<'a> {
    m: usize,
    subsets: &'a [Vec<usize>],
    // remaining[i][x]: subsets at rank ≥ i containing x
    remaining: Vec<Vec<usize>>,
    cap: usize,
    counts: Vec<usize>,
    picks: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, rank: usize) -> Result<bool> {
        if rank == self.subsets.len() {
            return Ok(self.counts.iter().all(|&c| c == self.cap));
        }
        for (pos, &x) in self.subsets[rank].iter().enumerate() {
            if self.counts[x] >= self.cap {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.counts[x] += 1;
            let rest = &self.remaining[rank + 1];
            let feasible = (0..self.m).all(|y| self.counts[y] + rest[y] >= self.cap);
            if feasible {
                self.picks.push(pos);
                if self.run(rank + 1)? {
                    return Ok(true);
                }
                self.picks.pop();
            }
            self.counts[x] -= 1;
        }
        Ok(false)
    }
}

/// Exhaustive depth-first search for a selection with constant `κ`.
///
/// `Ok(Some(_))` is a witness, `Ok(None)` proves that none exists, and
/// [`Error::BudgetExceeded`] means the node budget ran out first.
pub fn search_constant_kappa(m: usize, p: usize, budget: u64) -> Result<Option<SubsetSelection>> {
    search_constant_kappa_counted(m, p, budget).map(|(found, _)| found)
}

/// As [`search_constant_kappa`], also returning the number of nodes visited.
pub fn search_constant_kappa_counted(
    m: usize,
    p: usize,
    budget: u64,
) -> Result<(Option<SubsetSelection>, u64)> {
    check_parameters(m, p)?;
    let masks = subsets(m, p)?;
    let total = masks.len();
    let lists: Vec<Vec<usize>> = masks.iter().map(|&s| members(s).collect()).collect();
    let mut remaining = vec![vec![0; m]; total + 1];
    for i in (0..total).rev() {
        remaining[i] = remaining[i + 1].clone();
        for &x in &lists[i] {
            remaining[i][x] += 1;
        }
    }
    let mut search = Search {
        m,
        subsets: &lists,
        remaining,
        cap: total / m,
        counts: vec![0; m],
        picks: Vec::with_capacity(total),
        nodes: 0,
        budget,
    };
    if !search.run(0)? {
        return Ok((None, search.nodes));
    }
    let choice = search.picks.iter().map(|&pos| pos as u8).collect();
    Ok((Some(SubsetSelection { m, p, subsets: masks, choice }), search.nodes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn subsets_are_colex() {
        let s = subsets(4, 2).unwrap();
        let lists: Vec<Vec<usize>> = s.iter().map(|&m| members(m).collect()).collect();
        assert_eq!(lists, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn kappa_examples() {
        // x,y,z = 0,1,2: σ{0,1}=0, σ{1,2}=1, σ{0,2}=2
        let cyc = SubsetSelection::from_fn(3, 2, |s| match s {
            [0, 1] => 0,
            [1, 2] => 1,
            _ => 2,
        })
        .unwrap();
        assert_eq!(kappa(&cyc).counts, vec![1, 1, 1]);
        assert!(kappa(&cyc).is_constant());

        let lowest = SubsetSelection::from_fn(3, 2, |s| s[0]).unwrap();
        assert_eq!(kappa(&lowest).counts, vec![2, 1, 0]);
        assert_eq!(kappa(&lowest).minimizers(), vec![2]);
    }

    #[test]
    fn pair_selection_matches_indegrees() {
        let t = Tournament::from_arcs(3, &[(0, 2), (2, 1), (1, 0)]).unwrap();
        let sel = SubsetSelection::from_tournament(&t).unwrap();
        assert_eq!(sel.select(&[1, 0]), Some(0));
        assert_eq!(sel.to_tournament().unwrap(), t);
        assert_eq!(kappa(&sel).counts, vec![1, 1, 1]);
    }

    #[test]
    fn construction_rejects_foreign_choice() {
        assert!(matches!(SubsetSelection::from_fn(3, 2, |_| 5), Err(Error::BadParameters(_))));
        assert!(matches!(SubsetSelection::from_fn(3, 3, |s| s[0]), Err(Error::BadParameters(_))));
        assert!(matches!(SubsetSelection::from_fn(3, 1, |s| s[0]), Err(Error::BadParameters(_))));
    }

    #[test]
    fn precheck_examples() {
        assert_eq!(constant_kappa_precheck(4, 2).unwrap(), Verdict::ImpossibleByCount);
        assert_eq!(constant_kappa_precheck(6, 3).unwrap(), Verdict::ImpossibleByCount);
        assert_eq!(constant_kappa_precheck(5, 2).unwrap(), Verdict::Candidate);
        assert!(constant_kappa_precheck(4, 4).is_err());
    }

    #[test]
    fn prime_divisor_always_fails_the_count() {
        for p in [2usize, 3, 5, 7, 11] {
            for m in (p + 1..=60).filter(|m| m % p == 0) {
                assert_eq!(constant_kappa_precheck(m, p).unwrap(), Verdict::ImpossibleByCount, "m={m} p={p}");
            }
        }
    }

    #[test]
    fn search_examples() {
        let w = search_constant_kappa(3, 2, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(kappa(&w).counts, vec![1, 1, 1]);
        assert_eq!(search_constant_kappa(4, 2, DEFAULT_BUDGET).unwrap(), None);
        let w = search_constant_kappa(5, 2, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(kappa(&w).counts, vec![2; 5]);
    }

    #[test]
    fn budget_is_reported_as_inconclusive() {
        assert_eq!(search_constant_kappa(7, 3, 5).unwrap_err(), Error::BudgetExceeded(5));
    }

    #[test]
    fn text_round_trip() {
        let w = search_constant_kappa(5, 3, DEFAULT_BUDGET).unwrap().unwrap();
        let text = w.to_text();
        assert!(text.starts_with("m 5 p 3\n{0,1,2} -> "));
        assert_eq!(SubsetSelection::from_text(&text).unwrap(), w);
        assert!(SubsetSelection::from_text("m 3 p 2\n{0,1} -> 0\n").is_err());
        assert!(SubsetSelection::from_text("m 3 p 2\n{0,1} -> 2\n{0,2} -> 0\n{1,2} -> 1\n").is_err());
    }
}
