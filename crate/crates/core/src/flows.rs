//! Flows on complete graphs and the selection flow of a tournament.
//!
//! A flow on `K_n` assigns an integer to every directed edge `(x,y)` with
//! `value(x,y) = -value(y,x)`. Only `value(u,v)` for `u < v` is stored, so
//! antisymmetry cannot be broken.
//!
//! The selection flow of a tournament has `value(x,y) = +1` exactly when
//! `x <σ y`, i.e. when `σ({x,y}) = x`, i.e. when `y` beats `x`. On `K_2`
//! where vertex 0 beats vertex 1:
//!
//! | edge    | relation  | value |
//! |---------|-----------|-------|
//! | `(1,0)` | `1 <σ 0`  | `+1`  |
//! | `(0,1)` | `0 >σ 1`  | `-1`  |
//!
//! The total flow at `a` is then `indegree(a) - score(a) = (n-1) - 2·score(a)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tournament::{pair_count, pair_index, Tournament};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flow {
    n: usize,
    upper: Vec<i64>,
}

impl Flow {
    pub fn zero(n: usize) -> Self {
        Flow { n, upper: vec![0; pair_count(n)] }
    }

    /// From the values `value(u,v)`, `u < v`, in packed pair order.
    pub fn from_upper(n: usize, upper: Vec<i64>) -> Result<Self> {
        if upper.len() != pair_count(n) {
            return Err(Error::Parse(format!("{} values for {} pairs", upper.len(), pair_count(n))));
        }
        Ok(Flow { n, upper })
    }

    /// From a value on every ordered pair; rejects a non-antisymmetric input.
    pub fn from_fn<F: FnMut(usize, usize) -> i64>(n: usize, mut value: F) -> Result<Self> {
        let mut upper = Vec::with_capacity(pair_count(n));
        for u in 0..n {
            for v in u + 1..n {
                let (forward, backward) = (value(u, v), value(v, u));
                if forward.checked_neg() != Some(backward) {
                    return Err(Error::NotAntisymmetric(u, v));
                }
                upper.push(forward);
            }
        }
        Ok(Flow { n, upper })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `value(x,y)`; zero on the diagonal, which is not an edge.
    pub fn value(&self, x: usize, y: usize) -> i64 {
        assert!(x < self.n && y < self.n, "vertex out of range");
        match x.cmp(&y) {
            std::cmp::Ordering::Less => self.upper[pair_index(self.n, x, y)],
            std::cmp::Ordering::Greater => -self.upper[pair_index(self.n, y, x)],
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn negate(&self) -> Self {
        Flow { n: self.n, upper: self.upper.iter().map(|v| -v).collect() }
    }
}

/// A flow with every value in `{-1, +1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SelectionFlow(Flow);

impl SelectionFlow {
    pub fn new(flow: Flow) -> Result<Self> {
        for u in 0..flow.n {
            for v in u + 1..flow.n {
                let x = flow.value(u, v);
                if x != 1 && x != -1 {
                    return Err(Error::NotSelectionFlow(u, v, x));
                }
            }
        }
        Ok(SelectionFlow(flow))
    }

    pub fn flow(&self) -> &Flow {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    /// The tournament with `x <σ y` whenever `value(x,y) = +1`.
    pub fn tournament(&self) -> Tournament {
        // u → v  ⟺  v <σ u  ⟺  value(v,u) = +1  ⟺  value(u,v) = -1
        Tournament::from_fn(self.n(), |u, v| self.0.value(u, v) == -1)
    }
}

pub fn selection_flow(t: &Tournament) -> SelectionFlow {
    let flow = Flow::from_fn(t.n(), |x, y| if t.beats(y, x) { 1 } else { -1 })
        .expect("orientation flow is antisymmetric");
    SelectionFlow(flow)
}

/// Total flow `φ(a) = Σ_{b ≠ a} value(a,b)`.
pub fn total_flow(f: &Flow, a: usize) -> Result<i64> {
    if a >= f.n {
        return Err(Error::IndexOutOfRange { index: a, n: f.n });
    }
    Ok((0..f.n).map(|b| f.value(a, b)).sum())
}

/// `φ` at every vertex.
pub fn total_flows(f: &Flow) -> Vec<i64> {
    (0..f.n).map(|a| total_flow(f, a).expect("in range")).collect()
}

/// `Σ_a φ(a)`, which is always zero.
pub fn flow_sum(f: &Flow) -> i64 {
    let sum: i64 = total_flows(f).iter().sum();
    assert_eq!(sum, 0, "total flows of a flow cancel");
    sum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum K4Case {
    /// Some vertex has `|φ| = 3`.
    EmperorLike,
    /// Every vertex has `|φ| = 1`.
    AllUnit,
}

pub fn k4_dichotomy(f: &SelectionFlow) -> Result<K4Case> {
    if f.n() != 4 {
        return Err(Error::WrongOrder(format!("K4 dichotomy needs n = 4, got {}", f.n())));
    }
    let phi = total_flows(f.flow());
    let some_three = phi.iter().any(|p| p.abs() == 3);
    let all_unit = phi.iter().all(|p| p.abs() == 1);
    match (some_three, all_unit) {
        (true, false) => Ok(K4Case::EmperorLike),
        (false, true) => Ok(K4Case::AllUnit),
        _ => panic!("K4 total flows {phi:?} fit neither case"),
    }
}

/// `A = {φ > 0}` and `B = {φ < 0}` for the selection flow of an even-order
/// tournament. Both are nonempty and together cover every vertex, since `φ`
/// is odd when `n` is even.
pub fn even_partition(t: &Tournament) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = t.n();
    if n % 2 == 1 || n < 4 {
        return Err(Error::WrongOrder(format!("even partition needs even n ≥ 4, got {n}")));
    }
    let phi = total_flows(selection_flow(t).flow());
    assert!(phi.iter().all(|&p| p != 0), "φ vanished on an even-order graph: {phi:?}");
    let a: Vec<usize> = (0..n).filter(|&v| phi[v] > 0).collect();
    let b: Vec<usize> = (0..n).filter(|&v| phi[v] < 0).collect();
    assert!(!a.is_empty() && !b.is_empty(), "both sides of the partition are nonempty");
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_tournament, Seed};

    #[test]
    fn k2_orientation_table() {
        let t = Tournament::from_arcs(2, &[(0, 1)]).unwrap();
        let f = selection_flow(&t);
        assert_eq!(f.flow().value(1, 0), 1);
        assert_eq!(f.flow().value(0, 1), -1);
        assert_eq!(f.tournament(), t);
    }

    #[test]
    fn three_cycle_flow_follows_the_order() {
        // 0→2→1→0, so 2 <σ 0, 1 <σ 2, 0 <σ 1
        let t = Tournament::from_arcs(3, &[(0, 2), (2, 1), (1, 0)]).unwrap();
        let f = selection_flow(&t);
        assert_eq!((f.flow().value(2, 0), f.flow().value(1, 2), f.flow().value(0, 1)), (1, 1, 1));
        let phi = total_flows(f.flow());
        assert_eq!(phi, vec![0, 0, 0]);
        assert_eq!(flow_sum(f.flow()), 0);
    }

    #[test]
    fn converse_negates() {
        let t = random_tournament(6, Seed(3)).unwrap();
        assert_eq!(selection_flow(&t.converse()).flow(), &selection_flow(&t).flow().negate());
    }

    #[test]
    fn total_flow_examples() {
        let f = selection_flow(&Tournament::transitive(4));
        assert_eq!(total_flows(f.flow()), vec![-3, -1, 1, 3]);
        let z = Flow::zero(5);
        assert_eq!(total_flows(&z), vec![0; 5]);
        assert_eq!(total_flow(&z, 5).unwrap_err(), Error::IndexOutOfRange { index: 5, n: 5 });
        let k2 = Flow::from_upper(2, vec![7]).unwrap();
        assert_eq!(k2.value(1, 0), -7);
        assert_eq!(flow_sum(&k2), 0);
    }

    #[test]
    fn construction_checks() {
        assert_eq!(Flow::from_fn(2, |_, _| 1).unwrap_err(), Error::NotAntisymmetric(0, 1));
        assert_eq!(
            SelectionFlow::new(Flow::from_upper(2, vec![2]).unwrap()).unwrap_err(),
            Error::NotSelectionFlow(0, 1, 2)
        );
        assert!(SelectionFlow::new(Flow::zero(2)).is_err());
        assert!(Flow::from_upper(3, vec![1]).is_err());
    }

    #[test]
    fn k4_examples() {
        let f = selection_flow(&Tournament::transitive(4));
        assert_eq!(k4_dichotomy(&f).unwrap(), K4Case::EmperorLike);
        // scores (2,2,1,1): 0→1, 0→2, 1→2, 1→3, 2→3, 3→0
        let t = Tournament::from_arcs(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 0)]).unwrap();
        assert_eq!(k4_dichotomy(&selection_flow(&t)).unwrap(), K4Case::AllUnit);
        assert!(matches!(k4_dichotomy(&selection_flow(&Tournament::transitive(3))), Err(Error::WrongOrder(_))));
    }

    #[test]
    fn even_partition_examples() {
        assert_eq!(even_partition(&Tournament::transitive(4)).unwrap(), (vec![2, 3], vec![0, 1]));
        let t = Tournament::from_arcs(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 0)]).unwrap();
        assert_eq!(even_partition(&t).unwrap(), (vec![2, 3], vec![0, 1]));
        assert!(even_partition(&Tournament::transitive(5)).is_err());
        assert!(even_partition(&Tournament::transitive(2)).is_err());
    }
}
