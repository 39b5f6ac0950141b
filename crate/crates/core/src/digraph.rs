//! General irreflexive digraphs: communication networks and their 0/1
//! communication matrices. Both arcs between a pair are permitted here.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    // row-major n×n, diagonal always false
    adj: Vec<bool>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for &(u, v) in arcs {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::SelfArc(u));
            }
            adj[u * n + v] = true;
        }
        Ok(Digraph { n, adj })
    }

    /// Reads a communication matrix: entries must be 0 or 1 with a zero diagonal.
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut arcs = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            for (j, &c) in row.iter().enumerate() {
                match c {
                    0 => {}
                    1 if i == j => return Err(Error::SelfArc(i)),
                    1 => arcs.push((i, j)),
                    _ => return Err(Error::Parse(format!("entry ({i},{j}) = {c} is not 0 or 1"))),
                }
            }
        }
        Self::from_arcs(n, &arcs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn arcs(&self) -> BTreeSet<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_arc(u, v))
            .collect()
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_arc(v, u))
    }

    /// The communication matrix `C` with `c_ij = 1` iff `i → j`.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.has_arc(i, j) as u8).collect())
            .collect()
    }

    pub fn converse(&self) -> Self {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[v * n + u] = self.adj[u * n + v];
            }
        }
        Digraph { n, adj }
    }

    /// First pair `{u,v}` with no arc in either direction, if any.
    pub fn first_unlinked_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| !self.has_arc(u, v) && !self.has_arc(v, u))
    }
}

impl From<&Tournament> for Digraph {
    fn from(t: &Tournament) -> Self {
        let n = t.n();
        let mut adj = vec![false; n * n];
        for (u, v) in t.arcs() {
            adj[u * n + v] = true;
        }
        Digraph { n, adj }
    }
}
