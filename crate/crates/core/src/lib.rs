//! Finite weak selections viewed as tournaments.
//!
//! A weak selection on a finite set picks one point from every pair; reading
//! "the selection picks `v` from `{u,v}`" as "`u` beats `v`" turns it into a
//! tournament. This crate covers score sequences and Landau's condition,
//! kings and emperors, complete paths and triple counts, selection flows on
//! complete graphs, and selections on `p`-element subsets, together with the
//! exhaustive enumerators used to check every statement at small orders.

pub mod cli;
pub mod digraph;
pub mod dominance;
pub mod error;
pub mod flows;
pub mod generate;
pub mod io;
pub mod paths;
pub mod psel;
pub mod scores;
pub mod tournament;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use generate::Seed;
pub use io::TournamentDoc;
pub use scores::ScoreSequence;
pub use tournament::Tournament;
