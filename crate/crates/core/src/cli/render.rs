use std::fmt::Display;

use crate::dominance::{DistanceMatrix, DominanceReport};
use crate::io::TournamentDoc;

pub(super) fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn or_dash<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Distance rows with unreachable entries as `null`.
pub(super) fn distance_rows(d: &DistanceMatrix) -> Vec<Vec<Option<usize>>> {
    (0..d.n()).map(|u| d.row(u).to_vec()).collect()
}

pub(super) fn dominance(doc: &TournamentDoc, r: &DominanceReport) -> String {
    let n = doc.tournament.n();
    let set = |vs: &[usize]| if vs.is_empty() { "-".to_string() } else { join(vs) };
    let mut out = String::new();
    out.push_str(&format!("n        {n}\n"));
    out.push_str(&format!("emperor  {}\n", or_dash(r.emperor)));
    out.push_str(&format!("kings    {}\n", set(&r.kings)));
    out.push_str(&format!("king     {}\n", r.king()));
    out.push_str(&format!("slaves   {}\n", set(&r.slaves)));
    out.push_str(&format!("serfs    {}\n", set(&r.serfs)));
    out.push_str("distances (row = source, - = unreachable)\n");

    let width = n.saturating_sub(1).to_string().len().max(1);
    let header: Vec<String> = (0..n).map(|v| format!("{v:>width$}")).collect();
    out.push_str(&format!("{:>width$}  {}\n", "", header.join(" ")));
    for u in 0..n {
        let cells: Vec<String> = r.distances.row(u).iter().map(|d| format!("{:>width$}", or_dash(*d))).collect();
        out.push_str(&format!("{u:>width$}  {}\n", cells.join(" ")));
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph with one edge per arc, winner to loser, arcs sorted.
pub fn export_graphviz(doc: &TournamentDoc) -> String {
    let t = &doc.tournament;
    let mut out = String::from("digraph tournament {\n");
    for v in 0..t.n() {
        out.push_str(&format!("  {v} [label={}];\n", quote(&doc.label(v))));
    }
    for (u, v) in t.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::Tournament;

    #[test]
    fn graphviz_examples() {
        let one = TournamentDoc::new(Tournament::transitive(1));
        assert_eq!(export_graphviz(&one), "digraph tournament {\n  0 [label=\"0\"];\n}\n");

        let cyc = TournamentDoc::new(Tournament::from_arcs(3, &[(0, 2), (2, 1), (1, 0)]).unwrap());
        let dot = export_graphviz(&cyc);
        assert!(dot.contains("  0 -> 2;\n  1 -> 0;\n  2 -> 1;\n"));
        assert_eq!(dot.matches("->").count(), 3);
        assert_eq!(export_graphviz(&cyc), dot);
    }

    #[test]
    fn labels_are_quoted() {
        let doc = TournamentDoc {
            tournament: Tournament::transitive(2),
            labels: Some(vec!["a\"b".into(), "c".into()]),
        };
        assert!(export_graphviz(&doc).contains("  0 [label=\"a\\\"b\"];\n"));
    }
}
