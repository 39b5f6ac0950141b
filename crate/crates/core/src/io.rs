//! Tournament document formats.
//!
//! Text format, line oriented, `#` starts a comment:
//!
//! ```text
//! # a 3-cycle
//! n 3
//! label 0 alpha
//! 0 2
//! 1 0
//! 2 1
//! ```
//!
//! `n <count>` opens a document, `label <index> <name>` lines are optional,
//! and every other line is an arc `u v` meaning `u` beats `v`. Several
//! documents may be concatenated; each `n` line starts a new one.
//!
//! Structured format is a JSON object `{"n":3,"arcs":[[0,2],[1,0],[2,1]]}`
//! with an optional `"labels"` array of strings.
//!
//! Writers always emit arcs in lexicographic order, so reading and writing
//! reproduces the document byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// A tournament together with its optional vertex label table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentDoc {
    pub tournament: Tournament,
    pub labels: Option<Vec<String>>,
}

impl TournamentDoc {
    pub fn new(tournament: Tournament) -> Self {
        TournamentDoc { tournament, labels: None }
    }

    /// Display name of vertex `v`: its label, or the index itself.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        let t = &self.tournament;
        let mut out = format!("n {}\n", t.n());
        if let Some(labels) = &self.labels {
            for (i, l) in labels.iter().enumerate() {
                out.push_str(&format!("label {i} {l}\n"));
            }
        }
        for (u, v) in t.arcs() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_structured(&self) -> StructuredTournament {
        StructuredTournament {
            schema_version: None,
            n: self.tournament.n(),
            arcs: self.tournament.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_structured()).expect("plain data serializes")
    }

    pub fn from_structured(doc: StructuredTournament) -> Result<Self> {
        let arcs: Vec<(usize, usize)> = doc.arcs.iter().map(|a| (a[0], a[1])).collect();
        let tournament = Tournament::from_arcs(doc.n, &arcs)?;
        check_labels(doc.n, doc.labels.as_deref())?;
        Ok(TournamentDoc { tournament, labels: doc.labels })
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let doc: StructuredTournament =
            serde_json::from_str(src).map_err(|e| Error::Parse(format!("structured tournament: {e}")))?;
        Self::from_structured(doc)
    }

    /// Parses exactly one text document.
    pub fn from_text(src: &str) -> Result<Self> {
        let mut docs = parse_text_many(src)?;
        match docs.len() {
            1 => Ok(docs.pop().unwrap()),
            0 => Err(Error::Parse("no `n <count>` line found".into())),
            k => Err(Error::Parse(format!("expected one document, found {k}"))),
        }
    }

    /// Parses either format, choosing structured when the input starts with `{`.
    pub fn parse(src: &str) -> Result<Self> {
        if src.trim_start().starts_with('{') {
            Self::from_json(src)
        } else {
            Self::from_text(src)
        }
    }
}

/// Serde mirror of the structured tournament document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructuredTournament {
    /// Present when the document is CLI output; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn check_labels(n: usize, labels: Option<&[String]>) -> Result<()> {
    if let Some(labels) = labels {
        if labels.len() != n {
            return Err(Error::Parse(format!("{} labels for {n} vertices", labels.len())));
        }
        if labels.iter().any(|l| l.is_empty() || l.chars().any(char::is_whitespace)) {
            return Err(Error::Parse("labels must be nonempty and contain no whitespace".into()));
        }
    }
    Ok(())
}

struct Partial {
    n: usize,
    arcs: Vec<(usize, usize)>,
    labels: Vec<Option<String>>,
}

impl Partial {
    fn finish(self) -> Result<TournamentDoc> {
        let tournament = Tournament::from_arcs(self.n, &self.arcs)?;
        let labels = if self.labels.iter().all(Option::is_none) {
            None
        } else {
            let labels = self
                .labels
                .into_iter()
                .enumerate()
                .map(|(i, l)| l.ok_or_else(|| Error::Parse(format!("vertex {i} has no label"))))
                .collect::<Result<Vec<_>>>()?;
            Some(labels)
        };
        check_labels(self.n, labels.as_deref())?;
        Ok(TournamentDoc { tournament, labels })
    }
}

fn parse_index(tok: &str, line_no: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse(format!("line {line_no}: `{tok}` is not a vertex index")))
}

/// Parses zero or more concatenated text documents.
pub fn parse_text_many(src: &str) -> Result<Vec<TournamentDoc>> {
    let mut docs = Vec::new();
    let mut current: Option<Partial> = None;
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["n", count] => {
                if let Some(p) = current.take() {
                    docs.push(p.finish()?);
                }
                let n = parse_index(count, line_no)?;
                current = Some(Partial { n, arcs: Vec::new(), labels: vec![None; n] });
            }
            ["label", idx, name] => {
                let p = current
                    .as_mut()
                    .ok_or_else(|| Error::Parse(format!("line {line_no}: label before `n` line")))?;
                let idx = parse_index(idx, line_no)?;
                if idx >= p.n {
                    return Err(Error::IndexOutOfRange { index: idx, n: p.n });
                }
                p.labels[idx] = Some((*name).to_string());
            }
            [u, v] => {
                let p = current
                    .as_mut()
                    .ok_or_else(|| Error::Parse(format!("line {line_no}: arc before `n` line")))?;
                p.arcs.push((parse_index(u, line_no)?, parse_index(v, line_no)?));
            }
            _ => return Err(Error::Parse(format!("line {line_no}: cannot parse `{line}`"))),
        }
    }
    if let Some(p) = current {
        docs.push(p.finish()?);
    }
    Ok(docs)
}
