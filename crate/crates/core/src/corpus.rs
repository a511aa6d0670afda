//! Named collections of knotoid diagrams.
//!
//! One entry per line as `name: <gauss code>`; `#` starts a comment and
//! blank lines are skipped. An empty code is the trivial knotoid.

use std::collections::HashSet;

use crate::knotoid::{GaussError, KnotoidDiagram};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub diagram: KnotoidDiagram,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error("line {line}: expected `name: <gauss code>`")]
    MissingColon { line: usize },
    #[error("line {line}: empty name")]
    EmptyName { line: usize },
    #[error("line {line}: duplicate name {name:?}")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: {source}")]
    Gauss { line: usize, source: GaussError },
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut entries = Vec::new();
    let mut names = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (name, code) = content.split_once(':').ok_or(CorpusError::MissingColon { line })?;
        let name = name.trim();
        if name.is_empty() {
            return Err(CorpusError::EmptyName { line });
        }
        if !names.insert(name.to_string()) {
            return Err(CorpusError::DuplicateName {
                line,
                name: name.to_string(),
            });
        }
        let diagram = KnotoidDiagram::parse_gauss(code).map_err(|source| CorpusError::Gauss { line, source })?;
        entries.push(CorpusEntry {
            name: name.to_string(),
            diagram,
        });
    }
    Ok(entries)
}

pub fn serialize_corpus(entries: &[CorpusEntry]) -> String {
    entries
        .iter()
        .map(|e| {
            let code = e.diagram.to_string();
            if code.is_empty() {
                format!("{}:\n", e.name)
            } else {
                format!("{}: {code}\n", e.name)
            }
        })
        .collect()
}
