//! The braid corpus: JSON lines of `{"name","strands","word","expected_jhat"}`.

use std::path::Path;

use ebraid_core::{BraidWord, TauLaurent};
use serde::Deserialize;
use serde_json::Value;

use crate::error::{AppError, Result};
use crate::format::poly_from_json;

/// The corpus shipped with the binary.
pub const EMBEDDED: &str = include_str!("../corpus.jsonl");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub braid: BraidWord,
    pub expected_jhat: Option<TauLaurent>,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    strands: usize,
    word: String,
    #[serde(default)]
    expected_jhat: Option<Value>,
}

pub fn parse(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        if line.trim().is_empty() {
            continue;
        }
        let err = |message: String| AppError::Corpus { line: line_no, message };
        let raw: RawEntry = serde_json::from_str(line).map_err(|e| err(e.to_string()))?;
        let braid = BraidWord::parse(&raw.word, raw.strands).map_err(|e| err(e.to_string()))?;
        let expected_jhat = match raw.expected_jhat {
            None | Some(Value::Null) => None,
            Some(v) => Some(poly_from_json(&v).map_err(|e| err(e.to_string()))?),
        };
        out.push(CorpusEntry {
            name: raw.name,
            braid,
            expected_jhat,
        });
    }
    Ok(out)
}

pub fn load(path: &Path) -> Result<Vec<CorpusEntry>> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn embedded() -> Vec<CorpusEntry> {
    parse(EMBEDDED).expect("embedded corpus is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_corpus_parses() {
        let c = embedded();
        assert!(c.iter().any(|e| e.name == "trefoil"));
        assert!(c.iter().all(|e| e.expected_jhat.is_some()));
    }

    #[test]
    fn bad_lines_report_their_number() {
        let text = "{\"name\":\"a\",\"strands\":1,\"word\":\"\"}\n{\"name\":\"b\",\"strands\":2,\"word\":\"2\"}\n";
        match parse(text) {
            Err(AppError::Corpus { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
