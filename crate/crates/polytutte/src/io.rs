//! Instance ingestion: JSON rank tables, JSON graphs, inline constructor
//! strings, and file loading that dispatches between them.
//!
//! Two JSON schemas are accepted. A rank table lists all `2^n` values of
//! the set function, ordered by subset bitmask (index 0 is the empty set):
//!
//! ```json
//! {"n": 2, "ranks": [0, 1, 1, 1]}
//! ```
//!
//! A graph gives `vertices` and an edge list with 0-indexed endpoints; the
//! edge order fixes the ground-set order of the resulting cycle matroid:
//!
//! ```json
//! {"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}
//! ```
//!
//! Inline constructors avoid files entirely: `uniform:d,n` builds the
//! uniform matroid of rank `d` on `n` elements, and
//! `coverage:seed,n,ground,parts,maxw` builds a deterministically seeded
//! random coverage function.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::families::{graphic, random_coverage, uniform};
use crate::rank::RankFunction;

#[derive(Deserialize)]
struct RankTableFile {
    n: usize,
    ranks: Vec<i64>,
}

#[derive(Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

fn parse_fields<'a>(text: &'a str, prefix: &str, arity: usize) -> Result<Vec<&'a str>> {
    let rest = &text[prefix.len()..];
    let fields: Vec<&str> = rest.split(',').map(str::trim).collect();
    if fields.len() != arity {
        return Err(Error::Parse(format!(
            "{prefix} takes {arity} comma-separated values, got {}",
            fields.len()
        )));
    }
    Ok(fields)
}

fn parse_number<T: std::str::FromStr>(field: &str, what: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| Error::Parse(format!("{what} must be a number, got {field:?}")))
}

/// Parses instance text: either one of the two JSON schemas or an inline
/// constructor string. Content validation failures (non-submodular tables,
/// out-of-range vertices, ...) propagate with their witnesses.
pub fn parse_instance(text: &str) -> Result<RankFunction> {
    let text = text.trim();
    if text.starts_with('{') {
        return parse_json(text);
    }
    if text.starts_with("uniform:") {
        let fields = parse_fields(text, "uniform:", 2)?;
        let d = parse_number(fields[0], "uniform rank")?;
        let n = parse_number(fields[1], "uniform ground-set size")?;
        return uniform(d, n);
    }
    if text.starts_with("coverage:") {
        let fields = parse_fields(text, "coverage:", 5)?;
        let seed: u64 = parse_number(fields[0], "coverage seed")?;
        let n: usize = parse_number(fields[1], "coverage ground-set size")?;
        let ground: usize = parse_number(fields[2], "coverage universe size")?;
        let parts: usize = parse_number(fields[3], "coverage part count")?;
        let maxw: i64 = parse_number(fields[4], "coverage maximum weight")?;
        return random_coverage(n, seed, ground, parts, maxw);
    }
    Err(Error::Parse(format!(
        "expected a JSON object, \"uniform:d,n\", or \"coverage:seed,n,ground,parts,maxw\", got {text:?}"
    )))
}

fn parse_json(text: &str) -> Result<RankFunction> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let object = value
        .as_object()
        .ok_or_else(|| Error::Parse("top-level JSON value must be an object".to_string()))?;
    if object.contains_key("ranks") {
        let table: RankTableFile = serde_json::from_value(value)
            .map_err(|e| Error::Parse(format!("bad rank-table fields: {e}")))?;
        RankFunction::new(table.n, table.ranks)
    } else if object.contains_key("edges") {
        let graph: GraphFile = serde_json::from_value(value)
            .map_err(|e| Error::Parse(format!("bad graph fields: {e}")))?;
        graphic(graph.vertices, &graph.edges)
    } else {
        Err(Error::Parse(
            "JSON object needs either a \"ranks\" or an \"edges\" field".to_string(),
        ))
    }
}

/// Resolves a command-line instance argument: a path to a JSON file, a JSON
/// literal, or an inline constructor string.
pub fn load_instance(arg: &str) -> Result<RankFunction> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("could not read {arg}: {e}")))?;
        return parse_instance(&text);
    }
    parse_instance(arg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::SubsetMask;

    #[test]
    fn rank_table_json_round_trips() {
        let parsed = parse_instance(r#"{"n": 2, "ranks": [0, 1, 1, 1]}"#).unwrap();
        assert_eq!(parsed, uniform(1, 2).unwrap());
    }

    #[test]
    fn graph_json_builds_the_cycle_matroid() {
        let parsed =
            parse_instance(r#"{"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}"#).unwrap();
        assert_eq!(parsed.n(), 3);
        assert_eq!(parsed.full_rank(), 2);
        assert_eq!(parsed.value(SubsetMask::singleton(0).insert(1)), 2);
    }

    #[test]
    fn inline_constructors_match_their_builders() {
        assert_eq!(
            parse_instance("uniform:1,2").unwrap(),
            uniform(1, 2).unwrap()
        );
        assert_eq!(
            parse_instance("coverage:7,3,4,2,2").unwrap(),
            random_coverage(3, 7, 4, 2, 2).unwrap()
        );
    }

    #[test]
    fn whitespace_is_tolerated() {
        assert_eq!(
            parse_instance(" uniform: 2 , 4 ").unwrap(),
            uniform(2, 4).unwrap()
        );
    }

    #[test]
    fn validation_failures_carry_witnesses() {
        let err = parse_instance(r#"{"n": 2, "ranks": [0, 1, 1, 3]}"#).unwrap_err();
        assert_eq!(
            err,
            Error::NotSubmodular {
                i: SubsetMask::singleton(0),
                j: SubsetMask::singleton(1),
            }
        );
    }

    #[test]
    fn malformed_inputs_report_parse_errors() {
        for bad in [
            "hello",
            "uniform:1",
            "uniform:one,2",
            "coverage:1,2,3",
            "{\"n\": 2}",
            "{\"n\": 2, \"ranks\": \"nope\"}",
            "[1, 2]",
            "{broken json",
        ] {
            assert!(
                matches!(parse_instance(bad), Err(Error::Parse(_))),
                "input {bad:?} should fail to parse"
            );
        }
    }

    #[test]
    fn file_arguments_are_read_and_parsed() {
        let dir = std::env::temp_dir();
        let path = dir.join("polytutte-io-test-instance.json");
        std::fs::write(&path, r#"{"n": 2, "ranks": [0, 1, 1, 1]}"#).unwrap();
        let parsed = load_instance(path.to_str().unwrap()).unwrap();
        std::fs::remove_file(&path).ok();
        assert_eq!(parsed, uniform(1, 2).unwrap());
    }

    #[test]
    fn missing_files_fall_back_to_inline_parsing() {
        let err = load_instance("/no/such/file.json").unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }
}
