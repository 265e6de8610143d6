//! Plain-text graph files.
//!
//! One arc per line as `tail head [weight]`, weight defaulting to 1. `#`
//! starts a comment and blank lines are skipped. Repeated `(tail, head)`
//! lines add their weights. With `undirected` every arc also contributes its
//! reverse at the same weight.

use std::fmt::Write as _;
use std::path::Path;

use travgraph_core::graph::RelationBuilder;
use travgraph_core::MultiTraversalRelation;

use crate::error::{Error, Result};

pub fn parse_graph(text: &str, undirected: bool) -> Result<MultiTraversalRelation> {
    let mut b = RelationBuilder::new().undirected(undirected);
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        if fields.len() > 3 || fields.len() < 2 {
            return Err(err(format!("expected `tail head [weight]`, found {} fields", fields.len())));
        }
        let mut nums = [0u32, 0, 1];
        for (slot, f) in nums.iter_mut().zip(&fields) {
            *slot = f
                .parse::<u32>()
                .ok()
                .filter(|&x| x > 0)
                .ok_or_else(|| err(format!("`{f}` is not a positive integer")))?;
        }
        b.add(nums[0], nums[1], nums[2]).map_err(|e| err(e.to_string()))?;
    }
    b.build().map_err(|e| Error::Parse { line: last_line, message: e.to_string() })
}

pub fn read_graph(path: &Path, undirected: bool) -> Result<MultiTraversalRelation> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })?;
    parse_graph(&text, undirected)
}

/// One line per stored arc in ascending order; the weight column is written
/// only when it differs from 1.
pub fn serialize(g: &MultiTraversalRelation) -> String {
    let mut out = String::new();
    for (a, w) in g.arcs() {
        if w == 1 {
            let _ = writeln!(out, "{} {}", a.tail, a.head);
        } else {
            let _ = writeln!(out, "{} {} {}", a.tail, a.head, w);
        }
    }
    out
}

pub fn write_graph(path: &Path, g: &MultiTraversalRelation) -> Result<()> {
    std::fs::write(path, serialize(g)).map_err(|source| Error::Io { path: path.to_owned(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use travgraph_core::{Arc, GraphClass};

    #[test]
    fn comments_blanks_and_weights() {
        let g = parse_graph("# header\n\n1 2\n2 3 4  # trailing\n   \n", false).unwrap();
        assert_eq!(g.multiplicity(Arc::of(1, 2)), 1);
        assert_eq!(g.multiplicity(Arc::of(2, 3)), 4);
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn duplicates_sum() {
        let g = parse_graph("1 2\n1 2 2\n2 1\n", false).unwrap();
        assert_eq!(g.multiplicity(Arc::of(1, 2)), 3);
        assert_eq!(g.classify(), GraphClass::Mixed);
    }

    #[test]
    fn undirected_mirrors() {
        let g = parse_graph("1 2\n2 3\n3 3\n", true).unwrap();
        assert_eq!(g.classify(), GraphClass::Simple);
        assert_eq!(g.multiplicity(Arc::of(3, 3)), 1);
        assert_eq!(g.arc_count(), 5);
    }

    #[test]
    fn errors_carry_line_numbers() {
        for (text, line) in [("1 2\n1\n", 2), ("1 2 3 4", 1), ("1 0", 1), ("\n\n1 x", 3), ("1 -2", 1)] {
            match parse_graph(text, false) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(parse_graph("# nothing\n", false), Err(Error::Parse { .. })));
    }

    #[test]
    fn round_trip() {
        let g = travgraph_core::generators::random_connected(9, 6, 3, 0.5, 11).unwrap();
        assert_eq!(parse_graph(&serialize(&g), false).unwrap(), g);
    }
}
