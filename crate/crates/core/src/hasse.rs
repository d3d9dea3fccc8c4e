//! Hasse diagrams of the grainy order over a bounded universe.

use std::fmt::Write as _;

use crate::lawcheck::Universe;
use crate::number::GrainyNumber;

/// Covering pairs `(upper, lower)` as indices into `universe`: `upper > lower`
/// with no member strictly between them.
pub fn covers(universe: &Universe) -> Vec<(usize, usize)> {
    let members = universe.members();
    let strictly_above = |a: &GrainyNumber, b: &GrainyNumber| a != b && a.geq(b);
    let mut edges = Vec::new();
    for (i, upper) in members.iter().enumerate() {
        for (j, lower) in members.iter().enumerate() {
            if !strictly_above(upper, lower) {
                continue;
            }
            let between = members
                .iter()
                .any(|m| strictly_above(upper, m) && strictly_above(m, lower));
            if !between {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Graphviz `digraph` with one node per member, labelled in compact
/// notation, and one edge per covering pair pointing downwards from the
/// greater element. `0` is drawn at the top.
pub fn render_dot(universe: &Universe) -> String {
    let members = universe.members();
    let mut out = String::new();
    let _ = writeln!(out, "digraph grainy {{");
    let _ = writeln!(out, "  rankdir=TB;");
    for m in members {
        let _ = writeln!(out, "  \"{m}\";");
    }
    for (upper, lower) in covers(universe) {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", members[upper], members[lower]);
    }
    let _ = writeln!(out, "}}");
    out
}
