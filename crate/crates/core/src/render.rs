//! Hasse diagrams of `P(s,t)` as DOT or TikZ, with ideal members drawn
//! white and every other gap black.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::gap_poset::CoprimePair;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    Dot,
    Tikz,
}

/// Plane position of gap `x`: `a + b` grows downwards and `b - a` grows to
/// the right, so `F` sits on top. For `(2k+1, 2k+3)` the left part
/// (`a > b`) is pushed one unit further left to open a gap at `a = b`.
fn layout(pair: &CoprimePair, x: u64) -> (i64, i64) {
    let c = pair.psi(x).expect("only gaps are laid out");
    let (a, b) = (c.a as i64, c.b as i64);
    let mut col = b - a;
    if pair.twin_index().is_some() && a > b {
        col -= 1;
    }
    (col, -(a + b))
}

/// Cover relations `(upper, lower)` sorted by upper element descending.
fn edges(pair: &CoprimePair, gaps: &[u64]) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = gaps
        .iter()
        .flat_map(|&x| pair.lower_covers(x).map(move |y| (x, y)))
        .collect();
    out.sort_by(|p, q| q.0.cmp(&p.0).then(q.1.cmp(&p.1)));
    out
}

pub fn render(pair: &CoprimePair, members: &BTreeSet<u64>, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Dot => to_dot(pair, members),
        DiagramFormat::Tikz => to_tikz(pair, members),
    }
}

pub fn to_dot(pair: &CoprimePair, members: &BTreeSet<u64>) -> String {
    let gaps = pair.gaps();
    let mut out = String::new();
    writeln!(out, "graph P_{}_{} {{", pair.s(), pair.t()).unwrap();
    writeln!(
        out,
        "  node [shape=circle, style=filled, width=0.4, fixedsize=true];"
    )
    .unwrap();
    for &x in gaps.iter().rev() {
        let (col, row) = layout(pair, x);
        let (fill, font) = if members.contains(&x) {
            ("white", "black")
        } else {
            ("black", "white")
        };
        writeln!(
            out,
            "  n{x} [label=\"{x}\", fillcolor={fill}, fontcolor={font}, pos=\"{col},{row}!\"];"
        )
        .unwrap();
    }
    for (x, y) in edges(pair, &gaps) {
        writeln!(out, "  n{x} -- n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn to_tikz(pair: &CoprimePair, members: &BTreeSet<u64>) -> String {
    let gaps = pair.gaps();
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[scale=0.6]\n");
    for &x in gaps.iter().rev() {
        let (col, row) = layout(pair, x);
        let style = if members.contains(&x) {
            "fill=white"
        } else {
            "fill=black, text=white"
        };
        writeln!(
            out,
            "  \\node[circle, draw, inner sep=1pt, {style}] (n{x}) at ({col}, {row}) {{\\tiny {x}}};"
        )
        .unwrap();
    }
    for (x, y) in edges(pair, &gaps) {
        writeln!(out, "  \\draw (n{x}) -- (n{y});").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
