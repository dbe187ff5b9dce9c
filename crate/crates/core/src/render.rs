//! Graphviz output for cowordisms.
//!
//! Incoming points sit on one rank and outgoing points on another, each in
//! boundary order. Words run from left endpoints of the body, drawn as small
//! filled circles, to right endpoints, drawn as arrowheads.

use std::fmt::Write;

use crate::category::Cowordism;
use crate::multiword::{Polarity, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Orientation {
    /// Source on the left, target on the right.
    #[default]
    Horizontal,
    /// Source on top, target at the bottom.
    Vertical,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RenderOptions {
    pub orientation: Orientation,
    /// Print `.` and `-` as `•` and `−`.
    pub unicode: bool,
}

/// A symbol as shown to users.
pub fn display_symbol(s: &str, unicode: bool) -> &str {
    match (s, unicode) {
        (".", true) => "•",
        ("-", true) => "−",
        _ => s,
    }
}

pub fn display_word(w: &Word, unicode: bool) -> String {
    w.symbols().iter().map(|s| display_symbol(s.as_str(), unicode)).collect::<Vec<_>>().join(" ")
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn point_node(out: &mut String, name: &str, index: usize, pol: Polarity, vertical: bool) {
    let style = match pol {
        Polarity::Left => "shape=circle, style=filled, fillcolor=black".to_string(),
        Polarity::Right => {
            let turn = if vertical { 180 } else { 270 };
            format!("shape=triangle, orientation={turn}")
        }
    };
    let _ = writeln!(out, "    {name} [{style}, xlabel=\"{index}\"];");
}

/// Deterministic DOT text for `c`.
pub fn render_dot(c: &Cowordism, opts: &RenderOptions) -> String {
    let vertical = opts.orientation == Orientation::Vertical;
    let (s, t) = (c.source(), c.target());
    let mut out = String::from("digraph cowordism {\n");
    let _ = writeln!(out, "  rankdir={};", if vertical { "TB" } else { "LR" });
    out.push_str("  node [label=\"\", width=0.12, height=0.12, fixedsize=true];\n");
    out.push_str("  edge [arrowhead=normal];\n");
    for (name, b, prefix) in [("source", s, "in"), ("target", t, "out")] {
        if b.is_empty() {
            continue;
        }
        let _ = writeln!(out, "  subgraph {name} {{\n    rank=same;");
        for (i, &pol) in b.polarities().iter().enumerate() {
            // source points are flipped in the body, where words run left to right
            let pol = if prefix == "in" { pol.flip() } else { pol };
            point_node(&mut out, &format!("{prefix}{}", i + 1), i + 1, pol, vertical);
        }
        out.push_str("  }\n");
    }
    // keep each rank in boundary order
    for (b, prefix) in [(s, "in"), (t, "out")] {
        if b.len() > 1 {
            let chain: Vec<String> = (1..=b.len()).map(|i| format!("{prefix}{i}")).collect();
            let _ = writeln!(out, "  {} [style=invis, arrowhead=none];", chain.join(" -> "));
        }
    }
    if !s.is_empty() && !t.is_empty() {
        let _ = writeln!(out, "  in1 -> out1 [style=invis, arrowhead=none];");
    }
    let node = |p: usize| -> String {
        if p <= t.len() {
            format!("out{p}")
        } else {
            format!("in{}", t.len() + s.len() + 1 - p)
        }
    };
    for e in c.body().edges() {
        let label = if e.label.is_empty() { "ε".to_string() } else { display_word(&e.label, opts.unicode) };
        let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", node(e.from), node(e.to), escape(&label));
    }
    for (i, w) in c.body().cyclic().iter().enumerate() {
        let _ = writeln!(
            out,
            "  loop{n} [shape=circle, width=0.3, height=0.3];\n  loop{n} -> loop{n} [label=\"{}\"];",
            escape(&display_word(w.word(), opts.unicode)),
            n = i + 1
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category as cat;
    use crate::multiword::{Boundary, CyclicWord, Multiword};

    fn count(text: &str, pat: &str) -> usize {
        text.matches(pat).count()
    }

    #[test]
    fn identity_diagram() {
        let d = render_dot(&cat::identity(&Boundary::standard()), &RenderOptions::default());
        assert_eq!(count(&d, "xlabel="), 4);
        assert_eq!(count(&d, "[label=\"ε\"]"), 2);
        assert_eq!(count(&d, "fillcolor=black"), 2);
        assert!(d.contains("out1 -> in1 [label=\"ε\"]"));
        assert!(d.contains("in2 -> out2 [label=\"ε\"]"));
        assert_eq!(d, render_dot(&cat::identity(&Boundary::standard()), &RenderOptions::default()));
        let v = render_dot(&cat::identity(&Boundary::standard()), &RenderOptions { orientation: Orientation::Vertical, unicode: false });
        assert!(v.contains("rankdir=TB"));
    }

    #[test]
    fn loops_are_drawn_as_cycles() {
        let m = Multiword::new(Boundary::unit(), vec![], vec![CyclicWord::new(Word::parse("b a"))]).unwrap();
        let d = render_dot(&Cowordism::point(m), &RenderOptions::default());
        assert!(d.contains("loop1 -> loop1 [label=\"a b\"]"));
        assert_eq!(count(&d, "xlabel="), 0);
    }

    #[test]
    fn unicode_labels() {
        assert_eq!(display_word(&Word::parse(". + . -"), true), "• + • −");
        assert_eq!(display_word(&Word::parse(". + . -"), false), ". + . -");
    }
}
