use std::fmt::Write;

use super::drawn_arcs;
use crate::constructions::Covering;
use crate::error::{Error, Result};

/// Graphviz digraph of the codomain arcs, one color per sunlet copy. Cycle
/// images are solid, ray images dashed. Nodes carry `pos` attributes so
/// `neato -n` reproduces the flat grid layout.
pub fn to_dot(c: &Covering, palette: &[String]) -> Result<String> {
    let copies = c.domain().copies();
    if copies > palette.len() {
        return Err(Error::PaletteExhausted {
            required: copies,
            available: palette.len(),
        });
    }
    let grid = c.codomain();
    let mut out = String::new();
    writeln!(out, "digraph covering {{").unwrap();
    writeln!(
        out,
        "  label=\"{} n={}: {}x S1_{} onto C{} x C{}\";",
        c.theorem(),
        c.n(),
        copies,
        c.domain().p(),
        grid.p(),
        grid.q()
    )
    .unwrap();
    writeln!(
        out,
        "  node [shape=circle, fontsize=10, width=0.4, fixedsize=true];"
    )
    .unwrap();
    for v in 0..grid.graph().order() {
        let (x, y) = grid.coords(v);
        writeln!(
            out,
            "  v{v} [label=\"{x},{y}\", pos=\"{},{}!\"];",
            x * 72,
            y * 72
        )
        .unwrap();
    }
    for arc in drawn_arcs(c) {
        let style = if arc.is_ray { "dashed" } else { "solid" };
        writeln!(
            out,
            "  v{} -> v{} [color=\"{}\", style={}];",
            arc.tail, arc.head, palette[arc.copy], style
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
