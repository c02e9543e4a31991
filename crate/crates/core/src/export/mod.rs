//! Serialization and rendering: the canonical JSON document, Graphviz DOT
//! and static SVG figures. All outputs are byte-deterministic.

mod dot;
mod json;
mod svg;

pub use dot::to_dot;
pub use json::{
    from_json, report_to_json, to_json, CodomainDescriptor, CoveringDocument, DomainDescriptor,
    JsonError, SCHEMA_VERSION,
};
pub use svg::{to_svg, Layout};

use crate::constructions::Covering;
use crate::graph::Role;

const NAMED_COLORS: [&str; 9] = [
    "blue", "red", "green", "yellow", "purple", "navy", "orange", "black", "pink",
];

/// The nine named figure colors followed by as many generated hues as needed.
pub fn default_palette(size: usize) -> Vec<String> {
    let mut out: Vec<String> = NAMED_COLORS
        .iter()
        .take(size)
        .map(|c| c.to_string())
        .collect();
    for k in NAMED_COLORS.len()..size {
        // golden-angle hue walk, fixed saturation and lightness
        let hue = (k as f64 * 137.507_764_05) % 360.0;
        out.push(hsl_to_hex(hue, 0.65, 0.45));
    }
    out
}

fn hsl_to_hex(hue: f64, saturation: f64, lightness: f64) -> String {
    let chroma = (1.0 - (2.0 * lightness - 1.0).abs()) * saturation;
    let sector = hue / 60.0;
    let x = chroma * (1.0 - (sector % 2.0 - 1.0).abs());
    let (r, g, b) = match sector as u32 {
        0 => (chroma, x, 0.0),
        1 => (x, chroma, 0.0),
        2 => (0.0, chroma, x),
        3 => (0.0, x, chroma),
        4 => (x, 0.0, chroma),
        _ => (chroma, 0.0, x),
    };
    let m = lightness - chroma / 2.0;
    let byte = |c: f64| ((c + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    format!("#{:02x}{:02x}{:02x}", byte(r), byte(g), byte(b))
}

/// One drawn arc: a domain edge carried onto the codomain, directed by the
/// codomain orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct DrawnArc {
    pub tail: usize,
    pub head: usize,
    pub copy: usize,
    pub is_ray: bool,
}

/// Domain edges in id order whose image is a codomain edge.
pub(crate) fn drawn_arcs(c: &Covering) -> Vec<DrawnArc> {
    let forest = c.domain();
    let grid = c.codomain().graph();
    let orientation = c.codomain_orientation();
    forest
        .graph()
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let e = grid.edge_id(c.image(u), c.image(v))?;
            let (tail, head) = orientation.arc(e);
            let is_ray = matches!(forest.role_of(u), Role::Pendant(_))
                || matches!(forest.role_of(v), Role::Pendant(_));
            Some(DrawnArc {
                tail,
                head,
                copy: forest.copy_of(u),
                is_ray,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_extends_deterministically() {
        let small = default_palette(4);
        assert_eq!(small, vec!["blue", "red", "green", "yellow"]);
        let big = default_palette(40);
        assert_eq!(big.len(), 40);
        assert_eq!(&big[..9], &NAMED_COLORS.map(String::from)[..]);
        assert_eq!(big, default_palette(40));
        let mut distinct = big.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 40);
        assert!(big[9..].iter().all(|c| c.len() == 7 && c.starts_with('#')));
    }
}
