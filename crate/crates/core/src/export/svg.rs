use std::f64::consts::PI;
use std::fmt::Write;
use std::str::FromStr;

use super::{default_palette, drawn_arcs};
use crate::constructions::Covering;
use crate::torus::{Step, TorusGrid};

const VERTEX_RADIUS: f64 = 9.0;
const FLAT_CELL: f64 = 80.0;
const FLAT_MARGIN: f64 = 70.0;
const RING_BASE: f64 = 60.0;
const RING_GAP: f64 = 60.0;
const STUB: f64 = 0.55;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Square lattice, opposite sides identified; wrapping arcs are drawn as
    /// labelled stubs leaving one side and entering the other.
    Flat,
    /// Concentric polygons, one per `x`, with `y` running clockwise.
    Annular,
}

impl FromStr for Layout {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "flat" => Ok(Layout::Flat),
            "annular" => Ok(Layout::Annular),
            other => Err(format!(
                "unknown layout `{other}`, expected flat or annular"
            )),
        }
    }
}

struct Geometry<'a> {
    grid: &'a TorusGrid,
    layout: Layout,
    size: (f64, f64),
}

impl<'a> Geometry<'a> {
    fn new(grid: &'a TorusGrid, layout: Layout) -> Self {
        let size = match layout {
            Layout::Flat => (
                2.0 * FLAT_MARGIN + (grid.p() - 1) as f64 * FLAT_CELL,
                2.0 * FLAT_MARGIN + (grid.q() - 1) as f64 * FLAT_CELL + 30.0,
            ),
            Layout::Annular => {
                let side = 2.0 * (RING_BASE + grid.p() as f64 * RING_GAP) + 20.0;
                (side, side + 30.0)
            }
        };
        Geometry { grid, layout, size }
    }

    fn center(&self) -> (f64, f64) {
        (self.size.0 / 2.0, (self.size.1 + 30.0) / 2.0)
    }

    fn angle(&self, y: usize) -> f64 {
        2.0 * PI * y as f64 / self.grid.q() as f64
    }

    fn position(&self, v: usize) -> (f64, f64) {
        let (x, y) = self.grid.coords(v);
        match self.layout {
            Layout::Flat => (
                FLAT_MARGIN + x as f64 * FLAT_CELL,
                30.0 + FLAT_MARGIN + (self.grid.q() - 1 - y) as f64 * FLAT_CELL,
            ),
            Layout::Annular => {
                let (cx, cy) = self.center();
                let r = RING_BASE + x as f64 * RING_GAP;
                let t = self.angle(y);
                (cx + r * t.sin(), cy - r * t.cos())
            }
        }
    }

    /// Screen direction of a grid step taken at `v`.
    fn direction(&self, v: usize, step: Step) -> (f64, f64) {
        let (dx, dy) = step.vector();
        match self.layout {
            Layout::Flat => (dx as f64, -dy as f64),
            Layout::Annular => {
                let t = self.angle(self.grid.coords(v).1);
                let radial = (t.sin(), -t.cos());
                let tangent = (t.cos(), t.sin());
                (
                    dx as f64 * radial.0 + dy as f64 * tangent.0,
                    dx as f64 * radial.1 + dy as f64 * tangent.1,
                )
            }
        }
    }

    /// Whether the arc from `a` by `step` crosses the identified boundary.
    fn wraps(&self, a: usize, step: Step) -> bool {
        let (x, y) = self.grid.coords(a);
        let (dx, dy) = step.vector();
        let nx = x as i64 + dx;
        let ny = y as i64 + dy;
        let x_wraps = nx < 0 || nx >= self.grid.p() as i64;
        let y_wraps = ny < 0 || ny >= self.grid.q() as i64;
        match self.layout {
            Layout::Flat => x_wraps || y_wraps,
            Layout::Annular => x_wraps,
        }
    }

    fn stub_length(&self) -> f64 {
        match self.layout {
            Layout::Flat => STUB * FLAT_CELL,
            Layout::Annular => STUB * RING_GAP,
        }
    }
}

fn shorten(
    from: (f64, f64),
    to: (f64, f64),
    by_start: f64,
    by_end: f64,
) -> ((f64, f64), (f64, f64)) {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    let len = (dx * dx + dy * dy).sqrt().max(1e-9);
    let (ux, uy) = (dx / len, dy / len);
    (
        (from.0 + ux * by_start, from.1 + uy * by_start),
        (to.0 - ux * by_end, to.1 - uy * by_end),
    )
}

fn line(
    out: &mut String,
    from: (f64, f64),
    to: (f64, f64),
    color: &str,
    marker: Option<usize>,
    ray: bool,
) {
    let style = if ray {
        "stroke-width=\"2\" stroke-dasharray=\"6 4\" stroke-opacity=\"0.6\""
    } else {
        "stroke-width=\"3\""
    };
    let marker = marker.map_or(String::new(), |m| format!(" marker-end=\"url(#arrow{m})\""));
    writeln!(
        out,
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{color}\" {style}{marker}/>",
        from.0, from.1, to.0, to.1
    )
    .unwrap();
}

fn label(out: &mut String, at: (f64, f64), text: &str) {
    writeln!(
        out,
        "  <text class=\"wrap\" x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\" text-anchor=\"middle\">{text}</text>",
        at.0, at.1
    )
    .unwrap();
}

/// Static SVG 1.1 figure of the covering on the chosen layout. Arrowheads
/// follow the codomain orientation, colors follow the copy index, rays are
/// dashed and translucent.
pub fn to_svg(c: &Covering, layout: Layout) -> String {
    let grid = c.codomain();
    let geometry = Geometry::new(grid, layout);
    // a lone sunlet is drawn with an orange cycle and blue rays
    let single = c.domain().copies() == 1;
    let palette = if single {
        vec!["orange".to_string(), "blue".to_string()]
    } else {
        default_palette(c.domain().copies())
    };
    let (width, height) = geometry.size;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    )
    .unwrap();
    out.push_str("  <defs>\n");
    for (k, color) in palette.iter().enumerate() {
        writeln!(
            out,
            "    <marker id=\"arrow{k}\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"{color}\"/></marker>"
        )
        .unwrap();
    }
    out.push_str("  </defs>\n");
    writeln!(
        out,
        "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>"
    )
    .unwrap();
    writeln!(
        out,
        "  <text x=\"10\" y=\"20\" font-size=\"14\">{} n={}: {} x S1_{} onto C{} x C{}</text>",
        c.theorem(),
        c.n(),
        c.domain().copies(),
        c.domain().p(),
        grid.p(),
        grid.q()
    )
    .unwrap();

    let stub = geometry.stub_length();
    let mut wrap_count = 0;
    for arc in drawn_arcs(c) {
        let swatch = if single {
            usize::from(arc.is_ray)
        } else {
            arc.copy
        };
        let color = palette[swatch].as_str();
        let Some(step) = grid.step_between(arc.tail, arc.head) else {
            continue;
        };
        let (a, b) = (geometry.position(arc.tail), geometry.position(arc.head));
        if geometry.wraps(arc.tail, step) {
            let da = geometry.direction(arc.tail, step);
            let db = geometry.direction(arc.head, step);
            let out_end = (a.0 + da.0 * stub, a.1 + da.1 * stub);
            let in_start = (b.0 - db.0 * stub, b.1 - db.1 * stub);
            let (s, e) = shorten(a, out_end, VERTEX_RADIUS, 0.0);
            line(&mut out, s, e, color, None, arc.is_ray);
            let (s, e) = shorten(in_start, b, 0.0, VERTEX_RADIUS);
            line(&mut out, s, e, color, Some(swatch), arc.is_ray);
            let name = format!("w{wrap_count}");
            label(
                &mut out,
                (out_end.0 + da.0 * 8.0, out_end.1 + da.1 * 8.0 + 3.0),
                &name,
            );
            label(
                &mut out,
                (in_start.0 - db.0 * 8.0, in_start.1 - db.1 * 8.0 + 3.0),
                &name,
            );
            wrap_count += 1;
        } else {
            let (s, e) = shorten(a, b, VERTEX_RADIUS, VERTEX_RADIUS);
            line(&mut out, s, e, color, Some(swatch), arc.is_ray);
        }
    }

    for v in 0..grid.graph().order() {
        let (px, py) = geometry.position(v);
        let (x, y) = grid.coords(v);
        writeln!(
            out,
            "  <circle class=\"vertex\" cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"{VERTEX_RADIUS}\" fill=\"white\" stroke=\"black\"/>"
        )
        .unwrap();
        writeln!(
            out,
            "  <text class=\"coord\" x=\"{px:.2}\" y=\"{:.2}\" font-size=\"7\" text-anchor=\"middle\">{x},{y}</text>",
            py + 2.5
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{t1_build, t3_build};

    #[test]
    fn one_glyph_per_vertex() {
        for layout in [Layout::Flat, Layout::Annular] {
            let svg = to_svg(&t3_build(3).unwrap(), layout);
            assert_eq!(svg.matches("class=\"vertex\"").count(), 36);
            let svg = to_svg(&t1_build(4).unwrap(), layout);
            assert_eq!(svg.matches("class=\"vertex\"").count(), 16);
        }
    }

    #[test]
    fn every_arc_gets_an_arrowhead() {
        let c = t3_build(2).unwrap();
        for layout in [Layout::Flat, Layout::Annular] {
            let svg = to_svg(&c, layout);
            assert_eq!(svg.matches("marker-end=").count(), 32);
        }
    }

    #[test]
    fn flat_wraps_are_labelled_in_pairs() {
        // C_4 □ C_4 has 4 wrapping edges per direction
        let svg = to_svg(&t3_build(2).unwrap(), Layout::Flat);
        assert_eq!(svg.matches("class=\"wrap\"").count(), 16);
        assert!(svg.contains(">w7<"));
        assert!(!svg.contains(">w8<"));
        // annular layout only wraps between outer and inner polygon
        let svg = to_svg(&t3_build(2).unwrap(), Layout::Annular);
        assert_eq!(svg.matches("class=\"wrap\"").count(), 8);
    }

    #[test]
    fn single_sunlet_colors() {
        let svg = to_svg(&t1_build(3).unwrap(), Layout::Annular);
        assert!(svg.contains("stroke=\"orange\" stroke-width=\"3\""));
        assert!(svg.contains("stroke=\"blue\" stroke-width=\"2\" stroke-dasharray"));
    }

    #[test]
    fn layout_parsing() {
        assert_eq!("flat".parse::<Layout>(), Ok(Layout::Flat));
        assert_eq!("annular".parse::<Layout>(), Ok(Layout::Annular));
        assert!("spiral".parse::<Layout>().is_err());
    }
}
