//! Toroidal grids `C_p □ C_q`.
//!
//! A vertex is a coordinate pair `(x, y)`: `x` picks one of the `p`
//! concentric `q`-gons, `y` is the position on that polygon. The vertex id is
//! `x·q + y`, the same codec [`cartesian_product`] uses for `C_p □ C_q`.
//! Edges joining consecutive polygons (same `y`) are vertical, edges along a
//! polygon (same `x`) are horizontal.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, make_cycle, Graph, Orientation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusGrid {
    p: usize,
    q: usize,
    graph: Arc<Graph>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Horizontal,
    Vertical,
}

/// Directed unit step on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    PlusX,
    MinusX,
    PlusY,
    MinusY,
}

impl Step {
    /// Unit vector in the `(x, y)` plane.
    pub fn vector(self) -> (i64, i64) {
        match self {
            Step::PlusX => (1, 0),
            Step::MinusX => (-1, 0),
            Step::PlusY => (0, 1),
            Step::MinusY => (0, -1),
        }
    }
}

impl TorusGrid {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Vertex id of `(x, y)`, coordinates taken mod `p` and `q`.
    pub fn vertex(&self, x: i64, y: i64) -> usize {
        let x = x.rem_euclid(self.p as i64) as usize;
        let y = y.rem_euclid(self.q as i64) as usize;
        x * self.q + y
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.q, v % self.q)
    }

    /// Vertex reached from `v` by one step.
    pub fn step(&self, v: usize, step: Step) -> usize {
        let (x, y) = self.coords(v);
        let (dx, dy) = step.vector();
        self.vertex(x as i64 + dx, y as i64 + dy)
    }

    /// The step leading from `from` to its neighbour `to`.
    pub fn step_between(&self, from: usize, to: usize) -> Option<Step> {
        [Step::PlusX, Step::MinusX, Step::PlusY, Step::MinusY]
            .into_iter()
            .find(|&s| self.step(from, s) == to)
            .filter(|_| self.graph.has_edge(from, to))
    }

    pub fn edge_class(&self, u: usize, v: usize) -> Result<EdgeClass> {
        if u >= self.graph.order() || v >= self.graph.order() || !self.graph.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        if self.coords(u).0 == self.coords(v).0 {
            Ok(EdgeClass::Horizontal)
        } else {
            Ok(EdgeClass::Vertical)
        }
    }

    /// Vertical edges along `±x`, horizontal edges along `±y`.
    fn uniform_orientation(&self, x_positive: bool, y_positive: bool) -> Orientation {
        let x_step = if x_positive {
            Step::PlusX
        } else {
            Step::MinusX
        };
        let y_step = if y_positive {
            Step::PlusY
        } else {
            Step::MinusY
        };
        Orientation::from_rule(Arc::clone(&self.graph), |u, v| {
            let class = self.edge_class(u, v).expect("edge of the grid");
            let step = match class {
                EdgeClass::Vertical => x_step,
                EdgeClass::Horizontal => y_step,
            };
            self.step(u, step) == v
        })
    }

    /// Every edge directed toward increasing `x` or increasing `y`.
    pub fn standard_orientation(&self) -> Orientation {
        self.uniform_orientation(true, true)
    }

    /// The four orientations with all vertical edges along `±x` and all
    /// horizontal edges along `±y`, each with a coordinate reflection that
    /// carries it onto the standard orientation.
    pub fn canonical_orientations(&self) -> Vec<CanonicalOrientation> {
        let mut out = Vec::with_capacity(4);
        for x_positive in [true, false] {
            for y_positive in [true, false] {
                let witness = (0..self.graph.order())
                    .map(|v| {
                        let (x, y) = self.coords(v);
                        let x = if x_positive { x as i64 } else { -(x as i64) };
                        let y = if y_positive { y as i64 } else { -(y as i64) };
                        self.vertex(x, y)
                    })
                    .collect();
                out.push(CanonicalOrientation {
                    x_positive,
                    y_positive,
                    orientation: self.uniform_orientation(x_positive, y_positive),
                    witness,
                });
            }
        }
        out
    }

    /// Raster orientation of an even-by-even grid. Row `x` (fixed `x`) runs
    /// `+y` when `x` is odd and `-y` when even; column `y` runs `-x` when `y`
    /// is odd and `+x` when even. Under this rule every odd square is a
    /// directed 4-cycle.
    pub fn raster_orientation(&self) -> Result<Orientation> {
        for (what, got) in [("p", self.p), ("q", self.q)] {
            if got % 2 != 0 {
                return Err(Error::NotEven { what, got });
            }
        }
        Ok(Orientation::from_rule(Arc::clone(&self.graph), |u, v| {
            let (x, y) = self.coords(u);
            let step = match self.edge_class(u, v).expect("edge of the grid") {
                EdgeClass::Horizontal if x % 2 == 1 => Step::PlusY,
                EdgeClass::Horizontal => Step::MinusY,
                EdgeClass::Vertical if y % 2 == 1 => Step::MinusX,
                EdgeClass::Vertical => Step::PlusX,
            };
            self.step(u, step) == v
        }))
    }

    fn half_side(&self) -> Result<usize> {
        if self.p != self.q {
            return Err(Error::NotSquare {
                p: self.p,
                q: self.q,
            });
        }
        if !self.p.is_multiple_of(2) {
            return Err(Error::NotEven {
                what: "p",
                got: self.p,
            });
        }
        Ok(self.p / 2)
    }

    /// Odd square `(i, j)` of `C_2n □ C_2n`.
    pub fn odd_square(&self, i: usize, j: usize) -> Result<OddSquare> {
        let n = self.half_side()?;
        for (what, got) in [("square row", i), ("square column", j)] {
            if got >= n {
                return Err(Error::OutOfRange {
                    what,
                    got,
                    bound: n,
                });
            }
        }
        let (x0, y0) = (2 * i as i64 + 1, 2 * j as i64 + 1);
        // (x0,y0) -> (x0,y0+1) -> (x0+1,y0+1) -> (x0+1,y0) is the raster dicycle
        let mut corners = [
            self.vertex(x0, y0),
            self.vertex(x0, y0 + 1),
            self.vertex(x0 + 1, y0 + 1),
            self.vertex(x0 + 1, y0),
        ];
        let start = (0..4)
            .min_by_key(|&k| self.coords(corners[k]))
            .expect("four corners");
        corners.rotate_left(start);
        Ok(OddSquare {
            block: (i, j),
            corners,
        })
    }

    /// All `n²` odd squares of `C_2n □ C_2n`, block `(i, j)` at index `i·n+j`.
    pub fn odd_squares(&self) -> Result<Vec<OddSquare>> {
        let n = self.half_side()?;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(self.odd_square(i, j)?);
            }
        }
        Ok(out)
    }
}

/// One of the four sign choices of a canonical orientation together with a
/// witness isomorphism onto the standard orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrientation {
    pub x_positive: bool,
    pub y_positive: bool,
    pub orientation: Orientation,
    /// `witness[v]` is the image of vertex `v`.
    pub witness: Vec<usize>,
}

/// A 4-cycle spanned by odd-indexed edges of both factors. Edge `k` of
/// `C_2n` is `{k, k+1}`, so block `(i, j)` has corners
/// `{2i+1, 2i+2} × {2j+1, 2j+2}` (mod `2n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSquare {
    pub block: (usize, usize),
    /// Corners in raster dicycle order, starting at the corner with the
    /// smallest coordinates.
    pub corners: [usize; 4],
}

pub fn make_torus(p: usize, q: usize) -> Result<TorusGrid> {
    let graph = cartesian_product(&make_cycle(p)?, &make_cycle(q)?)?;
    Ok(TorusGrid {
        p,
        q,
        graph: Arc::new(graph),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let t = make_torus(4, 4).unwrap();
        assert_eq!((t.graph().order(), t.graph().size()), (16, 32));
        let t = make_torus(3, 3).unwrap();
        assert_eq!((t.graph().order(), t.graph().size()), (9, 18));
        let t = make_torus(3, 4).unwrap();
        assert_eq!((t.graph().order(), t.graph().size()), (12, 24));
        assert!(make_torus(2, 4).is_err());
        assert!(make_torus(4, 1).is_err());
    }

    #[test]
    fn codec_wraps() {
        let t = make_torus(3, 4).unwrap();
        assert_eq!(t.vertex(-1, 0), t.vertex(2, 0));
        assert_eq!(t.vertex(0, 4), t.vertex(0, 0));
        assert_eq!(t.coords(t.vertex(2, 3)), (2, 3));
    }

    #[test]
    fn edge_classes() {
        let t = make_torus(5, 4).unwrap();
        assert_eq!(
            t.edge_class(t.vertex(0, 0), t.vertex(1, 0)),
            Ok(EdgeClass::Vertical)
        );
        assert_eq!(
            t.edge_class(t.vertex(0, 0), t.vertex(0, 1)),
            Ok(EdgeClass::Horizontal)
        );
        assert_eq!(
            t.edge_class(t.vertex(0, 0), t.vertex(0, 3)),
            Ok(EdgeClass::Horizontal)
        );
        assert_eq!(
            t.edge_class(t.vertex(4, 2), t.vertex(0, 2)),
            Ok(EdgeClass::Vertical)
        );
        assert!(t.edge_class(t.vertex(0, 0), t.vertex(1, 1)).is_err());
        assert!(t.edge_class(0, 99).is_err());
    }

    #[test]
    fn two_of_each_class_per_vertex() {
        let t = make_torus(3, 5).unwrap();
        for v in 0..t.graph().order() {
            let vertical = t
                .graph()
                .neighbors(v)
                .iter()
                .filter(|&&w| t.edge_class(v, w) == Ok(EdgeClass::Vertical))
                .count();
            assert_eq!(vertical, 2);
            assert_eq!(t.graph().degree(v), 4);
        }
    }

    #[test]
    fn standard_orientation_arcs() {
        let t = make_torus(4, 5).unwrap();
        let o = t.standard_orientation();
        assert!(o.has_arc(t.vertex(0, 0), t.vertex(1, 0)));
        assert!(o.has_arc(t.vertex(0, 4), t.vertex(0, 0)));
        assert!(o.has_arc(t.vertex(3, 2), t.vertex(0, 2)));
    }

    #[test]
    fn raster_arcs_on_4x4() {
        let t = make_torus(4, 4).unwrap();
        let r = t.raster_orientation().unwrap();
        assert!(r.has_arc(t.vertex(1, 1), t.vertex(1, 2)));
        assert!(r.has_arc(t.vertex(2, 1), t.vertex(1, 1)));
        assert!(make_torus(3, 4).unwrap().raster_orientation().is_err());
    }

    #[test]
    fn odd_squares_on_4x4() {
        let t = make_torus(4, 4).unwrap();
        let squares = t.odd_squares().unwrap();
        assert_eq!(squares.len(), 4);
        let mut corners: Vec<(usize, usize)> =
            squares[0].corners.iter().map(|&v| t.coords(v)).collect();
        assert_eq!(corners, vec![(1, 1), (1, 2), (2, 2), (2, 1)]);
        corners.sort();
        assert_eq!(corners, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
        // block (1, 1) wraps to coordinate 0 and starts there
        let wrapped: Vec<(usize, usize)> =
            squares[3].corners.iter().map(|&v| t.coords(v)).collect();
        assert_eq!(wrapped, vec![(0, 0), (0, 3), (3, 3), (3, 0)]);
    }

    #[test]
    fn odd_squares_reject_bad_grids() {
        assert_eq!(
            make_torus(4, 6).unwrap().odd_squares(),
            Err(Error::NotSquare { p: 4, q: 6 })
        );
        assert!(make_torus(5, 5).unwrap().odd_squares().is_err());
        assert!(make_torus(4, 4).unwrap().odd_square(2, 0).is_err());
        assert_eq!(make_torus(6, 6).unwrap().odd_squares().unwrap().len(), 9);
    }

    #[test]
    fn steps() {
        let t = make_torus(4, 4).unwrap();
        let v = t.vertex(0, 0);
        assert_eq!(t.step_between(v, t.vertex(3, 0)), Some(Step::MinusX));
        assert_eq!(t.step_between(v, t.vertex(0, 1)), Some(Step::PlusY));
        assert_eq!(t.step_between(v, t.vertex(2, 0)), None);
    }
}
