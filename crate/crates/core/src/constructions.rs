//! Closed-form builders for the three sunlet coverings of toroidal grids.
//!
//! * [`t1_build`]: one sunlet `S¹_{n²}` onto `C_n □ C_n`, its cycle mapped to
//!   a Hamiltonian cycle of the grid (standard orientation).
//! * [`t2_build`]: `n` copies of `S¹_{4n}` onto `C_2n □ C_2n`, cycles mapped
//!   to disjoint closed staircases (standard orientation).
//! * [`t3_build`]: `n²` copies of `S¹_4` onto `C_2n □ C_2n`, cycles mapped to
//!   the odd squares (raster orientation).
//!
//! In every case the domain carries the forward FSM orientation and the ray
//! at a cycle vertex `w` is sent onto the codomain arc entering `φ(w)` that no
//! cycle image uses.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Orientation, Role, Sense, SunletForest};
use crate::torus::{make_torus, TorusGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    T1,
    T2,
    T3,
}

impl Theorem {
    /// Smallest `n` the construction is defined for.
    pub fn min_n(self) -> usize {
        match self {
            Theorem::T1 => 3,
            Theorem::T2 | Theorem::T3 => 2,
        }
    }

    pub fn build(self, n: usize) -> Result<Covering> {
        match self {
            Theorem::T1 => t1_build(n),
            Theorem::T2 => t2_build(n),
            Theorem::T3 => t3_build(n),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theorem::T1 => "T1",
            Theorem::T2 => "T2",
            Theorem::T3 => "T3",
        };
        f.write_str(s)
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "1" | "T1" => Ok(Theorem::T1),
            "2" | "T2" => Ok(Theorem::T2),
            "3" | "T3" => Ok(Theorem::T3),
            other => Err(format!("unknown theorem `{other}`, expected 1, 2 or 3")),
        }
    }
}

/// A vertex map from a sunlet forest onto a toroidal grid, together with the
/// orientations of both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    theorem: Theorem,
    n: usize,
    domain: SunletForest,
    codomain: TorusGrid,
    vertex_map: Vec<usize>,
    domain_orientation: Orientation,
    codomain_orientation: Orientation,
}

impl Covering {
    /// Assembles a covering from raw parts. Only shapes are checked (map
    /// length, ranges, orientation base graphs); the covering properties
    /// themselves are left to the checkers in [`crate::verify`].
    pub fn from_parts(
        theorem: Theorem,
        n: usize,
        domain: SunletForest,
        codomain: TorusGrid,
        vertex_map: Vec<usize>,
        domain_orientation: Orientation,
        codomain_orientation: Orientation,
    ) -> Result<Self> {
        if vertex_map.len() != domain.graph().order() {
            return Err(Error::GraphMismatch("vertex map"));
        }
        let order = codomain.graph().order();
        if let Some((index, &image)) = vertex_map.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::ImageOutOfRange {
                index,
                image,
                order,
            });
        }
        if domain_orientation.graph() != domain.graph() {
            return Err(Error::GraphMismatch("domain orientation"));
        }
        if codomain_orientation.graph() != codomain.graph() {
            return Err(Error::GraphMismatch("codomain orientation"));
        }
        Ok(Covering {
            theorem,
            n,
            domain,
            codomain,
            vertex_map,
            domain_orientation,
            codomain_orientation,
        })
    }

    pub fn theorem(&self) -> Theorem {
        self.theorem
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> &SunletForest {
        &self.domain
    }

    pub fn codomain(&self) -> &TorusGrid {
        &self.codomain
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn domain_orientation(&self) -> &Orientation {
        &self.domain_orientation
    }

    pub fn codomain_orientation(&self) -> &Orientation {
        &self.codomain_orientation
    }

    /// Image of a domain vertex.
    pub fn image(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    /// Grid coordinates of the image of each cycle vertex of `copy`, in
    /// cycle order.
    pub fn cycle_image(&self, copy: usize) -> Vec<(usize, usize)> {
        (0..self.domain.p())
            .map(|i| {
                let v = self.domain.vertex(copy, Role::Cycle(i));
                self.codomain.coords(self.vertex_map[v])
            })
            .collect()
    }

    /// Same covering with one vertex-map entry replaced.
    pub fn with_image(&self, v: usize, image: usize) -> Covering {
        let mut out = self.clone();
        out.vertex_map[v] = image;
        out
    }

    pub fn with_codomain_orientation(&self, orientation: Orientation) -> Covering {
        let mut out = self.clone();
        out.codomain_orientation = orientation;
        out
    }
}

/// How the Hamiltonian cycle of the one-sunlet covering passes through a
/// grid vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// Entered and left along horizontal edges.
    HH,
    /// Entered horizontally, left vertically.
    HV,
    /// Entered vertically, left horizontally.
    VH,
}

fn require_n(theorem: Theorem, n: usize) -> Result<()> {
    if n < theorem.min_n() {
        return Err(Error::TooSmall {
            what: "n",
            min: theorem.min_n(),
            got: n,
        });
    }
    Ok(())
}

/// Position of the `k`-th vertex of the Hamiltonian cycle of `C_n □ C_n`.
///
/// Row `x` is walked along `+y` for `n-1` horizontal steps starting at
/// `y = -x mod n`, then one vertical step leads to row `x+1`.
pub fn t1_hamiltonian_position(k: usize, n: usize) -> Result<(usize, usize)> {
    require_n(Theorem::T1, n)?;
    if k >= n * n {
        return Err(Error::OutOfRange {
            what: "k",
            got: k,
            bound: n * n,
        });
    }
    let x = k / n;
    Ok((x, (k - x) % n))
}

pub fn t1_vertex_class(x: usize, y: usize, n: usize) -> VertexClass {
    let (x, y) = (x % n, y % n);
    if y == (2 * n - 1 - x) % n {
        VertexClass::HV
    } else if y == (n - x) % n {
        VertexClass::VH
    } else {
        VertexClass::HH
    }
}

/// One sunlet `S¹_{n²}` onto `C_n □ C_n` with the standard orientation.
pub fn t1_build(n: usize) -> Result<Covering> {
    require_n(Theorem::T1, n)?;
    let domain = disjoint_union(1, n * n)?;
    let codomain = make_torus(n, n)?;
    let mut vertex_map = vec![0; domain.graph().order()];
    for k in 0..n * n {
        let (x, y) = t1_hamiltonian_position(k, n)?;
        let (x, y) = (x as i64, y as i64);
        vertex_map[domain.vertex(0, Role::Cycle(k))] = codomain.vertex(x, y);
        let ray_tail = match t1_vertex_class(x as usize, y as usize, n) {
            VertexClass::HH | VertexClass::HV => codomain.vertex(x - 1, y),
            VertexClass::VH => codomain.vertex(x, y - 1),
        };
        vertex_map[domain.vertex(0, Role::Pendant(k))] = ray_tail;
    }
    let domain_orientation = domain.fsm_orientation(Sense::Forward);
    let codomain_orientation = codomain.standard_orientation();
    Covering::from_parts(
        Theorem::T1,
        n,
        domain,
        codomain,
        vertex_map,
        domain_orientation,
        codomain_orientation,
    )
}

/// Closed staircase `i` of `C_2n □ C_2n`: entry `j` is
/// `(2i + ⌈j/2⌉, ⌊j/2⌋)` mod `2n`, alternating `+x` and `+y` steps.
pub fn t2_staircase(i: usize, n: usize) -> Result<Vec<(usize, usize)>> {
    require_n(Theorem::T2, n)?;
    if i >= n {
        return Err(Error::OutOfRange {
            what: "staircase index",
            got: i,
            bound: n,
        });
    }
    let side = 2 * n;
    Ok((0..4 * n)
        .map(|j| ((2 * i + j.div_ceil(2)) % side, j / 2))
        .collect())
}

/// Sends each pendant to the tail of the unique codomain arc entering its
/// cycle vertex's image that no cycle image uses. The cycle part of
/// `vertex_map` must already be filled in.
fn assign_rays(
    domain: &SunletForest,
    codomain: &TorusGrid,
    orientation: &Orientation,
    vertex_map: &mut [usize],
) {
    let grid = codomain.graph();
    let p = domain.p();
    let mut cycle_edges = HashSet::new();
    for copy in 0..domain.copies() {
        for i in 0..p {
            let a = vertex_map[domain.vertex(copy, Role::Cycle(i))];
            let b = vertex_map[domain.vertex(copy, Role::Cycle((i + 1) % p))];
            cycle_edges.insert(grid.edge_id(a, b).expect("cycle image is a grid cycle"));
        }
    }
    for copy in 0..domain.copies() {
        for i in 0..p {
            let head = vertex_map[domain.vertex(copy, Role::Cycle(i))];
            let spare: Vec<usize> = orientation
                .in_neighbors(head)
                .into_iter()
                .filter(|&t| !cycle_edges.contains(&grid.edge_id(t, head).expect("arc is an edge")))
                .collect();
            assert_eq!(
                spare.len(),
                1,
                "exactly one free in-arc at every cycle image"
            );
            vertex_map[domain.vertex(copy, Role::Pendant(i))] = spare[0];
        }
    }
}

/// `n` copies of `S¹_{4n}` onto `C_2n □ C_2n` with the standard orientation.
pub fn t2_build(n: usize) -> Result<Covering> {
    require_n(Theorem::T2, n)?;
    let domain = disjoint_union(n, 4 * n)?;
    let codomain = make_torus(2 * n, 2 * n)?;
    let orientation = codomain.standard_orientation();
    let mut vertex_map = vec![0; domain.graph().order()];
    for copy in 0..n {
        for (j, (x, y)) in t2_staircase(copy, n)?.into_iter().enumerate() {
            vertex_map[domain.vertex(copy, Role::Cycle(j))] = codomain.vertex(x as i64, y as i64);
        }
    }
    assign_rays(&domain, &codomain, &orientation, &mut vertex_map);
    let domain_orientation = domain.fsm_orientation(Sense::Forward);
    Covering::from_parts(
        Theorem::T2,
        n,
        domain,
        codomain,
        vertex_map,
        domain_orientation,
        orientation,
    )
}

/// `n²` copies of `S¹_4` onto `C_2n □ C_2n` with the raster orientation.
/// Copy `i·n + j` goes to odd square `(i, j)`.
pub fn t3_build(n: usize) -> Result<Covering> {
    require_n(Theorem::T3, n)?;
    let domain = disjoint_union(n * n, 4)?;
    let codomain = make_torus(2 * n, 2 * n)?;
    let orientation = codomain.raster_orientation()?;
    let mut vertex_map = vec![0; domain.graph().order()];
    for (copy, square) in codomain.odd_squares()?.into_iter().enumerate() {
        for (k, &corner) in square.corners.iter().enumerate() {
            vertex_map[domain.vertex(copy, Role::Cycle(k))] = corner;
        }
    }
    assign_rays(&domain, &codomain, &orientation, &mut vertex_map);
    let domain_orientation = domain.fsm_orientation(Sense::Forward);
    Covering::from_parts(
        Theorem::T3,
        n,
        domain,
        codomain,
        vertex_map,
        domain_orientation,
        orientation,
    )
}
