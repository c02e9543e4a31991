//! Brute-force and literal-expansion oracles. Nothing here calls into
//! [`crate::constructions`]; the sequences are re-derived by walking the
//! grid step by step and the searches run straight off the definitions.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{is_sunlet, Graph, Orientation};
use crate::torus::TorusGrid;

/// Largest edge count [`enumerate_fsm_orientations`] accepts by default.
pub const FSM_EDGE_BOUND: usize = 24;
/// Largest edge count [`brute_force_decompositions`] accepts by default.
pub const DECOMPOSITION_EDGE_BOUND: usize = 40;

/// The Hamiltonian cycle of `C_n □ C_n` built by walking it: from the start
/// of each row take `n-1` steps along `+y`, then one step along `+x` onto the
/// next row. Row 0 starts at `(0, 0)`.
pub fn t1_expand_h(n: usize) -> Result<Vec<(usize, usize)>> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "n",
            min: 3,
            got: n,
        });
    }
    let mut walk = Vec::with_capacity(n * n);
    let (mut x, mut y) = (0, 0);
    for _row in 0..n {
        walk.push((x, y));
        for _ in 0..n - 1 {
            y = (y + 1) % n;
            walk.push((x, y));
        }
        x = (x + 1) % n;
    }
    Ok(walk)
}

/// Staircase `i` of `C_2n □ C_2n` walked from `(2i, 0)` by alternating a
/// step in the first coordinate with a step in the second.
pub fn walk_staircase(i: usize, n: usize) -> Vec<(usize, usize)> {
    let side = 2 * n;
    let (mut x, mut y) = (2 * i % side, 0);
    let mut out = Vec::with_capacity(4 * n);
    for step in 0..4 * n {
        out.push((x, y));
        if step % 2 == 0 {
            x = (x + 1) % side;
        } else {
            y = (y + 1) % side;
        }
    }
    out
}

/// True iff the `n` walked staircases close up, are pairwise vertex-disjoint
/// and together cover all `4n²` vertices.
pub fn check_staircase_tiling(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let side = 2 * n;
    let mut seen = vec![false; side * side];
    for i in 0..n {
        let walk = walk_staircase(i, n);
        let (lx, ly) = walk[walk.len() - 1];
        // the step after the last entry is a second-coordinate step
        if (lx, (ly + 1) % side) != walk[0] {
            return false;
        }
        for (x, y) in walk {
            let cell = &mut seen[x * side + y];
            if *cell {
                return false;
            }
            *cell = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// All orientations in which every vertex has out-degree exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsmEnumeration {
    pub count: usize,
    pub orientations: Vec<Orientation>,
}

pub fn enumerate_fsm_orientations(graph: &Arc<Graph>) -> Result<FsmEnumeration> {
    enumerate_fsm_orientations_bounded(graph, FSM_EDGE_BOUND)
}

/// Tries all `2^|E|` orientations.
pub fn enumerate_fsm_orientations_bounded(
    graph: &Arc<Graph>,
    max_edges: usize,
) -> Result<FsmEnumeration> {
    let m = graph.size();
    if m > max_edges || m >= 64 {
        return Err(Error::TooLarge {
            edges: m,
            bound: max_edges,
        });
    }
    let edges = graph.edges();
    let mut out_degree = vec![0usize; graph.order()];
    let mut orientations = Vec::new();
    for mask in 0u64..(1u64 << m) {
        out_degree.iter_mut().for_each(|d| *d = 0);
        for (e, &(u, v)) in edges.iter().enumerate() {
            let tail = if mask >> e & 1 == 0 { u } else { v };
            out_degree[tail] += 1;
        }
        if out_degree.iter().all(|&d| d == 1) {
            let arcs =
                edges
                    .iter()
                    .enumerate()
                    .map(|(e, &(u, v))| if mask >> e & 1 == 0 { (u, v) } else { (v, u) });
            orientations
                .push(Orientation::from_arcs(Arc::clone(graph), arcs).expect("one arc per edge"));
        }
    }
    Ok(FsmEnumeration {
        count: orientations.len(),
        orientations,
    })
}

/// An edge partition whose classes each form a sunlet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    /// Sorted edge ids of each class; classes sorted by their edge lists.
    pub classes: Vec<Vec<usize>>,
}

impl Decomposition {
    /// Normalizes any labelled partition into canonical form.
    pub fn from_classes(mut classes: Vec<Vec<usize>>) -> Self {
        for class in &mut classes {
            class.sort_unstable();
        }
        classes.sort();
        Decomposition { classes }
    }

    /// Class index of every edge.
    pub fn assignment(&self, edge_count: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; edge_count];
        for (c, class) in self.classes.iter().enumerate() {
            for &e in class {
                out[e] = c;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionSearch {
    /// Solutions in sorted order.
    pub solutions: Vec<Decomposition>,
    /// False when the search stopped at the cap.
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub limit: Option<usize>,
    pub max_edges: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: None,
            max_edges: DECOMPOSITION_EDGE_BOUND,
        }
    }
}

/// All partitions of the grid's edges into copies of `S¹_p`.
pub fn brute_force_decompositions(
    grid: &TorusGrid,
    p: usize,
    options: SearchOptions,
) -> Result<DecompositionSearch> {
    decompose_into_sunlets(grid.graph(), p, options)
}

/// Edge partitions of `graph` into sunlets `S¹_p`, deduplicated up to
/// relabelling of the classes.
///
/// Every sunlet subgraph is listed first (a `p`-cycle plus one pendant edge
/// per cycle vertex leading off the cycle to distinct vertices); the search
/// then always branches on the lowest uncovered edge, so each partition is
/// produced exactly once.
pub fn decompose_into_sunlets(
    graph: &Graph,
    p: usize,
    options: SearchOptions,
) -> Result<DecompositionSearch> {
    let m = graph.size();
    if m > options.max_edges || m > 64 {
        return Err(Error::TooLarge {
            edges: m,
            bound: options.max_edges.min(64),
        });
    }
    if p < 3 {
        return Err(Error::TooSmall {
            what: "sunlet cycle length",
            min: 3,
            got: p,
        });
    }
    if m == 0 || !m.is_multiple_of(2 * p) {
        return Ok(DecompositionSearch {
            solutions: Vec::new(),
            exhaustive: true,
        });
    }

    let candidates = sunlet_subgraphs(graph, p);
    let mut containing: Vec<Vec<u64>> = vec![Vec::new(); m];
    for &mask in &candidates {
        for (e, list) in containing.iter_mut().enumerate() {
            if mask >> e & 1 == 1 {
                list.push(mask);
            }
        }
    }

    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut search = ExactCover {
        containing: &containing,
        full,
        limit: options.limit,
        chosen: Vec::new(),
        found: Vec::new(),
        stopped: false,
    };
    search.run(0);

    let mut solutions: Vec<Decomposition> = search
        .found
        .into_iter()
        .map(|masks| {
            Decomposition::from_classes(
                masks
                    .into_iter()
                    .map(|mask| (0..m).filter(|&e| mask >> e & 1 == 1).collect())
                    .collect(),
            )
        })
        .collect();
    solutions.sort();
    Ok(DecompositionSearch {
        solutions,
        exhaustive: !search.stopped,
    })
}

struct ExactCover<'a> {
    containing: &'a [Vec<u64>],
    full: u64,
    limit: Option<usize>,
    chosen: Vec<u64>,
    found: Vec<Vec<u64>>,
    stopped: bool,
}

impl ExactCover<'_> {
    fn run(&mut self, covered: u64) {
        if self.stopped {
            return;
        }
        if covered == self.full {
            self.found.push(self.chosen.clone());
            if self.limit.is_some_and(|l| self.found.len() >= l) {
                self.stopped = true;
            }
            return;
        }
        let lowest = (!covered & self.full).trailing_zeros() as usize;
        for &mask in &self.containing[lowest] {
            if mask & covered != 0 {
                continue;
            }
            self.chosen.push(mask);
            self.run(covered | mask);
            self.chosen.pop();
            if self.stopped {
                return;
            }
        }
    }
}

/// Edge masks of every subgraph of `graph` isomorphic to `S¹_p`.
fn sunlet_subgraphs(graph: &Graph, p: usize) -> Vec<u64> {
    let mut found = BTreeSet::new();
    for cycle in simple_cycles(graph, p) {
        let on_cycle = |v: usize| cycle.contains(&v);
        let choices: Vec<Vec<usize>> = cycle
            .iter()
            .map(|&v| {
                graph
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| !on_cycle(w))
                    .collect()
            })
            .collect();
        let mut cycle_mask = 0u64;
        for i in 0..p {
            let e = graph
                .edge_id(cycle[i], cycle[(i + 1) % p])
                .expect("consecutive cycle vertices are adjacent");
            cycle_mask |= 1 << e;
        }
        let mut pendants = Vec::with_capacity(p);
        extend_pendants(
            graph,
            &cycle,
            &choices,
            &mut pendants,
            cycle_mask,
            &mut found,
        );
    }
    found
        .into_iter()
        .filter(|&mask| {
            let ids: Vec<usize> = (0..graph.size()).filter(|&e| mask >> e & 1 == 1).collect();
            is_sunlet(&graph.edge_subgraph(&ids).0) == Some(p)
        })
        .collect()
}

fn extend_pendants(
    graph: &Graph,
    cycle: &[usize],
    choices: &[Vec<usize>],
    pendants: &mut Vec<usize>,
    mask: u64,
    found: &mut BTreeSet<u64>,
) {
    let i = pendants.len();
    if i == cycle.len() {
        found.insert(mask);
        return;
    }
    for &w in &choices[i] {
        if pendants.contains(&w) {
            continue;
        }
        let e = graph.edge_id(cycle[i], w).expect("neighbor");
        pendants.push(w);
        extend_pendants(graph, cycle, choices, pendants, mask | 1 << e, found);
        pendants.pop();
    }
}

/// Every simple cycle of length `len`, each reported once: it starts at its
/// smallest vertex and its second vertex is smaller than its last.
fn simple_cycles(graph: &Graph, len: usize) -> Vec<Vec<usize>> {
    fn extend(graph: &Graph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().expect("non-empty path");
        if path.len() == len {
            if graph.has_edge(last, start) && path[1] < path[len - 1] {
                out.push(path.clone());
            }
            return;
        }
        for &w in graph.neighbors(last) {
            if w > start && !path.contains(&w) {
                path.push(w);
                extend(graph, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for start in 0..graph.order() {
        let mut path = vec![start];
        extend(graph, len, &mut path, &mut out);
    }
    out
}
