//! Simple undirected graphs, orientations and the small family of
//! constructors the rest of the crate is built from: cycles, sunlets,
//! disjoint unions of sunlets and Cartesian products.
//!
//! Vertices are dense integer ids `0..order`. Edges are stored as ordered
//! pairs `(u, v)` with `u < v`, sorted, so an edge id is simply its index in
//! [`Graph::edges`]. All values are immutable once built.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A simple undirected graph over vertex ids `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and parallel
    /// edges.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v || u >= order || v >= order {
                return Err(Error::InvalidEdge(u, v));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            order,
            edges: normalized,
            adjacency,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in edge-id order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Id of the edge joining `u` and `v`, if there is one.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.adjacency.iter().all(|n| n.len() == degree)
    }

    /// Component index of every vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.order];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Dimension of the cycle space: `size - order + components`.
    pub fn cycle_rank(&self) -> usize {
        self.size() + self.component_count() - self.order
    }

    /// The subgraph formed by a set of edge ids, with its vertices relabelled
    /// densely. Returns the subgraph and, for each new id, the original id.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> (Graph, Vec<usize>) {
        let mut vertices: Vec<usize> = edge_ids
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let relabel = |x: usize| {
            vertices
                .binary_search(&x)
                .expect("endpoint collected above")
        };
        let edges = edge_ids.iter().map(|&e| {
            let (u, v) = self.edges[e];
            (relabel(u), relabel(v))
        });
        let sub = Graph::new(vertices.len(), edges).expect("subgraph of a simple graph is simple");
        (sub, vertices)
    }

    /// Disjoint union of arbitrary graphs; the vertices of `graphs[i]` are
    /// shifted by the total order of the graphs before it.
    pub fn disjoint_sum(graphs: &[&Graph]) -> Graph {
        let mut offset = 0;
        let mut edges = Vec::new();
        for g in graphs {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.order;
        }
        Graph::new(offset, edges).expect("disjoint union of simple graphs is simple")
    }
}

/// One direction for every edge of a base graph.
///
/// `arcs[e]` is the ordered `(tail, head)` pair chosen for edge id `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: Arc<Graph>,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Builds an orientation from an unordered list of arcs. Every edge of
    /// `graph` must receive exactly one arc.
    pub fn from_arcs<I>(graph: Arc<Graph>, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut slots: Vec<Option<(usize, usize)>> = vec![None; graph.size()];
        let mut count = 0;
        for (t, h) in arcs {
            let id = graph.edge_id(t, h).ok_or(Error::NotAnEdge(t, h))?;
            if slots[id].is_some() {
                return Err(Error::DuplicateEdge(t.min(h), t.max(h)));
            }
            slots[id] = Some((t, h));
            count += 1;
        }
        if count != graph.size() {
            return Err(Error::ArcCount {
                expected: graph.size(),
                got: count,
            });
        }
        let arcs = slots
            .into_iter()
            .map(|a| a.expect("all slots filled"))
            .collect();
        Ok(Orientation { graph, arcs })
    }

    /// Orients each edge `(u, v)` (with `u < v`) by `rule`, which returns
    /// `true` to keep `u -> v` and `false` for `v -> u`.
    pub fn from_rule<F>(graph: Arc<Graph>, mut rule: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let arcs = graph
            .edges()
            .iter()
            .map(|&(u, v)| if rule(u, v) { (u, v) } else { (v, u) })
            .collect();
        Orientation { graph, arcs }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    /// Arcs in edge-id order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, edge_id: usize) -> (usize, usize) {
        self.arcs[edge_id]
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.graph
            .edge_id(tail, head)
            .is_some_and(|e| self.arcs[e] == (tail, head))
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.graph.order()];
        for &(t, _) in &self.arcs {
            out[t] += 1;
        }
        out
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut inn = vec![0; self.graph.order()];
        for &(_, h) in &self.arcs {
            inn[h] += 1;
        }
        inn
    }

    /// Tails of the arcs entering `v`, ascending.
    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.has_arc(u, v))
            .collect()
    }

    /// Heads of the arcs leaving `v`, ascending.
    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.has_arc(v, w))
            .collect()
    }

    /// Same orientation with a single edge reversed.
    pub fn with_reversed(&self, edge_id: usize) -> Orientation {
        let mut arcs = self.arcs.clone();
        let (t, h) = arcs[edge_id];
        arcs[edge_id] = (h, t);
        Orientation {
            graph: Arc::clone(&self.graph),
            arcs,
        }
    }

    /// True iff every vertex has exactly one outgoing arc.
    pub fn is_fsm(&self) -> bool {
        self.out_degrees().iter().all(|&d| d == 1)
    }
}

/// Traversal sense of a sunlet's cycle in an FSM orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    /// Cycle arcs `i -> i+1`.
    Forward,
    /// Cycle arcs `i+1 -> i`.
    Reverse,
}

/// The sunlet `S¹_p`: a `p`-cycle on `0..p` with pendant `p+i` attached to
/// cycle vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunlet {
    p: usize,
    graph: Arc<Graph>,
}

impl Sunlet {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn cycle_vertices(&self) -> std::ops::Range<usize> {
        0..self.p
    }

    pub fn pendant_vertices(&self) -> std::ops::Range<usize> {
        self.p..2 * self.p
    }

    pub fn pendant_of(&self, cycle_vertex: usize) -> usize {
        self.p + cycle_vertex
    }
}

/// Position of a vertex inside its sunlet copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Cycle(usize),
    Pendant(usize),
}

/// `s` disjoint copies of `S¹_p`; copy `c` occupies ids `c·2p .. (c+1)·2p`
/// laid out exactly like [`Sunlet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunletForest {
    s: usize,
    p: usize,
    graph: Arc<Graph>,
}

impl SunletForest {
    pub fn copies(&self) -> usize {
        self.s
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn copy_of(&self, v: usize) -> usize {
        v / (2 * self.p)
    }

    pub fn role_of(&self, v: usize) -> Role {
        let local = v % (2 * self.p);
        if local < self.p {
            Role::Cycle(local)
        } else {
            Role::Pendant(local - self.p)
        }
    }

    pub fn vertex(&self, copy: usize, role: Role) -> usize {
        let base = copy * 2 * self.p;
        match role {
            Role::Cycle(i) => base + i,
            Role::Pendant(i) => base + self.p + i,
        }
    }

    /// Cycle vertex ids of each copy, in cycle order.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        (0..self.s)
            .map(|c| {
                (0..self.p)
                    .map(|i| self.vertex(c, Role::Cycle(i)))
                    .collect()
            })
            .collect()
    }

    /// FSM orientation of every copy with the same cycle sense.
    pub fn fsm_orientation(&self, sense: Sense) -> Orientation {
        let p = self.p;
        Orientation::from_rule(Arc::clone(&self.graph), |u, v| {
            match (self.role_of(u), self.role_of(v)) {
                (Role::Cycle(i), Role::Cycle(j)) => {
                    let forward = (i + 1) % p == j;
                    forward == (sense == Sense::Forward)
                }
                // u < v inside a copy, so u is the cycle vertex: point at it
                _ => false,
            }
        })
    }
}

fn check_cycle_length(p: usize) -> Result<()> {
    if p < 3 {
        return Err(Error::TooSmall {
            what: "cycle length",
            min: 3,
            got: p,
        });
    }
    Ok(())
}

/// The cycle `C_p` with edges `{i, i+1 mod p}`.
pub fn make_cycle(p: usize) -> Result<Graph> {
    check_cycle_length(p)?;
    Graph::new(p, (0..p).map(|i| (i, (i + 1) % p)))
}

fn sunlet_edges(p: usize, offset: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..p)
        .map(move |i| (offset + i, offset + (i + 1) % p))
        .chain((0..p).map(move |i| (offset + i, offset + p + i)))
}

/// The sunlet `S¹_p`.
pub fn make_sunlet(p: usize) -> Result<Sunlet> {
    check_cycle_length(p)?;
    let graph = Graph::new(2 * p, sunlet_edges(p, 0))?;
    Ok(Sunlet {
        p,
        graph: Arc::new(graph),
    })
}

/// `s` disjoint copies of `S¹_p`.
pub fn disjoint_union(s: usize, p: usize) -> Result<SunletForest> {
    check_cycle_length(p)?;
    if s < 1 {
        return Err(Error::TooSmall {
            what: "copy count",
            min: 1,
            got: s,
        });
    }
    let edges = (0..s).flat_map(|c| sunlet_edges(p, c * 2 * p));
    let graph = Graph::new(s * 2 * p, edges)?;
    Ok(SunletForest {
        s,
        p,
        graph: Arc::new(graph),
    })
}

/// `G □ H`, with vertex `(a, x)` stored as `a·|V_H| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    for (what, graph) in [("left factor order", g), ("right factor order", h)] {
        if graph.order() == 0 {
            return Err(Error::TooSmall {
                what,
                min: 1,
                got: 0,
            });
        }
    }
    let m = h.order();
    let id = |a: usize, x: usize| a * m + x;
    let mut edges = Vec::with_capacity(g.order() * h.size() + h.order() * g.size());
    for a in 0..g.order() {
        edges.extend(h.edges().iter().map(|&(x, y)| (id(a, x), id(a, y))));
    }
    for x in 0..m {
        edges.extend(g.edges().iter().map(|&(a, b)| (id(a, x), id(b, x))));
    }
    Graph::new(g.order() * m, edges)
}

/// FSM orientation of a sunlet: directed cycle in the chosen sense, every
/// ray pointing at the cycle.
pub fn fsm_orient(sunlet: &Sunlet, sense: Sense) -> Orientation {
    let p = sunlet.p;
    Orientation::from_rule(Arc::clone(&sunlet.graph), |u, v| {
        if v >= p {
            return false;
        }
        ((u + 1) % p == v) == (sense == Sense::Forward)
    })
}

/// Recognizes sunlets: returns `p` iff `g` is isomorphic to `S¹_p` for some
/// `p ≥ 3`.
pub fn is_sunlet(g: &Graph) -> Option<usize> {
    let order = g.order();
    if order < 6 || !order.is_multiple_of(2) || g.size() != order || !g.is_connected() {
        return None;
    }
    let p = order / 2;
    let degrees = g.degrees();
    let cubic: Vec<usize> = (0..order).filter(|&v| degrees[v] == 3).collect();
    let leaves = degrees.iter().filter(|&&d| d == 1).count();
    if cubic.len() != p || leaves != p {
        return None;
    }
    for &v in &cubic {
        let cubic_neighbors = g.neighbors(v).iter().filter(|&&w| degrees[w] == 3).count();
        let leaf_neighbors = g.neighbors(v).iter().filter(|&&w| degrees[w] == 1).count();
        if cubic_neighbors != 2 || leaf_neighbors != 1 {
            return None;
        }
    }
    // connected, unicyclic and every cubic vertex sees two cubic vertices:
    // the cubic vertices carry the single cycle
    Some(p)
}
