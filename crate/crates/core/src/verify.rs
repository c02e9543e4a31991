//! Checkers for homomorphisms, coverings and factorizations, written
//! directly against the definitions. They look only at the two graphs, the
//! vertex map and the orientations; nothing here knows how a covering was
//! constructed.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::constructions::Covering;
use crate::graph::{is_sunlet, Graph, Orientation, Role};

pub const DEFAULT_COUNTEREXAMPLE_LIMIT: usize = 10;

/// A vertex map between two graphs, with whatever extra structure the
/// checkers may need. Coverings convert into this via `From`; hand-built
/// maps (identity maps, doubled domains, partial domains) fill it directly.
#[derive(Debug, Clone)]
pub struct GraphMap<'a> {
    pub domain: &'a Graph,
    pub codomain: &'a Graph,
    pub vertex_map: &'a [usize],
    pub domain_orientation: Option<&'a Orientation>,
    pub codomain_orientation: Option<&'a Orientation>,
    /// Cycle vertices of each sunlet copy, in cycle order.
    pub cycles: Vec<Vec<usize>>,
    /// Copy index of every domain vertex.
    pub copy_of: Vec<usize>,
}

impl<'a> GraphMap<'a> {
    /// A bare vertex map with no orientations and a single copy.
    pub fn plain(domain: &'a Graph, codomain: &'a Graph, vertex_map: &'a [usize]) -> Self {
        GraphMap {
            domain,
            codomain,
            vertex_map,
            domain_orientation: None,
            codomain_orientation: None,
            cycles: Vec::new(),
            copy_of: vec![0; domain.order()],
        }
    }

    fn copies(&self) -> usize {
        self.copy_of.iter().max().map_or(0, |m| m + 1)
    }

    fn image(&self, v: usize) -> Option<usize> {
        self.vertex_map
            .get(v)
            .copied()
            .filter(|&w| w < self.codomain.order())
    }
}

impl<'a> From<&'a Covering> for GraphMap<'a> {
    fn from(c: &'a Covering) -> Self {
        let forest = c.domain();
        GraphMap {
            domain: forest.graph(),
            codomain: c.codomain().graph(),
            vertex_map: c.vertex_map(),
            domain_orientation: Some(c.domain_orientation()),
            codomain_orientation: Some(c.codomain_orientation()),
            cycles: forest.cycles(),
            copy_of: (0..forest.graph().order())
                .map(|v| forest.copy_of(v))
                .collect(),
        }
    }
}

/// A concrete witness that some property fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    rename_all = "camelCase",
    rename_all_fields = "camelCase"
)]
pub enum Failure {
    /// A domain vertex has no image inside the codomain.
    Unmapped {
        vertex: usize,
    },
    /// A domain edge whose endpoint images are not adjacent.
    EdgeNotPreserved {
        edge: (usize, usize),
        image: (usize, usize),
    },
    /// A codomain edge with no preimage edge.
    EdgeNotCovered {
        edge: (usize, usize),
    },
    /// A codomain edge hit by more than one domain edge.
    EdgeCoveredTwice {
        edge: (usize, usize),
        preimages: Vec<(usize, usize)>,
    },
    /// A codomain vertex whose fiber size differs from the first vertex's.
    FiberSize {
        vertex: usize,
        size: usize,
        expected: usize,
    },
    OrientationMissing,
    /// A domain arc whose image is not an arc of the codomain orientation.
    ArcNotPreserved {
        arc: (usize, usize),
        image: (usize, usize),
    },
    /// Two cycle vertices with the same image.
    CycleCollision {
        vertices: (usize, usize),
        image: usize,
    },
    /// The cycle images do not form one cycle through every codomain vertex.
    NotHamiltonian {
        copies: usize,
        visited: usize,
        order: usize,
    },
    /// The edges mapped from one copy do not form a sunlet.
    FactorNotSunlet {
        copy: usize,
        edges: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// `None` keeps every counterexample.
    pub max_counterexamples: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_counterexamples: Some(DEFAULT_COUNTEREXAMPLE_LIMIT),
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_counterexamples: None,
        }
    }
}

/// Collects counterexamples for one flag, up to the limit.
struct Witnesses {
    limit: Option<usize>,
    found: usize,
    kept: Vec<Failure>,
}

impl Witnesses {
    fn new(limits: Limits) -> Self {
        Witnesses {
            limit: limits.max_counterexamples,
            found: 0,
            kept: Vec::new(),
        }
    }

    fn push(&mut self, failure: Failure) {
        self.found += 1;
        if self.limit.is_none_or(|l| self.kept.len() < l) {
            self.kept.push(failure);
        }
    }

    fn ok(&self) -> bool {
        self.found == 0
    }
}

/// Outcome of a single yes/no check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub ok: bool,
    pub failures: Vec<Failure>,
}

impl From<Witnesses> for Check {
    fn from(w: Witnesses) -> Self {
        Check {
            ok: w.ok(),
            failures: w.kept,
        }
    }
}

/// Every domain edge must land on a codomain edge.
pub fn check_homomorphism(map: &GraphMap, limits: Limits) -> Check {
    let mut w = Witnesses::new(limits);
    for v in 0..map.domain.order() {
        if map.image(v).is_none() {
            w.push(Failure::Unmapped { vertex: v });
        }
    }
    for &(u, v) in map.domain.edges() {
        if let (Some(a), Some(b)) = (map.image(u), map.image(v)) {
            if !map.codomain.has_edge(a, b) {
                w.push(Failure::EdgeNotPreserved {
                    edge: (u, v),
                    image: (a, b),
                });
            }
        }
    }
    w.into()
}

/// Domain edges landing on each codomain edge id.
fn edge_preimages(map: &GraphMap) -> Vec<Vec<(usize, usize)>> {
    let mut pre = vec![Vec::new(); map.codomain.size()];
    for &(u, v) in map.domain.edges() {
        if let (Some(a), Some(b)) = (map.image(u), map.image(v)) {
            if let Some(e) = map.codomain.edge_id(a, b) {
                pre[e].push((u, v));
            }
        }
    }
    pre
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringCheck {
    pub onto: bool,
    pub edge_bijective: bool,
    pub failures: Vec<Failure>,
}

impl CoveringCheck {
    pub fn is_covering(&self) -> bool {
        self.onto && self.edge_bijective
    }
}

/// Onto (every codomain edge has a preimage edge) and injective on edges.
/// Domain edges that are not mapped onto edges are ignored here; they are
/// reported by [`check_homomorphism`].
pub fn check_covering(map: &GraphMap, limits: Limits) -> CoveringCheck {
    let mut onto = Witnesses::new(limits);
    let mut injective = Witnesses::new(limits);
    for (e, pre) in edge_preimages(map).into_iter().enumerate() {
        let edge = map.codomain.edge(e);
        match pre.len() {
            0 => onto.push(Failure::EdgeNotCovered { edge }),
            1 => {}
            _ => injective.push(Failure::EdgeCoveredTwice {
                edge,
                preimages: pre,
            }),
        }
    }
    let (onto_ok, injective_ok) = (onto.ok(), injective.ok());
    let mut failures = onto.kept;
    failures.extend(injective.kept);
    CoveringCheck {
        onto: onto_ok,
        edge_bijective: injective_ok,
        failures,
    }
}

/// `Some(r)` iff every codomain vertex has exactly `r` preimages.
pub fn check_r_to_1(map: &GraphMap, limits: Limits) -> (Option<usize>, Vec<Failure>) {
    let mut fibers = vec![0usize; map.codomain.order()];
    for v in 0..map.domain.order() {
        if let Some(a) = map.image(v) {
            fibers[a] += 1;
        }
    }
    let Some(&expected) = fibers.first() else {
        return (None, Vec::new());
    };
    let mut w = Witnesses::new(limits);
    for (vertex, &size) in fibers.iter().enumerate() {
        if size != expected {
            w.push(Failure::FiberSize {
                vertex,
                size,
                expected,
            });
        }
    }
    let r = w.ok().then_some(expected);
    (r, w.kept)
}

/// Every domain arc `(u, w)` must map to a codomain arc `(φ(u), φ(w))`.
pub fn check_orientation_compatible(map: &GraphMap, limits: Limits) -> Check {
    let mut w = Witnesses::new(limits);
    let (Some(domain), Some(codomain)) = (map.domain_orientation, map.codomain_orientation) else {
        w.push(Failure::OrientationMissing);
        return w.into();
    };
    for &(t, h) in domain.arcs() {
        if let (Some(a), Some(b)) = (map.image(t), map.image(h)) {
            if !codomain.has_arc(a, b) {
                w.push(Failure::ArcNotPreserved {
                    arc: (t, h),
                    image: (a, b),
                });
            }
        }
    }
    w.into()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCheck {
    pub injective: bool,
    /// There is exactly one cycle and its image visits every codomain
    /// vertex exactly once.
    pub hamiltonian: bool,
    pub failures: Vec<Failure>,
}

pub fn check_cycle_restriction(map: &GraphMap, limits: Limits) -> CycleCheck {
    let mut collisions = Witnesses::new(limits);
    let mut first_preimage: HashMap<usize, usize> = HashMap::new();
    for &v in map.cycles.iter().flatten() {
        let Some(a) = map.image(v) else { continue };
        if let Some(&u) = first_preimage.get(&a) {
            collisions.push(Failure::CycleCollision {
                vertices: (u, v),
                image: a,
            });
        } else {
            first_preimage.insert(a, v);
        }
    }
    let injective = collisions.ok();
    let visited = first_preimage.len();
    let order = map.codomain.order();
    let hamiltonian = injective && map.cycles.len() == 1 && visited == order;
    let mut failures = collisions.kept;
    if !hamiltonian {
        failures.push(Failure::NotHamiltonian {
            copies: map.cycles.len(),
            visited,
            order,
        });
    }
    CycleCheck {
        injective,
        hamiltonian,
        failures,
    }
}

/// The codomain edge sets hit by each domain copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Sorted codomain edge ids per copy.
    pub classes: Vec<Vec<usize>>,
    /// Every codomain edge lies in exactly one class.
    pub partitions: bool,
    /// Sunlet recognizer result for each class's subgraph.
    pub sunlet_sizes: Vec<Option<usize>>,
}

impl Factorization {
    pub fn all_sunlets(&self) -> bool {
        self.sunlet_sizes.iter().all(Option::is_some)
    }
}

pub fn induced_factorization(map: &GraphMap) -> Factorization {
    let mut classes = vec![Vec::new(); map.copies()];
    for &(u, v) in map.domain.edges() {
        if let (Some(a), Some(b)) = (map.image(u), map.image(v)) {
            if let Some(e) = map.codomain.edge_id(a, b) {
                classes[map.copy_of[u]].push(e);
            }
        }
    }
    let mut hits = vec![0usize; map.codomain.size()];
    for class in &mut classes {
        class.sort_unstable();
        for &e in class.iter() {
            hits[e] += 1;
        }
    }
    let partitions = hits.iter().all(|&h| h == 1);
    let sunlet_sizes = classes
        .iter()
        .map(|class| {
            let mut distinct = class.clone();
            distinct.dedup();
            if distinct.len() != class.len() {
                return None;
            }
            is_sunlet(&map.codomain.edge_subgraph(class).0)
        })
        .collect();
    Factorization {
        classes,
        partitions,
        sunlet_sizes,
    }
}

/// All checks on one map, with counterexamples for every failing flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CoveringReport {
    pub is_homomorphism: bool,
    pub is_onto_edges: bool,
    pub is_edge_bijective: bool,
    pub r_on_vertices: Option<usize>,
    pub orientation_compatible: bool,
    pub cycle_restriction_injective: bool,
    /// Only meaningful for a single sunlet.
    pub cycle_image_hamiltonian: Option<bool>,
    /// Only meaningful for more than one sunlet.
    pub factor_images_are_sunlets: Option<bool>,
    pub failures: Vec<Failure>,
}

impl CoveringReport {
    /// Every applicable flag holds and the map is 2-to-1 on vertices.
    pub fn passes(&self) -> bool {
        self.is_homomorphism
            && self.is_onto_edges
            && self.is_edge_bijective
            && self.r_on_vertices == Some(2)
            && self.orientation_compatible
            && self.cycle_restriction_injective
            && self.cycle_image_hamiltonian != Some(false)
            && self.factor_images_are_sunlets != Some(false)
    }
}

pub fn report(map: &GraphMap, limits: Limits) -> CoveringReport {
    let hom = check_homomorphism(map, limits);
    let cover = check_covering(map, limits);
    let (r, fiber_failures) = check_r_to_1(map, limits);
    let orient = check_orientation_compatible(map, limits);
    let cycles = check_cycle_restriction(map, limits);
    let single = map.cycles.len() == 1;

    let mut failures = hom.failures;
    failures.extend(cover.failures);
    failures.extend(fiber_failures);
    failures.extend(orient.failures);
    failures.extend(
        cycles
            .failures
            .into_iter()
            .filter(|f| single || !matches!(f, Failure::NotHamiltonian { .. })),
    );

    let factor_images_are_sunlets = if single {
        None
    } else {
        let factorization = induced_factorization(map);
        let mut w = Witnesses::new(limits);
        for (copy, (class, size)) in factorization
            .classes
            .iter()
            .zip(&factorization.sunlet_sizes)
            .enumerate()
        {
            if size.is_none() {
                w.push(Failure::FactorNotSunlet {
                    copy,
                    edges: class.len(),
                });
            }
        }
        let ok = w.ok();
        failures.extend(w.kept);
        Some(ok)
    };

    CoveringReport {
        is_homomorphism: hom.ok,
        is_onto_edges: cover.onto,
        is_edge_bijective: cover.edge_bijective,
        r_on_vertices: r,
        orientation_compatible: orient.ok,
        cycle_restriction_injective: cycles.injective,
        cycle_image_hamiltonian: single.then_some(cycles.hamiltonian),
        factor_images_are_sunlets,
        failures,
    }
}

/// Report for a covering with the default counterexample limit.
pub fn report_covering(c: &Covering) -> CoveringReport {
    report(&GraphMap::from(c), Limits::default())
}

/// Rotation from the incoming cycle arc to the incoming ray arc at a cycle
/// vertex image, in the `(x, y)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Clockwise,
    Counterclockwise,
    Straight,
    Back,
}

/// For each copy and each cycle vertex, how the ray arriving at its image is
/// rotated relative to the cycle arc arriving there. `None` where either arc
/// is not a grid step.
pub fn ray_turns(c: &Covering) -> Vec<Vec<Option<Turn>>> {
    let forest = c.domain();
    let grid = c.codomain();
    let p = forest.p();
    (0..forest.copies())
        .map(|copy| {
            (0..p)
                .map(|i| {
                    let here = c.image(forest.vertex(copy, Role::Cycle(i)));
                    let prev = c.image(forest.vertex(copy, Role::Cycle((i + p - 1) % p)));
                    let ray = c.image(forest.vertex(copy, Role::Pendant(i)));
                    let (ix, iy) = grid.step_between(prev, here)?.vector();
                    let (rx, ry) = grid.step_between(ray, here)?.vector();
                    let cross = ix * ry - iy * rx;
                    let dot = ix * rx + iy * ry;
                    Some(match (cross, dot) {
                        (c, _) if c < 0 => Turn::Clockwise,
                        (c, _) if c > 0 => Turn::Counterclockwise,
                        (_, d) if d > 0 => Turn::Straight,
                        _ => Turn::Back,
                    })
                })
                .collect()
        })
        .collect()
}
