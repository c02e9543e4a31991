//! Sunlet factorizations of toroidal grids `C_n □ C_n`.
//!
//! The crate builds three explicit coverings of toroidal grids by disjoint
//! unions of sunlets (a cycle with one pendant edge per cycle vertex), checks
//! every claimed property against the plain definitions, cross-checks the
//! closed forms with brute-force oracles, and serializes and renders the
//! results.
//!
//! ```
//! use sunlet_core::{t3_build, verify::report_covering};
//!
//! let covering = t3_build(2).unwrap();
//! assert!(report_covering(&covering).passes());
//! ```

pub mod constructions;
pub mod error;
pub mod export;
pub mod graph;
pub mod oracle;
pub mod torus;
pub mod verify;

pub use constructions::{
    t1_build, t1_hamiltonian_position, t1_vertex_class, t2_build, t2_staircase, t3_build, Covering,
    Theorem, VertexClass,
};
pub use error::{Error, Result};
pub use graph::{
    cartesian_product, disjoint_union, fsm_orient, is_sunlet, make_cycle, make_sunlet, Graph,
    Orientation, Role, Sense, Sunlet, SunletForest,
};
pub use torus::{make_torus, EdgeClass, OddSquare, TorusGrid};
pub use verify::{CoveringReport, Failure, GraphMap, Limits};
