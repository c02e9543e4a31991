use thiserror::Error;

/// Errors raised by constructors and builders when a parameter or input is
/// outside the range an operation is defined for.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{what} = {got} is out of range 0..{bound}")]
    OutOfRange {
        what: &'static str,
        got: usize,
        bound: usize,
    },
    #[error("vertex map entry {index} = {image} is outside the codomain (order {order})")]
    ImageOutOfRange {
        index: usize,
        image: usize,
        order: usize,
    },
    #[error("{what} must be even, got {got}")]
    NotEven { what: &'static str, got: usize },
    #[error("grid must be square, got {p}x{q}")]
    NotSquare { p: usize, q: usize },
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("orientation has {got} arcs for {expected} edges")]
    ArcCount { expected: usize, got: usize },
    #[error("graph has {edges} edges, enumeration bound is {bound}")]
    TooLarge { edges: usize, bound: usize },
    #[error("{0} does not match the expected graph")]
    GraphMismatch(&'static str),
    #[error("palette has {available} colors, {required} required")]
    PaletteExhausted { required: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
