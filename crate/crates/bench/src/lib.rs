//! Benchmark fixtures for the sunlet constructions.

use sunlet_core::Theorem;

/// Grid parameters benchmarked for each construction.
pub fn sizes(theorem: Theorem) -> &'static [usize] {
    match theorem {
        Theorem::T1 => &[4, 16, 64],
        Theorem::T2 | Theorem::T3 => &[2, 8, 32],
    }
}
