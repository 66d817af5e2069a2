//! Computational algebra for periodic-type subsets of magmas, semigroups and
//! groups: periodic kernels, starts, summand sets, unique direct
//! representations, set equations in the power semigroup, the induced
//! Alexandrov topologies, and an exact-arithmetic model of unit-periodic
//! subsets of the real line.
//!
//! Everything on the finite side is driven by two currencies: [`FiniteMagma`]
//! (a Cayley table with cached structural flags) and [`Subset`] (a bitset over
//! the magma's element indices). All operators are pure functions; magmas and
//! factor contexts are immutable after construction and safe to share across
//! threads.

pub mod algebra;
pub mod error;
pub mod io;
pub mod magma;
pub mod periodic;
pub mod realline;
pub mod represent;
pub mod solver;
pub mod subset;
pub mod topology;
pub mod verify;

pub use error::Error;
pub use magma::{FactorContext, FiniteMagma};
pub use subset::Subset;

/// Default ceiling for exhaustive `2^n` subset scans.
pub const DEFAULT_MAX_EXHAUSTIVE_N: usize = 24;

/// Effective cap for exhaustive enumeration scopes.
///
/// Reads `PERIODICA_MAX_N` when set, otherwise returns
/// [`DEFAULT_MAX_EXHAUSTIVE_N`].
pub fn max_exhaustive_n() -> usize {
    std::env::var("PERIODICA_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_EXHAUSTIVE_N)
}
