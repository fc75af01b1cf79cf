//! Legendrian handlebody calculus: fronts, Whitehead multiples, defects,
//! positrons and pseudo-convex decompositions.

#![allow(clippy::needless_range_loop)]

pub mod front;
pub mod group;
pub mod handlebody;
pub mod lattice;
pub mod decompose;
pub mod dsl;
pub mod whitehead;

/// Search budget for the bounded group-theoretic checks: `PKIT_BUDGET` when
/// it parses, otherwise [`handlebody::DEFAULT_BUDGET`].
pub fn budget() -> usize {
    std::env::var("PKIT_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(handlebody::DEFAULT_BUDGET)
}
