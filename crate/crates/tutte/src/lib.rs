//! Exact Tutte polynomial computation for multigraphs.
//!
//! The crate is organized around a small labeled multigraph type and a
//! deletion/contraction engine that produces the Tutte polynomial with
//! arbitrary-precision integer coefficients. Around that core sit the
//! classical consequences (chromatic, flow, reliability and bad-coloring
//! polynomials, shelling and face enumerators, the beta invariant, sandpile
//! level enumerators, the matrix-tree count) and a set of deliberately
//! naive brute-force oracles used to cross-check every route against every
//! other on exhaustive catalogs of small graphs.
//!
//! All arithmetic is exact: `BigInt` coefficients, `BigRational` evaluation
//! points. Nothing in the crate rounds.

pub mod catalog;
pub mod engine;
pub mod graph;
pub mod matrix_tree;
pub mod oracles;
pub mod poly;
pub mod sandpile;
pub mod specializations;
pub mod verify;

pub use engine::{tutte, tutte_eval, Engine};
pub use graph::{EdgeKind, EdgeSubset, MultiGraph};
pub use poly::{BiPoly, Rational, UniPoly};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{what} needs {needed} {unit}, budget allows {allowed}")]
    Budget {
        what: String,
        unit: &'static str,
        needed: u128,
        allowed: u64,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 4-regular: vertex {vertex} has degree {degree}")]
    NotFourRegular { vertex: usize, degree: usize },
    #[error("configuration is not stable: vertex {vertex} is at or above its threshold")]
    NotStable { vertex: usize },
    #[error("the sink cannot topple")]
    SinkToppling,
    #[error("vertex {vertex} cannot topple: height {height} is below threshold {needed}")]
    BelowThreshold { vertex: usize, height: u64, needed: u64 },
    #[error("edge order is not a permutation of the edge ids")]
    NotAPermutation,
    #[error("edge counts differ: {left} vs {right}")]
    EdgeCountMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Hard caps for the exponential enumerations in this crate.
///
/// Every brute-force routine states up front how many objects it would
/// enumerate and refuses (rather than hangs) when that exceeds the cap.
/// `max_subsets` guards edge-subset and vertex-indexed enumerations,
/// `max_orientations` guards per-edge assignment spaces (orientations,
/// flow values), and `max_configs` guards sandpile stable-configuration
/// spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_subsets: u64,
    pub max_orientations: u64,
    pub max_configs: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subsets: 1 << 20,
            max_orientations: 1 << 20,
            max_configs: 1_000_000,
        }
    }
}

impl Budget {
    /// A budget that never refuses. Test-suite convenience; the CLI never
    /// constructs this.
    pub fn unlimited() -> Self {
        Budget {
            max_subsets: u64::MAX,
            max_orientations: u64::MAX,
            max_configs: u64::MAX,
        }
    }

    /// Admit `2^edge_count` subsets or refuse.
    pub(crate) fn admit_subsets(&self, edge_count: usize, what: &str) -> Result<u64> {
        let needed: u128 = 1u128
            .checked_shl(edge_count as u32)
            .unwrap_or(u128::MAX);
        if needed > self.max_subsets as u128 {
            return Err(Error::Budget {
                what: what.to_string(),
                unit: "subsets",
                needed,
                allowed: self.max_subsets,
            });
        }
        Ok(needed as u64)
    }

    /// Admit `base^exponent` per-edge assignments (orientations, flow
    /// values) or refuse.
    pub(crate) fn admit_assignments(&self, base: u64, exponent: usize, what: &str) -> Result<u64> {
        let mut needed: u128 = 1;
        for _ in 0..exponent {
            needed = needed.saturating_mul(base as u128);
        }
        if needed > self.max_orientations as u128 {
            return Err(Error::Budget {
                what: what.to_string(),
                unit: "assignments",
                needed,
                allowed: self.max_orientations,
            });
        }
        Ok(needed as u64)
    }

    /// Admit `colors^vertex_count` colorings or refuse. Colorings share the
    /// subset cap: both are sweeps indexed by the graph itself rather than
    /// by a per-edge assignment space.
    pub(crate) fn admit_colorings(&self, colors: u64, vertex_count: usize, what: &str) -> Result<u64> {
        let mut needed: u128 = 1;
        for _ in 0..vertex_count {
            needed = needed.saturating_mul(colors as u128);
        }
        if needed > self.max_subsets as u128 {
            return Err(Error::Budget {
                what: what.to_string(),
                unit: "colorings",
                needed,
                allowed: self.max_subsets,
            });
        }
        Ok(needed as u64)
    }

    /// Admit `count` sandpile configurations or refuse.
    pub(crate) fn admit_configs(&self, count: u128, what: &str) -> Result<u64> {
        if count > self.max_configs as u128 {
            return Err(Error::Budget {
                what: what.to_string(),
                unit: "configurations",
                needed: count,
                allowed: self.max_configs,
            });
        }
        Ok(count as u64)
    }
}
