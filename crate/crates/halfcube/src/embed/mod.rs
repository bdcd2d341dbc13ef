//! Scale-2 (half-cube) and s-truncated embedding search.
//!
//! Every edge of an embedded graph flips a 2-set of coordinates `S_e`; the
//! search determines the pairwise intersection sizes `i(e,e') = |S_e ∩ S_e'|`
//! from distance data, propagates the consistency rules, backtracks over the
//! undetermined values, and reconstructs coordinate sets by inverting the
//! class-intersection line graph. Every emitted embedding is re-verified
//! from scratch.

mod addressing;
mod propagate;
mod roots;
mod search;
mod sigma;
mod table;

pub use addressing::{
    assign_addresses, collapse_to_scale1, product_embed, shortfall_pairs, verify_embedding,
    EmbedViolation, ViolationKind,
};
pub use propagate::propagate;
pub use roots::{inverse_line_graphs, CoordinateGraph, RootGraph};
pub use search::{embed, enumerate, EmbedOptions, SearchOutcome, SearchStats};
pub use sigma::{sigma_oracle, Sigma};
pub use table::{seed_table, Contradiction, SearchState, Value};

use serde::Serialize;

use crate::bits::BitVec;

/// A vertex addressing at scale 1 or 2, exact up to distance `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// 1 for hypercube (partial cube) addressings, 2 for half-cube.
    pub scale: u8,
    /// Truncation level: pairs at distance <= s must be exact.
    pub s: usize,
    /// Number of coordinates.
    pub m: usize,
    /// One address per vertex, in vertex-index order.
    pub addresses: Vec<BitVec>,
}

/// One verified embedding together with the combinatorial data it was
/// reconstructed from.
#[derive(Debug, Clone)]
pub struct Solution {
    /// Edge indices grouped into coordinate classes (sorted canonically).
    pub classes: Vec<Vec<usize>>,
    /// Intersection sizes between classes, row-major over class indices.
    pub intersections: Vec<u8>,
    /// The coordinate 2-set of each class.
    pub root: CoordinateGraph,
    pub embedding: Embedding,
}

impl Solution {
    /// Deterministic ordering key: dimension, then the address matrix.
    pub fn canonical_key(&self) -> (usize, String) {
        let mat = self
            .embedding
            .addresses
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(";");
        (self.embedding.m, mat)
    }
}

/// Search status vocabulary; truncated variants carry `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "s", rename_all = "snake_case")]
pub enum Status {
    Embeddable,
    NotEmbeddable,
    TrEmbeddable(usize),
    NotTrEmbeddable(usize),
    Unknown,
}

impl Status {
    pub fn is_positive(&self) -> bool {
        matches!(self, Status::Embeddable | Status::TrEmbeddable(_))
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Status::NotEmbeddable | Status::NotTrEmbeddable(_))
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Embeddable => write!(f, "embeddable"),
            Status::NotEmbeddable => write!(f, "not-embeddable"),
            Status::TrEmbeddable(s) => write!(f, "{s}-tr-embeddable"),
            Status::NotTrEmbeddable(s) => write!(f, "not-{s}-tr-embeddable"),
            Status::Unknown => write!(f, "unknown"),
        }
    }
}
