//! Isometric hypercube and half-cube embeddings of interconnection-network
//! topologies: family generators, hypermetric filters, the edge-class
//! intersection search, and independent certificate verification.
//!
//! A graph `G` embeds at scale 2 when its vertices can be addressed by
//! even-weight binary words with Hamming distance exactly twice the graph
//! distance; collapsing paired coordinates recovers scale-1 (partial cube)
//! embeddings. The `s`-truncated variants relax pairs beyond distance `s`.
//! See the `examples/` directory for one runnable program per capability.

pub mod bits;
pub mod certify;
pub mod cli;
pub mod embed;
pub mod families;
pub mod gonal;
pub mod graph;
pub mod iso;
pub mod json;
