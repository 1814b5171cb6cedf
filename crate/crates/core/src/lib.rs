//! Exact and constructive machinery around piercing numbers of non-piercing
//! families and face lengths of girth-constrained maximal plane graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`setsystem`]: finite set families: ν, τ, (p,q)-property, VC and dual
//!   VC dimension, Delaunay graphs.
//! * [`embedding`]: rotation-system embedded graphs: faces, genus, girth,
//!   distances, planarity, cross-freeness of subgraph systems.
//! * [`regions`]: disk families and their discretisation, facial
//!   neighbourhood systems, discrete non-piercing checks.
//! * [`girthmax`]: maximality verification, subdivision, bounded search for
//!   large faces, pierce-point cycle partitions.
//! * [`dsseq`]: Davenport-Schinzel admissibility and extremal lengths.
//! * [`pipeline`]: fractional piercing LP, ε-nets, bounded hitting sets and
//!   the random-deletion Delaunay experiment.

pub mod dsseq;
pub mod embedding;
pub mod error;
pub mod girthmax;
pub mod graph;
pub mod limits;
pub mod pipeline;
pub mod regions;
pub mod setsystem;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use limits::Limits;
