//! One-parameter subgroups of the maximal torus acting on a generalized
//! Grassmannian: bandwidths, fixed-point levels and components,
//! Białynicki-Birula decompositions and Hasse diagrams.
//!
//! Sign conventions: at the fixed point with fiber weight `μ` a compass root
//! `γ` counts towards `ν₊` when the downgrading is positive on it. The
//! dominant fixed point therefore has `ν₊ = dim X` and sits in the top level
//! (the source); the antidominant one sits in the bottom level (the sink).

mod bandwidth;
mod bb;
mod hasse;
mod levels;

pub use bandwidth::{BandwidthReport, NodeBandwidth};
pub use bb::BBDecomposition;
pub use hasse::{HasseGraph, HasseNode, HASSE_DEFAULT_CAP};
pub use levels::{
    ComponentRecord, ComponentRef, Level, LevelDecomposition, LevelOptions, PointData, PointProfile, ProfileCount,
    SourceSink,
};
