//! Minimal-bandwidth one-parameter torus actions on generalized Grassmannians.
//!
//! Everything here is exact combinatorics of finite root systems: Cartan
//! matrices in Bourbaki numbering, positive roots, fundamental weights, Weyl
//! orbits, torus-fixed points with their compasses, and the downgraded
//! `C*`-actions along co-fundamental weights (bandwidths, level structure,
//! fixed components, Białynicki-Birula decompositions, Hasse diagrams).
//!
//! Coefficient vectors are always written in the simple-root basis.
//! Integral data (roots, fiber weights on `O(k_j)`) uses `i64`; weights that
//! may be fractional use [`Rational`].

pub mod cartan;
pub mod cstar;
pub mod dynkin;
pub mod error;
pub mod grassmannian;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod table1;
pub mod weight;
pub mod weyl;

pub use cartan::CartanMatrix;
pub use grassmannian::{FixedPointPolytope, FixedPointRecord, GeneralizedGrassmannian, MarkedRootSet};

pub use cstar::{
    BBDecomposition, BandwidthReport, ComponentRecord, HasseGraph, Level, LevelDecomposition, LevelOptions,
    PointProfile, SourceSink,
};
pub use dynkin::{DiagramAutomorphism, DynkinType, Family};
pub use error::{Error, Result};


pub use poly::Polynomial;
pub use rational::Rational;
pub use roots::{RootSystem, RootVector};
pub use weight::{CoWeight, WeightVector};
pub use weyl::{WeightOrbit, DEFAULT_ORBIT_CAP};
