//! Generalized Grassmannians `D(j)` as combinatorial objects.
//!
//! Normalization boundary: fiber weights are scaled by `k_j` (they live on
//! `O(k_j)` and are integral), compass roots are never scaled. The compass at
//! the fixed point with fiber weight `μ` is `{γ ∈ Φ : γ^∨(μ) > 0}`, which
//! equals `w(Φ⁺(j))` when `μ = w(k_j ω_j)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::error::Result;
use crate::rational::Rational;
use crate::roots::{RootSystem, RootVector};
use crate::weight::WeightVector;
use crate::weyl::IntOrbit;

#[derive(Debug, Clone)]
pub struct GeneralizedGrassmannian {
    sys: RootSystem,
    node: usize,
    k: i64,
    /// `k_j ω_j`, integral.
    top: Vec<i64>,
    /// Indices into `sys.positive_roots()` of roots with `m_j > 0`.
    marked: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedRootSet {
    /// `Φ⁺(j)`, the tangent weights at the dominant fixed point.
    pub roots: Vec<RootVector>,
    /// `Φ′⁺`: positive roots with `m_j = 0`.
    pub complement: Vec<RootVector>,
}

/// One torus-fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRecord {
    /// `w(k_j ω_j)`, on `O(k_j)`.
    pub fiber_weight: WeightVector,
    /// `w(Φ⁺(j))`, unscaled, in lexicographic order.
    pub compass: Vec<RootVector>,
    /// Reduced word (1-based nodes, applied left to right) with
    /// `w = s_{last} ... s_{first}`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointPolytope {
    /// Distinct fiber weights in lexicographic order.
    pub vertices: Vec<WeightVector>,
}

impl GeneralizedGrassmannian {
    pub fn new(ty: DynkinType, node: usize) -> Result<Self> {
        ty.check_node(node)?;
        Ok(Self::with_system(RootSystem::new(ty), node))
    }

    /// Reuses an existing root system.
    pub fn with_system(sys: RootSystem, node: usize) -> Self {
        let omega = sys.fundamental_weight(node).expect("node checked by caller");
        let k = omega.denominator_lcm();
        let top = omega.scaled_integers(k).expect("k_j clears denominators");
        let marked = (0..sys.positive_roots().len()).filter(|&r| sys.positive_roots()[r].0[node - 1] > 0).collect();
        Self { sys, node, k, top, marked }
    }

    pub fn parse(ty: &str, node: usize) -> Result<Self> {
        Self::new(ty.parse()?, node)
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.sys.dynkin_type()
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    /// Smallest `k` with `k ω_j` in the root lattice.
    pub fn k_index(&self) -> i64 {
        self.k
    }

    pub fn dimension(&self) -> usize {
        self.marked.len()
    }

    pub fn fundamental_weight(&self) -> WeightVector {
        self.sys.fundamental_weight(self.node).expect("valid node")
    }

    /// `k_j ω_j` as integers.
    pub fn top_weight(&self) -> &[i64] {
        &self.top
    }

    pub fn marked_indices(&self) -> &[usize] {
        &self.marked
    }

    pub fn marked_roots(&self) -> MarkedRootSet {
        let pos = self.sys.positive_roots();
        let (roots, complement) = pos.iter().cloned().partition(|r| r.0[self.node - 1] > 0);
        MarkedRootSet { roots, complement }
    }

    /// Number of torus-fixed points, `|W| / |W_{P_j}|`, without enumerating.
    pub fn fixed_point_count(&self) -> u128 {
        self.sys.orbit_size_of_dominant(&self.top)
    }

    /// The orbit of `k_j ω_j`: one element per fixed point.
    pub fn orbit(&self, cap: usize) -> Result<IntOrbit> {
        IntOrbit::build(&self.sys, &self.top, cap)
    }

    /// Sign of `β^∨(μ)` for every positive root `β`: `+1` puts `β` in the
    /// compass at `μ`, `-1` puts `-β` there, `0` means neither.
    pub fn compass_signs(&self, mu: &[i64], out: &mut Vec<i8>) {
        let mut simple = Vec::with_capacity(self.rank());
        self.sys.simple_pairings(mu, &mut simple);
        out.clear();
        out.extend(
            (0..self.sys.positive_roots().len()).map(|r| self.sys.root_pairing_from_simple(r, &simple).signum() as i8),
        );
    }

    /// Compass at `μ` by the pairing characterization, sorted.
    pub fn compass_at(&self, mu: &[i64]) -> Vec<RootVector> {
        let mut signs = Vec::new();
        self.compass_signs(mu, &mut signs);
        let pos = self.sys.positive_roots();
        let mut compass: Vec<RootVector> = signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(r, &s)| if s > 0 { pos[r].clone() } else { pos[r].neg() })
            .collect();
        compass.sort();
        compass
    }

    /// All fixed points in canonical order. Compasses are transported along
    /// the descent tree: a child reached by `s_i` gets `s_i` of its parent's
    /// compass.
    pub fn fixed_points(&self, cap: usize) -> Result<Vec<FixedPointRecord>> {
        let orbit = self.orbit(cap)?;
        let mut compasses: Vec<Vec<Vec<i64>>> = vec![Vec::new(); orbit.len()];
        for k in orbit.topological_order() {
            compasses[k] = match orbit.parent(k) {
                None => self.marked.iter().map(|&r| self.sys.positive_roots()[r].0.clone()).collect(),
                Some((p, i)) => compasses[p]
                    .iter()
                    .map(|root| {
                        let mut v = root.clone();
                        v[i] -= self.sys.simple_pairing_int(i, root);
                        v
                    })
                    .collect(),
            };
        }
        Ok((0..orbit.len())
            .map(|k| {
                let mut compass: Vec<RootVector> = std::mem::take(&mut compasses[k]).into_iter().map(RootVector).collect();
                compass.sort();
                FixedPointRecord {
                    fiber_weight: WeightVector::from_integers(orbit.point(k)),
                    compass,
                    witness: orbit.witness(k),
                }
            })
            .collect())
    }

    /// Streams fixed points in canonical order without holding compasses for
    /// the whole orbit; each compass is computed on demand.
    pub fn fixed_point_stream(&self, cap: usize) -> Result<FixedPointStream<'_>> {
        Ok(FixedPointStream { x: self, orbit: self.orbit(cap)?, next: 0 })
    }

    pub fn polytope_vertices(&self, cap: usize) -> Result<FixedPointPolytope> {
        let orbit = self.orbit(cap)?;
        Ok(FixedPointPolytope { vertices: orbit.points().map(WeightVector::from_integers).collect() })
    }

    /// `m_i(ω_j)` for 1-based `i`.
    pub fn omega_coefficient(&self, i: usize) -> Rational {
        Rational::new(self.top[i - 1], self.k)
    }
}

impl fmt::Display for GeneralizedGrassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.dynkin_type(), self.node)
    }
}

pub struct FixedPointStream<'a> {
    x: &'a GeneralizedGrassmannian,
    orbit: IntOrbit,
    next: usize,
}

impl FixedPointStream<'_> {
    pub fn orbit(&self) -> &IntOrbit {
        &self.orbit
    }
}

impl Iterator for FixedPointStream<'_> {
    type Item = FixedPointRecord;

    fn next(&mut self) -> Option<FixedPointRecord> {
        if self.next >= self.orbit.len() {
            return None;
        }
        let k = self.next;
        self.next += 1;
        let mu = self.orbit.point(k);
        Some(FixedPointRecord {
            fiber_weight: WeightVector::from_integers(mu),
            compass: self.x.compass_at(mu),
            witness: self.orbit.witness(k),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.orbit.len() - self.next;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for FixedPointStream<'_> {}

impl FixedPointPolytope {
    /// Whether `v ↦ -σ(v)` maps the vertex set to itself.
    pub fn is_opposition_symmetric(&self, sigma: &crate::dynkin::DiagramAutomorphism) -> bool {
        self.vertices.iter().all(|v| {
            let n = v.len();
            let mut image = vec![Rational::from_integer(0); n];
            for i in 1..=n {
                image[sigma.apply(i) - 1] = -v.coeffs()[i - 1];
            }
            self.vertices.binary_search(&WeightVector::new(image)).is_ok()
        })
    }
}
