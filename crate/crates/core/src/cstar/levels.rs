use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::grassmannian::GeneralizedGrassmannian;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::weight::CoWeight;
use crate::weyl::{IntOrbit, DEFAULT_ORBIT_CAP};

/// Counts of positive, zero and negative downgraded values on the compass
/// at one fixed point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PointProfile {
    pub nu_plus: u32,
    pub nu_zero: u32,
    pub nu_minus: u32,
}

impl PointProfile {
    pub fn total(&self) -> u32 {
        self.nu_plus + self.nu_zero + self.nu_minus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointData {
    /// Index into the canonical orbit.
    pub index: usize,
    /// Downgraded fiber weight on `O(k_j)`.
    pub value: i64,
    pub profile: PointProfile,
    /// Negative values of the generic perturbation among the `ν₀` zeros.
    pub internal_negative: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileCount {
    pub profile: PointProfile,
    pub count: usize,
}

/// One fixed-point component: an orbit of the transversal Weyl group inside
/// a level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    /// Stable: components are ordered by level (top first), then by their
    /// smallest member in canonical order.
    pub id: usize,
    pub level: i64,
    pub size: usize,
    /// Canonical orbit indices, ascending. Empty when members were dropped.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<usize>,
    pub nu_plus: u32,
    pub nu_minus: u32,
    /// `ν₀`, the dimension of the component.
    pub dimension: u32,
    /// Poincaré polynomial of the component in complex degrees.
    pub poincare: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    /// Downgraded weight on `O(k_j)`.
    pub value: i64,
    /// `value / k_j`, the weight on `O(1)`.
    #[serde(with = "crate::rational::serde_exact")]
    pub label: Rational,
    pub count: usize,
    pub profiles: Vec<ProfileCount>,
    pub components: Vec<ComponentRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDecomposition {
    pub dynkin_type: DynkinType,
    pub node: usize,
    pub direction: CoWeight,
    pub k: i64,
    pub dimension: usize,
    pub total_points: usize,
    /// Highest level first.
    pub levels: Vec<Level>,
    /// Per-point data in canonical order; empty in streaming mode.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointData>,
}

#[derive(Debug, Clone, Copy)]
pub struct LevelOptions {
    pub cap: usize,
    /// Keep per-point data and component member lists. Streaming mode
    /// (`false`) keeps only per-level summaries.
    pub retain_points: bool,
}

impl Default for LevelOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_ORBIT_CAP, retain_points: true }
    }
}

impl LevelOptions {
    pub fn streaming(cap: usize) -> Self {
        Self { cap, retain_points: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRef {
    pub level: i64,
    pub component: usize,
    pub size: usize,
    pub dimension: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSink {
    pub source: ComponentRef,
    pub sink: ComponentRef,
    /// The downgrading node equals the marked node.
    pub isolated_source: bool,
    /// `ν₀ = 0` at the dominant fixed point; must agree with
    /// `isolated_source`.
    pub isolated_source_by_profile: bool,
}

impl LevelDecomposition {
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.count).collect()
    }

    pub fn components(&self) -> impl Iterator<Item = &ComponentRecord> {
        self.levels.iter().flat_map(|l| l.components.iter())
    }

    pub fn top(&self) -> &Level {
        self.levels.first().expect("at least one level")
    }

    pub fn bottom(&self) -> &Level {
        self.levels.last().expect("at least one level")
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] as usize != x {
            let up = self.0[self.0[x] as usize];
            self.0[x] = up;
            x = up as usize;
        }
        x
    }

    /// Keeps the smaller index as the representative.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo as u32;
        }
    }
}

impl GeneralizedGrassmannian {
    /// Level decomposition for the downgrading along `α_i`.
    pub fn level_decomposition(&self, i: usize, cap: usize) -> Result<LevelDecomposition> {
        self.dynkin_type().check_node(i)?;
        self.levels_along(&CoWeight::fundamental(self.rank(), i)?, LevelOptions { cap, retain_points: true })
    }

    /// Groups fixed points by the downgraded fiber weight, profiles every
    /// point against the unscaled compass, and splits each level into
    /// orbits of the reflections at the nodes where `c` vanishes.
    pub fn levels_along(&self, c: &CoWeight, opts: LevelOptions) -> Result<LevelDecomposition> {
        c.check_downgrading(self.rank())?;
        let orbit = self.orbit(opts.cap)?;
        let points = self.profile_points(&orbit, c);
        let mut uf = UnionFind::new(orbit.len());
        let transversal: Vec<usize> = (0..self.rank()).filter(|&k| c.coeffs()[k] == 0).collect();
        let sys = self.system();
        let mut buf = Vec::with_capacity(self.rank());
        for a in 0..orbit.len() {
            let mu = orbit.point(a);
            for &k in &transversal {
                let p = sys.simple_pairing_int(k, mu);
                if p != 0 {
                    buf.clear();
                    buf.extend_from_slice(mu);
                    buf[k] -= p;
                    let b = orbit.index_of(&buf).expect("orbit is closed under reflections");
                    uf.union(a, b);
                }
            }
        }

        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for a in 0..orbit.len() {
            classes.entry(uf.find(a)).or_default().push(a);
        }
        let mut by_level: BTreeMap<i64, Vec<ComponentRecord>> = BTreeMap::new();
        for (_, members) in classes {
            let first = &points[members[0]];
            let mut poincare = Polynomial::zero();
            for &m in &members {
                let p = &points[m];
                if (p.profile.nu_plus, p.profile.nu_minus) != (first.profile.nu_plus, first.profile.nu_minus) {
                    return Err(Error::NonConstantProfile { first: members[0], second: m });
                }
                poincare.add_monomial(p.internal_negative as usize, 1);
            }
            by_level.entry(first.value).or_default().push(ComponentRecord {
                id: 0,
                level: first.value,
                size: members.len(),
                nu_plus: first.profile.nu_plus,
                nu_minus: first.profile.nu_minus,
                dimension: first.profile.nu_zero,
                poincare,
                members: if opts.retain_points { members } else { Vec::new() },
            });
        }

        let mut histograms: BTreeMap<i64, BTreeMap<PointProfile, usize>> = BTreeMap::new();
        for p in &points {
            *histograms.entry(p.value).or_default().entry(p.profile).or_default() += 1;
        }
        let k = self.k_index();
        let mut next_id = 0;
        let levels = by_level
            .into_iter()
            .rev()
            .map(|(value, mut components)| {
                for comp in components.iter_mut() {
                    comp.id = next_id;
                    next_id += 1;
                }
                let hist = &histograms[&value];
                Level {
                    value,
                    label: Rational::new(value, k),
                    count: hist.values().sum(),
                    profiles: hist.iter().map(|(&profile, &count)| ProfileCount { profile, count }).collect(),
                    components,
                }
            })
            .collect();
        Ok(LevelDecomposition {
            dynkin_type: self.dynkin_type(),
            node: self.node(),
            direction: c.clone(),
            k,
            dimension: self.dimension(),
            total_points: orbit.len(),
            levels,
            points: if opts.retain_points { points } else { Vec::new() },
        })
    }

    /// Profiles of every fixed point against `c`, plus the count of negative
    /// values of the perturbed coweight `N·c + ρ^∨` among the zeros of `c`,
    /// with `N = 1 + 2·ht(θ)` so the perturbation never flips a nonzero sign.
    fn profile_points(&self, orbit: &IntOrbit, c: &CoWeight) -> Vec<PointData> {
        let sys = self.system();
        let roots = sys.positive_roots();
        let values: Vec<i64> = roots.iter().map(|r| c.pairing_int(r.coeffs())).collect();
        let heights: Vec<i64> = roots.iter().map(|r| r.height()).collect();
        let big_n = 1 + 2 * sys.highest_root().height();
        let mut simple = Vec::with_capacity(self.rank());
        (0..orbit.len())
            .map(|a| {
                let mu = orbit.point(a);
                sys.simple_pairings(mu, &mut simple);
                let mut profile = PointProfile::default();
                let mut perturbed_negative = 0u32;
                for r in 0..roots.len() {
                    let s = sys.root_pairing_from_simple(r, &simple).signum();
                    if s == 0 {
                        continue;
                    }
                    match (s * values[r]).signum() {
                        1 => profile.nu_plus += 1,
                        0 => profile.nu_zero += 1,
                        _ => profile.nu_minus += 1,
                    }
                    if s * (big_n * values[r] + heights[r]) < 0 {
                        perturbed_negative += 1;
                    }
                }
                PointData {
                    index: a,
                    value: c.pairing_int(mu),
                    profile,
                    internal_negative: perturbed_negative - profile.nu_minus,
                }
            })
            .collect()
    }

    /// Fixed components grouped into levels for the downgrading along `α_i`.
    pub fn components(&self, i: usize, cap: usize) -> Result<Vec<ComponentRecord>> {
        Ok(self.level_decomposition(i, cap)?.components().cloned().collect())
    }

    /// Source (top level, holds the dominant point) and sink (bottom level,
    /// holds the antidominant point) of the downgrading along `α_i`.
    pub fn source_sink(&self, i: usize, cap: usize) -> Result<SourceSink> {
        let dec = self.level_decomposition(i, cap)?;
        let orbit = self.orbit(cap)?;
        let find = |index: usize| {
            dec.components()
                .find(|c| c.members.binary_search(&index).is_ok())
                .map(|c| ComponentRef { level: c.level, component: c.id, size: c.size, dimension: c.dimension })
                .expect("every point lies in a component")
        };
        let dominant = orbit.dominant_index();
        let source = find(dominant);
        let sink = find(orbit.antidominant_index(self.system()));
        debug_assert_eq!(source.level, dec.top().value);
        debug_assert_eq!(sink.level, dec.bottom().value);
        Ok(SourceSink {
            source,
            sink,
            isolated_source: i == self.node(),
            isolated_source_by_profile: dec.points[dominant].profile.nu_zero == 0,
        })
    }

    /// Whether every nonzero downgraded compass value, at every fixed point,
    /// is `±1`. Scans compasses one point at a time.
    pub fn is_equalized_along(&self, c: &CoWeight, cap: usize) -> Result<bool> {
        c.check_downgrading(self.rank())?;
        let orbit = self.orbit(cap)?;
        let sys = self.system();
        let values: Vec<i64> = sys.positive_roots().iter().map(|r| c.pairing_int(r.coeffs())).collect();
        let mut signs = Vec::new();
        for mu in orbit.points() {
            self.compass_signs(mu, &mut signs);
            if signs.iter().zip(&values).any(|(&s, &v)| s != 0 && (s as i64 * v).abs() > 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_equalized(&self, i: usize, cap: usize) -> Result<bool> {
        self.is_equalized_along(&CoWeight::fundamental(self.rank(), i)?, cap)
    }
}
