//! Weyl-group action on weights. Group elements are never materialized:
//! only orbits of weights and one reduced word per orbit element are kept.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dynkin::DiagramAutomorphism;
use crate::error::{Error, Result};
use crate::rational::{checked_mul, checked_sub, Rational};
use crate::roots::RootSystem;
use crate::weight::WeightVector;

/// Covers every generalized Grassmannian through E8 (largest orbit 483 840).
pub const DEFAULT_ORBIT_CAP: usize = 2_000_000;

/// A full Weyl orbit in lexicographic order, with one reduced word per
/// element when requested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightOrbit {
    pub elements: Vec<WeightVector>,
    /// `witnesses[k]` applied left to right (1-based nodes) to the dominant
    /// element reproduces `elements[k]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<usize>>>,
}

impl WeightOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.elements.binary_search(w).is_ok()
    }
}

/// Orbit of an integral weight, stored flat and sorted lexicographically.
///
/// Built by descending from the dominant element: from `μ` only the
/// reflections with `α_i^∨(μ) > 0` are followed, so breadth-first depth is
/// the length of the minimal coset representative and every parent chain is
/// a reduced word.
#[derive(Debug, Clone)]
pub struct IntOrbit {
    n: usize,
    coords: Vec<i64>,
    /// `(parent, node)` with 0-based node; `None` for the dominant element.
    parent: Vec<Option<(u32, u8)>>,
    depth: Vec<u32>,
    dominant: usize,
}

impl IntOrbit {
    pub fn build(sys: &RootSystem, start: &[i64], cap: usize) -> Result<Self> {
        let n = sys.rank();
        let mut dominant = start.to_vec();
        sys.descend_int(&mut dominant, |p| p < 0);
        let required = sys.orbit_size_of_dominant(&dominant);
        if required > cap as u128 {
            return Err(Error::OrbitCapExceeded { cap, required });
        }
        let size = required as usize;

        let mut seen: HashMap<Vec<i64>, u32> = HashMap::with_capacity(size);
        let mut order: Vec<Vec<i64>> = Vec::with_capacity(size);
        let mut parent: Vec<Option<(u32, u8)>> = Vec::with_capacity(size);
        let mut depth: Vec<u32> = Vec::with_capacity(size);
        seen.insert(dominant.clone(), 0);
        order.push(dominant);
        parent.push(None);
        depth.push(0);
        let mut head = 0;
        while head < order.len() {
            let mu = order[head].clone();
            for i in 0..n {
                let p = sys.simple_pairing_int(i, &mu);
                if p > 0 {
                    let mut child = mu.clone();
                    child[i] -= p;
                    if !seen.contains_key(&child) {
                        seen.insert(child.clone(), order.len() as u32);
                        order.push(child);
                        parent.push(Some((head as u32, i as u8)));
                        depth.push(depth[head] + 1);
                    }
                }
            }
            head += 1;
        }
        debug_assert_eq!(order.len(), size);
        drop(seen);

        let mut perm: Vec<u32> = (0..order.len() as u32).collect();
        perm.sort_unstable_by(|&a, &b| order[a as usize].cmp(&order[b as usize]));
        let mut rank_of = vec![0u32; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            rank_of[old as usize] = new as u32;
        }
        let mut coords = Vec::with_capacity(order.len() * n);
        let mut new_parent = Vec::with_capacity(order.len());
        let mut new_depth = Vec::with_capacity(order.len());
        for &old in &perm {
            coords.extend_from_slice(&order[old as usize]);
            new_parent.push(parent[old as usize].map(|(p, i)| (rank_of[p as usize], i)));
            new_depth.push(depth[old as usize]);
        }
        Ok(Self { n, coords, parent: new_parent, depth: new_depth, dominant: rank_of[0] as usize })
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn point(&self, k: usize) -> &[i64] {
        &self.coords[k * self.n..(k + 1) * self.n]
    }

    pub fn points(&self) -> impl Iterator<Item = &[i64]> {
        self.coords.chunks(self.n)
    }

    pub fn dominant_index(&self) -> usize {
        self.dominant
    }

    /// Index of the element with every pairing `<= 0`.
    pub fn antidominant_index(&self, sys: &RootSystem) -> usize {
        (0..self.len())
            .find(|&k| (0..self.n).all(|i| sys.simple_pairing_int(i, self.point(k)) <= 0))
            .expect("every orbit has an antidominant element")
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.point(mid).cmp(v) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Length of the reduced word reaching element `k`.
    pub fn depth(&self, k: usize) -> usize {
        self.depth[k] as usize
    }

    /// Parent in the descent tree and the 0-based node of the connecting
    /// reflection.
    pub fn parent(&self, k: usize) -> Option<(usize, usize)> {
        self.parent[k].map(|(p, i)| (p as usize, i as usize))
    }

    /// Reduced word (1-based nodes, applied left to right) from the dominant
    /// element to element `k`.
    pub fn witness(&self, k: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.depth(k));
        let mut cur = k;
        while let Some((p, i)) = self.parent(cur) {
            word.push(i + 1);
            cur = p;
        }
        word.reverse();
        word
    }

    /// Indices ordered so that every parent precedes its children.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&k| (self.depth[k], k));
        idx
    }
}

impl RootSystem {
    /// `s_i(λ) = λ - α_i^∨(λ) α_i` for 1-based `i`.
    pub fn reflect(&self, w: &WeightVector, i: usize) -> Result<WeightVector> {
        let p = self.coroot_pairing(i, w)?;
        let mut c = w.coeffs().to_vec();
        c[i - 1] = checked_sub(c[i - 1], p)?;
        Ok(WeightVector::new(c))
    }

    /// Applies a word of 1-based nodes left to right.
    pub fn apply_word(&self, w: &WeightVector, word: &[usize]) -> Result<WeightVector> {
        word.iter().try_fold(w.clone(), |acc, &i| self.reflect(&acc, i))
    }

    /// Reflects a root (given by coefficients) along a word, left to right.
    pub fn apply_word_int(&self, v: &[i64], word: &[usize]) -> Vec<i64> {
        let mut out = v.to_vec();
        for &i in word {
            let p = self.simple_pairing_int(i - 1, &out);
            out[i - 1] -= p;
        }
        out
    }

    /// Repeatedly reflects at the smallest node whose pairing satisfies
    /// `eligible`; returns the 0-based nodes used.
    pub(crate) fn descend_int(&self, v: &mut [i64], eligible: impl Fn(i64) -> bool) -> Vec<usize> {
        let mut word = vec![];
        while let Some(i) = (0..self.rank()).find(|&i| eligible(self.simple_pairing_int(i, v))) {
            let p = self.simple_pairing_int(i, v);
            v[i] -= p;
            word.push(i);
            assert!(word.len() <= self.positive_roots().len(), "descent exceeded the longest element length");
        }
        word
    }

    /// The unique orbit element with all pairings `<= 0`, and the 1-based
    /// word reaching it (always reflecting at the smallest eligible node).
    pub fn antidominant_with_word(&self, w: &WeightVector) -> Result<(WeightVector, Vec<usize>)> {
        w.check_len(self.rank())?;
        let mut cur = w.clone();
        let mut word = vec![];
        loop {
            let mut next = None;
            for i in 1..=self.rank() {
                if self.coroot_pairing(i, &cur)? > Rational::zero() {
                    next = Some(i);
                    break;
                }
            }
            match next {
                Some(i) => {
                    cur = self.reflect(&cur, i)?;
                    word.push(i);
                    assert!(word.len() <= self.positive_roots().len(), "descent exceeded the longest element length");
                }
                None => return Ok((cur, word)),
            }
        }
    }

    pub fn antidominant(&self, w: &WeightVector) -> Result<WeightVector> {
        Ok(self.antidominant_with_word(w)?.0)
    }

    /// The unique orbit element with all pairings `>= 0`.
    pub fn dominant(&self, w: &WeightVector) -> Result<WeightVector> {
        Ok(&WeightVector::zero(self.rank()) - &self.antidominant(&-w)?)
    }

    /// `σ` with `w_◦(α_i) = -α_σ(i)`, read off from the antidominant images of
    /// the fundamental weights: `antidominant(ω_i) = -ω_σ(i)`.
    pub fn opposition_involution(&self) -> DiagramAutomorphism {
        let n = self.rank();
        let fundamentals: Vec<WeightVector> =
            (1..=n).map(|j| self.fundamental_weight(j).expect("valid node")).collect();
        let images: Vec<usize> = fundamentals
            .iter()
            .map(|w| {
                let neg = -&self.antidominant(w).expect("fundamental weights are well formed");
                fundamentals.iter().position(|f| *f == neg).expect("w_0 permutes fundamental weights up to sign") + 1
            })
            .collect();
        DiagramAutomorphism::from_images(&images)
    }

    /// `|W| / |W_λ|` for a dominant integral `λ`.
    pub fn orbit_size_of_dominant(&self, dominant: &[i64]) -> u128 {
        let all: Vec<usize> = (0..self.rank()).collect();
        let stab: Vec<usize> = all.iter().copied().filter(|&i| self.simple_pairing_int(i, dominant) == 0).collect();
        self.cartan().weyl_group_order(&all) / self.cartan().weyl_group_order(&stab)
    }

    pub fn weyl_group_order(&self) -> u128 {
        self.cartan().weyl_group_order(&(0..self.rank()).collect::<Vec<_>>())
    }

    pub fn orbit(&self, w: &WeightVector) -> Result<WeightOrbit> {
        self.orbit_capped(w, DEFAULT_ORBIT_CAP, false)
    }

    pub fn orbit_with_witnesses(&self, w: &WeightVector) -> Result<WeightOrbit> {
        self.orbit_capped(w, DEFAULT_ORBIT_CAP, true)
    }

    pub fn orbit_capped(&self, w: &WeightVector, cap: usize, witnesses: bool) -> Result<WeightOrbit> {
        w.check_len(self.rank())?;
        let scale = w.denominator_lcm();
        let ints = w.scaled_integers(scale).ok_or(Error::Overflow)?;
        let orbit = IntOrbit::build(self, &ints, cap)?;
        let elements = orbit
            .points()
            .map(|p| {
                let coeffs = p.iter().map(|&x| Rational::new(x, scale)).collect();
                WeightVector::new(coeffs)
            })
            .collect();
        let witnesses = witnesses.then(|| (0..orbit.len()).map(|k| orbit.witness(k)).collect());
        Ok(WeightOrbit { elements, witnesses })
    }
}

/// `c·α` as an exact weight; used by tests and reports.
pub fn scaled_root(alpha: &[i64], c: Rational) -> Result<WeightVector> {
    alpha
        .iter()
        .map(|&a| checked_mul(c, Rational::from_integer(a)))
        .collect::<Result<Vec<_>>>()
        .map(WeightVector::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{DynkinType, Family};
    use std::collections::{BTreeSet, HashSet};

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn reflect_examples() {
        let a2 = sys("A2");
        let w1 = a2.fundamental_weight(1).unwrap();
        let w2 = a2.fundamental_weight(2).unwrap();
        let alpha1 = WeightVector::from_integers(&[1, 0]);
        assert_eq!(a2.reflect(&w1, 1).unwrap(), &w1 - &alpha1);
        assert_eq!(a2.reflect(&w2, 1).unwrap(), w2);
        for t in DynkinType::all_up_to(8) {
            let s = RootSystem::new(t);
            let a = WeightVector::from_integers(&crate::roots::RootVector::simple(s.rank(), 0).0);
            assert_eq!(s.reflect(&a, 1).unwrap(), -&a);
        }
    }

    /// Oracle: naive closure under all simple reflections, no descent logic.
    fn naive_orbit(s: &RootSystem, w: &WeightVector) -> BTreeSet<WeightVector> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![w.clone()];
        seen.insert(w.clone());
        while let Some(x) = stack.pop() {
            for i in 1..=s.rank() {
                let y = s.reflect(&x, i).unwrap();
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn orbit_sizes() {
        for n in 1..=7 {
            let s = sys(&format!("A{n}"));
            assert_eq!(s.orbit(&s.fundamental_weight(1).unwrap()).unwrap().len(), n + 1);
        }
        let e6 = sys("E6");
        assert_eq!(e6.orbit(&e6.fundamental_weight(6).unwrap()).unwrap().len(), 27);
        let d5 = sys("D5");
        assert_eq!(d5.orbit(&d5.fundamental_weight(5).unwrap()).unwrap().len(), 16);
    }

    #[test]
    fn orbit_matches_naive_closure() {
        for t in DynkinType::all_up_to(4) {
            let s = RootSystem::new(t);
            for j in 1..=s.rank() {
                let w = s.fundamental_weight(j).unwrap();
                let fast = s.orbit(&w).unwrap();
                let naive: Vec<WeightVector> = naive_orbit(&s, &w).into_iter().collect();
                assert_eq!(fast.elements, naive, "{t} ω{j}");
            }
        }
        // a non-dominant, non-fundamental start point
        let b3 = sys("B3");
        let w = WeightVector::new(vec![Rational::new(-1, 2), Rational::from_integer(2), Rational::new(3, 2)]);
        let naive: Vec<WeightVector> = naive_orbit(&b3, &w).into_iter().collect();
        assert_eq!(b3.orbit(&w).unwrap().elements, naive);
    }

    #[test]
    fn witnesses_reproduce_elements() {
        for t in ["A1", "B3", "G2", "D4", "E6", "F4"] {
            let s = sys(t);
            for j in 1..=s.rank() {
                let w = s.fundamental_weight(j).unwrap();
                let orbit = s.orbit_with_witnesses(&w).unwrap();
                let words = orbit.witnesses.as_ref().unwrap();
                for (el, word) in orbit.elements.iter().zip(words) {
                    assert_eq!(&s.apply_word(&w, word).unwrap(), el);
                    assert!(word.len() <= s.positive_roots().len());
                }
                let dom = orbit.elements.iter().position(|e| *e == w).unwrap();
                assert!(words[dom].is_empty());
            }
        }
        let a1 = sys("A1");
        let orbit = a1.orbit_with_witnesses(&a1.fundamental_weight(1).unwrap()).unwrap();
        let anti = orbit.elements.iter().position(|e| e.coeffs()[0] < Rational::zero()).unwrap();
        assert_eq!(orbit.witnesses.unwrap()[anti], vec![1]);
    }

    #[test]
    fn witness_lengths_are_bfs_depths() {
        // Oracle: plain BFS over all reflections gives graph distances.
        let s = sys("C3");
        let w = s.fundamental_weight(2).unwrap();
        let orbit = s.orbit_with_witnesses(&w).unwrap();
        let mut dist = std::collections::HashMap::new();
        dist.insert(w.clone(), 0usize);
        let mut queue = std::collections::VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 1..=3 {
                let y = s.reflect(&x, i).unwrap();
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), dist[&x] + 1);
                    queue.push_back(y);
                }
            }
        }
        for (el, word) in orbit.elements.iter().zip(orbit.witnesses.unwrap()) {
            assert_eq!(word.len(), dist[el]);
        }
    }

    #[test]
    fn antidominant_examples() {
        for n in 2..=8 {
            let b = sys(&format!("B{n}"));
            for j in 1..=n {
                let w = b.fundamental_weight(j).unwrap();
                assert_eq!(b.antidominant(&w).unwrap(), -&w);
            }
            let a = sys(&format!("A{n}"));
            assert_eq!(a.antidominant(&a.fundamental_weight(1).unwrap()).unwrap(), -&a.fundamental_weight(n).unwrap());
        }
        let e6 = sys("E6");
        assert_eq!(e6.antidominant(&e6.fundamental_weight(1).unwrap()).unwrap(), -&e6.fundamental_weight(6).unwrap());
    }

    #[test]
    fn descent_is_bounded_by_number_of_positive_roots() {
        for t in DynkinType::all_up_to(8) {
            let s = RootSystem::new(t);
            let rho = (1..=s.rank()).fold(WeightVector::zero(s.rank()), |acc, j| &acc + &s.fundamental_weight(j).unwrap());
            let (_, word) = s.antidominant_with_word(&rho).unwrap();
            // ρ is regular: its descent realizes the longest element exactly
            assert_eq!(word.len(), s.positive_roots().len(), "{t}");
        }
    }

    #[test]
    fn opposition_involution_cases() {
        let images = |s: &str| sys(s).opposition_involution().images();
        assert_eq!(images("A4"), vec![4, 3, 2, 1]);
        assert_eq!(images("E6"), vec![6, 2, 5, 4, 3, 1]);
        assert_eq!(images("B5"), vec![1, 2, 3, 4, 5]);
        assert_eq!(images("D4"), vec![1, 2, 3, 4]);
        assert_eq!(images("D5"), vec![1, 2, 3, 5, 4]);
        for t in DynkinType::all_up_to(8) {
            let s = RootSystem::new(t);
            let sigma = s.opposition_involution();
            assert!(sigma.compose(&sigma).is_identity());
            assert!(sigma.preserves(s.cartan()));
        }
    }

    #[test]
    fn every_orbit_has_one_dominant_and_one_antidominant() {
        for t in DynkinType::all_up_to(5) {
            let s = RootSystem::new(t);
            for j in 1..=s.rank() {
                let orbit = s.orbit(&s.fundamental_weight(j).unwrap()).unwrap();
                let pairings = |w: &WeightVector| (1..=s.rank()).map(|i| s.coroot_pairing(i, w).unwrap()).collect::<Vec<_>>();
                let dom = orbit.elements.iter().filter(|w| pairings(w).iter().all(|p| *p >= Rational::zero())).count();
                let anti = orbit.elements.iter().filter(|w| pairings(w).iter().all(|p| *p <= Rational::zero())).count();
                assert_eq!((dom, anti), (1, 1));
                for w in &orbit.elements {
                    for i in 1..=s.rank() {
                        assert_eq!(s.reflect(&s.reflect(w, i).unwrap(), i).unwrap(), *w);
                        assert!(orbit.contains(&s.reflect(w, i).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced_with_required_size() {
        let e8 = RootSystem::new(DynkinType::new(Family::E, 8).unwrap());
        let err = e8.orbit_capped(&e8.fundamental_weight(4).unwrap(), 1000, false).unwrap_err();
        assert_eq!(err, Error::OrbitCapExceeded { cap: 1000, required: 483_840 });
    }

    #[test]
    fn orbit_is_deterministic() {
        let s = sys("F4");
        let w = s.fundamental_weight(2).unwrap();
        let a = s.orbit_with_witnesses(&w).unwrap();
        let b = s.orbit_with_witnesses(&w).unwrap();
        assert_eq!(a, b);
        let unique: HashSet<_> = a.elements.iter().collect();
        assert_eq!(unique.len(), a.len());
        assert!(a.elements.windows(2).all(|p| p[0] < p[1]));
    }
}
