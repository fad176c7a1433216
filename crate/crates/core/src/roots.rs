//! Positive roots and their coroots, generated from the Cartan matrix alone.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanMatrix;
use crate::dynkin::DynkinType;
use crate::error::Result;
use crate::rational::Rational;
use crate::weight::WeightVector;

/// Integer coefficients of a root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&m| m >= 0) && self.0.iter().any(|&m| m > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&m| m <= 0) && self.0.iter().any(|&m| m < 0)
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|m| -m).collect())
    }

    pub fn to_weight(&self) -> WeightVector {
        WeightVector::from_integers(&self.0)
    }
}

/// Cached combinatorial data of one root system. Immutable after
/// construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: DynkinType,
    cartan: CartanMatrix,
    inverse: Vec<Vec<Rational>>,
    positive: Vec<RootVector>,
    /// `coroots[k]` is the coroot of `positive[k]` in the simple-coroot basis.
    coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(ty: DynkinType) -> Self {
        let cartan = ty.cartan_matrix();
        let inverse = cartan.inverse().expect("finite-type Cartan matrices are invertible");
        let positive = generate_positive_roots(&cartan);
        let coroots = compute_coroots(&cartan, &positive);
        Self { ty, cartan, inverse, positive, coroots }
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn coroot(&self, root_index: usize) -> &[i64] {
        &self.coroots[root_index]
    }

    pub fn highest_root(&self) -> &RootVector {
        self.positive.last().expect("root systems are nonempty")
    }

    /// Pairing of simple coroot `i` (0-based) with an integral vector in the
    /// simple-root basis.
    #[inline]
    pub fn simple_pairing_int(&self, i: usize, v: &[i64]) -> i64 {
        self.cartan.row(i).iter().zip(v).map(|(c, x)| c * x).sum()
    }

    /// Pairing of the coroot of `positive_roots()[root_index]` with an
    /// integral vector.
    #[inline]
    pub fn root_pairing_int(&self, root_index: usize, v: &[i64]) -> i64 {
        self.coroots[root_index]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(k, &b)| b * self.simple_pairing_int(k, v))
            .sum()
    }

    /// `α_k^∨(v)` for every simple coroot.
    pub fn simple_pairings(&self, v: &[i64], out: &mut Vec<i64>) {
        out.clear();
        out.extend((0..self.rank()).map(|k| self.simple_pairing_int(k, v)));
    }

    /// `β^∨(v)` given the simple pairings of `v`.
    #[inline]
    pub fn root_pairing_from_simple(&self, root_index: usize, simple: &[i64]) -> i64 {
        self.coroots[root_index].iter().zip(simple).map(|(b, p)| b * p).sum()
    }

    /// Index of a positive root, if `v` is one.
    pub fn positive_root_index(&self, v: &[i64]) -> Option<usize> {
        self.positive.iter().position(|r| r.0 == v)
    }

    /// `ω_j` (1-based `j`): the `j`-th column of the inverse Cartan matrix.
    pub fn fundamental_weight(&self, j: usize) -> Result<WeightVector> {
        self.ty.check_node(j)?;
        Ok(WeightVector::new(self.inverse.iter().map(|row| row[j - 1]).collect()))
    }

    /// `α_i^∨(w)` for 1-based `i`: `Σ_k m_k(w)·C[i][k]`.
    pub fn coroot_pairing(&self, i: usize, w: &WeightVector) -> Result<Rational> {
        self.ty.check_node(i)?;
        w.check_len(self.rank())?;
        crate::rational::dot_int(w.coeffs(), self.cartan.row(i - 1))
    }

    /// Whether all coroot pairings are `>= 0`.
    pub fn is_dominant(&self, w: &WeightVector) -> bool {
        (1..=self.rank()).all(|i| self.coroot_pairing(i, w).map(|p| p >= Rational::from_integer(0)).unwrap_or(false))
    }
}

/// Breadth-first saturation by height using the root-string criterion.
///
/// For a positive root `β ≠ α_i`, the `α_i`-string through `β` runs from
/// `β - pα_i` to `β + qα_i` with `p - q = α_i^∨(β)`. All roots of smaller
/// height are already known when `β` is processed, so `p` is read off the
/// set and `β + α_i` is a root iff `q > 0`.
pub fn generate_positive_roots(cartan: &CartanMatrix) -> Vec<RootVector> {
    let n = cartan.rank();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut all = vec![];
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| RootVector::simple(n, i).0).collect();
    known.extend(layer.iter().cloned());
    while !layer.is_empty() {
        layer.sort();
        let mut next = vec![];
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = cartan.row(i).iter().zip(beta).map(|(c, x)| c * x).sum();
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(layer.drain(..).map(RootVector));
        layer = next;
    }
    all
}

fn compute_coroots(cartan: &CartanMatrix, positive: &[RootVector]) -> Vec<Vec<i64>> {
    let n = cartan.rank();
    let pair = |i: usize, v: &[i64]| -> i64 { cartan.row(i).iter().zip(v).map(|(c, x)| c * x).sum() };
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(positive.len());
    for gamma in positive {
        let g = gamma.coeffs();
        if gamma.height() == 1 {
            out.push(g.to_vec());
            continue;
        }
        // s_i lowers γ for any i with α_i^∨(γ) > 0; transport the coroot back.
        let i = (0..n).find(|&i| pair(i, g) > 0).expect("non-simple positive roots have a descent");
        let mut lower = g.to_vec();
        lower[i] -= pair(i, g);
        let k = positive.iter().position(|r| r.0 == lower).expect("reflection of a root is a root");
        let mut co = out[k].clone();
        // s_i on coroots: b ↦ b - <b, α_i> α_i^∨, <b, α_i> = Σ_k b_k C[k][i]
        let shift: i64 = (0..n).map(|k| co[k] * cartan.get(k, i)).sum();
        co[i] -= shift;
        out.push(co);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::Family;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    /// Independent oracle: close the simple roots under simple reflections.
    fn reflection_closure(cartan: &CartanMatrix) -> usize {
        let n = cartan.rank();
        let mut seen: HashSet<Vec<i64>> = (0..n).map(|i| RootVector::simple(n, i).0).collect();
        let mut stack: Vec<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(v) = stack.pop() {
            for i in 0..n {
                let p: i64 = cartan.row(i).iter().zip(&v).map(|(c, x)| c * x).sum();
                let mut w = v.clone();
                w[i] -= p;
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        seen.iter().filter(|v| v.iter().all(|&x| x >= 0)).count()
    }

    #[test]
    fn counts_match_dimension_formulas() {
        for n in 1..=8usize {
            assert_eq!(rs(&format!("A{n}")).positive_roots().len(), n * (n + 1) / 2);
            let dim_a = (n + 1) * (n + 1) - 1;
            assert_eq!(n + 2 * rs(&format!("A{n}")).positive_roots().len(), dim_a);
        }
        for n in 2..=8usize {
            for fam in ["B", "C"] {
                assert_eq!(n + 2 * rs(&format!("{fam}{n}")).positive_roots().len(), n * (2 * n + 1));
            }
        }
        for n in 3..=8usize {
            assert_eq!(n + 2 * rs(&format!("D{n}")).positive_roots().len(), n * (2 * n - 1));
        }
        assert_eq!(rs("E6").positive_roots().len(), 36);
        assert_eq!(rs("E7").positive_roots().len(), 63);
        assert_eq!(8 + 2 * rs("E8").positive_roots().len(), 248);
        assert_eq!(rs("F4").positive_roots().len(), 24);
        assert_eq!(rs("G2").positive_roots().len(), 6);
    }

    #[test]
    fn saturation_agrees_with_reflection_closure() {
        for t in DynkinType::all_up_to(8) {
            let sys = RootSystem::new(t);
            assert_eq!(sys.positive_roots().len(), reflection_closure(sys.cartan()), "{t}");
        }
    }

    #[test]
    fn b2_roots() {
        let got: Vec<Vec<i64>> = rs("B2").positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn g2_highest_root() {
        assert_eq!(rs("G2").highest_root().0, vec![3, 2]);
        assert_eq!(rs("E8").highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs("F4").highest_root().0, vec![2, 3, 4, 2]);
    }

    #[test]
    fn coroots_pair_to_two() {
        for t in DynkinType::all_up_to(8) {
            let sys = RootSystem::new(t);
            for (k, r) in sys.positive_roots().iter().enumerate() {
                assert!(r.is_positive());
                assert_eq!(sys.root_pairing_int(k, r.coeffs()), 2, "{t} {r:?}");
            }
        }
    }

    #[test]
    fn long_root_coroot_is_same_vector_in_simply_laced() {
        let sys = RootSystem::new(DynkinType::new(Family::E, 6).unwrap());
        for (k, r) in sys.positive_roots().iter().enumerate() {
            assert_eq!(sys.coroot(k), r.coeffs());
        }
    }
}
