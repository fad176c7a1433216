use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::grassmannian::GeneralizedGrassmannian;
use crate::poly::Polynomial;
use crate::weight::CoWeight;

use super::levels::{ComponentRecord, LevelOptions};

/// Both additive decompositions of the Poincaré polynomial induced by one
/// downgrading: `P_X = Σ q^{ν₊(c)} P_c = Σ q^{ν₋(c)} P_c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BBDecomposition {
    pub dynkin_type: DynkinType,
    pub node: usize,
    pub direction: CoWeight,
    pub total: Polynomial,
    pub components: Vec<ComponentRecord>,
    /// `2·ν₊` per component, in real degrees.
    pub plus_shifts: Vec<u32>,
    /// `2·ν₋` per component, in real degrees.
    pub minus_shifts: Vec<u32>,
}

impl BBDecomposition {
    pub fn plus_sum(&self) -> Polynomial {
        self.components.iter().map(|c| c.poincare.shift(c.nu_plus as usize)).sum()
    }

    pub fn minus_sum(&self) -> Polynomial {
        self.components.iter().map(|c| c.poincare.shift(c.nu_minus as usize)).sum()
    }

    /// Human-readable `P_X = ...` for the `ν₊` decomposition.
    pub fn plus_formula(&self) -> String {
        let terms: Vec<String> = self
            .components
            .iter()
            .map(|c| match c.nu_plus {
                0 => format!("({})", c.poincare),
                d => format!("q^{d}·({})", c.poincare),
            })
            .collect();
        terms.join(" + ")
    }
}

impl GeneralizedGrassmannian {
    /// `Σ q^{ν₋}` over fixed points for the generic direction `ρ^∨`.
    pub fn poincare_polynomial(&self, cap: usize) -> Result<Polynomial> {
        let orbit = self.orbit(cap)?;
        let mut signs = Vec::new();
        let mut p = Polynomial::zero();
        for mu in orbit.points() {
            self.compass_signs(mu, &mut signs);
            // ρ^∨ is positive on positive roots, so sign of ρ^∨(γ) is the sign of γ
            p.add_monomial(signs.iter().filter(|&&s| s < 0).count(), 1);
        }
        Ok(p)
    }

    /// Białynicki-Birula decompositions for the downgrading along `α_i`,
    /// with both identities verified.
    pub fn bb_decomposition(&self, i: usize, cap: usize) -> Result<BBDecomposition> {
        self.bb_decomposition_along(&CoWeight::fundamental(self.rank(), i)?, cap)
    }

    pub fn bb_decomposition_along(&self, c: &CoWeight, cap: usize) -> Result<BBDecomposition> {
        let dec = self.levels_along(c, LevelOptions { cap, retain_points: false })?;
        let total = self.poincare_polynomial(cap)?;
        let components: Vec<ComponentRecord> = dec.components().cloned().collect();
        let bb = BBDecomposition {
            dynkin_type: self.dynkin_type(),
            node: self.node(),
            direction: c.clone(),
            plus_shifts: components.iter().map(|c| 2 * c.nu_plus).collect(),
            minus_shifts: components.iter().map(|c| 2 * c.nu_minus).collect(),
            components,
            total,
        };
        let plus = bb.plus_sum();
        if plus != bb.total {
            return Err(Error::DecompositionIdentity(format!("ν₊ sum {plus} differs from {}", bb.total)));
        }
        let minus = bb.minus_sum();
        if minus != bb.total {
            return Err(Error::DecompositionIdentity(format!("ν₋ sum {minus} differs from {}", bb.total)));
        }
        Ok(bb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_ORBIT_CAP as CAP;

    fn x(t: &str, j: usize) -> GeneralizedGrassmannian {
        GeneralizedGrassmannian::parse(t, j).unwrap()
    }

    fn quadric(dim: usize) -> Polynomial {
        let mut p = Polynomial::zero();
        for d in 0..=dim {
            p.add_monomial(d, 1);
        }
        if dim.is_multiple_of(2) {
            p.add_monomial(dim / 2, 1);
        }
        p
    }

    #[test]
    fn projective_space_and_quadric() {
        for n in 1..=6 {
            assert_eq!(x(&format!("A{n}"), 1).poincare_polynomial(CAP).unwrap(), Polynomial::from_coeffs(vec![1; n + 1]));
        }
        assert_eq!(x("D5", 1).poincare_polynomial(CAP).unwrap().coeffs(), &[1, 1, 1, 1, 2, 1, 1, 1, 1]);
        for n in 3..=7 {
            assert_eq!(x(&format!("B{n}"), 1).poincare_polynomial(CAP).unwrap(), quadric(2 * n - 1));
        }
        assert_eq!(x("E6", 6).poincare_polynomial(CAP).unwrap().eval(1), 27);
    }

    #[test]
    fn ranks_are_coset_lengths() {
        let g = x("E6", 3);
        let orbit = g.orbit(CAP).unwrap();
        let mut by_depth = Polynomial::zero();
        for k in 0..orbit.len() {
            by_depth.add_monomial(orbit.depth(k), 1);
        }
        assert_eq!(g.poincare_polynomial(CAP).unwrap(), by_depth);
    }

    #[test]
    fn cayley_plane_decomposition() {
        let bb = x("E6", 6).bb_decomposition(6, CAP).unwrap();
        let by_size = |n: usize| bb.components.iter().find(|c| c.size == n).unwrap();
        let q8 = by_size(10);
        let spinor = by_size(16);
        assert_eq!(q8.poincare, quadric(8));
        assert_eq!(spinor.poincare, x("D5", 5).poincare_polynomial(CAP).unwrap());
        let mut expected = q8.poincare.clone();
        expected += &spinor.poincare.shift(5);
        expected += &Polynomial::monomial(16);
        assert_eq!(bb.total, expected);
        let mut shifts = bb.plus_shifts.clone();
        shifts.sort();
        assert_eq!(shifts, vec![0, 10, 32]);
    }

    #[test]
    fn quadric_decomposition() {
        for n in 4..=7 {
            let bb = x(&format!("D{n}"), 1).bb_decomposition(1, CAP).unwrap();
            let mut expected = Polynomial::monomial(0);
            expected += &quadric(2 * n - 4).shift(1);
            expected += &Polynomial::monomial(2 * n - 2);
            assert_eq!(bb.total, expected);
            assert_eq!(bb.total, quadric(2 * n - 2));
        }
    }
}
