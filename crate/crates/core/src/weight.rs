use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{CheckedMul, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, dot_int, to_exact_string, Rational};

/// Exact coefficients of a weight in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    #[serde(with = "crate::rational::serde_exact_vec")]
    coeffs: Vec<Rational>,
}

impl WeightVector {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_integers(v: &[i64]) -> Self {
        Self { coeffs: v.iter().map(|&x| Rational::from_integer(x)).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); n] }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.coeffs.len() == n {
            Ok(())
        } else {
            Err(Error::WeightLength { expected: n, got: self.coeffs.len() })
        }
    }

    /// Smallest positive integer clearing every denominator.
    pub fn denominator_lcm(&self) -> i64 {
        denominator_lcm(&self.coeffs)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|q| q.is_integer())
    }

    /// Integer coefficients of `scale · self`; `None` if not integral.
    pub fn scaled_integers(&self, scale: i64) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|q| {
                let s = q.checked_mul(&Rational::from_integer(scale))?;
                s.is_integer().then(|| *s.numer())
            })
            .collect()
    }

    pub fn scale(&self, k: i64) -> WeightVector {
        Self { coeffs: self.coeffs.iter().map(|q| q * k).collect() }
    }

    pub fn div(&self, k: i64) -> WeightVector {
        Self { coeffs: self.coeffs.iter().map(|q| q / k).collect() }
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(to_exact_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `Σ c_i ω_i^∨` with nonnegative integer `c`: reads off a weighted sum of
/// simple-root coefficients, i.e. a one-parameter subgroup of the torus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoWeight(Vec<u32>);

impl CoWeight {
    pub fn new(coeffs: Vec<u32>) -> Self {
        Self(coeffs)
    }

    /// `ω_i^∨` for 1-based `i`.
    pub fn fundamental(n: usize, i: usize) -> Result<Self> {
        if !(1..=n).contains(&i) {
            return Err(Error::InvalidNode { node: i, rank: n });
        }
        let mut c = vec![0; n];
        c[i - 1] = 1;
        Ok(Self(c))
    }

    /// `ρ^∨ = Σ ω_i^∨`, which is positive on every positive root.
    pub fn rho(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Validates length and nonzeroness for use as a downgrading.
    pub fn check_downgrading(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::CoWeightLength { expected: n, got: self.0.len() });
        }
        if self.is_zero() {
            return Err(Error::ZeroCoWeight);
        }
        Ok(())
    }

    /// `Σ c_i m_i(w)`.
    pub fn pairing(&self, w: &WeightVector) -> Result<Rational> {
        w.check_len(self.0.len())?;
        let ints: Vec<i64> = self.0.iter().map(|&c| c as i64).collect();
        dot_int(w.coeffs(), &ints)
    }

    #[inline]
    pub fn pairing_int(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(&c, &x)| c as i64 * x).sum()
    }

    /// Index `i` (1-based) if this is a single `ω_i^∨`.
    pub fn as_fundamental(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..self.0.len()).filter(|&k| self.0[k] != 0).collect();
        (nz.len() == 1 && self.0[nz[0]] == 1).then(|| nz[0] + 1)
    }
}

impl fmt::Display for CoWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;
    use crate::roots::RootSystem;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn fundamental_weight_a_n() {
        for n in 1..=8i64 {
            let w = sys(&format!("A{n}")).fundamental_weight(1).unwrap();
            let expect: Vec<Rational> = (0..n).map(|k| q(n - k, n + 1)).collect();
            assert_eq!(w.coeffs(), &expect[..]);
        }
    }

    #[test]
    fn fundamental_weight_d_n_and_c_n() {
        for n in 4..=8usize {
            let w = sys(&format!("D{n}")).fundamental_weight(1).unwrap();
            let mut expect = vec![Rational::one(); n - 2];
            expect.extend([q(1, 2), q(1, 2)]);
            assert_eq!(w.coeffs(), &expect[..]);
        }
        for n in 2..=8usize {
            let w = sys(&format!("C{n}")).fundamental_weight(1).unwrap();
            let mut expect = vec![Rational::one(); n - 1];
            expect.push(q(1, 2));
            assert_eq!(w.coeffs(), &expect[..]);
        }
    }

    #[test]
    fn duality_with_simple_coroots() {
        for t in DynkinType::all_up_to(8) {
            let s = RootSystem::new(t);
            let n = s.rank();
            for j in 1..=n {
                let w = s.fundamental_weight(j).unwrap();
                // denominators divide det C
                assert_eq!(s.cartan().determinant() % w.denominator_lcm(), 0);
                for i in 1..=n {
                    let expect = if i == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(s.coroot_pairing(i, &w).unwrap(), expect, "{t} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn coroot_pairing_on_simple_roots_reads_cartan() {
        let s = sys("F4");
        for i in 1..=4 {
            for j in 1..=4 {
                let alpha = crate::roots::RootVector::simple(4, j - 1).to_weight();
                assert_eq!(s.coroot_pairing(i, &alpha).unwrap(), Rational::from_integer(s.cartan().get(i - 1, j - 1)));
            }
        }
        let a2 = sys("A2");
        assert_eq!(a2.coroot_pairing(1, &a2.fundamental_weight(1).unwrap()).unwrap(), Rational::one());
        assert!(a2.coroot_pairing(3, &a2.fundamental_weight(1).unwrap()).is_err());
    }

    #[test]
    fn coweight_pairing_examples() {
        let alpha1 = WeightVector::from_integers(&[1, 0, 0]);
        assert_eq!(CoWeight::fundamental(3, 1).unwrap().pairing(&alpha1).unwrap(), Rational::one());
        for n in 2..=8usize {
            let w = sys(&format!("C{n}")).fundamental_weight(1).unwrap();
            assert_eq!(CoWeight::fundamental(n, n).unwrap().pairing(&w).unwrap(), q(1, 2));
        }
    }

    #[test]
    fn e6_node6_marked_roots_are_16() {
        let s = sys("E6");
        let c = CoWeight::fundamental(6, 6).unwrap();
        let positives = s.positive_roots().iter().filter(|r| c.pairing_int(r.coeffs()) > 0).count();
        assert_eq!(positives, 16);
    }

    #[test]
    fn downgrading_validation() {
        assert_eq!(CoWeight::new(vec![0, 0]).check_downgrading(2), Err(Error::ZeroCoWeight));
        assert!(CoWeight::new(vec![1]).check_downgrading(2).is_err());
        assert_eq!(CoWeight::new(vec![0, 1, 0]).as_fundamental(), Some(2));
        assert_eq!(CoWeight::new(vec![0, 2, 0]).as_fundamental(), None);
    }
}
