use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

/// Polynomial in one variable `q` with nonnegative integer coefficients,
/// lowest degree first, no trailing zeros. `q` has complex degree 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial(Vec<u64>);

impl Polynomial {
    pub fn zero() -> Self {
        Self(vec![])
    }

    pub fn monomial(degree: usize) -> Self {
        let mut c = vec![0; degree + 1];
        c[degree] = 1;
        Self(c)
    }

    pub fn from_coeffs(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Self(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add_monomial(&mut self, degree: usize, count: u64) {
        if count == 0 {
            return;
        }
        if self.0.len() <= degree {
            self.0.resize(degree + 1, 0);
        }
        self.0[degree] += count;
    }

    /// `q^d · self`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; d];
        c.extend_from_slice(&self.0);
        Self(c)
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.0.iter().rev().fold(0i128, |acc, &c| acc * q + c as i128)
    }

    /// `q^d · P(1/q)`; requires `d >= degree`.
    pub fn reflect(&self, d: usize) -> Self {
        let mut c = vec![0; d + 1];
        for (k, &v) in self.0.iter().enumerate() {
            c[d - k] = v;
        }
        Self::from_coeffs(c)
    }

    /// Coefficients read the same from both ends and the constant term is
    /// nonzero.
    pub fn is_palindromic(&self) -> bool {
        !self.0.is_empty() && self.0[0] != 0 && self.0.iter().eq(self.0.iter().rev())
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (d, &c) in rhs.0.iter().enumerate() {
            self.add_monomial(d, c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}q^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
