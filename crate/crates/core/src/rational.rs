//! Exact rationals with checked 64-bit numerator and denominator.
//!
//! Denominators appearing in this crate divide the determinant of a Cartan
//! matrix, so `i64` is far from its limits; every arithmetic step that can
//! grow still goes through the checked variants and reports
//! [`Error::Overflow`] rather than wrapping.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

pub(crate) fn checked_add(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

pub(crate) fn checked_sub(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_sub(&b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: Rational, b: Rational) -> Result<Rational> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

/// Dot product of a rational vector with an integer vector.
pub(crate) fn dot_int(coeffs: &[Rational], ints: &[i64]) -> Result<Rational> {
    coeffs.iter().zip(ints).try_fold(Rational::zero(), |acc, (q, &m)| {
        checked_add(acc, checked_mul(*q, Rational::from_integer(m))?)
    })
}

/// Least common multiple of the denominators, 1 for an empty slice.
pub fn denominator_lcm(coeffs: &[Rational]) -> i64 {
    coeffs.iter().fold(1i64, |acc, q| acc.lcm(q.denom()))
}

/// Formats as `"num/den"`, or just `"num"` when the value is an integer.
pub fn to_exact_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Inverse of [`to_exact_string`]; also accepts non-normalized input.
pub fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Rational::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

/// Serde adapter storing a [`Rational`] as an exact string.
pub mod serde_exact {
    use super::{parse_exact, to_exact_string, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_exact_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_exact(&s).ok_or_else(|| D::Error::custom(format!("not an exact rational: {s:?}")))
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_exact_vec {
    use super::{parse_exact, to_exact_string, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_exact_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_exact(s).ok_or_else(|| D::Error::custom(format!("not an exact rational: {s:?}"))))
            .collect()
    }
}
