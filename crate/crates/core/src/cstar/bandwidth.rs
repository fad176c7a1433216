use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::grassmannian::GeneralizedGrassmannian;
use crate::rational::Rational;
use crate::weight::CoWeight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeBandwidth {
    pub node: usize,
    /// Bandwidth on `O(1)`.
    #[serde(with = "crate::rational::serde_exact")]
    pub on_o1: Rational,
    /// Bandwidth on `O(k_j)`, always `k_j · on_o1`.
    pub on_ok: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandwidthReport {
    pub dynkin_type: DynkinType,
    pub node: usize,
    pub k: i64,
    pub per_node: Vec<NodeBandwidth>,
    #[serde(with = "crate::rational::serde_exact")]
    pub minimal_value: Rational,
    pub minimal_value_ok: i64,
    /// Sorted 1-based nodes attaining the minimum.
    pub minimizers: Vec<usize>,
}

impl GeneralizedGrassmannian {
    /// Bandwidth of the downgrading along `α_i`:
    /// `m_i(ω_j) - m_i(w_◦ ω_j)`, the difference of the weights at the
    /// dominant and antidominant fixed points. No orbit is enumerated.
    pub fn bandwidth(&self, i: usize) -> Result<NodeBandwidth> {
        self.dynkin_type().check_node(i)?;
        let omega = self.fundamental_weight();
        let low = self.system().antidominant(&omega)?;
        let on_o1 = omega.coeffs()[i - 1] - low.coeffs()[i - 1];
        let scaled = on_o1 * self.k_index();
        if !scaled.is_integer() {
            return Err(Error::Overflow);
        }
        Ok(NodeBandwidth { node: i, on_o1, on_ok: *scaled.numer() })
    }

    pub fn minimal_bandwidth(&self) -> BandwidthReport {
        let per_node: Vec<NodeBandwidth> =
            (1..=self.rank()).map(|i| self.bandwidth(i).expect("node in range")).collect();
        let minimal_value = per_node.iter().map(|b| b.on_o1).min().expect("rank >= 1");
        let minimizers = per_node.iter().filter(|b| b.on_o1 == minimal_value).map(|b| b.node).collect();
        BandwidthReport {
            dynkin_type: self.dynkin_type(),
            node: self.node(),
            k: self.k_index(),
            minimal_value_ok: *(minimal_value * self.k_index()).numer(),
            per_node,
            minimal_value,
            minimizers,
        }
    }

    /// Brute force: spread of `c` over all fiber weights on `O(k_j)`.
    pub fn bandwidth_oracle(&self, c: &CoWeight, cap: usize) -> Result<i64> {
        c.check_downgrading(self.rank())?;
        let orbit = self.orbit(cap)?;
        let (lo, hi) = orbit
            .points()
            .map(|p| c.pairing_int(p))
            .fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
        Ok(hi - lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_ORBIT_CAP;

    fn x(t: &str, j: usize) -> GeneralizedGrassmannian {
        GeneralizedGrassmannian::parse(t, j).unwrap()
    }

    fn int(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn closed_formula_examples() {
        assert_eq!(x("E6", 6).bandwidth(1).unwrap().on_o1, int(2));
        for n in 2..=8 {
            assert_eq!(x(&format!("C{n}"), 1).bandwidth(n).unwrap().on_o1, int(1));
            for i in 1..=n {
                assert_eq!(x(&format!("B{n}"), 1).bandwidth(i).unwrap().on_o1, int(2));
            }
        }
        assert!(x("A2", 1).bandwidth(3).is_err());
    }

    #[test]
    fn minimal_examples() {
        let r = x("E7", 6).minimal_bandwidth();
        assert_eq!((r.minimal_value, r.minimizers), (int(4), vec![1, 7]));
        let r = x("F4", 1).minimal_bandwidth();
        assert_eq!((r.minimal_value, r.minimizers), (int(4), vec![1, 4]));
        let r = x("E8", 4).minimal_bandwidth();
        assert_eq!((r.minimal_value, r.minimizers), (int(12), vec![8]));
        let r = x("E6", 6).minimal_bandwidth();
        assert_eq!((r.minimal_value, r.minimizers, r.minimal_value_ok), (int(2), vec![1, 2, 6], 6));
    }

    #[test]
    fn oracle_a2() {
        let g = x("A2", 1);
        assert_eq!(g.bandwidth_oracle(&CoWeight::fundamental(2, 1).unwrap(), DEFAULT_ORBIT_CAP).unwrap(), 3);
        assert_eq!(g.bandwidth_oracle(&CoWeight::new(vec![0, 0]), DEFAULT_ORBIT_CAP), Err(Error::ZeroCoWeight));
    }

    #[test]
    fn scaling_law() {
        for t in DynkinType::all_up_to(8) {
            for j in 1..=t.rank() {
                let r = GeneralizedGrassmannian::new(t, j).unwrap().minimal_bandwidth();
                for b in &r.per_node {
                    assert_eq!(Rational::from_integer(b.on_ok), b.on_o1 * r.k);
                    assert!(b.on_o1 >= Rational::from_integer(1));
                }
            }
        }
    }
}
