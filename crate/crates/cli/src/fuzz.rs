use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rhbw::{CoWeight, GeneralizedGrassmannian, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trial {
    pub coweight: CoWeight,
    pub oracle: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub trials: u64,
    pub seed: u64,
    /// `k_j` times the minimal bandwidth: no coweight may go below it.
    pub bound: i64,
    /// First trial with the smallest oracle value.
    pub tightest: Trial,
    pub tight: bool,
    pub violations: Vec<Trial>,
}

/// Each coordinate is 0 with probability 1/2, otherwise uniform in 1..=3;
/// all-zero draws are redrawn.
pub fn draw(rng: &mut ChaCha8Rng, n: usize) -> CoWeight {
    loop {
        let c: Vec<u32> = (0..n).map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=3) }).collect();
        if c.iter().any(|&x| x != 0) {
            return CoWeight::new(c);
        }
    }
}

pub fn run(x: &GeneralizedGrassmannian, trials: u64, seed: u64, cap: usize) -> Result<FuzzReport> {
    let bound = x.minimal_bandwidth().minimal_value_ok;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tightest: Option<Trial> = None;
    let mut violations = vec![];
    for _ in 0..trials {
        let coweight = draw(&mut rng, x.rank());
        let oracle = x.bandwidth_oracle(&coweight, cap)?;
        let trial = Trial { coweight, oracle };
        if oracle < bound {
            violations.push(trial.clone());
        }
        if tightest.as_ref().is_none_or(|t| oracle < t.oracle) {
            tightest = Some(trial);
        }
    }
    let tightest = tightest.expect("at least one trial");
    Ok(FuzzReport { trials, seed, bound, tight: tightest.oracle == bound, tightest, violations })
}
