use proptest::prelude::*;
use rhbw::{DynkinType, GeneralizedGrassmannian, WeightVector, DEFAULT_ORBIT_CAP};

#[test]
fn reports_round_trip_through_json() {
    let x = GeneralizedGrassmannian::parse("E6", 6).unwrap();
    let dec = x.level_decomposition(6, DEFAULT_ORBIT_CAP).unwrap();
    let json = serde_json::to_string(&dec).unwrap();
    assert_eq!(serde_json::from_str::<rhbw::LevelDecomposition>(&json).unwrap(), dec);
    let bb = x.bb_decomposition(6, DEFAULT_ORBIT_CAP).unwrap();
    let json = serde_json::to_string(&bb).unwrap();
    assert_eq!(serde_json::from_str::<rhbw::BBDecomposition>(&json).unwrap(), bb);
}

proptest! {
    #[test]
    fn weight_vectors_round_trip(num in proptest::collection::vec(-1000i64..1000, 1..8), den in 1i64..12) {
        let w = WeightVector::new(num.iter().map(|&a| rhbw::Rational::new(a, den)).collect());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<WeightVector>(&json).unwrap(), w);
    }

    #[test]
    fn weyl_words_stay_in_the_orbit(ty in 0usize..6, word in proptest::collection::vec(0usize..16, 0..30)) {
        let t: DynkinType = ["A4", "B3", "C4", "D5", "F4", "G2"][ty].parse().unwrap();
        let sys = rhbw::RootSystem::new(t);
        let rho = (1..=t.rank()).fold(WeightVector::zero(t.rank()), |acc, j| &acc + &sys.fundamental_weight(j).unwrap());
        let word: Vec<usize> = word.iter().map(|&k| k % t.rank() + 1).collect();
        let w = sys.apply_word(&rho, &word).unwrap();
        prop_assert_eq!(sys.dominant(&w).unwrap(), rho);
    }
}
