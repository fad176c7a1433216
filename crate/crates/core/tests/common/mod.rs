#![allow(dead_code)]

use rhbw::{DynkinType, GeneralizedGrassmannian};

/// Every generalized Grassmannian of rank at most `max_rank`.
pub fn all_grassmannians(max_rank: usize) -> Vec<GeneralizedGrassmannian> {
    DynkinType::all_up_to(max_rank)
        .into_iter()
        .flat_map(|t| (1..=t.rank()).map(move |j| GeneralizedGrassmannian::new(t, j).unwrap()))
        .collect()
}
