//! Seeded sampling of admissible subsets, chains and generator products.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::link::{chain_normal_form, AdmissibleSubset, LinkGenerator, LinkInstance};

pub fn sample_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random admissible subset.
pub fn random_subset<R: Rng>(inst: &LinkInstance, rng: &mut R) -> AdmissibleSubset {
    let mut elems: Vec<u32> = index::sample(rng, (inst.n() - 1) as usize, (inst.m() - 1) as usize)
        .into_iter()
        .map(|k| k as u32 + 2)
        .collect();
    elems.sort_unstable();
    inst.subset(&elems).expect("sampled subset is admissible")
}

/// `len` uniform subsets straightened into a chain.
pub fn random_chain<R: Rng>(inst: &LinkInstance, len: usize, rng: &mut R) -> Vec<AdmissibleSubset> {
    if len == 0 {
        return Vec::new();
    }
    let raw: Vec<AdmissibleSubset> = (0..len).map(|_| random_subset(inst, rng)).collect();
    chain_normal_form(&raw).expect("nonempty list of one shape")
}

/// `count` generators of `ini_J` drawn uniformly with replacement.
pub fn random_generators<R: Rng>(labels: &[LinkGenerator], count: usize, rng: &mut R) -> Vec<LinkGenerator> {
    (0..count).map(|_| labels[rng.gen_range(0..labels.len())].clone()).collect()
}
