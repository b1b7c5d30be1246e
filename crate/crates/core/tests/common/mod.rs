#![allow(dead_code)]

use nf_core::{Permutation, SimplicialComplex, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for randomized checks: `NF_LAB_SEED`, default 0.
pub fn seed() -> u64 {
    let seed = std::env::var("NF_LAB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    println!("seed = {seed}");
    seed
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed().wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

pub fn random_complex(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    let faces = rng.gen_range(1..=10);
    let density = rng.gen_range(0.2..0.8);
    let sets: Vec<VertexSet> = (0..faces)
        .map(|_| {
            let mut s = VertexSet::EMPTY;
            for v in 1..=n {
                if rng.gen_bool(density) {
                    s.insert(v);
                }
            }
            s
        })
        .collect();
    SimplicialComplex::from_faces(n, sets).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

pub fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_lists(n, faces).unwrap()
}
