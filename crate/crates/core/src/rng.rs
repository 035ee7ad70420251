//! Deterministic pseudo-random generation for test data and sampling helpers.
//!
//! Everything here is seed-driven: the same seed always produces the same
//! values, so sampled sweeps are reproducible byte for byte.

use alloc::vec::Vec;

use crate::cube::{ConceptClass, CubeCollection, Subcube};
use crate::error::Result;
use crate::util::Combinations;

/// splitmix64: tiny, fast, and good enough for sampling test inputs.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..bound (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        // rejection sampling to avoid modulo bias
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}

/// A uniformly chosen class of the given cardinality (reservoir sampling over
/// vertex indices).
pub fn random_class(n: u32, cardinality: u64, rng: &mut SplitMix64) -> Result<ConceptClass> {
    let total = 1u64 << n;
    let card = cardinality.min(total);
    let mut picked: Vec<u32> = Vec::with_capacity(card as usize);
    for v in 0..total {
        let remaining = total - v;
        let needed = card - picked.len() as u64;
        if needed > 0 && rng.below(remaining) < needed {
            picked.push(v as u32);
        }
    }
    ConceptClass::from_indices(n, picked)
}

/// A complete collection of k-cubes with one uniformly chosen anchor per
/// direction set.
pub fn random_complete_collection(n: u32, k: u32, rng: &mut SplitMix64) -> Result<CubeCollection> {
    let mut cubes = Vec::new();
    for free in Combinations::new(n, k) {
        let pattern = rng.below(1u64 << (n - k)) as u32;
        cubes.push(Subcube::from_free_coords(n, &free, pattern)?);
    }
    CubeCollection::new(n, k, cubes)
}
