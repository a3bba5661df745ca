//! Seeded randomness shared by every generator.
//!
//! The stream is plain SplitMix64: the state starts at the seed, each draw
//! adds `0x9e3779b97f4a7c15` and mixes with
//! `z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9; z = (z ^ (z >> 27)) * 0x94d049bb133111eb; z ^ (z >> 31)`.
//! Bounded draws use rejection: `below(b)` redraws while
//! `x >= u64::MAX - u64::MAX % b` and returns `x % b`. Shuffles are
//! Fisher-Yates from the back, swapping `i` with `below(i + 1)`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Debug, Clone)]
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty range");
        let b = bound as u64;
        let limit = u64::MAX - u64::MAX % b;
        loop {
            let x = self.next_u64();
            if x < limit {
                return (x % b) as usize;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }

    /// An independent stream derived from the next draw.
    pub fn split(&mut self) -> Rng {
        Rng::new(self.next_u64())
    }
}
