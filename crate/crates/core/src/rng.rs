//! Seeded randomness with a fully specified stream.
//!
//! The generator is xoshiro256** (Blackman and Vigna), with its 256-bit
//! state filled by four successive outputs of SplitMix64 started at the seed
//! (SplitMix64 increment `0x9E3779B97F4A7C15`, mixing multipliers
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`). Derived draws are defined
//! here rather than taken from a distribution library so any implementation
//! can reproduce a corpus from its seed:
//!
//! * `below(k)`: draw `x`, reject while `x < (2^64 - k) mod k`, return `x mod k`;
//! * `unit()`: `(x >> 11) * 2^-53`;
//! * `chance(p)`: `unit() < p`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Debug, Clone)]
pub struct PortableRng(Xoshiro256StarStar);

impl PortableRng {
    pub fn new(seed: u64) -> Self {
        PortableRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform on `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.below(bound as u64) as usize
    }

    /// Uniform on `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.index(hi - lo + 1)
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight transcription of the published reference code.
    struct Reference {
        s: [u64; 4],
    }

    impl Reference {
        fn new(seed: u64) -> Self {
            let mut z = seed;
            let mut s = [0u64; 4];
            for slot in &mut s {
                z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
                let mut x = z;
                x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
                x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
                *slot = x ^ (x >> 31);
            }
            Reference { s }
        }

        fn next(&mut self) -> u64 {
            let s = &mut self.s;
            let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
            let t = s[1] << 17;
            s[2] ^= s[0];
            s[3] ^= s[1];
            s[1] ^= s[2];
            s[0] ^= s[3];
            s[2] ^= t;
            s[3] = s[3].rotate_left(45);
            result
        }
    }

    #[test]
    fn stream_matches_reference() {
        for seed in [0, 1, 7, 0xDEAD_BEEF, u64::MAX] {
            let mut a = PortableRng::new(seed);
            let mut b = Reference::new(seed);
            for _ in 0..100 {
                assert_eq!(a.next_u64(), b.next());
            }
        }
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut rng = PortableRng::new(3);
        let mut seen = [false; 7];
        for _ in 0..1000 {
            let x = rng.index(7);
            seen[x] = true;
            let u = rng.unit();
            assert!((0.0..1.0).contains(&u));
            let r = rng.range_inclusive(5, 9);
            assert!((5..=9).contains(&r));
        }
        assert!(seen.iter().all(|&s| s));
        assert!(!rng.chance(0.0));
        assert!(rng.chance(1.0));
    }
}
