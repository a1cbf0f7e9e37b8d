//! Standard tournament families and the seeded random generator.
//!
//! `random_tournament(n, seed)` is bit-exact across platforms: the generator
//! is xoshiro256** whose 256-bit state is expanded from `seed` with
//! SplitMix64 (the reference seeding procedure of the xoshiro authors).
//! Pairs `(i, j)`, `i < j`, are visited in lexicographic order and one
//! 64-bit output is drawn per pair; its most significant bit set means
//! `i → j`, clear means `j → i`.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::{Error, Result, Tournament};

/// The generator behind every seeded operation in this crate.
pub type Rng = Xoshiro256StarStar;

pub fn seeded_rng(seed: u64) -> Rng {
    Xoshiro256StarStar::seed_from_u64(seed)
}

/// `TT_n`: `i → j` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Tournament> {
    Tournament::from_pair_fn(n, |_, _| true)
}

/// Odd `n` only: `i → j` iff `(j - i) mod n` lies in `1..=(n-1)/2`.
pub fn rotational_tournament(n: usize) -> Result<Tournament> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrderForRotational { n });
    }
    Tournament::from_pair_fn(n, |i, j| j - i <= (n - 1) / 2)
}

pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    let mut rng = seeded_rng(seed);
    random_tournament_with(n, &mut rng)
}

pub fn random_tournament_with(n: usize, rng: &mut Rng) -> Result<Tournament> {
    Tournament::from_pair_fn(n, |_, _| rng.next_u64() >> 63 == 1)
}
