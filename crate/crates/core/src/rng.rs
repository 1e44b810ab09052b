//! Seeding rules shared by every stochastic routine.
//!
//! All randomness flows from a ChaCha8 generator keyed by a 64-bit seed.
//! A call that needs a single stream uses stream 0. Work split into
//! replicates (bootstrap refits, Monte Carlo paths, null-band simulations)
//! gives replicate `i` stream `i + 1` under the same key, so results are
//! independent of scheduling and of the number of worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GeRng = ChaCha8Rng;

/// Generator for the primary stream of `seed`.
pub fn seeded(seed: u64) -> GeRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for replicate `index` under `seed`.
pub fn replicate(seed: u64, index: u64) -> GeRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index + 1);
    rng
}
