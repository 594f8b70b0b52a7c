//! Seeded random streams.
//!
//! Every randomized component draws from a ChaCha8 generator keyed by the
//! master seed and selected by a 64-bit stream index, so independent
//! consumers never share state and a run is reproducible from `(seed, index)`.
//! The pipeline gives each phase a fixed index and each extension call its own.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

/// Generator for stream `index` under master `seed`.
pub fn stream(seed: u64, index: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
