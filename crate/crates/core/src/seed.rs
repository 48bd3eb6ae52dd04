//! Reproducible random streams.
//!
//! Every random stream comes from a [`Seed`]. Trial `k` of an experiment
//! uses `seed.trial(k)`, whose base is
//!
//! ```text
//! splitmix64(base XOR splitmix64(k + 0x9E3779B97F4A7C15))
//! ```
//!
//! and the stream itself is ChaCha8 keyed by `base` through
//! `SeedableRng::seed_from_u64`. ChaCha is counter based, so the stream for
//! a given `(base, k)` never depends on which worker thread consumes it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub type Rng = ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

impl Seed {
    pub fn new(base: u64) -> Self {
        Seed(base)
    }

    pub fn base(self) -> u64 {
        self.0
    }

    /// Independent child seed for logical task `k`.
    pub fn trial(self, k: u64) -> Seed {
        Seed(splitmix64(
            self.0 ^ splitmix64(k.wrapping_add(0x9E37_79B9_7F4A_7C15)),
        ))
    }

    pub fn rng(self) -> Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for Seed {
    fn from(base: u64) -> Self {
        Seed(base)
    }
}
