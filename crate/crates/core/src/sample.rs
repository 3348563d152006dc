//! Seeded generation of uniform functions and uniform parking functions.
//!
//! Stream discipline: sample `i` of an experiment with seed `s` always draws
//! from `split_stream(s, i)`. The generator is ChaCha8 keyed by the SplitMix64
//! expansion of `s`, with `i` as the ChaCha stream word, so results do not
//! depend on how samples are spread over threads.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parking::{ParkingFunction, PrefSequence};

/// An independent, reproducible random stream.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream_index: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_index(&self) -> u64 {
        self.stream_index
    }

    /// Uniform integer in `[1, m]`.
    pub fn uniform(&mut self, m: u32) -> u32 {
        self.rng.random_range(1..=m)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn split_stream(seed: u64, index: u64) -> RngStream {
    let mut state = seed;
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index);
    RngStream {
        seed,
        stream_index: index,
        rng,
    }
}

/// The three ensembles compared throughout: parking functions, all functions
/// `[n] -> [n]`, and all functions `[n] -> [n + 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ensemble {
    Pf,
    Fn,
    Fn1,
}

impl Ensemble {
    pub fn name(self) -> &'static str {
        match self {
            Ensemble::Pf => "pf",
            Ensemble::Fn => "fn",
            Ensemble::Fn1 => "fn1",
        }
    }

    /// Codomain bound of the ensemble at size `n`.
    pub fn bound(self, n: usize) -> u32 {
        match self {
            Ensemble::Pf | Ensemble::Fn => n as u32,
            Ensemble::Fn1 => n as u32 + 1,
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ensemble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pf" => Ok(Ensemble::Pf),
            "fn" => Ok(Ensemble::Fn),
            "fn1" => Ok(Ensemble::Fn1),
            other => Err(Error::UnknownEnsemble(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub n: usize,
    pub count: u64,
    pub seed: u64,
    pub ensemble: Ensemble,
}

impl SampleConfig {
    pub fn new(n: usize, count: u64, seed: u64, ensemble: Ensemble) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if count == 0 {
            return Err(Error::Domain("count must be at least 1".into()));
        }
        Ok(SampleConfig {
            n,
            count,
            seed,
            ensemble,
        })
    }

    /// Draws sample `index` of this configuration.
    pub fn draw(&self, index: u64) -> PrefSequence {
        let mut rng = split_stream(self.seed, index);
        sample_ensemble(self.ensemble, self.n, &mut rng)
    }
}

pub fn sample_uniform_function(n: usize, m: u32, rng: &mut RngStream) -> PrefSequence {
    assert!(n >= 1 && m >= 1, "n and m must be positive");
    let values = (0..n).map(|_| rng.uniform(m)).collect();
    PrefSequence::new(values, m).expect("draws lie in [1, m]")
}

/// Exactly uniform parking function: a uniform draw from `[n+1]^n` moved by
/// its unique valid cyclic shift.
pub fn sample_parking_function(n: usize, rng: &mut RngStream) -> ParkingFunction {
    let raw = sample_uniform_function(n, n as u32 + 1, rng);
    let k = find_valid_shift(&raw);
    ParkingFunction::new_unchecked(apply_shift(raw.values(), k))
}

pub fn sample_ensemble(ensemble: Ensemble, n: usize, rng: &mut RngStream) -> PrefSequence {
    match ensemble {
        Ensemble::Pf => sample_parking_function(n, rng).to_prefs(),
        Ensemble::Fn | Ensemble::Fn1 => sample_uniform_function(n, ensemble.bound(n), rng),
    }
}

/// Adds `k (1, ..., 1)` modulo `n + 1`, with representatives `1..=n+1`.
pub fn apply_shift(values: &[u32], k: u32) -> Vec<u32> {
    let modulus = values.len() as u32 + 1;
    values.iter().map(|&v| (v - 1 + k) % modulus + 1).collect()
}

/// The unique `k` in `[0, n]` for which `f + k (1, ..., 1)` (mod `n + 1`) is
/// a parking function.
///
/// Walk `S_j = #{f_i <= j} - j` over `j = 1..=n+1`; it ends at `-1`. Starting
/// the cycle just after the first minimum keeps every proper prefix
/// nonnegative, so that value becomes spot 1.
pub fn find_valid_shift(f: &PrefSequence) -> u32 {
    let n = f.len();
    let modulus = n + 1;
    let mut counts = vec![0i64; modulus + 1];
    for &v in f.values() {
        counts[v as usize] += 1;
    }
    let mut walk = 0i64;
    let mut best = i64::MAX;
    let mut argmin = modulus;
    for (j, &c) in counts.iter().enumerate().skip(1) {
        walk += c - 1;
        if walk < best {
            best = walk;
            argmin = j;
        }
    }
    ((modulus - argmin) % modulus) as u32
}
