//! Tournament generators: rotational and random regular tournaments, uniform
//! random tournaments, semidegree-window sampling and regular supertournaments.
//!
//! All randomness comes from a [`ChaCha8Rng`] seeded explicitly. Campaigns
//! derive per-instance seeds with [`split_seed`]; no generator state is shared.

mod moon;

pub use moon::{moon_embed, regular_completion, MoonEmbedding};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::{Tournament, MAX_ORDER};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finaliser.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for instance `index` of a campaign seeded with `seed`:
/// `mix64(seed ^ mix64(index))`.
pub fn split_seed(seed: u64, index: u64) -> u64 {
    mix64(seed ^ mix64(index))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub order: usize,
    /// Accepted 3-cycle reversals; `None` means `10 p^2`.
    pub mix_steps: Option<usize>,
    pub count: usize,
}

impl SamplerConfig {
    pub fn new(seed: u64, order: usize) -> Self {
        SamplerConfig {
            seed,
            order,
            mix_steps: None,
            count: 1,
        }
    }

    pub fn with_mix_steps(mut self, steps: usize) -> Self {
        self.mix_steps = Some(steps);
        self
    }

    pub fn with_count(mut self, count: usize) -> Self {
        self.count = count;
        self
    }

    pub fn mix_steps_for(&self, order: usize) -> usize {
        self.mix_steps.unwrap_or(default_mix_steps(order))
    }

    /// Config for instance `index`, with its seed derived by [`split_seed`].
    pub fn instance(&self, index: u64) -> SamplerConfig {
        SamplerConfig {
            seed: split_seed(self.seed, index),
            count: 1,
            ..self.clone()
        }
    }
}

pub fn default_mix_steps(order: usize) -> usize {
    10 * order * order
}

/// Vertices `Z_{2n+1}` with `i -> i + j` for `j in 1..=n`.
pub fn rotational_regular(n: usize) -> Result<Tournament> {
    let p = 2 * n + 1;
    if n == 0 || p > MAX_ORDER {
        return Err(Error::OrderTooLarge(p));
    }
    Tournament::from_fn(p, |i, j| j - i <= n)
}

/// Every pair oriented by one fair coin flip.
pub fn random_tournament(p: usize, seed: u64) -> Result<Tournament> {
    let mut rng = rng_from_seed(seed);
    random_tournament_with(p, &mut rng)
}

pub fn random_tournament_with(p: usize, rng: &mut impl Rng) -> Result<Tournament> {
    Tournament::from_fn(p, |_, _| rng.gen::<bool>())
}

/// Reverses the 3-cycle on `{a, b, c}` if there is one. Scores are unchanged.
pub fn reverse_if_cyclic(t: &mut Tournament, a: usize, b: usize, c: usize) -> bool {
    let cyclic = (t.arc(a, b) && t.arc(b, c) && t.arc(c, a))
        || (t.arc(a, c) && t.arc(c, b) && t.arc(b, a));
    if cyclic {
        t.flip(a, b);
        t.flip(b, c);
        t.flip(c, a);
    }
    cyclic
}

/// Applies `steps` reversals of uniformly chosen directed 3-cycles.
pub fn mix_three_cycles(t: &mut Tournament, steps: usize, rng: &mut impl Rng) {
    let p = t.order();
    if p < 3 || steps == 0 {
        return;
    }
    // A tournament with no 3-cycle is transitive; the chain cannot move.
    if !has_three_cycle(t) {
        return;
    }
    let mut accepted = 0;
    while accepted < steps {
        let a = rng.gen_range(0..p);
        let b = rng.gen_range(0..p);
        let c = rng.gen_range(0..p);
        if a == b || b == c || a == c {
            continue;
        }
        if reverse_if_cyclic(t, a, b, c) {
            accepted += 1;
        }
    }
}

fn has_three_cycle(t: &Tournament) -> bool {
    let mut scores = t.scores();
    scores.sort_unstable();
    scores.iter().enumerate().any(|(i, &s)| s != i)
}

/// Random regular tournament of order `2n+1`: the rotational tournament
/// scrambled by 3-cycle reversals.
pub fn random_regular(n: usize, config: &SamplerConfig) -> Result<Tournament> {
    let mut t = rotational_regular(n)?;
    let mut rng = rng_from_seed(config.seed);
    let steps = config.mix_steps_for(t.order());
    mix_three_cycles(&mut t, steps, &mut rng);
    Ok(t)
}

const WINDOW_ATTEMPTS: usize = 64;

/// Random tournament with both semidegrees of every vertex in `[lo, hi]`.
///
/// A uniform random tournament is pushed into the window by single-arc flips
/// between a vertex outside the window and a neighbour with slack, then mixed
/// by score-preserving 3-cycle reversals. A stuck repair restarts from a
/// fresh tournament.
pub fn semidegree_window_sample(
    p: usize,
    lo: usize,
    hi: usize,
    config: &SamplerConfig,
) -> Result<Tournament> {
    if p == 0 || p > MAX_ORDER {
        return Err(Error::OrderTooLarge(p));
    }
    if 2 * lo > p - 1 || 2 * hi < p - 1 {
        return Err(Error::PreconditionViolated(format!(
            "window [{lo}, {hi}] must contain (p-1)/2 for p = {p}"
        )));
    }
    let out_lo = lo.max((p - 1).saturating_sub(hi));
    let out_hi = hi.min(p - 1 - lo);
    let mut rng = rng_from_seed(config.seed);
    for _ in 0..WINDOW_ATTEMPTS {
        let mut t = random_tournament_with(p, &mut rng)?;
        if repair_into_window(&mut t, out_lo, out_hi, &mut rng) {
            mix_three_cycles(&mut t, config.mix_steps_for(p), &mut rng);
            return Ok(t);
        }
    }
    Err(Error::WindowInfeasible { order: p, lo, hi })
}

fn repair_into_window(t: &mut Tournament, out_lo: usize, out_hi: usize, rng: &mut impl Rng) -> bool {
    let p = t.order();
    let budget = 4 * p * p;
    let mut candidates = Vec::with_capacity(p);
    for _ in 0..budget {
        let scores = t.scores();
        let Some(v) = (0..p).find(|&v| scores[v] < out_lo || scores[v] > out_hi) else {
            return true;
        };
        candidates.clear();
        if scores[v] > out_hi {
            candidates.extend(t.out_set(v).iter().filter(|&w| scores[w] < out_hi));
        } else {
            candidates.extend(t.in_set(v).iter().filter(|&w| scores[w] > out_lo));
        }
        match candidates.choose(rng) {
            Some(&w) => t.flip(v, w),
            None => return false,
        }
    }
    false
}
