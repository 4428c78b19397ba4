//! Path configurations `P = x0 x1 ... xr` plus an outside vertex `z` with
//! `{x_{α+1}, ..., x_r} -> z -> {x_0, ..., x_α}` and no `(x0, xr)`-path of
//! length `r + 1` on `V(P) ∪ {z}`, and the two arc-emptiness properties such
//! configurations satisfy.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{random_tournament_with, rng_from_seed};
use crate::spectrum::{has_hamiltonian_path, is_path};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathConfiguration {
    pub path: Vec<usize>,
    pub z: usize,
    pub alpha: usize,
}

impl PathConfiguration {
    /// Path length `r`.
    pub fn r(&self) -> usize {
        self.path.len().saturating_sub(1)
    }
}

fn violated(what: impl Into<String>) -> Error {
    Error::PreconditionViolated(what.into())
}

/// Checks every hypothesis of the configuration, including the absence of the
/// longer path `Q` (decided exactly by the subset DP).
pub fn validate_configuration(t: &Tournament, cfg: &PathConfiguration) -> Result<()> {
    let path = &cfg.path;
    if path.len() < 2 || !is_path(t, path) {
        return Err(violated("P is not a path of T"));
    }
    let r = cfg.r();
    if cfg.z >= t.order() || path.contains(&cfg.z) {
        return Err(violated("z must be a vertex outside P"));
    }
    if cfg.alpha < 2 || cfg.alpha + 3 > r {
        return Err(violated(format!("alpha = {} outside [2, r-3] with r = {r}", cfg.alpha)));
    }
    let z = cfg.z;
    let pattern = path.iter().enumerate().all(|(i, &xi)| {
        if i <= cfg.alpha {
            t.arc(z, xi)
        } else {
            t.arc(xi, z)
        }
    });
    if !pattern {
        return Err(violated("domination pattern around z fails"));
    }
    let keep: VertexSet = path.iter().copied().chain([z]).collect();
    let ind = t.induced_on(keep);
    let (from, to) = (ind.new_index(path[0]).unwrap(), ind.new_index(path[r]).unwrap());
    if has_hamiltonian_path(&ind.tournament, from, to) {
        return Err(violated("a path Q of length r+1 on V(P) ∪ {z} exists"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaClause {
    /// `s >= 3`: no arc from `{x_0..x_{s-2}}` to `{x_{α+2}..x_{t-1}}`.
    EarlyPrefix,
    /// `t - s != 5`: no arc from `x_{s-1}` to `{x_{α+2}..x_{t-1}}`.
    Predecessor,
    /// No arc from `{x_0..x_{α-1}}` to `{x_{s+1}..x_{s+k}}`, `k = ⌊(t-s)/2⌋`.
    HalfSpan,
}

/// A chord `x_s x_t` for which a forbidden arc `x_a x_b` exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseViolation {
    pub clause: LemmaClause,
    pub s: usize,
    pub t: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaVerdict {
    /// Holds; `chords` counts the arcs `x_s x_t` that triggered a check.
    Holds { chords: usize },
    Violated(ClauseViolation),
}

impl LemmaVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, LemmaVerdict::Holds { .. })
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, LemmaVerdict::Holds { chords: 0 })
    }
}

fn first_arc(
    t: &Tournament,
    path: &[usize],
    from: std::ops::RangeInclusive<usize>,
    to: std::ops::RangeInclusive<usize>,
) -> Option<(usize, usize)> {
    from.clone()
        .flat_map(|a| to.clone().map(move |b| (a, b)))
        .find(|&(a, b)| t.arc(path[a], path[b]))
}

/// For every chord `x_s x_t` with `s in [1, α-1]` and `t in [α+3, r]`:
/// the early-prefix clause (when `s >= 3`) and the predecessor clause (when
/// `t - s != 5`), each checked as stated.
pub fn lemma33_property(t: &Tournament, cfg: &PathConfiguration) -> Result<LemmaVerdict> {
    validate_configuration(t, cfg)?;
    let (p, alpha, r) = (&cfg.path, cfg.alpha, cfg.r());
    let mut chords = 0;
    for s in 1..alpha {
        for tt in alpha + 3..=r {
            if !t.arc(p[s], p[tt]) {
                continue;
            }
            chords += 1;
            let targets = alpha + 2..=tt - 1;
            if s >= 3 {
                if let Some((a, b)) = first_arc(t, p, 0..=s - 2, targets.clone()) {
                    return Ok(LemmaVerdict::Violated(ClauseViolation { clause: LemmaClause::EarlyPrefix, s, t: tt, a, b }));
                }
            }
            if tt - s != 5 {
                if let Some((a, b)) = first_arc(t, p, s - 1..=s - 1, targets) {
                    return Ok(LemmaVerdict::Violated(ClauseViolation { clause: LemmaClause::Predecessor, s, t: tt, a, b }));
                }
            }
        }
    }
    Ok(LemmaVerdict::Holds { chords })
}

/// For every chord `x_s x_t` with `s in [α, r-2]` and `t in [s+2, r]`:
/// no arc from `{x_0..x_{α-1}}` to `{x_{s+1}..x_{s+k}}`, `k = ⌊(t-s)/2⌋`.
pub fn lemma34_property(t: &Tournament, cfg: &PathConfiguration) -> Result<LemmaVerdict> {
    validate_configuration(t, cfg)?;
    let (p, alpha, r) = (&cfg.path, cfg.alpha, cfg.r());
    let mut chords = 0;
    for s in alpha..=r - 2 {
        for tt in s + 2..=r {
            if !t.arc(p[s], p[tt]) {
                continue;
            }
            chords += 1;
            let k = (tt - s) / 2;
            if let Some((a, b)) = first_arc(t, p, 0..=alpha - 1, s + 1..=s + k) {
                return Ok(LemmaVerdict::Violated(ClauseViolation { clause: LemmaClause::HalfSpan, s, t: tt, a, b }));
            }
        }
    }
    Ok(LemmaVerdict::Holds { chords })
}

/// Hamiltonian path of `t` by random-order insertion.
pub fn random_hamiltonian_path(t: &Tournament, rng: &mut impl Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..t.order()).collect();
    order.shuffle(rng);
    let mut path: Vec<usize> = Vec::with_capacity(order.len());
    for v in order {
        // The predecessor of the first vertex v dominates must dominate v.
        let pos = path.iter().position(|&w| t.arc(v, w)).unwrap_or(path.len());
        path.insert(pos, v);
    }
    path
}

/// Configuration-sampler limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationSampler {
    pub min_order: usize,
    pub max_order: usize,
}

impl Default for ConfigurationSampler {
    fn default() -> Self {
        ConfigurationSampler {
            min_order: 7,
            max_order: 12,
        }
    }
}

/// A sampled tournament with a conforming configuration, or `None` when the
/// sample does not conform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigurationSample {
    pub tournament: Tournament,
    pub configuration: Option<PathConfiguration>,
}

impl ConfigurationSampler {
    /// Random tournament, a prefix of a random Hamiltonian path as `P`, then a
    /// scan over outside vertices for a `z` with the domination pattern and no
    /// path `Q`. Deterministic in `seed`.
    pub fn sample(&self, seed: u64) -> ConfigurationSample {
        let mut rng = rng_from_seed(seed);
        let p = rng.gen_range(self.min_order..=self.max_order);
        let tournament = random_tournament_with(p, &mut rng).expect("order within range");
        let ham = random_hamiltonian_path(&tournament, &mut rng);
        let r = rng.gen_range(5..=p - 2);
        let path = ham[..=r].to_vec();
        let mut outside: Vec<usize> = ham[r + 1..].to_vec();
        outside.shuffle(&mut rng);
        let configuration = outside.into_iter().find_map(|z| {
            let alpha = path.iter().take_while(|&&xi| tournament.arc(z, xi)).count().checked_sub(1)?;
            let cfg = PathConfiguration { path: path.clone(), z, alpha };
            validate_configuration(&tournament, &cfg).is_ok().then_some(cfg)
        });
        ConfigurationSample { tournament, configuration }
    }
}
