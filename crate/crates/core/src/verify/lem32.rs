//! Short paths in `T - S`: length 3 unless `T` is in `G(k)`, and length 3 or
//! 4 for larger `S`.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Descriptor, Outcome, Record};
use super::{elapsed_us, need, sampler, set_of, CampaignConfig};
use crate::checks::{lemma32_check, spectrum_minus, lemma32_outcome, lemma32_preconditions, short_spectra_minus, LemmaPart};
use crate::constructions::{build_g, lemma32_counterexample, GParams, LEMMA32_VARIANTS};
use crate::error::{Error, Result};
use crate::generators::{random_regular, rng_from_seed, split_seed};
use crate::spectrum::LengthSet;
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

pub(super) const CLAIM_I: &str = "lem3.2.i";
pub(super) const CLAIM_II: &str = "lem3.2.ii";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma32Config {
    pub campaign: CampaignConfig,
    /// Half-orders are drawn uniformly from `[min_n, max_n]`.
    pub min_n: usize,
    pub max_n: usize,
    /// Skip part (i) and draw only part (ii) deleted sets.
    pub part_ii_only: bool,
    /// Append the `G(1)`, `G(2)` and counterexample records.
    pub include_fixtures: bool,
}

impl Lemma32Config {
    pub fn new(campaign: CampaignConfig) -> Self {
        Lemma32Config { campaign, min_n: 5, max_n: 9, part_ii_only: false, include_fixtures: true }
    }
}

fn claim(part: LemmaPart) -> &'static str {
    match part {
        LemmaPart::LengthThree => CLAIM_I,
        LemmaPart::ThreeOrFour => CLAIM_II,
    }
}

fn part_of(claim: &str) -> LemmaPart {
    if claim == CLAIM_I {
        LemmaPart::LengthThree
    } else {
        LemmaPart::ThreeOrFour
    }
}

/// Largest `|S|` the part allows at half-order `n`.
fn s_bound(part: LemmaPart, n: usize) -> usize {
    match part {
        LemmaPart::LengthThree => n.saturating_sub(1) / 3,
        LemmaPart::ThreeOrFour => n / 2,
    }
}

fn random_subset(order: usize, max_size: usize, rng: &mut impl Rng) -> VertexSet {
    let size = rng.gen_range(0..=max_size);
    let mut vs: Vec<usize> = (0..order).collect();
    vs.shuffle(rng);
    vs[..size].iter().collect()
}

fn record(t: &Tournament, x: usize, y: usize, part: LemmaPart, spec: LengthSet, d: Descriptor) -> Record {
    let outcome = lemma32_outcome(t, x, y, part, spec);
    let d = Descriptor { pair: Some((x, y)), ..d };
    if !outcome.holds() {
        return Record::new(claim(part), d, Outcome::Fail).with_note(format!("short spectrum of T-S is {spec}"));
    }
    match outcome.g_shape {
        Some(g) => Record::new(claim(part), d, Outcome::Pass)
            .with_note(format!("no path of length 3; T matches G({}) with x={} y={}", g.k, g.x, g.y)),
        None => Record::new(claim(part), d, Outcome::Pass),
    }
}

fn instance(c: &CampaignConfig, config: &Lemma32Config, index: u64) -> Result<Vec<Record>> {
    let seed = split_seed(c.seed, index);
    let mut rng = rng_from_seed(split_seed(seed, 1));
    let n = rng.gen_range(config.min_n..=config.max_n);
    let order = 2 * n + 1;
    let t = random_regular(n, &c.sampler(seed, order))?;
    let parts: &[LemmaPart] = if config.part_ii_only {
        &[LemmaPart::ThreeOrFour]
    } else {
        &[LemmaPart::LengthThree, LemmaPart::ThreeOrFour]
    };
    let mut out = Vec::new();
    for &part in parts {
        let s = random_subset(order, s_bound(part, n), &mut rng);
        let start = Instant::now();
        let table = short_spectra_minus(&t, s)?;
        let base = Descriptor {
            order: Some(order),
            seed: Some(seed),
            instance: Some(index),
            mix_steps: c.mix_steps,
            s: Some(s.to_vec()),
            ..Default::default()
        };
        let mut group = Vec::new();
        for x in t.vertices().difference(s).iter() {
            for y in t.vertices().difference(s).iter() {
                if x != y {
                    group.push(record(&t, x, y, part, table[x * order + y], base.clone()));
                }
            }
        }
        let per = elapsed_us(start) / group.len().max(1) as u64;
        out.extend(group.into_iter().map(|r| r.timed(per)));
    }
    Ok(out)
}

/// `G(1)` and `G(2)` under part (i), and the counterexamples showing the
/// bounds of part (ii) cannot be dropped.
pub(super) fn fixture_records() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for k in 1..=2 {
        let g = build_g(GParams::new(k))?;
        let (s, x, y) = (g.block("S"), g.v("x"), g.v("y"));
        let d = Descriptor {
            order: Some(g.tournament.order()),
            k: Some(k),
            s: Some(s.to_vec()),
            pair: Some((x, y)),
            fixture: Some(format!("G({k})")),
            ..Default::default()
        };
        let outcome = lemma32_check(&g.tournament, s, x, y, LemmaPart::LengthThree)?;
        let rec = match (outcome.length3, outcome.g_shape) {
            (false, Some(shape)) if shape.x == x && shape.y == y => Record::new(CLAIM_I, d, Outcome::Pass)
                .with_note(format!("no path of length 3; G({k}) shape recognised")),
            _ => Record::new(CLAIM_I, d, Outcome::Fail).with_note(format!("expected no length 3 and a G shape, got {outcome:?}")),
        };
        out.push(rec);
    }
    for variant in LEMMA32_VARIANTS {
        let lt = lemma32_counterexample(variant, None)?;
        let (s, x, y) = (lt.block("S"), lt.v("x"), lt.v("y"));
        let t = &lt.tournament;
        let d = Descriptor {
            order: Some(variant),
            variant: Some(variant),
            s: Some(s.to_vec()),
            pair: Some((x, y)),
            fixture: Some(format!("counterexample-{variant}")),
            ..Default::default()
        };
        let spec = spectrum_minus(t, s, x, y, t.order() - 1)?;
        let rec = match lemma32_preconditions(t, s, LemmaPart::ThreeOrFour) {
            Err(Error::PreconditionViolated(why)) => Record::new(CLAIM_II, d, Outcome::PreconditionSkip)
                .with_note(format!("{why}; T-S spectrum {spec} has neither 3 nor 4: {}", !spec.contains(3) && !spec.contains(4))),
            Err(e) => return Err(e),
            Ok(_) => Record::new(CLAIM_II, d, Outcome::Fail).with_note("counterexample unexpectedly meets the hypotheses"),
        };
        out.push(rec);
    }
    Ok(out)
}

/// Random regular tournaments with half-order in `[min_n, max_n]`, a random
/// `S` per part within its bound, and every ordered pair outside `S`.
pub fn run_lemma32_campaign(config: &Lemma32Config) -> Result<Vec<Record>> {
    if config.min_n < 5 || config.min_n > config.max_n || 2 * config.max_n + 1 > crate::tournament::MAX_ORDER {
        return Err(Error::PreconditionViolated(format!(
            "half-order range [{}, {}] must lie in [5, 12]",
            config.min_n, config.max_n
        )));
    }
    let c = &config.campaign;
    let chunks: Vec<Vec<Record>> = (0..c.count as u64)
        .into_par_iter()
        .map(|i| instance(c, config, i))
        .collect::<Result<_>>()?;
    let mut out: Vec<Record> = chunks.into_iter().flatten().collect();
    if config.include_fixtures {
        out.extend(fixture_records()?);
    }
    Ok(out)
}

pub(super) fn replay(claim_id: &str, d: &Descriptor) -> Result<Record> {
    let order = need(d.order, "order")?;
    let t = random_regular(order / 2, &sampler(need(d.seed, "seed")?, order, d.mix_steps))?;
    let s = set_of(need(d.s.as_deref(), "S")?);
    let (x, y) = need(d.pair, "pair")?;
    let spec = spectrum_minus(&t, s, x, y, 4)?;
    Ok(record(&t, x, y, part_of(claim_id), spec, Descriptor { pair: None, ..d.clone() }))
}
