//! Strong panconnectedness of nearly regular tournaments sampled inside the
//! semidegree windows.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Descriptor, Outcome, Record};
use super::{elapsed_us, need, sampler, CampaignConfig};
use crate::checks::{panconnected_in, Verdict};
use crate::constructions::{build_g, GParams};
use crate::error::{Error, Result};
use crate::generators::{semidegree_window_sample, split_seed};
use crate::gshape::{find_g_minus_s_shape, g_minus_s_shape_at};
use crate::spectrum::all_pairs_spectra;
use crate::tournament::Tournament;

pub(super) const CLAIM_4: &str = "thm1.6.4";
pub(super) const CLAIM_3: &str = "thm1.6.3";
const CLAIM_SHARP: &str = "thm1.6.sharp";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem16Config {
    pub orders: Vec<usize>,
    pub campaign: CampaignConfig,
    /// Append the `G(k) - S` records.
    pub include_fixtures: bool,
}

impl Theorem16Config {
    pub fn new(campaign: CampaignConfig) -> Self {
        Theorem16Config { orders: vec![11, 13], campaign, include_fixtures: true }
    }
}

/// Integer semidegree windows `[⌈(p+1)/3⌉, ⌊2(p-2)/3⌋]` and
/// `[⌈(2p-1)/5⌉, ⌊(3p-4)/5⌋]`.
pub fn remark2_windows(p: usize) -> ((usize, usize), (usize, usize)) {
    let four = ((p + 1).div_ceil(3), (2 * p).saturating_sub(4) / 3);
    let three = ((2 * p).saturating_sub(1).div_ceil(5), (3 * p).saturating_sub(4) / 5);
    (four, three)
}

/// Hypotheses of the claim for an `m`-irregular tournament of order `p`.
fn hypotheses(claim: &str, p: usize, m: usize) -> bool {
    p + m >= 11
        && match claim {
            CLAIM_4 => 3 * m + 5 <= p,
            _ => 5 * m + 3 <= p,
        }
}

fn evaluate(claim: &str, t: &Tournament, d: Descriptor) -> Record {
    let (p, m) = (t.order(), t.irregularity());
    if !hypotheses(claim, p, m) {
        return Record::new(claim, d, Outcome::PreconditionSkip).with_note(format!("p = {p}, irregularity {m}"));
    }
    let table = all_pairs_spectra(t);
    let dmin = if claim == CLAIM_4 { 4 } else { 3 };
    match panconnected_in(&table, dmin) {
        Verdict::Holds => Record::new(claim, d, Outcome::Pass),
        Verdict::Fails(f) => match (claim, find_g_minus_s_shape(t)) {
            (CLAIM_3, Some(g)) => Record::new(claim, d, Outcome::Pass).with_note(format!(
                "no ({}, {})-path of length {}; T matches G({}) - S with x={} y={}",
                f.x, f.y, f.length, g.k, g.x, g.y
            )),
            _ => Record::new(claim, d, Outcome::Fail)
                .with_note(format!("no ({}, {})-path of length {}, irregularity {m}", f.x, f.y, f.length)),
        },
    }
}

fn sample(c: &CampaignConfig, order: usize, index: u64, claim: &str, window: (usize, usize)) -> Result<Record> {
    let tag = if claim == CLAIM_4 { 0 } else { 1 };
    let seed = split_seed(split_seed(c.seed, order as u64), 2 * index + tag);
    let start = Instant::now();
    let t = semidegree_window_sample(order, window.0, window.1, &c.sampler(seed, order))?;
    let d = Descriptor {
        order: Some(order),
        seed: Some(seed),
        instance: Some(index),
        mix_steps: c.mix_steps,
        window: Some(window),
        ..Default::default()
    };
    Ok(evaluate(claim, &t, d).timed(elapsed_us(start)))
}

/// `G(1) - S` as the irregularity `(p-3)/5` exhibit and `G(2) - S` under
/// both claims.
pub(super) fn fixture_records() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for k in 1..=2 {
        let g = build_g(GParams::new(k))?;
        let ind = g.tournament.induced_minus(g.block("S"))?;
        let t = &ind.tournament;
        let (x, y) = (ind.new_index(g.v("x")).unwrap(), ind.new_index(g.v("y")).unwrap());
        let d = Descriptor {
            order: Some(t.order()),
            k: Some(k),
            pair: Some((x, y)),
            fixture: Some(format!("G({k})-S")),
            ..Default::default()
        };
        let (p, m) = (t.order(), t.irregularity());
        let no3 = !all_pairs_spectra(t).get(x, y).contains(3);
        let shaped = g_minus_s_shape_at(t, x, y).is_some();
        let exhibit = if 5 * m + 3 == p && no3 && shaped {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        out.push(Record::new(CLAIM_SHARP, d.clone(), exhibit).with_note(format!(
            "p = {p}, irregularity {m}, p + m = {}, (x, y)-path of length 3: {}, G - S shape: {shaped}",
            p + m,
            !no3
        )));
        if hypotheses(CLAIM_3, p, m) {
            out.push(evaluate(CLAIM_4, t, d.clone()));
            out.push(evaluate(CLAIM_3, t, d));
        }
    }
    Ok(out)
}

/// For each order, `count` samples in each window: 4-strong panconnectedness
/// in the first, 3-strong panconnectedness or a `G - S` shape in the second.
pub fn run_theorem16_campaign(config: &Theorem16Config) -> Result<Vec<Record>> {
    for &o in &config.orders {
        if !(5..=crate::tournament::MAX_ORDER).contains(&o) {
            return Err(Error::PreconditionViolated(format!("order {o} outside [5, 26]")));
        }
    }
    let c = &config.campaign;
    let jobs: Vec<(usize, u64)> = config
        .orders
        .iter()
        .flat_map(|&o| (0..c.count as u64).map(move |i| (o, i)))
        .collect();
    let chunks: Vec<Vec<Record>> = jobs
        .into_par_iter()
        .map(|(order, i)| {
            let (w4, w3) = remark2_windows(order);
            Ok(vec![sample(c, order, i, CLAIM_4, w4)?, sample(c, order, i, CLAIM_3, w3)?])
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<Record> = chunks.into_iter().flatten().collect();
    if config.include_fixtures {
        out.extend(fixture_records()?);
    }
    Ok(out)
}

pub(super) fn replay(claim: &str, d: &Descriptor) -> Result<Record> {
    let order = need(d.order, "order")?;
    let (lo, hi) = need(d.window, "window")?;
    let t = semidegree_window_sample(order, lo, hi, &sampler(need(d.seed, "seed")?, order, d.mix_steps))?;
    Ok(evaluate(claim, &t, d.clone()))
}
