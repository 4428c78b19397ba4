//! Path extension in `T - S` for random regular `T`.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Descriptor, Outcome, Record};
use super::{elapsed_us, need, sampler, set_of, CampaignConfig};
use crate::checks::{extension_scan, first_extension_gap, spectrum_minus};
use crate::constructions::remark3_t11;
use crate::error::{Error, Result};
use crate::generators::{random_regular, split_seed};
use crate::spectrum::{witness_path, LengthSet};
use crate::tournament::Tournament;
use crate::vertex_set::{subsets_up_to, VertexSet};

pub(super) const CLAIM: &str = "thm1.5";
const REMARK3: &str = "remark3";

/// Which deleted sets a campaign enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SBoundRule {
    /// Every `S` with `|S| <= ⌊(n-2)/2⌋`; failures are bugs.
    Paper,
    /// Every `S` with `|S| = ⌈(n-1)/2⌉`; failures are sharpness witnesses.
    Boundary,
}

impl SBoundRule {
    pub fn name(self) -> &'static str {
        match self {
            SBoundRule::Paper => "paper",
            SBoundRule::Boundary => "boundary",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(SBoundRule::Paper),
            "boundary" => Ok(SBoundRule::Boundary),
            other => Err(Error::PreconditionViolated(format!("unknown rule {other}"))),
        }
    }

    /// Deleted sets for a regular tournament of order `2n+1`.
    pub fn subsets(self, order: usize) -> Vec<VertexSet> {
        let n = order / 2;
        let all = VertexSet::full(order);
        match self {
            SBoundRule::Paper => subsets_up_to(all, n.saturating_sub(2) / 2),
            SBoundRule::Boundary => {
                let size = n / 2;
                subsets_up_to(all, size).into_iter().filter(|s| s.len() == size).collect()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem15Config {
    pub orders: Vec<usize>,
    pub rule: SBoundRule,
    pub campaign: CampaignConfig,
    /// Also scan the order-11 fixture with its sharpness pair.
    pub include_remark3: bool,
}

impl Theorem15Config {
    pub fn new(orders: Vec<usize>, rule: SBoundRule, campaign: CampaignConfig) -> Self {
        Theorem15Config { orders, rule, campaign, include_remark3: false }
    }
}

fn pair_record(
    t: &Tournament,
    s: VertexSet,
    (x, y): (usize, usize),
    spec: LengthSet,
    rule: SBoundRule,
    mut descriptor: Descriptor,
) -> Record {
    let q = t.order() - s.len();
    descriptor.pair = Some((x, y));
    let hypotheses = spec.iter().any(|r| (3..q - 1).contains(&r));
    match first_extension_gap(spec, q - 1) {
        Some(r) => {
            descriptor.r = Some(r);
            let ind = t.induced_minus(s).expect("S within range");
            let (nx, ny) = (ind.new_index(x).unwrap(), ind.new_index(y).unwrap());
            let path = witness_path(&ind.tournament, nx, ny, r)
                .expect("valid pair")
                .expect("length in spectrum")
                .into_iter()
                .map(|v| ind.old_index(v))
                .collect();
            let rec = Record::new(CLAIM, descriptor, Outcome::Fail)
                .with_witness(path)
                .with_note(format!("T-S has a path of length {r} but none of length {}; spectrum {spec}", r + 1));
            if rule == SBoundRule::Boundary {
                rec.sharp()
            } else {
                rec
            }
        }
        None if hypotheses => Record::new(CLAIM, descriptor, Outcome::Pass),
        None => Record::new(CLAIM, descriptor, Outcome::Vacuous),
    }
}

/// Records for one tournament under every deleted set of the rule, one per
/// `(S, ordered pair)`.
fn scan(t: &Tournament, rule: SBoundRule, base: &Descriptor) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for s in rule.subsets(t.order()) {
        let start = Instant::now();
        let rows = extension_scan(t, s)?;
        let per = elapsed_us(start) / rows.len().max(1) as u64;
        let descriptor = Descriptor { s: Some(s.to_vec()), ..base.clone() };
        for (x, y, spec, _) in rows {
            out.push(pair_record(t, s, (x, y), spec, rule, descriptor.clone()).timed(per));
        }
    }
    Ok(out)
}

fn instance_seed(seed: u64, order: usize, index: u64) -> u64 {
    split_seed(split_seed(seed, order as u64), index)
}

/// For each order, `count` random regular tournaments; for each, every `S`
/// allowed by the rule and every ordered pair outside `S`, checked for all
/// `r` at once from the exact spectrum of `T - S`.
pub fn run_theorem15_campaign(config: &Theorem15Config) -> Result<Vec<Record>> {
    for &o in &config.orders {
        if o % 2 == 0 || !(11..=21).contains(&o) {
            return Err(Error::PreconditionViolated(format!("order {o} must be odd and in [11, 21]")));
        }
    }
    let c = &config.campaign;
    let jobs: Vec<(usize, u64)> = config
        .orders
        .iter()
        .flat_map(|&o| (0..c.count as u64).map(move |i| (o, i)))
        .collect();
    let mut chunks: Vec<Vec<Record>> = jobs
        .into_par_iter()
        .map(|(order, index)| {
            let seed = instance_seed(c.seed, order, index);
            let t = random_regular(order / 2, &c.sampler(seed, order))?;
            let base = Descriptor {
                order: Some(order),
                seed: Some(seed),
                instance: Some(index),
                mix_steps: c.mix_steps,
                rule: Some(config.rule.name().into()),
                ..Default::default()
            };
            scan(&t, config.rule, &base)
        })
        .collect::<Result<_>>()?;
    if config.include_remark3 {
        let t = remark3_t11();
        let rule = SBoundRule::Boundary;
        let base = Descriptor { order: Some(11), fixture: Some(REMARK3.into()), rule: Some(rule.name().into()), ..Default::default() };
        let s = t.block("S");
        let rows = extension_scan(&t.tournament, s)?;
        let descriptor = Descriptor { s: Some(s.to_vec()), ..base };
        chunks.push(
            rows.into_iter()
                .map(|(x, y, spec, _)| pair_record(&t.tournament, s, (x, y), spec, rule, descriptor.clone()))
                .collect(),
        );
    }
    Ok(chunks.into_iter().flatten().collect())
}

pub(super) fn replay(d: &Descriptor) -> Result<Record> {
    let rule = SBoundRule::parse(need(d.rule.as_deref(), "rule")?)?;
    let t = match d.fixture.as_deref() {
        Some(REMARK3) => remark3_t11().tournament,
        Some(other) => return Err(Error::PreconditionViolated(format!("unknown fixture {other}"))),
        None => {
            let order = need(d.order, "order")?;
            random_regular(order / 2, &sampler(need(d.seed, "seed")?, order, d.mix_steps))?
        }
    };
    let s = set_of(need(d.s.as_deref(), "S")?);
    let (x, y) = need(d.pair, "pair")?;
    let spec = spectrum_minus(&t, s, x, y, t.order() - s.len() - 1)?;
    let base = Descriptor { r: None, pair: None, ..d.clone() };
    Ok(pair_record(&t, s, (x, y), spec, rule, base))
}
