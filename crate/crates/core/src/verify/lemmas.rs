//! Arc-emptiness properties of sampled path configurations.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Descriptor, Outcome, Record};
use super::{need, CampaignConfig};
use crate::configuration::{lemma33_property, lemma34_property, ConfigurationSampler, LemmaVerdict};
use crate::error::{Error, Result};
use crate::format::serialize;
use crate::generators::split_seed;

pub(super) const CLAIM_33: &str = "lem3.3";
pub(super) const CLAIM_34: &str = "lem3.4";
pub(super) const CLAIM_SKIP: &str = "lem3.3-3.4";

const BATCH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaPropertiesConfig {
    /// `count` is the number of conforming configurations wanted.
    pub campaign: CampaignConfig,
    pub sampler: ConfigurationSampler,
    /// Give up after this many samples.
    pub max_samples: usize,
}

impl LemmaPropertiesConfig {
    pub fn new(campaign: CampaignConfig) -> Self {
        let max_samples = 1000 * campaign.count.max(1);
        LemmaPropertiesConfig { campaign, sampler: ConfigurationSampler::default(), max_samples }
    }
}

/// Records for sample `index`: a skip when the sample does not conform,
/// otherwise one record per lemma.
fn evaluate(sampler: &ConfigurationSampler, seed: u64, index: u64) -> Result<Vec<Record>> {
    let sample = sampler.sample(seed);
    let t = &sample.tournament;
    let d = Descriptor { order: Some(t.order()), seed: Some(seed), instance: Some(index), ..Default::default() };
    let Some(cfg) = sample.configuration else {
        return Ok(vec![Record::new(CLAIM_SKIP, d, Outcome::PreconditionSkip).with_note("no conforming z")]);
    };
    let d = Descriptor { r: Some(cfg.r()), ..d };
    let mut out = Vec::new();
    for (claim, verdict) in [(CLAIM_33, lemma33_property(t, &cfg)?), (CLAIM_34, lemma34_property(t, &cfg)?)] {
        let rec = match verdict {
            LemmaVerdict::Holds { chords: 0 } => Record::new(claim, d.clone(), Outcome::Vacuous),
            LemmaVerdict::Holds { chords } => {
                Record::new(claim, d.clone(), Outcome::Pass).with_note(format!("{chords} chords checked"))
            }
            LemmaVerdict::Violated(v) => Record::new(claim, d.clone(), Outcome::Fail)
                .with_witness(cfg.path.clone())
                .with_note(format!(
                    "{}; configuration {}; tournament\n{}",
                    serde_json::to_string(&v).unwrap_or_default(),
                    serde_json::to_string(&cfg).unwrap_or_default(),
                    serialize(t)
                )),
        };
        out.push(rec);
    }
    Ok(out)
}

fn conforming(records: &[Record]) -> bool {
    records.first().is_some_and(|r| r.claim_id != CLAIM_SKIP)
}

/// Samples configurations until `count` conform, a violation occurs, or
/// `max_samples` is reached. Sample `i` uses seed `split_seed(seed, i)`.
pub fn run_lemma_properties_campaign(config: &LemmaPropertiesConfig) -> Result<Vec<Record>> {
    let c = &config.campaign;
    let mut out = Vec::new();
    let mut found = 0;
    let mut next = 0usize;
    while found < c.count {
        if next >= config.max_samples {
            return Err(Error::PreconditionViolated(format!(
                "only {found} of {} conforming configurations in {} samples",
                c.count, config.max_samples
            )));
        }
        let end = (next + BATCH).min(config.max_samples);
        let batch: Vec<Vec<Record>> = (next..end)
            .into_par_iter()
            .map(|i| {
                let i = i as u64;
                let start = std::time::Instant::now();
                let recs = evaluate(&config.sampler, split_seed(c.seed, i), i)?;
                let us = super::elapsed_us(start);
                Ok(recs.into_iter().map(|r| r.timed(us)).collect())
            })
            .collect::<Result<_>>()?;
        next = end;
        for recs in batch {
            let fail = recs.iter().any(Record::is_unexpected_failure);
            found += conforming(&recs) as usize;
            out.extend(recs);
            if fail || found == c.count {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

pub(super) fn replay(claim: &str, d: &Descriptor) -> Result<Record> {
    let recs = evaluate(&ConfigurationSampler::default(), need(d.seed, "seed")?, need(d.instance, "instance")?)?;
    recs.into_iter()
        .find(|r| r.claim_id == claim)
        .ok_or_else(|| Error::PreconditionViolated(format!("sample no longer yields a {claim} record")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_campaign_conforms_and_replays() {
        let config = LemmaPropertiesConfig::new(CampaignConfig::new(1, 20));
        let recs = run_lemma_properties_campaign(&config).unwrap();
        let conforming = recs.iter().filter(|r| r.claim_id == CLAIM_33).count();
        assert_eq!(conforming, 20);
        assert_eq!(recs.iter().filter(|r| r.claim_id == CLAIM_34).count(), 20);
        assert!(recs.iter().all(|r| !r.is_unexpected_failure()));
        assert!(recs.iter().any(|r| r.verdict == Outcome::PreconditionSkip));
        for r in recs.iter().step_by(7) {
            assert_eq!(super::super::replay(r).unwrap(), r.untimed());
        }
    }
}
