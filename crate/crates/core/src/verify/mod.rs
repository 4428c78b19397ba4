//! Seeded verification campaigns and fixture checks.
//!
//! Every campaign fans instances out to the rayon pool and collects the
//! records back in instance order, so an identical configuration yields an
//! identical record stream apart from `wall_time_us`. Each record's
//! descriptor is enough to rebuild its instance; see [`replay`].

mod examples;
mod lemmas;
mod lem32;
pub mod report;
mod thm15;
mod thm16;

use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use examples::run_paper_examples;
pub use lem32::{run_lemma32_campaign, Lemma32Config};
pub use lemmas::{run_lemma_properties_campaign, LemmaPropertiesConfig};
pub use report::{Descriptor, Outcome, Record, Summary};
pub use thm15::{run_theorem15_campaign, SBoundRule, Theorem15Config};
pub use thm16::{remark2_windows, run_theorem16_campaign, Theorem16Config};

use crate::error::{Error, Result};
use crate::generators::SamplerConfig;
use crate::vertex_set::VertexSet;

/// Settings shared by the sampled campaigns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub seed: u64,
    pub count: usize,
    /// 3-cycle reversals per sample; `None` means `10 p^2`.
    pub mix_steps: Option<usize>,
}

impl CampaignConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        CampaignConfig { seed, count, mix_steps: None }
    }

    fn sampler(&self, seed: u64, order: usize) -> SamplerConfig {
        sampler(seed, order, self.mix_steps)
    }
}

fn sampler(seed: u64, order: usize, mix_steps: Option<usize>) -> SamplerConfig {
    SamplerConfig { seed, order, mix_steps, count: 1 }
}

fn elapsed_us(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

fn set_of(vs: &[usize]) -> VertexSet {
    vs.iter().collect()
}

fn need<T>(value: Option<T>, field: &str) -> Result<T> {
    value.ok_or_else(|| Error::PreconditionViolated(format!("descriptor lacks {field}")))
}

/// Recomputes a record from its descriptor alone. The result equals the
/// original record up to `wall_time_us`, which is zero.
pub fn replay(record: &Record) -> Result<Record> {
    replay_timed(record).map(|r| r.untimed())
}

fn replay_timed(record: &Record) -> Result<Record> {
    let claim = record.claim_id.as_str();
    let d = &record.descriptor;
    match claim {
        thm15::CLAIM => thm15::replay(d),
        lem32::CLAIM_I | lem32::CLAIM_II if d.fixture.is_none() => lem32::replay(claim, d),
        thm16::CLAIM_4 | thm16::CLAIM_3 if d.fixture.is_none() => thm16::replay(claim, d),
        lemmas::CLAIM_33 | lemmas::CLAIM_34 | lemmas::CLAIM_SKIP => lemmas::replay(claim, d),
        _ => {
            let fixtures = run_paper_examples()
                .into_iter()
                .chain(lem32::fixture_records()?)
                .chain(thm16::fixture_records()?);
            fixtures
                .into_iter()
                .find(|r| r.claim_id == record.claim_id && r.descriptor == *d)
                .ok_or_else(|| Error::PreconditionViolated(format!("no fixture record for claim {claim}")))
        }
    }
}
