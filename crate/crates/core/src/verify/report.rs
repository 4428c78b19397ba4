//! Verification records, their line-delimited JSON form and a plain-text
//! rendering.

use std::fmt;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

/// Header line of every report stream.
pub const SCHEMA: &str = "tourney-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Vacuous,
    PreconditionSkip,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Vacuous => "vacuous",
            Outcome::PreconditionSkip => "precondition-skip",
        })
    }
}

/// Everything needed to rebuild the instance a record talks about. Unused
/// fields stay `None` and are left out of the JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<usize>,
    /// Seed of this instance (already split from the campaign seed).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub instance: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mix_steps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pair: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variant: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub block_seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fixture: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub claim_id: String,
    pub descriptor: Descriptor,
    pub verdict: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    /// Failure expected at a sharpness boundary.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub sharpness: bool,
    pub wall_time_us: u64,
}

impl Record {
    pub fn new(claim_id: &str, descriptor: Descriptor, verdict: Outcome) -> Self {
        Record {
            claim_id: claim_id.to_string(),
            descriptor,
            verdict,
            witness: None,
            note: None,
            sharpness: false,
            wall_time_us: 0,
        }
    }

    pub fn with_witness(mut self, witness: Vec<usize>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn sharp(mut self) -> Self {
        self.sharpness = true;
        self
    }

    pub fn timed(mut self, us: u64) -> Self {
        self.wall_time_us = us;
        self
    }

    /// A failure that is not an expected sharpness witness.
    pub fn is_unexpected_failure(&self) -> bool {
        self.verdict == Outcome::Fail && !self.sharpness
    }

    /// Same record with the timing zeroed, for comparisons.
    pub fn untimed(&self) -> Record {
        Record { wall_time_us: 0, ..self.clone() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub precondition_skip: usize,
    /// Failures flagged as sharpness witnesses (included in `fail`).
    pub sharpness: usize,
}

impl Summary {
    pub fn of(records: &[Record]) -> Summary {
        let mut s = Summary::default();
        for r in records {
            match r.verdict {
                Outcome::Pass => s.pass += 1,
                Outcome::Fail => {
                    s.fail += 1;
                    if r.sharpness {
                        s.sharpness += 1;
                    }
                }
                Outcome::Vacuous => s.vacuous += 1,
                Outcome::PreconditionSkip => s.precondition_skip += 1,
            }
        }
        s
    }

    pub fn unexpected_failures(&self) -> usize {
        self.fail - self.sharpness
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.vacuous + self.precondition_skip
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} records: {} pass, {} fail ({} sharpness), {} vacuous, {} precondition-skip",
            self.total(),
            self.pass,
            self.fail,
            self.sharpness,
            self.vacuous,
            self.precondition_skip
        )
    }
}

#[derive(Serialize, Deserialize)]
struct Header {
    schema: String,
    campaign: String,
}

pub fn write_jsonl(mut w: impl Write, campaign: &str, records: &[Record]) -> io::Result<()> {
    let header = Header { schema: SCHEMA.into(), campaign: campaign.into() };
    serde_json::to_writer(&mut w, &header)?;
    writeln!(w)?;
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        writeln!(w)?;
    }
    Ok(())
}

/// Reads a stream written by [`write_jsonl`]; returns the campaign name and
/// the records.
pub fn read_jsonl(r: impl BufRead) -> io::Result<(String, Vec<Record>)> {
    let bad = |e: serde_json::Error| io::Error::new(io::ErrorKind::InvalidData, e);
    let mut lines = r.lines();
    let first = lines
        .next()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidData, "empty report"))??;
    let header: Header = serde_json::from_str(&first).map_err(bad)?;
    if header.schema != SCHEMA {
        return Err(io::Error::new(
            io::ErrorKind::InvalidData,
            format!("unknown schema {}", header.schema),
        ));
    }
    let mut records = Vec::new();
    for line in lines {
        let line = line?;
        if !line.trim().is_empty() {
            records.push(serde_json::from_str(&line).map_err(bad)?);
        }
    }
    Ok((header.campaign, records))
}

fn describe(d: &Descriptor) -> String {
    let mut parts = Vec::new();
    if let Some(f) = &d.fixture {
        parts.push(f.clone());
    }
    if let Some(v) = d.order {
        parts.push(format!("p={v}"));
    }
    if let Some(v) = d.instance {
        parts.push(format!("#{v}"));
    }
    if let Some(v) = d.seed {
        parts.push(format!("seed={v}"));
    }
    if let Some((lo, hi)) = d.window {
        parts.push(format!("window=[{lo},{hi}]"));
    }
    if let Some(v) = d.k {
        parts.push(format!("k={v}"));
    }
    if let Some(v) = d.variant {
        parts.push(format!("variant={v}"));
    }
    if let Some(v) = d.block_seed {
        parts.push(format!("block_seed={v}"));
    }
    if let Some(s) = &d.s {
        parts.push(format!("S={s:?}"));
    }
    if let Some((x, y)) = d.pair {
        parts.push(format!("({x},{y})"));
    }
    if let Some(v) = d.r {
        parts.push(format!("r={v}"));
    }
    if let Some(v) = &d.rule {
        parts.push(format!("rule={v}"));
    }
    parts.join(" ")
}

/// One line per record that is not a plain pass, then the summary.
pub fn write_human(mut w: impl Write, campaign: &str, records: &[Record], verbose: bool) -> io::Result<()> {
    writeln!(w, "campaign {campaign}")?;
    for r in records {
        if !verbose && r.verdict == Outcome::Pass && r.note.is_none() {
            continue;
        }
        write!(w, "{:<22} {:<17}", r.claim_id, r.verdict.to_string())?;
        if r.sharpness {
            write!(w, " [sharpness]")?;
        }
        write!(w, " {}", describe(&r.descriptor))?;
        if let Some(p) = &r.witness {
            write!(w, " witness={p:?}")?;
        }
        if let Some(n) = &r.note {
            write!(w, " -- {n}")?;
        }
        writeln!(w)?;
    }
    writeln!(w, "{}", Summary::of(records))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Record> {
        vec![
            Record::new("a", Descriptor { order: Some(11), pair: Some((0, 3)), ..Default::default() }, Outcome::Pass),
            Record::new("b", Descriptor::default(), Outcome::Fail).sharp().with_witness(vec![0, 1]).timed(7),
            Record::new("c", Descriptor::default(), Outcome::PreconditionSkip).with_note("n < 5"),
        ]
    }

    #[test]
    fn jsonl_round_trip() {
        let records = sample();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, "demo", &records).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(&format!("{{\"schema\":\"{SCHEMA}\"")));
        assert_eq!(text.lines().count(), 4);
        let (campaign, back) = read_jsonl(&buf[..]).unwrap();
        assert_eq!(campaign, "demo");
        assert_eq!(back, records);
    }

    #[test]
    fn rejects_foreign_schema() {
        let text = "{\"schema\":\"other/9\",\"campaign\":\"x\"}\n";
        assert!(read_jsonl(text.as_bytes()).is_err());
    }

    #[test]
    fn summary_counts() {
        let s = Summary::of(&sample());
        assert_eq!((s.pass, s.fail, s.sharpness, s.precondition_skip), (1, 1, 1, 1));
        assert_eq!(s.unexpected_failures(), 0);
        let mut out = Vec::new();
        write_human(&mut out, "demo", &sample(), false).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("[sharpness]"));
        assert!(!text.contains("\na "));
    }
}
