use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tourney::checks::{is_d_arc_pancyclic, is_d_strongly_panconnected, spectrum_minus, Verdict};
use tourney::constructions::{build_g, lemma32_counterexample, remark3_t11, remark4_h9, GParams};
use tourney::format::{parse, serialize_labeled};
use tourney::generators::{moon_embed, random_regular, random_tournament, semidegree_window_sample, SamplerConfig};
use tourney::spectrum::witness_path;
use tourney::verify::report::{write_human, write_jsonl};
use tourney::verify::{
    run_lemma32_campaign, run_lemma_properties_campaign, run_paper_examples, run_theorem15_campaign,
    run_theorem16_campaign, CampaignConfig, Lemma32Config, LemmaPropertiesConfig, Record, SBoundRule, Summary,
    Theorem15Config, Theorem16Config,
};
use tourney::{LabeledTournament, VertexSet};

#[derive(Parser)]
#[command(name = "tourney", version, about = "Tournaments, exact path spectra and verification campaigns")]
struct Cli {
    /// Machine-readable output (JSON, or JSON lines for reports).
    #[arg(long, global = true)]
    json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for campaigns (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a tournament.
    #[command(subcommand)]
    Gen(Gen),
    /// Build a named construction.
    #[command(subcommand)]
    Build(Build),
    /// Path-length spectrum of an ordered pair.
    Spectrum {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Source vertex: index or role name.
        #[arg(long)]
        from: String,
        /// Target vertex: index or role name.
        #[arg(long)]
        to: String,
        /// Delete these vertices first (indices or role names, comma separated).
        #[arg(long, value_delimiter = ',')]
        remove: Vec<String>,
        /// Print one witness path per length.
        #[arg(long)]
        witness: bool,
    },
    /// Check a pancyclicity or panconnectedness property.
    Check {
        property: Property,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Run a verification campaign.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Subcommand)]
enum Gen {
    /// Rotational regular tournament of order 2n+1.
    Rotational {
        #[arg(long)]
        n: usize,
    },
    /// Random regular tournament of order 2n+1.
    RandomRegular {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Uniform random tournament.
    Random {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random tournament with every semidegree in [lo, hi].
    Window {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        lo: usize,
        #[arg(long)]
        hi: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Regular tournament of order p+m containing the input.
    MoonEmbed {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
}

#[derive(Args)]
struct Sampling {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// 3-cycle reversals (default 10 p^2).
    #[arg(long)]
    mix_steps: Option<usize>,
}

#[derive(Subcommand)]
enum Build {
    /// Member of the block family G(k), order 6k+3.
    G {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        block_seed: Option<u64>,
    },
    /// Regular order-11 tournament with S = {v1, v2}.
    Remark3,
    /// Order-9 tournament H.
    Remark4,
    /// Counterexample of order 7, 9, 11 or 15.
    Lemma32 {
        #[arg(long)]
        variant: usize,
        #[arg(long)]
        block_seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Pancyclic,
    Panconnected,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Paper,
    Boundary,
}

#[derive(Args)]
struct Campaign {
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    mix_steps: Option<usize>,
}

impl Campaign {
    fn config(&self) -> CampaignConfig {
        CampaignConfig { seed: self.seed, count: self.count, mix_steps: self.mix_steps }
    }
}

#[derive(Subcommand)]
enum Verify {
    /// Every fixture claim.
    PaperExamples,
    /// Path extension in T - S for random regular T.
    Thm15 {
        #[arg(long, value_delimiter = ',', default_value = "11")]
        orders: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Rule::Paper)]
        rule: Rule,
        /// Also scan the order-11 fixture.
        #[arg(long)]
        remark3: bool,
        #[command(flatten)]
        campaign: Campaign,
    },
    /// Length 3 (or 3 or 4) paths in T - S.
    Lem32 {
        #[arg(long, default_value_t = 5)]
        min_n: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[command(flatten)]
        campaign: Campaign,
    },
    /// Strong panconnectedness inside the semidegree windows.
    Thm16 {
        #[arg(long, value_delimiter = ',', default_value = "11,13")]
        orders: Vec<usize>,
        #[command(flatten)]
        campaign: Campaign,
    },
    /// Arc-emptiness properties of sampled path configurations.
    #[command(name = "lemmas33-34")]
    Lemmas {
        #[command(flatten)]
        campaign: Campaign,
    },
}

fn read_tournament(path: &Path) -> anyhow::Result<LabeledTournament> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn resolve(lt: &LabeledTournament, token: &str) -> anyhow::Result<VertexSet> {
    if let Some(v) = lt.resolve(token) {
        return Ok(VertexSet::singleton(v));
    }
    lt.role(token).ok_or_else(|| anyhow!("unknown vertex or role {token:?}"))
}

fn vertex(lt: &LabeledTournament, token: &str) -> anyhow::Result<usize> {
    lt.resolve(token).ok_or_else(|| anyhow!("unknown vertex {token:?}"))
}

fn generate(cmd: Gen) -> anyhow::Result<LabeledTournament> {
    let sampler = |seed, order, mix_steps| SamplerConfig { seed, order, mix_steps, count: 1 };
    Ok(match cmd {
        Gen::Rotational { n } => tourney::generators::rotational_regular(n)?.into(),
        Gen::RandomRegular { n, sampling } => {
            random_regular(n, &sampler(sampling.seed, 2 * n + 1, sampling.mix_steps))?.into()
        }
        Gen::Random { order, seed } => random_tournament(order, seed)?.into(),
        Gen::Window { order, lo, hi, sampling } => {
            semidegree_window_sample(order, lo, hi, &sampler(sampling.seed, order, sampling.mix_steps))?.into()
        }
        Gen::MoonEmbed { input } => {
            let h = read_tournament(&input)?;
            let e = moon_embed(&h.tournament)?;
            LabeledTournament::new(e.tournament)
                .with_role("H", e.embedding.iter().collect())?
                .with_role("S", e.added)?
        }
    })
}

fn build(cmd: Build) -> anyhow::Result<LabeledTournament> {
    Ok(match cmd {
        Build::G { k, block_seed } => build_g(GParams { k, block_seed })?,
        Build::Remark3 => remark3_t11(),
        Build::Remark4 => remark4_h9(),
        Build::Lemma32 { variant, block_seed } => lemma32_counterexample(variant, block_seed)?,
    })
}

fn spectrum(input: &Path, from: &str, to: &str, remove: &[String], witness: bool, json_out: bool) -> anyhow::Result<String> {
    let lt = read_tournament(input)?;
    let t = &lt.tournament;
    let (x, y) = (vertex(&lt, from)?, vertex(&lt, to)?);
    let mut s = VertexSet::default();
    for token in remove {
        s = s.union(resolve(&lt, token)?);
    }
    let spec = spectrum_minus(t, s, x, y, t.order())?;
    let ind = t.induced_minus(s)?;
    let paths: Vec<(usize, Vec<usize>)> = if witness {
        let (nx, ny) = (ind.new_index(x).unwrap(), ind.new_index(y).unwrap());
        spec.iter()
            .filter_map(|k| {
                let p = witness_path(&ind.tournament, nx, ny, k).ok()??;
                Some((k, p.into_iter().map(|v| ind.old_index(v)).collect()))
            })
            .collect()
    } else {
        Vec::new()
    };
    if json_out {
        let mut v = json!({ "source": x, "target": y, "removed": s.to_vec(), "lengths": spec.to_vec() });
        if witness {
            v["witnesses"] = json!(paths.iter().map(|(k, p)| json!({ "length": k, "path": p })).collect::<Vec<_>>());
        }
        return Ok(format!("{v}\n"));
    }
    let mut out = format!("({x}, {y}): {spec}\n");
    for (k, p) in paths {
        out += &format!("  {k}: {p:?}\n");
    }
    Ok(out)
}

/// Returns the rendered result and whether the property holds.
fn check(property: Property, d: usize, input: &Path, json_out: bool) -> anyhow::Result<(String, bool)> {
    let lt = read_tournament(input)?;
    let t = &lt.tournament;
    let (name, failure) = match property {
        Property::Pancyclic => (
            "arc-pancyclic",
            match is_d_arc_pancyclic(t, d)? {
                Verdict::Holds => None,
                Verdict::Fails(f) => Some((json!(f), format!("arc {} -> {} lies on no cycle of length {}", f.u, f.v, f.length))),
            },
        ),
        Property::Panconnected => (
            "strongly-panconnected",
            match is_d_strongly_panconnected(t, d)? {
                Verdict::Holds => None,
                Verdict::Fails(f) => Some((json!(f), format!("no ({}, {})-path of length {}", f.x, f.y, f.length))),
            },
        ),
    };
    let holds = failure.is_none();
    let text = if json_out {
        format!("{}\n", json!({ "property": name, "d": d, "holds": holds, "failure": failure.as_ref().map(|f| &f.0) }))
    } else {
        match &failure {
            None => format!("{d}-{name}: holds\n"),
            Some((_, why)) => format!("{d}-{name}: fails: {why}\n"),
        }
    };
    Ok((text, holds))
}

fn verify(cmd: Verify) -> anyhow::Result<(&'static str, Vec<Record>)> {
    Ok(match cmd {
        Verify::PaperExamples => ("paper-examples", run_paper_examples()),
        Verify::Thm15 { orders, rule, remark3, campaign } => {
            let rule = match rule {
                Rule::Paper => SBoundRule::Paper,
                Rule::Boundary => SBoundRule::Boundary,
            };
            let mut config = Theorem15Config::new(orders, rule, campaign.config());
            config.include_remark3 = remark3;
            ("thm15", run_theorem15_campaign(&config)?)
        }
        Verify::Lem32 { min_n, max_n, campaign } => {
            let mut config = Lemma32Config::new(campaign.config());
            config.min_n = min_n;
            config.max_n = max_n;
            ("lem32", run_lemma32_campaign(&config)?)
        }
        Verify::Thm16 { orders, campaign } => {
            let mut config = Theorem16Config::new(campaign.config());
            config.orders = orders;
            ("thm16", run_theorem16_campaign(&config)?)
        }
        Verify::Lemmas { campaign } => {
            ("lemmas33-34", run_lemma_properties_campaign(&LemmaPropertiesConfig::new(campaign.config()))?)
        }
    })
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(bytes).context("writing stdout"),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(k) = cli.threads {
        if k == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    let (bytes, ok) = match cli.command {
        Command::Gen(g) => (serialize_labeled(&generate(g)?).into_bytes(), true),
        Command::Build(b) => (serialize_labeled(&build(b)?).into_bytes(), true),
        Command::Spectrum { input, from, to, remove, witness } => {
            (spectrum(&input, &from, &to, &remove, witness, cli.json)?.into_bytes(), true)
        }
        Command::Check { property, d, input } => {
            let (text, holds) = check(property, d, &input, cli.json)?;
            (text.into_bytes(), holds)
        }
        Command::Verify(v) => {
            let (campaign, records) = verify(v)?;
            let mut buf = Vec::new();
            if cli.json {
                write_jsonl(&mut buf, campaign, &records)?;
            } else {
                write_human(&mut buf, campaign, &records, false)?;
            }
            (buf, Summary::of(&records).unexpected_failures() == 0)
        }
    };
    emit(&cli.out, &bytes)?;
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
