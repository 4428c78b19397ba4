//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use tourney::checks::{is_d_arc_pancyclic, is_d_strongly_panconnected, spectrum_minus};
use tourney::constructions::{
    build_g, lemma32_counterexample, lemma32_variant15, remark3_t11, remark4_h9, CycleOrientation, GParams,
};
use tourney::generators::{random_regular, random_tournament, rng_from_seed, SamplerConfig};
use tourney::spectrum::{all_pairs_spectra, brute_force_spectrum, path_spectrum};
use tourney::verify::{
    run_lemma32_campaign, run_lemma_properties_campaign, run_theorem15_campaign, run_theorem16_campaign,
    CampaignConfig, Lemma32Config, LemmaPropertiesConfig, Record, SBoundRule, Summary, Theorem15Config,
    Theorem16Config,
};
use tourney::{LabeledTournament, LengthSet, Tournament, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn spec_minus(lt: &LabeledTournament, s: VertexSet, x: &str, y: &str) -> Result<LengthSet, String> {
    let t = &lt.tournament;
    spectrum_minus(t, s, lt.v(x), lt.v(y), t.order()).map_err(|e| e.to_string())
}

fn three_not_four(spec: LengthSet) -> bool {
    spec.contains(3) && !spec.contains(4)
}

fn campaign_outcome(records: &[Record], min_records: usize) -> Outcome {
    let s = Summary::of(records);
    if let Some(r) = records.iter().find(|r| r.is_unexpected_failure()) {
        return Err(format!("{} unexpected failures, first {:?}", s.unexpected_failures(), r));
    }
    ensure(s.total() >= min_records, || format!("only {} records", s.total()))?;
    Ok(s.to_string())
}

fn c1_remark3() -> Outcome {
    let lt = remark3_t11();
    ensure(lt.tournament.order() == 11 && lt.tournament.is_regular(), || "not regular of order 11".into())?;
    let s = VertexSet::from_iter([lt.v("v1"), lt.v("v2")]);
    let spec = spec_minus(&lt, s, "x0", "x3")?;
    ensure(three_not_four(spec), || format!("spectrum {spec}"))?;
    Ok(format!("(x0, x3) spectrum of T-{{v1, v2}} = {spec}"))
}

fn c2_remark4() -> Outcome {
    let lt = remark4_h9();
    let spec = spec_minus(&lt, VertexSet::singleton(lt.v("z")), "x", "y")?;
    ensure(three_not_four(spec), || format!("spectrum {spec}"))?;
    Ok(format!("(x, y) spectrum of H-z = {spec}"))
}

fn g_member_ok(params: GParams) -> Result<(), String> {
    let g = build_g(params).map_err(|e| e.to_string())?;
    let t = &g.tournament;
    let k = params.k;
    ensure(t.order() == 6 * k + 3, || format!("order {}", t.order()))?;
    ensure(
        (0..t.order()).all(|v| t.out_degree(v) == 3 * k + 1 && t.in_degree(v) == 3 * k + 1),
        || format!("{params:?}: semidegrees not {}", 3 * k + 1),
    )?;
    let zbs = g.block("B").union(g.block("S")).union(VertexSet::singleton(g.v("z")));
    for (name, block) in [("A", g.block("A")), ("C", g.block("C")), ("{z}∪B∪S", zbs)] {
        ensure(t.induced_on(block).tournament.is_regular(), || format!("{params:?}: block {name} not regular"))?;
    }
    let spec = spec_minus(&g, g.block("S"), "x", "y")?;
    ensure(!spec.contains(3), || format!("{params:?}: G-S has length 3, spectrum {spec}"))
}

fn c3_g_family() -> Outcome {
    for k in 1..=3 {
        g_member_ok(GParams::new(k))?;
    }
    let mut seeded = 0;
    for k in 1..=2 {
        for seed in 0..20 {
            g_member_ok(GParams::new(k).with_block_seed(1000 + seed))?;
            seeded += 1;
        }
    }
    Ok(format!("k = 1, 2, 3 rotational blocks plus {seeded} seeded block choices"))
}

fn c4_counterexamples() -> Outcome {
    let check = |lt: &LabeledTournament, name: &str, ok: &dyn Fn(LengthSet) -> bool| -> Result<String, String> {
        ensure(lt.tournament.is_regular(), || format!("{name} not regular"))?;
        let spec = spec_minus(lt, lt.block("S"), "x", "y")?;
        ensure(ok(spec), || format!("{name}: spectrum {spec}"))?;
        Ok(format!("{name} {spec}"))
    };
    let no34 = |s: LengthSet| !s.contains(3) && !s.contains(4);
    let mut parts = Vec::new();
    for v in [7, 9] {
        parts.push(check(&lemma32_counterexample(v, None).map_err(|e| e.to_string())?, &format!("v{v}"), &no34)?);
    }
    let tiny = |s: LengthSet| LengthSet::range(1, 2).contains_all(s);
    parts.push(check(&lemma32_counterexample(11, None).map_err(|e| e.to_string())?, "v11", &tiny)?);
    let v15 = |s: LengthSet| no34(s) && s.at_least(3) == LengthSet::range(5, 10);
    for oa in CycleOrientation::ALL {
        for ob in CycleOrientation::ALL {
            check(&lemma32_variant15(oa, ob), &format!("v15 {oa:?}/{ob:?}"), &v15)?;
        }
    }
    parts.push("v15 x4 orientations".into());
    Ok(parts.join("; "))
}

fn c5_theorem15() -> Outcome {
    let mut records = Vec::new();
    for (order, count) in [(11, 200), (13, 50), (15, 25)] {
        let config = Theorem15Config::new(vec![order], SBoundRule::Paper, CampaignConfig::new(15, count));
        records.extend(run_theorem15_campaign(&config).map_err(|e| e.to_string())?);
    }
    // One record per (T, S, ordered pair outside S).
    let expected = 200 * (110 + 11 * 90) + 50 * (156 + 13 * 132 + 78 * 110) + 25 * (210 + 15 * 182 + 105 * 156);
    ensure(records.len() == expected, || format!("{} records, expected {expected}", records.len()))?;
    campaign_outcome(&records, expected)
}

fn c6_lemma32() -> Outcome {
    let mut config = Lemma32Config::new(CampaignConfig::new(32, 500));
    config.min_n = 5;
    config.max_n = 7;
    config.part_ii_only = true;
    config.include_fixtures = false;
    let records = run_lemma32_campaign(&config).map_err(|e| e.to_string())?;
    let instances: std::collections::BTreeSet<_> = records.iter().filter_map(|r| r.descriptor.instance).collect();
    ensure(instances.len() == 500, || format!("{} instances", instances.len()))?;
    campaign_outcome(&records, 500)
}

fn c7_theorem16() -> Outcome {
    let mut config = Theorem16Config::new(CampaignConfig::new(16, 100));
    config.include_fixtures = false;
    let records = run_theorem16_campaign(&config).map_err(|e| e.to_string())?;
    ensure(records.iter().all(|r| r.verdict != tourney::verify::Outcome::PreconditionSkip), || {
        "a sample missed its hypotheses".into()
    })?;
    campaign_outcome(&records, 400)
}

fn c8_oracle() -> Outcome {
    let mut mismatches = 0;
    let mut pairs = 0;
    for code in 0..1u64 << 10 {
        let mut bit = 0;
        let t = Tournament::from_fn(5, |_, _| {
            let b = code >> bit & 1 == 1;
            bit += 1;
            b
        })
        .unwrap();
        let table = all_pairs_spectra(&t);
        for x in 0..5 {
            for y in 0..5 {
                if x != y {
                    pairs += 1;
                    mismatches += (table.get(x, y) != brute_force_spectrum(&t, x, y).unwrap().lengths) as usize;
                }
            }
        }
    }
    let mut rng = rng_from_seed(8);
    for i in 0..1000 {
        let t = random_tournament(10, 80_000 + i).unwrap();
        for _ in 0..10 {
            let x = rng.gen_range(0..10);
            let y = (x + rng.gen_range(1..10)) % 10;
            pairs += 1;
            mismatches += (path_spectrum(&t, x, y).unwrap() != brute_force_spectrum(&t, x, y).unwrap()) as usize;
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches in {pairs} pairs"))?;
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn c9_lemmas() -> Outcome {
    let config = LemmaPropertiesConfig::new(CampaignConfig::new(33, 500));
    let records = run_lemma_properties_campaign(&config).map_err(|e| e.to_string())?;
    let conforming = records.iter().filter(|r| r.claim_id == "lem3.3").count();
    ensure(conforming == 500, || format!("{conforming} conforming configurations"))?;
    let s = Summary::of(&records);
    let samples = s.precondition_skip + conforming;
    campaign_outcome(&records, 1000).map(|m| format!("{m}; {conforming} conforming of {samples} samples"))
}

fn c10_classical() -> Outcome {
    for i in 0..50u64 {
        let n = 5 + (i as usize % 6);
        let t = random_regular(n, &SamplerConfig::new(10_000 + i, 2 * n + 1)).map_err(|e| e.to_string())?;
        ensure(is_d_arc_pancyclic(&t, 3).unwrap().holds(), || format!("instance {i} not arc pancyclic"))?;
        ensure(is_d_strongly_panconnected(&t, 3).unwrap().holds(), || format!("instance {i} not strongly panconnected"))?;
    }
    Ok("50 regular tournaments of orders 11..=21".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("order-11 fixture: T-{v1,v2} has (x0,x3) length 3, not 4", Duration::from_secs(1), c1_remark3),
        ("order-9 fixture: H-z has (x,y) length 3, not 4", Duration::from_secs(1), c2_remark4),
        ("family G(k), k = 1..3, regular blocks, G-S lacks length 3", Duration::from_secs(30), c3_g_family),
        ("length-3/4 counterexamples of orders 7, 9, 11, 15", Duration::from_secs(5), c4_counterexamples),
        ("path extension in T-S at orders 11, 13, 15", Duration::from_secs(300), c5_theorem15),
        ("length 3 or 4 in T-S, 500 instances", Duration::from_secs(120), c6_lemma32),
        ("4- and 3-strong panconnectedness in semidegree windows", Duration::from_secs(180), c7_theorem16),
        ("subset DP agrees with brute force", Duration::from_secs(120), c8_oracle),
        ("arc-emptiness of 500 conforming path configurations", Duration::from_secs(180), c9_lemmas),
        ("regular tournaments arc pancyclic and strongly panconnected", Duration::from_secs(120), c10_classical),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|m| {
            if took <= limit {
                Ok(m)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        let (tag, detail) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        failed += outcome.is_err() as usize;
        println!("{tag} {:>2} {name} [{took:.2?} / {limit:?}] {detail}", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
