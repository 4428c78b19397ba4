//! Fixed constructions and the exact spectrum facts claimed for them.

use std::time::Instant;

use super::elapsed_us;
use super::report::{Descriptor, Outcome, Record};
use crate::checks::spectrum_minus;
use crate::constructions::{
    build_g, lemma32_counterexample, lemma32_variant15, remark3_t11, remark4_h9, CycleOrientation, GParams,
};
use crate::error::Result;
use crate::labeled::LabeledTournament;
use crate::spectrum::{witness_path, LengthSet};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn fixture(name: &str, order: usize) -> Descriptor {
    Descriptor { order: Some(order), fixture: Some(name.into()), ..Default::default() }
}

fn induces_regular(t: &Tournament, block: VertexSet) -> bool {
    t.induced_on(block).tournament.is_regular()
}

/// Length-3 path of `T - S` in the labels of `T`.
fn witness_minus(t: &Tournament, s: VertexSet, x: usize, y: usize, k: usize) -> Option<Vec<usize>> {
    let ind = t.induced_minus(s).ok()?;
    let path = witness_path(&ind.tournament, ind.new_index(x)?, ind.new_index(y)?, k).ok()??;
    Some(path.into_iter().map(|v| ind.old_index(v)).collect())
}

/// Spectrum of `(x, y)` in `T - S` contains 3 and misses 4.
fn three_not_four(claim: &str, lt: &LabeledTournament, s: VertexSet, x: &str, y: &str, d: Descriptor, extra: String) -> Result<Record> {
    let t = &lt.tournament;
    let (x, y) = (lt.v(x), lt.v(y));
    let spec = spectrum_minus(t, s, x, y, t.order())?;
    let d = Descriptor { s: Some(s.to_vec()), pair: Some((x, y)), ..d };
    let mut rec = Record::new(claim, d, verdict(spec.contains(3) && !spec.contains(4)))
        .with_note(format!("{extra}spectrum of T-S is {spec}"));
    if let Some(w) = witness_minus(t, s, x, y, 3) {
        rec = rec.with_witness(w);
    }
    Ok(rec)
}

fn remark3() -> Result<Record> {
    let lt = remark3_t11();
    let regular = lt.tournament.is_regular();
    let mut rec = three_not_four("remark3", &lt, lt.block("S"), "x0", "x3", fixture("remark3", 11), format!("regular: {regular}; "))?;
    if !regular {
        rec.verdict = Outcome::Fail;
    }
    Ok(rec)
}

/// The claim covers only the spectrum of `H - z`; regularity is reported.
fn remark4() -> Result<Record> {
    let lt = remark4_h9();
    let regular = lt.tournament.is_regular();
    let z = VertexSet::singleton(lt.v("z"));
    three_not_four("remark4", &lt, z, "x", "y", fixture("remark4", 9), format!("H regular: {regular}; "))
}

/// Regularity with semidegree `3k+1`, regular blocks `A`, `C`, `{z} ∪ B ∪ S`,
/// and no `(x, y)`-path of length 3 in `G - S`.
pub fn check_g_member(params: GParams) -> Result<Record> {
    let start = Instant::now();
    let g = build_g(params)?;
    let t = &g.tournament;
    let k = params.k;
    let semidegree = t.scores().iter().all(|&d| d == 3 * k + 1) && t.is_regular();
    let zbs = g.block("B").union(g.block("S")).union(VertexSet::singleton(g.v("z")));
    let blocks = [g.block("A"), g.block("C"), zbs].into_iter().all(|b| induces_regular(t, b));
    let (s, x, y) = (g.block("S"), g.v("x"), g.v("y"));
    let spec = spectrum_minus(t, s, x, y, 3)?;
    let d = Descriptor {
        order: Some(t.order()),
        k: Some(k),
        block_seed: params.block_seed,
        s: Some(s.to_vec()),
        pair: Some((x, y)),
        fixture: Some(format!("G({k})")),
        ..Default::default()
    };
    Ok(Record::new("G-family", d, verdict(semidegree && blocks && !spec.contains(3)))
        .with_note(format!(
            "semidegree {}: {semidegree}; blocks regular: {blocks}; length 3 in G-S: {}",
            3 * k + 1,
            spec.contains(3)
        ))
        .timed(elapsed_us(start)))
}

/// Spectrum facts of the order-7, 9, 11 and 15 counterexamples.
pub fn check_counterexample(lt: &LabeledTournament, variant: usize, d: Descriptor) -> Result<Record> {
    let t = &lt.tournament;
    let (s, x, y) = (lt.block("S"), lt.v("x"), lt.v("y"));
    let spec = spectrum_minus(t, s, x, y, t.order())?;
    let above2 = spec.at_least(3);
    let ok = t.is_regular()
        && match variant {
            11 => above2.is_empty(),
            15 => above2 == LengthSet::range(5, 10),
            _ => !spec.contains(3) && !spec.contains(4),
        };
    let d = Descriptor { s: Some(s.to_vec()), pair: Some((x, y)), variant: Some(variant), ..d };
    Ok(Record::new("lem3.2-counterexample", d, verdict(ok)).with_note(format!("spectrum of T-S is {spec}")))
}

/// Every fixture claim, in a fixed order.
pub fn run_paper_examples() -> Vec<Record> {
    let mut out = Vec::new();
    let mut push = |r: Result<Record>, what: &str| {
        out.push(r.unwrap_or_else(|e| Record::new(what, Descriptor::default(), Outcome::Fail).with_note(e.to_string())));
    };
    push(remark3(), "remark3");
    push(remark4(), "remark4");
    for k in 1..=3 {
        push(check_g_member(GParams::new(k)), "G-family");
    }
    for variant in [7, 9, 11] {
        let d = fixture(&format!("counterexample-{variant}"), variant);
        push(
            lemma32_counterexample(variant, None).and_then(|lt| check_counterexample(&lt, variant, d)),
            "lem3.2-counterexample",
        );
    }
    for oa in CycleOrientation::ALL {
        for ob in CycleOrientation::ALL {
            let name = format!("counterexample-15-{oa:?}-{ob:?}").to_lowercase();
            push(check_counterexample(&lemma32_variant15(oa, ob), 15, fixture(&name, 15)), "lem3.2-counterexample");
        }
    }
    out
}
