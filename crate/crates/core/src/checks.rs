//! Predicates built on path spectra: arc pancyclicity, strong
//! panconnectedness, the path-extension property of regular tournaments with
//! a deleted vertex set, and the length-3-or-4 lemma.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gshape::{find_g_shape, g_shape_at, GShape};
use crate::spectrum::{all_pairs_spectra, all_pairs_spectra_up_to, spectra_from, LengthSet, SpectrumTable};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Outcome of a checker: either the property holds or the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict<F> {
    Holds,
    Fails(F),
}

impl<F> Verdict<F> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn failure(&self) -> Option<&F> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(f) => Some(f),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArcFailure {
    pub u: usize,
    pub v: usize,
    /// Missing cycle length.
    pub length: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairFailure {
    pub x: usize,
    pub y: usize,
    /// Missing path length.
    pub length: usize,
}

/// Every arc lies on a cycle of every length in `[d, p]`.
pub fn is_d_arc_pancyclic(t: &Tournament, d: usize) -> Result<Verdict<ArcFailure>> {
    let p = t.order();
    if d < 3 || d > p {
        return Err(Error::PreconditionViolated(format!("d = {d} outside [3, {p}]")));
    }
    Ok(arc_pancyclic_in(&all_pairs_spectra(t), t, d))
}

/// Arc pancyclicity read off a precomputed spectrum table.
pub fn arc_pancyclic_in(table: &SpectrumTable, t: &Tournament, d: usize) -> Verdict<ArcFailure> {
    let wanted = LengthSet::range(d, t.order());
    for (u, v) in t.arcs() {
        let cycles = table.get(v, u).shifted(1);
        if let Some(length) = cycles.first_missing(wanted) {
            return Verdict::Fails(ArcFailure { u, v, length });
        }
    }
    Verdict::Holds
}

/// Every ordered pair has paths of every length in `[d, p-1]`.
pub fn is_d_strongly_panconnected(t: &Tournament, d: usize) -> Result<Verdict<PairFailure>> {
    let p = t.order();
    if d < 3 || d + 1 > p {
        return Err(Error::PreconditionViolated(format!("d = {d} outside [3, {}]", p.saturating_sub(1))));
    }
    Ok(panconnected_in(&all_pairs_spectra(t), d))
}

pub fn panconnected_in(table: &SpectrumTable, d: usize) -> Verdict<PairFailure> {
    let p = table.order();
    let wanted = LengthSet::range(d, p - 1);
    for x in 0..p {
        for y in 0..p {
            if x == y {
                continue;
            }
            if let Some(length) = table.get(x, y).first_missing(wanted) {
                return Verdict::Fails(PairFailure { x, y, length });
            }
        }
    }
    Verdict::Holds
}

fn half_order(t: &Tournament) -> Result<usize> {
    if !t.is_regular() {
        return Err(Error::PreconditionViolated("tournament is not regular".into()));
    }
    Ok(t.order() / 2)
}

fn check_pair_outside(t: &Tournament, s: VertexSet, x: usize, y: usize) -> Result<()> {
    for v in [x, y] {
        if v >= t.order() {
            return Err(Error::IndexOutOfRange { index: v, order: t.order() });
        }
        if s.contains(v) {
            return Err(Error::PreconditionViolated(format!("vertex {v} lies in S")));
        }
    }
    if x == y {
        return Err(Error::SameVertex(x));
    }
    if !s.is_subset(t.vertices()) {
        return Err(Error::SOutOfRange {
            index: s.difference(t.vertices()).first().unwrap_or(0),
            order: t.order(),
        });
    }
    Ok(())
}

/// A regular tournament `T` of order `2n+1`, a deleted set `S`, a pair
/// `(x, y)` outside `S` and a length `r` in `[3, 2n - |S| - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionInstance {
    pub tournament: Tournament,
    pub s: VertexSet,
    pub x: usize,
    pub y: usize,
    pub r: usize,
}

impl ExtensionInstance {
    pub fn new(tournament: Tournament, s: VertexSet, x: usize, y: usize, r: usize) -> Result<Self> {
        let n = half_order(&tournament)?;
        check_pair_outside(&tournament, s, x, y)?;
        let max_r = (2 * n).saturating_sub(s.len() + 1);
        if r < 3 || r > max_r {
            return Err(Error::PreconditionViolated(format!("r = {r} outside [3, {max_r}]")));
        }
        Ok(ExtensionInstance { tournament, s, x, y, r })
    }

    /// Half-order `n` of the regular tournament.
    pub fn n(&self) -> usize {
        self.tournament.order() / 2
    }
}

/// Spectrum of `(x, y)` in `T - S`, in the labels of `T`.
pub fn spectrum_minus(t: &Tournament, s: VertexSet, x: usize, y: usize, max_len: usize) -> Result<LengthSet> {
    check_pair_outside(t, s, x, y)?;
    let ind = t.induced_minus(s)?;
    let (nx, ny) = (ind.new_index(x).unwrap(), ind.new_index(y).unwrap());
    Ok(spectra_from(&ind.tournament, nx, max_len)[ny])
}

/// `r` in the spectrum of `T - S` implies `r + 1` in it. Fails with `r`.
pub fn extension_holds(inst: &ExtensionInstance) -> Result<Verdict<usize>> {
    let spec = spectrum_minus(&inst.tournament, inst.s, inst.x, inst.y, inst.r + 1)?;
    if spec.contains(inst.r) && !spec.contains(inst.r + 1) {
        Ok(Verdict::Fails(inst.r))
    } else {
        Ok(Verdict::Holds)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionFailure {
    pub x: usize,
    pub y: usize,
    pub r: usize,
    pub spectrum: LengthSet,
}

/// `(x, y, spectrum, first failing r)` for one ordered pair.
pub type ScanRow = (usize, usize, LengthSet, Option<usize>);

/// Extension check of `T - S` for every ordered pair outside `S` and every
/// `r in [3, 2n - |S| - 1]`, all in the labels of `T`. Returns one entry per
/// pair (in row-major order) with the first failing `r`, if any.
pub fn extension_scan(t: &Tournament, s: VertexSet) -> Result<Vec<ScanRow>> {
    half_order(t)?;
    let ind = t.induced_minus(s)?;
    let sub = &ind.tournament;
    let q = sub.order();
    let table = all_pairs_spectra(sub);
    let mut out = Vec::with_capacity(q * q.saturating_sub(1));
    for nx in 0..q {
        for ny in 0..q {
            if nx == ny {
                continue;
            }
            let spec = table.get(nx, ny);
            let fail = first_extension_gap(spec, q - 1);
            out.push((ind.old_index(nx), ind.old_index(ny), spec, fail));
        }
    }
    Ok(out)
}

/// Smallest `r in [3, max_len - 1]` with `r` in `spec` but `r + 1` not.
pub fn first_extension_gap(spec: LengthSet, max_len: usize) -> Option<usize> {
    (3..max_len).find(|&r| spec.contains(r) && !spec.contains(r + 1))
}

/// All extension failures of `T - S`.
pub fn extension_failures(t: &Tournament, s: VertexSet) -> Result<Vec<ExtensionFailure>> {
    Ok(extension_scan(t, s)?
        .into_iter()
        .filter_map(|(x, y, spectrum, fail)| fail.map(|r| ExtensionFailure { x, y, r, spectrum }))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaPart {
    /// `|S| <= (n-1)/3`: a path of length 3 unless `T` is in `G(k)`.
    LengthThree,
    /// `|S| <= n/2`: a path of length 3 or 4.
    ThreeOrFour,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma32Outcome {
    pub part: LemmaPart,
    pub length3: bool,
    pub length4: bool,
    /// Set for part (i) when no length-3 path exists and `T` matches `G(k)`.
    pub g_shape: Option<GShape>,
}

impl Lemma32Outcome {
    pub fn holds(&self) -> bool {
        match self.part {
            LemmaPart::LengthThree => self.length3 || self.g_shape.is_some(),
            LemmaPart::ThreeOrFour => self.length3 || self.length4,
        }
    }
}

pub fn lemma32_preconditions(t: &Tournament, s: VertexSet, part: LemmaPart) -> Result<usize> {
    let n = half_order(t)?;
    let k = s.len();
    match part {
        LemmaPart::LengthThree if n < 3 || 3 * k > n - 1 => Err(Error::PreconditionViolated(format!(
            "part (i) needs n >= 3 and |S| <= (n-1)/3; n = {n}, |S| = {k}"
        ))),
        LemmaPart::ThreeOrFour if n < 5 || 2 * k > n => Err(Error::PreconditionViolated(format!(
            "part (ii) needs n >= 5 and |S| <= n/2; n = {n}, |S| = {k}"
        ))),
        _ => Ok(n),
    }
}

pub fn lemma32_check(t: &Tournament, s: VertexSet, x: usize, y: usize, part: LemmaPart) -> Result<Lemma32Outcome> {
    lemma32_preconditions(t, s, part)?;
    let spec = spectrum_minus(t, s, x, y, 4)?;
    Ok(lemma32_outcome(t, x, y, part, spec))
}

/// Builds the outcome from a spectrum already computed for `T - S`.
pub fn lemma32_outcome(t: &Tournament, x: usize, y: usize, part: LemmaPart, spec: LengthSet) -> Lemma32Outcome {
    let length3 = spec.contains(3);
    let g_shape = if part == LemmaPart::LengthThree && !length3 {
        g_shape_at(t, x, y).or_else(|| find_g_shape(t))
    } else {
        None
    };
    Lemma32Outcome {
        part,
        length3,
        length4: spec.contains(4),
        g_shape,
    }
}

/// Spectra of `T - S` up to length 4, in the labels of `T` (entries of `S`
/// stay empty).
pub fn short_spectra_minus(t: &Tournament, s: VertexSet) -> Result<Vec<LengthSet>> {
    let ind = t.induced_minus(s)?;
    let table = all_pairs_spectra_up_to(&ind.tournament, 4);
    let p = t.order();
    let mut out = vec![LengthSet::EMPTY; p * p];
    for nx in 0..ind.tournament.order() {
        for ny in 0..ind.tournament.order() {
            out[ind.old_index(nx) * p + ind.old_index(ny)] = table.get(nx, ny);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_g, lemma32_counterexample, remark3_t11, GParams};
    use crate::generators::{random_regular, rotational_regular, semidegree_window_sample, SamplerConfig};

    #[test]
    fn alspach_examples() {
        assert!(is_d_arc_pancyclic(&rotational_regular(4).unwrap(), 3).unwrap().holds());
        let tt = Tournament::transitive(5).unwrap();
        assert_eq!(
            is_d_arc_pancyclic(&tt, 3).unwrap(),
            Verdict::Fails(ArcFailure { u: 0, v: 1, length: 3 })
        );
        assert!(is_d_arc_pancyclic(&tt, 2).is_err());
        assert!(is_d_arc_pancyclic(&tt, 6).is_err());
    }

    #[test]
    fn almost_regular_ten_is_four_arc_pancyclic() {
        for seed in 0..10 {
            let t = semidegree_window_sample(10, 4, 5, &SamplerConfig::new(seed, 10)).unwrap();
            assert_eq!(t.irregularity(), 1);
            assert!(is_d_arc_pancyclic(&t, 4).unwrap().holds());
        }
    }

    #[test]
    fn panconnectedness_examples() {
        assert!(is_d_strongly_panconnected(&rotational_regular(3).unwrap(), 3).unwrap().holds());
        assert!(!is_d_strongly_panconnected(&Tournament::transitive(5).unwrap(), 3).unwrap().holds());

        let g = build_g(GParams::new(1)).unwrap();
        let ind = g.tournament.induced_minus(g.block("S")).unwrap();
        let (x, y) = (ind.new_index(g.v("x")).unwrap(), ind.new_index(g.v("y")).unwrap());
        let table = all_pairs_spectra(&ind.tournament);
        assert!(!table.get(x, y).contains(3));
        assert!(!panconnected_in(&table, 3).holds());
    }

    #[test]
    fn extension_examples() {
        let t = random_regular(5, &SamplerConfig::new(9, 11)).unwrap();
        for v in 0..11 {
            assert!(extension_failures(&t, VertexSet::singleton(v)).unwrap().is_empty());
        }

        let r3 = remark3_t11();
        let inst = ExtensionInstance::new(r3.tournament.clone(), r3.block("S"), r3.v("x0"), r3.v("x3"), 3).unwrap();
        assert_eq!(extension_holds(&inst).unwrap(), Verdict::Fails(3));

        let t = Tournament::transitive(3).unwrap();
        assert!(ExtensionInstance::new(t, VertexSet::EMPTY, 0, 2, 3).is_err());
    }

    #[test]
    fn vacuous_extension() {
        // (x0, x3) has no path of length 9 in T11 - S of order 9 (max length 8)
        let r3 = remark3_t11();
        let inst = ExtensionInstance::new(r3.tournament.clone(), r3.block("S"), r3.v("x0"), r3.v("x3"), 7).unwrap();
        let spec = spectrum_minus(&r3.tournament, r3.block("S"), r3.v("x0"), r3.v("x3"), 8).unwrap();
        assert_eq!(extension_holds(&inst).unwrap().holds(), !spec.contains(7) || spec.contains(8));
    }

    #[test]
    fn lemma32_examples() {
        let g = build_g(GParams::new(2)).unwrap();
        let out = lemma32_check(&g.tournament, g.block("S"), g.v("x"), g.v("y"), LemmaPart::LengthThree).unwrap();
        assert!(!out.length3);
        assert_eq!(out.g_shape.map(|s| s.s), Some(g.block("S")));
        assert!(out.holds());

        let t = random_regular(5, &SamplerConfig::new(1, 11)).unwrap();
        let out = lemma32_check(&t, VertexSet::singleton(4), 0, 7, LemmaPart::LengthThree).unwrap();
        assert!(out.length3);

        let c7 = lemma32_counterexample(7, None).unwrap();
        assert!(matches!(
            lemma32_check(&c7.tournament, c7.block("S"), c7.v("x"), c7.v("y"), LemmaPart::ThreeOrFour),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
