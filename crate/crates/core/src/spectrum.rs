//! Exact path-length spectra by dynamic programming over vertex subsets.
//!
//! For a fixed source `x`, the table maps every subset `M` of `V \ {x}` to the
//! set of vertices `y in M` such that some path starts at `x`, visits exactly
//! `{x} ∪ M` and ends at `y`. Lengths are `|M|`, so one pass yields the
//! spectra from `x` to every target. Subsets are indexed in a compressed
//! coordinate system that drops the source bit, so the table has `2^(p-1)`
//! entries.

use std::cell::RefCell;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::{Tournament, MAX_ORDER};
use crate::vertex_set::Bits;

/// Set of path or cycle lengths, bit `k` for length `k`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LengthSet(pub u32);

impl LengthSet {
    pub const EMPTY: LengthSet = LengthSet(0);

    #[inline]
    pub fn contains(self, k: usize) -> bool {
        k < 32 && self.0 >> k & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, k: usize) {
        self.0 |= 1 << k;
    }

    /// Lengths `lo..=hi`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> LengthSet {
        (lo..=hi).collect()
    }

    #[inline]
    pub fn contains_all(self, other: LengthSet) -> bool {
        other.0 & !self.0 == 0
    }

    /// Smallest member of `other` that is missing here.
    pub fn first_missing(self, other: LengthSet) -> Option<usize> {
        let missing = other.0 & !self.0;
        (missing != 0).then(|| missing.trailing_zeros() as usize)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members shifted up by `by`.
    pub fn shifted(self, by: usize) -> LengthSet {
        LengthSet(self.0 << by)
    }

    /// Members `>= lo`.
    pub fn at_least(self, lo: usize) -> LengthSet {
        LengthSet(self.0 & !((1u32 << lo.min(31)) - 1))
    }
}

impl FromIterator<usize> for LengthSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = LengthSet::EMPTY;
        for k in iter {
            s.insert(k);
        }
        s
    }
}

impl fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, k) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

/// Lengths of all `(source, target)`-paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSpectrum {
    pub source: usize,
    pub target: usize,
    pub lengths: LengthSet,
}

impl PathSpectrum {
    pub fn contains(&self, k: usize) -> bool {
        self.lengths.contains(k)
    }
}

/// Spectra for every ordered pair, `lengths[x * p + y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTable {
    order: usize,
    lengths: Vec<LengthSet>,
}

impl SpectrumTable {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> LengthSet {
        self.lengths[x * self.order + y]
    }

    pub fn spectrum(&self, x: usize, y: usize) -> PathSpectrum {
        PathSpectrum {
            source: x,
            target: y,
            lengths: self.get(x, y),
        }
    }
}

fn check_pair(t: &Tournament, x: usize, y: usize) -> Result<()> {
    let p = t.order();
    if p > MAX_ORDER {
        return Err(Error::OrderTooLarge(p));
    }
    for v in [x, y] {
        if v >= p {
            return Err(Error::IndexOutOfRange { index: v, order: p });
        }
    }
    if x == y {
        return Err(Error::SameVertex(x));
    }
    Ok(())
}

#[inline]
fn compress(mask: u32, source: usize) -> u32 {
    let low = mask & ((1u32 << source) - 1);
    let high = (mask >> (source + 1)) << source;
    low | high
}

#[inline]
fn expand(index: usize, source: usize) -> usize {
    if index < source {
        index
    } else {
        index + 1
    }
}

/// Reusable subset-DP workspace.
///
/// After [`run`](Self::run) the table for that source stays available for
/// witness reconstruction until the next run.
#[derive(Default)]
pub struct SpectrumEngine {
    table: Vec<u32>,
    layers: Vec<Vec<u32>>,
    out: Vec<u32>,
    source: usize,
    order: usize,
    max_len: usize,
    dense: bool,
}

impl SpectrumEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self) {
        if self.dense {
            let used = (1usize << self.order.saturating_sub(1)).min(self.table.len());
            self.table[..used].iter_mut().for_each(|e| *e = 0);
        } else {
            for layer in &mut self.layers {
                for &m in layer.iter() {
                    self.table[m as usize] = 0;
                }
                layer.clear();
            }
        }
    }

    /// Runs the DP from `source` for paths of at most `max_len` arcs and
    /// returns, for each vertex `y`, the lengths of `(source, y)`-paths.
    /// The entry for `source` itself is empty.
    pub fn run(&mut self, t: &Tournament, source: usize, max_len: usize) -> Vec<LengthSet> {
        let p = t.order();
        assert!(source < p && p <= MAX_ORDER);
        self.reset();
        let rest = p - 1;
        let size = 1usize << rest;
        if self.table.len() < size {
            self.table.resize(size, 0);
        }
        self.out.clear();
        self.out
            .extend((0..rest).map(|r| compress(t.out_mask(expand(r, source)), source)));
        self.source = source;
        self.order = p;
        self.max_len = max_len.min(rest);
        self.dense = self.max_len == rest;

        let mut spectra = vec![LengthSet::EMPTY; p];
        if self.max_len == 0 {
            return spectra;
        }
        let full = (size - 1) as u32;
        let first = compress(t.out_mask(source), source);
        let mut reach = vec![0u32; rest + 1];

        if self.dense {
            for r in Bits(first) {
                self.table[1 << r] = 1 << r;
            }
            for m in 1..size {
                let ends = self.table[m];
                if ends == 0 {
                    continue;
                }
                reach[m.count_ones() as usize] |= ends;
                let mut next = 0u32;
                for e in Bits(ends) {
                    next |= self.out[e];
                }
                next &= full & !(m as u32);
                for v in Bits(next) {
                    self.table[m | 1 << v] |= 1 << v;
                }
            }
        } else {
            if self.layers.len() <= self.max_len {
                self.layers.resize_with(self.max_len + 1, Vec::new);
            }
            for r in Bits(first) {
                self.table[1 << r] = 1 << r;
                self.layers[1].push(1 << r);
            }
            for k in 1..=self.max_len {
                let layer = std::mem::take(&mut self.layers[k]);
                for &m in &layer {
                    let ends = self.table[m as usize];
                    reach[k] |= ends;
                    if k == self.max_len {
                        continue;
                    }
                    let mut next = 0u32;
                    for e in Bits(ends) {
                        next |= self.out[e];
                    }
                    next &= full & !m;
                    for v in Bits(next) {
                        let slot = &mut self.table[(m | 1 << v) as usize];
                        if *slot == 0 {
                            self.layers[k + 1].push(m | 1 << v);
                        }
                        *slot |= 1 << v;
                    }
                }
                self.layers[k] = layer;
            }
        }

        for (k, &ends) in reach.iter().enumerate().skip(1) {
            for r in Bits(ends) {
                spectra[expand(r, source)].insert(k);
            }
        }
        spectra
    }

    /// A `(source, target)`-path with `k` arcs from the last run, if any.
    pub fn witness(&self, target: usize, k: usize) -> Option<Vec<usize>> {
        let source = self.source;
        if target == source || target >= self.order || k == 0 || k > self.max_len {
            return None;
        }
        let rt = if target < source { target } else { target - 1 };
        let has = |m: usize| m.count_ones() as usize == k && self.table[m] >> rt & 1 == 1;
        let mut mask = if self.dense {
            (1..1usize << (self.order - 1)).find(|&m| has(m))?
        } else {
            self.layers[k].iter().map(|&m| m as usize).find(|&m| has(m))?
        };
        let mut path = vec![target];
        let mut cur = rt;
        while mask.count_ones() > 1 {
            mask &= !(1 << cur);
            let prev = Bits(self.table[mask]).find(|&e| self.out[e] >> cur & 1 == 1)?;
            path.push(expand(prev, source));
            cur = prev;
        }
        path.push(source);
        path.reverse();
        Some(path)
    }
}

thread_local! {
    static ENGINE: RefCell<SpectrumEngine> = RefCell::new(SpectrumEngine::new());
}

/// Runs `f` with this thread's shared engine.
pub fn with_engine<R>(f: impl FnOnce(&mut SpectrumEngine) -> R) -> R {
    ENGINE.with(|e| f(&mut e.borrow_mut()))
}

pub fn path_spectrum(t: &Tournament, x: usize, y: usize) -> Result<PathSpectrum> {
    check_pair(t, x, y)?;
    let spectra = with_engine(|e| e.run(t, x, t.order() - 1));
    Ok(PathSpectrum {
        source: x,
        target: y,
        lengths: spectra[y],
    })
}

/// Spectra from `x` to every vertex, restricted to lengths `<= max_len`.
pub fn spectra_from(t: &Tournament, x: usize, max_len: usize) -> Vec<LengthSet> {
    with_engine(|e| e.run(t, x, max_len))
}

/// Spectra of every ordered pair, lengths `<= max_len`.
pub fn all_pairs_spectra_up_to(t: &Tournament, max_len: usize) -> SpectrumTable {
    let p = t.order();
    let mut lengths = Vec::with_capacity(p * p);
    with_engine(|e| {
        for x in 0..p {
            lengths.extend(e.run(t, x, max_len));
        }
    });
    SpectrumTable { order: p, lengths }
}

pub fn all_pairs_spectra(t: &Tournament) -> SpectrumTable {
    all_pairs_spectra_up_to(t, t.order().saturating_sub(1))
}

pub fn witness_path(t: &Tournament, x: usize, y: usize, k: usize) -> Result<Option<Vec<usize>>> {
    check_pair(t, x, y)?;
    Ok(with_engine(|e| {
        e.run(t, x, k.min(t.order() - 1));
        e.witness(y, k)
    }))
}

/// `true` iff `path` is a simple path of `t` (distinct vertices, consecutive arcs).
pub fn is_path(t: &Tournament, path: &[usize]) -> bool {
    let mut seen = 0u32;
    for &v in path {
        if v >= t.order() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    path.windows(2).all(|w| t.arc(w[0], w[1]))
}

/// `true` iff `t` has a Hamiltonian path from `from` to `to`.
pub fn has_hamiltonian_path(t: &Tournament, from: usize, to: usize) -> bool {
    if from == to {
        return t.order() == 1;
    }
    spectra_from(t, from, t.order() - 1)[to].contains(t.order() - 1)
}

/// Largest order accepted by [`brute_force_spectrum`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 10;

/// Exhaustive depth-first enumeration of simple `(x, y)`-paths.
pub fn brute_force_spectrum(t: &Tournament, x: usize, y: usize) -> Result<PathSpectrum> {
    if t.order() > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OrderTooLarge(t.order()));
    }
    check_pair(t, x, y)?;
    fn dfs(t: &Tournament, v: usize, y: usize, visited: u32, len: usize, acc: &mut LengthSet) {
        for w in Bits(t.out_mask(v) & !visited) {
            if w == y {
                acc.insert(len + 1);
            } else {
                dfs(t, w, y, visited | 1 << w, len + 1, acc);
            }
        }
    }
    let mut lengths = LengthSet::EMPTY;
    dfs(t, x, y, 1 << x, 0, &mut lengths);
    Ok(PathSpectrum {
        source: x,
        target: y,
        lengths,
    })
}

/// Lengths of cycles through the arc `u -> v`.
pub fn cycle_spectrum_through_arc(t: &Tournament, u: usize, v: usize) -> Result<LengthSet> {
    check_pair(t, u, v)?;
    if !t.arc(u, v) {
        return Err(Error::NoSuchArc(u, v));
    }
    Ok(path_spectrum(t, v, u)?.lengths.shifted(1))
}
