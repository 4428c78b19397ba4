//! Explicitly defined tournaments: the block family `G(k)`, the order-11 and
//! order-9 sharpness examples and the four small counterexamples for the
//! length-3-or-4 lemma.
//!
//! Blocks that only need to induce *some* regular tournament use the
//! rotational tournament by default; an optional block seed swaps in seeded
//! random regular tournaments instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{mix64, random_regular, rotational_regular, split_seed, SamplerConfig};
use crate::labeled::LabeledTournament;
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Accumulates arcs and validates the result as a tournament.
struct ArcBuilder {
    out: Vec<u32>,
}

impl ArcBuilder {
    fn new(order: usize) -> Self {
        ArcBuilder {
            out: vec![0; order],
        }
    }

    fn arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
    }

    fn arcs(&mut self, arcs: &[(usize, usize)]) {
        for &(u, v) in arcs {
            self.arc(u, v);
        }
    }

    fn dominate(&mut self, from: VertexSet, to: VertexSet) {
        for u in from {
            self.out[u] |= to.bits();
        }
    }

    /// Places a regular tournament on `block` (listed in order).
    fn regular_block(&mut self, block: &[usize], seed: Option<u64>) -> Result<()> {
        if block.len() <= 1 {
            return Ok(());
        }
        debug_assert!(block.len() % 2 == 1);
        let n = block.len() / 2;
        let pattern = match seed {
            None => rotational_regular(n)?,
            Some(s) => random_regular(n, &SamplerConfig::new(s, block.len()))?,
        };
        self.embed(block, &pattern);
        Ok(())
    }

    fn embed(&mut self, block: &[usize], pattern: &Tournament) {
        for (i, j) in pattern.arcs() {
            self.arc(block[i], block[j]);
        }
    }

    fn finish(self) -> Result<Tournament> {
        Tournament::from_out_masks(self.out)
    }
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().collect()
}

fn range(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GParams {
    pub k: usize,
    pub block_seed: Option<u64>,
}

impl GParams {
    pub fn new(k: usize) -> Self {
        GParams { k, block_seed: None }
    }

    pub fn with_block_seed(mut self, seed: u64) -> Self {
        self.block_seed = Some(seed);
        self
    }

    pub fn order(&self) -> usize {
        6 * self.k + 3
    }
}

/// Member of `G(k)` on `{x, y, z} ∪ A ∪ B ∪ C ∪ S` with
/// `|A| = |C| = 2k-1`, `|B| = k+2`, `|S| = k`.
///
/// Labels: `x = 0`, `y = 1`, `z = 2`, then `A`, `B`, `C`, `S` consecutively.
pub fn build_g(params: GParams) -> Result<LabeledTournament> {
    let k = params.k;
    if k == 0 || params.order() > crate::tournament::MAX_ORDER {
        return Err(Error::OrderTooLarge(params.order()));
    }
    let (x, y, z) = (0, 1, 2);
    let a = range(3, 2 * k - 1);
    let b = range(3 + a.len(), k + 2);
    let c = range(3 + a.len() + b.len(), 2 * k - 1);
    let s = range(3 + a.len() + b.len() + c.len(), k);
    let (sa, sb, sc, ss) = (set(&a), set(&b), set(&c), set(&s));
    let sx = VertexSet::singleton(x);
    let sy = VertexSet::singleton(y);
    let sz = VertexSet::singleton(z);

    let mut g = ArcBuilder::new(params.order());
    g.dominate(sa, sb.union(ss));
    g.dominate(sb.union(ss), sc);
    g.dominate(sc, sa);
    g.dominate(sc, sz);
    g.dominate(sz, sa);
    g.dominate(sx, sy.union(sz).union(sa).union(ss));
    g.dominate(sx.union(sz).union(sc).union(ss), sy);
    g.dominate(sy, sa.union(sb));
    g.dominate(sb.union(sc), sx);

    let seeds = params.block_seed.map(|s| [split_seed(s, 0), split_seed(s, 1), split_seed(s, 2)]);
    g.regular_block(&a, seeds.map(|s| s[0]))?;
    g.regular_block(&c, seeds.map(|s| s[1]))?;
    let zbs: Vec<usize> = std::iter::once(z).chain(b.iter().copied()).chain(s.iter().copied()).collect();
    g.regular_block(&zbs, seeds.map(|s| s[2]))?;

    LabeledTournament::new(g.finish()?)
        .with_role("x", sx)?
        .with_role("y", sy)?
        .with_role("z", sz)?
        .with_role("A", sa)?
        .with_role("B", sb)?
        .with_role("C", sc)?
        .with_role("S", ss)
}

const REMARK3_NAMES: [&str; 11] = ["x0", "x1", "x2", "x3", "u1", "u2", "u3", "u4", "z", "v1", "v2"];

/// Regular tournament of order 11 given by in-neighbourhoods, with
/// `S = {v1, v2}` and `A = {u1, u2, u3, u4, z}`.
pub fn remark3_t11() -> LabeledTournament {
    let idx = |name: &str| REMARK3_NAMES.iter().position(|&n| n == name).unwrap();
    let ins = |names: &[&str]| names.iter().map(|n| idx(n)).collect::<Vec<_>>();
    let in_lists = vec![
        ins(&["u1", "u2", "u3", "u4", "z"]),
        ins(&["x0", "z", "u3", "u4", "v2"]),
        ins(&["x0", "x1", "z", "u3", "u4"]),
        ins(&["x0", "x1", "x2", "v1", "v2"]),
        ins(&["x1", "x2", "x3", "u4", "v2"]),
        ins(&["x1", "x2", "x3", "u1", "v1"]),
        ins(&["x3", "u1", "u2", "v1", "v2"]),
        ins(&["x3", "u2", "u3", "v1", "v2"]),
        ins(&["x3", "u1", "u2", "u3", "u4"]),
        ins(&["x0", "x1", "x2", "z", "u1"]),
        ins(&["x0", "x2", "z", "v1", "u2"]),
    ];
    let t = Tournament::from_in_neighborhoods(&in_lists).expect("order-11 fixture is a tournament");
    let mut lt = LabeledTournament::new(t);
    for (i, name) in REMARK3_NAMES.iter().enumerate() {
        lt.add_role(name, VertexSet::singleton(i)).unwrap();
    }
    lt.add_role("A", set(&[4, 5, 6, 7, 8])).unwrap();
    lt.add_role("S", set(&[9, 10])).unwrap();
    lt
}

/// Order-9 tournament on `{x, y, u, v, z} ∪ {a1, a2} ∪ {b1, b2}`.
pub fn remark4_h9() -> LabeledTournament {
    let (x, y, u, v, z, a1, a2, b1, b2) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
    let a = set(&[a1, a2]);
    let b = set(&[b1, b2]);
    let uvz = set(&[u, v, z]);
    let uv = set(&[u, v]);
    let sx = VertexSet::singleton(x);
    let sy = VertexSet::singleton(y);
    let sz = VertexSet::singleton(z);

    let mut h = ArcBuilder::new(9);
    h.dominate(sx, uvz);
    h.dominate(uvz, sy);
    h.dominate(b, uv);
    h.dominate(uv, a);
    h.dominate(sy, a.union(b));
    h.dominate(a.union(b), sx);
    h.dominate(a, sz);
    h.dominate(sz, b);
    h.arcs(&[
        (x, y),
        (u, v),
        (v, z),
        (z, u),
        (a1, a2),
        (b1, b2),
        (a1, b1),
        (a2, b2),
        (b2, a1),
        (a2, b1),
    ]);
    let mut lt = LabeledTournament::new(h.finish().expect("order-9 fixture is a tournament"));
    for (name, i) in [("x", x), ("y", y), ("u", u), ("v", v), ("z", z), ("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)] {
        lt.add_role(name, VertexSet::singleton(i)).unwrap();
    }
    lt.add_role("A", a).unwrap();
    lt.add_role("B", b).unwrap();
    lt
}

/// Orientation of a 3-vertex block `[p, q, r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleOrientation {
    /// `p -> q -> r -> p`
    Forward,
    /// `p -> r -> q -> p`
    Backward,
}

impl CycleOrientation {
    pub const ALL: [CycleOrientation; 2] = [CycleOrientation::Forward, CycleOrientation::Backward];

    fn pattern(self) -> Tournament {
        let c = rotational_regular(1).unwrap();
        match self {
            CycleOrientation::Forward => c,
            CycleOrientation::Backward => c.converse(),
        }
    }
}

pub const LEMMA32_VARIANTS: [usize; 4] = [7, 9, 11, 15];

/// Counterexamples of orders 7, 9, 11 and 15. For orders 7, 9 and 11 the
/// block seed selects the regular tournament on `{z} ∪ B ∪ S` (or
/// `{z} ∪ A ∪ S`); for order 15 it selects the two 3-cycle orientations.
pub fn lemma32_counterexample(variant: usize, block_seed: Option<u64>) -> Result<LabeledTournament> {
    match variant {
        7 => small_counterexample(3, 1, "B", block_seed),
        9 => small_counterexample(4, 2, "B", block_seed),
        11 => small_counterexample(5, 3, "A", block_seed),
        15 => {
            let (oa, ob) = match block_seed {
                None => (CycleOrientation::Forward, CycleOrientation::Forward),
                Some(s) => {
                    let bits = mix64(s);
                    (CycleOrientation::ALL[(bits & 1) as usize], CycleOrientation::ALL[(bits >> 1 & 1) as usize])
                }
            };
            Ok(lemma32_variant15(oa, ob))
        }
        other => Err(Error::InvalidVariant(other)),
    }
}

/// `{x, y, z} ∪ D ∪ S` with `xy, xz, zy`, `x -> S -> y`, `y -> D -> x` and a
/// regular tournament on `{z} ∪ D ∪ S`.
fn small_counterexample(d_len: usize, s_len: usize, d_name: &str, block_seed: Option<u64>) -> Result<LabeledTournament> {
    let (x, y, z) = (0, 1, 2);
    let d = range(3, d_len);
    let s = range(3 + d_len, s_len);
    let (sd, ss) = (set(&d), set(&s));
    let sx = VertexSet::singleton(x);
    let sy = VertexSet::singleton(y);

    let mut t = ArcBuilder::new(3 + d_len + s_len);
    t.arcs(&[(x, y), (x, z), (z, y)]);
    t.dominate(sx, ss);
    t.dominate(ss, sy);
    t.dominate(sy, sd);
    t.dominate(sd, sx);
    let block: Vec<usize> = std::iter::once(z).chain(d.iter().copied()).chain(s.iter().copied()).collect();
    t.regular_block(&block, block_seed)?;

    LabeledTournament::new(t.finish()?)
        .with_role("x", sx)?
        .with_role("y", sy)?
        .with_role("z", VertexSet::singleton(z))?
        .with_role(d_name, sd)?
        .with_role("S", ss)
}

/// Order-15 counterexample with `S = {a1, a2, b1, b2}` and 3-cycle blocks
/// `A`, `B` oriented as given.
pub fn lemma32_variant15(a_orientation: CycleOrientation, b_orientation: CycleOrientation) -> LabeledTournament {
    let (x, y, z, u, v) = (0, 1, 2, 3, 4);
    let a = [5, 6, 7];
    let b = [8, 9, 10];
    let (a1, a2, b1, b2) = (11, 12, 13, 14);
    let (sa, sb) = (set(&a), set(&b));
    let s = set(&[a1, a2, b1, b2]);
    let s_a = set(&[a1, a2]);
    let s_b = set(&[b1, b2]);
    let one = VertexSet::singleton;

    let mut t = ArcBuilder::new(15);
    t.arcs(&[
        (x, y),
        (x, z),
        (z, y),
        (x, u),
        (v, y),
        (v, u),
        (v, z),
        (z, u),
        (a1, a2),
        (b1, b2),
        (a2, b2),
        (a2, b1),
        (a1, b1),
        (b2, a1),
    ]);
    t.dominate(one(x), s);
    t.dominate(s, one(y));
    t.dominate(set(&[y, z, u, v]), sa);
    t.dominate(sb, set(&[x, u, v, z]));
    t.dominate(one(y), one(u).union(sb));
    t.dominate(sa, one(x).union(sb));
    t.dominate(one(v), one(x).union(sa));
    t.dominate(s, one(v));
    t.dominate(one(u), sa.union(s));
    t.embed(&a, &a_orientation.pattern());
    t.embed(&b, &b_orientation.pattern());
    t.dominate(s_b, sa);
    t.dominate(sa, s_a);
    t.dominate(s_a, sb);
    t.dominate(sb, s_b);
    t.dominate(s_b, one(z));
    t.dominate(one(z), s_a);

    let mut lt = LabeledTournament::new(t.finish().expect("order-15 fixture is a tournament"));
    for (name, i) in [("x", x), ("y", y), ("z", z), ("u", u), ("v", v), ("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)] {
        lt.add_role(name, one(i)).unwrap();
    }
    lt.add_role("A", sa).unwrap();
    lt.add_role("B", sb).unwrap();
    lt.add_role("S", s).unwrap();
    lt
}
