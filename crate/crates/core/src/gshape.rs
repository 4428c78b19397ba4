//! Structural recognition of the block family `G(k)` and of its
//! `S`-deleted subtournaments.
//!
//! Once the ordered pair `(x, y)` is fixed, every block is forced:
//! `A = N+(x) ∩ N+(y)`, `B = N+(y) \ A`, `{z} ∪ S = N+(x) \ (A ∪ {y})` with `z`
//! the unique member dominating `A`, and `C` the remainder. Trying all arcs
//! `x -> y` therefore decides membership exactly, without an isomorphism
//! search.

use serde::Serialize;

use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// Role assignment witnessing the `G(k)` block pattern. For an `S`-deleted
/// shape, `s` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GShape {
    pub k: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub s: VertexSet,
}

fn induces_regular(t: &Tournament, block: VertexSet) -> bool {
    let n2 = block.len().saturating_sub(1);
    n2.is_multiple_of(2) && block.iter().all(|v| 2 * t.out_degree_in(v, block) == n2)
}

/// Splits `V` into the forced blocks for the pair `(x, y)`; `s_and_z` still
/// holds `z` together with `S`.
fn forced_blocks(t: &Tournament, x: usize, y: usize) -> Option<(usize, VertexSet, VertexSet, VertexSet, VertexSet)> {
    if x == y || !t.arc(x, y) {
        return None;
    }
    let a = t.out_set(x).intersection(t.out_set(y));
    let b = t.out_set(y).difference(a);
    let zs = t.out_set(x).difference(a).difference(VertexSet::singleton(y));
    let mut dominators = zs.iter().filter(|&w| a.is_subset(t.out_set(w)));
    let z = dominators.next()?;
    if dominators.next().is_some() {
        return None;
    }
    let s = zs.difference(VertexSet::singleton(z));
    let c = t
        .vertices()
        .difference(a.union(b).union(zs))
        .difference(VertexSet::singleton(x))
        .difference(VertexSet::singleton(y));
    Some((z, a, b, c, s))
}

fn pattern_holds(t: &Tournament, shape: &GShape) -> bool {
    let one = VertexSet::singleton;
    let GShape { x, y, z, a, b, c, s, .. } = *shape;
    t.dominates(a, b.union(s))
        && t.dominates(b.union(s), c)
        && t.dominates(c, a)
        && t.dominates(c, one(z))
        && t.dominates(one(z), a)
        && t.dominates(one(x), one(y).union(one(z)).union(a).union(s))
        && t.dominates(one(x).union(one(z)).union(c).union(s), one(y))
        && t.dominates(one(y), a.union(b))
        && t.dominates(b.union(c), one(x))
        && induces_regular(t, a)
        && induces_regular(t, c)
}

/// `G(k)` shape of a regular tournament with the given `(x, y)` roles.
pub fn g_shape_at(t: &Tournament, x: usize, y: usize) -> Option<GShape> {
    let p = t.order();
    if p < 9 || !(p - 3).is_multiple_of(6) || !t.is_regular() {
        return None;
    }
    let k = (p - 3) / 6;
    let (z, a, b, c, s) = forced_blocks(t, x, y)?;
    if a.len() != 2 * k - 1 || c.len() != 2 * k - 1 || b.len() != k + 2 || s.len() != k {
        return None;
    }
    let shape = GShape { k, x, y, z, a, b, c, s };
    let zbs = b.union(s).union(VertexSet::singleton(z));
    (pattern_holds(t, &shape) && induces_regular(t, zbs)).then_some(shape)
}

/// First `G(k)` shape over all arcs `x -> y`, if `t` belongs to the family.
pub fn find_g_shape(t: &Tournament) -> Option<GShape> {
    t.arcs().find_map(|(x, y)| g_shape_at(t, x, y))
}

/// Shape of `G - S` for some member `G` of `G(k)`, with the given `(x, y)`.
///
/// The regular block `{z} ∪ B ∪ S` can only be checked partially without
/// `S`: every vertex of `{z} ∪ B` must have between `1` and `k + 1`
/// out-neighbours inside `{z} ∪ B`.
pub fn g_minus_s_shape_at(t: &Tournament, x: usize, y: usize) -> Option<GShape> {
    let p = t.order();
    if p < 8 || !(p - 3).is_multiple_of(5) {
        return None;
    }
    let k = (p - 3) / 5;
    let (z, a, b, c, s) = forced_blocks(t, x, y)?;
    if !s.is_empty() || a.len() != 2 * k - 1 || c.len() != 2 * k - 1 || b.len() != k + 2 {
        return None;
    }
    let shape = GShape { k, x, y, z, a, b, c, s };
    let zb = b.union(VertexSet::singleton(z));
    let block_ok = zb
        .iter()
        .all(|w| (1..=k + 1).contains(&t.out_degree_in(w, zb)));
    (pattern_holds(t, &shape) && block_ok).then_some(shape)
}

pub fn find_g_minus_s_shape(t: &Tournament) -> Option<GShape> {
    t.arcs().find_map(|(x, y)| g_minus_s_shape_at(t, x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_g, lemma32_counterexample, remark3_t11, GParams};
    use crate::generators::{random_regular, rotational_regular, SamplerConfig};

    #[test]
    fn recognises_built_members() {
        for k in 1..=3 {
            for seed in [None, Some(5), Some(17)] {
                let mut params = GParams::new(k);
                params.block_seed = seed;
                let g = build_g(params).unwrap();
                let shape = g_shape_at(&g.tournament, g.v("x"), g.v("y")).expect("member");
                assert_eq!(shape.k, k);
                assert_eq!(shape.z, g.v("z"));
                assert_eq!(shape.a, g.block("A"));
                assert_eq!(shape.b, g.block("B"));
                assert_eq!(shape.c, g.block("C"));
                assert_eq!(shape.s, g.block("S"));
                assert!(find_g_shape(&g.tournament).is_some());
            }
        }
    }

    #[test]
    fn recognises_relabelled_members() {
        let g = build_g(GParams::new(2)).unwrap();
        let perm: Vec<usize> = (0..15).map(|i| (i * 7 + 3) % 15).collect();
        let t = g.tournament.relabel(&perm).unwrap();
        let shape = find_g_shape(&t).unwrap();
        assert_eq!(shape.x, perm[g.v("x")]);
        assert_eq!(shape.y, perm[g.v("y")]);
    }

    #[test]
    fn rejects_non_members() {
        assert!(find_g_shape(&rotational_regular(4).unwrap()).is_none());
        assert!(find_g_shape(&remark3_t11().tournament).is_none());
        assert!(find_g_shape(&lemma32_counterexample(9, None).unwrap().tournament).is_none());
        for seed in 0..20 {
            let t = random_regular(7, &SamplerConfig::new(seed, 15)).unwrap();
            assert!(find_g_shape(&t).is_none());
        }
    }

    #[test]
    fn recognises_s_deleted_members() {
        for k in 1..=3 {
            let g = build_g(GParams::new(k)).unwrap();
            let ind = g.tournament.induced_minus(g.block("S")).unwrap();
            let (x, y) = (ind.new_index(g.v("x")).unwrap(), ind.new_index(g.v("y")).unwrap());
            assert!(g_minus_s_shape_at(&ind.tournament, x, y).is_some());
        }
        assert!(find_g_minus_s_shape(&rotational_regular(6).unwrap()).is_none());
    }
}
