use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::tournament::{Tournament, MAX_ORDER};
use crate::vertex_set::VertexSet;

/// A regular tournament containing a given tournament as the subtournament
/// induced by `embedding`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoonEmbedding {
    pub tournament: Tournament,
    /// `embedding[v]` is the image of vertex `v` of the embedded tournament.
    pub embedding: Vec<usize>,
    pub added: VertexSet,
}

/// Regular supertournament of order `p + m`, where `m` is the irregularity.
///
/// `p + m` is always odd because `m` has the parity of `p - 1`; the `+1`
/// fallback only guards against that invariant being broken upstream.
pub fn moon_embed(h: &Tournament) -> Result<MoonEmbedding> {
    let p = h.order();
    if p < 2 {
        return Err(Error::PreconditionViolated("embedding needs order at least 2".into()));
    }
    let m = h.irregularity();
    let target = if (p + m) % 2 == 1 { p + m } else { p + m + 1 };
    regular_completion(h, target)
}

/// Extends `h` by `target - p` new vertices to a regular tournament of order
/// `target`, orienting all new arcs by a feasible-orientation max-flow.
pub fn regular_completion(h: &Tournament, target: usize) -> Result<MoonEmbedding> {
    let p = h.order();
    if target > MAX_ORDER {
        return Err(Error::OrderTooLarge(target));
    }
    if target.is_multiple_of(2) || target < p {
        return Err(Error::EmbedFailed(format!(
            "target order {target} must be odd and at least {p}"
        )));
    }
    let n = (target - 1) / 2;
    let added = VertexSet::full(target).difference(VertexSet::full(p));
    let extra = added.len();

    // Each vertex must reach out-degree n; old vertices already have d+_H.
    let mut demand = vec![n; target];
    for (v, d) in demand.iter_mut().enumerate().take(p) {
        let have = h.out_degree(v);
        if have > n || n - have > extra {
            return Err(Error::EmbedFailed(format!(
                "vertex {v} has out-degree {have}, outside [{}, {n}]",
                n.saturating_sub(extra)
            )));
        }
        *d = n - have;
    }

    let mut pairs = Vec::new();
    for w in added {
        for u in 0..w {
            pairs.push((u, w));
        }
    }

    // source -> pair (1) -> either endpoint (1) -> sink (demand)
    let source = 0;
    let pair_base = 1;
    let vertex_base = pair_base + pairs.len();
    let sink = vertex_base + target;
    let mut net = FlowNetwork::new(sink + 1);
    let mut choice_edges = Vec::with_capacity(pairs.len());
    for (i, &(u, w)) in pairs.iter().enumerate() {
        net.add_edge(source, pair_base + i, 1);
        let to_u = net.add_edge(pair_base + i, vertex_base + u, 1);
        net.add_edge(pair_base + i, vertex_base + w, 1);
        choice_edges.push(to_u);
    }
    for (v, &d) in demand.iter().enumerate() {
        if d > 0 {
            net.add_edge(vertex_base + v, sink, d as i64);
        }
    }
    let flow = net.max_flow(source, sink);
    if flow != pairs.len() as i64 {
        return Err(Error::EmbedFailed(format!(
            "orientation flow {flow} short of {} pairs",
            pairs.len()
        )));
    }

    let mut out = vec![0u32; target];
    for (u, row) in out.iter_mut().enumerate().take(p) {
        *row = h.out_mask(u);
    }
    for (&(u, w), &edge) in pairs.iter().zip(&choice_edges) {
        if net.flow_on(edge) == 1 {
            out[u] |= 1 << w;
        } else {
            out[w] |= 1 << u;
        }
    }
    let tournament = Tournament::from_out_masks(out)?;
    if !tournament.is_regular() {
        return Err(Error::EmbedFailed("completion is not regular".into()));
    }
    Ok(MoonEmbedding {
        tournament,
        embedding: (0..p).collect(),
        added,
    })
}

struct FlowEdge {
    to: usize,
    cap: i64,
    original: i64,
}

/// Edmonds-Karp max flow on a small residual graph.
struct FlowNetwork {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<FlowEdge>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            adjacency: vec![Vec::new(); nodes],
            edges: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.edges.len();
        self.edges.push(FlowEdge { to, cap, original: cap });
        self.edges.push(FlowEdge { to: from, cap: 0, original: 0 });
        self.adjacency[from].push(id);
        self.adjacency[to].push(id + 1);
        id
    }

    fn flow_on(&self, edge: usize) -> i64 {
        self.edges[edge].original - self.edges[edge].cap
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        let mut parent_edge = vec![usize::MAX; self.adjacency.len()];
        loop {
            parent_edge.iter_mut().for_each(|e| *e = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut seen = vec![false; self.adjacency.len()];
            seen[source] = true;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &e in &self.adjacency[u] {
                    let to = self.edges[e].to;
                    if self.edges[e].cap > 0 && !seen[to] {
                        seen[to] = true;
                        parent_edge[to] = e;
                        queue.push_back(to);
                    }
                }
            }
            if !seen[sink] {
                return total;
            }
            let mut bottleneck = i64::MAX;
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                bottleneck = bottleneck.min(self.edges[e].cap);
                v = self.edges[e ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                self.edges[e].cap -= bottleneck;
                self.edges[e ^ 1].cap += bottleneck;
                v = self.edges[e ^ 1].to;
            }
            total += bottleneck;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{random_tournament, rotational_regular, semidegree_window_sample, SamplerConfig};

    fn assert_embeds(h: &Tournament, e: &MoonEmbedding) {
        let t = &e.tournament;
        assert!(t.is_regular());
        let kept: VertexSet = e.embedding.iter().collect();
        assert_eq!(kept, t.vertices().difference(e.added));
        for u in 0..h.order() {
            for v in 0..h.order() {
                if u != v {
                    assert_eq!(h.arc(u, v), t.arc(e.embedding[u], e.embedding[v]));
                }
            }
        }
    }

    #[test]
    fn regular_input_is_unchanged() {
        let h = rotational_regular(4).unwrap();
        let e = moon_embed(&h).unwrap();
        assert_eq!(e.tournament, h);
        assert!(e.added.is_empty());
    }

    #[test]
    fn transitive_triple_embeds_in_order_five() {
        let h = Tournament::transitive(3).unwrap();
        let e = moon_embed(&h).unwrap();
        assert_eq!(e.tournament.order(), 5);
        assert_embeds(&h, &e);
    }

    #[test]
    fn almost_regular_six_embeds_in_order_seven() {
        let h = semidegree_window_sample(6, 2, 3, &SamplerConfig::new(3, 6)).unwrap();
        assert_eq!(h.irregularity(), 1);
        let e = moon_embed(&h).unwrap();
        assert_eq!(e.tournament.order(), 7);
        assert_embeds(&h, &e);
        let back = e.tournament.induced_minus(e.added).unwrap();
        assert_eq!(back.tournament, h);
    }

    #[test]
    fn random_tournaments_embed_at_order_p_plus_m() {
        for seed in 0..300 {
            let h = random_tournament(2 + (seed as usize % 11), seed).unwrap();
            let m = h.irregularity();
            if h.order() + m > MAX_ORDER {
                continue;
            }
            let e = moon_embed(&h).unwrap();
            assert_eq!(e.tournament.order(), h.order() + m);
            assert_embeds(&h, &e);
        }
    }

    #[test]
    fn too_small_targets_fail() {
        let h = Tournament::transitive(3).unwrap();
        assert!(matches!(regular_completion(&h, 3), Err(Error::EmbedFailed(_))));
        assert!(matches!(regular_completion(&h, 6), Err(Error::EmbedFailed(_))));
        assert!(regular_completion(&h, 7).unwrap().tournament.is_regular());
    }
}
