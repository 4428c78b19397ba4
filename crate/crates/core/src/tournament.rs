//! Dense tournament representation.
//!
//! A tournament of order `p` is stored as `p` out-neighbourhood bitsets; bit `j`
//! of `out[i]` is set exactly when the arc `i -> j` is present. Every
//! constructor checks the three tournament invariants (no loops, exactly one
//! arc per pair, score sum `p(p-1)/2`), so a `Tournament` value is always
//! valid and immutable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported order. Endpoint sets of the subset DP fit in one `u32`.
pub const MAX_ORDER: usize = 26;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tournament {
    order: usize,
    out: Vec<u32>,
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Tournament({})", self.order)?;
        for i in 0..self.order {
            let row: String = (0..self.order)
                .map(|j| match (i == j, self.arc(i, j)) {
                    (true, _) => '-',
                    (false, true) => '1',
                    (false, false) => '0',
                })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    Ok(())
}

impl Tournament {
    /// Builds a tournament from an explicit arc list covering every pair once.
    pub fn from_arcs(order: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_order(order)?;
        let mut out = vec![0u32; order];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::IndexOutOfRange { index: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if out[u] & (1 << v) != 0 || out[v] & (1 << u) != 0 {
                return Err(Error::DuplicatePair(u.min(v), u.max(v)));
            }
            out[u] |= 1 << v;
        }
        Self::from_out_masks(out)
    }

    /// Builds a tournament from per-vertex out-neighbourhood masks.
    pub fn from_out_masks(out: Vec<u32>) -> Result<Self> {
        let order = out.len();
        check_order(order)?;
        let full = VertexSet::full(order).bits();
        for (i, &row) in out.iter().enumerate() {
            if row & !full != 0 {
                let index = (row & !full).trailing_zeros() as usize;
                return Err(Error::IndexOutOfRange { index, order });
            }
            if row & (1 << i) != 0 {
                return Err(Error::SelfLoop(i));
            }
        }
        for i in 0..order {
            for j in i + 1..order {
                let ij = out[i] & (1 << j) != 0;
                let ji = out[j] & (1 << i) != 0;
                match (ij, ji) {
                    (true, true) => return Err(Error::DuplicatePair(i, j)),
                    (false, false) => return Err(Error::MissingPair(i, j)),
                    _ => {}
                }
            }
        }
        Ok(Tournament { order, out })
    }

    /// Builds a tournament from in-neighbourhood lists: `w -> v` for every
    /// `w` in `in_lists[v]`.
    pub fn from_in_neighborhoods(in_lists: &[Vec<usize>]) -> Result<Self> {
        let arcs: Vec<(usize, usize)> = in_lists
            .iter()
            .enumerate()
            .flat_map(|(v, ins)| ins.iter().map(move |&w| (w, v)))
            .collect();
        Self::from_arcs(in_lists.len(), &arcs)
    }

    /// Transitive tournament: `i -> j` whenever `i < j`.
    pub fn transitive(order: usize) -> Result<Self> {
        check_order(order)?;
        let full = VertexSet::full(order).bits();
        let out = (0..order).map(|i| full & !((2u32 << i) - 1)).collect();
        Ok(Tournament { order, out })
    }

    /// Orients every pair by `orient(i, j)` for `i < j`: `true` means `i -> j`.
    pub fn from_fn(order: usize, mut orient: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        check_order(order)?;
        let mut out = vec![0u32; order];
        for i in 0..order {
            for j in i + 1..order {
                if orient(i, j) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
            }
        }
        Ok(Tournament { order, out })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            return Err(Error::IndexOutOfRange {
                index: v,
                order: self.order,
            });
        }
        Ok(())
    }

    /// Checked arc query.
    pub fn has_arc(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.arc(u, v))
    }

    /// Unchecked arc query; `false` on the diagonal.
    #[inline]
    pub fn arc(&self, u: usize, v: usize) -> bool {
        self.out[u] & (1 << v) != 0
    }

    #[inline]
    pub fn out_mask(&self, v: usize) -> u32 {
        self.out[v]
    }

    #[inline]
    pub fn in_mask(&self, v: usize) -> u32 {
        !self.out[v] & VertexSet::full(self.order).bits() & !(1 << v)
    }

    #[inline]
    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet(self.out[v])
    }

    #[inline]
    pub fn in_set(&self, v: usize) -> VertexSet {
        VertexSet(self.in_mask(v))
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.order - 1 - self.out_degree(v)
    }

    /// Out-degree of `v` restricted to `within`.
    #[inline]
    pub fn out_degree_in(&self, v: usize, within: VertexSet) -> usize {
        (self.out[v] & within.bits()).count_ones() as usize
    }

    /// `true` iff every vertex of `from` dominates every vertex of `to`.
    pub fn dominates(&self, from: VertexSet, to: VertexSet) -> bool {
        from.iter().all(|u| to.is_subset(self.out_set(u)))
    }

    /// Score sequence (out-degrees) indexed by vertex.
    pub fn scores(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.out_degree(v)).collect()
    }

    /// All arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| VertexSet(self.out[u]).iter().map(move |v| (u, v)))
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let out_degrees = self.scores();
        let in_degrees: Vec<usize> = out_degrees.iter().map(|&d| self.order - 1 - d).collect();
        let irregularity = out_degrees
            .iter()
            .zip(&in_degrees)
            .map(|(&o, &i)| o.abs_diff(i))
            .max()
            .unwrap_or(0);
        DegreeSummary {
            out_degrees,
            in_degrees,
            irregularity,
        }
    }

    pub fn irregularity(&self) -> usize {
        let p = self.order;
        (0..p)
            .map(|v| (2 * self.out_degree(v)).abs_diff(p - 1))
            .max()
            .unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.irregularity() == 0
    }

    /// Every arc reversed.
    pub fn converse(&self) -> Tournament {
        let out = (0..self.order).map(|v| self.in_mask(v)).collect();
        Tournament {
            order: self.order,
            out,
        }
    }

    /// Reverses the single arc between `u` and `v`.
    pub fn flip(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if self.arc(u, v) {
            self.out[u] &= !(1 << v);
            self.out[v] |= 1 << u;
        } else {
            self.out[v] &= !(1 << u);
            self.out[u] |= 1 << v;
        }
    }

    /// Subtournament induced by `V(T) \ remove`.
    pub fn induced_minus(&self, remove: VertexSet) -> Result<Induced> {
        if let Some(bad) = remove.difference(self.vertices()).first() {
            return Err(Error::SOutOfRange {
                index: bad,
                order: self.order,
            });
        }
        if remove.len() >= self.order {
            return Err(Error::SIsEverything);
        }
        Ok(self.induced_on(self.vertices().difference(remove)))
    }

    /// Subtournament induced by `keep` (must be a non-empty subset of `V(T)`),
    /// relabelled in increasing order of the original labels.
    pub fn induced_on(&self, keep: VertexSet) -> Induced {
        let old_of_new = keep.to_vec();
        let mut new_of_old = vec![None; self.order];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        let out = old_of_new
            .iter()
            .map(|&old| {
                VertexSet(self.out[old])
                    .intersection(keep)
                    .iter()
                    .fold(0u32, |acc, w| acc | 1 << new_of_old[w].expect("kept"))
            })
            .collect();
        Induced {
            tournament: Tournament {
                order: old_of_new.len(),
                out,
            },
            old_of_new,
            new_of_old,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament> {
        if perm.len() != self.order {
            return Err(Error::IndexOutOfRange {
                index: perm.len(),
                order: self.order,
            });
        }
        let mut out = vec![0u32; self.order];
        for (u, v) in self.arcs() {
            out[perm[u]] |= 1 << perm[v];
        }
        Tournament::from_out_masks(out)
    }
}

/// Subtournament together with the label correspondence to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub tournament: Tournament,
    pub old_of_new: Vec<usize>,
    pub new_of_old: Vec<Option<usize>>,
}

impl Induced {
    pub fn new_index(&self, old: usize) -> Option<usize> {
        self.new_of_old.get(old).copied().flatten()
    }

    pub fn old_index(&self, new: usize) -> usize {
        self.old_of_new[new]
    }
}

/// Per-vertex semidegrees and the irregularity `max |d+(v) - d-(v)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    pub irregularity: usize,
}

impl DegreeSummary {
    pub fn order(&self) -> usize {
        self.out_degrees.len()
    }

    pub fn is_regular(&self) -> bool {
        self.irregularity == 0
    }

    pub fn is_almost_regular(&self) -> bool {
        self.irregularity == 1
    }

    pub fn min_semidegree(&self) -> usize {
        self.out_degrees
            .iter()
            .chain(&self.in_degrees)
            .copied()
            .min()
            .unwrap_or(0)
    }

    pub fn max_semidegree(&self) -> usize {
        self.out_degrees
            .iter()
            .chain(&self.in_degrees)
            .copied()
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn three_cycle() -> Tournament {
        Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn transitive_triple_scores() {
        let t = triple();
        assert_eq!(t.scores(), vec![2, 1, 0]);
        assert!(t.has_arc(0, 2).unwrap());
        assert!(!t.has_arc(2, 0).unwrap());
        assert_eq!(t, Tournament::transitive(3).unwrap());
    }

    #[test]
    fn three_cycle_is_regular() {
        let d = three_cycle().degree_summary();
        assert_eq!(d.out_degrees, vec![1, 1, 1]);
        assert_eq!(d.irregularity, 0);
        assert!(d.is_regular());
    }

    #[test]
    fn build_errors_name_the_pair() {
        assert_eq!(
            Tournament::from_arcs(3, &[(0, 1), (1, 0), (1, 2), (0, 2)]),
            Err(Error::DuplicatePair(0, 1))
        );
        assert_eq!(
            Tournament::from_arcs(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]),
            Err(Error::DuplicatePair(0, 1))
        );
        assert_eq!(
            Tournament::from_arcs(3, &[(0, 1), (1, 2)]),
            Err(Error::MissingPair(0, 2))
        );
        assert_eq!(
            Tournament::from_arcs(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        );
        assert_eq!(
            Tournament::from_arcs(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { index: 3, order: 3 })
        );
        assert_eq!(Tournament::transitive(27), Err(Error::OrderTooLarge(27)));
    }

    #[test]
    fn has_arc_rejects_bad_queries() {
        let t = triple();
        assert_eq!(t.has_arc(1, 1), Err(Error::SameVertex(1)));
        assert_eq!(
            t.has_arc(0, 5),
            Err(Error::IndexOutOfRange { index: 5, order: 3 })
        );
    }

    #[test]
    fn transitive_four_irregularity() {
        assert_eq!(Tournament::transitive(4).unwrap().irregularity(), 3);
    }

    #[test]
    fn converse_of_small_cases() {
        assert_eq!(triple().converse().scores(), vec![0, 1, 2]);
        let c = three_cycle().converse();
        assert!(c.arc(1, 0) && c.arc(2, 1) && c.arc(0, 2));
        assert!(c.is_regular());
        assert_eq!(c.converse(), three_cycle());
    }

    #[test]
    fn induced_minus_identity_and_errors() {
        let t = Tournament::transitive(5).unwrap();
        let ind = t.induced_minus(VertexSet::EMPTY).unwrap();
        assert_eq!(ind.tournament, t);
        assert_eq!(ind.old_of_new, vec![0, 1, 2, 3, 4]);

        let ind = t.induced_minus(VertexSet::singleton(2)).unwrap();
        assert_eq!(ind.tournament, Tournament::transitive(4).unwrap());
        assert_eq!(ind.new_index(3), Some(2));
        assert_eq!(ind.new_index(2), None);

        assert_eq!(
            t.induced_minus(VertexSet::singleton(7)),
            Err(Error::SOutOfRange { index: 7, order: 5 })
        );
        assert_eq!(t.induced_minus(t.vertices()), Err(Error::SIsEverything));
    }
}
