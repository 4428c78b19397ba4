//! Elementary semidegree facts that every tournament satisfies.
//!
//! Each clause is checked with doubled integer arithmetic so that bounds like
//! `(p - 1) / 2` stay exact. A violation can only mean a broken tournament
//! representation or generator.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    /// Vertices on both sides of `(p-1)/2`, for in- and out-degree.
    MedianSplit,
    /// Regular implies odd order and all semidegrees `(p-1)/2`.
    RegularSemidegrees,
    /// Non-regular implies vertices with `d <= (p-2)/2` and `d >= p/2`.
    NonRegularSplit,
    /// Almost regular implies even order and the half/half split.
    AlmostRegularSplit,
    /// Non-regular with all in- and out-degrees `< (p+1)/2` implies almost
    /// regular. A bound on one side only is not enough: a vertex dominating a
    /// 3-cycle has in-degrees `(0, 2, 2, 2)`.
    BoundedImpliesAlmostRegular,
    /// All `d < p/2` implies regular.
    BoundedImpliesRegular,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::MedianSplit => "i",
            Clause::RegularSemidegrees => "ii",
            Clause::NonRegularSplit => "iii",
            Clause::AlmostRegularSplit => "iv",
            Clause::BoundedImpliesAlmostRegular => "v",
            Clause::BoundedImpliesRegular => "vi",
        }
    }
}

/// Clauses whose hypotheses applied; all of them held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactReport {
    pub applicable: Vec<Clause>,
}

impl FactReport {
    pub fn applied(&self, clause: Clause) -> bool {
        self.applicable.contains(&clause)
    }
}

/// Two distinct vertices `a`, `b` with `2 d(a) <= lo2` and `2 d(b) >= hi2`.
fn split_exists(degrees: &[usize], lo2: usize, hi2: usize) -> bool {
    let p = degrees.len();
    (0..p).any(|a| {
        2 * degrees[a] <= lo2 && (0..p).any(|b| b != a && 2 * degrees[b] >= hi2)
    })
}

pub fn check_degree_facts(t: &Tournament) -> Result<FactReport> {
    let p = t.order();
    if p < 2 {
        return Err(Error::PreconditionViolated(
            "degree facts need order at least 2".into(),
        ));
    }
    let summary = t.degree_summary();
    let outs = &summary.out_degrees;
    let ins = &summary.in_degrees;
    let mut applicable = Vec::new();
    let mut require = |clause: Clause, ok: bool| -> Result<()> {
        if !ok {
            return Err(Error::FactViolated(clause.label()));
        }
        applicable.push(clause);
        Ok(())
    };

    require(
        Clause::MedianSplit,
        split_exists(ins, p - 1, p - 1) && split_exists(outs, p - 1, p - 1),
    )?;

    if summary.is_regular() {
        let n2 = p - 1;
        require(
            Clause::RegularSemidegrees,
            p % 2 == 1 && outs.iter().chain(ins).all(|&d| 2 * d == n2),
        )?;
    } else {
        require(
            Clause::NonRegularSplit,
            split_exists(ins, p - 2, p) && split_exists(outs, p - 2, p),
        )?;
    }

    if summary.is_almost_regular() {
        let n = p / 2;
        let in_n = ins.iter().filter(|&&d| d == n).count();
        let out_n = outs.iter().filter(|&&d| d == n).count();
        require(
            Clause::AlmostRegularSplit,
            p.is_multiple_of(2) && in_n == n && out_n == n,
        )?;
    }

    if !summary.is_regular() && outs.iter().chain(ins).all(|&d| 2 * d < p + 1) {
        require(
            Clause::BoundedImpliesAlmostRegular,
            summary.is_almost_regular(),
        )?;
    }

    if ins.iter().all(|&d| 2 * d < p) || outs.iter().all(|&d| 2 * d < p) {
        require(Clause::BoundedImpliesRegular, summary.is_regular())?;
    }

    Ok(FactReport { applicable })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_four_uses_nonregular_split() {
        let r = check_degree_facts(&Tournament::transitive(4).unwrap()).unwrap();
        assert!(r.applied(Clause::NonRegularSplit));
        assert!(!r.applied(Clause::RegularSemidegrees));
    }

    #[test]
    fn one_sided_bound_does_not_force_almost_regular() {
        // 0 dominates the 3-cycle 1 -> 2 -> 3 -> 1
        let t = Tournament::from_arcs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap();
        let d = t.degree_summary();
        assert_eq!(d.in_degrees, vec![0, 2, 2, 2]);
        assert!(d.in_degrees.iter().all(|&x| 2 * x < 5));
        assert_eq!(d.irregularity, 3);
        let r = check_degree_facts(&t).unwrap();
        assert!(!r.applied(Clause::BoundedImpliesAlmostRegular));
    }

    #[test]
    fn order_one_is_rejected() {
        assert!(matches!(
            check_degree_facts(&Tournament::transitive(1).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn every_tournament_up_to_order_six() {
        for p in 2..=6usize {
            let pairs = p * (p - 1) / 2;
            for code in 0u32..(1 << pairs) {
                let mut bit = 0;
                let t = Tournament::from_fn(p, |_, _| {
                    let b = code >> bit & 1 == 1;
                    bit += 1;
                    b
                })
                .unwrap();
                let report = check_degree_facts(&t).unwrap();
                let summary = t.degree_summary();
                assert_eq!(
                    report.applied(Clause::AlmostRegularSplit),
                    summary.is_almost_regular()
                );
                assert_eq!(summary.irregularity % 2, (p - 1) % 2);
            }
        }
    }
}
