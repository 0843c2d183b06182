//! The zero-set topology 𝒯_Z and its comparison with 𝒯 and 𝒯₁.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraTable, Val};
use crate::funcspace::seq::{EventuallyConstant, SequenceRing};
use crate::funcspace::FunctionRing;
use crate::pointset::{sort_family, PointSet};
use crate::topology::{compare_families, ExplicitSpace, SeqSet, TopologyComparison};

/// Closed families larger than this are kept as a membership predicate only.
pub const MATERIALIZE_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZariskiError {
    /// `a·b = 0` with `a, b ≠ 0`: then `V(a) ∪ V(b) = ∅` while `V(a·b) = Z`,
    /// so zero sets need not be closed under finite unions.
    #[error("Y has zero divisors ({a}·{b} = 0); zero sets are not union-closed")]
    ZeroDivisorHypothesis { a: Val, b: Val },
    #[error("closed family exceeds {MATERIALIZE_LIMIT} sets")]
    TooLarge,
}

fn require_domain(y: &AlgebraTable) -> Result<(), ZariskiError> {
    match y.zero_divisors().first() {
        Some(&(a, b)) => Err(ZariskiError::ZeroDivisorHypothesis { a, b }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZariskiTopology {
    pub point_count: usize,
    /// Distinct zero sets V(f), canonical order.
    pub zero_sets: Vec<PointSet>,
    /// All V(S) = intersections of zero sets; `None` past the materialization cap.
    pub closed: Option<Vec<PointSet>>,
    /// Complements of `closed`.
    pub opens: Option<Vec<PointSet>>,
    /// Whether `closed` is closed under pairwise union.
    pub union_closed: Option<bool>,
}

impl ZariskiTopology {
    /// Membership in the closed family without materializing it:
    /// `A` is closed iff it equals the intersection of the zero sets containing it.
    pub fn is_closed(&self, a: PointSet) -> bool {
        let full = PointSet::full(self.point_count);
        let hull = self
            .zero_sets
            .iter()
            .filter(|v| a.is_subset(**v))
            .fold(full, |acc, v| acc.intersection(*v));
        hull == a
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.is_closed(a.complement(self.point_count))
    }

    /// The topology as an explicit space, when it is one.
    pub fn as_space(&self) -> Option<ExplicitSpace> {
        if self.union_closed != Some(true) {
            return None;
        }
        let opens = self.opens.as_ref()?;
        crate::topology::validate_topology(self.point_count, opens, false).ok()
    }
}

/// 𝒯_Z without the zero-divisor guard; `union_closed` reports what happened.
pub fn zariski_closed_family_unchecked(ring: &FunctionRing) -> ZariskiTopology {
    let n = ring.space().point_count();
    let mut zero_sets: Vec<PointSet> = ring.elements().map(|f| ring.zero_set(f)).collect();
    sort_family(&mut zero_sets);

    let mut seen: HashSet<PointSet> = HashSet::new();
    let mut closed = vec![PointSet::full(n)];
    seen.insert(PointSet::full(n));
    let mut overflow = false;
    let mut cursor = 0;
    'outer: while cursor < closed.len() {
        let c = closed[cursor];
        cursor += 1;
        for v in &zero_sets {
            let m = c.intersection(*v);
            if seen.insert(m) {
                closed.push(m);
                if closed.len() > MATERIALIZE_LIMIT {
                    overflow = true;
                    break 'outer;
                }
            }
        }
    }
    if overflow {
        return ZariskiTopology { point_count: n, zero_sets, closed: None, opens: None, union_closed: None };
    }
    sort_family(&mut closed);
    let union_closed = closed
        .iter()
        .all(|a| closed.iter().all(|b| seen.contains(&a.union(*b))));
    let mut opens: Vec<PointSet> = closed.iter().map(|c| c.complement(n)).collect();
    sort_family(&mut opens);
    ZariskiTopology {
        point_count: n,
        zero_sets,
        closed: Some(closed),
        opens: Some(opens),
        union_closed: Some(union_closed),
    }
}

pub fn zariski_closed_family(ring: &FunctionRing) -> Result<ZariskiTopology, ZariskiError> {
    require_domain(ring.algebra())?;
    Ok(zariski_closed_family_unchecked(ring))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleComparison {
    pub t1_vs_tz: TopologyComparison,
    pub tz_vs_t: TopologyComparison,
    pub t1_vs_t: TopologyComparison,
}

/// Compare 𝒯₁ (clopen base), 𝒯_Z and 𝒯 on the ring's space.
pub fn compare_t1_tz_t(ring: &FunctionRing) -> Result<TripleComparison, ZariskiError> {
    let tz = zariski_closed_family(ring)?;
    let opens_z = tz.opens.ok_or(ZariskiError::TooLarge)?;
    let space = ring.space();
    let t1 = space.clopen_base();
    Ok(TripleComparison {
        t1_vs_tz: compare_families(t1.opens(), &opens_z),
        tz_vs_t: compare_families(&opens_z, space.opens()),
        t1_vs_t: compare_families(t1.opens(), space.opens()),
    })
}

/// 𝒯_Z on ℕ ∪ {∞}, described symbolically.
///
/// Every V(f) of an eventually constant `f` is clopen, and intersections of
/// the clopens `ℕ∖{n} ∪ {∞}` cut out any set containing ∞, so the closed
/// sets are the finite subsets of ℕ and the sets containing ∞ — exactly the
/// 𝒯-closed sets.
#[derive(Debug, Clone)]
pub struct SequenceZariski {
    ring: SequenceRing,
}

impl SequenceZariski {
    pub fn new(y: &AlgebraTable) -> Result<Self, ZariskiError> {
        require_domain(y)?;
        Ok(SequenceZariski { ring: SequenceRing::new(y) })
    }

    pub fn is_closed(&self, a: &SeqSet) -> bool {
        a.inf || !a.nat.cofinite
    }

    pub fn is_open(&self, a: &SeqSet) -> bool {
        self.is_closed(&a.complement())
    }

    /// Finitely many functions whose common zero set agrees with `a` on
    /// `0..k` and contains every `n ≥ k` and ∞ when `a` does. `None` if `a`
    /// is not closed.
    pub fn approximants(&self, a: &SeqSet, k: u64) -> Option<Vec<EventuallyConstant>> {
        if !self.is_closed(a) {
            return None;
        }
        if a.is_clopen() {
            return Some(vec![self.ring.chi(a).ok()?]);
        }
        // a = finite ∪ {∞}: intersect the clopens missing one excluded point.
        (0..k)
            .filter(|&n| !a.nat.contains(n))
            .map(|n| {
                let u = SeqSet::cofinite_with_inf([n]);
                self.ring.chi(&u).ok()
            })
            .collect()
    }

    pub fn ring(&self) -> &SequenceRing {
        &self.ring
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_zmod;
    use crate::funcspace::DEFAULT_BUDGET;
    use crate::topology::{Comparison, Point};

    fn ring(space: &ExplicitSpace, m: usize) -> FunctionRing {
        FunctionRing::new(space, &make_zmod(m), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn discrete_closed_family_is_power_set() {
        let r = ring(&ExplicitSpace::discrete(2), 3);
        let tz = zariski_closed_family(&r).unwrap();
        assert_eq!(tz.closed.as_ref().unwrap().len(), 4);
        assert_eq!(tz.union_closed, Some(true));
        assert_eq!(tz.as_space(), Some(ExplicitSpace::discrete(2)));
        let c = compare_t1_tz_t(&r).unwrap();
        assert_eq!(c.t1_vs_tz.verdict, Comparison::Equal);
        assert_eq!(c.tz_vs_t.verdict, Comparison::Equal);
    }

    #[test]
    fn sierpinski_only_constants() {
        let r = ring(&ExplicitSpace::sierpinski(), 2);
        let tz = zariski_closed_family(&r).unwrap();
        assert_eq!(tz.closed.unwrap(), vec![PointSet::EMPTY, PointSet::full(2)]);
        let c = compare_t1_tz_t(&r).unwrap();
        assert_eq!(c.t1_vs_tz.verdict, Comparison::Equal);
        assert_eq!(c.tz_vs_t.verdict, Comparison::FirstStrictlyCoarser);
        assert_eq!(c.tz_vs_t.only_in_second, Some(crate::topology::SpaceSet::Explicit(PointSet::singleton(0))));
    }

    #[test]
    fn sierpinski_pairs() {
        let s = ExplicitSpace::sierpinski().disjoint_sum(&ExplicitSpace::sierpinski()).unwrap();
        let r = ring(&s, 2);
        let c = compare_t1_tz_t(&r).unwrap();
        assert_eq!(c.t1_vs_tz.verdict, Comparison::Equal);
        assert_eq!(c.tz_vs_t.verdict, Comparison::FirstStrictlyCoarser);
        assert_eq!(c.t1_vs_t.verdict, Comparison::FirstStrictlyCoarser);
    }

    #[test]
    fn zero_divisors_are_refused() {
        let r = ring(&ExplicitSpace::discrete(2), 4);
        assert_eq!(
            zariski_closed_family(&r),
            Err(ZariskiError::ZeroDivisorHypothesis { a: 2, b: 2 })
        );
        // Over a discrete space the zero sets still happen to be union-closed.
        let tz = zariski_closed_family_unchecked(&r);
        assert_eq!(tz.union_closed, Some(true));
    }

    #[test]
    fn predicate_agrees_with_materialized_family() {
        let s = ExplicitSpace::sierpinski().disjoint_sum(&ExplicitSpace::discrete(2)).unwrap();
        let r = ring(&s, 3);
        let tz = zariski_closed_family(&r).unwrap();
        let closed = tz.closed.clone().unwrap();
        for a in PointSet::all_subsets(4) {
            assert_eq!(tz.is_closed(a), closed.contains(&a), "{a}");
        }
    }

    #[test]
    fn sequence_closed_sets() {
        let z = SequenceZariski::new(&make_zmod(2)).unwrap();
        let samples = [
            SeqSet::empty(),
            SeqSet::full(),
            SeqSet::finite([1, 3]),
            SeqSet::infinity(),
            SeqSet::cofinite_with_inf([0]),
            SeqSet { nat: crate::topology::NatSet::cofinite([2]), inf: false },
            SeqSet { nat: crate::topology::NatSet::finite([2]), inf: true },
        ];
        for a in &samples {
            assert_eq!(z.is_closed(a), a.is_closed(), "{a}");
        }
        assert!(SequenceZariski::new(&make_zmod(4)).is_err());
    }

    #[test]
    fn sequence_approximants_cut_out_infinity() {
        let z = SequenceZariski::new(&make_zmod(3)).unwrap();
        let k = 6;
        let fs = z.approximants(&SeqSet::infinity(), k).unwrap();
        assert_eq!(fs.len(), k as usize);
        let r = z.ring();
        let common = fs
            .iter()
            .fold(SeqSet::full(), |acc, f| acc.intersection(&r.zero_set(f)));
        assert!(common.contains(Point::Inf));
        assert!((0..k).all(|n| !common.contains(Point::Fin(n as usize))));
        assert!(z.approximants(&SeqSet::cofinite_with_inf([]).complement(), k).is_some());
        let open_only = SeqSet { nat: crate::topology::NatSet::cofinite([2]), inf: false };
        assert!(z.approximants(&open_only, k).is_none());
    }
}
