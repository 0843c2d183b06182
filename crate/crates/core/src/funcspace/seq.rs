//! Continuous functions on the convergent sequence ℕ ∪ {∞}.
//!
//! With `Y` discrete a continuous map is eventually constant and sends `∞`
//! to its eventual value, so `(prefix, tail)` describes it completely.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::FuncError;
use crate::algebra::{AlgebraTable, Val};
use crate::topology::{Point, SeqSet};

/// Default prefix budget for enumerations.
pub const DEFAULT_PREFIX: usize = 6;

/// Canonical eventually-constant function: the prefix never ends in `tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EventuallyConstant {
    prefix: Vec<Val>,
    tail: Val,
}

impl EventuallyConstant {
    pub fn new(mut prefix: Vec<Val>, tail: Val) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        EventuallyConstant { prefix, tail }
    }

    pub fn constant(v: Val) -> Self {
        EventuallyConstant { prefix: Vec::new(), tail: v }
    }

    pub fn prefix(&self) -> &[Val] {
        &self.prefix
    }

    pub fn tail(&self) -> Val {
        self.tail
    }

    pub fn at_nat(&self, n: u64) -> Val {
        self.prefix.get(n as usize).copied().unwrap_or(self.tail)
    }

    pub fn at(&self, p: Point) -> Val {
        match p {
            Point::Fin(n) => self.at_nat(n as u64),
            Point::Inf => self.tail,
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(Val, Val) -> Val) -> Self {
        let n = self.prefix.len().max(other.prefix.len());
        let prefix = (0..n as u64).map(|i| op(self.at_nat(i), other.at_nat(i))).collect();
        EventuallyConstant::new(prefix, op(self.tail, other.tail))
    }
}

impl fmt::Display for EventuallyConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.prefix.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}; {}…]", body.join(","), self.tail)
    }
}

/// Membership handle for I(U) on the sequence space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicIdeal {
    pub region: SeqSet,
    pub tag: String,
}

/// Bounded primality: no counterexample among elements with prefix ≤ budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundedPrime {
    pub budget: usize,
    pub witness: Option<(EventuallyConstant, EventuallyConstant)>,
}

impl BoundedPrime {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// `C(ℕ ∪ {∞}, Y)`.
#[derive(Debug, Clone)]
pub struct SequenceRing {
    y: AlgebraTable,
}

impl SequenceRing {
    pub fn new(y: &AlgebraTable) -> Self {
        SequenceRing { y: y.clone() }
    }

    pub fn algebra(&self) -> &AlgebraTable {
        &self.y
    }

    pub fn theta(&self) -> EventuallyConstant {
        EventuallyConstant::constant(self.y.zero())
    }

    pub fn id(&self) -> Option<EventuallyConstant> {
        self.y.unit().map(EventuallyConstant::constant)
    }

    pub fn mul(&self, f: &EventuallyConstant, g: &EventuallyConstant) -> EventuallyConstant {
        f.zip(g, |a, b| self.y.mul(a, b))
    }

    pub fn add(
        &self,
        f: &EventuallyConstant,
        g: &EventuallyConstant,
    ) -> Result<EventuallyConstant, FuncError> {
        if !self.y.has_add() {
            return Err(FuncError::MissingAddition);
        }
        Ok(f.zip(g, |a, b| self.y.add(a, b).unwrap()))
    }

    /// V(f), always finite ⊆ ℕ or cofinite ∪ {∞}.
    pub fn zero_set(&self, f: &EventuallyConstant) -> SeqSet {
        let z = self.y.zero();
        let idx = |want: bool| {
            f.prefix
                .iter()
                .enumerate()
                .filter(move |(_, &v)| (v == z) == want)
                .map(|(i, _)| i as u64)
        };
        if f.tail == z {
            SeqSet::cofinite_with_inf(idx(false))
        } else {
            SeqSet::finite(idx(true))
        }
    }

    /// χ_{U,a} for clopen `U`.
    pub fn chi_a(&self, u: &SeqSet, a: Val) -> Result<EventuallyConstant, FuncError> {
        if a == self.y.zero() {
            return Err(FuncError::ZeroValue);
        }
        if !u.is_clopen() {
            return Err(FuncError::NotClopen(u.to_string()));
        }
        let z = self.y.zero();
        let bound = u.nat.listed.iter().next_back().map_or(0, |&n| n as usize + 1);
        let prefix = (0..bound as u64)
            .map(|i| if u.nat.contains(i) { z } else { a })
            .collect();
        Ok(EventuallyConstant::new(prefix, if u.inf { z } else { a }))
    }

    pub fn chi(&self, u: &SeqSet) -> Result<EventuallyConstant, FuncError> {
        let one = self.y.unit().ok_or(FuncError::MissingUnit)?;
        self.chi_a(u, one)
    }

    pub fn vanishing(&self, u: &SeqSet) -> SymbolicIdeal {
        SymbolicIdeal { region: u.clone(), tag: format!("I({u})") }
    }

    /// f(U) = 0, decided on the finite/cofinite representation.
    pub fn vanishes_on(&self, f: &EventuallyConstant, u: &SeqSet) -> bool {
        let z = self.y.zero();
        if (u.inf || u.nat.cofinite) && f.tail != z {
            return false;
        }
        let max_listed = u.nat.listed.iter().next_back().map_or(0, |&n| n as usize + 1);
        let bound = f.prefix.len().max(max_listed) as u64;
        (0..bound).all(|i| !u.nat.contains(i) || f.at_nat(i) == z)
    }

    pub fn contains(&self, ideal: &SymbolicIdeal, f: &EventuallyConstant) -> bool {
        self.vanishes_on(f, &ideal.region)
    }

    /// Every element whose prefix fits in `k` values: `m^(k+1)` functions.
    pub fn enumerate(&self, k: usize) -> Vec<EventuallyConstant> {
        let m = self.y.size();
        let total = m.pow(k as u32 + 1);
        (0..total)
            .map(|code| {
                let mut rest = code;
                let mut digits: Vec<Val> = (0..=k)
                    .map(|_| {
                        let v = (rest % m) as Val;
                        rest /= m;
                        v
                    })
                    .collect();
                let tail = digits.pop().unwrap();
                EventuallyConstant::new(digits, tail)
            })
            .collect()
    }

    /// Search for `f·g ∈ I` with `f, g ∉ I` among prefixes ≤ `k`.
    pub fn is_prime_bounded(&self, ideal: &SymbolicIdeal, k: usize) -> BoundedPrime {
        let els = self.enumerate(k);
        let outside: Vec<&EventuallyConstant> =
            els.iter().filter(|f| !self.contains(ideal, f)).collect();
        for f in &outside {
            for g in &outside {
                if self.contains(ideal, &self.mul(f, g)) {
                    return BoundedPrime { budget: k, witness: Some(((*f).clone(), (*g).clone())) };
                }
            }
        }
        BoundedPrime { budget: k, witness: None }
    }

    /// A function vanishing at `∞` but not at `n`.
    pub fn separator(&self, n: u64) -> Option<EventuallyConstant> {
        let one = self.y.unit()?;
        let z = self.y.zero();
        let mut prefix = vec![z; n as usize + 1];
        prefix[n as usize] = one;
        Some(EventuallyConstant::new(prefix, z))
    }
}

/// A function on the discretized space `Z_d`: eventually constant on ℕ with
/// an independent value at `∞`. This is the part of `C(Z_d, Y)` reachable
/// from `Z_c` plus the point-indicators at `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiscreteSeqFn {
    pub on_nat: EventuallyConstant,
    pub at_inf: Val,
}

impl fmt::Display for DiscreteSeqFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / ∞↦{}", self.on_nat, self.at_inf)
    }
}

/// Functions on `Z_d` with pointwise operations.
#[derive(Debug, Clone)]
pub struct DiscreteSeqRing {
    y: AlgebraTable,
}

impl DiscreteSeqRing {
    pub fn new(y: &AlgebraTable) -> Self {
        DiscreteSeqRing { y: y.clone() }
    }

    pub fn mul(&self, f: &DiscreteSeqFn, g: &DiscreteSeqFn) -> DiscreteSeqFn {
        DiscreteSeqFn {
            on_nat: f.on_nat.zip(&g.on_nat, |a, b| self.y.mul(a, b)),
            at_inf: self.y.mul(f.at_inf, g.at_inf),
        }
    }

    /// 𝔍(f) = f ∘ ι.
    pub fn transport(&self, f: &EventuallyConstant) -> DiscreteSeqFn {
        DiscreteSeqFn { on_nat: f.clone(), at_inf: f.tail }
    }

    /// Whether `f` lies in the image of 𝔍, i.e. is continuous on `Z_c`.
    pub fn in_image(&self, f: &DiscreteSeqFn) -> bool {
        f.at_inf == f.on_nat.tail
    }

    /// χ_d: zero exactly at `∞`.
    pub fn chi_d(&self) -> Option<DiscreteSeqFn> {
        let one = self.y.unit()?;
        Some(DiscreteSeqFn { on_nat: EventuallyConstant::constant(one), at_inf: self.y.zero() })
    }

    /// Membership in I_d(∞).
    pub fn vanishes_at_inf(&self, f: &DiscreteSeqFn) -> bool {
        f.at_inf == self.y.zero()
    }

    pub fn enumerate(&self, k: usize) -> Vec<DiscreteSeqFn> {
        let base = SequenceRing::new(&self.y).enumerate(k);
        base.iter()
            .flat_map(|f| {
                self.y.elements().map(move |v| DiscreteSeqFn { on_nat: f.clone(), at_inf: v })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_zmod;

    #[test]
    fn canonical_form() {
        let f = EventuallyConstant::new(vec![1, 0, 0], 0);
        assert_eq!(f.prefix(), &[1]);
        assert_eq!(f.at(Point::Inf), 0);
        assert_eq!(f.at_nat(100), 0);
    }

    #[test]
    fn products_recanonicalize() {
        let r = SequenceRing::new(&make_zmod(4));
        let f = EventuallyConstant::new(vec![2, 1, 3], 2);
        let g = EventuallyConstant::new(vec![2], 2);
        let p = r.mul(&f, &g);
        assert_eq!(p, EventuallyConstant::new(vec![0, 2, 2], 0));
        assert_eq!(p.prefix(), &[0, 2, 2]);
    }

    #[test]
    fn eventually_zero_is_vanishing_at_infinity() {
        let r = SequenceRing::new(&make_zmod(2));
        let i_inf = r.vanishing(&SeqSet::infinity());
        for f in r.enumerate(4) {
            assert_eq!(r.contains(&i_inf, &f), f.tail() == 0);
        }
    }

    #[test]
    fn zero_sets_never_just_infinity() {
        let r = SequenceRing::new(&make_zmod(2));
        for f in r.enumerate(5) {
            let v = r.zero_set(&f);
            assert_ne!(v, SeqSet::infinity());
            assert!(v.is_clopen());
        }
    }

    #[test]
    fn chi_on_clopens() {
        let r = SequenceRing::new(&make_zmod(3));
        let u = SeqSet::cofinite_with_inf([1, 4]);
        let c = r.chi(&u).unwrap();
        assert_eq!(r.zero_set(&c), u);
        let w = SeqSet::finite([0, 2]);
        assert_eq!(r.zero_set(&r.chi(&w).unwrap()), w);
        assert!(matches!(r.chi(&SeqSet::infinity()), Err(FuncError::NotClopen(_))));
        assert_eq!(r.chi(&SeqSet::empty()).unwrap(), r.id().unwrap());
        assert_eq!(r.chi(&SeqSet::full()).unwrap(), r.theta());
    }

    #[test]
    fn vanishing_on_general_regions() {
        let r = SequenceRing::new(&make_zmod(2));
        let f = EventuallyConstant::new(vec![1, 0, 0, 1], 0);
        assert!(r.vanishes_on(&f, &SeqSet::finite([1, 2, 7])));
        assert!(!r.vanishes_on(&f, &SeqSet::finite([3])));
        assert!(r.vanishes_on(&f, &SeqSet::cofinite_with_inf([0, 3])));
        assert!(!r.vanishes_on(&f, &SeqSet::cofinite_with_inf([0])));
    }

    #[test]
    fn enumeration_is_injective() {
        let r = SequenceRing::new(&make_zmod(3));
        let mut els = r.enumerate(3);
        assert_eq!(els.len(), 81);
        els.sort();
        els.dedup();
        assert_eq!(els.len(), 81);
    }

    #[test]
    fn bounded_primality() {
        let r = SequenceRing::new(&make_zmod(2));
        assert!(r.is_prime_bounded(&r.vanishing(&SeqSet::infinity()), 4).holds());
        let two_points = r.vanishing(&SeqSet::finite([0, 1]));
        assert!(!r.is_prime_bounded(&two_points, 3).holds());
    }

    #[test]
    fn discretization() {
        let d = DiscreteSeqRing::new(&make_zmod(2));
        let chi_d = d.chi_d().unwrap();
        assert!(!d.in_image(&chi_d));
        let r = SequenceRing::new(&make_zmod(2));
        assert!(r.enumerate(3).iter().all(|f| d.in_image(&d.transport(f))));
    }
}
