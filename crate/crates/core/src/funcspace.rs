//! The function ring `C(Z, Y)` with pointwise operations.
//!
//! On an explicit space every quasi-component is clopen and `Y` is discrete,
//! so a continuous function is exactly a choice of one value per
//! quasi-component. Elements are stored as such value vectors and indexed
//! lexicographically (first component most significant).

pub mod seq;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{make_zmod, AlgebraTable, Val};
use crate::pointset::PointSet;
use crate::topology::{ExplicitSpace, Space};

/// Index of an element of an explicit [`FunctionRing`].
pub type Elem = u32;

/// A set of ring elements.
pub type ElemSet = FixedBitSet;

/// Default cap on the number of enumerated functions.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Rings up to this size get precomputed operation tables.
const TABLE_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuncError {
    #[error("the sequence backend cannot be enumerated; use symbolic handles")]
    InfiniteBackend,
    #[error("enumeration needs {needed} elements, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("the algebra has no addition table")]
    MissingAddition,
    #[error("the algebra has no two-sided unit")]
    MissingUnit,
    #[error("{0} is not clopen")]
    NotClopen(String),
    #[error("characteristic functions need a nonzero value")]
    ZeroValue,
    #[error("value map has {got} entries for {expected} points")]
    Arity { got: usize, expected: usize },
    #[error("rings are over different spaces")]
    SpaceMismatch,
}

/// `C(Z, Y)` over an explicit space, fully enumerated.
#[derive(Debug, Clone)]
pub struct FunctionRing {
    space: ExplicitSpace,
    classes: Vec<PointSet>,
    class_of: Vec<usize>,
    y: AlgebraTable,
    k: usize,
    len: usize,
    values: Vec<Val>,
    mul_table: Option<Vec<Elem>>,
    add_table: Option<Vec<Elem>>,
}

/// Enumerate `C(Z, Y)`.
pub fn enumerate_functions(
    z: &Space,
    y: &AlgebraTable,
    budget: u64,
) -> Result<FunctionRing, FuncError> {
    match z {
        Space::Explicit(s) => FunctionRing::new(s, y, budget),
        Space::Sequence(_) => Err(FuncError::InfiniteBackend),
    }
}

/// Continuity of a raw value map into discrete `Y`: every fibre is open.
pub fn is_continuous(z: &ExplicitSpace, y: &AlgebraTable, f: &[Val]) -> bool {
    f.len() == z.point_count()
        && f.iter().all(|&v| (v as usize) < y.size())
        && y.elements().all(|v| {
            let fibre: PointSet = (0..f.len()).filter(|&x| f[x] == v).collect();
            z.is_open(fibre)
        })
}

impl FunctionRing {
    pub fn new(space: &ExplicitSpace, y: &AlgebraTable, budget: u64) -> Result<Self, FuncError> {
        let classes = space.quasi_components();
        let k = classes.len();
        let m = y.size();
        let needed = (m as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if needed > budget as u128 {
            return Err(FuncError::BudgetExceeded { needed, budget });
        }
        let len = needed as usize;
        let mut class_of = vec![0; space.point_count()];
        for (i, c) in classes.iter().enumerate() {
            for x in c.iter() {
                class_of[x] = i;
            }
        }
        let mut values = vec![0 as Val; len * k];
        for idx in 0..len {
            let mut rest = idx;
            for i in (0..k).rev() {
                values[idx * k + i] = (rest % m) as Val;
                rest /= m;
            }
        }
        let mut ring = FunctionRing {
            space: space.clone(),
            classes,
            class_of,
            y: y.clone(),
            k,
            len,
            values,
            mul_table: None,
            add_table: None,
        };
        if len <= TABLE_LIMIT {
            let mut mt = Vec::with_capacity(len * len);
            for f in 0..len as Elem {
                for g in 0..len as Elem {
                    mt.push(ring.mul_slow(f, g));
                }
            }
            ring.mul_table = Some(mt);
            if y.has_add() {
                let mut at = Vec::with_capacity(len * len);
                for f in 0..len as Elem {
                    for g in 0..len as Elem {
                        at.push(ring.add_slow(f, g));
                    }
                }
                ring.add_table = Some(at);
            }
        }
        Ok(ring)
    }

    pub fn space(&self) -> &ExplicitSpace {
        &self.space
    }

    pub fn algebra(&self) -> &AlgebraTable {
        &self.y
    }

    /// Quasi-components of the space, i.e. the points of `Z = Π`.
    pub fn classes(&self) -> &[PointSet] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.k
    }

    /// Index of the class containing point `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.len as Elem
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.len)
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Values, one per quasi-component.
    pub fn values(&self, f: Elem) -> &[Val] {
        let i = f as usize * self.k;
        &self.values[i..i + self.k]
    }

    /// Value at a point of the underlying space.
    pub fn value_at(&self, f: Elem, x: usize) -> Val {
        self.values(f)[self.class_of[x]]
    }

    /// Pointwise view over the underlying space.
    pub fn raw(&self, f: Elem) -> Vec<Val> {
        (0..self.space.point_count()).map(|x| self.value_at(f, x)).collect()
    }

    pub fn encode(&self, vals: &[Val]) -> Elem {
        debug_assert_eq!(vals.len(), self.k);
        let m = self.y.size() as u64;
        vals.iter().fold(0u64, |acc, &v| acc * m + v as u64) as Elem
    }

    /// Element from a raw value map; `None` when the map is not continuous.
    pub fn from_raw(&self, raw: &[Val]) -> Option<Elem> {
        if !is_continuous(&self.space, &self.y, raw) {
            return None;
        }
        let vals: Vec<Val> = self.classes.iter().map(|c| raw[c.first().unwrap()]).collect();
        Some(self.encode(&vals))
    }

    pub fn constant(&self, v: Val) -> Elem {
        self.encode(&vec![v; self.k])
    }

    /// Θ, the constant zero.
    pub fn theta(&self) -> Elem {
        self.constant(self.y.zero())
    }

    /// Id, the constant unit.
    pub fn id(&self) -> Option<Elem> {
        self.y.unit().map(|u| self.constant(u))
    }

    fn mul_slow(&self, f: Elem, g: Elem) -> Elem {
        let m = self.y.size() as u64;
        let (a, b) = (self.values(f), self.values(g));
        (0..self.k).fold(0u64, |acc, i| acc * m + self.y.mul(a[i], b[i]) as u64) as Elem
    }

    fn add_slow(&self, f: Elem, g: Elem) -> Elem {
        let m = self.y.size() as u64;
        let (a, b) = (self.values(f), self.values(g));
        (0..self.k).fold(0u64, |acc, i| acc * m + self.y.add(a[i], b[i]).unwrap() as u64) as Elem
    }

    #[inline]
    pub fn mul(&self, f: Elem, g: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => t[f as usize * self.len + g as usize],
            None => self.mul_slow(f, g),
        }
    }

    #[inline]
    pub fn add(&self, f: Elem, g: Elem) -> Option<Elem> {
        match &self.add_table {
            Some(t) => Some(t[f as usize * self.len + g as usize]),
            None if self.y.has_add() => Some(self.add_slow(f, g)),
            None => None,
        }
    }

    pub fn try_add(&self, f: Elem, g: Elem) -> Result<Elem, FuncError> {
        self.add(f, g).ok_or(FuncError::MissingAddition)
    }

    /// V(f) as a set of points of the underlying space.
    pub fn zero_set(&self, f: Elem) -> PointSet {
        self.zero_set_b(f, self.y.zero())
    }

    /// V(f, b) = f⁻¹(b).
    pub fn zero_set_b(&self, f: Elem, b: Val) -> PointSet {
        let vals = self.values(f);
        (0..self.k)
            .filter(|&i| vals[i] == b)
            .fold(PointSet::EMPTY, |acc, i| acc.union(self.classes[i]))
    }

    /// V(S) = ⋂ V(f); V(∅) is the whole space.
    pub fn zero_set_of<I: IntoIterator<Item = Elem>>(&self, s: I) -> PointSet {
        s.into_iter()
            .fold(self.space.full(), |acc, f| acc.intersection(self.zero_set(f)))
    }

    /// V(S, b).
    pub fn zero_set_of_b<I: IntoIterator<Item = Elem>>(&self, s: I, b: Val) -> PointSet {
        s.into_iter()
            .fold(self.space.full(), |acc, f| acc.intersection(self.zero_set_b(f, b)))
    }

    /// V(f) over class indices (points of `Z`).
    pub fn class_zero_set(&self, f: Elem) -> PointSet {
        let vals = self.values(f);
        (0..self.k).filter(|&i| vals[i] == self.y.zero()).collect()
    }

    /// Raw point-set covered by a set of class indices.
    pub fn lift(&self, classes: PointSet) -> PointSet {
        classes
            .iter()
            .fold(PointSet::EMPTY, |acc, c| acc.union(self.classes[c]))
    }

    /// Clopen subsets of the underlying space (unions of classes), ordered
    /// by class mask.
    pub fn clopens(&self) -> Vec<PointSet> {
        PointSet::all_subsets(self.k).map(|c| self.lift(c)).collect()
    }

    /// χ_{U,a}: `0` on `U`, `a` elsewhere.
    pub fn chi_a(&self, u: PointSet, a: Val) -> Result<Elem, FuncError> {
        if a == self.y.zero() {
            return Err(FuncError::ZeroValue);
        }
        if !u.is_subset(self.space.full()) || !self.space.is_clopen(u) {
            return Err(FuncError::NotClopen(u.to_string()));
        }
        let vals: Vec<Val> = self
            .classes
            .iter()
            .map(|c| if c.is_subset(u) { self.y.zero() } else { a })
            .collect();
        Ok(self.encode(&vals))
    }

    /// χ_U: `0` on `U`, `1` elsewhere.
    pub fn chi(&self, u: PointSet) -> Result<Elem, FuncError> {
        let one = self.y.unit().ok_or(FuncError::MissingUnit)?;
        self.chi_a(u, one)
    }

    /// I(U) = {f : f(U) = 0}.
    pub fn vanishing(&self, u: PointSet) -> ElemSet {
        self.vanishing_b(u, self.y.zero(), None)
    }

    /// I(U, b)_J = {f ∈ J : f(U) = b}; `J` defaults to the whole ring.
    pub fn vanishing_b(&self, u: PointSet, b: Val, within: Option<&ElemSet>) -> ElemSet {
        let touched: Vec<usize> = (0..self.k).filter(|&i| !self.classes[i].is_disjoint(u)).collect();
        let mut out = self.empty_set();
        for f in self.elements() {
            if within.is_some_and(|j| !j.contains(f as usize)) {
                continue;
            }
            let vals = self.values(f);
            if touched.iter().all(|&i| vals[i] == b) {
                out.insert(f as usize);
            }
        }
        out
    }

    /// [x]_J = {y : f(y) = f(x) for all f ∈ J}.
    pub fn equiv_class(&self, j: &[Elem], x: usize) -> PointSet {
        (0..self.space.point_count())
            .filter(|&y| j.iter().all(|&f| self.value_at(f, y) == self.value_at(f, x)))
            .collect()
    }

    /// The same ring viewed over the quotient `Π`; element indices coincide,
    /// so this realizes the transport `G` (and its inverse `H`).
    pub fn quotient_ring(&self) -> FunctionRing {
        let q = self.space.quotient();
        FunctionRing::new(&q.space, &self.y, u64::MAX).expect("same size as self")
    }

    /// G(f) = f ∘ p⁻¹ on raw value maps.
    pub fn transport_g(&self, raw: &[Val]) -> Vec<Val> {
        self.classes.iter().map(|c| raw[c.first().unwrap()]).collect()
    }

    /// H(φ) = φ ∘ p.
    pub fn transport_h(&self, on_classes: &[Val]) -> Vec<Val> {
        (0..self.space.point_count()).map(|x| on_classes[self.class_of[x]]).collect()
    }

    /// C(Z, ℤ₂) over the same space.
    pub fn boolean_shadow(&self) -> FunctionRing {
        FunctionRing::new(&self.space, &make_zmod(2), u64::MAX).expect("2^k ≤ m^k")
    }

    /// 𝕁: copy a 0/1 pattern from `chi_ring` (over ℤ₂) into this ring.
    pub fn embed_j(&self, chi_ring: &FunctionRing) -> Result<Vec<Elem>, FuncError> {
        if chi_ring.space != self.space {
            return Err(FuncError::SpaceMismatch);
        }
        let one = self.y.unit().ok_or(FuncError::MissingUnit)?;
        let zero = self.y.zero();
        Ok(chi_ring
            .elements()
            .map(|c| {
                let vals: Vec<Val> =
                    chi_ring.values(c).iter().map(|&v| if v == 0 { zero } else { one }).collect();
                self.encode(&vals)
            })
            .collect())
    }

    /// L(f): indicator of the nonzero values, as an element of `shadow`.
    pub fn project_l(&self, shadow: &FunctionRing, f: Elem) -> Elem {
        let vals: Vec<Val> =
            self.values(f).iter().map(|&v| (v != self.y.zero()) as Val).collect();
        shadow.encode(&vals)
    }

    /// Elements `g ≠ Θ` with `f·g = Θ`.
    pub fn right_annihilators(&self, f: Elem) -> impl Iterator<Item = Elem> + '_ {
        let theta = self.theta();
        self.elements().filter(move |&g| g != theta && self.mul(f, g) == theta)
    }

    /// Elements `g ≠ Θ` with `g·f = Θ`.
    pub fn left_annihilators(&self, f: Elem) -> impl Iterator<Item = Elem> + '_ {
        let theta = self.theta();
        self.elements().filter(move |&g| g != theta && self.mul(g, f) == theta)
    }

    /// Whether `f ≠ Θ` is a (left or right) zero divisor.
    pub fn is_zero_divisor(&self, f: Elem) -> bool {
        f != self.theta()
            && (self.right_annihilators(f).next().is_some()
                || self.left_annihilators(f).next().is_some())
    }

    pub fn set_from<I: IntoIterator<Item = Elem>>(&self, it: I) -> ElemSet {
        let mut s = self.empty_set();
        for f in it {
            s.insert(f as usize);
        }
        s
    }

    /// Human-readable element: its raw values, e.g. `(0,2,1)`.
    pub fn show(&self, f: Elem) -> String {
        show_values(&self.raw(f))
    }

    pub fn describe(&self) -> RingDescriptor {
        RingDescriptor {
            points: self.space.point_count(),
            classes: self.k,
            algebra: self.y.name().to_string(),
            elements: self.len,
        }
    }
}

pub fn show_values(vals: &[Val]) -> String {
    let body: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
    format!("({})", body.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDescriptor {
    pub points: usize,
    pub classes: usize,
    pub algebra: String,
    pub elements: usize,
}

/// Check H∘G = id and G∘H = id on every element, independently of the
/// index-level identification.
pub fn transport_roundtrip(ring: &FunctionRing) -> bool {
    let quotient = ring.quotient_ring();
    ring.elements().all(|f| {
        let raw = ring.raw(f);
        let g = ring.transport_g(&raw);
        ring.transport_h(&g) == raw && quotient.values(quotient.encode(&g)) == g.as_slice()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_zmod;

    fn ring(space: ExplicitSpace, n: usize) -> FunctionRing {
        FunctionRing::new(&space, &make_zmod(n), DEFAULT_BUDGET).unwrap()
    }

    fn ps(items: &[usize]) -> PointSet {
        items.iter().copied().collect()
    }

    /// Independent oracle: count raw maps whose fibres are all open.
    fn brute_force_count(z: &ExplicitSpace, m: usize) -> usize {
        let n = z.point_count();
        let y = make_zmod(m);
        let mut count = 0;
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut rest = code;
            let raw: Vec<Val> = (0..n)
                .map(|_| {
                    let v = (rest % m) as Val;
                    rest /= m;
                    v
                })
                .collect();
            if is_continuous(z, &y, &raw) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(ring(ExplicitSpace::discrete(2), 3).len(), 9);
        assert_eq!(ring(ExplicitSpace::sierpinski(), 2).len(), 2);
        assert_eq!(ring(ExplicitSpace::indiscrete(2), 5).len(), 5);
        let pairs = ExplicitSpace::sierpinski().disjoint_sum(&ExplicitSpace::sierpinski()).unwrap();
        assert_eq!(ring(pairs.clone(), 3).len(), 9);
        assert_eq!(brute_force_count(&pairs, 3), 9);
        assert_eq!(
            enumerate_functions(&Space::Sequence(crate::topology::SequenceSpace), &make_zmod(2), 10)
                .unwrap_err(),
            FuncError::InfiniteBackend
        );
        assert!(matches!(
            FunctionRing::new(&ExplicitSpace::discrete(5), &make_zmod(4), 100),
            Err(FuncError::BudgetExceeded { needed: 1024, budget: 100 })
        ));
    }

    #[test]
    fn continuity_examples() {
        let s = ExplicitSpace::sierpinski();
        let y = make_zmod(2);
        assert!(is_continuous(&s, &y, &[1, 1]));
        assert!(!is_continuous(&s, &y, &[0, 1]));
        let d = ring(ExplicitSpace::discrete(3), 2);
        let chi = d.chi(ps(&[0, 2])).unwrap();
        assert!(is_continuous(d.space(), &y, &d.raw(chi)));
    }

    #[test]
    fn pointwise_examples() {
        let r = ring(ExplicitSpace::discrete(2), 4);
        let f = r.encode(&[2, 1]);
        assert_eq!(r.values(r.mul(f, f)), &[0, 1]);
        assert!(r.elements().all(|g| r.mul(r.theta(), g) == r.theta()));
        let b = ring(ExplicitSpace::discrete(3), 2);
        let (u, w) = (ps(&[0]), ps(&[1]));
        assert_eq!(b.mul(b.chi(u).unwrap(), b.chi(w).unwrap()), b.chi(u.union(w)).unwrap());
        let noadd = AlgebraTable::from_tables("M", &[vec![0, 0], vec![0, 1]], None, 0, None).unwrap();
        let r = FunctionRing::new(&ExplicitSpace::discrete(1), &noadd, 10).unwrap();
        assert_eq!(r.try_add(0, 1), Err(FuncError::MissingAddition));
    }

    #[test]
    fn characteristic_examples() {
        let r = ring(ExplicitSpace::discrete(3), 3);
        assert_eq!(r.chi(PointSet::EMPTY).unwrap(), r.id().unwrap());
        assert_eq!(r.chi(r.space().full()).unwrap(), r.theta());
        assert_eq!(r.chi_a(ps(&[1]), 0), Err(FuncError::ZeroValue));
        let s = ring(ExplicitSpace::sierpinski(), 2);
        assert!(matches!(s.chi(ps(&[0])), Err(FuncError::NotClopen(_))));
    }

    #[test]
    fn zero_sets_and_vanishing() {
        let r = ring(ExplicitSpace::discrete(3), 2);
        assert_eq!(r.zero_set(r.theta()), r.space().full());
        assert_eq!(r.zero_set_of(std::iter::empty()), r.space().full());
        let u = ps(&[0, 2]);
        assert_eq!(r.zero_set(r.chi(u).unwrap()), u);
        assert_eq!(r.zero_set_of(r.elements()), PointSet::EMPTY);
        assert_eq!(r.vanishing(PointSet::EMPTY), r.full_set());
        assert_eq!(r.vanishing(r.space().full()), r.set_from([r.theta()]));
        assert_eq!(r.vanishing(ps(&[1])).count_ones(..), 4);
    }

    #[test]
    fn transport_examples() {
        let pairs = ExplicitSpace::sierpinski().disjoint_sum(&ExplicitSpace::sierpinski()).unwrap();
        let r = ring(pairs, 3);
        assert!(transport_roundtrip(&r));
        let q = r.quotient_ring();
        assert_eq!(q.len(), 9);
        assert_eq!(q.space(), &ExplicitSpace::discrete(2));
        let c = ring(ExplicitSpace::indiscrete(3), 5);
        assert_eq!(c.len(), 5);
        // Connected: evaluation is a bijection onto Y preserving products.
        for f in c.elements() {
            for g in c.elements() {
                let (a, b) = (c.value_at(f, 0), c.value_at(g, 0));
                assert_eq!(c.value_at(c.mul(f, g), 0), c.algebra().mul(a, b));
            }
        }
    }

    #[test]
    fn j_and_l() {
        let target = ring(ExplicitSpace::discrete(2), 6);
        let chi_ring = target.boolean_shadow();
        let img = target.embed_j(&chi_ring).unwrap();
        let u = ps(&[1]);
        assert_eq!(img[chi_ring.chi(u).unwrap() as usize], target.chi(u).unwrap());
        let chis: Vec<Elem> = target.clopens().iter().map(|&u| target.chi(u).unwrap()).collect();
        let mut a = img.clone();
        a.sort();
        let mut b = chis;
        b.sort();
        assert_eq!(a, b);

        let r3 = ring(ExplicitSpace::discrete(2), 3);
        let sh = r3.boolean_shadow();
        assert_eq!(r3.project_l(&sh, r3.id().unwrap()), sh.id().unwrap());
        assert_eq!(r3.project_l(&sh, r3.theta()), sh.theta());
        assert_eq!(sh.values(r3.project_l(&sh, r3.encode(&[1, 2]))), &[1, 1]);

        let r4 = ring(ExplicitSpace::discrete(1), 4);
        let sh4 = r4.boolean_shadow();
        let two = r4.constant(2);
        let lhs = r4.project_l(&sh4, r4.mul(two, two));
        let rhs = sh4.mul(r4.project_l(&sh4, two), r4.project_l(&sh4, two));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn equivalence_classes() {
        let r = ring(ExplicitSpace::sierpinski().disjoint_sum(&ExplicitSpace::discrete(1)).unwrap(), 2);
        assert_eq!(r.equiv_class(&[r.theta()], 0), r.space().full());
        for x in 0..3 {
            assert_eq!(r.equiv_class(&r.elements().collect::<Vec<_>>(), x), r.space().quasi_component(x));
            let chis: Vec<Elem> = r.clopens().iter().map(|&u| r.chi(u).unwrap()).collect();
            assert_eq!(r.equiv_class(&chis, x), r.space().quasi_component(x));
        }
    }

    #[test]
    fn b_sets() {
        let r = ring(ExplicitSpace::discrete(2), 3);
        let f = r.encode(&[2, 1]);
        assert_eq!(r.zero_set_b(f, 2), ps(&[0]));
        let i = r.vanishing_b(ps(&[0]), 2, None);
        assert_eq!(i.count_ones(..), 3);
        assert!(i.contains(f as usize));
    }
}
