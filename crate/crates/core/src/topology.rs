//! Finite explicit topologies and the symbolic convergent-sequence space.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pointset::{sort_family, PointSet, MAX_POINTS};

/// Cap on families produced by closure completion.
pub const MAX_FAMILY: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("a space needs at least one point")]
    EmptyCarrier,
    #[error("{0} points exceeds the limit of {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("point {point} is outside 0..{n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("open family must contain the empty set and the whole space")]
    MissingEmptyOrFull,
    #[error("open family not closed under union: {0} ∪ {1}")]
    NotClosedUnderUnion(PointSet, PointSet),
    #[error("open family not closed under intersection: {0} ∩ {1}")]
    NotClosedUnderIntersection(PointSet, PointSet),
    #[error("closure completion exceeded {MAX_FAMILY} sets")]
    FamilyTooLarge,
    #[error("operation not supported on the {0} backend")]
    UnsupportedBackend(&'static str),
    #[error("points share a quasi-component and cannot be separated")]
    NotSeparable,
    #[error("spaces have different carriers")]
    CarrierMismatch,
    #[error("{0} is not a point of this space")]
    NotAPoint(Point),
}

/// A point: an index of an explicit space, a natural number of the sequence
/// space, or the limit point `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Point {
    Fin(usize),
    Inf,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Fin(i) => write!(f, "{i}"),
            Point::Inf => f.write_str("∞"),
        }
    }
}

// ---------------------------------------------------------------------------
// Explicit spaces

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpace", into = "RawSpace")]
pub struct ExplicitSpace {
    n: usize,
    opens: Vec<PointSet>,
}

#[derive(Serialize, Deserialize)]
struct RawSpace {
    point_count: usize,
    opens: Vec<PointSet>,
}

impl TryFrom<RawSpace> for ExplicitSpace {
    type Error = TopologyError;
    fn try_from(raw: RawSpace) -> Result<Self, Self::Error> {
        validate_topology(raw.point_count, &raw.opens, false)
    }
}

impl From<ExplicitSpace> for RawSpace {
    fn from(s: ExplicitSpace) -> Self {
        RawSpace { point_count: s.n, opens: s.opens }
    }
}

/// Check an open family, optionally completing it under ∪ and ∩.
pub fn validate_topology(
    n: usize,
    opens: &[PointSet],
    auto_close: bool,
) -> Result<ExplicitSpace, TopologyError> {
    if n == 0 {
        return Err(TopologyError::EmptyCarrier);
    }
    if n > MAX_POINTS {
        return Err(TopologyError::TooManyPoints(n));
    }
    let full = PointSet::full(n);
    for s in opens {
        if !s.is_subset(full) {
            let point = s.difference(full).first().unwrap_or(n);
            return Err(TopologyError::PointOutOfRange { point, n });
        }
    }
    let mut family: Vec<PointSet> = opens.to_vec();
    if auto_close {
        family = close_family(n, family)?;
    } else {
        sort_family(&mut family);
        let members: HashSet<u64> = family.iter().map(|s| s.bits()).collect();
        if !members.contains(&0) || !members.contains(&full.bits()) {
            return Err(TopologyError::MissingEmptyOrFull);
        }
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                if !members.contains(&a.union(b).bits()) {
                    return Err(TopologyError::NotClosedUnderUnion(a, b));
                }
                if !members.contains(&a.intersection(b).bits()) {
                    return Err(TopologyError::NotClosedUnderIntersection(a, b));
                }
            }
        }
    }
    Ok(ExplicitSpace { n, opens: family })
}

fn close_family(n: usize, seed: Vec<PointSet>) -> Result<Vec<PointSet>, TopologyError> {
    let mut members: HashSet<u64> = HashSet::new();
    let mut all: Vec<PointSet> = Vec::new();
    let mut queue: VecDeque<PointSet> = VecDeque::new();
    for s in seed.into_iter().chain([PointSet::EMPTY, PointSet::full(n)]) {
        if members.insert(s.bits()) {
            all.push(s);
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        let snapshot = all.len();
        for i in 0..snapshot {
            let t = all[i];
            for u in [s.union(t), s.intersection(t)] {
                if members.insert(u.bits()) {
                    if all.len() >= MAX_FAMILY {
                        return Err(TopologyError::FamilyTooLarge);
                    }
                    all.push(u);
                    queue.push_back(u);
                }
            }
        }
    }
    sort_family(&mut all);
    Ok(all)
}

impl ExplicitSpace {
    pub fn discrete(n: usize) -> Self {
        assert!((1..=16).contains(&n), "discrete constructor limited to 16 points");
        let mut opens: Vec<PointSet> = PointSet::all_subsets(n).collect();
        sort_family(&mut opens);
        ExplicitSpace { n, opens }
    }

    pub fn indiscrete(n: usize) -> Self {
        assert!((1..=MAX_POINTS).contains(&n));
        let mut opens = vec![PointSet::EMPTY, PointSet::full(n)];
        sort_family(&mut opens);
        ExplicitSpace { n, opens }
    }

    /// Two points, with `{0}` open and `{1}` not.
    pub fn sierpinski() -> Self {
        ExplicitSpace {
            n: 2,
            opens: vec![PointSet::EMPTY, PointSet::singleton(0), PointSet::full(2)],
        }
    }

    /// Topological sum: `other`'s points are shifted past ours.
    pub fn disjoint_sum(&self, other: &ExplicitSpace) -> Result<Self, TopologyError> {
        let n = self.n + other.n;
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        let mut opens = Vec::with_capacity(self.opens.len() * other.opens.len());
        for a in &self.opens {
            for b in &other.opens {
                opens.push(a.union(PointSet::from_bits(b.bits() << self.n)));
            }
        }
        sort_family(&mut opens);
        Ok(ExplicitSpace { n, opens })
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens
            .binary_search_by(|t| t.canonical_cmp(&s))
            .is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.is_subset(self.full()) && self.is_open(s.complement(self.n))
    }

    pub fn is_clopen(&self, s: PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    pub fn clopens(&self) -> Vec<PointSet> {
        self.opens
            .iter()
            .copied()
            .filter(|&s| self.is_closed(s))
            .collect()
    }

    /// Smallest open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> PointSet {
        self.opens
            .iter()
            .filter(|s| s.contains(x))
            .fold(self.full(), |acc, &s| acc.intersection(s))
    }

    pub fn quasi_component(&self, x: usize) -> PointSet {
        self.clopens()
            .into_iter()
            .filter(|s| s.contains(x))
            .fold(self.full(), |acc, s| acc.intersection(s))
    }

    /// The quasi-components, ordered by least member.
    pub fn quasi_components(&self) -> Vec<PointSet> {
        let clopens = self.clopens();
        let mut seen = PointSet::EMPTY;
        let mut out = Vec::new();
        for x in 0..self.n {
            if seen.contains(x) {
                continue;
            }
            let q = clopens
                .iter()
                .filter(|s| s.contains(x))
                .fold(self.full(), |acc, &s| acc.intersection(s));
            seen = seen.union(q);
            out.push(q);
        }
        out
    }

    /// Connected component, by search over the specialization relation.
    pub fn component_of(&self, x: usize) -> PointSet {
        let mins: Vec<PointSet> = (0..self.n).map(|p| self.minimal_open(p)).collect();
        let mut comp = PointSet::singleton(x);
        let mut queue = VecDeque::from([x]);
        while let Some(p) = queue.pop_front() {
            for q in 0..self.n {
                if !comp.contains(q) && (mins[p].contains(q) || mins[q].contains(p)) {
                    comp.insert(q);
                    queue.push_back(q);
                }
            }
        }
        comp
    }

    pub fn is_totally_separated(&self) -> bool {
        self.quasi_components().iter().all(|q| q.len() == 1)
    }

    /// Subspace-free check that a point-set is saturated by a partition.
    fn is_saturated(s: PointSet, classes: &[PointSet]) -> bool {
        classes
            .iter()
            .all(|c| c.is_subset(s) || c.is_disjoint(s))
    }

    pub fn quotient(&self) -> QuotientSpace {
        let classes = self.quasi_components();
        let mut projection = vec![0; self.n];
        for (i, c) in classes.iter().enumerate() {
            for x in c.iter() {
                projection[x] = i;
            }
        }
        let mut opens: Vec<PointSet> = self
            .opens
            .iter()
            .filter(|&&u| Self::is_saturated(u, &classes))
            .map(|u| u.iter().map(|x| projection[x]).collect())
            .collect();
        sort_family(&mut opens);
        let space = ExplicitSpace { n: classes.len(), opens };
        QuotientSpace { classes, projection, space }
    }

    /// The topology whose opens are unions of clopen sets; finite unions of
    /// clopens are clopen, so this is the clopen family itself.
    pub fn clopen_base(&self) -> ExplicitSpace {
        ExplicitSpace { n: self.n, opens: self.clopens() }
    }
}

/// Π: the space of quasi-components with the quotient topology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSpace {
    pub classes: Vec<PointSet>,
    /// Point ↦ index of its class (the map p).
    pub projection: Vec<usize>,
    pub space: ExplicitSpace,
}

impl QuotientSpace {
    /// p⁻¹ of a set of class indices.
    pub fn preimage(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, c| acc.union(self.classes[c]))
    }

    /// p of a set of points.
    pub fn image(&self, s: PointSet) -> PointSet {
        s.iter().map(|x| self.projection[x]).collect()
    }
}

// ---------------------------------------------------------------------------
// The sequence space ℕ ∪ {∞}

/// A finite or cofinite set of naturals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct NatSet {
    /// Finite part listed explicitly; when `cofinite`, the set is its complement.
    pub listed: BTreeSet<u64>,
    pub cofinite: bool,
}

impl NatSet {
    pub fn finite<I: IntoIterator<Item = u64>>(items: I) -> Self {
        NatSet { listed: items.into_iter().collect(), cofinite: false }
    }

    pub fn cofinite<I: IntoIterator<Item = u64>>(missing: I) -> Self {
        NatSet { listed: missing.into_iter().collect(), cofinite: true }
    }

    pub fn contains(&self, n: u64) -> bool {
        self.listed.contains(&n) != self.cofinite
    }

    pub fn complement(&self) -> Self {
        NatSet { listed: self.listed.clone(), cofinite: !self.cofinite }
    }

    pub fn is_empty(&self) -> bool {
        !self.cofinite && self.listed.is_empty()
    }

    pub fn union(&self, other: &NatSet) -> NatSet {
        match (self.cofinite, other.cofinite) {
            (false, false) => NatSet::finite(self.listed.union(&other.listed).copied()),
            (true, true) => NatSet::cofinite(self.listed.intersection(&other.listed).copied()),
            (true, false) => NatSet::cofinite(self.listed.difference(&other.listed).copied()),
            (false, true) => NatSet::cofinite(other.listed.difference(&self.listed).copied()),
        }
    }

    pub fn intersection(&self, other: &NatSet) -> NatSet {
        self.complement().union(&other.complement()).complement()
    }

    pub fn is_subset(&self, other: &NatSet) -> bool {
        self.intersection(&other.complement()).is_empty()
    }
}

/// A set of the sequence space: a finite/cofinite part of ℕ plus an `∞` bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SeqSet {
    pub nat: NatSet,
    pub inf: bool,
}

impl SeqSet {
    pub fn empty() -> Self {
        SeqSet::default()
    }

    pub fn full() -> Self {
        SeqSet { nat: NatSet::cofinite([]), inf: true }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(items: I) -> Self {
        SeqSet { nat: NatSet::finite(items), inf: false }
    }

    /// `ℕ ∖ missing`, together with `∞`.
    pub fn cofinite_with_inf<I: IntoIterator<Item = u64>>(missing: I) -> Self {
        SeqSet { nat: NatSet::cofinite(missing), inf: true }
    }

    pub fn infinity() -> Self {
        SeqSet { nat: NatSet::default(), inf: true }
    }

    pub fn contains(&self, p: Point) -> bool {
        match p {
            Point::Fin(n) => self.nat.contains(n as u64),
            Point::Inf => self.inf,
        }
    }

    pub fn complement(&self) -> Self {
        SeqSet { nat: self.nat.complement(), inf: !self.inf }
    }

    pub fn union(&self, o: &SeqSet) -> Self {
        SeqSet { nat: self.nat.union(&o.nat), inf: self.inf || o.inf }
    }

    pub fn intersection(&self, o: &SeqSet) -> Self {
        SeqSet { nat: self.nat.intersection(&o.nat), inf: self.inf && o.inf }
    }

    pub fn is_subset(&self, o: &SeqSet) -> bool {
        self.nat.is_subset(&o.nat) && (!self.inf || o.inf)
    }

    pub fn is_empty(&self) -> bool {
        self.nat.is_empty() && !self.inf
    }

    /// Open: avoids `∞`, or contains `∞` together with a tail of ℕ.
    pub fn is_open(&self) -> bool {
        !self.inf || self.nat.cofinite
    }

    pub fn is_closed(&self) -> bool {
        self.complement().is_open()
    }

    pub fn is_clopen(&self) -> bool {
        self.inf == self.nat.cofinite
    }
}

impl fmt::Display for SeqSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            for (i, n) in self.nat.listed.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{n}")?;
            }
            Ok(())
        };
        if self.nat.cofinite {
            f.write_str("ℕ∖{")?;
            list(f)?;
            f.write_str("}")?;
            if self.inf {
                f.write_str(" ∪ {∞}")?;
            }
            Ok(())
        } else {
            f.write_str("{")?;
            list(f)?;
            if self.inf {
                if !self.nat.listed.is_empty() {
                    f.write_str(" ")?;
                }
                f.write_str("∞")?;
            }
            f.write_str("}")
        }
    }
}

/// ℕ ∪ {∞} with the convergent-sequence topology: every natural is isolated
/// and the neighbourhoods of `∞` are the cofinite sets containing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SequenceSpace;

impl SequenceSpace {
    /// Components are singletons; answered structurally rather than by scan.
    pub fn component_of(&self, p: Point) -> SeqSet {
        Self::singleton(p)
    }

    pub fn quasi_component(&self, p: Point) -> SeqSet {
        Self::singleton(p)
    }

    fn singleton(p: Point) -> SeqSet {
        match p {
            Point::Fin(n) => SeqSet::finite([n as u64]),
            Point::Inf => SeqSet::infinity(),
        }
    }

    /// All clopens whose finite part lies in `0..k`: `2^(k+1)` sets.
    pub fn clopens_up_to(&self, k: u32) -> Vec<SeqSet> {
        assert!(k < 24, "clopen enumeration budget too large");
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << k) {
            let items: Vec<u64> = (0..k as u64).filter(|i| mask >> i & 1 == 1).collect();
            out.push(SeqSet::finite(items.iter().copied()));
            out.push(SeqSet::cofinite_with_inf(items));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Uniform interface

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Space {
    Explicit(ExplicitSpace),
    Sequence(SequenceSpace),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceSet {
    Explicit(PointSet),
    Sequence(SeqSet),
}

impl fmt::Display for SpaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSet::Explicit(s) => write!(f, "{s}"),
            SpaceSet::Sequence(s) => write!(f, "{s}"),
        }
    }
}

impl From<ExplicitSpace> for Space {
    fn from(s: ExplicitSpace) -> Self {
        Space::Explicit(s)
    }
}

impl Space {
    pub fn backend(&self) -> &'static str {
        match self {
            Space::Explicit(_) => "explicit",
            Space::Sequence(_) => "sequence",
        }
    }

    pub fn as_explicit(&self) -> Option<&ExplicitSpace> {
        match self {
            Space::Explicit(s) => Some(s),
            Space::Sequence(_) => None,
        }
    }

    fn check_point(&self, p: Point) -> Result<(), TopologyError> {
        match (self, p) {
            (Space::Explicit(s), Point::Fin(i)) if i < s.n => Ok(()),
            (Space::Sequence(_), _) => Ok(()),
            _ => Err(TopologyError::NotAPoint(p)),
        }
    }

    pub fn is_open(&self, s: &SpaceSet) -> Result<bool, TopologyError> {
        match (self, s) {
            (Space::Explicit(x), SpaceSet::Explicit(s)) => Ok(x.is_open(*s)),
            (Space::Sequence(_), SpaceSet::Sequence(s)) => Ok(s.is_open()),
            _ => Err(TopologyError::CarrierMismatch),
        }
    }
}

/// The clopen algebra: materialized for explicit spaces, a membership
/// predicate plus bounded enumerator for the sequence space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClopenFamily {
    Explicit(Vec<PointSet>),
    Sequence,
}

impl ClopenFamily {
    pub fn contains(&self, s: &SpaceSet) -> bool {
        match (self, s) {
            (ClopenFamily::Explicit(f), SpaceSet::Explicit(s)) => f.contains(s),
            (ClopenFamily::Sequence, SpaceSet::Sequence(s)) => s.is_clopen(),
            _ => false,
        }
    }

    /// Members; the sequence enumerator lists those with finite part in `0..budget`.
    pub fn enumerate(&self, budget: u32) -> Vec<SpaceSet> {
        match self {
            ClopenFamily::Explicit(f) => f.iter().map(|&s| SpaceSet::Explicit(s)).collect(),
            ClopenFamily::Sequence => SequenceSpace
                .clopens_up_to(budget)
                .into_iter()
                .map(SpaceSet::Sequence)
                .collect(),
        }
    }
}

pub fn clopen_family(space: &Space) -> ClopenFamily {
    match space {
        Space::Explicit(s) => ClopenFamily::Explicit(s.clopens()),
        Space::Sequence(_) => ClopenFamily::Sequence,
    }
}

pub fn quasi_component(space: &Space, p: Point) -> Result<SpaceSet, TopologyError> {
    space.check_point(p)?;
    Ok(match (space, p) {
        (Space::Explicit(s), Point::Fin(i)) => SpaceSet::Explicit(s.quasi_component(i)),
        (Space::Sequence(s), p) => SpaceSet::Sequence(s.quasi_component(p)),
        _ => unreachable!(),
    })
}

/// Connected component; the sequence backend is refused here (see
/// [`SequenceSpace::component_of`] for its constant answer).
pub fn component_of(space: &Space, p: Point) -> Result<PointSet, TopologyError> {
    match (space, p) {
        (Space::Explicit(s), Point::Fin(i)) if i < s.n => Ok(s.component_of(i)),
        (Space::Explicit(_), p) => Err(TopologyError::NotAPoint(p)),
        (Space::Sequence(_), _) => Err(TopologyError::UnsupportedBackend("sequence")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quotient {
    Explicit(QuotientSpace),
    /// Quasi-components of the sequence space are points: an isomorphic copy.
    Sequence(SequenceSpace),
}

pub fn quotient_space(space: &Space) -> Quotient {
    match space {
        Space::Explicit(s) => Quotient::Explicit(s.quotient()),
        Space::Sequence(s) => Quotient::Sequence(*s),
    }
}

pub fn clopen_base_topology(space: &Space) -> Space {
    match space {
        Space::Explicit(s) => Space::Explicit(s.clopen_base()),
        // Opens containing ∞ are cofinite, hence clopen; the rest are unions of
        // clopen singletons.
        Space::Sequence(s) => Space::Sequence(*s),
    }
}

pub fn is_totally_separated(space: &Space) -> bool {
    match space {
        Space::Explicit(s) => s.is_totally_separated(),
        Space::Sequence(_) => true,
    }
}

/// A clopen set containing `Q_x` and missing `Q_y`.
pub fn separate_points(space: &Space, x: Point, y: Point) -> Result<SpaceSet, TopologyError> {
    space.check_point(x)?;
    space.check_point(y)?;
    match (space, x, y) {
        (Space::Explicit(s), Point::Fin(i), Point::Fin(j)) => {
            let qy = s.quasi_component(j);
            if qy.contains(i) {
                return Err(TopologyError::NotSeparable);
            }
            // Least clopen (in canonical order) that does the job.
            s.clopens()
                .into_iter()
                .find(|u| u.contains(i) && !u.contains(j))
                .map(SpaceSet::Explicit)
                .ok_or(TopologyError::NotSeparable)
        }
        (Space::Sequence(_), x, y) => {
            if x == y {
                return Err(TopologyError::NotSeparable);
            }
            Ok(SpaceSet::Sequence(match (x, y) {
                (Point::Fin(a), _) => SeqSet::finite([a as u64]),
                (Point::Inf, Point::Fin(b)) => SeqSet::cofinite_with_inf([b as u64]),
                (Point::Inf, Point::Inf) => unreachable!(),
            }))
        }
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Equal,
    FirstStrictlyCoarser,
    FirstStrictlyFiner,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Equal => "equal",
            Comparison::FirstStrictlyCoarser => "first-strictly-coarser",
            Comparison::FirstStrictlyFiner => "first-strictly-finer",
            Comparison::Incomparable => "incomparable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyComparison {
    pub verdict: Comparison,
    /// Least set open in the first topology only.
    pub only_in_first: Option<SpaceSet>,
    /// Least set open in the second topology only.
    pub only_in_second: Option<SpaceSet>,
}

/// Compare two open families given as sorted vectors over the same carrier.
pub fn compare_families(a: &[PointSet], b: &[PointSet]) -> TopologyComparison {
    let sa: HashSet<u64> = a.iter().map(|s| s.bits()).collect();
    let sb: HashSet<u64> = b.iter().map(|s| s.bits()).collect();
    let only_a = a.iter().find(|s| !sb.contains(&s.bits())).copied();
    let only_b = b.iter().find(|s| !sa.contains(&s.bits())).copied();
    let verdict = match (only_a, only_b) {
        (None, None) => Comparison::Equal,
        (None, Some(_)) => Comparison::FirstStrictlyCoarser,
        (Some(_), None) => Comparison::FirstStrictlyFiner,
        (Some(_), Some(_)) => Comparison::Incomparable,
    };
    TopologyComparison {
        verdict,
        only_in_first: only_a.map(SpaceSet::Explicit),
        only_in_second: only_b.map(SpaceSet::Explicit),
    }
}

pub fn compare_topologies(a: &Space, b: &Space) -> Result<TopologyComparison, TopologyError> {
    match (a, b) {
        (Space::Explicit(x), Space::Explicit(y)) => {
            if x.n != y.n {
                return Err(TopologyError::CarrierMismatch);
            }
            Ok(compare_families(&x.opens, &y.opens))
        }
        (Space::Sequence(_), Space::Sequence(_)) => Ok(TopologyComparison {
            verdict: Comparison::Equal,
            only_in_first: None,
            only_in_second: None,
        }),
        _ => Err(TopologyError::CarrierMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(items: &[usize]) -> PointSet {
        items.iter().copied().collect()
    }

    fn two_sierpinski() -> ExplicitSpace {
        ExplicitSpace::sierpinski()
            .disjoint_sum(&ExplicitSpace::sierpinski())
            .unwrap()
    }

    #[test]
    fn validate_examples() {
        let d = validate_topology(2, &[ps(&[]), ps(&[0]), ps(&[1]), ps(&[0, 1])], false).unwrap();
        assert_eq!(d, ExplicitSpace::discrete(2));
        let s = validate_topology(2, &[ps(&[]), ps(&[0]), ps(&[0, 1])], false).unwrap();
        assert_eq!(s, ExplicitSpace::sierpinski());
        assert_eq!(
            validate_topology(2, &[ps(&[0]), ps(&[0, 1])], false),
            Err(TopologyError::MissingEmptyOrFull)
        );
    }

    #[test]
    fn validate_reports_witness_pairs() {
        let opens = [ps(&[]), ps(&[0]), ps(&[1]), ps(&[0, 1, 2])];
        assert_eq!(
            validate_topology(3, &opens, false),
            Err(TopologyError::NotClosedUnderUnion(ps(&[0]), ps(&[1])))
        );
        let opens = [ps(&[]), ps(&[0, 1]), ps(&[1, 2]), ps(&[0, 1, 2])];
        assert_eq!(
            validate_topology(3, &opens, false),
            Err(TopologyError::NotClosedUnderIntersection(ps(&[0, 1]), ps(&[1, 2])))
        );
        assert!(matches!(
            validate_topology(2, &[ps(&[3])], false),
            Err(TopologyError::PointOutOfRange { point: 3, n: 2 })
        ));
    }

    #[test]
    fn auto_close_completes() {
        let s = validate_topology(3, &[ps(&[0]), ps(&[1])], true).unwrap();
        let shown: Vec<String> = s.opens().iter().map(|o| o.to_string()).collect();
        assert_eq!(shown, ["{}", "{0}", "{1}", "{0 1}", "{0 1 2}"]);
    }

    #[test]
    fn clopens_and_quasi_components() {
        let d = Space::Explicit(ExplicitSpace::discrete(2));
        assert_eq!(clopen_family(&d), ClopenFamily::Explicit(ExplicitSpace::discrete(2).opens));
        let s = Space::Explicit(ExplicitSpace::sierpinski());
        assert_eq!(clopen_family(&s), ClopenFamily::Explicit(vec![ps(&[]), ps(&[0, 1])]));
        assert_eq!(
            quasi_component(&Space::Explicit(ExplicitSpace::discrete(3)), Point::Fin(1)).unwrap(),
            SpaceSet::Explicit(ps(&[1]))
        );
        assert_eq!(
            quasi_component(&s, Point::Fin(1)).unwrap(),
            SpaceSet::Explicit(ps(&[0, 1]))
        );
        assert_eq!(
            quasi_component(&Space::Sequence(SequenceSpace), Point::Inf).unwrap(),
            SpaceSet::Sequence(SeqSet::infinity())
        );
    }

    #[test]
    fn sequence_clopens() {
        let fam = clopen_family(&Space::Sequence(SequenceSpace));
        assert!(fam.contains(&SpaceSet::Sequence(SeqSet::finite([3]))));
        assert!(!fam.contains(&SpaceSet::Sequence(SeqSet::infinity())));
        // {∞} is closed but not open.
        assert!(SeqSet::infinity().is_closed());
        assert!(!SeqSet::infinity().is_open());
        assert_eq!(fam.enumerate(3).len(), 16);
    }

    #[test]
    fn components() {
        let d = Space::Explicit(ExplicitSpace::discrete(3));
        assert_eq!(component_of(&d, Point::Fin(0)).unwrap(), ps(&[0]));
        let s = Space::Explicit(ExplicitSpace::sierpinski());
        assert_eq!(component_of(&s, Point::Fin(0)).unwrap(), ps(&[0, 1]));
        let t = Space::Explicit(two_sierpinski());
        assert_eq!(component_of(&t, Point::Fin(1)).unwrap(), ps(&[0, 1]));
        assert_eq!(
            component_of(&Space::Sequence(SequenceSpace), Point::Inf),
            Err(TopologyError::UnsupportedBackend("sequence"))
        );
    }

    #[test]
    fn quotients() {
        let Quotient::Explicit(q) = quotient_space(&Space::Explicit(ExplicitSpace::sierpinski()))
        else {
            panic!()
        };
        assert_eq!(q.space.point_count(), 1);
        let Quotient::Explicit(q) = quotient_space(&Space::Explicit(ExplicitSpace::discrete(3)))
        else {
            panic!()
        };
        assert_eq!(q.space, ExplicitSpace::discrete(3));
        let q = two_sierpinski().quotient();
        assert_eq!(q.space, ExplicitSpace::discrete(2));
        assert_eq!(q.projection, vec![0, 0, 1, 1]);
        assert!(q.space.is_totally_separated());
    }

    #[test]
    fn clopen_base_examples() {
        let s = ExplicitSpace::sierpinski().clopen_base();
        assert_eq!(s, ExplicitSpace::indiscrete(2));
        assert_eq!(ExplicitSpace::discrete(3).clopen_base(), ExplicitSpace::discrete(3));
        let seq = Space::Sequence(SequenceSpace);
        assert_eq!(clopen_base_topology(&seq), seq);
    }

    #[test]
    fn total_separation_and_separation() {
        assert!(is_totally_separated(&Space::Explicit(ExplicitSpace::discrete(4))));
        assert!(!is_totally_separated(&Space::Explicit(ExplicitSpace::sierpinski())));
        assert!(is_totally_separated(&Space::Sequence(SequenceSpace)));
        let d = Space::Explicit(ExplicitSpace::discrete(2));
        assert_eq!(
            separate_points(&d, Point::Fin(0), Point::Fin(1)).unwrap(),
            SpaceSet::Explicit(ps(&[0]))
        );
        let seq = Space::Sequence(SequenceSpace);
        assert_eq!(
            separate_points(&seq, Point::Fin(3), Point::Inf).unwrap(),
            SpaceSet::Sequence(SeqSet::finite([3]))
        );
        let s = Space::Explicit(ExplicitSpace::sierpinski());
        assert_eq!(
            separate_points(&s, Point::Fin(0), Point::Fin(1)),
            Err(TopologyError::NotSeparable)
        );
    }

    #[test]
    fn comparisons() {
        let d2 = Space::Explicit(ExplicitSpace::discrete(2));
        assert_eq!(compare_topologies(&d2, &d2).unwrap().verdict, Comparison::Equal);
        let s = Space::Explicit(ExplicitSpace::sierpinski());
        let c = compare_topologies(&clopen_base_topology(&s), &s).unwrap();
        assert_eq!(c.verdict, Comparison::FirstStrictlyCoarser);
        assert_eq!(c.only_in_second, Some(SpaceSet::Explicit(ps(&[0]))));
        let i2 = Space::Explicit(ExplicitSpace::indiscrete(2));
        assert_eq!(
            compare_topologies(&i2, &d2).unwrap().verdict,
            Comparison::FirstStrictlyCoarser
        );
        assert_eq!(
            compare_topologies(&i2, &Space::Sequence(SequenceSpace)),
            Err(TopologyError::CarrierMismatch)
        );
    }

    #[test]
    fn seqset_algebra() {
        let a = SeqSet::cofinite_with_inf([1, 2]);
        let b = SeqSet::finite([2, 5]);
        assert_eq!(a.union(&b), SeqSet::cofinite_with_inf([1]));
        assert_eq!(a.intersection(&b), SeqSet::finite([5]));
        assert_eq!(a.to_string(), "ℕ∖{1 2} ∪ {∞}");
        assert_eq!(SeqSet::infinity().to_string(), "{∞}");
        assert!(b.is_subset(&SeqSet::finite([2, 5, 7])));
    }

    #[test]
    fn serde_round_trip_validates() {
        let s = two_sierpinski();
        let json = serde_json::to_string(&s).unwrap();
        let back: ExplicitSpace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ExplicitSpace>(r#"{"point_count":2,"opens":[[0]]}"#).is_err());
    }
}
