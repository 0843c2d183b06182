//! Multiplicative and ring ideals of an explicit function ring.

use std::collections::HashMap;
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraTable, Side};
use crate::funcspace::{Elem, ElemSet, FunctionRing};
use crate::pointset::PointSet;

/// Default cap on the number of ideals a lattice enumeration may produce.
pub const DEFAULT_LATTICE_BUDGET: usize = 1 << 14;

/// Largest ring for the brute-force subset oracle.
pub const SUBSET_SCAN_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("the ideal is the whole ring")]
    NotProper,
    #[error("the lattice enumeration was truncated by its budget")]
    IncompleteLattice,
    #[error("the lattice has no proper prime ideals")]
    NoPrimes,
    #[error("the algebra has no two-sided unit")]
    MissingUnit,
    #[error("ring-mode ideals need an addition table")]
    MissingAddition,
    #[error("ideals differ in side or mode, or the sum needs ring mode")]
    ModeMismatch,
    #[error("subset scan over {0} elements exceeds the limit of {SUBSET_SCAN_LIMIT}")]
    TooLargeForScan(usize),
}

/// Whether ideals must also be closed under `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Multiplicative,
    Ring,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Multiplicative => "mult",
            Mode::Ring => "ring",
        })
    }
}

/// Side and mode under which ideals are formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealConfig {
    pub side: Side,
    pub mode: Mode,
}

impl IdealConfig {
    /// Right ideals; ring mode exactly when `Y` has an addition table.
    pub fn default_for(y: &AlgebraTable) -> Self {
        IdealConfig {
            side: Side::Right,
            mode: if y.has_add() { Mode::Ring } else { Mode::Multiplicative },
        }
    }

    pub fn new(side: Side, mode: Mode) -> Self {
        IdealConfig { side, mode }
    }
}

impl fmt::Display for IdealConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.side, self.mode)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealMeta {
    pub is_prime: Option<bool>,
    pub is_minimal_prime: Option<bool>,
    pub is_maximal: Option<bool>,
    /// Class index `z` when the ideal equals `I(z)`.
    pub vanishing_point: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub elems: ElemSet,
    pub config: IdealConfig,
    pub generators: Vec<Elem>,
    pub meta: IdealMeta,
}

impl Ideal {
    pub fn contains(&self, f: Elem) -> bool {
        self.elems.contains(f as usize)
    }

    pub fn len(&self) -> usize {
        self.elems.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.elems.len()
    }

    pub fn members(&self) -> Vec<Elem> {
        self.elems.ones().map(|i| i as Elem).collect()
    }
}

fn process(
    ring: &FunctionRing,
    cfg: IdealConfig,
    set: &mut ElemSet,
    members: &mut Vec<Elem>,
    queue: &mut Vec<Elem>,
    x: Elem,
) {
    let push = |v: Elem, set: &mut ElemSet, members: &mut Vec<Elem>, queue: &mut Vec<Elem>| {
        if !set.put(v as usize) {
            members.push(v);
            queue.push(v);
        }
    };
    for f in ring.elements() {
        if matches!(cfg.side, Side::Right | Side::TwoSided) {
            push(ring.mul(f, x), set, members, queue);
        }
        if matches!(cfg.side, Side::Left | Side::TwoSided) {
            push(ring.mul(x, f), set, members, queue);
        }
    }
    if cfg.mode == Mode::Ring {
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            push(ring.add(x, y).unwrap(), set, members, queue);
            push(ring.add(y, x).unwrap(), set, members, queue);
            i += 1;
        }
    }
}

/// Least fixpoint of the ideal laws over `base`, with `dirty` the elements
/// whose products and sums still need processing. Elements of `base` not in
/// `dirty` must already form an ideal among themselves.
fn close(ring: &FunctionRing, cfg: IdealConfig, mut set: ElemSet, dirty: Vec<Elem>) -> ElemSet {
    let mut members: Vec<Elem> = set.ones().map(|i| i as Elem).collect();
    let mut queue = dirty;
    while let Some(x) = queue.pop() {
        process(ring, cfg, &mut set, &mut members, &mut queue, x);
    }
    set
}

fn check_mode(ring: &FunctionRing, cfg: IdealConfig) -> Result<(), IdealError> {
    if cfg.mode == Mode::Ring && !ring.algebra().has_add() {
        return Err(IdealError::MissingAddition);
    }
    Ok(())
}

/// Smallest ideal containing `seeds` (and Θ).
pub fn generate_ideal(
    ring: &FunctionRing,
    cfg: IdealConfig,
    seeds: &[Elem],
) -> Result<Ideal, IdealError> {
    check_mode(ring, cfg)?;
    let mut set = ring.empty_set();
    let mut dirty = vec![ring.theta()];
    set.insert(ring.theta() as usize);
    for &s in seeds {
        if !set.put(s as usize) {
            dirty.push(s);
        }
    }
    // `close` expects non-dirty members to be closed; here everything is dirty.
    let start = set.clone();
    let elems = close(ring, cfg, start, dirty);
    Ok(Ideal { elems, config: cfg, generators: seeds.to_vec(), meta: IdealMeta::default() })
}

/// (f): the smallest ideal containing `f`.
pub fn principal_ideal(ring: &FunctionRing, cfg: IdealConfig, f: Elem) -> Result<Ideal, IdealError> {
    generate_ideal(ring, cfg, &[f])
}

/// Smallest ideal containing two ideals.
pub fn join(ring: &FunctionRing, cfg: IdealConfig, a: &ElemSet, b: &ElemSet) -> ElemSet {
    if a.is_subset(b) {
        return b.clone();
    }
    if b.is_subset(a) {
        return a.clone();
    }
    let mut u = a.clone();
    u.union_with(b);
    match cfg.mode {
        // A union of absorbing sets is absorbing.
        Mode::Multiplicative => u,
        Mode::Ring => {
            let dirty: Vec<Elem> = a.difference(b).map(|i| i as Elem).collect();
            close(ring, cfg, u, dirty)
        }
    }
}

/// Direct check of the ideal laws.
pub fn is_ideal(ring: &FunctionRing, cfg: IdealConfig, set: &ElemSet) -> bool {
    if !set.contains(ring.theta() as usize) {
        return false;
    }
    let members: Vec<Elem> = set.ones().map(|i| i as Elem).collect();
    for &x in &members {
        for y in ring.elements() {
            if matches!(cfg.side, Side::Right | Side::TwoSided)
                && !set.contains(ring.mul(y, x) as usize)
            {
                return false;
            }
            if matches!(cfg.side, Side::Left | Side::TwoSided)
                && !set.contains(ring.mul(x, y) as usize)
            {
                return false;
            }
        }
        for &y in &members {
            if !set.contains(ring.mul(x, y) as usize) {
                return false;
            }
            if cfg.mode == Mode::Ring {
                match ring.add(x, y) {
                    Some(s) if set.contains(s as usize) => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// All ideals, with inclusion structure.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub config: IdealConfig,
    /// Sorted by size, then by element list.
    pub ideals: Vec<ElemSet>,
    /// Distinct principal ideals, as indices into `ideals`.
    pub principals: Vec<usize>,
    /// False when the budget cut the enumeration short.
    pub complete: bool,
    index: HashMap<ElemSet, usize>,
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn find(&self, set: &ElemSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Index of (Θ).
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole ring.
    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn is_proper(&self, i: usize) -> bool {
        let s = &self.ideals[i];
        s.count_ones(..) < s.len()
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut s = self.ideals[a].clone();
        s.intersect_with(&self.ideals[b]);
        self.find(&s)
    }

    pub fn join(&self, ring: &FunctionRing, a: usize, b: usize) -> Option<usize> {
        self.find(&join(ring, self.config, &self.ideals[a], &self.ideals[b]))
    }

    /// Hasse diagram edges `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.ideals.len();
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
        for j in 0..n {
            for i in 0..j {
                if self.ideals[i] != self.ideals[j] && self.ideals[i].is_subset(&self.ideals[j]) {
                    below[j].push(i);
                }
            }
        }
        let mut out = Vec::new();
        for j in 0..n {
            for &i in &below[j] {
                let between = below[j]
                    .iter()
                    .any(|&k| k != i && self.ideals[i].is_subset(&self.ideals[k]));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_ideal(&self, i: usize) -> Ideal {
        Ideal {
            elems: self.ideals[i].clone(),
            config: self.config,
            generators: Vec::new(),
            meta: IdealMeta::default(),
        }
    }
}

fn canonical_order(a: &ElemSet, b: &ElemSet) -> std::cmp::Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

/// Enumerate every ideal as the join-closure of the principal ideals.
pub fn ideal_lattice(
    ring: &FunctionRing,
    cfg: IdealConfig,
    budget: usize,
) -> Result<IdealLattice, IdealError> {
    check_mode(ring, cfg)?;
    let elems: Vec<Elem> = ring.elements().collect();
    #[cfg(feature = "parallel")]
    let iter = elems.par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = elems.iter();
    let mut principals: Vec<ElemSet> = iter
        .map(|&f| principal_ideal(ring, cfg, f).map(|i| i.elems))
        .collect::<Result<_, _>>()?;
    principals.sort_by(canonical_order);
    principals.dedup();

    let mut all: Vec<ElemSet> = Vec::new();
    let mut seen: HashMap<ElemSet, ()> = HashMap::new();
    for p in &principals {
        if seen.insert(p.clone(), ()).is_none() {
            all.push(p.clone());
        }
    }
    let mut complete = true;
    let mut cursor = 0;
    while cursor < all.len() {
        let current = all[cursor].clone();
        cursor += 1;
        #[cfg(feature = "parallel")]
        let iter = principals.par_iter();
        #[cfg(not(feature = "parallel"))]
        let iter = principals.iter();
        let joins: Vec<ElemSet> = iter
            .filter(|p| !p.is_subset(&current))
            .map(|p| join(ring, cfg, &current, p))
            .collect();
        for j in joins {
            if seen.insert(j.clone(), ()).is_none() {
                all.push(j);
                if all.len() > budget {
                    complete = false;
                    break;
                }
            }
        }
        if !complete {
            break;
        }
    }
    all.sort_by(canonical_order);
    let index: HashMap<ElemSet, usize> =
        all.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let principal_idx = principals.iter().filter_map(|p| index.get(p).copied()).collect();
    Ok(IdealLattice { config: cfg, ideals: all, principals: principal_idx, complete, index })
}

/// Brute-force oracle: every subset satisfying the ideal laws.
pub fn subset_scan(ring: &FunctionRing, cfg: IdealConfig) -> Result<Vec<ElemSet>, IdealError> {
    check_mode(ring, cfg)?;
    let n = ring.len();
    if n > SUBSET_SCAN_LIMIT {
        return Err(IdealError::TooLargeForScan(n));
    }
    let theta = ring.theta();
    let need: Vec<u32> = ring
        .elements()
        .map(|x| {
            ring.elements().fold(0u32, |acc, y| {
                let mut acc = acc;
                if matches!(cfg.side, Side::Right | Side::TwoSided) {
                    acc |= 1 << ring.mul(y, x);
                }
                if matches!(cfg.side, Side::Left | Side::TwoSided) {
                    acc |= 1 << ring.mul(x, y);
                }
                acc
            })
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask >> theta & 1 == 0 {
            continue;
        }
        let members: Vec<Elem> = (0..n as Elem).filter(|&x| mask >> x & 1 == 1).collect();
        let absorbing = members.iter().all(|&x| need[x as usize] & !mask == 0);
        if !absorbing {
            continue;
        }
        let closed = members.iter().all(|&x| {
            members.iter().all(|&y| {
                mask >> ring.mul(x, y) & 1 == 1
                    && (cfg.mode == Mode::Multiplicative
                        || mask >> ring.add(x, y).unwrap() & 1 == 1)
            })
        });
        if closed {
            out.push(ring.set_from(members));
        }
    }
    out.sort_by(canonical_order);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeVerdict {
    pub prime: bool,
    /// Lexicographically least `(f, g)` with `f·g ∈ I`, `f, g ∉ I`.
    pub witness: Option<(Elem, Elem)>,
}

/// Primality of a proper ideal given as an element set.
pub fn is_prime_set(ring: &FunctionRing, set: &ElemSet) -> Result<PrimeVerdict, IdealError> {
    if set.count_ones(..) == ring.len() {
        return Err(IdealError::NotProper);
    }
    let outside: Vec<Elem> = ring.elements().filter(|&f| !set.contains(f as usize)).collect();
    for &f in &outside {
        for &g in &outside {
            if set.contains(ring.mul(f, g) as usize) {
                return Ok(PrimeVerdict { prime: false, witness: Some((f, g)) });
            }
        }
    }
    Ok(PrimeVerdict { prime: true, witness: None })
}

pub fn is_prime(ring: &FunctionRing, ideal: &Ideal) -> Result<PrimeVerdict, IdealError> {
    is_prime_set(ring, &ideal.elems)
}

/// Primes of a complete lattice with their inclusion classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// Proper prime ideals (lattice indices).
    pub primes: Vec<usize>,
    pub minimal_primes: Vec<usize>,
    pub maximal_primes: Vec<usize>,
    pub min_max: Vec<usize>,
    /// Maximal among all proper ideals.
    pub maximal_ideals: Vec<usize>,
    /// For each prime (parallel to `primes`), the class `z` with `I(z)` equal to it.
    pub vanishing_point: Vec<Option<usize>>,
}

impl Classification {
    pub fn is_prime(&self, i: usize) -> bool {
        self.primes.contains(&i)
    }
}

fn strictly_within(a: &ElemSet, b: &ElemSet) -> bool {
    a != b && a.is_subset(b)
}

pub fn classify_primes(
    ring: &FunctionRing,
    lattice: &IdealLattice,
) -> Result<Classification, IdealError> {
    if !lattice.complete {
        return Err(IdealError::IncompleteLattice);
    }
    let proper: Vec<usize> = (0..lattice.len()).filter(|&i| lattice.is_proper(i)).collect();
    #[cfg(feature = "parallel")]
    let iter = proper.par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = proper.iter();
    let primes: Vec<usize> = iter
        .filter(|&&i| is_prime_set(ring, &lattice.ideals[i]).is_ok_and(|v| v.prime))
        .copied()
        .collect();
    let ids = &lattice.ideals;
    let minimal_primes: Vec<usize> = primes
        .iter()
        .copied()
        .filter(|&p| !primes.iter().any(|&q| strictly_within(&ids[q], &ids[p])))
        .collect();
    let maximal_primes: Vec<usize> = primes
        .iter()
        .copied()
        .filter(|&p| !primes.iter().any(|&q| strictly_within(&ids[p], &ids[q])))
        .collect();
    let min_max = minimal_primes
        .iter()
        .copied()
        .filter(|p| maximal_primes.contains(p))
        .collect();
    let maximal_ideals = proper
        .iter()
        .copied()
        .filter(|&p| !proper.iter().any(|&q| strictly_within(&ids[p], &ids[q])))
        .collect();
    let points: Vec<ElemSet> = ring.classes().iter().map(|&c| ring.vanishing(c)).collect();
    let vanishing_point = primes
        .iter()
        .map(|&p| points.iter().position(|iz| *iz == ids[p]))
        .collect();
    Ok(Classification {
        primes,
        minimal_primes,
        maximal_primes,
        min_max,
        maximal_ideals,
        vanishing_point,
    })
}

/// Intersection of all proper primes.
pub fn prime_radical(
    ring: &FunctionRing,
    lattice: &IdealLattice,
    classes: &Classification,
) -> Result<ElemSet, IdealError> {
    if classes.primes.is_empty() {
        return Err(IdealError::NoPrimes);
    }
    let mut acc = ring.full_set();
    for &p in &classes.primes {
        acc.intersect_with(&lattice.ideals[p]);
    }
    Ok(acc)
}

/// The families 𝒫_U, Φ_U, 𝒰_I, 𝒰_I^c, 𝒳_I, 𝒳_I^c.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySets {
    /// Clopen subsets of the space, indexed by class mask.
    pub clopens: Vec<PointSet>,
    /// χ_U, parallel to `clopens`.
    pub chis: Vec<Elem>,
    /// 𝒫: proper primes together with (Θ), as lattice indices.
    pub p_family: Vec<usize>,
    /// 𝒫_U per clopen.
    pub p_u: Vec<Vec<usize>>,
    /// Φ_U per clopen.
    pub phi_u: Vec<Vec<usize>>,
    /// 𝒰_I per lattice ideal: clopen indices `U` with χ_U ∈ I.
    pub u_i: Vec<Vec<usize>>,
    /// 𝒰_I^c per lattice ideal: clopen indices `U` with χ_{U^c} ∈ I.
    pub u_i_c: Vec<Vec<usize>>,
}

impl FamilySets {
    /// 𝒳_I as elements.
    pub fn x_i(&self, i: usize) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.u_i[i].iter().map(|&u| self.chis[u]).collect();
        v.sort();
        v
    }

    /// 𝒳_I^c = {χ_U : χ_{U^c} ∈ I}.
    pub fn x_i_c(&self, i: usize) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.u_i_c[i].iter().map(|&u| self.chis[u]).collect();
        v.sort();
        v
    }

    /// 𝒳 = all characteristic functions.
    pub fn x_all(&self) -> Vec<Elem> {
        let mut v = self.chis.clone();
        v.sort();
        v
    }

    /// Index of the complement of clopen `u` in `clopens`.
    pub fn complement_index(&self, u: usize) -> usize {
        self.clopens.len() - 1 - u
    }
}

pub fn family_sets(
    ring: &FunctionRing,
    lattice: &IdealLattice,
    classes: &Classification,
) -> Result<FamilySets, IdealError> {
    if ring.id().is_none() || ring.algebra().unit_side() != Some(Side::TwoSided) {
        return Err(IdealError::MissingUnit);
    }
    let clopen_masks: Vec<PointSet> = PointSet::all_subsets(ring.class_count()).collect();
    let clopens: Vec<PointSet> = clopen_masks.iter().map(|&c| ring.lift(c)).collect();
    let chis: Vec<Elem> = clopens.iter().map(|&u| ring.chi(u).expect("unit present")).collect();
    let mut p_family = classes.primes.clone();
    p_family.push(lattice.bottom());
    p_family.sort();
    p_family.dedup();
    let ids = &lattice.ideals;
    let p_u = chis
        .iter()
        .map(|&c| p_family.iter().copied().filter(|&i| ids[i].contains(c as usize)).collect())
        .collect();
    let phi_u = chis
        .iter()
        .map(|&c| (0..ids.len()).filter(|&i| ids[i].contains(c as usize)).collect())
        .collect();
    let n = clopens.len();
    let u_i = ids
        .iter()
        .map(|s| (0..n).filter(|&u| s.contains(chis[u] as usize)).collect())
        .collect();
    let u_i_c = ids
        .iter()
        .map(|s| (0..n).filter(|&u| s.contains(chis[n - 1 - u] as usize)).collect())
        .collect();
    Ok(FamilySets { clopens, chis, p_family, p_u, phi_u, u_i, u_i_c })
}

/// An element `g` with `f + g = Id` and `f·g = Θ`, if one exists.
pub fn complement_of(ring: &FunctionRing, f: Elem) -> Result<Option<Elem>, IdealError> {
    if !ring.algebra().has_add() {
        return Err(IdealError::MissingAddition);
    }
    let id = ring.id().ok_or(IdealError::MissingUnit)?;
    let theta = ring.theta();
    Ok(ring
        .elements()
        .find(|&g| ring.add(f, g) == Some(id) && ring.mul(f, g) == theta))
}

/// All complements of `f` (uniqueness checks).
pub fn complements_of(ring: &FunctionRing, f: Elem) -> Result<Vec<Elem>, IdealError> {
    if !ring.algebra().has_add() {
        return Err(IdealError::MissingAddition);
    }
    let id = ring.id().ok_or(IdealError::MissingUnit)?;
    let theta = ring.theta();
    Ok(ring
        .elements()
        .filter(|&g| ring.add(f, g) == Some(id) && ring.mul(f, g) == theta)
        .collect())
}

/// 𝒳 = {χ_U}, with its closure properties and the comparison to C(Z, ℤ₂).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiSubring {
    pub clopens: Vec<PointSet>,
    pub chis: Vec<Elem>,
    pub mul_closed: bool,
    /// `None` when `Y` has no addition.
    pub add_closed: Option<bool>,
    /// χ_U ↦ χ_U into C(Z, ℤ₂) is a bijection preserving `·` (and `+` when closed).
    pub iso_to_z2: bool,
}

pub fn chi_subring(ring: &FunctionRing) -> Result<ChiSubring, IdealError> {
    let one = ring.algebra().unit().ok_or(IdealError::MissingUnit)?;
    let clopens = ring.clopens();
    let chis: Vec<Elem> = clopens.iter().map(|&u| ring.chi(u).unwrap()).collect();
    let member = ring.set_from(chis.iter().copied());
    let mul_closed = chis
        .iter()
        .all(|&a| chis.iter().all(|&b| member.contains(ring.mul(a, b) as usize)));
    let add_closed = ring.algebra().has_add().then(|| {
        chis.iter().all(|&a| {
            chis.iter().all(|&b| member.contains(ring.add(a, b).unwrap() as usize))
        })
    });
    let z2 = ring.boolean_shadow();
    let to_z2 = |f: Elem| -> Elem {
        let vals: Vec<u8> = ring.values(f).iter().map(|&v| (v == one) as u8).collect();
        z2.encode(&vals)
    };
    let images: Vec<Elem> = chis.iter().map(|&c| to_z2(c)).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let bijective = sorted.len() == z2.len();
    let preserves_mul = chis
        .iter()
        .all(|&a| chis.iter().all(|&b| to_z2(ring.mul(a, b)) == z2.mul(to_z2(a), to_z2(b))));
    let preserves_add = match add_closed {
        Some(true) => chis.iter().all(|&a| {
            chis.iter()
                .all(|&b| to_z2(ring.add(a, b).unwrap()) == z2.add(to_z2(a), to_z2(b)).unwrap())
        }),
        _ => false,
    };
    Ok(ChiSubring {
        clopens,
        chis,
        mul_closed,
        add_closed,
        iso_to_z2: bijective && preserves_mul && preserves_add,
    })
}

/// `(a + b, a ∩ b)`.
pub fn ideal_sum_intersect(
    ring: &FunctionRing,
    a: &Ideal,
    b: &Ideal,
) -> Result<(Ideal, Ideal), IdealError> {
    if a.config != b.config || a.config.mode != Mode::Ring {
        return Err(IdealError::ModeMismatch);
    }
    check_mode(ring, a.config)?;
    let sum = join(ring, a.config, &a.elems, &b.elems);
    let mut meet = a.elems.clone();
    meet.intersect_with(&b.elems);
    let mk = |elems| Ideal { elems, config: a.config, generators: Vec::new(), meta: IdealMeta::default() };
    Ok((mk(sum), mk(meet)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_zmod;
    use crate::funcspace::DEFAULT_BUDGET;
    use crate::topology::ExplicitSpace;

    fn ring(n: usize, m: usize) -> FunctionRing {
        FunctionRing::new(&ExplicitSpace::discrete(n), &make_zmod(m), DEFAULT_BUDGET).unwrap()
    }

    fn ring_cfg() -> IdealConfig {
        IdealConfig::new(Side::Right, Mode::Ring)
    }

    fn mult_cfg() -> IdealConfig {
        IdealConfig::new(Side::Right, Mode::Multiplicative)
    }

    fn ps(items: &[usize]) -> PointSet {
        items.iter().copied().collect()
    }

    #[test]
    fn principal_examples() {
        let r = ring(3, 2);
        let theta = principal_ideal(&r, ring_cfg(), r.theta()).unwrap();
        assert_eq!(theta.len(), 1);
        for u in r.clopens() {
            let chi = r.chi(u).unwrap();
            assert_eq!(principal_ideal(&r, ring_cfg(), chi).unwrap().elems, r.vanishing(u));
        }
        let r4 = ring(2, 4);
        for f in r4.elements() {
            let p = principal_ideal(&r4, mult_cfg(), f).unwrap();
            assert_eq!(r4.zero_set_of(p.members()), r4.zero_set(f));
        }
    }

    #[test]
    fn generation_depends_on_mode() {
        let r = ring(2, 2);
        let u = ps(&[0]);
        let seeds = [r.chi(u).unwrap(), r.chi(ps(&[1])).unwrap()];
        assert_eq!(generate_ideal(&r, ring_cfg(), &seeds).unwrap().len(), r.len());
        let m = generate_ideal(&r, mult_cfg(), &seeds).unwrap();
        let mut expect = r.vanishing(u);
        expect.union_with(&r.vanishing(ps(&[1])));
        assert_eq!(m.elems, expect);
        assert!(m.is_proper());
    }

    #[test]
    fn lattice_of_boolean_square() {
        let r = ring(2, 2);
        let l = ideal_lattice(&r, ring_cfg(), DEFAULT_LATTICE_BUDGET).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(subset_scan(&r, ring_cfg()).unwrap(), l.ideals);
        let lm = ideal_lattice(&r, mult_cfg(), DEFAULT_LATTICE_BUDGET).unwrap();
        assert_eq!(lm.len(), 5);
        assert_eq!(subset_scan(&r, mult_cfg()).unwrap(), lm.ideals);
        assert_eq!(l.covers().len(), 4);
    }

    #[test]
    fn lattice_matches_oracle_on_small_rings() {
        for (n, m) in [(1, 2), (1, 3), (2, 2), (1, 4), (2, 3), (3, 2), (2, 4), (4, 2), (1, 16)] {
            let r = ring(n, m);
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                for mode in [Mode::Multiplicative, Mode::Ring] {
                    let cfg = IdealConfig::new(side, mode);
                    let l = ideal_lattice(&r, cfg, DEFAULT_LATTICE_BUDGET).unwrap();
                    assert!(l.complete);
                    assert_eq!(subset_scan(&r, cfg).unwrap(), l.ideals, "{n} {m} {cfg}");
                    assert!(l.ideals.iter().all(|s| is_ideal(&r, cfg, s)));
                }
            }
        }
    }

    #[test]
    fn primality_examples() {
        let r = ring(2, 3);
        let z1 = r.vanishing(ps(&[0]));
        assert!(is_prime_set(&r, &z1).unwrap().prime);
        let r4 = ring(2, 4);
        let v = is_prime_set(&r4, &r4.vanishing(ps(&[0]))).unwrap();
        let (f, g) = v.witness.unwrap();
        assert_eq!((f, g), (r4.encode(&[2, 0]), r4.encode(&[2, 0])));
        assert_eq!(r4.value_at(f, 0), 2);
        let t = is_prime_set(&r, &r.set_from([r.theta()])).unwrap();
        assert!(!t.prime);
        assert_eq!(is_prime_set(&r, &r.full_set()), Err(IdealError::NotProper));
    }

    #[test]
    fn classification_examples() {
        let r = ring(3, 2);
        let l = ideal_lattice(&r, ring_cfg(), DEFAULT_LATTICE_BUDGET).unwrap();
        let c = classify_primes(&r, &l).unwrap();
        assert_eq!(c.primes.len(), 3);
        assert_eq!(c.min_max.len(), 3);
        assert!(c.vanishing_point.iter().all(|z| z.is_some()));

        let r5 = ring(3, 5);
        let l5 = ideal_lattice(&r5, ring_cfg(), DEFAULT_LATTICE_BUDGET).unwrap();
        let c5 = classify_primes(&r5, &l5).unwrap();
        let iz: Vec<ElemSet> = (0..3).map(|z| r5.vanishing(PointSet::singleton(z))).collect();
        let maxes: Vec<ElemSet> = c5.maximal_ideals.iter().map(|&i| l5.ideals[i].clone()).collect();
        assert_eq!(maxes.len(), 3);
        assert!(iz.iter().all(|s| maxes.contains(s)));

        let r4 = ring(2, 4);
        let l4 = ideal_lattice(&r4, ring_cfg(), DEFAULT_LATTICE_BUDGET).unwrap();
        let c4 = classify_primes(&r4, &l4).unwrap();
        assert_eq!(c4.primes.len(), 2);
        for &p in &c4.primes {
            let zi = (0..2)
                .find(|&z| {
                    l4.ideals[p] == r4.set_from(r4.elements().filter(|&f| r4.values(f)[z] % 2 == 0))
                })
                .unwrap();
            assert!(r4.vanishing(PointSet::singleton(zi)).is_subset(&l4.ideals[p]));
        }
        assert!(c4.vanishing_point.iter().all(|z| z.is_none()));
    }

    #[test]
    fn radicals() {
        for (n, m, size) in [(2, 3, 1), (2, 4, 4), (2, 2, 1)] {
            let r = ring(n, m);
            let l = ideal_lattice(&r, ring_cfg(), DEFAULT_LATTICE_BUDGET).unwrap();
            let c = classify_primes(&r, &l).unwrap();
            let rad = prime_radical(&r, &l, &c).unwrap();
            assert_eq!(rad.count_ones(..), size);
        }
    }

    #[test]
    fn incomplete_lattice_is_flagged() {
        let r = ring(3, 3);
        let l = ideal_lattice(&r, mult_cfg(), 5).unwrap();
        assert!(!l.complete);
        assert_eq!(classify_primes(&r, &l), Err(IdealError::IncompleteLattice));
    }

    #[test]
    fn families() {
        let r = ring(2, 3);
        let l = ideal_lattice(&r, ring_cfg(), DEFAULT_LATTICE_BUDGET).unwrap();
        let c = classify_primes(&r, &l).unwrap();
        let f = family_sets(&r, &l, &c).unwrap();
        let whole = f.clopens.len() - 1;
        assert_eq!(f.p_u[whole], f.p_family);
        assert_eq!(f.u_i[l.bottom()], vec![whole]);
        assert_eq!(f.x_i(l.top()), f.x_all());
    }

    #[test]
    fn complements() {
        let r = ring(2, 2);
        for u in r.clopens() {
            let comp = u.complement(2);
            assert_eq!(complement_of(&r, r.chi(u).unwrap()).unwrap(), Some(r.chi(comp).unwrap()));
        }
        assert_eq!(complement_of(&r, r.id().unwrap()).unwrap(), Some(r.theta()));
        assert!(r.elements().all(|f| complement_of(&r, f).unwrap().is_some()));
        let r3 = ring(1, 3);
        assert_eq!(complement_of(&r3, r3.constant(2)).unwrap(), None);
    }

    #[test]
    fn chi_subrings() {
        let r = ring(3, 2);
        let x = chi_subring(&r).unwrap();
        assert!(x.mul_closed && x.iso_to_z2);
        assert_eq!(x.chis.len(), r.len());
        let r6 = ring(2, 6);
        let x6 = chi_subring(&r6).unwrap();
        assert!(x6.mul_closed);
        assert_eq!(x6.add_closed, Some(false));
        assert!(!x6.iso_to_z2);
    }

    #[test]
    fn sums_and_meets() {
        let r = ring(3, 2);
        let cfg = ring_cfg();
        let u = ps(&[0]);
        let a = principal_ideal(&r, cfg, r.chi(u).unwrap()).unwrap();
        let b = principal_ideal(&r, cfg, r.chi(u.complement(3)).unwrap()).unwrap();
        let (sum, meet) = ideal_sum_intersect(&r, &a, &b).unwrap();
        assert_eq!(sum.len(), r.len());
        assert_eq!(meet.members(), vec![r.theta()]);
        let mut all = r.full_set();
        for z in 0..3 {
            all.intersect_with(&r.vanishing(PointSet::singleton(z)));
        }
        assert_eq!(all, r.vanishing(r.space().full()));
        let m = principal_ideal(&r, mult_cfg(), r.theta()).unwrap();
        assert_eq!(ideal_sum_intersect(&r, &m, &m), Err(IdealError::ModeMismatch));
    }
}
