//! Statement checkers, instance generation and fuzz campaigns.
//!
//! Each checker tests one numbered statement literally on a concrete
//! instance. Statements are numbered in order of appearance (theorems, lemmas
//! and definitions counted separately).

// Witnesses travel by value in `Err`; they are only built on failure.
#![allow(clippy::result_large_err)]

use std::borrow::Cow;
use std::cell::{Cell, OnceCell};
use std::fmt;
use std::sync::OnceLock;
use web_time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraTable, Side, StructureFlags, Val};
use crate::funcspace::{Elem, ElemSet, FuncError, FunctionRing, DEFAULT_BUDGET};
use crate::ideals::{ideal_lattice, is_prime_set, principal_ideal, IdealConfig, IdealLattice, Mode};
use crate::pointset::PointSet;
use crate::topology::ExplicitSpace;

mod basic;
mod families;
mod fuzz;
mod ideal_checks;
mod instance;
mod prescribed;
mod primes;
mod sequence;

pub use fuzz::{campaign_instance, fuzz_campaign, CampaignSummary, FuzzConfig};
pub use instance::{random_instance, AlgebraKind, InstanceSpec, SpaceKind};
pub use prescribed::{generate_prescribed_ring, Inventory, PrescribedError};
pub use sequence::{sequence_checks, SEQUENCE_CHECK_IDS};

/// Cap on lattice size inside checkers.
pub const CHECK_LATTICE_BUDGET: usize = 4096;

/// Rings larger than this skip checks that need every principal ideal.
pub const PRINCIPAL_LIMIT: usize = 4096;

/// |Z| above which per-clopen scans are refused.
pub const CLOPEN_LIMIT: usize = 12;

/// Pairs (or triples) scanned exhaustively before checkers fall back to sampling.
pub const PAIR_BUDGET: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisUnmet,
    BudgetExceeded,
    SkippedInfinite,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::HypothesisUnmet => "HYPOTHESIS_UNMET",
            Verdict::BudgetExceeded => "BUDGET_EXCEEDED",
            Verdict::SkippedInfinite => "SKIPPED_INFINITE",
        })
    }
}

/// Which carrier the witness values live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    X,
    Z,
    Y,
    Seq,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFn {
    pub name: String,
    pub index: Elem,
    pub values: Vec<Val>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSet {
    pub name: String,
    pub points: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedIdeal {
    pub name: String,
    pub members: Vec<Elem>,
}

/// Everything needed to re-verify a failure by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub over: Domain,
    pub note: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functions: Vec<WitnessFn>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<NamedSet>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<NamedIdeal>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<(String, Val)>,
}

impl Witness {
    pub fn new(over: Domain, note: impl Into<String>) -> Self {
        Witness {
            over,
            note: note.into(),
            functions: Vec::new(),
            sets: Vec::new(),
            ideals: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn f(mut self, name: &str, r: &FunctionRing, e: Elem) -> Self {
        self.functions.push(WitnessFn { name: name.into(), index: e, values: r.raw(e) });
        self
    }

    pub fn set(mut self, name: &str, points: PointSet) -> Self {
        self.sets.push(NamedSet { name: name.into(), points });
        self
    }

    pub fn ideal(mut self, name: &str, s: &ElemSet) -> Self {
        self.ideals.push(NamedIdeal { name: name.into(), members: s.ones().map(|i| i as Elem).collect() });
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn val(mut self, name: &str, v: Val) -> Self {
        self.values.push((name.into(), v));
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.note)?;
        for w in &self.functions {
            write!(f, "; {}={}", w.name, crate::funcspace::show_values(&w.values))?;
        }
        for s in &self.sets {
            write!(f, "; {}={}", s.name, s.points)?;
        }
        for i in &self.ideals {
            write!(f, "; {}=#{:?}", i.name, i.members)?;
        }
        for (n, v) in &self.values {
            write!(f, "; {n}={v}")?;
        }
        Ok(())
    }
}

/// Non-passing result of a checker body.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Fail(Witness),
    Unmet(String),
    Budget(String),
    Skipped(String),
}

/// `Ok(())` is a pass.
pub type Check = Result<(), Outcome>;

pub(crate) fn unmet<T>(why: impl Into<String>) -> Result<T, Outcome> {
    Err(Outcome::Unmet(why.into()))
}

pub(crate) fn fail<T>(w: Witness) -> Result<T, Outcome> {
    Err(Outcome::Fail(w))
}

pub(crate) fn require(cond: bool, why: &str) -> Check {
    if cond {
        Ok(())
    } else {
        unmet(why)
    }
}

/// Optional pinned parameters; checkers that quantify over them use the pin
/// instead of scanning.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pins {
    /// J = I(set) over Z points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_vanishing: Option<PointSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u1: Option<PointSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<PointSet>,
}

impl Pins {
    pub fn is_empty(&self) -> bool {
        self == &Pins::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub space: ExplicitSpace,
    pub algebra: AlgebraTable,
    pub config: IdealConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Pins::is_empty")]
    pub pins: Pins,
}

impl Instance {
    pub fn new(space: ExplicitSpace, algebra: AlgebraTable) -> Self {
        let config = IdealConfig::default_for(&algebra);
        Instance { space, algebra, config, seed: None, pins: Pins::default() }
    }

    pub fn with_config(mut self, config: IdealConfig) -> Self {
        self.config = config;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_pins(mut self, pins: Pins) -> Self {
        self.pins = pins;
        self
    }

    pub fn label(&self) -> String {
        format!(
            "{}pt/{}/{}{}",
            self.space.point_count(),
            self.algebra.name(),
            self.config,
            self.seed.map(|s| format!("/seed {s}")).unwrap_or_default()
        )
    }
}

/// What a report was computed on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "kebab-case")]
pub enum InstanceDescriptor {
    Explicit(Instance),
    Sequence { algebra: AlgebraTable, prefix_budget: usize },
}

impl InstanceDescriptor {
    pub fn label(&self) -> String {
        match self {
            InstanceDescriptor::Explicit(i) => i.label(),
            InstanceDescriptor::Sequence { algebra, prefix_budget } => {
                format!("seq/{}/k={prefix_budget}", algebra.name())
            }
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            InstanceDescriptor::Explicit(i) => i.seed.unwrap_or(0),
            InstanceDescriptor::Sequence { .. } => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub checker_id: String,
    pub instance: InstanceDescriptor,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Set when the statement is known to fail as printed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown checker `{0}`")]
    UnknownChecker(String),
    #[error(transparent)]
    Func(#[from] FuncError),
}

pub struct Checker {
    pub id: &'static str,
    /// One-line paraphrase of the statement being tested.
    pub summary: &'static str,
    /// Present when the literal statement is known to be false on some instances.
    pub discrepancy: Option<&'static str>,
    pub run: fn(&Ctx) -> Check,
}

impl Checker {
    pub(crate) const fn new(id: &'static str, summary: &'static str, run: fn(&Ctx) -> Check) -> Self {
        Checker { id, summary, discrepancy: None, run }
    }

    pub(crate) const fn flagged(mut self, note: &'static str) -> Self {
        self.discrepancy = Some(note);
        self
    }
}

fn id_key(id: &str) -> (u8, u32, u32, String) {
    let kind = match id.chars().next() {
        Some('D') => 0,
        Some('L') => 1,
        Some('T') => 2,
        _ => 3,
    };
    let rest: String = id.chars().skip(1).collect();
    let mut parts = rest.split('.');
    let a = parts.next().and_then(|s| s.parse().ok()).unwrap_or(u32::MAX);
    let b = parts.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    (kind, a, b, id.to_string())
}

/// All explicit-backend checkers, sorted by kind and number.
pub fn registry() -> &'static [Checker] {
    static REG: OnceLock<Vec<Checker>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v: Vec<Checker> = Vec::new();
        v.extend(basic::checks());
        v.extend(ideal_checks::checks());
        v.extend(families::checks());
        v.extend(primes::checks());
        v.sort_by_key(|c| id_key(c.id));
        v
    })
}

pub fn find_checker(id: &str) -> Option<&'static Checker> {
    registry().iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Expand `all`, exact ids and prefixes such as `L59` (every `L59.*`).
pub fn select_checkers(ids: &[String]) -> Result<Vec<&'static Checker>, VerifyError> {
    let mut out: Vec<&'static Checker> = Vec::new();
    for id in ids {
        if id.eq_ignore_ascii_case("all") {
            out.extend(registry().iter());
            continue;
        }
        let exact = find_checker(id);
        let family: Vec<&Checker> = registry()
            .iter()
            .filter(|c| c.id.len() > id.len() && c.id[..id.len()].eq_ignore_ascii_case(id) && c.id.as_bytes()[id.len()] == b'.')
            .collect();
        match (exact, family.is_empty()) {
            (Some(c), _) => out.push(c),
            (None, false) => out.extend(family),
            (None, true) => return Err(VerifyError::UnknownChecker(id.clone())),
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|c| seen.insert(c.id));
    Ok(out)
}

/// Shared lazily-computed data for all checkers on one instance.
pub struct Ctx {
    pub inst: Instance,
    /// C(X, Y) over the input space.
    pub x: FunctionRing,
    /// C(Z, Y) with Z the space of quasi-components; element indices agree with `x`.
    pub z: FunctionRing,
    pub cfg: IdealConfig,
    pub lattice_budget: usize,
    lattice: OnceCell<IdealLattice>,
    prime_flags: OnceCell<Vec<bool>>,
    vanishing: OnceCell<Vec<ElemSet>>,
    principals: OnceCell<Vec<ElemSet>>,
    partial: Cell<bool>,
    rng_salt: Cell<u64>,
}

impl Ctx {
    pub fn new(inst: Instance, budget: u64) -> Result<Self, FuncError> {
        let x = FunctionRing::new(&inst.space, &inst.algebra, budget)?;
        let z = x.quotient_ring();
        let cfg = inst.config;
        Ok(Ctx {
            inst,
            x,
            z,
            cfg,
            lattice_budget: CHECK_LATTICE_BUDGET,
            lattice: OnceCell::new(),
            prime_flags: OnceCell::new(),
            vanishing: OnceCell::new(),
            principals: OnceCell::new(),
            partial: Cell::new(false),
            rng_salt: Cell::new(0),
        })
    }

    pub fn y(&self) -> &AlgebraTable {
        &self.inst.algebra
    }

    pub fn flags(&self) -> &StructureFlags {
        self.inst.algebra.flags()
    }

    /// |Z|.
    pub fn k(&self) -> usize {
        self.z.class_count()
    }

    pub fn ring_mode(&self) -> bool {
        self.cfg.mode == Mode::Ring
    }

    /// Mark the current verdict as resting on truncated data.
    pub fn mark_partial(&self) {
        self.partial.set(true);
    }

    fn reset(&self, salt: u64) {
        self.partial.set(false);
        self.rng_salt.set(salt);
    }

    /// Deterministic per-checker RNG.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.inst.seed.unwrap_or(0x5eed) ^ self.rng_salt.get())
    }

    pub fn lattice(&self) -> &IdealLattice {
        let l = self.lattice.get_or_init(|| {
            ideal_lattice(&self.z, self.cfg, self.lattice_budget).expect("config validated against Y")
        });
        if !l.complete {
            self.mark_partial();
        }
        l
    }

    /// Primality of each lattice ideal (false for the whole ring).
    pub fn prime_flags(&self) -> &[bool] {
        let l = self.lattice();
        self.prime_flags.get_or_init(|| {
            let idx: Vec<usize> = (0..l.len()).collect();
            let z = &self.z;
            let test = |&i: &usize| l.is_proper(i) && is_prime_set(z, &l.ideals[i]).is_ok_and(|v| v.prime);
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                idx.par_iter().map(test).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                idx.iter().map(test).collect()
            }
        })
    }

    /// Indices of proper prime ideals.
    pub fn primes(&self) -> Vec<usize> {
        self.prime_flags().iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i).collect()
    }

    /// 𝒫: proper primes together with (Θ).
    pub fn p_family(&self) -> Vec<usize> {
        let mut v = self.primes();
        let b = self.lattice().bottom();
        if !v.contains(&b) {
            v.push(b);
        }
        v.sort();
        v
    }

    pub fn unit(&self) -> Result<Val, Outcome> {
        if self.flags().has_unit {
            Ok(self.y().unit().unwrap())
        } else {
            unmet("Y has no two-sided unit")
        }
    }

    pub fn two_sided_zero(&self) -> Check {
        require(self.y().zero_side() == Side::TwoSided, "zero is not two-sided absorbing")
    }

    /// Zero absorbs on the side the configured ideals absorb on, so that
    /// vanishing sets are ideals.
    pub fn zero_ok(&self) -> Check {
        require(self.y().zero_side().covers(self.cfg.side), "zero does not absorb on the ideal side")
    }

    pub fn need_ring_mode(&self) -> Check {
        require(self.ring_mode(), "needs ring-mode ideals (Y with addition)")
    }

    pub fn domain(&self) -> Check {
        require(self.flags().zero_divisor_free, "Y has zero divisors")
    }

    pub fn at_least_two(&self) -> Check {
        require(self.k() >= 2, "Z has a single point")
    }

    /// χ_U on Z (unit present).
    pub fn chi(&self, u: PointSet) -> Elem {
        self.z.chi(u).expect("unit checked and Z discrete")
    }

    pub fn clopens(&self) -> Vec<PointSet> {
        self.z.clopens()
    }

    pub fn zfull(&self) -> PointSet {
        PointSet::full(self.k())
    }

    /// Guard for loops over all clopens of Z (2^|Z| of them).
    pub fn clopen_guard(&self) -> Check {
        if self.k() > CLOPEN_LIMIT {
            Err(Outcome::Budget(format!("{} clopens is too many", 1u64 << self.k())))
        } else {
            Ok(())
        }
    }

    /// I(U) on Z for every U, indexed by mask.
    pub fn vanishing_all(&self) -> &[ElemSet] {
        self.vanishing.get_or_init(|| self.clopens().into_iter().map(|u| self.z.vanishing(u)).collect())
    }

    /// I(U) on Z; cached unless Z has too many clopens.
    pub fn iz(&self, u: PointSet) -> Cow<'_, ElemSet> {
        if self.k() <= CLOPEN_LIMIT {
            Cow::Borrowed(&self.vanishing_all()[u.bits() as usize])
        } else {
            Cow::Owned(self.z.vanishing(u))
        }
    }

    /// χ_U for every U ⊆ Z, indexed by mask.
    pub fn chis(&self) -> Result<Vec<Elem>, Outcome> {
        self.unit()?;
        self.clopen_guard()?;
        Ok(self.clopens().into_iter().map(|u| self.chi(u)).collect())
    }

    /// (f) for every f, indexed by element.
    pub fn principals(&self) -> Result<&[ElemSet], Outcome> {
        if self.z.len() > PRINCIPAL_LIMIT {
            return Err(Outcome::Budget(format!("more than {PRINCIPAL_LIMIT} elements")));
        }
        Ok(self.principals.get_or_init(|| {
            let (z, cfg) = (&self.z, self.cfg);
            let one = |f: Elem| principal_ideal(z, cfg, f).expect("config validated").elems;
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..self.z.len() as Elem).into_par_iter().map(one).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..self.z.len() as Elem).map(one).collect()
            }
        }))
    }

    /// Guard for loops quadratic in the ring size.
    pub fn quad(&self) -> Check {
        let n = self.z.len();
        if n * n > PAIR_BUDGET * 4 {
            Err(Outcome::Budget(format!("{n} elements is too many for a pairwise scan")))
        } else {
            Ok(())
        }
    }

    /// Proper lattice ideals.
    pub fn proper(&self) -> Vec<usize> {
        let l = self.lattice();
        (0..l.len()).filter(|&i| l.is_proper(i)).collect()
    }

    pub fn ideal(&self, i: usize) -> &ElemSet {
        &self.lattice().ideals[i]
    }

    pub fn w(&self, note: impl Into<String>) -> Witness {
        Witness::new(Domain::Z, note)
    }

    pub fn wx(&self, note: impl Into<String>) -> Witness {
        Witness::new(Domain::X, note)
    }

    /// All ordered pairs of ring elements, or a deterministic sample when
    /// there are more than [`PAIR_BUDGET`].
    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        let n = self.z.len();
        if n * n <= PAIR_BUDGET {
            (0..n as Elem).flat_map(|a| (0..n as Elem).map(move |b| (a, b))).collect()
        } else {
            self.mark_partial();
            let mut rng = self.rng();
            (0..PAIR_BUDGET)
                .map(|_| (rng.random_range(0..n) as Elem, rng.random_range(0..n) as Elem))
                .collect()
        }
    }

    /// Triples, sampled beyond [`PAIR_BUDGET`].
    pub fn triples(&self) -> Vec<(Elem, Elem, Elem)> {
        let n = self.z.len();
        let limit = PAIR_BUDGET / 4;
        if n * n * n <= limit {
            let mut v = Vec::with_capacity(n * n * n);
            for a in 0..n as Elem {
                for b in 0..n as Elem {
                    for c in 0..n as Elem {
                        v.push((a, b, c));
                    }
                }
            }
            v
        } else {
            self.mark_partial();
            let mut rng = self.rng();
            (0..limit)
                .map(|_| {
                    (
                        rng.random_range(0..n) as Elem,
                        rng.random_range(0..n) as Elem,
                        rng.random_range(0..n) as Elem,
                    )
                })
                .collect()
        }
    }

    /// Pairs of lattice ideals; sampled when large.
    pub fn ideal_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.lattice().len();
        if n * n <= PAIR_BUDGET / 16 {
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
        } else {
            self.mark_partial();
            let mut rng = self.rng();
            (0..PAIR_BUDGET / 16).map(|_| (rng.random_range(0..n), rng.random_range(0..n))).collect()
        }
    }
}

fn salt(id: &str) -> u64 {
    id.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

fn report(
    c: &Checker,
    desc: InstanceDescriptor,
    outcome: Check,
    partial: bool,
    started: Instant,
) -> TheoremReport {
    let (verdict, witness, detail) = match outcome {
        Ok(()) if partial => (
            Verdict::BudgetExceeded,
            None,
            Some("no counterexample in the enumerated part; enumeration was truncated".to_string()),
        ),
        Ok(()) => (Verdict::Pass, None, None),
        Err(Outcome::Fail(w)) => (Verdict::Fail, Some(w), None),
        Err(Outcome::Unmet(s)) => (Verdict::HypothesisUnmet, None, Some(s)),
        Err(Outcome::Budget(s)) => (Verdict::BudgetExceeded, None, Some(s)),
        Err(Outcome::Skipped(s)) => (Verdict::SkippedInfinite, None, Some(s)),
    };
    let discrepancy = (verdict == Verdict::Fail).then(|| c.discrepancy.map(str::to_string)).flatten();
    TheoremReport {
        checker_id: c.id.to_string(),
        instance: desc,
        verdict,
        witness,
        detail,
        discrepancy,
        elapsed_ms: started.elapsed().as_secs_f64() * 1000.0,
    }
}

/// Run one checker against a prepared context.
pub fn run_in(ctx: &Ctx, c: &Checker) -> TheoremReport {
    let started = Instant::now();
    ctx.reset(salt(c.id));
    let outcome = (c.run)(ctx);
    report(c, InstanceDescriptor::Explicit(ctx.inst.clone()), outcome, ctx.partial.get(), started)
}

/// Reports for every instance-level failure to build the context.
fn budget_reports(checkers: &[&Checker], inst: &Instance, err: &FuncError) -> Vec<TheoremReport> {
    checkers
        .iter()
        .map(|c| TheoremReport {
            checker_id: c.id.to_string(),
            instance: InstanceDescriptor::Explicit(inst.clone()),
            verdict: Verdict::BudgetExceeded,
            witness: None,
            detail: Some(err.to_string()),
            discrepancy: None,
            elapsed_ms: 0.0,
        })
        .collect()
}

pub fn run_checker(id: &str, inst: &Instance) -> Result<TheoremReport, VerifyError> {
    let c = find_checker(id).ok_or_else(|| VerifyError::UnknownChecker(id.to_string()))?;
    Ok(run_checkers(&[c], inst, DEFAULT_BUDGET).remove(0))
}

/// Run several checkers on one instance, sharing the lattice.
pub fn run_checkers(checkers: &[&Checker], inst: &Instance, budget: u64) -> Vec<TheoremReport> {
    match Ctx::new(inst.clone(), budget) {
        Ok(ctx) => checkers.iter().map(|c| run_in(&ctx, c)).collect(),
        Err(e) => budget_reports(checkers, inst, &e),
    }
}

/// Every value-vector of C(Z, Y) as a list (used by witnesses and tests).
pub fn show_elements(r: &FunctionRing, s: &ElemSet) -> Vec<String> {
    s.ones().map(|i| r.show(i as Elem)).collect()
}

#[cfg(test)]
mod tests;
