//! Commands over spec files, producing [`Report`]s.

use thiserror::Error;

use crate::dsl::{algebra_arg, Binding, Directive, ParseError, SpecFile};
use crate::funcspace::seq::DEFAULT_PREFIX;
use crate::funcspace::{Elem, FuncError, FunctionRing, DEFAULT_BUDGET};
use crate::ideals::{classify_primes, ideal_lattice, prime_radical, IdealError};
use crate::report::{show_sets, AnalyzeSection, FuzzSection, IdealEntry, IdealsSection, Report, Section};
use crate::topology::Space;
use crate::verify::{
    fuzz_campaign, generate_prescribed_ring, registry, run_checkers, select_checkers, sequence_checks, Checker,
    FuzzConfig, Instance, PrescribedError, Verdict, VerifyError, SEQUENCE_CHECK_IDS,
};
use crate::zariski::compare_t1_tz_t;

/// Lattice cap for the `ideals` command.
pub const IDEALS_LATTICE_BUDGET: usize = 1 << 16;

/// Members listed per ideal in reports.
const MEMBER_LIMIT: usize = 16;

/// Clopens listed in `analyze` output.
const CLOPEN_LIST_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Ideals,
    Check(Vec<String>),
    Generate { primes: usize, algebra: String },
    Fuzz { seed: u64, instances: usize },
    /// Execute the spec file's own directives.
    Run,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub budget: u64,
    /// Prefix budget for the sequence backend.
    pub prefix: usize,
    pub seed: Option<u64>,
    /// Restrict to one ring binding.
    pub ring: Option<String>,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: DEFAULT_BUDGET, prefix: DEFAULT_PREFIX, seed: None, ring: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommandError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error(transparent)]
    Prescribed(#[from] PrescribedError),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Budget(_) | CommandError::Prescribed(PrescribedError::BudgetExceeded(_)) => 3,
            _ => 2,
        }
    }
}

impl From<FuncError> for CommandError {
    fn from(e: FuncError) -> Self {
        match e {
            FuncError::BudgetExceeded { .. } => CommandError::Budget(e.to_string()),
            other => CommandError::Usage(other.to_string()),
        }
    }
}

impl From<IdealError> for CommandError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::IncompleteLattice | IdealError::TooLargeForScan(_) => CommandError::Budget(e.to_string()),
            other => CommandError::Usage(other.to_string()),
        }
    }
}

impl From<VerifyError> for CommandError {
    fn from(e: VerifyError) -> Self {
        CommandError::Usage(e.to_string())
    }
}

fn need_spec(spec: Option<&SpecFile>) -> Result<&SpecFile, CommandError> {
    spec.ok_or_else(|| CommandError::Usage("this command needs a spec file".into()))
}

fn bindings(spec: &SpecFile, opts: &Options) -> Result<Vec<Binding>, CommandError> {
    let names: Vec<String> = match &opts.ring {
        Some(r) => vec![r.clone()],
        None => spec.rings.iter().map(|(n, _)| n.clone()).collect(),
    };
    if names.is_empty() {
        return Err(CommandError::Usage("the spec file binds no ring".into()));
    }
    names.iter().map(|n| spec.bind(n).map_err(CommandError::Usage)).collect()
}

pub fn analyze(b: &Binding, opts: &Options) -> Result<Section, CommandError> {
    match &b.space {
        Space::Explicit(x) => {
            let ring = FunctionRing::new(x, &b.algebra, opts.budget)?;
            let clopens = x.clopens();
            let mut note = None;
            let shown = if clopens.len() > CLOPEN_LIST_LIMIT {
                note = Some(format!("{} clopens; first {CLOPEN_LIST_LIMIT} listed", clopens.len()));
                &clopens[..CLOPEN_LIST_LIMIT]
            } else {
                &clopens[..]
            };
            let comparisons = match compare_t1_tz_t(&ring) {
                Ok(c) => Some(c),
                Err(e) => {
                    note = Some(format!("Zariski comparison unavailable: {e}"));
                    None
                }
            };
            Ok(Section::Analyze(AnalyzeSection {
                ring: b.name.clone(),
                backend: "explicit".into(),
                points: Some(x.point_count()),
                quasi_components: show_sets(&x.quasi_components()),
                clopens: show_sets(shown),
                totally_separated: x.is_totally_separated(),
                comparisons,
                note,
            }))
        }
        Space::Sequence(_) => {
            let zariski = crate::zariski::SequenceZariski::new(&b.algebra);
            Ok(Section::Analyze(AnalyzeSection {
                ring: b.name.clone(),
                backend: "sequence".into(),
                points: None,
                quasi_components: vec!["{n} for n ∈ ℕ".into(), "{∞}".into()],
                clopens: vec!["finite subsets of ℕ".into(), "cofinite sets containing ∞".into()],
                totally_separated: true,
                comparisons: None,
                note: Some(match zariski {
                    Ok(_) => "𝒯_Z = 𝒯: the closed sets are the finite subsets of ℕ and the sets containing ∞".into(),
                    Err(e) => format!("Zariski comparison unavailable: {e}"),
                }),
            }))
        }
    }
}

pub fn ideals(b: &Binding, opts: &Options) -> Result<Section, CommandError> {
    let Space::Explicit(x) = &b.space else {
        return Err(CommandError::Usage("`ideals` needs an explicit space; the sequence ring is not enumerable".into()));
    };
    let ring = FunctionRing::new(x, &b.algebra, opts.budget)?;
    let lattice = ideal_lattice(&ring, b.config, IDEALS_LATTICE_BUDGET)?;
    let cls = classify_primes(&ring, &lattice)?;
    let radical = match prime_radical(&ring, &lattice, &cls) {
        Ok(r) => r.ones().map(|e| ring.show(e as Elem)).collect(),
        Err(IdealError::NoPrimes) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let entries = (0..lattice.len())
        .map(|i| {
            let s = &lattice.ideals[i];
            let p = cls.primes.iter().position(|&q| q == i);
            IdealEntry {
                index: i,
                size: s.count_ones(..),
                members: s.ones().take(MEMBER_LIMIT).map(|e| ring.show(e as Elem)).collect(),
                prime: p.is_some(),
                minimal_prime: cls.minimal_primes.contains(&i),
                maximal: cls.maximal_ideals.contains(&i),
                min_max: cls.min_max.contains(&i),
                vanishing_point: p.and_then(|p| cls.vanishing_point[p]),
            }
        })
        .collect();
    Ok(Section::Ideals(IdealsSection {
        ring: b.name.clone(),
        config: b.config.to_string(),
        ring_size: ring.len(),
        lattice_size: lattice.len(),
        complete: lattice.complete,
        ideals: entries,
        primes: cls.primes.clone(),
        radical,
    }))
}

fn is_sequence_id(id: &str) -> bool {
    id.len() >= 3 && id[..3].eq_ignore_ascii_case("SEQ")
}

pub fn check(b: &Binding, ids: &[String], opts: &Options) -> Result<Section, CommandError> {
    let reports = match &b.space {
        Space::Explicit(x) => {
            let explicit: Vec<String> = ids.iter().filter(|i| !is_sequence_id(i)).cloned().collect();
            if explicit.is_empty() {
                return Err(CommandError::Usage("sequence checks need a `seq` space".into()));
            }
            let sel = select_checkers(&explicit)?;
            let mut inst = Instance::new(x.clone(), b.algebra.clone()).with_config(b.config).with_pins(b.pins.clone());
            if let Some(s) = opts.seed {
                inst = inst.with_seed(s);
            }
            run_checkers(&sel, &inst, opts.budget)
        }
        Space::Sequence(_) => {
            let all = ids.iter().any(|i| i.eq_ignore_ascii_case("all") || i.eq_ignore_ascii_case("SEQ"));
            if let Some(id) = ids.iter().find(|i| !all && !is_sequence_id(i)) {
                return Err(CommandError::Usage(format!("`{id}` is an explicit-space checker; the sequence backend runs {}", SEQUENCE_CHECK_IDS.join(", "))));
            }
            let reports: Vec<_> = sequence_checks(&b.algebra, opts.prefix)
                .into_iter()
                .filter(|r| all || ids.iter().any(|i| i.eq_ignore_ascii_case(&r.checker_id)))
                .collect();
            if reports.is_empty() {
                return Err(CommandError::Usage(format!("unknown sequence checker; known: {}", SEQUENCE_CHECK_IDS.join(", "))));
            }
            reports
        }
    };
    Ok(Section::Checks { ring: b.name.clone(), reports })
}

pub fn generate(primes: usize, algebra: &str, spec: Option<&SpecFile>) -> Result<Section, CommandError> {
    let y = algebra_arg(algebra, spec).map_err(CommandError::Usage)?;
    let (_, inventory) = generate_prescribed_ring(primes, &y)?;
    Ok(Section::Generate { primes, inventory })
}

pub fn fuzz(seed: u64, instances: usize, opts: &Options) -> Section {
    let cfg = FuzzConfig { seed, instances, budget: opts.budget, ..FuzzConfig::default() };
    let all: Vec<&Checker> = registry().iter().collect();
    let summary = fuzz_campaign(&cfg, &all);
    let failures = summary.reports.iter().filter(|r| r.verdict == Verdict::Fail).cloned().collect();
    Section::Fuzz(FuzzSection { seed, instances, counts: summary.counts, failures })
}

fn directive(spec: &SpecFile, d: &Directive, opts: &Options) -> Result<Section, CommandError> {
    let bind = |r: &str| spec.bind(r).map_err(CommandError::Usage);
    match d {
        Directive::Analyze(r) => analyze(&bind(r)?, opts),
        Directive::Ideals(r) => ideals(&bind(r)?, opts),
        Directive::Check { ring, ids } => check(&bind(ring)?, ids, opts),
        Directive::Generate { primes, algebra } => generate(*primes, algebra, Some(spec)),
        Directive::Fuzz { seed, instances } => Ok(fuzz(*seed, *instances, opts)),
    }
}

pub fn run_command(spec: Option<&SpecFile>, cmd: &Command, opts: &Options) -> Result<Report, CommandError> {
    let sections = match cmd {
        Command::Analyze => {
            let spec = need_spec(spec)?;
            bindings(spec, opts)?.iter().map(|b| analyze(b, opts)).collect::<Result<_, _>>()?
        }
        Command::Ideals => {
            let spec = need_spec(spec)?;
            bindings(spec, opts)?.iter().map(|b| ideals(b, opts)).collect::<Result<_, _>>()?
        }
        Command::Check(ids) => {
            let spec = need_spec(spec)?;
            bindings(spec, opts)?.iter().map(|b| check(b, ids, opts)).collect::<Result<_, _>>()?
        }
        Command::Generate { primes, algebra } => vec![generate(*primes, algebra, spec)?],
        Command::Fuzz { seed, instances } => vec![fuzz(*seed, *instances, opts)],
        Command::Run => {
            let spec = need_spec(spec)?;
            spec.directives.iter().map(|d| directive(spec, d, opts)).collect::<Result<_, _>>()?
        }
    };
    Ok(Report::new(sections))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_spec;

    fn spec(text: &str) -> SpecFile {
        parse_spec(text).unwrap()
    }

    #[test]
    fn ideals_of_two_points_over_z3() {
        let s = spec("space Z discrete 2 algebra Y zmod 3 ring R = C(Z, Y)");
        let r = run_command(Some(&s), &Command::Ideals, &Options::default()).unwrap();
        let Section::Ideals(i) = &r.sections[0] else { panic!() };
        assert_eq!(i.primes.len(), 2);
        let mut pts: Vec<_> = i.primes.iter().map(|&p| i.ideals[p].vanishing_point).collect();
        pts.sort();
        assert_eq!(pts, vec![Some(0), Some(1)]);
        assert_eq!(i.radical, vec!["(0,0)"]);
    }

    #[test]
    fn check_t34_passes() {
        let s = spec("space Z discrete 2 algebra Y zmod 3 ring R = C(Z, Y)");
        let r = run_command(Some(&s), &Command::Check(vec!["T34".into()]), &Options::default()).unwrap();
        assert_eq!(r.count(Verdict::Pass), 1);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn generate_three() {
        let r = run_command(None, &Command::Generate { primes: 3, algebra: "zmod:2".into() }, &Options::default()).unwrap();
        let Section::Generate { inventory, .. } = &r.sections[0] else { panic!() };
        assert_eq!(inventory.primes.len(), 3);
    }

    #[test]
    fn refusals_are_usage_errors() {
        let e = run_command(None, &Command::Generate { primes: 2, algebra: "zmod:4".into() }, &Options::default()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run_command(None, &Command::Analyze, &Options::default()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn budget_maps_to_three() {
        let s = spec("space Z discrete 8 algebra Y zmod 5 ring R = C(Z, Y)");
        let opts = Options { budget: 1000, ..Options::default() };
        assert_eq!(run_command(Some(&s), &Command::Ideals, &opts).unwrap_err().exit_code(), 3);
        let r = run_command(Some(&s), &Command::Check(vec!["T5".into()]), &opts).unwrap();
        assert_eq!(r.exit_code(), 3);
    }

    #[test]
    fn sequence_ring() {
        let s = spec("space S seq algebra Y zmod 2 ring R = C(S, Y) check R all analyze R");
        let r = run_command(Some(&s), &Command::Run, &Options::default()).unwrap();
        assert_eq!(r.count(Verdict::Pass), SEQUENCE_CHECK_IDS.len());
        assert!(run_command(Some(&s), &Command::Ideals, &Options::default()).is_err());
    }

    #[test]
    fn run_executes_directives() {
        let s = spec("space Z discrete 3 algebra Y zmod 2 ring R = C(Z, Y) pin J {0} pin U1 {0 1} pin U {1 2}\ncheck R T26 T27 T28");
        let r = run_command(Some(&s), &Command::Run, &Options::default()).unwrap();
        assert_eq!(r.count(Verdict::Fail), 1);
        assert_eq!(r.count(Verdict::Pass), 2);
        assert_eq!(r.exit_code(), 1);
    }
}
