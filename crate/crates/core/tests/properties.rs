use proptest::prelude::*;

use quasiring::algebra::{make_zmod, AlgebraTable};
use quasiring::funcspace::{FunctionRing, DEFAULT_BUDGET};
use quasiring::ideals::{classify_primes, ideal_lattice, is_ideal, subset_scan, IdealConfig, Mode, SUBSET_SCAN_LIMIT};
use quasiring::pointset::PointSet;
use quasiring::topology::{ExplicitSpace, Space};
use quasiring::verify::{
    campaign_instance, random_instance, registry, run_checkers, AlgebraKind, Checker, FuzzConfig, InstanceSpec,
    SpaceKind, Verdict,
};

fn instance(seed: u64, table: bool) -> (ExplicitSpace, AlgebraTable) {
    let kind = if table { AlgebraKind::Table } else { AlgebraKind::RandomZmod };
    let (space, y) = random_instance(&InstanceSpec::new(seed, SpaceKind::ExplicitRandom, kind).bounded(4, 4));
    let Space::Explicit(x) = space else { unreachable!() };
    (x, y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quasi_components_partition(seed in any::<u64>(), table in any::<bool>()) {
        let (x, _) = instance(seed, table);
        let qs = x.quasi_components();
        let mut seen = PointSet::EMPTY;
        for q in &qs {
            prop_assert!(q.is_disjoint(seen));
            seen = seen.union(*q);
        }
        prop_assert_eq!(seen, x.full());
        let clopens = x.clopens();
        for c in &clopens {
            prop_assert!(clopens.contains(&c.complement(x.point_count())));
            // every clopen is a union of quasi-components
            prop_assert!(qs.iter().all(|q| q.is_subset(*c) || q.is_disjoint(*c)));
        }
    }

    #[test]
    fn zero_sets_and_vanishing_ideals(seed in any::<u64>(), table in any::<bool>()) {
        let (x, y) = instance(seed, table);
        let r = FunctionRing::new(&x, &y, DEFAULT_BUDGET).unwrap();
        let cfg = IdealConfig::default_for(&y);
        for f in r.elements() {
            for g in r.elements() {
                let v = r.zero_set(r.mul(f, g));
                prop_assert!(r.zero_set(f).union(r.zero_set(g)).is_subset(v));
            }
        }
        for u in PointSet::full(x.point_count()).subsets() {
            prop_assert!(is_ideal(&r, cfg, &r.vanishing(u)));
        }
    }

    #[test]
    fn clopen_idempotent_pairs(seed in any::<u64>()) {
        let (x, y) = instance(seed, false);
        let r = FunctionRing::new(&x, &y, DEFAULT_BUDGET).unwrap();
        let n = x.point_count();
        for u in x.clopens() {
            if u.is_empty() || u == x.full() {
                continue;
            }
            let (a, b) = (r.chi(u).unwrap(), r.chi(u.complement(n)).unwrap());
            prop_assert_eq!(r.mul(a, b), r.theta());
            prop_assert_eq!(r.mul(a, a), a);
            prop_assert_eq!(r.add(a, b), r.id());
        }
    }

    #[test]
    fn lattice_matches_subset_scan(seed in any::<u64>(), table in any::<bool>(), mult in any::<bool>()) {
        let (x, y) = instance(seed, table);
        let r = FunctionRing::new(&x, &y, DEFAULT_BUDGET).unwrap();
        prop_assume!(r.len() <= SUBSET_SCAN_LIMIT);
        let mut cfg = IdealConfig::default_for(&y);
        if mult {
            cfg.mode = Mode::Multiplicative;
        }
        let lat = ideal_lattice(&r, cfg, 1 << 16).unwrap();
        prop_assert!(lat.complete);
        prop_assert_eq!(lat.ideals, subset_scan(&r, cfg).unwrap());
    }

    #[test]
    fn disconnected_rings_are_not_local(seed in any::<u64>()) {
        let (x, y) = instance(seed, false);
        let r = FunctionRing::new(&x, &y, DEFAULT_BUDGET).unwrap();
        let lat = ideal_lattice(&r, IdealConfig::default_for(&y), 1 << 14).unwrap();
        prop_assume!(lat.complete);
        let cls = classify_primes(&r, &lat).unwrap();
        if x.quasi_components().len() >= 2 {
            prop_assert!(cls.maximal_ideals.len() >= 2);
        } else {
            prop_assert!(!cls.maximal_ideals.is_empty());
        }
    }

    #[test]
    fn no_unflagged_failures(seed in any::<u64>()) {
        let cfg = FuzzConfig { seed, ..FuzzConfig::default() };
        let all: Vec<&Checker> = registry().iter().collect();
        for i in 0..2 {
            for r in run_checkers(&all, &campaign_instance(&cfg, i), cfg.budget) {
                prop_assert!(
                    r.verdict != Verdict::Fail || r.discrepancy.is_some(),
                    "{} failed on {}: {}", r.checker_id, r.instance.label(),
                    r.witness.map(|w| w.to_string()).unwrap_or_default()
                );
            }
        }
    }
}

#[test]
fn sierpinski_is_connected_but_not_discrete() {
    let (space, _) = random_instance(&InstanceSpec::new(0, SpaceKind::SierpinskiSum(0), AlgebraKind::Zmod(2)));
    let Space::Explicit(x) = space else { unreachable!() };
    assert_eq!(x.quasi_components(), vec![x.full()]);
    let r = FunctionRing::new(&x, &make_zmod(2), DEFAULT_BUDGET).unwrap();
    // only constants are continuous into a discrete Y
    assert_eq!(r.len(), 2);
}
