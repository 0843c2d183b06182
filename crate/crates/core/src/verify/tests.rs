use super::*;
use crate::algebra::make_zmod;

fn inst(n: usize, m: usize) -> Instance {
    Instance::new(ExplicitSpace::discrete(n), make_zmod(m))
}

fn verdict(id: &str, i: &Instance) -> Verdict {
    run_checker(id, i).unwrap().verdict
}

#[test]
fn ids_are_unique_and_sorted() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let mut dedup = ids.clone();
    dedup.dedup();
    assert_eq!(ids, dedup);
    assert!(ids.windows(2).all(|w| id_key(w[0]) < id_key(w[1])));
}

#[test]
fn family_prefix_selection() {
    let sel = select_checkers(&["L59".into()]).unwrap();
    assert_eq!(sel.len(), 19);
    assert!(select_checkers(&["X99".into()]).is_err());
}

#[test]
fn t26_literal_counterexample() {
    let pins = Pins {
        j_vanishing: Some(PointSet::singleton(0)),
        u1: Some(PointSet::from_bits(0b011)),
        u: Some(PointSet::from_bits(0b110)),
    };
    let r = run_checker("T26", &inst(3, 2).with_pins(pins)).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.discrepancy.is_some());
    let w = r.witness.unwrap();
    assert_eq!(w.functions[0].values, vec![1, 0, 0]);
}

#[test]
fn zero_divisors_make_t14_unmet() {
    assert_eq!(verdict("T14", &inst(2, 4)), Verdict::HypothesisUnmet);
}

#[test]
fn t34_passes_on_z3() {
    assert_eq!(verdict("T34", &inst(2, 3)), Verdict::Pass);
}

#[test]
fn semi_local() {
    assert_eq!(verdict("T39", &inst(3, 5)), Verdict::Pass);
}

#[test]
fn t36_is_skipped() {
    assert_eq!(verdict("T36", &inst(2, 2)), Verdict::SkippedInfinite);
}

#[test]
fn sequence_suite_passes_over_z2() {
    for r in sequence_checks(&make_zmod(2), 6) {
        assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.checker_id, r.witness);
    }
}
