//! Checks on the convergent sequence ℕ ∪ {∞} at a finite prefix budget.

use web_time::Instant;

use super::{Domain, InstanceDescriptor, Outcome, TheoremReport, Verdict, Witness, WitnessFn};
use crate::algebra::AlgebraTable;
use crate::funcspace::seq::{DiscreteSeqFn, DiscreteSeqRing, EventuallyConstant, SequenceRing};
use crate::topology::{Point, SeqSet, SequenceSpace};

pub const SEQUENCE_CHECK_IDS: &[&str] = &[
    "SEQ.EVENTUALLY_ZERO",
    "SEQ.NO_POINT_ZERO_SET",
    "SEQ.INF_MEET",
    "SEQ.PRIME_INF",
    "SEQ.TRANSPORT",
    "SEQ.CLUSTER",
];

type Check = Result<(), Outcome>;

fn seq_fn(name: &str, f: &EventuallyConstant) -> WitnessFn {
    let mut values = f.prefix().to_vec();
    values.push(f.tail());
    WitnessFn { name: format!("{name}={f}"), index: 0, values }
}

fn w(note: impl Into<String>) -> Witness {
    Witness::new(Domain::Seq, note)
}

fn fail_with(note: impl Into<String>, fns: &[(&str, &EventuallyConstant)]) -> Check {
    let mut wit = w(note);
    for (n, f) in fns {
        wit.functions.push(seq_fn(n, f));
    }
    Err(Outcome::Fail(wit))
}

/// f ∈ I(∞) ⇔ f is eventually zero.
fn eventually_zero(r: &SequenceRing, k: usize) -> Check {
    let ideal = r.vanishing(&SeqSet::infinity());
    let z = r.algebra().zero();
    for f in r.enumerate(k) {
        if r.contains(&ideal, &f) != (f.tail() == z) {
            return fail_with("I(∞) membership disagrees with eventual vanishing", &[("f", &f)]);
        }
    }
    Ok(())
}

/// V(f) is clopen, and {∞} is not open, so no V(f) equals {∞}.
fn no_point_zero_set(r: &SequenceRing, k: usize) -> Check {
    for f in r.enumerate(k) {
        let v = r.zero_set(&f);
        if v == SeqSet::infinity() {
            return fail_with("V(f) = {∞}", &[("f", &f)]);
        }
    }
    Ok(())
}

/// {∞} = ∩{V(f) : ∞ ∈ V(f)}: every n < k is cut off by some f.
fn inf_meet(r: &SequenceRing, k: usize) -> Check {
    let els = r.enumerate(k);
    let through_inf: Vec<&EventuallyConstant> = els.iter().filter(|f| r.zero_set(f).inf).collect();
    for n in 0..k as u64 {
        if through_inf.iter().all(|f| r.zero_set(f).contains(Point::Fin(n as usize))) {
            let mut wit = w("every zero set through ∞ contains n");
            wit.values.push(("n".into(), n as u8));
            return Err(Outcome::Fail(wit));
        }
    }
    match r.separator(k as u64) {
        Some(s) if r.zero_set(&s).inf && !r.zero_set(&s).contains(Point::Fin(k)) => Ok(()),
        Some(s) => fail_with("separator does not separate", &[("s", &s)]),
        None => Err(Outcome::Unmet("Y has no unit".into())),
    }
}

fn prime_inf(r: &SequenceRing, k: usize) -> Check {
    if !r.algebra().flags().zero_divisor_free {
        return Err(Outcome::Unmet("Y has zero divisors".into()));
    }
    let verdict = r.is_prime_bounded(&r.vanishing(&SeqSet::infinity()), k);
    match verdict.witness {
        None => Ok(()),
        Some((f, g)) => fail_with("f·g ∈ I(∞) with f, g ∉ I(∞)", &[("f", &f), ("g", &g)]),
    }
}

/// 𝔍: C(Z_c, Y) → C(Z_d, Y) is an injective multiplicative map missing χ_d,
/// and 𝔍(I_c(∞)) is a non-prime part of I_d(∞).
fn transport(r: &SequenceRing, k: usize) -> Check {
    let d = DiscreteSeqRing::new(r.algebra());
    let els = r.enumerate(k);
    let images: Vec<DiscreteSeqFn> = els.iter().map(|f| d.transport(f)).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != images.len() {
        return Err(Outcome::Fail(w("𝔍 is not injective")));
    }
    for (f, jf) in els.iter().zip(&images) {
        for (g, jg) in els.iter().zip(&images) {
            if d.transport(&r.mul(f, g)) != d.mul(jf, jg) {
                return fail_with("𝔍(f·g) ≠ 𝔍(f)·𝔍(g)", &[("f", f), ("g", g)]);
            }
        }
    }
    let Some(chi_d) = d.chi_d() else { return Err(Outcome::Unmet("Y has no unit".into())) };
    if d.in_image(&chi_d) {
        return Err(Outcome::Fail(w("χ_d lies in the image of 𝔍")));
    }
    let z = r.algebra().zero();
    let in_image_ideal = |h: &DiscreteSeqFn| d.in_image(h) && h.at_inf == z;
    for jf in &images {
        if in_image_ideal(jf) && !d.vanishes_at_inf(jf) {
            return Err(Outcome::Fail(w("𝔍(I_c(∞)) ⊄ I_d(∞)")));
        }
    }
    if in_image_ideal(&chi_d) || !d.vanishes_at_inf(&chi_d) {
        return Err(Outcome::Fail(w("χ_d should witness 𝔍(I_c(∞)) ≠ I_d(∞)")));
    }
    let all = d.enumerate(k);
    let outside: Vec<&DiscreteSeqFn> = all.iter().filter(|h| !in_image_ideal(h)).collect();
    let nonprime = outside.iter().any(|a| outside.iter().any(|b| in_image_ideal(&d.mul(a, b))));
    if !nonprime {
        return Err(Outcome::Fail(w("𝔍(I_c(∞)) is prime at this budget")));
    }
    Ok(())
}

/// ∞ is not open; each clopen U ∋ ∞ has a point z_U ≠ ∞, and ∞ is the only
/// cluster point of the z_U: each n is avoided by every U ⊆ ℕ∖{n} ∪ {∞}.
fn cluster(k: usize) -> Check {
    let space = SequenceSpace;
    let us: Vec<SeqSet> = space.clopens_up_to(k as u32).into_iter().filter(|u| u.inf).collect();
    if us.iter().any(|u| *u == SeqSet::infinity()) || SeqSet::infinity().is_open() {
        return Err(Outcome::Fail(w("{∞} is open")));
    }
    let pick = |u: &SeqSet| (0..=k as u64 + 1).find(|&n| u.nat.contains(n));
    for u in &us {
        let Some(zu) = pick(u) else { return Err(Outcome::Fail(w(format!("no z_U in U = {u}")))) };
        for n in 0..k as u64 {
            let avoid = SeqSet::cofinite_with_inf([n]);
            if u.is_subset(&avoid) && zu == n {
                let mut wit = w("z_U = n although U avoids n");
                wit.values.push(("n".into(), n as u8));
                return Err(Outcome::Fail(wit));
            }
        }
    }
    Ok(())
}

/// Pairwise scans over `Z_d` elements must fit the pair budget.
fn pairwise_guard(r: &SequenceRing, k: usize) -> Check {
    let m = r.algebra().size() as u64;
    let n = m.checked_pow(k as u32 + 2).unwrap_or(u64::MAX);
    if n.saturating_mul(n) > super::PAIR_BUDGET as u64 {
        return Err(Outcome::Budget(format!("{n} functions at prefix budget {k}")));
    }
    Ok(())
}

fn run(id: &str, r: &SequenceRing, k: usize) -> Check {
    if matches!(id, "SEQ.PRIME_INF" | "SEQ.TRANSPORT") {
        pairwise_guard(r, k)?;
    }
    match id {
        "SEQ.EVENTUALLY_ZERO" => eventually_zero(r, k),
        "SEQ.NO_POINT_ZERO_SET" => no_point_zero_set(r, k),
        "SEQ.INF_MEET" => inf_meet(r, k),
        "SEQ.PRIME_INF" => prime_inf(r, k),
        "SEQ.TRANSPORT" => transport(r, k),
        "SEQ.CLUSTER" => cluster(k),
        _ => unreachable!("listed in SEQUENCE_CHECK_IDS"),
    }
}

/// Every sequence-space check on C(ℕ ∪ {∞}, y) with prefixes of length ≤ k.
pub fn sequence_checks(y: &AlgebraTable, k: usize) -> Vec<TheoremReport> {
    let r = SequenceRing::new(y);
    SEQUENCE_CHECK_IDS
        .iter()
        .map(|&id| {
            let started = Instant::now();
            let (verdict, witness, detail) = match run(id, &r, k) {
                Ok(()) => (Verdict::Pass, None, Some(format!("bounded: prefixes of length ≤ {k}"))),
                Err(Outcome::Fail(w)) => (Verdict::Fail, Some(w), None),
                Err(Outcome::Unmet(s)) => (Verdict::HypothesisUnmet, None, Some(s)),
                Err(Outcome::Budget(s)) => (Verdict::BudgetExceeded, None, Some(s)),
                Err(Outcome::Skipped(s)) => (Verdict::SkippedInfinite, None, Some(s)),
            };
            TheoremReport {
                checker_id: id.to_string(),
                instance: InstanceDescriptor::Sequence { algebra: y.clone(), prefix_budget: k },
                verdict,
                witness,
                detail,
                discrepancy: None,
                elapsed_ms: started.elapsed().as_secs_f64() * 1000.0,
            }
        })
        .collect()
}
