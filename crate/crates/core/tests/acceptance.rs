//! Acceptance criteria 1–10, one line each. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use quasiring::algebra::make_zmod;
use quasiring::funcspace::{Elem, ElemSet, FunctionRing, DEFAULT_BUDGET};
use quasiring::ideals::{classify_primes, ideal_lattice, is_prime_set, prime_radical, IdealConfig, DEFAULT_LATTICE_BUDGET};
use quasiring::pointset::PointSet;
use quasiring::topology::{Comparison, ExplicitSpace};
use quasiring::verify::{
    campaign_instance, fuzz_campaign, run_checker, select_checkers, sequence_checks, FuzzConfig, Instance, Pins, TheoremReport, Verdict,
};
use quasiring::zariski::compare_t1_tz_t;

type Outcome = Result<String, String>;

/// (number, body, time limit in ms)
type Criterion = (u32, fn() -> Outcome, u64);

fn ring(n: usize, m: usize) -> FunctionRing {
    FunctionRing::new(&ExplicitSpace::discrete(n), &make_zmod(m), DEFAULT_BUDGET).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- independent oracle over ℤ_m^n (discrete Z: every map is continuous) ----

type Tuple = Vec<u8>;

fn tuples(n: usize, m: usize) -> Vec<Tuple> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|t| (0..m as u8).map(move |v| [t.clone(), vec![v]].concat())).collect();
    }
    out
}

fn tmul(a: &Tuple, b: &Tuple, m: usize) -> Tuple {
    a.iter().zip(b).map(|(x, y)| ((*x as usize * *y as usize) % m) as u8).collect()
}

fn tadd(a: &Tuple, b: &Tuple, m: usize) -> Tuple {
    a.iter().zip(b).map(|(x, y)| ((*x as usize + *y as usize) % m) as u8).collect()
}

/// All ideals of ℤ_m^n by scanning every subset (≤ 16 elements).
fn oracle_ideals(n: usize, m: usize) -> Vec<BTreeSet<Tuple>> {
    let els = tuples(n, m);
    assert!(els.len() <= 16);
    let pos = |t: &Tuple| els.iter().position(|e| e == t).unwrap();
    let mut out = Vec::new();
    for mask in 0u32..1 << els.len() {
        let inside = |i: usize| mask >> i & 1 == 1;
        if !inside(pos(&vec![0; n])) {
            continue;
        }
        let ok = (0..els.len()).filter(|&i| inside(i)).all(|i| {
            (0..els.len()).all(|j| {
                inside(pos(&tmul(&els[i], &els[j], m))) && (!inside(j) || inside(pos(&tadd(&els[i], &els[j], m))))
            })
        });
        if ok {
            out.push((0..els.len()).filter(|&i| inside(i)).map(|i| els[i].clone()).collect());
        }
    }
    out
}

fn oracle_is_prime(ideal: &BTreeSet<Tuple>, n: usize, m: usize) -> bool {
    let els = tuples(n, m);
    if ideal.len() == els.len() {
        return false;
    }
    let out: Vec<&Tuple> = els.iter().filter(|e| !ideal.contains(*e)).collect();
    out.iter().all(|a| out.iter().all(|b| !ideal.contains(&tmul(a, b, m))))
}

fn as_tuples(r: &FunctionRing, s: &ElemSet) -> BTreeSet<Tuple> {
    s.ones().map(|e| r.raw(e as Elem)).collect()
}

fn vanishing_at(n: usize, m: usize, z: usize) -> BTreeSet<Tuple> {
    tuples(n, m).into_iter().filter(|t| t[z] == 0).collect()
}

// ---- criteria ----

fn c1() -> Outcome {
    let r = ring(2, 3);
    ensure(r.len() == 9, || format!("|C| = {}", r.len()))?;
    ensure(tuples(2, 3).iter().all(|t| r.from_raw(t).is_some()), || "a map is missing".into())?;
    Ok("|C(discrete 2, ℤ₃)| = 9".into())
}

fn c2() -> Outcome {
    let r = ring(2, 4);
    let i = r.vanishing(PointSet::singleton(0));
    let v = is_prime_set(&r, &i).map_err(|e| e.to_string())?;
    let again = is_prime_set(&r, &i).map_err(|e| e.to_string())?;
    ensure(!v.prime, || "I(z₁) reported prime".into())?;
    let (f, g) = v.witness.ok_or("no witness")?;
    ensure(again.witness == Some((f, g)), || "witness not reproducible".into())?;
    let (ft, gt) = (r.raw(f), r.raw(g));
    ensure(ft[0] != 0 && gt[0] != 0 && tmul(&ft, &gt, 4)[0] == 0, || format!("bad witness {ft:?}·{gt:?}"))?;
    Ok(format!("I(z₁) not prime in C(discrete 2, ℤ₄); witness {} · {}", r.show(f), r.show(g)))
}

fn c3() -> Outcome {
    let r = ring(3, 2);
    let i = r.vanishing(PointSet::from_bits(0b011));
    let v = is_prime_set(&r, &i).map_err(|e| e.to_string())?;
    let (f, g) = v.witness.ok_or("I({z₁,z₂}) reported prime")?;
    let (ft, gt) = (r.raw(f), r.raw(g));
    let p = tmul(&ft, &gt, 2);
    ensure(p[0] == 0 && p[1] == 0 && (ft[0] | ft[1]) != 0 && (gt[0] | gt[1]) != 0, || "bad witness".into())?;
    Ok(format!("I({{z₁,z₂}}) not prime in C(discrete 3, ℤ₂); witness {} · {}", r.show(f), r.show(g)))
}

fn c4() -> Outcome {
    let mut scanned = 0;
    for n in 1..=3 {
        for p in [2, 3] {
            let r = ring(n, p);
            let cfg = IdealConfig::default_for(r.algebra());
            let lat = ideal_lattice(&r, cfg, DEFAULT_LATTICE_BUDGET).map_err(|e| e.to_string())?;
            let cls = classify_primes(&r, &lat).map_err(|e| e.to_string())?;
            let tag = format!("({n}, ℤ{p})");
            ensure(cls.primes.len() == n, || format!("{tag}: {} primes", cls.primes.len()))?;
            let expected: BTreeSet<BTreeSet<Tuple>> = (0..n).map(|z| vanishing_at(n, p, z)).collect();
            let got: BTreeSet<BTreeSet<Tuple>> = cls.primes.iter().map(|&i| as_tuples(&r, &lat.ideals[i])).collect();
            ensure(got == expected, || format!("{tag}: primes are not the I(z)"))?;
            ensure(cls.primes.iter().all(|q| cls.min_max.contains(q)), || format!("{tag}: a prime is not min-max"))?;
            let rad = prime_radical(&r, &lat, &cls).map_err(|e| e.to_string())?;
            ensure(as_tuples(&r, &rad) == BTreeSet::from([vec![0; n]]), || format!("{tag}: radical ≠ {{Θ}}"))?;
            if r.len() <= 16 {
                let oracle: BTreeSet<BTreeSet<Tuple>> = oracle_ideals(n, p).into_iter().collect();
                let lib: BTreeSet<BTreeSet<Tuple>> = lat.ideals.iter().map(|s| as_tuples(&r, s)).collect();
                ensure(lib == oracle, || format!("{tag}: lattice differs from subset scan"))?;
                let oracle_primes: BTreeSet<_> = oracle.into_iter().filter(|i| oracle_is_prime(i, n, p)).collect();
                ensure(oracle_primes == expected, || format!("{tag}: oracle primes differ"))?;
                scanned += 1;
            }
        }
    }
    Ok(format!("n primes I(z), all min-max, radical {{Θ}} for n ≤ 3, ℤ₂/ℤ₃; {scanned} lattices match the subset scan"))
}

fn c5() -> Outcome {
    let (n, m) = (2, 4);
    let r = ring(n, m);
    let lat = ideal_lattice(&r, IdealConfig::default_for(r.algebra()), DEFAULT_LATTICE_BUDGET).map_err(|e| e.to_string())?;
    let cls = classify_primes(&r, &lat).map_err(|e| e.to_string())?;
    let oracle = oracle_ideals(n, m);
    let oracle_primes: BTreeSet<BTreeSet<Tuple>> = oracle.iter().filter(|i| oracle_is_prime(i, n, m)).cloned().collect();
    let expected: BTreeSet<BTreeSet<Tuple>> =
        (0..n).map(|z| tuples(n, m).into_iter().filter(|t| t[z] % 2 == 0).collect()).collect();
    ensure(oracle_primes == expected, || "oracle primes are not {f : f(zᵢ) ∈ {0,2}}".into())?;
    let got: BTreeSet<BTreeSet<Tuple>> = cls.primes.iter().map(|&i| as_tuples(&r, &lat.ideals[i])).collect();
    ensure(got == expected, || format!("library primes differ ({} found)", got.len()))?;
    let rad = as_tuples(&r, &prime_radical(&r, &lat, &cls).map_err(|e| e.to_string())?);
    let nilpotent: BTreeSet<Tuple> = tuples(n, m).into_iter().filter(|t| tmul(t, t, m).iter().all(|&v| v == 0)).collect();
    ensure(rad == nilpotent && rad.len() == 4, || format!("radical has {} elements", rad.len()))?;
    Ok("primes {f : f(zᵢ) ∈ {0,2}}, radical = 4 nilpotents (subset-scan oracle)".into())
}

fn c6() -> Outcome {
    let ids: Vec<String> =
        ["L8", "L9", "L10", "L11", "L12", "L13", "L14", "L16", "L17", "T5", "T6", "T7", "T8", "T9", "T10", "T11"]
            .map(String::from)
            .to_vec();
    let sel = select_checkers(&ids).map_err(|e| e.to_string())?;
    let cfg = FuzzConfig::default();
    ensure(cfg.instances == 200 && cfg.max_points == 4 && cfg.max_carrier == 4, || "fuzz defaults drifted".into())?;
    let summary = fuzz_campaign(&cfg, &sel);
    if let Some(f) = summary.reports.iter().find(|r| r.verdict == Verdict::Fail) {
        return Err(format!("{} FAIL on {}", f.checker_id, f.instance.label()));
    }
    let mut compared = 0;
    for i in 0..cfg.instances {
        let inst = campaign_instance(&cfg, i);
        if !inst.algebra.flags().zero_divisor_free {
            continue;
        }
        let r = FunctionRing::new(&inst.space, &inst.algebra, cfg.budget).map_err(|e| e.to_string())?;
        let c = compare_t1_tz_t(&r).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(c.t1_vs_tz.verdict == Comparison::Equal, || format!("instance {i}: 𝒯₁ vs 𝒯_Z {}", c.t1_vs_tz.verdict))?;
        compared += 1;
    }
    let pass = summary.counts.get(&Verdict::Pass).copied().unwrap_or(0);
    Ok(format!("{} reports over 200 instances, {pass} PASS, 0 FAIL; 𝒯₁ = 𝒯_Z on {compared} zero-divisor-free instances", summary.reports.len()))
}

fn c7() -> Outcome {
    let reports = sequence_checks(&make_zmod(2), 6);
    for id in ["SEQ.EVENTUALLY_ZERO", "SEQ.NO_POINT_ZERO_SET", "SEQ.INF_MEET", "SEQ.PRIME_INF", "SEQ.TRANSPORT"] {
        let r = reports.iter().find(|r| r.checker_id == id).ok_or(format!("{id} missing"))?;
        ensure(r.verdict == Verdict::Pass, || format!("{id} {}", r.verdict))?;
    }
    Ok("I(∞) ⇔ eventually zero; no V(f) = {∞}; ∩V = {∞}; I(∞) prime at k = 6; χ_d ∉ 𝔍(C)".into())
}

fn c8() -> Outcome {
    let mut problems = Vec::new();
    for (n, m) in [(3, 2), (2, 4)] {
        let inst = Instance::new(ExplicitSpace::discrete(n), make_zmod(m));
        let char_two = inst.algebra.flags().char_two;
        for k in 1..=19 {
            let r = run_checker(&format!("L59.{k}"), &inst).map_err(|e| e.to_string())?;
            let ok = r.verdict == Verdict::Pass || (!char_two && r.verdict == Verdict::HypothesisUnmet);
            if !ok {
                problems.push(format!("L59.{k} {} on {n}/ℤ{m}{}", r.verdict, documented(&r)));
            }
        }
        let t22 = run_checker("T22", &inst).map_err(|e| e.to_string())?;
        if t22.verdict != Verdict::Pass {
            problems.push(format!("T22 {} on {n}/ℤ{m}{}", t22.verdict, documented(&t22)));
        }
    }
    let inst = Instance::new(ExplicitSpace::discrete(3), make_zmod(2));
    let t21 = run_checker("T21", &inst).map_err(|e| e.to_string())?;
    if t21.verdict != Verdict::Pass {
        problems.push(format!("T21 {}", t21.verdict));
    }
    // over ℤ₂ every map is χ_U for U its zero set, so 𝒳 = C(Z, ℤ₂) with χ_U·χ_W = χ_{U∪W}
    let r = ring(3, 2);
    let chis: BTreeSet<Tuple> = PointSet::all_subsets(3).map(|u| r.raw(r.chi(u).unwrap())).collect();
    if chis.len() != r.len() {
        problems.push("𝒳 ≠ C(Z, ℤ₂)".into());
    }
    if problems.is_empty() {
        Ok("L59.1–19 on 3/ℤ₂ and 2/ℤ₄; 𝒳 ≅ C(Z, ℤ₂); 𝒳_I prime for every lattice ideal".into())
    } else {
        Err(problems.join("; "))
    }
}

fn documented(r: &TheoremReport) -> &'static str {
    if r.discrepancy.is_some() {
        " (documented discrepancy)"
    } else {
        ""
    }
}

fn c9() -> Outcome {
    let (n, m) = (3, 5);
    let inst = Instance::new(ExplicitSpace::discrete(n), make_zmod(m));
    let t39 = run_checker("T39", &inst).map_err(|e| e.to_string())?;
    ensure(t39.verdict == Verdict::Pass, || format!("T39 {}", t39.verdict))?;
    let r = ring(n, m);
    let lat = ideal_lattice(&r, IdealConfig::default_for(r.algebra()), DEFAULT_LATTICE_BUDGET).map_err(|e| e.to_string())?;
    let cls = classify_primes(&r, &lat).map_err(|e| e.to_string())?;
    let got: BTreeSet<BTreeSet<Tuple>> = cls.maximal_ideals.iter().map(|&i| as_tuples(&r, &lat.ideals[i])).collect();
    let expected: BTreeSet<BTreeSet<Tuple>> = (0..n).map(|z| vanishing_at(n, m, z)).collect();
    ensure(got == expected, || format!("{} maximal ideals, not the three I(zᵢ)", got.len()))?;
    Ok("C(discrete 3, ℤ₅) has exactly the maximal ideals I(z₁), I(z₂), I(z₃)".into())
}

fn c10() -> Outcome {
    let pins = Pins {
        j_vanishing: Some(PointSet::singleton(0)),
        u1: Some(PointSet::from_bits(0b011)),
        u: Some(PointSet::from_bits(0b110)),
    };
    let inst = Instance::new(ExplicitSpace::discrete(3), make_zmod(2)).with_pins(pins);
    let t26 = run_checker("T26", &inst).map_err(|e| e.to_string())?;
    ensure(t26.verdict == Verdict::Fail, || format!("T26 {}", t26.verdict))?;
    let w = t26.witness.as_ref().ok_or("T26 without witness")?;
    ensure(w.functions.first().map(|f| f.values.as_slice()) == Some(&[1, 0, 0][..]), || format!("witness {w}"))?;
    ensure(t26.discrepancy.is_some(), || "FAIL not linked to a discrepancy note".into())?;
    for id in ["T27", "T28"] {
        let r = run_checker(id, &inst).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Pass, || format!("{id} {}", r.verdict))?;
    }
    Ok("T26 FAIL with χ_{b,c} = (1,0,0) ∉ I(a), discrepancy noted; T27, T28 PASS".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, c1, 1_000),
        (2, c2, 1_000),
        (3, c3, 1_000),
        (4, c4, 60_000),
        (5, c5, 10_000),
        (6, c6, 120_000),
        (7, c7, 10_000),
        (8, c8, 30_000),
        (9, c9, 30_000),
        (10, c10, 5_000),
    ];
    let mut failed = 0;
    for (n, run, limit_ms) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let out = match out {
            Ok(d) if took > Duration::from_millis(limit_ms) => Err(format!("too slow ({d})")),
            o => o,
        };
        let (tag, detail) = match &out {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        failed += out.is_err() as usize;
        println!("criterion {n:>2}: {tag}  {:>9.1} ms / {limit_ms} ms  {detail}", took.as_secs_f64() * 1e3);
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
