//! Vanishing ideals, primality and zero divisors on C(Z, Y).

use super::{fail, require, Check, Checker, Ctx};
use crate::algebra::{Side, Val};
use crate::funcspace::{Elem, ElemSet};
use crate::ideals::{is_ideal, is_prime_set};
use crate::pointset::PointSet;

const L42_NOTE: &str = "literally false once |Z| ≥ 3: f = (0,1,0), g = (1,0,0) over a domain have g·f = Θ but both vanish at the third point; only the disjointness of the supports holds";
const L37_NOTE: &str = "literally false for Id: V(Id) = ∅ is clopen but Id is not a zero divisor; the proof needs V(f) ≠ ∅";

pub(super) fn checks() -> Vec<Checker> {
    vec![
        Checker::new("L29", "U1 clopen, U1ᶜ ∩ U2 ≠ ∅ ⇒ I(U1) ≠ I(U2)", l29),
        Checker::new("L30", "I(U) is an ideal; I(z) is prime when Y has no zero divisors", l30),
        Checker::new("T13", "|V(I)| ≥ 2 ⇒ I is not prime", t13),
        Checker::new("T14", "no zero divisors ⇒ (I(U) prime ⇔ U a singleton)", t14),
        Checker::new("L31", "no zero divisors, associative ⇒ no nontrivial nilpotents", l31),
        Checker::new("L32.1", "I proper, U ⊆ U1, χ_{U,a} ∈ I ⇒ χ_{U1,a} ∈ I", l32_1),
        Checker::new("L32.2", "I prime ⇒ χ_{U,a} ∈ I or χ_{Uᶜ,a} ∈ I", l32_2),
        Checker::new("L33", "f ∈ I ⇒ f·χ_{U,a}, f·χ_{Uᶜ,a} ∈ I", l33),
        Checker::new("T15", "1 ∈ Y ⇒ a nontrivial ideal has f ≠ Θ with ∅ ≠ V(f) ≠ Z clopen", t15),
        Checker::new("L34", "J ⊆ I(z), V(J) ≠ {z} ⇒ J not prime", l34),
        Checker::new("L35", "addition and unit, J ⊊ I(z) ≠ C ⇒ J not prime", l35),
        Checker::new("T16", "no zero divisors, addition and unit ⇒ I(z) is a minimal prime", t16),
        Checker::new("L36", "{z} open ⇒ I(z) = (χ_z), χ_z an idempotent zero divisor", l36),
        Checker::new("L37", "f ≠ Θ, V(f) clopen ⇒ f is a zero divisor", l37).flagged(L37_NOTE),
        Checker::new("L38", "V(f) ⊇ {z} ⇒ (f) ⊆ I(z)", l38),
        Checker::new("L39", "V(f) ⊇ U ⇒ (f) ⊆ (χ_U)", l39),
        Checker::new("L40", "V(f) = V((f))", l40),
        Checker::new("L41", "g·f = Θ, g ≠ Θ, no zero divisors ⇒ Vᶜ(f) ∩ Vᶜ(g) = ∅", l41),
        Checker::new("L42", "same hypotheses ⇒ Z = Vᶜ(f) ∪ Vᶜ(g)", l42).flagged(L42_NOTE),
        Checker::new("T17", "same hypotheses ⇒ Z = Vᶜ(f) ⊔ Vᶜ(g) = V(f) ⊔ V(g), all clopen", t17).flagged(L42_NOTE),
        Checker::new("T18", "I1 prime ⊆ I2 ≠ C ⇒ (χ_U ∈ I1 ⇔ χ_U ∈ I2)", t18),
    ]
}

fn nonzero(ctx: &Ctx) -> Vec<Val> {
    let zero = ctx.y().zero();
    ctx.y().elements().filter(|&v| v != zero).collect()
}

/// χ_{U,a} indexed by `[a-position][mask]` over the nonzero values.
fn chi_table(ctx: &Ctx) -> Vec<(Val, Vec<Elem>)> {
    nonzero(ctx)
        .into_iter()
        .map(|a| (a, ctx.clopens().into_iter().map(|u| ctx.z.chi_a(u, a).unwrap()).collect()))
        .collect()
}

fn has(s: &ElemSet, e: Elem) -> bool {
    s.contains(e as usize)
}

fn l29(ctx: &Ctx) -> Check {
    let k = ctx.k();
    for u1 in PointSet::all_subsets(k) {
        for u2 in PointSet::all_subsets(k).filter(|u| !u.is_empty()) {
            if u1.complement(k).is_disjoint(u2) {
                continue;
            }
            if ctx.iz(u1) == ctx.iz(u2) {
                return fail(ctx.w("I(U1) = I(U2)").set("U1", u1).set("U2", u2));
            }
        }
    }
    Ok(())
}

fn l30(ctx: &Ctx) -> Check {
    ctx.zero_ok()?;
    ctx.quad()?;
    for u in ctx.clopens() {
        if !is_ideal(&ctx.z, ctx.cfg, &ctx.iz(u)) {
            return fail(ctx.w("I(U) is not an ideal").set("U", u));
        }
    }
    if ctx.flags().zero_divisor_free {
        for p in 0..ctx.k() {
            let u = PointSet::singleton(p);
            let v = is_prime_set(&ctx.z, &ctx.iz(u)).expect("I(z) ≠ C");
            if let Some((f, g)) = v.witness {
                return fail(ctx.w("I(z) is not prime").set("z", u).f("f", &ctx.z, f).f("g", &ctx.z, g));
            }
        }
    }
    Ok(())
}

fn t13(ctx: &Ctx) -> Check {
    ctx.two_sided_zero()?;
    let l = ctx.lattice();
    let flags = ctx.prime_flags();
    for i in ctx.proper() {
        let v = ctx.z.zero_set_of(l.ideals[i].ones().map(|e| e as Elem));
        if v.len() >= 2 && flags[i] {
            return fail(ctx.w("prime ideal vanishing on two points").ideal("I", &l.ideals[i]).set("V(I)", v));
        }
    }
    Ok(())
}

fn t14(ctx: &Ctx) -> Check {
    ctx.domain()?;
    ctx.two_sided_zero()?;
    ctx.quad()?;
    for u in ctx.clopens().into_iter().filter(|u| !u.is_empty()) {
        let prime = is_prime_set(&ctx.z, &ctx.iz(u)).expect("I(U) ≠ C").prime;
        if prime != (u.len() == 1) {
            return fail(ctx.w(format!("I(U) prime = {prime} with |U| = {}", u.len())).set("U", u));
        }
    }
    Ok(())
}

fn l31(ctx: &Ctx) -> Check {
    ctx.domain()?;
    require(ctx.flags().associative, "· is not associative")?;
    let z = &ctx.z;
    for f in z.elements().filter(|&f| f != z.theta()) {
        let mut p = f;
        for _ in 0..=ctx.y().size() {
            if p == z.theta() {
                return fail(ctx.w("nontrivial nilpotent").f("f", z, f));
            }
            p = z.mul(p, f);
        }
    }
    Ok(())
}

fn l32_1(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    let table = chi_table(ctx);
    let l = ctx.lattice();
    for i in ctx.proper() {
        let s = &l.ideals[i];
        for (a, chis) in &table {
            for u1 in ctx.clopens() {
                for u in u1.subsets() {
                    if has(s, chis[u.bits() as usize]) && !has(s, chis[u1.bits() as usize]) {
                        return fail(ctx.w("χ_{U,a} ∈ I but χ_{U1,a} ∉ I").val("a", *a).set("U", u).set("U1", u1).ideal("I", s));
                    }
                }
            }
        }
    }
    Ok(())
}

fn l32_2(ctx: &Ctx) -> Check {
    ctx.two_sided_zero()?;
    let table = chi_table(ctx);
    let l = ctx.lattice();
    let full = ctx.clopens().len() - 1;
    for i in ctx.primes() {
        let s = &l.ideals[i];
        for (a, chis) in &table {
            for m in 0..=full {
                if !has(s, chis[m]) && !has(s, chis[full - m]) {
                    return fail(ctx.w("neither χ_{U,a} nor χ_{Uᶜ,a} in a prime").val("a", *a).set("U", PointSet::from_bits(m as u64)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn l33(ctx: &Ctx) -> Check {
    require(
        ctx.flags().commutative || ctx.cfg.side.covers(Side::Left),
        "right ideals of a noncommutative Y need not absorb f·χ",
    )?;
    let table = chi_table(ctx);
    let l = ctx.lattice();
    let z = &ctx.z;
    for s in &l.ideals {
        for f in s.ones().map(|e| e as Elem) {
            for (a, chis) in &table {
                for (m, &c) in chis.iter().enumerate() {
                    if !has(s, z.mul(f, c)) {
                        return fail(ctx.w("f·χ_{U,a} ∉ I").f("f", z, f).val("a", *a).set("U", PointSet::from_bits(m as u64)).ideal("I", s));
                    }
                }
            }
        }
    }
    Ok(())
}

fn t15(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.at_least_two()?;
    let z = &ctx.z;
    let full = ctx.zfull();
    let l = ctx.lattice();
    for s in &l.ideals {
        if s.count_ones(..) <= 1 {
            continue;
        }
        let found = s.ones().map(|e| e as Elem).any(|f| {
            let v = z.zero_set(f);
            f != z.theta() && !v.is_empty() && v != full
        });
        if !found {
            return fail(ctx.w("no f ≠ Θ with ∅ ≠ V(f) ≠ Z").ideal("I", s));
        }
    }
    Ok(())
}

fn l34(ctx: &Ctx) -> Check {
    ctx.two_sided_zero()?;
    let l = ctx.lattice();
    let flags = ctx.prime_flags();
    for i in ctx.proper() {
        let s = &l.ideals[i];
        let v = ctx.z.zero_set_of(s.ones().map(|e| e as Elem));
        for p in 0..ctx.k() {
            let pz = PointSet::singleton(p);
            if s.is_subset(&ctx.iz(pz)) && v != pz && flags[i] {
                return fail(ctx.w("J ⊆ I(z), V(J) ≠ {z}, J prime").set("z", pz).set("V(J)", v).ideal("J", s));
            }
        }
    }
    Ok(())
}

fn l35(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    require(ctx.y().has_add(), "Y has no addition")?;
    let l = ctx.lattice();
    let flags = ctx.prime_flags();
    for i in ctx.proper() {
        let s = &l.ideals[i];
        for p in 0..ctx.k() {
            let iz_cow = ctx.iz(PointSet::singleton(p));
            let iz = &*iz_cow;
            if s != iz && s.is_subset(iz) && flags[i] {
                return fail(ctx.w("prime J ⊊ I(z)").set("z", PointSet::singleton(p)).ideal("J", s));
            }
        }
    }
    Ok(())
}

fn t16(ctx: &Ctx) -> Check {
    ctx.domain()?;
    ctx.unit()?;
    ctx.two_sided_zero()?;
    require(ctx.y().has_add(), "Y has no addition")?;
    ctx.quad()?;
    let l = ctx.lattice();
    let primes = ctx.primes();
    for p in 0..ctx.k() {
        let pz = PointSet::singleton(p);
        let iz_cow = ctx.iz(pz);
        let iz = &*iz_cow;
        if let Some((f, g)) = is_prime_set(&ctx.z, iz).expect("proper").witness {
            return fail(ctx.w("I(z) is not prime").set("z", pz).f("f", &ctx.z, f).f("g", &ctx.z, g));
        }
        if let Some(&q) = primes.iter().find(|&&q| l.ideals[q] != *iz && l.ideals[q].is_subset(iz)) {
            return fail(ctx.w("a smaller prime inside I(z)").set("z", pz).ideal("J", &l.ideals[q]));
        }
    }
    Ok(())
}

fn l36(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    ctx.at_least_two()?;
    let z = &ctx.z;
    for p in 0..ctx.k() {
        let pz = PointSet::singleton(p);
        let c = ctx.chi(pz);
        let principal = crate::ideals::principal_ideal(z, ctx.cfg, c).expect("config validated").elems;
        if principal != *ctx.iz(pz) {
            return fail(ctx.w("I(z) ≠ (χ_z)").set("z", pz).ideal("(χ_z)", &principal));
        }
        if z.mul(c, c) != c {
            return fail(ctx.w("χ_z is not idempotent").f("χ_z", z, c));
        }
        if !z.is_zero_divisor(c) {
            return fail(ctx.w("χ_z is not a zero divisor").f("χ_z", z, c));
        }
    }
    Ok(())
}

fn l37(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    let z = &ctx.z;
    for f in z.elements().filter(|&f| f != z.theta()) {
        if !z.is_zero_divisor(f) {
            return fail(ctx.w("f ≠ Θ with clopen V(f) is not a zero divisor").f("f", z, f).set("V(f)", z.zero_set(f)));
        }
    }
    Ok(())
}

fn l38(ctx: &Ctx) -> Check {
    ctx.zero_ok()?;
    let pr = ctx.principals()?;
    let z = &ctx.z;
    for f in z.elements() {
        for p in z.zero_set(f).iter() {
            let pz = PointSet::singleton(p);
            if !pr[f as usize].is_subset(&ctx.iz(pz)) {
                return fail(ctx.w("(f) ⊄ I(z)").f("f", z, f).set("z", pz));
            }
        }
    }
    Ok(())
}

fn l39(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.zero_ok()?;
    let pr = ctx.principals()?;
    let z = &ctx.z;
    for f in z.elements() {
        for u in z.zero_set(f).subsets() {
            let c = ctx.chi(u);
            if !pr[f as usize].is_subset(&pr[c as usize]) {
                return fail(ctx.w("(f) ⊄ (χ_U)").f("f", z, f).set("U", u));
            }
        }
    }
    Ok(())
}

fn l40(ctx: &Ctx) -> Check {
    ctx.zero_ok()?;
    let pr = ctx.principals()?;
    let z = &ctx.z;
    for f in z.elements() {
        let v = z.zero_set_of(pr[f as usize].ones().map(|e| e as Elem));
        if v != z.zero_set(f) {
            return fail(ctx.w("V((f)) ≠ V(f)").f("f", z, f).set("V(f)", z.zero_set(f)).set("V((f))", v));
        }
    }
    Ok(())
}

/// Pairs `(f, g)` with `g·f = Θ`, `f, g ≠ Θ`.
fn annihilating_pairs(ctx: &Ctx) -> Vec<(Elem, Elem)> {
    let z = &ctx.z;
    let theta = z.theta();
    ctx.pairs()
        .into_iter()
        .filter(|&(f, g)| f != theta && g != theta && z.mul(g, f) == theta)
        .collect()
}

fn l41(ctx: &Ctx) -> Check {
    ctx.domain()?;
    let (z, k) = (&ctx.z, ctx.k());
    for (f, g) in annihilating_pairs(ctx) {
        let (cf, cg) = (z.zero_set(f).complement(k), z.zero_set(g).complement(k));
        if !cf.is_disjoint(cg) {
            return fail(ctx.w("supports of f and g meet").f("f", z, f).f("g", z, g));
        }
    }
    Ok(())
}

fn l42(ctx: &Ctx) -> Check {
    ctx.domain()?;
    let (z, k) = (&ctx.z, ctx.k());
    for (f, g) in annihilating_pairs(ctx) {
        let (cf, cg) = (z.zero_set(f).complement(k), z.zero_set(g).complement(k));
        if cf.union(cg) != ctx.zfull() {
            return fail(ctx.w("Vᶜ(f) ∪ Vᶜ(g) ≠ Z").f("f", z, f).f("g", z, g).set("Vᶜ(f)∪Vᶜ(g)", cf.union(cg)));
        }
    }
    Ok(())
}

fn t17(ctx: &Ctx) -> Check {
    ctx.domain()?;
    let (z, k) = (&ctx.z, ctx.k());
    let full = ctx.zfull();
    for (f, g) in annihilating_pairs(ctx) {
        let (vf, vg) = (z.zero_set(f), z.zero_set(g));
        let (cf, cg) = (vf.complement(k), vg.complement(k));
        let w = || ctx.w("disjoint clopen decomposition fails").f("f", z, f).f("g", z, g);
        if cf.union(cg) != full || !cf.is_disjoint(cg) {
            return fail(w().set("Vᶜ(f)∪Vᶜ(g)", cf.union(cg)));
        }
        if vf.union(vg) != full || !vf.is_disjoint(vg) {
            return fail(w().set("V(f)∪V(g)", vf.union(vg)));
        }
    }
    Ok(())
}

fn t18(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    ctx.need_ring_mode()?;
    let chis = ctx.chis()?;
    let l = ctx.lattice();
    let proper = ctx.proper();
    for i1 in ctx.primes() {
        for &i2 in &proper {
            let (a, b) = (&l.ideals[i1], &l.ideals[i2]);
            if !a.is_subset(b) {
                continue;
            }
            for (m, &c) in chis.iter().enumerate() {
                if has(a, c) != has(b, c) {
                    return fail(ctx.w("χ_U in exactly one of I1 ⊆ I2").set("U", PointSet::from_bits(m as u64)).ideal("I1", a).ideal("I2", b));
                }
            }
        }
    }
    Ok(())
}
