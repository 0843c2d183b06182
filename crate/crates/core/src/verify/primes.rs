//! Primes of the form I(z), min-max primes, the radical, and the ring-only
//! statements (principal subideals, coprimality, prime avoidance).

use super::families::unit_add;
use super::{fail, require, unmet, Check, Checker, Ctx, Outcome};
use crate::algebra::{Side, Val};
use crate::funcspace::{Elem, ElemSet};
use crate::ideals::join;
use crate::pointset::PointSet;

const T25_NOTE: &str = "the second clause needs I(z) prime and maximal among primes: over ℤ₄ I(z) is not prime, and for multiplicative ideals I(z₁) ∪ I(z₂) is a larger prime";
const T26_NOTE: &str = "finite counterexample to the printed statement (discrete 3 + ℤ₂, J = I({0}), U₁ = {0,1}, U = {1,2}: χ_U ∉ J); the intended hypothesis is an open question, possibly U ⊆ U₁";
const T30_NOTE: &str = "the proof uses that I(z) is prime; over ℤ₄ the primes {f : f(z) ∈ {0,2}} contain I(z) properly";
const T33_NOTE: &str = "fails when the I(z) are not prime (ℤ₄) or when multiplicative unions of I(z) are prime";
const T34_NOTE: &str = "the '{0} open' alternative is not enough: over ℤ₄ the prime radical is the nilpotent functions";

pub(super) fn checks() -> Vec<Checker> {
    vec![
        Checker::new("T24", "{z} clopen, J prime ⊆ I(z) ⇒ J = I(z); then I(z) is a minimal prime", t24),
        Checker::new("T25", "{0} clopen, J prime ⊆ I(z) ⇒ J = I(z); the I(z) are the min-max primes", t25).flagged(T25_NOTE),
        Checker::new("L63", "{z} clopen ⇒ I(z) = (χ_z) and χ_U ∈ I(z) for clopen U ∋ z", l63),
        Checker::new("L64", "(χ_U) ∉ {(Θ), C} ⇒ (χ_{Uᶜ}) ∉ {(Θ), C}; (χ_U) ∩ (χ_{Uᶜ}) = (Θ)", l64),
        Checker::new("T26", "J prime ∉ {(Θ), C}, χ_{U1} ∈ J, U ∩ U1 ≠ ∅ ⇒ χ_U ∈ J", t26).flagged(T26_NOTE),
        Checker::new("L65", "J prime, χ_{U1} ∈ J, z ∈ U ∩ U1 ⇒ χ_U ∈ J ∩ I(z)", l65).flagged(T26_NOTE),
        Checker::new("T27", "· associative, commutative, J prime ⇒ I(z) ⊆ J for some z", t27),
        Checker::new("T28", "J prime, V(J) ≠ ∅ ⇒ J = I(z) for a unique z, a minimal prime", t28),
        Checker::new("T29", "distinct proper primes are incomparable", t29),
        Checker::new("T30", "every proper prime is some I(z)", t30).flagged(T30_NOTE),
        Checker::new("T31", "C(Π,ℤ₂) → C(X,ℤ₂) → C(X,Y) → C(Π,Y) embeds multiplicatively", t31),
        Checker::new("L66", "no zero divisors ⇒ l: Y → ℤ₂ is a surjective multiplicative map", l66),
        Checker::new("T32", "no zero divisors ⇒ L: C(Z,Y) → C(Z,ℤ₂) is a surjective multiplicative map", t32),
        Checker::new("L67", "clopens of X ↔ C(X,ℤ₂) via U ↦ χ_U, χ ↦ χ⁻¹(0)", l67),
        Checker::new("T33", "· associative, commutative ⇒ proper primes are min-max and of the form I(z)", t33).flagged(T33_NOTE),
        Checker::new("T34", "the intersection of all primes is (Θ)", t34).flagged(T34_NOTE),
        Checker::new("L68", "Z discrete ⇒ C(Z,Y) ≅ Y^Z", l68),
        Checker::new("T35", "f ∈ I proper, f ≠ Θ ⇒ (f·χ_U), (f·(1 − χ_U)) ⊆ I", t35),
        Checker::new("T36", "a non-open z is the unique cluster point of the z_U", t36),
        Checker::new("L69", "I(U) = (χ_U), I(Uᶜ) = (1 − χ_U), and they are coprime", l69),
        Checker::new("L70", "no zero divisors ⇒ V((f)) = V(f)", l70),
        Checker::new("L71", "f ∈ I(z), V(f) ≠ {z} ⇒ (f) ⊊ I(z)", l71),
        Checker::new("L72", "I(∩{U clopen : z ∈ U}) = I(z)", l72),
        Checker::new("L73", "∩ I(A_α) = I(∪ A_α)", l73),
        Checker::new("L74", "integral domain: prime avoidance for the I(z)", l74),
        Checker::new("T37", "f ∈ I proper, f ≠ Θ ⇒ (f·χ_U), (f·χ_{Uᶜ}) ⊆ I", t37),
        Checker::new("L75", "f·χ_U, f·χ_{Uᶜ} ∈ I ⇒ f ∈ I", l75),
        Checker::new("T38", "I prime, f ∉ I ⇒ exactly one of (f·χ_U), (f·χ_{Uᶜ}) ⊆ I", t38),
        Checker::new("L76", "prime avoidance: I ⊄ I_i for all i ⇒ some a ∈ I misses every I_i", l76),
        Checker::new("T39", "Y a division ring ⇒ the maximal ideals are the I(z)", t39),
        Checker::new("SUM.DISCONNECTED", "∅ ≠ U ≠ Z ⇒ χ_U·χ_{Uᶜ} = Θ, χ_U + χ_{Uᶜ} = Id", sum_disconnected),
        Checker::new("SUM.NONLOCAL", "|Z| ≥ 2 ⇒ at least two maximal ideals", sum_nonlocal),
    ]
}

fn has(s: &ElemSet, e: Elem) -> bool {
    s.contains(e as usize)
}

fn pset(m: usize) -> PointSet {
    PointSet::from_bits(m as u64)
}

fn point(p: usize) -> PointSet {
    PointSet::singleton(p)
}

fn strict_subset(a: &ElemSet, b: &ElemSet) -> bool {
    a != b && a.is_subset(b)
}

/// Primes with no smaller prime.
fn minimal_primes(ctx: &Ctx) -> Vec<usize> {
    let primes = ctx.primes();
    primes
        .iter()
        .copied()
        .filter(|&p| !primes.iter().any(|&q| strict_subset(ctx.ideal(q), ctx.ideal(p))))
        .collect()
}

/// Primes with no larger proper prime.
fn maximal_primes(ctx: &Ctx) -> Vec<usize> {
    let primes = ctx.primes();
    primes
        .iter()
        .copied()
        .filter(|&p| !primes.iter().any(|&q| strict_subset(ctx.ideal(p), ctx.ideal(q))))
        .collect()
}

/// Proper ideals maximal among proper ideals.
fn maximal_ideals(ctx: &Ctx) -> Vec<usize> {
    let proper = ctx.proper();
    proper
        .iter()
        .copied()
        .filter(|&i| !proper.iter().any(|&j| strict_subset(ctx.ideal(i), ctx.ideal(j))))
        .collect()
}

fn comm_assoc(ctx: &Ctx) -> Check {
    let f = ctx.flags();
    require(f.associative && f.commutative, "· is not associative and commutative")
}

/// The standing ring assumption of the later statements.
fn ring(ctx: &Ctx) -> Check {
    require(ctx.flags().is_ring, "Y is not a ring")?;
    ctx.need_ring_mode()
}

fn t24(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    let primes = ctx.primes();
    let minimal = minimal_primes(ctx);
    for p in 0..ctx.k() {
        let iz = ctx.iz(point(p));
        let below: Vec<usize> = primes.iter().copied().filter(|&j| ctx.ideal(j).is_subset(&iz)).collect();
        for &j in &below {
            if *ctx.ideal(j) != *iz {
                return fail(ctx.w("prime J ⊊ I(z)").set("z", point(p)).ideal("J", ctx.ideal(j)));
            }
        }
        if let Some(&j) = below.first() {
            if !minimal.contains(&j) {
                return fail(ctx.w("I(z) is not a minimal prime").set("z", point(p)));
            }
        }
    }
    Ok(())
}

fn t25(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    let primes = ctx.primes();
    for p in 0..ctx.k() {
        let iz = ctx.iz(point(p));
        if let Some(&j) = primes.iter().find(|&&j| strict_subset(ctx.ideal(j), &iz)) {
            return fail(ctx.w("prime J ⊊ I(z)").set("z", point(p)).ideal("J", ctx.ideal(j)));
        }
    }
    let (minimal, maximal) = (minimal_primes(ctx), maximal_primes(ctx));
    for p in 0..ctx.k() {
        let iz = ctx.iz(point(p));
        let Some(i) = ctx.lattice().find(&iz) else {
            return Err(Outcome::Budget("I(z) outside the enumerated lattice".into()));
        };
        if !ctx.prime_flags()[i] {
            return fail(ctx.w("I(z) is not prime").set("z", point(p)).ideal("I(z)", &iz));
        }
        if !minimal.contains(&i) || !maximal.contains(&i) {
            let bigger = primes.iter().copied().find(|&q| strict_subset(&iz, ctx.ideal(q)));
            let mut w = ctx.w("I(z) is not min-max").set("z", point(p));
            if let Some(q) = bigger {
                w = w.ideal("larger prime", ctx.ideal(q));
            }
            return fail(w);
        }
    }
    Ok(())
}

fn l63(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.zero_ok()?;
    ctx.clopen_guard()?;
    let z = &ctx.z;
    for p in 0..ctx.k() {
        let iz = ctx.iz(point(p));
        let c = ctx.chi(point(p));
        let pr = crate::ideals::principal_ideal(z, ctx.cfg, c).expect("config validated").elems;
        if pr != *iz {
            return fail(ctx.w("I(z) ≠ (χ_z)").set("z", point(p)).ideal("(χ_z)", &pr));
        }
        for u in ctx.clopens().into_iter().filter(|u| u.contains(p)) {
            if !has(&iz, ctx.chi(u)) {
                return fail(ctx.w("χ_U ∉ I(z) with z ∈ U").set("z", point(p)).set("U", u));
            }
        }
    }
    Ok(())
}

fn principal(ctx: &Ctx, f: Elem) -> ElemSet {
    crate::ideals::principal_ideal(&ctx.z, ctx.cfg, f).expect("config validated").elems
}

fn l64(ctx: &Ctx) -> Check {
    ctx.two_sided_zero()?;
    let chis = ctx.chis()?;
    let z = &ctx.z;
    let theta = z.set_from([z.theta()]);
    let whole = z.full_set();
    let full = chis.len() - 1;
    let trivial = |s: &ElemSet| *s == theta || *s == whole;
    let meet_law = comm_assoc(ctx).is_ok();
    for m in 0..=full {
        let (a, b) = (principal(ctx, chis[m]), principal(ctx, chis[full - m]));
        if !trivial(&a) && trivial(&b) {
            return fail(ctx.w("(χ_{Uᶜ}) is trivial while (χ_U) is not").set("U", pset(m)));
        }
        if meet_law {
            let mut meet = a.clone();
            meet.intersect_with(&b);
            if meet != theta {
                return fail(ctx.w("(χ_U) ∩ (χ_{Uᶜ}) ≠ (Θ)").set("U", pset(m)).ideal("meet", &meet));
            }
        }
    }
    Ok(())
}

struct Scan {
    j: usize,
    u1: usize,
    u: usize,
}

/// Candidates (J, U1, U) for the T26 pattern, honouring pins.
fn t26_cases(ctx: &Ctx) -> Result<(Vec<Elem>, Vec<Scan>), Outcome> {
    comm_assoc(ctx)?;
    ctx.two_sided_zero()?;
    let chis = ctx.chis()?;
    let full = chis.len() - 1;
    let l = ctx.lattice();
    let pins = &ctx.inst.pins;
    let js: Vec<usize> = match pins.j_vanishing {
        Some(a) => {
            let s = ctx.z.vanishing(a);
            let Some(i) = l.find(&s) else { return unmet("pinned J is not an enumerated ideal") };
            if !ctx.prime_flags()[i] {
                return unmet(format!("pinned J = I({a}) is not prime"));
            }
            vec![i]
        }
        None => ctx.primes(),
    };
    let bottom = l.bottom();
    let mut out = Vec::new();
    for j in js.into_iter().filter(|&j| j != bottom) {
        let s = ctx.ideal(j);
        let u1s: Vec<usize> = match pins.u1 {
            Some(u1) => vec![u1.bits() as usize],
            None => (0..full).collect(),
        };
        for u1 in u1s {
            if u1 == full || !has(s, chis[u1]) {
                continue;
            }
            let us: Vec<usize> = match pins.u {
                Some(u) => vec![u.bits() as usize],
                None => (0..=full).collect(),
            };
            for u in us.into_iter().filter(|&u| u & u1 != 0) {
                out.push(Scan { j, u1, u });
            }
        }
    }
    Ok((chis, out))
}

fn t26(ctx: &Ctx) -> Check {
    let (chis, cases) = t26_cases(ctx)?;
    for c in cases {
        let s = ctx.ideal(c.j);
        if !has(s, chis[c.u]) {
            return fail(
                ctx.w("χ_U ∉ J although χ_{U1} ∈ J and U ∩ U1 ≠ ∅")
                    .ideal("J", s)
                    .set("U1", pset(c.u1))
                    .set("U", pset(c.u))
                    .f("χ_U", &ctx.z, chis[c.u]),
            );
        }
    }
    Ok(())
}

fn l65(ctx: &Ctx) -> Check {
    let (chis, cases) = t26_cases(ctx)?;
    for c in cases {
        let s = ctx.ideal(c.j);
        for p in pset(c.u & c.u1).iter() {
            if !has(s, chis[c.u]) || !has(&ctx.iz(point(p)), chis[c.u]) {
                return fail(
                    ctx.w("χ_U ∉ J ∩ I(z) for z ∈ U ∩ U1")
                        .ideal("J", s)
                        .set("U1", pset(c.u1))
                        .set("U", pset(c.u))
                        .set("z", point(p)),
                );
            }
        }
    }
    Ok(())
}

fn t27(ctx: &Ctx) -> Check {
    comm_assoc(ctx)?;
    ctx.two_sided_zero()?;
    for j in ctx.primes() {
        let s = ctx.ideal(j);
        if !(0..ctx.k()).any(|p| ctx.iz(point(p)).is_subset(s)) {
            return fail(ctx.w("prime J contains no I(z)").ideal("J", s));
        }
    }
    Ok(())
}

fn t28(ctx: &Ctx) -> Check {
    comm_assoc(ctx)?;
    ctx.two_sided_zero()?;
    let minimal = minimal_primes(ctx);
    for j in ctx.primes() {
        let s = ctx.ideal(j);
        if ctx.z.zero_set_of(s.ones().map(|e| e as Elem)).is_empty() {
            continue;
        }
        let hits: Vec<usize> = (0..ctx.k()).filter(|&p| *ctx.iz(point(p)) == *s).collect();
        if hits.len() != 1 {
            return fail(ctx.w(format!("J equals {} of the I(z)", hits.len())).ideal("J", s));
        }
        if !minimal.contains(&j) {
            return fail(ctx.w("J = I(z) is not a minimal prime").ideal("J", s));
        }
        if ctx.flags().has_unit {
            let pz = point(hits[0]);
            if principal(ctx, ctx.chi(pz)) != *s {
                return fail(ctx.w("I(z) is not (χ_z)").set("z", pz));
            }
        }
    }
    Ok(())
}

fn t29(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    ctx.unit()?;
    let primes = ctx.primes();
    for &a in &primes {
        for &b in &primes {
            if a != b && ctx.ideal(a).is_subset(ctx.ideal(b)) {
                return fail(ctx.w("nested distinct primes").ideal("I", ctx.ideal(a)).ideal("J", ctx.ideal(b)));
            }
        }
    }
    Ok(())
}

fn of_form_iz(ctx: &Ctx, s: &ElemSet) -> bool {
    (0..ctx.k()).any(|p| *ctx.iz(point(p)) == *s)
}

fn t30(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    ctx.unit()?;
    for j in ctx.primes() {
        if !of_form_iz(ctx, ctx.ideal(j)) {
            return fail(ctx.w("prime not of the form I(z)").ideal("J", ctx.ideal(j)));
        }
    }
    Ok(())
}

fn t31(ctx: &Ctx) -> Check {
    ctx.unit()?;
    ctx.two_sided_zero()?;
    let (x, z) = (&ctx.x, &ctx.z);
    let one = ctx.y().unit().expect("unit checked");
    let zero = ctx.y().zero();
    let shadow = z.boolean_shadow();
    let mut image = Vec::with_capacity(shadow.len());
    for c in shadow.elements() {
        // G: lift to X; 𝕁: 0 ↦ 0, 1 ↦ 1; H: back to classes.
        let on_x = x.transport_h(shadow.values(c));
        let in_y: Vec<Val> = on_x.iter().map(|&v| if v == 0 { zero } else { one }).collect();
        let Some(e) = x.from_raw(&in_y) else {
            return fail(ctx.wx("𝕁∘G(χ) is not continuous on X").f("χ", &shadow, c));
        };
        image.push(z.encode(&x.transport_g(&x.raw(e))));
    }
    let mut distinct = image.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != image.len() {
        return fail(ctx.w("the composite is not injective"));
    }
    for a in shadow.elements() {
        for b in shadow.elements() {
            let ab = image[shadow.mul(a, b) as usize];
            if ab != z.mul(image[a as usize], image[b as usize]) {
                return fail(ctx.w("the composite does not preserve ·").f("χ1", &shadow, a).f("χ2", &shadow, b));
            }
        }
    }
    Ok(())
}

fn l66(ctx: &Ctx) -> Check {
    ctx.domain()?;
    let y = ctx.y();
    let l = |v: Val| (v != y.zero()) as Val;
    let image: std::collections::BTreeSet<Val> = y.elements().map(l).collect();
    if image.len() != 2 {
        return fail(ctx.w("l is not onto ℤ₂").with_note("l is not onto ℤ₂"));
    }
    for a in y.elements() {
        for b in y.elements() {
            if l(y.mul(a, b)) != l(a) * l(b) {
                return fail(crate::verify::Witness::new(crate::verify::Domain::Y, "l(a·b) ≠ l(a)·l(b)").val("a", a).val("b", b));
            }
        }
    }
    Ok(())
}

fn t32(ctx: &Ctx) -> Check {
    ctx.domain()?;
    let z = &ctx.z;
    let shadow = z.boolean_shadow();
    let mut hit = shadow.empty_set();
    for f in z.elements() {
        hit.insert(z.project_l(&shadow, f) as usize);
    }
    if hit.count_ones(..) != shadow.len() {
        return fail(ctx.w("L is not surjective"));
    }
    for (f, g) in ctx.pairs() {
        let lhs = z.project_l(&shadow, z.mul(f, g));
        let rhs = shadow.mul(z.project_l(&shadow, f), z.project_l(&shadow, g));
        if lhs != rhs {
            return fail(ctx.w("L(f·g) ≠ L(f)·L(g)").f("f", z, f).f("g", z, g));
        }
    }
    Ok(())
}

fn l67(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let space = x.space();
    let n = space.point_count();
    require(n <= 16, "too many points to enumerate subsets")?;
    let shadow = x.boolean_shadow();
    let clopens: Vec<PointSet> = PointSet::all_subsets(n).filter(|&s| space.is_clopen(s)).collect();
    if clopens.len() != shadow.len() {
        return fail(ctx.wx(format!("{} clopens but |C(X,ℤ₂)| = {}", clopens.len(), shadow.len())));
    }
    for &u in &clopens {
        let c = shadow.chi(u).expect("ℤ₂ has a unit and U is clopen");
        if shadow.zero_set(c) != u {
            return fail(ctx.wx("χ_U⁻¹(0) ≠ U").set("U", u));
        }
    }
    for c in shadow.elements() {
        let u = shadow.zero_set(c);
        if !space.is_clopen(u) || shadow.chi(u).ok() != Some(c) {
            return fail(ctx.wx("χ ≠ χ_{χ⁻¹(0)}").f("χ", &shadow, c));
        }
    }
    Ok(())
}

fn t33(ctx: &Ctx) -> Check {
    comm_assoc(ctx)?;
    ctx.unit()?;
    ctx.two_sided_zero()?;
    let (minimal, maximal) = (minimal_primes(ctx), maximal_primes(ctx));
    for j in ctx.primes() {
        let s = ctx.ideal(j);
        if !of_form_iz(ctx, s) {
            return fail(ctx.w("prime not of the form I(z)").ideal("J", s));
        }
        if !minimal.contains(&j) || !maximal.contains(&j) {
            return fail(ctx.w("prime is not min-max").ideal("J", s));
        }
    }
    Ok(())
}

fn t34(ctx: &Ctx) -> Check {
    let z = &ctx.z;
    let mut acc = z.full_set();
    for j in ctx.primes() {
        acc.intersect_with(ctx.ideal(j));
    }
    if acc != z.set_from([z.theta()]) {
        return fail(ctx.w("prime radical ≠ (Θ)").ideal("radical", &acc));
    }
    Ok(())
}

fn l68(ctx: &Ctx) -> Check {
    let (z, y) = (&ctx.z, ctx.y());
    let expected = (y.size() as u64).checked_pow(ctx.k() as u32);
    if expected != Some(z.len() as u64) {
        return fail(ctx.w(format!("|C(Z,Y)| = {} ≠ |Y|^|Z|", z.len())));
    }
    for (f, g) in ctx.pairs() {
        let (a, b) = (z.values(f), z.values(g));
        let prod: Vec<Val> = a.iter().zip(b).map(|(&p, &q)| y.mul(p, q)).collect();
        if z.values(z.mul(f, g)) != prod.as_slice() {
            return fail(ctx.w("· is not coordinatewise").f("f", z, f).f("g", z, g));
        }
        if y.has_add() {
            let sum: Vec<Val> = a.iter().zip(b).map(|(&p, &q)| y.add(p, q).unwrap()).collect();
            if z.values(z.add(f, g).unwrap()) != sum.as_slice() {
                return fail(ctx.w("+ is not coordinatewise").f("f", z, f).f("g", z, g));
            }
        }
    }
    Ok(())
}

/// `Id − g` pointwise.
fn one_minus(ctx: &Ctx, g: Elem) -> Elem {
    let (z, y) = (&ctx.z, ctx.y());
    let one = y.unit().expect("unit checked");
    let vals: Vec<Val> = z.values(g).iter().map(|&v| y.add(one, y.neg(v).expect("ring")).unwrap()).collect();
    z.encode(&vals)
}

fn principal_subideals(ctx: &Ctx, complement: impl Fn(Elem, usize) -> Elem) -> Check {
    ring(ctx)?;
    require(
        ctx.flags().commutative || ctx.cfg.side.covers(Side::Left),
        "right ideals of a noncommutative Y need not absorb f·χ",
    )?;
    let chis = ctx.chis()?;
    let pr = ctx.principals()?;
    let z = &ctx.z;
    for i in ctx.proper() {
        let s = ctx.ideal(i);
        for f in s.ones().map(|e| e as Elem).filter(|&f| f != z.theta()) {
            for (m, &c) in chis.iter().enumerate() {
                let a = z.mul(f, c);
                let b = z.mul(f, complement(c, m));
                if !pr[a as usize].is_subset(s) || !pr[b as usize].is_subset(s) {
                    return fail(ctx.w("a principal ideal (f·χ) escapes I").f("f", z, f).set("U", pset(m)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn t35(ctx: &Ctx) -> Check {
    ring(ctx)?;
    ctx.unit()?;
    principal_subideals(ctx, |c, _| one_minus(ctx, c))
}

fn t36(_ctx: &Ctx) -> Check {
    Err(Outcome::Skipped(
        "every point of a finite Z is open; the statement concerns non-open points (see the sequence backend)".into(),
    ))
}

fn l69(ctx: &Ctx) -> Check {
    ring(ctx)?;
    ctx.zero_ok()?;
    let chis = ctx.chis()?;
    let full = chis.len() - 1;
    let z = &ctx.z;
    for m in 0..=full {
        let (iu, iuc) = (ctx.iz(pset(m)), ctx.iz(pset(full - m)));
        if principal(ctx, chis[m]) != *iu {
            return fail(ctx.w("I(U) ≠ (χ_U)").set("U", pset(m)));
        }
        let one_minus_chi = one_minus(ctx, chis[m]);
        if one_minus_chi != chis[full - m] || principal(ctx, one_minus_chi) != *iuc {
            return fail(ctx.w("I(Uᶜ) ≠ (1 − χ_U)").set("U", pset(m)));
        }
        if join(z, ctx.cfg, &iu, &iuc) != z.full_set() {
            return fail(ctx.w("I(U) + I(Uᶜ) ≠ C").set("U", pset(m)));
        }
    }
    Ok(())
}

fn l70(ctx: &Ctx) -> Check {
    ctx.domain()?;
    ctx.zero_ok()?;
    let pr = ctx.principals()?;
    let z = &ctx.z;
    for f in z.elements() {
        if z.zero_set_of(pr[f as usize].ones().map(|e| e as Elem)) != z.zero_set(f) {
            return fail(ctx.w("V((f)) ≠ V(f)").f("f", z, f));
        }
    }
    Ok(())
}

fn l71(ctx: &Ctx) -> Check {
    ctx.zero_ok()?;
    let pr = ctx.principals()?;
    let z = &ctx.z;
    for p in 0..ctx.k() {
        let iz = ctx.iz(point(p));
        for f in iz.ones().map(|e| e as Elem) {
            if z.zero_set(f) == point(p) {
                continue;
            }
            let pf = &pr[f as usize];
            if !pf.is_subset(&iz) || *pf == *iz {
                return fail(ctx.w("(f) is not a proper part of I(z)").f("f", z, f).set("z", point(p)));
            }
        }
    }
    Ok(())
}

fn l72(ctx: &Ctx) -> Check {
    let (x, z) = (&ctx.x, &ctx.z);
    for p in 0..ctx.k() {
        let meet = ctx.clopens().into_iter().filter(|u| u.contains(p)).fold(ctx.zfull(), |a, u| a.intersection(u));
        if *ctx.iz(meet) != *ctx.iz(point(p)) {
            return fail(ctx.w("I(∩U) ≠ I(z)").set("z", point(p)).set("∩U", meet));
        }
    }
    let space = x.space();
    for p in 0..space.point_count() {
        let meet = space
            .clopens()
            .into_iter()
            .filter(|u| u.contains(p))
            .fold(space.full(), |a, u| a.intersection(u));
        if x.vanishing(meet) != x.vanishing(point(p)) {
            return fail(ctx.wx("I(∩U) ≠ I(x)").val("x", p as Val).set("∩U", meet));
        }
    }
    let _ = z;
    Ok(())
}

fn l73(ctx: &Ctx) -> Check {
    ctx.clopen_guard()?;
    let k = ctx.k();
    let n = 1usize << k;
    require(n * n <= super::PAIR_BUDGET, "too many subset pairs")?;
    for a in 0..n {
        for b in 0..n {
            let mut meet = ctx.iz(pset(a)).into_owned();
            meet.intersect_with(&ctx.iz(pset(b)));
            if meet != *ctx.iz(pset(a | b)) {
                return fail(ctx.w("I(A) ∩ I(B) ≠ I(A ∪ B)").set("A", pset(a)).set("B", pset(b)));
            }
        }
    }
    let mut acc = ctx.z.full_set();
    for p in 0..k {
        acc.intersect_with(&ctx.iz(point(p)));
    }
    if acc != ctx.z.set_from([ctx.z.theta()]) {
        return fail(ctx.w("∩ I(z) ≠ (Θ)"));
    }
    Ok(())
}

fn l74(ctx: &Ctx) -> Check {
    ring(ctx)?;
    require(ctx.flags().commutative && ctx.flags().zero_divisor_free, "Y is not an integral domain")?;
    ctx.clopen_guard()?;
    let k = ctx.k();
    let flags = ctx.prime_flags();
    for m in 1..(1usize << k) {
        let pts: Vec<usize> = pset(m).iter().collect();
        let mut cover = ctx.z.empty_set();
        for &p in &pts {
            cover.union_with(&ctx.iz(point(p)));
        }
        let meet = ctx.iz(pset(m));
        for i in 0..ctx.lattice().len() {
            let s = ctx.ideal(i);
            if s.is_subset(&cover) && !pts.iter().any(|&p| s.is_subset(&ctx.iz(point(p)))) {
                return fail(ctx.w("I ⊆ ∪ I(z_i) but in no single I(z_i)").set("points", pset(m)).ideal("I", s));
            }
            if flags[i] && meet.is_subset(s) {
                if !pts.iter().any(|&p| ctx.iz(point(p)).is_subset(s)) {
                    return fail(ctx.w("∩ I(z_i) ⊆ p prime but no I(z_i) ⊆ p").set("points", pset(m)).ideal("p", s));
                }
                if *s == *meet && !pts.iter().any(|&p| *ctx.iz(point(p)) == *s) {
                    return fail(ctx.w("p = ∩ I(z_i) is no single I(z_i)").set("points", pset(m)));
                }
            }
        }
    }
    Ok(())
}

fn t37(ctx: &Ctx) -> Check {
    ctx.unit()?;
    let full = (1usize << ctx.k()) - 1;
    let chis = ctx.chis()?;
    principal_subideals(ctx, |_, m| chis[full - m])
}

fn l75(ctx: &Ctx) -> Check {
    ring(ctx)?;
    let chis = ctx.chis()?;
    let full = chis.len() - 1;
    let z = &ctx.z;
    for i in 0..ctx.lattice().len() {
        let s = ctx.ideal(i);
        for f in z.elements().filter(|&f| !has(s, f)) {
            for m in 0..=full {
                if has(s, z.mul(f, chis[m])) && has(s, z.mul(f, chis[full - m])) {
                    return fail(ctx.w("f·χ_U, f·χ_{Uᶜ} ∈ I but f ∉ I").f("f", z, f).set("U", pset(m)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn t38(ctx: &Ctx) -> Check {
    ring(ctx)?;
    require(
        ctx.flags().commutative || ctx.cfg.side.covers(Side::Right),
        "left ideals of a noncommutative Y need not absorb f·χ",
    )?;
    let chis = ctx.chis()?;
    let pr = ctx.principals()?;
    let full = chis.len() - 1;
    let z = &ctx.z;
    for j in ctx.primes() {
        let s = ctx.ideal(j);
        for f in z.elements().filter(|&f| !has(s, f)) {
            for m in 0..=full {
                let a = pr[z.mul(f, chis[m]) as usize].is_subset(s);
                let b = pr[z.mul(f, chis[full - m]) as usize].is_subset(s);
                if a == b {
                    return fail(
                        ctx.w(format!("{} of (f·χ_U), (f·χ_{{Uᶜ}}) lie in I", if a { "both" } else { "neither" }))
                            .f("f", z, f)
                            .set("U", pset(m))
                            .ideal("I", s),
                    );
                }
            }
        }
    }
    Ok(())
}

fn l76(ctx: &Ctx) -> Check {
    ring(ctx)?;
    require(ctx.flags().commutative, "Y is not commutative")?;
    let primes = ctx.primes();
    require(primes.len() <= 12, "too many primes for subset enumeration")?;
    for mask in 1u32..(1 << primes.len()) {
        let chosen: Vec<usize> = (0..primes.len()).filter(|&b| mask >> b & 1 == 1).map(|b| primes[b]).collect();
        for i in 0..ctx.lattice().len() {
            let s = ctx.ideal(i);
            if chosen.iter().any(|&p| s.is_subset(ctx.ideal(p))) {
                continue;
            }
            let found = s.ones().any(|a| chosen.iter().all(|&p| !ctx.ideal(p).contains(a)));
            if !found {
                let mut w = ctx.w("every a ∈ I lies in some I_i").ideal("I", s);
                for &p in &chosen {
                    w = w.ideal("I_i", ctx.ideal(p));
                }
                return fail(w);
            }
        }
    }
    Ok(())
}

fn t39(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    require(ctx.flags().is_division_ring, "Y is not a division ring")?;
    let mut got: Vec<ElemSet> = maximal_ideals(ctx).into_iter().map(|i| ctx.ideal(i).clone()).collect();
    let mut want: Vec<ElemSet> = (0..ctx.k()).map(|p| ctx.iz(point(p)).into_owned()).collect();
    let key = |s: &ElemSet| s.ones().collect::<Vec<_>>();
    got.sort_by_key(key);
    want.sort_by_key(key);
    want.dedup();
    if got != want {
        let mut w = ctx.w(format!("{} maximal ideals, {} ideals I(z)", got.len(), want.len()));
        if let Some(extra) = got.iter().find(|s| !want.contains(s)) {
            w = w.ideal("maximal, not I(z)", extra);
        }
        return fail(w);
    }
    Ok(())
}

fn sum_disconnected(ctx: &Ctx) -> Check {
    unit_add(ctx)?;
    let chis = ctx.chis()?;
    let full = chis.len() - 1;
    let z = &ctx.z;
    let id = z.id().expect("unit checked");
    for m in 1..full {
        let (a, b) = (chis[m], chis[full - m]);
        if z.mul(a, b) != z.theta() || z.add(a, b) != Some(id) {
            return fail(ctx.w("χ_U, χ_{Uᶜ} are not complementary idempotents").set("U", pset(m)));
        }
    }
    Ok(())
}

fn sum_nonlocal(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    ctx.unit()?;
    ctx.at_least_two()?;
    let n = maximal_ideals(ctx).len();
    if n < 2 {
        return fail(ctx.w(format!("{n} maximal ideal(s)")));
    }
    Ok(())
}
