//! Pointwise structure, the transport to quasi-components, zero sets and the
//! three topologies. Statements about `X` itself are checked on the input
//! space; on `Z` most of them would be vacuous.

use rand::seq::IndexedRandom;
use rand::Rng;

use super::{fail, require, unmet, Check, Checker, Ctx, Outcome};
use crate::algebra::{Side, Val};
use crate::funcspace::{is_continuous, transport_roundtrip, Elem, ElemSet, FunctionRing};
use crate::ideals::{generate_ideal, IdealConfig, Mode};
use crate::pointset::PointSet;
use crate::topology::ExplicitSpace;
use crate::zariski::{compare_t1_tz_t, zariski_closed_family, ZariskiTopology};
use crate::topology::Comparison;

pub(super) fn checks() -> Vec<Checker> {
    vec![
        Checker::new("T1", "C(X,Y) inherits the pointwise operations and the laws of Y", t1),
        Checker::new("L1", "products of functions constant on a class are constant on it", l1),
        Checker::new("L2", "G into Fcn(Π,Y) is an injective magma map, onto when classes are open", l2),
        Checker::new("L4", "H(f̂) and G(f) are continuous", l4),
        Checker::new("L5", "G and H are mutually inverse bijections", l5),
        Checker::new("T3", "G and H are inverse isomorphisms of C(X,Y) and C(Π,Y)", t3),
        Checker::new("L6", "∅ ≠ J ⊆ A ⇒ [x] ⊆ [x]_A ⊆ [x]_J", l6),
        Checker::new("L7", "J ⊆ A ⇒ V(F,b) ⊆ V(A,b) ⊆ V(J,b)", l7),
        Checker::new("L8", "I(U,b)_J ⊆ J", l8),
        Checker::new("L9", "U ⊆ V(I(U,b)_J, b)", l9),
        Checker::new("L10", "J ⊆ A ⇒ I(U,b)_J ⊆ I(U,b)_A ⊆ I(U,b)_F", l10),
        Checker::new("L11", "J ⊆ I(V(J,b), b)", l11),
        Checker::new("L12", "U1 ⊆ U2 ⇒ I(X,b)_J ⊆ I(U2,b)_J ⊆ I(U1,b)_J", l12),
        Checker::new("T4", "if f(x) = b for all f ∈ J then V(J,b) = [x]_J", t4),
        Checker::new("T5", "[x] equals the quasi-component of x", t5),
        Checker::new("L13", "distinct quasi-components are separated by a clopen set", l13),
        Checker::new("L14", "c_f is continuous on Π", l14),
        Checker::new("L15", "U clopen ⇒ U = p⁻¹p(U)", l15),
        Checker::new("T6", "each point of Π is a quasi-component; Π is totally separated", t6),
        Checker::new("L16", "B1 ⊆ B2 ⇒ f⁻¹(B1) ⊆ f⁻¹(B2)", l16),
        Checker::new("L17", "f⁻¹(b) ≠ ∅ and {b} = ∩B ⇒ f⁻¹(b) = ∩ f⁻¹(B)", l17),
        Checker::new("L18", "zero sets are closed", l18),
        Checker::new("L19", "V(f) ∪ V(g) ⊆ V(f·g)", l19),
        Checker::new("L20", "a zero set is an intersection of clopen sets", l20),
        Checker::new("T7", "each point is the intersection of the zero sets containing it", t7),
        Checker::new("L21", "S ⊆ J ⇒ V(J) ⊆ V(S), with equality when S generates J", l21),
        Checker::new("L22", "no zero divisors ⇒ V(f) ∪ V(g) = V(f·g)", l22),
        Checker::new("T8", "no zero divisors ⇒ the sets V(S) are the closed sets of a topology", t8),
        Checker::new("L23", "𝒯_Z ⊆ 𝒯", l23),
        Checker::new("L24", "𝒯₁ ⊆ 𝒯_Z", l24),
        Checker::new("L25", "𝒯_Z ⊆ 𝒯₁", l25),
        Checker::new("T9", "𝒯₁ = 𝒯_Z ⊆ 𝒯", t9),
        Checker::new("L26", "U is 𝒯-clopen iff 𝒯₁-clopen", l26),
        Checker::new("T10", "𝒯, 𝒯₁ and 𝒯_Z have the same quasi-components", t10),
        Checker::new("L27", "C((X,𝒯),Y) = C((X,𝒯₁),Y)", l27),
        Checker::new("L28", "C((X,𝒯₁),Y) = C((X,𝒯_Z),Y)", l28),
        Checker::new("T11", "the three function rings coincide as algebras", t11),
        Checker::new("T12", "|Z| ≥ 2 ⇒ zero divisors in C(Z,Y); nilpotents of Y lift", t12),
    ]
}

fn all(r: &FunctionRing) -> Vec<Elem> {
    r.elements().collect()
}

/// Random nested pairs `J ⊆ A` of nonempty element lists, plus `(F, F)`.
fn nested_samples(ctx: &Ctx) -> Vec<(Vec<Elem>, Vec<Elem>)> {
    let n = ctx.x.len();
    let mut rng = ctx.rng();
    let mut out = vec![(all(&ctx.x), all(&ctx.x))];
    for _ in 0..24 {
        let jlen = rng.random_range(1..=n.min(4));
        let extra = rng.random_range(0..=n.min(6));
        let mut j: Vec<Elem> = (0..jlen).map(|_| rng.random_range(0..n) as Elem).collect();
        let mut a = j.clone();
        a.extend((0..extra).map(|_| rng.random_range(0..n) as Elem));
        j.sort();
        j.dedup();
        a.sort();
        a.dedup();
        out.push((j, a));
    }
    out
}

fn nonempty_subsets(n: usize) -> impl Iterator<Item = PointSet> {
    PointSet::all_subsets(n).filter(|u| !u.is_empty())
}

fn sample_elems(ctx: &Ctx, cap: usize) -> Vec<Elem> {
    let n = ctx.x.len();
    if n <= cap {
        return all(&ctx.x);
    }
    ctx.mark_partial();
    let v = all(&ctx.x);
    let mut rng = ctx.rng();
    v.choose_multiple(&mut rng, cap).copied().collect()
}

fn t1(ctx: &Ctx) -> Check {
    let (x, y, fl) = (&ctx.x, ctx.y(), ctx.flags());
    for (f, g) in ctx.pairs() {
        let (rf, rg) = (x.raw(f), x.raw(g));
        let pw: Vec<Val> = rf.iter().zip(&rg).map(|(&a, &b)| y.mul(a, b)).collect();
        match x.from_raw(&pw) {
            Some(h) if h == x.mul(f, g) => {}
            _ => return fail(ctx.wx("pointwise product is not the ring product").f("f", x, f).f("g", x, g)),
        }
        if fl.commutative && x.mul(f, g) != x.mul(g, f) {
            return fail(ctx.wx("commutativity not inherited").f("f", x, f).f("g", x, g));
        }
        if fl.has_add {
            let ps: Vec<Val> = rf.iter().zip(&rg).map(|(&a, &b)| y.add(a, b).unwrap()).collect();
            if x.from_raw(&ps) != x.add(f, g) {
                return fail(ctx.wx("pointwise sum is not the ring sum").f("f", x, f).f("g", x, g));
            }
            if fl.additive_commutative && x.add(f, g) != x.add(g, f) {
                return fail(ctx.wx("additive commutativity not inherited").f("f", x, f).f("g", x, g));
            }
        }
    }
    if let Some(id) = x.id() {
        if let Some(f) = x.elements().find(|&f| x.mul(id, f) != f || x.mul(f, id) != f) {
            return fail(ctx.wx("Id is not a unit").f("f", x, f));
        }
    }
    let theta = x.theta();
    for f in x.elements() {
        let left = x.mul(theta, f) == theta;
        let right = x.mul(f, theta) == theta;
        let ok = match y.zero_side() {
            Side::Left => left,
            Side::Right => right,
            Side::TwoSided => left && right,
        };
        if !ok {
            return fail(ctx.wx("Θ is not absorbing on the side 0 is").f("f", x, f));
        }
    }
    for (f, g, h) in ctx.triples() {
        if fl.associative && x.mul(x.mul(f, g), h) != x.mul(f, x.mul(g, h)) {
            return fail(ctx.wx("associativity not inherited").f("f", x, f).f("g", x, g).f("h", x, h));
        }
        if fl.has_add {
            let add = |a, b| x.add(a, b).unwrap();
            if fl.additive_associative && add(add(f, g), h) != add(f, add(g, h)) {
                return fail(ctx.wx("additive associativity not inherited").f("f", x, f).f("g", x, g).f("h", x, h));
            }
            if fl.distributive
                && (x.mul(f, add(g, h)) != add(x.mul(f, g), x.mul(f, h))
                    || x.mul(add(g, h), f) != add(x.mul(g, f), x.mul(h, f)))
            {
                return fail(ctx.wx("distributivity not inherited").f("f", x, f).f("g", x, g).f("h", x, h));
            }
        }
    }
    Ok(())
}

fn constant_on_classes(r: &FunctionRing, raw: &[Val]) -> Option<PointSet> {
    r.classes().iter().copied().find(|c| {
        let v = raw[c.first().unwrap()];
        c.iter().any(|p| raw[p] != v)
    })
}

fn l1(ctx: &Ctx) -> Check {
    let (x, y) = (&ctx.x, ctx.y());
    for (f, g) in ctx.pairs() {
        let (rf, rg) = (x.raw(f), x.raw(g));
        let pw: Vec<Val> = rf.iter().zip(&rg).map(|(&a, &b)| y.mul(a, b)).collect();
        if let Some(c) = constant_on_classes(x, &pw) {
            return fail(ctx.wx("product not constant on a class").f("f", x, f).f("g", x, g).set("class", c));
        }
        if y.has_add() {
            let ps: Vec<Val> = rf.iter().zip(&rg).map(|(&a, &b)| y.add(a, b).unwrap()).collect();
            if let Some(c) = constant_on_classes(x, &ps) {
                return fail(ctx.wx("sum not constant on a class").f("f", x, f).f("g", x, g).set("class", c));
            }
        }
    }
    for f in x.elements() {
        let raw = x.raw(f);
        if raw.iter().all(|&v| y.neg(v).is_some()) {
            let neg: Vec<Val> = raw.iter().map(|&v| y.neg(v).unwrap()).collect();
            if let Some(c) = constant_on_classes(x, &neg) {
                return fail(ctx.wx("negation not constant on a class").f("f", x, f).set("class", c));
            }
        }
    }
    Ok(())
}

/// G(f) as a value vector on classes, computed from the raw map.
fn g_of(x: &FunctionRing, f: Elem) -> Vec<Val> {
    x.transport_g(&x.raw(f))
}

fn l2(ctx: &Ctx) -> Check {
    let (x, y) = (&ctx.x, ctx.y());
    let mut seen = std::collections::HashMap::new();
    for f in x.elements() {
        if let Some(&g) = seen.get(&g_of(x, f)) {
            return fail(ctx.wx("G is not injective").f("f", x, f).f("g", x, g));
        }
        seen.insert(g_of(x, f), f);
    }
    for (f, g) in ctx.pairs() {
        let lhs = g_of(x, x.mul(f, g));
        let rhs: Vec<Val> = g_of(x, f).iter().zip(g_of(x, g)).map(|(&a, b)| y.mul(a, b)).collect();
        if lhs != rhs {
            return fail(ctx.wx("G does not preserve ·").f("f", x, f).f("g", x, g));
        }
    }
    let all_open = x.classes().iter().all(|&c| x.space().is_open(c));
    let total = (y.size() as u128).pow(x.class_count() as u32);
    if all_open && seen.len() as u128 != total {
        return fail(ctx.wx(format!("classes open but G hits {} of {total} maps", seen.len())));
    }
    Ok(())
}

fn l4(ctx: &Ctx) -> Check {
    let (x, z, y) = (&ctx.x, &ctx.z, ctx.y());
    for phi in z.elements() {
        let h = x.transport_h(z.values(phi));
        if !is_continuous(x.space(), y, &h) {
            return fail(ctx.w("H(f̂) is not continuous").f("f̂", z, phi));
        }
    }
    let q = x.space().quotient();
    for f in x.elements() {
        if !is_continuous(&q.space, y, &g_of(x, f)) {
            return fail(ctx.wx("G(f) is not continuous").f("f", x, f));
        }
    }
    Ok(())
}

fn l5(ctx: &Ctx) -> Check {
    let (x, z) = (&ctx.x, &ctx.z);
    if !transport_roundtrip(x) {
        return fail(ctx.wx("G∘H or H∘G is not the identity"));
    }
    for f in x.elements() {
        let back = x.from_raw(&x.transport_h(&g_of(x, f)));
        if back != Some(f) {
            return fail(ctx.wx("H(G(f)) ≠ f").f("f", x, f));
        }
    }
    for phi in z.elements() {
        let h = x.transport_h(z.values(phi));
        if x.transport_g(&h) != z.values(phi) {
            return fail(ctx.w("G(H(f̂)) ≠ f̂").f("f̂", z, phi));
        }
    }
    Ok(())
}

fn t3(ctx: &Ctx) -> Check {
    let (x, z) = (&ctx.x, &ctx.z);
    let g = |f: Elem| z.encode(&g_of(x, f));
    let h = |phi: Elem| x.from_raw(&x.transport_h(z.values(phi)));
    for (a, b) in ctx.pairs() {
        if g(x.mul(a, b)) != z.mul(g(a), g(b)) {
            return fail(ctx.wx("G does not preserve ·").f("f", x, a).f("g", x, b));
        }
        if h(z.mul(a, b)) != Some(x.mul(h(a).unwrap(), h(b).unwrap())) {
            return fail(ctx.w("H does not preserve ·").f("f̂", z, a).f("ĝ", z, b));
        }
        if ctx.y().has_add() {
            if Some(g(x.add(a, b).unwrap())) != z.add(g(a), g(b)) {
                return fail(ctx.wx("G does not preserve +").f("f", x, a).f("g", x, b));
            }
            if h(z.add(a, b).unwrap()) != x.add(h(a).unwrap(), h(b).unwrap()) {
                return fail(ctx.w("H does not preserve +").f("f̂", z, a).f("ĝ", z, b));
            }
        }
    }
    for f in x.elements() {
        if h(g(f)) != Some(f) {
            return fail(ctx.wx("H∘G ≠ id").f("f", x, f));
        }
    }
    Ok(())
}

fn l6(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let everything = all(x);
    for (j, a) in nested_samples(ctx) {
        for p in 0..x.space().point_count() {
            let c = x.equiv_class(&everything, p);
            let ca = x.equiv_class(&a, p);
            let cj = x.equiv_class(&j, p);
            if !c.is_subset(ca) || !ca.is_subset(cj) {
                return fail(
                    ctx.wx(format!("chain fails at x = {p}"))
                        .set("[x]", c)
                        .set("[x]_A", ca)
                        .set("[x]_J", cj)
                        .ideal("J", &x.set_from(j.iter().copied()))
                        .ideal("A", &x.set_from(a.iter().copied())),
                );
            }
        }
    }
    Ok(())
}

fn l7(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let everything = all(x);
    for (j, a) in nested_samples(ctx) {
        for b in ctx.y().elements() {
            let vf = x.zero_set_of_b(everything.iter().copied(), b);
            let va = x.zero_set_of_b(a.iter().copied(), b);
            let vj = x.zero_set_of_b(j.iter().copied(), b);
            if !vf.is_subset(va) || !va.is_subset(vj) {
                return fail(
                    ctx.wx("V(F,b) ⊆ V(A,b) ⊆ V(J,b) fails")
                        .val("b", b)
                        .set("V(F,b)", vf)
                        .set("V(A,b)", va)
                        .set("V(J,b)", vj)
                        .ideal("J", &x.set_from(j.iter().copied())),
                );
            }
        }
    }
    Ok(())
}

/// `(J, U, b, I(U,b)_J)` over the samples, every nonempty U and every b.
fn for_each_iub(ctx: &Ctx, mut body: impl FnMut(&ElemSet, PointSet, Val, &ElemSet) -> Check) -> Check {
    let x = &ctx.x;
    let n = x.space().point_count();
    for (j, _) in nested_samples(ctx) {
        let js = x.set_from(j.iter().copied());
        for u in nonempty_subsets(n) {
            for b in ctx.y().elements() {
                let iub = x.vanishing_b(u, b, Some(&js));
                body(&js, u, b, &iub)?;
            }
        }
    }
    Ok(())
}

fn l8(ctx: &Ctx) -> Check {
    for_each_iub(ctx, |j, u, b, iub| {
        if iub.is_subset(j) {
            Ok(())
        } else {
            fail(ctx.wx("I(U,b)_J ⊄ J").set("U", u).val("b", b).ideal("J", j))
        }
    })
}

fn l9(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    for_each_iub(ctx, |j, u, b, iub| {
        let v = x.zero_set_of_b(iub.ones().map(|i| i as Elem), b);
        if u.is_subset(v) {
            Ok(())
        } else {
            fail(ctx.wx("U ⊄ V(I(U,b)_J, b)").set("U", u).set("V", v).val("b", b).ideal("J", j))
        }
    })
}

fn l10(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let n = x.space().point_count();
    for (j, a) in nested_samples(ctx) {
        let (js, as_) = (x.set_from(j.iter().copied()), x.set_from(a.iter().copied()));
        for u in nonempty_subsets(n) {
            for b in ctx.y().elements() {
                let ij = x.vanishing_b(u, b, Some(&js));
                let ia = x.vanishing_b(u, b, Some(&as_));
                let iff = x.vanishing_b(u, b, None);
                if !ij.is_subset(&ia) || !ia.is_subset(&iff) {
                    return fail(ctx.wx("I(U,b)_J ⊆ I(U,b)_A ⊆ I(U,b)_F fails").set("U", u).val("b", b).ideal("J", &js).ideal("A", &as_));
                }
            }
        }
    }
    Ok(())
}

fn l11(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    for (j, _) in nested_samples(ctx) {
        let js = x.set_from(j.iter().copied());
        for b in ctx.y().elements() {
            let v = x.zero_set_of_b(j.iter().copied(), b);
            let back = x.vanishing_b(v, b, None);
            if !js.is_subset(&back) {
                return fail(ctx.wx("J ⊄ I(V(J,b), b)").set("V(J,b)", v).val("b", b).ideal("J", &js));
            }
        }
    }
    Ok(())
}

fn l12(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let n = x.space().point_count();
    let full = PointSet::full(n);
    for (j, _) in nested_samples(ctx) {
        let js = x.set_from(j.iter().copied());
        for u2 in nonempty_subsets(n) {
            for u1 in u2.subsets().filter(|s| !s.is_empty()) {
                for b in ctx.y().elements() {
                    let ix = x.vanishing_b(full, b, Some(&js));
                    let i2 = x.vanishing_b(u2, b, Some(&js));
                    let i1 = x.vanishing_b(u1, b, Some(&js));
                    if !ix.is_subset(&i2) || !i2.is_subset(&i1) {
                        return fail(ctx.wx("I(X,b)_J ⊆ I(U2,b)_J ⊆ I(U1,b)_J fails").set("U1", u1).set("U2", u2).val("b", b).ideal("J", &js));
                    }
                }
            }
        }
    }
    Ok(())
}

fn t4(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    for (j, _) in nested_samples(ctx) {
        for p in 0..x.space().point_count() {
            for b in ctx.y().elements() {
                let jb: Vec<Elem> = j.iter().copied().filter(|&f| x.value_at(f, p) == b).collect();
                if jb.is_empty() {
                    continue;
                }
                let v = x.zero_set_of_b(jb.iter().copied(), b);
                let c = x.equiv_class(&jb, p);
                if v != c {
                    return fail(ctx.wx(format!("V(J,b) ≠ [x]_J at x = {p}")).val("b", b).set("V(J,b)", v).set("[x]_J", c).ideal("J", &x.set_from(jb)));
                }
            }
        }
    }
    Ok(())
}

fn t5(ctx: &Ctx) -> Check {
    require(ctx.y().size() >= 2, "Y has a single element")?;
    let x = &ctx.x;
    let everything = all(x);
    for p in 0..x.space().point_count() {
        let c = x.equiv_class(&everything, p);
        let q = x.space().quasi_component(p);
        if c != q {
            return fail(ctx.wx(format!("[x] ≠ Q_x at x = {p}")).set("[x]", c).set("Q_x", q));
        }
    }
    Ok(())
}

fn l13(ctx: &Ctx) -> Check {
    let sp = ctx.inst.space.clone();
    let comps = sp.quasi_components();
    let clopens = sp.clopens();
    for (i, &a) in comps.iter().enumerate() {
        for &b in &comps[i + 1..] {
            if !clopens.iter().any(|&u| a.is_subset(u) && u.is_disjoint(b)) {
                return fail(ctx.wx("no separating clopen").set("Q1", a).set("Q2", b));
            }
        }
    }
    Ok(())
}

fn l14(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let q = x.space().quotient();
    for f in x.elements() {
        if !is_continuous(&q.space, ctx.y(), &g_of(x, f)) {
            return fail(ctx.wx("c_f is not continuous").f("f", x, f));
        }
    }
    Ok(())
}

fn l15(ctx: &Ctx) -> Check {
    let sp = &ctx.inst.space;
    let q = sp.quotient();
    for u in sp.clopens() {
        let back = q.preimage(q.image(u));
        if back != u {
            return fail(ctx.wx("p⁻¹p(U) ≠ U").set("U", u).set("p⁻¹p(U)", back));
        }
    }
    Ok(())
}

fn t6(ctx: &Ctx) -> Check {
    let q = ctx.inst.space.quotient().space;
    for p in 0..q.point_count() {
        let c = q.quasi_component(p);
        if c != PointSet::singleton(p) {
            return fail(Witness::new(super::Domain::Z, "a point of Π is not its own quasi-component").set("Q", c));
        }
    }
    if !q.is_totally_separated() {
        return fail(ctx.w("Π is not totally separated"));
    }
    Ok(())
}

use super::Witness;

fn preimage(raw: &[Val], b: u64) -> PointSet {
    raw.iter().enumerate().filter(|(_, &v)| b >> v & 1 == 1).map(|(i, _)| i).collect()
}

fn l16(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let m = ctx.y().size();
    if m > 12 {
        return Err(Outcome::Budget("Y too large for a subset scan".into()));
    }
    for f in sample_elems(ctx, 256) {
        let raw = x.raw(f);
        for b2 in 0u64..1 << m {
            let p2 = preimage(&raw, b2);
            let mut b1 = b2;
            loop {
                if !preimage(&raw, b1).is_subset(p2) {
                    return fail(ctx.wx("preimage not monotone").f("f", x, f).val("B1", b1 as Val).val("B2", b2 as Val));
                }
                if b1 == 0 {
                    break;
                }
                b1 = (b1 - 1) & b2;
            }
        }
    }
    Ok(())
}

fn l17(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let m = ctx.y().size();
    let mut rng = ctx.rng();
    for f in sample_elems(ctx, 256) {
        let raw = x.raw(f);
        for b in ctx.y().elements() {
            let fb = preimage(&raw, 1 << b);
            if fb.is_empty() {
                continue;
            }
            // Families of sets containing b whose intersection is {b}: the
            // complements of single other points, and random supersets.
            let mut fam: Vec<u64> = (0..m as u64).filter(|&v| v != b as u64).map(|v| ((1u64 << m) - 1) & !(1 << v)).collect();
            for _ in 0..4 {
                fam.push((rng.random::<u64>() & ((1u64 << m) - 1)) | 1 << b);
            }
            let inter = fam.iter().fold((1u64 << m) - 1, |acc, s| acc & s);
            if inter != 1 << b {
                fam.push(1 << b);
            }
            let cut = fam.iter().fold(PointSet::full(raw.len()), |acc, &s| acc.intersection(preimage(&raw, s)));
            if cut != fb {
                return fail(ctx.wx("f⁻¹(b) ≠ ∩ f⁻¹(B)").f("f", x, f).val("b", b).set("f⁻¹(b)", fb).set("∩", cut));
            }
        }
    }
    Ok(())
}

fn l18(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    for f in x.elements() {
        let v = x.zero_set(f);
        if !x.space().is_closed(v) {
            return fail(ctx.wx("V(f) is not closed").f("f", x, f).set("V(f)", v));
        }
    }
    Ok(())
}

fn l19(ctx: &Ctx) -> Check {
    ctx.two_sided_zero()?;
    let x = &ctx.x;
    for (f, g) in ctx.pairs() {
        let lhs = x.zero_set(f).union(x.zero_set(g));
        let rhs = x.zero_set(x.mul(f, g));
        if !lhs.is_subset(rhs) {
            return fail(ctx.wx("V(f) ∪ V(g) ⊄ V(fg)").f("f", x, f).f("g", x, g));
        }
    }
    Ok(())
}

fn l20(ctx: &Ctx) -> Check {
    let x = &ctx.x;
    let sp = x.space();
    let clopens = sp.clopens();
    for f in x.elements() {
        let v = x.zero_set(f);
        let hull = clopens.iter().filter(|u| v.is_subset(**u)).fold(sp.full(), |a, u| a.intersection(*u));
        if hull != v {
            return fail(ctx.wx("V(f) is not an intersection of clopens").f("f", x, f).set("V(f)", v).set("hull", hull));
        }
    }
    Ok(())
}

fn t7(ctx: &Ctx) -> Check {
    require(ctx.y().size() >= 2, "Y has a single element")?;
    for (r, on_z) in [(&ctx.z, true), (&ctx.x, false)] {
        let n = r.space().point_count();
        let zs: Vec<PointSet> = r.elements().map(|f| r.zero_set(f)).collect();
        for p in 0..n {
            let cut = zs.iter().filter(|v| v.contains(p)).fold(PointSet::full(n), |a, v| a.intersection(*v));
            // On X the intersection can only shrink to the quasi-component.
            let expect = if on_z { PointSet::singleton(p) } else { r.space().quasi_component(p) };
            if cut != expect {
                let w = if on_z { ctx.w("point is not cut out by zero sets") } else { ctx.wx("class is not cut out by zero sets") };
                return fail(w.set("point", PointSet::singleton(p)).set("∩ V", cut));
            }
        }
    }
    Ok(())
}

fn l21(ctx: &Ctx) -> Check {
    let z = &ctx.z;
    let y = ctx.y();
    let generated = y.has_add() && ctx.flags().additive_associative && y.zero_side().covers(Side::Right);
    let cfg = IdealConfig::new(Side::Right, Mode::Ring);
    let mut rng = ctx.rng();
    for (s, j) in nested_samples(ctx).into_iter().take(12) {
        let vs = z.zero_set_of(s.iter().copied());
        let vj = z.zero_set_of(j.iter().copied());
        if !vj.is_subset(vs) {
            return fail(ctx.w("S ⊆ J but V(J) ⊄ V(S)").ideal("S", &z.set_from(s)).ideal("J", &z.set_from(j)));
        }
        if generated && rng.random_bool(0.5) {
            let ideal = generate_ideal(z, cfg, &s).expect("addition present");
            let vg = z.zero_set_of(ideal.elems.ones().map(|i| i as Elem));
            if vg != vs {
                return fail(ctx.w("V(S) ≠ V(J) for the ideal J generated by S").ideal("S", &z.set_from(s)).set("V(S)", vs).set("V(J)", vg));
            }
        }
    }
    Ok(())
}

fn l22(ctx: &Ctx) -> Check {
    ctx.domain()?;
    ctx.two_sided_zero()?;
    let x = &ctx.x;
    for (f, g) in ctx.pairs() {
        let lhs = x.zero_set(f).union(x.zero_set(g));
        let rhs = x.zero_set(x.mul(f, g));
        if lhs != rhs {
            return fail(ctx.wx("V(f) ∪ V(g) ≠ V(fg)").f("f", x, f).f("g", x, g).set("V(f)∪V(g)", lhs).set("V(fg)", rhs));
        }
    }
    Ok(())
}

fn tz(ctx: &Ctx) -> Result<ZariskiTopology, Outcome> {
    ctx.domain()?;
    ctx.two_sided_zero()?;
    let t = zariski_closed_family(&ctx.x).map_err(|e| Outcome::Unmet(e.to_string()))?;
    if t.closed.is_none() {
        return Err(Outcome::Budget("closed family too large to materialize".into()));
    }
    Ok(t)
}

fn tz_space(ctx: &Ctx) -> Result<ExplicitSpace, Outcome> {
    let t = tz(ctx)?;
    match t.as_space() {
        Some(s) => Ok(s),
        None => fail(ctx.wx("the V(S) family is not the closed sets of a topology")),
    }
}

fn t8(ctx: &Ctx) -> Check {
    let t = tz(ctx)?;
    let closed = t.closed.as_ref().unwrap();
    let n = t.point_count;
    if !closed.contains(&PointSet::EMPTY) {
        return fail(ctx.wx("∅ is not of the form V(S)"));
    }
    if !closed.contains(&PointSet::full(n)) {
        return fail(ctx.wx("X is not of the form V(S)"));
    }
    for a in closed {
        for b in closed {
            if !closed.contains(&a.union(*b)) {
                return fail(ctx.wx("V(S) family not closed under union").set("A", *a).set("B", *b));
            }
        }
    }
    Ok(())
}

fn comparison(ctx: &Ctx) -> Result<crate::zariski::TripleComparison, Outcome> {
    tz(ctx)?;
    compare_t1_tz_t(&ctx.x).map_err(|e| Outcome::Budget(e.to_string()))
}

fn coarser_eq(c: Comparison) -> bool {
    matches!(c, Comparison::Equal | Comparison::FirstStrictlyCoarser)
}

fn finer_eq(c: Comparison) -> bool {
    matches!(c, Comparison::Equal | Comparison::FirstStrictlyFiner)
}

fn l23(ctx: &Ctx) -> Check {
    let c = comparison(ctx)?;
    if coarser_eq(c.tz_vs_t.verdict) {
        Ok(())
    } else {
        fail(ctx.wx(format!("𝒯_Z vs 𝒯: {:?}", c.tz_vs_t.verdict)))
    }
}

fn l24(ctx: &Ctx) -> Check {
    let c = comparison(ctx)?;
    if coarser_eq(c.t1_vs_tz.verdict) {
        Ok(())
    } else {
        fail(ctx.wx(format!("𝒯₁ vs 𝒯_Z: {:?}", c.t1_vs_tz.verdict)))
    }
}

fn l25(ctx: &Ctx) -> Check {
    let c = comparison(ctx)?;
    if finer_eq(c.t1_vs_tz.verdict) {
        Ok(())
    } else {
        fail(ctx.wx(format!("𝒯₁ vs 𝒯_Z: {:?}", c.t1_vs_tz.verdict)))
    }
}

fn t9(ctx: &Ctx) -> Check {
    let c = comparison(ctx)?;
    if c.t1_vs_tz.verdict == Comparison::Equal && coarser_eq(c.tz_vs_t.verdict) {
        Ok(())
    } else {
        fail(ctx.wx(format!("𝒯₁ vs 𝒯_Z: {:?}; 𝒯_Z vs 𝒯: {:?}", c.t1_vs_tz.verdict, c.tz_vs_t.verdict)))
    }
}

fn l26(ctx: &Ctx) -> Check {
    let sp = &ctx.inst.space;
    let t1 = sp.clopen_base();
    for u in PointSet::all_subsets(sp.point_count()) {
        if sp.is_clopen(u) != t1.is_clopen(u) {
            return fail(ctx.wx("clopen in one topology only").set("U", u));
        }
    }
    Ok(())
}

fn same_components(ctx: &Ctx, a: &ExplicitSpace, b: &ExplicitSpace, what: &str) -> Check {
    let (ca, cb) = (a.quasi_components(), b.quasi_components());
    if ca != cb {
        let mut w = ctx.wx(format!("quasi-components differ ({what})"));
        for p in 0..a.point_count() {
            if a.quasi_component(p) != b.quasi_component(p) {
                w = w.set("Q_𝒯", a.quasi_component(p)).set("Q_other", b.quasi_component(p));
                break;
            }
        }
        return fail(w);
    }
    Ok(())
}

fn t10(ctx: &Ctx) -> Check {
    let sp = &ctx.inst.space;
    same_components(ctx, sp, &sp.clopen_base(), "𝒯 vs 𝒯₁")?;
    let tzs = tz_space(ctx)?;
    same_components(ctx, sp, &tzs, "𝒯 vs 𝒯_Z")
}

/// Whether two spaces carry the same continuous maps into Y.
fn same_functions(ctx: &Ctx, a: &ExplicitSpace, b: &ExplicitSpace, what: &str) -> Check {
    let y = ctx.y();
    let ra = FunctionRing::new(a, y, u64::MAX).map_err(|e| Outcome::Budget(e.to_string()))?;
    let rb = FunctionRing::new(b, y, u64::MAX).map_err(|e| Outcome::Budget(e.to_string()))?;
    for f in ra.elements() {
        if !is_continuous(b, y, &ra.raw(f)) {
            return fail(ctx.wx(format!("continuous for one topology only ({what})")).f("f", &ra, f));
        }
    }
    for f in rb.elements() {
        if !is_continuous(a, y, &rb.raw(f)) {
            return fail(ctx.wx(format!("continuous for one topology only ({what})")).f("f", &rb, f));
        }
    }
    Ok(())
}

fn l27(ctx: &Ctx) -> Check {
    let sp = &ctx.inst.space;
    same_functions(ctx, sp, &sp.clopen_base(), "𝒯 vs 𝒯₁")
}

fn l28(ctx: &Ctx) -> Check {
    let sp = &ctx.inst.space;
    let tzs = tz_space(ctx)?;
    same_functions(ctx, &sp.clopen_base(), &tzs, "𝒯₁ vs 𝒯_Z")
}

fn t11(ctx: &Ctx) -> Check {
    let sp = &ctx.inst.space;
    let t1 = sp.clopen_base();
    let tzs = tz_space(ctx)?;
    same_functions(ctx, sp, &t1, "𝒯 vs 𝒯₁")?;
    same_functions(ctx, sp, &tzs, "𝒯 vs 𝒯_Z")?;
    // Same carriers and pointwise operations, so the identity on raw maps is
    // the isomorphism; check that the products agree.
    let r1 = FunctionRing::new(&t1, ctx.y(), u64::MAX).map_err(|e| Outcome::Budget(e.to_string()))?;
    let x = &ctx.x;
    for (f, g) in ctx.pairs() {
        let (a, b) = (r1.from_raw(&x.raw(f)).unwrap(), r1.from_raw(&x.raw(g)).unwrap());
        if r1.raw(r1.mul(a, b)) != x.raw(x.mul(f, g)) {
            return fail(ctx.wx("products differ between the two rings").f("f", x, f).f("g", x, g));
        }
    }
    Ok(())
}

fn t12(ctx: &Ctx) -> Check {
    ctx.at_least_two()?;
    ctx.two_sided_zero()?;
    let z = &ctx.z;
    let y = ctx.y();
    let a = match y.elements().find(|&v| v != y.zero()) {
        Some(a) => a,
        None => return unmet("Y has no nonzero element"),
    };
    let u = PointSet::singleton(0);
    let uc = u.complement(ctx.k());
    let (f, g) = (z.chi_a(u, a)?, z.chi_a(uc, a)?);
    if z.mul(f, g) != z.theta() || !z.is_zero_divisor(f) {
        return fail(ctx.w("χ_{U,a}·χ_{Uᶜ,a} ≠ Θ").f("χ_{U,a}", z, f).f("χ_{Uᶜ,a}", z, g));
    }
    if !ctx.flags().associative {
        return Ok(());
    }
    let nil = y.nilpotents().map_err(|e| Outcome::Unmet(e.to_string()))?;
    for b in nil.into_iter().filter(|&b| b != y.zero()) {
        let h = z.chi_a(u, b)?;
        let mut p = h;
        let mut hit = false;
        for _ in 0..=y.size() {
            if p == z.theta() {
                hit = true;
                break;
            }
            p = z.mul(p, h);
        }
        if !hit {
            return fail(ctx.w("a nilpotent of Y does not give a nilpotent function").val("b", b).f("χ_{U,b}", z, h));
        }
    }
    Ok(())
}

impl From<crate::funcspace::FuncError> for Outcome {
    fn from(e: crate::funcspace::FuncError) -> Self {
        Outcome::Unmet(e.to_string())
    }
}
