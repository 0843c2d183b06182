//! The families Φ_U, 𝒫_U, 𝒰_I, 𝒳_I, the χ-calculus and complements.
//!
//! 𝒫 is taken literally: the proper primes together with (Θ). Several
//! statements read as if C(Z,Y) were also a member, or as if (Θ) behaved
//! like a prime; those are flagged and fail with the offending ideal.

use std::collections::BTreeSet;

use super::{fail, require, Check, Checker, Ctx, Outcome};
use crate::algebra::Val;
use crate::funcspace::{Elem, ElemSet, FunctionRing};
use crate::ideals::{chi_subring, complement_of, is_prime_set, join, principal_ideal};
use crate::pointset::PointSet;

const C_IN_P: &str = "𝒫 is the proper primes with (Θ); C(Z,Y) is not a member, so 𝒫_∅ = ∅ and C ∉ 𝒫_U";
const THETA_IN_P: &str = "(Θ) ∈ 𝒫 contains only χ_Z, so it sits in neither 𝒫_U nor 𝒫_{Uᶜ} and 𝒰_(Θ) ≠ 𝒰_I for primes I ⊇ (Θ)";
const NONPRIME_I: &str = "only prime I make 𝒳_I prime: for I = (Θ), χ_U·χ_{Uᶜ} = Θ ∈ 𝒳_I with neither factor in it";

pub(super) fn checks() -> Vec<Checker> {
    vec![
        Checker::new("L43.1", "χ_Z = Θ ∈ ∩𝒫", l43_1),
        Checker::new("L43.2", "χ_∅ = Id", l43_2),
        Checker::new("L43.3", "Φ_Z = Φ and 𝒫_Z = 𝒫", l43_3),
        Checker::new("L43.4", "Φ_∅ = 𝒫_∅ = {C(Z,Y)}", l43_4).flagged(C_IN_P),
        Checker::new("L43.5", "C(Z,Y) ∈ 𝒫_U for every U", l43_5).flagged(C_IN_P),
        Checker::new("L44", "I1 ⊆ I2 ≠ C ⇒ (I1 ∈ 𝒫_U ⇔ I2 ∈ Φ_U)", l44).flagged(THETA_IN_P),
        Checker::new("L45", "∅ ≠ U ≠ Z ⇒ 𝒫 = 𝒫_U ⊔ 𝒫_{Uᶜ}", l45).flagged(THETA_IN_P),
        Checker::new("L46", "𝒫_U ⊆ 𝒫_{U∪W} ∩ 𝒫_{U∪Wᶜ} (also Φ)", l46),
        Checker::new("L47.1", "𝒰_(Θ) = {Z}", l47_1),
        Checker::new("L47.2", "𝒰_C = 𝒰ᶜ_C = 𝒰", l47_2),
        Checker::new("L47.3", "𝒰ᶜ_(Θ) = {∅}", l47_3),
        Checker::new("L47.4", "𝒰_(Θ) ∪ 𝒰ᶜ_(Θ) = {∅, Z} ≠ 𝒰", l47_4),
        Checker::new("L47.5", "I1 ⊆ I2 in 𝒫 ⇒ 𝒰_I1 ⊆ 𝒰_I2, equal when I2 ≠ C", l47_5).flagged(THETA_IN_P),
        Checker::new("L48", "I ∈ 𝒫_U ⇔ U ∈ 𝒰_I", l48),
        Checker::new("L49", "I ∈ 𝒫∖{C} ⇒ 𝒰 = 𝒰_I ⊔ 𝒰ᶜ_I", l49).flagged(THETA_IN_P),
        Checker::new("L50", "I1 ∩ I2 prime ⇒ 𝒰_{I1∩I2} = 𝒰_I1 ∩ 𝒰_I2", l50),
        Checker::new("L51", "I1 ∪ I2 prime ⇒ 𝒰_I1 ∪ 𝒰_I2 = 𝒰_{I1∪I2}", l51),
        Checker::new("L52.1", "𝒳_(Θ) = {Θ} and 𝒳_C = 𝒳", l52_1),
        Checker::new("L52.2", "I1 ⊆ I2 in 𝒫 ⇒ 𝒳_I1 ⊆ 𝒳_I2, equal when I2 ≠ C", l52_2).flagged(THETA_IN_P),
        Checker::new("L52.3", "χ_U ∈ 𝒳_I ⇔ U ∈ 𝒰_I ⇔ I ∈ 𝒫_U", l52_3),
        Checker::new("L53", "𝒳 = 𝒳_I ⊔ 𝒳ᶜ_I", l53).flagged(THETA_IN_P),
        Checker::new("L54", "𝒳_I1 ∩ 𝒳_I2 = 𝒳_{I1∩I2}", l54),
        Checker::new("L55", "I1 ∪ I2 an ideal ⇒ 𝒳_I1 ∪ 𝒳_I2 = 𝒳_{I1∪I2}", l55),
        Checker::new("SN.A", "summary laws for 𝒫_U", sn_a).flagged(C_IN_P),
        Checker::new("SN.B", "summary laws for 𝒰_I", sn_b).flagged(THETA_IN_P),
        Checker::new("SN.C", "summary laws for 𝒳_I", sn_c).flagged(THETA_IN_P),
        Checker::new("T19", "J prime, V(J) ≠ ∅ ⇒ V(J) = {z}, J ⊆ I(z); {z} open ⇒ J = I(z) = (χ_z)", t19),
        Checker::new("T20", "prime J ⊊ I ≠ C ⇒ exactly one of χ_U, χ_{Uᶜ} ∈ I", t20),
        Checker::new("L56", "Y a division ring, f nowhere zero ⇒ 1/f is continuous", l56),
        Checker::new("L57", "Y a division ring, I proper ⇒ every f ∈ I has a zero", l57),
        Checker::new("L58", "H(I(x)) = I([x])", l58),
        Checker::new("L59.1", "χ_U idempotent; χ_U + χ_{Uᶜ} = Id", l59_1),
        Checker::new("L59.2", "χ_U1·χ_U2 = χ_{U1∪U2}, in I when a factor is", l59_2),
        Checker::new("L59.3", "1+1 = 0 ⇒ χ_U1 + χ_U2 = χ_{(U1∩U2)∪(U1∪U2)ᶜ}, χ_U + χ_U = Θ", l59_3),
        Checker::new("L59.4", "U1 ⊆ U2 ⇒ χ_U2 = χ_U2·χ_U1", l59_4),
        Checker::new("L59.5", "U1 ≠ U2 ⇒ χ_U1 ≠ χ_U2", l59_5),
        Checker::new("L59.6", "U1 ∩ U2 = V(χ_{U1∩U2})", l59_6),
        Checker::new("L59.7", "U1 ∪ U2 = V(χ_U1) ∪ V(χ_U2) = V(χ_U1·χ_U2)", l59_7),
        Checker::new("L59.8", "I prime ⇒ χ_U or χ_{Uᶜ} ∈ I", l59_8),
        Checker::new("L59.9", "U ⊆ U1, χ_U ∈ I ⇒ χ_U1 ∈ I", l59_9),
        Checker::new("L59.10", "I prime, U1 ∩ U2 = ∅, χ_U1 ∈ I ⇒ χ_U2 ∉ I", l59_10),
        Checker::new("L59.11", "1+1 = 0, χ_U1, χ_U2 ∈ I ⇒ χ_U1 + χ_U2 ∈ I", l59_11),
        Checker::new("L59.12", "∅ ≠ U ≠ Z ⇒ (χ_U) ∩ (χ_{Uᶜ}) = (Θ), (χ_U) + (χ_{Uᶜ}) = C", l59_12),
        Checker::new("L59.13", "Id = χ_∅; Θ = χ_Z ∈ I; 𝒳_I ≠ ∅", l59_13),
        Checker::new("L59.14", "𝒳_I is multiplicatively closed", l59_14),
        Checker::new("L59.15", "χ_U ∈ 𝒳_I ⇒ χ_W·χ_U ∈ 𝒳_I", l59_15),
        Checker::new("L59.16", "1+1 = 0, χ_U, χ_W ∈ 𝒳_I ⇒ χ_U + χ_W ∈ 𝒳_I", l59_16),
        Checker::new("L59.17", "χ_U·χ_W ∈ 𝒳_I ⇒ χ_U or χ_W ∈ 𝒳_I", l59_17).flagged(NONPRIME_I),
        Checker::new("L59.18", "distributive, χ_U ∈ I, χ_U + χ_W = Θ ⇒ χ_W ∈ I", l59_18),
        Checker::new("L59.19", "1+1 = 0, χ_V·χ_U and χ_V + χ_U in I ⇒ V ∩ U ≠ ∅", l59_19),
        Checker::new("T21", "𝒳 is a Boolean subring isomorphic to C(Z,ℤ₂)", t21),
        Checker::new("T22", "𝒳_I is a prime ideal of 𝒳 (a subring when 1+1 = 0)", t22).flagged(NONPRIME_I),
        Checker::new("L60.1", "I1 ⊆ I2 ⇒ 𝒳_I1 ⊆ 𝒳_I2", l60_1),
        Checker::new("L60.2", "I1 ∩ I2 ∈ 𝒫 ⇒ 𝒳_I1 ∩ 𝒳_I2 = 𝒳_{I1∩I2}", l60_2),
        Checker::new("L60.3", "I1 ∪ I2 ∈ 𝒫 ⇒ 𝒳_I1 ∪ 𝒳_I2 = 𝒳_{I1∪I2}", l60_3),
        Checker::new("L60.4", "𝒳_I + 𝔒 = 𝒳_I", l60_4),
        Checker::new("L60.5", "𝒳_I · 𝔒 = 𝔒", l60_5),
        Checker::new("L60.6", "𝒳_I1 + 𝒳_I2 and 𝒳_I1·𝒳_I2 are ideals of 𝒳", l60_6),
        Checker::new("L60.7", "𝒳_I1, 𝒳_I2 prime; 𝒳_I1 + 𝒳_I2 ∈ 𝔛 when I1 + I2 is prime", l60_7).flagged(NONPRIME_I),
        Checker::new("L60.8", "𝒳_I1 + 𝒳_I2 ⊆ 𝒳_{I1+I2}", l60_8),
        Checker::new("L60.9", "𝒳_I1·𝒳_I2 ⊆ 𝒳, in 𝔛 when I1 ∩ I2 is prime", l60_9),
        Checker::new("T23", "with complements, I1 prime, I1 + I2 ≠ C ⇒ I1 + I2 prime", t23),
        Checker::new("L61", "commuting idempotents: (f1·f2)ᶜ = Id − f1·f2", l61),
        Checker::new("L62", "χ_Uᶜ·χ_Wᶜ − (χ_U·χ_W)ᶜ = χ_{U∪W} − χ_{U∩W}", l62),
    ]
}

fn has(s: &ElemSet, e: Elem) -> bool {
    s.contains(e as usize)
}

fn pset(m: usize) -> PointSet {
    PointSet::from_bits(m as u64)
}

/// Family data under the standing assumption: a unit and a two-sided zero.
struct Fam<'a> {
    ctx: &'a Ctx,
    chis: Vec<Elem>,
    full: usize,
    pfam: Vec<usize>,
}

fn fam(ctx: &Ctx) -> Result<Fam<'_>, Outcome> {
    ctx.two_sided_zero()?;
    let chis = ctx.chis()?;
    let full = chis.len() - 1;
    Ok(Fam { ctx, chis, full, pfam: ctx.p_family() })
}

impl Fam<'_> {
    fn ideal(&self, i: usize) -> &ElemSet {
        self.ctx.ideal(i)
    }

    fn in_p(&self, i: usize) -> bool {
        self.pfam.binary_search(&i).is_ok()
    }

    fn top(&self) -> usize {
        self.ctx.lattice().top()
    }

    fn bottom(&self) -> usize {
        self.ctx.lattice().bottom()
    }

    fn masks(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.full
    }

    /// 𝒫_U.
    fn p_u(&self, m: usize) -> Vec<usize> {
        self.pfam.iter().copied().filter(|&i| has(self.ideal(i), self.chis[m])).collect()
    }

    /// Φ_U.
    fn phi_u(&self, m: usize) -> Vec<usize> {
        (0..self.ctx.lattice().len()).filter(|&i| has(self.ideal(i), self.chis[m])).collect()
    }

    /// 𝒰_S as masks.
    fn u_of(&self, s: &ElemSet) -> BTreeSet<usize> {
        self.masks().filter(|&m| has(s, self.chis[m])).collect()
    }

    /// 𝒰ᶜ_S as masks.
    fn uc_of(&self, s: &ElemSet) -> BTreeSet<usize> {
        self.masks().filter(|&m| has(s, self.chis[self.full - m])).collect()
    }

    /// 𝒳_S as elements.
    fn x_of(&self, s: &ElemSet) -> BTreeSet<Elem> {
        self.chis.iter().copied().filter(|&c| has(s, c)).collect()
    }

    fn xc_of(&self, s: &ElemSet) -> BTreeSet<Elem> {
        self.masks().filter(|&m| has(s, self.chis[self.full - m])).map(|m| self.chis[m]).collect()
    }

    fn x_all(&self) -> BTreeSet<Elem> {
        self.chis.iter().copied().collect()
    }

    /// Lattice index of a set, when it is an ideal.
    fn find(&self, s: &ElemSet) -> Option<usize> {
        self.ctx.lattice().find(s)
    }

    fn meet(&self, a: usize, b: usize) -> ElemSet {
        let mut s = self.ideal(a).clone();
        s.intersect_with(self.ideal(b));
        s
    }

    fn union(&self, a: usize, b: usize) -> ElemSet {
        let mut s = self.ideal(a).clone();
        s.union_with(self.ideal(b));
        s
    }
}

fn masks_of(ms: &BTreeSet<usize>) -> String {
    let v: Vec<String> = ms.iter().map(|&m| pset(m).to_string()).collect();
    format!("{{{}}}", v.join(" "))
}

fn l43_1(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let theta = ctx.z.theta();
    if f.chis[f.full] != theta {
        return fail(ctx.w("χ_Z ≠ Θ").f("χ_Z", &ctx.z, f.chis[f.full]));
    }
    if let Some(&i) = f.pfam.iter().find(|&&i| !has(f.ideal(i), theta)) {
        return fail(ctx.w("Θ missing from a member of 𝒫").ideal("I", f.ideal(i)));
    }
    Ok(())
}

fn l43_2(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    if Some(f.chis[0]) != ctx.z.id() {
        return fail(ctx.w("χ_∅ ≠ Id").f("χ_∅", &ctx.z, f.chis[0]));
    }
    Ok(())
}

fn l43_3(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let all: Vec<usize> = (0..ctx.lattice().len()).collect();
    if f.phi_u(f.full) != all {
        return fail(ctx.w("Φ_Z ≠ Φ"));
    }
    if f.p_u(f.full) != f.pfam {
        return fail(ctx.w("𝒫_Z ≠ 𝒫"));
    }
    Ok(())
}

fn p_empty(f: &Fam) -> Check {
    let ctx = f.ctx;
    let top = vec![f.top()];
    if f.phi_u(0) != top {
        return fail(ctx.w(format!("Φ_∅ has {} members, expected only C", f.phi_u(0).len())));
    }
    let p = f.p_u(0);
    if p != top {
        let mut w = ctx.w(format!("𝒫_∅ has {} members and C(Z,Y) ∉ 𝒫", p.len()));
        for i in p {
            w = w.ideal("member", f.ideal(i));
        }
        return fail(w);
    }
    Ok(())
}

fn l43_4(ctx: &Ctx) -> Check {
    p_empty(&fam(ctx)?)
}

fn l43_5(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for m in f.masks() {
        if !f.p_u(m).contains(&f.top()) {
            return fail(ctx.w("C(Z,Y) ∉ 𝒫_U").set("U", pset(m)));
        }
    }
    Ok(())
}

fn l44(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    let proper = ctx.proper();
    let flags = ctx.prime_flags();
    for &i1 in &f.pfam {
        for &i2 in &proper {
            let (a, b) = (f.ideal(i1), f.ideal(i2));
            if !a.is_subset(b) {
                continue;
            }
            for m in f.masks() {
                let c = f.chis[m];
                // I1 ∈ 𝒫_U ⇔ I2 ∈ Φ_U, and for prime I2 the same with 𝒫_U.
                if has(a, c) != has(b, c) {
                    let which = if flags[i2] { "𝒫_U" } else { "Φ_U" };
                    return fail(
                        ctx.w(format!("I1 ⊆ I2 disagree on membership in {which}"))
                            .set("U", pset(m))
                            .ideal("I1", a)
                            .ideal("I2", b),
                    );
                }
            }
        }
    }
    Ok(())
}

fn l45(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    for m in 1..f.full {
        let (pu, puc) = (f.p_u(m), f.p_u(f.full - m));
        for &i in &f.pfam {
            let (a, b) = (pu.contains(&i), puc.contains(&i));
            if a == b {
                let note = if a { "I in both 𝒫_U and 𝒫_{Uᶜ}" } else { "I in neither 𝒫_U nor 𝒫_{Uᶜ}" };
                return fail(ctx.w(note).set("U", pset(m)).ideal("I", f.ideal(i)));
            }
        }
    }
    Ok(())
}

fn l46(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    require((f.full + 1).pow(2) <= super::PAIR_BUDGET, "too many clopen pairs")?;
    for u in f.masks() {
        let (pu, phu) = (f.p_u(u), f.phi_u(u));
        for w in f.masks() {
            let (a, b) = (u | w, u | (f.full - w));
            let (pa, pb) = (f.p_u(a), f.p_u(b));
            let (fa, fb) = (f.phi_u(a), f.phi_u(b));
            if let Some(&i) = pu.iter().find(|i| !pa.contains(i) || !pb.contains(i)) {
                return fail(ctx.w("𝒫_U ⊄ 𝒫_{U∪W} ∩ 𝒫_{U∪Wᶜ}").set("U", pset(u)).set("W", pset(w)).ideal("I", f.ideal(i)));
            }
            if let Some(&i) = phu.iter().find(|i| !fa.contains(i) || !fb.contains(i)) {
                return fail(ctx.w("Φ_U ⊄ Φ_{U∪W} ∩ Φ_{U∪Wᶜ}").set("U", pset(u)).set("W", pset(w)).ideal("I", f.ideal(i)));
            }
        }
    }
    Ok(())
}

fn u_theta(f: &Fam) -> Check {
    let u = f.u_of(f.ideal(f.bottom()));
    if u != BTreeSet::from([f.full]) {
        return fail(f.ctx.w(format!("𝒰_(Θ) = {}", masks_of(&u))));
    }
    Ok(())
}

fn l47_1(ctx: &Ctx) -> Check {
    u_theta(&fam(ctx)?)
}

fn u_whole(f: &Fam) -> Check {
    let s = f.ideal(f.top());
    let all: BTreeSet<usize> = f.masks().collect();
    if f.u_of(s) != all || f.uc_of(s) != all {
        return fail(f.ctx.w("𝒰_C or 𝒰ᶜ_C misses a clopen"));
    }
    Ok(())
}

fn l47_2(ctx: &Ctx) -> Check {
    u_whole(&fam(ctx)?)
}

fn l47_3(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let uc = f.uc_of(f.ideal(f.bottom()));
    if uc != BTreeSet::from([0]) {
        return fail(ctx.w(format!("𝒰ᶜ_(Θ) = {}", masks_of(&uc))));
    }
    Ok(())
}

fn l47_4(ctx: &Ctx) -> Check {
    ctx.at_least_two()?;
    let f = fam(ctx)?;
    let s = f.ideal(f.bottom());
    let both: BTreeSet<usize> = f.u_of(s).union(&f.uc_of(s)).copied().collect();
    if both != BTreeSet::from([0, f.full]) || both.len() == f.full + 1 {
        return fail(ctx.w(format!("𝒰_(Θ) ∪ 𝒰ᶜ_(Θ) = {}", masks_of(&both))));
    }
    Ok(())
}

/// Monotonicity in 𝒫, with equality below a proper member.
fn monotone<T: Ord + Clone>(f: &Fam, what: &str, fam_of: impl Fn(&ElemSet) -> BTreeSet<T>) -> Check {
    let top = f.top();
    for &i1 in &f.pfam {
        for &i2 in &f.pfam {
            let (a, b) = (f.ideal(i1), f.ideal(i2));
            if !a.is_subset(b) {
                continue;
            }
            let (fa, fb) = (fam_of(a), fam_of(b));
            if !fa.is_subset(&fb) {
                return fail(f.ctx.w(format!("{what}_I1 ⊄ {what}_I2")).ideal("I1", a).ideal("I2", b));
            }
            if i2 != top && fa != fb {
                return fail(
                    f.ctx
                        .w(format!("{what}_I1 ≠ {what}_I2 for I1 ⊆ I2 ≠ C"))
                        .ideal("I1", a)
                        .ideal("I2", b)
                        .val("|I1 family|", fa.len() as Val)
                        .val("|I2 family|", fb.len() as Val),
                );
            }
        }
    }
    Ok(())
}

fn l47_5(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    monotone(&f, "𝒰", |s| f.u_of(s))
}

fn l48(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for &i in &f.pfam {
        let u = f.u_of(f.ideal(i));
        for m in f.masks() {
            if f.p_u(m).contains(&i) != u.contains(&m) {
                return fail(ctx.w("I ∈ 𝒫_U disagrees with U ∈ 𝒰_I").set("U", pset(m)).ideal("I", f.ideal(i)));
            }
        }
    }
    Ok(())
}

fn l49(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    for &i in &f.pfam {
        let s = f.ideal(i);
        let (u, uc) = (f.u_of(s), f.uc_of(s));
        for m in f.masks() {
            if u.contains(&m) == uc.contains(&m) {
                return fail(ctx.w("U is not in exactly one of 𝒰_I, 𝒰ᶜ_I").set("U", pset(m)).ideal("I", s));
            }
        }
    }
    Ok(())
}

/// Laws for lattice pairs whose meet is prime.
fn meet_law<T: Ord + Clone>(
    f: &Fam,
    what: &str,
    member: impl Fn(usize) -> bool,
    fam_of: impl Fn(&ElemSet) -> BTreeSet<T>,
) -> Check {
    for (a, b) in f.ctx.ideal_pairs() {
        let m = f.meet(a, b);
        let Some(mi) = f.find(&m) else { continue };
        if !member(mi) {
            continue;
        }
        let lhs = fam_of(&m);
        let rhs: BTreeSet<T> = fam_of(f.ideal(a)).intersection(&fam_of(f.ideal(b))).cloned().collect();
        if lhs != rhs {
            return fail(f.ctx.w(format!("{what}_{{I1∩I2}} ≠ {what}_I1 ∩ {what}_I2")).ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
    }
    Ok(())
}

/// Laws for lattice pairs whose set union is an ideal in the given class.
fn union_law<T: Ord + Clone>(
    f: &Fam,
    what: &str,
    member: impl Fn(usize) -> bool,
    fam_of: impl Fn(&ElemSet) -> BTreeSet<T>,
) -> Check {
    for (a, b) in f.ctx.ideal_pairs() {
        let u = f.union(a, b);
        let Some(ui) = f.find(&u) else { continue };
        if !member(ui) {
            continue;
        }
        let lhs = fam_of(&u);
        let rhs: BTreeSet<T> = fam_of(f.ideal(a)).union(&fam_of(f.ideal(b))).cloned().collect();
        if lhs != rhs {
            return fail(f.ctx.w(format!("{what}_{{I1∪I2}} ≠ {what}_I1 ∪ {what}_I2")).ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
    }
    Ok(())
}

fn is_prime_idx(ctx: &Ctx) -> impl Fn(usize) -> bool + '_ {
    let flags = ctx.prime_flags();
    move |i| flags[i]
}

fn l50(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    meet_law(&f, "𝒰", is_prime_idx(ctx), |s| f.u_of(s))
}

fn l51(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    union_law(&f, "𝒰", is_prime_idx(ctx), |s| f.u_of(s))
}

fn x_ends(f: &Fam) -> Check {
    let ctx = f.ctx;
    if f.x_of(f.ideal(f.bottom())) != BTreeSet::from([ctx.z.theta()]) {
        return fail(ctx.w("𝒳_(Θ) ≠ {Θ}"));
    }
    if f.x_of(f.ideal(f.top())) != f.x_all() {
        return fail(ctx.w("𝒳_C ≠ 𝒳"));
    }
    Ok(())
}

fn l52_1(ctx: &Ctx) -> Check {
    x_ends(&fam(ctx)?)
}

fn l52_2(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    monotone(&f, "𝒳", |s| f.x_of(s))
}

fn l52_3(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for &i in &f.pfam {
        let s = f.ideal(i);
        let (x, u) = (f.x_of(s), f.u_of(s));
        for m in f.masks() {
            let a = x.contains(&f.chis[m]);
            if a != u.contains(&m) || a != f.p_u(m).contains(&i) {
                return fail(ctx.w("χ_U ∈ 𝒳_I, U ∈ 𝒰_I, I ∈ 𝒫_U disagree").set("U", pset(m)).ideal("I", s));
            }
        }
    }
    Ok(())
}

fn l53(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    for &i in &f.pfam {
        let s = f.ideal(i);
        let (x, xc) = (f.x_of(s), f.xc_of(s));
        for m in f.masks() {
            let c = f.chis[m];
            if x.contains(&c) == xc.contains(&c) {
                return fail(ctx.w("χ_U is not in exactly one of 𝒳_I, 𝒳ᶜ_I").f("χ_U", &ctx.z, c).ideal("I", s));
            }
        }
    }
    Ok(())
}

fn l54(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    meet_law(&f, "𝒳", |_| true, |s| f.x_of(s))
}

fn l55(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    union_law(&f, "𝒳", |_| true, |s| f.x_of(s))
}

fn sn_a(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    p_empty(&f)?;
    if f.p_u(f.full) != f.pfam {
        return fail(ctx.w("𝒫_Z ≠ 𝒫"));
    }
    require((f.full + 1).pow(2) <= super::PAIR_BUDGET, "too many clopen pairs")?;
    for u1 in f.masks() {
        let p1 = f.p_u(u1);
        for u2 in f.masks() {
            let p2 = f.p_u(u2);
            let w = || ctx.w("").set("U1", pset(u1)).set("U2", pset(u2));
            if u1 & !u2 == 0 && !p1.iter().all(|i| p2.contains(i)) {
                return fail(w().with_note("U1 ⊆ U2 but 𝒫_U1 ⊄ 𝒫_U2"));
            }
            let meet = f.p_u(u1 & u2);
            if !meet.iter().all(|i| p1.contains(i) && p2.contains(i)) {
                return fail(w().with_note("𝒫_{U1∩U2} ⊄ 𝒫_U1 ∩ 𝒫_U2"));
            }
            let join = f.p_u(u1 | u2);
            if !p1.iter().chain(&p2).all(|i| join.contains(i)) {
                return fail(w().with_note("𝒫_U1 ∪ 𝒫_U2 ⊄ 𝒫_{U1∪U2}"));
            }
        }
    }
    Ok(())
}

fn sn_b(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    u_theta(&f)?;
    u_whole(&f)?;
    monotone(&f, "𝒰", |s| f.u_of(s))?;
    meet_law(&f, "𝒰", is_prime_idx(ctx), |s| f.u_of(s))?;
    union_law(&f, "𝒰", is_prime_idx(ctx), |s| f.u_of(s))
}

fn sn_c(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    x_ends(&f)?;
    monotone(&f, "𝒳", |s| f.x_of(s))?;
    meet_law(&f, "𝒳", is_prime_idx(ctx), |s| f.x_of(s))?;
    union_law(&f, "𝒳", is_prime_idx(ctx), |s| f.x_of(s))
}

fn t19(ctx: &Ctx) -> Check {
    ctx.two_sided_zero()?;
    let z = &ctx.z;
    for j in ctx.primes() {
        let s = ctx.ideal(j);
        let v = z.zero_set_of(s.ones().map(|e| e as Elem));
        if v.is_empty() {
            continue;
        }
        if v.len() != 1 {
            return fail(ctx.w("prime J with |V(J)| > 1").ideal("J", s).set("V(J)", v));
        }
        if !s.is_subset(&ctx.iz(v)) {
            return fail(ctx.w("J ⊄ I(z)").ideal("J", s).set("z", v));
        }
        // {z} is open in Z; the corollary needs χ_z.
        if ctx.flags().has_unit {
            let principal = principal_ideal(z, ctx.cfg, ctx.chi(v)).expect("config validated").elems;
            if *s != *ctx.iz(v) || principal != *s {
                return fail(ctx.w("J ≠ I(z) = (χ_z)").ideal("J", s).set("z", v).ideal("(χ_z)", &principal));
            }
        }
    }
    Ok(())
}

fn t20(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    let proper = ctx.proper();
    for j in ctx.primes() {
        for &i in &proper {
            let (a, b) = (f.ideal(j), f.ideal(i));
            if a == b || !a.is_subset(b) {
                continue;
            }
            for m in f.masks() {
                if has(b, f.chis[m]) == has(b, f.chis[f.full - m]) {
                    return fail(ctx.w("not exactly one of χ_U, χ_{Uᶜ} in I").set("U", pset(m)).ideal("J", a).ideal("I", b));
                }
            }
        }
    }
    Ok(())
}

fn inverse(ctx: &Ctx, a: Val) -> Option<Val> {
    let one = ctx.y().unit()?;
    ctx.y().elements().find(|&b| ctx.y().mul(a, b) == one && ctx.y().mul(b, a) == one)
}

fn l56(ctx: &Ctx) -> Check {
    require(ctx.flags().is_division_ring, "Y is not a division ring")?;
    let (x, zero) = (&ctx.x, ctx.y().zero());
    for f in x.elements() {
        let raw = x.raw(f);
        if raw.contains(&zero) {
            continue;
        }
        let inv: Vec<Val> = raw.iter().map(|&v| inverse(ctx, v).expect("division ring")).collect();
        if !crate::funcspace::is_continuous(x.space(), ctx.y(), &inv) {
            return fail(ctx.wx("1/f is not continuous").f("f", x, f));
        }
    }
    Ok(())
}

fn l57(ctx: &Ctx) -> Check {
    require(ctx.flags().is_division_ring, "Y is not a division ring")?;
    let z = &ctx.z;
    for i in ctx.proper() {
        let s = ctx.ideal(i);
        if let Some(g) = s.ones().map(|e| e as Elem).find(|&g| z.zero_set(g).is_empty()) {
            return fail(ctx.w("nowhere-zero f in a proper ideal").f("f", z, g).ideal("I", s));
        }
    }
    Ok(())
}

fn l58(ctx: &Ctx) -> Check {
    ctx.zero_ok()?;
    let (x, z) = (&ctx.x, &ctx.z);
    for p in 0..x.space().point_count() {
        let ix = x.vanishing(PointSet::singleton(p));
        let image = z.set_from(ix.ones().map(|e| z.encode(&x.transport_g(&x.raw(e as Elem)))));
        let class = PointSet::singleton(x.class_of(p));
        if image != *ctx.iz(class) {
            return fail(ctx.wx("H(I(x)) ≠ I([x])").val("x", p as Val).ideal("H(I(x))", &image));
        }
    }
    Ok(())
}

/// `0 + 0 = 0` and `1 + 0 = 0 + 1 = 1`, which the additive items take for granted.
pub(super) fn unit_add(ctx: &Ctx) -> Check {
    let y = ctx.y();
    require(y.has_add(), "Y has no addition")?;
    let (o, e) = (y.zero(), ctx.unit()?);
    require(
        y.add(o, o) == Some(o) && y.add(e, o) == Some(e) && y.add(o, e) == Some(e),
        "0 is not additively neutral on {0, 1}",
    )
}

fn char_two(ctx: &Ctx) -> Check {
    unit_add(ctx)?;
    require(ctx.flags().char_two, "1 + 1 ≠ 0 in Y")
}

fn add(z: &FunctionRing, a: Elem, b: Elem) -> Elem {
    z.add(a, b).expect("addition checked")
}

fn l59_1(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let z = &ctx.z;
    let additive = unit_add(ctx).is_ok();
    for m in f.masks() {
        let c = f.chis[m];
        if z.mul(c, c) != c {
            return fail(ctx.w("χ_U not idempotent").set("U", pset(m)));
        }
        if additive && Some(add(z, c, f.chis[f.full - m])) != z.id() {
            return fail(ctx.w("χ_U + χ_{Uᶜ} ≠ Id").set("U", pset(m)));
        }
    }
    Ok(())
}

fn l59_2(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let z = &ctx.z;
    for m1 in f.masks() {
        for m2 in f.masks() {
            let p = z.mul(f.chis[m1], f.chis[m2]);
            if p != f.chis[m1 | m2] {
                return fail(ctx.w("χ_U1·χ_U2 ≠ χ_{U1∪U2}").set("U1", pset(m1)).set("U2", pset(m2)));
            }
        }
    }
    for i in ctx.proper() {
        let s = f.ideal(i);
        for m1 in f.masks() {
            for m2 in f.masks() {
                let hit = has(s, f.chis[m1]) || has(s, f.chis[m2]);
                if hit && !has(s, f.chis[m1 | m2]) {
                    return fail(ctx.w("a factor is in I but χ_{U1∪U2} is not").set("U1", pset(m1)).set("U2", pset(m2)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn l59_3(ctx: &Ctx) -> Check {
    char_two(ctx)?;
    let f = fam(ctx)?;
    let z = &ctx.z;
    for m1 in f.masks() {
        for m2 in f.masks() {
            let want = f.chis[(m1 & m2) | (f.full & !(m1 | m2))];
            if add(z, f.chis[m1], f.chis[m2]) != want {
                return fail(ctx.w("χ_U1 + χ_U2 ≠ χ_{(U1∩U2)∪(U1∪U2)ᶜ}").set("U1", pset(m1)).set("U2", pset(m2)));
            }
        }
        if add(z, f.chis[m1], f.chis[m1]) != z.theta() {
            return fail(ctx.w("χ_U + χ_U ≠ Θ").set("U", pset(m1)));
        }
    }
    Ok(())
}

fn l59_4(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for m2 in f.masks() {
        for m1 in pset(m2).subsets().map(|s| s.bits() as usize) {
            if ctx.z.mul(f.chis[m2], f.chis[m1]) != f.chis[m2] {
                return fail(ctx.w("χ_U2 ≠ χ_U2·χ_U1").set("U1", pset(m1)).set("U2", pset(m2)));
            }
        }
    }
    Ok(())
}

fn l59_5(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let distinct: BTreeSet<Elem> = f.chis.iter().copied().collect();
    if distinct.len() != f.chis.len() {
        let (a, b) = f
            .masks()
            .flat_map(|a| f.masks().filter(move |&b| b > a).map(move |b| (a, b)))
            .find(|&(a, b)| f.chis[a] == f.chis[b])
            .expect("a collision exists");
        return fail(ctx.w("χ_U1 = χ_U2 for U1 ≠ U2").set("U1", pset(a)).set("U2", pset(b)));
    }
    Ok(())
}

fn l59_6(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for m1 in f.masks() {
        for m2 in f.masks() {
            if ctx.z.zero_set(f.chis[m1 & m2]) != pset(m1 & m2) {
                return fail(ctx.w("V(χ_{U1∩U2}) ≠ U1 ∩ U2").set("U1", pset(m1)).set("U2", pset(m2)));
            }
        }
    }
    Ok(())
}

fn l59_7(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let z = &ctx.z;
    for m1 in f.masks() {
        for m2 in f.masks() {
            let u = pset(m1 | m2);
            let parts = z.zero_set(f.chis[m1]).union(z.zero_set(f.chis[m2]));
            let prod = z.zero_set(z.mul(f.chis[m1], f.chis[m2]));
            if parts != u || z.zero_set(f.chis[m1 | m2]) != u || prod != u {
                return fail(ctx.w("U1 ∪ U2 chain of zero sets breaks").set("U1", pset(m1)).set("U2", pset(m2)));
            }
        }
    }
    Ok(())
}

fn l59_8(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for i in ctx.primes() {
        let s = f.ideal(i);
        for m in f.masks() {
            if !has(s, f.chis[m]) && !has(s, f.chis[f.full - m]) {
                return fail(ctx.w("prime with neither χ_U nor χ_{Uᶜ}").set("U", pset(m)).ideal("I", s));
            }
        }
    }
    Ok(())
}

fn l59_9(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for i in 0..ctx.lattice().len() {
        let s = f.ideal(i);
        for m1 in f.masks() {
            for m in pset(m1).subsets().map(|s| s.bits() as usize) {
                if has(s, f.chis[m]) && !has(s, f.chis[m1]) {
                    return fail(ctx.w("χ_U ∈ I, U ⊆ U1, χ_U1 ∉ I").set("U", pset(m)).set("U1", pset(m1)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn l59_10(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    for i in ctx.primes() {
        let s = f.ideal(i);
        for m1 in f.masks().filter(|&m| has(s, f.chis[m])) {
            for m2 in pset(f.full - m1).subsets().map(|s| s.bits() as usize) {
                if has(s, f.chis[m2]) {
                    return fail(ctx.w("disjoint U1, U2 with χ_U1, χ_U2 both in a prime").set("U1", pset(m1)).set("U2", pset(m2)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn l59_11(ctx: &Ctx) -> Check {
    char_two(ctx)?;
    let f = fam(ctx)?;
    let z = &ctx.z;
    for i in ctx.proper() {
        let s = f.ideal(i);
        let inside: Vec<usize> = f.masks().filter(|&m| has(s, f.chis[m])).collect();
        for &m1 in &inside {
            for &m2 in &inside {
                if !ctx.ring_mode() && !has(s, f.chis[m1 & m2]) {
                    continue;
                }
                if !has(s, add(z, f.chis[m1], f.chis[m2])) {
                    return fail(ctx.w("χ_U1 + χ_U2 ∉ I").set("U1", pset(m1)).set("U2", pset(m2)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn l59_12(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    ctx.zero_ok()?;
    let f = fam(ctx)?;
    let z = &ctx.z;
    let theta = z.set_from([z.theta()]);
    for m in 1..f.full {
        let a = principal_ideal(z, ctx.cfg, f.chis[m]).expect("config validated").elems;
        let b = principal_ideal(z, ctx.cfg, f.chis[f.full - m]).expect("config validated").elems;
        let mut meet = a.clone();
        meet.intersect_with(&b);
        if meet != theta {
            return fail(ctx.w("(χ_U) ∩ (χ_{Uᶜ}) ≠ (Θ)").set("U", pset(m)).ideal("meet", &meet));
        }
        if join(z, ctx.cfg, &a, &b) != z.full_set() {
            return fail(ctx.w("(χ_U) + (χ_{Uᶜ}) ≠ C").set("U", pset(m)));
        }
    }
    Ok(())
}

fn l59_13(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    if Some(f.chis[0]) != ctx.z.id() || f.chis[f.full] != ctx.z.theta() {
        return fail(ctx.w("χ_∅ ≠ Id or χ_Z ≠ Θ"));
    }
    for i in 0..ctx.lattice().len() {
        if f.x_of(f.ideal(i)).is_empty() {
            return fail(ctx.w("𝒳_I = ∅").ideal("I", f.ideal(i)));
        }
    }
    Ok(())
}

fn l59_14(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for i in 0..ctx.lattice().len() {
        let x = f.x_of(f.ideal(i));
        for &a in &x {
            for &b in &x {
                if !x.contains(&ctx.z.mul(a, b)) {
                    return fail(ctx.w("𝒳_I not closed under ·").f("a", &ctx.z, a).f("b", &ctx.z, b).ideal("I", f.ideal(i)));
                }
            }
        }
    }
    Ok(())
}

fn l59_15(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for i in 0..ctx.lattice().len() {
        let x = f.x_of(f.ideal(i));
        for &u in &x {
            for w in f.masks() {
                if !x.contains(&ctx.z.mul(f.chis[w], u)) {
                    return fail(ctx.w("χ_W·χ_U ∉ 𝒳_I").f("χ_U", &ctx.z, u).set("W", pset(w)).ideal("I", f.ideal(i)));
                }
            }
        }
    }
    Ok(())
}

fn l59_16(ctx: &Ctx) -> Check {
    char_two(ctx)?;
    let f = fam(ctx)?;
    for i in ctx.proper() {
        let s = f.ideal(i);
        let x = f.x_of(s);
        for u in f.masks().filter(|&m| x.contains(&f.chis[m])) {
            for w in f.masks().filter(|&m| x.contains(&f.chis[m])) {
                if !ctx.ring_mode() && !has(s, f.chis[u & w]) {
                    continue;
                }
                if !x.contains(&add(&ctx.z, f.chis[u], f.chis[w])) {
                    return fail(ctx.w("χ_U + χ_W ∉ 𝒳_I").set("U", pset(u)).set("W", pset(w)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn l59_17(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for i in ctx.proper() {
        let x = f.x_of(f.ideal(i));
        for u in f.masks() {
            for w in f.masks() {
                let (a, b) = (f.chis[u], f.chis[w]);
                if x.contains(&ctx.z.mul(a, b)) && !x.contains(&a) && !x.contains(&b) {
                    return fail(ctx.w("χ_U·χ_W ∈ 𝒳_I with neither factor in 𝒳_I").set("U", pset(u)).set("W", pset(w)).ideal("I", f.ideal(i)));
                }
            }
        }
    }
    Ok(())
}

fn l59_18(ctx: &Ctx) -> Check {
    unit_add(ctx)?;
    require(ctx.flags().distributive, "Y is not distributive")?;
    let f = fam(ctx)?;
    let z = &ctx.z;
    for i in ctx.proper() {
        let s = f.ideal(i);
        for u in f.masks().filter(|&m| has(s, f.chis[m])) {
            for w in f.masks() {
                if add(z, f.chis[u], f.chis[w]) == z.theta() && !has(s, f.chis[w]) {
                    return fail(ctx.w("χ_U ∈ I, χ_U + χ_W = Θ, χ_W ∉ I").set("U", pset(u)).set("W", pset(w)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn l59_19(ctx: &Ctx) -> Check {
    char_two(ctx)?;
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    let z = &ctx.z;
    for i in ctx.proper() {
        let s = f.ideal(i);
        for v in f.masks() {
            for u in f.masks() {
                let (a, b) = (f.chis[v], f.chis[u]);
                if has(s, z.mul(a, b)) && has(s, add(z, a, b)) && v & u == 0 {
                    return fail(ctx.w("χ_V·χ_U, χ_V + χ_U ∈ I with V ∩ U = ∅").set("V", pset(v)).set("U", pset(u)).ideal("I", s));
                }
            }
        }
    }
    Ok(())
}

fn t21(ctx: &Ctx) -> Check {
    let fl = ctx.flags();
    require(fl.associative && fl.commutative, "· is not associative and commutative")?;
    let f = fam(ctx)?;
    let z = &ctx.z;
    let x = f.x_all();
    for &a in &x {
        if z.mul(a, a) != a {
            return fail(ctx.w("non-idempotent χ").f("χ", z, a));
        }
        for &b in &x {
            if !x.contains(&z.mul(a, b)) || z.mul(a, b) != z.mul(b, a) {
                return fail(ctx.w("𝒳 not closed or not commutative under ·").f("a", z, a).f("b", z, b));
            }
        }
    }
    let additive = char_two(ctx).is_ok() && fl.additive_associative && fl.additive_commutative;
    if additive {
        for &a in &x {
            if add(z, a, a) != z.theta() {
                return fail(ctx.w("χ + χ ≠ Θ").f("χ", z, a));
            }
            for &b in &x {
                if !x.contains(&add(z, a, b)) {
                    return fail(ctx.w("𝒳 not closed under +").f("a", z, a).f("b", z, b));
                }
            }
        }
        if fl.distributive {
            let sub = chi_subring(z).expect("unit checked");
            if !sub.iso_to_z2 {
                return fail(ctx.w("𝒳 is not isomorphic to C(Z,ℤ₂)"));
            }
        }
    }
    Ok(())
}

/// 𝒳_I as a subset of 𝒳: an ideal there, and prime.
fn x_prime_in_x(ctx: &Ctx, f: &Fam, s: &ElemSet) -> Check {
    let z = &ctx.z;
    let x = f.x_of(s);
    let all = f.x_all();
    for &a in &x {
        for &b in &all {
            if !x.contains(&z.mul(a, b)) || !x.contains(&z.mul(b, a)) {
                return fail(ctx.w("𝒳_I is not an ideal of 𝒳").f("a", z, a).f("b", z, b).ideal("I", s));
            }
        }
    }
    if x == all {
        return fail(ctx.w("𝒳_I = 𝒳 is not proper in 𝒳").ideal("I", s));
    }
    for &a in &all {
        for &b in &all {
            if x.contains(&z.mul(a, b)) && !x.contains(&a) && !x.contains(&b) {
                return fail(ctx.w("𝒳_I is not prime in 𝒳").f("a", z, a).f("b", z, b).ideal("I", s));
            }
        }
    }
    Ok(())
}

fn t22(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let z = &ctx.z;
    let fl = ctx.flags();
    let ring_part = char_two(ctx).is_ok() && fl.is_ring && ctx.ring_mode();
    for i in ctx.proper() {
        let s = f.ideal(i);
        let x = f.x_of(s);
        for &a in &x {
            for &b in &x {
                if !x.contains(&z.mul(a, b)) {
                    return fail(ctx.w("𝒳_I not closed under ·").ideal("I", s));
                }
                if ring_part && !x.contains(&add(z, a, b)) {
                    return fail(ctx.w("𝒳_I not closed under +").f("a", z, a).f("b", z, b).ideal("I", s));
                }
            }
        }
        x_prime_in_x(ctx, &f, s)?;
    }
    Ok(())
}

fn l60_1(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    for (a, b) in ctx.ideal_pairs() {
        if f.ideal(a).is_subset(f.ideal(b)) && !f.x_of(f.ideal(a)).is_subset(&f.x_of(f.ideal(b))) {
            return fail(ctx.w("𝒳_I1 ⊄ 𝒳_I2").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
    }
    Ok(())
}

fn l60_2(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    meet_law(&f, "𝒳", |i| f.in_p(i), |s| f.x_of(s))
}

fn l60_3(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    union_law(&f, "𝒳", |i| f.in_p(i), |s| f.x_of(s))
}

fn l60_4(ctx: &Ctx) -> Check {
    unit_add(ctx)?;
    let f = fam(ctx)?;
    let theta = ctx.z.theta();
    for i in 0..ctx.lattice().len() {
        let x = f.x_of(f.ideal(i));
        let shifted: BTreeSet<Elem> = x.iter().map(|&a| add(&ctx.z, a, theta)).collect();
        if shifted != x {
            return fail(ctx.w("𝒳_I + 𝔒 ≠ 𝒳_I").ideal("I", f.ideal(i)));
        }
    }
    Ok(())
}

fn l60_5(ctx: &Ctx) -> Check {
    let f = fam(ctx)?;
    let theta = ctx.z.theta();
    for i in 0..ctx.lattice().len() {
        let prod: BTreeSet<Elem> = f.x_of(f.ideal(i)).iter().map(|&a| ctx.z.mul(a, theta)).collect();
        if prod != BTreeSet::from([theta]) {
            return fail(ctx.w("𝒳_I · 𝔒 ≠ 𝔒").ideal("I", f.ideal(i)));
        }
    }
    Ok(())
}

/// {a + b} and the additive closure of {a·b}.
fn x_sum_prod(z: &FunctionRing, a: &BTreeSet<Elem>, b: &BTreeSet<Elem>) -> (BTreeSet<Elem>, BTreeSet<Elem>) {
    let sum: BTreeSet<Elem> = a.iter().flat_map(|&p| b.iter().map(move |&q| add(z, p, q))).collect();
    let mut prod: BTreeSet<Elem> = a.iter().flat_map(|&p| b.iter().map(move |&q| z.mul(p, q))).collect();
    prod.insert(z.theta());
    loop {
        let more: Vec<Elem> = prod
            .iter()
            .flat_map(|&p| prod.iter().map(move |&q| add(z, p, q)))
            .filter(|s| !prod.contains(s))
            .collect();
        if more.is_empty() {
            break;
        }
        prod.extend(more);
    }
    (sum, prod)
}

fn ideal_of_x(z: &FunctionRing, all: &BTreeSet<Elem>, s: &BTreeSet<Elem>) -> bool {
    s.contains(&z.theta())
        && s.iter().all(|&a| s.iter().all(|&b| s.contains(&add(z, a, b))))
        && s.iter().all(|&a| all.iter().all(|&b| s.contains(&z.mul(a, b)) && s.contains(&z.mul(b, a))))
}

fn boolean_ring(ctx: &Ctx) -> Check {
    char_two(ctx)?;
    require(ctx.flags().is_ring, "Y is not a ring")?;
    ctx.need_ring_mode()
}

fn l60_6(ctx: &Ctx) -> Check {
    boolean_ring(ctx)?;
    let f = fam(ctx)?;
    let all = f.x_all();
    for (a, b) in ctx.ideal_pairs() {
        let (xa, xb) = (f.x_of(f.ideal(a)), f.x_of(f.ideal(b)));
        let (sum, prod) = x_sum_prod(&ctx.z, &xa, &xb);
        if !ideal_of_x(&ctx.z, &all, &sum) {
            return fail(ctx.w("𝒳_I1 + 𝒳_I2 is not an ideal of 𝒳").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
        if !ideal_of_x(&ctx.z, &all, &prod) {
            return fail(ctx.w("𝒳_I1·𝒳_I2 is not an ideal of 𝒳").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
    }
    Ok(())
}

fn in_frak_x(f: &Fam, s: &BTreeSet<Elem>) -> bool {
    f.pfam.iter().any(|&i| f.x_of(f.ideal(i)) == *s)
}

fn l60_7(ctx: &Ctx) -> Check {
    boolean_ring(ctx)?;
    let f = fam(ctx)?;
    for i in 0..ctx.lattice().len() {
        x_prime_in_x(ctx, &f, f.ideal(i))?;
    }
    let flags = ctx.prime_flags();
    for (a, b) in ctx.ideal_pairs() {
        let (xa, xb) = (f.x_of(f.ideal(a)), f.x_of(f.ideal(b)));
        let (sum, _) = x_sum_prod(&ctx.z, &xa, &xb);
        if !sum.is_subset(&f.x_all()) {
            return fail(ctx.w("𝒳_I1 + 𝒳_I2 ⊄ 𝒳").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
        let j = join(&ctx.z, ctx.cfg, f.ideal(a), f.ideal(b));
        if f.find(&j).is_some_and(|k| flags[k]) && !in_frak_x(&f, &sum) {
            return fail(ctx.w("I1 + I2 prime but 𝒳_I1 + 𝒳_I2 ∉ 𝔛").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
    }
    Ok(())
}

fn l60_8(ctx: &Ctx) -> Check {
    char_two(ctx)?;
    ctx.need_ring_mode()?;
    let f = fam(ctx)?;
    for (a, b) in ctx.ideal_pairs() {
        let (xa, xb) = (f.x_of(f.ideal(a)), f.x_of(f.ideal(b)));
        let (sum, _) = x_sum_prod(&ctx.z, &xa, &xb);
        let j = join(&ctx.z, ctx.cfg, f.ideal(a), f.ideal(b));
        if !sum.is_subset(&f.x_of(&j)) {
            return fail(ctx.w("𝒳_I1 + 𝒳_I2 ⊄ 𝒳_{I1+I2}").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
    }
    Ok(())
}

fn l60_9(ctx: &Ctx) -> Check {
    boolean_ring(ctx)?;
    let f = fam(ctx)?;
    let flags = ctx.prime_flags();
    for (a, b) in ctx.ideal_pairs() {
        let (xa, xb) = (f.x_of(f.ideal(a)), f.x_of(f.ideal(b)));
        let (_, prod) = x_sum_prod(&ctx.z, &xa, &xb);
        if !prod.is_subset(&f.x_all()) {
            return fail(ctx.w("𝒳_I1·𝒳_I2 ⊄ 𝒳").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
        let m = f.meet(a, b);
        if f.find(&m).is_some_and(|k| flags[k]) && !in_frak_x(&f, &prod) {
            return fail(ctx.w("I1 ∩ I2 prime but 𝒳_I1·𝒳_I2 ∉ 𝔛").ideal("I1", f.ideal(a)).ideal("I2", f.ideal(b)));
        }
    }
    Ok(())
}

fn t23(ctx: &Ctx) -> Check {
    ctx.need_ring_mode()?;
    ctx.unit()?;
    ctx.quad()?;
    let z = &ctx.z;
    for g in z.elements() {
        if complement_of(z, g).expect("addition and unit checked").is_none() {
            return Err(Outcome::Unmet(format!("{} has no complement", z.show(g))));
        }
    }
    let top = ctx.lattice().top();
    let flags = ctx.prime_flags();
    for i1 in ctx.primes() {
        for i2 in 0..ctx.lattice().len() {
            let j = join(z, ctx.cfg, ctx.ideal(i1), ctx.ideal(i2));
            let Some(k) = ctx.lattice().find(&j) else { continue };
            if k != top && !flags[k] {
                let v = is_prime_set(z, &j).expect("proper");
                let mut w = ctx.w("I1 + I2 ≠ C is not prime").ideal("I1", ctx.ideal(i1)).ideal("I2", ctx.ideal(i2));
                if let Some((a, b)) = v.witness {
                    w = w.f("f1", z, a).f("f2", z, b);
                }
                return fail(w);
            }
        }
    }
    Ok(())
}

/// Pointwise `Id − f`.
fn id_minus(ctx: &Ctx, f: Elem) -> Option<Elem> {
    let z = &ctx.z;
    let one = ctx.y().unit()?;
    let vals: Option<Vec<Val>> =
        z.values(f).iter().map(|&v| ctx.y().neg(v).and_then(|n| ctx.y().add(one, n))).collect();
    Some(z.encode(&vals?))
}

fn l61(ctx: &Ctx) -> Check {
    let fl = ctx.flags();
    require(fl.associative && fl.additive_associative && fl.distributive, "operations are not associative and distributive")?;
    ctx.unit()?;
    ctx.quad()?;
    let z = &ctx.z;
    let id = z.id().expect("unit checked");
    let idem: Vec<Elem> = z.elements().filter(|&e| z.mul(e, e) == e).collect();
    for &f1 in &idem {
        for &f2 in &idem {
            let p = z.mul(f1, f2);
            if p != z.mul(f2, f1) {
                continue;
            }
            let Some(g) = id_minus(ctx, p) else { continue };
            if z.add(p, g) != Some(id) || z.mul(p, g) != z.theta() {
                return fail(ctx.w("Id − f1·f2 is not a complement of f1·f2").f("f1", z, f1).f("f2", z, f2));
            }
        }
    }
    Ok(())
}

fn sub(ctx: &Ctx, a: Elem, b: Elem) -> Elem {
    let z = &ctx.z;
    let vals: Vec<Val> = z
        .values(a)
        .iter()
        .zip(z.values(b))
        .map(|(&x, &y)| ctx.y().add(x, ctx.y().neg(y).expect("ring")).expect("ring"))
        .collect();
    z.encode(&vals)
}

fn l62(ctx: &Ctx) -> Check {
    require(ctx.flags().is_ring, "Y is not a ring")?;
    let f = fam(ctx)?;
    let z = &ctx.z;
    for u in f.masks() {
        for w in f.masks() {
            let c = |m: usize| f.chis[m];
            let cc = |m: usize| f.chis[f.full - m];
            let lhs = sub(ctx, z.mul(cc(u), cc(w)), cc(u | w));
            let rhs = sub(ctx, c(u | w), c(u & w));
            if lhs != rhs {
                return fail(ctx.w("χ_Uᶜ·χ_Wᶜ − (χ_U·χ_W)ᶜ ≠ χ_{U∪W} − χ_{U∩W}").set("U", pset(u)).set("W", pset(w)));
            }
        }
    }
    Ok(())
}
