//! *-pairs `(≤_l, ≤_r)` of preorders on a semigroup, the relations derived
//! from them, and the conditions under which a pair is induced by a
//! semigroup of straight left quotients.
//!
//! Right-handed conditions are evaluated as the left-handed ones on the
//! opposite semigroup with the two preorders swapped. Witnesses are element
//! indices of the pair's semigroup.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::green::{self, GreenData};
use crate::orders::Side;
use crate::relation::{Partition, RelationMatrix};
use crate::semigroup::{reversibility_failure, FiniteSemigroup, SubSemigroup};
use crate::starred::{self, StarredData};
use crate::verdict::Verdict;

#[derive(Clone, Debug)]
pub struct StarPair {
    s: FiniteSemigroup,
    leq_l: RelationMatrix,
    leq_r: RelationMatrix,
    lp_rel: RelationMatrix,
    rp_rel: RelationMatrix,
    hp_rel: RelationMatrix,
    dp_rel: RelationMatrix,
    pub lp: Partition,
    pub rp: Partition,
    pub hp: Partition,
    /// `D′`, the join of `L′` and `R′`.
    pub dp: Partition,
    gs: Vec<bool>,
    starred: StarredData,
}

impl StarPair {
    /// Validates the *-pair axioms and derives `L′`, `R′`, `H′`, `D′`, `G(S)`.
    pub fn new(s: FiniteSemigroup, leq_l: RelationMatrix, leq_r: RelationMatrix) -> Result<Self> {
        let n = s.order();
        if leq_l.len() != n || !leq_l.is_preorder() {
            return Err(Error::NotAPreorder("<=_l"));
        }
        if leq_r.len() != n || !leq_r.is_preorder() {
            return Err(Error::NotAPreorder("<=_r"));
        }
        if let Some((a, b, x)) = starred::compatibility_failure(&s, &leq_l, false) {
            return Err(Error::AxiomViolated { axiom: "<=_l right compatible", witness: vec![a, b, x] });
        }
        if let Some((a, b, x)) = starred::compatibility_failure(&s, &leq_r, true) {
            return Err(Error::AxiomViolated { axiom: "<=_r left compatible", witness: vec![a, b, x] });
        }
        let st = StarredData::new(&s);
        if let Some((a, b)) = leq_l.first_outside(&st.leq_lstar) {
            return Err(Error::AxiomViolated { axiom: "<=_l contained in <=_L*", witness: vec![a, b] });
        }
        if let Some((a, b)) = leq_r.first_outside(&st.leq_rstar) {
            return Err(Error::AxiomViolated { axiom: "<=_r contained in <=_R*", witness: vec![a, b] });
        }
        Ok(Self::derive(s, leq_l, leq_r, st))
    }

    fn derive(s: FiniteSemigroup, leq_l: RelationMatrix, leq_r: RelationMatrix, starred: StarredData) -> Self {
        let lp_rel = leq_l.symmetric_part();
        let rp_rel = leq_r.symmetric_part();
        let hp_rel = lp_rel.intersection(&rp_rel);
        let dp_rel = lp_rel.union(&rp_rel).reflexive_transitive_closure();
        let gs = s.elements().map(|a| hp_rel.contains(a, s.mul(a, a))).collect();
        StarPair {
            lp: lp_rel.classes(),
            rp: rp_rel.classes(),
            hp: hp_rel.classes(),
            dp: dp_rel.classes(),
            s,
            leq_l,
            leq_r,
            lp_rel,
            rp_rel,
            hp_rel,
            dp_rel,
            gs,
            starred,
        }
    }

    /// `P* = (≤_L*, ≤_R*)`.
    pub fn starred_pair(s: &FiniteSemigroup) -> Self {
        let st = StarredData::new(s);
        Self::derive(s.clone(), st.leq_lstar.clone(), st.leq_rstar.clone(), st)
    }

    /// Both preorders equality.
    pub fn equality_pair(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        Self::derive(s.clone(), RelationMatrix::identity(n), RelationMatrix::identity(n), StarredData::new(s))
    }

    /// The pair for `S` induced by its parent `Q`, indexed locally in `S`.
    pub fn induced(sub: &SubSemigroup<'_>) -> Result<Self> {
        let green = GreenData::new(sub.parent());
        Self::induced_with(sub, &green)
    }

    /// As [`StarPair::induced`], reusing Green's data of the parent.
    pub fn induced_with(sub: &SubSemigroup<'_>, green: &GreenData) -> Result<Self> {
        let m = sub.members();
        Self::new(sub.to_semigroup(), green.leq_l.restrict(m), green.leq_r.restrict(m))
    }

    /// The pair `(≤_r, ≤_l)` on the opposite semigroup.
    pub fn dual(&self) -> StarPair {
        let st = &self.starred;
        let swapped = StarredData::new(&self.s.opposite());
        debug_assert_eq!(swapped.leq_lstar, st.leq_rstar);
        Self::derive(self.s.opposite(), self.leq_r.clone(), self.leq_l.clone(), swapped)
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.s
    }

    pub fn leq_l(&self) -> &RelationMatrix {
        &self.leq_l
    }

    pub fn leq_r(&self) -> &RelationMatrix {
        &self.leq_r
    }

    pub fn starred(&self) -> &StarredData {
        &self.starred
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.lp_rel.contains(a, b)
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.rp_rel.contains(a, b)
    }

    pub fn h_related(&self, a: usize, b: usize) -> bool {
        self.hp_rel.contains(a, b)
    }

    pub fn d_related(&self, a: usize, b: usize) -> bool {
        self.dp_rel.contains(a, b)
    }

    pub fn d_relation(&self) -> &RelationMatrix {
        &self.dp_rel
    }

    /// `a ∈ G(S)`, i.e. `a H′ a²`.
    pub fn in_g(&self, a: usize) -> bool {
        self.gs[a]
    }

    pub fn g_set(&self) -> Vec<usize> {
        self.s.elements().filter(|&a| self.gs[a]).collect()
    }

    fn in_sc(&self, a: usize) -> bool {
        self.starred.is_square_cancellable(a)
    }

    // ---- embeddability ------------------------------------------------

    pub fn ei(&self) -> Verdict {
        let lr = self.lp_rel.compose(&self.rp_rel);
        let rl = self.rp_rel.compose(&self.lp_rel);
        Verdict::from_failure("Ei", lr.first_difference(&rl).map(|(a, b)| vec![a, b]))
    }

    fn eii_left(&self, clause: &'static str) -> Verdict {
        let s = &self.s;
        for b in s.elements() {
            for c in s.elements() {
                let rhs = s.elements().any(|d| self.l_related(b, s.mul(d, c)));
                if self.leq_l.contains(b, c) != rhs {
                    return Verdict::fail(clause, &[b, c]);
                }
            }
        }
        Verdict::Holds
    }

    pub fn eiii(&self) -> Verdict {
        for (part, clause) in [(&self.lp, "Eiii (L'-class)"), (&self.rp, "Eiii (R'-class)")] {
            for class in part.classes() {
                if !class.iter().any(|&x| self.gs[x]) {
                    return Verdict::fail(clause, &[class[0]]);
                }
            }
        }
        Verdict::Holds
    }

    fn ev_left(&self, clause: &'static str) -> Verdict {
        let s = &self.s;
        for a in s.elements().filter(|&a| self.gs[a]) {
            for b in self.below_l(a) {
                if !self.r_related(s.mul(b, a), b) {
                    return Verdict::fail(clause, &[a, b]);
                }
            }
        }
        Verdict::Holds
    }

    fn below_l(&self, a: usize) -> Vec<usize> {
        self.s.elements().filter(|&b| self.leq_l.contains(b, a)).collect()
    }

    fn evi_left(&self, clause: &'static str) -> Verdict {
        let s = &self.s;
        for a in s.elements().filter(|&a| self.gs[a]) {
            let below = self.below_l(a);
            for &b in &below {
                for &c in below.iter().filter(|&&c| c > b) {
                    if s.mul(b, a) == s.mul(c, a) {
                        return Verdict::fail(clause, &[a, b, c]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    fn evii_left(&self, clause: &'static str) -> Verdict {
        let s = &self.s;
        for a in s.elements().filter(|&a| self.gs[a]) {
            let below = self.below_l(a);
            for &b in &below {
                for &c in &below {
                    if self.l_related(s.mul(b, a), s.mul(c, a)) && !self.l_related(b, c) {
                        return Verdict::fail(clause, &[a, b, c]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    pub fn eii(&self, side: Side) -> Verdict {
        match side {
            Side::Left => self.eii_left("Eii(l)"),
            Side::Right => self.dual().eii_left("Eii(r)"),
        }
    }

    pub fn ev(&self, side: Side) -> Verdict {
        match side {
            Side::Left => self.ev_left("Ev(l)"),
            Side::Right => self.dual().ev_left("Ev(r)"),
        }
    }

    pub fn evi(&self, side: Side) -> Verdict {
        match side {
            Side::Left => self.evi_left("Evi(l)"),
            Side::Right => self.dual().evi_left("Evi(r)"),
        }
    }

    pub fn evii(&self, side: Side) -> Verdict {
        match side {
            Side::Left => self.evii_left("Evii(l)"),
            Side::Right => self.dual().evii_left("Evii(r)"),
        }
    }

    pub fn check_embeddable(&self) -> ConditionReport {
        let dual = self.dual();
        let mut r = ConditionReport::default();
        r.set(Condition::StarAxioms, Verdict::Holds);
        r.set(Condition::Ei, self.ei());
        r.set(Condition::EiiL, self.eii_left("Eii(l)"));
        r.set(Condition::EiiR, dual.eii_left("Eii(r)"));
        r.set(Condition::Eiii, self.eiii());
        r.set(Condition::EvL, self.ev_left("Ev(l)"));
        r.set(Condition::EvR, dual.ev_left("Ev(r)"));
        r.set(Condition::EviL, self.evi_left("Evi(l)"));
        r.set(Condition::EviR, dual.evi_left("Evi(r)"));
        r.set(Condition::EviiL, self.evii_left("Evii(l)"));
        r.set(Condition::EviiR, dual.evii_left("Evii(r)"));
        r
    }

    pub fn is_embeddable(&self) -> bool {
        self.check_embeddable().all_hold(&Condition::EMBEDDABLE)
    }

    // ---- the G conditions ----------------------------------------------

    /// `S(S) = G(S)`.
    pub fn gi(&self) -> Verdict {
        let first = self.s.elements().find(|&a| self.in_sc(a) != self.gs[a]);
        Verdict::from_failure("Gi", first.map(|a| vec![a]))
    }

    /// `H′_a` right reversible (left reversible when `left`) for every
    /// `a ∈ S(S)`. Classes that are not closed are reported as not
    /// applicable unless some closed class already fails.
    pub fn gii(&self, left: bool) -> Verdict {
        let clause = if left { "Gii'" } else { "Gii" };
        let s = &self.s;
        let mut unclosed = false;
        let mut seen = vec![false; self.hp.num_classes()];
        for a in s.elements().filter(|&a| self.in_sc(a)) {
            let id = self.hp.class_of(a);
            if core::mem::replace(&mut seen[id], true) {
                continue;
            }
            let class = self.hp.class(id);
            let closed = class.iter().all(|&x| class.iter().all(|&y| self.hp.class_of(s.mul(x, y)) == id));
            if !closed {
                unclosed = true;
                continue;
            }
            if let Some((x, y)) = reversibility_failure(s, class, left) {
                return Verdict::fail(clause, &[a, x, y]);
            }
        }
        if unclosed {
            Verdict::NotApplicable("H'_a is not a subsemigroup")
        } else {
            Verdict::Holds
        }
    }

    /// `b ≤_l c` iff `hb = kc` for some `h ∈ S(S)`, `k ∈ S` with
    /// `b ≤_r h R′ k`.
    pub fn giii(&self) -> Verdict {
        let s = &self.s;
        for b in s.elements() {
            for c in s.elements() {
                let rhs = s.elements().filter(|&h| self.in_sc(h) && self.leq_r.contains(b, h)).any(|h| {
                    let hb = s.mul(h, b);
                    s.elements().any(|k| self.r_related(h, k) && s.mul(k, c) == hb)
                });
                if self.leq_l.contains(b, c) != rhs {
                    return Verdict::fail("Giii", &[b, c]);
                }
            }
        }
        Verdict::Holds
    }

    /// The existential condition on `(a, b, c)` with `a, c ∈ S(S)`,
    /// `a R′ b`; returns `(u, h, v, k)`.
    pub fn giv_witness(&self, a: usize, b: usize, c: usize) -> Option<(usize, usize, usize, usize)> {
        let s = &self.s;
        let bc = s.mul(b, c);
        let a2 = s.mul(a, a);
        let c2 = s.mul(c, c);
        let kbc = |k: usize| s.mul(k, bc);
        for u in s.elements() {
            if !self.in_sc(u) || !self.leq_r.contains(u, a) || !self.r_related(s.mul(a, u), bc) {
                continue;
            }
            let ua = s.mul(u, a);
            let vs: Vec<usize> =
                s.elements().filter(|&v| self.r_related(v, u) && self.leq_l.contains(v, c)).collect();
            if vs.is_empty() {
                continue;
            }
            for h in s.elements().filter(|&h| self.in_sc(h) && self.r_related(h, u)) {
                let hua = s.mul(h, ua);
                for k in s.elements() {
                    if !self.r_related(k, u) || !self.leq_l.contains(k, a) || s.mul(k, a2) != hua {
                        continue;
                    }
                    let target = kbc(k);
                    if let Some(&v) = vs.iter().find(|&&v| s.product(&[h, v, c2]) == target) {
                        return Some((u, h, v, k));
                    }
                }
            }
        }
        None
    }

    pub fn giv(&self) -> Verdict {
        let s = &self.s;
        for a in s.elements().filter(|&a| self.in_sc(a)) {
            for b in s.elements().filter(|&b| self.r_related(a, b)) {
                for c in s.elements().filter(|&c| self.in_sc(c)) {
                    if self.giv_witness(a, b, c).is_none() {
                        return Verdict::fail("Giv", &[a, b, c]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    pub fn check_g_conditions(&self) -> ConditionReport {
        let mut r = ConditionReport::default();
        r.set(Condition::Gi, self.gi());
        r.set(Condition::Gii, self.gii(false));
        r.set(Condition::GiiPrime, self.gii(true));
        r.set(Condition::Giii, self.giii());
        r.set(Condition::Giv, self.giv());
        r
    }

    /// `G(S) = S`.
    pub fn condition_gi_all(&self) -> Verdict {
        Verdict::from_failure("GI", self.s.elements().find(|&a| !self.gs[a]).map(|a| vec![a]))
    }

    /// For `a, h ∈ G(S)`: `a R′ h` or `a L′ h` implies `a H′ h`.
    pub fn condition_i(&self) -> Verdict {
        let g = self.g_set();
        for &a in &g {
            for &h in &g {
                if (self.r_related(a, h) || self.l_related(a, h)) && !self.h_related(a, h) {
                    return Verdict::fail("I", &[a, h]);
                }
            }
        }
        Verdict::Holds
    }

    /// Every condition slot of the report.
    pub fn full_report(&self) -> ConditionReport {
        let mut r = self.check_embeddable();
        for (c, v) in self.check_g_conditions().entries {
            r.set(c, v);
        }
        r.set(Condition::GI, self.condition_gi_all());
        r.set(Condition::I, self.condition_i());
        match self.j_structure() {
            Ok(j) => {
                // descending chains of R′- or L′-classes are finite here
                r.set(Condition::MStarR, Verdict::Holds);
                r.set(Condition::MStarL, Verdict::Holds);
                r.set(Condition::JStable, self.j_stability(&j));
            }
            Err(_) => {
                for c in [Condition::MStarR, Condition::MStarL, Condition::JStable] {
                    r.set(c, Verdict::NotApplicable("needs Ei, Eii, Eiii, Ev"));
                }
            }
        }
        r
    }

    // ---- consequences of the conditions ---------------------------------

    fn require(&self, conds: &[Condition]) -> Result<()> {
        let report = self.report_for(conds);
        match conds.iter().find(|&&c| !report.get(c).is_some_and(Verdict::holds)) {
            None => Ok(()),
            Some(c) => Err(Error::PreconditionFailed(format!("{} does not hold", c.name()))),
        }
    }

    fn report_for(&self, conds: &[Condition]) -> ConditionReport {
        let mut r = ConditionReport::default();
        let dual = if conds.iter().any(|c| c.needs_dual()) { Some(self.dual()) } else { None };
        let d = || dual.as_ref().expect("dual computed");
        for &c in conds {
            let v = match c {
                Condition::StarAxioms => Verdict::Holds,
                Condition::Ei => self.ei(),
                Condition::EiiL => self.eii_left("Eii(l)"),
                Condition::EiiR => d().eii_left("Eii(r)"),
                Condition::Eiii => self.eiii(),
                Condition::EvL => self.ev_left("Ev(l)"),
                Condition::EvR => d().ev_left("Ev(r)"),
                Condition::EviL => self.evi_left("Evi(l)"),
                Condition::EviR => d().evi_left("Evi(r)"),
                Condition::EviiL => self.evii_left("Evii(l)"),
                Condition::EviiR => d().evii_left("Evii(r)"),
                Condition::Gi => self.gi(),
                Condition::Gii => self.gii(false),
                Condition::GiiPrime => self.gii(true),
                Condition::Giii => self.giii(),
                Condition::Giv => self.giv(),
                Condition::GI => self.condition_gi_all(),
                Condition::I => self.condition_i(),
                Condition::MStarR | Condition::MStarL | Condition::JStable => {
                    return self.full_report();
                }
            };
            r.set(c, v);
        }
        r
    }

    /// Whether every listed condition holds.
    pub fn satisfies(&self, conds: &[Condition]) -> bool {
        self.require(conds).is_ok()
    }

    /// `(h, k)` with `h ∈ G(S)`, `h R′ k R′ b` and `hb = kc`, searched in
    /// index order. Any witness found is checked to force `b ≤_l c`.
    pub fn left_witness(&self, b: usize, c: usize) -> Result<Option<(usize, usize)>> {
        self.require(&Condition::WITNESS_HYPOTHESES)?;
        Ok(self.left_witness_search(b, c))
    }

    fn left_witness_search(&self, b: usize, c: usize) -> Option<(usize, usize)> {
        let s = &self.s;
        for h in s.elements().filter(|&h| self.gs[h] && self.r_related(h, b)) {
            let hb = s.mul(h, b);
            if let Some(k) = s.elements().find(|&k| self.r_related(k, b) && s.mul(k, c) == hb) {
                return Some((h, k));
            }
        }
        None
    }

    /// Both directions of the witness characterisation of `≤_l`.
    pub fn left_witness_check(&self) -> Verdict {
        if self.require(&Condition::WITNESS_HYPOTHESES).is_err() {
            return Verdict::NotApplicable("needs Ei, Eii, Eiii, Ev, Evi(l), Gii");
        }
        let s = &self.s;
        for b in s.elements() {
            for c in s.elements() {
                let found = self.left_witness_search(b, c);
                if found.is_some() != self.leq_l.contains(b, c) {
                    let mut w = vec![b, c];
                    if let Some((h, k)) = found {
                        w.extend([h, k]);
                    }
                    return Verdict::fail("b <=_l c iff hb = kc with h R' k R' b", &w);
                }
            }
        }
        Verdict::Holds
    }

    /// `b ≤_l c` iff `hb = kc` with `h ∈ G(S)`, `b ≤_r h R′ k`.
    pub fn weak_witness_check(&self) -> Verdict {
        if self.require(&Condition::WITNESS_HYPOTHESES).is_err() {
            return Verdict::NotApplicable("needs Ei, Eii, Eiii, Ev, Evi(l), Gii");
        }
        let s = &self.s;
        for b in s.elements() {
            for c in s.elements() {
                let rhs = s.elements().filter(|&h| self.gs[h] && self.leq_r.contains(b, h)).any(|h| {
                    let hb = s.mul(h, b);
                    s.elements().any(|k| self.r_related(h, k) && s.mul(k, c) == hb)
                });
                if rhs != self.leq_l.contains(b, c) {
                    return Verdict::fail("b <=_l c iff hb = kc with b <=_r h R' k", &[b, c]);
                }
            }
        }
        Verdict::Holds
    }

    /// Under (Ev): `ba H′ b` when `a ∈ G(S)`, `a L′ b`; `ab H′ b` when
    /// `a R′ b`; `H′_a` is a subsemigroup inside `G(S)`.
    pub fn h_prime_product_check(&self) -> Verdict {
        if self.require(&[Condition::EvL, Condition::EvR]).is_err() {
            return Verdict::NotApplicable("needs Ev");
        }
        let s = &self.s;
        for a in s.elements().filter(|&a| self.gs[a]) {
            for b in s.elements() {
                if self.l_related(a, b) && !self.h_related(s.mul(b, a), b) {
                    return Verdict::fail("a L' b implies ba H' b", &[a, b]);
                }
                if self.r_related(a, b) && !self.h_related(s.mul(a, b), b) {
                    return Verdict::fail("a R' b implies ab H' b", &[a, b]);
                }
            }
            let class = self.hp.class_containing(a);
            for &x in class {
                if !self.gs[x] {
                    return Verdict::fail("H'_a inside G(S)", &[a, x]);
                }
                for &y in class {
                    if !self.h_related(s.mul(x, y), a) {
                        return Verdict::fail("H'_a closed", &[a, x, y]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    /// Under (Ev): `u L′ s R′ v` with `s ∈ G(S)` implies `u R′ uv L′ v`.
    pub fn eggbox_product_check(&self) -> Verdict {
        if self.require(&[Condition::EvL, Condition::EvR]).is_err() {
            return Verdict::NotApplicable("needs Ev");
        }
        let s = &self.s;
        for x in s.elements().filter(|&x| self.gs[x]) {
            for u in s.elements().filter(|&u| self.l_related(u, x)) {
                for v in s.elements().filter(|&v| self.r_related(x, v)) {
                    let uv = s.mul(u, v);
                    if !self.r_related(u, uv) || !self.l_related(uv, v) {
                        return Verdict::fail("u L' s R' v implies u R' uv L' v", &[u, x, v]);
                    }
                }
            }
        }
        Verdict::Holds
    }

    /// Under (Eii): for `q ∈ G(S)`, `q ≤_r p` implies `qp R′ q` and
    /// `q ≤_l p` implies `pq L′ q`.
    pub fn absorption_check(&self) -> Verdict {
        if self.require(&[Condition::EiiL, Condition::EiiR]).is_err() {
            return Verdict::NotApplicable("needs Eii");
        }
        let s = &self.s;
        for q in s.elements().filter(|&q| self.gs[q]) {
            for p in s.elements() {
                if self.leq_r.contains(q, p) && !self.r_related(s.mul(q, p), q) {
                    return Verdict::fail("q <=_r p implies qp R' q", &[q, p]);
                }
                if self.leq_l.contains(q, p) && !self.l_related(s.mul(p, q), q) {
                    return Verdict::fail("q <=_l p implies pq L' q", &[q, p]);
                }
            }
        }
        Verdict::Holds
    }

    /// The hypotheses of the witness lemma force (Evii)(l).
    pub fn evii_redundancy_check(&self) -> Verdict {
        if self.require(&Condition::WITNESS_HYPOTHESES).is_err() {
            return Verdict::NotApplicable("needs Ei, Eii, Eiii, Ev, Evi(l), Gii");
        }
        self.evii_left("Evii(l)")
    }

    // ---- J′ structure ----------------------------------------------------

    pub fn j_structure(&self) -> Result<JStructure> {
        self.require(&Condition::J_HYPOTHESES)?;
        let s = &self.s;
        let n = s.order();
        let composed = self.lp_rel.compose(&self.rp_rel);
        let composed_equal = composed == self.dp_rel;
        let mut leq_j = RelationMatrix::empty(n);
        for b in s.elements() {
            let mut hit = vec![false; self.dp.num_classes()];
            for x in s.elements() {
                let xb = s.mul(x, b);
                for y in s.elements() {
                    hit[self.dp.class_of(s.mul(xb, y))] = true;
                }
            }
            for a in s.elements().filter(|&a| hit[self.dp.class_of(a)]) {
                leq_j.insert(a, b);
            }
        }
        let jp_rel = leq_j.symmetric_part();
        Ok(JStructure { composed_equal, jp: jp_rel.classes(), jp_rel, leq_j })
    }

    /// `J′(b)` as a mask.
    pub fn j_ideal(&self, j: &JStructure, b: usize) -> Vec<bool> {
        self.s.elements().map(|s| j.leq_j.contains(s, b)).collect()
    }

    /// `I′(b) = {s : s <_j b}` as a mask.
    pub fn i_ideal(&self, j: &JStructure, b: usize) -> Vec<bool> {
        self.s.elements().map(|s| j.leq_j.contains(s, b) && !j.leq_j.contains(b, s)).collect()
    }

    /// The Rees quotient `J′(b)/I′(b)` and the elements kept from `S`.
    pub fn principal_factor(&self, j: &JStructure, b: usize) -> (FiniteSemigroup, Vec<usize>) {
        self.s.rees_quotient(&self.j_ideal(j, b), &self.i_ideal(j, b))
    }

    /// `D′ = L′∘R′`, `J′(b)` an ideal containing `b`, `≤_j` a preorder,
    /// `D′ ⊆ J′`, and `I′(b)` empty or an ideal.
    pub fn j_structure_check(&self) -> Verdict {
        let Ok(j) = self.j_structure() else {
            return Verdict::NotApplicable("needs Ei, Eii, Eiii, Ev");
        };
        let s = &self.s;
        if !j.composed_equal {
            return Verdict::fail("D' = L' o R'", &[]);
        }
        if let Some((a, b, c)) = j.leq_j.transitivity_violation() {
            return Verdict::fail("<=_j transitive", &[a, b, c]);
        }
        if let Some(b) = s.elements().find(|&b| !j.leq_j.contains(b, b)) {
            return Verdict::fail("<=_j reflexive", &[b]);
        }
        for b in s.elements() {
            for (mask, clause) in [(self.j_ideal(&j, b), "J'(b) is an ideal"), (self.i_ideal(&j, b), "I'(b) is an ideal")] {
                for x in s.elements().filter(|&x| mask[x]) {
                    if let Some(t) = s.elements().find(|&t| !mask[s.mul(t, x)] || !mask[s.mul(x, t)]) {
                        return Verdict::fail(clause, &[b, x, t]);
                    }
                }
            }
        }
        if let Some((a, b)) = self.dp_rel.first_outside(&j.jp_rel) {
            return Verdict::fail("D' inside J'", &[a, b]);
        }
        Verdict::Holds
    }

    /// `a J′ ab ⇒ a R′ ab` and `a J′ ba ⇒ a L′ ba`.
    pub fn j_stability(&self, j: &JStructure) -> Verdict {
        let s = &self.s;
        for a in s.elements() {
            for b in s.elements() {
                let ab = s.mul(a, b);
                if j.jp_rel.contains(a, ab) && !self.r_related(a, ab) {
                    return Verdict::fail("a J' ab implies a R' ab", &[a, b, ab]);
                }
                let ba = s.mul(b, a);
                if j.jp_rel.contains(a, ba) && !self.l_related(a, ba) {
                    return Verdict::fail("a J' ba implies a L' ba", &[a, b, ba]);
                }
            }
        }
        Verdict::Holds
    }
}

/// `D′`-derived two-sided structure of a pair satisfying (Ei), (Eii),
/// (Eiii) and (Ev).
#[derive(Clone, Debug)]
pub struct JStructure {
    /// Whether the join `D′` equals `L′∘R′`.
    pub composed_equal: bool,
    pub leq_j: RelationMatrix,
    pub jp_rel: RelationMatrix,
    pub jp: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    StarAxioms,
    Ei,
    EiiL,
    EiiR,
    Eiii,
    EvL,
    EvR,
    EviL,
    EviR,
    EviiL,
    EviiR,
    Gi,
    Gii,
    GiiPrime,
    Giii,
    Giv,
    GI,
    I,
    MStarR,
    MStarL,
    JStable,
}

impl Condition {
    pub const ALL: [Condition; 21] = [
        Condition::StarAxioms,
        Condition::Ei,
        Condition::EiiL,
        Condition::EiiR,
        Condition::Eiii,
        Condition::EvL,
        Condition::EvR,
        Condition::EviL,
        Condition::EviR,
        Condition::EviiL,
        Condition::EviiR,
        Condition::Gi,
        Condition::Gii,
        Condition::GiiPrime,
        Condition::Giii,
        Condition::Giv,
        Condition::GI,
        Condition::I,
        Condition::MStarR,
        Condition::MStarL,
        Condition::JStable,
    ];

    pub const EMBEDDABLE: [Condition; 10] = [
        Condition::Ei,
        Condition::EiiL,
        Condition::EiiR,
        Condition::Eiii,
        Condition::EvL,
        Condition::EvR,
        Condition::EviL,
        Condition::EviR,
        Condition::EviiL,
        Condition::EviiR,
    ];

    pub const WITNESS_HYPOTHESES: [Condition; 8] = [
        Condition::Ei,
        Condition::EiiL,
        Condition::EiiR,
        Condition::Eiii,
        Condition::EvL,
        Condition::EvR,
        Condition::EviL,
        Condition::Gii,
    ];

    pub const J_HYPOTHESES: [Condition; 6] =
        [Condition::Ei, Condition::EiiL, Condition::EiiR, Condition::Eiii, Condition::EvL, Condition::EvR];

    pub fn name(self) -> &'static str {
        match self {
            Condition::StarAxioms => "*-pair axioms",
            Condition::Ei => "Ei",
            Condition::EiiL => "Eii(l)",
            Condition::EiiR => "Eii(r)",
            Condition::Eiii => "Eiii",
            Condition::EvL => "Ev(l)",
            Condition::EvR => "Ev(r)",
            Condition::EviL => "Evi(l)",
            Condition::EviR => "Evi(r)",
            Condition::EviiL => "Evii(l)",
            Condition::EviiR => "Evii(r)",
            Condition::Gi => "Gi",
            Condition::Gii => "Gii",
            Condition::GiiPrime => "Gii'",
            Condition::Giii => "Giii",
            Condition::Giv => "Giv",
            Condition::GI => "GI",
            Condition::I => "I",
            Condition::MStarR => "M*_r",
            Condition::MStarL => "M*_l",
            Condition::JStable => "J'-stable",
        }
    }

    fn needs_dual(self) -> bool {
        matches!(self, Condition::EiiR | Condition::EvR | Condition::EviR | Condition::EviiR)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdicts keyed by condition, in the order they were set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConditionReport {
    pub entries: Vec<(Condition, Verdict)>,
}

impl ConditionReport {
    pub fn set(&mut self, c: Condition, v: Verdict) {
        match self.entries.iter_mut().find(|(k, _)| *k == c) {
            Some(slot) => slot.1 = v,
            None => self.entries.push((c, v)),
        }
    }

    pub fn get(&self, c: Condition) -> Option<&Verdict> {
        self.entries.iter().find(|(k, _)| *k == c).map(|(_, v)| v)
    }

    pub fn all_hold(&self, conds: &[Condition]) -> bool {
        conds.iter().all(|&c| self.get(c).is_some_and(Verdict::holds))
    }

    pub fn first_failure(&self) -> Option<(Condition, &Verdict)> {
        self.entries.iter().find(|(_, v)| v.fails()).map(|(c, v)| (*c, v))
    }
}

/// For `S` a straight left order in `Q`: completely semisimple `Q` against
/// the pair-side condition, plus the restriction identities for `D`, `≤_J`,
/// `J` and the simple/bisimple criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleRecord {
    pub completely_semisimple: bool,
    pub cond_ii: Verdict,
    /// Chain conditions on `R′`/`L′` classes; automatic for finite `S`.
    pub mstar: bool,
    pub d_restriction: bool,
    pub leq_j_restriction: bool,
    pub j_restriction: bool,
    pub simple_iff_j_full: bool,
    pub bisimple_iff_d_full: bool,
}

impl SemisimpleRecord {
    pub fn consistent(&self) -> bool {
        self.completely_semisimple == self.cond_ii.holds()
            && self.mstar == self.completely_semisimple
            && self.d_restriction
            && self.leq_j_restriction
            && self.j_restriction
            && self.simple_iff_j_full
            && self.bisimple_iff_d_full
    }
}

pub fn semisimple_check(sub: &SubSemigroup<'_>, green: &GreenData, straight_left_order: bool) -> Result<SemisimpleRecord> {
    if !straight_left_order {
        return Err(Error::PreconditionFailed("S is not a straight left order in Q".into()));
    }
    let q = sub.parent();
    let pair = StarPair::induced_with(sub, green)?;
    if !pair.is_embeddable() {
        return Err(Error::PreconditionFailed("induced *-pair is not embeddable".into()));
    }
    let j = pair.j_structure()?;
    let m = sub.members();
    let restricted = |rel: &dyn Fn(usize, usize) -> bool, derived: &RelationMatrix| {
        (0..m.len()).all(|i| (0..m.len()).all(|k| rel(m[i], m[k]) == derived.contains(i, k)))
    };
    Ok(SemisimpleRecord {
        completely_semisimple: green::is_completely_semisimple(q, green)?,
        cond_ii: pair.j_stability(&j),
        mstar: true,
        d_restriction: restricted(&|a, b| green.d_related(a, b), pair.d_relation()),
        leq_j_restriction: restricted(&|a, b| green.leq_j(a, b), &j.leq_j),
        j_restriction: restricted(&|a, b| green.j_related(a, b), &j.jp_rel),
        simple_iff_j_full: green::is_simple(green) == j.jp.is_universal(),
        bisimple_iff_d_full: green::is_bisimple(green) == pair.dp.is_universal(),
    })
}
