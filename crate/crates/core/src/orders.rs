//! Orders of quotients: for a subsemigroup `S` of a finite semigroup `Q`,
//! decides whether every element of `Q` is a quotient `a♯b` (left) or `ba♯`
//! (right) of elements of `S`, with the straight, local and very large
//! refinements, and reconstructs witnesses constructively.
//!
//! Right-sided notions are evaluated as the left-sided ones on the opposite
//! semigroup: `ba♯` in `Q` is `a♯ ∘ b` in `Q^op`, and `L` in `Q` is `R` in
//! `Q^op`. Witness pairs `(a, b)` are therefore reported in the same
//! orientation for both sides.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::error::{Error, Result};
use crate::green::{self, GreenData};
use crate::semigroup::{FiniteSemigroup, SubSemigroup};
use crate::starred::StarredData;

pub mod rho;

pub use rho::{power_witness, rho_structure, PowerWitness, RhoStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `target = a♯b` (left) or `target = ba♯` (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientDecomposition {
    pub target: usize,
    pub a: usize,
    pub b: usize,
    pub side: Side,
    /// `a R b` in `Q` (left) or `a L b` (right).
    pub straight: bool,
}

/// Constraint on a witness pair `(a, b)` for `a♯b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Any,
    /// `b ≤_R a`
    Bounded,
    /// `a R b`
    Straight,
}

/// The three conditions shown equivalent for subsemigroups of a regular
/// semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceStatus {
    pub very_large_weak: bool,
    pub straight_weak: bool,
    pub very_large_local: bool,
}

impl EquivalenceStatus {
    pub fn all_equal(&self) -> bool {
        self.very_large_weak == self.straight_weak && self.straight_weak == self.very_large_local
    }
}

/// Intermediate choices made while straightening `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Straightening {
    pub w: usize,
    /// Idempotent `R`-related to `w`.
    pub e: usize,
    /// Member of `S ∩ H_e`.
    pub s: usize,
    /// `sw = a♯b` with `b ≤_R a`.
    pub a: usize,
    pub b: usize,
    /// Idempotent `R`-related to `b`.
    pub f: usize,
    /// Member of `R_w ∩ L_f ∩ S`.
    pub t: usize,
    pub result: QuotientDecomposition,
}

/// Outcome of the straightness criteria that need only finiteness data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StraightnessCriteria {
    pub weak_left_order: bool,
    pub q_regular: bool,
    /// Every `q` has a bounded witness `a♯b`, `b ≤_R a`, with `ρ(a, q)`
    /// finite. Always true on a finite `Q` carrying a weak left order.
    pub bounded_witnesses_with_finite_rho: bool,
    /// Always true on a finite `Q`.
    pub finitely_many_r_classes: bool,
    /// `Q` regular and the `R`-classes of each `D`-class form a chain.
    pub r_classes_form_chains: bool,
    pub straight_weak: bool,
}

/// Everything needed to decide order-of-quotients notions for one `(S, Q)`.
#[derive(Clone, Debug)]
pub struct OrderContext {
    q: FiniteSemigroup,
    green: GreenData,
    members: Vec<usize>,
    in_s: Vec<bool>,
    /// Starred data of `S` as an abstract semigroup, in local indices.
    starred: StarredData,
    inverse: Vec<Option<usize>>,
    dual: OnceCell<Box<OrderContext>>,
}

impl OrderContext {
    pub fn new(sub: &SubSemigroup<'_>) -> Self {
        let q = sub.parent().clone();
        let green = GreenData::new(&q);
        let inverse = green::group_inverses(&q, &green);
        let starred = StarredData::new(&sub.to_semigroup());
        OrderContext {
            members: sub.members().to_vec(),
            in_s: sub.mask().to_vec(),
            q,
            green,
            starred,
            inverse,
            dual: OnceCell::new(),
        }
    }

    pub fn q(&self) -> &FiniteSemigroup {
        &self.q
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.in_s[a]
    }

    pub fn starred(&self) -> &StarredData {
        &self.starred
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverse[a]
    }

    /// The same pair viewed in the opposite semigroup.
    pub fn dual(&self) -> &OrderContext {
        self.dual.get_or_init(|| {
            let op = self.q.opposite();
            let sub = SubSemigroup::from_sorted_unchecked(&op, self.members.clone());
            Box::new(OrderContext::new(&sub))
        })
    }

    fn side(&self, side: Side) -> &OrderContext {
        match side {
            Side::Left => self,
            Side::Right => self.dual(),
        }
    }

    /// Square cancellable elements of `S`, as parent indices.
    pub fn square_cancellable(&self) -> Vec<usize> {
        self.starred.square_cancellable.iter().map(|&i| self.members[i]).collect()
    }

    /// Representatives of the `H`-classes of `Q` that miss `S`.
    pub fn missing_h_classes(&self) -> Vec<usize> {
        self.green
            .h
            .classes()
            .iter()
            .filter(|c| !c.iter().any(|&x| self.in_s[x]))
            .map(|c| c[0])
            .collect()
    }

    /// `S` meets every `H`-class of `Q`.
    pub fn is_very_large(&self) -> bool {
        self.missing_h_classes().is_empty()
    }

    /// For each `q`, the first `(a, b)` in index order with `a ∈ S ∩ H(Q)`,
    /// `b ∈ S`, `a♯b = q` and the constraint satisfied.
    pub fn witnesses(&self, side: Side, constraint: Constraint) -> Vec<Option<(usize, usize)>> {
        let ctx = self.side(side);
        let mut out = vec![None; ctx.q.order()];
        for &a in &ctx.members {
            let Some(inv) = ctx.inverse[a] else { continue };
            for &b in &ctx.members {
                let ok = match constraint {
                    Constraint::Any => true,
                    Constraint::Bounded => ctx.green.leq_r(b, a),
                    Constraint::Straight => ctx.green.r_related(a, b),
                };
                if !ok {
                    continue;
                }
                let target = ctx.q.mul(inv, b);
                if out[target].is_none() {
                    out[target] = Some((a, b));
                }
            }
        }
        out
    }

    /// Decomposition of `target` if one exists.
    pub fn decompose(&self, side: Side, constraint: Constraint, target: usize) -> Option<QuotientDecomposition> {
        let ctx = self.side(side);
        let (a, b) = ctx.witnesses(Side::Left, constraint)[target]?;
        Some(QuotientDecomposition { target, a, b, side, straight: ctx.green.r_related(a, b) })
    }

    pub fn is_weak_order(&self, side: Side) -> bool {
        self.witnesses(side, Constraint::Any).iter().all(Option::is_some)
    }

    /// Every square cancellable element of `S` lies in a subgroup of `Q`.
    /// The condition is left-right symmetric.
    pub fn square_cancellable_in_subgroups(&self) -> bool {
        self.square_cancellable().iter().all(|&a| self.green.in_subgroup(a))
    }

    pub fn is_order(&self, side: Side) -> bool {
        self.is_weak_order(side) && self.square_cancellable_in_subgroups()
    }

    pub fn is_straight_weak_order(&self, side: Side) -> bool {
        self.witnesses(side, Constraint::Straight).iter().all(Option::is_some)
    }

    pub fn is_straight_order(&self, side: Side) -> bool {
        self.is_order(side) && self.is_straight_weak_order(side)
    }

    /// For every group `H`-class `H`, `S ∩ H` is a left (right) order in `H`.
    pub fn is_local_order(&self, side: Side) -> bool {
        let (by_quotients, by_closed_form) = self.local_order_both_forms(side);
        debug_assert_eq!(by_quotients, by_closed_form);
        by_quotients
    }

    /// The quotient form `{a♯b : a, b ∈ S∩H} = H`, and the closed form
    /// `S ∩ H = H` valid for finite groups.
    pub fn local_order_both_forms(&self, side: Side) -> (bool, bool) {
        let ctx = self.side(side);
        let mut by_quotients = true;
        let mut by_closed_form = true;
        for h in &ctx.green.group_h_classes {
            let meet: Vec<usize> = h.iter().copied().filter(|&x| ctx.in_s[x]).collect();
            let mut reached = vec![false; ctx.q.order()];
            for &a in &meet {
                let inv = ctx.inverse[a].expect("group element");
                for &b in &meet {
                    reached[ctx.q.mul(inv, b)] = true;
                }
            }
            by_quotients &= !meet.is_empty() && h.iter().all(|&x| reached[x]);
            by_closed_form &= meet.len() == h.len();
        }
        (by_quotients, by_closed_form)
    }

    /// Evaluates the three equivalent conditions independently.
    pub fn equivalence_status(&self) -> Result<EquivalenceStatus> {
        if !green::is_regular(&self.q) {
            return Err(Error::NotRegular);
        }
        let very_large = self.is_very_large();
        Ok(EquivalenceStatus {
            very_large_weak: very_large && self.is_weak_order(Side::Left),
            straight_weak: self.is_straight_weak_order(Side::Left),
            very_large_local: very_large && self.is_local_order(Side::Left),
        })
    }

    /// Turns a very large weak left order into a straight decomposition of
    /// `w`, following the constructive argument step by step:
    /// `w = (tas)♯ tb` with `tas R tb`.
    pub fn straighten(&self, w: usize) -> Result<Straightening> {
        let q = &self.q;
        let g = &self.green;
        if !green::is_regular(q) {
            return Err(Error::NotRegular);
        }
        let fail = |step: &str| Error::PreconditionFailed(format!("straighten({w}): {step}"));
        let e = g
            .idempotents
            .iter()
            .copied()
            .find(|&e| g.r_related(w, e))
            .ok_or_else(|| fail("no idempotent R-related to w"))?;
        let s = g
            .h
            .class_containing(e)
            .iter()
            .copied()
            .find(|&x| self.in_s[x])
            .ok_or_else(|| fail("S misses the H-class of e"))?;
        let sw = q.mul(s, w);
        let (a, b) = self.witnesses(Side::Left, Constraint::Bounded)[sw]
            .ok_or_else(|| fail("sw has no quotient a#b with b <=_R a"))?;
        let f = g
            .idempotents
            .iter()
            .copied()
            .find(|&f| g.r_related(b, f))
            .ok_or_else(|| fail("no idempotent R-related to b"))?;
        let t = q
            .elements()
            .find(|&t| self.in_s[t] && g.r_related(t, w) && g.l_related(t, f))
            .ok_or_else(|| fail("S misses R_w ∩ L_f"))?;
        let tas = q.product(&[t, a, s]);
        let tb = q.mul(t, b);
        let inv = self.inverse[tas].ok_or_else(|| fail("tas is not in a subgroup"))?;
        if q.mul(inv, tb) != w || !g.r_related(tas, tb) {
            return Err(fail("(tas)#tb does not straighten w"));
        }
        Ok(Straightening {
            w,
            e,
            s,
            a,
            b,
            f,
            t,
            result: QuotientDecomposition { target: w, a: tas, b: tb, side: Side::Left, straight: true },
        })
    }

    /// For `q` in a group `H`-class `H` of a straight weak left order,
    /// returns `(scs, sd)` in `S ∩ H` with `(scs)♯ sd = q`, where `s` is the
    /// first member of `S ∩ H` and `sq = c♯d` is straight.
    pub fn localize(&self, target: usize) -> Result<(usize, usize)> {
        let q = &self.q;
        let g = &self.green;
        let fail = |step: &str| Error::PreconditionFailed(format!("localize({target}): {step}"));
        if !g.in_subgroup(target) {
            return Err(fail("target is not in a group H-class"));
        }
        let s = g
            .h
            .class_containing(target)
            .iter()
            .copied()
            .find(|&x| self.in_s[x])
            .ok_or_else(|| fail("S misses the H-class"))?;
        let sq = q.mul(s, target);
        let (c, d) = self.witnesses(Side::Left, Constraint::Straight)[sq]
            .ok_or_else(|| fail("sq has no straight decomposition"))?;
        let scs = q.product(&[s, c, s]);
        let sd = q.mul(s, d);
        let ok = g.h_related(scs, target)
            && g.h_related(sd, target)
            && self.inverse[scs].is_some_and(|inv| q.mul(inv, sd) == target);
        if !ok {
            return Err(fail("(scs)#sd does not localize the target"));
        }
        Ok((scs, sd))
    }

    /// Evaluates the straightness criteria whose hypotheses only concern
    /// the `R`-class structure of `Q`.
    pub fn straightness_criteria(&self) -> StraightnessCriteria {
        let weak = self.is_weak_order(Side::Left);
        let q_regular = green::is_regular(&self.q);
        let bounded = self.witnesses(Side::Left, Constraint::Bounded);
        let bounded_witnesses_with_finite_rho = weak && bounded.iter().all(Option::is_some);
        let g = &self.green;
        let r_classes_form_chains = q_regular
            && g.d.classes().iter().all(|dc| {
                dc.iter().all(|&x| dc.iter().all(|&y| g.leq_r(x, y) || g.leq_r(y, x)))
            });
        StraightnessCriteria {
            weak_left_order: weak,
            q_regular,
            bounded_witnesses_with_finite_rho,
            finitely_many_r_classes: true,
            r_classes_form_chains,
            straight_weak: self.is_straight_weak_order(Side::Left),
        }
    }
}

/// Named order notions accepted by the front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Notion {
    WeakOrder(Side),
    Order(Side),
    StraightWeakOrder(Side),
    StraightOrder(Side),
    LocalOrder(Side),
    VeryLarge,
}

impl Notion {
    pub fn evaluate(self, ctx: &OrderContext) -> bool {
        match self {
            Notion::WeakOrder(s) => ctx.is_weak_order(s),
            Notion::Order(s) => ctx.is_order(s),
            Notion::StraightWeakOrder(s) => ctx.is_straight_weak_order(s),
            Notion::StraightOrder(s) => ctx.is_straight_order(s),
            Notion::LocalOrder(s) => ctx.is_local_order(s),
            Notion::VeryLarge => ctx.is_very_large(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, B2_A12, B2_E11, B2_E22, B2_ZERO};

    fn ctx(q: &FiniteSemigroup, members: &[usize]) -> OrderContext {
        OrderContext::new(&q.subsemigroup(members).unwrap())
    }

    #[test]
    fn very_large_examples() {
        let b2 = fixtures::brandt_b2();
        assert!(OrderContext::new(&b2.whole()).is_very_large());
        let c = ctx(&b2, &[B2_E11, B2_E22, B2_ZERO]);
        assert!(!c.is_very_large());
        assert!(c.missing_h_classes().contains(&B2_A12));
        // Z3 has a single H-class, so any member meets it
        let z3 = fixtures::cyclic_group(3);
        assert!(ctx(&z3, &[0]).is_very_large());
    }

    #[test]
    fn weak_left_order_examples() {
        let b2 = fixtures::brandt_b2();
        let whole = OrderContext::new(&b2.whole());
        assert!(whole.is_weak_order(Side::Left));
        let w = whole.witnesses(Side::Left, Constraint::Any);
        for (q, wit) in w.iter().enumerate() {
            let (a, b) = wit.unwrap();
            assert_eq!(b2.mul(whole.inverse(a).unwrap(), b), q);
        }
        assert!(!ctx(&b2, &[B2_E11, B2_E22, B2_ZERO]).is_weak_order(Side::Left));
        let z3 = fixtures::cyclic_group(3);
        assert!(OrderContext::new(&z3.whole()).is_weak_order(Side::Left));
    }

    #[test]
    fn left_order_examples() {
        let b2 = fixtures::brandt_b2();
        let c = OrderContext::new(&b2.whole());
        assert_eq!(c.square_cancellable(), vec![B2_E11, B2_E22, B2_ZERO]);
        assert!(c.is_order(Side::Left));
        // N2: S(S) = {0} lies in a subgroup, but a has no quotient form
        let n2 = fixtures::null_semigroup(2);
        let c = OrderContext::new(&n2.whole());
        assert!(c.square_cancellable_in_subgroups());
        assert!(!c.is_order(Side::Left));
        let z3 = fixtures::cyclic_group(3);
        assert!(OrderContext::new(&z3.whole()).is_order(Side::Left));
    }

    #[test]
    fn straight_examples() {
        let b2 = fixtures::brandt_b2();
        assert!(OrderContext::new(&b2.whole()).is_straight_order(Side::Left));
        assert!(OrderContext::new(&b2.whole()).is_straight_order(Side::Right));
        let z3 = fixtures::cyclic_group(3);
        assert!(OrderContext::new(&z3.whole()).is_straight_order(Side::Left));
    }

    #[test]
    fn local_examples() {
        let b2 = fixtures::brandt_b2();
        assert!(OrderContext::new(&b2.whole()).is_local_order(Side::Left));
        let sub = b2.closure(&[B2_E11, B2_A12]).unwrap();
        assert_eq!(sub.members(), &[B2_E11, B2_A12, B2_ZERO]);
        let c = OrderContext::new(&sub);
        assert!(!c.is_local_order(Side::Left));
        assert_eq!(c.local_order_both_forms(Side::Left), (false, false));
        let rb = fixtures::rectangular_band(2, 2);
        assert!(OrderContext::new(&rb.whole()).is_local_order(Side::Left));
    }

    #[test]
    fn right_duals_on_left_zero() {
        // LZ2 = {x, y}, xy = x: every element is idempotent, H trivial.
        let lz = fixtures::left_zero(2);
        let c = OrderContext::new(&lz.whole());
        assert!(c.is_straight_weak_order(Side::Left));
        assert!(c.is_straight_weak_order(Side::Right));
        // the proper subsemigroup {x0} is not very large
        let c = ctx(&lz, &[0]);
        assert!(!c.is_weak_order(Side::Left));
        assert!(!c.is_weak_order(Side::Right));
    }

    #[test]
    fn equivalence_status_examples() {
        let b2 = fixtures::brandt_b2();
        let all = EquivalenceStatus { very_large_weak: true, straight_weak: true, very_large_local: true };
        let none = EquivalenceStatus { very_large_weak: false, straight_weak: false, very_large_local: false };
        assert_eq!(OrderContext::new(&b2.whole()).equivalence_status(), Ok(all));
        assert_eq!(ctx(&b2, &[B2_E11, B2_E22, B2_ZERO]).equivalence_status(), Ok(none));
        let z3 = fixtures::cyclic_group(3);
        assert_eq!(OrderContext::new(&z3.whole()).equivalence_status(), Ok(all));
        let n2 = fixtures::null_semigroup(2);
        assert_eq!(OrderContext::new(&n2.whole()).equivalence_status(), Err(Error::NotRegular));
    }

    #[test]
    fn straighten_traces_b2() {
        let b2 = fixtures::brandt_b2();
        let c = OrderContext::new(&b2.whole());
        let st = c.straighten(B2_A12).unwrap();
        assert_eq!((st.e, st.s, st.a, st.b, st.f, st.t), (B2_E11, B2_E11, B2_E11, B2_A12, B2_E11, B2_E11));
        assert_eq!((st.result.a, st.result.b), (B2_E11, B2_A12));
        for w in b2.elements() {
            let r = c.straighten(w).unwrap().result;
            assert!(c.green().r_related(r.a, r.b));
            assert_eq!(b2.mul(c.inverse(r.a).unwrap(), r.b), w);
        }
    }

    #[test]
    fn straighten_idempotents_and_bands() {
        let rb = fixtures::rectangular_band(2, 2);
        let c = OrderContext::new(&rb.whole());
        for w in rb.elements() {
            let r = c.straighten(w).unwrap().result;
            assert!(c.green().r_related(r.a, r.b));
            assert_eq!(rb.mul(r.a, r.b), w);
        }
        let b2 = fixtures::brandt_b2();
        let c = ctx(&b2, &[B2_E11, B2_E22, B2_ZERO]);
        assert!(matches!(c.straighten(B2_A12), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn localize_examples() {
        let b2 = fixtures::brandt_b2();
        let c = OrderContext::new(&b2.whole());
        assert_eq!(c.localize(B2_E11), Ok((B2_E11, B2_E11)));
        assert!(c.localize(B2_A12).is_err());
        let z3 = fixtures::cyclic_group(3);
        let c = OrderContext::new(&z3.whole());
        for q in 0..3 {
            let (a, b) = c.localize(q).unwrap();
            assert_eq!(z3.mul(c.inverse(a).unwrap(), b), q);
        }
        let rb = fixtures::rectangular_band(2, 2);
        let c = OrderContext::new(&rb.whole());
        for q in 0..4 {
            assert_eq!(c.localize(q), Ok((q, q)));
        }
    }

    #[test]
    fn straightness_criteria_on_b2() {
        let b2 = fixtures::brandt_b2();
        let crit = OrderContext::new(&b2.whole()).straightness_criteria();
        assert!(crit.weak_left_order && crit.bounded_witnesses_with_finite_rho && crit.straight_weak);
        // B2's nonzero D-class has two incomparable R-classes
        assert!(!crit.r_classes_form_chains);
    }
}
