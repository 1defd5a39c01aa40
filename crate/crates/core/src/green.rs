//! Green's preorders and relations on a finite semigroup, together with the
//! group `H`-classes, group inverses and the structural predicates built on
//! them (regularity, simplicity, principal factors, complete semisimplicity).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Counterexample, Error, Result};
use crate::relation::{Partition, RelationMatrix};
use crate::semigroup::FiniteSemigroup;

/// Green's structure of a finite semigroup.
///
/// `leq_l[a][b]` holds iff `Q¹a ⊆ Q¹b`, `leq_r[a][b]` iff `aQ¹ ⊆ bQ¹`, and
/// `leq_j[a][b]` iff `Q¹aQ¹ ⊆ Q¹bQ¹`.
#[derive(Clone, Debug)]
pub struct GreenData {
    pub leq_l: RelationMatrix,
    pub leq_r: RelationMatrix,
    pub leq_j: RelationMatrix,
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    pub idempotents: Vec<usize>,
    /// Elements of `H`-classes that contain an idempotent.
    pub group_h_classes: Vec<Vec<usize>>,
    /// Idempotent of the element's `H`-class, when that class is a group.
    group_identity: Vec<Option<usize>>,
}

impl GreenData {
    pub fn new(q: &FiniteSemigroup) -> Self {
        let n = q.order();
        let mut leq_l = RelationMatrix::identity(n);
        let mut leq_r = RelationMatrix::identity(n);
        let mut leq_j = RelationMatrix::identity(n);
        for b in 0..n {
            for x in 0..n {
                leq_l.insert(q.mul(x, b), b);
                leq_r.insert(q.mul(b, x), b);
                leq_j.insert(q.mul(x, b), b);
                leq_j.insert(q.mul(b, x), b);
                let xb = q.mul(x, b);
                for y in 0..n {
                    leq_j.insert(q.mul(xb, y), b);
                }
            }
        }
        let l_rel = leq_l.symmetric_part();
        let r_rel = leq_r.symmetric_part();
        let h_rel = l_rel.intersection(&r_rel);
        let d_rel = l_rel.compose(&r_rel);
        let l = l_rel.classes();
        let r = r_rel.classes();
        let h = h_rel.classes();
        let d = d_rel.classes();
        let j = leq_j.symmetric_part().classes();
        let idempotents = q.idempotents();

        let mut group_identity = vec![None; n];
        let mut group_h_classes = Vec::new();
        for class in h.classes() {
            if let Some(&e) = class.iter().find(|&&x| q.is_idempotent(x)) {
                for &x in class {
                    group_identity[x] = Some(e);
                }
                group_h_classes.push(class.clone());
            }
        }
        GreenData { leq_l, leq_r, leq_j, l, r, h, d, j, idempotents, group_h_classes, group_identity }
    }

    /// Whether `a` lies in a subgroup, i.e. `a ∈ H(Q)`.
    pub fn in_subgroup(&self, a: usize) -> bool {
        self.group_identity[a].is_some()
    }

    /// Idempotent of the group `H`-class containing `a`.
    pub fn group_identity(&self, a: usize) -> Option<usize> {
        self.group_identity[a]
    }

    /// `H(Q)` as a mask.
    pub fn union_of_subgroups(&self) -> Vec<bool> {
        self.group_identity.iter().map(Option::is_some).collect()
    }

    pub fn leq_l(&self, a: usize, b: usize) -> bool {
        self.leq_l.contains(a, b)
    }

    pub fn leq_r(&self, a: usize, b: usize) -> bool {
        self.leq_r.contains(a, b)
    }

    pub fn leq_j(&self, a: usize, b: usize) -> bool {
        self.leq_j.contains(a, b)
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.l.related(a, b)
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.r.related(a, b)
    }

    pub fn h_related(&self, a: usize, b: usize) -> bool {
        self.h.related(a, b)
    }

    pub fn d_related(&self, a: usize, b: usize) -> bool {
        self.d.related(a, b)
    }

    pub fn j_related(&self, a: usize, b: usize) -> bool {
        self.j.related(a, b)
    }
}

/// Group `H`-classes detected elementwise through `a H a²` rather than
/// through idempotent membership; the two must agree.
pub fn group_elements_by_squares(q: &FiniteSemigroup, green: &GreenData) -> Vec<bool> {
    q.elements().map(|a| green.h_related(a, q.mul(a, a))).collect()
}

/// The inverse of `a` in its group `H`-class.
pub fn group_inverse(q: &FiniteSemigroup, green: &GreenData, a: usize) -> Result<usize> {
    let e = green.group_identity(a).ok_or(Error::NotInSubgroup(a))?;
    green
        .h
        .class_containing(a)
        .iter()
        .copied()
        .find(|&x| q.mul(a, x) == e && q.mul(x, a) == e)
        .ok_or(Error::NotInSubgroup(a))
}

/// Group inverse of every element that has one.
pub fn group_inverses(q: &FiniteSemigroup, green: &GreenData) -> Vec<Option<usize>> {
    q.elements().map(|a| group_inverse(q, green, a).ok()).collect()
}

/// Checks the five one-sided clauses relating `≤_L`, `≤_R` and `H(Q)` for all
/// triples, then the same clauses on the opposite semigroup (the duals).
pub fn check_green_lemma(q: &FiniteSemigroup) -> core::result::Result<(), Counterexample> {
    check_green_lemma_one_side(q, &GreenData::new(q), "")?;
    let op = q.opposite();
    check_green_lemma_one_side(&op, &GreenData::new(&op), "dual ")
}

fn check_green_lemma_one_side(
    q: &FiniteSemigroup,
    g: &GreenData,
    dual: &'static str,
) -> core::result::Result<(), Counterexample> {
    let name = |c: &'static str, d: &'static str| if d.is_empty() { c } else { dual_name(c) };
    for p in q.elements() {
        let p_group = g.in_subgroup(p);
        for qq in q.elements() {
            // (i) q ≤_L p, p ∈ H(Q) ⇒ qp R q
            if g.leq_l(qq, p) && p_group && !g.r_related(q.mul(qq, p), qq) {
                return Err(Counterexample::new(name("(i)", dual), &[qq, p]));
            }
            // (iv) q ≤_R p, q ∈ H(Q) ⇒ qp R q
            if g.leq_r(qq, p) && g.in_subgroup(qq) && !g.r_related(q.mul(qq, p), qq) {
                return Err(Counterexample::new(name("(iv)", dual), &[qq, p]));
            }
            // (v) q R p, p ∈ H(Q) ⇒ pq H q
            if g.r_related(qq, p) && p_group && !g.h_related(q.mul(p, qq), qq) {
                return Err(Counterexample::new(name("(v)", dual), &[qq, p]));
            }
            if !(p_group && g.leq_l(qq, p)) {
                continue;
            }
            for r in q.elements() {
                if !g.leq_l(r, p) {
                    continue;
                }
                let (qp, rp) = (q.mul(qq, p), q.mul(r, p));
                // (ii) q, r ≤_L p, p ∈ H(Q), qp = rp ⇒ q = r
                if qp == rp && qq != r {
                    return Err(Counterexample::new(name("(ii)", dual), &[qq, r, p]));
                }
                // (iii) q, r ≤_L p, p ∈ H(Q), qp L rp ⇒ q L r
                if g.l_related(qp, rp) && !g.l_related(qq, r) {
                    return Err(Counterexample::new(name("(iii)", dual), &[qq, r, p]));
                }
            }
        }
    }
    Ok(())
}

fn dual_name(clause: &'static str) -> &'static str {
    match clause {
        "(i)" => "dual (i)",
        "(ii)" => "dual (ii)",
        "(iii)" => "dual (iii)",
        "(iv)" => "dual (iv)",
        _ => "dual (v)",
    }
}

/// Every element has an inner inverse: `axa = a` for some `x`.
pub fn is_regular(q: &FiniteSemigroup) -> bool {
    q.elements().all(|a| q.elements().any(|x| q.product(&[a, x, a]) == a))
}

/// Regular with commuting idempotents.
pub fn is_inverse(q: &FiniteSemigroup) -> bool {
    let e = q.idempotents();
    is_regular(q) && e.iter().all(|&x| e.iter().all(|&y| q.mul(x, y) == q.mul(y, x)))
}

/// Every element lies in a subgroup.
pub fn is_completely_regular(green: &GreenData) -> bool {
    green.h.classes().iter().all(|c| c.iter().all(|&a| green.in_subgroup(a)))
}

/// `H` is a two-sided congruence.
pub fn h_is_congruence(q: &FiniteSemigroup, green: &GreenData) -> bool {
    q.elements().all(|a| {
        green.h.class_containing(a).iter().all(|&b| {
            q.elements().all(|c| {
                green.h_related(q.mul(a, c), q.mul(b, c)) && green.h_related(q.mul(c, a), q.mul(c, b))
            })
        })
    })
}

/// All group `H`-classes are abelian.
pub fn has_abelian_subgroups(q: &FiniteSemigroup, green: &GreenData) -> bool {
    green
        .group_h_classes
        .iter()
        .all(|h| h.iter().all(|&a| h.iter().all(|&b| q.mul(a, b) == q.mul(b, a))))
}

/// A single `J`-class.
pub fn is_simple(green: &GreenData) -> bool {
    green.j.is_universal()
}

/// A single `D`-class.
pub fn is_bisimple(green: &GreenData) -> bool {
    green.d.is_universal()
}

/// Has a zero, exactly two `J`-classes (one being `{0}`) and `Q² ≠ {0}`.
pub fn is_zero_simple(q: &FiniteSemigroup, green: &GreenData) -> bool {
    let Some(z) = q.zero() else { return false };
    green.j.num_classes() == 2
        && green.j.class_containing(z).len() == 1
        && q.table().iter().any(|&p| p != z)
}

/// Principal factor `J(b)/I(b)` with `I(b) = {s : s <_J b}`.
///
/// When `I(b)` is empty the factor is the `J`-class itself (an ideal, hence
/// closed); a zero is adjoined only if it fails to be closed.
/// Returns the factor and the parent index of each non-zero element.
pub fn principal_factor(q: &FiniteSemigroup, green: &GreenData, b: usize) -> (FiniteSemigroup, Vec<usize>) {
    let ideal: Vec<bool> = q.elements().map(|s| green.leq_j(s, b)).collect();
    let below: Vec<bool> = q.elements().map(|s| green.leq_j(s, b) && !green.leq_j(b, s)).collect();
    q.rees_quotient(&ideal, &below)
}

/// Every principal factor is completely simple or completely 0-simple.
///
/// For a finite factor, simple (resp. 0-simple) already implies completely
/// simple (resp. completely 0-simple). Cross-checked against
/// [`completely_semisimple_by_stability`].
pub fn is_completely_semisimple(q: &FiniteSemigroup, green: &GreenData) -> Result<bool> {
    if !is_regular(q) {
        return Err(Error::NotRegular);
    }
    Ok(completely_semisimple_by_factors(q, green))
}

pub fn completely_semisimple_by_factors(q: &FiniteSemigroup, green: &GreenData) -> bool {
    green.j.classes().iter().all(|class| {
        let (factor, _) = principal_factor(q, green, class[0]);
        let fg = GreenData::new(&factor);
        is_simple(&fg) || is_zero_simple(&factor, &fg)
    })
}

/// Elementwise form: `a J ab ⇒ a R ab` and `a J ba ⇒ a L ba` for all `a, b`.
pub fn completely_semisimple_by_stability(q: &FiniteSemigroup, green: &GreenData) -> bool {
    stability_failure(q, green).is_none()
}

pub fn stability_failure(q: &FiniteSemigroup, green: &GreenData) -> Option<(usize, usize)> {
    for a in q.elements() {
        for b in q.elements() {
            let ab = q.mul(a, b);
            let ba = q.mul(b, a);
            if (green.j_related(a, ab) && !green.r_related(a, ab))
                || (green.j_related(a, ba) && !green.l_related(a, ba))
            {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, B2_A12, B2_A21, B2_E11, B2_E22, B2_ZERO};

    #[test]
    fn cyclic_group_is_one_h_class() {
        let z3 = fixtures::cyclic_group(3);
        let g = GreenData::new(&z3);
        assert_eq!(g.h.num_classes(), 1);
        assert_eq!(g.group_h_classes, vec![vec![0, 1, 2]]);
        assert!(is_simple(&g) && is_bisimple(&g));
        assert!(is_regular(&z3));
    }

    #[test]
    fn brandt_b2_classes() {
        // frozen from hand-computed principal ideals of B2
        let b2 = fixtures::brandt_b2();
        let g = GreenData::new(&b2);
        assert_eq!(g.r.classes(), &[vec![B2_E11, B2_A12], vec![B2_A21, B2_E22], vec![B2_ZERO]]);
        assert_eq!(g.l.classes(), &[vec![B2_E11, B2_A21], vec![B2_A12, B2_E22], vec![B2_ZERO]]);
        assert!(g.h.is_trivial());
        assert_eq!(g.group_h_classes, vec![vec![B2_E11], vec![B2_E22], vec![B2_ZERO]]);
        assert_eq!(g.d.num_classes(), 2);
        assert!(is_regular(&b2));
        assert!(is_zero_simple(&b2, &g));
        assert!(!is_simple(&g) && !is_bisimple(&g));
    }

    #[test]
    fn null_semigroup_is_trivially_ordered() {
        let n2 = fixtures::null_semigroup(2);
        let g = GreenData::new(&n2);
        for p in [&g.l, &g.r, &g.h, &g.d, &g.j] {
            assert!(p.is_trivial());
        }
        assert!(g.leq_j(0, 1) && !g.leq_j(1, 0));
        assert!(!is_regular(&n2));
        assert!(!is_simple(&g) && !is_bisimple(&g) && !is_zero_simple(&n2, &g));
    }

    #[test]
    fn group_inverse_examples() {
        let z3 = fixtures::cyclic_group(3);
        let g = GreenData::new(&z3);
        assert_eq!(group_inverse(&z3, &g, 1), Ok(2));
        let b2 = fixtures::brandt_b2();
        let g = GreenData::new(&b2);
        assert_eq!(group_inverse(&b2, &g, B2_E11), Ok(B2_E11));
        assert_eq!(group_inverse(&b2, &g, B2_A12), Err(Error::NotInSubgroup(B2_A12)));
    }

    #[test]
    fn green_lemma_on_fixtures() {
        for f in fixtures::curated() {
            assert_eq!(check_green_lemma(&f.semigroup), Ok(()), "{}", f.name);
        }
    }

    #[test]
    fn principal_factor_examples() {
        let b2 = fixtures::brandt_b2();
        let g = GreenData::new(&b2);
        let (f, keep) = principal_factor(&b2, &g, B2_E11);
        assert_eq!(keep, vec![B2_E11, B2_A12, B2_A21, B2_E22]);
        assert_eq!(f.order(), 5);
        // same table as B2 under the identity relabeling
        assert_eq!(f.table(), b2.table());

        let z3 = fixtures::cyclic_group(3);
        let gz = GreenData::new(&z3);
        let (f, _) = principal_factor(&z3, &gz, 2);
        assert_eq!(f.table(), z3.table());

        let n2 = fixtures::null_semigroup(2);
        let gn = GreenData::new(&n2);
        let (f, keep) = principal_factor(&n2, &gn, 1);
        assert_eq!(keep, vec![1]);
        assert_eq!(f.order(), 2);
        assert!(f.table().iter().all(|&p| p == 1));
    }

    #[test]
    fn completely_semisimple_agrees() {
        let b2 = fixtures::brandt_b2();
        let g = GreenData::new(&b2);
        assert_eq!(is_completely_semisimple(&b2, &g), Ok(true));
        assert!(completely_semisimple_by_stability(&b2, &g));
        let n2 = fixtures::null_semigroup(2);
        assert_eq!(is_completely_semisimple(&n2, &GreenData::new(&n2)), Err(Error::NotRegular));
    }

    #[test]
    fn inverse_and_completely_regular() {
        let b2 = fixtures::brandt_b2();
        assert!(is_inverse(&b2));
        let rb = fixtures::rectangular_band(2, 2);
        assert!(!is_inverse(&rb));
        assert!(is_completely_regular(&GreenData::new(&rb)));
        assert!(!is_completely_regular(&GreenData::new(&b2)));
        assert!(h_is_congruence(&rb, &GreenData::new(&rb)));
    }
}
