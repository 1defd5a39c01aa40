//! The starred preorders `≤_L*` and `≤_R*`, their equivalences, and the set
//! `S(S)` of square cancellable elements.
//!
//! `a ≤_L* b` iff for all `x, y ∈ S¹`, `bx = by` implies `ax = ay`. For each
//! `b` the kernel of `x ↦ bx` on `S¹` is represented by the product itself;
//! `a ≤_L* b` then says `bx ↦ ax` is a well defined map.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Counterexample;
use crate::green::GreenData;
use crate::relation::{Partition, RelationMatrix};
use crate::semigroup::{FiniteSemigroup, SubSemigroup};

#[derive(Clone, Debug)]
pub struct StarredData {
    pub leq_lstar: RelationMatrix,
    pub leq_rstar: RelationMatrix,
    pub lstar: Partition,
    pub rstar: Partition,
    pub hstar: Partition,
    /// `S(S)` in ascending order.
    pub square_cancellable: Vec<usize>,
    sc_mask: Vec<bool>,
}

impl StarredData {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let leq_lstar = leq_lstar(s);
        let leq_rstar = leq_lstar_of(s, true);
        let l_rel = leq_lstar.symmetric_part();
        let r_rel = leq_rstar.symmetric_part();
        let h_rel = l_rel.intersection(&r_rel);
        let sc_mask: Vec<bool> = s.elements().map(|a| h_rel.contains(a, s.mul(a, a))).collect();
        StarredData {
            lstar: l_rel.classes(),
            rstar: r_rel.classes(),
            hstar: h_rel.classes(),
            square_cancellable: s.elements().filter(|&a| sc_mask[a]).collect(),
            leq_lstar,
            leq_rstar,
            sc_mask,
        }
    }

    pub fn is_square_cancellable(&self, a: usize) -> bool {
        self.sc_mask[a]
    }

    pub fn square_cancellable_mask(&self) -> &[bool] {
        &self.sc_mask
    }
}

/// `≤_L*` on `s`, quantifying over `S¹`.
pub fn leq_lstar(s: &FiniteSemigroup) -> RelationMatrix {
    leq_lstar_of(s, false)
}

/// `≤_R*` on `s`.
pub fn leq_rstar(s: &FiniteSemigroup) -> RelationMatrix {
    leq_lstar_of(s, true)
}

fn leq_lstar_of(s: &FiniteSemigroup, right: bool) -> RelationMatrix {
    let n = s.order();
    // sig[b][x] = b·x for x < n, and b·1 = b at x = n
    let sig: Vec<Vec<usize>> = (0..n)
        .map(|b| {
            let mut row: Vec<usize> =
                (0..n).map(|x| if right { s.mul(x, b) } else { s.mul(b, x) }).collect();
            row.push(b);
            row
        })
        .collect();
    let mut image = vec![usize::MAX; n];
    let mut stamp = vec![usize::MAX; n];
    let mut m = RelationMatrix::empty(n);
    let mut generation = 0;
    for a in 0..n {
        for b in 0..n {
            generation += 1;
            let mut ok = true;
            for (&key, &val) in sig[b].iter().zip(&sig[a]) {
                if stamp[key] != generation {
                    stamp[key] = generation;
                    image[key] = val;
                } else if image[key] != val {
                    ok = false;
                    break;
                }
            }
            if ok {
                m.insert(a, b);
            }
        }
    }
    m
}

/// For `S` inside `Q`: `a ≤_L b` in `Q` implies `a ≤_L* b` in `S`, and
/// dually for `R`, for all members `a, b`. Witness indices are parent indices.
pub fn check_oversemigroup_containment(sub: &SubSemigroup<'_>) -> Result<(), Counterexample> {
    let q = sub.parent();
    let green = GreenData::new(q);
    let star = StarredData::new(&sub.to_semigroup());
    let m = sub.members();
    for (i, &a) in m.iter().enumerate() {
        for (j, &b) in m.iter().enumerate() {
            if green.leq_l(a, b) && !star.leq_lstar.contains(i, j) {
                return Err(Counterexample::new("<=_L in Q but not <=_L* in S", &[a, b]));
            }
            if green.leq_r(a, b) && !star.leq_rstar.contains(i, j) {
                return Err(Counterexample::new("<=_R in Q but not <=_R* in S", &[a, b]));
            }
        }
    }
    Ok(())
}

/// First `(a, b, x)` with `a ≤ b` but not `ax ≤ bx` (or `xa ≤ xb` when
/// `left`).
pub fn compatibility_failure(
    s: &FiniteSemigroup,
    rel: &RelationMatrix,
    left: bool,
) -> Option<(usize, usize, usize)> {
    for (a, b) in rel.pairs() {
        for x in s.elements() {
            let (p, q) = if left { (s.mul(x, a), s.mul(x, b)) } else { (s.mul(a, x), s.mul(b, x)) };
            if !rel.contains(p, q) {
                return Some((a, b, x));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Test-only oracle: the definition with explicit pairs over `S¹`.
    fn naive_leq_lstar(s: &FiniteSemigroup) -> RelationMatrix {
        let one = s.adjoin_identity();
        let n = s.order();
        RelationMatrix::from_fn(n, |a, b| {
            (0..=n).all(|x| (0..=n).all(|y| one.mul(b, x) != one.mul(b, y) || one.mul(a, x) == one.mul(a, y)))
        })
    }

    #[test]
    fn matches_naive_definition_on_fixtures() {
        for f in fixtures::curated() {
            let s = &f.semigroup;
            assert_eq!(leq_lstar(s), naive_leq_lstar(s), "{}", f.name);
            assert_eq!(leq_rstar(s), naive_leq_lstar(&s.opposite()), "{}", f.name);
        }
    }

    #[test]
    fn left_zero_band() {
        let lz2 = fixtures::left_zero(2);
        let st = StarredData::new(&lz2);
        assert_eq!(st.square_cancellable, vec![0, 1]);
        assert_eq!(st.leq_lstar, RelationMatrix::full(2));
        assert_eq!(st.leq_rstar, RelationMatrix::identity(2));
    }

    #[test]
    fn null_semigroup() {
        let n2 = fixtures::null_semigroup(2);
        let st = StarredData::new(&n2);
        assert_eq!(st.square_cancellable, vec![0]);
    }

    #[test]
    fn groups_are_full() {
        let z3 = fixtures::cyclic_group(3);
        let st = StarredData::new(&z3);
        assert_eq!(st.leq_lstar, RelationMatrix::full(3));
        assert_eq!(st.leq_rstar, RelationMatrix::full(3));
        assert_eq!(st.square_cancellable, vec![0, 1, 2]);
    }

    #[test]
    fn containment_examples() {
        let b2 = fixtures::brandt_b2();
        assert_eq!(check_oversemigroup_containment(&b2.whole()), Ok(()));
        let n2one = fixtures::null_semigroup(2).adjoin_identity();
        let sub = n2one.subsemigroup(&[0, 1]).unwrap();
        assert_eq!(check_oversemigroup_containment(&sub), Ok(()));
    }

    #[test]
    fn starred_relations_contain_green() {
        for f in fixtures::curated() {
            let s = &f.semigroup;
            let g = GreenData::new(s);
            let st = StarredData::new(s);
            assert!(g.leq_l.is_subset(&st.leq_lstar), "{}", f.name);
            assert!(g.leq_r.is_subset(&st.leq_rstar), "{}", f.name);
            assert!(st.leq_lstar.is_preorder());
            assert_eq!(compatibility_failure(s, &st.leq_lstar, false), None);
            assert_eq!(compatibility_failure(s, &st.leq_rstar, true), None);
        }
    }
}
