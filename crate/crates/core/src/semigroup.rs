//! Finite semigroups given by Cayley tables, and their subsemigroups.
//!
//! Elements are the dense indices `0..n`. Labels are cosmetic and only used
//! when rendering.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An associative binary operation on `0..order`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates a square table and checks associativity on every triple.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: i, len: row.len(), expected: n });
            }
            table.extend(row);
        }
        Self::from_flat(n, table)
    }

    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if table.len() != order * order {
            return Err(Error::NotSquare { row: 0, len: table.len(), expected: order * order });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(Error::IndexOutOfRange { row: pos / order, col: pos % order, value: table[pos] });
        }
        let s = FiniteSemigroup { order, table, labels: None };
        if let Some((a, b, c)) = s.associativity_violation() {
            return Err(Error::NotAssociative { a, b, c });
        }
        Ok(s)
    }

    /// Callers guarantee the table is in range and associative.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteSemigroup { order, table, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::LabelCount { expected: self.order, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn with_labels_unchecked(mut self, labels: Option<Vec<String>>) -> Self {
        self.labels = labels;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Product of a nonempty word.
    pub fn product(&self, word: &[usize]) -> usize {
        let (&first, rest) = word.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    /// `a^k` for `k ≥ 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "pow requires a positive exponent");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The two-sided zero, if any.
    pub fn zero(&self) -> Option<usize> {
        self.elements()
            .find(|&z| self.elements().all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// The two-sided identity, if any.
    pub fn identity(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// `S¹`: a fresh identity is always adjoined, at index `order`, even when
    /// `S` is already a monoid.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = match (a == n, b == n) {
                    (true, _) => b,
                    (false, true) => a,
                    (false, false) => self.mul(a, b),
                };
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push(fresh_label(&l, "1"));
            l
        });
        FiniteSemigroup { order: m, table, labels }
    }

    /// Adjoins a fresh zero at index `order`.
    pub fn adjoin_zero(&self) -> FiniteSemigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![n; m * m];
        for a in 0..n {
            for b in 0..n {
                table[a * m + b] = self.mul(a, b);
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push(fresh_label(&l, "0"));
            l
        });
        FiniteSemigroup { order: m, table, labels }
    }

    /// The opposite semigroup: `a ∘ b = b a`. Left-right duals of every
    /// statement are evaluated by running the left version here.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        FiniteSemigroup { order: n, table, labels: self.labels.clone() }
    }

    /// Direct product, element `(a, b)` at index `a * other.order + b`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let m = other.order;
        let n = self.order * m;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                table[x * n + y] = self.mul(a, c) * m + other.mul(b, d);
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
            .collect();
        FiniteSemigroup { order: n, table, labels: Some(labels) }
    }

    pub fn whole(&self) -> SubSemigroup<'_> {
        SubSemigroup::from_sorted_unchecked(self, self.elements().collect())
    }

    /// Checks the subset is closed and wraps it.
    pub fn subsemigroup(&self, members: &[usize]) -> Result<SubSemigroup<'_>> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptySeed);
        }
        if let Some(&bad) = members.iter().find(|&&x| x >= self.order) {
            return Err(Error::ElementOutOfRange(bad));
        }
        let sub = SubSemigroup::from_sorted_unchecked(self, members);
        for &a in &sub.members {
            for &b in &sub.members {
                let p = self.mul(a, b);
                if !sub.contains(p) {
                    return Err(Error::NotClosed { a, b, product: p });
                }
            }
        }
        Ok(sub)
    }

    /// Smallest multiplicatively closed superset of `seed`.
    pub fn closure(&self, seed: &[usize]) -> Result<SubSemigroup<'_>> {
        if seed.is_empty() {
            return Err(Error::EmptySeed);
        }
        let mut mask = vec![false; self.order];
        let mut members = Vec::new();
        for &s in seed {
            if s >= self.order {
                return Err(Error::ElementOutOfRange(s));
            }
            if !mask[s] {
                mask[s] = true;
                members.push(s);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if !mask[p] {
                        mask[p] = true;
                        members.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        members.sort_unstable();
        Ok(SubSemigroup { parent: self, members, mask })
    }

    /// Every subsemigroup, in order of the bitmask of its members. Exponential
    /// in the order; meant for the small instances of the test universe.
    pub fn all_subsemigroups(&self) -> Vec<SubSemigroup<'_>> {
        assert!(self.order <= 16, "subset enumeration is limited to order 16");
        let n = self.order;
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << n) {
            let closed = (0..n).filter(|&a| mask >> a & 1 == 1).all(|a| {
                (0..n).filter(|&b| mask >> b & 1 == 1).all(|b| mask >> self.mul(a, b) & 1 == 1)
            });
            if closed {
                let members = (0..n).filter(|&a| mask >> a & 1 == 1).collect();
                out.push(SubSemigroup::from_sorted_unchecked(self, members));
            }
        }
        out
    }

    /// Rees quotient `ideal / sub_ideal`. Elements of `ideal \ sub_ideal`
    /// keep their relative order; when `sub_ideal` is nonempty, a zero is
    /// appended and receives every product landing outside `ideal \ sub_ideal`.
    /// When `sub_ideal` is empty and the remaining set is not closed, a zero
    /// is adjoined as well.
    ///
    /// Returns the quotient and the parent index of each non-zero element.
    pub fn rees_quotient(&self, ideal: &[bool], sub_ideal: &[bool]) -> (FiniteSemigroup, Vec<usize>) {
        let keep: Vec<usize> = self.elements().filter(|&x| ideal[x] && !sub_ideal[x]).collect();
        assert!(!keep.is_empty(), "Rees quotient of an empty difference");
        let mut index = vec![usize::MAX; self.order];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let closed = keep.iter().all(|&a| keep.iter().all(|&b| index[self.mul(a, b)] != usize::MAX));
        let needs_zero = sub_ideal.iter().any(|&x| x) || !closed;
        let k = keep.len();
        let m = if needs_zero { k + 1 } else { k };
        let mut table = vec![k; m * m];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                let p = index[self.mul(a, b)];
                table[i * m + j] = if p == usize::MAX { k } else { p };
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out: Vec<String> = keep.iter().map(|&x| l[x].clone()).collect();
            if needs_zero {
                out.push(fresh_label(&out, "0"));
            }
            out
        });
        (FiniteSemigroup { order: m, table, labels }, keep)
    }
}

fn fresh_label(existing: &[String], base: &str) -> String {
    let mut candidate = String::from(base);
    while existing.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

/// A multiplicatively closed subset of a parent semigroup.
#[derive(Clone, Debug)]
pub struct SubSemigroup<'a> {
    parent: &'a FiniteSemigroup,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl<'a> SubSemigroup<'a> {
    pub(crate) fn from_sorted_unchecked(parent: &'a FiniteSemigroup, members: Vec<usize>) -> Self {
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        SubSemigroup { parent, members, mask }
    }

    pub fn parent(&self) -> &'a FiniteSemigroup {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask[a]
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    /// Position of a parent element among the members.
    pub fn local_index(&self, a: usize) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }

    /// The subsemigroup as an abstract semigroup on `0..len`, indexed by
    /// position in `members`.
    pub fn to_semigroup(&self) -> FiniteSemigroup {
        let k = self.members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                let p = self.parent.mul(a, b);
                table.push(self.local_index(p).expect("subsemigroup closed"));
            }
        }
        let labels = self
            .parent
            .labels()
            .map(|l| self.members.iter().map(|&m| l[m].clone()).collect());
        FiniteSemigroup::from_flat_unchecked(k, table).with_labels_unchecked(labels)
    }

    /// `ax = ay ⇒ x = y` and `xa = ya ⇒ x = y` for all members.
    pub fn is_cancellative(&self) -> bool {
        self.cancellation_failure().is_none()
    }

    /// First `(a, x, y)` with `x ≠ y` and `ax = ay` or `xa = ya`.
    pub fn cancellation_failure(&self) -> Option<(usize, usize, usize)> {
        let q = self.parent;
        for &a in &self.members {
            for &x in &self.members {
                for &y in &self.members {
                    if x < y && (q.mul(a, x) == q.mul(a, y) || q.mul(x, a) == q.mul(y, a)) {
                        return Some((a, x, y));
                    }
                }
            }
        }
        None
    }

    /// `Ta ∩ Tb ≠ ∅` for all `a, b` in `T`.
    pub fn is_right_reversible(&self) -> bool {
        self.reversibility_failure(false).is_none()
    }

    /// `aT ∩ bT ≠ ∅` for all `a, b` in `T`.
    pub fn is_left_reversible(&self) -> bool {
        self.reversibility_failure(true).is_none()
    }

    fn reversibility_failure(&self, left: bool) -> Option<(usize, usize)> {
        reversibility_failure(self.parent, &self.members, left)
    }
}

/// First pair `(a, b)` of `set` with `Ta ∩ Tb = ∅` (or `aT ∩ bT = ∅` when
/// `left`), products taken in `q` and translates restricted to `set`.
pub(crate) fn reversibility_failure(q: &FiniteSemigroup, set: &[usize], left: bool) -> Option<(usize, usize)> {
    let translate = |a: usize| -> Vec<bool> {
        let mut hit = vec![false; q.order()];
        for &t in set {
            hit[if left { q.mul(a, t) } else { q.mul(t, a) }] = true;
        }
        hit
    };
    let sets: Vec<Vec<bool>> = set.iter().map(|&a| translate(a)).collect();
    for (i, &a) in set.iter().enumerate() {
        for (j, &b) in set.iter().enumerate().skip(i) {
            if !sets[i].iter().zip(&sets[j]).any(|(x, y)| *x && *y) {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_semigroup() {
        let s = FiniteSemigroup::new(vec![vec![0]]).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.mul(0, 0), 0);
    }

    #[test]
    fn left_zero_band_accepted() {
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.mul(0, 1), 0);
        assert_eq!(s.mul(1, 0), 1);
    }

    #[test]
    fn non_associative_magma_rejected() {
        // x*y = 1 - x: (0*0)*0 = 1*0 = 0 but 0*(0*0) = 0*1 = 1
        let err = FiniteSemigroup::new(vec![vec![1, 1], vec![0, 0]]).unwrap_err();
        match err {
            Error::NotAssociative { a, b, c } => {
                let t = [[1usize, 1], [0, 0]];
                assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_and_range_errors() {
        assert_eq!(FiniteSemigroup::new(vec![]), Err(Error::EmptyTable));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 0], vec![0]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert_eq!(
            FiniteSemigroup::new(vec![vec![0, 2], vec![0, 0]]),
            Err(Error::IndexOutOfRange { row: 0, col: 1, value: 2 })
        );
    }

    #[test]
    fn adjoin_identity_examples() {
        let t = FiniteSemigroup::new(vec![vec![0]]).unwrap().adjoin_identity();
        assert_eq!(t.order(), 2);
        assert_eq!(t.identity(), Some(1));
        assert_eq!(t.mul(0, 0), 0);

        let n2 = fixtures::null_semigroup(2);
        let n2one = n2.adjoin_identity();
        assert_eq!(n2one.order(), 3);
        assert!(n2one.associativity_violation().is_none());

        let z3 = fixtures::cyclic_group(3);
        let z3one = z3.adjoin_identity();
        assert_eq!(z3one.order(), 4);
        assert!(z3one.associativity_violation().is_none());
        // the adjoined identity is a second idempotent beside the group's own
        assert_eq!(z3one.idempotents(), vec![0, 3]);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(z3one.mul(a, b), z3.mul(a, b));
            }
        }
    }

    #[test]
    fn closure_examples() {
        let z3 = fixtures::cyclic_group(3);
        assert_eq!(z3.closure(&[1]).unwrap().members(), &[0, 1, 2]);

        let b2 = fixtures::brandt_b2();
        let a12 = fixtures::B2_A12;
        assert_eq!(b2.closure(&[a12]).unwrap().members(), &[a12, fixtures::B2_ZERO]);

        let n2 = fixtures::null_semigroup(2);
        assert_eq!(n2.closure(&[1]).unwrap().members(), &[0, 1]);
        assert_eq!(n2.closure(&[]).unwrap_err(), Error::EmptySeed);
    }

    #[test]
    fn cancellative_examples() {
        let z3 = fixtures::cyclic_group(3);
        assert!(z3.whole().is_cancellative());
        let n2 = fixtures::null_semigroup(2);
        assert!(!n2.whole().is_cancellative());
        let lz2 = fixtures::left_zero(2);
        assert!(!lz2.whole().is_cancellative());
    }

    #[test]
    fn reversibility_examples() {
        let z3 = fixtures::cyclic_group(3);
        assert!(z3.whole().is_right_reversible());
        assert!(z3.whole().is_left_reversible());
        // LZ2: Sx = {yx : y} = S for every x, so right reversible; xS = {x}
        let lz2 = fixtures::left_zero(2);
        assert!(lz2.whole().is_right_reversible());
        assert!(!lz2.whole().is_left_reversible());
        let b2 = fixtures::brandt_b2();
        assert!(b2.whole().is_right_reversible());
        assert!(b2.whole().is_left_reversible());
    }

    #[test]
    fn subsemigroup_rejects_open_subset() {
        let b2 = fixtures::brandt_b2();
        let err = b2.subsemigroup(&[fixtures::B2_E11, fixtures::B2_A12]).unwrap_err();
        // e11 * a12 = a12 stays inside; a12 * e11 = 0 does not
        match err {
            Error::NotClosed { product, .. } => assert_eq!(product, fixtures::B2_ZERO),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rees_quotient_of_null_semigroup() {
        let n2 = fixtures::null_semigroup(2);
        let (f, keep) = n2.rees_quotient(&[true, true], &[true, false]);
        assert_eq!(keep, vec![1]);
        assert_eq!(f.order(), 2);
        assert_eq!(f.mul(0, 0), 1);
    }
}
