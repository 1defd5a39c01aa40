//! Dense boolean relations over element indices, stored as one bitset row per
//! element, plus the partitions induced by equivalence relations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

/// An `n × n` boolean relation. Row `a` holds every `b` with `a ~ b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelationMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl RelationMatrix {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        RelationMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::empty(n);
        for a in 0..n {
            m.insert(a, a);
        }
        m
    }

    pub fn full(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::empty(n);
        for a in 0..n {
            for b in 0..n {
                if f(a, b) {
                    m.insert(a, b);
                }
            }
        }
        m
    }

    /// Number of elements the relation is defined over.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        debug_assert!(a < self.n && b < self.n);
        self.bits[a * self.words + b / WORD] >> (b % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        let w = &mut self.bits[a * self.words + b / WORD];
        let mask = 1u64 << (b % WORD);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / WORD] &= !(1u64 << (b % WORD));
    }

    fn row_words(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    /// Ors row `src` into row `dst`; returns whether `dst` changed.
    fn union_rows(&mut self, src: usize, dst: usize) -> bool {
        let mut changed = false;
        for w in 0..self.words {
            let s = self.bits[src * self.words + w];
            let d = &mut self.bits[dst * self.words + w];
            let next = *d | s;
            changed |= next != *d;
            *d = next;
        }
        changed
    }

    /// Elements `b` with `a ~ b`, ascending.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let words = self.row_words(a);
        words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.row(a).map(move |b| (a, b)))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// First `(a, b, c)` with `a ~ b ~ c` but not `a ~ c`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for b in self.row(a) {
                for c in self.row(b) {
                    if !self.contains(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_preorder() && self.is_symmetric()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::empty(self.n);
        for (a, b) in self.pairs() {
            t.insert(b, a);
        }
        t
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let bits = self.bits.iter().zip(&other.bits).map(|(x, y)| x & y).collect();
        RelationMatrix { n: self.n, words: self.words, bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let bits = self.bits.iter().zip(&other.bits).map(|(x, y)| x | y).collect();
        RelationMatrix { n: self.n, words: self.words, bits }
    }

    /// `self ∘ other`: `a ~ c` iff `a self b` and `b other c` for some `b`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::empty(self.n);
        for a in 0..self.n {
            for b in self.row(a) {
                for w in 0..self.words {
                    out.bits[a * self.words + w] |= other.bits[b * self.words + w];
                }
            }
        }
        out
    }

    /// Reflexive-transitive closure (Warshall over bitset rows).
    pub fn reflexive_transitive_closure(&self) -> Self {
        let mut m = self.clone();
        for a in 0..self.n {
            m.insert(a, a);
        }
        for k in 0..self.n {
            for i in 0..self.n {
                if i != k && m.contains(i, k) {
                    m.union_rows(k, i);
                }
            }
        }
        m
    }

    /// The equivalence `self ∩ selfᵀ` associated with a preorder.
    pub fn symmetric_part(&self) -> Self {
        self.intersection(&self.transpose())
    }

    /// Strict part `a ~ b` and not `b ~ a`.
    pub fn strict_part(&self) -> Self {
        Self::from_fn(self.n, |a, b| self.contains(a, b) && !self.contains(b, a))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(x, y)| x & !y == 0)
    }

    /// First pair in `self` but not in `other`.
    pub fn first_outside(&self, other: &Self) -> Option<(usize, usize)> {
        self.pairs().find(|&(a, b)| !other.contains(a, b))
    }

    /// First pair on which the two relations disagree.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .find(|&(a, b)| self.contains(a, b) != other.contains(a, b))
    }

    /// Restriction to the listed elements, reindexed by position in `members`.
    pub fn restrict(&self, members: &[usize]) -> Self {
        Self::from_fn(members.len(), |i, j| self.contains(members[i], members[j]))
    }

    /// Classes of an equivalence relation, in order of their least element.
    pub fn classes(&self) -> Partition {
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..self.n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = self.row(a).filter(|&b| self.contains(b, a)).collect();
            for &b in &members {
                class_of[b] = id;
            }
            classes.push(members);
        }
        Partition { class_of, classes }
    }
}

impl fmt::Debug for RelationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RelationMatrix({})", self.n)?;
        for a in 0..self.n {
            for b in 0..self.n {
                f.write_str(if self.contains(a, b) { "1" } else { "." })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A partition of `0..n` into classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class(&self, id: usize) -> &[usize] {
        &self.classes[id]
    }

    /// The class containing `a`.
    pub fn class_containing(&self, a: usize) -> &[usize] {
        &self.classes[self.class_of[a]]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_trivial(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    pub fn is_universal(&self) -> bool {
        self.classes.len() <= 1
    }

    pub fn to_relation(&self) -> RelationMatrix {
        RelationMatrix::from_fn(self.class_of.len(), |a, b| self.related(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_chain_is_total_order() {
        let mut m = RelationMatrix::empty(70);
        for a in 0..69 {
            m.insert(a, a + 1);
        }
        let c = m.reflexive_transitive_closure();
        assert!(c.is_preorder());
        assert!(c.contains(0, 69));
        assert!(!c.contains(69, 0));
        assert_eq!(c.count(), 70 * 71 / 2);
    }

    #[test]
    fn compose_matches_definition() {
        let r = RelationMatrix::from_fn(5, |a, b| (a + 1) % 5 == b);
        let s = RelationMatrix::from_fn(5, |a, b| a == b || b == 0);
        let c = r.compose(&s);
        for a in 0..5 {
            for b in 0..5 {
                let expect = (0..5).any(|m| r.contains(a, m) && s.contains(m, b));
                assert_eq!(c.contains(a, b), expect);
            }
        }
    }

    #[test]
    fn classes_of_equivalence() {
        let m = RelationMatrix::from_fn(6, |a, b| a % 3 == b % 3);
        let p = m.classes();
        assert_eq!(p.classes(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert!(p.related(1, 4));
        assert_eq!(p.to_relation(), m);
    }

    #[test]
    fn transitivity_violation_reported() {
        let mut m = RelationMatrix::identity(3);
        m.insert(0, 1);
        m.insert(1, 2);
        assert_eq!(m.transitivity_violation(), Some((0, 1, 2)));
        m.insert(0, 2);
        assert!(m.is_preorder());
        assert!(!m.is_symmetric());
    }
}
