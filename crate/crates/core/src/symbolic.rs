//! Three infinite inverse semigroups `Q = G ∪ I` where `G = ⟨a⟩` is the free
//! cyclic group acting on an ideal `I` by `aⁱ(u,v) = (i+u, v)` and
//! `(u,v)aⁱ = (u, v−i)`:
//!
//! * [`Example::IntegerBrandt`]: `I` the Brandt semigroup over the trivial
//!   group on `ℤ×ℤ`, with `S = {aⁱ : i ≥ 0} ∪ (ℕ×ℤ) ∪ (ℤ×ℕ⁻) ∪ {0}`.
//! * [`Example::CyclicBrandt`]: the same over `ℤ_n×ℤ_n`, `n > 2`, with
//!   `S = {aⁱ : i ≥ 0} ∪ I`.
//! * [`Example::IntegerBicyclic`]: `I = ℤ×ℤ` with
//!   `(u,v)(x,y) = (u−v+t, y−x+t)`, `t = max(v, x)`, and
//!   `S = {aⁱ : i ≥ 0} ∪ {(u,v) : u ≥ v}`.
//!
//! Products are exact. Quantified claims range over a window `|·| ≤ W` and
//! are reported as window-verified only.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::relation::RelationMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Example {
    IntegerBrandt,
    CyclicBrandt(i64),
    IntegerBicyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymElem {
    GPow(i64),
    Pair(i64, i64),
    Zero,
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymElem::GPow(i) => write!(f, "a^{i}"),
            SymElem::Pair(u, v) => write!(f, "({u},{v})"),
            SymElem::Zero => f.write_str("0"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreenRelation {
    L,
    R,
    H,
    D,
}

pub const MIN_WINDOW: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolicSemigroup {
    kind: Example,
}

impl SymbolicSemigroup {
    pub fn new(kind: Example) -> Result<Self> {
        if let Example::CyclicBrandt(n) = kind {
            if n <= 2 {
                return Err(Error::PreconditionFailed(format!("modulus {n} must exceed 2")));
            }
        }
        Ok(SymbolicSemigroup { kind })
    }

    pub fn kind(&self) -> Example {
        self.kind
    }

    fn modulus(&self) -> Option<i64> {
        match self.kind {
            Example::CyclicBrandt(n) => Some(n),
            _ => None,
        }
    }

    fn reduce(&self, x: i64) -> i64 {
        match self.modulus() {
            Some(n) => x.rem_euclid(n),
            None => x,
        }
    }

    fn has_zero(&self) -> bool {
        !matches!(self.kind, Example::IntegerBicyclic)
    }

    pub fn contains(&self, x: SymElem) -> bool {
        match x {
            SymElem::GPow(_) => true,
            SymElem::Zero => self.has_zero(),
            SymElem::Pair(u, v) => self.reduce(u) == u && self.reduce(v) == v,
        }
    }

    fn check(&self, x: SymElem) -> Result<()> {
        if self.contains(x) { Ok(()) } else { Err(Error::WrongSemigroup) }
    }

    pub fn mul(&self, x: SymElem, y: SymElem) -> Result<SymElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: SymElem, y: SymElem) -> SymElem {
        use SymElem::*;
        match (x, y) {
            (Zero, _) | (_, Zero) => Zero,
            (GPow(i), GPow(j)) => GPow(i + j),
            (GPow(i), Pair(u, v)) => Pair(self.reduce(i + u), v),
            (Pair(u, v), GPow(i)) => Pair(u, self.reduce(v - i)),
            (Pair(u, v), Pair(x, y)) => match self.kind {
                Example::IntegerBicyclic => {
                    let t = v.max(x);
                    Pair(u - v + t, y - x + t)
                }
                _ if v == x => Pair(u, y),
                _ => Zero,
            },
        }
    }

    fn prod(&self, word: &[SymElem]) -> SymElem {
        word[1..].iter().fold(word[0], |acc, &y| self.mul_unchecked(acc, y))
    }

    /// Membership in the designated subsemigroup `S`.
    pub fn in_s(&self, x: SymElem) -> bool {
        match x {
            SymElem::GPow(i) => i >= 0,
            SymElem::Zero => self.has_zero(),
            SymElem::Pair(u, v) => match self.kind {
                Example::IntegerBrandt => u >= 0 || v < 0,
                Example::CyclicBrandt(_) => true,
                Example::IntegerBicyclic => u >= v,
            },
        }
    }

    /// The unique inverse `x′`.
    pub fn inverse(&self, x: SymElem) -> SymElem {
        match x {
            SymElem::GPow(i) => SymElem::GPow(-i),
            SymElem::Pair(u, v) => SymElem::Pair(v, u),
            SymElem::Zero => SymElem::Zero,
        }
    }

    /// Group inverse `x♯`, when `x` lies in a subgroup.
    pub fn sharp(&self, x: SymElem) -> Option<SymElem> {
        match x {
            SymElem::GPow(i) => Some(SymElem::GPow(-i)),
            SymElem::Pair(u, v) if u == v => Some(x),
            SymElem::Pair(..) => None,
            SymElem::Zero => Some(x),
        }
    }

    /// Green's relations on `Q` from the structure: `G` is one `H`-class,
    /// the ideal has `R` by first and `L` by second coordinate, all of its
    /// nonzero elements are `D`-related, and `0` is alone.
    pub fn green_oracle(&self, x: SymElem, y: SymElem, rel: GreenRelation) -> Result<bool> {
        use SymElem::*;
        self.check(x)?;
        self.check(y)?;
        Ok(match (x, y) {
            (GPow(_), GPow(_)) | (Zero, Zero) => true,
            (Pair(u, v), Pair(p, q)) => match rel {
                GreenRelation::R => u == p,
                GreenRelation::L => v == q,
                GreenRelation::H => u == p && v == q,
                GreenRelation::D => true,
            },
            _ => false,
        })
    }

    /// Elements of `Q` with every integer component in `[−w, w]`.
    pub fn window(&self, w: i64) -> Vec<SymElem> {
        let mut out: Vec<SymElem> = (-w..=w).map(SymElem::GPow).collect();
        let coords: Vec<i64> = match self.modulus() {
            Some(n) => (0..n).collect(),
            None => (-w..=w).collect(),
        };
        for &u in &coords {
            for &v in &coords {
                out.push(SymElem::Pair(u, v));
            }
        }
        if self.has_zero() {
            out.push(SymElem::Zero);
        }
        out
    }
}

/// Products of windowed elements, with `None` when the product leaves the
/// window.
pub struct WindowTable {
    pub elements: Vec<SymElem>,
    index: BTreeMap<SymElem, usize>,
    table: Vec<Option<usize>>,
}

impl WindowTable {
    pub fn new(q: &SymbolicSemigroup, elements: Vec<SymElem>) -> Self {
        let index: BTreeMap<SymElem, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for &x in &elements {
            for &y in &elements {
                table.push(index.get(&q.mul_unchecked(x, y)).copied());
            }
        }
        WindowTable { elements, index, table }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: SymElem) -> Option<usize> {
        self.index.get(&x).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i * self.elements.len() + j]
    }

    /// `x ≤ y` when `x = yz` (or `zy` when `left`) with `z` in the window,
    /// closed reflexively and transitively. Every pair is certified.
    pub fn certified_preorder(&self, left: bool) -> RelationMatrix {
        let n = self.len();
        let mut m = RelationMatrix::identity(n);
        for y in 0..n {
            for z in 0..n {
                let p = if left { self.mul(z, y) } else { self.mul(y, z) };
                if let Some(x) = p {
                    m.insert(x, y);
                }
            }
        }
        m.reflexive_transitive_closure()
    }

    /// Certified `L`, `R`, `H`, `D` inside the window.
    pub fn certified(&self, rel: GreenRelation) -> RelationMatrix {
        let l = self.certified_preorder(true).symmetric_part();
        let r = self.certified_preorder(false).symmetric_part();
        match rel {
            GreenRelation::L => l,
            GreenRelation::R => r,
            GreenRelation::H => l.intersection(&r),
            GreenRelation::D => l.compose(&r),
        }
    }
}

/// Agreement of the oracle with windowed certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAgreement {
    /// A certified pair the oracle denies; always a defect.
    pub contradiction: Option<(SymElem, SymElem)>,
    /// Oracle-related pairs with no certificate inside the window.
    pub unconfirmed: usize,
    pub pairs: usize,
}

pub fn oracle_agreement(q: &SymbolicSemigroup, w: i64, rel: GreenRelation) -> OracleAgreement {
    let t = WindowTable::new(q, q.window(w));
    let cert = t.certified(rel);
    let mut out = OracleAgreement { contradiction: None, unconfirmed: 0, pairs: 0 };
    for (i, &x) in t.elements.iter().enumerate() {
        for (j, &y) in t.elements.iter().enumerate() {
            out.pairs += 1;
            let oracle = q.green_oracle(x, y, rel).expect("windowed elements belong to q");
            if cert.contains(i, j) && !oracle && out.contradiction.is_none() {
                out.contradiction = Some((x, y));
            }
            if oracle && !cert.contains(i, j) {
                out.unconfirmed += 1;
            }
        }
    }
    out
}

/// First windowed `(x, y, z)` with `(xy)z ≠ x(yz)`.
pub fn associativity_violation(q: &SymbolicSemigroup, w: i64) -> Option<(SymElem, SymElem, SymElem)> {
    let els = q.window(w);
    for &x in &els {
        for &y in &els {
            let xy = q.mul_unchecked(x, y);
            for &z in &els {
                if q.mul_unchecked(xy, z) != q.mul_unchecked(x, q.mul_unchecked(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// First windowed pair of `S` whose product leaves `S`.
pub fn closure_violation(q: &SymbolicSemigroup, w: i64) -> Option<(SymElem, SymElem)> {
    let s: Vec<SymElem> = q.window(w).into_iter().filter(|&x| q.in_s(x)).collect();
    for &x in &s {
        for &y in &s {
            if !q.in_s(q.mul_unchecked(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Windowed `x, y ∈ S` showing `a` is not `H*`-related to `a²` in `S`:
/// one of `ax = ay`, `xa = ya` differs from the same with `a²`.
pub fn square_cancellable_refutation(q: &SymbolicSemigroup, w: i64, a: SymElem) -> Option<(SymElem, SymElem)> {
    let a2 = q.mul_unchecked(a, a);
    let s: Vec<SymElem> = q.window(w).into_iter().filter(|&x| q.in_s(x)).collect();
    let m = |x, y| q.mul_unchecked(x, y);
    for &x in &s {
        for &y in &s {
            if (m(a, x) == m(a, y)) != (m(a2, x) == m(a2, y)) || (m(x, a) == m(y, a)) != (m(x, a2) == m(y, a2)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// `q = a♯b` with `a, b` windowed in `S`, `a` in a subgroup and `a R b`.
pub fn straight_witness(q: &SymbolicSemigroup, w: i64, target: SymElem) -> Option<(SymElem, SymElem)> {
    let s: Vec<SymElem> = q.window(w).into_iter().filter(|&x| q.in_s(x)).collect();
    for &a in &s {
        let Some(inv) = q.sharp(a) else { continue };
        for &b in &s {
            if q.mul_unchecked(inv, b) == target && q.green_oracle(a, b, GreenRelation::R).unwrap_or(false) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Smallest `k` in `1..=limit` with `φ_a^k(R_q) = R_q`, where `φ_a` sends
/// `R_b` to `R_{ab}` and `a` is the generator.
pub fn phi_period(q: &SymbolicSemigroup, target: SymElem, limit: i64) -> Option<i64> {
    (1..=limit).find(|&k| {
        let image = q.mul_unchecked(SymElem::GPow(k), target);
        q.green_oracle(image, target, GreenRelation::R).unwrap_or(false)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymClaim {
    pub name: &'static str,
    pub holds: bool,
    pub witness: Vec<SymElem>,
    pub detail: String,
}

impl SymClaim {
    fn new(name: &'static str, holds: bool, witness: Vec<SymElem>, detail: String) -> Self {
        SymClaim { name, holds, witness, detail }
    }
}

/// Runs the window checks for one example. Every claim is expected to hold.
pub fn sym_claims_check(kind: Example, w: i64) -> Result<Vec<SymClaim>> {
    if w < MIN_WINDOW {
        return Err(Error::WindowTooSmall { window: w, minimum: MIN_WINDOW });
    }
    let q = SymbolicSemigroup::new(kind)?;
    let mut out = Vec::new();
    let assoc = associativity_violation(&q, w);
    out.push(SymClaim::new(
        "associative",
        assoc.is_none(),
        assoc.map(|(x, y, z)| vec![x, y, z]).unwrap_or_default(),
        format!("{} windowed elements", q.window(w).len()),
    ));
    let closed = closure_violation(&q, w);
    out.push(SymClaim::new(
        "S closed",
        closed.is_none(),
        closed.map(|(x, y)| vec![x, y]).unwrap_or_default(),
        String::new(),
    ));
    for rel in [GreenRelation::L, GreenRelation::R, GreenRelation::H, GreenRelation::D] {
        let ag = oracle_agreement(&q, w, rel);
        out.push(SymClaim::new(
            match rel {
                GreenRelation::L => "L oracle",
                GreenRelation::R => "R oracle",
                GreenRelation::H => "H oracle",
                GreenRelation::D => "D oracle",
            },
            ag.contradiction.is_none(),
            ag.contradiction.map(|(x, y)| vec![x, y]).unwrap_or_default(),
            format!("{} pairs, {} related pairs without a windowed certificate", ag.pairs, ag.unconfirmed),
        ));
    }
    match kind {
        Example::IntegerBrandt => integer_brandt_claims(&q, w, &mut out),
        Example::CyclicBrandt(n) => cyclic_brandt_claims(&q, w, n, &mut out),
        Example::IntegerBicyclic => bicyclic_claims(&q, w, &mut out),
    }
    Ok(out)
}

/// Elements of the ideal outside `S`, windowed.
fn outside_s(q: &SymbolicSemigroup, w: i64) -> Vec<SymElem> {
    q.window(w).into_iter().filter(|&x| matches!(x, SymElem::Pair(..)) && !q.in_s(x)).collect()
}

/// `x = (aⁱ)♯ y` and `x = z (aʲ)♯`, all factors in `S`.
fn check_decomposition(
    q: &SymbolicSemigroup,
    target: SymElem,
    left: (i64, SymElem),
    right: (SymElem, i64),
) -> bool {
    let (i, y) = left;
    let (z, j) = right;
    q.in_s(SymElem::GPow(i))
        && q.in_s(y)
        && q.mul_unchecked(SymElem::GPow(-i), y) == target
        && q.in_s(SymElem::GPow(j))
        && q.in_s(z)
        && q.mul_unchecked(z, SymElem::GPow(-j)) == target
}

fn negative_powers_claim(q: &SymbolicSemigroup, w: i64, out: &mut Vec<SymClaim>) {
    // a^i = (a^-i)# a^0 for i < 0
    let bad = (-w..0).find(|&i| q.mul_unchecked(SymElem::GPow(i), SymElem::GPow(0)) != SymElem::GPow(i));
    out.push(SymClaim::new(
        "negative powers are quotients",
        bad.is_none(),
        bad.map(|i| vec![SymElem::GPow(i)]).unwrap_or_default(),
        String::new(),
    ));
}

/// Windowed elements of `S` not refuted as square cancellable must satisfy
/// `accept`; `certificate` supplies an exact refutation when the window is
/// too narrow.
fn square_cancellable_claim(
    q: &SymbolicSemigroup,
    w: i64,
    name: &'static str,
    accept: impl Fn(SymElem) -> bool,
    certificate: impl Fn(SymElem) -> Option<(SymElem, SymElem)>,
    out: &mut Vec<SymClaim>,
) {
    let mut candidates = 0;
    let mut bad = None;
    for a in q.window(w).into_iter().filter(|&a| q.in_s(a)) {
        let refuted = square_cancellable_refutation(q, w, a).is_some()
            || certificate(a).is_some_and(|(x, y)| {
                let a2 = q.mul_unchecked(a, a);
                q.in_s(x)
                    && q.in_s(y)
                    && q.mul_unchecked(x, a2) == q.mul_unchecked(y, a2)
                    && q.mul_unchecked(x, a) != q.mul_unchecked(y, a)
            });
        if !refuted {
            candidates += 1;
            if !accept(a) && bad.is_none() {
                bad = Some(a);
            }
        }
    }
    out.push(SymClaim::new(
        name,
        bad.is_none(),
        bad.into_iter().collect(),
        format!("{candidates} windowed candidates"),
    ));
}

fn not_very_large_claim(q: &SymbolicSemigroup, w: i64, out: &mut Vec<SymClaim>) {
    let missing = outside_s(q, w);
    // H is trivial on the ideal, so S meets H_x only if x ∈ S
    let bad = missing.iter().copied().find(|&x| {
        q.window(w).into_iter().any(|y| q.in_s(y) && q.green_oracle(x, y, GreenRelation::H).unwrap_or(false))
    });
    out.push(SymClaim::new(
        "not very large",
        !missing.is_empty() && bad.is_none(),
        bad.into_iter().collect(),
        format!("{} windowed H-classes miss S", missing.len()),
    ));
}

fn no_straight_witness_claim(q: &SymbolicSemigroup, w: i64, target: SymElem, out: &mut Vec<SymClaim>) {
    let found = straight_witness(q, w, target);
    out.push(SymClaim::new(
        "not straight",
        found.is_none(),
        found.map(|(a, b)| vec![a, b]).unwrap_or_else(|| vec![target]),
        format!("no straight witness for {target} in windowed S"),
    ));
}

fn aperiodic_phi_claim(q: &SymbolicSemigroup, w: i64, out: &mut Vec<SymClaim>) {
    let origin = SymElem::Pair(0, 0);
    let period = phi_period(q, origin, w);
    out.push(SymClaim::new(
        "phi_a aperiodic",
        period.is_none(),
        period.map(|k| vec![SymElem::GPow(k)]).unwrap_or_default(),
        format!("no period up to {w}"),
    ));
}

fn integer_brandt_claims(q: &SymbolicSemigroup, w: i64, out: &mut Vec<SymClaim>) {
    negative_powers_claim(q, w, out);
    let bad = outside_s(q, w).into_iter().find(|&x| {
        let SymElem::Pair(u, v) = x else { return true };
        !check_decomposition(q, x, (-u, SymElem::Pair(0, v)), (SymElem::Pair(u, -1), v + 1))
    });
    out.push(SymClaim::new("decompositions", bad.is_none(), bad.into_iter().collect(), String::new()));
    square_cancellable_claim(
        q,
        w,
        "square cancellable lie in subgroups",
        |a| q.sharp(a).is_some(),
        |_| None,
        out,
    );
    not_very_large_claim(q, w, out);
    no_straight_witness_claim(q, w, SymElem::Pair(-1, 0), out);
    aperiodic_phi_claim(q, w, out);
}

fn cyclic_brandt_claims(q: &SymbolicSemigroup, w: i64, n: i64, out: &mut Vec<SymClaim>) {
    negative_powers_claim(q, w, out);
    // q = (qq')# q = q (q'q)#
    let bad = q.window(w).into_iter().filter(|&x| matches!(x, SymElem::Pair(..))).find(|&x| {
        let inv = q.inverse(x);
        let e = q.mul_unchecked(x, inv);
        let f = q.mul_unchecked(inv, x);
        let r = |a, b| q.green_oracle(a, b, GreenRelation::R).unwrap_or(false);
        let l = |a, b| q.green_oracle(a, b, GreenRelation::L).unwrap_or(false);
        q.mul_unchecked(q.sharp(e).unwrap_or(SymElem::Zero), x) != x
            || q.mul_unchecked(x, q.sharp(f).unwrap_or(SymElem::Zero)) != x
            || !r(x, e)
            || !l(x, f)
            || !q.in_s(e)
            || !q.in_s(f)
    });
    out.push(SymClaim::new("explicit straight quotients", bad.is_none(), bad.into_iter().collect(), String::new()));
    let bad = q.window(w).into_iter().find(|&x| straight_witness(q, w, x).is_none());
    out.push(SymClaim::new(
        "straight weak order",
        bad.is_none(),
        bad.into_iter().collect(),
        String::from("every windowed element has a straight witness"),
    ));
    // a H a^0 but a(0,0) = (1,0) is not H-related to a^0(0,0) = (0,0)
    let a = SymElem::GPow(1);
    let e = SymElem::GPow(0);
    let z = SymElem::Pair(0, 0);
    let az = q.mul_unchecked(a, z);
    let ez = q.mul_unchecked(e, z);
    let h = |x, y| q.green_oracle(x, y, GreenRelation::H).unwrap_or(false);
    out.push(SymClaim::new(
        "H not a congruence",
        h(a, e) && az == SymElem::Pair(1, 0) && ez == z && !h(az, ez),
        vec![a, z, az, ez],
        format!("{a}{z} = {az} is not H-related to {ez}"),
    ));
    let period = phi_period(q, z, w.max(n));
    let b = z;
    let target = q.mul_unchecked(SymElem::GPow(-1), b);
    let k = period.map(|p| p - 1).unwrap_or(-1);
    let holds = period == Some(n) && k >= 0 && h(target, q.mul_unchecked(SymElem::GPow(k), b));
    out.push(SymClaim::new(
        "phi_a has finite order",
        holds,
        vec![a, b, target],
        format!("order {period:?}, {target} H a^{k} {b}"),
    ));
}

fn bicyclic_claims(q: &SymbolicSemigroup, w: i64, out: &mut Vec<SymClaim>) {
    negative_powers_claim(q, w, out);
    let bad = outside_s(q, w).into_iter().find(|&x| {
        let SymElem::Pair(u, v) = x else { return true };
        !check_decomposition(q, x, (v - u, SymElem::Pair(v, v)), (SymElem::Pair(u, u), v - u))
    });
    out.push(SymClaim::new("decompositions", bad.is_none(), bad.into_iter().collect(), String::new()));
    let els = q.window(w);
    let idempotents: Vec<SymElem> =
        els.iter().copied().filter(|&x| matches!(x, SymElem::Pair(..)) && q.mul_unchecked(x, x) == x).collect();
    let diagonal = idempotents.iter().all(|x| matches!(x, SymElem::Pair(u, v) if u == v))
        && idempotents.len() == (2 * w + 1) as usize;
    out.push(SymClaim::new(
        "idempotents are the diagonal",
        diagonal,
        idempotents.iter().copied().filter(|x| !matches!(x, SymElem::Pair(u, v) if u == v)).collect(),
        format!("{} windowed idempotents", idempotents.len()),
    ));
    let bad = els.iter().copied().find(|&x| match x {
        SymElem::Pair(u, v) if u >= v => q.mul_unchecked(x, x) != SymElem::Pair(2 * u - v, v),
        _ => false,
    });
    out.push(SymClaim::new("square formula on S", bad.is_none(), bad.into_iter().collect(), String::new()));
    let bad = els.iter().copied().find(|&x| matches!(x, SymElem::Pair(..)) && q.prod(&[x, q.inverse(x), x]) != x);
    out.push(SymClaim::new("inverse", bad.is_none(), bad.into_iter().collect(), String::new()));
    square_cancellable_claim(
        q,
        w,
        "square cancellable are idempotent",
        |a| matches!(a, SymElem::GPow(_)) || q.mul_unchecked(a, a) == a,
        |a| match a {
            SymElem::Pair(u, v) => Some((SymElem::Pair(u, u), SymElem::Pair(2 * u - v, 2 * u - v))),
            _ => None,
        },
        out,
    );
    not_very_large_claim(q, w, out);
    no_straight_witness_claim(q, w, SymElem::Pair(-1, 0), out);
    aperiodic_phi_claim(q, w, out);
    out.push(bicyclic_semisimplicity_claim(q, w));
}

/// In `D` itself, `a = (0,0)`, `b = (1,2)`: `a J ab` but not `a R ab`, and
/// the idempotents `(1,1) < (0,0)` share a `D`-class.
fn bicyclic_semisimplicity_claim(q: &SymbolicSemigroup, w: i64) -> SymClaim {
    let a = SymElem::Pair(0, 0);
    let b = SymElem::Pair(1, 2);
    let ab = q.mul_unchecked(a, b);
    let pairs: Vec<SymElem> = q.window(w).into_iter().filter(|x| matches!(x, SymElem::Pair(..))).collect();
    let t = WindowTable::new(q, pairs);
    let d = t.certified(GreenRelation::D);
    let (ia, iab) = (t.index_of(a), t.index_of(ab));
    let j_related = matches!((ia, iab), (Some(i), Some(k)) if d.contains(i, k));
    let r_related = q.green_oracle(a, ab, GreenRelation::R).unwrap_or(true);
    let e = SymElem::Pair(1, 1);
    let below = q.mul_unchecked(a, e) == e && q.mul_unchecked(e, a) == e && e != a;
    SymClaim::new(
        "not completely semisimple",
        ab == SymElem::Pair(1, 2) && j_related && !r_related && below,
        vec![a, b, ab],
        format!("{a}{b} = {ab}: J-related to {a} but not R-related"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(kind: Example) -> SymbolicSemigroup {
        SymbolicSemigroup::new(kind).unwrap()
    }

    #[test]
    fn products() {
        let b = sg(Example::IntegerBrandt);
        assert_eq!(b.mul(SymElem::GPow(2), SymElem::Pair(5, 7)), Ok(SymElem::Pair(7, 7)));
        let d = sg(Example::IntegerBicyclic);
        assert_eq!(d.mul(SymElem::Pair(0, 0), SymElem::Pair(1, 2)), Ok(SymElem::Pair(1, 2)));
        let c = sg(Example::CyclicBrandt(3));
        assert_eq!(c.mul(SymElem::Pair(1, 2), SymElem::Pair(2, 0)), Ok(SymElem::Pair(1, 0)));
        assert_eq!(c.mul(SymElem::Pair(1, 2), SymElem::Pair(1, 0)), Ok(SymElem::Zero));
        assert_eq!(c.mul(SymElem::Pair(3, 0), SymElem::Zero), Err(Error::WrongSemigroup));
        assert_eq!(d.mul(SymElem::Zero, SymElem::Zero), Err(Error::WrongSemigroup));
    }

    #[test]
    fn oracles() {
        use GreenRelation::*;
        let b = sg(Example::IntegerBrandt);
        assert_eq!(b.green_oracle(SymElem::Pair(0, 0), SymElem::Pair(0, 0), H), Ok(true));
        assert_eq!(b.green_oracle(SymElem::GPow(1), SymElem::GPow(5), H), Ok(true));
        assert_eq!(b.green_oracle(SymElem::Pair(0, 0), SymElem::Pair(1, 0), H), Ok(false));
        let d = sg(Example::IntegerBicyclic);
        assert_eq!(d.green_oracle(SymElem::Pair(2, 1), SymElem::Pair(2, 5), R), Ok(true));
        assert_eq!(d.green_oracle(SymElem::Pair(2, 1), SymElem::Pair(3, 1), R), Ok(false));
    }

    #[test]
    fn small_modulus_rejected() {
        assert!(SymbolicSemigroup::new(Example::CyclicBrandt(2)).is_err());
        assert_eq!(
            sym_claims_check(Example::IntegerBrandt, 3),
            Err(Error::WindowTooSmall { window: 3, minimum: 4 })
        );
    }

    #[test]
    fn certified_relations_never_contradict_oracles() {
        for kind in [Example::IntegerBrandt, Example::CyclicBrandt(3), Example::IntegerBicyclic] {
            let q = sg(kind);
            for rel in [GreenRelation::L, GreenRelation::R, GreenRelation::H, GreenRelation::D] {
                let ag = oracle_agreement(&q, 4, rel);
                assert_eq!(ag.contradiction, None, "{kind:?} {rel:?}");
            }
        }
    }

    #[test]
    fn all_claims_hold_at_window_four() {
        for kind in [Example::IntegerBrandt, Example::CyclicBrandt(3), Example::IntegerBicyclic] {
            for c in sym_claims_check(kind, 4).unwrap() {
                assert!(c.holds, "{kind:?}: {} {:?} {}", c.name, c.witness, c.detail);
            }
        }
    }

    #[test]
    fn bicyclic_square_certificate() {
        let d = sg(Example::IntegerBicyclic);
        let (u, v) = (3, 1);
        let a = SymElem::Pair(u, v);
        let a2 = d.mul_unchecked(a, a);
        assert_eq!(a2, SymElem::Pair(2 * u - v, v));
        let x = SymElem::Pair(u, u);
        let y = SymElem::Pair(2 * u - v, 2 * u - v);
        assert_eq!(d.mul_unchecked(x, a2), d.mul_unchecked(y, a2));
        assert_ne!(d.mul_unchecked(x, a), d.mul_unchecked(y, a));
    }
}
