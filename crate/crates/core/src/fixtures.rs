//! Small named semigroups used as curated test instances.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::semigroup::FiniteSemigroup;

pub const B2_E11: usize = 0;
pub const B2_A12: usize = 1;
pub const B2_A21: usize = 2;
pub const B2_E22: usize = 3;
pub const B2_ZERO: usize = 4;

fn build(order: usize, labels: Vec<String>, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(f(a, b));
        }
    }
    FiniteSemigroup::from_flat(order, table)
        .expect("fixture table is associative")
        .with_labels(labels)
        .expect("fixture label count")
}

/// `Z_n` written additively; element `i` is `g^i`, `0` the identity `e`.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    build(n, labels, |a, b| (a + b) % n)
}

/// `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    build(n, (0..n).map(|i| format!("x{i}")).collect(), |a, _| a)
}

/// `xy = y`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    build(n, (0..n).map(|i| format!("x{i}")).collect(), |_, b| b)
}

/// `I × Λ` with `(i, j)(k, l) = (i, l)`; element `(i, j)` at `i * cols + j`.
pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroup {
    let labels = (0..rows * cols).map(|x| format!("r{}{}", x / cols + 1, x % cols + 1)).collect();
    build(rows * cols, labels, |a, b| (a / cols) * cols + b % cols)
}

/// Zero at index 0, every product equal to it.
pub fn null_semigroup(n: usize) -> FiniteSemigroup {
    let labels = (0..n)
        .map(|i| if i == 0 { "0".to_string() } else { format!("a{i}") })
        .collect();
    build(n, labels, |_, _| 0)
}

/// Brandt semigroup over the trivial group on `n × n`: element `(i, j)` at
/// `i * n + j`, zero at `n²`, `(i, j)(k, l) = (i, l)` when `j = k`.
pub fn brandt(n: usize) -> FiniteSemigroup {
    let zero = n * n;
    let mut labels: Vec<String> = (0..zero)
        .map(|x| {
            let (i, j) = (x / n + 1, x % n + 1);
            if i == j { format!("e{i}{j}") } else { format!("a{i}{j}") }
        })
        .collect();
    labels.push("0".to_string());
    build(zero + 1, labels, |a, b| {
        if a == zero || b == zero || a % n != b / n {
            zero
        } else {
            (a / n) * n + b % n
        }
    })
}

/// `B2` with elements `e11, a12, a21, e22, 0` at indices `0..5`.
pub fn brandt_b2() -> FiniteSemigroup {
    brandt(2)
}

/// Symmetric group on three points, permutations in lexicographic order.
pub fn symmetric_group_s3() -> FiniteSemigroup {
    let perms: Vec<[usize; 3]> =
        vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let labels = perms.iter().map(|p| format!("{}{}{}", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
    // (pq)(x) = q(p(x)): maps applied left to right
    build(6, labels, |a, b| {
        let (p, q) = (perms[a], perms[b]);
        index([q[p[0]], q[p[1]], q[p[2]]])
    })
}

/// Full transformation monoid on two points, maps applied left to right.
pub fn full_transformations_t2() -> FiniteSemigroup {
    let maps: [[usize; 2]; 4] = [[0, 1], [1, 0], [0, 0], [1, 1]];
    let labels = vec!["id".into(), "swap".into(), "c1".into(), "c2".into()];
    build(4, labels, |a, b| {
        let (p, q) = (maps[a], maps[b]);
        let r = [q[p[0]], q[p[1]]];
        maps.iter().position(|m| *m == r).unwrap()
    })
}

/// Symmetric inverse monoid on two points (partial bijections, left to right).
pub fn symmetric_inverse_i2() -> FiniteSemigroup {
    const NONE: usize = usize::MAX;
    let maps: [[usize; 2]; 7] =
        [[0, 1], [1, 0], [0, NONE], [NONE, 1], [1, NONE], [NONE, 0], [NONE, NONE]];
    let labels = vec![
        "id".into(),
        "swap".into(),
        "e1".into(),
        "e2".into(),
        "t12".into(),
        "t21".into(),
        "0".into(),
    ];
    build(7, labels, |a, b| {
        let (p, q) = (maps[a], maps[b]);
        let apply = |x: usize| if x == NONE { NONE } else { q[x] };
        let r = [apply(p[0]), apply(p[1])];
        maps.iter().position(|m| *m == r).unwrap()
    })
}

/// A named curated instance.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub semigroup: FiniteSemigroup,
}

/// The default curated set: `Z3, LZ2, RB22, N2, B2, B2¹` and two regular
/// semigroups of order 6 (`S3`, and the rectangular group `Z3 × LZ2`),
/// plus `T2` and `I2`.
pub fn curated() -> Vec<Fixture> {
    vec![
        Fixture { name: "Z3", semigroup: cyclic_group(3) },
        Fixture { name: "LZ2", semigroup: left_zero(2) },
        Fixture { name: "RB22", semigroup: rectangular_band(2, 2) },
        Fixture { name: "N2", semigroup: null_semigroup(2) },
        Fixture { name: "B2", semigroup: brandt_b2() },
        Fixture { name: "B2+1", semigroup: brandt_b2().adjoin_identity() },
        Fixture { name: "S3", semigroup: symmetric_group_s3() },
        Fixture { name: "Z3xLZ2", semigroup: cyclic_group(3).direct_product(&left_zero(2)) },
        Fixture { name: "T2", semigroup: full_transformations_t2() },
        Fixture { name: "I2", semigroup: symmetric_inverse_i2() },
    ]
}

pub fn by_name(name: &str) -> Option<FiniteSemigroup> {
    curated().into_iter().find(|f| f.name.eq_ignore_ascii_case(name)).map(|f| f.semigroup)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_products() {
        let b2 = brandt_b2();
        assert_eq!(b2.mul(B2_A12, B2_A21), B2_E11);
        assert_eq!(b2.mul(B2_A21, B2_A12), B2_E22);
        assert_eq!(b2.mul(B2_A12, B2_A12), B2_ZERO);
        assert_eq!(b2.mul(B2_E11, B2_A12), B2_A12);
        assert_eq!(b2.zero(), Some(B2_ZERO));
        assert_eq!(b2.label(B2_A12), "a12");
    }

    #[test]
    fn curated_orders() {
        let orders: Vec<(&str, usize)> = curated().iter().map(|f| (f.name, f.semigroup.order())).collect();
        assert_eq!(
            orders,
            vec![
                ("Z3", 3),
                ("LZ2", 2),
                ("RB22", 4),
                ("N2", 2),
                ("B2", 5),
                ("B2+1", 6),
                ("S3", 6),
                ("Z3xLZ2", 6),
                ("T2", 4),
                ("I2", 7)
            ]
        );
        assert!(!symmetric_group_s3().is_commutative());
        assert_eq!(symmetric_inverse_i2().identity(), Some(0));
        assert_eq!(full_transformations_t2().identity(), Some(0));
    }
}
