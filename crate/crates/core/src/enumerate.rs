//! Exhaustive enumeration of labeled associative Cayley tables.
//!
//! Cells are filled in row-major order. After each assignment every triple
//! whose four lookups are all filled is checked, so a partial table is
//! abandoned as soon as it contains a non-associative triple.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

pub const MAX_ORDER: usize = 4;

const UNSET: usize = usize::MAX;

/// Visits every associative `n × n` table exactly once; returns the count.
pub fn enumerate_semigroups(n: usize, mut visitor: impl FnMut(&FiniteSemigroup)) -> Result<u64> {
    check_order(n)?;
    let mut count = 0;
    for row in first_rows(n) {
        count += enumerate_with_first_row(n, &row, &mut visitor)?;
    }
    Ok(count)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    Ok(())
}

/// All candidate first rows; the search tree partitions on them.
pub fn first_rows(n: usize) -> Vec<Vec<usize>> {
    let total = n.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut row = vec![0; n];
            for cell in row.iter_mut().rev() {
                *cell = code % n;
                code /= n;
            }
            row
        })
        .collect()
}

/// Visits the associative tables whose first row equals `row`.
pub fn enumerate_with_first_row(
    n: usize,
    row: &[usize],
    mut visitor: impl FnMut(&FiniteSemigroup),
) -> Result<u64> {
    check_order(n)?;
    assert_eq!(row.len(), n);
    let mut table = vec![UNSET; n * n];
    table[..n].copy_from_slice(row);
    for cell in 0..n {
        if !consistent(&table, n, cell) {
            return Ok(0);
        }
    }
    let mut count = 0;
    fill(&mut table, n, n, &mut count, &mut visitor);
    Ok(count)
}

fn fill(table: &mut [usize], n: usize, cell: usize, count: &mut u64, visitor: &mut impl FnMut(&FiniteSemigroup)) {
    if cell == n * n {
        *count += 1;
        visitor(&FiniteSemigroup::from_flat_unchecked(n, table.to_vec()));
        return;
    }
    for v in 0..n {
        table[cell] = v;
        if consistent(table, n, cell) {
            fill(table, n, cell + 1, count, visitor);
        }
    }
    table[cell] = UNSET;
}

/// Checks the triples that became decidable when `cell` was filled.
fn consistent(table: &[usize], n: usize, cell: usize) -> bool {
    let get = |a: usize, b: usize| {
        let v = table[a * n + b];
        (v != UNSET).then_some(v)
    };
    let (x, y) = (cell / n, cell % n);
    // the new cell can play the role of ab, (ab)c, bc or a(bc)
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ab = get(a, b);
                let bc = get(b, c);
                let (Some(ab), Some(bc)) = (ab, bc) else { continue };
                let touches = (a == x && b == y)
                    || (b == x && c == y)
                    || (ab == x && c == y)
                    || (a == x && bc == y);
                if !touches {
                    continue;
                }
                if let (Some(l), Some(r)) = (get(ab, c), get(a, bc)) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Lexicographically least table over all relabelings.
pub fn canonical_form(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut relabeled = vec![0; n * n];
    loop {
        for a in 0..n {
            for b in 0..n {
                relabeled[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
            }
        }
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least one permutation")
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism-class representatives of order `n`, one per canonical form.
pub fn isomorphism_classes(n: usize) -> Result<Vec<FiniteSemigroup>> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut reps = Vec::new();
    enumerate_semigroups(n, |s| {
        let form = canonical_form(s);
        if seen.insert(form.clone()) {
            reps.push(FiniteSemigroup::from_flat_unchecked(n, form));
        }
    })?;
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Test-only oracle: filter every one of the `n^(n²)` tables.
    fn naive_count(n: usize) -> u64 {
        let cells = n * n;
        let total = n.pow(cells as u32);
        let mut count = 0;
        let mut table = vec![0; cells];
        for mut code in 0..total {
            for cell in table.iter_mut() {
                *cell = code % n;
                code /= n;
            }
            let assoc = (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]]))
            });
            if assoc {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_naive_filter() {
        // frozen from the naive filter: 1, 8, 113
        for (n, expected) in [(1, 1), (2, 8), (3, 113)] {
            assert_eq!(naive_count(n), expected);
            assert_eq!(enumerate_semigroups(n, |_| {}).unwrap(), expected);
        }
    }

    #[test]
    fn order_four_count() {
        assert_eq!(enumerate_semigroups(4, |_| {}).unwrap(), 3492);
    }

    #[test]
    fn every_visited_table_is_associative_and_distinct() {
        let mut seen = alloc::collections::BTreeSet::new();
        enumerate_semigroups(3, |s| {
            assert!(s.associativity_violation().is_none());
            assert!(seen.insert(s.table().to_vec()));
        })
        .unwrap();
        assert_eq!(seen.len(), 113);
    }

    #[test]
    fn too_large_rejected() {
        assert_eq!(enumerate_semigroups(5, |_| {}), Err(Error::OrderTooLarge(5)));
    }

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| isomorphism_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 5, 24]);
    }

    #[test]
    fn first_row_partition_covers_tree() {
        let total: u64 = first_rows(3)
            .iter()
            .map(|r| enumerate_with_first_row(3, r, |_| {}).unwrap())
            .sum();
        assert_eq!(total, 113);
    }
}
