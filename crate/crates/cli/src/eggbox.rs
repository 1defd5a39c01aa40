//! ASCII egg-box diagrams: one grid per `D`-class, rows are `R`-classes,
//! columns are `L`-classes, and `*` marks a group `H`-class.

use qkit_core::{FiniteSemigroup, GreenData};
use std::fmt::Write as _;

pub fn render(q: &FiniteSemigroup, green: &GreenData) -> String {
    let mut out = String::new();
    for (k, dclass) in green.d.classes().iter().enumerate() {
        let mut rows: Vec<usize> = dclass.iter().map(|&x| green.r.class_of(x)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut cols: Vec<usize> = dclass.iter().map(|&x| green.l.class_of(x)).collect();
        cols.sort_unstable();
        cols.dedup();
        let cell = |r: usize, c: usize| -> String {
            let h: Vec<usize> = dclass
                .iter()
                .copied()
                .filter(|&x| green.r.class_of(x) == r && green.l.class_of(x) == c)
                .collect();
            let mut text = h.iter().map(|&x| q.label(x)).collect::<Vec<_>>().join(",");
            if h.first().is_some_and(|&x| green.in_subgroup(x)) {
                text.push('*');
            }
            text
        };
        let grid: Vec<Vec<String>> = rows.iter().map(|&r| cols.iter().map(|&c| cell(r, c)).collect()).collect();
        let width = grid.iter().flatten().map(String::len).max().unwrap_or(1);
        let rule = format!("+{}", format!("{}+", "-".repeat(width + 2)).repeat(cols.len()));
        writeln!(out, "D-class {k}").unwrap();
        writeln!(out, "{rule}").unwrap();
        for row in &grid {
            let mut line = String::from("|");
            for c in row {
                write!(line, " {c:<width$} |").unwrap();
            }
            writeln!(out, "{line}").unwrap();
            writeln!(out, "{rule}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qkit_core::fixtures;

    #[test]
    fn b2_has_two_d_classes() {
        let b2 = fixtures::brandt_b2();
        let text = render(&b2, &GreenData::new(&b2));
        assert_eq!(text.matches("D-class").count(), 2);
        assert_eq!(text.matches('*').count(), 3);
    }

    #[test]
    fn trivial_semigroup_is_one_starred_cell() {
        let t = fixtures::cyclic_group(1);
        let text = render(&t, &GreenData::new(&t));
        assert_eq!(text, "D-class 0\n+----+\n| e* |\n+----+\n");
    }
}
