//! Suite behaviour beyond the acceptance criteria.

use qkit::harness;
use qkit_core::green;
use qkit_core::theorems::{self, Suite};

/// With `Q` regular, weak left orders in finite `Q` are straight. Without
/// regularity the statement fails, and only on non-regular `Q`.
#[test]
fn finite_r_classes_statement_needs_regular_quotient() {
    let u = theorems::universe(3, true).unwrap();
    let (regular, other): (Vec<_>, Vec<_>) = u.into_iter().partition(|i| green::is_regular(&i.q));
    let r = harness::run(&regular, &[Suite::FiniteRClasses]);
    let out = r.outcome(Suite::FiniteRClasses).unwrap();
    assert!(out.passed() && out.checked > 0, "{:?}", out.failures);
    let r = harness::run(&other, &[Suite::FiniteRClasses]);
    assert!(!r.outcome(Suite::FiniteRClasses).unwrap().passed());
}

#[test]
fn every_suite_passes_on_regular_quotients_of_order_three() {
    let u: Vec<_> = theorems::universe(3, true).unwrap().into_iter().filter(|i| green::is_regular(&i.q)).collect();
    let r = harness::run(&u, &Suite::ALL);
    for (s, out, _) in &r.per_suite {
        assert!(out.passed(), "{s:?}: {:?}", out.failures);
    }
}
