//! Acceptance criteria 1 to 9. Each test prints one PASS/FAIL line.

use qkit::harness;
use qkit_core::symbolic::{self, Example, SymElem};
use qkit_core::theorems::{self, Instance, Suite, SuiteOutcome};
use qkit_core::{enumerate, green};
use std::time::{Duration, Instant};

fn verdict(n: u32, ok: bool, detail: &str) {
    println!("criterion {n}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {detail}");
}

fn universe(fixtures: bool) -> Vec<Instance> {
    theorems::universe(3, fixtures).unwrap()
}

fn summary(out: &SuiteOutcome) -> String {
    let first = out.failures.first().map(|f| format!(", first failure {} {:?} {} {:?}", f.instance, f.sub, f.clause, f.witness));
    format!("{} checks, {} not applicable, {} failures{}", out.checked, out.not_applicable, out.failures.len(), first.unwrap_or_default())
}

fn run(instances: &[Instance], suites: &[Suite]) -> Vec<SuiteOutcome> {
    let r = harness::run(instances, suites);
    suites.iter().map(|&s| r.outcome(s).unwrap().clone()).collect()
}

/// Every table over `n` elements, filtered for associativity.
fn brute_force_count(n: usize) -> u64 {
    let cells = n * n;
    let mut t = vec![0usize; cells];
    let mut count = 0;
    loop {
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])));
        count += assoc as u64;
        let mut i = 0;
        loop {
            if i == cells {
                return count;
            }
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn criterion_1_enumeration_counts() {
    let start = Instant::now();
    let counts: Vec<u64> = (1..=3).map(|n| enumerate::enumerate_semigroups(n, |_| {}).unwrap()).collect();
    let elapsed = start.elapsed();
    let oracle: Vec<u64> = (1..=3).map(brute_force_count).collect();
    let ok = counts == [1, 8, 113] && counts == oracle && elapsed < Duration::from_secs(10);
    verdict(1, ok, &format!("counts {counts:?}, brute force {oracle:?}, {elapsed:.2?}"));
}

#[test]
fn criterion_2_green_lemma() {
    let start = Instant::now();
    let out = &run(&universe(true), &[Suite::GreenLemma])[0];
    let elapsed = start.elapsed();
    let ok = out.passed() && out.checked > 0 && elapsed < Duration::from_secs(60);
    verdict(2, ok, &format!("{}, {elapsed:.2?}", summary(out)));
}

#[test]
fn criterion_3_regular_equivalence() {
    let u = universe(true);
    assert!(u.iter().any(|i| i.name == "B2"));
    let out = &run(&u, &[Suite::StraightEquivalence])[0];
    verdict(3, out.passed() && out.checked > 0, &summary(out));
}

#[test]
fn criterion_4_weak_left_orders_are_straight() {
    let u = universe(false);
    let out = &run(&u, &[Suite::FiniteRClasses])[0];
    let mut failing: Vec<&str> = out.failures.iter().map(|f| f.instance.as_str()).collect();
    failing.sort_unstable();
    failing.dedup();
    let all_non_regular = failing.iter().all(|name| {
        let inst = u.iter().find(|i| i.name == *name).unwrap();
        !green::is_regular(&inst.q)
    });
    let mut classes: Vec<Vec<usize>> = failing
        .iter()
        .map(|name| enumerate::canonical_form(&u.iter().find(|i| i.name == *name).unwrap().q))
        .collect();
    classes.sort_unstable();
    classes.dedup();
    let note = if failing.is_empty() {
        String::new()
    } else {
        format!(
            "; {} failing Q in {} isomorphism classes {:?}, all non-regular: {all_non_regular}",
            failing.len(),
            classes.len(),
            classes
        )
    };
    verdict(4, out.passed() && out.checked > 0, &format!("{}{note}", summary(out)));
}

#[test]
fn criterion_5_straight_orders_give_g_conditions() {
    let out = &run(&universe(true), &[Suite::StraightCharacterization])[0];
    verdict(5, out.passed() && out.checked > 0, &summary(out));
}

#[test]
fn criterion_6_pair_lemmas() {
    let suites = [Suite::LeftWitness, Suite::Absorption, Suite::EviiRedundant, Suite::EggBoxProducts];
    let outs = run(&universe(true), &suites);
    let ok = outs.iter().all(|o| o.passed() && o.checked > 0);
    let detail: Vec<String> = suites.iter().zip(&outs).map(|(s, o)| format!("{}: {}", harness::suite_id(*s), summary(o))).collect();
    verdict(6, ok, &detail.join("; "));
}

#[test]
fn criterion_7_quotient_structure() {
    let suites = [Suite::InverseQuotients, Suite::CompletelyRegularQuotients, Suite::Restrictions, Suite::Semisimple];
    let outs = run(&universe(true), &suites);
    let ok = outs.iter().all(|o| o.passed() && o.checked > 0);
    let detail: Vec<String> = suites.iter().zip(&outs).map(|(s, o)| format!("{}: {}", harness::suite_id(*s), summary(o))).collect();
    verdict(7, ok, &detail.join("; "));
}

#[test]
fn criterion_8_symbolic_examples() {
    const W: i64 = 5;
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut claims_seen = 0;
    for kind in [Example::IntegerBrandt, Example::CyclicBrandt(3), Example::IntegerBicyclic] {
        let claims = symbolic::sym_claims_check(kind, W).unwrap();
        claims_seen += claims.len();
        for c in claims.iter().filter(|c| !c.holds) {
            problems.push(format!("{kind:?} {}: {}", c.name, c.detail));
        }
        let find = |name: &str| claims.iter().find(|c| c.name == name);
        let required: &[&str] = match kind {
            Example::IntegerBrandt => &["decompositions", "not straight", "square cancellable lie in subgroups"],
            Example::CyclicBrandt(_) => &["straight weak order", "H not a congruence"],
            Example::IntegerBicyclic => &[
                "idempotents are the diagonal",
                "square formula on S",
                "square cancellable are idempotent",
                "phi_a aperiodic",
                "not completely semisimple",
            ],
        };
        for name in required {
            if find(name).is_none() {
                problems.push(format!("{kind:?}: claim `{name}` missing"));
            }
        }
        // exact witnesses
        if let Example::CyclicBrandt(_) = kind {
            let w = find("H not a congruence").map(|c| c.witness.clone()).unwrap_or_default();
            let expect = vec![SymElem::GPow(1), SymElem::Pair(0, 0), SymElem::Pair(1, 0), SymElem::Pair(0, 0)];
            if w != expect {
                problems.push(format!("H witness {w:?}"));
            }
        }
        if let Example::IntegerBicyclic = kind {
            let w = find("not completely semisimple").map(|c| c.witness.clone()).unwrap_or_default();
            if w.get(..3) != Some(&[SymElem::Pair(0, 0), SymElem::Pair(1, 2), SymElem::Pair(1, 2)][..]) {
                problems.push(format!("semisimple witness {w:?}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        problems.push(format!("runtime {elapsed:.2?}"));
    }
    verdict(8, problems.is_empty(), &format!("{claims_seen} claims at W = {W}, {elapsed:.2?}; problems {problems:?}"));
}

#[test]
fn criterion_9_oracle_redundancy() {
    let out = &run(&universe(true), &[Suite::Oracles])[0];
    verdict(9, out.passed() && out.checked > 0, &summary(out));
}
