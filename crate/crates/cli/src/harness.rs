//! Runs theorem suites over a universe of semigroups in parallel.

use crate::report::{digest, CheckEntry, Report, Status};
use std::collections::HashMap;
use crate::table;
use qkit_core::theorems::{self, Instance, Suite, SuiteOutcome};
use rayon::prelude::*;
use std::time::Instant;

/// Suite ids accepted by `--suites`. The id doubles as the anchor string in
/// reports.
pub const SUITE_IDS: [(&str, Suite); 21] = [
    ("lemma21", Suite::GreenLemma),
    ("lemma22", Suite::Oversemigroup),
    ("starred", Suite::StarredInvariants),
    ("prop31", Suite::StraightEquivalence),
    ("cor32", Suite::AbelianSymmetry),
    ("cor33", Suite::HCongruence),
    ("cor310", Suite::FiniteRClasses),
    ("lemma37", Suite::PhiAutomorphism),
    ("lemma42", Suite::InducedEmbeddable),
    ("thm44", Suite::StraightCharacterization),
    ("lemma45", Suite::HPrimeProducts),
    ("cor46", Suite::EggBoxProducts),
    ("lemma47", Suite::LeftWitness),
    ("lemma49", Suite::Absorption),
    ("lemma411", Suite::EviiRedundant),
    ("cor51", Suite::InverseQuotients),
    ("cor52", Suite::CompletelyRegularQuotients),
    ("lemma53", Suite::JStructure),
    ("cor56", Suite::Restrictions),
    ("thm57", Suite::Semisimple),
    ("oracles", Suite::Oracles),
];

pub fn suite_by_id(id: &str) -> Option<Suite> {
    SUITE_IDS.iter().find(|(k, _)| k.eq_ignore_ascii_case(id)).map(|&(_, s)| s)
}

pub fn suite_id(suite: Suite) -> &'static str {
    SUITE_IDS.iter().find(|&&(_, s)| s == suite).map(|&(k, _)| k).expect("every suite has an id")
}

pub const MAX_EXHAUSTIVE_ORDER: usize = 3;

#[derive(Debug)]
pub struct HarnessResult {
    pub per_suite: Vec<(Suite, SuiteOutcome, f64)>,
    pub instances: usize,
}

impl HarnessResult {
    pub fn outcome(&self, suite: Suite) -> Option<&SuiteOutcome> {
        self.per_suite.iter().find(|(s, _, _)| *s == suite).map(|(_, o, _)| o)
    }
}

/// Runs `suites` on every instance. Work items are distributed over the
/// current rayon pool and merged in a fixed order (suite, then instance
/// digest) so results do not depend on scheduling.
pub fn run(instances: &[Instance], suites: &[Suite]) -> HarnessResult {
    let mut keyed: Vec<(String, &Instance)> =
        instances.iter().map(|i| (digest(table::render(&i.q).as_bytes()), i)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.name.cmp(&b.1.name)));
    let items: Vec<(usize, usize)> = (0..suites.len()).flat_map(|s| (0..keyed.len()).map(move |i| (s, i))).collect();
    let results: Vec<(usize, SuiteOutcome, f64)> = items
        .par_iter()
        .map(|&(s, i)| {
            let start = Instant::now();
            let out = theorems::run_suite(suites[s], keyed[i].1);
            (s, out, start.elapsed().as_secs_f64() * 1e3)
        })
        .collect();
    let mut per_suite: Vec<(Suite, SuiteOutcome, f64)> =
        suites.iter().map(|&s| (s, SuiteOutcome::default(), 0.0)).collect();
    for (s, out, ms) in results {
        per_suite[s].1.merge(out);
        per_suite[s].2 += ms;
    }
    HarnessResult { per_suite, instances: instances.len() }
}

/// Witness tuples are the instance name followed by element labels.
pub fn to_report(result: &HarnessResult, instances: &[Instance], universe_digest: String) -> Report {
    let mut report = Report::new(universe_digest);
    let by_name: HashMap<&str, &Instance> = instances.iter().map(|i| (i.name.as_str(), i)).collect();
    for (suite, out, ms) in &result.per_suite {
        let witnesses: Vec<Vec<String>> = out
            .failures
            .iter()
            .map(|f| {
                let mut w = vec![f.instance.clone()];
                match by_name.get(f.instance.as_str()) {
                    Some(inst) => w.extend(f.witness.iter().map(|&e| inst.q.label(e))),
                    None => w.extend(f.witness.iter().map(usize::to_string)),
                }
                w
            })
            .collect();
        let status = if out.failures.is_empty() {
            if out.checked == 0 { Status::NotApplicable } else { Status::Holds }
        } else {
            Status::Fails
        };
        let detail = serde_json::json!({
            "instances": result.instances,
            "checked": out.checked,
            "not_applicable": out.not_applicable,
            "failures": out.failures.iter().map(|f| serde_json::json!({
                "instance": f.instance, "subsemigroup": f.sub, "clause": f.clause, "witness": f.witness,
            })).collect::<Vec<_>>(),
            "notes": out.notes.iter().map(|f| serde_json::json!({
                "instance": f.instance, "subsemigroup": f.sub, "clause": f.clause,
            })).collect::<Vec<_>>(),
        });
        report.push(CheckEntry {
            check: format!("{suite:?}"),
            anchor: suite_id(*suite).to_string(),
            verdict: status,
            witnesses,
            clause: out.failures.first().map(|f| f.clause.clone()),
            timing_ms: *ms,
            detail: Some(detail),
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_cover_every_suite() {
        for s in Suite::ALL {
            assert_eq!(suite_by_id(suite_id(s)), Some(s));
        }
        let mut ids: Vec<&str> = SUITE_IDS.iter().map(|p| p.0).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), Suite::ALL.len());
    }

    #[test]
    fn order_two_prop31_has_no_failures() {
        let u = theorems::universe(2, false).unwrap();
        let r = run(&u, &[Suite::StraightEquivalence]);
        assert!(r.outcome(Suite::StraightEquivalence).unwrap().passed());
    }
}
