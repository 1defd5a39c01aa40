//! One function per CLI verb. Each returns a report plus optional text for
//! humans.

use crate::eggbox;
use crate::harness::{self, MAX_EXHAUSTIVE_ORDER};
use crate::report::{digest, labels, Outcome, Report, Status};
use crate::table;
use qkit_core::orders::{Constraint, Notion};
use qkit_core::starpair::{self, Condition, StarPair};
use qkit_core::symbolic::{self, Example, GreenRelation, SymbolicSemigroup, MIN_WINDOW};
use qkit_core::theorems::{self, Suite};
use qkit_core::{green, FiniteSemigroup, GreenData, OrderContext, Side, StarredData, SubSemigroup};
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: table::ParseError },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Core(#[from] qkit_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub struct Output {
    pub report: Report,
    /// Human readable text printed alongside the JSON.
    pub text: Option<String>,
}

pub struct Input {
    pub q: FiniteSemigroup,
    pub digest: String,
}

pub fn load(path: &str) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    let q = table::parse(&text).map_err(|source| CliError::Parse { path: path.into(), source })?;
    Ok(Input { q, digest: digest(text.as_bytes()) })
}

fn subsemigroup<'a>(q: &'a FiniteSemigroup, sub: Option<&str>) -> Result<SubSemigroup<'a>, CliError> {
    match sub {
        None => Ok(q.whole()),
        Some(spec) => {
            let members = table::parse_elements(q, spec).map_err(CliError::Usage)?;
            let mut sorted = members.clone();
            sorted.sort_unstable();
            sorted.dedup();
            q.subsemigroup(&sorted).map_err(|e| match e {
                qkit_core::Error::NotClosed { a, b, product } => CliError::Usage(format!(
                    "subset not closed: {} * {} = {} is outside it",
                    q.label(a),
                    q.label(b),
                    q.label(product)
                )),
                e => e.into(),
            })
        }
    }
}

fn partition_labels(q: &FiniteSemigroup, p: &qkit_core::Partition) -> serde_json::Value {
    json!(p.classes().iter().map(|c| labels(q, c)).collect::<Vec<_>>())
}

pub fn relations(input: &Input, with_eggbox: bool) -> Output {
    let q = &input.q;
    let mut report = Report::new(input.digest.clone());
    let g = GreenData::new(q);
    let st = StarredData::new(q);
    report.timed("green relations lemma", "lemma21", || match green::check_green_lemma(q) {
        Ok(()) => Outcome::holds(),
        Err(c) => Outcome::fails(q, Some(c.clause.into()), &c.elements),
    });
    report.timed("starred relations contain Green's", "starred", || {
        let w = g.leq_l.first_outside(&st.leq_lstar).or_else(|| g.leq_r.first_outside(&st.leq_rstar));
        Outcome::check(q, w.map(|(a, b)| vec![a, b]))
    });
    report.timed("group elements are square cancellable", "starred", || {
        Outcome::check(q, q.elements().find(|&a| g.in_subgroup(a) && !st.is_square_cancellable(a)).map(|a| vec![a]))
    });
    let union: Vec<usize> = q.elements().filter(|&a| g.in_subgroup(a)).collect();
    report.data = Some(json!({
        "order": q.order(),
        "regular": green::is_regular(q),
        "inverse": green::is_inverse(q),
        "idempotents": labels(q, &g.idempotents),
        "L": partition_labels(q, &g.l),
        "R": partition_labels(q, &g.r),
        "H": partition_labels(q, &g.h),
        "D": partition_labels(q, &g.d),
        "J": partition_labels(q, &g.j),
        "L*": partition_labels(q, &st.lstar),
        "R*": partition_labels(q, &st.rstar),
        "H*": partition_labels(q, &st.hstar),
        "square_cancellable": labels(q, &st.square_cancellable),
        "union_of_subgroups": labels(q, &union),
    }));
    let text = with_eggbox.then(|| eggbox::render(q, &g));
    Output { report, text }
}

pub fn eggbox(input: &Input) -> Output {
    let mut out = relations(input, true);
    out.report.checks.clear();
    out
}

pub fn parse_notion(s: &str) -> Result<Notion, CliError> {
    match s {
        "left" => return Ok(Notion::Order(Side::Left)),
        "right" => return Ok(Notion::Order(Side::Right)),
        _ => {}
    }
    let (base, side) = match s.strip_suffix("-left") {
        Some(b) => (b, Side::Left),
        None => match s.strip_suffix("-right") {
            Some(b) => (b, Side::Right),
            None if s == "very-large" => return Ok(Notion::VeryLarge),
            None => return Err(CliError::Usage(format!("unknown notion `{s}`"))),
        },
    };
    Ok(match base {
        "weak" => Notion::WeakOrder(side),
        "order" => Notion::Order(side),
        "straight" => Notion::StraightOrder(side),
        "straight-weak" => Notion::StraightWeakOrder(side),
        "local" => Notion::LocalOrder(side),
        _ => return Err(CliError::Usage(format!("unknown notion `{s}`"))),
    })
}

pub fn notion_name(n: Notion) -> String {
    let side = |s: Side| if s == Side::Left { "left" } else { "right" };
    match n {
        Notion::WeakOrder(s) => format!("weak-{}", side(s)),
        Notion::Order(s) => side(s).to_string(),
        Notion::StraightWeakOrder(s) => format!("straight-weak-{}", side(s)),
        Notion::StraightOrder(s) => format!("straight-{}", side(s)),
        Notion::LocalOrder(s) => format!("local-{}", side(s)),
        Notion::VeryLarge => "very-large".into(),
    }
}

pub const ALL_NOTIONS: [&str; 11] = [
    "weak-left",
    "left",
    "straight-weak-left",
    "straight-left",
    "local-left",
    "weak-right",
    "right",
    "straight-weak-right",
    "straight-right",
    "local-right",
    "very-large",
];

/// Element witnessing that `notion` fails, or `None` when it holds.
fn notion_failure(ctx: &OrderContext, notion: Notion) -> Option<(String, Vec<usize>)> {
    let q = ctx.q();
    let undecomposable = |side: Side, c: Constraint| -> Option<(String, Vec<usize>)> {
        let w = ctx.witnesses(side, c);
        q.elements().find(|&x| w[x].is_none()).map(|x| ("no quotient decomposition".to_string(), vec![x]))
    };
    let sc = || {
        ctx.square_cancellable()
            .into_iter()
            .find(|&a| !ctx.green().in_subgroup(a))
            .map(|a| ("square cancellable element outside every subgroup".to_string(), vec![a]))
    };
    match notion {
        Notion::WeakOrder(s) => undecomposable(s, Constraint::Any),
        Notion::Order(s) => undecomposable(s, Constraint::Any).or_else(sc),
        Notion::StraightWeakOrder(s) => undecomposable(s, Constraint::Straight),
        Notion::StraightOrder(s) => undecomposable(s, Constraint::Any).or_else(sc).or_else(|| undecomposable(s, Constraint::Straight)),
        Notion::LocalOrder(s) => {
            if ctx.is_local_order(s) {
                return None;
            }
            let h = ctx.green().group_h_classes.iter().find(|h| !h.iter().all(|&x| ctx.contains(x)))?;
            let missing: Vec<usize> = h.iter().copied().filter(|&x| !ctx.contains(x)).collect();
            Some(("group H-class not covered".into(), missing))
        }
        Notion::VeryLarge => {
            let m = ctx.missing_h_classes();
            (!m.is_empty()).then(|| ("H-classes missing from S".into(), m))
        }
    }
}

pub fn check_order(input: &Input, sub: Option<&str>, notions: &[String], prop31: bool) -> Result<Output, CliError> {
    let q = &input.q;
    let s = subsemigroup(q, sub)?;
    let ctx = OrderContext::new(&s);
    let mut report = Report::new(input.digest.clone());
    let names: Vec<String> =
        if notions.is_empty() { ALL_NOTIONS.iter().map(|s| s.to_string()).collect() } else { notions.to_vec() };
    for name in &names {
        let notion = parse_notion(name)?;
        report.timed(notion_name(notion), "orders", || {
            let side = match notion {
                Notion::WeakOrder(s) | Notion::Order(s) | Notion::StraightWeakOrder(s) | Notion::StraightOrder(s) => Some(s),
                _ => None,
            };
            let map = side.map(|sd| {
                let w = ctx.witnesses(sd, if matches!(notion, Notion::StraightWeakOrder(_) | Notion::StraightOrder(_)) { Constraint::Straight } else { Constraint::Any });
                q.elements()
                    .filter_map(|x| w[x].map(|(a, b)| (q.label(x), json!([q.label(a), q.label(b)]))))
                    .collect::<serde_json::Map<_, _>>()
            });
            let o = match notion_failure(&ctx, notion) {
                None => Outcome::holds(),
                Some((clause, w)) => Outcome::fails(q, Some(clause), &w),
            };
            match map {
                Some(m) => o.with_detail(json!({ "witnesses": m })),
                None => o,
            }
        });
    }
    if prop31 {
        report.timed("regular quotient equivalence", "prop31", || match ctx.equivalence_status() {
            Err(_) => Outcome::not_applicable("Q is not regular"),
            Ok(st) => {
                let mut o = if st.all_equal() { Outcome::holds() } else { Outcome::fails(q, Some("conditions disagree".into()), s.members()) };
                let traces: Vec<serde_json::Value> = if st.very_large_weak {
                    q.elements()
                        .filter_map(|w| ctx.straighten(w).ok())
                        .map(|t| {
                            json!({
                                "w": q.label(t.w), "e": q.label(t.e), "s": q.label(t.s), "a": q.label(t.a),
                                "b": q.label(t.b), "f": q.label(t.f), "t": q.label(t.t),
                                "straight": [q.label(t.result.a), q.label(t.result.b)],
                            })
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                o.detail = Some(json!({
                    "very_large_weak": st.very_large_weak,
                    "straight_weak": st.straight_weak,
                    "very_large_local": st.very_large_local,
                    "straightening": traces,
                }));
                o
            }
        });
    }
    Ok(Output { report, text: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PairSource {
    Induced,
    Starred,
    Equality,
}

pub fn check_starpair(input: &Input, sub: Option<&str>, source: PairSource) -> Result<Output, CliError> {
    let q = &input.q;
    let s = subsemigroup(q, sub)?;
    let members = s.members().to_vec();
    let green = GreenData::new(q);
    let pair = match source {
        PairSource::Induced => StarPair::induced_with(&s, &green)?,
        PairSource::Starred => StarPair::starred_pair(&s.to_semigroup()),
        PairSource::Equality => StarPair::equality_pair(&s.to_semigroup()),
    };
    let mut report = Report::new(input.digest.clone());
    let full = pair.full_report();
    for c in Condition::ALL {
        let v = full.get(c).cloned().unwrap_or(qkit_core::Verdict::NotApplicable("not evaluated"));
        report.timed(c.name(), "starpair", || Outcome::from_verdict(&v, q, Some(&members)));
    }
    report.timed("embeddable", "starpair", || {
        let rep = pair.check_embeddable();
        match rep.first_failure() {
            None => Outcome::holds(),
            Some((c, v)) => Outcome::from_verdict(v, q, Some(&members)).with_detail(json!({ "condition": c.name() })),
        }
    });
    let straight = OrderContext::new(&s).is_straight_order(Side::Left);
    report.timed("straight left order gives G conditions", "thm44", || {
        if source != PairSource::Induced || !straight {
            return Outcome::not_applicable("S is not a straight left order in Q");
        }
        let conds = [Condition::Gi, Condition::Gii, Condition::Giii, Condition::Giv];
        let emb = pair.check_embeddable();
        let g = pair.check_g_conditions();
        let bad = emb.entries.iter().chain(g.entries.iter().filter(|(c, _)| conds.contains(c))).find(|(_, v)| v.fails());
        match bad {
            None => Outcome::holds(),
            Some((_, v)) => Outcome::from_verdict(v, q, Some(&members)),
        }
    });
    report.timed("J structure", "lemma53", || Outcome::from_verdict(&pair.j_structure_check(), q, Some(&members)));
    report.timed("completely semisimple criterion", "thm57", || {
        if source != PairSource::Induced || !straight {
            return Outcome::not_applicable("S is not a straight left order in Q");
        }
        match starpair::semisimple_check(&s, &green, true) {
            Err(e) => Outcome::not_applicable(&e.to_string()),
            Ok(rec) => {
                let detail = json!({
                    "completely_semisimple": rec.completely_semisimple,
                    "condition_ii": rec.cond_ii.holds(),
                    "chain_conditions": rec.mstar,
                    "d_restriction": rec.d_restriction,
                    "leq_j_restriction": rec.leq_j_restriction,
                    "j_restriction": rec.j_restriction,
                    "simple_iff_j_full": rec.simple_iff_j_full,
                    "bisimple_iff_d_full": rec.bisimple_iff_d_full,
                });
                let o = if rec.consistent() {
                    Outcome::holds()
                } else {
                    match rec.cond_ii.witness() {
                        Some(c) => Outcome::from_verdict(&rec.cond_ii, q, Some(&members)).with_detail(json!({ "clause": c.clause })),
                        None => Outcome::fails(q, Some("record inconsistent".into()), &members),
                    }
                };
                o.with_detail(detail)
            }
        }
    });
    report.data = Some(json!({
        "members": labels(q, &members),
        "G": labels(q, &pair.g_set().iter().map(|&i| members[i]).collect::<Vec<_>>()),
        "L'": pair.lp.classes().iter().map(|c| labels(q, &c.iter().map(|&i| members[i]).collect::<Vec<_>>())).collect::<Vec<_>>(),
        "R'": pair.rp.classes().iter().map(|c| labels(q, &c.iter().map(|&i| members[i]).collect::<Vec<_>>())).collect::<Vec<_>>(),
    }));
    Ok(Output { report, text: None })
}

pub fn parse_example(which: &str, modulus: i64) -> Result<Example, CliError> {
    match which {
        "3.4" | "integer-brandt" => Ok(Example::IntegerBrandt),
        "3.11" | "cyclic-brandt" => Ok(Example::CyclicBrandt(modulus)),
        "3.14" | "integer-bicyclic" => Ok(Example::IntegerBicyclic),
        _ => Err(CliError::Usage(format!("unknown example `{which}`"))),
    }
}

pub fn example(which: &str, modulus: i64, window: i64, verify: bool) -> Result<Output, CliError> {
    let kind = parse_example(which, modulus)?;
    SymbolicSemigroup::new(kind)?;
    if window < MIN_WINDOW {
        return Err(qkit_core::Error::WindowTooSmall { window, minimum: MIN_WINDOW }.into());
    }
    let mut report = Report::new(digest(format!("{kind:?}/{window}").as_bytes()));
    let claims = symbolic::sym_claims_check(kind, window)?;
    let mut text = String::new();
    for c in &claims {
        let status = if c.holds { Status::Holds } else { Status::Fails };
        let mut w: Vec<String> = c.witness.iter().map(ToString::to_string).collect();
        if status == Status::Fails && w.is_empty() {
            w.push("(none recorded)".into());
        }
        text.push_str(&format!("{:<4} {} [window-verified, W={window}] {}\n", if c.holds { "ok" } else { "FAIL" }, c.name, c.detail));
        report.push(crate::report::CheckEntry {
            check: c.name.to_string(),
            anchor: which.to_string(),
            verdict: status,
            witnesses: if c.witness.is_empty() && status != Status::Fails { Vec::new() } else { vec![w] },
            clause: None,
            timing_ms: 0.0,
            detail: Some(json!({ "detail": c.detail, "window": window, "holds": c.holds })),
        });
    }
    if verify {
        let q = SymbolicSemigroup::new(kind)?;
        for rel in [GreenRelation::L, GreenRelation::R, GreenRelation::H, GreenRelation::D] {
            let start = std::time::Instant::now();
            let a = symbolic::oracle_agreement(&q, window, rel);
            let w: Vec<Vec<String>> = a.contradiction.iter().map(|(x, y)| vec![x.to_string(), y.to_string()]).collect();
            report.push(crate::report::CheckEntry {
                check: format!("{rel:?} oracle against window search"),
                anchor: which.to_string(),
                verdict: if w.is_empty() { Status::Holds } else { Status::Fails },
                witnesses: w,
                clause: None,
                timing_ms: crate::report::elapsed_ms(start),
                detail: Some(json!({ "pairs": a.pairs, "unconfirmed": a.unconfirmed })),
            });
        }
    }
    Ok(Output { report, text: Some(text) })
}

pub fn enumerate(order: usize, classes: bool) -> Result<Output, CliError> {
    if order > 4 {
        return Err(qkit_core::Error::OrderTooLarge(order).into());
    }
    let mut report = Report::new(digest(format!("enumerate/{order}").as_bytes()));
    let start = std::time::Instant::now();
    let labeled = qkit_core::enumerate::enumerate_semigroups(order, |_| {})?;
    let iso = if classes { Some(qkit_core::enumerate::isomorphism_classes(order)?.len()) } else { None };
    report.push(crate::report::CheckEntry {
        check: "enumerate".into(),
        anchor: "enumerate".into(),
        verdict: Status::Holds,
        witnesses: Vec::new(),
        clause: None,
        timing_ms: crate::report::elapsed_ms(start),
        detail: Some(json!({ "order": order, "labeled": labeled, "isomorphism_classes": iso })),
    });
    Ok(Output { report, text: Some(format!("{labeled}\n")) })
}

pub fn harness(max_order: usize, fixtures: bool, suites: &[String]) -> Result<Output, CliError> {
    if max_order > MAX_EXHAUSTIVE_ORDER {
        return Err(qkit_core::Error::OrderTooLarge(max_order).into());
    }
    let suites: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites
            .iter()
            .map(|id| harness::suite_by_id(id).ok_or_else(|| {
                let ids: Vec<&str> = harness::SUITE_IDS.iter().map(|p| p.0).collect();
                CliError::Usage(format!("unknown suite `{id}`; valid ids: {}", ids.join(", ")))
            }))
            .collect::<Result<_, _>>()?
    };
    let universe = theorems::universe(max_order, fixtures)?;
    let result = harness::run(&universe, &suites);
    let report = harness::to_report(&result, &universe, digest(format!("universe/{max_order}/{fixtures}").as_bytes()));
    let mut text = String::new();
    for (suite, out, _) in &result.per_suite {
        text.push_str(&format!(
            "{:<9} checked {:>7}  n/a {:>6}  failures {}\n",
            harness::suite_id(*suite),
            out.checked,
            out.not_applicable,
            out.failures.len()
        ));
    }
    Ok(Output { report, text: Some(text) })
}
