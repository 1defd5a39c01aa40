use proptest::prelude::*;
use qkit::table;
use qkit_core::{enumerate, FiniteSemigroup};

fn small_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    let mut all = Vec::new();
    for n in 1..=3 {
        enumerate::enumerate_semigroups(n, |s| all.push(s.clone())).unwrap();
    }
    (prop::sample::select(all), any::<bool>(), "[a-z][a-z0-9]{0,3}").prop_map(|(s, labelled, stem)| {
        if labelled {
            let names = s.elements().map(|i| format!("{stem}{i}")).collect();
            s.with_labels(names).unwrap()
        } else {
            s
        }
    })
}

proptest! {
    #[test]
    fn table_round_trip(s in small_semigroup()) {
        prop_assert_eq!(table::parse(&table::render(&s)).unwrap(), s);
    }

    #[test]
    fn parser_never_panics(text in "[0-9 #a-z\n]{0,40}") {
        let _ = table::parse(&text);
    }
}
