use bimaps::{MSeries, Rat};
use bimaps_cli::record::SeriesRecord;
use num_bigint::BigInt;
use proptest::prelude::*;

fn series() -> impl Strategy<Value = MSeries> {
    let term = (prop::collection::vec(0u32..4, 2), -50i64..50, 1i64..20);
    (prop::collection::vec(term, 0..12), 1u32..8, 0u32..8).prop_map(|(ts, order, drop)| {
        let terms = ts
            .into_iter()
            .map(|(e, n, d)| (e, Rat::new(BigInt::from(n), BigInt::from(d))));
        let s = MSeries::from_terms(2, order, terms);
        let rel = order.saturating_sub(drop % 3);
        s.with_reliable(rel)
    })
}

proptest! {
    #[test]
    fn json_round_trip(s in series()) {
        let rec = SeriesRecord::from_series("s", &s);
        let text = serde_json::to_string(&rec).unwrap();
        let back: SeriesRecord = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &rec);
        let parsed = back.to_series(2).unwrap();
        prop_assert_eq!(parsed, s.truncate(s.reliable()).with_reliable(s.reliable()));
        let degs: Vec<(u32, Vec<u32>)> = rec.terms.iter().map(|t| (t.exponents.iter().sum(), t.exponents.clone())).collect();
        let mut sorted = degs.clone();
        sorted.sort();
        prop_assert_eq!(degs, sorted);
        prop_assert!(rec.terms.iter().all(|t| t.numerator != "0"));
    }
}
