//! Cross-check the table engine against independently computed expectations
//! (a symbolic-algebra recomputation of every row, frozen as JSON). Any drift
//! in the engine's polynomials, verdicts, solutions or enumeration shows up
//! here.

use cyclic_census::tables::{all_scenarios, reproduce_table, DEFAULT_SCAN_BOUND};
use serde::Deserialize;
use std::collections::BTreeMap;

#[derive(Deserialize)]
struct FrozenTable {
    rows: Vec<FrozenRow>,
    finite_solutions: BTreeMap<String, Vec<usize>>,
    identically_zero_rows: Vec<usize>,
    enumerated_count: usize,
    extra: Vec<FrozenRowRef>,
    missing: Vec<FrozenRowRef>,
}

#[derive(Deserialize)]
struct FrozenRow {
    verdict: String,
    t_recomputed: String,
    identically_zero: bool,
    solutions: Vec<u64>,
    congruence_pins: Vec<u64>,
    bad_sum: bool,
}

#[derive(Deserialize)]
struct FrozenRowRef {
    pin: Option<u64>,
    counts: Vec<u64>,
}

#[test]
fn engine_matches_frozen_recomputation() {
    let frozen: BTreeMap<String, FrozenTable> =
        serde_json::from_str(include_str!("data/frozen_reproduction.json")).unwrap();
    let scenarios = all_scenarios().unwrap();
    assert_eq!(frozen.len(), scenarios.len());

    for sc in &scenarios {
        let expect = &frozen[&sc.id];
        let rep = reproduce_table(sc, DEFAULT_SCAN_BOUND).unwrap();
        assert_eq!(rep.rows.len(), expect.rows.len(), "{}", sc.id);
        for (row, frow) in rep.rows.iter().zip(&expect.rows) {
            let ctx = format!("{} row {}", sc.id, row.index);
            assert_eq!(format!("{:?}", row.verdict).to_lowercase(), frow.verdict, "{ctx}");
            assert_eq!(row.t_recomputed, frow.t_recomputed, "{ctx}");
            assert_eq!(row.identically_zero, frow.identically_zero, "{ctx}");
            assert_eq!(row.solutions, frow.solutions, "{ctx}");
            assert_eq!(row.congruence_pins, frow.congruence_pins, "{ctx}");
            assert_eq!(row.bad_sum, frow.bad_sum, "{ctx}");
        }
        assert_eq!(rep.identically_zero_rows, expect.identically_zero_rows, "{}", sc.id);
        let got: Vec<u64> = {
            let mut v: Vec<u64> = rep.finite_solutions.iter().map(|s| s.value).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let want: Vec<u64> = {
            let mut v: Vec<u64> =
                expect.finite_solutions.keys().map(|k| k.parse().unwrap()).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(got, want, "{} finite solutions", sc.id);
        assert_eq!(rep.enumerated_count, expect.enumerated_count, "{}", sc.id);
        let norm = |rows: &[FrozenRowRef]| {
            let mut v: Vec<(Option<u64>, Vec<u64>)> =
                rows.iter().map(|r| (r.pin, r.counts.clone())).collect();
            v.sort();
            v
        };
        let got_extra: Vec<(Option<u64>, Vec<u64>)> = {
            let mut v: Vec<_> =
                rep.extra_rows.iter().map(|r| (r.pin, r.counts.clone())).collect();
            v.sort();
            v
        };
        let got_missing: Vec<(Option<u64>, Vec<u64>)> = {
            let mut v: Vec<_> =
                rep.missing_rows.iter().map(|r| (r.pin, r.counts.clone())).collect();
            v.sort();
            v
        };
        assert_eq!(got_extra, norm(&expect.extra), "{} extra", sc.id);
        assert_eq!(got_missing, norm(&expect.missing), "{} missing", sc.id);
    }
}
