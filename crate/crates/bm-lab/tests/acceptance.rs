//! Acceptance gate: one test per criterion, each printing a one-line
//! verdict (visible with `--nocapture`). Every number asserted here was
//! frozen from an independent oracle before the library was written;
//! nothing is asserted that the test does not actually recompute.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use bm_lab::{
    catalog, enumerate_latin_squares, expected_parastrophe, expected_table1, load_fixtures, lookup,
    reproduce_table1, satisfies, satisfying_quasigroups, verify_plus_cell, CayleyTable, Column,
    Sign,
};

/// Satisfying-table counts at orders 3 and 4 for every catalog identity
/// (orders 1 and 2 are 1 and 2 for all sixty), frozen from the oracle run.
const COUNTS_3_AND_4: &[(&[&str], u64, u64)] = &[
    (
        &[
            "F1", "F3", "F5", "F10", "F11", "F12", "F14", "F18", "F20", "F21", "F23", "F24", "F25",
            "F28", "F31", "F32", "F33", "F34", "F47", "F50", "F55", "F58", "F4", "F2", "F6", "F13",
            "F17", "F22", "F27", "F38", "F41", "F53", "F35", "F40", "F43", "F45", "F48", "F51",
            "F57", "F60",
        ],
        3,
        16,
    ),
    (
        &[
            "F7", "F16", "F26", "F36", "F42", "F49", "F8", "F19", "F29", "F39", "F54", "F59", "F37",
        ],
        6,
        40,
    ),
    (&["F44", "F52"], 6, 48),
    (&["F9", "F15", "F30"], 6, 98),
    (&["F46", "F56"], 9, 144),
];

fn frozen_counts() -> BTreeMap<&'static str, (u64, u64)> {
    let mut map = BTreeMap::new();
    for &(labels, c3, c4) in COUNTS_3_AND_4 {
        for &label in labels {
            assert!(map.insert(label, (c3, c4)).is_none(), "{label} duplicated");
        }
    }
    assert_eq!(map.len(), 60);
    map
}

#[test]
fn criterion_01_catalog_integrity() {
    let start = Instant::now();
    let entries = catalog();
    assert_eq!(entries.len(), 60);
    for entry in entries {
        let reparsed = bm_lab::Identity::parse(entry.text)
            .unwrap_or_else(|e| panic!("{} does not parse: {e}", entry.label));
        assert_eq!(reparsed.label(), Some(entry.label), "{}", entry.label);
        assert_eq!(
            entry.identity().to_string(),
            entry.text,
            "{} does not round-trip",
            entry.label
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}");
    println!(
        "criterion 01 catalog-integrity: PASS — 60/60 identities parse and \
         round-trip verbatim in {elapsed:?}"
    );
}

#[test]
fn criterion_02_type_calculus() {
    let mut perm_matches = 0;
    let mut slot_mismatches = Vec::new();
    for row in expected_table1() {
        let ty = lookup(row.label).unwrap().identity().identity_type();
        if ty.lhs_perm == row.printed_lhs_perm && ty.rhs_perm == row.printed_rhs_perm {
            perm_matches += 1;
        }
        if (ty.double_slots[0], ty.double_slots[1]) != row.printed_slots {
            slot_mismatches.push(row.label);
        }
    }
    assert_eq!(perm_matches, 60);
    assert_eq!(
        slot_mismatches,
        ["F4", "F2", "F40"],
        "exactly these printed slot sets disagree with the recomputed ones"
    );
    println!(
        "criterion 02 type-calculus: PASS — permutation pairs match 60/60; \
         slot sets match 57/60, with F4, F2 (printed {{3,4}}, computed {{1,4}}) \
         and F40 (printed {{1,2}}, computed {{2,3}}) flagged as suspected \
         misprints (one more flag than the stated 58/60 tally anticipates)"
    );
}

#[test]
fn criterion_03_parastrophe_lemma() {
    let start = Instant::now();
    // Syntactic half: the computed parastrophe of each catalog identity is
    // the documented partner, for all 60 rows (32 unordered pairs).
    for entry in catalog() {
        let partner = expected_parastrophe(entry.label).unwrap();
        assert_eq!(
            entry.identity().parastrophe().label(),
            Some(partner),
            "{}",
            entry.label
        );
    }
    // Semantic half: Q satisfies F exactly when its transpose satisfies
    // the partner F*, over every Latin square of order <= 4.
    let mut squares = 0u64;
    let mut checks = 0u64;
    for n in 1..=4 {
        for square in enumerate_latin_squares(n).unwrap() {
            let transpose = square.parastrophe12();
            squares += 1;
            for entry in catalog() {
                let partner = lookup(expected_parastrophe(entry.label).unwrap()).unwrap();
                assert_eq!(
                    satisfies(&square, entry.identity()).holds,
                    satisfies(&transpose, partner.identity()).holds,
                    "duality broken for {} at order {n}",
                    entry.label
                );
                checks += 1;
            }
        }
    }
    assert_eq!(squares, 591); // 1 + 2 + 12 + 576
    assert_eq!(checks, 591 * 60);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!(
        "criterion 03 parastrophe-lemma: PASS — 32 partner pairs reproduced \
         syntactically; duality verified on all 591 Latin squares of orders \
         1..4 (60 identities each, {checks} checks) in {elapsed:?}"
    );
}

#[test]
fn criterion_04_fixture_certificates() {
    let start = Instant::now();
    let fixtures = load_fixtures().expect("bundled tables parse and validate");
    assert_eq!(fixtures.len(), 38);
    let mut verified = 0;
    for list in fixtures.values() {
        for fixture in list {
            fixture
                .verify()
                .unwrap_or_else(|e| panic!("fixture failed verification: {e}"));
            verified += 1;
        }
    }
    let profile = |label: &str| fixtures[label][0].table.units();
    // Frozen spot checks on the headline tables.
    let f7 = profile("F7");
    assert_eq!((f7.left_unit, f7.right_unit), (Some(1), None));
    let f9 = profile("F9");
    assert_eq!((f9.left_unit, f9.right_unit), (None, None));
    let f19 = profile("F19");
    assert_eq!((f19.left_unit, f19.right_unit), (None, Some(1)));
    let f35 = profile("F35");
    assert_eq!((f35.left_unit, f35.right_unit), (None, Some(1)));
    assert_eq!(fixtures["F35"][0].table.order(), 6);
    for label in ["F38", "F41"] {
        let p = profile(label);
        assert!(p.is_loop && !p.is_group, "{label} is a non-group loop");
        assert_eq!((p.left_unit, p.right_unit), (Some(0), Some(0)));
    }
    for label in ["F48", "F43", "F45"] {
        let p = profile(label);
        assert!(p.left_unit.is_some() && p.right_unit.is_none(), "{label}");
    }
    assert_eq!(profile("F48").left_unit, Some(2));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}");
    println!(
        "criterion 04 fixture-certificates: PASS — {verified} bundled tables \
         re-verified (Latin, satisfy their identity, match the printed signs) \
         in {elapsed:?}"
    );
}

#[test]
fn criterion_05_minus_cell_witnesses() {
    let start = Instant::now();
    let fixtures = load_fixtures().unwrap();
    let columns = [Column::F, Column::E, Column::Loop, Column::Group];
    let mut small = 0; // witness order <= 6
    let mut large = Vec::new(); // (label, order) for the rest
    for row in expected_table1() {
        let minus: Vec<Column> = columns
            .into_iter()
            .filter(|&c| row.sign(c) == Sign::Minus)
            .collect();
        if minus.is_empty() {
            continue;
        }
        let fixture = &fixtures[row.label][0];
        let cert = fixture.verify().unwrap();
        for &column in &minus {
            // The certificate equates observed and printed signs, so the
            // table really does violate this column's property.
            let violates = match column {
                Column::F => cert.profile.left_unit.is_none(),
                Column::E => cert.profile.right_unit.is_none(),
                Column::Loop => !cert.profile.is_loop,
                Column::Group => !cert.profile.is_group,
            };
            assert!(violates, "{} {column}", row.label);
            if cert.order <= 6 {
                small += 1;
            } else {
                large.push((row.label, cert.order));
            }
        }
    }
    assert_eq!(small + large.len(), 100, "one witness per minus cell");
    assert_eq!(small, 93);
    large.sort();
    assert_eq!(
        large,
        [
            ("F13", 16),
            ("F17", 12),
            ("F2", 12),
            ("F22", 16),
            ("F27", 12),
            ("F4", 12),
            ("F6", 16),
        ]
    );
    // Those seven cells genuinely have no small counterexample: every
    // satisfying table of order <= 5 is associative (checked exhaustively).
    for (label, _) in &large {
        let report = verify_plus_cell(lookup(label).unwrap().identity(), Column::Group, 5).unwrap();
        assert!(
            report.confirmed(),
            "{label}: an order <= 5 non-group exists after all"
        );
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 05 minus-cell-witnesses: PASS — 93/100 \"−\" cells carry \
         verified counterexamples of order <= 6; the 7 group cells of the \
         four-row Moufang block and the three-row extra block have none up \
         to order 5 (proved exhaustively) and carry verified order-12 and \
         order-16 counterexamples instead ({elapsed:?})"
    );
}

#[test]
fn criterion_06_plus_cells() {
    let start = Instant::now();
    // Full matrix at orders <= 4 through the report pipeline.
    let report = reproduce_table1(4, 6).unwrap();
    assert!(report.is_clean(), "{:?}", report.discrepancies);
    let mut plus_cells = 0;
    for row in &report.rows {
        let pairs = [
            (row.expected.f, row.computed.f),
            (row.expected.e, row.computed.e),
            (row.expected.lo, row.computed.lo),
            (row.expected.gr, row.computed.gr),
        ];
        let mut any_plus = false;
        for (expected, computed) in pairs {
            assert_eq!(computed, Some(expected), "{}", row.label);
            if expected == Sign::Plus {
                plus_cells += 1;
                any_plus = true;
            }
        }
        if any_plus {
            assert_eq!(row.exhaustive_orders, vec![1, 2, 3, 4], "{}", row.label);
        }
    }
    assert_eq!(plus_cells, 140); // 240 cells - 100 minus
                                 // Independent recount of each identity's satisfying tables, against
                                 // counts frozen before this library existed.
    let frozen = frozen_counts();
    for entry in catalog() {
        let (c3, c4) = frozen[entry.label];
        for (n, want) in [(1, 1), (2, 2), (3, c3), (4, c4)] {
            let got = satisfying_quasigroups(entry.identity(), n).unwrap().count() as u64;
            assert_eq!(got, want, "{} at order {n}", entry.label);
        }
    }
    // Spot rows exhaustively at order 5, with frozen order-5 counts.
    let spot: [(&str, &[Column], u64); 6] = [
        (
            "F1",
            &[Column::F, Column::E, Column::Loop, Column::Group],
            30,
        ),
        ("F19", &[Column::E], 60),
        ("F26", &[Column::F], 60),
        ("F38", &[Column::F, Column::E, Column::Loop], 40),
        ("F41", &[Column::F, Column::E, Column::Loop], 30),
        ("F42", &[Column::F], 310),
    ];
    for (label, cols, order5_count) in spot {
        for &column in cols {
            let cell = verify_plus_cell(lookup(label).unwrap().identity(), column, 5).unwrap();
            assert!(cell.confirmed(), "{label} {column} at order 5");
            assert_eq!(cell.covered_orders, vec![1, 2, 3, 4, 5]);
            assert_eq!(
                cell.counts.last().copied(),
                Some((5, order5_count)),
                "{label} order-5 satisfying count"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "took {elapsed:?}");
    println!(
        "criterion 06 plus-cells: PASS — all 140 \"+\" cells verified \
         exhaustively at orders 1..4 with zero counterexamples and frozen \
         per-identity counts matched; spot rows F1, F19, F26, F38, F41, F42 \
         also exhaustive at order 5 (30/60/60/40/30/310 satisfying tables) \
         in {elapsed:?}"
    );
}

#[test]
fn criterion_07_latin_square_counts() {
    let start = Instant::now();
    for (n, expected) in [(1usize, 1usize), (2, 2), (3, 12), (4, 576)] {
        let library: Vec<CayleyTable> = enumerate_latin_squares(n).unwrap().collect();
        let mut oracle = common::naive_latin_squares(n);
        oracle.sort();
        let mut sorted = library.clone();
        sorted.sort();
        assert_eq!(library.len(), expected, "order {n}");
        assert_eq!(sorted, oracle, "order {n}: enumerators disagree");
    }
    let n5 = enumerate_latin_squares(5).unwrap().count();
    assert_eq!(n5, 161_280);
    let elapsed = start.elapsed();
    println!(
        "criterion 07 latin-square-counts: PASS — 1, 2, 12, 576 match the \
         independent row-permutation oracle table-for-table, and order 5 \
         yields 161280 ({elapsed:?})"
    );
}

#[test]
fn criterion_08_group_closure() {
    let mut checks = 0;
    for n in 1..=6 {
        let z_n = common::cyclic_group(n);
        for entry in catalog() {
            let report = satisfies(&z_n, entry.identity());
            assert!(report.holds, "Z{n} fails {}", entry.label);
            assert_eq!(report.assignments_checked, n * n * n);
            checks += 1;
        }
    }
    assert_eq!(checks, 360);
    println!(
        "criterion 08 group-closure: PASS — Z1..Z6 satisfy all 60 identities \
         (360 exhaustive checks)"
    );
}

#[test]
fn criterion_09_division_identities() {
    let start = Instant::now();
    // Pinned examples first: the order-3 left-unit-only table.
    let f7 = &load_fixtures().unwrap()["F7"][0].table;
    assert_eq!(f7.left_divide(0, 0), 2); // 0 \ 0
    assert_eq!(f7.right_divide(0, 0), 1); // 0 / 0
    let mut rng = common::seeded(0x9e3779b97f4a7c15);
    let mut tables = 0;
    for order in 2..=6 {
        for _ in 0..200 {
            let q = common::random_latin(&mut rng, order);
            tables += 1;
            for x in 0..order {
                for y in 0..order {
                    // x(x\y) = y and x\(xy) = y
                    assert_eq!(q.mul(x, q.left_divide(x, y)), y);
                    assert_eq!(q.left_divide(x, q.mul(x, y)), y);
                    // (y/x)x = y and (yx)/x = y
                    assert_eq!(q.mul(q.right_divide(y, x), x), y);
                    assert_eq!(q.right_divide(q.mul(y, x), x), y);
                    // x/(y\x) = y and (x/y)\x = y
                    assert_eq!(q.right_divide(x, q.left_divide(y, x)), y);
                    assert_eq!(q.left_divide(q.right_divide(x, y), x), y);
                }
            }
        }
    }
    assert_eq!(tables, 1000);
    let elapsed = start.elapsed();
    println!(
        "criterion 09 division-identities: PASS — all six cancellation laws \
         hold on 1000 seeded random Latin squares of orders 2..6 \
         ({elapsed:?})"
    );
}

#[test]
fn criterion_10_associativity_forces_a_unit() {
    let mut associative = 0;
    for n in 1..=4 {
        for square in enumerate_latin_squares(n).unwrap() {
            let profile = square.units();
            if profile.associativity_witness.is_none() {
                associative += 1;
                assert!(
                    profile.left_unit.is_some() && profile.left_unit == profile.right_unit,
                    "associative order-{n} square without a two-sided unit"
                );
                assert!(profile.is_loop && profile.is_group);
            }
        }
    }
    println!(
        "criterion 10 associativity-forces-a-unit: PASS — every associative \
         Latin square of order <= 4 ({associative} of 591) has a two-sided \
         unit"
    );
}
