use orbits_core::exceptional::{
    calibrate, graded_dims_from_diagram, load_table, recompute_m, table, table_json, verify_table,
};
use orbits_core::{Classification, ExceptionalGroup, OrbitError};

fn row(group: ExceptionalGroup, label: &str) -> &'static orbits_core::ExceptionalOrbitRecord {
    table()
        .iter()
        .find(|r| r.group == group && r.label == label)
        .unwrap_or_else(|| panic!("no row {group} {label}"))
}

#[test]
fn table_has_every_row() {
    let t = table();
    assert_eq!(t.len(), 45);
    let count = |f: fn(&Classification) -> bool| t.iter().filter(|r| f(&r.expected)).count();
    assert_eq!(count(|c| c.m().is_some()), 31);
    assert_eq!(count(|c| matches!(c, Classification::MoeglinOnly)), 4);
    assert_eq!(count(|c| matches!(c, Classification::CompletelyOdd)), 10);
    for g in ExceptionalGroup::ALL {
        assert!(t.iter().any(|r| r.group == g), "{g}");
    }
}

#[test]
fn sample_rows_recompute() {
    let f4 = recompute_m(row(ExceptionalGroup::F4, "A1"), 0).unwrap();
    assert_eq!(f4.m, 5);
    assert!(f4.residual_fixed);
    assert_eq!(f4.summands.get(&1), Some(&4));

    let e8 = recompute_m(row(ExceptionalGroup::E8, "3A1"), 0).unwrap();
    assert_eq!(e8.m, 27);

    let g2 = row(ExceptionalGroup::G2, "A1");
    assert_eq!(g2.expected, Classification::CompletelyOdd);
}

#[test]
fn json_round_trip_preserves_the_table() {
    let json = table_json().to_string();
    let loaded = load_table(&json).unwrap();
    assert_eq!(loaded, table());
    assert!(verify_table(&loaded).iter().all(|r| r.passed()));
}

#[test]
fn wrong_schema_version_is_rejected() {
    let mut v = table_json();
    v["schema_version"] = 99.into();
    let err = load_table(&v.to_string()).unwrap_err();
    assert!(matches!(err, OrbitError::Table(_)), "{err}");
}

#[test]
fn tampered_row_fails_verification() {
    let mut v = table_json();
    v["records"][2]["expected"] = serde_json::json!({"kind": "raised", "m": 7});
    let loaded = load_table(&v.to_string()).unwrap();
    let reports = verify_table(&loaded);
    assert!(!reports[2].passed());
    assert_eq!(reports.iter().filter(|r| !r.passed()).count(), 1);
}

#[test]
fn root_dimensions_match_every_row() {
    for r in table() {
        let dims = graded_dims_from_diagram(r.group, &r.diagram).unwrap();
        assert_eq!(dims.get(&1).copied().unwrap_or(0), r.g1_dim, "{}", r.id());
        assert_eq!(dims.get(&2).copied().unwrap_or(0), r.g2_dim, "{}", r.id());
    }
}

#[test]
fn calibration_singles_out_the_builtin_order() {
    for g in ExceptionalGroup::ALL {
        let full: Vec<_> = calibrate(table())
            .into_iter()
            .filter(|c| c.group == g && c.matches_all())
            .collect();
        assert_eq!(full.len(), 1, "{g}");
        assert!(full[0].builtin);
    }
}

#[test]
fn corrected_rows_decompose_as_encoded() {
    let d5 = recompute_m(row(ExceptionalGroup::E8, "D5(a1)+A2"), 0).unwrap();
    assert_eq!(d5.summands.get(&2), Some(&5));
    assert_eq!(d5.summands.get(&4), Some(&3));
    assert_eq!(d5.summands.values().sum::<u64>(), 8);
}
