//! Family constructors, tightness verdicts, sampling, the JSON format, and
//! the validator, exercised end to end.

use concentric_core::{validate_raw, ConcentricPresentation, Coord, PresentationError};

#[test]
fn h7_family_relations_at_m7() {
    let p = ConcentricPresentation::h7_family(7).unwrap();
    assert_eq!(p.basis_commutator(1, 6), Coord::basis(3));
    assert_eq!(p.basis_commutator(2, 7), Coord::basis(4));
    assert_eq!(p.basis_commutator(1, 7), Coord::basis(5));
}

#[test]
fn h7_family_relations_at_m9() {
    let p = ConcentricPresentation::h7_family(9).unwrap();
    assert_eq!(p.basis_commutator(1, 8), Coord::basis(3));
    assert_eq!(p.basis_commutator(1, 9), Coord::basis(5));
    assert_eq!(p.basis_commutator(2, 9), Coord::basis(4));
}

#[test]
fn tightness_verdicts_for_families() {
    assert!(ConcentricPresentation::h7_family(9).unwrap().is_tightly_concentric());
    assert!(ConcentricPresentation::h7_family(10).unwrap().is_tightly_concentric());
    // At m = 7 the family has ε_{6,2} = 1, violating the last-entry condition.
    assert!(!ConcentricPresentation::h7_family(7).unwrap().is_tightly_concentric());
    // All-zero ε with d = m fails the ε_{d,0} = 1 requirement outright.
    assert!(!ConcentricPresentation::elementary_abelian(9).unwrap().is_tightly_concentric());
    assert!(ConcentricPresentation::minimal_tight7().is_tightly_concentric());
}

#[test]
fn family_constructors_reject_small_m() {
    assert!(matches!(ConcentricPresentation::h7_family(6), Err(PresentationError::H7TooSmall(6))));
    assert!(matches!(
        ConcentricPresentation::dihedral_family(2),
        Err(PresentationError::DihedralTooSmall(2))
    ));
}

#[test]
fn random_tight_presentations_validate_across_seeds() {
    for seed in 0..100 {
        let p = ConcentricPresentation::random_tightly_concentric(9, 7, seed).unwrap();
        assert!(p.is_tightly_concentric(), "seed {seed} produced a non-tight presentation");
        let report = p.validate();
        assert!(report.all_ok(), "seed {seed}: {:#?}", report);
    }
}

#[test]
fn random_tight_same_seed_is_identical() {
    for seed in [0u64, 1, 99, u64::MAX] {
        let a = ConcentricPresentation::random_tightly_concentric(10, 8, seed).unwrap();
        let b = ConcentricPresentation::random_tightly_concentric(10, 8, seed).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn json_round_trips_preserve_everything() {
    let fixtures = vec![
        ConcentricPresentation::h7_family(7).unwrap(),
        ConcentricPresentation::h7_family(10).unwrap(),
        ConcentricPresentation::minimal_tight7(),
        ConcentricPresentation::elementary_abelian(5).unwrap(),
        ConcentricPresentation::dihedral_family(8).unwrap(),
        ConcentricPresentation::random_tightly_concentric(9, 7, 5).unwrap(),
    ];
    for p in fixtures {
        let q = ConcentricPresentation::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
    }
}

#[test]
fn json_parse_failures_are_typed() {
    assert!(matches!(
        ConcentricPresentation::from_json("not json"),
        Err(PresentationError::Json(_))
    ));
    assert!(matches!(
        ConcentricPresentation::from_json(r#"{"m": 7, "d": 2, "eps": []}"#),
        Err(PresentationError::DiameterOutOfRange { .. })
    ));
}

#[test]
fn validator_passes_the_stock_families() {
    for p in [
        ConcentricPresentation::h7_family(7).unwrap(),
        ConcentricPresentation::h7_family(9).unwrap(),
        ConcentricPresentation::minimal_tight7(),
        ConcentricPresentation::elementary_abelian(7).unwrap(),
        ConcentricPresentation::dihedral_family(7).unwrap(),
    ] {
        let report = p.validate();
        assert!(report.all_ok(), "presentation (m={}, d={}): {:#?}", p.m(), p.d(), report);
    }
}

#[test]
fn validator_reports_structural_failures_without_panicking() {
    let report = validate_raw(7, 7, &[vec![1]]);
    assert!(!report.structural_ok);
    assert!(!report.all_ok());
    assert!(report.messages.iter().any(|m| m.contains("structure")));

    let report = validate_raw(0, 0, &[]);
    assert!(!report.structural_ok);
}

#[test]
fn validator_flags_non_maximal_diameter() {
    // Zero out row d of the minimal tight instance: distance-5 pairs now
    // commute, so d = 5 is not the true diameter.
    let p = ConcentricPresentation::new(7, 5, vec![vec![0, 0], vec![0, 1, 0]]).unwrap();
    let report = p.validate();
    assert!(report.structural_ok && report.group_order_ok && report.shift_isomorphism_ok);
    assert!(!report.diameter_maximal_ok);
    assert!(!report.all_ok());
}

#[test]
fn validator_handles_m8_table_path() {
    // m = 8 exercises the generator-restricted associativity path.
    let p = ConcentricPresentation::h7_family(8).unwrap();
    let report = p.validate();
    assert!(report.all_ok(), "{:#?}", report);
}
