mod common;

use curve_atlas::ampleness::default_table;
use curve_atlas::bounds::{rho, CurveTriple};
use curve_atlas::classifier::{
    classify_alpha5, classify_general, compound_cases, compound_obstruction_cases, general_rules, gonal_witness,
    irreducibility_alpha5, validate_obstruction, validate_witness, CaseReason, ClassifyError, Evidence, Obstruction,
    Status, Witness,
};
use curve_atlas::picard::notation::parse_class;

fn status(r: i64, g: i64) -> Status {
    classify_alpha5(r, g).unwrap().status
}

#[test]
fn figure_one_golden() {
    let fig = common::figure1();
    assert!(fig.len() > 400);
    let mut mismatches = Vec::new();
    for (&(r, g), want) in &fig {
        let got = status(r, g);
        if got.as_str() != want {
            mismatches.push((r, g, want.clone(), got.as_str()));
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn figure_one_bands() {
    for r in 3..=13 {
        for g in r + 3..=r + 8 {
            let want = if (r, g) == (4, 12) { Status::NonEmpty } else { Status::Empty };
            assert_eq!(status(r, g), want, "({r},{g})");
        }
        assert_eq!(status(r, r + 9), Status::NonEmpty);
        assert_eq!(status(r, r + 10) == Status::NonEmpty, r <= 8, "({r},{})", r + 10);
        assert_eq!(status(r, r + 11) == Status::NonEmpty, r <= 11, "({r},{})", r + 11);
        for g in r + 12..=49 {
            assert_eq!(status(r, g), Status::NonEmpty, "({r},{g})");
        }
    }
}

#[test]
fn figure_two_markers() {
    let markers = common::figure2();
    assert!(markers.len() >= 70);
    for ((r, g), want) in markers {
        let got = irreducibility_alpha5(r, g).unwrap().status.label();
        let ok = if want == "Reducible" { got.starts_with("Reducible") } else { got == want };
        assert!(ok, "({r},{g}): want {want}, got {got}");
    }
}

#[test]
fn named_irreducibility_rows() {
    let label = |r, g| irreducibility_alpha5(r, g).unwrap().status.label();
    assert_eq!(label(8, 18), "Reducible(2)");
    assert_eq!(label(3, 13), "Irreducible");
    assert_eq!(label(5, 15), "Irreducible");
    assert_eq!(label(4, 14), "ExpectedDimComponentOnly");
    assert_eq!(label(15, 27), "MatchesHurwitz31");
    assert_eq!(label(9, 19), "Empty");
}

#[test]
fn alpha5_examples() {
    let v = classify_alpha5(4, 12).unwrap();
    assert_eq!(v.evidence, Evidence::Witness(Witness::ExtremalOnScroll { n: 3, a: 4, b: -1 }));
    let v = classify_alpha5(9, 19).unwrap();
    assert!(matches!(v.evidence, Evidence::Obstruction(Obstruction::CompoundResidual { .. })));
    let v = classify_alpha5(11, 22).unwrap();
    assert_eq!(
        v.evidence,
        Evidence::Witness(Witness::BlownPlaneSystem {
            points: 1,
            class: parse_class("(9;4)").unwrap(),
            embedding: parse_class("(4;2)").unwrap(),
        })
    );
    let v = classify_alpha5(3, 11).unwrap();
    assert_eq!(v.status, Status::Empty);
    assert_eq!(v.evidence, Evidence::Obstruction(Obstruction::NoIntegerSolutions { pi1: 10, pi: 12 }));
    for r in 6..=13 {
        assert_eq!(status(r, r + 9), Status::NonEmpty);
    }
    assert!(matches!(classify_alpha5(2, 10), Err(ClassifyError::DimensionTooSmall(2))));
}

#[test]
fn verdict_shape() {
    for r in 3..=20 {
        for g in 0..=60 {
            let v = classify_alpha5(r, g).unwrap();
            assert_eq!(v.triple, CurveTriple::with_alpha(5, r, g));
            match v.status {
                Status::Empty => assert!(matches!(v.evidence, Evidence::Obstruction(_))),
                Status::NonEmpty => assert!(matches!(v.evidence, Evidence::Witness(_))),
                Status::Unknown => assert!(matches!(v.evidence, Evidence::Open)),
            }
            if v.status != Status::Unknown {
                assert!(!v.citation.is_empty());
            }
        }
    }
}

#[test]
fn every_verdict_revalidates() {
    let ax = default_table();
    for r in 3..=40 {
        for g in 0..=60 {
            let v = classify_alpha5(r, g).unwrap();
            let check = match &v.evidence {
                Evidence::Witness(w) => validate_witness(&v.triple, w, ax),
                Evidence::Obstruction(o) => validate_obstruction(&v.triple, o),
                Evidence::Open => Err("open".into()),
            };
            assert!(check.is_ok(), "({r},{g}): {check:?}");
        }
    }
}

#[test]
fn wrong_witnesses_fail_validation() {
    let ax = default_table();
    let t = CurveTriple::with_alpha(5, 4, 12);
    assert!(validate_witness(&t, &Witness::ExtremalOnScroll { n: 3, a: 5, b: -2 }, ax).is_err());
    assert!(validate_witness(&t, &Witness::BrillNoetherGeneral { rho: 0 }, ax).is_err());
    let t = CurveTriple::with_alpha(5, 11, 22);
    let bad = Witness::BlownPlaneSystem {
        points: 1,
        class: parse_class("(9;5)").unwrap(),
        embedding: parse_class("(4;2)").unwrap(),
    };
    assert!(validate_witness(&t, &bad, ax).is_err());
    let t = CurveTriple::with_alpha(5, 8, 20);
    assert!(validate_obstruction(&t, &Obstruction::GenusExceedsPi { d: 23, r: 8, pi: 30 }).is_err());
}

#[test]
fn general_agrees_with_alpha5() {
    for r in 3..=40 {
        for g in 0..=60 {
            let a = classify_alpha5(r, g).unwrap();
            assert_eq!(classify_general(5, r, g).unwrap().status, a.status);
            let rules = general_rules(5, r, g).unwrap();
            if rules.status != Status::Unknown {
                assert_eq!(rules.status, a.status, "({r},{g})");
            }
        }
    }
}

#[test]
fn brill_noether_region_is_nonempty() {
    for alpha in 3..=8 {
        for r in 3..=12 {
            for g in 0..=80 {
                let t = CurveTriple::with_alpha(alpha, r, g);
                if rho(t.d, g, r) >= 0 {
                    assert_eq!(classify_general(alpha, r, g).unwrap().status, Status::NonEmpty, "({alpha},{r},{g})");
                }
            }
        }
    }
}

#[test]
fn emptiness_is_upward_closed_in_r() {
    for offset in [10, 11] {
        let mut seen_empty = false;
        for r in 3..=40 {
            let empty = status(r, r + offset) == Status::Empty;
            assert!(!seen_empty || empty, "g = r + {offset}, r = {r}");
            seen_empty |= empty;
        }
        assert!(seen_empty);
    }
}

#[test]
fn general_examples() {
    let v = classify_general(6, 10, 22).unwrap();
    assert_eq!(v.status, Status::Empty);
    assert!(matches!(v.evidence, Evidence::Obstruction(Obstruction::CompoundResidual { .. })));
    for alpha in 3..=8 {
        for r in alpha + 5..=alpha + 15 {
            let g = r + 2 * alpha + 2;
            if g >= 3 * alpha + 7 {
                let v = classify_general(alpha, r, g).unwrap();
                assert_eq!(v.status, Status::NonEmpty, "({alpha},{r},{g})");
            }
        }
    }
    assert!(matches!(classify_general(2, 5, 10), Err(ClassifyError::AlphaTooSmall(2))));
    assert!(matches!(classify_general(5, 5, -1), Err(ClassifyError::NegativeGenus(-1))));
}

#[test]
fn compound_examples() {
    assert_eq!(compound_obstruction_cases(13), vec![(2, 6, 1), (2, 5, 3), (2, 4, 5), (3, 4, 1)]);
    let twelve = compound_obstruction_cases(12);
    for c in [(2, 4, 4), (2, 5, 2), (2, 6, 0), (3, 4, 0)] {
        assert!(twelve.contains(&c));
    }
    assert_eq!(compound_obstruction_cases(8), vec![(2, 4, 0)]);
}

#[test]
fn compound_cases_match_enumeration() {
    for n in 1..=6 {
        for e in 0..=40 {
            let mut want = Vec::new();
            for k in 2..=e {
                for f in n..=e {
                    if k * f <= e {
                        want.push((k, f, e - k * f));
                    }
                }
            }
            want.sort();
            let mut got: Vec<_> = compound_cases(e, n).iter().map(|c| (c.k, c.f, c.delta)).collect();
            got.sort();
            assert_eq!(got, want, "e={e} n={n}");
        }
    }
    let reasons: Vec<_> = compound_cases(13, 4).iter().map(|c| c.reason).collect();
    assert!(!reasons.contains(&CaseReason::NotCovered));
}

#[test]
fn gonal_examples() {
    assert_eq!(gonal_witness(5, 6, 19).unwrap(), Some(Witness::GonalResidual { k: 4, sigma: 0, m: 2, n: 4 }));
    assert_eq!(gonal_witness(5, 6, 17).unwrap(), None);
    for alpha in 3..=10 {
        let r = alpha + 1;
        assert!(gonal_witness(alpha, r, r + 3 * alpha - 2).unwrap().is_some(), "alpha={alpha}");
    }
}

#[test]
fn gonal_matches_search() {
    for alpha in 3..=8 {
        for r in 3..=20 {
            for g in 0..=80 {
                let n = alpha - 1;
                let e = g - r + alpha - 2;
                // search every split e = n k + sigma with 0 <= sigma < n
                let mut found = None;
                for k in 0..=e.max(0) {
                    for sigma in 0..n {
                        let m = sigma + 2;
                        if e >= 0 && n * k + sigma == e && k >= 4 && 2 * k < g + 2 && g >= 2 * m + n * (k - 1) {
                            found = Some(Witness::GonalResidual { k, sigma, m, n });
                        }
                    }
                }
                assert_eq!(gonal_witness(alpha, r, g).unwrap(), found, "({alpha},{r},{g})");
            }
        }
    }
}
