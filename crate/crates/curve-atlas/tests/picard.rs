use curve_atlas::picard::notation::{format_plane, parse_class, parse_plane};
use curve_atlas::picard::{
    arithmetic_genus, blowup_curve_invariants, convert, convert_f1_blowup, intersect, riemann_roch_chi,
    scroll_system_dim, Direction, DivisorClass, PicardError, SurfaceKind, SurfaceModel,
};
use curve_atlas::dimcount::severi_expected_dim;
use proptest::prelude::*;

fn p(text: &str) -> DivisorClass {
    parse_class(text).unwrap()
}

#[test]
fn surface_models() {
    let f2 = SurfaceModel::hirzebruch(2);
    assert_eq!(f2.gram, vec![vec![-2, 1], vec![1, 0]]);
    assert_eq!(f2.canonical, DivisorClass::hirzebruch(-2, -4));
    let b3 = SurfaceModel::blowup(3);
    assert_eq!(b3.rank(), 4);
    assert_eq!(b3.canonical, p("(-3;-1^3)"));
    for (i, row) in b3.gram.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            assert_eq!(*x, b3.gram[j][i]);
        }
    }
}

#[test]
fn intersections() {
    let f3 = SurfaceModel::hirzebruch(3);
    let h = DivisorClass::hirzebruch(1, 3);
    assert_eq!(intersect(&f3, &h, &h).unwrap(), 3);
    let b5 = SurfaceModel::blowup(5);
    let c = p("(9;3^5)");
    assert_eq!(intersect(&b5, &c, &c).unwrap(), 36);
    assert_eq!(intersect(&b5, &c, &DivisorClass::zero(6)).unwrap(), 0);
    assert!(matches!(
        intersect(&b5, &c, &DivisorClass::zero(3)),
        Err(PicardError::DimensionMismatch { .. })
    ));
}

#[test]
fn genera() {
    let f3 = SurfaceModel::hirzebruch(3);
    // 4h + (13 - 12) f with h = C0 + 3f
    assert_eq!(arithmetic_genus(&f3, &DivisorClass::hirzebruch(4, 13)).unwrap(), 18);
    assert_eq!(arithmetic_genus(&SurfaceModel::blowup(6), &p("(9;3^5,2)")).unwrap(), 12);
    assert_eq!(arithmetic_genus(&SurfaceModel::blowup(9), &p("(10;3^5,1^4)")).unwrap(), 21);
}

#[test]
fn euler_characteristics() {
    let b5 = SurfaceModel::blowup(5);
    assert_eq!(riemann_roch_chi(&b5, &p("(9;3^5)")).unwrap(), 25);
    assert_eq!(riemann_roch_chi(&b5, &p("(8;3,2^4)")).unwrap(), 27);
    assert_eq!(riemann_roch_chi(&b5, &DivisorClass::zero(6)).unwrap(), 1);
}

#[test]
fn scroll_dims() {
    assert_eq!(scroll_system_dim(3, 5, -2), 38);
    assert_eq!(scroll_system_dim(3, 4, 1), 39);
    assert_eq!(scroll_system_dim(3, 5, 10), 110);
}

#[test]
fn f1_conversion_examples() {
    let f1 = SurfaceModel::hirzebruch(1);
    for ((a, b), want) in [((5, -2), "(8;3)"), ((4, 1), "(9;5)"), ((2, -1), "(3;1)")] {
        let c = f1.scroll_class(3, a, b).unwrap();
        assert_eq!(convert(&c, Direction::F1ToBlowUp).unwrap(), p(want));
    }
    assert!(matches!(
        convert_f1_blowup(&DivisorClass::hirzebruch(1, 1), SurfaceKind::Hirzebruch(2)),
        Err(PicardError::WrongSurface { .. })
    ));
    assert!(convert_f1_blowup(&p("(3;1,1)"), SurfaceKind::BlowUp(2)).is_err());
}

#[test]
fn blown_plane_invariants() {
    for r in 3..=8i64 {
        for beta in 0..=8 - r {
            let c = DivisorClass::plane_blocks(8, &[(3, 1), (2, (8 - r - beta) as usize), (1, beta as usize)]);
            let h = DivisorClass::plane_blocks(3, &[(1, (9 - r) as usize)]);
            let s = SurfaceModel::blowup((9 - r) as u32);
            assert_eq!(blowup_curve_invariants(&s, &c, &h).unwrap(), (2 * r + 5 + beta, r + 10 + beta));
        }
    }
    for r in 7..=11i64 {
        for gamma in 0..=11 - r {
            let c = DivisorClass::plane_blocks(9, &[(4, 1), (2, (11 - r - gamma) as usize), (1, gamma as usize)]);
            let h = DivisorClass::plane_blocks(4, &[(2, 1), (1, (11 - r) as usize)]);
            let s = SurfaceModel::blowup((12 - r) as u32);
            assert_eq!(blowup_curve_invariants(&s, &c, &h).unwrap(), (2 * r + 6 + gamma, r + 11 + gamma));
        }
    }
    let s = SurfaceModel::blowup(10);
    let h = p("(4;1^10)");
    for delta in 1..=8usize {
        let c = DivisorClass::plane_blocks(9, &[(3, 1), (2, delta), (1, 9 - delta)]);
        let d = delta as i64;
        assert_eq!(blowup_curve_invariants(&s, &c, &h).unwrap(), (24 - d, 25 - d));
    }
}

#[test]
fn notation_round_trip() {
    let parsed = parse_plane("(5; 1, 2^2, 0, 3)").unwrap();
    assert_eq!(format_plane(&parsed.class), "(5;3,2^2,1,0)");
    assert_eq!(parsed.perm, vec![4, 1, 2, 0, 3]);
    // zero exponents vanish
    assert_eq!(p("(4;2^0,1^3)"), p("(4;1^3)"));
    assert_eq!(format_plane(&p("(10;3^5)")), "(10;3^5)");
    assert!(parse_plane("(4;x)").is_err());
    assert!(parse_plane("4;1").is_err());
}

fn hirzebruch_class() -> impl Strategy<Value = (u32, DivisorClass)> {
    (0u32..=6, -40i64..=40, -40i64..=40).prop_map(|(e, a, b)| (e, DivisorClass::hirzebruch(a, b)))
}

fn plane_class() -> impl Strategy<Value = (u32, DivisorClass)> {
    (0u32..=12).prop_flat_map(|s| {
        (Just(s), proptest::collection::vec(-30i64..=30, s as usize + 1)).prop_map(|(s, v)| (s, DivisorClass::new(v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn adjunction_parity_hirzebruch((e, d) in hirzebruch_class()) {
        let s = SurfaceModel::hirzebruch(e);
        let dd = intersect(&s, &d, &d).unwrap();
        let dk = intersect(&s, &d, &s.canonical).unwrap();
        prop_assert_eq!((dd + dk).rem_euclid(2), 0);
        prop_assert_eq!(arithmetic_genus(&s, &d).unwrap() * 2, dd + dk + 2);
    }

    #[test]
    fn adjunction_parity_plane((n, d) in plane_class()) {
        let s = SurfaceModel::blowup(n);
        let dd = intersect(&s, &d, &d).unwrap();
        let dk = intersect(&s, &d, &s.canonical).unwrap();
        prop_assert_eq!((dd + dk).rem_euclid(2), 0);
    }
}

proptest! {
    #[test]
    fn f1_conversion_is_an_isometry(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
        let f1 = SurfaceModel::hirzebruch(1);
        let p1 = SurfaceModel::blowup(1);
        let x = DivisorClass::hirzebruch(a, b);
        let y = DivisorClass::hirzebruch(c, d);
        let cx = convert(&x, Direction::F1ToBlowUp).unwrap();
        let cy = convert(&y, Direction::F1ToBlowUp).unwrap();
        prop_assert_eq!(intersect(&f1, &x, &y).unwrap(), intersect(&p1, &cx, &cy).unwrap());
        prop_assert_eq!(convert(&cx, Direction::BlowUpToF1).unwrap(), x);
    }
}

#[test]
fn f1_canonical_classes_correspond() {
    let f1 = SurfaceModel::hirzebruch(1);
    let p1 = SurfaceModel::blowup(1);
    assert_eq!(convert(&f1.canonical, Direction::F1ToBlowUp).unwrap(), p1.canonical);
    assert_eq!(convert(&p1.canonical, Direction::BlowUpToF1).unwrap(), f1.canonical);
    for basis in [DivisorClass::hirzebruch(1, 0), DivisorClass::hirzebruch(0, 1)] {
        let back = convert(&convert(&basis, Direction::F1ToBlowUp).unwrap(), Direction::BlowUpToF1).unwrap();
        assert_eq!(back, basis);
    }
}

#[test]
fn scroll_dim_matches_severi_on_f1() {
    for a in -12..=12 {
        for b in -12..=12 {
            // aH + bL on the cubic scroll is a C0 + (2a + b) f on F1
            assert_eq!(scroll_system_dim(3, a, b), severi_expected_dim(1, a, 2 * a + b, 0), "a={a} b={b}");
        }
    }
}

#[test]
fn cone_genus_on_hirzebruch() {
    for n in 1..=6u32 {
        let s = SurfaceModel::hirzebruch(n);
        let ni = i64::from(n);
        for k in 2..=6 {
            for d in 1..=40 {
                // k h + (d - n k) f with h = C0 + n f
                let c = DivisorClass::hirzebruch(k, k * ni + d - ni * k);
                assert_eq!(arithmetic_genus(&s, &c).unwrap(), (k - 1) * (2 * d - ni * k - 2) / 2);
            }
        }
    }
}
