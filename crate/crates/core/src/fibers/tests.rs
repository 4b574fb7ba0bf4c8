use super::*;

#[test]
fn rankin_selberg_n1_hand_elimination() {
    // b1 = d − a1, b2 = −a1 d − uv  ⇒  uv = −(b2 + a1 b1 + a1²)
    let case = CaseTag::RankinSelberg(1);
    let (b1, b2) = (rat(5), rat(-3));
    let pt = BasePoint { case, n: 1, alpha: vec![rat(2)], coords: vec![rat(2), b1.clone(), b2.clone()], chart_permutation: None };
    assert_eq!(solve_uv_products(&pt).unwrap(), vec![-(b2 + rat(2) * b1 + rat(4))]);
}

#[test]
fn gross_prasad_n1_half_difference() {
    let case = CaseTag::GrossPrasadEven(1);
    // a1 = −α², uv = (b1 − a1)/2
    let pt = BasePoint { case, n: 1, alpha: vec![rat(3)], coords: vec![rat(-9), rat(5)], chart_permutation: None };
    assert_eq!(solve_uv_products(&pt).unwrap(), vec![exactpoly::ratio(7, 1)]);
}

#[test]
fn chart_violations_are_reported() {
    let case = CaseTag::RankinSelberg(2);
    let pt = BasePoint { case, n: 2, alpha: vec![rat(1), rat(1)], coords: vec![rat(0); 5], chart_permutation: None };
    assert!(matches!(solve_uv_products(&pt), Err(Error::SingularElimination { .. })));
}

#[test]
fn friedberg_jacquet_doubled_origin() {
    let case = CaseTag::FriedbergJacquet(1);
    let on = sample_point(case, true, 4).unwrap();
    assert_eq!(on.coords, vec![rat(0)]);
    assert_eq!(count_orbit_classes(&on).unwrap(), 2);
    let off = sample_point(case, false, 4).unwrap();
    assert_eq!(count_orbit_classes(&off).unwrap(), 1);
}

#[test]
fn samples_depend_on_seed() {
    let case = CaseTag::RankinSelberg(2);
    assert_ne!(sample_point(case, false, 1).unwrap(), sample_point(case, false, 2).unwrap());
    assert_eq!(sample_point(case, false, 1).unwrap(), sample_point(case, false, 1).unwrap());
}

#[test]
fn consistency_small_grid() {
    for case in [
        CaseTag::RankinSelberg(1),
        CaseTag::RankinSelberg(2),
        CaseTag::GrossPrasadEven(1),
        CaseTag::GrossPrasadEven(2),
        CaseTag::JacquetIchino,
        CaseTag::FriedbergJacquet(2),
        CaseTag::Diagonal(2),
    ] {
        let r = fiber_divisor_consistency(case, 0, 12).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn ichino_orbits() {
    let case = CaseTag::JacquetIchino;
    for seed in 0..10 {
        let on = sample_point(case, true, seed).unwrap();
        assert_eq!(count_orbit_classes(&on).unwrap(), 2);
        let off = sample_point(case, false, seed).unwrap();
        assert_eq!(count_orbit_classes(&off).unwrap(), 1);
    }
}
