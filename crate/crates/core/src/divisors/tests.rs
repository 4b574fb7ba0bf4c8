use super::*;
use exactpoly::VarContext;

fn parse(case: CaseTag, s: &str) -> MultiPoly {
    MultiPoly::parse(&coord_context(case), s).unwrap()
}

#[test]
fn ichino_groundtruth_and_pfaffian() {
    let case = CaseTag::JacquetIchino;
    let gt = aside_groundtruth(case).unwrap();
    assert_eq!(gt, ichino_closed_form());
    let det = bside_det(case).unwrap();
    assert_eq!(det, ichino_closed_form().pow(2));
    let (v, _) = verify_matching(case).unwrap();
    assert_eq!(v.status, MatchStatus::ExactMatch);
}

#[test]
fn rankin_selberg_n1() {
    let case = CaseTag::RankinSelberg(1);
    let e = aside_elimination(case).unwrap();
    assert_eq!(e.poly, parse(case, "a1^2 + a1*b1 + b2"));
    let b = bside(case).unwrap();
    assert_eq!(b.polarized.unwrap(), parse(case, "a1^2 + a1*b1 + b2"));
    assert_eq!(bside_closed_form(case).unwrap().unwrap(), parse(case, "a1^2 + a1*b1 + b2"));
}

#[test]
fn trivial_cases() {
    for case in [CaseTag::Diagonal(2), CaseTag::OddGL(3)] {
        let (v, r) = verify_matching(case).unwrap();
        assert_eq!(v.status, MatchStatus::ExactMatch);
        assert!(r.aside_groundtruth.is_one() && r.bside_pfaffian.is_one());
    }
}

#[test]
fn friedberg_jacquet_top_coefficient() {
    let case = CaseTag::FriedbergJacquet(2);
    assert_eq!(aside_groundtruth(case).unwrap(), parse(case, "c2"));
    assert_eq!(bside_pfaffian(case).unwrap(), parse(case, "c2"));
    assert_eq!(bside_polarized_det(case).unwrap().unwrap(), parse(case, "c2"));
    let case = CaseTag::FriedbergJacquet(1);
    assert_eq!(bside_polarized_det(case).unwrap().unwrap(), parse(case, "-c1"));
}

#[test]
fn gross_prasad_n1() {
    let case = CaseTag::GrossPrasadEven(1);
    let (v, r) = verify_matching(case).unwrap();
    assert!(v.status.is_match(), "{v:?}\n{r:#?}");
    assert_eq!(r.aside_groundtruth, parse(case, "a1 - b1"));
}

#[test]
fn elimination_certificate_at_a_point() {
    // Π u_i v_i = unit · P / chart at a concrete Rankin–Selberg point
    let case = CaseTag::RankinSelberg(2);
    let e = aside_elimination(case).unwrap();
    let ctx = VarContext::empty();
    let q = |n: i64| MultiPoly::from_int(&ctx, n);
    let pt = crate::liealg::HPerpPoint::rankin_selberg_normal(&[q(1), q(3)], &[q(2), q(-1)], &[q(5), q(4)], &q(7)).unwrap();
    let coords: Vec<Rational> =
        crate::liealg::git_coords(&pt).unwrap().values().iter().map(|p| p.constant_value().unwrap()).collect();
    let lhs = exactpoly::rat(10 * -4);
    let rhs = &e.unit * e.poly.eval_slice(&coords) / e.chart.eval_slice(&coords);
    assert_eq!(lhs, rhs);
}
