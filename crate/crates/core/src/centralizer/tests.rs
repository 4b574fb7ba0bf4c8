use super::*;
use exactpoly::Rational;

fn q(n: i64) -> MultiPoly {
    constant(&rat(n))
}

fn rs_point(alpha: &[i64], u: &[i64], v: &[i64], d: i64) -> HPerpPoint {
    let f = |xs: &[i64]| xs.iter().map(|&x| q(x)).collect::<Vec<_>>();
    HPerpPoint::rankin_selberg_normal(&f(alpha), &f(u), &f(v), &q(d)).unwrap()
}

#[test]
fn rankin_selberg_examples() {
    let spec = ActionSpec::for_case(CaseTag::RankinSelberg(2));
    assert_eq!(spec.expected_minimal_dim, 0);
    assert_eq!(stabilizer_dim(&spec, &rs_point(&[0, 0], &[0, 0], &[0, 0], 0)).unwrap(), 4);
    assert_eq!(stabilizer_dim(&spec, &rs_point(&[1, 2], &[3, 1], &[0, 5], 7)).unwrap(), 0);
    assert_eq!(stabilizer_dim(&spec, &rs_point(&[1, 2], &[3, 0], &[2, 0], 7)).unwrap(), 1);
    assert!(!is_regular(&spec, &rs_point(&[1, 2], &[0, 0], &[0, 0], 1)).unwrap());
}

#[test]
fn symbolic_points_are_rejected() {
    let ctx = VarContext::new(["w"]).unwrap();
    let w = MultiPoly::var(&ctx, "w").unwrap();
    let pt = HPerpPoint::ichino_normal(&w, &q(1), &q(1), &q(1)).unwrap();
    let spec = ActionSpec::for_case(CaseTag::JacquetIchino);
    assert_eq!(stabilizer_dim(&spec, &pt), Err(Error::SymbolicInput));
}

#[test]
fn ichino_regular_orbit() {
    let spec = ActionSpec::for_case(CaseTag::JacquetIchino);
    let pt = HPerpPoint::ichino_normal(&q(2), &q(1), &q(3), &q(-1)).unwrap();
    assert!(is_regular(&spec, &pt).unwrap());
    // b = c = 0 leaves the diagonal torus
    let pt = HPerpPoint::ichino_normal(&q(2), &q(1), &q(0), &q(0)).unwrap();
    assert_eq!(stabilizer_dim(&spec, &pt).unwrap(), 1);
}

#[test]
fn gross_prasad_and_tridiagonal_fixture() {
    let spec = ActionSpec::for_case(CaseTag::GrossPrasadEven(2));
    assert_eq!(spec.basis.len(), 6);
    let f = |xs: &[i64]| xs.iter().map(|&x| q(x)).collect::<Vec<_>>();
    let pt = HPerpPoint::gross_prasad_normal(&f(&[1, 2]), &f(&[1, 1]), &f(&[0, 3])).unwrap();
    assert!(is_regular(&spec, &pt).unwrap());
    let pt = HPerpPoint::gross_prasad_normal(&f(&[1, 2]), &f(&[1, 0]), &f(&[0, 0])).unwrap();
    assert_eq!(stabilizer_dim(&spec, &pt).unwrap(), 1);

    for m in [3usize, 4, 5, 6] {
        let spec = ActionSpec::adjoint_so(m);
        let ctx = VarContext::empty();
        let gammas: Vec<MultiPoly> = (1..m as i64).map(q).collect();
        let x = crate::liealg::tridiagonal_skew(&ctx, &gammas).to_rational().unwrap();
        assert!(is_regular_of(&spec, &[x]).unwrap(), "m = {m}");
        if m >= 5 {
            let mut single = vec![q(0); m - 1];
            single[0] = q(1);
            let x = crate::liealg::tridiagonal_skew(&ctx, &single).to_rational().unwrap();
            assert!(!is_regular_of(&spec, &[x]).unwrap(), "m = {m}");
        }
    }
}

#[test]
fn expected_minimal_dims_match_sampling() {
    let mut cases = CaseTag::grid();
    cases.retain(|c| c.n() <= 2);
    for case in cases {
        let spec = ActionSpec::for_case(case);
        assert_eq!(minimal_dim_estimate(&spec, 0, 5), spec.expected_minimal_dim, "{case}");
    }
    assert_eq!(ActionSpec::for_case(CaseTag::Diagonal(1)).expected_minimal_dim, 1);
    assert_eq!(minimal_dim_estimate(&ActionSpec::adjoint_so(5), 1, 5), 2);
}

#[test]
fn bracket_compatibility() {
    let mut rng = seeded_rng(11);
    for case in CaseTag::grid().into_iter().filter(|c| c.n() <= 2) {
        let spec = ActionSpec::for_case(case);
        let x = spec.random_point(&mut rng, 6);
        let nb = spec.basis.len();
        for _ in 0..3 {
            let i = rng.gen_range(0..nb);
            let j = rng.gen_range(0..nb);
            let (h1, h2) = (&spec.basis[i], &spec.basis[j]);
            let lhs = spec.act(&h1.commutator(h2), &x);
            let h2x = spec.act(h2, &x);
            let h1x = spec.act(h1, &x);
            let a = spec.act(h1, &h2x);
            let b = spec.act(h2, &h1x);
            for k in 0..lhs.len() {
                assert_eq!(lhs[k], a[k].sub(&b[k]), "{case}");
            }
        }
    }
}

#[test]
fn linear_in_the_lie_algebra_argument() {
    let spec = ActionSpec::for_case(CaseTag::RankinSelberg(2));
    let mut rng = seeded_rng(2);
    let x = spec.random_point(&mut rng, 5);
    let two = Rational::from_integer(2.into());
    let h = spec.basis[0].scale(&two).add(&spec.basis[3]);
    let lhs = spec.act(&h, &x);
    let a = spec.act(&spec.basis[0], &x);
    let b = spec.act(&spec.basis[3], &x);
    for k in 0..2 {
        assert_eq!(lhs[k], a[k].scale(&two).add(&b[k]));
    }
}
