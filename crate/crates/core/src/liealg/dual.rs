use exactpoly::{rat, MultiPoly, PolyMatrix, QMatrix, VarContext};
use rand::Rng;

use super::charpoly::{charpoly_coeffs, even_wedge_traces};
use super::kron::{kronecker_sum, kronecker_sum3};
use super::pfaffian::{preserves_form, split_form, symplectic_form};
use super::sample::{random_so_split, random_sp, random_matrix, random_traceless};
use super::CaseTag;
use crate::{Error, Result};

/// Expected shapes of the dual-side Lie algebra components.
///
/// - Rankin–Selberg: `𝔤𝔩_n × 𝔤𝔩_{n+1}`;
/// - Gross–Prasad: `𝔰𝔬_{2n}` (split form) `× 𝔰𝔭_{2n}`;
/// - Jacquet–Ichino: `𝔰𝔩_2³`;
/// - Friedberg–Jacquet: `𝔰𝔭_{2n}`;
/// - diagonal and odd GL: no components (trivial representation).
pub fn dual_shapes(case: CaseTag) -> Vec<usize> {
    match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => vec![],
        CaseTag::FriedbergJacquet(n) => vec![2 * n],
        CaseTag::RankinSelberg(n) => vec![n, n + 1],
        CaseTag::GrossPrasadEven(n) => vec![2 * n, 2 * n],
        CaseTag::JacquetIchino => vec![2, 2, 2],
    }
}

fn dual_violation(case: CaseTag, what: String) -> Error {
    Error::Constraint { case: format!("{case} (dual side)"), invariant: what }
}

/// Checks sizes and the Lie algebra membership of each dual component.
pub fn validate_dual(case: CaseTag, comps: &[PolyMatrix]) -> Result<()> {
    let shapes = dual_shapes(case);
    if comps.len() != shapes.len() {
        return Err(dual_violation(case, format!("expected {} components, got {}", shapes.len(), comps.len())));
    }
    for (k, (m, &s)) in comps.iter().zip(&shapes).enumerate() {
        if m.rows() != s || m.cols() != s {
            return Err(dual_violation(case, format!("component {} must be {s}x{s}", k + 1)));
        }
    }
    let ok = match case {
        CaseTag::FriedbergJacquet(n) => preserves_form(&comps[0], &symplectic_form(comps[0].context(), n)),
        CaseTag::GrossPrasadEven(n) => {
            preserves_form(&comps[0], &split_form(comps[0].context(), 2 * n))
                && preserves_form(&comps[1], &symplectic_form(comps[1].context(), n))
        }
        CaseTag::JacquetIchino => comps.iter().all(|m| m.trace().is_ok_and(|t| t.is_zero())),
        _ => true,
    };
    if !ok {
        return Err(dual_violation(case, "component is not in the dual Lie algebra".into()));
    }
    Ok(())
}

/// The action matrix on the dual symplectic representation, or on its
/// Lagrangian half `S⁺` when the case is polarized.
///
/// Rankin–Selberg gives `x₁ ⊗ I + I ⊗ x₂` on `std_n ⊗ std_{n+1}`;
/// Friedberg–Jacquet gives `x` on `std_{2n}`; Gross–Prasad gives the
/// Kronecker sum on `std_{2n} ⊗ std_{2n}`; Jacquet–Ichino the triple
/// Kronecker sum on `std_2^{⊗3}`. The trivial cases give a `0×0` matrix.
pub fn dual_rep_matrix(case: CaseTag, comps: &[PolyMatrix]) -> Result<PolyMatrix> {
    validate_dual(case, comps)?;
    Ok(match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => PolyMatrix::zeros(&VarContext::empty(), 0, 0),
        CaseTag::FriedbergJacquet(_) => comps[0].clone(),
        CaseTag::RankinSelberg(_) | CaseTag::GrossPrasadEven(_) => kronecker_sum(&comps[0], &comps[1])?,
        CaseTag::JacquetIchino => kronecker_sum3(&comps[0], &comps[1], &comps[2])?,
    })
}

/// The action on all of `S_X`: for a polarized case `S⁺ ⊕ (S⁺)*`, i.e.
/// `diag(P, −Pᵗ)`; otherwise the same as [`dual_rep_matrix`].
pub fn full_dual_matrix(case: CaseTag, comps: &[PolyMatrix]) -> Result<PolyMatrix> {
    let p = dual_rep_matrix(case, comps)?;
    if case.is_polarized() {
        let minus = p.transpose().neg();
        Ok(PolyMatrix::block_diag(p.context(), &[&p, &minus]))
    } else {
        Ok(p)
    }
}

/// Invariant coordinates of a dual-side point, in the order of
/// [`CaseTag::coord_names`]. Empty for the trivial cases.
///
/// Rankin–Selberg uses the two characteristic coefficient lists,
/// Gross–Prasad the even wedge traces of both factors, Jacquet–Ichino the
/// three determinants and Friedberg–Jacquet `c_k = (−1)^k tr ∧^{2k} x`
/// (so that `c_k = e_k(β²)` at `x = diag(β, −β)`).
pub fn dual_coords(case: CaseTag, comps: &[PolyMatrix]) -> Result<Vec<MultiPoly>> {
    validate_dual(case, comps)?;
    Ok(match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => vec![],
        CaseTag::FriedbergJacquet(n) => even_wedge_traces(&comps[0], n)?
            .into_iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { -c } else { c })
            .collect(),
        CaseTag::RankinSelberg(_) => [charpoly_coeffs(&comps[0])?, charpoly_coeffs(&comps[1])?].concat(),
        CaseTag::GrossPrasadEven(n) => [even_wedge_traces(&comps[0], n)?, even_wedge_traces(&comps[1], n)?].concat(),
        CaseTag::JacquetIchino => comps.iter().map(|m| m.det()).collect::<Result<_, _>>()?,
    })
}

/// A random full (non-diagonal) integer point of the dual Lie algebra.
pub fn random_dual_point<R: Rng + ?Sized>(case: CaseTag, rng: &mut R, bound: i64) -> Vec<QMatrix> {
    match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => vec![],
        CaseTag::FriedbergJacquet(n) => vec![random_sp(rng, n, bound)],
        CaseTag::RankinSelberg(n) => vec![random_matrix(rng, n, n, bound), random_matrix(rng, n + 1, n + 1, bound)],
        CaseTag::GrossPrasadEven(n) => vec![random_so_split(rng, n, bound), random_sp(rng, n, bound)],
        CaseTag::JacquetIchino => (0..3).map(|_| random_traceless(rng, 2, bound)).collect(),
    }
}

/// Lifts rational matrices into constant polynomial matrices.
pub fn constant_matrices(ms: &[QMatrix]) -> Vec<PolyMatrix> {
    let ctx = VarContext::empty();
    ms.iter().map(|m| PolyMatrix::from_rational(&ctx, m)).collect()
}

/// The dual point `diag(β, −β)`-style torus element on the given eigenvalue
/// polynomials: one slice per factor, each of the factor's rank.
pub fn diagonal_dual_point(case: CaseTag, ctx: &VarContext, eig: &[&[MultiPoly]]) -> Vec<PolyMatrix> {
    let pm = |v: &[MultiPoly]| {
        let mut d: Vec<MultiPoly> = v.to_vec();
        d.extend(v.iter().map(|x| -x));
        PolyMatrix::diagonal(ctx, &d)
    };
    match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => vec![],
        CaseTag::RankinSelberg(_) => eig.iter().map(|v| PolyMatrix::diagonal(ctx, v)).collect(),
        CaseTag::FriedbergJacquet(_) | CaseTag::GrossPrasadEven(_) | CaseTag::JacquetIchino => {
            eig.iter().map(|v| pm(v)).collect()
        }
    }
}

/// Scalar determinant of a rational dual action matrix (`1` for `0×0`).
pub fn rational_det(m: &PolyMatrix) -> Result<exactpoly::Rational> {
    if m.rows() == 0 {
        return Ok(rat(1));
    }
    let q = m.to_rational().ok_or(Error::SymbolicInput)?;
    Ok(q.det()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::sample::seeded_rng;

    fn ctx() -> VarContext {
        VarContext::new(["a1", "a2", "b1", "b2", "b3"]).unwrap()
    }

    fn v(s: &str) -> MultiPoly {
        MultiPoly::parse(&ctx(), s).unwrap()
    }

    #[test]
    fn trivial_cases_are_empty() {
        let m = dual_rep_matrix(CaseTag::Diagonal(3), &[]).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
        assert_eq!(rational_det(&m).unwrap(), rat(1));
        assert!(dual_coords(CaseTag::OddGL(2), &[]).unwrap().is_empty());
    }

    #[test]
    fn rankin_selberg_diagonal_entries() {
        let c = ctx();
        let pt = diagonal_dual_point(CaseTag::RankinSelberg(1), &c, &[&[v("a1")], &[v("b1"), v("b2")]]);
        let m = dual_rep_matrix(CaseTag::RankinSelberg(1), &pt).unwrap();
        assert_eq!(m.to_string(), "[[a1 + b1, 0], [0, a1 + b2]]");
        let full = full_dual_matrix(CaseTag::RankinSelberg(1), &pt).unwrap();
        assert_eq!(full.rows(), 4);
    }

    #[test]
    fn gross_prasad_n1_sign_pattern_product() {
        let c = ctx();
        let pt = diagonal_dual_point(CaseTag::GrossPrasadEven(1), &c, &[&[v("a1")], &[v("b1")]]);
        let det = dual_rep_matrix(CaseTag::GrossPrasadEven(1), &pt).unwrap().det().unwrap();
        let expect = v("b1^2 - a1^2").pow(2);
        assert_eq!(det, expect);
    }

    #[test]
    fn random_points_are_valid() {
        let mut rng = seeded_rng(3);
        for case in CaseTag::grid() {
            let q = random_dual_point(case, &mut rng, 4);
            let comps = constant_matrices(&q);
            validate_dual(case, &comps).unwrap();
            assert_eq!(dual_coords(case, &comps).unwrap().len(), if case.has_trivial_dual() { 0 } else { case.coord_names().len() });
        }
    }

    #[test]
    fn friedberg_jacquet_coordinates_are_elementary_in_squares() {
        let c = VarContext::new(["b1", "b2"]).unwrap();
        let b = |s: &str| MultiPoly::parse(&c, s).unwrap();
        let pt = diagonal_dual_point(CaseTag::FriedbergJacquet(2), &c, &[&[b("b1"), b("b2")]]);
        let got: Vec<String> = dual_coords(CaseTag::FriedbergJacquet(2), &pt).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["b1^2 + b2^2", "b1^2*b2^2"]);
    }
}
