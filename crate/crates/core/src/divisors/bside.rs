//! The B-side: the determinant of the dual symplectic representation and
//! its square root, the symplectic Pfaffian.
//!
//! Both are conjugation invariant, so they are computed on the diagonal
//! torus `diag(α)`, `diag(β)` (or `diag(±α)`, `diag(±β)`), where the
//! Kronecker sums are diagonal and the determinant is a product of linear
//! forms, and then rewritten in the invariant coordinates.

use exactpoly::{MultiPoly, PolyMatrix, VarContext};
use serde::Serialize;

use super::coords::{coord_context, expand_family, EigenConvention};
use crate::liealg::{diagonal_dual_point, dual_rep_matrix, full_dual_matrix, CaseTag};
use crate::symfun::{indexed_names, Family};
use crate::{Error, Result};

/// The B-side polynomials of one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSide {
    /// `det` on all of `S_X`.
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub det: MultiPoly,
    /// `det` on `S⁺` for a polarized case.
    #[serde(serialize_with = "crate::report::ser_opt_poly")]
    pub polarized: Option<MultiPoly>,
    /// The square root of `det` with positive leading coefficient.
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub pfaffian: MultiPoly,
}

/// One torus factor of the dual group: its eigenvalue variables and how
/// they become coordinates.
struct TorusFactor {
    names: Vec<String>,
    coords: Vec<String>,
    convention: EigenConvention,
}

fn torus_factors(case: CaseTag) -> Vec<TorusFactor> {
    let names = case.coord_names();
    let factor = |names: Vec<String>, coords: &[String], convention| TorusFactor { names, coords: coords.to_vec(), convention };
    match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => vec![],
        CaseTag::FriedbergJacquet(n) => vec![factor(indexed_names("beta", n), &names, EigenConvention::Squares)],
        CaseTag::RankinSelberg(n) => vec![
            factor(indexed_names("alpha", n), &names[..n], EigenConvention::Elementary),
            factor(indexed_names("beta", n + 1), &names[n..], EigenConvention::Elementary),
        ],
        CaseTag::GrossPrasadEven(n) => vec![
            factor(indexed_names("alpha", n), &names[..n], EigenConvention::SignedSquares),
            factor(indexed_names("beta", n), &names[n..], EigenConvention::SignedSquares),
        ],
        CaseTag::JacquetIchino => (1..=3)
            .map(|j| factor(vec![format!("s{j}")], &names[j - 1..j], EigenConvention::SignedSquares))
            .collect(),
    }
}

/// Rewrites a polynomial in the torus variables in the coordinate ring.
fn torus_to_coords(case: CaseTag, p: &MultiPoly, factors: &[TorusFactor]) -> Result<MultiPoly> {
    let mut cur = p.clone();
    for f in factors {
        let fam = Family::within(cur.context(), &f.names)?;
        cur = expand_family(&cur, &fam, &f.coords, f.convention)?;
    }
    Ok(cur.reindex(&coord_context(case))?)
}

/// The diagonal dual point on fresh torus variables.
fn torus_point(case: CaseTag) -> Result<(Vec<PolyMatrix>, Vec<TorusFactor>)> {
    let factors = torus_factors(case);
    let names: Vec<String> = factors.iter().flat_map(|f| f.names.iter().cloned()).collect();
    let ctx = VarContext::new(names)?;
    let eig: Vec<Vec<MultiPoly>> = factors
        .iter()
        .map(|f| f.names.iter().map(|s| MultiPoly::var(&ctx, s)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let refs: Vec<&[MultiPoly]> = eig.iter().map(Vec::as_slice).collect();
    Ok((diagonal_dual_point(case, &ctx, &refs), factors))
}

/// `det` of the dual representation in the coordinates (`1` when trivial).
pub fn bside_det(case: CaseTag) -> Result<MultiPoly> {
    if case.has_trivial_dual() {
        return Ok(MultiPoly::one(&coord_context(case)));
    }
    let (point, factors) = torus_point(case)?;
    let det = full_dual_matrix(case, &point)?.det()?;
    torus_to_coords(case, &det, &factors)
}

/// `det` on the Lagrangian `S⁺` of a polarized case.
pub fn bside_polarized_det(case: CaseTag) -> Result<Option<MultiPoly>> {
    if !case.is_polarized() {
        return Ok(None);
    }
    let (point, factors) = torus_point(case)?;
    let det = dual_rep_matrix(case, &point)?.det()?;
    Ok(Some(torus_to_coords(case, &det, &factors)?))
}

/// The square root of [`bside_det`] with positive leading coefficient.
pub fn bside_pfaffian(case: CaseTag) -> Result<MultiPoly> {
    let det = bside_det(case)?;
    pfaffian_of(case, &det)
}

fn pfaffian_of(case: CaseTag, det: &MultiPoly) -> Result<MultiPoly> {
    det.sqrt().ok_or_else(|| Error::NotAPerfectSquare { case: case.to_string(), n: case.n(), witness: det.to_string() })
}

pub fn bside(case: CaseTag) -> Result<BSide> {
    let det = bside_det(case)?;
    let pfaffian = pfaffian_of(case, &det)?;
    Ok(BSide { polarized: bside_polarized_det(case)?, det, pfaffian })
}
