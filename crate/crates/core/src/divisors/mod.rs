//! A-side and B-side divisor polynomials and the verdict comparing them.

mod aside;
mod bside;
mod closed;
mod coords;

use std::time::Instant;

use exactpoly::{MultiPoly, Rational};
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

pub(crate) use aside::affine_row;
pub use aside::{aside_elimination, aside_groundtruth, Elimination};
pub use bside::{bside, bside_det, bside_pfaffian, bside_polarized_det, BSide};
pub use closed::{
    aside_closed_form, aside_variants, bside_closed_form, bside_variants, first_match, gross_prasad_aside_variants,
    gross_prasad_bside_variants, ichino_closed_form, rankin_selberg_aside_variants, rankin_selberg_bside_variants,
    ClosedForm, Variant,
};
pub use coords::coord_context;

use crate::liealg::sample::seeded_rng;
use crate::liealg::{constant_matrices, dual_coords, dual_rep_matrix, full_dual_matrix, random_dual_point, rational_det, CaseTag};
use crate::Result;

/// Outcome of comparing the two divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchStatus {
    ExactMatch,
    MatchUpToUnit,
    MatchWithCorrections,
    Mismatch,
}

impl MatchStatus {
    pub fn is_match(self) -> bool {
        self != MatchStatus::Mismatch
    }
}

/// A departure from a literal closed form that was needed to reproduce the
/// derived polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correction {
    /// `aside_closed` or `bside_closed`.
    pub target: String,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchVerdict {
    pub status: MatchStatus,
    /// `aside = unit · bside_pfaffian`.
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub unit: Option<Rational>,
    pub corrections: Vec<Correction>,
}

/// Which reading of a closed form reproduced its reference polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormResolution {
    /// The polynomial the closed form was compared with.
    pub reference: String,
    /// Name of the first matching variant, if any.
    pub matched_variant: Option<String>,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub unit: Option<Rational>,
    /// Every variant that matches, in the order tried.
    pub all_matching: Vec<String>,
    pub variants_tried: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorReport {
    pub case: CaseTag,
    pub n: usize,
    pub coordinates: Vec<String>,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub aside_groundtruth: MultiPoly,
    /// `Π u_i v_i = aside_unit · aside_groundtruth / aside_chart` on the chart.
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub aside_chart: MultiPoly,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub aside_unit: Rational,
    /// The closed form as read by the matching variant (the literal reading
    /// if no variant matches).
    #[serde(serialize_with = "crate::report::ser_opt_poly")]
    pub aside_closed: Option<MultiPoly>,
    pub aside_closed_resolution: Option<ClosedFormResolution>,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub bside_det: MultiPoly,
    #[serde(serialize_with = "crate::report::ser_opt_poly")]
    pub bside_polarized_det: Option<MultiPoly>,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub bside_pfaffian: MultiPoly,
    #[serde(serialize_with = "crate::report::ser_opt_poly")]
    pub bside_closed: Option<MultiPoly>,
    pub bside_closed_resolution: Option<ClosedFormResolution>,
    pub notes: Vec<String>,
}

fn resolve(
    target: &str,
    reference_name: &str,
    variants: &[ClosedForm],
    reference: &MultiPoly,
    corrections: &mut Vec<Correction>,
) -> Option<ClosedFormResolution> {
    if variants.is_empty() {
        return None;
    }
    let found = first_match(variants, reference);
    if let Some((cf, _)) = &found {
        corrections.extend(
            cf.variant.corrections.iter().map(|d| Correction { target: target.to_string(), description: d.clone() }),
        );
    }
    Some(ClosedFormResolution {
        reference: reference_name.to_string(),
        matched_variant: found.as_ref().map(|(cf, _)| cf.variant.name.clone()),
        unit: found.map(|(_, u)| u),
        all_matching: variants
            .iter()
            .filter(|v| reference.unit_multiple(&v.poly).is_some_and(|u| !u.is_zero()))
            .map(|v| v.variant.name.clone())
            .collect(),
        variants_tried: variants.len(),
    })
}

/// The matching variant of a closed form, or the literal one if none matches.
fn reported_closed(variants: &[ClosedForm], res: &Option<ClosedFormResolution>) -> Option<MultiPoly> {
    let name = res.as_ref().and_then(|r| r.matched_variant.as_ref());
    variants.iter().find(|v| Some(&v.variant.name) == name).or(variants.first()).map(|c| c.poly.clone())
}

/// Derives both divisors for `case` and compares them.
///
/// The status reflects `aside_groundtruth` against `bside_pfaffian`; the
/// closed forms are checked against those two and any correction needed is
/// listed. A closed form that matches under no variant makes the verdict a
/// mismatch.
pub fn verify_matching(case: CaseTag) -> Result<(MatchVerdict, DivisorReport)> {
    let elim = aside_elimination(case)?;
    let b = bside(case)?;
    let mut notes = elim.notes.clone();
    if let Some(p) = &b.polarized {
        let sign = b.pfaffian.unit_multiple(p);
        notes.push(match sign {
            Some(c) => format!("pfaffian = {} * det on the polarization", exactpoly::render_rational(&c)),
            None => "pfaffian differs from det on the polarization".into(),
        });
    }
    if let CaseTag::RankinSelberg(_) = case {
        notes.push(
            "u_i v_i obtained by elimination from the matrix model, not from the printed coefficient formula".into(),
        );
    }

    let mut corrections = Vec::new();
    let a_vars = aside_variants(case)?;
    let b_vars = bside_variants(case)?;
    let a_res = resolve("aside_closed", "aside_groundtruth", &a_vars, &elim.poly, &mut corrections);
    let b_res = resolve("bside_closed", "bside_pfaffian", &b_vars, &b.pfaffian, &mut corrections);
    let closed_ok = [&a_res, &b_res].iter().all(|r| r.as_ref().map_or(true, |r| r.matched_variant.is_some()));

    let unit = elim.poly.unit_multiple(&b.pfaffian).filter(|u| !u.is_zero());
    let status = match (&unit, closed_ok) {
        (Some(u), true) if u.is_one() => MatchStatus::ExactMatch,
        (Some(_), true) => MatchStatus::MatchUpToUnit,
        _ => MatchStatus::Mismatch,
    };
    let report = DivisorReport {
        case,
        n: case.n(),
        coordinates: case.coord_names(),
        aside_groundtruth: elim.poly,
        aside_chart: elim.chart,
        aside_unit: elim.unit,
        aside_closed: reported_closed(&a_vars, &a_res),
        aside_closed_resolution: a_res,
        bside_det: b.det,
        bside_polarized_det: b.polarized,
        bside_pfaffian: b.pfaffian,
        bside_closed: reported_closed(&b_vars, &b_res),
        bside_closed_resolution: b_res,
        notes,
    };
    Ok((MatchVerdict { status, unit, corrections }, report))
}

/// Result of checking the diagonal reduction on random full dual points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub case: CaseTag,
    pub trials: usize,
    pub failures: usize,
    /// Seeds are per run; the first failing trial index, if any.
    pub first_failure: Option<usize>,
    pub vacuous: bool,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

/// Evaluates `det` of the dual representation at random integer points and
/// compares it with [`bside_det`] at the point's coordinates (and, for a
/// polarized case, `det` on `S⁺` with [`bside_polarized_det`]).
pub fn random_invariance_check(case: CaseTag, seed: u64, trials: usize) -> Result<InvarianceReport> {
    let start = Instant::now();
    if case.has_trivial_dual() {
        return Ok(InvarianceReport { case, trials, failures: 0, first_failure: None, vacuous: true, elapsed_ms: 0 });
    }
    let det = bside_det(case)?;
    let polarized = bside_polarized_det(case)?;
    let mut rng = seeded_rng(seed);
    let mut failures = 0;
    let mut first_failure = None;
    for t in 0..trials {
        let bound = rng.gen_range(2..=6);
        let point = constant_matrices(&random_dual_point(case, &mut rng, bound));
        let coords: Vec<Rational> = dual_coords(case, &point)?
            .iter()
            .map(|c| c.constant_value().expect("constant point"))
            .collect();
        let mut ok = rational_det(&full_dual_matrix(case, &point)?)? == det.eval_slice(&coords);
        if let Some(p) = &polarized {
            ok &= rational_det(&dual_rep_matrix(case, &point)?)? == p.eval_slice(&coords);
        }
        if !ok {
            failures += 1;
            first_failure.get_or_insert(t);
        }
    }
    Ok(InvarianceReport { case, trials, failures, first_failure, vacuous: false, elapsed_ms: start.elapsed().as_millis() })
}

#[cfg(test)]
mod tests;
