use std::collections::HashMap;

use exactpoly::{sign_pow, MultiPoly, VarContext};

use crate::liealg::CaseTag;
use crate::symfun::{elem_expand, halve_family, indexed_names, Family, SymPolyHandle};
use crate::{Error, Result};

/// The polynomial ring of invariant coordinates on the quotient.
pub fn coord_context(case: CaseTag) -> VarContext {
    VarContext::new(case.coord_names()).expect("coordinate names are distinct")
}

/// How an eigenvalue family relates to the coordinates `y_1, …, y_n` it is
/// traded for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum EigenConvention {
    /// `y_k = e_k(λ)`.
    Elementary,
    /// `y_k = e_k(λ²)`; the input must be even in every `λ_i`.
    Squares,
    /// `y_k = (−1)^k e_k(λ²)`, i.e. `y_k = tr ∧^{2k}` of `diag(λ, −λ)`.
    SignedSquares,
}

/// The convention tying the eigenvalues `α` of `x₁` to the first
/// coordinates of `case`.
pub(crate) fn alpha_convention(case: CaseTag) -> EigenConvention {
    match case {
        CaseTag::GrossPrasadEven(_) => EigenConvention::SignedSquares,
        _ => EigenConvention::Elementary,
    }
}

/// Trades the symmetric dependence on `family` for the variables `names`.
///
/// The result lives in the family's context with the family removed and
/// `names` appended (unless they are already present).
pub(crate) fn expand_family(p: &MultiPoly, family: &Family, names: &[String], conv: EigenConvention) -> Result<MultiPoly> {
    let n = family.len();
    let p = match conv {
        EigenConvention::Elementary => p.reindex(family.context())?,
        EigenConvention::Squares | EigenConvention::SignedSquares => halve_family(p, family).ok_or_else(|| {
            Error::Consistency(format!("polynomial is not even in the variables {:?}", family.names()))
        })?,
    };
    let handle = SymPolyHandle::new(family, p)?;
    let t_names = indexed_names("_e", n);
    let in_t = elem_expand(&handle, &t_names)?;
    let mut target_names: Vec<String> = in_t.context().names()[..in_t.context().len() - n].to_vec();
    for name in names {
        if !target_names.contains(name) {
            target_names.push(name.clone());
        }
    }
    let target = VarContext::new(target_names)?;
    let images: HashMap<String, MultiPoly> = t_names
        .iter()
        .zip(names)
        .enumerate()
        .map(|(k, (t, y))| {
            let y = MultiPoly::var(&target, y).expect("coordinate name");
            let image = match conv {
                EigenConvention::SignedSquares => y.scale(&sign_pow(k as i64 + 1)),
                _ => y,
            };
            (t.clone(), image)
        })
        .collect();
    Ok(in_t.substitute_partial(&target, &images)?)
}

/// Rewrites a polynomial symmetric in the eigenvalues `α` of `x₁` in the
/// case's coordinate ring. The remaining variables must be coordinate names.
pub(crate) fn expand_alpha(case: CaseTag, p: &MultiPoly, family: &Family) -> Result<MultiPoly> {
    let names: Vec<String> = case.coord_names().into_iter().take(family.len()).collect();
    Ok(expand_family(p, family, &names, alpha_convention(case))?.reindex(&coord_context(case))?)
}
