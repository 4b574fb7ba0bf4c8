//! The A-side divisor: where the regular quotient fails to be separated.
//!
//! Ground truth comes from the matrix models. On the chart where `x₁` is
//! diagonal with eigenvalues `α`, the coordinates `b_j` are affine in the
//! products `w_i = u_i v_i` (and in `d` for Rankin–Selberg). Solving that
//! system by Cramer's rule expresses each `w_i` as a ratio of determinants;
//! after cancelling the chart factors (`α_i − α_k`, and for the orthogonal
//! case `α_i + α_k` and `α_i`) the product of numerators is symmetric in
//! `α` and is rewritten in the coordinates.

use std::collections::HashMap;

use exactpoly::{MultiPoly, PolyMatrix, Rational, VarContext};
use num_traits::One;
use serde::Serialize;

use super::coords::{coord_context, expand_alpha};
use crate::liealg::{git_coords, CaseTag, HPerpPoint};
use crate::symfun::{indexed_names, Family, SymPolyHandle};
use crate::{Error, Result};

/// The eliminated divisor together with its certificate:
/// `Π_i u_i v_i = unit · poly / chart` on the regular semisimple chart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Elimination {
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub poly: MultiPoly,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub chart: MultiPoly,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub unit: Rational,
    pub notes: Vec<String>,
}

/// Coefficients of an equation that is affine in the unknowns.
pub(crate) struct AffineRow {
    pub(crate) constant: MultiPoly,
    pub(crate) coeffs: Vec<MultiPoly>,
}

/// Splits `p` as `constant + Σ coeffs[k]·unknown_k`, where unknown `k` is
/// the monomial in `vars` with exponent vector `keys[k]`.
pub(crate) fn affine_row(case: CaseTag, p: &MultiPoly, vars: &[usize], keys: &[Vec<u32>]) -> Result<AffineRow> {
    let ctx = p.context();
    let mut row = AffineRow { constant: MultiPoly::zero(ctx), coeffs: vec![MultiPoly::zero(ctx); keys.len()] };
    for (key, coeff) in p.split_by(vars) {
        if key.iter().all(|&e| e == 0) {
            row.constant = coeff;
        } else if let Some(k) = keys.iter().position(|x| *x == key) {
            row.coeffs[k] = coeff;
        } else {
            return Err(Error::SingularElimination {
                case: case.to_string(),
                detail: format!("coordinate is not affine in the unknowns (term with exponents {key:?})"),
            });
        }
    }
    Ok(row)
}

/// Removes every chart factor shared by numerator and denominator.
fn cancel_chart(num: &MultiPoly, den: &MultiPoly, factors: &[MultiPoly]) -> (MultiPoly, MultiPoly) {
    let (mut num, mut den) = (num.clone(), den.clone());
    for f in factors {
        loop {
            match (num.exact_div(f), den.exact_div(f)) {
                (Some(n), Some(d)) => {
                    num = n;
                    den = d;
                }
                _ => break,
            }
        }
    }
    (num, den)
}

fn var(ctx: &VarContext, name: &str) -> MultiPoly {
    MultiPoly::var(ctx, name).expect("variable in context")
}

/// The polynomial with leading coefficient 1 and the factor removed.
fn monic_with_unit(p: &MultiPoly) -> (MultiPoly, Rational) {
    let c = p.leading_coefficient().cloned().unwrap_or_else(Rational::one);
    (p.monic(), c)
}

/// Cramer elimination for the Rankin–Selberg and even orthogonal models.
fn eliminate_uv(case: CaseTag) -> Result<Elimination> {
    let n = case.n();
    let alpha = indexed_names("alpha", n);
    let (us, vs) = (indexed_names("u", n), indexed_names("v", n));
    let rs = matches!(case, CaseTag::RankinSelberg(_));
    let b_count = if rs { n + 1 } else { n };
    let b_names: Vec<String> = case.coord_names()[n..].to_vec();
    let mut names: Vec<String> = alpha.iter().chain(&us).chain(&vs).cloned().collect();
    if rs {
        names.push("d".into());
    }
    names.extend(b_names.iter().cloned());
    let ctx = VarContext::new(names)?;
    let polys = |ns: &[String]| ns.iter().map(|s| var(&ctx, s)).collect::<Vec<_>>();
    let (al, u, v) = (polys(&alpha), polys(&us), polys(&vs));
    let point = if rs {
        HPerpPoint::rankin_selberg_normal(&al, &u, &v, &var(&ctx, "d"))?
    } else {
        HPerpPoint::gross_prasad_normal(&al, &u, &v)?
    };
    let coords = git_coords(&point)?;

    // unknowns: (d,) w_1, …, w_n
    let mut split_vars: Vec<usize> = (n..3 * n).collect();
    let mut keys: Vec<Vec<u32>> = Vec::new();
    if rs {
        split_vars.push(3 * n);
        let mut k = vec![0; 2 * n + 1];
        k[2 * n] = 1;
        keys.push(k);
    }
    for i in 0..n {
        let mut k = vec![0; split_vars.len()];
        k[i] = 1;
        k[n + i] = 1;
        keys.push(k);
    }
    let offset = usize::from(rs);
    let size = keys.len();
    debug_assert_eq!(size, b_count);
    let mut matrix = PolyMatrix::zeros(&ctx, size, size);
    let mut rhs = Vec::with_capacity(size);
    for (j, bj) in coords.b.iter().enumerate() {
        let row = affine_row(case, bj, &split_vars, &keys)?;
        for (k, c) in row.coeffs.into_iter().enumerate() {
            matrix.set(j, k, c);
        }
        rhs.push(&var(&ctx, &b_names[j]) - &row.constant);
    }
    let den = matrix.det()?;
    if den.is_zero() {
        return Err(Error::SingularElimination {
            case: case.to_string(),
            detail: "coefficient matrix of the u_i v_i system is singular".into(),
        });
    }

    let mut factors = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            factors.push(&al[i] - &al[k]);
            if !rs {
                factors.push(&al[i] + &al[k]);
            }
        }
        if !rs {
            factors.push(al[i].clone());
        }
    }

    let mut num_prod = MultiPoly::one(&ctx);
    let mut den_prod = MultiPoly::one(&ctx);
    for i in 0..n {
        let col = offset + i;
        let mut mi = matrix.clone();
        for (j, r) in rhs.iter().enumerate() {
            mi.set(j, col, r.clone());
        }
        let (num, d) = cancel_chart(&mi.det()?, &den, &factors);
        num_prod = &num_prod * &num;
        den_prod = &den_prod * &d;
    }

    let sym_ctx = VarContext::new(alpha.iter().chain(&b_names).cloned())?;
    let sym_fam = Family::indexed(&sym_ctx, "alpha", n)?;
    let num_sym = num_prod.reindex(&sym_ctx)?;
    let den_sym = den_prod.reindex(&sym_ctx)?;
    // hard symmetry assertion before any conversion
    SymPolyHandle::new(&sym_fam, num_sym.clone())?;
    SymPolyHandle::new(&sym_fam, den_sym.clone())?;

    let (poly, cn) = monic_with_unit(&expand_alpha(case, &num_sym, &sym_fam)?);
    let (chart, cd) = monic_with_unit(&expand_alpha(case, &den_sym, &sym_fam)?);
    let notes = vec![
        format!(
            "solved the {size}x{size} system for {} by Cramer's rule; denominator {}",
            if rs { "d and u_i v_i" } else { "u_i v_i" },
            den
        ),
        "chart factors cancelled before symmetrization".into(),
    ];
    Ok(Elimination { poly, chart, unit: cn / cd, notes })
}

/// Elimination for `PGL_2³/PGL_2` with `x₁ = diag(w, −w)`, `x₂ = [[a, b], [c, −a]]`.
///
/// `d₃ − d₂` is affine in `a` and `d₂` is affine in `bc`; clearing the
/// denominators gives `r k₁² · bc`, which is even in `w`, and `w² = −d₁`.
fn eliminate_ichino() -> Result<Elimination> {
    let case = CaseTag::JacquetIchino;
    let ctx = VarContext::new(["w", "a", "b", "c", "d1", "d2", "d3"])?;
    let [w, a, b, c] = ["w", "a", "b", "c"].map(|s| var(&ctx, s));
    let coords = git_coords(&HPerpPoint::ichino_normal(&w, &a, &b, &c)?)?;
    let d = &coords.ichino_d;
    let diff = &d[2] - &d[1];
    let row_a = affine_row(case, &diff, &[1], &[vec![1]])?;
    let (k1, k0) = (row_a.coeffs[0].clone(), row_a.constant);
    let row_bc = affine_row(case, &d[1], &[2, 3], &[vec![1, 1]])?;
    let (r, s) = (row_bc.coeffs[0].clone(), row_bc.constant);
    // a = (Δ − k₀)/k₁ with Δ = D₃ − D₂; bc = (D₂ − s(a))/r
    let delta = &var(&ctx, "d3") - &var(&ctx, "d2");
    let a_num = &delta - &k0;
    // s is a polynomial in a (with w-coefficients); clear k₁^deg
    let s_split = s.split_by(&[1]);
    let deg = s_split.keys().map(|k| k[0]).max().unwrap_or(0);
    let mut s_cleared = MultiPoly::zero(&ctx);
    for (key, coeff) in &s_split {
        s_cleared = s_cleared + coeff * &a_num.pow(key[0]) * k1.pow(deg - key[0]);
    }
    let scale = &r * &k1.pow(deg);
    let numerator = &(&var(&ctx, "d2") * &k1.pow(deg)) - &s_cleared;
    // numerator = scale · bc; both must be even in w
    let wfam = Family::within(&ctx, &["w".to_string()])?;
    let to_d = |p: &MultiPoly| -> Result<MultiPoly> {
        let h = crate::symfun::halve_family(p, &wfam)
            .ok_or_else(|| Error::Consistency("Jacquet-Ichino elimination is not even in w".into()))?;
        let target = coord_context(case);
        let minus_d1 = -var(&target, "d1");
        let images: HashMap<String, MultiPoly> = [("w".to_string(), minus_d1)].into();
        Ok(h.substitute_partial(&target, &images)?)
    };
    let (poly, cn) = monic_with_unit(&to_d(&numerator)?);
    let (chart, cd) = monic_with_unit(&to_d(&scale)?);
    Ok(Elimination {
        poly,
        chart,
        unit: cn / cd,
        notes: vec![
            format!("a solved from d3 - d2 = {k1}*a + ({k0}); bc from d2 = {r}*bc + ({s})"),
            "the chart is w != 0, i.e. d1 != 0".into(),
        ],
    })
}

/// Ground truth together with its elimination certificate.
pub fn aside_elimination(case: CaseTag) -> Result<Elimination> {
    let target = coord_context(case);
    match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => Ok(Elimination {
            poly: MultiPoly::one(&target),
            chart: MultiPoly::one(&target),
            unit: Rational::one(),
            notes: vec!["the regular quotient is the GIT quotient; empty divisor".into()],
        }),
        CaseTag::FriedbergJacquet(n) => {
            // B = diag(w), C = I: the divisor is the vanishing of an eigenvalue of BC
            let names = indexed_names("w", n);
            let wctx = VarContext::new(names.iter().cloned())?;
            let ws: Vec<MultiPoly> = names.iter().map(|s| var(&wctx, s)).collect();
            let one = vec![MultiPoly::one(&wctx); n];
            let coords = git_coords(&HPerpPoint::friedberg_jacquet_normal(&ws, &one)?)?;
            let top = coords.a[n - 1].clone();
            let fam = Family::indexed(&wctx, "w", n)?;
            let (poly, c) = monic_with_unit(&expand_alpha(case, &top, &fam)?);
            Ok(Elimination {
                poly,
                chart: MultiPoly::one(&target),
                unit: c,
                notes: vec!["image of the locus where an eigenvalue of BC vanishes".into()],
            })
        }
        CaseTag::RankinSelberg(_) | CaseTag::GrossPrasadEven(_) => eliminate_uv(case),
        CaseTag::JacquetIchino => eliminate_ichino(),
    }
}

/// The A-side divisor polynomial in the coordinate ring, normalized to be
/// monic.
pub fn aside_groundtruth(case: CaseTag) -> Result<MultiPoly> {
    Ok(aside_elimination(case)?.poly)
}
