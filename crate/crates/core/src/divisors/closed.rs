//! Closed-form expressions for both divisors as sums over partitions, with
//! the variants needed to reconcile them with the derived ground truth.
//!
//! Every builder takes a [`Variant`] so that the literal display and its
//! corrected forms come from one code path. The first variant of each list
//! is the literal one.

use std::collections::HashMap;

use exactpoly::{sign_pow, MultiPoly, Rational};
use serde::Serialize;

use super::coords::{coord_context, expand_alpha};
use crate::liealg::CaseTag;
use crate::symfun::{complement_partition, monomial_sym, partitions_in_rect, Family, Partition};
use crate::Result;

/// One way of reading a closed-form display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Variant {
    /// Short identifier, e.g. `index=flipped,sign=shifted,cross=sum`.
    pub name: String,
    /// Human-readable descriptions of each departure from the literal form.
    pub corrections: Vec<String>,
}

impl Variant {
    pub fn is_literal(&self) -> bool {
        self.corrections.is_empty()
    }
}

/// A closed form evaluated under one variant.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub variant: Variant,
    pub poly: MultiPoly,
}

/// Caches `m_λ(α)` (or `m_λ(α)` with doubled parts) rewritten in the
/// coordinates.
struct MonomialCache {
    case: CaseTag,
    family: Family,
    memo: HashMap<Vec<u32>, MultiPoly>,
}

impl MonomialCache {
    fn new(case: CaseTag) -> Self {
        Self { case, family: Family::new("alpha", case.n()), memo: HashMap::new() }
    }

    /// `m_λ(α)` in the coordinate ring.
    fn get(&mut self, lambda: &Partition) -> Result<MultiPoly> {
        let key = lambda.nonzero_parts().to_vec();
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let m = monomial_sym(lambda, &self.family)?;
        let p = expand_alpha(self.case, m.poly(), &self.family)?;
        self.memo.insert(key, p.clone());
        Ok(p)
    }
}

fn scaled(lambda: &Partition, k: u32) -> Partition {
    Partition::from_multiset(lambda.parts().iter().map(|p| p * k).collect())
}

/// `y_j` for `1 ≤ j ≤ max`, `1` at `j = 0`, `0` otherwise.
fn coord(ctx: &exactpoly::VarContext, prefix: &str, j: i64, max: i64) -> MultiPoly {
    match j {
        0 => MultiPoly::one(ctx),
        j if j < 0 || j > max => MultiPoly::zero(ctx),
        j => MultiPoly::var(ctx, &format!("{prefix}{j}")).expect("coordinate name"),
    }
}

/// Applies `y_i ↦ (−1)^i y_i` to the named prefixes.
fn sign_dictionary(p: &MultiPoly, prefixes: &[&str]) -> Result<MultiPoly> {
    let ctx = p.context();
    let images: HashMap<String, MultiPoly> = ctx
        .names()
        .iter()
        .filter_map(|name| {
            let prefix = prefixes.iter().find(|pre| name.starts_with(**pre))?;
            let i: i64 = name[prefix.len()..].parse().ok()?;
            Some((name.clone(), MultiPoly::var(ctx, name).ok()?.scale(&sign_pow(i))))
        })
        .collect();
    Ok(p.substitute_partial(ctx, &images)?)
}

/// The sign dictionaries tried for the orthogonal case, literal first.
const GP_DICTIONARIES: [(&str, &[&str]); 3] = [("none", &[]), ("b", &["b"]), ("a,b", &["a", "b"])];

/// Axes for the Rankin–Selberg A-side display
/// `Σ_{λ⊂n×(n−1)} m_λ(α) Π_k (b_j + (−1)^j (a_j − X·a_{j−1}))` with `j = λ_k`
/// and `X = b₁ − a₁` as printed.
pub fn rankin_selberg_aside_variants(n: usize) -> Result<Vec<ClosedForm>> {
    let case = CaseTag::RankinSelberg(n);
    let ctx = coord_context(case);
    let mut cache = MonomialCache::new(case);
    let rect = partitions_in_rect(n, n.saturating_sub(1) as u32);
    let (a1, b1) = (coord(&ctx, "a", 1, n as i64), coord(&ctx, "b", 1, n as i64 + 1));
    let mut out = Vec::new();
    for flipped in [false, true] {
        for shifted in [false, true] {
            for sum in [false, true] {
                let cross = if sum { &a1 + &b1 } else { &b1 - &a1 };
                let mut poly = MultiPoly::zero(&ctx);
                for lambda in &rect {
                    let mut prod = cache.get(lambda)?;
                    for &l in &lambda.padded(n) {
                        let j = if flipped { n as i64 + 1 - l as i64 } else { l as i64 };
                        let sign = sign_pow(if shifted { j - 1 } else { j });
                        let inner = &coord(&ctx, "a", j, n as i64) - &(&cross * &coord(&ctx, "a", j - 1, n as i64));
                        prod = &prod * &(&coord(&ctx, "b", j, n as i64 + 1) + &inner.scale(&sign));
                    }
                    poly = poly + prod;
                }
                let mut corrections = Vec::new();
                if flipped {
                    corrections.push("index: lambda_k -> n+1-lambda_k".to_string());
                }
                if shifted {
                    corrections.push("sign: (-1)^j -> (-1)^(j-1)".to_string());
                }
                if sum {
                    corrections.push("cross term: (b1 - a1) -> (a1 + b1)".to_string());
                }
                let name = format!(
                    "index={},sign={},cross={}",
                    if flipped { "flipped" } else { "literal" },
                    if shifted { "shifted" } else { "literal" },
                    if sum { "sum" } else { "difference" }
                );
                out.push(ClosedForm { variant: Variant { name, corrections }, poly });
            }
        }
    }
    Ok(out)
}

/// `Σ_{λ⊂n×(n+1)} m_{n+1−λ}(α) b_λ`, with `n+1−λ` the complement of `λ` in
/// the rectangle and `b_λ = Π b_{λ_k}`, `b₀ = 1`.
pub fn rankin_selberg_bside_variants(n: usize) -> Result<Vec<ClosedForm>> {
    let case = CaseTag::RankinSelberg(n);
    let ctx = coord_context(case);
    let mut cache = MonomialCache::new(case);
    let mut poly = MultiPoly::zero(&ctx);
    for lambda in partitions_in_rect(n, n as u32 + 1) {
        let mu = complement_partition(&lambda, n, n as u32 + 1)?;
        let mut term = cache.get(&mu)?;
        for &l in lambda.nonzero_parts() {
            term = &term * &coord(&ctx, "b", l as i64, n as i64 + 1);
        }
        poly = poly + term;
    }
    Ok(vec![ClosedForm { variant: Variant { name: "literal".into(), corrections: vec![] }, poly }])
}

/// `Σ_{λ⊂n×(n−1)} m_{2λ}(α) Π_k (b_{n−λ_k} − a_{n−λ_k})`, also over the
/// `n×n` rectangle, each under the sign dictionaries.
pub fn gross_prasad_aside_variants(n: usize) -> Result<Vec<ClosedForm>> {
    let case = CaseTag::GrossPrasadEven(n);
    let ctx = coord_context(case);
    let mut cache = MonomialCache::new(case);
    let mut out = Vec::new();
    for (cols, range_name) in [(n.saturating_sub(1), "n x (n-1)"), (n, "n x n")] {
        let mut poly = MultiPoly::zero(&ctx);
        for lambda in partitions_in_rect(n, cols as u32) {
            let mut term = cache.get(&scaled(&lambda, 2))?;
            for &l in &lambda.padded(n) {
                let j = n as i64 - l as i64;
                term = &term * &(&coord(&ctx, "b", j, n as i64) - &coord(&ctx, "a", j, n as i64));
            }
            poly = poly + term;
        }
        for (dict, prefixes) in GP_DICTIONARIES {
            let mut corrections = Vec::new();
            if cols == n {
                corrections.push("partition range: n x (n-1) -> n x n".to_string());
            }
            if !prefixes.is_empty() {
                corrections.push(format!("sign dictionary: y_i -> (-1)^i y_i for y in {{{dict}}}"));
            }
            out.push(ClosedForm {
                variant: Variant { name: format!("range={range_name},signs={dict}"), corrections },
                poly: sign_dictionary(&poly, prefixes)?,
            });
        }
    }
    Ok(out)
}

/// `Σ_{λ⊂n×n} m_{2(n−λ)}(α²) b_λ`, and the same with argument `n−λ`, under
/// the sign dictionaries.
pub fn gross_prasad_bside_variants(n: usize) -> Result<Vec<ClosedForm>> {
    let case = CaseTag::GrossPrasadEven(n);
    let ctx = coord_context(case);
    let mut cache = MonomialCache::new(case);
    let mut out = Vec::new();
    for doubled in [true, false] {
        let mut poly = MultiPoly::zero(&ctx);
        for lambda in partitions_in_rect(n, n as u32) {
            let mu = complement_partition(&lambda, n, n as u32)?;
            // m_ν(α²) = m_{2ν}(α)
            let nu = scaled(&mu, if doubled { 4 } else { 2 });
            let mut term = cache.get(&nu)?;
            for &l in lambda.nonzero_parts() {
                term = &term * &coord(&ctx, "b", l as i64, n as i64);
            }
            poly = poly + term;
        }
        for (dict, prefixes) in GP_DICTIONARIES {
            let mut corrections = Vec::new();
            if !doubled {
                corrections.push("monomial argument: m_{2(n-lambda)}(alpha^2) -> m_{n-lambda}(alpha^2)".to_string());
            }
            if !prefixes.is_empty() {
                corrections.push(format!("sign dictionary: y_i -> (-1)^i y_i for y in {{{dict}}}"));
            }
            out.push(ClosedForm {
                variant: Variant {
                    name: format!("argument={},signs={dict}", if doubled { "2(n-lambda)" } else { "n-lambda" }),
                    corrections,
                },
                poly: sign_dictionary(&poly, prefixes)?,
            });
        }
    }
    Ok(out)
}

/// `d₁² + d₂² + d₃² − 2(d₁d₂ + d₁d₃ + d₂d₃)`.
pub fn ichino_closed_form() -> MultiPoly {
    let ctx = coord_context(CaseTag::JacquetIchino);
    MultiPoly::parse(&ctx, "d1^2 + d2^2 + d3^2 - 2*d1*d2 - 2*d1*d3 - 2*d2*d3").expect("valid literal")
}

/// The A-side closed form as printed (the literal variant), where one exists.
pub fn aside_closed_form(case: CaseTag) -> Result<Option<MultiPoly>> {
    Ok(aside_variants(case)?.into_iter().next().map(|c| c.poly))
}

/// The B-side closed form as printed, where one exists.
pub fn bside_closed_form(case: CaseTag) -> Result<Option<MultiPoly>> {
    Ok(bside_variants(case)?.into_iter().next().map(|c| c.poly))
}

pub fn aside_variants(case: CaseTag) -> Result<Vec<ClosedForm>> {
    Ok(match case {
        CaseTag::RankinSelberg(n) => rankin_selberg_aside_variants(n)?,
        CaseTag::GrossPrasadEven(n) => gross_prasad_aside_variants(n)?,
        CaseTag::JacquetIchino => {
            vec![ClosedForm { variant: Variant { name: "literal".into(), corrections: vec![] }, poly: ichino_closed_form() }]
        }
        _ => vec![],
    })
}

pub fn bside_variants(case: CaseTag) -> Result<Vec<ClosedForm>> {
    Ok(match case {
        CaseTag::RankinSelberg(n) => rankin_selberg_bside_variants(n)?,
        CaseTag::GrossPrasadEven(n) => gross_prasad_bside_variants(n)?,
        _ => vec![],
    })
}

/// The first variant (in list order) that equals `target` up to a nonzero
/// rational, with that rational: `target = unit · variant`.
pub fn first_match(variants: &[ClosedForm], target: &MultiPoly) -> Option<(ClosedForm, Rational)> {
    variants.iter().find_map(|v| target.unit_multiple(&v.poly).filter(|u| !num_traits::Zero::is_zero(u)).map(|u| (v.clone(), u)))
}
