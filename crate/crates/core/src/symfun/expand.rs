use std::collections::{BTreeMap, HashMap};

use exactpoly::{Monomial, MultiPoly, Rational, VarContext};

use super::{elementary_sym, Family, SymPolyHandle};
use crate::{Error, Result};

fn is_dominant(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Rewrites a symmetric polynomial in terms of elementary symmetric functions.
///
/// The result lives in a new context made of the non-family variables (in
/// their original order) followed by `e_names`, where `e_names[k-1]` stands
/// for `e_k` of the family. The input is checked for symmetry first.
///
/// Classical leading-term reduction: if `λ` is the largest family exponent
/// with coefficient `C`, subtract `C·e₁^{λ₁−λ₂}⋯e_n^{λ_n}`, whose leading
/// term is exactly `C·α^λ`. Only exponent vectors with weakly decreasing
/// entries are tracked, which is enough because a symmetric polynomial is
/// determined by them.
pub fn elem_expand(handle: &SymPolyHandle, e_names: &[String]) -> Result<MultiPoly> {
    let family = handle.family();
    let n = family.len();
    if e_names.len() != n {
        return Err(Error::Unsupported(format!("{} names supplied for {n} elementary functions", e_names.len())));
    }
    if !family.is_symmetric(handle.poly()) {
        return Err(Error::NotSymmetric { family: family.names() });
    }
    let ctx = family.context();
    let others: Vec<String> = (0..ctx.len())
        .filter(|i| !family.indices().contains(i))
        .map(|i| ctx.names()[i].clone())
        .collect();
    let out_ctx = VarContext::new(others.iter().cloned().chain(e_names.iter().cloned()))?;
    let n_others = others.len();

    let mut pending: BTreeMap<Monomial, MultiPoly> = handle
        .poly()
        .split_by(family.indices())
        .into_iter()
        .filter(|(k, _)| is_dominant(k))
        .map(|(k, c)| (Monomial::from_exponents(&k), c))
        .collect();

    let fam_only = Family::new("__s", n);
    let e_polys: Vec<MultiPoly> = (1..=n).map(|k| elementary_sym(k, &fam_only).into_poly()).collect();
    let mut cache: HashMap<Vec<u32>, Vec<(Monomial, Rational)>> = HashMap::new();

    let mut result = MultiPoly::zero(&out_ctx);
    while let Some((lambda, coeff)) = pending.pop_last() {
        let l = lambda.exponents();
        let gamma: Vec<u32> = (0..n).map(|k| l[k] - l.get(k + 1).copied().unwrap_or(0)).collect();
        let expansion = cache.entry(gamma.clone()).or_insert_with(|| {
            let mut prod = MultiPoly::one(fam_only.context());
            for (k, &g) in gamma.iter().enumerate() {
                if g > 0 {
                    prod = prod * e_polys[k].pow(g);
                }
            }
            prod.terms().filter(|(m, _)| is_dominant(m.exponents())).map(|(m, c)| (m.clone(), c.clone())).collect()
        });
        for (m, c) in expansion.iter() {
            if *m == lambda {
                continue;
            }
            let entry = pending.entry(m.clone()).or_insert_with(|| MultiPoly::zero(ctx));
            *entry = &*entry - &coeff.scale(c);
            if entry.is_zero() {
                pending.remove(m);
            }
        }
        let mut e_mono = vec![0u32; out_ctx.len()];
        e_mono[n_others..].copy_from_slice(&gamma);
        let lifted = coeff.reindex(&out_ctx)?;
        result = result + lifted.mul_term(&Monomial::from_exponents(&e_mono), &Rational::from_integer(1.into()));
    }
    Ok(result)
}

/// Divides every exponent of the family's variables by two, so a polynomial
/// in `α²` becomes a polynomial in `γ = α²` written with the same variable
/// names. `None` if some family exponent is odd.
pub fn halve_family(p: &MultiPoly, family: &Family) -> Option<MultiPoly> {
    let p = p.reindex(family.context()).ok()?;
    let idx = family.indices();
    p.try_map_monomials(family.context(), |m| {
        let mut e = m.exponents().to_vec();
        for &i in idx {
            if e[i] % 2 != 0 {
                return None;
            }
            e[i] /= 2;
        }
        Some(Monomial::from_exponents(&e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{indexed_names, monomial_sym, Partition};

    fn expand(f: &Family, s: &str) -> String {
        let h = SymPolyHandle::new(f, MultiPoly::parse(f.context(), s).unwrap()).unwrap();
        elem_expand(&h, &indexed_names("e", f.len())).unwrap().to_string()
    }

    #[test]
    fn classical_expansions() {
        let f2 = Family::new("alpha", 2);
        assert_eq!(expand(&f2, "alpha1 + alpha2"), "e1");
        assert_eq!(expand(&f2, "alpha1^2 + alpha2^2"), "e1^2 - 2*e2");
        let f3 = Family::new("alpha", 3);
        let m21 = monomial_sym(&Partition::new(vec![2, 1]).unwrap(), &f3).unwrap();
        assert_eq!(elem_expand(&m21, &indexed_names("e", 3)).unwrap().to_string(), "e1*e2 - 3*e3");
    }

    #[test]
    fn coefficients_in_other_variables() {
        let ctx = VarContext::new(["t", "alpha1", "alpha2", "c"]).unwrap();
        let f = Family::indexed(&ctx, "alpha", 2).unwrap();
        let p = MultiPoly::parse(&ctx, "t*alpha1 + t*alpha2 + c*alpha1*alpha2 + 3").unwrap();
        let h = SymPolyHandle::new(&f, p).unwrap();
        let q = elem_expand(&h, &indexed_names("a", 2)).unwrap();
        assert_eq!(q.context().names(), ["t", "c", "a1", "a2"]);
        assert_eq!(q.to_string(), "t*a1 + c*a2 + 3");
    }

    #[test]
    fn asymmetric_input_rejected() {
        let f = Family::new("alpha", 2);
        let h = SymPolyHandle::new(&f, MultiPoly::parse(f.context(), "alpha1 + alpha2").unwrap()).unwrap();
        let bad = SymPolyHandle { family: f.clone(), poly: MultiPoly::parse(f.context(), "alpha1").unwrap() };
        assert!(elem_expand(&bad, &indexed_names("e", 2)).is_err());
        assert!(elem_expand(&h, &indexed_names("e", 1)).is_err());
    }

    #[test]
    fn halving() {
        let f = Family::new("alpha", 2);
        let p = MultiPoly::parse(f.context(), "alpha1^4*alpha2^2 + 1").unwrap();
        assert_eq!(halve_family(&p, &f).unwrap().to_string(), "alpha1^2*alpha2 + 1");
        assert!(halve_family(&MultiPoly::parse(f.context(), "alpha1").unwrap(), &f).is_none());
    }
}
