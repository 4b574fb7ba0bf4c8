//! Partitions, elementary and monomial symmetric functions, conversion to
//! elementary coordinates, and generalized Newton identities.
//!
//! A [`Family`] names a block of variables (say `alpha1..alpha3`) inside a
//! [`VarContext`]; symmetric functions are always taken with respect to one
//! family, and the other variables of the context ride along as
//! coefficients.

mod expand;
mod newton;
mod partition;

use std::collections::BTreeSet;

use exactpoly::{Monomial, MultiPoly, Rational, VarContext};
use num_traits::One;

use crate::{Error, Result};

pub use expand::{elem_expand, halve_family};
pub use newton::{
    aug_multiplicity, newton_corollary, newton_oracle, newton_report, newton_residual, newton_sum, NewtonCheck,
    NewtonReport,
};
pub use partition::{complement_partition, mu_insert, partitions_in_rect, Partition};

/// A named family of variables inside a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    ctx: VarContext,
    indices: Vec<usize>,
}

impl Family {
    /// A fresh context `prefix1, …, prefixN` holding only this family.
    pub fn new(prefix: &str, n: usize) -> Self {
        let ctx = VarContext::new(indexed_names(prefix, n)).expect("indexed names are distinct");
        Self { indices: (0..n).collect(), ctx }
    }

    /// The family formed by `names` inside an existing context.
    pub fn within(ctx: &VarContext, names: &[String]) -> Result<Self> {
        let indices = names
            .iter()
            .map(|n| ctx.index_of(n).ok_or_else(|| exactpoly::PolyError::UnknownVariable(n.clone()).into()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { ctx: ctx.clone(), indices })
    }

    /// Convenience for `prefix1..prefixN` inside `ctx`.
    pub fn indexed(ctx: &VarContext, prefix: &str, n: usize) -> Result<Self> {
        Self::within(ctx, &indexed_names(prefix, n))
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.indices.iter().map(|&i| self.ctx.names()[i].clone()).collect()
    }

    pub fn var(&self, j: usize) -> MultiPoly {
        MultiPoly::var_at(&self.ctx, self.indices[j])
    }

    /// Whether `p` is unchanged by every adjacent transposition of the family.
    pub fn is_symmetric(&self, p: &MultiPoly) -> bool {
        self.indices.windows(2).all(|w| p.swap_vars(w[0], w[1]) == *p)
    }
}

/// `prefix1, …, prefixN`.
pub fn indexed_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// A polynomial certified symmetric in one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPolyHandle {
    family: Family,
    poly: MultiPoly,
}

impl SymPolyHandle {
    /// Checks symmetry by adjacent transpositions.
    pub fn new(family: &Family, poly: MultiPoly) -> Result<Self> {
        let poly = poly.reindex(family.context())?;
        if !family.is_symmetric(&poly) {
            return Err(Error::NotSymmetric { family: family.names() });
        }
        Ok(Self { family: family.clone(), poly })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }
}

/// `e_k` of the family; `e_0 = 1` and `e_k = 0` for `k > n`.
pub fn elementary_sym(k: usize, family: &Family) -> SymPolyHandle {
    let poly = elementary_over(k, family, None);
    SymPolyHandle { family: family.clone(), poly }
}

/// `e_k` of the family with the variable at 1-based position `omit` removed.
pub fn elementary_sym_hat(k: usize, family: &Family, omit: usize) -> Result<MultiPoly> {
    if omit == 0 || omit > family.len() {
        return Err(Error::Unsupported(format!("omitted index {omit} outside 1..={}", family.len())));
    }
    Ok(elementary_over(k, family, Some(omit - 1)))
}

fn elementary_over(k: usize, family: &Family, omit: Option<usize>) -> MultiPoly {
    let ctx = family.context();
    let vars: Vec<usize> = (0..family.len()).filter(|&j| Some(j) != omit).map(|j| family.indices[j]).collect();
    // coefficient extraction from Π (1 + t·x_j), keeping only degree k
    let mut levels: Vec<MultiPoly> = vec![MultiPoly::one(ctx)];
    for &v in &vars {
        let x = MultiPoly::var_at(ctx, v);
        let mut next = levels.clone();
        next.push(MultiPoly::zero(ctx));
        for d in 1..next.len() {
            next[d] = &levels.get(d).cloned().unwrap_or_else(|| MultiPoly::zero(ctx)) + &(&levels[d - 1] * &x);
        }
        levels = next;
    }
    levels.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(ctx))
}

/// The monomial symmetric function `m_λ`: every distinct rearrangement of
/// the exponent tuple `λ` (padded to the family size) with coefficient 1.
pub fn monomial_sym(lambda: &Partition, family: &Family) -> Result<SymPolyHandle> {
    let n = family.len();
    if lambda.length() > n {
        return Err(Error::PartitionTooLong { partition: lambda.to_string(), max: n });
    }
    let ctx = family.context();
    let exps = lambda.padded(n);
    let terms = distinct_permutations(&exps).into_iter().map(|perm| {
        let mut m = Monomial::one(ctx.len());
        let mut e: Vec<u32> = m.exponents().to_vec();
        for (j, p) in perm.into_iter().enumerate() {
            e[family.indices[j]] = p;
        }
        m = Monomial::from_exponents(&e);
        (m, Rational::one())
    });
    Ok(SymPolyHandle { family: family.clone(), poly: MultiPoly::from_terms(ctx, terms) })
}

/// All distinct orderings of a multiset.
pub(crate) fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut set = BTreeSet::new();
    fn rec(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if rest.is_empty() {
            out.insert(cur.clone());
            return;
        }
        let mut seen = BTreeSet::new();
        for i in 0..rest.len() {
            if !seen.insert(rest[i]) {
                continue;
            }
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    rec(&mut items.to_vec(), &mut Vec::new(), &mut set);
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize) -> Family {
        Family::new("alpha", n)
    }

    fn p(f: &Family, s: &str) -> MultiPoly {
        MultiPoly::parse(f.context(), s).unwrap()
    }

    #[test]
    fn elementary_functions() {
        let f2 = fam(2);
        let f3 = fam(3);
        assert!(elementary_sym(0, &f3).poly().is_one());
        assert_eq!(*elementary_sym(2, &f2).poly(), p(&f2, "alpha1*alpha2"));
        assert_eq!(*elementary_sym(1, &f3).poly(), p(&f3, "alpha1 + alpha2 + alpha3"));
        assert!(elementary_sym(4, &f3).poly().is_zero());
        assert_eq!(elementary_sym_hat(1, &f3, 1).unwrap(), p(&f3, "alpha2 + alpha3"));
        assert!(elementary_sym_hat(0, &f3, 2).unwrap().is_one());
        assert!(elementary_sym_hat(0, &f3, 4).is_err());
    }

    #[test]
    fn hat_expansion_identity() {
        for n in 1..=4 {
            let f = fam(n);
            for k in 1..=n {
                for j in 1..=n {
                    let lhs = elementary_sym(k, &f).into_poly();
                    let rhs = &elementary_sym_hat(k, &f, j).unwrap()
                        + &(&f.var(j - 1) * &elementary_sym_hat(k - 1, &f, j).unwrap());
                    assert_eq!(lhs, rhs, "n={n} k={k} j={j}");
                }
            }
        }
    }

    #[test]
    fn monomial_functions() {
        let f2 = fam(2);
        let m = |parts: &[u32]| monomial_sym(&Partition::new(parts.to_vec()).unwrap(), &f2).unwrap().into_poly();
        assert_eq!(m(&[1]), p(&f2, "alpha1 + alpha2"));
        assert_eq!(m(&[2, 1]), p(&f2, "alpha1^2*alpha2 + alpha1*alpha2^2"));
        assert_eq!(m(&[2, 2]), p(&f2, "alpha1^2*alpha2^2"));
        assert!(m(&[]).is_one());
        assert!(monomial_sym(&Partition::new(vec![1, 1, 1]).unwrap(), &f2).is_err());
    }

    #[test]
    fn symmetric_handle_rejects_asymmetric_input() {
        let f = fam(2);
        assert!(SymPolyHandle::new(&f, p(&f, "alpha1")).is_err());
        assert!(SymPolyHandle::new(&f, p(&f, "alpha1 + alpha2")).is_ok());
    }
}
