use exactpoly::{MultiPoly, PolyMatrix, QMatrix, VarContext};

use super::pfaffian::{preserves_form, split_form};
use super::CaseTag;
use crate::{Error, Result};

/// The defining data of a point of `𝔥⊥`, per case.
///
/// Every matrix and vector entry must live in one context (or prefixes of
/// it); [`build_hperp`] lifts everything to the joined context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HPerpParams {
    /// `(x, −x)` in `𝔤𝔩_n × 𝔤𝔩_n`.
    Diagonal { x: PolyMatrix },
    /// `x = [[0, B], [C, 0]]` with `B, C` square of size `n`.
    FriedbergJacquet { b: PolyMatrix, c: PolyMatrix },
    /// `x = [[0, B], [C, 0]]` with `B` of size `n×(n+1)`, `C` of size `(n+1)×n`.
    OddGL { b: PolyMatrix, c: PolyMatrix },
    /// `x₁ = −A`, `x₂ = [[A, u], [vᵗ, d]]`.
    RankinSelberg { a: PolyMatrix, u: Vec<MultiPoly>, v: Vec<MultiPoly>, d: MultiPoly },
    /// `x₁` given, `x₂` given, `x₃ = −x₁ − x₂`, all trace free.
    JacquetIchino { x1: PolyMatrix, x2: PolyMatrix },
    /// `x₁ = [[−A, −B], [−C, Aᵗ]]`, `x₂ = [[A, B, u], [C, −Aᵗ, v], [−vᵗ, −uᵗ, 0]]`
    /// with `B`, `C` skew; orthogonal for the split forms.
    GrossPrasadEven { a: PolyMatrix, b: PolyMatrix, c: PolyMatrix, u: Vec<MultiPoly>, v: Vec<MultiPoly> },
}

/// A point of `𝔥⊥` with its assembled matrices.
///
/// `components` holds `x₁, x₂` (and `x₃` for Jacquet–Ichino); the
/// single-matrix cases (Friedberg–Jacquet, odd GL) have one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPerpPoint {
    pub case: CaseTag,
    pub components: Vec<PolyMatrix>,
    pub params: HPerpParams,
}

fn violation(case: CaseTag, invariant: impl Into<String>) -> Error {
    Error::Constraint { case: case.to_string(), invariant: invariant.into() }
}

fn shape(case: CaseTag, what: &str, m: &PolyMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(violation(case, format!("{what} must be {rows}x{cols}, got {}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

fn is_skew(m: &PolyMatrix) -> bool {
    m.transpose().try_add(m).is_ok_and(|s| s.is_zero())
}

fn joined_context<'a>(mats: impl IntoIterator<Item = &'a PolyMatrix>, polys: impl IntoIterator<Item = &'a MultiPoly>) -> Result<VarContext> {
    let mut ctx = VarContext::empty();
    for m in mats {
        ctx = ctx.join(m.context())?;
    }
    for p in polys {
        ctx = ctx.join(p.context())?;
    }
    Ok(ctx)
}

fn column(ctx: &VarContext, v: &[MultiPoly]) -> PolyMatrix {
    PolyMatrix::from_fn(ctx, v.len(), 1, |i, _| &MultiPoly::zero(ctx) + &v[i])
}

fn lift(ctx: &VarContext, m: &PolyMatrix) -> PolyMatrix {
    PolyMatrix::from_fn(ctx, m.rows(), m.cols(), |i, j| &MultiPoly::zero(ctx) + m.get(i, j))
}

/// Assembles and validates a point of `𝔥⊥` for `case`.
pub fn build_hperp(case: CaseTag, params: HPerpParams) -> Result<HPerpPoint> {
    let n = case.n();
    let components = match (&case, &params) {
        (CaseTag::Diagonal(_), HPerpParams::Diagonal { x }) => {
            shape(case, "x", x, n, n)?;
            vec![x.clone(), x.neg()]
        }
        (CaseTag::FriedbergJacquet(_), HPerpParams::FriedbergJacquet { b, c })
        | (CaseTag::OddGL(_), HPerpParams::OddGL { b, c }) => {
            let m = if matches!(case, CaseTag::OddGL(_)) { n + 1 } else { n };
            shape(case, "B", b, n, m)?;
            shape(case, "C", c, m, n)?;
            let ctx = joined_context([b, c], [])?;
            let mut x = PolyMatrix::zeros(&ctx, n + m, n + m);
            x.set_block(0, n, &lift(&ctx, b));
            x.set_block(n, 0, &lift(&ctx, c));
            vec![x]
        }
        (CaseTag::RankinSelberg(_), HPerpParams::RankinSelberg { a, u, v, d }) => {
            shape(case, "A", a, n, n)?;
            if u.len() != n || v.len() != n {
                return Err(violation(case, format!("u and v must have length {n}")));
            }
            let ctx = joined_context([a], u.iter().chain(v.iter()).chain(std::iter::once(d)))?;
            let a = lift(&ctx, a);
            let mut x2 = PolyMatrix::zeros(&ctx, n + 1, n + 1);
            x2.set_block(0, 0, &a);
            x2.set_block(0, n, &column(&ctx, u));
            x2.set_block(n, 0, &column(&ctx, v).transpose());
            x2.set(n, n, d.clone());
            vec![a.neg(), x2]
        }
        (CaseTag::JacquetIchino, HPerpParams::JacquetIchino { x1, x2 }) => {
            shape(case, "x1", x1, 2, 2)?;
            shape(case, "x2", x2, 2, 2)?;
            for (name, x) in [("x1", x1), ("x2", x2)] {
                if !x.trace()?.is_zero() {
                    return Err(violation(case, format!("{name} must be trace free")));
                }
            }
            let ctx = joined_context([x1, x2], [])?;
            let (x1, x2) = (lift(&ctx, x1), lift(&ctx, x2));
            let x3 = x1.try_add(&x2)?.neg();
            vec![x1, x2, x3]
        }
        (CaseTag::GrossPrasadEven(_), HPerpParams::GrossPrasadEven { a, b, c, u, v }) => {
            for (name, m) in [("A", a), ("B", b), ("C", c)] {
                shape(case, name, m, n, n)?;
            }
            if !is_skew(b) || !is_skew(c) {
                return Err(violation(case, "B and C must be skew (B = −Bᵗ, C = −Cᵗ)"));
            }
            if u.len() != n || v.len() != n {
                return Err(violation(case, format!("u and v must have length {n}")));
            }
            let ctx = joined_context([a, b, c], u.iter().chain(v.iter()))?;
            let (a, b, c) = (lift(&ctx, a), lift(&ctx, b), lift(&ctx, c));
            let at = a.transpose();
            let mut x1 = PolyMatrix::zeros(&ctx, 2 * n, 2 * n);
            x1.set_block(0, 0, &a.neg());
            x1.set_block(0, n, &b.neg());
            x1.set_block(n, 0, &c.neg());
            x1.set_block(n, n, &at);
            let mut x2 = PolyMatrix::zeros(&ctx, 2 * n + 1, 2 * n + 1);
            x2.set_block(0, 0, &a);
            x2.set_block(0, n, &b);
            x2.set_block(n, 0, &c);
            x2.set_block(n, n, &at.neg());
            x2.set_block(0, 2 * n, &column(&ctx, u));
            x2.set_block(n, 2 * n, &column(&ctx, v));
            x2.set_block(2 * n, 0, &column(&ctx, v).transpose().neg());
            x2.set_block(2 * n, n, &column(&ctx, u).transpose().neg());
            if !preserves_form(&x1, &split_form(&ctx, 2 * n)) {
                return Err(violation(case, "x1 is not in so(2n) for the split form"));
            }
            if !preserves_form(&x2, &split_form(&ctx, 2 * n + 1)) {
                return Err(violation(case, "x2 is not in so(2n+1) for the split form"));
            }
            vec![x1, x2]
        }
        _ => return Err(violation(case, "parameters belong to a different case")),
    };
    Ok(HPerpPoint { case, components, params })
}

impl HPerpPoint {
    /// The Rankin–Selberg normal form `x₁ = diag(α)`, `x₂ = [[−diag(α), u], [vᵗ, d]]`.
    pub fn rankin_selberg_normal(alpha: &[MultiPoly], u: &[MultiPoly], v: &[MultiPoly], d: &MultiPoly) -> Result<Self> {
        let ctx = joined_context([], alpha.iter().chain(u).chain(v).chain(std::iter::once(d)))?;
        let a = PolyMatrix::diagonal(&ctx, &alpha.iter().map(|x| -x).collect::<Vec<_>>());
        build_hperp(
            CaseTag::RankinSelberg(alpha.len()),
            HPerpParams::RankinSelberg { a, u: u.to_vec(), v: v.to_vec(), d: d.clone() },
        )
    }

    /// The Gross–Prasad normal form `A = diag(α)`, `B = C = 0`.
    pub fn gross_prasad_normal(alpha: &[MultiPoly], u: &[MultiPoly], v: &[MultiPoly]) -> Result<Self> {
        let ctx = joined_context([], alpha.iter().chain(u).chain(v))?;
        let n = alpha.len();
        build_hperp(
            CaseTag::GrossPrasadEven(n),
            HPerpParams::GrossPrasadEven {
                a: PolyMatrix::diagonal(&ctx, alpha),
                b: PolyMatrix::zeros(&ctx, n, n),
                c: PolyMatrix::zeros(&ctx, n, n),
                u: u.to_vec(),
                v: v.to_vec(),
            },
        )
    }

    /// `x₁ = diag(w, −w)`, `x₂ = [[a, b], [c, −a]]`.
    pub fn ichino_normal(w: &MultiPoly, a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> Result<Self> {
        let ctx = joined_context([], [w, a, b, c])?;
        let x1 = PolyMatrix::diagonal(&ctx, &[w.clone(), -w]);
        let x2 = PolyMatrix::new(&ctx, 2, 2, vec![a.clone(), b.clone(), c.clone(), -a])?;
        build_hperp(CaseTag::JacquetIchino, HPerpParams::JacquetIchino { x1, x2 })
    }

    /// `B = diag(u)`, `C = diag(v)`.
    pub fn friedberg_jacquet_normal(u: &[MultiPoly], v: &[MultiPoly]) -> Result<Self> {
        let ctx = joined_context([], u.iter().chain(v))?;
        build_hperp(
            CaseTag::FriedbergJacquet(u.len()),
            HPerpParams::FriedbergJacquet { b: PolyMatrix::diagonal(&ctx, u), c: PolyMatrix::diagonal(&ctx, v) },
        )
    }

    pub fn context(&self) -> &VarContext {
        self.components[0].context()
    }

    /// The components as rational matrices.
    pub fn rational_components(&self) -> Result<Vec<QMatrix>> {
        self.components.iter().map(|m| m.to_rational().ok_or(Error::SymbolicInput)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::rat;

    fn ctx() -> VarContext {
        VarContext::new(["w", "a", "b", "c", "u", "v", "d"]).unwrap()
    }

    fn v(s: &str) -> MultiPoly {
        MultiPoly::parse(&ctx(), s).unwrap()
    }

    #[test]
    fn ichino_third_component() {
        let pt = HPerpPoint::ichino_normal(&v("w"), &v("a"), &v("b"), &v("c")).unwrap();
        assert_eq!(pt.components[2].to_string(), "[[-w - a, -b], [-c, w + a]]");
        let sum = pt.components[0].try_add(&pt.components[1]).unwrap().try_add(&pt.components[2]).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn rankin_selberg_blocks() {
        let pt = HPerpPoint::rankin_selberg_normal(&[v("a")], &[v("u")], &[v("v")], &v("d")).unwrap();
        assert_eq!(pt.components[0].to_string(), "[[a]]");
        assert_eq!(pt.components[1].to_string(), "[[-a, u], [v, d]]");
    }

    #[test]
    fn gross_prasad_constraints() {
        let c = ctx();
        let pt = HPerpPoint::gross_prasad_normal(&[v("a")], &[v("u")], &[v("v")]).unwrap();
        assert_eq!(pt.components[1].to_string(), "[[a, 0, u], [0, -a, v], [-v, -u, 0]]");
        let bad = HPerpParams::GrossPrasadEven {
            a: PolyMatrix::zeros(&c, 2, 2),
            b: PolyMatrix::identity(&c, 2),
            c: PolyMatrix::zeros(&c, 2, 2),
            u: vec![v("u"), v("0")],
            v: vec![v("v"), v("0")],
        };
        let err = build_hperp(CaseTag::GrossPrasadEven(2), bad).unwrap_err();
        assert!(err.to_string().contains("skew"));
    }

    #[test]
    fn wrong_case_or_shape() {
        let c = ctx();
        let x = PolyMatrix::identity(&c, 2);
        let err = build_hperp(CaseTag::JacquetIchino, HPerpParams::Diagonal { x: x.clone() }).unwrap_err();
        assert!(err.to_string().contains("different case"));
        let err = build_hperp(CaseTag::JacquetIchino, HPerpParams::JacquetIchino { x1: x.clone(), x2: x }).unwrap_err();
        assert!(err.to_string().contains("trace free"));
    }

    #[test]
    fn rational_components_reject_symbols() {
        let pt = HPerpPoint::ichino_normal(&v("w"), &v("1"), &v("0"), &v("2")).unwrap();
        assert_eq!(pt.rational_components(), Err(Error::SymbolicInput));
        let q = |n| MultiPoly::constant(&ctx(), rat(n));
        let pt = HPerpPoint::ichino_normal(&q(1), &q(2), &q(3), &q(4)).unwrap();
        assert_eq!(pt.rational_components().unwrap()[2].to_string(), "[[-3, -3], [-4, 3]]");
    }
}
