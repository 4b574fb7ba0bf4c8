use exactpoly::{MultiPoly, PolyMatrix};
use serde::Serialize;

use super::charpoly::{charpoly_coeffs, even_wedge_traces};
use super::hperp::HPerpPoint;
use super::pfaffian::{skew_pfaffian, SkewForm};
use super::CaseTag;
use crate::Result;

/// The invariant-theoretic coordinates of a point of `𝔥⊥`.
///
/// - diagonal: `a_i = tr ∧^i x₁`;
/// - Friedberg–Jacquet and odd GL: `a_i = tr ∧^i (BC)` (named `c_i`);
/// - Rankin–Selberg: `a_i = tr ∧^i x₁`, `b_j = tr ∧^j x₂` for `j ≤ n+1`;
/// - Gross–Prasad: `a_i = tr ∧^{2i} x₁`, `b_i = tr ∧^{2i} x₂`, and the
///   Pfaffian `p_n = Pf(J x₁)` with `p_n² = (−1)^n a_n`;
/// - Jacquet–Ichino: `d_j = det x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GitCoords {
    pub case: CaseTag,
    #[serde(serialize_with = "crate::report::ser_polys")]
    pub a: Vec<MultiPoly>,
    #[serde(serialize_with = "crate::report::ser_polys")]
    pub b: Vec<MultiPoly>,
    #[serde(serialize_with = "crate::report::ser_opt_poly")]
    pub pfaffian_pn: Option<MultiPoly>,
    #[serde(serialize_with = "crate::report::ser_polys")]
    pub ichino_d: Vec<MultiPoly>,
}

impl GitCoords {
    /// The coordinates in the order of [`CaseTag::coord_names`].
    pub fn values(&self) -> Vec<MultiPoly> {
        match self.case {
            CaseTag::JacquetIchino => self.ichino_d.clone(),
            _ => self.a.iter().chain(&self.b).cloned().collect(),
        }
    }
}

/// The off-diagonal blocks `B`, `C` of `x = [[0, B], [C, 0]]`.
pub fn off_diagonal_blocks(case: CaseTag, x: &PolyMatrix) -> (PolyMatrix, PolyMatrix) {
    let n = case.n();
    let m = x.rows() - n;
    (x.block(0, n, n, m), x.block(n, 0, m, n))
}

pub fn git_coords(point: &HPerpPoint) -> Result<GitCoords> {
    let case = point.case;
    let x = &point.components;
    let mut out = GitCoords { case, a: Vec::new(), b: Vec::new(), pfaffian_pn: None, ichino_d: Vec::new() };
    match case {
        CaseTag::Diagonal(_) => out.a = charpoly_coeffs(&x[0])?,
        CaseTag::FriedbergJacquet(_) | CaseTag::OddGL(_) => {
            let (b, c) = off_diagonal_blocks(case, &x[0]);
            out.a = charpoly_coeffs(&b.try_mul(&c)?)?;
        }
        CaseTag::RankinSelberg(_) => {
            out.a = charpoly_coeffs(&x[0])?;
            out.b = charpoly_coeffs(&x[1])?;
        }
        CaseTag::GrossPrasadEven(n) => {
            out.a = even_wedge_traces(&x[0], n)?;
            out.b = even_wedge_traces(&x[1], n)?;
            out.pfaffian_pn = Some(skew_pfaffian(&x[0], SkewForm::Split(n))?);
        }
        CaseTag::JacquetIchino => {
            out.ichino_d = x.iter().map(|m| m.det()).collect::<Result<_, _>>()?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::VarContext;

    fn ctx() -> VarContext {
        VarContext::new(["a1", "a2", "u1", "u2", "v1", "v2", "d", "w"]).unwrap()
    }

    fn v(s: &str) -> MultiPoly {
        MultiPoly::parse(&ctx(), s).unwrap()
    }

    #[test]
    fn rankin_selberg_n1() {
        let pt = HPerpPoint::rankin_selberg_normal(&[v("a1")], &[v("u1")], &[v("v1")], &v("d")).unwrap();
        let g = git_coords(&pt).unwrap();
        let got: Vec<String> = g.values().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["a1", "-a1 + d", "-a1*d - u1*v1"]);
    }

    #[test]
    fn gross_prasad_pfaffian_relation() {
        let pt = HPerpPoint::gross_prasad_normal(&[v("a1"), v("a2")], &[v("u1"), v("u2")], &[v("v1"), v("v2")]).unwrap();
        let g = git_coords(&pt).unwrap();
        assert_eq!(g.a[0].to_string(), "-a1^2 - a2^2");
        assert_eq!(g.a[1].to_string(), "a1^2*a2^2");
        let p = g.pfaffian_pn.clone().unwrap();
        assert_eq!(&p * &p, g.a[1]);
        // the odd block picks up the products u_i v_i
        assert_eq!(g.b[0].to_string(), "-a1^2 - a2^2 + 2*u1*v1 + 2*u2*v2");
    }

    #[test]
    fn ichino_and_friedberg_jacquet() {
        let pt = HPerpPoint::ichino_normal(&v("w"), &v("a1"), &v("u1"), &v("v1")).unwrap();
        let d: Vec<String> = git_coords(&pt).unwrap().values().iter().map(|p| p.to_string()).collect();
        assert_eq!(d, ["-w^2", "-a1^2 - u1*v1", "-a1^2 - 2*a1*w - u1*v1 - w^2"]);
        let pt = HPerpPoint::friedberg_jacquet_normal(&[v("u1"), v("u2")], &[v("v1"), v("v2")]).unwrap();
        let c: Vec<String> = git_coords(&pt).unwrap().values().iter().map(|p| p.to_string()).collect();
        assert_eq!(c, ["u1*v1 + u2*v2", "u1*u2*v1*v2"]);
    }
}
