//! Hand-written matrices that appear in regularity and orbit arguments.

use exactpoly::{MultiPoly, PolyMatrix, VarContext};
use serde::Serialize;

use super::charpoly::even_wedge_traces;
use crate::Result;

/// The skew tridiagonal matrix with superdiagonal `γ_{m−1}, …, γ_1`
/// (so `γ_1` sits in the bottom-right corner), an element of `𝔰𝔬_m` for the
/// identity form. It is regular whenever every `γ_i` is nonzero.
pub fn tridiagonal_skew(ctx: &VarContext, gammas: &[MultiPoly]) -> PolyMatrix {
    let m = gammas.len() + 1;
    PolyMatrix::from_fn(ctx, m, m, |i, j| {
        if j == i + 1 {
            &MultiPoly::zero(ctx) + &gammas[m - 2 - i]
        } else if i == j + 1 {
            -(&MultiPoly::zero(ctx) + &gammas[m - 2 - j])
        } else {
            MultiPoly::zero(ctx)
        }
    })
}

/// Comparison between the printed invariants of the `5×5` orbit
/// representative of the even orthogonal case (`n = 2`, non-semisimple
/// `x₁`) and this crate's `b_i = tr ∧^{2i} x₂`.
#[derive(Clone, Debug, Serialize)]
pub struct FixtureDictionary {
    pub matrix: String,
    pub computed: Vec<String>,
    pub printed: Vec<String>,
    /// `s_i` with `printed_i = s_i · computed_i` at `u = v = 0`.
    pub sign_at_origin: Vec<i32>,
    /// `printed_i − s_i · computed_i`, the part no sign convention explains.
    pub residual: Vec<String>,
}

const FIXTURE_ROWS: [[&str; 5]; 5] = [
    ["alpha", "1", "0", "0", "u1"],
    ["0", "alpha", "0", "0", "u2"],
    ["0", "0", "-alpha", "0", "v1"],
    ["0", "0", "-1", "-alpha", "v2"],
    ["-v1", "-v2", "-u1", "-u2", "0"],
];

const FIXTURE_PRINTED: [&str; 2] = [
    "2*alpha^2 - u1^2 - u2^2 - v1^2 - v2^2",
    "-alpha^4 + alpha^2*u1^2 + alpha^2*u2^2 + alpha^2*v1^2 + alpha^2*v2^2 - 2*alpha*u1*u2 - 2*alpha*v1*v2",
];

pub fn gross_prasad_fixture_dictionary() -> Result<FixtureDictionary> {
    let ctx = VarContext::new(["alpha", "u1", "u2", "v1", "v2"])?;
    let entries =
        FIXTURE_ROWS.iter().flatten().map(|s| MultiPoly::parse(&ctx, s)).collect::<Result<Vec<_>, _>>()?;
    let x2 = PolyMatrix::new(&ctx, 5, 5, entries)?;
    let computed = even_wedge_traces(&x2, 2)?;
    let printed = FIXTURE_PRINTED.iter().map(|s| MultiPoly::parse(&ctx, s)).collect::<Result<Vec<_>, _>>()?;
    let origin = |p: &MultiPoly| p.eval_slice(&[1, 0, 0, 0, 0].map(exactpoly::rat));
    let mut sign_at_origin = Vec::new();
    let mut residual = Vec::new();
    for (c, p) in computed.iter().zip(&printed) {
        let s = if origin(p) == origin(c) { 1 } else { -1 };
        sign_at_origin.push(s);
        let r = if s == 1 { p - c } else { p + c };
        residual.push(r.to_string());
    }
    Ok(FixtureDictionary {
        matrix: x2.to_string(),
        computed: computed.iter().map(|p| p.to_string()).collect(),
        printed: printed.iter().map(|p| p.to_string()).collect(),
        sign_at_origin,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::charpoly_coeffs;

    #[test]
    fn tridiagonal_layout() {
        let ctx = VarContext::new(["g1", "g2", "g3"]).unwrap();
        let g: Vec<MultiPoly> = ["g1", "g2", "g3"].iter().map(|s| MultiPoly::var(&ctx, s).unwrap()).collect();
        let m = tridiagonal_skew(&ctx, &g);
        assert_eq!(m.to_string(), "[[0, g3, 0, 0], [-g3, 0, g2, 0], [0, -g2, 0, g1], [0, 0, -g1, 0]]");
        // the charpoly has the expected continuant form
        let c = charpoly_coeffs(&m).unwrap();
        assert_eq!(c[1].to_string(), "g1^2 + g2^2 + g3^2");
        assert_eq!(c[3].to_string(), "g1^2*g3^2");
    }

    #[test]
    fn fixture_dictionary_signs() {
        let d = gross_prasad_fixture_dictionary().unwrap();
        assert_eq!(d.sign_at_origin, [-1, -1]);
        assert!(d.residual.iter().all(|r| r != "0"), "printed invariants are not a pure sign change: {:?}", d.residual);
    }
}
