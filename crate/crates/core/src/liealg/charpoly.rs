use exactpoly::{rat, MultiPoly, PolyError, PolyMatrix};

/// Coefficients `c_1, …, c_N` with `det(tI − M) = t^N − c_1 t^{N−1} + c_2 t^{N−2} − …`,
/// so that `c_i = tr ∧^i M`.
///
/// Faddeev–LeVerrier: with `M_0 = 0` and `p_0 = 1`,
/// `M_k = M·M_{k−1} + p_{k−1}·I` and `p_k = −tr(M·M_k)/k`; then `c_k = (−1)^k p_k`.
/// Only divisions by the integers `1..=N` occur.
pub fn charpoly_coeffs(m: &PolyMatrix) -> Result<Vec<MultiPoly>, PolyError> {
    if !m.is_square() {
        return Err(PolyError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let ctx = m.context();
    let id = PolyMatrix::identity(ctx, n);
    let mut mk = PolyMatrix::zeros(ctx, n, n);
    let mut p_prev = MultiPoly::one(ctx);
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        mk = m.try_mul(&mk)?.try_add(&id.map(|e| e * &p_prev))?;
        let am = m.try_mul(&mk)?;
        let pk = am.trace()?.scale(&rat(-1)).scale(&rat(k as i64).recip());
        out.push(if k % 2 == 0 { pk.clone() } else { -&pk });
        p_prev = pk;
    }
    Ok(out)
}

/// `tr ∧^{2i} M` for `i = 1..=half`.
pub fn even_wedge_traces(m: &PolyMatrix, half: usize) -> Result<Vec<MultiPoly>, PolyError> {
    let c = charpoly_coeffs(m)?;
    Ok((1..=half).map(|i| c[2 * i - 1].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::VarContext;

    fn mat(ctx: &VarContext, n: usize, s: &[&str]) -> PolyMatrix {
        PolyMatrix::new(ctx, n, n, s.iter().map(|t| MultiPoly::parse(ctx, t).unwrap()).collect()).unwrap()
    }

    /// det(tI − M) through the fraction-free determinant, coefficient by coefficient.
    fn oracle(m: &PolyMatrix) -> Vec<MultiPoly> {
        let names: Vec<String> = std::iter::once("t".to_string()).chain(m.context().names().iter().cloned()).collect();
        let ctx = VarContext::new(names).unwrap();
        let mm = m.reindex(&ctx).unwrap();
        let t = MultiPoly::var(&ctx, "t").unwrap();
        let n = m.rows();
        let shifted = PolyMatrix::from_fn(&ctx, n, n, |i, j| {
            let e = -mm.get(i, j);
            if i == j {
                &e + &t
            } else {
                e
            }
        });
        let det = shifted.det().unwrap();
        let parts = det.split_by(&[0]);
        (1..=n)
            .map(|i| {
                let coeff = parts.get(&vec![(n - i) as u32]).cloned().unwrap_or_else(|| MultiPoly::zero(&ctx));
                let signed = if i % 2 == 0 { coeff } else { -coeff };
                signed.reindex(m.context()).unwrap()
            })
            .collect()
    }

    #[test]
    fn small_examples() {
        let ctx = VarContext::new(["a", "u", "v"]).unwrap();
        let id = PolyMatrix::identity(&ctx, 2);
        let c = charpoly_coeffs(&id).unwrap();
        assert_eq!(c.iter().map(ToString::to_string).collect::<Vec<_>>(), ["2", "1"]);
        let companion = mat(&ctx, 2, &["0", "-6", "1", "5"]);
        let c = charpoly_coeffs(&companion).unwrap();
        assert_eq!(c.iter().map(ToString::to_string).collect::<Vec<_>>(), ["5", "6"]);
    }

    #[test]
    fn ichino_style_three_by_three() {
        let ctx = VarContext::new(["a", "u", "v"]).unwrap();
        let m = mat(&ctx, 3, &["a", "0", "u", "0", "-a", "v", "-v", "-u", "0"]);
        let c = charpoly_coeffs(&m).unwrap();
        assert!(c[0].is_zero() && c[2].is_zero());
        assert_eq!(c[1].to_string(), "-a^2 + 2*u*v");
        assert_eq!(c, oracle(&m));
    }

    #[test]
    fn generic_matrix_against_determinant() {
        let ctx = VarContext::new(["x", "y", "z"]).unwrap();
        let m = mat(&ctx, 3, &["x", "1", "y", "z", "2*x", "-1", "y*z", "0", "3"]);
        assert_eq!(charpoly_coeffs(&m).unwrap(), oracle(&m));
    }
}
