use exactpoly::{MultiPoly, PolyError, PolyMatrix};

/// `A ⊗ B`: block `(i, j)` is `a_ij·B`.
pub fn kronecker_product(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
    let ctx = a.context().join(b.context())?;
    let zero = MultiPoly::zero(&ctx);
    Ok(PolyMatrix::from_fn(&ctx, a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        let (ia, ib) = (i / b.rows(), i % b.rows());
        let (ja, jb) = (j / b.cols(), j % b.cols());
        let (x, y) = (a.get(ia, ja), b.get(ib, jb));
        if x.is_zero() || y.is_zero() {
            zero.clone()
        } else {
            x * y
        }
    }))
}

fn require_square(m: &PolyMatrix) -> Result<(), PolyError> {
    if m.is_square() {
        Ok(())
    } else {
        Err(PolyError::NotSquare { rows: m.rows(), cols: m.cols() })
    }
}

/// `x₁ ⊗ I_m + I_n ⊗ x₂`, the action on `k^n ⊗ k^m`.
pub fn kronecker_sum(x1: &PolyMatrix, x2: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
    require_square(x1)?;
    require_square(x2)?;
    let ctx = x1.context().join(x2.context())?;
    let left = kronecker_product(x1, &PolyMatrix::identity(&ctx, x2.rows()))?;
    let right = kronecker_product(&PolyMatrix::identity(&ctx, x1.rows()), x2)?;
    left.try_add(&right)
}

/// `x₁ ⊗ I ⊗ I + I ⊗ x₂ ⊗ I + I ⊗ I ⊗ x₃` for three 2×2 matrices.
pub fn kronecker_sum3(x1: &PolyMatrix, x2: &PolyMatrix, x3: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
    for x in [x1, x2, x3] {
        if x.rows() != 2 || x.cols() != 2 {
            return Err(PolyError::DimensionMismatch(format!("expected 2x2, got {}x{}", x.rows(), x.cols())));
        }
    }
    let ctx = x1.context().join(x2.context())?.join(x3.context())?;
    let i2 = PolyMatrix::identity(&ctx, 2);
    let i4 = PolyMatrix::identity(&ctx, 4);
    let t1 = kronecker_product(x1, &i4)?;
    let t2 = kronecker_product(&kronecker_product(&i2, x2)?, &i2)?;
    let t3 = kronecker_product(&i4, x3)?;
    t1.try_add(&t2)?.try_add(&t3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactpoly::VarContext;

    fn ctx() -> VarContext {
        VarContext::new(["a1", "a2", "a3", "b1", "b2", "b3", "p", "q", "r", "s"]).unwrap()
    }

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(&ctx(), name).unwrap()
    }

    fn mat(n: usize, m: usize, s: &[&str]) -> PolyMatrix {
        let c = ctx();
        PolyMatrix::new(&c, n, m, s.iter().map(|t| MultiPoly::parse(&c, t).unwrap()).collect()).unwrap()
    }

    #[test]
    fn identities() {
        let c = ctx();
        let k = kronecker_product(&PolyMatrix::identity(&c, 2), &PolyMatrix::identity(&c, 3)).unwrap();
        assert_eq!(k, PolyMatrix::identity(&c, 6));
        let d = PolyMatrix::diagonal(&c, &[v("a1"), v("a2")]);
        let k = kronecker_product(&d, &PolyMatrix::identity(&c, 2)).unwrap();
        assert_eq!(k, PolyMatrix::diagonal(&c, &[v("a1"), v("a1"), v("a2"), v("a2")]));
    }

    #[test]
    fn index_formula_and_mixed_product() {
        let a = mat(2, 2, &["p", "q", "r", "s"]);
        let b = mat(2, 2, &["1", "a1", "-2", "b1"]);
        let k = kronecker_product(&a, &b).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*k.get(i, j), a.get(i / 2, j / 2) * b.get(i % 2, j % 2));
            }
        }
        let c = mat(2, 2, &["a2", "0", "1", "b2"]);
        let d = mat(2, 2, &["3", "p", "q", "1"]);
        let lhs = kronecker_product(&a, &b).unwrap().try_mul(&kronecker_product(&c, &d).unwrap()).unwrap();
        let rhs = kronecker_product(&a.try_mul(&c).unwrap(), &b.try_mul(&d).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sums_on_diagonal_inputs() {
        let c = ctx();
        let z1 = PolyMatrix::zeros(&c, 1, 1);
        assert!(kronecker_sum(&z1, &z1).unwrap().is_zero());
        let s = kronecker_sum(&mat(1, 1, &["a1"]), &mat(1, 1, &["b1"])).unwrap();
        assert_eq!(*s.get(0, 0), &v("a1") + &v("b1"));

        let x1 = PolyMatrix::diagonal(&c, &[v("a1"), v("a2")]);
        let x2 = PolyMatrix::diagonal(&c, &[v("b1"), v("b2"), v("b3")]);
        let mut expected = MultiPoly::one(&c);
        for a in ["a1", "a2"] {
            for b in ["b1", "b2", "b3"] {
                expected = expected * (&v(a) + &v(b));
            }
        }
        assert_eq!(kronecker_sum(&x1, &x2).unwrap().det().unwrap(), expected);
        assert!(kronecker_sum(&mat(1, 2, &["p", "q"]), &x1).is_err());
    }

    #[test]
    fn triple_sum() {
        let c = ctx();
        let z = PolyMatrix::zeros(&c, 2, 2);
        assert!(kronecker_sum3(&z, &z, &z).unwrap().is_zero());

        let x = |a: &str| PolyMatrix::diagonal(&c, &[v(a), -v(a)]);
        let det = kronecker_sum3(&x("a1"), &x("a2"), &x("a3")).unwrap().det().unwrap();
        let mut expected = MultiPoly::one(&c);
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                for s3 in [1, -1] {
                    let f = v("a1").scale(&exactpoly::rat(s1)) + v("a2").scale(&exactpoly::rat(s2)) + v("a3").scale(&exactpoly::rat(s3));
                    expected = expected * f;
                }
            }
        }
        assert_eq!(det, expected);

        let m1 = mat(2, 2, &["p", "q", "r", "s"]);
        let m2 = mat(2, 2, &["a1", "1", "b1", "a2"]);
        let m3 = mat(2, 2, &["b2", "2", "0", "b3"]);
        let t = kronecker_sum3(&m1, &m2, &m3).unwrap().trace().unwrap();
        let lin = m1.trace().unwrap() + m2.trace().unwrap() + m3.trace().unwrap();
        assert_eq!(t, lin.scale(&exactpoly::rat(4)));
        assert!(kronecker_sum3(&m1, &PolyMatrix::identity(&c, 3), &m3).is_err());
    }
}
