use std::fmt;

use crate::{MultiPoly, PolyError, QMatrix, Rational, VarContext};

/// A dense matrix of polynomials over one shared context.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ctx: VarContext,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    /// Row-major construction. Entries over a prefix of `ctx` are lifted.
    pub fn new(ctx: &VarContext, rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let zero = MultiPoly::zero(ctx);
        let entries = entries
            .into_iter()
            .map(|e| {
                if e.context() == ctx {
                    Ok(e)
                } else if e.context().is_prefix_of(ctx) {
                    Ok(&zero + &e)
                } else {
                    Err(PolyError::ContextMismatch {
                        left: e.context().names().to_vec(),
                        right: ctx.names().to_vec(),
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { ctx: ctx.clone(), rows, cols, entries })
    }

    pub fn from_fn<F>(ctx: &VarContext, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> MultiPoly,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(ctx, rows, cols, entries).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn zeros(ctx: &VarContext, rows: usize, cols: usize) -> Self {
        Self { ctx: ctx.clone(), rows, cols, entries: vec![MultiPoly::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &VarContext, n: usize) -> Self {
        Self::from_fn(ctx, n, n, |i, j| if i == j { MultiPoly::one(ctx) } else { MultiPoly::zero(ctx) })
    }

    pub fn diagonal(ctx: &VarContext, diag: &[MultiPoly]) -> Self {
        let n = diag.len();
        Self::from_fn(ctx, n, n, |i, j| if i == j { diag[i].clone() } else { MultiPoly::zero(ctx) })
    }

    /// Block-diagonal matrix with the given square or rectangular blocks.
    pub fn block_diag(ctx: &VarContext, blocks: &[&PolyMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(ctx, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &PolyMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ctx, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn from_rational(ctx: &VarContext, m: &QMatrix) -> Self {
        Self::from_fn(ctx, m.rows(), m.cols(), |i, j| MultiPoly::constant(ctx, m.get(i, j).clone()))
    }

    /// The rational matrix of constant entries, `None` if any entry is not constant.
    pub fn to_rational(&self) -> Option<QMatrix> {
        let data = self.entries.iter().map(MultiPoly::constant_value).collect::<Option<Vec<_>>>()?;
        Some(QMatrix::from_vec(self.rows, self.cols, data))
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries[i * self.cols + j] = if value.context() == &self.ctx { value } else { &MultiPoly::zero(&self.ctx) + &value };
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<F: FnMut(&MultiPoly) -> MultiPoly>(&self, f: F) -> PolyMatrix {
        PolyMatrix::new(&self.ctx, self.rows, self.cols, self.entries.iter().map(f).collect()).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|e| -e)
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        self.map(|e| e.scale(c))
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        self.same_shape(other)?;
        let ctx = self.ctx.join(&other.ctx)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        PolyMatrix::new(&ctx, self.rows, self.cols, entries)
    }

    pub fn try_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        self.same_shape(other)?;
        let ctx = self.ctx.join(&other.ctx)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        PolyMatrix::new(&ctx, self.rows, self.cols, entries)
    }

    fn same_shape(&self, other: &PolyMatrix) -> Result<(), PolyError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(PolyError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ctx = self.ctx.join(&other.ctx)?;
        let mut out = PolyMatrix::zeros(&ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero(&ctx);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<MultiPoly, PolyError> {
        self.require_square()?;
        let mut t = MultiPoly::zero(&self.ctx);
        for i in 0..self.rows {
            t = t + self.get(i, i);
        }
        Ok(t)
    }

    fn require_square(&self) -> Result<(), PolyError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(PolyError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each elimination step divides by the previous pivot; that division is
    /// exact over any integral domain, so a failure here is a bug and panics.
    /// Triangular inputs short-circuit to the product of the diagonal.
    pub fn det(&self) -> Result<MultiPoly, PolyError> {
        self.require_square()?;
        let n = self.rows;
        if self.is_upper_triangular() || self.is_lower_triangular() {
            let mut d = MultiPoly::one(&self.ctx);
            for i in 0..n {
                d = d * self.get(i, i);
            }
            return Ok(d);
        }
        let mut a: Vec<Vec<MultiPoly>> = (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut negate = false;
        let mut prev = MultiPoly::one(&self.ctx);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(MultiPoly::zero(&self.ctx)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = if prev.is_one() {
                        num
                    } else {
                        num.exact_div(&prev).expect("Bareiss step: inexact division by previous pivot")
                    };
                }
                a[i][k] = MultiPoly::zero(&self.ctx);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Evaluates every entry at a point given by context position.
    pub fn eval_slice(&self, values: &[Rational]) -> QMatrix {
        QMatrix::from_vec(self.rows, self.cols, self.entries.iter().map(|e| e.eval_slice(values)).collect())
    }

    /// Moves every entry into `target` (see [`MultiPoly::reindex`]).
    pub fn reindex(&self, target: &VarContext) -> Result<PolyMatrix, PolyError> {
        let entries = self.entries.iter().map(|e| e.reindex(target)).collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::new(target, self.rows, self.cols, entries)
    }
}

impl fmt::Display for PolyMatrix {
    /// Row-major nested brackets of canonical polynomial text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix{self}")
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VarContext {
        VarContext::new(["x", "y", "z"]).unwrap()
    }

    fn m(rows: usize, cols: usize, s: &[&str]) -> PolyMatrix {
        let c = ctx();
        PolyMatrix::new(&c, rows, cols, s.iter().map(|t| MultiPoly::parse(&c, t).unwrap()).collect()).unwrap()
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&ctx(), s).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(1, 1, &["1"]).det().unwrap(), p("1"));
        assert_eq!(m(2, 2, &["x", "1", "0", "y"]).det().unwrap(), p("x*y"));
        assert_eq!(m(2, 2, &["0", "x", "y", "1"]).det().unwrap(), p("-x*y"));
        assert_eq!(m(0, 0, &[]).det().unwrap(), p("1"));
        assert!(matches!(m(1, 2, &["x", "y"]).det(), Err(PolyError::NotSquare { rows: 1, cols: 2 })));
    }

    #[test]
    fn bareiss_with_pivoting() {
        let a = m(3, 3, &["0", "x", "1", "y", "0", "z", "1", "x", "0"]);
        // cofactor expansion by hand: -x(0 - z) + 1(xy - 0) = xz + xy
        assert_eq!(a.det().unwrap(), p("x*y + x*z"));
    }

    #[test]
    fn rendering() {
        assert_eq!(m(2, 2, &["x", "-1/2", "0", "y^2"]).to_string(), "[[x, -1/2], [0, y^2]]");
    }
}
