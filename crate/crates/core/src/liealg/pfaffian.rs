use std::collections::HashMap;

use exactpoly::{MultiPoly, PolyMatrix, VarContext};

use crate::{Error, Result};

/// The bilinear form a matrix is skew for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewForm {
    /// `Mᵗ = −M`.
    StandardSkew,
    /// `M ∈ 𝔰𝔬_{2n}` for the split form `J = [[0, I_n], [I_n, 0]]`, i.e.
    /// `J·M` is skew. The Pfaffian is taken of `J·M`.
    Split(usize),
}

/// The split symmetric form of size `size`: `[[0, I], [I, 0]]`, with an
/// extra `1` in the corner when `size` is odd.
pub fn split_form(ctx: &VarContext, size: usize) -> PolyMatrix {
    let n = size / 2;
    PolyMatrix::from_fn(ctx, size, size, |i, j| {
        let hit = (i < n && j == i + n) || (j < n && i == j + n) || (size % 2 == 1 && i == 2 * n && j == 2 * n);
        if hit {
            MultiPoly::one(ctx)
        } else {
            MultiPoly::zero(ctx)
        }
    })
}

/// The standard symplectic form `[[0, I_n], [−I_n, 0]]`.
pub fn symplectic_form(ctx: &VarContext, n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(ctx, 2 * n, 2 * n, |i, j| {
        if i < n && j == i + n {
            MultiPoly::one(ctx)
        } else if j < n && i == j + n {
            -MultiPoly::one(ctx)
        } else {
            MultiPoly::zero(ctx)
        }
    })
}

/// Whether `M` preserves the symmetric or alternating form `Q`: `MᵗQ + QM = 0`.
pub fn preserves_form(m: &PolyMatrix, q: &PolyMatrix) -> bool {
    let qm = q.try_mul(m).expect("shapes agree");
    let mq = m.transpose().try_mul(q).expect("shapes agree");
    mq.try_add(&qm).is_ok_and(|s| s.is_zero())
}

fn is_skew(m: &PolyMatrix) -> bool {
    m.is_square() && m.transpose().try_add(m).is_ok_and(|s| s.is_zero())
}

/// The Pfaffian of a matrix skew for `form`.
///
/// For [`SkewForm::Split`] the input is first multiplied by `J`, so the
/// result squares to `det(J·M) = (−1)^n det(M)`. The sign is the classical
/// one (`Pf [[0, x], [−x, 0]] = x`), computed by expansion along the first
/// row with memoization on the remaining index set, not by taking a square
/// root, so `Pf² = det` is an independent check.
pub fn skew_pfaffian(m: &PolyMatrix, form: SkewForm) -> Result<MultiPoly> {
    let skew = match form {
        SkewForm::StandardSkew => m.clone(),
        SkewForm::Split(n) => {
            if m.rows() != 2 * n || m.cols() != 2 * n {
                return Err(Error::Constraint {
                    case: "pfaffian".into(),
                    invariant: format!("split form of size {} needs a {}x{} matrix", 2 * n, 2 * n, 2 * n),
                });
            }
            split_form(m.context(), 2 * n).try_mul(m)?
        }
    };
    if !is_skew(&skew) {
        return Err(Error::Constraint { case: "pfaffian".into(), invariant: "matrix is not skew for the declared form".into() });
    }
    let size = skew.rows();
    if size % 2 == 1 {
        return Ok(MultiPoly::zero(skew.context()));
    }
    if size > 64 {
        return Err(Error::Unsupported("Pfaffian of a matrix larger than 64x64".into()));
    }
    let mut memo = HashMap::new();
    let full = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
    Ok(pf_rec(&skew, full, &mut memo))
}

fn pf_rec(m: &PolyMatrix, set: u64, memo: &mut HashMap<u64, MultiPoly>) -> MultiPoly {
    if set == 0 {
        return MultiPoly::one(m.context());
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut total = MultiPoly::zero(m.context());
    let mut pos = 0;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let a = m.get(i, j);
        if !a.is_zero() {
            let sub = pf_rec(m, rest & !(1u64 << j), memo);
            let term = a * &sub;
            total = if pos % 2 == 0 { total + term } else { total - term };
        }
        pos += 1;
    }
    memo.insert(set, total.clone());
    total
}
