//! Infinitesimal stabilizers of the `H`-action on `𝔥⊥`.
//!
//! A point is regular when the kernel of `𝔥 → ⊕_j 𝔤_j, h ↦ [ρ_j(h), x_j]`
//! has the smallest possible dimension, which for a case with finitely many
//! regular orbits per fiber is `dim 𝔥 − dim 𝔥⊥ + dim 𝔠`.

use exactpoly::{rat, MultiPoly, PolyMatrix, QMatrix, VarContext};
use rand::Rng;

use crate::liealg::sample::{random_int, random_matrix, random_signed_symmetric, random_traceless, seeded_rng};
use crate::liealg::{build_hperp, CaseTag, HPerpParams, HPerpPoint};
use crate::{Error, Result};

/// How a basis element of `𝔥` acts on one component of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Embedding {
    /// `h` itself.
    Identity,
    /// `diag(h, 0)`, padding with `k` zero rows and columns.
    Pad(usize),
}

impl Embedding {
    fn apply(self, h: &QMatrix) -> QMatrix {
        match self {
            Embedding::Identity => h.clone(),
            Embedding::Pad(k) => {
                let s = h.rows();
                QMatrix::from_fn(s + k, s + k, |i, j| if i < s && j < s { h.get(i, j).clone() } else { rat(0) })
            }
        }
    }
}

/// Which family of points an [`ActionSpec`] acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    Case(CaseTag),
    /// `SO_m` acting on `𝔰𝔬_m` (identity form) by conjugation.
    AdjointSo(usize),
}

/// A basis of `𝔥` and its linearized action on points of `𝔥⊥`.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    pub kind: ActionKind,
    pub basis: Vec<QMatrix>,
    embeddings: Vec<Embedding>,
    /// `dim 𝔥 − dim 𝔥⊥ + dim 𝔠`.
    pub expected_minimal_dim: usize,
}

fn unit(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m.set(i, j, rat(1));
    m
}

fn gl_basis(n: usize) -> Vec<QMatrix> {
    (0..n * n).map(|k| unit(n, k / n, k % n)).collect()
}

fn block_diag_q(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let (p, q) = (a.rows(), b.rows());
    QMatrix::from_fn(p + q, p + q, |i, j| match (i < p, j < p) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - p, j - p).clone(),
        _ => rat(0),
    })
}

/// `E_ij − E_ji` for `i < j`.
fn so_identity_basis(m: usize) -> Vec<QMatrix> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut e = unit(m, i, j);
            e.set(j, i, rat(-1));
            out.push(e);
        }
    }
    out
}

/// Basis of `𝔰𝔬_{2n}` for the split form: `[[A, 0], [0, −Aᵗ]]`, and the
/// skew off-diagonal blocks.
fn so_split_basis(n: usize) -> Vec<QMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut e = unit(2 * n, i, j);
            e.set(n + j, n + i, rat(-1));
            out.push(e);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for (r, c) in [(0, n), (n, 0)] {
                let mut e = unit(2 * n, r + i, c + j);
                e.set(r + j, c + i, rat(-1));
                out.push(e);
            }
        }
    }
    out
}

impl ActionSpec {
    pub fn for_case(case: CaseTag) -> Self {
        let n = case.n();
        let (basis, embeddings, dim_perp, dim_c) = match case {
            CaseTag::Diagonal(_) => (gl_basis(n), vec![Embedding::Identity; 2], n * n, n),
            CaseTag::FriedbergJacquet(_) | CaseTag::OddGL(_) => {
                let m = if matches!(case, CaseTag::OddGL(_)) { n + 1 } else { n };
                let zn = QMatrix::zeros(n, n);
                let zm = QMatrix::zeros(m, m);
                let basis = gl_basis(n)
                    .iter()
                    .map(|h| block_diag_q(h, &zm))
                    .chain(gl_basis(m).iter().map(|h| block_diag_q(&zn, h)))
                    .collect();
                (basis, vec![Embedding::Identity], 2 * n * m, n)
            }
            CaseTag::RankinSelberg(_) => {
                (gl_basis(n), vec![Embedding::Identity, Embedding::Pad(1)], (n + 1) * (n + 1), 2 * n + 1)
            }
            CaseTag::JacquetIchino => {
                let basis = vec![
                    QMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]),
                    QMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]),
                    QMatrix::from_i64_rows(&[&[0, 0], &[1, 0]]),
                ];
                (basis, vec![Embedding::Identity; 3], 6, 3)
            }
            CaseTag::GrossPrasadEven(_) => {
                (so_split_basis(n), vec![Embedding::Identity, Embedding::Pad(1)], n * (2 * n + 1), 2 * n)
            }
        };
        let expected_minimal_dim = basis.len() + dim_c - dim_perp;
        ActionSpec { kind: ActionKind::Case(case), basis, embeddings, expected_minimal_dim }
    }

    /// The adjoint action of `𝔰𝔬_m` (identity form) on itself.
    pub fn adjoint_so(m: usize) -> Self {
        ActionSpec {
            kind: ActionKind::AdjointSo(m),
            basis: so_identity_basis(m),
            embeddings: vec![Embedding::Identity],
            expected_minimal_dim: m / 2,
        }
    }

    /// `h · (x_1, …, x_k) = ([ρ_1(h), x_1], …, [ρ_k(h), x_k])`.
    pub fn act(&self, h: &QMatrix, point: &[QMatrix]) -> Vec<QMatrix> {
        self.embeddings.iter().zip(point).map(|(e, x)| e.apply(h).commutator(x)).collect()
    }

    /// A random integer point of `𝔥⊥` with entries in `[−bound, bound]`.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Vec<QMatrix> {
        match self.kind {
            ActionKind::AdjointSo(m) => vec![random_signed_symmetric(rng, m, bound, -1)],
            ActionKind::Case(case) => random_hperp(case, rng, bound)
                .rational_components()
                .expect("constant entries"),
        }
    }
}

fn constant(q: &exactpoly::Rational) -> MultiPoly {
    MultiPoly::constant(&VarContext::empty(), q.clone())
}

fn lift(m: &QMatrix) -> PolyMatrix {
    PolyMatrix::from_rational(&VarContext::empty(), m)
}

fn lift_vec(v: &[exactpoly::Rational]) -> Vec<MultiPoly> {
    v.iter().map(constant).collect()
}

/// A random integer point of `𝔥⊥` for `case`, built through
/// [`build_hperp`] so that every structural constraint is checked.
pub fn random_hperp<R: Rng + ?Sized>(case: CaseTag, rng: &mut R, bound: i64) -> HPerpPoint {
    let n = case.n();
    let vector = |k: usize, rng: &mut R| lift_vec(&(0..k).map(|_| random_int(rng, bound)).collect::<Vec<_>>());
    let params = match case {
        CaseTag::Diagonal(_) => HPerpParams::Diagonal { x: lift(&random_matrix(rng, n, n, bound)) },
        CaseTag::FriedbergJacquet(_) => HPerpParams::FriedbergJacquet {
            b: lift(&random_matrix(rng, n, n, bound)),
            c: lift(&random_matrix(rng, n, n, bound)),
        },
        CaseTag::OddGL(_) => HPerpParams::OddGL {
            b: lift(&random_matrix(rng, n, n + 1, bound)),
            c: lift(&random_matrix(rng, n + 1, n, bound)),
        },
        CaseTag::RankinSelberg(_) => HPerpParams::RankinSelberg {
            a: lift(&random_matrix(rng, n, n, bound)),
            u: vector(n, rng),
            v: vector(n, rng),
            d: constant(&random_int(rng, bound)),
        },
        CaseTag::JacquetIchino => HPerpParams::JacquetIchino {
            x1: lift(&random_traceless(rng, 2, bound)),
            x2: lift(&random_traceless(rng, 2, bound)),
        },
        CaseTag::GrossPrasadEven(_) => HPerpParams::GrossPrasadEven {
            a: lift(&random_matrix(rng, n, n, bound)),
            b: lift(&random_signed_symmetric(rng, n, bound, -1)),
            c: lift(&random_signed_symmetric(rng, n, bound, -1)),
            u: vector(n, rng),
            v: vector(n, rng),
        },
    };
    build_hperp(case, params).expect("random parameters satisfy the case constraints")
}

/// The matrix of `h ↦ h · x` with one column per basis element of `𝔥`.
fn action_matrix(spec: &ActionSpec, point: &[QMatrix]) -> Result<QMatrix> {
    if point.len() != spec.embeddings.len() {
        return Err(Error::Consistency(format!(
            "point has {} components, the action expects {}",
            point.len(),
            spec.embeddings.len()
        )));
    }
    let columns: Vec<Vec<exactpoly::Rational>> = spec
        .basis
        .iter()
        .map(|h| spec.act(h, point).iter().flat_map(|m| m.data().to_vec()).collect())
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    Ok(QMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
}

/// Dimension of the infinitesimal stabilizer of a rational point.
pub fn stabilizer_dim_of(spec: &ActionSpec, point: &[QMatrix]) -> Result<usize> {
    Ok(action_matrix(spec, point)?.kernel_dim())
}

/// Dimension of the infinitesimal stabilizer; symbolic points are rejected.
pub fn stabilizer_dim(spec: &ActionSpec, point: &HPerpPoint) -> Result<usize> {
    stabilizer_dim_of(spec, &point.rational_components()?)
}

pub fn is_regular(spec: &ActionSpec, point: &HPerpPoint) -> Result<bool> {
    Ok(stabilizer_dim(spec, point)? == spec.expected_minimal_dim)
}

pub fn is_regular_of(spec: &ActionSpec, point: &[QMatrix]) -> Result<bool> {
    Ok(stabilizer_dim_of(spec, point)? == spec.expected_minimal_dim)
}

/// The smallest stabilizer dimension over `trials` random points with
/// entries in `[−20, 20]`.
pub fn minimal_dim_estimate(spec: &ActionSpec, seed: u64, trials: usize) -> usize {
    let mut rng = seeded_rng(seed);
    (0..trials)
        .map(|_| {
            let p = spec.random_point(&mut rng, 20);
            stabilizer_dim_of(spec, &p).expect("sampled points have the right shape")
        })
        .min()
        .unwrap_or(spec.basis.len())
}

#[cfg(test)]
mod tests;
