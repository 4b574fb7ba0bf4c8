//! Random rational points of the Lie algebras involved, for sampling checks.
//!
//! All samplers take any [`Rng`]; the library and CLI feed them a
//! [`ChaCha8Rng`](rand_chacha::ChaCha8Rng) seeded from a single `u64`, which
//! makes every report reproducible across platforms.

use exactpoly::{rat, QMatrix, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator behind every seeded computation.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound))
}

/// A nonzero integer in `[−bound, bound]`.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let k = rng.gen_range(-bound..=bound);
        if k != 0 {
            return rat(k);
        }
    }
}

/// `count` pairwise distinct nonzero integers in `[−bound, bound]` whose
/// squares are also pairwise distinct when `distinct_squares` is set.
pub fn distinct_nonzero<R: Rng + ?Sized>(rng: &mut R, count: usize, bound: i64, distinct_squares: bool) -> Vec<Rational> {
    assert!(bound as usize >= count, "range too small for {count} distinct values");
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let x = random_nonzero(rng, bound);
        let clash = out.iter().any(|y| *y == x || (distinct_squares && *y == -&x));
        if !clash {
            out.push(x);
        }
    }
    out
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| random_int(rng, bound))
}

pub fn random_traceless<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> QMatrix {
    let mut m = random_matrix(rng, n, n, bound);
    let t = m.trace();
    let last = m.get(n - 1, n - 1) - &t;
    m.set(n - 1, n - 1, last);
    m
}

/// A random skew (`sign = −1`) or symmetric (`sign = +1`) matrix.
pub fn random_signed_symmetric<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64, sign: i64) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if i == j {
                if sign > 0 {
                    m.set(i, i, random_int(rng, bound));
                }
            } else {
                let x = random_int(rng, bound);
                m.set(j, i, &x * rat(sign));
                m.set(i, j, x);
            }
        }
    }
    m
}

fn hamiltonian_blocks<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64, sign: i64) -> QMatrix {
    let a = random_matrix(rng, n, n, bound);
    let b = random_signed_symmetric(rng, n, bound, sign);
    let c = random_signed_symmetric(rng, n, bound, sign);
    let at = a.transpose();
    QMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a.get(i, j).clone(),
        (true, false) => b.get(i, j - n).clone(),
        (false, true) => c.get(i - n, j).clone(),
        (false, false) => -at.get(i - n, j - n),
    })
}

/// A random element of `𝔰𝔬_{2n}` for the split form `[[0, I], [I, 0]]`.
pub fn random_so_split<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> QMatrix {
    hamiltonian_blocks(rng, n, bound, -1)
}

/// A random element of `𝔰𝔭_{2n}` for `[[0, I], [−I, 0]]`.
pub fn random_sp<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> QMatrix {
    hamiltonian_blocks(rng, n, bound, 1)
}

/// `exp(N)` for a nilpotent `N`, computed as the finite Taylor sum.
///
/// # Panics
/// If `N` is not nilpotent.
pub fn exp_nilpotent(nil: &QMatrix) -> QMatrix {
    let size = nil.rows();
    let mut out = QMatrix::identity(size);
    let mut power = QMatrix::identity(size);
    for k in 1..=size {
        power = power.mul(nil).scale(&rat(k as i64).recip());
        if power.is_zero() {
            return out;
        }
        out = out.add(&power);
    }
    assert!(power.mul(nil).is_zero(), "exp_nilpotent: matrix is not nilpotent");
    out
}

/// A random product of unipotent elementary matrices `I + t E_ij`, with its
/// exact inverse.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize, bound: i64) -> (QMatrix, QMatrix) {
    let mut g = QMatrix::identity(n);
    let mut inv = QMatrix::identity(n);
    if n < 2 {
        return (g, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let t = random_int(rng, bound);
        let mut e = QMatrix::identity(n);
        e.set(i, j, t.clone());
        let mut e_inv = QMatrix::identity(n);
        e_inv.set(i, j, -t);
        g = g.mul(&e);
        inv = e_inv.mul(&inv);
    }
    (g, inv)
}
