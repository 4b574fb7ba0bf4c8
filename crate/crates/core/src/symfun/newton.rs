//! Newton-type identities for monomial symmetric functions.
//!
//! For a partition `μ` of length at most `n − 1` and `μ(k) = μ ∪ {k}`,
//! summing `m_μ` over the `n − 1` variables left after deleting `α_j`,
//! weighted by `α_j^k`, gives
//!
//! ```text
//! Σ_j m_μ(α̂_j)·α_j^k = aug(μ, k)·m_{μ(k)}(α)
//! ```
//!
//! where `aug(μ, k) = 1 + #{parts of μ, zero-padded to n − 1, equal to k}`.
//! Summing against the coefficients of `f(x) = Π(x − α_i)` then yields
//! `Σ_k (−1)^{n−k} aug(μ, k)·m_{μ(k)}·e_{n−k} = 0`. Without the `aug`
//! weights the sum is in general not zero (already for `μ = ∅, n = 2`); this
//! module computes both versions so they can be compared.

use exactpoly::{rat, MultiPoly, Rational};
use serde::Serialize;

use super::{elementary_sym, monomial_sym, Family, Partition};
use crate::{Error, Result};

/// `1 + (multiplicity of k in μ padded with zeros to length ambient)`.
pub fn aug_multiplicity(mu: &Partition, k: u32, ambient: usize) -> usize {
    1 + mu.multiplicity(k, ambient)
}

fn check_length(mu: &Partition, n: usize) -> Result<()> {
    if n == 0 || mu.length() > n - 1 {
        return Err(Error::PartitionTooLong { partition: mu.to_string(), max: n.saturating_sub(1) });
    }
    Ok(())
}

fn sign(k: i64) -> Rational {
    exactpoly::rational::sign_pow(k)
}

struct Ctx {
    family: Family,
    e: Vec<MultiPoly>,
}

impl Ctx {
    fn new(n: usize) -> Self {
        let family = Family::new("alpha", n);
        let e = (0..=n + 1).map(|k| elementary_sym(k, &family).into_poly()).collect();
        Self { family, e }
    }

    fn m(&self, mu: &Partition) -> MultiPoly {
        monomial_sym(mu, &self.family).map(|h| h.into_poly()).expect("length checked by caller")
    }

    /// `aug(μ, k)·m_{μ(k)}` or `m_{μ(k)}`.
    fn weighted(&self, mu: &Partition, k: u32, corrected: bool) -> MultiPoly {
        let n = self.family.len();
        let m = self.m(&mu.insert(k));
        if corrected {
            m.scale(&rat(aug_multiplicity(mu, k, n - 1) as i64))
        } else {
            m
        }
    }

    /// `Σ_j m_μ(α̂_j)·α_j^k`, by brute force.
    fn hat_power_sum(&self, mu: &Partition, k: u32) -> MultiPoly {
        let n = self.family.len();
        let ctx = self.family.context();
        let names = self.family.names();
        let mut total = MultiPoly::zero(ctx);
        for j in 0..n {
            let rest: Vec<String> = names.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, s)| s.clone()).collect();
            let sub = Family::within(ctx, &rest).expect("names come from the context");
            let m = monomial_sym(mu, &sub).expect("length checked by caller").into_poly();
            total = total + m * self.family.var(j).pow(k);
        }
        total
    }
}

/// `Σ_{k=0}^{n} (−1)^{n−k} w_k·m_{μ(k)}·e_{n−k}` in `n` variables, with
/// `w_k = aug(μ, k)` when `corrected` and `w_k = 1` otherwise.
pub fn newton_sum(mu: &Partition, n: usize, corrected: bool) -> Result<MultiPoly> {
    check_length(mu, n)?;
    let c = Ctx::new(n);
    let mut total = MultiPoly::zero(c.family.context());
    for k in 0..=n {
        let term = c.weighted(mu, k as u32, corrected) * &c.e[n - k];
        total = total + term.scale(&sign((n - k) as i64));
    }
    Ok(total)
}

/// The brute-force side `Σ_j m_μ(α̂_j)·f(α_j)` with `f(x) = Σ_k (−1)^{n−k} e_{n−k} x^k`,
/// expanded term by term (it vanishes because `f(α_j) = 0`).
pub fn newton_oracle(mu: &Partition, n: usize) -> Result<MultiPoly> {
    check_length(mu, n)?;
    let c = Ctx::new(n);
    let mut total = MultiPoly::zero(c.family.context());
    for k in 0..=n {
        let term = c.hat_power_sum(mu, k as u32) * &c.e[n - k];
        total = total + term.scale(&sign((n - k) as i64));
    }
    Ok(total)
}

/// With `corrected`, the weighted sum minus [`newton_oracle`], which must be
/// the zero polynomial. Without it, the unweighted sum as literally stated.
pub fn newton_residual(mu: &Partition, n: usize, corrected: bool) -> Result<MultiPoly> {
    if corrected {
        Ok(newton_sum(mu, n, true)? - newton_oracle(mu, n)?)
    } else {
        newton_sum(mu, n, false)
    }
}

/// The `n + 1` companion identity.
///
/// Corrected form: `Σ_{k=0}^{n−1} (−1)^{n−k} F(k)(e_{n−k}e_1 − e_{n+1−k}) + F(n+1)`
/// with `F(k) = aug(μ, k)·m_{μ(k)}`, identically zero. Literal form:
/// the same sum with `F(k) = m_{μ(k)}` and `− m_{μ(n+1)}` in place of `+ F(n+1)`.
pub fn newton_corollary(mu: &Partition, n: usize, corrected: bool) -> Result<MultiPoly> {
    check_length(mu, n)?;
    let c = Ctx::new(n);
    let mut total = MultiPoly::zero(c.family.context());
    for k in 0..n {
        let inner = &c.e[n - k] * &c.e[1] - &c.e[n + 1 - k];
        total = total + (c.weighted(mu, k as u32, corrected) * inner).scale(&sign((n - k) as i64));
    }
    let top = c.weighted(mu, (n + 1) as u32, corrected);
    Ok(if corrected { total + top } else { total - top })
}

/// Truncated identity `Σ_{k=0}^{n−1} (−1)^{n−k} F(k) e_{n−k} = −F(n)`; the
/// literal version claims `= m_{μ(n)}`. Returns LHS minus the claimed RHS.
fn truncated_residual(c: &Ctx, mu: &Partition, corrected: bool) -> MultiPoly {
    let n = c.family.len();
    let mut total = MultiPoly::zero(c.family.context());
    for k in 0..n {
        total = total + (c.weighted(mu, k as u32, corrected) * &c.e[n - k]).scale(&sign((n - k) as i64));
    }
    let top = c.weighted(mu, n as u32, corrected);
    if corrected {
        total + top
    } else {
        total - top
    }
}

/// Per-`k` comparison of the brute-force power sum with `m_{μ(k)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonCheck {
    pub k: u32,
    /// `aug(μ, k)`, the predicted factor.
    pub predicted_factor: usize,
    /// The factor actually observed (as canonical text), if the brute-force
    /// sum is a multiple of `m_{μ(k)}` at all.
    pub observed_factor: Option<String>,
}

/// Everything known about one `(μ, n)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonReport {
    pub mu: String,
    pub n: usize,
    pub corrected_residual: String,
    pub literal_sum: String,
    pub literal_holds: bool,
    pub corollary_corrected_residual: String,
    pub corollary_literal_residual: String,
    pub truncated_corrected_residual: String,
    pub truncated_literal_residual: String,
    /// Only the `k` whose factor differs from 1.
    pub nontrivial_factors: Vec<NewtonCheck>,
    pub factors_confirmed: bool,
}

impl NewtonReport {
    /// Whether every corrected identity vanishes and every factor matched.
    pub fn passed(&self) -> bool {
        self.corrected_residual == "0"
            && self.corollary_corrected_residual == "0"
            && self.truncated_corrected_residual == "0"
            && self.factors_confirmed
    }
}

/// Runs every Newton-type check for `(μ, n)`.
pub fn newton_report(mu: &Partition, n: usize) -> Result<NewtonReport> {
    check_length(mu, n)?;
    let c = Ctx::new(n);
    let mut nontrivial = Vec::new();
    let mut confirmed = true;
    for k in 0..=(n as u32 + 1) {
        let brute = c.hat_power_sum(mu, k);
        let target = c.m(&mu.insert(k));
        let observed = brute.unit_multiple(&target);
        let predicted = aug_multiplicity(mu, k, n - 1);
        if observed.as_ref() != Some(&rat(predicted as i64)) {
            confirmed = false;
        }
        if predicted != 1 || observed.as_ref() != Some(&rat(1)) {
            nontrivial.push(NewtonCheck {
                k,
                predicted_factor: predicted,
                observed_factor: observed.map(|q| exactpoly::rational::render_rational(&q)),
            });
        }
    }
    let literal = newton_sum(mu, n, false)?;
    Ok(NewtonReport {
        mu: mu.to_string(),
        n,
        corrected_residual: newton_residual(mu, n, true)?.to_string(),
        literal_holds: literal.is_zero(),
        literal_sum: literal.to_string(),
        corollary_corrected_residual: newton_corollary(mu, n, true)?.to_string(),
        corollary_literal_residual: newton_corollary(mu, n, false)?.to_string(),
        truncated_corrected_residual: truncated_residual(&c, mu, true).to_string(),
        truncated_literal_residual: truncated_residual(&c, mu, false).to_string(),
        nontrivial_factors: nontrivial,
        factors_confirmed: confirmed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn multiplicities() {
        assert_eq!(aug_multiplicity(&Partition::empty(), 0, 1), 2);
        assert_eq!(aug_multiplicity(&p(&[3, 1]), 2, 2), 1);
        assert_eq!(aug_multiplicity(&p(&[2, 2]), 2, 2), 3);
    }

    #[test]
    fn classical_newton_needs_the_factor() {
        // μ = ∅, n = 2: p2 − e1·p1 + 2·e2 = 0, the literal sum is −e2
        assert!(newton_residual(&Partition::empty(), 2, true).unwrap().is_zero());
        assert_eq!(newton_residual(&Partition::empty(), 2, false).unwrap().to_string(), "-alpha1*alpha2");
        assert!(newton_residual(&p(&[1]), 3, true).unwrap().is_zero());
    }

    #[test]
    fn literal_form_holds_when_multiplicity_free() {
        // μ = (3,1) in n = 3: no zero padding (length 2 = n−1); k = 0 adds a
        // fresh part, k = 2 is new, but k = 1 and k = 3 repeat.
        let r = newton_report(&p(&[3, 1]), 3).unwrap();
        assert!(r.passed());
        let ks: Vec<u32> = r.nontrivial_factors.iter().map(|c| c.k).collect();
        assert_eq!(ks, vec![1, 3]);
    }

    #[test]
    fn too_long_rejected() {
        assert!(matches!(newton_residual(&p(&[1, 1, 1]), 2, false), Err(Error::PartitionTooLong { .. })));
    }

    #[test]
    fn corollary_sign() {
        let mu = p(&[2]);
        assert!(newton_corollary(&mu, 3, true).unwrap().is_zero());
        assert!(!newton_corollary(&mu, 3, false).unwrap().is_zero());
    }
}
