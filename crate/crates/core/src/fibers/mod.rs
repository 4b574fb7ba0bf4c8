//! Fibers of `𝔥⊥ → 𝔠` over rational base points: recovering the products
//! `u_i v_i`, counting regular orbits with the normal-form classifications,
//! and checking that extra orbits occur exactly over the A-side divisor.

use std::collections::BTreeMap;

use exactpoly::{rat, MultiPoly, QMatrix, Rational, Solution, VarContext};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::divisors::{affine_row, aside_elimination};
use crate::liealg::sample::{distinct_nonzero, random_int, random_nonzero, seeded_rng};
use crate::liealg::{git_coords, CaseTag, HPerpPoint};
use crate::symfun::indexed_names;
use crate::{Error, Result};

/// A rational point of the quotient on the regular semisimple chart.
///
/// `alpha` holds the eigenvalues of `x₁` (the `w` of `x₁ = diag(w, −w)` for
/// Jacquet–Ichino, the eigenvalues of `BC` for Friedberg–Jacquet); `coords`
/// holds every coordinate in the order of [`CaseTag::coord_names`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasePoint {
    pub case: CaseTag,
    pub n: usize,
    #[serde(serialize_with = "crate::report::ser_rationals")]
    pub alpha: Vec<Rational>,
    #[serde(serialize_with = "crate::report::ser_rationals")]
    pub coords: Vec<Rational>,
    /// Jacquet–Ichino only: `coords[j] = d_{σ(j)}` of the normal-form point,
    /// where the normal form has `d₁ = −w² ≠ 0`.
    pub chart_permutation: Option<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberDiagnostic {
    #[serde(serialize_with = "crate::report::ser_rationals")]
    pub uv_products: Vec<Rational>,
    pub zero_indices: Vec<usize>,
    pub orbit_count: u64,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub divisor_value: Rational,
}

impl BasePoint {
    /// The coordinates in the frame of the normal form (undoing the chart
    /// permutation, if any).
    pub fn chart_coords(&self) -> Vec<Rational> {
        match self.chart_permutation {
            Some(sigma) => unpermute(&self.coords, sigma),
            None => self.coords.clone(),
        }
    }
}

fn chart_error(case: CaseTag, detail: impl Into<String>) -> Error {
    Error::SingularElimination { case: case.to_string(), detail: detail.into() }
}

fn validate(pt: &BasePoint) -> Result<()> {
    let case = pt.case;
    if pt.coords.len() != case.coord_names().len() {
        return Err(Error::Constraint { case: case.to_string(), invariant: "wrong number of coordinates".into() });
    }
    let distinct = |xs: &[Rational]| (0..xs.len()).all(|i| (0..i).all(|j| xs[i] != xs[j]));
    let ok = match case {
        CaseTag::RankinSelberg(n) => pt.alpha.len() == n && distinct(&pt.alpha),
        CaseTag::GrossPrasadEven(n) => {
            let sq: Vec<Rational> = pt.alpha.iter().map(|a| a * a).collect();
            pt.alpha.len() == n && distinct(&sq) && sq.iter().all(|s| !s.is_zero())
        }
        CaseTag::JacquetIchino => pt.alpha.len() == 1 && !pt.alpha[0].is_zero() && pt.chart_permutation.is_some(),
        CaseTag::FriedbergJacquet(n) => pt.alpha.len() == n,
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => true,
    };
    if !ok {
        return Err(chart_error(case, "base point is off the regular semisimple chart"));
    }
    Ok(())
}

fn constant(q: &Rational) -> MultiPoly {
    MultiPoly::constant(&VarContext::empty(), q.clone())
}

/// The normal-form point over `alpha` with symbolic `u`, `v` (and `d`).
fn symbolic_normal_form(case: CaseTag, alpha: &[Rational]) -> Result<(VarContext, HPerpPoint)> {
    let n = case.n();
    let rs = matches!(case, CaseTag::RankinSelberg(_));
    let mut names = [indexed_names("u", n), indexed_names("v", n)].concat();
    if rs {
        names.push("d".into());
    }
    let ctx = VarContext::new(names)?;
    let var = |s: &str| MultiPoly::var(&ctx, s);
    let u: Vec<MultiPoly> = indexed_names("u", n).iter().map(|s| var(s)).collect::<Result<_, _>>()?;
    let v: Vec<MultiPoly> = indexed_names("v", n).iter().map(|s| var(s)).collect::<Result<_, _>>()?;
    let al: Vec<MultiPoly> = alpha.iter().map(constant).collect();
    let pt = if rs {
        HPerpPoint::rankin_selberg_normal(&al, &u, &v, &var("d")?)?
    } else {
        HPerpPoint::gross_prasad_normal(&al, &u, &v)?
    };
    Ok((ctx, pt))
}

fn solve_linear(case: CaseTag, alpha: &[Rational], targets: &[Rational]) -> Result<Vec<Rational>> {
    let n = case.n();
    let rs = matches!(case, CaseTag::RankinSelberg(_));
    let (_, pt) = symbolic_normal_form(case, alpha)?;
    let b = git_coords(&pt)?.b;
    let mut vars: Vec<usize> = (0..2 * n).collect();
    let mut keys = Vec::new();
    if rs {
        vars.push(2 * n);
        let mut k = vec![0; 2 * n + 1];
        k[2 * n] = 1;
        keys.push(k);
    }
    for i in 0..n {
        let mut k = vec![0; vars.len()];
        k[i] = 1;
        k[n + i] = 1;
        keys.push(k);
    }
    let size = keys.len();
    let mut m = QMatrix::zeros(size, size);
    let mut rhs = Vec::with_capacity(size);
    for (j, bj) in b.iter().enumerate() {
        let row = affine_row(case, bj, &vars, &keys)?;
        for (k, c) in row.coeffs.iter().enumerate() {
            m.set(j, k, c.constant_value().expect("numeric coefficient"));
        }
        rhs.push(&targets[j] - row.constant.constant_value().expect("numeric constant"));
    }
    match m.linear_solve(&rhs)? {
        Solution::Unique(x) => Ok(x[usize::from(rs)..].to_vec()),
        _ => Err(chart_error(case, "the u_i v_i system is singular at this base point")),
    }
}

/// Inverts a chart permutation: the normal-form `d` values.
fn unpermute(coords: &[Rational], sigma: [usize; 3]) -> Vec<Rational> {
    let mut d = vec![rat(0); 3];
    for (j, &s) in sigma.iter().enumerate() {
        d[s] = coords[j].clone();
    }
    d
}

/// The products `u_i v_i` (for Jacquet–Ichino, the single product `bc`)
/// of any normal-form point over `pt`.
pub fn solve_uv_products(pt: &BasePoint) -> Result<Vec<Rational>> {
    validate(pt)?;
    let case = pt.case;
    let n = case.n();
    match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => Ok(vec![]),
        CaseTag::RankinSelberg(_) => solve_linear(case, &pt.alpha, &pt.coords[n..]),
        CaseTag::GrossPrasadEven(_) => solve_linear(case, &pt.alpha, &pt.coords[n..]),
        CaseTag::FriedbergJacquet(_) => {
            // the products are the eigenvalues of BC; check they fit the coordinates
            let e = elementary_values(&pt.alpha);
            if e[1..] != pt.coords[..] {
                return Err(chart_error(case, "eigenvalues do not match the coordinates"));
            }
            Ok(pt.alpha.clone())
        }
        CaseTag::JacquetIchino => {
            let sigma = pt.chart_permutation.expect("validated");
            let d = unpermute(&pt.coords, sigma);
            let w = &pt.alpha[0];
            if d[0] != -(w * w) {
                return Err(chart_error(case, "d1 != -w^2 in the chart"));
            }
            // d3 − d2 = −2aw − w², d2 = −a² − bc
            let a = (&d[1] - &d[2] - w * w) / (w * rat(2));
            Ok(vec![-&d[1] - &a * &a])
        }
    }
}

/// `e_0, …, e_n` of a list of rationals.
fn elementary_values(xs: &[Rational]) -> Vec<Rational> {
    let mut e = vec![rat(0); xs.len() + 1];
    e[0] = rat(1);
    for (k, x) in xs.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    e
}

/// The number of regular orbits over `pt`.
///
/// Following the normal-form classifications: the fiber over a chart point
/// has one regular orbit for each choice, at every vanishing `u_i v_i`, of
/// which of `u_i`, `v_i` is nonzero; for Jacquet–Ichino the two choices are
/// `b = 0` or `c = 0`.
pub fn count_orbit_classes(pt: &BasePoint) -> Result<u64> {
    let zeros = solve_uv_products(pt)?.iter().filter(|w| w.is_zero()).count();
    Ok(1u64 << zeros)
}

/// Full diagnostic for one base point; `divisor` is the A-side polynomial
/// in the coordinate ring.
pub fn diagnose(pt: &BasePoint, divisor: &MultiPoly) -> Result<FiberDiagnostic> {
    let uv = solve_uv_products(pt)?;
    let zero_indices: Vec<usize> = uv.iter().enumerate().filter(|(_, w)| w.is_zero()).map(|(i, _)| i).collect();
    Ok(FiberDiagnostic {
        orbit_count: 1u64 << zero_indices.len(),
        zero_indices,
        uv_products: uv,
        divisor_value: divisor.eval_slice(&pt.coords),
    })
}

fn rationals(xs: &[MultiPoly]) -> Vec<Rational> {
    xs.iter().map(|p| p.constant_value().expect("numeric point")).collect()
}

/// A random base point with exactly one vanishing product (`on_divisor`)
/// or none, built by pushing a normal-form point forward to `𝔠`.
pub fn sample_point(case: CaseTag, on_divisor: bool, seed: u64) -> Result<BasePoint> {
    let mut rng = seeded_rng(seed);
    Ok(sample_point_with(case, on_divisor, &mut rng)?.0)
}

fn products<R: Rng + ?Sized>(rng: &mut R, n: usize, on_divisor: bool) -> (Vec<Rational>, Vec<Rational>) {
    let zero = on_divisor.then(|| rng.gen_range(0..n));
    let mut u = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        if Some(i) == zero {
            // one of the pair vanishes, the other does not
            let x = random_nonzero(rng, 9);
            if rng.gen_bool(0.5) {
                u.push(x);
                v.push(rat(0));
            } else {
                u.push(rat(0));
                v.push(x);
            }
        } else {
            u.push(random_nonzero(rng, 9));
            v.push(random_nonzero(rng, 9));
        }
    }
    (u, v)
}

/// A sampled base point with the products used to build it.
pub(crate) fn sample_point_with<R: Rng + ?Sized>(
    case: CaseTag,
    on_divisor: bool,
    rng: &mut R,
) -> Result<(BasePoint, Vec<Rational>)> {
    let n = case.n();
    let lift = |xs: &[Rational]| xs.iter().map(constant).collect::<Vec<_>>();
    let base = |alpha: Vec<Rational>, coords: Vec<Rational>| BasePoint { case, n, alpha, coords, chart_permutation: None };
    Ok(match case {
        CaseTag::Diagonal(_) | CaseTag::OddGL(_) => {
            (base(vec![], (0..n).map(|_| random_int(rng, 9)).collect()), vec![])
        }
        CaseTag::RankinSelberg(_) | CaseTag::GrossPrasadEven(_) => {
            let gp = matches!(case, CaseTag::GrossPrasadEven(_));
            let alpha = distinct_nonzero(rng, n, 9, gp);
            let (u, v) = products(rng, n, on_divisor);
            let pt = if gp {
                HPerpPoint::gross_prasad_normal(&lift(&alpha), &lift(&u), &lift(&v))?
            } else {
                HPerpPoint::rankin_selberg_normal(&lift(&alpha), &lift(&u), &lift(&v), &constant(&random_int(rng, 9)))?
            };
            let w = u.iter().zip(&v).map(|(a, b)| a * b).collect();
            (base(alpha, rationals(&git_coords(&pt)?.values())), w)
        }
        CaseTag::FriedbergJacquet(_) => {
            let (u, v) = products(rng, n, on_divisor);
            let pt = HPerpPoint::friedberg_jacquet_normal(&lift(&u), &lift(&v))?;
            let w: Vec<Rational> = u.iter().zip(&v).map(|(a, b)| a * b).collect();
            (base(w.clone(), rationals(&git_coords(&pt)?.values())), w)
        }
        CaseTag::JacquetIchino => {
            let w = random_nonzero(rng, 9);
            let a = random_int(rng, 9);
            let (b, c) = products(rng, 1, on_divisor);
            let pt = HPerpPoint::ichino_normal(&constant(&w), &constant(&a), &constant(&b[0]), &constant(&c[0]))?;
            let d = rationals(&git_coords(&pt)?.values());
            let mut sigma = [0, 1, 2];
            sigma.shuffle(rng);
            let coords = sigma.iter().map(|&s| d[s].clone()).collect();
            let bc = &b[0] * &c[0];
            (BasePoint { case, n, alpha: vec![w], coords, chart_permutation: Some(sigma) }, vec![bc])
        }
    })
}

/// Aggregate of [`fiber_divisor_consistency`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub case: CaseTag,
    pub trials: usize,
    pub on_divisor_samples: usize,
    /// Points where `orbit_count ≥ 2` and "divisor vanishes" disagree.
    pub violations: usize,
    /// Points where `Π u_i v_i ≠ unit · divisor / chart`.
    pub certificate_failures: usize,
    /// Points where the recovered products differ from the sampled ones.
    pub roundtrip_failures: usize,
    pub orbit_histogram: BTreeMap<u64, usize>,
    pub notes: Vec<String>,
    pub samples: Vec<FiberSample>,
}

/// One sampled base point with its diagnostic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberSample {
    pub point: BasePoint,
    pub diagnostic: FiberDiagnostic,
}

/// Samples `trials` base points, alternating on and off the divisor, and
/// checks `orbit_count ≥ 2 ⇔ divisor = 0` at each.
pub fn fiber_divisor_consistency(case: CaseTag, seed: u64, trials: usize) -> Result<ConsistencyReport> {
    let elim = aside_elimination(case)?;
    let mut rng = seeded_rng(seed);
    let mut report = ConsistencyReport {
        case,
        trials,
        on_divisor_samples: 0,
        violations: 0,
        certificate_failures: 0,
        roundtrip_failures: 0,
        orbit_histogram: BTreeMap::new(),
        notes: Vec::new(),
        samples: Vec::with_capacity(trials),
    };
    if case == CaseTag::JacquetIchino {
        report.notes.push("base points use a random ordering of the three factors; solved in the chart d1 != 0".into());
    }
    let trivial = case.has_trivial_dual();
    for t in 0..trials {
        let on = !trivial && t % 2 == 1;
        report.on_divisor_samples += usize::from(on);
        let (pt, sampled) = sample_point_with(case, on, &mut rng)?;
        let diag = diagnose(&pt, &elim.poly)?;
        *report.orbit_histogram.entry(diag.orbit_count).or_default() += 1;
        if (diag.orbit_count >= 2) != diag.divisor_value.is_zero() {
            report.violations += 1;
        }
        if diag.uv_products != sampled {
            report.roundtrip_failures += 1;
        }
        let chart = elim.chart.eval_slice(&pt.chart_coords());
        if !chart.is_zero() {
            let prod: Rational = diag.uv_products.iter().product();
            if !trivial && prod != &elim.unit * &diag.divisor_value / chart {
                report.certificate_failures += 1;
            }
        } else {
            report.certificate_failures += 1;
        }
        report.samples.push(FiberSample { point: pt, diagnostic: diag });
    }
    Ok(report)
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.certificate_failures == 0 && self.roundtrip_failures == 0
    }
}

#[cfg(test)]
mod tests;
