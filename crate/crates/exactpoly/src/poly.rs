use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::rational_sqrt;
use crate::{Monomial, PolyError, Rational, VarContext};

/// A sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map ordered by the graded lexicographic order, so the
/// leading term is the last entry. Zero coefficients are never stored.
///
/// The arithmetic operators (`+`, `-`, `*`) align contexts when one is a
/// prefix of the other and panic otherwise; the `try_*` methods report the
/// mismatch as an error instead.
#[derive(Clone)]
pub struct MultiPoly {
    ctx: VarContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(ctx: &VarContext) -> Self {
        Self { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &VarContext, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn from_int(ctx: &VarContext, c: i64) -> Self {
        Self::constant(ctx, crate::rat(c))
    }

    /// The polynomial consisting of the variable `name`.
    pub fn var(ctx: &VarContext, name: &str) -> Result<Self, PolyError> {
        let i = ctx.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ctx, i))
    }

    pub fn var_at(ctx: &VarContext, index: usize) -> Self {
        Self::term(ctx, Monomial::var(ctx.len(), index), Rational::one())
    }

    pub fn term(ctx: &VarContext, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), ctx.len(), "monomial length does not match context");
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(ctx: &VarContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            assert_eq!(m.len(), ctx.len(), "monomial length does not match context");
            p.add_term(m, c);
        }
        p
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero included), `None` otherwise.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ctx.len()))
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Highest exponent of the variable at `index`.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0)).collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial over a context that extends this one.
    fn extended_to(&self, ctx: &VarContext) -> MultiPoly {
        if self.ctx == *ctx {
            return self.clone();
        }
        debug_assert!(self.ctx.is_prefix_of(ctx));
        let n = ctx.len();
        MultiPoly {
            ctx: ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.extended(n), c.clone())).collect(),
        }
    }

    /// Brings two polynomials to a common context (prefix extension only).
    pub fn align<'a>(
        p: &'a MultiPoly,
        q: &'a MultiPoly,
    ) -> Result<(Cow<'a, MultiPoly>, Cow<'a, MultiPoly>), PolyError> {
        if p.ctx == q.ctx {
            return Ok((Cow::Borrowed(p), Cow::Borrowed(q)));
        }
        let ctx = p.ctx.join(&q.ctx)?;
        let lift = |x: &'a MultiPoly| {
            if x.ctx == ctx {
                Cow::Borrowed(x)
            } else {
                Cow::Owned(x.extended_to(&ctx))
            }
        };
        Ok((lift(p), lift(q)))
    }

    /// Moves the polynomial into `target`, matching variables by name.
    ///
    /// Every variable that occurs in `self` must exist in `target`; unused
    /// variables may be dropped. This is the explicit way to change variable
    /// order, which implicit alignment never does.
    pub fn reindex(&self, target: &VarContext) -> Result<MultiPoly, PolyError> {
        if self.ctx == *target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ctx.len());
        for (i, name) in self.ctx.names().iter().enumerate() {
            let used = self.terms.keys().any(|m| m.exponent(i) > 0);
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if !used => map.push(None),
                None => return Err(PolyError::UnknownVariable(name.clone())),
            }
        }
        let n = target.len();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one(n);
            for (i, &e) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    out.exponents_mut()[j] += e;
                }
            }
            (out, c.clone())
        });
        Ok(MultiPoly::from_terms(target, terms))
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let (p, q) = Self::align(self, other)?;
        let (mut big, small) = if p.terms.len() >= q.terms.len() { (p.into_owned(), q) } else { (q.into_owned(), p) };
        for (m, c) in small.terms.iter() {
            big.add_term(m.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let (p, q) = Self::align(self, other)?;
        let mut out = p.into_owned();
        for (m, c) in q.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let (p, q) = Self::align(self, other)?;
        Ok(p.mul_same(&q))
    }

    fn mul_same(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms.iter().next().unwrap();
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Multiplies by the single term `c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.ctx);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_same(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_same(&base);
            }
        }
        result
    }

    /// Evaluates at a point given by context position.
    ///
    /// # Panics
    /// If `values.len()` differs from the context size.
    pub fn eval_slice(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.ctx.len(), "evaluation point has wrong length");
        let mut powers: Vec<Vec<Rational>> = vec![Vec::new(); values.len()];
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(Rational::one());
                }
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &values[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            total += t;
        }
        total
    }

    /// Evaluates at a named assignment; only variables that occur need values.
    pub fn eval(&self, point: &HashMap<String, Rational>) -> Result<Rational, PolyError> {
        let used = self.variables_used();
        let mut values = vec![Rational::zero(); self.ctx.len()];
        for i in used {
            let name = &self.ctx.names()[i];
            values[i] = point.get(name).cloned().ok_or_else(|| PolyError::MissingAssignment(name.clone()))?;
        }
        Ok(self.eval_slice(&values))
    }

    /// Ring homomorphism sending each variable to its image in `target`.
    ///
    /// Images must live in `target` or a prefix of it. Every variable that
    /// occurs in `self` needs an image.
    pub fn substitute(&self, target: &VarContext, images: &HashMap<String, MultiPoly>) -> Result<MultiPoly, PolyError> {
        self.substitute_impl(target, images, false)
    }

    /// Like [`substitute`](Self::substitute), but variables without an image
    /// are sent to the variable of the same name in `target`.
    pub fn substitute_partial(&self, target: &VarContext, images: &HashMap<String, MultiPoly>) -> Result<MultiPoly, PolyError> {
        self.substitute_impl(target, images, true)
    }

    fn substitute_impl(&self, target: &VarContext, images: &HashMap<String, MultiPoly>, keep: bool) -> Result<MultiPoly, PolyError> {
        let mut imgs: Vec<Option<MultiPoly>> = vec![None; self.ctx.len()];
        for i in self.variables_used() {
            let name = &self.ctx.names()[i];
            let img = match images.get(name) {
                Some(p) => {
                    if !p.ctx.is_prefix_of(target) {
                        return Err(PolyError::ContextMismatch {
                            left: p.ctx.names().to_vec(),
                            right: target.names().to_vec(),
                        });
                    }
                    p.extended_to(target)
                }
                None if keep => MultiPoly::var(target, name)?,
                None => return Err(PolyError::MissingAssignment(name.clone())),
            };
            imgs[i] = Some(img);
        }
        let mut powers: Vec<Vec<MultiPoly>> = vec![Vec::new(); self.ctx.len()];
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(MultiPoly::one(target));
                }
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul_same(imgs[i].as_ref().unwrap());
                    pw.push(next);
                }
                t = t.mul_same(&pw[e as usize]);
            }
            for (k, v) in t.terms {
                out.add_term(k, v);
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// # Panics
    /// If the contexts cannot be aligned.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (p, d) = Self::align(self, d).unwrap_or_else(|e| panic!("{e}"));
        if d.is_zero() {
            return None;
        }
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        if d.terms.len() == 1 {
            let inv = dc.recip();
            let mut q = MultiPoly::zero(&p.ctx);
            for (m, c) in &p.terms {
                q.terms.insert(m.div(&dm)?, c * &inv);
            }
            return Some(q);
        }
        let mut r = p.into_owned();
        let mut q = MultiPoly::zero(&r.ctx);
        while let Some((rm, rc)) = r.leading_term() {
            let tm = rm.div(&dm)?;
            let tc = rc / &dc;
            for (m, c) in &d.terms {
                r.add_term(m.mul(&tm), -(c * &tc));
            }
            q.terms.insert(tm, tc);
        }
        Some(q)
    }

    /// A square root with positive leading coefficient, if `self` is a square.
    ///
    /// The root is built one term at a time from the top: each new term is
    /// the leading term of the remainder divided by twice the leading term of
    /// the root so far. Any inexact step means `self` is not a square.
    pub fn sqrt(&self) -> Option<MultiPoly> {
        let Some((lm, lc)) = self.leading_term() else {
            return Some(self.clone());
        };
        if lm.exponents().iter().any(|e| e % 2 != 0) {
            return None;
        }
        let root_c = rational_sqrt(lc)?;
        let root_m = Monomial::from_exponents(&lm.exponents().iter().map(|e| e / 2).collect::<Vec<_>>());
        let min_deg = self.min_degree().unwrap();
        let two_lc = &root_c * Rational::from_integer(2.into());

        let mut q = MultiPoly::term(&self.ctx, root_m.clone(), root_c);
        let mut r = self.clone();
        r = r.sub_same(&q.mul_same(&q));
        let mut last = root_m.clone();
        while let Some((rm, rc)) = r.leading_term() {
            let tm = rm.div(&root_m)?;
            if tm >= last || 2 * tm.degree() < min_deg {
                return None;
            }
            let tc = rc / &two_lc;
            // r -= 2·q·t + t²
            let twice_t = &tc * Rational::from_integer(2.into());
            let update = q.mul_term(&tm, &twice_t);
            r = r.sub_same(&update);
            r.add_term(tm.mul(&tm), -(&tc * &tc));
            q.terms.insert(tm.clone(), tc);
            last = tm;
        }
        Some(q)
    }

    fn sub_same(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// The nonzero `c` with `self = c·q`, if there is one.
    ///
    /// Two zero polynomials are related by `c = 1`.
    ///
    /// # Panics
    /// If the contexts cannot be aligned.
    pub fn unit_multiple(&self, q: &MultiPoly) -> Option<Rational> {
        let (p, q) = Self::align(self, q).unwrap_or_else(|e| panic!("{e}"));
        match (p.is_zero(), q.is_zero()) {
            (true, true) => return Some(Rational::one()),
            (false, false) => {}
            _ => return None,
        }
        if p.terms.len() != q.terms.len() {
            return None;
        }
        let c = p.leading_coefficient().unwrap() / q.leading_coefficient().unwrap();
        p.terms
            .iter()
            .zip(q.terms.iter())
            .all(|((m1, c1), (m2, c2))| m1 == m2 && *c1 == c2 * &c)
            .then_some(c)
    }

    /// Scales so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coefficient() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Scales by -1 if needed so the leading coefficient is positive.
    pub fn sign_normalized(&self) -> MultiPoly {
        match self.leading_coefficient() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Exchanges two variables of the context.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.exponents_mut().swap(i, j);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Groups terms by their exponents in the variables `vars`.
    ///
    /// Returns a map from the exponent tuple (in the order of `vars`) to the
    /// coefficient polynomial, which lives in the same context with those
    /// variables' exponents cleared.
    pub fn split_by(&self, vars: &[usize]) -> BTreeMap<Vec<u32>, MultiPoly> {
        let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&i| m.exponent(i)).collect();
            let mut rest = m.clone();
            for &i in vars {
                rest.exponents_mut()[i] = 0;
            }
            out.entry(key).or_insert_with(|| MultiPoly::zero(&self.ctx)).add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Rewrites every monomial through `f` into `target`; `None` from `f`
    /// aborts the whole map.
    pub fn try_map_monomials<F>(&self, target: &VarContext, mut f: F) -> Option<MultiPoly>
    where
        F: FnMut(&Monomial) -> Option<Monomial>,
    {
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let image = f(m)?;
            assert_eq!(image.len(), target.len(), "mapped monomial has wrong length");
            out.add_term(image, c.clone());
        }
        Some(out)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        match Self::align(self, other) {
            Ok((p, q)) => p.terms == q.terms,
            Err(_) => false,
        }
    }
}

impl Eq for MultiPoly {}

impl std::fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn ctx() -> VarContext {
        VarContext::new(["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&ctx(), s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        assert_eq!(&p("x + y") + &MultiPoly::zero(&ctx()), p("x + y"));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let base = p("x + 1");
        let mut acc = MultiPoly::one(&ctx());
        for k in 0..6 {
            assert_eq!(base.pow(k), acc);
            acc = &acc * &base;
        }
        assert_eq!(base.pow(3), p("x^3 + 3*x^2 + 3*x + 1"));
    }

    #[test]
    fn evaluation() {
        let point: HashMap<String, Rational> = [("x".to_string(), rat(2)), ("y".to_string(), rat(3))].into();
        assert_eq!(p("x^2 - y").eval(&point).unwrap(), rat(1));
        assert_eq!(p("5/7").eval(&HashMap::new()).unwrap(), ratio(5, 7));
        assert_eq!(p("z").eval(&point), Err(PolyError::MissingAssignment("z".into())));
    }

    #[test]
    fn substitution() {
        let c = ctx();
        let images: HashMap<String, MultiPoly> = [("x".to_string(), p("y"))].into();
        assert_eq!(p("x^2").substitute(&c, &images).unwrap(), p("y^2"));
        assert!(p("x*z").substitute(&c, &images).is_err());
        assert_eq!(p("x*z").substitute_partial(&c, &images).unwrap(), p("y*z"));
    }

    #[test]
    fn prefix_alignment() {
        let small = VarContext::new(["x"]).unwrap();
        let x = MultiPoly::var(&small, "x").unwrap();
        assert_eq!(&x + &p("y"), p("x + y"));
        let other = VarContext::new(["y", "x"]).unwrap();
        let y = MultiPoly::var(&other, "y").unwrap();
        assert!(p("x").try_add(&y).is_err());
        assert_eq!(y.reindex(&ctx()).unwrap(), p("y"));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.exact_div(&p("x - y")), Some(p("x + y")));
        assert_eq!(a.exact_div(&p("x - z")), None);
        assert_eq!(p("4*x^2*y").exact_div(&p("2*x")), Some(p("2*x*y")));
    }

    #[test]
    fn square_roots() {
        assert_eq!(p("x^2 + 2*x*y + y^2").sqrt(), Some(p("x + y")));
        assert_eq!(p("x^2 + y^2").sqrt(), None);
        assert_eq!(p("x^2 - 2*x*y + y^2").sqrt(), Some(p("x - y")));
        assert_eq!(p("9/4").sqrt(), Some(p("3/2")));
        assert_eq!(p("-1").sqrt(), None);
        assert_eq!(p("x^2 + 1").sqrt(), None);
        let q = p("-3*x^2*y + y*z - 1/2");
        assert_eq!((&q * &q).sqrt(), Some(-&q));
    }

    #[test]
    fn unit_multiples() {
        assert_eq!(p("2*x + 2*y").unit_multiple(&p("x + y")), Some(rat(2)));
        assert_eq!(p("x").unit_multiple(&p("y")), None);
        assert_eq!(p("x + y").unit_multiple(&p("x + 2*y")), None);
    }

    #[test]
    fn split_by_variables() {
        let parts = p("x^2*y + 3*x^2 + z").split_by(&[0]);
        assert_eq!(parts[&vec![2]], p("y + 3"));
        assert_eq!(parts[&vec![0]], p("z"));
    }
}
