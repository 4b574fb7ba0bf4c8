//! Serialization helpers: polynomials and rationals are written as their
//! canonical text.

use exactpoly::{render_rational, MultiPoly, Rational};
use serde::Serializer;

pub(crate) fn ser_poly<S: Serializer>(p: &MultiPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub(crate) fn ser_opt_poly<S: Serializer>(p: &Option<MultiPoly>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_some(&p.to_string()),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_polys<S: Serializer>(v: &[MultiPoly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

pub(crate) fn ser_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&render_rational(q))
}

pub(crate) fn ser_opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&render_rational(q)),
        None => s.serialize_none(),
    }
}


pub(crate) fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(render_rational))
}
