use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// The spherical cases the library knows about.
///
/// `n` is the rank parameter: `GL_n` for [`Diagonal`](Self::Diagonal),
/// `GL_2n/GL_n×GL_n` for Friedberg–Jacquet, `GL_2n+1/GL_n×GL_n+1` for
/// [`OddGL`](Self::OddGL), `GL_n×GL_n+1/GL_n` for Rankin–Selberg and
/// `SO_2n×SO_2n+1/SO_2n` for the even Gross–Prasad case. Jacquet–Ichino
/// (`PGL_2³/PGL_2`) has no parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    Diagonal(usize),
    FriedbergJacquet(usize),
    OddGL(usize),
    RankinSelberg(usize),
    JacquetIchino,
    GrossPrasadEven(usize),
}

impl CaseTag {
    /// Every command-line name, in a fixed order.
    pub const NAMES: [&'static str; 6] =
        ["diagonal", "friedberg-jacquet", "odd-gl", "rankin-selberg", "jacquet-ichino", "gross-prasad"];

    /// Builds a case from its command-line name. `n` is ignored for Jacquet–Ichino.
    pub fn from_name(name: &str, n: usize) -> Result<Self> {
        let case = match name {
            "diagonal" => CaseTag::Diagonal(n),
            "friedberg-jacquet" => CaseTag::FriedbergJacquet(n),
            "odd-gl" => CaseTag::OddGL(n),
            "rankin-selberg" => CaseTag::RankinSelberg(n),
            "jacquet-ichino" | "ichino" => CaseTag::JacquetIchino,
            "gross-prasad" => CaseTag::GrossPrasadEven(n),
            other => return Err(Error::Unsupported(format!("unknown case `{other}`"))),
        };
        if case.n() == 0 {
            return Err(Error::Unsupported(format!("{name}: n must be at least 1")));
        }
        Ok(case)
    }

    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Diagonal(_) => "diagonal",
            CaseTag::FriedbergJacquet(_) => "friedberg-jacquet",
            CaseTag::OddGL(_) => "odd-gl",
            CaseTag::RankinSelberg(_) => "rankin-selberg",
            CaseTag::JacquetIchino => "jacquet-ichino",
            CaseTag::GrossPrasadEven(_) => "gross-prasad",
        }
    }

    /// The rank parameter (1 for Jacquet–Ichino).
    pub fn n(&self) -> usize {
        match *self {
            CaseTag::Diagonal(n)
            | CaseTag::FriedbergJacquet(n)
            | CaseTag::OddGL(n)
            | CaseTag::RankinSelberg(n)
            | CaseTag::GrossPrasadEven(n) => n,
            CaseTag::JacquetIchino => 1,
        }
    }

    /// Largest `n` in the verification grid.
    pub fn max_grid_n(&self) -> usize {
        match self {
            CaseTag::Diagonal(_) | CaseTag::OddGL(_) => 4,
            CaseTag::FriedbergJacquet(_) | CaseTag::GrossPrasadEven(_) => 2,
            CaseTag::RankinSelberg(_) => 3,
            CaseTag::JacquetIchino => 1,
        }
    }

    /// Whether the dual symplectic representation is trivial.
    pub fn has_trivial_dual(&self) -> bool {
        matches!(self, CaseTag::Diagonal(_) | CaseTag::OddGL(_))
    }

    /// Whether the dual representation is `T*(S⁺)` for an explicit `S⁺`.
    pub fn is_polarized(&self) -> bool {
        matches!(self, CaseTag::RankinSelberg(_) | CaseTag::FriedbergJacquet(_))
    }

    /// Names of the invariant coordinates on the quotient, in context order.
    pub fn coord_names(&self) -> Vec<String> {
        use crate::symfun::indexed_names;
        match *self {
            CaseTag::Diagonal(n) => indexed_names("a", n),
            CaseTag::FriedbergJacquet(n) | CaseTag::OddGL(n) => indexed_names("c", n),
            CaseTag::RankinSelberg(n) => [indexed_names("a", n), indexed_names("b", n + 1)].concat(),
            CaseTag::GrossPrasadEven(n) => [indexed_names("a", n), indexed_names("b", n)].concat(),
            CaseTag::JacquetIchino => indexed_names("d", 3),
        }
    }

    /// Every case in the verification grid.
    pub fn grid() -> Vec<CaseTag> {
        let mut v = Vec::new();
        for n in 1..=4 {
            v.push(CaseTag::Diagonal(n));
        }
        for n in 1..=2 {
            v.push(CaseTag::FriedbergJacquet(n));
        }
        for n in 1..=4 {
            v.push(CaseTag::OddGL(n));
        }
        for n in 1..=3 {
            v.push(CaseTag::RankinSelberg(n));
        }
        v.push(CaseTag::JacquetIchino);
        for n in 1..=2 {
            v.push(CaseTag::GrossPrasadEven(n));
        }
        v
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::JacquetIchino => f.write_str(self.name()),
            _ => write!(f, "{} n={}", self.name(), self.n()),
        }
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
