//! Weyl-group orders of classical groups and Euler characteristics of the
//! rank-one symmetric spaces, low-rank real Grassmannians and products.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Euler characteristic of the Cayley plane. A standard external constant.
pub const CAYLEY_PLANE_EULER: u32 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("formula and Weyl quotient disagree for {space}: {formula} vs {weyl}")]
    Inconsistent {
        space: String,
        formula: BigInt,
        weyl: BigInt,
    },
}

pub type Result<T> = std::result::Result<T, LieError>;

/// One simple or toral factor of a compact connected group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFactor {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    /// A torus of the given dimension; its Weyl group is trivial.
    Torus(u32),
}

impl GroupFactor {
    /// Validates the rank and rewrites D1 as a circle.
    pub fn normalized(self) -> Result<GroupFactor> {
        match self {
            GroupFactor::A(0) | GroupFactor::B(0) | GroupFactor::C(0) | GroupFactor::D(0) => {
                Err(LieError::Domain(format!("{self} has rank 0")))
            }
            GroupFactor::D(1) => Ok(GroupFactor::Torus(1)),
            other => Ok(other),
        }
    }

    pub fn rank(self) -> u32 {
        match self {
            GroupFactor::A(k)
            | GroupFactor::B(k)
            | GroupFactor::C(k)
            | GroupFactor::D(k)
            | GroupFactor::Torus(k) => k,
        }
    }

    /// The factor describing SO(k): trivial, circle, B_j or D_j.
    pub fn special_orthogonal(k: u32) -> Option<GroupFactor> {
        match k {
            0 | 1 => None,
            2 => Some(GroupFactor::Torus(1)),
            k if k % 2 == 1 => Some(GroupFactor::B(k / 2)),
            k => Some(GroupFactor::D(k / 2)),
        }
    }
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFactor::A(k) => write!(f, "A:{k}"),
            GroupFactor::B(k) => write!(f, "B:{k}"),
            GroupFactor::C(k) => write!(f, "C:{k}"),
            GroupFactor::D(k) => write!(f, "D:{k}"),
            GroupFactor::Torus(k) => write!(f, "T:{k}"),
        }
    }
}

/// A product of group factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupDescriptor {
    pub factors: Vec<GroupFactor>,
}

impl GroupDescriptor {
    pub fn new(factors: Vec<GroupFactor>) -> Self {
        GroupDescriptor { factors }
    }

    pub fn rank(&self) -> u32 {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    /// SO(k) as a descriptor (empty for k <= 1).
    pub fn special_orthogonal(k: u32) -> Self {
        GroupDescriptor::new(GroupFactor::special_orthogonal(k).into_iter().collect())
    }

    pub fn times(mut self, other: GroupDescriptor) -> Self {
        self.factors.extend(other.factors);
        self
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(GroupFactor::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for GroupDescriptor {
    type Err = LieError;

    /// Parses `FAM:RANK[,FAM:RANK...]` with FAM one of A, B, C, D, T.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (fam, rank) = part
                .split_once(':')
                .ok_or_else(|| LieError::Domain(format!("expected FAM:RANK, got {part:?}")))?;
            let k: u32 = rank
                .trim()
                .parse()
                .map_err(|_| LieError::Domain(format!("bad rank in {part:?}")))?;
            let factor = match fam.trim().to_ascii_uppercase().as_str() {
                "A" => GroupFactor::A(k),
                "B" => GroupFactor::B(k),
                "C" => GroupFactor::C(k),
                "D" => GroupFactor::D(k),
                "T" | "TORUS" => GroupFactor::Torus(k),
                other => return Err(LieError::Domain(format!("unknown family {other:?}"))),
            };
            factors.push(factor);
        }
        if factors.is_empty() {
            return Err(LieError::Domain("empty group descriptor".into()));
        }
        Ok(GroupDescriptor { factors })
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn factor_weyl_order(f: GroupFactor) -> Result<BigInt> {
    Ok(match f.normalized()? {
        GroupFactor::A(k) => factorial(k + 1),
        GroupFactor::B(k) | GroupFactor::C(k) => (BigInt::one() << k as usize) * factorial(k),
        GroupFactor::D(k) => (BigInt::one() << (k - 1) as usize) * factorial(k),
        GroupFactor::Torus(_) => BigInt::one(),
    })
}

/// Order of the Weyl group; multiplicative over factors.
pub fn weyl_order(g: &GroupDescriptor) -> Result<BigInt> {
    g.factors
        .iter()
        .try_fold(BigInt::one(), |acc, &f| Ok(acc * factor_weyl_order(f)?))
}

/// Spaces whose Euler characteristic the engine knows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceDescriptor {
    Sphere(u32),
    ComplexProjective(u32),
    QuaternionicProjective(u32),
    CayleyPlane,
    /// SO(p+m)/SO(p)xSO(m), p in {2, 3}.
    RealGrassmannian {
        p: u32,
        m: u32,
    },
    Product(Vec<SpaceDescriptor>),
}

impl SpaceDescriptor {
    pub fn dimension(&self) -> u64 {
        match self {
            SpaceDescriptor::Sphere(d) => *d as u64,
            SpaceDescriptor::ComplexProjective(m) => 2 * *m as u64,
            SpaceDescriptor::QuaternionicProjective(m) => 4 * *m as u64,
            SpaceDescriptor::CayleyPlane => 16,
            SpaceDescriptor::RealGrassmannian { p, m } => *p as u64 * *m as u64,
            SpaceDescriptor::Product(parts) => parts.iter().map(|s| s.dimension()).sum(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SpaceDescriptor::RealGrassmannian { p, m } => match p {
                2 if *m >= 1 => Ok(()),
                3 if *m >= 2 && m % 2 == 0 => Ok(()),
                3 => Err(LieError::Domain(format!(
                    "rank three Grassmannian needs even m >= 2, got m = {m}"
                ))),
                _ => Err(LieError::Domain(format!(
                    "Grassmannians are supported for p in {{2, 3}}, got p = {p}, m = {m}"
                ))),
            },
            SpaceDescriptor::Product(parts) if parts.is_empty() => {
                Err(LieError::Domain("empty product".into()))
            }
            SpaceDescriptor::Product(parts) => parts.iter().try_for_each(|s| s.validate()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDescriptor::Sphere(d) => write!(f, "S:{d}"),
            SpaceDescriptor::ComplexProjective(m) => write!(f, "CP:{m}"),
            SpaceDescriptor::QuaternionicProjective(m) => write!(f, "HP:{m}"),
            SpaceDescriptor::CayleyPlane => write!(f, "CaP2"),
            SpaceDescriptor::RealGrassmannian { p, m } => write!(f, "Gr:{p}:{m}"),
            SpaceDescriptor::Product(parts) => {
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_count(tok: &str, what: &str) -> Result<u32> {
    tok.parse()
        .map_err(|_| LieError::Domain(format!("bad {what} {tok:?}")))
}

fn parse_single(s: &str) -> Result<SpaceDescriptor> {
    let fields: Vec<&str> = s.split(':').map(str::trim).collect();
    let space = match fields.as_slice() {
        [kind, d] if kind.eq_ignore_ascii_case("S") => {
            SpaceDescriptor::Sphere(parse_count(d, "dimension")?)
        }
        [kind, m] if kind.eq_ignore_ascii_case("CP") => {
            SpaceDescriptor::ComplexProjective(parse_count(m, "dimension")?)
        }
        [kind, m] if kind.eq_ignore_ascii_case("HP") => {
            SpaceDescriptor::QuaternionicProjective(parse_count(m, "dimension")?)
        }
        [kind] if kind.eq_ignore_ascii_case("CaP2") => SpaceDescriptor::CayleyPlane,
        [kind, p, m] if kind.eq_ignore_ascii_case("Gr") => SpaceDescriptor::RealGrassmannian {
            p: parse_count(p, "p")?,
            m: parse_count(m, "m")?,
        },
        _ => {
            return Err(LieError::Domain(format!(
                "unknown space {s:?}; expected S:d, CP:m, HP:m, CaP2 or Gr:p:m"
            )))
        }
    };
    space.validate()?;
    Ok(space)
}

impl FromStr for SpaceDescriptor {
    type Err = LieError;

    /// Parses `S:d`, `CP:m`, `HP:m`, `CaP2`, `Gr:p:m`, or products joined by `x`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('x').map(str::trim).collect();
        if parts.len() == 1 {
            return parse_single(parts[0]);
        }
        let factors = parts
            .into_iter()
            .map(parse_single)
            .collect::<Result<Vec<_>>>()?;
        Ok(SpaceDescriptor::Product(factors))
    }
}

/// Closed-form Euler characteristic of the supported Grassmannians.
fn grassmannian_formula(p: u32, m: u32) -> BigInt {
    match (p, m % 2) {
        (2, 1) => BigInt::from(m + 1),
        _ => BigInt::from(m + 2),
    }
}

/// |W(SO(p+m))| / |W(SO(p) x SO(m))|; requires equal rank.
pub fn grassmannian_weyl_quotient(p: u32, m: u32) -> Result<BigInt> {
    let g = GroupDescriptor::special_orthogonal(p + m);
    let h = GroupDescriptor::special_orthogonal(p).times(GroupDescriptor::special_orthogonal(m));
    if g.rank() != h.rank() {
        return Err(LieError::Domain(format!(
            "SO({})/SO({p})xSO({m}) is not an equal-rank quotient",
            p + m
        )));
    }
    let (q, rem) = weyl_order(&g)?.div_rem(&weyl_order(&h)?);
    if !rem.is_zero() {
        return Err(LieError::Domain("Weyl orders do not divide".into()));
    }
    Ok(q)
}

/// Exact Euler characteristic. Grassmannians are computed twice, by the
/// closed formula and by the Weyl quotient, and must agree.
pub fn euler_characteristic(s: &SpaceDescriptor) -> Result<BigInt> {
    s.validate()?;
    Ok(match s {
        SpaceDescriptor::Sphere(d) => BigInt::from(if d % 2 == 0 { 2 } else { 0 }),
        SpaceDescriptor::ComplexProjective(m) | SpaceDescriptor::QuaternionicProjective(m) => {
            BigInt::from(*m as u64 + 1)
        }
        SpaceDescriptor::CayleyPlane => BigInt::from(CAYLEY_PLANE_EULER),
        SpaceDescriptor::RealGrassmannian { p, m } => {
            let formula = grassmannian_formula(*p, *m);
            let weyl = grassmannian_weyl_quotient(*p, *m)?;
            if formula != weyl {
                return Err(LieError::Inconsistent {
                    space: s.to_string(),
                    formula,
                    weyl,
                });
            }
            formula
        }
        SpaceDescriptor::Product(parts) => parts.iter().try_fold(BigInt::one(), |acc, part| {
            Ok(acc * euler_characteristic(part)?)
        })?,
    })
}
