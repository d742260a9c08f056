//! Positive roots and standard shifts of the classical root systems.
//!
//! Systems are indexed by the number of coordinates `n`: family `A` on `n`
//! coordinates is the rank `n - 1` system `A_{n-1}`, the others have rank `n`.
//! Row labels in the published tables index type `A` by coordinate count as
//! well, while polygon figures label it by rank; [`RootFamily::rank_label`] and
//! [`RootFamily::table_label`] give both.
//!
//! Note on the non-integral type-`A` cases: the standard permutahedron on `n`
//! coordinates is a half-integral translate exactly when `n` is even. Some
//! texts write this set as `{A_n : n even}`, which only agrees with the
//! coordinate-count convention, not with rank labels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{IntVector, RatVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
}

impl RootFamily {
    pub const ALL: [RootFamily; 4] = [RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D];

    pub fn rank(self, n: usize) -> usize {
        match self {
            RootFamily::A => n.saturating_sub(1),
            _ => n,
        }
    }

    /// Number of positive roots on `n` coordinates.
    pub fn root_count(self, n: usize) -> usize {
        match self {
            RootFamily::A => n * n.saturating_sub(1) / 2,
            RootFamily::B | RootFamily::C => n * n,
            RootFamily::D => n * n.saturating_sub(1),
        }
    }

    /// Label by rank, e.g. `A_2` for type `A` on 3 coordinates.
    pub fn rank_label(self, n: usize) -> String {
        format!("{self}_{}", self.rank(n))
    }

    /// Label by coordinate count, the convention of the tables.
    pub fn table_label(self, n: usize) -> String {
        format!("{self}_{n}")
    }

    /// Whether the standard permutahedron is a lattice polytope.
    pub fn is_integral(self, n: usize) -> bool {
        match self {
            RootFamily::A => n % 2 == 1,
            RootFamily::B => false,
            RootFamily::C | RootFamily::D => true,
        }
    }
}

/// Standalone form of [`RootFamily::is_integral`].
pub fn is_integral(family: RootFamily, n: usize) -> bool {
    family.is_integral(n)
}

impl fmt::Display for RootFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootFamily::A => "A",
            RootFamily::B => "B",
            RootFamily::C => "C",
            RootFamily::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for RootFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootFamily::A),
            "B" => Ok(RootFamily::B),
            "C" => Ok(RootFamily::C),
            "D" => Ok(RootFamily::D),
            other => Err(Error::InvalidArgument(format!("unknown root family {other:?}"))),
        }
    }
}

/// Shape of a classical positive root. Indices are 0-based with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootShape {
    /// `e_i - e_j`
    Difference(usize, usize),
    /// `e_i + e_j`
    Sum(usize, usize),
    /// `e_i`
    Short(usize),
    /// `2 e_i`
    Long(usize),
}

impl RootShape {
    pub fn to_vector(self, n: usize) -> IntVector {
        let mut v = vec![0i64; n];
        match self {
            RootShape::Difference(i, j) => {
                v[i] = 1;
                v[j] = -1;
            }
            RootShape::Sum(i, j) => {
                v[i] = 1;
                v[j] = 1;
            }
            RootShape::Short(i) => v[i] = 1,
            RootShape::Long(i) => v[i] = 2,
        }
        IntVector::from_i64(&v)
    }

    /// Recognise `e_i - e_j`, `e_i + e_j` (`i < j`), `e_i` or `2 e_i`.
    pub fn recognise(v: &IntVector) -> Result<RootShape> {
        let support: Vec<(usize, &BigInt)> =
            v.entries().iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        let one = BigInt::from(1);
        let shape = match support.as_slice() {
            [(i, x)] if **x == one => Some(RootShape::Short(*i)),
            [(i, x)] if **x == BigInt::from(2) => Some(RootShape::Long(*i)),
            [(i, x), (j, y)] if **x == one && **y == one => Some(RootShape::Sum(*i, *j)),
            [(i, x), (j, y)] if **x == one && **y == BigInt::from(-1) => Some(RootShape::Difference(*i, *j)),
            _ => None,
        };
        shape.ok_or_else(|| Error::NotARoot(v.to_string()))
    }
}

/// The positive roots of a classical system together with its standard shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRootSet {
    pub family: RootFamily,
    pub n: usize,
    pub roots: Vec<IntVector>,
    /// `-ρ = -½ Σ α`, so that `Π(Φ) = -ρ + Σ [0, α]` exactly.
    pub minus_rho: RatVector,
    /// `-ρ` reduced into `[0, 1)^n`; `Π(Φ)` is a lattice translate of `shift + Σ [0, α]`.
    pub shift: RatVector,
}

/// Root shapes in the fixed order: differences, sums, short, long; each by `(i, j)`.
pub fn root_shapes(family: RootFamily, n: usize) -> Vec<RootShape> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out: Vec<RootShape> = pairs.iter().map(|&(i, j)| RootShape::Difference(i, j)).collect();
    if family != RootFamily::A {
        out.extend(pairs.iter().map(|&(i, j)| RootShape::Sum(i, j)));
    }
    match family {
        RootFamily::B => out.extend((0..n).map(RootShape::Short)),
        RootFamily::C => out.extend((0..n).map(RootShape::Long)),
        _ => {}
    }
    out
}

pub fn positive_roots(family: RootFamily, n: usize) -> Result<PositiveRootSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("number of coordinates must be at least 1".into()));
    }
    let roots: Vec<IntVector> = root_shapes(family, n).into_iter().map(|s| s.to_vector(n)).collect();
    let minus_rho = minus_rho(&roots, n);
    let shift = minus_rho.fractional_part();
    Ok(PositiveRootSet { family, n, roots, minus_rho, shift })
}

fn minus_rho(roots: &[IntVector], n: usize) -> RatVector {
    let mut sum = IntVector::zero(n);
    for r in roots {
        sum = sum.add(r);
    }
    let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let entries = sum.entries().iter().map(|x| &half * x).collect();
    RatVector::new(entries)
}

pub fn standard_shift(family: RootFamily, n: usize) -> Result<RatVector> {
    Ok(positive_roots(family, n)?.shift)
}
