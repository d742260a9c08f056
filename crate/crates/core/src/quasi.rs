//! Quasipolynomials with exact rational constituents.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::format_rational;

/// A function of `t` given by one polynomial per residue class of `t` mod the period.
///
/// `constituents[r]` holds ascending coefficients of the polynomial valid for
/// `t ≡ r (mod period)`. The period is always minimal and trailing zero
/// coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiPolynomial {
    period: usize,
    constituents: Vec<Vec<BigRational>>,
}

fn trim(mut c: Vec<BigRational>) -> Vec<BigRational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

impl QuasiPolynomial {
    /// Build from constituents indexed by residue, then fold to the minimal period.
    pub fn new(constituents: Vec<Vec<BigRational>>) -> Result<Self> {
        if constituents.is_empty() {
            return Err(Error::InvalidArgument("a quasipolynomial needs at least one constituent".into()));
        }
        let constituents: Vec<_> = constituents.into_iter().map(trim).collect();
        let p = constituents.len();
        let period = (1..=p)
            .filter(|d| p % d == 0)
            .find(|&d| (0..p).all(|r| constituents[r] == constituents[r % d]))
            .unwrap_or(p);
        let mut constituents = constituents;
        constituents.truncate(period);
        Ok(QuasiPolynomial { period, constituents })
    }

    pub fn polynomial(coeffs: Vec<BigRational>) -> Self {
        QuasiPolynomial { period: 1, constituents: vec![trim(coeffs)] }
    }

    pub fn from_integer_constituents(constituents: &[&[i64]]) -> Result<Self> {
        Self::new(
            constituents
                .iter()
                .map(|c| c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn constituents(&self) -> &[Vec<BigRational>] {
        &self.constituents
    }

    /// Constituent valid for `t ≡ residue (mod period)`.
    pub fn constituent(&self, residue: usize) -> &[BigRational] {
        &self.constituents[residue % self.period]
    }

    /// Constituent for the even (`t ≡ 0`) or odd (`t ≡ 1`) class of a period ≤ 2 quasipolynomial.
    pub fn parity_constituent(&self, odd: bool) -> &[BigRational] {
        self.constituent(usize::from(odd))
    }

    pub fn degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(|c| c.len().checked_sub(1)).max()
    }

    pub fn is_polynomial(&self) -> bool {
        self.period == 1
    }

    pub fn evaluate(&self, t: u64) -> BigRational {
        let residue = (t % self.period as u64) as usize;
        evaluate_polynomial(&self.constituents[residue], &BigRational::from_integer(BigInt::from(t)))
    }
}

pub fn evaluate_polynomial(coeffs: &[BigRational], t: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
}

/// Exact Lagrange interpolation through `(t, value)` points; returns ascending coefficients.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let k = points.len();
    let mut result = vec![BigRational::zero(); k];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (t - xj) / (xi - xj)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (d, c) in basis.iter().enumerate() {
            result[d] += c * &scale;
        }
    }
    trim(result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyStyle {
    /// `1+6t+15t²`, the format of the published tables.
    Compact,
    /// `1 + 6t + 15t²`
    Spaced,
    /// `1 + 6*t + 15*t^2`
    Ascii,
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Render ascending coefficients in the variable `t`.
pub fn format_polynomial(coeffs: &[BigRational], style: PolyStyle) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(match (style, negative) {
                (PolyStyle::Compact, false) => "+",
                (PolyStyle::Compact, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
        }
        let mut coef = format_rational(&abs);
        if !abs.is_integer() && k > 0 {
            coef = format!("({coef})");
        }
        let var = match (k, style) {
            (0, _) => String::new(),
            (1, _) => "t".to_string(),
            (_, PolyStyle::Ascii) => format!("t^{k}"),
            _ => format!("t{}", superscript(k)),
        };
        if k == 0 {
            out.push_str(&coef);
        } else {
            if !abs.is_one() {
                out.push_str(&coef);
                if style == PolyStyle::Ascii {
                    out.push('*');
                }
            }
            out.push_str(&var);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.period == 1 {
            return f.write_str(&format_polynomial(&self.constituents[0], PolyStyle::Spaced));
        }
        for (r, c) in self.constituents.iter().enumerate() {
            if r > 0 {
                f.write_str("; ")?;
            }
            write!(f, "t≡{r} mod {}: {}", self.period, format_polynomial(c, PolyStyle::Spaced))?;
        }
        Ok(())
    }
}
