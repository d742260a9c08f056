//! Truncated power series with exact rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `Σ_{k ≤ order} a_k x^k`, arithmetic taken mod `x^{order+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<BigRational>,
}

impl RatSeries {
    pub fn zero(order: usize) -> Self {
        RatSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// Truncates or zero-pads `coeffs` to the given order.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RatSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `k! · a_k` for every `k`: the counts encoded by an exponential generating function.
    pub fn egf_counts(&self) -> Vec<BigRational> {
        let mut fact = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    fact *= k;
                }
                c * BigRational::from_integer(fact.clone())
            })
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `f(c·x)`.
    pub fn scale_arg(&self, c: &BigRational) -> Self {
        let mut power = BigRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power *= c;
                out
            })
            .collect();
        RatSeries { coeffs }
    }

    /// Even part `½(f(x) + f(-x))`.
    pub fn even_part(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| if k % 2 == 0 { a.clone() } else { BigRational::zero() })
            .collect();
        RatSeries { coeffs }
    }

    fn derivative(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * BigRational::from_integer(k.into()))
            .collect()
    }

    fn require_zero_constant(&self, what: &'static str) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::Series(what))
        }
    }

    /// `exp(f)` for `f(0) = 0`, from `g' = f' g`.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant("exp needs a series with zero constant term")?;
        let n = self.order();
        let df = self.derivative();
        let mut g = vec![BigRational::zero(); n + 1];
        g[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !df[j - 1].is_zero() {
                    acc += &df[j - 1] * &g[k - j];
                }
            }
            g[k] = acc / BigRational::from_integer(k.into());
        }
        Ok(RatSeries { coeffs: g })
    }

    /// `1 / (1 + u)` for `u(0) = 0`.
    pub fn inv1p(&self) -> Result<Self> {
        self.require_zero_constant("inv1p needs a series with zero constant term")?;
        let n = self.order();
        let mut h = vec![BigRational::zero(); n + 1];
        h[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc -= &self.coeffs[j] * &h[k - j];
                }
            }
            h[k] = acc;
        }
        Ok(RatSeries { coeffs: h })
    }

    /// `log(1 + u)` for `u(0) = 0`, integrating `u' / (1 + u)`.
    pub fn log1p(&self) -> Result<Self> {
        let n = self.order();
        let inv = self.inv1p()?;
        let du = RatSeries::from_coeffs(n, self.derivative());
        let q = &du * &inv;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = q.coeffs[k - 1].clone() / BigRational::from_integer(k.into());
        }
        Ok(RatSeries { coeffs })
    }

    /// `(1 + u)^e` for `u(0) = 0`, as `exp(e · log(1 + u))`.
    pub fn rpow1p(&self, e: &BigRational) -> Result<Self> {
        self.log1p()?.scale(e).exp()
    }
}

fn zip_with(a: &RatSeries, b: &RatSeries, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> RatSeries {
    let order = a.order().min(b.order());
    RatSeries { coeffs: (0..=order).map(|k| f(&a.coeffs[k], &b.coeffs[k])).collect() }
}

impl Add for &RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: &RatSeries) -> RatSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: &RatSeries) -> RatSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &RatSeries {
    type Output = RatSeries;
    fn neg(self) -> RatSeries {
        RatSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RatSeries { coeffs }
    }
}
