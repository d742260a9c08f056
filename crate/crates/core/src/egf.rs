//! Exponential generating functions for labeled (signed) trees and for the
//! Ehrhart values of Coxeter permutahedra, built from the Lambert `W` series.
//!
//! The component series, with `W = W(-x)` for the unsigned ones and
//! `W = W(-2x)` for the signed ones:
//!
//! | series | counts | formula |
//! |--------|--------|---------|
//! | `T`  | trees, `n^{n-2}` | `-W - W²/2` |
//! | `P`  | unicyclic graphs | `W/2 - W²/4 - log(1+W)/2` |
//! | `ST` | signed trees, `2^{n-1} n^{n-2}` | `-W/2 - W²/4` |
//! | `SP` | signed pseudotrees | `(W - log(1+W))/4` |
//! | `SH = SL` | halfedge/loop trees, `(2n)^{n-1}` | `-W/2` |
//!
//! `SP` follows from `sp_n = 2^{n-1} p_n + st_n (n-1)/2`: each pseudotree with
//! a cycle of length ≥ 3 has `2^{n-1}` unbalanced sign patterns, and each
//! 2-cycle arises from a signed tree by doubling one edge with opposite sign.
//! The alternative `W/4 - log(1+W)` gives `sp_1 = 3/2` and is wrong.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::roots::RootFamily;
use crate::series::RatSeries;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// `W(x) = Σ_{n≥1} (-n)^{n-1} x^n / n!`, the compositional inverse of `x e^x`.
pub fn lambert_w(order: usize) -> Result<RatSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("Lambert W needs truncation order >= 1".into()));
    }
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut fact = BigInt::one();
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        fact *= n;
        let minus_n = BigInt::from(-(n as i64));
        *c = BigRational::new(num_traits::pow(minus_n, n - 1), fact.clone());
    }
    Ok(RatSeries::from_coeffs(order, coeffs))
}

/// Exponential generating functions of the connected component types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentEgfs {
    pub tree: RatSeries,
    pub pseudotree: RatSeries,
    pub signed_tree: RatSeries,
    pub signed_pseudotree: RatSeries,
    /// Also the series of signed loop-trees.
    pub signed_halfedge_tree: RatSeries,
}

impl ComponentEgfs {
    pub fn signed_loop_tree(&self) -> &RatSeries {
        &self.signed_halfedge_tree
    }

    pub fn get(&self, kind: StructureKind) -> &RatSeries {
        match kind {
            StructureKind::Tree => &self.tree,
            StructureKind::Pseudotree => &self.pseudotree,
            StructureKind::SignedTree => &self.signed_tree,
            StructureKind::SignedPseudotree => &self.signed_pseudotree,
            StructureKind::SignedHalfedgeTree => &self.signed_halfedge_tree,
            StructureKind::SignedLoopTree => self.signed_loop_tree(),
        }
    }
}

pub fn component_egfs(order: usize) -> Result<ComponentEgfs> {
    let w = lambert_w(order)?;
    let w1 = w.scale_arg(&rat(-1, 1));
    let w2 = w.scale_arg(&rat(-2, 1));
    let w1sq = &w1 * &w1;
    let w2sq = &w2 * &w2;
    let log1 = w1.log1p()?;
    let log2 = w2.log1p()?;

    let tree = &(-&w1) - &w1sq.scale(&rat(1, 2));
    let pseudotree = &(&w1.scale(&rat(1, 2)) - &w1sq.scale(&rat(1, 4))) - &log1.scale(&rat(1, 2));
    let signed_tree = &w2.scale(&rat(-1, 2)) - &w2sq.scale(&rat(1, 4));
    let signed_pseudotree = (&w2 - &log2).scale(&rat(1, 4));
    let signed_halfedge_tree = w2.scale(&rat(-1, 2));
    Ok(ComponentEgfs { tree, pseudotree, signed_tree, signed_pseudotree, signed_halfedge_tree })
}

/// Labeled connected structures counted by the component series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Tree,
    Pseudotree,
    SignedTree,
    SignedHalfedgeTree,
    SignedLoopTree,
    SignedPseudotree,
}

impl StructureKind {
    pub const ALL: [StructureKind; 6] = [
        StructureKind::Tree,
        StructureKind::Pseudotree,
        StructureKind::SignedTree,
        StructureKind::SignedHalfedgeTree,
        StructureKind::SignedLoopTree,
        StructureKind::SignedPseudotree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Tree => "tree",
            StructureKind::Pseudotree => "pseudotree",
            StructureKind::SignedTree => "signed_tree",
            StructureKind::SignedHalfedgeTree => "signed_halfedge_tree",
            StructureKind::SignedLoopTree => "signed_loop_tree",
            StructureKind::SignedPseudotree => "signed_pseudotree",
        }
    }

    pub fn is_signed(self) -> bool {
        !matches!(self, StructureKind::Tree | StructureKind::Pseudotree)
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        StructureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown structure kind {s:?}")))
    }
}

/// `n! [x^n]` of a component series for `n = 1..=nmax`.
pub fn structure_counts(kind: StructureKind, nmax: usize) -> Result<Vec<BigInt>> {
    if nmax == 0 {
        return Ok(Vec::new());
    }
    let egfs = component_egfs(nmax)?;
    egfs.get(kind).egf_counts().into_iter().skip(1).map(into_integer).collect()
}

fn into_integer(x: BigRational) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::InvalidArgument(format!("non-integral series count {x}")))
    }
}

fn check_t(t: u64) -> Result<BigRational> {
    if t == 0 {
        return Err(Error::ZeroDilation);
    }
    Ok(BigRational::from_integer(t.into()))
}

/// `Σ_n ehr_{Π^Z}(t) x^n / n!` assembled from the component series.
pub fn integral_egf(family: RootFamily, t: u64, order: usize) -> Result<RatSeries> {
    let tq = check_t(t)?;
    let inv_t = tq.recip();
    let c = component_egfs(order.max(1))?;
    let exponent = match family {
        RootFamily::A => c.tree.scale_arg(&tq).scale(&inv_t),
        _ => {
            let mut e = &c.signed_pseudotree.scale_arg(&tq).scale(&rat(2, 1))
                + &c.signed_tree.scale_arg(&tq).scale(&inv_t);
            match family {
                RootFamily::B => e = &e + &c.signed_halfedge_tree.scale_arg(&tq),
                RootFamily::C => e = &e + &c.signed_loop_tree().scale_arg(&tq).scale(&rat(2, 1)),
                _ => {}
            }
            e
        }
    };
    RatSeries::from_coeffs(order, exponent.coeffs().to_vec()).exp()
}

/// `Σ_n ehr_{Π}(t) x^n / n!` for odd `t`, families `A` (even `n` only) and `B`.
pub fn standard_odd_egf(family: RootFamily, t: u64, order: usize) -> Result<RatSeries> {
    let tq = check_t(t)?;
    if t.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("odd-part series needs odd t, got {t}")));
    }
    let inv_t = tq.recip();
    let c = component_egfs(order.max(1))?;
    let exponent = match family {
        RootFamily::A => c.tree.even_part().scale_arg(&tq).scale(&inv_t),
        RootFamily::B => {
            &(&c.signed_pseudotree.scale_arg(&tq).scale(&rat(2, 1))
                + &c.signed_tree.even_part().scale_arg(&tq).scale(&inv_t))
                + &c.signed_halfedge_tree.scale_arg(&tq)
        }
        RootFamily::C | RootFamily::D => {
            return Err(Error::InvalidArgument(format!(
                "standard {family} permutahedra are integral; use the integral series"
            )))
        }
    };
    RatSeries::from_coeffs(order, exponent.coeffs().to_vec()).exp()
}

/// `ehr_{Π^Z(Φ)}(t)` for `n = 0..=nmax` coordinates.
pub fn egf_ehrhart_values(family: RootFamily, t: u64, nmax: usize) -> Result<Vec<BigInt>> {
    integral_egf(family, t, nmax)?.egf_counts().into_iter().map(into_integer).collect()
}

/// `ehr_{Π(Φ)}(t)` at odd `t` for the non-integral standard cases, as `(n, value)`.
/// Type `A` yields even `n` only (odd `n` is integral).
pub fn egf_ehrhart_standard_odd(family: RootFamily, t: u64, nmax: usize) -> Result<Vec<(usize, BigInt)>> {
    let counts = standard_odd_egf(family, t, nmax)?.egf_counts();
    counts
        .into_iter()
        .enumerate()
        .filter(|(n, _)| family != RootFamily::A || n % 2 == 0)
        .map(|(n, v)| Ok((n, into_integer(v)?)))
        .collect()
}

/// Closed forms in `W` of the integral series, independent of the component assembly.
pub fn integral_egf_closed_form(family: RootFamily, t: u64, order: usize) -> Result<RatSeries> {
    let tq = check_t(t)?;
    let w = lambert_w(order.max(1))?;
    let two_t = &tq * rat(2, 1);
    let four_t = &tq * rat(4, 1);
    if family == RootFamily::A {
        let wt = w.scale_arg(&-&tq);
        let e = &wt.scale(&-tq.recip()) - &(&wt * &wt).scale(&two_t.recip());
        return RatSeries::from_coeffs(order, e.coeffs().to_vec()).exp();
    }
    let w2 = w.scale_arg(&-&two_t);
    let lin = match family {
        RootFamily::B => -two_t.recip(),
        RootFamily::C => (-&tq - rat(1, 1)) / &two_t,
        _ => (&tq - rat(1, 1)) / &two_t,
    };
    let e = &w2.scale(&lin) - &(&w2 * &w2).scale(&four_t.recip());
    let e = RatSeries::from_coeffs(order, e.coeffs().to_vec());
    let root = RatSeries::from_coeffs(order, w2.coeffs().to_vec()).rpow1p(&rat(-1, 2))?;
    Ok(&e.exp()? * &root)
}

/// Closed forms in `W(±tx)` of the odd-`t` series for families `A` and `B`.
pub fn standard_odd_egf_closed_form(family: RootFamily, t: u64, order: usize) -> Result<RatSeries> {
    let tq = check_t(t)?;
    let w = lambert_w(order.max(1))?;
    let trunc = |s: RatSeries| RatSeries::from_coeffs(order, s.coeffs().to_vec());
    match family {
        RootFamily::A => {
            let wm = w.scale_arg(&-&tq);
            let wp = w.scale_arg(&tq);
            let lin = (&wm + &wp).scale(&-(&tq * rat(2, 1)).recip());
            let sq = (&(&wm * &wm) + &(&wp * &wp)).scale(&-(&tq * rat(4, 1)).recip());
            trunc(&lin + &sq).exp()
        }
        RootFamily::B => {
            let two_t = &tq * rat(2, 1);
            let wm = w.scale_arg(&-&two_t);
            let wp = w.scale_arg(&two_t);
            let lin = (&wm + &wp).scale(&-(&tq * rat(4, 1)).recip());
            let sq = (&(&wm * &wm) + &(&wp * &wp)).scale(&-(&tq * rat(8, 1)).recip());
            let root = trunc(wm).rpow1p(&rat(-1, 2))?;
            Ok(&trunc(&lin + &sq).exp()? * &root)
        }
        _ => Err(Error::InvalidArgument(format!("no odd-part series for family {family}"))),
    }
}
