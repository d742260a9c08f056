//! Brute-force ground truth: lattice points of dilated zonotopes by box scan,
//! and labeled structures by exhaustive edge-set enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::egf::StructureKind;
use crate::error::{Error, Result};
use crate::linalg::{combinations, integer_kernel_basis, rank, IntVector};
use crate::signed_graph::{ComponentKind, EdgeItem, SignedGraph};
use crate::zonotope::ZonotopeSpec;

/// Default ceiling on the number of candidate points in a box scan.
pub const DEFAULT_MAX_BOX: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `⟨functional, p⟩ = value`, but the affine hull requires `required`.
    AffineHull { functional: IntVector, value: BigRational, required: BigRational },
    /// `⟨normal, p⟩ = value > bound`.
    Facet { normal: IntVector, value: BigRational, bound: BigRational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub verdict: bool,
    /// Violated constraints; nonempty exactly when the verdict is negative.
    pub witness: Vec<Violation>,
}

/// Half-space and affine-hull description of a zonotope, reusable across
/// dilations.
///
/// Facet normals of `Σ [0, u]` inside its affine hull are the primitive
/// normals of hyperplanes spanned by generator subsets of corank one; the
/// support value in direction `h` is `Σ max(⟨h, u⟩, 0)`.
#[derive(Clone, Debug)]
pub struct ZonotopeHalfspaces {
    zonotope: ZonotopeSpec,
    // (f, ⟨f, v⟩): p must satisfy ⟨f, p⟩ = t⟨f, v⟩
    hull: Vec<(IntVector, BigRational)>,
    // (h, ⟨h, v⟩, support): p must satisfy ⟨h, p⟩ ≤ t⟨h, v⟩ + t·support
    facets: Vec<(IntVector, BigRational, BigInt)>,
}

impl ZonotopeHalfspaces {
    pub fn new(z: &ZonotopeSpec) -> Result<Self> {
        let d = z.dim();
        let gens = z.generators();
        let kernel = integer_kernel_basis(gens, d)?;
        let hull = kernel.iter().map(|f| (f.clone(), f.dot_rat(z.shift()))).collect();

        let r = rank(gens)?;
        let mut normals = BTreeSet::new();
        if r > 0 {
            for subset in combinations(gens.len(), r - 1) {
                let mut rows: Vec<IntVector> = subset.iter().map(|&k| gens[k].clone()).collect();
                if rank(&rows)? != r - 1 {
                    continue;
                }
                rows.extend(kernel.iter().cloned());
                let normal = integer_kernel_basis(&rows, d)?;
                debug_assert_eq!(normal.len(), 1);
                normals.insert(normal[0].primitive_canonical());
            }
        }
        let mut facets = Vec::with_capacity(2 * normals.len());
        for h in normals {
            for h in [h.neg(), h] {
                let support: BigInt = gens
                    .iter()
                    .map(|u| h.dot(u))
                    .filter(|x| x > &BigInt::zero())
                    .sum();
                facets.push((h.clone(), h.dot_rat(z.shift()), support));
            }
        }
        Ok(ZonotopeHalfspaces { zonotope: z.clone(), hull, facets })
    }

    /// Number of oriented facet inequalities.
    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn contains(&self, t: u64, p: &IntVector) -> Result<MembershipCertificate> {
        if p.dim() != self.zonotope.dim() {
            return Err(Error::DimensionMismatch { expected: self.zonotope.dim(), found: p.dim() });
        }
        let tq = BigRational::from_integer(t.into());
        let mut witness = Vec::new();
        for (f, fv) in &self.hull {
            let value = BigRational::from_integer(f.dot(p));
            let required = fv * &tq;
            if value != required {
                witness.push(Violation::AffineHull { functional: f.clone(), value, required });
            }
        }
        for (h, hv, support) in &self.facets {
            let value = BigRational::from_integer(h.dot(p));
            let bound = (hv + BigRational::from_integer(support.clone())) * &tq;
            if value > bound {
                witness.push(Violation::Facet { normal: h.clone(), value, bound });
            }
        }
        Ok(MembershipCertificate { verdict: witness.is_empty(), witness })
    }

    /// Integer form of the constraints at dilation `t`: equalities `⟨f, p⟩ = c`
    /// and inequalities `⟨h, p⟩ ≤ b`. `None` if some equality has no integer
    /// solution (the flat misses the lattice) or a value leaves machine range.
    fn compile(&self, t: u64) -> Option<Option<CompiledConstraints>> {
        let tq = BigRational::from_integer(t.into());
        let to_row = |v: &IntVector| v.entries().iter().map(ToPrimitive::to_i64).collect::<Option<Vec<i64>>>();
        let mut equalities = Vec::new();
        for (f, fv) in &self.hull {
            let rhs = fv * &tq;
            if !rhs.is_integer() {
                return Some(None);
            }
            equalities.push((to_row(f)?, rhs.to_integer().to_i128()?));
        }
        let mut inequalities = Vec::new();
        for (h, hv, support) in &self.facets {
            let bound = (hv + BigRational::from_integer(support.clone())) * &tq;
            inequalities.push((to_row(h)?, bound.floor().to_integer().to_i128()?));
        }
        Some(Some(CompiledConstraints { equalities, inequalities }))
    }
}

struct CompiledConstraints {
    equalities: Vec<(Vec<i64>, i128)>,
    inequalities: Vec<(Vec<i64>, i128)>,
}

impl CompiledConstraints {
    fn admits(&self, p: &[i64]) -> bool {
        let dot = |row: &[i64]| row.iter().zip(p).map(|(&a, &b)| i128::from(a) * i128::from(b)).sum::<i128>();
        self.equalities.iter().all(|(row, c)| dot(row) == *c) && self.inequalities.iter().all(|(row, b)| dot(row) <= *b)
    }
}

/// Membership of `p` in `t·v + Σ [0, t·u]`.
pub fn zonotope_contains(z: &ZonotopeSpec, t: u64, p: &IntVector) -> Result<MembershipCertificate> {
    if t == 0 {
        return Err(Error::ZeroDilation);
    }
    ZonotopeHalfspaces::new(z)?.contains(t, p)
}

/// Exact coordinate bounds of the dilated zonotope, rounded inward to integers.
fn bounding_box(z: &ZonotopeSpec, t: u64) -> Vec<(BigInt, BigInt)> {
    let tq = BigRational::from_integer(t.into());
    (0..z.dim())
        .map(|i| {
            let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
            for u in z.generators() {
                let x = &u.entries()[i];
                if x.is_negative() {
                    lo += x;
                } else {
                    hi += x;
                }
            }
            let v = &z.shift().entries()[i];
            let lo = ((v + BigRational::from_integer(lo)) * &tq).ceil().to_integer();
            let hi = ((v + BigRational::from_integer(hi)) * &tq).floor().to_integer();
            (lo, hi)
        })
        .collect()
}

/// `|t·(v + Σ [0, u]) ∩ Z^d|` by scanning the bounding box.
///
/// The box is the exact coordinate range of the dilated zonotope; scans with
/// more than `max_box` candidate points are refused.
pub fn count_points(z: &ZonotopeSpec, t: u64, max_box: u128) -> Result<u64> {
    if t == 0 {
        return Err(Error::ZeroDilation);
    }
    let bounds = bounding_box(z, t);
    let mut volume: u128 = 1;
    for (lo, hi) in &bounds {
        if lo > hi {
            return Ok(0);
        }
        let width = (hi - lo + 1u32).to_u128().unwrap_or(u128::MAX);
        volume = volume.saturating_mul(width);
    }
    if volume > max_box {
        return Err(Error::SizeGuard(format!(
            "bounding box has {volume} candidate points, above the ceiling {max_box}"
        )));
    }
    let halfspaces = ZonotopeHalfspaces::new(z)?;
    let d = z.dim();
    let lo: Option<Vec<i64>> = bounds.iter().map(|(l, _)| l.to_i64()).collect();
    let hi: Option<Vec<i64>> = bounds.iter().map(|(_, h)| h.to_i64()).collect();

    let compiled = match (lo, hi, halfspaces.compile(t)) {
        (_, _, Some(None)) => return Ok(0),
        (Some(lo), Some(hi), Some(Some(c))) => Some((lo, hi, c)),
        _ => None,
    };
    let mut count = 0u64;
    if d == 0 {
        return Ok(u64::from(halfspaces.contains(t, &IntVector::new(Vec::new()))?.verdict));
    }
    match compiled {
        Some((lo, hi, constraints)) => {
            let mut p = lo.clone();
            loop {
                if constraints.admits(&p) {
                    count += 1;
                }
                if !advance(&mut p, &lo, &hi) {
                    break;
                }
            }
        }
        None => {
            let lo: Vec<BigInt> = bounds.iter().map(|(l, _)| l.clone()).collect();
            let hi: Vec<BigInt> = bounds.iter().map(|(_, h)| h.clone()).collect();
            let mut p = lo.clone();
            loop {
                if halfspaces.contains(t, &IntVector::new(p.clone()))?.verdict {
                    count += 1;
                }
                if !advance(&mut p, &lo, &hi) {
                    break;
                }
            }
        }
    }
    Ok(count)
}

/// Odometer step over a box; `false` once the last point has been visited.
fn advance<T>(p: &mut [T], lo: &[T], hi: &[T]) -> bool
where
    T: Clone + PartialOrd + std::ops::AddAssign + num_traits::One,
{
    for i in (0..p.len()).rev() {
        if p[i] < hi[i] {
            p[i] += T::one();
            return true;
        }
        p[i] = lo[i].clone();
    }
    false
}

/// Largest `n` accepted by [`brute_force_structures`].
pub fn structure_limit(kind: StructureKind) -> usize {
    if kind.is_signed() {
        4
    } else {
        5
    }
}

/// Count connected labeled structures of `kind` on `n` vertices by
/// enumerating every edge set over the allowed item types.
pub fn brute_force_structures(kind: StructureKind, n: usize) -> Result<u64> {
    let limit = structure_limit(kind);
    if n > limit {
        return Err(Error::SizeGuard(format!("{kind} enumeration is limited to n <= {limit}")));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut items = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            items.push(EdgeItem::Positive(i, j));
            if kind.is_signed() {
                items.push(EdgeItem::Negative(i, j));
            }
        }
    }
    match kind {
        StructureKind::SignedHalfedgeTree => items.extend((0..n).map(EdgeItem::Halfedge)),
        StructureKind::SignedLoopTree => items.extend((0..n).map(EdgeItem::NegativeLoop)),
        _ => {}
    }
    // trees have n - 1 items, every other connected kind has n
    let size = if matches!(kind, StructureKind::Tree | StructureKind::SignedTree) { n - 1 } else { n };
    let mut count = 0;
    for chosen in combinations(items.len(), size) {
        let g = SignedGraph::new(n, chosen.iter().map(|&k| items[k]))?;
        let comps = g.components();
        let [c] = comps.as_slice() else { continue };
        let hit = match kind {
            StructureKind::Tree | StructureKind::SignedTree => c.kind() == Some(ComponentKind::Tree),
            StructureKind::Pseudotree => c.cycle_rank == 1 && c.halfedges == 0 && c.loops == 0,
            StructureKind::SignedPseudotree => c.kind() == Some(ComponentKind::Pseudotree),
            StructureKind::SignedHalfedgeTree => c.kind() == Some(ComponentKind::HalfedgeTree),
            StructureKind::SignedLoopTree => c.kind() == Some(ComponentKind::LoopTree),
        };
        if hit {
            count += 1;
        }
    }
    Ok(count)
}
