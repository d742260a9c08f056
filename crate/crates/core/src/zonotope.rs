//! Ehrhart quasipolynomials of almost-integral zonotopes and Coxeter permutahedra.
//!
//! Two routes are provided. The generic route sums, over linearly independent
//! subsets `W` of the generators, the relative volume of `W` times `t^|W|`,
//! counted only when the dilated flat `t·v + span(W)` meets the lattice. The
//! forest route specialises this to root systems, where independent subsets
//! are signed pseudoforests whose volume and lattice condition are read off the
//! component census.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, relative_volume, IntVector, LatticeFlat, RatVector};
use crate::quasi::QuasiPolynomial;
use crate::roots::{positive_roots, PositiveRootSet, RootFamily};
use crate::signed_graph::{graph_from_roots, Classification};

/// `shift + Σ_{u ∈ generators} [0, u]`. Generators form a multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopeSpec {
    generators: Vec<IntVector>,
    shift: RatVector,
}

impl ZonotopeSpec {
    pub fn new(generators: Vec<IntVector>, shift: RatVector) -> Result<Self> {
        let d = shift.dim();
        for (k, u) in generators.iter().enumerate() {
            if u.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: u.dim() });
            }
            if u.is_zero() {
                return Err(Error::InvalidArgument(format!("generator {k} is the zero vector")));
            }
        }
        Ok(ZonotopeSpec { generators, shift })
    }

    /// The integral permutahedron `Σ [0, α]`, or with `standard` the standard
    /// permutahedron `-ρ + Σ [0, α] = Σ [-α/2, α/2]`.
    pub fn from_roots(set: &PositiveRootSet, standard: bool) -> Self {
        let shift = if standard { set.minus_rho.clone() } else { RatVector::zero(set.n) };
        ZonotopeSpec { generators: set.roots.clone(), shift }
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn shift(&self) -> &RatVector {
        &self.shift
    }

    pub fn dim(&self) -> usize {
        self.shift.dim()
    }

    /// Parse the JSON input document:
    ///
    /// ```json
    /// { "generators": [[1, -1, 0], [0, 1, -1]], "shift": ["1/2", "0", "-1/3"] }
    /// ```
    ///
    /// Generator entries may be JSON integers or decimal strings (for values
    /// beyond 64 bits). `shift` defaults to the zero vector; its entries are
    /// rational strings or integers and are reduced on read. `dim` is only
    /// needed when there are no generators and no shift.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        let obj = doc.as_object().ok_or_else(|| Error::Parse("top level must be an object".into()))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "generators" | "shift" | "dim") {
                return Err(Error::Parse(format!("unknown field {key:?}")));
            }
        }
        let gens = obj
            .get("generators")
            .ok_or_else(|| Error::Parse("missing field \"generators\"".into()))?
            .as_array()
            .ok_or_else(|| Error::Parse("field \"generators\" must be a list".into()))?;
        let mut generators = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let entries = g
                .as_array()
                .ok_or_else(|| Error::Parse(format!("generators[{k}] must be a list of integers")))?;
            let mut v = Vec::with_capacity(entries.len());
            for (i, x) in entries.iter().enumerate() {
                v.push(json_integer(x).ok_or_else(|| {
                    Error::Parse(format!("generators[{k}][{i}]: expected an integer, found {x}"))
                })?);
            }
            generators.push(IntVector::new(v));
        }
        let declared_dim = match obj.get("dim") {
            None => None,
            Some(d) => Some(
                d.as_u64()
                    .and_then(|d| usize::try_from(d).ok())
                    .ok_or_else(|| Error::Parse("field \"dim\" must be a natural number".into()))?,
            ),
        };
        let shift = match obj.get("shift") {
            Some(s) => {
                let entries = s
                    .as_array()
                    .ok_or_else(|| Error::Parse("field \"shift\" must be a list of rationals".into()))?;
                let mut v = Vec::with_capacity(entries.len());
                for (i, x) in entries.iter().enumerate() {
                    let q = match x {
                        Value::String(s) => parse_rational(s).map_err(|e| Error::Parse(format!("shift[{i}]: {e}")))?,
                        Value::Number(_) => BigRational::from_integer(json_integer(x).ok_or_else(|| {
                            Error::Parse(format!("shift[{i}]: numbers must be integers; write fractions as \"p/q\""))
                        })?),
                        other => return Err(Error::Parse(format!("shift[{i}]: expected \"p/q\", found {other}"))),
                    };
                    v.push(q);
                }
                RatVector::new(v)
            }
            None => {
                let d = generators.first().map(IntVector::dim).or(declared_dim).ok_or_else(|| {
                    Error::Parse("cannot infer dimension: give \"shift\" or \"dim\"".into())
                })?;
                RatVector::zero(d)
            }
        };
        if let Some(d) = declared_dim {
            if d != shift.dim() {
                return Err(Error::Parse(format!("field \"dim\" is {d} but shift has {} entries", shift.dim())));
            }
        }
        Self::new(generators, shift).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let gens: Vec<Value> = self
            .generators
            .iter()
            .map(|g| Value::Array(g.entries().iter().map(bigint_json).collect()))
            .collect();
        let shift: Vec<Value> =
            self.shift.entries().iter().map(|x| Value::String(crate::linalg::format_rational(x))).collect();
        serde_json::json!({ "generators": gens, "shift": shift }).to_string()
    }
}

fn json_integer(x: &Value) -> Option<BigInt> {
    match x {
        Value::Number(n) => n.as_i64().map(BigInt::from).or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

/// Incremental echelon basis used to prune the subset search.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    /// Reduce `v` against the basis; `Some(extended)` if `v` is independent.
    fn extend(&self, v: &IntVector) -> Option<Echelon> {
        let mut v: Vec<BigInt> = v.entries().to_vec();
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let a = row[*pc].clone();
            let b = v[*pc].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * y;
            }
        }
        let pc = v.iter().position(|x| !x.is_zero())?;
        normalize(&mut v);
        let mut rows = self.rows.clone();
        // Keep every row reduced in the pivot columns of the others.
        for (_, row) in rows.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let a = v[pc].clone();
            let b = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                *x = &a * &*x - &b * y;
            }
            normalize(row);
        }
        rows.push((pc, v));
        Some(Echelon { rows })
    }
}

fn normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Depth-first stream of the linearly independent subsets of a generator
/// list, as sorted index vectors. The empty set comes first; every subset is
/// produced exactly once, in lexicographic preorder.
pub struct IndependentSubsets<'a> {
    generators: &'a [IntVector],
    current: Vec<usize>,
    // frame k: basis of current[..k] and the next candidate index to try
    frames: Vec<(Echelon, usize)>,
    started: bool,
}

pub fn independent_subsets(generators: &[IntVector]) -> IndependentSubsets<'_> {
    IndependentSubsets { generators, current: Vec::new(), frames: Vec::new(), started: false }
}

impl Iterator for IndependentSubsets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            self.frames.push((Echelon::default(), 0));
            return Some(Vec::new());
        }
        loop {
            let depth = self.frames.len();
            let (basis, next) = self.frames.last_mut()?;
            if *next >= self.generators.len() {
                self.frames.pop();
                if depth > 1 {
                    self.current.pop();
                }
                continue;
            }
            let j = *next;
            *next += 1;
            if let Some(extended) = basis.extend(&self.generators[j]) {
                self.current.push(j);
                self.frames.push((extended, j + 1));
                return Some(self.current.clone());
            }
        }
    }
}

/// Ehrhart quasipolynomial of `shift + Σ [0, u]`.
pub fn ehrhart_almost_integral(z: &ZonotopeSpec) -> Result<QuasiPolynomial> {
    let period = z
        .shift
        .denominator_lcm()
        .to_usize()
        .ok_or_else(|| Error::SizeGuard("shift denominators too large".into()))?;
    // residue r is evaluated at its smallest positive representative
    let reps: Vec<BigInt> = (0..period).map(|r| BigInt::from(if r == 0 { period } else { r })).collect();
    let max_len = z.generators.len().min(z.dim());
    let mut constituents = vec![vec![BigInt::zero(); max_len + 1]; period];
    let mut chi_cache: HashMap<Vec<BigRational>, Vec<bool>> = HashMap::new();

    for subset in independent_subsets(&z.generators) {
        let w: Vec<IntVector> = subset.iter().map(|&k| z.generators[k].clone()).collect();
        let volume = if w.is_empty() { BigInt::from(1) } else { relative_volume(&w)? };
        let flat = LatticeFlat::new(&z.shift, &w)?;
        let chis = chi_cache
            .entry(flat.pairings().to_vec())
            .or_insert_with(|| reps.iter().map(|t| flat.meets_lattice(t)).collect());
        for (r, &hit) in chis.iter().enumerate() {
            if hit {
                constituents[r][w.len()] += &volume;
            }
        }
    }
    QuasiPolynomial::new(
        constituents
            .into_iter()
            .map(|c| c.into_iter().map(BigRational::from_integer).collect())
            .collect(),
    )
}

/// Component profile of a forest: `(edge_count, tc, hc, lc, pc, all_trees_even)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestKey {
    pub edge_count: usize,
    pub tc: usize,
    pub hc: usize,
    pub lc: usize,
    pub pc: usize,
    pub all_trees_even: bool,
}

/// Number of `Φ`-forests per component profile.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForestCensus {
    pub n: usize,
    pub counts: BTreeMap<ForestKey, u64>,
}

impl ForestCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Forest counts by number of edges.
    pub fn by_edge_count(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.counts {
            *out.entry(k.edge_count).or_insert(0) += c;
        }
        out
    }

    /// `Σ 2^{pc + lc} t^{n - tc}` over all forests.
    pub fn integral_polynomial(&self) -> Vec<BigRational> {
        self.weighted_sum(|k| Some(k.pc + k.lc))
    }

    /// `Σ 2^{pc} t^{n - tc}` over all forests, or over those whose tree
    /// components are all even when `odd` is set.
    pub fn standard_constituent(&self, odd: bool) -> Vec<BigRational> {
        self.weighted_sum(|k| (!odd || k.all_trees_even).then_some(k.pc))
    }

    fn weighted_sum(&self, exponent: impl Fn(&ForestKey) -> Option<usize>) -> Vec<BigRational> {
        let mut coeffs = vec![BigInt::zero(); self.n + 1];
        for (key, &count) in &self.counts {
            if let Some(e) = exponent(key) {
                debug_assert_eq!(key.edge_count, self.n - key.tc);
                coeffs[self.n - key.tc] += BigInt::from(count) << e;
            }
        }
        coeffs.into_iter().map(BigRational::from_integer).collect()
    }
}

/// Largest `n` accepted by the exhaustive subset routes.
pub fn enumeration_limit(family: RootFamily) -> usize {
    match family {
        RootFamily::A => 9,
        _ => 7,
    }
}

pub fn check_enumeration_size(family: RootFamily, n: usize) -> Result<()> {
    let limit = enumeration_limit(family);
    if n > limit {
        return Err(Error::SizeGuard(format!(
            "exhaustive enumeration of {family} on {n} coordinates exceeds the limit n <= {limit}; use the egf route"
        )));
    }
    Ok(())
}

pub fn forest_census(family: RootFamily, n: usize) -> Result<ForestCensus> {
    check_enumeration_size(family, n)?;
    let set = positive_roots(family, n)?;
    let mut counts = BTreeMap::new();
    for subset in independent_subsets(&set.roots) {
        let roots: Vec<IntVector> = subset.iter().map(|&k| set.roots[k].clone()).collect();
        let graph = graph_from_roots(n, &roots)?;
        let Classification::Pseudoforest(s) = graph.classify() else {
            panic!("independent root subset {graph} is not a signed pseudoforest");
        };
        let key = ForestKey {
            edge_count: s.edge_count,
            tc: s.tc,
            hc: s.hc,
            lc: s.lc,
            pc: s.pc,
            all_trees_even: s.all_trees_even,
        };
        *counts.entry(key).or_insert(0) += 1;
    }
    Ok(ForestCensus { n, counts })
}

/// Ehrhart polynomial of the integral permutahedron `Σ [0, α]` (forest route).
pub fn ehrhart_integral_coxeter(family: RootFamily, n: usize) -> Result<QuasiPolynomial> {
    Ok(QuasiPolynomial::polynomial(forest_census(family, n)?.integral_polynomial()))
}

/// Ehrhart quasipolynomial of the standard permutahedron `Σ [-α/2, α/2]` (forest route).
pub fn ehrhart_standard_coxeter(family: RootFamily, n: usize) -> Result<QuasiPolynomial> {
    let census = forest_census(family, n)?;
    if family.is_integral(n) {
        return Ok(QuasiPolynomial::polynomial(census.integral_polynomial()));
    }
    QuasiPolynomial::new(vec![census.standard_constituent(false), census.standard_constituent(true)])
}

/// Ehrhart quasipolynomial of a root-system zonotope by the generic route.
pub fn ehrhart_coxeter_generic(family: RootFamily, n: usize, standard: bool) -> Result<QuasiPolynomial> {
    check_enumeration_size(family, n)?;
    let set = positive_roots(family, n)?;
    ehrhart_almost_integral(&ZonotopeSpec::from_roots(&set, standard))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(x: &[i64]) -> IntVector {
        IntVector::from_i64(x)
    }

    fn qp(c: &[&[i64]]) -> QuasiPolynomial {
        QuasiPolynomial::from_integer_constituents(c).unwrap()
    }

    #[test]
    fn subset_stream_examples() {
        let u = [iv(&[1]), iv(&[2])];
        let all: Vec<_> = independent_subsets(&u).collect();
        assert_eq!(all, vec![vec![], vec![0], vec![1]]);

        let d2 = positive_roots(RootFamily::D, 2).unwrap();
        let all: Vec<_> = independent_subsets(&d2.roots).collect();
        assert_eq!(all, vec![vec![], vec![0], vec![0, 1], vec![1]]);

        let a3 = positive_roots(RootFamily::A, 3).unwrap();
        assert_eq!(independent_subsets(&a3.roots).count(), 7);
    }

    #[test]
    fn segment_examples() {
        let z = ZonotopeSpec::new(vec![iv(&[1])], RatVector::zero(1)).unwrap();
        assert_eq!(ehrhart_almost_integral(&z).unwrap(), qp(&[&[1, 1]]));
        let z = ZonotopeSpec::new(vec![iv(&[1])], RatVector::from_ratios(&[(1, 2)])).unwrap();
        assert_eq!(ehrhart_almost_integral(&z).unwrap(), qp(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn b2_standard_generic() {
        let set = positive_roots(RootFamily::B, 2).unwrap();
        let z = ZonotopeSpec::from_roots(&set, true);
        assert_eq!(ehrhart_almost_integral(&z).unwrap(), qp(&[&[1, 4, 7], &[0, 2, 7]]));
    }

    #[test]
    fn forest_route_examples() {
        assert_eq!(ehrhart_integral_coxeter(RootFamily::B, 3).unwrap(), qp(&[&[1, 9, 39, 87]]));
        assert_eq!(ehrhart_integral_coxeter(RootFamily::C, 2).unwrap(), qp(&[&[1, 6, 14]]));
        assert_eq!(ehrhart_integral_coxeter(RootFamily::D, 4).unwrap(), qp(&[&[1, 12, 72, 280, 636]]));
        assert_eq!(ehrhart_standard_coxeter(RootFamily::A, 4).unwrap(), qp(&[&[1, 6, 15, 16], &[0, 0, 3, 16]]));
        assert_eq!(
            ehrhart_standard_coxeter(RootFamily::B, 4).unwrap(),
            qp(&[&[1, 16, 126, 608, 1553], &[0, 0, 12, 212, 1553]])
        );
        assert_eq!(ehrhart_standard_coxeter(RootFamily::C, 3).unwrap(), qp(&[&[1, 12, 66, 172]]));
        assert_eq!(ehrhart_standard_coxeter(RootFamily::A, 1).unwrap(), qp(&[&[1]]));
    }

    #[test]
    fn census_examples() {
        let a3 = forest_census(RootFamily::A, 3).unwrap();
        assert_eq!(a3.by_edge_count(), BTreeMap::from([(0, 1), (1, 3), (2, 3)]));

        let d2 = forest_census(RootFamily::D, 2).unwrap();
        assert_eq!(d2.total(), 4);
        let pseudo: u64 = d2.counts.iter().filter(|(k, _)| k.pc == 1).map(|(_, c)| c).sum();
        assert_eq!(pseudo, 1);
        assert_eq!(QuasiPolynomial::polynomial(d2.integral_polynomial()), qp(&[&[1, 2, 2]]));

        let b1 = forest_census(RootFamily::B, 1).unwrap();
        assert_eq!(b1.counts.len(), 2);
        assert_eq!(b1.counts.keys().filter(|k| k.hc == 1).count(), 1);
        assert_eq!(QuasiPolynomial::polynomial(b1.integral_polynomial()), qp(&[&[1, 1]]));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(forest_census(RootFamily::B, 8), Err(Error::SizeGuard(_))));
        assert!(matches!(ehrhart_coxeter_generic(RootFamily::A, 10, true), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn duplicate_generators_are_distinct_segments() {
        // [0,1] + [0,1] = [0,2]
        let z = ZonotopeSpec::new(vec![iv(&[1]), iv(&[1])], RatVector::zero(1)).unwrap();
        assert_eq!(ehrhart_almost_integral(&z).unwrap(), qp(&[&[1, 2]]));
    }

    #[test]
    fn json_input() {
        let z = ZonotopeSpec::from_json(r#"{"generators": [[1, 0], [0, "2"]], "shift": ["2/4", 1]}"#).unwrap();
        assert_eq!(z.generators(), &[iv(&[1, 0]), iv(&[0, 2])]);
        assert_eq!(z.shift(), &RatVector::from_ratios(&[(1, 2), (1, 1)]));
        assert_eq!(ZonotopeSpec::from_json(&z.to_json()).unwrap(), z);

        let z = ZonotopeSpec::from_json(r#"{"generators": [[1, -1]]}"#).unwrap();
        assert_eq!(z.shift(), &RatVector::zero(2));

        let err = ZonotopeSpec::from_json(r#"{"generators": [[1, 0.5]]}"#).unwrap_err();
        assert!(err.to_string().contains("generators[0][1]"), "{err}");
        let err = ZonotopeSpec::from_json(r#"{"generators": [[1]], "shift": ["1/0"]}"#).unwrap_err();
        assert!(err.to_string().contains("shift[0]"), "{err}");
        let err = ZonotopeSpec::from_json("{\n  \"generators\": [[1]\n").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
        let err = ZonotopeSpec::from_json(r#"{"generators": [[1, 0]], "shift": ["0"]}"#).unwrap_err();
        assert!(err.to_string().contains("dimension"), "{err}");
        let err = ZonotopeSpec::from_json(r#"{"generators": [[0]]}"#).unwrap_err();
        assert!(err.to_string().contains("zero vector"), "{err}");
    }
}
