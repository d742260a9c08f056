//! Exact linear algebra over the standard lattice `Z^d`.
//!
//! Everything here works on arbitrary-precision integers and rationals:
//! ranks, relative volumes of lattice parallelepipeds, saturated integer
//! kernels, and the test deciding whether a rational translate of a linear
//! subspace meets the integer lattice.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An integer vector in `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    /// The standard basis vector `e_i` (0-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Pairing with a rational vector.
    pub fn dot_rat(&self, other: &RatVector) -> BigRational {
        self.0
            .iter()
            .zip(other.entries())
            .map(|(a, b)| b * a)
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, c: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|x| x * c).collect())
    }

    /// Gcd of the entries (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Divide out the content and make the first nonzero entry positive.
    pub fn primitive_canonical(&self) -> IntVector {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        let mut out: Vec<BigInt> = self.0.iter().map(|x| x / &g).collect();
        if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in &mut out {
                *x = -&*x;
            }
        }
        IntVector(out)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A rational vector in `Q^d`, entries kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        // Ratio keeps itself reduced with a positive denominator.
        RatVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        RatVector(vec![BigRational::zero(); dim])
    }

    /// Build from `(numerator, denominator)` pairs. Panics on a zero denominator.
    pub fn from_ratios(entries: &[(i64, i64)]) -> Self {
        RatVector(
            entries
                .iter()
                .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    /// Every coordinate equal to `value`.
    pub fn constant(dim: usize, value: BigRational) -> Self {
        RatVector(vec![value; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn scaled(&self, t: &BigInt) -> RatVector {
        let t = BigRational::from_integer(t.clone());
        RatVector(self.0.iter().map(|x| x * &t).collect())
    }

    pub fn add_int(&self, z: &IntVector) -> RatVector {
        RatVector(
            self.0
                .iter()
                .zip(z.entries())
                .map(|(x, k)| x + BigRational::from_integer(k.clone()))
                .collect(),
        )
    }

    /// Representative of the class modulo `Z^d` with entries in `[0, 1)`.
    pub fn fractional_part(&self) -> RatVector {
        RatVector(self.0.iter().map(|x| x - x.floor()).collect())
    }

    /// Least common multiple of the denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Parse `"p/q"`, `"p"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Render a rational as an integer string or `"p/q"`.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn common_dim(vectors: &[IntVector]) -> Result<Option<usize>> {
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    let d = first.dim();
    for v in vectors {
        if v.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: v.dim() });
        }
    }
    Ok(Some(d))
}

/// Fraction-free row echelon form. Returns the nonzero rows and their pivot columns.
fn row_echelon(mut rows: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let a = pivot_row[c].clone();
            let b = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * y;
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Dimension of the rational span. Zero for the empty list.
pub fn rank(vectors: &[IntVector]) -> Result<usize> {
    let Some(d) = common_dim(vectors)? else {
        return Ok(0);
    };
    let rows = vectors.iter().map(|v| v.0.clone()).collect();
    Ok(row_echelon(rows, d).1.len())
}

/// Determinant of a square integer matrix by Bareiss elimination.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Relative volume of the half-open parallelepiped spanned by an independent
/// set `W`: the gcd of all maximal minors of the `d x |W|` matrix with columns `W`.
pub fn relative_volume(w: &[IntVector]) -> Result<BigInt> {
    let Some(d) = common_dim(w)? else {
        return Err(Error::EmptySet);
    };
    let k = w.len();
    if rank(w)? != k {
        return Err(Error::Dependent);
    }
    let mut g = BigInt::zero();
    for rows in combinations(d, k) {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&r| w.iter().map(|v| v.0[r].clone()).collect())
            .collect();
        g = g.gcd(&determinant(minor));
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// Row Hermite normal form of a full-row-rank integer matrix (positive
/// pivots, entries above each pivot reduced into `[0, pivot)`).
fn hermite_rows(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        // Euclid down the column until a single nonzero entry remains at row r.
        loop {
            let nonzero: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero
                .iter()
                .min_by(|&&a, &&b| rows[a][c].abs().cmp(&rows[b][c].abs()))
                .unwrap();
            rows.swap(r, p);
            if nonzero.len() == 1 {
                break;
            }
            let pivot_row = rows[r].clone();
            for row in rows.iter_mut().skip(r + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().take(r) {
            let q = row[c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    rows
}

/// A basis of the saturated lattice `Z^d ∩ span(W)^⊥`.
///
/// Computed by unimodular column operations that bring the matrix with rows
/// `W` to column echelon form; the transform columns matching zero columns
/// generate the full integer kernel. The result is returned in row Hermite
/// normal form so it is canonical.
pub fn integer_kernel_basis(w: &[IntVector], dim: usize) -> Result<Vec<IntVector>> {
    for v in w {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
        }
    }
    let mut a: Vec<Vec<BigInt>> = w.iter().map(|v| v.0.clone()).collect();
    // Columns of `u` are the transformed standard basis.
    let mut u: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    let mut pc = 0;
    for r in 0..a.len() {
        if pc == dim {
            break;
        }
        for c in pc + 1..dim {
            if a[r][c].is_zero() {
                continue;
            }
            let x = a[r][pc].clone();
            let y = a[r][c].clone();
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let xg = &x / &g;
            let yg = &y / &g;
            // [col_pc, col_c] <- [s*col_pc + t*col_c, -yg*col_pc + xg*col_c]
            for m in [&mut a, &mut u] {
                for row in m.iter_mut() {
                    let p = row[pc].clone();
                    let q = row[c].clone();
                    row[pc] = &s * &p + &t * &q;
                    row[c] = &xg * &q - &yg * &p;
                }
            }
        }
        if !a[r][pc].is_zero() {
            pc += 1;
        }
    }

    let basis: Vec<Vec<BigInt>> = (pc..dim).map(|c| u.iter().map(|row| row[c].clone()).collect()).collect();
    Ok(hermite_rows(basis, dim).into_iter().map(IntVector).collect())
}

/// The kernel-basis pairings of a flat `v + span(W)`; the flat dilated by `t`
/// meets `Z^d` iff every pairing times `t` is an integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeFlat {
    pairings: Vec<BigRational>,
}

impl LatticeFlat {
    pub fn new(v: &RatVector, w: &[IntVector]) -> Result<Self> {
        let kernel = integer_kernel_basis(w, v.dim())?;
        let pairings = kernel.iter().map(|f| {
                let x = f.dot_rat(v);
                &x - x.floor()
            })
            .collect();
        Ok(LatticeFlat { pairings })
    }

    /// Pairings reduced into `[0, 1)`.
    pub fn pairings(&self) -> &[BigRational] {
        &self.pairings
    }

    pub fn meets_lattice(&self, t: &BigInt) -> bool {
        let t = BigRational::from_integer(t.clone());
        self.pairings.iter().all(|p| (p * &t).is_integer())
    }
}

/// `1` iff `(t*v + span(W)) ∩ Z^d` is nonempty, else `0`.
pub fn chi(v: &RatVector, w: &[IntVector], t: u64) -> Result<u8> {
    if t == 0 {
        return Err(Error::ZeroDilation);
    }
    let flat = LatticeFlat::new(v, w)?;
    Ok(u8::from(flat.meets_lattice(&BigInt::from(t))))
}
