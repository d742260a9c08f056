//! Reproduction of the published tables of Ehrhart (quasi)polynomials.
//!
//! Row labels follow the tables verbatim: type `A` rows are indexed by the
//! number of coordinates, so row `A_4` is the rank-3 system on 4 coordinates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quasi::{format_polynomial, PolyStyle, QuasiPolynomial};
use crate::roots::RootFamily;
use crate::zonotope::{ehrhart_integral_coxeter, ehrhart_standard_coxeter};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// Ehrhart polynomials of the integral permutahedra `Σ [0, α]`.
    Integral,
    /// Ehrhart quasipolynomials of the non-integral standard permutahedra.
    Standard,
}

impl Table {
    pub fn name(self) -> &'static str {
        match self {
            Table::Integral => "table1",
            Table::Standard => "table2",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Table::Integral => "Ehrhart polynomials of integral Coxeter permutahedra",
            Table::Standard => "Ehrhart quasipolynomials of the non-integral standard Coxeter permutahedra",
        }
    }
}

impl FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "table1" | "1" | "integral" => Ok(Table::Integral),
            "table2" | "2" | "standard" => Ok(Table::Standard),
            other => Err(Error::InvalidArgument(format!("unknown table {other:?}"))),
        }
    }
}

/// A published row: `(family, coordinates, constituents)`; standard rows list
/// the even constituent first.
type PublishedRow = (RootFamily, usize, &'static [&'static [i64]]);

const INTEGRAL_ROWS: &[PublishedRow] = &[
    (RootFamily::A, 1, &[&[1]]),
    (RootFamily::A, 2, &[&[1, 1]]),
    (RootFamily::A, 3, &[&[1, 3, 3]]),
    (RootFamily::A, 4, &[&[1, 6, 15, 16]]),
    (RootFamily::B, 1, &[&[1, 1]]),
    (RootFamily::B, 2, &[&[1, 4, 7]]),
    (RootFamily::B, 3, &[&[1, 9, 39, 87]]),
    (RootFamily::B, 4, &[&[1, 16, 126, 608, 1553]]),
    (RootFamily::C, 1, &[&[1, 2]]),
    (RootFamily::C, 2, &[&[1, 6, 14]]),
    (RootFamily::C, 3, &[&[1, 12, 66, 172]]),
    (RootFamily::C, 4, &[&[1, 20, 192, 1080, 3036]]),
    (RootFamily::D, 2, &[&[1, 2, 2]]),
    (RootFamily::D, 3, &[&[1, 6, 18, 32]]),
    (RootFamily::D, 4, &[&[1, 12, 72, 280, 636]]),
];

const STANDARD_ROWS: &[PublishedRow] = &[
    (RootFamily::A, 2, &[&[1, 1], &[0, 1]]),
    (RootFamily::A, 4, &[&[1, 6, 15, 16], &[0, 0, 3, 16]]),
    (RootFamily::B, 1, &[&[1, 1], &[0, 1]]),
    (RootFamily::B, 2, &[&[1, 4, 7], &[0, 2, 7]]),
    (RootFamily::B, 3, &[&[1, 9, 39, 87], &[0, 0, 6, 87]]),
    (RootFamily::B, 4, &[&[1, 16, 126, 608, 1553], &[0, 0, 12, 212, 1553]]),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReport {
    pub label: String,
    pub family: RootFamily,
    pub n: usize,
    pub published: QuasiPolynomial,
    pub computed: QuasiPolynomial,
}

impl RowReport {
    pub fn matches(&self) -> bool {
        self.published == self.computed
    }

    /// Mapping from the row label to the system it denotes.
    pub fn footnote(&self) -> String {
        format!(
            "{} = family {} on {} coordinate{} (root system {})",
            self.label,
            self.family,
            self.n,
            if self.n == 1 { "" } else { "s" },
            self.family.rank_label(self.n)
        )
    }
}

/// Render in the tables' format: `1+4t+7t²`, or `even: …, odd: …` for period 2.
pub fn render_row(q: &QuasiPolynomial) -> String {
    if q.period() == 1 {
        format_polynomial(q.constituent(0), PolyStyle::Compact)
    } else {
        format!(
            "{} for t even, {} for t odd",
            format_polynomial(q.constituent(0), PolyStyle::Compact),
            format_polynomial(q.constituent(1), PolyStyle::Compact)
        )
    }
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.matches() { "match" } else { "MISMATCH" };
        write!(f, "{:<4} {}  [{verdict}]", self.label, render_row(&self.computed))?;
        if !self.matches() {
            write!(f, "  published: {}", render_row(&self.published))?;
        }
        Ok(())
    }
}

/// Published rows of a table as `(label, family, n, quasipolynomial)`.
pub fn published_rows(table: Table) -> Vec<(String, RootFamily, usize, QuasiPolynomial)> {
    let rows = match table {
        Table::Integral => INTEGRAL_ROWS,
        Table::Standard => STANDARD_ROWS,
    };
    rows.iter()
        .map(|&(family, n, c)| {
            let q = QuasiPolynomial::from_integer_constituents(c).expect("published rows are well formed");
            (family.table_label(n), family, n, q)
        })
        .collect()
}

/// Recompute every row of a table by the forest route.
pub fn reproduce(table: Table) -> Result<Vec<RowReport>> {
    published_rows(table)
        .into_iter()
        .map(|(label, family, n, published)| {
            let computed = match table {
                Table::Integral => ehrhart_integral_coxeter(family, n)?,
                Table::Standard => ehrhart_standard_coxeter(family, n)?,
            };
            Ok(RowReport { label, family, n, published, computed })
        })
        .collect()
}
