//! The result document shared by every output format.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use coxeter_ehrhart::linalg::{format_rational, parse_rational};
use coxeter_ehrhart::quasi::{format_polynomial, PolyStyle};

/// Everything a command reports. Human, JSON and CSV output all render this value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub request: Request,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<usize>,
    /// Ascending coefficients per residue class, as `"p/q"` or integer strings.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constituents: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub interpolated: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub evaluations: Vec<Evaluation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<TableRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sequence: Vec<SequenceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootListing>,
    /// `Some(false)` when a verification or table comparison found a disagreement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    pub note: String,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Request {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Label by rank, e.g. `A_2` for type A on 3 coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_label: Option<String>,
    /// Label by coordinate count, as in the published tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub t: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub t: u64,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub family: String,
    pub n: usize,
    pub computed: Vec<Vec<String>>,
    pub published: Vec<Vec<String>>,
    pub matches: bool,
    pub footnote: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceEntry {
    pub n: usize,
    pub series: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootListing {
    pub roots: Vec<Vec<String>>,
    pub minus_rho: Vec<String>,
    pub shift: Vec<String>,
    pub integral: bool,
}

pub fn rational_strings(coeffs: &[BigRational]) -> Vec<String> {
    coeffs.iter().map(format_rational).collect()
}

fn parse_all(coeffs: &[String]) -> Vec<BigRational> {
    coeffs.iter().map(|c| parse_rational(c).expect("document holds well-formed rationals")).collect()
}

fn polynomial(coeffs: &[String], style: PolyStyle) -> String {
    format_polynomial(&parse_all(coeffs), style)
}

/// `X for t even, Y for t odd`, or `t ≡ r mod p: …` lines for longer periods.
fn constituent_lines(constituents: &[Vec<String>], style: PolyStyle) -> Vec<String> {
    match constituents.len() {
        1 => vec![polynomial(&constituents[0], style)],
        2 => vec![
            format!("t even: {}", polynomial(&constituents[0], style)),
            format!("t odd:  {}", polynomial(&constituents[1], style)),
        ],
        p => constituents
            .iter()
            .enumerate()
            .map(|(r, c)| format!("t ≡ {r} mod {p}: {}", polynomial(c, style)))
            .collect(),
    }
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let req = &self.request;
        if let (Some(table_label), Some(rank_label), Some(family), Some(n)) =
            (&req.table_label, &req.rank_label, &req.family, req.n)
        {
            let coords = if n == 1 { "coordinate" } else { "coordinates" };
            let _ = write!(out, "{table_label}: family {family} on {n} {coords}, root system {rank_label}");
            if let Some(v) = &req.variant {
                let _ = write!(out, ", {v} variant");
            }
            if let Some(r) = &req.route {
                let _ = write!(out, ", {r} route");
            }
            out.push('\n');
        }
        if let Some(input) = &req.input {
            let _ = writeln!(out, "zonotope {input}");
        }
        if !self.constituents.is_empty() {
            let period = self.period.unwrap_or(self.constituents.len());
            let tag = if self.interpolated { " (interpolated)" } else { "" };
            let lines = constituent_lines(&self.constituents, PolyStyle::Spaced);
            if period == 1 {
                let _ = writeln!(out, "ehr(t) = {}{tag}", lines[0]);
            } else {
                let _ = writeln!(out, "period {period}{tag}");
                for line in lines {
                    let _ = writeln!(out, "  {line}");
                }
            }
        }
        for e in &self.evaluations {
            let _ = write!(out, "ehr({}) = {}", e.t, e.value);
            if let Some(o) = &e.oracle {
                let verdict = if *o == e.value { "agrees" } else { "DISAGREES" };
                let _ = write!(out, "  oracle {o} ({verdict})");
            }
            out.push('\n');
        }
        if !self.rows.is_empty() {
            for row in &self.rows {
                let verdict = if row.matches { "match" } else { "MISMATCH" };
                let _ = write!(out, "{:<4} {}  [{verdict}]", row.label, table_cell(&row.computed));
                if !row.matches {
                    let _ = write!(out, "  published: {}", table_cell(&row.published));
                }
                out.push('\n');
            }
            let matched = self.rows.iter().filter(|r| r.matches).count();
            let _ = writeln!(out, "{matched} of {} rows match", self.rows.len());
            for row in &self.rows {
                let _ = writeln!(out, "  {}", row.footnote);
            }
        }
        if let Some(kind) = &req.kind {
            let _ = writeln!(out, "{kind}");
        }
        for s in &self.sequence {
            let _ = write!(out, "n={:<3} {}", s.n, s.series);
            if let Some(b) = &s.brute_force {
                let _ = write!(out, "  brute force {b}");
            }
            out.push('\n');
        }
        if let Some(r) = &self.roots {
            for root in &r.roots {
                let _ = writeln!(out, "({})", root.join(", "));
            }
            let _ = writeln!(out, "-rho = ({})", r.minus_rho.join(", "));
            let _ = writeln!(out, "shift mod Z^n = ({})", r.shift.join(", "));
            let _ = writeln!(out, "standard permutahedron is {}", if r.integral { "integral" } else { "not integral" });
        }
        let _ = writeln!(out, "note: {}", self.note);
        out
    }

    /// Flat records `record,key,position,value,extra`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut put = |fields: [&str; 5]| w.write_record(fields).expect("writes to memory");
        put(["record", "key", "position", "value", "extra"]);
        for (r, c) in self.constituents.iter().enumerate() {
            let extra = if self.interpolated { "interpolated" } else { "" };
            for (k, x) in c.iter().enumerate() {
                put(["coefficient", &r.to_string(), &k.to_string(), x, extra]);
            }
        }
        for e in &self.evaluations {
            put(["evaluation", &e.t.to_string(), "", &e.value, e.oracle.as_deref().unwrap_or("")]);
        }
        for row in &self.rows {
            put(["row", &row.label, "", &table_cell_ascii(&row.computed), if row.matches { "match" } else { "mismatch" }]);
        }
        for s in &self.sequence {
            put(["sequence", &s.n.to_string(), "", &s.series, s.brute_force.as_deref().unwrap_or("")]);
        }
        if let Some(r) = &self.roots {
            for (k, root) in r.roots.iter().enumerate() {
                put(["root", &k.to_string(), "", &root.join(" "), ""]);
            }
            put(["shift", "", "", &r.shift.join(" "), ""]);
        }
        put(["note", "", "", &self.note, ""]);
        String::from_utf8(w.into_inner().expect("flushes to memory")).expect("csv output is utf-8")
    }
}

fn table_cell(constituents: &[Vec<String>]) -> String {
    match constituents {
        [c] => polynomial(c, PolyStyle::Compact),
        [even, odd] => format!(
            "{} for t even, {} for t odd",
            polynomial(even, PolyStyle::Compact),
            polynomial(odd, PolyStyle::Compact)
        ),
        _ => constituent_lines(constituents, PolyStyle::Compact).join("; "),
    }
}

fn table_cell_ascii(constituents: &[Vec<String>]) -> String {
    constituent_lines(constituents, PolyStyle::Ascii).join("; ")
}
