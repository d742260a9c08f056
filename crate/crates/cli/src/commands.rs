//! Command implementations. Each returns a [`ResultDocument`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use coxeter_ehrhart::egf::{egf_ehrhart_standard_odd, egf_ehrhart_values, structure_counts, StructureKind};
use coxeter_ehrhart::linalg::{format_rational, rank};
use coxeter_ehrhart::oracle::{brute_force_structures, count_points, structure_limit};
use coxeter_ehrhart::quasi::interpolate;
use coxeter_ehrhart::tables::{reproduce, Table};
use coxeter_ehrhart::zonotope::{
    ehrhart_almost_integral, ehrhart_coxeter_generic, ehrhart_integral_coxeter, ehrhart_standard_coxeter,
};
use coxeter_ehrhart::{positive_roots, Error, QuasiPolynomial, RootFamily, ZonotopeSpec};

use crate::document::{
    rational_strings, Evaluation, Request, ResultDocument, RootListing, SequenceEntry, TableRow,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Standard,
    Integral,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::Integral => "integral",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Forest,
    Generic,
    Egf,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Forest => "forest",
            Route::Generic => "generic",
            Route::Egf => "egf",
        })
    }
}

/// Settings shared by all commands.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub verify: bool,
    pub max_box: u128,
    pub order: Option<usize>,
}

#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    SizeGuard(String),
    Input(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::SizeGuard(_) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(m) | CommandError::Input(m) => f.write_str(m),
            CommandError::SizeGuard(m) => write!(f, "size guard: {m}"),
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard(m) => CommandError::SizeGuard(m),
            Error::Parse(_) => CommandError::Input(e.to_string()),
            other => CommandError::Usage(other.to_string()),
        }
    }
}

pub type CommandResult = Result<ResultDocument, CommandError>;

fn coxeter_request(family: RootFamily, n: usize) -> Request {
    Request {
        family: Some(family.to_string()),
        n: Some(n),
        rank_label: Some(family.rank_label(n)),
        table_label: Some(family.table_label(n)),
        ..Request::default()
    }
}

fn constituents(q: &QuasiPolynomial) -> Vec<Vec<String>> {
    q.constituents().iter().map(|c| rational_strings(c)).collect()
}

fn integer(q: &BigRational) -> String {
    format_rational(q)
}

/// Run the oracle at each `t` and record agreement.
fn oracle_evaluations(
    z: &ZonotopeSpec,
    values: Vec<(u64, String)>,
    opts: &Options,
) -> Result<(Vec<Evaluation>, Option<bool>), CommandError> {
    let mut agree = true;
    let mut out = Vec::with_capacity(values.len());
    for (t, value) in values {
        let oracle = if opts.verify {
            let count = count_points(z, t, opts.max_box)?.to_string();
            agree &= count == value;
            Some(count)
        } else {
            None
        };
        out.push(Evaluation { t, value, oracle });
    }
    Ok((out, opts.verify.then_some(agree)))
}

fn check_t(ts: &[u64]) -> Result<(), CommandError> {
    if ts.contains(&0) {
        return Err(CommandError::Usage("dilation factors must be positive".into()));
    }
    Ok(())
}

pub fn ehrhart(
    family: RootFamily,
    n: usize,
    variant: Variant,
    route: Route,
    ts: &[u64],
    opts: &Options,
) -> CommandResult {
    check_t(ts)?;
    let default_ts: Vec<u64> = if ts.is_empty() && opts.verify { vec![1, 2, 3] } else { ts.to_vec() };
    let ts = default_ts.as_slice();
    let set = positive_roots(family, n)?;
    let standard = variant == Variant::Standard;
    let zonotope = ZonotopeSpec::from_roots(&set, standard);
    let mut doc = ResultDocument {
        command: "ehrhart".into(),
        request: Request {
            variant: Some(variant.to_string()),
            route: Some(route.to_string()),
            t: ts.to_vec(),
            ..coxeter_request(family, n)
        },
        ..ResultDocument::default()
    };
    let values: Vec<(u64, String)> = match route {
        Route::Forest | Route::Generic => {
            let q = match (route, standard) {
                (Route::Forest, true) => ehrhart_standard_coxeter(family, n)?,
                (Route::Forest, false) => ehrhart_integral_coxeter(family, n)?,
                _ => ehrhart_coxeter_generic(family, n, standard)?,
            };
            doc.period = Some(q.period());
            doc.constituents = constituents(&q);
            doc.note = if route == Route::Forest {
                "forest route: sum over signed-graph forests of the root system".into()
            } else {
                "generic route: sum over linearly independent subsets of relative volume times lattice indicator".into()
            };
            ts.iter().map(|&t| (t, integer(&q.evaluate(t)))).collect()
        }
        Route::Egf => {
            let ts: Vec<u64> = if ts.is_empty() { (1..=4).collect() } else { ts.to_vec() };
            doc.request.t = ts.clone();
            let order = opts.order.unwrap_or(n);
            if order < n {
                return Err(CommandError::Usage(format!("--order {order} is below the number of coordinates {n}")));
            }
            let mut values = Vec::new();
            for &t in &ts {
                let v = if standard && !family.is_integral(n) && t % 2 == 1 {
                    egf_ehrhart_standard_odd(family, t, order)?
                        .into_iter()
                        .find(|(m, _)| *m == n)
                        .map(|(_, v)| v)
                        .ok_or_else(|| CommandError::Usage(format!("no odd-part series value for {family} on {n}")))?
                } else {
                    egf_ehrhart_values(family, t, order)?.swap_remove(n)
                };
                values.push((t, v));
            }
            let dim = if set.roots.is_empty() { 0 } else { rank(&set.roots)? };
            let period = if standard && !family.is_integral(n) { 2 } else { 1 };
            doc.note = format!("egf route: values read off exponential generating functions truncated at order {order}");
            if let Some(q) = interpolate_classes(&values, period, dim) {
                doc.period = Some(q.period());
                doc.constituents = constituents(&q);
                doc.interpolated = true;
                doc.note.push_str("; constituents interpolated from these values");
            }
            values.into_iter().map(|(t, v)| (t, v.to_string())).collect()
        }
    };
    let (evaluations, agreement) = oracle_evaluations(&zonotope, values, opts)?;
    doc.evaluations = evaluations;
    doc.agreement = agreement;
    Ok(doc)
}

/// Interpolate one polynomial of degree at most `dim` per residue class, if
/// every class has at least `dim + 1` distinct points.
fn interpolate_classes(values: &[(u64, BigInt)], period: u64, dim: usize) -> Option<QuasiPolynomial> {
    let mut classes = Vec::new();
    for r in 0..period {
        let mut pts: Vec<(BigRational, BigRational)> = Vec::new();
        for (t, v) in values {
            let tq = BigRational::from_integer((*t).into());
            if t % period == r && !pts.iter().any(|p| p.0 == tq) {
                pts.push((tq, BigRational::from_integer(v.clone())));
            }
        }
        if pts.len() < dim + 1 {
            return None;
        }
        classes.push(interpolate(&pts));
    }
    QuasiPolynomial::new(classes).ok()
}

pub fn tables(table: Table) -> CommandResult {
    let reports = reproduce(table)?;
    let rows: Vec<TableRow> = reports
        .iter()
        .map(|r| TableRow {
            label: r.label.clone(),
            family: r.family.to_string(),
            n: r.n,
            computed: constituents(&r.computed),
            published: constituents(&r.published),
            matches: r.matches(),
            footnote: r.footnote(),
        })
        .collect();
    let all = rows.iter().all(|r| r.matches);
    Ok(ResultDocument {
        command: "tables".into(),
        request: Request { table: Some(table.name().into()), ..Request::default() },
        rows,
        agreement: Some(all),
        note: format!("{}; rows recomputed by the forest route", table.title()),
        ..ResultDocument::default()
    })
}

pub fn zonotope(path: &str, text: &str, ts: &[u64], opts: &Options) -> CommandResult {
    check_t(ts)?;
    let z = ZonotopeSpec::from_json(text).map_err(|e| CommandError::Input(format!("{path}: {e}")))?;
    let q = ehrhart_almost_integral(&z)?;
    let values = ts.iter().map(|&t| (t, integer(&q.evaluate(t)))).collect();
    let (evaluations, agreement) = oracle_evaluations(&z, values, opts)?;
    Ok(ResultDocument {
        command: "zonotope".into(),
        request: Request { input: Some(path.into()), t: ts.to_vec(), ..Request::default() },
        period: Some(q.period()),
        constituents: constituents(&q),
        evaluations,
        agreement,
        note: "generic route: sum over linearly independent subsets of relative volume times lattice indicator".into(),
        ..ResultDocument::default()
    })
}

pub fn sequences(kind: StructureKind, nmax: usize, opts: &Options) -> CommandResult {
    let order = opts.order.unwrap_or(nmax);
    if order < nmax {
        return Err(CommandError::Usage(format!("--order {order} is below nmax {nmax}")));
    }
    let series = structure_counts(kind, order)?;
    let limit = structure_limit(kind);
    let mut agree = true;
    let mut sequence = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let value = series[n - 1].to_string();
        let brute_force = if n <= limit { Some(brute_force_structures(kind, n)?.to_string()) } else { None };
        agree &= brute_force.as_ref().is_none_or(|b| *b == value);
        sequence.push(SequenceEntry { n, series: value, brute_force });
    }
    Ok(ResultDocument {
        command: "sequences".into(),
        request: Request { kind: Some(kind.name().into()), nmax: Some(nmax), ..Request::default() },
        sequence,
        agreement: Some(agree),
        note: format!("counts of labeled connected structures on n vertices; brute force shown for n <= {limit}"),
        ..ResultDocument::default()
    })
}

pub fn count(family: RootFamily, n: usize, variant: Variant, t: u64, oracle: bool, opts: &Options) -> CommandResult {
    let opts = Options { verify: opts.verify || oracle, ..*opts };
    let mut doc = ehrhart(family, n, variant, Route::Forest, &[t], &opts)?;
    doc.command = "count".into();
    doc.period = None;
    doc.constituents.clear();
    doc.note = "lattice points of the t-th dilate, evaluated by the forest route".into();
    if opts.verify {
        doc.note.push_str(" and counted by scanning the bounding box");
    }
    Ok(doc)
}

pub fn roots(family: RootFamily, n: usize) -> CommandResult {
    let set = positive_roots(family, n)?;
    let listing = RootListing {
        roots: set.roots.iter().map(|r| r.entries().iter().map(|x| x.to_string()).collect()).collect(),
        minus_rho: rational_strings(set.minus_rho.entries()),
        shift: rational_strings(set.shift.entries()),
        integral: family.is_integral(n),
    };
    Ok(ResultDocument {
        command: "roots".into(),
        request: coxeter_request(family, n),
        roots: Some(listing),
        note: format!("{} positive roots; the standard permutahedron is -rho plus the sum of segments [0, alpha]", set.roots.len()),
        ..ResultDocument::default()
    })
}
