use std::time::Instant;

use num_complex::Complex64;
use zetaforge::arithmetic::{field_invariants, fundamental_unit, ideal_counts, CharacterTable, Discriminant};
use zetaforge::specialfn::SeriesParams;
use zetaforge::wilton::{classify_trend, convergence_sweep, WiltonReport};
use zetaforge::zetavalues::{
    dedekind_zeta_direct, dedekind_zeta_even_imaginary_wilton, dedekind_zeta_even_real_closed, dedekind_zeta_factored,
    dedekind_zeta_odd_imaginary, dedekind_zeta_odd_real_wilton, riemann_zeta, riemann_zeta_direct, riemann_zeta_even,
    zagier_zeta2_imaginary, zeta_odd_closed, ZetaValue,
};

use crate::record::{format_number, OutputRecord};
use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RouteArg {
    Direct,
    Factored,
    Closed,
    Zagier,
    Wilton,
}

impl RouteArg {
    pub const ALL: [RouteArg; 5] = [RouteArg::Direct, RouteArg::Factored, RouteArg::Closed, RouteArg::Zagier, RouteArg::Wilton];

    pub fn name(self) -> &'static str {
        match self {
            RouteArg::Direct => "direct",
            RouteArg::Factored => "factored",
            RouteArg::Closed => "closed",
            RouteArg::Zagier => "zagier",
            RouteArg::Wilton => "wilton",
        }
    }

    pub fn parse(s: &str) -> Option<RouteArg> {
        RouteArg::ALL.into_iter().find(|r| r.name() == s.trim())
    }
}

/// SeriesParams from the global flags, validated.
pub fn series_params(tolerance: Option<f64>, max_terms: Option<usize>, epsilon: Option<f64>) -> Result<SeriesParams> {
    let mut p = SeriesParams::default();
    if let Some(t) = tolerance {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Input(format!("--tolerance must be positive, got {t}")));
        }
        p = p.with_tolerance(t);
    }
    if let Some(m) = max_terms {
        if m < 8 {
            return Err(CliError::Input(format!("--max-terms must be at least 8, got {m}")));
        }
        p = p.with_max_terms(m);
    }
    if let Some(e) = epsilon {
        if !(e > 0.0 && e < 1.0) {
            return Err(CliError::Input(format!("--epsilon must lie in (0, 1), got {e}")));
        }
        p = p.with_epsilon(e);
    }
    Ok(p)
}

/// Parses "2", "-0.5", "2+3i", "0.5-14.1i", "i".
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Input(format!("cannot parse complex number {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return t.parse::<f64>().map(|x| Complex64::new(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re.parse::<f64>().map_err(|_| bad())?, im))
}

fn integer_arg(s: Complex64) -> Option<u32> {
    (s.im == 0.0 && s.re.fract() == 0.0 && s.re >= 1.0 && s.re <= 1e6).then_some(s.re as u32)
}

fn field(d: i64) -> Result<Option<Discriminant>> {
    if d == 0 {
        Ok(None)
    } else {
        Ok(Some(Discriminant::new(d)?))
    }
}

fn not_applicable(route: RouteArg, why: &str) -> CliError {
    CliError::Input(format!("route {} does not apply: {why}", route.name()))
}

/// Evaluates zeta_K(s) along one route; D = 0 means the Riemann zeta function.
pub fn compute_zeta(d: i64, s: Complex64, route: RouteArg, p: &SeriesParams) -> Result<ZetaValue> {
    let k = field(d)?;
    let n = integer_arg(s);
    Ok(match (route, k) {
        (RouteArg::Direct, None) => riemann_zeta_direct(s, p)?,
        (RouteArg::Direct, Some(k)) => dedekind_zeta_direct(k, s, p)?,
        (RouteArg::Factored, None) => riemann_zeta(s)?,
        (RouteArg::Factored, Some(k)) => dedekind_zeta_factored(k, s)?,
        (RouteArg::Closed, None) => match n {
            Some(n) if n % 2 == 0 => riemann_zeta_even(n / 2)?.0,
            Some(n) if n >= 3 => zeta_odd_closed(n)?,
            _ => return Err(not_applicable(route, "needs an integer s >= 2")),
        },
        (RouteArg::Closed, Some(k)) => match n {
            Some(n) if k.is_real() && n % 2 == 0 => dedekind_zeta_even_real_closed(k, n / 2)?,
            Some(n) if !k.is_real() && n % 2 == 1 && n >= 3 => dedekind_zeta_odd_imaginary(k, n)?,
            _ => return Err(not_applicable(route, "needs even s for D > 0 or odd s >= 3 for D < 0")),
        },
        (RouteArg::Zagier, Some(k)) if !k.is_real() && n == Some(2) => zagier_zeta2_imaginary(k)?,
        (RouteArg::Zagier, _) => return Err(not_applicable(route, "needs D < 0 and s = 2")),
        (RouteArg::Wilton, Some(k)) => match n {
            Some(n) if k.is_real() && n % 2 == 1 && n >= 3 => dedekind_zeta_odd_real_wilton(k, (n - 1) / 2, p)?,
            Some(n) if !k.is_real() && n % 2 == 0 && n >= 4 => dedekind_zeta_even_imaginary_wilton(k, n / 2, p)?,
            _ => return Err(not_applicable(route, "needs odd s >= 3 for D > 0 or even s >= 4 for D < 0")),
        },
        (RouteArg::Wilton, None) => return Err(not_applicable(route, "needs a quadratic field")),
    })
}

pub fn cmd_field_info(d: i64) -> Result<OutputRecord> {
    let start = Instant::now();
    let disc = Discriminant::new(d)?;
    let inv = field_invariants(disc)?;
    let counts = ideal_counts(&CharacterTable::new(disc), 20);
    let mut r = OutputRecord::new("field-info");
    r.input("D", d);
    r.result("disc", d)
        .result("signature", format!("({},{})", inv.r1, inv.r2))
        .result("w", inv.w)
        .result("h", inv.class_number)
        .real("regulator", inv.regulator)
        .real("residue", inv.residue);
    if disc.is_real() {
        let unit = fundamental_unit(disc)?;
        r.result("unit", format!("({} + {} sqrt({d}))/2", unit.x, unit.y)).result("unit_norm", unit.norm);
    }
    let v: Vec<String> = counts[1..=20].iter().map(u32::to_string).collect();
    r.result("v_K", v.join(" "));
    r.finish(start);
    Ok(r)
}

fn push_zeta(r: &mut OutputRecord, prefix: &str, z: &ZetaValue) {
    r.complex(&format!("{prefix}value"), z.value).real(&format!("{prefix}err"), z.error_estimate);
    r.add_flags(z.flags);
}

pub fn cmd_zeta(d: i64, s: Complex64, route: RouteArg, p: &SeriesParams) -> Result<OutputRecord> {
    let start = Instant::now();
    let z = compute_zeta(d, s, route, p)?;
    let mut r = OutputRecord::new("zeta");
    r.input("D", d).input("s", format!("{s}")).input("route", route.name());
    r.result("route", z.route.name());
    push_zeta(&mut r, "", &z);
    r.finish(start);
    Ok(r)
}

/// Every applicable route plus pairwise |differences|.
pub fn cmd_zeta_all_routes(d: i64, s: Complex64, p: &SeriesParams) -> Result<OutputRecord> {
    let start = Instant::now();
    field(d)?;
    let mut values = Vec::new();
    let mut r = OutputRecord::new("zeta");
    r.input("D", d).input("s", format!("{s}")).input("route", "all");
    for route in RouteArg::ALL {
        match compute_zeta(d, s, route, p) {
            Ok(z) => {
                push_zeta(&mut r, &format!("{}_", route.name()), &z);
                values.push((route, z));
            }
            Err(e) => {
                r.result(&format!("{}_skipped", route.name()), e.to_string());
            }
        }
    }
    if values.is_empty() {
        return Err(CliError::Input(format!("no route applies to D = {d}, s = {s}")));
    }
    for (i, (a, za)) in values.iter().enumerate() {
        for (b, zb) in &values[i + 1..] {
            r.real(&format!("delta_{}_{}", a.name(), b.name()), (za.value - zb.value).norm());
        }
    }
    r.finish(start);
    Ok(r)
}

fn wilton_record(rep: &WiltonReport, start: Instant) -> OutputRecord {
    let mut r = OutputRecord::new("verify-wilton");
    r.input("D", rep.field_disc)
        .input("u", format!("{}", rep.u))
        .input("v", format!("{}", rep.v))
        .input("M", rep.truncation_m);
    r.complex("lhs", rep.lhs)
        .complex("rhs", rep.rhs)
        .real("residual", rep.residual)
        .real("tail_estimate", rep.tail_estimate)
        .complex("tail_model", rep.tail_model)
        .complex("constant_term", rep.constant_term)
        .complex("sum_u", rep.sum_u)
        .complex("sum_v", rep.sum_v)
        .real("inner_error", rep.inner_error);
    let log: Vec<String> = rep.per_term_log.iter().map(|(m, t)| format!("{m}:{}", format_number(*t))).collect();
    r.result("per_term_log", log.join(" "));
    r.add_flags(rep.flags);
    r.finish(start);
    r
}

pub struct WiltonOutput {
    pub reports: Vec<WiltonReport>,
    pub records: Vec<OutputRecord>,
}

pub fn cmd_verify_wilton(d: i64, u: Complex64, v: Complex64, m_list: &[usize], p: &SeriesParams) -> Result<WiltonOutput> {
    let start = Instant::now();
    let reports = convergence_sweep(d, u, v, m_list, p)?;
    let mut records: Vec<OutputRecord> = reports.iter().map(|rep| wilton_record(rep, start)).collect();
    if let Some(last) = records.last_mut() {
        last.result("trend", classify_trend(&reports).name());
    }
    Ok(WiltonOutput { reports, records })
}

pub fn wilton_csv(reports: &[WiltonReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["M", "residual", "tail_estimate", "flags"]).expect("in-memory write");
    for rep in reports {
        w.write_record([
            rep.truncation_m.to_string(),
            format_number(rep.residual),
            format_number(rep.tail_estimate),
            rep.flags.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchRow {
    pub d: String,
    pub s: String,
    pub route: String,
}

/// Rows of `D,s,route`; blank lines, `#` comments and a leading header are skipped.
pub fn parse_batch(text: &str) -> Vec<BatchRow> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if rows.is_empty() && fields.first() == Some(&"D") {
            continue;
        }
        let get = |i: usize| fields.get(i).copied().unwrap_or("").to_string();
        rows.push(BatchRow { d: get(0), s: get(1), route: get(2) });
    }
    rows
}

fn evaluate_row(row: &BatchRow, p: &SeriesParams) -> Result<ZetaValue> {
    let d: i64 = row.d.parse().map_err(|_| CliError::Input(format!("bad discriminant {:?}", row.d)))?;
    let s = parse_complex(&row.s)?;
    let route = RouteArg::parse(&row.route).ok_or_else(|| CliError::Input(format!("unknown route {:?}", row.route)))?;
    compute_zeta(d, s, route, p)
}

pub struct TableOutput {
    pub csv: String,
    pub rows: usize,
    pub failures: usize,
}

/// CSV with header `D,s,route,value_re,value_im,err,flags,error`, rows in input order.
pub fn cmd_table(rows: &[BatchRow], p: &SeriesParams) -> TableOutput {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["D", "s", "route", "value_re", "value_im", "err", "flags", "error"]).expect("in-memory write");
    let mut failures = 0;
    for row in rows {
        let record = match evaluate_row(row, p) {
            Ok(z) => [
                row.d.clone(),
                row.s.clone(),
                row.route.clone(),
                format_number(z.value.re),
                format_number(z.value.im),
                format_number(z.error_estimate),
                z.flags.to_string(),
                String::new(),
            ],
            Err(e) => {
                failures += 1;
                [row.d.clone(), row.s.clone(), row.route.clone(), String::new(), String::new(), String::new(), String::new(), e.to_string()]
            }
        };
        w.write_record(&record).expect("in-memory write");
    }
    TableOutput {
        csv: String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8"),
        rows: rows.len(),
        failures,
    }
}
