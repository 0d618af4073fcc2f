use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twobridge::golden::{self, Discovery, VerifySummary};
use twobridge::report::Report;
use twobridge::{Error, KnotSpec, Slope, Strictness};

const EXIT_INPUT: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_INAPPLICABLE: u8 = 3;

#[derive(Parser)]
#[command(name = "twobridge", version, about = "Boundary slopes, seminorms and SL(2,C) Casson invariants of two-bridge knot surgeries")]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct KnotArg {
    /// `K(alpha,beta)` or `J(l,m)`.
    knot: KnotSpec,
}

#[derive(Args)]
struct KnotSlopeArgs {
    /// `K(alpha,beta)` or `J(l,m)`.
    knot: KnotSpec,
    /// `p/q`, or an integer `p` for `p/1`.
    #[arg(allow_hyphen_values = true, value_parser = parse_slope_arg)]
    slope: Slope,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classification, Alexander polynomial, λ′ and Â-degrees.
    Info(KnotArg),
    /// Incompressible surfaces with boundary slopes and weights.
    Surfaces(KnotArg),
    /// The total Culler–Shalen seminorm, optionally evaluated at a slope.
    Seminorm {
        knot: KnotSpec,
        #[arg(allow_hyphen_values = true, value_parser = parse_slope_arg)]
        slope: Option<Slope>,
    },
    /// The surgery formula for the SL(2,C) Casson invariant.
    Casson {
        #[command(flatten)]
        args: KnotSlopeArgs,
        /// Print the formula value even when the theorem does not apply.
        #[arg(long)]
        force: bool,
    },
    /// The exceptional slope set of the nontriviality theorem.
    Exceptional(KnotArg),
    /// Whether the invariant is known to be positive at a slope.
    Nontriviality(KnotSlopeArgs),
    /// Degrees of the Â-polynomial.
    Degrees(KnotArg),
    /// Check a golden table of slopes, weights and degrees.
    VerifyTable {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
        /// Identify each row with the knots whose surfaces match it.
        #[arg(long)]
        discover: bool,
        /// Largest α searched by --discover.
        #[arg(long, default_value_t = 45)]
        max_alpha: i64,
    },
}

fn parse_slope_arg(s: &str) -> Result<Slope, Error> {
    twobridge::parse_slope(s)
}

enum Failure {
    Input(String),
    Mismatch,
    Inapplicable(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(msg) => Failure::Inapplicable(msg),
            other => Failure::Input(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set_display(v: &[i64]) -> String {
    let items: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn csv_out(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn key_values(pairs: &[(&str, String)], format: Format) -> String {
    match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = pairs.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
            csv_out(&["key", "value"], &rows)
        }
        _ => {
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut s = String::new();
            for (k, v) in pairs {
                let _ = writeln!(s, "{k:width$}  {v}");
            }
            s
        }
    }
}

fn json(r: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
    s.push('\n');
    s
}

fn render_report(r: &Report, format: Format) -> String {
    if format == Format::Json {
        return json(r);
    }
    let knot = r.knot.map(|k| k.to_string()).unwrap_or_default();
    let mut pairs: Vec<(&str, String)> = vec![("knot", knot)];
    if let Some(i) = &r.info {
        pairs.push(("input", i.input.clone()));
        pairs.push(("canonical", i.canonical.to_string()));
        pairs.push(("mirror", i.mirror.to_string()));
        if let Some(j) = i.double_twist {
            pairs.push(("double_twist", j.to_string()));
        }
        pairs.push(("classification", i.classification.to_string()));
        pairs.push(("alexander", i.alexander_display.clone()));
        pairs.push(("fibered", yes_no(i.fibered).into()));
        pairs.push(("lambda_prime", i.lambda_prime.to_string()));
        pairs.push(("deg_M", i.ahat_degrees.deg_m.to_string()));
        pairs.push(("deg_L", i.ahat_degrees.deg_l.to_string()));
        pairs.push(("exceptional_slopes", set_display(&i.exceptional_slopes)));
    }
    if let Some(s) = &r.seminorm {
        pairs.push(("seminorm", s.formula.clone()));
        pairs.push(("is_norm", yes_no(s.is_norm).into()));
        if let (Some(sl), Some(v)) = (&s.slope, &s.value) {
            pairs.push(("slope", sl.to_string()));
            pairs.push(("value", v.to_string()));
        }
    }
    if let Some(c) = &r.casson {
        let d = &c.diagnostics;
        pairs.push(("slope", r.slope.map(|s| s.to_string()).unwrap_or_default()));
        pairs.push(("value", c.value.to_string()));
        pairs.push(("seminorm", c.seminorm_value.to_string()));
        pairs.push(("correction", c.correction.to_string()));
        pairs.push(("p_parity", format!("{:?}", c.p_parity).to_lowercase()));
        pairs.push(("boundary_slope", yes_no(d.is_boundary_slope).into()));
        pairs.push(("strict_boundary_slope", d.is_strict_boundary_slope.to_string()));
        pairs.push(("alexander_ok", yes_no(d.alexander_ok).into()));
        pairs.push(("regular", yes_no(d.regular).into()));
        pairs.push(("admissible", yes_no(d.admissible).into()));
        if d.used_fiberedness {
            pairs.push(("note", "strictness uses fiberedness from a monic Alexander polynomial".into()));
        }
        if !d.admissible {
            pairs.push(("status", "formula value, theorem inapplicable".into()));
        }
    }
    if let Some(n) = &r.nontriviality {
        pairs.push(("slope", r.slope.map(|s| s.to_string()).unwrap_or_default()));
        pairs.push(("nontriviality", n.to_string()));
    }
    if let Some(e) = &r.exceptional_slopes {
        if r.nontriviality.is_none() {
            pairs.push(("exceptional_slopes", set_display(e)));
        }
    }
    if let Some(d) = &r.degrees {
        pairs.push(("deg_M", d.ahat.deg_m.to_string()));
        pairs.push(("deg_L", d.ahat.deg_l.to_string()));
        if let Some(m) = d.double_twist_deg_m {
            pairs.push(("double_twist_deg_M", m.to_string()));
        }
        if let Some(t) = &d.torus {
            pairs.push(("torus_deg_M", t.deg_m.to_string()));
            pairs.push(("torus_deg_L", t.deg_l.to_string()));
        }
    }
    if let Some(surfaces) = &r.surfaces {
        if r.casson.is_none() {
            let rows: Vec<Vec<String>> = surfaces
                .iter()
                .map(|s| {
                    vec![
                        s.expansion.to_string(),
                        s.source.to_string(),
                        s.boundary_slope.to_string(),
                        s.weight.to_string(),
                        yes_no(s.is_seifert).to_string(),
                    ]
                })
                .collect();
            let header = ["expansion", "source", "boundary_slope", "weight", "seifert"];
            if format == Format::Csv {
                return csv_out(&header, &rows);
            }
            let mut out = key_values(&pairs, format);
            out.push_str(&table(&header, &rows));
            if let Some(terms) = &r.seminorm_terms {
                let t: Vec<String> = terms
                    .iter()
                    .map(|t| format!("{}:{}", t.boundary_slope, t.doubled_weight))
                    .collect();
                let _ = writeln!(out, "seminorm terms (slope:doubled weight)  {}", t.join(" "));
            }
            return out;
        }
    }
    key_values(&pairs, format)
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for r in rows {
        s.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    s
}

fn render_verify(s: &VerifySummary, format: Format) -> String {
    match format {
        Format::Json => json(s),
        Format::Csv => {
            let rows: Vec<Vec<String>> = s
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        r.knot.to_string(),
                        r.status.to_string(),
                        r.chirality.map(|c| c.to_string()).unwrap_or_else(|| "none".into()),
                        r.degrees.computed.deg_m.to_string(),
                        r.degrees.computed.deg_l.to_string(),
                        r.notes.join("; "),
                    ]
                })
                .collect();
            csv_out(&["name", "knot", "status", "chirality", "deg_M", "deg_L", "notes"], &rows)
        }
        Format::Text => {
            let mut out = String::new();
            for r in &s.rows {
                let _ = writeln!(
                    out,
                    "{:<14} {:<5} {:<9} chirality={:<6} deg=({},{})",
                    r.status.to_string(),
                    r.name,
                    r.knot.to_string(),
                    r.chirality.map(|c| c.to_string()).unwrap_or_else(|| "none".into()),
                    r.degrees.computed.deg_m,
                    r.degrees.computed.deg_l
                );
                for n in &r.notes {
                    let _ = writeln!(out, "    {n}");
                }
            }
            let _ = writeln!(
                out,
                "summary: {} rows, {} PASS, {} KNOWN-MISMATCH, {} FAIL",
                s.rows.len(),
                s.passed,
                s.known_mismatches,
                s.failed
            );
            out
        }
    }
}

fn render_discover(rows: &[golden::GoldenRow], d: &[Discovery], format: Format) -> (String, bool) {
    let agrees: Vec<bool> = rows
        .iter()
        .zip(d)
        .map(|(row, disc)| {
            let Ok(k) = twobridge::TwoBridgeKnot::normalize(row.alpha, row.beta) else {
                return false;
            };
            let hit = |c: &golden::Candidate| c.knot.is_equivalent(&k) || c.knot.is_equivalent(&k.mirror());
            disc.exact.iter().any(hit) || (disc.exact.is_empty() && disc.nearest.as_ref().is_some_and(hit))
        })
        .collect();
    let all = agrees.iter().all(|&a| a);
    let out = match format {
        Format::Json => json(&d),
        _ => {
            let mut rows_out = Vec::new();
            for ((disc, row), ok) in d.iter().zip(rows).zip(&agrees) {
                let (kind, found) = if disc.exact.is_empty() {
                    let n = disc.nearest.as_ref().map(|c| format!("{} ({}, distance {})", c.knot, c.chirality, c.distance));
                    ("nearest", n.unwrap_or_else(|| "none".into()))
                } else {
                    let ks: Vec<String> = disc.exact.iter().map(|c| c.knot.to_string()).collect();
                    ("exact", ks.join(" "))
                };
                rows_out.push(vec![
                    disc.name.clone(),
                    kind.to_string(),
                    found,
                    format!("K({},{})", row.alpha, row.beta),
                    if *ok { "agrees" } else { "disagrees" }.to_string(),
                ]);
            }
            let header = ["name", "match", "knots", "fixture", "fixture_check"];
            if format == Format::Csv {
                csv_out(&header, &rows_out)
            } else {
                table(&header, &rows_out)
            }
        }
    };
    (out, all)
}

fn run(cli: Cli) -> Result<String, (Failure, String)> {
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let plain = |r: Result<Report, Error>| r.map(|r| render_report(&r, format)).map_err(|e| (Failure::from(e), String::new()));
    match cli.cmd {
        Cmd::Info(a) => plain(Report::info(&a.knot)),
        Cmd::Surfaces(a) => plain(Report::surfaces(&a.knot)),
        Cmd::Seminorm { knot, slope } => plain(Report::seminorm(&knot, slope)),
        Cmd::Exceptional(a) => plain(Report::exceptional(&a.knot)),
        Cmd::Degrees(a) => plain(Report::degrees(&a.knot)),
        Cmd::Nontriviality(a) => plain(Report::nontriviality(&a.knot, a.slope)),
        Cmd::Casson { args, force } => {
            let r = Report::casson(&args.knot, args.slope).map_err(|e| (Failure::from(e), String::new()))?;
            let out = render_report(&r, format);
            let c = r.casson.as_ref().expect("casson section present");
            if c.applicable() || force {
                Ok(out)
            } else {
                let d = &c.diagnostics;
                let why = if d.is_strict_boundary_slope == Strictness::Yes {
                    "strict boundary slope".to_string()
                } else if d.is_strict_boundary_slope == Strictness::Unknown {
                    "strictness of this boundary slope is unknown".to_string()
                } else {
                    "a p'-th root of unity is a root of the Alexander polynomial".to_string()
                };
                Err((Failure::Inapplicable(format!("{} is not admissible: {why} (use --force)", args.slope)), out))
            }
        }
        Cmd::VerifyTable {
            path,
            format: TableFormat::Tsv,
            discover,
            max_alpha,
        } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| (Failure::Input(format!("{}: {e}", path.display())), String::new()))?;
            let rows = golden::parse_table(&text).map_err(|e| (Failure::Input(e.to_string()), String::new()))?;
            if discover {
                let d = golden::discover(&rows, max_alpha);
                let (out, all) = render_discover(&rows, &d, format);
                return if all { Ok(out) } else { Err((Failure::Mismatch, out)) };
            }
            let summary = golden::verify_table(&rows).map_err(|e| (Failure::Input(e.to_string()), String::new()))?;
            let out = render_verify(&summary, format);
            if summary.ok() {
                Ok(out)
            } else {
                Err((Failure::Mismatch, out))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    match run(cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err((failure, out)) => {
            let _ = stdout.write_all(out.as_bytes());
            let _ = stdout.flush();
            let code = match failure {
                Failure::Input(msg) => {
                    eprintln!("error: {msg}");
                    EXIT_INPUT
                }
                Failure::Mismatch => {
                    eprintln!("verification failed");
                    EXIT_MISMATCH
                }
                Failure::Inapplicable(msg) => {
                    eprintln!("inapplicable: {msg}");
                    EXIT_INAPPLICABLE
                }
            };
            ExitCode::from(code)
        }
    }
}
