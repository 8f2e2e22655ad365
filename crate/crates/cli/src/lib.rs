//! The `hyperzagreb` command line. [`run_with`] holds the whole program so it
//! can be driven from tests.
//!
//! Exit codes: 0 success (including exploratory verification), 1 failed
//! verification, 2 usage error or invalid parameters, 3 unreadable or
//! malformed input file.

mod args;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use hyperzagreb::constructors::{self, RangeWarning};
use hyperzagreb::enumerate::{enumerate_linear, extremal_scan, EnumerationRequest};
use hyperzagreb::formulas::{self, Domain, ExactValue};
use hyperzagreb::io::{self, HypergraphRecord};
use hyperzagreb::transforms::{classify_bicyclic, move_edges, strip_pendant_edges, MoveSpec};
use hyperzagreb::verify::{self, Verdict, VerifyOptions, VerifyReport};
use hyperzagreb::{DegreeStats, Family, FamilySpec, Hypergraph, StructureClass};

use args::*;

pub const MAX_M_ENV: &str = "HYPERZAGREB_MAX_M";

enum Failure {
    Usage(String),
    Input(String),
}

impl From<hyperzagreb::Error> for Failure {
    fn from(e: hyperzagreb::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

/// What a subcommand produced: text for the output sink and whether a
/// verification failed.
struct Outcome {
    text: String,
    failed: bool,
    warning: Option<String>,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, failed: false, warning: None }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    let result = dispatch(&cli).and_then(|outcome| {
        if let Some(w) = &outcome.warning {
            let _ = writeln!(err, "warning: {w}");
        }
        emit(&cli.global, &outcome.text, out)?;
        Ok(outcome.failed)
    });
    match result {
        Ok(false) => 0,
        Ok(true) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

fn emit(global: &Global, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match &global.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("cannot write output: {e}"))),
    }
}

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    Ok(match &cli.command {
        Command::Construct(a) => {
            let (h, warning) = construct(a)?;
            Outcome { warning, ..render_graph(g, &h, &[]).into() }
        }
        Command::Stats(a) => stats(g, &read_input(&a.file)?)?.into(),
        Command::Zagreb(a) => format!("{}\n", read_input(&a.file)?.zagreb_index()).into(),
        Command::Girth(a) => match read_input(&a.file)?.girth()? {
            Some(c) => format!("{c}\n"),
            None => "none\n".to_string(),
        }
        .into(),
        Command::Classify(a) => classify(g, &read_input(&a.file)?)?.into(),
        Command::Move(a) => {
            let h = read_input(&a.file)?;
            let spec = MoveSpec { u: a.u, v: a.v, moved_edges: a.edges.clone() };
            let (moved, delta) = move_edges(&h, &spec)?;
            render_graph(g, &moved, &[("delta", delta.to_string())]).into()
        }
        Command::Strip(a) => {
            let (core, removed) = strip_pendant_edges(&read_input(&a.file)?);
            render_graph(g, &core, &[("removed", removed.to_string())]).into()
        }
        Command::Enumerate(a) => enumerate(g, a)?.into(),
        Command::Scan(a) => scan(g, a)?.into(),
        Command::Formula(a) => formula(a)?.into(),
        Command::Verify(a) => run_verify(g, a)?,
    })
}

fn read_input(path: &Path) -> CliResult<Hypergraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    io::parse_any(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// `.hg` text with `# key value` comment lines, or a JSON object holding the
/// same values and the hypergraph.
fn render_graph(g: &Global, h: &Hypergraph, extra: &[(&str, String)]) -> String {
    match g.format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (key, value) in extra {
                obj.insert(key.to_string(), serde_json::from_str(value).unwrap_or(value.clone().into()));
            }
            obj.insert("hypergraph".into(), serde_json::to_value(HypergraphRecord::from(h)).unwrap());
            let value = if extra.is_empty() { obj.remove("hypergraph").unwrap() } else { obj.into() };
            format!("{value}\n")
        }
        _ => {
            let mut text = String::new();
            for (key, value) in extra {
                let _ = writeln!(text, "# {key} {value}");
            }
            text + &io::to_hg(h)
        }
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, what: &str) -> CliResult<T> {
    value.ok_or_else(|| Failure::Usage(format!("{what} needs --{flag}")))
}

fn construct(a: &ConstructArgs) -> CliResult<(Hypergraph, Option<String>)> {
    let k = a.k;
    let what = format!("{:?}", a.family).to_lowercase();
    let spec = |family: Family, variant: u8| -> CliResult<FamilySpec> {
        Ok(FamilySpec {
            family,
            variant,
            p: need(a.p, "p", &what)?,
            q: need(a.q, "q", &what)?,
            l: need(a.l, "l", &what)?,
            pendants: a.pendants,
        })
    };
    let member = |s: FamilySpec| constructors::family_member(&s, k);
    let mut warning = None;
    let h = match a.family {
        FamilyArg::B1 => member(spec(Family::B, 1)?)?,
        FamilyArg::B2 => member(spec(Family::B, 2)?)?,
        FamilyArg::B3 => member(spec(Family::B, 3)?)?,
        FamilyArg::C1 => member(spec(Family::C, 1)?)?,
        FamilyArg::C2 => member(spec(Family::C, 2)?)?,
        FamilyArg::C3 => member(spec(Family::C, 3)?)?,
        FamilyArg::Path => constructors::hyperpath(k, need(a.m, "m", &what)?)?,
        FamilyArg::Cycle => constructors::hypercycle(k, need(a.m, "m", &what)?)?,
        FamilyArg::ExtremalB => constructors::extremal_b(k, need(a.m, "m", &what)?, need(a.g, "g", &what)?)?,
        FamilyArg::ExtremalC => constructors::extremal_c(k, need(a.m, "m", &what)?, need(a.g, "g", &what)?)?,
        FamilyArg::GlobalMax => {
            let (h, range) = constructors::global_max(k, need(a.m, "m", &what)?)?;
            if let Some(RangeWarning::OutsideTheoremRange { m, min_m }) = range {
                warning = Some(format!("m={m} is below {min_m}; maximality is not claimed here"));
            }
            h
        }
        FamilyArg::MinDegree => constructors::min_bicyclic(k, need(a.m, "m", &what)?)?,
    };
    Ok((h, warning))
}

#[derive(Serialize)]
struct Stats {
    k: Option<usize>,
    n: usize,
    m: usize,
    zagreb: u64,
    degrees: DegreeStats,
    linear: bool,
    connected: bool,
    class: Option<StructureClass>,
    girth: Option<usize>,
    cored_vertices: usize,
    pendant_edges: usize,
}

fn stats(g: &Global, h: &Hypergraph) -> CliResult<String> {
    let s = Stats {
        k: h.uniformity(),
        n: h.vertex_count(),
        m: h.edge_count(),
        zagreb: h.zagreb_index(),
        degrees: h.degree_stats(),
        linear: h.is_linear(),
        connected: h.is_connected(),
        class: h.structure_class().ok(),
        girth: if h.is_linear() { h.girth()? } else { None },
        cored_vertices: h.cored_vertices().len(),
        pendant_edges: h.pendant_edges().len(),
    };
    if g.format == Format::Json {
        return Ok(format!("{}\n", serde_json::to_string(&s).unwrap()));
    }
    let opt = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
    let hist: Vec<String> = s.degrees.histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    let mut t = String::new();
    let _ = writeln!(t, "k {}", opt(s.k));
    let _ = writeln!(t, "n {}", s.n);
    let _ = writeln!(t, "m {}", s.m);
    let _ = writeln!(t, "zagreb {}", s.zagreb);
    let _ = writeln!(t, "max_degree {}", s.degrees.max_degree);
    let _ = writeln!(t, "degrees {}", hist.join(" "));
    let _ = writeln!(t, "linear {}", s.linear);
    let _ = writeln!(t, "connected {}", s.connected);
    let _ = writeln!(t, "class {}", s.class.map_or("none".to_string(), |c| c.to_string()));
    let _ = writeln!(t, "girth {}", opt(s.girth));
    let _ = writeln!(t, "cored_vertices {}", s.cored_vertices);
    let _ = writeln!(t, "pendant_edges {}", s.pendant_edges);
    Ok(t)
}

fn classify(g: &Global, h: &Hypergraph) -> CliResult<String> {
    let r = classify_bicyclic(h)?;
    if g.format == Format::Json {
        return Ok(format!("{}\n", serde_json::to_string(&r).unwrap()));
    }
    let mut t = format!("{}\n", r.spec);
    for note in &r.notes {
        let _ = writeln!(t, "note: {note}");
    }
    Ok(t)
}

/// Guard override: `--max-m`, then the environment variable.
fn max_m(g: &Global) -> CliResult<Option<usize>> {
    if let Some(m) = g.max_m {
        return Ok(Some(m as usize));
    }
    match std::env::var(MAX_M_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(m) if m > 0 => Ok(Some(m)),
            _ => Err(Failure::Usage(format!("{MAX_M_ENV} must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

fn request(g: &Global, a: &EnumArgs) -> CliResult<EnumerationRequest> {
    let class = match a.class {
        ClassArg::Hypertree => StructureClass::Hypertree,
        ClassArg::Unicyclic => StructureClass::Unicyclic,
        ClassArg::Bicyclic => StructureClass::Bicyclic,
    };
    Ok(EnumerationRequest {
        k: a.k,
        m: a.m,
        class,
        girth: a.girth,
        max_m: max_m(g)?,
        workers: g.workers.map(|w| w as usize),
    })
}

fn enumerate(g: &Global, a: &EnumArgs) -> CliResult<String> {
    let hs = enumerate_linear(&request(g, a)?)?;
    Ok(match g.format {
        Format::Json => {
            let recs: Vec<HypergraphRecord> = hs.iter().map(HypergraphRecord::from).collect();
            format!("{}\n", serde_json::to_string(&recs).unwrap())
        }
        _ => format!("# count {}\n{}", hs.len(), io::to_hg_multi(&hs)),
    })
}

fn scan(g: &Global, a: &EnumArgs) -> CliResult<String> {
    let mut r = extremal_scan(&request(g, a)?)?;
    if a.no_timing {
        r.duration_ms = 0;
    }
    let opt = |v: Option<u64>| v.map_or(String::new(), |x| x.to_string());
    let girth = r.girth.map_or(String::new(), |x| x.to_string());
    Ok(match g.format {
        Format::Json => format!("{}\n", serde_json::to_string(&r).unwrap()),
        Format::Csv => format!(
            "k,m,class,girth,count,min,max,min_classes,max_classes,millis\n{},{},{},{},{},{},{},{},{},{}\n",
            r.k,
            r.m,
            r.class,
            girth,
            r.count,
            opt(r.min_zagreb),
            opt(r.max_zagreb),
            r.min_classes,
            r.max_classes,
            r.duration_ms
        ),
        Format::Text => {
            let mut t = String::new();
            let girth = if girth.is_empty() { "any".to_string() } else { girth };
            let _ = writeln!(t, "k={} m={} class={} girth={}", r.k, r.m, r.class, girth);
            let _ = writeln!(t, "classes {}", r.count);
            if let (Some(min), Some(max)) = (r.min_zagreb, r.max_zagreb) {
                let _ = writeln!(t, "min {min} ({} classes)", r.min_classes);
                let _ = writeln!(t, "max {max} ({} classes)", r.max_classes);
                for (label, w) in [("min", &r.min_witness), ("max", &r.max_witness)] {
                    if let Some(w) = w {
                        let _ = write!(t, "# {label} witness\n{}", io::to_hg(w));
                    }
                }
            }
            let _ = writeln!(t, "millis {}", r.duration_ms);
            t
        }
    })
}

fn formula(a: &FormulaArgs) -> CliResult<String> {
    let domain = if a.unchecked { Domain::Unchecked } else { Domain::Checked };
    let name = format!("{:?}", a.name);
    let k = || need(a.k, "k", &name);
    let m = || need(a.m, "m", &name);
    let g = || need(a.g, "g", &name);
    let value: ExactValue = match a.name {
        FormulaName::BMax => formulas::b_max(k()?, m()?, g()?, domain)?,
        FormulaName::C1Even => formulas::c1_even(k()?, m()?, g()?, domain)?,
        FormulaName::C2Odd => formulas::c2_odd(k()?, m()?, g()?, domain)?,
        FormulaName::C1Odd => formulas::c1_odd(k()?, m()?, g()?, domain)?,
        FormulaName::C3Pendant => formulas::c3_pendant(
            k()?,
            m()?,
            need(a.p, "p", &name)?,
            need(a.q, "q", &name)?,
            need(a.l, "l", &name)?,
            domain,
        )?,
        FormulaName::MinZagreb => {
            let (k, m) = (k()?, m()?);
            // a bicyclic hypergraph unless n is given
            let n = a.n.unwrap_or(m * (k - 1) - 1);
            formulas::min_zagreb(n, m, k)
        }
        FormulaName::MoveDelta => formulas::move_delta(
            need(a.t, "t", &name)?,
            need(a.du, "du", &name)?,
            need(a.dv, "dv", &name)?,
        ),
        FormulaName::CMinusB => {
            let d = formulas::c_minus_b_differences(k()?, m()?, g()?, domain)?;
            let mut t = String::new();
            for (label, v) in [("even", d.even), ("odd", d.odd)] {
                if let Some(v) = v {
                    let _ = writeln!(t, "{label} {v}");
                }
            }
            return Ok(t);
        }
    };
    Ok(format!("{value}\n"))
}

fn run_verify(g: &Global, a: &VerifyArgs) -> CliResult<Outcome> {
    let opts = VerifyOptions { max_m: max_m(g)?, workers: g.workers.map(|w| w as usize) };
    let girth = || need(a.g, "g", "this check");
    let mut r: VerifyReport = match a.theorem {
        TheoremArg::Min => verify::verify_min(a.k, a.m, a.g, &opts)?,
        TheoremArg::BFamily => verify::verify_b_family(a.k, a.m, girth()?, &opts)?,
        TheoremArg::CFamily => verify::verify_c_family(a.k, a.m, girth()?, &opts)?,
        TheoremArg::Global => verify::verify_global(a.k, a.m, &opts)?,
        TheoremArg::Taxonomy => verify::verify_taxonomy(a.k, a.m, &opts)?,
    };
    if a.no_timing {
        r.duration_ms = 0;
    }
    let text = match g.format {
        Format::Json => format!("{}\n", serde_json::to_string(&r).unwrap()),
        Format::Csv => format!("{}\n{}\n", VerifyReport::CSV_HEADER, r.csv_row()),
        Format::Text => verify_text(&r),
    };
    Ok(Outcome { text, failed: r.verdict == Verdict::Fail, warning: None })
}

fn verify_text(r: &VerifyReport) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    let mut t = String::new();
    let g = r.g.map_or(String::new(), |g| format!(" g={g}"));
    let _ = writeln!(t, "theorem {} k={} m={}{g}", r.theorem, r.k, r.m);
    let _ = writeln!(t, "expected {}", opt(r.expected.as_ref().map(ToString::to_string)));
    let _ = writeln!(t, "observed {}", opt(r.observed.map(|o| o.to_string())));
    let _ = writeln!(t, "witness_isomorphic {}", opt(r.witness_isomorphic.map(|b| b.to_string())));
    let _ = writeln!(t, "classes {}", r.classes);
    let _ = writeln!(t, "extremal_classes {}", r.extremal_classes);
    for note in &r.notes {
        let _ = writeln!(t, "note: {note}");
    }
    let verdict = match r.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Exploratory => "exploratory",
    };
    let _ = writeln!(t, "verdict {verdict}");
    let _ = writeln!(t, "millis {}", r.duration_ms);
    if let Some(w) = &r.witness {
        let _ = write!(t, "# witness\n{}", io::to_hg(w));
    }
    t
}
