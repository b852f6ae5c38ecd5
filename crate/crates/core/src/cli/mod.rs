//! Command-line front end.

mod svg;

use std::fmt::Write as _;
use std::io::IsTerminal;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::intersect::{
    intersection_json, stable_intersection_with, tropical_multiplicity_check, LineCheck, Perturbation,
};
use crate::lattice::{is_m_thick, minimal_lattice_width, LatticePoint, PolygonJson};
use crate::puiseux::{multiplicity_at, multiplicity_at_one, parse_polynomial, parse_scalar};
use crate::rational::{fmt_q, parse_point, Q};
use crate::singular::{certificate_for_support, Certificate, CheckStatus, Verdict};
use crate::tropical::{dual_curve, lift_and_subdivide, LiftedSupport, SupportJson, TropicalizationJson};

pub use svg::render_svg;

pub const EXIT_CONSISTENT: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Regular subdivision and tropical curve of a polynomial.
    Tropicalize { input: Option<PathBuf> },
    /// Necessary conditions for a point of given multiplicity.
    Analyze { input: Option<PathBuf> },
    /// Classical multiplicity of the curve at a point (default (1, 1)).
    Mult {
        input: Option<PathBuf>,
        /// Puiseux coordinates `s1,s2`, e.g. `t^2,1+t`.
        #[arg(long)]
        at: Option<String>,
    },
    /// Minimal lattice width of a polygon or a polynomial's support.
    Width { input: PathBuf },
    /// m-thickness of a polygon or a polynomial's support.
    Thick { input: PathBuf },
    /// Stable intersection of two curves.
    Stable { first: PathBuf, second: PathBuf },
    /// SVG of the subdivision next to the curve.
    Render { input: Option<PathBuf> },
}

#[derive(Clone, Debug, Parser)]
#[command(name = "tropigon", version, about = "Tropical curves over Puiseux series and their singular points")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Point `p/q,p/q` in the tropical plane.
    #[arg(long, global = true, value_parser = parse_point_arg)]
    pub point: Option<(Q, Q)>,
    /// Multiplicity.
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(1..))]
    pub m: Option<i64>,
    /// Entry bound for the unimodular maps tried against tropical lines.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(i64).range(0..=6))]
    pub bound: i64,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the perturbation direction of stable intersections.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Run the command on every file of a directory.
    #[arg(long, global = true)]
    pub batch: Option<PathBuf>,
}

fn parse_point_arg(s: &str) -> std::result::Result<(Q, Q), String> {
    parse_point(s).map_err(|e| e.to_string())
}

/// A fully resolved invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    pub point: Option<(Q, Q)>,
    pub m: Option<i64>,
    pub bound: i64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

/// Rendered output and exit code of one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl RunConfig {
    /// One configuration per input; several when `--batch` is given.
    pub fn from_cli(cli: Cli) -> Result<Vec<RunConfig>> {
        let format = cli.format.unwrap_or(match cli.command {
            Command::Tropicalize { .. } | Command::Stable { .. } => Format::Json,
            Command::Render { .. } => Format::Svg,
            _ => Format::Text,
        });
        let single: Vec<PathBuf> = match &cli.command {
            Command::Tropicalize { input } | Command::Analyze { input } | Command::Render { input } => {
                input.iter().cloned().collect()
            }
            Command::Mult { input, .. } => input.iter().cloned().collect(),
            Command::Width { input } | Command::Thick { input } => vec![input.clone()],
            Command::Stable { first, second } => vec![first.clone(), second.clone()],
        };
        let base = RunConfig {
            command: cli.command.clone(),
            inputs: single.clone(),
            point: cli.point,
            m: cli.m,
            bound: cli.bound,
            format,
            out: cli.out,
            seed: cli.seed,
        };
        match (cli.batch, single.is_empty()) {
            (Some(dir), true) => {
                let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.is_file())
                    .collect();
                files.sort();
                Ok(files.into_iter().map(|f| RunConfig { inputs: vec![f], ..base.clone() }).collect())
            }
            (Some(_), false) => Err(Error::OutOfDomain("--batch together with an input file".into())),
            (None, true) => Err(Error::OutOfDomain("missing input file".into())),
            (None, false) => Ok(vec![base]),
        }
    }
}

/// Polynomial text, or a support JSON document `{"heights": [...]}`.
pub fn read_support(path: &Path) -> Result<LiftedSupport> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let json: SupportJson = serde_json::from_str(&text)?;
        LiftedSupport::from_json(&json)
    } else {
        LiftedSupport::from_polynomial(&parse_polynomial(&text)?)
    }
}

/// Polygon JSON `{"points": [...]}`, or the support of a polynomial.
pub fn read_points(path: &Path) -> Result<Vec<LatticePoint>> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let json: PolygonJson = serde_json::from_str(&text)?;
        if json.points.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(json.points)
    } else {
        Ok(LiftedSupport::from_polynomial(&parse_polynomial(&text)?)?.points())
    }
}

fn need_m(cfg: &RunConfig) -> Result<i64> {
    cfg.m.ok_or_else(|| Error::OutOfDomain("--m is required".into()))
}

fn need_point(cfg: &RunConfig) -> Result<(Q, Q)> {
    cfg.point.clone().ok_or_else(|| Error::OutOfDomain("--point is required".into()))
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn unsupported(cfg: &RunConfig) -> Error {
    Error::OutOfDomain(format!("format {:?} for this command", cfg.format))
}

/// Runs one configuration. Input problems surface as `Err`.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let ok = |output: String| Ok(Outcome { output, code: EXIT_CONSISTENT });
    match &cfg.command {
        Command::Tropicalize { .. } | Command::Render { .. } => {
            let ls = read_support(&cfg.inputs[0])?;
            let sub = lift_and_subdivide(&ls);
            let curve = dual_curve(&sub).ok();
            match cfg.format {
                Format::Json => ok(to_json(&TropicalizationJson::new(&sub, curve.as_ref()))),
                Format::Svg => ok(render_svg(&sub, curve.as_ref(), cfg.point.as_ref())),
                Format::Text => ok(tropicalization_text(&sub, curve.as_ref())),
            }
        }
        Command::Analyze { .. } => {
            let ls = read_support(&cfg.inputs[0])?;
            let (m, p) = (need_m(cfg)?, need_point(cfg)?);
            let cert = certificate_for_support(&ls, (&p.0, &p.1), m);
            let lines = dual_curve(&lift_and_subdivide(&ls))
                .ok()
                .filter(|c| c.contains((&p.0, &p.1)))
                .map(|c| tropical_multiplicity_check(&c, (&p.0, &p.1), m, cfg.bound));
            let code = match cert.verdict {
                Verdict::Consistent => EXIT_CONSISTENT,
                Verdict::Refuted => EXIT_REFUTED,
                Verdict::InconclusiveInadmissible => EXIT_INCONCLUSIVE,
            };
            let output = match cfg.format {
                Format::Json => to_json(&analysis_json(&cert, lines.as_ref(), cfg.bound)),
                Format::Text => analysis_text(&cert, lines.as_ref(), cfg.bound, color_enabled(cfg)),
                Format::Svg => return Err(unsupported(cfg)),
            };
            Ok(Outcome { output, code })
        }
        Command::Mult { at, .. } => {
            let text = std::fs::read_to_string(&cfg.inputs[0])?;
            let f = parse_polynomial(&text)?;
            let (label, mult) = match at {
                None => (("1".to_string(), "1".to_string()), multiplicity_at_one(&f)?),
                Some(s) => {
                    let (a, b) = s.split_once(',').ok_or_else(|| Error::OutOfDomain(format!("point {s:?}")))?;
                    let (p1, p2) = (parse_scalar(a)?, parse_scalar(b)?);
                    ((p1.to_string(), p2.to_string()), multiplicity_at(&f, &p1, &p2)?)
                }
            };
            match cfg.format {
                Format::Json => ok(to_json(&json!({"point": [label.0, label.1], "multiplicity": mult}))),
                Format::Text => ok(format!("multiplicity at ({}, {}): {mult}\n", label.0, label.1)),
                Format::Svg => Err(unsupported(cfg)),
            }
        }
        Command::Width { .. } => {
            let pts = read_points(&cfg.inputs[0])?;
            let (w, u) = minimal_lattice_width(&pts)?;
            match cfg.format {
                Format::Json => ok(to_json(&json!({"width": w, "direction": u}))),
                Format::Text => ok(format!("{w} in direction {u}\n")),
                Format::Svg => Err(unsupported(cfg)),
            }
        }
        Command::Thick { .. } => {
            let pts = read_points(&cfg.inputs[0])?;
            let m = need_m(cfg)?;
            let t = is_m_thick(&pts, m);
            match cfg.format {
                Format::Json => ok(to_json(&json!({"m": m, "thick": t.thick, "witness": t.witness}))),
                Format::Text => {
                    let mut s = format!("m-thick: {}\n", t.thick);
                    if let Some(u) = t.witness {
                        let _ = writeln!(s, "violated in direction {u}");
                    }
                    ok(s)
                }
                Format::Svg => Err(unsupported(cfg)),
            }
        }
        Command::Stable { .. } => {
            let curve = |p: &Path| -> Result<_> { dual_curve(&lift_and_subdivide(&read_support(p)?)) };
            let (a, b) = (curve(&cfg.inputs[0])?, curve(&cfg.inputs[1])?);
            let v = cfg.seed.map_or_else(Perturbation::default, Perturbation::from_seed);
            let pts = stable_intersection_with(&a, &b, &v);
            match cfg.format {
                Format::Json => ok(to_json(&intersection_json(&pts))),
                Format::Text => {
                    let mut s = String::new();
                    for p in &pts {
                        let _ = writeln!(s, "{p}");
                    }
                    let _ = writeln!(s, "total {}", pts.iter().map(|p| p.mult).sum::<i64>());
                    ok(s)
                }
                Format::Svg => Err(unsupported(cfg)),
            }
        }
    }
}

fn color_enabled(cfg: &RunConfig) -> bool {
    cfg.out.is_none() && std::env::var_os("TROPIGON_NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

fn paint(s: &str, code: &str, on: bool) -> String {
    if on {
        format!("\x1b[{code}m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

fn line_summary(lines: Option<&LineCheck>, bound: i64) -> Value {
    match lines {
        None => Value::Null,
        Some(l) => json!({
            "bound": bound,
            "pass": l.pass,
            "complete": !l.pass,
            "maps_checked": l.maps_checked,
            "lines_checked": l.lines_checked,
            "violations": l.violations.len(),
            "first_violation": l.violations.first(),
        }),
    }
}

fn analysis_json(cert: &Certificate, lines: Option<&LineCheck>, bound: i64) -> Value {
    let mut v = serde_json::to_value(cert).expect("serialisable");
    v["tropical_lines"] = line_summary(lines, bound);
    v
}

fn analysis_text(cert: &Certificate, lines: Option<&LineCheck>, bound: i64, color: bool) -> String {
    let mut s = String::new();
    let vc = match cert.verdict {
        Verdict::Consistent => "32",
        Verdict::Refuted => "31",
        Verdict::InconclusiveInadmissible => "33",
    };
    let _ = writeln!(
        s,
        "point ({}, {}), m = {}: {}",
        fmt_q(&cert.point.0),
        fmt_q(&cert.point.1),
        cert.m,
        paint(cert.verdict.as_str(), vc, color)
    );
    for c in &cert.checks {
        let sc = match c.status {
            CheckStatus::Pass => "32",
            CheckStatus::Fail => "31",
            CheckStatus::NotApplicable => "90",
        };
        let _ = write!(s, "  {:<28} {}", c.name, paint(&c.status.to_string(), sc, color));
        match (&c.value, &c.bound) {
            (Some(v), Some(b)) => {
                let _ = write!(s, "  {v} vs {b}");
            }
            (Some(v), None) => {
                let _ = write!(s, "  {v}");
            }
            _ => {}
        }
        if let Some(w) = &c.witness {
            let _ = write!(s, "  [{w}]");
        }
        if c.informational {
            s.push_str("  (informational)");
        }
        s.push('\n');
    }
    match lines {
        None => s.push_str("  tropical lines: not applicable\n"),
        Some(l) if l.pass => {
            let _ = writeln!(
                s,
                "  tropical lines: no violation among {} positions of {} line shapes (entries <= {bound}, incomplete)",
                l.lines_checked, l.maps_checked
            );
        }
        Some(l) => {
            let v = &l.violations[0];
            let _ = writeln!(
                s,
                "  tropical lines: {} violations; e.g. map {:?} vertex ({}, {}) meets with {}",
                l.violations.len(),
                v.map,
                fmt_q(&v.vertex.0),
                fmt_q(&v.vertex.1),
                v.local_intersection
            );
        }
    }
    s
}

fn tropicalization_text(
    sub: &crate::tropical::RegularSubdivision,
    curve: Option<&crate::tropical::TropicalCurve>,
) -> String {
    let mut s = String::new();
    let Some(curve) = curve else {
        let _ = writeln!(s, "degenerate: Newton polygon of dimension {}", sub.dimension);
        return s;
    };
    let _ = writeln!(s, "{} cells", sub.cells.len());
    for (k, c) in sub.cells.iter().enumerate() {
        let vs: Vec<String> = c.polygon.vertices().iter().map(|v| v.to_string()).collect();
        let p = &curve.vertices[k].point;
        let _ = writeln!(
            s,
            "  cell {k}: area {} [{}] -> vertex ({}, {})",
            fmt_q(&c.polygon.area()),
            vs.join(" "),
            fmt_q(&p.0),
            fmt_q(&p.1)
        );
    }
    for e in &curve.edges {
        let _ = writeln!(s, "  edge {} - {}: direction {:?} weight {}", e.from, e.to, e.direction, e.weight);
    }
    for r in &curve.rays {
        let _ = writeln!(s, "  ray from {}: direction {:?} weight {}", r.from, r.direction, r.weight);
    }
    s
}

fn worst(codes: impl Iterator<Item = i32>) -> i32 {
    let rank = |c: i32| match c {
        EXIT_INPUT_ERROR => 3,
        EXIT_REFUTED => 2,
        EXIT_INCONCLUSIVE => 1,
        _ => 0,
    };
    codes.max_by_key(|&c| rank(c)).unwrap_or(EXIT_CONSISTENT)
}

/// Runs every configuration, combining batch results. Returns the text to
/// write, error messages for stderr, and the exit code.
pub fn run_all(cfgs: &[RunConfig], batch: bool) -> (String, Vec<String>, i32) {
    let results: Vec<(PathBuf, Result<Outcome>)> = std::thread::scope(|s| {
        let handles: Vec<_> = cfgs.iter().map(|c| (c.inputs[0].clone(), s.spawn(move || run(c)))).collect();
        handles
            .into_iter()
            .map(|(p, h)| (p, h.join().unwrap_or_else(|_| Err(Error::Degenerate("analysis panicked".into())))))
            .collect()
    });
    let mut errors = Vec::new();
    let codes: Vec<i32> = results
        .iter()
        .map(|(p, r)| match r {
            Ok(o) => o.code,
            Err(e) => {
                errors.push(format!("{}: {e}", p.display()));
                EXIT_INPUT_ERROR
            }
        })
        .collect();
    let code = worst(codes.into_iter());
    if !batch {
        let out = results.into_iter().next().and_then(|(_, r)| r.ok()).map(|o| o.output).unwrap_or_default();
        return (out, errors, code);
    }
    let json = cfgs.first().map_or(false, |c| c.format == Format::Json);
    let mut out = String::new();
    if json {
        let mut map = serde_json::Map::new();
        for (p, r) in &results {
            let key = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            let v = match r {
                Ok(o) => serde_json::from_str(&o.output).unwrap_or(Value::String(o.output.clone())),
                Err(e) => json!({"error": e.to_string()}),
            };
            map.insert(key, v);
        }
        out = to_json(&Value::Object(map));
    } else {
        for (p, r) in &results {
            let _ = writeln!(out, "== {}", p.display());
            match r {
                Ok(o) => out.push_str(&o.output),
                Err(e) => {
                    let _ = writeln!(out, "error: {e}");
                }
            }
        }
    }
    (out, errors, code)
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_CONSISTENT };
        }
    };
    let batch = cli.batch.is_some();
    let cfgs = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT_ERROR;
        }
    };
    let (out, errors, code) = run_all(&cfgs, batch);
    for e in &errors {
        eprintln!("error: {e}");
    }
    if !batch && !errors.is_empty() {
        return code;
    }
    let written = match cfgs.first().and_then(|c| c.out.as_ref()) {
        Some(path) => std::fs::write(path, &out),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(out.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_INPUT_ERROR;
    }
    code
}
