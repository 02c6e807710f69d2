//! Command-line front end and the tuple file format.
//!
//! A tuple file starts with a header line `n q` followed by one tuple per line
//! as `n` whitespace-separated integers. Blank lines and lines starting with
//! `#` are skipped. Set families are stored as `q = 2` tuple files of
//! characteristic vectors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::closedform::{bound, BoundName, BoundParams};
use crate::compress::alon_compress;
use crate::error::{Error, Result};
use crate::ideals::{certify_groebner, vanishing_basis};
use crate::polyring::{Monomial, Polynomial, TermOrder};
use crate::tuples::{
    blow_up, complete_uniform, hamming_sphere, km_extremal, lower_bound_slice, shattered_family, PointSet,
    SetFamily,
};
use crate::verify::{run_suite, SuiteParams, SUITES};

/// Parse a tuple file.
pub fn parse_tuples(text: &str) -> Result<PointSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header `n q`".into() })?;
    let fields = parse_ints(header, hline)?;
    let [n, q] = fields[..] else {
        return Err(Error::Parse { line: hline, message: format!("header must be `n q`, found `{header}`") });
    };
    if q < 2 {
        return Err(Error::Parse { line: hline, message: format!("alphabet size q={q} is below 2") });
    }
    let n = n as usize;
    let mut points = Vec::new();
    for (line, l) in lines {
        let coords = parse_ints(l, line)?;
        if coords.len() != n {
            return Err(Error::Parse { line, message: format!("expected {n} coordinates, found {}", coords.len()) });
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= q) {
            return Err(Error::Parse { line, message: format!("coordinate {c} ≥ q={q}") });
        }
        points.push(coords);
    }
    PointSet::new(n, q, points)
}

fn parse_ints(l: &str, line: usize) -> Result<Vec<u32>> {
    l.split_whitespace()
        .map(|w| w.parse::<u32>().map_err(|_| Error::Parse { line, message: format!("`{w}` is not a nonnegative integer") }))
        .collect()
}

/// Render a tuple file; `parse_tuples(&render_tuples(v)) == v`.
pub fn render_tuples(v: &PointSet) -> String {
    let mut s = format!("{} {}\n", v.n(), v.q());
    for t in v {
        let coords: Vec<String> = t.coords().iter().map(|c| c.to_string()).collect();
        s.push_str(&coords.join(" "));
        s.push('\n');
    }
    s
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "shatter-basis", version, about = "Vanishing ideals, standard monomials and shattering bounds for tuple systems")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Dims {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    q: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one of the named tuple systems.
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        #[command(flatten)]
        dims: Dims,
        /// Set family (q = 2 tuple file), for `blowup`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Standard monomials of the vanishing ideal.
    Sm {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "deglex")]
        order: TermOrder,
    },
    /// Reduced Gröbner basis of the vanishing ideal.
    Gb {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "deglex")]
        order: TermOrder,
    },
    /// Shattered sets.
    Shatter {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Evaluate the bounds whose hypotheses hold.
    Bounds {
        #[command(flatten)]
        dims: Dims,
        /// Only this bound.
        #[arg(long)]
        bound: Option<BoundName>,
    },
    /// Check that a list of polynomials is a Gröbner basis of I(V).
    Certify {
        #[arg(long = "in")]
        input: PathBuf,
        /// One polynomial per line.
        #[arg(long)]
        basis: PathBuf,
        #[arg(long, default_value = "deglex")]
        order: TermOrder,
    },
    /// Downward-closed compression.
    Compress {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "deglex")]
        order: TermOrder,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// List suites and exit.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        order: Option<TermOrder>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Uniform,
    Hamming,
    Km,
    Blowup,
    Lowerbound,
}

enum Outcome {
    Ok,
    Rejected,
}

/// Run the command line `argv` (program name first); returns the exit code:
/// 0 on success, 1 when a verification fails, 2 on usage or input errors.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Rejected) => 1,
        Err(e) => {
            log::error!("{e}");
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::ParameterOutOfRange(format!("missing --{flag}")))
}

fn read_tuples(path: &PathBuf) -> Result<PointSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::ParameterOutOfRange(format!("cannot read {}: {e}", path.display())))?;
    log::info!("read {}", path.display());
    parse_tuples(&text)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::ParameterOutOfRange(format!("write failed: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    emit(out, &format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize")))
}

fn points_json(v: &PointSet) -> Value {
    json!({ "n": v.n(), "q": v.q(), "points": v.points() })
}

fn emit_points(out: &mut dyn Write, fmt: Format, v: &PointSet) -> Result<()> {
    match fmt {
        Format::Text => emit(out, &render_tuples(v)),
        Format::Json => emit_json(out, &points_json(v)),
    }
}

fn emit_monomials(out: &mut dyn Write, fmt: Format, ms: &[Monomial]) -> Result<()> {
    match fmt {
        Format::Text => emit(out, &ms.iter().map(|m| format!("{m}\n")).collect::<String>()),
        Format::Json => emit_json(out, &json!(ms)),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    let fmt = cli.format;
    match cli.command {
        Command::Construct { kind, dims, input } => {
            let v = match kind {
                Construction::Uniform => {
                    complete_uniform(need(dims.n, "n")?, need(dims.d, "d")? as u32, need(dims.q, "q")?)?
                }
                Construction::Hamming => hamming_sphere(need(dims.n, "n")?, need(dims.d, "d")?, need(dims.q, "q")?)?,
                Construction::Km => km_extremal(need(dims.n, "n")?, need(dims.s, "s")?, need(dims.q, "q")?)?,
                Construction::Blowup => {
                    let fam = read_tuples(&need(input, "in")?)?;
                    if fam.q() != 2 {
                        return Err(Error::ParameterOutOfRange("a set family file must have q = 2".into()));
                    }
                    blow_up(&SetFamily::from_point_set(&fam)?, need(dims.q, "q")?)?
                }
                Construction::Lowerbound => {
                    let lb = lower_bound_slice(need(dims.n, "n")?, need(dims.s, "s")?, need(dims.q, "q")?)?;
                    return match fmt {
                        Format::Text => emit(out, &format!("# d = {}\n{}", lb.d, render_tuples(&lb.x))),
                        Format::Json => {
                            let mut v = points_json(&lb.x);
                            v["d"] = json!(lb.d);
                            emit_json(out, &v)
                        }
                    }
                    .map(|_| Outcome::Ok);
                }
            };
            emit_points(out, fmt, &v)?;
        }
        Command::Sm { input, order } => {
            let v = read_tuples(&input)?;
            let (_, sm) = vanishing_basis(&v, order)?;
            emit_monomials(out, fmt, &sm.sorted(order))?;
        }
        Command::Gb { input, order } => {
            let v = read_tuples(&input)?;
            let (gb, _) = vanishing_basis(&v, order)?;
            match fmt {
                Format::Text => {
                    emit(out, &gb.generators.iter().map(|g| format!("{}\n", g.render(order))).collect::<String>())?
                }
                Format::Json => {
                    let items: Vec<Value> = gb
                        .generators
                        .iter()
                        .map(|g| json!({ "leading": g.leading_monomial(order).ok(), "polynomial": g.render(order) }))
                        .collect();
                    emit_json(out, &json!({ "order": order, "basis": items }))?
                }
            }
        }
        Command::Shatter { input } => {
            let v = read_tuples(&input)?;
            let sh = shattered_family(&v);
            let max = sh.members().iter().map(|m| m.len()).max();
            match fmt {
                Format::Text => {
                    let mut text: String = sh.members().iter().map(|m| format!("{m}\n")).collect();
                    if let Some(k) = max {
                        text.push_str(&format!("# largest shattered size {k}\n"));
                    }
                    emit(out, &text)?
                }
                Format::Json => emit_json(out, &json!({ "shattered": sh.members(), "max_size": max }))?,
            }
        }
        Command::Bounds { dims, bound: only } => {
            let mut params = BoundParams::new(need(dims.n, "n")?);
            params.d = dims.d;
            params.s = dims.s;
            params.q = dims.q;
            let names: Vec<BoundName> = only.map_or(BoundName::ALL.to_vec(), |b| vec![b]);
            let results: Vec<(BoundName, Result<num_bigint::BigInt>)> =
                names.iter().map(|&b| (b, bound(b, params).map(|r| r.value))).collect();
            if only.is_some() {
                if let Some((_, Err(e))) = results.first() {
                    return Err(e.clone());
                }
            }
            match fmt {
                Format::Text => emit(
                    out,
                    &results
                        .iter()
                        .map(|(b, r)| match r {
                            Ok(v) => format!("{b} {v}\n"),
                            Err(e) => format!("{b} n/a ({e})\n"),
                        })
                        .collect::<String>(),
                )?,
                Format::Json => {
                    let map: serde_json::Map<String, Value> = results
                        .iter()
                        .map(|(b, r)| {
                            let v = match r {
                                Ok(v) => json!(v.to_string()),
                                Err(_) => Value::Null,
                            };
                            (b.to_string(), v)
                        })
                        .collect();
                    emit_json(out, &json!({ "params": params, "bounds": map }))?
                }
            }
        }
        Command::Certify { input, basis, order } => {
            let v = read_tuples(&input)?;
            let text = std::fs::read_to_string(&basis)
                .map_err(|e| Error::ParameterOutOfRange(format!("cannot read {}: {e}", basis.display())))?;
            let polys = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .map(|(i, l)| {
                    Polynomial::parse(l, v.n()).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })
                })
                .collect::<Result<Vec<_>>>()?;
            let ok = certify_groebner(&v, &polys, order);
            match fmt {
                Format::Text => emit(out, if ok { "certified\n" } else { "rejected\n" })?,
                Format::Json => emit_json(out, &json!({ "order": order, "certified": ok }))?,
            }
            return Ok(if ok { Outcome::Ok } else { Outcome::Rejected });
        }
        Command::Compress { input, order } => {
            let v = read_tuples(&input)?;
            let r = alon_compress(&v, order)?;
            match fmt {
                Format::Text => emit(out, &render_tuples(&r.compressed))?,
                Format::Json => {
                    let traces: Vec<Value> = r
                        .traces
                        .iter()
                        .map(|(s, t)| json!({ "set": s, "original": t.original, "compressed": t.compressed }))
                        .collect();
                    let mut val = points_json(&r.compressed);
                    val["order"] = json!(order);
                    val["traces"] = json!(traces);
                    emit_json(out, &val)?
                }
            }
        }
        Command::Verify { suite, list, dims, order, samples, max_size, seed, jobs } => {
            if list {
                let text: String = SUITES.iter().map(|(name, what)| format!("{name:20} {what}\n")).collect();
                emit(out, &text)?;
                return Ok(Outcome::Ok);
            }
            let name = need(suite, "suite")?;
            let params = SuiteParams { n: dims.n, d: dims.d, s: dims.s, q: dims.q, order, samples, max_size, seed, jobs };
            log::info!("running suite {name}");
            let report = run_suite(&name, &params)?;
            match fmt {
                Format::Text => emit(out, &format!("{report}\n"))?,
                Format::Json => emit(out, &format!("{}\n", report.to_json()))?,
            }
            return Ok(if report.passed() { Outcome::Ok } else { Outcome::Rejected });
        }
    }
    Ok(Outcome::Ok)
}
