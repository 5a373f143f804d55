//! `hexamoment`: exact lozenge tiling statistics from the command line.
//!
//! Exit codes: 0 success, 1 usage, 2 verification failure, 3 resource limit.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hexamoment::engine::{count_box, dp_cells, EnumLimit, Sampler, DEFAULT_ENUM_LIMIT};
use hexamoment::numeric::{fraction_string, to_f64, Rational};
use hexamoment::pp::{render_ascii, render_svg, BoxDims, PlanePartition};
use hexamoment::stats::{prob_table, MomentReport, ProbTable};
use hexamoment::verify::{verify_single, verify_sweep, VerifyOptions, VerifyReport};
use hexamoment::Error;
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hexamoment",
    version,
    about = "Exact statistics of random lozenge tilings of a hexagon"
)]
struct Cli {
    /// Largest enumeration or transfer-matrix size allowed without --force.
    #[arg(long, global = true, env = "HEXAMOMENT_LIMIT", default_value_t = DEFAULT_ENUM_LIMIT,
          value_parser = clap::value_parser!(u64).range(1..))]
    limit: u64,

    /// Ignore the size limit.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
struct Dims {
    #[arg(value_parser = clap::value_parser!(u32).range(1..))]
    a: u32,
    #[arg(value_parser = clap::value_parser!(u32).range(1..))]
    b: u32,
    #[arg(value_parser = clap::value_parser!(u32).range(1..))]
    c: u32,
}

impl Dims {
    fn box_dims(self) -> BoxDims {
        BoxDims::new(self.a as usize, self.b as usize, self.c as usize).expect("clap enforces positive sides")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Render {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of plane partitions in the a x b x c box.
    Count {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Probability of a horizontal lozenge at every lattice point.
    ProbTable {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Add a decimal approximation next to each exact value.
        #[arg(long)]
        float: bool,
    },
    /// Horizontal and vertical moments of inertia with their closed forms.
    Moments {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check every closed form against exact computation.
    Verify {
        /// Sweep all boxes with sides up to N.
        #[arg(long, value_name = "N", conflicts_with_all = ["a", "b", "c"],
              value_parser = clap::value_parser!(u32).range(1..))]
        max: Option<u32>,
        #[arg(requires_all = ["b", "c"], value_parser = clap::value_parser!(u32).range(1..))]
        a: Option<u32>,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        b: Option<u32>,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        c: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Uniformly random plane partitions, reproducible from the seed.
    Sample {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Draw the tilings instead of printing JSON.
        #[arg(long, value_enum)]
        render: Option<Render>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verify(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::Limit(format!("{e}; raise --limit or pass --force")),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let limit = EnumLimit {
        limit: cli.limit,
        force: cli.force,
    };
    match run(cli.command, limit) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verify(out)) => {
            print!("{out}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_LIMIT)
        }
    }
}

fn run(command: Command, limit: EnumLimit) -> Outcome {
    match command {
        Command::Count { dims, format } => {
            let d = dims.box_dims();
            limit.check(&dp_cells(d))?;
            let n = count_box(d);
            match format {
                Format::Text => Ok(format!("{n}\n")),
                Format::Json => Ok(to_json(&json!({
                    "schema": "hexamoment.count.v1",
                    "dims": dims_json(d),
                    "count": n.to_string(),
                }))),
                Format::Csv => Err(unsupported("count", format)),
            }
        }
        Command::ProbTable { dims, format, float } => {
            let d = dims.box_dims();
            limit.check(&dp_cells(d))?;
            Ok(prob_table_output(&prob_table(d), format, float))
        }
        Command::Moments { dims, format } => {
            let d = dims.box_dims();
            limit.check(&dp_cells(d))?;
            let report = MomentReport::from_table(&prob_table(d));
            match format {
                Format::Json => Ok(to_json(&moments_json(&report))),
                Format::Text => Ok(moments_text(&report)),
                Format::Csv => Err(unsupported("moments", format)),
            }
        }
        Command::Verify {
            max,
            a,
            b,
            c,
            format,
            inject_fault,
        } => {
            if format == Format::Csv {
                return Err(unsupported("verify", format));
            }
            let opts = VerifyOptions { limit, inject_fault };
            let (scope, report) = match (a, b, c) {
                (Some(a), Some(b), Some(c)) => {
                    let d = Dims { a, b, c }.box_dims();
                    limit.check(&dp_cells(d))?;
                    (json!({ "dims": dims_json(d) }), verify_single(d, opts)?)
                }
                _ => {
                    let max = max.unwrap_or(3);
                    let largest = BoxDims::new(max as usize, max as usize, max as usize)?;
                    limit.check(&dp_cells(largest))?;
                    (json!({ "max": max }), verify_sweep(max as usize, opts)?)
                }
            };
            let out = match format {
                Format::Json => to_json(&verify_json(scope, &report)),
                _ => verify_text(&report),
            };
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Verify(out))
            }
        }
        Command::Sample {
            dims,
            seed,
            count,
            render,
        } => {
            let d = dims.box_dims();
            limit.check(&dp_cells(d))?;
            sample_output(d, seed, count, render)
        }
    }
}

fn unsupported(command: &str, format: Format) -> Failure {
    let name = format
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    Failure::Usage(format!("{command} does not support --format {name}"))
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dims_json(d: BoxDims) -> Value {
    json!({ "a": d.a(), "b": d.b(), "c": d.c() })
}

fn prob_table_output(table: &ProbTable, format: Format, float: bool) -> String {
    let d = table.dims();
    let total = table.total();
    match format {
        Format::Json => {
            let entries: Vec<Value> = table
                .entries()
                .map(|(x, y, p)| {
                    let mut e = json!({ "x": x, "y": y, "p": fraction_string(p) });
                    if float {
                        e["p_float"] = json!(to_f64(p));
                    }
                    e
                })
                .collect();
            to_json(&json!({
                "schema": "hexamoment.prob-table.v1",
                "dims": dims_json(d),
                "entries": entries,
                "total": fraction_string(&total),
            }))
        }
        Format::Csv => {
            let mut s = String::from("a,b,c,x,y,p_num,p_den");
            s.push_str(if float { ",p_float\n" } else { "\n" });
            let mut row = |x: String, y: String, p: &Rational| {
                let _ = write!(s, "{},{},{},{x},{y},{},{}", d.a(), d.b(), d.c(), p.numer(), p.denom());
                if float {
                    let _ = write!(s, ",{}", to_f64(p));
                }
                s.push('\n');
            };
            for (x, y, p) in table.entries() {
                row(x.to_string(), y.to_string(), p);
            }
            // footer: empty x and y, value is the table total
            row(String::new(), String::new(), &total);
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (x, y, p) in table.entries() {
                let _ = write!(s, "{x} {y} {}", fraction_string(p));
                if float {
                    let _ = write!(s, " {}", to_f64(p));
                }
                s.push('\n');
            }
            let _ = writeln!(s, "total {}", fraction_string(&total));
            s
        }
    }
}

fn moments_json(r: &MomentReport) -> Value {
    let f = fraction_string;
    json!({
        "schema": "hexamoment.moments.v1",
        "dims": dims_json(r.dims),
        "horizontal": f(&r.horizontal),
        "vertical": f(&r.vertical),
        "closed_form": {
            "horizontal": f(&r.closed_horizontal),
            "vertical": f(&r.closed_vertical),
        },
        "split": {
            "rows": f(&r.split[0]),
            "cross": f(&r.split[1]),
            "horizontal": f(&r.split[2]),
        },
        "closed_split": {
            "rows": f(&r.closed_split[0]),
            "cross": f(&r.closed_split[1]),
        },
        "consistent": r.consistent(),
    })
}

fn moments_text(r: &MomentReport) -> String {
    let f = fraction_string;
    format!(
        "dims {}\nhorizontal {} (closed form {})\nvertical {} (closed form {})\nsplit rows {} cross {} horizontal {}\nconsistent {}\n",
        r.dims,
        f(&r.horizontal),
        f(&r.closed_horizontal),
        f(&r.vertical),
        f(&r.closed_vertical),
        f(&r.split[0]),
        f(&r.split[1]),
        f(&r.split[2]),
        r.consistent()
    )
}

fn verify_text(report: &VerifyReport) -> String {
    let mut s = String::new();
    for (kind, passed, total) in report.summary() {
        let tag = if passed == total { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{tag} {} {passed}/{total}", kind.name());
    }
    for check in report.failures() {
        let _ = writeln!(s, "{check}");
    }
    let failed = report.failures().count();
    let _ = writeln!(s, "{} checks, {failed} failed", report.checks.len());
    s
}

fn verify_json(scope: Value, report: &VerifyReport) -> Value {
    let summary: Vec<Value> = report
        .summary()
        .into_iter()
        .map(|(kind, passed, total)| json!({ "check": kind.name(), "passed": passed, "total": total }))
        .collect();
    let failures: Vec<Value> = report
        .failures()
        .map(|c| {
            json!({
                "check": c.kind.name(),
                "subject": c.subject,
                "expected": c.expected,
                "actual": c.actual,
            })
        })
        .collect();
    json!({
        "schema": "hexamoment.verify.v1",
        "scope": scope,
        "passed": report.all_passed(),
        "checks": report.checks.len(),
        "summary": summary,
        "failures": failures,
    })
}

fn sample_output(d: BoxDims, seed: u64, count: u64, render: Option<Render>) -> Outcome {
    let mut sampler = Sampler::new(d, seed);
    let mut samples = Vec::with_capacity(count.min(1 << 16) as usize);
    for _ in 0..count {
        let pp = sampler.sample();
        validate(&pp)?;
        samples.push(pp);
    }
    Ok(match render {
        Some(Render::Ascii) => samples
            .iter()
            .map(|pp| render_ascii(&pp.to_tiling()))
            .collect::<Vec<_>>()
            .join("\n"),
        Some(Render::Svg) => samples.iter().map(|pp| render_svg(&pp.to_tiling())).collect(),
        None => {
            let items: Vec<Value> = samples
                .iter()
                .map(|pp| {
                    let horizontals: Vec<[i64; 2]> = pp.horizontal_positions().iter().map(|p| [p.x, p.y]).collect();
                    json!({ "rows": pp.rows(), "volume": pp.volume(), "horizontals": horizontals })
                })
                .collect();
            to_json(&json!({
                "schema": "hexamoment.sample.v1",
                "dims": dims_json(d),
                "seed": seed,
                "samples": items,
            }))
        }
    })
}

fn validate(pp: &PlanePartition) -> Result<(), Failure> {
    let rows_ok = PlanePartition::from_rows(pp.dims(), &pp.rows()).is_ok();
    let tiling_ok = pp.to_tiling().to_plane_partition().as_ref() == Ok(pp);
    if rows_ok && tiling_ok {
        Ok(())
    } else {
        Err(Failure::Verify(format!("sample {:?} failed validation\n", pp.rows())))
    }
}
