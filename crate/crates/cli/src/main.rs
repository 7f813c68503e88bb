//! `dispheres`: query, plan and verify directed paths on cube-boundary spheres.

mod figure;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};
use dispheres::{classify, plan, violation, Error, PlannerOrder, Point};
use serde_json::{json, Value};

use output::{emit, points_csv, Format, SCHEMA};
use verify::RunConfig;

/// Exit codes shared by every subcommand.
mod exit {
    pub const OK: u8 = 0;
    pub const UNREACHABLE: u8 = 1;
    pub const CHECK_FAILED: u8 = 1;
    pub const MALFORMED: u8 = 2;
    pub const GUARDRAIL: u8 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "dispheres", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Progress messages on stderr; repeat for more.
    #[arg(short, long, action = ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a directed boundary path runs from X to Y.
    Reach {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Emit the planned path from X to Y and its partition label.
    Plan {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        /// Also emit polyline plot data on the cube (n = 2 only).
        #[arg(long)]
        figure: bool,
    },
    /// Print the partition label (A1 or A2) of a reachable pair.
    Classify {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Run the verification pipeline against the brute-force grid.
    Verify {
        /// Sphere dimension.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Grid resolution (subdivisions per axis).
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Random pairs per sampled check.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    // die quietly when piped into `head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Reach { ref x, ref y } => reach(&cli, x, y),
        Command::Plan {
            ref x,
            ref y,
            figure,
        } => plan_cmd(&cli, x, y, figure),
        Command::Classify { ref x, ref y } => classify_cmd(&cli, x, y),
        Command::Verify {
            n,
            m,
            samples,
            seed,
        } => verify_cmd(
            &cli,
            RunConfig {
                n,
                m,
                samples,
                seed,
                verbosity: cli.verbose,
            },
        ),
    };
    ExitCode::from(code)
}

fn parse_pair(x: &str, y: &str) -> Result<(Point, Point), Error> {
    let x: Point = x.parse()?;
    let y: Point = y.parse()?;
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok((x, y))
}

fn malformed(e: &Error) -> u8 {
    eprintln!("error: {e}");
    exit::MALFORMED
}

fn reach(cli: &Cli, x: &str, y: &str) -> u8 {
    let (x, y) = match parse_pair(x, y) {
        Ok(pair) => pair,
        Err(e) => return malformed(&e),
    };
    let verdict = classify(&x, &y);
    let reachable = verdict.is_ok();
    let witness = match &verdict {
        Ok(label) => {
            let n = x.dimension();
            json!({
                "label": label,
                "identity": violation(&x, &y, &PlannerOrder::identity(n)).ok().flatten(),
                "reversal": violation(&x, &y, &PlannerOrder::reversal(n)).ok().flatten(),
            })
        }
        Err(e) => json!(e),
    };
    match cli.format {
        Format::Json => emit(&json!({
            "schema": SCHEMA,
            "source": x,
            "target": y,
            "reachable": reachable,
            "witness": witness,
        })),
        Format::Csv => {
            let (label, code) = match &verdict {
                Ok(label) => (label.to_string(), String::new()),
                Err(e) => (String::new(), e.code().to_owned()),
            };
            println!("source,target,reachable,label,code");
            println!(
                "{},{},{reachable},{label},{code}",
                points_csv(&x),
                points_csv(&y)
            );
        }
    }
    if reachable {
        exit::OK
    } else {
        exit::UNREACHABLE
    }
}

fn unreachable(e: &Error) -> u8 {
    eprintln!("error: {e}");
    let body = json!({ "schema": SCHEMA, "error": e });
    emit(&body);
    exit::UNREACHABLE
}

fn plan_cmd(cli: &Cli, x: &str, y: &str, figure: bool) -> u8 {
    let (x, y) = match parse_pair(x, y) {
        Ok(pair) => pair,
        Err(e) => return malformed(&e),
    };
    if figure && x.dimension() != 2 {
        return malformed(&Error::InvalidParameter {
            reason: format!(
                "--figure needs points of the 2-sphere, got n = {}",
                x.dimension()
            ),
        });
    }
    let label = match classify(&x, &y) {
        Ok(label) => label,
        Err(e) => return unreachable(&e),
    };
    let path = match plan(&x, &y) {
        Ok(path) => path,
        Err(e) => return unreachable(&e),
    };
    match cli.format {
        Format::Json => {
            let mut body = json!({
                "schema": SCHEMA,
                "label": label,
                "path": path,
            });
            if figure {
                body["figure"] = figure::plot_data(&path);
            }
            emit(&body);
        }
        Format::Csv => {
            println!("label,waypoint,stage,point");
            for (i, (w, s)) in path.waypoints().iter().zip(path.stages()).enumerate() {
                println!(
                    "{label},{i},{},{}",
                    dispheres::rational::format(s),
                    points_csv(w)
                );
            }
            if figure {
                println!();
                figure::write_csv(&path);
            }
        }
    }
    exit::OK
}

fn classify_cmd(cli: &Cli, x: &str, y: &str) -> u8 {
    let (x, y) = match parse_pair(x, y) {
        Ok(pair) => pair,
        Err(e) => return malformed(&e),
    };
    match classify(&x, &y) {
        Ok(label) => {
            match cli.format {
                Format::Json => emit(&json!({ "schema": SCHEMA, "label": label })),
                Format::Csv => println!("label\n{label}"),
            }
            exit::OK
        }
        Err(e) => unreachable(&e),
    }
}

fn verify_cmd(cli: &Cli, config: RunConfig) -> u8 {
    let cap = match verify::path_cap_from_env() {
        Ok(cap) => cap,
        Err(e) => {
            eprintln!("error: {e}");
            return exit::GUARDRAIL;
        }
    };
    match verify::run(&config, cap) {
        Ok(report) => {
            match cli.format {
                Format::Json => emit(&report.to_json(&config)),
                Format::Csv => report.write_csv(),
            }
            if report.passed() {
                exit::OK
            } else {
                exit::CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let body: Value =
                json!({ "schema": SCHEMA, "error": e.to_string(), "guardrail": e.guardrail() });
            emit(&body);
            exit::GUARDRAIL
        }
    }
}
