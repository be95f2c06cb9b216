use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use origami_cli::commands::{self, Method, Outputs, EXIT_OK, EXIT_USAGE};
use origami_cli::demo::DEFAULT_ANGLE_DEG;

#[derive(Parser)]
#[command(name = "origami", version, about = "Flat-origami construction engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Incidence tolerance.
    #[arg(long, env = "ORIGAMI_TOL")]
    tol: Option<f64>,
    /// Write an SVG drawing here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Write the JSON step trace here.
    #[arg(long)]
    trace: Option<PathBuf>,
}

impl Common {
    fn outputs(&self) -> Outputs {
        Outputs {
            svg: self.svg.clone(),
            trace: self.trace.clone(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Fold,
    Direct,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and execute a .fold script.
    Run {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named construction: bisector, incenter, euler, circle-line,
    /// trisect, double-cube, heptagon.
    Demo {
        name: String,
        /// Angle for `trisect`, in degrees.
        #[arg(long, default_value_t = DEFAULT_ANGLE_DEG)]
        angle: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Real roots of t³ + a·t² + b·t + c.
    SolveCubic {
        #[arg(allow_negative_numbers = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        b: String,
        #[arg(allow_negative_numbers = true)]
        c: String,
        #[arg(long, value_enum, default_value = "fold")]
        method: MethodArg,
        #[arg(long, env = "ORIGAMI_TOL")]
        tol: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK } as u8);
        }
    };
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = match cli.command {
        Command::Run { path, common } => match commands::tolerance(common.tol, &mut err) {
            Ok(tol) => commands::cmd_run(&path, &tol, &common.outputs(), &mut out, &mut err),
            Err(code) => code,
        },
        Command::Demo { name, angle, common } => match commands::tolerance(common.tol, &mut err) {
            Ok(tol) => commands::cmd_demo(&name, angle, &tol, &common.outputs(), &mut out, &mut err),
            Err(code) => code,
        },
        Command::SolveCubic { a, b, c, method, tol } => match commands::tolerance(tol, &mut err) {
            Ok(tol) => {
                let method = match method {
                    MethodArg::Fold => Method::Fold,
                    MethodArg::Direct => Method::Direct,
                };
                commands::cmd_solve_cubic([&a, &b, &c], method, &tol, &mut out, &mut err)
            }
            Err(code) => code,
        },
    };
    ExitCode::from(code as u8)
}
