//! Subcommand bodies. Each writes to the given streams and returns the
//! process exit code.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use origami::axioms::solve_cubic_by_fold;
use origami::cubic::{solve_cubic_real, Cubic};
use origami::geom::Tolerance;
use origami::script::{execute, parse, ConstructionState, Object};

use crate::demo::{run_demo, DemoError};
use crate::format::sig12;
use crate::render::{render_svg, RenderSpec};
use crate::trace::trace_json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RUNTIME: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Optional output files.
#[derive(Debug, Clone, Default)]
pub struct Outputs {
    pub svg: Option<PathBuf>,
    pub trace: Option<PathBuf>,
}

/// Writes `contents` to a temporary file next to `path`, then renames it.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn tolerance(eps_geom: Option<f64>, err: &mut dyn Write) -> Result<Tolerance, i32> {
    let tol = match eps_geom {
        None => Ok(Tolerance::default()),
        Some(t) => Tolerance::with_geom(t),
    };
    tol.map_err(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

fn write_outputs(state: &ConstructionState, outputs: &Outputs, err: &mut dyn Write) -> i32 {
    if let Some(path) = &outputs.svg {
        let svg = match render_svg(state, &RenderSpec::default()) {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_RUNTIME;
            }
        };
        if let Err(e) = write_atomic(path, &svg) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_IO;
        }
    }
    if let Some(path) = &outputs.trace {
        if let Err(e) = write_atomic(path, &trace_json(state)) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_IO;
        }
    }
    EXIT_OK
}

/// Final value of every named object, in the order they were made.
pub fn summarize(state: &ConstructionState) -> String {
    let mut s = format!("steps={}\n", state.trace().len());
    for step in state.trace() {
        let name = match &step.produced {
            origami::script::Produced::Point { name, .. } | origami::script::Produced::Line { name, .. } => name,
            origami::script::Produced::Check { .. } => continue,
        };
        match state.get(name) {
            Some(Object::Point(p)) => s.push_str(&format!("{name}={} {}\n", sig12(p.x), sig12(p.y))),
            Some(Object::Line(l)) => {
                s.push_str(&format!("{name}={} {} {}\n", sig12(l.nx()), sig12(l.ny()), sig12(l.d())))
            }
            None => {}
        }
    }
    s
}

pub fn cmd_run(path: &Path, tol: &Tolerance, outputs: &Outputs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_IO;
        }
    };
    let script = match parse(&text) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "{}:{e}", path.display());
            return EXIT_USAGE;
        }
    };
    let state = match execute(&script, tol) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "{}:{e}", path.display());
            return EXIT_RUNTIME;
        }
    };
    let _ = out.write_all(summarize(&state).as_bytes());
    write_outputs(&state, outputs, err)
}

pub fn cmd_demo(
    name: &str,
    angle_deg: f64,
    tol: &Tolerance,
    outputs: &Outputs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match run_demo(name, angle_deg, tol) {
        Ok(d) => {
            let _ = out.write_all(d.render().as_bytes());
            write_outputs(&d.state, outputs, err)
        }
        Err(e @ (DemoError::UnknownDemo { .. } | DemoError::BadAngle(_))) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_RUNTIME
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Fold,
    Direct,
}

pub fn cmd_solve_cubic(
    coeffs: [&str; 3],
    method: Method,
    tol: &Tolerance,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut v = [0.0; 3];
    for (slot, text) in v.iter_mut().zip(coeffs) {
        match text.trim().parse::<f64>() {
            Ok(x) if x.is_finite() => *slot = x,
            _ => {
                let _ = writeln!(err, "error: `{text}` is not a finite decimal number");
                return EXIT_USAGE;
            }
        }
    }
    let [a, b, c] = v;
    let roots = match method {
        Method::Fold => solve_cubic_by_fold(a, b, c, tol),
        Method::Direct => solve_cubic_real(&Cubic::monic(a, b, c)).map(|r| r.iter().map(|r| r.value).collect()),
    };
    match roots {
        Ok(roots) => {
            for r in roots {
                let _ = writeln!(out, "{}", sig12(r));
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_RUNTIME
        }
    }
}
