//! `octaplex`: validate the geometry suite, export geometry, render frame
//! files and serve frames to a viewer.
//!
//! Exit status is 0 on success, 1 when validation or parsing fails and 2
//! on I/O or environment failures.

mod serve;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use log::info;

use octaplex::export::GeometryExport;
use octaplex::fixture::{build_fixture, FixtureConfig};
use octaplex::framefile::{FrameHeader, FrameWriter};
use octaplex::polytope::{build_complex, ComplexKind};
use octaplex::projection::ViewPose;
use octaplex::script::{parse, render, Program, Sequencer, Signal};
use octaplex::validate::{run, ValidateOptions};

#[derive(Parser, Debug)]
#[command(
    name = "octaplex",
    version,
    about = "24-cell geometry, symmetry and light sequencing"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute incidence, group orders, rings, compounds and arcs
    Validate {
        #[arg(long, hide = true)]
        corrupt_vertex: Option<usize>,
    },
    /// Write the geometry JSON (`-` for standard output)
    Export {
        /// Left pose quaternion `x,y,z,w`
        #[arg(long, visible_alias = "left", value_parser = parse_quat)]
        pose_left: Option<[f64; 4]>,
        /// Right pose quaternion `x,y,z,w`
        #[arg(long, visible_alias = "right", value_parser = parse_quat)]
        pose_right: Option<[f64; 4]>,
        out: PathBuf,
    },
    /// Render a script to a frame file
    Render {
        script: PathBuf,
        /// CSV of `t,amplitude`; a constant 1.0 when absent or missing
        #[arg(long)]
        signal: Option<PathBuf>,
        #[arg(long, default_value_t = 30.0)]
        fps: f64,
        out: PathBuf,
    },
    /// Serve geometry and live frames over HTTP and WebSocket
    Serve {
        #[arg(long, default_value_t = 8024)]
        port: u16,
        #[arg(long, default_value_t = 30.0)]
        fps: f64,
        script: PathBuf,
    },
}

fn parse_quat(s: &str) -> Result<[f64; 4], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    <[f64; 4]>::try_from(parts).map_err(|v| format!("expected 4 numbers, got {}", v.len()))
}

/// Failure with its exit status.
#[derive(Debug)]
enum Failure {
    Invalid(String),
    Io(String),
}

impl Failure {
    fn io(what: &str, path: &Path, e: impl std::fmt::Display) -> Failure {
        Failure::Io(format!("{what} {}: {e}", path.display()))
    }
}

fn load_program(path: &Path) -> Result<Program, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io("cannot read", path, e))?;
    parse(&text).map_err(|diags| {
        let lines: Vec<String> = diags
            .0
            .iter()
            .map(|d| format!("{}:{d}", path.display()))
            .collect();
        Failure::Invalid(lines.join("\n"))
    })
}

fn load_signal(path: Option<&Path>) -> Result<Signal, Failure> {
    let Some(path) = path else {
        return Ok(Signal::constant(1.0));
    };
    match std::fs::read_to_string(path) {
        Ok(text) => Signal::from_csv(&text)
            .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display()))),
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            eprintln!(
                "signal file {} not found; using constant signal 1.0",
                path.display()
            );
            Ok(Signal::constant(1.0))
        }
        Err(e) => Err(Failure::io("cannot read", path, e)),
    }
}

fn open_out(path: &Path) -> Result<Box<dyn Write>, Failure> {
    if path == Path::new("-") {
        return Ok(Box::new(BufWriter::new(io::stdout().lock())));
    }
    let f = File::create(path).map_err(|e| Failure::io("cannot create", path, e))?;
    Ok(Box::new(BufWriter::new(f)))
}

fn sequencer(program: Program) -> Result<Sequencer, Failure> {
    let fixture = build_fixture(
        &build_complex(ComplexKind::Cell24),
        &FixtureConfig::default(),
        &ViewPose::identity(),
    )
    .map_err(|e| Failure::Invalid(e.to_string()))?;
    Sequencer::new(program, &fixture).map_err(|e| Failure::Invalid(e.to_string()))
}

fn cmd_validate(corrupt_vertex: Option<usize>) -> Result<(), Failure> {
    let start = Instant::now();
    let report = run(&ValidateOptions { corrupt_vertex });
    print!("{}", report.table());
    println!("elapsed {:.2} s", start.elapsed().as_secs_f64());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!(
            "{} check(s) failed",
            report.failures().count()
        )))
    }
}

fn cmd_export(left: Option<[f64; 4]>, right: Option<[f64; 4]>, out: &Path) -> Result<(), Failure> {
    let id = ViewPose::identity();
    let pose = ViewPose::new(left.unwrap_or(id.left), right.unwrap_or(id.right))
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let g = GeometryExport::build(&pose).map_err(|e| Failure::Invalid(e.to_string()))?;
    let mut w = open_out(out)?;
    w.write_all(g.to_json().as_bytes())
        .and_then(|_| w.write_all(b"\n"))
        .and_then(|_| w.flush())
        .map_err(|e| Failure::io("cannot write", out, e))?;
    info!("wrote geometry to {}", out.display());
    Ok(())
}

fn cmd_render(script: &Path, signal: Option<&Path>, fps: f64, out: &Path) -> Result<(), Failure> {
    let program = load_program(script)?;
    let signal = load_signal(signal)?;
    let seq = sequencer(program)?;
    let frames = seq
        .frame_count(fps)
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let header = FrameHeader::new(seq.led_count(), frames, fps)
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let w = open_out(out)?;
    let mut writer =
        FrameWriter::new(w, header).map_err(|e| Failure::io("cannot write", out, e))?;
    let start = Instant::now();
    render(&seq, fps, &signal, |f| {
        writer
            .write_frame(&f.rgb)
            .map_err(|e| Failure::io("cannot write", out, e))
    })?;
    writer
        .finish()
        .map_err(|e| Failure::io("cannot write", out, e))?;
    info!(
        "rendered {frames} frames of {} LEDs in {:.2} s",
        seq.led_count(),
        start.elapsed().as_secs_f64()
    );
    Ok(())
}

impl From<octaplex::script::EvalError> for Failure {
    fn from(e: octaplex::script::EvalError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn cmd_serve(port: u16, fps: f64, script: &Path) -> Result<(), Failure> {
    let program = load_program(script)?;
    let seq = sequencer(program)?;
    seq.frame_count(fps)?;
    let rt = tokio::runtime::Runtime::new().map_err(|e| Failure::Io(e.to_string()))?;
    rt.block_on(serve::serve(seq, fps, port))
        .map_err(|e| Failure::Io(format!("{e:#}")))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Validate { corrupt_vertex } => cmd_validate(*corrupt_vertex),
        Command::Export {
            pose_left,
            pose_right,
            out,
        } => cmd_export(*pose_left, *pose_right, out),
        Command::Render {
            script,
            signal,
            fps,
            out,
        } => cmd_render(script, signal.as_deref(), *fps, out),
        Command::Serve { port, fps, script } => cmd_serve(*port, *fps, script),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
