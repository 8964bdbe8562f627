use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gca_archsim::ArchParams;
use gca_cli::*;

#[derive(Parser)]
#[command(name = "gca", version, about = "Global cellular automata: run, render, simulate hardware, verify")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a cataloged algorithm and write its renders and traces.
    Run(RunArgs),
    /// Render a snapshot file as text or PGM.
    Render {
        snapshot: PathBuf,
        #[arg(long, default_value = "text")]
        format: String,
        /// Tile the image 2x2.
        #[arg(long)]
        tile2: bool,
        /// Output file (default: snapshot name with .txt or .pgm in the output directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pipeline schedule, cycle counts and memory capacity.
    Arch(ArchArgs),
    /// Check algorithms against their oracles and golden traces.
    Verify { target: String },
    /// List cataloged algorithms.
    List,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    alg: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// basic | general | plain
    #[arg(long)]
    variant: Option<String>,
    /// sync | parallel | async:asc | async:desc | async:random[:seed]
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    steps: Option<u64>,
    /// expected | fixed-point | steps:N
    #[arg(long, conflicts_with = "steps")]
    stop: Option<String>,
    /// text | pgm | csv | none
    #[arg(long)]
    format: Option<String>,
    /// Comma list of states, pointers, edges.
    #[arg(long)]
    trace: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated integer input.
    #[arg(long, allow_hyphen_values = true)]
    data: Option<String>,
    #[arg(long)]
    general: Option<usize>,
    #[arg(long)]
    introduce_at: Option<u64>,
    /// Ring layout, rings separated by `;`, general marked `*`.
    #[arg(long)]
    layout: Option<String>,
    /// cross | zero
    #[arg(long)]
    init: Option<String>,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<i64>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<i64>,
    #[arg(long)]
    tile2: bool,
    /// key=value file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ArchArgs {
    /// Sequential pipeline (default).
    #[arg(long, conflicts_with = "dpa")]
    seq: bool,
    /// Banked design with this parallel degree.
    #[arg(long)]
    dpa: Option<usize>,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 8)]
    delta: u32,
    #[arg(long, default_value_t = 1)]
    generations: u64,
    #[arg(long, default_value_t = 1)]
    switch: u64,
    /// Run this cataloged algorithm on the design.
    #[arg(long)]
    alg: Option<String>,
    /// Print the memory capacity table only.
    #[arg(long)]
    capacity: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_config(a: RunArgs) -> Result<(RunConfig, Option<PathBuf>), CliError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &a.config {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        cfg.merge_text(&text)?;
    }
    let from_file = cfg.out_dir.take();
    let flags: [(&str, Option<String>); 14] = [
        ("algorithm", a.alg),
        ("n", a.n.map(|v| v.to_string())),
        ("variant", a.variant),
        ("mode", a.mode),
        ("steps", a.steps.map(|v| v.to_string())),
        ("stop", a.stop),
        ("format", a.format),
        ("trace", a.trace),
        ("seed", a.seed.map(|v| v.to_string())),
        ("data", a.data),
        ("general", a.general.map(|v| v.to_string())),
        ("introduce_at", a.introduce_at.map(|v| v.to_string())),
        ("layout", a.layout),
        ("init", a.init),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            cfg.set(k, &v)?;
        }
    }
    if a.a.is_some() {
        cfg.a = a.a;
    }
    if a.b.is_some() {
        cfg.b = a.b;
    }
    cfg.tile2 |= a.tile2;
    if cfg.algorithm.is_empty() {
        return Err(CliError::Usage("no algorithm given (--alg or algorithm= in --config)".into()));
    }
    let dir = out_dir(a.out.as_deref(), from_file.as_deref());
    cfg.out_dir = Some(dir);
    Ok((cfg, from_file))
}

fn dispatch(cmd: Cmd) -> Result<String, CliError> {
    match cmd {
        Cmd::Run(a) => {
            let (cfg, _) = run_config(a)?;
            let dir = cfg.out_dir.clone().expect("resolved above");
            let report = cmd_run(&cfg, &dir)?;
            let mut out = report.summary;
            for f in report.files {
                out.push_str(&format!("wrote {}\n", f.display()));
            }
            Ok(out)
        }
        Cmd::Render { snapshot, format, tile2, out } => {
            let format: Format = format.parse()?;
            let ext = if format == Format::Pgm { "pgm" } else { "txt" };
            let target = out.unwrap_or_else(|| {
                let stem = snapshot.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or("snapshot".into());
                out_dir(None, None).join(format!("{stem}.{ext}"))
            });
            let path = cmd_render(&snapshot, format, tile2, &target)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        Cmd::Arch(a) => {
            let params = ArchParams {
                n: a.n,
                k: a.k,
                p: a.dpa.unwrap_or(1),
                delta: a.delta,
                clock: 1.0,
                switch: a.switch,
            };
            let req = ArchRequest { params, generations: a.generations, algorithm: a.alg, capacity: a.capacity };
            cmd_arch(&req, &out_dir(a.out.as_deref(), None))
        }
        Cmd::Verify { target } => cmd_verify(&target),
        Cmd::List => Ok(catalog()
            .iter()
            .map(|e| format!("{:<16} n={:<4} {}\n", e.name, e.default_n, e.summary))
            .collect()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.cmd) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
