//! Subcommand implementations, independent of argument parsing.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use gca_algorithms::{ExpectedHalt, ReduceOp};
use gca_archsim::{
    capacity_table, dpa_simulate, run_on_arch_with, seq_pipeline_simulate, ArchParams, Schedule,
};
use gca_core::snapshot::{from_json, to_json};
use gca_core::{HaltReason, RunOptions, Stop};

use crate::catalog;
use crate::config::{Format, RunConfig, StopSpec};
use crate::error::CliError;
use crate::render;

/// Environment variable overriding the output directory.
pub const OUT_DIR_ENV: &str = "GCA_OUT_DIR";

/// Flag, then environment, then configuration file, then the current directory.
pub fn out_dir(flag: Option<&Path>, from_config: Option<&Path>) -> PathBuf {
    if let Some(f) = flag {
        return f.to_path_buf();
    }
    if let Some(env) = std::env::var_os(OUT_DIR_ENV) {
        return PathBuf::from(env);
    }
    from_config.map_or_else(|| PathBuf::from("."), Path::to_path_buf)
}

fn write(path: &Path, bytes: impl AsRef<[u8]>) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|source| CliError::Io { path: parent.display().to_string(), source })?;
    }
    fs::write(path, bytes).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub struct RunReport {
    pub summary: String,
    pub files: Vec<PathBuf>,
}

/// Runs the configured algorithm and writes its artifacts to `dir`.
pub fn cmd_run(cfg: &RunConfig, dir: &Path) -> Result<RunReport, CliError> {
    let spec = catalog::build(cfg)?;
    let mode = cfg.mode.resolve(cfg.seed)?;
    let stop = match cfg.stop {
        StopSpec::Expected => spec.halt.stop(),
        StopSpec::Steps(t) => Stop::Steps(t),
        StopSpec::FixedPoint => Stop::FixedPoint,
    };
    let opts = RunOptions {
        mode,
        record_snapshots: true,
        record_edges: cfg.trace.edges,
        ..RunOptions::default()
    };
    let res = spec.run_with(stop, &opts)?;
    let snaps = &res.trace.snapshots;
    let name = spec.name.as_str();
    let mut files = Vec::new();
    let mut emit = |file: String, bytes: Vec<u8>| -> Result<(), CliError> {
        let path = dir.join(file);
        write(&path, bytes)?;
        files.push(path);
        Ok(())
    };
    match cfg.format {
        Format::Text => emit(format!("{name}.txt"), render::render_run(name, spec.variant(), snaps).into_bytes())?,
        Format::Pgm if res.config.topology.is_2d() => {
            for c in snaps {
                emit(format!("{name}_t{:04}.pgm", c.time), render::config_pgm(c, cfg.tile2))?;
            }
        }
        Format::Pgm => emit(format!("{name}.pgm"), render::spacetime_pgm(snaps))?,
        Format::Csv | Format::None => {}
    }
    let trace_states = cfg.trace.states || cfg.trace.pointers || cfg.format == Format::Csv;
    if trace_states {
        let csv = res.trace.states_csv();
        let keep = |line: &&str| {
            let field = line.split(',').nth(2).unwrap_or("");
            let is_p = field.starts_with('p');
            let want_d = cfg.trace.states || !cfg.trace.pointers;
            let want_p = cfg.trace.pointers || !cfg.trace.states;
            if field.is_empty() || field == "field" {
                return true;
            }
            (is_p && want_p) || (!is_p && want_d)
        };
        let filtered: String = csv.lines().filter(keep).map(|l| format!("{l}\n")).collect();
        emit(format!("{name}.states.csv"), filtered.into_bytes())?;
    }
    if cfg.trace.edges {
        emit(format!("{name}.edges.csv"), res.trace.edges_csv().into_bytes())?;
    }
    if cfg.format != Format::None {
        emit(format!("{name}.json"), to_json(&res.config, spec.variant()).into_bytes())?;
    }
    let halted = match res.halt {
        HaltReason::StepsDone => "steps done",
        HaltReason::FixedPoint => "fixed point",
        HaltReason::Predicate => match &spec.halt {
            ExpectedHalt::Predicate { description, .. } => description.as_str(),
            _ => "predicate",
        },
    };
    let mut summary = format!(
        "algorithm: {name} ({}, n={})\nsteps: {}\nhalted: {halted}, t={}\n",
        spec.variant(),
        spec.n(),
        res.config.time - spec.initial.time,
        res.config.time
    );
    if name == "reduce-avg" {
        let sum = res.config.states[0].data.int();
        writeln!(summary, "average: {}", sum as f64 / spec.n() as f64).unwrap();
    }
    Ok(RunReport { summary, files })
}

/// Renders a snapshot file as text or PGM.
pub fn cmd_render(snapshot: &Path, format: Format, tile2: bool, out: &Path) -> Result<PathBuf, CliError> {
    let text = fs::read_to_string(snapshot)
        .map_err(|source| CliError::Io { path: snapshot.display().to_string(), source })?;
    let (cfg, _) = from_json::<f64>(&text).map_err(|e| CliError::Precondition(e.to_string()))?;
    let bytes = match format {
        Format::Text => render::text_grid(&cfg).into_bytes(),
        Format::Pgm => render::config_pgm(&cfg, tile2),
        _ => return Err(CliError::Usage("render supports text and pgm".into())),
    };
    write(out, bytes)?;
    Ok(out.to_path_buf())
}

pub struct ArchRequest {
    pub params: ArchParams,
    pub generations: u64,
    pub algorithm: Option<String>,
    pub capacity: bool,
}

fn describe(s: &Schedule) -> String {
    let a = &s.params;
    let per = a.iterations() as u64;
    format!(
        "cycles: {} = {} generations x {} + {} latency + {} switches ({} cycles/generation)\n",
        s.total_cycles,
        s.generations,
        per,
        if s.generations > 0 { 3 } else { 0 },
        s.switches.len() as u64 * a.switch,
        per + 3
    )
}

/// Schedule simulation, optional workload and capacity table.
pub fn cmd_arch(req: &ArchRequest, dir: &Path) -> Result<String, CliError> {
    let mut out = String::new();
    let a = req.params;
    if req.capacity {
        out.push_str(&capacity_table(&[a])?);
        return Ok(out);
    }
    let schedule = if let Some(name) = &req.algorithm {
        let cfg = RunConfig { algorithm: name.clone(), n: Some(a.n), ..RunConfig::default() };
        let spec = catalog::build(&cfg)?;
        let arch = run_on_arch_with(&spec, &a)?;
        let engine = spec.run()?;
        writeln!(out, "algorithm: {} ({} generations)", spec.name, arch.generations).unwrap();
        writeln!(out, "engine-equal: {}", if arch.config == engine.config { "yes" } else { "NO" }).unwrap();
        arch.schedule
    } else if a.p == 1 {
        seq_pipeline_simulate(&a, req.generations)?
    } else {
        dpa_simulate(&a, req.generations)?
    };
    out.push_str(&describe(&schedule));
    writeln!(out, "forwarded fetches: {}", schedule.hazards.forwarded_fetches).unwrap();
    let path = dir.join("schedule.csv");
    write(&path, schedule.to_csv())?;
    writeln!(out, "schedule: {}", path.display()).unwrap();
    if let Ok(table) = capacity_table(&[a]) {
        out.push_str(&table);
    }
    Ok(out)
}


/// Name and fold of the reduction-type algorithms.
pub fn reduce_op_of(name: &str) -> Option<ReduceOp> {
    if name.starts_with("max") {
        return Some(ReduceOp::Max);
    }
    name.strip_prefix("reduce-").and_then(ReduceOp::parse)
}
