//! Runs an algorithm through the pipeline schedule.

use gca_algorithms::{AlgorithmSpec, ExpectedHalt};
use gca_core::{apply_interventions, CellState, Configuration, Scalar};

use crate::params::{ArchError, ArchParams};
use crate::schedule::{simulate, Schedule, Stage};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arch {
    Seq,
    /// Banked design with the given parallel degree.
    Dpa(usize),
}

#[derive(Clone, Debug)]
pub struct ArchRun<S: Scalar> {
    pub config: Configuration<S>,
    /// Generations computed, including the one that confirms a fixed point.
    pub generations: u64,
    pub cycles: u64,
    pub schedule: Schedule,
}

/// Runs `spec` on the given design with `k` equal to the reads per cell.
pub fn run_on_arch<S: Scalar>(spec: &AlgorithmSpec<S>, arch: Arch) -> Result<ArchRun<S>, ArchError> {
    let n = spec.n();
    let k = reads_per_cell(spec).max(1);
    let params = match arch {
        Arch::Seq => ArchParams::seq(n, k, 0),
        Arch::Dpa(p) => ArchParams::dpa(n, k, p, 0),
    };
    run_on_arch_with(spec, &params)
}

fn reads_per_cell<S: Scalar>(spec: &AlgorithmSpec<S>) -> usize {
    spec.rules.arms + spec.rules.stencil.len()
}

/// One generation, cell by cell in schedule order, reading only the
/// previous generation's memory set.
fn generation<S: Scalar>(
    spec: &AlgorithmSpec<S>,
    one: &Schedule,
    read: &Configuration<S>,
) -> Result<Configuration<S>, ArchError> {
    let rs = &spec.rules;
    let topo = read.topology;
    let mut write: Vec<Option<CellState<S>>> = vec![None; read.len()];
    let mut latched: Vec<Option<(Vec<CellState<S>>, Vec<gca_core::Address>, Vec<CellState<S>>)>> =
        vec![None; read.len()];
    let mut results: Vec<Option<CellState<S>>> = vec![None; read.len()];
    for e in &one.events {
        let i = e.cell;
        match e.stage {
            Stage::Fetch => {}
            Stage::Get => {
                let own = &read.states[i];
                let stencil: Vec<CellState<S>> =
                    rs.stencil_targets(topo, i).into_iter().map(|j| read.states[j].clone()).collect();
                let eff = rs.effective_addresses(topo, i, own, &stencil, read.time);
                let neighbors = eff.iter().map(|&a| read.states[topo.resolve(i, a)].clone()).collect();
                latched[i] = Some((neighbors, eff, stencil));
            }
            Stage::Exe => {
                let (neighbors, eff, stencil) = latched[i].take().expect("Get precedes Exe");
                let next = rs
                    .evaluate(topo, i, &read.states[i], &neighbors, &eff, &stencil, read.time)
                    .map_err(|m| ArchError::Engine(format!("cell {i}: {m}")))?;
                results[i] = Some(next);
            }
            Stage::Write => {
                write[i] = Some(results[i].take().expect("Exe precedes Write"));
            }
        }
    }
    let states = write.into_iter().map(|s| s.expect("every cell written")).collect();
    Ok(Configuration { topology: topo, states, time: read.time + 1 })
}

/// Runs `spec` until its expected halt on an explicit parameter set.
pub fn run_on_arch_with<S: Scalar>(spec: &AlgorithmSpec<S>, params: &ArchParams) -> Result<ArchRun<S>, ArchError> {
    params.validate()?;
    if params.n != spec.n() {
        return Err(ArchError::Params(format!("architecture has n = {} but the algorithm {}", params.n, spec.n())));
    }
    let needed = reads_per_cell(spec);
    if needed > params.k {
        return Err(ArchError::ArmCount { needed, k: params.k });
    }
    spec.initial.validate(spec.rules.stored_arms).map_err(|e| ArchError::Engine(e.to_string()))?;
    let limit = 10 * spec.n() as u64 + 64;
    let mut cur = spec.initial.clone();
    apply_interventions(&mut cur, &spec.interventions);
    let mut gens = 0u64;
    let one = simulate(params, 1)?;
    loop {
        let done = match &spec.halt {
            ExpectedHalt::Steps(t) => gens >= *t,
            ExpectedHalt::Predicate { test, .. } => test(&cur),
            ExpectedHalt::FixedPoint => false,
        };
        if done {
            break;
        }
        if !matches!(spec.halt, ExpectedHalt::Steps(_)) && gens >= limit {
            return Err(ArchError::Engine(format!("no halt within {limit} generations")));
        }
        let mut next = generation(spec, &one, &cur)?;
        gens += 1;
        if matches!(spec.halt, ExpectedHalt::FixedPoint) && next.states == cur.states {
            break;
        }
        // external events land in the fresh memory set during the switch
        apply_interventions(&mut next, &spec.interventions);
        cur = next;
    }
    let schedule = simulate(params, gens)?;
    Ok(ArchRun { config: cur, generations: gens, cycles: schedule.total_cycles, schedule })
}
