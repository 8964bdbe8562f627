//! Generation stepping and run loops.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::address::Address;
use crate::error::EngineError;
use crate::rules::RuleSet;
use crate::scalar::Scalar;
use crate::state::{CellState, Configuration};
use crate::trace::Trace;

/// Sweep order for asynchronous updating.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AsyncOrder {
    #[default]
    Ascending,
    Descending,
    /// A fresh permutation every generation, derived from the seed and `t`.
    SeededRandom(u64),
}

impl AsyncOrder {
    pub fn indices(&self, n: usize, time: u64) -> Vec<usize> {
        match *self {
            AsyncOrder::Ascending => (0..n).collect(),
            AsyncOrder::Descending => (0..n).rev().collect(),
            AsyncOrder::SeededRandom(seed) => {
                let mut rng =
                    ChaCha8Rng::seed_from_u64(seed ^ time.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                let mut v: Vec<usize> = (0..n).collect();
                v.shuffle(&mut rng);
                v
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Sync,
    /// Synchronous, Phase 1 evaluated on the rayon pool.
    Parallel,
    Async(AsyncOrder),
}

impl Mode {
    pub fn is_sync(&self) -> bool {
        !matches!(self, Mode::Async(_))
    }
}

pub type Predicate<S> = Arc<dyn Fn(&Configuration<S>) -> bool + Send + Sync>;

#[derive(Clone)]
pub enum Stop<S: Scalar> {
    Steps(u64),
    FixedPoint,
    Predicate(Predicate<S>),
}

impl<S: Scalar> Stop<S> {
    pub fn predicate(f: impl Fn(&Configuration<S>) -> bool + Send + Sync + 'static) -> Self {
        Stop::Predicate(Arc::new(f))
    }
}

/// External mutation of the configuration at a given generation, used to
/// model events such as a general appearing at an arbitrary time.
#[derive(Clone)]
pub struct Intervention<S: Scalar> {
    pub at: u64,
    pub apply: Arc<dyn Fn(&mut Configuration<S>) + Send + Sync>,
}

impl<S: Scalar> Intervention<S> {
    pub fn new(at: u64, f: impl Fn(&mut Configuration<S>) + Send + Sync + 'static) -> Self {
        Intervention { at, apply: Arc::new(f) }
    }
}

impl<S: Scalar> std::fmt::Debug for Intervention<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Intervention(at = {})", self.at)
    }
}

pub fn apply_interventions<S: Scalar>(cfg: &mut Configuration<S>, list: &[Intervention<S>]) {
    let t = cfg.time;
    for iv in list.iter().filter(|iv| iv.at == t) {
        (iv.apply)(cfg);
    }
}

#[derive(Clone)]
pub struct RunOptions<S: Scalar> {
    pub mode: Mode,
    pub record_snapshots: bool,
    pub record_edges: bool,
    /// Guard for fixed-point and predicate runs; `None` means `10n + 64`.
    pub step_limit: Option<u64>,
    pub interventions: Vec<Intervention<S>>,
}

impl<S: Scalar> Default for RunOptions<S> {
    fn default() -> Self {
        RunOptions {
            mode: Mode::Sync,
            record_snapshots: true,
            record_edges: false,
            step_limit: None,
            interventions: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HaltReason {
    StepsDone,
    FixedPoint,
    Predicate,
}

#[derive(Clone, Debug)]
pub struct RunResult<S: Scalar> {
    pub config: Configuration<S>,
    pub trace: Trace<S>,
    pub halt: HaltReason,
}

/// Global neighbor states and access edges of one cell.
pub struct Gathered<S: Scalar> {
    pub effective: Vec<Address>,
    pub targets: Vec<usize>,
    pub neighbors: Vec<CellState<S>>,
    pub stencil: Vec<CellState<S>>,
}

fn gather<S: Scalar>(cfg: &Configuration<S>, i: usize, rs: &RuleSet<S>) -> Gathered<S> {
    let topo = cfg.topology;
    let stencil: Vec<CellState<S>> = rs
        .stencil_targets(topo, i)
        .into_iter()
        .map(|j| cfg.states[j].clone())
        .collect();
    let effective = rs.effective_addresses(topo, i, &cfg.states[i], &stencil, cfg.time);
    let targets: Vec<usize> = effective.iter().map(|&a| topo.resolve(i, a)).collect();
    let neighbors = targets.iter().map(|&j| cfg.states[j].clone()).collect();
    Gathered { effective, targets, neighbors, stencil }
}

/// `Q*_i`: the states of the global neighbors of cell `i`.
pub fn gather_neighbors<S: Scalar>(
    cfg: &Configuration<S>,
    i: usize,
    rs: &RuleSet<S>,
) -> Vec<CellState<S>> {
    gather(cfg, i, rs).neighbors
}

/// Effective absolute targets of cell `i` in the current generation.
pub fn access_targets<S: Scalar>(cfg: &Configuration<S>, i: usize, rs: &RuleSet<S>) -> Vec<usize> {
    gather(cfg, i, rs).targets
}

fn next_cell<S: Scalar>(
    cfg: &Configuration<S>,
    i: usize,
    rs: &RuleSet<S>,
) -> Result<(CellState<S>, Vec<usize>), EngineError> {
    let g = gather(cfg, i, rs);
    let next = rs
        .evaluate(
            cfg.topology,
            i,
            &cfg.states[i],
            &g.neighbors,
            &g.effective,
            &g.stencil,
            cfg.time,
        )
        .map_err(|message| EngineError::RuleFailed { index: i, message })?;
    Ok((next, g.targets))
}

fn edges_of(results: &[(usize, Vec<usize>)]) -> Vec<(usize, usize)> {
    results
        .iter()
        .flat_map(|(i, ts)| ts.iter().map(move |&t| (*i, t)))
        .collect()
}

/// Phase 1 in the given order; Phase 2 commits everything at once.
fn sync_in_order<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
    order: &[usize],
) -> Result<(Configuration<S>, Vec<(usize, usize)>), EngineError> {
    let mut staged: Vec<Option<CellState<S>>> = vec![None; cfg.len()];
    let mut reads = Vec::with_capacity(order.len());
    for &i in order {
        let (next, targets) = next_cell(cfg, i, rs)?;
        staged[i] = Some(next);
        reads.push((i, targets));
    }
    reads.sort_by_key(|r| r.0);
    let states = staged
        .into_iter()
        .map(|s| s.expect("every cell evaluated"))
        .collect();
    let out = Configuration { topology: cfg.topology, states, time: cfg.time + 1 };
    Ok((out, edges_of(&reads)))
}

/// One synchronous generation.
pub fn step_sync<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
) -> Result<Configuration<S>, EngineError> {
    step_sync_traced(cfg, rs).map(|(c, _)| c)
}

/// One synchronous generation plus the `(reader, target)` access edges.
pub fn step_sync_traced<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
) -> Result<(Configuration<S>, Vec<(usize, usize)>), EngineError> {
    let order: Vec<usize> = (0..cfg.len()).collect();
    sync_in_order(cfg, rs, &order)
}

/// Synchronous generation with Phase 1 evaluated in an arbitrary order.
pub fn step_sync_permuted<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
    order: &[usize],
) -> Result<Configuration<S>, EngineError> {
    assert_eq!(order.len(), cfg.len(), "order must be a permutation of the cells");
    sync_in_order(cfg, rs, order).map(|(c, _)| c)
}

/// Synchronous generation with Phase 1 spread over the rayon pool.
pub fn step_sync_parallel<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
) -> Result<(Configuration<S>, Vec<(usize, usize)>), EngineError> {
    let results: Vec<Result<(CellState<S>, Vec<usize>), EngineError>> =
        (0..cfg.len()).into_par_iter().map(|i| next_cell(cfg, i, rs)).collect();
    let mut states = Vec::with_capacity(cfg.len());
    let mut reads = Vec::with_capacity(cfg.len());
    // report the lowest failing index so the error is deterministic
    for (i, r) in results.into_iter().enumerate() {
        let (s, t) = r?;
        states.push(s);
        reads.push((i, t));
    }
    let out = Configuration { topology: cfg.topology, states, time: cfg.time + 1 };
    Ok((out, edges_of(&reads)))
}

/// A single Phase-2 write: `writer` produced the state stored at `owner`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WriteRecord {
    pub writer: usize,
    pub owner: usize,
}

/// Synchronous generation that logs every commit.
pub fn step_sync_instrumented<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
) -> Result<(Configuration<S>, Vec<WriteRecord>), EngineError> {
    let mut proposals = Vec::with_capacity(cfg.len());
    for i in 0..cfg.len() {
        let (next, _) = next_cell(cfg, i, rs)?;
        proposals.push((i, next));
    }
    let mut out = cfg.clone();
    let mut log = Vec::with_capacity(cfg.len());
    for (writer, next) in proposals {
        // each proposal is keyed by its writer; the commit slot is the same index
        let owner = writer;
        out.states[owner] = next;
        log.push(WriteRecord { writer, owner });
    }
    out.time += 1;
    Ok((out, log))
}

/// One asynchronous sweep: each cell reads the partially updated array and
/// commits immediately.
pub fn step_async<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
    order: AsyncOrder,
) -> Result<Configuration<S>, EngineError> {
    step_async_traced(cfg, rs, order).map(|(c, _)| c)
}

pub fn step_async_traced<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
    order: AsyncOrder,
) -> Result<(Configuration<S>, Vec<(usize, usize)>), EngineError> {
    let mut work = cfg.clone();
    let mut edges = Vec::new();
    for i in order.indices(cfg.len(), cfg.time) {
        let (next, targets) = next_cell(&work, i, rs)?;
        edges.extend(targets.into_iter().map(|t| (i, t)));
        work.states[i] = next;
    }
    work.time += 1;
    Ok((work, edges))
}

fn step_mode<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
    mode: Mode,
) -> Result<(Configuration<S>, Vec<(usize, usize)>), EngineError> {
    match mode {
        Mode::Sync => step_sync_traced(cfg, rs),
        Mode::Parallel => step_sync_parallel(cfg, rs),
        Mode::Async(order) => step_async_traced(cfg, rs, order),
    }
}

/// Runs with default options and returns the final configuration and trace.
pub fn run<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
    stop: Stop<S>,
) -> Result<(Configuration<S>, Trace<S>), EngineError> {
    run_with(cfg, rs, stop, &RunOptions::default()).map(|r| (r.config, r.trace))
}

/// Runs until the stop condition holds.
///
/// A fixed point halts at the first configuration whose successor has the
/// same states; that configuration (not its successor) is returned.
pub fn run_with<S: Scalar>(
    cfg: &Configuration<S>,
    rs: &RuleSet<S>,
    stop: Stop<S>,
    opts: &RunOptions<S>,
) -> Result<RunResult<S>, EngineError> {
    cfg.validate(rs.stored_arms)?;
    if matches!(stop, Stop::FixedPoint) && !opts.mode.is_sync() {
        return Err(EngineError::FixedPointAsync);
    }
    let limit = opts.step_limit.unwrap_or(10 * cfg.len() as u64 + 64);
    let mut trace = Trace::new(rs.variant, rs.stored_arms);
    let mut cur = cfg.clone();
    apply_interventions(&mut cur, &opts.interventions);
    if opts.record_snapshots {
        trace.snapshots.push(cur.clone());
    }
    let mut taken = 0u64;
    loop {
        match &stop {
            Stop::Steps(t) if taken >= *t => {
                return Ok(RunResult { config: cur, trace, halt: HaltReason::StepsDone })
            }
            Stop::Predicate(p) if p(&cur) => {
                return Ok(RunResult { config: cur, trace, halt: HaltReason::Predicate })
            }
            Stop::FixedPoint | Stop::Predicate(_) if taken >= limit => {
                return Err(EngineError::StepLimit { limit })
            }
            _ => {}
        }
        let (mut next, edges) = step_mode(&cur, rs, opts.mode)?;
        if opts.record_edges {
            trace.edges.push((cur.time, edges));
        }
        if matches!(stop, Stop::FixedPoint) && next.states == cur.states {
            return Ok(RunResult { config: cur, trace, halt: HaltReason::FixedPoint });
        }
        apply_interventions(&mut next, &opts.interventions);
        taken += 1;
        cur = next;
        if opts.record_snapshots {
            trace.snapshots.push(cur.clone());
        }
    }
}
