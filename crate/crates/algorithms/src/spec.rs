use std::fmt;

use gca_core::engine::Predicate;
use gca_core::{
    run_with, Configuration, EngineError, Intervention, RuleSet, RunOptions, RunResult, Scalar,
    Stop, Variant,
};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("n = {n} is not a power of two; this algorithm handles only n = 2^k")]
    NotPowerOfTwo { n: usize },
    #[error("n = {n} is too small (need at least {min})")]
    TooSmall { n: usize, min: usize },
    #[error("{0}")]
    Invalid(String),
}

pub fn require_pow2(n: usize) -> Result<u32, AlgError> {
    if n < 2 {
        return Err(AlgError::TooSmall { n, min: 2 });
    }
    if !n.is_power_of_two() {
        return Err(AlgError::NotPowerOfTwo { n });
    }
    Ok(n.trailing_zeros())
}

pub fn require_min(n: usize, min: usize) -> Result<(), AlgError> {
    if n < min {
        Err(AlgError::TooSmall { n, min })
    } else {
        Ok(())
    }
}

/// When a run of the algorithm is expected to be finished.
#[derive(Clone)]
pub enum ExpectedHalt<S: Scalar> {
    Steps(u64),
    FixedPoint,
    Predicate { description: String, test: Predicate<S> },
}

impl<S: Scalar> fmt::Debug for ExpectedHalt<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpectedHalt::Steps(t) => write!(f, "Steps({t})"),
            ExpectedHalt::FixedPoint => write!(f, "FixedPoint"),
            ExpectedHalt::Predicate { description, .. } => write!(f, "Predicate({description})"),
        }
    }
}

impl<S: Scalar> ExpectedHalt<S> {
    pub fn predicate(
        description: &str,
        f: impl Fn(&Configuration<S>) -> bool + Send + Sync + 'static,
    ) -> Self {
        ExpectedHalt::Predicate { description: description.to_string(), test: std::sync::Arc::new(f) }
    }

    pub fn stop(&self) -> Stop<S> {
        match self {
            ExpectedHalt::Steps(t) => Stop::Steps(*t),
            ExpectedHalt::FixedPoint => Stop::FixedPoint,
            ExpectedHalt::Predicate { test, .. } => Stop::Predicate(test.clone()),
        }
    }
}

/// A ready-to-run algorithm: rules, initial configuration and what to
/// expect from a run.
#[derive(Clone, Debug)]
pub struct AlgorithmSpec<S: Scalar> {
    pub name: String,
    pub rules: RuleSet<S>,
    pub initial: Configuration<S>,
    pub halt: ExpectedHalt<S>,
    /// Name of the reference operation in the oracle crate.
    pub oracle: &'static str,
    /// External events such as a general appearing mid-run.
    pub interventions: Vec<Intervention<S>>,
    /// Whether the pointer evolution is independent of the data.
    pub data_independent_pointers: bool,
}

impl<S: Scalar> AlgorithmSpec<S> {
    pub fn new(
        name: &str,
        rules: RuleSet<S>,
        initial: Configuration<S>,
        halt: ExpectedHalt<S>,
        oracle: &'static str,
    ) -> Self {
        AlgorithmSpec {
            name: name.to_string(),
            rules,
            initial,
            halt,
            oracle,
            interventions: Vec::new(),
            data_independent_pointers: false,
        }
    }

    pub fn variant(&self) -> Variant {
        self.rules.variant
    }

    pub fn arms(&self) -> usize {
        self.rules.arms
    }

    pub fn n(&self) -> usize {
        self.initial.len()
    }

    pub fn options(&self) -> RunOptions<S> {
        RunOptions { interventions: self.interventions.clone(), ..RunOptions::default() }
    }

    /// Runs until the expected halt.
    pub fn run(&self) -> Result<RunResult<S>, EngineError> {
        run_with(&self.initial, &self.rules, self.halt.stop(), &self.options())
    }

    pub fn run_steps(&self, steps: u64) -> Result<RunResult<S>, EngineError> {
        run_with(&self.initial, &self.rules, Stop::Steps(steps), &self.options())
    }

    /// Runs with caller-supplied options; the algorithm's interventions are
    /// always included.
    pub fn run_with(&self, stop: Stop<S>, opts: &RunOptions<S>) -> Result<RunResult<S>, EngineError> {
        let mut opts = opts.clone();
        opts.interventions.extend(self.interventions.iter().cloned());
        run_with(&self.initial, &self.rules, stop, &opts)
    }
}
