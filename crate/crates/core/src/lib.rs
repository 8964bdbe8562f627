//! Global cellular automata: cells whose neighbors are named by pointers
//! that the cells themselves rewrite every generation.
//!
//! The engine covers the basic, general and plain model variants on rings
//! and tori, with synchronous (two-phase) and asynchronous updating.

pub mod address;
pub mod data;
pub mod engine;
pub mod error;
pub mod rules;
pub mod scalar;
pub mod snapshot;
pub mod state;
pub mod topology;
pub mod trace;

pub use address::{normalize_relative, wrap_index, Address};
pub use data::{symbol, DataKind, DataValue};
pub use engine::{
    access_targets, apply_interventions, gather_neighbors, run, run_with, step_async,
    step_async_traced, step_sync, step_sync_instrumented, step_sync_parallel, step_sync_permuted,
    step_sync_traced, AsyncOrder, HaltReason, Intervention, Mode, RunOptions, RunResult, Stop,
    WriteRecord,
};
pub use error::{ConfigError, EngineError};
pub use rules::{AddressContext, Params, RuleContext, RuleSet, Variant};
pub use scalar::Scalar;
pub use state::{CellState, Configuration};
pub use topology::Topology;
pub use trace::Trace;

pub type Data64 = DataValue<f64>;
pub type Data32 = DataValue<f32>;
pub type Cell64 = CellState<f64>;
pub type Cell32 = CellState<f32>;
pub type Config64 = Configuration<f64>;
pub type Config32 = Configuration<f32>;
pub type RuleSet64 = RuleSet<f64>;
pub type RuleSet32 = RuleSet<f32>;
pub type Trace64 = Trace<f64>;
