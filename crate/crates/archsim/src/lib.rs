//! Cycle-level and capacity models of pipelined GCA hardware: a sequential
//! four-stage pipeline (Fetch, Get, Exe, Write) over double-buffered,
//! replicated cell memories, and its banked data-parallel extension.

pub mod capacity;
pub mod params;
pub mod run;
pub mod schedule;

pub use capacity::{address_bits, capacity_table, dpa_memory_capacity, multiport_bound, seq_memory_capacity};
pub use params::{ArchError, ArchParams, LATENCY};
pub use run::{run_on_arch, run_on_arch_with, Arch, ArchRun};
pub use schedule::{dpa_simulate, seq_pipeline_simulate, simulate, HazardReport, PipelineEvent, Schedule, Stage};
