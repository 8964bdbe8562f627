//! Brute-force reference implementations and golden-trace comparison.
//!
//! Nothing here calls the engine's stepping functions; the linearity check
//! and the FFT recurrence carry their own generation loops.

pub mod golden;
pub mod linear;
pub mod reference;

pub use golden::{bundled, compare_golden, render_pointer_data, DiffReport, GoldenRow, GoldenTrace, Mismatch, SourceTag};
pub use linear::{oracle_xor_linear_check, OracleError};
pub use reference::{
    bit_reverse, oracle_average, oracle_dft, oracle_fft_recurrence, oracle_fire_time, oracle_is_bitonic,
    oracle_reduce, oracle_scan, oracle_sort, random_bitonic, FiringCase,
};
