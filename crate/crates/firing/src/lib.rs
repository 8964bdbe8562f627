//! Synchronous firing: all cells of a ring must enter the firing state in
//! the same generation, started by a single general.

pub mod jump;
pub mod rings;
pub mod wave;

pub use jump::{firing_jump_v1, firing_jump_v2};
pub use rings::{firing_rings, Ring, RingLayout};
pub use wave::firing_wave;

use gca_core::{Configuration, Scalar};

/// Generations at which `fires` holds in a recorded run.
pub fn fire_times<S: Scalar>(
    snapshots: &[Configuration<S>],
    fires: impl Fn(&Configuration<S>) -> bool,
) -> Vec<u64> {
    snapshots.iter().filter(|c| fires(c)).map(|c| c.time).collect()
}
