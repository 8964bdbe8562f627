//! Ready-made automata: maximum, reduction, prefix sum, bitonic merge, the
//! XOR families and the FFT, each with its initial configuration and
//! expected halting behavior.

pub mod basic;
pub mod bitonic;
pub mod fft;
pub mod spec;
pub mod xor1d;
pub mod xor2d;

pub use basic::{horn, max, reduce, MaxPointer, ReduceOp};
pub use bitonic::{bitonic, bitonic_basic};
pub use fft::fft;
pub use spec::{AlgError, AlgorithmSpec, ExpectedHalt};
pub use xor1d::{render_out_c, xor1d_basic, xor1d_general};
pub use xor2d::{xor2d, XorInit, XorPointerRule};

pub type Spec64 = AlgorithmSpec<f64>;
pub type Spec32 = AlgorithmSpec<f32>;
