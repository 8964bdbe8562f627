//! Radix-2 FFT where each cell computes its butterfly partner's address.
//!
//! The stored pointer is the butterfly distance `step` (1, 2, 4, ...); the
//! address modifier turns it into the relative offset `(i xor step) - i`.
//! All right-hand sides read the previous generation's values.

use gca_core::{Address, CellState, Configuration, DataValue, RuleContext, RuleSet, Scalar, Topology};
use num_complex::Complex;

use crate::spec::{require_pow2, AlgError, AlgorithmSpec, ExpectedHalt};

/// Relative offset to the butterfly partner of cell `i` at distance `step`.
pub fn partner_offset(i: usize, step: i64) -> i64 {
    ((i as i64) ^ step) - i as i64
}

/// Twiddle angle `-pi / step * (i and (step - 1))`.
pub fn twiddle_angle<S: Scalar>(i: usize, step: i64) -> S {
    let masked = (i as i64) & (step - 1);
    -S::PI() / S::from_i64(step).expect("step fits") * S::from_i64(masked).expect("index fits")
}

/// One butterfly as seen from cell `i`: `own` is this cell's value,
/// `other` the partner's, `other_offset` the signed partner offset.
pub fn butterfly<S: Scalar>(i: usize, step: i64, own: Complex<S>, other: Complex<S>, other_offset: i64) -> Complex<S> {
    let a = twiddle_angle::<S>(i, step);
    let (wr, wi) = (a.cos(), a.sin());
    if other_offset > 0 {
        Complex::new(own.re + wr * other.re - wi * other.im, own.im + wr * other.im + wi * other.re)
    } else {
        Complex::new(other.re - (wr * own.re - wi * own.im), other.im - (wr * own.im + wi * own.re))
    }
}

fn fft_data<S: Scalar>(c: &RuleContext<'_, S>) -> Result<DataValue<S>, String> {
    let own = c.d().as_complex().ok_or("cell data is not complex")?;
    let other = c.dn(0).as_complex().ok_or("partner data is not complex")?;
    let step = c.state.p();
    Ok(DataValue::Complex(butterfly(c.index, step, own, other, c.effective[0].offset())))
}

pub fn fft<S: Scalar>(input: &[Complex<S>]) -> Result<AlgorithmSpec<S>, AlgError> {
    let n = input.len();
    let k = require_pow2(n)?;
    let rules = RuleSet::general(
        "fft",
        1,
        1,
        |c| c.state.data,
        |c| vec![Address::Rel(2 * c.state.p())],
        |a| vec![Address::Rel(partner_offset(a.index, a.state.p()))],
    )
    .with_try_data(fft_data);
    let initial = Configuration::from_fn(Topology::ring(n), |i| {
        CellState::new(DataValue::Complex(input[i]), vec![Address::Rel(1)])
    });
    let mut spec = AlgorithmSpec::new(
        "fft",
        rules,
        initial,
        ExpectedHalt::Steps(u64::from(k)),
        "oracle_fft_recurrence",
    );
    spec.data_independent_pointers = true;
    Ok(spec)
}

/// Complex values of a configuration, in cell order.
pub fn complex_values<S: Scalar>(cfg: &Configuration<S>) -> Vec<Complex<S>> {
    cfg.states
        .iter()
        .map(|s| s.data.as_complex().expect("complex cell data"))
        .collect()
}
