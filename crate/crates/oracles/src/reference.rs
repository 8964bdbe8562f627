//! Sequential reference computations.

use std::ops::RangeInclusive;

use gca_algorithms::ReduceOp;
use num_complex::Complex;
use rand::Rng;

/// Left fold of `data` with `op`; `Avg` folds as a sum (see [`oracle_average`]).
pub fn oracle_reduce(data: &[i64], op: ReduceOp) -> i64 {
    let mut acc = data[0];
    for &d in &data[1..] {
        acc = match op {
            ReduceOp::Sum | ReduceOp::Avg => acc.wrapping_add(d),
            ReduceOp::Max => acc.max(d),
            ReduceOp::Min => acc.min(d),
            ReduceOp::And => acc & d,
            ReduceOp::Or => acc | d,
        };
    }
    acc
}

/// Mean, applied to a summed reduction only at comparison time.
pub fn oracle_average(data: &[i64]) -> f64 {
    oracle_reduce(data, ReduceOp::Sum) as f64 / data.len() as f64
}

/// Inclusive prefix sums.
pub fn oracle_scan(data: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(data.len());
    let mut s = 0i64;
    for &d in data {
        s = s.wrapping_add(d);
        out.push(s);
    }
    out
}

pub fn oracle_sort(data: &[i64]) -> Vec<i64> {
    let mut v = data.to_vec();
    v.sort_unstable();
    v
}

/// At most two direction changes around the cyclic sequence, ignoring
/// equal neighbors.
pub fn oracle_is_bitonic(data: &[i64]) -> bool {
    let n = data.len();
    let signs: Vec<i64> = (0..n)
        .map(|i| (data[(i + 1) % n] - data[i]).signum())
        .filter(|&s| s != 0)
        .collect();
    if signs.is_empty() {
        return true;
    }
    let changes = (0..signs.len()).filter(|&i| signs[i] != signs[(i + 1) % signs.len()]).count();
    changes <= 2
}

/// Random bitonic sequence: an ascending run, a descending run, then a
/// cyclic rotation.
pub fn random_bitonic(n: usize, max: i64, rng: &mut impl Rng) -> Vec<i64> {
    let mut v: Vec<i64> = (0..n).map(|_| rng.random_range(0..=max)).collect();
    let split = rng.random_range(0..=n);
    v[..split].sort_unstable();
    v[split..].sort_unstable_by(|a, b| b.cmp(a));
    let r = rng.random_range(0..n.max(1));
    v.rotate_left(r);
    v
}

/// The butterfly recurrence replayed with two explicit buffers, `k` stages.
pub fn oracle_fft_recurrence<S: gca_core::Scalar>(input: &[Complex<S>], k: u32) -> Vec<Complex<S>> {
    let n = input.len();
    let mut old = input.to_vec();
    let mut step = 1usize;
    for _ in 0..k {
        let mut new = old.clone();
        for i in 0..n {
            let j = i ^ step;
            let masked = S::from_usize(i & (step - 1)).unwrap();
            let a = -S::PI() / S::from_usize(step).unwrap() * masked;
            let (c, s) = (a.cos(), a.sin());
            let (x, y) = (old[i], old[j]);
            new[i] = if j > i {
                Complex::new(x.re + c * y.re - s * y.im, x.im + c * y.im + s * y.re)
            } else {
                Complex::new(y.re - (c * x.re - s * x.im), y.im - (c * x.im + s * x.re))
            };
        }
        old = new;
        step *= 2;
    }
    old
}

/// Definition sum `X_k = sum_j x_j exp(-2 pi i jk / n)`.
pub fn oracle_dft(input: &[Complex<f64>]) -> Vec<Complex<f64>> {
    let n = input.len();
    (0..n)
        .map(|k| {
            input.iter().enumerate().fold(Complex::new(0.0, 0.0), |acc, (j, &x)| {
                let a = -2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64;
                acc + x * Complex::from_polar(1.0, a)
            })
        })
        .collect()
}

/// `v` with element `i` moved to the bit-reversed index of `i`.
pub fn bit_reverse<T: Copy>(v: &[T]) -> Vec<T> {
    let n = v.len();
    let bits = n.trailing_zeros();
    (0..n)
        .map(|i| if bits == 0 { v[i] } else { v[i.reverse_bits() >> (usize::BITS - bits)] })
        .collect()
}

pub enum FiringCase {
    Wave { n: usize },
    Ring { len: usize },
    JumpV1 { n: usize },
    JumpV2 { n: usize },
}

/// Firing times, counted from the start or from the general's arrival.
pub fn oracle_fire_time(case: FiringCase) -> RangeInclusive<u64> {
    let lg = |n: usize| u64::from(n.next_power_of_two().trailing_zeros());
    match case {
        FiringCase::Wave { n } => n as u64 + 1..=n as u64 + 1,
        FiringCase::Ring { len } => len as u64 + 1..=len as u64 + 1,
        FiringCase::JumpV1 { n } => 1 + lg(n)..=1 + lg(n),
        FiringCase::JumpV2 { n } => 2 + lg(n)..=2 + 2 * lg(n),
    }
}
