//! Every algorithm the front end can run, by name.

use gca_algorithms::*;
use gca_core::Variant;
use gca_firing::{firing_jump_v1, firing_jump_v2, firing_rings, firing_wave, RingLayout};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::error::CliError;

type Build = fn(&RunConfig, usize) -> Result<Spec64, CliError>;

pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    pub default_n: usize,
    build: Build,
}

impl Entry {
    pub fn build(&self, cfg: &RunConfig) -> Result<Spec64, CliError> {
        let n = match (&cfg.data, cfg.n) {
            (Some(d), Some(n)) if d.len() != n => {
                return Err(CliError::Precondition(format!("--data has {} values but n = {n}", d.len())))
            }
            (Some(d), _) => d.len(),
            (None, Some(n)) => n,
            (None, None) => self.default_n,
        };
        (self.build)(cfg, n)
    }
}

/// Integer input: explicit data, seeded random values, or `default`.
fn ints(cfg: &RunConfig, n: usize, default: impl Fn(usize) -> i64) -> Vec<i64> {
    if let Some(d) = &cfg.data {
        return d.clone();
    }
    match cfg.seed {
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            (0..n).map(|_| rng.random_range(0..100)).collect()
        }
        None => (0..n).map(default).collect(),
    }
}

fn counting(i: usize) -> i64 {
    i as i64 + 1
}

/// Odd numbers rising, then even numbers falling: `1 3 5 7 8 6 4 2`.
fn bitonic_default(n: usize) -> impl Fn(usize) -> i64 {
    move |i| if i < n / 2 { 2 * i as i64 + 1 } else { 2 * (n - i) as i64 }
}

fn max_with(cfg: &RunConfig, n: usize, rule: MaxPointer) -> Result<Spec64, CliError> {
    Ok(max(&ints(cfg, n, |i| i as i64), rule)?)
}

fn reduce_with(cfg: &RunConfig, n: usize, op: ReduceOp) -> Result<Spec64, CliError> {
    Ok(reduce(&ints(cfg, n, counting), op)?)
}

fn xor_init(cfg: &RunConfig) -> Result<XorInit, CliError> {
    match cfg.init.as_deref() {
        None | Some("cross") => Ok(XorInit::Cross),
        Some("zero") => Ok(XorInit::Zero),
        Some(other) => Err(CliError::Usage(format!("unknown init {other:?}; use cross or zero"))),
    }
}

fn xor_with(cfg: &RunConfig, n: usize, rule: XorPointerRule) -> Result<Spec64, CliError> {
    Ok(xor2d(n, rule, &xor_init(cfg)?)?)
}

fn fft_with(cfg: &RunConfig, n: usize) -> Result<Spec64, CliError> {
    let input: Vec<Complex<f64>> = match (&cfg.data, cfg.seed) {
        (Some(d), _) => d.iter().map(|&v| Complex::new(v as f64, 0.0)).collect(),
        (None, Some(s)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            (0..n).map(|_| Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect()
        }
        (None, None) => (0..n).map(|j| Complex::new(j as f64, 0.0)).collect(),
    };
    Ok(fft(&input)?)
}

fn general_at(cfg: &RunConfig, n: usize, default: usize) -> Result<usize, CliError> {
    let g = cfg.general.unwrap_or(default);
    if g >= n {
        return Err(CliError::Precondition(format!("general {g} outside 0..{n}")));
    }
    Ok(g)
}

fn rings_with(cfg: &RunConfig, n: usize) -> Result<Spec64, CliError> {
    let text = cfg.layout.clone().unwrap_or_else(|| "2,4,6*;1*,3,5,7".into()).replace(';', "\n");
    let layout: RingLayout = text.parse().map_err(|e| CliError::Precondition(format!("layout: {e}")))?;
    Ok(firing_rings(n, &layout)?)
}

macro_rules! entry {
    ($name:literal, $n:expr, $summary:literal, $build:expr) => {
        Entry { name: $name, summary: $summary, default_n: $n, build: $build }
    };
}

pub fn catalog() -> Vec<Entry> {
    vec![
        entry!("max", 8, "maximum with constant pointers", |c, n| max_with(c, n, MaxPointer::Const)),
        entry!("max-inc", 8, "maximum, pointer incremented", |c, n| max_with(c, n, MaxPointer::Inc)),
        entry!("max-double", 8, "maximum, pointer doubled", |c, n| max_with(c, n, MaxPointer::Double)),
        entry!("max-half", 7, "maximum, pointer n/2", |c, n| max_with(c, n, MaxPointer::Half)),
        entry!("max-random", 8, "maximum, seeded random pointers", |c, n| {
            let s = c.seed.ok_or_else(|| CliError::Precondition("max-random needs an explicit --seed".into()))?;
            max_with(c, n, MaxPointer::Random(s))
        }),
        entry!("reduce-sum", 8, "reduction by pointer doubling: sum", |c, n| reduce_with(c, n, ReduceOp::Sum)),
        entry!("reduce-max", 8, "reduction: maximum", |c, n| reduce_with(c, n, ReduceOp::Max)),
        entry!("reduce-min", 8, "reduction: minimum", |c, n| reduce_with(c, n, ReduceOp::Min)),
        entry!("reduce-and", 8, "reduction: bitwise and", |c, n| reduce_with(c, n, ReduceOp::And)),
        entry!("reduce-or", 8, "reduction: bitwise or", |c, n| reduce_with(c, n, ReduceOp::Or)),
        entry!("reduce-avg", 8, "reduction: sum, divided by n on output", |c, n| reduce_with(c, n, ReduceOp::Avg)),
        entry!("horn", 8, "prefix sum", |c, n| Ok(horn(&ints(c, n, counting))?)),
        entry!("bitonic", 8, "bitonic merge, general model", |c, n| Ok(bitonic(&ints(c, n, bitonic_default(n)))?)),
        entry!("bitonic-basic", 8, "bitonic merge, basic model", |c, n| {
            Ok(bitonic_basic(&ints(c, n, bitonic_default(n)))?)
        }),
        entry!("xor2d-r1", 32, "2D XOR, p = 1", |c, n| xor_with(c, n, XorPointerRule::Const1)),
        entry!("xor2d-r2", 32, "2D XOR, p' = p + 1", |c, n| xor_with(c, n, XorPointerRule::PlusDelta(1))),
        entry!("xor2d-r3", 32, "2D XOR, p' = p + 2", |c, n| xor_with(c, n, XorPointerRule::PlusDelta(2))),
        entry!("xor2d-r4", 32, "2D XOR, p' = p + 3", |c, n| xor_with(c, n, XorPointerRule::PlusDelta(3))),
        entry!("xor2d-r5", 32, "2D XOR, p' = p + 4", |c, n| xor_with(c, n, XorPointerRule::PlusDelta(4))),
        entry!("xor2d-r6", 32, "2D XOR, p' = p + 5", |c, n| xor_with(c, n, XorPointerRule::PlusDelta(5))),
        entry!("xor2d-r7", 32, "2D XOR, p' = 2p", |c, n| xor_with(c, n, XorPointerRule::Times2)),
        entry!("xor2d-r8", 32, "2D XOR, p' = 3p", |c, n| xor_with(c, n, XorPointerRule::Times3)),
        entry!("xor2d-r8s", 32, "2D XOR, p' = 3p, re-seeded at 0", |c, n| xor_with(c, n, XorPointerRule::Times3Reseed)),
        entry!("xor2d-B", 32, "2D XOR, p alternates 1, 2", |c, n| xor_with(c, n, XorPointerRule::TimeAlt('B'))),
        entry!("xor2d-C", 32, "2D XOR, p alternates 1, 3", |c, n| xor_with(c, n, XorPointerRule::TimeAlt('C'))),
        entry!("xor2d-D", 32, "2D XOR, p alternates 1, 4", |c, n| xor_with(c, n, XorPointerRule::TimeAlt('D'))),
        entry!("xor2d-E", 32, "2D XOR, bases (1,3) and (3,1) alternate", |c, n| {
            xor_with(c, n, XorPointerRule::TimeAlt('E'))
        }),
        entry!("xor2d-F", 32, "2D XOR, checkerboard, p = 1", |c, n| xor_with(c, n, XorPointerRule::Checkerboard('F'))),
        entry!("xor2d-G", 32, "2D XOR, checkerboard, p = 2", |c, n| xor_with(c, n, XorPointerRule::Checkerboard('G'))),
        entry!("xor2d-H", 32, "2D XOR, checkerboard, p = 3", |c, n| xor_with(c, n, XorPointerRule::Checkerboard('H'))),
        entry!("xor2d-plain", 65, "2D XOR, plain model, p = A or B by state", |c, n| {
            xor_with(c, n, XorPointerRule::PlainDataDep { a: c.a.unwrap_or(9), b: c.b.unwrap_or(3) })
        }),
        entry!("xor1d-basic", 31, "1D XOR, doubled pointers, basic model", |_, n| Ok(xor1d_basic(n)?)),
        entry!("xor1d-general", 31, "1D XOR, doubled pointers, general model", |_, n| Ok(xor1d_general(n)?)),
        entry!("fft", 8, "radix-2 FFT butterflies", fft_with),
        entry!("firing-wave", 8, "firing squad, single wave", |c, n| Ok(firing_wave(n, general_at(c, n, 0)?)?)),
        entry!("firing-rings", 9, "firing squad on embedded rings", rings_with),
        entry!("firing-jump-v1", 8, "firing squad by pointer jumping", |c, n| {
            Ok(firing_jump_v1(n, general_at(c, n, 0)?)?)
        }),
        entry!("firing-jump-v2", 9, "pointer jumping, general may arrive late", |c, n| {
            Ok(firing_jump_v2(n, general_at(c, n, 4.min(n - 1))?, c.introduce_at.unwrap_or(1))?)
        }),
    ]
}

pub fn lookup(name: &str) -> Result<Entry, CliError> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CliError::Usage(format!("unknown algorithm {name:?}; see `gca list`")))
}

/// Resolves the name under a model-variant override.
pub fn with_variant(name: &str, variant: Option<Variant>) -> Result<String, CliError> {
    let Some(v) = variant else {
        return Ok(name.to_string());
    };
    let swapped = match (name, v) {
        ("bitonic", Variant::Basic) => "bitonic-basic",
        ("bitonic-basic", Variant::General) => "bitonic",
        ("xor1d-basic", Variant::General) => "xor1d-general",
        ("xor1d-general", Variant::Basic) => "xor1d-basic",
        _ => name,
    };
    Ok(swapped.to_string())
}

/// Builds the algorithm named in `cfg`, honoring the variant override.
pub fn build(cfg: &RunConfig) -> Result<Spec64, CliError> {
    let name = with_variant(&cfg.algorithm, cfg.variant)?;
    let spec = lookup(&name)?.build(cfg)?;
    if let Some(v) = cfg.variant {
        if spec.variant() != v {
            return Err(CliError::Precondition(format!("{} has no {v} form", cfg.algorithm)));
        }
    }
    Ok(spec)
}
