//! Basic-model examples: maximum, vector reduction, Horn's prefix sum.

use gca_core::{Address, Configuration, DataValue, RuleSet, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::spec::{require_min, require_pow2, AlgError, AlgorithmSpec, ExpectedHalt};

/// Pointer rule variants for the maximum search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxPointer {
    /// `p' = p = 1`
    Const,
    /// `p' = (p + 1) mod n`; may reach 0, which is kept as a self-loop.
    Inc,
    /// `p' = 2p mod n`
    Double,
    /// `p' = n / 2`
    Half,
    /// `p'` uniform in `[1, n-1]`, drawn per cell and generation from the seed.
    Random(u64),
}

impl MaxPointer {
    pub fn suffix(&self) -> &'static str {
        match self {
            MaxPointer::Const => "",
            MaxPointer::Inc => "-inc",
            MaxPointer::Double => "-double",
            MaxPointer::Half => "-half",
            MaxPointer::Random(_) => "-random",
        }
    }
}

/// Deterministic per-cell draw in `[1, n-1]`.
pub fn random_pointer(seed: u64, i: usize, t: u64, n: usize) -> i64 {
    let mix = seed ^ (t << 32).wrapping_add(i as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    let mut rng = ChaCha8Rng::seed_from_u64(mix);
    rng.random_range(1..n as i64)
}

fn all_equal_to<S: Scalar>(target: i64) -> impl Fn(&Configuration<S>) -> bool + Send + Sync {
    move |c: &Configuration<S>| c.states.iter().all(|s| s.data.as_int() == Some(target))
}

/// `d' = max(d, d*)` with the selected pointer rule.
pub fn max<S: Scalar>(data: &[i64], rule: MaxPointer) -> Result<AlgorithmSpec<S>, AlgError> {
    let n = data.len();
    require_min(n, 2)?;
    let pointer = move |c: &gca_core::RuleContext<'_, S>| {
        let n = c.n() as i64;
        let p = c.state.p();
        let next = match rule {
            MaxPointer::Const => p,
            MaxPointer::Inc => (p + 1).rem_euclid(n),
            MaxPointer::Double => (2 * p).rem_euclid(n),
            MaxPointer::Half => n / 2,
            MaxPointer::Random(seed) => random_pointer(seed, c.index, c.time, c.n()),
        };
        vec![Address::Rel(next)]
    };
    let rules = RuleSet::basic(
        &format!("max{}", rule.suffix()),
        1,
        |c| DataValue::Int(c.d().int().max(c.dn(0).int())),
        pointer,
    );
    let initial = Configuration::ring_ints(data, &[1]);
    let top = *data.iter().max().expect("non-empty");
    let halt = match rule {
        MaxPointer::Const => ExpectedHalt::Steps(n as u64 - 1),
        _ => ExpectedHalt::predicate("all cells hold the maximum", all_equal_to::<S>(top)),
    };
    let mut spec = AlgorithmSpec::new(&rules.name.clone(), rules, initial, halt, "oracle_reduce");
    spec.data_independent_pointers = true;
    Ok(spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceOp {
    Sum,
    Max,
    Min,
    And,
    Or,
    /// Summed in the automaton; the division by `n` happens outside.
    Avg,
}

impl ReduceOp {
    pub const ALL: [ReduceOp; 6] =
        [ReduceOp::Sum, ReduceOp::Max, ReduceOp::Min, ReduceOp::And, ReduceOp::Or, ReduceOp::Avg];

    pub fn name(&self) -> &'static str {
        match self {
            ReduceOp::Sum => "sum",
            ReduceOp::Max => "max",
            ReduceOp::Min => "min",
            ReduceOp::And => "and",
            ReduceOp::Or => "or",
            ReduceOp::Avg => "avg",
        }
    }

    pub fn parse(s: &str) -> Option<ReduceOp> {
        ReduceOp::ALL.into_iter().find(|op| op.name() == s)
    }

    pub fn apply(&self, a: i64, b: i64) -> i64 {
        match self {
            ReduceOp::Sum | ReduceOp::Avg => a.wrapping_add(b),
            ReduceOp::Max => a.max(b),
            ReduceOp::Min => a.min(b),
            ReduceOp::And => a & b,
            ReduceOp::Or => a | b,
        }
    }
}

/// Tree reduction: `d' = d + (p != 0) d*`, `p' = 2p mod n`.
pub fn reduce<S: Scalar>(data: &[i64], op: ReduceOp) -> Result<AlgorithmSpec<S>, AlgError> {
    let k = require_pow2(data.len())?;
    let rules = RuleSet::basic(
        &format!("reduce-{}", op.name()),
        1,
        move |c| {
            let d = c.d().int();
            if c.state.p() != 0 {
                DataValue::Int(op.apply(d, c.dn(0).int()))
            } else {
                DataValue::Int(d)
            }
        },
        |c| vec![Address::Rel((2 * c.state.p()) % c.n() as i64)],
    );
    let initial = Configuration::ring_ints(data, &[1]);
    let mut spec = AlgorithmSpec::new(
        &rules.name.clone(),
        rules,
        initial,
        ExpectedHalt::Steps(u64::from(k)),
        "oracle_reduce",
    );
    spec.data_independent_pointers = true;
    Ok(spec)
}

/// Horn's prefix sum: `d' = d + (i >= -p) d*`, `p' = 2p mod n` from `p = -1`.
///
/// Once `p` has reached 0 the cell stops adding, so the result is a fixed point.
pub fn horn<S: Scalar>(data: &[i64]) -> Result<AlgorithmSpec<S>, AlgError> {
    let k = require_pow2(data.len())?;
    let rules = RuleSet::basic(
        "horn",
        1,
        |c| {
            let p = c.state.p();
            let d = c.d().int();
            if p != 0 && c.index as i64 >= -p {
                DataValue::Int(d.wrapping_add(c.dn(0).int()))
            } else {
                DataValue::Int(d)
            }
        },
        |c| vec![Address::Rel((2 * c.state.p()) % c.n() as i64)],
    );
    let initial = Configuration::ring_ints(data, &[-1]);
    let mut spec =
        AlgorithmSpec::new("horn", rules, initial, ExpectedHalt::Steps(u64::from(k)), "oracle_scan");
    spec.data_independent_pointers = true;
    Ok(spec)
}
