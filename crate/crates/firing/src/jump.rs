//! Firing by pointer jumping: information spreads by doubling the distance
//! to the dynamic neighbor every generation.

use gca_algorithms::spec::{require_min, require_pow2};
use gca_algorithms::{AlgError, AlgorithmSpec, ExpectedHalt};
use gca_core::{Address, CellState, Configuration, DataValue, Intervention, RuleSet, Scalar, Topology};

/// Integer codes of the data states.
pub const SOLDIER: i64 = 0;
pub const GENERAL: i64 = 1;
pub const ATTENTION: i64 = 2;
pub const FIRE: i64 = 3;
/// First solution uses 2 as its firing state.
pub const FIRE_V1: i64 = 2;

fn all_data<S: Scalar>(v: i64) -> impl Fn(&Configuration<S>) -> bool + Send + Sync {
    move |c: &Configuration<S>| c.states.iter().all(|s| s.data.as_int() == Some(v))
}

/// First solution: `n = 2^k`, pointers `+1` when the general appears at
/// `t = 0`; fires at `t = 1 + k`.
pub fn firing_jump_v1<S: Scalar>(n: usize, general_at: usize) -> Result<AlgorithmSpec<S>, AlgError> {
    require_pow2(n)?;
    if general_at >= n {
        return Err(AlgError::Invalid(format!("general position {general_at} outside 0..{n}")));
    }
    let rules = RuleSet::basic(
        "firing-jump-v1",
        1,
        |c| {
            let (p, d, ds) = (c.state.p(), c.d().int(), c.dn(0).int());
            DataValue::Int(if p != 0 && d < ds {
                ds // 6a
            } else if p == 0 && d == GENERAL {
                FIRE_V1 // 6b
            } else {
                d // 6c
            })
        },
        |c| vec![Address::Rel((c.state.p() + c.neighbors[0].p()).rem_euclid(c.n() as i64))],
    );
    let initial = Configuration::from_fn(Topology::ring(n), |i| {
        CellState::int(if i == general_at { GENERAL } else { SOLDIER }, &[1])
    });
    let mut spec = AlgorithmSpec::new(
        "firing-jump-v1",
        rules,
        initial,
        ExpectedHalt::predicate("all cells fire", all_data::<S>(FIRE_V1)),
        "oracle_fire_time",
    );
    spec.data_independent_pointers = true;
    Ok(spec)
}

/// Next value in the busy-wait pointer cycle `(1, 2, 4, ..., 0)`.
///
/// Doubling is folded into `(-n/2, n/2]`, so a power of two `n` keeps
/// `n/2` positive and reaches 0 by doubling, while any other `n` wraps to
/// a negative value that rule 7b turns into 0.
pub fn v2_next_pointer(p: i64, n: usize) -> i64 {
    let n = n as i64;
    if p == 0 {
        1 // 7a
    } else if p < 0 {
        0 // 7b
    } else {
        let r = (2 * p).rem_euclid(n); // 7c
        if 2 * r > n {
            r - n
        } else {
            r
        }
    }
}

/// Length of the pointer cycle, `log2 N + 1` with `N` the next power of two.
pub fn v2_cycle_length(n: usize) -> u64 {
    u64::from(n.next_power_of_two().trailing_zeros()) + 1
}

/// Second solution: works for any `n`. The array starts generalless with
/// all pointers 0 at `t = 0`; the general appears at `introduce_at_t`.
pub fn firing_jump_v2<S: Scalar>(
    n: usize,
    general_at: usize,
    introduce_at_t: u64,
) -> Result<AlgorithmSpec<S>, AlgError> {
    require_min(n, 2)?;
    if general_at >= n {
        return Err(AlgError::Invalid(format!("general position {general_at} outside 0..{n}")));
    }
    let rules = RuleSet::basic(
        "firing-jump-v2",
        1,
        |c| {
            let (p, d, ds) = (c.state.p(), c.d().int(), c.dn(0).int());
            DataValue::Int(if p != 0 && d < ds {
                ds // 8a
            } else if p == 0 && d == GENERAL {
                ATTENTION // 8b
            } else if p == 0 && d == ATTENTION {
                FIRE // 8c
            } else {
                d // 8d
            })
        },
        |c| vec![Address::Rel(v2_next_pointer(c.state.p(), c.n()))],
    );
    let initial = generalless::<S>(n, 0);
    let mut spec = AlgorithmSpec::new(
        "firing-jump-v2",
        rules,
        initial,
        ExpectedHalt::predicate("all cells fire", all_data::<S>(FIRE)),
        "oracle_fire_time",
    );
    spec.interventions.push(Intervention::new(introduce_at_t, move |c: &mut Configuration<S>| {
        c.states[general_at].data = DataValue::Int(GENERAL);
    }));
    spec.data_independent_pointers = true;
    Ok(spec)
}

/// All soldiers, every pointer `p`.
pub fn generalless<S: Scalar>(n: usize, p: i64) -> Configuration<S> {
    Configuration::from_fn(Topology::ring(n), |_| CellState::int(SOLDIER, &[p]))
}
