//! Firing with a single wave around a ring of soldiers.

use gca_algorithms::spec::require_min;
use gca_algorithms::{AlgError, AlgorithmSpec, ExpectedHalt};
use gca_core::symbol::{F, G, S};
use gca_core::{normalize_relative, Address, CellState, Configuration, DataValue, RuleSet, Scalar, Topology};

fn sym<S: Scalar>(d: &DataValue<S>) -> u8 {
    d.as_symbol().expect("firing cells carry symbols")
}

/// One-armed wave: all pointers start at `-1`, one soldier becomes the
/// general at `t = 0`, and every cell fires at `t = n + 1`.
pub fn firing_wave<S: Scalar>(n: usize, general_at: usize) -> Result<AlgorithmSpec<S>, AlgError> {
    require_min(n, 2)?;
    if general_at >= n {
        return Err(AlgError::Invalid(format!("general position {general_at} outside 0..{n}")));
    }
    let rules = RuleSet::basic(
        "firing-wave",
        1,
        |c| {
            let d = sym(c.d());
            let ds = sym(c.dn(0));
            let p = c.state.p();
            let ps = c.neighbors[0].p();
            if ds == G && (p != -1 || ps == 0) {
                DataValue::Symbol(F) // 2a
            } else if d == F {
                DataValue::Symbol(S) // 2b
            } else {
                *c.d()
            }
        },
        |c| {
            let d = sym(c.d());
            let ds = sym(c.dn(0));
            let p = c.state.p();
            let ps = c.neighbors[0].p();
            let next = if (d == S || d == G) && (ds == G || ps != -1) {
                normalize_relative(p + 1, c.n()) // 1a
            } else if d == F {
                -1 // 1b
            } else {
                p
            };
            vec![Address::Rel(next)]
        },
    );
    let initial = Configuration::from_fn(Topology::ring(n), |i| {
        let d = if i == general_at { G } else { S };
        CellState::new(DataValue::Symbol(d), vec![Address::Rel(-1)])
    });
    Ok(AlgorithmSpec::new(
        "firing-wave",
        rules,
        initial,
        ExpectedHalt::predicate("all cells fire", all_fire::<S>),
        "oracle_fire_time",
    ))
}

pub fn all_fire<S: Scalar>(c: &Configuration<S>) -> bool {
    c.states.iter().all(|s| s.data.as_symbol() == Some(F))
}
