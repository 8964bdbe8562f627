//! One-dimensional XOR with pointers doubled, in basic and general form,
//! plus the text renderer for its `OUT_c` listing.

use std::fmt::Write;

use gca_core::{Address, Configuration, DataValue, RuleSet, Scalar, Topology, CellState, Variant};

use crate::spec::{AlgError, AlgorithmSpec, ExpectedHalt};

pub const DEFAULT_N: usize = 31;
pub const DEFAULT_TMAX: u64 = 5;

/// `p' = 2p mod n` with truncating remainder, never 0 (falls back to `init`).
fn doubled(p: i64, n: i64, init: i64) -> i64 {
    let v = (p * 2) % n;
    if v == 0 {
        init
    } else {
        v
    }
}

fn xor_two<S: Scalar>(c: &gca_core::RuleContext<'_, S>) -> DataValue<S> {
    DataValue::Int((c.dn(0).int() + c.dn(1).int()).rem_euclid(2))
}

/// Basic form: stored pointers start at `+1` and `-1` and double.
pub fn xor1d_basic<S: Scalar>(n: usize) -> Result<AlgorithmSpec<S>, AlgError> {
    check_n(n)?;
    let rules = RuleSet::basic("xor1d-basic", 2, xor_two, |c| {
        let n = c.n() as i64;
        vec![
            Address::Rel(doubled(c.state.pk(0), n, 1)),
            Address::Rel(doubled(c.state.pk(1), n, -1)),
        ]
    });
    Ok(spec(rules, n, [1, -1]))
}

/// General form: both stored bases start at `+1`; the modifiers are
/// `p1eff = p1` and `p2eff = -p2`.
pub fn xor1d_general<S: Scalar>(n: usize) -> Result<AlgorithmSpec<S>, AlgError> {
    check_n(n)?;
    let rules = RuleSet::general(
        "xor1d-general",
        2,
        2,
        xor_two,
        |c| {
            let n = c.n() as i64;
            vec![
                Address::Rel(doubled(c.state.pk(0), n, 1)),
                Address::Rel(doubled(c.state.pk(1), n, 1)),
            ]
        },
        |a| vec![Address::Rel(a.state.pk(0)), Address::Rel(-a.state.pk(1))],
    );
    Ok(spec(rules, n, [1, 1]))
}

fn check_n(n: usize) -> Result<(), AlgError> {
    if n < 3 || n % 2 == 0 {
        return Err(AlgError::Invalid(format!("n = {n}: this XOR needs an odd n >= 3")));
    }
    Ok(())
}

fn spec<S: Scalar>(rules: RuleSet<S>, n: usize, pointers: [i64; 2]) -> AlgorithmSpec<S> {
    let initial =
        Configuration::from_fn(Topology::ring(n), |i| CellState::int((i == n / 2) as i64, &pointers));
    let mut spec = AlgorithmSpec::new(
        &rules.name.clone(),
        rules,
        initial,
        ExpectedHalt::Steps(DEFAULT_TMAX),
        "oracle_xor_linear_check",
    );
    spec.data_independent_pointers = true;
    spec
}

/// Renders snapshots the way the reference program writes `OUT_c`: one
/// line per generation, `" #"` or `"  "` per cell, then the pointers of
/// the middle cell. For the general form the effective addresses shown on
/// line `t` are the ones used to compute generation `t`.
pub fn render_out_c<S: Scalar>(snapshots: &[Configuration<S>], variant: Variant) -> String {
    let mut out = String::new();
    for (row, cfg) in snapshots.iter().enumerate() {
        let mid = cfg.len() / 2;
        for s in &cfg.states {
            out.push_str(match s.data.as_int() {
                Some(0) => "  ",
                Some(1) => " #",
                _ => " ?",
            });
        }
        let st = &cfg.states[mid];
        write!(out, " t={:4} at[mid]: p1={:4} p2={:4}", cfg.time, st.pk(0), st.pk(1)).unwrap();
        if variant == Variant::General {
            let src = &snapshots[row.saturating_sub(1)].states[mid];
            write!(out, " p1eff={:4} p2eff={:4}", src.pk(0), -src.pk(1)).unwrap();
        }
        out.push('\n');
    }
    out
}
