//! Bitonic merge in the general model and its basic-model transformation.

use gca_core::{Address, CellState, Configuration, DataValue, RuleContext, RuleSet, Scalar, Topology};

use crate::spec::{require_pow2, AlgError, AlgorithmSpec, ExpectedHalt};

/// Effective relative address for pointer base `p`: toward the partner
/// whose index differs in bit `p`.
pub fn bitonic_offset(i: usize, p: i64) -> i64 {
    if i as i64 & p == 0 {
        p
    } else {
        -p
    }
}

/// Compare-exchange seen from one side: the lower cell keeps the minimum,
/// the upper one the maximum. `peff > 0` marks the lower cell.
fn merge_data<S: Scalar>(c: &RuleContext<'_, S>, peff: i64) -> DataValue<S> {
    let d = c.d().int();
    let other = c.dn(0).int();
    let take = (peff > 0 && other < d) || (peff < 0 && d < other);
    DataValue::Int(if take { other } else { d })
}

/// General model: stored base `p = 2^(k-1)`, modified to `+p` or `-p`.
pub fn bitonic<S: Scalar>(data: &[i64]) -> Result<AlgorithmSpec<S>, AlgError> {
    let n = data.len();
    let k = require_pow2(n)?;
    let rules = RuleSet::general(
        "bitonic",
        1,
        1,
        |c| merge_data(c, c.effective[0].offset()),
        |c| vec![Address::Rel(c.state.p() / 2)],
        |a| vec![Address::Rel(bitonic_offset(a.index, a.state.p()))],
    );
    let initial = Configuration::ring_ints(data, &[(n / 2) as i64]);
    let mut spec =
        AlgorithmSpec::new("bitonic", rules, initial, ExpectedHalt::Steps(u64::from(k)), "oracle_sort");
    spec.data_independent_pointers = true;
    Ok(spec)
}

/// Basic model: the stored pointer already is the signed effective
/// address, so the pointer rule computes next generation's partner.
pub fn bitonic_basic<S: Scalar>(data: &[i64]) -> Result<AlgorithmSpec<S>, AlgError> {
    let n = data.len();
    let k = require_pow2(n)?;
    let rules = RuleSet::basic(
        "bitonic-basic",
        1,
        |c| merge_data(c, c.state.p()),
        |c| {
            let base = c.state.p().abs() / 2;
            vec![Address::Rel(bitonic_offset(c.index, base))]
        },
    );
    let half = (n / 2) as i64;
    let initial = Configuration::from_fn(Topology::ring(n), |i| {
        let p = if i < n / 2 { half } else { -half };
        CellState::int(data[i], &[p])
    });
    let mut spec = AlgorithmSpec::new(
        "bitonic-basic",
        rules,
        initial,
        ExpectedHalt::Steps(u64::from(k)),
        "oracle_sort",
    );
    spec.data_independent_pointers = true;
    Ok(spec)
}
