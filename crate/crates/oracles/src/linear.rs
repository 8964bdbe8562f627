//! Superposition test for XOR automata.

use gca_algorithms::AlgorithmSpec;
use gca_core::{Configuration, DataValue, Scalar};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{0} has data-dependent pointers; superposition does not apply")]
    DataDependent(String),
    #[error("initial pattern has {got} cells, expected {want}")]
    Length { got: usize, want: usize },
    #[error("rule failed at cell {0}: {1}")]
    Rule(usize, String),
}

/// A deliberately plain double-buffered generation loop.
fn evolve<S: Scalar>(spec: &AlgorithmSpec<S>, start: Configuration<S>, steps: u64) -> Result<Vec<Vec<i64>>, OracleError> {
    let rs = &spec.rules;
    let topo = start.topology;
    let mut cur = start;
    let mut out = vec![cur.ints()];
    for _ in 0..steps {
        let mut states = Vec::with_capacity(cur.len());
        for i in 0..cur.len() {
            let stencil: Vec<_> = rs.stencil_targets(topo, i).iter().map(|&j| cur.states[j].clone()).collect();
            let eff = rs.effective_addresses(topo, i, &cur.states[i], &stencil, cur.time);
            let nb: Vec<_> = eff.iter().map(|&a| cur.states[topo.resolve(i, a)].clone()).collect();
            let next = rs
                .evaluate(topo, i, &cur.states[i], &nb, &eff, &stencil, cur.time)
                .map_err(|m| OracleError::Rule(i, m))?;
            states.push(next);
        }
        cur = Configuration { topology: topo, states, time: cur.time + 1 };
        out.push(cur.ints());
    }
    Ok(out)
}

fn with_bits<S: Scalar>(base: &Configuration<S>, bits: &[u8]) -> Result<Configuration<S>, OracleError> {
    if bits.len() != base.len() {
        return Err(OracleError::Length { got: bits.len(), want: base.len() });
    }
    let mut c = base.clone();
    for (s, &b) in c.states.iter_mut().zip(bits) {
        s.data = DataValue::Int(i64::from(b & 1));
    }
    Ok(c)
}

/// Whether `evolve(a xor b) = evolve(a) xor evolve(b)` for every `t <= steps`.
pub fn oracle_xor_linear_check<S: Scalar>(
    spec: &AlgorithmSpec<S>,
    init1: &[u8],
    init2: &[u8],
    steps: u64,
) -> Result<bool, OracleError> {
    if !spec.data_independent_pointers {
        return Err(OracleError::DataDependent(spec.name.clone()));
    }
    let both: Vec<u8> = init1.iter().zip(init2).map(|(a, b)| a ^ b).collect();
    let ea = evolve(spec, with_bits(&spec.initial, init1)?, steps)?;
    let eb = evolve(spec, with_bits(&spec.initial, init2)?, steps)?;
    let ec = evolve(spec, with_bits(&spec.initial, &both)?, steps)?;
    Ok((0..ea.len()).all(|t| ea[t].iter().zip(&eb[t]).map(|(a, b)| a ^ b).eq(ec[t].iter().copied())))
}
