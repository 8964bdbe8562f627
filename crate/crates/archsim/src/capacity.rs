//! Memory capacity in bits of the two pipelined designs.

use std::fmt::Write;

use crate::params::{ArchError, ArchParams};

/// Address width in bits, `ceil(log2 n)`.
pub fn address_bits(n: usize) -> u64 {
    u64::from(usize::BITS - (n - 1).leading_zeros())
}

fn word_bits(a: &ArchParams) -> Result<u64, ArchError> {
    if a.n < 2 {
        return Err(ArchError::CapacityN(a.n));
    }
    Ok(u64::from(a.delta) + a.k as u64 * address_bits(a.n))
}

/// Sequential design: a read and a write set of `k + 1` copies of the
/// whole cell field, `2n(k+1)(delta + k ceil(log2 n))`.
pub fn seq_memory_capacity(a: &ArchParams) -> Result<u64, ArchError> {
    Ok(2 * a.n as u64 * (a.k as u64 + 1) * word_bits(a)?)
}

/// Banked design: each of the `p` banks holds `kp + 1` copies,
/// `2n(kp+1)(delta + k ceil(log2 n))`.
pub fn dpa_memory_capacity(a: &ArchParams) -> Result<u64, ArchError> {
    Ok(2 * a.n as u64 * (a.k as u64 * a.p as u64 + 1) * word_bits(a)?)
}

/// Idealized bound with true multiport memories, `2n(delta + k ceil(log2 n))`.
pub fn multiport_bound(a: &ArchParams) -> Result<u64, ArchError> {
    Ok(2 * a.n as u64 * word_bits(a)?)
}

/// Plain text table, one row per parameter tuple.
pub fn capacity_table(rows: &[ArchParams]) -> Result<String, ArchError> {
    let mut out = String::new();
    writeln!(out, "{:>8} {:>4} {:>4} {:>6} {:>12} {:>12} {:>12}", "n", "k", "p", "delta", "seq_bits", "dpa_bits", "multiport").unwrap();
    for a in rows {
        writeln!(
            out,
            "{:>8} {:>4} {:>4} {:>6} {:>12} {:>12} {:>12}",
            a.n,
            a.k,
            a.p,
            a.delta,
            seq_memory_capacity(a)?,
            dpa_memory_capacity(a)?,
            multiport_bound(a)?
        )
        .unwrap();
    }
    Ok(out)
}
