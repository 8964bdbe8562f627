//! Run traces and their CSV export.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::address::Address;
use crate::data::DataValue;
use crate::rules::Variant;
use crate::scalar::Scalar;
use crate::state::Configuration;

pub const FORMAT_HEADER: &str = "gca-trace v1";

#[derive(Clone, Debug)]
pub struct Trace<S: Scalar> {
    pub variant: Variant,
    pub arms: usize,
    pub snapshots: Vec<Configuration<S>>,
    /// `(t, edges)` where each edge is `(reader, target)` read in generation `t`.
    pub edges: Vec<(u64, Vec<(usize, usize)>)>,
}

impl<S: Scalar> Trace<S> {
    pub fn new(variant: Variant, arms: usize) -> Self {
        Trace { variant, arms, snapshots: Vec::new(), edges: Vec::new() }
    }

    /// Distinct `(reader, target)` pairs over the whole run.
    pub fn access_pattern(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().flat_map(|(_, e)| e.iter().copied()).collect()
    }

    /// Largest number of distinct readers of one cell in any generation.
    pub fn max_fan_in(&self) -> usize {
        self.edges
            .iter()
            .map(|(_, e)| {
                let mut counts = std::collections::HashMap::new();
                for &(r, t) in e {
                    counts.entry(t).or_insert_with(BTreeSet::new).insert(r);
                }
                counts.values().map(|s| s.len()).max().unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// `t,i,field,value` rows, one per data field and pointer.
    pub fn states_csv(&self) -> String {
        let mut out = format!("{FORMAT_HEADER}\nt,i,field,value\n");
        for cfg in &self.snapshots {
            for (i, s) in cfg.states.iter().enumerate() {
                writeln!(out, "{},{},d,{}", cfg.time, i, data_cell(&s.data)).unwrap();
                for (k, p) in s.pointers.iter().enumerate() {
                    writeln!(out, "{},{},p{},{}", cfg.time, i, k + 1, address_cell(p)).unwrap();
                }
            }
        }
        out
    }

    pub fn edges_csv(&self) -> String {
        let mut out = format!("{FORMAT_HEADER}\nt,reader,target\n");
        for (t, edges) in &self.edges {
            for (r, g) in edges {
                writeln!(out, "{t},{r},{g}").unwrap();
            }
        }
        out
    }
}

/// CSV-safe rendering of a data value; complex parts are joined by `;`.
pub fn data_cell<S: Scalar>(d: &DataValue<S>) -> String {
    match d {
        DataValue::Int(v) => v.to_string(),
        DataValue::Real(v) => format!("{v:?}"),
        DataValue::Complex(c) => format!("{:?};{:?}", c.re, c.im),
        DataValue::Symbol(v) => format!("{}", crate::data::symbol::name(*v)),
    }
}

pub fn address_cell(a: &Address) -> String {
    match *a {
        Address::Rel(v) => v.to_string(),
        Address::Abs(v) => format!("@{v}"),
        Address::Rel2 { dx, dy } => format!("{dx};{dy}"),
        Address::Abs2 { x, y } => format!("@{x};{y}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::Configuration;

    #[test]
    fn csv_layout() {
        let cfg = Configuration::<f64>::ring_ints(&[4, 5], &[1]);
        let mut tr = Trace::new(Variant::Basic, 1);
        tr.snapshots.push(cfg);
        tr.edges.push((0, vec![(0, 1), (1, 0)]));
        let states = tr.states_csv();
        let lines: Vec<&str> = states.lines().collect();
        assert_eq!(lines[0], FORMAT_HEADER);
        assert_eq!(lines[1], "t,i,field,value");
        assert_eq!(lines[2], "0,0,d,4");
        assert_eq!(lines[3], "0,0,p1,1");
        assert!(tr.edges_csv().ends_with("0,0,1\n0,1,0\n"));
    }
}
