//! Firing of several independent rings embedded in a larger ring of cells.
//!
//! Active cells carry two pointers: `p1` toward the previous ring member
//! (it marks the wave) and the constant `p2` toward the next one. Inactive
//! cells have `p1 = p2 = 0` and never change. All pointer comparisons are
//! taken mod `n`, since initial pointers need not lie in the relative
//! window.

use std::fmt;
use std::str::FromStr;

use gca_algorithms::{AlgError, AlgorithmSpec, ExpectedHalt};
use gca_core::symbol::{F, G, S};
use gca_core::{normalize_relative, Address, CellState, Configuration, DataValue, RuleContext, RuleSet, Scalar, Topology};
use thiserror::Error;

/// Marker bit distinguishing a firing general from a firing soldier, so
/// that both can return to their role after the firing generation.
pub const GENERAL_MARK: u8 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub cells: Vec<usize>,
    pub general: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingLayout {
    pub rings: Vec<Ring>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayoutError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cell {0} belongs to more than one ring")]
    Overlap(usize),
    #[error("ring {0} has fewer than two cells")]
    TooShort(usize),
    #[error("cell {cell} outside 0..{n}")]
    OutOfRange { cell: usize, n: usize },
    #[error("ring {0} has no general")]
    NoGeneral(usize),
}

impl FromStr for RingLayout {
    type Err = LayoutError;

    /// One ring per line, comma-separated indices, `*` after the general.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rings = Vec::new();
        for (ln, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cells = Vec::new();
            let mut general = None;
            for tok in line.split(',') {
                let tok = tok.trim();
                let (num, is_gen) = match tok.strip_suffix('*') {
                    Some(t) => (t.trim(), true),
                    None => (tok, false),
                };
                let cell: usize = num.parse().map_err(|_| LayoutError::Parse {
                    line: ln + 1,
                    msg: format!("bad cell index {tok:?}"),
                })?;
                if is_gen {
                    if general.is_some() {
                        return Err(LayoutError::Parse { line: ln + 1, msg: "two generals in one ring".into() });
                    }
                    general = Some(cell);
                }
                cells.push(cell);
            }
            let general = general.ok_or(LayoutError::NoGeneral(rings.len()))?;
            rings.push(Ring { cells, general });
        }
        Ok(RingLayout { rings })
    }
}

impl fmt::Display for RingLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rings {
            let parts: Vec<String> = r
                .cells
                .iter()
                .map(|&c| if c == r.general { format!("{c}*") } else { c.to_string() })
                .collect();
            writeln!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl RingLayout {
    pub fn validate(&self, n: usize) -> Result<(), LayoutError> {
        let mut owner = vec![false; n];
        for (k, r) in self.rings.iter().enumerate() {
            if r.cells.len() < 2 {
                return Err(LayoutError::TooShort(k));
            }
            if !r.cells.contains(&r.general) {
                return Err(LayoutError::NoGeneral(k));
            }
            for &c in &r.cells {
                if c >= n {
                    return Err(LayoutError::OutOfRange { cell: c, n });
                }
                if owner[c] {
                    return Err(LayoutError::Overlap(c));
                }
                owner[c] = true;
            }
        }
        Ok(())
    }

    /// Initial `(p1, p2)` of every ring member, in ring order.
    pub fn initial_pointers(&self, n: usize) -> Vec<Vec<(i64, i64)>> {
        let n = n as i64;
        self.rings
            .iter()
            .map(|r| {
                let len = r.cells.len();
                (0..len)
                    .map(|j| {
                        let a = r.cells[j] as i64;
                        let prev = r.cells[(j + len - 1) % len] as i64;
                        let next = r.cells[(j + 1) % len] as i64;
                        (-(a - prev).rem_euclid(n), (next - a).rem_euclid(n))
                    })
                    .collect()
            })
            .collect()
    }
}

fn role(code: u8) -> u8 {
    code & 3
}

fn is_zero(p: i64, n: usize) -> bool {
    p.rem_euclid(n as i64) == 0
}

fn active<S: Scalar>(q: &CellState<S>, n: usize) -> bool {
    !(is_zero(q.pk(0), n) && is_zero(q.pk(1), n))
}

fn ring_data<S: Scalar>(c: &RuleContext<'_, S>) -> DataValue<S> {
    let n = c.n();
    let d = c.d().as_symbol().expect("symbol data");
    if !active(c.state, n) {
        return *c.d(); // 4a
    }
    if role(d) == F {
        // a firing cell resumes its role
        return DataValue::Symbol(if d & GENERAL_MARK != 0 { G } else { S });
    }
    let nb = &c.neighbors[0];
    let p1 = c.state.pk(0);
    let nd = nb.data.as_symbol().expect("symbol data");
    if role(nd) == G && (!is_zero(p1 + nb.pk(1), n) || is_zero(nb.pk(0), n)) {
        let mark = if d == G { GENERAL_MARK } else { 0 };
        return DataValue::Symbol(F | mark); // 4b
    }
    *c.d()
}

fn ring_pointers<S: Scalar>(c: &RuleContext<'_, S>) -> Vec<Address> {
    let n = c.n();
    let (p1, p2) = (c.state.pk(0), c.state.pk(1));
    if !active(c.state, n) {
        return c.state.pointers.clone(); // 3a
    }
    let nb = &c.neighbors[0];
    let nd = nb.data.as_symbol().expect("symbol data");
    let next = if role(nd) == G && !is_zero(p1, n) && !is_zero(nb.pk(0), n) {
        0 // 3b
    } else if is_zero(p1, n) || is_zero(nb.pk(0), n) {
        normalize_relative(p1 + nb.pk(1), n) // 3c
    } else {
        p1
    };
    vec![Address::Rel(next), Address::Rel(p2)]
}

/// Builds the two-armed ring automaton.
pub fn firing_rings<S: Scalar>(n: usize, layout: &RingLayout) -> Result<AlgorithmSpec<S>, AlgError> {
    layout.validate(n).map_err(|e| AlgError::Invalid(e.to_string()))?;
    if n < 3 {
        return Err(AlgError::TooSmall { n, min: 3 });
    }
    let mut states: Vec<CellState<S>> =
        (0..n).map(|_| CellState::new(DataValue::Symbol(S), vec![Address::Rel(0), Address::Rel(0)])).collect();
    for (ring, ptrs) in layout.rings.iter().zip(layout.initial_pointers(n)) {
        for (&cell, (p1, p2)) in ring.cells.iter().zip(ptrs) {
            let d = if cell == ring.general { G } else { S };
            states[cell] = CellState::new(DataValue::Symbol(d), vec![Address::Rel(p1), Address::Rel(p2)]);
        }
    }
    // dotted fields (p1.d, p1.p1, p1.p2) all come from the p1 neighbor
    let rules = RuleSet::basic("firing-rings", 2, ring_data, ring_pointers);
    let initial = Configuration::new(Topology::ring(n), states).map_err(|e| AlgError::Invalid(e.to_string()))?;
    let layout_for_halt = layout.clone();
    Ok(AlgorithmSpec::new(
        "firing-rings",
        rules,
        initial,
        ExpectedHalt::predicate("all rings fire in the same generation", move |c: &Configuration<S>| {
            layout_for_halt.rings.iter().all(|r| ring_fires(c, r))
        }),
        "oracle_fire_time",
    ))
}

/// Whether every member of `ring` is in a firing state.
pub fn ring_fires<S: Scalar>(c: &Configuration<S>, ring: &Ring) -> bool {
    ring.cells
        .iter()
        .all(|&i| c.states[i].data.as_symbol().map(role) == Some(F))
}

/// The two-ring example on nine cells: ring A `(2, 4, 6)` with its general
/// at 6 and ring B `(1, 3, 5, 7)` with its general at 1.
pub fn example_layout() -> RingLayout {
    "2,4,6*\n1*,3,5,7".parse().expect("valid layout")
}
