//! Cell states and configurations.

use std::fmt;

use crate::address::Address;
use crate::data::DataValue;
use crate::error::ConfigError;
use crate::scalar::Scalar;
use crate::topology::Topology;

/// State `q = (d, P)` of one cell. Plain-model cells have no pointers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellState<S: Scalar> {
    pub data: DataValue<S>,
    pub pointers: Vec<Address>,
}

impl<S: Scalar> CellState<S> {
    pub fn new(data: DataValue<S>, pointers: Vec<Address>) -> Self {
        CellState { data, pointers }
    }

    pub fn plain(data: DataValue<S>) -> Self {
        CellState { data, pointers: Vec::new() }
    }

    pub fn int(d: i64, pointers: &[i64]) -> Self {
        CellState {
            data: DataValue::Int(d),
            pointers: pointers.iter().map(|&p| Address::Rel(p)).collect(),
        }
    }

    /// First pointer as a relative offset.
    pub fn p(&self) -> i64 {
        self.pointers[0].offset()
    }

    pub fn pk(&self, k: usize) -> i64 {
        self.pointers[k].offset()
    }
}

impl<S: Scalar> fmt::Display for CellState<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.data)?;
        for p in &self.pointers {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// All cell states of the automaton at generation `time`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration<S: Scalar> {
    pub topology: Topology,
    pub states: Vec<CellState<S>>,
    pub time: u64,
}

impl<S: Scalar> Configuration<S> {
    pub fn new(topology: Topology, states: Vec<CellState<S>>) -> Result<Self, ConfigError> {
        let cfg = Configuration { topology, states, time: 0 };
        cfg.check_shape()?;
        Ok(cfg)
    }

    /// Builds a configuration by evaluating `f` at every index.
    pub fn from_fn(topology: Topology, f: impl FnMut(usize) -> CellState<S>) -> Self {
        let states = (0..topology.len()).map(f).collect();
        Configuration { topology, states, time: 0 }
    }

    /// Ring of integer cells sharing one pointer vector.
    pub fn ring_ints(data: &[i64], pointers: &[i64]) -> Self {
        Self::from_fn(Topology::ring(data.len()), |i| CellState::int(data[i], pointers))
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn data(&self) -> impl Iterator<Item = &DataValue<S>> + '_ {
        self.states.iter().map(|s| &s.data)
    }

    /// Integer data of every cell; panics on non-integer cells.
    pub fn ints(&self) -> Vec<i64> {
        self.states.iter().map(|s| s.data.int()).collect()
    }

    /// First pointer of every cell as relative offsets.
    pub fn offsets(&self) -> Vec<i64> {
        self.states.iter().map(|s| s.p()).collect()
    }

    pub fn same_states(&self, other: &Self) -> bool {
        self.topology == other.topology && self.states == other.states
    }

    fn check_shape(&self) -> Result<(), ConfigError> {
        if self.topology.is_empty() {
            return Err(ConfigError::Empty);
        }
        if self.states.len() != self.topology.len() {
            return Err(ConfigError::LengthMismatch {
                expected: self.topology.len(),
                found: self.states.len(),
            });
        }
        Ok(())
    }

    /// Checks the configuration against an automaton with `arms` stored
    /// pointers per cell.
    pub fn validate(&self, arms: usize) -> Result<(), ConfigError> {
        self.check_shape()?;
        let n = self.len();
        if arms > 0 && arms >= n {
            return Err(ConfigError::TooManyArms { arms, n });
        }
        let kind = self.states[0].data.kind();
        for (i, s) in self.states.iter().enumerate() {
            if s.data.kind() != kind {
                return Err(ConfigError::MixedData { index: i });
            }
            if s.pointers.len() != arms {
                return Err(ConfigError::PointerCount {
                    index: i,
                    expected: arms,
                    found: s.pointers.len(),
                });
            }
            for &a in &s.pointers {
                if let Address::Abs(v) = a {
                    if v >= n {
                        return Err(ConfigError::AddressRange { index: i, address: a });
                    }
                }
            }
        }
        Ok(())
    }
}
