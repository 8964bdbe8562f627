use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArchError {
    #[error("invalid architecture parameters: {0}")]
    Params(String),
    #[error("capacity formula needs n >= 2 (got n = {0})")]
    CapacityN(usize),
    #[error("the algorithm reads {needed} neighbors per cell but the architecture has k = {k}")]
    ArmCount { needed: usize, k: usize },
    #[error("cycle {cycle}: {what}")]
    Structural { cycle: u64, what: String },
    #[error("cycle {cycle}: two writes to bank {bank}")]
    BankConflict { cycle: u64, bank: usize },
    #[error("cycle {cycle}: cell {reader} reads cell {cell} before it is computed")]
    DataHazard { cycle: u64, reader: usize, cell: usize },
    #[error("engine: {0}")]
    Engine(String),
}

/// Size and timing parameters of a pipelined GCA machine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArchParams {
    /// Number of cells.
    pub n: usize,
    /// Pointers (global reads) per cell.
    pub k: usize,
    /// Parallel degree: pipelines and memory banks. 1 for the sequential design.
    pub p: usize,
    /// Bits of the data part of a cell.
    pub delta: u32,
    /// Clock period in abstract time units.
    pub clock: f64,
    /// Cycles spent swapping read and write memories between generations.
    pub switch: u64,
}

impl ArchParams {
    pub fn seq(n: usize, k: usize, delta: u32) -> Self {
        ArchParams { n, k, p: 1, delta, clock: 1.0, switch: 1 }
    }

    pub fn dpa(n: usize, k: usize, p: usize, delta: u32) -> Self {
        ArchParams { p, ..ArchParams::seq(n, k, delta) }
    }

    pub fn validate(&self) -> Result<(), ArchError> {
        if self.n < 1 {
            return Err(ArchError::Params("n must be at least 1".into()));
        }
        if self.k < 1 {
            return Err(ArchError::Params("k must be at least 1".into()));
        }
        if self.p < 1 || self.p > self.n {
            return Err(ArchError::Params(format!("p = {} outside 1..={}", self.p, self.n)));
        }
        Ok(())
    }

    /// Pipeline iterations per generation, `ceil(n / p)`.
    pub fn iterations(&self) -> usize {
        self.n.div_ceil(self.p)
    }

    /// Closed-form cycle count for `g` generations.
    pub fn cycles(&self, g: u64) -> u64 {
        if g == 0 {
            return 0;
        }
        g * self.iterations() as u64 + LATENCY + self.switch * (g - 1)
    }
}

/// Pipeline fill latency: a Write trails its Fetch by three cycles.
pub const LATENCY: u64 = 3;
