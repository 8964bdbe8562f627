//! Event schedule of the four-stage pipeline.
//!
//! Generation `g` reads memory set `g mod 2` and writes the other one.
//! Each set holds one memory per bank and copy: copy 0 serves the Fetch of
//! the bank's own lane, copies `1 + lane*k + r` serve read `r` of `lane`
//! in the Get stage, and a Write updates every copy of its bank. With
//! `p = 1` this is the `2(k+1)`-memory sequential design.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::params::{ArchError, ArchParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Fetch,
    Get,
    Exe,
    Write,
}

impl Stage {
    pub const ALL: [Stage; 4] = [Stage::Fetch, Stage::Get, Stage::Exe, Stage::Write];

    /// Cycles after the Fetch of the same cell.
    pub fn offset(self) -> u64 {
        self as u64
    }

    pub fn name(self) -> &'static str {
        match self {
            Stage::Fetch => "Fetch",
            Stage::Get => "Get",
            Stage::Exe => "Exe",
            Stage::Write => "Write",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineEvent {
    pub cycle: u64,
    pub stage: Stage,
    pub generation: u64,
    pub lane: usize,
    pub cell: usize,
    pub bank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Port {
    Read { set: u64, bank: usize, copy: usize },
    /// A Get reads its copy column in whichever bank holds the target.
    ReadColumn { set: u64, copy: usize },
    Write { set: u64, bank: usize, copy: usize },
}

/// Reads served by a bypass instead of memory.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HazardReport {
    /// Fetches that take their cell's new value from the Exe stage.
    pub forwarded_fetches: u64,
    /// Gets issued before the previous generation is fully written.
    pub early_gets: u64,
}

#[derive(Clone, Debug)]
pub struct Schedule {
    pub params: ArchParams,
    pub generations: u64,
    /// Sorted by cycle, stage and lane.
    pub events: Vec<PipelineEvent>,
    /// First cycle of each memory switch.
    pub switches: Vec<u64>,
    /// Lane slots left empty because `p` does not divide `n`.
    pub idle_slots: u64,
    pub total_cycles: u64,
    pub hazards: HazardReport,
}

impl Schedule {
    /// Fetch cycle of the cell processed in iteration `j` of generation `g`.
    pub fn fetch_cycle(params: &ArchParams, g: u64, j: usize) -> u64 {
        g * (params.iterations() as u64 + params.switch) + j as u64 + 1
    }

    pub fn writes(&self) -> impl Iterator<Item = &PipelineEvent> {
        self.events.iter().filter(|e| e.stage == Stage::Write)
    }

    /// Results per cycle in steady state.
    pub fn throughput(&self) -> f64 {
        if self.total_cycles == 0 {
            return 0.0;
        }
        (self.generations * self.params.n as u64) as f64 / self.total_cycles as f64
    }

    /// Elapsed time in units of the clock period.
    pub fn time(&self) -> f64 {
        self.total_cycles as f64 * self.params.clock
    }

    /// `cycle,stage,lane,cell,bank`; switches appear as `Switch` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("cycle,stage,lane,cell,bank\n");
        let mut sw = self.switches.iter().peekable();
        for e in &self.events {
            while let Some(&&c) = sw.peek() {
                if c > e.cycle {
                    break;
                }
                writeln!(out, "{c},Switch,,,").unwrap();
                sw.next();
            }
            writeln!(out, "{},{},{},{},{}", e.cycle, e.stage, e.lane, e.cell, e.bank).unwrap();
        }
        for c in sw {
            writeln!(out, "{c},Switch,,,").unwrap();
        }
        out
    }

    /// Checks that every memory port is used at most once per cycle and
    /// every bank takes at most one write per cycle.
    pub fn check_structure(&self) -> Result<(), ArchError> {
        let a = &self.params;
        let copies = a.k * a.p + 1;
        let mut used: HashMap<(u64, Port), usize> = HashMap::new();
        let mut bank_writes: HashMap<(u64, usize), usize> = HashMap::new();
        let mut claim = |cycle: u64, port: Port| -> Result<(), ArchError> {
            let c = used.entry((cycle, port)).or_default();
            *c += 1;
            if *c > 1 {
                return Err(ArchError::Structural { cycle, what: format!("port {port:?} used twice") });
            }
            Ok(())
        };
        for e in &self.events {
            let rset = e.generation % 2;
            let wset = 1 - rset;
            match e.stage {
                Stage::Fetch => claim(e.cycle, Port::Read { set: rset, bank: e.bank, copy: 0 })?,
                Stage::Get => {
                    for r in 0..a.k {
                        claim(e.cycle, Port::ReadColumn { set: rset, copy: 1 + e.lane * a.k + r })?;
                    }
                }
                Stage::Exe => {}
                Stage::Write => {
                    let w = bank_writes.entry((e.cycle, e.bank)).or_default();
                    *w += 1;
                    if *w > 1 {
                        return Err(ArchError::BankConflict { cycle: e.cycle, bank: e.bank });
                    }
                    if e.bank != e.cell % a.p {
                        return Err(ArchError::Structural {
                            cycle: e.cycle,
                            what: format!("cell {} written to foreign bank {}", e.cell, e.bank),
                        });
                    }
                    for copy in 0..copies {
                        claim(e.cycle, Port::Write { set: wset, bank: e.bank, copy })?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds and checks the schedule of `generations` generations.
///
/// Within a cycle writes land before reads. A Fetch whose cell is still in
/// Exe takes the value through a bypass; any earlier read is a hazard.
pub fn simulate(params: &ArchParams, generations: u64) -> Result<Schedule, ArchError> {
    params.validate()?;
    let m = params.iterations();
    let mut events = Vec::with_capacity(params.n * generations as usize * 4);
    let mut switches = Vec::new();
    let mut idle_slots = 0;
    for g in 0..generations {
        let first = Schedule::fetch_cycle(params, g, 0);
        if g > 0 {
            switches.push(first - params.switch);
        }
        for j in 0..m {
            let fetch = first + j as u64;
            for lane in 0..params.p {
                let cell = j * params.p + lane;
                if cell >= params.n {
                    idle_slots += 1;
                    continue;
                }
                for stage in Stage::ALL {
                    events.push(PipelineEvent {
                        cycle: fetch + stage.offset(),
                        stage,
                        generation: g,
                        lane,
                        cell,
                        bank: cell % params.p,
                    });
                }
            }
        }
    }
    events.sort_by_key(|e| (e.cycle, e.stage, e.lane));
    let total_cycles = events.last().map_or(0, |e| e.cycle);
    let hazards = check_data(params, generations)?;
    let sched = Schedule {
        params: *params,
        generations,
        events,
        switches,
        idle_slots,
        total_cycles,
        hazards,
    };
    sched.check_structure()?;
    Ok(sched)
}

/// Data dependencies between consecutive generations, assuming a Get may
/// target any cell.
fn check_data(a: &ArchParams, generations: u64) -> Result<HazardReport, ArchError> {
    let mut rep = HazardReport::default();
    let m = a.iterations();
    let exe = |g: u64, j: usize| Schedule::fetch_cycle(a, g, j) + Stage::Exe.offset();
    let write = |g: u64, j: usize| Schedule::fetch_cycle(a, g, j) + Stage::Write.offset();
    for g in 1..generations {
        for j in 0..m {
            let fetch = Schedule::fetch_cycle(a, g, j);
            if fetch < exe(g - 1, j) {
                return Err(ArchError::DataHazard { cycle: fetch, reader: j * a.p, cell: j * a.p });
            }
            if fetch < write(g - 1, j) {
                rep.forwarded_fetches += 1;
            }
            let get = fetch + Stage::Get.offset();
            if get < write(g - 1, m - 1) {
                if get < exe(g - 1, m - 1) {
                    return Err(ArchError::DataHazard { cycle: get, reader: j * a.p, cell: a.n - 1 });
                }
                rep.early_gets += 1;
            }
        }
    }
    Ok(rep)
}

/// Sequential design: one pipeline, `p = 1`.
pub fn seq_pipeline_simulate(params: &ArchParams, generations: u64) -> Result<Schedule, ArchError> {
    simulate(&ArchParams { p: 1, ..*params }, generations)
}

/// Banked design with `params.p` parallel pipelines.
pub fn dpa_simulate(params: &ArchParams, generations: u64) -> Result<Schedule, ArchError> {
    simulate(params, generations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::LATENCY;

    #[test]
    fn latency_matches_constant() {
        assert_eq!(Stage::Write.offset(), LATENCY);
    }

    #[test]
    fn single_cell() {
        let s = seq_pipeline_simulate(&ArchParams::seq(1, 1, 8), 1).unwrap();
        assert_eq!(s.total_cycles, 4);
        assert_eq!(s.events.len(), 4);
    }
}
