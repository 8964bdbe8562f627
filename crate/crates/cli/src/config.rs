//! Run configuration and its `key=value` text form.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use gca_core::{AsyncOrder, Mode, Variant};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ModeSpec {
    #[default]
    Sync,
    Parallel,
    Ascending,
    Descending,
    /// Seeded random order; the seed may come from `seed=` instead.
    Random(Option<u64>),
}

impl ModeSpec {
    pub fn resolve(&self, seed: Option<u64>) -> Result<Mode, CliError> {
        Ok(match *self {
            ModeSpec::Sync => Mode::Sync,
            ModeSpec::Parallel => Mode::Parallel,
            ModeSpec::Ascending => Mode::Async(AsyncOrder::Ascending),
            ModeSpec::Descending => Mode::Async(AsyncOrder::Descending),
            ModeSpec::Random(s) => {
                let s = s.or(seed).ok_or_else(|| {
                    CliError::Precondition("random async order needs an explicit --seed".into())
                })?;
                Mode::Async(AsyncOrder::SeededRandom(s))
            }
        })
    }
}

impl fmt::Display for ModeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeSpec::Sync => write!(f, "sync"),
            ModeSpec::Parallel => write!(f, "parallel"),
            ModeSpec::Ascending => write!(f, "async:asc"),
            ModeSpec::Descending => write!(f, "async:desc"),
            ModeSpec::Random(None) => write!(f, "async:random"),
            ModeSpec::Random(Some(s)) => write!(f, "async:random:{s}"),
        }
    }
}

impl FromStr for ModeSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || CliError::Usage(format!("bad mode {s:?}; use sync, parallel or async:asc|desc|random[:seed]"));
        match parts.as_slice() {
            ["sync"] => Ok(ModeSpec::Sync),
            ["parallel"] => Ok(ModeSpec::Parallel),
            ["async"] | ["async", "asc"] => Ok(ModeSpec::Ascending),
            ["async", "desc"] => Ok(ModeSpec::Descending),
            ["async", "random"] => Ok(ModeSpec::Random(None)),
            ["async", "random", seed] => Ok(ModeSpec::Random(Some(seed.parse().map_err(|_| bad())?))),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StopSpec {
    /// The algorithm's own halting condition.
    #[default]
    Expected,
    Steps(u64),
    FixedPoint,
}

impl fmt::Display for StopSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StopSpec::Expected => write!(f, "expected"),
            StopSpec::Steps(t) => write!(f, "steps:{t}"),
            StopSpec::FixedPoint => write!(f, "fixed-point"),
        }
    }
}

impl FromStr for StopSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "expected" => Ok(StopSpec::Expected),
            "fixed-point" => Ok(StopSpec::FixedPoint),
            _ => s
                .strip_prefix("steps:")
                .and_then(|t| t.parse().ok())
                .map(StopSpec::Steps)
                .ok_or_else(|| CliError::Usage(format!("bad stop rule {s:?}; use expected, fixed-point or steps:N"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Pgm,
    Csv,
    None,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Pgm => "pgm",
            Format::Csv => "csv",
            Format::None => "none",
        })
    }
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "pgm" => Ok(Format::Pgm),
            "csv" => Ok(Format::Csv),
            "none" => Ok(Format::None),
            _ => Err(CliError::Usage(format!("bad format {s:?}; use text, pgm, csv or none"))),
        }
    }
}

/// What per-generation traces to write.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct TraceToggles {
    pub states: bool,
    pub pointers: bool,
    pub edges: bool,
}

impl fmt::Display for TraceToggles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let on: Vec<&str> = [(self.states, "states"), (self.pointers, "pointers"), (self.edges, "edges")]
            .into_iter()
            .filter(|(b, _)| *b)
            .map(|(_, s)| s)
            .collect();
        f.write_str(if on.is_empty() { "none" } else { "" })?;
        f.write_str(&on.join(","))
    }
}

impl FromStr for TraceToggles {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut t = TraceToggles::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty() && *p != "none") {
            match part {
                "states" => t.states = true,
                "pointers" => t.pointers = true,
                "edges" => t.edges = true,
                _ => return Err(CliError::Usage(format!("unknown trace {part:?}"))),
            }
        }
        Ok(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RunConfig {
    pub algorithm: String,
    /// Cell count, or the side of a square torus.
    pub n: Option<usize>,
    pub variant: Option<Variant>,
    pub mode: ModeSpec,
    pub stop: StopSpec,
    pub format: Format,
    pub trace: TraceToggles,
    pub out_dir: Option<PathBuf>,
    pub seed: Option<u64>,
    pub data: Option<Vec<i64>>,
    pub general: Option<usize>,
    pub introduce_at: Option<u64>,
    /// Ring layout with rings separated by `;`.
    pub layout: Option<String>,
    pub init: Option<String>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub tile2: bool,
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| CliError::Usage(format!("{key}: cannot parse {v:?}")))
}

pub fn parse_list(v: &str) -> Result<Vec<i64>, CliError> {
    v.split(',').map(|x| parse_num("data", x.trim())).collect()
}

impl RunConfig {
    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, v: &str) -> Result<(), CliError> {
        match key {
            "algorithm" | "alg" => self.algorithm = v.to_string(),
            "n" => self.n = Some(parse_num(key, v)?),
            "variant" => {
                self.variant = Some(Variant::parse(v).ok_or_else(|| CliError::Usage(format!("unknown variant {v:?}")))?)
            }
            "mode" => self.mode = v.parse()?,
            "stop" => self.stop = v.parse()?,
            "steps" => self.stop = StopSpec::Steps(parse_num(key, v)?),
            "format" => self.format = v.parse()?,
            "trace" => self.trace = v.parse()?,
            "out" => self.out_dir = Some(PathBuf::from(v)),
            "seed" => self.seed = Some(parse_num(key, v)?),
            "data" => self.data = Some(parse_list(v)?),
            "general" => self.general = Some(parse_num(key, v)?),
            "introduce_at" => self.introduce_at = Some(parse_num(key, v)?),
            "layout" => self.layout = Some(v.to_string()),
            "init" => self.init = Some(v.to_string()),
            "A" => self.a = Some(parse_num(key, v)?),
            "B" => self.b = Some(parse_num(key, v)?),
            "tile2" => self.tile2 = parse_num(key, v)?,
            _ => return Err(CliError::Usage(format!("unknown config key {key:?}"))),
        }
        Ok(())
    }

    /// Reads `key=value` lines; lines starting with `#` are comments.
    pub fn parse_text(text: &str) -> Result<RunConfig, CliError> {
        let mut c = RunConfig::default();
        c.merge_text(text)?;
        Ok(c)
    }

    pub fn merge_text(&mut self, text: &str) -> Result<(), CliError> {
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", no + 1)))?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("algorithm={}\n", self.algorithm);
        let mut kv = |k: &str, v: String| out.push_str(&format!("{k}={v}\n"));
        if let Some(n) = self.n {
            kv("n", n.to_string());
        }
        if let Some(v) = self.variant {
            kv("variant", v.to_string());
        }
        kv("mode", self.mode.to_string());
        kv("stop", self.stop.to_string());
        kv("format", self.format.to_string());
        kv("trace", self.trace.to_string());
        if let Some(o) = &self.out_dir {
            kv("out", o.display().to_string());
        }
        if let Some(s) = self.seed {
            kv("seed", s.to_string());
        }
        if let Some(d) = &self.data {
            kv("data", d.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
        }
        if let Some(g) = self.general {
            kv("general", g.to_string());
        }
        if let Some(t) = self.introduce_at {
            kv("introduce_at", t.to_string());
        }
        if let Some(l) = &self.layout {
            kv("layout", l.clone());
        }
        if let Some(i) = &self.init {
            kv("init", i.clone());
        }
        if let Some(a) = self.a {
            kv("A", a.to_string());
        }
        if let Some(b) = self.b {
            kv("B", b.to_string());
        }
        kv("tile2", self.tile2.to_string());
        out
    }
}
