//! Golden traces and their comparison.

use std::fmt::{self, Write as _};

use gca_core::{Configuration, Scalar};

/// Where a golden row comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceTag {
    /// Output printed by a reference program listing.
    ListingOutput,
    /// A printed table of states.
    PrintedTable,
    /// Computed by an oracle in this crate.
    DerivedOracle,
}

impl SourceTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            SourceTag::ListingOutput => "listing-output",
            SourceTag::PrintedTable => "printed-table",
            SourceTag::DerivedOracle => "derived-oracle",
        }
    }

    pub fn parse(s: &str) -> Option<SourceTag> {
        [SourceTag::ListingOutput, SourceTag::PrintedTable, SourceTag::DerivedOracle]
            .into_iter()
            .find(|t| t.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub text: String,
    pub source: SourceTag,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTrace {
    pub algorithm: String,
    pub params: Vec<(String, String)>,
    pub rows: Vec<GoldenRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenParseError(pub String);

impl fmt::Display for GoldenParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "golden file: {}", self.0)
    }
}

impl std::error::Error for GoldenParseError {}

impl GoldenTrace {
    /// Parses `key: value` header lines up to `---`, then one row per line.
    pub fn parse(text: &str) -> Result<GoldenTrace, GoldenParseError> {
        let (head, body) = text
            .split_once("\n---\n")
            .ok_or_else(|| GoldenParseError("missing --- separator".into()))?;
        let mut algorithm = None;
        let mut params = Vec::new();
        let mut source = None;
        for line in head.lines() {
            let (k, v) = line
                .split_once(':')
                .ok_or_else(|| GoldenParseError(format!("bad header line {line:?}")))?;
            let v = v.trim();
            match k.trim() {
                "algorithm" => algorithm = Some(v.to_string()),
                "params" => {
                    for kv in v.split_whitespace() {
                        let (a, b) = kv
                            .split_once('=')
                            .ok_or_else(|| GoldenParseError(format!("bad parameter {kv:?}")))?;
                        params.push((a.to_string(), b.to_string()));
                    }
                }
                "source" => {
                    source = Some(SourceTag::parse(v).ok_or_else(|| GoldenParseError(format!("unknown source {v:?}")))?)
                }
                other => return Err(GoldenParseError(format!("unknown header key {other:?}"))),
            }
        }
        let algorithm = algorithm.ok_or_else(|| GoldenParseError("no algorithm".into()))?;
        let source = source.ok_or_else(|| GoldenParseError("no source".into()))?;
        let rows = body.lines().map(|l| GoldenRow { text: l.to_string(), source }).collect();
        Ok(GoldenTrace { algorithm, params, rows })
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Integer parameter; panics when the file lacks it.
    pub fn int_param(&self, key: &str) -> i64 {
        self.param(key)
            .and_then(|v| v.parse().ok())
            .unwrap_or_else(|| panic!("golden {} lacks integer parameter {key}", self.algorithm))
    }

    /// The rows joined with newlines, as a program would print them.
    pub fn text(&self) -> String {
        self.rows.iter().map(|r| format!("{}\n", r.text)).collect()
    }
}

/// First difference between an actual rendering and a golden trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    /// Byte column within the row.
    pub col: usize,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffReport {
    pub first: Option<Mismatch>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.first.is_none()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first {
            None => write!(f, "no differences"),
            Some(m) => {
                writeln!(f, "first difference at row {}, column {}", m.row, m.col)?;
                writeln!(f, "  expected: {}", m.expected.as_deref().unwrap_or("<missing>"))?;
                write!(f, "  actual:   {}", m.actual.as_deref().unwrap_or("<missing>"))
            }
        }
    }
}

/// Byte-level row comparison of `actual` text against `golden`.
pub fn compare_golden(actual: &str, golden: &GoldenTrace) -> DiffReport {
    let got: Vec<&str> = actual.lines().collect();
    let rows = got.len().max(golden.rows.len());
    for r in 0..rows {
        let e = golden.rows.get(r).map(|g| g.text.as_str());
        let a = got.get(r).copied();
        if e == a {
            continue;
        }
        let col = match (e, a) {
            (Some(e), Some(a)) => e
                .bytes()
                .zip(a.bytes())
                .position(|(x, y)| x != y)
                .unwrap_or(e.len().min(a.len())),
            _ => 0,
        };
        return DiffReport {
            first: Some(Mismatch { row: r, col, expected: e.map(String::from), actual: a.map(String::from) }),
        };
    }
    DiffReport::default()
}

/// One row per snapshot: every pointer right-aligned in two columns, a
/// bar, then every data value likewise.
pub fn render_pointer_data<S: Scalar>(snapshots: &[Configuration<S>]) -> String {
    let mut out = String::new();
    for c in snapshots {
        for s in &c.states {
            write!(out, "{:>2}", s.p()).unwrap();
        }
        out.push_str(" |");
        for s in &c.states {
            write!(out, "{:>2}", s.data.int()).unwrap();
        }
        out.push('\n');
    }
    out
}

macro_rules! golden_file {
    ($name:ident, $file:literal) => {
        pub fn $name() -> GoldenTrace {
            GoldenTrace::parse(include_str!(concat!("../golden/v1/", $file))).expect("bundled golden file parses")
        }
    };
}

/// Golden traces shipped with the crate.
pub mod bundled {
    use super::GoldenTrace;

    golden_file!(xor1d_basic, "xor1d-basic.golden");
    golden_file!(xor1d_general, "xor1d-general.golden");
    golden_file!(jump_v1_n8, "jump-v1-n8.golden");
    golden_file!(jump_v2_n9_a, "jump-v2-n9-a.golden");
    golden_file!(jump_v2_n9_b, "jump-v2-n9-b.golden");

    pub fn all() -> Vec<GoldenTrace> {
        vec![xor1d_basic(), xor1d_general(), jump_v1_n8(), jump_v2_n9_a(), jump_v2_n9_b()]
    }
}
