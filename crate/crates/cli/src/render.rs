//! Text and PGM renderings of configurations.

use std::fmt::Write as _;

use gca_algorithms::render_out_c;
use gca_core::trace::{address_cell, data_cell};
use gca_core::{Configuration, DataValue, Scalar, Variant};

use crate::error::CliError;

fn is_binary<S: Scalar>(c: &Configuration<S>) -> bool {
    c.states.iter().all(|s| matches!(s.data, DataValue::Int(0 | 1)))
}

/// Binary grid, `" #"` for 1 and `"  "` for 0, one line per row.
pub fn text_grid<S: Scalar>(c: &Configuration<S>) -> String {
    let (w, h) = c.topology.extents();
    let mut out = String::with_capacity(h * (2 * w + 1));
    for y in 0..h {
        for x in 0..w {
            out.push_str(match c.states[y * w + x].data {
                DataValue::Int(0) => "  ",
                DataValue::Int(1) => " #",
                _ => " ?",
            });
        }
        out.push('\n');
    }
    out
}

/// Inverse of [`text_grid`].
pub fn parse_text_grid(text: &str) -> Result<Vec<Vec<u8>>, CliError> {
    text.lines()
        .map(|line| {
            let b = line.as_bytes();
            if b.len() % 2 != 0 {
                return Err(CliError::Precondition("grid line of odd length".into()));
            }
            b.chunks(2)
                .map(|c| match c {
                    b"  " => Ok(0),
                    b" #" => Ok(1),
                    _ => Err(CliError::Precondition(format!("not a grid cell: {:?}", String::from_utf8_lossy(c)))),
                })
                .collect()
        })
        .collect()
}

pub fn grid_to_text(grid: &[Vec<u8>]) -> String {
    let mut out = String::new();
    for row in grid {
        for &v in row {
            out.push_str(if v == 0 { "  " } else { " #" });
        }
        out.push('\n');
    }
    out
}

/// One line per generation: data values, then pointers.
pub fn text_rows<S: Scalar>(snapshots: &[Configuration<S>]) -> String {
    let mut out = String::new();
    for c in snapshots {
        write!(out, "t={:4} |", c.time).unwrap();
        for s in &c.states {
            write!(out, " {}", data_cell(&s.data)).unwrap();
        }
        if c.states.iter().any(|s| !s.pointers.is_empty()) {
            out.push_str(" |");
            for s in &c.states {
                let p: Vec<String> = s.pointers.iter().map(address_cell).collect();
                write!(out, " {}", p.join("/")).unwrap();
            }
        }
        out.push('\n');
    }
    out
}

/// Text rendering of a whole run, chosen by algorithm and topology.
pub fn render_run<S: Scalar>(name: &str, variant: Variant, snapshots: &[Configuration<S>]) -> String {
    if name.starts_with("xor1d") {
        return render_out_c(snapshots, variant);
    }
    if snapshots.first().is_some_and(|c| c.topology.is_2d()) {
        let mut out = String::new();
        for c in snapshots {
            writeln!(out, "t={}", c.time).unwrap();
            if is_binary(c) {
                out.push_str(&text_grid(c));
            } else {
                out.push_str(&text_rows(std::slice::from_ref(c)));
            }
        }
        return out;
    }
    text_rows(snapshots)
}

/// Gray levels: binary data maps 0 to white and 1 to black; anything else
/// maps its range linearly onto 255 (minimum) down to 0 (maximum).
fn gray_levels(values: &[f64]) -> Vec<u8> {
    let binary = values.iter().all(|&v| v == 0.0 || v == 1.0);
    if binary {
        return values.iter().map(|&v| if v == 0.0 { 255 } else { 0 }).collect();
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = if hi > lo { hi - lo } else { 1.0 };
    values.iter().map(|&v| (255.0 - 255.0 * (v - lo) / span).round() as u8).collect()
}

/// Binary P5 image of `w x h` values in row-major order.
pub fn pgm(w: usize, h: usize, values: &[f64], tile2: bool) -> Vec<u8> {
    let px = gray_levels(values);
    let (tw, th) = if tile2 { (2 * w, 2 * h) } else { (w, h) };
    let mut out = format!("P5\n{tw} {th}\n255\n").into_bytes();
    for y in 0..th {
        for x in 0..tw {
            out.push(px[(y % h) * w + x % w]);
        }
    }
    out
}

/// One configuration as an image, one pixel per cell.
pub fn config_pgm<S: Scalar>(c: &Configuration<S>, tile2: bool) -> Vec<u8> {
    let (w, h) = c.topology.extents();
    let v: Vec<f64> = c.states.iter().map(|s| s.data.to_f64()).collect();
    pgm(w, h, &v, tile2)
}

/// Space-time image of a one-dimensional run: one row per generation.
pub fn spacetime_pgm<S: Scalar>(snapshots: &[Configuration<S>]) -> Vec<u8> {
    let w = snapshots.first().map_or(0, |c| c.len());
    let v: Vec<f64> = snapshots.iter().flat_map(|c| c.states.iter().map(|s| s.data.to_f64())).collect();
    pgm(w, snapshots.len(), &v, false)
}
