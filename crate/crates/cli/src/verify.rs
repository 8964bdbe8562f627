//! Oracle and golden-trace checks per catalog entry.

use gca_algorithms::fft::complex_values;
use gca_algorithms::{render_out_c, Spec64};
use gca_core::Variant;
use gca_firing::fire_times;
use gca_oracles::*;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{self, Entry};
use crate::commands::reduce_op_of;
use crate::config::RunConfig;
use crate::error::CliError;

pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

pub struct CheckResult {
    pub algorithm: String,
    pub check: String,
    pub outcome: Outcome,
}

fn check(algorithm: &str, check: &str, outcome: Outcome) -> CheckResult {
    CheckResult { algorithm: algorithm.into(), check: check.into(), outcome }
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

fn golden_outcome(actual: &str, g: &GoldenTrace) -> Outcome {
    let d = compare_golden(actual, g);
    expect(d.is_empty(), || d.to_string())
}

fn data_of(spec: &Spec64) -> Vec<i64> {
    spec.initial.ints()
}

fn verify_entry(e: &Entry) -> Result<Vec<CheckResult>, CliError> {
    let name = e.name;
    let cfg = RunConfig { algorithm: name.into(), seed: (name == "max-random").then_some(1), ..RunConfig::default() };
    let spec = e.build(&cfg)?;
    let mut out = Vec::new();
    if let Some(op) = reduce_op_of(name) {
        let res = spec.run()?;
        let want = oracle_reduce(&data_of(&spec), op);
        let got = res.config.ints();
        out.push(check(name, "oracle_reduce", expect(got.iter().all(|&v| v == want), || format!("got {got:?}, want all {want}"))));
    } else if name == "horn" {
        let res = spec.run()?;
        let want = oracle_scan(&data_of(&spec));
        let got = res.config.ints();
        out.push(check(name, "oracle_scan", expect(got == want, || format!("got {got:?}, want {want:?}"))));
    } else if name.starts_with("bitonic") {
        let input = data_of(&spec);
        let res = spec.run()?;
        let want = oracle_sort(&input);
        let got = res.config.ints();
        out.push(check(name, "oracle_is_bitonic(input)", expect(oracle_is_bitonic(&input), || format!("{input:?}"))));
        out.push(check(name, "oracle_sort", expect(got == want, || format!("got {got:?}, want {want:?}"))));
    } else if name.starts_with("xor2d") {
        if !spec.data_independent_pointers {
            out.push(check(name, "oracle_xor_linear_check", Outcome::Skip("data-dependent pointers".into())));
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let len = spec.n();
            let a: Vec<u8> = (0..len).map(|_| rng.random_range(0..2)).collect();
            let b: Vec<u8> = (0..len).map(|_| rng.random_range(0..2)).collect();
            let ok = oracle_xor_linear_check(&spec, &a, &b, 16).map_err(|e| CliError::Verify(e.to_string()))?;
            out.push(check(name, "oracle_xor_linear_check", expect(ok, || "superposition violated".into())));
        }
    } else if name.starts_with("xor1d") {
        let (g, v) = if name == "xor1d-basic" {
            (bundled::xor1d_basic(), Variant::Basic)
        } else {
            (bundled::xor1d_general(), Variant::General)
        };
        let res = spec.run()?;
        out.push(check(name, "golden OUT_c", golden_outcome(&render_out_c(&res.trace.snapshots, v), &g)));
    } else if name == "fft" {
        let input = complex_values(&spec.initial);
        let k = spec.n().trailing_zeros();
        let got = complex_values(&spec.run()?.config);
        let rec = oracle_fft_recurrence(&input, k);
        out.push(check(name, "oracle_fft_recurrence", expect(got == rec, || "recurrence differs".into())));
        let on_reversed = complex_values(&gca_algorithms::fft(&bit_reverse(&input))?.run()?.config);
        let dft = oracle_dft(&input);
        let close = |a: &Complex<f64>, b: &Complex<f64>| (a.re - b.re).abs() <= 1e-9 && (a.im - b.im).abs() <= 1e-9;
        out.push(check(
            name,
            "oracle_dft(bit-reversed input)",
            expect(on_reversed.iter().zip(&dft).all(|(a, b)| close(a, b)), || "DFT mismatch".into()),
        ));
    } else if name == "firing-rings" {
        let layout: gca_firing::RingLayout =
            "2,4,6*\n1*,3,5,7".parse().map_err(|e| CliError::Verify(format!("{e}")))?;
        let res = spec.run_steps(20)?;
        for (k, r) in layout.rings.iter().enumerate() {
            let first = fire_times(&res.trace.snapshots, |c| gca_firing::rings::ring_fires(c, r)).first().copied();
            let want = oracle_fire_time(FiringCase::Ring { len: r.cells.len() });
            out.push(check(
                name,
                &format!("oracle_fire_time(ring {k})"),
                expect(first.is_some_and(|t| want.contains(&t)), || format!("first firing {first:?}, expected {want:?}")),
            ));
        }
    } else if name.starts_with("firing") {
        let n = spec.n();
        let res = spec.run()?;
        let t = res.config.time;
        let window = match name {
            "firing-wave" => oracle_fire_time(FiringCase::Wave { n }),
            "firing-jump-v1" => oracle_fire_time(FiringCase::JumpV1 { n }),
            _ => {
                let w = oracle_fire_time(FiringCase::JumpV2 { n });
                let at = cfg.introduce_at.unwrap_or(1);
                w.start() + at..=w.end() + at
            }
        };
        out.push(check(name, "oracle_fire_time", expect(window.contains(&t), || format!("fired at {t}, expected {window:?}"))));
        let golden = match name {
            "firing-jump-v1" => vec![bundled::jump_v1_n8()],
            "firing-jump-v2" => vec![bundled::jump_v2_n9_a(), bundled::jump_v2_n9_b()],
            _ => vec![],
        };
        for g in golden {
            let rows = golden_rows(&g)?;
            out.push(check(name, &format!("golden {}", g.param("introduce_at").map_or("table".into(), |t| format!("trace t0={t}"))), golden_outcome(&rows, &g)));
        }
    }
    Ok(out)
}

/// Renders the run a pointer/data golden file describes.
pub fn golden_rows(g: &GoldenTrace) -> Result<String, CliError> {
    let mut cfg = RunConfig { algorithm: g.algorithm.clone(), ..RunConfig::default() };
    cfg.n = Some(g.int_param("n") as usize);
    cfg.general = Some(g.int_param("general") as usize);
    if let Some(t) = g.param("introduce_at") {
        cfg.introduce_at = t.parse().ok();
    }
    let first = g.int_param("first_t") as usize;
    let spec = catalog::build(&cfg)?;
    let res = spec.run_steps((first + g.rows.len() - 1) as u64)?;
    Ok(render_pointer_data(&res.trace.snapshots[first..]))
}

/// Checks one algorithm or `all`; returns the report table.
pub fn cmd_verify(target: &str) -> Result<String, CliError> {
    let entries: Vec<Entry> = if target == "all" {
        catalog::catalog()
    } else {
        vec![catalog::lookup(target)?]
    };
    let mut results = Vec::new();
    for e in &entries {
        results.extend(verify_entry(e)?);
    }
    let mut table = String::new();
    let mut first_failure = None;
    for r in &results {
        let (tag, note) = match &r.outcome {
            Outcome::Pass => ("PASS", String::new()),
            Outcome::Skip(why) => ("SKIP", format!(" ({why})")),
            Outcome::Fail(why) => {
                first_failure.get_or_insert_with(|| format!("{} {}: {why}", r.algorithm, r.check));
                ("FAIL", String::new())
            }
        };
        table.push_str(&format!("{:<16} {:<32} {tag}{note}\n", r.algorithm, r.check));
    }
    match first_failure {
        None => Ok(table),
        Some(diff) => Err(CliError::Verify(format!("{table}\n{diff}"))),
    }
}
