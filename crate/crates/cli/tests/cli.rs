use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gca_cli::render::{grid_to_text, parse_text_grid, pgm, text_grid};
use gca_cli::*;
use gca_core::*;
use proptest::prelude::*;

fn gca(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gca"))
        .args(args)
        .current_dir(dir)
        .env_remove(OUT_DIR_ENV)
        .output()
        .expect("binary runs")
}

fn scratch(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("gca-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exit_codes() {
    let d = scratch("exit");
    assert_eq!(gca(&["list"], &d).status.code(), Some(0));
    assert_eq!(gca(&["frobnicate"], &d).status.code(), Some(1));
    assert_eq!(gca(&["run", "--alg", "nosuch"], &d).status.code(), Some(1));
    assert_eq!(gca(&["run", "--alg", "horn", "--n", "7"], &d).status.code(), Some(2));
    assert_eq!(gca(&["run", "--alg", "max", "--mode", "async:random"], &d).status.code(), Some(2));
    assert_eq!(gca(&["run", "--alg", "max-random"], &d).status.code(), Some(2));
    assert_eq!(gca(&["run", "--alg", "max-random", "--seed", "3"], &d).status.code(), Some(0));
    assert_eq!(gca(&["run", "--alg", "max", "--mode", "async:random", "--seed", "3"], &d).status.code(), Some(0));
    assert_eq!(gca(&["verify", "nosuch"], &d).status.code(), Some(1));
    assert_eq!(gca(&["run", "--alg", "max", "--config", "missing.cfg"], &d).status.code(), Some(2));
}

#[test]
fn output_directory_precedence() {
    let d = scratch("outdir");
    let from_env = d.join("env");
    let o = Command::new(env!("CARGO_BIN_EXE_gca"))
        .args(["run", "--alg", "reduce-sum"])
        .current_dir(&d)
        .env(OUT_DIR_ENV, &from_env)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(from_env.join("reduce-sum.txt").exists());

    let flag = d.join("flag");
    let o = Command::new(env!("CARGO_BIN_EXE_gca"))
        .args(["run", "--alg", "reduce-sum", "--out"])
        .arg(&flag)
        .current_dir(&d)
        .env(OUT_DIR_ENV, &from_env)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(flag.join("reduce-sum.txt").exists());

    std::fs::write(d.join("run.cfg"), "# file settings\nalgorithm=max\nn=5\nout=cfgdir\n").unwrap();
    let o = gca(&["run", "--config", "run.cfg", "--n", "6"], &d);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("n=6"));
    assert!(d.join("cfgdir/max.txt").exists());
}

#[test]
fn fixed_point_summary() {
    let d = scratch("fixed");
    let o = gca(&["run", "--alg", "reduce-sum", "--stop", "fixed-point", "--format", "none"], &d);
    assert!(stdout(&o).contains("halted: fixed point, t=3"));
}

#[test]
fn trace_files() {
    let d = scratch("trace");
    let o = gca(&["run", "--alg", "horn", "--trace", "states,edges"], &d);
    assert!(o.status.success());
    let states = std::fs::read_to_string(d.join("horn.states.csv")).unwrap();
    assert!(states.lines().skip(1).all(|l| !l.split(',').nth(2).unwrap().starts_with('p')));
    assert!(d.join("horn.edges.csv").exists());
}

#[test]
fn render_pgm_zero_torus() {
    let d = scratch("pgm");
    let o = gca(&["run", "--alg", "xor2d-r1", "--n", "4", "--init", "zero", "--steps", "0"], &d);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = gca(&["render", "xor2d-r1.json", "--format", "pgm", "--out", "z.pgm"], &d);
    assert!(o.status.success());
    let bytes = std::fs::read(d.join("z.pgm")).unwrap();
    let header = b"P5\n4 4\n255\n";
    assert!(bytes.starts_with(header));
    assert_eq!(&bytes[header.len()..], &[255u8; 16][..]);
}

#[test]
fn tiled_pgm_doubles_each_side() {
    let img = pgm(65, 65, &vec![0.0; 65 * 65], true);
    assert!(img.starts_with(b"P5\n130 130\n255\n"));
    assert_eq!(img.len(), b"P5\n130 130\n255\n".len() + 130 * 130);
}

#[test]
fn text_render_round_trip() {
    let spec = gca_algorithms::xor2d::<f64>(9, gca_algorithms::XorPointerRule::Const1, &gca_algorithms::XorInit::Cross)
        .unwrap();
    let cfg = spec.run_steps(3).unwrap().config;
    let text = text_grid(&cfg);
    let again = grid_to_text(&parse_text_grid(&text).unwrap());
    assert_eq!(again, text);
    assert_eq!(grid_to_text(&parse_text_grid(&again).unwrap()), again);
}

#[test]
fn runs_are_deterministic() {
    let d = scratch("det");
    let args = ["run", "--alg", "max", "--mode", "async:random", "--seed", "9", "--format", "text"];
    let a = gca(&args, &d);
    let first = std::fs::read(d.join("max.txt")).unwrap();
    let b = gca(&args, &d);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(first, std::fs::read(d.join("max.txt")).unwrap());
}

#[test]
fn arch_reports_cycles() {
    let d = scratch("arch");
    let o = gca(&["arch", "--seq", "--n", "8", "--k", "1", "--alg", "reduce-sum"], &d);
    let s = stdout(&o);
    assert!(o.status.success());
    assert!(s.contains("engine-equal: yes"), "{s}");
    assert!(s.contains("cycles: 29"), "{s}");
    let o = gca(&["arch", "--capacity", "--n", "256", "--k", "2"], &d);
    assert!(stdout(&o).contains("36864"));
}

#[test]
fn verify_targets() {
    let d = scratch("verify");
    let o = gca(&["verify", "horn"], &d);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = gca(&["verify", "all"], &d);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

fn config_strategy() -> impl Strategy<Value = RunConfig> {
    (
        prop::sample::select(vec!["max", "horn", "xor2d-r3", "firing-rings"]),
        prop::option::of(2usize..100),
        prop::sample::select(vec!["sync", "parallel", "async:asc", "async:desc", "async:random:5"]),
        prop::sample::select(vec!["expected", "fixed-point", "steps:7"]),
        prop::option::of(any::<u64>()),
        prop::option::of(prop::collection::vec(-50i64..50, 1..6)),
        prop::option::of(-9i64..9),
        any::<bool>(),
    )
        .prop_map(|(alg, n, mode, stop, seed, data, a, tile2)| {
            let mut c = RunConfig { algorithm: alg.into(), n, seed, data, a, tile2, ..RunConfig::default() };
            c.mode = mode.parse().unwrap();
            c.stop = stop.parse().unwrap();
            c
        })
}

proptest! {
    #[test]
    fn config_text_round_trip(cfg in config_strategy()) {
        let text = cfg.to_text();
        let back = RunConfig::parse_text(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn pgm_size_matches_grid(w in 1usize..20, h in 1usize..20, tile2 in any::<bool>()) {
        let img = pgm(w, h, &vec![1.0; w * h], tile2);
        let f = if tile2 { 2 } else { 1 };
        let header = format!("P5\n{} {}\n255\n", w * f, h * f);
        prop_assert!(img.starts_with(header.as_bytes()));
        prop_assert_eq!(img.len(), header.len() + w * h * f * f);
        prop_assert!(img[header.len()..].iter().all(|&b| b == 0));
    }
}

#[test]
fn snapshot_json_round_trips_through_render() {
    let d = scratch("json");
    gca(&["run", "--alg", "xor2d-r2", "--n", "6", "--steps", "2"], &d);
    let text = std::fs::read_to_string(d.join("xor2d-r2.json")).unwrap();
    let (cfg, variant) = gca_core::snapshot::from_json::<f64>(&text).unwrap();
    assert_eq!(variant, Variant::General);
    assert_eq!(cfg.time, 2);
    let o = gca(&["render", "xor2d-r2.json", "--format", "text", "--out", "g.txt"], &d);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(d.join("g.txt")).unwrap(), text_grid(&cfg));
}
