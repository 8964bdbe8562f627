use gca_algorithms::*;
use gca_core::Variant;
use gca_firing::*;
use gca_oracles::*;

fn assert_same(actual: &str, golden: &GoldenTrace) {
    let diff = compare_golden(actual, golden);
    assert!(diff.is_empty(), "{}\n{diff}", golden.algorithm);
}

#[test]
fn xor1d_listings_are_byte_exact() {
    let basic = bundled::xor1d_basic();
    let snaps = xor1d_basic::<f64>(31).unwrap().run().unwrap().trace.snapshots;
    assert_eq!(render_out_c(&snaps, Variant::Basic), basic.text());
    let general = bundled::xor1d_general();
    let snaps = xor1d_general::<f64>(31).unwrap().run().unwrap().trace.snapshots;
    assert_same(&render_out_c(&snaps, Variant::General), &general);
    assert!(general.rows[5].text.ends_with("p1eff=  16 p2eff= -16"));
    assert!(general.rows.iter().all(|r| r.source == SourceTag::ListingOutput));
}

#[test]
fn jump_v1_table() {
    let g = bundled::jump_v1_n8();
    let res = firing_jump_v1::<f64>(8, g.int_param("general") as usize).unwrap().run().unwrap();
    assert_same(&render_pointer_data(&res.trace.snapshots), &g);
}

fn v2_rows(g: &GoldenTrace) -> String {
    let n = g.int_param("n") as usize;
    let spec = firing_jump_v2::<f64>(n, g.int_param("general") as usize, g.int_param("introduce_at") as u64).unwrap();
    let first = g.int_param("first_t") as usize;
    let res = spec.run_steps((first + g.rows.len() - 1) as u64).unwrap();
    render_pointer_data(&res.trace.snapshots[first..])
}

#[test]
fn jump_v2_traces() {
    for g in [bundled::jump_v2_n9_a(), bundled::jump_v2_n9_b()] {
        assert_same(&v2_rows(&g), &g);
    }
}

#[test]
fn diff_locates_a_flipped_cell() {
    let g = bundled::xor1d_basic();
    let mut text = g.text().into_bytes();
    let row = 3;
    let cell = 10;
    let at = g.rows[..row].iter().map(|r| r.text.len() + 1).sum::<usize>() + 2 * cell + 1;
    text[at] = if text[at] == b'#' { b' ' } else { b'#' };
    let d = compare_golden(std::str::from_utf8(&text).unwrap(), &g);
    let m = d.first.unwrap();
    assert_eq!((m.row, m.col / 2), (row, cell));
    assert!(compare_golden(&g.text(), &g).is_empty());
}

#[test]
fn missing_rows_are_reported() {
    let g = bundled::jump_v1_n8();
    let short: String = g.rows[..2].iter().map(|r| format!("{}\n", r.text)).collect();
    let m = compare_golden(&short, &g).first.unwrap();
    assert_eq!(m.row, 2);
    assert!(m.actual.is_none());
}

#[test]
fn golden_header_errors() {
    assert!(GoldenTrace::parse("algorithm: x\n").is_err());
    assert!(GoldenTrace::parse("algorithm: x\nsource: nowhere\n---\nrow\n").is_err());
    let g = GoldenTrace::parse("algorithm: x\nparams: a=1 b=two\nsource: derived-oracle\n---\nr1\nr2\n").unwrap();
    assert_eq!(g.param("b"), Some("two"));
    assert_eq!(g.rows.len(), 2);
    assert_eq!(bundled::all().len(), 5);
}
