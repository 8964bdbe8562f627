use gca_algorithms::xor2d::{checker_offsets, time_base};
use gca_algorithms::*;
use gca_core::*;
use num_complex::Complex;
use proptest::prelude::*;

fn final_ints(spec: &Spec64) -> (Vec<i64>, u64) {
    let res = spec.run().unwrap();
    (res.config.ints(), res.config.time)
}

#[test]
fn max_examples() {
    assert_eq!(final_ints(&max(&[3, 1, 2, 0], MaxPointer::Const).unwrap()), (vec![3; 4], 3));
    assert_eq!(final_ints(&max(&[5, 5], MaxPointer::Const).unwrap()), (vec![5; 2], 1));
    let data: Vec<i64> = (0..8).collect();
    assert_eq!(final_ints(&max(&data, MaxPointer::Const).unwrap()), (vec![7; 8], 7));
}

#[test]
fn max_pointer_variants_reach_the_maximum() {
    let data = [4, 9, 1, 0, 7, 2, 3];
    for rule in [MaxPointer::Inc, MaxPointer::Half, MaxPointer::Random(11)] {
        let spec: Spec64 = max(&data, rule).unwrap();
        let res = spec.run().unwrap();
        assert_eq!(res.config.ints(), vec![9; 7], "{rule:?}");
    }
    // doubling on an odd ring never settles on the self loop
    let spec: Spec64 = max(&data, MaxPointer::Double).unwrap();
    assert_eq!(spec.run().unwrap().config.ints(), vec![9; 7]);
}

#[test]
fn max_inc_may_point_at_itself() {
    let spec: Spec64 = max(&[1, 0, 0], MaxPointer::Inc).unwrap();
    let res = spec.run_steps(2).unwrap();
    assert_eq!(res.trace.snapshots[2].states[0].p(), 0);
}

#[test]
fn reduce_examples() {
    assert_eq!(final_ints(&reduce(&[1; 8], ReduceOp::Sum).unwrap()), (vec![8; 8], 3));
    assert_eq!(final_ints(&reduce(&[1, 2, 3, 4], ReduceOp::Max).unwrap()), (vec![4; 4], 2));
    assert_eq!(reduce::<f64>(&[1], ReduceOp::Sum).unwrap_err(), AlgError::TooSmall { n: 1, min: 2 });
    assert_eq!(reduce::<f64>(&[1; 6], ReduceOp::Sum).unwrap_err(), AlgError::NotPowerOfTwo { n: 6 });
}

#[test]
fn reduce_reaches_fixed_point() {
    let spec: Spec64 = reduce(&[1; 8], ReduceOp::Sum).unwrap();
    let (out, _) = run(&spec.initial, &spec.rules, Stop::FixedPoint).unwrap();
    assert_eq!(out.ints(), vec![8; 8]);
    assert_eq!(out.offsets(), vec![0; 8]);
    assert_eq!(out.time, 3);
}

#[test]
fn horn_examples() {
    assert_eq!(final_ints(&horn(&[1; 8]).unwrap()).0, vec![1, 2, 3, 4, 5, 6, 7, 8]);
    assert_eq!(final_ints(&horn(&[3, 4]).unwrap()), (vec![3, 7], 1));
    assert_eq!(final_ints(&horn(&[1, 0, 1, 0, 1, 0, 1, 0]).unwrap()).0, vec![1, 1, 2, 2, 3, 3, 4, 4]);
}

#[test]
fn horn_fan_in_at_most_two() {
    let spec: Spec64 = horn(&[1; 64]).unwrap();
    let opts = RunOptions { record_edges: true, ..RunOptions::default() };
    let res = spec.run_with(Stop::Steps(6), &opts).unwrap();
    assert!(res.trace.max_fan_in() <= 2);
}

#[test]
fn bitonic_examples() {
    for build in [bitonic::<f64>, bitonic_basic::<f64>] {
        assert_eq!(final_ints(&build(&[1, 3, 5, 7, 8, 6, 4, 2]).unwrap()), ((1..=8).collect(), 3));
        assert_eq!(final_ints(&build(&[2, 1]).unwrap()), (vec![1, 2], 1));
        assert_eq!(final_ints(&build(&[1, 2, 3, 4, 5, 6, 7, 8]).unwrap()).0, (1..=8).collect::<Vec<_>>());
    }
}

#[test]
fn bitonic_partners_are_disjoint_pairs() {
    let spec: Spec64 = bitonic(&[5, 6, 7, 8, 4, 3, 2, 1, 0, 9, 10, 11, 12, 13, 14, 15]).unwrap();
    let opts = RunOptions { record_edges: true, ..RunOptions::default() };
    let res = spec.run_with(Stop::Steps(4), &opts).unwrap();
    for (_, edges) in &res.trace.edges {
        let mut partner = vec![usize::MAX; 16];
        for &(r, t) in edges {
            partner[r] = t;
        }
        for i in 0..16 {
            assert_ne!(partner[i], i);
            assert_eq!(partner[partner[i]], i);
        }
    }
}

fn cross(n: usize) -> Vec<u8> {
    gca_algorithms::xor2d::init_pattern(n, &XorInit::Cross).unwrap()
}

#[test]
fn xor_zero_stays_zero() {
    let rules = [
        XorPointerRule::Const1,
        XorPointerRule::PlusDelta(3),
        XorPointerRule::Times3,
        XorPointerRule::TimeAlt('E'),
        XorPointerRule::Checkerboard('G'),
        XorPointerRule::PlainDataDep { a: 9, b: 1 },
    ];
    for rule in rules {
        let spec: Spec64 = xor2d(9, rule, &XorInit::Zero).unwrap();
        let res = spec.run_steps(6).unwrap();
        assert!(res.trace.snapshots.iter().all(|c| c.ints().iter().all(|&v| v == 0)), "{rule:?}");
    }
}

#[test]
fn cross_is_centered() {
    let c = cross(5);
    let ones: Vec<usize> = c.iter().enumerate().filter(|(_, &v)| v == 1).map(|(i, _)| i).collect();
    assert_eq!(ones, vec![7, 11, 12, 13, 17]);
}

#[test]
fn time_dependent_bases() {
    assert_eq!(time_base('B', 0).0, 1);
    assert_eq!(time_base('B', 1).0, 2);
    assert_eq!(time_base('E', 0), (1, 3));
    assert_eq!(time_base('E', 1), (3, 1));
    // the stored base follows the formula in a run
    let spec: Spec64 = xor2d(8, XorPointerRule::TimeAlt('D'), &XorInit::Cross).unwrap();
    let res = spec.run_steps(4).unwrap();
    let bases: Vec<(i64, i64)> =
        res.trace.snapshots.iter().map(|c| c.states[0].pointers[0].rel2().unwrap()).collect();
    assert_eq!(bases, vec![(1, 1), (4, 4), (1, 1), (4, 4), (1, 1)]);
}

#[test]
fn checkerboard_offsets() {
    let rel = |v: Vec<Address>| v.iter().map(|a| a.rel2().unwrap()).collect::<Vec<_>>();
    assert_eq!(rel(checker_offsets(2, 2, 1)), vec![(0, -1), (1, 0), (0, 1), (-1, 0)]);
    assert_eq!(rel(checker_offsets(2, 1, 1)), vec![(1, -1), (1, 1), (-1, 1), (-1, -1)]);
}

#[test]
fn plain_addresses_follow_state() {
    let spec: Spec64 = xor2d(65, XorPointerRule::PlainDataDep { a: 9, b: 3 }, &XorInit::Cross).unwrap();
    let c = &spec.initial;
    let center = c.topology.index(32, 32);
    let t = access_targets(c, center, &spec.rules);
    assert_eq!(t[0], c.topology.index(32, 29));
    let t = access_targets(c, 0, &spec.rules);
    assert_eq!(t[1], c.topology.index(9, 0));
}

#[test]
fn xor1d_variants_agree() {
    let b: Spec64 = xor1d_basic(31).unwrap();
    let g: Spec64 = xor1d_general(31).unwrap();
    let rb = b.run_steps(40).unwrap();
    let rg = g.run_steps(40).unwrap();
    for (x, y) in rb.trace.snapshots.iter().zip(&rg.trace.snapshots) {
        assert_eq!(x.ints(), y.ints());
    }
    assert!(xor1d_basic::<f64>(30).is_err());
}

#[test]
fn xor1d_listing_shape() {
    let spec: Spec64 = xor1d_basic(31).unwrap();
    let res = spec.run().unwrap();
    let text = render_out_c(&res.trace.snapshots, Variant::Basic);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[4].ends_with("p1=  16 p2= -16"));
    assert_eq!(lines[0].find('#'), Some(31));
}

#[test]
fn fft_two_point() {
    let one = Complex::new(1.0, 0.0);
    let spec = fft::<f64>(&[one, one]).unwrap();
    let res = spec.run().unwrap();
    let v = gca_algorithms::fft::complex_values(&res.config);
    assert_eq!(v, vec![Complex::new(2.0, 0.0), Complex::new(0.0, 0.0)]);
}

#[test]
fn fft_zero_and_partner_pattern() {
    let spec = fft::<f32>(&[Complex::new(0.0, 0.0); 8]).unwrap();
    let opts = RunOptions { record_edges: true, ..RunOptions::default() };
    let res = spec.run_with(Stop::Steps(3), &opts).unwrap();
    assert!(gca_algorithms::fft::complex_values(&res.config).iter().all(|c| c.re == 0.0 && c.im == 0.0));
    // cell 2 reads 3, then 0, then 6
    let reads: Vec<usize> = res.trace.edges.iter().map(|(_, e)| e[2].1).collect();
    assert_eq!(reads, vec![3, 0, 6]);
}

proptest! {
    #[test]
    fn reduce_sum_matches_fold(k in 1u32..8, seed in any::<u64>()) {
        let n = 1usize << k;
        let data: Vec<i64> = (0..n).map(|i| ((seed >> (i % 60)) as i64 ^ i as i64) % 1000).collect();
        let spec: Spec64 = reduce(&data, ReduceOp::Sum).unwrap();
        let (out, t) = final_ints(&spec);
        prop_assert_eq!(t, u64::from(k));
        prop_assert!(out.iter().all(|&v| v == data.iter().sum::<i64>()));
    }
}
