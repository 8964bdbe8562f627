use gca_algorithms::*;
use gca_oracles::*;
use num_complex::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn reduce_and_scan_examples() {
    assert_eq!(oracle_reduce(&[1, 1, 1, 1], ReduceOp::Sum), 4);
    assert_eq!(oracle_reduce(&[3, 1, 2, 0], ReduceOp::Max), 3);
    assert_eq!(oracle_reduce(&[5], ReduceOp::Sum), 5);
    assert_eq!(oracle_reduce(&[6, 3], ReduceOp::And), 2);
    assert_eq!(oracle_average(&[1, 2, 3, 6]), 3.0);
    assert_eq!(oracle_scan(&[1, 1, 1]), vec![1, 2, 3]);
    assert_eq!(oracle_scan(&[0, 0, 0]), vec![0, 0, 0]);
    assert_eq!(oracle_scan(&[2, -1, 4]), vec![2, 1, 5]);
}

#[test]
fn sort_and_bitonic_examples() {
    assert_eq!(oracle_sort(&[1, 3, 2]), vec![1, 2, 3]);
    assert!(oracle_is_bitonic(&[1, 3, 2]));
    assert!(oracle_is_bitonic(&[1, 2, 3, 4]));
    assert!(!oracle_is_bitonic(&[1, 3, 1, 3]));
    assert!(oracle_is_bitonic(&[7, 7, 7]));
}

#[test]
fn generated_sequences_are_bitonic() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let n = rng.random_range(1..40);
        assert!(oracle_is_bitonic(&random_bitonic(n, 20, &mut rng)));
    }
}

#[test]
fn fft_oracles_small_cases() {
    let x = [Complex::new(0.25, -1.5)];
    assert_eq!(oracle_fft_recurrence(&x, 0), x.to_vec());
    assert_eq!(oracle_dft(&x), x.to_vec());
    let one = Complex::new(1.0, 0.0);
    assert_eq!(oracle_fft_recurrence(&[one, one], 1), vec![Complex::new(2.0, 0.0), Complex::new(0.0, 0.0)]);
}

#[test]
fn fft_recurrence_equals_engine_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let x: Vec<Complex<f64>> = (0..4).map(|_| Complex::new(rng.random(), rng.random())).collect();
    let res = fft(&x).unwrap().run().unwrap();
    assert_eq!(gca_algorithms::fft::complex_values(&res.config), oracle_fft_recurrence(&x, 2));
}

#[test]
fn fft_of_bit_reversed_input_is_the_dft() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let x: Vec<Complex<f64>> = (0..16).map(|_| Complex::new(rng.random(), rng.random())).collect();
    let out = oracle_fft_recurrence(&bit_reverse(&x), 4);
    for (a, b) in out.iter().zip(oracle_dft(&x)) {
        assert!((a.re - b.re).abs() < 1e-9 && (a.im - b.im).abs() < 1e-9);
    }
}

#[test]
fn bit_reverse_indices() {
    assert_eq!(bit_reverse(&[0, 1, 2, 3, 4, 5, 6, 7]), vec![0, 4, 2, 6, 1, 5, 3, 7]);
    assert_eq!(bit_reverse(&[9]), vec![9]);
}

#[test]
fn xor_superposition() {
    let spec: Spec64 = xor2d(32, XorPointerRule::Times2, &XorInit::Cross).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a: Vec<u8> = (0..32 * 32).map(|_| rng.random_range(0..2)).collect();
    let b: Vec<u8> = (0..32 * 32).map(|_| rng.random_range(0..2)).collect();
    assert_eq!(oracle_xor_linear_check(&spec, &a, &b, 16), Ok(true));
    let z = vec![0u8; 32 * 32];
    assert_eq!(oracle_xor_linear_check(&spec, &z, &z, 16), Ok(true));
    let plain: Spec64 = xor2d(9, XorPointerRule::PlainDataDep { a: 2, b: 1 }, &XorInit::Cross).unwrap();
    assert!(matches!(oracle_xor_linear_check(&plain, &z[..81], &z[..81], 4), Err(OracleError::DataDependent(_))));
    assert!(matches!(oracle_xor_linear_check(&spec, &z[..5], &z[..5], 4), Err(OracleError::Length { .. })));
}

#[test]
fn fire_time_windows() {
    assert_eq!(oracle_fire_time(FiringCase::Wave { n: 4 }), 5..=5);
    assert_eq!(oracle_fire_time(FiringCase::Ring { len: 3 }), 4..=4);
    assert_eq!(oracle_fire_time(FiringCase::JumpV1 { n: 8 }), 4..=4);
    assert_eq!(oracle_fire_time(FiringCase::JumpV2 { n: 9 }), 6..=10);
}

proptest! {
    #[test]
    fn scan_last_is_reduce(v in prop::collection::vec(-1000i64..1000, 1..50)) {
        prop_assert_eq!(*oracle_scan(&v).last().unwrap(), oracle_reduce(&v, ReduceOp::Sum));
    }

    #[test]
    fn sorted_is_bitonic(v in prop::collection::vec(-50i64..50, 1..30)) {
        prop_assert!(oracle_is_bitonic(&oracle_sort(&v)));
    }
}
