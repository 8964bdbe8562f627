use gca_core::symbol::F;
use gca_core::*;
use gca_firing::jump::{generalless, v2_cycle_length, v2_next_pointer, FIRE, FIRE_V1};
use gca_firing::rings::{example_layout, ring_fires};
use gca_firing::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn any_fire(c: &Config64) -> bool {
    c.states.iter().any(|s| s.data.as_symbol().map(|v| v & 3) == Some(F))
}

#[test]
fn wave_fires_at_n_plus_one_everywhere() {
    for n in 2..=32 {
        for g in 0..n {
            let spec = firing_wave::<f64>(n, g).unwrap();
            let res = spec.run_steps(2 * n as u64 + 3).unwrap();
            let snaps = &res.trace.snapshots;
            assert_eq!(fire_times(snaps, wave::all_fire), vec![n as u64 + 1], "n={n} g={g}");
            // never a partial firing
            assert_eq!(fire_times(snaps, any_fire), vec![n as u64 + 1]);
            // reset by 1b/2b: back to soldiers pointing left
            let after = &snaps[n + 2];
            assert!(after.states.iter().all(|s| s.data == DataValue::Symbol(0) && s.p() == -1));
        }
    }
}

#[test]
fn wave_examples() {
    for (n, g, t) in [(4, 0, 5), (4, 2, 5), (2, 1, 3)] {
        let res = firing_wave::<f64>(n, g).unwrap().run().unwrap();
        assert_eq!(res.config.time, t);
    }
}

#[test]
fn two_ring_example() {
    let layout = example_layout();
    let spec = firing_rings::<f64>(9, &layout).unwrap();
    let ptrs = layout.initial_pointers(9);
    assert_eq!(ptrs[0], vec![(-5, 2), (-2, 2), (-2, 5)]);
    assert_eq!(ptrs[1], vec![(-3, 2), (-2, 2), (-2, 2), (-2, 3)]);
    let res = spec.run_steps(17).unwrap();
    let snaps = &res.trace.snapshots;
    assert_eq!(fire_times(snaps, |c| ring_fires(c, &layout.rings[0])), vec![4, 7, 10, 13, 16]);
    assert_eq!(fire_times(snaps, |c| ring_fires(c, &layout.rings[1])), vec![5, 9, 13, 17]);
    let halted = spec.run().unwrap();
    assert_eq!(halted.config.time, 13);
}

#[test]
fn ring_of_two_fires_at_three() {
    let layout: RingLayout = "1*,4".parse().unwrap();
    let res = firing_rings::<f64>(6, &layout).unwrap().run_steps(3).unwrap();
    assert_eq!(fire_times(&res.trace.snapshots, |c| ring_fires(c, &layout.rings[0])), vec![3]);
}

#[test]
fn layout_parsing_and_validation() {
    let l: RingLayout = "2,4,6*\n1*,3,5,7\n".parse().unwrap();
    assert_eq!(l, example_layout());
    assert_eq!(l.to_string(), "2,4,6*\n1*,3,5,7\n");
    let overlap: RingLayout = "1*,2\n2*,3".parse().unwrap();
    assert!(overlap.validate(5).is_err());
    assert!(firing_rings::<f64>(5, &overlap).is_err());
    let short: RingLayout = "3*".parse().unwrap();
    assert!(short.validate(5).is_err());
    assert!("1,2".parse::<RingLayout>().is_err());
    assert!("1*,x".parse::<RingLayout>().is_err());
}

fn random_layout(rng: &mut ChaCha8Rng) -> (usize, RingLayout) {
    let rings = rng.random_range(1..=5usize);
    let lens: Vec<usize> = (0..rings).map(|_| rng.random_range(2..=12)).collect();
    let used: usize = lens.iter().sum();
    let n = rng.random_range(used.max(3)..=64.max(used));
    let mut cells: Vec<usize> = (0..n).collect();
    cells.shuffle(rng);
    let mut layout = RingLayout::default();
    let mut at = 0;
    for len in lens {
        let ring: Vec<usize> = cells[at..at + len].to_vec();
        at += len;
        let general = ring[rng.random_range(0..len)];
        layout.rings.push(Ring { cells: ring, general });
    }
    (n, layout)
}

#[test]
fn random_layouts_fire_at_length_plus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let (n, layout) = random_layout(&mut rng);
        let spec = firing_rings::<f64>(n, &layout).unwrap();
        let res = spec.run_steps(14).unwrap();
        let snaps = &res.trace.snapshots;
        for r in &layout.rings {
            let first = fire_times(snaps, |c| ring_fires(c, r)).first().copied();
            assert_eq!(first, Some(r.cells.len() as u64 + 1), "{layout}");
            // a ring either fires completely or not at all
            for c in snaps {
                let firing = r.cells.iter().filter(|&&i| c.states[i].data.as_symbol().unwrap() & 3 == F).count();
                assert!(firing == 0 || firing == r.cells.len());
            }
        }
        let members: Vec<usize> = layout.rings.iter().flat_map(|r| r.cells.clone()).collect();
        for i in (0..n).filter(|i| !members.contains(i)) {
            assert!(snaps.iter().all(|c| c.states[i] == snaps[0].states[i]));
        }
    }
}

#[test]
fn rings_do_not_interact() {
    let both = example_layout();
    let only_a = RingLayout { rings: vec![both.rings[0].clone()] };
    let ra = firing_rings::<f64>(9, &both).unwrap().run_steps(20).unwrap();
    let rb = firing_rings::<f64>(9, &only_a).unwrap().run_steps(20).unwrap();
    for (x, y) in ra.trace.snapshots.iter().zip(&rb.trace.snapshots) {
        for &i in &both.rings[0].cells {
            assert_eq!(x.states[i], y.states[i]);
        }
    }
}

#[test]
fn jump_v1_fires_after_log_n_plus_one() {
    for k in 1..=8u32 {
        let n = 1usize << k;
        for g in [0, n / 3, n - 1] {
            let res = firing_jump_v1::<f64>(n, g).unwrap().run().unwrap();
            assert_eq!(res.config.time, u64::from(k) + 1, "n={n} g={g}");
            let partial = res.trace.snapshots.iter().filter(|c| c.ints().contains(&FIRE_V1)).count();
            assert_eq!(partial, 1);
        }
    }
    assert!(firing_jump_v1::<f64>(6, 0).is_err());
}

#[test]
fn jump_v2_pointer_cycles() {
    let cycle = |n: usize| {
        let mut p = 0;
        let mut seen = vec![];
        for _ in 0..v2_cycle_length(n) {
            p = v2_next_pointer(p, n);
            seen.push(p);
        }
        seen
    };
    assert_eq!(cycle(8), vec![1, 2, 4, 0]);
    assert_eq!(cycle(9), vec![1, 2, 4, -1, 0]);
    assert_eq!(cycle(2), vec![1, 0]);
    for n in 2..=64 {
        assert_eq!(*cycle(n).last().unwrap(), 0, "n={n}");
    }
}

#[test]
fn jump_v2_fire_window() {
    for n in 2..=64usize {
        let big_n = n.next_power_of_two() as u64;
        let lg = u64::from(big_n.trailing_zeros());
        let period = v2_cycle_length(n);
        for phase in 0..period {
            let at = 1 + phase;
            for g in [0, n / 2, n - 1] {
                let res = firing_jump_v2::<f64>(n, g, at).unwrap().run().unwrap();
                let dt = res.config.time - at;
                assert!((2 + lg..=2 + 2 * lg).contains(&dt), "n={n} phase={phase} dt={dt}");
                let fired = res.trace.snapshots.iter().filter(|c| c.ints().contains(&FIRE)).count();
                assert_eq!(fired, 1);
            }
        }
    }
}

#[test]
fn jump_v2_generalless_orbit() {
    for n in 2..=64usize {
        let period = v2_cycle_length(n);
        let spec = firing_jump_v2::<f64>(n, 0, u64::MAX).unwrap();
        let res = spec.run_steps(3 * period).unwrap();
        let s = &res.trace.snapshots;
        for t in 0..(2 * period) as usize {
            assert_eq!(s[t].states, s[t + period as usize].states);
        }
        for q in 1..period as usize {
            assert_ne!(s[0].states, s[q].states, "n={n}: period shorter than {period}");
        }
    }
    assert_eq!(generalless::<f64>(3, 0).offsets(), vec![0, 0, 0]);
}
