//! Two-dimensional XOR automata with a common address base.
//!
//! Every cell reads four neighbors at offsets derived from one stored base
//! and sets `d' = (dN + dE + dS + dW) mod 2`; its own value is not included.

use gca_core::{Address, CellState, Configuration, DataValue, RuleContext, RuleSet, Scalar, Topology};

use crate::spec::{require_min, AlgError, AlgorithmSpec, ExpectedHalt};

/// How the common address base evolves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XorPointerRule {
    /// Rule 1: `p = 1` forever.
    Const1,
    /// Rules 2 to 6: `p' = (p + delta) mod n`, re-seeded to 1 when that is 0.
    PlusDelta(i64),
    /// Rule 7: `p' = 2p mod n`.
    Times2,
    /// Rule 8: `p' = 3p mod n`.
    Times3,
    /// Rule 8 with re-seeding: `p' = 3p mod n`, or 1 when that is 0.
    Times3Reseed,
    /// Time-dependent rules B, C, D (`p = 1 + c (t mod 2)`, c = 1, 2, 3) and E.
    TimeAlt(char),
    /// Space-dependent rules F, G, H with `p = 1, 2, 3`.
    Checkerboard(char),
    /// Plain model: `p = A` for state 0, `p = B` for state 1.
    PlainDataDep { a: i64, b: i64 },
}

impl XorPointerRule {
    /// Pointer rule number `r` from the numbered list (1 to 8).
    pub fn numbered(r: u32) -> Option<XorPointerRule> {
        match r {
            1 => Some(XorPointerRule::Const1),
            2..=6 => Some(XorPointerRule::PlusDelta(i64::from(r) - 1)),
            7 => Some(XorPointerRule::Times2),
            8 => Some(XorPointerRule::Times3),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            XorPointerRule::Const1 => "xor2d-r1".into(),
            XorPointerRule::PlusDelta(d) => format!("xor2d-r{}", d + 1),
            XorPointerRule::Times2 => "xor2d-r7".into(),
            XorPointerRule::Times3 => "xor2d-r8".into(),
            XorPointerRule::Times3Reseed => "xor2d-r8s".into(),
            XorPointerRule::TimeAlt(c) | XorPointerRule::Checkerboard(c) => format!("xor2d-{c}"),
            XorPointerRule::PlainDataDep { .. } => "xor2d-plain".into(),
        }
    }

    pub fn is_data_independent(&self) -> bool {
        !matches!(self, XorPointerRule::PlainDataDep { .. })
    }
}

/// Initial data pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XorInit {
    /// Five ones: the center cell `(n/2, n/2)` and its four orthogonal neighbors.
    Cross,
    Zero,
    /// Row-major 0/1 values.
    Custom(Vec<u8>),
}

pub fn init_pattern(n: usize, init: &XorInit) -> Result<Vec<u8>, AlgError> {
    let mut d = vec![0u8; n * n];
    match init {
        XorInit::Zero => {}
        XorInit::Cross => {
            let c = (n / 2) as i64;
            for (dx, dy) in [(0, 0), (0, -1), (1, 0), (0, 1), (-1, 0)] {
                let x = (c + dx).rem_euclid(n as i64) as usize;
                let y = (c + dy).rem_euclid(n as i64) as usize;
                d[y * n + x] = 1;
            }
        }
        XorInit::Custom(v) => {
            if v.len() != n * n {
                return Err(AlgError::Invalid(format!(
                    "custom pattern has {} cells, torus has {}",
                    v.len(),
                    n * n
                )));
            }
            if v.iter().any(|&b| b > 1) {
                return Err(AlgError::Invalid("custom pattern must be binary".into()));
            }
            d.copy_from_slice(v);
        }
    }
    Ok(d)
}

/// Orthogonal offsets N, E, S, W for horizontal distance `px`, vertical `py`.
pub fn orthogonal(px: i64, py: i64) -> Vec<Address> {
    vec![
        Address::Rel2 { dx: 0, dy: -py },
        Address::Rel2 { dx: px, dy: 0 },
        Address::Rel2 { dx: 0, dy: py },
        Address::Rel2 { dx: -px, dy: 0 },
    ]
}

/// Diagonal offsets used by black cells, in the slots N, E, S, W.
pub fn diagonal(px: i64, py: i64) -> Vec<Address> {
    vec![
        Address::Rel2 { dx: px, dy: -py },
        Address::Rel2 { dx: px, dy: py },
        Address::Rel2 { dx: -px, dy: py },
        Address::Rel2 { dx: -px, dy: -py },
    ]
}

fn xor4<S: Scalar>(c: &RuleContext<'_, S>) -> DataValue<S> {
    let s: i64 = c.neighbors.iter().map(|q| q.data.int()).sum();
    DataValue::Int(s.rem_euclid(2))
}

/// Base value of the time-dependent rules at generation `t`.
pub fn time_base(rule: char, t: u64) -> (i64, i64) {
    let odd = (t % 2) as i64;
    match rule {
        'B' => (1 + odd, 1 + odd),
        'C' => (1 + 2 * odd, 1 + 2 * odd),
        'D' => (1 + 3 * odd, 1 + 3 * odd),
        'E' => (1 + 2 * odd, 1 + 2 * (1 - odd)),
        _ => panic!("unknown time-dependent rule {rule}"),
    }
}

pub fn checker_base(rule: char) -> Option<i64> {
    match rule {
        'F' => Some(1),
        'G' => Some(2),
        'H' => Some(3),
        _ => None,
    }
}

/// Offsets used by a cell at `(x, y)` under a checkerboard rule with base `p`.
pub fn checker_offsets(x: usize, y: usize, p: i64) -> Vec<Address> {
    if (x + y) % 2 == 0 {
        orthogonal(p, p)
    } else {
        diagonal(p, p)
    }
}

/// Next common base for the numbered rules.
pub fn next_base(rule: XorPointerRule, p: i64, n: i64) -> i64 {
    let reseed = |v: i64| if v == 0 { 1 } else { v };
    match rule {
        XorPointerRule::Const1 => p,
        XorPointerRule::PlusDelta(d) => reseed((p + d).rem_euclid(n)),
        XorPointerRule::Times2 => (2 * p).rem_euclid(n),
        XorPointerRule::Times3 => (3 * p).rem_euclid(n),
        XorPointerRule::Times3Reseed => reseed((3 * p).rem_euclid(n)),
        _ => unreachable!("not a numbered rule"),
    }
}

/// Builds the XOR automaton on an `n x n` torus.
pub fn xor2d<S: Scalar>(n: usize, rule: XorPointerRule, init: &XorInit) -> Result<AlgorithmSpec<S>, AlgError> {
    require_min(n, 3)?;
    let bits = init_pattern(n, init)?;
    let topo = Topology::square(n);
    let name = rule.name();
    let (rules, base): (RuleSet<S>, Vec<Address>) = match rule {
        XorPointerRule::TimeAlt(c) => {
            if !matches!(c, 'B' | 'C' | 'D' | 'E') {
                return Err(AlgError::Invalid(format!("unknown time-dependent rule {c}")));
            }
            let (px, py) = time_base(c, 0);
            let rs = RuleSet::general(
                &name,
                1,
                4,
                xor4,
                move |ctx| {
                    let (px, py) = time_base(c, ctx.time + 1);
                    vec![Address::Rel2 { dx: px, dy: py }]
                },
                |a| {
                    let (px, py) = a.state.pointers[0].rel2().expect("2D base");
                    orthogonal(px, py)
                },
            );
            (rs, vec![Address::Rel2 { dx: px, dy: py }])
        }
        XorPointerRule::Checkerboard(c) => {
            let p = checker_base(c)
                .ok_or_else(|| AlgError::Invalid(format!("unknown space-dependent rule {c}")))?;
            let rs = RuleSet::general(&name, 1, 4, xor4, |ctx| ctx.state.pointers.clone(), |a| {
                let (x, y) = a.coords();
                checker_offsets(x, y, a.state.p())
            });
            (rs, vec![Address::Rel(p)])
        }
        XorPointerRule::PlainDataDep { a, b } => {
            let rs = RuleSet::plain(&name, 4, xor4, |_, q, params, _| {
                let p = if q.data.int() == 0 { params.req("A") } else { params.req("B") };
                orthogonal(p, p)
            })
            .with_param("A", a)
            .with_param("B", b);
            (rs, Vec::new())
        }
        numbered => {
            let rs = RuleSet::general(
                &name,
                1,
                4,
                xor4,
                move |ctx| vec![Address::Rel(next_base(numbered, ctx.state.p(), ctx.params.req("n")))],
                |a| {
                    let p = a.state.p();
                    orthogonal(p, p)
                },
            );
            (rs, vec![Address::Rel(1)])
        }
    };
    let rules = rules.with_param("n", n as i64);
    let initial = Configuration::from_fn(topo, |i| CellState::new(DataValue::Int(i64::from(bits[i])), base.clone()));
    let mut spec = AlgorithmSpec::new(
        &name,
        rules,
        initial,
        ExpectedHalt::predicate("all cells zero", |c: &Configuration<S>| {
            c.states.iter().all(|s| s.data.as_int() == Some(0))
        }),
        "oracle_xor_linear_check",
    );
    spec.data_independent_pointers = rule.is_data_independent();
    Ok(spec)
}

/// Renders a binary torus as text rows, `#` for 1 and `.` for 0.
pub fn render_grid<S: Scalar>(cfg: &Configuration<S>) -> String {
    let (w, h) = cfg.topology.extents();
    let mut out = String::with_capacity((w + 1) * h);
    for y in 0..h {
        for x in 0..w {
            let v = cfg.states[y * w + x].data.as_int().unwrap_or(0);
            out.push(if v == 0 { '.' } else { '#' });
        }
        out.push('\n');
    }
    out
}
