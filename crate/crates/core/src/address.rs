//! Relative and absolute cell addresses.

use std::fmt;

/// An address naming a global neighbor.
///
/// Relative addresses are offsets from the reading cell, absolute addresses
/// are cell indices. Two-component forms address cells of a torus by
/// `(x, y)`; on a ring they behave like a `n x 1` torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Address {
    Rel(i64),
    Abs(usize),
    Rel2 { dx: i64, dy: i64 },
    Abs2 { x: usize, y: usize },
}

impl Address {
    pub const SELF: Address = Address::Rel(0);

    pub fn is_relative(&self) -> bool {
        matches!(self, Address::Rel(_) | Address::Rel2 { .. })
    }

    /// The scalar offset of a one-dimensional relative address.
    pub fn rel(&self) -> Option<i64> {
        match *self {
            Address::Rel(v) => Some(v),
            _ => None,
        }
    }

    pub fn rel2(&self) -> Option<(i64, i64)> {
        match *self {
            Address::Rel2 { dx, dy } => Some((dx, dy)),
            _ => None,
        }
    }

    /// Relative offset, panicking on any other kind. For rules that only ever
    /// store one-dimensional relative pointers.
    pub fn offset(&self) -> i64 {
        self.rel()
            .unwrap_or_else(|| panic!("expected a relative 1D address, found {self}"))
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Address::Rel(v) => write!(f, "{v:+}"),
            Address::Abs(v) => write!(f, "@{v}"),
            Address::Rel2 { dx, dy } => write!(f, "({dx:+},{dy:+})"),
            Address::Abs2 { x, y } => write!(f, "@({x},{y})"),
        }
    }
}

/// Maps any integer into the relative address space of an `n`-cell ring.
///
/// The window is `{-n/2, ..., (n-1)/2}` with integer division, so for even
/// `n` it is `{-n/2, ..., (n-2)/2}`. The result is congruent to `a` mod `n`.
pub fn normalize_relative(a: i64, n: usize) -> i64 {
    assert!(n >= 1, "address space needs at least one cell");
    let n = n as i64;
    let r = a.rem_euclid(n);
    if r > (n - 1) / 2 {
        r - n
    } else {
        r
    }
}

/// Mathematical modulo into `[0, n)`.
pub fn wrap_index(a: i64, n: usize) -> usize {
    a.rem_euclid(n as i64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_relative(-1, 8), -1);
        assert_eq!(normalize_relative(7, 8), -1);
        assert_eq!(normalize_relative(5, 9), -4);
    }

    #[test]
    fn even_window_is_asymmetric() {
        assert_eq!(normalize_relative(4, 8), -4);
        assert_eq!(normalize_relative(3, 8), 3);
        assert_eq!(normalize_relative(-4, 8), -4);
        assert_eq!(normalize_relative(0, 1), 0);
    }

    fn window(n: usize) -> std::ops::RangeInclusive<i64> {
        let n = n as i64;
        -(n / 2)..=(n - 1) / 2
    }

    proptest! {
        #[test]
        fn normalize_lands_in_window(a in -10_000i64..10_000, n in 1usize..200) {
            let r = normalize_relative(a, n);
            prop_assert!(window(n).contains(&r));
            prop_assert_eq!((a - r).rem_euclid(n as i64), 0);
            prop_assert_eq!(normalize_relative(r, n), r);
        }

        #[test]
        fn window_enumeration_is_unique(n in 1usize..64) {
            // every residue class has exactly one representative in the window
            let mut seen = vec![0u8; n];
            for r in window(n) {
                seen[wrap_index(r, n)] += 1;
            }
            prop_assert!(seen.iter().all(|&c| c == 1));
        }
    }
}
