//! Ring and torus cell arrangements.

use std::fmt;

use crate::address::{wrap_index, Address};

/// Shape of the cell array. Every access wraps around.
///
/// A torus is linearized row-major: `index = y * w + x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Topology {
    Ring { n: usize },
    Torus { w: usize, h: usize },
}

impl Topology {
    pub fn ring(n: usize) -> Self {
        Topology::Ring { n }
    }

    pub fn torus(w: usize, h: usize) -> Self {
        Topology::Torus { w, h }
    }

    pub fn square(n: usize) -> Self {
        Topology::Torus { w: n, h: n }
    }

    pub fn len(&self) -> usize {
        match *self {
            Topology::Ring { n } => n,
            Topology::Torus { w, h } => w * h,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Width and height; a ring is `n x 1`.
    pub fn extents(&self) -> (usize, usize) {
        match *self {
            Topology::Ring { n } => (n, 1),
            Topology::Torus { w, h } => (w, h),
        }
    }

    pub fn is_2d(&self) -> bool {
        matches!(self, Topology::Torus { .. })
    }

    pub fn coords(&self, i: usize) -> (usize, usize) {
        let (w, _) = self.extents();
        (i % w, i / w)
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        let (w, _) = self.extents();
        y * w + x
    }

    /// Absolute index of the cell that `addr` names when read from cell `i`.
    pub fn resolve(&self, i: usize, addr: Address) -> usize {
        let n = self.len();
        let (w, h) = self.extents();
        match addr {
            Address::Rel(v) => wrap_index(i as i64 + v, n),
            Address::Abs(v) => v % n,
            Address::Rel2 { dx, dy } => {
                let (x, y) = self.coords(i);
                let x = wrap_index(x as i64 + dx, w);
                let y = wrap_index(y as i64 + dy, h);
                self.index(x, y)
            }
            Address::Abs2 { x, y } => self.index(x % w, y % h),
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Topology::Ring { n } => write!(f, "ring({n})"),
            Topology::Torus { w, h } => write!(f, "torus({w}x{h})"),
        }
    }
}
