//! Data part of a cell state.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_complex::Complex;

use crate::scalar::Scalar;

/// Firing-squad symbols and their integer codes.
pub mod symbol {
    pub const S: u8 = 0;
    pub const G: u8 = 1;
    pub const A: u8 = 2;
    pub const F: u8 = 3;

    /// Display letter; bits above the low two are algorithm-private markers.
    pub fn name(code: u8) -> char {
        match code & 3 {
            S => 'S',
            G => 'G',
            A => 'A',
            _ => 'F',
        }
    }
}

/// Which arm of [`DataValue`] a value uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DataKind {
    Int,
    Real,
    Complex,
    Symbol,
}

impl DataKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DataKind::Int => "int",
            DataKind::Real => "real",
            DataKind::Complex => "complex",
            DataKind::Symbol => "symbol",
        }
    }
}

/// The data state `d` of a cell.
///
/// Equality compares floating point payloads bit for bit, so `NaN == NaN`
/// when the bit patterns agree and `0.0 != -0.0`.
#[derive(Clone, Copy, Debug)]
pub enum DataValue<S: Scalar> {
    Int(i64),
    Real(S),
    Complex(Complex<S>),
    Symbol(u8),
}

impl<S: Scalar> DataValue<S> {
    pub fn kind(&self) -> DataKind {
        match self {
            DataValue::Int(_) => DataKind::Int,
            DataValue::Real(_) => DataKind::Real,
            DataValue::Complex(_) => DataKind::Complex,
            DataValue::Symbol(_) => DataKind::Symbol,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match *self {
            DataValue::Int(v) => Some(v),
            DataValue::Symbol(v) => Some(i64::from(v)),
            _ => None,
        }
    }

    pub fn as_real(&self) -> Option<S> {
        match *self {
            DataValue::Real(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_complex(&self) -> Option<Complex<S>> {
        match *self {
            DataValue::Complex(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_symbol(&self) -> Option<u8> {
        match *self {
            DataValue::Symbol(v) => Some(v),
            _ => None,
        }
    }

    /// Integer payload; panics on real or complex data.
    pub fn int(&self) -> i64 {
        self.as_int()
            .unwrap_or_else(|| panic!("expected integer data, found {self:?}"))
    }

    /// Lossy view as a real number, used for rendering and tolerance checks.
    pub fn to_f64(&self) -> f64 {
        match *self {
            DataValue::Int(v) => v as f64,
            DataValue::Real(v) => v.to_f64_lossy(),
            DataValue::Complex(v) => v.norm().to_f64_lossy(),
            DataValue::Symbol(v) => f64::from(v),
        }
    }

    fn bits(&self) -> (u8, u64, u64) {
        match *self {
            DataValue::Int(v) => (0, v as u64, 0),
            DataValue::Real(v) => (1, v.to_bits_u64(), 0),
            DataValue::Complex(v) => (2, v.re.to_bits_u64(), v.im.to_bits_u64()),
            DataValue::Symbol(v) => (3, u64::from(v), 0),
        }
    }
}

impl<S: Scalar> PartialEq for DataValue<S> {
    fn eq(&self, other: &Self) -> bool {
        self.bits() == other.bits()
    }
}

impl<S: Scalar> Eq for DataValue<S> {}

impl<S: Scalar> Hash for DataValue<S> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits().hash(state);
    }
}

impl<S: Scalar> Default for DataValue<S> {
    fn default() -> Self {
        DataValue::Int(0)
    }
}

impl<S: Scalar> From<i64> for DataValue<S> {
    fn from(v: i64) -> Self {
        DataValue::Int(v)
    }
}

impl<S: Scalar> fmt::Display for DataValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DataValue::Int(v) => write!(f, "{v}"),
            DataValue::Real(v) => write!(f, "{v}"),
            DataValue::Complex(v) => write!(f, "{}{:+}i", v.re, v.im),
            DataValue::Symbol(v) => write!(f, "{}", symbol::name(v)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_is_bitwise() {
        let nan = f64::NAN;
        assert_eq!(DataValue::<f64>::Real(nan), DataValue::Real(nan));
        assert_ne!(DataValue::<f64>::Real(0.0), DataValue::Real(-0.0));
        assert_ne!(DataValue::<f64>::Int(1), DataValue::Symbol(1));
        let c = Complex::new(1.0f32, -2.0);
        assert_eq!(DataValue::Complex(c), DataValue::Complex(c));
    }

    #[test]
    fn symbol_codes() {
        assert_eq!((symbol::S, symbol::G, symbol::A, symbol::F), (0, 1, 2, 3));
        assert_eq!(DataValue::<f64>::Symbol(symbol::F).to_string(), "F");
    }
}
