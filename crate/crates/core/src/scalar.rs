//! Floating point scalar abstraction used by real and complex cell data.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// A floating point type usable as the real component of cell data.
///
/// Equality of scalars inside cell states is always bitwise, so the trait
/// exposes a canonical bit pattern widened to 64 bits.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Short name used in snapshots and diagnostics.
    const NAME: &'static str;

    fn to_bits_u64(self) -> u64;

    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index representable as float")
    }

    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).unwrap_or_else(Self::nan)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    const NAME: &'static str = "f32";

    fn to_bits_u64(self) -> u64 {
        u64::from(self.to_bits())
    }
}

impl Scalar for f64 {
    const NAME: &'static str = "f64";

    fn to_bits_u64(self) -> u64 {
        self.to_bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_distinguish_signed_zero() {
        assert_ne!(0.0f64.to_bits_u64(), (-0.0f64).to_bits_u64());
        assert_ne!(0.0f32.to_bits_u64(), (-0.0f32).to_bits_u64());
    }

    #[test]
    fn index_conversion() {
        assert_eq!(f32::from_index(7), 7.0);
        assert_eq!(f64::from_index(1 << 20), 1048576.0);
    }
}
