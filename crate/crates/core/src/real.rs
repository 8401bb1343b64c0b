//! Scalar abstraction for the numerical core.
//!
//! Everything in this crate is written against [`Real`] so the same code runs
//! at `f32` or `f64`. The simulation harness and CLI instantiate `f64`; the
//! crate root exposes concrete aliases for the common types.

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    nalgebra::RealField + num_traits::FromPrimitive + num_traits::ToPrimitive + Copy
{
    /// Converts an `f64` constant (gains, config values, literals) into this
    /// scalar type, truncating precision for `f32`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant must be representable")
    }

    /// Lossy view of this scalar as `f64`, used by loggers and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar must convert to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::Real;

    #[test]
    fn constant_round_trip() {
        assert_eq!(f64::of(9.81), 9.81);
        assert_eq!(f32::of(0.5), 0.5f32);
        assert_eq!(1.25f64.as_f64(), 1.25);
    }
}
