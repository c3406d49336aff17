use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating scalar for the numerical kernels: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    fn from_f64c(v: f64) -> Self {
        Self::from_f64(v).expect("f64 conversion")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Complex number over a [`Scalar`].
pub type C<S> = Complex<S>;

pub fn c<S: Scalar>(re: f64, im: f64) -> C<S> {
    Complex::new(S::from_f64c(re), S::from_f64c(im))
}
