//! Deterministic sample-point generation for the verification sweeps.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::chart::PointZ;
use crate::scalar::{Scalar, C};

/// `count` points with each coordinate uniform on the complex disk of the
/// given radius. Seed the generator once per sweep for reproducible runs.
pub fn sample_points<S: Scalar>(
    rng: &mut ChaCha8Rng,
    dim: usize,
    count: usize,
    radius: f64,
) -> Vec<PointZ<S>> {
    (0..count)
        .map(|_| {
            PointZ(
                (0..dim)
                    .map(|_| {
                        let r = radius * rng.gen_range(0.0f64..1.0).sqrt();
                        let t = rng.gen_range(0.0f64..std::f64::consts::TAU);
                        C::new(S::from_f64c(r * t.cos()), S::from_f64c(r * t.sin()))
                    })
                    .collect(),
            )
        })
        .collect()
}
