//! Torsion applications: the Calabi-Yau-with-torsion balance on
//! Q(K^{⊗ℓ/I}) × S¹, the Vaisman/LCK identity with its exact Lee
//! coefficient, and the astheno-Kähler locus for products of compact
//! homogeneous Sasaki manifolds.
//!
//! Orientation note: the torus block of the complex structure acts by
//! 𝒥(ξ) = −∂σ, the convention under which the Lee form is exactly
//! −(I/(mℓ)) dσ. The fundamental form is then Ω_M = (mℓ/I) dη + dσ∧η.

use num_rational::Ratio;
use serde::Serialize;

use crate::bundles::{canonical_fraction_bundle, BundleVector, ConnectionDescriptor, SasakiDatum};
use crate::chart::{exponents_delta, exponents_scaled, BigCellChart, FdConfig, PointZ};
use crate::error::{Error, Result};
use crate::linalg::RMatrix;
use crate::parabolic::ParabolicDatum;
use crate::product_hermitian::{contact_frame_at, d_omega_witness, wedge_two_one};
use crate::rootsystem::Rational;
use crate::scalar::Scalar;

fn ratio_to_scalar<S: Scalar>(r: Rational) -> S {
    S::from_f64c(*r.numer() as f64) / S::from_f64c(*r.denom() as f64)
}

/// All derived constants of the CYT structure on Q(K^{⊗ℓ/I(X_P)}) × S¹.
#[derive(Debug, Clone, PartialEq)]
pub struct CytDatum {
    pub parabolic: ParabolicDatum,
    pub ell: i64,
    /// Complex dimension of the base flag manifold.
    pub m: usize,
    pub fano: i64,
    /// Einstein constant of ω₀: λ = I²/(ℓ²m).
    pub lambda: Rational,
    /// ω₀ = (mℓ²/I²) ρ₀ with ρ₀ the Ric-normalized Kähler-Einstein metric.
    pub omega0_scale: Rational,
    /// ψ = (ℓ/I) ρ₀ is the descent of dη.
    pub psi_scale: Rational,
    /// Lee form θ = lee_coefficient · dσ, exactly −I/(mℓ).
    pub lee_coefficient: Rational,
    pub bundle: BundleVector,
    pub eta_descriptor: ConnectionDescriptor,
}

pub fn cyt_datum(parabolic: &ParabolicDatum, ell: i64) -> Result<CytDatum> {
    if ell <= 0 {
        return Err(Error::NonPositiveCoefficient(ell));
    }
    let inv = parabolic.flag_invariants();
    let m = inv.m_theta as i64;
    let fano = inv.fano_index;
    let bundle = canonical_fraction_bundle(parabolic, ell);
    let eta_descriptor = bundle.connection_descriptor();
    Ok(CytDatum {
        parabolic: parabolic.clone(),
        ell,
        m: inv.m_theta,
        fano,
        lambda: Ratio::new(fano * fano, ell * ell * m),
        omega0_scale: Ratio::new(m * ell * ell, fano * fano),
        psi_scale: Ratio::new(ell, fano),
        lee_coefficient: -Ratio::new(fano, m * ell),
        bundle,
        eta_descriptor,
    })
}

/// Result of a CYT balance sweep: the worst relative residual of
/// Ric(ω₀) − Λ_{ω₀}(ψ)ψ and the per-sample values of Λ_{ω₀}(ψ).
#[derive(Debug, Clone)]
pub struct CytCheck<S: Scalar> {
    pub max_residual: S,
    pub lambda_values: Vec<S>,
}

impl<S: Scalar> CytCheck<S> {
    pub fn lambda_mean(&self) -> S {
        let n = S::from_f64c(self.lambda_values.len() as f64);
        self.lambda_values.iter().fold(S::zero(), |a, v| a + *v) / n
    }

    pub fn lambda_std(&self) -> S {
        let mean = self.lambda_mean();
        let n = S::from_f64c(self.lambda_values.len() as f64);
        (self
            .lambda_values
            .iter()
            .fold(S::zero(), |a, v| a + (*v - mean) * (*v - mean))
            / n)
            .sqrt()
    }
}

/// Pointwise balance with explicit scales: ω₀ = ω₀scale·ρ₀, ψ = ψscale·ρ₀.
/// Λ_{ω₀}(ψ) is computed as trace(H₀⁻¹ H_ψ) per point, never assumed
/// constant.
pub fn cyt_residual_with_scales<S: Scalar>(
    chart: &BigCellChart,
    omega0_scale: S,
    psi_scale: S,
    samples: &[PointZ<S>],
    fd: &FdConfig<S>,
) -> Result<CytCheck<S>> {
    let rho = exponents_delta::<S>(chart.parabolic());
    let omega0_exps = exponents_scaled(&rho, omega0_scale);
    let mut worst = S::zero();
    let mut lambdas = Vec::with_capacity(samples.len());
    for z in samples {
        let h_rho = chart.kahler_form_at(&rho, z).matrix;
        let h0 = h_rho.scale_re(omega0_scale);
        let h_psi = h_rho.scale_re(psi_scale);
        let ric = chart.ricci_form_at(&omega0_exps, z, fd)?.matrix;
        let lam = h0.inverse()?.matmul(&h_psi).trace().re;
        lambdas.push(lam);
        let dev = ric.sub(&h_psi.scale_re(lam));
        let res = dev.operator_norm_hermitian() / h0.operator_norm_hermitian();
        worst = worst.max(res);
    }
    Ok(CytCheck {
        max_residual: worst,
        lambda_values: lambdas,
    })
}

/// max over samples of ‖Ric(ω₀) − Λ_{ω₀}(ψ)ψ‖ / ‖ω₀‖ for the datum's own
/// scales; ≈ 0 for every valid datum.
pub fn cyt_residual<S: Scalar>(
    d: &CytDatum,
    samples: &[PointZ<S>],
    fd: &FdConfig<S>,
) -> Result<CytCheck<S>> {
    let chart = BigCellChart::new(d.parabolic.clone())?;
    cyt_residual_with_scales(
        &chart,
        ratio_to_scalar::<S>(d.omega0_scale),
        ratio_to_scalar::<S>(d.psi_scale),
        samples,
        fd,
    )
}

/// Ω_M = (mℓ/I) dη + dσ∧η at a point of Q × S¹, in the frame
/// (x₁, y₁, …, x_m, y_m, θ, σ).
pub fn omega_m_at<S: Scalar>(d: &CytDatum, z: &PointZ<S>) -> Result<RMatrix<S>> {
    let chart = BigCellChart::new(d.parabolic.clone())?;
    let dim = 2 * d.m + 2;
    let (deta, eta) = eta_blocks(d, &chart, z, dim);
    let scale = ratio_to_scalar::<S>(Ratio::new(d.m as i64 * d.ell, d.fano));
    let mut dsigma = vec![S::zero(); dim];
    dsigma[dim - 1] = S::one();
    let wedge = RMatrix::outer(&dsigma, &eta).sub(&RMatrix::outer(&eta, &dsigma));
    Ok(deta.scale(scale).add(&wedge))
}

/// Independent assembly Ω_M = π*ω₀ + dσ∧η; returns the max deviation from
/// [`omega_m_at`].
pub fn omega_m_cross_check<S: Scalar>(d: &CytDatum, z: &PointZ<S>) -> Result<S> {
    let chart = BigCellChart::new(d.parabolic.clone())?;
    let dim = 2 * d.m + 2;
    let (_, eta) = eta_blocks(d, &chart, z, dim);
    let rho = exponents_delta::<S>(chart.parabolic());
    let omega0_exps = exponents_scaled(&rho, ratio_to_scalar::<S>(d.omega0_scale));
    let omega0 = chart
        .kahler_form_at(&omega0_exps, z)
        .real_two_form()
        .embed(dim, 0);
    let mut dsigma = vec![S::zero(); dim];
    dsigma[dim - 1] = S::one();
    let wedge = RMatrix::outer(&dsigma, &eta).sub(&RMatrix::outer(&eta, &dsigma));
    let other = omega0.add(&wedge);
    Ok(omega_m_at(d, z)?.sub(&other).max_abs())
}

/// dη as a real 2-form and η as a real covector, both extended to the
/// (…, θ, σ) frame of Q × S¹.
fn eta_blocks<S: Scalar>(
    d: &CytDatum,
    chart: &BigCellChart,
    z: &PointZ<S>,
    dim: usize,
) -> (RMatrix<S>, Vec<S>) {
    let rho = exponents_delta::<S>(chart.parabolic());
    let psi_scale = ratio_to_scalar::<S>(d.psi_scale);
    let deta = chart
        .kahler_form_at(&rho, z)
        .real_two_form()
        .scale(psi_scale)
        .embed(dim, 0);
    // η = (ℓ/2I) d^c log ||s v⁺_δ||² + dθ: Euler exponents −(ℓ/I)⟨δ,h⟩
    let eta_exps = exponents_scaled(&rho, -psi_scale);
    let cov = chart.connection_covector_at(&eta_exps, z, S::one());
    let mut eta = cov.real_coefficients();
    eta.resize(dim, S::zero());
    (deta, eta)
}

/// max over samples and frame triples of |dΩ_M − θ∧Ω_M| with the given Lee
/// coefficient on dσ.
pub fn lck_residual_with_lee<S: Scalar>(d: &CytDatum, lee: S, samples: &[PointZ<S>]) -> Result<S> {
    let chart = BigCellChart::new(d.parabolic.clone())?;
    let dim = 2 * d.m + 2;
    let mut worst = S::zero();
    for z in samples {
        let (deta, _) = eta_blocks(d, &chart, z, dim);
        let omega = omega_m_at(d, z)?;
        let mut dsigma = vec![S::zero(); dim];
        dsigma[dim - 1] = S::one();
        let basis = |p: usize| -> Vec<S> {
            let mut v = vec![S::zero(); dim];
            v[p] = S::one();
            v
        };
        for p in 0..dim {
            for q in p + 1..dim {
                for r in q + 1..dim {
                    let (u, v, w) = (basis(p), basis(q), basis(r));
                    // dΩ_M = d(dσ∧η) = −dη∧dσ
                    let d_omega = -wedge_two_one(&deta, &dsigma, &u, &v, &w);
                    // θ∧Ω = lee · dσ∧Ω (1-forms and 2-forms commute)
                    let theta_omega = lee * wedge_two_one(&omega, &dsigma, &u, &v, &w);
                    worst = worst.max((d_omega - theta_omega).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// The Vaisman identity dΩ_M = θ∧Ω_M with θ = −(I/(mℓ)) dσ; ≈ 0 always.
pub fn lck_residual<S: Scalar>(d: &CytDatum, samples: &[PointZ<S>]) -> Result<S> {
    lck_residual_with_lee(d, ratio_to_scalar::<S>(d.lee_coefficient), samples)
}

/// Solution locus of m₁(m₁−1) + 2a m₁m₂ + m₂(m₂−1)(a²+b²) = 0 in exact
/// rationals: a circle for m₂ ≥ 2, a vertical line for m₂ = 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsthenoCircle {
    pub m1: i64,
    pub m2: i64,
    /// m₂(m₂−1) = 0: the quadratic term drops and the locus is a line.
    pub degenerate: bool,
    /// The theorem hypothesis m₁+m₂+1 > 3 fails (kept computable anyway).
    pub dimension_warning: bool,
    pub center_a: Option<Rational>,
    pub radius_sq: Option<Rational>,
    pub line_a: Option<Rational>,
    /// Whether points with b ≠ 0 exist on the locus.
    pub has_nonreal_solutions: bool,
}

pub fn astheno_locus(m1: i64, m2: i64) -> AsthenoCircle {
    assert!(m1 >= 1 && m2 >= 1, "dimensions must be positive");
    let dimension_warning = m1 + m2 < 3;
    if m2 == 1 {
        // m₁(m₁−1) + 2a m₁ = 0 ⇒ a = −(m₁−1)/2, b free
        return AsthenoCircle {
            m1,
            m2,
            degenerate: true,
            dimension_warning,
            center_a: None,
            radius_sq: None,
            line_a: Some(-Ratio::new(m1 - 1, 2)),
            has_nonreal_solutions: true,
        };
    }
    let d = m2 * (m2 - 1);
    let center = -Ratio::new(m1 * m2, d);
    let radius_sq = center * center - Ratio::new(m1 * (m1 - 1), d);
    AsthenoCircle {
        m1,
        m2,
        degenerate: false,
        dimension_warning,
        center_a: Some(center),
        radius_sq: Some(radius_sq),
        line_a: None,
        has_nonreal_solutions: radius_sq > Ratio::new(0, 1),
    }
}

impl AsthenoCircle {
    /// `count` float points on the locus, all with b ≠ 0.
    pub fn sample_points(&self, count: usize) -> Vec<(f64, f64)> {
        if self.degenerate {
            let a = ratio_f64(self.line_a.unwrap());
            return (0..count)
                .map(|k| (a, 0.25 + 1.5 * k as f64 / count.max(1) as f64))
                .collect();
        }
        let center = ratio_f64(self.center_a.unwrap());
        let r2 = ratio_f64(self.radius_sq.unwrap());
        if r2 <= 0.0 {
            return Vec::new();
        }
        let r = r2.sqrt();
        (0..count)
            .map(|k| {
                // offset angles never hit sin t = 0
                let t = std::f64::consts::TAU * (k as f64 + 0.25) / count as f64;
                (center + r * t.cos(), r * t.sin())
            })
            .collect()
    }
}

fn ratio_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Left-hand side of the astheno condition at (a, b).
pub fn astheno_residual(m1: i64, m2: i64, a: f64, b: f64) -> f64 {
    let (m1f, m2f) = (m1 as f64, m2 as f64);
    m1f * (m1f - 1.0) + 2.0 * a * m1f * m2f + m2f * (m2f - 1.0) * (a * a + b * b)
}

/// Report row for a pair of compact homogeneous Sasaki manifolds.
#[derive(Debug, Clone, Serialize)]
pub struct SasakiPairReport {
    pub base1: String,
    pub base2: String,
    pub m1: usize,
    pub m2: usize,
    pub locus: AsthenoCircle,
    /// A few (a, b) solutions with b ≠ 0 and their condition residuals.
    pub sample_solutions: Vec<(f64, f64)>,
    pub max_sample_residual: f64,
    /// dΩ witness of the Hermitian structure at the first solution, when
    /// both factors are type A.
    pub d_omega_witness: Option<f64>,
}

pub fn sasaki_pair_report(s1: &SasakiDatum, s2: &SasakiDatum) -> Result<SasakiPairReport> {
    let m1 = s1.parabolic.complement_roots().len();
    let m2 = s2.parabolic.complement_roots().len();
    let locus = astheno_locus(m1 as i64, m2 as i64);
    let sample_solutions = locus.sample_points(8);
    let max_sample_residual = sample_solutions
        .iter()
        .map(|&(a, b)| astheno_residual(m1 as i64, m2 as i64, a, b).abs())
        .fold(0.0f64, f64::max);
    let witness = match (
        BigCellChart::new(s1.parabolic.clone()),
        BigCellChart::new(s2.parabolic.clone()),
    ) {
        (Ok(c1), Ok(c2)) => {
            let (a, b) = sample_solutions.first().copied().unwrap_or((0.0, 1.0));
            let f1 = contact_frame_at(&c1, s1, &PointZ::origin(c1.dim()), 0.0)?;
            let f2 = contact_frame_at(&c2, s2, &PointZ::origin(c2.dim()), 0.0)?;
            Some(d_omega_witness(&f1, &f2, a, b)?)
        }
        _ => None,
    };
    Ok(SasakiPairReport {
        base1: s1.parabolic.to_string(),
        base2: s2.parabolic.to_string(),
        m1,
        m2,
        locus,
        sample_solutions,
        max_sample_residual,
        d_omega_witness: witness,
    })
}

/// One row of the CYT example table.
#[derive(Debug, Clone, Serialize)]
pub struct Table1Row {
    pub manifold: String,
    pub base: String,
    pub m_theta: usize,
    pub fano_index: i64,
    /// Computed m_Θ + 1, never hardcoded.
    pub su_index: usize,
    pub holonomy_bound: String,
}

fn table_row(name: &str, p: &ParabolicDatum) -> Table1Row {
    let inv = p.flag_invariants();
    let su = inv.m_theta + 1;
    Table1Row {
        manifold: name.to_string(),
        base: p.to_string(),
        m_theta: inv.m_theta,
        fano_index: inv.fano_index,
        su_index: su,
        holonomy_bound: format!("SU({su})"),
    }
}

/// The five CYT example rows; the last column is generated from the given
/// full-flag datum.
pub fn table1(full_flag: &ParabolicDatum) -> Result<Vec<Table1Row>> {
    if !full_flag.theta.is_empty() {
        return Err(Error::ThetaIsFull); // misuse: the last row needs Θ = ∅
    }
    Ok(vec![
        table_row("S^3 x S^1", &crate::parabolic::projective_space(1)),
        table_row("S^5 x S^1", &crate::parabolic::projective_space(2)),
        table_row("X_{1,1} x S^1", &ParabolicDatum::parse("A2/{}")?),
        table_row("V_2(R^6) x S^1", &crate::parabolic::grassmannian_2_4()),
        table_row(
            &format!("Q(K_{{{}/T}}) x S^1", full_flag.root_system.lie_type),
            full_flag,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::SasakiDatum;
    use crate::parabolic::{full_flag, grassmannian_2_4, projective_space};
    use crate::rootsystem::LieType;
    use crate::sampling::sample_points;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w6() -> ParabolicDatum {
        ParabolicDatum::parse("A2/{}").unwrap()
    }

    #[test]
    fn datum_examples() {
        // (ℂP¹, 1): m=1, I=2, λ=4, ω₀-scale 1/4
        let d = cyt_datum(&projective_space(1), 1).unwrap();
        assert_eq!((d.m, d.fano), (1, 2));
        assert_eq!(d.lambda, Ratio::new(4, 1));
        assert_eq!(d.omega0_scale, Ratio::new(1, 4));
        assert_eq!(d.psi_scale, Ratio::new(1, 2));
        assert_eq!(d.lee_coefficient, -Ratio::new(2, 1));
        // (Gr(2,ℂ⁴), 1): ψ = ω₀
        let d = cyt_datum(&grassmannian_2_4(), 1).unwrap();
        assert_eq!((d.m, d.fano), (4, 4));
        assert_eq!(d.lambda, Ratio::new(4, 1));
        assert_eq!(d.omega0_scale, Ratio::new(1, 4));
        assert_eq!(d.psi_scale, d.omega0_scale);
        // (W₆, 1): m=3, I=2, λ=4/3, ω₀-scale 3/4
        let d = cyt_datum(&w6(), 1).unwrap();
        assert_eq!((d.m, d.fano), (3, 2));
        assert_eq!(d.lambda, Ratio::new(4, 3));
        assert_eq!(d.omega0_scale, Ratio::new(3, 4));
        // the η descriptor is attached via the canonical fraction bundle
        assert_eq!(d.eta_descriptor.exponents.len(), 2);
        assert!(cyt_datum(&w6(), 0).is_err());
    }

    #[test]
    fn rational_consistency_all_small_type_a() {
        // λ·ω₀scale = 1 and Λ(ψ)·ψscale = 1 as exact rationals
        for rank in 1..=4usize {
            let t = LieType::parse(&format!("A{rank}")).unwrap();
            let sys = crate::rootsystem::positive_roots(&t);
            for mask in 0..(1u32 << rank) - 1 {
                let theta: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
                let p = ParabolicDatum::new(sys.clone(), theta).unwrap();
                for ell in 1..=3 {
                    let d = cyt_datum(&p, ell).unwrap();
                    assert_eq!(d.lambda * d.omega0_scale, Ratio::new(1, 1));
                    // Λ_{ω₀}(ψ) = m·ψscale/ω₀scale = I/ℓ
                    let lam = Ratio::new(d.m as i64, 1) * d.psi_scale / d.omega0_scale;
                    assert_eq!(lam, Ratio::new(d.fano, d.ell));
                    assert_eq!(lam * d.psi_scale, d.lambda * d.omega0_scale);
                }
            }
        }
    }

    #[test]
    fn cyt_residual_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let fd = FdConfig::default();
        for (p, pts) in [(projective_space(1), 8), (w6(), 5)] {
            let d = cyt_datum(&p, 1).unwrap();
            let chart = BigCellChart::new(p).unwrap();
            let samples = sample_points::<f64>(&mut rng, chart.dim(), pts, 1.5);
            let check = cyt_residual(&d, &samples, &fd).unwrap();
            assert!(
                check.max_residual <= 1e-3,
                "residual {}",
                check.max_residual
            );
            // Λ_{ω₀}(ψ) is constant across samples and equals I/ℓ
            assert!(check.lambda_std() <= 1e-6);
            let expect = d.fano as f64 / d.ell as f64;
            assert!((check.lambda_mean() - expect).abs() < 1e-8);
        }
    }

    #[test]
    fn cyt_negative_control_mismatched_ell() {
        // forms from ℓ=2 against ψ from ℓ=1 must fail loudly
        let p = projective_space(1);
        let chart = BigCellChart::new(p.clone()).unwrap();
        let d1 = cyt_datum(&p, 1).unwrap();
        let d2 = cyt_datum(&p, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let samples = sample_points::<f64>(&mut rng, 1, 5, 1.5);
        let check = cyt_residual_with_scales(
            &chart,
            ratio_f64(d2.omega0_scale),
            ratio_f64(d1.psi_scale),
            &samples,
            &FdConfig::default(),
        )
        .unwrap();
        assert!(check.max_residual > 0.1, "control {}", check.max_residual);
    }

    #[test]
    fn omega_m_blocks() {
        let d = cyt_datum(&projective_space(1), 1).unwrap();
        let omega = omega_m_at::<f64>(&d, &PointZ::origin(1)).unwrap();
        // frame (x, y, θ, σ): vertical block dσ∧η picks the θ-σ corner;
        // with 𝒥(ξ) = −∂σ the assembled entry is Ω(ξ, ∂σ) = −1
        assert!((omega[(2, 3)] + 1.0).abs() < 1e-14);
        assert!((omega[(3, 2)] - 1.0).abs() < 1e-14);
        // horizontal block equals ω₀ = ρ₀/4: at the origin H_ρ = 2, so the
        // real coefficient on (∂x, ∂y) is 2·Re(2)/4 = 1
        assert!((omega[(0, 1)] - 1.0).abs() < 1e-14);
        // antisymmetry
        assert!(omega.add(&omega.transpose()).max_abs() < 1e-14);
        // cross-check against π*ω₀ + dσ∧η
        let z = PointZ(vec![crate::scalar::c::<f64>(0.4, -0.7)]);
        assert!(omega_m_cross_check(&d, &z).unwrap() < 1e-12);
    }

    #[test]
    fn lck_identity_and_lee_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for p in [projective_space(1), w6()] {
            let d = cyt_datum(&p, 1).unwrap();
            let chart = BigCellChart::new(p).unwrap();
            let samples = sample_points::<f64>(&mut rng, chart.dim(), 5, 1.5);
            let res = lck_residual(&d, &samples).unwrap();
            assert!(res <= 1e-6, "lck residual {res}");
            // perturbed Lee coefficient must fail
            let bad =
                lck_residual_with_lee(&d, 1.5 * ratio_f64(d.lee_coefficient), &samples).unwrap();
            assert!(bad > 1e-2, "control {bad}");
        }
        // exact rational Lee coefficients
        assert_eq!(
            cyt_datum(&projective_space(1), 1).unwrap().lee_coefficient,
            -Ratio::new(2, 1)
        );
        assert_eq!(
            cyt_datum(&w6(), 2).unwrap().lee_coefficient,
            -Ratio::new(1, 3)
        );
    }

    #[test]
    fn astheno_locus_cases() {
        // (1,1): a = 0, b free, with the dimension warning
        let l = astheno_locus(1, 1);
        assert!(l.degenerate && l.dimension_warning);
        assert_eq!(l.line_a, Some(Ratio::new(0, 1)));
        // (2,1): a = −1/2
        let l = astheno_locus(2, 1);
        assert_eq!(l.line_a, Some(-Ratio::new(1, 2)));
        assert!(!l.dimension_warning);
        // (1,2): circle (a+1)² + b² = 1
        let l = astheno_locus(1, 2);
        assert_eq!(l.center_a, Some(-Ratio::new(1, 1)));
        assert_eq!(l.radius_sq, Some(Ratio::new(1, 1)));
        assert!((astheno_residual(1, 2, -1.0, 1.0)).abs() < 1e-15);
        // (2,2): circle (a+2)² + b² = 3
        let l = astheno_locus(2, 2);
        assert_eq!(l.center_a, Some(-Ratio::new(2, 1)));
        assert_eq!(l.radius_sq, Some(Ratio::new(3, 1)));
        assert!((astheno_residual(2, 2, -2.0, 3.0f64.sqrt())).abs() < 1e-12);
        // (4,3): center −2, r² = 2
        let l = astheno_locus(4, 3);
        assert_eq!(l.center_a, Some(-Ratio::new(2, 1)));
        assert_eq!(l.radius_sq, Some(Ratio::new(2, 1)));
    }

    #[test]
    fn astheno_residual_values() {
        assert_eq!(astheno_residual(1, 1, 0.0, 1.0), 0.0);
        // (2,1,−1/2,b): zero for any b
        for b in [0.3, 1.0, -2.5] {
            assert!(astheno_residual(2, 1, -0.5, b).abs() < 1e-14);
        }
        // negative control: (2,2,0,1) → 2 + 0 + 2·1·1 = 4 ≠ 0
        assert_eq!(astheno_residual(2, 2, 0.0, 1.0), 4.0);
    }

    #[test]
    fn astheno_circle_samples_are_exact_solutions() {
        for (m1, m2) in [(1i64, 2i64), (2, 2), (4, 3), (3, 2), (5, 4), (2, 1)] {
            let l = astheno_locus(m1, m2);
            let pts = l.sample_points(50);
            assert!(!pts.is_empty(), "({m1},{m2})");
            for (a, b) in pts {
                assert!(b != 0.0);
                let r = astheno_residual(m1, m2, a, b).abs();
                assert!(r < 1e-10, "({m1},{m2}) at ({a},{b}): {r}");
            }
        }
    }

    #[test]
    fn astheno_asymmetry_guard() {
        // residual(1,2,·) = 0 does not imply residual(2,1,·) = 0
        let l = astheno_locus(1, 2);
        let (a, b) = l.sample_points(5)[1];
        assert!(astheno_residual(1, 2, a, b).abs() < 1e-10);
        assert!(astheno_residual(2, 1, a, b).abs() > 1e-2);
    }

    #[test]
    fn pair_reports() {
        // (S³, S³): m = (1,1), a = 0
        let s3 = SasakiDatum::new(projective_space(1), vec![1]).unwrap();
        let r = sasaki_pair_report(&s3, &s3.clone()).unwrap();
        assert_eq!((r.m1, r.m2), (1, 1));
        assert_eq!(r.locus.line_a, Some(Ratio::new(0, 1)));
        assert!(r.d_omega_witness.unwrap() > 0.1);
        // (S⁵, S³): m = (2,1), a = −1/2
        let s5 = SasakiDatum::new(projective_space(2), vec![1]).unwrap();
        let r = sasaki_pair_report(&s5, &s3).unwrap();
        assert_eq!((r.m1, r.m2), (2, 1));
        assert_eq!(r.locus.line_a, Some(-Ratio::new(1, 2)));
        // (𝒱₂(ℝ⁶), X_{1,1}): m = (4,3), circle center −2, r² = 2
        let v2 = SasakiDatum::new(grassmannian_2_4(), vec![1]).unwrap();
        let x11 = SasakiDatum::new(w6(), vec![1, 1]).unwrap();
        let r = sasaki_pair_report(&v2, &x11).unwrap();
        assert_eq!((r.m1, r.m2), (4, 3));
        assert_eq!(r.locus.center_a, Some(-Ratio::new(2, 1)));
        assert_eq!(r.locus.radius_sq, Some(Ratio::new(2, 1)));
        assert!(r.max_sample_residual < 1e-10);
    }

    #[test]
    fn table1_rows_are_computed() {
        let g_t = full_flag(&LieType::parse("A3").unwrap());
        let rows = table1(&g_t).unwrap();
        let su: Vec<usize> = rows.iter().map(|r| r.su_index).collect();
        // |Π⁺(A3)| = 6 → SU(7)
        assert_eq!(su, vec![2, 3, 4, 5, 7]);
        assert_eq!(rows[2].holonomy_bound, "SU(4)");
        assert!(table1(&grassmannian_2_4()).is_err());
    }
}
