//! The verification suites behind `flagbundle verify`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::output::{point_string, render, suite_report, SampleRow};
use flagbundle_core::bundles::{canonical_fraction_bundle, SasakiDatum};
use flagbundle_core::chart::{exponents_delta, exponents_from_ell, BigCellChart, FdConfig};
use flagbundle_core::kt_cyt::{cyt_datum, cyt_residual, lck_residual};
use flagbundle_core::parabolic::ParabolicDatum;
use flagbundle_core::product_hermitian::{
    contact_frame_at, d_omega_witness, nijenhuis_residual_at, FrameTamper, ProductPoint,
};
use flagbundle_core::sampling::sample_points;
use flagbundle_core::{Fd64, Point64};

const SAMPLE_RADIUS: f64 = 2.0;

pub fn cmd_verify(
    suite: &str,
    datum: &str,
    ell: i64,
    a: f64,
    b: f64,
    cfg: &RunConfig,
) -> Result<bool, String> {
    match suite {
        "einstein" => einstein(datum, cfg),
        "curvature" => curvature(datum, ell, cfg),
        "nijenhuis" => nijenhuis(datum, a, b, cfg),
        "cyt" => cyt(datum, ell, cfg),
        "lck" => lck(datum, ell, cfg),
        "nonkahler" => nonkahler(datum, cfg),
        other => Err(format!(
            "unknown suite {other:?}; expected einstein|curvature|nijenhuis|cyt|lck|nonkahler"
        )),
    }
}

fn chart_for(datum: &str) -> Result<(ParabolicDatum, BigCellChart), String> {
    let p = ParabolicDatum::parse(datum).map_err(|e| e.to_string())?;
    let chart = BigCellChart::new(p.clone()).map_err(|e| e.to_string())?;
    Ok((p, chart))
}

fn points_for(chart: &BigCellChart, cfg: &RunConfig) -> Vec<Point64> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    sample_points::<f64>(&mut rng, chart.dim(), cfg.samples, SAMPLE_RADIUS)
}

fn fd(cfg: &RunConfig) -> Fd64 {
    FdConfig {
        step: cfg.fd_step,
        richardson: false,
    }
}

/// Ric(ρ₀) = ρ₀ pointwise, ρ₀ the anticanonically normalized metric.
fn einstein(datum: &str, cfg: &RunConfig) -> Result<bool, String> {
    let (_, chart) = chart_for(datum)?;
    let tol = cfg.tolerance("einstein");
    let exps = exponents_delta::<f64>(chart.parabolic());
    let fdc = fd(cfg);
    let mut rows = Vec::new();
    for z in points_for(&chart, cfg) {
        let residual = chart
            .einstein_residual(&exps, 1.0, std::slice::from_ref(&z), &fdc)
            .map_err(|e| e.to_string())?;
        rows.push(SampleRow {
            point: point_string(&z),
            residual,
            tolerance: tol,
            pass: residual <= tol,
        });
    }
    let report = suite_report("einstein", datum, tol, rows);
    render(&report, cfg);
    Ok(report.pass)
}

/// dη against −√−1∂∂̄φ for the connection of Q(K^{⊗ℓ/I}).
fn curvature(datum: &str, ell: i64, cfg: &RunConfig) -> Result<bool, String> {
    let (p, chart) = chart_for(datum)?;
    let tol = cfg.tolerance("curvature");
    let bundle = canonical_fraction_bundle(&p, ell);
    let exps = exponents_from_ell::<f64>(&p, &bundle.ell);
    let mut rows = Vec::new();
    for z in points_for(&chart, cfg) {
        let residual = chart.curvature_identity_residual(&exps, &z, cfg.first_order_step());
        rows.push(SampleRow {
            point: point_string(&z),
            residual,
            tolerance: tol,
            pass: residual <= tol,
        });
    }
    let report = suite_report("curvature", datum, tol, rows);
    render(&report, cfg);
    Ok(report.pass)
}

fn split_product(datum: &str) -> Result<(String, String), String> {
    if let Some((l, r)) = datum.split_once('×') {
        return Ok((l.to_string(), r.to_string()));
    }
    if let Some(pos) = datum.find("}x") {
        return Ok((datum[..pos + 1].to_string(), datum[pos + 2..].to_string()));
    }
    Err(format!(
        "product datum must look like A1/{{}}xA1/{{}}, got {datum:?}"
    ))
}

fn sasaki_ones(p: &ParabolicDatum) -> Result<SasakiDatum, String> {
    SasakiDatum::new(p.clone(), vec![1; p.picard_rank()]).map_err(|e| e.to_string())
}

/// Integrability of J_{a,b} on a product of two Sasaki circle bundles.
fn nijenhuis(datum: &str, a: f64, b: f64, cfg: &RunConfig) -> Result<bool, String> {
    let (d1, d2) = split_product(datum)?;
    let (p1, chart1) = chart_for(&d1)?;
    let (p2, chart2) = chart_for(&d2)?;
    let s1 = sasaki_ones(&p1)?;
    let s2 = sasaki_ones(&p2)?;
    let tol = cfg.tolerance("nijenhuis");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let z1s = sample_points::<f64>(&mut rng, chart1.dim(), cfg.samples, 1.5);
    let z2s = sample_points::<f64>(&mut rng, chart2.dim(), cfg.samples, 1.5);
    let mut rows = Vec::new();
    for (z1, z2) in z1s.into_iter().zip(z2s) {
        let point = ProductPoint {
            z1,
            theta1: 0.0,
            z2,
            theta2: 0.0,
        };
        let residual = nijenhuis_residual_at(
            &chart1,
            &s1,
            &chart2,
            &s2,
            a,
            b,
            &point,
            cfg.fd_step,
            FrameTamper::None,
        )
        .map_err(|e| e.to_string())?;
        rows.push(SampleRow {
            point: format!("{} x {}", point_string(&point.z1), point_string(&point.z2)),
            residual,
            tolerance: tol,
            pass: residual <= tol,
        });
    }
    let report = suite_report("nijenhuis", datum, tol, rows);
    render(&report, cfg);
    Ok(report.pass)
}

/// Ric(ω₀) − Λ_{ω₀}(ψ)ψ balance for Q(K^{⊗ℓ/I}) × S¹.
fn cyt(datum: &str, ell: i64, cfg: &RunConfig) -> Result<bool, String> {
    let (p, chart) = chart_for(datum)?;
    let d = cyt_datum(&p, ell).map_err(|e| e.to_string())?;
    let tol = cfg.tolerance("cyt");
    let fdc = fd(cfg);
    let mut rows = Vec::new();
    for z in points_for(&chart, cfg) {
        let check = cyt_residual(&d, std::slice::from_ref(&z), &fdc).map_err(|e| e.to_string())?;
        rows.push(SampleRow {
            point: point_string(&z),
            residual: check.max_residual,
            tolerance: tol,
            pass: check.max_residual <= tol,
        });
    }
    let report = suite_report("cyt", datum, tol, rows);
    render(&report, cfg);
    Ok(report.pass)
}

/// dΩ_M = θ∧Ω_M with θ = −(I/(mℓ)) dσ.
fn lck(datum: &str, ell: i64, cfg: &RunConfig) -> Result<bool, String> {
    let (p, chart) = chart_for(datum)?;
    let d = cyt_datum(&p, ell).map_err(|e| e.to_string())?;
    let tol = cfg.tolerance("lck");
    let mut rows = Vec::new();
    for z in points_for(&chart, cfg) {
        let residual = lck_residual(&d, std::slice::from_ref(&z)).map_err(|e| e.to_string())?;
        rows.push(SampleRow {
            point: point_string(&z),
            residual,
            tolerance: tol,
            pass: residual <= tol,
        });
    }
    let report = suite_report("lck", datum, tol, rows);
    render(&report, cfg);
    Ok(report.pass)
}

/// dΩ witness of the Morimoto structure; passes when the witness EXCEEDS
/// the threshold at every sample.
fn nonkahler(datum: &str, cfg: &RunConfig) -> Result<bool, String> {
    let (d1, d2) = split_product(datum)?;
    let (p1, chart1) = chart_for(&d1)?;
    let (p2, chart2) = chart_for(&d2)?;
    let s1 = sasaki_ones(&p1)?;
    let s2 = sasaki_ones(&p2)?;
    let tol = cfg.tolerance("nonkahler");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let z1s = sample_points::<f64>(&mut rng, chart1.dim(), cfg.samples, 1.5);
    let z2s = sample_points::<f64>(&mut rng, chart2.dim(), cfg.samples, 1.5);
    let mut rows = Vec::new();
    for (z1, z2) in z1s.into_iter().zip(z2s) {
        let f1 = contact_frame_at(&chart1, &s1, &z1, 0.0).map_err(|e| e.to_string())?;
        let f2 = contact_frame_at(&chart2, &s2, &z2, 0.0).map_err(|e| e.to_string())?;
        let witness = d_omega_witness(&f1, &f2, 0.0, 1.0).map_err(|e| e.to_string())?;
        rows.push(SampleRow {
            point: format!("{} x {}", point_string(&z1), point_string(&z2)),
            residual: witness,
            tolerance: tol,
            pass: witness > tol,
        });
    }
    let report = suite_report("nonkahler", datum, tol, rows);
    render(&report, cfg);
    Ok(report.pass)
}
