//! Regeneration of the worked examples: invariants, explicit potential
//! strings on the big cell, and the CYT scaling constants, all computed
//! from the parabolic data rather than transcribed.

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use crate::chart::BigCellChart;
use crate::error::Result;
use crate::kt_cyt::cyt_datum;
use crate::parabolic::{FlagInvariants, ParabolicDatum};
use crate::poly::Poly;
use crate::typea_reps::{det_sub, WedgeIndex};

/// ||s_U(z) v⁺_{ω_k}||² expanded symbolically: "1 + |z1|^2 + …".
pub fn norm_sq_string(chart: &BigCellChart, node: usize) -> String {
    let n1 = chart.parabolic().rank() + 1;
    let nvars = chart.dim();
    let positions = chart.coord_positions();
    let entry = |i: usize, j: usize| -> Poly {
        if i == j {
            Poly::constant(nvars, 1)
        } else if let Some(t) = positions.iter().position(|&p| p == (i, j)) {
            Poly::var(nvars, t)
        } else {
            Poly::constant(nvars, 0)
        }
    };
    let cols: Vec<usize> = (0..node).collect();
    let mut terms = Vec::new();
    for idx in WedgeIndex::all(n1, node) {
        let mut minor = det_sub(&entry, &idx.0, &cols);
        if minor.is_zero() {
            continue;
        }
        // |−p|² = |p|²: normalize the displayed sign
        if minor.leading_coefficient() < 0 {
            minor = minor.negated();
        }
        if minor.is_constant_one() {
            terms.push("1".to_string());
        } else {
            terms.push(format!("|{minor}|^2"));
        }
    }
    terms.join(" + ")
}

/// The quasi-potential ∏ ||s_U v⁺_α||^{2⟨δ_P,h_α^∨⟩} as a display string.
pub fn quasi_potential_string(p: &ParabolicDatum) -> Result<String> {
    let chart = BigCellChart::new(p.clone())?;
    let (_, w) = p.delta_p();
    let mut factors = Vec::new();
    for &node in &p.complement() {
        let e = w.coeffs[node].to_integer();
        let body = norm_sq_string(&chart, node + 1);
        if e == 1 {
            factors.push(format!("({body})"));
        } else {
            factors.push(format!("({body})^{e}"));
        }
    }
    Ok(factors.join(" "))
}

/// One regenerated example: invariants, bundle data, CYT constants and the
/// explicit potential.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleReport {
    pub name: String,
    pub datum: String,
    pub invariants: FlagInvariants,
    /// Euler vector of Q(K^{⊗1/I}).
    pub canonical_bundle_ell: Vec<i64>,
    pub quasi_potential: String,
    /// Einstein constant λ = I²/m for ℓ = 1.
    pub cyt_lambda: String,
    /// ω₀ = (m/I²) ρ₀ for ℓ = 1.
    pub cyt_omega0_scale: String,
    /// ψ = (I/m) ω₀ for ℓ = 1; the complex dimension m used here is m_Θ.
    pub psi_over_omega0: String,
}

fn ratio_str(r: Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn example_report(name: &str, p: &ParabolicDatum) -> Result<ExampleReport> {
    let d = cyt_datum(p, 1)?;
    let psi_over_omega0 = d.psi_scale / d.omega0_scale;
    Ok(ExampleReport {
        name: name.to_string(),
        datum: p.to_string(),
        invariants: p.flag_invariants(),
        canonical_bundle_ell: d.bundle.ell.clone(),
        quasi_potential: quasi_potential_string(p)?,
        cyt_lambda: ratio_str(d.lambda),
        cyt_omega0_scale: ratio_str(d.omega0_scale),
        psi_over_omega0: ratio_str(psi_over_omega0),
    })
}

/// The recurring worked examples.
pub fn standard_examples() -> Result<Vec<ExampleReport>> {
    Ok(vec![
        example_report("CP^1", &crate::parabolic::projective_space(1))?,
        example_report("CP^3", &crate::parabolic::projective_space(3))?,
        example_report("Gr(2,C^4)", &crate::parabolic::grassmannian_2_4())?,
        example_report("W_6 = SL(3)/B", &ParabolicDatum::parse("A2/{}")?)?,
    ])
}
