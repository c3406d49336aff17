//! Numerical differential geometry on the big cell of SL(n+1,ℂ)/P_Θ.
//!
//! The big cell is coordinatized by the free entries of the opposite
//! unipotent radical, one matrix position below the diagonal per root in
//! Π⁻\⟨Θ⟩⁻, ordered column-major so the layouts match the usual explicit
//! charts. Potentials are logs of products of minor norms; their first and
//! second mixed derivatives come from the dual-number minors exactly, and
//! only the outer log-det Hessian of the Ricci form is finite-differenced.
//!
//! Conventions: the module works in the unit normalization
//! ω = √−1 ∂∂̄ log P (no 1/2π), and the connection form is
//! η = (√−1/2)(∂−∂̄)φ + dθ, which satisfies dη = −√−1 ∂∂̄ φ as real forms.
//! Real chart coordinates are interleaved (x₁, y₁, …, x_m, y_m), with θ
//! appended last where a vertical direction exists.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cdual::CDual;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, RMatrix};
use crate::parabolic::ParabolicDatum;
use crate::rootsystem::LieFamily;
use crate::scalar::{Scalar, C};
use crate::typea_reps::{minors_first_cols_dual, GroupElement};

/// Exponents per 1-based simple-root node (type A: node k acts on Λ^k).
pub type ExponentMap<S> = BTreeMap<usize, S>;

/// Exponent map from integer Euler coefficients over Σ\Θ.
pub fn exponents_from_ell<S: Scalar>(p: &ParabolicDatum, ell: &[i64]) -> ExponentMap<S> {
    p.complement()
        .iter()
        .zip(ell)
        .filter(|(_, &l)| l != 0)
        .map(|(&node, &l)| (node + 1, S::from_f64c(l as f64)))
        .collect()
}

/// Constant exponent on every unpainted node.
pub fn exponents_constant<S: Scalar>(p: &ParabolicDatum, value: S) -> ExponentMap<S> {
    p.complement()
        .iter()
        .map(|&node| (node + 1, value))
        .collect()
}

/// The anticanonical exponents ⟨δ_P, h_α^∨⟩ over Σ\Θ; with these the
/// potential is log ||s_U v⁺_{δ_P}||² and the form is the normalized
/// Kähler-Einstein metric with Ric = id.
pub fn exponents_delta<S: Scalar>(p: &ParabolicDatum) -> ExponentMap<S> {
    let (_, w) = p.delta_p();
    p.complement()
        .iter()
        .map(|&node| (node + 1, S::from_f64c(w.coeffs[node].to_integer() as f64)))
        .collect()
}

pub fn exponents_scaled<S: Scalar>(exps: &ExponentMap<S>, c: S) -> ExponentMap<S> {
    exps.iter().map(|(&k, &e)| (k, e * c)).collect()
}

/// Point on the big cell.
#[derive(Debug, Clone, PartialEq)]
pub struct PointZ<S: Scalar>(pub Vec<C<S>>);

impl<S: Scalar> PointZ<S> {
    pub fn origin(m: usize) -> Self {
        PointZ(vec![C::<S>::zero(); m])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> S {
        self.0
            .iter()
            .fold(S::zero(), |a, z| a + z.norm_sqr())
            .sqrt()
    }

    /// Interleaved real coordinates (x₁, y₁, …, x_m, y_m).
    pub fn to_real(&self) -> Vec<S> {
        let mut u = Vec::with_capacity(2 * self.0.len());
        for z in &self.0 {
            u.push(z.re);
            u.push(z.im);
        }
        u
    }

    pub fn from_real(u: &[S]) -> Self {
        assert!(u.len().is_multiple_of(2));
        PointZ(u.chunks(2).map(|c| C::new(c[0], c[1])).collect())
    }
}

/// The (1,1)-form coefficient matrix H[i][j] ≈ ω(∂/∂z_i, ∂/∂z̄_j).
#[derive(Debug, Clone)]
pub struct HermitianFormAtPoint<S: Scalar> {
    pub matrix: CMatrix<S>,
}

impl<S: Scalar> HermitianFormAtPoint<S> {
    pub fn dim(&self) -> usize {
        self.matrix.n
    }

    pub fn hermitian_defect(&self) -> S {
        self.matrix.hermitian_defect()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.matrix.is_positive_definite()
    }

    /// The real antisymmetric matrix of √−1 Σ H_ij dz_i∧dz̄_j on the
    /// interleaved real frame.
    pub fn real_two_form(&self) -> RMatrix<S> {
        real_two_form(&self.matrix)
    }

    /// The real Riemannian metric g = ω(·, J₀·) of this (1,1)-form.
    pub fn real_metric(&self) -> RMatrix<S> {
        real_metric(&self.matrix)
    }
}

pub(crate) fn real_two_form<S: Scalar>(h: &CMatrix<S>) -> RMatrix<S> {
    let m = h.n;
    let two = S::from_f64c(2.0);
    let mut out = RMatrix::zeros(2 * m);
    for p in 0..m {
        for q in 0..m {
            let v = h[(p, q)];
            out[(2 * p, 2 * q)] = -two * v.im;
            out[(2 * p, 2 * q + 1)] = two * v.re;
            out[(2 * p + 1, 2 * q)] = -two * v.re;
            out[(2 * p + 1, 2 * q + 1)] = -two * v.im;
        }
    }
    out
}

pub(crate) fn real_metric<S: Scalar>(h: &CMatrix<S>) -> RMatrix<S> {
    let m = h.n;
    let two = S::from_f64c(2.0);
    let mut out = RMatrix::zeros(2 * m);
    for p in 0..m {
        for q in 0..m {
            let v = h[(p, q)];
            out[(2 * p, 2 * q)] = two * v.re;
            out[(2 * p, 2 * q + 1)] = two * v.im;
            out[(2 * p + 1, 2 * q)] = -two * v.im;
            out[(2 * p + 1, 2 * q + 1)] = two * v.re;
        }
    }
    out
}

/// The coefficients of the real connection 1-form
/// η = (√−1/2)(∂φ − ∂̄φ) + (dθ coefficient)·dθ.
#[derive(Debug, Clone)]
pub struct CovectorAtPoint<S: Scalar> {
    pub dz_part: Vec<C<S>>,
    pub dzbar_part: Vec<C<S>>,
    pub dtheta_part: S,
}

impl<S: Scalar> CovectorAtPoint<S> {
    /// Real coefficients on (x₁, y₁, …, x_m, y_m, θ).
    pub fn real_coefficients(&self) -> Vec<S> {
        let two = S::from_f64c(2.0);
        let mut out = Vec::with_capacity(2 * self.dz_part.len() + 1);
        for a in &self.dz_part {
            out.push(two * a.re);
            out.push(-two * a.im);
        }
        out.push(self.dtheta_part);
        out
    }
}

/// Finite-difference settings for the Ricci layer.
#[derive(Debug, Clone, Copy)]
pub struct FdConfig<S: Scalar> {
    /// Base step; the effective step is `step · (1 + ‖z‖)`.
    pub step: S,
    /// One extra Richardson extrapolation level on the Hessian.
    pub richardson: bool,
}

impl<S: Scalar> Default for FdConfig<S> {
    fn default() -> Self {
        FdConfig {
            step: S::from_f64c(1e-3),
            richardson: false,
        }
    }
}

/// Big-cell chart of a type-A flag manifold.
#[derive(Debug, Clone, PartialEq)]
pub struct BigCellChart {
    parabolic: ParabolicDatum,
    /// Matrix positions (row, col) with row > col, one per complement root,
    /// column-major.
    coord_positions: Vec<(usize, usize)>,
    dim: usize,
}

impl BigCellChart {
    pub fn new(parabolic: ParabolicDatum) -> Result<Self> {
        if parabolic.root_system.lie_type.family != LieFamily::A {
            return Err(Error::CombinatorialOnly(
                parabolic.root_system.lie_type.to_string(),
            ));
        }
        let n1 = parabolic.rank() + 1;
        let complement = parabolic.complement();
        let mut coord_positions = Vec::new();
        // positive root ε_a − ε_b (1-based a < b) ↔ matrix position (b-1, a-1);
        // the root touches nodes a..b-1, so it escapes ⟨Θ⟩ iff one of those
        // is unpainted
        for col in 0..n1 {
            for row in col + 1..n1 {
                let touches_complement = (col..row).any(|node| complement.contains(&node));
                if touches_complement {
                    coord_positions.push((row, col));
                }
            }
        }
        let dim = coord_positions.len();
        debug_assert_eq!(dim, parabolic.complement_roots().len());
        Ok(BigCellChart {
            parabolic,
            coord_positions,
            dim,
        })
    }

    pub fn parabolic(&self) -> &ParabolicDatum {
        &self.parabolic
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coord_positions(&self) -> &[(usize, usize)] {
        &self.coord_positions
    }

    fn matrix_dim(&self) -> usize {
        self.parabolic.rank() + 1
    }

    fn check_exponents<S: Scalar>(&self, exps: &ExponentMap<S>) {
        let complement = self.parabolic.complement();
        for &node in exps.keys() {
            assert!(
                node >= 1 && complement.contains(&(node - 1)),
                "exponent node {node} is not in the unpainted set"
            );
        }
    }

    /// The unipotent section s_U(z): identity with z placed at the chart
    /// positions. Determinant exactly 1 by shape.
    pub fn section_matrix<S: Scalar>(&self, z: &PointZ<S>) -> GroupElement<S> {
        assert_eq!(z.dim(), self.dim);
        let entries: Vec<((usize, usize), C<S>)> = self
            .coord_positions
            .iter()
            .copied()
            .zip(z.0.iter().copied())
            .collect();
        GroupElement::unipotent_lower(self.matrix_dim(), &entries)
    }

    fn section_entry_dual<'a, S: Scalar>(
        &'a self,
        z: &'a PointZ<S>,
    ) -> impl Fn(usize, usize) -> CDual<S> + 'a {
        let m = self.dim;
        move |i: usize, j: usize| {
            if i == j {
                CDual::constant(C::<S>::new(S::one(), S::zero()))
            } else if let Some(t) = self.coord_positions.iter().position(|&p| p == (i, j)) {
                CDual::variable(z.0[t], t, m)
            } else {
                CDual::constant(C::<S>::zero())
            }
        }
    }

    /// φ, ∂φ and the mixed Hessian ∂∂̄φ of φ = Σ e_k log ||s_U v⁺_k||²,
    /// with minor derivatives from the dual-number path.
    fn potential_derivatives<S: Scalar>(
        &self,
        exps: &ExponentMap<S>,
        z: &PointZ<S>,
    ) -> (S, Vec<C<S>>, CMatrix<S>) {
        self.check_exponents(exps);
        let m = self.dim;
        let entry = self.section_entry_dual(z);
        let mut phi = S::zero();
        let mut grad = vec![C::<S>::zero(); m];
        let mut hess = CMatrix::<S>::zeros(m);
        for (&node, &e) in exps {
            if e == S::zero() {
                continue;
            }
            let minors = minors_first_cols_dual(self.matrix_dim(), &entry, node);
            let mut p = S::zero();
            let mut gp = vec![C::<S>::zero(); m];
            let mut mixed = CMatrix::<S>::zeros(m);
            for mi in &minors {
                p = p + mi.val.norm_sqr();
                let conj_val = mi.val.conj();
                for i in 0..m {
                    let gi = mi.grad_at(i);
                    gp[i] = gp[i] + gi * conj_val;
                    for j in 0..m {
                        mixed[(i, j)] = mixed[(i, j)] + gi * mi.grad_at(j).conj();
                    }
                }
            }
            debug_assert!(p >= S::one() - S::from_f64c(1e-9), "minor norm below 1");
            phi = phi + e * p.ln();
            let ec = C::new(e, S::zero());
            let pc = C::new(p, S::zero());
            for i in 0..m {
                grad[i] = grad[i] + ec * gp[i] / pc;
                for j in 0..m {
                    let num = mixed[(i, j)] * pc - gp[i] * gp[j].conj();
                    hess[(i, j)] = hess[(i, j)] + ec * num / (pc * pc);
                }
            }
        }
        (phi, grad, hess)
    }

    /// log ∏_k ||s_U(z) v⁺_k||^{2 e_k}; zero at the origin.
    pub fn potential_at<S: Scalar>(&self, exps: &ExponentMap<S>, z: &PointZ<S>) -> S {
        self.check_exponents(exps);
        let entry = self.section_entry_dual(z);
        let mut phi = S::zero();
        for (&node, &e) in exps {
            if e == S::zero() {
                continue;
            }
            let minors = minors_first_cols_dual(self.matrix_dim(), &entry, node);
            let p = minors.iter().fold(S::zero(), |a, mi| a + mi.val.norm_sqr());
            phi = phi + e * p.ln();
        }
        phi
    }

    /// H[i][j] = ∂²φ/∂z_i∂z̄_j; positive definite when all exponents are
    /// positive.
    pub fn kahler_form_at<S: Scalar>(
        &self,
        exps: &ExponentMap<S>,
        z: &PointZ<S>,
    ) -> HermitianFormAtPoint<S> {
        let (_, _, hess) = self.potential_derivatives(exps, z);
        HermitianFormAtPoint { matrix: hess }
    }

    /// The connection covector η = (√−1/2)(∂φ − ∂̄φ) + dθ at a point.
    pub fn connection_covector_at<S: Scalar>(
        &self,
        exps: &ExponentMap<S>,
        z: &PointZ<S>,
        theta_part: S,
    ) -> CovectorAtPoint<S> {
        let (_, grad, _) = self.potential_derivatives(exps, z);
        let half_i = C::new(S::zero(), S::from_f64c(0.5));
        let dz_part: Vec<C<S>> = grad.iter().map(|g| half_i * *g).collect();
        let dzbar_part = dz_part.iter().map(|a| a.conj()).collect();
        CovectorAtPoint {
            dz_part,
            dzbar_part,
            dtheta_part: theta_part,
        }
    }

    /// Ricci form R[i][j] = −∂²(log det H)/∂z_i∂z̄_j by central finite
    /// differences over dual-number-exact H evaluations.
    pub fn ricci_form_at<S: Scalar>(
        &self,
        exps: &ExponentMap<S>,
        z: &PointZ<S>,
        fd: &FdConfig<S>,
    ) -> Result<HermitianFormAtPoint<S>> {
        self.check_exponents(exps);
        let h_eff = fd.step * (S::one() + z.norm());
        let f = |u: &[S]| -> Result<S> {
            let p = PointZ::from_real(u);
            let h = self.kahler_form_at(exps, &p);
            h.matrix.log_abs_det()
        };
        let hess = if fd.richardson {
            let a = complex_hessian_fd(&f, &z.to_real(), h_eff)?;
            let b = complex_hessian_fd(&f, &z.to_real(), h_eff * S::from_f64c(0.5))?;
            let four = S::from_f64c(4.0);
            let third = S::from_f64c(1.0 / 3.0);
            b.scale_re(four).sub(&a).scale_re(third)
        } else {
            complex_hessian_fd(&f, &z.to_real(), h_eff)?
        };
        Ok(HermitianFormAtPoint {
            matrix: hess.scale_re(-S::one()),
        })
    }

    /// max over samples of ‖Ric(H) − λH‖ / ‖H‖ in operator norms.
    pub fn einstein_residual<S: Scalar>(
        &self,
        exps: &ExponentMap<S>,
        lambda: S,
        samples: &[PointZ<S>],
        fd: &FdConfig<S>,
    ) -> Result<S> {
        let mut worst = S::zero();
        for z in samples {
            let h = self.kahler_form_at(exps, z);
            let r = self.ricci_form_at(exps, z, fd)?;
            let dev = r.matrix.sub(&h.matrix.scale_re(lambda));
            let res = dev.operator_norm_hermitian() / h.matrix.operator_norm_hermitian();
            worst = worst.max(res);
        }
        Ok(worst)
    }

    /// Checks dη = −√−1 ∂∂̄φ as real 2-forms: the (z, z̄)-part of η is
    /// finite-differenced in the real chart and compared against the
    /// assembled curvature. Returns the max coefficient deviation.
    pub fn curvature_identity_residual<S: Scalar>(
        &self,
        exps: &ExponentMap<S>,
        z: &PointZ<S>,
        step: S,
    ) -> S {
        let m2 = 2 * self.dim;
        if self.dim == 0 {
            return S::zero();
        }
        let h_eff = step * (S::one() + z.norm());
        let base_coeffs = |u: &[S]| -> Vec<S> {
            let p = PointZ::from_real(u);
            let cov = self.connection_covector_at(exps, &p, S::one());
            let mut c = cov.real_coefficients();
            c.pop();
            c
        };
        let u0 = z.to_real();
        // directional derivatives of every coefficient along every axis
        let mut d: Vec<Vec<S>> = Vec::with_capacity(m2);
        for p in 0..m2 {
            let mut up = u0.clone();
            up[p] = up[p] + h_eff;
            let mut um = u0.clone();
            um[p] = um[p] - h_eff;
            let cp = base_coeffs(&up);
            let cm = base_coeffs(&um);
            d.push(
                cp.iter()
                    .zip(&cm)
                    .map(|(a, b)| (*a - *b) / (h_eff + h_eff))
                    .collect(),
            );
        }
        let expected = real_two_form(&self.kahler_form_at(exps, z).matrix).scale(-S::one());
        let mut worst = S::zero();
        for p in 0..m2 {
            for q in 0..m2 {
                let fd_deta = d[p][q] - d[q][p];
                worst = worst.max((fd_deta - expected[(p, q)]).abs());
            }
        }
        worst
    }
}

/// Complex Hessian ∂²f/∂z_i∂z̄_j of a real-valued function of the
/// interleaved real coordinates, by central differences of step h.
fn complex_hessian_fd<S: Scalar>(
    f: &dyn Fn(&[S]) -> Result<S>,
    u0: &[S],
    h: S,
) -> Result<CMatrix<S>> {
    let m2 = u0.len();
    let m = m2 / 2;
    let f0 = f(u0)?;
    let h2 = h * h;
    let mut second = RMatrix::<S>::zeros(m2);
    for p in 0..m2 {
        for q in p..m2 {
            let v = if p == q {
                let mut up = u0.to_vec();
                up[p] = up[p] + h;
                let mut um = u0.to_vec();
                um[p] = um[p] - h;
                (f(&up)? - (f0 + f0) + f(&um)?) / h2
            } else {
                let mut upp = u0.to_vec();
                upp[p] = upp[p] + h;
                upp[q] = upp[q] + h;
                let mut upm = u0.to_vec();
                upm[p] = upm[p] + h;
                upm[q] = upm[q] - h;
                let mut ump = u0.to_vec();
                ump[p] = ump[p] - h;
                ump[q] = ump[q] + h;
                let mut umm = u0.to_vec();
                umm[p] = umm[p] - h;
                umm[q] = umm[q] - h;
                (f(&upp)? - f(&upm)? - f(&ump)? + f(&umm)?) / (S::from_f64c(4.0) * h2)
            };
            second[(p, q)] = v;
            second[(q, p)] = v;
        }
    }
    let quarter = S::from_f64c(0.25);
    let mut out = CMatrix::<S>::zeros(m);
    for i in 0..m {
        for j in 0..m {
            let (xi, yi, xj, yj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
            let re = quarter * (second[(xi, xj)] + second[(yi, yj)]);
            let im = quarter * (second[(xi, yj)] - second[(yi, xj)]);
            out[(i, j)] = C::new(re, im);
        }
    }
    Ok(out)
}
