//! Pointwise tensors on products of circle bundles over flag manifolds:
//! normal almost contact frames, the Morimoto/Tsukada complex structures,
//! the (1,0)-form Ψ_τ, fundamental forms, non-Kähler witnesses, Bismut
//! torsion samples, and finite-difference Nijenhuis residuals.
//!
//! All tensors are matrices in the real coordinate frame of the product
//! big cell: factor 1 contributes (x₁, y₁, …, x_{m₁}, y_{m₁}, θ₁), factor 2
//! follows with its own block, θ always last within a factor.

use num_traits::Zero;

use crate::bundles::SasakiDatum;
use crate::chart::{exponents_from_ell, BigCellChart, ExponentMap, PointZ};
use crate::error::{Error, Result};
use crate::linalg::RMatrix;
use crate::scalar::{Scalar, C};

/// Normal almost contact frame (φ, ξ = ∂/∂θ, η) with its compatible metric
/// at one point of Q, in the real frame (x₁, y₁, …, x_m, y_m, θ).
#[derive(Debug, Clone)]
pub struct ContactFrameAtPoint<S: Scalar> {
    /// Complex dimension of the base chart.
    pub m: usize,
    /// Real coefficients of η, length 2m+1 (dθ coefficient last).
    pub eta: Vec<S>,
    /// φ ∈ End(TQ) as a (2m+1)×(2m+1) matrix; ξ spans the kernel.
    pub phi: RMatrix<S>,
    /// g_Q = π*g_base + η⊗η.
    pub metric: RMatrix<S>,
    /// Real 2-form of dη (θ row and column vanish).
    pub curvature: RMatrix<S>,
}

impl<S: Scalar> ContactFrameAtPoint<S> {
    pub fn real_dim(&self) -> usize {
        2 * self.m + 1
    }

    /// The Reeb direction as a coordinate vector.
    pub fn xi(&self) -> Vec<S> {
        let mut v = vec![S::zero(); self.real_dim()];
        v[2 * self.m] = S::one();
        v
    }

    pub fn eta_apply(&self, v: &[S]) -> S {
        self.eta
            .iter()
            .zip(v)
            .fold(S::zero(), |acc, (a, b)| acc + *a * *b)
    }
}

/// Frame with η induced by the Euler coefficients `euler_ell` over Σ\Θ and
/// the base Kähler metric given by `base_exps` (all positive).
///
/// φ acts by horizontal lift: a base vector w lifts to (w, −𝒜(w)) with 𝒜
/// the base part of η, and φ(lift(w)) = lift(J₀ w), φ(ξ) = 0.
pub fn contact_frame_custom<S: Scalar>(
    chart: &BigCellChart,
    euler_ell: &[i64],
    base_exps: &ExponentMap<S>,
    z: &PointZ<S>,
    _theta: S,
) -> Result<ContactFrameAtPoint<S>> {
    let m = chart.dim();
    let eta_exps = exponents_from_ell::<S>(chart.parabolic(), euler_ell);
    let cov = chart.connection_covector_at(&eta_exps, z, S::one());
    let eta = cov.real_coefficients();

    // dη = −√−1 ∂∂̄ φ_η as a real 2-form
    let h_eta = chart.kahler_form_at(&eta_exps, z);
    let curvature = h_eta.real_two_form().scale(-S::one()).embed(2 * m + 1, 0);

    let h_base = chart.kahler_form_at(base_exps, z);
    if !h_base.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let g_base = h_base.real_metric();

    // φ = lift ∘ J₀ ∘ π in block form
    let mut j0 = RMatrix::<S>::zeros(2 * m);
    for i in 0..m {
        j0[(2 * i + 1, 2 * i)] = S::one();
        j0[(2 * i, 2 * i + 1)] = -S::one();
    }
    let mut phi = RMatrix::<S>::zeros(2 * m + 1);
    for p in 0..2 * m {
        let mut theta_row = S::zero();
        for q in 0..2 * m {
            phi[(q, p)] = j0[(q, p)];
            theta_row = theta_row + eta[q] * j0[(q, p)];
        }
        phi[(2 * m, p)] = -theta_row;
    }

    let metric = g_base.embed(2 * m + 1, 0).add(&RMatrix::outer(&eta, &eta));

    Ok(ContactFrameAtPoint {
        m,
        eta,
        phi,
        metric,
        curvature,
    })
}

/// The Sasaki frame of Q(L): η carries the Euler vector −ℓ of the ample
/// datum, and the base Kähler form is the descent of dη/2, which makes
/// dη = 2 g(φ⊗id) hold on the nose.
pub fn contact_frame_at<S: Scalar>(
    chart: &BigCellChart,
    sasaki: &SasakiDatum,
    z: &PointZ<S>,
    theta: S,
) -> Result<ContactFrameAtPoint<S>> {
    assert!(
        sasaki.parabolic.same_base(chart.parabolic()),
        "Sasaki datum and chart must share the parabolic base"
    );
    let euler: Vec<i64> = sasaki.lambda_coeffs.iter().map(|l| -l).collect();
    let base_exps: ExponentMap<S> = chart
        .parabolic()
        .complement()
        .iter()
        .zip(&sasaki.lambda_coeffs)
        .map(|(&node, &l)| (node + 1, S::from_f64c(l as f64 / 2.0)))
        .collect();
    contact_frame_custom(chart, &euler, &base_exps, z, theta)
}

/// Complex structure on a product of two frames with its fundamental form.
#[derive(Debug, Clone)]
pub struct ProductStructureAtPoint<S: Scalar> {
    pub j: RMatrix<S>,
    pub a: S,
    pub b: S,
    pub omega: RMatrix<S>,
}

fn extend_first<S: Scalar>(v: &[S], d1: usize, dim: usize) -> Vec<S> {
    let mut out = vec![S::zero(); dim];
    out[..d1].copy_from_slice(v);
    out
}

fn extend_second<S: Scalar>(v: &[S], d1: usize, dim: usize) -> Vec<S> {
    let mut out = vec![S::zero(); dim];
    out[d1..].copy_from_slice(v);
    out
}

/// Tsukada's complex structure
/// J_{a,b} = φ₁ − ((a/b)η₁ + ((a²+b²)/b)η₂)⊗ξ₁ + φ₂ + ((1/b)η₁ + (a/b)η₂)⊗ξ₂;
/// (a,b) = (0,1) is Morimoto's structure.
pub fn tsukada_j_at<S: Scalar>(
    f1: &ContactFrameAtPoint<S>,
    f2: &ContactFrameAtPoint<S>,
    a: S,
    b: S,
) -> Result<ProductStructureAtPoint<S>> {
    if b == S::zero() {
        return Err(Error::ZeroB);
    }
    let d1 = f1.real_dim();
    let d2 = f2.real_dim();
    let dim = d1 + d2;
    let eta1 = extend_first(&f1.eta, d1, dim);
    let eta2 = extend_second(&f2.eta, d1, dim);
    let mut xi1 = vec![S::zero(); dim];
    xi1[d1 - 1] = S::one();
    let mut xi2 = vec![S::zero(); dim];
    xi2[dim - 1] = S::one();

    let mut j = RMatrix::<S>::zeros(dim);
    for p in 0..d1 {
        for q in 0..d1 {
            j[(p, q)] = f1.phi[(p, q)];
        }
    }
    for p in 0..d2 {
        for q in 0..d2 {
            j[(d1 + p, d1 + q)] = f2.phi[(p, q)];
        }
    }
    let aa_bb = (a * a + b * b) / b;
    let row1: Vec<S> = eta1
        .iter()
        .zip(&eta2)
        .map(|(e1, e2)| (a / b) * *e1 + aa_bb * *e2)
        .collect();
    let row2: Vec<S> = eta1
        .iter()
        .zip(&eta2)
        .map(|(e1, e2)| *e1 / b + (a / b) * *e2)
        .collect();
    j = j
        .sub(&RMatrix::outer(&xi1, &row1))
        .add(&RMatrix::outer(&xi2, &row2));

    let omega = fundamental_form_at(f1, f2, a, b)?;
    Ok(ProductStructureAtPoint { j, a, b, omega })
}

pub fn morimoto_j_at<S: Scalar>(
    f1: &ContactFrameAtPoint<S>,
    f2: &ContactFrameAtPoint<S>,
) -> Result<ProductStructureAtPoint<S>> {
    tsukada_j_at(f1, f2, S::zero(), S::one())
}

/// Ψ_τ = (√−1/2 Im τ)(τ̄ η₁ + η₂) as a complex covector on the product.
pub fn psi_tau_at<S: Scalar>(
    f1: &ContactFrameAtPoint<S>,
    f2: &ContactFrameAtPoint<S>,
    tau: C<S>,
) -> Result<Vec<C<S>>> {
    if tau.im == S::zero() {
        return Err(Error::RealTau);
    }
    let d1 = f1.real_dim();
    let dim = d1 + f2.real_dim();
    let eta1 = extend_first(&f1.eta, d1, dim);
    let eta2 = extend_second(&f2.eta, d1, dim);
    let factor = C::new(S::zero(), S::one() / (S::from_f64c(2.0) * tau.im));
    Ok(eta1
        .iter()
        .zip(&eta2)
        .map(|(e1, e2)| factor * (tau.conj() * C::new(*e1, S::zero()) + C::new(*e2, S::zero())))
        .collect())
}

/// Apply a covector to a complexified coordinate vector.
pub fn covector_apply<S: Scalar>(cov: &[C<S>], v: &[C<S>]) -> C<S> {
    cov.iter()
        .zip(v)
        .fold(C::<S>::zero(), |acc, (c, x)| acc + *c * *x)
}

/// Pullback of a complex covector along a real endomorphism: (J·Ψ) = Ψ∘J.
pub fn covector_pullback<S: Scalar>(cov: &[C<S>], j: &RMatrix<S>) -> Vec<C<S>> {
    (0..cov.len())
        .map(|p| {
            (0..cov.len()).fold(C::<S>::zero(), |acc, q| {
                acc + cov[q] * C::new(j[(q, p)], S::zero())
            })
        })
        .collect()
}

/// Ω_{a,b} = (1/2)(dη₁ + dη₂) + b η₁∧η₂ on the product frame.
/// At (a,b) = (0,1) this is Morimoto's π₁*ω₁ + π₂*ω₂ + η₁∧η₂ with the base
/// Kähler forms normalized as the descents of dη_i/2.
pub fn fundamental_form_at<S: Scalar>(
    f1: &ContactFrameAtPoint<S>,
    f2: &ContactFrameAtPoint<S>,
    _a: S,
    b: S,
) -> Result<RMatrix<S>> {
    if b == S::zero() {
        return Err(Error::ZeroB);
    }
    let d1 = f1.real_dim();
    let d2 = f2.real_dim();
    let dim = d1 + d2;
    let half = S::from_f64c(0.5);
    let mut omega = f1
        .curvature
        .embed(dim, 0)
        .add(&f2.curvature.embed(dim, d1))
        .scale(half);
    let eta1 = extend_first(&f1.eta, d1, dim);
    let eta2 = extend_second(&f2.eta, d1, dim);
    let wedge = RMatrix::outer(&eta1, &eta2).sub(&RMatrix::outer(&eta2, &eta1));
    omega = omega.add(&wedge.scale(b));
    Ok(omega)
}

/// g_{a,b} = g₁ + g₂ + a(η₁⊗η₂ + η₂⊗η₁) + (a²+b²−1) η₂⊗η₂.
pub fn metric_ab<S: Scalar>(
    f1: &ContactFrameAtPoint<S>,
    f2: &ContactFrameAtPoint<S>,
    a: S,
    b: S,
) -> RMatrix<S> {
    let d1 = f1.real_dim();
    let d2 = f2.real_dim();
    let dim = d1 + d2;
    let eta1 = extend_first(&f1.eta, d1, dim);
    let eta2 = extend_second(&f2.eta, d1, dim);
    let cross = RMatrix::outer(&eta1, &eta2).add(&RMatrix::outer(&eta2, &eta1));
    f1.metric
        .embed(dim, 0)
        .add(&f2.metric.embed(dim, d1))
        .add(&cross.scale(a))
        .add(&RMatrix::outer(&eta2, &eta2).scale(a * a + b * b - S::one()))
}

/// dΩ_{a,b} = b (dη₁∧η₂ − η₁∧dη₂), stored by its constituent blocks and
/// evaluated trilinearly.
#[derive(Debug, Clone)]
pub struct ProductThreeForm<S: Scalar> {
    curv1: RMatrix<S>,
    curv2: RMatrix<S>,
    eta1: Vec<S>,
    eta2: Vec<S>,
    b: S,
}

fn two_form_eval<S: Scalar>(a: &RMatrix<S>, u: &[S], v: &[S]) -> S {
    a.eval(u, v)
}

/// (A ∧ β)(X,Y,Z) for a 2-form A and 1-form β (shuffle convention).
/// 1-forms and 2-forms commute, so this also evaluates β ∧ A.
pub(crate) fn wedge_two_one<S: Scalar>(a: &RMatrix<S>, beta: &[S], u: &[S], v: &[S], w: &[S]) -> S {
    let bu = beta
        .iter()
        .zip(u)
        .fold(S::zero(), |acc, (x, y)| acc + *x * *y);
    let bv = beta
        .iter()
        .zip(v)
        .fold(S::zero(), |acc, (x, y)| acc + *x * *y);
    let bw = beta
        .iter()
        .zip(w)
        .fold(S::zero(), |acc, (x, y)| acc + *x * *y);
    two_form_eval(a, u, v) * bw + two_form_eval(a, v, w) * bu + two_form_eval(a, w, u) * bv
}

impl<S: Scalar> ProductThreeForm<S> {
    pub fn new(f1: &ContactFrameAtPoint<S>, f2: &ContactFrameAtPoint<S>, b: S) -> Self {
        let d1 = f1.real_dim();
        let d2 = f2.real_dim();
        let dim = d1 + d2;
        ProductThreeForm {
            curv1: f1.curvature.embed(dim, 0),
            curv2: f2.curvature.embed(dim, d1),
            eta1: extend_first(&f1.eta, d1, dim),
            eta2: extend_second(&f2.eta, d1, dim),
            b,
        }
    }

    pub fn dim(&self) -> usize {
        self.eta1.len()
    }

    pub fn eval(&self, u: &[S], v: &[S], w: &[S]) -> S {
        // dη₁∧η₂ − η₁∧dη₂ with (β∧A) = (A∧β) for p=1,q=2 up to ordering:
        // (β∧A)(X,Y,Z) = β(X)A(Y,Z) − β(Y)A(X,Z) + β(Z)A(X,Y) = (A∧β)(X,Y,Z)
        let first = wedge_two_one(&self.curv1, &self.eta2, u, v, w);
        let second = wedge_two_one(&self.curv2, &self.eta1, u, v, w);
        self.b * (first - second)
    }

    /// Max |coefficient| over coordinate triples.
    pub fn max_coefficient(&self) -> S {
        let dim = self.dim();
        let basis = |p: usize| -> Vec<S> {
            let mut v = vec![S::zero(); dim];
            v[p] = S::one();
            v
        };
        let mut worst = S::zero();
        for p in 0..dim {
            for q in p + 1..dim {
                for r in q + 1..dim {
                    worst = worst.max(self.eval(&basis(p), &basis(q), &basis(r)).abs());
                }
            }
        }
        worst
    }
}

/// Non-Kähler witness: the largest |dΩ| coefficient at the point.
pub fn d_omega_witness<S: Scalar>(
    f1: &ContactFrameAtPoint<S>,
    f2: &ContactFrameAtPoint<S>,
    _a: S,
    b: S,
) -> Result<S> {
    if b == S::zero() {
        return Err(Error::ZeroB);
    }
    Ok(ProductThreeForm::new(f1, f2, b).max_coefficient())
}

/// Bismut torsion 3-form T_B = J dΩ sampled on the coordinate frame.
#[derive(Debug, Clone)]
pub struct BismutTorsionAtPoint<S: Scalar> {
    pub d_omega: ProductThreeForm<S>,
    pub j: RMatrix<S>,
}

impl<S: Scalar> BismutTorsionAtPoint<S> {
    pub fn eval(&self, u: &[S], v: &[S], w: &[S]) -> S {
        self.d_omega
            .eval(&self.j.matvec(u), &self.j.matvec(v), &self.j.matvec(w))
    }

    pub fn max_coefficient(&self) -> S {
        let dim = self.d_omega.dim();
        let basis = |p: usize| -> Vec<S> {
            let mut v = vec![S::zero(); dim];
            v[p] = S::one();
            v
        };
        let mut worst = S::zero();
        for p in 0..dim {
            for q in p + 1..dim {
                for r in q + 1..dim {
                    worst = worst.max(self.eval(&basis(p), &basis(q), &basis(r)).abs());
                }
            }
        }
        worst
    }
}

pub fn bismut_torsion_at<S: Scalar>(
    f1: &ContactFrameAtPoint<S>,
    f2: &ContactFrameAtPoint<S>,
    a: S,
    b: S,
) -> Result<BismutTorsionAtPoint<S>> {
    let structure = tsukada_j_at(f1, f2, a, b)?;
    Ok(BismutTorsionAtPoint {
        d_omega: ProductThreeForm::new(f1, f2, b),
        j: structure.j,
    })
}

/// Point of the product big cell Q₁ × Q₂.
#[derive(Debug, Clone)]
pub struct ProductPoint<S: Scalar> {
    pub z1: PointZ<S>,
    pub theta1: S,
    pub z2: PointZ<S>,
    pub theta2: S,
}

impl<S: Scalar> ProductPoint<S> {
    pub fn to_real(&self) -> Vec<S> {
        let mut u = self.z1.to_real();
        u.push(self.theta1);
        u.extend(self.z2.to_real());
        u.push(self.theta2);
        u
    }

    pub fn from_real(u: &[S], m1: usize, m2: usize) -> Self {
        let d1 = 2 * m1 + 1;
        ProductPoint {
            z1: PointZ::from_real(&u[..2 * m1]),
            theta1: u[d1 - 1],
            z2: PointZ::from_real(&u[d1..d1 + 2 * m2]),
            theta2: u[u.len() - 1],
        }
    }
}

/// Optional tampering hook for negative controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FrameTamper {
    None,
    /// Flip the sign of one φ entry of factor 1.
    FlipPhi1(usize, usize),
}

/// Max Nijenhuis-tensor component of J_{a,b} over coordinate frame pairs,
/// with brackets of the matrix field J computed by central differences of
/// step `h` in the real product chart. Near zero for intact frames.
#[allow(clippy::too_many_arguments)]
pub fn nijenhuis_residual_at<S: Scalar>(
    chart1: &BigCellChart,
    s1: &SasakiDatum,
    chart2: &BigCellChart,
    s2: &SasakiDatum,
    a: S,
    b: S,
    point: &ProductPoint<S>,
    h: S,
    tamper: FrameTamper,
) -> Result<S> {
    let m1 = chart1.dim();
    let m2 = chart2.dim();
    let dim = 2 * m1 + 2 * m2 + 2;
    let j_at = |u: &[S]| -> Result<RMatrix<S>> {
        let p = ProductPoint::from_real(u, m1, m2);
        let mut f1 = contact_frame_at(chart1, s1, &p.z1, p.theta1)?;
        if let FrameTamper::FlipPhi1(r, c) = tamper {
            f1.phi[(r, c)] = -f1.phi[(r, c)];
        }
        let f2 = contact_frame_at(chart2, s2, &p.z2, p.theta2)?;
        Ok(tsukada_j_at(&f1, &f2, a, b)?.j)
    };

    let u0 = point.to_real();
    let j0 = j_at(&u0)?;

    // directional derivative of the J field along v
    let deriv = |v: &[S]| -> Result<RMatrix<S>> {
        let up: Vec<S> = u0.iter().zip(v).map(|(x, d)| *x + h * *d).collect();
        let um: Vec<S> = u0.iter().zip(v).map(|(x, d)| *x - h * *d).collect();
        Ok(j_at(&up)?.sub(&j_at(&um)?).scale(S::one() / (h + h)))
    };

    let basis = |p: usize| -> Vec<S> {
        let mut v = vec![S::zero(); dim];
        v[p] = S::one();
        v
    };

    // D_{e_p} J and D_{J e_p} J for every axis
    let mut d_axis = Vec::with_capacity(dim);
    let mut d_jaxis = Vec::with_capacity(dim);
    for p in 0..dim {
        d_axis.push(deriv(&basis(p))?);
        let jp: Vec<S> = (0..dim).map(|r| j0[(r, p)]).collect();
        d_jaxis.push(deriv(&jp)?);
    }

    let mut worst = S::zero();
    for p in 0..dim {
        for q in p + 1..dim {
            // N(e_p, e_q) = D_{Je_p}(J)e_q − D_{Je_q}(J)e_p
            //             + J·D_{e_q}(J)e_p − J·D_{e_p}(J)e_q
            let eq = basis(q);
            let ep = basis(p);
            let t1 = d_jaxis[p].matvec(&eq);
            let t2 = d_jaxis[q].matvec(&ep);
            let t3 = j0.matvec(&d_axis[q].matvec(&ep));
            let t4 = j0.matvec(&d_axis[p].matvec(&eq));
            for r in 0..dim {
                let n = t1[r] - t2[r] + t3[r] - t4[r];
                worst = worst.max(n.abs());
            }
        }
    }
    Ok(worst)
}
