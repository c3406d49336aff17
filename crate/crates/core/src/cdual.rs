//! Forward-mode dual numbers over complex scalars.
//!
//! Every function pushed through these carries its full holomorphic gradient
//! with respect to a fixed set of chart variables. The big-cell minors are
//! polynomials in the chart coordinates, so the gradients are exact to
//! roundoff; no finite differencing enters until the Ricci layer.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Scalar, C};

/// Complex value together with its gradient along the active variables.
///
/// An empty gradient means "constant"; binary operations broadcast it.
#[derive(Debug, Clone, PartialEq)]
pub struct CDual<S: Scalar> {
    pub val: C<S>,
    pub grad: Vec<C<S>>,
}

impl<S: Scalar> CDual<S> {
    pub fn constant(val: C<S>) -> Self {
        CDual {
            val,
            grad: Vec::new(),
        }
    }

    /// The variable with index `i` among `n` active variables.
    pub fn variable(val: C<S>, i: usize, n: usize) -> Self {
        let mut grad = vec![C::<S>::zero(); n];
        grad[i] = C::<S>::one();
        CDual { val, grad }
    }

    pub fn grad_at(&self, i: usize) -> C<S> {
        self.grad.get(i).copied().unwrap_or_else(C::<S>::zero)
    }
}

fn zip_grads<S: Scalar>(a: &[C<S>], b: &[C<S>], f: impl Fn(C<S>, C<S>) -> C<S>) -> Vec<C<S>> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or_else(C::<S>::zero);
        let y = b.get(i).copied().unwrap_or_else(C::<S>::zero);
        out.push(f(x, y));
    }
    out
}

impl<S: Scalar> Add for CDual<S> {
    type Output = CDual<S>;
    fn add(self, rhs: Self) -> Self {
        CDual {
            val: self.val + rhs.val,
            grad: zip_grads(&self.grad, &rhs.grad, |x, y| x + y),
        }
    }
}

impl<S: Scalar> Sub for CDual<S> {
    type Output = CDual<S>;
    fn sub(self, rhs: Self) -> Self {
        CDual {
            val: self.val - rhs.val,
            grad: zip_grads(&self.grad, &rhs.grad, |x, y| x - y),
        }
    }
}

impl<S: Scalar> Mul for CDual<S> {
    type Output = CDual<S>;
    // product rule: (a + εu)(b + εv) = ab + ε(ub + va)
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let grad = zip_grads(&self.grad, &rhs.grad, |x, y| x * rhs.val + y * self.val);
        CDual {
            val: self.val * rhs.val,
            grad,
        }
    }
}

impl<S: Scalar> Neg for CDual<S> {
    type Output = CDual<S>;
    fn neg(self) -> Self {
        CDual {
            val: -self.val,
            grad: self.grad.into_iter().map(|g| -g).collect(),
        }
    }
}

impl<S: Scalar> Zero for CDual<S> {
    fn zero() -> Self {
        CDual::constant(C::<S>::zero())
    }
    fn is_zero(&self) -> bool {
        self.val.is_zero() && self.grad.iter().all(|g| g.is_zero())
    }
}

impl<S: Scalar> One for CDual<S> {
    fn one() -> Self {
        CDual::constant(C::<S>::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type D = CDual<f64>;

    fn var(re: f64, im: f64, i: usize) -> D {
        D::variable(C::new(re, im), i, 2)
    }

    #[test]
    fn product_rule() {
        // f(z0, z1) = z0^2 z1, df/dz0 = 2 z0 z1, df/dz1 = z0^2
        let z0 = var(1.0, 2.0, 0);
        let z1 = var(-3.0, 0.5, 1);
        let f = z0.clone() * z0.clone() * z1.clone();
        let expect0 = C::new(1.0, 2.0) * C::new(1.0, 2.0) * C::new(-3.0, 0.5);
        assert!((f.val - expect0).norm() < 1e-14);
        let d0 = C::new(2.0, 0.0) * C::new(1.0, 2.0) * C::new(-3.0, 0.5);
        assert!((f.grad_at(0) - d0).norm() < 1e-14);
        let d1 = C::new(1.0, 2.0) * C::new(1.0, 2.0);
        assert!((f.grad_at(1) - d1).norm() < 1e-14);
    }

    #[test]
    fn constants_broadcast() {
        let z0 = var(2.0, 0.0, 0);
        let k = D::constant(C::new(5.0, -1.0));
        let f = (z0.clone() + k.clone()) * k;
        assert_eq!(f.grad.len(), 2);
        assert!((f.grad_at(0) - C::new(5.0, -1.0)).norm() < 1e-14);
        assert!(f.grad_at(1).is_zero());
    }
}
