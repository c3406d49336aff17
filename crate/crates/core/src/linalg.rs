//! Small dense matrices over complex and real scalars.
//!
//! Everything here works on matrices of dimension at most a few dozen
//! (chart dimensions), so plain Gaussian elimination and power iteration
//! are adequate.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, C};

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<S: Scalar> {
    pub n: usize,
    data: Vec<C<S>>,
}

impl<S: Scalar> CMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![C::<S>::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C::<S>::one();
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> C<S>) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn scale(&self, c: C<S>) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_re(&self, s: S) -> Self {
        self.scale(C::new(s, S::zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[C<S>]) -> Vec<C<S>> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).fold(C::<S>::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    /// Largest deviation from Hermitian symmetry.
    pub fn hermitian_defect(&self) -> S {
        let mut d = S::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                d = d.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        d
    }

    pub fn frobenius_norm(&self) -> S {
        self.data
            .iter()
            .fold(S::zero(), |acc, x| acc + x.norm_sqr())
            .sqrt()
    }

    pub fn trace(&self) -> C<S> {
        (0..self.n).fold(C::<S>::zero(), |acc, i| acc + self[(i, i)])
    }

    /// Operator 2-norm of a Hermitian matrix via power iteration on the
    /// deterministic start vector (1, 1+1/4, 1+2/4, ...).
    pub fn operator_norm_hermitian(&self) -> S {
        let n = self.n;
        if n == 0 {
            return S::zero();
        }
        let mut x: Vec<C<S>> = (0..n)
            .map(|k| C::new(S::one() + S::from_f64c(k as f64 / 4.0), S::from_f64c(0.1)))
            .collect();
        let mut norm = S::zero();
        for _ in 0..200 {
            let y = self.matvec(&x);
            let ny = y.iter().fold(S::zero(), |a, v| a + v.norm_sqr()).sqrt();
            if ny <= S::epsilon() * S::from_f64c(1e3) {
                return S::zero();
            }
            let nx = x.iter().fold(S::zero(), |a, v| a + v.norm_sqr()).sqrt();
            norm = ny / nx;
            x = y.iter().map(|v| v / ny).collect();
        }
        norm
    }

    /// LU determinant with partial pivoting.
    pub fn det(&self) -> C<S> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = C::<S>::one();
        for col in 0..n {
            let mut piv = col;
            let mut best = a[col * n + col].norm_sqr();
            for r in col + 1..n {
                let v = a[r * n + col].norm_sqr();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == S::zero() {
                return C::<S>::zero();
            }
            if piv != col {
                for j in 0..n {
                    a.swap(col * n + j, piv * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det = det * p;
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                for j in col..n {
                    let v = a[col * n + j];
                    a[r * n + j] = a[r * n + j] - f * v;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let mut piv = col;
            let mut best = a[col * n + col].norm_sqr();
            for r in col + 1..n {
                let v = a[r * n + col].norm_sqr();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == S::zero() {
                return Err(Error::Singular);
            }
            if piv != col {
                for j in 0..n {
                    a.swap(col * n + j, piv * n + j);
                    inv.data.swap(col * n + j, piv * n + j);
                }
            }
            let p = a[col * n + col];
            for j in 0..n {
                a[col * n + j] = a[col * n + j] / p;
                inv.data[col * n + j] = inv.data[col * n + j] / p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let va = a[col * n + j];
                    let vi = inv.data[col * n + j];
                    a[r * n + j] = a[r * n + j] - f * va;
                    inv.data[r * n + j] = inv.data[r * n + j] - f * vi;
                }
            }
        }
        Ok(inv)
    }

    /// Cholesky factorization; succeeds exactly when the Hermitian part is
    /// positive definite.
    pub fn cholesky(&self) -> Result<Self> {
        let n = self.n;
        let mut l = Self::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let mut sum = self[(i, j)];
                for k in 0..j {
                    sum = sum - l[(i, k)] * l[(j, k)].conj();
                }
                if i == j {
                    let d = sum.re;
                    if d <= S::zero() || !d.is_finite() {
                        return Err(Error::NotPositiveDefinite);
                    }
                    l[(i, j)] = C::new(d.sqrt(), S::zero());
                } else {
                    l[(i, j)] = sum / l[(j, j)];
                }
            }
        }
        Ok(l)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.cholesky().is_ok()
    }

    /// log |det| of a positive definite Hermitian matrix.
    pub fn log_abs_det(&self) -> Result<S> {
        let l = self.cholesky()?;
        let mut acc = S::zero();
        for i in 0..self.n {
            acc = acc + l[(i, i)].re.ln();
        }
        Ok(acc + acc)
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for CMatrix<S> {
    type Output = C<S>;
    fn index(&self, (i, j): (usize, usize)) -> &C<S> {
        &self.data[i * self.n + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for CMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<S> {
        &mut self.data[i * self.n + j]
    }
}

/// Dense square real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RMatrix<S: Scalar> {
    pub n: usize,
    data: Vec<S>,
}

impl<S: Scalar> RMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        RMatrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Outer product a bᵀ (column a against row b).
    pub fn outer(a: &[S], b: &[S]) -> Self {
        assert_eq!(a.len(), b.len());
        Self::from_fn(a.len(), |i, j| a[i] * b[j])
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        RMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        RMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    pub fn scale(&self, s: S) -> Self {
        RMatrix {
            n: self.n,
            data: self.data.iter().map(|a| *a * s).collect(),
        }
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == S::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * o[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).fold(S::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn max_abs(&self) -> S {
        self.data.iter().fold(S::zero(), |acc, x| acc.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> S {
        self.data
            .iter()
            .fold(S::zero(), |acc, x| acc + *x * *x)
            .sqrt()
    }

    /// Bilinear evaluation vᵀ M w.
    pub fn eval(&self, v: &[S], w: &[S]) -> S {
        let mw = self.matvec(w);
        v.iter()
            .zip(&mw)
            .fold(S::zero(), |acc, (a, b)| acc + *a * *b)
    }

    /// Embed a block at diagonal offset `at` inside a larger zero matrix.
    pub fn embed(&self, total: usize, at: usize) -> Self {
        let mut out = Self::zeros(total);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(at + i, at + j)] = self[(i, j)];
            }
        }
        out
    }

    pub fn to_complex(&self) -> CMatrix<S> {
        CMatrix::from_fn(self.n, |i, j| C::new(self[(i, j)], S::zero()))
    }

    pub fn is_positive_definite(&self) -> bool {
        self.to_complex().is_positive_definite()
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for RMatrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for RMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = CMatrix::<f64>::from_fn(3, |i, j| {
            C::new(
                (i * 3 + j) as f64 + if i == j { 5.0 } else { 0.0 },
                (i as f64) - (j as f64),
            )
        });
        let inv = m.inverse().unwrap();
        let p = m.matmul(&inv);
        let defect = p.sub(&CMatrix::identity(3)).frobenius_norm();
        assert!(defect < 1e-12, "defect {defect}");
        let d = m.det() * inv.det();
        assert!((d - C::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cholesky_detects_signature() {
        let pd = CMatrix::<f64>::from_fn(2, |i, j| {
            if i == j {
                C::new(2.0, 0.0)
            } else {
                C::new(0.3, if i < j { 0.1 } else { -0.1 })
            }
        });
        assert!(pd.is_positive_definite());
        let nd = pd.scale_re(-1.0);
        assert!(!nd.is_positive_definite());
        let log_det = pd.log_abs_det().unwrap();
        assert!((log_det - pd.det().re.ln()).abs() < 1e-12);
    }

    #[test]
    fn operator_norm_matches_known_eigenvalue() {
        // diag(3, -7, 1) has operator norm 7
        let m = CMatrix::<f64>::from_fn(3, |i, j| {
            if i == j {
                C::new([3.0, -7.0, 1.0][i], 0.0)
            } else {
                C::new(0.0, 0.0)
            }
        });
        assert!((m.operator_norm_hermitian() - 7.0).abs() < 1e-9);
    }
}
