//! Fundamental representations Λ^k ℂ^{n+1} of SL(n+1,ℂ) through minors:
//! compound-matrix action on wedge monomials, highest-weight orbit norms,
//! and the product norms that feed the chart potentials.
//!
//! Minor determinants use a division-free subset expansion so the same code
//! path accepts plain complex entries, dual numbers carrying gradients, and
//! integer polynomials for the report strings. Wedge indices are ordered
//! lexicographically and minors are signed by that orientation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::cdual::CDual;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, C};

/// Strictly increasing k-tuple from {1..n+1}, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeIndex(pub Vec<usize>);

impl WedgeIndex {
    pub fn new(subset: Vec<usize>) -> Self {
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        WedgeIndex(subset)
    }

    /// All k-subsets of {0..n1-1} in lexicographic order.
    pub fn all(n1: usize, k: usize) -> Vec<WedgeIndex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n1: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<WedgeIndex>) {
            if cur.len() == k {
                out.push(WedgeIndex(cur.clone()));
                return;
            }
            for i in start..n1 {
                cur.push(i);
                rec(i + 1, n1, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n1, k, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

/// Element of SL(n+1,ℂ) as a dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement<S: Scalar> {
    pub dim: usize,
    entries: Vec<C<S>>,
}

impl<S: Scalar> GroupElement<S> {
    pub fn identity(dim: usize) -> Self {
        let mut g = GroupElement {
            dim,
            entries: vec![C::<S>::zero(); dim * dim],
        };
        for i in 0..dim {
            g.entries[i * dim + i] = C::<S>::one();
        }
        g
    }

    /// General constructor; rejects matrices whose determinant strays from 1.
    pub fn from_entries(dim: usize, entries: Vec<C<S>>) -> Result<Self> {
        assert_eq!(entries.len(), dim * dim);
        let g = GroupElement { dim, entries };
        let det = det_sub(
            &|i, j| g.entry(i, j),
            &(0..dim).collect::<Vec<_>>(),
            &(0..dim).collect::<Vec<_>>(),
        );
        if (det - C::<S>::one()).norm() > S::from_f64c(1e-12) * S::from_f64c(dim as f64) {
            return Err(Error::NotUnimodular);
        }
        Ok(g)
    }

    /// Identity plus prescribed strictly-lower-triangular entries; the
    /// determinant is exactly 1 by shape, so no numeric check is needed.
    pub fn unipotent_lower(dim: usize, entries: &[((usize, usize), C<S>)]) -> Self {
        let mut g = Self::identity(dim);
        for &((i, j), v) in entries {
            assert!(i > j, "unipotent entries must sit below the diagonal");
            g.entries[i * dim + j] = v;
        }
        g
    }

    pub fn entry(&self, i: usize, j: usize) -> C<S> {
        self.entries[i * self.dim + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: C<S>) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn matmul(&self, other: &GroupElement<S>) -> GroupElement<S> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = vec![C::<S>::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = out[i * n + j] + a * other.entries[k * n + j];
                }
            }
        }
        GroupElement {
            dim: n,
            entries: out,
        }
    }
}

/// Element of Λ^k ℂ^{n+1} with finite support.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeVector<S: Scalar> {
    pub k: usize,
    pub coords: BTreeMap<WedgeIndex, C<S>>,
}

impl<S: Scalar> WedgeVector<S> {
    /// The basis monomial e_{i1} ∧ … ∧ e_{ik}.
    pub fn basis(idx: WedgeIndex) -> Self {
        let k = idx.0.len();
        let mut coords = BTreeMap::new();
        coords.insert(idx, C::<S>::one());
        WedgeVector { k, coords }
    }

    /// Highest-weight vector e_1 ∧ … ∧ e_k.
    pub fn highest(k: usize) -> Self {
        Self::basis(WedgeIndex::new((0..k).collect()))
    }

    pub fn coord(&self, idx: &WedgeIndex) -> C<S> {
        self.coords.get(idx).copied().unwrap_or_else(C::<S>::zero)
    }

    pub fn norm_sq(&self) -> S {
        self.coords
            .values()
            .fold(S::zero(), |acc, v| acc + v.norm_sqr())
    }
}

/// Division-free determinant of the minor with the given rows and columns,
/// expanded over column subsets. Works for any commutative ring element.
pub fn det_sub<T>(entry: &dyn Fn(usize, usize) -> T, rows: &[usize], cols: &[usize]) -> T
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let k = rows.len();
    assert_eq!(k, cols.len());
    if k == 0 {
        return T::one();
    }
    let size = 1usize << k;
    let mut table: Vec<T> = vec![T::zero(); size];
    table[0] = T::one();
    for mask in 1..size {
        let r = (mask as u32).count_ones() as usize - 1;
        let mut acc = T::zero();
        // Laplace along row r: cofactor sign (−1)^{r+j}
        let mut sign_pos = r.is_multiple_of(2);
        for (t, &cj) in cols.iter().enumerate() {
            let bit = 1usize << t;
            if mask & bit == 0 {
                continue;
            }
            let term = entry(rows[r], cj) * table[mask ^ bit].clone();
            acc = if sign_pos { acc + term } else { acc - term };
            sign_pos = !sign_pos;
        }
        table[mask] = acc;
    }
    table[size - 1].clone()
}

/// The k-th compound matrix of g: entry (I, J) is the determinant of the
/// I×J minor. The compound of a product is the product of compounds.
pub fn compound_matrix<S: Scalar>(g: &GroupElement<S>, k: usize) -> Result<Vec<Vec<C<S>>>> {
    check_degree(g.dim, k)?;
    let idx = WedgeIndex::all(g.dim, k);
    let entry = |i: usize, j: usize| g.entry(i, j);
    Ok(idx
        .iter()
        .map(|ri| idx.iter().map(|cj| det_sub(&entry, &ri.0, &cj.0)).collect())
        .collect())
}

/// Apply the k-th compound of g to a wedge vector.
pub fn act<S: Scalar>(g: &GroupElement<S>, k: usize, v: &WedgeVector<S>) -> Result<WedgeVector<S>> {
    check_degree(g.dim, k)?;
    assert_eq!(v.k, k);
    let idx = WedgeIndex::all(g.dim, k);
    let entry = |i: usize, j: usize| g.entry(i, j);
    let mut coords = BTreeMap::new();
    for i in &idx {
        let mut acc = C::<S>::zero();
        for (j, c) in &v.coords {
            acc = acc + det_sub(&entry, &i.0, &j.0) * *c;
        }
        if !acc.is_zero() {
            coords.insert(i.clone(), acc);
        }
    }
    Ok(WedgeVector { k, coords })
}

fn check_degree(dim: usize, k: usize) -> Result<()> {
    if k >= 1 && k < dim {
        Ok(())
    } else {
        Err(Error::WedgeDegree { k, n: dim - 1 })
    }
}

/// ||g·(e_1∧…∧e_k)||² = Σ_I |det_I(first k columns of g)|² in the standard
/// Hermitian inner product of Λ^k ℂ^{n+1}.
pub fn highest_weight_norm_sq<S: Scalar>(g: &GroupElement<S>, k: usize) -> Result<S> {
    check_degree(g.dim, k)?;
    let cols: Vec<usize> = (0..k).collect();
    let entry = |i: usize, j: usize| g.entry(i, j);
    let mut acc = S::zero();
    for idx in WedgeIndex::all(g.dim, k) {
        acc = acc + det_sub(&entry, &idx.0, &cols).norm_sqr();
    }
    Ok(acc)
}

/// ∏_k ||g v⁺_{ω_k}||^{2 e_k} for real exponents keyed by 1-based node.
/// Equals ||g v⁺_λ||² for λ = Σ e_k ω_k under the product inner product.
pub fn composite_norm_sq<S: Scalar>(
    g: &GroupElement<S>,
    exponents: &BTreeMap<usize, S>,
) -> Result<S> {
    let mut log_acc = S::zero();
    for (&node, &e) in exponents {
        if e == S::zero() {
            continue;
        }
        let p = highest_weight_norm_sq(g, node)?;
        log_acc = log_acc + e * p.ln();
    }
    Ok(log_acc.exp())
}

/// Minors det_I(first k columns) over all row subsets I, with their
/// holomorphic gradients, for a matrix of dual-number entries.
pub fn minors_first_cols_dual<S: Scalar>(
    dim: usize,
    entry: &dyn Fn(usize, usize) -> CDual<S>,
    k: usize,
) -> Vec<CDual<S>> {
    let cols: Vec<usize> = (0..k).collect();
    WedgeIndex::all(dim, k)
        .iter()
        .map(|idx| det_sub(entry, &idx.0, &cols))
        .collect()
}
