//! Exact combinatorics of simple Lie algebras: Cartan matrices, positive
//! roots, coroot pairings and basis changes between the simple-root and
//! fundamental-weight bases.
//!
//! Everything here is integer or rational arithmetic; no floating point.
//! Positive roots are generated by breadth-first closure from the simple
//! roots using root strings read off the Cartan integers, so each type is
//! data rather than a hardcoded list.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Simple Lie algebra families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieFamily {
    pub fn letter(self) -> char {
        match self {
            LieFamily::A => 'A',
            LieFamily::B => 'B',
            LieFamily::C => 'C',
            LieFamily::D => 'D',
            LieFamily::E => 'E',
            LieFamily::F => 'F',
            LieFamily::G => 'G',
        }
    }
}

/// A simple type `X_n`, validated against the classical rank bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LieType {
    pub family: LieFamily,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: LieFamily, rank: usize) -> Result<Self> {
        let ok = match family {
            LieFamily::A => rank >= 1,
            // C2 is allowed; isomorphic duplicates are permitted
            LieFamily::B | LieFamily::C => rank >= 2,
            LieFamily::D => rank >= 3,
            LieFamily::E => (6..=8).contains(&rank),
            LieFamily::F => rank == 4,
            LieFamily::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Parse strings of the form "A3", "d5", "G2" (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => LieFamily::A,
            Some('B') => LieFamily::B,
            Some('C') => LieFamily::C,
            Some('D') => LieFamily::D,
            Some('E') => LieFamily::E,
            Some('F') => LieFamily::F,
            Some('G') => LieFamily::G,
            _ => return Err(Error::parse(0, format!("expected family letter in {s:?}"))),
        };
        let rest: String = chars.collect();
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::parse(1, format!("expected rank digits in {s:?}")))?;
        LieType::new(fam, rank)
    }

    /// Number of positive roots according to the classical tables.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            LieFamily::A => n * (n + 1) / 2,
            LieFamily::B | LieFamily::C => n * n,
            LieFamily::D => n * (n - 1),
            LieFamily::G => 6,
            LieFamily::F => 24,
            LieFamily::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Cartan matrix with the orientation `A[i][j] = ⟨α_j, h_{α_i}^∨⟩`.
///
/// Under this convention the asymmetric entries sit below the diagonal for
/// B_n (`A[n-1][n-2] = -2`, 0-based), above it for C_n, and G2 is pinned to
/// `[[2,-1],[-3,2]]` (the first node is the long root).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Exact rational inverse.
    pub fn inverse(&self) -> Vec<Vec<Rational>> {
        let n = self.rank;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(self.entry(i, j)))
                    .collect()
            })
            .collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(if i == j { 1 } else { 0 }))
                    .collect()
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| a[r][col] != Rational::from_integer(0))
                .expect("Cartan matrix is invertible");
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col];
            for j in 0..n {
                a[col][j] /= p;
                inv[col][j] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r][col];
                if f == Rational::from_integer(0) {
                    continue;
                }
                for j in 0..n {
                    let va = a[col][j];
                    let vi = inv[col][j];
                    a[r][j] -= f * va;
                    inv[r][j] -= f * vi;
                }
            }
        }
        inv
    }
}

/// The Bourbaki-numbered Cartan matrix of a valid type.
pub fn cartan_matrix(t: &LieType) -> CartanMatrix {
    let n = t.rank;
    let mut e = vec![0i64; n * n];
    let set = |i: usize, j: usize, v: i64, e: &mut Vec<i64>| {
        e[i * n + j] = v;
    };
    for i in 0..n {
        set(i, i, 2, &mut e);
    }
    // edges of the Dynkin diagram as unordered pairs
    let chain: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    match t.family {
        LieFamily::A => {
            for (i, j) in chain {
                set(i, j, -1, &mut e);
                set(j, i, -1, &mut e);
            }
        }
        LieFamily::B => {
            for (i, j) in chain {
                set(i, j, -1, &mut e);
                set(j, i, -1, &mut e);
            }
            // last node short: ⟨α_{n-2}, h_{α_{n-1}}^∨⟩ = -2 (0-based)
            set(n - 1, n - 2, -2, &mut e);
        }
        LieFamily::C => {
            for (i, j) in chain {
                set(i, j, -1, &mut e);
                set(j, i, -1, &mut e);
            }
            // last node long
            set(n - 2, n - 1, -2, &mut e);
        }
        LieFamily::D => {
            for i in 0..n - 2 {
                set(i, i + 1, -1, &mut e);
                set(i + 1, i, -1, &mut e);
            }
            set(n - 3, n - 1, -1, &mut e);
            set(n - 1, n - 3, -1, &mut e);
        }
        LieFamily::E => {
            // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to 4
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n == 8 {
                edges.push((6, 7));
            }
            for (i, j) in edges {
                set(i, j, -1, &mut e);
                set(j, i, -1, &mut e);
            }
        }
        LieFamily::F => {
            for (i, j) in chain {
                set(i, j, -1, &mut e);
                set(j, i, -1, &mut e);
            }
            // nodes 1,2 long; 3,4 short: ⟨α_2, h_{α_3}^∨⟩ = -2 (1-based)
            set(2, 1, -2, &mut e);
        }
        LieFamily::G => {
            set(0, 1, -1, &mut e);
            set(1, 0, -3, &mut e);
        }
    }
    CartanMatrix {
        rank: n,
        entries: e,
    }
}

/// Root in simple-root coordinates (integer coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn simple(i: usize, rank: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    fn plus_simple(&self, i: usize) -> Root {
        let mut coeffs = self.coeffs.clone();
        coeffs[i] += 1;
        Root { coeffs }
    }

    fn minus_simple(&self, i: usize) -> Option<Root> {
        let mut coeffs = self.coeffs.clone();
        coeffs[i] -= 1;
        if coeffs.iter().all(|&c| c >= 0) && coeffs.iter().any(|&c| c > 0) {
            Some(Root { coeffs })
        } else {
            None
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            if c == 1 {
                write!(f, "a{}", i + 1)?;
            } else {
                write!(f, "{}a{}", c, i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Weight in fundamental-weight coordinates (rational coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Weight {
    pub coeffs: Vec<Rational>,
}

impl Weight {
    pub fn from_integers(v: &[i64]) -> Self {
        Weight {
            coeffs: v.iter().map(|&x| Rational::from_integer(x)).collect(),
        }
    }

    pub fn is_integral_dominant(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && *c >= Rational::from_integer(0))
    }
}

/// A simple type together with its Cartan matrix and the full list of
/// positive roots, sorted by height then lexicographically.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub cartan: CartanMatrix,
    pub positive_roots: Vec<Root>,
    /// Symmetrizer d with d_i A_ij = d_j A_ji; (α_i, α_i) = 2 d_i.
    pub symmetrizer: Vec<i64>,
}

/// Generate the full positive system by closing the simple roots under
/// root-string addition.
pub fn positive_roots(t: &LieType) -> RootSystem {
    let cartan = cartan_matrix(t);
    let n = t.rank;
    let mut found: BTreeSet<Root> = (0..n).map(|i| Root::simple(i, n)).collect();
    let mut frontier: Vec<Root> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                // α_i-string through β: β - pα_i ... β + qα_i with
                // p - q = ⟨β, h_{α_i}^∨⟩
                let pairing: i64 = (0..n).map(|j| cartan.entry(i, j) * beta.coeffs[j]).sum();
                let mut p = 0i64;
                let mut cur = beta.clone();
                while let Some(prev) = cur.minus_simple(i) {
                    if found.contains(&prev) {
                        p += 1;
                        cur = prev;
                    } else {
                        break;
                    }
                }
                if p - pairing >= 1 {
                    let up = beta.plus_simple(i);
                    if found.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut positive: Vec<Root> = found.into_iter().collect();
    positive.sort_by_key(|r| (r.height(), r.coeffs.clone()));
    let symmetrizer = symmetrizer(&cartan);
    RootSystem {
        lie_type: *t,
        cartan,
        positive_roots: positive,
        symmetrizer,
    }
}

/// Minimal positive integers d with d_i A_ij = d_j A_ji.
fn symmetrizer(cartan: &CartanMatrix) -> Vec<i64> {
    let n = cartan.rank;
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::from_integer(1));
    // propagate along Dynkin edges; the diagram is connected
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j || cartan.entry(i, j) == 0 {
                    continue;
                }
                if let (Some(di), None) = (d[i], d[j]) {
                    // d_i A_ij = d_j A_ji
                    let dj = di * Rational::new(cartan.entry(i, j), cartan.entry(j, i));
                    d[j] = Some(dj);
                    changed = true;
                }
            }
        }
    }
    let vals: Vec<Rational> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let lcm_den = vals
        .iter()
        .fold(1i64, |acc, v| num_integer::lcm(acc, *v.denom()));
    let ints: Vec<i64> = vals
        .iter()
        .map(|v| (*v * Rational::from_integer(lcm_den)).to_integer())
        .collect();
    let g = ints.iter().fold(0i64, |acc, &v| num_integer::gcd(acc, v));
    ints.iter().map(|&v| v / g).collect()
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// ⟨β, h_{α_i}^∨⟩ for a root β in simple-root coordinates.
    pub fn pairing_root(&self, r: &Root, i: usize) -> Result<i64> {
        self.check_index(i)?;
        Ok((0..self.rank())
            .map(|j| self.cartan.entry(i, j) * r.coeffs[j])
            .sum())
    }

    /// ⟨λ, h_{α_i}^∨⟩ for a weight λ in fundamental-weight coordinates:
    /// by duality this is the i-th coefficient.
    pub fn pairing_weight(&self, w: &Weight, i: usize) -> Result<Rational> {
        self.check_index(i)?;
        Ok(w.coeffs[i])
    }

    /// Fundamental-weight coordinates of a root.
    pub fn root_to_weight_basis(&self, r: &Root) -> Weight {
        let coeffs = (0..self.rank())
            .map(|i| {
                Rational::from_integer(
                    (0..self.rank())
                        .map(|j| self.cartan.entry(i, j) * r.coeffs[j])
                        .sum(),
                )
            })
            .collect();
        Weight { coeffs }
    }

    /// Simple-root coordinates of a weight (exact rational inverse map).
    pub fn weight_to_root_basis(&self, w: &Weight) -> Vec<Rational> {
        let inv = self.cartan.inverse();
        (0..self.rank())
            .map(|j| {
                (0..self.rank()).fold(Rational::from_integer(0), |acc, i| {
                    acc + inv[j][i] * w.coeffs[i]
                })
            })
            .collect()
    }

    /// Symmetric invariant form (α_i, α_j) = d_i A_ij, normalized so short
    /// roots have squared length 2 up to the overall integer scale.
    pub fn root_inner(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            for j in 0..n {
                acc += a.coeffs[i] * self.symmetrizer[i] * self.cartan.entry(i, j) * b.coeffs[j];
            }
        }
        acc
    }

    /// ⟨λ, h_β^∨⟩ = 2(λ, β)/(β, β) for an arbitrary positive root β,
    /// computed in exact rational arithmetic.
    pub fn coroot_pairing_weight(&self, w: &Weight, beta: &Root) -> Rational {
        // (ω_i, β) = c_i(β) d_i
        let mut num = Rational::from_integer(0);
        for i in 0..self.rank() {
            num += w.coeffs[i] * Rational::from_integer(beta.coeffs[i] * self.symmetrizer[i]);
        }
        let bb = Rational::from_integer(self.root_inner(beta, beta));
        Rational::from_integer(2) * num / bb
    }

    /// Sum of all positive roots (equals 2ϱ).
    pub fn sum_of_positive_roots(&self) -> Root {
        let mut coeffs = vec![0i64; self.rank()];
        for r in &self.positive_roots {
            for (c, rc) in coeffs.iter_mut().zip(&r.coeffs) {
                *c += rc;
            }
        }
        Root { coeffs }
    }

    pub fn contains_positive(&self, r: &Root) -> bool {
        self.positive_roots
            .binary_search_by(|probe| {
                (probe.height(), probe.coeffs.clone()).cmp(&(r.height(), r.coeffs.clone()))
            })
            .is_ok()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                rank: self.rank(),
            })
        }
    }
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        positive_roots(&LieType::parse(s).unwrap())
    }

    #[test]
    fn rank_bounds() {
        assert!(LieType::parse("A1").is_ok());
        assert!(LieType::parse("B1").is_err());
        assert!(LieType::parse("C2").is_ok());
        assert!(LieType::parse("D2").is_err());
        assert!(LieType::parse("E5").is_err());
        assert!(LieType::parse("E9").is_err());
        assert!(LieType::parse("F4").is_ok());
        assert!(LieType::parse("F3").is_err());
        assert!(LieType::parse("G2").is_ok());
        assert!(LieType::parse("g2").is_ok());
        assert!(LieType::parse("H2").is_err());
    }

    #[test]
    fn cartan_a1_rank_one() {
        let c = cartan_matrix(&LieType::parse("A1").unwrap());
        assert_eq!(c.rows(), vec![vec![2]]);
    }

    #[test]
    fn cartan_a3_standard_table() {
        let c = cartan_matrix(&LieType::parse("A3").unwrap());
        assert_eq!(
            c.rows(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        // cross-check A·A⁻¹ = I by brute force in rationals
        let inv = c.inverse();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Rational::from_integer(0);
                for k in 0..3 {
                    acc += Rational::from_integer(c.entry(i, k)) * inv[k][j];
                }
                assert_eq!(acc, Rational::from_integer(if i == j { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn cartan_g2_pinned_orientation() {
        let c = cartan_matrix(&LieType::parse("G2").unwrap());
        assert_eq!(c.rows(), vec![vec![2, -1], vec![-3, 2]]);
        // off-diagonal product 3, verified independently by the brute-force
        // root generation reaching exactly 6 positive roots
        assert_eq!(c.entry(0, 1) * c.entry(1, 0), 3);
        assert_eq!(rs("G2").positive_roots.len(), 6);
    }

    #[test]
    fn positive_root_counts_match_classical_table() {
        let cases = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("A5", 15),
            ("A6", 21),
            ("A7", 28),
            ("A8", 36),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("B5", 25),
            ("B8", 64),
            ("C2", 4),
            ("C3", 9),
            ("C4", 16),
            ("C8", 64),
            ("D3", 6),
            ("D4", 12),
            ("D5", 20),
            ("D8", 56),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ];
        for (name, count) in cases {
            let sys = rs(name);
            assert_eq!(sys.positive_roots.len(), count, "{name}");
            assert_eq!(sys.lie_type.positive_root_count(), count, "{name} table");
        }
    }

    #[test]
    fn a2_positive_roots_explicit() {
        let sys = rs("A2");
        let coeffs: Vec<Vec<i64>> = sys
            .positive_roots
            .iter()
            .map(|r| r.coeffs.clone())
            .collect();
        assert_eq!(coeffs, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn a3_contains_highest_root() {
        let sys = rs("A3");
        assert!(sys.contains_positive(&Root {
            coeffs: vec![1, 1, 1]
        }));
        assert_eq!(sys.positive_roots.len(), 6);
    }

    #[test]
    fn additive_closure_every_type() {
        // every positive root is simple or r' + α_i for a positive root r'
        for name in [
            "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "D5",
            "G2", "F4", "E6", "E7", "E8",
        ] {
            let sys = rs(name);
            for r in &sys.positive_roots {
                if r.height() == 1 {
                    continue;
                }
                let decomposable = (0..sys.rank()).any(|i| {
                    r.minus_simple(i)
                        .map(|prev| sys.contains_positive(&prev))
                        .unwrap_or(false)
                });
                assert!(decomposable, "{name}: {r} lacks a simple summand");
            }
            // simple roots are exactly the height-1 members
            let simple_count = sys
                .positive_roots
                .iter()
                .filter(|r| r.height() == 1)
                .count();
            assert_eq!(simple_count, sys.rank(), "{name}");
        }
    }

    #[test]
    fn fundamental_weight_duality() {
        let a2 = rs("A2");
        let omega1 = Weight::from_integers(&[1, 0]);
        assert_eq!(
            a2.pairing_weight(&omega1, 0).unwrap(),
            Rational::from_integer(1)
        );
        assert_eq!(
            a2.pairing_weight(&omega1, 1).unwrap(),
            Rational::from_integer(0)
        );
        assert!(a2.pairing_weight(&omega1, 2).is_err());
        assert!(omega1.is_integral_dominant());
        assert!(!Weight {
            coeffs: vec![Rational::new(1, 2); 2]
        }
        .is_integral_dominant());
    }

    #[test]
    fn pairing_is_linear_over_rationals() {
        let sys = rs("B3");
        // spot-check: pairing of an integer combination equals the combination
        let a = &sys.positive_roots[4];
        let b = &sys.positive_roots[7];
        for i in 0..3 {
            let pa = sys.pairing_root(a, i).unwrap();
            let pb = sys.pairing_root(b, i).unwrap();
            let combo = Root {
                coeffs: a
                    .coeffs
                    .iter()
                    .zip(&b.coeffs)
                    .map(|(x, y)| 3 * x - 5 * y)
                    .collect(),
            };
            assert_eq!(sys.pairing_root(&combo, i).unwrap(), 3 * pa - 5 * pb);
        }
        // and for rational weights
        let wa = sys.root_to_weight_basis(a);
        let half = Rational::new(1, 2);
        let scaled = Weight {
            coeffs: wa.coeffs.iter().map(|c| c * half).collect(),
        };
        for i in 0..3 {
            assert_eq!(
                sys.pairing_weight(&scaled, i).unwrap(),
                Rational::from_integer(sys.pairing_root(a, i).unwrap()) * half
            );
        }
    }

    #[test]
    fn root_weight_round_trip_exact() {
        for name in ["A1", "A4", "B3", "C3", "D4", "G2", "F4", "E6"] {
            let sys = rs(name);
            for r in &sys.positive_roots {
                let w = sys.root_to_weight_basis(r);
                let back = sys.weight_to_root_basis(&w);
                for (c, b) in r.coeffs.iter().zip(&back) {
                    assert_eq!(Rational::from_integer(*c), *b, "{name}: {r}");
                }
            }
        }
    }

    #[test]
    fn basis_change_examples() {
        // α₁ in A1 → 2ω₁
        let a1 = rs("A1");
        let w = a1.root_to_weight_basis(&Root::simple(0, 1));
        assert_eq!(w.coeffs, vec![Rational::from_integer(2)]);
        // δ_B = 2α₁+2α₂ in A2 → 2ω₁+2ω₂
        let a2 = rs("A2");
        let w = a2.root_to_weight_basis(&Root { coeffs: vec![2, 2] });
        assert_eq!(w.coeffs, vec![Rational::from_integer(2); 2]);
        // 2ϱ in any type → all-2 weight vector
        for name in ["A3", "B3", "C4", "D4", "G2", "F4", "E6"] {
            let sys = rs(name);
            let two_rho = sys.sum_of_positive_roots();
            let w = sys.root_to_weight_basis(&two_rho);
            assert!(
                w.coeffs.iter().all(|c| *c == Rational::from_integer(2)),
                "{name}: 2ϱ = {w:?}"
            );
        }
    }

    #[test]
    fn symmetrizer_values() {
        assert_eq!(rs("A3").symmetrizer, vec![1, 1, 1]);
        assert_eq!(rs("B3").symmetrizer, vec![2, 2, 1]);
        assert_eq!(rs("C3").symmetrizer, vec![1, 1, 2]);
        assert_eq!(rs("G2").symmetrizer, vec![3, 1]);
        assert_eq!(rs("F4").symmetrizer, vec![2, 2, 1, 1]);
    }

    #[test]
    fn roots_serialize_as_integer_vectors() {
        let sys = rs("A2");
        let json = serde_json::to_string(&sys.positive_roots).unwrap();
        assert_eq!(json, "[[0,1],[1,0],[1,1]]");
    }
}
