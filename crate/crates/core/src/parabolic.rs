//! Invariants of the flag manifold attached to a painted Dynkin datum
//! Θ ⊂ Σ: complement roots, the anticanonical weight δ_P, Fano index,
//! Picard rank, and minuscule flags.

use num_integer::Integer;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsystem::{positive_roots, LieType, Rational, Root, RootSystem, Weight};

/// A root system together with a painted subset Θ of the simple roots.
/// Θ = Σ is rejected: the quotient would be a point and every downstream
/// formula divides by data that vanishes there.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParabolicDatum {
    pub root_system: RootSystem,
    /// 0-based indices of the painted simple roots, sorted.
    pub theta: Vec<usize>,
}

impl ParabolicDatum {
    pub fn new(root_system: RootSystem, mut theta: Vec<usize>) -> Result<Self> {
        theta.sort_unstable();
        theta.dedup();
        let rank = root_system.rank();
        if let Some(&bad) = theta.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange {
                index: bad + 1,
                rank,
            });
        }
        if theta.len() == rank {
            return Err(Error::ThetaIsFull);
        }
        Ok(ParabolicDatum { root_system, theta })
    }

    pub fn from_type(t: &LieType, theta: Vec<usize>) -> Result<Self> {
        Self::new(positive_roots(t), theta)
    }

    /// Parse "A3/{1,3}": type, then the painted set as 1-based indices.
    pub fn parse(s: &str) -> Result<Self> {
        let slash = s
            .find('/')
            .ok_or_else(|| Error::parse(s.len(), "expected '/' after the Lie type"))?;
        let t = LieType::parse(&s[..slash])?;
        let rest = s[slash + 1..].trim();
        if !rest.starts_with('{') || !rest.ends_with('}') {
            return Err(Error::parse(slash + 1, "expected '{i,j,...}' painted set"));
        }
        let inner = &rest[1..rest.len() - 1];
        let mut theta = Vec::new();
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                let idx: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(slash + 1, format!("bad index {part:?}")))?;
                if idx == 0 {
                    return Err(Error::parse(slash + 1, "indices are 1-based"));
                }
                theta.push(idx - 1);
            }
        }
        Self::from_type(&t, theta)
    }

    pub fn rank(&self) -> usize {
        self.root_system.rank()
    }

    /// Σ\Θ as sorted 0-based indices.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|i| !self.theta.contains(i))
            .collect()
    }

    pub fn picard_rank(&self) -> usize {
        self.rank() - self.theta.len()
    }

    /// Positive roots with at least one nonzero coefficient outside Θ,
    /// i.e. Π⁺\⟨Θ⟩⁺.
    pub fn complement_roots(&self) -> Vec<Root> {
        self.root_system
            .positive_roots
            .iter()
            .filter(|r| {
                r.coeffs
                    .iter()
                    .enumerate()
                    .any(|(i, &c)| c != 0 && !self.theta.contains(&i))
            })
            .cloned()
            .collect()
    }

    /// δ_P as simple-root coordinates and fundamental-weight coordinates.
    pub fn delta_p(&self) -> (Root, Weight) {
        let mut coeffs = vec![0i64; self.rank()];
        for r in self.complement_roots() {
            for (c, rc) in coeffs.iter_mut().zip(&r.coeffs) {
                *c += rc;
            }
        }
        let root = Root { coeffs };
        let weight = self.root_system.root_to_weight_basis(&root);
        (root, weight)
    }

    /// gcd of ⟨δ_P, h_α^∨⟩ over α ∈ Σ\Θ.
    pub fn fano_index(&self) -> i64 {
        let (_, w) = self.delta_p();
        self.complement()
            .iter()
            .fold(0i64, |acc, &i| acc.gcd(&w.coeffs[i].to_integer()))
    }

    /// Whether ω_α pairs into {0,1} with every positive coroot.
    /// Only the weight is examined; α is not required to be outside Θ.
    pub fn is_minuscule(&self, alpha: usize) -> Result<bool> {
        if alpha >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: alpha + 1,
                rank: self.rank(),
            });
        }
        let mut coeffs = vec![Rational::from_integer(0); self.rank()];
        coeffs[alpha] = Rational::from_integer(1);
        let omega = Weight { coeffs };
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        Ok(self.root_system.positive_roots.iter().all(|beta| {
            let p = self.root_system.coroot_pairing_weight(&omega, beta);
            p == zero || p == one
        }))
    }

    pub fn flag_invariants(&self) -> FlagInvariants {
        let complement_pos_roots = self.complement_roots();
        let m_theta = complement_pos_roots.len();
        let (delta_root, delta_weight) = self.delta_p();
        let complement = self.complement();
        let pairings: Vec<i64> = complement
            .iter()
            .map(|&i| delta_weight.coeffs[i].to_integer())
            .collect();
        let fano_index = pairings.iter().fold(0i64, |acc, p| acc.gcd(p));
        let minuscule_flags: Vec<Option<bool>> = (0..self.rank())
            .map(|i| {
                if complement.contains(&i) {
                    Some(self.is_minuscule(i).expect("index in range"))
                } else {
                    None
                }
            })
            .collect();
        FlagInvariants {
            lie_type: self.root_system.lie_type.to_string(),
            theta: self.theta.iter().map(|i| i + 1).collect(),
            complement: complement.iter().map(|i| i + 1).collect(),
            complement_pos_roots: complement_pos_roots
                .iter()
                .map(|r| r.coeffs.clone())
                .collect(),
            m_theta,
            picard_rank: self.picard_rank(),
            delta_p_root: delta_root.coeffs.clone(),
            delta_p_weight: delta_weight.coeffs.iter().map(|c| c.to_integer()).collect(),
            pairings,
            fano_index,
            minuscule_flags,
        }
    }

    /// ⟨δ_P, h_α^∨⟩ for a single complement node (0-based).
    pub fn delta_pairing(&self, alpha: usize) -> Result<i64> {
        if alpha >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: alpha + 1,
                rank: self.rank(),
            });
        }
        let (_, w) = self.delta_p();
        Ok(w.coeffs[alpha].to_integer())
    }

    pub fn same_base(&self, other: &ParabolicDatum) -> bool {
        self.root_system.lie_type == other.root_system.lie_type && self.theta == other.theta
    }
}

impl std::fmt::Display for ParabolicDatum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let inner: Vec<String> = self.theta.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}/{{{}}}", self.root_system.lie_type, inner.join(","))
    }
}

/// All derived flag-manifold invariants, JSON-friendly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlagInvariants {
    pub lie_type: String,
    /// 1-based painted indices.
    pub theta: Vec<usize>,
    /// 1-based complement Σ\Θ.
    pub complement: Vec<usize>,
    pub complement_pos_roots: Vec<Vec<i64>>,
    /// Complex dimension of X_P.
    pub m_theta: usize,
    pub picard_rank: usize,
    pub delta_p_root: Vec<i64>,
    pub delta_p_weight: Vec<i64>,
    /// ⟨δ_P, h_α^∨⟩ for α ∈ Σ\Θ, in complement order.
    pub pairings: Vec<i64>,
    pub fano_index: i64,
    /// Per simple root; only populated outside Θ.
    pub minuscule_flags: Vec<Option<bool>>,
}

/// Convenience constructors for the recurring examples.
pub fn projective_space(n: usize) -> ParabolicDatum {
    // CP^n = A_n with Θ = Σ\{α₁}
    let t = LieType::parse(&format!("A{n}")).unwrap();
    ParabolicDatum::from_type(&t, (1..n).collect()).unwrap()
}

pub fn grassmannian_2_4() -> ParabolicDatum {
    let t = LieType::parse("A3").unwrap();
    ParabolicDatum::from_type(&t, vec![0, 2]).unwrap()
}

pub fn full_flag(t: &LieType) -> ParabolicDatum {
    ParabolicDatum::from_type(t, Vec::new()).unwrap()
}
