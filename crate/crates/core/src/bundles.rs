//! Integer-lattice model of the group of principal circle bundles over a
//! flag manifold. A bundle is its Euler vector (ℓ_α) over Σ\Θ; sums are
//! lattice sums, fractional canonical powers come from δ_P and the Fano
//! index, and Sasaki data store the positive weight λ(L) with the Euler
//! vector derived by negation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parabolic::ParabolicDatum;
use crate::rootsystem::{Rational, Weight};

/// Euler class of a principal S¹-bundle in the basis e(Q(ω_α)), α ∈ Σ\Θ.
/// Serializes as {"base":"A3/{1,3}","ell":[-1]}.
#[derive(Debug, Clone, PartialEq)]
pub struct BundleVector {
    pub parabolic: ParabolicDatum,
    pub ell: Vec<i64>,
}

impl Serialize for BundleVector {
    fn serialize<S>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("BundleVector", 2)?;
        s.serialize_field("base", &self.parabolic.to_string())?;
        s.serialize_field("ell", &self.ell)?;
        s.end()
    }
}

impl BundleVector {
    pub fn new(parabolic: ParabolicDatum, ell: Vec<i64>) -> Result<Self> {
        if ell.len() != parabolic.picard_rank() {
            return Err(Error::LengthMismatch {
                expected: parabolic.picard_rank(),
                got: ell.len(),
            });
        }
        Ok(BundleVector { parabolic, ell })
    }

    pub fn trivial(parabolic: ParabolicDatum) -> Self {
        let n = parabolic.picard_rank();
        BundleVector {
            parabolic,
            ell: vec![0; n],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.ell.iter().all(|&l| l == 0)
    }

    pub fn add(&self, other: &BundleVector) -> Result<BundleVector> {
        if !self.parabolic.same_base(&other.parabolic) {
            return Err(Error::MismatchedBase);
        }
        Ok(BundleVector {
            parabolic: self.parabolic.clone(),
            ell: self
                .ell
                .iter()
                .zip(&other.ell)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> BundleVector {
        BundleVector {
            parabolic: self.parabolic.clone(),
            ell: self.ell.iter().map(|l| -l).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> BundleVector {
        BundleVector {
            parabolic: self.parabolic.clone(),
            ell: self.ell.iter().map(|l| k * l).collect(),
        }
    }

    /// Local connection bookkeeping: per α ∈ Σ\Θ, the exponent 2ℓ_α carried
    /// by ||s_U v⁺_{ω_α}|| inside the log of the connection form. Zero
    /// entries are dropped, so the trivial bundle yields an empty list.
    pub fn connection_descriptor(&self) -> ConnectionDescriptor {
        let exponents = self
            .parabolic
            .complement()
            .iter()
            .zip(&self.ell)
            .filter(|(_, &l)| l != 0)
            .map(|(&node, &l)| NormExponent {
                node: node + 1,
                exponent: 2 * l,
            })
            .collect();
        ConnectionDescriptor { exponents }
    }
}

/// Symbolic record of the connection-form potential; consumed by the chart
/// module for numerical evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConnectionDescriptor {
    pub exponents: Vec<NormExponent>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormExponent {
    /// 1-based simple-root index.
    pub node: usize,
    /// Exponent on ||s_U v⁺_{ω_node}|| (twice the Euler coefficient).
    pub exponent: i64,
}

/// The circle bundle of K^{⊗ℓ/I}: Euler coefficients −ℓ⟨δ_P,h_α^∨⟩/I.
/// The gcd defining the Fano index makes the division exact.
pub fn canonical_fraction_bundle(parabolic: &ParabolicDatum, ell: i64) -> BundleVector {
    let fano = parabolic.fano_index();
    let (_, w) = parabolic.delta_p();
    let ellv = parabolic
        .complement()
        .iter()
        .map(|&i| -ell * w.coeffs[i].to_integer() / fano)
        .collect();
    BundleVector {
        parabolic: parabolic.clone(),
        ell: ellv,
    }
}

/// A compact homogeneous Sasaki manifold Q(L): stores the positive
/// coefficients of λ(L) = Σ ℓ_α ω_α; the (negative) Euler vector of the
/// bundle is derived, which keeps the two sign conventions from colliding.
#[derive(Debug, Clone, PartialEq)]
pub struct SasakiDatum {
    pub parabolic: ParabolicDatum,
    /// ℓ_α > 0 over Σ\Θ in complement order.
    pub lambda_coeffs: Vec<i64>,
}

impl SasakiDatum {
    pub fn new(parabolic: ParabolicDatum, lambda_coeffs: Vec<i64>) -> Result<Self> {
        if lambda_coeffs.len() != parabolic.picard_rank() {
            return Err(Error::LengthMismatch {
                expected: parabolic.picard_rank(),
                got: lambda_coeffs.len(),
            });
        }
        if let Some(&bad) = lambda_coeffs.iter().find(|&&l| l <= 0) {
            return Err(Error::NonPositiveCoefficient(bad));
        }
        Ok(SasakiDatum {
            parabolic,
            lambda_coeffs,
        })
    }

    /// λ(L) as a dominant weight with support exactly Σ\Θ.
    pub fn sasaki_weight(&self) -> Weight {
        let mut coeffs = vec![Rational::from_integer(0); self.parabolic.rank()];
        for (&node, &l) in self.parabolic.complement().iter().zip(&self.lambda_coeffs) {
            coeffs[node] = Rational::from_integer(l);
        }
        Weight { coeffs }
    }

    /// Pairings ⟨λ(L), h_α^∨⟩ over Σ\Θ (equals the stored coefficients).
    pub fn pairing_vector(&self) -> Vec<i64> {
        self.lambda_coeffs.clone()
    }

    /// The underlying bundle: e(Q(L)) = −λ coefficients.
    pub fn euler_vector(&self) -> BundleVector {
        BundleVector {
            parabolic: self.parabolic.clone(),
            ell: self.lambda_coeffs.iter().map(|l| -l).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::{full_flag, grassmannian_2_4, projective_space};
    use crate::rootsystem::LieType;

    fn w6() -> ParabolicDatum {
        ParabolicDatum::parse("A2/{}").unwrap()
    }

    #[test]
    fn lattice_sum_and_identity() {
        let p = w6();
        let a = BundleVector::new(p.clone(), vec![1, 0]).unwrap();
        let b = BundleVector::new(p.clone(), vec![0, 1]).unwrap();
        assert_eq!(a.add(&b).unwrap().ell, vec![1, 1]);
        let zero = BundleVector::trivial(p.clone());
        assert_eq!(a.add(&zero).unwrap(), a);
        // X_{1,1}: Q(−ω₁) + Q(−ω₂)
        let x11 = a.neg().add(&b.neg()).unwrap();
        assert_eq!(x11.ell, vec![-1, -1]);
        assert_eq!(canonical_fraction_bundle(&p, 1), x11);
    }

    #[test]
    fn mismatched_bases_rejected() {
        let a = BundleVector::trivial(w6());
        let b = BundleVector::trivial(grassmannian_2_4());
        assert_eq!(a.add(&b).unwrap_err(), Error::MismatchedBase);
    }

    #[test]
    fn free_abelian_group_small_vectors() {
        let p = w6();
        for e1 in -2i64..=2 {
            for e2 in -2i64..=2 {
                let v = BundleVector::new(p.clone(), vec![e1, e2]).unwrap();
                let sum = v.add(&v.neg()).unwrap();
                assert!(sum.is_trivial());
                assert_eq!(v.add(&v).unwrap(), v.scale(2));
            }
        }
    }

    #[test]
    fn canonical_fraction_examples() {
        assert_eq!(
            canonical_fraction_bundle(&projective_space(1), 1).ell,
            vec![-1]
        );
        for n in 2..=5 {
            assert_eq!(
                canonical_fraction_bundle(&projective_space(n), 1).ell,
                vec![-1]
            );
        }
        assert_eq!(
            canonical_fraction_bundle(&grassmannian_2_4(), 1).ell,
            vec![-1]
        );
        assert_eq!(canonical_fraction_bundle(&w6(), 1).ell, vec![-1, -1]);
        let d4 = full_flag(&LieType::parse("D4").unwrap());
        assert_eq!(canonical_fraction_bundle(&d4, 1).ell, vec![-1; 4]);
    }

    #[test]
    fn canonical_fraction_linearity_in_ell() {
        for p in [projective_space(2), grassmannian_2_4(), w6()] {
            for l in 1..=4 {
                assert_eq!(
                    canonical_fraction_bundle(&p, l),
                    canonical_fraction_bundle(&p, 1).scale(l)
                );
            }
        }
    }

    #[test]
    fn descriptor_exponents() {
        // S³ over CP¹
        let s3 = canonical_fraction_bundle(&projective_space(1), 1);
        let d = s3.connection_descriptor();
        assert_eq!(d.exponents.len(), 1);
        assert_eq!(d.exponents[0].node, 1);
        assert_eq!(d.exponents[0].exponent, -2);
        // trivial bundle
        let t = BundleVector::trivial(w6());
        assert!(t.connection_descriptor().exponents.is_empty());
        // X_{1,1}
        let x11 = canonical_fraction_bundle(&w6(), 1);
        let d = x11.connection_descriptor();
        let exps: Vec<(usize, i64)> = d.exponents.iter().map(|e| (e.node, e.exponent)).collect();
        assert_eq!(exps, vec![(1, -2), (2, -2)]);
    }

    #[test]
    fn descriptor_halved_recovers_euler_vector() {
        // e(Q) = Σ ℓ_α [Ω_α]: the stored exponent is exactly 2ℓ_α
        for ell in [vec![-1, 2], vec![3, -4]] {
            let q = BundleVector::new(w6(), ell.clone()).unwrap();
            let mut halved = vec![0i64; 2];
            for e in q.connection_descriptor().exponents {
                halved[e.node - 1] = e.exponent / 2;
            }
            assert_eq!(halved, ell);
        }
    }

    #[test]
    fn bundle_vector_json_shape() {
        let q = canonical_fraction_bundle(&grassmannian_2_4(), 1);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"base":"A3/{1,3}","ell":[-1]}"#);
    }

    #[test]
    fn sasaki_weight_examples() {
        // ℓ=(1) over CPⁿ → ω₁
        let s = SasakiDatum::new(projective_space(3), vec![1]).unwrap();
        let w = s.sasaki_weight();
        assert_eq!(w.coeffs[0], Rational::from_integer(1));
        assert!(w.coeffs[1..]
            .iter()
            .all(|c| *c == Rational::from_integer(0)));
        assert!(w.is_integral_dominant());
        // ℓ=(1,1) over W₆ → ω₁+ω₂, pairing vector (1,1)
        let s = SasakiDatum::new(w6(), vec![1, 1]).unwrap();
        assert_eq!(s.pairing_vector(), vec![1, 1]);
        assert_eq!(s.euler_vector().ell, vec![-1, -1]);
        // ℓ=(2) over CP¹ → 2ω₁ (lens space datum)
        let s = SasakiDatum::new(projective_space(1), vec![2]).unwrap();
        assert_eq!(s.sasaki_weight().coeffs[0], Rational::from_integer(2));
        // nonpositive rejected
        assert_eq!(
            SasakiDatum::new(w6(), vec![1, 0]).unwrap_err(),
            Error::NonPositiveCoefficient(0)
        );
    }
}
