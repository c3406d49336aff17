//! Tiny multivariate integer polynomials, used to render the chart minors
//! and potentials as human-readable strings in the reports.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

/// Polynomial in z₁..z_n with integer coefficients; keys are exponent
/// vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl Poly {
    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(vec![0; nvars], c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, 1);
        Poly { nvars, terms }
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| *c != 0);
        self
    }

    pub fn is_constant_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && *c == 1)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let mut terms = self.terms;
        for (e, c) in rhs.terms {
            *terms.entry(e).or_insert(0) += c;
        }
        Poly {
            nvars: self.nvars.max(rhs.nvars),
            terms,
        }
        .normalized()
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        let mut terms = self.terms;
        for (e, c) in rhs.terms {
            *terms.entry(e).or_insert(0) -= c;
        }
        Poly {
            nvars: self.nvars.max(rhs.nvars),
            terms,
        }
        .normalized()
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        let nvars = self.nvars.max(rhs.nvars);
        let mut terms: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = vec![0u32; nvars];
                for (i, slot) in e.iter_mut().enumerate() {
                    *slot = ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0);
                }
                *terms.entry(e).or_insert(0) += ca * cb;
            }
        }
        Poly { nvars, terms }.normalized()
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly {
            nvars: 0,
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(0, 1)
    }
}

impl Poly {
    /// Leading coefficient in display order.
    pub fn leading_coefficient(&self) -> i64 {
        self.terms.iter().next_back().map(|(_, &c)| c).unwrap_or(0)
    }

    pub fn negated(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest monomial first
        for (e, &c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("z{}", i + 1)
                    } else {
                        format!("z{}^{}", i + 1, p)
                    }
                })
                .collect();
            let mono = mono.join(" ");
            if first {
                match (c, mono.is_empty()) {
                    (1, false) => write!(f, "{mono}")?,
                    (-1, false) => write!(f, "-{mono}")?,
                    (_, false) => write!(f, "{c} {mono}")?,
                    (_, true) => write!(f, "{c}")?,
                }
                first = false;
            } else {
                let sign = if c < 0 { " - " } else { " + " };
                let a = c.abs();
                match (a, mono.is_empty()) {
                    (1, false) => write!(f, "{sign}{mono}")?,
                    (_, false) => write!(f, "{sign}{a} {mono}")?,
                    (_, true) => write!(f, "{sign}{a}")?,
                }
            }
        }
        Ok(())
    }
}
