//! Sparse multivariate polynomials over `Z/m`.

mod exponent;
mod order;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

pub use exponent::{BoxIter, ExponentVector};
pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::modarith::{divides_mod, Modulus};

/// A term `coeff * x^exponents` with `coeff` in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigUint,
    pub exponents: ExponentVector,
}

impl Term {
    pub fn new(coeff: BigUint, exponents: ExponentVector) -> Self {
        Term { coeff, exponents }
    }
}

/// `s | t`: the coefficient of `s` divides that of `t` in `Z/m`, and the
/// exponent vector of `s` is componentwise below that of `t`.
pub fn term_divides(s: &Term, t: &Term, m: &Modulus) -> bool {
    s.exponents.divides(&t.exponents) && divides_mod(&s.coeff, &t.coeff, m)
}

/// An element of `(Z/m)[x_1..x_n]`.
///
/// Terms are kept in a map keyed by exponent vector; every stored
/// coefficient lies in `[1, m)`, so the zero polynomial is the empty map and
/// structural equality is ring equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    modulus: Modulus,
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigUint>,
}

impl Polynomial {
    pub fn zero(modulus: &Modulus, nvars: usize) -> Self {
        Polynomial {
            modulus: modulus.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(modulus: &Modulus, nvars: usize, c: BigUint) -> Self {
        Self::monomial(modulus, c, ExponentVector::zeros(nvars))
    }

    /// The variable `x_i`, zero-based.
    pub fn variable(modulus: &Modulus, nvars: usize, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::VariableIndex { index: i, nvars });
        }
        Ok(Self::monomial(
            modulus,
            BigUint::one(),
            ExponentVector::unit(nvars, i, 1),
        ))
    }

    pub fn monomial(modulus: &Modulus, coeff: BigUint, exponents: ExponentVector) -> Self {
        let mut p = Self::zero(modulus, exponents.len());
        p.add_term(coeff, exponents);
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unreduced) terms.
    pub fn from_terms<I>(modulus: &Modulus, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, BigUint)>,
    {
        let mut p = Self::zero(modulus, nvars);
        for (exps, coeff) in terms {
            if exps.len() != nvars {
                return Err(Error::ExponentLength {
                    expected: nvars,
                    got: exps.len(),
                });
            }
            p.add_term(coeff, exps);
        }
        Ok(p)
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of their exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigUint)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> BigUint {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    pub fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars || self.modulus != other.modulus {
            return Err(Error::RingMismatch {
                lhs_modulus: self.modulus.to_string(),
                lhs_nvars: self.nvars,
                rhs_modulus: other.modulus.to_string(),
                rhs_nvars: other.nvars,
            });
        }
        Ok(())
    }

    /// `self += coeff * x^exps`, coefficient taken mod `m`.
    pub(crate) fn add_term(&mut self, coeff: BigUint, exps: ExponentVector) {
        debug_assert_eq!(exps.len(), self.nvars);
        let coeff = self.modulus.reduce(&coeff);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = (o.get() + coeff) % self.modulus.value();
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += scale * x^shift * other`; rings are assumed equal.
    pub(crate) fn add_scaled(&mut self, scale: &BigUint, shift: Option<&ExponentVector>, other: &Polynomial) {
        let scale = self.modulus.reduce(scale);
        if scale.is_zero() {
            return;
        }
        for (exps, c) in &other.terms {
            let exps = match shift {
                Some(s) => exps.add(s),
                None => exps.clone(),
            };
            self.add_term(&scale * c, exps);
        }
    }

    /// The additive inverse of a residue.
    fn negate_residue(&self, c: &BigUint) -> BigUint {
        let c = self.modulus.reduce(c);
        if c.is_zero() {
            c
        } else {
            self.modulus.value() - c
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = self.clone();
        out.add_scaled(&BigUint::one(), None, other);
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = self.clone();
        out.add_scaled(&(self.modulus.value() - 1u32), None, other);
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = Polynomial::zero(&self.modulus, self.nvars);
        for (exps, c) in &self.terms {
            out.add_scaled(c, Some(exps), other);
        }
        Ok(out)
    }

    pub fn negate(&self) -> Polynomial {
        Polynomial {
            modulus: self.modulus.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), self.negate_residue(c)))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, k: &BigUint) -> Polynomial {
        let mut out = Polynomial::zero(&self.modulus, self.nvars);
        out.add_scaled(k, None, self);
        out
    }

    pub fn pow(&self, mut k: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::constant(&self.modulus, self.nvars, BigUint::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(point) mod m`.
    pub fn evaluate(&self, point: &[BigUint]) -> Result<BigUint> {
        if point.len() != self.nvars {
            return Err(Error::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let m = self.modulus.value();
        let mut acc = BigUint::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(exps.iter()) {
                if e > 0 {
                    t = t * x.modpow(&BigUint::from(e), m) % m;
                }
            }
            acc += t;
        }
        Ok(acc % m)
    }

    /// Word-sized evaluator, available when `m < 2^32`.
    pub(crate) fn fast_evaluator(&self) -> Option<FastEvaluator> {
        let m = self.modulus.value().to_u64().filter(|&m| m < (1 << 32))?;
        Some(FastEvaluator {
            m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.as_slice().to_vec(), c.to_u64().expect("coefficient below m")))
                .collect(),
        })
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Result<Term> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
            .map(|(e, c)| Term::new(c.clone(), e.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Result<ExponentVector> {
        self.leading_term(order).map(|t| t.exponents)
    }

    pub fn leading_coefficient(&self, order: MonomialOrder) -> Result<BigUint> {
        self.leading_term(order).map(|t| t.coeff)
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&ExponentVector, &BigUint)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| order.compare(b, a));
        ts
    }

    /// Substitutes `x_i -> x_i + 1`.
    pub(crate) fn shift_variable(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.modulus, self.nvars);
        for (exps, c) in &self.terms {
            let k = exps[i];
            // (x+1)^k = sum_j C(k, j) x^j
            let mut binom = BigUint::one();
            for j in 0..=k {
                out.add_term(c * &binom, exps.with(i, j));
                binom = binom * (k - j) / (j + 1);
            }
        }
        out
    }
}

pub(crate) struct FastEvaluator {
    m: u64,
    terms: Vec<(Vec<u32>, u64)>,
}

impl FastEvaluator {
    pub(crate) fn eval(&self, point: &[u64]) -> u64 {
        let m = self.m;
        let mut acc = 0u64;
        for (exps, c) in &self.terms {
            let mut t = *c;
            for (&x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    t = t * pow_small(x, e, m) % m;
                }
            }
            acc = (acc + t) % m;
        }
        acc
    }
}

fn pow_small(mut base: u64, mut e: u32, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[Z/{}, {} vars](", self.modulus, self.nvars)?;
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e}")?;
        }
        write!(f, ")")
    }
}

macro_rules! ring_op {
    ($trait:ident, $method:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;

            /// Panics on ring mismatch; use the named method for a `Result`.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$method(self, rhs).expect("ring mismatch")
            }
        }
    };
}

ring_op!(Add, add);
ring_op!(Sub, sub);
ring_op!(Mul, mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.negate()
    }
}
