//! Reduced normal forms modulo `I_0` and counting of polynomial functions.
//!
//! The reduced representative of a class has, at every `x^alpha`, a
//! coefficient in `[0, m / gcd(m, alpha!))`. Reduction peels the leading term
//! `a x^alpha`, splits `a = k c + r` with `c = m / gcd(m, alpha!)`, keeps
//! `r x^alpha` and subtracts `k p_{alpha,c} + r x^alpha`. Since
//! `LT(p_{alpha,c}) = c x^alpha` under every global order, any order works
//! and all of them give the same result.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modarith::{legendre, Modulus};
use crate::poly::{ExponentVector, MonomialOrder, Polynomial};
use crate::vanishing::build_p;

/// Normal form engine for one modulus. Memoizes `p_{alpha,c}` per `alpha`;
/// shareable across threads.
pub struct Reducer {
    modulus: Modulus,
    cache: RwLock<HashMap<(usize, ExponentVector), Polynomial>>,
}

impl Reducer {
    pub fn new(modulus: &Modulus) -> Self {
        Reducer {
            modulus: modulus.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    fn vanishing_member(&self, alpha: &ExponentVector, c: &BigUint) -> Polynomial {
        let key = (alpha.len(), alpha.clone());
        if let Some(p) = self.cache.read().ok().and_then(|c| c.get(&key).cloned()) {
            return p;
        }
        let p = build_p(alpha, c, &self.modulus);
        // a poisoned lock only costs the memo
        if let Ok(mut cache) = self.cache.write() {
            cache.insert(key, p.clone());
        }
        p
    }

    pub fn reduce(&self, f: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
        if f.modulus() != &self.modulus {
            return Err(Error::RingMismatch {
                lhs_modulus: f.modulus().to_string(),
                lhs_nvars: f.nvars(),
                rhs_modulus: self.modulus.to_string(),
                rhs_nvars: f.nvars(),
            });
        }
        let mut rest = f.clone();
        let mut h = Polynomial::zero(&self.modulus, f.nvars());
        while let Ok(lt) = rest.leading_term(order) {
            let alpha = lt.exponents;
            let c = self.modulus.coefficient_bound(alpha.as_slice());
            let (k, r) = lt.coeff.div_rem(&c);
            if !r.is_zero() {
                h.add_term(r.clone(), alpha.clone());
            }
            if !k.is_zero() {
                let p = self.vanishing_member(&alpha, &c);
                rest.add_scaled(&(self.modulus.value() - k), None, &p);
            }
            if !r.is_zero() {
                rest.add_term(self.modulus.value() - r, alpha);
            }
        }
        Ok(h)
    }
}

/// The unique reduced representative of `f` modulo the vanishing ideal.
pub fn reduced_nf(f: &Polynomial, order: MonomialOrder) -> Polynomial {
    Reducer::new(f.modulus())
        .reduce(f, order)
        .expect("reducer built for f's own modulus")
}

/// Whether every coefficient of `f` at `x^alpha` is below `m / gcd(m, alpha!)`.
pub fn is_reduced(f: &Polynomial) -> bool {
    let m = f.modulus();
    f.terms().all(|(alpha, c)| c < &m.coefficient_bound(alpha.as_slice()))
}

/// Whether `f` and `g` define the same function `(Z/m)^n -> Z/m`.
pub fn functionally_equal(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    let diff = f.sub(g)?;
    Ok(reduced_nf(&diff, MonomialOrder::Lex).is_zero())
}

/// The number of polynomial functions `(Z/m)^n -> Z/m`, which is
/// `prod_{alpha in {0..m-1}^n} m / gcd(m, alpha!)`.
///
/// A factor is 1 as soon as some `alpha_i >= mu(m)`, so only the box
/// `[0, mu)^n` matters. Each factor depends on `alpha` only through the
/// valuations of `alpha!` capped at the exponents of `m`, so the box is
/// folded one coordinate at a time into a histogram of capped valuation
/// vectors and never materialized.
pub fn count_polynomial_functions(m: &Modulus, nvars: usize) -> Result<BigUint> {
    let exps = count_exponents(m, nvars)?;
    let mut n = BigUint::one();
    for (pp, e) in m.factors().iter().zip(exps) {
        let e = e
            .to_u32()
            .ok_or_else(|| Error::TooLarge(format!("exponent {e} of {} in the function count", pp.prime)))?;
        n *= BigUint::from(pp.prime).pow(e);
    }
    Ok(n)
}

/// Exponent of each prime of `m` in [`count_polynomial_functions`].
pub fn count_exponents(m: &Modulus, nvars: usize) -> Result<Vec<BigUint>> {
    let mu = m.smarandache();
    if mu > u32::MAX as u128 {
        return Err(Error::TooLarge(format!("per-variable degree bound {mu} of Z/{m}")));
    }
    let caps: Vec<u64> = m.factors().iter().map(|pp| pp.exp as u64).collect();
    let capped = |k: u64| -> Vec<u64> {
        m.factors()
            .iter()
            .zip(&caps)
            .map(|(pp, &cap)| (legendre(k as u128, pp.prime as u128) as u64).min(cap))
            .collect()
    };

    // one coordinate: k in [0, mu), valuations change only at prime multiples
    let mu = mu as u64;
    let mut jumps: Vec<u64> = m
        .factors()
        .iter()
        .flat_map(|pp| (pp.prime..mu).step_by(pp.prime as usize))
        .collect();
    jumps.sort_unstable();
    jumps.dedup();
    let mut single: HashMap<Vec<u64>, BigUint> = HashMap::new();
    let mut start = 0u64;
    for end in jumps.iter().copied().chain(std::iter::once(mu)) {
        if end > start {
            *single.entry(capped(start)).or_default() += end - start;
        }
        start = end;
    }

    let mut states: HashMap<Vec<u64>, BigUint> = HashMap::from([(vec![0; caps.len()], BigUint::one())]);
    for _ in 0..nvars {
        let mut next: HashMap<Vec<u64>, BigUint> = HashMap::new();
        for (state, count) in &states {
            for (vals, mult) in &single {
                let merged: Vec<u64> = state
                    .iter()
                    .zip(vals)
                    .zip(&caps)
                    .map(|((a, b), &cap)| (a + b).min(cap))
                    .collect();
                *next.entry(merged).or_default() += count * mult;
            }
        }
        states = next;
    }

    let mut exps = vec![BigUint::zero(); caps.len()];
    for (state, count) in &states {
        for (k, (&v, &cap)) in state.iter().zip(&caps).enumerate() {
            exps[k] += count * (cap - v);
        }
    }
    Ok(exps)
}
