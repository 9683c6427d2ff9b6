//! Building `G_M` from `G_{M/q}` along the prime factorization of `M`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::modarith::{is_prime, legendre, valuation, Modulus};
use crate::poly::{BoxIter, ExponentVector};
use crate::vanishing::{in_s, BasisEntry, GroebnerBasis};

/// Exponent enlargements `beta` with `0 < beta ⪯ (q, ..., q)` such that
/// `(alpha + beta)!` has at least one more factor `q` than `a * alpha!`.
pub fn candidate_b(alpha: &ExponentVector, a: &BigUint, q: u64) -> Result<Vec<ExponentVector>> {
    if !is_prime(q) {
        return Err(Error::NonPrimeBase(q));
    }
    let qq = q as u128;
    let fact_val = |v: &ExponentVector| -> u128 { v.iter().map(|&k| legendre(k as u128, qq)).sum() };
    let target = valuation(a, q) as u128 + fact_val(alpha) + 1;
    let side = u32::try_from(q).map_err(|_| Error::TooLarge(format!("enlargement box for prime {q}")))?;
    Ok(BoxIter::new(vec![(0..=side).collect(); alpha.len()])
        .filter(|beta| !beta.is_zero())
        .filter(|beta| fact_val(&alpha.add(beta)) >= target)
        .collect())
}

/// Result of [`rec_comp_traced`]: the basis and every candidate the final
/// `S_M` filter dropped, per recursion level.
#[derive(Debug, Clone)]
pub struct RecursionTrace {
    pub basis: GroebnerBasis,
    pub discarded: Vec<(BigUint, Vec<BasisEntry>)>,
}

/// `G_M` computed recursively, peeling the largest prime factor at each level.
pub fn rec_comp(modulus: &Modulus, nvars: usize) -> Result<GroebnerBasis> {
    rec_comp_traced(modulus, nvars).map(|t| t.basis)
}

pub fn rec_comp_traced(modulus: &Modulus, nvars: usize) -> Result<RecursionTrace> {
    // ascending chain q_1, q_1 q_2, ..., M with the largest prime peeled first
    let mut primes: Vec<u64> = modulus
        .factors()
        .iter()
        .flat_map(|pp| std::iter::repeat_n(pp.prime, pp.exp as usize))
        .collect();
    primes.sort_unstable();

    let base_prime = primes[0];
    let base_degree = u32::try_from(base_prime).map_err(|_| Error::TooLarge(format!("degree {base_prime}")))?;
    let mut current = Modulus::from_u64(base_prime)?;
    let mut entries: Vec<BasisEntry> = (0..nvars)
        .map(|i| BasisEntry::new(ExponentVector::unit(nvars, i, base_degree), BigUint::one()))
        .collect();
    let mut discarded = Vec::new();

    for &q in &primes[1..] {
        let next = Modulus::new(current.value() * q)?;
        let (kept, dropped) = lift(&entries, q, &next)?;
        if !dropped.is_empty() {
            discarded.push((next.value().clone(), dropped));
        }
        entries = kept;
        current = next;
    }
    Ok(RecursionTrace {
        basis: GroebnerBasis::from_entries(modulus, nvars, entries)?,
        discarded,
    })
}

/// One recursion step from `G_m` to `G_M`, `M = q m`.
fn lift(entries: &[BasisEntry], q: u64, big_m: &Modulus) -> Result<(Vec<BasisEntry>, Vec<BasisEntry>)> {
    let mut candidates: Vec<BasisEntry> = Vec::new();
    for entry in entries {
        if in_s(&entry.alpha, &entry.a, big_m) {
            candidates.push(entry.clone());
            continue;
        }
        candidates.push(BasisEntry::new(entry.alpha.clone(), &entry.a * q));
        for beta in candidate_b(&entry.alpha, &entry.a, q)? {
            let alpha = entry.alpha.add(&beta);
            let b = big_m.coefficient_bound(alpha.as_slice());
            candidates.push(BasisEntry::new(alpha, b));
        }
    }
    candidates.sort();
    candidates.dedup();
    Ok(candidates.into_iter().partition(|e| in_s(&e.alpha, &e.a, big_m)))
}
