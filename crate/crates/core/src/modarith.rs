//! Integer and modular arithmetic: gcd, factorization of the modulus, prime
//! valuations of factorials, the Smarandache-Kempner function and the two
//! divisibility relations `|_Z` and `|_m`.
//!
//! Every divisibility question of the form `m | a * alpha!` is answered with
//! prime valuations over the factorization of `m`, so factorials are never
//! materialized.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// Brent's variant of Pollard rho; `n` must be an odd composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// `v_q(k!)` by Legendre's formula; `q` is assumed prime.
pub(crate) fn legendre(k: u128, q: u128) -> u128 {
    let mut k = k;
    let mut total = 0;
    while k > 0 {
        k /= q;
        total += k;
    }
    total
}

/// The exponent of the prime `q` in `k!`.
pub fn factorial_valuation(k: u64, q: u64) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NonPrimeBase(q));
    }
    Ok(legendre(k as u128, q as u128) as u64)
}

/// Exponent of the prime `q` in `a`; `a` must be nonzero.
pub(crate) fn valuation(a: &BigUint, q: u64) -> u64 {
    debug_assert!(!a.is_zero());
    let q = BigUint::from(q);
    let mut a = a.clone();
    let mut v = 0;
    loop {
        let (quot, rem) = a.div_rem(&q);
        if !rem.is_zero() {
            return v;
        }
        a = quot;
        v += 1;
    }
}

/// A prime factor `prime^exp` of a modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub prime: u64,
    pub exp: u32,
}

#[derive(Debug)]
struct ModulusInner {
    value: BigUint,
    factors: Vec<PrimePower>,
    smarandache: u128,
}

/// The ring parameter `m >= 2` together with its prime factorization.
///
/// Cloning is cheap; the factorization is computed once in [`Modulus::new`].
#[derive(Clone)]
pub struct Modulus(Arc<ModulusInner>);

impl Modulus {
    pub fn new(value: BigUint) -> Result<Self> {
        if value < BigUint::from(2u32) {
            return Err(Error::InvalidModulus(value.to_string()));
        }
        let factors = factorize(&value)?;
        let smarandache = factors
            .iter()
            .map(|pp| smarandache_prime_power(pp.prime, pp.exp))
            .max()
            .expect("m >= 2 has a prime factor");
        Ok(Modulus(Arc::new(ModulusInner {
            value,
            factors,
            smarandache,
        })))
    }

    pub fn from_u64(value: u64) -> Result<Self> {
        Self::new(BigUint::from(value))
    }

    pub fn value(&self) -> &BigUint {
        &self.0.value
    }

    /// Prime factorization, primes ascending.
    pub fn factors(&self) -> &[PrimePower] {
        &self.0.factors
    }

    pub fn is_prime(&self) -> bool {
        self.0.factors.len() == 1 && self.0.factors[0].exp == 1
    }

    pub fn largest_prime(&self) -> u64 {
        self.0.factors.last().expect("nonempty factorization").prime
    }

    /// `min { k : m | k! }`.
    pub fn smarandache(&self) -> u128 {
        self.0.smarandache
    }

    /// `v_q(a)` for every prime `q` of `m`, in factorization order.
    pub fn valuations(&self, a: &BigUint) -> Vec<u64> {
        self.factors().iter().map(|pp| valuation(a, pp.prime)).collect()
    }

    /// `v_q(alpha!)` for every prime `q` of `m`, where `alpha! = prod alpha_i!`.
    pub fn factorial_valuations(&self, alpha: &[u32]) -> Vec<u64> {
        self.factors()
            .iter()
            .map(|pp| {
                alpha
                    .iter()
                    .map(|&k| legendre(k as u128, pp.prime as u128) as u64)
                    .sum()
            })
            .collect()
    }

    /// Whether valuation vectors `lhs + rhs` reach the exponents of `m`,
    /// i.e. whether `m` divides the corresponding product.
    pub(crate) fn covered_by(&self, lhs: &[u64], rhs: &[u64]) -> bool {
        self.factors()
            .iter()
            .zip(lhs.iter().zip(rhs))
            .all(|(pp, (a, b))| a + b >= pp.exp as u64)
    }

    /// `m |_Z a * alpha!`. Any `a` is accepted; `a = 0` is divisible by everything.
    pub fn divides_scaled_factorial(&self, a: &BigUint, alpha: &[u32]) -> bool {
        if a.is_zero() {
            return true;
        }
        self.covered_by(&self.valuations(a), &self.factorial_valuations(alpha))
    }

    pub(crate) fn power_product(&self, vals: &[u64]) -> BigUint {
        self.factors().iter().zip(vals).fold(BigUint::one(), |acc, (pp, &v)| {
            acc * BigUint::from(pp.prime).pow(v as u32)
        })
    }

    /// `gcd(m, alpha!)`.
    pub fn gcd_with_factorial(&self, alpha: &[u32]) -> BigUint {
        let vals: Vec<u64> = self
            .factorial_valuations(alpha)
            .into_iter()
            .zip(self.factors())
            .map(|(v, pp)| v.min(pp.exp as u64))
            .collect();
        self.power_product(&vals)
    }

    /// `m / gcd(m, alpha!)`: the exclusive upper bound on the coefficient of
    /// `x^alpha` in a reduced representative, and the smallest `c` with
    /// `m | c * alpha!`.
    pub fn coefficient_bound(&self, alpha: &[u32]) -> BigUint {
        let vals: Vec<u64> = self
            .factorial_valuations(alpha)
            .into_iter()
            .zip(self.factors())
            .map(|(v, pp)| (pp.exp as u64).saturating_sub(v))
            .collect();
        self.power_product(&vals)
    }

    /// All positive divisors of `m`, ascending, including `m` itself.
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut divs = vec![BigUint::one()];
        for pp in self.factors() {
            let q = BigUint::from(pp.prime);
            let mut next = Vec::with_capacity(divs.len() * (pp.exp as usize + 1));
            for d in &divs {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..pp.exp {
                    cur *= &q;
                    next.push(cur.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }

    pub fn reduce(&self, a: &BigUint) -> BigUint {
        a % self.value()
    }
}

impl PartialEq for Modulus {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.value == other.0.value
    }
}

impl Eq for Modulus {}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({})", self.0.value)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.value)
    }
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = BigUint::from_str(s.trim()).map_err(|_| Error::InvalidModulus(s.to_string()))?;
        Modulus::new(value)
    }
}

const TRIAL_LIMIT: u64 = 1 << 16;

fn factorize(m: &BigUint) -> Result<Vec<PrimePower>> {
    let mut rest = m.clone();
    let mut primes: Vec<u64> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        loop {
            let (q, r) = rest.div_rem(&bd);
            if !r.is_zero() {
                break;
            }
            primes.push(d);
            rest = q;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        match rest.to_u64() {
            Some(r) => factor_u64(r, &mut primes),
            None => return Err(Error::FactorizationTooHard(m.to_string())),
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<PrimePower> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some(last) if last.prime == p => last.exp += 1,
            _ => factors.push(PrimePower { prime: p, exp: 1 }),
        }
    }
    Ok(factors)
}

// Smallest k with v_q(k!) >= e. k is a multiple of q, k = q*j with j <= e,
// and v_q((q*j)!) = j + v_q(j!) is monotone in j.
fn smarandache_prime_power(q: u64, e: u32) -> u128 {
    let (q, e) = (q as u128, e as u128);
    let (mut lo, mut hi) = (1u128, e);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if legendre(q * mid, q) >= e {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    q * lo
}

/// The Smarandache-Kempner function `min { k : m |_Z k! }`.
pub fn smarandache(m: &Modulus) -> u128 {
    m.smarandache()
}

/// `a |_m b`: some `k` has `a * k = b (mod m)`. Decided as `gcd(a, m) |_Z b`.
pub fn divides_mod(a: &BigUint, b: &BigUint, m: &Modulus) -> bool {
    let g = gcd(&m.reduce(a), m.value());
    (m.reduce(b) % g).is_zero()
}
