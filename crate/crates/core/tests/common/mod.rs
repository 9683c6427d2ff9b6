#![allow(dead_code)]

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use vanideal_core::{ExponentVector, Modulus, Polynomial};

pub fn m(v: u64) -> Modulus {
    Modulus::from_u64(v).unwrap()
}

pub fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn factorial(k: u32) -> BigUint {
    (1..=k as u64).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn alpha_factorial(alpha: &[u32]) -> BigUint {
    alpha.iter().map(|&k| factorial(k)).product()
}

pub fn random_poly<R: Rng>(rng: &mut R, modulus: &Modulus, nvars: usize, max_deg: u32, max_terms: usize) -> Polynomial {
    let mv = modulus.value().to_u64().unwrap();
    let nterms = rng.gen_range(0..=max_terms);
    Polynomial::from_terms(
        modulus,
        nvars,
        (0..nterms).map(|_| {
            let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
            (ExponentVector::new(e), big(rng.gen_range(0..mv)))
        }),
    )
    .unwrap()
}

pub fn univariate(modulus: &Modulus, coeffs: &[u64]) -> Polynomial {
    Polynomial::from_terms(
        modulus,
        1,
        coeffs.iter().enumerate().map(|(d, &c)| (ev(&[d as u32]), big(c))),
    )
    .unwrap()
}

/// Values of `f` at every point of `(Z/m)^n`, odometer order.
pub fn value_table(f: &Polynomial) -> Vec<u64> {
    let mv = f.modulus().value().to_u64().unwrap();
    let n = f.nvars();
    ExponentVector::new(vec![(mv - 1) as u32; n])
        .box_below()
        .map(|p| {
            let point: Vec<BigUint> = p.iter().map(|&x| big(x as u64)).collect();
            f.evaluate(&point).unwrap().to_u64().unwrap()
        })
        .collect()
}

/// Every coefficient vector of length `deg + 1` over `Z/m`, lowest degree first.
pub fn all_coefficient_vectors(mv: u64, deg: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = mv.pow(deg as u32 + 1);
    (0..total).map(move |mut code| {
        (0..=deg)
            .map(|_| {
                let c = code % mv;
                code /= mv;
                c
            })
            .collect()
    })
}

fn powers_table(mv: u64, deg: usize) -> Vec<Vec<u64>> {
    // table[d][x] = x^d mod m
    (0..=deg)
        .map(|d| (0..mv).map(|x| (0..d).fold(1 % mv, |acc, _| acc * x % mv)).collect())
        .collect()
}

/// All vanishing univariate polynomials of degree `<= deg` over `Z/m`, as
/// coefficient vectors, by meet-in-the-middle on value vectors.
pub fn vanishing_univariate(mv: u64, deg: usize) -> Vec<Vec<u64>> {
    assert!(deg >= 1);
    let pow = powers_table(mv, deg);
    let low_len = deg.div_ceil(2);
    let high_len = deg + 1 - low_len;
    // value vectors packed base m, negated on request
    let encode = |coeffs: &[u64], offset: usize, negate: bool| -> u64 {
        (0..mv as usize).fold(0u64, |code, x| {
            let v = coeffs
                .iter()
                .enumerate()
                .fold(0, |acc, (i, &c)| (acc + c * pow[offset + i][x]) % mv);
            code * mv + if negate { (mv - v) % mv } else { v }
        })
    };
    let mut low: Vec<(u64, Vec<u64>)> = all_coefficient_vectors(mv, low_len - 1)
        .map(|c| (encode(&c, 0, false), c))
        .collect();
    low.sort_unstable();
    let mut out = Vec::new();
    for high in all_coefficient_vectors(mv, high_len - 1) {
        let need = encode(&high, low_len, true);
        let start = low.partition_point(|(code, _)| *code < need);
        for (_, l) in low[start..].iter().take_while(|(code, _)| *code == need) {
            let mut c = l.clone();
            c.extend_from_slice(&high);
            out.push(c);
        }
    }
    out
}
