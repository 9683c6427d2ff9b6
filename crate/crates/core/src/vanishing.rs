//! The ideal `I_0` of vanishing polynomials over `Z/m`: the canonical
//! members `p_{alpha,a}`, the index set `S_m` and the basis `G_m`, partial
//! differences, and the brute-force checks used to certify basis claims.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modarith::{gcd, Modulus};
use crate::poly::{term_divides, ExponentVector, MonomialOrder, Polynomial, Term};

/// Default number of point evaluations allowed for [`is_vanishing`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A pair `(alpha, a)` of `S_m`, standing for `p_{alpha,a}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisEntry {
    pub alpha: ExponentVector,
    pub a: BigUint,
}

impl BasisEntry {
    pub fn new(alpha: ExponentVector, a: BigUint) -> Self {
        BasisEntry { alpha, a }
    }

    /// `a * x^alpha`, the leading term of `p_{alpha,a}` under every global order.
    pub fn leading_term(&self) -> Term {
        Term::new(self.a.clone(), self.alpha.clone())
    }

    pub fn polynomial(&self, m: &Modulus) -> Polynomial {
        build_p(&self.alpha, &self.a, m)
    }
}

/// Canonical order: `alpha` descending lexicographically, then `a` ascending.
impl Ord for BasisEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.alpha.cmp(&self.alpha).then_with(|| self.a.cmp(&other.a))
    }
}

impl PartialOrd for BasisEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `p_{alpha,a} = a * prod_i (x_i - 1)(x_i - 2)...(x_i - alpha_i)`.
pub fn build_p(alpha: &ExponentVector, a: &BigUint, m: &Modulus) -> Polynomial {
    let n = alpha.len();
    let mut acc = Polynomial::constant(m, n, a.clone());
    for (i, &k) in alpha.iter().enumerate() {
        if k == 0 || acc.is_zero() {
            continue;
        }
        let mut factor = Polynomial::constant(m, n, BigUint::one());
        for l in 1..=k {
            let shift = m.value() - m.reduce(&BigUint::from(l));
            let mut linear = Polynomial::monomial(m, BigUint::one(), ExponentVector::unit(n, i, 1));
            linear.add_term(shift, ExponentVector::zeros(n));
            factor = &factor * &linear;
        }
        acc = &acc * &factor;
    }
    acc
}

/// Whether `f` evaluates to zero at every point of `(Z/m)^n`.
pub fn is_vanishing(f: &Polynomial) -> Result<bool> {
    is_vanishing_with_budget(f, DEFAULT_BUDGET)
}

pub fn is_vanishing_with_budget(f: &Polynomial, budget: u64) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let m = f.modulus().value();
    let n = f.nvars();
    let needed = m.pow(n as u32);
    if needed > BigUint::from(budget) {
        return Err(Error::ExhaustionBudget {
            needed: needed.to_string(),
            budget,
        });
    }
    let side = m.to_u64().expect("within budget");
    let mut point = vec![0u64; n];
    match f.fast_evaluator() {
        Some(fast) => loop {
            if fast.eval(&point) != 0 {
                return Ok(false);
            }
            if !advance(&mut point, side) {
                return Ok(true);
            }
        },
        None => loop {
            let big: Vec<BigUint> = point.iter().map(|&v| BigUint::from(v)).collect();
            if !f.evaluate(&big)?.is_zero() {
                return Ok(false);
            }
            if !advance(&mut point, side) {
                return Ok(true);
            }
        },
    }
}

// Odometer step over {0..side-1}^n; false once wrapped around.
fn advance(point: &mut [u64], side: u64) -> bool {
    for x in point.iter_mut().rev() {
        *x += 1;
        if *x < side {
            return true;
        }
        *x = 0;
    }
    false
}

/// `∇_i f = f(.., x_i + 1, ..) - f`, with a zero-based variable index.
pub fn partial_difference(f: &Polynomial, i: usize) -> Result<Polynomial> {
    if i >= f.nvars() {
        return Err(Error::VariableIndex {
            index: i,
            nvars: f.nvars(),
        });
    }
    Ok(&f.shift_variable(i) - f)
}

/// `∇^beta f = ∇_1^{beta_1} ... ∇_n^{beta_n} f`.
pub fn nabla(f: &Polynomial, beta: &ExponentVector) -> Result<Polynomial> {
    if beta.len() != f.nvars() {
        return Err(Error::ExponentLength {
            expected: f.nvars(),
            got: beta.len(),
        });
    }
    let mut h = f.clone();
    for (i, &k) in beta.iter().enumerate() {
        for _ in 0..k {
            if h.is_zero() {
                return Ok(h);
            }
            h = partial_difference(&h, i)?;
        }
    }
    Ok(h)
}

/// Why a pair `(alpha, a)` fails to be in `S_m`.
pub fn s_membership_violation(alpha: &ExponentVector, a: &BigUint, m: &Modulus) -> Option<&'static str> {
    if a.is_zero() || a >= m.value() {
        return Some("coefficient outside [1, m)");
    }
    if !(m.value() % a).is_zero() {
        return Some("coefficient does not divide m");
    }
    let a_vals = m.valuations(a);
    if !m.covered_by(&a_vals, &m.factorial_valuations(alpha.as_slice())) {
        return Some("m does not divide a * alpha!");
    }
    // divisibility of a * beta! is monotone in beta, so immediate
    // predecessors alpha - e_i cover every beta < alpha
    if alpha
        .predecessors()
        .any(|beta| m.covered_by(&a_vals, &m.factorial_valuations(beta.as_slice())))
    {
        return Some("alpha is not minimal");
    }
    // likewise every proper divisor b of a divides some a / q
    let fact_vals = m.factorial_valuations(alpha.as_slice());
    for (k, _) in m.factors().iter().enumerate() {
        if a_vals[k] > 0 {
            let mut reduced = a_vals.clone();
            reduced[k] -= 1;
            if m.covered_by(&reduced, &fact_vals) {
                return Some("a is not minimal");
            }
        }
    }
    None
}

/// Whether `(alpha, a)` belongs to `S_m`.
pub fn in_s(alpha: &ExponentVector, a: &BigUint, m: &Modulus) -> bool {
    s_membership_violation(alpha, a, m).is_none()
}

/// Largest per-variable degree the enumeration will consider.
const MAX_DEGREE: u128 = u32::MAX as u128;

/// The set `S_m` for `n` variables, in canonical order.
///
/// Each coordinate of a minimal `alpha` lies in `[0, mu(m)]`, and a nonzero
/// coordinate must be a multiple of some prime of `m` (otherwise lowering it
/// leaves every valuation unchanged). At most `Omega(m)` coordinates are
/// nonzero, and once `m | alpha!` no further coordinate may be raised.
pub fn enumerate_s(m: &Modulus, nvars: usize) -> Result<Vec<BasisEntry>> {
    let mu = m.smarandache();
    if mu > MAX_DEGREE {
        return Err(Error::TooLarge(format!("per-variable degree bound {mu} of G_{m}")));
    }
    let mu = mu as u32;
    let primes: Vec<u32> = m
        .factors()
        .iter()
        .filter(|pp| pp.prime <= mu as u64)
        .map(|pp| pp.prime as u32)
        .collect();
    let mut axis: Vec<u32> = primes.iter().flat_map(|&p| (p..=mu).step_by(p as usize)).collect();
    axis.sort_unstable();
    axis.dedup();
    let max_support: u64 = m.factors().iter().map(|pp| pp.exp as u64).sum();
    let divisors = m.divisors();
    let proper = &divisors[..divisors.len() - 1];

    let mut out = Vec::new();
    let mut alpha = vec![0u32; nvars];
    let zero_vals = vec![0u64; m.factors().len()];
    let mut visit = |alpha: &[u32]| {
        let ev = ExponentVector::new(alpha.to_vec());
        for a in proper {
            if in_s(&ev, a, m) {
                out.push(BasisEntry::new(ev.clone(), a.clone()));
            }
        }
    };
    search(m, &axis, max_support, &zero_vals, 0, 0, &mut alpha, &mut visit);
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    m: &Modulus,
    axis: &[u32],
    max_support: u64,
    zero_vals: &[u64],
    pos: usize,
    support: u64,
    alpha: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if pos == alpha.len() {
        if support > 0 {
            visit(alpha);
        }
        return;
    }
    search(m, axis, max_support, zero_vals, pos + 1, support, alpha, visit);
    if support == max_support {
        return;
    }
    if support > 0 && m.covered_by(zero_vals, &m.factorial_valuations(&alpha[..pos])) {
        return;
    }
    for &k in axis {
        alpha[pos] = k;
        search(m, axis, max_support, zero_vals, pos + 1, support + 1, alpha, visit);
    }
    alpha[pos] = 0;
}

/// `G_m` for a fixed `(m, n)`: deduplicated entries of `S_m` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    modulus: Modulus,
    nvars: usize,
    entries: Vec<BasisEntry>,
}

impl GroebnerBasis {
    /// Validates every entry against the `S_m` conditions, then sorts and
    /// deduplicates.
    pub fn from_entries(modulus: &Modulus, nvars: usize, mut entries: Vec<BasisEntry>) -> Result<Self> {
        for e in &entries {
            if e.alpha.len() != nvars {
                return Err(Error::ExponentLength {
                    expected: nvars,
                    got: e.alpha.len(),
                });
            }
            if let Some(reason) = s_membership_violation(&e.alpha, &e.a, modulus) {
                return Err(Error::InvalidBasisEntry {
                    alpha: e.alpha.as_slice().to_vec(),
                    a: e.a.to_string(),
                    reason,
                });
            }
        }
        entries.sort();
        entries.dedup();
        Ok(GroebnerBasis {
            modulus: modulus.clone(),
            nvars,
            entries,
        })
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, alpha: &[u32], a: u64) -> bool {
        let probe = BasisEntry::new(ExponentVector::new(alpha.to_vec()), BigUint::from(a));
        self.entries.binary_search(&probe).is_ok()
    }

    /// Expanded `p_{alpha,a}` for every entry.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.entries.iter().map(|e| e.polynomial(&self.modulus)).collect()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.entries.iter().map(BasisEntry::leading_term).collect()
    }
}

/// The minimal strong Groebner basis of `I_0` in `(Z/m)[x_1..x_n]`; it does
/// not depend on the monomial order.
pub fn build_basis(m: &Modulus, nvars: usize) -> Result<GroebnerBasis> {
    Ok(GroebnerBasis {
        modulus: m.clone(),
        nvars,
        entries: enumerate_s(m, nvars)?,
    })
}

/// Outcome of [`verify_minimal_strong`], one list per failure mode.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    /// Basis members that do not vanish.
    pub non_vanishing: Vec<usize>,
    /// `(i, j)` with `LT(g_i) | LT(g_j)`, `i != j`.
    pub divisible_pairs: Vec<(usize, usize)>,
    /// Nonzero witnesses whose leading term no basis leading term divides.
    pub uncovered_witnesses: Vec<usize>,
}

impl Verdict {
    pub fn all_vanishing(&self) -> bool {
        self.non_vanishing.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        self.divisible_pairs.is_empty()
    }

    pub fn is_strong(&self) -> bool {
        self.uncovered_witnesses.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.all_vanishing() && self.is_minimal() && self.is_strong()
    }
}

/// Checks that `basis` vanishes, is minimal under leading-term divisibility,
/// and covers the leading term of every witness.
///
/// Witnesses are confirmed to vanish whenever that fits in `budget`.
pub fn verify_minimal_strong(
    basis: &[Polynomial],
    order: MonomialOrder,
    witnesses: &[Polynomial],
    budget: u64,
) -> Result<Verdict> {
    let mut verdict = Verdict::default();
    for (i, w) in witnesses.iter().enumerate() {
        match is_vanishing_with_budget(w, budget) {
            Ok(true) | Err(Error::ExhaustionBudget { .. }) => {}
            Ok(false) => return Err(Error::NonVanishingWitness(i)),
            Err(e) => return Err(e),
        }
    }
    let Some(first) = basis.first() else {
        // nothing can cover a nonzero witness
        verdict.uncovered_witnesses = (0..witnesses.len()).filter(|&i| !witnesses[i].is_zero()).collect();
        return Ok(verdict);
    };
    let m = first.modulus().clone();
    for (i, g) in basis.iter().enumerate() {
        g.same_ring(first)?;
        if !is_vanishing_with_budget(g, budget)? {
            verdict.non_vanishing.push(i);
        }
    }
    let lts: Vec<Option<Term>> = basis.iter().map(|g| g.leading_term(order).ok()).collect();
    for (i, s) in lts.iter().enumerate() {
        for (j, t) in lts.iter().enumerate() {
            if let (Some(s), Some(t)) = (s, t) {
                if i != j && term_divides(s, t, &m) {
                    verdict.divisible_pairs.push((i, j));
                }
            }
        }
    }
    for (k, w) in witnesses.iter().enumerate() {
        let Ok(lt) = w.leading_term(order) else { continue };
        if !lts.iter().flatten().any(|s| term_divides(s, &lt, &m)) {
            verdict.uncovered_witnesses.push(k);
        }
    }
    Ok(verdict)
}

/// Whether the two term sets correspond bijectively, pairing equal monomials
/// whose coefficients differ by a unit of `Z/m`.
///
/// In `Z/m`, `b = u * a` for a unit `u` exactly when `gcd(a, m) = gcd(b, m)`,
/// so the bijection exists iff the multisets of `(monomial, gcd(coeff, m))`
/// agree.
pub fn leading_terms_match_up_to_units(lhs: &[Term], rhs: &[Term], m: &Modulus) -> bool {
    if lhs.len() != rhs.len() {
        return false;
    }
    let mut counts: HashMap<(ExponentVector, BigUint), i64> = HashMap::new();
    for t in lhs {
        *counts
            .entry((t.exponents.clone(), gcd(&m.reduce(&t.coeff), m.value())))
            .or_default() += 1;
    }
    for t in rhs {
        *counts
            .entry((t.exponents.clone(), gcd(&m.reduce(&t.coeff), m.value())))
            .or_default() -= 1;
    }
    counts.values().all(|&c| c == 0)
}

/// The units of `Z/m` (only sensible for small `m`).
pub fn units(m: &Modulus) -> impl Iterator<Item = BigUint> + '_ {
    num_iter(m.value()).filter(move |u| u.gcd(m.value()).is_one())
}

fn num_iter(limit: &BigUint) -> impl Iterator<Item = BigUint> + '_ {
    std::iter::successors(Some(BigUint::zero()), |x| Some(x + 1u32)).take_while(move |x| x < limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: u64) -> Modulus {
        Modulus::from_u64(v).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn uni(modulus: &Modulus, coeffs: &[u64]) -> Polynomial {
        Polynomial::from_terms(
            modulus,
            1,
            coeffs.iter().enumerate().map(|(d, &c)| (ev(&[d as u32]), big(c))),
        )
        .unwrap()
    }

    fn entry(alpha: &[u32], a: u64) -> BasisEntry {
        BasisEntry::new(ev(alpha), big(a))
    }

    #[test]
    fn build_p_examples() {
        let m6 = m(6);
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6 = x^3 + 5x (mod 6)
        assert_eq!(build_p(&ev(&[3]), &big(1), &m6), uni(&m6, &[0, 5, 0, 1]));
        assert_eq!(
            build_p(&ev(&[0, 0]), &big(5), &m6),
            Polynomial::constant(&m6, 2, big(5))
        );
        assert_eq!(build_p(&ev(&[2]), &big(3), &m6), uni(&m6, &[0, 3, 3]));
    }

    #[test]
    fn is_vanishing_examples() {
        let m6 = m(6);
        assert!(is_vanishing(&Polynomial::zero(&m6, 3)).unwrap());
        assert!(is_vanishing(&build_p(&ev(&[2]), &big(3), &m6)).unwrap());
        assert!(!is_vanishing(&uni(&m(4), &[0, 1])).unwrap());
        let x = uni(&m(10), &[0, 1]);
        assert!(matches!(
            is_vanishing_with_budget(&x, 9),
            Err(Error::ExhaustionBudget { .. })
        ));
    }

    #[test]
    fn is_vanishing_big_modulus_path() {
        let modulus = Modulus::new(BigUint::one() << 33u32).unwrap();
        let x = Polynomial::variable(&modulus, 1, 0).unwrap();
        assert!(matches!(is_vanishing(&x), Err(Error::ExhaustionBudget { .. })));
        // within an explicit budget the word-sized evaluator is skipped
        let c = Polynomial::constant(&modulus, 1, big(1));
        assert!(!is_vanishing_with_budget(&c, u64::MAX).unwrap());
    }

    #[test]
    fn partial_difference_examples() {
        let m5 = m(5);
        assert_eq!(partial_difference(&uni(&m5, &[0, 0, 1]), 0).unwrap(), uni(&m5, &[1, 2]));
        assert!(partial_difference(&uni(&m5, &[3]), 0).unwrap().is_zero());
        let m6 = m(6);
        let xy = Polynomial::monomial(&m6, big(1), ev(&[1, 1]));
        let x = Polynomial::monomial(&m6, big(1), ev(&[1, 0]));
        assert_eq!(partial_difference(&xy, 1).unwrap(), x);
        assert!(matches!(
            partial_difference(&xy, 2),
            Err(Error::VariableIndex { index: 2, nvars: 2 })
        ));
    }

    #[test]
    fn nabla_examples() {
        let m720 = m(720);
        assert_eq!(nabla(&uni(&m720, &[0, 0, 0, 1]), &ev(&[3])).unwrap(), uni(&m720, &[6]));
        assert!(nabla(&uni(&m720, &[0, 0, 1]), &ev(&[3])).unwrap().is_zero());
        let m12 = m(12);
        let xy = Polynomial::monomial(&m12, big(1), ev(&[1, 1]));
        assert_eq!(nabla(&xy, &ev(&[1, 1])).unwrap(), Polynomial::constant(&m12, 2, big(1)));
        assert!(nabla(&xy, &ev(&[1])).is_err());
    }

    #[test]
    fn enumerate_s_examples() {
        assert_eq!(enumerate_s(&m(6), 1).unwrap(), vec![entry(&[3], 1), entry(&[2], 3)]);
        assert_eq!(enumerate_s(&m(2), 1).unwrap(), vec![entry(&[2], 1)]);
        assert_eq!(enumerate_s(&m(4), 1).unwrap(), vec![entry(&[4], 1), entry(&[2], 2)]);
        let s12 = build_basis(&m(12), 2).unwrap();
        assert!(s12.contains(&[2, 2], 3));
        assert!(s12.contains(&[3, 0], 2));
    }

    #[test]
    fn prime_modulus_gives_coordinate_powers() {
        for q in [2u64, 3, 5, 7, 11] {
            for n in 1..=3 {
                let g = build_basis(&m(q), n).unwrap();
                let expect: Vec<BasisEntry> = (0..n)
                    .map(|i| BasisEntry::new(ExponentVector::unit(n, i, q as u32), big(1)))
                    .collect();
                assert_eq!(g.entries(), &expect[..], "q={q} n={n}");
            }
        }
    }

    #[test]
    fn large_moduli_stay_cheap() {
        let g = build_basis(&Modulus::new(BigUint::one() << 64u32).unwrap(), 2).unwrap();
        assert!(g.len() > 64);
        let p = Modulus::from_u64(18_446_744_073_709_551_557).unwrap();
        assert!(matches!(build_basis(&p, 1), Err(Error::TooLarge(_))));
        // a large prime that still fits an exponent
        let q = Modulus::from_u64(1_000_003).unwrap();
        assert_eq!(build_basis(&q, 3).unwrap().len(), 3);
    }

    #[test]
    fn same_alpha_never_repeats() {
        for mv in 2..=72u64 {
            let g = build_basis(&m(mv), 2).unwrap();
            let mut alphas: Vec<_> = g.entries().iter().map(|e| e.alpha.clone()).collect();
            alphas.dedup();
            assert_eq!(alphas.len(), g.len(), "m={mv}");
        }
    }

    #[test]
    fn membership_violations_are_named() {
        let m6 = m(6);
        assert_eq!(
            s_membership_violation(&ev(&[3]), &big(0), &m6),
            Some("coefficient outside [1, m)")
        );
        assert_eq!(
            s_membership_violation(&ev(&[3]), &big(4), &m6),
            Some("coefficient does not divide m")
        );
        assert_eq!(
            s_membership_violation(&ev(&[2]), &big(1), &m6),
            Some("m does not divide a * alpha!")
        );
        assert_eq!(
            s_membership_violation(&ev(&[4]), &big(1), &m6),
            Some("alpha is not minimal")
        );
        assert_eq!(
            s_membership_violation(&ev(&[3]), &big(2), &m6),
            Some("a is not minimal")
        );
        assert!(GroebnerBasis::from_entries(&m6, 1, vec![entry(&[4], 1)]).is_err());
    }

    #[test]
    fn verify_distinguishes_failure_modes() {
        let m6 = m(6);
        // {2x, 3x}: minimal, but neither member vanishes
        let g = vec![uni(&m6, &[0, 2]), uni(&m6, &[0, 3])];
        let v = verify_minimal_strong(&g, MonomialOrder::Lex, &[], DEFAULT_BUDGET).unwrap();
        assert!(v.is_minimal());
        assert_eq!(v.non_vanishing, vec![0, 1]);
        assert!(!v.holds());

        let empty = verify_minimal_strong(&[], MonomialOrder::Lex, &[], DEFAULT_BUDGET).unwrap();
        assert!(empty.holds());

        let basis = build_basis(&m6, 1).unwrap().polynomials();
        let bad = verify_minimal_strong(&basis, MonomialOrder::Lex, &[uni(&m6, &[0, 1])], DEFAULT_BUDGET);
        assert_eq!(bad, Err(Error::NonVanishingWitness(0)));

        // dropping 3(x-1)(x-2) leaves the witness 3x^2 + 3x uncovered
        let partial = vec![basis[0].clone()];
        let v = verify_minimal_strong(&partial, MonomialOrder::Lex, &[basis[1].clone()], DEFAULT_BUDGET).unwrap();
        assert_eq!(v.uncovered_witnesses, vec![0]);
    }

    #[test]
    fn units_match_examples() {
        let m12 = m(12);
        let g = build_basis(&m12, 2).unwrap();
        let original = g.leading_terms();
        let mutated: Vec<Term> = original
            .iter()
            .map(|t| {
                if t.exponents == ev(&[2, 2]) {
                    Term::new(big(9), t.exponents.clone())
                } else {
                    t.clone()
                }
            })
            .collect();
        assert!(leading_terms_match_up_to_units(&original, &mutated, &m12));
        assert!(leading_terms_match_up_to_units(&original, &original, &m12));
        let m6 = m(6);
        let two_x = [Term::new(big(2), ev(&[1]))];
        let three_x = [Term::new(big(3), ev(&[1]))];
        assert!(!leading_terms_match_up_to_units(&two_x, &three_x, &m6));
        assert!(!leading_terms_match_up_to_units(&two_x, &[], &m6));
    }

    #[test]
    fn unit_classes_match_unit_search() {
        for mv in 2..=24u64 {
            let modulus = m(mv);
            let us: Vec<u64> = units(&modulus).map(|u| u.to_u64().unwrap()).collect();
            for a in 0..mv {
                for b in 0..mv {
                    let brute = us.iter().any(|u| a * u % mv == b);
                    let lhs = [Term::new(big(a), ev(&[1]))];
                    let rhs = [Term::new(big(b), ev(&[1]))];
                    assert_eq!(
                        leading_terms_match_up_to_units(&lhs, &rhs, &modulus),
                        brute,
                        "m={mv} {a} ~ {b}"
                    );
                }
            }
        }
    }
}
