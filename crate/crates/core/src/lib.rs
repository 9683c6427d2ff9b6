//! Vanishing polynomials over `Z/m`.
//!
//! This crate constructs the explicit minimal strong Groebner basis `G_m` of
//! the ideal of polynomials in `(Z/m)[x_1..x_n]` that vanish at every point,
//! reduces polynomials to their unique canonical representative modulo that
//! ideal, counts polynomial functions, and rebuilds `G_m` recursively along
//! the prime factorization of `m`.
//!
//! ```
//! use vanideal_core::{build_basis, reduced_nf, Modulus, MonomialOrder, Polynomial, ExponentVector};
//! use num_bigint::BigUint;
//!
//! let m = Modulus::from_u64(6).unwrap();
//! let basis = build_basis(&m, 1).unwrap();
//! assert!(basis.contains(&[3], 1) && basis.contains(&[2], 3));
//!
//! // x^2 + x vanishes on Z/2
//! let m2 = Modulus::from_u64(2).unwrap();
//! let f = Polynomial::from_terms(&m2, 1, [
//!     (ExponentVector::new(vec![2]), BigUint::from(1u32)),
//!     (ExponentVector::new(vec![1]), BigUint::from(1u32)),
//! ]).unwrap();
//! assert!(reduced_nf(&f, MonomialOrder::Lex).is_zero());
//! ```

pub mod error;
pub mod modarith;
pub mod normalform;
pub mod poly;
pub mod recursive;
pub mod vanishing;

pub use error::{Error, Result};
pub use modarith::{divides_mod, factorial_valuation, gcd, smarandache, Modulus, PrimePower};
pub use normalform::{count_polynomial_functions, functionally_equal, is_reduced, reduced_nf, Reducer};
pub use poly::{term_divides, ExponentVector, MonomialOrder, Polynomial, Term};
pub use recursive::{candidate_b, rec_comp, rec_comp_traced, RecursionTrace};
pub use vanishing::{
    build_basis, build_p, enumerate_s, in_s, is_vanishing, is_vanishing_with_budget, leading_terms_match_up_to_units,
    nabla, partial_difference, verify_minimal_strong, BasisEntry, GroebnerBasis, Verdict, DEFAULT_BUDGET,
};
