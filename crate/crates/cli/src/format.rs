use std::fmt::Write;

use num_traits::One;
use vanideal_core::{BasisEntry, ExponentVector, MonomialOrder, Polynomial};

use crate::context::RingContext;

fn write_monomial(out: &mut String, alpha: &ExponentVector, ctx: &RingContext) {
    let mut first = true;
    for (name, &k) in ctx.names().iter().zip(alpha.iter()) {
        if k == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if k > 1 {
            write!(out, "^{k}").unwrap();
        }
    }
}

/// Canonical text for `f`: terms descending under `order`, unit coefficients
/// elided except on the constant term, `"0"` for the zero polynomial.
pub fn format_poly(f: &Polynomial, ctx: &RingContext, order: MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (alpha, coeff)) in f.sorted_terms(order).into_iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if alpha.is_zero() {
            write!(out, "{coeff}").unwrap();
            continue;
        }
        if !coeff.is_one() {
            write!(out, "{coeff}*").unwrap();
        }
        write_monomial(&mut out, alpha, ctx);
    }
    out
}

/// `((2,2), 3)`
pub fn format_entry(entry: &BasisEntry) -> String {
    format!("({}, {})", entry.alpha, entry.a)
}
