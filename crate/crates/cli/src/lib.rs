//! Text front end for `vanideal-core`: expression parsing and formatting,
//! JSON basis documents, and the `vanideal` command line.
//!
//! ```
//! use vanideal_cli::{format_poly, parse_poly, RingContext};
//! use vanideal_core::{reduced_nf, Modulus, MonomialOrder};
//!
//! let ctx = RingContext::from_var_list(Modulus::from_u64(4).unwrap(), "x").unwrap();
//! let f = parse_poly("2*x^2 + x", &ctx).unwrap();
//! let nf = reduced_nf(&f, MonomialOrder::Lex);
//! assert_eq!(format_poly(&nf, &ctx, MonomialOrder::Lex), "3*x");
//! ```

pub mod basisfile;
pub mod commands;
pub mod context;
pub mod format;
pub mod parse;

pub use basisfile::{
    deserialize_basis, serialize_basis, serialize_basis_expanded, BasisCache, BasisFileError, CacheStatus,
};
pub use commands::{run, Cli, CliError, Command};
pub use context::{ContextError, RingContext};
pub use format::{format_entry, format_poly};
pub use parse::{parse_poly, ParseError, MAX_EXPONENT};
