use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::ExponentVector;

/// A global monomial order. Variable priority is `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Lex,
    DegLex,
    DegRevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex];

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegLex => a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)),
            MonomialOrder::DegRevLex => a.total_degree().cmp(&b.total_degree()).then_with(|| {
                // smaller exponent in the last differing variable wins
                for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                    match y.cmp(x) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "deglex" | "grlex" => Ok(MonomialOrder::DegLex),
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(format!("unknown monomial order '{other}'")),
        }
    }
}
