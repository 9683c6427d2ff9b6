use std::fmt;

use thiserror::Error;
use vanideal_core::Modulus;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("at least one variable is required")]
    NoVariables,
    #[error("invalid variable name {0:?} (expected [A-Za-z][A-Za-z0-9_]*)")]
    InvalidName(String),
    #[error("variable {0:?} listed twice")]
    Duplicate(String),
}

/// A coefficient ring `Z/m` together with named variables `x_1..x_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingContext {
    modulus: Modulus,
    names: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: Into<String>>(modulus: Modulus, names: impl IntoIterator<Item = S>) -> Result<Self, ContextError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(ContextError::NoVariables);
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(ContextError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(ContextError::Duplicate(name.clone()));
            }
        }
        Ok(RingContext { modulus, names })
    }

    /// Parses a comma-separated list such as `"x, y, z"`.
    pub fn from_var_list(modulus: Modulus, vars: &str) -> Result<Self, ContextError> {
        Self::new(modulus, vars.split(',').map(str::trim))
    }

    /// `x1, ..., xn`.
    pub fn numbered(modulus: Modulus, nvars: usize) -> Self {
        Self::new(modulus, (1..=nvars).map(|i| format!("x{i}"))).expect("generated names are valid")
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}[{}]", self.modulus, self.names.join(","))
    }
}
