use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Ring axiom that failed during exhaustive validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    AddCommutative,
    AddAssociative,
    MulCommutative,
    MulAssociative,
    Distributive,
    Unity,
    ZeroAbsorbs,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::AddCommutative => "a+b = b+a",
            Law::AddAssociative => "(a+b)+c = a+(b+c)",
            Law::MulCommutative => "ab = ba",
            Law::MulAssociative => "(ab)c = a(bc)",
            Law::Distributive => "a(b+c) = ab+ac",
            Law::Unity => "1a = a",
            Law::ZeroAbsorbs => "0a = 0",
        };
        f.write_str(s)
    }
}

/// Certified interval returned when a solver runs out of time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub lower: usize,
    pub upper: Option<usize>,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(ub) => write!(f, "{} budget exceeded; certified interval [{}, {}]", self.what, self.lower, ub),
            None => write!(f, "{} budget exceeded; best lower bound {}", self.what, self.lower),
        }
    }
}

impl std::error::Error for BudgetExceeded {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 1")]
    InvalidModulus(u64),

    #[error("ring of {size} elements exceeds the size cap of {cap}")]
    Capacity { size: u128, cap: usize },

    #[error("element index {index} out of range for a ring of {size} elements")]
    Element { index: usize, size: usize },

    #[error("bad ring descriptor: {0}")]
    Descriptor(String),

    #[error("not a ring: {law} fails for a={a}, b={b}, c={c}")]
    NotARing { law: Law, a: String, b: String, c: String },

    #[error("syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error(transparent)]
    Budget(#[from] BudgetExceeded),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
