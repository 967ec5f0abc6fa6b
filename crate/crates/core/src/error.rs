use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("kappa must be non-negative (got {0})")]
    NegativeKappa(i64),

    #[error("kappa {0} is odd; quantum rings are only built for even surfaces F_2k")]
    OddKappa(u32),

    #[error("divisor index {0} is out of range 1..=4")]
    InvalidDivisor(usize),

    #[error("P1 invariant needs m >= 3 and 0 <= s <= m (got s = {s}, m = {m})")]
    InvalidCp1 { s: usize, m: usize },

    #[error("{0} marked points is unstable; at least 3 are needed")]
    Unstable(usize),

    #[error("a product needs at least 2 factors (got {0})")]
    TooFewFactors(usize),

    #[error("non-integral coefficient {0} in a result that must be integral")]
    NonIntegral(String),

    #[error("element {0} is not a combination of 1, Z1, Z4, Z1*Z4")]
    NotInBasis(String),

    #[error("element {0} involves q; a classical class was expected")]
    NotClassical(String),

    #[error("relation {0} has no Z-part, so q1, q2 would not be free parameters")]
    DegenerateRelation(String),

    #[error("Batyrev result {0} has monomials of Z-degree >= 2 with no classical-basis reading")]
    BatyrevNotClassical(String),

    #[error("factor {0} has a point-class part, which has no monomial reading in Batyrev's ring")]
    UnsupportedFactor(String),

    #[error("independent routes disagree: {0}")]
    Mismatch(String),

    #[error("cannot parse {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable identifier, printed by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NegativeKappa(_) => "negative-kappa",
            Error::OddKappa(_) => "odd-kappa",
            Error::InvalidDivisor(_) => "invalid-divisor",
            Error::InvalidCp1 { .. } => "invalid-cp1-query",
            Error::Unstable(_) => "unstable",
            Error::TooFewFactors(_) => "too-few-factors",
            Error::NonIntegral(_) => "non-integral",
            Error::NotInBasis(_) => "not-in-basis",
            Error::NotClassical(_) => "not-classical",
            Error::DegenerateRelation(_) => "degenerate-relation",
            Error::BatyrevNotClassical(_) => "batyrev-not-classical",
            Error::UnsupportedFactor(_) => "unsupported-factor",
            Error::Mismatch(_) => "mismatch",
            Error::Parse(_) => "parse",
        }
    }
}
