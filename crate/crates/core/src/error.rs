use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid semidirect action: multiplier {multiplier} on Z_{base} with top Z_{top} (need gcd(r, m) = 1 and r^k = 1 mod m)")]
    InvalidAction { base: u64, top: u64, multiplier: u64 },

    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },

    #[error("malformed group spec: {0}")]
    MalformedSpec(String),

    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("group order {order} exceeds the lattice cap {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },

    #[error("{p} is not a prime dividing the group order {order}")]
    PrimeDoesNotDivideOrder { p: u64, order: usize },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("divisor {divisor} does not divide the scenario order {order}")]
    DivisorNotDividing { divisor: String, order: String },

    #[error("unknown table id {0:?}")]
    UnknownTableId(String),

    #[error("infeasible scenario: {0}")]
    InfeasibleScenario(String),

    #[error("scenario data error: {0}")]
    ScenarioData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
