use thiserror::Error;

use crate::word::Word;

/// Errors raised by the deciders, simulators and constructions in this crate.
///
/// Malformed machine and circuit encodings are not errors; they decode to
/// the trivial machine or circuit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NonRealInput: value has a non-zero imaginary part")]
    NonRealInput,
    #[error("NotHermitian: matrix is not equal to its conjugate transpose")]
    NotHermitian,
    #[error("DimensionCap: {what} {requested} exceeds cap {cap}")]
    DimensionCap {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("BranchFuelExhausted: branch {path:?} did not halt within {fuel} steps")]
    BranchFuelExhausted { path: Vec<usize>, fuel: u64 },
    #[error("WitnessSpaceTooLarge: 2^{bits} witnesses exceed cap 2^{cap}")]
    WitnessSpaceTooLarge { bits: usize, cap: usize },
    #[error("GeneratorFuelExhausted: circuit generator did not halt within {fuel} steps")]
    GeneratorFuelExhausted { fuel: u64 },
    #[error("InputLength: expected {expected} bits, got {got}")]
    InputLength { expected: usize, got: usize },
    #[error("NotTotalDecider: machine emitted {output:?} on {input}")]
    NotTotalDecider { input: Word, output: String },
    #[error("DeciderFuelExhausted: decider did not halt on {input} within {fuel} steps")]
    DeciderFuelExhausted { input: Word, fuel: u64 },
    #[error("ReductionFuelExhausted: reduction did not halt on {input} within {fuel} steps")]
    ReductionFuelExhausted { input: Word, fuel: u64 },
    #[error("NonPromisedQuery: oracle queried on non-promised word {0}")]
    NonPromisedQuery(Word),
    #[error("FuelExhausted: machine did not halt within {fuel} steps")]
    FuelExhausted { fuel: u64 },
    #[error("FuelCap: time constructor did not halt on length {n} within {cap} steps")]
    FuelCap { n: u64, cap: u64 },
    #[error("NotTimeConstructible: length {n} gives step counts {first} and {second}")]
    NotTimeConstructible { n: u64, first: u64, second: u64 },
    #[error("NotGapAdmissible: r({m}) = {value} is not larger than {m}")]
    NotGapAdmissible { m: u64, value: u64 },
    #[error("NoContradictionFound: no contradicting word of length {from}..={cap}{context}")]
    NoContradictionFound {
        from: usize,
        cap: usize,
        context: String,
    },
    #[error("NoInstanceOfA: no no-instance of A up to length {cap}")]
    NoInstanceOfA { cap: usize },
    #[error("Overflow: {0} exceeds 64-bit range")]
    Overflow(&'static str),
    #[error("BudgetExceeded: accounting budget of {budget} units exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("InvalidThresholds: completeness {c} is below soundness {s}")]
    InvalidThresholds { c: String, s: String },
    #[error("Parse: {0}")]
    Parse(String),
    #[error("UnknownProblem: {0}")]
    UnknownProblem(String),
}

impl Error {
    /// The bare error name, as printed by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonRealInput => "NonRealInput",
            Error::NotHermitian => "NotHermitian",
            Error::DimensionCap { .. } => "DimensionCap",
            Error::BranchFuelExhausted { .. } => "BranchFuelExhausted",
            Error::WitnessSpaceTooLarge { .. } => "WitnessSpaceTooLarge",
            Error::GeneratorFuelExhausted { .. } => "GeneratorFuelExhausted",
            Error::InputLength { .. } => "InputLength",
            Error::NotTotalDecider { .. } => "NotTotalDecider",
            Error::DeciderFuelExhausted { .. } => "DeciderFuelExhausted",
            Error::ReductionFuelExhausted { .. } => "ReductionFuelExhausted",
            Error::NonPromisedQuery(_) => "NonPromisedQuery",
            Error::FuelExhausted { .. } => "FuelExhausted",
            Error::FuelCap { .. } => "FuelCap",
            Error::NotTimeConstructible { .. } => "NotTimeConstructible",
            Error::NotGapAdmissible { .. } => "NotGapAdmissible",
            Error::NoContradictionFound { .. } => "NoContradictionFound",
            Error::NoInstanceOfA { .. } => "NoInstanceOfA",
            Error::Overflow(_) => "Overflow",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::InvalidThresholds { .. } => "InvalidThresholds",
            Error::Parse(_) => "Parse",
            Error::UnknownProblem(_) => "UnknownProblem",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
