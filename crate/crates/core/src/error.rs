use thiserror::Error;

/// Why a presentation fails to be admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub enum AdmissibleFailure {
    /// A relation has a term of length 0 or 1.
    LengthOneTerm,
    /// Some path of length `cap` survives in the quotient.
    CapExceeded,
    /// A relation mixes paths of different lengths.
    NonHomogeneous,
}

impl std::fmt::Display for AdmissibleFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            AdmissibleFailure::LengthOneTerm => "lengthOneTerm",
            AdmissibleFailure::CapExceeded => "capExceeded",
            AdmissibleFailure::NonHomogeneous => "nonHomogeneous",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("NonPrimeModulus: {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("NotSquarefree: gcd(f, f') is not 1 for {0}")]
    NotSquarefree(String),
    #[error("MalformedDescriptor: {0}")]
    MalformedDescriptor(String),
    #[error("NotAField: {0}")]
    NotAField(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("SyntaxError at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("UnknownVertex: {0}")]
    UnknownVertex(String),
    #[error("UnknownArrow: {0}")]
    UnknownArrow(String),
    #[error("NonComposablePath: {0}")]
    NonComposablePath(String),
    #[error("NonParallelRelation: {0}")]
    NonParallelRelation(String),
    #[error("NotAdmissible({reason}): {detail}")]
    NotAdmissible {
        reason: AdmissibleFailure,
        detail: String,
    },
    #[error("PositiveCharacteristic: trace-form radical needs characteristic 0; use a designated radical basis")]
    PositiveCharacteristic,
    #[error("RadicalUnavailable: no designated radical and the trace form cannot be used")]
    RadicalUnavailable,
    #[error("NonSplitSemisimpleQuotient: {0} (try extending the field)")]
    NonSplitSemisimpleQuotient(String),
    #[error("CenterNotSplit: {0}")]
    CenterNotSplit(String),
    #[error("NotBasic: {0}")]
    NotBasic(String),
    #[error("CapTooSmall: {0}")]
    CapTooSmall(String),
    #[error("InvalidAlgebra: {0}")]
    InvalidAlgebra(String),
    #[error("InvalidModule: {0}")]
    InvalidModule(String),
    #[error("InseparablePolynomial: {0}")]
    InseparablePolynomial(String),
    #[error("FieldMismatch: {0}")]
    FieldMismatch(String),
    #[error("InvalidAction: {0}")]
    InvalidAction(String),
    #[error("InvalidMorphism: {0}")]
    InvalidMorphism(String),
    #[error("NotApplicable: {0}")]
    NotApplicable(String),
    #[error("InvalidComplex: {0}")]
    InvalidComplex(String),
    #[error("DictionaryUnavailable: {0}")]
    DictionaryUnavailable(String),
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("InfiniteFieldUnsupported: the enumeration sampler needs a finite prime field")]
    InfiniteFieldUnsupported,
    #[error("DepthInsufficient: {0}")]
    DepthInsufficient(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// The variant name, used in reports and CLI messages.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPrimeModulus(_) => "NonPrimeModulus",
            Error::NotSquarefree(_) => "NotSquarefree",
            Error::MalformedDescriptor(_) => "MalformedDescriptor",
            Error::NotAField(_) => "NotAField",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownArrow(_) => "UnknownArrow",
            Error::NonComposablePath(_) => "NonComposablePath",
            Error::NonParallelRelation(_) => "NonParallelRelation",
            Error::NotAdmissible { .. } => "NotAdmissible",
            Error::PositiveCharacteristic => "PositiveCharacteristic",
            Error::RadicalUnavailable => "RadicalUnavailable",
            Error::NonSplitSemisimpleQuotient(_) => "NonSplitSemisimpleQuotient",
            Error::CenterNotSplit(_) => "CenterNotSplit",
            Error::NotBasic(_) => "NotBasic",
            Error::CapTooSmall(_) => "CapTooSmall",
            Error::InvalidAlgebra(_) => "InvalidAlgebra",
            Error::InvalidModule(_) => "InvalidModule",
            Error::InseparablePolynomial(_) => "InseparablePolynomial",
            Error::FieldMismatch(_) => "FieldMismatch",
            Error::InvalidAction(_) => "InvalidAction",
            Error::InvalidMorphism(_) => "InvalidMorphism",
            Error::NotApplicable(_) => "NotApplicable",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::DictionaryUnavailable(_) => "DictionaryUnavailable",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::InfiniteFieldUnsupported => "InfiniteFieldUnsupported",
            Error::DepthInsufficient(_) => "DepthInsufficient",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
