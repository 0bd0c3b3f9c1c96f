use thiserror::Error;

/// Errors surfaced by ring arithmetic, factorization, knot routines and
/// the distinguisher. Every variant has a stable machine-readable code
/// (see [`Error::code`]) used by the CLI's error JSON.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero input to {0}")]
    ZeroInput(&'static str),

    #[error("exponent arithmetic overflow")]
    ExponentOverflow,

    #[error("expected a univariate (rank 1) element, got rank {rank}")]
    NotUnivariate { rank: usize },

    #[error("unit input to {0}: units have no irreducible factors")]
    UnitInput(&'static str),

    #[error("alpha is reducible; gamma is defined only for irreducible alpha")]
    ReducibleAlpha,

    #[error("irreducibility is undecidable here: support is neither univariate nor collinear; supply the element in factored form")]
    IrreducibilityUndecidable,

    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("support does not lie on a lattice line")]
    NonCollinearSupport,

    #[error("matrix is not invertible over the integers (determinant {det})")]
    NotUnimodular { det: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("automorphism size {size} does not match rank {rank}")]
    SizeMismatch { size: usize, rank: usize },

    #[error("substitution target has length {target_len} but ambient rank is {ambient}")]
    TargetRankMismatch { target_len: usize, ambient: usize },

    #[error("Seifert matrix must be square of even dimension, got {rows}x{cols}")]
    BadSeifertShape { rows: usize, cols: usize },

    #[error("not an Alexander polynomial: value at t=1 is {value_at_one}, expected +1 or -1")]
    NotAlexander { value_at_one: String },

    #[error("element has no bar-fixed unit multiple")]
    NotSymmetrizable,

    #[error("braid needs at least 2 strands, got {strands}")]
    BadStrandCount { strands: usize },

    #[error("braid generator {index} out of range for {strands} strands")]
    BraidIndexOutOfRange { index: i64, strands: usize },

    #[error("braid closure is not a knot: {detail}")]
    ClosureNotKnot { detail: String },

    #[error("torus knot parameters must be coprime and >= 2, got ({p}, {q})")]
    BadTorusParams { p: i64, q: i64 },

    #[error("torus direction {index} out of range for rank {rank}")]
    TorusDirectionOutOfRange { index: usize, rank: usize },

    #[error("image in the torsion-free quotient is zero; the method does not apply")]
    ZeroTorsionImage,

    #[error("bar pairing failed on factor {factor} (multiplicity {found} vs {expected})")]
    BarPairingFailed {
        factor: String,
        found: u64,
        expected: u64,
    },

    #[error("deltas differ but no distinguishing irreducible factor was found; this contradicts the symmetric-factorization claim and indicates a defect")]
    NoCertificateFound,

    #[error("automorphism does not map basis direction {from} to {to}")]
    AutomorphismPrecondition { from: usize, to: usize },

    #[error("orbit scan exceeded {cap} steps without resolving")]
    OrbitScanOverflow { cap: usize },

    #[error("{labels} basis labels supplied for rank {rank}")]
    LabelCountMismatch { labels: usize, rank: usize },

    #[error("no usable prime found for modular factorization")]
    PrimeScanExhausted,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    /// Stable machine-readable code for the CLI error protocol.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "rank-mismatch",
            Error::DivisionByZero => "division-by-zero",
            Error::ZeroInput(_) => "zero-input",
            Error::ExponentOverflow => "exponent-overflow",
            Error::NotUnivariate { .. } => "not-univariate",
            Error::UnitInput(_) => "unit-input",
            Error::ReducibleAlpha => "reducible-alpha",
            Error::IrreducibilityUndecidable => "irreducibility-undecidable",
            Error::DegreeCapExceeded { .. } => "degree-cap-exceeded",
            Error::NonCollinearSupport => "non-collinear-support",
            Error::NotUnimodular { .. } => "not-unimodular",
            Error::NonSquareMatrix { .. } => "non-square-matrix",
            Error::SizeMismatch { .. } => "size-mismatch",
            Error::TargetRankMismatch { .. } => "target-rank-mismatch",
            Error::BadSeifertShape { .. } => "bad-seifert-shape",
            Error::NotAlexander { .. } => "not-alexander",
            Error::NotSymmetrizable => "not-symmetrizable",
            Error::BadStrandCount { .. } => "bad-strand-count",
            Error::BraidIndexOutOfRange { .. } => "braid-index-out-of-range",
            Error::ClosureNotKnot { .. } => "closure-not-knot",
            Error::BadTorusParams { .. } => "bad-torus-params",
            Error::TorusDirectionOutOfRange { .. } => "torus-direction-out-of-range",
            Error::ZeroTorsionImage => "zero-torsion-image",
            Error::BarPairingFailed { .. } => "bar-pairing-failed",
            Error::NoCertificateFound => "no-certificate-found",
            Error::AutomorphismPrecondition { .. } => "automorphism-precondition",
            Error::OrbitScanOverflow { .. } => "orbit-scan-overflow",
            Error::LabelCountMismatch { .. } => "label-count-mismatch",
            Error::PrimeScanExhausted => "prime-scan-exhausted",
            Error::Parse(e) => e.code(),
        }
    }
}

/// Errors from the text and JSON input formats.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("terms are not sorted lexicographically by exponent")]
    UnsortedTerms,

    #[error("duplicate exponent vector in terms")]
    DuplicateExponent,

    #[error("zero coefficient in terms")]
    ZeroCoefficient,

    #[error("bad coefficient string {0:?}")]
    BadCoefficient(String),

    #[error("exponent vector of length {len} in an element of rank {rank}")]
    WrongExponentLength { len: usize, rank: usize },

    #[error("exponent {0} outside the supported range")]
    ExponentRange(i64),

    #[error("rank {0} outside the supported range")]
    RankRange(usize),

    #[error("bad braid word token {0:?}")]
    BadBraidToken(String),

    #[error("braid generator index 0 is not allowed")]
    ZeroBraidIndex,

    #[error("unknown knot spec kind {0:?}; expected torus|braid|seifert|coeffs")]
    UnknownSpecKind(String),

    #[error("malformed knot spec: {0}")]
    BadSpec(String),

    #[error("unknown schema {0:?}")]
    UnknownSchema(String),

    #[error("{0}")]
    Invalid(String),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Json(_) => "malformed-json",
            ParseError::UnsortedTerms => "unsorted-terms",
            ParseError::DuplicateExponent => "duplicate-exponent",
            ParseError::ZeroCoefficient => "zero-coefficient",
            ParseError::BadCoefficient(_) => "bad-coefficient",
            ParseError::WrongExponentLength { .. } => "wrong-exponent-length",
            ParseError::ExponentRange(_) => "exponent-range",
            ParseError::RankRange(_) => "rank-range",
            ParseError::BadBraidToken(_) => "bad-braid-token",
            ParseError::ZeroBraidIndex => "zero-braid-index",
            ParseError::UnknownSpecKind(_) => "unknown-spec-kind",
            ParseError::BadSpec(_) => "bad-spec",
            ParseError::UnknownSchema(_) => "unknown-schema",
            ParseError::Invalid(_) => "invalid-input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
