use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("degree too small: need degree >= {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },

    #[error("even degree required, got {0}")]
    OddDegree(u64),

    /// Counting formulas exist only in degrees congruent to 0 or 6 mod 8.
    /// No Littlewood polynomial of even degree congruent to 2 or 4 mod 8
    /// has square discriminant, and odd degrees have no family formula.
    #[error("unsupported degree {0}: family counts are defined for even degree >= 6 congruent to 0 or 6 (mod 8); no Littlewood polynomial of degree congruent to 2 or 4 (mod 8) has square discriminant")]
    UnsupportedDegree(u64),

    #[error("degree {degree} is outside the residue classes 2, 4 (mod 8)")]
    WrongResidueClass { degree: u64 },

    #[error("enumeration too large: {bits} free bits exceeds the guard of {guard} bits")]
    EnumerationTooLarge { bits: u32, guard: u32 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("ambiguous slope comparison: ratio {s}/{r} falls inside the enclosure of an irrational sector bound; raise the working precision")]
    AmbiguousSlope { s: u64, r: u64 },

    #[error("binomial offset is not an integer at tuple ({k},{r},{s}); the parity analysis behind the counting formula is violated")]
    OffsetNotIntegral { k: u64, r: u64, s: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code for the CLI: 2 for invalid or unsupported input, 1 for
    /// internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnsupportedDegree(_)
            | Error::WrongResidueClass { .. }
            | Error::OddDegree(_)
            | Error::DegreeTooSmall { .. }
            | Error::ZeroPolynomial
            | Error::EnumerationTooLarge { .. }
            | Error::InvalidInput(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
