use crate::exact::Natural;

/// Errors produced by the library. Everything else is a plain value:
/// the decision procedures themselves are total and never fail.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The fixed-point oracle could not certify its candidate floor at the
    /// requested number of guard bits. Retry with more bits.
    #[error("precision insufficient at {guard_bits} guard bits")]
    PrecisionInsufficient { guard_bits: u64 },

    /// The exact residue path only supports modulus 2; other moduli would
    /// require irrational arithmetic.
    #[error("unsupported modulus {0}: exact path handles m = 2 only")]
    UnsupportedModulus(Natural),

    /// The complementary partner sequence starts at n = 1.
    #[error("complement partner requires n >= 1")]
    ZeroIndex,

    /// A rational value with denominator zero.
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    /// A string that does not parse as `p` or `p/q`.
    #[error("invalid rational {input:?}: expected \"p\" or \"p/q\" with nonnegative integers")]
    InvalidRational { input: String },

    /// A bit stream element outside {0, 1}.
    #[error("bit at position {position} is {value}, expected 0 or 1")]
    InvalidBit { position: usize, value: u8 },

    /// A b-file line that is not an `index value` pair.
    #[error("malformed b-file line {line}: {reason}")]
    MalformedBFileLine { line: usize, reason: String },

    /// B-file indices must be strictly increasing.
    #[error("non-monotone index at line {line}")]
    NonMonotoneIndex { line: usize },

    /// Raster output would exceed the per-side cell limit.
    #[error("raster too large: {width}x{height} cells exceeds {max} per side")]
    RasterTooLarge { width: u64, height: u64, max: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
