use core::fmt;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `d` has a square factor and cannot define a field context.
    NotSquareFree(u64),
    /// `d` must be a square-free integer greater than 1.
    DTooSmall(u64),
    /// Two operands belong to different fields.
    FieldMismatch { left: u64, right: u64 },
    /// Denominator 2 is only available when d ≡ 1 (mod 4).
    HalfBasisUnavailable(u64),
    /// With denominator 2 the coordinates must have equal parity.
    MixedParity,
    /// Denominator must be 1 or 2.
    BadDenominator(u8),
    /// Division by the zero element.
    DivisionByZero,
    /// Expected a unit (norm ±1) other than ±1.
    NotAUnit,
    /// α − 1 must be a unit for the Mersenne construction.
    AlphaMinusOneNotUnit,
    /// Operation requires an odd argument greater than the stated bound.
    OddArgumentRequired { got: u64, min: u64 },
    /// Primality queries need N ≥ 2.
    BelowTwo,
    /// Jacobi symbols and modular square roots need an odd positive modulus.
    BadModulus,
    /// Miller–Rabin base out of range [2, N−2] or N even/small.
    BadMillerRabinInput,
    /// Primality configuration out of range (trial_bound ≥ 2, mr_rounds ≥ 1).
    BadConfig,
    /// Square roots of negative integers are undefined here.
    NegativeInput,
    /// Could not parse a quadratic integer from text.
    Parse(ParseError),
}

/// Why a textual quadratic integer failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    BadStructure,
    BadDigit,
    WrongField { expected: u64, found: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquareFree(d) => write!(f, "d = {d} is not square-free"),
            Error::DTooSmall(d) => write!(f, "d = {d} must be a square-free integer > 1"),
            Error::FieldMismatch { left, right } => {
                write!(f, "field mismatch: Q(\u{221a}{left}) vs Q(\u{221a}{right})")
            }
            Error::HalfBasisUnavailable(d) => {
                write!(f, "denominator 2 requires d \u{2261} 1 (mod 4), but d = {d}")
            }
            Error::MixedParity => write!(f, "coordinates over denominator 2 must share parity"),
            Error::BadDenominator(den) => write!(f, "denominator must be 1 or 2, got {den}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotAUnit => write!(f, "expected a unit other than \u{b1}1"),
            Error::AlphaMinusOneNotUnit => write!(f, "\u{3b1} \u{2212} 1 is not a unit"),
            Error::OddArgumentRequired { got, min } => {
                write!(f, "argument must be odd and > {min}, got {got}")
            }
            Error::BelowTwo => write!(f, "primality is only defined for N \u{2265} 2"),
            Error::BadModulus => write!(f, "modulus must be odd and positive"),
            Error::BadMillerRabinInput => {
                write!(f, "Miller\u{2013}Rabin needs odd N \u{2265} 3 and base in [2, N\u{2212}2]")
            }
            Error::BadConfig => {
                write!(f, "config needs trial_bound \u{2265} 2 and mr_rounds \u{2265} 1")
            }
            Error::NegativeInput => write!(f, "argument must be nonnegative"),
            Error::Parse(e) => write!(f, "parse error: {e}"),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty input"),
            ParseError::BadStructure => write!(f, "does not match a+b\u{221a}d or (a+b\u{221a}d)/2"),
            ParseError::BadDigit => write!(f, "invalid integer literal"),
            ParseError::WrongField { expected, found } => {
                write!(f, "radicand {found} does not match field d = {expected}")
            }
        }
    }
}

impl core::error::Error for Error {}
