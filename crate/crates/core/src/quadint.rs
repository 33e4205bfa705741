//! Exact arithmetic in the ring of integers O_K of a real quadratic field Q(√d).
//!
//! O_K is Z[√d] when d ≡ 2,3 (mod 4) and Z[(1+√d)/2] when d ≡ 1 (mod 4).
//! Elements are stored as (a + b√d)/den with den ∈ {1, 2} over a common
//! denominator rather than in the {1, ω} basis, which keeps conjugation and
//! norm formulas uniform across both ring shapes.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError};

/// Square-free d < 500 whose real quadratic field Q(√d) has class number 1.
const CLASS_NUMBER_ONE: [u16; 141] = [
    2, 3, 5, 6, 7, 11, 13, 14, 17, 19, 21, 22,
    23, 29, 31, 33, 37, 38, 41, 43, 46, 47, 53, 57,
    59, 61, 62, 67, 69, 71, 73, 77, 83, 86, 89, 93,
    94, 97, 101, 103, 107, 109, 113, 118, 127, 129, 131, 133,
    134, 137, 139, 141, 149, 151, 157, 158, 161, 163, 166, 167,
    173, 177, 179, 181, 191, 193, 197, 199, 201, 206, 209, 211,
    213, 214, 217, 227, 233, 237, 239, 241, 249, 251, 253, 262,
    263, 269, 271, 277, 278, 281, 283, 293, 301, 302, 307, 309,
    311, 313, 317, 329, 331, 334, 337, 341, 347, 349, 353, 358,
    367, 373, 379, 381, 382, 383, 389, 393, 397, 398, 409, 413,
    417, 419, 421, 422, 431, 433, 437, 446, 449, 453, 454, 457,
    461, 463, 467, 478, 479, 487, 489, 491, 497,
];

/// A real quadratic field Q(√d) with its ring-of-integers basis mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    d: u64,
    half_basis: bool,
    class_number_one: bool,
}

impl FieldCtx {
    /// Builds the field context for Q(√d); rejects d ≤ 1 and non-square-free d.
    pub fn new(d: u64) -> Result<Self, Error> {
        if d < 2 {
            return Err(Error::DTooSmall(d));
        }
        if !is_square_free(d) {
            return Err(Error::NotSquareFree(d));
        }
        Ok(FieldCtx {
            d,
            half_basis: d % 4 == 1,
            class_number_one: d < 500 && CLASS_NUMBER_ONE.binary_search(&(d as u16)).is_ok(),
        })
    }

    /// The square-free radicand.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// True iff O_K = Z[(1+√d)/2], i.e. d ≡ 1 (mod 4).
    pub fn half_basis(&self) -> bool {
        self.half_basis
    }

    /// True iff d is in the embedded table of class-number-1 fields (d < 500).
    /// Fields outside the table are constructible but flagged false.
    pub fn class_number_one(&self) -> bool {
        self.class_number_one
    }

    /// The zero element.
    pub fn zero(&self) -> QuadInt {
        QuadInt {
            field: *self,
            a: BigInt::zero(),
            b: BigInt::zero(),
            den: 1,
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> QuadInt {
        self.from_integer(BigInt::one())
    }

    /// Embeds a rational integer diagonally.
    pub fn from_integer(&self, n: impl Into<BigInt>) -> QuadInt {
        QuadInt {
            field: *self,
            a: n.into(),
            b: BigInt::zero(),
            den: 1,
        }
    }

    /// √d as an element of O_K.
    pub fn sqrt_d(&self) -> QuadInt {
        QuadInt {
            field: *self,
            a: BigInt::zero(),
            b: BigInt::one(),
            den: 1,
        }
    }
}

fn is_square_free(d: u64) -> bool {
    if d.is_multiple_of(4) {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// An element (a + b√d)/den of O_K with arbitrary-precision coordinates.
///
/// Canonical form: den = 2 only when d ≡ 1 (mod 4) and a, b are both odd;
/// if both coordinates are even the element reduces to den = 1. Equality is
/// plain field equality on canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    field: FieldCtx,
    a: BigInt,
    b: BigInt,
    den: u8,
}

impl QuadInt {
    /// Builds (a + b√d)/den, canonicalizing and validating the invariants.
    pub fn new(
        field: FieldCtx,
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        den: u8,
    ) -> Result<Self, Error> {
        let mut a: BigInt = a.into();
        let mut b: BigInt = b.into();
        let mut den = den;
        match den {
            1 => {}
            2 => {
                let a_even = (&a % 2u8).is_zero();
                let b_even = (&b % 2u8).is_zero();
                if a_even && b_even {
                    a /= 2;
                    b /= 2;
                    den = 1;
                } else if a_even != b_even {
                    return Err(Error::MixedParity);
                } else if !field.half_basis {
                    return Err(Error::HalfBasisUnavailable(field.d));
                }
            }
            other => return Err(Error::BadDenominator(other)),
        }
        Ok(QuadInt { field, a, b, den })
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    /// Numerator coordinate of 1.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Numerator coordinate of √d.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// Common denominator, 1 or 2.
    pub fn den(&self) -> u8 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den == 1 && self.a.is_one() && self.b.is_zero()
    }

    /// True for the rational integers ±1.
    pub fn is_plus_minus_one(&self) -> bool {
        self.den == 1 && self.b.is_zero() && self.a.magnitude().is_one()
    }

    fn check_field(&self, other: &Self) -> Result<(), Error> {
        if self.field.d == other.field.d {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.d,
                right: other.field.d,
            })
        }
    }

    /// Exact sum; errors on field mismatch.
    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_field(other)?;
        let (a, b, den) = if self.den == other.den {
            (&self.a + &other.a, &self.b + &other.b, self.den)
        } else if self.den == 1 {
            (2 * &self.a + &other.a, 2 * &self.b + &other.b, 2)
        } else {
            (&self.a + 2 * &other.a, &self.b + 2 * &other.b, 2)
        };
        QuadInt::new(self.field, a, b, den)
    }

    /// Exact difference; errors on field mismatch.
    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.checked_add(&other.negated())
    }

    /// Exact product; errors on field mismatch.
    ///
    /// (a₁+b₁√d)(a₂+b₂√d) = (a₁a₂ + d·b₁b₂) + (a₁b₂ + a₂b₁)√d, with the
    /// denominators multiplied and reduced. Ring closure guarantees a den-4
    /// numerator is divisible by 2.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_field(other)?;
        let d = BigInt::from(self.field.d);
        let mut a = &self.a * &other.a + d * &self.b * &other.b;
        let mut b = &self.a * &other.b + &self.b * &other.a;
        let den = match self.den * other.den {
            4 => {
                debug_assert!((&a % 2u8).is_zero() && (&b % 2u8).is_zero());
                a /= 2;
                b /= 2;
                2
            }
            den => den,
        };
        QuadInt::new(self.field, a, b, den)
    }

    /// Additive inverse.
    pub fn negated(&self) -> Self {
        QuadInt {
            field: self.field,
            a: -&self.a,
            b: -&self.b,
            den: self.den,
        }
    }

    /// Galois conjugate: b ↦ −b.
    pub fn conj(&self) -> Self {
        QuadInt {
            field: self.field,
            a: self.a.clone(),
            b: -&self.b,
            den: self.den,
        }
    }

    /// Field norm (a² − d·b²)/den², always a rational integer.
    pub fn norm(&self) -> BigInt {
        let n = &self.a * &self.a - BigInt::from(self.field.d) * &self.b * &self.b;
        if self.den == 2 {
            debug_assert!((&n % 4u8).is_zero());
            n / 4
        } else {
            n
        }
    }

    /// Field trace 2a/den, always a rational integer.
    pub fn trace(&self) -> BigInt {
        if self.den == 2 {
            self.a.clone()
        } else {
            2 * &self.a
        }
    }

    /// Binary exponentiation; pow(x, 0) = 1.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&base).expect("same field");
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base).expect("same field");
            }
        }
        result
    }

    /// Exact division in O_K: returns q with q·y = x when x/y ∈ O_K, else None.
    ///
    /// Computed as x·conj(y)/N(y) followed by an integrality check against the
    /// half-integer lattice.
    pub fn exact_div(&self, other: &Self) -> Result<Option<Self>, Error> {
        self.check_field(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let z = self.checked_mul(&other.conj())?;
        let n = other.norm();
        // q = (z.a + z.b√d)/(n·z.den); q ∈ O_K forces 2q ∈ Z[√d].
        let denom = &n * BigInt::from(z.den);
        let a2: BigInt = 2 * &z.a;
        let b2: BigInt = 2 * &z.b;
        if !(&a2 % &denom).is_zero() || !(&b2 % &denom).is_zero() {
            return Ok(None);
        }
        match QuadInt::new(self.field, a2 / &denom, b2 / &denom, 2) {
            Ok(q) => Ok(Some(q)),
            Err(Error::MixedParity) | Err(Error::HalfBasisUnavailable(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// True iff |N(x)| = 1.
    pub fn is_unit(&self) -> bool {
        self.norm().magnitude().is_one()
    }

    /// Parses the rendering produced by `Display`: `a`, `b√d`, `a+b√d`,
    /// `(a+b√d)/2` with optional signs and an implicit 1 before √.
    pub fn parse(field: FieldCtx, input: &str) -> Result<Self, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse(ParseError::Empty));
        }
        let (inner, den) = if let Some(rest) = s.strip_prefix('(') {
            let body = rest
                .strip_suffix(")/2")
                .ok_or(Error::Parse(ParseError::BadStructure))?;
            (body, 2u8)
        } else {
            (s.as_str(), 1u8)
        };
        let (a, b, d_seen) = parse_inner(inner)?;
        if let Some(d) = d_seen {
            if d != field.d() {
                return Err(Error::Parse(ParseError::WrongField {
                    expected: field.d(),
                    found: d,
                }));
            }
        }
        QuadInt::new(field, a, b, den)
    }
}

/// Splits `inner` into the rational part and the √-part.
fn parse_inner(inner: &str) -> Result<(BigInt, BigInt, Option<u64>), Error> {
    let bad = || Error::Parse(ParseError::BadStructure);
    // Terms start at index 0 or at a +/- that is not the leading sign.
    let mut terms: alloc::vec::Vec<&str> = alloc::vec::Vec::new();
    let mut start = 0usize;
    for (i, c) in inner.char_indices() {
        if (c == '+' || c == '-') && i != 0 {
            terms.push(&inner[start..i]);
            start = i;
        }
    }
    terms.push(&inner[start..]);
    if terms.len() > 2 {
        return Err(bad());
    }

    let mut a = BigInt::zero();
    let mut b = BigInt::zero();
    let mut d_seen = None;
    let mut saw_radical = false;
    for (idx, term) in terms.iter().enumerate() {
        if term.is_empty() || *term == "+" || *term == "-" {
            return Err(bad());
        }
        if let Some(pos) = term.find('\u{221a}') {
            // radical term must be the last
            if saw_radical {
                return Err(bad());
            }
            saw_radical = true;
            let coeff = &term[..pos];
            let rad = &term[pos + '\u{221a}'.len_utf8()..];
            let d: u64 = rad
                .parse()
                .map_err(|_| Error::Parse(ParseError::BadDigit))?;
            d_seen = Some(d);
            b = match coeff {
                "" | "+" => BigInt::one(),
                "-" => -BigInt::one(),
                lit => lit
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(ParseError::BadDigit))?,
            };
        } else {
            // rational term must come first
            if idx != 0 {
                return Err(bad());
            }
            a = term
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(ParseError::BadDigit))?;
        }
    }
    Ok((a, b, d_seen))
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if self.b.is_zero() {
                return write!(f, "{}", self.a);
            }
            if !self.a.is_zero() {
                write!(f, "{}", self.a)?;
                if self.b.is_positive() {
                    write!(f, "+")?;
                }
            }
            if self.b.magnitude().is_one() {
                if self.b.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", self.b)?;
            }
            write!(f, "\u{221a}{}", self.field.d)
        };
        if self.den == 2 {
            write!(f, "(")?;
            inner(f)?;
            write!(f, ")/2")
        } else {
            inner(f)
        }
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        self.checked_add(rhs).expect("quadratic integer addition")
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        self.checked_sub(rhs).expect("quadratic integer subtraction")
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        self.checked_mul(rhs).expect("quadratic integer multiplication")
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        self.negated()
    }
}
