//! Mersenne candidates M_{p,α} = (α^p − 1)/(α − 1) in Q(√d).
//!
//! α = 1 + u for a unit u ≠ ±1. The four irreducibility cases split on
//! d mod 4 and N(u):
//!
//! * d ≡ 2,3, N(u) = −1: irreducible only for d = 2 (α norm is ±2);
//! * d ≡ 1,   N(u) = −1: N(α) = a, irreducible iff a is prime;
//! * d ≡ 2,3, N(u) = +1: N(α) = 2(1+a), always reducible;
//! * d ≡ 1,   N(u) = +1: N(α) = a+2, irreducible iff a+2 is prime.
//!
//! For Q(√2) with α = 2+√2 = u√2 the norms collapse to the closed form
//! N(M_{p,α}) = 2^{(p+3)/2}·w_p − 2^p − 1 where uⁿ = vₙ + wₙ√2, which also
//! yields the Riesel shape h·2ⁿ − 1.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::primality::{self, Primality, PrimalityConfig};
use crate::quadint::{FieldCtx, QuadInt};
use crate::units::UnitElem;

/// Which of the four irreducibility cases (d mod 4, N(u)) applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaCase {
    /// d ≡ 2,3 (mod 4), N(u) = −1
    T1,
    /// d ≡ 1 (mod 4), N(u) = −1
    T2,
    /// d ≡ 2,3 (mod 4), N(u) = +1
    T3,
    /// d ≡ 1 (mod 4), N(u) = +1
    T4,
}

/// Irreducibility verdict for α = 1 + u.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaVerdict {
    /// |N(α)| is a rational prime.
    Irreducible,
    /// |N(α)| is composite.
    Reducible,
    /// |N(α)| = 1, so α is itself a unit.
    IsUnit,
}

/// A candidate generator α = 1 + u with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaChoice {
    pub field: FieldCtx,
    pub unit: UnitElem,
    pub alpha: QuadInt,
    pub alpha_norm: BigInt,
    pub case: AlphaCase,
    pub verdict: AlphaVerdict,
}

/// Classifies α = 1 + u; rejects u = ±1.
///
/// The norm is computed as N(1+u) = 1 + Tr(u) + N(u) and cross-checked
/// against the direct norm of α.
pub fn classify_alpha(field: &FieldCtx, u: &UnitElem) -> Result<AlphaChoice, Error> {
    if u.value().is_plus_minus_one() {
        return Err(Error::NotAUnit);
    }
    if u.value().field() != *field {
        return Err(Error::FieldMismatch {
            left: field.d(),
            right: u.value().field().d(),
        });
    }
    let alpha = field.one().checked_add(u.value())?;
    let alpha_norm = BigInt::one() + u.value().trace() + u.value().norm();
    debug_assert_eq!(alpha_norm, alpha.norm());
    let case = match (field.half_basis(), u.norm_sign() < 0) {
        (false, true) => AlphaCase::T1,
        (true, true) => AlphaCase::T2,
        (false, false) => AlphaCase::T3,
        (true, false) => AlphaCase::T4,
    };
    let verdict = if alpha_norm.magnitude().is_one() {
        AlphaVerdict::IsUnit
    } else if alpha_norm.is_zero() {
        AlphaVerdict::Reducible
    } else if primality::is_probable_prime(alpha_norm.magnitude(), &PrimalityConfig::default())?
        .is_probable_prime()
    {
        AlphaVerdict::Irreducible
    } else {
        AlphaVerdict::Reducible
    };
    Ok(AlphaChoice {
        field: *field,
        unit: u.clone(),
        alpha,
        alpha_norm,
        case,
        verdict,
    })
}

/// Classifies 1 + (±u^±k) for 1 ≤ k ≤ `max_unit_power` and returns the
/// irreducible hits, deduplicated up to conjugation.
///
/// The candidate set is closed under conjugation (conj(u^k) = ±u^{−k}), so
/// keeping the representative with positive √d coordinate dedupes conjugate
/// pairs.
pub fn alpha_menu(field: &FieldCtx, max_unit_power: u64) -> Vec<AlphaChoice> {
    let fundamental = crate::units::fundamental_unit(field);
    let mut out: Vec<AlphaChoice> = Vec::new();
    for k in 1..=max_unit_power {
        let pos = fundamental.power(k);
        let neg_k = fundamental.inverse().power(k);
        for u in [pos.clone(), pos.negated(), neg_k.clone(), neg_k.negated()] {
            if u.value().is_plus_minus_one() || u.value().b().is_negative() {
                continue;
            }
            let choice = classify_alpha(field, &u).expect("u is a unit ≠ ±1");
            if choice.verdict != AlphaVerdict::Irreducible {
                continue;
            }
            if !out.iter().any(|c| c.alpha == choice.alpha) {
                out.push(choice);
            }
        }
    }
    out
}

/// M_{n,α} = 1 + α + ... + α^{n−1}, by exact division of α^n − 1 by α − 1.
pub fn mersenne_element(alpha: &QuadInt, n: u64) -> Result<QuadInt, Error> {
    let field = alpha.field();
    let one = field.one();
    let u = alpha.checked_sub(&one)?;
    if !u.is_unit() {
        return Err(Error::AlphaMinusOneNotUnit);
    }
    let num = alpha.pow(n).checked_sub(&one)?;
    let q = num.exact_div(&u)?.expect("α − 1 is a unit, so division is exact");
    Ok(q)
}

/// Same element evaluated as the geometric sum by Horner's rule; used to
/// cross-check the division route.
pub fn mersenne_element_geometric(alpha: &QuadInt, n: u64) -> Result<QuadInt, Error> {
    let field = alpha.field();
    let one = field.one();
    if !alpha.checked_sub(&one)?.is_unit() {
        return Err(Error::AlphaMinusOneNotUnit);
    }
    let mut acc = field.zero();
    for _ in 0..n {
        acc = acc.checked_mul(alpha)?.checked_add(&one)?;
    }
    Ok(acc)
}

/// |N(M_{n,α})|.
pub fn mersenne_norm(alpha: &QuadInt, n: u64) -> Result<BigUint, Error> {
    Ok(mersenne_element(alpha, n)?.norm().magnitude().clone())
}

/// Coefficients of uⁿ = vₙ + wₙ√2 for the fundamental unit u = 1+√2.
///
/// vₙ² − 2wₙ² = (−1)ⁿ, and wₙ is odd exactly when n is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VWPair {
    pub n: u64,
    pub v: BigInt,
    pub w: BigInt,
}

/// Iterates v_{k+1} = v_k + 2w_k, w_{k+1} = v_k + w_k from (v₁, w₁) = (1, 1).
pub fn vw(n: u64) -> VWPair {
    assert!(n >= 1, "vw is defined for n ≥ 1");
    let mut v = BigInt::one();
    let mut w = BigInt::one();
    for _ in 1..n {
        let v_next = &v + 2 * &w;
        let w_next = &v + &w;
        v = v_next;
        w = w_next;
    }
    VWPair { n, v, w }
}

/// The k-step jump matrix: (v_{n+k}, w_{n+k}) = (A·vₙ + B·wₙ, C·vₙ + D·wₙ),
/// computed as the k-th power of [[1, 2], [1, 1]].
pub fn jump_coefficients(k: u64) -> (BigInt, BigInt, BigInt, BigInt) {
    // matrix power by repeated squaring
    let mul = |x: &(BigInt, BigInt, BigInt, BigInt), y: &(BigInt, BigInt, BigInt, BigInt)| {
        (
            &x.0 * &y.0 + &x.1 * &y.2,
            &x.0 * &y.1 + &x.1 * &y.3,
            &x.2 * &y.0 + &x.3 * &y.2,
            &x.2 * &y.1 + &x.3 * &y.3,
        )
    };
    let mut acc = (
        BigInt::one(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::one(),
    );
    let mut base = (
        BigInt::one(),
        BigInt::from(2),
        BigInt::one(),
        BigInt::one(),
    );
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Closed-form norm for α = 2+√2: N(M_{n,α}) = 2^{(n+3)/2}·wₙ − 2ⁿ − 1,
/// valid for odd n > 3.
pub fn norm_closed_form(n: u64) -> Result<BigUint, Error> {
    if n.is_multiple_of(2) || n <= 3 {
        return Err(Error::OddArgumentRequired { got: n, min: 3 });
    }
    let w = vw(n).w;
    let value: BigInt = (BigInt::one() << ((n + 3) / 2)) * w - (BigInt::one() << n) - 1;
    debug_assert!(value.is_positive());
    Ok(value.magnitude().clone())
}

/// The Riesel shape of a Q(√2) Mersenne norm: N = h·2ⁿ − 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RieselForm {
    /// h = w_p − 2^{(p−3)/2}, always odd.
    pub h: BigUint,
    /// n = (p+3)/2.
    pub n: u64,
    /// Whether h = 4^m − 1 for some m; it never is for these norms.
    pub h_is_power_of_four_minus_one: bool,
}

/// Riesel form for α = 2+√2 and odd p > 3.
pub fn riesel_form(p: u64) -> Result<RieselForm, Error> {
    if p.is_multiple_of(2) || p <= 3 {
        return Err(Error::OddArgumentRequired { got: p, min: 3 });
    }
    let w = vw(p).w;
    let h = (w - (BigInt::one() << ((p - 3) / 2)))
        .magnitude()
        .clone();
    let n = (p + 3) / 2;
    debug_assert!(h.is_odd());
    debug_assert_eq!((&h << n) - 1u8, norm_closed_form(p)?);
    let h_plus_1 = &h + 1u8;
    let tz = h_plus_1.trailing_zeros().unwrap_or(0);
    let h_is_power_of_four_minus_one = (&h_plus_1 >> tz).is_one() && tz > 0 && tz.is_multiple_of(2);
    Ok(RieselForm {
        h,
        n,
        h_is_power_of_four_minus_one,
    })
}

/// The congruence battery for N = N(M_{p,α}), α = 2+√2, p an odd prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub p: u64,
    pub norm: BigUint,
    /// N ≡ −1 (mod 8).
    pub norm_mod_8: bool,
    /// N ≡ 4w_p − 3 (mod p) when p ≡ ±1 (mod 8), N ≡ −4w_p − 3 otherwise.
    pub norm_mod_p: bool,
    /// N mod 7 is 1 when p ≡ 1 (mod 3) and 4 when p ≡ 2 (mod 3);
    /// None for p = 3.
    pub norm_mod_7: Option<bool>,
    /// (v_p, w_p) ≡ (1, 1) mod 7 when p ≡ 1 (mod 6), (6, 1) when p ≡ 5 (mod 6);
    /// None for p = 3.
    pub vw_mod_7: Option<bool>,
}

impl CongruenceReport {
    pub fn all_pass(&self) -> bool {
        self.norm_mod_8
            && self.norm_mod_p
            && self.norm_mod_7.unwrap_or(true)
            && self.vw_mod_7.unwrap_or(true)
    }
}

/// Evaluates the congruence battery for odd prime p.
pub fn congruence_report(p: u64) -> Result<CongruenceReport, Error> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::OddArgumentRequired { got: p, min: 2 });
    }
    let field = FieldCtx::new(2).expect("d = 2");
    let alpha = QuadInt::new(field, 2, 1, 1).expect("2+√2");
    let norm = mersenne_norm(&alpha, p)?;
    let norm_int = BigInt::from(norm.clone());
    let pair = vw(p);

    let norm_mod_8 = (&norm % 8u8).to_u8().unwrap() == 7;

    let p_int = BigInt::from(p);
    let four_w = 4 * &pair.w;
    let rhs: BigInt = match p % 8 {
        1 | 7 => &four_w - 3,
        _ => -&four_w - 3,
    };
    let norm_mod_p = norm_int.mod_floor(&p_int) == rhs.mod_floor(&p_int);

    let norm_mod_7 = match p % 3 {
        1 => Some((&norm % 7u8).to_u8().unwrap() == 1),
        2 => Some((&norm % 7u8).to_u8().unwrap() == 4),
        _ => None,
    };

    let seven = BigInt::from(7);
    let vm = pair.v.mod_floor(&seven).to_u8().unwrap();
    let wm = pair.w.mod_floor(&seven).to_u8().unwrap();
    let vw_mod_7 = match p % 6 {
        1 => Some(vm == 1 && wm == 1),
        5 => Some(vm == 6 && wm == 1),
        _ => None,
    };

    Ok(CongruenceReport {
        p,
        norm,
        norm_mod_8,
        norm_mod_p,
        norm_mod_7,
        vw_mod_7,
    })
}

/// Divisibility/coprimality checks on Mersenne elements and norms.
///
/// When m | n the element M_m must divide M_n exactly and the norm of M_m
/// must divide the norm of M_n; when gcd(m, n) = 1 the two norms must be
/// coprime. Pairs satisfying neither hypothesis pass vacuously.
pub fn divisibility_check(alpha: &QuadInt, m: u64, n: u64) -> Result<bool, Error> {
    assert!(m >= 1 && n >= 1);
    let mut ok = true;
    if n.is_multiple_of(m) {
        let em = mersenne_element(alpha, m)?;
        let en = mersenne_element(alpha, n)?;
        ok &= en.exact_div(&em)?.is_some();
        let nm = mersenne_norm(alpha, m)?;
        let nn = mersenne_norm(alpha, n)?;
        ok &= nm.is_zero() || (&nn % &nm).is_zero();
    } else if m.gcd(&n) == 1 {
        let nm = mersenne_norm(alpha, m)?;
        let nn = mersenne_norm(alpha, n)?;
        ok &= nm.gcd(&nn).is_one();
    }
    Ok(ok)
}

/// One search result at a prime exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MersenneCandidate {
    pub p: u64,
    pub alpha: QuadInt,
    pub m_element: QuadInt,
    pub norm_abs: BigUint,
    pub primality: Primality,
    /// Present for α = 2+√2 and p > 3 only.
    pub riesel: Option<RieselForm>,
}

fn is_two_plus_sqrt2(alpha: &QuadInt) -> bool {
    alpha.field().d() == 2
        && alpha.den() == 1
        && *alpha.a() == BigInt::from(2)
        && alpha.b().is_one()
}

/// Builds and tests the candidate at a single exponent.
///
/// For α = 2+√2 the closed-form norm is used as a cross-check and the Riesel
/// form is attached when p > 3.
pub fn evaluate_exponent(
    alpha: &QuadInt,
    p: u64,
    cfg: &PrimalityConfig,
) -> Result<MersenneCandidate, Error> {
    let one = alpha.field().one();
    if !alpha.checked_sub(&one)?.is_unit() {
        return Err(Error::AlphaMinusOneNotUnit);
    }
    let closed_form_ok = is_two_plus_sqrt2(alpha) && p > 3 && p % 2 == 1;
    let m_element = mersenne_element(alpha, p)?;
    let norm_abs = m_element.norm().magnitude().clone();
    if closed_form_ok {
        debug_assert_eq!(norm_abs, norm_closed_form(p)?);
    }
    // |N| = 1 means M is a unit (e.g. α = √2, p = 2); never a hit
    let primality = if norm_abs < BigUint::from(2u8) {
        Primality::Composite
    } else {
        primality::is_probable_prime(&norm_abs, cfg)?
    };
    let riesel = if closed_form_ok {
        Some(riesel_form(p)?)
    } else {
        None
    };
    Ok(MersenneCandidate {
        p,
        alpha: alpha.clone(),
        m_element,
        norm_abs,
        primality,
        riesel,
    })
}

/// Scans prime exponents p ≤ p_max (composite exponents cannot give prime
/// norms) and tests each norm. Output is sorted by p and deterministic for a
/// fixed config.
pub fn search(
    alpha: &QuadInt,
    p_max: u64,
    cfg: &PrimalityConfig,
) -> Result<Vec<MersenneCandidate>, Error> {
    let one = alpha.field().one();
    if !alpha.checked_sub(&one)?.is_unit() {
        return Err(Error::AlphaMinusOneNotUnit);
    }
    primality::small_primes(p_max)
        .into_iter()
        .map(|p| evaluate_exponent(alpha, p, cfg))
        .collect()
}

/// The exponents in a search result whose norms are probable primes.
pub fn probable_prime_exponents(candidates: &[MersenneCandidate]) -> Vec<u64> {
    candidates
        .iter()
        .filter(|c| c.primality.is_probable_prime())
        .map(|c| c.p)
        .collect()
}
