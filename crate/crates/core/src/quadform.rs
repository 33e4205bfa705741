//! Primes of the form x² + 7y².
//!
//! x² + 7y² is the unique reduced positive-definite form of discriminant −28
//! (class number 1), so an odd prime N ∤ 14 is represented iff −7 is a
//! quadratic residue mod N, iff N mod 28 ∈ {1, 9, 11, 15, 23, 25}. The
//! representation is produced by Cornacchia's descent and every output is
//! re-checked by multiplication.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::primality::jacobi;

/// Euler's residue classes: N mod 28 for primes represented by x² + 7y².
const MOD_28_CLASSES: [u8; 6] = [1, 9, 11, 15, 23, 25];

/// A pair (x, y) with x² + 7y² = N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub x: BigUint,
    pub y: BigUint,
    pub n: BigUint,
}

/// Floor of the real square root; errors on negative input.
pub fn isqrt(n: &BigInt) -> Result<BigInt, Error> {
    if n.is_negative() {
        return Err(Error::NegativeInput);
    }
    Ok(n.sqrt())
}

/// Square root of a mod p by Tonelli–Shanks; p an odd (probable) prime.
///
/// Returns None when a is a non-residue; 0 when p | a.
pub fn sqrt_mod(a: &BigInt, p: &BigUint) -> Result<Option<BigUint>, Error> {
    if p.is_even() || p.is_one() {
        return Err(Error::BadModulus);
    }
    let p_int = BigInt::from(p.clone());
    let a_mod = a.mod_floor(&p_int).magnitude().clone();
    if a_mod.is_zero() {
        return Ok(Some(BigUint::zero()));
    }
    match jacobi(a, &p_int)? {
        -1 => return Ok(None),
        0 => return Ok(Some(BigUint::zero())), // p | a handled above; unreachable for prime p
        _ => {}
    }
    // p ≡ 3 (mod 4): r = a^((p+1)/4)
    if (p % 4u8).to_u8().unwrap() == 3 {
        let e = (p + 1u8) >> 2;
        let r = a_mod.modpow(&e, p);
        return Ok(Some(r));
    }
    // Tonelli–Shanks: p − 1 = q·2^s with q odd
    let p_minus_1 = p - 1u8;
    let s = p_minus_1.trailing_zeros().unwrap_or(0);
    let q = &p_minus_1 >> s;
    // any quadratic non-residue z
    let mut z = BigUint::from(2u8);
    while jacobi(&BigInt::from(z.clone()), &p_int)? != -1 {
        z += 1u8;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a_mod.modpow(&q, p);
    let mut r = a_mod.modpow(&((&q + 1u8) >> 1), p);
    let two = BigUint::from(2u8);
    while !t.is_one() {
        // least i with t^(2^i) = 1
        let mut i = 0u64;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = t2.modpow(&two, p);
            i += 1;
        }
        let e = BigUint::one() << (m - i - 1);
        let b = c.modpow(&e, p);
        m = i;
        c = (&b * &b) % p;
        t = (t * &c) % p;
        r = (r * b) % p;
    }
    Ok(Some(r))
}

/// Whether the (probable) prime N is represented by x² + 7y².
///
/// Evaluates both the Jacobi criterion (−7/N) = 1 and Euler's mod-28 class
/// list; a divergence would mean an arithmetic bug, so it aborts.
pub fn representable(n: &BigUint) -> Result<bool, Error> {
    if n < &BigUint::from(2u8) {
        return Err(Error::BelowTwo);
    }
    if *n == BigUint::from(7u8) {
        return Ok(true); // 7 = 0² + 7·1²
    }
    if *n == BigUint::from(2u8) {
        return Ok(false); // 2 mod 28 = 2
    }
    let by_jacobi = jacobi(&BigInt::from(-7), &BigInt::from(n.clone()))? == 1;
    let m28 = (n % 28u8).to_u8().unwrap();
    let by_class = MOD_28_CLASSES.contains(&m28);
    assert_eq!(
        by_jacobi, by_class,
        "Jacobi and mod-28 predicates diverge at N = {n} (mod 28 = {m28}): arithmetic bug"
    );
    Ok(by_jacobi)
}

/// Cornacchia's descent for x² + 7y² = N, N a (probable) prime.
///
/// Returns None when N is not representable. The square root r₀ of −7 is
/// normalized to N/2 < r₀ < N so the output branch is deterministic; since
/// the form class number is 1 the representation is unique up to signs.
pub fn cornacchia7(n: &BigUint) -> Result<Option<Representation>, Error> {
    if !representable(n)? {
        return Ok(None);
    }
    if *n == BigUint::from(7u8) {
        return Ok(Some(Representation {
            x: BigUint::zero(),
            y: BigUint::one(),
            n: n.clone(),
        }));
    }
    let r = sqrt_mod(&BigInt::from(-7), n)?
        .expect("representable implies −7 is a residue");
    debug_assert_eq!((&r * &r) % n, (BigInt::from(-7)).mod_floor(&BigInt::from(n.clone())).magnitude().clone());
    let half = n >> 1;
    let r0 = if r > half { r } else { n - r };

    let mut a = n.clone();
    let mut b = r0;
    while &b * &b >= *n {
        let t = a % &b;
        a = core::mem::replace(&mut b, t);
    }
    let x = b;
    let rem = n - &x * &x;
    let (y2, rem7) = rem.div_rem(&BigUint::from(7u8));
    if !rem7.is_zero() {
        panic!("Cornacchia descent failed for representable N = {n}: arithmetic bug");
    }
    let y = y2.sqrt();
    if &y * &y != y2 {
        panic!("Cornacchia descent failed for representable N = {n}: arithmetic bug");
    }
    debug_assert_eq!(&x * &x + 7u8 * &y * &y, *n);
    Ok(Some(Representation { x, y, n: n.clone() }))
}

/// The congruence structure of a representation of a Q(√2) Mersenne norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    /// x ≡ 0 (mod 4)
    pub x_div_4: bool,
    /// x ≡ 0 (mod 8)
    pub x_div_8: bool,
    /// y ≡ ±3 (mod 8)
    pub y_pm3_mod_8: bool,
    /// N ≡ 7 (mod 8)
    pub n_mod_8: bool,
    /// N ≡ −1 (mod 16)
    pub n_mod_16: bool,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.x_div_4 && self.x_div_8 && self.y_pm3_mod_8 && self.n_mod_8 && self.n_mod_16
    }
}

/// Evaluates the mod-8/mod-16 structure flags of a representation.
pub fn structure_check(rep: &Representation) -> StructureReport {
    let x8 = (&rep.x % 8u8).to_u8().unwrap();
    let y8 = (&rep.y % 8u8).to_u8().unwrap();
    let n8 = (&rep.n % 8u8).to_u8().unwrap();
    let n16 = (&rep.n % 16u8).to_u8().unwrap();
    StructureReport {
        x_div_4: x8.is_multiple_of(4),
        x_div_8: x8 == 0,
        y_pm3_mod_8: y8 == 3 || y8 == 5,
        n_mod_8: n8 == 7,
        n_mod_16: n16 == 15,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primality::{is_probable_prime, small_primes, PrimalityConfig};
    use core::str::FromStr;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&BigInt::zero()).unwrap(), BigInt::zero());
        assert_eq!(isqrt(&BigInt::from(15)).unwrap(), BigInt::from(3));
        let big = BigInt::from(10u8).pow(30);
        assert_eq!(isqrt(&big).unwrap(), BigInt::from(10u8).pow(15));
        assert_eq!(isqrt(&BigInt::from(-1)), Err(Error::NegativeInput));
        // exhaustive bracketing property on a small range
        for n in 0i64..2000 {
            let r = isqrt(&BigInt::from(n)).unwrap();
            assert!(&r * &r <= BigInt::from(n));
            assert!((&r + 1) * (&r + 1) > BigInt::from(n));
        }
    }

    #[test]
    fn sqrt_mod_examples() {
        let p7 = BigUint::from(7u8);
        let r = sqrt_mod(&BigInt::from(2), &p7).unwrap().unwrap();
        assert!(r == BigUint::from(3u8) || r == BigUint::from(4u8));
        // jacobi(3, 7) = −1: no root (exhaustive residues of 7 are {0,1,2,4})
        assert_eq!(sqrt_mod(&BigInt::from(3), &p7).unwrap(), None);
        // r² ≡ −7 ≡ 424 (mod 431)
        let p431 = BigUint::from(431u16);
        let r = sqrt_mod(&BigInt::from(-7), &p431).unwrap().unwrap();
        assert_eq!((&r * &r) % &p431, BigUint::from(424u16));
        assert!(sqrt_mod(&BigInt::from(3), &BigUint::from(8u8)).is_err());
    }

    #[test]
    fn sqrt_mod_tonelli_branch() {
        // p ≡ 1 (mod 4) exercises the full Tonelli–Shanks loop
        for p in [13u32, 17, 29, 41, 73, 89, 97, 113, 20201u32] {
            let pn = BigUint::from(p);
            for a in 1u32..50 {
                let root = sqrt_mod(&BigInt::from(a), &pn).unwrap();
                match root {
                    Some(r) => {
                        assert_eq!((&r * &r) % &pn, BigUint::from(a) % &pn, "a={a} p={p}")
                    }
                    None => {
                        assert_eq!(
                            jacobi(&BigInt::from(a), &BigInt::from(p)).unwrap(),
                            -1,
                            "a={a} p={p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn representable_examples() {
        assert!(representable(&BigUint::from(431u16)).unwrap()); // 431 mod 28 = 11
        assert!(representable(&BigUint::from(23u8)).unwrap()); // 23 in Euler's list
        assert!(!representable(&BigUint::from(3u8)).unwrap());
        assert!(representable(&BigUint::from(7u8)).unwrap());
        assert!(!representable(&BigUint::from(2u8)).unwrap());
        assert!(representable(&BigUint::from(1u8)).is_err());
    }

    fn rep(n: u64) -> Option<(u64, u64)> {
        cornacchia7(&BigUint::from(n)).unwrap().map(|r| {
            (r.x.to_u64().unwrap(), r.y.to_u64().unwrap())
        })
    }

    #[test]
    fn cornacchia_table_seven() {
        assert_eq!(rep(431), Some((16, 5)));
        assert_eq!(rep(5279), Some((64, 13)));
        assert_eq!(rep(732799), Some((856, 3)));
        assert_eq!(rep(23), Some((4, 1)));
        assert_eq!(rep(7), Some((0, 1)));
        assert_eq!(rep(3), None);
        assert_eq!(rep(2), None);
    }

    #[test]
    fn cornacchia_giant() {
        let n = BigUint::from_str("851569055172258793218602741480913108991").unwrap();
        let r = cornacchia7(&n).unwrap().unwrap();
        assert_eq!(r.x, BigUint::from_str("28615996544447548272").unwrap());
        assert_eq!(r.y, BigUint::from_str("2161143775888286749").unwrap());
        assert!(structure_check(&r).all_pass());
    }

    /// Brute-force oracle: search y ≤ isqrt(N/7) for x² = N − 7y².
    fn brute_force(n: u64) -> alloc::vec::Vec<(u64, u64)> {
        let mut out = alloc::vec::Vec::new();
        let mut y = 0u64;
        while 7 * y * y <= n {
            let r = n - 7 * y * y;
            let x = (r as f64).sqrt() as u64;
            for x in x.saturating_sub(1)..=x + 1 {
                if x * x == r {
                    out.push((x, y));
                }
            }
            y += 1;
        }
        out
    }

    #[test]
    fn three_way_census_small() {
        // Jacobi predicate ⟺ mod-28 class ⟺ brute force, for primes < 10⁴
        let cfg = PrimalityConfig::default();
        for q in small_primes(10_000) {
            if q == 2 || q == 7 {
                continue;
            }
            assert!(is_probable_prime(&BigUint::from(q), &cfg)
                .unwrap()
                .is_probable_prime());
            let predicted = representable(&BigUint::from(q)).unwrap();
            let found = brute_force(q);
            assert_eq!(predicted, !found.is_empty(), "q={q}");
            if predicted {
                // exactly one positive representation, matching Cornacchia
                let positive: alloc::vec::Vec<_> =
                    found.iter().filter(|(x, y)| *x > 0 && *y > 0).collect();
                assert_eq!(positive.len(), 1, "q={q}");
                let got = rep(q).unwrap();
                assert_eq!((got.0, got.1), *positive[0], "q={q}");
            }
        }
    }

    #[test]
    fn structure_check_examples() {
        let mk = |x: u64, y: u64, n: u64| Representation {
            x: BigUint::from(x),
            y: BigUint::from(y),
            n: BigUint::from(n),
        };
        assert!(structure_check(&mk(16, 5, 431)).all_pass());
        assert!(structure_check(&mk(64, 13, 5279)).all_pass());
        assert!(structure_check(&mk(856, 3, 732799)).all_pass());
        // 23 = 4² + 7: x = 4 not divisible by 8, y = 1 not ±3
        let r = structure_check(&mk(4, 1, 23));
        assert!(r.x_div_4 && !r.x_div_8 && !r.y_pm3_mod_8 && r.n_mod_8 && !r.n_mod_16);
    }
}
