//! Fundamental units of O_K from the continued-fraction expansion of the
//! quadratic surd ω, where ω = √d for d ≡ 2,3 (mod 4) and ω = (1+√d)/2 for
//! d ≡ 1 (mod 4). Expanding ω itself (not √d) is what produces the
//! half-integral units of the maximal order.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::quadint::{FieldCtx, QuadInt};

/// One step of the surd recurrence for (P + √d)/Q.
///
/// The classical invariant Q | d − P² holds at every step, and the state
/// sequence is eventually periodic, so period detection terminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurdState {
    pub p: u64,
    pub q: u64,
    /// Partial quotient emitted from this state.
    pub a: u64,
}

/// The continued fraction of ω, truncated after the first full period.
#[derive(Debug, Clone)]
pub struct OmegaExpansion {
    /// States emitting a_0, a_1, ... over the pre-period and one period.
    pub states: Vec<SurdState>,
    /// Length of the minimal period of the (P, Q) state sequence.
    pub period: usize,
}

fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    // Newton from an over-estimate converges to floor(sqrt(n))
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Expands ω for the field and stops after the first full period.
pub fn omega_expansion(field: &FieldCtx) -> OmegaExpansion {
    let d = field.d() as i128;
    let s = isqrt_u64(field.d()) as i128;
    let (mut p, mut q): (i128, i128) =
        if field.half_basis() { (1, 2) } else { (0, 1) };
    let mut states: Vec<SurdState> = Vec::new();
    let mut seen: Vec<(i128, i128)> = Vec::new();
    loop {
        if let Some(first) = seen.iter().position(|&(sp, sq)| sp == p && sq == q) {
            let period = seen.len() - first;
            states.truncate(first + period);
            return OmegaExpansion { states, period };
        }
        seen.push((p, q));
        debug_assert!(q > 0 && (d - p * p) % q == 0, "surd invariant");
        let a = (p + s).div_euclid(q);
        states.push(SurdState {
            p: p as u64,
            q: q as u64,
            a: a as u64,
        });
        p = a * q - p;
        q = (d - p * p) / q;
    }
}

/// A unit of O_K together with the sign of its norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitElem {
    value: QuadInt,
    norm_sign: i8,
}

impl UnitElem {
    /// Wraps a value after checking |N| = 1.
    pub fn new(value: QuadInt) -> Result<Self, crate::Error> {
        let n = value.norm();
        if !n.magnitude().is_one() {
            return Err(crate::Error::NotAUnit);
        }
        let norm_sign = if n.is_negative() { -1 } else { 1 };
        Ok(UnitElem { value, norm_sign })
    }

    pub fn value(&self) -> &QuadInt {
        &self.value
    }

    /// +1 or −1.
    pub fn norm_sign(&self) -> i8 {
        self.norm_sign
    }

    /// u⁻¹ = N(u)·conj(u).
    pub fn inverse(&self) -> Self {
        let c = self.value.conj();
        let value = if self.norm_sign < 0 { c.negated() } else { c };
        UnitElem {
            value,
            norm_sign: self.norm_sign,
        }
    }

    /// uⁿ with the norm sign tracked as (±1)ⁿ.
    pub fn power(&self, n: u64) -> Self {
        UnitElem {
            value: self.value.pow(n),
            norm_sign: if self.norm_sign < 0 && n % 2 == 1 { -1 } else { 1 },
        }
    }

    /// −u.
    pub fn negated(&self) -> Self {
        UnitElem {
            value: self.value.negated(),
            norm_sign: self.norm_sign,
        }
    }
}

/// The least unit > 1 of O_K.
///
/// With l the minimal period of ω's expansion and h/k the convergent of index
/// l − 1 (counting h_0 = a_0), the fundamental unit is ε = h − k·conj(ω) and
/// N(ε) = (−1)^l. Both coordinates of ε come out positive.
pub fn fundamental_unit(field: &FieldCtx) -> UnitElem {
    let expansion = omega_expansion(field);
    let l = expansion.period;
    debug_assert!(expansion.states.len() - l <= 1, "pre-period of omega is at most 1");
    let mut h_prev = BigInt::from(1);
    let mut k_prev = BigInt::from(0);
    let mut h = BigInt::from(expansion.states[0].a);
    let mut k = BigInt::from(1);
    for st in &expansion.states[1..l] {
        let a = BigInt::from(st.a);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = core::mem::replace(&mut h, h_next);
        k_prev = core::mem::replace(&mut k, k_next);
    }
    let value = if field.half_basis() {
        // ε = h − k(1−√d)/2 = (2h − k + k√d)/2
        QuadInt::new(*field, 2 * &h - &k, k, 2).expect("unit construction")
    } else {
        QuadInt::new(*field, h, k, 1).expect("unit construction")
    };
    let unit = UnitElem::new(value).expect("convergent at period end is a unit");
    debug_assert_eq!(unit.norm_sign() == -1, l % 2 == 1);
    unit
}

/// uⁿ as a unit, n ≥ 1.
pub fn unit_power(u: &UnitElem, n: u64) -> UnitElem {
    u.power(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn unit_of(d: u64) -> UnitElem {
        fundamental_unit(&FieldCtx::new(d).unwrap())
    }

    #[test]
    fn fundamental_unit_small_fields() {
        let u2 = unit_of(2);
        assert_eq!(u2.value().to_string(), "1+\u{221a}2");
        assert_eq!(u2.norm_sign(), -1);

        let u13 = unit_of(13);
        assert_eq!(u13.value().to_string(), "(3+\u{221a}13)/2");
        assert_eq!(u13.norm_sign(), -1);

        let u5 = unit_of(5);
        assert_eq!(u5.value().to_string(), "(1+\u{221a}5)/2");
        assert_eq!(u5.norm_sign(), -1);

        let u93 = unit_of(93);
        assert_eq!(u93.value().to_string(), "(29+3\u{221a}93)/2");
        assert_eq!(u93.norm_sign(), 1);

        assert_eq!(unit_of(3).value().to_string(), "2+\u{221a}3");
        assert_eq!(unit_of(6).value().to_string(), "5+2\u{221a}6");
        assert_eq!(unit_of(7).value().to_string(), "8+3\u{221a}7");
    }

    #[test]
    fn norm_negative_one_table() {
        // the six N(u) = −1 fields: d, with u = (a+b√d)/2
        let rows = [
            (13u64, 3, 1),
            (29, 5, 1),
            (53, 7, 1),
            (149, 61, 5),
            (173, 13, 1),
            (293, 17, 1),
        ];
        for (d, a, b) in rows {
            let f = FieldCtx::new(d).unwrap();
            let u = fundamental_unit(&f);
            assert_eq!(u.value(), &QuadInt::new(f, a, b, 2).unwrap(), "d={d}");
            assert_eq!(u.norm_sign(), -1, "d={d}");
        }
    }

    #[test]
    fn norm_positive_one_table() {
        let rows = [
            (21u64, 5, 1),
            (77, 9, 1),
            (93, 29, 3),
            (237, 77, 5),
            (437, 21, 1),
            (453, 149, 7),
        ];
        for (d, a, b) in rows {
            let f = FieldCtx::new(d).unwrap();
            let u = fundamental_unit(&f);
            assert_eq!(u.value(), &QuadInt::new(f, a, b, 2).unwrap(), "d={d}");
            assert_eq!(u.norm_sign(), 1, "d={d}");
        }
    }

    #[test]
    fn unit_powers() {
        let u5 = unit_of(5);
        let f5 = FieldCtx::new(5).unwrap();
        assert_eq!(
            unit_power(&u5, 5).value(),
            &QuadInt::new(f5, 11, 5, 2).unwrap()
        );
        assert_eq!(
            unit_power(&u5, 2).value(),
            &QuadInt::new(f5, 3, 1, 2).unwrap()
        );
        assert_eq!(unit_power(&u5, 1), u5);
        assert_eq!(unit_power(&u5, 2).norm_sign(), 1);
        assert_eq!(unit_power(&u5, 5).norm_sign(), -1);
    }

    #[test]
    fn inverse_is_inverse() {
        for d in [2u64, 5, 13, 21, 149] {
            let f = FieldCtx::new(d).unwrap();
            let u = fundamental_unit(&f);
            let inv = u.inverse();
            assert_eq!(u.value().checked_mul(inv.value()).unwrap(), f.one(), "d={d}");
        }
    }

    #[test]
    fn every_class_number_one_field_has_a_valid_unit() {
        for d in 2..500u64 {
            let Ok(f) = FieldCtx::new(d) else { continue };
            if !f.class_number_one() {
                continue;
            }
            let u = fundamental_unit(&f);
            assert!(u.value().is_unit(), "d={d}");
            assert!(
                u.value().a().is_positive() && u.value().b().is_positive(),
                "d={d}"
            );
            let expansion = omega_expansion(&f);
            assert_eq!(
                u.norm_sign() == -1,
                expansion.period % 2 == 1,
                "norm-sign/period parity for d={d}"
            );
        }
    }

    /// Independent oracle: exhaustive (a, b) enumeration with bounded height
    /// confirms no unit lies strictly between 1 and ε.
    #[test]
    fn minimality_spot_check() {
        for d in [2u64, 5, 13, 21, 149] {
            let f = FieldCtx::new(d).unwrap();
            let eps = fundamental_unit(&f);
            let ea: f64 = eps.value().a().to_string().parse().unwrap();
            let eb: f64 = eps.value().b().to_string().parse().unwrap();
            let eps_val = (ea + eb * (d as f64).sqrt()) / eps.value().den() as f64;

            let bound = 400i128;
            let sqrt_d = (d as f64).sqrt();
            let mut best = f64::INFINITY;
            for a in -bound..=bound {
                for b in 1..=bound {
                    let norm = a * a - (d as i128) * b * b;
                    let units_dens: &[(i128, f64)] = if f.half_basis() {
                        &[(1, 1.0), (4, 2.0)]
                    } else {
                        &[(1, 1.0)]
                    };
                    for &(nn, den) in units_dens {
                        if norm.abs() != nn {
                            continue;
                        }
                        if nn == 4 && (a - b) % 2 != 0 {
                            continue;
                        }
                        let v = (a as f64 + b as f64 * sqrt_d) / den;
                        if v > 1.0 + 1e-9 && v < best {
                            best = v;
                        }
                    }
                }
            }
            assert!(
                (best - eps_val).abs() / eps_val < 1e-9,
                "d={d}: enumerated {best}, cf gave {eps_val}"
            );
        }
    }

    #[test]
    fn expansion_periods_and_invariant() {
        let per = |d: u64| omega_expansion(&FieldCtx::new(d).unwrap()).period;
        assert_eq!(per(2), 1);
        assert_eq!(per(3), 2);
        assert_eq!(per(5), 1);
        assert_eq!(per(13), 1);
        assert_eq!(per(21), 2);
        assert_eq!(per(149), 5);

        for d in [2u64, 7, 13, 94, 149, 421] {
            let f = FieldCtx::new(d).unwrap();
            for st in omega_expansion(&f).states {
                assert_eq!((d as i128 - (st.p as i128).pow(2)).rem_euclid(st.q as i128), 0);
            }
        }
    }
}
