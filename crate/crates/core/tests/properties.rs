//! Property tests for the ring axioms, norm/conjugation laws, parser
//! round-trips, and the Jacobi symbol.

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use qmersenne_core::mersenne;
use qmersenne_core::primality::{self, PrimalityConfig};
use qmersenne_core::units;
use qmersenne_core::{FieldCtx, QuadInt};

const FIELDS: [u64; 6] = [2, 3, 5, 13, 21, 77];

fn arb_field() -> impl Strategy<Value = FieldCtx> {
    prop::sample::select(&FIELDS[..]).prop_map(|d| FieldCtx::new(d).unwrap())
}

fn arb_elem(field: FieldCtx) -> impl Strategy<Value = QuadInt> {
    (-200i64..=200, -200i64..=200, 0u8..=1).prop_map(move |(a, b, half)| {
        if half == 1 && field.half_basis() {
            // force matching parity so den = 2 is valid
            let b = if (a % 2 + 2) % 2 == (b % 2 + 2) % 2 { b } else { b + 1 };
            QuadInt::new(field, a, b, 2).unwrap()
        } else {
            QuadInt::new(field, a, b, 1).unwrap()
        }
    })
}

fn field_and_pair() -> impl Strategy<Value = (QuadInt, QuadInt)> {
    arb_field().prop_flat_map(|f| (arb_elem(f), arb_elem(f)))
}

proptest! {
    #[test]
    fn norm_is_multiplicative((x, y) in field_and_pair()) {
        let xy = x.checked_mul(&y).unwrap();
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
    }

    #[test]
    fn conj_is_a_ring_homomorphism((x, y) in field_and_pair()) {
        let xy = x.checked_mul(&y).unwrap();
        prop_assert_eq!(xy.conj(), x.conj().checked_mul(&y.conj()).unwrap());
        let sum = x.checked_add(&y).unwrap();
        prop_assert_eq!(sum.conj(), x.conj().checked_add(&y.conj()).unwrap());
    }

    #[test]
    fn norm_equals_self_times_conjugate((x, _) in field_and_pair()) {
        let prod = x.checked_mul(&x.conj()).unwrap();
        prop_assert_eq!(prod, x.field().from_integer(x.norm()));
    }

    #[test]
    fn trace_equals_self_plus_conjugate((x, _) in field_and_pair()) {
        let sum = x.checked_add(&x.conj()).unwrap();
        prop_assert_eq!(sum, x.field().from_integer(x.trace()));
    }

    #[test]
    fn display_parse_round_trip((x, _) in field_and_pair()) {
        let text = x.to_string();
        let back = QuadInt::parse(x.field(), &text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn exact_div_inverts_multiplication((x, y) in field_and_pair()) {
        prop_assume!(!y.is_zero());
        let prod = x.checked_mul(&y).unwrap();
        let q = prod.exact_div(&y).unwrap();
        prop_assert_eq!(q, Some(x));
    }

    #[test]
    fn pow_is_a_homomorphism_on_exponents(
        (x, _) in field_and_pair(),
        m in 0u64..=40,
        n in 0u64..=40,
    ) {
        let lhs = x.pow(m + n);
        let rhs = x.pow(m).checked_mul(&x.pow(n)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_alpha_norm_identity(d in prop::sample::select(&FIELDS[..]), k in 1u64..=8) {
        let field = FieldCtx::new(d).unwrap();
        let u = units::unit_power(&units::fundamental_unit(&field), k);
        let alpha = field.one().checked_add(u.value()).unwrap();
        let expected = BigInt::one() + u.value().trace() + u.value().norm();
        prop_assert_eq!(alpha.norm(), expected);
    }

    #[test]
    fn jacobi_is_multiplicative(a in -300i64..300, b in -300i64..300, n in 0u32..100) {
        let n = BigInt::from(2 * i64::from(n) + 3);
        let ja = primality::jacobi(&BigInt::from(a), &n).unwrap();
        let jb = primality::jacobi(&BigInt::from(b), &n).unwrap();
        let jab = primality::jacobi(&BigInt::from(a * b), &n).unwrap();
        prop_assert_eq!(i16::from(ja) * i16::from(jb), i16::from(jab));
    }

    #[test]
    fn mersenne_divisibility_for_random_pairs(m in 1u64..=12, q in 1u64..=5) {
        let field = FieldCtx::new(2).unwrap();
        let alpha = QuadInt::new(field, 2, 1, 1).unwrap();
        prop_assert!(mersenne::divisibility_check(&alpha, m, m * q).unwrap());
    }
}

/// Quadratic reciprocity at the symbol level: for odd primes q ≠ N,
/// (q/N)(N/q) is 1 unless both are ≡ 3 (mod 4).
#[test]
fn reciprocity_on_probable_primes() {
    let cfg = PrimalityConfig::default();
    let primes: Vec<u64> = primality::small_primes(500)
        .into_iter()
        .skip(1)
        .collect();
    for &q in &primes {
        assert!(primality::is_probable_prime(&q.into(), &cfg)
            .unwrap()
            .is_probable_prime());
        for &n in &primes {
            if q == n {
                continue;
            }
            let a = primality::jacobi(&BigInt::from(q), &BigInt::from(n)).unwrap();
            let b = primality::jacobi(&BigInt::from(n), &BigInt::from(q)).unwrap();
            let expected = if q % 4 == 3 && n % 4 == 3 { -1 } else { 1 };
            assert_eq!(i32::from(a) * i32::from(b), expected, "q={q} n={n}");
        }
    }
}

/// jacobi(2, N) = 1 for every probable-prime Mersenne norm with p > 2,
/// i.e. √2 exists in the prime field F_N.
#[test]
fn two_is_a_square_mod_every_mersenne_norm() {
    let field = FieldCtx::new(2).unwrap();
    let alpha = QuadInt::new(field, 2, 1, 1).unwrap();
    let cfg = PrimalityConfig::default();
    let candidates = mersenne::search(&alpha, 100, &cfg).unwrap();
    let mut seen = 0;
    for c in candidates.iter().filter(|c| c.primality.is_probable_prime()) {
        if c.p == 2 {
            continue;
        }
        let n = BigInt::from(c.norm_abs.clone());
        assert_eq!(primality::jacobi(&BigInt::from(2), &n).unwrap(), 1, "p={}", c.p);
        seen += 1;
    }
    assert!(seen >= 4); // p = 3, 5, 7, 11, 73, 89
}
