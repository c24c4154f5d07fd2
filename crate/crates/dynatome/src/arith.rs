//! Exact integer and rational arithmetic helpers.
//!
//! Everything here is a thin layer over `num-bigint` / `num-rational`:
//!
//! * perfect-square and exact n-th-root tests for big integers,
//! * rational square testing ([`is_rational_square`]),
//! * certified squarefree decomposition of an integer ([`squarefree_part`]),
//! * the elementary arithmetic functions μ, φ and divisor enumeration used
//!   by the dynatomic constructions,
//! * parsing/printing of rationals in `p/q` form and the naive height.
//!
//! `BigRational` already maintains the invariants this crate needs
//! (denominator positive, fraction fully reduced), so rationals are used
//! as-is rather than wrapped.

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Default trial-division bound for [`squarefree_part`].
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Shorthand for a small integer as a `BigInt`.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Shorthand for the rational p/q (q must be nonzero).
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a rational from `"p"` or `"p/q"` (base 10, optional sign).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::BadParam(format!("cannot parse integer `{t}`")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::BadParam(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(parse_int(p)?, q))
        }
    }
}

/// Prints a rational as `"p"` (integer) or `"p/q"` (reduced, q > 0).
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Naive height of a reduced rational p/q: max(|p|, q).
pub fn height(r: &BigRational) -> BigInt {
    r.numer().abs().max(r.denom().clone())
}

/// Exact square root: `Some(s)` with s ≥ 0 and s² = n, or `None`.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Exact k-th root: `Some(s)` with s^k = n, or `None`. For even k the
/// returned root is ≥ 0; for odd k the sign of n is preserved.
pub fn int_nth_root_exact(n: &BigInt, k: u32) -> Option<BigInt> {
    assert!(k >= 1, "root order must be positive");
    if n.is_negative() && k % 2 == 0 {
        return None;
    }
    let s = n.nth_root(k);
    if num_traits::pow(s.clone(), k as usize) == *n {
        Some(s)
    } else {
        None
    }
}

/// Tests whether a rational is a square in ℚ and returns its nonnegative
/// square root if so. Because `BigRational` keeps p/q reduced with q > 0,
/// p/q is a square iff p ≥ 0 and both p and q are perfect squares.
pub fn is_rational_square(q: &BigRational) -> Option<BigRational> {
    let num = int_sqrt_exact(q.numer())?;
    let den = int_sqrt_exact(q.denom())?;
    Some(BigRational::new(num, den))
}

/// Certified squarefree decomposition n = a · r² with a squarefree and
/// sign(a) = sign(n).
///
/// Algorithm: trial division by 2, 3 and 6k±1 candidates up to `bound`
/// splits off all small primes; the remaining cofactor R has only prime
/// factors > `bound`, so it is
///
/// * 1 — done,
/// * a perfect square — all its prime exponents are even, absorb √R into r,
/// * < bound² — necessarily a single prime, absorb into a,
/// * otherwise uncertifiable: fail with [`Error::FactorizationTooLarge`]
///   rather than guess.
pub fn squarefree_part(n: &BigInt, bound: u64) -> Result<(BigInt, BigInt)> {
    if n.is_zero() {
        return Err(Error::BadParam("squarefree_part of 0 is undefined".into()));
    }
    let mut a = if n.is_negative() { int(-1) } else { int(1) };
    let mut r = BigInt::one();
    let mut m = n.abs();

    let divide_out = |m: &mut BigInt, p: u64, a: &mut BigInt, r: &mut BigInt| {
        let p = BigInt::from(p);
        let mut e = 0u64;
        loop {
            let (q, rem) = m.div_rem(&p);
            if rem.is_zero() {
                *m = q;
                e += 1;
            } else {
                break;
            }
        }
        if e % 2 == 1 {
            *a *= &p;
        }
        for _ in 0..(e / 2) {
            *r *= &p;
        }
    };

    divide_out(&mut m, 2, &mut a, &mut r);
    divide_out(&mut m, 3, &mut a, &mut r);
    let mut p = 5u64;
    while p <= bound && BigInt::from(p) * BigInt::from(p) <= m {
        divide_out(&mut m, p, &mut a, &mut r);
        divide_out(&mut m, p + 2, &mut a, &mut r);
        p += 6;
    }
    // Everything ≤ bound has been removed, except that the loop may have
    // stopped early because p² > m; in that case m is 1 or prime.
    if m.is_one() {
        return Ok((a, r));
    }
    if BigInt::from(p) * BigInt::from(p) > m {
        a *= &m; // m is prime: no divisor ≤ √m remained
        return Ok((a, r));
    }
    if let Some(s) = int_sqrt_exact(&m) {
        r *= s;
        return Ok((a, r));
    }
    let bound_sq = BigInt::from(bound) * BigInt::from(bound);
    if m < bound_sq {
        a *= &m; // all factors > bound and m < bound²: m is prime
        return Ok((a, r));
    }
    Err(Error::FactorizationTooLarge {
        cofactor: m.to_string(),
        bound_sq: bound_sq.to_string(),
    })
}

/// Möbius function μ(n) ∈ {−1, 0, 1}; μ(1) = 1.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut k = 0u32;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient φ(n).
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            phi -= phi / d;
        }
        d += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// All positive divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn squarefree_part_examples() {
        let b = DEFAULT_FACTOR_BOUND;
        assert_eq!(squarefree_part(&int(-4), b).unwrap(), (int(-1), int(2)));
        assert_eq!(squarefree_part(&int(12), b).unwrap(), (int(3), int(2)));
        assert_eq!(squarefree_part(&int(1), b).unwrap(), (int(1), int(1)));
        assert_eq!(squarefree_part(&int(-1), b).unwrap(), (int(-1), int(1)));
        // 2^24 = (2^12)²
        let n = BigInt::one() << 24;
        assert_eq!(
            squarefree_part(&n, b).unwrap(),
            (int(1), BigInt::one() << 12)
        );
        assert!(squarefree_part(&int(0), b).is_err());
    }

    #[test]
    fn squarefree_part_large_smooth_contents() {
        // 5^20: the kind of content that appears in fixed-point discriminants.
        let n = num_traits::pow(int(5), 20);
        let (a, r) = squarefree_part(&n, DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(a, int(1));
        assert_eq!(r, num_traits::pow(int(5), 10));
        let n = -num_traits::pow(int(3), 13);
        let (a, r) = squarefree_part(&n, DEFAULT_FACTOR_BOUND).unwrap();
        assert_eq!(a, int(-3));
        assert_eq!(r, num_traits::pow(int(3), 6));
    }

    #[test]
    fn squarefree_part_beyond_bound() {
        // With an artificially tiny bound, a square of a large prime is
        // still certified, while a product of two distinct large primes
        // fails loudly instead of guessing.
        let p = int(1009);
        let q = int(1013);
        let (a, r) = squarefree_part(&(&p * &p), 10).unwrap();
        assert_eq!((a, r), (int(1), p.clone()));
        // 1009 < 10² is false, and 1009·1013 is neither square nor < 100.
        assert!(matches!(
            squarefree_part(&(&p * &q), 10),
            Err(Error::FactorizationTooLarge { .. })
        ));
        // A single large prime below bound² is certified prime.
        assert_eq!(squarefree_part(&p, 100).unwrap(), (p.clone(), int(1)));
    }

    #[test]
    fn rational_square_examples() {
        assert_eq!(is_rational_square(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(is_rational_square(&rat(-1, 1)), None);
        assert_eq!(is_rational_square(&rat(256, 1)), Some(rat(16, 1)));
        assert_eq!(is_rational_square(&rat(0, 1)), Some(rat(0, 1)));
        assert_eq!(is_rational_square(&rat(2, 1)), None);
        assert_eq!(is_rational_square(&rat(1, 3)), None);
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(int_nth_root_exact(&int(-27), 3), Some(int(-3)));
        assert_eq!(int_nth_root_exact(&int(-27), 2), None);
        assert_eq!(int_nth_root_exact(&int(16), 4), Some(int(2)));
        assert_eq!(int_nth_root_exact(&int(17), 4), None);
    }

    #[test]
    fn arithmetic_functions() {
        let mu: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
        let phi: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(phi, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn parse_and_print_rationals() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), rat(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_to_string(&rat(-3, 4)), "-3/4");
        assert_eq!(rational_to_string(&rat(8, 2)), "4");
        assert_eq!(height(&rat(-3, 4)), int(4));
        assert_eq!(height(&rat(7, 2)), int(7));
    }

    proptest! {
        #[test]
        fn squarefree_reassembles(n in -100_000i64..100_000) {
            prop_assume!(n != 0);
            let n = int(n);
            let (a, r) = squarefree_part(&n, DEFAULT_FACTOR_BOUND).unwrap();
            prop_assert_eq!(&a * &r * &r, n.clone());
            prop_assert_eq!(a.is_negative(), n.is_negative());
            // a has no square divisor: check all primes up to |a|^(1/2)
            let abs = a.abs();
            let mut d = 2i64;
            while int(d) * int(d) <= abs {
                prop_assert!(!(&abs % (d * d)).is_zero(), "square divisor {}", d);
                d += 1;
            }
        }

        #[test]
        fn sqrt_detects_squares(s in 0i64..1_000_000) {
            let s = int(s);
            prop_assert_eq!(int_sqrt_exact(&(&s * &s)), Some(s.clone()));
            if s > int(1) {
                // s² + 1 is never a square for s ≥ 1
                prop_assert_eq!(int_sqrt_exact(&(&s * &s + 1)), None);
            }
        }

        #[test]
        fn rational_square_roundtrip(p in -300i64..300, q in 1i64..300) {
            let v = rat(p, q);
            let sq = &v * &v;
            let root = is_rational_square(&sq).unwrap();
            prop_assert_eq!(root, v.abs());
        }
    }
}
