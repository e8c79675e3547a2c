//! Arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. `BigRational` keeps the invariants we need:
/// numerator and denominator coprime, denominator positive.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer power with negative exponents allowed (errors on 0^-k).
pub fn rat_pow(a: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let mut base = if k < 0 {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    } else {
        a.clone()
    };
    let mut e = k.unsigned_abs();
    let mut acc = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Floor of a rational as a `BigInt`.
pub fn rat_floor(a: &Rat) -> BigInt {
    a.floor().to_integer()
}

/// `true` if `a` is a non-negative rational.
pub fn rat_is_nonneg(a: &Rat) -> bool {
    !a.is_negative()
}
