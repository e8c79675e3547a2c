//! Ring and field abstractions.
//!
//! Contexts carry whatever state arithmetic needs (tower moduli, weight
//! vectors, precision); elements are plain data. All binary operations
//! return `Res` because some contexts are fallible: comparisons of series
//! grades may exhaust an enclosure budget, and tower inversions may run
//! into zero divisors that demand a dynamic-evaluation split.

use std::fmt;

use num_traits::{One, Zero};

use super::rat::Rat;
use crate::{Error, Res};

/// A commutative ring with exact division.
pub trait Ring: Clone + fmt::Debug {
    type El: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn from_int(&self, n: i64) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Res<Self::El>;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Res<Self::El>;

    fn sub(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        self.add(a, &self.neg(b))
    }

    /// Exact division; fails if `b` does not divide `a`.
    fn exact_div(&self, a: &Self::El, b: &Self::El) -> Res<Self::El>;

    fn pow(&self, a: &Self::El, mut e: u64) -> Res<Self::El> {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }
}

/// A ring in which every nonzero element is invertible (up to the
/// dynamic-evaluation caveat: a tower over a reducible modulus reports
/// `Error::ZeroDivisor` instead of an inverse).
pub trait Field: Ring {
    fn inv(&self, a: &Self::El) -> Res<Self::El>;

    fn div(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        self.mul(a, &self.inv(b)?)
    }
}

/// The rational field.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct QQ;

impl Ring for QQ {
    type El = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn from_int(&self, n: i64) -> Rat {
        super::rat::rat(n)
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a.clone()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Res<Rat> {
        Ok(a + b)
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Res<Rat> {
        Ok(a * b)
    }
    fn exact_div(&self, a: &Rat, b: &Rat) -> Res<Rat> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a / b)
    }
}

impl Field for QQ {
    fn inv(&self, a: &Rat) -> Res<Rat> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
}

/// Univariate polynomials over `R` viewed as a ring themselves, so that
/// resultants of polynomials with polynomial coefficients type-check.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<R: Ring>(pub R);

impl<R: Ring> Ring for PolyRing<R> {
    type El = super::unipoly::UniPoly<R::El>;

    fn zero(&self) -> Self::El {
        super::unipoly::UniPoly { coeffs: vec![] }
    }
    fn one(&self) -> Self::El {
        super::unipoly::UniPoly {
            coeffs: vec![self.0.one()],
        }
    }
    fn from_int(&self, n: i64) -> Self::El {
        let c = self.0.from_int(n);
        if self.0.is_zero(&c) {
            self.zero()
        } else {
            super::unipoly::UniPoly { coeffs: vec![c] }
        }
    }
    fn is_zero(&self, a: &Self::El) -> bool {
        a.coeffs.is_empty()
    }
    fn neg(&self, a: &Self::El) -> Self::El {
        a.neg(&self.0)
    }
    fn add(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        a.add(&self.0, b)
    }
    fn mul(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        a.mul(&self.0, b)
    }
    fn exact_div(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        a.exact_div(&self.0, b)
    }
}
