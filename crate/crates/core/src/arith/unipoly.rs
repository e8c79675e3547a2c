//! Dense univariate polynomials over a ring context.
//!
//! Coefficients are stored lowest degree first with no trailing zeros.
//! Every operation takes the coefficient context explicitly.

use super::ring::{Field, Ring};
use crate::{Error, Res};

#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<T> {
    pub coeffs: Vec<T>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> UniPoly<T> {
    pub fn new<R: Ring<El = T>>(ring: &R, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map(|c| ring.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant<R: Ring<El = T>>(ring: &R, c: T) -> Self {
        Self::new(ring, vec![c])
    }

    /// The monomial `c * Z^k`.
    pub fn monomial<R: Ring<El = T>>(ring: &R, c: T, k: usize) -> Self {
        if ring.is_zero(&c) {
            return Self::zero();
        }
        let mut coeffs = vec![ring.zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lc(&self) -> &T {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn coeff<R: Ring<El = T>>(&self, ring: &R, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn is_monic<R: Ring<El = T>>(&self, ring: &R) -> bool {
        !self.is_zero() && *self.lc() == ring.one()
    }

    pub fn neg<R: Ring<El = T>>(&self, ring: &R) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect(),
        }
    }

    pub fn add<R: Ring<El = T>>(&self, ring: &R, other: &Self) -> Res<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeff(ring, k);
            let b = other.coeff(ring, k);
            coeffs.push(ring.add(&a, &b)?);
        }
        Ok(Self::new(ring, coeffs))
    }

    pub fn sub<R: Ring<El = T>>(&self, ring: &R, other: &Self) -> Res<Self> {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul<R: Ring<El = T>>(&self, ring: &R, other: &Self) -> Res<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = ring.mul(a, b)?;
                coeffs[i + j] = ring.add(&coeffs[i + j], &t)?;
            }
        }
        Ok(Self::new(ring, coeffs))
    }

    pub fn scale<R: Ring<El = T>>(&self, ring: &R, c: &T) -> Res<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(ring.mul(a, c)?);
        }
        Ok(Self::new(ring, coeffs))
    }

    pub fn derivative<R: Ring<El = T>>(&self, ring: &R) -> Res<Self> {
        let mut coeffs = Vec::new();
        for (k, a) in self.coeffs.iter().enumerate().skip(1) {
            coeffs.push(ring.mul(a, &ring.from_int(k as i64))?);
        }
        Ok(Self::new(ring, coeffs))
    }

    pub fn eval<R: Ring<El = T>>(&self, ring: &R, x: &T) -> Res<T> {
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x)?, c)?;
        }
        Ok(acc)
    }

    /// Substitute another polynomial for the variable.
    pub fn compose<R: Ring<El = T>>(&self, ring: &R, inner: &Self) -> Res<Self> {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(ring, inner)?;
            acc = acc.add(ring, &Self::constant(ring, c.clone()))?;
        }
        Ok(acc)
    }

    /// `p(Z^k)`.
    pub fn inflate<R: Ring<El = T>>(&self, ring: &R, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ring.zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        UniPoly { coeffs }
    }

    /// Division with remainder by a monic divisor. Needs no inversions, so
    /// it is safe over any ring.
    pub fn div_rem_monic<R: Ring<El = T>>(&self, ring: &R, div: &Self) -> Res<(Self, Self)> {
        assert!(div.is_monic(ring), "divisor must be monic");
        let d = div.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![ring.zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = rem[k].clone();
            if ring.is_zero(&c) {
                continue;
            }
            quot[k - d] = c.clone();
            for (j, b) in div.coeffs.iter().enumerate() {
                let t = ring.mul(&c, b)?;
                rem[k - d + j] = ring.sub(&rem[k - d + j], &t)?;
            }
        }
        rem.truncate(d);
        Ok((Self::new(ring, quot), Self::new(ring, rem)))
    }

    /// Division with remainder over a field.
    pub fn div_rem<F: Field<El = T>>(&self, field: &F, div: &Self) -> Res<(Self, Self)> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc_inv = field.inv(div.lc())?;
        let monic = div.scale(field, &lc_inv)?;
        let (q, r) = self.div_rem_monic(field, &monic)?;
        Ok((q.scale(field, &lc_inv)?, r))
    }

    /// Exact division over a ring; errors if the division leaves a remainder.
    pub fn exact_div<R: Ring<El = T>>(&self, ring: &R, div: &Self) -> Res<Self> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < div.coeffs.len() {
            return Err(Error::Domain("inexact polynomial division".into()));
        }
        let d = div.deg();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ring.zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = ring.exact_div(&rem[k], div.lc())?;
            if !ring.is_zero(&c) {
                for (j, b) in div.coeffs.iter().enumerate() {
                    let t = ring.mul(&c, b)?;
                    rem[k - d + j] = ring.sub(&rem[k - d + j], &t)?;
                }
            }
            quot[k - d] = c;
        }
        if rem.iter().any(|c| !ring.is_zero(c)) {
            return Err(Error::Domain("inexact polynomial division".into()));
        }
        Ok(Self::new(ring, quot))
    }

    /// Monic gcd over a field (Euclid).
    pub fn gcd<F: Field<El = T>>(&self, field: &F, other: &Self) -> Res<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(field, &b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let lc_inv = field.inv(a.lc())?;
        a.scale(field, &lc_inv)
    }

    /// Sylvester resultant `Res(self, other)`, computed by the subresultant
    /// pseudo-remainder sequence, so only ring operations and exact
    /// divisions are needed. Returns zero when the inputs share a factor.
    pub fn resultant<R: Ring<El = T>>(&self, ring: &R, other: &Self) -> Res<T> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::Domain("resultant of zero polynomial".into()));
        }
        if other.deg() == 0 {
            return ring.pow(&other.coeffs[0], self.deg() as u64);
        }
        if self.deg() == 0 {
            return ring.pow(&self.coeffs[0], other.deg() as u64);
        }
        if self.deg() < other.deg() {
            let r = other.resultant(ring, self)?;
            return if (self.deg() * other.deg()) % 2 == 1 {
                Ok(ring.neg(&r))
            } else {
                Ok(r)
            };
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut g = ring.one();
        let mut h = ring.one();
        let mut negate = false;
        loop {
            let da = a.deg();
            let db = b.deg();
            if da % 2 == 1 && db % 2 == 1 {
                negate = !negate;
            }
            let delta = (da - db) as u64;
            let r = a.pseudo_rem(ring, &b)?;
            a = b;
            let divisor = ring.mul(&g, &ring.pow(&h, delta)?)?;
            b = match r.exact_div_coeffs(ring, &divisor) {
                Ok(p) => p,
                Err(e) => return Err(e),
            };
            if b.is_zero() {
                return Ok(ring.zero());
            }
            g = a.lc().clone();
            h = if delta == 0 {
                h
            } else {
                let num = ring.pow(&g, delta)?;
                let den = ring.pow(&h, delta - 1)?;
                ring.exact_div(&num, &den)?
            };
            if b.deg() == 0 {
                let da = a.deg() as u64;
                let num = ring.pow(&b.coeffs[0], da)?;
                let den = ring.pow(&h, da.saturating_sub(1))?;
                let res = ring.exact_div(&num, &den)?;
                return Ok(if negate { ring.neg(&res) } else { res });
            }
        }
    }

    /// Pseudo-remainder `prem(a, b)` with `lc(b)^(deg a - deg b + 1) a =
    /// q b + prem(a, b)`; uses ring operations only.
    fn pseudo_rem<R: Ring<El = T>>(&self, ring: &R, b: &Self) -> Res<Self> {
        let d = b.deg();
        let mut r = self.clone();
        let mut e = (self.deg() - d) as i64 + 1;
        while !r.is_zero() && r.deg() >= d {
            // r <- lc(b) * r - lc(r) * X^(deg r - deg b) * b
            let k = r.deg();
            let lr = r.lc().clone();
            let mut coeffs = vec![ring.zero(); k + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = ring.mul(c, b.lc())?;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = ring.mul(&lr, bc)?;
                coeffs[k - d + j] = ring.sub(&coeffs[k - d + j], &t)?;
            }
            coeffs.truncate(k);
            r = Self::new(ring, coeffs);
            e -= 1;
        }
        let scale = ring.pow(b.lc(), e.max(0) as u64)?;
        r.scale(ring, &scale)
    }

    fn exact_div_coeffs<R: Ring<El = T>>(&self, ring: &R, c: &T) -> Res<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(ring.exact_div(a, c)?);
        }
        Ok(Self::new(ring, coeffs))
    }

    /// Yun's squarefree decomposition over a characteristic-zero field.
    /// Returns `(factor, multiplicity)` pairs with the factors monic,
    /// pairwise coprime and squarefree, together with a flag that is set
    /// when the input had to be normalized to monic form first.
    pub fn squarefree_decomposition<F: Field<El = T>>(
        &self,
        field: &F,
    ) -> Res<(Vec<(Self, usize)>, bool)> {
        if self.is_zero() {
            return Err(Error::Domain("squarefree decomposition of zero".into()));
        }
        let normalized = !self.is_monic(field);
        let p = if normalized {
            self.scale(field, &field.inv(self.lc())?)?
        } else {
            self.clone()
        };
        if p.deg() == 0 {
            return Ok((vec![], normalized));
        }
        let dp = p.derivative(field)?;
        let g = p.gcd(field, &dp)?;
        if g.deg() == 0 {
            return Ok((vec![(p, 1)], normalized));
        }
        let mut out = Vec::new();
        let mut w = p.exact_div(field, &g)?;
        let mut y = dp.exact_div(field, &g)?;
        let mut mult = 1usize;
        loop {
            let z = y.sub(field, &w.derivative(field)?)?;
            if z.is_zero() {
                if w.deg() > 0 {
                    out.push((w, mult));
                }
                break;
            }
            let f = w.gcd(field, &z)?;
            if f.deg() > 0 {
                out.push((f.clone(), mult));
            }
            w = w.exact_div(field, &f)?;
            y = z.exact_div(field, &f)?;
            mult += 1;
            if w.deg() == 0 {
                break;
            }
        }
        Ok((out, normalized))
    }

    /// Product of `factor^multiplicity` over a decomposition; test helper
    /// for the reconstruction invariant.
    pub fn from_decomposition<F: Field<El = T>>(
        field: &F,
        parts: &[(Self, usize)],
    ) -> Res<Self> {
        let mut acc = Self::constant(field, field.one());
        for (f, m) in parts {
            for _ in 0..*m {
                acc = acc.mul(field, f)?;
            }
        }
        Ok(acc)
    }

    /// `true` if `gcd(self, self')` is constant.
    pub fn is_squarefree<F: Field<El = T>>(&self, field: &F) -> Res<bool> {
        let dp = self.derivative(field)?;
        if dp.is_zero() {
            return Ok(self.deg() == 0);
        }
        let g = self.gcd(field, &dp)?;
        Ok(g.deg() == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::{rat, ratio};
    use super::super::ring::{PolyRing, QQ};
    use super::*;
    use num_traits::Zero;

    fn qp(cs: &[i64]) -> UniPoly<crate::arith::Rat> {
        UniPoly::new(&QQ, cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn div_rem_and_gcd() {
        // (Z-1)(Z+2) = Z^2 + Z - 2
        let p = qp(&[-2, 1, 1]);
        let d = qp(&[-1, 1]);
        let (q, r) = p.div_rem(&QQ, &d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, qp(&[2, 1]));
        let g = p.gcd(&QQ, &qp(&[-1, 0, 1])).unwrap(); // gcd with (Z-1)(Z+1)
        assert_eq!(g, qp(&[-1, 1]));
    }

    #[test]
    fn resultant_linear_pair_sign_convention() {
        // res(X - a, X - b) with the Sylvester convention is a - b;
        // the deg-1 monic pair with a=2, b=5 gives -3.
        let p = qp(&[-2, 1]);
        let q = qp(&[-5, 1]);
        assert_eq!(p.resultant(&QQ, &q).unwrap(), rat(-3));
    }

    #[test]
    fn resultant_nested_poly_coeffs() {
        // Res_X(X^2 - 2, Z - X^2) over QQ[Z]: eliminating X must give
        // (Z - 2)^2, the product of Z - alpha^2 over the roots of X^2 - 2.
        let zr = PolyRing(QQ);
        // X^2 - 2 as a polynomial in X with QQ[Z] coefficients.
        let p = UniPoly::new(&zr, vec![qp(&[-2]), UniPoly::zero(), qp(&[1])]);
        // Z - X^2.
        let q = UniPoly::new(&zr, vec![qp(&[0, 1]), UniPoly::zero(), qp(&[-1])]);
        let res = p.resultant(&zr, &q).unwrap();
        assert_eq!(res, qp(&[4, -4, 1]));
    }

    #[test]
    fn squarefree_decomposition_examples() {
        // Z^2 - 1 is already squarefree.
        let p = qp(&[-1, 0, 1]);
        let (parts, norm) = p.squarefree_decomposition(&QQ).unwrap();
        assert!(!norm);
        assert_eq!(parts, vec![(qp(&[-1, 0, 1]), 1)]);

        // (Z-1)^2 (Z+2)
        let p = qp(&[-1, 1]).mul(&QQ, &qp(&[-1, 1])).unwrap();
        let p = p.mul(&QQ, &qp(&[2, 1])).unwrap();
        let (mut parts, _) = p.squarefree_decomposition(&QQ).unwrap();
        parts.sort_by_key(|(_, m)| std::cmp::Reverse(*m));
        assert_eq!(parts, vec![(qp(&[-1, 1]), 2), (qp(&[2, 1]), 1)]);
        assert_eq!(UniPoly::from_decomposition(&QQ, &parts).unwrap(), p);

        // Z^3
        let p = qp(&[0, 0, 0, 1]);
        let (parts, _) = p.squarefree_decomposition(&QQ).unwrap();
        assert_eq!(parts, vec![(qp(&[0, 1]), 3)]);

        // non-monic input: flag set, reconstruction is of the monic form
        let p = qp(&[0, 0, 2]);
        let (parts, norm) = p.squarefree_decomposition(&QQ).unwrap();
        assert!(norm);
        assert_eq!(parts, vec![(qp(&[0, 1]), 2)]);
    }

    #[test]
    fn resultant_gcd_link() {
        // resultant(p, q) = 0 iff gcd(p, q) has positive degree
        let p = qp(&[-1, 0, 1]); // (Z-1)(Z+1)
        let q = qp(&[-1, 1]); // Z-1, shares a factor
        assert!(p.resultant(&QQ, &q).unwrap().is_zero());
        assert!(p.gcd(&QQ, &q).unwrap().deg() > 0);
        let q2 = qp(&[-2, 1]); // Z-2, coprime
        assert!(!p.resultant(&QQ, &q2).unwrap().is_zero());
        assert_eq!(p.gcd(&QQ, &q2).unwrap().deg(), 0);
    }

    #[test]
    fn eval_and_compose() {
        let p = qp(&[1, 2, 1]); // (Z+1)^2
        assert_eq!(p.eval(&QQ, &ratio(1, 2)).unwrap(), ratio(9, 4));
        let shifted = p.compose(&QQ, &qp(&[-1, 1])).unwrap(); // Z -> Z-1
        assert_eq!(shifted, qp(&[0, 0, 1]));
    }
}
