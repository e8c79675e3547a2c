//! Factorization of monic rational univariate polynomials into monic
//! irreducible factors, at desk scale.
//!
//! Strategy: squarefree decomposition first, then rational-root peeling,
//! exponent decimation (polynomials in `Z^k`), and a bounded Kronecker
//! divisor search for the remaining composite degrees. Degrees above the
//! configured bound are rejected.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use super::ring::QQ;
use super::unipoly::UniPoly;
use crate::{Error, Res};

/// Default degree bound for [`factor_rational_univariate`].
pub const DEFAULT_DEGREE_BOUND: usize = 12;

const DIVISOR_BUDGET: usize = 200_000;

/// Factor a monic polynomial over the rationals into monic irreducible
/// factors (with repetition for multiple factors). Fails with
/// `Error::DegreeBound` above `bound` and with `Error::BudgetExhausted`
/// if the divisor search explodes.
pub fn factor_rational_univariate(
    p: &UniPoly<Rat>,
    bound: usize,
) -> Res<Vec<UniPoly<Rat>>> {
    if p.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    if !p.is_monic(&QQ) {
        return Err(Error::Domain("input must be monic".into()));
    }
    let deg = p.deg();
    if deg > bound {
        return Err(Error::DegreeBound { degree: deg, bound });
    }
    if deg == 0 {
        return Ok(vec![]);
    }
    let (parts, _) = p.squarefree_decomposition(&QQ)?;
    let mut out = Vec::new();
    for (f, mult) in parts {
        let factors = factor_squarefree(&f, true)?;
        for _ in 0..mult {
            out.extend(factors.iter().cloned());
        }
    }
    out.sort_by_key(poly_sort_key);
    Ok(out)
}

fn poly_sort_key(p: &UniPoly<Rat>) -> (usize, Vec<String>) {
    (
        p.deg(),
        p.coeffs.iter().map(|c| c.to_string()).collect(),
    )
}

fn factor_squarefree(p: &UniPoly<Rat>, try_decimate: bool) -> Res<Vec<UniPoly<Rat>>> {
    let mut out = Vec::new();
    let mut rest = p.clone();

    // Peel rational roots.
    loop {
        if rest.deg() == 0 {
            return Ok(out);
        }
        match rational_root(&rest)? {
            Some(r) => {
                let lin = UniPoly::new(&QQ, vec![-r.clone(), Rat::one()]);
                rest = rest.exact_div(&QQ, &lin)?;
                out.push(lin);
            }
            None => break,
        }
    }

    let d = rest.deg();
    if d <= 1 {
        if d == 1 {
            out.push(rest);
        }
        return Ok(out);
    }
    // Squarefree quadratics and cubics without rational roots are
    // irreducible over the rationals.
    if d <= 3 {
        out.push(rest);
        return Ok(out);
    }

    // Decimation: p(Z) = q(Z^k) reduces the problem, with the factors of q
    // re-expanded and factored without further decimation.
    if try_decimate {
        if let Some(k) = exponent_gcd(&rest) {
            let q = decimate(&rest, k);
            let qf = factor_squarefree(&q, false)?;
            if qf.len() > 1 {
                for f in qf {
                    let inflated = f.inflate(&QQ, k);
                    out.extend(factor_squarefree(&inflated, false)?);
                }
                return Ok(out);
            }
        }
    }

    // Kronecker: look for a factor of degree 2..=d/2 by interpolation
    // through divisors of integer values.
    match kronecker_factor(&rest)? {
        Some(f) => {
            let cof = rest.exact_div(&QQ, &f)?;
            out.extend(factor_squarefree(&f, false)?);
            out.extend(factor_squarefree(&cof, false)?);
            Ok(out)
        }
        None => {
            out.push(rest);
            Ok(out)
        }
    }
}

/// Exponent-lattice gcd over the nonzero terms, if > 1.
fn exponent_gcd(p: &UniPoly<Rat>) -> Option<usize> {
    let mut g: usize = 0;
    for (k, c) in p.coeffs.iter().enumerate() {
        if k > 0 && !c.is_zero() {
            g = g.gcd(&k);
        }
    }
    (g > 1).then_some(g)
}

fn decimate(p: &UniPoly<Rat>, k: usize) -> UniPoly<Rat> {
    let coeffs = p
        .coeffs
        .iter()
        .step_by(k)
        .cloned()
        .collect::<Vec<_>>();
    UniPoly { coeffs }
}

/// Scale a monic rational polynomial to a primitive integer polynomial.
fn to_integer(p: &UniPoly<Rat>) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in &p.coeffs {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    (ints, den)
}

/// Divisors of `n` (positive only), with a budget guard on the
/// trial-division factorization.
fn divisors(n: &BigInt) -> Res<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return Err(Error::Domain("divisors of zero requested".into()));
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= n && d <= limit {
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if !n.is_one() {
        if n > BigInt::from(u64::MAX) {
            return Err(Error::BudgetExhausted(
                "coefficient too large for the divisor search".into(),
            ));
        }
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &prime;
            }
        }
        divs = next;
        if divs.len() > DIVISOR_BUDGET {
            return Err(Error::BudgetExhausted("too many divisors".into()));
        }
    }
    Ok(divs)
}

/// Rational root of a monic rational polynomial, if any.
fn rational_root(p: &UniPoly<Rat>) -> Res<Option<Rat>> {
    let (ints, den) = to_integer(p);
    // roots of the integer polynomial are num/denominator with
    // num | ints[0] and denominator | lc
    if ints[0].is_zero() {
        return Ok(Some(Rat::zero()));
    }
    let lc = ints.last().unwrap().clone();
    let nums = divisors(&ints[0])?;
    let dens = divisors(&lc)?;
    for nu in &nums {
        for de in &dens {
            for sign in [1i64, -1] {
                let cand = Rat::new(nu * BigInt::from(sign), de.clone());
                if p.eval(&QQ, &cand)?.is_zero() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    let _ = den;
    Ok(None)
}

/// Kronecker divisor search: try to produce a nontrivial factor of
/// degree 2..=deg/2. Returns a monic rational factor on success.
fn kronecker_factor(p: &UniPoly<Rat>) -> Res<Option<UniPoly<Rat>>> {
    let d = p.deg();
    let (ints, _) = to_integer(p);
    let ip = |x: &BigInt| -> BigInt {
        let mut acc = BigInt::zero();
        for c in ints.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for t in 2..=d / 2 {
        // interpolation points 0, 1, -1, 2, -2, ...
        let points: Vec<BigInt> = (0..=t as i64)
            .map(|k| {
                if k % 2 == 0 {
                    BigInt::from(-(k / 2))
                } else {
                    BigInt::from(k / 2 + 1)
                }
            })
            .collect();
        let values: Vec<BigInt> = points.iter().map(&ip).collect();
        if values.iter().any(|v| v.is_zero()) {
            // a rational root slipped through; jettison gracefully
            return Ok(None);
        }
        let divisor_lists: Vec<Vec<BigInt>> = {
            let mut lists = Vec::with_capacity(values.len());
            for v in &values {
                let divs = divisors(v)?;
                let mut signed = Vec::with_capacity(divs.len() * 2);
                for di in divs {
                    signed.push(di.clone());
                    signed.push(-di);
                }
                lists.push(signed);
            }
            lists
        };
        let total: usize = divisor_lists
            .iter()
            .map(|l| l.len())
            .try_fold(1usize, |a, b| a.checked_mul(b))
            .unwrap_or(usize::MAX);
        if total > DIVISOR_BUDGET {
            return Err(Error::BudgetExhausted(
                "Kronecker divisor search too large".into(),
            ));
        }
        let mut idx = vec![0usize; divisor_lists.len()];
        'outer: loop {
            let sample: Vec<BigInt> = idx
                .iter()
                .enumerate()
                .map(|(i, &j)| divisor_lists[i][j].clone())
                .collect();
            if let Some(f) = interpolate_integer(&points, &sample) {
                if f.len() == t + 1 && !f[t].is_zero() {
                    let fr = UniPoly::new(
                        &QQ,
                        f.iter().map(|c| Rat::from_integer(c.clone())).collect(),
                    );
                    // normalize to monic and test divisibility
                    let monic = fr
                        .scale(&QQ, &Rat::from_integer(f[t].clone()).recip())
                        .expect("scale");
                    if let Ok(q) = p.exact_div(&QQ, &monic) {
                        if !q.is_zero() {
                            return Ok(Some(monic));
                        }
                    }
                }
            }
            // advance the mixed-radix counter
            for i in 0..idx.len() {
                idx[i] += 1;
                if idx[i] < divisor_lists[i].len() {
                    continue 'outer;
                }
                idx[i] = 0;
            }
            break;
        }
    }
    Ok(None)
}

/// Lagrange interpolation returning integer coefficients, or `None` if a
/// non-integer coefficient appears.
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = points.len();
    let mut acc = vec![Rat::zero(); n];
    for i in 0..n {
        // l_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut num = vec![Rat::one()];
        let mut den = Rat::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![Rat::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * Rat::from_integer(points[j].clone());
            }
            num = next;
            den *= Rat::from_integer(&points[i] - &points[j]);
        }
        let scale = Rat::from_integer(values[i].clone()) / den;
        for (k, c) in num.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in acc {
        if !c.denom().is_one() {
            return None;
        }
        out.push(c.to_integer());
    }
    while out.last().map(|c| c.is_zero()).unwrap_or(false) {
        out.pop();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::*;

    fn qp(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(&QQ, cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn linear_split() {
        let fs = factor_rational_univariate(&qp(&[-1, 0, 1]), 12).unwrap();
        assert_eq!(fs, vec![qp(&[-1, 1]), qp(&[1, 1])]);
    }

    #[test]
    fn quartic_decimation() {
        let fs = factor_rational_univariate(&qp(&[-4, 0, 0, 0, 1]), 12).unwrap();
        assert_eq!(fs, vec![qp(&[-2, 0, 1]), qp(&[2, 0, 1])]);
    }

    #[test]
    fn irreducible_quadratic() {
        let fs = factor_rational_univariate(&qp(&[1, 0, 1]), 12).unwrap();
        assert_eq!(fs, vec![qp(&[1, 0, 1])]);
    }

    #[test]
    fn repeated_factors_and_reconstruction() {
        // (Z-1)^2 (Z^2+1)
        let p = qp(&[-1, 1])
            .mul(&QQ, &qp(&[-1, 1]))
            .unwrap()
            .mul(&QQ, &qp(&[1, 0, 1]))
            .unwrap();
        let fs = factor_rational_univariate(&p, 12).unwrap();
        assert_eq!(fs.len(), 3);
        let mut prod = UniPoly::constant(&QQ, rat(1));
        for f in &fs {
            prod = prod.mul(&QQ, f).unwrap();
            // factors with no rational root unless linear
            if f.deg() > 1 {
                assert!(rational_root(f).unwrap().is_none());
            }
        }
        assert_eq!(prod, p);
    }

    #[test]
    fn degree_bound_rejected() {
        let mut cs = vec![0i64; 14];
        cs[13] = 1;
        cs[0] = -1;
        assert!(matches!(
            factor_rational_univariate(&qp(&cs), 12),
            Err(Error::DegreeBound { .. })
        ));
    }

    #[test]
    fn kronecker_finds_quadratic_pair() {
        // (Z^2 + Z + 1)(Z^2 + 2) has no rational roots and no decimation
        let p = qp(&[1, 1, 1]).mul(&QQ, &qp(&[2, 0, 1])).unwrap();
        let fs = factor_rational_univariate(&p, 12).unwrap();
        assert_eq!(fs.len(), 2);
        let prod = fs[0].mul(&QQ, &fs[1]).unwrap();
        assert_eq!(prod, p);
    }
}
