//! Weight vectors over a declared real basis, and grade values.

use std::cmp::Ordering;
use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Signed, Zero};

use crate::arith::{rat, ratio, Rat, UniPoly, QQ};
use crate::{Error, Res};

/// Rounds of interval bisection allowed before a comparison gives up.
const REFINE_BUDGET: usize = 256;

/// A basis symbol: a positive real number given by a rational interval
/// enclosure, optionally pinned down as the unique root of a squarefree
/// rational polynomial inside that interval (which makes the enclosure
/// refinable on demand).
#[derive(Debug)]
pub struct BasisSym {
    pub name: String,
    lo: Rat,
    hi: Rat,
    /// Defining polynomial with a sign change on `[lo, hi]`.
    defining: Option<UniPoly<Rat>>,
}

impl BasisSym {
    /// The rational unit `1`.
    pub fn one() -> Self {
        BasisSym {
            name: "1".into(),
            lo: Rat::one(),
            hi: Rat::one(),
            defining: None,
        }
    }

    /// A symbol with a static enclosure; comparisons that need a tighter
    /// interval will fail rather than guess.
    pub fn interval(name: &str, lo: Rat, hi: Rat) -> Res<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("empty enclosure for {name}")));
        }
        Ok(BasisSym {
            name: name.into(),
            lo,
            hi,
            defining: None,
        })
    }

    /// The unique root of `poly` in `[lo, hi]`; requires a strict sign
    /// change so that bisection refines the enclosure.
    pub fn root_of(name: &str, poly: UniPoly<Rat>, lo: Rat, hi: Rat) -> Res<Self> {
        if lo >= hi {
            return Err(Error::Domain(format!("empty enclosure for {name}")));
        }
        let flo = poly.eval(&QQ, &lo)?;
        let fhi = poly.eval(&QQ, &hi)?;
        if flo.is_zero() || fhi.is_zero() || flo.is_positive() == fhi.is_positive() {
            return Err(Error::Domain(format!(
                "defining polynomial for {name} has no strict sign change on the enclosure"
            )));
        }
        Ok(BasisSym {
            name: name.into(),
            lo,
            hi,
            defining: Some(poly),
        })
    }

    /// Convenience: the positive square root of a positive rational.
    pub fn sqrt(name: &str, radicand: i64) -> Res<Self> {
        assert!(radicand > 0);
        let poly = UniPoly::new(&QQ, vec![rat(-radicand), rat(0), rat(1)]);
        let mut hi = rat(1);
        while &hi * &hi < rat(radicand) {
            hi += rat(1);
        }
        if &hi * &hi == rat(radicand) {
            // perfect square: exact enclosure, no refinement needed
            return BasisSym::interval(name, hi.clone(), hi);
        }
        BasisSym::root_of(name, poly, &hi - rat(1), hi)
    }
}

/// An element of the value group: rational coordinates over the weight
/// basis. Addition is componentwise; comparison goes through [`Weights`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradeValue {
    pub coords: Vec<Rat>,
}

impl fmt::Debug for GradeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl GradeValue {
    pub fn zero(dim: usize) -> Self {
        GradeValue {
            coords: vec![Rat::zero(); dim],
        }
    }

    /// A purely rational value: `r` in the first coordinate (which is the
    /// unit symbol for rational weight vectors).
    pub fn rational(dim: usize, r: Rat) -> Self {
        let mut coords = vec![Rat::zero(); dim];
        coords[0] = r;
        GradeValue { coords }
    }

    pub fn is_zero_coords(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &GradeValue) -> GradeValue {
        GradeValue {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &GradeValue) -> GradeValue {
        GradeValue {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> GradeValue {
        GradeValue {
            coords: self.coords.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> GradeValue {
        GradeValue {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// The rational part when the value is purely rational (all other
    /// coordinates zero).
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }
}

/// Weight vector: `alpha_i = sum_j mat[i][j] * basis[j]`, every `alpha_i`
/// certified strictly positive at construction. Enclosure refinement is
/// cached behind a lock; refinement is idempotent and monotone.
#[derive(Debug)]
pub struct Weights {
    pub nvars: usize,
    basis: Vec<BasisSym>,
    pub mat: Vec<Vec<Rat>>,
    encl: RwLock<Vec<(Rat, Rat)>>,
}

impl Weights {
    pub fn new(basis: Vec<BasisSym>, mat: Vec<Vec<Rat>>) -> Res<Self> {
        let m = basis.len();
        let nvars = mat.len();
        if nvars == 0 || m == 0 {
            return Err(Error::Domain("empty weight specification".into()));
        }
        for row in &mat {
            if row.len() != m {
                return Err(Error::Domain("weight matrix shape mismatch".into()));
            }
            if row.iter().all(|c| c.is_zero()) {
                return Err(Error::Domain("zero weight row".into()));
            }
        }
        let encl = RwLock::new(basis.iter().map(|b| (b.lo.clone(), b.hi.clone())).collect());
        let w = Weights {
            nvars,
            basis,
            mat,
            encl,
        };
        for i in 0..w.nvars {
            let row = w.mat[i].clone();
            if w.sign_of_combination(&row)? != Ordering::Greater {
                return Err(Error::Domain(format!(
                    "weight {} not certified positive",
                    i + 1
                )));
            }
        }
        Ok(w)
    }

    /// All-rational weights over the unit basis symbol.
    pub fn rational(alphas: Vec<Rat>) -> Res<Self> {
        let mat = alphas.into_iter().map(|a| vec![a]).collect();
        Weights::new(vec![BasisSym::one()], mat)
    }

    /// The `ord` valuation: all weights one.
    pub fn ord(nvars: usize) -> Weights {
        Weights::rational(vec![Rat::one(); nvars]).expect("ord weights")
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.name.clone()).collect()
    }

    /// `true` when the weights are rational multiples of 1.
    pub fn is_rational(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].lo.is_one() && self.basis[0].hi.is_one()
    }

    /// Grade value of the monomial with the given exponent vector.
    pub fn grade_of_exponents(&self, exps: &[Rat]) -> GradeValue {
        assert_eq!(exps.len(), self.nvars);
        let m = self.basis.len();
        let mut coords = vec![Rat::zero(); m];
        for (i, e) in exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            for j in 0..m {
                if !self.mat[i][j].is_zero() {
                    coords[j] += e * &self.mat[i][j];
                }
            }
        }
        GradeValue { coords }
    }

    /// Grade value of a single variable.
    pub fn grade_of_var(&self, i: usize) -> GradeValue {
        GradeValue {
            coords: self.mat[i].clone(),
        }
    }

    /// Total order on grade values: exact on equal coordinates, decided by
    /// enclosure refinement otherwise.
    pub fn compare(&self, a: &GradeValue, b: &GradeValue) -> Res<Ordering> {
        if a.coords == b.coords {
            return Ok(Ordering::Equal);
        }
        let delta: Vec<Rat> = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x - y)
            .collect();
        self.sign_of_combination(&delta)
    }

    /// Sign of a grade value (comparison against zero).
    pub fn sign(&self, a: &GradeValue) -> Res<Ordering> {
        if a.is_zero_coords() {
            return Ok(Ordering::Equal);
        }
        self.sign_of_combination(&a.coords)
    }

    /// Sign of `value - r` for a rational `r`.
    pub fn compare_with_rational(&self, a: &GradeValue, r: &Rat) -> Res<Ordering> {
        if self.basis[0].lo.is_one() && self.basis[0].hi.is_one() {
            // the unit sits in coordinate 0, so the difference stays a
            // combination over the basis
            let mut delta = a.coords.clone();
            delta[0] -= r;
            if delta.iter().all(|c| c.is_zero()) {
                return Ok(Ordering::Equal);
            }
            return self.sign_of_combination(&delta);
        }
        for _ in 0..=REFINE_BUDGET {
            let (lo, hi) = self.combination_bounds(&a.coords)?;
            if &lo - r > Rat::zero() {
                return Ok(Ordering::Greater);
            }
            if &hi - r < Rat::zero() {
                return Ok(Ordering::Less);
            }
            if lo == hi && lo == *r {
                return Ok(Ordering::Equal);
            }
            if !self.refine_widest(&a.coords)? {
                return Err(Error::NotComparable);
            }
        }
        Err(Error::NotComparable)
    }

    /// Certified sign of `sum_j delta[j] * basis[j]`.
    fn sign_of_combination(&self, delta: &[Rat]) -> Res<Ordering> {
        for _ in 0..=REFINE_BUDGET {
            let (lo, hi) = self.combination_bounds(delta)?;
            if lo.is_positive() {
                return Ok(Ordering::Greater);
            }
            if hi.is_negative() {
                return Ok(Ordering::Less);
            }
            if lo.is_zero() && hi.is_zero() {
                return Ok(Ordering::Equal);
            }
            if !self.refine_widest(delta)? {
                return Err(Error::NotComparable);
            }
        }
        Err(Error::NotComparable)
    }

    fn combination_bounds(&self, delta: &[Rat]) -> Res<(Rat, Rat)> {
        let encl = self.encl.read().expect("enclosure lock");
        let mut lo = Rat::zero();
        let mut hi = Rat::zero();
        for (j, c) in delta.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (l, h) = &encl[j];
            if c.is_positive() {
                lo += c * l;
                hi += c * h;
            } else {
                lo += c * h;
                hi += c * l;
            }
        }
        Ok((lo, hi))
    }

    /// Bisect the widest refinable enclosure among the symbols that appear
    /// in `delta`. Returns `false` when nothing can be refined further.
    fn refine_widest(&self, delta: &[Rat]) -> Res<bool> {
        let mut encl = self.encl.write().expect("enclosure lock");
        let mut widest: Option<(usize, Rat)> = None;
        for (j, c) in delta.iter().enumerate() {
            if c.is_zero() || self.basis[j].defining.is_none() {
                continue;
            }
            let w = (&encl[j].1 - &encl[j].0) * c.abs();
            if w.is_zero() {
                continue;
            }
            match &widest {
                Some((_, best)) if *best >= w => {}
                _ => widest = Some((j, w)),
            }
        }
        let Some((j, _)) = widest else {
            return Ok(false);
        };
        let poly = self.basis[j].defining.as_ref().unwrap();
        let (lo, hi) = encl[j].clone();
        let mid = (&lo + &hi) / rat(2);
        let fmid = poly.eval(&QQ, &mid)?;
        if fmid.is_zero() {
            encl[j] = (mid.clone(), mid);
            return Ok(true);
        }
        let flo = poly.eval(&QQ, &lo)?;
        if flo.is_positive() != fmid.is_positive() {
            encl[j] = (lo, mid);
        } else {
            encl[j] = (mid, hi);
        }
        Ok(true)
    }

    /// Refine until every symbol enclosure has width at most `width`
    /// (static-interval symbols keep their declared width).
    pub fn refine_all_to(&self, width: &Rat) -> Res<()> {
        for j in 0..self.basis.len() {
            if self.basis[j].defining.is_none() {
                continue;
            }
            for _ in 0..REFINE_BUDGET {
                let done = {
                    let encl = self.encl.read().expect("enclosure lock");
                    &encl[j].1 - &encl[j].0 <= *width
                };
                if done {
                    break;
                }
                let mut sel = vec![Rat::zero(); self.basis.len()];
                sel[j] = Rat::one();
                if !self.refine_widest(&sel)? {
                    break;
                }
            }
        }
        Ok(())
    }

    /// Current enclosure of `alpha_i`.
    pub fn alpha_bounds(&self, i: usize) -> (Rat, Rat) {
        self.combination_bounds(&self.mat[i]).expect("bounds")
    }

    /// Midpoint approximation of `alpha_i` from the current enclosures.
    pub fn alpha_mid(&self, i: usize) -> Rat {
        let (lo, hi) = self.alpha_bounds(i);
        (lo + hi) / rat(2)
    }

    /// Least strictly positive grade among the variables; a convenient
    /// step bound for truncation loops.
    pub fn min_var_grade(&self) -> Res<GradeValue> {
        let mut best = self.grade_of_var(0);
        for i in 1..self.nvars {
            let g = self.grade_of_var(i);
            if self.compare(&g, &best)? == Ordering::Less {
                best = g;
            }
        }
        Ok(best)
    }
}

impl PartialEq for Weights {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.mat == other.mat
            && self
                .basis
                .iter()
                .zip(&other.basis)
                .all(|(a, b)| a.name == b.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_weights_compare_exactly() {
        let w = Weights::rational(vec![rat(1), rat(1)]).unwrap();
        let a = GradeValue::rational(1, rat(2));
        let b = GradeValue::rational(1, ratio(5, 2));
        assert_eq!(w.compare(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(w.compare(&a, &a).unwrap(), Ordering::Equal);
    }

    #[test]
    fn symbolic_basis_comparison_via_refinement() {
        // basis {1, sqrt2}
        let basis = vec![BasisSym::one(), BasisSym::sqrt("sqrt2", 2).unwrap()];
        let mat = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let w = Weights::new(basis, mat).unwrap();
        // (1,0) vs (0,1): 1 < sqrt2
        let a = GradeValue {
            coords: vec![rat(1), rat(0)],
        };
        let b = GradeValue {
            coords: vec![rat(0), rat(1)],
        };
        assert_eq!(w.compare(&a, &b).unwrap(), Ordering::Less);
        // (2,0) vs (0,1): 2 > sqrt2 needs refinement below width 1
        let c = GradeValue {
            coords: vec![rat(2), rat(0)],
        };
        assert_eq!(w.compare(&c, &b).unwrap(), Ordering::Greater);
        // equal coordinates
        assert_eq!(w.compare(&b, &b).unwrap(), Ordering::Equal);
    }

    #[test]
    fn static_interval_budget_error() {
        // two static symbols with overlapping enclosures cannot be separated
        let basis = vec![
            BasisSym::interval("a", rat(1), rat(2)).unwrap(),
            BasisSym::interval("b", rat(1), rat(2)).unwrap(),
        ];
        let mat = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let w = Weights::new(basis, mat).unwrap();
        let a = GradeValue {
            coords: vec![rat(1), rat(0)],
        };
        let b = GradeValue {
            coords: vec![rat(0), rat(1)],
        };
        assert_eq!(w.compare(&a, &b), Err(Error::NotComparable));
    }

    #[test]
    fn grade_of_exponents_mixed_basis() {
        // alpha = (1, sqrt2) over basis {1, sqrt2}
        let basis = vec![BasisSym::one(), BasisSym::sqrt("sqrt2", 2).unwrap()];
        let mat = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let w = Weights::new(basis, mat).unwrap();
        // x1 * x2 has grade (1, 1) = 1 + sqrt2
        let g = w.grade_of_exponents(&[rat(1), rat(1)]);
        assert_eq!(g.coords, vec![rat(1), rat(1)]);
    }

    #[test]
    fn positivity_certified_at_construction() {
        // alpha_1 = sqrt2 - 2 < 0 must be rejected
        let basis = vec![BasisSym::one(), BasisSym::sqrt("sqrt2", 2).unwrap()];
        let mat = vec![vec![rat(-2), rat(1)]];
        assert!(Weights::new(basis, mat).is_err());
    }
}
