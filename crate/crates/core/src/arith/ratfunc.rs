//! Univariate rational functions over a field, used as the base of
//! residue-ratio tower levels (e.g. extensions of `QQ(t)`).

use super::ring::{Field, Ring};
use super::unipoly::UniPoly;
use crate::{Error, Res};

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<T> {
    pub num: UniPoly<T>,
    pub den: UniPoly<T>,
}

/// The field of rational functions in one variable over `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFuncField<F: Field> {
    pub base: F,
    pub var: String,
}

impl<F: Field> RatFuncField<F> {
    pub fn new(base: F, var: &str) -> Self {
        RatFuncField {
            base,
            var: var.to_string(),
        }
    }

    pub fn variable(&self) -> RatFunc<F::El> {
        RatFunc {
            num: UniPoly::new(&self.base, vec![self.base.zero(), self.base.one()]),
            den: UniPoly::constant(&self.base, self.base.one()),
        }
    }

    pub fn from_poly(&self, p: UniPoly<F::El>) -> RatFunc<F::El> {
        RatFunc {
            num: p,
            den: UniPoly::constant(&self.base, self.base.one()),
        }
    }

    fn normalize(&self, num: UniPoly<F::El>, den: UniPoly<F::El>) -> Res<RatFunc<F::El>> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: UniPoly::constant(&self.base, self.base.one()),
            });
        }
        let g = num.gcd(&self.base, &den)?;
        let num = num.exact_div(&self.base, &g)?;
        let den = den.exact_div(&self.base, &g)?;
        let lc_inv = self.base.inv(den.lc())?;
        Ok(RatFunc {
            num: num.scale(&self.base, &lc_inv)?,
            den: den.scale(&self.base, &lc_inv)?,
        })
    }
}

impl<F: Field> Ring for RatFuncField<F> {
    type El = RatFunc<F::El>;

    fn zero(&self) -> Self::El {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::constant(&self.base, self.base.one()),
        }
    }
    fn one(&self) -> Self::El {
        RatFunc {
            num: UniPoly::constant(&self.base, self.base.one()),
            den: UniPoly::constant(&self.base, self.base.one()),
        }
    }
    fn from_int(&self, n: i64) -> Self::El {
        RatFunc {
            num: UniPoly::new(&self.base, vec![self.base.from_int(n)]),
            den: UniPoly::constant(&self.base, self.base.one()),
        }
    }
    fn is_zero(&self, a: &Self::El) -> bool {
        a.num.is_zero()
    }
    fn neg(&self, a: &Self::El) -> Self::El {
        RatFunc {
            num: a.num.neg(&self.base),
            den: a.den.clone(),
        }
    }
    fn add(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        let n1 = a.num.mul(&self.base, &b.den)?;
        let n2 = b.num.mul(&self.base, &a.den)?;
        self.normalize(n1.add(&self.base, &n2)?, a.den.mul(&self.base, &b.den)?)
    }
    fn mul(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        self.normalize(a.num.mul(&self.base, &b.num)?, a.den.mul(&self.base, &b.den)?)
    }
    fn exact_div(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        self.mul(a, &self.inv(b)?)
    }
}

impl<F: Field> Field for RatFuncField<F> {
    fn inv(&self, a: &Self::El) -> Res<Self::El> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.normalize(a.den.clone(), a.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::super::ring::QQ;
    use super::super::tower::{LevelKind, Tower, TowerEl};
    use super::*;

    #[test]
    fn ratfunc_field_ops() {
        let f = RatFuncField::new(QQ, "t");
        let t = f.variable();
        let one = f.one();
        // (1 + t) * 1/(1 + t) == 1
        let u = f.add(&one, &t).unwrap();
        let v = f.inv(&u).unwrap();
        assert_eq!(f.mul(&u, &v).unwrap(), one);
    }

    #[test]
    fn residue_ratio_level_over_function_field() {
        // adjoin a square root of t to QQ(t)
        let f = RatFuncField::new(QQ, "t");
        let tower = Tower::new(f.clone());
        let m = UniPoly::new(
            &tower.full(),
            vec![
                TowerEl::Base(f.neg(&f.variable())),
                TowerEl::Base(f.zero()),
                TowerEl::Base(f.one()),
            ],
        );
        let tower = tower.adjoin_root("s", &m, LevelKind::ResidueRatio).unwrap();
        let s = tower.gen(0);
        let s2 = tower.mul_el(&s, &s).unwrap();
        assert_eq!(s2, TowerEl::Base(f.variable()));
        let _ = rat(0);
    }
}
