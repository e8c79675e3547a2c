//! Towers of algebraic extensions with dynamic-evaluation splitting.
//!
//! A tower is a base field plus an ordered list of levels, each adjoining a
//! root of a monic squarefree modulus with coefficients from the levels
//! below. Moduli need not be irreducible: when an inversion runs into a
//! nontrivial gcd with a modulus, the computation reports a zero divisor
//! and [`Tower::zero_divisor_split`] produces the two cofactor branches
//! (the D5 principle). Arithmetic below a level never references
//! generators above it.

use super::ring::{Field, Ring};
use super::unipoly::UniPoly;
use crate::{Error, Res};

/// What a level of the tower extends by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelKind {
    /// Root of a squarefree monic polynomial with coefficients from the
    /// levels below (rational coefficients in the classical case).
    NumberField,
    /// Root adjoined over a residue field containing ratio functions.
    ResidueRatio,
    /// Positive-degree homogeneous element (tracked here for bookkeeping;
    /// the graded arithmetic lives in the series module).
    Homogeneous,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Level<T> {
    pub name: String,
    /// Monic squarefree modulus, coefficients from the sub-tower,
    /// lowest degree first, length = degree + 1.
    pub modulus: Vec<TowerEl<T>>,
    pub kind: LevelKind,
}

impl<T> Level<T> {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// An element of a tower. `Base` holds a base-field element; `Ext` is a
/// reduced polynomial in the generator of level `lev` with coefficients
/// strictly below that level. Canonical form: `cs.len() >= 2`, the last
/// entry nonzero, every entry of height <= `lev`.
#[derive(Clone, Debug, PartialEq)]
pub enum TowerEl<T> {
    Base(T),
    Ext { lev: u16, cs: Vec<TowerEl<T>> },
}

impl<T> TowerEl<T> {
    /// Number of tower levels the element actually uses.
    pub fn height(&self) -> usize {
        match self {
            TowerEl::Base(_) => 0,
            TowerEl::Ext { lev, .. } => *lev as usize + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tower<B: Field> {
    pub base: B,
    pub levels: Vec<Level<B::El>>,
}

/// Result of an inversion attempt in a tower.
#[derive(Clone, Debug)]
pub enum InvOutcome<T> {
    Inverse(TowerEl<T>),
    /// A zero divisor was found: `factor` is a monic proper divisor of the
    /// modulus at `level`.
    Split {
        level: usize,
        factor: Vec<TowerEl<T>>,
    },
}

/// Result of [`Tower::zero_divisor_split`].
#[derive(Clone, Debug)]
pub enum SplitOutcome<B: Field> {
    /// The witness was invertible after all; its inverse is returned.
    Invertible(TowerEl<B::El>),
    /// The tower split into two branches. In the first the witness is
    /// zero, in the second it is invertible.
    Split {
        level: usize,
        zero_branch: Tower<B>,
        unit_branch: Tower<B>,
    },
}

/// Borrowed view of a tower truncated to its first `top` levels; this is
/// the coefficient field for level `top` and lets the generic polynomial
/// machinery run at any depth of the tower.
#[derive(Clone, Debug)]
pub struct TowerView<'a, B: Field> {
    pub tower: &'a Tower<B>,
    pub top: usize,
}

impl<B: Field> Tower<B> {
    pub fn new(base: B) -> Self {
        Tower {
            base,
            levels: Vec::new(),
        }
    }

    pub fn view(&self, top: usize) -> TowerView<'_, B> {
        assert!(top <= self.levels.len());
        TowerView { tower: self, top }
    }

    pub fn full(&self) -> TowerView<'_, B> {
        self.view(self.levels.len())
    }

    pub fn from_base(&self, b: B::El) -> TowerEl<B::El> {
        TowerEl::Base(b)
    }

    /// The generator of level `lev`.
    pub fn gen(&self, lev: usize) -> TowerEl<B::El> {
        assert!(lev < self.levels.len());
        TowerEl::Ext {
            lev: lev as u16,
            cs: vec![TowerEl::Base(self.base.zero()), TowerEl::Base(self.base.one())],
        }
    }

    /// Total degree of the tower over the base: product of level degrees.
    pub fn dimension(&self) -> usize {
        self.levels.iter().map(|l| l.degree()).product()
    }

    fn normalize(&self, lev: usize, mut cs: Vec<TowerEl<B::El>>) -> TowerEl<B::El> {
        while cs
            .last()
            .map(|c| self.is_zero_el(c))
            .unwrap_or(false)
        {
            cs.pop();
        }
        match cs.len() {
            0 => TowerEl::Base(self.base.zero()),
            1 => cs.pop().unwrap(),
            _ => TowerEl::Ext {
                lev: lev as u16,
                cs,
            },
        }
    }

    pub fn is_zero_el(&self, a: &TowerEl<B::El>) -> bool {
        match a {
            TowerEl::Base(b) => self.base.is_zero(b),
            TowerEl::Ext { .. } => false,
        }
    }

    /// Coefficient vector of `a` viewed as a polynomial in the generator
    /// of level `lev` (a constant polynomial when `a` lives below).
    fn coeffs_at(&self, lev: usize, a: &TowerEl<B::El>) -> Vec<TowerEl<B::El>> {
        match a {
            TowerEl::Ext { lev: l, cs } if *l as usize == lev => cs.clone(),
            _ => {
                assert!(a.height() <= lev, "element above the requested level");
                vec![a.clone()]
            }
        }
    }

    pub fn add_el(&self, a: &TowerEl<B::El>, b: &TowerEl<B::El>) -> Res<TowerEl<B::El>> {
        match (a, b) {
            (TowerEl::Base(x), TowerEl::Base(y)) => Ok(TowerEl::Base(self.base.add(x, y)?)),
            _ => {
                let lev = a.height().max(b.height()) - 1;
                let ca = self.coeffs_at(lev, a);
                let cb = self.coeffs_at(lev, b);
                let n = ca.len().max(cb.len());
                let zero = TowerEl::Base(self.base.zero());
                let mut cs = Vec::with_capacity(n);
                for k in 0..n {
                    let x = ca.get(k).unwrap_or(&zero);
                    let y = cb.get(k).unwrap_or(&zero);
                    cs.push(self.add_el(x, y)?);
                }
                Ok(self.normalize(lev, cs))
            }
        }
    }

    pub fn neg_el(&self, a: &TowerEl<B::El>) -> TowerEl<B::El> {
        match a {
            TowerEl::Base(x) => TowerEl::Base(self.base.neg(x)),
            TowerEl::Ext { lev, cs } => TowerEl::Ext {
                lev: *lev,
                cs: cs.iter().map(|c| self.neg_el(c)).collect(),
            },
        }
    }

    pub fn sub_el(&self, a: &TowerEl<B::El>, b: &TowerEl<B::El>) -> Res<TowerEl<B::El>> {
        self.add_el(a, &self.neg_el(b))
    }

    pub fn mul_el(&self, a: &TowerEl<B::El>, b: &TowerEl<B::El>) -> Res<TowerEl<B::El>> {
        match (a, b) {
            (TowerEl::Base(x), TowerEl::Base(y)) => Ok(TowerEl::Base(self.base.mul(x, y)?)),
            _ => {
                let lev = a.height().max(b.height()) - 1;
                let ca = self.coeffs_at(lev, a);
                let cb = self.coeffs_at(lev, b);
                let zero = TowerEl::Base(self.base.zero());
                let mut cs = vec![zero; ca.len() + cb.len() - 1];
                for (i, x) in ca.iter().enumerate() {
                    if self.is_zero_el(x) {
                        continue;
                    }
                    for (j, y) in cb.iter().enumerate() {
                        let t = self.mul_el(x, y)?;
                        cs[i + j] = self.add_el(&cs[i + j], &t)?;
                    }
                }
                self.reduce_at(lev, cs)
            }
        }
    }

    /// Reduce a coefficient vector modulo the level modulus.
    fn reduce_at(&self, lev: usize, cs: Vec<TowerEl<B::El>>) -> Res<TowerEl<B::El>> {
        let view = self.view(lev);
        let p = UniPoly::new(&view, cs);
        let m = UniPoly::new(&view, self.levels[lev].modulus.clone());
        let (_, r) = p.div_rem_monic(&view, &m)?;
        Ok(self.normalize(lev, r.coeffs))
    }

    /// Attempt to invert `a`, reporting a modulus factor on zero divisors.
    pub fn try_inv(&self, a: &TowerEl<B::El>) -> Res<InvOutcome<B::El>> {
        match a {
            TowerEl::Base(x) => Ok(InvOutcome::Inverse(TowerEl::Base(self.base.inv(x)?))),
            TowerEl::Ext { lev, cs } => {
                let lev = *lev as usize;
                let view = self.view(lev);
                let m = UniPoly::new(&view, self.levels[lev].modulus.clone());
                let u = UniPoly::new(&view, cs.clone());
                // Extended Euclid tracking the u-cofactor; leading
                // coefficients are inverted recursively, and failures
                // below propagate as splits.
                let mut r0 = m.clone();
                let mut r1 = u;
                let mut t0: UniPoly<TowerEl<B::El>> = UniPoly::zero();
                let mut t1 = UniPoly::constant(&view, TowerEl::Base(self.base.one()));
                loop {
                    if r1.is_zero() {
                        // r0 is a monic proper factor of the modulus.
                        return Ok(InvOutcome::Split {
                            level: lev,
                            factor: r0.coeffs,
                        });
                    }
                    let lc = r1.lc().clone();
                    let lc_inv = match self.try_inv(&lc)? {
                        InvOutcome::Inverse(i) => i,
                        split @ InvOutcome::Split { .. } => return Ok(split),
                    };
                    r1 = r1.scale(&view, &lc_inv)?;
                    t1 = t1.scale(&view, &lc_inv)?;
                    if r1.deg() == 0 {
                        // r1 == 1, so t1 * u == 1 modulo m.
                        let (_, t) = t1.div_rem_monic(&view, &m)?;
                        return Ok(InvOutcome::Inverse(self.normalize(lev, t.coeffs)));
                    }
                    let (q, r2) = r0.div_rem_monic(&view, &r1)?;
                    let t2 = t0.sub(&view, &q.mul(&view, &t1)?)?;
                    r0 = std::mem::replace(&mut r1, r2);
                    t0 = std::mem::replace(&mut t1, t2);
                }
            }
        }
    }

    /// Extend the tower by a root of `modulus` (monic, squarefree over the
    /// current tower). Rejects non-squarefree moduli with the repeated
    /// factor.
    pub fn adjoin_root(
        &self,
        name: &str,
        modulus: &UniPoly<TowerEl<B::El>>,
        kind: LevelKind,
    ) -> Res<Tower<B>> {
        let view = self.full();
        if !modulus.is_monic(&view) {
            return Err(Error::Domain("modulus must be monic".into()));
        }
        if modulus.deg() < 1 {
            return Err(Error::Domain("modulus must have positive degree".into()));
        }
        let dm = modulus.derivative(&view)?;
        let g = modulus.gcd(&view, &dm)?;
        if g.deg() > 0 {
            return Err(Error::NotSquarefree {
                factor: format!("{:?}", g.coeffs),
            });
        }
        let mut t = self.clone();
        t.levels.push(Level {
            name: name.to_string(),
            modulus: modulus.coeffs.clone(),
            kind,
        });
        Ok(t)
    }

    /// Split the tower on a zero-divisor witness. When the witness is in
    /// fact invertible its inverse is returned instead.
    pub fn zero_divisor_split(&self, witness: &TowerEl<B::El>) -> Res<SplitOutcome<B>> {
        if self.is_zero_el(witness) {
            return Err(Error::DivisionByZero);
        }
        match self.try_inv(witness)? {
            InvOutcome::Inverse(i) => Ok(SplitOutcome::Invertible(i)),
            InvOutcome::Split { level, factor } => {
                let view = self.view(level);
                let m = UniPoly::new(&view, self.levels[level].modulus.clone());
                let f = UniPoly::new(&view, factor);
                let cof = m.exact_div(&view, &f)?;
                let mut zero_branch = self.clone();
                zero_branch.levels[level].modulus = f.coeffs.clone();
                let mut unit_branch = self.clone();
                unit_branch.levels[level].modulus = cof.coeffs.clone();
                Ok(SplitOutcome::Split {
                    level,
                    zero_branch,
                    unit_branch,
                })
            }
        }
    }

    /// Re-reduce an element of a compatible tower (same level structure,
    /// possibly smaller moduli) into this tower.
    pub fn migrate(&self, a: &TowerEl<B::El>) -> Res<TowerEl<B::El>> {
        match a {
            TowerEl::Base(_) => Ok(a.clone()),
            TowerEl::Ext { lev, cs } => {
                let lev = *lev as usize;
                let mut mapped = Vec::with_capacity(cs.len());
                for c in cs {
                    mapped.push(self.migrate(c)?);
                }
                self.reduce_at(lev, mapped)
            }
        }
    }

    /// Chinese-remainder merge of residues along a split of level `lev`:
    /// given the two branch towers and the residues of an element in each,
    /// reconstruct the element of this tower.
    pub fn crt_merge(
        &self,
        lev: usize,
        branch_a: &Tower<B>,
        res_a: &TowerEl<B::El>,
        branch_b: &Tower<B>,
        res_b: &TowerEl<B::El>,
    ) -> Res<TowerEl<B::El>> {
        let view = self.view(lev);
        let ma = UniPoly::new(&view, branch_a.levels[lev].modulus.clone());
        let mb = UniPoly::new(&view, branch_b.levels[lev].modulus.clone());
        // e_a = mb * (mb^{-1} mod ma) is 1 mod ma and 0 mod mb.
        let inv_mb = Self::inv_mod(&view, &mb, &ma)?;
        let e_a = mb.mul(&view, &inv_mb)?;
        let inv_ma = Self::inv_mod(&view, &ma, &mb)?;
        let e_b = ma.mul(&view, &inv_ma)?;
        let pa = UniPoly::new(&view, self.coeffs_at(lev, res_a));
        let pb = UniPoly::new(&view, self.coeffs_at(lev, res_b));
        let sum = pa.mul(&view, &e_a)?.add(&view, &pb.mul(&view, &e_b)?)?;
        let m = UniPoly::new(&view, self.levels[lev].modulus.clone());
        let (_, r) = sum.div_rem_monic(&view, &m)?;
        Ok(self.normalize(lev, r.coeffs))
    }

    /// Inverse of `a` modulo monic `m` over a view field.
    fn inv_mod<'a>(
        view: &TowerView<'a, B>,
        a: &UniPoly<TowerEl<B::El>>,
        m: &UniPoly<TowerEl<B::El>>,
    ) -> Res<UniPoly<TowerEl<B::El>>> {
        let mut r0 = m.clone();
        let mut r1 = a.div_rem_monic(view, m)?.1;
        let mut t0: UniPoly<TowerEl<B::El>> = UniPoly::zero();
        let mut t1 = UniPoly::constant(view, view.one());
        loop {
            if r1.is_zero() {
                return Err(Error::Domain("moduli are not coprime".into()));
            }
            let lc_inv = view.inv(r1.lc())?;
            r1 = r1.scale(view, &lc_inv)?;
            t1 = t1.scale(view, &lc_inv)?;
            if r1.deg() == 0 {
                let (_, t) = t1.div_rem_monic(view, m)?;
                return Ok(t);
            }
            let (q, r2) = r0.div_rem_monic(view, &r1)?;
            let t2 = t0.sub(view, &q.mul(view, &t1)?)?;
            r0 = std::mem::replace(&mut r1, r2);
            t0 = std::mem::replace(&mut t1, t2);
        }
    }

    /// Evaluate `p` at the generator of level `lev`; helper for the
    /// adjunction invariant (the modulus must vanish on its generator).
    pub fn eval_at_gen(&self, lev: usize, p: &UniPoly<TowerEl<B::El>>) -> Res<TowerEl<B::El>> {
        let g = self.gen(lev);
        let view = self.full();
        p.eval(&view, &g)
    }
}

impl<'a, B: Field> Ring for TowerView<'a, B> {
    type El = TowerEl<B::El>;

    fn zero(&self) -> Self::El {
        TowerEl::Base(self.tower.base.zero())
    }
    fn one(&self) -> Self::El {
        TowerEl::Base(self.tower.base.one())
    }
    fn from_int(&self, n: i64) -> Self::El {
        TowerEl::Base(self.tower.base.from_int(n))
    }
    fn is_zero(&self, a: &Self::El) -> bool {
        self.tower.is_zero_el(a)
    }
    fn neg(&self, a: &Self::El) -> Self::El {
        self.tower.neg_el(a)
    }
    fn add(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        debug_assert!(a.height() <= self.top && b.height() <= self.top);
        self.tower.add_el(a, b)
    }
    fn mul(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        debug_assert!(a.height() <= self.top && b.height() <= self.top);
        self.tower.mul_el(a, b)
    }
    fn exact_div(&self, a: &Self::El, b: &Self::El) -> Res<Self::El> {
        self.mul(a, &self.inv(b)?)
    }
}

impl<'a, B: Field> Field for TowerView<'a, B> {
    fn inv(&self, a: &Self::El) -> Res<Self::El> {
        match self.tower.try_inv(a)? {
            InvOutcome::Inverse(i) => Ok(i),
            InvOutcome::Split { level, .. } => Err(Error::ZeroDivisor { level }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::super::ring::QQ;
    use super::*;

    type QTower = Tower<QQ>;

    fn qpoly(t: &QTower, cs: &[i64]) -> UniPoly<TowerEl<crate::arith::Rat>> {
        UniPoly::new(
            &t.full(),
            cs.iter().map(|&c| TowerEl::Base(rat(c))).collect(),
        )
    }

    #[test]
    fn adjoin_and_reduce() {
        let t = QTower::new(QQ);
        // Z^2 + 1
        let m = qpoly(&t, &[1, 0, 1]);
        let t = t.adjoin_root("i", &m, LevelKind::NumberField).unwrap();
        let g = t.gen(0);
        let g2 = t.mul_el(&g, &g).unwrap();
        assert_eq!(g2, TowerEl::Base(rat(-1)));
        // generator substituted into its modulus gives zero
        let m = qpoly(&t, &[1, 0, 1]);
        assert!(t.is_zero_el(&t.eval_at_gen(0, &m).unwrap()));
    }

    #[test]
    fn two_level_tower_product_of_generators() {
        let t = QTower::new(QQ);
        let t = t
            .adjoin_root("s2", &qpoly(&t, &[-2, 0, 1]), LevelKind::NumberField)
            .unwrap();
        let t = t
            .adjoin_root("s3", &qpoly(&t, &[-3, 0, 1]), LevelKind::NumberField)
            .unwrap();
        let a = t.gen(0);
        let b = t.gen(1);
        let p = t.mul_el(&a, &b).unwrap();
        let p2 = t.mul_el(&p, &p).unwrap();
        assert_eq!(p2, TowerEl::Base(rat(6)));
        assert_eq!(t.dimension(), 4);
    }

    #[test]
    fn inversion_in_extension() {
        let t = QTower::new(QQ);
        let t = t
            .adjoin_root("s2", &qpoly(&t, &[-2, 0, 1]), LevelKind::NumberField)
            .unwrap();
        // 1/(1 + s2) = s2 - 1
        let one = t.from_base(rat(1));
        let u = t.add_el(&one, &t.gen(0)).unwrap();
        match t.try_inv(&u).unwrap() {
            InvOutcome::Inverse(i) => {
                let prod = t.mul_el(&u, &i).unwrap();
                assert_eq!(prod, TowerEl::Base(rat(1)));
            }
            _ => panic!("expected inverse"),
        }
    }

    #[test]
    fn zero_divisor_split_quadratic() {
        // tower QQ[g]/(g^2 - 1), witness g - 1 splits into (g-1), (g+1)
        let t = QTower::new(QQ);
        let t = t
            .adjoin_root("g", &qpoly(&t, &[-1, 0, 1]), LevelKind::NumberField)
            .unwrap();
        let w = t.sub_el(&t.gen(0), &t.from_base(rat(1))).unwrap();
        match t.zero_divisor_split(&w).unwrap() {
            SplitOutcome::Split {
                level,
                zero_branch,
                unit_branch,
            } => {
                assert_eq!(level, 0);
                // moduli are g - 1 and g + 1 (in some order)
                let mz = &zero_branch.levels[0].modulus;
                let mu = &unit_branch.levels[0].modulus;
                assert_eq!(mz.len(), 2);
                assert_eq!(mu.len(), 2);
                // witness reduces to zero in the zero branch
                let wz = zero_branch.migrate(&w).unwrap();
                assert!(zero_branch.is_zero_el(&wz));
                let wu = unit_branch.migrate(&w).unwrap();
                assert!(!unit_branch.is_zero_el(&wu));
            }
            _ => panic!("expected split"),
        }
    }

    #[test]
    fn zero_divisor_split_cubic() {
        // tower QQ[g]/(g^3 - g), witness g splits into (g), (g^2 - 1)
        let t = QTower::new(QQ);
        let t = t
            .adjoin_root("g", &qpoly(&t, &[0, -1, 0, 1]), LevelKind::NumberField)
            .unwrap();
        let w = t.gen(0);
        match t.zero_divisor_split(&w).unwrap() {
            SplitOutcome::Split {
                zero_branch,
                unit_branch,
                ..
            } => {
                assert_eq!(zero_branch.levels[0].degree(), 1);
                assert_eq!(unit_branch.levels[0].degree(), 2);
            }
            _ => panic!("expected split"),
        }
    }

    #[test]
    fn crt_merge_roundtrip() {
        let t = QTower::new(QQ);
        let t = t
            .adjoin_root("g", &qpoly(&t, &[-1, 0, 1]), LevelKind::NumberField)
            .unwrap();
        // element 3 + 2g
        let e = t
            .add_el(
                &t.from_base(rat(3)),
                &t.mul_el(&t.from_base(rat(2)), &t.gen(0)).unwrap(),
            )
            .unwrap();
        let w = t.sub_el(&t.gen(0), &t.from_base(rat(1))).unwrap();
        if let SplitOutcome::Split {
            level,
            zero_branch,
            unit_branch,
        } = t.zero_divisor_split(&w).unwrap()
        {
            let ra = zero_branch.migrate(&e).unwrap();
            let rb = unit_branch.migrate(&e).unwrap();
            let merged = t
                .crt_merge(level, &zero_branch, &ra, &unit_branch, &rb)
                .unwrap();
            assert_eq!(merged, e);
        } else {
            panic!("expected split");
        }
    }

    #[test]
    fn non_squarefree_rejected() {
        let t = QTower::new(QQ);
        // (Z - 1)^2 = Z^2 - 2Z + 1
        let m = qpoly(&t, &[1, -2, 1]);
        assert!(matches!(
            t.adjoin_root("g", &m, LevelKind::NumberField),
            Err(Error::NotSquarefree { .. })
        ));
    }
}
