//! Idealization of the Prüfer p-group over the p-local integers: the ring on
//! ℤ_(p) ⊕ ℤ(p^∞) with multiplication (r,x)·(s,y) = (rs, ry + sx).
//!
//! Prüfer elements are classes z_i = 1/p^{i+1} mod ℤ with p·z_0 = 0 and
//! p·z_{i+1} = z_i; every nonzero element of the ring is (u·p^n, v·z_i) with
//! u, v zero or units of ℤ_(p), which makes the essential-multiplier search
//! and the membership test in powers of the maximal ideal ⟨(p,0)⟩ exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealizationError {
    #[error("denominator must be nonzero and prime to p")]
    BadDenominator,
    #[error("the zero element has no essential multiplier")]
    ZeroElement,
}

/// A p-local rational a/b with p ∤ b, kept reduced with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLocal {
    pub p: u64,
    num: BigInt,
    den: BigInt,
}

impl PLocal {
    pub fn new(p: u64, num: BigInt, den: BigInt) -> Result<Self, IdealizationError> {
        if den.is_zero() || (&den % BigInt::from(p)).is_zero() {
            return Err(IdealizationError::BadDenominator);
        }
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_zero() {
            num /= &g;
            den /= &g;
        }
        Ok(PLocal { p, num, den })
    }

    pub fn from_i64(p: u64, num: i64, den: i64) -> Self {
        PLocal::new(p, BigInt::from(num), BigInt::from(den)).expect("denominator prime to p")
    }

    pub fn integer(p: u64, n: i64) -> Self {
        PLocal::from_i64(p, n, 1)
    }

    pub fn zero(p: u64) -> Self {
        PLocal::integer(p, 0)
    }

    pub fn one(p: u64) -> Self {
        PLocal::integer(p, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &PLocal) -> PLocal {
        PLocal::new(
            self.p,
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
        .unwrap()
    }

    pub fn neg(&self) -> PLocal {
        PLocal { p: self.p, num: -self.num.clone(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &PLocal) -> PLocal {
        PLocal::new(self.p, &self.num * &other.num, &self.den * &other.den).unwrap()
    }

    /// p-adic valuation; None for zero.
    pub fn valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bp = BigInt::from(self.p);
        let mut n = self.num.clone();
        let mut v = 0u32;
        loop {
            let (q, r) = n.div_rem(&bp);
            if r.is_zero() {
                n = q;
                v += 1;
            } else {
                return Some(v);
            }
        }
    }

    /// Splits a nonzero value as (unit, n) with self = unit·p^n.
    pub fn unit_and_power(&self) -> Option<(PLocal, u32)> {
        let v = self.valuation()?;
        let unit = PLocal::new(
            self.p,
            &self.num / BigInt::from(self.p).pow(v),
            self.den.clone(),
        )
        .unwrap();
        Some((unit, v))
    }

    /// Inverse of a unit (valuation zero); None otherwise.
    pub fn inverse(&self) -> Option<PLocal> {
        if self.valuation() == Some(0) {
            Some(PLocal::new(self.p, self.den.clone(), self.num.clone()).unwrap())
        } else {
            None
        }
    }
}

impl fmt::Display for PLocal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(modulus);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(modulus))
}

/// Element of the Prüfer p-group ℤ(p^∞) = ℤ[1/p]/ℤ: a reduced class
/// num/p^k with 0 ≤ num < p^k and p ∤ num (zero is 0/p^0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruferElement {
    pub p: u64,
    num: BigInt,
    k: u32,
}

impl PruferElement {
    pub fn zero(p: u64) -> Self {
        PruferElement { p, num: BigInt::zero(), k: 0 }
    }

    /// The class num/p^k mod ℤ, normalized.
    pub fn new(p: u64, num: BigInt, k: u32) -> Self {
        let bp = BigInt::from(p);
        let modulus = bp.pow(k);
        let mut num = num.mod_floor(&modulus);
        let mut k = k;
        while k > 0 && (&num % &bp).is_zero() {
            num /= &bp;
            k -= 1;
        }
        if num.is_zero() {
            k = 0;
        }
        PruferElement { p, num, k }
    }

    /// z_i = 1/p^{i+1}.
    pub fn generator(p: u64, i: u32) -> Self {
        PruferElement::new(p, BigInt::one(), i + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Order exponent: the least k with p^k·self = 0.
    pub fn order_exponent(&self) -> u32 {
        self.k
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn add(&self, other: &PruferElement) -> PruferElement {
        let k = self.k.max(other.k);
        let bp = BigInt::from(self.p);
        let a = &self.num * bp.pow(k - self.k);
        let b = &other.num * bp.pow(k - other.k);
        PruferElement::new(self.p, a + b, k)
    }

    pub fn neg(&self) -> PruferElement {
        PruferElement::new(self.p, -self.num.clone(), self.k)
    }

    /// Action of a p-local rational: (a/b)·(num/p^k) = a·num·b⁻¹ mod p^k.
    pub fn scale(&self, r: &PLocal) -> PruferElement {
        if self.is_zero() || r.is_zero() {
            return PruferElement::zero(self.p);
        }
        let modulus = BigInt::from(self.p).pow(self.k);
        let binv = mod_inverse(&r.den, &modulus).expect("denominator prime to p");
        PruferElement::new(self.p, &r.num * &self.num * binv, self.k)
    }
}

impl fmt::Display for PruferElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}^{}", self.num, self.p, self.k)
        }
    }
}

/// Ring context for the idealization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealizationRing {
    pub p: u64,
}

/// Element (r, x) of the idealization ℤ_(p) ⋉ ℤ(p^∞).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealizationElement {
    pub scalar: PLocal,
    pub torsion: PruferElement,
}

impl IdealizationRing {
    pub fn new(p: u64) -> Self {
        IdealizationRing { p }
    }

    pub fn element(&self, scalar: PLocal, torsion: PruferElement) -> IdealizationElement {
        IdealizationElement { scalar, torsion }
    }

    pub fn zero(&self) -> IdealizationElement {
        self.element(PLocal::zero(self.p), PruferElement::zero(self.p))
    }

    pub fn one(&self) -> IdealizationElement {
        self.element(PLocal::one(self.p), PruferElement::zero(self.p))
    }

    pub fn add(&self, a: &IdealizationElement, b: &IdealizationElement) -> IdealizationElement {
        self.element(a.scalar.add(&b.scalar), a.torsion.add(&b.torsion))
    }

    pub fn neg(&self, a: &IdealizationElement) -> IdealizationElement {
        self.element(a.scalar.neg(), a.torsion.neg())
    }

    /// (r,x)·(s,y) = (rs, ry + sx).
    pub fn mul(&self, a: &IdealizationElement, b: &IdealizationElement) -> IdealizationElement {
        self.element(
            a.scalar.mul(&b.scalar),
            b.torsion.scale(&a.scalar).add(&a.torsion.scale(&b.scalar)),
        )
    }

    pub fn pow(&self, a: &IdealizationElement, k: u32) -> IdealizationElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Membership in ⟨(p,0)⟩^n = p^n·ℤ_(p) ⊕ ℤ(p^∞).
    pub fn in_maximal_power(&self, a: &IdealizationElement, n: u32) -> bool {
        match a.scalar.valuation() {
            None => true,
            Some(v) => v >= n,
        }
    }

    /// For u ≠ 0, an m with u·m = (0, z_0) ≠ 0, exhibiting the essentiality
    /// of the principal ideal generated by (0, z_0).
    pub fn essential_multiplier(
        &self,
        u: &IdealizationElement,
    ) -> Result<IdealizationElement, IdealizationError> {
        if let Some((unit, n)) = u.scalar.unit_and_power() {
            // (u·p^n, x)·(0, u⁻¹·z_n) = (0, z_0)
            let z_n = PruferElement::generator(self.p, n);
            let inv = unit.inverse().expect("unit part is invertible");
            return Ok(self.element(PLocal::zero(self.p), z_n.scale(&inv)));
        }
        if u.torsion.is_zero() {
            return Err(IdealizationError::ZeroElement);
        }
        // (0, v/p^{i+1})·(p^i/v, 0) = (0, 1/p) = (0, z_0)
        let i = u.torsion.order_exponent() - 1;
        let v = u.torsion.numerator().clone();
        let scalar = PLocal::new(self.p, BigInt::from(self.p).pow(i), v)
            .expect("Prüfer numerator is prime to p");
        Ok(self.element(scalar, PruferElement::zero(self.p)))
    }

    pub fn z0(&self) -> IdealizationElement {
        self.element(PLocal::zero(self.p), PruferElement::generator(self.p, 0))
    }
}

impl fmt::Display for IdealizationElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.scalar, self.torsion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_relations() {
        let p = 3;
        // p·z_0 = 0 and p·z_{i+1} = z_i
        let z0 = PruferElement::generator(p, 0);
        assert!(z0.scale(&PLocal::integer(p, 3)).is_zero());
        for i in 0..5 {
            let zi1 = PruferElement::generator(p, i + 1);
            assert_eq!(zi1.scale(&PLocal::integer(p, 3)), PruferElement::generator(p, i));
        }
        // p^{i+1}·z_i = 0
        for i in 0..5 {
            let zi = PruferElement::generator(p, i);
            assert!(zi.scale(&PLocal::integer(p, 3i64.pow(i + 1))).is_zero());
            assert!(!zi.scale(&PLocal::integer(p, 3i64.pow(i))).is_zero());
        }
    }

    #[test]
    fn idealization_multiplication_rule() {
        // (2, 1/p)·(3, 0) = (6, 3/p)
        let p = 5;
        let u = IdealizationRing::new(p);
        let a = u.element(PLocal::integer(p, 2), PruferElement::new(p, BigInt::one(), 1));
        let b = u.element(PLocal::integer(p, 3), PruferElement::zero(p));
        let prod = u.mul(&a, &b);
        assert_eq!(prod.scalar, PLocal::integer(p, 6));
        assert_eq!(prod.torsion, PruferElement::new(p, BigInt::from(3), 1));
    }

    #[test]
    fn essential_multiplier_examples() {
        let p = 2;
        let u = IdealizationRing::new(p);
        let z0 = u.z0();

        // u = (p, 0) -> m = (0, 1/p^2)
        let a = u.element(PLocal::integer(p, 2), PruferElement::zero(p));
        let m = u.essential_multiplier(&a).unwrap();
        assert_eq!(m, u.element(PLocal::zero(p), PruferElement::new(p, BigInt::one(), 2)));
        assert_eq!(u.mul(&a, &m), z0);

        // u = (0, z_0) -> m = (1, 0)
        let m = u.essential_multiplier(&z0).unwrap();
        assert_eq!(m, u.one());
        assert_eq!(u.mul(&z0, &m), z0);

        // u = (0, z_i) -> m = (p^i, 0)
        for i in 0..6u32 {
            let zi = u.element(PLocal::zero(p), PruferElement::generator(p, i));
            let m = u.essential_multiplier(&zi).unwrap();
            assert_eq!(m, u.element(PLocal::integer(p, 2i64.pow(i)), PruferElement::zero(p)));
            assert_eq!(u.mul(&zi, &m), z0);
        }

        assert!(u.essential_multiplier(&u.zero()).is_err());
    }

    #[test]
    fn maximal_power_membership() {
        let p = 3;
        let u = IdealizationRing::new(p);
        // (0, x) lies in every power
        let t = u.element(PLocal::zero(p), PruferElement::generator(p, 4));
        for n in 0..20 {
            assert!(u.in_maximal_power(&t, n));
        }
        // (a, ·) with a != 0 drops out beyond its valuation
        let a = u.element(PLocal::integer(p, 18), PruferElement::zero(p)); // v_3(18) = 2
        assert!(u.in_maximal_power(&a, 2));
        assert!(!u.in_maximal_power(&a, 3));
        // q is not nilpotent: (p^n, 0) != 0
        for n in 1..=10 {
            let pn = u.pow(&u.element(PLocal::integer(p, 3), PruferElement::zero(p)), n);
            assert!(!pn.scalar.is_zero());
        }
    }
}
