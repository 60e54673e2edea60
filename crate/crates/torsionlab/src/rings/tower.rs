//! The tower ring: the subring ℤ + t·ℤ[1/p][t] of ℤ[1/p][t], generated by
//! the divided chain y_0 = t, y_1 = t/p, y_2 = t/p², … with p·y_{i+1} = y_i.
//!
//! Localizing at the prime ⟨p, y_0, y_1, …⟩ (the elements whose constant
//! term is divisible by p) gives a valuation ring with value group ℤ × ℤ
//! ordered lexicographically: a nonzero element has invariant
//! (t-order, p-valuation of the lowest coefficient), every element is a unit
//! times p^n·y_i^k, and divisibility is exactly the lexicographic comparison
//! of invariants.

use crate::scalar::{normalize_localized, Scalar, ScalarDomain};
use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("constant term must be an integer (p-valuation >= 0)")]
    ConstantNotIntegral,
    #[error("denominator must have constant term a nonzero integer prime to p")]
    BadDenominator,
    #[error("the zero element has no valuation")]
    ZeroElement,
}

/// Ring context fixing the prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TowerRing {
    pub p: u64,
}

/// Element of the tower ring: coefficients indexed by t-degree, each in
/// ℤ[1/p], with the constant term in ℤ and trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerPoly {
    coeffs: Vec<Scalar>,
}

impl TowerRing {
    pub fn new(p: u64) -> Self {
        TowerRing { p }
    }

    fn domain(&self) -> ScalarDomain {
        ScalarDomain::LocalizedInteger(self.p)
    }

    pub fn from_coeffs(&self, coeffs: Vec<Scalar>) -> Result<TowerPoly, TowerError> {
        let mut c = coeffs;
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if let Some(first) = c.first() {
            if let Some(v) = first.localized_valuation() {
                if v < 0 {
                    return Err(TowerError::ConstantNotIntegral);
                }
            }
        }
        Ok(TowerPoly { coeffs: c })
    }

    pub fn zero(&self) -> TowerPoly {
        TowerPoly { coeffs: vec![] }
    }

    pub fn one(&self) -> TowerPoly {
        self.constant(1)
    }

    pub fn constant(&self, n: i64) -> TowerPoly {
        self.from_coeffs(vec![self.domain().from_i64(n)]).unwrap()
    }

    /// p^k as a ring element.
    pub fn p_power(&self, k: u32) -> TowerPoly {
        self.from_coeffs(vec![normalize_localized(self.p, BigInt::from(1), k as i64)]).unwrap()
    }

    /// The i-th tower generator y_i = t/p^i.
    pub fn generator(&self, i: u32) -> TowerPoly {
        TowerPoly {
            coeffs: vec![
                self.domain().zero(),
                normalize_localized(self.p, BigInt::from(1), -(i as i64)),
            ],
        }
    }

    pub fn add(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.domain().zero();
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let x = a.coeffs.get(k).unwrap_or(&zero);
            let y = b.coeffs.get(k).unwrap_or(&zero);
            coeffs.push(x.add(y));
        }
        while coeffs.last().is_some_and(|x| x.is_zero()) {
            coeffs.pop();
        }
        TowerPoly { coeffs }
    }

    pub fn neg(&self, a: &TowerPoly) -> TowerPoly {
        TowerPoly { coeffs: a.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &TowerPoly, b: &TowerPoly) -> TowerPoly {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let n = a.coeffs.len() + b.coeffs.len() - 1;
        let mut coeffs = vec![self.domain().zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&x.mul(y));
            }
        }
        while coeffs.last().is_some_and(|x| x.is_zero()) {
            coeffs.pop();
        }
        TowerPoly { coeffs }
    }

    pub fn pow(&self, a: &TowerPoly, k: u32) -> TowerPoly {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// (t-order, p-valuation of lowest coefficient) of a nonzero element.
    pub fn valuation(&self, a: &TowerPoly) -> Result<LexValue, TowerError> {
        for (k, c) in a.coeffs.iter().enumerate() {
            if let Some(v) = c.localized_valuation() {
                return Ok(LexValue { t_order: k as u32, p_valuation: v });
            }
        }
        Err(TowerError::ZeroElement)
    }

    pub fn fraction(&self, num: TowerPoly, den: TowerPoly) -> Result<TowerFraction, TowerError> {
        match den.coeffs.first().and_then(|c| c.localized_valuation()) {
            Some(0) => Ok(TowerFraction { num, den }),
            _ => Err(TowerError::BadDenominator),
        }
    }

    pub fn from_element(&self, num: TowerPoly) -> TowerFraction {
        TowerFraction { num, den: self.one() }
    }

    pub fn frac_add(&self, a: &TowerFraction, b: &TowerFraction) -> TowerFraction {
        TowerFraction {
            num: self.add(&self.mul(&a.num, &b.den), &self.mul(&b.num, &a.den)),
            den: self.mul(&a.den, &b.den),
        }
    }

    pub fn frac_neg(&self, a: &TowerFraction) -> TowerFraction {
        TowerFraction { num: self.neg(&a.num), den: a.den.clone() }
    }

    pub fn frac_mul(&self, a: &TowerFraction, b: &TowerFraction) -> TowerFraction {
        TowerFraction {
            num: self.mul(&a.num, &b.num),
            den: self.mul(&a.den, &b.den),
        }
    }

    pub fn frac_eq(&self, a: &TowerFraction, b: &TowerFraction) -> bool {
        self.mul(&a.num, &b.den) == self.mul(&b.num, &a.den)
    }

    /// Valuation of a nonzero fraction; the denominator has invariant (0,0),
    /// so this is the numerator's invariant.
    pub fn frac_valuation(&self, a: &TowerFraction) -> Result<LexValue, TowerError> {
        let num = self.valuation(&a.num)?;
        let den = self.valuation(&a.den)?;
        Ok(LexValue {
            t_order: num.t_order - den.t_order,
            p_valuation: num.p_valuation - den.p_valuation,
        })
    }

    /// Divisibility in the localized tower ring: f | g iff val(f) ≤ val(g)
    /// lexicographically.
    pub fn frac_divides(&self, f: &TowerFraction, g: &TowerFraction) -> Result<bool, TowerError> {
        Ok(self.frac_valuation(f)? <= self.frac_valuation(g)?)
    }

    /// A monomial representative u⁻¹·f = p^n·y_i^k realizing a value, with
    /// i chosen minimally so that n ≥ 0.
    pub fn monomial_with_value(&self, value: &LexValue) -> TowerPoly {
        let k = value.t_order;
        let e = value.p_valuation;
        if k == 0 {
            assert!(e >= 0, "constant values need non-negative p-valuation");
            return self.p_power(e as u32);
        }
        let i: i64 = if e >= 0 { 0 } else { (-e + k as i64 - 1) / k as i64 };
        let n = e + i * k as i64;
        debug_assert!(n >= 0);
        let mut acc = self.p_power(n as u32);
        let y = self.generator(i as u32);
        for _ in 0..k {
            acc = self.mul(&acc, &y);
        }
        acc
    }
}

impl TowerPoly {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }
}

impl fmt::Display for TowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Fraction over the tower ring whose denominator is a unit of the
/// localization (constant term a nonzero integer prime to p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerFraction {
    pub num: TowerPoly,
    pub den: TowerPoly,
}

impl TowerFraction {
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for TowerFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// The divisibility invariant (t-order, p-valuation), ordered
/// lexicographically; derived Ord is exactly that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LexValue {
    pub t_order: u32,
    pub p_valuation: i64,
}

impl fmt::Display for LexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t_order, self.p_valuation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_relations_collapse() {
        let s = TowerRing::new(2);
        // p^{j-i}·y_j = y_i identically, i < j <= 10
        for i in 0..10u32 {
            for j in (i + 1)..=10 {
                let lhs = s.mul(&s.p_power(j - i), &s.generator(j));
                assert_eq!(lhs, s.generator(i), "p^{}*y_{j} != y_{i}", j - i);
            }
        }
    }

    #[test]
    fn constant_term_must_be_integral() {
        let s = TowerRing::new(2);
        let bad = s.from_coeffs(vec![Scalar::localized(2, 1, -1)]);
        assert_eq!(bad, Err(TowerError::ConstantNotIntegral));
    }

    #[test]
    fn valuations_of_named_elements() {
        let s = TowerRing::new(3);
        // p has value (0, 1)
        let p = s.from_element(s.p_power(1));
        assert_eq!(s.frac_valuation(&p).unwrap(), LexValue { t_order: 0, p_valuation: 1 });
        // y_i = t/p^i has value (1, -i)
        for i in 0..6u32 {
            let y = s.from_element(s.generator(i));
            assert_eq!(
                s.frac_valuation(&y).unwrap(),
                LexValue { t_order: 1, p_valuation: -(i as i64) }
            );
        }
        // p·y_0 = p·t has value (1, 1)
        let py0 = s.from_element(s.mul(&s.p_power(1), &s.generator(0)));
        assert_eq!(s.frac_valuation(&py0).unwrap(), LexValue { t_order: 1, p_valuation: 1 });
    }

    #[test]
    fn divisibility_is_lexicographic() {
        let s = TowerRing::new(2);
        let p = s.from_element(s.p_power(1));
        let y0 = s.from_element(s.generator(0));
        // p divides y_0 = t
        assert!(s.frac_divides(&p, &y0).unwrap());
        assert!(!s.frac_divides(&y0, &p).unwrap());
        // p·y_0 divides no power of p
        let py0 = s.from_element(s.mul(&s.p_power(1), &s.generator(0)));
        for n in 1..=12u32 {
            let pn = s.from_element(s.p_power(n));
            assert!(!s.frac_divides(&py0, &pn).unwrap());
            // while p^n always divides p·y_0
            assert!(s.frac_divides(&pn, &py0).unwrap());
        }
        // reflexivity
        assert!(s.frac_divides(&py0, &py0).unwrap());
    }

    #[test]
    fn monomial_representatives_match_values() {
        let s = TowerRing::new(2);
        for (k, e) in [(0u32, 3i64), (1, -4), (2, -3), (3, 5), (2, 0)] {
            let v = LexValue { t_order: k, p_valuation: e };
            let m = s.monomial_with_value(&v);
            assert_eq!(s.valuation(&m).unwrap(), v, "representative for {v}");
        }
    }

    #[test]
    fn fraction_arithmetic_is_consistent() {
        let s = TowerRing::new(2);
        // (y_1 / (1 + 2t)) * (1 + 2t) = y_1
        let den = s.add(&s.one(), &s.mul(&s.constant(2), &s.generator(0)));
        let f = s.fraction(s.generator(1), den.clone()).unwrap();
        let g = s.frac_mul(&f, &s.from_element(den));
        assert!(s.frac_eq(&g, &s.from_element(s.generator(1))));
    }
}
