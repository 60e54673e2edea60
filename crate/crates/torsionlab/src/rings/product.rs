//! Finite products of fields (e.g. ℚ×ℚ): the smallest absolutely flat test
//! rings, with componentwise arithmetic and idempotents given by 0/1 masks.

use crate::scalar::{Scalar, ScalarDomain};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductRing {
    pub scalar: ScalarDomain,
    pub arity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductElement {
    components: Vec<Scalar>,
}

impl ProductRing {
    pub fn new(scalar: ScalarDomain, arity: usize) -> Self {
        assert!(scalar.is_field());
        ProductRing { scalar, arity }
    }

    pub fn element(&self, components: Vec<Scalar>) -> ProductElement {
        assert_eq!(components.len(), self.arity);
        ProductElement { components }
    }

    pub fn from_i64(&self, vals: &[i64]) -> ProductElement {
        self.element(vals.iter().map(|&v| self.scalar.from_i64(v)).collect())
    }

    pub fn zero(&self) -> ProductElement {
        self.element(vec![self.scalar.zero(); self.arity])
    }

    pub fn one(&self) -> ProductElement {
        self.element(vec![self.scalar.one(); self.arity])
    }

    /// Idempotent with support at the given coordinates.
    pub fn idempotent(&self, support: &[usize]) -> ProductElement {
        let mut e = self.zero();
        for &i in support {
            e.components[i] = self.scalar.one();
        }
        e
    }

    pub fn add(&self, a: &ProductElement, b: &ProductElement) -> ProductElement {
        self.element(a.components.iter().zip(&b.components).map(|(x, y)| x.add(y)).collect())
    }

    pub fn neg(&self, a: &ProductElement) -> ProductElement {
        self.element(a.components.iter().map(|x| x.neg()).collect())
    }

    pub fn mul(&self, a: &ProductElement, b: &ProductElement) -> ProductElement {
        self.element(a.components.iter().zip(&b.components).map(|(x, y)| x.mul(y)).collect())
    }

    pub fn pow(&self, a: &ProductElement, k: u32) -> ProductElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Annihilator of an element: the complementary-support idempotent
    /// generates it.
    pub fn annihilator_idempotent(&self, a: &ProductElement) -> ProductElement {
        self.element(
            a.components
                .iter()
                .map(|x| if x.is_zero() { self.scalar.one() } else { self.scalar.zero() })
                .collect(),
        )
    }
}

impl ProductElement {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn components(&self) -> &[Scalar] {
        &self.components
    }

    pub fn is_idempotent_mask(&self) -> bool {
        self.components.iter().all(|c| c.is_zero() || c.is_one())
    }
}

impl fmt::Display for ProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotents_and_annihilators() {
        let r = ProductRing::new(ScalarDomain::Rational, 2);
        let e = r.idempotent(&[0]);
        assert_eq!(r.mul(&e, &e), e);
        let ann = r.annihilator_idempotent(&e);
        assert_eq!(ann, r.idempotent(&[1]));
        assert!(r.mul(&e, &ann).is_zero());
        assert_eq!(r.add(&e, &ann), r.one());
    }
}
