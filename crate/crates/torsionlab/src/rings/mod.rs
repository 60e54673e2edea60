//! Family-tagged normal-form arithmetic for the corpus rings.
//!
//! Each family lives in its own submodule with a concrete element type and a
//! small ring-context struct; [`RingDescriptor`] and [`RingElement`] tie them
//! together behind one dispatching surface with ring-mismatch checking, which
//! is what the ideal layer, the serialization format and the CLI consume.

pub mod eventual;
pub mod ideal;
pub mod idealization;
pub mod monoid_algebra;
pub mod monomial;
pub mod mpoly;
pub mod product;
pub mod serial;
pub mod tensor_square;
pub mod tower;

use crate::scalar::ScalarDomain;
use eventual::{EventualSeq, EventualSeqRing};
use idealization::{IdealizationElement, IdealizationRing};
use monoid_algebra::{MonoidAlgElement, MonoidAlgebraRing};
use mpoly::{MonomialRing, PolyElement};
use product::{ProductElement, ProductRing};
use tensor_square::{TensorLevelElement, TensorSquareRing};
use thiserror::Error;
use tower::{TowerFraction, TowerPoly, TowerRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("element does not belong to this ring family")]
    RingMismatch,
    #[error("operation not supported for family {0}")]
    UnsupportedFamily(&'static str),
    #[error(transparent)]
    Tower(#[from] tower::TowerError),
    #[error(transparent)]
    Idealization(#[from] idealization::IdealizationError),
    #[error(transparent)]
    Tensor(#[from] tensor_square::TensorError),
    #[error("generator cannot be normalized to unit·e_α: {0}")]
    GeneratorNotNormalizable(String),
    #[error("malformed descriptor: {0}")]
    BadDescriptor(String),
    #[error("malformed element literal: {0}")]
    BadElement(String),
}

/// Everything needed to do arithmetic in one ring of the corpus.
#[derive(Debug, Clone, PartialEq)]
pub enum RingDescriptor {
    /// Free polynomial algebra or monomial quotient, depending on the
    /// rewrite system of the underlying [`MonomialRing`].
    Monomial(MonomialRing),
    MonoidAlgebra(MonoidAlgebraRing),
    /// The tower ring ℤ + t·ℤ[1/p][t].
    Tower(TowerRing),
    /// Fractions of the tower ring with unit denominators (localization at
    /// the prime of elements with constant term divisible by p).
    TowerLocalized(TowerRing),
    Idealization(IdealizationRing),
    TensorSquare(TensorSquareRing),
    EventualSequences(EventualSeqRing),
    ProductOfFields(ProductRing),
}

/// A normal-form element of one of the corpus families.
#[derive(Debug, Clone, PartialEq)]
pub enum RingElement {
    Poly(PolyElement),
    MonoidAlg(MonoidAlgElement),
    Tower(TowerPoly),
    TowerFraction(TowerFraction),
    Idealization(IdealizationElement),
    TensorLevel(TensorLevelElement),
    Eventual(EventualSeq),
    Product(ProductElement),
}

impl RingDescriptor {
    pub fn family(&self) -> &'static str {
        match self {
            RingDescriptor::Monomial(r) => {
                if r.rewrite.is_none() {
                    "polynomial"
                } else {
                    "monomial-quotient"
                }
            }
            RingDescriptor::MonoidAlgebra(_) => "monoid-algebra",
            RingDescriptor::Tower(_) => "ST",
            RingDescriptor::TowerLocalized(_) => "Sn-localized",
            RingDescriptor::Idealization(_) => "idealization",
            RingDescriptor::TensorSquare(_) => "tensor-level",
            RingDescriptor::EventualSequences(_) => "eventual-sequence",
            RingDescriptor::ProductOfFields(_) => "finite-product",
        }
    }

    pub fn scalar_domain(&self) -> ScalarDomain {
        match self {
            RingDescriptor::Monomial(r) => r.scalar,
            RingDescriptor::MonoidAlgebra(r) => r.scalar,
            RingDescriptor::Tower(r) | RingDescriptor::TowerLocalized(r) => {
                ScalarDomain::LocalizedInteger(r.p)
            }
            RingDescriptor::Idealization(r) => ScalarDomain::LocalizedInteger(r.p),
            RingDescriptor::TensorSquare(r) => ScalarDomain::PrimeField(r.p),
            RingDescriptor::EventualSequences(r) => r.scalar,
            RingDescriptor::ProductOfFields(r) => r.scalar,
        }
    }

    pub fn zero(&self) -> RingElement {
        match self {
            RingDescriptor::Monomial(r) => RingElement::Poly(r.zero()),
            RingDescriptor::MonoidAlgebra(r) => RingElement::MonoidAlg(r.zero()),
            RingDescriptor::Tower(r) => RingElement::Tower(r.zero()),
            RingDescriptor::TowerLocalized(r) => RingElement::TowerFraction(r.from_element(r.zero())),
            RingDescriptor::Idealization(r) => RingElement::Idealization(r.zero()),
            RingDescriptor::TensorSquare(r) => RingElement::TensorLevel(r.zero()),
            RingDescriptor::EventualSequences(r) => RingElement::Eventual(r.zero()),
            RingDescriptor::ProductOfFields(r) => RingElement::Product(r.zero()),
        }
    }

    pub fn one(&self) -> RingElement {
        match self {
            RingDescriptor::Monomial(r) => RingElement::Poly(r.one()),
            RingDescriptor::MonoidAlgebra(r) => RingElement::MonoidAlg(r.one()),
            RingDescriptor::Tower(r) => RingElement::Tower(r.one()),
            RingDescriptor::TowerLocalized(r) => RingElement::TowerFraction(r.from_element(r.one())),
            RingDescriptor::Idealization(r) => RingElement::Idealization(r.one()),
            RingDescriptor::TensorSquare(r) => RingElement::TensorLevel(r.one()),
            RingDescriptor::EventualSequences(r) => RingElement::Eventual(r.one()),
            RingDescriptor::ProductOfFields(r) => RingElement::Product(r.one()),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
        match (self, a, b) {
            (RingDescriptor::Monomial(r), RingElement::Poly(x), RingElement::Poly(y)) => {
                Ok(RingElement::Poly(r.add(x, y)))
            }
            (RingDescriptor::MonoidAlgebra(r), RingElement::MonoidAlg(x), RingElement::MonoidAlg(y)) => {
                Ok(RingElement::MonoidAlg(r.add(x, y)))
            }
            (RingDescriptor::Tower(r), RingElement::Tower(x), RingElement::Tower(y)) => {
                Ok(RingElement::Tower(r.add(x, y)))
            }
            (
                RingDescriptor::TowerLocalized(r),
                RingElement::TowerFraction(x),
                RingElement::TowerFraction(y),
            ) => Ok(RingElement::TowerFraction(r.frac_add(x, y))),
            (
                RingDescriptor::Idealization(r),
                RingElement::Idealization(x),
                RingElement::Idealization(y),
            ) => Ok(RingElement::Idealization(r.add(x, y))),
            (RingDescriptor::TensorSquare(r), RingElement::TensorLevel(x), RingElement::TensorLevel(y)) => {
                Ok(RingElement::TensorLevel(r.add(x, y)))
            }
            (RingDescriptor::EventualSequences(r), RingElement::Eventual(x), RingElement::Eventual(y)) => {
                Ok(RingElement::Eventual(r.add(x, y)))
            }
            (RingDescriptor::ProductOfFields(r), RingElement::Product(x), RingElement::Product(y)) => {
                Ok(RingElement::Product(r.add(x, y)))
            }
            _ => Err(RingError::RingMismatch),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
        match (self, a, b) {
            (RingDescriptor::Monomial(r), RingElement::Poly(x), RingElement::Poly(y)) => {
                Ok(RingElement::Poly(r.mul(x, y)))
            }
            (RingDescriptor::MonoidAlgebra(r), RingElement::MonoidAlg(x), RingElement::MonoidAlg(y)) => {
                Ok(RingElement::MonoidAlg(r.mul(x, y)))
            }
            (RingDescriptor::Tower(r), RingElement::Tower(x), RingElement::Tower(y)) => {
                Ok(RingElement::Tower(r.mul(x, y)))
            }
            (
                RingDescriptor::TowerLocalized(r),
                RingElement::TowerFraction(x),
                RingElement::TowerFraction(y),
            ) => Ok(RingElement::TowerFraction(r.frac_mul(x, y))),
            (
                RingDescriptor::Idealization(r),
                RingElement::Idealization(x),
                RingElement::Idealization(y),
            ) => Ok(RingElement::Idealization(r.mul(x, y))),
            (RingDescriptor::TensorSquare(r), RingElement::TensorLevel(x), RingElement::TensorLevel(y)) => {
                Ok(RingElement::TensorLevel(r.mul(x, y)))
            }
            (RingDescriptor::EventualSequences(r), RingElement::Eventual(x), RingElement::Eventual(y)) => {
                Ok(RingElement::Eventual(r.mul(x, y)))
            }
            (RingDescriptor::ProductOfFields(r), RingElement::Product(x), RingElement::Product(y)) => {
                Ok(RingElement::Product(r.mul(x, y)))
            }
            _ => Err(RingError::RingMismatch),
        }
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement, RingError> {
        match (self, a) {
            (RingDescriptor::Monomial(r), RingElement::Poly(x)) => Ok(RingElement::Poly(r.neg(x))),
            (RingDescriptor::MonoidAlgebra(r), RingElement::MonoidAlg(x)) => {
                Ok(RingElement::MonoidAlg(r.neg(x)))
            }
            (RingDescriptor::Tower(r), RingElement::Tower(x)) => Ok(RingElement::Tower(r.neg(x))),
            (RingDescriptor::TowerLocalized(r), RingElement::TowerFraction(x)) => {
                Ok(RingElement::TowerFraction(r.frac_neg(x)))
            }
            (RingDescriptor::Idealization(r), RingElement::Idealization(x)) => {
                Ok(RingElement::Idealization(r.neg(x)))
            }
            (RingDescriptor::TensorSquare(r), RingElement::TensorLevel(x)) => {
                Ok(RingElement::TensorLevel(r.neg(x)))
            }
            (RingDescriptor::EventualSequences(r), RingElement::Eventual(x)) => {
                Ok(RingElement::Eventual(r.neg(x)))
            }
            (RingDescriptor::ProductOfFields(r), RingElement::Product(x)) => {
                Ok(RingElement::Product(r.neg(x)))
            }
            _ => Err(RingError::RingMismatch),
        }
    }

    pub fn pow(&self, a: &RingElement, k: u32) -> Result<RingElement, RingError> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Poly(x) => x.is_zero(),
            RingElement::MonoidAlg(x) => x.is_zero(),
            RingElement::Tower(x) => x.is_zero(),
            RingElement::TowerFraction(x) => x.is_zero(),
            RingElement::Idealization(x) => x.scalar.is_zero() && x.torsion.is_zero(),
            RingElement::TensorLevel(x) => x.is_zero(),
            RingElement::Eventual(x) => x.is_zero(),
            RingElement::Product(x) => x.is_zero(),
        }
    }

    /// Equality test; families with non-unique representations (tower
    /// fractions) compare by cross-multiplication.
    pub fn eq(&self, a: &RingElement, b: &RingElement) -> Result<bool, RingError> {
        match (self, a, b) {
            (
                RingDescriptor::TowerLocalized(r),
                RingElement::TowerFraction(x),
                RingElement::TowerFraction(y),
            ) => Ok(r.frac_eq(x, y)),
            _ => {
                let diff = self.add(a, &self.neg(b)?)?;
                Ok(self.is_zero(&diff))
            }
        }
    }

    pub fn display_element(&self, a: &RingElement) -> String {
        match (self, a) {
            (RingDescriptor::Monomial(r), RingElement::Poly(x)) => r.display(x).to_string(),
            (_, RingElement::MonoidAlg(x)) => x.to_string(),
            (_, RingElement::Tower(x)) => x.to_string(),
            (_, RingElement::TowerFraction(x)) => x.to_string(),
            (_, RingElement::Idealization(x)) => x.to_string(),
            (_, RingElement::TensorLevel(x)) => {
                format!("<tensor-level element, {} nonzero entries>", x.nonzero_entries())
            }
            (_, RingElement::Eventual(x)) => x.to_string(),
            (_, RingElement::Product(x)) => x.to_string(),
            _ => format!("{a:?}"),
        }
    }
}
