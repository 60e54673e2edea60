//! Ideal handles: a finite generator list plus optional family-specific
//! closure data for the ideals that are not of finite type.
//!
//! The closure carries exactly enough structure to keep membership and
//! power computations decidable: an exponent cut in the monoid algebra, a
//! variable schema ⟨x_i^k | i ≥ k⟩ in indexed monomial quotients, the
//! finite-support predicate for sequence rings, and principal-power data for
//! the idealization and the localized tower ring.

use crate::rings::monoid_algebra::CutIdeal;
use crate::rings::monomial::Monomial;
use crate::rings::tower::LexValue;
use crate::rings::{RingDescriptor, RingElement, RingError};
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq)]
pub enum IdealClosure {
    /// Ideal of the localized monoid algebra described by its α-cut.
    AlphaCut(CutIdeal),
    /// ⟨x_i^power | i ≥ power⟩ in an indexed monomial family: the power-th
    /// power of the schematic maximal ideal ⟨x_i | i⟩.
    VariableSchemaPower { power: u32 },
    /// The ideal of finite-support sequences.
    FiniteSupport,
    /// ⟨(p,0)⟩^power in the idealization.
    MaximalPower { power: u32 },
    /// ⟨p⟩^power in the localized tower ring.
    PPower { power: u32 },
}

/// Finitely generated ideal, or a schematically closed one.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealHandle {
    pub ring: RingDescriptor,
    pub generators: Vec<RingElement>,
    pub closure: Option<IdealClosure>,
}

impl IdealHandle {
    pub fn finite(ring: RingDescriptor, generators: Vec<RingElement>) -> Result<Self, RingError> {
        for g in &generators {
            if ring.is_zero(g) {
                return Err(RingError::BadElement("zero generator".into()));
            }
        }
        Ok(IdealHandle { ring, generators, closure: None })
    }

    pub fn schematic(ring: RingDescriptor, closure: IdealClosure) -> Self {
        IdealHandle { ring, generators: vec![], closure: Some(closure) }
    }

    /// n-th power: closures scale their defining data; finite generator
    /// lists are replaced by all n-fold products, deduplicated in normal
    /// form with vanishing products dropped.
    pub fn power(&self, n: u32) -> Result<IdealHandle, RingError> {
        if n == 1 {
            return Ok(self.clone());
        }
        if let Some(closure) = &self.closure {
            let scaled = match closure {
                IdealClosure::AlphaCut(c) => IdealClosure::AlphaCut(c.power(n)),
                IdealClosure::VariableSchemaPower { power } => {
                    IdealClosure::VariableSchemaPower { power: power * n }
                }
                IdealClosure::FiniteSupport => {
                    // idempotent: the ideal is generated by idempotents
                    IdealClosure::FiniteSupport
                }
                IdealClosure::MaximalPower { power } => IdealClosure::MaximalPower { power: power * n },
                IdealClosure::PPower { power } => IdealClosure::PPower { power: power * n },
            };
            return Ok(IdealHandle::schematic(self.ring.clone(), scaled));
        }
        let mut products: Vec<RingElement> = Vec::new();
        let mut stack: Vec<(RingElement, usize, u32)> = vec![(self.ring.one(), 0, n)];
        while let Some((acc, start, remaining)) = stack.pop() {
            if remaining == 0 {
                if !self.ring.is_zero(&acc) && !products.iter().any(|p| p == &acc) {
                    products.push(acc);
                }
                continue;
            }
            for i in start..self.generators.len() {
                let next = self.ring.mul(&acc, &self.generators[i])?;
                if self.ring.is_zero(&next) {
                    continue;
                }
                stack.push((next, i, remaining - 1));
            }
        }
        Ok(IdealHandle {
            ring: self.ring.clone(),
            generators: products,
            closure: None,
        })
    }

    /// The α-invariant (inf of exponents, with attainment flag) of an ideal
    /// in the localized monoid algebra.
    pub fn alpha_invariant(&self) -> Result<(BigRational, bool), RingError> {
        let RingDescriptor::MonoidAlgebra(_) = &self.ring else {
            return Err(RingError::UnsupportedFamily(self.ring.family()));
        };
        if let Some(IdealClosure::AlphaCut(cut)) = &self.closure {
            return Ok((cut.alpha.clone(), cut.attained));
        }
        let mut elems = Vec::new();
        for g in &self.generators {
            let RingElement::MonoidAlg(x) = g else {
                return Err(RingError::RingMismatch);
            };
            if x.is_zero() {
                return Err(RingError::GeneratorNotNormalizable("zero generator".into()));
            }
            elems.push(x.clone());
        }
        match CutIdeal::from_generators(&elems) {
            Some(cut) => Ok((cut.alpha, cut.attained)),
            None => Err(RingError::GeneratorNotNormalizable("empty generator list".into())),
        }
    }

    pub fn as_cut(&self) -> Option<CutIdeal> {
        match (&self.closure, self.alpha_invariant()) {
            (Some(IdealClosure::AlphaCut(c)), _) => Some(c.clone()),
            (None, Ok((alpha, attained))) => Some(CutIdeal { alpha, attained }),
            _ => None,
        }
    }

    /// Generator monomials of a monomial ideal (finite list or the variable
    /// schema instantiated up to the ring's variable bound).
    pub fn monomial_generators(&self) -> Result<Vec<Monomial>, RingError> {
        let RingDescriptor::Monomial(ring) = &self.ring else {
            return Err(RingError::UnsupportedFamily(self.ring.family()));
        };
        match &self.closure {
            Some(IdealClosure::VariableSchemaPower { power }) => {
                let mut out = Vec::new();
                for i in 0..ring.num_vars() as u32 {
                    let m = Monomial::single(i, *power);
                    if !ring.monomial_is_zero(&m) {
                        out.push(m);
                    }
                }
                Ok(out)
            }
            Some(_) => Err(RingError::UnsupportedFamily(self.ring.family())),
            None => {
                let mut out = Vec::new();
                for g in &self.generators {
                    let RingElement::Poly(x) = g else {
                        return Err(RingError::RingMismatch);
                    };
                    match x.as_monomial() {
                        Some(m) if x.num_terms() == 1 => out.push(m.clone()),
                        _ => {
                            return Err(RingError::BadElement(
                                "monomial ideal requires single-monomial generators".into(),
                            ))
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// Decidable membership tests, dispatched per family/closure.
    pub fn contains(&self, x: &RingElement) -> Result<bool, RingError> {
        if self.ring.is_zero(x) {
            return Ok(true);
        }
        match (&self.ring, &self.closure, x) {
            (RingDescriptor::MonoidAlgebra(_), Some(IdealClosure::AlphaCut(cut)), RingElement::MonoidAlg(e)) => {
                Ok(cut.contains_element(e))
            }
            (RingDescriptor::MonoidAlgebra(_), None, RingElement::MonoidAlg(e)) => {
                let (alpha, attained) = self.alpha_invariant()?;
                Ok(CutIdeal { alpha, attained }.contains_element(e))
            }
            (RingDescriptor::Monomial(_), _, RingElement::Poly(e)) => {
                let gens = self.monomial_generators()?;
                Ok(e.monomials().all(|m| gens.iter().any(|g| g.divides(m))))
            }
            (RingDescriptor::Idealization(r), Some(IdealClosure::MaximalPower { power }), RingElement::Idealization(e)) => {
                Ok(r.in_maximal_power(e, *power))
            }
            (RingDescriptor::TowerLocalized(r), Some(IdealClosure::PPower { power }), RingElement::TowerFraction(e)) => {
                if e.is_zero() {
                    return Ok(true);
                }
                let v = r.frac_valuation(e)?;
                Ok(v >= LexValue { t_order: 0, p_valuation: *power as i64 })
            }
            (RingDescriptor::EventualSequences(_), Some(IdealClosure::FiniteSupport), RingElement::Eventual(e)) => {
                Ok(e.has_finite_support())
            }
            _ => Err(RingError::UnsupportedFamily(self.ring.family())),
        }
    }

    pub fn describe(&self) -> String {
        match &self.closure {
            Some(IdealClosure::AlphaCut(c)) => format!("{c}"),
            Some(IdealClosure::VariableSchemaPower { power }) => {
                format!("<x_i^{power} : i >= {power}>")
            }
            Some(IdealClosure::FiniteSupport) => "finite-support ideal".into(),
            Some(IdealClosure::MaximalPower { power }) => format!("<(p,0)>^{power}"),
            Some(IdealClosure::PPower { power }) => format!("<p>^{power}"),
            None => {
                let gens: Vec<String> = self
                    .generators
                    .iter()
                    .map(|g| self.ring.display_element(g))
                    .collect();
                format!("<{}>", gens.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::monoid_algebra::{ratio, MonoidAlgebraRing};
    use crate::rings::mpoly::MonomialRing;
    use crate::scalar::ScalarDomain;

    #[test]
    fn alpha_invariant_of_generated_ideal() {
        let ring = MonoidAlgebraRing::plain(ScalarDomain::Rational);
        let handle = IdealHandle::finite(
            RingDescriptor::MonoidAlgebra(ring.clone()),
            vec![
                RingElement::MonoidAlg(ring.basis(ratio(1, 3))),
                RingElement::MonoidAlg(ring.basis(ratio(1, 2))),
            ],
        )
        .unwrap();
        assert_eq!(handle.alpha_invariant().unwrap(), (ratio(1, 3), true));
    }

    #[test]
    fn alpha_cut_ideals() {
        let ring = RingDescriptor::MonoidAlgebra(MonoidAlgebraRing::plain(ScalarDomain::Rational));
        let maximal = IdealHandle::schematic(ring.clone(), IdealClosure::AlphaCut(CutIdeal::maximal()));
        assert_eq!(maximal.alpha_invariant().unwrap(), (ratio(0, 1), false));
        let above_one = IdealHandle::schematic(ring, IdealClosure::AlphaCut(CutIdeal::open(ratio(1, 1))));
        assert_eq!(above_one.alpha_invariant().unwrap(), (ratio(1, 1), false));
    }

    #[test]
    fn power_scales_cuts_and_products() {
        let ring = MonoidAlgebraRing::plain(ScalarDomain::Rational);
        let rd = RingDescriptor::MonoidAlgebra(ring.clone());
        let principal = IdealHandle::finite(rd.clone(), vec![RingElement::MonoidAlg(ring.basis(ratio(1, 2)))]).unwrap();
        let sq = principal.power(2).unwrap();
        assert_eq!(sq.generators.len(), 1);
        assert_eq!(sq.alpha_invariant().unwrap(), (ratio(1, 1), true));
        assert_eq!(principal.power(1).unwrap(), principal);
    }

    #[test]
    fn schema_power_in_rising_quotient() {
        let ring = MonomialRing::rising_powers_quotient(ScalarDomain::Rational, 6);
        let rd = RingDescriptor::Monomial(ring.clone());
        let m = IdealHandle::schematic(rd, IdealClosure::VariableSchemaPower { power: 1 });
        let m2 = m.power(2).unwrap();
        // generators of m^2 are Y_i^2 for i >= 2 (Y_1^2 = 0 drops out)
        let gens = m2.monomial_generators().unwrap();
        assert_eq!(gens.len(), 5); // i = 2..=6
        for g in &gens {
            assert_eq!(g.total_degree(), 2);
        }
        // Y_1 is in m but not in m^2
        let y1 = RingElement::Poly(ring.var(1));
        assert!(m.contains(&y1).unwrap());
        assert!(!m2.contains(&y1).unwrap());
    }

    #[test]
    fn finite_monomial_ideal_membership() {
        let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
        let rd = RingDescriptor::Monomial(ring.clone());
        let ideal = IdealHandle::finite(
            rd,
            vec![RingElement::Poly(ring.from_monomial(ring.parse_monomial("x^2").unwrap()))],
        )
        .unwrap();
        let x2y = RingElement::Poly(ring.from_monomial(ring.parse_monomial("x^2*y").unwrap()));
        let xy = RingElement::Poly(ring.from_monomial(ring.parse_monomial("x*y").unwrap()));
        assert!(ideal.contains(&x2y).unwrap());
        assert!(!ideal.contains(&xy).unwrap());
    }
}
