//! The monoid algebra K[Q] of the additive monoid Q of non-negative
//! rationals, with canonical basis {e_α | α ∈ Q} and e_α·e_β = e_{α+β}.
//!
//! Ideals of the localization of K[Q] at its maximal ideal ⟨e_α | α > 0⟩ are
//! completely described by a cut: the infimum α(c) of exponents occurring in
//! c together with the flag whether e_{α(c)} itself lies in c. All ideal
//! arithmetic for this family (powers, membership, idempotency, nilpotency
//! modulo a second cut) is exact rational arithmetic on cuts.

use crate::scalar::{Scalar, ScalarDomain};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Ring context: plain K[Q], or its quotient by the span of all e_γ with
/// γ > truncate_above (an exponent cut, used for the 0-dimensional model).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidAlgebraRing {
    pub scalar: ScalarDomain,
    pub truncate_above: Option<BigRational>,
}

impl MonoidAlgebraRing {
    pub fn plain(scalar: ScalarDomain) -> Self {
        MonoidAlgebraRing { scalar, truncate_above: None }
    }

    /// The quotient killing every e_γ with γ > 1.
    pub fn truncated_at_one(scalar: ScalarDomain) -> Self {
        MonoidAlgebraRing {
            scalar,
            truncate_above: Some(BigRational::from_integer(BigInt::from(1))),
        }
    }

    fn exponent_is_zero(&self, alpha: &BigRational) -> bool {
        match &self.truncate_above {
            Some(cut) => alpha > cut,
            None => false,
        }
    }

    pub fn zero(&self) -> MonoidAlgElement {
        MonoidAlgElement { terms: BTreeMap::new() }
    }

    pub fn one(&self) -> MonoidAlgElement {
        self.basis(BigRational::zero())
    }

    /// The basis element e_α, α ≥ 0.
    pub fn basis(&self, alpha: BigRational) -> MonoidAlgElement {
        assert!(alpha >= BigRational::zero(), "exponents must be non-negative");
        self.from_terms(vec![(alpha, self.scalar.one())])
    }

    pub fn from_terms(&self, terms: Vec<(BigRational, Scalar)>) -> MonoidAlgElement {
        let mut map: BTreeMap<BigRational, Scalar> = BTreeMap::new();
        for (alpha, c) in terms {
            assert!(alpha >= BigRational::zero());
            if c.is_zero() || self.exponent_is_zero(&alpha) {
                continue;
            }
            let entry = map.entry(alpha).or_insert_with(|| self.scalar.zero());
            *entry = entry.add(&c);
        }
        map.retain(|_, c| !c.is_zero());
        MonoidAlgElement { terms: map }
    }

    pub fn add(&self, a: &MonoidAlgElement, b: &MonoidAlgElement) -> MonoidAlgElement {
        let mut terms: Vec<_> = a.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.extend(b.terms.iter().map(|(e, c)| (e.clone(), c.clone())));
        self.from_terms(terms)
    }

    pub fn neg(&self, a: &MonoidAlgElement) -> MonoidAlgElement {
        MonoidAlgElement {
            terms: a.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, a: &MonoidAlgElement, b: &MonoidAlgElement) -> MonoidAlgElement {
        let mut terms = Vec::new();
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                terms.push((e1 + e2, c1.mul(c2)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, a: &MonoidAlgElement, k: u32) -> MonoidAlgElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

/// Normal-form element of K[Q] (or its exponent-truncated quotient):
/// finitely many terms c·e_α with distinct non-negative rational α.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonoidAlgElement {
    terms: BTreeMap<BigRational, Scalar>,
}

impl MonoidAlgElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &Scalar)> {
        self.terms.iter()
    }

    /// The order α(x): the least exponent occurring in x. In the localization
    /// at the maximal ideal every nonzero x equals unit·e_{α(x)}.
    pub fn alpha(&self) -> Option<BigRational> {
        self.terms.keys().next().cloned()
    }
}

impl fmt::Display for MonoidAlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "e[{e}]")?;
            } else {
                write!(f, "{c}*e[{e}]")?;
            }
        }
        Ok(())
    }
}

/// An ideal of the localized monoid algebra, described by its exponent cut.
/// `attained` means e_alpha itself belongs to the ideal (equivalently, the
/// ideal is ⟨e_alpha⟩, of finite type); otherwise the ideal is
/// {x | α(x) > alpha}, which is not of finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutIdeal {
    pub alpha: BigRational,
    pub attained: bool,
}

impl CutIdeal {
    /// The maximal ideal ⟨e_α | α > 0⟩.
    pub fn maximal() -> Self {
        CutIdeal { alpha: BigRational::zero(), attained: false }
    }

    /// The open cut ⟨e_α | α > threshold⟩.
    pub fn open(threshold: BigRational) -> Self {
        CutIdeal { alpha: threshold, attained: false }
    }

    /// The principal ideal ⟨e_alpha⟩.
    pub fn principal(alpha: BigRational) -> Self {
        CutIdeal { alpha, attained: true }
    }

    /// Cut of the ideal generated by finitely many nonzero elements:
    /// the minimum of their orders, always attained.
    pub fn from_generators(gens: &[MonoidAlgElement]) -> Option<Self> {
        let alphas: Vec<BigRational> = gens.iter().filter_map(|g| g.alpha()).collect();
        if alphas.is_empty() {
            return None;
        }
        let alpha = alphas.into_iter().min().unwrap();
        Some(CutIdeal { alpha, attained: true })
    }

    pub fn is_of_finite_type(&self) -> bool {
        self.attained
    }

    pub fn contains_exponent(&self, beta: &BigRational) -> bool {
        if self.attained {
            beta >= &self.alpha
        } else {
            beta > &self.alpha
        }
    }

    pub fn contains_element(&self, x: &MonoidAlgElement) -> bool {
        match x.alpha() {
            Some(a) => self.contains_exponent(&a),
            None => true,
        }
    }

    pub fn contains_ideal(&self, other: &CutIdeal) -> bool {
        if other.attained {
            self.contains_exponent(&other.alpha)
        } else {
            // every exponent strictly above other.alpha must satisfy our cut
            self.alpha <= other.alpha
        }
    }

    /// α(cⁿ) = n·α(c), with the attainment flag preserved.
    pub fn power(&self, n: u32) -> CutIdeal {
        CutIdeal {
            alpha: &self.alpha * BigRational::from_integer(BigInt::from(n)),
            attained: self.attained,
        }
    }

    /// Idempotency as an ideal of the localized monoid algebra: the cut must
    /// be invariant under doubling.
    pub fn is_idempotent(&self) -> bool {
        self.power(2) == *self
    }

    /// Least n with cⁿ contained in the span of {e_γ | γ > modulus}, i.e.
    /// the nilpotency index in the quotient by that open cut.
    pub fn nilpotency_index_mod_open_cut(&self, modulus: &BigRational, bound: u32) -> Option<u32> {
        for n in 1..=bound {
            let cn = self.power(n);
            let inside = if cn.attained {
                &cn.alpha > modulus
            } else {
                &cn.alpha >= modulus
            };
            if inside {
                return Some(n);
            }
        }
        None
    }
}

impl fmt::Display for CutIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.attained {
            write!(f, "<e[{}]>", self.alpha)
        } else {
            write!(f, "{{e[a] : a > {}}}", self.alpha)
        }
    }
}
