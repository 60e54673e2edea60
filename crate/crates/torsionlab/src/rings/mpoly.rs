//! Polynomial elements over a monomial-basis ring: either a free polynomial
//! algebra or its quotient by a monomial-annihilation rewrite system.
//!
//! Normal forms are canonical — a polynomial is stored with no killed
//! monomials and no zero coefficients, so two elements are mathematically
//! equal exactly when they are structurally equal.

use crate::rings::monomial::{Monomial, RewriteSystem};
use crate::scalar::{Scalar, ScalarDomain};
use std::collections::BTreeMap;
use std::fmt;

/// The variables of a monomial ring: a finite named list, or a schematic
/// indexed family truncated at a declared bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarSet {
    Named(Vec<String>),
    /// Variables prefix_0, …, prefix_bound. A stand-in for a countable family;
    /// every assertion about such a ring is quantified over indices ≤ bound.
    Indexed { prefix: String, bound: u32 },
    /// One distinguished head variable followed by an indexed family
    /// tail_1, …, tail_bound (variable 0 is the head).
    HeadIndexed { head: String, tail: String, bound: u32 },
}

impl VarSet {
    pub fn count(&self) -> usize {
        match self {
            VarSet::Named(v) => v.len(),
            VarSet::Indexed { bound, .. } | VarSet::HeadIndexed { bound, .. } => *bound as usize + 1,
        }
    }

    pub fn name(&self, i: u32) -> String {
        match self {
            VarSet::Named(v) => v
                .get(i as usize)
                .cloned()
                .unwrap_or_else(|| format!("v{i}")),
            VarSet::Indexed { prefix, .. } => format!("{prefix}{i}"),
            VarSet::HeadIndexed { head, tail, .. } => {
                if i == 0 {
                    head.clone()
                } else {
                    format!("{tail}{i}")
                }
            }
        }
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        match self {
            VarSet::Named(v) => v.iter().position(|n| n == name).map(|i| i as u32),
            VarSet::Indexed { prefix, bound } => {
                let rest = name.strip_prefix(prefix.as_str())?;
                let i: u32 = rest.parse().ok()?;
                (i <= *bound).then_some(i)
            }
            VarSet::HeadIndexed { head, tail, bound } => {
                if name == head {
                    return Some(0);
                }
                let rest = name.strip_prefix(tail.as_str())?;
                let i: u32 = rest.parse().ok()?;
                (1..=*bound).contains(&i).then_some(i)
            }
        }
    }
}

/// Ring context for polynomial-like families. `rewrite = None` is a free
/// polynomial algebra; otherwise the quotient by the rewrite system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialRing {
    pub scalar: ScalarDomain,
    pub vars: VarSet,
    pub rewrite: Option<RewriteSystem>,
}

impl MonomialRing {
    pub fn polynomial(scalar: ScalarDomain, names: &[&str]) -> Self {
        MonomialRing {
            scalar,
            vars: VarSet::Named(names.iter().map(|s| s.to_string()).collect()),
            rewrite: None,
        }
    }

    /// The quotient with relations Y_iY_j = 0 (i ≠ j) and Y_i^{i+1} = 0,
    /// truncated at variable index `bound`.
    pub fn rising_powers_quotient(scalar: ScalarDomain, bound: u32) -> Self {
        MonomialRing {
            scalar,
            vars: VarSet::Indexed { prefix: "Y".into(), bound },
            rewrite: Some(RewriteSystem::DistinctProductsAndRisingPowers),
        }
    }

    /// K[x, y_1..y_bound] with x^i y_i = 0 and y_i y_j = 0.
    pub fn sliding_annihilator_quotient(scalar: ScalarDomain, bound: u32) -> Self {
        MonomialRing {
            scalar,
            vars: VarSet::HeadIndexed { head: "x".into(), tail: "y".into(), bound },
            rewrite: Some(RewriteSystem::SlidingAnnihilator),
        }
    }

    /// K[X_i]/(X_iX_j): square-zero radical, truncated at `bound`.
    pub fn square_zero_quotient(scalar: ScalarDomain, bound: u32) -> Self {
        MonomialRing {
            scalar,
            vars: VarSet::Indexed { prefix: "X".into(), bound },
            rewrite: Some(RewriteSystem::AllProductsZero),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.vars.count()
    }

    pub fn monomial_is_zero(&self, m: &Monomial) -> bool {
        match &self.rewrite {
            Some(sys) => sys.kills(m),
            None => false,
        }
    }

    pub fn zero(&self) -> PolyElement {
        PolyElement { terms: BTreeMap::new() }
    }

    pub fn one(&self) -> PolyElement {
        self.from_monomial(Monomial::one())
    }

    pub fn var(&self, i: u32) -> PolyElement {
        self.from_monomial(Monomial::var(i))
    }

    pub fn from_monomial(&self, m: Monomial) -> PolyElement {
        self.from_terms(vec![(m, self.scalar.one())])
    }

    pub fn from_terms(&self, terms: Vec<(Monomial, Scalar)>) -> PolyElement {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(c.domain(), self.scalar);
            if self.monomial_is_zero(&m) || c.is_zero() {
                continue;
            }
            let entry = map.entry(m).or_insert_with(|| self.scalar.zero());
            *entry = entry.add(&c);
        }
        map.retain(|_, c| !c.is_zero());
        PolyElement { terms: map }
    }

    pub fn add(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        let mut terms: Vec<(Monomial, Scalar)> = a.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.extend(b.terms().map(|(m, c)| (m.clone(), c.clone())));
        self.from_terms(terms)
    }

    pub fn neg(&self, a: &PolyElement) -> PolyElement {
        PolyElement {
            terms: a.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        let mut terms = Vec::new();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let m = m1.mul(m2);
                if self.monomial_is_zero(&m) {
                    continue;
                }
                terms.push((m, c1.mul(c2)));
            }
        }
        self.from_terms(terms)
    }

    pub fn scalar_mul(&self, c: &Scalar, a: &PolyElement) -> PolyElement {
        self.from_terms(a.terms().map(|(m, k)| (m.clone(), k.mul(c))).collect())
    }

    pub fn mul_monomial(&self, a: &PolyElement, m: &Monomial) -> PolyElement {
        self.mul(a, &self.from_monomial(m.clone()))
    }

    pub fn pow(&self, a: &PolyElement, k: u32) -> PolyElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Normal-form monomials of the given total degree with variable indices
    /// in the ring's variable set.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let nvars = self.num_vars() as u32;
        let mut stack: Vec<(Monomial, u32, u32)> = vec![(Monomial::one(), 0, degree)];
        while let Some((m, next_var, remaining)) = stack.pop() {
            if remaining == 0 {
                if !self.monomial_is_zero(&m) {
                    out.push(m);
                }
                continue;
            }
            if next_var >= nvars {
                continue;
            }
            for e in (0..=remaining).rev() {
                let mut mm = m.clone();
                if e > 0 {
                    mm = mm.mul(&Monomial::single(next_var, e));
                    if self.monomial_is_zero(&mm) {
                        continue;
                    }
                }
                stack.push((mm, next_var + 1, remaining - e));
            }
        }
        out.sort();
        out
    }

    pub fn display<'a>(&'a self, e: &'a PolyElement) -> PolyDisplay<'a> {
        PolyDisplay { ring: self, e }
    }

    /// Parses "x^2*y", "Y3^2", "1" against this ring's variable names.
    pub fn parse_monomial(&self, s: &str) -> Option<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Some(Monomial::one());
        }
        let mut m = Monomial::one();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<u32>().ok()?),
                None => (factor, 1),
            };
            let idx = self.vars.index_of(name)?;
            m = m.mul(&Monomial::single(idx, exp));
        }
        Some(m)
    }
}

/// A normal-form element of a [`MonomialRing`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl PolyElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// The unique monomial of a single-term element.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }
}

pub struct PolyDisplay<'a> {
    ring: &'a MonomialRing,
    e: &'a PolyElement,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return write!(f, "0");
        }
        let names = |i: u32| self.ring.vars.name(i);
        let mut first = true;
        for (m, c) in self.e.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", m.display(&names))?;
            } else {
                write!(f, "{}*{}", c, m.display(&names))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_relations_hold() {
        let r = MonomialRing::rising_powers_quotient(ScalarDomain::Rational, 12);
        // Y_1 * Y_2 = 0
        let p = r.mul(&r.var(1), &r.var(2));
        assert!(p.is_zero());
        // Y_i^i != 0, Y_i^{i+1} = 0
        for i in 1..=12 {
            assert!(!r.pow(&r.var(i), i).is_zero(), "Y_{i}^{i} should survive");
            assert!(r.pow(&r.var(i), i + 1).is_zero(), "Y_{i}^{}(={i}+1) should die", i + 1);
        }
        // Y_0 = 0 outright
        assert!(r.var(0).is_zero());
    }

    #[test]
    fn polynomial_distributes() {
        let r = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
        let x = r.var(0);
        let y = r.var(1);
        let s = r.add(&x, &y);
        let lhs = r.mul(&s, &s);
        let x2 = r.pow(&x, 2);
        let y2 = r.pow(&y, 2);
        let xy2 = r.scalar_mul(&Scalar::rational(2, 1), &r.mul(&x, &y));
        let rhs = r.add(&r.add(&x2, &xy2), &y2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_enumeration_respects_rewrite() {
        let r = MonomialRing::rising_powers_quotient(ScalarDomain::Rational, 4);
        // degree 2 normal forms: Y_2^2, Y_3^2, Y_4^2
        let ms = r.monomials_of_degree(2);
        assert_eq!(ms.len(), 3);
        for m in &ms {
            assert_eq!(m.num_distinct_vars(), 1);
        }
        let poly = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
        assert_eq!(poly.monomials_of_degree(3).len(), 4);
    }

    #[test]
    fn parse_round_trip() {
        let r = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
        let m = r.parse_monomial("x^2*y").unwrap();
        assert_eq!(m, Monomial::from_pairs(&[(0, 2), (1, 1)]));
        let r2 = MonomialRing::rising_powers_quotient(ScalarDomain::Rational, 5);
        assert_eq!(r2.parse_monomial("Y3^2").unwrap(), Monomial::single(3, 2));
        assert!(r.parse_monomial("z").is_none());
    }
}
