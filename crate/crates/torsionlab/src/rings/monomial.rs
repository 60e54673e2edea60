//! Monomials with finite support over an indexed variable set, and the
//! monomial-annihilation rewrite systems used by the quotient-ring families.
//!
//! A rewrite system is a set of monomial-to-zero rules; since every rule
//! kills a monomial outright, rewriting is confluent and the normal form of
//! a polynomial is obtained by dropping all killed monomials.

use std::collections::BTreeMap;
use std::fmt;

/// Finite-support exponent vector: variable index → positive exponent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<u32, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: u32) -> Self {
        Monomial::single(i, 1)
    }

    pub fn single(i: u32, e: u32) -> Self {
        let mut m = Monomial::default();
        if e > 0 {
            m.exponents.insert(i, e);
        }
        m
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut m = Monomial::default();
        for &(i, e) in pairs {
            if e > 0 {
                *m.exponents.entry(i).or_insert(0) += e;
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponent_of(&self, i: u32) -> u32 {
        self.exponents.get(&i).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exponents.keys().copied()
    }

    pub fn num_distinct_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exponents.iter().map(|(&i, &e)| (i, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (i, e) in other.iter() {
            *m.exponents.entry(i).or_insert(0) += e;
        }
        m
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut m = Monomial::one();
        for (i, e) in self.iter() {
            if e * k > 0 {
                m.exponents.insert(i, e * k);
            }
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.iter().all(|(i, e)| other.exponent_of(i) >= e)
    }

    /// other / self, if self divides other.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = Monomial::default();
        for (i, e) in other.iter() {
            let d = e - self.exponent_of(i);
            if d > 0 {
                m.exponents.insert(i, d);
            }
        }
        Some(m)
    }

    /// Multidegree as a dense vector over variables 0..nvars.
    pub fn multidegree(&self, nvars: usize) -> Vec<i32> {
        let mut d = vec![0i32; nvars];
        for (i, e) in self.iter() {
            d[i as usize] = e as i32;
        }
        d
    }

    pub fn display<'a>(&'a self, names: &'a dyn Fn(u32) -> String) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a dyn Fn(u32) -> String,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.m.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", (self.names)(i))?;
            } else {
                write!(f, "{}^{}", (self.names)(i), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |i: u32| format!("x{i}");
        write!(f, "{}", self.display(&names))
    }
}

/// Schematic monomial-annihilation rules. Each variant describes the full
/// (possibly infinite) family of killed monomials; a monomial dies exactly
/// when one of the patterns divides it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RewriteSystem {
    /// x_i x_j → 0 for all i, j (including squares): the radical square is zero.
    AllProductsZero,
    /// x_i x_j → 0 for i ≠ j and x_i^{i+1} → 0: one variable survives per
    /// monomial, with exponent at most its own index.
    DistinctProductsAndRisingPowers,
    /// Variable 0 is x; variables i ≥ 1 are y_i. Rules x^i y_i → 0 and
    /// y_i y_j → 0 (all pairs, squares included).
    SlidingAnnihilator,
    /// Explicit finite list of monomial patterns.
    Patterns(Vec<Monomial>),
}

impl RewriteSystem {
    /// Does the system map this monomial to zero?
    pub fn kills(&self, m: &Monomial) -> bool {
        match self {
            RewriteSystem::AllProductsZero => m.total_degree() >= 2,
            RewriteSystem::DistinctProductsAndRisingPowers => {
                if m.num_distinct_vars() >= 2 {
                    return true;
                }
                match m.iter().next() {
                    Some((i, e)) => e > i,
                    None => false,
                }
            }
            RewriteSystem::SlidingAnnihilator => {
                let ys: Vec<(u32, u32)> = m.iter().filter(|&(i, _)| i >= 1).collect();
                if ys.len() >= 2 {
                    return true;
                }
                if let Some(&(i, e)) = ys.first() {
                    if e >= 2 {
                        return true;
                    }
                    if m.exponent_of(0) >= i {
                        return true;
                    }
                }
                false
            }
            RewriteSystem::Patterns(pats) => pats.iter().any(|p| p.divides(m)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_arithmetic() {
        let m = Monomial::from_pairs(&[(0, 2), (1, 1)]);
        let n = Monomial::var(1);
        assert_eq!(m.mul(&n), Monomial::from_pairs(&[(0, 2), (1, 2)]));
        assert!(n.divides(&m));
        assert!(!m.divides(&n));
        assert_eq!(n.divide(&m).unwrap(), Monomial::from_pairs(&[(0, 2)]));
        assert_eq!(m.total_degree(), 3);
        assert_eq!(m.multidegree(3), vec![2, 1, 0]);
    }

    #[test]
    fn rising_power_rules() {
        let sys = RewriteSystem::DistinctProductsAndRisingPowers;
        // x0 dies outright (exponent 1 >= 0+1)
        assert!(sys.kills(&Monomial::var(0)));
        // x_i^i survives, x_i^{i+1} dies
        for i in 1..=12u32 {
            assert!(!sys.kills(&Monomial::single(i, i)));
            assert!(sys.kills(&Monomial::single(i, i + 1)));
        }
        // cross products die
        assert!(sys.kills(&Monomial::from_pairs(&[(1, 1), (2, 1)])));
        assert!(!sys.kills(&Monomial::one()));
    }

    #[test]
    fn sliding_annihilator_rules() {
        let sys = RewriteSystem::SlidingAnnihilator;
        // pure x powers survive
        assert!(!sys.kills(&Monomial::single(0, 9)));
        // x^a y_i dies iff a >= i
        assert!(!sys.kills(&Monomial::from_pairs(&[(0, 2), (3, 1)])));
        assert!(sys.kills(&Monomial::from_pairs(&[(0, 3), (3, 1)])));
        // y squares and pairs die
        assert!(sys.kills(&Monomial::single(2, 2)));
        assert!(sys.kills(&Monomial::from_pairs(&[(1, 1), (2, 1)])));
    }

    #[test]
    fn all_products_zero() {
        let sys = RewriteSystem::AllProductsZero;
        assert!(!sys.kills(&Monomial::var(7)));
        assert!(sys.kills(&Monomial::single(7, 2)));
        assert!(sys.kills(&Monomial::from_pairs(&[(1, 1), (4, 1)])));
    }
}
