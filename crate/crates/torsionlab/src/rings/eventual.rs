//! Eventually periodic sequences over a field: a decidable subring of the
//! full countable power K^ℕ. It contains every witness the sequence-ring
//! counterexamples need — the idempotent that vanishes only at index 0, the
//! finite-support ideal, and zero-divisor pairs with infinite support —
//! while staying finitely describable with a canonical (prefix, period) form.

use crate::scalar::{Scalar, ScalarDomain};
use std::fmt;

/// A sequence that is periodic from `prefix.len()` onward. Canonical form:
/// the period is primitive and the prefix is as short as possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventualSeq {
    prefix: Vec<Scalar>,
    period: Vec<Scalar>,
}

/// Ring context (fixes the scalar field).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EventualSeqRing {
    pub scalar: ScalarDomain,
}

impl EventualSeqRing {
    pub fn new(scalar: ScalarDomain) -> Self {
        EventualSeqRing { scalar }
    }

    pub fn from_parts(&self, prefix: Vec<Scalar>, period: Vec<Scalar>) -> EventualSeq {
        assert!(!period.is_empty(), "period must be nonempty");
        let mut e = EventualSeq { prefix, period };
        self.normalize(&mut e);
        e
    }

    /// Constant sequence.
    pub fn constant(&self, c: Scalar) -> EventualSeq {
        self.from_parts(vec![], vec![c])
    }

    pub fn zero(&self) -> EventualSeq {
        self.constant(self.scalar.zero())
    }

    pub fn one(&self) -> EventualSeq {
        self.constant(self.scalar.one())
    }

    /// The idempotent vanishing exactly at index 0.
    pub fn unit_off_zero(&self) -> EventualSeq {
        self.from_parts(vec![self.scalar.zero()], vec![self.scalar.one()])
    }

    fn normalize(&self, e: &mut EventualSeq) {
        // primitive period
        let n = e.period.len();
        for d in 1..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            let block = &e.period[..d];
            if e.period.chunks(d).all(|c| c == block) {
                e.period.truncate(d);
                break;
            }
        }
        // absorb prefix tail into the period by rotating
        while let Some(last) = e.prefix.last() {
            if last == e.period.last().unwrap() {
                e.prefix.pop();
                let l = e.period.pop().unwrap();
                e.period.insert(0, l);
            } else {
                break;
            }
        }
    }

    fn pointwise(
        &self,
        a: &EventualSeq,
        b: &EventualSeq,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> EventualSeq {
        let prefix_len = a.prefix.len().max(b.prefix.len());
        let period_len = lcm(a.period.len(), b.period.len());
        let prefix = (0..prefix_len).map(|n| f(a.at(n), b.at(n))).collect();
        let period = (prefix_len..prefix_len + period_len)
            .map(|n| f(a.at(n), b.at(n)))
            .collect();
        self.from_parts(prefix, period)
    }

    pub fn add(&self, a: &EventualSeq, b: &EventualSeq) -> EventualSeq {
        self.pointwise(a, b, |x, y| x.add(y))
    }

    pub fn mul(&self, a: &EventualSeq, b: &EventualSeq) -> EventualSeq {
        self.pointwise(a, b, |x, y| x.mul(y))
    }

    pub fn neg(&self, a: &EventualSeq) -> EventualSeq {
        self.from_parts(
            a.prefix.iter().map(|x| x.neg()).collect(),
            a.period.iter().map(|x| x.neg()).collect(),
        )
    }

    pub fn sub(&self, a: &EventualSeq, b: &EventualSeq) -> EventualSeq {
        self.pointwise(a, b, |x, y| x.sub(y))
    }

    pub fn pow(&self, a: &EventualSeq, k: u32) -> EventualSeq {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl EventualSeq {
    pub fn at(&self, n: usize) -> &Scalar {
        if n < self.prefix.len() {
            &self.prefix[n]
        } else {
            &self.period[(n - self.prefix.len()) % self.period.len()]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.prefix.is_empty() && self.period.len() == 1 && self.period[0].is_zero()
    }

    /// Membership in the ideal of finite-support sequences: the periodic part
    /// must vanish identically.
    pub fn has_finite_support(&self) -> bool {
        self.period.iter().all(|c| c.is_zero())
    }

    pub fn support_size(&self) -> Option<usize> {
        if !self.has_finite_support() {
            return None;
        }
        Some(self.prefix.iter().filter(|c| !c.is_zero()).count())
    }

    /// Zeroes the entry at index 0, keeping the rest.
    pub fn zeroed_at_origin(&self, ring: &EventualSeqRing) -> EventualSeq {
        let mut prefix: Vec<Scalar> = vec![ring.scalar.zero()];
        let keep = self.prefix.len().max(1);
        for n in 1..keep {
            prefix.push(self.at(n).clone());
        }
        let shift = keep.saturating_sub(self.prefix.len());
        let mut period = self.period.clone();
        let rot = shift % period.len();
        period.rotate_left(rot);
        ring.from_parts(prefix, period)
    }

    pub fn prefix(&self) -> &[Scalar] {
        &self.prefix
    }

    pub fn period(&self) -> &[Scalar] {
        &self.period
    }
}

impl fmt::Display for EventualSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.prefix {
            write!(f, "{c}, ")?;
        }
        write!(f, "[")?;
        for (i, c) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]*)")
    }
}
