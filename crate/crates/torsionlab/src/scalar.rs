//! Exact scalar arithmetic for the four coefficient domains used by the
//! linear-algebra kernel: arbitrary-precision rationals, prime fields,
//! integers, and the subring ℤ[1/p] of rationals with p-power denominator.
//!
//! No floating point anywhere; every value is a canonical normal form, so
//! mathematical equality is structural equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("scalar domains do not match: {0} vs {1}")]
    DomainMismatch(ScalarDomain, ScalarDomain),
    #[error("domain {0} is not a field")]
    DomainNotAField(ScalarDomain),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Tag for the coefficient domain of a matrix or ring family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    Rational,
    PrimeField(u64),
    Integer,
    /// ℤ[1/p]: values mantissa·p^exponent with p ∤ mantissa.
    LocalizedInteger(u64),
}

impl ScalarDomain {
    pub fn is_field(self) -> bool {
        matches!(self, ScalarDomain::Rational | ScalarDomain::PrimeField(_))
    }

    pub fn zero(self) -> Scalar {
        match self {
            ScalarDomain::Rational => Scalar::Rational(BigRational::zero()),
            ScalarDomain::PrimeField(p) => Scalar::Fp { p, value: 0 },
            ScalarDomain::Integer => Scalar::Integer(BigInt::zero()),
            ScalarDomain::LocalizedInteger(p) => Scalar::Localized {
                p,
                mantissa: BigInt::zero(),
                exponent: 0,
            },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            ScalarDomain::Rational => Scalar::Rational(BigRational::one()),
            ScalarDomain::PrimeField(p) => Scalar::Fp { p, value: 1 % p },
            ScalarDomain::Integer => Scalar::Integer(BigInt::one()),
            ScalarDomain::LocalizedInteger(p) => Scalar::Localized {
                p,
                mantissa: BigInt::one(),
                exponent: 0,
            },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            ScalarDomain::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            ScalarDomain::PrimeField(p) => {
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, value: v }
            }
            ScalarDomain::Integer => Scalar::Integer(BigInt::from(n)),
            ScalarDomain::LocalizedInteger(p) => normalize_localized(p, BigInt::from(n), 0),
        }
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Rational => write!(f, "QQ"),
            ScalarDomain::PrimeField(p) => write!(f, "F{p}"),
            ScalarDomain::Integer => write!(f, "ZZ"),
            ScalarDomain::LocalizedInteger(p) => write!(f, "ZZ[1/{p}]"),
        }
    }
}

/// One exact scalar, tagged with its domain. Values are kept in canonical
/// form: rationals reduced with positive denominator, prime-field values in
/// [0, p), localized integers with p ∤ mantissa (and exponent 0 for zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Fp { p: u64, value: u64 },
    Integer(BigInt),
    Localized { p: u64, mantissa: BigInt, exponent: i64 },
}

/// Strips all factors of p out of `mantissa`, folding them into the exponent.
pub fn normalize_localized(p: u64, mut mantissa: BigInt, mut exponent: i64) -> Scalar {
    if mantissa.is_zero() {
        return Scalar::Localized { p, mantissa, exponent: 0 };
    }
    let bp = BigInt::from(p);
    loop {
        let (q, r) = mantissa.div_rem(&bp);
        if r.is_zero() {
            mantissa = q;
            exponent += 1;
        } else {
            break;
        }
    }
    Scalar::Localized { p, mantissa, exponent }
}

fn fp_add(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn fp_mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow(p: u64, mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = fp_mul(p, acc, base);
        }
        base = fp_mul(p, base, base);
        exp >>= 1;
    }
    acc
}

fn fp_inv(p: u64, a: u64) -> Result<u64, ScalarError> {
    if a.is_multiple_of(p) {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(fp_pow(p, a, p - 2))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rational(_) => ScalarDomain::Rational,
            Scalar::Fp { p, .. } => ScalarDomain::PrimeField(*p),
            Scalar::Integer(_) => ScalarDomain::Integer,
            Scalar::Localized { p, .. } => ScalarDomain::LocalizedInteger(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
            Scalar::Integer(n) => n.is_zero(),
            Scalar::Localized { mantissa, .. } => mantissa.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.domain().one()
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.domain() != other.domain() {
            return Err(ScalarError::DomainMismatch(self.domain(), other.domain()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other).expect("scalar domain mismatch in add");
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => {
                Scalar::Fp { p: *p, value: fp_add(*p, *a, *b) }
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (
                Scalar::Localized { p, mantissa: m1, exponent: e1 },
                Scalar::Localized { mantissa: m2, exponent: e2, .. },
            ) => {
                if m1.is_zero() {
                    return other.clone();
                }
                if m2.is_zero() {
                    return self.clone();
                }
                let bp = BigInt::from(*p);
                let e = (*e1).min(*e2);
                let a = m1 * bp.pow((*e1 - e) as u32);
                let b = m2 * bp.pow((*e2 - e) as u32);
                normalize_localized(*p, a + b, e)
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Fp { p, value } => Scalar::Fp { p: *p, value: (*p - *value) % *p },
            Scalar::Integer(a) => Scalar::Integer(-a),
            Scalar::Localized { p, mantissa, exponent } => Scalar::Localized {
                p: *p,
                mantissa: -mantissa,
                exponent: *exponent,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other).expect("scalar domain mismatch in mul");
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => {
                Scalar::Fp { p: *p, value: fp_mul(*p, *a, *b) }
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (
                Scalar::Localized { p, mantissa: m1, exponent: e1 },
                Scalar::Localized { mantissa: m2, exponent: e2, .. },
            ) => {
                if m1.is_zero() || m2.is_zero() {
                    return ScalarDomain::LocalizedInteger(*p).zero();
                }
                Scalar::Localized { p: *p, mantissa: m1 * m2, exponent: e1 + e2 }
            }
            _ => unreachable!(),
        }
    }

    /// Field division; errors on non-field domains or zero divisor.
    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a / b)),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => {
                Ok(Scalar::Fp { p: *p, value: fp_mul(*p, *a, fp_inv(*p, *b)?) })
            }
            _ => Err(ScalarError::DomainNotAField(self.domain())),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.domain().one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// p-adic valuation of a localized integer (None for zero).
    pub fn localized_valuation(&self) -> Option<i64> {
        match self {
            Scalar::Localized { mantissa, exponent, .. } if !mantissa.is_zero() => Some(*exponent),
            _ => None,
        }
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(n: i64) -> Scalar {
        Scalar::Integer(BigInt::from(n))
    }

    pub fn fp(p: u64, v: i64) -> Scalar {
        ScalarDomain::PrimeField(p).from_i64(v)
    }

    pub fn localized(p: u64, mantissa: i64, exponent: i64) -> Scalar {
        normalize_localized(p, BigInt::from(mantissa), exponent)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
            Scalar::Integer(n) => write!(f, "{n}"),
            Scalar::Localized { p, mantissa, exponent } => {
                if *exponent == 0 {
                    write!(f, "{mantissa}")
                } else {
                    write!(f, "{mantissa}*{p}^{exponent}")
                }
            }
        }
    }
}
