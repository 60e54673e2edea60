//! Commutative-ring laws across the normal-form families, and the
//! rank/nullity law of the elimination kernel. Canonical normal forms make
//! each law a structural equality, so any drift in a normalization routine
//! shows up here immediately.

use proptest::prelude::*;
use torsionlab::linalg::ExactMatrix;
use torsionlab::rings::eventual::{EventualSeq, EventualSeqRing};
use torsionlab::rings::idealization::{IdealizationElement, IdealizationRing, PLocal, PruferElement};
use torsionlab::rings::monoid_algebra::{MonoidAlgElement, MonoidAlgebraRing};
use torsionlab::rings::monomial::Monomial;
use torsionlab::rings::mpoly::{MonomialRing, PolyElement};
use torsionlab::rings::tower::{TowerPoly, TowerRing};
use torsionlab::scalar::{Scalar, ScalarDomain};

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Scalar::rational(n, d))
}

fn poly_ring() -> MonomialRing {
    MonomialRing::rising_powers_quotient(ScalarDomain::Rational, 6)
}

fn poly_element() -> impl Strategy<Value = PolyElement> {
    prop::collection::vec(((0u32..=6, 1u32..=3), rational()), 0..4).prop_map(|terms| {
        let ring = poly_ring();
        ring.from_terms(
            terms
                .into_iter()
                .map(|((var, exp), c)| (Monomial::single(var, exp), c))
                .collect(),
        )
    })
}

fn monoid_element() -> impl Strategy<Value = MonoidAlgElement> {
    prop::collection::vec(((0i64..=9, 1i64..=9), rational()), 0..4).prop_map(|terms| {
        let ring = MonoidAlgebraRing::plain(ScalarDomain::Rational);
        ring.from_terms(
            terms
                .into_iter()
                .map(|((n, d), c)| {
                    (
                        num_rational::BigRational::new(n.into(), d.into()),
                        c,
                    )
                })
                .collect(),
        )
    })
}

fn tower_element() -> impl Strategy<Value = TowerPoly> {
    prop::collection::vec((-9i64..=9, -3i64..=3), 0..4).prop_map(|coeffs| {
        let ring = TowerRing::new(2);
        let scalars: Vec<Scalar> = coeffs
            .iter()
            .enumerate()
            .map(|(k, &(m, e))| Scalar::localized(2, m, if k == 0 { e.abs() } else { e }))
            .collect();
        ring.from_coeffs(scalars).unwrap()
    })
}

fn eventual_element() -> impl Strategy<Value = EventualSeq> {
    (
        prop::collection::vec(-3i64..=3, 0..3),
        prop::collection::vec(-3i64..=3, 1..4),
    )
        .prop_map(|(prefix, period)| {
            let ring = EventualSeqRing::new(ScalarDomain::Rational);
            ring.from_parts(
                prefix.into_iter().map(|c| Scalar::rational(c, 1)).collect(),
                period.into_iter().map(|c| Scalar::rational(c, 1)).collect(),
            )
        })
}

fn idealization_element() -> impl Strategy<Value = IdealizationElement> {
    (-9i64..=9, 0i64..=8, 0u32..=3).prop_map(|(num, tnum, k)| {
        let p = 3;
        IdealizationElement {
            scalar: PLocal::from_i64(p, num, 1),
            torsion: PruferElement::new(p, tnum.into(), k),
        }
    })
}

macro_rules! ring_laws {
    ($name:ident, $strategy:expr, $ring:expr, add = $add:expr, mul = $mul:expr, neg = $neg:expr, zero = $zero:expr) => {
        mod $name {
            use super::*;
            proptest! {
                #![proptest_config(ProptestConfig::with_cases(1000))]
                #[test]
                fn laws(x in $strategy, y in $strategy, z in $strategy) {
                    let r = $ring;
                    let add = $add;
                    let mul = $mul;
                    let neg = $neg;
                    // commutativity
                    prop_assert_eq!(add(&r, &x, &y), add(&r, &y, &x));
                    prop_assert_eq!(mul(&r, &x, &y), mul(&r, &y, &x));
                    // associativity
                    prop_assert_eq!(add(&r, &add(&r, &x, &y), &z), add(&r, &x, &add(&r, &y, &z)));
                    prop_assert_eq!(mul(&r, &mul(&r, &x, &y), &z), mul(&r, &x, &mul(&r, &y, &z)));
                    // distributivity
                    prop_assert_eq!(
                        mul(&r, &add(&r, &x, &y), &z),
                        add(&r, &mul(&r, &x, &z), &mul(&r, &y, &z))
                    );
                    // additive inverses normalize to the canonical zero
                    let zero = $zero;
                    prop_assert_eq!(add(&r, &x, &neg(&r, &x)), zero(&r));
                }
            }
        }
    };
}

ring_laws!(
    rising_powers_quotient,
    poly_element(),
    poly_ring(),
    add = |r: &MonomialRing, a: &PolyElement, b: &PolyElement| r.add(a, b),
    mul = |r: &MonomialRing, a: &PolyElement, b: &PolyElement| r.mul(a, b),
    neg = |r: &MonomialRing, a: &PolyElement| r.neg(a),
    zero = |r: &MonomialRing| r.zero()
);

ring_laws!(
    monoid_algebra,
    monoid_element(),
    MonoidAlgebraRing::plain(ScalarDomain::Rational),
    add = |r: &MonoidAlgebraRing, a: &MonoidAlgElement, b: &MonoidAlgElement| r.add(a, b),
    mul = |r: &MonoidAlgebraRing, a: &MonoidAlgElement, b: &MonoidAlgElement| r.mul(a, b),
    neg = |r: &MonoidAlgebraRing, a: &MonoidAlgElement| r.neg(a),
    zero = |r: &MonoidAlgebraRing| r.zero()
);

ring_laws!(
    tower_ring,
    tower_element(),
    TowerRing::new(2),
    add = |r: &TowerRing, a: &TowerPoly, b: &TowerPoly| r.add(a, b),
    mul = |r: &TowerRing, a: &TowerPoly, b: &TowerPoly| r.mul(a, b),
    neg = |r: &TowerRing, a: &TowerPoly| r.neg(a),
    zero = |r: &TowerRing| r.zero()
);

ring_laws!(
    eventual_sequences,
    eventual_element(),
    EventualSeqRing::new(ScalarDomain::Rational),
    add = |r: &EventualSeqRing, a: &EventualSeq, b: &EventualSeq| r.add(a, b),
    mul = |r: &EventualSeqRing, a: &EventualSeq, b: &EventualSeq| r.mul(a, b),
    neg = |r: &EventualSeqRing, a: &EventualSeq| r.neg(a),
    zero = |r: &EventualSeqRing| r.zero()
);

ring_laws!(
    idealization,
    idealization_element(),
    IdealizationRing::new(3),
    add = |r: &IdealizationRing, a: &IdealizationElement, b: &IdealizationElement| r.add(a, b),
    mul = |r: &IdealizationRing, a: &IdealizationElement, b: &IdealizationElement| r.mul(a, b),
    neg = |r: &IdealizationRing, a: &IdealizationElement| r.neg(a),
    zero = |r: &IdealizationRing| r.zero()
);

proptest! {
    #[test]
    fn rank_plus_nullity_is_cols(
        dims in (1usize..=8, 1usize..=8),
        seed in prop::collection::vec(-9i64..=9, 64..=64),
    ) {
        let (rows, cols) = dims;
        let entries: Vec<Scalar> = seed[..rows * cols]
            .iter()
            .map(|&v| Scalar::rational(v, 1))
            .collect();
        let m = ExactMatrix::new(ScalarDomain::Rational, rows, cols, entries).unwrap();
        let rank = m.rank().unwrap();
        let kernel = m.kernel_basis().unwrap();
        prop_assert_eq!(rank + kernel.len(), cols);
        // kernel vectors are exact solutions and linearly independent
        for v in &kernel {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
        if !kernel.is_empty() {
            let k = ExactMatrix::from_columns(ScalarDomain::Rational, cols, &kernel);
            prop_assert_eq!(k.rank().unwrap(), kernel.len());
        }
    }
}
