// A tour of the bespoke ring families: the rational-exponent monoid
// algebra, the divided tower ring and its valuation, the Prüfer-group
// idealization, the perfect-closure tensor square, and eventually-periodic
// sequences.

use torsionlab::rings::eventual::EventualSeqRing;
use torsionlab::rings::idealization::{IdealizationRing, PLocal, PruferElement};
use torsionlab::rings::monoid_algebra::{ratio, CutIdeal, MonoidAlgebraRing};
use torsionlab::rings::tensor_square::TensorSquareRing;
use torsionlab::rings::tower::TowerRing;
use torsionlab::scalar::{Scalar, ScalarDomain};

fn main() {
    // monoid algebra: basis elements multiply by adding exponents
    let kq = MonoidAlgebraRing::plain(ScalarDomain::Rational);
    let prod = kq.mul(&kq.basis(ratio(1, 2)), &kq.basis(ratio(1, 3)));
    println!("e[1/2]·e[1/3] = {prod}");
    let m = CutIdeal::maximal();
    println!("maximal ideal idempotent: {}; α(<e[1/2]>³) = {}", m.is_idempotent(), CutIdeal::principal(ratio(1, 2)).power(3).alpha);

    // tower ring: y_i = t/2^i with 2·y_{i+1} = y_i; lexicographic values
    let s = TowerRing::new(2);
    let y3 = s.generator(3);
    println!("\ntower generator y_3 = {y3}");
    let py0 = s.mul(&s.p_power(1), &s.generator(0));
    println!(
        "v(p) = {}, v(y_3) = {}, v(p·y_0) = {}",
        s.valuation(&s.p_power(1)).unwrap(),
        s.valuation(&y3).unwrap(),
        s.valuation(&py0).unwrap()
    );
    let divides = s
        .frac_divides(&s.from_element(py0), &s.from_element(s.p_power(9)))
        .unwrap();
    println!("p·y_0 divides p^9: {divides}");

    // idealization of the Prüfer 2-group: essential multipliers to (0, z_0)
    let u = IdealizationRing::new(2);
    let x = u.element(PLocal::from_i64(2, 12, 5), PruferElement::new(2, 3.into(), 3));
    let mult = u.essential_multiplier(&x).unwrap();
    println!("\nidealization element x = {x}, multiplier {mult}, x·m = {}", u.mul(&x, &mult));

    // tensor square of a perfect-closure layer: roots one level up
    let t = TensorSquareRing::new(2, 1);
    let eps = t.canonical_nilpotent();
    println!("\nε = s^(1/2)⊗1 − 1⊗s^(1/2): ε² = 0 is {}", t.mul(&eps, &eps).is_zero());
    let root = t.frobenius_root(&eps).unwrap();
    let up = TensorSquareRing::new(2, 2);
    println!("root g at level 2 satisfies g² = ε: {}", up.mul(&root, &root) == t.level_up(&eps));

    // eventually periodic sequences: the idempotent vanishing at the origin
    let r = EventualSeqRing::new(ScalarDomain::Rational);
    let f = r.unit_off_zero();
    println!("\nf = {f}: idempotent {}", r.mul(&f, &f) == f);
    let g = r.from_parts(vec![], vec![Scalar::rational(1, 1), Scalar::rational(0, 1)]);
    let h = r.from_parts(vec![], vec![Scalar::rational(0, 1), Scalar::rational(1, 1)]);
    println!("zero divisors with infinite support: g·h = 0 is {}", r.mul(&g, &h).is_zero());
}
