// Torsion functor machinery on the rising-powers quotient
// K[Y₀, Y₁, …]/(YᵢYⱼ for i≠j, Yᵢ^{i+1}): certificates, the truncated Γ,
// T-nilpotency, separatedness, and the non-radical witness.

use torsionlab::graded::CyclicModule;
use torsionlab::rings::ideal::{IdealClosure, IdealHandle};
use torsionlab::rings::mpoly::MonomialRing;
use torsionlab::rings::{RingDescriptor, RingElement};
use torsionlab::scalar::ScalarDomain;
use torsionlab::torsion::gamma::{gamma_truncated, radical_defect};
use torsionlab::torsion::{adic_separated_up_to, is_torsion_element, t_nilpotency_check};

fn main() {
    let bound = 8;
    let ring = MonomialRing::rising_powers_quotient(ScalarDomain::Rational, bound);
    let rd = RingDescriptor::Monomial(ring.clone());
    let module = CyclicModule::ring_as_module(ring.clone());
    let m = IdealHandle::schematic(rd, IdealClosure::VariableSchemaPower { power: 1 });

    println!("torsion certificates (least n with m^n·x = 0):");
    for i in 1..=bound {
        let cert = is_torsion_element(&m, &RingElement::Poly(ring.var(i)), None, bound + 2).unwrap();
        println!("  Y_{i}: exponent {:?}  (Y_{i}^{} = 0, Y_{i}^{i} ≠ 0)", cert.exponent(), i + 1);
    }
    let one = is_torsion_element(&m, &RingElement::Poly(ring.one()), None, bound + 2).unwrap();
    println!("  1: {:?}", one.outcome);

    let g = gamma_truncated(&module, &m, bound, 4).unwrap();
    println!("\nΓ_m dims by total degree ≤ 4: {:?} (stabilized at {:?})", g.gamma_dims(), g.stabilized_at);

    let family: Vec<_> = (0..6).map(|_| ring.var(5)).collect();
    let n = t_nilpotency_check(&ring, &family).unwrap();
    println!("\nT-nilpotency: Y_5·Y_5·… vanishes at factor index {n}");

    let sep = adic_separated_up_to(&m, bound + 1, bound, &[]).unwrap();
    println!("adic separatedness: {sep:?}");

    let defect = radical_defect(&module, &m, bound, 3).unwrap();
    println!("radical defect: {defect:?}");
}
