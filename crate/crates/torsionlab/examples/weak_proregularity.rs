// The weak-proregularity tester on the four reference fixtures: a regular
// pair, an idempotent generator, the principal maximal ideal of the
// localized tower ring, and the sliding-annihilator family where the
// inverse system refuses to die.

use torsionlab::graded::{CyclicModule, Window};
use torsionlab::homology::wpr::{wpr_test, WprInstance};
use torsionlab::rings::monomial::Monomial;
use torsionlab::rings::mpoly::MonomialRing;
use torsionlab::rings::product::ProductRing;
use torsionlab::rings::tower::TowerRing;
use torsionlab::scalar::ScalarDomain;

fn main() {
    let prod = ProductRing::new(ScalarDomain::Rational, 2);
    let fixtures: Vec<(&str, WprInstance)> = vec![
        (
            "(x, y) on Q[x,y]",
            WprInstance::GradedMonomial {
                module: CyclicModule::ring_as_module(MonomialRing::polynomial(
                    ScalarDomain::Rational,
                    &["x", "y"],
                )),
                sequence: vec![Monomial::var(0), Monomial::var(1)],
                window: Window::nonneg_total(2, 6),
            },
        ),
        (
            "idempotent (1,0) on QxQ",
            WprInstance::ProductIdempotent { ring: prod, idempotent: prod.idempotent(&[0]) },
        ),
        ("<p> in the localized tower ring", WprInstance::TowerPrincipal { ring: TowerRing::new(2) }),
        (
            "(x) on K[x, y_i]/(x^i y_i, y_i y_j)",
            WprInstance::PrincipalSchematic {
                ring: MonomialRing::sliding_annihilator_quotient(ScalarDomain::Rational, 8),
                variable: 0,
                degree_bound: 10,
            },
        ),
    ];
    for (name, instance) in &fixtures {
        let verdict = wpr_test(instance, 4, 8).unwrap();
        println!("{name}:\n  {verdict:?}\n");
    }
}
