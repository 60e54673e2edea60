// Koszul homology tables: acyclicity of a regular sequence, annihilator
// homology over a monomial quotient, and Smith-form presentations over ℤ.

use torsionlab::graded::{CyclicModule, Window};
use torsionlab::homology::koszul::{koszul_homology_dims, koszul_homology_integers, KoszulComplexSpec};
use torsionlab::rings::monomial::Monomial;
use torsionlab::rings::mpoly::MonomialRing;
use torsionlab::scalar::ScalarDomain;

fn main() {
    let plane = CyclicModule::ring_as_module(MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]));
    let window = Window::nonneg_total(2, 8);
    for u in 1..=3 {
        let spec = KoszulComplexSpec::new(vec![Monomial::var(0), Monomial::var(1)], u).unwrap();
        for i in [1usize, 2] {
            let total: usize = koszul_homology_dims(&plane, &spec, i, &window)
                .unwrap()
                .iter()
                .map(|(_, n)| n)
                .sum();
            println!("H_{i}((x,y)^{u}, Q[x,y]) total dim over degree ≤ 8: {total}");
        }
    }

    // a = (x) on Q[x,y]/(xy): H_1 = (0 : x) = (y)
    let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
    let module = CyclicModule::quotient(ring, vec![Monomial::from_pairs(&[(0, 1), (1, 1)])]);
    let spec = KoszulComplexSpec::new(vec![Monomial::var(0)], 1).unwrap();
    let dims = koszul_homology_dims(&module, &spec, 1, &Window::boxed(vec![1, 0], vec![1, 5])).unwrap();
    println!("\nH_1((x), Q[x,y]/(xy)) along bidegrees (1, k):");
    for (d, n) in dims {
        println!("  {d:?}: dim {n}");
    }

    println!("\nKoszul homology of (6, 10) over the integers:");
    for (i, h) in koszul_homology_integers(&[6, 10]).unwrap().iter().enumerate() {
        println!("  H_{i} = {h}");
    }
}
