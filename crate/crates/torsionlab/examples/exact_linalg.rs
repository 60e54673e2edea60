// The exact linear-algebra kernel: Smith normal form with its unimodular
// transforms, kernels over prime fields, and homology of two-step
// complexes over ℤ.

use torsionlab::linalg::{homology_over_integers, smith_normal_form, ExactMatrix};
use torsionlab::scalar::ScalarDomain;

fn main() {
    let m = ExactMatrix::from_i64(ScalarDomain::Integer, &[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
    println!("m =\n{m}");
    let snf = smith_normal_form(&m).unwrap();
    println!("diagonal of the Smith form: {:?}", snf.diagonal());
    println!("u·m·v = d holds: {}", snf.u.mul(&m).unwrap().mul(&snf.v).unwrap() == snf.d);
    println!(
        "|det u| = {}, |det v| = {}",
        snf.u.det_integer().unwrap(),
        snf.v.det_integer().unwrap()
    );

    let f2 = ExactMatrix::from_i64(ScalarDomain::PrimeField(2), &[&[1, 1, 0], &[0, 1, 1]]);
    let kernel = f2.kernel_basis().unwrap();
    println!("\nkernel of {f2}over F2: {} vector(s)", kernel.len());
    for v in &kernel {
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("  ({})", s.join(", "));
    }

    // 0 → Z ―diag(2,3)→ Z² → 0: homology Z/2 ⊕ Z/3 = Z/6
    let d_in = ExactMatrix::from_i64(ScalarDomain::Integer, &[&[2, 0], &[0, 3]]);
    let d_out = ExactMatrix::zero(ScalarDomain::Integer, 0, 2);
    let h = homology_over_integers(&d_in, &d_out).unwrap();
    println!("\nhomology of Z² modulo diag(2,3): {h}");
}
