//! Acceptance suite: one test per standing criterion, each printing a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every tolerance here is exact — the claims under test are algebraic
//! identities, so the only knobs are bounds, windows and seeds, all pinned.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;
use torsionlab::corpus::report::{Status, SubStatus};
use torsionlab::corpus::{run_all, CheckParams};
use torsionlab::graded::{CyclicModule, Window};
use torsionlab::homology::cech::cech_dims;
use torsionlab::homology::checks::comparison_sequence_check;
use torsionlab::homology::koszul::{koszul_homology_dims, KoszulComplexSpec};
use torsionlab::homology::wpr::{wpr_test, WprInstance, WprVerdict};
use torsionlab::linalg::{homology_over_field, smith_normal_form, ExactMatrix};
use torsionlab::rings::ideal::{IdealClosure, IdealHandle};
use torsionlab::rings::monomial::Monomial;
use torsionlab::rings::mpoly::MonomialRing;
use torsionlab::rings::product::ProductRing;
use torsionlab::rings::tower::TowerRing;
use torsionlab::rings::{RingDescriptor, RingElement};
use torsionlab::scalar::{Scalar, ScalarDomain};
use torsionlab::torsion::gamma::gamma_dims_multi;
use torsionlab::torsion::{is_torsion_element, t_nilpotency_check, TorsionOutcome};

fn report(criterion: &str, ok: bool, detail: &str) {
    println!("criterion {criterion}: {} — {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_linear_algebra_kernel() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);

    // Smith normal form on 100 seeded integer matrices
    let mut snf_ok = true;
    for _ in 0..100 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let entries: Vec<Scalar> = (0..rows * cols)
            .map(|_| Scalar::integer(rng.gen_range(-9..=9)))
            .collect();
        let m = ExactMatrix::new(ScalarDomain::Integer, rows, cols, entries).unwrap();
        let snf = smith_normal_form(&m).unwrap();
        if snf.u.mul(&m).unwrap().mul(&snf.v).unwrap() != snf.d {
            snf_ok = false;
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            use num_traits::Zero;
            let divides = w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero());
            if !(divides || (w[0].is_zero() && w[1].is_zero())) {
                snf_ok = false;
            }
        }
        use num_bigint::BigInt;
        use num_traits::Signed;
        if snf.u.det_integer().unwrap().abs() != BigInt::from(1)
            || snf.v.det_integer().unwrap().abs() != BigInt::from(1)
        {
            snf_ok = false;
        }
    }

    // homology over F2 against exhaustive subspace enumeration
    let mut f2_ok = true;
    let domain = ScalarDomain::PrimeField(2);
    for _ in 0..40 {
        let mid = rng.gen_range(1..=6);
        let out_rows = rng.gen_range(0..=4);
        let d_out = {
            let entries: Vec<Scalar> = (0..out_rows * mid)
                .map(|_| Scalar::fp(2, rng.gen_range(0..=1)))
                .collect();
            ExactMatrix::new(domain, out_rows, mid, entries).unwrap()
        };
        // exhaustive kernel of d_out
        let vectors: Vec<Vec<Scalar>> = (0..(1u32 << mid))
            .map(|mask| (0..mid).map(|i| Scalar::fp(2, (mask >> i & 1) as i64)).collect())
            .collect();
        let kernel: Vec<&Vec<Scalar>> = vectors
            .iter()
            .filter(|v| d_out.apply(v).unwrap().iter().all(|x| x.is_zero()))
            .collect();
        // d_in columns: random combinations of kernel vectors (composition zero)
        let in_cols = rng.gen_range(0..=3usize);
        let mut cols = Vec::new();
        for _ in 0..in_cols {
            let pick = kernel[rng.gen_range(0..kernel.len())].clone();
            cols.push(pick);
        }
        let d_in = ExactMatrix::from_columns(domain, mid, &cols);
        let h = homology_over_field(&d_in, &d_out).unwrap();
        // enumerate the image span
        let mut image = std::collections::BTreeSet::new();
        for mask in 0..(1u32 << in_cols) {
            let mut acc = vec![Scalar::fp(2, 0); mid];
            for (j, col) in cols.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (a, b) in acc.iter_mut().zip(col) {
                        *a = a.add(b);
                    }
                }
            }
            image.insert(format!("{acc:?}"));
        }
        let dim_enum = (kernel.len() as f64).log2() - (image.len() as f64).log2();
        if (h.dim as f64 - dim_enum).abs() > 1e-9 {
            f2_ok = false;
        }
    }

    let elapsed = start.elapsed();
    report(
        "1",
        snf_ok && f2_ok && elapsed.as_secs() < 30,
        &format!("SNF transforms exact on 100 seeded matrices; F2 homology matches enumeration on 40 complexes; {elapsed:?} < 30s"),
    );
}

#[test]
fn criterion_2_regular_sequence_acyclicity() {
    let start = Instant::now();
    let module = CyclicModule::ring_as_module(MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]));
    let window = Window::nonneg_total(2, 12);
    let mut all_zero = true;
    let mut pieces = 0;
    for u in 1..=3 {
        let spec = KoszulComplexSpec::new(vec![Monomial::var(0), Monomial::var(1)], u).unwrap();
        for i in [1usize, 2] {
            for (_, dim) in koszul_homology_dims(&module, &spec, i, &window).unwrap() {
                pieces += 1;
                if dim != 0 {
                    all_zero = false;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        "2",
        all_zero && elapsed.as_secs() < 60,
        &format!("H_1 and H_2 of (x,y)^u vanish exactly on {pieces} graded pieces (u ≤ 3, total degree ≤ 12); {elapsed:?} < 60s"),
    );
}

#[test]
fn criterion_3_degree_zero_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
    let window = Window::nonneg_total(2, 8);
    let mut instances_ok = 0;
    for _ in 0..10 {
        // seeded monomial quotient and monomial ideal
        let rand_monomial = |rng: &mut ChaCha8Rng, lo: u32, hi: u32| {
            let a = rng.gen_range(0..=hi);
            let b = rng.gen_range(if a == 0 { lo.max(1) } else { lo }..=hi);
            Monomial::from_pairs(&[(0, a), (1, b)])
        };
        let relations: Vec<Monomial> =
            (0..rng.gen_range(1..=2)).map(|_| rand_monomial(&mut rng, 0, 3)).collect();
        let module = CyclicModule::quotient(ring.clone(), relations);
        let mut gens: Vec<Monomial> = (0..rng.gen_range(1..=2))
            .map(|_| rand_monomial(&mut rng, 0, 2))
            .filter(|m| !module.monomial_is_zero(m))
            .collect();
        if gens.is_empty() {
            gens.push(Monomial::var(0));
        }
        let gamma = gamma_dims_multi(&module, &gens, 10, &window).unwrap();
        let cech = cech_dims(&module, &gens, 0, &window, 8).unwrap();
        let equal = cech
            .iter()
            .all(|p| gamma.get(&p.degree).map(|(d, _)| *d).unwrap_or(0) == p.dim);
        if equal {
            instances_ok += 1;
        }
    }
    report(
        "3",
        instances_ok == 10,
        &format!("Γ_a and Ȟ⁰ agree degreewise on {instances_ok}/10 seeded monomial instances (independent code paths, window ≤ 8)"),
    );
}

#[test]
fn criterion_4_wpr_tester() {
    let start = Instant::now();
    let prod = ProductRing::new(ScalarDomain::Rational, 2);
    let regular = wpr_test(
        &WprInstance::GradedMonomial {
            module: CyclicModule::ring_as_module(MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"])),
            sequence: vec![Monomial::var(0), Monomial::var(1)],
            window: Window::nonneg_total(2, 6),
        },
        4,
        8,
    )
    .unwrap();
    let idem = wpr_test(
        &WprInstance::ProductIdempotent { ring: prod, idempotent: prod.idempotent(&[0]) },
        4,
        8,
    )
    .unwrap();
    let tower = wpr_test(&WprInstance::TowerPrincipal { ring: TowerRing::new(2) }, 4, 8).unwrap();
    let sliding = wpr_test(
        &WprInstance::PrincipalSchematic {
            ring: MonomialRing::sliding_annihilator_quotient(ScalarDomain::Rational, 8),
            variable: 0,
            degree_bound: 10,
        },
        4,
        8,
    )
    .unwrap();
    let refuted = matches!(
        &sliding,
        WprVerdict::NotProZeroUpTo { v_bound: 8, witness, .. } if witness.contains("y8")
    );
    let elapsed = start.elapsed();
    report(
        "4",
        regular.is_pro_zero() && idem.is_pro_zero() && tower.is_pro_zero() && refuted && elapsed.as_secs() < 60,
        &format!("pro-zero certified for the regular pair, the idempotent and the principal tower ideal; refuted up to 8 with a surviving cycle for the sliding annihilator; {elapsed:?} < 60s"),
    );
}

#[test]
fn criterion_5_comparison_sequence() {
    let module = CyclicModule::ring_as_module(MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]));
    let comparison = comparison_sequence_check(&module, 2, 6, 8).unwrap();
    // the second summand side: Ȟ²_a for principal a vanishes identically
    let h2a = cech_dims(
        &module,
        &[Monomial::var(0)],
        2,
        &Window::symmetric(2, 6),
        8,
    )
    .unwrap();
    let h2a_zero = h2a.iter().all(|p| p.dim == 0);
    report(
        "5",
        comparison.all_equal() && comparison.all_certified() && h2a_zero,
        &format!(
            "dim Ȟ²_(x,y) = dim Ȟ¹_y(Ȟ¹_x) + dim Γ_y(Ȟ²_x) in all {} bidegrees with |components| ≤ 6, with Ȟ²_x = 0 throughout",
            comparison.rows.len()
        ),
    );
}

#[test]
fn criterion_6_corpus_suite() {
    let start = Instant::now();
    let suite = run_all(&CheckParams::default()).unwrap();
    let mut all_pass = true;
    let mut failing = Vec::new();
    for check in &suite.checks {
        if check.status() != Status::Pass {
            all_pass = false;
            failing.push(check.check_id.clone());
        }
        for w in &check.witnesses {
            // unknown is allowed only as an explicitly recorded bounded
            // refutation, never as an exhausted bound
            if w.status == SubStatus::BoundExhausted {
                all_pass = false;
                failing.push(w.claim.clone());
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        "6",
        all_pass && elapsed.as_secs() < 300,
        &format!(
            "all 7 corpus checks pass at default bounds (N = 12, windows ≤ 8, 100 samples), bounded refutations recorded only where expected (failing: {failing:?}); {elapsed:?} < 5 min"
        ),
    );
}

#[test]
fn criterion_7_torsion_certificates() {
    let v_bound = 12;
    let ring = MonomialRing::rising_powers_quotient(ScalarDomain::Rational, v_bound);
    let rd = RingDescriptor::Monomial(ring.clone());
    let m = IdealHandle::schematic(rd, IdealClosure::VariableSchemaPower { power: 1 });

    // the rewrite oracle decides both exponents: m^i is the least ideal
    // power annihilating Y_i, and Y_i^{i+1} is its least vanishing power
    let mut cert_ok = true;
    for i in 1..=v_bound {
        let cert = is_torsion_element(&m, &RingElement::Poly(ring.var(i)), None, 14).unwrap();
        if cert.exponent() != Some(i) {
            cert_ok = false;
        }
        if !(ring.pow(&ring.var(i), i + 1).is_zero() && !ring.pow(&ring.var(i), i).is_zero()) {
            cert_ok = false;
        }
    }
    let unit = is_torsion_element(&m, &RingElement::Poly(ring.one()), None, 14).unwrap();
    let unit_ok = unit.outcome == TorsionOutcome::UnknownUpTo { bound: 14 };

    // T-nilpotency bound over 50 seeded monomial families
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut t_ok = true;
    for _ in 0..50 {
        let shared = rng.gen_range(1..=v_bound);
        let len = (shared + 2) as usize;
        let same = rng.gen_bool(0.5);
        let family: Vec<_> = (0..len)
            .map(|_| {
                let idx = if same { shared } else { rng.gen_range(1..=shared) };
                ring.from_monomial(Monomial::single(idx, rng.gen_range(1..=2.min(idx))))
            })
            .collect();
        match t_nilpotency_check(&ring, &family) {
            Ok(n) => {
                if n + 1 > (shared + 2) as usize {
                    t_ok = false;
                }
            }
            Err(_) => t_ok = false,
        }
    }
    report(
        "7",
        cert_ok && unit_ok && t_ok,
        "for every i ≤ 12 the generator Y_i is annihilated by exactly the i-th ideal power and vanishes at its own power i+1; the unit gets no certificate up to 14; 50 seeded families vanish within (shared index)+2 factors",
    );
}

#[test]
fn criterion_8_determinism() {
    let params = CheckParams::default();
    let a = run_all(&params).unwrap();
    let b = run_all(&params).unwrap();
    let ja = serde_json::to_string(&a.to_json(true)).unwrap();
    let jb = serde_json::to_string(&b.to_json(true)).unwrap();
    let identical = ja == jb;
    // a different seed must change at least the recorded bounds
    let mut other = params.clone();
    other.seed ^= 0xdead_beef;
    let c = run_all(&other).unwrap();
    let jc = serde_json::to_string(&c.to_json(true)).unwrap();
    report(
        "8",
        identical && ja != jc,
        &format!("two runs with the same seed produce byte-identical canonical JSON ({} bytes); changing the seed changes the report", ja.len()),
    );
}
