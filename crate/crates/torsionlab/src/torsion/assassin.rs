//! Weak assassins of monomial classes: minimal primes over monomial
//! annihilators are exactly the minimal vertex covers of the generators'
//! variable supports, so membership comes with a finite witness per variable.

use crate::graded::CyclicModule;
use crate::rings::ideal::IdealHandle;
use crate::rings::monomial::Monomial;
use crate::torsion::TorsionError;
use std::collections::BTreeSet;

/// Evidence that a variable set is a minimal prime over an annihilator:
/// containment plus, for each variable, a generator that only that variable
/// covers (so dropping it breaks containment).
#[derive(Debug, Clone)]
pub struct MinimalPrimeWitness {
    pub prime: BTreeSet<u32>,
    pub private_generator: Vec<(u32, Monomial)>,
}

/// Minimal monomial generators of (0 : x) for a monomial class x, searched
/// through all monomials of total degree ≤ search_degree.
pub fn annihilator_generators(
    module: &CyclicModule,
    x: &Monomial,
    search_degree: u32,
) -> Vec<Monomial> {
    let mut killers = Vec::new();
    for d in 1..=search_degree {
        for g in module.ring.monomials_of_degree(d) {
            if module.monomial_is_zero(&g.mul(x)) {
                killers.push(g);
            }
        }
    }
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in killers {
        if minimal.iter().any(|m| m.divides(&g)) {
            continue;
        }
        minimal.retain(|m| !g.divides(m));
        minimal.push(g);
    }
    minimal.sort();
    minimal
}

/// Is `prime` (a set of variables) a minimal prime over the monomial ideal
/// with the given generators? Covers every generator, and every variable has
/// a private generator.
pub fn minimal_prime_over(gens: &[Monomial], prime: &BTreeSet<u32>) -> Option<MinimalPrimeWitness> {
    for g in gens {
        if !g.support().any(|v| prime.contains(&v)) {
            return None; // not even a cover
        }
    }
    let mut private_generator = Vec::new();
    for &v in prime {
        let witness = gens
            .iter()
            .find(|g| {
                let covered: Vec<u32> = g.support().filter(|w| prime.contains(w)).collect();
                covered == [v]
            })?
            .clone();
        private_generator.push((v, witness));
    }
    Some(MinimalPrimeWitness { prime: prime.clone(), private_generator })
}

/// Weak-assassin membership: is `prime` a minimal prime of (0 : x)?
pub fn weak_assassin_membership(
    module: &CyclicModule,
    x: &Monomial,
    prime: &BTreeSet<u32>,
    search_degree: u32,
) -> (bool, Option<MinimalPrimeWitness>) {
    let gens = annihilator_generators(module, x, search_degree);
    match minimal_prime_over(&gens, prime) {
        Some(w) => (true, Some(w)),
        None => (false, None),
    }
}

/// All minimal primes over a monomial ideal (minimal vertex covers of the
/// support hypergraph), for small variable counts.
pub fn minimal_primes(gens: &[Monomial], nvars: u32) -> Vec<BTreeSet<u32>> {
    let vars: Vec<u32> = (0..nvars).collect();
    let mut covers: Vec<BTreeSet<u32>> = Vec::new();
    let n = vars.len();
    assert!(n <= 20, "variable count too large for subset enumeration");
    for mask in 0u32..(1 << n) {
        let subset: BTreeSet<u32> = vars
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let covers_all = gens.iter().all(|g| g.support().any(|v| subset.contains(&v)));
        if covers_all {
            covers.push(subset);
        }
    }
    covers
        .iter()
        .filter(|c| !covers.iter().any(|d| d.len() < c.len() && d.is_subset(c)))
        .filter(|c| covers.iter().all(|d| !(d.is_subset(c) && d.len() < c.len())))
        .cloned()
        .collect()
}

/// Instance data for the torsion/assassin implication chain on a cyclic
/// monomial module: (1) M is a-torsion ⇒ (2) weak assassin ⊆ V(a), and the
/// converse of (2)⇒(1) for ideals of finite type.
#[derive(Debug, Clone)]
pub struct ImplicationReport {
    pub sampled: usize,
    pub all_torsion: bool,
    pub assassin_in_var: bool,
    pub forward_consistent: bool,
    pub converse_consistent: bool,
    pub notes: Vec<String>,
}

pub fn check_implication_instance(
    module: &CyclicModule,
    ideal: &IdealHandle,
    sample_degree: u32,
    torsion_bound: u32,
) -> Result<ImplicationReport, TorsionError> {
    let ideal_vars: BTreeSet<u32> = {
        let mut s = BTreeSet::new();
        for g in ideal.monomial_generators()? {
            s.extend(g.support());
        }
        s
    };
    let nvars = module.nvars() as u32;
    let mut all_torsion = true;
    let mut assassin_in_var = true;
    let mut sampled = 0;
    let mut notes = Vec::new();

    let ideal_gens = ideal.monomial_generators()?;
    for d in 0..=sample_degree {
        for m in module.basis_total(d) {
            sampled += 1;
            // torsion is tested in the module: some power of the ideal must
            // push the class to zero modulo the module relations
            let torsion = (0..=torsion_bound).any(|n| {
                crate::torsion::gamma::monomial_power_products(&ideal_gens, n)
                    .iter()
                    .all(|g| module.monomial_is_zero(&g.mul(&m)))
            });
            if !torsion {
                all_torsion = false;
            }
            let ann = annihilator_generators(module, &m, sample_degree + 2);
            for prime in minimal_primes(&ann, nvars) {
                // prime ⊇ a iff every generator of a has a variable in prime
                let contains_ideal = ideal
                    .monomial_generators()?
                    .iter()
                    .all(|g| g.support().any(|v| prime.contains(&v)));
                if !contains_ideal {
                    assassin_in_var = false;
                    if torsion {
                        notes.push(format!(
                            "torsion element {} has a weak-assassin prime avoiding the ideal",
                            m
                        ));
                    }
                }
            }
        }
    }
    let _ = ideal_vars;
    // (1) ⇒ (2): if everything sampled is torsion, no assassin prime may
    // avoid V(a); the contrapositive is recorded per element above.
    let forward_consistent = !all_torsion || assassin_in_var;
    // finite-type converse (2) ⇒ (1)
    let converse_consistent = !assassin_in_var || all_torsion;
    Ok(ImplicationReport {
        sampled,
        all_torsion,
        assassin_in_var,
        forward_consistent,
        converse_consistent,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::mpoly::MonomialRing;
    use crate::rings::{RingDescriptor, RingElement};
    use crate::scalar::ScalarDomain;

    fn qxy_mod_xy() -> CyclicModule {
        let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
        CyclicModule::quotient(ring, vec![Monomial::from_pairs(&[(0, 1), (1, 1)])])
    }

    #[test]
    fn annihilator_of_y_in_qxy_mod_xy() {
        let module = qxy_mod_xy();
        let y = Monomial::var(1);
        let ann = annihilator_generators(&module, &y, 4);
        assert_eq!(ann, vec![Monomial::var(0)]);
    }

    #[test]
    fn minimal_prime_checks() {
        let module = qxy_mod_xy();
        let y = Monomial::var(1);
        // (0:y) = (x): the prime (x) is minimal, (x,y) is not
        let (ok, w) = weak_assassin_membership(&module, &y, &BTreeSet::from([0u32]), 4);
        assert!(ok);
        assert_eq!(w.unwrap().private_generator, vec![(0, Monomial::var(0))]);
        let (ok, _) = weak_assassin_membership(&module, &y, &BTreeSet::from([0u32, 1]), 4);
        assert!(!ok);
    }

    #[test]
    fn rising_quotient_assassin_is_everything() {
        let ring = MonomialRing::rising_powers_quotient(ScalarDomain::Rational, 5);
        let module = CyclicModule::ring_as_module(ring);
        let y2 = Monomial::var(2);
        let ann = annihilator_generators(&module, &y2, 4);
        // minimal generators: Y_i (i != 2, alive, i <= 5) and Y_2^2
        assert!(ann.contains(&Monomial::var(1)));
        assert!(ann.contains(&Monomial::single(2, 2)));
        assert!(!ann.contains(&Monomial::var(2)));
        let prime: BTreeSet<u32> = (1..=5).collect();
        let (ok, w) = weak_assassin_membership(&module, &y2, &prime, 4);
        assert!(ok, "the full variable set is the unique minimal prime");
        assert_eq!(w.unwrap().private_generator.len(), 5);
    }

    #[test]
    fn implication_chain_on_torsion_instance() {
        // M = Q[x,y]/(x^2) over itself, a = (x): everything x-torsion,
        // assassin primes contain (x)
        let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
        let module = CyclicModule::quotient(ring.clone(), vec![Monomial::single(0, 2)]);
        let a = IdealHandle::finite(
            RingDescriptor::Monomial(ring.clone()),
            vec![RingElement::Poly(ring.var(0))],
        )
        .unwrap();
        let report = check_implication_instance(&module, &a, 4, 8).unwrap();
        assert!(report.all_torsion);
        assert!(report.assassin_in_var);
        assert!(report.forward_consistent && report.converse_consistent);

        // M = Q[x], a = (x): not torsion, and the weak assassin avoids (x)
        let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x"]);
        let module = CyclicModule::ring_as_module(ring.clone());
        let a = IdealHandle::finite(
            RingDescriptor::Monomial(ring.clone()),
            vec![RingElement::Poly(ring.var(0))],
        )
        .unwrap();
        let report = check_implication_instance(&module, &a, 4, 8).unwrap();
        assert!(!report.all_torsion);
        assert!(!report.assassin_in_var);
        assert!(report.forward_consistent && report.converse_consistent);
    }
}
