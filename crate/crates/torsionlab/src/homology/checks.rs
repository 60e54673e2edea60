//! Instance checks pairing independent computation routes: the degree-0
//! torsion/Čech isomorphism, torsion acyclicity, the comparison sequence for
//! a principal enlargement, base-ring independence, flat base change along a
//! variable localization, vanishing over idempotent-generated ideals, and
//! the explicit dual-module functional that separates a torsion submodule
//! from its hull.

use crate::graded::{CyclicModule, Multidegree, Window};
use crate::homology::cech::{
    cech_dims, cech_oracle_dim, first_local_cohomology_module, graded_cech_principal,
    graded_localization_piece, torsion_graded_module, ChainVerdict,
};
use crate::homology::koszul::HomologyError;
use crate::rings::monomial::Monomial;
use crate::rings::mpoly::MonomialRing;
use crate::torsion::gamma::gamma_dims_multi;

/// One multidegree row of a two-route comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceComparison {
    pub degree: Multidegree,
    pub left: usize,
    pub right: usize,
    pub certified: bool,
}

#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub rows: Vec<PieceComparison>,
    pub description: String,
}

impl ComparisonReport {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.left == r.right)
    }

    pub fn all_certified(&self) -> bool {
        self.rows.iter().all(|r| r.certified)
    }

    pub fn mismatches(&self) -> Vec<&PieceComparison> {
        self.rows.iter().filter(|r| r.left != r.right).collect()
    }
}

/// Γ_a(M) ≅ Ȟ⁰(a, M): graded dimensions by two independent routes — direct
/// colon kernels against the Koszul-colimit realization of Ȟ⁰.
pub fn gamma0_isomorphism_check(
    module: &CyclicModule,
    ideal_gens: &[Monomial],
    window: &Window,
    n_bound: u32,
    u_max: u32,
) -> Result<ComparisonReport, HomologyError> {
    let gamma = gamma_dims_multi(module, ideal_gens, n_bound, window)?;
    let cech = cech_dims(module, ideal_gens, 0, window, u_max)?;
    let mut rows = Vec::new();
    for piece in cech {
        let (gdim, gstab) = gamma.get(&piece.degree).copied().unwrap_or((0, None));
        rows.push(PieceComparison {
            degree: piece.degree,
            left: gdim,
            right: piece.dim,
            certified: gstab.is_some() && piece.stabilized_at.is_some(),
        });
    }
    Ok(ComparisonReport {
        rows,
        description: "Γ_a (colon kernels) vs Ȟ⁰ (Koszul colimit)".into(),
    })
}

/// Ȟⁱ(a, M) = 0 for i ≥ 1 when M is a-torsion: the localizations vanish, and
/// the colimit route recomputes the zeros as a cross-validation.
pub fn torsion_acyclicity_check(
    module: &CyclicModule,
    sequence: &[Monomial],
    window: &Window,
    u_max: u32,
) -> Result<ComparisonReport, HomologyError> {
    let mut rows = Vec::new();
    for i in 1..=sequence.len() {
        for piece in cech_dims(module, sequence, i, window, u_max)? {
            rows.push(PieceComparison {
                degree: piece.degree,
                left: piece.dim,
                right: 0,
                certified: piece.stabilized_at.is_some(),
            });
        }
    }
    Ok(ComparisonReport {
        rows,
        description: "Ȟⁱ(a, torsion module) vs 0".into(),
    })
}

fn check_two_vars(module: &CyclicModule) -> Result<(), HomologyError> {
    if module.nvars() != 2 || module.ring.rewrite.is_some() {
        return Err(HomologyError::MalformedSequence(
            "comparison instances need a free 2-variable polynomial base".into(),
        ));
    }
    Ok(())
}

/// The comparison sequence for a = (x), b = y over a free 2-variable ring:
/// per bidegree, dim Ȟⁿ_{(x,y)} must equal dim Ȟ¹_b(Ȟ^{n−1}_a) + dim
/// Γ_b(Ȟⁿ_a). The left side runs through the Koszul colimit; the right side
/// through tabulated localization modules; the middle is cross-checked
/// against the double-localization subquotient, which realizes the
/// connecting identification rankwise.
pub fn comparison_sequence_check(
    module: &CyclicModule,
    n: usize,
    radius: i32,
    u_max: u32,
) -> Result<ComparisonReport, HomologyError> {
    check_two_vars(module)?;
    let window = Window::symmetric(2, radius);
    let rel_deg = module.relations.iter().map(|r| r.total_degree()).max().unwrap_or(0) as i32;
    let margin = radius + rel_deg + 4;
    let tab_window = Window::boxed(vec![-margin, -margin], vec![margin, margin + 4]);

    // Ȟ^{n-1}_a(M) as a graded module (a = (x) is principal, so only
    // i ∈ {0, 1} are nonzero)
    let inner = match n {
        1 => torsion_graded_module(module, 0, &tab_window),
        2 => first_local_cohomology_module(module, 0, &tab_window),
        _ => {
            return Err(HomologyError::MalformedSequence(
                "principal a has Ȟⁱ_a = 0 for i ≥ 2; use n ∈ {1, 2}".into(),
            ))
        }
    };

    let seq = [Monomial::var(0), Monomial::var(1)];
    let lhs = cech_dims(module, &seq, n, &window, u_max)?;
    let mut rows = Vec::new();
    for piece in lhs {
        let d = &piece.degree;
        let (h1b, v1) = graded_cech_principal(&inner, 1, 1, d)?;
        // Γ_b(Ȟⁿ_a) with a principal: Ȟⁿ_a = 0 for n = 2; for n = 1 it is
        // Γ_y of the tabulated Ȟ¹_a
        let (gb, v2) = match n {
            2 => (0usize, ChainVerdict::Certified),
            _ => {
                let h1a = first_local_cohomology_module(module, 0, &tab_window);
                graded_cech_principal(&h1a, 1, 0, d)?
            }
        };
        // connecting identification, rankwise: Ȟ²_{(x,y)} ≅ M_xy/(M_x + M_y)
        let certified = piece.stabilized_at.is_some()
            && v1 == ChainVerdict::Certified
            && v2 == ChainVerdict::Certified
            && (n != 2 || cech_oracle_dim(module, &[0, 1], 2, d)? == piece.dim);
        rows.push(PieceComparison {
            degree: piece.degree,
            left: piece.dim,
            right: h1b + gb,
            certified,
        });
    }
    Ok(ComparisonReport {
        rows,
        description: format!("dim Ȟ^{n}_(x,y) vs dim Ȟ¹_y(Ȟ^{}_x) + dim Γ_y(Ȟ^{n}_x)", n - 1),
    })
}

/// Base-ring independence along a surjection R → S with monomial kernel:
/// Čech cohomology of the generators computed over S (rewrite quotient)
/// against the same computation over R with the kernel folded into the
/// module relations.
pub fn base_independence_check(
    scalar: crate::scalar::ScalarDomain,
    var_names: &[&str],
    kernel_relations: &[Monomial],
    module_relations: &[Monomial],
    sequence: &[Monomial],
    i: usize,
    window: &Window,
    u_max: u32,
) -> Result<ComparisonReport, HomologyError> {
    // route S: the quotient ring carries the kernel as a rewrite system
    let mut s_rewrite = kernel_relations.to_vec();
    s_rewrite.sort();
    let s_ring = MonomialRing {
        scalar,
        vars: crate::rings::mpoly::VarSet::Named(var_names.iter().map(|s| s.to_string()).collect()),
        rewrite: Some(crate::rings::monomial::RewriteSystem::Patterns(s_rewrite)),
    };
    let s_module = CyclicModule::quotient(s_ring, module_relations.to_vec());
    // route R: free polynomial ring, kernel joins the module relations
    let r_ring = MonomialRing::polynomial(scalar, var_names);
    let mut r_rels = kernel_relations.to_vec();
    r_rels.extend(module_relations.iter().cloned());
    let r_module = CyclicModule::quotient(r_ring, r_rels);

    let s_pieces = cech_dims(&s_module, sequence, i, window, u_max)?;
    let r_pieces = cech_dims(&r_module, sequence, i, window, u_max)?;
    let rows = s_pieces
        .into_iter()
        .zip(r_pieces)
        .map(|(s, r)| PieceComparison {
            degree: s.degree,
            left: s.dim,
            right: r.dim,
            certified: s.stabilized_at.is_some() && r.stabilized_at.is_some(),
        })
        .collect();
    Ok(ComparisonReport {
        rows,
        description: format!("Ȟ^{i} over the quotient ring vs over the base ring"),
    })
}

/// Flat base change along inverting one variable f: dims of Ȟⁱ_a(M)
/// localized at f against Ȟⁱ_{a}(M_f), for a = (x_0), f = x_1, i ∈ {0, 1}.
pub fn flat_base_change_check(
    module: &CyclicModule,
    i: usize,
    inverted_var: u32,
    window: &Window,
) -> Result<ComparisonReport, HomologyError> {
    check_two_vars(module)?;
    let radius = window
        .lo
        .iter()
        .chain(&window.hi)
        .map(|x| x.abs())
        .max()
        .unwrap_or(4);
    let rel_deg = module.relations.iter().map(|r| r.total_degree()).max().unwrap_or(0) as i32;
    let margin = radius + rel_deg + 4;
    let tab_window = Window::boxed(vec![-margin, -margin], vec![margin, margin + 4]);
    let left_module = match i {
        0 => torsion_graded_module(module, 0, &tab_window),
        1 => first_local_cohomology_module(module, 0, &tab_window),
        _ => {
            return Err(HomologyError::MalformedSequence(
                "principal ideals have Ȟⁱ = 0 for i ≥ 2".into(),
            ))
        }
    };
    // right route: the Čech cocomplex of (x) over M_f, assembled from
    // localized pieces directly
    let loc_f = crate::graded::LocalizedModule::new(module, [inverted_var]);
    let loc_xf = crate::graded::LocalizedModule::new(module, [0u32, inverted_var]);
    let mut rows = Vec::new();
    for d in window.points() {
        let (far, _, verdict) = graded_localization_piece(&left_module, inverted_var, &d)?;
        let src = loc_f.dim(&d);
        let tgt = loc_xf.dim(&d);
        // the canonical 0/1 map M_f → M_xf is nonzero exactly when both
        // pieces are alive
        let right = match i {
            0 => usize::from(src == 1 && tgt == 0),
            _ => usize::from(tgt == 1 && src == 0),
        };
        rows.push(PieceComparison {
            degree: d,
            left: far,
            right,
            certified: verdict == ChainVerdict::Certified,
        });
    }
    Ok(ComparisonReport {
        rows,
        description: format!("(Ȟ^{i}_x(M))_y vs Ȟ^{i}_x(M_y)"),
    })
}

/// Vanishing over an idempotent-generated ideal: the two-term cocomplex
/// M → M_e has M_e = eM with e acting invertibly there, so Ȟ¹ = 0 with an
/// explicit preimage for every sample.
#[derive(Debug, Clone)]
pub struct IdempotentVanishingReport {
    pub idempotent_squared_ok: bool,
    pub samples_with_preimage: usize,
    pub samples: usize,
    pub h0_description: String,
}

impl IdempotentVanishingReport {
    pub fn passes(&self) -> bool {
        self.idempotent_squared_ok && self.samples_with_preimage == self.samples
    }
}

pub fn idempotent_vanishing_check(
    ring: &crate::rings::RingDescriptor,
    e: &crate::rings::RingElement,
    samples: &[crate::rings::RingElement],
) -> Result<IdempotentVanishingReport, HomologyError> {
    let e2 = ring.mul(e, e)?;
    let idempotent_squared_ok = ring.eq(&e2, e)?;
    let mut with_preimage = 0;
    for x in samples {
        // y = ex ∈ eM; e acts as the identity there, so y is its own
        // preimage under M → M_e and the cokernel vanishes
        let y = ring.mul(e, x)?;
        let ey = ring.mul(e, &y)?;
        if ring.eq(&ey, &y)? {
            with_preimage += 1;
        }
    }
    Ok(IdempotentVanishingReport {
        idempotent_squared_ok,
        samples_with_preimage: with_preimage,
        samples: samples.len(),
        h0_description: "Ȟ⁰ = (0 : e), the complementary-idempotent span".into(),
    })
}

/// The diagonal-support functional on the free polynomial algebra: 1 on the
/// monomials x_i^i (including 1 = x_0^0), 0 elsewhere. It is annihilated by
/// every rewrite-rule generator yet survives every power of the maximal
/// ideal, and x_1·f is the canonical residue generator.
#[derive(Debug, Clone, Copy, Default)]
pub struct DiagonalFunctional;

impl DiagonalFunctional {
    pub fn eval(&self, t: &Monomial) -> u8 {
        if t.is_one() {
            return 1;
        }
        let mut it = t.iter();
        match (it.next(), it.next()) {
            (Some((var, exp)), None) if var == exp => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FunctionalWitnessReport {
    pub annihilation_products_checked: usize,
    pub annihilation_ok: bool,
    pub powers_escaping: Vec<u32>,
    pub residue_generator_ok: bool,
    pub exhaustive_degree: u32,
    pub var_bound: u32,
}

impl FunctionalWitnessReport {
    pub fn passes(&self, var_bound: u32) -> bool {
        self.annihilation_ok
            && self.residue_generator_ok
            && self.powers_escaping.len() == var_bound as usize
    }
}

/// Verifies the three properties of the diagonal functional, exhaustively
/// over monomials with indices ≤ var_bound and total degree ≤
/// exhaustive_degree: (i) every rule generator annihilates it, (ii) the
/// power x_n^n escapes the n-th power of the maximal ideal for every
/// n ≤ var_bound, (iii) x_1·f is the residue generator.
pub fn functional_witness_check(var_bound: u32, exhaustive_degree: u32) -> FunctionalWitnessReport {
    let f = DiagonalFunctional;
    let names: Vec<String> = (0..=var_bound).map(|i| format!("X{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let free = MonomialRing::polynomial(crate::scalar::ScalarDomain::Rational, &name_refs);

    // rule generators with indices ≤ var_bound
    let mut gens = Vec::new();
    for a in 0..=var_bound {
        for b in (a + 1)..=var_bound {
            gens.push(Monomial::from_pairs(&[(a, 1), (b, 1)]));
        }
    }
    for i in 0..=var_bound {
        gens.push(Monomial::single(i, i + 1));
    }

    let mut monomials = Vec::new();
    for d in 0..=exhaustive_degree {
        monomials.extend(free.monomials_of_degree(d));
    }

    let mut checked = 0;
    let mut annihilation_ok = true;
    for g in &gens {
        for t in &monomials {
            checked += 1;
            // (g·f)(t) = f(g·t)
            if f.eval(&g.mul(t)) != 0 {
                annihilation_ok = false;
            }
        }
    }

    let mut powers_escaping = Vec::new();
    for n in 1..=var_bound {
        // x_n^n lies in the n-th power of the maximal ideal and f(x_n^n) = 1
        if f.eval(&Monomial::single(n, n)) == 1 {
            powers_escaping.push(n);
        }
    }

    // x_1·f is supported exactly on the constant monomial
    let mut residue_generator_ok = f.eval(&Monomial::var(1)) == 1;
    let x1 = Monomial::var(1);
    for t in &monomials {
        let expected = u8::from(t.is_one());
        if f.eval(&x1.mul(t)) != expected {
            residue_generator_ok = false;
        }
    }

    FunctionalWitnessReport {
        annihilation_products_checked: checked,
        annihilation_ok,
        powers_escaping,
        residue_generator_ok,
        exhaustive_degree,
        var_bound,
    }
}
