//! Čech cohomology for finite monomial sequences, two ways.
//!
//! The production route realizes Ȟⁱ(a, M) as the colimit of Koszul
//! homologies H_{n−i}(aᵘ, M) along the inductive transition maps, with
//! per-piece stabilization bookkeeping (two consecutive isomorphisms past a
//! degree-dependent floor). The oracle route, available when the sequence
//! consists of variables of a free polynomial ring, assembles the Čech
//! cocomplex of localizations directly — each localized piece is 0- or
//! 1-dimensional — and never touches Koszul complexes, so the two routes
//! cross-validate each other.

use crate::graded::{CyclicModule, GradedModule, LocalizedModule, Multidegree, Window};
use crate::homology::koszul::{
    induced_on_homology, koszul_slice, transition_map, HomologyError, KoszulComplexSpec,
    Normalization, TransitionKind,
};
use crate::linalg::{homology_over_field, ExactMatrix};
use crate::rings::monomial::Monomial;

/// One graded piece of a Čech cohomology computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechPiece {
    pub degree: Multidegree,
    pub dim: usize,
    /// Power at which two consecutive transition maps became isomorphisms;
    /// None means the power bound was exhausted first.
    pub stabilized_at: Option<u32>,
}

fn max_relation_degree(module: &CyclicModule) -> u32 {
    module.relations.iter().map(|r| r.total_degree()).max().unwrap_or(0)
}

/// Ȟⁱ(a, M) dims on a window via the Koszul colimit.
pub fn cech_dims(
    module: &CyclicModule,
    sequence: &[Monomial],
    i: usize,
    window: &Window,
    u_max: u32,
) -> Result<Vec<CechPiece>, HomologyError> {
    let n = sequence.len();
    if i > n {
        return Ok(window
            .points()
            .into_iter()
            .map(|d| CechPiece { degree: d, dim: 0, stabilized_at: Some(1) })
            .collect());
    }
    let hom_degree = n - i;
    let rel_deg = max_relation_degree(module);
    let mut out = Vec::new();
    for d in window.points() {
        let floor = 1 + d.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) + rel_deg;
        let mut piece = None;
        let mut last_dim = 0;
        let mut u = floor;
        while u + 2 <= floor + u_max {
            let spec_u = KoszulComplexSpec::new(sequence.to_vec(), u)?;
            let spec_v = KoszulComplexSpec::new(sequence.to_vec(), u + 1)?;
            let spec_w = KoszulComplexSpec::new(sequence.to_vec(), u + 2)?;
            let s_u = koszul_slice(module, &spec_u, &d, Normalization::Colimit)?;
            let s_v = koszul_slice(module, &spec_v, &d, Normalization::Colimit)?;
            let s_w = koszul_slice(module, &spec_w, &d, Normalization::Colimit)?;
            let h_u = s_u.homology(hom_degree)?;
            let h_v = s_v.homology(hom_degree)?;
            let h_w = s_w.homology(hom_degree)?;
            last_dim = h_w.dim;
            let iso1 = is_iso_between(module, &s_u, &s_v, hom_degree, &h_u, &h_v)?;
            let iso2 = is_iso_between(module, &s_v, &s_w, hom_degree, &h_v, &h_w)?;
            if iso1 && iso2 {
                piece = Some(CechPiece { degree: d.clone(), dim: h_u.dim, stabilized_at: Some(u) });
                break;
            }
            u += 1;
        }
        out.push(piece.unwrap_or(CechPiece { degree: d, dim: last_dim, stabilized_at: None }));
    }
    Ok(out)
}

fn is_iso_between(
    module: &CyclicModule,
    src: &crate::homology::koszul::KoszulSlice,
    tgt: &crate::homology::koszul::KoszulSlice,
    p: usize,
    h_src: &crate::linalg::FieldHomology,
    h_tgt: &crate::linalg::FieldHomology,
) -> Result<bool, HomologyError> {
    if h_src.dim != h_tgt.dim {
        return Ok(false);
    }
    if h_src.dim == 0 {
        return Ok(true);
    }
    let chain = transition_map(module, src, tgt, p, TransitionKind::Inductive)?;
    match induced_on_homology(&chain, h_src, h_tgt, &tgt.d_in(p))? {
        None => Ok(false),
        Some(mat) => Ok(mat.rank()? == h_src.dim),
    }
}

/// Direct Čech cocomplex of variable localizations: the oracle route.
/// `vars` are the inverted variables (the sequence); requires a free
/// polynomial base ring.
pub fn cech_oracle_dim(
    module: &CyclicModule,
    vars: &[u32],
    i: usize,
    d: &[i32],
) -> Result<usize, HomologyError> {
    let n = vars.len();
    if i > n {
        return Ok(0);
    }
    let domain = module.domain();
    let masks = |t: usize| -> Vec<u32> {
        (0u32..(1 << n)).filter(|m| m.count_ones() as usize == t).collect()
    };
    let alive = |mask: u32| -> bool {
        let inverted: Vec<u32> = (0..n).filter(|j| mask >> j & 1 == 1).map(|j| vars[j]).collect();
        LocalizedModule::new(module, inverted).piece_is_nonzero(d)
    };
    let layer = |t: usize| -> Vec<u32> { masks(t).into_iter().filter(|&m| alive(m)).collect() };
    let map_between = |src: &[u32], tgt: &[u32]| -> ExactMatrix {
        let mut mat = ExactMatrix::zero(domain, tgt.len(), src.len());
        for (col, &s) in src.iter().enumerate() {
            for j in 0..n {
                if s >> j & 1 == 1 {
                    continue;
                }
                let bigger = s | 1 << j;
                if let Some(row) = tgt.iter().position(|&t| t == bigger) {
                    let below = (s & ((1 << j) - 1)).count_ones();
                    let sign = if below % 2 == 0 { 1 } else { -1 };
                    mat.set(row, col, domain.from_i64(sign));
                }
            }
        }
        mat
    };
    let c_prev = if i == 0 { vec![] } else { layer(i - 1) };
    let c_i = layer(i);
    let c_next = if i + 1 > n { vec![] } else { layer(i + 1) };
    let d_in = map_between(&c_prev, &c_i);
    let d_out = map_between(&c_i, &c_next);
    Ok(homology_over_field(&d_in, &d_out)?.dim)
}

/// Ȟ¹ of a single-variable sequence as a tabulated graded module with the
/// action of every ring variable. Dimensions are stored for every window
/// point (zero included), so "absent" always means "outside the window".
pub fn first_local_cohomology_module(
    module: &CyclicModule,
    inverted: u32,
    window: &Window,
) -> GradedModule {
    graded_module_from_rule(module, window, inverted, |loc, base, d| {
        loc.piece_is_nonzero(d) && !base_piece_alive(base, d)
    })
}

/// Γ_{x_v}(M) as a tabulated graded module.
pub fn torsion_graded_module(module: &CyclicModule, inverted: u32, window: &Window) -> GradedModule {
    graded_module_from_rule(module, window, inverted, |loc, base, d| {
        base_piece_alive(base, d) && !loc.piece_is_nonzero(d)
    })
}

fn base_piece_alive(module: &CyclicModule, d: &[i32]) -> bool {
    !module.basis_multi(d).is_empty()
}

fn graded_module_from_rule(
    module: &CyclicModule,
    window: &Window,
    inverted: u32,
    rule: impl Fn(&LocalizedModule, &CyclicModule, &[i32]) -> bool,
) -> GradedModule {
    let loc = LocalizedModule::new(module, [inverted]);
    let mut gm = GradedModule::new(module.domain(), module.nvars());
    let points = window.points();
    for d in &points {
        let dim = usize::from(rule(&loc, module, d));
        gm.dims.insert(d.clone(), dim);
    }
    for d in &points {
        if gm.dim(d) == 0 {
            continue;
        }
        for v in 0..module.nvars() as u32 {
            let to = GradedModule::shift(d, v, 1);
            if gm.dims.get(&to).copied().unwrap_or(0) == 1 {
                gm.actions.insert((v, d.clone()), ExactMatrix::identity(module.domain(), 1));
            }
        }
    }
    gm
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainVerdict {
    /// The chain's trailing maps are isomorphisms inside the tabulated
    /// window, so the colimit value is the far end.
    Certified,
    BoundExhausted,
}

/// The localization (N_w)_d of a tabulated graded module along one variable:
/// colimit of N_d → N_{d+e_w} → …, taken as the far end of the chain inside
/// the window, certified by trailing isomorphisms.
pub fn graded_localization_piece(
    n: &GradedModule,
    w: u32,
    d: &[i32],
) -> Result<(usize, ExactMatrix, ChainVerdict), HomologyError> {
    let mut degrees = vec![d.to_vec()];
    loop {
        let next = GradedModule::shift(degrees.last().unwrap(), w, 1);
        if !n.dims.contains_key(&next) {
            break;
        }
        degrees.push(next);
    }
    let mut composite = ExactMatrix::identity(n.domain, n.dim(d));
    let mut maps = Vec::new();
    for deg in &degrees[..degrees.len().saturating_sub(1)] {
        let step = n.action(w, deg);
        composite = step.mul(&composite)?;
        maps.push(step);
    }
    let far_dim = n.dim(degrees.last().unwrap());
    let verdict = if maps.len() >= 2 {
        let k = maps.len();
        let iso = |m: &ExactMatrix| -> Result<bool, HomologyError> {
            Ok(m.rows == m.cols && m.rank()? == m.rows)
        };
        if iso(&maps[k - 1])? && iso(&maps[k - 2])? {
            ChainVerdict::Certified
        } else {
            ChainVerdict::BoundExhausted
        }
    } else {
        ChainVerdict::BoundExhausted
    };
    Ok((far_dim, composite, verdict))
}

/// Ȟⁱ(x_w, N) for i ∈ {0, 1} of a tabulated graded module: kernel and
/// cokernel of N_d → (N_w)_d.
pub fn graded_cech_principal(
    n: &GradedModule,
    w: u32,
    i: usize,
    d: &[i32],
) -> Result<(usize, ChainVerdict), HomologyError> {
    let (far_dim, composite, verdict) = graded_localization_piece(n, w, d)?;
    match i {
        0 => Ok((composite.kernel_basis()?.len(), verdict)),
        1 => Ok((far_dim - composite.rank()?, verdict)),
        _ => Ok((0, ChainVerdict::Certified)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::mpoly::MonomialRing;
    use crate::scalar::ScalarDomain;

    fn qx() -> CyclicModule {
        CyclicModule::ring_as_module(MonomialRing::polynomial(ScalarDomain::Rational, &["x"]))
    }

    fn qxy() -> CyclicModule {
        CyclicModule::ring_as_module(MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]))
    }

    #[test]
    fn h0_of_torsion_quotient_is_whole_module() {
        // Ȟ⁰((x), Q[x]/(x²)) has total dimension 2
        let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x"]);
        let module = CyclicModule::quotient(ring, vec![Monomial::single(0, 2)]);
        let window = Window::boxed(vec![0], vec![4]);
        let pieces = cech_dims(&module, &[Monomial::var(0)], 0, &window, 8).unwrap();
        let total: usize = pieces.iter().map(|p| p.dim).sum();
        assert_eq!(total, 2);
        for p in &pieces {
            assert!(p.stabilized_at.is_some(), "piece {:?} did not stabilize", p.degree);
        }
    }

    #[test]
    fn h1_of_x_on_polynomial_ring() {
        // Ȟ¹((x), Q[x]): dim 1 in degrees ≤ −1, 0 in degrees ≥ 0
        let module = qx();
        let window = Window::boxed(vec![-4], vec![2]);
        let pieces = cech_dims(&module, &[Monomial::var(0)], 1, &window, 8).unwrap();
        for p in &pieces {
            let expected = usize::from(p.degree[0] <= -1);
            assert_eq!(p.dim, expected, "degree {:?}", p.degree);
            assert!(p.stabilized_at.is_some());
            // cross-validate with the localization oracle
            let oracle = cech_oracle_dim(&module, &[0], 1, &p.degree).unwrap();
            assert_eq!(p.dim, oracle);
        }
    }

    #[test]
    fn h2_of_xy_on_polynomial_plane() {
        // Ȟ²((x,y), Q[x,y]): dim 1 exactly in bidegrees (≤−1, ≤−1)
        let module = qxy();
        let window = Window::boxed(vec![-2, -2], vec![1, 1]);
        let seq = [Monomial::var(0), Monomial::var(1)];
        let pieces = cech_dims(&module, &seq, 2, &window, 8).unwrap();
        for p in &pieces {
            let expected = usize::from(p.degree[0] <= -1 && p.degree[1] <= -1);
            assert_eq!(p.dim, expected, "degree {:?}", p.degree);
            let oracle = cech_oracle_dim(&module, &[0, 1], 2, &p.degree).unwrap();
            assert_eq!(p.dim, oracle);
        }
        // Ȟ⁰ and Ȟ¹ vanish on the domain
        for i in [0usize, 1] {
            for p in cech_dims(&module, &seq, i, &window, 8).unwrap() {
                assert_eq!(p.dim, 0, "H^{i} at {:?}", p.degree);
            }
        }
    }

    #[test]
    fn graded_h1_module_of_x_on_plane() {
        // N = Ȟ¹((x), Q[x,y]) has basis x^{-k}y^m (k ≥ 1, m ≥ 0) and the
        // y-chain stabilizes; Ȟ¹(y, N) is 1-dimensional exactly in the
        // negative quadrant, matching Ȟ²((x,y), Q[x,y])
        let module = qxy();
        let window = Window::boxed(vec![-6, -6], vec![2, 8]);
        let n = first_local_cohomology_module(&module, 0, &window);
        assert_eq!(n.dim(&[-1, 0]), 1);
        assert_eq!(n.dim(&[-1, -1]), 0);
        assert_eq!(n.dim(&[0, 2]), 0);
        for d in Window::boxed(vec![-3, -3], vec![0, 0]).points() {
            let (h1, verdict) = graded_cech_principal(&n, 1, 1, &d).unwrap();
            assert_eq!(verdict, ChainVerdict::Certified, "at {d:?}");
            let expected = usize::from(d[0] <= -1 && d[1] <= -1);
            assert_eq!(h1, expected, "at {d:?}");
            let (h0, _) = graded_cech_principal(&n, 1, 0, &d).unwrap();
            assert_eq!(h0, 0, "Γ_y of a y-torsion-free module at {d:?}");
        }
    }

    #[test]
    fn stabilization_tripwire_ten_more_powers() {
        // once a piece stabilizes, ten further powers give the same dims —
        // a regression tripwire for the consecutive-iso heuristic
        use crate::homology::koszul::{koszul_slice, KoszulComplexSpec, Normalization};
        let module = qx();
        let seq = vec![Monomial::var(0)];
        for d in [vec![-2], vec![-1], vec![0]] {
            let piece = cech_dims(&module, &seq, 1, &Window::boxed(d.clone(), d.clone()), 8)
                .unwrap()
                .remove(0);
            let u0 = piece.stabilized_at.expect("piece stabilizes");
            for u in u0..=u0 + 10 {
                let spec = KoszulComplexSpec::new(seq.clone(), u).unwrap();
                let slice = koszul_slice(&module, &spec, &d, Normalization::Colimit).unwrap();
                assert_eq!(slice.homology(0).unwrap().dim, piece.dim, "power {u} at {d:?}");
            }
        }
    }

    #[test]
    fn torsion_graded_module_matches_kernel() {
        // Γ_x(Q[x,y]/(x²)) = the whole module
        let ring = MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"]);
        let module = CyclicModule::quotient(ring, vec![Monomial::single(0, 2)]);
        let window = Window::boxed(vec![0, 0], vec![3, 3]);
        let g = torsion_graded_module(&module, 0, &window);
        for d in window.points() {
            assert_eq!(g.dim(&d), module.basis_multi(&d).len(), "at {d:?}");
        }
    }
}
