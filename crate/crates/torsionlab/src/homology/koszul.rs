//! Koszul complexes of monomial sequences, sliced per multidegree, with the
//! transition maps between powers of the sequence.
//!
//! Two degree normalizations are used. The standard one (e_S sits in degree
//! u·Σ_{j∈S} deg a_j) makes the inverse-system maps
//! K_•(aᵛ) → K_•(aᵘ), e_S ↦ (∏_{j∈S} a_j^{v−u})·e_S degree-preserving; the
//! colimit one (e_S sits in degree −u·Σ_{j∉S} deg a_j) does the same for the
//! inductive maps e_S ↦ (∏_{j∉S} a_j^{v−u})·e_S whose colimit computes Čech
//! cohomology. Differentials compose to zero by construction and this is
//! asserted on every slice.

use crate::graded::{CyclicModule, Multidegree};
use crate::linalg::{homology_over_field, ExactMatrix, FieldHomology, LinalgError};
use crate::rings::monomial::Monomial;
use crate::torsion::TorsionError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Ring(#[from] crate::rings::RingError),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error("sequence is malformed: {0}")]
    MalformedSequence(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("bound exhausted: {0}")]
    BoundExhausted(String),
}

/// A Koszul complex descriptor: the monomial sequence and the power u
/// (the complex is built on a^u = (a_j^u)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulComplexSpec {
    pub sequence: Vec<Monomial>,
    pub power: u32,
}

impl KoszulComplexSpec {
    pub fn new(sequence: Vec<Monomial>, power: u32) -> Result<Self, HomologyError> {
        if sequence.is_empty() {
            return Err(HomologyError::MalformedSequence("empty sequence".into()));
        }
        if power == 0 {
            return Err(HomologyError::MalformedSequence("power must be >= 1".into()));
        }
        Ok(KoszulComplexSpec { sequence, power })
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// deg e_S = u·Σ_{j∈S} deg a_j (inverse systems).
    Standard,
    /// deg e_S = −u·Σ_{j∉S} deg a_j (inductive systems / Čech colimit).
    Colimit,
}

/// One multidegree slice of K_•(aᵘ, M): bases labelled by (subset mask,
/// module monomial) and the differentials between consecutive homological
/// degrees.
#[derive(Debug, Clone)]
pub struct KoszulSlice {
    pub spec: KoszulComplexSpec,
    pub normalization: Normalization,
    pub degree: Multidegree,
    /// bases[p] = basis of K_p, p = 0..=n.
    pub bases: Vec<Vec<(u32, Monomial)>>,
    /// diffs[p]: K_p → K_{p−1} for p = 1..=n.
    pub diffs: Vec<ExactMatrix>,
}

fn subset_degree(spec: &KoszulComplexSpec, mask: u32, nvars: usize, normalization: Normalization) -> Vec<i32> {
    let mut d = vec![0i32; nvars];
    for (j, a) in spec.sequence.iter().enumerate() {
        let in_s = mask >> j & 1 == 1;
        let counted = match normalization {
            Normalization::Standard => in_s,
            Normalization::Colimit => !in_s,
        };
        if counted {
            for (v, e) in a.iter() {
                let delta = (e * spec.power) as i32;
                match normalization {
                    Normalization::Standard => d[v as usize] += delta,
                    Normalization::Colimit => d[v as usize] -= delta,
                }
            }
        }
    }
    d
}

fn masks_of_size(n: usize, p: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == p).collect()
}

fn sign_of(mask: u32, j: usize) -> i64 {
    let below = (mask & ((1 << j) - 1)).count_ones();
    if below.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds the slice of K_•(aᵘ, M) at one multidegree.
pub fn koszul_slice(
    module: &CyclicModule,
    spec: &KoszulComplexSpec,
    degree: &Multidegree,
    normalization: Normalization,
) -> Result<KoszulSlice, HomologyError> {
    let n = spec.len();
    assert!(n <= 8, "sequence length limited to 8");
    let nvars = module.nvars();
    let domain = module.domain();
    let mut bases: Vec<Vec<(u32, Monomial)>> = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut basis = Vec::new();
        for mask in masks_of_size(n, p) {
            let shift = subset_degree(spec, mask, nvars, normalization);
            let mdeg: Multidegree = degree.iter().zip(&shift).map(|(a, b)| a - b).collect();
            for m in module.basis_multi(&mdeg) {
                basis.push((mask, m));
            }
        }
        bases.push(basis);
    }
    let mut diffs = Vec::with_capacity(n);
    for p in 1..=n {
        let src = &bases[p];
        let tgt = &bases[p - 1];
        let mut mat = ExactMatrix::zero(domain, tgt.len(), src.len());
        for (col, (mask, m)) in src.iter().enumerate() {
            for j in 0..n {
                if mask >> j & 1 == 0 {
                    continue;
                }
                let new_mask = mask & !(1 << j);
                let prod = spec.sequence[j].pow(spec.power).mul(m);
                if module.monomial_is_zero(&prod) {
                    continue;
                }
                if let Some(row) = tgt.iter().position(|(tm, tmon)| *tm == new_mask && *tmon == prod) {
                    let s = domain.from_i64(sign_of(*mask, j));
                    let v = mat.get(row, col).add(&s);
                    mat.set(row, col, v);
                }
            }
        }
        diffs.push(mat);
    }
    // d ∘ d = 0, asserted on every slice
    for p in 1..n {
        let composite = diffs[p - 1].mul(&diffs[p])?;
        if !composite.is_zero() {
            return Err(LinalgError::CompositionNotZero.into());
        }
    }
    Ok(KoszulSlice {
        spec: spec.clone(),
        normalization,
        degree: degree.clone(),
        bases,
        diffs,
    })
}

impl KoszulSlice {
    pub fn dim(&self, p: usize) -> usize {
        self.bases.get(p).map_or(0, |b| b.len())
    }

    /// Incoming differential of homological degree i (from K_{i+1}).
    pub fn d_in(&self, i: usize) -> ExactMatrix {
        let n = self.spec.len();
        if i < n {
            self.diffs[i].clone()
        } else {
            ExactMatrix::zero(self.domain(), self.dim(i), 0)
        }
    }

    /// Outgoing differential of homological degree i (into K_{i−1}).
    pub fn d_out(&self, i: usize) -> ExactMatrix {
        if i == 0 {
            ExactMatrix::zero(self.domain(), 0, self.dim(0))
        } else {
            self.diffs[i - 1].clone()
        }
    }

    fn domain(&self) -> crate::scalar::ScalarDomain {
        // module domains are fields here
        self.diffs
            .first()
            .map(|m| m.domain)
            .unwrap_or(crate::scalar::ScalarDomain::Rational)
    }

    pub fn homology(&self, i: usize) -> Result<FieldHomology, HomologyError> {
        Ok(homology_over_field(&self.d_in(i), &self.d_out(i))?)
    }
}

/// Chain map between two slices of the same multidegree for powers u ≤ v.
/// `Inverse`: K_•(aᵛ) → K_•(aᵘ) via e_S ↦ ∏_{j∈S} a_j^{v−u}·e_S (standard
/// normalization); `Inductive`: K_•(aᵘ) → K_•(aᵛ) via the complementary
/// multiplication (colimit normalization).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionKind {
    Inverse,
    Inductive,
}

pub fn transition_map(
    module: &CyclicModule,
    src: &KoszulSlice,
    tgt: &KoszulSlice,
    p: usize,
    kind: TransitionKind,
) -> Result<ExactMatrix, HomologyError> {
    let (u, v, expected_norm) = match kind {
        TransitionKind::Inverse => (tgt.spec.power, src.spec.power, Normalization::Standard),
        TransitionKind::Inductive => (src.spec.power, tgt.spec.power, Normalization::Colimit),
    };
    if v < u || src.normalization != expected_norm || tgt.normalization != expected_norm {
        return Err(HomologyError::MalformedSequence(
            "transition needs matching normalizations and increasing powers".into(),
        ));
    }
    let n = src.spec.len();
    let diff = v - u;
    let src_basis = &src.bases[p];
    let tgt_basis = &tgt.bases[p];
    let domain = module.domain();
    let mut mat = ExactMatrix::zero(domain, tgt_basis.len(), src_basis.len());
    for (col, (mask, m)) in src_basis.iter().enumerate() {
        let mut factor = Monomial::one();
        for j in 0..n {
            let in_s = mask >> j & 1 == 1;
            let multiply = match kind {
                TransitionKind::Inverse => in_s,
                TransitionKind::Inductive => !in_s,
            };
            if multiply {
                factor = factor.mul(&src.spec.sequence[j].pow(diff));
            }
        }
        let prod = factor.mul(m);
        if module.monomial_is_zero(&prod) {
            continue;
        }
        if let Some(row) = tgt_basis.iter().position(|(tm, tmon)| tm == mask && *tmon == prod) {
            mat.set(row, col, domain.one());
        }
    }
    Ok(mat)
}

/// Is the induced map on homology zero? Each source representative must map
/// to a boundary of the target.
pub fn zero_on_homology(
    chain_map: &ExactMatrix,
    src_homology: &FieldHomology,
    tgt_d_in: &ExactMatrix,
) -> Result<bool, HomologyError> {
    for rep in &src_homology.representatives {
        let image = chain_map.apply(rep)?;
        if !tgt_d_in.contains_in_span(&image)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Matrix of the induced map on homology in the chosen representative bases;
/// None if an image fails to be a cycle-with-coordinates (which would signal
/// a broken chain map).
pub fn induced_on_homology(
    chain_map: &ExactMatrix,
    src_h: &FieldHomology,
    tgt_h: &FieldHomology,
    tgt_d_in: &ExactMatrix,
) -> Result<Option<ExactMatrix>, HomologyError> {
    let domain = chain_map.domain;
    let tgt_dim_ambient = chain_map.rows;
    let mut cols = Vec::new();
    // solve [reps | boundaries]·x = image; the reps block of x is unique
    let rep_mat = ExactMatrix::from_columns(domain, tgt_dim_ambient, &tgt_h.representatives);
    let solver = rep_mat.hcat(tgt_d_in)?;
    for rep in &src_h.representatives {
        let image = chain_map.apply(rep)?;
        match solver.solve(&image)? {
            None => return Ok(None),
            Some(x) => cols.push(x[..tgt_h.dim].to_vec()),
        }
    }
    Ok(Some(ExactMatrix::from_columns(domain, tgt_h.dim, &cols)))
}

/// Koszul homology dims of a^u on the window, per multidegree.
pub fn koszul_homology_dims(
    module: &CyclicModule,
    spec: &KoszulComplexSpec,
    i: usize,
    window: &crate::graded::Window,
) -> Result<Vec<(Multidegree, usize)>, HomologyError> {
    let mut out = Vec::new();
    for d in window.points() {
        let slice = koszul_slice(module, spec, &d, Normalization::Standard)?;
        out.push((d, slice.homology(i)?.dim));
    }
    Ok(out)
}

/// Koszul homology of an integer sequence on ℤ itself (no grading): returns
/// the presentation of H_i for i = 0..=n via Smith normal form.
pub fn koszul_homology_integers(seq: &[i64]) -> Result<Vec<crate::linalg::IntegerHomology>, HomologyError> {
    use crate::linalg::homology_over_integers;
    use crate::scalar::ScalarDomain;
    let n = seq.len();
    assert!(n <= 8);
    let domain = ScalarDomain::Integer;
    // K_p = Z^(n choose p) with the usual signs
    let mut diffs = Vec::new();
    for p in 1..=n {
        let src = masks_of_size(n, p);
        let tgt = masks_of_size(n, p - 1);
        let mut mat = ExactMatrix::zero(domain, tgt.len(), src.len());
        for (col, mask) in src.iter().enumerate() {
            for j in 0..n {
                if mask >> j & 1 == 0 {
                    continue;
                }
                let new_mask = mask & !(1 << j);
                let row = tgt.iter().position(|t| *t == new_mask).unwrap();
                let val = domain.from_i64(sign_of(*mask, j) * seq[j]);
                let cur = mat.get(row, col).add(&val);
                mat.set(row, col, cur);
            }
        }
        diffs.push(mat);
    }
    let dim_p = |p: usize| masks_of_size(n, p).len();
    let mut out = Vec::new();
    for i in 0..=n {
        let d_in = if i < n {
            diffs[i].clone()
        } else {
            ExactMatrix::zero(domain, dim_p(i), 0)
        };
        let d_out = if i == 0 {
            ExactMatrix::zero(domain, 0, dim_p(0))
        } else {
            diffs[i - 1].clone()
        };
        out.push(homology_over_integers(&d_in, &d_out)?);
    }
    Ok(out)
}

/// One multidegree slice of the Koszul cocomplex Hom(K_•(aᵘ), M): basis
/// e*_S ⊗ m in cohomological degree |S| with deg e*_S = −u·Σ_{j∈S} deg a_j,
/// and differential e*_S ↦ Σ_{j∉S} ± a_j^u e*_{S∪j}. Under e_S ↦ ±e*_{S^c}
/// there is an isomorphism H_i(K_•)_d ≅ H^{n−i}(K^•)_{d − u·deg(a_1⋯a_n)},
/// which the duality sanity check exercises dimensionwise.
#[derive(Debug, Clone)]
pub struct KoszulCoSlice {
    pub bases: Vec<Vec<(u32, Monomial)>>,
    /// codiffs[p]: K^p → K^{p+1} for p = 0..n.
    pub codiffs: Vec<ExactMatrix>,
}

pub fn koszul_coslice(
    module: &CyclicModule,
    spec: &KoszulComplexSpec,
    degree: &Multidegree,
) -> Result<KoszulCoSlice, HomologyError> {
    let n = spec.len();
    let domain = module.domain();
    let mut bases = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut basis = Vec::new();
        for mask in masks_of_size(n, p) {
            // deg m = degree + u·Σ_{j∈S} deg a_j
            let mut mdeg = degree.clone();
            for (j, a) in spec.sequence.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (v, e) in a.iter() {
                        mdeg[v as usize] += (e * spec.power) as i32;
                    }
                }
            }
            for m in module.basis_multi(&mdeg) {
                basis.push((mask, m));
            }
        }
        bases.push(basis);
    }
    let mut codiffs = Vec::with_capacity(n);
    for p in 0..n {
        let src = &bases[p];
        let tgt = &bases[p + 1];
        let mut mat = ExactMatrix::zero(domain, tgt.len(), src.len());
        for (col, (mask, m)) in src.iter().enumerate() {
            for j in 0..n {
                if mask >> j & 1 == 1 {
                    continue;
                }
                let new_mask = mask | 1 << j;
                let prod = spec.sequence[j].pow(spec.power).mul(m);
                if module.monomial_is_zero(&prod) {
                    continue;
                }
                if let Some(row) = tgt.iter().position(|(tm, tmon)| *tm == new_mask && *tmon == prod) {
                    let s = domain.from_i64(sign_of(new_mask, j));
                    let v = mat.get(row, col).add(&s);
                    mat.set(row, col, v);
                }
            }
        }
        codiffs.push(mat);
    }
    for p in 0..n.saturating_sub(1) {
        if !codiffs[p + 1].mul(&codiffs[p])?.is_zero() {
            return Err(LinalgError::CompositionNotZero.into());
        }
    }
    Ok(KoszulCoSlice { bases, codiffs })
}

impl KoszulCoSlice {
    pub fn cohomology_dim(&self, i: usize) -> Result<usize, HomologyError> {
        let n = self.codiffs.len();
        let domain = self
            .codiffs
            .first()
            .map(|m| m.domain)
            .unwrap_or(crate::scalar::ScalarDomain::Rational);
        let d_in = if i == 0 {
            ExactMatrix::zero(domain, self.bases[0].len(), 0)
        } else {
            self.codiffs[i - 1].clone()
        };
        let d_out = if i < n {
            self.codiffs[i].clone()
        } else {
            ExactMatrix::zero(domain, 0, self.bases[n].len())
        };
        Ok(homology_over_field(&d_in, &d_out)?.dim)
    }
}
