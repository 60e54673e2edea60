//! Graded pieces of cyclic monomial modules, rendered as exact matrices.
//!
//! A cyclic module R/I over a monomial-basis ring has a monomial basis in
//! each (multi)degree, and multiplication by a monomial is a 0/1 matrix
//! between pieces. Everything downstream — colon submodules, torsion
//! functors, Koszul and Čech slices — is assembled from these pieces, so the
//! only linear algebra that ever runs is exact elimination on such matrices.

use crate::linalg::ExactMatrix;
use crate::rings::monomial::Monomial;
use crate::rings::mpoly::MonomialRing;
use crate::scalar::ScalarDomain;
use std::collections::{BTreeMap, BTreeSet};

pub type Multidegree = Vec<i32>;

/// A box of multidegrees, with an optional cap on the total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub lo: Multidegree,
    pub hi: Multidegree,
    pub total_cap: Option<i32>,
}

impl Window {
    pub fn boxed(lo: Multidegree, hi: Multidegree) -> Self {
        assert_eq!(lo.len(), hi.len());
        Window { lo, hi, total_cap: None }
    }

    /// All non-negative multidegrees with total degree ≤ cap.
    pub fn nonneg_total(nvars: usize, cap: i32) -> Self {
        Window {
            lo: vec![0; nvars],
            hi: vec![cap; nvars],
            total_cap: Some(cap),
        }
    }

    /// Symmetric box |d_i| ≤ radius.
    pub fn symmetric(nvars: usize, radius: i32) -> Self {
        Window {
            lo: vec![-radius; nvars],
            hi: vec![radius; nvars],
            total_cap: None,
        }
    }

    pub fn nvars(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, d: &[i32]) -> bool {
        d.len() == self.lo.len()
            && d.iter().zip(&self.lo).all(|(x, l)| x >= l)
            && d.iter().zip(&self.hi).all(|(x, h)| x <= h)
            && self.total_cap.is_none_or(|c| d.iter().sum::<i32>() <= c)
    }

    pub fn points(&self) -> Vec<Multidegree> {
        let mut out = Vec::new();
        let n = self.nvars();
        if n == 0 {
            return vec![vec![]];
        }
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return out;
        }
        let mut cur = self.lo.clone();
        loop {
            if self.total_cap.is_none_or(|c| cur.iter().sum::<i32>() <= c) {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if cur[i] < self.hi[i] {
                    cur[i] += 1;
                    for j in 0..i {
                        cur[j] = self.lo[j];
                    }
                    break;
                }
                i += 1;
            }
        }
    }
}

/// Cyclic graded module R/I: the ring modulo a list of monomial relations
/// (on top of whatever rewrite system the ring itself carries).
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicModule {
    pub ring: MonomialRing,
    pub relations: Vec<Monomial>,
}

impl CyclicModule {
    pub fn ring_as_module(ring: MonomialRing) -> Self {
        CyclicModule { ring, relations: vec![] }
    }

    pub fn quotient(ring: MonomialRing, relations: Vec<Monomial>) -> Self {
        CyclicModule { ring, relations }
    }

    pub fn domain(&self) -> ScalarDomain {
        self.ring.scalar
    }

    pub fn nvars(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn monomial_is_zero(&self, m: &Monomial) -> bool {
        self.ring.monomial_is_zero(m) || self.relations.iter().any(|r| r.divides(m))
    }

    /// Basis monomials of the piece of one total degree.
    pub fn basis_total(&self, degree: u32) -> Vec<Monomial> {
        self.ring
            .monomials_of_degree(degree)
            .into_iter()
            .filter(|m| !self.relations.iter().any(|r| r.divides(m)))
            .collect()
    }

    /// Basis of one multidegree piece: at most one monomial.
    pub fn basis_multi(&self, d: &[i32]) -> Vec<Monomial> {
        assert_eq!(d.len(), self.nvars());
        if d.iter().any(|&x| x < 0) {
            return vec![];
        }
        let m = Monomial::from_pairs(
            &d.iter()
                .enumerate()
                .map(|(i, &e)| (i as u32, e as u32))
                .collect::<Vec<_>>(),
        );
        if self.monomial_is_zero(&m) {
            vec![]
        } else {
            vec![m]
        }
    }

    /// Multiplication by a monomial g from the total-degree piece `from` to
    /// the piece at `from + deg g`, as a matrix over the ring's field.
    pub fn mult_map_total(&self, g: &Monomial, from: u32) -> ExactMatrix {
        let src = self.basis_total(from);
        let tgt = self.basis_total(from + g.total_degree());
        self.mult_map_between(g, &src, &tgt)
    }

    /// Multiplication by g between two multidegree pieces.
    pub fn mult_map_multi(&self, g: &Monomial, from: &[i32]) -> ExactMatrix {
        let src = self.basis_multi(from);
        let to: Multidegree = from
            .iter()
            .enumerate()
            .map(|(i, &x)| x + g.exponent_of(i as u32) as i32)
            .collect();
        let tgt = self.basis_multi(&to);
        self.mult_map_between(g, &src, &tgt)
    }

    fn mult_map_between(&self, g: &Monomial, src: &[Monomial], tgt: &[Monomial]) -> ExactMatrix {
        let mut mat = ExactMatrix::zero(self.domain(), tgt.len(), src.len());
        for (j, m) in src.iter().enumerate() {
            let prod = g.mul(m);
            if self.monomial_is_zero(&prod) {
                continue;
            }
            if let Some(i) = tgt.iter().position(|t| *t == prod) {
                mat.set(i, j, self.domain().one());
            }
        }
        mat
    }
}

/// The localization of a cyclic module at a set of variables, piecewise.
/// Only defined over free polynomial rings (relations as explicit monomials);
/// each ℤ-multidegree piece is 0- or 1-dimensional.
#[derive(Debug, Clone)]
pub struct LocalizedModule<'a> {
    pub base: &'a CyclicModule,
    pub inverted: BTreeSet<u32>,
}

impl<'a> LocalizedModule<'a> {
    pub fn new(base: &'a CyclicModule, inverted: impl IntoIterator<Item = u32>) -> Self {
        assert!(base.ring.rewrite.is_none(), "localization needs a free polynomial base ring");
        LocalizedModule { base, inverted: inverted.into_iter().collect() }
    }

    /// Is the piece at d nonzero? The Laurent monomial x^d survives iff its
    /// exponents outside the inverted set are non-negative and no relation
    /// divides it after the inverted variables are cleared.
    pub fn piece_is_nonzero(&self, d: &[i32]) -> bool {
        for (i, &e) in d.iter().enumerate() {
            if e < 0 && !self.inverted.contains(&(i as u32)) {
                return false;
            }
        }
        for rel in &self.base.relations {
            let kills = rel
                .iter()
                .all(|(v, e)| self.inverted.contains(&v) || d[v as usize] >= e as i32);
            if kills {
                return false;
            }
        }
        true
    }

    pub fn dim(&self, d: &[i32]) -> usize {
        usize::from(self.piece_is_nonzero(d))
    }
}

/// An explicitly tabulated graded module over a window: piece dimensions
/// plus the action of each variable, for modules (like first local
/// cohomologies) that are not cyclic.
#[derive(Debug, Clone)]
pub struct GradedModule {
    pub domain: ScalarDomain,
    pub nvars: usize,
    pub dims: BTreeMap<Multidegree, usize>,
    /// (variable, source degree) → matrix into source + e_var.
    pub actions: BTreeMap<(u32, Multidegree), ExactMatrix>,
}

impl GradedModule {
    pub fn new(domain: ScalarDomain, nvars: usize) -> Self {
        GradedModule { domain, nvars, dims: BTreeMap::new(), actions: BTreeMap::new() }
    }

    pub fn dim(&self, d: &[i32]) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    pub fn action(&self, var: u32, d: &[i32]) -> ExactMatrix {
        let mut to = d.to_vec();
        to[var as usize] += 1;
        match self.actions.get(&(var, d.to_vec())) {
            Some(m) => m.clone(),
            None => ExactMatrix::zero(self.domain, self.dim(&to), self.dim(d)),
        }
    }

    pub fn shift(d: &[i32], var: u32, by: i32) -> Multidegree {
        let mut to = d.to_vec();
        to[var as usize] += by;
        to
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::monomial::RewriteSystem;

    fn qxy() -> MonomialRing {
        MonomialRing::polynomial(ScalarDomain::Rational, &["x", "y"])
    }

    #[test]
    fn window_points() {
        let w = Window::boxed(vec![-1, -1], vec![1, 1]);
        assert_eq!(w.points().len(), 9);
        let w = Window::nonneg_total(2, 2);
        // (0,0),(1,0),(0,1),(2,0),(1,1),(0,2)
        assert_eq!(w.points().len(), 6);
        assert!(w.contains(&[1, 1]));
        assert!(!w.contains(&[2, 1]));
    }

    #[test]
    fn cyclic_module_bases() {
        let m = CyclicModule::quotient(qxy(), vec![Monomial::from_pairs(&[(0, 1), (1, 1)])]);
        // degree 2 of Q[x,y]/(xy): x^2, y^2
        assert_eq!(m.basis_total(2).len(), 2);
        assert_eq!(m.basis_multi(&[2, 0]).len(), 1);
        assert_eq!(m.basis_multi(&[1, 1]).len(), 0);
        assert_eq!(m.basis_multi(&[-1, 0]).len(), 0);
    }

    #[test]
    fn multiplication_matrices() {
        let m = CyclicModule::quotient(qxy(), vec![Monomial::from_pairs(&[(0, 1), (1, 1)])]);
        let x = Monomial::var(0);
        // degree 1 basis {x, y} -> degree 2 basis {x^2, y^2}: x*x = x^2, x*y = 0
        let mat = m.mult_map_total(&x, 1);
        assert_eq!(mat.rows, 2);
        assert_eq!(mat.cols, 2);
        let kernel = mat.kernel_basis().unwrap();
        assert_eq!(kernel.len(), 1); // y is killed
    }

    #[test]
    fn localized_pieces() {
        let m = CyclicModule::ring_as_module(qxy());
        let mx = LocalizedModule::new(&m, [0u32]);
        assert!(mx.piece_is_nonzero(&[-3, 0]));
        assert!(!mx.piece_is_nonzero(&[-3, -1]));
        // relation x^2 y kills pieces with y-exponent >= 1 once x is inverted
        let q = CyclicModule::quotient(qxy(), vec![Monomial::from_pairs(&[(0, 2), (1, 1)])]);
        let qx = LocalizedModule::new(&q, [0u32]);
        assert!(!qx.piece_is_nonzero(&[-3, 1]));
        assert!(qx.piece_is_nonzero(&[-3, 0]));
        assert!(qx.piece_is_nonzero(&[5, 0]));
        assert!(!qx.piece_is_nonzero(&[5, 2]));
    }

    #[test]
    fn rising_powers_module_pieces() {
        let ring = MonomialRing {
            scalar: ScalarDomain::Rational,
            vars: crate::rings::mpoly::VarSet::Indexed { prefix: "Y".into(), bound: 6 },
            rewrite: Some(RewriteSystem::DistinctProductsAndRisingPowers),
        };
        let m = CyclicModule::ring_as_module(ring);
        // degree d basis: Y_i^d for d <= i <= 6
        for d in 1..=6u32 {
            assert_eq!(m.basis_total(d).len(), (6 - d + 1) as usize);
        }
        assert_eq!(m.basis_total(7).len(), 0);
    }
}
