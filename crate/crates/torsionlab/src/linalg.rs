//! Dense exact linear algebra: echelon forms and kernels over fields,
//! Smith normal form over ℤ, and homology of two-step complexes.
//!
//! Everything here is deterministic: pivot choices depend only on the input,
//! so repeated runs produce identical bases and identical transforms.

use crate::scalar::{Scalar, ScalarDomain, ScalarError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("domain {0} is not a field")]
    DomainNotAField(ScalarDomain),
    #[error("expected integer domain, got {0}")]
    DomainNotInteger(ScalarDomain),
    #[error("matrix shapes are incompatible: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("composition of differentials is not zero (malformed complex)")]
    CompositionNotZero,
    #[error("entry count {0} does not match {1}x{2}")]
    BadEntryCount(usize, usize, usize),
}

/// Rectangular matrix over a declared exact scalar domain, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub domain: ScalarDomain,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(domain: ScalarDomain, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::BadEntryCount(entries.len(), rows, cols));
        }
        for e in &entries {
            if e.domain() != domain {
                return Err(ScalarError::DomainMismatch(domain, e.domain()).into());
            }
        }
        Ok(ExactMatrix { domain, rows, cols, entries })
    }

    pub fn zero(domain: ScalarDomain, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            domain,
            rows,
            cols,
            entries: vec![domain.zero(); rows * cols],
        }
    }

    pub fn identity(domain: ScalarDomain, n: usize) -> Self {
        let mut m = Self::zero(domain, n, n);
        for i in 0..n {
            m.set(i, i, domain.one());
        }
        m
    }

    /// Builds a matrix from integer literals, mapped into `domain`.
    pub fn from_i64(domain: ScalarDomain, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in *row {
                entries.push(domain.from_i64(v));
            }
        }
        ExactMatrix { domain, rows: r, cols: c, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.domain(), self.domain);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.domain, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        if self.domain != other.domain {
            return Err(ScalarError::DomainMismatch(self.domain, other.domain).into());
        }
        let mut out = Self::zero(self.domain, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, v.len(), 1));
        }
        let mut out = vec![self.domain.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[j]));
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Self::zero(self.domain, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Vertical concatenation [self; other].
    pub fn vcat(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(ExactMatrix {
            domain: self.domain,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn from_columns(domain: ScalarDomain, dim: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zero(domain, dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    fn require_field(&self) -> Result<(), LinalgError> {
        if !self.domain.is_field() {
            return Err(LinalgError::DomainNotAField(self.domain));
        }
        Ok(())
    }

    /// Row-reduces in place; returns pivot columns. Field domains only.
    /// Rows are gcd-normalized over ℚ to keep entries small.
    fn row_reduce(&mut self) -> Result<Vec<usize>, LinalgError> {
        self.require_field()?;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            // first nonzero entry at or below `row`
            let mut pivot = None;
            for i in row..self.rows {
                if !self.get(i, col).is_zero() {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            self.swap_rows(row, p);
            let inv_pivot = self.domain.one().div(self.get(row, col))?;
            self.scale_row(row, &inv_pivot);
            for i in 0..self.rows {
                if i != row && !self.get(i, col).is_zero() {
                    let factor = self.get(i, col).neg();
                    self.add_scaled_row(i, row, &factor);
                }
            }
            if self.domain == ScalarDomain::Rational {
                self.normalize_rational_row(row);
                // re-scale so the pivot is 1 again after normalization
                let inv = self.domain.one().div(self.get(row, col))?;
                self.scale_row(row, &inv);
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        Ok(pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(i, j).mul(factor);
            self.set(i, j, v);
        }
    }

    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(dst, j).add(&self.get(src, j).mul(factor));
            self.set(dst, j, v);
        }
    }

    /// Clears denominators and divides out the content of a rational row.
    fn normalize_rational_row(&mut self, i: usize) {
        let mut lcm = BigInt::one();
        for j in 0..self.cols {
            if let Scalar::Rational(r) = self.get(i, j) {
                if !r.is_zero() {
                    lcm = num_integer::lcm(lcm, r.denom().clone());
                }
            }
        }
        let mut gcd = BigInt::zero();
        for j in 0..self.cols {
            if let Scalar::Rational(r) = self.get(i, j) {
                let scaled = r.numer() * (&lcm / r.denom());
                gcd = num_integer::gcd(gcd, scaled);
            }
        }
        if gcd.is_zero() {
            return;
        }
        let factor = Scalar::Rational(num_rational::BigRational::new(lcm, gcd));
        self.scale_row(i, &factor);
    }

    pub fn rank(&self) -> Result<usize, LinalgError> {
        let mut m = self.clone();
        Ok(m.row_reduce()?.len())
    }

    /// Basis of the right kernel {v : M·v = 0}; field domains only.
    /// Returns cols − rank vectors, one per free column, deterministically.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Scalar>>, LinalgError> {
        self.require_field()?;
        let mut m = self.clone();
        let pivots = m.row_reduce()?;
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![self.domain.zero(); self.cols];
            vec[free] = self.domain.one();
            for (c, rowidx) in pivot_set.iter().enumerate() {
                if let Some(r) = rowidx {
                    // pivot entry is 1, so coefficient is -m[r][free] / 1
                    vec[c] = m.get(*r, free).neg();
                }
            }
            basis.push(vec);
        }
        Ok(basis)
    }

    /// One exact solution of self·x = b over a field (free variables set to
    /// zero), or None if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        self.require_field()?;
        if b.len() != self.rows {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, b.len(), 1));
        }
        let rhs = ExactMatrix::from_columns(self.domain, self.rows, std::slice::from_ref(&b.to_vec()));
        let mut aug = self.hcat(&rhs)?;
        let pivots = aug.row_reduce()?;
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.domain.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            // pivot is normalized to 1
            x[col] = aug.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Is v in the column span?
    pub fn contains_in_span(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.solve(v)?.is_some())
    }

    /// Exact determinant over ℤ via fraction-free Bareiss elimination.
    pub fn det_integer(&self) -> Result<BigInt, LinalgError> {
        if self.domain != ScalarDomain::Integer {
            return Err(LinalgError::DomainNotInteger(self.domain));
        }
        if self.rows != self.cols {
            return Err(LinalgError::ShapeMismatch(self.rows, self.cols, self.cols, self.rows));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match self.get(i, j) {
                        Scalar::Integer(v) => v.clone(),
                        _ => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[i][k].is_zero());
                match swap {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * a[n - 1][n - 1].clone())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation: u·m·v = d with u, v unimodular
/// and d diagonal, d_i ≥ 0, d_i | d_{i+1}.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub u: ExactMatrix,
    pub d: ExactMatrix,
    pub v: ExactMatrix,
}

impl SmithNormalForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n)
            .map(|i| match self.d.get(i, i) {
                Scalar::Integer(v) => v.clone(),
                _ => unreachable!(),
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

struct SnfState {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = &self.a[src][j] * q;
            self.a[dst][j] += t;
        }
        for j in 0..self.rows {
            let t = &self.u[src][j] * q;
            self.u[dst][j] += t;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = &self.a[i][src] * q;
            self.a[i][dst] += t;
        }
        for i in 0..self.cols {
            let t = &self.v[i][src] * q;
            self.v[i][dst] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self.a[i][j] = -self.a[i][j].clone();
        }
        for j in 0..self.rows {
            self.u[i][j] = -self.u[i][j].clone();
        }
    }

    /// Position of the nonzero entry of minimal absolute value in the
    /// trailing submatrix starting at (t, t).
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if self.a[i][j].is_zero() {
                    continue;
                }
                let abs = self.a[i][j].abs();
                match &best {
                    Some((_, _, b)) if *b <= abs => {}
                    _ => best = Some((i, j, abs)),
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Smith normal form over ℤ by gcd row/column reduction with pivot selection
/// by minimal absolute value.
pub fn smith_normal_form(m: &ExactMatrix) -> Result<SmithNormalForm, LinalgError> {
    if m.domain != ScalarDomain::Integer {
        return Err(LinalgError::DomainNotInteger(m.domain));
    }
    let rows = m.rows;
    let cols = m.cols;
    let mut st = SnfState {
        a: (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| match m.get(i, j) {
                        Scalar::Integer(v) => v.clone(),
                        _ => unreachable!(),
                    })
                    .collect()
            })
            .collect(),
        u: (0..rows)
            .map(|i| (0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect(),
        v: (0..cols)
            .map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect(),
        rows,
        cols,
    };

    let steps = rows.min(cols);
    for t in 0..steps {
        'outer: loop {
            let Some((pi, pj)) = st.min_pivot(t) else { break };
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            // clear column t below and row t to the right
            let mut dirty = false;
            for i in t + 1..rows {
                if !st.a[i][t].is_zero() {
                    let q = -(&st.a[i][t] / &st.a[t][t]);
                    st.add_row(i, t, &q);
                    if !st.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !st.a[t][j].is_zero() {
                    let q = -(&st.a[t][j] / &st.a[t][t]);
                    st.add_col(j, t, &q);
                    if !st.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every remaining entry; if not, merge the
            // offending row into row t and reduce again
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&st.a[i][j] % &st.a[t][t]).is_zero() {
                        let one = BigInt::one();
                        st.add_row(t, i, &one);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if st.a[t][t].is_negative() {
            st.negate_row(t);
        }
    }

    let to_matrix = |grid: &Vec<Vec<BigInt>>, r: usize, c: usize| {
        let entries = grid
            .iter()
            .flat_map(|row| row.iter().map(|x| Scalar::Integer(x.clone())))
            .collect::<Vec<_>>();
        ExactMatrix::new(ScalarDomain::Integer, r, c, entries)
    };
    Ok(SmithNormalForm {
        u: to_matrix(&st.u, rows, rows)?,
        d: to_matrix(&st.a, rows, cols)?,
        v: to_matrix(&st.v, cols, cols)?,
    })
}

/// Homology of a two-step complex over a field: dimension plus kernel
/// representatives spanning a complement of the image.
///
/// `d_in` maps into the middle space (middle-dim rows), `d_out` maps out of
/// it (middle-dim cols); the composite `d_out · d_in` must be zero.
#[derive(Debug, Clone)]
pub struct FieldHomology {
    pub dim: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

pub fn homology_over_field(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<FieldHomology, LinalgError> {
    if !d_in.domain.is_field() {
        return Err(LinalgError::DomainNotAField(d_in.domain));
    }
    if d_in.rows != d_out.cols {
        return Err(LinalgError::ShapeMismatch(d_in.rows, d_in.cols, d_out.rows, d_out.cols));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(LinalgError::CompositionNotZero);
    }
    let kernel = d_out.kernel_basis()?;
    let rank_in = d_in.rank()?;
    let dim = kernel.len() - rank_in;

    // pick kernel vectors extending a basis of the image
    let mid = d_in.rows;
    let mut representatives = Vec::new();
    if dim > 0 {
        let mut work = d_in.clone();
        let mut pivots = work.row_reduce()?.len();
        let mut cur = work;
        for k in &kernel {
            let cand = cur.hcat(&ExactMatrix::from_columns(d_in.domain, mid, std::slice::from_ref(k)))?;
            let mut reduced = cand.clone();
            let r = reduced.row_reduce()?.len();
            if r > pivots {
                pivots = r;
                representatives.push(k.clone());
                cur = cand;
                if representatives.len() == dim {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(representatives.len(), dim);
    Ok(FieldHomology { dim, representatives })
}

/// Homology of a two-step complex over ℤ: isomorphism type of
/// ker(d_out)/im(d_in) as free rank plus nontrivial invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerHomology {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl fmt::Display for IntegerHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".to_string() } else { format!("Z^{}", self.rank) });
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn homology_over_integers(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<IntegerHomology, LinalgError> {
    if d_in.domain != ScalarDomain::Integer || d_out.domain != ScalarDomain::Integer {
        return Err(LinalgError::DomainNotInteger(d_in.domain));
    }
    if d_in.rows != d_out.cols {
        return Err(LinalgError::ShapeMismatch(d_in.rows, d_in.cols, d_out.rows, d_out.cols));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(LinalgError::CompositionNotZero);
    }
    // kernel lattice of d_out: columns of v past the rank (saturated basis)
    let snf_out = smith_normal_form(d_out)?;
    let rank_out = snf_out.rank();
    let mid = d_in.rows;
    let kernel_cols: Vec<Vec<Scalar>> = (rank_out..mid).map(|j| snf_out.v.column(j)).collect();
    let k = kernel_cols.len();
    if k == 0 {
        return Ok(IntegerHomology { rank: 0, invariant_factors: vec![] });
    }
    let kmat = ExactMatrix::from_columns(ScalarDomain::Integer, mid, &kernel_cols);

    // coordinates of im(d_in) in the kernel basis: solve K X = d_in exactly
    let snf_k = smith_normal_form(&kmat)?;
    let dk = snf_k.diagonal();
    let rhs = snf_k.u.mul(d_in)?;
    let mut coords = ExactMatrix::zero(ScalarDomain::Integer, k, d_in.cols);
    for j in 0..d_in.cols {
        let mut y = vec![BigInt::zero(); k];
        for i in 0..mid {
            let val = match rhs.get(i, j) {
                Scalar::Integer(v) => v.clone(),
                _ => unreachable!(),
            };
            if i < k {
                if dk[i].is_zero() {
                    if !val.is_zero() {
                        return Err(LinalgError::CompositionNotZero);
                    }
                } else {
                    let (q, r) = num_integer::Integer::div_rem(&val, &dk[i]);
                    if !r.is_zero() {
                        return Err(LinalgError::CompositionNotZero);
                    }
                    y[i] = q;
                }
            } else if !val.is_zero() {
                return Err(LinalgError::CompositionNotZero);
            }
        }
        // X column = v_K * y
        for i in 0..k {
            let mut acc = BigInt::zero();
            for (l, yl) in y.iter().enumerate() {
                if let Scalar::Integer(v) = snf_k.v.get(i, l) {
                    acc += v * yl;
                }
            }
            coords.set(i, j, Scalar::Integer(acc));
        }
    }

    let snf_q = smith_normal_form(&coords)?;
    let diag = snf_q.diagonal();
    let rank_img = diag.iter().filter(|d| !d.is_zero()).count();
    let invariant_factors = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    Ok(IntegerHomology {
        rank: k - rank_img,
        invariant_factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn qq() -> ScalarDomain {
        ScalarDomain::Rational
    }

    // brute-force oracle: all vectors of F_2^n
    fn f2_vectors(n: usize) -> Vec<Vec<Scalar>> {
        (0..(1u32 << n))
            .map(|mask| {
                (0..n)
                    .map(|i| Scalar::fp(2, ((mask >> i) & 1) as i64))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn kernel_rank_one_matrix() {
        let m = ExactMatrix::from_i64(qq(), &[&[1, 2], &[2, 4]]);
        let basis = m.kernel_basis().unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![Scalar::rational(-2, 1), Scalar::rational(1, 1)]);
        assert!(m.apply(&basis[0]).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kernel_identity_is_empty() {
        let m = ExactMatrix::identity(qq(), 3);
        assert!(m.kernel_basis().unwrap().is_empty());
    }

    #[test]
    fn kernel_over_f2_matches_enumeration() {
        let m = ExactMatrix::from_i64(ScalarDomain::PrimeField(2), &[&[1, 1, 0], &[0, 1, 1]]);
        let basis = m.kernel_basis().unwrap();
        // oracle: enumerate all 8 vectors of F_2^3
        let solutions: Vec<_> = f2_vectors(3)
            .into_iter()
            .filter(|v| m.apply(v).unwrap().iter().all(|x| x.is_zero()))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        assert_eq!(solutions.len(), 1);
        assert_eq!(basis.len(), 1);
        let ones = vec![Scalar::fp(2, 1), Scalar::fp(2, 1), Scalar::fp(2, 1)];
        assert_eq!(solutions[0], ones);
        assert_eq!(basis[0], ones);
    }

    #[test]
    fn kernel_requires_field() {
        let m = ExactMatrix::from_i64(ScalarDomain::Integer, &[&[2]]);
        assert!(matches!(m.kernel_basis(), Err(LinalgError::DomainNotAField(_))));
    }

    #[test]
    fn snf_examples() {
        // oracle-checked: gcd of entries is 2, |det| = 8, so d = diag(2, 4)
        let m = ExactMatrix::from_i64(ScalarDomain::Integer, &[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&m).unwrap();
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(snf.u.mul(&m).unwrap().mul(&snf.v).unwrap(), snf.d);

        let z = ExactMatrix::zero(ScalarDomain::Integer, 2, 3);
        let snf = smith_normal_form(&z).unwrap();
        assert!(snf.d.is_zero());
        assert_eq!(snf.u, ExactMatrix::identity(ScalarDomain::Integer, 2));
        assert_eq!(snf.v, ExactMatrix::identity(ScalarDomain::Integer, 3));

        let id = ExactMatrix::identity(ScalarDomain::Integer, 2);
        let snf = smith_normal_form(&id).unwrap();
        assert_eq!(snf.d, id);
    }

    #[test]
    fn homology_zero_maps() {
        // 0 -> Q^3 -> 0
        let d_in = ExactMatrix::zero(qq(), 3, 0);
        let d_out = ExactMatrix::zero(qq(), 0, 3);
        let h = homology_over_field(&d_in, &d_out).unwrap();
        assert_eq!(h.dim, 3);
    }

    #[test]
    fn homology_two_step_identity() {
        // 0 -> Q ->(x1) Q -> 0: both homologies vanish
        let one = ExactMatrix::from_i64(qq(), &[&[1]]);
        let h_source = homology_over_field(&ExactMatrix::zero(qq(), 1, 0), &one).unwrap();
        assert_eq!(h_source.dim, 0);
        let h_target = homology_over_field(&one, &ExactMatrix::zero(qq(), 0, 1)).unwrap();
        assert_eq!(h_target.dim, 0);
    }

    #[test]
    fn homology_koszul_middle_degree_two() {
        // Koszul complex of (x, y) on Q[x,y], total degree 2 slice.
        // K_2 basis {e12}, K_1 basis {x e1, y e1, x e2, y e2},
        // K_0 basis {x^2, xy, y^2}; d(e12) = x e2 - y e1.
        let d2 = ExactMatrix::from_i64(qq(), &[&[0], &[-1], &[1], &[0]]);
        let d1 = ExactMatrix::from_i64(
            qq(),
            &[
                // d(m e1) = x m, d(m e2) = y m
                &[1, 0, 0, 0], // x^2
                &[0, 1, 1, 0], // xy
                &[0, 0, 0, 1], // y^2
            ],
        );
        let h = homology_over_field(&d2, &d1).unwrap();
        assert_eq!(h.dim, 0);
    }

    #[test]
    fn homology_composition_must_vanish() {
        let a = ExactMatrix::from_i64(qq(), &[&[1]]);
        assert!(matches!(
            homology_over_field(&a, &a),
            Err(LinalgError::CompositionNotZero)
        ));
    }

    #[test]
    fn integer_homology_examples() {
        // 0 -> Z ->(x2) Z -> 0 at the target: Z/2
        let two = ExactMatrix::from_i64(ScalarDomain::Integer, &[&[2]]);
        let h = homology_over_integers(&two, &ExactMatrix::zero(ScalarDomain::Integer, 0, 1)).unwrap();
        assert_eq!(h.rank, 0);
        assert_eq!(h.invariant_factors, vec![BigInt::from(2)]);

        // 0 -> Z ->(x0) Z -> 0: Z at target and source
        let zero = ExactMatrix::zero(ScalarDomain::Integer, 1, 1);
        let h = homology_over_integers(&zero, &ExactMatrix::zero(ScalarDomain::Integer, 0, 1)).unwrap();
        assert_eq!(h.rank, 1);
        assert!(h.invariant_factors.is_empty());
        let h = homology_over_integers(&ExactMatrix::zero(ScalarDomain::Integer, 1, 0), &zero).unwrap();
        assert_eq!(h.rank, 1);

        // diag(2,3) into Z^2: Z/2 + Z/3 = Z/6 in invariant-factor form
        let d_in = ExactMatrix::from_i64(ScalarDomain::Integer, &[&[2, 0], &[0, 3]]);
        let d_out = ExactMatrix::zero(ScalarDomain::Integer, 0, 2);
        let h = homology_over_integers(&d_in, &d_out).unwrap();
        assert_eq!(h.rank, 0);
        assert_eq!(h.invariant_factors, vec![BigInt::from(6)]);
    }

    #[test]
    fn bareiss_determinant() {
        let m = ExactMatrix::from_i64(ScalarDomain::Integer, &[&[2, 4], &[6, 8]]);
        assert_eq!(m.det_integer().unwrap(), BigInt::from(-8));
        let id = ExactMatrix::identity(ScalarDomain::Integer, 4);
        assert_eq!(id.det_integer().unwrap(), BigInt::from(1));
    }
}
