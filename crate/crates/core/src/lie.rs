//! Lie algebras given by structure constants.

use stlie_linalg::{DenseMatrix, Field, Row, Subspace};

use crate::error::{CoreError, Result};

/// Sparse coordinate vector: `(basis index, nonzero coefficient)` in increasing index order.
pub type Sparse<F> = Vec<(usize, <F as Field>::Elem)>;

/// Index of the pair `i < j` among all pairs of `0..d`.
#[inline]
pub fn pair_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * (2 * d - i - 1) / 2 + (j - i - 1)
}

/// The pair with index `p`, inverse of [`pair_index`].
pub fn pair_of(d: usize, mut p: usize) -> (usize, usize) {
    for i in 0..d {
        let row = d - i - 1;
        if p < row {
            return (i, i + 1 + p);
        }
        p -= row;
    }
    panic!("pair index out of range")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Brackets are stored for `i < j` only; `[b_i, b_i] = 0` and
/// `[b_j, b_i] = −[b_i, b_j]` hold by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra<F: Field> {
    field: F,
    labels: Vec<String>,
    brackets: Vec<Sparse<F>>,
}

impl<F: Field> LieAlgebra<F> {
    /// Builds the algebra from `bracket(i, j)` evaluated on every pair `i < j`.
    pub fn from_fn(field: F, labels: Vec<String>, mut bracket: impl FnMut(usize, usize) -> Sparse<F>) -> Self {
        let d = labels.len();
        let mut brackets = Vec::with_capacity(d * d.saturating_sub(1) / 2);
        for i in 0..d {
            for j in i + 1..d {
                let mut v = bracket(i, j);
                v.retain(|(_, c)| !field.is_zero(c));
                v.sort_by_key(|(k, _)| *k);
                brackets.push(v);
            }
        }
        Self { field, labels, brackets }
    }

    pub fn abelian(field: F, d: usize) -> Self {
        Self::from_fn(field, (0..d).map(|i| format!("b{i}")).collect(), |_, _| Vec::new())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[b_i, b_j]` for `i < j`.
    pub fn bracket_ordered(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.brackets[pair_index(self.dim(), i, j)]
    }

    /// Adds `c · [b_i, b_j]` to `out`.
    pub fn add_basis_bracket(&self, out: &mut F::Row, c: &F::Elem, i: usize, j: usize) {
        let f = &self.field;
        if i == j {
            return;
        }
        let (a, b, c) = if i < j { (i, j, c.clone()) } else { (j, i, f.neg(c)) };
        for (k, v) in self.bracket_ordered(a, b) {
            out.add_at(f, *k, &f.mul(&c, v));
        }
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> F::Row {
        let mut out = self.zero();
        self.add_basis_bracket(&mut out, &self.field.one(), i, j);
        out
    }

    pub fn zero(&self) -> F::Row {
        F::Row::zeros(&self.field, self.dim())
    }

    pub fn basis_vector(&self, i: usize) -> F::Row {
        F::Row::from_sparse(&self.field, self.dim(), &[(i, self.field.one())])
    }

    pub fn bracket(&self, x: &F::Row, y: &F::Row) -> F::Row {
        let f = &self.field;
        let xs = x.to_sparse(f);
        let ys = y.to_sparse(f);
        let mut out = self.zero();
        for (i, a) in &xs {
            for (j, b) in &ys {
                self.add_basis_bracket(&mut out, &f.mul(a, b), *i, *j);
            }
        }
        out
    }

    /// Jacobi identity on all basis triples `i < j < k`; triples with a repeated
    /// index satisfy it automatically because the bracket is alternating.
    pub fn validate_lie(&self) -> std::result::Result<(), JacobiViolation> {
        let d = self.dim();
        let f = &self.field;
        for i in 0..d {
            for j in i + 1..d {
                let ij = self.bracket_ordered(i, j);
                for k in j + 1..d {
                    let mut acc = self.zero();
                    for (l, c) in ij {
                        self.add_basis_bracket(&mut acc, c, *l, k);
                    }
                    for (l, c) in self.bracket_ordered(j, k) {
                        self.add_basis_bracket(&mut acc, c, *l, i);
                    }
                    // [b_k, b_i] = −[b_i, b_k]
                    for (l, c) in self.bracket_ordered(i, k) {
                        self.add_basis_bracket(&mut acc, &f.neg(c), *l, j);
                    }
                    if !acc.is_zero() {
                        return Err(JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[g, g]`, the span of all basis brackets.
    pub fn derived_subalgebra(&self) -> Subspace<F> {
        let d = self.dim();
        Subspace::from_rows(
            self.field.clone(),
            d,
            self.brackets.iter().map(|v| F::Row::from_sparse(&self.field, d, v)),
        )
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().is_full()
    }

    /// Adjoint map `x ↦ ([x, b_0], …, [x, b_{d−1}])` in row convention.
    fn adjoint_stack(&self) -> DenseMatrix<F> {
        let d = self.dim();
        let f = &self.field;
        let rows = (0..d)
            .map(|i| {
                let mut row = F::Row::zeros(f, d * d);
                for k in 0..d {
                    let b = self.basis_bracket(i, k);
                    for (l, c) in b.to_sparse(f) {
                        row.set(f, k * d + l, &c);
                    }
                }
                row
            })
            .collect();
        DenseMatrix::from_rows(f.clone(), d * d, rows)
    }

    pub fn center(&self) -> Subspace<F> {
        self.adjoint_stack().transpose().nullspace()
    }

    /// Whether every element of `s` commutes with every basis vector.
    pub fn is_central(&self, s: &Subspace<F>) -> bool {
        s.basis().iter().all(|v| (0..self.dim()).all(|k| self.bracket(v, &self.basis_vector(k)).is_zero()))
    }

    /// Whether `[s, s] ⊆ s`.
    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        let b = s.basis();
        b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| s.contains(&self.bracket(x, y))))
    }

    /// Structure constants of the quotient by a central subspace `c`, on the
    /// basis of unit vectors at the non-pivot columns of `c`.
    pub fn central_quotient(&self, c: &Subspace<F>, stage: &str) -> Result<(LieAlgebra<F>, stlie_linalg::Quotient<F>)> {
        if !self.is_central(c) {
            return Err(CoreError::validation(stage, "subspace is not central"));
        }
        let q = stlie_linalg::Quotient::of_ambient(c);
        let reps: Vec<usize> = q.rep_pivots().to_vec();
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let lie = LieAlgebra::from_fn(self.field.clone(), labels, |a, b| {
            q.coords_sparse(&self.basis_bracket(reps[a], reps[b]))
        });
        Ok((lie, q))
    }
}

/// Bracket of two elements given in sparse coordinates.
pub fn bracket_sparse<F: Field>(g: &LieAlgebra<F>, x: &Sparse<F>, y: &Sparse<F>) -> F::Row {
    let f = g.field();
    let mut out = g.zero();
    for (i, a) in x {
        for (j, b) in y {
            g.add_basis_bracket(&mut out, &f.mul(a, b), *i, *j);
        }
    }
    out
}
