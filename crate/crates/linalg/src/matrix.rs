use crate::echelon::Echelon;
use crate::field::Field;
use crate::row::Row;
use crate::subspace::Subspace;

/// A row-major matrix over `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<F::Row>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: F, nrows: usize, ncols: usize) -> Self {
        let rows = (0..nrows).map(|_| F::Row::zeros(&field, ncols)).collect();
        Self { field, ncols, rows }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        let one = m.field.one();
        for i in 0..n {
            m.rows[i].set(&m.field, i, &one);
        }
        m
    }

    /// Panics if a row has the wrong length.
    pub fn from_rows(field: F, ncols: usize, rows: Vec<F::Row>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "row length differs from column count");
        Self { field, ncols, rows }
    }

    pub fn from_dense(field: F, entries: &[Vec<F::Elem>]) -> Self {
        let ncols = entries.first().map_or(0, Vec::len);
        let rows = entries.iter().map(|r| F::Row::from_entries(&field, ncols, r)).collect();
        Self::from_rows(field, ncols, rows)
    }

    /// Convenience constructor from small integers, reduced into `F`.
    pub fn from_i64(field: F, entries: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<F::Elem>> =
            entries.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_dense(field, &dense)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[F::Row] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &F::Row {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> F::Elem {
        self.rows[i].get(&self.field, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: &F::Elem) {
        self.rows[i].set(&self.field, j, v);
    }

    pub fn push_row(&mut self, row: F::Row) {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
    }

    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        self.rows.iter().map(|r| r.to_dense(&self.field)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                let v = row.get(&self.field, j);
                t.rows[j].set(&self.field, i, &v);
            }
        }
        t
    }

    /// `M x` for a column vector `x` given as a row.
    pub fn apply(&self, x: &F::Row) -> F::Row {
        assert_eq!(x.len(), self.ncols);
        let mut out = F::Row::zeros(&self.field, self.nrows());
        let xs = x.to_sparse(&self.field);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = self.field.zero();
            for (j, v) in &xs {
                if row.is_nonzero_at(*j) {
                    acc = self.field.add(&acc, &self.field.mul(&row.get(&self.field, *j), v));
                }
            }
            if !self.field.is_zero(&acc) {
                out.set(&self.field, i, &acc);
            }
        }
        out
    }

    /// `x M` for a row vector `x`.
    pub fn vec_mul(&self, x: &F::Row) -> F::Row {
        assert_eq!(x.len(), self.nrows());
        let mut out = F::Row::zeros(&self.field, self.ncols);
        for (i, c) in x.to_sparse(&self.field) {
            out.add_scaled(&self.field, &c, &self.rows[i], 0);
        }
        out
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows(), "inner dimensions differ");
        let rows = self.rows.iter().map(|r| other.vec_mul(r)).collect();
        Self::from_rows(self.field.clone(), other.ncols, rows)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Row::is_zero)
    }

    fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.field.clone(), self.ncols);
        for r in &self.rows {
            if e.is_full() {
                break;
            }
            e.insert(r.clone());
        }
        e
    }

    /// Reduced row echelon form with the same shape; zero rows go last.
    pub fn rref(&self) -> Self {
        let e = self.echelon();
        let mut rows: Vec<F::Row> = e.sorted_rows().into_iter().map(|(_, r)| r.clone()).collect();
        while rows.len() < self.nrows() {
            rows.push(F::Row::zeros(&self.field, self.ncols));
        }
        Self::from_rows(self.field.clone(), self.ncols, rows)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn row_space(&self) -> Subspace<F> {
        self.echelon().into_subspace()
    }

    /// Kernel of `x ↦ M x`, as a subspace of `F^cols`.
    pub fn nullspace(&self) -> Subspace<F> {
        let e = self.echelon();
        let f = &self.field;
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !e.is_pivot(c)) {
            let mut v = F::Row::zeros(f, self.ncols);
            v.set(f, free, &f.one());
            for (pc, prow) in e.sorted_rows() {
                if prow.is_nonzero_at(free) {
                    v.set(f, pc, &f.neg(&prow.get(f, free)));
                }
            }
            basis.push(v);
        }
        Subspace::from_rows(self.field.clone(), self.ncols, basis)
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }
}
