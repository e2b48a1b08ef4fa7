//! Incremental reduced row echelon form.
//!
//! Rows are kept fully reduced: every stored row has a leading one at its
//! pivot column and zeros at every other pivot column. Reducing a vector
//! therefore needs one row operation per pivot column where the *input* is
//! nonzero, which keeps the cost of streaming many sparse rows (boundary
//! matrices) close to linear in their number.

use crate::field::Field;
use crate::row::Row;
use crate::subspace::Subspace;

const NO_PIVOT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<F::Row>,
    pivots: Vec<usize>,
    slot_of_col: Vec<u32>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Self { field, ncols, rows: Vec::new(), pivots: Vec::new(), slot_of_col: vec![NO_PIVOT; ncols] }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.slot_of_col[col] != NO_PIVOT
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Stored row whose pivot is `col`, if any.
    pub fn row_for_pivot(&self, col: usize) -> Option<&F::Row> {
        let s = self.slot_of_col[col];
        (s != NO_PIVOT).then(|| &self.rows[s as usize])
    }

    /// Subtracts from `row` its component along the stored rows.
    ///
    /// Afterwards `row` is zero at every pivot column; it is zero overall
    /// exactly when the input lay in the span.
    pub fn reduce(&self, row: &mut F::Row) {
        let hits: Vec<(usize, F::Elem)> = row
            .support()
            .into_iter()
            .filter(|&c| self.is_pivot(c))
            .map(|c| (c, row.get(&self.field, c)))
            .collect();
        for (c, coef) in hits {
            let slot = self.slot_of_col[c] as usize;
            row.add_scaled(&self.field, &self.field.neg(&coef), &self.rows[slot], c);
        }
    }

    /// Like [`reduce`](Self::reduce) but also returns the coefficients used,
    /// keyed by pivot column: `input = remainder + sum(coef * row_for_pivot(col))`.
    pub fn reduce_with_coefficients(&self, row: &mut F::Row) -> Vec<(usize, F::Elem)> {
        let hits: Vec<(usize, F::Elem)> = row
            .support()
            .into_iter()
            .filter(|&c| self.is_pivot(c))
            .map(|c| (c, row.get(&self.field, c)))
            .collect();
        for (c, coef) in &hits {
            let slot = self.slot_of_col[*c] as usize;
            row.add_scaled(&self.field, &self.field.neg(coef), &self.rows[slot], *c);
        }
        hits
    }

    pub fn contains(&self, row: &F::Row) -> bool {
        let mut r = row.clone();
        self.reduce(&mut r);
        r.is_zero()
    }

    /// Adds `row` to the span. Returns the new pivot column, or `None` when
    /// the row was already in the span.
    pub fn insert(&mut self, mut row: F::Row) -> Option<usize> {
        debug_assert_eq!(row.len(), self.ncols);
        self.reduce(&mut row);
        let col = row.first_nonzero()?;
        let lead = row.get(&self.field, col);
        if !self.field.is_one(&lead) {
            let inv = self.field.inv(&lead).expect("nonzero leading entry");
            row.scale(&self.field, &inv);
        }
        for other in self.rows.iter_mut() {
            if other.is_nonzero_at(col) {
                let c = self.field.neg(&other.get(&self.field, col));
                other.add_scaled(&self.field, &c, &row, col);
            }
        }
        self.slot_of_col[col] = self.rows.len() as u32;
        self.rows.push(row);
        self.pivots.push(col);
        Some(col)
    }

    pub fn insert_sparse(&mut self, entries: &[(usize, F::Elem)]) -> Option<usize> {
        let row = F::Row::from_sparse(&self.field, self.ncols, entries);
        self.insert(row)
    }

    /// Stored rows sorted by pivot column (the canonical RREF).
    pub fn sorted_rows(&self) -> Vec<(usize, &F::Row)> {
        let mut out: Vec<(usize, &F::Row)> = self.pivots.iter().copied().zip(self.rows.iter()).collect();
        out.sort_by_key(|(c, _)| *c);
        out
    }

    pub fn into_subspace(self) -> Subspace<F> {
        Subspace::from_echelon(self)
    }

    /// Reorders the stored rows by increasing pivot column.
    pub(crate) fn canonicalize(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&s| self.pivots[s]);
        let mut rows = Vec::with_capacity(order.len());
        let mut pivots = Vec::with_capacity(order.len());
        let old = std::mem::take(&mut self.rows);
        let mut old: Vec<Option<F::Row>> = old.into_iter().map(Some).collect();
        for (slot, &s) in order.iter().enumerate() {
            rows.push(old[s].take().expect("each slot moved once"));
            pivots.push(self.pivots[s]);
            self.slot_of_col[self.pivots[s]] = slot as u32;
        }
        self.rows = rows;
        self.pivots = pivots;
    }

    pub(crate) fn rows(&self) -> &[F::Row] {
        &self.rows
    }
}
