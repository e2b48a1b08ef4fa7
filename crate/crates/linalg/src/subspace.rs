//! Subspaces, quotients and coordinates.

use crate::echelon::Echelon;
use crate::field::Field;
use crate::row::Row;
use crate::LinalgError;

/// A subspace of `F^ambient`, stored as its reduced row echelon basis.
///
/// Rows are sorted by pivot column, so two equal subspaces have identical
/// bases and `==` is subspace equality.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ech: Echelon<F>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ech.ncols() == other.ech.ncols()
            && self.ech.pivots() == other.ech.pivots()
            && self.ech.rows() == other.ech.rows()
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Echelon::new(field, ambient).into_subspace()
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let mut e = Echelon::new(field.clone(), ambient);
        let one = field.one();
        for i in 0..ambient {
            e.insert_sparse(&[(i, one.clone())]);
        }
        e.into_subspace()
    }

    pub fn from_rows<I: IntoIterator<Item = F::Row>>(field: F, ambient: usize, rows: I) -> Self {
        let mut e = Echelon::new(field, ambient);
        for r in rows {
            if e.is_full() {
                break;
            }
            e.insert(r);
        }
        e.into_subspace()
    }

    pub(crate) fn from_echelon(mut ech: Echelon<F>) -> Self {
        ech.canonicalize();
        Self { ech }
    }

    pub fn field(&self) -> &F {
        self.ech.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.ncols()
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.ech.is_full()
    }

    /// Canonical basis rows, sorted by pivot column.
    pub fn basis(&self) -> &[F::Row] {
        self.ech.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.ech.pivots()
    }

    pub fn echelon(&self) -> &Echelon<F> {
        &self.ech
    }

    pub fn contains(&self, v: &F::Row) -> bool {
        self.ech.contains(v)
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot column.
    pub fn reduce(&self, v: &F::Row) -> F::Row {
        let mut r = v.clone();
        self.ech.reduce(&mut r);
        r
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.basis().iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let mut e = self.ech.clone();
        for r in other.basis() {
            if e.is_full() {
                break;
            }
            e.insert(r.clone());
        }
        Ok(e.into_subspace())
    }

    /// `self ∩ other`, via the kernel of `(x, y) ↦ x − y` on stacked bases.
    pub fn intersection(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let f = self.field().clone();
        let n = self.ambient_dim();
        let k = self.dim();
        // Rows (b_i | e_i) for self and (c_j | 0) for other; a combination with
        // zero head has tail recording a self-coordinate of an element also in other.
        let width = n + k;
        let mut e = Echelon::new(f.clone(), width);
        let mut out = Vec::new();
        let widen = |r: &F::Row, tag: Option<usize>| {
            let mut w = F::Row::zeros(&f, width);
            for (c, v) in r.to_sparse(&f) {
                w.set(&f, c, &v);
            }
            if let Some(t) = tag {
                w.set(&f, n + t, &f.one());
            }
            w
        };
        for c in other.basis() {
            e.insert(widen(c, None));
        }
        for (i, b) in self.basis().iter().enumerate() {
            let mut w = widen(b, Some(i));
            e.reduce(&mut w);
            if w.first_nonzero().is_some_and(|c| c >= n) {
                out.push(self.combine_tail(&w, n));
            }
            e.insert(widen(b, Some(i)));
        }
        Ok(Self::from_rows(f, n, out))
    }

    fn combine_tail(&self, w: &F::Row, n: usize) -> F::Row {
        let f = self.field();
        let mut v = F::Row::zeros(f, n);
        for (c, coef) in w.to_sparse(f) {
            if c >= n {
                v.add_scaled(f, &coef, &self.basis()[c - n], 0);
            }
        }
        v
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(LinalgError::AmbientMismatch { left: self.ambient_dim(), right: other.ambient_dim() });
        }
        Ok(())
    }
}

/// The quotient `V / U` for subspaces `U ⊆ V` of a common ambient space.
///
/// Coset representatives are the reduced residues of `V` modulo `U`, so they
/// vanish at every pivot column of `U`. A vector of `V` is written uniquely as
/// `Σ coords[i] * representative[i] + u` with `u ∈ U`.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    sub: Subspace<F>,
    reps: Subspace<F>,
}

impl<F: Field> Quotient<F> {
    pub fn new(v: &Subspace<F>, u: &Subspace<F>) -> Result<Self, LinalgError> {
        v.check_ambient(u)?;
        if !u.is_subspace_of(v) {
            return Err(LinalgError::NotContained);
        }
        let reps = Subspace::from_rows(v.field().clone(), v.ambient_dim(), v.basis().iter().map(|b| u.reduce(b)));
        Ok(Self { sub: u.clone(), reps })
    }

    /// `F^ambient / U`; representatives are the unit vectors off the pivots of `U`.
    pub fn of_ambient(u: &Subspace<F>) -> Self {
        let f = u.field().clone();
        let one = f.one();
        let mut e = Echelon::new(f.clone(), u.ambient_dim());
        for c in (0..u.ambient_dim()).filter(|&c| !u.echelon().is_pivot(c)) {
            e.insert_sparse(&[(c, one.clone())]);
        }
        Self { sub: u.clone(), reps: e.into_subspace() }
    }

    pub fn field(&self) -> &F {
        self.sub.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn kernel(&self) -> &Subspace<F> {
        &self.sub
    }

    pub fn representatives(&self) -> &[F::Row] {
        self.reps.basis()
    }

    /// Pivot column of each representative; the coordinate of a reduced
    /// vector along representative `i` is its entry at `rep_pivots()[i]`.
    pub fn rep_pivots(&self) -> &[usize] {
        self.reps.pivots()
    }

    /// Coordinates of the class of `v`, without checking `v ∈ V`.
    pub fn coords(&self, v: &F::Row) -> Vec<F::Elem> {
        let r = self.sub.reduce(v);
        let f = self.field();
        self.reps.pivots().iter().map(|&c| r.get(f, c)).collect()
    }

    /// Sparse coordinates of the class of `v`, without checking `v ∈ V`.
    pub fn coords_sparse(&self, v: &F::Row) -> Vec<(usize, F::Elem)> {
        let r = self.sub.reduce(v);
        let f = self.field();
        self.reps
            .pivots()
            .iter()
            .enumerate()
            .filter(|(_, &c)| r.is_nonzero_at(c))
            .map(|(i, &c)| (i, r.get(f, c)))
            .collect()
    }

    /// Splits `v ∈ V` as (coordinates in the quotient basis, element of `U`).
    pub fn reduce(&self, v: &F::Row) -> Result<(Vec<F::Elem>, F::Row), LinalgError> {
        let f = self.field();
        let r = self.sub.reduce(v);
        let coords: Vec<F::Elem> = self.reps.pivots().iter().map(|&c| r.get(f, c)).collect();
        let mut rest = r;
        for (coef, rep) in coords.iter().zip(self.reps.basis()) {
            rest.add_scaled(f, &f.neg(coef), rep, 0);
        }
        if !rest.is_zero() {
            return Err(LinalgError::NotInSpan);
        }
        let mut u = v.clone();
        let lifted = self.lift(&coords);
        u.add_scaled(f, &f.neg(&f.one()), &lifted, 0);
        Ok((coords, u))
    }

    pub fn lift(&self, coords: &[F::Elem]) -> F::Row {
        let f = self.field();
        let mut out = F::Row::zeros(f, self.ambient_dim());
        for (c, rep) in coords.iter().zip(self.reps.basis()) {
            out.add_scaled(f, c, rep, 0);
        }
        out
    }

    pub fn lift_sparse(&self, coords: &[(usize, F::Elem)]) -> F::Row {
        let f = self.field();
        let mut out = F::Row::zeros(f, self.ambient_dim());
        for (i, c) in coords {
            out.add_scaled(f, c, &self.reps.basis()[*i], 0);
        }
        out
    }
}

/// Coordinates with respect to a fixed, linearly independent list of vectors.
#[derive(Clone, Debug)]
pub struct CoordinateSystem<F: Field> {
    ambient: usize,
    len: usize,
    // Rows (b_i | e_i), fully reduced.
    ech: Echelon<F>,
}

impl<F: Field> CoordinateSystem<F> {
    pub fn new(field: F, ambient: usize, basis: &[F::Row]) -> Result<Self, LinalgError> {
        let len = basis.len();
        let mut ech = Echelon::new(field.clone(), ambient + len);
        for (i, b) in basis.iter().enumerate() {
            if b.len() != ambient {
                return Err(LinalgError::AmbientMismatch { left: ambient, right: b.len() });
            }
            let mut w = F::Row::zeros(&field, ambient + len);
            for (c, v) in b.to_sparse(&field) {
                w.set(&field, c, &v);
            }
            w.set(&field, ambient + i, &field.one());
            let pivot = ech.insert(w).expect("tagged rows are independent");
            if pivot >= ambient {
                return Err(LinalgError::Dependent);
            }
        }
        Ok(Self { ambient, len, ech })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coefficients `c` with `v = Σ c_i b_i`, or `NotInSpan`.
    pub fn coords(&self, v: &F::Row) -> Result<Vec<F::Elem>, LinalgError> {
        let f = self.ech.field();
        let mut w = F::Row::zeros(f, self.ambient + self.len);
        for (c, x) in v.to_sparse(f) {
            w.set(f, c, &x);
        }
        self.ech.reduce(&mut w);
        if w.first_nonzero().is_some_and(|c| c < self.ambient) {
            return Err(LinalgError::NotInSpan);
        }
        Ok((0..self.len).map(|i| f.neg(&w.get(f, self.ambient + i))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::row::FpRow;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn row(f: &PrimeField, v: &[u32]) -> FpRow {
        FpRow::from_entries(f, v.len(), v)
    }

    #[test]
    fn equal_spans_have_identical_bases() {
        let f = gf(3);
        let a = Subspace::from_rows(f, 3, vec![row(&f, &[1, 1, 0]), row(&f, &[0, 1, 2])]);
        let b = Subspace::from_rows(f, 3, vec![row(&f, &[1, 2, 2]), row(&f, &[2, 0, 2])]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn quotient_by_a_line() {
        let f = gf(2);
        let v = Subspace::full(f, 3);
        let u = Subspace::from_rows(f, 3, vec![row(&f, &[1, 0, 0])]);
        assert_eq!(Quotient::new(&v, &u).unwrap().dim(), 2);
        assert_eq!(Quotient::new(&v, &v).unwrap().dim(), 0);
    }

    #[test]
    fn quotient_reduce_over_f3() {
        let f = gf(3);
        let v = Subspace::full(f, 2);
        let u = Subspace::from_rows(f, 2, vec![row(&f, &[1, 1])]);
        let q = Quotient::new(&v, &u).unwrap();
        assert_eq!(q.dim(), 1);
        let (coords, rest) = q.reduce(&row(&f, &[2, 0])).unwrap();
        // (2,0) = c·rep + k·(1,1) with rep = (0,1) after reduction by (1,1).
        assert_eq!(q.representatives()[0].to_dense(&f), vec![0, 1]);
        assert_eq!(coords, vec![1]);
        assert_eq!(rest.to_dense(&f), vec![2, 2]);
        assert!(u.contains(&rest));
    }

    #[test]
    fn quotient_errors() {
        let f = gf(2);
        let u = Subspace::from_rows(f, 2, vec![row(&f, &[1, 0])]);
        let v = Subspace::from_rows(f, 2, vec![row(&f, &[0, 1])]);
        assert_eq!(Quotient::new(&v, &u).unwrap_err(), LinalgError::NotContained);
        let w = Subspace::zero(f, 3);
        assert!(matches!(Quotient::new(&w, &u), Err(LinalgError::AmbientMismatch { .. })));
        let q = Quotient::new(&u, &Subspace::zero(f, 2)).unwrap();
        assert_eq!(q.reduce(&row(&f, &[0, 1])).unwrap_err(), LinalgError::NotInSpan);
    }

    #[test]
    fn intersection_of_planes() {
        let f = gf(5);
        let a = Subspace::from_rows(f, 3, vec![row(&f, &[1, 0, 0]), row(&f, &[0, 1, 0])]);
        let b = Subspace::from_rows(f, 3, vec![row(&f, &[1, 1, 1]), row(&f, &[0, 1, 4])]);
        let i = a.intersection(&b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(a.contains(&i.basis()[0]) && b.contains(&i.basis()[0]));
    }

    #[test]
    fn coordinates_in_a_basis() {
        let f = gf(7);
        let basis = vec![row(&f, &[1, 2, 0]), row(&f, &[0, 1, 3])];
        let cs = CoordinateSystem::new(f, 3, &basis).unwrap();
        assert_eq!(cs.coords(&row(&f, &[3, 1, 6])).unwrap(), vec![3, 2]);
        assert_eq!(cs.coords(&row(&f, &[0, 0, 1])).unwrap_err(), LinalgError::NotInSpan);
        let dep = vec![row(&f, &[1, 2, 0]), row(&f, &[2, 4, 0])];
        assert_eq!(CoordinateSystem::new(f, 3, &dep).unwrap_err(), LinalgError::Dependent);
    }
}
