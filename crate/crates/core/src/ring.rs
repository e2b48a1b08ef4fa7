//! Finite-dimensional unital associative algebras given by structure constants.

use std::fmt;

use stlie_linalg::{Field, Quotient, Row, Subspace};

use crate::error::{CoreError, Result};

/// Dense coordinates of an algebra element in the algebra basis.
pub type Vector<F> = Vec<<F as Field>::Elem>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraViolation {
    #[error("the basis is empty")]
    Empty,
    #[error("unit index {0} is out of range")]
    UnitOutOfRange(usize),
    #[error("multiplication table has the wrong shape")]
    TableShape,
    #[error("basis element {index} is not fixed by multiplication with the unit on the {side}")]
    NotUnit { index: usize, side: &'static str },
    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F: Field> {
    field: F,
    labels: Vec<String>,
    unit: usize,
    // table[i][j] = coordinates of r_i r_j
    table: Vec<Vec<Vector<F>>>,
}

impl<F: Field> Algebra<F> {
    pub fn new(field: F, labels: Vec<String>, unit: usize, table: Vec<Vec<Vector<F>>>) -> Result<Self> {
        let a = Self::unchecked(field, labels, unit, table);
        a.validate()?;
        Ok(a)
    }

    /// Builds without validation; [`validate`](Self::validate) reports problems.
    pub fn unchecked(field: F, labels: Vec<String>, unit: usize, table: Vec<Vec<Vector<F>>>) -> Self {
        Self { field, labels, unit, table }
    }

    /// Checks table shape, unit laws and associativity on all basis triples.
    pub fn validate(&self) -> std::result::Result<(), AlgebraViolation> {
        let d = self.labels.len();
        if d == 0 {
            return Err(AlgebraViolation::Empty);
        }
        if self.unit >= d {
            return Err(AlgebraViolation::UnitOutOfRange(self.unit));
        }
        if self.table.len() != d || self.table.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(AlgebraViolation::TableShape);
        }
        for i in 0..d {
            let e = self.basis_elem(i);
            if self.table[self.unit][i] != e {
                return Err(AlgebraViolation::NotUnit { index: i, side: "left" });
            }
            if self.table[i][self.unit] != e {
                return Err(AlgebraViolation::NotUnit { index: i, side: "right" });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = &self.table[i][j];
                for k in 0..d {
                    let left = self.mul(ij, &self.basis_elem(k));
                    let right = self.mul(&self.basis_elem(i), &self.table[j][k]);
                    if left != right {
                        return Err(AlgebraViolation::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
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

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> Vector<F> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> Vector<F> {
        self.basis_elem(self.unit)
    }

    pub fn basis_elem(&self, i: usize) -> Vector<F> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &Vector<F> {
        &self.table[i][j]
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !f.is_zero(y)) {
                let c = f.mul(x, y);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, c: &F::Elem, a: &[F::Elem]) -> Vector<F> {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }

    pub fn commutator(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn to_row(&self, a: &[F::Elem]) -> F::Row {
        F::Row::from_entries(&self.field, self.dim(), a)
    }

    pub fn from_row(&self, r: &F::Row) -> Vector<F> {
        r.to_dense(&self.field)
    }

    fn span<I: IntoIterator<Item = Vector<F>>>(&self, vectors: I) -> Subspace<F> {
        Subspace::from_rows(self.field.clone(), self.dim(), vectors.into_iter().map(|v| self.to_row(&v)))
    }

    /// `[R,R]`, spanned by the commutators of basis pairs.
    pub fn commutator_subspace(&self) -> Subspace<F> {
        let d = self.dim();
        self.span((0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
            self.sub(&self.table[i][j], &self.table[j][i])
        }))
    }

    /// Span of all products `a·b` with `a ∈ left`, `b ∈ right`.
    pub fn product_span(&self, left: &Subspace<F>, right: &Subspace<F>) -> Subspace<F> {
        let lb: Vec<Vector<F>> = left.basis().iter().map(|r| self.from_row(r)).collect();
        let rb: Vec<Vector<F>> = right.basis().iter().map(|r| self.from_row(r)).collect();
        self.span(lb.iter().flat_map(|a| rb.iter().map(move |b| self.mul(a, b))))
    }

    pub fn full_subspace(&self) -> Subspace<F> {
        Subspace::full(self.field.clone(), self.dim())
    }

    /// `R·[R,R]`.
    pub fn left_commutator_ideal(&self) -> Subspace<F> {
        self.product_span(&self.full_subspace(), &self.commutator_subspace())
    }

    /// `[R,R]·R`.
    pub fn right_commutator_ideal(&self) -> Subspace<F> {
        self.product_span(&self.commutator_subspace(), &self.full_subspace())
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace<F>) -> bool {
        let full = self.full_subspace();
        self.product_span(&full, s).is_subspace_of(s) && self.product_span(s, &full).is_subspace_of(s)
    }

    /// Smallest two-sided ideal containing `gens`, by multiplying on both sides until stable.
    pub fn ideal_generated(&self, gens: &[Vector<F>]) -> Subspace<F> {
        let mut current = self.span(gens.iter().cloned());
        loop {
            let basis: Vec<Vector<F>> = current.basis().iter().map(|r| self.from_row(r)).collect();
            let mut products = basis.clone();
            for x in &basis {
                for i in 0..self.dim() {
                    let e = self.basis_elem(i);
                    products.push(self.mul(&e, x));
                    products.push(self.mul(x, &e));
                }
            }
            let next = self.span(products);
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// `ℐ_m = mR + R[R,R]`, certified to be the two-sided ideal generated by
    /// `m·1` and all commutators.
    pub fn ideal_im(&self, m: u64) -> Result<Ideal<F>> {
        let f = &self.field;
        let m_elem = f.from_i64(m as i64);
        let m_r = self.span((0..self.dim()).map(|i| self.scale(&m_elem, &self.basis_elem(i))));
        let sub = m_r.sum(&self.left_commutator_ideal())?;
        if !self.is_two_sided_ideal(&sub) {
            return Err(CoreError::validation(format!("ideal I_{m}"), "mR + R[R,R] is not two-sided"));
        }
        let d = self.dim();
        let mut gens = vec![self.scale(&m_elem, &self.one())];
        for i in 0..d {
            for j in 0..d {
                gens.push(self.sub(&self.table[i][j], &self.table[j][i]));
            }
        }
        if self.ideal_generated(&gens) != sub {
            return Err(CoreError::validation(
                format!("ideal I_{m}"),
                "mR + R[R,R] differs from the ideal generated by m and the commutators",
            ));
        }
        Ok(Ideal { m, subspace: sub })
    }

    /// `R_m = R / ℐ_m`.
    pub fn quotient_rm(&self, m: u64) -> Result<QuotientRing<F>> {
        let ideal = self.ideal_im(m)?;
        QuotientRing::new(self, ideal)
    }

    /// The same algebra with its non-unit basis vectors permuted by `perm`
    /// (a permutation of the non-unit positions, listed in basis order).
    pub fn rebased(&self, perm: &[usize]) -> Result<Self> {
        let d = self.dim();
        let others: Vec<usize> = (0..d).filter(|&i| i != self.unit).collect();
        if perm.len() != others.len() || {
            let mut s = perm.to_vec();
            s.sort_unstable();
            s != (0..others.len()).collect::<Vec<_>>()
        } {
            return Err(CoreError::Input("rebasing needs a permutation of the non-unit basis".into()));
        }
        // new basis position of old basis index
        let mut new_pos = vec![0; d];
        new_pos[self.unit] = self.unit;
        for (slot, &old) in others.iter().enumerate() {
            new_pos[old] = others[perm[slot]];
        }
        let mut labels = vec![String::new(); d];
        let mut table = vec![vec![self.zero(); d]; d];
        for i in 0..d {
            labels[new_pos[i]] = self.labels[i].clone();
            for j in 0..d {
                let mut v = self.zero();
                for (k, c) in self.table[i][j].iter().enumerate() {
                    v[new_pos[k]] = c.clone();
                }
                table[new_pos[i]][new_pos[j]] = v;
            }
        }
        Self::new(self.field.clone(), labels, self.unit, table)
    }

    pub fn format_elem(&self, a: &[F::Elem]) -> String {
        let f = &self.field;
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| {
                if f.is_one(c) {
                    self.labels[i].clone()
                } else {
                    format!("{}*{}", f.format_elem(c), self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl<F: Field> fmt::Display for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-algebra of dim {} with basis [{}]", self.field.kind(), self.dim(), self.labels.join(", "))
    }
}

/// A two-sided ideal `ℐ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F: Field> {
    pub m: u64,
    pub subspace: Subspace<F>,
}

/// The commutative quotient `R_m`, with coordinates in a basis of coset representatives.
///
/// The unit of `R_m` need not be one of the representatives.
#[derive(Clone, Debug)]
pub struct QuotientRing<F: Field> {
    field: F,
    m: u64,
    ideal: Subspace<F>,
    quotient: Quotient<F>,
    // table[i][j] = coordinates of rep_i * rep_j
    table: Vec<Vec<Vector<F>>>,
    unit: Vector<F>,
}

impl<F: Field> QuotientRing<F> {
    fn new(parent: &Algebra<F>, ideal: Ideal<F>) -> Result<Self> {
        let quotient = Quotient::of_ambient(&ideal.subspace);
        let reps: Vec<Vector<F>> = quotient.representatives().iter().map(|r| parent.from_row(r)).collect();
        let table = reps
            .iter()
            .map(|a| reps.iter().map(|b| quotient.coords(&parent.to_row(&parent.mul(a, b)))).collect())
            .collect();
        let unit = quotient.coords(&parent.to_row(&parent.one()));
        let q = Self { field: parent.field().clone(), m: ideal.m, ideal: ideal.subspace, quotient, table, unit };
        q.certify(parent)?;
        Ok(q)
    }

    /// Projection is multiplicative, the quotient is commutative and `m` kills it.
    fn certify(&self, parent: &Algebra<F>) -> Result<()> {
        let stage = format!("quotient R_{}", self.m);
        let d = parent.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.project(parent, parent.product_of_basis(i, j));
                let rhs = self.mul(&self.project(parent, &parent.basis_elem(i)), &self.project(parent, &parent.basis_elem(j)));
                if lhs != rhs {
                    return Err(CoreError::validation(stage, format!("projection not multiplicative on ({i}, {j})")));
                }
            }
        }
        if !self.is_commutative() {
            return Err(CoreError::validation(stage, "quotient is not commutative"));
        }
        let m = self.field.from_i64(self.m as i64);
        if !self.field.is_zero(&m) && self.dim() > 0 {
            return Err(CoreError::validation(stage, "m does not annihilate the quotient"));
        }
        Ok(())
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ideal(&self) -> &Subspace<F> {
        &self.ideal
    }

    pub fn unit(&self) -> &Vector<F> {
        &self.unit
    }

    pub fn project(&self, parent: &Algebra<F>, a: &[F::Elem]) -> Vector<F> {
        self.quotient.coords(&parent.to_row(a))
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !f.is_zero(y)) {
                let c = f.mul(x, y);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    out[k] = f.add(&out[k], &f.mul(&c, t));
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

/// Product of the distinct prime divisors of `n`; `radical(1) = 1`.
pub fn radical(n: u64) -> u64 {
    assert!(n >= 1, "radical is defined for positive integers");
    let (mut n, mut r, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            r *= p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        r *= n;
    }
    r
}
