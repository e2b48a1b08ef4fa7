//! `gl_n(R)` and `sl_n(R)` with their matrix realization.
//!
//! The gl basis vector `e_ij(r_λ)` has index `(i·n + j)·d + λ` with 0-based
//! `i, j`. The sl basis is the reduced row echelon basis of the subalgebra
//! generated by the off-diagonal `e_ij(r_λ)`, so every off-diagonal unit
//! vector is itself a basis vector and sl coordinates of a gl vector are
//! its entries at the pivot columns.

use stlie_linalg::{Echelon, Field, Quotient, Row, Subspace};

use crate::error::{CoreError, Result};
use crate::lie::{LieAlgebra, Sparse};
use crate::ring::{Algebra, Vector};

#[inline]
pub fn gl_index(n: usize, d: usize, i: usize, j: usize, lambda: usize) -> usize {
    (i * n + j) * d + lambda
}

/// `gl_n(R)` as a Lie algebra with `[X, Y] = XY − YX`.
pub fn build_gl<F: Field>(r: &Algebra<F>, n: usize) -> LieAlgebra<F> {
    let d = r.dim();
    let f = r.field();
    let labels = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..d).map(move |l| (i, j, l))))
        .map(|(i, j, l)| format!("e{}{}({})", i + 1, j + 1, r.labels()[l]))
        .collect();
    let decode = |x: usize| (x / (n * d), (x / d) % n, x % d);
    LieAlgebra::from_fn(f.clone(), labels, |x, y| {
        let (i, j, a) = decode(x);
        let (k, l, b) = decode(y);
        let mut out: Sparse<F> = Vec::new();
        // [e_ij(a), e_kl(b)] = δ_jk e_il(ab) − δ_li e_kj(ba)
        let mut acc = vec![f.zero(); n * n * d];
        if j == k {
            for (m, c) in r.product_of_basis(a, b).iter().enumerate() {
                let p = gl_index(n, d, i, l, m);
                acc[p] = f.add(&acc[p], c);
            }
        }
        if l == i {
            for (m, c) in r.product_of_basis(b, a).iter().enumerate() {
                let p = gl_index(n, d, k, j, m);
                acc[p] = f.sub(&acc[p], c);
            }
        }
        for (p, c) in acc.into_iter().enumerate() {
            if !f.is_zero(&c) {
                out.push((p, c));
            }
        }
        out
    })
}

#[derive(Clone, Debug)]
pub struct SlData<F: Field> {
    n: usize,
    ring: Algebra<F>,
    gl: LieAlgebra<F>,
    /// sl basis in gl coordinates.
    span: Subspace<F>,
    lie: LieAlgebra<F>,
    /// `offdiag[(i·n + j)·d + λ]` = sl index of `e_ij(r_λ)`, for `i ≠ j`.
    offdiag: Vec<usize>,
}

impl<F: Field> SlData<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Algebra<F> {
        &self.ring
    }

    pub fn gl(&self) -> &LieAlgebra<F> {
        &self.gl
    }

    pub fn lie(&self) -> &LieAlgebra<F> {
        &self.lie
    }

    pub fn span_in_gl(&self) -> &Subspace<F> {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// sl basis index of `e_ij(r_λ)`, `i ≠ j`, 0-based indices.
    pub fn offdiag_index(&self, i: usize, j: usize, lambda: usize) -> usize {
        assert_ne!(i, j);
        self.offdiag[gl_index(self.n, self.ring.dim(), i, j, lambda)]
    }

    /// `e_ij(a)` in sl coordinates.
    pub fn e(&self, i: usize, j: usize, a: &[F::Elem]) -> F::Row {
        let f = self.ring.field();
        let entries: Sparse<F> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(l, c)| (self.offdiag_index(i, j, l), c.clone()))
            .collect();
        F::Row::from_sparse(f, self.dim(), &entries)
    }

    /// sl coordinates of a gl vector assumed to lie in sl.
    pub fn to_sl(&self, v: &F::Row) -> F::Row {
        let f = self.ring.field();
        let entries: Sparse<F> = self
            .span
            .pivots()
            .iter()
            .enumerate()
            .filter(|(_, &c)| v.is_nonzero_at(c))
            .map(|(k, &c)| (k, v.get(f, c)))
            .collect();
        F::Row::from_sparse(f, self.dim(), &entries)
    }

    pub fn to_gl(&self, v: &F::Row) -> F::Row {
        let f = self.ring.field();
        let mut out = F::Row::zeros(f, self.gl.dim());
        for (k, c) in v.to_sparse(f) {
            out.add_scaled(f, &c, &self.span.basis()[k], 0);
        }
        out
    }

    /// Entry `(i, j)` of an sl element, as a ring element.
    pub fn entry(&self, v: &F::Row, i: usize, j: usize) -> Vector<F> {
        let g = self.to_gl(v);
        let d = self.ring.dim();
        (0..d).map(|l| g.get(self.ring.field(), gl_index(self.n, d, i, j, l))).collect()
    }

    /// `{X ∈ gl_n(R) : tr X ∈ [R, R]}`, as the kernel of `gl_n(R) → R/[R, R]`.
    pub fn trace_kernel(&self) -> Subspace<F> {
        let r = &self.ring;
        let f = r.field();
        let d = r.dim();
        let q = Quotient::of_ambient(&r.commutator_subspace());
        let rows: Vec<F::Row> = (0..self.gl.dim())
            .map(|x| {
                let (i, j, l) = (x / (self.n * d), (x / d) % self.n, x % d);
                if i == j {
                    F::Row::from_entries(f, q.dim(), &q.coords(&r.to_row(&r.basis_elem(l))))
                } else {
                    F::Row::zeros(f, q.dim())
                }
            })
            .collect();
        stlie_linalg::DenseMatrix::from_rows(f.clone(), q.dim(), rows).transpose().nullspace()
    }

    /// `[e_ij(a), e_jk(b)] = e_ik(ab)` for distinct `i, j, k` and
    /// `[e_ij(a), e_kl(b)] = 0` for `j ≠ k`, `i ≠ l`, over all basis `a, b`.
    pub fn check_elementary_relations(&self) -> std::result::Result<(), String> {
        let n = self.n;
        let d = self.ring.dim();
        let r = &self.ring;
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
        for &(i, j) in &pairs {
            for &(k, l) in &pairs {
                for a in 0..d {
                    for b in 0..d {
                        let lhs = self.lie.basis_bracket(self.offdiag_index(i, j, a), self.offdiag_index(k, l, b));
                        let rhs = if j == k && i != l {
                            self.e(i, l, r.product_of_basis(a, b))
                        } else if j != k && i != l {
                            self.lie.zero()
                        } else {
                            continue;
                        };
                        if lhs != rhs {
                            return Err(format!(
                                "[e{}{}({}), e{}{}({})] has the wrong value",
                                i + 1,
                                j + 1,
                                r.labels()[a],
                                k + 1,
                                l + 1,
                                r.labels()[b]
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn format_gl<F: Field>(r: &Algebra<F>, n: usize, v: &F::Row) -> String {
    let f = r.field();
    let d = r.dim();
    let mut parts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let a: Vector<F> = (0..d).map(|l| v.get(f, gl_index(n, d, i, j, l))).collect();
            if a.iter().any(|c| !f.is_zero(c)) {
                parts.push(format!("e{}{}({})", i + 1, j + 1, r.format_elem(&a)));
            }
        }
    }
    parts.join("+")
}

/// `sl_n(R)`: the subalgebra of `gl_n(R)` generated by the off-diagonal
/// `e_ij(r_λ)`, certified equal to the trace-characterized subspace.
pub fn build_sl<F: Field>(r: &Algebra<F>, n: usize) -> Result<SlData<F>> {
    if n < 2 {
        return Err(CoreError::Input("sl_n needs n ≥ 2".into()));
    }
    let d = r.dim();
    let f = r.field().clone();
    let gl = build_gl(r, n);
    let gdim = gl.dim();
    let gens: Vec<usize> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..d).map(move |l| (i, j, l))))
        .filter(|(i, j, _)| i != j)
        .map(|(i, j, l)| gl_index(n, d, i, j, l))
        .collect();
    let mut ech = Echelon::new(f.clone(), gdim);
    let mut queue: Vec<F::Row> = Vec::new();
    for &g in &gens {
        let v = gl.basis_vector(g);
        if ech.insert(v.clone()).is_some() {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        for &g in &gens {
            let w = gl.bracket(&gl.basis_vector(g), &v);
            if !ech.contains(&w) {
                ech.insert(w.clone());
                queue.push(w);
            }
        }
    }
    let span = ech.into_subspace();
    let pivots = span.pivots().to_vec();
    let mut offdiag = vec![usize::MAX; gdim];
    for &g in &gens {
        let k = pivots.iter().position(|&p| p == g).ok_or_else(|| {
            CoreError::validation("sl builder", "an off-diagonal generator is not a pivot")
        })?;
        offdiag[g] = k;
    }
    let labels: Vec<String> = span.basis().iter().map(|b| format_gl(r, n, b)).collect();
    let sl_of = |v: &F::Row| -> Sparse<F> {
        pivots.iter().enumerate().filter(|(_, &c)| v.is_nonzero_at(c)).map(|(k, &c)| (k, v.get(&f, c))).collect()
    };
    let basis = span.basis();
    let mut closed = true;
    let lie = LieAlgebra::from_fn(f.clone(), labels, |a, b| {
        let w = gl.bracket(&basis[a], &basis[b]);
        closed &= span.contains(&w);
        sl_of(&w)
    });
    if !closed {
        return Err(CoreError::validation("sl builder", "generated span is not closed under the bracket"));
    }
    let sl = SlData { n, ring: r.clone(), gl, span, lie, offdiag };
    if sl.trace_kernel() != sl.span {
        return Err(CoreError::validation(
            "sl builder",
            "generated subalgebra differs from {X : tr X ∈ [R, R]}",
        ));
    }
    let expected = n * n * d - d + r.commutator_subspace().dim();
    if sl.dim() != expected {
        return Err(CoreError::validation("sl builder", format!("dim {} but expected {expected}", sl.dim())));
    }
    Ok(sl)
}
