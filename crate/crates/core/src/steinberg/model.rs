//! `st_n(R)` realized as a quotient of the universal central extension of `sl_n(R)`.

use stlie_linalg::{DenseMatrix, Field, Quotient, Row, Subspace};

use super::lifts::LiftFamily;
use crate::error::{CoreError, Result};
use crate::homology::Uce;
use crate::lie::LieAlgebra;
use crate::report::{first_failures, Check};
use crate::ring::Algebra;
use crate::sl::SlData;

/// Span of `[X̃_ij(a), X̃_kl(b)]` over `j ≠ k`, `i ≠ l` and basis elements `a, b`,
/// certified to lie in `ker δ̄`. For `n ≥ 5` it is certified to vanish.
pub fn offending_span<F: Field>(uce: &Uce<F>, lifts: &LiftFamily<F>) -> Result<Subspace<F>> {
    let stage = "offending span";
    if !lifts.is_recentered() {
        return Err(CoreError::validation(stage, "lifts must be recentered first"));
    }
    let n = lifts.n();
    let d = lifts.ring_dim();
    let g = uce.carrier();
    let mut gens = Vec::new();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[p..] {
            if j == k || i == l {
                continue;
            }
            for a in 0..d {
                let b0 = if (i, j) == (k, l) { a + 1 } else { 0 };
                for b in b0..d {
                    let v = g.bracket(lifts.basis(i, j, a), lifts.basis(k, l, b));
                    if !v.is_zero() {
                        gens.push(v);
                    }
                }
            }
        }
    }
    let w = Subspace::from_rows(g.field().clone(), g.dim(), gens);
    if !w.is_subspace_of(uce.kernel()) {
        return Err(CoreError::validation(stage, "not contained in ker δ̄"));
    }
    if n >= 5 && !w.is_zero() {
        return Err(CoreError::validation(stage, format!("nonzero (dim {}) for n = {n}", w.dim())));
    }
    Ok(w)
}

/// `st_n(R) = uce(sl_n(R)) / W` with the images of the recentered lifts,
/// the induced map `φ: st_n(R) → sl_n(R)` and the subalgebra `𝔗`.
#[derive(Clone, Debug)]
pub struct SteinbergModel<F: Field> {
    n: usize,
    ring: Algebra<F>,
    lie: LieAlgebra<F>,
    quotient: Quotient<F>,
    // (i·n + j)·d + λ, in st coordinates
    x: Vec<Option<F::Row>>,
    phi: DenseMatrix<F>,
    phi_kernel: Subspace<F>,
    x_span: Subspace<F>,
    torus: Subspace<F>,
    certificates: Vec<Check>,
}

/// Builds `st_n(R)` and runs its certificates; any failing certificate is an error.
pub fn build_st<F: Field>(
    uce: &Uce<F>,
    sl: &SlData<F>,
    lifts: &LiftFamily<F>,
    w: &Subspace<F>,
    hc1: usize,
) -> Result<SteinbergModel<F>> {
    let stage = "Steinberg algebra";
    if !lifts.is_recentered() {
        return Err(CoreError::validation(stage, "lifts must be recentered first"));
    }
    let n = sl.n();
    let r = sl.ring();
    let d = r.dim();
    let f = r.field().clone();
    let (lie, quotient) = uce.carrier().central_quotient(w, stage)?;
    let dim = lie.dim();
    let mut x = vec![None; n * n * d];
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for l in 0..d {
                let v = F::Row::from_sparse(&f, dim, &quotient.coords_sparse(lifts.basis(i, j, l)));
                x[(i * n + j) * d + l] = Some(v);
            }
        }
    }
    let phi_rows = quotient
        .rep_pivots()
        .iter()
        .map(|&p| uce.project(&uce.carrier().basis_vector(p)))
        .collect();
    let phi = DenseMatrix::from_rows(f.clone(), sl.dim(), phi_rows);
    let phi_kernel = phi.transpose().nullspace();
    let x_span = Subspace::from_rows(f.clone(), dim, x.iter().flatten().cloned());
    let mut model = SteinbergModel {
        n,
        ring: r.clone(),
        lie,
        quotient,
        x,
        phi,
        phi_kernel,
        x_span,
        torus: Subspace::zero(f.clone(), dim),
        certificates: Vec::new(),
    };
    let mut torus = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for a in 0..d {
                for b in 0..d {
                    torus.push(model.t_basis(i, j, a, b));
                }
            }
        }
    }
    model.torus = Subspace::from_rows(f, dim, torus);
    model.certificates = model.certify(sl, hc1);
    first_failures(&model.certificates).map_err(|e| CoreError::validation(stage, e))?;
    Ok(model)
}

impl<F: Field> SteinbergModel<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Algebra<F> {
        &self.ring
    }

    pub fn lie(&self) -> &LieAlgebra<F> {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn field(&self) -> &F {
        self.lie.field()
    }

    /// Carrier-to-st projection.
    pub fn quotient(&self) -> &Quotient<F> {
        &self.quotient
    }

    pub fn phi_kernel(&self) -> &Subspace<F> {
        &self.phi_kernel
    }

    /// `Σ_{i<j} [X_ij(R), X_ji(R)]`.
    pub fn torus(&self) -> &Subspace<F> {
        &self.torus
    }

    /// Span of all `X_ij(R)`.
    pub fn x_span(&self) -> &Subspace<F> {
        &self.x_span
    }

    pub fn certificates(&self) -> &[Check] {
        &self.certificates
    }

    pub fn phi(&self, v: &F::Row) -> F::Row {
        self.phi.vec_mul(v)
    }

    pub fn bracket(&self, x: &F::Row, y: &F::Row) -> F::Row {
        self.lie.bracket(x, y)
    }

    /// `X_ij(r_λ)`, 0-based `i ≠ j`.
    pub fn x_basis(&self, i: usize, j: usize, lambda: usize) -> &F::Row {
        let d = self.ring.dim();
        self.x[(i * self.n + j) * d + lambda].as_ref().expect("X requested on the diagonal")
    }

    pub fn x(&self, i: usize, j: usize, a: &[F::Elem]) -> F::Row {
        let f = self.field();
        let mut out = self.lie.zero();
        for (l, c) in a.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            out.add_scaled(f, c, self.x_basis(i, j, l), 0);
        }
        out
    }

    fn t_basis(&self, i: usize, j: usize, a: usize, b: usize) -> F::Row {
        self.bracket(self.x_basis(i, j, a), self.x_basis(j, i, b))
    }

    /// `T_ij(a, b) = [X_ij(a), X_ji(b)]`.
    pub fn t_ij(&self, i: usize, j: usize, a: &[F::Elem], b: &[F::Elem]) -> F::Row {
        self.bracket(&self.x(i, j, a), &self.x(j, i, b))
    }

    /// `t_j(a, b) = T_1j(a, b) − T_1j(1, ba)` for `j ≠ 0`.
    pub fn small_t_via(&self, j: usize, a: &[F::Elem], b: &[F::Elem]) -> F::Row {
        let f = self.field();
        let mut out = self.t_ij(0, j, a, b);
        let ba = self.ring.mul(b, a);
        out.add_scaled(f, &f.neg(&f.one()), &self.t_ij(0, j, &self.ring.one(), &ba), 0);
        out
    }

    /// `t(a, b)`, computed through the second row.
    pub fn small_t(&self, a: &[F::Elem], b: &[F::Elem]) -> F::Row {
        self.small_t_via(1, a, b)
    }

    /// Relations of the presentation, the decomposition `X ⊕ 𝔗`, the
    /// generators of `𝔗`, `φ` and its kernel, perfectness and Jacobi.
    pub fn certify(&self, sl: &SlData<F>, hc1: usize) -> Vec<Check> {
        let mut out = vec![
            Check::from_result("st.jacobi", self.lie.validate_lie().map_err(|e| e.to_string())),
            Check::from_result("st.presentation", self.check_presentation()),
        ];
        let n = self.n;
        let d = self.ring.dim();
        let xs = self.x_span.dim();
        let sum = self.x_span.sum(&self.torus).map(|s| s.dim()).unwrap_or(usize::MAX);
        out.push(if xs != n * (n - 1) * d {
            Check::fail("st.decomposition", format!("X-span has dim {xs}, expected {}", n * (n - 1) * d))
        } else if sum != self.dim() || xs + self.torus.dim() != self.dim() {
            Check::fail("st.decomposition", "X-span and 𝔗 do not form a direct sum decomposition")
        } else {
            Check::pass("st.decomposition")
        });
        out.push(Check::from_result("st.torus_generators", self.check_torus_generators()));
        let phi_ok = (0..self.dim()).all(|a| {
            (a + 1..self.dim()).all(|b| {
                let lhs = self.phi(&self.lie.basis_bracket(a, b));
                let rhs = sl.lie().bracket(&self.phi(&self.lie.basis_vector(a)), &self.phi(&self.lie.basis_vector(b)));
                lhs == rhs
            })
        });
        out.push(if !phi_ok {
            Check::fail("st.phi_homomorphism", "φ does not preserve brackets")
        } else if self.phi.rank() != sl.dim() {
            Check::fail("st.phi_homomorphism", "φ is not surjective")
        } else {
            Check::pass("st.phi_homomorphism")
        });
        out.push(if !self.phi_kernel.is_subspace_of(&self.torus) {
            Check::fail("st.phi_kernel", "ker φ is not contained in 𝔗")
        } else if !self.lie.is_central(&self.phi_kernel) {
            Check::fail("st.phi_kernel", "ker φ is not central")
        } else {
            Check::equal("st.phi_kernel", self.phi_kernel.dim(), hc1)
        });
        out.push(if self.lie.is_perfect() { Check::pass("st.perfect") } else { Check::fail("st.perfect", "[st, st] ≠ st") });
        out
    }

    fn check_presentation(&self) -> std::result::Result<(), String> {
        let n = self.n;
        let d = self.ring.dim();
        let r = &self.ring;
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                for k in 0..n {
                    for l in (0..n).filter(|&l| l != k) {
                        for a in 0..d {
                            for b in 0..d {
                                let lhs = self.bracket(self.x_basis(i, j, a), self.x_basis(k, l, b));
                                let ok = if j == k && i != l {
                                    lhs == self.x(i, l, r.product_of_basis(a, b))
                                } else if j != k && i != l {
                                    lhs.is_zero()
                                } else {
                                    true
                                };
                                if !ok {
                                    return Err(format!(
                                        "relation fails on [X_{}{}(r_{a}), X_{}{}(r_{b})]",
                                        i + 1,
                                        j + 1,
                                        k + 1,
                                        l + 1
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `𝔗 = t(R, R) + Σ_j T_1j(1, R)`.
    fn check_torus_generators(&self) -> std::result::Result<(), String> {
        let d = self.ring.dim();
        let one = self.ring.one();
        let mut gens = Vec::new();
        for a in 0..d {
            for b in 0..d {
                gens.push(self.small_t(&self.ring.basis_elem(a), &self.ring.basis_elem(b)));
            }
        }
        for j in 1..self.n {
            for b in 0..d {
                gens.push(self.t_ij(0, j, &one, &self.ring.basis_elem(b)));
            }
        }
        let span = Subspace::from_rows(self.field().clone(), self.dim(), gens);
        if span == self.torus {
            Ok(())
        } else {
            Err(format!("generators span dim {}, 𝔗 has dim {}", span.dim(), self.torus.dim()))
        }
    }
}
