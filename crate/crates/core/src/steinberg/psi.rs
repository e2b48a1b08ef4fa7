//! The explicit 2-cocycle `ψ: st_n(R) × st_n(R) → 𝒲 = R_r⁶` for `n ∈ {3, 4}`.
//!
//! `ψ` is given on the basis `Γ` made of the `X_ij(r_λ)` followed by a basis
//! of `𝔗`, and vanishes whenever an argument lies in `𝔗`. On two `X`'s:
//! - `n = 4`: `ψ(X_ij(r), X_kl(s)) = r̄s̄` in block `θ(ijkl)` when `i, j, k, l` are distinct;
//! - `n = 3`: `ψ(X_ij(r), X_ik(s)) = sign(j, k) r̄s̄` in block `i` and
//!   `ψ(X_ij(r), X_kj(s)) = sign(i, k) r̄s̄` in block `3 + j`;
//! - zero otherwise.

use stlie_linalg::{CoordinateSystem, Field, Row};

use super::model::SteinbergModel;
use super::partition::{sign, CosetPartition};
use crate::error::{CoreError, Result};
use crate::ring::QuotientRing;

#[derive(Clone, Debug)]
pub struct Cocycle<F: Field> {
    field: F,
    n: usize,
    block_dim: usize,
    gamma: CoordinateSystem<F>,
    /// `(i, j, λ)` of each `X` in `Γ`, 0-based.
    x_labels: Vec<(usize, usize, usize)>,
    /// `ψ(γ_a, γ_b)` for `a, b < x_labels.len()`.
    values: Vec<Vec<F::Row>>,
    /// `ψ` on pairs of st basis vectors.
    st_values: Vec<Vec<F::Row>>,
}

impl<F: Field> Cocycle<F> {
    pub fn target_dim(&self) -> usize {
        6 * self.block_dim
    }

    pub fn block_dim(&self) -> usize {
        self.block_dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Γ` index of `X_ij(r_λ)`.
    pub fn x_index(&self, i: usize, j: usize, lambda: usize) -> usize {
        self.x_labels.iter().position(|&t| t == (i, j, lambda)).expect("X index out of range")
    }

    pub fn value_on_gamma(&self, a: usize, b: usize) -> F::Row {
        let nx = self.x_labels.len();
        if a < nx && b < nx {
            self.values[a][b].clone()
        } else {
            F::Row::zeros(&self.field, self.target_dim())
        }
    }

    /// `ψ(e_a, e_b)` for st basis vectors.
    pub fn on_st_basis(&self, a: usize, b: usize) -> &F::Row {
        &self.st_values[a][b]
    }

    /// `ψ(x, y)` for st elements.
    pub fn eval(&self, x: &F::Row, y: &F::Row) -> F::Row {
        let f = &self.field;
        let mut out = F::Row::zeros(f, self.target_dim());
        for (a, c) in x.to_sparse(f) {
            for (b, e) in y.to_sparse(f) {
                out.add_scaled(f, &f.mul(&c, &e), &self.st_values[a][b], 0);
            }
        }
        out
    }

    fn refresh_st_values(&mut self, st_dim: usize) -> Result<()> {
        let f = &self.field;
        let nx = self.x_labels.len();
        let coords: Vec<Vec<(usize, F::Elem)>> = (0..st_dim)
            .map(|a| {
                let e = F::Row::from_sparse(f, st_dim, &[(a, f.one())]);
                let c = self.gamma.coords(&e)?;
                Ok(c.into_iter().enumerate().filter(|(p, v)| *p < nx && !f.is_zero(v)).collect())
            })
            .collect::<Result<_>>()?;
        self.st_values = (0..st_dim)
            .map(|a| {
                (0..st_dim)
                    .map(|b| {
                        let mut out = F::Row::zeros(f, self.target_dim());
                        for (p, c) in &coords[a] {
                            for (q, e) in &coords[b] {
                                out.add_scaled(f, &f.mul(c, e), &self.values[*p][*q], 0);
                            }
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        Ok(())
    }

    /// Copy with `ψ(γ_a, γ_b)` and `ψ(γ_b, γ_a)` set to zero.
    pub fn with_pair_zeroed(&self, a: usize, b: usize) -> Result<Self> {
        let mut out = self.clone();
        let zero = F::Row::zeros(&self.field, self.target_dim());
        out.values[a][b] = zero.clone();
        out.values[b][a] = zero;
        let st_dim = self.st_values.len();
        out.refresh_st_values(st_dim)?;
        Ok(out)
    }

    /// Alternating on `Γ`, then `J(x, y, z) = ψ([x,y],z) + ψ([y,z],x) + ψ([z,x],y) = 0`
    /// on all ordered triples of st basis vectors.
    pub fn verify_cocycle(&self, st: &SteinbergModel<F>) -> std::result::Result<(), String> {
        let f = &self.field;
        let nx = self.x_labels.len();
        for a in 0..nx {
            if !self.values[a][a].is_zero() {
                return Err(format!("ψ(γ_{a}, γ_{a}) ≠ 0"));
            }
            for b in a + 1..nx {
                let mut s = self.values[a][b].clone();
                s.add_scaled(f, &f.one(), &self.values[b][a], 0);
                if !s.is_zero() {
                    return Err(format!("ψ is not skew on (γ_{a}, γ_{b})"));
                }
            }
        }
        let g = st.lie();
        let dim = g.dim();
        for x in 0..dim {
            for y in 0..dim {
                let xy = g.basis_bracket(x, y).to_sparse(f);
                for z in 0..dim {
                    let mut acc = F::Row::zeros(f, self.target_dim());
                    for (l, c) in &xy {
                        acc.add_scaled(f, c, &self.st_values[*l][z], 0);
                    }
                    for (l, c) in g.basis_bracket(y, z).to_sparse(f) {
                        acc.add_scaled(f, &c, &self.st_values[l][x], 0);
                    }
                    for (l, c) in g.basis_bracket(z, x).to_sparse(f) {
                        acc.add_scaled(f, &c, &self.st_values[l][y], 0);
                    }
                    if !acc.is_zero() {
                        return Err(format!(
                            "J({}, {}, {}) ≠ 0",
                            g.labels()[x],
                            g.labels()[y],
                            g.labels()[z]
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds `ψ` from the coset partition, the signs and `R_r` with `r = 2` for
/// `n = 4` and `r = 3` for `n = 3`.
pub fn build_psi<F: Field>(st: &SteinbergModel<F>, rq: &QuotientRing<F>) -> Result<Cocycle<F>> {
    let n = st.n();
    let expected_m = match n {
        3 => 3,
        4 => 2,
        _ => return Err(CoreError::Unsupported(format!("ψ is defined for n ∈ {{3, 4}}, got {n}"))),
    };
    if rq.m() != expected_m {
        return Err(CoreError::Input(format!("ψ for n = {n} needs R_{expected_m}, got R_{}", rq.m())));
    }
    let r = st.ring();
    let d = r.dim();
    let f = st.field().clone();
    let block_dim = rq.dim();
    let target = 6 * block_dim;
    let partition = CosetPartition::new();

    let mut x_labels = Vec::new();
    let mut gamma_rows = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for l in 0..d {
                x_labels.push((i, j, l));
                gamma_rows.push(st.x_basis(i, j, l).clone());
            }
        }
    }
    gamma_rows.extend(st.torus().basis().iter().cloned());
    let gamma = CoordinateSystem::new(f.clone(), st.dim(), &gamma_rows)?;
    if gamma.len() != st.dim() {
        return Err(CoreError::validation("cocycle", "Γ is not a basis of st"));
    }

    let place = |block: usize, s: i64, v: &[F::Elem]| {
        let mut out = F::Row::zeros(&f, target);
        let c = f.from_i64(s);
        for (k, x) in v.iter().enumerate() {
            out.add_at(&f, block * block_dim + k, &f.mul(&c, x));
        }
        out
    };
    let values = x_labels
        .iter()
        .map(|&(i, j, a)| {
            x_labels
                .iter()
                .map(|&(k, l, b)| {
                    let rs = rq.project(r, r.product_of_basis(a, b));
                    if n == 4 && i != k && i != l && j != k && j != l {
                        place(partition.theta([i + 1, j + 1, k + 1, l + 1]) - 1, 1, &rs)
                    } else if n == 3 && i == k && j != l {
                        place(i, sign(j, l), &rs)
                    } else if n == 3 && j == l && i != k {
                        place(3 + j, sign(i, k), &rs)
                    } else {
                        F::Row::zeros(&f, target)
                    }
                })
                .collect()
        })
        .collect();
    let mut psi =
        Cocycle { field: f.clone(), n, block_dim, gamma, x_labels, values, st_values: Vec::new() };
    psi.refresh_st_values(st.dim())?;
    Ok(psi)
}
