//! Lifts of the elementary matrices `e_ij(a)` to the universal central extension.

use stlie_linalg::{Field, Row};

use crate::error::{CoreError, Result};
use crate::homology::Uce;
use crate::sl::SlData;

/// Which tensor factor of the defining wedge carries the ring element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carry {
    /// `e_ik(a) ∧ e_kj(1)`
    Left,
    /// `e_ik(1) ∧ e_kj(a)`
    Right,
}

/// Carrier vectors `X̃_ij(r_λ)` for all `i ≠ j` and basis elements `r_λ` of `R`.
#[derive(Clone, Debug)]
pub struct LiftFamily<F: Field> {
    n: usize,
    d: usize,
    field: F,
    // (i·n + j)·d + λ; None on the diagonal
    rows: Vec<Option<F::Row>>,
    recentered: bool,
}

impl<F: Field> LiftFamily<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring_dim(&self) -> usize {
        self.d
    }

    pub fn is_recentered(&self) -> bool {
        self.recentered
    }

    /// `X̃_ij(r_λ)`, 0-based `i ≠ j`.
    pub fn basis(&self, i: usize, j: usize, lambda: usize) -> &F::Row {
        self.rows[(i * self.n + j) * self.d + lambda].as_ref().expect("lift requested on the diagonal")
    }

    /// `X̃_ij(a)` for a ring element in coordinates.
    pub fn x(&self, i: usize, j: usize, a: &[F::Elem]) -> F::Row {
        let f = &self.field;
        let mut out = F::Row::zeros(f, self.basis(i, j, 0).len());
        for (l, c) in a.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            out.add_scaled(f, c, self.basis(i, j, l), 0);
        }
        out
    }
}

/// Least index of `0..n` outside `{i, j}`.
pub fn least_other(n: usize, i: usize, j: usize) -> usize {
    (0..n).find(|&k| k != i && k != j).expect("n ≥ 3")
}

/// Greatest index of `0..n` outside `{i, j}`.
pub fn greatest_other(n: usize, i: usize, j: usize) -> usize {
    (0..n).rev().find(|&k| k != i && k != j).expect("n ≥ 3")
}

/// `X̃_ij(a) = ⟨e_ik(a) ∧ e_kj(1)⟩` with `k` the least index outside `{i, j}`.
pub fn lift_generators<F: Field>(uce: &Uce<F>, sl: &SlData<F>) -> Result<LiftFamily<F>> {
    let n = sl.n();
    lift_generators_with(uce, sl, |i, j| least_other(n, i, j), Carry::Left)
}

/// Lifts through `k = choose(i, j)`; each lift is checked to map to `e_ij(r_λ)`.
pub fn lift_generators_with<F: Field>(
    uce: &Uce<F>,
    sl: &SlData<F>,
    choose: impl Fn(usize, usize) -> usize,
    carry: Carry,
) -> Result<LiftFamily<F>> {
    let n = sl.n();
    if n < 3 {
        return Err(CoreError::Unsupported(format!("lifts need n ≥ 3, got {n}")));
    }
    let r = sl.ring();
    let d = r.dim();
    let one = r.one();
    let mut rows = vec![None; n * n * d];
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let k = choose(i, j);
            if k >= n || k == i || k == j {
                return Err(CoreError::Input(format!("intermediate index {k} is not outside {{{i}, {j}}}")));
            }
            for l in 0..d {
                let a = r.basis_elem(l);
                let (left, right) = match carry {
                    Carry::Left => (sl.e(i, k, &a), sl.e(k, j, &one)),
                    Carry::Right => (sl.e(i, k, &one), sl.e(k, j, &a)),
                };
                let lift = uce.class_of_wedge(&left, &right);
                if uce.project(&lift) != sl.e(i, j, &a) {
                    return Err(CoreError::validation("lifts", format!("lift of e_{}{}(r_{l}) has the wrong image", i + 1, j + 1)));
                }
                rows[(i * n + j) * d + l] = Some(lift);
            }
        }
    }
    Ok(LiftFamily { n, d, field: r.field().clone(), rows, recentered: false })
}

/// Canonical lifts: `[X̃_ik(1), X̃_kj(b)]` for `n ≥ 4` and
/// `[[X̃_ik(1), X̃_ki(1)], X̃_ij(a)]` for `n = 3`, with `k` the least other index.
/// Both are independent of the central ambiguity of the input lifts.
pub fn recenter<F: Field>(uce: &Uce<F>, sl: &SlData<F>, lifts: &LiftFamily<F>) -> Result<LiftFamily<F>> {
    let stage = "recentered lifts";
    let n = lifts.n;
    let d = lifts.d;
    let g = uce.carrier();
    let r = sl.ring();
    let one = r.one();
    let mut rows = vec![None; n * n * d];
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let k = least_other(n, i, j);
            for l in 0..d {
                let new = if n >= 4 {
                    g.bracket(&lifts.x(i, k, &one), lifts.basis(k, j, l))
                } else {
                    let t = g.bracket(&lifts.x(i, k, &one), &lifts.x(k, i, &one));
                    g.bracket(&t, lifts.basis(i, j, l))
                };
                let mut diff = new.clone();
                diff.add_scaled(g.field(), &g.field().neg(&g.field().one()), lifts.basis(i, j, l), 0);
                if !uce.kernel().contains(&diff) {
                    return Err(CoreError::validation(stage, "correction is not central"));
                }
                rows[(i * n + j) * d + l] = Some(new);
            }
        }
    }
    let out = LiftFamily { n, d, field: lifts.field.clone(), rows, recentered: true };
    check_recentered(uce, sl, &out).map_err(|e| CoreError::validation(stage, e))?;
    Ok(out)
}

/// `[X̃_ik(a), X̃_kj(b)] = X̃_ij(ab)` for distinct `i, j, k` and
/// `[X̃_ij(a), X̃_ij(b)] = 0`, on basis elements.
pub fn check_recentered<F: Field>(uce: &Uce<F>, sl: &SlData<F>, lifts: &LiftFamily<F>) -> std::result::Result<(), String> {
    let n = lifts.n;
    let d = lifts.d;
    let g = uce.carrier();
    let r = sl.ring();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for a in 0..d {
                for b in 0..d {
                    for k in (0..n).filter(|&k| k != i && k != j) {
                        let lhs = g.bracket(lifts.basis(i, k, a), lifts.basis(k, j, b));
                        if lhs != lifts.x(i, j, r.product_of_basis(a, b)) {
                            return Err(format!(
                                "[X_{}{}(r_{a}), X_{}{}(r_{b})] ≠ X_{}{}(r_{a} r_{b})",
                                i + 1,
                                k + 1,
                                k + 1,
                                j + 1,
                                i + 1,
                                j + 1
                            ));
                        }
                    }
                    if b > a && !g.bracket(lifts.basis(i, j, a), lifts.basis(i, j, b)).is_zero() {
                        return Err(format!("[X_{0}{1}(r_{a}), X_{0}{1}(r_{b})] ≠ 0", i + 1, j + 1));
                    }
                }
            }
        }
    }
    Ok(())
}
