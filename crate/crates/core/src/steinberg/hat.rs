//! The central extension `ŝt = 𝒲 ⊕ st_n(R)` with bracket `(ψ(x, y), [x, y])`.

use stlie_linalg::{Field, Row, Subspace};

use super::model::SteinbergModel;
use super::psi::Cocycle;
use crate::error::{CoreError, Result};
use crate::homology::h2_dim;
use crate::lie::LieAlgebra;
use crate::report::Check;

#[derive(Clone, Debug)]
pub struct HatAlgebra<F: Field> {
    lie: LieAlgebra<F>,
    /// `𝒲 ⊕ 0`: the first `6 · dim R_r` coordinates.
    kernel: Subspace<F>,
}

pub fn build_hat<F: Field>(st: &SteinbergModel<F>, psi: &Cocycle<F>) -> Result<HatAlgebra<F>> {
    if psi.n() != st.n() {
        return Err(CoreError::Input("ψ and st are built for different n".into()));
    }
    let f = st.field().clone();
    let w = psi.target_dim();
    let g = st.lie();
    let labels = (0..w)
        .map(|k| format!("w{}.{}", k / psi.block_dim() + 1, k % psi.block_dim()))
        .chain(g.labels().iter().cloned())
        .collect();
    let lie = LieAlgebra::from_fn(f.clone(), labels, |a, b| {
        if a < w || b < w {
            return Vec::new();
        }
        let (x, y) = (a - w, b - w);
        let mut out = psi.on_st_basis(x, y).to_sparse(&f);
        out.extend(g.bracket_ordered(x, y).iter().map(|(k, c)| (k + w, c.clone())));
        out
    });
    let dim = lie.dim();
    let kernel = Subspace::from_rows(f.clone(), dim, (0..w).map(|k| F::Row::from_sparse(&f, dim, &[(k, f.one())])));
    Ok(HatAlgebra { lie, kernel })
}

impl<F: Field> HatAlgebra<F> {
    pub fn lie(&self) -> &LieAlgebra<F> {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// Jacobi, central kernel, perfectness, `H_2 = 0` and `dim = expected_dim`.
    pub fn certify(&self, expected_dim: usize) -> Vec<Check> {
        let mut out = vec![Check::from_result("hat.jacobi", self.lie.validate_lie().map_err(|e| e.to_string()))];
        out.push(if self.lie.is_central(&self.kernel) {
            Check::pass("hat.kernel_central")
        } else {
            Check::fail("hat.kernel_central", "𝒲 is not central")
        });
        let perfect = self.lie.is_perfect();
        out.push(if perfect { Check::pass("hat.perfect") } else { Check::fail("hat.perfect", "[ŝt, ŝt] ≠ ŝt") });
        out.push(match h2_dim(&self.lie) {
            Ok(0) => Check::pass("hat.centrally_closed"),
            Ok(h) => Check::fail("hat.centrally_closed", format!("H_2 has dim {h}")),
            Err(e) => Check::fail("hat.centrally_closed", e.to_string()),
        });
        out.push(Check::equal("hat.dim_matches_uce", self.dim(), expected_dim));
        out
    }
}
