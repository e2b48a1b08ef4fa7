//! Degree-2 Chevalley–Eilenberg homology with trivial coefficients and the
//! universal central extension `Λ²g / im d₃`.
//!
//! `Λ²g` has basis `b_i ∧ b_j` (`i < j`) indexed by [`pair_index`];
//! `d2(x∧y) = [x,y]` and `d3(x∧y∧z) = [x,y]∧z + [y,z]∧x + [z,x]∧y`.
//! Ranks do not depend on the sign convention of `d3`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stlie_linalg::{DenseMatrix, Echelon, Field, Quotient, Row, Subspace};

use crate::error::{CoreError, Result};
use crate::lie::{pair_index, pair_of, LieAlgebra, Sparse};

pub fn lambda2_dim(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

pub fn lambda3_dim(d: usize) -> usize {
    d * d.saturating_sub(1) * d.saturating_sub(2) / 6
}

/// Adds `c · (x ∧ b_l)` to a `Λ²` row.
fn add_wedge_with_basis<F: Field>(f: &F, d: usize, out: &mut F::Row, c: &F::Elem, x: &Sparse<F>, l: usize) {
    for (m, v) in x {
        match (*m).cmp(&l) {
            std::cmp::Ordering::Less => out.add_at(f, pair_index(d, *m, l), &f.mul(c, v)),
            std::cmp::Ordering::Greater => out.add_at(f, pair_index(d, l, *m), &f.neg(&f.mul(c, v))),
            std::cmp::Ordering::Equal => {}
        }
    }
}

/// `x ∧ y` in `Λ²` coordinates.
pub fn wedge<F: Field>(f: &F, d: usize, x: &Sparse<F>, y: &Sparse<F>) -> F::Row {
    let mut out = F::Row::zeros(f, lambda2_dim(d));
    for (l, c) in y {
        add_wedge_with_basis(f, d, &mut out, c, x, *l);
    }
    out
}

/// `d2 : Λ²g → g` in row convention.
pub fn d2<F: Field>(g: &LieAlgebra<F>) -> DenseMatrix<F> {
    let d = g.dim();
    let rows = (0..lambda2_dim(d)).map(|p| {
        let (i, j) = pair_of(d, p);
        F::Row::from_sparse(g.field(), d, g.bracket_ordered(i, j))
    });
    DenseMatrix::from_rows(g.field().clone(), d, rows.collect())
}

/// `d3(b_i ∧ b_j ∧ b_k)` for `i < j < k`.
pub fn d3_row<F: Field>(g: &LieAlgebra<F>, i: usize, j: usize, k: usize) -> F::Row {
    let f = g.field();
    let d = g.dim();
    let one = f.one();
    let mut out = F::Row::zeros(f, lambda2_dim(d));
    add_wedge_with_basis(f, d, &mut out, &one, g.bracket_ordered(i, j), k);
    add_wedge_with_basis(f, d, &mut out, &one, g.bracket_ordered(j, k), i);
    // [b_k, b_i] = −[b_i, b_k]
    add_wedge_with_basis(f, d, &mut out, &f.neg(&one), g.bracket_ordered(i, k), j);
    out
}

/// `d3 : Λ³g → Λ²g` in row convention, triples in lexicographic order.
pub fn d3<F: Field>(g: &LieAlgebra<F>) -> DenseMatrix<F> {
    let d = g.dim();
    let mut rows = Vec::with_capacity(lambda3_dim(d));
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                rows.push(d3_row(g, i, j, k));
            }
        }
    }
    DenseMatrix::from_rows(g.field().clone(), lambda2_dim(d), rows)
}

/// `d2` applied to a `Λ²` row.
fn apply_d2<F: Field>(g: &LieAlgebra<F>, w: &F::Row) -> F::Row {
    let f = g.field();
    let d = g.dim();
    let mut out = g.zero();
    for (p, c) in w.to_sparse(f) {
        let (i, j) = pair_of(d, p);
        g.add_basis_bracket(&mut out, &c, i, j);
    }
    out
}

/// Ranks and spaces of the complex `Λ³g → Λ²g → g`.
#[derive(Clone, Debug)]
pub struct DegreeTwo<F: Field> {
    pub lambda2: usize,
    pub rank_d2: usize,
    pub im_d3: Subspace<F>,
}

impl<F: Field> DegreeTwo<F> {
    pub fn h2(&self) -> usize {
        self.lambda2 - self.rank_d2 - self.im_d3.dim()
    }
}

/// Streams the rows of `d3` into an echelon, checking `d2 ∘ d3 = 0` on every row.
/// Insertion stops once the image fills `ker d2`.
pub fn degree_two<F: Field>(g: &LieAlgebra<F>) -> Result<DegreeTwo<F>> {
    let d = g.dim();
    let l2 = lambda2_dim(d);
    let rank_d2 = g.derived_subalgebra().dim();
    let ker_d2 = l2 - rank_d2;
    let mut ech = Echelon::new(g.field().clone(), l2);
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let row = d3_row(g, i, j, k);
                if !apply_d2(g, &row).is_zero() {
                    return Err(CoreError::validation(
                        "homology",
                        format!("d2 ∘ d3 ≠ 0 on basis triple ({i}, {j}, {k})"),
                    ));
                }
                if ech.rank() < ker_d2 {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(DegreeTwo { lambda2: l2, rank_d2, im_d3: ech.into_subspace() })
}

/// `dim H_2(g) = nullity(d2) − rank(d3)`.
pub fn h2_dim<F: Field>(g: &LieAlgebra<F>) -> Result<usize> {
    Ok(degree_two(g)?.h2())
}

/// Whether a perfect Lie algebra has `H_2 = 0`.
pub fn is_centrally_closed<F: Field>(g: &LieAlgebra<F>) -> Result<bool> {
    if !g.is_perfect() {
        return Err(CoreError::NotPerfect { what: "central closedness" });
    }
    Ok(h2_dim(g)? == 0)
}

/// The universal central extension of a perfect Lie algebra `g`.
///
/// The carrier basis is the set of classes `⟨b_i ∧ b_j⟩` for the wedges at
/// non-pivot columns of `im d₃`; the bracket is `⟨u⟩,⟨v⟩ ↦ ⟨d2(u) ∧ d2(v)⟩`
/// and `δ̄⟨x ∧ y⟩ = [x, y]`.
#[derive(Clone, Debug)]
pub struct Uce<F: Field> {
    base: LieAlgebra<F>,
    complex: DegreeTwo<F>,
    quotient: Quotient<F>,
    carrier: LieAlgebra<F>,
    projection: DenseMatrix<F>,
    kernel: Subspace<F>,
}

impl<F: Field> Uce<F> {
    pub fn new(g: &LieAlgebra<F>) -> Result<Self> {
        if !g.is_perfect() {
            return Err(CoreError::NotPerfect { what: "the universal central extension" });
        }
        let f = g.field().clone();
        let d = g.dim();
        let complex = degree_two(g)?;
        let quotient = Quotient::of_ambient(&complex.im_d3);
        let wedges: Vec<(usize, usize)> = quotient.rep_pivots().iter().map(|&p| pair_of(d, p)).collect();
        let images: Vec<&Sparse<F>> = wedges.iter().map(|&(i, j)| g.bracket_ordered(i, j)).collect();
        let labels = wedges.iter().map(|&(i, j)| format!("<{}^{}>", g.labels()[i], g.labels()[j])).collect();
        let carrier = LieAlgebra::from_fn(f.clone(), labels, |a, b| {
            quotient.coords_sparse(&wedge(&f, d, images[a], images[b]))
        });
        let projection = DenseMatrix::from_rows(
            f.clone(),
            d,
            images.iter().map(|v| F::Row::from_sparse(&f, d, v)).collect(),
        );
        let kernel = projection.transpose().nullspace();
        Ok(Self { base: g.clone(), complex, quotient, carrier, projection, kernel })
    }

    pub fn base(&self) -> &LieAlgebra<F> {
        &self.base
    }

    pub fn carrier(&self) -> &LieAlgebra<F> {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `ker δ̄`, in carrier coordinates.
    pub fn kernel(&self) -> &Subspace<F> {
        &self.kernel
    }

    pub fn h2_of_base(&self) -> usize {
        self.complex.h2()
    }

    pub fn im_d3(&self) -> &Subspace<F> {
        &self.complex.im_d3
    }

    /// Class of `x ∧ y` for `x, y ∈ g`.
    pub fn class_of_wedge(&self, x: &F::Row, y: &F::Row) -> F::Row {
        let f = self.base.field();
        let w = wedge(f, self.base.dim(), &x.to_sparse(f), &y.to_sparse(f));
        self.class_of(&w)
    }

    /// Class of a `Λ²` vector.
    pub fn class_of(&self, w: &F::Row) -> F::Row {
        let f = self.base.field();
        F::Row::from_sparse(f, self.dim(), &self.quotient.coords_sparse(w))
    }

    /// `δ̄`, from carrier coordinates to `g`.
    pub fn project(&self, u: &F::Row) -> F::Row {
        self.projection.vec_mul(u)
    }

    /// Runs every structural certificate; `seed` drives the random
    /// well-definedness witness.
    pub fn validate(&self, seed: u64) -> Result<()> {
        let stage = "universal central extension";
        let g = &self.base;
        if let Err(v) = self.carrier.validate_lie() {
            return Err(CoreError::validation(stage, format!("carrier: {v}")));
        }
        if self.dim() != g.dim() + self.h2_of_base() {
            return Err(CoreError::validation(stage, "dim carrier ≠ dim g + dim H_2(g)"));
        }
        if self.projection.rank() != g.dim() {
            return Err(CoreError::validation(stage, "δ̄ is not surjective"));
        }
        if self.kernel.dim() != self.h2_of_base() {
            return Err(CoreError::validation(stage, "dim ker δ̄ ≠ dim H_2(g)"));
        }
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                let lhs = self.project(&self.carrier.basis_bracket(a, b));
                let rhs = g.bracket(&self.project(&self.carrier.basis_vector(a)), &self.project(&self.carrier.basis_vector(b)));
                if lhs != rhs {
                    return Err(CoreError::validation(stage, format!("δ̄ is not a homomorphism on ({a}, {b})")));
                }
            }
        }
        if !self.carrier.is_central(&self.kernel) {
            return Err(CoreError::validation(stage, "ker δ̄ is not central"));
        }
        if !self.carrier.is_perfect() {
            return Err(CoreError::validation(stage, "carrier is not perfect"));
        }
        self.well_definedness_witness(seed, 20)
    }

    /// For random `w ∈ im d₃` and `v ∈ Λ²`, `d2(w) ∧ d2(v)` must vanish in the carrier.
    pub fn well_definedness_witness(&self, seed: u64, samples: usize) -> Result<()> {
        let g = &self.base;
        let f = g.field();
        let d = g.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coef = |rng: &mut ChaCha8Rng| f.from_i64(rng.gen_range(-3i64..=3));
        let im = self.complex.im_d3.basis();
        for s in 0..samples {
            let mut w = F::Row::zeros(f, self.complex.lambda2);
            for b in im {
                w.add_scaled(f, &coef(&mut rng), b, 0);
            }
            let mut v = F::Row::zeros(f, self.complex.lambda2);
            for p in 0..self.complex.lambda2 {
                v.add_at(f, p, &coef(&mut rng));
            }
            let x = apply_d2(g, &w).to_sparse(f);
            let y = apply_d2(g, &v).to_sparse(f);
            if !self.class_of(&wedge(f, d, &x, &y)).is_zero() {
                return Err(CoreError::validation(
                    "universal central extension",
                    format!("bracket is not well defined (sample {s})"),
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::ground_field;
    use crate::sl::build_sl;
    use stlie_linalg::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn abelian_boundaries_vanish() {
        let a = LieAlgebra::abelian(gf(3), 4);
        assert!(d2(&a).is_zero());
        assert!(d3(&a).is_zero());
        assert_eq!(h2_dim(&LieAlgebra::abelian(gf(3), 2)).unwrap(), 1);
    }

    #[test]
    fn d3_of_sl2_over_q_vanishes() {
        let q = Rationals;
        let sl2 = build_sl(&ground_field(q), 2).unwrap();
        let g = sl2.lie();
        // In char 0, d2 is injective on Λ² sl2, so d3 must be zero.
        assert_eq!(lambda2_dim(3) - g.derived_subalgebra().dim(), 0);
        assert!(d3(g).is_zero());
    }

    #[test]
    fn d2_after_d3_is_zero_on_sl3_f2() {
        let g = build_sl(&ground_field(gf(2)), 3).unwrap();
        assert!(d3(g.lie()).mul(&d2(g.lie())).is_zero());
    }

    #[test]
    fn small_h2_values() {
        assert_eq!(h2_dim(build_sl(&ground_field(Rationals), 3).unwrap().lie()).unwrap(), 0);
        assert_eq!(h2_dim(build_sl(&ground_field(gf(2)), 5).unwrap().lie()).unwrap(), 0);
    }

    #[test]
    fn uce_of_small_sl() {
        let u = Uce::new(build_sl(&ground_field(Rationals), 3).unwrap().lie()).unwrap();
        assert_eq!((u.dim(), u.kernel().dim()), (8, 0));
        u.validate(7).unwrap();

        let u = Uce::new(build_sl(&ground_field(gf(2)), 4).unwrap().lie()).unwrap();
        assert_eq!((u.dim(), u.kernel().dim()), (21, 6));
        u.validate(7).unwrap();
        assert!(is_centrally_closed(u.carrier()).unwrap());

        let u = Uce::new(build_sl(&ground_field(gf(3)), 3).unwrap().lie()).unwrap();
        assert_eq!((u.dim(), u.kernel().dim()), (14, 6));
        u.validate(7).unwrap();
    }

    #[test]
    fn central_closedness() {
        assert!(is_centrally_closed(build_sl(&ground_field(gf(2)), 5).unwrap().lie()).unwrap());
        assert!(!is_centrally_closed(build_sl(&ground_field(gf(2)), 4).unwrap().lie()).unwrap());
        assert!(is_centrally_closed(&LieAlgebra::abelian(gf(2), 2)).is_err());
    }
}
