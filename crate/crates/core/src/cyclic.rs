//! First cyclic homology from Tsygan's bicomplex in total degrees ≤ 2.
//!
//! Maps are matrices in row convention: row `s` is the image of basis
//! tensor `s`, and `f` followed by `g` is the product `F · G`. The tensor
//! `r_{a_0} ⊗ … ⊗ r_{a_q}` has index `Σ a_i d^{q-i}`.
//!
//! Columns of the bicomplex alternate `b` (even) and `−b'` (odd), horizontal
//! maps alternate `1 − t` and `N`. Total degree 1 is `R⊗R ⊕ R` and total
//! degree 2 is `R⊗R⊗R ⊕ R⊗R ⊕ R`.

use stlie_linalg::{DenseMatrix, Field, Row, Subspace};

use crate::error::{CoreError, Result};
use crate::ring::{Algebra, Vector};

/// Highest tensor degree `q` (tensor power `q + 1`) the maps support.
pub const MAX_DEGREE: usize = 3;

fn check_degree(q: usize) -> Result<()> {
    if q > MAX_DEGREE {
        return Err(CoreError::Unsupported(format!("tensor degree {q} exceeds {MAX_DEGREE}")));
    }
    Ok(())
}

fn power(d: usize, q: usize) -> usize {
    d.pow(q as u32)
}

fn digits(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

fn index_of(tuple: &[usize], d: usize) -> usize {
    tuple.iter().fold(0, |acc, &a| acc * d + a)
}

/// Adds `c · (t_0 ⊗ … ⊗ v ⊗ … ⊗ t_m)` to `out`, with the vector `v` at `pos`.
fn add_tensor_with_vector<F: Field>(
    f: &F,
    out: &mut F::Row,
    c: &F::Elem,
    prefix: &[usize],
    v: &[F::Elem],
    suffix: &[usize],
    d: usize,
) {
    for (k, coef) in v.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
        let mut t = prefix.to_vec();
        t.push(k);
        t.extend_from_slice(suffix);
        out.add_at(f, index_of(&t, d), &f.mul(c, coef));
    }
}

fn sign<F: Field>(f: &F, odd: bool) -> F::Elem {
    if odd {
        f.neg(&f.one())
    } else {
        f.one()
    }
}

fn face_map<F: Field>(r: &Algebra<F>, q: usize, with_wrap: bool) -> Result<DenseMatrix<F>> {
    check_degree(q)?;
    let f = r.field();
    let d = r.dim();
    let (src, dst) = (power(d, q + 1), if q == 0 { 0 } else { power(d, q) });
    let mut rows = Vec::with_capacity(src);
    for s in 0..src {
        let a = digits(s, d, q + 1);
        let mut img = F::Row::zeros(f, dst);
        if q > 0 {
            for i in 0..q {
                let prod = r.product_of_basis(a[i], a[i + 1]);
                add_tensor_with_vector(f, &mut img, &sign(f, i % 2 == 1), &a[..i], prod, &a[i + 2..], d);
            }
            if with_wrap {
                let prod = r.product_of_basis(a[q], a[0]);
                add_tensor_with_vector(f, &mut img, &sign(f, q % 2 == 1), &[], prod, &a[1..q], d);
            }
        }
        rows.push(img);
    }
    Ok(DenseMatrix::from_rows(f.clone(), dst, rows))
}

/// Hochschild boundary `b : R^{⊗(q+1)} → R^{⊗q}`.
pub fn hochschild_b<F: Field>(r: &Algebra<F>, q: usize) -> Result<DenseMatrix<F>> {
    face_map(r, q, true)
}

/// `b'`, the Hochschild boundary without its wrap-around term.
pub fn bprime<F: Field>(r: &Algebra<F>, q: usize) -> Result<DenseMatrix<F>> {
    face_map(r, q, false)
}

/// Signed cyclic operator `t(a_0⊗…⊗a_q) = (−1)^q a_q⊗a_0⊗…⊗a_{q−1}`.
pub fn cyclic_t<F: Field>(r: &Algebra<F>, q: usize) -> Result<DenseMatrix<F>> {
    check_degree(q)?;
    let f = r.field();
    let d = r.dim();
    let n = power(d, q + 1);
    let s = sign(f, q % 2 == 1);
    let rows = (0..n)
        .map(|i| {
            let a = digits(i, d, q + 1);
            let mut rotated = vec![a[q]];
            rotated.extend_from_slice(&a[..q]);
            F::Row::from_sparse(f, n, &[(index_of(&rotated, d), s.clone())])
        })
        .collect();
    Ok(DenseMatrix::from_rows(f.clone(), n, rows))
}

/// `N = 1 + t + … + t^q`.
pub fn norm_n<F: Field>(r: &Algebra<F>, q: usize) -> Result<DenseMatrix<F>> {
    let t = cyclic_t(r, q)?;
    let n = t.nrows();
    let mut acc = DenseMatrix::identity(r.field().clone(), n);
    let mut p = DenseMatrix::identity(r.field().clone(), n);
    for _ in 0..q {
        p = p.mul(&t);
        acc = add(&acc, &p, &r.field().one());
    }
    Ok(acc)
}

/// `a + c·b` for matrices of equal shape.
fn add<F: Field>(a: &DenseMatrix<F>, b: &DenseMatrix<F>, c: &F::Elem) -> DenseMatrix<F> {
    let f = a.field();
    let rows = a
        .rows()
        .iter()
        .zip(b.rows())
        .map(|(x, y)| {
            let mut r = x.clone();
            r.add_scaled(f, c, y, 0);
            r
        })
        .collect();
    DenseMatrix::from_rows(f.clone(), a.ncols(), rows)
}

fn one_minus_t<F: Field>(r: &Algebra<F>, q: usize) -> Result<DenseMatrix<F>> {
    let t = cyclic_t(r, q)?;
    let id = DenseMatrix::identity(r.field().clone(), t.nrows());
    Ok(add(&id, &t, &r.field().neg(&r.field().one())))
}

fn negate<F: Field>(m: &DenseMatrix<F>) -> DenseMatrix<F> {
    let zero = DenseMatrix::zeros(m.field().clone(), m.nrows(), m.ncols());
    add(&zero, m, &m.field().neg(&m.field().one()))
}

/// Places `block` at (`row_off`, `col_off`) in `target`.
fn place<F: Field>(target: &mut DenseMatrix<F>, block: &DenseMatrix<F>, row_off: usize, col_off: usize) {
    let f = block.field().clone();
    for (i, row) in block.rows().iter().enumerate() {
        for (j, v) in row.to_sparse(&f) {
            target.set(row_off + i, col_off + j, &v);
        }
    }
}

/// The total complex in degrees 2 → 1 → 0.
#[derive(Clone, Debug)]
pub struct TotalComplex<F: Field> {
    /// `Tot_1 → Tot_0`, where `Tot_1 = R⊗R ⊕ R` and `Tot_0 = R`.
    pub d1: DenseMatrix<F>,
    /// `Tot_2 → Tot_1`, where `Tot_2 = R⊗R⊗R ⊕ R⊗R ⊕ R`.
    pub d2: DenseMatrix<F>,
}

pub fn total_complex<F: Field>(r: &Algebra<F>) -> Result<TotalComplex<F>> {
    let f = r.field().clone();
    let d = r.dim();
    let (d2s, d3s) = (d * d, d * d * d);
    // D1(x, y) = b x + (1 − t) y, with x ∈ R⊗R in column 0 and y ∈ R in column 1.
    let mut d1 = DenseMatrix::zeros(f.clone(), d2s + d, d);
    place(&mut d1, &hochschild_b(r, 1)?, 0, 0);
    place(&mut d1, &one_minus_t(r, 0)?, d2s, 0);
    // D2(x, y, z) = (b x + (1 − t) y, −b' y + N z).
    let mut d2 = DenseMatrix::zeros(f, d3s + d2s + d, d2s + d);
    place(&mut d2, &hochschild_b(r, 2)?, 0, 0);
    place(&mut d2, &one_minus_t(r, 1)?, d3s, 0);
    place(&mut d2, &negate(&bprime(r, 1)?), d3s, d2s);
    place(&mut d2, &norm_n(r, 0)?, d3s + d2s, d2s);
    Ok(TotalComplex { d1, d2 })
}

/// Verifies `D1 ∘ D2 = 0` and the bicomplex identities `b² = 0`, `b'² = 0`,
/// `b(1 − t) = (1 − t)b'` and `b'N = Nb` in low degrees. Returns the first failure.
pub fn check_bicomplex<F: Field>(r: &Algebra<F>) -> std::result::Result<(), String> {
    let run = || -> Result<Option<String>> {
        let tot = total_complex(r)?;
        if !tot.d2.mul(&tot.d1).is_zero() {
            return Ok(Some("D1 ∘ D2 ≠ 0".into()));
        }
        for q in [2, 3] {
            if !hochschild_b(r, q)?.mul(&hochschild_b(r, q - 1)?).is_zero() {
                return Ok(Some(format!("b ∘ b ≠ 0 from degree {q}")));
            }
            if !bprime(r, q)?.mul(&bprime(r, q - 1)?).is_zero() {
                return Ok(Some(format!("b' ∘ b' ≠ 0 from degree {q}")));
            }
        }
        for q in [1, 2] {
            // row convention: "(1 − t) then b" is (1 − t)·b
            let lhs = one_minus_t(r, q)?.mul(&hochschild_b(r, q)?);
            let rhs = bprime(r, q)?.mul(&one_minus_t(r, q - 1)?);
            if lhs != rhs {
                return Ok(Some(format!("b(1 − t) ≠ (1 − t)b' in degree {q}")));
            }
            let lhs = norm_n(r, q)?.mul(&bprime(r, q)?);
            let rhs = hochschild_b(r, q)?.mul(&norm_n(r, q - 1)?);
            if lhs != rhs {
                return Ok(Some(format!("b'N ≠ Nb in degree {q}")));
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => Ok(()),
        Ok(Some(msg)) => Err(msg),
        Err(e) => Err(e.to_string()),
    }
}

/// `dim HC_1(R) = dim ker D1 − rank D2`.
pub fn hc1_dim<F: Field>(r: &Algebra<F>) -> Result<usize> {
    let tot = total_complex(r)?;
    let kernel = tot.d1.nrows() - tot.d1.rank();
    Ok(kernel - tot.d2.rank())
}

/// `dim Ω¹_{R/ℚ} / dR` for a commutative algebra over the rationals.
///
/// `Ω¹` is the quotient of the free module on `dr_i` by the Leibniz
/// relations `d(r_i r_j) = r_i dr_j + r_j dr_i`; as a vector space it is
/// `R ⊗ span{dr_i}` with coordinates `(a, i) ↦ a·d + i` modulo all
/// `r_a`-multiples of those relations.
pub fn kahler_hc1_char0<F: Field>(r: &Algebra<F>) -> Result<usize> {
    if r.field().characteristic() != 0 {
        return Err(CoreError::Unsupported("the Kähler oracle needs characteristic 0".into()));
    }
    if !r.is_commutative() {
        return Err(CoreError::Unsupported("the Kähler oracle needs a commutative algebra".into()));
    }
    let f = r.field();
    let d = r.dim();
    let n = d * d;
    // c · (x ⊗ dr_i) for a ring element x
    let add_term = |row: &mut F::Row, c: &F::Elem, x: &Vector<F>, i: usize| {
        for (a, coef) in x.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
            row.add_at(f, a * d + i, &f.mul(c, coef));
        }
    };
    let mut rows = Vec::new();
    let one = f.one();
    let minus = f.neg(&one);
    for a in 0..d {
        let ra = r.basis_elem(a);
        for i in 0..d {
            for j in 0..d {
                let mut row = F::Row::zeros(f, n);
                // r_a · d(r_i r_j)
                for (k, c) in r.product_of_basis(i, j).iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                    add_term(&mut row, c, &ra, k);
                }
                add_term(&mut row, &minus, &r.mul(&ra, &r.basis_elem(i)), j);
                add_term(&mut row, &minus, &r.mul(&ra, &r.basis_elem(j)), i);
                rows.push(row);
            }
        }
    }
    let unit = r.unit_index();
    for i in 0..d {
        rows.push(F::Row::from_sparse(f, n, &[(unit * d + i, one.clone())]));
    }
    let span = Subspace::from_rows(f.clone(), n, rows);
    Ok(n - span.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{dual_numbers, ground_field, matrix_algebra, poly_quotient};
    use stlie_linalg::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn b_on_two_tensors_is_the_commutator() {
        let r = dual_numbers(gf(2));
        assert!(hochschild_b(&r, 1).unwrap().is_zero());
        let m = matrix_algebra(gf(2), 2).unwrap();
        assert!(!hochschild_b(&m, 1).unwrap().is_zero());
    }

    #[test]
    fn t_swaps_in_characteristic_two() {
        let r = dual_numbers(gf(2));
        let t = cyclic_t(&r, 1).unwrap();
        // 1⊗x (index 1) ↦ x⊗1 (index 2)
        assert_eq!(t.row(1).support(), vec![2]);
        assert_eq!(t.get(1, 2), 1);
        let n0 = norm_n(&r, 0).unwrap();
        assert_eq!(n0, DenseMatrix::identity(gf(2), 2));
    }

    #[test]
    fn degree_out_of_range() {
        let r = ground_field(gf(2));
        assert!(hochschild_b(&r, 4).is_err());
        assert!(cyclic_t(&r, 7).is_err());
    }

    #[test]
    fn small_hc1_values() {
        assert_eq!(hc1_dim(&ground_field(gf(2))).unwrap(), 0);
        assert_eq!(hc1_dim(&ground_field(Rationals)).unwrap(), 0);
        assert_eq!(hc1_dim(&dual_numbers(Rationals)).unwrap(), 0);
        assert_eq!(hc1_dim(&dual_numbers(gf(2))).unwrap(), 1);
        assert_eq!(hc1_dim(&matrix_algebra(gf(2), 2).unwrap()).unwrap(), 0);
    }

    #[test]
    fn kahler_oracle_small_cases() {
        let q = Rationals;
        assert_eq!(kahler_hc1_char0(&ground_field(q)).unwrap(), 0);
        assert_eq!(kahler_hc1_char0(&dual_numbers(q)).unwrap(), 0);
        let cubic = poly_quotient(q, &[q.zero(), q.zero(), q.zero(), q.one()]).unwrap();
        assert_eq!(kahler_hc1_char0(&cubic).unwrap(), 0);
        assert!(kahler_hc1_char0(&ground_field(gf(3))).is_err());
    }

    #[test]
    fn bicomplex_identities_hold() {
        check_bicomplex(&dual_numbers(gf(3))).unwrap();
        check_bicomplex(&matrix_algebra(gf(2), 2).unwrap()).unwrap();
    }
}
