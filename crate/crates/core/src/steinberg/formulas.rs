//! Bracket identities between `T_ij`, `t` and the `X_ij` in `st_n(R)`,
//! checked on all basis elements and admissible index patterns.

use stlie_linalg::{Field, Row};

use super::model::SteinbergModel;
use crate::report::Check;
use crate::ring::Vector;

/// Runs the whole suite; one check per identity.
pub fn bracket_formula_suite<F: Field>(st: &SteinbergModel<F>) -> Vec<Check> {
    let n = st.n();
    let r = st.ring();
    let d = r.dim();
    let f = st.field();
    let basis: Vec<Vector<F>> = (0..d).map(|l| r.basis_elem(l)).collect();
    let triples: Vec<(usize, usize, usize)> =
        (0..d).flat_map(|a| (0..d).flat_map(move |b| (0..d).map(move |c| (a, b, c)))).collect();
    let neg = |v: F::Row| {
        let mut v = v;
        v.scale(f, &f.neg(&f.one()));
        v
    };
    let distinct = |idx: &[usize]| idx.iter().enumerate().all(|(p, x)| idx[..p].iter().all(|y| y != x));
    let ordered_pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();

    let mut out = Vec::new();
    let mut run = |id: &str, applicable: bool, body: &mut dyn FnMut() -> Option<String>| {
        out.push(match (applicable, body()) {
            (false, _) => Check::skipped(id, format!("no admissible indices for n = {n}")),
            (true, None) => Check::pass(id),
            (true, Some(e)) => Check::fail(id, e),
        });
    };

    run("formula.t_antisymmetry", true, &mut || {
        for &(i, j) in &ordered_pairs {
            for a in 0..d {
                for b in 0..d {
                    if st.t_ij(i, j, &basis[a], &basis[b]) != neg(st.t_ij(j, i, &basis[b], &basis[a])) {
                        return Some(format!("T_{}{}(r_{a}, r_{b}) ≠ −T_{}{}(r_{b}, r_{a})", i + 1, j + 1, j + 1, i + 1));
                    }
                }
            }
        }
        None
    });

    run("formula.t_disjoint", n >= 4, &mut || {
        for &(i, j) in &ordered_pairs {
            for &(k, l) in &ordered_pairs {
                if !distinct(&[i, j, k, l]) {
                    continue;
                }
                for &(a, b, c) in &triples {
                    if !st.bracket(&st.t_ij(i, j, &basis[a], &basis[b]), st.x_basis(k, l, c)).is_zero() {
                        return Some(format!("[T_{}{}, X_{}{}] ≠ 0 on (r_{a}, r_{b}, r_{c})", i + 1, j + 1, k + 1, l + 1));
                    }
                }
            }
        }
        None
    });

    let index_triples: Vec<(usize, usize, usize)> = ordered_pairs
        .iter()
        .flat_map(|&(i, j)| (0..n).filter(move |&k| k != i && k != j).map(move |k| (i, j, k)))
        .collect();

    run("formula.t_row", true, &mut || {
        for &(i, j, k) in &index_triples {
            for &(a, b, c) in &triples {
                let lhs = st.bracket(&st.t_ij(i, j, &basis[a], &basis[b]), st.x_basis(i, k, c));
                let abc = r.mul(&r.mul(&basis[a], &basis[b]), &basis[c]);
                if lhs != st.x(i, k, &abc) {
                    return Some(format!("[T_{}{}, X_{}{}] on (r_{a}, r_{b}, r_{c})", i + 1, j + 1, i + 1, k + 1));
                }
            }
        }
        None
    });

    run("formula.t_column", true, &mut || {
        for &(i, j, k) in &index_triples {
            for &(a, b, c) in &triples {
                let lhs = st.bracket(&st.t_ij(i, j, &basis[a], &basis[b]), st.x_basis(k, i, c));
                let cab = r.mul(&basis[c], &r.mul(&basis[a], &basis[b]));
                if lhs != neg(st.x(k, i, &cab)) {
                    return Some(format!("[T_{}{}, X_{}{}] on (r_{a}, r_{b}, r_{c})", i + 1, j + 1, k + 1, i + 1));
                }
            }
        }
        None
    });

    run("formula.t_same_pair", true, &mut || {
        for &(i, j) in &ordered_pairs {
            for &(a, b, c) in &triples {
                let lhs = st.bracket(&st.t_ij(i, j, &basis[a], &basis[b]), st.x_basis(i, j, c));
                let abc = r.mul(&r.mul(&basis[a], &basis[b]), &basis[c]);
                let cba = r.mul(&r.mul(&basis[c], &basis[b]), &basis[a]);
                if lhs != st.x(i, j, &r.add(&abc, &cba)) {
                    return Some(format!("[T_{0}{1}, X_{0}{1}] on (r_{a}, r_{b}, r_{c})", i + 1, j + 1));
                }
            }
        }
        None
    });

    run("formula.t_additivity", true, &mut || {
        for &(i, j, k) in &index_triples {
            for &(a, b, c) in &triples {
                let (x, y, z) = (&basis[a], &basis[b], &basis[c]);
                let lhs = st.t_ij(i, j, &r.mul(x, y), z);
                let mut rhs = st.t_ij(i, k, x, &r.mul(y, z));
                rhs.add_scaled(f, &f.one(), &st.t_ij(k, j, y, &r.mul(z, x)), 0);
                if lhs != rhs {
                    return Some(format!(
                        "T_{}{}(ab, c) ≠ T_{}{}(a, bc) + T_{}{}(b, ca) on (r_{a}, r_{b}, r_{c})",
                        i + 1,
                        j + 1,
                        i + 1,
                        k + 1,
                        k + 1,
                        j + 1
                    ));
                }
            }
        }
        None
    });

    run("formula.small_t_row", true, &mut || {
        for i in 1..n {
            for &(a, b, c) in &triples {
                let lhs = st.bracket(&st.small_t(&basis[a], &basis[b]), st.x_basis(0, i, c));
                let comm = r.commutator(&basis[a], &basis[b]);
                if lhs != st.x(0, i, &r.mul(&comm, &basis[c])) {
                    return Some(format!("[t, X_1{}] on (r_{a}, r_{b}, r_{c})", i + 1));
                }
            }
        }
        None
    });

    run("formula.small_t_column", true, &mut || {
        for i in 1..n {
            for &(a, b, c) in &triples {
                let lhs = st.bracket(&st.small_t(&basis[a], &basis[b]), st.x_basis(i, 0, c));
                let comm = r.commutator(&basis[a], &basis[b]);
                if lhs != neg(st.x(i, 0, &r.mul(&basis[c], &comm))) {
                    return Some(format!("[t, X_{}1] on (r_{a}, r_{b}, r_{c})", i + 1));
                }
            }
        }
        None
    });

    run("formula.small_t_other", true, &mut || {
        for j in 1..n {
            for k in (1..n).filter(|&k| k != j) {
                for &(a, b, c) in &triples {
                    if !st.bracket(&st.small_t(&basis[a], &basis[b]), st.x_basis(j, k, c)).is_zero() {
                        return Some(format!("[t, X_{}{}] ≠ 0 on (r_{a}, r_{b}, r_{c})", j + 1, k + 1));
                    }
                }
            }
        }
        None
    });

    run("formula.small_t_j_independent", true, &mut || {
        for a in 0..d {
            for b in 0..d {
                let t = st.small_t(&basis[a], &basis[b]);
                for j in 2..n {
                    if st.small_t_via(j, &basis[a], &basis[b]) != t {
                        return Some(format!("t(r_{a}, r_{b}) depends on j = {}", j + 1));
                    }
                }
            }
        }
        None
    });

    out
}
