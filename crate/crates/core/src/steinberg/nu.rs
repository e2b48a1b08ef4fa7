//! Relations satisfied by the brackets `ν` of recentered lifts that are not
//! forced to vanish by the Steinberg relations.
//!
//! `n = 4`: `ν^{ij}_{kl}(a, b) = [X̃_ij(a), X̃_kl(b)]` for distinct `i, j, k, l`.
//! `n = 3`: `ν^i_{jk}(a, b) = [X̃_ij(a), X̃_ik(b)]` and `ν^{ik}_j(a, b) = [X̃_ij(a), X̃_kj(b)]`.

use stlie_linalg::{Field, Row, Subspace};

use super::lifts::LiftFamily;
use super::partition::CosetPartition;
use crate::homology::Uce;
use crate::report::Check;
use crate::ring::{Algebra, Vector};

/// `ℐ_2` (for `n = 4`) or `ℐ_3` (for `n = 3`) is passed as `ideal`.
pub fn nu_relation_suite<F: Field>(
    uce: &Uce<F>,
    ring: &Algebra<F>,
    lifts: &LiftFamily<F>,
    ideal: &Subspace<F>,
) -> Vec<Check> {
    if !lifts.is_recentered() {
        return vec![Check::fail("nu.lifts", "lifts are not recentered")];
    }
    let ideal: Vec<Vector<F>> = ideal.basis().iter().map(|v| ring.from_row(v)).collect();
    match lifts.n() {
        4 => suite_n4(uce, ring, lifts, &ideal),
        3 => suite_n3(uce, ring, lifts, &ideal),
        n => vec![Check::skipped("nu", format!("no ν relations for n = {n}"))],
    }
}

fn first_failure(id: &str, mut body: impl FnMut() -> Option<String>) -> Check {
    match body() {
        None => Check::pass(id),
        Some(e) => Check::fail(id, e),
    }
}

fn scaled<F: Field>(f: &F, c: i64, v: &F::Row) -> F::Row {
    let mut out = v.clone();
    out.scale(f, &f.from_i64(c));
    out
}

fn suite_n4<F: Field>(uce: &Uce<F>, r: &Algebra<F>, lifts: &LiftFamily<F>, ideal: &[Vector<F>]) -> Vec<Check> {
    let g = uce.carrier();
    let f = g.field();
    let d = r.dim();
    let one = r.one();
    let basis: Vec<Vector<F>> = (0..d).map(|l| r.basis_elem(l)).collect();
    let nu = |q: [usize; 4], a: &[F::Elem], b: &[F::Elem]| {
        let [i, j, k, l] = q;
        g.bracket(&lifts.x(i, j, a), &lifts.x(k, l, b))
    };
    let mut quads = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    if i != j && i != k && i != l && j != k && j != l && k != l {
                        quads.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    let show = |q: [usize; 4]| format!("({},{},{},{})", q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1);
    let partition = CosetPartition::new();

    vec![
        first_failure("nu.two_torsion", || {
            for &q in &quads {
                for a in &basis {
                    for b in &basis {
                        if !scaled(f, 2, &nu(q, a, b)).is_zero() {
                            return Some(format!("2ν ≠ 0 at {}", show(q)));
                        }
                    }
                }
            }
            None
        }),
        first_failure("nu.swap", || {
            for &q in &quads {
                let [i, j, k, l] = q;
                for a in &basis {
                    for b in &basis {
                        if nu([i, l, k, j], b, a) != nu(q, a, b) {
                            return Some(format!("ν^(il)_(kj)(b, a) ≠ ν^(ij)_(kl)(a, b) at {}", show(q)));
                        }
                    }
                }
            }
            None
        }),
        first_failure("nu.product_form", || {
            for &q in &quads {
                for a in &basis {
                    for b in &basis {
                        if nu(q, a, b) != nu(q, &r.mul(b, a), &one) {
                            return Some(format!("ν(a, b) ≠ ν(ba, 1) at {}", show(q)));
                        }
                    }
                }
            }
            None
        }),
        first_failure("nu.symmetric", || {
            for &q in &quads {
                for a in &basis {
                    for b in &basis {
                        if nu(q, a, b) != nu(q, b, a) {
                            return Some(format!("ν(a, b) ≠ ν(b, a) at {}", show(q)));
                        }
                    }
                }
            }
            None
        }),
        first_failure("nu.vanishes_on_ideal", || {
            for &q in &quads {
                for x in ideal {
                    if !nu(q, x, &one).is_zero() {
                        return Some(format!("ν(x, 1) ≠ 0 for x ∈ I_2 at {}", show(q)));
                    }
                }
            }
            None
        }),
        first_failure("nu.class_constant", || {
            for &q in &quads {
                let m = partition.theta([q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1]);
                let rep = partition.class(m)[0].map(|v| v - 1);
                for a in &basis {
                    for b in &basis {
                        if nu(q, a, b) != nu(rep, a, b) {
                            return Some(format!("ν differs between {} and {}", show(q), show(rep)));
                        }
                    }
                }
            }
            None
        }),
    ]
}

fn suite_n3<F: Field>(uce: &Uce<F>, r: &Algebra<F>, lifts: &LiftFamily<F>, ideal: &[Vector<F>]) -> Vec<Check> {
    let g = uce.carrier();
    let f = g.field();
    let d = r.dim();
    let one = r.one();
    let basis: Vec<Vector<F>> = (0..d).map(|l| r.basis_elem(l)).collect();
    // ν^i_{jk}: shared row i
    let row = |i: usize, j: usize, k: usize, a: &[F::Elem], b: &[F::Elem]| {
        g.bracket(&lifts.x(i, j, a), &lifts.x(i, k, b))
    };
    // ν^{ik}_j: shared column j
    let col = |i: usize, k: usize, j: usize, a: &[F::Elem], b: &[F::Elem]| {
        g.bracket(&lifts.x(i, j, a), &lifts.x(k, j, b))
    };
    let mut triples = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if i != j && j != k && i != k {
                    triples.push((i, j, k));
                }
            }
        }
    }
    let mut commutator_products = Vec::new();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                commutator_products.push(r.mul(&r.commutator(a, b), c));
            }
        }
    }

    vec![
        first_failure("nu.row_product_form", || {
            for &(i, j, k) in &triples {
                for a in &basis {
                    for b in &basis {
                        if row(i, j, k, a, b) != row(i, j, k, &one, &r.mul(a, b)) {
                            return Some(format!("ν^{}_({}{})(a, b) ≠ ν(1, ab)", i + 1, j + 1, k + 1));
                        }
                    }
                }
            }
            None
        }),
        first_failure("nu.row_three_torsion", || {
            for &(i, j, k) in &triples {
                for a in &basis {
                    if !scaled(f, 3, &row(i, j, k, &one, a)).is_zero() {
                        return Some(format!("3ν^{}_({}{}) ≠ 0", i + 1, j + 1, k + 1));
                    }
                }
            }
            None
        }),
        first_failure("nu.column_product_form", || {
            for &(i, j, k) in &triples {
                for a in &basis {
                    for b in &basis {
                        if col(i, k, j, a, b) != col(i, k, j, &one, &r.mul(a, b)) {
                            return Some(format!("ν^({}{})_{}(a, b) ≠ ν(1, ab)", i + 1, k + 1, j + 1));
                        }
                    }
                }
            }
            None
        }),
        first_failure("nu.column_three_torsion", || {
            for &(i, j, k) in &triples {
                for a in &basis {
                    if !scaled(f, 3, &col(i, k, j, &one, a)).is_zero() {
                        return Some(format!("3ν^({}{})_{} ≠ 0", i + 1, k + 1, j + 1));
                    }
                }
            }
            None
        }),
        first_failure("nu.commutator_vanishing", || {
            for &(i, j, k) in &triples {
                for x in &commutator_products {
                    if !row(i, j, k, &one, x).is_zero() || !col(i, k, j, &one, x).is_zero() {
                        return Some(format!("ν(1, (ab − ba)c) ≠ 0 at ({},{},{})", i + 1, j + 1, k + 1));
                    }
                }
            }
            None
        }),
        first_failure("nu.vanishes_on_ideal", || {
            for &(i, j, k) in &triples {
                for x in ideal {
                    if !row(i, j, k, &one, x).is_zero() || !col(i, k, j, &one, x).is_zero() {
                        return Some(format!("ν(1, x) ≠ 0 for x ∈ I_3 at ({},{},{})", i + 1, j + 1, k + 1));
                    }
                }
            }
            None
        }),
        first_failure("nu.antisymmetry", || {
            for &(i, j, k) in &triples {
                for a in &basis {
                    if row(i, k, j, &one, a) != scaled(f, -1, &row(i, j, k, &one, a)) {
                        return Some(format!("ν^{}_({}{})(1, a) ≠ −ν^{}_({}{})(1, a)", i + 1, k + 1, j + 1, i + 1, j + 1, k + 1));
                    }
                    if col(k, i, j, &one, a) != scaled(f, -1, &col(i, k, j, &one, a)) {
                        return Some(format!("ν^({}{})_{}(1, a) ≠ −ν^({}{})_{}(1, a)", k + 1, i + 1, j + 1, i + 1, k + 1, j + 1));
                    }
                }
            }
            None
        }),
    ]
}
