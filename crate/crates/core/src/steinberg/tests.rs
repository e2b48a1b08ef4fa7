use stlie_linalg::{Field, PrimeField, Row};

use super::*;
use crate::cyclic::hc1_dim;
use crate::homology::{h2_dim, Uce};
use crate::presets::{dual_numbers, ground_field};
use crate::report::Status;
use crate::ring::Algebra;
use crate::sl::build_sl;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

struct Built<F: Field> {
    uce: Uce<F>,
    lifts: LiftFamily<F>,
    st: SteinbergModel<F>,
    w_dim: usize,
}

fn build<F: Field>(r: &Algebra<F>, n: usize) -> Built<F> {
    let sl = build_sl(r, n).unwrap();
    let uce = Uce::new(sl.lie()).unwrap();
    let raw = lift_generators(&uce, &sl).unwrap();
    let lifts = recenter(&uce, &sl, &raw).unwrap();
    let w = offending_span(&uce, &lifts).unwrap();
    let st = build_st(&uce, &sl, &lifts, &w, hc1_dim(r).unwrap()).unwrap();
    Built { uce, lifts, st, w_dim: w.dim() }
}

fn all_pass(checks: &[crate::report::Check]) {
    for c in checks {
        assert_ne!(c.status, Status::Fail, "{}: {}", c.id, c.detail);
    }
}

#[test]
fn f2_n4_steinberg_and_hat() {
    let r = ground_field(gf(2));
    let b = build(&r, 4);
    assert_eq!(b.uce.dim(), 21);
    assert_eq!(b.w_dim, 6);
    assert_eq!(b.st.dim(), 15);
    assert_eq!(h2_dim(b.st.lie()).unwrap(), 6);
    all_pass(&bracket_formula_suite(&b.st));
    let rq = r.quotient_rm(2).unwrap();
    all_pass(&nu_relation_suite(&b.uce, &r, &b.lifts, rq.ideal()));
    let psi = build_psi(&b.st, &rq).unwrap();
    psi.verify_cocycle(&b.st).unwrap();
    let hat = build_hat(&b.st, &psi).unwrap();
    all_pass(&hat.certify(21));
}

#[test]
fn f3_n3_steinberg_and_hat() {
    let r = ground_field(gf(3));
    let b = build(&r, 3);
    assert_eq!(b.uce.dim(), 14);
    assert_eq!(b.w_dim, 6);
    assert_eq!(b.st.dim(), 8);
    let rq = r.quotient_rm(3).unwrap();
    all_pass(&nu_relation_suite(&b.uce, &r, &b.lifts, rq.ideal()));
    let psi = build_psi(&b.st, &rq).unwrap();
    psi.verify_cocycle(&b.st).unwrap();
    let hat = build_hat(&b.st, &psi).unwrap();
    assert_eq!(hat.dim(), 14);
    all_pass(&hat.certify(14));
}

#[test]
fn dual_numbers_over_f2_n4() {
    let r = dual_numbers(gf(2));
    let b = build(&r, 4);
    assert_eq!(b.st.dim(), 31);
    assert_eq!(b.w_dim, 12);
    assert_eq!(b.st.phi_kernel().dim(), 1);
    let psi = build_psi(&b.st, &r.quotient_rm(2).unwrap()).unwrap();
    psi.verify_cocycle(&b.st).unwrap();
    let hat = build_hat(&b.st, &psi).unwrap();
    assert_eq!(hat.dim(), 43);
    all_pass(&hat.certify(43));
}

#[test]
fn w_vanishes_for_n5() {
    let b = build(&ground_field(gf(2)), 5);
    assert_eq!(b.w_dim, 0);
    assert_eq!(b.st.dim(), 24);
    all_pass(&bracket_formula_suite(&b.st));
}

#[test]
fn recentered_lifts_do_not_depend_on_the_choice() {
    for (p, n) in [(2, 4), (3, 3), (2, 5)] {
        let r = ground_field(gf(p));
        let sl = build_sl(&r, n).unwrap();
        let uce = Uce::new(sl.lie()).unwrap();
        let a = recenter(&uce, &sl, &lift_generators(&uce, &sl).unwrap()).unwrap();
        let other = lift_generators_with(&uce, &sl, |i, j| greatest_other(n, i, j), Carry::Right).unwrap();
        let b = recenter(&uce, &sl, &other).unwrap();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                assert_eq!(a.basis(i, j, 0), b.basis(i, j, 0));
            }
        }
    }
}

#[test]
fn zeroing_one_pair_breaks_the_cocycle() {
    let r = ground_field(gf(2));
    let b = build(&r, 4);
    let psi = build_psi(&b.st, &r.quotient_rm(2).unwrap()).unwrap();
    let u = r.unit_index();
    let bad = psi.with_pair_zeroed(psi.x_index(0, 1, u), psi.x_index(2, 3, u)).unwrap();
    assert!(bad.verify_cocycle(&b.st).is_err());
}

#[test]
fn lifts_map_to_elementary_matrices_and_are_linear() {
    let r = dual_numbers(gf(3));
    let sl = build_sl(&r, 3).unwrap();
    let uce = Uce::new(sl.lie()).unwrap();
    let lifts = lift_generators(&uce, &sl).unwrap();
    let one = r.one();
    assert_eq!(uce.project(&lifts.x(0, 1, &one)), sl.e(0, 1, &one));
    let (a, b) = (r.basis_elem(0), r.basis_elem(1));
    let sum = r.add(&a, &b);
    let direct = uce.class_of_wedge(&sl.e(0, 2, &sum), &sl.e(2, 1, &one));
    assert_eq!(direct, lifts.x(0, 1, &sum));
    let mut parts = lifts.x(0, 1, &a);
    parts.add_scaled(r.field(), &1, &lifts.x(0, 1, &b), 0);
    assert_eq!(direct, parts);
}

#[test]
fn torus_element_acts_by_two_for_f3_n3() {
    let r = ground_field(gf(3));
    let b = build(&r, 3);
    let g = b.uce.carrier();
    let one = r.one();
    let t = g.bracket(&b.lifts.x(0, 1, &one), &b.lifts.x(1, 0, &one));
    let x = b.lifts.x(0, 1, &one);
    let mut twice = x.clone();
    twice.scale(r.field(), &2);
    assert_eq!(g.bracket(&t, &x), twice);
}

#[test]
fn psi_values_on_named_pairs() {
    let r = ground_field(gf(2));
    let b = build(&r, 4);
    let psi = build_psi(&b.st, &r.quotient_rm(2).unwrap()).unwrap();
    let v = psi.eval(b.st.x_basis(0, 1, 0), b.st.x_basis(2, 3, 0));
    assert_eq!(v.to_sparse(r.field()), vec![(0, 1)]);
    for t in b.st.torus().basis() {
        for k in 0..b.st.dim() {
            assert!(psi.eval(t, &b.st.lie().basis_vector(k)).is_zero());
        }
    }

    let r3 = dual_numbers(gf(3));
    let b3 = build(&r3, 3);
    let q = r3.quotient_rm(3).unwrap();
    let psi3 = build_psi(&b3.st, &q).unwrap();
    let x = r3.basis_elem(1);
    let v = psi3.eval(&b3.st.x(0, 1, &x), &b3.st.x(0, 2, &r3.one()));
    // block 0 holds +(x̄ · 1̄); the other blocks vanish
    let expected = q.project(&r3, &x);
    let dense = v.to_dense(r3.field());
    assert_eq!(&dense[..q.dim()], &expected[..]);
    assert!(dense[q.dim()..].iter().all(|c| *c == 0));
}

#[test]
fn nu_vanishes_for_matrix_ring_n4() {
    let r = crate::presets::matrix_algebra(gf(2), 2).unwrap();
    let b = build(&r, 4);
    assert_eq!(b.w_dim, 0);
    let g = b.uce.carrier();
    let d = r.dim();
    for q in [[0, 1, 2, 3], [0, 2, 1, 3], [1, 0, 3, 2]] {
        for a in 0..d {
            for c in 0..d {
                assert!(g.bracket(b.lifts.basis(q[0], q[1], a), b.lifts.basis(q[2], q[3], c)).is_zero());
            }
        }
    }
    all_pass(&nu_relation_suite(&b.uce, &r, &b.lifts, r.quotient_rm(2).unwrap().ideal()));
}

/// `t` uses `T_1j(1, ba)`; the alternative `t′(a, b) = T_1j(1, ab)` differs by
/// `T_1j(1, ab − ba)` and fails the row formula for noncommutative `R`.
#[test]
fn small_t_convention() {
    let r = crate::presets::matrix_algebra(gf(2), 2).unwrap();
    let b = build(&r, 3);
    let st = &b.st;
    // characteristic 2: differences are written as sums
    let f = r.field();
    let d = r.dim();
    let one = r.one();
    let mut nontrivial = false;
    let mut alternative_fails = false;
    for a in 0..d {
        for c in 0..d {
            let (x, y) = (r.basis_elem(a), r.basis_elem(c));
            let t = st.small_t(&x, &y);
            let mut t_alt = st.t_ij(0, 1, &x, &y);
            t_alt.add_scaled(f, &1, &st.t_ij(0, 1, &one, &r.mul(&x, &y)), 0);
            let mut diff = t.clone();
            diff.add_scaled(f, &1, &t_alt, 0);
            assert_eq!(diff, st.t_ij(0, 1, &one, &r.commutator(&x, &y)));
            for e in 0..d {
                let z = r.basis_elem(e);
                let expected = st.x(0, 2, &r.mul(&r.commutator(&x, &y), &z));
                nontrivial |= !st.bracket(&t, st.x_basis(0, 1, e)).is_zero();
                alternative_fails |= st.bracket(&t_alt, st.x_basis(0, 2, e)) != expected;
            }
        }
    }
    assert!(nontrivial);
    assert!(alternative_fails);
}
