use proptest::prelude::*;
use stlie_linalg::{DenseMatrix, Field, PrimeField, Quotient, Rationals, Row, Subspace};

fn matrix_strategy(p: u32, max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(0..p, c), r))
}

fn fp(p: u32, m: &[Vec<u32>]) -> DenseMatrix<PrimeField> {
    DenseMatrix::from_dense(PrimeField::new(u64::from(p)).unwrap(), m)
}

proptest! {
    #[test]
    fn rref_is_idempotent_and_keeps_row_space(p in prop::sample::select(vec![2u32, 3, 5, 7]), m in matrix_strategy(7, 9, 140)) {
        let m: Vec<Vec<u32>> = m.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        let a = fp(p, &m);
        let r = a.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert_eq!(a.row_space(), r.row_space());
    }

    #[test]
    fn rank_equals_rank_of_transpose(p in prop::sample::select(vec![2u32, 3, 5]), m in matrix_strategy(5, 12, 80)) {
        let m: Vec<Vec<u32>> = m.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        let a = fp(p, &m);
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn rank_plus_nullity_is_column_count(p in prop::sample::select(vec![2u32, 3, 11]), m in matrix_strategy(11, 10, 70)) {
        let m: Vec<Vec<u32>> = m.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        let a = fp(p, &m);
        let ns = a.nullspace();
        prop_assert_eq!(a.rank() + ns.dim(), a.ncols());
        for v in ns.basis() {
            prop_assert!(a.apply(v).is_zero());
        }
    }

    #[test]
    fn rational_rank_matches_transpose(m in matrix_strategy(7, 6, 6)) {
        let q = Rationals;
        let dense: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&x| q.from_i64(i64::from(x) - 3)).collect()).collect();
        let a = DenseMatrix::from_dense(q, &dense);
        prop_assert_eq!(a.rank(), a.transpose().rank());
        prop_assert_eq!(a.rank() + a.nullspace().dim(), a.ncols());
    }

    #[test]
    fn quotient_reduce_is_linear_and_kills_the_subspace(
        p in prop::sample::select(vec![2u32, 3, 5]),
        vrows in matrix_strategy(5, 6, 12),
        picks in prop::collection::vec(0u32..5, 6),
        a in prop::collection::vec(0u32..5, 6),
        b in prop::collection::vec(0u32..5, 6),
        c in 0u32..5,
    ) {
        let f = PrimeField::new(u64::from(p)).unwrap();
        let n = vrows[0].len();
        let vrows: Vec<_> = vrows.iter().map(|r| <PrimeField as Field>::Row::from_entries(&f, n, &r.iter().map(|x| x % p).collect::<Vec<_>>())).collect();
        let v = Subspace::from_rows(f, n, vrows.clone());
        // U spanned by a random combination-chosen subset of V's rows.
        let urows: Vec<_> = vrows.iter().zip(&picks).filter(|(_, &k)| k % 2 == 0).map(|(r, _)| r.clone()).collect();
        let u = Subspace::from_rows(f, n, urows);
        let q = Quotient::new(&v, &u).unwrap();
        prop_assert_eq!(q.dim(), v.dim() - u.dim());
        for ub in u.basis() {
            prop_assert!(q.reduce(ub).unwrap().0.iter().all(|x| *x == 0));
        }
        let combo = |w: &[u32]| {
            let mut out = <PrimeField as Field>::Row::zeros(&f, n);
            for (k, r) in v.basis().iter().enumerate() {
                out.add_scaled(&f, &(w[k % w.len()] % p), r, 0);
            }
            out
        };
        let (x, y) = (combo(&a), combo(&b));
        let mut s = x.clone();
        s.add_scaled(&f, &(c % p), &y, 0);
        let cx = q.reduce(&x).unwrap().0;
        let cy = q.reduce(&y).unwrap().0;
        let cs = q.reduce(&s).unwrap().0;
        let expect: Vec<u32> = cx.iter().zip(&cy).map(|(l, r)| f.add(l, &f.mul(&(c % p), r))).collect();
        prop_assert_eq!(cs, expect);
    }
}
