//! Row vectors used by elimination.
//!
//! Over `F_2` rows are bit-packed into `u64` words and row operations are
//! word-level XORs. Other prime fields use one `u32` residue per entry and
//! the rationals use a dense vector of fractions.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::Zero;

use crate::field::{Field, PrimeField, Rationals};

/// Storage for one row of a matrix over `F`.
pub trait Row<F: Field>: Clone + Debug + PartialEq + Eq + Send + Sync {
    fn zeros(field: &F, len: usize) -> Self;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn get(&self, field: &F, i: usize) -> F::Elem;
    fn is_nonzero_at(&self, i: usize) -> bool;
    fn set(&mut self, field: &F, i: usize, v: &F::Elem);
    fn add_at(&mut self, field: &F, i: usize, v: &F::Elem);
    fn first_nonzero(&self) -> Option<usize>;
    fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }
    fn scale(&mut self, field: &F, c: &F::Elem);
    /// `self += c * other`. Entries of `other` before `start` must be zero.
    fn add_scaled(&mut self, field: &F, c: &F::Elem, other: &Self, start: usize);
    /// Positions of nonzero entries in increasing order.
    fn support(&self) -> Vec<usize>;

    fn from_entries(field: &F, len: usize, entries: &[F::Elem]) -> Self {
        debug_assert_eq!(entries.len(), len);
        let mut row = Self::zeros(field, len);
        for (i, v) in entries.iter().enumerate() {
            if !field.is_zero(v) {
                row.set(field, i, v);
            }
        }
        row
    }

    fn from_sparse(field: &F, len: usize, entries: &[(usize, F::Elem)]) -> Self {
        let mut row = Self::zeros(field, len);
        for (i, v) in entries {
            row.add_at(field, *i, v);
        }
        row
    }

    fn to_dense(&self, field: &F) -> Vec<F::Elem> {
        (0..self.len()).map(|i| self.get(field, i)).collect()
    }

    fn to_sparse(&self, field: &F) -> Vec<(usize, F::Elem)> {
        self.support().into_iter().map(|i| (i, self.get(field, i))).collect()
    }
}

/// Row storage over a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FpRow {
    /// `F_2`: bit `i` lives in word `i / 64`, position `i % 64`.
    Bits { len: usize, words: Vec<u64> },
    Words(Vec<u32>),
}

impl Row<PrimeField> for FpRow {
    fn zeros(field: &PrimeField, len: usize) -> Self {
        if field.p() == 2 {
            FpRow::Bits { len, words: vec![0; len.div_ceil(64)] }
        } else {
            FpRow::Words(vec![0; len])
        }
    }

    fn len(&self) -> usize {
        match self {
            FpRow::Bits { len, .. } => *len,
            FpRow::Words(w) => w.len(),
        }
    }

    #[inline]
    fn get(&self, _field: &PrimeField, i: usize) -> u32 {
        match self {
            FpRow::Bits { words, .. } => ((words[i / 64] >> (i % 64)) & 1) as u32,
            FpRow::Words(w) => w[i],
        }
    }

    #[inline]
    fn is_nonzero_at(&self, i: usize) -> bool {
        match self {
            FpRow::Bits { words, .. } => (words[i / 64] >> (i % 64)) & 1 == 1,
            FpRow::Words(w) => w[i] != 0,
        }
    }

    fn set(&mut self, _field: &PrimeField, i: usize, v: &u32) {
        match self {
            FpRow::Bits { words, .. } => {
                let mask = 1u64 << (i % 64);
                if *v & 1 == 1 {
                    words[i / 64] |= mask;
                } else {
                    words[i / 64] &= !mask;
                }
            }
            FpRow::Words(w) => w[i] = *v,
        }
    }

    fn add_at(&mut self, field: &PrimeField, i: usize, v: &u32) {
        match self {
            FpRow::Bits { words, .. } => words[i / 64] ^= u64::from(*v & 1) << (i % 64),
            FpRow::Words(w) => w[i] = field.add(&w[i], v),
        }
    }

    fn first_nonzero(&self) -> Option<usize> {
        match self {
            FpRow::Bits { words, .. } => words
                .iter()
                .enumerate()
                .find(|(_, w)| **w != 0)
                .map(|(k, w)| k * 64 + w.trailing_zeros() as usize),
            FpRow::Words(w) => w.iter().position(|x| *x != 0),
        }
    }

    fn scale(&mut self, field: &PrimeField, c: &u32) {
        match self {
            FpRow::Bits { words, .. } => {
                if *c == 0 {
                    words.iter_mut().for_each(|w| *w = 0);
                }
            }
            FpRow::Words(w) => w.iter_mut().for_each(|x| *x = field.mul(x, c)),
        }
    }

    fn add_scaled(&mut self, field: &PrimeField, c: &u32, other: &Self, start: usize) {
        if *c == 0 {
            return;
        }
        match (self, other) {
            (FpRow::Bits { words, .. }, FpRow::Bits { words: src, .. }) => {
                let from = start / 64;
                for (d, s) in words[from..].iter_mut().zip(&src[from..]) {
                    *d ^= *s;
                }
            }
            (FpRow::Words(dst), FpRow::Words(src)) => {
                for (d, s) in dst[start..].iter_mut().zip(&src[start..]) {
                    if *s != 0 {
                        *d = field.mul_add(*d, *c, *s);
                    }
                }
            }
            _ => unreachable!("mixed row representations over one field"),
        }
    }

    fn support(&self) -> Vec<usize> {
        match self {
            FpRow::Bits { words, .. } => {
                let mut out = Vec::new();
                for (k, &w) in words.iter().enumerate() {
                    let mut w = w;
                    while w != 0 {
                        out.push(k * 64 + w.trailing_zeros() as usize);
                        w &= w - 1;
                    }
                }
                out
            }
            FpRow::Words(w) => w.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, _)| i).collect(),
        }
    }
}

impl FpRow {
    /// Number of `u64` words backing a packed binary row.
    pub fn packed_words(&self) -> Option<usize> {
        match self {
            FpRow::Bits { words, .. } => Some(words.len()),
            FpRow::Words(_) => None,
        }
    }
}

impl Row<Rationals> for Vec<BigRational> {
    fn zeros(_field: &Rationals, len: usize) -> Self {
        vec![BigRational::zero(); len]
    }
    fn len(&self) -> usize {
        Vec::len(self)
    }
    fn get(&self, _field: &Rationals, i: usize) -> BigRational {
        self[i].clone()
    }
    fn is_nonzero_at(&self, i: usize) -> bool {
        !self[i].is_zero()
    }
    fn set(&mut self, _field: &Rationals, i: usize, v: &BigRational) {
        self[i] = v.clone();
    }
    fn add_at(&mut self, _field: &Rationals, i: usize, v: &BigRational) {
        self[i] += v;
    }
    fn first_nonzero(&self) -> Option<usize> {
        self.iter().position(|x| !x.is_zero())
    }
    fn scale(&mut self, _field: &Rationals, c: &BigRational) {
        for x in self.iter_mut() {
            if !x.is_zero() {
                *x *= c;
            }
        }
    }
    fn add_scaled(&mut self, _field: &Rationals, c: &BigRational, other: &Self, start: usize) {
        if c.is_zero() {
            return;
        }
        for (d, s) in self[start..].iter_mut().zip(&other[start..]) {
            if !s.is_zero() {
                *d += c * s;
            }
        }
    }
    fn support(&self) -> Vec<usize> {
        self.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
    }
}
