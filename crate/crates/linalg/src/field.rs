//! Coefficient fields.
//!
//! Two families are supported: prime fields `F_p` with `p < 2^31`, whose
//! elements are canonical residues in `[0, p)`, and the rationals, whose
//! elements are normalized arbitrary-precision fractions.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::row::{FpRow, Row};
use crate::LinalgError;

/// Runtime descriptor of a supported field, as written in ring files and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldKind {
    Prime(u32),
    Rational,
}

impl FieldKind {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldKind::Prime(p) => u64::from(*p),
            FieldKind::Rational => 0,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime(p) => write!(f, "gf({p})"),
            FieldKind::Rational => f.write_str("rational"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = LinalgError;

    /// Accepts `gf(p)`, `gf:p`, a bare prime, `rational`, `q` or `Q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if matches!(s, "rational" | "q" | "Q" | "rationals") {
            return Ok(FieldKind::Rational);
        }
        let digits = s
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("gf:"))
            .unwrap_or(s);
        let p: u64 = digits
            .trim()
            .parse()
            .map_err(|_| LinalgError::InvalidField(s.to_string()))?;
        PrimeField::new(p).map(|f| FieldKind::Prime(f.p()))
    }
}

impl TryFrom<String> for FieldKind {
    type Error = LinalgError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FieldKind> for String {
    fn from(k: FieldKind) -> String {
        k.to_string()
    }
}

/// A field together with the row storage used for elimination over it.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;
    type Row: Row<Self>;

    fn kind(&self) -> FieldKind;
    fn characteristic(&self) -> u64 {
        self.kind().characteristic()
    }
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Parses an integer literal or, over the rationals, `a/b`.
    fn parse_elem(&self, s: &str) -> Option<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_p`. Elements are stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const MAX_PRIME: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p >= Self::MAX_PRIME || !is_prime(p) {
            return Err(LinalgError::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub(crate) fn mul_add(&self, acc: u32, c: u32, x: u32) -> u32 {
        ((u64::from(acc) + u64::from(c) * u64::from(x)) % u64::from(self.p)) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;
    type Row = FpRow;

    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(i64::from(self.p)) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) + u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) + u64::from(self.p) - u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) * u64::from(*b)) % u64::from(self.p)) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let p = u64::from(self.p);
        let (mut base, mut exp, mut acc) = (u64::from(*a), p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(acc as u32)
    }
    fn parse_elem(&self, s: &str) -> Option<u32> {
        let v: BigInt = s.trim().parse().ok()?;
        let r = ((v % BigInt::from(self.p)) + BigInt::from(self.p)) % BigInt::from(self.p);
        r.to_string().parse().ok()
    }
    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }
}

/// The rational numbers with exact arbitrary-precision arithmetic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    type Row = Vec<BigRational>;

    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn parse_elem(&self, s: &str) -> Option<BigRational> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                (!d.is_zero()).then(|| BigRational::new(n, d))
            }
            None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.neg(&3), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.parse_elem("-8"), Some(6));
    }

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn rationals_are_normalized() {
        let q = Rationals;
        let a = q.parse_elem("4/-6").unwrap();
        assert_eq!(q.format_elem(&a), "-2/3");
        assert_eq!(q.inv(&a).map(|x| q.format_elem(&x)).as_deref(), Some("-3/2"));
    }

    #[test]
    fn field_kind_round_trip() {
        for s in ["gf(2)", "gf:3", "5", "rational", "Q"] {
            let k: FieldKind = s.parse().unwrap();
            assert_eq!(k.to_string().parse::<FieldKind>().unwrap(), k);
        }
        assert!("gf(4)".parse::<FieldKind>().is_err());
    }
}
