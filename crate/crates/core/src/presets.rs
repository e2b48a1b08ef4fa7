//! Named algebras and the preset string syntax used by the command line.
//!
//! Preset strings: `gf:P`, `q`, `poly:P:POLY`, `dual:P`, `matrix:P:K`,
//! `group:P:NAME`. `P` is a prime or `q` for the rationals, `POLY` a monic
//! polynomial in `x` such as `x^2` or `x^3+x+1`, and `NAME` is `S3` or `C<n>`.

use stlie_linalg::{Field, FieldKind, PrimeField, Rationals};

use crate::error::{CoreError, Result};
use crate::ring::{Algebra, Vector};

/// An algebra over a field chosen at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebra {
    Prime(Algebra<PrimeField>),
    Rational(Algebra<Rationals>),
}

/// Evaluates `$body` with `$a` bound to the concrete algebra inside an [`AnyAlgebra`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            $crate::presets::AnyAlgebra::Prime($a) => $body,
            $crate::presets::AnyAlgebra::Rational($a) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn field_kind(&self) -> FieldKind {
        with_algebra!(self, a => a.field().kind())
    }

    pub fn dim(&self) -> usize {
        with_algebra!(self, a => a.dim())
    }

    pub fn labels(&self) -> &[String] {
        with_algebra!(self, a => a.labels())
    }
}

/// Calls a generic constructor with the field named by `kind`.
pub(crate) fn build_any<P, Q>(kind: FieldKind, prime: P, rational: Q) -> Result<AnyAlgebra>
where
    P: FnOnce(PrimeField) -> Result<Algebra<PrimeField>>,
    Q: FnOnce(Rationals) -> Result<Algebra<Rationals>>,
{
    match kind {
        FieldKind::Prime(p) => Ok(AnyAlgebra::Prime(prime(PrimeField::new(u64::from(p))?)?)),
        FieldKind::Rational => Ok(AnyAlgebra::Rational(rational(Rationals)?)),
    }
}

fn unit_vec<F: Field>(field: &F, d: usize, i: usize) -> Vector<F> {
    let mut v = vec![field.zero(); d];
    v[i] = field.one();
    v
}

/// The ground field as a one-dimensional algebra.
pub fn ground_field<F: Field>(field: F) -> Algebra<F> {
    let table = vec![vec![vec![field.one()]]];
    Algebra::new(field, vec!["1".into()], 0, table).expect("the ground field is a valid algebra")
}

/// `F[x]/(f)` with basis `1, x, …, x^{k-1}`; `coeffs` lists `f` from the
/// constant term up and must end in a leading 1.
pub fn poly_quotient<F: Field>(field: F, coeffs: &[F::Elem]) -> Result<Algebra<F>> {
    let k = coeffs.len().checked_sub(1).filter(|&k| k >= 1).ok_or_else(|| {
        CoreError::Input("polynomial must have degree at least 1".into())
    })?;
    if !field.is_one(&coeffs[k]) {
        return Err(CoreError::Input("polynomial must be monic".into()));
    }
    let labels: Vec<String> = (0..k)
        .map(|e| match e {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{e}"),
        })
        .collect();
    // powers[e] = coordinates of x^e for e < 2k - 1
    let mut powers: Vec<Vector<F>> = (0..k).map(|e| unit_vec(&field, k, e)).collect();
    for _ in k..2 * k - 1 {
        // x * previous power
        let prev = powers.last().expect("k >= 1").clone();
        let mut next = vec![field.zero(); k];
        next[1..k].clone_from_slice(&prev[..k - 1]);
        let top = prev[k - 1].clone();
        for (e, slot) in next.iter_mut().enumerate() {
            *slot = field.sub(slot, &field.mul(&top, &coeffs[e]));
        }
        powers.push(next);
    }
    let table = (0..k).map(|a| (0..k).map(|b| powers[a + b].clone()).collect()).collect();
    Algebra::new(field, labels, 0, table)
}

/// Dual numbers `F[x]/(x^2)`.
pub fn dual_numbers<F: Field>(field: F) -> Algebra<F> {
    let c = vec![field.zero(), field.zero(), field.one()];
    poly_quotient(field, &c).expect("x^2 is monic")
}

/// `M_k(F)` on the basis `1, e_ij for (i,j) ≠ (k,k)`.
///
/// The coordinate of `1` is the `(k,k)` entry, the coordinate of `e_ii`
/// (`i < k`) is `entry(i,i) − entry(k,k)`, and off-diagonal coordinates are entries.
pub fn matrix_algebra<F: Field>(field: F, k: usize) -> Result<Algebra<F>> {
    if k == 0 {
        return Err(CoreError::Input("matrix size must be positive".into()));
    }
    let units: Vec<(usize, usize)> =
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).filter(|&(i, j)| (i, j) != (k - 1, k - 1)).collect();
    let d = k * k;
    let mut labels = vec!["1".to_string()];
    labels.extend(units.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)));
    let zero = field.zero();
    // basis element as a k×k matrix
    let matrix_of = |b: usize| -> Vec<Vec<F::Elem>> {
        let mut m = vec![vec![zero.clone(); k]; k];
        if b == 0 {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = field.one();
            }
        } else {
            let (i, j) = units[b - 1];
            m[i][j] = field.one();
        }
        m
    };
    let coords_of = |m: &[Vec<F::Elem>]| -> Vector<F> {
        let kk = m[k - 1][k - 1].clone();
        let mut v = vec![kk.clone()];
        for &(i, j) in &units {
            v.push(if i == j { field.sub(&m[i][i], &kk) } else { m[i][j].clone() });
        }
        v
    };
    let mats: Vec<_> = (0..d).map(matrix_of).collect();
    let mut table = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in 0..d {
            let mut prod = vec![vec![zero.clone(); k]; k];
            for i in 0..k {
                for (l, x) in mats[a][i].iter().enumerate() {
                    for j in 0..k {
                        prod[i][j] = field.add(&prod[i][j], &field.mul(x, &mats[b][l][j]));
                    }
                }
            }
            table[a][b] = coords_of(&prod);
        }
    }
    Algebra::new(field, labels, 0, table)
}

/// The group algebra of a finite group given by its Cayley table, identity first.
pub fn group_algebra<F: Field>(field: F, labels: Vec<String>, cayley: &[Vec<usize>]) -> Result<Algebra<F>> {
    let n = labels.len();
    if cayley.len() != n || cayley.iter().any(|r| r.len() != n || r.iter().any(|&g| g >= n)) {
        return Err(CoreError::Input("malformed Cayley table".into()));
    }
    let table = cayley.iter().map(|row| row.iter().map(|&g| unit_vec(&field, n, g)).collect()).collect();
    Algebra::new(field, labels, 0, table)
}

/// Cayley table of a named group: `S3` or `C<n>`.
pub fn named_group(name: &str) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    let upper = name.trim().to_ascii_uppercase();
    if upper == "S3" {
        // permutations of {0,1,2} in one-line notation, identity first
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"].map(String::from).to_vec();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        return Ok((labels, table));
    }
    if let Some(n) = upper.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()).filter(|&n| n >= 1) {
        let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g^{i}") }).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        return Ok((labels, table));
    }
    Err(CoreError::Input(format!("unknown group {name:?}; expected S3 or C<n>")))
}

/// Parses a field token: a prime, `gf(p)`, or `q`/`rational`.
pub fn parse_field(token: &str) -> Result<FieldKind> {
    token.parse::<FieldKind>().map_err(|e| CoreError::Input(e.to_string()))
}

/// Parses a monic polynomial in `x` into coefficients, constant term first.
pub fn parse_polynomial<F: Field>(field: &F, text: &str) -> Result<Vec<F::Elem>> {
    let bad = |why: &str| CoreError::Input(format!("cannot parse polynomial {text:?}: {why}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if (c == '+' || c == '-') && i > 0 {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut coeffs: Vec<F::Elem> = Vec::new();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, term.strip_prefix('+').unwrap_or(term)),
        };
        let (coef_text, exp) = match body.find('x') {
            Some(pos) => {
                let rest = &body[pos + 1..];
                let exp = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').and_then(|e| e.parse::<usize>().ok()).ok_or_else(|| bad("bad exponent"))?
                };
                (body[..pos].trim_end_matches('*'), exp)
            }
            None => (body, 0),
        };
        let mut c = if coef_text.is_empty() {
            field.one()
        } else {
            field.parse_elem(coef_text).ok_or_else(|| bad("bad coefficient"))?
        };
        if neg {
            c = field.neg(&c);
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, field.zero());
        }
        coeffs[exp] = field.add(&coeffs[exp], &c);
    }
    while coeffs.len() > 1 && field.is_zero(coeffs.last().expect("nonempty")) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// Builds an algebra from a preset string such as `matrix:2:2`.
pub fn preset(text: &str) -> Result<AnyAlgebra> {
    let parts: Vec<&str> = text.trim().split(':').collect();
    let arity = |n: usize| -> Result<()> {
        if parts.len() == n {
            Ok(())
        } else {
            Err(CoreError::Input(format!("preset {text:?} expects {} fields separated by ':'", n)))
        }
    };
    match parts[0].to_ascii_lowercase().as_str() {
        "q" | "rational" if parts.len() == 1 => Ok(AnyAlgebra::Rational(ground_field(Rationals))),
        "gf" => {
            arity(2)?;
            build_any(parse_field(parts[1])?, |f| Ok(ground_field(f)), |q| Ok(ground_field(q)))
        }
        "poly" => {
            arity(3)?;
            let poly = parts[2];
            build_any(
                parse_field(parts[1])?,
                |f| poly_quotient(f, &parse_polynomial(&f, poly)?),
                |q| poly_quotient(q, &parse_polynomial(&q, poly)?),
            )
        }
        "dual" => {
            arity(2)?;
            build_any(parse_field(parts[1])?, |f| Ok(dual_numbers(f)), |q| Ok(dual_numbers(q)))
        }
        "matrix" => {
            arity(3)?;
            let k: usize = parts[2].parse().map_err(|_| CoreError::Input(format!("bad matrix size {:?}", parts[2])))?;
            build_any(parse_field(parts[1])?, |f| matrix_algebra(f, k), |q| matrix_algebra(q, k))
        }
        "group" => {
            arity(3)?;
            let (labels, table) = named_group(parts[2])?;
            build_any(
                parse_field(parts[1])?,
                |f| group_algebra(f, labels.clone(), &table),
                |q| group_algebra(q, labels.clone(), &table),
            )
        }
        other => Err(CoreError::Input(format!(
            "unknown preset {other:?}; expected gf, q, poly, dual, matrix or group"
        ))),
    }
}
