//! TOML ring files.
//!
//! Explicit form:
//!
//! ```toml
//! field = "gf(2)"          # or "rational"
//! basis = ["1", "x"]
//! unit = "1"
//! mul = [
//!   ["x", "x", []],        # x*x = 0
//! ]
//! ```
//!
//! Each `mul` entry is `[left, right, [[basis, coefficient], ...]]`. Basis
//! elements may be written by name or by 0-based index; coefficients are
//! integers or strings such as `"1/2"`. Products with the unit are filled in
//! automatically and any product not listed is zero.
//!
//! Preset form: `preset = "matrix"` together with `p = 2` (or `field = ...`)
//! and the preset's parameter: `k` for `matrix`, `f` for `poly`, `group` for
//! `group`. A full preset string such as `preset = "poly:2:x^2"` also works.

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;
use stlie_linalg::{Field, FieldKind};

use crate::error::{CoreError, Result};
use crate::presets::{self, build_any, AnyAlgebra};
use crate::ring::Algebra;

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum Key {
    Index(usize),
    Name(String),
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

#[derive(Deserialize, Debug)]
struct MulEntry(Key, Key, Vec<(Key, Scalar)>);

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct RingFile {
    field: Option<String>,
    basis: Option<Vec<String>>,
    unit: Option<Key>,
    mul: Option<Vec<MulEntry>>,
    preset: Option<String>,
    p: Option<Scalar>,
    k: Option<usize>,
    f: Option<String>,
    group: Option<String>,
}

pub fn load_ring_file(path: &Path) -> Result<AnyAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CoreError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_ring_toml(&text).map_err(|e| match e {
        CoreError::Input(msg) => CoreError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_ring_toml(text: &str) -> Result<AnyAlgebra> {
    let file: RingFile = toml::from_str(text).map_err(|e| CoreError::Input(e.to_string()))?;
    if let Some(name) = file.preset.clone() {
        return from_preset_stanza(&file, &name);
    }
    let kind = presets::parse_field(file.field.as_deref().ok_or_else(|| missing("field"))?)?;
    build_any(kind, |f| explicit(f, &file), |q| explicit(q, &file))
}

fn missing(key: &str) -> CoreError {
    CoreError::Input(format!("missing key `{key}`"))
}

fn from_preset_stanza(file: &RingFile, name: &str) -> Result<AnyAlgebra> {
    if name.contains(':') || name == "q" || name == "rational" {
        return presets::preset(name);
    }
    let field = match (&file.p, &file.field) {
        (Some(Scalar::Int(p)), None) => p.to_string(),
        (Some(Scalar::Text(p)), None) => p.clone(),
        (None, Some(f)) => f.clone(),
        (None, None) => return Err(missing("p")),
        (Some(_), Some(_)) => return Err(CoreError::Input("give either `p` or `field`, not both".into())),
    };
    let kind = presets::parse_field(&field)?;
    let token = match kind {
        FieldKind::Prime(p) => p.to_string(),
        FieldKind::Rational => "q".to_string(),
    };
    let preset_text = match name {
        "gf" => format!("gf:{token}"),
        "dual" | "dual_numbers" => format!("dual:{token}"),
        "poly" | "poly_quotient" => format!("poly:{token}:{}", file.f.as_deref().ok_or_else(|| missing("f"))?),
        "matrix" => format!("matrix:{token}:{}", file.k.ok_or_else(|| missing("k"))?),
        "group" | "group_algebra" => format!("group:{token}:{}", file.group.as_deref().ok_or_else(|| missing("group"))?),
        other => return Err(CoreError::Input(format!("unknown preset {other:?}"))),
    };
    presets::preset(&preset_text)
}

fn explicit<F: Field>(field: F, file: &RingFile) -> Result<Algebra<F>> {
    let labels = file.basis.clone().ok_or_else(|| missing("basis"))?;
    let d = labels.len();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(CoreError::Input(format!("duplicate basis name {l:?}")));
        }
    }
    let resolve = |k: &Key, ctx: &str| -> Result<usize> {
        match k {
            Key::Index(i) if *i < d => Ok(*i),
            Key::Index(i) => Err(CoreError::Input(format!("{ctx}: basis index {i} out of range"))),
            Key::Name(n) => index.get(n.as_str()).copied().ok_or_else(|| {
                CoreError::Input(format!("{ctx}: unknown basis element {n:?}"))
            }),
        }
    };
    let unit = resolve(file.unit.as_ref().ok_or_else(|| missing("unit"))?, "unit")?;
    let mut table: Vec<Vec<Option<Vec<F::Elem>>>> = vec![vec![None; d]; d];
    for (n, MulEntry(a, b, terms)) in file.mul.iter().flatten().enumerate() {
        let ctx = format!("mul entry {}", n + 1);
        let (i, j) = (resolve(a, &ctx)?, resolve(b, &ctx)?);
        if table[i][j].is_some() {
            return Err(CoreError::Input(format!("{ctx}: product {} * {} given twice", labels[i], labels[j])));
        }
        let mut v = vec![field.zero(); d];
        for (k, c) in terms {
            let k = resolve(k, &ctx)?;
            let c = match c {
                Scalar::Int(x) => field.from_i64(*x),
                Scalar::Text(s) => field
                    .parse_elem(s)
                    .ok_or_else(|| CoreError::Input(format!("{ctx}: bad coefficient {s:?}")))?,
            };
            v[k] = field.add(&v[k], &c);
        }
        table[i][j] = Some(v);
    }
    let basis = |i: usize| {
        let mut v = vec![field.zero(); d];
        v[i] = field.one();
        v
    };
    let table = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    table[i][j].clone().unwrap_or_else(|| {
                        if i == unit {
                            basis(j)
                        } else if j == unit {
                            basis(i)
                        } else {
                            vec![field.zero(); d]
                        }
                    })
                })
                .collect()
        })
        .collect();
    Algebra::new(field, labels, unit, table)
}
