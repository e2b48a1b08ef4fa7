//! The six cosets of the Klein four-group `H = {(1), (13), (24), (13)(24)}` in `S_4`.
//!
//! Quadruples are written in one-line notation with entries `1..=4`. The
//! coset of `(i,j,k,l)` is `{(i,j,k,l), (k,j,i,l), (i,l,k,j), (k,l,i,j)}`.
//! Cosets are numbered `1..=6` by their lexicographically least member, so
//! the coset of `(1,2,3,4)` is number 1.

use std::collections::BTreeMap;

pub type Quad = [usize; 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    classes: Vec<[Quad; 4]>,
    theta: BTreeMap<Quad, usize>,
}

/// The orbit of `q` under right multiplication by `H`, in a fixed order.
pub fn orbit(q: Quad) -> [Quad; 4] {
    let [i, j, k, l] = q;
    [[i, j, k, l], [k, j, i, l], [i, l, k, j], [k, l, i, j]]
}

fn permutations() -> Vec<Quad> {
    let mut out = Vec::with_capacity(24);
    for a in 1..=4 {
        for b in (1..=4).filter(|&b| b != a) {
            for c in (1..=4).filter(|&c| c != a && c != b) {
                let d = 10 - a - b - c;
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

impl CosetPartition {
    pub fn new() -> Self {
        let mut classes = Vec::new();
        let mut theta = BTreeMap::new();
        for q in permutations() {
            if theta.contains_key(&q) {
                continue;
            }
            let mut class = orbit(q);
            class.sort_unstable();
            classes.push(class);
            for member in class {
                theta.insert(member, classes.len());
            }
        }
        let p = Self { classes, theta };
        debug_assert!(p.check().is_ok());
        p
    }

    /// `θ(q) ∈ 1..=6`. Panics unless `q` is a permutation of `1..=4`.
    pub fn theta(&self, q: Quad) -> usize {
        self.theta[&q]
    }

    /// Members of coset `m ∈ 1..=6`, sorted.
    pub fn class(&self, m: usize) -> &[Quad; 4] {
        &self.classes[m - 1]
    }

    /// Six classes of four, `P_1` the orbit of the identity, and `θ`
    /// invariant under `(i,j,k,l) ↦ (k,l,i,j)` and `(i,j,k,l) ↦ (i,l,k,j)`.
    pub fn check(&self) -> Result<(), String> {
        if self.classes.len() != 6 || self.theta.len() != 24 {
            return Err("expected 6 classes covering 24 quadruples".into());
        }
        let mut p1 = orbit([1, 2, 3, 4]);
        p1.sort_unstable();
        if self.classes[0] != p1 {
            return Err("first class is not the orbit of (1,2,3,4)".into());
        }
        for (&[i, j, k, l], &m) in &self.theta {
            if self.theta[&[k, l, i, j]] != m || self.theta[&[i, l, k, j]] != m {
                return Err(format!("θ is not invariant at ({i},{j},{k},{l})"));
            }
        }
        Ok(())
    }
}

impl Default for CosetPartition {
    fn default() -> Self {
        Self::new()
    }
}

/// `+1` if `m < n`, `−1` otherwise.
pub fn sign(m: usize, n: usize) -> i64 {
    if m < n {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_class_and_fixed_theta_values() {
        let p = CosetPartition::new();
        p.check().unwrap();
        assert_eq!(p.theta([1, 2, 3, 4]), 1);
        assert_eq!(p.theta([3, 2, 1, 4]), 1);
        let m = p.theta([2, 1, 3, 4]);
        assert!((2..=6).contains(&m));
        assert_eq!(p.theta([3, 4, 2, 1]), m);
        assert_eq!(p.theta([2, 4, 3, 1]), m);
        assert_eq!(m, 4);
    }

    #[test]
    fn classes_are_ordered_by_least_member() {
        let p = CosetPartition::new();
        let least: Vec<Quad> = (1..=6).map(|m| p.class(m)[0]).collect();
        assert_eq!(least, vec![[1, 2, 3, 4], [1, 2, 4, 3], [1, 3, 2, 4], [2, 1, 3, 4], [2, 1, 4, 3], [3, 1, 4, 2]]);
        assert!((1..=6).all(|m| p.class(m).len() == 4));
    }

    #[test]
    fn signs() {
        assert_eq!(sign(1, 2), 1);
        assert_eq!(sign(3, 1), -1);
        for m in 1..=3 {
            for n in (1..=3).filter(|&n| n != m) {
                assert_eq!(sign(m, n), -sign(n, m));
            }
        }
    }
}
