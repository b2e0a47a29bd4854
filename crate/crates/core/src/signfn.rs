//! Sign functions of permutations: quadratic forms over the two-element field
//! in the parity variables `ī_1, …, ī_k`.
//!
//! Variable `a` belongs to the edge `σ⁻¹(a) → a` of the permutation digraph,
//! i.e. edges are named by their target vertex.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `f = Σ_{a ∈ linear} ī_a + Σ_{{a,b} ∈ quadratic} ī_a ī_b` over `Z/2`,
/// stored in reduced multilinear form (0-based indices, pairs with `a < b`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignFunction {
    k: usize,
    linear: BTreeSet<usize>,
    quadratic: BTreeSet<(usize, usize)>,
}

impl SignFunction {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            ..Default::default()
        }
    }

    /// Builds a form from 0-based indices; repeated entries cancel.
    pub fn from_parts(
        k: usize,
        linear: impl IntoIterator<Item = usize>,
        quadratic: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut f = Self::zero(k);
        for a in linear {
            if a >= k {
                return Err(Error::PositionOutOfRange { position: a + 1, k });
            }
            f.toggle_linear(a);
        }
        for (a, b) in quadratic {
            if a >= k || b >= k {
                return Err(Error::PositionOutOfRange {
                    position: a.max(b) + 1,
                    k,
                });
            }
            f.toggle_pair(a, b);
        }
        Ok(f)
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn linear(&self) -> &BTreeSet<usize> {
        &self.linear
    }

    pub fn quadratic(&self) -> &BTreeSet<(usize, usize)> {
        &self.quadratic
    }

    pub fn is_zero(&self) -> bool {
        self.linear.is_empty() && self.quadratic.is_empty()
    }

    pub fn toggle_linear(&mut self, a: usize) {
        if !self.linear.remove(&a) {
            self.linear.insert(a);
        }
    }

    /// Adds `ī_a ī_b`; for `a == b` this is `ī_a` since `ī² = ī`.
    pub fn toggle_pair(&mut self, a: usize, b: usize) {
        if a == b {
            self.toggle_linear(a);
            return;
        }
        let key = (a.min(b), a.max(b));
        if !self.quadratic.remove(&key) {
            self.quadratic.insert(key);
        }
    }

    /// Adds `(Σ_{x ∈ left} ī_x)(Σ_{y ∈ right} ī_y)`.
    pub fn add_product(&mut self, left: &[usize], right: &[usize]) {
        for &x in left {
            for &y in right {
                self.toggle_pair(x, y);
            }
        }
    }

    /// Value of the form at a parity assignment.
    pub fn evaluate(&self, parities: &[bool]) -> Result<bool> {
        if parities.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                actual: parities.len(),
            });
        }
        Ok(self.evaluate_unchecked(parities))
    }

    #[inline]
    pub(crate) fn evaluate_unchecked(&self, parities: &[bool]) -> bool {
        let mut v = false;
        for &a in &self.linear {
            v ^= parities[a];
        }
        for &(a, b) in &self.quadratic {
            v ^= parities[a] & parities[b];
        }
        v
    }

    /// Substitutes `ī_a ↦ ī_{map(a)}` in a form on `new_k` variables.
    /// Identified variables are reduced with `ī² = ī`.
    pub fn relabel(&self, new_k: usize, map: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero(new_k);
        for &a in &self.linear {
            out.toggle_linear(map(a));
        }
        for &(a, b) in &self.quadratic {
            out.toggle_pair(map(a), map(b));
        }
        debug_assert!(out.linear.iter().all(|&a| a < new_k));
        out
    }
}

/// Debug form `i3 + i1*i3 + …`, 1-based.
impl fmt::Display for SignFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !core::mem::take(&mut first) {
                f.write_str(" + ")?;
            }
            Ok::<_, fmt::Error>(())
        };
        for &a in &self.linear {
            sep(f)?;
            write!(f, "i{}", a + 1)?;
        }
        for &(a, b) in &self.quadratic {
            sep(f)?;
            write!(f, "i{}*i{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// `P1(σ) = { a : σ⁻¹(a) < a }`.
pub fn distinguished_indices(sigma: &Permutation) -> BTreeSet<usize> {
    let inv = sigma.inverse();
    (0..sigma.len()).filter(|&a| inv.image(a) < a).collect()
}

/// Edge into `a`, shifted by ε = 1/3 and scaled by 3: `(3σ⁻¹(a)+1, 3a-1)`,
/// returned as an ordered open interval.
fn shifted_edge(inv: &Permutation, a: usize) -> (i64, i64) {
    let s = 3 * inv.image(a) as i64 + 1;
    let t = 3 * a as i64 - 1;
    (s, t)
}

fn alternate(p: (i64, i64), q: (i64, i64)) -> bool {
    let (lo, hi) = (p.0.min(p.1), p.0.max(p.1));
    let inside = |x: i64| lo < x && x < hi;
    inside(q.0) != inside(q.1)
}

/// `P2(σ)`: pairs `a < b` whose shifted edges alternate.
pub fn distinguished_pairs(sigma: &Permutation) -> BTreeSet<(usize, usize)> {
    let inv = sigma.inverse();
    let edges: Vec<_> = (0..sigma.len()).map(|a| shifted_edge(&inv, a)).collect();
    let mut out = BTreeSet::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if alternate(edges[a], edges[b]) {
                out.insert((a, b));
            }
        }
    }
    out
}

pub fn sign_function(sigma: &Permutation) -> SignFunction {
    SignFunction {
        k: sigma.len(),
        linear: distinguished_indices(sigma),
        quadratic: distinguished_pairs(sigma),
    }
}

/// Sign function of `σ' = (l l+1)·σ·(l l+1)` from that of σ (0-based `l`).
///
/// With `a, b` the edges entering `l+1, l` and `c, d` the edges leaving
/// `l, l+1`, the form changes by `(ī_a + ī_d)(ī_b + ī_c)`; afterwards the
/// variables are renamed to the targets of the edges in σ'.
pub fn swap_neighbors_sign(f: &SignFunction, sigma: &Permutation, l: usize) -> Result<SignFunction> {
    let k = sigma.len();
    if l + 1 >= k {
        return Err(Error::PositionOutOfRange { position: l + 1, k });
    }
    if f.arity() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            actual: f.arity(),
        });
    }
    let (a, b, c, d) = (l + 1, l, sigma.image(l), sigma.image(l + 1));
    let mut g = f.clone();
    g.add_product(&[a, d], &[b, c]);
    let swap = |x: usize| {
        if x == l {
            l + 1
        } else if x == l + 1 {
            l
        } else {
            x
        }
    };
    Ok(g.relabel(k, swap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().map(|x| x - 1).collect()
    }

    fn pairs(xs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        xs.iter().map(|&(a, b)| ((a.min(b)) - 1, a.max(b) - 1)).collect()
    }

    #[test]
    fn distinguished_index_examples() {
        for k in 1..7 {
            let expected: BTreeSet<usize> = (1..k).collect();
            assert_eq!(distinguished_indices(&Permutation::standard_cycle(k)), expected);
        }
        assert!(distinguished_indices(&Permutation::identity(4)).is_empty());
        assert_eq!(distinguished_indices(&p("(1 3 2)")), set(&[3]));
    }

    #[test]
    fn distinguished_pair_examples() {
        assert_eq!(distinguished_pairs(&p("(1 3 2)")), pairs(&[(1, 2), (1, 3), (2, 3)]));
        for k in 1..7 {
            assert!(distinguished_pairs(&Permutation::standard_cycle(k)).is_empty());
        }
        assert_eq!(
            distinguished_pairs(&p("(1 3)(2 4)")),
            pairs(&[(1, 2), (2, 3), (1, 4), (3, 4)])
        );
    }

    #[test]
    fn sign_function_examples() {
        let f = sign_function(&p("(1 2)"));
        assert_eq!(f.linear(), &set(&[2]));
        assert!(f.quadratic().is_empty());
        let f = sign_function(&p("(1 4 3 2)"));
        assert_eq!(f.linear(), &set(&[4]));
        assert_eq!(f.quadratic(), &pairs(&[(1, 4), (1, 2), (3, 4), (2, 3)]));
        assert!(sign_function(&Permutation::identity(5)).is_zero());
        assert_eq!(sign_function(&p("(1 3 2)")).to_string(), "i3 + i1*i2 + i1*i3 + i2*i3");
    }

    #[test]
    fn evaluate_examples() {
        let f12 = sign_function(&p("(1 2)"));
        assert!(f12.evaluate(&[false, true]).unwrap());
        let f132 = sign_function(&p("(1 3 2)"));
        assert!(f132.evaluate(&[true, true, false]).unwrap());
        assert!(!f132.evaluate(&[false; 3]).unwrap());
        assert_eq!(
            f132.evaluate(&[true]),
            Err(Error::LengthMismatch { expected: 3, actual: 1 })
        );
    }

    #[test]
    fn swap_examples() {
        let s = p("(1 2)");
        let f = sign_function(&s);
        assert_eq!(swap_neighbors_sign(&f, &s, 0).unwrap(), f);
        let s = p("(1 2 3)");
        let swapped = s.conjugate_adjacent(0).unwrap();
        assert_eq!(
            swap_neighbors_sign(&sign_function(&s), &s, 0).unwrap(),
            sign_function(&swapped)
        );
        assert!(swap_neighbors_sign(&sign_function(&s), &s, 2).is_err());
    }

    #[test]
    fn swap_agrees_with_recomputation_exhaustively() {
        for k in 2..=5 {
            for s in Permutation::all(k) {
                let f = sign_function(&s);
                for l in 0..k - 1 {
                    let direct = sign_function(&s.conjugate_adjacent(l).unwrap());
                    assert_eq!(
                        swap_neighbors_sign(&f, &s, l).unwrap(),
                        direct,
                        "σ = {s}, l = {}",
                        l + 1
                    );
                }
            }
        }
    }

    #[test]
    fn toggling_reduces_squares() {
        let mut f = SignFunction::zero(3);
        f.add_product(&[0, 1], &[1, 2]);
        // (x0 + x1)(x1 + x2) = x0x1 + x0x2 + x1 + x1x2
        assert_eq!(f, SignFunction::from_parts(3, [1], [(0, 1), (0, 2), (1, 2)]).unwrap());
        f.toggle_pair(2, 1);
        assert!(!f.quadratic().contains(&(1, 2)));
    }
}
