//! The recurrence engine for the universal GL weight system `w_GL`.
//!
//! For neighbors `l, l+1` of a permutation σ, write σ' for σ conjugated by
//! the transposition `(l l+1)`. Commuting the two matrix units at those
//! positions gives
//!
//! ```text
//! w(σ) = w(σ') + w(σ̃) - w(σ̃')
//! ```
//!
//! where σ̃ and σ̃' contract the two neighbors into one vertex (see
//! [`merge_neighbors`]). A contraction that closes an edge onto itself
//! leaves a free loop, worth `C0`; a contraction producing an isolated fixed
//! point is worth `C1` times the permutation without it.
//!
//! Reduction is driven toward a concatenation of standard cycles: list the
//! cycles by least element, each read from its least element, and bubble
//! adjacent elements into that order. Each swap removes exactly one
//! inversion and every contraction drops an element, so the recursion
//! terminates.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::perm::{ChordDiagram, Permutation};
use crate::poly::{casimir, substitute_c0, Poly};
use crate::Rational;

/// Storage for already computed values, keyed by single-block permutations.
///
/// Methods take `&self` so that thread-safe stores can be shared between
/// evaluators running in parallel.
pub trait MemoStore {
    fn lookup(&self, key: &Permutation) -> Option<Poly>;
    fn store(&self, key: Permutation, value: Poly);
}

/// Single-threaded memo table.
#[derive(Default, Debug)]
pub struct LocalMemo {
    table: RefCell<BTreeMap<Permutation, Poly>>,
}

impl LocalMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.borrow().is_empty()
    }

    pub fn entries(&self) -> Vec<(Permutation, Poly)> {
        self.table
            .borrow()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }
}

impl MemoStore for LocalMemo {
    fn lookup(&self, key: &Permutation) -> Option<Poly> {
        self.table.borrow().get(key).cloned()
    }

    fn store(&self, key: Permutation, value: Poly) {
        self.table.borrow_mut().insert(key, value);
    }
}

/// Which out-of-order neighbor pair the recurrence reduces first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReductionPolicy {
    #[default]
    Leftmost,
    Rightmost,
}

/// How two neighbors `l, l+1` are contracted into one vertex `l'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MergeKind {
    /// `l'` keeps the edge entering `l` and the edge leaving `l+1`; the edge
    /// leaving `l` is joined to the edge entering `l+1`.
    KeepLeftIn,
    /// `l'` keeps the edge entering `l+1` and the edge leaving `l`; the edge
    /// leaving `l+1` is joined to the edge entering `l`.
    KeepRightIn,
}

/// Result of contracting two neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merge {
    /// The contracted permutation on `k-1` elements; the new vertex sits at `l`.
    pub perm: Permutation,
    /// The joined edges were one and the same edge, which closed into a loop.
    pub free_loop: bool,
    /// For every edge of σ (named by its target), the name of the
    /// corresponding edge in `perm`, or `None` for the free loop.
    pub edge_map: Vec<Option<usize>>,
}

/// Contracts the neighbors `l, l+1` (0-based) of σ.
pub fn merge_neighbors(sigma: &Permutation, l: usize, kind: MergeKind) -> Result<Merge> {
    let k = sigma.len();
    if l + 1 >= k {
        return Err(Error::PositionOutOfRange { position: l + 1, k });
    }
    let (keep_in, keep_out) = match kind {
        MergeKind::KeepLeftIn => (l, l + 1),
        MergeKind::KeepRightIn => (l + 1, l),
    };
    // Edges are named by their target. The edge leaving `drop_out` is glued
    // to the edge entering `drop_in`; the glued edge takes the smaller name.
    let (drop_in, drop_out) = (keep_out, keep_in);
    let (p, q) = (sigma.image(drop_out), drop_in);
    let rep = |x: usize| if x == p || x == q { p.min(q) } else { x };
    let free_loop = p == q;

    // (in-edge, out-edge) of every surviving vertex, in the new order.
    let mut ends = Vec::with_capacity(k - 1);
    for u in 0..k {
        if u == l {
            ends.push((rep(keep_in), rep(sigma.image(keep_out))));
        } else if u != l + 1 {
            ends.push((rep(u), rep(sigma.image(u))));
        }
    }
    let mut vertex_of_in = vec![usize::MAX; k];
    for (v, &(i, _)) in ends.iter().enumerate() {
        debug_assert_eq!(vertex_of_in[i], usize::MAX);
        vertex_of_in[i] = v;
    }
    let images = ends.iter().map(|&(_, o)| vertex_of_in[o]).collect::<Vec<_>>();
    debug_assert!(images.iter().all(|&x| x != usize::MAX));
    let edge_map = (0..k)
        .map(|x| {
            let v = vertex_of_in[rep(x)];
            (v != usize::MAX).then_some(v)
        })
        .collect();
    Ok(Merge {
        perm: Permutation::from_images_unchecked(images),
        free_loop,
        edge_map,
    })
}

/// Positions of the elements in the target order: cycles by least element,
/// each read in traversal order starting from its least element.
fn target_ranks(sigma: &Permutation) -> Vec<usize> {
    let mut rank = vec![0; sigma.len()];
    for (r, x) in sigma.cycles().into_iter().flatten().enumerate() {
        rank[x] = r;
    }
    rank
}

/// Positions `l` such that `l, l+1` are out of target order.
pub fn reducible_positions(sigma: &Permutation) -> Vec<usize> {
    let rank = target_ranks(sigma);
    (0..sigma.len().saturating_sub(1))
        .filter(|&l| rank[l] > rank[l + 1])
        .collect()
}

/// Number of inversions relative to the target order; strictly decreases
/// along the swap branch of the recurrence.
pub fn target_inversions(sigma: &Permutation) -> usize {
    let rank = target_ranks(sigma);
    let mut count = 0;
    for i in 0..rank.len() {
        for j in i + 1..rank.len() {
            if rank[i] > rank[j] {
                count += 1;
            }
        }
    }
    count
}

/// Evaluates `w_GL` with a given memo store and reduction policy.
pub struct Evaluator<'m, M: MemoStore + ?Sized> {
    memo: &'m M,
    policy: ReductionPolicy,
}

impl<'m, M: MemoStore + ?Sized> Evaluator<'m, M> {
    pub fn new(memo: &'m M, policy: ReductionPolicy) -> Self {
        Self { memo, policy }
    }

    pub fn evaluate(&self, sigma: &Permutation) -> Poly {
        if sigma.is_empty() {
            return Poly::one();
        }
        let blocks = sigma.concatenation_blocks();
        if blocks.len() == 1 {
            return self.evaluate_block(sigma);
        }
        blocks.iter().fold(Poly::one(), |acc, b| &acc * &self.evaluate_block(b))
    }

    /// Evaluates using a specific first reduction position, which must be
    /// out of target order. Used to compare reduction choices.
    pub fn evaluate_at(&self, sigma: &Permutation, l: usize) -> Result<Poly> {
        if !reducible_positions(sigma).contains(&l) {
            return Err(Error::PositionOutOfRange {
                position: l + 1,
                k: sigma.len(),
            });
        }
        Ok(self.reduce(sigma, l))
    }

    fn evaluate_block(&self, sigma: &Permutation) -> Poly {
        if let Some(v) = self.memo.lookup(sigma) {
            return v;
        }
        let value = match sigma.standard_cycle_length() {
            Some(k) => casimir(k as u32),
            None => {
                let candidates = reducible_positions(sigma);
                let l = match self.policy {
                    ReductionPolicy::Leftmost => candidates.first(),
                    ReductionPolicy::Rightmost => candidates.last(),
                };
                let l = *l.expect("a single block that is not a standard cycle is out of target order");
                self.reduce(sigma, l)
            }
        };
        debug_assert!(value.is_integral());
        self.memo.store(sigma.clone(), value.clone());
        value
    }

    fn reduce(&self, sigma: &Permutation, l: usize) -> Poly {
        let swapped = sigma.conjugate_adjacent(l).expect("l + 1 < k");
        let mut value = self.evaluate(&swapped);
        value += &self.contracted(sigma, l, MergeKind::KeepLeftIn);
        value -= &self.contracted(sigma, l, MergeKind::KeepRightIn);
        value
    }

    fn contracted(&self, sigma: &Permutation, l: usize, kind: MergeKind) -> Poly {
        let merge = merge_neighbors(sigma, l, kind).expect("l + 1 < k");
        let mut value = if merge.perm.image(l) == l {
            let bypass = merge.perm.remove_fixed_point(l).expect("l is fixed");
            &casimir(1) * &self.evaluate(&bypass)
        } else {
            self.evaluate(&merge.perm)
        };
        if merge.free_loop {
            value = &casimir(0) * &value;
        }
        value
    }
}

/// `w_GL(σ)` as a polynomial in `C0, C1, …`, computed with a fresh memo.
pub fn w_gl(sigma: &Permutation) -> Poly {
    let memo = LocalMemo::new();
    Evaluator::new(&memo, ReductionPolicy::default()).evaluate(sigma)
}

/// The weight system on a chord diagram, through its involution.
pub fn w_gl_diagram(d: &ChordDiagram) -> Poly {
    w_gl(&d.to_involution())
}

/// `w_GL(σ)` with `C0 = m - n`, the value attached to `gl(m|n)`.
pub fn specialize(sigma: &Permutation, m: usize, n: usize) -> Poly {
    substitute_c0(&w_gl(sigma), &Rational::from_integer((m as i64 - n as i64).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::signfn::sign_function;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn c(k: u32) -> Poly {
        casimir(k)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(w_gl(&Permutation::identity(0)), Poly::one());
        assert_eq!(w_gl(&p("(1 2)")), c(2));
        assert_eq!(w_gl(&p("(1 3 2)")).to_string(), "C3 - C0*C2 + C1^2");
        assert_eq!(w_gl(&Permutation::identity(4)), c(1).pow(4));
        let expected = Poly::from_terms([
            (Monomial::var(4), q(1)),
            (Monomial::from_pairs([(0, 1), (3, 1)]), q(-2)),
            (Monomial::from_pairs([(1, 1), (2, 1)]), q(2)),
            (Monomial::from_pairs([(0, 2), (2, 1)]), q(1)),
            (Monomial::from_pairs([(0, 1), (1, 2)]), q(-1)),
        ]);
        // confirmed against the brute-force sum in several gl(m|n)
        assert_eq!(w_gl(&p("(1 4 3 2)")), expected);
    }

    #[test]
    fn diagram_values() {
        let one = ChordDiagram::new(&[(1, 2)]).unwrap();
        assert_eq!(w_gl_diagram(&one), c(2));
        let parallel = ChordDiagram::new(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(w_gl_diagram(&parallel), c(2).pow(2));
        let crossing = ChordDiagram::new(&[(1, 3), (2, 4)]).unwrap();
        assert_eq!(w_gl_diagram(&crossing).to_string(), "C2^2 - C0*C2 + C1^2");
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(specialize(&p("(1 3 2)"), 1, 1).to_string(), "C3 + C1^2");
        assert_eq!(specialize(&p("(1 3 2)"), 2, 1).to_string(), "C3 - C2 + C1^2");
        for (m, n) in [(0, 0), (3, 1), (1, 4)] {
            assert_eq!(specialize(&Permutation::identity(2), m, n), c(1).pow(2));
        }
    }

    #[test]
    fn two_cycle_is_standard() {
        // The degenerate contraction with a shared edge never reaches the
        // recurrence: (1 2) is caught as a standard cycle.
        assert_eq!(p("(1 2)").standard_cycle_length(), Some(2));
    }

    #[test]
    fn merge_shapes() {
        // (1 3)(2 4), contracting 2 and 3
        let s = p("(1 3)(2 4)");
        let m = merge_neighbors(&s, 1, MergeKind::KeepLeftIn).unwrap();
        assert_eq!(m.perm, p("(1 3 2)"));
        assert!(!m.free_loop);
        let m = merge_neighbors(&s, 1, MergeKind::KeepRightIn).unwrap();
        assert_eq!(m.perm, p("(1 2 3)"));
        // (1 2 3) joining the edge 1 → 2 with itself
        let m = merge_neighbors(&p("(1 2 3)"), 0, MergeKind::KeepLeftIn).unwrap();
        assert!(m.free_loop);
        assert_eq!(m.perm, p("(1 2)"));
        assert_eq!(m.edge_map[1], None);
    }

    #[test]
    fn swap_branch_decreases_inversions() {
        for k in 2..=6 {
            for s in Permutation::all(k) {
                let before = target_inversions(&s);
                for l in reducible_positions(&s) {
                    let after = target_inversions(&s.conjugate_adjacent(l).unwrap());
                    assert_eq!(after + 1, before, "σ = {s}");
                }
                if before == 0 {
                    let blocks = s.concatenation_blocks();
                    assert!(blocks.iter().all(|b| b.standard_cycle_length().is_some()), "σ = {s}");
                }
            }
        }
    }

    #[test]
    fn values_have_integer_coefficients_and_bounded_degree() {
        let memo = LocalMemo::new();
        let ev = Evaluator::new(&memo, ReductionPolicy::Leftmost);
        for k in 0..=6 {
            for s in Permutation::all(k) {
                let v = ev.evaluate(&s);
                assert!(v.is_integral(), "σ = {s}");
                assert!(v.weighted_degree() as usize <= k, "σ = {s}: {v}");
            }
        }
    }

    #[test]
    fn cached_values_match_fresh_computation() {
        let memo = LocalMemo::new();
        let ev = Evaluator::new(&memo, ReductionPolicy::Leftmost);
        for s in Permutation::all(5) {
            ev.evaluate(&s);
        }
        for (key, value) in memo.entries().into_iter().step_by(7) {
            assert_eq!(w_gl(&key), value, "σ = {key}");
        }
    }

    #[test]
    fn every_reduction_position_agrees() {
        let memo = LocalMemo::new();
        let ev = Evaluator::new(&memo, ReductionPolicy::Leftmost);
        for k in 2..=5 {
            for s in Permutation::all(k) {
                let reference = ev.evaluate(&s);
                for l in reducible_positions(&s) {
                    assert_eq!(ev.evaluate_at(&s, l).unwrap(), reference, "σ = {s}, l = {}", l + 1);
                }
            }
        }
    }

    #[test]
    fn evaluate_at_rejects_ordered_positions() {
        let memo = LocalMemo::new();
        let ev = Evaluator::new(&memo, ReductionPolicy::Leftmost);
        assert!(ev.evaluate_at(&p("(1 2 3)"), 0).is_err());
    }

    #[test]
    fn contraction_relabels_sign_functions() {
        // Identifying the glued edges turns f_σ into f_σ̃ (free loops keep
        // their own variable, which then appears linearly).
        for k in 2..=5 {
            for s in Permutation::all(k) {
                let f = sign_function(&s);
                for l in 0..k - 1 {
                    let m = merge_neighbors(&s, l, MergeKind::KeepLeftIn).unwrap();
                    let loop_var = k - 1;
                    let g = f.relabel(k, |x| m.edge_map[x].unwrap_or(loop_var));
                    let mut expected = sign_function(&m.perm).relabel(k, |x| x);
                    if m.free_loop {
                        expected.toggle_linear(loop_var);
                    }
                    assert_eq!(g, expected, "σ = {s}, l = {}", l + 1);
                }
            }
        }
    }
}
