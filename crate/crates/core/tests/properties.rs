use glweight_core::glrec::{merge_neighbors, reducible_positions, Evaluator, LocalMemo, MergeKind, ReductionPolicy};
use glweight_core::perm::four_term_relations;
use glweight_core::uea::{evaluate_in_uea, is_central, w_glmn_bruteforce, DEFAULT_BUDGET};
use glweight_core::{w_gl, w_gl_diagram, ChordDiagram, Permutation, Poly, Signature};

#[test]
fn four_term_relations_vanish_up_to_three_chords() {
    for n in 1..=3 {
        for d in ChordDiagram::all(n) {
            for rel in four_term_relations(&d) {
                let mut sum = Poly::zero();
                for (s, term) in &rel.terms {
                    let v = w_gl_diagram(term);
                    if *s > 0 {
                        sum += &v;
                    } else {
                        sum -= &v;
                    }
                }
                assert!(sum.is_zero(), "{rel:?}");
            }
        }
    }
}

#[test]
fn values_are_invariant_under_rotation() {
    for k in 1..=5 {
        for s in Permutation::all(k) {
            assert_eq!(w_gl(&s.base_point_rotation().unwrap()), w_gl(&s), "σ = {s}");
        }
    }
    for d in ChordDiagram::all(3) {
        assert_eq!(w_gl_diagram(&d.rotate()), w_gl_diagram(&d));
    }
}

#[test]
fn concatenation_is_multiplicative() {
    let parts: Vec<Permutation> = ["(1 3 2)", "(1 2)", "(1 3)(2 4)", "()"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let fixed = Permutation::identity(1);
    for a in &parts {
        for b in &parts {
            let joined = Permutation::concat([a, &fixed, b]);
            assert_eq!(w_gl(&joined), &(&w_gl(a) * &w_gl(&fixed)) * &w_gl(b));
        }
    }
}

#[test]
fn policies_agree_on_s5() {
    let left = LocalMemo::new();
    let right = LocalMemo::new();
    let l = Evaluator::new(&left, ReductionPolicy::Leftmost);
    let r = Evaluator::new(&right, ReductionPolicy::Rightmost);
    for s in Permutation::all(5) {
        if reducible_positions(&s).len() > 1 {
            assert_eq!(l.evaluate(&s), r.evaluate(&s), "σ = {s}");
        }
    }
}

#[test]
fn weight_matches_enveloping_algebra_up_to_three() {
    for sig in [Signature::new(1, 1), Signature::new(2, 1), Signature::new(0, 2)] {
        for k in 0..=3 {
            for s in Permutation::all(k) {
                let direct = w_glmn_bruteforce(&s, sig, DEFAULT_BUDGET).unwrap();
                assert_eq!(evaluate_in_uea(&w_gl(&s), sig), direct, "σ = {s}, {sig}");
                if k > 0 {
                    assert!(is_central(&direct), "σ = {s}, {sig}");
                }
            }
        }
    }
}

#[test]
fn rotated_sum_is_the_same_element() {
    let sig = Signature::new(2, 1);
    for s in Permutation::all(4) {
        let a = w_glmn_bruteforce(&s, sig, DEFAULT_BUDGET).unwrap();
        let b = w_glmn_bruteforce(&s.base_point_rotation().unwrap(), sig, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b, "σ = {s}");
    }
}

#[test]
fn swapped_merge_is_the_other_merge() {
    for k in 2..=5 {
        for s in Permutation::all(k) {
            for l in 0..k - 1 {
                let swapped = s.conjugate_adjacent(l).unwrap();
                let a = merge_neighbors(&swapped, l, MergeKind::KeepLeftIn).unwrap();
                let b = merge_neighbors(&s, l, MergeKind::KeepRightIn).unwrap();
                assert_eq!((a.perm, a.free_loop), (b.perm, b.free_loop), "σ = {s}, l = {}", l + 1);
            }
        }
    }
}
