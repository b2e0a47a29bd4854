//! Cross-checks of the recurrence against brute-force sums in `U(gl(m|n))`.

use std::fmt;

use glweight_core::uea::{bruteforce_partial, check_budget, evaluate_in_uea, w_glmn_bruteforce, Straightener};
use glweight_core::{Evaluator, GeneratorOrder, MemoStore, Permutation, ReductionPolicy, Signature, UeaElement};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail => f.write_str("FAIL"),
            Verdict::Skipped(why) => write!(f, "SKIPPED ({why})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleCase {
    pub sigma: Permutation,
    pub sig: Signature,
    pub verdict: Verdict,
}

/// The brute-force sum with index tuples split by first index across the
/// rayon pool; partial sums are added, so the result does not depend on the
/// schedule.
pub fn bruteforce_parallel(sigma: &Permutation, sig: Signature, budget: u128) -> glweight_core::Result<UeaElement> {
    check_budget(sig.dim(), sigma.len(), budget)?;
    if sigma.is_empty() {
        return Ok(UeaElement::one(sig));
    }
    Ok((0..sig.dim())
        .into_par_iter()
        .map(|first| bruteforce_partial(sigma, sig, first, &Straightener::new(sig, GeneratorOrder::Lex)))
        .reduce(|| UeaElement::zero(sig), |a, b| a.add(&b)))
}

pub fn check_case<M: MemoStore + Sync + ?Sized>(
    sigma: &Permutation,
    sig: Signature,
    budget: u128,
    memo: &M,
) -> Verdict {
    let direct = match w_glmn_bruteforce(sigma, sig, budget) {
        Ok(x) => x,
        Err(e) => return Verdict::Skipped(e.to_string()),
    };
    let poly = Evaluator::new(memo, ReductionPolicy::Leftmost).evaluate(sigma);
    if evaluate_in_uea(&poly, sig) == direct {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Checks every (σ, signature) pair in parallel; the report is sorted by
/// signature, then length, then one-line notation.
pub fn run_oracle<M: MemoStore + Sync + ?Sized>(
    perms: &[Permutation],
    sigs: &[Signature],
    budget: u128,
    memo: &M,
) -> Vec<OracleCase> {
    let cases: Vec<(Permutation, Signature)> = sigs
        .iter()
        .flat_map(|&sig| perms.iter().map(move |p| (p.clone(), sig)))
        .collect();
    let mut out: Vec<OracleCase> = cases
        .into_par_iter()
        .map(|(sigma, sig)| {
            let verdict = check_case(&sigma, sig, budget, memo);
            OracleCase { sigma, sig, verdict }
        })
        .collect();
    out.sort_by(|a, b| (a.sig, a.sigma.len(), &a.sigma).cmp(&(b.sig, b.sigma.len(), &b.sigma)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::memo::SharedMemo;

    #[test]
    fn parallel_sum_matches_serial() {
        let sig = Signature::new(2, 1);
        for s in ["(1 4 3 2)", "(1 3)(2 4)", "()"] {
            let s: Permutation = s.parse().unwrap();
            assert_eq!(
                bruteforce_parallel(&s, sig, 1000).unwrap(),
                w_glmn_bruteforce(&s, sig, 1000).unwrap()
            );
        }
    }

    #[test]
    fn over_budget_cases_are_skipped() {
        let memo = SharedMemo::in_memory();
        let perms: Vec<Permutation> = Permutation::all(3).collect();
        let report = run_oracle(&perms, &[Signature::new(1, 1), Signature::new(2, 1)], 10, &memo);
        assert_eq!(report.len(), 12);
        for case in report {
            match case.sig.dim() {
                2 => assert_eq!(case.verdict, Verdict::Pass),
                _ => assert!(matches!(case.verdict, Verdict::Skipped(_))),
            }
        }
    }
}
