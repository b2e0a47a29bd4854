//! The published table of small values, shipped as JSON, and the
//! computed table that reproduces it.

use anyhow::{Context, Result};
use glweight_core::signfn::sign_function;
use glweight_core::{Evaluator, MemoStore, Permutation, Poly, ReductionPolicy, SignFunction};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::format::{parse_poly, SignJson};

pub const RESULT_TABLE_JSON: &str = include_str!("../fixtures/result_table.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Transcribed as published.
    Published,
    /// Settled by comparison with the brute-force sum.
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub k: usize,
    /// 1-based images.
    pub sigma: Vec<usize>,
    pub sign: Option<SignJson>,
    /// Canonical text with `m - n` written as `C0`.
    pub value: String,
    pub source: Source,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

impl FixtureRow {
    pub fn permutation(&self) -> Result<Permutation> {
        let p = Permutation::from_one_based(&self.sigma)?;
        anyhow::ensure!(
            p.len() == self.k,
            "row length {} does not match k = {}",
            p.len(),
            self.k
        );
        Ok(p)
    }

    pub fn polynomial(&self) -> Result<Poly> {
        parse_poly(&self.value).with_context(|| format!("bad value `{}`", self.value))
    }

    pub fn sign_function(&self) -> Result<Option<SignFunction>> {
        self.sign.as_ref().map(|s| s.to_sign_function(self.k)).transpose()
    }
}

pub fn result_table() -> Result<Vec<FixtureRow>> {
    serde_json::from_str(RESULT_TABLE_JSON).context("malformed result table fixture")
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub sigma: Permutation,
    pub sign: SignFunction,
    pub value: Poly,
}

/// Every σ ∈ S_k for `1 <= k <= k_max`, ordered by k and then by one-line
/// notation. `k = 0` contributes nothing.
pub fn compute_table<M: MemoStore + Sync + ?Sized>(k_max: usize, memo: &M) -> Vec<TableRow> {
    let perms: Vec<Permutation> = (1..=k_max).flat_map(Permutation::all).collect();
    perms
        .into_par_iter()
        .map(|sigma| {
            let value = Evaluator::new(memo, ReductionPolicy::Leftmost).evaluate(&sigma);
            TableRow {
                sign: sign_function(&sigma),
                sigma,
                value,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::memo::SharedMemo;

    #[test]
    fn fixture_is_well_formed() {
        let rows = result_table().unwrap();
        assert_eq!(rows.len(), 32);
        for r in &rows {
            r.permutation().unwrap();
            r.polynomial().unwrap();
            r.sign_function().unwrap();
        }
        let oracle: Vec<_> = rows
            .iter()
            .filter(|r| r.source == Source::Oracle)
            .map(|r| r.sigma.clone())
            .collect();
        assert_eq!(oracle, vec![vec![3, 4, 1, 2], vec![4, 1, 2, 3]]);
    }

    #[test]
    fn table_order() {
        let memo = SharedMemo::in_memory();
        let t = compute_table(3, &memo);
        assert_eq!(t.len(), 1 + 2 + 6);
        assert_eq!(t[1].sigma.images_one_based(), vec![1, 2]);
        assert_eq!(t[2].value.to_string(), "C2");
        assert!(compute_table(0, &memo).is_empty());
    }
}
