//! Auslander-Reiten translations, their higher versions `τ_n = τ Ω^{n-1}`
//! and `τ_n^- = τ^- Ω^{-(n-1)}`, and a checker and exhaustive search for
//! n-precluster tilting subcategories of the module category.
//!
//! `τ_n` is taken on modules rather than the stable category: once a
//! (co)syzygy chain reaches a projective (injective) summand, that summand
//! contributes zero.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::KupischSeries;
use crate::error::{Error, Result};
use crate::module::{IntervalModule, ModuleSum};

pub const DEFAULT_SEARCH_CAP: u128 = 1 << 20;

impl KupischSeries {
    /// `τ M(i, l) = M(i+1, l)` for non-projective `M(i, l)`.
    pub fn ar_translate_of(&self, m: &IntervalModule) -> Option<IntervalModule> {
        (!self.is_projective(m)).then(|| IntervalModule::new(self.vertex_at(m.start() as i64 + 1), m.len()))
    }

    /// `τ^- M(i, l) = M(i-1, l)` for non-injective `M(i, l)`.
    pub fn ar_translate_inv_of(&self, m: &IntervalModule) -> Option<IntervalModule> {
        (!self.is_injective(m)).then(|| IntervalModule::new(self.vertex_at(m.start() as i64 - 1), m.len()))
    }

    pub fn ar_translate(&self, m: &ModuleSum) -> ModuleSum {
        m.iter().filter_map(|x| self.ar_translate_of(x)).collect()
    }

    pub fn ar_translate_inv(&self, m: &ModuleSum) -> ModuleSum {
        m.iter().filter_map(|x| self.ar_translate_inv_of(x)).collect()
    }

    pub fn tau_n(&self, m: &ModuleSum, n: usize) -> ModuleSum {
        assert!(n >= 1, "tau_n needs n >= 1");
        self.ar_translate(&self.syzygy_power(m, n - 1))
    }

    pub fn tau_n_inv(&self, m: &ModuleSum, n: usize) -> ModuleSum {
        assert!(n >= 1, "tau_n_inv needs n >= 1");
        self.ar_translate_inv(&self.cosyzygy_power(m, n - 1))
    }
}

/// A candidate subcategory `add M`, given by the indecomposable summands of
/// `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreclusterCandidate {
    pub algebra: KupischSeries,
    pub summands: BTreeSet<IntervalModule>,
}

impl PreclusterCandidate {
    pub fn new(algebra: &KupischSeries, summands: impl IntoIterator<Item = IntervalModule>) -> Self {
        PreclusterCandidate { algebra: algebra.clone(), summands: summands.into_iter().collect() }
    }

    /// All indecomposables: the whole module category.
    pub fn full(algebra: &KupischSeries) -> Self {
        Self::new(algebra, algebra.indecomposables())
    }

    pub fn projectives(algebra: &KupischSeries) -> Self {
        Self::new(algebra, algebra.projectives())
    }

    fn contains_all(&self, m: &ModuleSum) -> Option<IntervalModule> {
        m.iter().find(|x| !self.summands.contains(x)).copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFailure {
    pub condition: u8,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreclusterVerdict {
    pub holds: bool,
    pub failures: Vec<ConditionFailure>,
    pub functorially_finite: &'static str,
}

const FUNCTORIALLY_FINITE_NOTE: &str =
    "automatic: the module category has finitely many indecomposables, so every additive subcategory is functorially finite";

/// Checks the four defining conditions. All violations are reported, not
/// just the first.
pub fn is_precluster(cand: &PreclusterCandidate, n: usize) -> PreclusterVerdict {
    assert!(n >= 1, "precluster tilting needs n >= 1");
    let alg = &cand.algebra;
    let mut failures = Vec::new();
    for p in alg.projectives() {
        if !cand.summands.contains(&p) {
            failures.push(ConditionFailure { condition: 1, witness: format!("missing projective {p}") });
        }
    }
    for i in alg.injectives() {
        if !cand.summands.contains(&i) {
            failures.push(ConditionFailure { condition: 1, witness: format!("missing injective {i}") });
        }
    }
    for x in &cand.summands {
        let xs: ModuleSum = (*x).into();
        if let Some(out) = cand.contains_all(&alg.tau_n(&xs, n)) {
            failures.push(ConditionFailure { condition: 2, witness: format!("tau_{n} {x} has summand {out}") });
        }
        if let Some(out) = cand.contains_all(&alg.tau_n_inv(&xs, n)) {
            failures.push(ConditionFailure { condition: 2, witness: format!("tau_{n}^- {x} has summand {out}") });
        }
    }
    for x in &cand.summands {
        let xs: ModuleSum = (*x).into();
        for y in &cand.summands {
            let ys: ModuleSum = (*y).into();
            for k in 1..n {
                let e = alg.ext_dim(&xs, &ys, k);
                if e != 0 {
                    failures.push(ConditionFailure { condition: 3, witness: format!("dim Ext^{k}({x}, {y}) = {e}") });
                }
            }
        }
    }
    PreclusterVerdict { holds: failures.is_empty(), failures, functorially_finite: FUNCTORIALLY_FINITE_NOTE }
}

/// All n-precluster tilting subcategories containing the projectives and
/// injectives plus at most `max_extra` further indecomposables. Results are
/// ordered by size, then lexicographically by the added summands.
pub fn search_precluster(
    alg: &KupischSeries,
    n: usize,
    max_extra: usize,
    cap: u128,
) -> Result<Vec<PreclusterCandidate>> {
    let seed: BTreeSet<IntervalModule> = alg.projectives().into_iter().chain(alg.injectives()).collect();
    let rest: Vec<IntervalModule> = alg.indecomposables().into_iter().filter(|m| !seed.contains(m)).collect();
    let max_extra = max_extra.min(rest.len());
    let count: u128 = (0..=max_extra).map(|k| binomial(rest.len(), k)).sum();
    if count > cap {
        return Err(Error::SearchSpaceTooLarge { count, cap });
    }
    let mut found = Vec::new();
    for k in 0..=max_extra {
        for combo in Combinations::new(rest.len(), k) {
            let cand = PreclusterCandidate::new(alg, seed.iter().copied().chain(combo.iter().map(|&i| rest[i])));
            if is_precluster(&cand, n).holds {
                found.push(cand);
            }
        }
    }
    Ok(found)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// k-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
