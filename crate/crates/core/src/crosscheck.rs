//! Compares the combinatorial formulas against the matrix oracle on every
//! pair of indecomposables of one algebra.

use serde::Serialize;

use crate::algebra::KupischSeries;
use crate::error::Result;
use crate::module::IntervalModule;
use crate::oracle::Oracle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub quantity: &'static str,
    pub modules: String,
    pub formula: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub algebra: String,
    pub field_p: u32,
    pub indecomposables: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn show(m: Option<IntervalModule>) -> String {
    m.map_or_else(|| "0".to_string(), |m| m.to_string())
}

/// Hom and `Ext^1` on all pairs; injectivity and `τ` on all indecomposables.
pub fn compare(alg: &KupischSeries, p: u32) -> Result<Comparison> {
    let oracle = Oracle::new(alg, p)?;
    let inds = alg.indecomposables();
    let inclusions = oracle.inclusions()?;
    let mut mismatches = Vec::new();
    let mut push = |quantity, modules: String, formula: String, oracle: String| {
        if formula != oracle {
            mismatches.push(Mismatch { quantity, modules, formula, oracle });
        }
    };
    for x in &inds {
        push(
            "injective",
            x.to_string(),
            alg.is_injective(x).to_string(),
            oracle.is_injective_with(x, &inclusions)?.to_string(),
        );
        push("tau", x.to_string(), show(alg.ar_translate_of(x)), show(oracle.tau(x)?));
        for y in &inds {
            let pair = format!("{x}, {y}");
            push("hom", pair.clone(), alg.hom_dim(x, y).to_string(), oracle.hom_dim(x, y)?.to_string());
            push(
                "ext1",
                pair,
                alg.ext_dim(&(*x).into(), &(*y).into(), 1).to_string(),
                oracle.ext1_dim(x, y)?.to_string(),
            );
        }
    }
    Ok(Comparison {
        algebra: alg.to_string(),
        field_p: p,
        indecomposables: inds.len(),
        pairs: inds.len() * inds.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_agree() {
        for alg in [
            KupischSeries::cyclic(&[3, 3, 4]).unwrap(),
            KupischSeries::linear(&[3, 3, 3, 3, 2, 1]).unwrap(),
            KupischSeries::cyclic(&[2, 2, 2]).unwrap(),
        ] {
            let c = compare(&alg, 2).unwrap();
            assert!(c.agrees(), "{:#?}", c.mismatches);
        }
    }
}
