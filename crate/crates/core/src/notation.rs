//! Textual module notation shared by the CLI and reports.
//!
//! A module expression is `0` or a `+`-separated list of terms `M(i,l)`,
//! `S(i)`, `P(i)` and `I(i)`. Modules print as `S(i)` when simple and
//! `M(i,l)` otherwise, so printed output parses back to the same module.

use crate::algebra::KupischSeries;
use crate::error::{Error, Result};
use crate::module::{IntervalModule, ModuleSum};

pub fn parse_module(alg: &KupischSeries, expr: &str) -> Result<ModuleSum> {
    let expr = expr.trim();
    if expr.is_empty() {
        return Err(Error::Parse("empty module expression".into()));
    }
    if expr == "0" {
        return Ok(ModuleSum::zero());
    }
    expr.split('+').map(|term| parse_term(alg, term.trim())).collect()
}

fn parse_term(alg: &KupischSeries, term: &str) -> Result<IntervalModule> {
    let bad = || Error::Parse(format!("malformed term {term:?}"));
    let open = term.find('(').ok_or_else(bad)?;
    let body = term[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let args: Vec<usize> =
        body.split(',').map(|a| a.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?;
    let vertex = |i: usize| {
        if (1..=alg.num_vertices()).contains(&i) {
            Ok(i)
        } else {
            Err(Error::InvalidModule(format!("vertex {i} outside 1..={}", alg.num_vertices())))
        }
    };
    match (term[..open].trim(), args.as_slice()) {
        ("M", &[i, l]) => alg.interval(i, l),
        ("S", &[i]) => Ok(alg.simple(vertex(i)?)),
        ("P", &[i]) => Ok(alg.projective(vertex(i)?)),
        ("I", &[i]) => Ok(alg.injective(vertex(i)?)),
        _ => Err(bad()),
    }
}

/// Parses `c1,c2,...`.
pub fn parse_kupisch(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad Loewy length {x:?}"))))
        .collect()
}
