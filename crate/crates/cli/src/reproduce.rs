//! End-to-end recomputation of the two worked examples: a cyclic algebra
//! with Kupisch series [3,3,4] (minimal 1-Auslander-Gorenstein, infinite
//! global dimension) and the linear [3,3,3,3,2,1] (2-Auslander).

use std::io::Write;

use anyhow::Result;
use serde_json::json;

use nakayama_core::classifier::{classify, verify_prinj_socle};
use nakayama_core::sweep::{enumerate, Shapes};
use nakayama_core::{KupischSeries, Shape};

use crate::module_query;

struct Row {
    example: &'static str,
    quantity: String,
    expected: String,
    computed: String,
}

impl Row {
    fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

struct Example {
    name: &'static str,
    alg: std::result::Result<KupischSeries, String>,
    rows: Vec<Row>,
}

impl Example {
    fn new(name: &'static str, lengths: &[usize], shape: Shape, flip: bool) -> Self {
        let mut lengths = lengths.to_vec();
        if flip {
            lengths.reverse();
        }
        let alg = KupischSeries::new(lengths, shape).map_err(|e| e.to_string());
        Example { name, alg, rows: Vec::new() }
    }

    fn check(
        &mut self,
        quantity: &str,
        expected: serde_json::Value,
        f: impl FnOnce(&KupischSeries) -> Result<serde_json::Value>,
    ) {
        let computed = match &self.alg {
            Ok(alg) => match f(alg) {
                Ok(v) => v.to_string(),
                Err(e) => format!("error: {e}"),
            },
            Err(e) => format!("error: {e}"),
        };
        self.rows.push(Row {
            example: self.name,
            quantity: quantity.to_string(),
            expected: expected.to_string(),
            computed,
        });
    }

    fn module(&mut self, expr: &str, query: &str, expected: serde_json::Value) {
        self.check(&format!("{query} {expr}"), expected, |a| module_query(a, expr, query));
    }
}

fn rows(flip: bool) -> Vec<Row> {
    let mut a = Example::new("[3,3,4]c", &[3, 3, 4], Shape::Cyclic, flip);
    a.check("admissible", json!(true), |_| Ok(json!(true)));
    a.module("M(1,2)", "pd", json!(2));
    a.module("M(1,2)", "socle", json!("S(2)"));
    a.module("S(2)", "pd", json!("infinity"));
    a.check("gldim", json!("infinity"), |a| Ok(serde_json::to_value(a.gldim())?));
    a.check("gorenstein degree", json!(2), |a| Ok(serde_json::to_value(a.gorenstein_degree()?)?));
    a.check("minimal 1-Auslander-Gorenstein", json!(true), |a| Ok(json!(a.is_minimal_ag(1))));
    a.check("1-Auslander", json!(false), |a| Ok(json!(a.is_n_auslander(1))));
    a.check("report minimal_ag_n", json!(1), |a| Ok(json!(classify(a, 0).minimal_ag_n)));
    a.check("report gldim", json!("infinity"), |a| Ok(serde_json::to_value(classify(a, 0).gldim)?));
    a.check("found by sweep v<=3 c<=4 cyclic", json!(true), |a| {
        let hit = enumerate(3, 4, Shapes::Cyclic).into_iter().find(|b| b == &a.canonical());
        Ok(json!(hit.is_some_and(|b| classify(&b, 0).minimal_ag_n == Some(1))))
    });

    let mut g = Example::new("[3,3,3,3,2,1]", &[3, 3, 3, 3, 2, 1], Shape::Linear, flip);
    g.check("admissible", json!(true), |_| Ok(json!(true)));
    g.module("M(3,2)", "pd", json!(2));
    g.module("M(3,2)", "socle", json!("S(4)"));
    g.module("S(4)", "pd", json!(1));
    g.check("gldim", json!(3), |a| Ok(serde_json::to_value(a.gldim())?));
    g.check("2-Auslander", json!(true), |a| Ok(json!(a.is_n_auslander(2))));
    g.check("minimal 2-Auslander-Gorenstein", json!(true), |a| Ok(json!(a.is_minimal_ag(2))));
    g.check("report n_auslander_n", json!(2), |a| Ok(json!(classify(a, 0).n_auslander_n)));
    g.check("projective-injectives by socle pd <= 2", json!(true), |a| Ok(json!(verify_prinj_socle(a, 2)?.holds)));
    g.check("found by sweep v<=6 c<=3 linear", json!(true), |a| {
        let hit = enumerate(6, 3, Shapes::Linear).into_iter().find(|b| b == a);
        Ok(json!(hit.is_some_and(|b| classify(&b, 0).n_auslander_n == Some(2))))
    });

    a.rows.into_iter().chain(g.rows).collect()
}

/// Prints a diff-style table: matching rows start with a space, mismatches
/// show the expected value on a `-` line and the computed one on a `+` line.
pub fn cmd_reproduce(flip: bool, out: &mut dyn Write) -> Result<i32> {
    let rows = rows(flip);
    let width = rows.iter().map(|r| r.quantity.len()).max().unwrap_or(0);
    writeln!(out, "  {:<14} {:<width$}  value", "example", "quantity")?;
    for r in &rows {
        if r.matches() {
            writeln!(out, "  {:<14} {:<width$}  {}", r.example, r.quantity, r.computed)?;
        } else {
            writeln!(out, "- {:<14} {:<width$}  {}", r.example, r.quantity, r.expected)?;
            writeln!(out, "+ {:<14} {:<width$}  {}", r.example, r.quantity, r.computed)?;
        }
    }
    let matched = rows.iter().filter(|r| r.matches()).count();
    writeln!(out, "{matched}/{} values match", rows.len())?;
    match rows.iter().find(|r| !r.matches()) {
        None => Ok(0),
        Some(r) => {
            writeln!(
                out,
                "first mismatch: {} {}: expected {}, computed {}",
                r.example, r.quantity, r.expected, r.computed
            )?;
            Ok(1)
        }
    }
}
