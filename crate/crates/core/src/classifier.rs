//! Algebra-level verdicts and exhaustive verifiers for the socle
//! characterisations of minimal Auslander-Gorenstein algebras.
//!
//! Every verifier returns a [`Verdict`] carrying witnesses (module notation
//! plus the predicate values that disagreed), and each one checks the
//! property on all indecomposables of the algebra.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::KupischSeries;
use crate::error::{Error, Result};
use crate::extended::ExtendedNat;
use crate::homology::Gorenstein;
use crate::module::{IntervalModule, ModuleSum};
use crate::precluster::{is_precluster, search_precluster, PreclusterCandidate};

/// Witnesses kept per verdict; the failure count is always exact.
const MAX_WITNESSES: usize = 8;
/// Random direct sums of each size (2 and 3 summands) per socle check.
const SAMPLED_SUMS: usize = 16;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub module: String,
    pub values: BTreeMap<String, Value>,
}

impl Witness {
    fn new(module: impl ToString, values: Value) -> Self {
        let values = match values {
            Value::Object(map) => map.into_iter().collect(),
            other => BTreeMap::from([("value".to_string(), other)]),
        };
        Witness { module: module.to_string(), values }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    /// Number of modules (or vertices) examined.
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn collect(checked: usize, failed: Vec<Witness>) -> Self {
        let failures = failed.len();
        Verdict {
            holds: failures == 0,
            checked,
            failures,
            witnesses: failed.into_iter().take(MAX_WITNESSES).collect(),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl KupischSeries {
    pub fn is_self_injective(&self) -> bool {
        self.projectives().iter().all(|p| self.is_injective(p))
    }

    /// `id A <= n + 1 <= domdim A`.
    pub fn is_minimal_ag(&self, n: u32) -> bool {
        self.regular_id() <= n + 1 && self.domdim() >= n + 1
    }

    /// `gldim A <= n + 1 <= domdim A`.
    pub fn is_n_auslander(&self, n: u32) -> bool {
        self.gldim() <= n + 1 && self.domdim() >= n + 1
    }

    /// Vertices `i` with `P_i` injective.
    pub fn prinj(&self) -> Vec<usize> {
        self.vertices().filter(|&i| self.is_injective(&self.projective(i))).collect()
    }
}

/// Least `n` with `bound <= n + 1 <= domdim`.
fn least_n(bound: ExtendedNat, domdim: ExtendedNat) -> Option<u32> {
    let n = bound.finite()?.max(1) - 1;
    (domdim >= n + 1).then_some(n)
}

fn gpd_table(gor: &Gorenstein<'_>) -> HashMap<IntervalModule, u32> {
    gor.algebra().indecomposables().into_iter().map(|x| (x, gor.gpd_of(&x))).collect()
}

/// Injective `I_j` is projective iff `Gpd(soc I_j) <= n`, for all `j`.
///
/// Requires an `(n+1)`-Gorenstein or self-injective algebra; under that
/// hypothesis the verdict should coincide with [`KupischSeries::is_minimal_ag`].
pub fn verify_prinj_socle(alg: &KupischSeries, n: u32) -> Result<Verdict> {
    let gor = alg.gorenstein()?;
    if gor.degree() != n + 1 && !alg.is_self_injective() {
        return Err(Error::PreconditionFailed(format!("Gorenstein degree {} is not n + 1 = {}", gor.degree(), n + 1)));
    }
    let mut failed = Vec::new();
    for j in alg.vertices() {
        let inj = alg.injective(j);
        let projective = alg.is_projective(&inj);
        let soc_gpd = gor.gpd_of(&alg.simple(j));
        if projective != (soc_gpd <= n) {
            failed.push(Witness::new(
                format!("I({j})"),
                json!({ "injective": inj.to_string(), "projective": projective, "gpd_socle": soc_gpd }),
            ));
        }
    }
    Ok(Verdict::collect(alg.num_vertices(), failed))
}

/// The classes `Gpd N <= n`, `Gpd(soc N) <= n` and `N in sub A` coincide.
///
/// Exhaustive over indecomposables, plus seeded random sums of two and three
/// summands (all three predicates are determined summand-wise).
pub fn verify_gp_socle_sub(alg: &KupischSeries, n: u32, seed: u64) -> Result<Verdict> {
    let gor = alg.gorenstein()?;
    let table = gpd_table(&gor);
    let inds = alg.indecomposables();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut modules: Vec<ModuleSum> = inds.iter().map(|&x| x.into()).collect();
    for size in [2, 3] {
        for _ in 0..SAMPLED_SUMS {
            modules.push((0..size).map(|_| inds[rng.gen_range(0..inds.len())]).collect());
        }
    }
    let mut failed = Vec::new();
    for m in &modules {
        let gpd = m.iter().map(|x| table[x]).max().unwrap_or(0);
        let soc_gpd = alg.socle(m).iter().map(|x| table[x]).max().unwrap_or(0);
        let sub = alg.in_sub_lambda(m)?;
        let (a, b) = (gpd <= n, soc_gpd <= n);
        if a != b || b != sub {
            failed.push(Witness::new(m, json!({ "gpd": gpd, "gpd_socle": soc_gpd, "in_sub_lambda": sub })));
        }
    }
    Ok(Verdict::collect(modules.len(), failed).with_note(format!(
        "exhaustive over {} indecomposables; {} seeded random sums",
        inds.len(),
        2 * SAMPLED_SUMS
    )))
}

/// Counting consequence for minimal n-AG algebras: as many simples have
/// `Gpd <= n` as there are projective-injective indecomposables, and every
/// simple has `Gpd <= n + 1`.
pub fn verify_simple_count(alg: &KupischSeries, n: u32) -> Result<Verdict> {
    if !alg.is_minimal_ag(n) {
        return Err(Error::PreconditionFailed(format!("{alg} is not minimal {n}-Auslander-Gorenstein")));
    }
    if alg.lengths() == [1] {
        return Err(Error::PreconditionFailed("semisimple algebra".into()));
    }
    let gor = alg.gorenstein()?;
    let gpds: Vec<u32> = alg.simples().iter().map(|s| gor.gpd_of(s)).collect();
    let low = gpds.iter().filter(|&&g| g <= n).count();
    let prinj = alg.prinj().len();
    let mut failed = Vec::new();
    if low != prinj {
        failed.push(Witness::new(
            "simples",
            json!({ "gpd_at_most_n": low, "projective_injective": prinj, "simple_gpd": gpds }),
        ));
    }
    for (j, &g) in gpds.iter().enumerate() {
        if g > n + 1 {
            failed.push(Witness::new(format!("S({})", j + 1), json!({ "gpd": g })));
        }
    }
    Ok(Verdict::collect(alg.num_vertices(), failed)
        .with_note(format!("{low} simples with Gpd <= {n}; {prinj} projective-injectives")))
}

/// The three Gpd inequalities on every radical-filtration sequence
/// `0 -> M J^s -> M -> M / M J^s -> 0`.
pub fn verify_gpd_inequalities(alg: &KupischSeries) -> Result<Verdict> {
    let gor = alg.gorenstein()?;
    let table = gpd_table(&gor);
    let mut checked = 0;
    let mut failed = Vec::new();
    for y in alg.indecomposables() {
        for s in 1..y.len() {
            checked += 1;
            let x = alg.radical_power_of(&y, s).expect("proper radical power");
            let z = IntervalModule::new(y.start(), s);
            let (gx, gy, gz) = (table[&x] as i64, table[&y] as i64, table[&z] as i64);
            let ok = gy <= gx.max(gz) && gx <= gy.max(gz - 1) && gz <= gy.max(gx + 1);
            if !ok {
                failed.push(Witness::new(
                    format!("0 -> {x} -> {y} -> {z} -> 0"),
                    json!({ "gpd_x": gx, "gpd_y": gy, "gpd_z": gz }),
                ));
            }
        }
    }
    Ok(Verdict::collect(checked, failed))
}

/// `Gpd M <= g` for every indecomposable, and `Gpd M = pd M` when the latter
/// is finite.
pub fn verify_gpd_bound(alg: &KupischSeries) -> Result<Verdict> {
    let gor = alg.gorenstein()?;
    let inds = alg.indecomposables();
    let mut failed = Vec::new();
    for x in &inds {
        let gpd = gor.gpd_of(x);
        let pd = alg.pd_of(x);
        if gpd > gor.degree() || (pd.is_finite() && pd != gpd) {
            failed.push(Witness::new(x, json!({ "gpd": gpd, "pd": pd, "degree": gor.degree() })));
        }
    }
    Ok(Verdict::collect(inds.len(), failed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Error,
}

/// One entry of a report's `theorem_verdicts`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictRecord {
    pub status: VerdictStatus,
    /// What the characterisation predicts (`is_minimal_ag` for the
    /// biconditional characterisations).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerdictRecord {
    pub fn from_result(result: Result<Verdict>, expected: Option<bool>) -> Self {
        match result {
            Ok(v) => VerdictRecord {
                status: if v.holds { VerdictStatus::Pass } else { VerdictStatus::Fail },
                expected,
                agrees: expected.map(|e| e == v.holds),
                verdict: Some(v),
                error: None,
            },
            Err(e) => VerdictRecord {
                status: VerdictStatus::Error,
                expected,
                agrees: None,
                verdict: None,
                error: Some(e.to_string()),
            },
        }
    }

    /// True unless the verdict contradicts the prediction or errored.
    pub fn is_consistent(&self) -> bool {
        match self.status {
            VerdictStatus::Error => false,
            _ => self.agrees.unwrap_or(self.status == VerdictStatus::Pass),
        }
    }
}

/// Full invariant and verdict record for one algebra. Field order and names
/// are the JSON schema.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub kupisch: Vec<usize>,
    pub cyclic: bool,
    pub regular_id: ExtendedNat,
    pub regular_id_left: ExtendedNat,
    pub domdim: ExtendedNat,
    pub gldim: ExtendedNat,
    pub gorenstein_degree: ExtendedNat,
    pub self_injective: bool,
    pub minimal_ag_n: Option<u32>,
    pub n_auslander_n: Option<u32>,
    pub prinj: Vec<usize>,
    /// Gpd of each simple; over non-Gorenstein algebras only the simples of
    /// finite projective dimension have a known value.
    pub simple_gpd: Vec<Option<u32>>,
    pub theorem_verdicts: BTreeMap<String, VerdictRecord>,
}

pub const REPORT_KEYS: [&str; 13] = [
    "kupisch",
    "cyclic",
    "regular_id",
    "regular_id_left",
    "domdim",
    "gldim",
    "gorenstein_degree",
    "self_injective",
    "minimal_ag_n",
    "n_auslander_n",
    "prinj",
    "simple_gpd",
    "theorem_verdicts",
];

impl ClassificationReport {
    pub fn algebra(&self) -> KupischSeries {
        let shape = if self.cyclic { crate::algebra::Shape::Cyclic } else { crate::algebra::Shape::Linear };
        KupischSeries::new(self.kupisch.clone(), shape).expect("report of an admissible series")
    }

    /// Whether every recorded verdict agrees with its prediction.
    pub fn all_consistent(&self) -> bool {
        self.theorem_verdicts.values().all(VerdictRecord::is_consistent)
    }
}

/// Computes every invariant and runs every applicable verifier. Verifier
/// errors are recorded in the report rather than returned.
pub fn classify(alg: &KupischSeries, seed: u64) -> ClassificationReport {
    let regular_id = alg.regular_id();
    let regular_id_left = alg.regular_id_left();
    let domdim = alg.domdim();
    let gldim = alg.gldim();
    let self_injective = alg.is_self_injective();
    let mut verdicts = BTreeMap::new();

    let degree = match alg.gorenstein_degree() {
        Ok(g) => g,
        Err(e) => {
            verdicts.insert("gorenstein-symmetry".to_string(), VerdictRecord::from_result(Err(e), None));
            ExtendedNat::Infinity
        }
    };
    let minimal_ag_n = if self_injective { Some(0) } else { least_n(regular_id, domdim) };
    let n_auslander_n = least_n(gldim, domdim);

    let simple_gpd: Vec<Option<u32>> = match (degree, alg.gorenstein()) {
        (ExtendedNat::Finite(_), Ok(gor)) => alg.simples().iter().map(|s| Some(gor.gpd_of(s))).collect(),
        _ => alg.simples().iter().map(|s| alg.pd_of(s).finite()).collect(),
    };

    if let ExtendedNat::Finite(g) = degree {
        verdicts.insert("gpd-bound".into(), VerdictRecord::from_result(verify_gpd_bound(alg), None));
        verdicts.insert("lemma22".into(), VerdictRecord::from_result(verify_gpd_inequalities(alg), None));
        let top = g.max(1) - 1;
        verdicts.insert(
            format!("prinj:{top}"),
            VerdictRecord::from_result(verify_prinj_socle(alg, top), Some(alg.is_minimal_ag(top))),
        );
        for n in 0..=top {
            verdicts.insert(
                format!("gp-socle-sub:{n}"),
                VerdictRecord::from_result(verify_gp_socle_sub(alg, n, seed), Some(alg.is_minimal_ag(n))),
            );
        }
    }
    if let Some(n) = minimal_ag_n {
        if alg.lengths() != [1] {
            verdicts.insert(format!("thm31-count:{n}"), VerdictRecord::from_result(verify_simple_count(alg, n), None));
        }
    }
    let full = is_precluster(&PreclusterCandidate::full(alg), 1);
    verdicts.insert("precluster:1".into(), precluster_record(full, None));

    ClassificationReport {
        kupisch: alg.lengths().to_vec(),
        cyclic: alg.is_cyclic(),
        regular_id,
        regular_id_left,
        domdim,
        gldim,
        gorenstein_degree: degree,
        self_injective,
        minimal_ag_n,
        n_auslander_n,
        prinj: alg.prinj(),
        simple_gpd,
        theorem_verdicts: verdicts,
    }
}

/// Whether some n-precluster tilting subcategory exists: the projectives
/// for self-injective algebras, otherwise the smallest one found by
/// exhaustive search over subcategories containing all projectives and
/// injectives.
pub fn verify_precluster(alg: &KupischSeries, n: u32, cap: u128) -> Result<VerdictRecord> {
    if n == 0 {
        return Err(Error::PreconditionFailed("precluster tilting needs n >= 1".into()));
    }
    let n = n as usize;
    if alg.is_self_injective() {
        let v = is_precluster(&PreclusterCandidate::projectives(alg), n);
        return Ok(precluster_record(v, Some("candidate: projectives".into())));
    }
    let found = search_precluster(alg, n, alg.indecomposables().len(), cap)?;
    Ok(match found.first() {
        Some(c) => {
            let listed: Vec<String> = c.summands.iter().map(|m| m.to_string()).collect();
            precluster_record(is_precluster(c, n), Some(format!("smallest: add({})", listed.join(" + "))))
        }
        None => {
            let v = is_precluster(&PreclusterCandidate::full(alg), n);
            precluster_record(v, Some("no candidate passes; witnesses from the full category".into()))
        }
    })
}

pub(crate) fn precluster_record(v: crate::precluster::PreclusterVerdict, note: Option<String>) -> VerdictRecord {
    let witnesses: Vec<Witness> = v
        .failures
        .iter()
        .take(MAX_WITNESSES)
        .map(|f| Witness::new(&f.witness, json!({ "condition": f.condition })))
        .collect();
    let note = note.unwrap_or_else(|| format!("condition (4): {}", v.functorially_finite));
    VerdictRecord::from_result(
        Ok(Verdict { holds: v.holds, checked: 4, failures: v.failures.len(), witnesses, note: Some(note) }),
        None,
    )
}
