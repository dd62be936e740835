//! Syzygies, minimal (co)resolutions, homological dimensions, Ext and
//! Gorenstein projective dimension.
//!
//! Every non-projective indecomposable has exactly one indecomposable syzygy,
//! so resolutions of interval modules are deterministic orbits in a finite
//! set. An orbit either reaches zero or repeats; infinite dimensions are
//! detected by that repetition, never by a step bound.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::algebra::KupischSeries;
use crate::error::{Error, Result};
use crate::extended::ExtendedNat;
use crate::module::{IntervalModule, ModuleSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal projective resolution or injective coresolution.
///
/// `terms[k]` is `P_k` (resp. `I^k`) and `kernels[k]` is `Ω^{k+1} m`
/// (resp. `Ω^{-(k+1)} m`). Either the last kernel is zero (`terminated`) or
/// `kernels[periodic_from]` equals the last kernel and the sequence repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub terms: Vec<ModuleSum>,
    pub kernels: Vec<ModuleSum>,
    pub terminated: bool,
    pub periodic_from: Option<usize>,
}

impl Resolution {
    /// Length of a terminated resolution, infinity otherwise.
    pub fn length(&self) -> ExtendedNat {
        if self.terminated {
            ExtendedNat::Finite(self.terms.len().saturating_sub(1) as u32)
        } else {
            ExtendedNat::Infinity
        }
    }
}

impl KupischSeries {
    pub fn syzygy_of(&self, m: &IntervalModule) -> Option<IntervalModule> {
        let c = self.loewy(m.start());
        (m.len() < c).then(|| IntervalModule::new(self.vertex_at((m.start() + m.len()) as i64), c - m.len()))
    }

    pub fn syzygy(&self, m: &ModuleSum) -> ModuleSum {
        m.iter().filter_map(|x| self.syzygy_of(x)).collect()
    }

    pub fn syzygy_power(&self, m: &ModuleSum, k: usize) -> ModuleSum {
        (0..k).fold(m.clone(), |acc, _| self.syzygy(&acc))
    }

    /// `I(m) / m`: the top part of the envelope above `m`.
    pub fn cosyzygy_of(&self, m: &IntervalModule) -> Option<IntervalModule> {
        let env = self.injective(self.socle_vertex(m));
        (m.len() < env.len()).then(|| IntervalModule::new(env.start(), env.len() - m.len()))
    }

    pub fn cosyzygy(&self, m: &ModuleSum) -> ModuleSum {
        m.iter().filter_map(|x| self.cosyzygy_of(x)).collect()
    }

    pub fn cosyzygy_power(&self, m: &ModuleSum, k: usize) -> ModuleSum {
        (0..k).fold(m.clone(), |acc, _| self.cosyzygy(&acc))
    }

    pub fn projective_resolution(&self, m: &ModuleSum) -> Resolution {
        self.resolve(m, ResolutionKind::Projective)
    }

    pub fn injective_coresolution(&self, m: &ModuleSum) -> Resolution {
        self.resolve(m, ResolutionKind::Injective)
    }

    fn resolve(&self, m: &ModuleSum, kind: ResolutionKind) -> Resolution {
        let mut terms = Vec::new();
        let mut kernels = Vec::new();
        let mut seen: HashMap<ModuleSum, usize> = HashMap::new();
        let mut current = m.clone();
        let mut periodic_from = None;
        while !current.is_zero() {
            let (term, next) = match kind {
                ResolutionKind::Projective => (self.projective_cover(&current), self.syzygy(&current)),
                ResolutionKind::Injective => (self.injective_envelope(&current), self.cosyzygy(&current)),
            };
            terms.push(term);
            kernels.push(next.clone());
            if let Some(&first) = seen.get(&next) {
                periodic_from = Some(first);
                break;
            }
            seen.insert(next.clone(), kernels.len() - 1);
            current = next;
        }
        Resolution { kind, terms, kernels, terminated: periodic_from.is_none(), periodic_from }
    }

    fn orbit_dim(&self, m: &IntervalModule, step: impl Fn(&IntervalModule) -> Option<IntervalModule>) -> ExtendedNat {
        let mut seen = HashSet::new();
        let mut current = *m;
        let mut k = 0;
        while let Some(next) = step(&current) {
            if !seen.insert(current) {
                return ExtendedNat::Infinity;
            }
            current = next;
            k += 1;
        }
        ExtendedNat::Finite(k)
    }

    pub fn pd_of(&self, m: &IntervalModule) -> ExtendedNat {
        self.orbit_dim(m, |x| self.syzygy_of(x))
    }

    pub fn id_of(&self, m: &IntervalModule) -> ExtendedNat {
        self.orbit_dim(m, |x| self.cosyzygy_of(x))
    }

    /// Projective dimension; the zero module gets 0.
    pub fn pd(&self, m: &ModuleSum) -> ExtendedNat {
        m.iter().map(|x| self.pd_of(x)).max().unwrap_or(ExtendedNat::ZERO)
    }

    pub fn id(&self, m: &ModuleSum) -> ExtendedNat {
        m.iter().map(|x| self.id_of(x)).max().unwrap_or(ExtendedNat::ZERO)
    }

    pub fn gldim(&self) -> ExtendedNat {
        self.simples().iter().map(|s| self.pd_of(s)).max().unwrap_or(ExtendedNat::ZERO)
    }

    /// Injective dimension of the regular right module.
    pub fn regular_id(&self) -> ExtendedNat {
        self.projectives().iter().map(|p| self.id_of(p)).max().unwrap_or(ExtendedNat::ZERO)
    }

    /// Injective dimension of the regular left module.
    pub fn regular_id_left(&self) -> ExtendedNat {
        self.opposite().regular_id()
    }

    /// Number of leading projective terms in the minimal injective
    /// coresolution of `m`; infinite when every term is projective.
    pub fn dominant_dim_of(&self, m: &IntervalModule) -> ExtendedNat {
        let mut seen = HashSet::new();
        let mut current = Some(*m);
        let mut k = 0;
        while let Some(x) = current {
            if !seen.insert(x) {
                return ExtendedNat::Infinity;
            }
            if !self.is_projective(&self.injective(self.socle_vertex(&x))) {
                return ExtendedNat::Finite(k);
            }
            k += 1;
            current = self.cosyzygy_of(&x);
        }
        ExtendedNat::Infinity
    }

    pub fn domdim(&self) -> ExtendedNat {
        self.projectives().iter().map(|p| self.dominant_dim_of(p)).min().unwrap_or(ExtendedNat::Infinity)
    }

    /// `dim Ext^1(z, y)` for indecomposable `z`, read off the long exact
    /// sequence of `0 -> Ωz -> P(z) -> z -> 0`.
    pub fn ext1_of(&self, z: &IntervalModule, y: &ModuleSum) -> usize {
        let Some(omega) = self.syzygy_of(z) else { return 0 };
        let cover = self.projective(z.start());
        let hom = |x: &IntervalModule| y.iter().map(|b| self.hom_dim(x, b)).sum::<usize>();
        hom(&omega) + hom(z) - hom(&cover)
    }

    /// `dim Ext^k(x, y)` via dimension shifting `Ext^k(x, -) = Ext^1(Ω^{k-1} x, -)`.
    pub fn ext_dim(&self, x: &ModuleSum, y: &ModuleSum, k: usize) -> usize {
        if k == 0 {
            return self.hom_dim_sum(x, y);
        }
        self.syzygy_power(x, k - 1).iter().map(|z| self.ext1_of(z, y)).sum()
    }

    /// Common injective dimension of the regular module on both sides.
    pub fn gorenstein_degree(&self) -> Result<ExtendedNat> {
        let right = self.regular_id();
        let left = self.regular_id_left();
        match (right, left) {
            (ExtendedNat::Infinity, ExtendedNat::Infinity) => Ok(ExtendedNat::Infinity),
            (r, l) if r == l => Ok(r),
            (r, l) => Err(Error::GorensteinAsymmetry { right: r.to_string(), left: l.to_string() }),
        }
    }

    pub fn is_gorenstein(&self) -> Result<bool> {
        Ok(self.gorenstein_degree()?.is_finite())
    }

    /// Gorenstein context for this algebra, or [`Error::NotGorenstein`].
    pub fn gorenstein(&self) -> Result<Gorenstein<'_>> {
        match self.gorenstein_degree()? {
            ExtendedNat::Finite(degree) => Ok(Gorenstein { alg: self, degree, regular: self.regular() }),
            ExtendedNat::Infinity => Err(Error::NotGorenstein),
        }
    }

    pub fn gpd(&self, m: &ModuleSum) -> Result<u32> {
        Ok(self.gorenstein()?.gpd(m))
    }
}

/// A Gorenstein algebra together with its degree `g`.
#[derive(Clone, Debug)]
pub struct Gorenstein<'a> {
    alg: &'a KupischSeries,
    degree: u32,
    regular: ModuleSum,
}

impl<'a> Gorenstein<'a> {
    pub fn algebra(&self) -> &'a KupischSeries {
        self.alg
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `sup { k : Ext^k(m, A) != 0 }`, scanning `1..=g` since Ext against
    /// the regular module vanishes above the Gorenstein degree.
    pub fn gpd(&self, m: &ModuleSum) -> u32 {
        m.iter().map(|x| self.gpd_of(x)).max().unwrap_or(0)
    }

    pub fn gpd_of(&self, x: &IntervalModule) -> u32 {
        let mut z = Some(*x);
        let mut best = 0;
        for k in 1..=self.degree {
            let Some(cur) = z else { break };
            if self.alg.ext1_of(&cur, &self.regular) != 0 {
                best = k;
            }
            z = self.alg.syzygy_of(&cur);
        }
        best
    }

    pub fn is_gorenstein_projective(&self, m: &ModuleSum) -> bool {
        self.gpd(m) == 0
    }

    /// Indecomposable Gorenstein projective modules.
    pub fn gp_census(&self) -> Vec<IntervalModule> {
        self.alg.indecomposables().into_iter().filter(|x| self.gpd_of(x) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(i: usize, l: usize) -> IntervalModule {
        IntervalModule::new(i, l)
    }

    fn s(i: usize, l: usize) -> ModuleSum {
        m(i, l).into()
    }

    fn a() -> KupischSeries {
        KupischSeries::cyclic(&[3, 3, 4]).unwrap()
    }

    fn g() -> KupischSeries {
        KupischSeries::linear(&[3, 3, 3, 3, 2, 1]).unwrap()
    }

    const INF: ExtendedNat = ExtendedNat::Infinity;

    #[test]
    fn syzygy_examples() {
        let a = a();
        assert_eq!(a.syzygy(&s(1, 2)), s(3, 1));
        assert_eq!(a.syzygy(&s(2, 1)), s(3, 2));
        for p in a.projectives() {
            assert!(a.syzygy(&p.into()).is_zero());
        }
    }

    #[test]
    fn cosyzygy_examples() {
        let a = a();
        assert_eq!(a.cosyzygy(&a.projective(1).into()), s(3, 1));
        for i in a.injectives() {
            assert!(a.cosyzygy(&i.into()).is_zero());
        }
        let g = g();
        assert_eq!(g.cosyzygy(&g.projective(5).into()), s(4, 1));
    }

    #[test]
    fn dimensions_from_examples() {
        let a = a();
        assert_eq!(a.pd(&s(1, 2)), 2);
        assert_eq!(a.pd(&s(2, 1)), INF);
        assert_eq!(a.gldim(), INF);
        assert_eq!(a.regular_id(), 2);
        assert_eq!(a.domdim(), 2);
        let g = g();
        assert_eq!(g.pd(&s(3, 2)), 2);
        assert_eq!(g.pd(&s(4, 1)), 1);
        let pds: Vec<_> = g.simples().iter().map(|x| g.pd_of(x)).collect();
        assert_eq!(pds, [3, 3, 2, 1, 1, 0].map(ExtendedNat::Finite));
        assert_eq!(g.gldim(), 3);
        assert_eq!(g.regular_id(), 3);
        assert_eq!(g.domdim(), 3);
    }

    #[test]
    fn coresolution_of_p1() {
        let a = a();
        let r = a.injective_coresolution(&a.projective(1).into());
        assert_eq!(r.terms, vec![s(3, 4), s(3, 4), s(3, 3)]);
        assert!(r.terminated);
        assert_eq!(r.length(), 2);
        assert_eq!(a.dominant_dim_of(&a.projective(1)), 2);
    }

    #[test]
    fn periodic_resolution() {
        let a = a();
        let r = a.projective_resolution(&s(2, 1));
        assert!(!r.terminated);
        assert_eq!(r.length(), INF);
        let p = r.periodic_from.unwrap();
        assert_eq!(&r.kernels[p], r.kernels.last().unwrap());
    }

    #[test]
    fn self_injective_constant() {
        for mlen in 2..5 {
            let c = KupischSeries::cyclic(&[mlen; 3]).unwrap();
            assert_eq!(c.gldim(), INF);
            assert_eq!(c.regular_id(), 0);
            assert_eq!(c.domdim(), INF);
            assert_eq!(c.gorenstein_degree().unwrap(), 0);
        }
        let ss = KupischSeries::linear(&[1]).unwrap();
        assert_eq!(ss.gldim(), 0);
        assert_eq!(ss.domdim(), INF);
    }

    #[test]
    fn ext_examples() {
        let a = a();
        let lam = a.regular();
        assert_eq!(a.ext_dim(&s(1, 1), &lam, 1), 0);
        assert_eq!(a.ext_dim(&s(1, 1), &lam, 2), 0);
        assert!(a.ext_dim(&s(2, 1), &lam, 2) >= 1);
        assert_eq!(a.ext1_of(&m(3, 2), &s(1, 3)), 1);
        for p in a.projectives() {
            for k in 1..4 {
                assert_eq!(a.ext_dim(&p.into(), &lam, k), 0);
            }
        }
    }

    #[test]
    fn gorenstein_degrees() {
        assert_eq!(a().gorenstein_degree().unwrap(), 2);
        assert_eq!(g().gorenstein_degree().unwrap(), 3);
    }

    #[test]
    fn gpd_examples() {
        let a = a();
        let gor = a.gorenstein().unwrap();
        assert_eq!(gor.gpd(&s(1, 1)), 0);
        assert_eq!(gor.gpd(&s(2, 1)), 2);
        assert_eq!(gor.gpd(&s(1, 2)), 2);
        assert!(gor.is_gorenstein_projective(&s(1, 1)));
        assert!(!gor.is_gorenstein_projective(&s(1, 2)));
        for p in a.projectives() {
            assert!(gor.is_gorenstein_projective(&p.into()));
        }
        let g = g();
        let gg = g.gorenstein().unwrap();
        for x in g.indecomposables() {
            assert_eq!(ExtendedNat::Finite(gg.gpd_of(&x)), g.pd_of(&x));
        }
    }

    #[test]
    fn non_gorenstein_gpd_is_an_error() {
        let mut found = None;
        'outer: for c1 in 2..5 {
            for c2 in 2..5 {
                for c3 in 2..5 {
                    if let Ok(alg) = KupischSeries::cyclic(&[c1, c2, c3]) {
                        if alg.gorenstein_degree().map(|g| !g.is_finite()).unwrap_or(false) {
                            found = Some(alg);
                            break 'outer;
                        }
                    }
                }
            }
        }
        let alg = found.expect("a non-Gorenstein cyclic algebra on three vertices");
        assert!(matches!(alg.gpd(&alg.simple(1).into()), Err(Error::NotGorenstein)));
    }
}
