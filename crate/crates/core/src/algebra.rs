//! Connected Nakayama algebras presented by their Kupisch series.
//!
//! Vertices are numbered `1..=v`. Right modules are used throughout, and the
//! arrow at vertex `i` points to `i + 1` (mod `v` for cyclic quivers), so the
//! composition factors of `M(i, l)` read `S_i, S_{i+1}, ..., S_{i+l-1}` from
//! top to socle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::module::IntervalModule;

/// Quiver shape of a connected Nakayama algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Linear,
    Cyclic,
}

/// A validated Kupisch series `c_1, ..., c_v`: the Loewy lengths of the
/// indecomposable projective right modules.
///
/// The vertex labelling is the one the series was built with. Two series
/// describe the same algebra iff their [`canonical`](Self::canonical) forms
/// agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KupischSeries {
    lengths: Vec<usize>,
    shape: Shape,
}

impl KupischSeries {
    pub fn new(lengths: Vec<usize>, shape: Shape) -> Result<Self> {
        validate(&lengths, shape)?;
        Ok(KupischSeries { lengths, shape })
    }

    pub fn linear(lengths: &[usize]) -> Result<Self> {
        Self::new(lengths.to_vec(), Shape::Linear)
    }

    pub fn cyclic(lengths: &[usize]) -> Result<Self> {
        Self::new(lengths.to_vec(), Shape::Cyclic)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn is_cyclic(&self) -> bool {
        self.shape == Shape::Cyclic
    }

    pub fn num_vertices(&self) -> usize {
        self.lengths.len()
    }

    /// Dimension of the algebra, `sum c_i`.
    pub fn dim(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.lengths.len()
    }

    /// Loewy length of `P_i`.
    pub fn loewy(&self, i: usize) -> usize {
        self.lengths[i - 1]
    }

    /// Maps an unnormalised position to a vertex: reduced mod `v` for cyclic
    /// quivers, `None` outside `1..=v` for linear ones.
    pub fn wrap(&self, k: i64) -> Option<usize> {
        let v = self.lengths.len() as i64;
        match self.shape {
            Shape::Cyclic => Some(((k - 1).rem_euclid(v) + 1) as usize),
            Shape::Linear => (1..=v).contains(&k).then_some(k as usize),
        }
    }

    /// `wrap` for positions that are known to be valid.
    pub(crate) fn vertex_at(&self, k: i64) -> usize {
        self.wrap(k).expect("position outside a linear quiver")
    }

    /// Whether `M(start, len)` names a module of this algebra.
    pub fn is_interval(&self, start: usize, len: usize) -> bool {
        (1..=self.num_vertices()).contains(&start) && len >= 1 && len <= self.loewy(start)
    }

    /// Checked constructor for `M(start, len)`.
    pub fn interval(&self, start: usize, len: usize) -> Result<IntervalModule> {
        if self.is_interval(start, len) {
            Ok(IntervalModule::new(start, len))
        } else {
            Err(Error::InvalidModule(format!("M({start},{len})")))
        }
    }

    pub fn projective(&self, i: usize) -> IntervalModule {
        IntervalModule::new(i, self.loewy(i))
    }

    pub fn simple(&self, i: usize) -> IntervalModule {
        IntervalModule::new(i, 1)
    }

    /// Length of the indecomposable injective `I_j`.
    pub fn injective_len(&self, j: usize) -> usize {
        // Well-formed intervals ending at j are closed under shortening, so
        // the first failure bounds the maximum.
        let mut m = 1;
        loop {
            let next = m + 1;
            match self.wrap(j as i64 - next as i64 + 1) {
                Some(start) if next <= self.loewy(start) => m = next,
                _ => return m,
            }
        }
    }

    /// The indecomposable injective with socle `S_j`.
    pub fn injective(&self, j: usize) -> IntervalModule {
        let d = self.injective_len(j);
        IntervalModule::new(self.vertex_at(j as i64 - d as i64 + 1), d)
    }

    pub fn projectives(&self) -> Vec<IntervalModule> {
        self.vertices().map(|i| self.projective(i)).collect()
    }

    pub fn injectives(&self) -> Vec<IntervalModule> {
        self.vertices().map(|j| self.injective(j)).collect()
    }

    pub fn simples(&self) -> Vec<IntervalModule> {
        self.vertices().map(|i| self.simple(i)).collect()
    }

    /// All indecomposable modules, ordered by top vertex and then length.
    pub fn indecomposables(&self) -> Vec<IntervalModule> {
        self.vertices().flat_map(|i| (1..=self.loewy(i)).map(move |l| IntervalModule::new(i, l))).collect()
    }

    pub fn socle_vertex(&self, m: &IntervalModule) -> usize {
        self.vertex_at(m.start() as i64 + m.len() as i64 - 1)
    }

    pub fn is_projective(&self, m: &IntervalModule) -> bool {
        m.len() == self.loewy(m.start())
    }

    pub fn is_injective(&self, m: &IntervalModule) -> bool {
        m.len() == self.injective_len(self.socle_vertex(m))
    }

    /// Kupisch series of the opposite algebra.
    ///
    /// Vertex `k` of the result corresponds to vertex `v + 1 - k` here, so its
    /// projective at `k` has the length of `I_{v+1-k}`. The map is an
    /// involution on labelled series.
    pub fn opposite(&self) -> KupischSeries {
        let v = self.num_vertices();
        let lengths = (1..=v).map(|k| self.injective_len(v + 1 - k)).collect();
        KupischSeries::new(lengths, self.shape).expect("opposite of an admissible series is admissible")
    }

    /// The lexicographically least rotation for cyclic series; linear series
    /// are already canonical.
    pub fn canonical(&self) -> KupischSeries {
        match self.shape {
            Shape::Linear => self.clone(),
            Shape::Cyclic => {
                let v = self.lengths.len();
                let best = (0..v).map(|r| rotate(&self.lengths, r)).min().expect("nonempty series");
                KupischSeries { lengths: best, shape: Shape::Cyclic }
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    pub fn same_algebra(&self, other: &KupischSeries) -> bool {
        self.canonical() == other.canonical()
    }
}

fn rotate(xs: &[usize], r: usize) -> Vec<usize> {
    xs[r..].iter().chain(&xs[..r]).copied().collect()
}

/// Admissibility check for a raw series. Reports the first broken rule with
/// its 1-based index.
pub fn validate(lengths: &[usize], shape: Shape) -> Result<()> {
    let v = lengths.len();
    if v == 0 {
        return Err(Error::EmptySeries);
    }
    let fail = |index: usize, violation| Err(Error::NotAdmissible { index, violation });
    for (idx, &c) in lengths.iter().enumerate() {
        if c == 0 {
            return fail(idx + 1, Violation::ZeroLength);
        }
    }
    match shape {
        Shape::Cyclic => {
            for (idx, &c) in lengths.iter().enumerate() {
                if c < 2 {
                    return fail(idx + 1, Violation::CyclicBelowTwo);
                }
            }
            for idx in 0..v {
                let next = lengths[(idx + 1) % v];
                if next + 1 < lengths[idx] {
                    return fail((idx + 1) % v + 1, Violation::Drop);
                }
            }
        }
        Shape::Linear => {
            if lengths[v - 1] != 1 {
                return fail(v, Violation::LastNotOne);
            }
            for (idx, &c) in lengths[..v - 1].iter().enumerate() {
                if c < 2 {
                    return fail(idx + 1, Violation::InteriorBelowTwo);
                }
            }
            for idx in 0..v - 1 {
                if lengths[idx + 1] + 1 < lengths[idx] {
                    return fail(idx + 2, Violation::Drop);
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.lengths.iter().map(|c| c.to_string()).collect();
        let tag = match self.shape {
            Shape::Linear => "l",
            Shape::Cyclic => "c",
        };
        write!(f, "[{}]{tag}", body.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(i: usize, l: usize) -> IntervalModule {
        IntervalModule::new(i, l)
    }

    #[test]
    fn validation_examples() {
        assert!(KupischSeries::cyclic(&[3, 3, 4]).is_ok());
        assert!(KupischSeries::linear(&[3, 3, 3, 3, 2, 1]).is_ok());
        assert!(KupischSeries::cyclic(&[2, 2, 2]).is_ok());
        match KupischSeries::cyclic(&[3, 1, 4]) {
            Err(Error::NotAdmissible { index: 2, violation: Violation::CyclicBelowTwo }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(KupischSeries::linear(&[]), Err(Error::EmptySeries)));
        assert!(matches!(
            KupischSeries::linear(&[2, 2]),
            Err(Error::NotAdmissible { index: 2, violation: Violation::LastNotOne })
        ));
        assert!(matches!(
            KupischSeries::linear(&[2, 1, 1]),
            Err(Error::NotAdmissible { index: 2, violation: Violation::InteriorBelowTwo })
        ));
        assert!(matches!(
            KupischSeries::linear(&[4, 2, 1]),
            Err(Error::NotAdmissible { index: 2, violation: Violation::Drop })
        ));
        // wrap-around drop from c_3 = 5 to c_1 = 3
        assert!(matches!(
            KupischSeries::cyclic(&[3, 4, 5]),
            Err(Error::NotAdmissible { index: 1, violation: Violation::Drop })
        ));
        assert!(matches!(
            KupischSeries::cyclic(&[0, 2]),
            Err(Error::NotAdmissible { index: 1, violation: Violation::ZeroLength })
        ));
        assert!(KupischSeries::linear(&[1]).is_ok());
        assert!(KupischSeries::cyclic(&[1]).is_err());
    }

    #[test]
    fn projectives_and_simples() {
        let a = KupischSeries::cyclic(&[3, 3, 4]).unwrap();
        let g = KupischSeries::linear(&[3, 3, 3, 3, 2, 1]).unwrap();
        assert_eq!(a.projective(3), m(3, 4));
        assert_eq!(a.projective(1), m(1, 3));
        assert_eq!(g.projective(6), m(6, 1));
        assert_eq!(g.simple(6), g.projective(6));
        assert_eq!(a.simple(2), m(2, 1));
    }

    #[test]
    fn injective_examples() {
        let a = KupischSeries::cyclic(&[3, 3, 4]).unwrap();
        assert_eq!(a.injective(1), m(2, 3));
        assert_eq!(a.injective(1), a.projective(2));
        assert_eq!(a.injective(2), m(3, 3));
        assert!(!a.is_projective(&a.injective(2)));
        assert_eq!(a.injective(3), a.projective(3));
        let g = KupischSeries::linear(&[3, 3, 3, 3, 2, 1]).unwrap();
        assert_eq!(g.injective(1), m(1, 1));
        assert_eq!(g.injective(6), m(4, 3));
        for j in g.vertices() {
            assert_eq!(g.socle_vertex(&g.injective(j)), j);
        }
    }

    #[test]
    fn opposite_examples() {
        let c = KupischSeries::cyclic(&[2, 2, 2]).unwrap();
        assert_eq!(c.opposite(), c);
        let a = KupischSeries::cyclic(&[3, 3, 4]).unwrap();
        let op = a.opposite();
        let mut ms = op.lengths().to_vec();
        ms.sort();
        assert_eq!(ms, vec![3, 3, 4]);
        assert!(op.is_cyclic());
        assert_eq!(op.opposite(), a);
        let g = KupischSeries::linear(&[3, 3, 3, 3, 2, 1]).unwrap();
        assert_eq!(g.opposite().dim(), 15);
        assert!(!g.opposite().is_cyclic());
    }

    #[test]
    fn canonical_rotation() {
        let a = KupischSeries::cyclic(&[4, 3, 3]).unwrap();
        assert_eq!(a.canonical().lengths(), &[3, 3, 4]);
        assert!(a.same_algebra(&KupischSeries::cyclic(&[3, 4, 3]).unwrap()));
        assert!(!a.is_canonical());
        let g = KupischSeries::linear(&[2, 2, 1]).unwrap();
        assert!(g.is_canonical());
    }

    #[test]
    fn self_injective_constant_series() {
        for mlen in 2..6 {
            let a = KupischSeries::cyclic(&[mlen; 4]).unwrap();
            for i in a.vertices() {
                let p = a.projective(i);
                assert_eq!(a.injective(a.socle_vertex(&p)), p);
            }
        }
    }
}
