//! Explicit quiver representations of right modules.
//!
//! Vertices are 0-based here. Each vertex of a Nakayama quiver has at most one
//! outgoing arrow, so arrows are indexed by their source.

use crate::algebra::KupischSeries;
use crate::module::IntervalModule;

use super::linalg::{coordinates, Matrix};

/// A representation: a vector space per vertex and a matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    pub p: u32,
    pub dims: Vec<usize>,
    /// `arrows[s]` is `(target, matrix)` for the arrow leaving `s`; the matrix
    /// is `dims[target] x dims[s]`.
    pub arrows: Vec<Option<(usize, Matrix)>>,
}

/// Where each composition-window position of each summand lives:
/// `layout[summand][t] = (vertex, index within that vertex's space)`.
pub type Layout = Vec<Vec<(usize, usize)>>;

/// A module homomorphism as one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMap {
    pub blocks: Vec<Matrix>,
}

pub(crate) fn arrow_target(alg: &KupischSeries, s: usize) -> Option<usize> {
    let v = alg.num_vertices();
    if alg.is_cyclic() {
        Some((s + 1) % v)
    } else {
        (s + 1 < v).then_some(s + 1)
    }
}

impl MatrixRep {
    pub fn zero(alg: &KupischSeries, p: u32) -> Self {
        let v = alg.num_vertices();
        let arrows = (0..v).map(|s| arrow_target(alg, s).map(|t| (t, Matrix::zeros(0, 0, p)))).collect();
        MatrixRep { p, dims: vec![0; v], arrows }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn num_vertices(&self) -> usize {
        self.dims.len()
    }

    /// Image of `x` in vertex `s` under the arrow leaving `s`.
    pub fn act(&self, s: usize, x: &[u32]) -> Option<(usize, Vec<u32>)> {
        self.arrows[s].as_ref().map(|(t, a)| (*t, a.apply(x)))
    }

    /// Whether the path of length `len` from `s` acts as zero.
    pub fn path_vanishes(&self, s: usize, len: usize) -> bool {
        let mut acc = Matrix::identity(self.dims[s], self.p);
        let mut at = s;
        for _ in 0..len {
            match &self.arrows[at] {
                Some((t, a)) => {
                    acc = a.mul(&acc);
                    at = *t;
                }
                None => return true,
            }
        }
        acc.is_zero()
    }
}

/// Realises a direct sum of interval modules with the standard basis of
/// composition-window positions; arrows shift each basis vector one step
/// towards the socle.
pub fn realize_sum(alg: &KupischSeries, modules: &[IntervalModule], p: u32) -> (MatrixRep, Layout) {
    let v = alg.num_vertices();
    let mut dims = vec![0usize; v];
    let layout: Layout = modules
        .iter()
        .map(|m| {
            (0..m.len())
                .map(|t| {
                    let vert = alg.vertex_at((m.start() + t) as i64) - 1;
                    let idx = dims[vert];
                    dims[vert] += 1;
                    (vert, idx)
                })
                .collect()
        })
        .collect();
    let mut arrows: Vec<Option<(usize, Matrix)>> =
        (0..v).map(|s| arrow_target(alg, s).map(|t| (t, Matrix::zeros(dims[t], dims[s], p)))).collect();
    for positions in &layout {
        for w in positions.windows(2) {
            let ((s, i), (t, j)) = (w[0], w[1]);
            let (target, a) = arrows[s].as_mut().expect("interval runs along an arrow");
            debug_assert_eq!(*target, t);
            a.set(j, i, 1);
        }
    }
    (MatrixRep { p, dims, arrows }, layout)
}

pub fn realize(alg: &KupischSeries, m: &IntervalModule, p: u32) -> MatrixRep {
    realize_sum(alg, std::slice::from_ref(m), p).0
}

impl HomMap {
    pub fn zero(x: &MatrixRep, y: &MatrixRep) -> Self {
        let blocks = x.dims.iter().zip(&y.dims).map(|(&dx, &dy)| Matrix::zeros(dy, dx, x.p)).collect();
        HomMap { blocks }
    }

    /// Entries of all blocks, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.as_slice().iter().copied()).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &HomMap) -> HomMap {
        HomMap { blocks: self.blocks.iter().zip(&other.blocks).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }
}

/// A basis of `Hom(x, y)`: solutions of `phi_t A^x = A^y phi_s` for every
/// arrow `s -> t`.
pub fn hom_basis(x: &MatrixRep, y: &MatrixRep) -> Vec<HomMap> {
    let p = x.p;
    let v = x.num_vertices();
    let mut offsets = Vec::with_capacity(v);
    let mut unknowns = 0;
    for k in 0..v {
        offsets.push(unknowns);
        unknowns += x.dims[k] * y.dims[k];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |k: usize, r: usize, c: usize| offsets[k] + r * x.dims[k] + c;
    let mut equations: Vec<Vec<u32>> = Vec::new();
    for s in 0..v {
        let (Some((t, ax)), Some((_, ay))) = (&x.arrows[s], &y.arrows[s]) else { continue };
        let t = *t;
        for r in 0..y.dims[t] {
            for c in 0..x.dims[s] {
                let mut row = vec![0u32; unknowns];
                for q in 0..x.dims[t] {
                    let coef = ax.get(q, c);
                    if coef != 0 {
                        let i = var(t, r, q);
                        row[i] = (row[i] + coef) % p;
                    }
                }
                for q in 0..y.dims[s] {
                    let coef = ay.get(r, q);
                    if coef != 0 {
                        let i = var(s, q, c);
                        row[i] = (row[i] + p - coef) % p;
                    }
                }
                equations.push(row);
            }
        }
    }
    let solutions = if equations.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![0u32; unknowns];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        let mut sys = Matrix::zeros(equations.len(), unknowns, p);
        for (r, row) in equations.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                sys.set(r, c, e);
            }
        }
        sys.nullspace()
    };
    solutions
        .into_iter()
        .map(|sol| {
            let blocks = (0..v)
                .map(|k| {
                    let mut b = Matrix::zeros(y.dims[k], x.dims[k], p);
                    for r in 0..y.dims[k] {
                        for c in 0..x.dims[k] {
                            b.set(r, c, sol[var(k, r, c)]);
                        }
                    }
                    b
                })
                .collect();
            HomMap { blocks }
        })
        .collect()
}

/// The kernel of `f: x -> y` as a subrepresentation, with its inclusion.
pub fn kernel(x: &MatrixRep, f: &HomMap) -> (MatrixRep, HomMap) {
    let p = x.p;
    let v = x.num_vertices();
    let bases: Vec<Vec<Vec<u32>>> =
        (0..v).map(|k| if x.dims[k] == 0 { Vec::new() } else { f.blocks[k].nullspace() }).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let arrows = (0..v)
        .map(|s| {
            x.arrows[s].as_ref().map(|(t, a)| {
                let t = *t;
                let mut m = Matrix::zeros(dims[t], dims[s], p);
                for (c, u) in bases[s].iter().enumerate() {
                    let image = a.apply(u);
                    let coef = coordinates(&bases[t], &image, p).expect("kernel is a subrepresentation");
                    for (r, &e) in coef.iter().enumerate() {
                        m.set(r, c, e);
                    }
                }
                (t, m)
            })
        })
        .collect();
    let inclusion = HomMap { blocks: (0..v).map(|k| Matrix::from_columns(x.dims[k], &bases[k], p)).collect() };
    (MatrixRep { p, dims, arrows }, inclusion)
}

/// Dimensions of `x / rad x` per vertex, where `rad x` is spanned by arrow
/// images.
pub fn top_dims(x: &MatrixRep) -> Vec<usize> {
    let rad = radical_bases(x);
    x.dims.iter().zip(&rad).map(|(d, r)| d - r.len()).collect()
}

fn radical_bases(x: &MatrixRep) -> Vec<Vec<Vec<u32>>> {
    let v = x.num_vertices();
    let mut images: Vec<Vec<Vec<u32>>> = vec![Vec::new(); v];
    for s in 0..v {
        if let Some((t, a)) = &x.arrows[s] {
            for c in 0..a.cols() {
                images[*t].push(a.column(c));
            }
        }
    }
    images.into_iter().enumerate().map(|(k, vecs)| independent_subset(&vecs, x.dims[k], x.p)).collect()
}

fn independent_subset(vecs: &[Vec<u32>], len: usize, p: u32) -> Vec<Vec<u32>> {
    let mut chosen: Vec<Vec<u32>> = Vec::new();
    for v in vecs {
        let mut trial = chosen.clone();
        trial.push(v.clone());
        if super::linalg::rank_of(&trial, len, p) == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

/// Projective cover `pi: P -> x`. Returns the cover, the vertices
/// (1-based) of its indecomposable summands and `pi`.
pub fn projective_cover(alg: &KupischSeries, x: &MatrixRep) -> (MatrixRep, Vec<usize>, HomMap) {
    let p = x.p;
    let v = x.num_vertices();
    let rad = radical_bases(x);
    // lifts of a basis of the top: extend a radical basis by unit vectors
    let mut lifts: Vec<(usize, Vec<u32>)> = Vec::new();
    for k in 0..v {
        let mut span = rad[k].clone();
        for e in 0..x.dims[k] {
            let mut unit = vec![0u32; x.dims[k]];
            unit[e] = 1;
            let mut trial = span.clone();
            trial.push(unit.clone());
            if super::linalg::rank_of(&trial, x.dims[k], p) == trial.len() {
                span = trial;
                lifts.push((k, unit));
            }
        }
    }
    let tops: Vec<usize> = lifts.iter().map(|(k, _)| k + 1).collect();
    let summands: Vec<IntervalModule> = tops.iter().map(|&i| alg.projective(i)).collect();
    let (cover, layout) = realize_sum(alg, &summands, p);
    let mut pi = HomMap::zero(&cover, x);
    for ((_, lift), positions) in lifts.iter().zip(&layout) {
        let mut image = lift.clone();
        for (step, &(vert, idx)) in positions.iter().enumerate() {
            if step > 0 {
                let prev = positions[step - 1].0;
                let (_, next) = x.act(prev, &image).expect("arrow along the window");
                image = next;
            }
            for (r, &e) in image.iter().enumerate() {
                pi.blocks[vert].set(r, idx, e);
            }
        }
    }
    (cover, tops, pi)
}
