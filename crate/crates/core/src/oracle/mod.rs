//! Linear-algebra oracle over `F_p`.
//!
//! Modules are materialised as explicit representations and every quantity is
//! recomputed from matrices: Hom as the solution space of the intertwining
//! equations, `Ext^1` as an explicit cokernel, injectivity through the lifting
//! property, and the Auslander-Reiten translate as `D Tr` of a minimal
//! projective presentation. Nothing here calls the combinatorial formulas in
//! [`crate::module`] or [`crate::homology`]; the only shared inputs are the
//! Kupisch series and the interval-module labels.
//!
//! Results do not depend on `p` because the algebras are monomial.

pub mod linalg;
pub mod rep;

use crate::algebra::KupischSeries;
use crate::error::{Error, Result};
use crate::module::IntervalModule;

use linalg::{coordinates, rank_of, Matrix};
use rep::{hom_basis, kernel, projective_cover, realize, realize_sum, top_dims, HomMap, MatrixRep};

pub const DEFAULT_PRIME: u32 = 2;
pub const DEFAULT_DIM_CAP: usize = 128;

#[derive(Clone, Debug)]
pub struct Oracle {
    alg: KupischSeries,
    p: u32,
    cap: usize,
}

/// A monomorphism between indecomposables, kept for the injectivity test.
#[derive(Clone, Debug)]
pub struct Inclusion {
    pub sub: IntervalModule,
    pub big: IntervalModule,
    map: HomMap,
}

impl Oracle {
    pub fn new(alg: &KupischSeries, p: u32) -> Result<Self> {
        Self::with_cap(alg, p, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(alg: &KupischSeries, p: u32, cap: usize) -> Result<Self> {
        if !linalg::is_prime(p) || p > 65521 {
            return Err(Error::PreconditionFailed(format!("field characteristic {p} is not a small prime")));
        }
        Ok(Oracle { alg: alg.clone(), p, cap })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    fn check(&self, dim: usize) -> Result<()> {
        if dim > self.cap {
            Err(Error::DimensionCapExceeded { dim, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn realize(&self, m: &IntervalModule) -> Result<MatrixRep> {
        self.check(m.len())?;
        Ok(realize(&self.alg, m, self.p))
    }

    pub fn hom_dim(&self, x: &IntervalModule, y: &IntervalModule) -> Result<usize> {
        Ok(hom_basis(&self.realize(x)?, &self.realize(y)?).len())
    }

    /// `dim coker(Hom(P_0, y) -> Hom(Ω x, y))` for the projective cover
    /// `P_0 -> x` with kernel `Ω x`.
    pub fn ext1_dim(&self, x: &IntervalModule, y: &IntervalModule) -> Result<usize> {
        let xr = self.realize(x)?;
        let yr = self.realize(y)?;
        let (p0, _, pi) = projective_cover(&self.alg, &xr);
        self.check(p0.total_dim())?;
        let (omega, incl) = kernel(&p0, &pi);
        let hom_omega = hom_basis(&omega, &yr);
        let restricted: Vec<Vec<u32>> = hom_basis(&p0, &yr).iter().map(|g| g.compose(&incl).flatten()).collect();
        let ambient = HomMap::zero(&omega, &yr).flatten().len();
        Ok(hom_omega.len() - rank_of(&restricted, ambient, self.p))
    }

    /// Kernel of the explicit projective cover, named. Over a Nakayama
    /// algebra it is zero or indecomposable.
    pub fn syzygy(&self, x: &IntervalModule) -> Result<Option<IntervalModule>> {
        let (p0, _, pi) = projective_cover(&self.alg, &self.realize(x)?);
        self.check(p0.total_dim())?;
        identify(&kernel(&p0, &pi).0)
    }

    /// `dim Ext^k(x, y)` as `Ext^1` of the oracle's own `(k-1)`-th syzygy;
    /// `k = 0` gives Hom.
    pub fn ext_dim(&self, x: &IntervalModule, y: &IntervalModule, k: usize) -> Result<usize> {
        if k == 0 {
            return self.hom_dim(x, y);
        }
        let mut z = *x;
        for _ in 1..k {
            match self.syzygy(&z)? {
                Some(next) => z = next,
                None => return Ok(0),
            }
        }
        self.ext1_dim(&z, y)
    }

    /// Every monomorphism class between indecomposables (one representative
    /// per pair that admits a mono).
    pub fn inclusions(&self) -> Result<Vec<Inclusion>> {
        let inds = self.alg.indecomposables();
        let reps: Vec<MatrixRep> = inds.iter().map(|m| self.realize(m)).collect::<Result<_>>()?;
        let mut out = Vec::new();
        for (a, ra) in inds.iter().zip(&reps) {
            for (b, rb) in inds.iter().zip(&reps) {
                // maps out of a uniserial module that kill its socle form a
                // subspace, so a basis contains a mono whenever one exists
                if let Some(map) = hom_basis(ra, rb).into_iter().find(|f| f.rank() == ra.total_dim()) {
                    out.push(Inclusion { sub: *a, big: *b, map });
                }
            }
        }
        Ok(out)
    }

    /// Injectivity of `m` by the lifting property: for every inclusion
    /// `u: X -> Y` the restriction `Hom(Y, m) -> Hom(X, m)` must be onto.
    pub fn is_injective(&self, m: &IntervalModule) -> Result<bool> {
        let inclusions = self.inclusions()?;
        self.is_injective_with(m, &inclusions)
    }

    pub fn is_injective_with(&self, m: &IntervalModule, inclusions: &[Inclusion]) -> Result<bool> {
        let mr = self.realize(m)?;
        for inc in inclusions {
            let xr = self.realize(&inc.sub)?;
            let yr = self.realize(&inc.big)?;
            let hom_x = hom_basis(&xr, &mr);
            if hom_x.is_empty() {
                continue;
            }
            let restricted: Vec<Vec<u32>> = hom_basis(&yr, &mr).iter().map(|h| h.compose(&inc.map).flatten()).collect();
            let ambient = HomMap::zero(&xr, &mr).flatten().len();
            if rank_of(&restricted, ambient, self.p) < hom_x.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `τ m = D Tr m`, computed as the dual of the cokernel of
    /// `Hom(P_0, A) -> Hom(P_1, A)` for a minimal presentation
    /// `P_1 -> P_0 -> m`. Returns `None` for the zero module.
    pub fn tau(&self, m: &IntervalModule) -> Result<Option<IntervalModule>> {
        let p = self.p;
        let v = self.alg.num_vertices();
        let mr = self.realize(m)?;
        let (p0, _, pi0) = projective_cover(&self.alg, &mr);
        self.check(p0.total_dim())?;
        let (k, incl) = kernel(&p0, &pi0);
        if k.total_dim() == 0 {
            return Ok(None);
        }
        let (p1, _, pi1) = projective_cover(&self.alg, &k);
        self.check(p1.total_dim())?;
        let f = incl.compose(&pi1);

        // e_j A for every vertex, and left multiplication by each arrow.
        let regular: Vec<(MatrixRep, Vec<(usize, usize)>)> = self
            .alg
            .vertices()
            .map(|j| {
                let (rep, mut layout) = realize_sum(&self.alg, &[self.alg.projective(j)], p);
                (rep, layout.remove(0))
            })
            .collect();
        let left_mult = |s: usize, t: usize| -> HomMap {
            // arrow s -> t sends the path b_j of e_t A to b_{j+1} of e_s A
            let (src, src_layout) = &regular[t];
            let (dst, dst_layout) = &regular[s];
            let mut map = HomMap::zero(src, dst);
            for (j, &(vert, idx)) in src_layout.iter().enumerate() {
                if let Some(&(dvert, didx)) = dst_layout.get(j + 1) {
                    debug_assert_eq!(vert, dvert);
                    map.blocks[vert].set(didx, idx, 1);
                }
            }
            map
        };

        let hom_into =
            |src: &MatrixRep| -> Vec<Vec<HomMap>> { regular.iter().map(|(r, _)| hom_basis(src, r)).collect() };
        let h0 = hom_into(&p0);
        let h1 = hom_into(&p1);
        let flat = |maps: &[HomMap]| -> Vec<Vec<u32>> { maps.iter().map(|g| g.flatten()).collect() };

        // f^*: H_j(P_0) -> H_j(P_1), g -> g f
        let pullback: Vec<Matrix> = (0..v)
            .map(|j| {
                let basis1 = flat(&h1[j]);
                let mut mat = Matrix::zeros(h1[j].len(), h0[j].len(), p);
                for (c, g) in h0[j].iter().enumerate() {
                    let coef =
                        coordinates(&basis1, &g.compose(&f).flatten(), p).expect("pullback lands in Hom(P_1, A)");
                    for (r, &e) in coef.iter().enumerate() {
                        mat.set(r, c, e);
                    }
                }
                mat
            })
            .collect();

        // dual of Tr m at vertex j: annihilator of the image of f^*
        let dual_bases: Vec<Vec<Vec<u32>>> = (0..v)
            .map(|j| {
                if h1[j].is_empty() {
                    Vec::new()
                } else if h0[j].is_empty() {
                    unit_basis(h1[j].len())
                } else {
                    pullback[j].transpose().nullspace()
                }
            })
            .collect();
        let dims: Vec<usize> = dual_bases.iter().map(|b| b.len()).collect();

        // right action on the dual is the transpose of the left action on H(P_1)
        let arrows = (0..v)
            .map(|s| {
                rep::arrow_target(&self.alg, s).map(|t| {
                    let lm = left_mult(s, t);
                    let basis_s = flat(&h1[s]);
                    let mut left = Matrix::zeros(h1[s].len(), h1[t].len(), p);
                    for (c, g) in h1[t].iter().enumerate() {
                        let coef = coordinates(&basis_s, &lm.compose(g).flatten(), p).expect("left action is closed");
                        for (r, &e) in coef.iter().enumerate() {
                            left.set(r, c, e);
                        }
                    }
                    let right = left.transpose();
                    let mut restricted = Matrix::zeros(dims[t], dims[s], p);
                    for (c, phi) in dual_bases[s].iter().enumerate() {
                        let image = right.apply(phi);
                        let coef = coordinates(&dual_bases[t], &image, p).expect("dual of Tr is a submodule");
                        for (r, &e) in coef.iter().enumerate() {
                            restricted.set(r, c, e);
                        }
                    }
                    (t, restricted)
                })
            })
            .collect();
        let tau = MatrixRep { p, dims, arrows };
        identify(&tau)
    }

    /// Every indecomposable of the algebra.
    pub fn indecomposables(&self) -> Vec<IntervalModule> {
        self.alg.indecomposables()
    }
}

/// Names an explicit representation that is zero or has simple top.
pub fn identify(rep: &MatrixRep) -> Result<Option<IntervalModule>> {
    let total = rep.total_dim();
    if total == 0 {
        return Ok(None);
    }
    let tops = top_dims(rep);
    let nonzero: Vec<(usize, usize)> = tops.iter().copied().enumerate().filter(|&(_, d)| d > 0).collect();
    match nonzero.as_slice() {
        [(vertex, 1)] => Ok(Some(IntervalModule::new(vertex + 1, total))),
        _ => Err(Error::InternalInconsistency(format!("representation with top dimensions {tops:?} is not local"))),
    }
}

fn unit_basis(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 1;
            e
        })
        .collect()
}
