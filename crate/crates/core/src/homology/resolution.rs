//! Projective covers and minimal projective resolutions.

use crate::matrix::Matrix;
use crate::rep::{Morphism, Representation};

/// A projective cover `⊕ P(v_s) -> M`, with `vertices[s] = v_s`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub vertices: Vec<usize>,
    pub projective: Representation,
    pub epi: Morphism,
    /// Image of the `s`-th generator, a vector in `M_{v_s}`.
    pub generators: Vec<Vec<u32>>,
}

/// Minimal projective cover: generators lift a basis of `top M` chosen as
/// unit vectors complementing `rad M` at each vertex.
pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let rad = m.radical();
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let d = m.dim_at(v);
        if d == r.cols() {
            continue;
        }
        for unit in r.complement_units() {
            let mut g = vec![0u32; d];
            g[unit] = 1;
            vertices.push(v);
            generators.push(g);
        }
    }
    let epi = Morphism::from_projective_generators(&vertices, m, &generators);
    ProjectiveCover {
        projective: epi.source().clone(),
        vertices,
        epi,
        generators,
    }
}

/// A minimal projective resolution, extended on demand.
///
/// `syzygies[0] = M`; `covers[k]: P_k -> Ω^k M`; `inclusions[k]` embeds
/// `Ω^{k+1} M` into `P_k`.
#[derive(Clone, Debug)]
pub struct Resolution {
    syzygies: Vec<Representation>,
    covers: Vec<ProjectiveCover>,
    inclusions: Vec<Morphism>,
}

impl Resolution {
    pub fn new(m: &Representation) -> Self {
        Resolution {
            syzygies: vec![m.clone()],
            covers: Vec::new(),
            inclusions: Vec::new(),
        }
    }

    /// Builds `P_0 .. P_len` and hence `Ω^0 .. Ω^{len+1}`.
    pub fn with_length(m: &Representation, len: usize) -> Self {
        let mut r = Self::new(m);
        r.ensure_term(len);
        r
    }

    pub fn module(&self) -> &Representation {
        &self.syzygies[0]
    }

    pub fn ensure_term(&mut self, k: usize) {
        while self.covers.len() <= k {
            let omega = self.syzygies.last().expect("nonempty");
            let cover = projective_cover(omega);
            let (kernel, inclusion) = cover.epi.kernel();
            self.covers.push(cover);
            self.syzygies.push(kernel);
            self.inclusions.push(inclusion);
        }
    }

    pub fn ensure_syzygy(&mut self, k: usize) {
        if k > 0 {
            self.ensure_term(k - 1);
        }
    }

    /// `Ω^k M`.
    pub fn syzygy(&mut self, k: usize) -> &Representation {
        self.ensure_syzygy(k);
        &self.syzygies[k]
    }

    /// `P_k` with its cover of `Ω^k M`.
    pub fn term(&mut self, k: usize) -> &ProjectiveCover {
        self.ensure_term(k);
        &self.covers[k]
    }

    /// Inclusion `Ω^{k+1} M -> P_k`.
    pub fn inclusion(&mut self, k: usize) -> &Morphism {
        self.ensure_term(k);
        &self.inclusions[k]
    }

    pub fn computed_terms(&self) -> usize {
        self.covers.len()
    }

    /// For `k >= 1`, the image of each generator of `P_k` under
    /// `d_k: P_k -> P_{k-1}`, as a vector in `(P_{k-1})_{v_s}`.
    pub fn differential_generators(&mut self, k: usize) -> Vec<Vec<u32>> {
        assert!(k >= 1);
        self.ensure_term(k);
        let cover = &self.covers[k];
        let inc = &self.inclusions[k - 1];
        cover
            .vertices
            .iter()
            .zip(&cover.generators)
            .map(|(&v, g)| inc.block(v).mul_vec(g))
            .collect()
    }

    /// `d_k = ι_{k-1} ∘ π_k : P_k -> P_{k-1}` for `k >= 1`.
    pub fn differential(&mut self, k: usize) -> Morphism {
        assert!(k >= 1);
        self.ensure_term(k);
        self.inclusions[k - 1].compose(&self.covers[k].epi)
    }

    /// Checks exactness (`im d_{k+1} = ker d_k`, `im d_1 = ker ε`) and
    /// minimality (`top P_k = top Ω^k`) of every computed term.
    pub fn verify(&mut self) -> bool {
        let n = self.covers.len();
        for k in 0..n {
            let cover = &self.covers[k];
            let omega = &self.syzygies[k];
            // epi is onto and its kernel is the stored syzygy
            if cover.epi.rank() != omega.total_dim() {
                return false;
            }
            let kernel_dim: usize = cover.epi.blocks().iter().map(|b| b.cols() - b.rank()).sum();
            if kernel_dim != self.syzygies[k + 1].total_dim() {
                return false;
            }
            let inc = &self.inclusions[k];
            let composite = cover.epi.compose(inc);
            if !composite.is_zero() || inc.rank() != self.syzygies[k + 1].total_dim() {
                return false;
            }
            let mut top = vec![0usize; omega.dims().len()];
            for &v in &cover.vertices {
                top[v] += 1;
            }
            if top != omega.top_dims() {
                return false;
            }
            // minimality: the kernel sits in the radical of P_k
            let rad = cover.projective.radical();
            for (v, r) in rad.iter().enumerate() {
                let k_block = inc.block(v);
                if k_block.cols() == 0 {
                    continue;
                }
                let both = Matrix::hstack(r.field(), r.rows(), &[r, k_block]);
                if both.rank() != r.cols() {
                    return false;
                }
            }
        }
        true
    }
}

pub fn syzygy(m: &Representation, i: usize) -> Representation {
    let mut r = Resolution::new(m);
    r.syzygy(i).clone()
}

/// `M` is projective iff its first syzygy vanishes.
pub fn is_projective(m: &Representation) -> bool {
    let cover = projective_cover(m);
    cover.projective.total_dim() == m.total_dim()
}
