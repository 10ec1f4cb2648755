//! Ext via the Hom complex of a minimal resolution, and stable Hom.

use crate::error::HomologyError;
use crate::matrix::Matrix;
use crate::rep::{hom_basis_matrix, hom_space, Representation};

use super::resolution::{projective_cover, Resolution};

/// Computes `dim Ext^i(M, N)` as the cohomology of `Hom(P_•, N)`, reusing the
/// resolution and coboundary ranks across degrees.
#[derive(Clone, Debug)]
pub struct ExtCalculator {
    resolution: Resolution,
    target: Representation,
    target_actions: Vec<Matrix>,
    /// `ranks[k]` = rank of `δ_k: Hom(P_{k-1}, N) -> Hom(P_k, N)`, `k >= 1`.
    ranks: Vec<Option<usize>>,
}

impl ExtCalculator {
    pub fn new(m: &Representation, n: &Representation) -> Result<Self, HomologyError> {
        m.same_algebra(n)?;
        Ok(ExtCalculator {
            resolution: Resolution::new(m),
            target: n.clone(),
            target_actions: n.basis_actions(),
            ranks: vec![Some(0)],
        })
    }

    pub fn resolution(&mut self) -> &mut Resolution {
        &mut self.resolution
    }

    fn hom_from_term_dim(&mut self, k: usize) -> usize {
        let dims = self.target.dims().to_vec();
        self.resolution
            .term(k)
            .vertices
            .iter()
            .map(|&v| dims[v])
            .sum()
    }

    /// The coboundary `δ_k` as a matrix from `⊕_t N_{u_t}` (summands of
    /// `P_{k-1}`) to `⊕_s N_{w_s}` (summands of `P_k`).
    pub fn coboundary(&mut self, k: usize) -> Matrix {
        assert!(k >= 1);
        let images = self.resolution.differential_generators(k);
        let src_vertices = self.resolution.term(k - 1).vertices.clone();
        let dst_vertices = self.resolution.term(k).vertices.clone();
        let alg = self.target.algebra().clone();
        let dims = self.target.dims();
        let f = self.target.field();

        let col_offsets: Vec<usize> = src_vertices
            .iter()
            .scan(0, |acc, &u| {
                let o = *acc;
                *acc += dims[u];
                Some(o)
            })
            .collect();
        let cols: usize = src_vertices.iter().map(|&u| dims[u]).sum();
        let rows: usize = dst_vertices.iter().map(|&w| dims[w]).sum();
        let mut delta = Matrix::zeros(f, rows, cols);
        let mut row0 = 0;
        for (s, &w) in dst_vertices.iter().enumerate() {
            let g = &images[s];
            let mut pos = 0;
            for (t, &u) in src_vertices.iter().enumerate() {
                let paths = alg.paths_between(u, w);
                let mut block = Matrix::zeros(f, dims[w], dims[u]);
                for (j, &b) in paths.iter().enumerate() {
                    let c = g[pos + j];
                    if c != 0 {
                        block.add_scaled(c, &self.target_actions[b]);
                    }
                }
                pos += paths.len();
                delta.set_block(row0, col_offsets[t], &block);
            }
            debug_assert_eq!(pos, g.len());
            row0 += dims[w];
        }
        delta
    }

    fn rank(&mut self, k: usize) -> usize {
        if self.ranks.len() <= k {
            self.ranks.resize(k + 1, None);
        }
        if let Some(r) = self.ranks[k] {
            return r;
        }
        let r = self.coboundary(k).rank();
        self.ranks[k] = Some(r);
        r
    }

    /// `dim Ext^i(M, N)`; `i = 0` gives `dim Hom(M, N)`.
    pub fn ext_dim(&mut self, i: usize) -> usize {
        let hom = self.hom_from_term_dim(i);
        hom - self.rank(i + 1) - self.rank(i)
    }
}

pub fn ext_dim(m: &Representation, n: &Representation, i: usize) -> Result<usize, HomologyError> {
    Ok(ExtCalculator::new(m, n)?.ext_dim(i))
}

/// `dim Ext^i(M, N)` for `i = 1..=upto`.
pub fn ext_dims(m: &Representation, n: &Representation, upto: usize) -> Result<Vec<usize>, HomologyError> {
    let mut calc = ExtCalculator::new(m, n)?;
    Ok((1..=upto).map(|i| calc.ext_dim(i)).collect())
}

/// `dim Hom(M, N)` minus the dimension of the maps factoring through a
/// projective, which are exactly those factoring through the projective
/// cover of `N`.
pub fn stable_hom_dim(m: &Representation, n: &Representation) -> Result<usize, HomologyError> {
    m.same_algebra(n)?;
    let total = hom_basis_matrix(m, n)?.cols();
    if total == 0 {
        return Ok(0);
    }
    let cover = projective_cover(n);
    let through = hom_space(m, &cover.projective)?;
    if through.is_empty() {
        return Ok(total);
    }
    let columns: Vec<Vec<u32>> = through
        .iter()
        .map(|g| cover.epi.compose(g).flatten())
        .collect();
    let len = columns[0].len();
    let factoring = Matrix::from_columns(m.field(), len, &columns).rank();
    Ok(total - factoring)
}
