//! Finitely generated modules as quiver representations.
//!
//! A representation assigns a vector space `M_v` to each vertex and a
//! matrix `M(a): M_s -> M_t` (shape `dims[t] x dims[s]`) to each arrow
//! `a: s -> t`. Paths act by composing arrow matrices in path order, so the
//! projective `P(v)` has basis the residue paths starting at `v` and arrows
//! act by post-composition.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::RepError;
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::quiver::Path;

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.dims == other.dims && self.action == other.action
    }
}

impl Eq for Representation {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Representation {
    /// Validates matrix shapes and that every relation acts as zero.
    pub fn new(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        action: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        let rep = Representation {
            algebra,
            dims,
            action,
        };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<(), RepError> {
        let q = self.algebra.quiver();
        assert_eq!(self.dims.len(), q.vertex_count());
        assert_eq!(self.action.len(), q.arrow_count());
        for (arrow, m) in q.arrows().iter().zip(&self.action) {
            let (rows, cols) = (self.dims[arrow.target], self.dims[arrow.source]);
            if m.rows() != rows || m.cols() != cols {
                return Err(RepError::ShapeMismatch {
                    arrow: arrow.label.clone(),
                    rows,
                    cols,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                });
            }
        }
        for (i, r) in self.algebra.relations().iter().enumerate() {
            let (_, first) = &r.terms()[0];
            let s = first.source;
            let t = q.path_target(first);
            let mut acc = Matrix::zeros(self.field(), self.dims[t], self.dims[s]);
            for (c, p) in r.terms() {
                acc.add_scaled(*c, &self.path_matrix(p));
            }
            if !acc.is_zero() {
                return Err(RepError::RelationViolated(i + 1));
            }
        }
        Ok(())
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        action: Vec<Matrix>,
    ) -> Self {
        let rep = Representation {
            algebra,
            dims,
            action,
        };
        debug_assert!(rep.validate().is_ok());
        rep
    }

    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let f = algebra.field();
        let action = (0..algebra.arrow_count())
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims: vec![0; algebra.vertex_count()],
            action,
        }
    }

    pub fn simple(algebra: &Arc<BoundQuiverAlgebra>, v: usize) -> Result<Self, RepError> {
        let n = algebra.vertex_count();
        if v >= n {
            return Err(RepError::UnknownVertex(v));
        }
        let mut dims = vec![0; n];
        dims[v] = 1;
        Ok(Self::from_dims_zero_action(algebra, dims))
    }

    /// The semisimple module with the given dimension vector.
    pub fn from_dims_zero_action(algebra: &Arc<BoundQuiverAlgebra>, dims: Vec<usize>) -> Self {
        let f = algebra.field();
        let action = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims,
            action,
        }
    }

    /// The representation spanned by a set of residue basis paths per
    /// vertex (which must be closed under right multiplication by arrows),
    /// with arrows acting by post-composition.
    fn from_path_sets(algebra: &Arc<BoundQuiverAlgebra>, sets: Vec<Vec<usize>>) -> Self {
        let f = algebra.field();
        let mut position = vec![usize::MAX; algebra.dim()];
        for set in &sets {
            for (k, &b) in set.iter().enumerate() {
                position[b] = k;
            }
        }
        let action = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let src = &sets[arrow.source];
                let tgt = &sets[arrow.target];
                let mut m = Matrix::zeros(f, tgt.len(), src.len());
                for (col, &b) in src.iter().enumerate() {
                    for &(k, c) in algebra.arrow_action(b, a) {
                        debug_assert!(position[k] != usize::MAX);
                        m.set(position[k], col, c);
                    }
                }
                m
            })
            .collect();
        Representation::new_unchecked(
            algebra.clone(),
            sets.iter().map(Vec::len).collect(),
            action,
        )
    }

    /// `P(v)`: residue paths starting at `v`. The generator `e_v` is the
    /// first coordinate at vertex `v`.
    pub fn projective(algebra: &Arc<BoundQuiverAlgebra>, v: usize) -> Result<Self, RepError> {
        if v >= algebra.vertex_count() {
            return Err(RepError::UnknownVertex(v));
        }
        let sets = (0..algebra.vertex_count())
            .map(|w| algebra.paths_between(v, w))
            .collect();
        Ok(Self::from_path_sets(algebra, sets))
    }

    /// `⊕ P(v)` over the given vertices, summands in the given order.
    pub fn projective_sum(algebra: &Arc<BoundQuiverAlgebra>, vertices: &[usize]) -> Self {
        vertices.iter().fold(Self::zero(algebra), |acc, &v| {
            acc.direct_sum(&Self::projective(algebra, v).expect("vertex in range"))
                .expect("same algebra")
        })
    }

    /// The regular module. The right regular module is realised as the left
    /// regular module of the opposite algebra.
    pub fn regular(algebra: &Arc<BoundQuiverAlgebra>, side: Side) -> Self {
        let alg = match side {
            Side::Left => algebra.clone(),
            Side::Right => algebra.opposite(),
        };
        let sets = (0..alg.vertex_count())
            .map(|w| alg.paths_to(w).to_vec())
            .collect();
        Self::from_path_sets(&alg, sets)
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Fp {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &Matrix {
        &self.action[arrow]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn same_algebra(&self, other: &Representation) -> Result<(), RepError> {
        if self.algebra.same_as(&other.algebra) {
            Ok(())
        } else {
            Err(RepError::AlgebraMismatch)
        }
    }

    /// Matrix of an arbitrary quiver path.
    pub fn path_matrix(&self, path: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[path.source]);
        for &a in &path.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// Matrices of every residue basis path, indexed by basis position.
    pub fn basis_actions(&self) -> Vec<Matrix> {
        let alg = &self.algebra;
        let mut out: Vec<Matrix> = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let m = match alg.prefix(b) {
                None => Matrix::identity(self.field(), self.dims[alg.source(b)]),
                Some((pre, a)) => self.action[a].mul(&out[pre]),
            };
            out.push(m);
        }
        out
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        self.same_algebra(other)?;
        Ok(Representation {
            algebra: self.algebra.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            action: self
                .action
                .iter()
                .zip(&other.action)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        })
    }

    /// Per-vertex column bases of the radical `Σ_a im M(a)`.
    pub fn radical(&self) -> Vec<Matrix> {
        let all: Vec<Matrix> = (0..self.dims.len())
            .map(|v| Matrix::identity(self.field(), self.dims[v]))
            .collect();
        self.radical_of(&all)
    }

    /// Radical of the submodule spanned per vertex by the columns of `sub`.
    pub fn radical_of(&self, sub: &[Matrix]) -> Vec<Matrix> {
        let f = self.field();
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let images: Vec<Matrix> = q
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == v)
                    .map(|(i, a)| self.action[i].mul(&sub[a.source]))
                    .collect();
                let refs: Vec<&Matrix> = images.iter().collect();
                Matrix::hstack(f, self.dims[v], &refs).column_space()
            })
            .collect()
    }

    /// Dimension vector of `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical()
            .iter()
            .zip(&self.dims)
            .map(|(r, &d)| d - r.cols())
            .collect()
    }

    /// Total dimensions of the layers `rad^k M / rad^{k+1} M`.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut current: Vec<Matrix> = (0..self.dims.len())
            .map(|v| Matrix::identity(self.field(), self.dims[v]))
            .collect();
        let mut layers = Vec::new();
        while current.iter().any(|m| m.cols() > 0) {
            let next = self.radical_of(&current);
            layers.push(
                current
                    .iter()
                    .zip(&next)
                    .map(|(c, n)| c.cols() - n.cols())
                    .collect(),
            );
            current = next;
        }
        layers
    }

    /// `rad^k M` as per-vertex column bases.
    pub fn radical_power(&self, k: usize) -> Vec<Matrix> {
        let mut current: Vec<Matrix> = (0..self.dims.len())
            .map(|v| Matrix::identity(self.field(), self.dims[v]))
            .collect();
        for _ in 0..k {
            current = self.radical_of(&current);
        }
        current
    }

    /// The submodule spanned by per-vertex column bases (must be closed under
    /// the arrows), with its inclusion.
    pub fn submodule(&self, sub: &[Matrix]) -> (Representation, Morphism) {
        let q = self.algebra.quiver();
        let action = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let moved = self.action[i].mul(&sub[a.source]);
                sub[a.target]
                    .solve(&moved)
                    .expect("subspaces closed under arrows")
            })
            .collect();
        let rep = Representation::new_unchecked(
            self.algebra.clone(),
            sub.iter().map(Matrix::cols).collect(),
            action,
        );
        let inclusion = Morphism::new_unchecked(rep.clone(), self.clone(), sub.to_vec());
        (rep, inclusion)
    }

    /// The quotient by a submodule given as per-vertex column bases, with the
    /// projection.
    pub fn quotient(&self, sub: &[Matrix]) -> (Representation, Morphism) {
        let f = self.field();
        let q = self.algebra.quiver();
        let proj: Vec<Matrix> = sub
            .iter()
            .enumerate()
            .map(|(v, s)| {
                if s.cols() == 0 {
                    Matrix::identity(f, self.dims[v])
                } else {
                    s.left_kernel()
                }
            })
            .collect();
        let sections: Vec<Matrix> = proj
            .iter()
            .map(|p| {
                p.solve(&Matrix::identity(f, p.rows()))
                    .expect("projection has full row rank")
            })
            .collect();
        let action = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                proj[a.target]
                    .mul(&self.action[i])
                    .mul(&sections[a.source])
            })
            .collect();
        let rep = Representation::new_unchecked(
            self.algebra.clone(),
            proj.iter().map(Matrix::rows).collect(),
            action,
        );
        let projection = Morphism::new_unchecked(self.clone(), rep.clone(), proj);
        (rep, projection)
    }

    /// Reinterprets the same data over an equal algebra handle.
    pub fn rebase(&self, algebra: &Arc<BoundQuiverAlgebra>) -> Result<Representation, RepError> {
        if !self.algebra.same_as(algebra) {
            return Err(RepError::AlgebraMismatch);
        }
        Ok(Representation {
            algebra: algebra.clone(),
            dims: self.dims.clone(),
            action: self.action.clone(),
        })
    }
}

/// A module homomorphism: one matrix per vertex, `blocks[v]` of shape
/// `target.dims[v] x source.dims[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<Representation>,
    target: Arc<Representation>,
    blocks: Vec<Matrix>,
}

impl Morphism {
    pub fn new(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        source.same_algebra(&target)?;
        let m = Morphism {
            source: Arc::new(source),
            target: Arc::new(target),
            blocks,
        };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Self {
        Self::from_arcs(Arc::new(source), Arc::new(target), blocks)
    }

    pub(crate) fn from_arcs(
        source: Arc<Representation>,
        target: Arc<Representation>,
        blocks: Vec<Matrix>,
    ) -> Self {
        let m = Morphism {
            source,
            target,
            blocks,
        };
        debug_assert!(m.check().is_ok());
        m
    }

    /// Verifies block shapes and the commuting squares.
    pub fn check(&self) -> Result<(), RepError> {
        let q = self.source.algebra().quiver();
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != self.target.dims[v] || b.cols() != self.source.dims[v] {
                return Err(RepError::ShapeMismatch {
                    arrow: format!("vertex {}", q.vertex_name(v)),
                    rows: self.target.dims[v],
                    cols: self.source.dims[v],
                    got_rows: b.rows(),
                    got_cols: b.cols(),
                });
            }
        }
        for (i, a) in q.arrows().iter().enumerate() {
            let lhs = self.target.action[i].mul(&self.blocks[a.source]);
            let rhs = self.blocks[a.target].mul(&self.source.action[i]);
            if lhs != rhs {
                return Err(RepError::NotAMorphism(a.label.clone()));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Representation) -> Self {
        let blocks = m
            .dims
            .iter()
            .map(|&d| Matrix::identity(m.field(), d))
            .collect();
        let arc = Arc::new(m.clone());
        Morphism::from_arcs(arc.clone(), arc, blocks)
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let blocks = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(source.field(), t, s))
            .collect();
        Morphism::new_unchecked(source.clone(), target.clone(), blocks)
    }

    /// The map `⊕ P(v_s) -> target` sending the generator of the `s`-th
    /// summand to `images[s] ∈ target_{v_s}`.
    pub fn from_projective_generators(
        vertices: &[usize],
        target: &Representation,
        images: &[Vec<u32>],
    ) -> Self {
        let alg = target.algebra().clone();
        let source = Representation::projective_sum(&alg, vertices);
        let actions = target.basis_actions();
        let f = target.field();
        let blocks = (0..alg.vertex_count())
            .map(|w| {
                let mut cols: Vec<Vec<u32>> = Vec::new();
                for (s, &v) in vertices.iter().enumerate() {
                    for b in alg.paths_between(v, w) {
                        cols.push(actions[b].mul_vec(&images[s]));
                    }
                }
                if cols.is_empty() {
                    Matrix::zeros(f, target.dims[w], 0)
                } else {
                    Matrix::from_columns(f, target.dims[w], &cols)
                }
            })
            .collect();
        Morphism::new_unchecked(source, target.clone(), blocks)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Morphism) -> Morphism {
        assert_eq!(other.target.dims, self.source.dims);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.mul(b))
            .collect();
        Morphism::from_arcs(other.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        Morphism::from_arcs(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, s: u32) -> Morphism {
        Morphism::from_arcs(
            self.source.clone(),
            self.target.clone(),
            self.blocks.iter().map(|b| b.scale(s)).collect(),
        )
    }

    /// All block entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| b.to_rows().into_iter().flatten())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let blocks = self
            .blocks
            .iter()
            .map(Matrix::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism::from_arcs(
            self.target.clone(),
            self.source.clone(),
            blocks,
        ))
    }

    pub fn kernel(&self) -> (Representation, Morphism) {
        let sub: Vec<Matrix> = self.blocks.iter().map(Matrix::kernel).collect();
        self.source.submodule(&sub)
    }

    pub fn image_subspaces(&self) -> Vec<Matrix> {
        self.blocks.iter().map(Matrix::column_space).collect()
    }

    pub fn cokernel(&self) -> (Representation, Morphism) {
        self.target.quotient(&self.image_subspaces())
    }
}

/// Coefficient matrix of the commuting-square equations for Hom(M, N);
/// unknowns are the flattened blocks.
fn hom_equations(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>) {
    let f = m.field();
    let q = m.algebra().quiver();
    let nv = m.dims.len();
    let mut offsets = Vec::with_capacity(nv + 1);
    let mut acc = 0;
    for v in 0..nv {
        offsets.push(acc);
        acc += n.dims[v] * m.dims[v];
    }
    offsets.push(acc);
    let unknowns = acc;
    let eq_count: usize = q
        .arrows()
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut sys = Matrix::zeros(f, eq_count, unknowns);
    let mut row0 = 0;
    for (i, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let na = &n.action[i];
        let ma = &m.action[i];
        // N(a) f_s - f_t M(a) = 0, entry (x, y) with x < dims_N[t], y < dims_M[s]
        for x in 0..n.dims[t] {
            for y in 0..m.dims[s] {
                let row = row0 + x * m.dims[s] + y;
                for r in 0..n.dims[s] {
                    let c = na.get(x, r);
                    if c != 0 {
                        let col = offsets[s] + r * m.dims[s] + y;
                        sys.set(row, col, f.add(sys.get(row, col), c));
                    }
                }
                for c in 0..m.dims[t] {
                    let coef = ma.get(c, y);
                    if coef != 0 {
                        let col = offsets[t] + x * m.dims[t] + c;
                        sys.set(row, col, f.sub(sys.get(row, col), coef));
                    }
                }
            }
        }
        row0 += n.dims[t] * m.dims[s];
    }
    (sys, offsets)
}

fn unflatten(m: &Representation, n: &Representation, offsets: &[usize], v: &[u32]) -> Vec<Matrix> {
    let f = m.field();
    (0..m.dims.len())
        .map(|k| {
            let (rows, cols) = (n.dims[k], m.dims[k]);
            let mut b = Matrix::zeros(f, rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    b.set(r, c, v[offsets[k] + r * cols + c]);
                }
            }
            b
        })
        .collect()
}

/// A basis of Hom(M, N), as a matrix whose columns are flattened morphisms.
pub fn hom_basis_matrix(m: &Representation, n: &Representation) -> Result<Matrix, RepError> {
    m.same_algebra(n)?;
    let (sys, _) = hom_equations(m, n);
    Ok(sys.kernel())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize, RepError> {
    Ok(hom_basis_matrix(m, n)?.cols())
}

/// A basis of the solution space of the commuting-square constraints.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Morphism>, RepError> {
    m.same_algebra(n)?;
    let (sys, offsets) = hom_equations(m, n);
    let basis = sys.kernel();
    let src = Arc::new(m.clone());
    let tgt = Arc::new(n.clone());
    Ok((0..basis.cols())
        .map(|j| {
            let blocks = unflatten(m, n, &offsets, &basis.column(j));
            Morphism::from_arcs(src.clone(), tgt.clone(), blocks)
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub forward: Morphism,
    pub inverse: Morphism,
}

impl IsoWitness {
    /// Re-checks both maps and both compositions.
    pub fn verify(&self) -> bool {
        let id_src = Morphism::identity(self.forward.source());
        let id_tgt = Morphism::identity(self.forward.target());
        self.forward.check().is_ok()
            && self.inverse.check().is_ok()
            && self.inverse.compose(&self.forward).blocks == id_src.blocks
            && self.forward.compose(&self.inverse).blocks == id_tgt.blocks
    }
}

#[derive(Clone, Debug)]
pub enum Isomorphism {
    Yes(Box<IsoWitness>),
    No,
    Undetermined,
}

impl Isomorphism {
    pub fn is_yes(&self) -> bool {
        matches!(self, Isomorphism::Yes(_))
    }
}

/// Exhaustive search is used while `p^(dim Hom) <= EXHAUSTIVE_LIMIT`.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
pub const RANDOM_TRIALS: usize = 256;
const SEARCH_SEED: u64 = 0x6f72_6269_7473;

/// Witness-based isomorphism test; "yes" always carries a verified
/// invertible morphism.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<Isomorphism, RepError> {
    m.same_algebra(n)?;
    if m.dims != n.dims {
        return Ok(Isomorphism::No);
    }
    let hom_mn = hom_space(m, n)?;
    if m.is_zero() {
        let forward = Morphism::zero(m, n);
        let inverse = Morphism::zero(n, m);
        return Ok(Isomorphism::Yes(Box::new(IsoWitness { forward, inverse })));
    }
    let dim_nm = hom_dim(n, m)?;
    if hom_mn.len() != dim_nm
        || hom_dim(m, m)? != hom_dim(n, n)?
        || hom_mn.is_empty()
    {
        return Ok(Isomorphism::No);
    }
    let f = m.field();
    let p = f.char() as u64;
    let k = hom_mn.len();
    let combine = |coefs: &[u32]| -> Morphism {
        let mut acc = hom_mn[0].scale(coefs[0]);
        for (h, &c) in hom_mn.iter().zip(coefs).skip(1) {
            if c != 0 {
                acc = acc.add(&h.scale(c));
            }
        }
        acc
    };
    let try_candidate = |cand: Morphism| -> Option<IsoWitness> {
        let inverse = cand.inverse()?;
        let w = IsoWitness {
            forward: cand,
            inverse,
        };
        w.verify().then_some(w)
    };
    let exhaustive = (k as u32) < 64 && p.checked_pow(k as u32).is_some_and(|t| t <= EXHAUSTIVE_LIMIT);
    if exhaustive {
        let mut coefs = vec![0u32; k];
        loop {
            // advance mixed-radix counter; all-zero is skipped
            let mut i = 0;
            while i < k {
                coefs[i] += 1;
                if coefs[i] as u64 == p {
                    coefs[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
            if i == k {
                return Ok(Isomorphism::No);
            }
            if let Some(w) = try_candidate(combine(&coefs)) {
                return Ok(Isomorphism::Yes(Box::new(w)));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    for _ in 0..RANDOM_TRIALS {
        let coefs: Vec<u32> = (0..k).map(|_| rng.gen_range(0..f.char())).collect();
        if let Some(w) = try_candidate(combine(&coefs)) {
            return Ok(Isomorphism::Yes(Box::new(w)));
        }
    }
    Ok(Isomorphism::Undetermined)
}
