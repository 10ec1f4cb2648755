//! Finite-dimensional bound quiver algebras `kQ/I` over a prime field.
//!
//! The residue basis is computed one path length at a time. Layer `L`
//! candidates are `b·a` for surviving basis paths `b` of length `L-1` and
//! arrows `a`; every path of length `L` reduces to a combination of these.
//! Modulo the right multiples already accounted for, the ideal in degree
//! `L` is spanned by `b·r` for basis paths `b` and relations `r`. Row
//! reduction (pivoting on the largest candidate) leaves the smallest
//! candidates as the new basis. Construction stops at the first empty
//! layer.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::AlgebraError;
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::quiver::{Path, PathElement, Quiver};

/// Sparse coordinates: `(basis index, coefficient)` with nonzero coefficients.
pub type Sparse = Vec<(usize, u32)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Give up (as non-admissible) if no zero layer appears below this length.
    pub length_cap: usize,
    /// Give up if the residue basis grows beyond this size.
    pub max_dim: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            length_cap: 64,
            max_dim: 4096,
        }
    }
}

/// An element of the algebra in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<u32>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![0; dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = 1;
        e
    }

    pub fn from_coords(coords: Vec<u32>) -> Self {
        Element { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> u32 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
    }

    pub fn add(&self, other: &Element, field: Fp) -> Element {
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32, field: Fp) -> Element {
        Element {
            coords: self.coords.iter().map(|&a| field.mul(a, s)).collect(),
        }
    }
}

#[derive(Debug)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    field: Fp,
    relations: Vec<PathElement>,
    options: BuildOptions,
    basis: Vec<Path>,
    /// `arrow_action[b][a]` = normal form of `basis[b] · a`.
    arrow_action: Vec<Vec<Sparse>>,
    /// `mul_table[i][j]` = normal form of `basis[i] · basis[j]`.
    mul_table: Vec<Vec<Sparse>>,
    paths_from: Vec<Vec<usize>>,
    paths_to: Vec<Vec<usize>>,
    /// `(prefix basis index, last arrow)` for nontrivial basis paths.
    prefix: Vec<Option<(usize, usize)>>,
    lookup: HashMap<Path, usize>,
    loewy_length: usize,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for BoundQuiverAlgebra {}

impl BoundQuiverAlgebra {
    pub fn build(
        quiver: Quiver,
        relations: Vec<PathElement>,
        p: u32,
    ) -> Result<Arc<Self>, AlgebraError> {
        Self::build_with(quiver, relations, p, BuildOptions::default())
    }

    pub fn build_with(
        quiver: Quiver,
        relations: Vec<PathElement>,
        p: u32,
        options: BuildOptions,
    ) -> Result<Arc<Self>, AlgebraError> {
        let field = Fp::new(p)?;
        let relations: Vec<PathElement> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        let degrees = check_relations(&quiver, &relations)?;
        let layered = compute_basis(&quiver, field, &relations, &degrees, options)?;

        let n = quiver.vertex_count();
        let mut paths_from = vec![Vec::new(); n];
        let mut paths_to = vec![Vec::new(); n];
        for (i, path) in layered.basis.iter().enumerate() {
            paths_from[path.source].push(i);
            paths_to[quiver.path_target(path)].push(i);
        }
        let lookup: HashMap<Path, usize> = layered
            .basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let prefix = layered
            .basis
            .iter()
            .map(|p| {
                let (&last, rest) = p.arrows.split_last()?;
                let pre = if rest.is_empty() {
                    Path::trivial(p.source)
                } else {
                    Path {
                        source: p.source,
                        arrows: rest.to_vec(),
                    }
                };
                Some((lookup[&pre], last))
            })
            .collect();
        let mut alg = BoundQuiverAlgebra {
            quiver,
            field,
            relations,
            options,
            basis: layered.basis,
            arrow_action: layered.arrow_action,
            mul_table: Vec::new(),
            paths_from,
            paths_to,
            prefix,
            lookup,
            loewy_length: layered.layers,
            opposite: OnceLock::new(),
        };
        alg.mul_table = alg.compute_mul_table();
        Ok(Arc::new(alg))
    }

    fn compute_mul_table(&self) -> Vec<Vec<Sparse>> {
        let dim = self.dim();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for (i, row) in table.iter_mut().enumerate() {
            let t = self.target(i);
            for &j in &self.paths_from[t] {
                let mut v: Sparse = vec![(i, 1)];
                for &a in &self.basis[j].arrows {
                    v = self.apply_arrow(&v, a);
                    if v.is_empty() {
                        break;
                    }
                }
                row[j] = v;
            }
        }
        table
    }

    fn apply_arrow(&self, v: &Sparse, arrow: usize) -> Sparse {
        let mut acc: HashMap<usize, u32> = HashMap::new();
        for &(b, c) in v {
            for &(k, d) in &self.arrow_action[b][arrow] {
                let slot = acc.entry(k).or_insert(0);
                *slot = self.field.mul_add(*slot, c, d);
            }
        }
        let mut out: Sparse = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort_unstable();
        out
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.char()
    }

    pub fn relations(&self) -> &[PathElement] {
        &self.relations
    }

    pub fn options(&self) -> BuildOptions {
        self.options
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Number of nonzero radical layers, i.e. the smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn source(&self, b: usize) -> usize {
        self.basis[b].source
    }

    pub fn target(&self, b: usize) -> usize {
        self.quiver.path_target(&self.basis[b])
    }

    /// Basis indices of residue paths starting at `v`, in basis order.
    pub fn paths_from(&self, v: usize) -> &[usize] {
        &self.paths_from[v]
    }

    /// Basis indices of residue paths ending at `v`, in basis order.
    pub fn paths_to(&self, v: usize) -> &[usize] {
        &self.paths_to[v]
    }

    pub fn paths_between(&self, from: usize, to: usize) -> Vec<usize> {
        self.paths_from[from]
            .iter()
            .copied()
            .filter(|&b| self.target(b) == to)
            .collect()
    }

    pub fn basis_index(&self, path: &Path) -> Option<usize> {
        self.lookup.get(path).copied()
    }

    /// For a nontrivial basis path `b·a`, the basis index of `b` and the arrow `a`.
    /// Every residue basis path has a residue basis prefix.
    pub fn prefix(&self, b: usize) -> Option<(usize, usize)> {
        self.prefix[b]
    }

    /// Index of the idempotent `e_v` (always the `v`-th basis element).
    pub fn idempotent_index(&self, v: usize) -> usize {
        debug_assert!(self.basis[v].is_trivial() && self.basis[v].source == v);
        v
    }

    pub fn idempotent(&self, v: usize) -> Element {
        Element::basis(self.dim(), self.idempotent_index(v))
    }

    /// Normal form of `basis[b] · arrow`.
    pub fn arrow_action(&self, b: usize, arrow: usize) -> &[(usize, u32)] {
        &self.arrow_action[b][arrow]
    }

    /// Normal form of `basis[i] · basis[j]`.
    pub fn multiply_basis(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.mul_table[i][j]
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = f.mul(a, b);
                for &(k, c) in &self.mul_table[i][j] {
                    out[k] = f.mul_add(out[k], ab, c);
                }
            }
        }
        Element::from_coords(out)
    }

    pub fn reduce_path(&self, path: &Path) -> Element {
        let mut v: Sparse = vec![(path.source, 1)];
        for &a in &path.arrows {
            v = self.apply_arrow(&v, a);
        }
        let mut e = Element::zero(self.dim());
        for (k, c) in v {
            e.coords[k] = c;
        }
        e
    }

    pub fn reduce(&self, x: &PathElement) -> Element {
        let mut acc = Element::zero(self.dim());
        for (c, p) in x.terms() {
            acc = acc.add(&self.reduce_path(p).scale(*c, self.field), self.field);
        }
        acc
    }

    /// True if both handles denote the same algebra.
    pub fn same_as(&self, other: &BoundQuiverAlgebra) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    /// The opposite algebra: reversed arrows (same labels and indices) and
    /// reversed relations. Built once and cached.
    pub fn opposite(&self) -> Arc<BoundQuiverAlgebra> {
        self.opposite
            .get_or_init(|| {
                let quiver = self.quiver.opposite();
                let relations = self
                    .relations
                    .iter()
                    .map(|r| r.reversed(&self.quiver))
                    .collect();
                BoundQuiverAlgebra::build_with(quiver, relations, self.field.char(), self.options)
                    .expect("opposite of an admissible algebra is admissible")
            })
            .clone()
    }

    /// Image of `x` under the anti-isomorphism to `op` (which must be the
    /// opposite of `self`): every basis path is reversed.
    pub fn to_opposite(&self, op: &BoundQuiverAlgebra, x: &Element) -> Element {
        let mut acc = Element::zero(op.dim());
        for (i, c) in x.support() {
            let r = op.reduce_path(&self.basis[i].reversed(&self.quiver));
            acc = acc.add(&r.scale(c, self.field), self.field);
        }
        acc
    }

    /// Structure constants as a dense `dim x dim^2` matrix (column `i*dim+j`
    /// holds `basis[i]·basis[j]`).
    pub fn structure_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(self.field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in &self.mul_table[i][j] {
                    m.set(k, i * d + j, c);
                }
            }
        }
        m
    }

    pub fn describe_basis(&self) -> Vec<String> {
        self.basis.iter().map(|p| self.quiver.path_label(p)).collect()
    }
}

/// Checks that every relation is a combination of parallel paths of one
/// common length at least 2; returns those lengths.
fn check_relations(quiver: &Quiver, relations: &[PathElement]) -> Result<Vec<usize>, AlgebraError> {
    let mut degrees = Vec::with_capacity(relations.len());
    for (i, r) in relations.iter().enumerate() {
        let (_, first) = &r.terms()[0];
        let (s, t, d) = (first.source, quiver.path_target(first), first.len());
        for (_, p) in r.terms() {
            if p.len() < 2 {
                return Err(AlgebraError::NotAdmissible(format!(
                    "relation {} contains the path `{}` of length < 2",
                    i + 1,
                    quiver.path_label(p)
                )));
            }
            if p.source != s || quiver.path_target(p) != t {
                return Err(AlgebraError::NotAdmissible(format!(
                    "relation {} mixes paths with different endpoints",
                    i + 1
                )));
            }
            if p.len() != d {
                return Err(AlgebraError::NotAdmissible(format!(
                    "relation {} is not homogeneous in path length",
                    i + 1
                )));
            }
        }
        degrees.push(d);
    }
    Ok(degrees)
}

struct Layered {
    basis: Vec<Path>,
    arrow_action: Vec<Vec<Sparse>>,
    layers: usize,
}

fn compute_basis(
    quiver: &Quiver,
    field: Fp,
    relations: &[PathElement],
    degrees: &[usize],
    options: BuildOptions,
) -> Result<Layered, AlgebraError> {
    let n = quiver.vertex_count();
    let arrows = quiver.arrow_count();
    let mut basis: Vec<Path> = (0..n).map(Path::trivial).collect();
    let mut arrow_action: Vec<Vec<Sparse>> = vec![vec![Vec::new(); arrows]; n];
    let mut layers: Vec<Vec<usize>> = vec![(0..n).collect()];

    let walk = |arrow_action: &Vec<Vec<Sparse>>, start: usize, path: &[usize]| -> Sparse {
        let mut v: Sparse = vec![(start, 1)];
        for &a in path {
            let mut acc: HashMap<usize, u32> = HashMap::new();
            for &(b, c) in &v {
                for &(k, d) in &arrow_action[b][a] {
                    let slot = acc.entry(k).or_insert(0);
                    *slot = field.mul_add(*slot, c, d);
                }
            }
            v = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        }
        v
    };

    for len in 1.. {
        let prev = &layers[len - 1];
        let mut candidates: Vec<(usize, usize, Path)> = Vec::new();
        for &b in prev {
            let t = quiver.path_target(&basis[b]);
            for (a, arrow) in quiver.arrows().iter().enumerate() {
                if arrow.source == t {
                    let mut path = basis[b].clone();
                    path.arrows.push(a);
                    candidates.push((b, a, path));
                }
            }
        }
        if candidates.is_empty() {
            return Ok(Layered {
                basis,
                arrow_action,
                layers: len,
            });
        }
        if len >= options.length_cap {
            return Err(AlgebraError::NotAdmissible(format!(
                "paths of length {} survive; no zero layer below the cap {}",
                len, options.length_cap
            )));
        }
        candidates.sort_by(|x, y| x.2.cmp(&y.2));
        let index: HashMap<(usize, usize), usize> = candidates
            .iter()
            .enumerate()
            .map(|(i, (b, a, _))| ((*b, *a), i))
            .collect();
        let m = candidates.len();

        // Generators b·r of the degree-`len` part of the ideal, with columns
        // in reversed candidate order so that pivots land on large paths.
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (r, &d) in relations.iter().zip(degrees) {
            if d > len {
                continue;
            }
            let src = r.terms()[0].1.source;
            for &b in &layers[len - d] {
                if quiver.path_target(&basis[b]) != src {
                    continue;
                }
                let mut row = vec![0u32; m];
                for (c, path) in r.terms() {
                    let (last, prefix) = path.arrows.split_last().expect("relation of length >= 2");
                    for (bb, coef) in walk(&arrow_action, b, prefix) {
                        let col = m - 1 - index[&(bb, *last)];
                        row[col] = field.mul_add(row[col], *c, coef);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        let ech = if rows.is_empty() {
            None
        } else {
            Some(Matrix::from_rows(field, rows.len(), m, &rows).rref())
        };
        let mut is_pivot = vec![None; m];
        if let Some(ech) = &ech {
            for (r, &pc) in ech.pivots.iter().enumerate() {
                is_pivot[m - 1 - pc] = Some(r);
            }
        }
        let mut global = vec![usize::MAX; m];
        let mut survivors = Vec::new();
        for (i, cand) in candidates.iter().enumerate() {
            if is_pivot[i].is_none() {
                global[i] = basis.len();
                survivors.push(basis.len());
                basis.push(cand.2.clone());
                arrow_action.push(vec![Vec::new(); arrows]);
            }
        }
        if basis.len() > options.max_dim {
            return Err(AlgebraError::NotAdmissible(format!(
                "residue basis exceeds {} elements at path length {}",
                options.max_dim, len
            )));
        }
        for (i, (b, a, _)) in candidates.iter().enumerate() {
            let nf: Sparse = match (is_pivot[i], &ech) {
                (None, _) => vec![(global[i], 1)],
                (Some(r), Some(ech)) => {
                    let mut v: Sparse = Vec::new();
                    for j in 0..m {
                        if is_pivot[j].is_none() {
                            let x = ech.reduced.get(r, m - 1 - j);
                            if x != 0 {
                                v.push((global[j], field.neg(x)));
                            }
                        }
                    }
                    v.sort_unstable();
                    v
                }
                (Some(_), None) => unreachable!(),
            };
            arrow_action[*b][*a] = nf;
        }
        if survivors.is_empty() {
            return Ok(Layered {
                basis,
                arrow_action,
                layers: len,
            });
        }
        layers.push(survivors);
    }
    unreachable!()
}
