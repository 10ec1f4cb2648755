//! Dualities into modules over the opposite algebra: the Auslander
//! transpose, `(-)* = Hom(-, Λ)` and vector-space duality.

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Element};
use crate::matrix::Matrix;
use crate::quiver::Path;
use crate::rep::{hom_basis_matrix, Morphism, Representation, Side};

use super::resolution::{is_projective, Resolution};

/// `Tr M = coker(P_0* -> P_1*)` for the minimal presentation
/// `P_1 -> P_0 -> M -> 0`, as a module over the opposite algebra.
pub fn transpose(m: &Representation) -> Representation {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    let mut res = Resolution::new(m);
    let p0 = res.term(0).vertices.clone();
    let p1 = res.term(1).vertices.clone();
    let images = res.differential_generators(1);

    // P_i* = ⊕ P^op(v) over the same summand vertices.
    let target = Representation::projective_sum(&op, &p1);
    let op_images: Vec<Vec<u32>> = p0
        .iter()
        .enumerate()
        .map(|(t, &u)| {
            let mut column = Vec::new();
            for (s, &w) in p1.iter().enumerate() {
                // component of d(e_w) in the t-th summand of P_0: paths u -> w
                let offset: usize = p0[..t]
                    .iter()
                    .map(|&x| alg.paths_between(x, w).len())
                    .sum();
                let paths = alg.paths_between(u, w);
                let mut coords = vec![0u32; alg.dim()];
                for (j, &b) in paths.iter().enumerate() {
                    coords[b] = images[s][offset + j];
                }
                let x = Element::from_coords(coords);
                let xo = alg.to_opposite(&op, &x);
                // x^op lies in P^op(w) at vertex u: op-paths w -> u
                for b in op.paths_between(w, u) {
                    column.push(xo.coord(b));
                }
            }
            column
        })
        .collect();
    let d_star = Morphism::from_projective_generators(&p0, &target, &op_images);
    d_star.cokernel().0
}

/// Bases of `Hom(M, P(u))` for every vertex `u`.
fn star_bases(m: &Representation) -> Vec<Matrix> {
    let alg = m.algebra();
    (0..alg.vertex_count())
        .map(|u| {
            let pu = Representation::projective(alg, u).expect("vertex in range");
            hom_basis_matrix(m, &pu).expect("same algebra")
        })
        .collect()
}

/// `L_a: P(v) -> P(u)`, left multiplication by the arrow `a: u -> v`.
fn left_multiplication(m: &Representation, arrow: usize) -> Morphism {
    let alg = m.algebra();
    let a = alg.quiver().arrow(arrow);
    let pu = Representation::projective(alg, a.source).expect("vertex in range");
    let path = Path {
        source: a.source,
        arrows: vec![arrow],
    };
    let b = alg.basis_index(&path).expect("arrows are residue basis paths");
    let positions = alg.paths_between(a.source, a.target);
    let mut image = vec![0u32; positions.len()];
    image[positions.iter().position(|&x| x == b).expect("path u -> v")] = 1;
    Morphism::from_projective_generators(&[a.target], &pu, &[image])
}

fn unflatten_blocks(m: &Representation, n: &Representation, v: &[u32]) -> Vec<Matrix> {
    let f = m.field();
    let mut pos = 0;
    (0..m.dims().len())
        .map(|k| {
            let (rows, cols) = (n.dim_at(k), m.dim_at(k));
            let mut b = Matrix::zeros(f, rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    b.set(r, c, v[pos]);
                    pos += 1;
                }
            }
            b
        })
        .collect()
}

/// `M* = Hom(M, Λ)` as a module over the opposite algebra: the vertex `u`
/// component is `Hom(M, P(u))`, and the reversed arrow `a^op: v -> u`
/// acts by `f ↦ L_a ∘ f`.
pub fn dual_star(m: &Representation) -> Representation {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    let f = m.field();
    let bases = star_bases(m);
    let projectives: Vec<Representation> = (0..alg.vertex_count())
        .map(|u| Representation::projective(&alg, u).expect("vertex in range"))
        .collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let action = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let (u, v) = (a.source, a.target);
            let la = left_multiplication(m, i);
            let mut out = Matrix::zeros(f, dims[u], dims[v]);
            for j in 0..dims[v] {
                let blocks = unflatten_blocks(m, &projectives[v], &bases[v].column(j));
                let composed: Vec<u32> = la
                    .blocks()
                    .iter()
                    .zip(&blocks)
                    .flat_map(|(l, g)| l.mul(g).to_rows().into_iter().flatten())
                    .collect();
                let rhs = Matrix::from_columns(f, composed.len(), &[composed]);
                let x = bases[u].solve(&rhs).expect("L_a ∘ f is a morphism into P(u)");
                for r in 0..dims[u] {
                    out.set(r, j, x.get(r, 0));
                }
            }
            out
        })
        .collect();
    Representation::new(op, dims, action).expect("star dual satisfies the opposite relations")
}

/// `g*: N* -> M*`, `f ↦ f ∘ g`, for `g: M -> N`.
pub fn dual_star_morphism(g: &Morphism) -> Morphism {
    let m = g.source();
    let n = g.target();
    let alg = m.algebra().clone();
    let f = m.field();
    let m_bases = star_bases(m);
    let n_bases = star_bases(n);
    let blocks: Vec<Matrix> = (0..alg.vertex_count())
        .map(|u| {
            let pu = Representation::projective(&alg, u).expect("vertex in range");
            let mut out = Matrix::zeros(f, m_bases[u].cols(), n_bases[u].cols());
            for j in 0..n_bases[u].cols() {
                let fb = unflatten_blocks(n, &pu, &n_bases[u].column(j));
                let composed: Vec<u32> = fb
                    .iter()
                    .zip(g.blocks())
                    .flat_map(|(a, b)| a.mul(b).to_rows().into_iter().flatten())
                    .collect();
                let rhs = Matrix::from_columns(f, composed.len(), &[composed]);
                let x = m_bases[u].solve(&rhs).expect("f ∘ g lies in Hom(M, P(u))");
                for r in 0..out.rows() {
                    out.set(r, j, x.get(r, 0));
                }
            }
            out
        })
        .collect();
    Morphism::new(dual_star(n), dual_star(m), blocks).expect("dual of a morphism is a morphism")
}

/// Vector-space dual `D M`: same dimensions, transposed arrow matrices,
/// over the opposite algebra.
pub fn vs_dual(m: &Representation) -> Representation {
    let op = m.algebra().opposite();
    let action = m.actions().iter().map(Matrix::transpose).collect();
    Representation::new(op, m.dims().to_vec(), action).expect("transpose respects reversed relations")
}

/// `Λ` is self-injective iff `D(Λ_Λ)` is a projective left module.
pub fn is_self_injective(alg: &Arc<BoundQuiverAlgebra>) -> bool {
    let right = Representation::regular(alg, Side::Right);
    is_projective(&vs_dual(&right))
}
