#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use gorenstein_core::nakayama::enumerate_indecomposables;
use gorenstein_core::{BoundQuiverAlgebra, Path, PathElement, Quiver, Representation};

/// Cyclic quiver `1 -> 2 -> ... -> n -> 1` with every length-two path killed.
pub fn cyclic(n: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..=n)
        .map(|i| (format!("a{i}"), i.to_string(), (i % n + 1).to_string()))
        .collect();
    let q = Quiver::new(&vertices, &arrows).unwrap();
    let relations = (0..n)
        .map(|i| PathElement::path(q.path(&[i, (i + 1) % n]).unwrap()))
        .collect();
    BoundQuiverAlgebra::build(q, relations, p).unwrap()
}

pub fn a2(p: u32) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
    BoundQuiverAlgebra::build(q, vec![], p).unwrap()
}

pub fn linear(n: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("b{i}"), i.to_string(), (i + 1).to_string()))
        .collect();
    let q = Quiver::new(&vertices, &arrows).unwrap();
    BoundQuiverAlgebra::build(q, vec![], p).unwrap()
}

pub fn semisimple(n: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let q = Quiver::new::<String>(&vertices, &[]).unwrap();
    BoundQuiverAlgebra::build(q, vec![], p).unwrap()
}

/// Truncated polynomial ring `k[x]/(x^m)`.
pub fn truncated(m: usize, p: u32) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
    let r = PathElement::path(q.path(&vec![0; m]).unwrap());
    BoundQuiverAlgebra::build(q, vec![r], p).unwrap()
}

/// Commutative square `a*b = c*d`.
pub fn square(p: u32) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
    )
    .unwrap();
    let f = gorenstein_core::Fp::new(p).unwrap();
    let r = PathElement::from_terms(
        f,
        [(1, q.path(&[0, 1]).unwrap()), (-1, q.path(&[2, 3]).unwrap())],
    );
    BoundQuiverAlgebra::build(q, vec![r], p).unwrap()
}

pub fn path(alg: &BoundQuiverAlgebra, arrows: &[usize]) -> Path {
    alg.quiver().path(arrows).unwrap()
}

pub fn indecomposables(alg: &Arc<BoundQuiverAlgebra>) -> Vec<Representation> {
    enumerate_indecomposables(alg)
        .unwrap()
        .into_iter()
        .map(|i| i.module)
        .collect()
}

pub struct Corpus {
    pub name: &'static str,
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub modules: Vec<Representation>,
}

/// Indecomposables of Λ(4), Λ(5) and A2, plus a few direct sums.
pub fn corpus() -> &'static [Corpus] {
    static CORPUS: OnceLock<Vec<Corpus>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        [("L4", cyclic(4, 2)), ("L5", cyclic(5, 2)), ("A2", a2(2)), ("A3", linear(3, 3))]
            .into_iter()
            .map(|(name, algebra)| {
                let mut modules = indecomposables(&algebra);
                let k = modules.len();
                for i in 0..k.min(3) {
                    let s = modules[i].direct_sum(&modules[k - 1 - i]).unwrap();
                    modules.push(s);
                }
                Corpus { name, algebra, modules }
            })
            .collect()
    })
}
