//! Named algebra families.

use std::sync::Arc;

use gorenstein_core::{BoundQuiverAlgebra, PathElement, Quiver};

use crate::HarnessError;

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Cyclic quiver on `1..n` with `a_i: i -> i+1` (and `a_n: n -> 1`), modulo
/// every path of length two. Dimension `2n`.
pub fn cyclic_radical_square_zero(n: usize, p: u32) -> Result<Arc<BoundQuiverAlgebra>, HarnessError> {
    if n < 3 {
        return Err(HarnessError::Precondition(format!("cycle length {n} < 3")));
    }
    let arrows: Vec<(String, String, String)> = (1..=n)
        .map(|i| (format!("a{i}"), i.to_string(), (i % n + 1).to_string()))
        .collect();
    let q = Quiver::new(&numbered(n), &arrows)?;
    let relations = (0..n)
        .map(|i| PathElement::path(q.path(&[i, (i + 1) % n]).expect("consecutive arrows compose")))
        .collect();
    Ok(BoundQuiverAlgebra::build(q, relations, p)?)
}

/// Path algebra of `1 -> 2 -> ... -> n` without relations.
pub fn linear_path_algebra(n: usize, p: u32) -> Result<Arc<BoundQuiverAlgebra>, HarnessError> {
    let arrows: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
        .collect();
    let q = Quiver::new(&numbered(n), &arrows)?;
    Ok(BoundQuiverAlgebra::build(q, vec![], p)?)
}

/// `n` isolated vertices.
pub fn semisimple(n: usize, p: u32) -> Result<Arc<BoundQuiverAlgebra>, HarnessError> {
    let q = Quiver::new::<String>(&numbered(n), &[])?;
    Ok(BoundQuiverAlgebra::build(q, vec![], p)?)
}

/// Nakayama algebra with prescribed Kupisch series `lengths[i] = length of
/// P(i+1)`, on a cycle or a line, cut out by monomial relations.
///
/// The series must satisfy `lengths[i] <= lengths[i+1] + 1` (indices cyclic
/// for a cycle), `lengths[i] >= 2` except at the sink of a line, where it
/// is 1.
pub fn nakayama_from_kupisch(
    lengths: &[usize],
    cyclic: bool,
    p: u32,
) -> Result<Arc<BoundQuiverAlgebra>, HarnessError> {
    let n = lengths.len();
    if n == 0 {
        return Err(HarnessError::Precondition("empty Kupisch series".into()));
    }
    let next = |i: usize| if cyclic { Some((i + 1) % n) } else if i + 1 < n { Some(i + 1) } else { None };
    for i in 0..n {
        let ok = match next(i) {
            Some(j) => lengths[i] >= 2 && lengths[i] <= lengths[j] + 1,
            None => lengths[i] == 1,
        };
        if !ok {
            return Err(HarnessError::Precondition(format!("invalid Kupisch series {lengths:?}")));
        }
    }
    let arrow_count = if cyclic { n } else { n - 1 };
    let arrows: Vec<(String, String, String)> = (0..arrow_count)
        .map(|i| {
            let j = next(i).expect("arrow exists");
            (format!("a{}", i + 1), (i + 1).to_string(), (j + 1).to_string())
        })
        .collect();
    let q = Quiver::new(&numbered(n), &arrows)?;
    let mut relations = Vec::new();
    for i in 0..n {
        let Some(j) = next(i) else { continue };
        if lengths[i] <= lengths[j] {
            // arrows along the line/cycle starting at i
            let seq: Vec<usize> = (0..lengths[i]).map(|k| (i + k) % n).collect();
            let path = q
                .path(&seq)
                .ok_or_else(|| HarnessError::Precondition(format!("no path of length {} from {}", lengths[i], i + 1)))?;
            relations.push(PathElement::path(path));
        }
    }
    Ok(BoundQuiverAlgebra::build(q, relations, p)?)
}
