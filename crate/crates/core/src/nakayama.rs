//! Nakayama algebras: uniserial projectives on both sides, and the
//! complete list of indecomposables `P(v)/rad^k P(v)`.

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::RepError;
use crate::rep::Representation;

/// An indecomposable module over a Nakayama algebra, with the data that
/// determines it up to isomorphism.
#[derive(Clone, Debug)]
pub struct Indecomposable {
    pub name: String,
    /// Vertex of the (simple) top.
    pub top: usize,
    /// Composition length.
    pub length: usize,
    pub module: Representation,
}

fn is_uniserial(m: &Representation) -> bool {
    m.radical_layers()
        .iter()
        .all(|layer| layer.iter().sum::<usize>() <= 1)
}

fn projectives_uniserial(alg: &Arc<BoundQuiverAlgebra>) -> bool {
    (0..alg.vertex_count()).all(|v| {
        let p = Representation::projective(alg, v).expect("vertex in range");
        is_uniserial(&p)
    })
}

/// True iff every indecomposable projective on both sides is uniserial.
pub fn is_nakayama(alg: &Arc<BoundQuiverAlgebra>) -> bool {
    projectives_uniserial(alg) && projectives_uniserial(&alg.opposite())
}

/// Every indecomposable module up to isomorphism, ordered by top vertex and
/// then by length.
pub fn enumerate_indecomposables(
    alg: &Arc<BoundQuiverAlgebra>,
) -> Result<Vec<Indecomposable>, RepError> {
    if !is_nakayama(alg) {
        return Err(RepError::NotNakayama);
    }
    let q = alg.quiver();
    let mut out = Vec::new();
    for v in 0..alg.vertex_count() {
        let p = Representation::projective(alg, v)?;
        let loewy = p.radical_layers().len();
        for k in 1..=loewy {
            let module = if k == loewy {
                p.clone()
            } else {
                p.quotient(&p.radical_power(k)).0
            };
            let vname = q.vertex_name(v);
            let name = if k == 1 && loewy == 1 {
                format!("S({vname})=P({vname})")
            } else if k == 1 {
                format!("S({vname})")
            } else if k == loewy {
                format!("P({vname})")
            } else {
                format!("P({vname})/rad^{k}")
            };
            out.push(Indecomposable {
                name,
                top: v,
                length: k,
                module,
            });
        }
    }
    Ok(out)
}
