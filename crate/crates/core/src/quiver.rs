//! Quivers, paths and formal path combinations.
//!
//! Paths compose left to right: the path `ab` means "first `a`, then `b`"
//! and is defined when the target of `a` is the source of `b`.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::AlgebraError;
use crate::field::Fp;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are given as `(label, source name, target name)`.
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        arrows: &[(S, S, S)],
    ) -> Result<Self, AlgebraError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(AlgebraError::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut quiver = Quiver {
            vertices,
            arrows: Vec::with_capacity(arrows.len()),
        };
        let mut labels = HashSet::new();
        for (label, s, t) in arrows {
            let label = label.as_ref();
            if !labels.insert(label.to_string()) {
                return Err(AlgebraError::InvalidQuiver(format!("duplicate arrow `{label}`")));
            }
            let source = quiver.vertex_index(s.as_ref())?;
            let target = quiver.vertex_index(t.as_ref())?;
            quiver.arrows.push(Arrow {
                label: label.to_string(),
                source,
                target,
            });
        }
        Ok(quiver)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Same vertices and labels, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Builds a path from a sequence of arrow indices; `None` if the arrows
    /// do not compose.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        let mut at = self.arrows[first].target;
        for &a in &arrows[1..] {
            if self.arrows[a].source != at {
                return None;
            }
            at = self.arrows[a].target;
        }
        Some(Path {
            source: self.arrows[first].source,
            arrows: arrows.to_vec(),
        })
    }

    pub fn path_target(&self, path: &Path) -> usize {
        path.arrows
            .last()
            .map_or(path.source, |&a| self.arrows[a].target)
    }

    pub fn path_label(&self, path: &Path) -> String {
        if path.arrows.is_empty() {
            format!("e{}", self.vertices[path.source])
        } else {
            path.arrows
                .iter()
                .map(|&a| self.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A path in a quiver: a source vertex and a composable arrow sequence.
/// The empty sequence is the idempotent at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            source: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn reversed(&self, quiver: &Quiver) -> Path {
        Path {
            source: quiver.path_target(self),
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    /// True if `needle` occurs as a contiguous subpath.
    pub fn contains(&self, needle: &Path) -> bool {
        if needle.arrows.is_empty() {
            return false;
        }
        self.arrows
            .windows(needle.arrows.len())
            .any(|w| w == needle.arrows.as_slice())
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Length first, then arrow sequence (in declaration order); trivial paths
/// by vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

/// A formal linear combination of paths over F_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PathElement {
    terms: Vec<(u32, Path)>,
}

impl PathElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn path(path: Path) -> Self {
        PathElement {
            terms: vec![(1, path)],
        }
    }

    /// Collects integer-coefficient terms, reducing mod p and merging
    /// repeated paths. Terms are kept sorted by path order.
    pub fn from_terms(field: Fp, terms: impl IntoIterator<Item = (i64, Path)>) -> Self {
        let mut collected: Vec<(u32, Path)> = Vec::new();
        for (c, path) in terms {
            let c = field.from_i64(c);
            match collected.iter_mut().find(|(_, q)| *q == path) {
                Some(slot) => slot.0 = field.add(slot.0, c),
                None => collected.push((c, path)),
            }
        }
        collected.retain(|(c, _)| *c != 0);
        collected.sort_by(|a, b| a.1.cmp(&b.1));
        PathElement { terms: collected }
    }

    pub fn terms(&self) -> &[(u32, Path)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn reversed(&self, quiver: &Quiver) -> PathElement {
        let mut terms: Vec<(u32, Path)> = self
            .terms
            .iter()
            .map(|(c, p)| (*c, p.reversed(quiver)))
            .collect();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        PathElement { terms }
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(c, p)| {
                if *c == 1 {
                    quiver.path_label(p)
                } else {
                    format!("{c}*{}", quiver.path_label(p))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Quiver {
        Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let q = a3();
        assert!(q.path(&[0, 1]).is_some());
        assert!(q.path(&[1, 0]).is_none());
        let ab = q.path(&[0, 1]).unwrap();
        assert_eq!(q.path_target(&ab), 2);
        assert_eq!(q.path_label(&ab), "a*b");
    }

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "2")]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "1"), ("a", "1", "1")]).is_err());
    }

    #[test]
    fn reversal_in_opposite() {
        let q = a3();
        let op = q.opposite();
        let ab = q.path(&[0, 1]).unwrap();
        let ba = ab.reversed(&q);
        assert_eq!(ba.source, 2);
        assert_eq!(op.path(&ba.arrows), Some(ba.clone()));
    }

    #[test]
    fn merging_terms() {
        let q = a3();
        let f = Fp::new(3).unwrap();
        let ab = q.path(&[0, 1]).unwrap();
        let e = PathElement::from_terms(f, [(1, ab.clone()), (2, ab.clone())]);
        assert!(e.is_zero());
        let e = PathElement::from_terms(f, [(-1, ab.clone())]);
        assert_eq!(e.terms(), &[(2, ab)]);
    }
}
