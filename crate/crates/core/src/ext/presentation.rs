//! Symbolic quiver presentations allowing infinitely many arrows or
//! vertices, for the local-finiteness and f-finiteness predicates.

use std::collections::BTreeMap;

use crate::coalgebra::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }

    fn is_zero(self) -> bool {
        self == Count::Finite(0)
    }

    fn add(self, other: Count) -> Count {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a.saturating_add(b)),
            _ => Count::Infinite,
        }
    }

    fn mul(self, other: Count) -> Count {
        if self.is_zero() || other.is_zero() {
            return Count::Finite(0);
        }
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a.saturating_mul(b)),
            _ => Count::Infinite,
        }
    }
}

/// A family of `size` vertices with identical arrow data: each member has
/// `per_member` arrows to (`outgoing`) or from (`incoming`) a named vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFamily {
    pub name: String,
    pub size: Count,
    pub outgoing: Vec<(String, Count)>,
    pub incoming: Vec<(String, Count)>,
}

/// Named vertices with per-pair arrow counts, plus vertex families.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub pairs: Vec<(String, String, Count)>,
    pub families: Vec<VertexFamily>,
}

impl QuiverPresentation {
    pub fn from_quiver(q: &Quiver) -> QuiverPresentation {
        let n = q.vertices().len();
        let mut pairs = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let k = q.arrow_count(s, t);
                if k > 0 {
                    pairs.push((q.vertices()[s].clone(), q.vertices()[t].clone(), Count::Finite(k as u64)));
                }
            }
        }
        QuiverPresentation {
            vertices: q.vertices().to_vec(),
            pairs,
            families: vec![],
        }
    }

    /// Two vertices with infinitely many arrows `a -> b`.
    pub fn infinite_kronecker() -> QuiverPresentation {
        QuiverPresentation {
            vertices: vec!["a".into(), "b".into()],
            pairs: vec![("a".into(), "b".into(), Count::Infinite)],
            families: vec![],
        }
    }

    /// One vertex with infinitely many loops.
    pub fn infinite_loops() -> QuiverPresentation {
        QuiverPresentation {
            vertices: vec!["g".into()],
            pairs: vec![("g".into(), "g".into(), Count::Infinite)],
            families: vec![],
        }
    }

    /// A hub with infinitely many spokes, each sending one arrow to the hub.
    pub fn infinite_star() -> QuiverPresentation {
        QuiverPresentation {
            vertices: vec!["hub".into()],
            pairs: vec![],
            families: vec![VertexFamily {
                name: "spoke".into(),
                size: Count::Infinite,
                outgoing: vec![("hub".into(), Count::Finite(1))],
                incoming: vec![],
            }],
        }
    }

    /// Finitely many arrows between any two vertices.
    pub fn is_locally_finite(&self) -> bool {
        self.pairs.iter().all(|p| p.2.is_finite())
            && self
                .families
                .iter()
                .all(|f| f.outgoing.iter().chain(&f.incoming).all(|(_, c)| c.is_finite()))
    }

    /// Every vertex has finite in-degree.
    pub fn is_f_finite(&self) -> bool {
        let mut indeg: BTreeMap<&str, Count> =
            self.vertices.iter().map(|v| (v.as_str(), Count::Finite(0))).collect();
        for (_, t, c) in &self.pairs {
            let e = indeg.entry(t.as_str()).or_insert(Count::Finite(0));
            *e = e.add(*c);
        }
        for fam in &self.families {
            for (t, c) in &fam.outgoing {
                let e = indeg.entry(t.as_str()).or_insert(Count::Finite(0));
                *e = e.add(fam.size.mul(*c));
            }
            let member = fam
                .incoming
                .iter()
                .fold(Count::Finite(0), |acc, (_, c)| acc.add(*c));
            if !member.is_finite() {
                return false;
            }
        }
        indeg.values().all(|c| c.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finiteness_examples() {
        let q = QuiverPresentation::from_quiver(&Quiver::kronecker(3));
        assert!(q.is_locally_finite() && q.is_f_finite());
        let k = QuiverPresentation::infinite_kronecker();
        assert!(!k.is_locally_finite());
        assert!(!k.is_f_finite());
        let s = QuiverPresentation::infinite_star();
        assert!(s.is_locally_finite());
        assert!(!s.is_f_finite());
        assert!(!QuiverPresentation::infinite_loops().is_locally_finite());
    }
}
