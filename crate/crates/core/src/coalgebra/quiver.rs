//! Finite quivers and their truncated path coalgebras.
//!
//! Paths compose left to right: `p = x1.x2` means `x1` followed by `x2`. For an
//! arrow `x: a -> b`, `Delta(x) = a (x) x + x (x) b`.

use std::collections::BTreeSet;

use super::Coalgebra;
use crate::error::{Error, Result};
use crate::exactlin::Field;

/// Default upper bound on the basis size produced by [`path_coalgebra`].
pub const PATH_BASIS_CAP: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(String, usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, usize, usize)>) -> Result<Quiver> {
        let mut names = BTreeSet::new();
        for v in &vertices {
            if !names.insert(v.as_str()) {
                return Err(Error::invalid(format!("duplicate vertex {v:?}")));
            }
        }
        let mut arrow_names = BTreeSet::new();
        for (a, s, t) in &arrows {
            if *s >= vertices.len() || *t >= vertices.len() {
                return Err(Error::invalid(format!("arrow {a:?} has an undeclared endpoint")));
            }
            if !arrow_names.insert(a.as_str()) || names.contains(a.as_str()) {
                return Err(Error::invalid(format!("duplicate arrow label {a:?}")));
            }
            if a.contains('.') {
                return Err(Error::invalid(format!("arrow label {a:?} contains '.'")));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from labels; arrows are `(label, source, target)`.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let find = |l: &str| {
            vs.iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::invalid(format!("unknown vertex {l:?}")))
        };
        let arrows = arrows
            .iter()
            .map(|(a, s, t)| Ok((a.to_string(), find(s)?, find(t)?)))
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vs, arrows)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(String, usize, usize)] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// Number of arrows from `s` to `t`.
    pub fn arrow_count(&self, s: usize, t: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == s && a.2 == t).count()
    }

    /// Arrows from `s` to `t` in declaration order.
    pub fn arrows_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&i| self.arrows[i].1 == s && self.arrows[i].2 == t)
            .collect()
    }

    /// Same vertex set and the same number of arrows between each ordered
    /// pair, ignoring arrow labels.
    pub fn same_shape(&self, other: &Quiver) -> bool {
        let n = self.vertices.len();
        self.vertices == other.vertices
            && (0..n).all(|s| (0..n).all(|t| self.arrow_count(s, t) == other.arrow_count(s, t)))
    }

    /// `a -> b` with arrow `x`.
    pub fn single_arrow() -> Quiver {
        Quiver::from_labels(&["a", "b"], &[("x", "a", "b")]).unwrap()
    }

    /// `m` parallel arrows `a -> b`.
    pub fn kronecker(m: usize) -> Quiver {
        let names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
        let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (n.as_str(), "a", "b")).collect();
        Quiver::from_labels(&["a", "b"], &arrows).unwrap()
    }

    /// One vertex `g` with `k` loops (`l` for a single loop, else `l1..lk`).
    pub fn loops(k: usize) -> Quiver {
        let names: Vec<String> = if k == 1 {
            vec!["l".into()]
        } else {
            (1..=k).map(|i| format!("l{i}")).collect()
        };
        let arrows: Vec<(&str, &str, &str)> = names.iter().map(|n| (n.as_str(), "g", "g")).collect();
        Quiver::from_labels(&["g"], &arrows).unwrap()
    }

    /// Linear quiver `v1 -> v2 -> ... -> vn`.
    pub fn line(n: usize) -> Quiver {
        let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let arrows = (1..n).map(|i| (format!("x{i}"), i - 1, i)).collect();
        Quiver::new(vs, arrows).unwrap()
    }

    /// `a -> b -> a` with arrows `x` and `y`.
    pub fn two_cycle() -> Quiver {
        Quiver::from_labels(&["a", "b"], &[("x", "a", "b"), ("y", "b", "a")]).unwrap()
    }

    /// One vertex, no arrows.
    pub fn point() -> Quiver {
        Quiver::from_labels(&["g"], &[]).unwrap()
    }
}

/// Path coalgebra truncated at paths of length `max_len`, with the default
/// basis cap.
pub fn path_coalgebra(field: Field, q: &Quiver, max_len: usize) -> Result<Coalgebra> {
    path_coalgebra_capped(field, q, max_len, PATH_BASIS_CAP)
}

/// Basis: vertices, then paths by length and lexicographic arrow order.
/// Path labels join arrow labels with `.`.
pub fn path_coalgebra_capped(
    field: Field,
    q: &Quiver,
    max_len: usize,
    cap: usize,
) -> Result<Coalgebra> {
    // Each path: (arrow sequence, source, target).
    let mut paths: Vec<(Vec<usize>, usize, usize)> =
        (0..q.vertices.len()).map(|v| (vec![], v, v)).collect();
    let mut frontier: Vec<(Vec<usize>, usize, usize)> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (vec![i], a.1, a.2))
        .collect();
    let mut len = 1;
    while len <= max_len && !frontier.is_empty() {
        if paths.len() + frontier.len() > cap {
            return Err(Error::budget(
                "path coalgebra basis",
                (paths.len() + frontier.len()) as u128,
                cap as u128,
            ));
        }
        paths.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for (seq, s, t) in &frontier {
            for (i, a) in q.arrows.iter().enumerate() {
                if a.1 == *t {
                    let mut seq2 = seq.clone();
                    seq2.push(i);
                    next.push((seq2, *s, a.2));
                }
            }
        }
        frontier = next;
        len += 1;
    }
    let label = |p: &(Vec<usize>, usize, usize)| {
        if p.0.is_empty() {
            q.vertices[p.1].clone()
        } else {
            p.0.iter().map(|&a| q.arrows[a].0.as_str()).collect::<Vec<_>>().join(".")
        }
    };
    let index: std::collections::HashMap<Vec<usize>, usize> = paths
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.0.is_empty())
        .map(|(i, p)| (p.0.clone(), i))
        .collect();
    let lookup = |seq: &[usize], vertex: usize| -> usize {
        if seq.is_empty() {
            vertex
        } else {
            index[seq]
        }
    };
    let delta = paths
        .iter()
        .map(|(seq, s, t)| {
            (0..=seq.len())
                .map(|cut| {
                    let mid = if cut == 0 {
                        *s
                    } else {
                        q.arrows[seq[cut - 1]].2
                    };
                    let left = lookup(&seq[..cut], *s);
                    let right = lookup(&seq[cut..], if cut == seq.len() { *t } else { mid });
                    (left, right, field.one())
                })
                .collect()
        })
        .collect();
    let counit = paths
        .iter()
        .map(|p| if p.0.is_empty() { field.one() } else { field.zero() })
        .collect();
    Coalgebra::new(field, paths.iter().map(label).collect(), delta, counit)
}
