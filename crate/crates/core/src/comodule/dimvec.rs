//! Dimension vectors: finitely supported maps from grouplike labels to counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Zero entries are never stored, so equality is support-exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimensionVector {
    entries: BTreeMap<String, usize>,
}

impl DimensionVector {
    pub fn from_pairs<S: AsRef<str>>(pairs: &[(S, usize)]) -> DimensionVector {
        let mut d = DimensionVector::default();
        for (l, c) in pairs {
            d.add(l.as_ref(), *c);
        }
        d
    }

    pub fn unit(label: &str) -> DimensionVector {
        DimensionVector::from_pairs(&[(label, 1)])
    }

    pub fn add(&mut self, label: &str, count: usize) {
        if count > 0 {
            *self.entries.entry(label.to_string()).or_insert(0) += count;
        }
    }

    pub fn get(&self, label: &str) -> usize {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn entries(&self) -> &BTreeMap<String, usize> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `d <= e` componentwise.
    pub fn le(&self, other: &DimensionVector) -> bool {
        self.entries.iter().all(|(l, c)| *c <= other.get(l))
    }

    pub fn plus(&self, other: &DimensionVector) -> DimensionVector {
        let mut d = self.clone();
        for (l, c) in &other.entries {
            d.add(l, *c);
        }
        d
    }

    /// `self - other`, if `other <= self`.
    pub fn minus(&self, other: &DimensionVector) -> Option<DimensionVector> {
        if !other.le(self) {
            return None;
        }
        let mut d = DimensionVector::default();
        for (l, c) in &self.entries {
            d.add(l, c - other.get(l));
        }
        Some(d)
    }

    /// All vectors `e` with `0 <= e <= self`, in lexicographic order of the
    /// count tuple (labels sorted).
    pub fn downset(&self) -> Vec<DimensionVector> {
        let labels: Vec<(&String, &usize)> = self.entries.iter().collect();
        let mut out = vec![DimensionVector::default()];
        for (l, c) in labels {
            let mut next = Vec::new();
            for d in &out {
                for k in 0..=*c {
                    let mut e = d.clone();
                    e.add(l, k);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    /// Every nonzero vector on `labels` with total at most `max_total`,
    /// ordered by total and then lexicographically.
    pub fn all_up_to<S: AsRef<str>>(labels: &[S], max_total: usize) -> Vec<DimensionVector> {
        let mut out: Vec<DimensionVector> = vec![DimensionVector::default()];
        let mut frontier = out.clone();
        for _ in 0..max_total {
            let mut next: Vec<DimensionVector> = Vec::new();
            for d in &frontier {
                for l in labels {
                    let mut e = d.clone();
                    e.add(l.as_ref(), 1);
                    next.push(e);
                }
            }
            next.sort();
            next.dedup();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.retain(|d| !d.is_zero());
        out
    }

    /// Pairs `(e, f)` with `e + f = self`, both nonzero, with `e` in
    /// lexicographic order.
    pub fn splittings(&self) -> Vec<(DimensionVector, DimensionVector)> {
        self.downset()
            .into_iter()
            .filter(|e| !e.is_zero() && e != self)
            .map(|e| {
                let f = self.minus(&e).unwrap();
                (e, f)
            })
            .collect()
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(l, c)| format!("{l}:{c}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DimensionVector {
    type Err = Error;

    /// Parses `a:1,b:2` (the empty string is the zero vector).
    fn from_str(s: &str) -> Result<DimensionVector> {
        let mut d = DimensionVector::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (l, c) = part
                .split_once(':')
                .ok_or_else(|| Error::invalid(format!("malformed dimension vector entry {part:?}")))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("malformed count in {part:?}")))?;
            d.add(l.trim(), c);
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let d: DimensionVector = "b:1, a:2, c:0".parse().unwrap();
        assert_eq!(d.to_string(), "a:2,b:1");
        assert_eq!(d.total(), 3);
        assert!("a".parse::<DimensionVector>().is_err());
    }

    #[test]
    fn splittings_are_lexicographic() {
        let d = DimensionVector::from_pairs(&[("a", 1), ("b", 1)]);
        let s: Vec<String> = d.splittings().iter().map(|(e, f)| format!("{e}|{f}")).collect();
        assert_eq!(s, vec!["b:1|a:1", "a:1|b:1"]);
        assert_eq!(DimensionVector::from_pairs(&[("g", 3)]).splittings().len(), 2);
    }
}
