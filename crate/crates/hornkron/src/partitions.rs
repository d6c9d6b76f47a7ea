//! Partitions and index sets.
//!
//! - [`Partition`]: weakly decreasing sequence of nonnegative integers,
//!   kept in canonical form (no trailing zeros).
//! - [`IndexSet`]: strictly increasing subset of `{1, ..., d}`.
//! - Selection `alpha_I`, first-part removal, the staircase complement
//!   `tau(I)`, and set complements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition in canonical form: weakly decreasing positive parts.
/// The empty partition is a first-class value with size 0 and length 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Rejects sequences
    /// that are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from signed input, rejecting negative parts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NegativePart);
        }
        Partition::new(parts.iter().map(|&p| p as u32).collect())
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The 1-indexed part, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Removes the first part: `(a1, a2, a3, ...) -> (a2, a3, ...)`.
    /// The empty partition maps to itself.
    pub fn drop_first(&self) -> Self {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        Partition {
            parts: self.parts[1..].to_vec(),
        }
    }

    /// The subsequence at the positions of `ix`, the partition written
    /// `alpha_I`. The partition is zero-padded up to the ambient, so short
    /// partitions select zeros; partitions longer than the ambient are
    /// rejected.
    pub fn select(&self, ix: &IndexSet) -> Result<Self> {
        if self.len() > ix.ambient() {
            return Err(Error::AmbientTooSmall {
                length: self.len(),
                ambient: ix.ambient(),
            });
        }
        let parts = ix.indices().iter().map(|&i| self.part(i)).collect();
        Partition::new(parts)
    }

    /// True when the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// The conjugate (transposed) diagram. Internal plumbing for the
    /// sign-twist identity; carries no further contract.
    pub fn conjugate(&self) -> Self {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Every part multiplied by `k` (the stretched partition).
    pub fn scale(&self, k: u32) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }
}

impl fmt::Display for Partition {
    /// Comma syntax: `3,2,1`; the empty partition is spelled `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        match parts {
            Ok(v) => Partition::from_signed(&v),
            Err(e) => Err(Error::Parse(format!("bad partition '{s}': {e}"))),
        }
    }
}

/// A strictly increasing subset of `{1, ..., d}`; `d` is the ambient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet {
    indices: Vec<usize>,
    ambient: usize,
}

impl IndexSet {
    /// Builds an index set; indices must be strictly increasing, at least 1
    /// and at most the ambient.
    pub fn new(indices: Vec<usize>, ambient: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadIndexSet(
                "indices must be strictly increasing".into(),
            ));
        }
        if indices.first().is_some_and(|&i| i == 0) {
            return Err(Error::BadIndexSet("indices are 1-based".into()));
        }
        if indices.last().is_some_and(|&i| i > ambient) {
            return Err(Error::BadIndexSet(format!(
                "index {} exceeds ambient {}",
                indices.last().unwrap(),
                ambient
            )));
        }
        Ok(IndexSet { indices, ambient })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn cardinality(&self) -> usize {
        self.indices.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// The sorted complement in `{1, ..., d}`, written `I_-`.
    pub fn complement(&self) -> Self {
        let indices = (1..=self.ambient)
            .filter(|i| !self.contains(*i))
            .collect();
        IndexSet {
            indices,
            ambient: self.ambient,
        }
    }

    /// The partition `tau(I) = (d-r+1-i_1 >= d-r+2-i_2 >= ... >= d-i_r)`
    /// attached to `I = {i_1 < ... < i_r}` inside `{1, ..., d}`. It always
    /// fits in an `r x (d-r)` box.
    pub fn tau(&self) -> Partition {
        let d = self.ambient;
        let r = self.indices.len();
        let parts: Vec<u32> = self
            .indices
            .iter()
            .enumerate()
            .map(|(k, &i)| (d - r + (k + 1) - i) as u32)
            .collect();
        Partition::new(parts).expect("tau is weakly decreasing by construction")
    }
}

impl fmt::Display for IndexSet {
    /// Brace syntax with the ambient: `{1,4}/4`; the empty set is `{}/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}/{}", s.join(","), self.ambient)
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (set, ambient) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("bad index set '{s}': missing /ambient")))?;
        let set = set.trim();
        if !set.starts_with('{') || !set.ends_with('}') {
            return Err(Error::Parse(format!("bad index set '{s}': missing braces")));
        }
        let inner = &set[1..set.len() - 1];
        let indices: std::result::Result<Vec<usize>, _> = if inner.trim().is_empty() {
            Ok(Vec::new())
        } else {
            inner.split(',').map(|t| t.trim().parse::<usize>()).collect()
        };
        let ambient = ambient
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad ambient in '{s}': {e}")))?;
        match indices {
            Ok(v) => IndexSet::new(v, ambient),
            Err(e) => Err(Error::Parse(format!("bad index set '{s}': {e}"))),
        }
    }
}

/// All subsets of `{1, ..., d}` with `r` elements, in lexicographic order.
pub fn subsets(r: usize, d: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn rec(start: usize, r: usize, d: usize, current: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
        if current.len() == r {
            out.push(IndexSet {
                indices: current.clone(),
                ambient: d,
            });
            return;
        }
        let needed = r - current.len();
        for i in start..=d.saturating_sub(needed - 1) {
            current.push(i);
            rec(i + 1, r, d, current, out);
            current.pop();
        }
    }
    if r <= d {
        rec(1, r, d, &mut current, &mut out);
    }
    out
}
