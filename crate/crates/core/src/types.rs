//! The global enumeration of atomic types of tuples of distinct vertices in the digraph
//! language.
//!
//! Types are listed by tuple length. Within a length `n` the `n²` facts
//! `E(x_1,x_1), E(x_1,x_2), …, E(x_n,x_n)` are read as a binary number, first fact most
//! significant, and types are ordered by that number. Index 1 is the type of the empty tuple.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::Digraph;

/// Longest tuple whose type index fits in a `u64`.
pub const MAX_TYPE_LENGTH: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomicType {
    length: usize,
    facts: Vec<bool>,
    index: u64,
}

/// Index of the first type of length `n`.
pub fn length_offset(n: usize) -> Result<u64> {
    if n > MAX_TYPE_LENGTH {
        return Err(Error::TooLarge(format!("atomic types of length {n}")));
    }
    Ok(1 + (0..n).map(|j| 1u64 << (j * j)).sum::<u64>())
}

/// Number of types of length `n`, that is `2^(n²)`.
pub fn types_of_length(n: usize) -> Result<u64> {
    if n > MAX_TYPE_LENGTH {
        return Err(Error::TooLarge(format!("atomic types of length {n}")));
    }
    Ok(1u64 << (n * n))
}

impl AtomicType {
    /// Builds a type from its facts vector, which must have a square length.
    pub fn from_facts(facts: Vec<bool>) -> Result<Self> {
        let length = (0..=MAX_TYPE_LENGTH)
            .find(|n| n * n == facts.len())
            .ok_or_else(|| Error::Domain(format!("{} facts is not a square ≤ 49", facts.len())))?;
        let value = facts.iter().fold(0u64, |acc, &b| acc << 1 | b as u64);
        let index = length_offset(length)? + value;
        Ok(AtomicType { length, facts, index })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn facts(&self) -> &[bool] {
        &self.facts
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// The fact `E(x_i, x_j)`, zero-based.
    pub fn edge(&self, i: usize, j: usize) -> bool {
        self.facts[i * self.length + j]
    }
}

/// The atomic type realised by the tuple `t` of distinct vertices of `g`.
pub fn atomic_type_of(g: &Digraph, t: &[u64]) -> Result<AtomicType> {
    for (i, v) in t.iter().enumerate() {
        if !g.has_vertex(*v) {
            return Err(Error::pre(format!("{v} is not a vertex")));
        }
        if t[..i].contains(v) {
            return Err(Error::pre(format!("vertex {v} repeated in tuple")));
        }
    }
    let facts = t
        .iter()
        .flat_map(|&u| t.iter().map(move |&v| (u, v)))
        .map(|(u, v)| g.has_edge(u, v))
        .collect();
    AtomicType::from_facts(facts)
}

/// The `m`-th atomic type.
pub fn type_from_index(m: u64) -> Result<AtomicType> {
    if m == 0 {
        return Err(Error::Domain("type indices start at 1".into()));
    }
    for n in 0..=MAX_TYPE_LENGTH {
        let off = length_offset(n)?;
        let count = types_of_length(n)?;
        if m < off + count {
            let value = m - off;
            let nn = n * n;
            let facts = (0..nn).map(|i| value >> (nn - 1 - i) & 1 == 1).collect();
            return Ok(AtomicType { length: n, facts, index: m });
        }
    }
    Err(Error::TooLarge(format!("type index {m}")))
}
