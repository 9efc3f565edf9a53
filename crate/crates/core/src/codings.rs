//! Two codings of a set `S ⊆ ℕ`: daisy graphs, with one petal per `n` whose length records
//! membership, and finite fragments of shuffle sums over the dense order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::structure::UGraph;

/// Petal length in edges for index `n`.
pub fn petal_length(n: u64, member: bool) -> u64 {
    if member {
        2 * n + 3
    } else {
        2 * n + 4
    }
}

/// A daisy with center `0` and one petal per `n < bound`: a cycle through the center with
/// `2n + 3` edges when `n ∈ S` and `2n + 4` otherwise. `prefix[n]` is membership of `n`; missing
/// entries count as non-members.
pub fn daisy_encode(prefix: &[bool], bound: u64) -> Result<UGraph> {
    if bound == 0 {
        return Err(Error::pre("the bound must be at least 1"));
    }
    let mut edges = Vec::new();
    let mut next = 1u64;
    for n in 0..bound {
        let len = petal_length(n, prefix.get(n as usize).copied().unwrap_or(false));
        let path: Vec<u64> = (next..next + len - 1).collect();
        next += len - 1;
        edges.push((0, path[0]));
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((*path.last().expect("petals have at least two vertices"), 0));
    }
    UGraph::new(0..next, edges)
}

/// A decoded daisy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Daisy {
    pub center: u64,
    /// Petal edge counts in increasing order.
    pub petals: Vec<u64>,
    /// `prefix[n]` is membership of `n`, for `n` below the number of petals.
    pub prefix: Vec<bool>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

/// Recovers the characteristic prefix from any copy of a daisy.
pub fn daisy_decode(h: &UGraph) -> Result<Daisy> {
    let adj = h.adjacency();
    if adj.is_empty() {
        return Err(malformed("the graph is empty"));
    }
    let deg = |v: &u64| adj.get(v).map_or(0, Vec::len);
    let max = adj.keys().map(deg).max().unwrap_or(0);
    let tops: Vec<u64> = adj.keys().copied().filter(|v| deg(v) == max).collect();
    let center = match tops.as_slice() {
        [c] => *c,
        _ if max == 2 => *adj.keys().next().expect("nonempty"),
        _ => return Err(malformed("there is no unique vertex of largest degree")),
    };
    if adj.keys().any(|v| *v != center && deg(v) != 2) {
        return Err(malformed("a vertex off the center does not have degree 2"));
    }
    let mut seen: BTreeSet<u64> = BTreeSet::from([center]);
    let mut petals = Vec::new();
    for &start in &adj[&center] {
        if seen.contains(&start) {
            continue;
        }
        let (mut prev, mut cur, mut edges) = (center, start, 1u64);
        seen.insert(cur);
        loop {
            let step = adj[&cur].iter().copied().find(|&w| w != prev);
            let Some(nxt) = step else {
                return Err(malformed("a petal is not a cycle"));
            };
            edges += 1;
            if nxt == center {
                break;
            }
            if !seen.insert(nxt) {
                return Err(malformed("petals share a vertex other than the center"));
            }
            prev = cur;
            cur = nxt;
        }
        if edges < 3 {
            return Err(malformed("a petal has fewer than 3 edges"));
        }
        petals.push(edges);
    }
    if seen.len() != adj.len() {
        return Err(malformed("some vertices lie on no petal"));
    }
    petals.sort_unstable();
    let mut prefix = Vec::new();
    for (n, &len) in petals.iter().enumerate() {
        let n = n as u64;
        if len == petal_length(n, true) {
            prefix.push(true);
        } else if len == petal_length(n, false) {
            prefix.push(false);
        } else {
            return Err(malformed(format!("no petal for index {n}")));
        }
    }
    Ok(Daisy { center, petals, prefix })
}

/// Label of a shuffle block: a finite order type or an ω-prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockLabel {
    Finite(u64),
    Omega,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleBlock {
    pub index: Dyadic,
    pub label: BlockLabel,
    pub elements: Vec<u64>,
}

/// A finite stage of a shuffle sum: blocks at dyadic index points, concatenated in index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleFragment {
    pub labels: Vec<u64>,
    pub omega: bool,
    /// Added to every block size coding a set element.
    pub offset: u64,
    pub resolution: u32,
    /// Length of each ω-prefix.
    pub omega_prefix: u64,
    pub blocks: Vec<ShuffleBlock>,
}

/// Offset added to `2n` and `2n + 1` so that no coded block is empty.
pub const SET_OFFSET: u64 = 2;

/// Least resolution at which every label occurs in both halves of the index interval.
pub fn min_resolution(label_count: usize) -> u32 {
    let l = label_count.max(1) as u64;
    2 + (64 - (l - 1).leading_zeros()) * u32::from(l > 1)
}

/// Dyadics in `(0, 1)` with exponent at most `max_exp`, by exponent and then numerator.
fn canonical_points(max_exp: u32) -> Vec<Dyadic> {
    let mut out = Dyadic::all_up_to(max_exp);
    out.sort_by_key(|d| (d.exponent(), d.numerator()));
    out
}

/// Assigns labels to index points round-robin over their canonical enumeration and materializes
/// the fragment.
pub fn shuffle_build(labels: &BTreeSet<u64>, include_omega: bool, resolution: u32) -> Result<ShuffleFragment> {
    shuffle_build_with_offset(labels, include_omega, resolution, 0)
}

fn shuffle_build_with_offset(
    labels: &BTreeSet<u64>,
    include_omega: bool,
    resolution: u32,
    offset: u64,
) -> Result<ShuffleFragment> {
    if labels.contains(&0) {
        return Err(Error::pre("block labels must be positive"));
    }
    let mut schedule: Vec<BlockLabel> = labels.iter().map(|&l| BlockLabel::Finite(l)).collect();
    if include_omega {
        schedule.push(BlockLabel::Omega);
    }
    if schedule.is_empty() {
        return Err(Error::pre("no labels to place"));
    }
    let need = min_resolution(schedule.len());
    if resolution < need {
        return Err(Error::Resolution(format!(
            "resolution {resolution} is below {need}, the least that places {} labels densely",
            schedule.len()
        )));
    }
    if resolution > 20 {
        return Err(Error::TooLarge(format!("resolution {resolution}")));
    }
    let omega_prefix = labels.iter().max().copied().unwrap_or(0) + u64::from(resolution);
    let mut assigned: BTreeMap<Dyadic, BlockLabel> = BTreeMap::new();
    for (i, d) in canonical_points(resolution).into_iter().enumerate() {
        assigned.insert(d, schedule[i % schedule.len()]);
    }
    let mut next = 0u64;
    let blocks = assigned
        .into_iter()
        .map(|(index, label)| {
            let size = match label {
                BlockLabel::Finite(n) => n,
                BlockLabel::Omega => omega_prefix,
            };
            let elements = (next..next + size).collect();
            next += size;
            ShuffleBlock { index, label, elements }
        })
        .collect();
    Ok(ShuffleFragment {
        labels: labels.iter().copied().collect(),
        omega: include_omega,
        offset,
        resolution,
        omega_prefix,
        blocks,
    })
}

/// The fragment of `σ(A ∪ {ω})` for `A = {2n + 2 : n ∈ S} ∪ {2n + 3 : n ∉ S}` over `n < bound`.
pub fn shuffle_build_set(prefix: &[bool], bound: u64, resolution: u32) -> Result<ShuffleFragment> {
    let labels: BTreeSet<u64> = (0..bound)
        .map(|n| {
            let member = prefix.get(n as usize).copied().unwrap_or(false);
            2 * n + SET_OFFSET + u64::from(!member)
        })
        .collect();
    shuffle_build_with_offset(&labels, true, resolution, SET_OFFSET)
}

impl ShuffleFragment {
    /// All elements in order.
    pub fn order(&self) -> Vec<u64> {
        self.blocks.iter().flat_map(|b| b.elements.iter().copied()).collect()
    }

    /// Header comment, then one annotated `o` line per block.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let labels: Vec<String> = self.labels.iter().map(u64::to_string).collect();
        let _ = writeln!(
            out,
            "# shuffle labels {} omega {} offset {} resolution {} omega-prefix {}",
            if labels.is_empty() { "-".to_string() } else { labels.join(",") },
            u8::from(self.omega),
            self.offset,
            self.resolution,
            self.omega_prefix
        );
        for b in &self.blocks {
            let kind = match b.label {
                BlockLabel::Finite(n) => format!("finite {n}"),
                BlockLabel::Omega => format!("omega-prefix {}", b.elements.len()),
            };
            let elems: Vec<String> = b.elements.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "# block {} {kind}", b.index);
            let _ = writeln!(out, "o {}", elems.join(" "));
        }
        out
    }

    /// Reads [`ShuffleFragment::to_text`] output; fragments without header or block markers are
    /// refused.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<ShuffleFragment> = None;
        let mut pending: Option<(Dyadic, BlockLabel)> = None;
        let mut blocks = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            let words: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::parse(format!("line {}: {line}", ln + 1));
            match words.as_slice() {
                [] => {}
                ["#", "shuffle", "labels", l, "omega", o, "offset", off, "resolution", r, "omega-prefix", p] => {
                    let labels = if *l == "-" {
                        Vec::new()
                    } else {
                        l.split(',').map(|x| x.parse().map_err(|_| bad())).collect::<Result<_>>()?
                    };
                    header = Some(ShuffleFragment {
                        labels,
                        omega: *o == "1",
                        offset: off.parse().map_err(|_| bad())?,
                        resolution: r.parse().map_err(|_| bad())?,
                        omega_prefix: p.parse().map_err(|_| bad())?,
                        blocks: Vec::new(),
                    });
                }
                ["#", "block", idx, "finite", n] => {
                    pending = Some((idx.parse()?, BlockLabel::Finite(n.parse().map_err(|_| bad())?)));
                }
                ["#", "block", idx, "omega-prefix", _] => pending = Some((idx.parse()?, BlockLabel::Omega)),
                ["#", ..] => {}
                ["o", rest @ ..] => {
                    let (index, label) = pending.take().ok_or_else(|| {
                        Error::Refused(format!("line {}: order line without a block marker", ln + 1))
                    })?;
                    let elements = rest.iter().map(|x| x.parse().map_err(|_| bad())).collect::<Result<_>>()?;
                    blocks.push(ShuffleBlock { index, label, elements });
                }
                _ => return Err(bad()),
            }
        }
        let mut f = header.ok_or_else(|| Error::Refused("the fragment has no shuffle header".into()))?;
        f.blocks = blocks;
        Ok(f)
    }
}

/// Verdict on one `n`, from the block sizes seen so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    In,
    Out,
    Unknown,
    Conflict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleReport {
    /// Always true: the verdicts describe a finite stage.
    pub provisional: bool,
    pub offset: u64,
    pub observed_sizes: Vec<u64>,
    pub omega_prefixes: usize,
    /// Verdict for each `n` up to the largest one any observed size speaks about.
    pub verdicts: Vec<Membership>,
}

impl ShuffleReport {
    /// Members with a settled `In` verdict.
    pub fn members(&self) -> BTreeSet<u64> {
        self.verdicts
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == Membership::In)
            .map(|(n, _)| n as u64)
            .collect()
    }
}

/// Reads membership off the sizes of marked finite blocks; ω-prefixes are never counted.
pub fn shuffle_decode(f: &ShuffleFragment) -> Result<ShuffleReport> {
    let sizes: BTreeSet<u64> = f
        .blocks
        .iter()
        .filter(|b| b.label != BlockLabel::Omega)
        .map(|b| b.elements.len() as u64)
        .collect();
    let omega_prefixes = f.blocks.iter().filter(|b| b.label == BlockLabel::Omega).count();
    let top = sizes.iter().filter(|&&s| s >= f.offset).map(|&s| (s - f.offset) / 2).max();
    let verdicts = match top {
        None => Vec::new(),
        Some(top) => (0..=top)
            .map(|n| {
                let even = sizes.contains(&(2 * n + f.offset));
                let odd = sizes.contains(&(2 * n + 1 + f.offset));
                match (even, odd) {
                    (true, false) => Membership::In,
                    (false, true) => Membership::Out,
                    (false, false) => Membership::Unknown,
                    (true, true) => Membership::Conflict,
                }
            })
            .collect(),
    };
    Ok(ShuffleReport {
        provisional: true,
        offset: f.offset,
        observed_sizes: sizes.into_iter().collect(),
        omega_prefixes,
        verdicts,
    })
}
