//! Isomorphism testing for finite relational structures.
//!
//! Colour refinement on the disjoint union of the two structures prunes the search; the
//! remaining ambiguity is resolved by individualizing one element at a time and backtracking.
//! Candidates are tried in increasing order, so the witness returned is deterministic.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::structure::{Digraph, Structure, UGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoOptions {
    /// Largest universe accepted; larger inputs are refused with [`Error::TooLarge`].
    pub max_size: usize,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { max_size: 12 }
    }
}

impl IsoOptions {
    pub fn with_max_size(max_size: usize) -> Self {
        IsoOptions { max_size }
    }
}

struct Union<'a> {
    a: &'a Structure,
    b: &'a Structure,
    n: usize,
    incidence: Vec<Vec<(usize, usize, usize)>>,
}

impl<'a> Union<'a> {
    fn new(a: &'a Structure, b: &'a Structure) -> Self {
        let n = a.size();
        let mut incidence = vec![Vec::new(); 2 * n];
        for (side, s) in [a, b].into_iter().enumerate() {
            for r in 0..s.signature().symbols().len() {
                for (ti, t) in s.relation(r).tuples().iter().enumerate() {
                    for (pos, &x) in t.iter().enumerate() {
                        incidence[side * n + x as usize].push((r, pos, ti));
                    }
                }
            }
        }
        Union { a, b, n, incidence }
    }

    fn tuple(&self, elem: usize, r: usize, ti: usize) -> (&[u32], usize) {
        if elem < self.n {
            (&self.a.relation(r).tuples()[ti], 0)
        } else {
            (&self.b.relation(r).tuples()[ti], self.n)
        }
    }

    /// Refines `colors` to the coarsest stable partition below it.
    fn refine(&self, colors: &mut Vec<u32>) {
        let mut classes = count_classes(colors);
        loop {
            let keys: Vec<(u32, Vec<Vec<u32>>)> = (0..2 * self.n)
                .map(|e| {
                    let mut sig: Vec<Vec<u32>> = self.incidence[e]
                        .iter()
                        .map(|&(r, pos, ti)| {
                            let (t, off) = self.tuple(e, r, ti);
                            let mut k = vec![r as u32, pos as u32];
                            k.extend(t.iter().map(|&x| colors[off + x as usize]));
                            k
                        })
                        .collect();
                    sig.sort();
                    (colors[e], sig)
                })
                .collect();
            let distinct: BTreeSet<&(u32, Vec<Vec<u32>>)> = keys.iter().collect();
            let ids: BTreeMap<&(u32, Vec<Vec<u32>>), u32> =
                distinct.into_iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
            let next: Vec<u32> = keys.iter().map(|k| ids[k]).collect();
            let next_classes = count_classes(&next);
            *colors = next;
            if next_classes == classes {
                return;
            }
            classes = next_classes;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let mut count: BTreeMap<u32, i64> = BTreeMap::new();
        for (e, &c) in colors.iter().enumerate() {
            *count.entry(c).or_default() += if e < self.n { 1 } else { -1 };
        }
        count.values().all(|&v| v == 0)
    }

    fn search(&self, mut colors: Vec<u32>) -> Option<Vec<u32>> {
        self.refine(&mut colors);
        if !self.balanced(&colors) {
            return None;
        }
        let mut members: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (e, &c) in colors.iter().enumerate().take(self.n) {
            members.entry(c).or_default().push(e);
        }
        let target = members
            .iter()
            .filter(|(_, m)| m.len() > 1)
            .min_by_key(|(c, m)| (m.len(), **c))
            .map(|(&c, m)| (c, m[0]));
        match target {
            None => {
                let mut map = vec![0u32; self.n];
                for a in 0..self.n {
                    let b = (self.n..2 * self.n).find(|&b| colors[b] == colors[a])?;
                    map[a] = (b - self.n) as u32;
                }
                is_isomorphism(self.a, self.b, &map).then_some(map)
            }
            Some((c, a)) => {
                let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
                for b in self.n..2 * self.n {
                    if colors[b] != c {
                        continue;
                    }
                    let mut next = colors.clone();
                    next[a] = fresh;
                    next[b] = fresh;
                    if let Some(m) = self.search(next) {
                        return Some(m);
                    }
                }
                None
            }
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

/// True when `map` (element of `a` to element of `b`) is a bijection preserving every relation
/// in both directions.
pub fn is_isomorphism(a: &Structure, b: &Structure, map: &[u32]) -> bool {
    if a.size() != b.size() || map.len() != a.size() || a.signature() != b.signature() {
        return false;
    }
    let image: BTreeSet<u32> = map.iter().copied().collect();
    if image.len() != map.len() || image.iter().any(|&x| x as usize >= b.size()) {
        return false;
    }
    (0..a.signature().symbols().len()).all(|r| {
        let (ra, rb) = (a.relation(r), b.relation(r));
        ra.len() == rb.len()
            && ra.tuples().iter().all(|t| {
                let img: Vec<u32> = t.iter().map(|&x| map[x as usize]).collect();
                rb.contains(&img)
            })
    })
}

/// An isomorphism from `a` to `b` as a map on element indices, or `None`.
pub fn iso_check(a: &Structure, b: &Structure, opts: IsoOptions) -> Result<Option<Vec<u32>>> {
    if a.signature() != b.signature() {
        return Err(Error::Signature(format!(
            "{:?} versus {:?}",
            a.signature().symbols(),
            b.signature().symbols()
        )));
    }
    let largest = a.size().max(b.size());
    if largest > opts.max_size {
        return Err(Error::TooLarge(format!(
            "{largest} elements exceeds the isomorphism cap of {}",
            opts.max_size
        )));
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let u = Union::new(a, b);
    Ok(u.search(vec![0; 2 * a.size()]))
}

fn label_map(a: &Structure, b: &Structure, m: Vec<u32>) -> BTreeMap<u64, u64> {
    m.iter()
        .enumerate()
        .map(|(i, &j)| (a.label(i), b.label(j as usize)))
        .collect()
}

/// Isomorphism of digraphs as a map on vertex ids.
pub fn iso_digraph(a: &Digraph, b: &Digraph, opts: IsoOptions) -> Result<Option<BTreeMap<u64, u64>>> {
    let (sa, sb) = (a.to_structure(), b.to_structure());
    Ok(iso_check(&sa, &sb, opts)?.map(|m| label_map(&sa, &sb, m)))
}

/// Isomorphism of undirected graphs as a map on vertex ids.
pub fn iso_ugraph(a: &UGraph, b: &UGraph, opts: IsoOptions) -> Result<Option<BTreeMap<u64, u64>>> {
    let (sa, sb) = (a.to_structure(), b.to_structure());
    Ok(iso_check(&sa, &sb, opts)?.map(|m| label_map(&sa, &sb, m)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of digraphs on vertices `0..n` (with or without
/// self-loops), each the least adjacency code in its class. Intended for `n ≤ 4`.
pub fn digraphs_up_to_iso(n: usize, loops: bool) -> Vec<Digraph> {
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| loops || i != j)
        .collect();
    let perms = permutations(n);
    let cell_index: BTreeMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let permuted: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| cells.iter().map(|&(i, j)| cell_index[&(p[i], p[j])]).collect())
        .collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << cells.len()) {
        let canonical = permuted.iter().all(|img| {
            let mut other = 0u64;
            for (k, &t) in img.iter().enumerate() {
                if code >> k & 1 == 1 {
                    other |= 1 << t;
                }
            }
            other >= code
        });
        if canonical {
            let edges = cells
                .iter()
                .enumerate()
                .filter(|(k, _)| code >> k & 1 == 1)
                .map(|(_, &(i, j))| (i as u64, j as u64));
            out.push(Digraph::new(0..n as u64, edges).expect("valid digraph"));
        }
    }
    out
}
