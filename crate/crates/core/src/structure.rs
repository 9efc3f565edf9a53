//! Finite relational structures and the shared text format.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comment
//! v 0            # vertex
//! e 0 1          # edge (directed for digraphs, undirected for graphs)
//! o 3 1 2        # linear order, elements listed in order
//! r Add 1 2 3    # a tuple of a named relation (general structures)
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbol::Sym;

/// Parsed lines of a structure file, before they are given a meaning.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawStructure {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub orders: Vec<Vec<u64>>,
    pub relations: Vec<(String, Vec<u64>)>,
}

fn parse_id(tok: &str, line_no: usize) -> Result<u64> {
    tok.parse::<u64>()
        .map_err(|_| Error::parse(format!("line {line_no}: `{tok}` is not a natural number")))
}

impl RawStructure {
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = RawStructure::default();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            let head = toks.next().unwrap_or_default();
            let rest: Vec<&str> = toks.collect();
            match head {
                "v" => {
                    if rest.len() != 1 {
                        return Err(Error::parse(format!("line {line_no}: `v` takes one id")));
                    }
                    raw.vertices.push(parse_id(rest[0], line_no)?);
                }
                "e" => {
                    if rest.len() != 2 {
                        return Err(Error::parse(format!("line {line_no}: `e` takes two ids")));
                    }
                    raw.edges
                        .push((parse_id(rest[0], line_no)?, parse_id(rest[1], line_no)?));
                }
                "o" => {
                    let ids = rest
                        .iter()
                        .map(|t| parse_id(t, line_no))
                        .collect::<Result<Vec<_>>>()?;
                    raw.orders.push(ids);
                }
                "r" => {
                    let Some((name, ids)) = rest.split_first() else {
                        return Err(Error::parse(format!("line {line_no}: `r` needs a name")));
                    };
                    let ids = ids
                        .iter()
                        .map(|t| parse_id(t, line_no))
                        .collect::<Result<Vec<_>>>()?;
                    raw.relations.push((name.to_string(), ids));
                }
                other => {
                    return Err(Error::parse(format!(
                        "line {line_no}: unknown line kind `{other}`"
                    )))
                }
            }
        }
        Ok(raw)
    }

    fn all_ids(&self) -> BTreeSet<u64> {
        let mut ids: BTreeSet<u64> = self.vertices.iter().copied().collect();
        for &(u, v) in &self.edges {
            ids.insert(u);
            ids.insert(v);
        }
        for o in &self.orders {
            ids.extend(o.iter().copied());
        }
        for (_, t) in &self.relations {
            ids.extend(t.iter().copied());
        }
        ids
    }
}

/// A finite directed graph on natural-number vertices. Self-loops are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Digraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl Digraph {
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<u64> = vertices.into_iter().collect();
        let edges: BTreeSet<(u64, u64)> = edges.into_iter().collect();
        for &(u, v) in &edges {
            if !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(Error::pre(format!("edge ({u},{v}) has an endpoint outside the vertex set")));
            }
        }
        Ok(Digraph { vertices, edges })
    }

    pub fn empty() -> Self {
        Digraph::default()
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn has_edge(&self, u: u64, v: u64) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn has_vertex(&self, v: u64) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_irreflexive(&self) -> bool {
        self.edges.iter().all(|&(u, v)| u != v)
    }

    /// Endpoints of `e` lines are added to the vertex set implicitly.
    pub fn parse(text: &str) -> Result<Self> {
        let raw = RawStructure::parse(text)?;
        if !raw.orders.is_empty() || !raw.relations.is_empty() {
            return Err(Error::parse("digraph files may only contain `v` and `e` lines"));
        }
        let vertices = raw.all_ids();
        Digraph::new(vertices, raw.edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            let _ = writeln!(s, "v {v}");
        }
        for (u, v) in &self.edges {
            let _ = writeln!(s, "e {u} {v}");
        }
        s
    }

    /// Renames vertices through `f`, which must be injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(u64) -> u64) -> Self {
        Digraph {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
            edges: self.edges.iter().map(|&(u, v)| (f(u), f(v))).collect(),
        }
    }

    pub fn to_structure(&self) -> Structure {
        let labels: Vec<u64> = self.vertices.iter().copied().collect();
        let pos = position_map(&labels);
        let tuples = self
            .edges
            .iter()
            .map(|(u, v)| vec![pos[u], pos[v]])
            .collect::<Vec<_>>();
        Structure::builder(labels)
            .relation(Sym::edge(), 2, tuples)
            .build()
            .expect("digraph relation fits")
    }
}

/// A finite simple undirected graph. Edges are stored with the smaller endpoint first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl UGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<u64> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::pre(format!("self-loop at {u} in an undirected graph")));
            }
            if !vertices.contains(&u) || !vertices.contains(&v) {
                return Err(Error::pre(format!("edge {{{u},{v}}} has an endpoint outside the vertex set")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(UGraph { vertices, edges: set })
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn has_edge(&self, u: u64, v: u64) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacency(&self) -> BTreeMap<u64, Vec<u64>> {
        let mut adj: BTreeMap<u64, Vec<u64>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(u, v) in &self.edges {
            adj.get_mut(&u).expect("endpoint").push(v);
            adj.get_mut(&v).expect("endpoint").push(u);
        }
        adj
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw = RawStructure::parse(text)?;
        if !raw.orders.is_empty() || !raw.relations.is_empty() {
            return Err(Error::parse("graph files may only contain `v` and `e` lines"));
        }
        let vertices = raw.all_ids();
        UGraph::new(vertices, raw.edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            let _ = writeln!(s, "v {v}");
        }
        for (u, v) in &self.edges {
            let _ = writeln!(s, "e {u} {v}");
        }
        s
    }

    pub fn relabel(&self, f: impl Fn(u64) -> u64) -> Self {
        UGraph {
            vertices: self.vertices.iter().map(|&v| f(v)).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (f(u), f(v));
                    (a.min(b), a.max(b))
                })
                .collect(),
        }
    }

    /// The symmetric edge relation `E` on the vertices in increasing id order.
    pub fn to_structure(&self) -> Structure {
        let labels: Vec<u64> = self.vertices.iter().copied().collect();
        let pos = position_map(&labels);
        let mut tuples = Vec::with_capacity(self.edges.len() * 2);
        for (u, v) in &self.edges {
            tuples.push(vec![pos[u], pos[v]]);
            tuples.push(vec![pos[v], pos[u]]);
        }
        Structure::builder(labels)
            .relation(Sym::edge(), 2, tuples)
            .build()
            .expect("graph relation fits")
    }

    /// Reads a symmetric binary relation `E` back as an undirected graph.
    pub fn from_structure(s: &Structure) -> Result<Self> {
        let idx = s
            .relation_index(Sym::edge())
            .ok_or_else(|| Error::Signature("structure has no relation E".into()))?;
        let rel = s.relation(idx);
        let mut edges = Vec::new();
        for t in rel.tuples() {
            if !rel.contains(&[t[1], t[0]]) {
                return Err(Error::pre("edge relation is not symmetric"));
            }
            edges.push((s.label(t[0] as usize), s.label(t[1] as usize)));
        }
        UGraph::new(s.labels().iter().copied(), edges)
    }
}

/// A finite linear order, elements listed from least to greatest.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinLinOrder {
    elements: Vec<u64>,
}

impl FinLinOrder {
    pub fn new(elements: Vec<u64>) -> Result<Self> {
        let distinct: BTreeSet<u64> = elements.iter().copied().collect();
        if distinct.len() != elements.len() {
            return Err(Error::pre("linear order lists an element twice"));
        }
        Ok(FinLinOrder { elements })
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        FinLinOrder { elements: (0..n as u64).collect() }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, id: u64) -> Option<usize> {
        self.elements.iter().position(|&e| e == id)
    }

    /// The sub-order on positions `lo..hi`.
    pub fn slice(&self, lo: usize, hi: usize) -> Self {
        FinLinOrder { elements: self.elements[lo..hi].to_vec() }
    }

    /// Several `o` lines are concatenated in file order.
    pub fn parse(text: &str) -> Result<Self> {
        let raw = RawStructure::parse(text)?;
        if !raw.edges.is_empty() || !raw.relations.is_empty() {
            return Err(Error::parse("order files may only contain `o` lines"));
        }
        let elements: Vec<u64> = raw.orders.into_iter().flatten().collect();
        if raw.vertices.iter().any(|v| !elements.contains(v)) {
            return Err(Error::parse("`v` line names an element missing from the order"));
        }
        FinLinOrder::new(elements).map_err(|e| Error::parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let ids: Vec<String> = self.elements.iter().map(u64::to_string).collect();
        format!("o {}\n", ids.join(" "))
    }

    /// The strict order `<`, with elements stored in order position.
    pub fn to_structure(&self) -> Structure {
        let n = self.elements.len() as u32;
        let tuples = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| vec![i, j]))
            .collect::<Vec<_>>();
        Structure::builder(self.elements.clone())
            .relation(Sym::less(), 2, tuples)
            .build()
            .expect("order relation fits")
    }
}

fn position_map(labels: &[u64]) -> HashMap<u64, u32> {
    labels.iter().enumerate().map(|(i, &l)| (l, i as u32)).collect()
}

/// Relation symbols with arities, in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Signature {
    symbols: Vec<(Sym, usize)>,
}

impl Signature {
    pub fn new(symbols: Vec<(Sym, usize)>) -> Self {
        Signature { symbols }
    }

    pub fn digraph() -> Self {
        Signature::new(vec![(Sym::edge(), 2)])
    }

    pub fn order() -> Self {
        Signature::new(vec![(Sym::less(), 2)])
    }

    pub fn symbols(&self) -> &[(Sym, usize)] {
        &self.symbols
    }

    pub fn arity(&self, sym: Sym) -> Option<usize> {
        self.symbols.iter().find(|(s, _)| *s == sym).map(|&(_, a)| a)
    }
}

const MAX_DENSE_BITS: u64 = 1 << 30;

enum PositionIndex {
    Binary(Vec<Vec<u32>>),
    General(HashMap<Vec<u32>, Vec<u32>>),
}

/// A relation stored densely as a bit set over `universe^arity`.
pub struct Relation {
    arity: usize,
    universe: usize,
    bits: Vec<u64>,
    tuples: Vec<Vec<u32>>,
    index: OnceLock<Vec<PositionIndex>>,
}

impl Clone for Relation {
    fn clone(&self) -> Self {
        Relation {
            arity: self.arity,
            universe: self.universe,
            bits: self.bits.clone(),
            tuples: self.tuples.clone(),
            index: OnceLock::new(),
        }
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Relation")
            .field("arity", &self.arity)
            .field("tuples", &self.tuples)
            .finish()
    }
}

impl Relation {
    fn offset(&self, args: &[u32]) -> usize {
        args.iter()
            .fold(0usize, |acc, &a| acc * self.universe + a as usize)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn contains(&self, args: &[u32]) -> bool {
        debug_assert_eq!(args.len(), self.arity);
        let off = self.offset(args);
        self.bits[off / 64] >> (off % 64) & 1 == 1
    }

    /// Tuples in increasing lexicographic order.
    pub fn tuples(&self) -> &[Vec<u32>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    fn build_index(&self) -> Vec<PositionIndex> {
        (0..self.arity)
            .map(|pos| {
                if self.arity == 2 {
                    let mut lists = vec![Vec::new(); self.universe];
                    for t in &self.tuples {
                        lists[t[1 - pos] as usize].push(t[pos]);
                    }
                    PositionIndex::Binary(lists)
                } else {
                    let mut map: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
                    for t in &self.tuples {
                        let mut key = t.clone();
                        key.remove(pos);
                        map.entry(key).or_default().push(t[pos]);
                    }
                    PositionIndex::General(map)
                }
            })
            .collect()
    }

    /// Values `x` such that the tuple `others` with `x` inserted at `pos` is in the relation.
    pub fn completions(&self, pos: usize, others: &[u32]) -> &[u32] {
        let index = self.index.get_or_init(|| self.build_index());
        match &index[pos] {
            PositionIndex::Binary(lists) => &lists[others[0] as usize],
            PositionIndex::General(map) => map.get(others).map(Vec::as_slice).unwrap_or(&[]),
        }
    }
}

/// A finite relational structure with universe `0..n`; `labels[i]` is the external id of
/// element `i`.
#[derive(Debug, Clone)]
pub struct Structure {
    labels: Vec<u64>,
    signature: Signature,
    relations: Vec<Relation>,
}

pub struct StructureBuilder {
    labels: Vec<u64>,
    relations: Vec<(Sym, usize, Vec<Vec<u32>>)>,
}

impl StructureBuilder {
    pub fn relation(mut self, sym: Sym, arity: usize, tuples: Vec<Vec<u32>>) -> Self {
        self.relations.push((sym, arity, tuples));
        self
    }

    pub fn build(self) -> Result<Structure> {
        let n = self.labels.len();
        let mut signature = Vec::new();
        let mut relations = Vec::new();
        for (sym, arity, mut tuples) in self.relations {
            if signature.iter().any(|&(s, _)| s == sym) {
                return Err(Error::Signature(format!("relation {sym} declared twice")));
            }
            let cells = (n as u64).checked_pow(arity as u32).unwrap_or(u64::MAX);
            if cells > MAX_DENSE_BITS {
                return Err(Error::TooLarge(format!(
                    "relation {sym} of arity {arity} over {n} elements"
                )));
            }
            for t in &tuples {
                if t.len() != arity || t.iter().any(|&x| x as usize >= n) {
                    return Err(Error::pre(format!("bad tuple {t:?} for relation {sym}")));
                }
            }
            tuples.sort();
            tuples.dedup();
            let mut rel = Relation {
                arity,
                universe: n,
                bits: vec![0; (cells as usize).div_ceil(64).max(1)],
                tuples: Vec::new(),
                index: OnceLock::new(),
            };
            for t in &tuples {
                let off = rel.offset(t);
                rel.bits[off / 64] |= 1 << (off % 64);
            }
            rel.tuples = tuples;
            signature.push((sym, arity));
            relations.push(rel);
        }
        Ok(Structure { labels: self.labels, signature: Signature::new(signature), relations })
    }
}

impl Structure {
    pub fn builder(labels: Vec<u64>) -> StructureBuilder {
        StructureBuilder { labels, relations: Vec::new() }
    }

    /// Generic reading of the text format: `e` lines become a directed relation `E`,
    /// `o` lines the strict order `<` and `r` lines named relations.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, false)
    }

    /// As [`Structure::parse`], with `e` lines read as undirected edges when `undirected`.
    pub fn parse_with(text: &str, undirected: bool) -> Result<Self> {
        let raw = RawStructure::parse(text)?;
        let labels: Vec<u64> = raw.all_ids().into_iter().collect();
        let pos = position_map(&labels);
        let mut b = Structure::builder(labels);
        if !raw.edges.is_empty() || (raw.orders.is_empty() && raw.relations.is_empty()) {
            let mut tuples = Vec::new();
            for (u, v) in &raw.edges {
                if undirected && u == v {
                    return Err(Error::parse(format!("self-loop at {u} in an undirected graph")));
                }
                tuples.push(vec![pos[u], pos[v]]);
                if undirected {
                    tuples.push(vec![pos[v], pos[u]]);
                }
            }
            b = b.relation(Sym::edge(), 2, tuples);
        }
        if !raw.orders.is_empty() {
            let order: Vec<u64> = raw.orders.iter().flatten().copied().collect();
            let order = FinLinOrder::new(order).map_err(|e| Error::parse(e.to_string()))?;
            if order.len() != pos.len() {
                return Err(Error::parse("the order does not list every element"));
            }
            let mut tuples = Vec::new();
            for (i, a) in order.elements().iter().enumerate() {
                for c in &order.elements()[i + 1..] {
                    tuples.push(vec![pos[a], pos[c]]);
                }
            }
            b = b.relation(Sym::less(), 2, tuples);
        }
        let mut named: BTreeMap<String, (usize, Vec<Vec<u32>>)> = BTreeMap::new();
        for (name, ids) in &raw.relations {
            let entry = named.entry(name.clone()).or_insert((ids.len(), Vec::new()));
            if entry.0 != ids.len() {
                return Err(Error::parse(format!("relation {name} used with two arities")));
            }
            entry.1.push(ids.iter().map(|i| pos[i]).collect());
        }
        for (name, (arity, tuples)) in named {
            b = b.relation(Sym::new(&name), arity, tuples);
        }
        b.build().map_err(|e| Error::parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.labels {
            let _ = writeln!(s, "v {l}");
        }
        for (i, &(sym, _)) in self.signature.symbols().iter().enumerate() {
            for t in self.relations[i].tuples() {
                let ids: Vec<String> = t.iter().map(|&x| self.labels[x as usize].to_string()).collect();
                if sym == Sym::edge() {
                    let _ = writeln!(s, "e {}", ids.join(" "));
                } else {
                    let _ = writeln!(s, "r {} {}", sym, ids.join(" "));
                }
            }
        }
        s
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u64 {
        self.labels[i]
    }

    pub fn element_of(&self, label: u64) -> Option<u32> {
        self.labels.iter().position(|&l| l == label).map(|i| i as u32)
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn relation_index(&self, sym: Sym) -> Option<usize> {
        self.signature.symbols().iter().position(|&(s, _)| s == sym)
    }

    pub fn relation(&self, idx: usize) -> &Relation {
        &self.relations[idx]
    }

    pub fn holds(&self, sym: Sym, args: &[u32]) -> bool {
        self.relation_index(sym)
            .is_some_and(|i| self.relations[i].contains(args))
    }

    /// The structure with element `i` renamed to `perm[i]` (labels follow their elements).
    pub fn permute(&self, perm: &[u32]) -> Structure {
        let n = self.size();
        let mut labels = vec![0; n];
        for i in 0..n {
            labels[perm[i] as usize] = self.labels[i];
        }
        let mut b = Structure::builder(labels);
        for (i, &(sym, arity)) in self.signature.symbols().iter().enumerate() {
            let tuples = self.relations[i]
                .tuples()
                .iter()
                .map(|t| t.iter().map(|&x| perm[x as usize]).collect())
                .collect();
            b = b.relation(sym, arity, tuples);
        }
        b.build().expect("permuted structure is valid")
    }

    /// Replaces the external labels, keeping the relations.
    pub fn with_labels(&self, labels: Vec<u64>) -> Result<Structure> {
        if labels.len() != self.size() {
            return Err(Error::pre("label count differs from universe size"));
        }
        let mut s = self.clone();
        s.labels = labels;
        Ok(s)
    }

    /// Elements indexed by the given labels; unknown labels are a precondition error.
    pub fn elements_of(&self, labels: &[u64]) -> Result<Vec<u32>> {
        labels
            .iter()
            .map(|&l| {
                self.element_of(l)
                    .ok_or_else(|| Error::pre(format!("{l} is not an element of the structure")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_implicit_vertices() {
        let g = Digraph::parse("# a path\nv 7\ne 0 1 # trailing\ne 1 2\n").unwrap();
        assert_eq!(g.vertices().iter().copied().collect::<Vec<_>>(), vec![0, 1, 2, 7]);
        assert!(g.has_edge(0, 1) && !g.has_edge(1, 0));
        assert_eq!(Digraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn rejects_unknown_lines_and_bad_ids() {
        assert!(matches!(Digraph::parse("x 1"), Err(Error::Parse(_))));
        assert!(matches!(Digraph::parse("e 1 -2"), Err(Error::Parse(_))));
        assert!(matches!(UGraph::parse("e 3 3"), Err(Error::Precondition(_))));
    }

    #[test]
    fn order_file_round_trip() {
        let o = FinLinOrder::parse("o 5 3\no 9\n").unwrap();
        assert_eq!(o.elements(), &[5, 3, 9]);
        assert!(FinLinOrder::parse("o 1 2 1").is_err());
        let s = o.to_structure();
        assert!(s.holds(Sym::less(), &[0, 2]));
        assert!(!s.holds(Sym::less(), &[2, 0]));
    }

    #[test]
    fn general_relations() {
        let s = Structure::parse("r Add 0 1 1\nr Add 1 1 2\nv 3").unwrap();
        assert_eq!(s.size(), 4);
        let add = Sym::new("Add");
        assert!(s.holds(add, &[1, 1, 2]));
        let idx = s.relation_index(add).unwrap();
        assert_eq!(s.relation(idx).completions(2, &[0, 1]), &[1]);
        assert!(s.relation_index(Sym::edge()).is_none());
    }

    #[test]
    fn ugraph_structure_is_symmetric() {
        let g = UGraph::new(0..3, [(2, 0), (1, 2)]).unwrap();
        let s = g.to_structure();
        assert!(s.holds(Sym::edge(), &[0, 2]) && s.holds(Sym::edge(), &[2, 0]));
        assert_eq!(UGraph::from_structure(&s).unwrap(), g);
    }
}
