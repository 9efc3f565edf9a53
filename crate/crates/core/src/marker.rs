//! Marker's embedding of irreflexive directed graphs in undirected graphs.
//!
//! Every vertex `a` becomes a base point `b_a` attached to a private triangle. Every ordered
//! pair `(a, a′)` of distinct vertices gets a point `p` adjacent to `b_a`, an intermediate `c`
//! adjacent to `p` and `b_{a′}`, and a private polygon attached to `p`: a square when `a → a′`
//! is an edge and a pentagon otherwise. The source digraph is recovered by three existential
//! formulas, either in batch or from a stream of facts.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{Evaluator, Formula};
use crate::structure::{Digraph, UGraph};
use crate::symbol::Var;

/// What an output vertex was created for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    Base { vertex: u64 },
    Triangle { vertex: u64, index: u8 },
    PairPoint { from: u64, to: u64 },
    Intermediate { from: u64, to: u64 },
    Polygon { from: u64, to: u64, index: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkerOutput {
    pub graph: UGraph,
    pub roles: BTreeMap<u64, Role>,
}

impl MarkerOutput {
    /// The base point of source vertex `a`.
    pub fn base_of(&self, a: u64) -> Option<u64> {
        self.roles
            .iter()
            .find(|(_, r)| **r == Role::Base { vertex: a })
            .map(|(&v, _)| v)
    }
}

/// Encodes `g`; self-loops are rejected.
pub fn marker_encode(g: &Digraph) -> Result<MarkerOutput> {
    if let Some((a, _)) = g.edges().iter().find(|(u, v)| u == v) {
        return Err(Error::Unsupported(format!("self-loop at {a}")));
    }
    let mut next = 0u64;
    let mut roles = BTreeMap::new();
    let mut edges = Vec::new();
    let mut fresh = |role: Role, roles: &mut BTreeMap<u64, Role>| {
        let v = next;
        next += 1;
        roles.insert(v, role);
        v
    };
    let mut base = BTreeMap::new();
    for &a in g.vertices() {
        let b = fresh(Role::Base { vertex: a }, &mut roles);
        let t: Vec<u64> = (0..3)
            .map(|i| fresh(Role::Triangle { vertex: a, index: i }, &mut roles))
            .collect();
        edges.extend([(t[0], t[1]), (t[1], t[2]), (t[0], t[2]), (b, t[0])]);
        base.insert(a, b);
    }
    for &a in g.vertices() {
        for &a2 in g.vertices() {
            if a == a2 {
                continue;
            }
            let p = fresh(Role::PairPoint { from: a, to: a2 }, &mut roles);
            let c = fresh(Role::Intermediate { from: a, to: a2 }, &mut roles);
            edges.extend([(p, base[&a]), (p, c), (c, base[&a2])]);
            let sides = if g.has_edge(a, a2) { 4 } else { 5 };
            let s: Vec<u64> = (0..sides)
                .map(|i| fresh(Role::Polygon { from: a, to: a2, index: i }, &mut roles))
                .collect();
            for i in 0..s.len() {
                edges.push((s[i], s[(i + 1) % s.len()]));
            }
            edges.push((p, s[0]));
        }
    }
    let graph = UGraph::new(roles.keys().copied(), edges).expect("gadgets are simple");
    Ok(MarkerOutput { graph, roles })
}

fn cycle(vars: &[Var]) -> Vec<Formula> {
    (0..vars.len())
        .map(|i| Formula::edge(vars[i], vars[(i + 1) % vars.len()]))
        .collect()
}

/// `∃ x̄ (distinct(x̄) ∧ matrix)`.
fn exists_distinct(free: &[Var], bound: Vec<Var>, mut matrix: Vec<Formula>) -> Formula {
    let all: Vec<Var> = free.iter().chain(bound.iter()).copied().collect();
    let mut conj = Formula::distinct(&all);
    conj.append(&mut matrix);
    Formula::exists(bound, Formula::and(conj))
}

fn pair_formula(sides: usize) -> Formula {
    let (x, y, p, c) = (Var::new("x"), Var::new("y"), Var::new("p"), Var::new("c"));
    let s: Vec<Var> = (1..=sides).map(|i| Var::indexed("s", i)).collect();
    let mut matrix = vec![Formula::edge(x, p), Formula::edge(p, c), Formula::edge(c, y)];
    matrix.extend(cycle(&s));
    matrix.push(Formula::edge(p, s[0]));
    let mut bound = vec![p, c];
    bound.extend(&s);
    exists_distinct(&[x, y], bound, matrix)
}

/// The decoding formulas `(B(x), Sq(x,y), Pent(x,y))`.
pub fn marker_decoder_formulas() -> (Formula, Formula, Formula) {
    let x = Var::new("x");
    let t: Vec<Var> = (1..=3).map(|i| Var::indexed("t", i)).collect();
    let b = exists_distinct(
        &[x],
        t.clone(),
        vec![
            Formula::edge(x, t[0]),
            Formula::edge(t[0], t[1]),
            Formula::edge(t[1], t[2]),
            Formula::edge(t[0], t[2]),
        ],
    );
    (b, pair_formula(4), pair_formula(5))
}

/// Decodes a graph isomorphic to an encoding back to a digraph on the base points' ids.
pub fn marker_decode(h: &UGraph) -> Result<Digraph> {
    let s = h.to_structure();
    let (bf, sq, pent) = marker_decoder_formulas();
    let (x, y) = (Var::new("x"), Var::new("y"));
    let mut ev = Evaluator::new(&s);
    let mut bases = Vec::new();
    for e in 0..s.size() as u32 {
        if ev.eval(&bf, &[(x, e)])? {
            bases.push(e);
        }
    }
    let mut edges = Vec::new();
    for &u in &bases {
        for &v in &bases {
            if u == v {
                continue;
            }
            let is_sq = ev.eval(&sq, &[(x, u), (y, v)])?;
            let is_pent = ev.eval(&pent, &[(x, u), (y, v)])?;
            match (is_sq, is_pent) {
                (true, false) => edges.push((s.label(u as usize), s.label(v as usize))),
                (false, true) => {}
                (a, b) => {
                    return Err(Error::Malformed(format!(
                        "base points {} and {}: square {a}, pentagon {b}",
                        s.label(u as usize),
                        s.label(v as usize)
                    )))
                }
            }
        }
    }
    Digraph::new(bases.iter().map(|&b| s.label(b as usize)), edges)
}

/// One fact of a graph's open diagram, as read by the stream decoder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InputFact {
    Vertex(u64),
    Edge(u64, u64),
}

impl InputFact {
    /// Parses `v <id>` or `e <u> <v>`; blank and `#` lines give `None`.
    pub fn parse_line(line: &str) -> Result<Option<InputFact>> {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return Ok(None);
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let id = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::parse(format!("`{t}` is not a natural number")))
        };
        match toks.as_slice() {
            ["v", a] => Ok(Some(InputFact::Vertex(id(a)?))),
            ["e", a, b] => Ok(Some(InputFact::Edge(id(a)?, id(b)?))),
            _ => Err(Error::parse(format!("bad fact `{line}`"))),
        }
    }

    /// The facts of `g` in a canonical order: vertices, then edges.
    pub fn diagram(g: &UGraph) -> Vec<InputFact> {
        g.vertices()
            .iter()
            .map(|&v| InputFact::Vertex(v))
            .chain(g.edges().iter().map(|&(u, v)| InputFact::Edge(u, v)))
            .collect()
    }
}

/// A fact of the decoded digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecodedFact {
    Vertex(u64),
    Edge(u64, u64),
    NonEdge(u64, u64),
}

impl DecodedFact {
    /// `v`/`e` lines; non-edges are written as `# ne u v` comments so the output stays a
    /// valid graph file.
    pub fn to_line(&self) -> String {
        match self {
            DecodedFact::Vertex(v) => format!("v {v}"),
            DecodedFact::Edge(u, v) => format!("e {u} {v}"),
            DecodedFact::NonEdge(u, v) => format!("# ne {u} {v}"),
        }
    }
}

/// Incremental decoder. Facts are only ever appended to the output: a base point is emitted
/// once a triangle witness is seen, and a pair verdict once a square or pentagon witness is
/// seen, and existential witnesses persist as the input grows. Input that is not the diagram
/// of an encoding may leave verdicts pending forever.
#[derive(Debug, Clone, Default)]
pub struct StreamDecoder {
    adj: BTreeMap<u64, BTreeSet<u64>>,
    bases: BTreeSet<u64>,
    decided: BTreeSet<(u64, u64)>,
    emitted: Vec<DecodedFact>,
}

impl StreamDecoder {
    pub fn new() -> Self {
        StreamDecoder::default()
    }

    /// Every fact emitted so far, in emission order.
    pub fn emitted(&self) -> &[DecodedFact] {
        &self.emitted
    }

    /// The decoded digraph so far.
    pub fn decoded(&self) -> Digraph {
        let edges = self.emitted.iter().filter_map(|f| match f {
            DecodedFact::Edge(u, v) => Some((*u, *v)),
            _ => None,
        });
        Digraph::new(self.bases.iter().copied(), edges).expect("edges join emitted bases")
    }

    fn neighbors(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    fn adjacent(&self, u: u64, v: u64) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    fn is_base(&self, x: u64) -> bool {
        self.neighbors(x).any(|t1| {
            let ns: Vec<u64> = self.neighbors(t1).filter(|&t| t != x).collect();
            ns.iter()
                .enumerate()
                .any(|(i, &t2)| ns[i + 1..].iter().any(|&t3| self.adjacent(t2, t3)))
        })
    }

    fn closes_cycle(&self, path: &mut Vec<u64>, len: usize, avoid: &[u64]) -> bool {
        let last = *path.last().expect("non-empty path");
        if path.len() == len {
            return self.adjacent(last, path[0]);
        }
        let next: Vec<u64> = self
            .neighbors(last)
            .filter(|n| !path.contains(n) && !avoid.contains(n))
            .collect();
        for n in next {
            path.push(n);
            if self.closes_cycle(path, len, avoid) {
                return true;
            }
            path.pop();
        }
        false
    }

    fn pair_witness(&self, x: u64, y: u64, sides: usize) -> bool {
        self.neighbors(x).filter(|&p| p != y).any(|p| {
            self.neighbors(p)
                .filter(|&c| c != x && c != y && self.adjacent(c, y))
                .any(|c| {
                    let avoid = [x, y, p, c];
                    self.neighbors(p)
                        .filter(|s| !avoid.contains(s))
                        .any(|s1| self.closes_cycle(&mut vec![s1], sides, &avoid))
                })
        })
    }

    fn settle(&mut self) {
        let candidates: Vec<u64> = self
            .adj
            .keys()
            .copied()
            .filter(|v| !self.bases.contains(v))
            .collect();
        for v in candidates {
            if self.is_base(v) {
                self.bases.insert(v);
                self.emitted.push(DecodedFact::Vertex(v));
            }
        }
        let pending: Vec<(u64, u64)> = self
            .bases
            .iter()
            .flat_map(|&u| self.bases.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| u != v && !self.decided.contains(&(u, v)))
            .collect();
        for (u, v) in pending {
            if self.pair_witness(u, v, 4) {
                self.decided.insert((u, v));
                self.emitted.push(DecodedFact::Edge(u, v));
            } else if self.pair_witness(u, v, 5) {
                self.decided.insert((u, v));
                self.emitted.push(DecodedFact::NonEdge(u, v));
            }
        }
    }

    /// Consumes one fact and returns the facts it made decodable.
    pub fn push(&mut self, fact: InputFact) -> Vec<DecodedFact> {
        let before = self.emitted.len();
        match fact {
            InputFact::Vertex(v) => {
                self.adj.entry(v).or_default();
            }
            InputFact::Edge(u, v) if u != v => {
                self.adj.entry(u).or_default().insert(v);
                self.adj.entry(v).or_default().insert(u);
                self.settle();
            }
            InputFact::Edge(..) => {}
        }
        self.emitted[before..].to_vec()
    }
}
