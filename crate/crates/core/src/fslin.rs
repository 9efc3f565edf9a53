//! The Friedman–Stanley ordering `L(G)` of a digraph `G`, queried lazily.
//!
//! Members are sequences `r_0 q_1 r_1 … q_n r_n k` where every `r_i` with `i < n` has colour 0,
//! `r_n` has colour 1, the colours of the `q_i` list distinct vertices of `G` (the mentioned
//! tuple) and the tail `k` is below the index of the mentioned tuple's atomic type. Members are
//! ordered lexicographically with every term read as a rational, so a tail `0` sits below any
//! dyadic and a tail `k ≥ 1` above.
//!
//! Vertices of `G` double as colours, so only vertex ids below [`MAX_VERTEX_COLOR`] have members
//! mentioning them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dyadic::{self, ColorOrderMap, Dyadic, MAX_EXPONENT};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::structure::Digraph;
use crate::symbol::{Sym, Var};
use crate::types::{atomic_type_of, length_offset};

/// Largest vertex id usable as a colour.
pub const MAX_VERTEX_COLOR: u64 = (MAX_EXPONENT - 2) as u64;

/// One term of a candidate sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Nat(u64),
    Dyadic(Dyadic),
}

impl Term {
    fn cmp_term(&self, other: &Term) -> Ordering {
        match (self, other) {
            (Term::Nat(a), Term::Nat(b)) => a.cmp(b),
            (Term::Dyadic(a), Term::Dyadic(b)) => a.cmp(b),
            (Term::Nat(a), Term::Dyadic(_)) => {
                if *a == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Term::Dyadic(_), Term::Nat(b)) => {
                if *b == 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }
}

/// A well-formed sequence `r_0 q_1 r_1 … q_n r_n k`; membership in a particular `L(G)` is
/// checked separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FSElement {
    rs: Vec<Dyadic>,
    qs: Vec<Dyadic>,
    tail: u64,
}

impl FSElement {
    /// `rs` must be one longer than `qs`.
    pub fn new(rs: Vec<Dyadic>, qs: Vec<Dyadic>, tail: u64) -> Result<Self> {
        if rs.len() != qs.len() + 1 {
            return Err(Error::parse(format!(
                "{} r-terms and {} q-terms do not alternate",
                rs.len(),
                qs.len()
            )));
        }
        Ok(FSElement { rs, qs, tail })
    }

    /// Reads `[d, d, …, d, k]`: an odd number of dyadics followed by one natural number.
    pub fn from_terms(terms: &[Term]) -> Result<Self> {
        let Some((Term::Nat(tail), ds)) = terms.split_last() else {
            return Err(Error::parse("a sequence must end with a natural number"));
        };
        if ds.len() % 2 == 0 {
            return Err(Error::parse("a sequence must have even length"));
        }
        let mut rs = Vec::new();
        let mut qs = Vec::new();
        for (i, t) in ds.iter().enumerate() {
            let Term::Dyadic(d) = t else {
                return Err(Error::parse(format!("term {i} must be a dyadic")));
            };
            if i % 2 == 0 {
                rs.push(*d);
            } else {
                qs.push(*d);
            }
        }
        FSElement::new(rs, qs, *tail)
    }

    /// Parses the JSON literal, e.g. `["1/2","5/8","3/4",1]`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let terms: Vec<Term> =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("bad element literal: {e}")))?;
        FSElement::from_terms(&terms)
    }

    pub fn terms(&self) -> Vec<Term> {
        let mut out = Vec::with_capacity(self.len());
        for i in 0..self.rs.len() {
            if i > 0 {
                out.push(Term::Dyadic(self.qs[i - 1]));
            }
            out.push(Term::Dyadic(self.rs[i]));
        }
        out.push(Term::Nat(self.tail));
        out
    }

    fn term(&self, i: usize) -> Term {
        let last = 2 * self.qs.len();
        if i > last {
            Term::Nat(self.tail)
        } else if i % 2 == 0 {
            Term::Dyadic(self.rs[i / 2])
        } else {
            Term::Dyadic(self.qs[i / 2])
        }
    }

    /// Sequence length `2n + 2`.
    pub fn len(&self) -> usize {
        2 * self.qs.len() + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n`, where the length is `2n + 2`.
    pub fn half_length(&self) -> usize {
        self.qs.len()
    }

    pub fn rs(&self) -> &[Dyadic] {
        &self.rs
    }

    pub fn qs(&self) -> &[Dyadic] {
        &self.qs
    }

    pub fn tail(&self) -> u64 {
        self.tail
    }

    pub fn first(&self) -> Dyadic {
        self.rs[0]
    }

    /// The same element with first term `r0`.
    pub fn with_first(&self, r0: Dyadic) -> Self {
        let mut e = self.clone();
        e.rs[0] = r0;
        e
    }

    /// The same element with tail `k`.
    pub fn with_tail(&self, k: u64) -> Self {
        let mut e = self.clone();
        e.tail = k;
        e
    }

    /// Same terms except possibly the tail.
    pub fn same_block_prefix(&self, other: &FSElement) -> bool {
        self.rs == other.rs && self.qs == other.qs
    }

    /// True when the first `len` terms of `self` are those of `prefix`.
    pub fn extends(&self, prefix: &[Term]) -> bool {
        prefix.len() <= self.len() && prefix.iter().enumerate().all(|(i, t)| self.term(i) == *t)
    }
}

impl Ord for FSElement {
    fn cmp(&self, other: &Self) -> Ordering {
        fs_compare(self, other)
    }
}

impl PartialOrd for FSElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|t| match t {
                Term::Nat(k) => k.to_string(),
                Term::Dyadic(d) => format!("\"{d}\""),
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for FSElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FSElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        FSElement::from_terms(&terms).map_err(serde::de::Error::custom)
    }
}

/// Lexicographic comparison with terms read as rationals; a proper prefix comes first.
pub fn fs_compare(x: &FSElement, y: &FSElement) -> Ordering {
    let n = x.len().min(y.len());
    for i in 0..n {
        match x.term(i).cmp_term(&y.term(i)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    x.len().cmp(&y.len())
}

/// The tuple mentioned by `x`: the colours of its q-terms.
pub fn mentions(x: &FSElement) -> Vec<u64> {
    x.qs.iter().map(|q| q.color() as u64).collect()
}

/// Membership of a well-formed sequence in `L(G)`.
pub fn fs_member(g: &Digraph, x: &FSElement) -> Result<bool> {
    let n = x.qs.len();
    if x.rs[..n].iter().any(|r| r.color() != 0) || x.rs[n].color() != 1 {
        return Ok(false);
    }
    let tuple = mentions(x);
    let distinct: BTreeSet<u64> = tuple.iter().copied().collect();
    if distinct.len() != n || !tuple.iter().all(|v| g.has_vertex(*v)) {
        return Ok(false);
    }
    let m = atomic_type_of(g, &tuple)?.index();
    Ok(x.tail < m)
}

/// Membership of a raw term sequence; malformed alternation is a parse error.
pub fn fs_member_terms(g: &Digraph, terms: &[Term]) -> Result<bool> {
    fs_member(g, &FSElement::from_terms(terms)?)
}

fn require_member(g: &Digraph, x: &FSElement) -> Result<()> {
    if fs_member(g, x)? {
        Ok(())
    } else {
        Err(Error::pre(format!("{x} is not a member of L(G)")))
    }
}

/// `(m, k)`: the size of the maximal discrete block containing `x` and `x`'s position in it.
pub fn block_of(g: &Digraph, x: &FSElement) -> Result<(u64, u64)> {
    require_member(g, x)?;
    Ok((atomic_type_of(g, &mentions(x))?.index(), x.tail))
}

/// The members of `x`'s block, in order.
pub fn block_members(g: &Digraph, x: &FSElement) -> Result<Vec<FSElement>> {
    let (m, _) = block_of(g, x)?;
    Ok((0..m).map(|k| x.with_tail(k)).collect())
}

fn first_divergence(x: &FSElement, y: &FSElement) -> usize {
    (0..x.len().min(y.len()))
        .find(|&i| x.term(i) != y.term(i))
        .unwrap_or(x.len().min(y.len()))
}

/// The least half-length `k` of a member of `[x, y]`, with a canonical witness of length
/// `2k + 2`.
///
/// Let `j` be the first position where `x` and `y` differ. When `j = 2i` the terms there are
/// `r_i` of both, and the colour-1 dyadic between them gives a member of half-length `i`; no
/// member of the interval is shorter since all extend the common prefix. When `j = 2i + 1` and
/// both tails sit there, the interval lies inside one block of half-length `i` and `x` is the
/// witness. Otherwise both have a `q_{i+1}` there and the witness picks the least vertex not yet
/// mentioned, with the canonical dyadic of that colour between the two q-terms.
pub fn min_length_in_interval(g: &Digraph, x: &FSElement, y: &FSElement) -> Result<(usize, FSElement)> {
    require_member(g, x)?;
    require_member(g, y)?;
    if fs_compare(x, y) != Ordering::Less {
        return Err(Error::Order(format!("{x} is not below {y}")));
    }
    let j = first_divergence(x, y);
    let i = j / 2;
    if j % 2 == 0 {
        let (Term::Dyadic(a), Term::Dyadic(b)) = (x.term(j), y.term(j)) else {
            unreachable!("even positions of members hold r-terms");
        };
        let r = dyadic::between(a, b, 1)?;
        let mut rs = x.rs[..i].to_vec();
        rs.push(r);
        let d = FSElement::new(rs, x.qs[..i].to_vec(), 0)?;
        return Ok((i, d));
    }
    match (x.term(j), y.term(j)) {
        (Term::Nat(_), _) => Ok((i, x.clone())),
        (Term::Dyadic(a), Term::Dyadic(b)) => {
            let used: BTreeSet<u64> = mentions(x)[..i].iter().copied().collect();
            let vertex = g
                .vertices()
                .iter()
                .copied()
                .find(|v| !used.contains(v))
                .expect("x mentions a vertex outside its prefix");
            if vertex > MAX_VERTEX_COLOR {
                return Err(Error::TooLarge(format!("vertex {vertex} used as a colour")));
            }
            let q = dyadic::between(a, b, vertex as u32)?;
            let mut rs = x.rs[..=i].to_vec();
            rs.push(dyadic::first_of_color(1)?);
            let mut qs = x.qs[..i].to_vec();
            qs.push(q);
            Ok((i + 1, FSElement::new(rs, qs, 0)?))
        }
        _ => unreachable!("tails of members align"),
    }
}

/// Size of an open interval between consecutive tuple members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gap {
    Finite(u64),
    Infinite,
}

/// The invariant of a tuple that, together with the mentioned tuples, fixes its back-and-forth
/// class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shape {
    /// `order[i]` is the tuple position of the `i`-th smallest entry.
    pub order: Vec<usize>,
    /// Gap between the `i`-th and `(i+1)`-th smallest entries.
    pub gaps: Vec<Gap>,
    /// `(block size, position)` per entry, in tuple order.
    pub blocks: Vec<(u64, u64)>,
    /// Sequence length per entry, in tuple order.
    pub lengths: Vec<usize>,
    /// Least half-length in the closed interval between consecutive smallest entries.
    pub min_half_lengths: Vec<usize>,
}

pub fn shape(g: &Digraph, t: &[FSElement]) -> Result<Shape> {
    for (i, x) in t.iter().enumerate() {
        require_member(g, x)?;
        if t[..i].contains(x) {
            return Err(Error::pre(format!("{x} occurs twice in the tuple")));
        }
    }
    let mut order: Vec<usize> = (0..t.len()).collect();
    order.sort_by(|&a, &b| fs_compare(&t[a], &t[b]));
    let mut gaps = Vec::new();
    let mut min_half_lengths = Vec::new();
    for w in order.windows(2) {
        let (a, b) = (&t[w[0]], &t[w[1]]);
        gaps.push(if a.same_block_prefix(b) {
            Gap::Finite(b.tail - a.tail - 1)
        } else {
            Gap::Infinite
        });
        min_half_lengths.push(min_length_in_interval(g, a, b)?.0);
    }
    let blocks = t.iter().map(|x| block_of(g, x)).collect::<Result<Vec<_>>>()?;
    let lengths = t.iter().map(FSElement::len).collect();
    Ok(Shape { order, gaps, blocks, lengths, min_half_lengths })
}

/// Largest half-length for which length formulas are generated.
pub const MAX_FORMULA_HALF_LENGTH: usize = 3;

/// Σ and Π definitions of a shape in the language of linear orders, over variables
/// `x1, …, xn`, plus the named components they are assembled from.
#[derive(Debug, Clone)]
pub struct ShapeFormulas {
    pub sigma: Formula,
    pub pi: Formula,
    pub components: Vec<(String, Formula)>,
}

struct Fresh(usize);

impl Fresh {
    fn var(&mut self) -> Var {
        self.0 += 1;
        Var::indexed("z", self.0)
    }

    fn vars(&mut self, n: usize) -> Vec<Var> {
        (0..n).map(|_| self.var()).collect()
    }
}

fn lt(a: Var, b: Var) -> Formula {
    Formula::rel(Sym::less(), vec![a, b])
}

fn le(a: Var, b: Var) -> Formula {
    Formula::or(vec![lt(a, b), Formula::eq(a, b)])
}

fn succ(fresh: &mut Fresh, a: Var, b: Var) -> Formula {
    let w = fresh.var();
    Formula::and(vec![
        lt(a, b),
        Formula::not(Formula::exists(vec![w], Formula::and(vec![lt(a, w), lt(w, b)]))),
    ])
}

fn chain(fresh: &mut Fresh, us: &[Var]) -> Vec<Formula> {
    us.windows(2).map(|w| succ(fresh, w[0], w[1])).collect()
}

fn no_pred(fresh: &mut Fresh, u: Var) -> Formula {
    let (w, v) = (fresh.var(), fresh.var());
    Formula::forall(
        vec![w],
        Formula::or(vec![
            Formula::not(lt(w, u)),
            Formula::exists(vec![v], Formula::and(vec![lt(w, v), lt(v, u)])),
        ]),
    )
}

fn no_succ(fresh: &mut Fresh, u: Var) -> Formula {
    let (w, v) = (fresh.var(), fresh.var());
    Formula::forall(
        vec![w],
        Formula::or(vec![
            Formula::not(lt(u, w)),
            Formula::exists(vec![v], Formula::and(vec![lt(u, v), lt(v, w)])),
        ]),
    )
}

/// `x` lies in a run of at least `lo` consecutive elements (Σ2; `true` when `lo ≤ 1`).
fn size_at_least(fresh: &mut Fresh, x: Var, lo: u64) -> Formula {
    if lo <= 1 {
        return Formula::truth();
    }
    let us = fresh.vars(lo as usize);
    let mut conj = chain(fresh, &us);
    conj.push(Formula::or(us.iter().map(|&u| Formula::eq(u, x)).collect()));
    Formula::exists(us, Formula::and(conj))
}

/// `x`'s maximal discrete interval has between `lo` and `hi` elements (Π3 as written).
fn size_between(fresh: &mut Fresh, x: Var, lo: u64, hi: u64) -> Formula {
    Formula::and(vec![
        size_at_least(fresh, x, lo),
        Formula::not(size_at_least(fresh, x, hi + 1)),
    ])
}

fn type_index_range(half: usize) -> Result<(u64, u64)> {
    if half > MAX_FORMULA_HALF_LENGTH {
        return Err(Error::TooLarge(format!(
            "length formulas are generated up to half-length {MAX_FORMULA_HALF_LENGTH}"
        )));
    }
    Ok((length_offset(half)?, length_offset(half + 1)? - 1))
}

/// An existential component kept as bound variables plus matrix, so the Σ bundle can pull all
/// existentials to the front.
struct SigmaPart {
    vars: Vec<Var>,
    matrix: Formula,
}

impl SigmaPart {
    fn formula(&self) -> Formula {
        Formula::exists(self.vars.clone(), self.matrix.clone())
    }
}

/// Formulas saying that `x1, …, xn` has shape `s`.
pub fn shape_formulas(s: &Shape) -> Result<ShapeFormulas> {
    let n = s.blocks.len();
    let xs: Vec<Var> = (1..=n).map(|i| Var::indexed("x", i)).collect();
    let mut fresh = Fresh(0);
    let mut components: Vec<(String, Formula)> = Vec::new();
    let mut sigma_parts: Vec<SigmaPart> = Vec::new();
    let mut plain: Vec<Formula> = Vec::new();

    let order = Formula::and(
        s.order.windows(2).map(|w| lt(xs[w[0]], xs[w[1]])).collect(),
    );
    components.push(("order".into(), order.clone()));
    plain.push(order);

    for (i, gap) in s.gaps.iter().enumerate() {
        let (a, b) = (xs[s.order[i]], xs[s.order[i + 1]]);
        match *gap {
            Gap::Finite(size) => {
                let at_least = fresh.vars(size as usize);
                let mut m = Formula::distinct(&at_least);
                m.extend(at_least.iter().flat_map(|&z| [lt(a, z), lt(z, b)]));
                let part = SigmaPart { vars: at_least, matrix: Formula::and(m) };
                let more = fresh.vars(size as usize + 1);
                let mut m = Formula::distinct(&more);
                m.extend(more.iter().flat_map(|&z| [lt(a, z), lt(z, b)]));
                let not_more = Formula::not(Formula::exists(more, Formula::and(m)));
                components.push((
                    format!("gap[{i}]"),
                    Formula::and(vec![part.formula(), not_more.clone()]),
                ));
                sigma_parts.push(part);
                plain.push(not_more);
            }
            Gap::Infinite => {
                let z = fresh.var();
                let matrix = Formula::and(vec![lt(a, z), le(z, b), no_pred(&mut fresh, z)]);
                let part = SigmaPart { vars: vec![z], matrix };
                components.push((format!("gap[{i}]"), part.formula()));
                sigma_parts.push(part);
            }
        }
    }

    for (i, &(m, k)) in s.blocks.iter().enumerate() {
        let x = xs[i];
        let mut us = fresh.vars(m as usize);
        us[k as usize] = x;
        let bound: Vec<Var> = us.iter().copied().filter(|&u| u != x).collect();
        let mut conj = chain(&mut fresh, &us);
        conj.push(no_pred(&mut fresh, us[0]));
        conj.push(no_succ(&mut fresh, us[m as usize - 1]));
        let part = SigmaPart { vars: bound, matrix: Formula::and(conj) };
        components.push((format!("block[{i}]"), part.formula()));
        sigma_parts.push(part);
    }

    for (i, &len) in s.lengths.iter().enumerate() {
        let (lo, hi) = type_index_range((len - 2) / 2)?;
        let f = size_between(&mut fresh, xs[i], lo, hi);
        components.push((format!("length[{i}]"), f.clone()));
        plain.push(f);
    }

    for (i, &k) in s.min_half_lengths.iter().enumerate() {
        let (a, b) = (xs[s.order[i]], xs[s.order[i + 1]]);
        let (lo, hi) = type_index_range(k)?;
        if lo > 1 {
            let z = fresh.var();
            let bound = Formula::forall(
                vec![z],
                Formula::or(vec![
                    Formula::not(Formula::and(vec![le(a, z), le(z, b)])),
                    size_at_least(&mut fresh, z, lo),
                ]),
            );
            components.push((format!("min_length_lower[{i}]"), bound.clone()));
            plain.push(bound);
        }
        let z = fresh.var();
        let matrix = Formula::and(vec![
            le(a, z),
            le(z, b),
            Formula::not(size_at_least(&mut fresh, z, hi + 1)),
        ]);
        let part = SigmaPart { vars: vec![z], matrix };
        components.push((format!("min_length_attained[{i}]"), part.formula()));
        sigma_parts.push(part);
    }

    let mut sigma_vars = Vec::new();
    let mut sigma_matrix = plain.clone();
    for p in &sigma_parts {
        sigma_vars.extend(p.vars.iter().copied());
        sigma_matrix.push(p.matrix.clone());
    }
    let sigma = Formula::exists(sigma_vars, Formula::and(sigma_matrix));
    let mut pi_conj = plain;
    pi_conj.extend(sigma_parts.iter().map(SigmaPart::formula));
    let pi = Formula::and(pi_conj);
    Ok(ShapeFormulas { sigma, pi, components })
}

/// `x` with its first term replaced by its image under `f`.
pub fn apply_first_coord_map(f: &mut ColorOrderMap, x: &FSElement) -> Result<FSElement> {
    Ok(x.with_first(f.extend_map(x.first())?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Result of moving a tuple past a fixed element by a first-coordinate automorphism.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Shifted {
    pub tuple: Vec<FSElement>,
    /// A member of length 2 strictly between the fixed element and the moved tuple.
    pub separator: FSElement,
    /// The seed pair `(source, image)` of the automorphism.
    pub seed: (Dyadic, Dyadic),
}

/// Moves `t` strictly to the chosen side of `c` with a length-2 member in between.
///
/// With `r` the first term of `c`: for the right side the first term `p` of the least entry is
/// sent to the canonical dyadic of `p`'s colour above `r`, and the separator is the colour-1
/// dyadic between `r` and that image; the left side is the mirror image.
pub fn shift_tuple(g: &Digraph, t: &[FSElement], c: &FSElement, side: Side) -> Result<Shifted> {
    require_member(g, c)?;
    for x in t {
        require_member(g, x)?;
    }
    let r = c.first();
    let (seed, sep) = match side {
        Side::Right => {
            let p = t.iter().min().ok_or_else(|| Error::pre("empty tuple"))?.first();
            let image = dyadic::above(r, p.color())?;
            (p, dyadic::between(r, image, 1)?)
        }
        Side::Left => {
            let p = t.iter().max().ok_or_else(|| Error::pre("empty tuple"))?.first();
            let image = dyadic::below(r, p.color())?;
            (p, dyadic::between(image, r, 1)?)
        }
    };
    let image = match side {
        Side::Right => dyadic::above(r, seed.color())?,
        Side::Left => dyadic::below(r, seed.color())?,
    };
    let mut f = ColorOrderMap::new([(seed, image)])?;
    let tuple = t
        .iter()
        .map(|x| apply_first_coord_map(&mut f, x))
        .collect::<Result<Vec<_>>>()?;
    let separator = FSElement::new(vec![sep], Vec::new(), 0)?;
    Ok(Shifted { tuple, separator, seed: (seed, image) })
}

fn distinct_tuples(vertices: &[u64], n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for &v in vertices {
                if !t.contains(&v) {
                    let mut u = t.clone();
                    u.push(v);
                    next.push(u);
                }
            }
        }
        out = next;
    }
    out
}

/// All members with half-length at most `max_half_len` and every dyadic term of exponent at
/// most `max_exponent`, in increasing order.
pub fn fs_enumerate(g: &Digraph, max_half_len: usize, max_exponent: u32) -> Result<Vec<FSElement>> {
    let all = Dyadic::all_up_to(max_exponent);
    let of_color = |c: u64| -> Vec<Dyadic> { all.iter().copied().filter(|d| d.color() as u64 == c).collect() };
    let zeros = of_color(0);
    let ones = of_color(1);
    let vertices: Vec<u64> = g.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for n in 0..=max_half_len.min(vertices.len()) {
        for tuple in distinct_tuples(&vertices, n) {
            let m = atomic_type_of(g, &tuple)?.index();
            let q_choices: Vec<Vec<Dyadic>> = tuple.iter().map(|&a| of_color(a)).collect();
            if q_choices.iter().any(Vec::is_empty) || ones.is_empty() || (n > 0 && zeros.is_empty()) {
                continue;
            }
            let mut prefixes: Vec<(Vec<Dyadic>, Vec<Dyadic>)> = vec![(Vec::new(), Vec::new())];
            for qc in &q_choices {
                let mut next = Vec::new();
                for (rs, qs) in &prefixes {
                    for &r in &zeros {
                        for &q in qc {
                            let (mut rs, mut qs) = (rs.clone(), qs.clone());
                            rs.push(r);
                            qs.push(q);
                            next.push((rs, qs));
                        }
                    }
                }
                prefixes = next;
            }
            for (rs, qs) in &prefixes {
                for &r in &ones {
                    let mut rs = rs.clone();
                    rs.push(r);
                    for k in 0..m {
                        out.push(FSElement { rs: rs.clone(), qs: qs.clone(), tail: k });
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Block sizes observed in a sorted fragment, as maximal runs of members differing only in the
/// tail.
pub fn fragment_signature(fragment: &[FSElement]) -> BTreeSet<u64> {
    let mut sizes = BTreeSet::new();
    let mut i = 0;
    while i < fragment.len() {
        let mut j = i + 1;
        while j < fragment.len() && fragment[j].same_block_prefix(&fragment[i]) {
            j += 1;
        }
        sizes.insert((j - i) as u64);
        i = j;
    }
    sizes
}

/// A uniformly chosen member of half-length at most `max_half_len` (capped by `|G|`) whose
/// dyadic terms have exponent at most `max_exponent`.
pub fn random_member<R: Rng>(g: &Digraph, rng: &mut R, max_half_len: usize, max_exponent: u32) -> Result<FSElement> {
    let vertices: Vec<u64> = g.vertices().iter().copied().collect();
    let all = Dyadic::all_up_to(max_exponent);
    let pick = |rng: &mut R, c: u64| -> Result<Dyadic> {
        let pool: Vec<Dyadic> = all.iter().copied().filter(|d| d.color() as u64 == c).collect();
        if pool.is_empty() {
            return Err(Error::pre(format!("no dyadic of colour {c} with exponent ≤ {max_exponent}")));
        }
        Ok(pool[rng.gen_range(0..pool.len())])
    };
    let n = rng.gen_range(0..=max_half_len.min(vertices.len()));
    let mut pool = vertices.clone();
    let mut tuple = Vec::new();
    for _ in 0..n {
        tuple.push(pool.swap_remove(rng.gen_range(0..pool.len())));
    }
    let mut rs = Vec::new();
    let mut qs = Vec::new();
    for &a in &tuple {
        rs.push(pick(rng, 0)?);
        qs.push(pick(rng, a)?);
    }
    rs.push(pick(rng, 1)?);
    let m = atomic_type_of(g, &tuple)?.index();
    let tail = rng.gen_range(0..m);
    FSElement::new(rs, qs, tail)
}
