//! Finite-level back-and-forth relations `∼^γ`, the formulas defining them, and sound
//! certificates for tuples of `L(G)`.
//!
//! On finite structures `(A, ā) ∼^γ (B, b̄)` depends only on the partial map `a_i ↦ b_i`, so the
//! solver memoizes on that map. A move adds a set of elements outside the current domain (or
//! range); repeated elements and elements already in the tuple are forced by equality atoms and
//! add nothing. The answer is an injection, built one element at a time and pruned as soon as the
//! extended map stops being a partial isomorphism.

use std::collections::BTreeSet;

use rustc_hash::FxHashMap as HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fslin::{self, FSElement, Gap, Shape};
use crate::formula::Formula;
use crate::structure::{Digraph, FinLinOrder, Signature, Structure};
use crate::symbol::Var;

/// A question `(A, ā) ∼^γ (B, b̄)`; tuples are element indices.
#[derive(Debug, Clone)]
pub struct EquivQuery<'a> {
    pub a: &'a Structure,
    pub ta: Vec<u32>,
    pub b: &'a Structure,
    pub tb: Vec<u32>,
    pub gamma: u32,
    /// Longest move tuple; must be at least `max(|A|, |B|)`.
    pub bound: usize,
}

impl<'a> EquivQuery<'a> {
    /// A query with the smallest accepted move bound.
    pub fn new(a: &'a Structure, ta: Vec<u32>, b: &'a Structure, tb: Vec<u32>, gamma: u32) -> Self {
        let bound = a.size().max(b.size());
        EquivQuery { a, ta, b, tb, gamma, bound }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }
}

/// Which structure a spoiler move is played in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveSide {
    Left,
    Right,
}

/// A spoiler move with no answer keeping the tuples equivalent at the level below.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub side: MoveSide,
    /// Element indices in the structure named by `side`.
    pub elements: Vec<u32>,
}

type Map = Vec<(u32, u32)>;

/// Memoized decision procedure for one pair of structures.
pub struct BfSolver<'a> {
    a: &'a Structure,
    b: &'a Structure,
    bound: usize,
    memo: HashMap<(u32, Map), bool>,
}

impl<'a> BfSolver<'a> {
    pub fn new(a: &'a Structure, b: &'a Structure, bound: usize) -> Result<Self> {
        if a.signature() != b.signature() {
            return Err(Error::Signature("the structures have different signatures".into()));
        }
        let need = a.size().max(b.size());
        if bound < need {
            return Err(Error::Refused(format!(
                "move bound {bound} is below the structure size {need}"
            )));
        }
        Ok(BfSolver { a, b, bound, memo: HashMap::default() })
    }

    fn initial_map(&self, ta: &[u32], tb: &[u32]) -> Result<Option<Map>> {
        if ta.len() != tb.len() {
            return Err(Error::pre(format!("tuples of lengths {} and {}", ta.len(), tb.len())));
        }
        for &x in ta {
            if x as usize >= self.a.size() {
                return Err(Error::pre(format!("element {x} is outside the left structure")));
            }
        }
        for &y in tb {
            if y as usize >= self.b.size() {
                return Err(Error::pre(format!("element {y} is outside the right structure")));
            }
        }
        for i in 0..ta.len() {
            for j in 0..i {
                if (ta[i] == ta[j]) != (tb[i] == tb[j]) {
                    return Ok(None);
                }
            }
        }
        let mut map: Map = ta.iter().copied().zip(tb.iter().copied()).collect();
        map.sort_unstable();
        map.dedup();
        Ok(Some(map))
    }

    pub fn equiv(&mut self, ta: &[u32], tb: &[u32], gamma: u32) -> Result<bool> {
        Ok(match self.initial_map(ta, tb)? {
            Some(map) => self.holds(&map, gamma),
            None => false,
        })
    }

    /// A winning spoiler move, when the tuples are not equivalent at a positive level.
    pub fn explain(&mut self, ta: &[u32], tb: &[u32], gamma: u32) -> Result<Option<Move>> {
        let Some(map) = self.initial_map(ta, tb)? else {
            return Ok(None);
        };
        if gamma == 0 || !self.is_partial_iso(&map) {
            return Ok(None);
        }
        Ok(self.failing_move(&map, gamma))
    }

    fn is_partial_iso(&self, map: &Map) -> bool {
        partial_iso(self.a, self.b, map)
    }

    fn holds(&mut self, map: &Map, gamma: u32) -> bool {
        if !self.is_partial_iso(map) {
            return false;
        }
        if gamma == 0 || (map.len() == self.a.size() && map.len() == self.b.size()) {
            return true;
        }
        if let Some(&v) = self.memo.get(&(gamma, map.clone())) {
            return v;
        }
        let v = self.failing_move(map, gamma).is_none();
        self.memo.insert((gamma, map.clone()), v);
        v
    }

    fn failing_move(&mut self, map: &Map, gamma: u32) -> Option<Move> {
        let dom: BTreeSet<u32> = map.iter().map(|p| p.0).collect();
        let ran: BTreeSet<u32> = map.iter().map(|p| p.1).collect();
        let free_a: Vec<u32> = (0..self.a.size() as u32).filter(|x| !dom.contains(x)).collect();
        let free_b: Vec<u32> = (0..self.b.size() as u32).filter(|y| !ran.contains(y)).collect();
        for side in [MoveSide::Left, MoveSide::Right] {
            let (mine, theirs) = match side {
                MoveSide::Left => (&free_a, &free_b),
                MoveSide::Right => (&free_b, &free_a),
            };
            for set in subsets_largest_first(mine, self.bound) {
                let mut ext = map.clone();
                if !self.answer(&mut ext, side, &set, 0, theirs, &mut vec![false; theirs.len()], gamma - 1) {
                    return Some(Move { side, elements: set });
                }
            }
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn answer(
        &mut self,
        ext: &mut Map,
        side: MoveSide,
        set: &[u32],
        i: usize,
        pool: &[u32],
        used: &mut Vec<bool>,
        beta: u32,
    ) -> bool {
        if i == set.len() {
            let mut m = ext.clone();
            m.sort_unstable();
            return self.holds(&m, beta);
        }
        for (j, &cand) in pool.iter().enumerate() {
            if used[j] {
                continue;
            }
            let pair = match side {
                MoveSide::Left => (set[i], cand),
                MoveSide::Right => (cand, set[i]),
            };
            ext.push(pair);
            if self.is_partial_iso(ext) {
                used[j] = true;
                let ok = self.answer(ext, side, set, i + 1, pool, used, beta);
                used[j] = false;
                if ok {
                    ext.pop();
                    return true;
                }
            }
            ext.pop();
        }
        false
    }
}

fn partial_iso(a: &Structure, b: &Structure, map: &[(u32, u32)]) -> bool {
    let mut fwd = vec![u32::MAX; a.size()];
    let mut in_ran = vec![false; b.size()];
    for &(x, y) in map {
        if fwd[x as usize] != u32::MAX && fwd[x as usize] != y {
            return false;
        }
        fwd[x as usize] = y;
        in_ran[y as usize] = true;
    }
    if fwd.iter().filter(|&&y| y != u32::MAX).count() != in_ran.iter().filter(|&&b| b).count() {
        return false;
    }
    (0..a.signature().symbols().len()).all(|r| {
        let (ra, rb) = (a.relation(r), b.relation(r));
        let mut inside = 0;
        for t in ra.tuples() {
            if t.iter().all(|&x| fwd[x as usize] != u32::MAX) {
                let img: Vec<u32> = t.iter().map(|&x| fwd[x as usize]).collect();
                if !rb.contains(&img) {
                    return false;
                }
                inside += 1;
            }
        }
        let inside_b = rb.tuples().iter().filter(|t| t.iter().all(|&y| in_ran[y as usize])).count();
        inside == inside_b
    })
}

fn subsets_largest_first(items: &[u32], bound: usize) -> Vec<Vec<u32>> {
    let n = items.len();
    let mut out: Vec<Vec<u32>> = (1u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| items[i]).collect::<Vec<_>>())
        .filter(|s: &Vec<u32>| s.len() <= bound)
        .collect();
    out.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    out
}

/// Decides `(A, ā) ∼^γ (B, b̄)`.
pub fn bf_equiv(q: &EquivQuery) -> Result<bool> {
    BfSolver::new(q.a, q.b, q.bound)?.equiv(&q.ta, &q.tb, q.gamma)
}

/// A spoiler move witnessing non-equivalence at level `γ ≥ 1`, if there is one at that level.
pub fn bf_explain(q: &EquivQuery) -> Result<Option<Move>> {
    BfSolver::new(q.a, q.b, q.bound)?.explain(&q.ta, &q.tb, q.gamma)
}

/// The definition read literally: every `β < γ`, every move tuple of length at most `move_len`
/// with repetitions allowed, every answer tuple. Exponential; meant as a reference for small
/// inputs.
pub fn bf_equiv_literal(
    a: &Structure,
    ta: &[u32],
    b: &Structure,
    tb: &[u32],
    gamma: u32,
    move_len: usize,
) -> Result<bool> {
    if a.signature() != b.signature() {
        return Err(Error::Signature("the structures have different signatures".into()));
    }
    if ta.len() != tb.len() {
        return Err(Error::pre("tuples of different lengths"));
    }
    let mut memo = HashMap::default();
    Ok(literal(a, ta, b, tb, gamma, move_len, &mut memo))
}

type LiteralMemo = HashMap<(u32, Vec<u32>, Vec<u32>), bool>;

fn same_atomic(a: &Structure, ta: &[u32], b: &Structure, tb: &[u32]) -> bool {
    for i in 0..ta.len() {
        for j in 0..i {
            if (ta[i] == ta[j]) != (tb[i] == tb[j]) {
                return false;
            }
        }
    }
    let map: Vec<(u32, u32)> = ta.iter().copied().zip(tb.iter().copied()).collect();
    partial_iso(a, b, &map)
}

fn literal(a: &Structure, ta: &[u32], b: &Structure, tb: &[u32], gamma: u32, len: usize, memo: &mut LiteralMemo) -> bool {
    if !same_atomic(a, ta, b, tb) {
        return false;
    }
    if gamma == 0 {
        return true;
    }
    let key = (gamma, ta.to_vec(), tb.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut v = true;
    'levels: for beta in 0..gamma {
        for (x, tx, y, ty, flip) in [(a, ta, b, tb, false), (b, tb, a, ta, true)] {
            for k in 1..=len {
                for c in all_tuples(x.size(), k) {
                    let mut sx = tx.to_vec();
                    sx.extend(&c);
                    let found = find_answer(y, ty, x, &sx, k, beta, len, flip, memo);
                    if !found {
                        v = false;
                        break 'levels;
                    }
                }
            }
        }
    }
    memo.insert(key, v);
    v
}

#[allow(clippy::too_many_arguments)]
fn find_answer(
    y: &Structure,
    ty: &[u32],
    x: &Structure,
    sx: &[u32],
    k: usize,
    beta: u32,
    len: usize,
    flip: bool,
    memo: &mut LiteralMemo,
) -> bool {
    let mut d = ty.to_vec();
    fn go(
        y: &Structure,
        d: &mut Vec<u32>,
        x: &Structure,
        sx: &[u32],
        remaining: usize,
        beta: u32,
        len: usize,
        flip: bool,
        memo: &mut LiteralMemo,
    ) -> bool {
        let prefix = &sx[..d.len()];
        let consistent = if flip { same_atomic(y, d, x, prefix) } else { same_atomic(x, prefix, y, d) };
        if !consistent {
            return false;
        }
        if remaining == 0 {
            return if flip {
                literal(y, d, x, sx, beta, len, memo)
            } else {
                literal(x, sx, y, d, beta, len, memo)
            };
        }
        for e in 0..y.size() as u32 {
            d.push(e);
            let ok = go(y, d, x, sx, remaining - 1, beta, len, flip, memo);
            d.pop();
            if ok {
                return true;
            }
        }
        false
    }
    go(y, &mut d, x, sx, k, beta, len, flip, memo)
}

fn all_tuples(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n as u32).map(move |e| {
                    let mut u = t.clone();
                    u.push(e);
                    u
                })
            })
            .collect();
    }
    out
}

fn var(prefix: &str, i: usize) -> Var {
    Var::indexed(prefix, i)
}

fn position_tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    all_tuples(n, arity).into_iter().map(|t| t.into_iter().map(|i| i as usize).collect()).collect()
}

/// `new` pairwise distinct and distinct from `old`.
fn fresh_relativization(new: &[Var], old: &[Var]) -> Formula {
    let mut conj = Formula::distinct(new);
    for &n in new {
        for &o in old {
            conj.push(Formula::neq(n, o));
        }
    }
    Formula::and(conj)
}

fn ordered_tuples(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            for &x in items {
                if !t.contains(&x) {
                    let mut u = t.clone();
                    u.push(x);
                    next.push(u);
                }
            }
        }
        out = next;
    }
    out
}

/// Generator of the formulas `φ^γ_ā(x̄)` defining `∼^γ`-classes of tuples in one structure.
///
/// Formulas for distinct tuples are memoized and shared, with variable `x_i` standing for the
/// `i`-th entry, so the formulas for a tuple and its extensions form one DAG.
pub struct TupleFormulas<'a> {
    a: &'a Structure,
    bound: usize,
    memo: HashMap<(u32, Vec<u32>), Formula>,
}

impl<'a> TupleFormulas<'a> {
    pub fn new(a: &'a Structure, bound: usize) -> Self {
        TupleFormulas { a, bound, memo: HashMap::default() }
    }

    fn distinct_formula(&mut self, gamma: u32, t: &[u32]) -> Formula {
        let key = (gamma, t.to_vec());
        if let Some(f) = self.memo.get(&key) {
            return f.clone();
        }
        let n = t.len();
        let xs: Vec<Var> = (0..n).map(|i| var("x", i)).collect();
        let f = if gamma == 0 {
            let mut lits = Vec::new();
            for (r, &(sym, arity)) in self.a.signature().symbols().iter().enumerate() {
                for p in position_tuples(n, arity) {
                    let args: Vec<Var> = p.iter().map(|&i| xs[i]).collect();
                    let vals: Vec<u32> = p.iter().map(|&i| t[i]).collect();
                    let atom = Formula::rel(sym, args);
                    lits.push(if self.a.relation(r).contains(&vals) { atom } else { Formula::not(atom) });
                }
            }
            Formula::and(lits)
        } else {
            let free: Vec<u32> = (0..self.a.size() as u32).filter(|x| !t.contains(x)).collect();
            let mut conj = Vec::new();
            let mut sets: Vec<Vec<u32>> = vec![Vec::new()];
            sets.extend(subsets_largest_first(&free, self.bound));
            sets.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
            for c in sets {
                let ys: Vec<Var> = (n..n + c.len()).map(|i| var("x", i)).collect();
                let mut ext = t.to_vec();
                ext.extend(&c);
                let body = self.distinct_formula(gamma - 1, &ext);
                conj.push(Formula::exists(
                    ys.clone(),
                    Formula::and(vec![fresh_relativization(&ys, &xs), body]),
                ));
            }
            for k in 1..=self.bound {
                let ys: Vec<Var> = (n..n + k).map(|i| var("x", i)).collect();
                let mut disj = Vec::new();
                for c in ordered_tuples(&free, k) {
                    let mut ext = t.to_vec();
                    ext.extend(&c);
                    disj.push(self.distinct_formula(gamma - 1, &ext));
                }
                conj.push(Formula::forall(
                    ys.clone(),
                    Formula::implies(fresh_relativization(&ys, &xs), Formula::or(disj)),
                ));
            }
            Formula::and(conj)
        };
        self.memo.insert(key, f.clone());
        f
    }

    /// `φ^γ_ā(x_0, …, x_{n-1})`; `ā` may repeat elements.
    pub fn formula(&mut self, t: &[u32], gamma: u32) -> Result<Formula> {
        if let Some(&x) = t.iter().find(|&&x| x as usize >= self.a.size()) {
            return Err(Error::pre(format!("element {x} is outside the structure")));
        }
        let n = t.len();
        let mut firsts: Vec<usize> = Vec::new();
        let mut distinct: Vec<u32> = Vec::new();
        for (i, &x) in t.iter().enumerate() {
            if !distinct.contains(&x) {
                distinct.push(x);
                firsts.push(i);
            }
        }
        let mut lits = Vec::new();
        for i in 0..n {
            for j in 0..i {
                let e = Formula::eq(var("x", j), var("x", i));
                lits.push(if t[i] == t[j] { e } else { Formula::not(e) });
            }
        }
        let mut body = self.distinct_formula(gamma, &distinct);
        let m = distinct.len();
        if m < n {
            let firsts = firsts.clone();
            let names: Vec<(Var, usize)> = (0..m + self.bound * (gamma as usize + 1) + 1)
                .map(|i| (var("x", i), i))
                .collect();
            let lookup: HashMap<Var, usize> = names.into_iter().collect();
            body = body.rename(&|v: Var| match lookup.get(&v) {
                Some(&i) if i < m => var("x", firsts[i]),
                Some(&i) => var("x", i + n - m),
                None => v,
            });
        }
        lits.push(body);
        Ok(Formula::and(lits))
    }
}

/// `φ^γ_ā(x̄)`: a formula true of `b̄` in `A` exactly when `ā ∼^γ b̄`, with tuple moves of length
/// at most `bound`.
pub fn phi_tuple(a: &Structure, t: &[u32], gamma: u32, bound: usize) -> Result<Formula> {
    TupleFormulas::new(a, bound).formula(t, gamma)
}

/// Generator of the structure-independent formulas `φ^γ(x̄, ȳ)`.
pub struct PairFormulas {
    signature: Signature,
    bound: usize,
    memo: HashMap<(u32, usize), Formula>,
}

impl PairFormulas {
    pub fn new(signature: Signature, bound: usize) -> Self {
        PairFormulas { signature, bound, memo: HashMap::default() }
    }

    /// `φ^γ(x_0, …, x_{m-1}, y_0, …, y_{m-1})`.
    pub fn formula(&mut self, m: usize, gamma: u32) -> Formula {
        if let Some(f) = self.memo.get(&(gamma, m)) {
            return f.clone();
        }
        let xs: Vec<Var> = (0..m).map(|i| var("x", i)).collect();
        let ys: Vec<Var> = (0..m).map(|i| var("y", i)).collect();
        let f = if gamma == 0 {
            let mut conj = Vec::new();
            for &(sym, arity) in self.signature.symbols() {
                for p in position_tuples(m, arity) {
                    conj.push(Formula::iff(
                        Formula::rel(sym, p.iter().map(|&i| xs[i]).collect()),
                        Formula::rel(sym, p.iter().map(|&i| ys[i]).collect()),
                    ));
                }
            }
            for i in 0..m {
                for j in 0..i {
                    conj.push(Formula::iff(Formula::eq(xs[j], xs[i]), Formula::eq(ys[j], ys[i])));
                }
            }
            Formula::and(conj)
        } else {
            let mut conj = vec![self.formula(m, gamma - 1)];
            for k in 1..=self.bound {
                let us: Vec<Var> = (m..m + k).map(|i| var("x", i)).collect();
                let vs: Vec<Var> = (m..m + k).map(|i| var("y", i)).collect();
                let inner = self.formula(m + k, gamma - 1);
                let forth = Formula::forall(
                    us.clone(),
                    Formula::implies(
                        fresh_relativization(&us, &xs),
                        Formula::exists(
                            vs.clone(),
                            Formula::and(vec![fresh_relativization(&vs, &ys), inner.clone()]),
                        ),
                    ),
                );
                let back = Formula::forall(
                    vs.clone(),
                    Formula::implies(
                        fresh_relativization(&vs, &ys),
                        Formula::exists(
                            us.clone(),
                            Formula::and(vec![fresh_relativization(&us, &xs), inner]),
                        ),
                    ),
                );
                conj.push(forth);
                conj.push(back);
            }
            Formula::and(conj)
        };
        self.memo.insert((gamma, m), f.clone());
        f
    }
}

/// `φ^γ(x̄, ȳ)` over `signature` for tuples of length `m`: true of `ā, b̄` in any structure with
/// at most `bound` elements exactly when `ā ∼^γ b̄`.
pub fn phi_pair(signature: &Signature, m: usize, gamma: u32, bound: usize) -> Formula {
    PairFormulas::new(signature.clone(), bound).formula(m, gamma)
}

/// Per-interval verdicts for two increasing tuples in finite linear orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalReport {
    /// `∼^γ` of `I_i` and `J_i`, from the leftmost interval to the rightmost.
    pub intervals: Vec<bool>,
    pub equivalent: bool,
}

fn positions(order: &FinLinOrder, t: &[u64]) -> Result<Vec<usize>> {
    let ps = t
        .iter()
        .map(|&x| order.position(x).ok_or_else(|| Error::pre(format!("{x} is not in the order"))))
        .collect::<Result<Vec<_>>>()?;
    if ps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Order("the tuple is not strictly increasing".into()));
    }
    Ok(ps)
}

fn intervals(order: &FinLinOrder, ps: &[usize]) -> Vec<FinLinOrder> {
    let mut bounds = vec![0];
    let mut out = Vec::new();
    for &p in ps {
        bounds.push(p);
        bounds.push(p + 1);
    }
    bounds.push(order.len());
    for w in bounds.chunks(2) {
        out.push(order.slice(w[0], w[1]));
    }
    out
}

/// `∼^γ` of two increasing tuples computed interval by interval.
pub fn interval_equiv(a: &FinLinOrder, ta: &[u64], b: &FinLinOrder, tb: &[u64], gamma: u32) -> Result<IntervalReport> {
    if ta.len() != tb.len() {
        return Err(Error::pre(format!("tuples of lengths {} and {}", ta.len(), tb.len())));
    }
    let (pa, pb) = (positions(a, ta)?, positions(b, tb)?);
    let mut verdicts = Vec::new();
    for (i, j) in intervals(a, &pa).into_iter().zip(intervals(b, &pb)) {
        let (si, sj) = (i.to_structure(), j.to_structure());
        verdicts.push(bf_equiv(&EquivQuery::new(&si, vec![], &sj, vec![], gamma))?);
    }
    let equivalent = verdicts.iter().all(|&v| v);
    Ok(IntervalReport { intervals: verdicts, equivalent })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equivalent,
    Distinguished,
    Unknown,
}

/// Why a certificate was issued.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Equal shapes and `∼^γ`-equivalent mentioned tuples.
    Shape { shape: Shape, mentions_left: Vec<u64>, mentions_right: Vec<u64> },
    /// The tuples are ordered differently, which atomic formulas already see.
    Order { left: Vec<usize>, right: Vec<usize> },
    /// Gap `index` (between the `index`-th and next smallest entries) differs.
    Gap { index: usize, left: Gap, right: Gap },
    /// Entry `position` lies in maximal discrete intervals of different sizes.
    Block { position: usize, left: u64, right: u64 },
    /// Both halves certified and a length-2 separator found on each side.
    Concat {
        first: Box<Certificate>,
        second: Box<Certificate>,
        separators: (FSElement, FSElement),
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl Certificate {
    fn unknown() -> Self {
        Certificate { verdict: Verdict::Unknown, evidence: Evidence::None }
    }
}

fn mention_union(t: &[FSElement]) -> Vec<u64> {
    t.iter().flat_map(fslin::mentions).collect()
}

/// A sound verdict on `t1 ∼^γ t2` in `L(G)`, or `Unknown`.
pub fn lg_certify(g: &Digraph, t1: &[FSElement], t2: &[FSElement], gamma: u32) -> Result<Certificate> {
    if t1.len() != t2.len() {
        return Err(Error::pre(format!("tuples of lengths {} and {}", t1.len(), t2.len())));
    }
    let (s1, s2) = (fslin::shape(g, t1)?, fslin::shape(g, t2)?);
    if s1 == s2 {
        let (m1, m2) = (mention_union(t1), mention_union(t2));
        let gs = g.to_structure();
        let (e1, e2) = (gs.elements_of(&m1)?, gs.elements_of(&m2)?);
        if bf_equiv(&EquivQuery::new(&gs, e1, &gs, e2, gamma))? {
            return Ok(Certificate {
                verdict: Verdict::Equivalent,
                evidence: Evidence::Shape { shape: s1, mentions_left: m1, mentions_right: m2 },
            });
        }
        return Ok(Certificate::unknown());
    }
    let rank = |order: &[usize]| {
        let mut r = vec![0; order.len()];
        for (i, &p) in order.iter().enumerate() {
            r[p] = i;
        }
        r
    };
    if rank(&s1.order) != rank(&s2.order) {
        return Ok(Certificate {
            verdict: Verdict::Distinguished,
            evidence: Evidence::Order { left: s1.order, right: s2.order },
        });
    }
    if gamma >= 1 {
        if let Some((index, (l, r))) =
            s1.gaps.iter().zip(&s2.gaps).enumerate().find(|(_, (l, r))| l != r)
        {
            return Ok(Certificate {
                verdict: Verdict::Distinguished,
                evidence: Evidence::Gap { index, left: *l, right: *r },
            });
        }
    }
    if gamma >= 2 {
        if let Some((position, (l, r))) =
            s1.blocks.iter().zip(&s2.blocks).enumerate().find(|(_, (l, r))| l.0 != r.0)
        {
            return Ok(Certificate {
                verdict: Verdict::Distinguished,
                evidence: Evidence::Block { position, left: l.0, right: r.0 },
            });
        }
    }
    Ok(Certificate::unknown())
}

fn separator(g: &Digraph, left: &[FSElement], right: &[FSElement]) -> Result<Option<FSElement>> {
    let last = left.iter().max().ok_or_else(|| Error::pre("empty part"))?;
    let first = right.iter().min().ok_or_else(|| Error::pre("empty part"))?;
    if last >= first {
        return Err(Error::Order(format!("{last} is not below {first}")));
    }
    let (k, witness) = fslin::min_length_in_interval(g, last, first)?;
    Ok((k == 0 && witness != *last && witness != *first).then_some(witness))
}

/// `b̄1 b̄2 ∼^γ c̄1 c̄2` from certified halves and length-2 separators, or `Unknown`.
pub fn lg_concat_certify(
    g: &Digraph,
    b: (&[FSElement], &[FSElement]),
    c: (&[FSElement], &[FSElement]),
    gamma: u32,
) -> Result<Certificate> {
    let sep_b = separator(g, b.0, b.1)?;
    let sep_c = separator(g, c.0, c.1)?;
    let first = lg_certify(g, b.0, c.0, gamma)?;
    let second = lg_certify(g, b.1, c.1, gamma)?;
    match (sep_b, sep_c) {
        (Some(sb), Some(sc))
            if first.verdict == Verdict::Equivalent && second.verdict == Verdict::Equivalent =>
        {
            Ok(Certificate {
                verdict: Verdict::Equivalent,
                evidence: Evidence::Concat {
                    first: Box::new(first),
                    second: Box::new(second),
                    separators: (sb, sc),
                },
            })
        }
        _ => Ok(Certificate::unknown()),
    }
}
