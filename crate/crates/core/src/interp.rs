//! Checking effective interpretations on finite carriers.
//!
//! An interpretation of a target structure in a carrier `B` is given by formulas: one domain
//! formula per tuple arity, a family for the equivalence `∼` per pair of arities, and a family
//! per target relation and combination of argument arities. Argument `j` of a family uses
//! variables `{p}1, {p}2, …` where `p` is the `j`-th of `x, y, z, u, v, w`.
//!
//! A family has a positive formula, optionally a negative one that must be its complement, and
//! optionally a guard. Obligations for a tuple are only asserted where the guard holds, which is
//! how partial operations on finite windows of infinite structures are handled.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{Class, Evaluator, Formula};
use crate::iso::{iso_check, IsoOptions};
use crate::marker::marker_decoder_formulas;
use crate::sexp::{self, Sexp};
use crate::structure::{Digraph, Structure};
use crate::symbol::{Sym, Var};

/// Variable prefixes for the arguments of a family, in order.
pub const ARG_PREFIXES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];

/// Largest quotient handed to the isomorphism check.
pub const MAX_QUOTIENT: usize = 256;

/// Variable for coordinate `i` (from 0) of argument `j`.
pub fn arg_var(j: usize, i: usize) -> Var {
    Var::indexed(ARG_PREFIXES[j], i + 1)
}

#[derive(Debug, Clone)]
pub struct Family {
    pub pos: Formula,
    pub neg: Option<Formula>,
    pub guard: Option<Formula>,
}

impl Family {
    pub fn new(pos: Formula) -> Self {
        Family { pos, neg: None, guard: None }
    }

    pub fn with_neg(mut self, neg: Formula) -> Self {
        self.neg = Some(neg);
        self
    }

    pub fn with_guard(mut self, guard: Formula) -> Self {
        self.guard = Some(guard);
        self
    }
}

#[derive(Debug, Clone)]
pub struct RelationFamilies {
    pub symbol: Sym,
    pub arity: usize,
    /// Keyed by the arities of the arguments.
    pub families: BTreeMap<Vec<usize>, Family>,
}

#[derive(Debug, Clone)]
pub struct InterpretationSpec {
    pub max_arity: usize,
    pub domain: BTreeMap<usize, Formula>,
    pub equiv: BTreeMap<(usize, usize), Family>,
    pub relations: Vec<RelationFamilies>,
}

fn family_from_sexp(items: &[Sexp]) -> Result<Family> {
    let mut pos = None;
    let mut neg = None;
    let mut guard = None;
    for it in items {
        let l = it.as_list().filter(|l| l.len() == 2).ok_or_else(|| Error::parse(format!("bad family clause {it}")))?;
        let f = Formula::from_sexp(&l[1])?;
        match l[0].as_atom() {
            Some("pos") => pos = Some(f),
            Some("neg") => neg = Some(f),
            Some("guard") => guard = Some(f),
            _ => return Err(Error::parse(format!("unknown family clause {it}"))),
        }
    }
    Ok(Family { pos: pos.ok_or_else(|| Error::parse("family without pos"))?, neg, guard })
}

fn family_to_sexp(head: Vec<Sexp>, f: &Family) -> Sexp {
    let mut items = head;
    items.push(Sexp::List(vec![Sexp::atom("pos"), f.pos.to_sexp()]));
    if let Some(n) = &f.neg {
        items.push(Sexp::List(vec![Sexp::atom("neg"), n.to_sexp()]));
    }
    if let Some(g) = &f.guard {
        items.push(Sexp::List(vec![Sexp::atom("guard"), g.to_sexp()]));
    }
    Sexp::List(items)
}

fn parse_usize(e: &Sexp) -> Result<usize> {
    e.as_atom()
        .and_then(|a| a.parse().ok())
        .ok_or_else(|| Error::parse(format!("expected a natural number, found {e}")))
}

fn parse_arities(e: &Sexp) -> Result<Vec<usize>> {
    e.as_list()
        .ok_or_else(|| Error::parse(format!("expected an arity list, found {e}")))?
        .iter()
        .map(parse_usize)
        .collect()
}

fn arity_list(a: &[usize]) -> Sexp {
    Sexp::List(a.iter().map(|n| Sexp::atom(n.to_string())).collect())
}

impl InterpretationSpec {
    /// Reads `(interpretation (max-arity k) (domain n F) (equiv (n m) (pos F) …) (relation R (n …) (pos F) …) …)`.
    pub fn parse(text: &str) -> Result<Self> {
        let top = sexp::parse(text)?;
        let items = top
            .as_list()
            .filter(|_| top.head() == Some("interpretation"))
            .ok_or_else(|| Error::parse("expected (interpretation …)"))?;
        let mut spec = InterpretationSpec {
            max_arity: 0,
            domain: BTreeMap::new(),
            equiv: BTreeMap::new(),
            relations: Vec::new(),
        };
        for it in &items[1..] {
            let l = it.as_list().ok_or_else(|| Error::parse(format!("unexpected {it}")))?;
            match it.head() {
                Some("max-arity") if l.len() == 2 => spec.max_arity = parse_usize(&l[1])?,
                Some("domain") if l.len() == 3 => {
                    spec.domain.insert(parse_usize(&l[1])?, Formula::from_sexp(&l[2])?);
                }
                Some("equiv") if l.len() >= 3 => {
                    let a = parse_arities(&l[1])?;
                    if a.len() != 2 {
                        return Err(Error::parse("equiv takes two arities"));
                    }
                    spec.equiv.insert((a[0], a[1]), family_from_sexp(&l[2..])?);
                }
                Some("relation") if l.len() >= 4 => {
                    let name = l[1].as_atom().ok_or_else(|| Error::parse("relation name"))?;
                    let a = parse_arities(&l[2])?;
                    let fam = family_from_sexp(&l[3..])?;
                    let sym = Sym::new(name);
                    match spec.relations.iter_mut().find(|r| r.symbol == sym) {
                        Some(r) if r.arity == a.len() => {
                            r.families.insert(a, fam);
                        }
                        Some(_) => return Err(Error::parse(format!("{name} used with two arities"))),
                        None => spec.relations.push(RelationFamilies {
                            symbol: sym,
                            arity: a.len(),
                            families: BTreeMap::from([(a, fam)]),
                        }),
                    }
                }
                _ => return Err(Error::parse(format!("unexpected clause {it}"))),
            }
        }
        if spec.max_arity == 0 {
            return Err(Error::parse("missing (max-arity k) with k ≥ 1"));
        }
        for r in &spec.relations {
            if r.arity > ARG_PREFIXES.len() {
                return Err(Error::Unsupported(format!("relation {} has arity above 6", r.symbol)));
            }
        }
        Ok(spec)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("(interpretation\n");
        let _ = writeln!(out, "  (max-arity {})", self.max_arity);
        for (n, f) in &self.domain {
            let _ = writeln!(out, "  (domain {n} {})", f.to_sexp());
        }
        for ((n, m), f) in &self.equiv {
            let _ = writeln!(out, "  {}", family_to_sexp(vec![Sexp::atom("equiv"), arity_list(&[*n, *m])], f));
        }
        for r in &self.relations {
            for (a, f) in &r.families {
                let head = vec![Sexp::atom("relation"), Sexp::atom(r.symbol.name()), arity_list(a)];
                let _ = writeln!(out, "  {}", family_to_sexp(head, f));
            }
        }
        out.push(')');
        out.push('\n');
        out
    }

    /// Classifier verdict per defining formula, labelled as in the spec file.
    pub fn classes(&self) -> Vec<(String, Class)> {
        let mut out = Vec::new();
        for (n, f) in &self.domain {
            out.push((format!("domain {n}"), f.class()));
        }
        let mut fam = |label: String, f: &Family| {
            out.push((format!("{label} pos"), f.pos.class()));
            if let Some(n) = &f.neg {
                out.push((format!("{label} neg"), n.class()));
            }
        };
        for ((n, m), f) in &self.equiv {
            fam(format!("equiv ({n} {m})"), f);
        }
        for r in &self.relations {
            for (a, f) in &r.families {
                fam(format!("{} {a:?}", r.symbol), f);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObligationKind {
    EmptyDomain,
    NotReflexive,
    NotSymmetric,
    NotTransitive,
    NotComplementary,
    NotCongruence,
    MissingRelation,
    NotIsomorphic,
}

/// A failed obligation. Witness tuples are written with carrier labels.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub kind: ObligationKind,
    pub what: String,
    pub witness: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InterpReport {
    pub passed: bool,
    pub max_arity: usize,
    pub domain_size: usize,
    pub classes: usize,
    pub failures: Vec<Failure>,
    /// Class `i` of the quotient is sent to this target label, when an isomorphism was found.
    pub isomorphism: Option<Vec<u64>>,
    pub formula_classes: Vec<(String, String)>,
}

struct Checker<'b> {
    b: &'b Structure,
    eval: Evaluator<'b>,
    failures: Vec<Failure>,
}

impl<'b> Checker<'b> {
    fn holds(&mut self, f: &Formula, args: &[&[u32]]) -> Result<bool> {
        let mut asg = Vec::new();
        for (j, t) in args.iter().enumerate() {
            for (i, &e) in t.iter().enumerate() {
                asg.push((arg_var(j, i), e));
            }
        }
        self.eval.eval(f, &asg)
    }

    fn labels(&self, args: &[&[u32]]) -> Vec<Vec<u64>> {
        args.iter().map(|t| t.iter().map(|&e| self.b.label(e as usize)).collect()).collect()
    }

    fn fail(&mut self, kind: ObligationKind, what: impl Into<String>, witness: Vec<Vec<u64>>) {
        if self.failures.iter().filter(|f| f.kind == kind).count() < 8 {
            self.failures.push(Failure { kind, what: what.into(), witness });
        }
    }

    /// `Some(pos)` when the guard holds, after checking complementarity.
    fn family(&mut self, what: &str, f: &Family, args: &[&[u32]]) -> Result<Option<bool>> {
        if let Some(g) = &f.guard {
            if !self.holds(g, args)? {
                return Ok(None);
            }
        }
        let pos = self.holds(&f.pos, args)?;
        if let Some(n) = &f.neg {
            if self.holds(n, args)? == pos {
                let w = self.labels(args);
                self.fail(ObligationKind::NotComplementary, what.to_string(), w);
            }
        }
        Ok(Some(pos))
    }
}

fn all_tuples(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for e in 0..n as u32 {
                let mut u = t.clone();
                u.push(e);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

fn product(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

/// Verifies every obligation of `spec` on `b` up to `max_arity` and compares the quotient with
/// `target`.
pub fn check_interpretation(
    b: &Structure,
    spec: &InterpretationSpec,
    target: &Structure,
    max_arity: usize,
) -> Result<InterpReport> {
    if max_arity == 0 {
        return Err(Error::pre("max_arity must be at least 1"));
    }
    let max_arity = max_arity.min(spec.max_arity);
    let mut ck = Checker { b, eval: Evaluator::new(b), failures: Vec::new() };

    let mut dom: Vec<Vec<u32>> = Vec::new();
    for n in 1..=max_arity {
        if let Some(f) = spec.domain.get(&n) {
            for t in all_tuples(b.size(), n) {
                if ck.holds(f, &[&t])? {
                    dom.push(t);
                }
            }
        }
    }
    let d = dom.len();
    if d == 0 && target.size() > 0 {
        ck.fail(ObligationKind::EmptyDomain, "the domain is empty", Vec::new());
    }

    let mut same = vec![false; d * d];
    for i in 0..d {
        for j in 0..d {
            let key = (dom[i].len(), dom[j].len());
            if let Some(f) = spec.equiv.get(&key) {
                same[i * d + j] = ck.family("equiv", f, &[&dom[i], &dom[j]])?.unwrap_or(false);
            }
        }
    }
    for i in 0..d {
        if !same[i * d + i] {
            let w = ck.labels(&[&dom[i]]);
            ck.fail(ObligationKind::NotReflexive, "equiv", w);
        }
        for j in 0..d {
            if same[i * d + j] && !same[j * d + i] {
                let w = ck.labels(&[&dom[i], &dom[j]]);
                ck.fail(ObligationKind::NotSymmetric, "equiv", w);
            }
            if !same[i * d + j] {
                continue;
            }
            for k in 0..d {
                if same[j * d + k] && !same[i * d + k] {
                    let w = ck.labels(&[&dom[i], &dom[j], &dom[k]]);
                    ck.fail(ObligationKind::NotTransitive, "equiv", w);
                }
            }
        }
    }

    let mut class = vec![usize::MAX; d];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..d {
        if class[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(i);
        let mut stack = vec![i];
        class[i] = c;
        while let Some(x) = stack.pop() {
            for y in 0..d {
                if class[y] == usize::MAX && (same[x * d + y] || same[y * d + x]) {
                    class[y] = c;
                    stack.push(y);
                }
            }
        }
    }

    let by_arity: BTreeMap<usize, Vec<usize>> = (1..=max_arity)
        .map(|n| (n, (0..d).filter(|&i| dom[i].len() == n).collect()))
        .collect();
    let mut quotient_rels: HashMap<Sym, (usize, Vec<Vec<u32>>)> = HashMap::new();
    for r in &spec.relations {
        let mut seen: HashMap<Vec<usize>, (bool, Vec<usize>)> = HashMap::new();
        for (arities, fam) in &r.families {
            if arities.iter().any(|a| *a == 0 || *a > max_arity) {
                continue;
            }
            let pools: Vec<&Vec<usize>> = arities.iter().map(|a| &by_arity[a]).collect();
            let sizes: Vec<usize> = pools.iter().map(|p| p.len()).collect();
            for choice in product(&sizes) {
                let members: Vec<usize> = choice.iter().enumerate().map(|(j, &c)| pools[j][c]).collect();
                let args: Vec<&[u32]> = members.iter().map(|&m| dom[m].as_slice()).collect();
                let Some(pos) = ck.family(&r.symbol.name(), fam, &args)? else {
                    continue;
                };
                let key: Vec<usize> = members.iter().map(|&m| class[m]).collect();
                match seen.get(&key) {
                    Some((prev, witness)) if *prev != pos => {
                        let mut w = ck.labels(&args);
                        let other: Vec<&[u32]> = witness.iter().map(|&m| dom[m].as_slice()).collect();
                        w.extend(ck.labels(&other));
                        ck.fail(ObligationKind::NotCongruence, r.symbol.name(), w);
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(key, (pos, members));
                    }
                }
            }
        }
        let mut tuples: Vec<Vec<u32>> = seen
            .into_iter()
            .filter(|(_, (pos, _))| *pos)
            .map(|(k, _)| k.into_iter().map(|c| c as u32).collect())
            .collect();
        tuples.sort();
        quotient_rels.insert(r.symbol, (r.arity, tuples));
    }

    let classes = reps.len();
    let mut isomorphism = None;
    let mut builder = Structure::builder((0..classes as u64).collect());
    let mut complete = true;
    for &(sym, arity) in target.signature().symbols() {
        match quotient_rels.remove(&sym) {
            Some((a, tuples)) if a == arity => builder = builder.relation(sym, arity, tuples),
            _ => {
                complete = false;
                ck.fail(ObligationKind::MissingRelation, sym.name(), Vec::new());
            }
        }
    }
    for sym in quotient_rels.keys() {
        complete = false;
        ck.fail(ObligationKind::MissingRelation, format!("{sym} is not in the target"), Vec::new());
    }
    if complete {
        let quotient = builder.build()?;
        let cap = IsoOptions::with_max_size(MAX_QUOTIENT);
        match iso_check(&quotient, target, cap)? {
            Some(m) => isomorphism = Some(m.iter().map(|&j| target.label(j as usize)).collect()),
            None => ck.fail(
                ObligationKind::NotIsomorphic,
                format!("quotient with {classes} classes against a target of size {}", target.size()),
                Vec::new(),
            ),
        }
    }

    Ok(InterpReport {
        passed: ck.failures.is_empty(),
        max_arity,
        domain_size: d,
        classes,
        failures: ck.failures,
        isomorphism,
        formula_classes: spec.classes().into_iter().map(|(l, c)| (l, c.to_string())).collect(),
    })
}

fn plus() -> Sym {
    Sym::new("Plus")
}

fn times() -> Sym {
    Sym::new("Times")
}

/// The carrier `({0..N}, Plus, Times)` with graphs of the partial operations, the signed-pair
/// interpretation of the integers, and the target window `[-N, N]` (label `i + N` for `i`).
///
/// The domain is the pairs with a zero coordinate, one per integer in the window; the
/// equivalence and operations are the usual pair formulas, guarded so they are only asserted
/// where every intermediate sum and product stays in `{0..N}`.
pub fn builtin_int_in_nat(n: u64) -> Result<(Structure, InterpretationSpec, Structure)> {
    if n == 0 {
        return Err(Error::pre("the window bound must be at least 1"));
    }
    let m = n as u32;
    let op = |f: fn(u32, u32) -> u32| -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for a in 0..=m {
            for b in 0..=m {
                let c = f(a, b);
                if c <= m {
                    out.push(vec![a, b, c]);
                }
            }
        }
        out
    };
    let carrier = Structure::builder((0..=n).collect())
        .relation(plus(), 3, op(|a, b| a + b))
        .relation(times(), 3, op(|a, b| a.saturating_mul(b)))
        .build()?;

    let window = |f: fn(i64, i64) -> i64| -> Vec<Vec<u32>> {
        let k = n as i64;
        let mut out = Vec::new();
        for a in -k..=k {
            for b in -k..=k {
                let c = f(a, b);
                if (-k..=k).contains(&c) {
                    out.push(vec![(a + k) as u32, (b + k) as u32, (c + k) as u32]);
                }
            }
        }
        out
    };
    let target = Structure::builder((0..=2 * n).collect())
        .relation(plus(), 3, window(|a, b| a + b))
        .relation(times(), 3, window(|a, b| a * b))
        .build()?;

    let (x, y, z) = (|i| arg_var(0, i), |i| arg_var(1, i), |i| arg_var(2, i));
    let p = |a: Var, b: Var, c: Var| Formula::rel(plus(), vec![a, b, c]);
    let t = |a: Var, b: Var, c: Var| Formula::rel(times(), vec![a, b, c]);
    let w = |i: usize| Var::indexed("w", i);

    let domain = Formula::or(vec![p(x(0), x(0), x(0)), p(x(1), x(1), x(1))]);

    let both = |lhs: Vec<Formula>, rhs: Vec<Formula>, l: Var, r: Var, vars: Vec<Var>| {
        let mut all = lhs;
        all.extend(rhs);
        let guard = Formula::exists(vars.clone(), Formula::and(all.clone()));
        let mut neg = all.clone();
        neg.push(Formula::neq(l, r));
        let neg = Formula::exists(vars.clone(), Formula::and(neg));
        let mut same = all;
        same.push(Formula::eq(l, r));
        let pos = Formula::exists(vars, Formula::and(same));
        Family::new(pos).with_neg(neg).with_guard(guard)
    };

    let equiv = both(
        vec![p(x(0), y(1), w(1))],
        vec![p(y(0), x(1), w(2))],
        w(1),
        w(2),
        vec![w(1), w(2)],
    );
    let add = both(
        vec![p(x(0), y(0), w(1)), p(w(1), z(1), w(2))],
        vec![p(z(0), x(1), w(3)), p(w(3), y(1), w(4))],
        w(2),
        w(4),
        (1..=4).map(w).collect(),
    );
    let mul = both(
        vec![t(x(0), y(0), w(1)), t(x(1), y(1), w(2)), p(w(1), w(2), w(3)), p(w(3), z(1), w(4))],
        vec![t(x(0), y(1), w(5)), t(x(1), y(0), w(6)), p(w(5), w(6), w(7)), p(w(7), z(0), w(8))],
        w(4),
        w(8),
        (1..=8).map(w).collect(),
    );
    let spec = InterpretationSpec {
        max_arity: 2,
        domain: BTreeMap::from([(2, domain)]),
        equiv: BTreeMap::from([((2, 2), equiv)]),
        relations: vec![
            RelationFamilies { symbol: plus(), arity: 3, families: BTreeMap::from([(vec![2, 2, 2], add)]) },
            RelationFamilies { symbol: times(), arity: 3, families: BTreeMap::from([(vec![2, 2, 2], mul)]) },
        ],
    };
    Ok((carrier, spec, target))
}

/// Number of classes of the transitive closure of the pair equivalence on all of `{0..N}²`.
pub fn int_pair_classes(n: u64) -> Result<usize> {
    let (carrier, spec, _) = builtin_int_in_nat(n)?;
    let f = &spec.equiv[&(2, 2)].pos;
    let pairs = all_tuples(carrier.size(), 2);
    let mut ev = Evaluator::new(&carrier);
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let asg = [
                (arg_var(0, 0), pairs[i][0]),
                (arg_var(0, 1), pairs[i][1]),
                (arg_var(1, 0), pairs[j][0]),
                (arg_var(1, 1), pairs[j][1]),
            ];
            if ev.eval(f, &asg)? {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    Ok((0..pairs.len()).filter(|&i| find(&mut parent, i) == i).count())
}

/// The interpretation of `A` in any nonempty `B` by tuple length: tuples of length `k` stand for
/// element `k - 1` of `A`, for `k` up to `|A|`.
pub fn trivial_interp(a: &Structure, b: &Structure) -> Result<(InterpretationSpec, InterpReport)> {
    if b.size() == 0 {
        return Err(Error::pre("the carrier has no tuples of positive length"));
    }
    let n = a.size();
    let mut spec = InterpretationSpec {
        max_arity: n.max(1),
        domain: (1..=n).map(|k| (k, Formula::truth())).collect(),
        equiv: (1..=n).map(|k| ((k, k), Family::new(Formula::truth()).with_neg(Formula::falsity()))).collect(),
        relations: Vec::new(),
    };
    for (r, &(sym, arity)) in a.signature().symbols().iter().enumerate() {
        if arity > ARG_PREFIXES.len() {
            return Err(Error::Unsupported(format!("relation {sym} has arity above 6")));
        }
        let mut families = BTreeMap::new();
        for t in all_tuples(n, arity) {
            let arities: Vec<usize> = t.iter().map(|&e| e as usize + 1).collect();
            let yes = a.relation(r).contains(&t);
            let (pos, neg) = if yes {
                (Formula::truth(), Formula::falsity())
            } else {
                (Formula::falsity(), Formula::truth())
            };
            families.insert(arities, Family::new(pos).with_neg(neg));
        }
        spec.relations.push(RelationFamilies { symbol: sym, arity, families });
    }
    let report = check_interpretation(b, &spec, a, n.max(1))?;
    Ok((spec, report))
}

/// The Marker interpretation of `G` in its encoding: the base vertices, equality, and the
/// square formula (with the pentagon formula or equality as its complement).
pub fn marker_interpretation() -> InterpretationSpec {
    let (b, sq, pent) = marker_decoder_formulas();
    let (x, y) = (Var::new("x"), Var::new("y"));
    let (x1, y1) = (arg_var(0, 0), arg_var(1, 0));
    let ren = |f: &Formula| {
        f.rename(&|v| {
            if v == x {
                x1
            } else if v == y {
                y1
            } else {
                v
            }
        })
    };
    let edge = Family::new(ren(&sq)).with_neg(Formula::or(vec![ren(&pent), Formula::eq(x1, y1)]));
    InterpretationSpec {
        max_arity: 1,
        domain: BTreeMap::from([(1, ren(&b))]),
        equiv: BTreeMap::from([((1, 1), Family::new(Formula::eq(x1, y1)).with_neg(Formula::neq(x1, y1)))]),
        relations: vec![RelationFamilies {
            symbol: Sym::edge(),
            arity: 2,
            families: BTreeMap::from([(vec![1, 1], edge)]),
        }],
    }
}

/// Runs the Marker interpretation against `G`.
pub fn check_marker(g: &Digraph) -> Result<InterpReport> {
    let h = crate::marker::marker_encode(g)?.graph.to_structure();
    check_interpretation(&h, &marker_interpretation(), &g.to_structure(), 1)
}
