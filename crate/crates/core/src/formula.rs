//! Formulas of finitary first-order logic over relational signatures, with a Σ/Π classifier
//! and an evaluator for finite structures.
//!
//! Formulas are immutable reference-counted DAGs: generators share subformulas freely and the
//! evaluator memoizes quantifier nodes by identity and the values of their free variables, so
//! shared subformulas are evaluated once per assignment.
//!
//! The classifier follows the computable infinitary hierarchy. Quantifier-free formulas are
//! level 0. A conjunction is Π at the largest Π-level of its conjuncts, a disjunction Σ at the
//! largest Σ-level of its disjuncts; an existential block raises the body to Σ and a universal
//! block to Π; negation swaps Σ and Π.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::sexp::{self, Sexp};
use crate::structure::Structure;
use crate::symbol::{Sym, Var};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Kind {
    Const(bool),
    Rel(Sym, Vec<Var>),
    Eq(Var, Var),
    Not(Formula),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Exists(Vec<Var>, Formula),
    Forall(Vec<Var>, Formula),
}

#[derive(Debug)]
struct Node {
    kind: Kind,
    free: Vec<Var>,
    rels: Vec<(Sym, usize)>,
    sigma: u32,
    pi: u32,
    hash: u64,
}

/// A formula. Cloning is cheap.
#[derive(Clone)]
pub struct Formula(Arc<Node>);

/// Position of a formula in the hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Class {
    QuantifierFree,
    Sigma(u32),
    Pi(u32),
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::QuantifierFree => f.write_str("QF"),
            Class::Sigma(n) => write!(f, "Sigma{n}"),
            Class::Pi(n) => write!(f, "Pi{n}"),
        }
    }
}

fn merge_sorted<T: Ord + Copy>(into: &mut Vec<T>, from: &[T]) {
    into.extend_from_slice(from);
    into.sort();
    into.dedup();
}

fn quantifier_level(sigma: u32, pi: u32, existential: bool) -> (u32, u32) {
    if existential {
        let s = (pi + 1).min(sigma).max(1);
        (s, s + 1)
    } else {
        let p = (sigma + 1).min(pi).max(1);
        (p + 1, p)
    }
}

impl Formula {
    fn make(kind: Kind) -> Formula {
        let (free, sigma, pi) = match &kind {
            Kind::Const(_) => (Vec::new(), 0, 0),
            Kind::Rel(_, args) => {
                let mut v = args.clone();
                v.sort();
                v.dedup();
                (v, 0, 0)
            }
            Kind::Eq(a, b) => {
                let mut v = vec![*a, *b];
                v.sort();
                v.dedup();
                (v, 0, 0)
            }
            Kind::Not(g) => (g.0.free.clone(), g.0.pi, g.0.sigma),
            Kind::And(gs) | Kind::Or(gs) => {
                let mut free = Vec::new();
                for g in gs {
                    merge_sorted(&mut free, &g.0.free);
                }
                let (s, p) = if gs.iter().all(|g| g.0.sigma == 0 && g.0.pi == 0) {
                    (0, 0)
                } else if matches!(kind, Kind::And(_)) {
                    let p = gs.iter().map(|g| g.0.pi).max().unwrap_or(0);
                    (p + 1, p)
                } else {
                    let s = gs.iter().map(|g| g.0.sigma).max().unwrap_or(0);
                    (s, s + 1)
                };
                (free, s, p)
            }
            Kind::Exists(vs, g) | Kind::Forall(vs, g) => {
                let free = g.0.free.iter().copied().filter(|v| !vs.contains(v)).collect();
                let (s, p) =
                    quantifier_level(g.0.sigma, g.0.pi, matches!(kind, Kind::Exists(..)));
                (free, s, p)
            }
        };
        let rels = match &kind {
            Kind::Const(_) | Kind::Eq(..) => Vec::new(),
            Kind::Rel(s, args) => vec![(*s, args.len())],
            Kind::Not(g) | Kind::Exists(_, g) | Kind::Forall(_, g) => g.0.rels.clone(),
            Kind::And(gs) | Kind::Or(gs) => {
                let mut rels = Vec::new();
                for g in gs {
                    merge_sorted(&mut rels, &g.0.rels);
                }
                rels
            }
        };
        let mut h = std::collections::hash_map::DefaultHasher::new();
        std::mem::discriminant(&kind).hash(&mut h);
        match &kind {
            Kind::Const(b) => b.hash(&mut h),
            Kind::Rel(s, a) => (s, a).hash(&mut h),
            Kind::Eq(a, b) => (a, b).hash(&mut h),
            Kind::Not(g) => g.0.hash.hash(&mut h),
            Kind::And(gs) | Kind::Or(gs) => {
                for g in gs {
                    g.0.hash.hash(&mut h);
                }
            }
            Kind::Exists(vs, g) | Kind::Forall(vs, g) => {
                vs.hash(&mut h);
                g.0.hash.hash(&mut h);
            }
        }
        let hash = h.finish();
        Formula(Arc::new(Node { kind, free, rels, sigma, pi, hash }))
    }

    pub fn truth() -> Formula {
        Formula::make(Kind::Const(true))
    }

    pub fn falsity() -> Formula {
        Formula::make(Kind::Const(false))
    }

    pub fn rel(sym: Sym, args: Vec<Var>) -> Formula {
        Formula::make(Kind::Rel(sym, args))
    }

    pub fn edge(a: Var, b: Var) -> Formula {
        Formula::rel(Sym::edge(), vec![a, b])
    }

    pub fn eq(a: Var, b: Var) -> Formula {
        Formula::make(Kind::Eq(a, b))
    }

    pub fn neq(a: Var, b: Var) -> Formula {
        Formula::not(Formula::eq(a, b))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::make(Kind::Not(f))
    }

    /// Conjunction; the empty conjunction is `true` and a single conjunct is returned as is.
    pub fn and(mut fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::truth(),
            1 => fs.pop().expect("one conjunct"),
            _ => Formula::make(Kind::And(fs)),
        }
    }

    /// Disjunction; the empty disjunction is `false` and a single disjunct is returned as is.
    pub fn or(mut fs: Vec<Formula>) -> Formula {
        match fs.len() {
            0 => Formula::falsity(),
            1 => fs.pop().expect("one disjunct"),
            _ => Formula::make(Kind::Or(fs)),
        }
    }

    /// `(a ∧ b) ∨ (¬a ∧ ¬b)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::or(vec![
            Formula::and(vec![a.clone(), b.clone()]),
            Formula::and(vec![Formula::not(a), Formula::not(b)]),
        ])
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::or(vec![Formula::not(a), b])
    }

    /// An existential block; an empty block returns the body.
    pub fn exists(vars: Vec<Var>, body: Formula) -> Formula {
        if vars.is_empty() {
            body
        } else {
            Formula::make(Kind::Exists(vars, body))
        }
    }

    /// A universal block; an empty block returns the body.
    pub fn forall(vars: Vec<Var>, body: Formula) -> Formula {
        if vars.is_empty() {
            body
        } else {
            Formula::make(Kind::Forall(vars, body))
        }
    }

    /// Pairwise distinctness of `vars`.
    pub fn distinct(vars: &[Var]) -> Vec<Formula> {
        let mut out = Vec::new();
        for (i, &a) in vars.iter().enumerate() {
            for &b in &vars[i + 1..] {
                out.push(Formula::neq(a, b));
            }
        }
        out
    }

    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    /// Free variables in increasing id order.
    pub fn free_vars(&self) -> &[Var] {
        &self.0.free
    }

    pub fn class(&self) -> Class {
        let (s, p) = (self.0.sigma, self.0.pi);
        if s == 0 && p == 0 {
            Class::QuantifierFree
        } else if s < p {
            Class::Sigma(s)
        } else {
            Class::Pi(p)
        }
    }

    /// Least `n` with the formula in Σ_n.
    pub fn sigma_level(&self) -> u32 {
        self.0.sigma
    }

    /// Least `n` with the formula in Π_n.
    pub fn pi_level(&self) -> u32 {
        self.0.pi
    }

    pub fn is_quantifier_free(&self) -> bool {
        self.class() == Class::QuantifierFree
    }

    /// Number of distinct nodes in the DAG.
    pub fn dag_size(&self) -> usize {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(f) = stack.pop() {
            if !seen.insert(Arc::as_ptr(&f.0) as usize) {
                continue;
            }
            stack.extend(f.children().iter().cloned());
        }
        seen.len()
    }

    pub fn children(&self) -> Vec<Formula> {
        match self.kind() {
            Kind::Const(_) | Kind::Rel(..) | Kind::Eq(..) => Vec::new(),
            Kind::Not(g) | Kind::Exists(_, g) | Kind::Forall(_, g) => vec![g.clone()],
            Kind::And(gs) | Kind::Or(gs) => gs.clone(),
        }
    }

    /// Relation symbols used, with the arities they are used at.
    pub fn relation_uses(&self) -> &[(Sym, usize)] {
        &self.0.rels
    }

    /// Applies `f` to every variable occurrence, binders included. `f` should be injective on
    /// the variables of the formula, otherwise bound variables may capture.
    pub fn rename(&self, f: &dyn Fn(Var) -> Var) -> Formula {
        fn go(phi: &Formula, f: &dyn Fn(Var) -> Var, memo: &mut HashMap<usize, Formula>) -> Formula {
            let key = Arc::as_ptr(&phi.0) as usize;
            if let Some(done) = memo.get(&key) {
                return done.clone();
            }
            let kind = match phi.kind() {
                Kind::Const(b) => Kind::Const(*b),
                Kind::Rel(s, args) => Kind::Rel(*s, args.iter().map(|&v| f(v)).collect()),
                Kind::Eq(a, b) => Kind::Eq(f(*a), f(*b)),
                Kind::Not(g) => Kind::Not(go(g, f, memo)),
                Kind::And(gs) => Kind::And(gs.iter().map(|g| go(g, f, memo)).collect()),
                Kind::Or(gs) => Kind::Or(gs.iter().map(|g| go(g, f, memo)).collect()),
                Kind::Exists(vs, g) => Kind::Exists(vs.iter().map(|&v| f(v)).collect(), go(g, f, memo)),
                Kind::Forall(vs, g) => Kind::Forall(vs.iter().map(|&v| f(v)).collect(), go(g, f, memo)),
            };
            let out = Formula::make(kind);
            memo.insert(key, out.clone());
            out
        }
        go(self, f, &mut HashMap::new())
    }

    pub fn to_sexp(&self) -> Sexp {
        let vars = |vs: &[Var]| Sexp::List(vs.iter().map(|v| Sexp::atom(v.name())).collect());
        match self.kind() {
            Kind::Const(b) => Sexp::atom(if *b { "true" } else { "false" }),
            Kind::Rel(s, args) => {
                let mut items = vec![Sexp::atom(s.name())];
                items.extend(args.iter().map(|v| Sexp::atom(v.name())));
                Sexp::List(items)
            }
            Kind::Eq(a, b) => Sexp::List(vec![
                Sexp::atom("="),
                Sexp::atom(a.name()),
                Sexp::atom(b.name()),
            ]),
            Kind::Not(g) => Sexp::List(vec![Sexp::atom("not"), g.to_sexp()]),
            Kind::And(gs) | Kind::Or(gs) => {
                let head = if matches!(self.kind(), Kind::And(_)) { "and" } else { "or" };
                let mut items = vec![Sexp::atom(head)];
                items.extend(gs.iter().map(Formula::to_sexp));
                Sexp::List(items)
            }
            Kind::Exists(vs, g) | Kind::Forall(vs, g) => {
                let head = if matches!(self.kind(), Kind::Exists(..)) { "exists" } else { "forall" };
                Sexp::List(vec![Sexp::atom(head), vars(vs), g.to_sexp()])
            }
        }
    }

    pub fn from_sexp(e: &Sexp) -> Result<Formula> {
        let items = match e {
            Sexp::Atom(a) => {
                return match a.as_str() {
                    "true" => Ok(Formula::truth()),
                    "false" => Ok(Formula::falsity()),
                    other => Err(Error::parse(format!("unexpected atom `{other}` in formula"))),
                }
            }
            Sexp::List(items) => items,
        };
        let Some((head, rest)) = items.split_first() else {
            return Err(Error::parse("empty list in formula"));
        };
        let head = head
            .as_atom()
            .ok_or_else(|| Error::parse(format!("formula head must be an atom in {e}")))?;
        let var = |s: &Sexp| -> Result<Var> {
            s.as_atom()
                .map(Var::new)
                .ok_or_else(|| Error::parse(format!("expected a variable, found {s}")))
        };
        let subs = |rest: &[Sexp]| rest.iter().map(Formula::from_sexp).collect::<Result<Vec<_>>>();
        let arity = |n: usize| -> Result<()> {
            if rest.len() == n {
                Ok(())
            } else {
                Err(Error::parse(format!("`{head}` takes {n} arguments in {e}")))
            }
        };
        match head {
            "and" => Ok(Formula::and(subs(rest)?)),
            "or" => Ok(Formula::or(subs(rest)?)),
            "not" => {
                arity(1)?;
                Ok(Formula::not(Formula::from_sexp(&rest[0])?))
            }
            "implies" | "iff" => {
                arity(2)?;
                let a = Formula::from_sexp(&rest[0])?;
                let b = Formula::from_sexp(&rest[1])?;
                Ok(if head == "iff" { Formula::iff(a, b) } else { Formula::implies(a, b) })
            }
            "=" => {
                arity(2)?;
                Ok(Formula::eq(var(&rest[0])?, var(&rest[1])?))
            }
            "distinct" => {
                let vs = rest.iter().map(var).collect::<Result<Vec<_>>>()?;
                Ok(Formula::and(Formula::distinct(&vs)))
            }
            "exists" | "forall" => {
                arity(2)?;
                let vs = rest[0]
                    .as_list()
                    .ok_or_else(|| Error::parse(format!("`{head}` needs a variable list in {e}")))?
                    .iter()
                    .map(var)
                    .collect::<Result<Vec<_>>>()?;
                let body = Formula::from_sexp(&rest[1])?;
                Ok(if head == "exists" {
                    Formula::exists(vs, body)
                } else {
                    Formula::forall(vs, body)
                })
            }
            name => {
                let args = rest.iter().map(var).collect::<Result<Vec<_>>>()?;
                Ok(Formula::rel(Sym::new(name), args))
            }
        }
    }

    pub fn parse(text: &str) -> Result<Formula> {
        Formula::from_sexp(&sexp::parse(text)?)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sexp())
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sexp())
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.hash == other.0.hash && self.0.kind == other.0.kind)
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash.hash(state);
    }
}

/// A formula compared by identity, used as a memo key.
#[derive(Clone)]
struct ById(Formula);

impl PartialEq for ById {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0 .0, &other.0 .0)
    }
}

impl Eq for ById {}

impl Hash for ById {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (Arc::as_ptr(&self.0 .0) as usize).hash(state);
    }
}

enum Gen {
    Eq(Var),
    Rel { sym: Sym, pos: usize, others: Vec<Var> },
}

struct Stage {
    var: Var,
    checks: Vec<(Formula, bool)>,
    gens: Vec<Gen>,
}

/// Search plan for a quantifier block: find values for `stages` making every item take its
/// required truth value. Items are scheduled at the first stage binding all their variables.
struct Plan {
    upfront: Vec<(Formula, bool)>,
    stages: Vec<Stage>,
}

fn flatten(f: &Formula, need: bool, out: &mut Vec<(Formula, bool)>) {
    match f.kind() {
        Kind::And(gs) if need => gs.iter().for_each(|g| flatten(g, true, out)),
        Kind::Or(gs) if !need => gs.iter().for_each(|g| flatten(g, false, out)),
        Kind::Not(g) => flatten(g, !need, out),
        _ => out.push((f.clone(), need)),
    }
}

fn build_plan(vars: &[Var], body: &Formula, existential: bool) -> Plan {
    let mut items = Vec::new();
    flatten(body, existential, &mut items);
    let mut upfront = Vec::new();
    let mut stages: Vec<Stage> = vars
        .iter()
        .map(|&var| Stage { var, checks: Vec::new(), gens: Vec::new() })
        .collect();
    for (f, need) in items {
        let stage = f
            .free_vars()
            .iter()
            .filter_map(|v| vars.iter().rposition(|w| w == v))
            .max();
        match stage {
            None => upfront.push((f, need)),
            Some(i) => stages[i].checks.push((f, need)),
        }
    }
    for i in 0..stages.len() {
        let later = &vars[i..];
        let y = vars[i];
        let mut gens = Vec::new();
        for (f, need) in &stages[i].checks {
            if !*need {
                continue;
            }
            match f.kind() {
                Kind::Eq(a, b) => {
                    let other = if *a == y { *b } else { *a };
                    if other != y && !later.contains(&other) {
                        gens.insert(0, Gen::Eq(other));
                    }
                }
                Kind::Rel(sym, args) => {
                    if args.iter().filter(|&&v| v == y).count() == 1
                        && args.iter().all(|v| *v == y || !later.contains(v))
                    {
                        let pos = args.iter().position(|&v| v == y).expect("occurs once");
                        let mut others = args.clone();
                        others.remove(pos);
                        gens.push(Gen::Rel { sym: *sym, pos, others });
                    }
                }
                _ => {}
            }
        }
        stages[i].gens = gens;
    }
    Plan { upfront, stages }
}

const UNBOUND: u32 = u32::MAX;

type Values = SmallVec<[u32; 6]>;

/// An evaluator bound to one structure. Memo tables persist across calls, so evaluating many
/// formulas that share subformulas on the same structure is cheap.
pub struct Evaluator<'s> {
    s: &'s Structure,
    rel_index: FxHashMap<Sym, usize>,
    env: Vec<u32>,
    // Keyed by node address; `plans` keeps every memoised node alive, so addresses stay unique.
    memo: FxHashMap<(usize, Values), bool>,
    plans: FxHashMap<usize, (Formula, Arc<Plan>)>,
    checked: rustc_hash::FxHashSet<ById>,
}

impl<'s> Evaluator<'s> {
    pub fn new(s: &'s Structure) -> Self {
        let rel_index = s
            .signature()
            .symbols()
            .iter()
            .enumerate()
            .map(|(i, &(sym, _))| (sym, i))
            .collect();
        Evaluator {
            s,
            rel_index,
            env: Vec::new(),
            memo: FxHashMap::default(),
            plans: FxHashMap::default(),
            checked: Default::default(),
        }
    }

    pub fn structure(&self) -> &'s Structure {
        self.s
    }

    fn check_signature(&mut self, phi: &Formula) -> Result<()> {
        if !self.checked.insert(ById(phi.clone())) {
            return Ok(());
        }
        for &(sym, arity) in phi.relation_uses() {
            match self.s.signature().arity(sym) {
                Some(a) if a == arity => {}
                Some(a) => {
                    return Err(Error::Signature(format!(
                        "{sym} has arity {a} in the structure but is used with {arity} arguments"
                    )))
                }
                None => {
                    return Err(Error::Signature(format!("{sym} is not in the structure's signature")))
                }
            }
        }
        Ok(())
    }

    /// Truth of `phi` under `assignment`, which maps variables to element indices.
    pub fn eval(&mut self, phi: &Formula, assignment: &[(Var, u32)]) -> Result<bool> {
        self.check_signature(phi)?;
        for v in phi.free_vars() {
            if !assignment.iter().any(|(w, _)| w == v) {
                return Err(Error::UnboundVariable(v.name()));
            }
        }
        for &(_, x) in assignment {
            if x as usize >= self.s.size() {
                return Err(Error::pre(format!("element {x} outside the universe")));
            }
        }
        let saved: Vec<(Var, u32)> = assignment.iter().map(|&(v, _)| (v, self.get(v))).collect();
        for &(v, x) in assignment {
            self.set(v, x);
        }
        let r = self.eval_node(phi);
        for (v, x) in saved.into_iter().rev() {
            self.set(v, x);
        }
        Ok(r)
    }

    fn get(&self, v: Var) -> u32 {
        self.env.get(v.id()).copied().unwrap_or(UNBOUND)
    }

    fn set(&mut self, v: Var, x: u32) {
        let id = v.id();
        if id >= self.env.len() {
            self.env.resize(id + 1, UNBOUND);
        }
        self.env[id] = x;
    }

    fn eval_node(&mut self, f: &Formula) -> bool {
        match f.kind() {
            Kind::Const(b) => *b,
            Kind::Rel(sym, args) => {
                let vals: Values = args.iter().map(|&v| self.get(v)).collect();
                let idx = self.rel_index[sym];
                self.s.relation(idx).contains(&vals)
            }
            Kind::Eq(a, b) => self.get(*a) == self.get(*b),
            Kind::Not(g) => !self.eval_node(g),
            Kind::And(gs) => gs.iter().all(|g| self.eval_node(g)),
            Kind::Or(gs) => gs.iter().any(|g| self.eval_node(g)),
            Kind::Exists(vs, body) | Kind::Forall(vs, body) => {
                let existential = matches!(f.kind(), Kind::Exists(..));
                let addr = Arc::as_ptr(&f.0) as usize;
                let key = (addr, f.free_vars().iter().map(|&v| self.get(v)).collect::<Values>());
                if let Some(&r) = self.memo.get(&key) {
                    return r;
                }
                let plan = match self.plans.get(&addr) {
                    Some((_, p)) => p.clone(),
                    None => {
                        let p = Arc::new(build_plan(vs, body, existential));
                        self.plans.insert(addr, (f.clone(), p.clone()));
                        p
                    }
                };
                let saved: Values = vs.iter().map(|&v| self.get(v)).collect();
                let found = self.search(&plan);
                for (&v, x) in vs.iter().zip(saved) {
                    self.set(v, x);
                }
                let r = if existential { found } else { !found };
                self.memo.insert(key, r);
                r
            }
        }
    }

    fn items_hold(&mut self, items: &[(Formula, bool)]) -> bool {
        items.iter().all(|(f, need)| self.eval_node(f) == *need)
    }

    fn search(&mut self, plan: &Plan) -> bool {
        if !self.items_hold(&plan.upfront) {
            return false;
        }
        self.search_stage(plan, 0)
    }

    fn candidates(&self, stage: &Stage) -> Values {
        let mut best: Option<&[u32]> = None;
        for g in &stage.gens {
            match g {
                Gen::Eq(v) => return smallvec::smallvec![self.get(*v)],
                Gen::Rel { sym, pos, others } => {
                    let vals: Values = others.iter().map(|&v| self.get(v)).collect();
                    let list = self.s.relation(self.rel_index[sym]).completions(*pos, &vals);
                    if best.map_or(true, |b| list.len() < b.len()) {
                        best = Some(list);
                    }
                }
            }
        }
        match best {
            Some(list) => Values::from_slice(list),
            None => (0..self.s.size() as u32).collect(),
        }
    }

    fn search_stage(&mut self, plan: &Plan, i: usize) -> bool {
        let Some(stage) = plan.stages.get(i) else {
            return true;
        };
        for x in self.candidates(stage) {
            self.set(stage.var, x);
            if self.items_hold(&stage.checks) && self.search_stage(plan, i + 1) {
                return true;
            }
        }
        false
    }
}

/// Truth of `phi` in `s` under `assignment` (variables to element indices).
pub fn eval_formula(s: &Structure, phi: &Formula, assignment: &[(Var, u32)]) -> Result<bool> {
    Evaluator::new(s).eval(phi, assignment)
}
