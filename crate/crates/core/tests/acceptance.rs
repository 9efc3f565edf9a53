//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero if
//! any criterion fails. Pass criterion numbers as arguments to run a subset.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use structcode::backforth::{
    bf_equiv_literal, interval_equiv, lg_certify, lg_concat_certify, BfSolver, PairFormulas, TupleFormulas, Verdict,
};
use structcode::codings::{
    daisy_decode, daisy_encode, min_resolution, shuffle_build_set, shuffle_decode, BlockLabel, Membership,
};
use structcode::dyadic::{ColorOrderMap, Dyadic};
use structcode::formula::{Class, Evaluator, Formula};
use structcode::fslin::{
    apply_first_coord_map, block_of, fs_enumerate, fs_member, mentions, min_length_in_interval, random_member, shape,
    shape_formulas, shift_tuple, FSElement, Side, Term,
};
use structcode::interp::{
    builtin_int_in_nat, check_interpretation, check_marker, trivial_interp, Family, ObligationKind,
};
use structcode::iso::{digraphs_up_to_iso, iso_digraph, iso_ugraph, IsoOptions};
use structcode::marker::{marker_decode, marker_decoder_formulas, marker_encode, DecodedFact, InputFact, Role, StreamDecoder};
use structcode::structure::{Digraph, FinLinOrder, Signature, Structure};
use structcode::symbol::Var;
use structcode::types::atomic_type_of;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_digraph(rng: &mut ChaCha8Rng, max_n: usize, loops: bool) -> Digraph {
    let n = rng.gen_range(1..=max_n) as u64;
    let p = rng.gen_range(0.1..0.7);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if (u != v || loops) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::new(0..n, edges).expect("valid digraph")
}

fn shuffled_labels(g: &Digraph, rng: &mut ChaCha8Rng) -> Digraph {
    let mut ids: Vec<u64> = (0..g.len() as u64 * 3).collect();
    ids.shuffle(rng);
    let map: BTreeMap<u64, u64> = g.vertices().iter().copied().zip(ids).collect();
    g.relabel(|v| map[&v])
}

fn small_digraphs(max_n: usize, loops: bool) -> Vec<Digraph> {
    (0..=max_n).flat_map(|n| digraphs_up_to_iso(n, loops)).collect()
}

fn check_marker_instance(g: &Digraph) -> Result<(), String> {
    let out = marker_encode(g).map_err(|e| e.to_string())?;
    let back = marker_decode(&out.graph).map_err(|e| e.to_string())?;
    let iso = iso_digraph(g, &back, IsoOptions::default()).map_err(|e| e.to_string())?;
    ensure(iso.is_some(), || format!("decode is not isomorphic for {g:?}"))?;
    let s = out.graph.to_structure();
    let (b, sq, pent) = marker_decoder_formulas();
    let (x, y) = (Var::new("x"), Var::new("y"));
    let mut ev = Evaluator::new(&s);
    let mut bases = Vec::new();
    for e in 0..s.size() as u32 {
        let role = out.roles[&s.label(e as usize)];
        let is_base = matches!(role, Role::Base { .. });
        ensure(ev.eval(&b, &[(x, e)]).unwrap() == is_base, || format!("B disagrees at {role:?}"))?;
        if let Role::Base { vertex } = role {
            bases.push((e, vertex));
        }
    }
    for &(e1, v1) in &bases {
        for &(e2, v2) in &bases {
            if e1 == e2 {
                continue;
            }
            let edge = g.has_edge(v1, v2);
            ensure(ev.eval(&sq, &[(x, e1), (y, e2)]).unwrap() == edge, || format!("Sq disagrees at ({v1},{v2})"))?;
            ensure(ev.eval(&pent, &[(x, e1), (y, e2)]).unwrap() == !edge, || format!("Pent disagrees at ({v1},{v2})"))?;
        }
    }
    Ok(())
}

fn marker_round_trip() -> Outcome {
    let small = small_digraphs(4, false);
    for g in &small {
        check_marker_instance(g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let g = shuffled_labels(&random_digraph(&mut rng, 12, false), &mut rng);
        check_marker_instance(&g)?;
    }
    Ok(format!("{} small classes and 200 random digraphs up to 12 vertices", small.len()))
}

fn marker_embedding() -> Outcome {
    let small = small_digraphs(4, false);
    let wide = IsoOptions::with_max_size(256);
    let encoded: Vec<_> = small.iter().map(|g| marker_encode(g).unwrap().graph).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checks = 0usize;
    for (i, g) in small.iter().enumerate() {
        let copy = marker_encode(&shuffled_labels(g, &mut rng)).unwrap().graph;
        let same = iso_ugraph(&encoded[i], &copy, wide).unwrap();
        ensure(same.is_some(), || format!("encodings of isomorphic copies differ for {g:?}"))?;
        for (j, h) in encoded.iter().enumerate().skip(i + 1) {
            checks += 1;
            let m = iso_ugraph(&encoded[i], h, wide).unwrap();
            ensure(m.is_none(), || format!("classes {i} and {j} have isomorphic encodings"))?;
        }
    }
    Ok(format!("{} classes, {} distinct pairs, {} copies", small.len(), checks, small.len()))
}

fn stream_decoding() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let g = random_digraph(&mut rng, 7, false);
        let out = marker_encode(&g).unwrap();
        let batch = marker_decode(&out.graph).unwrap();
        let facts = InputFact::diagram(&out.graph);
        for _ in 0..10 {
            let mut order = facts.clone();
            order.shuffle(&mut rng);
            let mut dec = StreamDecoder::new();
            let mut seen: Vec<DecodedFact> = Vec::new();
            for f in order {
                let before = dec.emitted().to_vec();
                let new = dec.push(f);
                ensure(dec.emitted().starts_with(&before), || "emitted facts were rewritten".into())?;
                seen.extend(new);
            }
            ensure(seen == dec.emitted(), || "returned facts differ from the emitted log".into())?;
            for fact in &seen {
                let ok = match *fact {
                    DecodedFact::Vertex(v) => batch.has_vertex(v),
                    DecodedFact::Edge(u, v) => batch.has_edge(u, v),
                    DecodedFact::NonEdge(u, v) => batch.has_vertex(u) && batch.has_vertex(v) && !batch.has_edge(u, v),
                };
                ensure(ok, || format!("emitted fact {fact:?} is retracted by the batch decode"))?;
            }
            ensure(dec.decoded() == batch, || "stream limit differs from batch decode".into())?;
        }
    }
    Ok("50 graphs x 10 orderings".into())
}

/// Sparse table for range minima of half-lengths.
struct RangeMin(Vec<Vec<usize>>);

impl RangeMin {
    fn new(v: &[usize]) -> Self {
        let mut levels = vec![v.to_vec()];
        let mut w = 1;
        while 2 * w <= v.len() {
            let prev = levels.last().unwrap();
            levels.push((0..=v.len() - 2 * w).map(|i| prev[i].min(prev[i + w])).collect());
            w *= 2;
        }
        RangeMin(levels)
    }

    fn min(&self, lo: usize, hi: usize) -> usize {
        let len = hi - lo + 1;
        let k = usize::BITS as usize - 1 - len.leading_zeros() as usize;
        self.0[k][lo].min(self.0[k][hi + 1 - (1 << k)])
    }
}

fn prefix_terms(x: &FSElement, j: usize) -> Vec<Term> {
    let mut out = Vec::new();
    for i in 0..j {
        out.push(Term::Dyadic(x.rs()[i]));
        out.push(Term::Dyadic(x.qs()[i]));
    }
    out
}

#[derive(Default)]
struct FsTally {
    members: usize,
    blocks: usize,
    gaps: usize,
    pairs: usize,
    extension_failures: usize,
    first_failure: Option<String>,
}

fn fs_fragment_checks(g: &Digraph, half: usize, exp: u32, rng: &mut ChaCha8Rng, t: &mut FsTally) -> Result<(), String> {
    let frag = fs_enumerate(g, half, exp).map_err(|e| e.to_string())?;
    t.members += frag.len();
    for x in &frag {
        ensure(fs_member(g, x).unwrap(), || format!("{x} fails membership"))?;
        let m = mentions(x);
        let distinct: BTreeSet<u64> = m.iter().copied().collect();
        ensure(distinct.len() == m.len() && m.len() == x.half_length(), || format!("{x} mentions {m:?}"))?;
    }

    let mut i = 0;
    while i < frag.len() {
        let mut j = i;
        while j + 1 < frag.len() && frag[j + 1].same_block_prefix(&frag[i]) {
            j += 1;
        }
        let m = atomic_type_of(g, &mentions(&frag[i])).unwrap().index();
        ensure((j - i + 1) as u64 == m, || format!("block at {} has {} members, type index {m}", frag[i], j - i + 1))?;
        for (k, x) in frag[i..=j].iter().enumerate() {
            ensure(x.tail() == k as u64, || format!("{x} is out of place in its block"))?;
            ensure(block_of(g, x).unwrap() == (m, k as u64), || format!("block_of disagrees at {x}"))?;
        }
        if j + 1 < frag.len() {
            let (a, b) = (&frag[j], &frag[j + 1]);
            let (_, w) = min_length_in_interval(g, a, b).unwrap();
            ensure(a < &w && &w < b, || format!("nothing strictly between blocks {a} and {b}"))?;
        }
        t.blocks += 1;
        i = j + 1;
    }

    let mut spans: HashMap<Vec<Term>, (usize, usize, usize)> = HashMap::new();
    for (pos, x) in frag.iter().enumerate() {
        for j in 0..=x.half_length() {
            let e = spans.entry(prefix_terms(x, j)).or_insert((pos, pos, 0));
            e.0 = e.0.min(pos);
            e.1 = e.1.max(pos);
            e.2 += 1;
        }
    }
    for x in &frag {
        let n = x.half_length();
        let (lo, hi, count) = spans[&prefix_terms(x, n)];
        ensure(hi - lo + 1 == count, || format!("the gap around {x} is interrupted"))?;
        ensure(frag[lo..=hi].iter().all(|z| z.half_length() >= n), || format!("short member in the gap of {x}"))?;
        t.gaps += 1;
    }

    let rm = RangeMin::new(&frag.iter().map(FSElement::half_length).collect::<Vec<_>>());
    let mut pairs: Vec<(usize, usize)> = (0..frag.len().saturating_sub(1)).map(|i| (i, i + 1)).collect();
    for _ in 0..200 {
        let a = rng.gen_range(0..frag.len());
        let b = (a + rng.gen_range(1..=64)).min(frag.len() - 1);
        if a < b {
            pairs.push((a, b));
        }
    }
    for (a, b) in pairs {
        let (x, y) = (&frag[a], &frag[b]);
        let (k, w) = min_length_in_interval(g, x, y).map_err(|e| e.to_string())?;
        ensure(fs_member(g, &w).unwrap(), || format!("witness {w} is not a member"))?;
        ensure(x <= &w && &w <= y && w.half_length() == k, || format!("witness {w} misplaced in [{x}, {y}]"))?;
        ensure(rm.min(a, b) >= k, || format!("fragment member shorter than {k} in [{x}, {y}]"))?;
        t.pairs += 1;
        let base = mentions(&w);
        if let Some(z) = frag[a..=b].iter().find(|z| !mentions(z).starts_with(&base)) {
            t.extension_failures += 1;
            if t.first_failure.is_none() {
                t.first_failure = Some(format!(
                    "in [{x}, {y}] the witness {w} mentions {base:?} but {z} mentions {:?}",
                    mentions(z)
                ));
            }
        }
    }
    Ok(())
}

fn fs_lemmas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut t = FsTally::default();
    let graphs = small_digraphs(3, true);
    for g in &graphs {
        fs_fragment_checks(g, 2, 3, &mut rng, &mut t)?;
        fs_fragment_checks(g, 1, 5, &mut rng, &mut t)?;
    }
    let summary = format!(
        "{} graphs; (a) {} members, (b) {} blocks, (c) {} gaps; (d) {} intervals",
        graphs.len(),
        t.members,
        t.blocks,
        t.gaps,
        t.pairs
    );
    match t.first_failure {
        None => Ok(summary),
        Some(ex) => Err(format!(
            "{summary}: (a)-(c) hold and (d) witnesses are members and minimal, but {} intervals contain members not mentioning an extension of the witness's tuple, e.g. {ex}",
            t.extension_failures
        )),
    }
}

fn random_tuple(g: &Digraph, rng: &mut ChaCha8Rng, len: usize, half: usize) -> Vec<FSElement> {
    let mut out: Vec<FSElement> = Vec::new();
    while out.len() < len {
        let x = random_member(g, rng, half, 6).unwrap();
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn same_color_partner(d: Dyadic, rng: &mut ChaCha8Rng) -> Dyadic {
    let pool: Vec<Dyadic> = Dyadic::all_up_to(7).into_iter().filter(|e| e.color() == d.color()).collect();
    *pool.choose(rng).unwrap()
}

fn shape_machinery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let g = random_digraph(&mut rng, 4, true);
        let len = rng.gen_range(1..=3);
        let t = random_tuple(&g, &mut rng, len, 2);
        let s = shape(&g, &t).unwrap();
        let d = t[rng.gen_range(0..len)].first();
        let mut f = ColorOrderMap::new([(d, same_color_partner(d, &mut rng))]).unwrap();
        let image: Vec<FSElement> = t.iter().map(|x| apply_first_coord_map(&mut f, x).unwrap()).collect();
        ensure(image.iter().all(|x| fs_member(&g, x).unwrap()), || "automorphism left L(G)".into())?;
        ensure(shape(&g, &image).unwrap() == s, || format!("shape moved under the automorphism on {t:?}"))?;
        let c = loop {
            let c = random_member(&g, &mut rng, 2, 6).unwrap();
            if !t.contains(&c) {
                break c;
            }
        };
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let shifted = shift_tuple(&g, &t, &c, side).map_err(|e| e.to_string())?;
        ensure(shape(&g, &shifted.tuple).unwrap() == s, || format!("shape moved under the shift of {t:?}"))?;
    }
    let mut exact = 0;
    while exact < 50 {
        let g = random_digraph(&mut rng, 3, true);
        let len = rng.gen_range(1..=3);
        let t = random_tuple(&g, &mut rng, len, 2);
        if t.iter().all(|x| x.half_length() == 0) {
            continue;
        }
        let f = shape_formulas(&shape(&g, &t).unwrap()).unwrap();
        ensure(f.sigma.class() == Class::Sigma(4) && f.pi.class() == Class::Pi(4), || {
            format!("shape of {t:?} classified {} / {}", f.sigma.class(), f.pi.class())
        })?;
        exact += 1;
    }
    Ok("200 invariance instances, 50 shapes at Sigma4/Pi4".into())
}

fn shift_realization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let g = random_digraph(&mut rng, 4, true);
        let len = rng.gen_range(1..=3);
        let t = random_tuple(&g, &mut rng, len, 2);
        let c = loop {
            let c = random_member(&g, &mut rng, 2, 6).unwrap();
            if !t.contains(&c) {
                break c;
            }
        };
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let r = shift_tuple(&g, &t, &c, side).map_err(|e| e.to_string())?;
        let sep = &r.separator;
        ensure(fs_member(&g, sep).unwrap() && sep.len() == 2, || format!("bad separator {sep}"))?;
        let placed = match side {
            Side::Right => &c < sep && r.tuple.iter().all(|x| sep < x),
            Side::Left => sep < &c && r.tuple.iter().all(|x| x < sep),
        };
        ensure(placed, || format!("separator {sep} is not between {c} and the image"))?;
        ensure(r.tuple.iter().all(|x| fs_member(&g, x).unwrap()), || "image left L(G)".into())?;
        ensure(shape(&g, &r.tuple).unwrap() == shape(&g, &t).unwrap(), || "image has another shape".into())?;
    }
    Ok("200 instances".into())
}

fn tuples(n: usize, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<u32>> = layer
            .iter()
            .flat_map(|t: &Vec<u32>| {
                (0..n as u32).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

struct Bnf {
    instances: usize,
    verdicts: Vec<bool>,
}

const MAX_GAMMA: u32 = 2;
const BNF_BOUND: usize = 4;

/// Compares `φ_ā` and the pair formulas with the solver on every pair of structures in `group`,
/// recording solver verdicts for the move-bound check.
fn bnf_group(group: &[Structure], sig: &Signature, out: &mut Bnf) -> Result<(), String> {
    let mut pair = PairFormulas::new(sig.clone(), BNF_BOUND);
    let xs = |t: &[u32]| -> Vec<(Var, u32)> { t.iter().enumerate().map(|(i, &e)| (Var::indexed("x", i), e)).collect() };
    let ys = |t: &[u32]| -> Vec<(Var, u32)> { t.iter().enumerate().map(|(i, &e)| (Var::indexed("y", i), e)).collect() };
    let mut evals: Vec<Evaluator> = group.iter().map(Evaluator::new).collect();
    for a in group {
        let mut gen = TupleFormulas::new(a, BNF_BOUND);
        let ta_all = tuples(a.size(), 2);
        let phis: Vec<Vec<Formula>> = ta_all
            .iter()
            .map(|ta| (0..=MAX_GAMMA).map(|g| gen.formula(ta, g).unwrap()).collect())
            .collect();
        for (bi, b) in group.iter().enumerate() {
            let mut solver = BfSolver::new(a, b, BNF_BOUND).map_err(|e| e.to_string())?;
            for (ti, ta) in ta_all.iter().enumerate() {
                for tb in tuples(b.size(), 2).iter().filter(|tb| tb.len() == ta.len()) {
                    for gamma in 0..=MAX_GAMMA {
                        let v = solver.equiv(ta, tb, gamma).unwrap();
                        let phi = evals[bi].eval(&phis[ti][gamma as usize], &xs(tb)).unwrap();
                        ensure(phi == v, || format!("phi_tuple disagrees: {ta:?} / {tb:?} at gamma {gamma}"))?;
                        out.verdicts.push(v);
                        out.instances += 1;
                    }
                }
            }
        }
    }
    for (ai, a) in group.iter().enumerate() {
        let mut solver = BfSolver::new(a, a, BNF_BOUND).map_err(|e| e.to_string())?;
        for ta in tuples(a.size(), 2) {
            for tb in tuples(a.size(), 2).iter().filter(|tb| tb.len() == ta.len()) {
                for gamma in 0..=MAX_GAMMA {
                    let f = pair.formula(ta.len(), gamma);
                    let mut asg = xs(&ta);
                    asg.extend(ys(tb));
                    let v = solver.equiv(&ta, tb, gamma).unwrap();
                    ensure(evals[ai].eval(&f, &asg).unwrap() == v, || {
                        format!("phi_pair disagrees: {ta:?} / {tb:?} at gamma {gamma}")
                    })?;
                    out.instances += 1;
                }
            }
        }
    }
    Ok(())
}

fn bnf_structures() -> (Vec<Structure>, Vec<Structure>) {
    let graphs: Vec<Structure> = small_digraphs(3, true)
        .iter()
        .chain(&digraphs_up_to_iso(4, false))
        .map(Digraph::to_structure)
        .collect();
    let orders: Vec<Structure> = (0..=4).map(|n| FinLinOrder::chain(n).to_structure()).collect();
    (graphs, orders)
}

fn increasing(n: usize) -> Vec<Vec<u64>> {
    (0u32..1 << n)
        .map(|m| (0..n as u64).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

fn bnf_oracle() -> Outcome {
    let (graphs, orders) = bnf_structures();
    let mut out = Bnf { instances: 0, verdicts: Vec::new() };
    bnf_group(&graphs, &Signature::digraph(), &mut out)?;
    bnf_group(&orders, &Signature::order(), &mut out)?;
    let mut intervals = 0;
    for na in 0..=6 {
        for nb in 0..=6 {
            let (a, b) = (FinLinOrder::chain(na), FinLinOrder::chain(nb));
            let (sa, sb) = (a.to_structure(), b.to_structure());
            let mut solver = BfSolver::new(&sa, &sb, na.max(nb)).unwrap();
            for ta in increasing(na) {
                for tb in increasing(nb).into_iter().filter(|t| t.len() == ta.len()) {
                    for gamma in 0..=MAX_GAMMA {
                        let r = interval_equiv(&a, &ta, &b, &tb, gamma).unwrap();
                        let ea = sa.elements_of(&ta).unwrap();
                        let eb = sb.elements_of(&tb).unwrap();
                        let direct = solver.equiv(&ea, &eb, gamma).unwrap();
                        ensure(r.equivalent == direct, || {
                            format!("interval_equiv disagrees on {na}:{ta:?} / {nb}:{tb:?} at gamma {gamma}")
                        })?;
                        intervals += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} structures, {} formula/solver comparisons, {} interval comparisons",
        graphs.len() + orders.len(),
        out.instances,
        intervals
    ))
}

fn move_bound() -> Outcome {
    let (graphs, orders) = bnf_structures();
    let mut compared = 0usize;
    for group in [&graphs, &orders] {
        for a in group {
            for b in group {
                let mut base = BfSolver::new(a, b, a.size().max(b.size())).unwrap();
                let mut raised = BfSolver::new(a, b, a.size() + b.size() + 2).unwrap();
                for ta in tuples(a.size(), 2) {
                    for tb in tuples(b.size(), 2).iter().filter(|tb| tb.len() == ta.len()) {
                        for gamma in 0..=MAX_GAMMA {
                            ensure(base.equiv(&ta, tb, gamma).unwrap() == raised.equiv(&ta, tb, gamma).unwrap(), || {
                                format!("raising the bound changed {ta:?} / {tb:?} at gamma {gamma}")
                            })?;
                            compared += 1;
                        }
                    }
                }
            }
        }
    }
    let mut literal = 0usize;
    let tiny: Vec<&Structure> = graphs.iter().chain(&orders).filter(|s| s.size() <= 2).collect();
    for a in &tiny {
        for b in &tiny {
            if a.signature() != b.signature() {
                continue;
            }
            let mut solver = BfSolver::new(a, b, a.size().max(b.size())).unwrap();
            for ta in tuples(a.size(), 1) {
                for tb in tuples(b.size(), 1).iter().filter(|tb| tb.len() == ta.len()) {
                    for gamma in 0..=MAX_GAMMA {
                        let v = solver.equiv(&ta, tb, gamma).unwrap();
                        let lens: Vec<usize> = if gamma <= 1 {
                            vec![a.size().max(b.size()), a.size() + b.size() + 2]
                        } else {
                            vec![a.size().max(b.size())]
                        };
                        for len in lens {
                            let l = bf_equiv_literal(a, &ta, b, tb, gamma, len).unwrap();
                            ensure(l == v, || format!("literal definition with moves up to {len} disagrees"))?;
                            literal += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{compared} solver verdicts unchanged; {literal} literal-definition checks agree"))
}

fn certificate_runs(seed: u64) -> Result<Vec<Verdict>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verdicts = Vec::new();
    for _ in 0..100 {
        let g = random_digraph(&mut rng, 3, true);
        let len = rng.gen_range(1..=3);
        let t = random_tuple(&g, &mut rng, len, 2);
        let c = loop {
            let c = random_member(&g, &mut rng, 2, 6).unwrap();
            if !t.contains(&c) {
                break c;
            }
        };
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let moved = shift_tuple(&g, &t, &c, side).map_err(|e| e.to_string())?.tuple;
        let gamma = rng.gen_range(0..=3);
        verdicts.push(lg_certify(&g, &t, &moved, gamma).map_err(|e| e.to_string())?.verdict);
    }
    let g = Digraph::new([0, 1], [(0, 1)]).unwrap();
    let frag = fs_enumerate(&g, 1, 4).unwrap();
    let by_block: BTreeMap<u64, Vec<&FSElement>> = frag.iter().fold(BTreeMap::new(), |mut m, x| {
        m.entry(block_of(&g, x).unwrap().0).or_insert_with(Vec::new).push(x);
        m
    });
    let sizes: Vec<u64> = by_block.keys().copied().collect();
    for i in 0..100 {
        let (l, r) = if i % 2 == 0 {
            let (m1, m2) = (sizes[rng.gen_range(0..sizes.len())], sizes[rng.gen_range(0..sizes.len())]);
            if m1 == m2 {
                let m2 = sizes[(sizes.iter().position(|&s| s == m1).unwrap() + 1) % sizes.len()];
                (vec![(*by_block[&m1].choose(&mut rng).unwrap()).clone()], vec![(*by_block[&m2].choose(&mut rng).unwrap()).clone()])
            } else {
                (vec![(*by_block[&m1].choose(&mut rng).unwrap()).clone()], vec![(*by_block[&m2].choose(&mut rng).unwrap()).clone()])
            }
        } else {
            let x = (*frag.choose(&mut rng).unwrap()).clone();
            let next = x.with_tail(x.tail() + 1);
            let close = if fs_member(&g, &next).unwrap() { next } else { x.with_tail(x.tail() - 1) };
            let far = loop {
                let y = (*frag.choose(&mut rng).unwrap()).clone();
                if !y.same_block_prefix(&x) {
                    break y;
                }
            };
            let mut a = vec![x.clone(), close];
            a.sort();
            let mut b = vec![x, far];
            b.sort();
            if rng.gen_bool(0.5) {
                (a, b)
            } else {
                (b, a)
            }
        };
        verdicts.push(lg_certify(&g, &l, &r, 2).map_err(|e| e.to_string())?.verdict);
    }
    Ok(verdicts)
}

fn certificates() -> Outcome {
    let first = certificate_runs(9)?;
    ensure(first[..100].iter().all(|v| *v == Verdict::Equivalent), || "a shift pair was not certified".into())?;
    ensure(first[100..].iter().all(|v| *v == Verdict::Distinguished), || {
        let bad = first[100..].iter().filter(|v| **v != Verdict::Distinguished).count();
        format!("{bad} mismatches were not distinguished")
    })?;
    ensure(certificate_runs(9)? == first, || "verdicts changed between identical runs".into())?;
    for seed in [10, 11, 12] {
        let other = certificate_runs(seed)?;
        ensure(other[..100].iter().all(|v| *v == Verdict::Equivalent), || format!("seed {seed}: shift pair uncertified"))?;
        ensure(other[100..].iter().all(|v| *v == Verdict::Distinguished), || format!("seed {seed}: mismatch missed"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let (mut eq, mut total) = (0, 0);
    while total < 100 {
        let g = random_digraph(&mut rng, 3, true);
        let mut xs = random_tuple(&g, &mut rng, 4, 2);
        xs.sort();
        let (b1, b2) = (&xs[..2], &xs[2..]);
        let c = random_member(&g, &mut rng, 2, 6).unwrap();
        let (c1, c2) = if rng.gen_bool(0.5) {
            (shift_tuple(&g, b1, &c, Side::Left).unwrap().tuple, shift_tuple(&g, b2, &c, Side::Right).unwrap().tuple)
        } else {
            let mut ys = random_tuple(&g, &mut rng, 4, 2);
            ys.sort();
            (ys[..2].to_vec(), ys[2..].to_vec())
        };
        if c1.iter().max() >= c2.iter().min() {
            continue;
        }
        let sep = |l: &[FSElement], r: &[FSElement]| {
            let (lo, hi) = (l.iter().max().unwrap(), r.iter().min().unwrap());
            let (k, w) = min_length_in_interval(&g, lo, hi).unwrap();
            k == 0 && lo < &w && &w < hi
        };
        let expected = lg_certify(&g, b1, &c1, 1).unwrap().verdict == Verdict::Equivalent
            && lg_certify(&g, b2, &c2, 1).unwrap().verdict == Verdict::Equivalent
            && sep(b1, b2)
            && sep(&c1, &c2);
        let got = lg_concat_certify(&g, (b1, b2), (&c1, &c2), 1).unwrap().verdict == Verdict::Equivalent;
        ensure(got == expected, || format!("concat verdict {got} where halves and separators say {expected}"))?;
        eq += usize::from(got);
        total += 1;
    }
    Ok(format!("100 shifts, 100 mismatches, 4 seeds; concat agrees on {total} cases ({eq} equivalent)"))
}

fn interpretations() -> Outcome {
    let start = Instant::now();
    let (b, spec, target) = builtin_int_in_nat(20).unwrap();
    let report = check_interpretation(&b, &spec, &target, 2).unwrap();
    ensure(report.passed && report.classes == 41, || format!("Z in N: passed {} with {} classes", report.passed, report.classes))?;
    let int_time = start.elapsed().as_secs_f64();

    let (b, mut faulty, target) = builtin_int_in_nat(4).unwrap();
    let x0 = structcode::interp::arg_var(0, 0);
    let zero_first = Formula::rel(structcode::symbol::Sym::new("Plus"), vec![x0, x0, x0]);
    faulty.domain.insert(2, Formula::truth());
    let plus = faulty.relations.iter_mut().find(|r| r.symbol.name() == "Plus").unwrap();
    let fam = plus.families.get_mut(&vec![2, 2, 2]).unwrap();
    let guard = fam.guard.clone().unwrap_or_else(Formula::truth);
    *fam = Family::new(Formula::and(vec![fam.pos.clone(), zero_first.clone()]))
        .with_neg(Formula::or(vec![fam.neg.clone().unwrap(), Formula::not(zero_first)]))
        .with_guard(guard);
    let report = check_interpretation(&b, &faulty, &target, 2).unwrap();
    let caught = report.failures.iter().find(|f| f.kind == ObligationKind::NotCongruence);
    ensure(caught.is_some_and(|f| !f.witness.is_empty()), || {
        format!("congruence fault not reported: {:?}", report.failures.iter().map(|f| f.kind).collect::<Vec<_>>())
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..20 {
        let a = random_digraph(&mut rng, 4, true).to_structure();
        let carrier = random_digraph(&mut rng, 3, true).to_structure();
        let (_, r) = trivial_interp(&a, &carrier).unwrap();
        ensure(r.passed, || format!("trivial interpretation failed: {:?}", r.failures))?;
    }
    let graphs = small_digraphs(4, false);
    for g in &graphs {
        let r = check_marker(g).unwrap();
        ensure(r.passed, || format!("Marker interpretation failed on {g:?}: {:?}", r.failures))?;
    }
    Ok(format!(
        "Z in N at 20: 41 classes in {int_time:.1}s; fault caught; 20 trivial; {} Marker graphs",
        graphs.len()
    ))
}

fn codings() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let bound = rng.gen_range(1..=16u64);
        let prefix: Vec<bool> = (0..bound).map(|_| rng.gen_bool(0.5)).collect();
        let g = daisy_encode(&prefix, bound).unwrap();
        let mut ids: Vec<u64> = (0..g.len() as u64 * 2).collect();
        ids.shuffle(&mut rng);
        let copy = g.relabel(|v| ids[v as usize]);
        ensure(daisy_decode(&copy).unwrap().prefix == prefix, || format!("daisy round trip failed for {prefix:?}"))?;
    }
    let need = min_resolution(6);
    for mask in 0u32..32 {
        let prefix: Vec<bool> = (0..5).map(|n| mask >> n & 1 == 1).collect();
        let expected: BTreeSet<u64> = (0..5).filter(|&n| prefix[n as usize]).collect();
        let mut last: Option<Vec<Membership>> = None;
        for r in need..need + 3 {
            let f = shuffle_build_set(&prefix, 5, r).unwrap();
            let rep = shuffle_decode(&f).unwrap();
            ensure(rep.members() == expected, || format!("shuffle round trip failed for {expected:?} at {r}"))?;
            if let Some(prev) = &last {
                ensure(prev == &rep.verdicts, || "verdicts changed with resolution".into())?;
            }
            last = Some(rep.verdicts.clone());
            let labels: BTreeSet<BlockLabel> = f.blocks.iter().map(|b| b.label).collect();
            for half in [(0.0, 0.5), (0.5, 1.0)] {
                let here: BTreeMap<BlockLabel, usize> = f
                    .blocks
                    .iter()
                    .filter(|b| half.0 < b.index.to_f64() && b.index.to_f64() < half.1)
                    .fold(BTreeMap::new(), |mut m, b| {
                        *m.entry(b.label).or_default() += 1;
                        m
                    });
                ensure(labels.iter().all(|l| here.get(l).copied().unwrap_or(0) >= 1), || {
                    format!("a label is missing from {half:?} at resolution {r}")
                })?;
            }
        }
    }
    Ok(format!("100 daisies; 32 sets at resolutions {need}..{}", need + 2))
}

fn determinism() -> Outcome {
    let bad = common::check_goldens();
    ensure(bad.is_empty(), || format!("golden mismatches: {bad:?}"))?;
    for c in common::CASES {
        ensure(common::run_case(c) == common::run_case(c), || format!("{} is not stable", c.name))?;
    }
    Ok(format!("{} golden cases", common::CASES.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("Marker round-trip", marker_round_trip),
        ("Marker embedding property", marker_embedding),
        ("stream decoding", stream_decoding),
        ("FS structural lemmas", fs_lemmas),
        ("shape machinery", shape_machinery),
        ("shift realization", shift_realization),
        ("back-and-forth oracle agreement", bnf_oracle),
        ("move-bound validation", move_bound),
        ("certificates", certificates),
        ("interpretation checking", interpretations),
        ("codings", codings),
        ("determinism", determinism),
    ];
    let only: BTreeSet<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !only.is_empty() && !only.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n:>2} PASS  {name} ({secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name} ({secs:.1}s): {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
