use std::collections::BTreeSet;

use proptest::prelude::*;

use structcode::backforth::BfSolver;
use structcode::codings::{daisy_decode, daisy_encode, min_resolution, shuffle_build_set, shuffle_decode, ShuffleFragment};
use structcode::dyadic::{ColorOrderMap, Dyadic};
use structcode::formula::Formula;
use structcode::fslin::{fs_compare, fs_member, random_member, FSElement};
use structcode::iso::{is_isomorphism, iso_digraph, IsoOptions};
use structcode::marker::{marker_decode, marker_encode};
use structcode::structure::Digraph;

fn dyadic() -> impl Strategy<Value = Dyadic> {
    (1u32..=10).prop_flat_map(|exp| (0u64..(1 << (exp - 1))).prop_map(move |k| Dyadic::new(2 * k + 1, exp).unwrap()))
}

fn digraph(max: u64, loops: bool) -> impl Strategy<Value = Digraph> {
    (1..=max).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=(n * n) as usize).prop_map(move |edges| {
            let edges: Vec<(u64, u64)> = edges.into_iter().filter(|(u, v)| loops || u != v).collect();
            Digraph::new(0..n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dyadic_order_matches_reals(a in dyadic(), b in dyadic()) {
        prop_assert_eq!(a.cmp(&b), a.to_f64().partial_cmp(&b.to_f64()).unwrap());
        prop_assert_eq!(a.to_string().parse::<Dyadic>().unwrap(), a);
    }

    #[test]
    fn color_order_maps_preserve_order_and_colour(seed in dyadic(), qs in proptest::collection::vec(dyadic(), 1..6)) {
        let target = structcode::dyadic::first_of_color(seed.color()).unwrap();
        let mut f = ColorOrderMap::new([(seed, target)]).unwrap();
        let images: Vec<Dyadic> = qs.iter().map(|&q| f.extend_map(q).unwrap()).collect();
        for (i, (&q, &fq)) in qs.iter().zip(&images).enumerate() {
            prop_assert_eq!(q.color(), fq.color());
            for (&r, &fr) in qs.iter().zip(&images).skip(i + 1) {
                prop_assert_eq!(q.cmp(&r), fq.cmp(&fr));
            }
        }
    }

    #[test]
    fn fs_order_is_total_and_json_round_trips(g in digraph(3, true), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let xs: Vec<FSElement> = (0..4).map(|_| random_member(&g, &mut rng, 2, 4).unwrap()).collect();
        for x in &xs {
            prop_assert!(fs_member(&g, x).unwrap());
            prop_assert_eq!(&FSElement::parse_json(&x.to_string()).unwrap(), x);
            for y in &xs {
                prop_assert_eq!(fs_compare(x, y), fs_compare(y, x).reverse());
                prop_assert_eq!(fs_compare(x, y).is_eq(), x == y);
            }
        }
    }

    #[test]
    fn marker_round_trip(g in digraph(5, false)) {
        let enc = marker_encode(&g).unwrap();
        let back = marker_decode(&enc.graph).unwrap();
        prop_assert!(iso_digraph(&g, &back, IsoOptions::default()).unwrap().is_some());
    }

    #[test]
    fn daisy_round_trip(prefix in proptest::collection::vec(any::<bool>(), 0..12), extra in 0u64..4) {
        let bound = (prefix.len() as u64 + extra).max(1);
        let d = daisy_decode(&daisy_encode(&prefix, bound).unwrap()).unwrap();
        let mut expected = prefix.clone();
        expected.resize(bound as usize, false);
        prop_assert_eq!(d.prefix, expected);
    }

    #[test]
    fn shuffle_text_round_trip(prefix in proptest::collection::vec(any::<bool>(), 1..5)) {
        let bound = prefix.len() as u64;
        let res = min_resolution(prefix.len() + 1);
        let frag = shuffle_build_set(&prefix, bound, res).unwrap();
        let parsed = ShuffleFragment::parse(&frag.to_text()).unwrap();
        let members: BTreeSet<u64> = (0..bound).filter(|&n| prefix[n as usize]).collect();
        prop_assert_eq!(shuffle_decode(&parsed).unwrap().members(), members);
        prop_assert_eq!(parsed.to_text(), frag.to_text());
    }

    #[test]
    fn positive_levels_are_isomorphism_extension(a in digraph(3, true), b in digraph(3, true), x in 0u32..3, y in 0u32..3) {
        let (sa, sb) = (a.to_structure(), b.to_structure());
        let ta = vec![x % sa.size() as u32];
        let tb = vec![y % sb.size() as u32];
        let extends = sa.size() == sb.size()
            && permutations(sa.size() as u32).iter().any(|p| p[ta[0] as usize] == tb[0] && is_isomorphism(&sa, &sb, p));
        let mut solver = BfSolver::new(&sa, &sb, sa.size().max(sb.size())).unwrap();
        for gamma in 1..=2 {
            prop_assert_eq!(solver.equiv(&ta, &tb, gamma).unwrap(), extends);
        }
    }

    #[test]
    fn formula_text_round_trip(depth in 0usize..4, seed in any::<u32>()) {
        let f = Formula::parse(&random_formula(depth, seed, 0)).unwrap();
        prop_assert_eq!(Formula::parse(&f.to_string()).unwrap(), f);
    }
}

fn random_formula(depth: usize, seed: u32, var: usize) -> String {
    let pick = seed % 5;
    let next = seed / 5;
    let x = format!("v{}", var % 3);
    let y = format!("v{}", (var + 1) % 3);
    if depth == 0 {
        return match pick % 2 {
            0 => format!("(E {x} {y})"),
            _ => format!("(= {x} {y})"),
        };
    }
    let sub = random_formula(depth - 1, next, var + 1);
    match pick {
        0 => format!("(not {sub})"),
        1 => format!("(and {sub} {})", random_formula(depth - 1, next / 3, var)),
        2 => format!("(or {sub} {})", random_formula(depth - 1, next / 7, var + 2)),
        3 => format!("(exists ({y}) {sub})"),
        _ => format!("(forall ({x}) {sub})"),
    }
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
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
