mod common;

use guessgraph_core::cyclic::{cyclic_code_report, divisors_xn1, doubling_polynomial, Gf2Poly};
use guessgraph_core::digraph::{mas_exact, parse_digraph, write_digraph, DEFAULT_MAS_BUDGET};
use guessgraph_core::gf_linear::{
    linear_guessing_number, parse_matrix, write_matrix, GfMatrix, DEFAULT_LINEAR_BUDGET,
};
use guessgraph_core::guessing_graph::degree_closed_form;
use guessgraph_core::netcode::{from_digraph, to_guessing_digraph};
use guessgraph_core::solvers::{
    a_s_exact, bounds_report, code_bounds, fixed_configurations, protocol_from_independent_set,
    Side, Target, BOUND_TOLERANCE, CODE_GUARD,
};
use guessgraph_core::{guessing_number, information_defect, Digraph, GuessingGraph, SolveOptions};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1)).prop_map(move |bits| {
            let pairs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v);
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Digraph::from_edges(n, edges).unwrap()
        })
    })
}

fn opts() -> SolveOptions {
    SolveOptions::default()
}

#[test]
fn divmod_round_trip_up_to_degree_eight() {
    for a in 0u64..1 << 9 {
        for b in 1u64..1 << 5 {
            let (pa, pb) = (Gf2Poly::from_mask(a), Gf2Poly::from_mask(b));
            let (q, r) = pa.divmod(&pb).unwrap();
            assert_eq!(q.mul(&pb).add(&r), pa);
            assert!(r.is_zero() || r.degree() < pb.degree());
            let g = pa.gcd(&pb);
            assert!(pa.rem(&g).unwrap().is_zero() && pb.rem(&g).unwrap().is_zero());
        }
    }
}

#[test]
fn polynomial_text_round_trip() {
    for mask in 1u64..1 << 10 {
        let p = Gf2Poly::from_mask(mask);
        assert_eq!(p.to_string().parse::<Gf2Poly>().unwrap(), p);
        assert_eq!(p.to_bit_string().parse::<Gf2Poly>().unwrap(), p);
    }
}

#[test]
fn divisor_digraphs_are_regular_and_bidirectional_law_holds() {
    for n in 3..=12 {
        for g in divisors_xn1(n).unwrap() {
            if g.degree() == Some(n) {
                continue;
            }
            let r = cyclic_code_report(&g, n).unwrap();
            assert!(r.all_hold(), "n={n} g={g}\n{}", r.to_text());
        }
    }
}

#[test]
fn doubling_degree_and_weight() {
    for (g, t) in [
        ("x^2+x+1", 3),
        ("x^3+x+1", 7),
        ("x^3+x^2+1", 7),
        ("x^4+x^3+x^2+x+1", 5),
    ] {
        let g: Gf2Poly = g.parse().unwrap();
        for l in 1..=3 {
            let (h, n) = doubling_polynomial(&g, t, l).unwrap();
            assert_eq!(n, t << l);
            assert_eq!(h.degree(), Some(1 + (g.degree().unwrap() << l)));
            assert_eq!(h.weight(), 2 * g.weight());
            assert!(h.divides_xn1(n));
        }
    }
}

/// The `k` bits of vertex `v` at positions `v k .. v k + k` form its symbol
/// over `[s^k]`, least significant first.
fn expansion_bijection(d: &Digraph, s: u64, k: usize) {
    let big = s.pow(k as u32);
    let expanded = d.k_expand(k).unwrap();
    let total = s.pow(expanded.n() as u32);
    let map = |x: u64| {
        let w = common::digits(x, expanded.n(), s);
        let symbols: Vec<u64> = (0..d.n())
            .map(|v| common::encode(&w[v * k..v * k + k], s))
            .collect();
        common::encode(&symbols, big)
    };
    let h_small = GuessingGraph::materialize(&expanded, s, 1 << 12).unwrap();
    let h_big = GuessingGraph::materialize(d, big, 1 << 12).unwrap();
    for x in 0..total {
        for y in 0..total {
            let want = common::adjacent(d, big, map(x), map(y));
            assert_eq!(common::adjacent(&expanded, s, x, y), want);
            assert_eq!(h_small.adjacent(x, y).unwrap(), want);
            assert_eq!(h_big.adjacent(map(x), map(y)).unwrap(), want);
        }
    }
}

#[test]
fn expansion_matches_larger_alphabet() {
    expansion_bijection(
        &Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap(),
        2,
        2,
    );
    expansion_bijection(&Digraph::from_edges(2, [(0, 1), (1, 0)]).unwrap(), 2, 2);
    expansion_bijection(&Digraph::from_edges(2, [(0, 1)]).unwrap(), 3, 2);
}

#[test]
fn reed_solomon_fixture_meets_singleton() {
    let code = common::reed_solomon_4_2();
    assert_eq!(code.len(), 16);
    let min = (0..16)
        .flat_map(|i| (i + 1..16).map(move |j| (i, j)))
        .map(|(i, j)| code[i].iter().zip(&code[j]).filter(|(a, b)| a != b).count())
        .min()
        .unwrap();
    assert_eq!(min, 3);
    assert_eq!(a_s_exact(4, 3, 4, CODE_GUARD).unwrap(), 16);
    let b = code_bounds(4, 3, 4, CODE_GUARD);
    assert!(b.lower <= 16 && 16 <= b.upper && b.singleton == 16);
}

#[test]
fn binary_codes_match_subset_search() {
    for n in 1..=4 {
        for d in 1..=n as u32 + 1 {
            assert_eq!(
                a_s_exact(n, d as usize, 2, CODE_GUARD).unwrap(),
                common::brute_a2(n, d),
                "A_2({n},{d})"
            );
        }
    }
}

#[test]
fn random_independent_sets_give_protocols() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let shapes = [
        Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap(),
        Digraph::from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]).unwrap(),
        Digraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
    ];
    for trial in 0..100 {
        let d = &shapes[trial % shapes.len()];
        let s = 2 + (trial as u64 / 3) % 2;
        let mut order: Vec<u64> = (0..s.pow(d.n() as u32)).collect();
        order.shuffle(&mut rng);
        let mut set: Vec<u64> = Vec::new();
        for x in order {
            if set.iter().all(|&y| !common::adjacent(d, s, x, y)) {
                set.push(x);
            }
        }
        let p = protocol_from_independent_set(d, s, &set).unwrap();
        let fixed = fixed_configurations(d, s, &p, 1 << 12).unwrap();
        assert!(set.iter().all(|x| fixed.contains(x)));
        for (i, &x) in fixed.iter().enumerate() {
            assert!(fixed[i + 1..]
                .iter()
                .all(|&y| !common::adjacent(d, s, x, y)));
        }
    }
}

#[test]
fn from_digraph_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let d = common::random_digraph(&mut rng, 6, 0.35);
        let acyclic = mas_exact(&d, DEFAULT_MAS_BUDGET).witness;
        let inst = from_digraph(&d, &acyclic).unwrap();
        let form = to_guessing_digraph(&inst).unwrap();
        // Pairs come first in ascending order, then the acyclic vertices.
        let order: Vec<usize> = (0..d.n())
            .filter(|v| !acyclic.contains(v))
            .chain(acyclic.iter().copied())
            .collect();
        let mut perm = vec![0; d.n()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        assert_eq!(d.relabel(&perm).unwrap(), form.digraph);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_formula_matches_definition(d in digraph(5), s in 2u64..=3) {
        prop_assert_eq!(degree_closed_form(&d, s).unwrap(), common::degree_of_zero(&d, s));
    }

    #[test]
    fn mis_matches_subset_search(d in digraph(4)) {
        let edges = common::guessing_edges(&d, 2);
        let brute = common::brute_alpha(1 << d.n(), &edges);
        let g = guessing_number(&d, 2, &opts()).unwrap();
        prop_assert!(g.exact);
        prop_assert_eq!(g.alpha, brute);
        let witness = g.witness_set(1 << 12).unwrap();
        let fixed = fixed_configurations(&d, 2, &g.protocol, 1 << 12).unwrap();
        prop_assert_eq!(witness.len() as u64, brute);
        prop_assert!(witness.iter().all(|x| fixed.contains(x)));
    }

    #[test]
    fn mas_matches_subset_search(d in digraph(8)) {
        let m = mas_exact(&d, DEFAULT_MAS_BUDGET);
        prop_assert!(m.exact);
        prop_assert_eq!(m.size, common::brute_mas(&d));
        prop_assert!(d.is_acyclic_set(&m.witness));
    }

    #[test]
    fn linear_matches_exhaustive_matrices(d in digraph(5)) {
        prop_assume!(d.edge_count() <= 12);
        let lin = linear_guessing_number(&d, 2, DEFAULT_LINEAR_BUDGET).unwrap();
        prop_assert_eq!(lin.value(), Some(common::brute_linear_gf2(&d)));
        prop_assert_eq!(lin.witness.fixed_dimension(), lin.lower);
    }

    #[test]
    fn rank_matches_bit_elimination(rows in prop::collection::vec(0u64..1 << 6, 1..=6)) {
        let m = GfMatrix::from_rows(
            &rows.iter().map(|r| (0..6).map(|j| r >> j & 1).collect()).collect::<Vec<Vec<u64>>>(),
            2,
        ).unwrap();
        prop_assert_eq!(m.rank(), common::rank_gf2(&rows));
        prop_assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn digraph_text_round_trip(d in digraph(7)) {
        prop_assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
    }

    #[test]
    fn code_sandwich(d in digraph(4), s in 2u64..=3) {
        // log_s A_s(n, n - delta + 1) <= g <= log_s A_s(n, girth).
        let g = guessing_number(&d, s, &opts()).unwrap();
        let n = d.n();
        let lower = a_s_exact(n, n - d.min_in_degree() + 1, s, CODE_GUARD).unwrap();
        prop_assert!(lower <= g.alpha);
        if let guessgraph_core::Girth::Cycle(girth) = guessgraph_core::digraph::girth(&d) {
            prop_assert!(g.alpha <= a_s_exact(n, girth, s, CODE_GUARD).unwrap());
        }
    }

    #[test]
    fn ternary_defect_within_cover_bounds(d in digraph(3)) {
        let g = guessing_number(&d, 3, &opts()).unwrap();
        let b = information_defect(&d, 3, &opts()).unwrap();
        let mut report = bounds_report(&d, 3);
        report.add_alpha(g.alpha);
        let upper = report.get(Target::Defect, Side::Upper, "greedy_cover").unwrap();
        let lower = report.get(Target::Defect, Side::Lower, "fractional").unwrap();
        prop_assert!(lower - BOUND_TOLERANCE <= b.b() && b.b() <= upper + BOUND_TOLERANCE);
        prop_assert!(b.b() + g.g() >= d.n() as f64 - BOUND_TOLERANCE);
    }
}
