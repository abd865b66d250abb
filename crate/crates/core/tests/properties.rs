mod common;

use std::collections::HashSet;

use bramsey_core::bigraph::{read_coloring, write_coloring, Color, Coloring, Side, Vertex};
use bramsey_core::matching::{
    components, cover_report, cover_vertices, largest_connected_matching, matching_number, matching_number_without,
    min_vertex_cover, BipartiteGraph, ComponentType,
};
use common::{brute_cm_profile, Small};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn konig_equality_on_random_graphs() {
    let mut r = ChaCha8Rng::seed_from_u64(11);
    for i in 0..1000 {
        let g = Small::random(&mut r, 12, 12);
        let bg = BipartiteGraph::from_edges(g.nl, g.nr, g.edges());
        let m = bg.max_matching();
        let pairs = m.pairs();
        let mut used = HashSet::new();
        for &(u, v) in &pairs {
            assert!(g.adj[u] >> v & 1 == 1, "graph {i}: matched non-edge");
            assert!(used.insert((Side::Left, u)) && used.insert((Side::Right, v)), "graph {i}: not a matching");
        }
        let (cl, cr) = bg.konig_cover(&m);
        let left = cl.iter().fold(0u32, |s, &u| s | (1 << u));
        let right = cr.iter().fold(0u32, |s, &v| s | (1 << v));
        assert!(g.is_cover(left, right), "graph {i}: König set is not a cover");
        let tau = g.tau();
        assert_eq!(pairs.len(), tau, "graph {i}: ν differs from brute-force τ");
        assert_eq!(cl.len() + cr.len(), tau, "graph {i}: cover not minimum");
    }
}

fn corpus() -> Vec<Small> {
    let mut r = ChaCha8Rng::seed_from_u64(29);
    (0..200).map(|_| Small::random(&mut r, 8, 8)).collect()
}

#[test]
fn cover_vertices_are_the_union_of_minimum_covers() {
    for (i, g) in corpus().iter().enumerate() {
        let c = g.as_coloring(Color::Red);
        let (bl, br) = g.min_cover_union();
        let mut found = (0u32, 0u32);
        for comp in components(&c, Color::Red) {
            for v in cover_vertices(&comp) {
                match v.side {
                    Side::Left => found.0 |= 1 << v.index,
                    Side::Right => found.1 |= 1 << v.index,
                }
            }
        }
        assert_eq!(found, (bl, br), "graph {i}: {g:?}");
    }
}

#[test]
fn deleting_a_vertex_lowers_nu_exactly_at_cover_vertices() {
    for (i, g) in corpus().iter().enumerate() {
        let c = g.as_coloring(Color::Red);
        let (bl, br) = g.min_cover_union();
        for comp in components(&c, Color::Red) {
            let nu = matching_number(&comp);
            let comp_left = comp.left.iter().fold(0u32, |m, &u| m | (1 << u));
            let comp_right = comp.right.iter().fold(0u32, |m, &v| m | (1 << v));
            // brute-force ν of the component alone, then with each vertex gone
            let outside_l = !comp_left & ((1 << g.nl) - 1);
            let outside_r = !comp_right & ((1 << g.nr) - 1);
            assert_eq!(g.nu_without(outside_l, outside_r), nu, "graph {i}");
            for v in comp.vertices() {
                let (dl, dr, in_union) = match v.side {
                    Side::Left => (outside_l | (1 << v.index), outside_r, bl >> v.index & 1 == 1),
                    Side::Right => (outside_l, outside_r | (1 << v.index), br >> v.index & 1 == 1),
                };
                let brute = g.nu_without(dl, dr);
                assert_eq!(brute, nu - usize::from(in_union), "graph {i}, vertex {v}");
                assert_eq!(matching_number_without(&comp, v), brute, "graph {i}, vertex {v}");
            }
        }
    }
}

#[test]
fn component_types_follow_cover_vertex_sides() {
    for g in corpus() {
        let c = g.as_coloring(Color::Blue);
        for comp in components(&c, Color::Blue) {
            let r = cover_report(&comp);
            let l = r.cover_vertices.iter().any(|v| v.side == Side::Left);
            let rt = r.cover_vertices.iter().any(|v| v.side == Side::Right);
            let expected = match (l, rt) {
                (true, true) => ComponentType::Unspecified,
                (true, false) => ComponentType::TypeL,
                (false, true) => ComponentType::TypeR,
                (false, false) => ComponentType::NotConnectedToBothSides,
            };
            assert_eq!(r.kind, expected);
            assert_eq!(r.min_cover.len(), r.matching_number);
            let mc: HashSet<Vertex> = min_vertex_cover(&comp).into_iter().collect();
            assert!(mc.iter().all(|v| r.cover_vertices.contains(v)));
        }
    }
}

fn arb_coloring(max_side: usize, absent: bool) -> impl Strategy<Value = Coloring> {
    (1..=max_side, 1..=max_side).prop_flat_map(move |(nl, nr)| {
        let cell = if absent {
            prop_oneof![Just(None), (0..3usize).prop_map(|i| Some(Color::from_index(i)))].boxed()
        } else {
            (0..3usize).prop_map(|i| Some(Color::from_index(i))).boxed()
        };
        proptest::collection::vec(cell, nl * nr)
            .prop_map(move |cells| Coloring::from_fn(nl, nr, |u, v| cells[u * nr + v]))
    })
}

fn profile(c: &Coloring) -> [usize; 3] {
    Color::ALL.map(|col| largest_connected_matching(c, col).size)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn json_round_trip(c in arb_coloring(7, true)) {
        let bytes = write_coloring(&c);
        prop_assert_eq!(read_coloring(&bytes).unwrap(), c);
    }

    #[test]
    fn largest_cm_matches_brute_force(c in arb_coloring(6, true)) {
        prop_assert_eq!(profile(&c), brute_cm_profile(&c));
    }

    #[test]
    fn profile_is_invariant_under_vertex_permutations(
        c in arb_coloring(6, true),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let mut rows: Vec<usize> = (0..c.n_left()).collect();
        let mut cols: Vec<usize> = (0..c.n_right()).collect();
        rows.shuffle(&mut r);
        cols.shuffle(&mut r);
        prop_assert_eq!(profile(&c.permuted(&rows, &cols)), profile(&c));
    }

    #[test]
    fn colour_permutation_permutes_the_profile(c in arb_coloring(6, true), shift in 1..3usize) {
        let recolored = Coloring::from_fn(c.n_left(), c.n_right(), |u, v| {
            c.get(u, v).map(|x| Color::from_index((x.index() + shift) % 3))
        });
        let p = profile(&c);
        let q = profile(&recolored);
        for i in 0..3 {
            prop_assert_eq!(q[(i + shift) % 3], p[i]);
        }
    }

    #[test]
    fn filling_a_cell_only_helps_its_colour(c in arb_coloring(6, true), pick in any::<prop::sample::Index>(), col in 0..3usize) {
        let absent: Vec<(usize, usize)> = c.absent_cells().collect();
        prop_assume!(!absent.is_empty());
        let (u, v) = absent[pick.index(absent.len())];
        let col = Color::from_index(col);
        let before = profile(&c);
        let after = profile(&c.with_cell(u, v, Some(col)));
        // the new edge may merge two components, so the jump is bounded by
        // the whole colour class's matching number, not by one
        let whole = BipartiteGraph::from_edges(
            c.n_left(),
            c.n_right(),
            c.edges().filter(|e| e.2 == col).map(|e| (e.0, e.1)),
        )
        .matching_number();
        prop_assert_eq!(after, brute_cm_profile(&c.with_cell(u, v, Some(col))));
        for other in Color::ALL {
            if other == col {
                prop_assert!(after[other.index()] >= before[other.index()]);
                prop_assert!(after[other.index()] <= whole + 1);
            } else {
                prop_assert_eq!(after[other.index()], before[other.index()]);
            }
        }
    }

    #[test]
    fn deleting_a_vertex_shifts_later_indices(c in arb_coloring(6, true), which in any::<prop::sample::Index>()) {
        prop_assume!(c.n_left() > 1);
        let i = which.index(c.n_left());
        let d = c.delete_vertex(Vertex::left(i)).unwrap();
        prop_assert_eq!(d.n_left(), c.n_left() - 1);
        for u in 0..d.n_left() {
            let src = if u < i { u } else { u + 1 };
            for v in 0..c.n_right() {
                prop_assert_eq!(d.get(u, v), c.get(src, v));
            }
        }
        // removing a vertex never helps; it may split a component, so the
        // drop can exceed one
        let (p, q) = (profile(&c), profile(&d));
        prop_assert_eq!(q, brute_cm_profile(&d));
        for k in 0..3 {
            prop_assert!(q[k] <= p[k]);
        }
    }
}
