mod common;

use bramsey_core::bigraph::{Color, Coloring, Side, Vertex};
use bramsey_core::fixtures::deficient_coloring;
use bramsey_core::reducer::{
    augment_g1, nonedge_types, reduce_and_find, type_cover, verify_certificate, virtual_components, Membership, Mode,
    ReductionStatus, VirtualComponent,
};
use common::Small;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random coloring of `K_{s,s}` with at most `d` absent cells per vertex.
fn deficient(r: &mut ChaCha8Rng, s: usize, d: usize) -> Coloring {
    let mut c = Coloring::from_fn(s, s, |_, _| Some(Color::from_index(r.gen_range(0..3))));
    let mut perm: Vec<usize> = (0..s).collect();
    for _ in 0..d {
        perm.shuffle(r);
        for (u, &v) in perm.iter().enumerate() {
            if r.gen_bool(0.6) {
                c.set(u, v, None);
            }
        }
    }
    c
}

/// Brute-force τ (= ν) of colour `col` restricted to the component's vertices.
fn brute_nu(c: &Coloring, vc: &VirtualComponent) -> usize {
    let left: Vec<usize> = vc.vertices.iter().filter(|v| v.side == Side::Left).map(|v| v.index).collect();
    let right: Vec<usize> = vc.vertices.iter().filter(|v| v.side == Side::Right).map(|v| v.index).collect();
    let adj = left
        .iter()
        .map(|&u| right.iter().enumerate().fold(0u32, |m, (j, &v)| if c.get(u, v) == Some(vc.color) { m | (1 << j) } else { m }))
        .collect();
    Small { nl: left.len(), nr: right.len(), adj }.tau()
}

#[test]
fn augmentation_preserves_nu_of_every_virtual_component() {
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let mut added_total = 0;
    for _ in 0..200 {
        let s = r.gen_range(2..=10);
        let d = r.gen_range(0..=2);
        let n = r.gen_range(1..=4);
        let c = deficient(&mut r, s, d);
        let vcs = Color::ALL.map(|col| virtual_components(&c, col, n));
        let (g1, added) = augment_g1(&c, &vcs);
        added_total += added.len();
        for e in &added {
            assert_eq!(c.get(e.left, e.right), None);
            assert_eq!(g1.get(e.left, e.right), Some(e.color));
        }
        for vc in vcs.iter().flatten() {
            let before = brute_nu(&c, vc);
            assert_eq!(before, vc.matching_number);
            assert_eq!(vc.chosen_cover.len(), before, "chosen cover is not minimum");
            assert_eq!(brute_nu(&g1, vc), before, "ν changed in {vc:?}");
        }
    }
    assert!(added_total > 0, "no fixture exercised the augmentation");
}

#[test]
fn virtual_component_shape() {
    let mut r = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let s = r.gen_range(2..=12);
        let n = r.gen_range(1..=6);
        // sparse colours give many small components
        let c = Coloring::from_fn(s, s, |_, _| {
            let x = r.gen_range(0..8);
            (x < 3).then(|| Color::from_index(x))
        });
        for col in Color::ALL {
            let vcs = virtual_components(&c, col, n);
            let mut small_unions = 0;
            let mut covered = 0;
            for vc in &vcs {
                covered += vc.order();
                if vc.is_genuine {
                    assert!(vc.order() >= n && vc.members.len() == 1);
                } else {
                    assert!(vc.order() < 2 * n);
                    if vc.order() < n {
                        small_unions += 1;
                    }
                }
            }
            assert!(small_unions <= 1);
            let touched = (0..s)
                .flat_map(|i| [Vertex::left(i), Vertex::right(i)])
                .filter(|&v| match v.side {
                    Side::Left => (0..s).any(|j| c.get(v.index, j) == Some(col)),
                    Side::Right => (0..s).any(|j| c.get(j, v.index) == Some(col)),
                })
                .count();
            assert_eq!(covered, touched, "every vertex with a {col} edge lies in exactly one virtual component");
        }
    }
}

#[test]
fn every_nonedge_is_typed_and_type_covers_are_minimum() {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let s = r.gen_range(2..=8);
        let c = deficient(&mut r, s, 2);
        let members = Color::ALL.map(|col| Membership::new(s, s, &virtual_components(&c, col, 2)));
        let classes = nonedge_types(&c, &members);
        let total: usize = classes.values().map(Vec::len).sum();
        assert_eq!(total, c.absent_cells().count());
        for cells in classes.values() {
            let cover = type_cover(cells);
            assert!(cells.iter().all(|&(u, v)| cover.contains(&Vertex::left(u)) || cover.contains(&Vertex::right(v))));
            let adj = (0..s).map(|u| cells.iter().filter(|c| c.0 == u).fold(0u32, |m, c| m | (1 << c.1))).collect();
            assert_eq!(cover.len(), Small { nl: s, nr: s, adj }.tau());
        }
    }
}

#[test]
fn complete_inputs_need_no_removal() {
    let mut r = ChaCha8Rng::seed_from_u64(9);
    for n in 1..=5 {
        let s = 3 * n;
        let c = Coloring::from_fn(s, s, |_, _| Some(Color::from_index(r.gen_range(0..3))));
        let cert = reduce_and_find(&c, n, 0.0, Mode::Paper).unwrap();
        assert!(cert.added_edges.is_empty() && cert.removed.is_empty());
        assert_eq!(cert.g2_sides, [s, s]);
        assert_eq!(cert.status, ReductionStatus::Certified);
        assert!(verify_certificate(&c, &cert).is_empty());
    }
}

#[test]
fn fixtures_reduce_and_verify() {
    for seed in 0..30 {
        let n = 1 + seed as usize % 5;
        let d = seed as usize % 3;
        let c = deficient_coloring(n, d, seed).unwrap();
        let cert = reduce_and_find(&c, n, d as f64, Mode::Relaxed).unwrap();
        assert!(cert.invariants.all());
        assert!(cert.types.iter().all(|t| t.cover.len() <= d));
        assert!(cert.removed.len() <= cert.size_bound);
        assert_eq!(verify_certificate(&c, &cert), Vec::<String>::new());
        let json = serde_json::to_string(&cert).unwrap();
        let back: bramsey_core::reducer::ReductionCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}

#[test]
fn inconclusive_when_sides_are_too_small() {
    // K_{3,3} with a missing perfect matching, n = 3: removal leaves sides < 7
    let c = Coloring::from_fn(3, 3, |u, v| (u != v).then_some(Color::Red));
    let cert = reduce_and_find(&c, 3, 1.0, Mode::Relaxed).unwrap();
    assert!(verify_certificate(&c, &cert).is_empty());
    if cert.status == ReductionStatus::Inconclusive {
        assert!(cert.g2_sides[0].min(cert.g2_sides[1]) < 7);
    }
}
