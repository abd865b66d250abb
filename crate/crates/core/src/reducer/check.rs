//! Stand-alone certificate checker. It re-derives everything it needs from
//! the input coloring and the certificate, with its own graph search, and
//! does not call into the matching code.

use std::collections::{HashSet, VecDeque};

use super::{ReductionCertificate, ReductionStatus};
use crate::bigraph::{Coloring, Side, Vertex};

/// Returns the list of violated conditions; empty means the certificate is
/// valid for `c`.
pub fn verify_certificate(c: &Coloring, cert: &ReductionCertificate) -> Vec<String> {
    let mut problems = Vec::new();
    let n = c.n_left();
    if c.n_right() != n || cert.big_n != n {
        problems.push(format!("certificate is for N = {}, input is {}x{}", cert.big_n, c.n_left(), c.n_right()));
        return problems;
    }

    // G1 = input plus the added edges, each of which must fill an absent cell
    let mut g1 = c.clone();
    for e in &cert.added_edges {
        if e.left >= n || e.right >= n {
            problems.push(format!("added edge ({}, {}) out of range", e.left, e.right));
            return problems;
        }
        if g1.get(e.left, e.right).is_some() {
            problems.push(format!("added edge ({}, {}) was not absent", e.left, e.right));
        }
        g1.set(e.left, e.right, Some(e.color));
    }

    let removed: HashSet<Vertex> = cert.removed.iter().copied().collect();
    if let Some(v) = removed.iter().find(|v| v.index >= n) {
        problems.push(format!("removed vertex {v} out of range"));
        return problems;
    }
    for (u, v) in g1.absent_cells() {
        if !removed.contains(&Vertex::left(u)) && !removed.contains(&Vertex::right(v)) {
            problems.push(format!("absent cell ({u}, {v}) of G1 survives the removal"));
            break;
        }
    }
    for (side, map) in [(Side::Left, &cert.index_map.left), (Side::Right, &cert.index_map.right)] {
        let mut next = 0;
        let ok = map.len() == n
            && map.iter().enumerate().all(|(i, m)| {
                let gone = removed.contains(&Vertex { side, index: i });
                match m {
                    None => gone,
                    Some(j) if !gone && *j == next => {
                        next += 1;
                        true
                    }
                    Some(_) => false,
                }
            });
        if !ok {
            problems.push(format!("index map of the {side:?} side does not match the removed set"));
        }
    }
    let sides = [
        n - removed.iter().filter(|v| v.side == Side::Left).count(),
        n - removed.iter().filter(|v| v.side == Side::Right).count(),
    ];
    if sides != cert.g2_sides {
        problems.push(format!("G2 sides {:?} recorded, {sides:?} implied", cert.g2_sides));
    }

    match cert.status {
        ReductionStatus::Certified => match &cert.final_matching {
            None => problems.push("certified without a final matching".into()),
            Some(m) => {
                if m.edges.len() < cert.n {
                    problems.push(format!("final matching has {} edges, fewer than n = {}", m.edges.len(), cert.n));
                }
                let mut seen_l = HashSet::new();
                let mut seen_r = HashSet::new();
                for &(u, v) in &m.edges {
                    if u >= n || v >= n {
                        problems.push(format!("matching edge ({u}, {v}) out of range"));
                        return problems;
                    }
                    if c.get(u, v) != Some(m.color) {
                        problems.push(format!("matching edge ({u}, {v}) is not a {} edge of the input", m.color));
                    }
                    if !seen_l.insert(u) || !seen_r.insert(v) {
                        problems.push(format!("matching edge ({u}, {v}) shares an endpoint"));
                    }
                }
                if let Some(&(u0, _)) = m.edges.first() {
                    let reach = reachable(c, m.color, u0);
                    if m.edges.iter().any(|&(u, v)| !reach.0[u] || !reach.1[v]) {
                        problems.push("final matching is not inside one monochromatic component".into());
                    }
                }
            }
        },
        ReductionStatus::Inconclusive => {
            if sides[0].min(sides[1]) + 2 >= 3 * cert.n {
                problems.push(format!("inconclusive although G2 sides {sides:?} reach 3n - 2"));
            }
        }
    }
    problems
}

/// Vertices joined to left vertex `start` by paths of colour `col`.
fn reachable(c: &Coloring, col: crate::bigraph::Color, start: usize) -> (Vec<bool>, Vec<bool>) {
    let (nl, nr) = (c.n_left(), c.n_right());
    let mut left = vec![false; nl];
    let mut right = vec![false; nr];
    let mut queue = VecDeque::from([Vertex::left(start)]);
    left[start] = true;
    while let Some(x) = queue.pop_front() {
        match x.side {
            Side::Left => {
                for v in 0..nr {
                    if !right[v] && c.get(x.index, v) == Some(col) {
                        right[v] = true;
                        queue.push_back(Vertex::right(v));
                    }
                }
            }
            Side::Right => {
                for u in 0..nl {
                    if !left[u] && c.get(u, x.index) == Some(col) {
                        left[u] = true;
                        queue.push_back(Vertex::left(u));
                    }
                }
            }
        }
    }
    (left, right)
}
