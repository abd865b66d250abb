//! Incremental connected-matching obstruction.
//!
//! Per colour we keep the adjacency bitsets, a maximum matching of the whole
//! colour subgraph, and a union-find over the `2n` vertices whose roots carry
//! the matching number of their component. A maximum matching of the whole
//! subgraph restricted to a component is maximum for that component, so the
//! per-root counts are exact.
//!
//! Adding an edge merges at most two components (their ν add up) and then
//! raises ν by at most one. Any augmenting path must use the new edge, hence
//! lies in the new edge's component; one alternating BFS from all free left
//! vertices finds it if it exists.

use super::engine::{Obstruction, MAX_SIDE};
use super::Thresholds;
use crate::bigraph::{Color, Coloring};
use crate::matching::meets_thresholds;

const FREE: u8 = u8::MAX;

#[derive(Clone, Copy)]
pub struct ColourCm {
    adj: [u16; MAX_SIDE],
    mate_l: [u8; MAX_SIDE],
    mate_r: [u8; MAX_SIDE],
    // vertices 0..16 are left, 16..32 right
    parent: [u8; 2 * MAX_SIDE],
    nu: [u8; 2 * MAX_SIDE],
}

impl ColourCm {
    fn new() -> Self {
        let mut parent = [0u8; 2 * MAX_SIDE];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        ColourCm { adj: [0; MAX_SIDE], mate_l: [FREE; MAX_SIDE], mate_r: [FREE; MAX_SIDE], parent, nu: [0; 2 * MAX_SIDE] }
    }

    #[inline]
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let gp = self.parent[self.parent[x] as usize];
            self.parent[x] = gp;
            x = gp as usize;
        }
        x
    }

    /// Adds `(u, v)` and returns ν of the component now containing it.
    #[inline]
    pub fn add(&mut self, u: usize, v: usize) -> usize {
        self.adj[u] |= 1 << v;
        let ru = self.find(u);
        let rv = self.find(MAX_SIDE + v);
        let root = if ru != rv {
            self.parent[rv] = ru as u8;
            self.nu[ru] += self.nu[rv];
            ru
        } else {
            ru
        };
        if self.augment(u, v) {
            self.nu[root] += 1;
        }
        self.nu[root] as usize
    }

    fn augment(&mut self, u: usize, v: usize) -> bool {
        if self.mate_l[u] == FREE && self.mate_r[v] == FREE {
            self.mate_l[u] = v as u8;
            self.mate_r[v] = u as u8;
            return true;
        }
        let mut frontier: u16 = 0;
        for (x, &m) in self.mate_l.iter().enumerate() {
            if m == FREE && self.adj[x] != 0 {
                frontier |= 1 << x;
            }
        }
        let mut seen_r: u16 = 0;
        let mut via = [0u8; MAX_SIDE];
        while frontier != 0 {
            let mut next: u16 = 0;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                let mut nb = self.adj[x] & !seen_r;
                seen_r |= nb;
                while nb != 0 {
                    let y = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    via[y] = x as u8;
                    let w = self.mate_r[y];
                    if w == FREE {
                        self.flip(y, &via);
                        return true;
                    }
                    next |= 1 << w;
                }
            }
            frontier = next;
        }
        false
    }

    fn flip(&mut self, mut y: usize, via: &[u8; MAX_SIDE]) {
        loop {
            let x = via[y] as usize;
            let prev = self.mate_l[x];
            self.mate_l[x] = y as u8;
            self.mate_r[y] = x as u8;
            if prev == FREE {
                return;
            }
            y = prev as usize;
        }
    }
}

/// No red `k`-, green `l`- or blue `m`-connected matching.
pub struct CmObstruction {
    limits: [usize; 3],
    pairs: Vec<(Color, Color)>,
}

impl CmObstruction {
    pub fn new(th: Thresholds) -> Self {
        let limits = th.as_array();
        let mut pairs = Vec::new();
        for a in 0..3 {
            for b in a + 1..3 {
                if limits[a] == limits[b] {
                    pairs.push((Color::from_index(a), Color::from_index(b)));
                }
            }
        }
        CmObstruction { limits, pairs }
    }
}

impl Obstruction for CmObstruction {
    type State = [ColourCm; 3];

    fn palette(&self) -> &[Color] {
        &Color::ALL
    }

    fn interchangeable(&self) -> &[(Color, Color)] {
        &self.pairs
    }

    fn initial(&self, _n: usize) -> Self::State {
        [ColourCm::new(); 3]
    }

    #[inline]
    fn add_edge(&self, state: &mut Self::State, left: usize, right: usize, c: Color) -> bool {
        state[c.index()].add(left, right) >= self.limits[c.index()]
    }

    fn certifies(&self, c: &Coloring) -> bool {
        c.is_complete() && !meets_thresholds(c, self.limits[0], self.limits[1], self.limits[2]).0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::largest_connected_matching;

    fn replay(c: &Coloring) -> [usize; 3] {
        let mut st = [ColourCm::new(); 3];
        let mut best = [0; 3];
        for (u, v, col) in c.edges() {
            let nu = st[col.index()].add(u, v);
            best[col.index()] = best[col.index()].max(nu);
        }
        best
    }

    #[test]
    fn incremental_matches_batch_on_random_colorings() {
        let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
        for _ in 0..300 {
            let n = 1 + (x % 7) as usize;
            let c = Coloring::from_fn(n, n, |_, _| {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                Some(Color::from_index((x % 3) as usize))
            });
            let batch = Color::ALL.map(|col| largest_connected_matching(&c, col).size);
            assert_eq!(replay(&c), batch, "{c:?}");
        }
    }

    #[test]
    fn interchangeable_pairs_follow_equal_thresholds() {
        assert_eq!(CmObstruction::new(Thresholds::new(2, 2, 2)).pairs.len(), 3);
        assert_eq!(
            CmObstruction::new(Thresholds::new(1, 2, 2)).pairs,
            vec![(Color::Green, Color::Blue)]
        );
        assert!(CmObstruction::new(Thresholds::new(1, 2, 3)).pairs.is_empty());
    }
}
