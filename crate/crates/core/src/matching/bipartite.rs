//! Maximum matchings and König covers on small bipartite graphs given by
//! adjacency lists over local indices.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, Default)]
pub struct BipartiteGraph {
    n_left: usize,
    n_right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(n_left: usize, n_right: usize) -> Self {
        BipartiteGraph { n_left, n_right, adj: vec![Vec::new(); n_left] }
    }

    pub fn from_edges(n_left: usize, n_right: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = BipartiteGraph::new(n_left, n_right);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n_left && v < self.n_right);
        self.adj[u].push(v);
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    /// Maximum matching by repeated augmenting-path search (Kuhn), O(V·E).
    /// Left vertices are tried in index order, neighbours in insertion
    /// order, so the result is deterministic.
    pub fn max_matching(&self) -> MatchingState {
        let mut mate_l = vec![NONE; self.n_left];
        let mut mate_r = vec![NONE; self.n_right];
        let mut seen = vec![0usize; self.n_right];
        let mut stamp = 0;
        for u in 0..self.n_left {
            stamp += 1;
            self.augment(u, &mut mate_l, &mut mate_r, &mut seen, stamp);
        }
        MatchingState { mate_l, mate_r }
    }

    fn augment(&self, u: usize, mate_l: &mut [usize], mate_r: &mut [usize], seen: &mut [usize], stamp: usize) -> bool {
        for &v in &self.adj[u] {
            if seen[v] == stamp {
                continue;
            }
            seen[v] = stamp;
            if mate_r[v] == NONE || self.augment(mate_r[v], mate_l, mate_r, seen, stamp) {
                mate_l[u] = v;
                mate_r[v] = u;
                return true;
            }
        }
        false
    }

    pub fn matching_number(&self) -> usize {
        self.max_matching().size()
    }

    /// König's construction: let `Z` be everything reachable from unmatched
    /// left vertices by alternating paths; `(L \ Z) ∪ (R ∩ Z)` is a minimum
    /// cover. Returns `(left, right)` local indices, sorted.
    pub fn konig_cover(&self, m: &MatchingState) -> (Vec<usize>, Vec<usize>) {
        let mut zl = vec![false; self.n_left];
        let mut zr = vec![false; self.n_right];
        let mut queue = VecDeque::new();
        for u in 0..self.n_left {
            if m.mate_l[u] == NONE {
                zl[u] = true;
                queue.push_back(u);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if zr[v] || m.mate_l[u] == v {
                    continue;
                }
                zr[v] = true;
                let w = m.mate_r[v];
                if w != NONE && !zl[w] {
                    zl[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let left = (0..self.n_left).filter(|&u| !zl[u]).collect();
        let right = (0..self.n_right).filter(|&v| zr[v]).collect();
        (left, right)
    }
}

#[derive(Clone, Debug)]
pub struct MatchingState {
    mate_l: Vec<usize>,
    mate_r: Vec<usize>,
}

impl MatchingState {
    pub fn size(&self) -> usize {
        self.mate_l.iter().filter(|&&v| v != NONE).count()
    }

    /// Matched pairs `(left, right)` in left index order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate_l.iter().enumerate().filter(|(_, &v)| v != NONE).map(|(u, &v)| (u, v)).collect()
    }

    pub fn mate_of_left(&self, u: usize) -> Option<usize> {
        Some(self.mate_l[u]).filter(|&v| v != NONE)
    }
}
