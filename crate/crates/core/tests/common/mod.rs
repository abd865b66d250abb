//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's matching or search code.

#![allow(dead_code)]

use bramsey_core::bigraph::{Color, Coloring};
use rand::Rng;

/// Bipartite graph as left-vertex bitmasks over the right side.
#[derive(Clone, Debug)]
pub struct Small {
    pub nl: usize,
    pub nr: usize,
    pub adj: Vec<u32>,
}

impl Small {
    pub fn random(r: &mut impl Rng, max_l: usize, max_r: usize) -> Small {
        let nl = r.gen_range(1..=max_l);
        let nr = r.gen_range(1..=max_r);
        let p: f64 = r.gen_range(0.05..0.7);
        let adj = (0..nl).map(|_| (0..nr).fold(0u32, |m, v| if r.gen_bool(p) { m | (1 << v) } else { m })).collect();
        Small { nl, nr, adj }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.nl {
            for v in 0..self.nr {
                if self.adj[u] >> v & 1 == 1 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn as_coloring(&self, col: Color) -> Coloring {
        Coloring::from_fn(self.nl, self.nr, |u, v| (self.adj[u] >> v & 1 == 1).then_some(col))
    }

    /// Maximum matching size by exhaustive recursion, with some vertices
    /// deleted.
    pub fn nu_without(&self, dead_left: u32, dead_right: u32) -> usize {
        fn go(g: &Small, u: usize, used: u32, dead_left: u32) -> usize {
            if u == g.nl {
                return 0;
            }
            let mut best = go(g, u + 1, used, dead_left);
            if dead_left >> u & 1 == 0 {
                let mut nb = g.adj[u] & !used;
                while nb != 0 {
                    let v = nb.trailing_zeros();
                    nb &= nb - 1;
                    best = best.max(1 + go(g, u + 1, used | (1 << v), dead_left));
                }
            }
            best
        }
        go(self, 0, dead_right, dead_left)
    }

    pub fn nu(&self) -> usize {
        self.nu_without(0, 0)
    }

    /// Minimum cover size: for a chosen left part `S` the cheapest cover
    /// adds every right neighbour of the rest.
    pub fn tau(&self) -> usize {
        (0u32..1 << self.nl)
            .map(|s| {
                let rest = (0..self.nl).filter(|u| s >> u & 1 == 0).fold(0u32, |m, u| m | self.adj[u]);
                s.count_ones() as usize + rest.count_ones() as usize
            })
            .min()
            .unwrap()
    }

    pub fn is_cover(&self, left: u32, right: u32) -> bool {
        (0..self.nl).all(|u| left >> u & 1 == 1 || self.adj[u] & !right == 0)
    }

    /// Union of all minimum covers, by enumerating every vertex subset.
    pub fn min_cover_union(&self) -> (u32, u32) {
        let n = self.nl + self.nr;
        let mut best = usize::MAX;
        let mut union = (0u32, 0u32);
        for s in 0u32..1 << n {
            let size = s.count_ones() as usize;
            if size > best {
                continue;
            }
            let left = s & ((1 << self.nl) - 1);
            let right = s >> self.nl;
            if !self.is_cover(left, right) {
                continue;
            }
            if size < best {
                best = size;
                union = (0, 0);
            }
            union.0 |= left;
            union.1 |= right;
        }
        union
    }
}

/// Largest connected matching per colour, by flood fill and exhaustive
/// matching. Sides up to 32.
pub fn brute_cm_profile(c: &Coloring) -> [usize; 3] {
    let (nl, nr) = (c.n_left(), c.n_right());
    Color::ALL.map(|col| {
        let mut seen_l = vec![false; nl];
        let mut best = 0;
        for s in 0..nl {
            if seen_l[s] || (0..nr).all(|v| c.get(s, v) != Some(col)) {
                continue;
            }
            // flood fill from left vertex s
            let mut left_mask = 0u32;
            let mut right_mask = 0u32;
            let mut stack = vec![(true, s)];
            seen_l[s] = true;
            left_mask |= 1 << s;
            while let Some((is_left, x)) = stack.pop() {
                if is_left {
                    for v in 0..nr {
                        if c.get(x, v) == Some(col) && right_mask >> v & 1 == 0 {
                            right_mask |= 1 << v;
                            stack.push((false, v));
                        }
                    }
                } else {
                    for u in 0..nl {
                        if c.get(u, x) == Some(col) && !seen_l[u] {
                            seen_l[u] = true;
                            left_mask |= 1 << u;
                            stack.push((true, u));
                        }
                    }
                }
            }
            let adj = (0..nl)
                .map(|u| {
                    if left_mask >> u & 1 == 0 {
                        0
                    } else {
                        (0..nr).fold(0u32, |m, v| if c.get(u, v) == Some(col) { m | (1 << v) } else { m })
                    }
                })
                .collect();
            best = best.max(Small { nl, nr, adj }.nu());
        }
        best
    })
}

/// Every complete coloring of `K_{n,n}` with colours from `palette`, in
/// lexicographic order of the row-major cell vector.
pub fn all_colorings(n: usize, palette: &[Color]) -> impl Iterator<Item = Coloring> + '_ {
    let cells = n * n;
    let total = palette.len().pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut digits = vec![0; cells];
        for d in digits.iter_mut().rev() {
            *d = code % palette.len();
            code /= palette.len();
        }
        Coloring::from_fn(n, n, |u, v| Some(palette[digits[u * n + v]]))
    })
}

/// Longest monochromatic path (vertices) by trying every simple path.
pub fn brute_longest_path(c: &Coloring, col: Color) -> usize {
    let (nl, nr) = (c.n_left(), c.n_right());
    fn go(c: &Coloring, col: Color, at: (bool, usize), used_l: u32, used_r: u32) -> usize {
        let (nl, nr) = (c.n_left(), c.n_right());
        let mut best = 1;
        if at.0 {
            for v in 0..nr {
                if used_r >> v & 1 == 0 && c.get(at.1, v) == Some(col) {
                    best = best.max(1 + go(c, col, (false, v), used_l, used_r | (1 << v)));
                }
            }
        } else {
            for u in 0..nl {
                if used_l >> u & 1 == 0 && c.get(u, at.1) == Some(col) {
                    best = best.max(1 + go(c, col, (true, u), used_l | (1 << u), used_r));
                }
            }
        }
        best
    }
    let any = c.edges().any(|(_, _, e)| e == col);
    if !any {
        return 0;
    }
    let from_left = (0..nl).map(|u| go(c, col, (true, u), 1 << u, 0)).max().unwrap_or(0);
    let from_right = (0..nr).map(|v| go(c, col, (false, v), 0, 1 << v)).max().unwrap_or(0);
    from_left.max(from_right)
}
