//! Exact monochromatic paths and even cycles on small colorings, and the
//! 2-colour bipartite path Ramsey number computed with the search engine.
//!
//! Path and cycle lengths are counted in vertices.

use std::collections::HashSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bigraph::{Color, Coloring, Vertex};
use crate::error::Error;
use crate::matching::{components, Component};
use crate::search::engine::{self, Obstruction, MAX_SIDE};
use crate::search::{scan_sizes, Budget, RamseyReport, SearchConfig};

/// Components are searched as `u64` bitmasks.
pub const MAX_COMPONENT_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub color: Color,
    pub vertices: usize,
    pub path: Vec<Vertex>,
}

struct Local {
    ids: Vec<Vertex>,
    adj: Vec<u64>,
    n_left: usize,
}

fn localize(comp: &Component) -> Result<Local, Error> {
    if comp.order() > MAX_COMPONENT_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "component of order {} exceeds the exact-search limit {MAX_COMPONENT_ORDER}",
            comp.order()
        )));
    }
    let ids: Vec<Vertex> = comp.vertices().collect();
    let a = comp.left.len();
    let mut adj = vec![0u64; ids.len()];
    for &(u, v) in &comp.edges {
        let x = comp.left.binary_search(&u).unwrap();
        let y = a + comp.right.binary_search(&v).unwrap();
        adj[x] |= 1 << y;
        adj[y] |= 1 << x;
    }
    Ok(Local { ids, adj, n_left: a })
}

struct Meter<'a> {
    budget: &'a Budget,
    start: Instant,
    nodes: u64,
}

impl Meter<'_> {
    fn tick(&mut self) -> Result<(), Error> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes % 4096 == 0 && self.start.elapsed() > self.budget.max_time)
        {
            return Err(Error::BudgetExceeded(format!("exact search stopped after {} nodes", self.nodes)));
        }
        Ok(())
    }
}

struct LongestPath<'a> {
    adj: &'a [u64],
    bound: usize,
    memo: HashSet<(u8, u64)>,
    best: Vec<u8>,
    path: Vec<u8>,
}

impl LongestPath<'_> {
    /// Returns `Ok(true)` once a path of length `bound` is found.
    fn grow(&mut self, v: usize, mask: u64, meter: &mut Meter) -> Result<bool, Error> {
        meter.tick()?;
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
            if self.best.len() >= self.bound {
                return Ok(true);
            }
        }
        if !self.memo.insert((v as u8, mask)) {
            return Ok(false);
        }
        let mut nb = self.adj[v] & !mask;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            self.path.push(w as u8);
            let done = self.grow(w, mask | (1 << w), meter)?;
            self.path.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exact maximum number of vertices on a path in colour `col` (0 when the
/// colour is unused), by backtracking memoized on (endpoint, visited set).
pub fn longest_monochromatic_path(c: &Coloring, col: Color, budget: &Budget) -> Result<PathWitness, Error> {
    let mut meter = Meter { budget, start: Instant::now(), nodes: 0 };
    let mut best = PathWitness { color: col, vertices: 0, path: vec![] };
    for comp in components(c, col) {
        let local = localize(&comp)?;
        let (a, b) = (local.n_left, local.ids.len() - local.n_left);
        // a bipartite path alternates sides
        let bound = 2 * a.min(b) + usize::from(a != b);
        if bound <= best.vertices {
            continue;
        }
        let mut lp = LongestPath { adj: &local.adj, bound, memo: HashSet::new(), best: vec![], path: vec![] };
        for s in 0..local.ids.len() {
            lp.path = vec![s as u8];
            if lp.grow(s, 1 << s, &mut meter)? {
                break;
            }
        }
        if lp.best.len() > best.vertices {
            best.vertices = lp.best.len();
            best.path = lp.best.iter().map(|&x| local.ids[x as usize]).collect();
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub color: Color,
    pub length: usize,
    /// Alternating left/right vertices; the last is joined to the first.
    pub cycle: Vec<Vertex>,
}

/// Whether colour `col` has a cycle on exactly `length` vertices.
pub fn has_even_cycle(c: &Coloring, col: Color, length: usize, budget: &Budget) -> Result<Option<CycleWitness>, Error> {
    if length < 4 || length % 2 != 0 {
        return Err(Error::InvalidParams(format!("cycle length must be even and at least 4, got {length}")));
    }
    let mut meter = Meter { budget, start: Instant::now(), nodes: 0 };
    let half = length / 2;
    for comp in components(c, col) {
        if comp.left.len() < half || comp.right.len() < half {
            continue;
        }
        let local = localize(&comp)?;
        // the cycle's smallest left vertex is its start; other left vertices are larger
        for s in 0..local.n_left {
            let allowed_left: u64 = (s + 1..local.n_left).fold(0, |m, x| m | (1 << x));
            let right_mask: u64 = (local.n_left..local.ids.len()).fold(0, |m, x| m | (1 << x));
            let mut path = vec![s];
            if close_cycle(&local.adj, s, allowed_left | right_mask, length, &mut path, &mut meter)? {
                let cycle = path.iter().map(|&x| local.ids[x]).collect();
                return Ok(Some(CycleWitness { color: col, length, cycle }));
            }
        }
    }
    Ok(None)
}

fn close_cycle(
    adj: &[u64],
    start: usize,
    allowed: u64,
    length: usize,
    path: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<bool, Error> {
    meter.tick()?;
    let v = *path.last().unwrap();
    if path.len() == length {
        return Ok(adj[v] & (1 << start) != 0);
    }
    let mut nb = adj[v] & allowed;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        path.push(w);
        if close_cycle(adj, start, allowed & !(1 << w), length, path, meter)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// Is there a path on `len` vertices through the edge `a–b`? `adj` is over
/// vertex ids `0..32` (left `i`, right `16 + j`), and the edge is present.
fn path_through_edge(adj: &[u32; 2 * MAX_SIDE], a: usize, b: usize, len: usize) -> bool {
    fn extend(adj: &[u32; 2 * MAX_SIDE], end: usize, visited: u32, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        let mut nb = adj[end] & !visited;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if extend(adj, w, visited | (1 << w), need - 1) {
                return true;
            }
        }
        false
    }
    // grow a prefix from `a`, then try to finish from `b`
    fn from_a(adj: &[u32; 2 * MAX_SIDE], end: usize, b: usize, visited: u32, left: usize) -> bool {
        if extend(adj, b, visited, left) {
            return true;
        }
        if left == 0 {
            return false;
        }
        let mut nb = adj[end] & !visited;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if from_a(adj, w, b, visited | (1 << w), left - 1) {
                return true;
            }
        }
        false
    }
    if len <= 2 {
        return true;
    }
    from_a(adj, a, b, (1 << a) | (1 << b), len - 2)
}

/// No red or blue path on `len` vertices, in 2-colourings by red and blue.
pub struct PathObstruction {
    len: usize,
}

impl PathObstruction {
    pub fn new(len: usize) -> Self {
        PathObstruction { len }
    }
}

const TWO_COLOURS: [Color; 2] = [Color::Red, Color::Blue];
const RED_BLUE: [(Color, Color); 1] = [(Color::Red, Color::Blue)];

impl Obstruction for PathObstruction {
    type State = [[u32; 2 * MAX_SIDE]; 3];

    fn palette(&self) -> &[Color] {
        &TWO_COLOURS
    }

    fn interchangeable(&self) -> &[(Color, Color)] {
        &RED_BLUE
    }

    fn initial(&self, _n: usize) -> Self::State {
        [[0; 2 * MAX_SIDE]; 3]
    }

    fn add_edge(&self, state: &mut Self::State, left: usize, right: usize, c: Color) -> bool {
        let adj = &mut state[c.index()];
        let r = MAX_SIDE + right;
        adj[left] |= 1 << r;
        adj[r] |= 1 << left;
        path_through_edge(adj, left, r, self.len)
    }

    fn certifies(&self, c: &Coloring) -> bool {
        let budget = Budget::default();
        c.is_complete()
            && c.edges().all(|(_, _, col)| col != Color::Green)
            && TWO_COLOURS.iter().all(|&col| {
                longest_monochromatic_path(c, col, &budget).map_or(false, |p| p.vertices < self.len)
            })
    }
}

/// Least `N <= n_max` such that every red/blue colouring of `K_{N,N}` has a
/// monochromatic path on `n_path` vertices.
pub fn two_colour_path_ramsey(n_path: usize, n_max: usize, cfg: &SearchConfig) -> Result<RamseyReport, Error> {
    if n_path < 2 {
        return Err(Error::InvalidParams(format!("path order must be at least 2, got {n_path}")));
    }
    let obs = PathObstruction::new(n_path);
    scan_sizes(n_max.min(MAX_SIDE), |n| Ok(engine::run(&obs, n, &cfg.budget, cfg.threads)))
}

/// The closed form the search is checked against: `n − 1` for even `n`,
/// `n` for odd `n`.
pub fn two_colour_path_formula(n_path: usize) -> usize {
    if n_path % 2 == 0 {
        n_path - 1
    } else {
        n_path
    }
}
