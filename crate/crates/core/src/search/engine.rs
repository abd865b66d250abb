//! Depth-first enumeration of colorings of `K_{n,n}` that avoid an
//! obstruction.
//!
//! Cells are assigned in row-major order. Three symmetry-breaking rules cut
//! the tree, all of them consequences of requiring the row-major cell vector
//! to be the lexicographic minimum of its orbit:
//!
//! * rows are non-decreasing in lexicographic order;
//! * columns, read top to bottom, are non-decreasing in lexicographic order;
//! * for every interchangeable colour pair `a < b`, colour `a` is used
//!   before colour `b` (or `b` is unused).
//!
//! Since every orbit contains its lex-minimum, and the minimum satisfies all
//! three rules at once, no orbit is lost.
//!
//! The first row is expanded eagerly and each resulting prefix becomes an
//! independent task; tasks share only the obstruction, a node counter and a
//! stop flag.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{Budget, SearchOutcome, SearchStatus};
use crate::bigraph::{Color, Coloring};

/// Largest side the engine handles (bitsets are `u16`/`u32` wide).
pub const MAX_SIDE: usize = 16;

/// A monotone property of partial colorings: once present, it stays present
/// when more edges are added.
pub trait Obstruction: Sync {
    type State: Clone + Send;

    /// Colours that may be assigned, in ascending order.
    fn palette(&self) -> &[Color];

    /// Pairs `(a, b)`, `a < b`, whose exchange maps avoiding colorings to
    /// avoiding colorings.
    fn interchangeable(&self) -> &[(Color, Color)];

    fn initial(&self, n: usize) -> Self::State;

    /// Adds edge `(left, right)` in colour `c`; returns `true` if the
    /// obstruction is now present.
    fn add_edge(&self, state: &mut Self::State, left: usize, right: usize, c: Color) -> bool;

    /// Independent re-check of a complete coloring: `true` if it avoids the
    /// obstruction.
    fn certifies(&self, c: &Coloring) -> bool;
}

const UNSET: u8 = u8::MAX;

#[derive(Clone)]
struct Frame<S> {
    p: usize,
    grid: Vec<u8>,
    state: S,
    row_eq: bool,
    col_prev: u32,
    col_cur: u32,
    used: u8,
}

struct Shared<'a> {
    budget: &'a Budget,
    start: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl Shared<'_> {
    fn flush(&self, local: &mut u64) -> bool {
        let total = self.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if total > self.budget.max_nodes || self.start.elapsed() > self.budget.max_time {
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }
}

enum Flow {
    Done,
    Found(Vec<u8>),
    Stopped,
}

struct Search<'o, O: Obstruction> {
    obs: &'o O,
    n: usize,
    palette: Vec<u8>,
    pairs: Vec<(u8, u8)>,
}

impl<O: Obstruction> Search<'_, O> {
    /// Symmetry checks for colour `c` at position `p`. Returns the updated
    /// row-equality flag and whether columns `j−1, j` are still equal.
    #[inline]
    fn admissible(&self, f: &Frame<O::State>, c: u8) -> Option<(bool, bool)> {
        let n = self.n;
        let (i, j) = (f.p / n, f.p % n);
        for &(a, b) in &self.pairs {
            if c == b && f.used & (1 << a) == 0 {
                return None;
            }
        }
        let mut row_eq = false;
        if i > 0 && f.row_eq {
            let above = f.grid[f.p - n];
            if c < above {
                return None;
            }
            row_eq = c == above;
        }
        let mut col_eq = false;
        if j > 0 && f.col_prev & (1 << j) != 0 {
            let left = f.grid[f.p - 1];
            if c < left {
                return None;
            }
            col_eq = c == left;
        }
        Some((row_eq, col_eq))
    }

    fn child(&self, f: &Frame<O::State>, c: u8, row_eq: bool, col_eq: bool, state: O::State) -> Frame<O::State> {
        let n = self.n;
        let j = f.p % n;
        let mut grid = f.grid.clone();
        grid[f.p] = c;
        let col_cur = if col_eq { f.col_cur | (1 << j) } else { f.col_cur };
        let (row_eq, col_prev, col_cur) = if j + 1 == n { (true, col_cur, 0) } else { (row_eq, f.col_prev, col_cur) };
        Frame { p: f.p + 1, grid, state, row_eq, col_prev, col_cur, used: f.used | (1 << c) }
    }

    fn expand(&self, f: &Frame<O::State>, local: &mut u64) -> Vec<Frame<O::State>> {
        let n = self.n;
        let (i, j) = (f.p / n, f.p % n);
        let mut out = Vec::new();
        for &c in &self.palette {
            let Some((row_eq, col_eq)) = self.admissible(f, c) else { continue };
            *local += 1;
            let mut st = f.state.clone();
            if self.obs.add_edge(&mut st, i, j, Color::from_index(c as usize)) {
                continue;
            }
            out.push(self.child(f, c, row_eq, col_eq, st));
        }
        out
    }

    fn dfs(&self, f: &mut Frame<O::State>, shared: &Shared, local: &mut u64) -> Flow {
        let n = self.n;
        if f.p == n * n {
            return Flow::Found(f.grid.clone());
        }
        let (i, j) = (f.p / n, f.p % n);
        for &c in &self.palette {
            let Some((row_eq, col_eq)) = self.admissible(f, c) else { continue };
            *local += 1;
            if *local >= 4096 && shared.flush(local) {
                return Flow::Stopped;
            }
            let mut st = f.state.clone();
            if self.obs.add_edge(&mut st, i, j, Color::from_index(c as usize)) {
                continue;
            }
            // descend in place, restoring the frame afterwards
            let saved = (f.row_eq, f.col_prev, f.col_cur, f.used);
            let state = std::mem::replace(&mut f.state, st);
            f.grid[f.p] = c;
            if col_eq {
                f.col_cur |= 1 << j;
            }
            if j + 1 == n {
                f.row_eq = true;
                f.col_prev = f.col_cur;
                f.col_cur = 0;
            } else {
                f.row_eq = row_eq;
            }
            f.used |= 1 << c;
            f.p += 1;
            let flow = self.dfs(f, shared, local);
            f.p -= 1;
            f.grid[f.p] = UNSET;
            f.state = state;
            (f.row_eq, f.col_prev, f.col_cur, f.used) = saved;
            match flow {
                Flow::Done => {}
                other => return other,
            }
        }
        Flow::Done
    }
}

/// Runs the search on `K_{n,n}`. `threads == 1` runs the tasks in order on
/// the calling thread, which makes the result deterministic.
pub fn run<O: Obstruction>(obs: &O, n: usize, budget: &Budget, threads: usize) -> SearchOutcome {
    assert!(n >= 1 && n <= MAX_SIDE, "side {n} outside 1..={MAX_SIDE}");
    let search = Search {
        obs,
        n,
        palette: obs.palette().iter().map(|c| c.index() as u8).collect(),
        pairs: obs.interchangeable().iter().map(|&(a, b)| (a.index() as u8, b.index() as u8)).collect(),
    };
    let shared = Shared {
        budget,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
    };
    let root = Frame {
        p: 0,
        grid: vec![UNSET; n * n],
        state: obs.initial(n),
        row_eq: true,
        col_prev: u32::MAX,
        col_cur: 0,
        used: 0,
    };

    // expand the first row into independent tasks
    let mut local = 0u64;
    let mut tasks = vec![root];
    for _ in 0..n {
        tasks = tasks.iter().flat_map(|f| search.expand(f, &mut local)).collect();
    }
    shared.flush(&mut local);

    let run_task = |mut f: Frame<O::State>| -> Flow {
        if shared.stop.load(Ordering::Relaxed) {
            return Flow::Stopped;
        }
        let mut local = 0u64;
        let flow = search.dfs(&mut f, &shared, &mut local);
        shared.flush(&mut local);
        if matches!(flow, Flow::Found(_)) {
            shared.stop.store(true, Ordering::Relaxed);
        }
        flow
    };

    let flows: Vec<Flow> = if threads <= 1 {
        let mut flows = Vec::new();
        for t in tasks {
            let flow = run_task(t);
            let done = !matches!(flow, Flow::Done);
            flows.push(flow);
            if done {
                break;
            }
        }
        flows
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        pool.install(|| tasks.into_par_iter().map(run_task).collect())
    };

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let elapsed = shared.start.elapsed();
    let mut witness = None;
    let mut stopped = false;
    for flow in flows {
        match flow {
            Flow::Found(grid) if witness.is_none() => {
                witness = Some(Coloring::from_fn(n, n, |u, v| Some(Color::from_index(grid[u * n + v] as usize))));
            }
            Flow::Stopped => stopped = true,
            _ => {}
        }
    }
    let status = if let Some(w) = &witness {
        assert!(obs.certifies(w), "search returned a coloring that fails re-verification:\n{w:?}");
        SearchStatus::WitnessFound
    } else if stopped {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::Refuted
    };
    SearchOutcome { n, status, witness, nodes_explored: nodes, elapsed }
}
