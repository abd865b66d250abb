//! Reduction of an almost complete 3-coloured bipartite graph to a complete
//! one, with a certificate for the connected matching found at the end.
//!
//! Pipeline: virtual components per colour, the cover-augmented graph `G1`,
//! non-edge types and their covers, `G2 = G1 − U`, and finally a largest
//! connected matching of `G2` pulled back to a genuine component of the
//! input.

mod check;

pub use check::verify_certificate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bigraph::{Color, Coloring, IndexMap, Side, Vertex};
use crate::error::Error;
use crate::matching::{components, largest_connected_matching, max_matching, min_vertex_cover, BipartiteGraph, Matching};

/// Number of non-edge types the counting argument allows (8 virtual
/// components per colour, 6 coordinates).
pub const TYPE_BOUND: u64 = 262_144;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualComponent {
    pub color: Color,
    /// Indices into `components(c, color)`.
    pub members: Vec<usize>,
    pub vertices: Vec<Vertex>,
    /// A single component of order at least `n`.
    pub is_genuine: bool,
    pub matching_number: usize,
    pub chosen_cover: Vec<Vertex>,
}

impl VirtualComponent {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Genuine components first (in component order), then greedy unions of the
/// small ones taken in increasing order of size. A union is closed when the
/// next component would bring it to `2n`, so every closed union has order
/// above `n` and only the last one can be smaller.
pub fn virtual_components(c: &Coloring, col: Color, n: usize) -> Vec<VirtualComponent> {
    let comps = components(c, col);
    let mut out = Vec::new();
    let mut small = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        if comp.order() >= n {
            out.push(vec![i]);
        } else {
            small.push(i);
        }
    }
    let genuine = out.len();
    small.sort_by_key(|&i| (comps[i].order(), i));
    let mut open: Vec<usize> = Vec::new();
    let mut order = 0;
    for i in small {
        if !open.is_empty() && order + comps[i].order() >= 2 * n {
            out.push(std::mem::take(&mut open));
            order = 0;
        }
        order += comps[i].order();
        open.push(i);
    }
    if !open.is_empty() {
        out.push(open);
    }
    out.into_iter()
        .enumerate()
        .map(|(idx, mut members)| {
            members.sort_unstable();
            let mut vertices = Vec::new();
            let mut chosen_cover = Vec::new();
            let mut matching_number = 0;
            for &m in &members {
                vertices.extend(comps[m].vertices());
                let cover = min_vertex_cover(&comps[m]);
                matching_number += cover.len();
                chosen_cover.extend(cover);
            }
            vertices.sort_unstable();
            chosen_cover.sort_unstable();
            VirtualComponent { color: col, members, vertices, is_genuine: idx < genuine, matching_number, chosen_cover }
        })
        .collect()
}

/// Virtual-component index of every vertex for one colour; `None` for
/// vertices with no edge of that colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl Membership {
    pub fn new(n_left: usize, n_right: usize, vcs: &[VirtualComponent]) -> Self {
        let mut m = Membership { left: vec![None; n_left], right: vec![None; n_right] };
        for (i, vc) in vcs.iter().enumerate() {
            for v in &vc.vertices {
                match v.side {
                    Side::Left => m.left[v.index] = Some(i),
                    Side::Right => m.right[v.index] = Some(i),
                }
            }
        }
        m
    }

    pub fn of(&self, v: Vertex) -> Option<usize> {
        match v.side {
            Side::Left => self.left[v.index],
            Side::Right => self.right[v.index],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub left: usize,
    pub right: usize,
    pub color: Color,
}

/// Adds, in the colour of each virtual component, every absent cell inside
/// the component that touches its chosen cover. `vcs` is indexed by
/// `Color::index`; colours are processed red, green, blue and the first
/// claim on a cell wins.
pub fn augment_g1(c: &Coloring, vcs: &[Vec<VirtualComponent>; 3]) -> (Coloring, Vec<ColoredEdge>) {
    let mut g1 = c.clone();
    let mut added = Vec::new();
    for col in Color::ALL {
        for vc in &vcs[col.index()] {
            let left: Vec<usize> = vc.vertices.iter().filter(|v| v.side == Side::Left).map(|v| v.index).collect();
            let right: Vec<usize> = vc.vertices.iter().filter(|v| v.side == Side::Right).map(|v| v.index).collect();
            for w in &vc.chosen_cover {
                let cells: Vec<(usize, usize)> = match w.side {
                    Side::Left => right.iter().map(|&v| (w.index, v)).collect(),
                    Side::Right => left.iter().map(|&u| (u, w.index)).collect(),
                };
                for (u, v) in cells {
                    if g1.get(u, v).is_none() {
                        g1.set(u, v, Some(col));
                        added.push(ColoredEdge { left: u, right: v, color: col });
                    }
                }
            }
        }
    }
    (g1, added)
}

/// Memberships `(a, b, c, d, e, f)`: red, blue, green virtual component of
/// the right endpoint, then of the left endpoint. `None` marks a vertex with
/// no edge of that colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NonEdgeType(pub [Option<usize>; 6]);

const TYPE_ORDER: [Color; 3] = [Color::Red, Color::Blue, Color::Green];

/// Partition of the absent cells of `g1` by type. `members` is indexed by
/// `Color::index`.
pub fn nonedge_types(g1: &Coloring, members: &[Membership; 3]) -> BTreeMap<NonEdgeType, Vec<(usize, usize)>> {
    let mut out: BTreeMap<NonEdgeType, Vec<(usize, usize)>> = BTreeMap::new();
    for (u, v) in g1.absent_cells() {
        let mut t = [None; 6];
        for (i, col) in TYPE_ORDER.into_iter().enumerate() {
            t[i] = members[col.index()].right[v];
            t[3 + i] = members[col.index()].left[u];
        }
        out.entry(NonEdgeType(t)).or_default().push((u, v));
    }
    out
}

/// Minimum vertex cover of the graph formed by the given cells.
pub fn type_cover(nonedges: &[(usize, usize)]) -> Vec<Vertex> {
    let nl = nonedges.iter().map(|&(u, _)| u + 1).max().unwrap_or(0);
    let nr = nonedges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    let g = BipartiteGraph::from_edges(nl, nr, nonedges.iter().copied());
    let m = g.max_matching();
    let (l, r) = g.konig_cover(&m);
    l.into_iter().map(Vertex::left).chain(r.into_iter().map(Vertex::right)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Enforce the constant-factor side condition of the theorem.
    Paper,
    /// Accept any side length; report whether the complete-graph guarantee
    /// still applies after removal.
    Relaxed,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "paper" => Ok(Mode::Paper),
            "relaxed" => Ok(Mode::Relaxed),
            _ => Err(Error::InvalidParams(format!("unknown mode {s:?}, expected paper or relaxed"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionStatus {
    /// The final matching has at least `n` edges.
    Certified,
    /// No `n`-connected matching in `G2`, whose sides are below `3n − 2`.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeClass {
    pub ty: NonEdgeType,
    pub nonedges: Vec<(usize, usize)>,
    pub cover: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    /// ν of every virtual component is the same in `G` and `G1`.
    pub nu_preserved: bool,
    /// Every component of `G1` lies inside one virtual component of `G`.
    pub components_stable: bool,
    /// `U` meets every absent cell of `G1`.
    pub u_covers: bool,
    pub g2_complete: bool,
}

impl Invariants {
    pub fn all(&self) -> bool {
        self.nu_preserved && self.components_stable && self.u_covers && self.g2_complete
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub mode: Mode,
    pub n: usize,
    pub eps_n: f64,
    /// Side length of the input.
    pub big_n: usize,
    pub min_degree: usize,
    pub virtual_components: Vec<VirtualComponent>,
    pub added_edges: Vec<ColoredEdge>,
    pub types: Vec<TypeClass>,
    /// `U`, sorted.
    pub removed: Vec<Vertex>,
    /// Number of non-empty types times the largest type cover; bounds `|U|`.
    pub size_bound: usize,
    pub index_map: IndexMap,
    pub g2_sides: [usize; 2],
    /// Largest connected matching of `G2`, in input indices.
    pub g2_matching: Matching,
    pub status: ReductionStatus,
    /// Index into `components(input, color)` of the genuine component.
    pub final_component: Option<usize>,
    /// Maximum matching of that component, using input edges only.
    pub final_matching: Option<Matching>,
    pub invariants: Invariants,
    pub notes: Vec<String>,
}

fn check_preconditions(c: &Coloring, n: usize, eps_n: f64, mode: Mode) -> Result<usize, Error> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be at least 1".into()));
    }
    if !(eps_n >= 0.0 && eps_n.is_finite()) {
        return Err(Error::InvalidParams(format!("eps-n must be a finite non-negative number, got {eps_n}")));
    }
    if c.n_left() != c.n_right() {
        return Err(Error::Precondition(format!("input must be balanced, got {}x{}", c.n_left(), c.n_right())));
    }
    let big_n = c.n_left();
    let min_degree = c.min_degree().unwrap_or(0);
    if (min_degree as f64) < big_n as f64 - eps_n {
        return Err(Error::Precondition(format!(
            "minimum degree {min_degree} is below N - eps-n = {big_n} - {eps_n}"
        )));
    }
    if mode == Mode::Paper {
        let scaled = TYPE_BOUND as f64 * eps_n;
        if scaled >= n as f64 {
            return Err(Error::Precondition(format!(
                "paper mode needs {TYPE_BOUND}·eps-n < n, got {scaled} >= {n}"
            )));
        }
        if (big_n as f64) < 3.0 * n as f64 + scaled {
            return Err(Error::Precondition(format!(
                "paper mode needs N >= 3n + {TYPE_BOUND}·eps-n = {}, got N = {big_n}",
                3.0 * n as f64 + scaled
            )));
        }
    }
    Ok(min_degree)
}

fn restricted_nu(c: &Coloring, vc: &VirtualComponent) -> usize {
    let left: Vec<usize> = vc.vertices.iter().filter(|v| v.side == Side::Left).map(|v| v.index).collect();
    let right: Vec<usize> = vc.vertices.iter().filter(|v| v.side == Side::Right).map(|v| v.index).collect();
    let mut g = BipartiteGraph::new(left.len(), right.len());
    for (a, &u) in left.iter().enumerate() {
        for (b, &v) in right.iter().enumerate() {
            if c.get(u, v) == Some(vc.color) {
                g.add_edge(a, b);
            }
        }
    }
    g.matching_number()
}

/// Runs the pipeline. `eps_n` is the absolute degree deficiency: every vertex
/// must have degree at least `N − eps_n`.
pub fn reduce_and_find(c: &Coloring, n: usize, eps_n: f64, mode: Mode) -> Result<ReductionCertificate, Error> {
    let min_degree = check_preconditions(c, n, eps_n, mode)?;
    let big_n = c.n_left();
    let mut notes = Vec::new();
    if mode == Mode::Relaxed {
        notes.push(format!(
            "relaxed mode: the side condition N >= 3n + {TYPE_BOUND}·eps-n is not enforced; \
             only the complete-graph guarantee for sides >= 3n - 2 is checked after removal"
        ));
    }

    let vcs: [Vec<VirtualComponent>; 3] = Color::ALL.map(|col| virtual_components(c, col, n));
    for col in Color::ALL {
        let count = vcs[col.index()].len();
        if count > 8 {
            let msg = format!("{count} {col} virtual components, more than 8 (N > 4n)");
            if mode == Mode::Paper {
                return Err(Error::Precondition(msg));
            }
            notes.push(msg);
        }
    }
    let members: [Membership; 3] = Color::ALL.map(|col| Membership::new(big_n, big_n, &vcs[col.index()]));

    let (g1, added_edges) = augment_g1(c, &vcs);

    let nu_preserved = Color::ALL
        .iter()
        .all(|col| vcs[col.index()].iter().all(|vc| restricted_nu(&g1, vc) == vc.matching_number));
    let components_stable = Color::ALL.iter().all(|&col| {
        components(&g1, col).iter().all(|comp| {
            let mut ids = comp.vertices().map(|v| members[col.index()].of(v));
            let first = ids.next().flatten();
            first.is_some() && ids.all(|x| x == first)
        })
    });

    let classes = nonedge_types(&g1, &members);
    let mut types = Vec::with_capacity(classes.len());
    let mut removed: Vec<Vertex> = Vec::new();
    let mut largest_cover = 0;
    for (ty, nonedges) in classes {
        let cover = type_cover(&nonedges);
        if cover.len() as f64 > eps_n {
            // cannot happen when the degree precondition holds
            return Err(Error::Internal(format!(
                "cover of non-edge type {ty:?} has {} vertices, more than eps-n = {eps_n}",
                cover.len()
            )));
        }
        largest_cover = largest_cover.max(cover.len());
        removed.extend(cover.iter().copied());
        types.push(TypeClass { ty, nonedges, cover });
    }
    removed.sort_unstable();
    removed.dedup();
    let size_bound = types.len() * largest_cover;

    let u_covers = g1.absent_cells().all(|(u, v)| {
        removed.binary_search(&Vertex::left(u)).is_ok() || removed.binary_search(&Vertex::right(v)).is_ok()
    });
    let (g2, index_map) = g1.delete_vertices(&removed)?;
    let g2_complete = g2.is_complete();
    let invariants = Invariants { nu_preserved, components_stable, u_covers, g2_complete };
    if !invariants.all() {
        return Err(Error::Internal(format!("reduction invariant failed: {invariants:?}")));
    }

    let g2_sides = [g2.n_left(), g2.n_right()];
    let best = Color::ALL
        .iter()
        .map(|&col| largest_connected_matching(&g2, col))
        .fold(None::<crate::matching::ConnectedMatching>, |acc, cm| match acc {
            Some(a) if a.size >= cm.size => Some(a),
            _ => Some(cm),
        })
        .expect("three colours");
    let (inv_l, inv_r) = index_map.inverse();
    let g2_matching = Matching {
        color: best.matching.color,
        edges: best.matching.edges.iter().map(|&(u, v)| (inv_l[u], inv_r[v])).collect(),
    };

    let col = g2_matching.color;
    let mut final_component = None;
    let mut final_matching = None;
    if let Some(&(u, _)) = g2_matching.edges.first() {
        let vc_id = members[col.index()].left[u].ok_or_else(|| Error::Internal("matched vertex has no virtual component".into()))?;
        let vc = &vcs[col.index()][vc_id];
        let inside = g2_matching.edges.iter().all(|&(x, y)| {
            members[col.index()].left[x] == Some(vc_id) && members[col.index()].right[y] == Some(vc_id)
        });
        if !inside {
            return Err(Error::Internal("G2 matching spans several virtual components".into()));
        }
        if vc.is_genuine {
            let comp_id = vc.members[0];
            let comp = &components(c, col)[comp_id];
            let m = max_matching(comp);
            if m.len() < g2_matching.len() {
                return Err(Error::Internal(format!(
                    "genuine component has ν = {} in the input but carries a {}-matching in G2",
                    m.len(),
                    g2_matching.len()
                )));
            }
            final_component = Some(comp_id);
            final_matching = Some(m);
        } else if g2_matching.len() >= n {
            return Err(Error::Internal("an n-connected matching of G2 lies in a union of small components".into()));
        }
    }

    let certified = final_matching.as_ref().is_some_and(|m| m.len() >= n);
    let status = if certified {
        ReductionStatus::Certified
    } else if g2_sides[0].min(g2_sides[1]) + 2 >= 3 * n {
        return Err(Error::Internal(format!(
            "G2 has sides {g2_sides:?} >= 3n - 2 but no {n}-connected matching"
        )));
    } else {
        notes.push(format!("G2 sides {g2_sides:?} are below 3n - 2 = {}", (3 * n).saturating_sub(2)));
        ReductionStatus::Inconclusive
    };

    Ok(ReductionCertificate {
        mode,
        n,
        eps_n,
        big_n,
        min_degree,
        virtual_components: vcs.into_iter().flatten().collect(),
        added_edges,
        types,
        removed,
        size_bound,
        index_map,
        g2_sides,
        g2_matching,
        status,
        final_component,
        final_matching,
        invariants,
        notes,
    })
}
