//! Per-colour structure of a coloring: monochromatic components, maximum
//! matchings, König minimum covers, cover vertices and component types, and
//! the largest monochromatic connected matching.
//!
//! A *connected matching* of colour `c` is a matching all of whose edges lie
//! in one connected component of the subgraph spanned by `c`-edges. Its
//! maximum size in a component is that component's matching number `ν`, so
//! the largest connected matching of a colour is the maximum `ν` over that
//! colour's components.

pub mod bipartite;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use bipartite::{BipartiteGraph, MatchingState};

use crate::bigraph::{Color, Coloring, Side, Vertex};
use crate::dsu::DisjointSets;

/// A maximal connected piece of one colour's subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub color: Color,
    /// Sorted left indices.
    pub left: Vec<usize>,
    /// Sorted right indices.
    pub right: Vec<usize>,
    /// `(left, right)` pairs, row-major order.
    pub edges: Vec<(usize, usize)>,
}

impl Component {
    pub fn order(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.left.iter().map(|&u| Vertex::left(u)).chain(self.right.iter().map(|&v| Vertex::right(v)))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match v.side {
            Side::Left => self.left.binary_search(&v.index).is_ok(),
            Side::Right => self.right.binary_search(&v.index).is_ok(),
        }
    }

    pub fn side(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// The component as a local-index bipartite graph, optionally with one
    /// vertex removed.
    fn local_graph(&self, skip: Option<Vertex>) -> BipartiteGraph {
        let li: BTreeMap<usize, usize> = self.left.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let ri: BTreeMap<usize, usize> = self.right.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| skip != Some(Vertex::left(u)) && skip != Some(Vertex::right(v)))
            .map(|(u, v)| (li[u], ri[v]));
        BipartiteGraph::from_edges(self.left.len(), self.right.len(), edges)
    }
}

/// A set of pairwise-disjoint edges of one colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub color: Color,
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentType {
    /// Every cover vertex is on the left.
    TypeL,
    /// Every cover vertex is on the right.
    TypeR,
    /// Cover vertices on both sides.
    Unspecified,
    /// No cover vertices at all (an edgeless component).
    NotConnectedToBothSides,
}

/// Cover structure of one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub matching_number: usize,
    pub min_cover: Vec<Vertex>,
    pub cover_vertices: Vec<Vertex>,
    pub kind: ComponentType,
    /// A side whose entire intersection with the component is a minimum
    /// cover. Callers decide whether the component is big enough to care.
    pub one_sided_cover: Option<Side>,
}

/// Monochromatic components of colour `col`, ordered by their smallest
/// vertex. Vertices with no `col`-edge belong to no component.
pub fn components(c: &Coloring, col: Color) -> Vec<Component> {
    let nl = c.n_left();
    let mut dsu = DisjointSets::new(nl + c.n_right());
    let mut touched = vec![false; nl + c.n_right()];
    for (u, v, e) in c.edges() {
        if e == col {
            dsu.union(u, nl + v);
            touched[u] = true;
            touched[nl + v] = true;
        }
    }
    let mut by_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut comps: Vec<Component> = Vec::new();
    // left vertices first, so every component is created at its smallest vertex
    for x in 0..touched.len() {
        if !touched[x] {
            continue;
        }
        let r = dsu.find(x);
        let idx = *by_root.entry(r).or_insert_with(|| {
            comps.push(Component { color: col, left: vec![], right: vec![], edges: vec![] });
            comps.len() - 1
        });
        if x < nl {
            comps[idx].left.push(x);
        } else {
            comps[idx].right.push(x - nl);
        }
    }
    for (u, v, e) in c.edges() {
        if e == col {
            let idx = by_root[&dsu.find(u)];
            comps[idx].edges.push((u, v));
        }
    }
    comps
}

/// A maximum matching of the component, in original indices.
pub fn max_matching(comp: &Component) -> Matching {
    let g = comp.local_graph(None);
    let m = g.max_matching();
    Matching { color: comp.color, edges: m.pairs().into_iter().map(|(a, b)| (comp.left[a], comp.right[b])).collect() }
}

pub fn matching_number(comp: &Component) -> usize {
    comp.local_graph(None).matching_number()
}

/// ν of the component with vertex `v` deleted.
pub fn matching_number_without(comp: &Component, v: Vertex) -> usize {
    comp.local_graph(Some(v)).matching_number()
}

/// Minimum vertex cover via König's alternating-reachability construction.
/// Sorted, left vertices first.
pub fn min_vertex_cover(comp: &Component) -> Vec<Vertex> {
    let g = comp.local_graph(None);
    let m = g.max_matching();
    let (l, r) = g.konig_cover(&m);
    l.into_iter()
        .map(|a| Vertex::left(comp.left[a]))
        .chain(r.into_iter().map(|b| Vertex::right(comp.right[b])))
        .collect()
}

/// Vertices lying in at least one minimum cover. In a bipartite graph these
/// are exactly the vertices whose deletion lowers ν by one, which is how
/// they are found here: one matching computation per vertex.
pub fn cover_vertices(comp: &Component) -> Vec<Vertex> {
    let nu = matching_number(comp);
    comp.vertices().filter(|&v| nu > 0 && matching_number_without(comp, v) + 1 == nu).collect()
}

fn type_of(cover_vertices: &[Vertex]) -> ComponentType {
    let l = cover_vertices.iter().any(|v| v.side == Side::Left);
    let r = cover_vertices.iter().any(|v| v.side == Side::Right);
    match (l, r) {
        (true, true) => ComponentType::Unspecified,
        (true, false) => ComponentType::TypeL,
        (false, true) => ComponentType::TypeR,
        (false, false) => ComponentType::NotConnectedToBothSides,
    }
}

pub fn component_type(comp: &Component) -> ComponentType {
    type_of(&cover_vertices(comp))
}

pub fn cover_report(comp: &Component) -> CoverReport {
    let matching_number = matching_number(comp);
    let min_cover = min_vertex_cover(comp);
    let cover_vertices = cover_vertices(comp);
    let kind = type_of(&cover_vertices);
    let one_sided_cover = [Side::Left, Side::Right]
        .into_iter()
        .find(|&s| matching_number > 0 && comp.side(s).len() == matching_number);
    CoverReport { matching_number, min_cover, cover_vertices, kind, one_sided_cover }
}

/// Largest connected matching of one colour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedMatching {
    pub size: usize,
    /// Index into [`components`] for this colour; `None` if the colour is unused.
    pub component: Option<usize>,
    pub matching: Matching,
}

/// Maximum ν over the components of `col`; ties go to the earlier component.
pub fn largest_connected_matching(c: &Coloring, col: Color) -> ConnectedMatching {
    let mut best = ConnectedMatching { size: 0, component: None, matching: Matching { color: col, edges: vec![] } };
    for (i, comp) in components(c, col).iter().enumerate() {
        let m = max_matching(comp);
        if m.len() > best.size || best.component.is_none() {
            best = ConnectedMatching { size: m.len(), component: Some(i), matching: m };
        }
    }
    best
}

/// Whether there is a red `k`-, green `l`- or blue `m`-connected matching.
/// A threshold of 0 is met by the empty matching. The witness, if any, is
/// the largest connected matching of the first colour that meets its
/// threshold, truncated to the threshold.
pub fn meets_thresholds(c: &Coloring, k: usize, l: usize, m: usize) -> (bool, Option<Matching>) {
    for (col, t) in Color::ALL.into_iter().zip([k, l, m]) {
        if t == 0 {
            return (true, Some(Matching { color: col, edges: vec![] }));
        }
        let cm = largest_connected_matching(c, col);
        if cm.size >= t {
            let mut w = cm.matching;
            w.edges.truncate(t);
            return (true, Some(w));
        }
    }
    (false, None)
}

/// Largest connected-matching size per colour, in `Color::ALL` order.
pub fn cm_profile(c: &Coloring) -> [usize; 3] {
    Color::ALL.map(|col| largest_connected_matching(c, col).size)
}
