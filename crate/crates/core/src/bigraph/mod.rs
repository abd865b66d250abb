//! Coloured bipartite graphs.
//!
//! A [`Coloring`] is a dense `n_left × n_right` table whose cells hold one of
//! the three colours or nothing (an absent edge). Every other module works on
//! this representation; values are never mutated in place once built, so a
//! coloring can be shared freely between threads.

mod json;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use json::{read_coloring, write_coloring};

use crate::error::Error;

/// Edge colour. The derived order `Red < Green < Blue` is the canonical
/// order used for symmetry breaking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Color {
        Color::ALL[i]
    }

    pub fn code(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Green => 'G',
            Color::Blue => 'B',
        }
    }

    pub fn from_code(c: char) -> Option<Color> {
        match c.to_ascii_uppercase() {
            'R' => Some(Color::Red),
            'G' => Some(Color::Green),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl std::str::FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "r" | "red" => Ok(Color::Red),
            "g" | "green" => Ok(Color::Green),
            "b" | "blue" => Ok(Color::Blue),
            _ => Err(Error::UnknownColor(s.to_string())),
        }
    }
}

impl Serialize for Color {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Color::Red => "R",
            Color::Green => "G",
            Color::Blue => "B",
        })
    }
}

impl<'de> Deserialize<'de> for Color {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl Serialize for Side {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Side::Left => "L",
            Side::Right => "R",
        })
    }
}

impl<'de> Deserialize<'de> for Side {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match String::deserialize(d)?.as_str() {
            "L" => Ok(Side::Left),
            "R" => Ok(Side::Right),
            other => Err(serde::de::Error::custom(format!("unknown side {other:?}"))),
        }
    }
}

/// A vertex of a coloring, identified by its side and 0-based index within
/// that side. Orders all left vertices before all right vertices.
///
/// Serialized as a `["L", 3]` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Side, usize)", into = "(Side, usize)")]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub const fn left(index: usize) -> Vertex {
        Vertex { side: Side::Left, index }
    }

    pub const fn right(index: usize) -> Vertex {
        Vertex { side: Side::Right, index }
    }
}

impl From<(Side, usize)> for Vertex {
    fn from((side, index): (Side, usize)) -> Self {
        Vertex { side, index }
    }
}

impl From<Vertex> for (Side, usize) {
    fn from(v: Vertex) -> Self {
        (v.side, v.index)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "L{}", self.index),
            Side::Right => write!(f, "R{}", self.index),
        }
    }
}

/// A complete or partial 3-colouring of the edges of `K_{n_left, n_right}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n_left: usize,
    n_right: usize,
    cells: Vec<Option<Color>>,
}

impl Coloring {
    /// All cells absent.
    pub fn empty(n_left: usize, n_right: usize) -> Coloring {
        Coloring { n_left, n_right, cells: vec![None; n_left * n_right] }
    }

    /// Every edge present in colour `col`.
    pub fn monochromatic(n_left: usize, n_right: usize, col: Color) -> Coloring {
        Coloring { n_left, n_right, cells: vec![Some(col); n_left * n_right] }
    }

    pub fn from_rows(rows: Vec<Vec<Option<Color>>>, n_right: usize) -> Result<Coloring, Error> {
        let n_left = rows.len();
        let mut cells = Vec::with_capacity(n_left * n_right);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_right {
                return Err(Error::RaggedRow { row: i, expected: n_right, found: row.len() });
            }
            cells.extend(row);
        }
        Ok(Coloring { n_left, n_right, cells })
    }

    /// Builds a complete coloring from a closure.
    pub fn from_fn(n_left: usize, n_right: usize, mut f: impl FnMut(usize, usize) -> Option<Color>) -> Coloring {
        let mut cells = Vec::with_capacity(n_left * n_right);
        for u in 0..n_left {
            for v in 0..n_right {
                cells.push(f(u, v));
            }
        }
        Coloring { n_left, n_right, cells }
    }

    #[inline]
    pub fn n_left(&self) -> usize {
        self.n_left
    }

    #[inline]
    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::Left => self.n_left,
            Side::Right => self.n_right,
        }
    }

    #[inline]
    pub fn get(&self, left: usize, right: usize) -> Option<Color> {
        assert!(left < self.n_left && right < self.n_right, "cell ({left},{right}) out of range");
        self.cells[left * self.n_right + right]
    }

    pub fn set(&mut self, left: usize, right: usize, col: Option<Color>) {
        assert!(left < self.n_left && right < self.n_right, "cell ({left},{right}) out of range");
        self.cells[left * self.n_right + right] = col;
    }

    /// Returns a copy with one cell changed.
    pub fn with_cell(&self, left: usize, right: usize, col: Option<Color>) -> Coloring {
        let mut c = self.clone();
        c.set(left, right, col);
        c
    }

    pub fn row(&self, left: usize) -> &[Option<Color>] {
        &self.cells[left * self.n_right..(left + 1) * self.n_right]
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.side_len(v.side)
    }

    pub fn present_edges(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    /// Iterates `(left, right, colour)` over present edges in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let w = self.n_right;
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(p, c)| c.map(|col| (p / w, p % w, col)))
    }

    /// Iterates `(left, right)` over absent cells in row-major order.
    pub fn absent_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.n_right;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(move |(p, _)| (p / w, p % w))
    }

    /// Number of present edges at `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        match v.side {
            Side::Left => self.row(v.index).iter().filter(|c| c.is_some()).count(),
            Side::Right => (0..self.n_left).filter(|&u| self.get(u, v.index).is_some()).count(),
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        let left = (0..self.n_left).map(|u| self.degree(Vertex::left(u)));
        let right = (0..self.n_right).map(|v| self.degree(Vertex::right(v)));
        left.chain(right).min()
    }

    /// Removes `v`; later indices on its side shift down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Coloring, Error> {
        if !self.contains(v) {
            return Err(Error::VertexOutOfRange { vertex: v, n_left: self.n_left, n_right: self.n_right });
        }
        Ok(self.delete_vertices(&[v])?.0)
    }

    /// Removes a set of vertices at once and returns the old→new index maps
    /// for both sides (`None` for deleted vertices).
    pub fn delete_vertices(&self, vs: &[Vertex]) -> Result<(Coloring, IndexMap), Error> {
        let mut keep_l = vec![true; self.n_left];
        let mut keep_r = vec![true; self.n_right];
        for &v in vs {
            if !self.contains(v) {
                return Err(Error::VertexOutOfRange { vertex: v, n_left: self.n_left, n_right: self.n_right });
            }
            match v.side {
                Side::Left => keep_l[v.index] = false,
                Side::Right => keep_r[v.index] = false,
            }
        }
        let map = IndexMap { left: compact(&keep_l), right: compact(&keep_r) };
        let rows: Vec<usize> = (0..self.n_left).filter(|&u| keep_l[u]).collect();
        let cols: Vec<usize> = (0..self.n_right).filter(|&v| keep_r[v]).collect();
        let c = Coloring::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]));
        Ok((c, map))
    }

    /// Applies row and column permutations: cell `(u, v)` moves to
    /// `(row_perm[u], col_perm[v])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Coloring {
        assert_eq!(row_perm.len(), self.n_left);
        assert_eq!(col_perm.len(), self.n_right);
        let mut out = Coloring::empty(self.n_left, self.n_right);
        for u in 0..self.n_left {
            for v in 0..self.n_right {
                out.set(row_perm[u], col_perm[v], self.get(u, v));
            }
        }
        out
    }
}

fn compact(keep: &[bool]) -> Vec<Option<usize>> {
    let mut next = 0;
    keep.iter()
        .map(|&k| {
            if k {
                next += 1;
                Some(next - 1)
            } else {
                None
            }
        })
        .collect()
}

/// Old→new vertex index maps produced by [`Coloring::delete_vertices`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexMap {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl IndexMap {
    pub fn map(&self, v: Vertex) -> Option<Vertex> {
        let m = match v.side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        m.get(v.index).copied().flatten().map(|index| Vertex { side: v.side, index })
    }

    /// Inverse map: new index → old index, per side.
    pub fn inverse(&self) -> (Vec<usize>, Vec<usize>) {
        let inv = |m: &[Option<usize>]| m.iter().enumerate().filter_map(|(old, n)| n.map(|_| old)).collect();
        (inv(&self.left), inv(&self.right))
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Coloring {}x{}", self.n_left, self.n_right)?;
        for u in 0..self.n_left {
            let row: String = self.row(u).iter().map(|c| c.map_or('.', Color::code)).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Block description of a coloring: the left side is cut into consecutive
/// blocks, as is the right side, and every block pair gets one entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub left_blocks: Vec<usize>,
    pub right_blocks: Vec<usize>,
    /// `color_table[i][j]` colours every edge between left block `i` and
    /// right block `j`.
    pub color_table: Vec<Vec<Option<Color>>>,
}

impl BlockSpec {
    pub fn new(left_blocks: Vec<usize>, right_blocks: Vec<usize>, color_table: Vec<Vec<Option<Color>>>) -> Self {
        BlockSpec { left_blocks, right_blocks, color_table }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.color_table.len() != self.left_blocks.len() {
            return Err(Error::Construction(format!(
                "colour table has {} rows for {} left blocks",
                self.color_table.len(),
                self.left_blocks.len()
            )));
        }
        for (i, row) in self.color_table.iter().enumerate() {
            if row.len() != self.right_blocks.len() {
                return Err(Error::Construction(format!(
                    "colour table row {} has {} entries for {} right blocks",
                    i + 1,
                    row.len(),
                    self.right_blocks.len()
                )));
            }
        }
        Ok(())
    }

    /// Lists the table with 1-based block labels, e.g. `(1,1):R (1,2):B`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for (i, row) in self.color_table.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let code = c.map_or('-', Color::code);
                parts.push(format!("({},{}):{}", i + 1, j + 1, code));
            }
        }
        parts.join(" ")
    }
}

fn block_of(sizes: &[usize]) -> Vec<usize> {
    sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat(b).take(s)).collect()
}

/// Realizes a block spec: cell `(u, v)` takes the colour of the block pair
/// containing it, blocks laid out by prefix sums in list order.
pub fn new_from_blocks(spec: &BlockSpec) -> Result<Coloring, Error> {
    spec.validate()?;
    let lb = block_of(&spec.left_blocks);
    let rb = block_of(&spec.right_blocks);
    Ok(Coloring::from_fn(lb.len(), rb.len(), |u, v| spec.color_table[lb[u]][rb[v]]))
}
