//! Graph representations shared by every other module.
//!
//! Two labeled graph types: [`BipartiteGraph`] with explicitly sided vertex
//! sets X (size `m`) and Y (size `n`), and [`GeneralGraph`], a plain simple
//! graph. Adjacency is stored as packed bit rows so that degree, neighbourhood
//! intersection and edge toggling stay word operations; the exhaustive oracle
//! walks millions of these.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({x},{y}) out of range for a ({m},{n}) bipartite graph")]
    BipartiteEdgeOutOfRange { x: usize, y: usize, m: usize, n: usize },
    #[error("edge ({u},{v}) out of range for a graph of order {order}")]
    EdgeOutOfRange { u: usize, v: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("split ({m},{n}) does not cover order {order}")]
    BadSplit { m: usize, n: usize, order: usize },
    #[error("edge ({u},{v}) crosses within one side of the ({m},{n}) split")]
    NotBipartiteUnderSplit { u: usize, v: usize, m: usize, n: usize },
}

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
fn get_bit(words: &[u64], i: usize) -> bool {
    (words[i / WORD] >> (i % WORD)) & 1 != 0
}

#[inline]
fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD] |= 1u64 << (i % WORD);
}

/// Iterate the set bit positions of a word slice.
fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

/// Labeled bipartite graph with sides X = {x_0..x_{m-1}} and Y = {y_0..y_{n-1}}.
///
/// Adjacency is stored one-sided (per X-vertex bit rows over Y) and queried
/// both ways. Immutable once built; all operations on it are pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl BipartiteGraph {
    /// Graph on sides (m, n) with no edges.
    pub fn empty(m: usize, n: usize) -> Self {
        let stride = words_for(n).max(1);
        BipartiteGraph { m, n, stride, rows: vec![0; m * stride] }
    }

    /// Build from an edge list; duplicates collapse, out-of-range pairs error.
    pub fn from_edges(
        m: usize,
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(m, n);
        for &(x, y) in edges {
            if x >= m || y >= n {
                return Err(GraphError::BipartiteEdgeOutOfRange { x, y, m, n });
            }
            g.add_edge(x, y);
        }
        Ok(g)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of vertices, X first then Y.
    pub fn order(&self) -> usize {
        self.m + self.n
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.m && y < self.n);
        set_bit(&mut self.rows[x * self.stride..(x + 1) * self.stride], y);
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        debug_assert!(x < self.m && y < self.n);
        get_bit(&self.rows[x * self.stride..(x + 1) * self.stride], y)
    }

    pub fn row(&self, x: usize) -> &[u64] {
        &self.rows[x * self.stride..(x + 1) * self.stride]
    }

    pub fn x_degree(&self, x: usize) -> usize {
        self.row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn y_degree(&self, y: usize) -> usize {
        (0..self.m).filter(|&x| self.has_edge(x, y)).count()
    }

    pub fn edge_count(&self) -> u64 {
        self.rows.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn x_neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(x))
    }

    pub fn y_neighbors(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.m).filter(move |&x| self.has_edge(x, y))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.m).flat_map(move |x| self.x_neighbors(x).map(move |y| (x, y)))
    }

    /// Disjoint union: `self`'s sides first, then `other`'s.
    pub fn disjoint_union(&self, other: &BipartiteGraph) -> BipartiteGraph {
        let m = self.m + other.m;
        let n = self.n + other.n;
        let mut g = BipartiteGraph::empty(m, n);
        for (x, y) in self.edges() {
            g.add_edge(x, y);
        }
        for (x, y) in other.edges() {
            g.add_edge(self.m + x, self.n + y);
        }
        g
    }

    /// Flatten to a simple graph: x_i becomes vertex i, y_j becomes m + j.
    pub fn to_general(&self) -> GeneralGraph {
        let mut g = GeneralGraph::empty(self.order());
        for (x, y) in self.edges() {
            g.add_edge(x, self.m + y);
        }
        g
    }

    /// Re-side a simple graph as bipartite: vertices 0..m become X, the rest Y.
    /// Errors unless every edge crosses the split.
    pub fn from_general_split(
        g: &GeneralGraph,
        m: usize,
        n: usize,
    ) -> Result<Self, GraphError> {
        if m + n != g.order() {
            return Err(GraphError::BadSplit { m, n, order: g.order() });
        }
        let mut b = BipartiteGraph::empty(m, n);
        for (u, v) in g.edges() {
            let (lo, hi) = (u.min(v), u.max(v));
            if lo >= m || hi < m {
                return Err(GraphError::NotBipartiteUnderSplit { u, v, m, n });
            }
            b.add_edge(lo, hi - m);
        }
        Ok(b)
    }
}

/// Labeled simple graph: symmetric irreflexive adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralGraph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl GeneralGraph {
    pub fn empty(order: usize) -> Self {
        let stride = words_for(order).max(1);
        GeneralGraph { order, stride, rows: vec![0; order * stride] }
    }

    /// Complete graph K_n.
    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in (u + 1)..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::EdgeOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.order && v < self.order && u != v);
        set_bit(&mut self.rows[u * self.stride..(u + 1) * self.stride], v);
        set_bit(&mut self.rows[v * self.stride..(v + 1) * self.stride], u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        get_bit(&self.rows[u * self.stride..(u + 1) * self.stride], v)
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.stride..(u + 1) * self.stride]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> u64 {
        let twice: u64 = self.rows.iter().map(|w| w.count_ones() as u64).sum();
        twice / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    /// Edges as (u, v) with u < v.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn disjoint_union(&self, other: &GeneralGraph) -> GeneralGraph {
        let mut g = GeneralGraph::empty(self.order + other.order);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.order + u, self.order + v);
        }
        g
    }

    /// Join: disjoint union plus every cross edge.
    pub fn join(&self, other: &GeneralGraph) -> GeneralGraph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.order {
            for v in 0..other.order {
                g.add_edge(u, self.order + v);
            }
        }
        g
    }

    /// Proper 2-coloring if one exists (vertex -> side), found by BFS.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.order];
        for start in 0..self.order {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut comps = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Uniform adjacency view used by the embedding search and the spectral
/// routines, so they run on owned graphs and on the oracle's transient
/// bit-row buffers alike.
pub trait AdjacencyHost {
    fn order(&self) -> usize;
    fn adjacent(&self, u: usize, v: usize) -> bool;
    fn degree(&self, u: usize) -> usize;
    fn neighbors_of(&self, u: usize, out: &mut Vec<usize>);
    /// Side sizes (m, n) when the host is explicitly bipartite with
    /// X = 0..m and Y = m..m+n.
    fn side_split(&self) -> Option<(usize, usize)> {
        None
    }
}

impl AdjacencyHost for GeneralGraph {
    fn order(&self) -> usize {
        self.order
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }

    fn degree(&self, u: usize) -> usize {
        GeneralGraph::degree(self, u)
    }

    fn neighbors_of(&self, u: usize, out: &mut Vec<usize>) {
        out.clear();
        out.extend(self.neighbors(u));
    }
}

impl AdjacencyHost for BipartiteGraph {
    fn order(&self) -> usize {
        self.m + self.n
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        let (lo, hi) = (u.min(v), u.max(v));
        lo < self.m && hi >= self.m && self.has_edge(lo, hi - self.m)
    }

    fn degree(&self, u: usize) -> usize {
        if u < self.m {
            self.x_degree(u)
        } else {
            self.y_degree(u - self.m)
        }
    }

    fn neighbors_of(&self, u: usize, out: &mut Vec<usize>) {
        out.clear();
        if u < self.m {
            out.extend(self.x_neighbors(u).map(|y| self.m + y));
        } else {
            out.extend(self.y_neighbors(u - self.m));
        }
    }

    fn side_split(&self) -> Option<(usize, usize)> {
        Some((self.m, self.n))
    }
}
