//! Simple undirected graphs on vertices `1..=n`, the graph families used
//! throughout the crate, and the measurements the complexes depend on.
//!
//! Adjacency is stored as one 64-bit mask per vertex (bit `v - 1` stands for
//! vertex `v`), so graphs are limited to 64 vertices. Every construction in
//! this crate is exponential in the order long before that bound matters.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Hard limit imposed by the bitmask representation.
pub const MAX_ORDER: usize = 64;

/// Largest order for which [`Graph::independence_number`] runs without an
/// explicit override.
pub const ALPHA_GUARD: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid size for {family}: {reason}")]
    InvalidSize { family: String, reason: String },
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex {vertex} is out of range 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("malformed family descriptor `{0}`")]
    BadDescriptor(String),
    #[error("{field}: {reason}")]
    BadGraphJson { field: String, reason: String },
}

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// A simple graph with vertices `1..=n`.
///
/// Each vertex also carries a label tuple naming it in terms of the
/// construction it came from: `[i]` for base families, coordinate tuples for
/// Cartesian products, `[component, ...]` for disjoint unions. Induced
/// subgraphs keep the labels of the vertices they retain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<Vec<usize>>,
}

/// Result of [`Graph::induced_subgraph`]: the relabeled graph together with
/// the parent vertex of each new vertex.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `parent[i]` is the vertex of the original graph that became `i + 1`.
    pub parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn parent_of(&self, v: usize) -> usize {
        self.parent[v - 1]
    }
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

fn mask_of(order: usize) -> u64 {
    if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize + 1;
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_to_set(m: u64) -> VertexSet {
    VertexSet::from_sorted(bits(m).collect())
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is allowed.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { order: n, limit: MAX_ORDER });
        }
        Ok(Graph { adj: vec![0; n], labels: (1..=n).map(|v| vec![v]).collect() })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u - 1] |= bit(v);
        self.adj[v - 1] |= bit(u);
        Ok(())
    }

    fn with_labels(mut self, labels: Vec<Vec<usize>>) -> Graph {
        debug_assert_eq!(labels.len(), self.order());
        self.labels = labels;
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.order())
    }

    pub fn label(&self, v: usize) -> &[usize] {
        &self.labels[v - 1]
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        mask_to_set(self.adj[v - 1])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        mask_to_set(self.adj[v - 1] | bit(v))
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.order() {
            for v in bits(self.adj[u - 1]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn neighbor_masks(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn full_mask(&self) -> u64 {
        mask_of(self.order())
    }

    pub(crate) fn set_to_mask(&self, s: &VertexSet) -> Result<u64, GraphError> {
        let mut m = 0;
        for v in s.iter() {
            if v == 0 || v > self.order() {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() });
            }
            m |= bit(v);
        }
        Ok(m)
    }

    // ---------------------------------------------------------------------
    // Families
    // ---------------------------------------------------------------------

    /// `P_n`: vertices `1..=n`, edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize { family: "path".into(), reason: "n must be at least 1".into() });
        }
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `C_n`: the path `P_n` plus the edge `{1, n}`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize { family: "complete".into(), reason: "n must be at least 1".into() });
        }
        let mut g = Graph::edgeless(n)?;
        let all = g.full_mask();
        for v in 1..=n {
            g.adj[v - 1] = all & !bit(v);
        }
        Ok(g)
    }

    /// `K_{n_1,...,n_k}` with part `i` occupying a contiguous block of labels.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(GraphError::InvalidSize {
                family: "multipartite".into(),
                reason: "parts must be a nonempty list of positive sizes".into(),
            });
        }
        let n: usize = parts.iter().sum();
        let mut g = Graph::edgeless(n)?;
        let mut blocks = Vec::with_capacity(parts.len());
        let mut start = 1;
        for &p in parts {
            let m = (start..start + p).fold(0u64, |m, v| m | bit(v));
            blocks.push(m);
            start += p;
        }
        let all = g.full_mask();
        for block in &blocks {
            for v in bits(*block) {
                g.adj[v - 1] = all & !block;
            }
        }
        Ok(g)
    }

    /// `G □ H` on pairs `(a, b)` numbered lexicographically, first coordinate
    /// most significant.
    pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
        let (n1, n2) = (g.order(), h.order());
        let n = n1 * n2;
        let mut out = Graph::edgeless(n)?;
        let id = |a: usize, b: usize| (a - 1) * n2 + b;
        let mut labels = Vec::with_capacity(n);
        for a in 1..=n1 {
            for b in 1..=n2 {
                let mut l = g.label(a).to_vec();
                l.extend_from_slice(h.label(b));
                labels.push(l);
                for a2 in bits(g.adj[a - 1]) {
                    out.add_edge(id(a, b), id(a2, b))?;
                }
                for b2 in bits(h.adj[b - 1]) {
                    out.add_edge(id(a, b), id(a, b2))?;
                }
            }
        }
        Ok(out.with_labels(labels))
    }

    fn product_of(sizes: &[usize], base: fn(usize) -> Result<Graph, GraphError>, family: &str) -> Result<Graph, GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::InvalidSize { family: family.into(), reason: "need at least one factor".into() });
        }
        let mut acc = base(sizes[0])?;
        for &s in &sizes[1..] {
            acc = Graph::cartesian_product(&acc, &base(s)?)?;
        }
        Ok(acc)
    }

    /// The lattice `L(n_1,...,n_k) = P_{n_1} □ ... □ P_{n_k}`.
    pub fn grid(sizes: &[usize]) -> Result<Graph, GraphError> {
        Graph::product_of(sizes, Graph::path, "grid")
    }

    /// The rook graph `K(n_1,...,n_k) = K_{n_1} □ ... □ K_{n_k}`.
    pub fn rook(sizes: &[usize]) -> Result<Graph, GraphError> {
        Graph::product_of(sizes, Graph::complete, "rook")
    }

    /// Disjoint union; component `i` occupies the `i`-th contiguous block.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
        let n: usize = parts.iter().map(Graph::order).sum();
        let mut out = Graph::edgeless(n)?;
        let mut labels = Vec::with_capacity(n);
        let mut offset = 0;
        for (i, p) in parts.iter().enumerate() {
            for v in 1..=p.order() {
                out.adj[offset + v - 1] = p.adj[v - 1] << offset;
                let mut l = vec![i + 1];
                l.extend_from_slice(p.label(v));
                labels.push(l);
            }
            offset += p.order();
        }
        Ok(out.with_labels(labels))
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i + 1, (i + 1) % 5 + 1));
            edges.push((i + 1, i + 6));
            edges.push((i + 6, (i + 2) % 5 + 6));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    // ---------------------------------------------------------------------
    // Derived graphs
    // ---------------------------------------------------------------------

    /// `G[S]`, relabeled `1..=|S|` in increasing order of the parent labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.set_to_mask(s)?;
        let parent: Vec<usize> = s.iter().collect();
        let mut g = Graph::edgeless(parent.len())?;
        for (i, &u) in parent.iter().enumerate() {
            for (j, &v) in parent.iter().enumerate() {
                if self.is_adjacent(u, v) {
                    g.adj[i] |= 1u64 << j;
                }
            }
        }
        let labels = parent.iter().map(|&u| self.labels[u - 1].clone()).collect();
        Ok(InducedSubgraph { graph: g.with_labels(labels), parent })
    }

    /// `G - S`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.set_to_mask(s)?;
        self.induced_subgraph(&self.vertices().difference(s))
    }

    /// `G^r`: same vertices, `uv` an edge iff `1 <= d(u, v) <= r`.
    pub fn power(&self, r: usize) -> Result<Graph, GraphError> {
        if r == 0 {
            return Err(GraphError::InvalidSize { family: "power".into(), reason: "r must be at least 1".into() });
        }
        let mut out = self.clone();
        for v in 1..=self.order() {
            let dist = self.bfs(v);
            out.adj[v - 1] = dist
                .iter()
                .enumerate()
                .filter(|&(u, d)| u + 1 != v && matches!(d, Some(d) if *d <= r))
                .fold(0, |m, (u, _)| m | bit(u + 1));
        }
        Ok(out)
    }

    // ---------------------------------------------------------------------
    // Measurements
    // ---------------------------------------------------------------------

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source - 1] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].unwrap();
            for w in bits(self.adj[u - 1]) {
                if dist[w - 1].is_none() {
                    dist[w - 1] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs(u)[v - 1]
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(1).iter().all(Option::is_some)
    }

    /// Largest distance between two vertices; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 1..=self.order() {
            for d in self.bfs(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        for root in 1..=n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![0usize; n];
            dist[root - 1] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u - 1] + 1 >= best {
                    break;
                }
                for w in bits(self.adj[u - 1]) {
                    if dist[w - 1] == usize::MAX {
                        dist[w - 1] = dist[u - 1] + 1;
                        parent[w - 1] = u;
                        queue.push_back(w);
                    } else if parent[u - 1] != w {
                        best = best.min(dist[u - 1] + dist[w - 1] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Exact independence number, refusing orders above [`ALPHA_GUARD`].
    pub fn independence_number(&self) -> Result<usize, GraphError> {
        if self.order() > ALPHA_GUARD {
            return Err(GraphError::TooLarge { order: self.order(), limit: ALPHA_GUARD });
        }
        Ok(self.independence_number_unguarded())
    }

    /// Exact independence number with no size guard.
    pub fn independence_number_unguarded(&self) -> usize {
        alpha_of_mask(&self.adj, self.full_mask())
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.iter().all(|u| !self.is_adjacent(u, v)))
    }

    /// All independent sets of size exactly `k`, in lexicographic order.
    pub fn independent_sets_of_size(&self, k: usize) -> Vec<VertexSet> {
        independent_masks_of_size(&self.adj, self.full_mask(), k).into_iter().map(mask_to_set).collect()
    }

    pub fn is_simplicial_vertex(&self, v: usize) -> bool {
        self.is_clique_mask(self.adj[v - 1])
    }

    fn is_clique_mask(&self, m: u64) -> bool {
        bits(m).all(|u| (m & !bit(u)) & !self.adj[u - 1] == 0)
    }

    /// Perfect elimination ordering: repeatedly removes the smallest
    /// simplicial vertex of what remains. `None` if the graph is not chordal.
    pub fn chordal_elimination(&self) -> Option<Vec<usize>> {
        let mut remaining = self.full_mask();
        let mut order = Vec::with_capacity(self.order());
        while remaining != 0 {
            let v = bits(remaining).find(|&v| self.is_clique_mask(self.adj[v - 1] & remaining))?;
            order.push(v);
            remaining &= !bit(v);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.chordal_elimination().is_some()
    }
}

/// Independence number of `G[candidates]` by branch and bound.
///
/// Vertices of degree at most one are taken greedily; otherwise the search
/// branches on a maximum-degree vertex. Branches are cut with a greedy
/// clique-cover bound built in decreasing-degree order.
pub(crate) fn alpha_of_mask(adj: &[u64], candidates: u64) -> usize {
    let mut best = 0;
    alpha_search(adj, candidates, 0, &mut best);
    best
}

fn alpha_search(adj: &[u64], p: u64, size: usize, best: &mut usize) {
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(adj, p) <= *best {
        return;
    }
    let mut min_v = 0;
    let mut min_deg = usize::MAX;
    let mut max_v = 0;
    let mut max_deg = 0;
    for v in bits(p) {
        let d = (adj[v - 1] & p).count_ones() as usize;
        if d < min_deg {
            min_deg = d;
            min_v = v;
        }
        if d >= max_deg {
            max_deg = d;
            max_v = v;
        }
    }
    if min_deg <= 1 {
        alpha_search(adj, p & !(bit(min_v) | adj[min_v - 1]), size + 1, best);
        return;
    }
    alpha_search(adj, p & !(bit(max_v) | adj[max_v - 1]), size + 1, best);
    alpha_search(adj, p & !bit(max_v), size, best);
}

fn clique_cover_bound(adj: &[u64], p: u64) -> usize {
    let mut order: Vec<usize> = bits(p).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v - 1] & p).count_ones()));
    let mut cliques: Vec<u64> = Vec::new();
    for v in order {
        match cliques.iter_mut().find(|c| **c & !adj[v - 1] == 0) {
            Some(c) => *c |= bit(v),
            None => cliques.push(bit(v)),
        }
    }
    cliques.len()
}

pub(crate) fn independent_masks_of_size(adj: &[u64], candidates: u64, k: usize) -> Vec<u64> {
    fn go(adj: &[u64], allowed: u64, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if (allowed.count_ones() as usize) < k {
            return;
        }
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            go(adj, rest & !adj[v - 1], k - 1, acc | bit(v), out);
        }
    }
    let mut out = Vec::new();
    go(adj, candidates, k, 0, &mut out);
    out
}

/// `alpha(G[S])` for every subset `S`, indexed by mask. `n <= 26`.
pub(crate) fn alpha_table(adj: &[u64]) -> Vec<u8> {
    let n = adj.len();
    assert!(n <= 26, "alpha table limited to 26 vertices");
    let mut table = vec![0u8; 1usize << n];
    for s in 1..table.len() {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let without = table[rest];
        let with = 1 + table[rest & !(adj[v] as usize)];
        table[s] = without.max(with);
    }
    table
}

// -------------------------------------------------------------------------
// JSON interchange: {"n": 4, "edges": [[1, 2], [2, 3]]}
// -------------------------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.order(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, Self::Error> {
        let bad = |i: usize, reason: String| GraphError::BadGraphJson { field: format!("edges[{i}]"), reason };
        if j.n > MAX_ORDER {
            return Err(GraphError::BadGraphJson {
                field: "n".into(),
                reason: format!("order {} exceeds the limit of {MAX_ORDER}", j.n),
            });
        }
        let mut g = Graph::edgeless(j.n)?;
        for (i, &[u, v]) in j.edges.iter().enumerate() {
            if u == 0 || v == 0 || u > j.n || v > j.n {
                return Err(bad(i, format!("endpoint out of range 1..={}", j.n)));
            }
            if u >= v {
                return Err(bad(i, format!("endpoints must satisfy u < v, got [{u}, {v}]")));
            }
            if g.is_adjacent(u, v) {
                return Err(bad(i, format!("duplicate edge [{u}, {v}]")));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph json serializes")
    }

    /// Parses the JSON graph format; errors name the offending line/column
    /// or field.
    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let j: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::BadGraphJson {
            field: format!("line {} column {}", e.line(), e.column()),
            reason: e.to_string(),
        })?;
        Graph::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&s| bits(s).all(|v| g.adj[v - 1] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn cycle_six_is_two_regular() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!((1..=6).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn family_errors() {
        assert_eq!(Graph::cycle(2), Err(GraphError::CycleTooShort(2)));
        assert!(Graph::path(0).is_err());
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
        assert!(Graph::grid(&[]).is_err());
    }

    #[test]
    fn k2_square_is_four_cycle() {
        let g = Graph::cartesian_product(&Graph::complete(2).unwrap(), &Graph::complete(2).unwrap()).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!((1..=4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        assert_eq!(g.label(3), &[2, 1]);
    }

    #[test]
    fn complete_bipartite_counts() {
        let g = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(!g.is_adjacent(1, 2));
        assert!(g.is_adjacent(2, 3));
    }

    #[test]
    fn induced_subgraphs() {
        let c6 = Graph::cycle(6).unwrap();
        let p = c6.induced_subgraph(&VertexSet::from([1, 2, 3])).unwrap();
        assert_eq!(p.graph, Graph::path(3).unwrap());
        let e = c6.induced_subgraph(&VertexSet::from([1, 3, 5])).unwrap();
        assert_eq!(e.graph.edge_count(), 0);
        assert_eq!(e.parent, vec![1, 3, 5]);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.induced_subgraph(&VertexSet::from([1, 2, 3])).unwrap().graph, Graph::complete(3).unwrap());
        assert!(c6.induced_subgraph(&VertexSet::from([0, 7])).is_err());
        let all = c6.induced_subgraph(&c6.vertices()).unwrap();
        assert_eq!(all.graph, c6);
        assert_eq!(all.parent, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(Graph::cycle(6).unwrap().independence_number().unwrap(), 3);
        assert_eq!(Graph::cycle(7).unwrap().power(2).unwrap().independence_number().unwrap(), 2);
        assert_eq!(Graph::path(9).unwrap().power(2).unwrap().independence_number().unwrap(), 3);
        assert_eq!(Graph::edgeless(0).unwrap().independence_number().unwrap(), 0);
        assert_eq!(Graph::petersen().independence_number().unwrap(), 4);
        let big = Graph::path(25).unwrap();
        assert!(matches!(big.independence_number(), Err(GraphError::TooLarge { .. })));
        assert_eq!(big.independence_number_unguarded(), 13);
    }

    #[test]
    fn closed_forms_for_path_and_cycle_powers() {
        for n in 3..=14 {
            for r in 1..=4 {
                let c = Graph::cycle(n).unwrap().power(r).unwrap();
                let p = Graph::path(n).unwrap().power(r).unwrap();
                let expected = if n > r { n / (r + 1) } else { 1 };
                assert_eq!(c.independence_number().unwrap(), expected, "C_{n}^{r}");
                assert_eq!(p.independence_number().unwrap(), n.div_ceil(r + 1), "P_{n}^{r}");
            }
        }
    }

    #[test]
    fn alpha_table_matches_brute_force() {
        let g = Graph::petersen();
        let table = alpha_table(g.neighbor_masks());
        for s in [0u64, 0b1, 0b11, 0b1111100000, 0b1111111111, 0b1010101010] {
            let sub = g.induced_subgraph(&mask_to_set(s)).unwrap().graph;
            assert_eq!(table[s as usize] as usize, brute_alpha(&sub));
        }
    }

    #[test]
    fn girths() {
        assert_eq!(Graph::cycle(5).unwrap().girth(), Girth::Finite(5));
        assert_eq!(Graph::complete(4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(Graph::path(7).unwrap().girth(), Girth::Infinite);
        assert_eq!(Graph::petersen().girth(), Girth::Finite(5));
        assert_eq!(Graph::grid(&[3, 3]).unwrap().girth(), Girth::Finite(4));
        assert_eq!(Graph::edgeless(0).unwrap().girth(), Girth::Infinite);
    }

    #[test]
    fn powers() {
        let p = Graph::cycle(8).unwrap().power(3).unwrap();
        assert_eq!(p.order(), 8);
        assert_eq!(p.edge_count(), 24);
        assert!((1..=8).all(|v| p.degree(v) == 6));
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.power(1).unwrap(), c7);
        assert_eq!(Graph::path(4).unwrap().power(3).unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn chordal_elimination_orders() {
        let order = Graph::path(5).unwrap().power(2).unwrap().chordal_elimination().unwrap();
        assert_eq!(order.len(), 5);
        assert!(Graph::cycle(4).unwrap().chordal_elimination().is_none());
        let k3 = Graph::complete(3).unwrap().chordal_elimination().unwrap();
        assert_eq!(k3.len(), 3);
    }

    #[test]
    fn disjoint_union_blocks() {
        let p3 = Graph::path(3).unwrap();
        let u = Graph::disjoint_union(&[p3.clone(), p3.clone(), p3]).unwrap();
        assert_eq!(u.order(), 9);
        assert_eq!(u.edges(), vec![(1, 2), (2, 3), (4, 5), (5, 6), (7, 8), (8, 9)]);
        assert_eq!(u.label(5), &[2, 2]);
        assert_eq!(u.independence_number().unwrap(), 6);
    }

    #[test]
    fn json_round_trip_and_diagnostics() {
        let g = Graph::grid(&[2, 3]).unwrap();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(Graph::cycle(3).unwrap().to_json(), r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#);

        let err = Graph::from_json(r#"{"n": 3, "edges": [[1, 2], [2, 1]]}"#).unwrap_err();
        assert!(matches!(err, GraphError::BadGraphJson { ref field, .. } if field == "edges[1]"));
        let err = Graph::from_json(r#"{"n": 3, "edges": [[1, 2], [1, 2]]}"#).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
        let err = Graph::from_json("{\"n\": 3,\n \"edges\": [[1, 4]]}").unwrap_err();
        assert!(err.to_string().starts_with("edges[0]"));
        let err = Graph::from_json("{\"n\": 3,\n \"edgez\": []}").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }
}
