//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! one adjacency bit row per vertex, plus the vertex-set mask type shared by
//! every other module.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count. Keeps every adjacency row in one machine
/// word and every graph inside the single-byte graph6 size regime.
pub const MAX_VERTICES: usize = 62;

/// Errors raised by graph constructors and accessors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// Requested order exceeds [`MAX_VERTICES`].
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    /// A vertex index was outside `0..n`.
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    /// A vertex set contained bits at or above the graph order.
    #[error("vertex set {set} not contained in 0..{order}")]
    SetOutOfRange { set: VertexSet, order: usize },
    /// Self-loops are not representable.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// Adjacency rows disagree about an edge.
    #[error("adjacency not symmetric at ({u},{v})")]
    Asymmetric { u: usize, v: usize },
    /// A family constructor was given an invalid size.
    #[error("invalid size {size} for family {family}")]
    InvalidSize { family: &'static str, size: usize },
}

/// A set of vertices of some graph, as a bit mask over indices `0..62`.
///
/// Plain value type: cheap to copy, ordered by `(|S|, mask)` nowhere — the
/// derived `Ord` is the raw mask order, which callers use as the "lexicographic
/// by mask" tie-break.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Members in ascending order as a `Vec`.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            debug_assert!(v < 64);
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite simple undirected graph with vertices `0..n`, `n <= 62`.
///
/// Immutable after construction; adjacency is symmetric and irreflexive and
/// rows never carry bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices (including `n = 0`).
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows, validating symmetry,
    /// irreflexivity and row width.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = VertexSet::full(n).0;
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::SetOutOfRange {
                    set: VertexSet(row),
                    order: n,
                });
            }
            if (row >> v) & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if (rows[u] >> v) & 1 != (rows[v] >> u) & 1 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        (self.rows[u] >> v) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.rows[v])
    }

    /// Checked open neighborhood `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.neighbors(v))
    }

    /// Anti-neighborhood `M(v) = V \ (N(v) ∪ {v})`.
    pub fn anti_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.vertex_set().minus(self.neighbors(v)).without(v))
    }

    /// Vertices outside `s` with a neighbor inside `s`.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter() {
            acc |= self.rows[v];
        }
        VertexSet(acc & !s.0)
    }

    /// `true` when `v ∉ s` is adjacent to every vertex of `s`.
    pub fn complete_to(&self, v: usize, s: VertexSet) -> bool {
        self.rows[v] & s.0 == s.0
    }

    /// `true` when `v ∉ s` has no neighbor in `s`.
    pub fn anticomplete_to(&self, v: usize, s: VertexSet) -> bool {
        self.rows[v] & s.0 == 0
    }

    /// `true` when every `a ∈ s` / `b ∈ t` pair is adjacent (`s`, `t` disjoint).
    pub fn sets_complete(&self, s: VertexSet, t: VertexSet) -> bool {
        s.iter().all(|v| self.complete_to(v, t))
    }

    /// `true` when no edge joins `s` and `t`.
    pub fn sets_anticomplete(&self, s: VertexSet, t: VertexSet) -> bool {
        s.iter().all(|v| self.anticomplete_to(v, t))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset_of(self.neighbors(v)))
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).intersect(s).is_empty())
    }

    /// Complement graph: `u ~ v` iff `u != v` and not `u ~ v` here.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_set().0;
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & mask & !(1 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `s`, relabeled to `0..|s|` preserving the
    /// ascending order of the original indices.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(GraphError::SetOutOfRange {
                set: s,
                order: self.n,
            });
        }
        let verts = s.to_vec();
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// The graph obtained by deleting one vertex.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_set().without(v))
            .expect("vertex set is valid by construction")
    }

    /// Cartesian product: vertices are pairs `(a, u)` with `a` here and `u`
    /// in `other`, laid out as index `a * other.order() + u`. Pairs are
    /// adjacent when equal in one coordinate and adjacent in the other.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n * other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n)?;
        let idx = |a: usize, u: usize| a * other.n + u;
        for a in 0..self.n {
            for u in 0..other.n {
                for v in (u + 1)..other.n {
                    if other.has_edge(u, v) {
                        let (p, q) = (idx(a, u), idx(a, v));
                        g.rows[p] |= 1 << q;
                        g.rows[q] |= 1 << p;
                    }
                }
            }
        }
        for u in 0..other.n {
            for a in 0..self.n {
                for b in (a + 1)..self.n {
                    if self.has_edge(a, b) {
                        let (p, q) = (idx(a, u), idx(b, u));
                        g.rows[p] |= 1 << q;
                        g.rows[q] |= 1 << p;
                    }
                }
            }
        }
        Ok(g)
    }

    /// Clique blowup: vertex `v` is replaced by a clique of `sizes[v]`
    /// vertices, and cliques of adjacent originals are completely joined.
    /// Bags occupy consecutive index blocks in original vertex order.
    pub fn clique_blowup(&self, sizes: &[usize]) -> Result<Graph, GraphError> {
        if sizes.len() != self.n {
            return Err(GraphError::InvalidSize {
                family: "blowup-sizes",
                size: sizes.len(),
            });
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::InvalidSize {
                family: "blowup-bag",
                size: v,
            });
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut offsets = Vec::with_capacity(self.n);
        let mut acc = 0;
        for &s in sizes {
            offsets.push(acc);
            acc += s;
        }
        let bag = |v: usize| offsets[v]..offsets[v] + sizes[v];
        let mut edges = Vec::new();
        for v in 0..self.n {
            let b = bag(v).collect::<Vec<_>>();
            for i in 0..b.len() {
                for j in (i + 1)..b.len() {
                    edges.push((b[i], b[j]));
                }
            }
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    for p in bag(u) {
                        for q in bag(v) {
                            edges.push((p, q));
                        }
                    }
                }
            }
        }
        Graph::from_edges(total, &edges)
    }

    /// Breadth-first hop count from `u` to `v`; `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        let mut seen = VertexSet::singleton(u);
        let mut dist = 0;
        loop {
            dist += 1;
            let next = self.neighbors_of_set(seen);
            if next.contains(v) {
                return Ok(Some(dist));
            }
            if next.is_empty() {
                return Ok(None);
            }
            seen = seen.union(next);
        }
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        self.component_count_within(self.vertex_set())
    }

    /// Connected components of the subgraph induced by `s`, counted without
    /// materializing the subgraph.
    pub fn component_count_within(&self, s: VertexSet) -> usize {
        let mut remaining = s;
        let mut count = 0;
        while let Some(start) = remaining.min_elem() {
            count += 1;
            let mut comp = VertexSet::singleton(start);
            loop {
                let grow = self.neighbors_of_set(comp).intersect(remaining).minus(comp);
                if grow.is_empty() {
                    break;
                }
                comp = comp.union(grow);
            }
            remaining = remaining.minus(comp);
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_count() == 1
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Extends the graph by one vertex adjacent to exactly `attach`.
    /// Used by the enumerator and the synthetic-shape builders.
    pub fn with_added_vertex(&self, attach: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        if !attach.is_subset_of(self.vertex_set()) {
            return Err(GraphError::SetOutOfRange {
                set: attach,
                order: self.n,
            });
        }
        let mut rows = self.rows.clone();
        rows.push(attach.0);
        for v in attach.iter() {
            rows[v] |= 1 << self.n;
        }
        Ok(Graph { n, rows })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// All subsets of `{0..n}` in (size, lexicographic-members) order: the empty
/// set first, then singletons `{0}, {1}, ..`, then pairs `{0,1}, {0,2}, ..`.
///
/// This is the canonical candidate order used by the partition and
/// homogeneous-set searches, so "first answer" is well defined everywhere.
pub fn subsets_in_size_lex_order(n: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n <= MAX_VERTICES);
    (0..=n).flat_map(move |k| k_subsets_lex(n, k))
}

/// All `k`-subsets of `{0..n}` in lexicographic order of their sorted
/// member lists.
pub fn k_subsets_lex(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut current: Option<Vec<usize>> = if k <= n {
        Some((0..k).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let cur = current.as_mut()?;
        let result: VertexSet = cur.iter().copied().collect();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if cur[i] < n - (k - i) {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(result)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{make_family, Family};

    #[test]
    fn neighborhood_partition() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        let n = c5.neighborhood(0).unwrap();
        let m = c5.anti_neighborhood(0).unwrap();
        assert_eq!(n, [1, 4].into_iter().collect());
        assert_eq!(m, [2, 3].into_iter().collect());
        assert_eq!(
            n.union(m).with(0),
            c5.vertex_set(),
            "v, N(v), M(v) must partition V"
        );

        let k4 = make_family(Family::Complete, 4).unwrap();
        assert!(k4.anti_neighborhood(2).unwrap().is_empty());

        let e4 = make_family(Family::Edgeless, 4).unwrap();
        assert!(e4.neighborhood(1).unwrap().is_empty());
        assert_eq!(e4.anti_neighborhood(1).unwrap().len(), 3);
    }

    #[test]
    fn neighborhood_rejects_out_of_range() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        assert!(matches!(
            c5.neighborhood(5),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 3), (2, 4), (4, 5)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let k3 = make_family(Family::Complete, 3).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);
    }

    #[test]
    fn induced_examples() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        assert_eq!(c5.induced(c5.vertex_set()).unwrap(), c5);
        let p3 = c5.induced([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(p3, make_family(Family::Path, 3).unwrap());
        assert_eq!(c5.induced(VertexSet::EMPTY).unwrap().order(), 0);
        assert!(c5.induced(VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn cartesian_product_layout_and_counts() {
        let k2 = make_family(Family::Complete, 2).unwrap();
        let k3 = make_family(Family::Complete, 3).unwrap();
        let p = k2.cartesian_product(&k3).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.edge_count(), 9); // 3*1 + 2*3

        let c4 = make_family(Family::Cycle, 4).unwrap();
        let sq = k2.cartesian_product(&k2).unwrap();
        // K2 x K2 is a 4-cycle: same order, size, and degree sequence, and
        // the explicit relabeling (0,1,3,2) matches C4's consecutive layout.
        assert_eq!(sq.order(), c4.order());
        assert_eq!(sq.edge_count(), c4.edge_count());
        assert!(sq.has_edge(0, 1) && sq.has_edge(1, 3) && sq.has_edge(3, 2) && sq.has_edge(2, 0));

        let k1 = make_family(Family::Complete, 1).unwrap();
        let g = Graph::from_edges(5, &[(0, 2), (1, 4), (3, 4)]).unwrap();
        assert_eq!(k1.cartesian_product(&g).unwrap(), g);
    }

    #[test]
    fn cartesian_product_overflow() {
        let k8 = make_family(Family::Complete, 8).unwrap();
        assert!(matches!(
            k8.cartesian_product(&k8),
            Err(GraphError::TooManyVertices(64))
        ));
    }

    #[test]
    fn blowup_identity_and_errors() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        assert_eq!(c5.clique_blowup(&[1, 1, 1, 1, 1]).unwrap(), c5);

        let k1 = make_family(Family::Complete, 1).unwrap();
        let k5 = make_family(Family::Complete, 5).unwrap();
        assert_eq!(k1.clique_blowup(&[5]).unwrap(), k5);

        assert!(c5.clique_blowup(&[1, 0, 1, 1, 1]).is_err());
        assert!(c5.clique_blowup(&[60, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn distances() {
        let p4 = make_family(Family::Path, 4).unwrap();
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Some(0));
        let e2 = make_family(Family::Edgeless, 2).unwrap();
        assert_eq!(e2.distance(0, 1).unwrap(), None);
        assert!(p4.distance(0, 4).is_err());
    }

    #[test]
    fn component_counting() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.component_count(), 3);
        assert!(!g.is_connected());
        assert_eq!(Graph::empty(0).unwrap().component_count(), 0);
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn from_rows_validation() {
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(vec![0b01, 0b10]).is_err()); // self-loops
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err()); // asymmetric
        assert!(Graph::from_rows(vec![0b100, 0b000]).is_err()); // out of range
    }

    #[test]
    fn subset_order_is_size_then_lex() {
        let sets: Vec<Vec<usize>> = subsets_in_size_lex_order(3)
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(
            sets,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2],
            ]
        );
        assert_eq!(subsets_in_size_lex_order(6).count(), 64);
    }
}
