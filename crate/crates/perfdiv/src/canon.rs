//! Canonical forms by minimum adjacency encoding, and exhaustive
//! enumeration of one representative per isomorphism class.
//!
//! The canonical form of a graph is the lexicographically smallest
//! column-major upper-triangle bit string over all vertex orderings that
//! sort degrees ascending. The degree restriction is an isomorphism
//! invariant, so equal keys still hold exactly for isomorphic graphs; it
//! prunes the permutation search to products of degree-class orbits, and a
//! prefix bound cuts most of the rest.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::graph6::encode_graph6;
use crate::par::run_jobs;

/// Default vertex cap for enumeration requests.
pub const DEFAULT_ENUM_CAP: usize = 8;

/// Above this the class counts (12 005 168 at n = 10) outgrow desk scale.
pub const MAX_ENUM_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("order {order} exceeds the configured enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("enumeration cap {0} exceeds the supported maximum {MAX_ENUM_CAP}")]
    CapTooLarge(usize),
}

/// Canonical byte key: the graph6 line of the canonically relabeled graph.
/// Keys are equal exactly when the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Computes the canonical key of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalKey {
    CanonicalKey(encode_graph6(&canonical_graph(g)))
}

/// Returns the canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let n = g.order();
    if n <= 1 {
        return g.clone();
    }

    // Positions must be filled in ascending-degree order; `slots[k]` is the
    // degree required at position k.
    let mut slots: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    slots.sort_unstable();

    let mut search = CanonSearch {
        g,
        slots,
        order: Vec::with_capacity(n),
        columns: Vec::with_capacity(n - 1),
        best: None,
        best_order: Vec::new(),
    };
    search.descend(VertexSet::EMPTY);

    let order = search.best_order;
    debug_assert_eq!(order.len(), n);
    let mut relabel = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        relabel[v] = pos;
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        edges.push((relabel[u], relabel[v]));
    }
    Graph::from_edges(n, &edges).expect("relabeling preserves validity")
}

struct CanonSearch<'a> {
    g: &'a Graph,
    slots: Vec<usize>,
    order: Vec<usize>,
    /// `columns[k-1]` holds the adjacency bits between position `k` and
    /// positions `0..k`, with position 0 in the most significant bit, so
    /// numeric comparison of equal-width columns is bit-string comparison.
    columns: Vec<u64>,
    best: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, placed: VertexSet) {
        let k = self.order.len();
        let n = self.g.order();
        if k == n {
            let improved = match &self.best {
                None => true,
                Some(best) => self.columns < *best,
            };
            if improved {
                self.best = Some(self.columns.clone());
                self.best_order = self.order.clone();
            }
            return;
        }

        // Candidates for position k: unplaced vertices of the required
        // degree, tried in ascending column-value order so the first dive
        // is already near-minimal.
        let mut candidates: Vec<(u64, usize)> = Vec::new();
        for v in 0..n {
            if placed.contains(v) || self.g.degree(v) != self.slots[k] {
                continue;
            }
            let mut col = 0u64;
            for &u in &self.order {
                col = (col << 1) | u64::from(self.g.has_edge(u, v));
            }
            candidates.push((col, v));
        }
        candidates.sort_unstable();

        for (col, v) in candidates {
            self.columns.push(col);
            if self.prefix_beats_best() {
                self.order.push(v);
                self.descend(placed.with(v));
                self.order.pop();
            }
            self.columns.pop();
        }
    }

    /// `true` when the current column prefix can still reach a key no worse
    /// than the best found.
    fn prefix_beats_best(&self) -> bool {
        match &self.best {
            None => true,
            Some(best) => self.columns[..] <= best[..self.columns.len()],
        }
    }
}

/// Enumerator for pairwise non-isomorphic graphs, one canonical
/// representative per class, produced level by level.
#[derive(Debug, Clone)]
pub struct Enumerator {
    cap: usize,
    jobs: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: DEFAULT_ENUM_CAP,
            jobs: 1,
        }
    }
}

impl Enumerator {
    pub fn with_cap(cap: usize) -> Result<Enumerator, CanonError> {
        if cap > MAX_ENUM_CAP {
            return Err(CanonError::CapTooLarge(cap));
        }
        Ok(Enumerator { cap, jobs: 1 })
    }

    /// Worker count for the level extension; 1 = sequential, 0 = all cores.
    pub fn jobs(mut self, jobs: usize) -> Enumerator {
        self.jobs = jobs;
        self
    }

    /// All graphs on exactly `n` vertices, one per isomorphism class, in
    /// ascending canonical-key order.
    pub fn enumerate(&self, n: usize) -> Result<Vec<Graph>, CanonError> {
        if n > self.cap {
            return Err(CanonError::CapExceeded { order: n, cap: self.cap });
        }
        let mut level = vec![Graph::empty(0).unwrap()];
        for _ in 0..n {
            level = self.extend_level(&level);
        }
        Ok(level)
    }

    /// All graphs with `1..=n` vertices, smaller orders first.
    pub fn enumerate_up_to(&self, n: usize) -> Result<Vec<Graph>, CanonError> {
        if n > self.cap {
            return Err(CanonError::CapExceeded { order: n, cap: self.cap });
        }
        let mut out = Vec::new();
        let mut level = vec![Graph::empty(0).unwrap()];
        for _ in 0..n {
            level = self.extend_level(&level);
            out.extend(level.iter().cloned());
        }
        Ok(out)
    }

    /// Extends every representative by one vertex over all attachment
    /// masks, then dedups by canonical key. Every class on k+1 vertices
    /// arises from deleting a vertex of one of its members, so extending
    /// all k-vertex representatives covers every class.
    fn extend_level(&self, level: &[Graph]) -> Vec<Graph> {
        let extended: Vec<Vec<(CanonicalKey, Graph)>> = run_jobs(level, self.jobs, |g| {
            let k = g.order();
            let mut out = Vec::with_capacity(1 << k);
            for mask in 0..(1u64 << k) {
                let h = g
                    .with_added_vertex(VertexSet(mask))
                    .expect("extension stays under the vertex cap");
                let canon = canonical_graph(&h);
                let key = CanonicalKey(encode_graph6(&canon));
                out.push((key, canon));
            }
            out
        });
        let mut all: Vec<(CanonicalKey, Graph)> = extended.into_iter().flatten().collect();
        all.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        all.dedup_by(|a, b| a.0 == b.0);
        all.into_iter().map(|(_, g)| g).collect()
    }
}

/// Convenience wrapper with the default cap.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>, CanonError> {
    Enumerator::default().enumerate(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{make_family, make_named, Family, PatternName};

    #[test]
    fn canonical_form_respects_known_isomorphisms() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&c5.complement()));

        let k2 = make_family(Family::Complete, 2).unwrap();
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert_eq!(
            canonical_form(&k2.cartesian_product(&k2).unwrap()),
            canonical_form(&c4)
        );

        let bull = make_named(PatternName::Bull);
        let relabeled = Graph::from_edges(5, &[(4, 2), (2, 0), (0, 4), (4, 3), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&bull), canonical_form(&relabeled));
    }

    #[test]
    fn canonical_form_separates_same_degree_sequence() {
        // C6 and 2K3 are both 2-regular on six vertices.
        let c6 = make_family(Family::Cycle, 6).unwrap();
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_k3));
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_nonisomorphic(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn enumeration_is_deterministic_and_canonical() {
        let a = enumerate_nonisomorphic(5).unwrap();
        let b = Enumerator::default().jobs(4).enumerate(5).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
        for g in &a {
            assert_eq!(*g, canonical_graph(g), "representatives are canonical");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_nonisomorphic(9),
            Err(CanonError::CapExceeded { order: 9, cap: 8 })
        ));
        assert!(matches!(
            Enumerator::with_cap(11),
            Err(CanonError::CapTooLarge(11))
        ));
        assert!(Enumerator::with_cap(9).is_ok());
    }

    #[test]
    fn relabeling_leaves_key_unchanged() {
        use rand::rngs::StdRng;
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};

        let mut rng = StdRng::seed_from_u64(0x5EED);
        for _ in 0..200 {
            let n = rng.random_range(2..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let permuted = Graph::from_edges(
                n,
                &edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(canonical_form(&g), canonical_form(&permuted));
        }
    }
}
