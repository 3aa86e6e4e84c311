//! Good partitions, perfect divisibility, bounded perfect weight
//! divisibility, MNPD/MNWD certification, and the constructive coloring
//! realizing the binomial chi bound.
//!
//! The two hereditary predicates recurse as
//! `P(G) = self-check(G) and for all v: P(G - v)`
//! and are memoized by canonical form in a [`Divisibility`] context. The
//! memo tables are concurrent maps with idempotent inserts, so one context
//! can be shared across parallel campaign workers.

use dashmap::DashMap;

use crate::canon::{canonical_form, CanonicalKey};
use crate::graph::{subsets_in_size_lex_order, Graph, VertexSet};
use crate::invariants::{
    clique_number, clique_weight_within, has_triangle, is_k_colorable, is_perfect,
    max_weight_clique, maximal_cliques, Coloring, InvariantError, WeightFn,
};
use thiserror::Error;

/// Weight-vector enumeration budget: `wmax^n` may not exceed this.
pub const WEIGHT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisibilityError {
    #[error("good partitions are undefined on the empty graph")]
    EmptyGraph,
    #[error("weight bound {wmax} on {order} vertices exceeds the search budget")]
    BudgetExceeded { wmax: u32, order: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// An ordered split `(A, B)` of a graph's vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Partition {
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet) -> Partition {
        debug_assert!(a.intersect(b).is_empty());
        debug_assert_eq!(a.union(b), g.vertex_set());
        Partition { a, b }
    }
}

/// Outcome of a divisibility check. When `divisible` is false the recorded
/// failing subgraph (with its weights, for the bounded weighted check)
/// admits no good partition; both are re-checkable standalone. Weights are
/// indexed by the failing subgraph's own relabeled vertices (ascending
/// original order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityVerdict {
    pub divisible: bool,
    pub failing_subgraph: Option<VertexSet>,
    pub failing_weights: Option<WeightFn>,
}

impl DivisibilityVerdict {
    fn divisible() -> DivisibilityVerdict {
        DivisibilityVerdict {
            divisible: true,
            failing_subgraph: None,
            failing_weights: None,
        }
    }
}

/// Searches for a good partition of `g` under weights `w`: a split `(A, B)`
/// with `G[A]` perfect and `omega_w(G[B]) < omega_w(G)`. Candidate `B` sets
/// are tried smallest-first (by size, then lexicographic), so the returned
/// partition is deterministic and `B`-minimal in that order.
pub fn find_good_partition(g: &Graph, w: &WeightFn) -> Result<Option<Partition>, DivisibilityError> {
    let n = g.order();
    if n == 0 {
        return Err(DivisibilityError::EmptyGraph);
    }
    let total = max_weight_clique(g, w)?.1;
    let cliques = maximal_cliques(g);
    for b in subsets_in_size_lex_order(n) {
        if clique_weight_within(&cliques, w, b) >= total {
            continue;
        }
        let a = g.vertex_set().minus(b);
        if is_perfect(&g.induced(a).expect("subset of V")) {
            return Ok(Some(Partition::new(g, a, b)));
        }
    }
    Ok(None)
}

/// Re-checks a claimed good partition from scratch.
pub fn verify_good_partition(
    g: &Graph,
    w: &WeightFn,
    p: &Partition,
) -> Result<bool, DivisibilityError> {
    if p.a.intersect(p.b) != VertexSet::EMPTY || p.a.union(p.b) != g.vertex_set() {
        return Ok(false);
    }
    let total = max_weight_clique(g, w)?.1;
    let b_weight = max_weight_clique(&g.induced(p.b).expect("subset"), &w.restrict(p.b))?.1;
    Ok(b_weight < total && is_perfect(&g.induced(p.a).expect("subset")))
}

/// The constructive split behind the triangle-free equivalence: given a
/// triangle-free 3-colorable graph, two color classes plus all isolated
/// vertices form the perfect side, the remaining non-isolated class the
/// strictly lighter side. The same split works for every weight function;
/// `w` is taken so the guarantee can be debug-checked for the caller's
/// weights.
pub fn partition_from_3coloring(h: &Graph, w: &WeightFn) -> Result<Partition, DivisibilityError> {
    if h.order() == 0 {
        return Err(DivisibilityError::EmptyGraph);
    }
    if has_triangle(h) {
        return Err(DivisibilityError::PreconditionViolated("graph has a triangle"));
    }
    let Some(coloring) = is_k_colorable(h, 3) else {
        return Err(DivisibilityError::PreconditionViolated("graph is not 3-colorable"));
    };
    let isolated: VertexSet = h.vertices().filter(|&v| h.degree(v) == 0).collect();
    let b = coloring.class(3).minus(isolated);
    let a = h.vertex_set().minus(b);
    let p = Partition::new(h, a, b);
    debug_assert!(verify_good_partition(h, w, &p)?);
    Ok(p)
}

/// Memoized divisibility context. Cheap to create; share one across a
/// whole campaign so isomorphic subproblems are solved once.
#[derive(Debug, Default)]
pub struct Divisibility {
    pd: DashMap<CanonicalKey, bool>,
    bwd: DashMap<(CanonicalKey, u32), bool>,
}

impl Divisibility {
    pub fn new() -> Divisibility {
        Divisibility::default()
    }

    /// Perfect divisibility: every nonempty induced subgraph has a good
    /// partition. On failure the verdict records a minimal failing induced
    /// subgraph (one all of whose proper induced subgraphs are divisible).
    pub fn is_perfectly_divisible(&self, g: &Graph) -> DivisibilityVerdict {
        if self.pd(g) {
            return DivisibilityVerdict::divisible();
        }
        let mut s = g.vertex_set();
        loop {
            let shrink = s
                .iter()
                .find(|&v| !self.pd(&g.induced(s.without(v)).expect("subset")));
            match shrink {
                Some(v) => s = s.without(v),
                None => break,
            }
        }
        DivisibilityVerdict {
            divisible: false,
            failing_subgraph: Some(s),
            failing_weights: None,
        }
    }

    fn pd(&self, g: &Graph) -> bool {
        if g.order() == 0 {
            return true;
        }
        let key = canonical_form(g);
        if let Some(hit) = self.pd.get(&key) {
            return *hit;
        }
        let unit = WeightFn::unit(g.order());
        let result = find_good_partition(g, &unit)
            .expect("nonempty graph")
            .is_some()
            && g.vertices().all(|v| self.pd(&g.delete_vertex(v)));
        self.pd.insert(key, result);
        result
    }

    /// Bounded probe of perfect weight divisibility: checks every weight
    /// function with values in `1..=wmax` on every nonempty induced
    /// subgraph. A `true` verdict is a semi-verdict (necessary condition
    /// sampled up to `wmax`); `false` is definitive and carries a
    /// re-checkable witness.
    pub fn is_perfectly_weight_divisible_bounded(
        &self,
        g: &Graph,
        wmax: u32,
    ) -> Result<DivisibilityVerdict, DivisibilityError> {
        check_budget(g.order(), wmax)?;
        if self.bwd(g, wmax) {
            return Ok(DivisibilityVerdict::divisible());
        }
        let mut s = g.vertex_set();
        loop {
            let shrink = s
                .iter()
                .find(|&v| !self.bwd(&g.induced(s.without(v)).expect("subset"), wmax));
            match shrink {
                Some(v) => s = s.without(v),
                None => break,
            }
        }
        let sub = g.induced(s).expect("subset");
        let weights = first_failing_weights(&sub, wmax)
            .expect("descent stopped at a graph with a failing weight vector");
        Ok(DivisibilityVerdict {
            divisible: false,
            failing_subgraph: Some(s),
            failing_weights: Some(weights),
        })
    }

    fn bwd(&self, g: &Graph, wmax: u32) -> bool {
        if g.order() == 0 {
            return true;
        }
        let key = (canonical_form(g), wmax);
        if let Some(hit) = self.bwd.get(&key) {
            return *hit;
        }
        let result = first_failing_weights(g, wmax).is_none()
            && g.vertices().all(|v| self.bwd(&g.delete_vertex(v), wmax));
        self.bwd.insert(key, result);
        result
    }

    /// MNPD: not divisible, but every one-vertex-deleted subgraph is.
    /// Heredity of divisibility makes single deletions sufficient.
    pub fn certify_mnpd(&self, g: &Graph) -> bool {
        !self.pd(g) && g.vertices().all(|v| self.pd(&g.delete_vertex(v)))
    }

    /// Bounded MNWD certificate; inherits the semi-verdict caveat on the
    /// minimality side (deleted subgraphs are only probed up to `wmax`).
    pub fn certify_mnwd_bounded(&self, g: &Graph, wmax: u32) -> Result<bool, DivisibilityError> {
        check_budget(g.order(), wmax)?;
        Ok(!self.bwd(g, wmax) && g.vertices().all(|v| self.bwd(&g.delete_vertex(v), wmax)))
    }

    /// Colors a perfectly divisible graph with at most `C(omega+1, 2)`
    /// colors: split off a good partition, color the perfect side exactly,
    /// recurse on the rest with a fresh palette.
    pub fn coloring_via_divisibility(&self, g: &Graph) -> Result<Coloring, DivisibilityError> {
        if !self.pd(g) {
            return Err(DivisibilityError::PreconditionViolated(
                "graph is not perfectly divisible",
            ));
        }
        let mut colors = vec![0u32; g.order()];
        let mut remaining = g.vertex_set();
        let mut base = 0u32;
        while !remaining.is_empty() {
            let verts = remaining.to_vec();
            let h = g.induced(remaining).expect("subset");
            let p = find_good_partition(&h, &WeightFn::unit(h.order()))
                .expect("nonempty")
                .expect("divisible graphs always split");
            let ha = h.induced(p.a).expect("subset");
            let k = clique_number(&ha);
            let coloring = is_k_colorable(&ha, k).expect("perfect part colors with omega colors");
            for (i, v_in_h) in p.a.iter().enumerate() {
                colors[verts[v_in_h]] = base + coloring.color(i);
            }
            base += k as u32;
            remaining = p.b.iter().map(|v_in_h| verts[v_in_h]).collect();
        }
        let coloring = Coloring::from_colors(colors);
        debug_assert!(coloring.is_proper(g));
        Ok(coloring)
    }
}

pub(crate) fn check_budget(order: usize, wmax: u32) -> Result<(), DivisibilityError> {
    if wmax == 0 {
        return Err(DivisibilityError::PreconditionViolated("wmax must be at least 1"));
    }
    let vectors = (wmax as f64).powi(order as i32);
    if vectors > WEIGHT_BUDGET as f64 {
        return Err(DivisibilityError::BudgetExceeded { wmax, order });
    }
    Ok(())
}

/// First weight vector (odometer order over `{1..=wmax}^n`, vertex 0
/// slowest) under which `g` itself has no good weighted partition.
fn first_failing_weights(g: &Graph, wmax: u32) -> Option<WeightFn> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let cliques = maximal_cliques(g);
    let mut weights = vec![1u32; n];
    loop {
        let w = WeightFn::new(weights.clone()).expect("positive by construction");
        if !has_good_weighted_partition(g, &cliques, &w) {
            return Some(w);
        }
        // odometer increment, last index fastest
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if weights[i] < wmax {
                weights[i] += 1;
                break;
            }
            weights[i] = 1;
        }
    }
}

fn has_good_weighted_partition(g: &Graph, cliques: &[VertexSet], w: &WeightFn) -> bool {
    let total = clique_weight_within(cliques, w, g.vertex_set());
    for b in subsets_in_size_lex_order(g.order()) {
        if clique_weight_within(cliques, w, b) >= total {
            continue;
        }
        let a = g.vertex_set().minus(b);
        if is_perfect(&g.induced(a).expect("subset")) {
            return true;
        }
    }
    false
}
