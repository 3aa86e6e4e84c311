//! Induced-subgraph detection: generic pattern containment by backtracking
//! over injective maps, hole/antihole search by induced-path extension, and
//! the odd-torch configuration search.
//!
//! All searches run in a fixed deterministic order (ascending vertex
//! indices at every choice point), so the first witness found is the
//! lexicographically least under that order and reruns are reproducible.

use std::fmt;

use crate::graph::{Graph, VertexSet};

/// Cycle-parity filter for hole searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    Any,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Odd => len % 2 == 1,
            Parity::Even => len % 2 == 0,
            Parity::Any => true,
        }
    }
}

/// What a witness embeds, with enough data to re-verify it standalone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessKind {
    /// An induced copy of the stored pattern, vertex `i` of the pattern at
    /// `vertices[i]`.
    Induced(Graph),
    /// An induced cycle in listed order.
    Hole { len: usize },
    /// Vertices whose complement-induced order is an odd hole.
    OddAntihole { len: usize },
    /// `vertices = [c_0 .. c_{k-1}, y, x]`: an induced k-cycle, the
    /// attachment vertex `y`, and the pendant `x`.
    OddTorch { hole_len: usize },
}

/// A concrete embedding certifying a detection result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Re-checks the embedding against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let w = &self.vertices;
        if w.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut distinct = w.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != w.len() {
            return false;
        }
        match &self.kind {
            WitnessKind::Induced(pattern) => {
                if w.len() != pattern.order() {
                    return false;
                }
                for i in 0..w.len() {
                    for j in (i + 1)..w.len() {
                        if pattern.has_edge(i, j) != g.has_edge(w[i], w[j]) {
                            return false;
                        }
                    }
                }
                true
            }
            WitnessKind::Hole { len } => *len == w.len() && is_induced_cycle(g, w),
            WitnessKind::OddAntihole { len } => {
                *len == w.len() && w.len() % 2 == 1 && is_induced_cycle(&g.complement(), w)
            }
            WitnessKind::OddTorch { hole_len } => {
                let k = *hole_len;
                if w.len() != k + 2 || k % 2 == 0 || k < 5 {
                    return false;
                }
                let (cycle, rest) = w.split_at(k);
                let (y, x) = (rest[0], rest[1]);
                let cycle_set: VertexSet = cycle.iter().copied().collect();
                let attach = g.neighbors(y).intersect(cycle_set);
                is_induced_cycle(g, cycle)
                    && !attach.is_empty()
                    && g.is_stable(attach)
                    && g.has_edge(x, y)
                    && g.anticomplete_to(x, cycle_set)
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            WitnessKind::Induced(p) => format!("induced({}v)", p.order()),
            WitnessKind::Hole { len } => format!("hole({len})"),
            WitnessKind::OddAntihole { len } => format!("antihole({len})"),
            WitnessKind::OddTorch { hole_len } => format!("torch({hole_len})"),
        };
        write!(f, "{kind}@{:?}", self.vertices)
    }
}

fn is_induced_cycle(g: &Graph, w: &[usize]) -> bool {
    let k = w.len();
    if k < 3 {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(w[i], w[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Searches for an induced copy of `pattern` in `g`. Returns the
/// lexicographically least embedding tuple, or `None`.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Witness> {
    let h = pattern.order();
    if h > g.order() {
        return None;
    }
    if h == 0 {
        return Some(Witness {
            kind: WitnessKind::Induced(pattern.clone()),
            vertices: Vec::new(),
        });
    }
    let mut assignment = Vec::with_capacity(h);
    if embed(g, pattern, &mut assignment, VertexSet::EMPTY) {
        Some(Witness {
            kind: WitnessKind::Induced(pattern.clone()),
            vertices: assignment,
        })
    } else {
        None
    }
}

fn embed(g: &Graph, pattern: &Graph, assignment: &mut Vec<usize>, used: VertexSet) -> bool {
    let i = assignment.len();
    if i == pattern.order() {
        return true;
    }
    let needed = pattern.degree(i);
    'next: for cand in g.vertices() {
        if used.contains(cand) || g.degree(cand) < needed {
            continue;
        }
        for (j, &img) in assignment.iter().enumerate() {
            if pattern.has_edge(i, j) != g.has_edge(cand, img) {
                continue 'next;
            }
        }
        assignment.push(cand);
        if embed(g, pattern, assignment, used.with(cand)) {
            return true;
        }
        assignment.pop();
    }
    false
}

/// Finds an induced cycle of length at least `max(4, min_len)` whose length
/// matches `parity`, or `None`. Exhaustive.
pub fn find_hole(g: &Graph, parity: Parity, min_len: usize) -> Option<Witness> {
    let mut found = None;
    visit_holes(g, parity, min_len, |cycle| {
        found = Some(Witness {
            kind: WitnessKind::Hole { len: cycle.len() },
            vertices: cycle.to_vec(),
        });
        true
    });
    found
}

/// Finds an odd antihole of length at least `max(5, min_len)`: a vertex set
/// whose complement-induced order is an odd hole.
pub fn find_odd_antihole(g: &Graph, min_len: usize) -> Option<Witness> {
    let co = g.complement();
    let mut found = None;
    visit_holes(&co, Parity::Odd, min_len.max(5), |cycle| {
        found = Some(Witness {
            kind: WitnessKind::OddAntihole { len: cycle.len() },
            vertices: cycle.to_vec(),
        });
        true
    });
    found
}

/// Collects every induced cycle matching the filter, in search order. Each
/// hole appears once, rooted at its minimum vertex.
pub fn find_all_holes(g: &Graph, parity: Parity, min_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    visit_holes(g, parity, min_len, |cycle| {
        out.push(cycle.to_vec());
        false
    });
    out
}

/// Searches for an induced odd torch: an induced odd hole `C`, a vertex `y`
/// whose attachment `N_C(y)` is nonempty and stable, and a pendant `x ~ y`
/// anticomplete to `C`. Holes are visited shortest first.
pub fn find_odd_torch(g: &Graph) -> Option<Witness> {
    let n = g.order();
    if n < 7 {
        return None;
    }
    let mut found = None;
    visit_holes(g, Parity::Odd, 5, |cycle| {
        if cycle.len() + 2 > n {
            return false;
        }
        let cycle_set: VertexSet = cycle.iter().copied().collect();
        for y in g.vertices() {
            if cycle_set.contains(y) {
                continue;
            }
            let attach = g.neighbors(y).intersect(cycle_set);
            if attach.is_empty() || !g.is_stable(attach) {
                continue;
            }
            for x in g.neighbors(y).minus(cycle_set).iter() {
                if x != y && g.anticomplete_to(x, cycle_set) {
                    let mut vertices = cycle.to_vec();
                    vertices.push(y);
                    vertices.push(x);
                    found = Some(Witness {
                        kind: WitnessKind::OddTorch {
                            hole_len: cycle.len(),
                        },
                        vertices,
                    });
                    return true;
                }
            }
        }
        false
    });
    found
}

/// Visits induced cycles of length >= `max(4, min_len)` matching `parity`,
/// as vertex sequences rooted at their minimum vertex with second element
/// smaller than last (each hole exactly once). Stops when `f` returns true.
///
/// Cycles are grown as induced paths: an extension vertex may touch only
/// the path head, and a closure vertex exactly the head and the root.
fn visit_holes(g: &Graph, parity: Parity, min_len: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let min_len = min_len.max(4);
    let n = g.order();
    if n < min_len {
        return;
    }
    let mut path = Vec::with_capacity(n);
    for root in 0..n {
        path.clear();
        path.push(root);
        if extend_path(g, &mut path, VertexSet::singleton(root), parity, min_len, &mut f) {
            return;
        }
    }
}

fn extend_path(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: VertexSet,
    parity: Parity,
    min_len: usize,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let root = path[0];
    let head = *path.last().unwrap();
    for cand in (root + 1)..g.order() {
        if on_path.contains(cand) || !g.has_edge(cand, head) {
            continue;
        }
        let touches = g.neighbors(cand).intersect(on_path);
        if touches == VertexSet::singleton(head) {
            path.push(cand);
            if extend_path(g, path, on_path.with(cand), parity, min_len, f) {
                return true;
            }
            path.pop();
        } else if touches == VertexSet::singleton(head).with(root) {
            let len = path.len() + 1;
            if len >= min_len && parity.admits(len) && path[1] < cand {
                path.push(cand);
                let stop = f(path);
                path.pop();
                if stop {
                    return true;
                }
            }
        }
    }
    false
}
