//! Exact graph invariants: clique numbers (weighted and not), chromatic
//! number, perfection via odd-hole/odd-antihole search, local perfection,
//! homogeneous sets, clique cutsets, and the structure trichotomy for
//! connected (bull, diamond)-free graphs.

use thiserror::Error;

use crate::canon::canonical_form;
use crate::classes::{find_forbidden, ClassSpec, ClassViolation, Selector};
use crate::detect::{find_hole, find_odd_antihole, Parity, Witness};
use crate::graph::{subsets_in_size_lex_order, Graph, VertexSet};
use crate::patterns::{make_family, Family, PatternName};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("weight function has {got} entries for a graph of order {want}")]
    WeightLengthMismatch { got: usize, want: usize },
    #[error("weights must be positive integers")]
    NonPositiveWeight,
}

/// Positive integer vertex weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFn(Vec<u32>);

impl WeightFn {
    pub fn new(weights: Vec<u32>) -> Result<WeightFn, InvariantError> {
        if weights.iter().any(|&w| w == 0) {
            return Err(InvariantError::NonPositiveWeight);
        }
        Ok(WeightFn(weights))
    }

    pub fn unit(n: usize) -> WeightFn {
        WeightFn(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn sum_over(&self, s: VertexSet) -> u64 {
        s.iter().map(|v| u64::from(self.0[v])).sum()
    }

    /// Weights of the subgraph induced by `s`, in ascending vertex order
    /// (matching [`Graph::induced`]'s relabeling).
    pub fn restrict(&self, s: VertexSet) -> WeightFn {
        WeightFn(s.iter().map(|v| self.0[v]).collect())
    }

    fn check(&self, g: &Graph) -> Result<(), InvariantError> {
        if self.0.len() == g.order() {
            Ok(())
        } else {
            Err(InvariantError::WeightLengthMismatch {
                got: self.0.len(),
                want: g.order(),
            })
        }
    }
}

/// A proper coloring with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    /// Wraps explicit per-vertex colors (1-based).
    pub fn from_colors(colors: Vec<u32>) -> Coloring {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors_used(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c >= 1)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// Vertices of one color, 1-based.
    pub fn class(&self, color: u32) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }
}

/// A maximum clique, deterministic under ascending search order.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    grow_clique(g, VertexSet::EMPTY, g.vertex_set(), &mut best);
    best
}

fn grow_clique(g: &Graph, current: VertexSet, candidates: VertexSet, best: &mut VertexSet) {
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    let mut rest = candidates;
    for v in candidates.iter() {
        rest = rest.without(v);
        if current.len() + 1 + rest.intersect(g.neighbors(v)).len() <= best.len() {
            continue;
        }
        grow_clique(g, current.with(v), rest.intersect(g.neighbors(v)), best);
    }
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum-weight clique and its weight.
pub fn max_weight_clique(g: &Graph, w: &WeightFn) -> Result<(VertexSet, u64), InvariantError> {
    w.check(g)?;
    let mut best = (VertexSet::EMPTY, 0u64);
    grow_weight_clique(g, w, VertexSet::EMPTY, 0, g.vertex_set(), &mut best);
    Ok(best)
}

fn grow_weight_clique(
    g: &Graph,
    w: &WeightFn,
    current: VertexSet,
    current_weight: u64,
    candidates: VertexSet,
    best: &mut (VertexSet, u64),
) {
    if current_weight > best.1 {
        *best = (current, current_weight);
    }
    if current_weight + w.sum_over(candidates) <= best.1 {
        return;
    }
    let mut rest = candidates;
    for v in candidates.iter() {
        rest = rest.without(v);
        grow_weight_clique(
            g,
            w,
            current.with(v),
            current_weight + u64::from(w.get(v)),
            rest.intersect(g.neighbors(v)),
            best,
        );
    }
}

pub fn weighted_clique_number(g: &Graph, w: &WeightFn) -> Result<u64, InvariantError> {
    Ok(max_weight_clique(g, w)?.1)
}

/// All maximal cliques (Bron-Kerbosch with pivoting), in search order.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.order() == 0 {
        return out;
    }
    bron_kerbosch(g, VertexSet::EMPTY, g.vertex_set(), VertexSet::EMPTY, &mut out);
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&v| g.neighbors(v).intersect(p).len())
        .expect("p or x nonempty");
    for v in p.minus(g.neighbors(pivot)).iter() {
        bron_kerbosch(
            g,
            r.with(v),
            p.intersect(g.neighbors(v)),
            x.intersect(g.neighbors(v)),
            out,
        );
        p = p.without(v);
        x = x.with(v);
    }
}

/// Maximum clique weight within `sub`, given the precomputed maximal
/// cliques of the ambient graph. Every clique inside `sub` extends to a
/// maximal clique `K`, and `K ∩ sub` is again a clique in `sub`.
pub fn clique_weight_within(maximal: &[VertexSet], w: &WeightFn, sub: VertexSet) -> u64 {
    maximal
        .iter()
        .map(|&k| w.sum_over(k.intersect(sub)))
        .max()
        .unwrap_or(0)
}

/// Tries to properly color `g` with colors `1..=k`. Vertices are colored in
/// index order and each new vertex may open at most one fresh color, so the
/// output is deterministic.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring { colors: Vec::new() });
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![0u32; n];
    if color_from(g, k as u32, 0, 0, &mut colors) {
        Some(Coloring { colors })
    } else {
        None
    }
}

fn color_from(g: &Graph, k: u32, v: usize, max_used: u32, colors: &mut [u32]) -> bool {
    if v == g.order() {
        return true;
    }
    let cap = k.min(max_used + 1);
    'colors: for c in 1..=cap {
        for u in g.neighbors(v).iter() {
            if u < v && colors[u] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        if color_from(g, k, v + 1, max_used.max(c), colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// Exact chromatic number, searched upward from the clique lower bound.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let mut k = clique_number(g).max(1);
    loop {
        if is_k_colorable(g, k).is_some() {
            return k;
        }
        k += 1;
    }
}

/// Returns an odd hole or odd antihole when `g` is imperfect, `None` when
/// perfect. Any 5-antihole is a 5-hole, so the antihole pass starts at 7.
pub fn perfection_witness(g: &Graph) -> Option<Witness> {
    find_hole(g, Parity::Odd, 5).or_else(|| find_odd_antihole(g, 7))
}

pub fn is_perfect(g: &Graph) -> bool {
    perfection_witness(g).is_none()
}

/// First vertex whose open neighborhood induces an imperfect graph.
pub fn locally_imperfect_vertex(g: &Graph) -> Option<usize> {
    g.vertices().find(|&v| {
        let nbhd = g
            .induced(g.neighbors(v))
            .expect("neighborhood is a valid vertex set");
        !is_perfect(&nbhd)
    })
}

pub fn is_locally_perfect(g: &Graph) -> bool {
    locally_imperfect_vertex(g).is_none()
}

/// First homogeneous set in (size, lexicographic) candidate order: a set
/// `S` with `1 < |S| < n` such that every outside vertex is complete or
/// anticomplete to `S`.
pub fn find_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    subsets_in_size_lex_order(n).find(|&s| 1 < s.len() && s.len() < n && is_homogeneous(g, s))
}

pub fn is_homogeneous(g: &Graph, s: VertexSet) -> bool {
    if s.len() <= 1 || s.len() >= g.order() {
        return false;
    }
    g.vertex_set()
        .minus(s)
        .iter()
        .all(|v| g.complete_to(v, s) || g.anticomplete_to(v, s))
}

/// First clique cutset in (size, lexicographic) candidate order: a nonempty
/// clique whose removal leaves more components.
pub fn find_clique_cutset(g: &Graph) -> Option<VertexSet> {
    let base = g.component_count();
    subsets_in_size_lex_order(g.order()).find(|&k| {
        !k.is_empty()
            && k.len() < g.order()
            && g.is_clique(k)
            && g.component_count_within(g.vertex_set().minus(k)) > base
    })
}

/// Which branch of the structure trichotomy a connected (bull, diamond)-free
/// graph falls into. `NoBranch` cannot occur for valid inputs; campaign code
/// treats it as a counterexample report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiamondBranch {
    TriangleFree,
    LowDegree,
    Product,
    NoBranch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrichotomyError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not (bull, diamond)-free: {} found", .0.selector)]
    NotInClass(ClassViolation),
}

/// Classifies a connected (bull, diamond)-free graph: triangle-free, or
/// minimum degree below the clique number, or isomorphic to the prism
/// `K_2 x K_w` (checked by canonical form).
pub fn diamond_trichotomy(g: &Graph) -> Result<DiamondBranch, TrichotomyError> {
    if !g.is_connected() {
        return Err(TrichotomyError::NotConnected);
    }
    let spec = ClassSpec::new(vec![
        Selector::Pattern(PatternName::Bull),
        Selector::Pattern(PatternName::Diamond),
    ])
    .expect("two selectors");
    if let Some(violation) = find_forbidden(g, &spec) {
        return Err(TrichotomyError::NotInClass(violation));
    }

    if !has_triangle(g) {
        return Ok(DiamondBranch::TriangleFree);
    }
    let omega = clique_number(g);
    if g.min_degree() + 1 <= omega {
        return Ok(DiamondBranch::LowDegree);
    }
    if g.order() == 2 * omega {
        let prism = make_family(Family::Complete, 2)
            .expect("K2")
            .cartesian_product(&make_family(Family::Complete, omega).expect("K_w fits"))
            .expect("product of order 2w fits");
        if canonical_form(g) == canonical_form(&prism) {
            return Ok(DiamondBranch::Product);
        }
    }
    Ok(DiamondBranch::NoBranch)
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| !g.neighbors(u).intersect(g.neighbors(v)).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{make_named, mycielskian};

    fn c5() -> Graph {
        make_family(Family::Cycle, 5).unwrap()
    }

    fn prism(m: usize) -> Graph {
        make_family(Family::Complete, 2)
            .unwrap()
            .cartesian_product(&make_family(Family::Complete, m).unwrap())
            .unwrap()
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&c5()), 2);
        assert_eq!(clique_number(&prism(3)), 3);
        let k2 = make_family(Family::Complete, 2).unwrap();
        let w = WeightFn::new(vec![2, 3]).unwrap();
        assert_eq!(weighted_clique_number(&k2, &w).unwrap(), 5);
        assert!(weighted_clique_number(&k2, &WeightFn::unit(3)).is_err());
        assert!(WeightFn::new(vec![1, 0]).is_err());
    }

    #[test]
    fn unit_weights_reduce_to_cardinality() {
        for g in crate::canon::enumerate_nonisomorphic(5).unwrap() {
            let unit = WeightFn::unit(5);
            assert_eq!(
                weighted_clique_number(&g, &unit).unwrap(),
                clique_number(&g) as u64
            );
        }
    }

    #[test]
    fn blowup_clique_number_matches_brute_force() {
        // Spec-level oracle: direct search over all subsets of the blowup.
        let brute = |g: &Graph| -> usize {
            subsets_in_size_lex_order(g.order())
                .filter(|&s| g.is_clique(s))
                .map(|s| s.len())
                .max()
                .unwrap_or(0)
        };
        let c5 = c5();
        let blown = c5.clique_blowup(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(brute(&blown), 3);
        assert_eq!(clique_number(&blown), 3);

        for g in crate::canon::enumerate_nonisomorphic(4).unwrap() {
            for sizes in [[2, 1, 1, 1], [2, 2, 1, 1], [1, 2, 1, 2], [2, 2, 2, 2]] {
                let b = g.clique_blowup(&sizes).unwrap();
                assert_eq!(clique_number(&b), brute(&b), "{g:?} {sizes:?}");
            }
        }
    }

    #[test]
    fn maximal_cliques_cover_clique_weight() {
        let g = prism(3);
        let cliques = maximal_cliques(&g);
        assert_eq!(cliques.len(), 2 + 3); // two triangle fibers, three K2 rungs
        let w = WeightFn::unit(6);
        assert_eq!(clique_weight_within(&cliques, &w, g.vertex_set()), 3);
        assert_eq!(
            clique_weight_within(&cliques, &w, [0, 3].into_iter().collect()),
            2
        );
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&c5()), 3);
        assert_eq!(chromatic_number(&prism(3)), 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(chromatic_number(&make_family(Family::Edgeless, 4).unwrap()), 1);
        let coloring = is_k_colorable(&c5(), 3).unwrap();
        assert!(coloring.is_proper(&c5()));
        assert!(is_k_colorable(&c5(), 2).is_none());
    }

    #[test]
    fn grotzsch_needs_four_colors() {
        // Independent derivation: the Grotzsch graph is the Mycielskian of
        // C5, and a brute-force scan over all 3^11 assignments (cut down by
        // propriety checks) finds no proper 3-coloring.
        let g = make_named(PatternName::Grotzsch);
        assert_eq!(g, mycielskian(&c5()));
        assert!(brute_force_colorable(&g, 4));
        assert!(!brute_force_colorable(&g, 3));
        assert_eq!(chromatic_number(&g), 4);
    }

    /// Test-only oracle: enumerate all k^n assignments.
    fn brute_force_colorable(g: &Graph, k: usize) -> bool {
        let n = g.order();
        let mut assignment = vec![0usize; n];
        loop {
            let proper = g
                .edges()
                .iter()
                .all(|&(u, v)| assignment[u] != assignment[v]);
            if proper {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                assignment[i] += 1;
                if assignment[i] < k {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn perfection_examples() {
        assert!(!is_perfect(&c5()));
        let w = perfection_witness(&c5()).unwrap();
        assert!(w.verify(&c5()));

        for m in 1..=5 {
            assert!(is_perfect(&prism(m)), "K2 x K{m}");
        }

        // Bipartite graphs are perfect.
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(is_perfect(&k33));
    }

    #[test]
    fn local_perfection_examples() {
        assert!(is_locally_perfect(&c5())); // triangle-free
        assert!(is_locally_perfect(&make_family(Family::Complete, 5).unwrap()));

        // The 5-wheel's hub sees the whole C5; rim vertices only see paths.
        let wheel = c5().with_added_vertex(VertexSet::full(5)).unwrap();
        assert_eq!(locally_imperfect_vertex(&wheel), Some(5));
    }

    #[test]
    fn complement_c7_is_locally_perfect() {
        // Each neighborhood of the 7-antihole induces the complement of P4,
        // which is again a P4 and perfect. (The nontrivial direction: local
        // perfection does not require global perfection.)
        let co_c7 = make_family(Family::Cycle, 7).unwrap().complement();
        assert!(!is_perfect(&co_c7));
        assert!(is_locally_perfect(&co_c7));
    }

    #[test]
    fn homogeneous_set_examples() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        assert_eq!(find_homogeneous_set(&c4), Some([0, 2].into_iter().collect()));

        let p4 = make_family(Family::Path, 4).unwrap();
        assert_eq!(find_homogeneous_set(&p4), None);

        let blown = c5().clique_blowup(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(
            find_homogeneous_set(&blown),
            Some([0, 1].into_iter().collect())
        );
    }

    #[test]
    fn homogeneous_matches_all_subsets_oracle() {
        for g in crate::canon::Enumerator::default().enumerate_up_to(5).unwrap() {
            let all: Vec<VertexSet> = subsets_in_size_lex_order(g.order())
                .filter(|&s| is_homogeneous(&g, s))
                .collect();
            assert_eq!(find_homogeneous_set(&g), all.first().copied(), "{g:?}");
        }
    }

    #[test]
    fn clique_cutset_examples() {
        let p3 = make_family(Family::Path, 3).unwrap();
        assert_eq!(find_clique_cutset(&p3), Some(VertexSet::singleton(1)));
        assert_eq!(find_clique_cutset(&c5()), None);
        assert_eq!(find_clique_cutset(&make_family(Family::Complete, 4).unwrap()), None);
    }

    #[test]
    fn trichotomy_examples() {
        assert_eq!(diamond_trichotomy(&c5()).unwrap(), DiamondBranch::TriangleFree);
        let hammer = make_named(PatternName::Hammer);
        assert_eq!(diamond_trichotomy(&hammer).unwrap(), DiamondBranch::LowDegree);
        assert_eq!(diamond_trichotomy(&prism(4)).unwrap(), DiamondBranch::Product);

        let bull = make_named(PatternName::Bull);
        assert!(matches!(
            diamond_trichotomy(&bull),
            Err(TrichotomyError::NotInClass(_))
        ));
        let e2 = make_family(Family::Edgeless, 2).unwrap();
        assert!(matches!(
            diamond_trichotomy(&e2),
            Err(TrichotomyError::NotConnected)
        ));
    }
}
