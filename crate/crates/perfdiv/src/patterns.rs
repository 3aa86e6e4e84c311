//! Constructors for the fixed small patterns and parametric families used
//! throughout the toolkit, with their documented canonical labelings.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

/// Errors from pattern construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name: {0:?}")]
    UnknownName(String),
    #[error("cycle length {0} must be odd and at least 5")]
    BadTorchHole(usize),
    #[error("torch attachment must be nonempty")]
    EmptyAttach,
    #[error("torch attachment {0} is not a stable set of the hole")]
    AttachNotStable(VertexSet),
    #[error("torch attachment {set} not contained in 0..{len}")]
    AttachOutOfRange { set: VertexSet, len: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The fixed small patterns in the catalog.
///
/// Labelings (all 0-indexed):
/// - `Bull`: triangle 0-1-2 with pendants 3~0 and 4~1.
/// - `House`: complement of the path 0-1-2-3-4.
/// - `Hammer`: triangle 0-1-2 with the path 2-3-4 hung off vertex 2.
/// - `Diamond`: K4 on 0..4 minus the edge 0-3.
/// - `Fork`: claw center 0 with leaves 1, 2, 4 and the edge 4-3
///   (the claw edge 0-3 subdivided once).
/// - `E`: path 0-1-2-3-4 plus vertex 5 adjacent to the middle vertex 2.
/// - `Claw`: K_{1,3} with center 0.
/// - `Triangle`: K3.
/// - `Paw`: triangle 0-1-2 with pendant 3~0.
/// - `Grotzsch`: the Mycielskian of C5; cycle 0..5, shadow vertices 5..10
///   with `5+i ~ {i-1, i+1}`, apex 10 adjacent to all shadows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternName {
    Bull,
    House,
    Hammer,
    Diamond,
    Fork,
    E,
    Claw,
    Triangle,
    Paw,
    Grotzsch,
}

impl PatternName {
    pub const ALL: [PatternName; 10] = [
        PatternName::Bull,
        PatternName::House,
        PatternName::Hammer,
        PatternName::Diamond,
        PatternName::Fork,
        PatternName::E,
        PatternName::Claw,
        PatternName::Triangle,
        PatternName::Paw,
        PatternName::Grotzsch,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PatternName::Bull => "bull",
            PatternName::House => "house",
            PatternName::Hammer => "hammer",
            PatternName::Diamond => "diamond",
            PatternName::Fork => "fork",
            PatternName::E => "e",
            PatternName::Claw => "claw",
            PatternName::Triangle => "triangle",
            PatternName::Paw => "paw",
            PatternName::Grotzsch => "grotzsch",
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PatternName {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bull" => Ok(PatternName::Bull),
            "house" => Ok(PatternName::House),
            "hammer" => Ok(PatternName::Hammer),
            "diamond" => Ok(PatternName::Diamond),
            "fork" | "chair" => Ok(PatternName::Fork),
            "e" => Ok(PatternName::E),
            "claw" | "k1_3" | "k13" => Ok(PatternName::Claw),
            "triangle" | "k3" | "c3" => Ok(PatternName::Triangle),
            "paw" => Ok(PatternName::Paw),
            "grotzsch" | "groetzsch" => Ok(PatternName::Grotzsch),
            other => Err(PatternError::UnknownName(other.to_string())),
        }
    }
}

/// Builds a catalog pattern under its documented labeling.
pub fn make_named(name: PatternName) -> Graph {
    let edges: &[(usize, usize)] = match name {
        PatternName::Bull => &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)],
        PatternName::House => {
            return make_family(Family::Path, 5)
                .expect("P5 is constructible")
                .complement();
        }
        PatternName::Hammer => &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)],
        PatternName::Diamond => &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
        PatternName::Fork => &[(0, 1), (0, 2), (0, 4), (4, 3)],
        PatternName::E => &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
        PatternName::Claw => &[(0, 1), (0, 2), (0, 3)],
        PatternName::Triangle => &[(0, 1), (1, 2), (2, 0)],
        PatternName::Paw => &[(0, 1), (1, 2), (2, 0), (0, 3)],
        PatternName::Grotzsch => {
            return mycielskian(&make_family(Family::Cycle, 5).expect("C5 is constructible"));
        }
    };
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(n, edges).expect("catalog patterns are valid")
}

/// Parses a pattern name and builds it.
pub fn make_named_str(name: &str) -> Result<Graph, PatternError> {
    Ok(make_named(name.parse::<PatternName>()?))
}

/// Parametric graph families with consecutive-index adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Edgeless,
}

/// The standard family member on `k` vertices: `P_k`, `C_k`, `K_k`, or
/// `kK_1`. Paths and cycles run along consecutive indices.
pub fn make_family(kind: Family, k: usize) -> Result<Graph, PatternError> {
    let family = match kind {
        Family::Path => "path",
        Family::Cycle => "cycle",
        Family::Complete => "complete",
        Family::Edgeless => "edgeless",
    };
    if k == 0 || (kind == Family::Cycle && k < 3) {
        return Err(PatternError::Graph(GraphError::InvalidSize {
            family,
            size: k,
        }));
    }
    let mut edges = Vec::new();
    match kind {
        Family::Path => edges.extend((0..k - 1).map(|i| (i, i + 1))),
        Family::Cycle => {
            edges.extend((0..k - 1).map(|i| (i, i + 1)));
            edges.push((k - 1, 0));
        }
        Family::Complete => {
            for u in 0..k {
                for v in (u + 1)..k {
                    edges.push((u, v));
                }
            }
        }
        Family::Edgeless => {}
    }
    Ok(Graph::from_edges(k, &edges)?)
}

/// Builds an odd torch: the cycle `C_k` on vertices `0..k`, a vertex `y = k`
/// adjacent to exactly the (nonempty, stable) attachment set, and a pendant
/// vertex `x = k+1` adjacent only to `y`.
pub fn make_odd_torch(k: usize, attach: VertexSet) -> Result<Graph, PatternError> {
    if k < 5 || k % 2 == 0 {
        return Err(PatternError::BadTorchHole(k));
    }
    if attach.is_empty() {
        return Err(PatternError::EmptyAttach);
    }
    if !attach.is_subset_of(VertexSet::full(k)) {
        return Err(PatternError::AttachOutOfRange { set: attach, len: k });
    }
    let cycle = make_family(Family::Cycle, k)?;
    if !cycle.is_stable(attach) {
        return Err(PatternError::AttachNotStable(attach));
    }
    let with_y = cycle.with_added_vertex(attach)?;
    Ok(with_y.with_added_vertex(VertexSet::singleton(k))?)
}

/// Mycielski construction: each vertex `i` of `g` gains a shadow `n+i`
/// adjacent to `N(i)`, and an apex `2n` is joined to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = g.edges();
    for i in 0..n {
        for j in g.neighbors(i).iter() {
            edges.push((n + i, j));
        }
        edges.push((2 * n, n + i));
    }
    Graph::from_edges(2 * n + 1, &edges).expect("mycielskian of a valid small graph fits")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_counts() {
        let cases = [
            (PatternName::Bull, 5, 5),
            (PatternName::House, 5, 6),
            (PatternName::Hammer, 5, 5),
            (PatternName::Diamond, 4, 5),
            (PatternName::Fork, 5, 4),
            (PatternName::E, 6, 5),
            (PatternName::Claw, 4, 3),
            (PatternName::Triangle, 3, 3),
            (PatternName::Paw, 4, 4),
            (PatternName::Grotzsch, 11, 20),
        ];
        for (name, n, m) in cases {
            let g = make_named(name);
            assert_eq!(g.order(), n, "{name}: vertex count");
            assert_eq!(g.edge_count(), m, "{name}: edge count");
        }
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(
            make_named_str("zebra"),
            Err(PatternError::UnknownName(_))
        ));
    }

    #[test]
    fn family_examples() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        assert_eq!(c5.order(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let p1 = make_family(Family::Path, 1).unwrap();
        assert_eq!((p1.order(), p1.edge_count()), (1, 0));

        let e4 = make_family(Family::Edgeless, 4).unwrap();
        assert_eq!((e4.order(), e4.edge_count()), (4, 0));

        assert!(make_family(Family::Cycle, 2).is_err());
        assert!(make_family(Family::Path, 0).is_err());
    }

    #[test]
    fn house_is_p5_complement() {
        let house = make_named(PatternName::House);
        let p5 = make_family(Family::Path, 5).unwrap();
        assert_eq!(house, p5.complement());
    }

    #[test]
    fn torch_construction() {
        let t = make_odd_torch(5, VertexSet::singleton(0)).unwrap();
        assert_eq!((t.order(), t.edge_count()), (7, 7));

        let t2 = make_odd_torch(5, [0, 2].into_iter().collect()).unwrap();
        assert_eq!((t2.order(), t2.edge_count()), (7, 8));

        assert!(matches!(
            make_odd_torch(5, [0, 1].into_iter().collect()),
            Err(PatternError::AttachNotStable(_))
        ));
        assert!(matches!(
            make_odd_torch(5, VertexSet::EMPTY),
            Err(PatternError::EmptyAttach)
        ));
        assert!(matches!(make_odd_torch(4, VertexSet::singleton(0)), Err(PatternError::BadTorchHole(4))));
        assert!(matches!(make_odd_torch(3, VertexSet::singleton(0)), Err(PatternError::BadTorchHole(3))));
    }

    #[test]
    fn torch_shape_properties() {
        // Exactly one degree-1 vertex (the pendant) and no triangle,
        // for every odd hole length and stable attachment that fits.
        for k in [5usize, 7] {
            for attach in crate::graph::subsets_in_size_lex_order(k) {
                if attach.is_empty() {
                    continue;
                }
                let Ok(t) = make_odd_torch(k, attach) else {
                    continue;
                };
                let pendant_count = t.vertices().filter(|&v| t.degree(v) == 1).count();
                assert_eq!(pendant_count, 1, "torch({k},{attach}) pendant count");
                for u in t.vertices() {
                    for v in (u + 1)..t.order() {
                        for w in (v + 1)..t.order() {
                            assert!(
                                !(t.has_edge(u, v) && t.has_edge(v, w) && t.has_edge(u, w)),
                                "torch({k},{attach}) has a triangle"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grotzsch_degrees() {
        let g = make_named(PatternName::Grotzsch);
        let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5]);
    }
}
