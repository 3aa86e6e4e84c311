//! Structural machinery around holes: attachment analysis, the
//! neighborhood classification of a fixed 5-hole into the X/Y/Z/W families,
//! claim-by-claim verifiers for that configuration, the 8-vertex quotient
//! graph used in its analysis, and the explicit red/blue partition that the
//! configuration admits.
//!
//! Paper-style hole indices run 1..=5 and wrap modulo 5; the helpers on
//! [`HoleDecomposition`] accept those indices directly so the claim checks
//! read like their statements.

use thiserror::Error;

use crate::classes::{find_forbidden, ClassSpec, Selector};
use crate::detect::find_odd_antihole;
use crate::divisibility::{check_budget, Partition};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::invariants::{
    chromatic_number, clique_weight_within, find_homogeneous_set, has_triangle, is_homogeneous,
    is_perfect, locally_imperfect_vertex, maximal_cliques, WeightFn,
};
use crate::patterns::PatternName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex sequence is not an induced cycle of length >= 4")]
    NotAHole,
    #[error("vertex sequence is not an induced 5-cycle")]
    NotA5Hole,
    #[error("vertex {0} lies on the hole")]
    VertexOnHole(usize),
    #[error("anchor {0} is not in the decomposition's M")]
    AnchorNotInM(usize),
    #[error("decomposition does not match the required shape: {side}")]
    ShapeMismatch { side: &'static str },
    #[error("partition re-verification failed: {check}")]
    RecheckFailed { check: &'static str },
    #[error("weight bound {wmax} on {order} vertices exceeds the search budget")]
    BudgetExceeded { wmax: u32, order: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Result of one concrete structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    /// The statement fails on the listed vertices.
    Violated { vertices: Vec<usize>, detail: String },
    /// A hypothesis of the statement fails, so the check does not apply;
    /// `vertices` carry the hypothesis failure witness when there is one.
    NotApplicable { reason: String, vertices: Vec<usize> },
}

impl CheckStatus {
    pub fn holds(&self) -> bool {
        matches!(self, CheckStatus::Holds)
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, CheckStatus::Violated { .. })
    }
}

/// One named check in a ledger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimEntry {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// Per-claim statuses for one `(graph, decomposition, anchor)` instance.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClaimLedger {
    pub entries: Vec<ClaimEntry>,
}

impl ClaimLedger {
    fn push(&mut self, name: &'static str, status: CheckStatus) {
        self.entries.push(ClaimEntry { name, status });
    }

    /// No entry is violated (not-applicable entries do not count against).
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| !e.status.is_violated())
    }

    pub fn violations(&self) -> impl Iterator<Item = &ClaimEntry> {
        self.entries.iter().filter(|e| e.status.is_violated())
    }

    pub fn get(&self, name: &str) -> Option<&ClaimEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Classification of all vertices relative to a fixed ordered 5-hole
/// `v1..v5`: `x[i]` holds the vertices attached exactly at `v_{i+1}`, and
/// so on per the family shapes; `m` has no hole neighbor, `other` collects
/// attachments matching no family shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleDecomposition {
    pub hole: [usize; 5],
    pub x: [VertexSet; 5],
    pub y: [VertexSet; 5],
    pub z: [VertexSet; 5],
    pub w: [VertexSet; 5],
    pub m: VertexSet,
    pub other: VertexSet,
}

impl HoleDecomposition {
    /// Hole vertex by paper index (1-based, wraps mod 5).
    pub fn v(&self, i: isize) -> usize {
        self.hole[slot(i)]
    }

    pub fn x_at(&self, i: isize) -> VertexSet {
        self.x[slot(i)]
    }

    pub fn y_at(&self, i: isize) -> VertexSet {
        self.y[slot(i)]
    }

    pub fn z_at(&self, i: isize) -> VertexSet {
        self.z[slot(i)]
    }

    pub fn w_at(&self, i: isize) -> VertexSet {
        self.w[slot(i)]
    }

    pub fn hole_set(&self) -> VertexSet {
        self.hole.iter().copied().collect()
    }

    pub fn x_all(&self) -> VertexSet {
        self.x.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s))
    }

    pub fn y_all(&self) -> VertexSet {
        self.y.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s))
    }

    pub fn z_all(&self) -> VertexSet {
        self.z.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s))
    }

    pub fn w_all(&self) -> VertexSet {
        self.w.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s))
    }
}

/// Paper index (1-based, any integer) to array slot.
fn slot(i: isize) -> usize {
    (i - 1).rem_euclid(5) as usize
}

/// All 2k orientations (rotations and reflections) of an ordered hole.
/// Classification depends on the labeling, so campaign code tries each.
pub fn hole_orientations(hole: &[usize]) -> Vec<Vec<usize>> {
    let k = hole.len();
    let mut out = Vec::with_capacity(2 * k);
    for start in 0..k {
        let rotation: Vec<usize> = (0..k).map(|i| hole[(start + i) % k]).collect();
        let mut reflection = rotation.clone();
        reflection[1..].reverse();
        out.push(rotation);
        out.push(reflection);
    }
    out
}

fn is_induced_cycle_in_order(g: &Graph, verts: &[usize]) -> bool {
    let k = verts.len();
    if k < 4 || verts.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let set: VertexSet = verts.iter().copied().collect();
    if set.len() != k {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(verts[i], verts[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// `N(u) ∩ V(C)` for a vertex off the hole, plus whether that attachment is
/// a stable set.
pub fn attachment_on_hole(
    g: &Graph,
    hole: &[usize],
    u: usize,
) -> Result<(VertexSet, bool), StructureError> {
    if !is_induced_cycle_in_order(g, hole) {
        return Err(StructureError::NotAHole);
    }
    if u >= g.order() {
        return Err(StructureError::Graph(GraphError::VertexOutOfRange {
            vertex: u,
            order: g.order(),
        }));
    }
    let hole_set: VertexSet = hole.iter().copied().collect();
    if hole_set.contains(u) {
        return Err(StructureError::VertexOnHole(u));
    }
    let attach = g.neighbors(u).intersect(hole_set);
    Ok((attach, g.is_stable(attach)))
}

/// Checks the stable-attachment statement on an odd hole: for every edge
/// `uv` with `u ∈ N(V(C))` and `v ∈ M(V(C))`, the attachment `N_C(u)` is a
/// stable set. Hypotheses (odd hole, locally perfect, bull-free) are
/// checked first and reported as not-applicable when they fail.
pub fn verify_stable_attachment(g: &Graph, hole: &[usize]) -> CheckStatus {
    if let Some(status) = odd_hole_lemma_hypotheses(g, hole) {
        return status;
    }
    let hole_set: VertexSet = hole.iter().copied().collect();
    let fringe = g.neighbors_of_set(hole_set);
    let far = g.vertex_set().minus(hole_set).minus(fringe);
    for u in fringe.iter() {
        if g.neighbors(u).intersect(far).is_empty() {
            continue;
        }
        let attach = g.neighbors(u).intersect(hole_set);
        if !g.is_stable(attach) {
            let v = g.neighbors(u).intersect(far).min_elem().expect("nonempty");
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("edge ({u},{v}) into M(V(C)) but N_C({u}) = {attach} is not stable"),
            };
        }
    }
    CheckStatus::Holds
}

/// Checks the equal-attachment statement on an odd hole: for all `x ~ y`
/// with `{x, y} ⊆ N(z) ∩ N(V(C))`, `z ∈ M(V(C))`, and both `x` and `y`
/// having at least two hole neighbors, `N_C(x) = N_C(y)`.
pub fn verify_common_attachment(g: &Graph, hole: &[usize]) -> CheckStatus {
    if let Some(status) = odd_hole_lemma_hypotheses(g, hole) {
        return status;
    }
    let hole_set: VertexSet = hole.iter().copied().collect();
    let fringe = g.neighbors_of_set(hole_set);
    let far = g.vertex_set().minus(hole_set).minus(fringe);
    for z in far.iter() {
        let near = g.neighbors(z).intersect(fringe);
        for x in near.iter() {
            let ax = g.neighbors(x).intersect(hole_set);
            if ax.len() < 2 {
                continue;
            }
            for y in near.intersect(g.neighbors(x)).iter() {
                let ay = g.neighbors(y).intersect(hole_set);
                if ay.len() < 2 || ax == ay {
                    continue;
                }
                return CheckStatus::Violated {
                    vertices: vec![x, y, z],
                    detail: format!("N_C({x}) = {ax} but N_C({y}) = {ay}"),
                };
            }
        }
    }
    CheckStatus::Holds
}

fn odd_hole_lemma_hypotheses(g: &Graph, hole: &[usize]) -> Option<CheckStatus> {
    if !is_induced_cycle_in_order(g, hole) || hole.len() % 2 == 0 || hole.len() < 5 {
        return Some(CheckStatus::NotApplicable {
            reason: "C is not an odd hole".into(),
            vertices: hole.to_vec(),
        });
    }
    hypothesis_battery(g, false)
}

/// Shared hypothesis battery: bull-freeness and local perfection, plus
/// 4K1-freeness when `with_4k1` is set. Returns `None` when all hold.
fn hypothesis_battery(g: &Graph, with_4k1: bool) -> Option<CheckStatus> {
    let mut forbidden = vec![Selector::Pattern(PatternName::Bull)];
    if with_4k1 {
        forbidden.push(Selector::Edgeless(4));
    }
    let spec = ClassSpec::new(forbidden).expect("nonempty");
    if let Some(violation) = find_forbidden(g, &spec) {
        return Some(CheckStatus::NotApplicable {
            reason: format!("graph contains {}", violation.selector),
            vertices: violation.witness.vertices,
        });
    }
    if let Some(v) = locally_imperfect_vertex(g) {
        return Some(CheckStatus::NotApplicable {
            reason: format!("graph is not locally perfect at vertex {v}"),
            vertices: vec![v],
        });
    }
    None
}

/// Checks that no anti-neighborhood `G[M(v)]` contains an odd antihole on
/// at least 7 vertices. Hypotheses: connected, locally perfect, bull-free.
pub fn verify_no_far_antihole(g: &Graph) -> CheckStatus {
    if !g.is_connected() {
        return CheckStatus::NotApplicable {
            reason: "graph is not connected".into(),
            vertices: vec![],
        };
    }
    if let Some(status) = hypothesis_battery(g, false) {
        return status;
    }
    for v in g.vertices() {
        let m = g.anti_neighborhood(v).expect("valid vertex");
        let sub = g.induced(m).expect("subset");
        if let Some(witness) = find_odd_antihole(&sub, 7) {
            let members = m.to_vec();
            let mapped: Vec<usize> = witness.vertices.iter().map(|&i| members[i]).collect();
            return CheckStatus::Violated {
                vertices: mapped,
                detail: format!(
                    "odd antihole of length {} inside M({v})",
                    witness.vertices.len()
                ),
            };
        }
    }
    CheckStatus::Holds
}

/// Classifies every vertex of `g` against the ordered induced 5-cycle
/// `hole`, per the family shapes. Deterministic given the hole order.
pub fn classify_around_5hole(
    g: &Graph,
    hole: &[usize],
) -> Result<HoleDecomposition, StructureError> {
    if hole.len() != 5 || !is_induced_cycle_in_order(g, hole) {
        return Err(StructureError::NotA5Hole);
    }
    let hole_arr: [usize; 5] = hole.try_into().expect("length checked");
    let hole_set: VertexSet = hole.iter().copied().collect();
    let mut d = HoleDecomposition {
        hole: hole_arr,
        x: [VertexSet::EMPTY; 5],
        y: [VertexSet::EMPTY; 5],
        z: [VertexSet::EMPTY; 5],
        w: [VertexSet::EMPTY; 5],
        m: VertexSet::EMPTY,
        other: VertexSet::EMPTY,
    };
    for u in g.vertices() {
        if hole_set.contains(u) {
            continue;
        }
        let mut positions = [false; 5];
        let mut count = 0;
        for (p, &hv) in hole_arr.iter().enumerate() {
            if g.has_edge(u, hv) {
                positions[p] = true;
                count += 1;
            }
        }
        match count {
            0 => d.m = d.m.with(u),
            1 => {
                let p = positions.iter().position(|&b| b).expect("one set");
                d.x[p] = d.x[p].with(u);
            }
            2 => {
                let p = positions.iter().position(|&b| b).expect("first");
                let q = positions.iter().rposition(|&b| b).expect("second");
                if q == (p + 2) % 5 {
                    d.y[p] = d.y[p].with(u);
                } else if p == (q + 2) % 5 {
                    d.y[q] = d.y[q].with(u);
                } else {
                    d.other = d.other.with(u);
                }
            }
            3 => {
                let center = (0..5)
                    .find(|&s| positions[(s + 4) % 5] && positions[s] && positions[(s + 1) % 5]);
                match center {
                    Some(s) => d.z[s] = d.z[s].with(u),
                    None => d.other = d.other.with(u),
                }
            }
            4 => {
                let missing = positions.iter().position(|&b| !b).expect("one unset");
                let s = (missing + 1) % 5;
                d.w[s] = d.w[s].with(u);
            }
            _ => d.other = d.other.with(u),
        }
    }
    Ok(d)
}

/// First non-adjacent pair between disjoint sets, if any.
fn missing_pair(g: &Graph, s: VertexSet, t: VertexSet) -> Option<(usize, usize)> {
    s.iter()
        .find_map(|u| t.minus(g.neighbors(u)).min_elem().map(|v| (u, v)))
}

/// First edge between disjoint sets, if any.
fn present_pair(g: &Graph, s: VertexSet, t: VertexSet) -> Option<(usize, usize)> {
    s.iter()
        .find_map(|u| t.intersect(g.neighbors(u)).min_elem().map(|v| (u, v)))
}

/// First non-adjacent pair inside a would-be clique, if any.
fn non_clique_pair(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|u| {
        s.without(u)
            .minus(g.neighbors(u))
            .iter()
            .find(|&v| v > u)
            .map(|v| (u, v))
    })
}

/// Evaluates the 5-hole configuration claims on `(g, d, anchor)`.
///
/// The hypothesis battery ((bull, 4K1)-free, locally perfect, anchor in M)
/// is recorded first; when it fails every claim entry is downgraded to
/// not-applicable. Two claims additionally require a nonempty `Y_1` under
/// the caller's hole orientation (their derivations hinge on such a vertex)
/// and are marked not-applicable without one.
pub fn verify_5hole_claims(
    g: &Graph,
    d: &HoleDecomposition,
    anchor: usize,
) -> Result<ClaimLedger, StructureError> {
    if !d.m.contains(anchor) {
        return Err(StructureError::AnchorNotInM(anchor));
    }
    let mut ledger = ClaimLedger::default();

    if let Some(CheckStatus::NotApplicable { reason, vertices }) = hypothesis_battery(g, true) {
        ledger.push("hypotheses", CheckStatus::NotApplicable { reason, vertices });
        for name in CLAIM_NAMES {
            ledger.push(
                name,
                CheckStatus::NotApplicable {
                    reason: "hypothesis battery failed".into(),
                    vertices: vec![],
                },
            );
        }
        return Ok(ledger);
    }
    ledger.push("hypotheses", CheckStatus::Holds);

    ledger.push("c1-families-cover", claim_families_cover(d));
    ledger.push("c2-m-attachment", claim_m_attachment(g, d));
    ledger.push("c3-m-trivial-or-homogeneous", claim_m_trivial(g, d));
    ledger.push("c4-family-cliques", claim_family_cliques(g, d));
    ledger.push("c5-x-two-consecutive", claim_x_two_consecutive(g, d));
    ledger.push("c6-y-excludes", claim_y_excludes(d));
    ledger.push("c7-y-anticomplete", claim_y_anticomplete(g, d));
    ledger.push("c8-y-z-complete", claim_y_z_complete(g, d));

    if d.y_at(1).is_empty() {
        let gated = CheckStatus::NotApplicable {
            reason: "requires a vertex in Y_1 under this orientation".into(),
            vertices: vec![],
        };
        ledger.push("c9-z-blowup", gated.clone());
        ledger.push("c10-x2-z-attachment", claim_x2_z(g, d));
        ledger.push("c11-w3-z-attachment", gated);
    } else {
        ledger.push("c9-z-blowup", claim_z_blowup(g, d));
        ledger.push("c10-x2-z-attachment", claim_x2_z(g, d));
        ledger.push("c11-w3-z-attachment", claim_w3_z(g, d));
    }
    Ok(ledger)
}

const CLAIM_NAMES: [&str; 11] = [
    "c1-families-cover",
    "c2-m-attachment",
    "c3-m-trivial-or-homogeneous",
    "c4-family-cliques",
    "c5-x-two-consecutive",
    "c6-y-excludes",
    "c7-y-anticomplete",
    "c8-y-z-complete",
    "c9-z-blowup",
    "c10-x2-z-attachment",
    "c11-w3-z-attachment",
];

fn claim_families_cover(d: &HoleDecomposition) -> CheckStatus {
    if d.other.is_empty() {
        CheckStatus::Holds
    } else {
        CheckStatus::Violated {
            vertices: d.other.to_vec(),
            detail: "attachments match none of the X/Y/Z/W shapes".into(),
        }
    }
}

fn claim_m_attachment(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    if let Some((u, t)) = missing_pair(g, d.x_all().union(d.y_all()), d.m) {
        return CheckStatus::Violated {
            vertices: vec![u, t],
            detail: "X ∪ Y must be complete to M".into(),
        };
    }
    let outside = d.z_all().union(d.w_all()).union(d.other);
    if let Some((u, t)) = present_pair(g, outside, d.m) {
        return CheckStatus::Violated {
            vertices: vec![u, t],
            detail: "N(M) must be contained in X ∪ Y".into(),
        };
    }
    CheckStatus::Holds
}

fn claim_m_trivial(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    if d.m.len() == 1 || is_homogeneous(g, d.m) {
        CheckStatus::Holds
    } else {
        CheckStatus::Violated {
            vertices: d.m.to_vec(),
            detail: "M is neither a single vertex nor a homogeneous set".into(),
        }
    }
}

fn claim_family_cliques(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    for i in 1..=5isize {
        if let Some((u, v)) = non_clique_pair(g, d.x_at(i).union(d.y_at(i))) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("X_{i} ∪ Y_{i} is not a clique"),
            };
        }
        if let Some((u, v)) = non_clique_pair(g, d.z_at(i + 1).union(d.w_at(i))) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("Z_{} ∪ W_{i} is not a clique", slot(i + 1) + 1),
            };
        }
    }
    CheckStatus::Holds
}

fn claim_x_two_consecutive(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    for i in 1..=5isize {
        if !d.x_at(i).is_empty() && !d.x_at(i + 2).is_empty() {
            return CheckStatus::Violated {
                vertices: vec![
                    d.x_at(i).min_elem().expect("nonempty"),
                    d.x_at(i + 2).min_elem().expect("nonempty"),
                ],
                detail: format!("X_{i} and X_{} are both nonempty", slot(i + 2) + 1),
            };
        }
    }
    if let Some((u, v)) = non_clique_pair(g, d.x_all()) {
        return CheckStatus::Violated {
            vertices: vec![u, v],
            detail: "X is not a clique".into(),
        };
    }
    CheckStatus::Holds
}

fn claim_y_excludes(d: &HoleDecomposition) -> CheckStatus {
    for i in 1..=5isize {
        if d.y_at(i).is_empty() {
            continue;
        }
        let must_be_empty = d
            .x_all()
            .minus(d.x_at(i + 1))
            .union(d.y_at(i + 2))
            .union(d.y_at(i + 3))
            .union(d.w_all().minus(d.w_at(i + 2)));
        if let Some(u) = must_be_empty.min_elem() {
            return CheckStatus::Violated {
                vertices: vec![d.y_at(i).min_elem().expect("nonempty"), u],
                detail: format!(
                    "Y_{i} nonempty forces (X \\ X_{}) ∪ Y_{} ∪ Y_{} ∪ (W \\ W_{}) empty",
                    slot(i + 1) + 1,
                    slot(i + 2) + 1,
                    slot(i + 3) + 1,
                    slot(i + 2) + 1,
                ),
            };
        }
    }
    CheckStatus::Holds
}

fn claim_y_anticomplete(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    for i in 1..=5isize {
        let right = d
            .y_at(i + 1)
            .union(d.z_at(i + 1))
            .union(d.z_at(i + 3))
            .union(d.z_at(i + 4))
            .union(d.w_at(i + 2));
        if let Some((u, v)) = present_pair(g, d.y_at(i), right) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("Y_{i} must be anticomplete to its Y/Z/W siblings"),
            };
        }
    }
    CheckStatus::Holds
}

fn claim_y_z_complete(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    for i in 1..=5isize {
        if let Some((u, v)) = missing_pair(g, d.y_at(i).union(d.z_at(i + 1)), d.z_at(i)) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("Y_{i} ∪ Z_{} must be complete to Z_{i}", slot(i + 1) + 1),
            };
        }
        if let Some((u, v)) = missing_pair(g, d.y_at(i), d.z_at(i + 2)) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("Y_{i} must be complete to Z_{}", slot(i + 2) + 1),
            };
        }
    }
    CheckStatus::Holds
}

fn claim_z_blowup(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    for i in 1..=5isize {
        let bag = d.z_at(i).with(d.v(i));
        if let Some((u, v)) = non_clique_pair(g, bag) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("bag Z_{i} ∪ {{v_{i}}} is not a clique"),
            };
        }
        let next = d.z_at(i + 1).with(d.v(i + 1));
        if let Some((u, v)) = missing_pair(g, bag, next) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!("consecutive bags {i} and {} are not complete", slot(i + 1) + 1),
            };
        }
        let skip = d.z_at(i + 2).with(d.v(i + 2));
        if let Some((u, v)) = present_pair(g, bag, skip) {
            return CheckStatus::Violated {
                vertices: vec![u, v],
                detail: format!(
                    "non-consecutive bags {i} and {} are not anticomplete",
                    slot(i + 2) + 1
                ),
            };
        }
    }
    CheckStatus::Holds
}

fn claim_x2_z(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    let x2 = d.x_at(2);
    if let Some((u, v)) = present_pair(g, x2, d.z_all().minus(d.z_at(2))) {
        return CheckStatus::Violated {
            vertices: vec![u, v],
            detail: "X_2 must be anticomplete to Z \\ Z_2".into(),
        };
    }
    if let Some((u, v)) = missing_pair(g, x2, d.z_at(2)) {
        return CheckStatus::Violated {
            vertices: vec![u, v],
            detail: "X_2 must be complete to Z_2".into(),
        };
    }
    CheckStatus::Holds
}

fn claim_w3_z(g: &Graph, d: &HoleDecomposition) -> CheckStatus {
    let w3 = d.w_at(3);
    if let Some((u, v)) = present_pair(g, w3, d.z_at(2)) {
        return CheckStatus::Violated {
            vertices: vec![u, v],
            detail: "W_3 must be anticomplete to Z_2".into(),
        };
    }
    if let Some((u, v)) = missing_pair(g, w3, d.z_at(1).union(d.z_at(3))) {
        return CheckStatus::Violated {
            vertices: vec![u, v],
            detail: "W_3 must be complete to Z_1 ∪ Z_3".into(),
        };
    }
    CheckStatus::Holds
}

/// Builds the 8-vertex quotient graph of the configuration analysis: the
/// 5-cycle `0..5`, `y1 = 5` attached at `{v1, v3}`, `y2 = 6` attached at
/// `{v2, v4}`, and `v = 7` adjacent to exactly `{y1, y2}`.
///
/// Every property the analysis asserts of this graph is re-verified here;
/// a failure is a hard error.
pub fn build_graph_f() -> Graph {
    let g = Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 0),
            (5, 2),
            (6, 1),
            (6, 3),
            (7, 5),
            (7, 6),
        ],
    )
    .expect("fixed 8-vertex edge list is valid");
    assert_eq!(g.order(), 8, "quotient graph order");
    assert_eq!(g.edge_count(), 11, "quotient graph size");
    assert!(!has_triangle(&g), "quotient graph must be triangle-free");
    assert_eq!(chromatic_number(&g), 3, "quotient graph chromatic number");
    let spec = ClassSpec::new(vec![
        Selector::Pattern(PatternName::Bull),
        Selector::Edgeless(4),
    ])
    .expect("nonempty");
    assert!(
        find_forbidden(&g, &spec).is_none(),
        "quotient graph must be (bull, 4K1)-free"
    );
    assert!(
        find_homogeneous_set(&g).is_none(),
        "quotient graph must have no homogeneous set"
    );
    g
}

/// Builds the explicit red/blue partition for a decomposition in the final
/// configuration shape (`X = X_2`, `Y = Y_1 ≠ ∅`, `W = W_3`, `Other = ∅`,
/// `M = {anchor}`), then re-verifies both guarantees: the red side induces
/// a perfect graph, and the blue side's clique weight drops strictly under
/// the unit weights and every weight function bounded by `wmax`.
pub fn build_4k1_partition(
    g: &Graph,
    d: &HoleDecomposition,
    wmax: u32,
) -> Result<Partition, StructureError> {
    if !d.other.is_empty() {
        return Err(StructureError::ShapeMismatch {
            side: "Other must be empty",
        });
    }
    if d.m.len() != 1 {
        return Err(StructureError::ShapeMismatch {
            side: "M must be a single anchor",
        });
    }
    for i in [1isize, 3, 4, 5] {
        if !d.x_at(i).is_empty() {
            return Err(StructureError::ShapeMismatch {
                side: "X must equal X_2",
            });
        }
    }
    if d.y_at(1).is_empty() {
        return Err(StructureError::ShapeMismatch {
            side: "Y_1 must be nonempty",
        });
    }
    for i in 2..=5isize {
        if !d.y_at(i).is_empty() {
            return Err(StructureError::ShapeMismatch {
                side: "Y must equal Y_1",
            });
        }
    }
    for i in [1isize, 2, 4, 5] {
        if !d.w_at(i).is_empty() {
            return Err(StructureError::ShapeMismatch {
                side: "W must equal W_3",
            });
        }
    }
    let anchor = d.m.min_elem().expect("singleton M");

    let a = d
        .x_at(2)
        .union(d.y_at(1))
        .union(d.z_at(1))
        .union(d.z_at(3))
        .union(d.z_at(4))
        .with(d.v(1))
        .with(d.v(3))
        .with(d.v(4));
    let b = d
        .z_at(2)
        .union(d.z_at(5))
        .union(d.w_at(3))
        .with(anchor)
        .with(d.v(2))
        .with(d.v(5));
    let partition = Partition::new(g, a, b);

    if !is_perfect(&g.induced(a).expect("subset")) {
        return Err(StructureError::RecheckFailed {
            check: "red side does not induce a perfect graph",
        });
    }
    check_budget(g.order(), wmax).map_err(|_| StructureError::BudgetExceeded {
        wmax,
        order: g.order(),
    })?;
    let cliques = maximal_cliques(g);
    let mut weights = vec![1u32; g.order()];
    loop {
        let w = WeightFn::new(weights.clone()).expect("positive");
        let total = clique_weight_within(&cliques, &w, g.vertex_set());
        if clique_weight_within(&cliques, &w, b) >= total {
            return Err(StructureError::RecheckFailed {
                check: "blue side clique weight does not drop",
            });
        }
        let mut i = g.order();
        loop {
            if i == 0 {
                return Ok(partition);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisibility::Divisibility;
    use crate::patterns::{make_family, make_named, make_odd_torch, Family};

    fn c5() -> Graph {
        make_family(Family::Cycle, 5).unwrap()
    }

    fn c5_plus(attachments: &[&[usize]]) -> Graph {
        let mut g = c5();
        for &attach in attachments {
            g = g
                .with_added_vertex(attach.iter().copied().collect())
                .unwrap();
        }
        g
    }

    const HOLE: [usize; 5] = [0, 1, 2, 3, 4];

    #[test]
    fn attachment_reporting() {
        let g = c5_plus(&[&[0]]);
        assert_eq!(
            attachment_on_hole(&g, &HOLE, 5).unwrap(),
            (VertexSet::singleton(0), true)
        );

        let g = c5_plus(&[&[0, 1]]);
        let (attach, stable) = attachment_on_hole(&g, &HOLE, 5).unwrap();
        assert_eq!(attach, [0, 1].into_iter().collect());
        assert!(!stable);

        let g = c5_plus(&[&[]]);
        assert_eq!(
            attachment_on_hole(&g, &HOLE, 5).unwrap(),
            (VertexSet::EMPTY, true)
        );

        assert!(matches!(
            attachment_on_hole(&c5(), &[0, 1, 2], 4),
            Err(StructureError::NotAHole)
        ));
        let g = c5_plus(&[&[0]]);
        assert!(matches!(
            attachment_on_hole(&g, &HOLE, 2),
            Err(StructureError::VertexOnHole(2))
        ));
    }

    #[test]
    fn classification_shapes() {
        // one vertex per family shape, plus an M vertex and an Other vertex
        let g = c5_plus(&[
            &[0],          // X_1
            &[0, 2],       // Y_1
            &[4, 0, 1],    // Z_1
            &[0, 1, 2, 3], // W_1
            &[],           // M
            &[0, 1],       // Other (consecutive pair)
        ]);
        let d = classify_around_5hole(&g, &HOLE).unwrap();
        assert_eq!(d.x_at(1), VertexSet::singleton(5));
        assert_eq!(d.y_at(1), VertexSet::singleton(6));
        assert_eq!(d.z_at(1), VertexSet::singleton(7));
        assert_eq!(d.w_at(1), VertexSet::singleton(8));
        assert_eq!(d.m, VertexSet::singleton(9));
        assert_eq!(d.other, VertexSet::singleton(10));

        // complete to the hole: matches no shape
        let g = c5_plus(&[&[0, 1, 2, 3, 4]]);
        let d = classify_around_5hole(&g, &HOLE).unwrap();
        assert_eq!(d.other, VertexSet::singleton(5));

        assert!(matches!(
            classify_around_5hole(&c5(), &[0, 1, 2, 3]),
            Err(StructureError::NotA5Hole)
        ));
    }

    #[test]
    fn classification_is_a_partition_of_v() {
        let g = c5_plus(&[&[0, 2], &[1, 2, 3], &[], &[0, 3]]);
        let d = classify_around_5hole(&g, &HOLE).unwrap();
        let mut total = 5 + d.m.len() + d.other.len();
        let mut union = d.hole_set().union(d.m).union(d.other);
        for i in 1..=5isize {
            for s in [d.x_at(i), d.y_at(i), d.z_at(i), d.w_at(i)] {
                total += s.len();
                union = union.union(s);
            }
        }
        assert_eq!(total, g.order());
        assert_eq!(union, g.vertex_set());
    }

    #[test]
    fn stable_attachment_checks() {
        // torch: attachment {v1} stable, pendant in M
        let torch = make_odd_torch(5, VertexSet::singleton(0)).unwrap();
        assert!(verify_stable_attachment(&torch, &HOLE).holds());

        // C5 plus a pendant path behaves the same
        let g = c5_plus(&[&[0]]);
        let g = g.with_added_vertex(VertexSet::singleton(5)).unwrap();
        assert!(verify_stable_attachment(&g, &HOLE).holds());

        // a bull-containing graph is reported as not-applicable
        let mut bullish = make_named(PatternName::Bull);
        for _ in 0..2 {
            bullish = bullish.with_added_vertex(VertexSet::EMPTY).unwrap();
        }
        assert!(matches!(
            verify_stable_attachment(&bullish, &[0, 1, 2, 3, 4]),
            CheckStatus::NotApplicable { .. }
        ));

        // an unstable attachment with a far neighbor carries a bull, so the
        // hypothesis gate fires before the violation can be reported
        let g = c5_plus(&[&[0, 1]]);
        let g = g.with_added_vertex(VertexSet::singleton(5)).unwrap();
        assert!(matches!(
            verify_stable_attachment(&g, &HOLE),
            CheckStatus::NotApplicable { .. }
        ));
    }

    #[test]
    fn common_attachment_checks() {
        // No qualifying configuration: vacuously holds.
        assert!(verify_common_attachment(&c5(), &HOLE).holds());

        // x, y adjacent, both attached at {v1, v3}, common far neighbor z.
        let base = c5_plus(&[&[0, 2], &[0, 2], &[]]);
        let g = Graph::from_edges(
            8,
            &base
                .edges()
                .into_iter()
                .chain([(5, 6), (5, 7), (6, 7)])
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(verify_common_attachment(&g, &HOLE).holds());

        // Same but with different two-vertex attachments: the statement
        // says a hypothesis must fail, and indeed a bull appears.
        let base = c5_plus(&[&[0, 2], &[1, 4], &[]]);
        let g = Graph::from_edges(
            8,
            &base
                .edges()
                .into_iter()
                .chain([(5, 6), (5, 7), (6, 7)])
                .collect::<Vec<_>>(),
        )
        .unwrap();
        match verify_common_attachment(&g, &HOLE) {
            CheckStatus::NotApplicable { reason, vertices } => {
                assert!(reason.contains("bull"), "reason: {reason}");
                assert_eq!(vertices.len(), 5);
            }
            other => panic!("expected hypothesis failure, got {other:?}"),
        }
    }

    #[test]
    fn far_antihole_checks() {
        assert!(verify_no_far_antihole(&make_family(Family::Complete, 5).unwrap()).holds());
        assert!(verify_no_far_antihole(&c5()).holds());
        let disconnected = make_family(Family::Edgeless, 3).unwrap();
        assert!(matches!(
            verify_no_far_antihole(&disconnected),
            CheckStatus::NotApplicable { .. }
        ));
    }

    #[test]
    fn graph_f_battery() {
        let f = build_graph_f();
        assert_eq!(f.order(), 8);
        assert_eq!(f.edge_count(), 11);
        // blowing up any bag creates a homogeneous set
        let blown = f.clique_blowup(&[2, 1, 1, 1, 1, 1, 1, 1]).unwrap();
        assert!(find_homogeneous_set(&blown).is_some());
        // divisibility consequences of being triangle-free and 3-chromatic
        let ctx = Divisibility::new();
        assert!(ctx.is_perfectly_divisible(&f).divisible);
        assert!(ctx
            .is_perfectly_weight_divisible_bounded(&f, 3)
            .unwrap()
            .divisible);
    }

    /// Builds a graph in the final configuration shape with one vertex in
    /// each requested family, wiring the claim-mandated adjacencies.
    fn synthesize_end_state(with_x2: bool, with_w3: bool) -> Graph {
        let mut edges: Vec<(usize, usize)> = c5().edges();
        let mut next = 5;
        let mut z = [0usize; 6]; // z[1..=5]
        for (i, zi) in z.iter_mut().enumerate().skip(1) {
            edges.push((next, slot(i as isize - 1)));
            edges.push((next, slot(i as isize)));
            edges.push((next, slot(i as isize + 1)));
            *zi = next;
            next += 1;
        }
        for i in 1..=5usize {
            let j = i % 5 + 1;
            edges.push((z[i], z[j]));
        }
        let y1 = next;
        next += 1;
        edges.extend([(y1, 0), (y1, 2)]);
        edges.extend([(y1, z[1]), (y1, z[3])]);
        let anchor = next;
        next += 1;
        edges.push((anchor, y1));
        if with_x2 {
            let x2 = next;
            next += 1;
            edges.push((x2, 1));
            edges.push((x2, z[2]));
            edges.push((x2, anchor));
        }
        if with_w3 {
            let w3 = next;
            next += 1;
            edges.extend([(w3, 2), (w3, 3), (w3, 4), (w3, 0)]);
            edges.extend([(w3, z[1]), (w3, z[3]), (w3, z[4])]);
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn end_state_ledger_and_partition() {
        let mut full_passes = 0;
        for (with_x2, with_w3) in [(false, false), (true, false), (false, true), (true, true)] {
            let g = synthesize_end_state(with_x2, with_w3);
            let d = classify_around_5hole(&g, &HOLE).unwrap();
            let anchor = d.m.min_elem().unwrap();
            let ledger = verify_5hole_claims(&g, &d, anchor).unwrap();
            assert!(
                ledger.all_hold(),
                "x2={with_x2} w3={with_w3}: {:?}",
                ledger.violations().collect::<Vec<_>>()
            );
            if ledger.get("hypotheses").unwrap().status.holds() {
                full_passes += 1;
                let p = build_4k1_partition(&g, &d, 2).unwrap();
                assert_eq!(p.a.union(p.b), g.vertex_set());
                assert!(p.a.intersect(p.b).is_empty());
            }
        }
        assert!(full_passes > 0, "at least one shape must fully verify");
    }

    #[test]
    fn shape_mismatch_sides() {
        // Y_1 empty
        let g = c5_plus(&[&[]]);
        let d = classify_around_5hole(&g, &HOLE).unwrap();
        assert!(matches!(
            build_4k1_partition(&g, &d, 2),
            Err(StructureError::ShapeMismatch { side }) if side.contains("Y_1")
        ));

        // Other nonempty
        let g = c5_plus(&[&[0, 1], &[]]);
        let d = classify_around_5hole(&g, &HOLE).unwrap();
        assert!(matches!(
            build_4k1_partition(&g, &d, 2),
            Err(StructureError::ShapeMismatch { side }) if side.contains("Other")
        ));
    }

    #[test]
    fn anchor_must_lie_in_m() {
        let g = c5_plus(&[&[0], &[]]);
        let d = classify_around_5hole(&g, &HOLE).unwrap();
        assert!(matches!(
            verify_5hole_claims(&g, &d, 5),
            Err(StructureError::AnchorNotInM(5))
        ));
        assert!(verify_5hole_claims(&g, &d, 6).is_ok());
    }
}
