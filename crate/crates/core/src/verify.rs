//! Ground truth: packing validation, exhaustive checkers for the cut and biset conditions that
//! characterise feasibility, and an exhaustive minimum-weight search.
//!
//! Everything here enumerates, so every entry point takes explicit size caps and refuses larger
//! inputs instead of truncating.

use alloc::{format, string::String, vec, vec::Vec};
use core::fmt;

use num_traits::Zero;

use crate::engine::{solve, Arborescence, Outcome, Packing};
use crate::error::{Error, Result};
use crate::hypercore::{Biset, MixedHypergraph, NodeId, NodeSet, Shape, Trim, TrimmedArc};
use crate::matroid::{FreeMatroid, Matroid, SharedMatroid};
use crate::reach::{backward_reachable, forward_reachable, vertex_components};
use crate::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PackingMode {
    /// Every arborescence spans all vertices.
    Spanning,
    /// Every root covers exactly the nodes it reaches.
    Reachability,
    /// The roots covering each vertex form a basis of the matroid.
    MatroidBased,
    /// The roots covering a vertex form a basis of the roots reaching it.
    MatroidReachability,
}

impl PackingMode {
    pub const ALL: [PackingMode; 4] = [
        PackingMode::Spanning,
        PackingMode::Reachability,
        PackingMode::MatroidBased,
        PackingMode::MatroidReachability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PackingMode::Spanning => "spanning",
            PackingMode::Reachability => "kkt",
            PackingMode::MatroidBased => "matroid-based",
            PackingMode::MatroidReachability => "matroid-reachability",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }

    /// Whether the matroid of the instance matters; the plain modes use the free matroid.
    pub fn uses_matroid(self) -> bool {
        matches!(self, PackingMode::MatroidBased | PackingMode::MatroidReachability)
    }

    fn reachability(self) -> bool {
        matches!(self, PackingMode::Reachability | PackingMode::MatroidReachability)
    }
}

impl fmt::Display for PackingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingViolation {
    NotRoot(NodeId),
    DuplicateRoot(NodeId),
    SharedElement { element: crate::ElementId, roots: (NodeId, NodeId) },
    InvalidTrim { root: NodeId, element: crate::ElementId },
    /// `node` has two entering arcs, is the root and has one, or is not reached from the root.
    NotArborescence { root: NodeId, node: NodeId },
    /// `node` should be covered by the root and is not, or the other way round.
    Coverage { root: NodeId, node: NodeId, expected: bool },
    NotBasis { vertex: NodeId, roots: Vec<NodeId> },
}

impl PackingViolation {
    pub fn describe(&self, h: &MixedHypergraph) -> String {
        let l = |n: &NodeId| h.label(*n);
        match self {
            PackingViolation::NotRoot(n) => format!("`{}` is not a root", l(n)),
            PackingViolation::DuplicateRoot(n) => format!("root `{}` has two arborescences", l(n)),
            PackingViolation::SharedElement { element, roots } => format!(
                "element `{}` is used by both `{}` and `{}`",
                h.element(*element).label,
                l(&roots.0),
                l(&roots.1)
            ),
            PackingViolation::InvalidTrim { root, element } => {
                format!("element `{}` of `{}` is trimmed outside itself", h.element(*element).label, l(root))
            }
            PackingViolation::NotArborescence { root, node } => {
                format!("the arborescence of `{}` is malformed at `{}`", l(root), l(node))
            }
            PackingViolation::Coverage { root, node, expected: true } => {
                format!("the arborescence of `{}` misses `{}`", l(root), l(node))
            }
            PackingViolation::Coverage { root, node, expected: false } => {
                format!("the arborescence of `{}` covers `{}`, which it should not", l(root), l(node))
            }
            PackingViolation::NotBasis { vertex, roots } => {
                let names: Vec<&str> = roots.iter().map(|r| h.label(*r)).collect();
                format!("the roots {{{}}} covering `{}` are not a basis", names.join(","), l(vertex))
            }
        }
    }
}

fn root_positions(h: &MixedHypergraph, set: &NodeSet) -> Vec<usize> {
    set.ones().filter_map(|n| h.root_position(NodeId(n))).collect()
}

fn matroid_or_free<'a>(
    h: &MixedHypergraph,
    m: Option<&'a dyn Matroid>,
    free: &'a FreeMatroid,
    use_matroid: bool,
) -> Result<&'a dyn Matroid> {
    let chosen: &dyn Matroid = match m {
        Some(m) if use_matroid => m,
        _ => free,
    };
    if chosen.ground_size() != h.root_count() {
        return Err(Error::GroundMismatch(chosen.ground_size(), h.root_count()));
    }
    Ok(chosen)
}

/// Checks, in order: element disjointness, trimming validity, arborescence shape, and the
/// coverage required by `mode`. Roots without an arborescence count as covering only
/// themselves.
pub fn validate_packing(
    h: &MixedHypergraph,
    m: Option<&dyn Matroid>,
    packing: &Packing,
    mode: PackingMode,
) -> Result<Verdict<PackingViolation>> {
    let free = FreeMatroid::new(h.root_count());
    let matroid = matroid_or_free(h, m, &free, mode.uses_matroid())?;
    let n = h.node_count();
    let mut has_tree = vec![false; n];
    for b in &packing.arborescences {
        if b.root.0 >= n {
            return Err(Error::UnknownNode(b.root.0));
        }
        for arc in &b.arcs {
            if arc.element.0 >= h.element_count() {
                return Err(Error::UnknownElement(arc.element.0));
            }
            if let Some(node) = [arc.from, arc.to].into_iter().find(|x| x.0 >= n) {
                return Err(Error::UnknownNode(node.0));
            }
        }
        if !h.is_root(b.root) {
            return Ok(Verdict::Violated(PackingViolation::NotRoot(b.root)));
        }
        if core::mem::replace(&mut has_tree[b.root.0], true) {
            return Ok(Verdict::Violated(PackingViolation::DuplicateRoot(b.root)));
        }
    }

    let mut user: Vec<Option<NodeId>> = vec![None; h.element_count()];
    for b in &packing.arborescences {
        for arc in &b.arcs {
            if let Some(other) = user[arc.element.0].replace(b.root) {
                return Ok(Verdict::Violated(PackingViolation::SharedElement {
                    element: arc.element,
                    roots: (other, b.root),
                }));
            }
        }
    }
    for b in &packing.arborescences {
        for arc in &b.arcs {
            if !h.shape(arc.element).admits(Trim { from: arc.from, to: arc.to }) {
                return Ok(Verdict::Violated(PackingViolation::InvalidTrim { root: b.root, element: arc.element }));
            }
        }
    }
    for b in &packing.arborescences {
        if let Some(node) = arborescence_defect(b, n) {
            return Ok(Verdict::Violated(PackingViolation::NotArborescence { root: b.root, node }));
        }
    }

    let spans: Vec<(NodeId, NodeSet)> = h
        .roots()
        .map(|r| (r, packing.get(r).map(|b| b.nodes(n)).unwrap_or_else(|| h.set_of([r]))))
        .collect();
    match mode {
        PackingMode::Spanning | PackingMode::Reachability => {
            for (r, span) in &spans {
                let mut expected = if mode == PackingMode::Spanning {
                    h.vertex_set()
                } else {
                    forward_reachable(h, &h.set_of([*r]))?
                };
                expected.insert(r.0);
                if let Some(node) = expected.symmetric_difference(span).next() {
                    return Ok(Verdict::Violated(PackingViolation::Coverage {
                        root: *r,
                        node: NodeId(node),
                        expected: expected.contains(node),
                    }));
                }
            }
        }
        PackingMode::MatroidBased | PackingMode::MatroidReachability => {
            let everything: Vec<usize> = (0..h.root_count()).collect();
            for v in h.vertices() {
                let covering: Vec<NodeId> =
                    spans.iter().filter(|(_, s)| s.contains(v.0)).map(|(r, _)| *r).collect();
                let positions: Vec<usize> =
                    covering.iter().map(|r| h.root_position(*r).expect("root")).collect();
                let target = if mode == PackingMode::MatroidBased {
                    everything.clone()
                } else {
                    root_positions(h, &backward_reachable(h, &h.set_of([v]))?)
                };
                let inside = positions.iter().all(|p| target.contains(p));
                if !inside || !matroid.is_basis_of(&positions, &target)? {
                    return Ok(Verdict::Violated(PackingViolation::NotBasis { vertex: v, roots: covering }));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// First node at which the arcs fail to form an arborescence rooted at `b.root`.
fn arborescence_defect(b: &Arborescence, n: usize) -> Option<NodeId> {
    let mut parent: Vec<Option<NodeId>> = vec![None; n];
    for arc in &b.arcs {
        if arc.to == b.root || parent[arc.to.0].replace(arc.from).is_some() {
            return Some(arc.to);
        }
    }
    let mut reached = NodeSet::with_capacity(n);
    reached.insert(b.root.0);
    let mut stack = vec![b.root];
    while let Some(u) = stack.pop() {
        for arc in b.arcs.iter().filter(|a| a.from == u) {
            if !reached.put(arc.to.0) {
                stack.push(arc.to);
            }
        }
    }
    b.arcs.iter().flat_map(|a| [a.from, a.to]).find(|x| !reached.contains(x.0))
}

/// The inequalities whose validity for all candidate sets characterises feasibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `d⁻(X) ≥ |R − X|` for all `X` meeting `V`.
    SpanningCut,
    /// `d⁻(X) ≥ |P_X ∩ R| − |X ∩ R|` for all `X` meeting `V`.
    ReachabilityCut,
    /// `d⁻(X) ≥ r(R) − r(X ∩ R)` for all `X` meeting `V` with `X ∩ R = N⁻(X ∩ V) ∩ R`.
    MatroidCut,
    /// `d⁻(X) ≥ r(P_X ∩ R) − r(X ∩ R)` for all `X` meeting `V`.
    MatroidReachabilityCut,
    /// `e_E + Σ d⁻(Xⁱ) ≥ Σ (r(R) − r(Xⁱ_W))` over biset subpartitions of `V` whose walls are
    /// `N⁻(Xⁱ_I) ∩ R`.
    MatroidBisets,
    /// `e_E + Σ d⁻(Xⁱ) ≥ Σ (r(P_C ∩ R) − r(Xⁱ_W ∩ R))` over biset subpartitions of a strongly
    /// connected component `C` of `H − R` with backward-closed walls.
    ReachabilityBisets,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::SpanningCut => "spanning-cut",
            Condition::ReachabilityCut => "reachability-cut",
            Condition::MatroidCut => "matroid-cut",
            Condition::MatroidReachabilityCut => "matroid-reachability-cut",
            Condition::MatroidBisets => "matroid-bisets",
            Condition::ReachabilityBisets => "reachability-bisets",
        }
    }

    /// The cut condition for digraphs and the biset condition otherwise.
    pub fn for_mode(mode: PackingMode, digraph: bool) -> Self {
        match (mode, digraph) {
            (PackingMode::Spanning, true) => Condition::SpanningCut,
            (PackingMode::Reachability, true) => Condition::ReachabilityCut,
            (PackingMode::MatroidBased, true) => Condition::MatroidCut,
            (PackingMode::MatroidReachability, true) => Condition::MatroidReachabilityCut,
            (PackingMode::Spanning | PackingMode::MatroidBased, false) => Condition::MatroidBisets,
            (PackingMode::Reachability | PackingMode::MatroidReachability, false) => Condition::ReachabilityBisets,
        }
    }

    fn is_cut(self) -> bool {
        !matches!(self, Condition::MatroidBisets | Condition::ReachabilityBisets)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Set(NodeSet),
    Subpartition { component: NodeSet, bisets: Vec<Biset> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionViolation {
    pub condition: Condition,
    pub witness: Witness,
    pub lhs: i64,
    pub rhs: i64,
}

impl ConditionViolation {
    /// Recomputes both sides from the witness alone.
    pub fn reevaluate(&self, h: &MixedHypergraph, m: Option<&dyn Matroid>) -> Result<(i64, i64)> {
        let free = FreeMatroid::new(h.root_count());
        let uses = matches!(
            self.condition,
            Condition::MatroidCut | Condition::MatroidReachabilityCut | Condition::MatroidBisets | Condition::ReachabilityBisets
        );
        let matroid = matroid_or_free(h, m, &free, uses)?;
        match &self.witness {
            Witness::Set(x) => cut_sides(h, matroid, self.condition, x),
            Witness::Subpartition { component, bisets } => {
                let parts: Vec<NodeSet> = bisets.iter().map(|b| b.inner().clone()).collect();
                let mut lhs = h.hyperedges_entering_subpartition(&parts)? as i64;
                let target = if self.condition == Condition::MatroidBisets {
                    matroid.full_rank()
                } else {
                    matroid.rank_of(&root_positions(h, &backward_reachable(h, component)?))
                };
                let mut rhs = 0;
                for b in bisets {
                    lhs += h.biset_in_degree(b) as i64;
                    rhs += target as i64 - matroid.rank_of(&root_positions(h, &b.wall())) as i64;
                }
                Ok((lhs, rhs))
            }
        }
    }

    pub fn describe(&self, h: &MixedHypergraph) -> String {
        let witness = match &self.witness {
            Witness::Set(x) => format!("X = {}", h.show_set(x)),
            Witness::Subpartition { component, bisets } => {
                let parts: Vec<String> = bisets
                    .iter()
                    .map(|b| format!("({} | {})", h.show_set(b.inner()), h.show_set(&b.wall())))
                    .collect();
                format!("C = {}, bisets {}", h.show_set(component), parts.join(" "))
            }
        };
        format!("{} violated at {}: {} < {}", self.condition.name(), witness, self.lhs, self.rhs)
    }
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `|V ∪ R|` for cut enumeration and wall enumeration.
    pub nodes: usize,
    /// Largest `|V|` for biset subpartition enumeration.
    pub biset_vertices: usize,
    /// Largest number of bisets in a subpartition; `None` enumerates them all.
    pub parts: Option<usize>,
    /// Largest element count for the exhaustive optimum.
    pub elements: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { nodes: 12, biset_vertices: 6, parts: None, elements: 10 }
    }
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

fn cut_sides(h: &MixedHypergraph, m: &dyn Matroid, condition: Condition, x: &NodeSet) -> Result<(i64, i64)> {
    let lhs = h.in_degree(x)? as i64;
    let inside = root_positions(h, x);
    let rhs = match condition {
        Condition::SpanningCut => (h.root_count() - inside.len()) as i64,
        Condition::ReachabilityCut => {
            root_positions(h, &backward_reachable(h, x)?).len() as i64 - inside.len() as i64
        }
        Condition::MatroidCut => m.full_rank() as i64 - m.rank_of(&inside) as i64,
        Condition::MatroidReachabilityCut => {
            m.rank_of(&root_positions(h, &backward_reachable(h, x)?)) as i64 - m.rank_of(&inside) as i64
        }
        Condition::MatroidBisets | Condition::ReachabilityBisets => {
            return Err(Error::Contract("biset condition evaluated on a set".into()))
        }
    };
    Ok((lhs, rhs))
}

/// Checks a cut condition on a digraph by enumerating node sets in increasing bitmask order.
pub fn check_digraph_condition(
    h: &MixedHypergraph,
    m: Option<&dyn Matroid>,
    condition: Condition,
    caps: Caps,
) -> Result<Verdict<ConditionViolation>> {
    if !condition.is_cut() {
        return Err(Error::Contract(format!("{} is not a cut condition", condition.name())));
    }
    if let Some((_, e)) = h.elements().find(|(_, e)| !matches!(&e.shape, Shape::Dyperedge(a) if a.is_arc())) {
        return Err(Error::NotDigraph(e.label.clone()));
    }
    check_cap("node count", h.node_count(), caps.nodes)?;
    let free = FreeMatroid::new(h.root_count());
    let matroid = matroid_or_free(h, m, &free, matches!(condition, Condition::MatroidCut | Condition::MatroidReachabilityCut))?;
    let n = h.node_count();
    let vertices = h.vertex_set();
    let roots = h.root_set();
    for mask in 1u32..(1 << n) {
        let x = h.set_of((0..n).filter(|i| mask >> i & 1 == 1).map(NodeId));
        if x.is_disjoint(&vertices) {
            continue;
        }
        if condition == Condition::MatroidCut {
            let mut inner = x.clone();
            inner.intersect_with(&vertices);
            let mut forced = h.in_neighbours(&inner);
            forced.intersect_with(&roots);
            let mut present = x.clone();
            present.intersect_with(&roots);
            if forced != present {
                continue;
            }
        }
        let (lhs, rhs) = cut_sides(h, matroid, condition, &x)?;
        if lhs < rhs {
            return Ok(Verdict::Violated(ConditionViolation { condition, witness: Witness::Set(x), lhs, rhs }));
        }
    }
    Ok(Verdict::Holds)
}

/// All subpartitions of `ground` into at most `limit` nonempty parts. Parts are listed by
/// first member; subpartitions come in restricted-growth order.
fn subpartitions(h: &MixedHypergraph, ground: &[NodeId], limit: Option<usize>) -> Vec<Vec<NodeSet>> {
    fn walk(
        h: &MixedHypergraph,
        ground: &[NodeId],
        limit: usize,
        i: usize,
        parts: &mut Vec<NodeSet>,
        out: &mut Vec<Vec<NodeSet>>,
    ) {
        if i == ground.len() {
            if !parts.is_empty() {
                out.push(parts.clone());
            }
            return;
        }
        let v = ground[i].0;
        walk(h, ground, limit, i + 1, parts, out);
        for p in 0..parts.len() {
            parts[p].insert(v);
            walk(h, ground, limit, i + 1, parts, out);
            parts[p].set(v, false);
        }
        if parts.len() < limit {
            parts.push(h.set_of([ground[i]]));
            walk(h, ground, limit, i + 1, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    walk(h, ground, limit.unwrap_or(usize::MAX), 0, &mut Vec::new(), &mut out);
    out
}

/// Checks a biset condition by enumerating biset subpartitions.
///
/// For the matroid-based condition the walls are forced. For the reachability condition each
/// part takes, independently, a backward-closed wall outside `C` minimising its contribution,
/// which decides the condition over all wall choices at once.
pub fn check_biset_condition(
    h: &MixedHypergraph,
    m: Option<&dyn Matroid>,
    condition: Condition,
    caps: Caps,
) -> Result<Verdict<ConditionViolation>> {
    if condition.is_cut() {
        return Err(Error::Contract(format!("{} is not a biset condition", condition.name())));
    }
    check_cap("vertex count", h.vertex_count(), caps.biset_vertices)?;
    let free = FreeMatroid::new(h.root_count());
    let matroid = matroid_or_free(h, m, &free, true)?;
    let roots = h.root_set();
    let evaluate = |bisets: Vec<Biset>, component: NodeSet| -> Result<Option<ConditionViolation>> {
        let violation = ConditionViolation {
            condition,
            witness: Witness::Subpartition { component, bisets },
            lhs: 0,
            rhs: 0,
        };
        let (lhs, rhs) = violation.reevaluate(h, Some(matroid))?;
        Ok((lhs < rhs).then_some(ConditionViolation { lhs, rhs, ..violation }))
    };

    if condition == Condition::MatroidBisets {
        let vertices: Vec<NodeId> = h.vertices().collect();
        for parts in subpartitions(h, &vertices, caps.parts) {
            let bisets = parts
                .into_iter()
                .map(|inner| {
                    let mut wall = h.in_neighbours(&inner);
                    wall.intersect_with(&roots);
                    Biset::from_wall(inner, &wall)
                })
                .collect();
            if let Some(v) = evaluate(bisets, h.vertex_set())? {
                return Ok(Verdict::Violated(v));
            }
        }
        return Ok(Verdict::Holds);
    }

    check_cap("node count", h.node_count(), caps.nodes)?;
    for component in vertex_components(h) {
        let outside: Vec<usize> = (0..h.node_count()).filter(|&n| !component.contains(n)).collect();
        let walls: Vec<NodeSet> = (0u32..1 << outside.len())
            .map(|mask| h.set_of(outside.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &n)| NodeId(n))))
            .filter(|w| h.in_degree(w).map(|d| d == 0).unwrap_or(false) && h.hyperedge_degree(w) == 0)
            .collect();
        let members: Vec<NodeId> = component.ones().map(NodeId).collect();
        let best_wall = |inner: &NodeSet| -> NodeSet {
            walls
                .iter()
                .min_by_key(|w| {
                    let b = Biset::from_wall(inner.clone(), w);
                    h.biset_in_degree(&b) as i64 + matroid.rank_of(&root_positions(h, w)) as i64
                })
                .expect("the empty wall is always closed")
                .clone()
        };
        for parts in subpartitions(h, &members, caps.parts) {
            let bisets = parts
                .into_iter()
                .map(|inner| {
                    let wall = best_wall(&inner);
                    Biset::from_wall(inner, &wall)
                })
                .collect();
            if let Some(v) = evaluate(bisets, component.clone())? {
                return Ok(Verdict::Violated(v));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The condition matching `mode`: the cut condition on digraphs, the biset condition otherwise.
pub fn check_condition(
    h: &MixedHypergraph,
    m: Option<&dyn Matroid>,
    mode: PackingMode,
    caps: Caps,
) -> Result<Verdict<ConditionViolation>> {
    let condition = Condition::for_mode(mode, h.is_digraph());
    let free = FreeMatroid::new(h.root_count());
    let matroid = matroid_or_free(h, m, &free, mode.uses_matroid())?;
    if condition.is_cut() {
        check_digraph_condition(h, Some(matroid), condition, caps)
    } else {
        check_biset_condition(h, Some(matroid), condition, caps)
    }
}

/// A minimum-weight valid packing found by trying every assignment of elements to roots and
/// trimmings, or `None` if no valid packing exists.
///
/// The search only prunes with facts every valid packing satisfies: each vertex has exactly as
/// many entering arcs as roots covering it, from distinct roots forming an independent set, and
/// an element leaving a root belongs to that root's arborescence.
pub fn exhaustive_optimum(
    h: &MixedHypergraph,
    m: Option<&dyn Matroid>,
    weights: &[Weight],
    mode: PackingMode,
    caps: Caps,
) -> Result<Option<(Packing, Weight)>> {
    h.require_rooted()?;
    check_cap("element count", h.element_count(), caps.elements)?;
    if weights.len() != h.element_count() {
        return Err(Error::WeightCount { expected: h.element_count(), got: weights.len() });
    }
    let free = FreeMatroid::new(h.root_count());
    let matroid = matroid_or_free(h, m, &free, mode.uses_matroid())?;
    let n = h.node_count();
    let roots: Vec<NodeId> = h.roots().collect();

    // How many roots must cover each vertex, and which roots may.
    let mut demand = vec![0usize; n];
    let mut allowed = vec![NodeSet::with_capacity(n); n];
    for v in h.vertices() {
        let reaching = backward_reachable(h, &h.set_of([v]))?;
        let candidates = if mode.reachability() { reaching.clone() } else { h.root_set() };
        let positions = root_positions(h, &candidates);
        demand[v.0] = match mode {
            PackingMode::Spanning => h.root_count(),
            PackingMode::Reachability => positions.len(),
            PackingMode::MatroidBased | PackingMode::MatroidReachability => matroid.rank_of(&positions),
        };
        for r in candidates.ones().filter(|&r| h.is_root(NodeId(r))) {
            let loopless = matroid.rank_of(&[h.root_position(NodeId(r)).expect("root")]) > 0;
            if loopless || !mode.uses_matroid() {
                allowed[v.0].insert(r);
            }
        }
    }

    let mut options: Vec<Vec<(usize, Trim)>> = Vec::new();
    for (_, element) in h.elements() {
        let mut trims = Vec::new();
        match &element.shape {
            Shape::Dyperedge(a) => trims.extend(a.tail.iter().map(|&t| Trim { from: t, to: a.head })),
            Shape::Hyperedge(e) => {
                for &u in &e.members {
                    trims.extend(e.members.iter().filter(|&&v| v != u).map(|&v| Trim { from: u, to: v }));
                }
            }
        }
        let mut list = Vec::new();
        for (ri, &r) in roots.iter().enumerate() {
            for &trim in &trims {
                if h.is_root(trim.to) || !allowed[trim.to.0].contains(r.0) {
                    continue;
                }
                let from_ok = if h.is_root(trim.from) { trim.from == r } else { allowed[trim.from.0].contains(r.0) };
                if from_ok {
                    list.push((ri, trim));
                }
            }
        }
        options.push(list);
    }
    let m_count = options.len();
    let mut supply = vec![vec![0usize; n]; m_count + 1];
    let mut slack = vec![Weight::zero(); m_count + 1];
    for i in (0..m_count).rev() {
        supply[i] = supply[i + 1].clone();
        let mut heads: Vec<usize> = options[i].iter().map(|(_, t)| t.to.0).collect();
        heads.sort_unstable();
        heads.dedup();
        for v in heads {
            supply[i][v] += 1;
        }
        slack[i] = slack[i + 1] + weights[i].min(Weight::zero());
    }

    let mut search = Exhaustive {
        h,
        mode,
        matroid,
        weights,
        roots: &roots,
        demand,
        options,
        supply,
        slack,
        entering: vec![Vec::new(); n],
        chosen: Vec::new(),
        best: None,
    };
    search.run(0, Weight::zero())?;
    Ok(search.best)
}

struct Exhaustive<'a> {
    h: &'a MixedHypergraph,
    mode: PackingMode,
    matroid: &'a dyn Matroid,
    weights: &'a [Weight],
    roots: &'a [NodeId],
    demand: Vec<usize>,
    options: Vec<Vec<(usize, Trim)>>,
    supply: Vec<Vec<usize>>,
    slack: Vec<Weight>,
    /// Root indices already entering each node.
    entering: Vec<Vec<usize>>,
    chosen: Vec<(usize, usize, Trim)>,
    best: Option<(Packing, Weight)>,
}

impl Exhaustive<'_> {
    fn run(&mut self, i: usize, weight: Weight) -> Result<()> {
        if let Some((_, best)) = &self.best {
            if weight + self.slack[i] >= *best {
                return Ok(());
            }
        }
        if self.h.vertices().any(|v| self.entering[v.0].len() + self.supply[i][v.0] < self.demand[v.0]) {
            return Ok(());
        }
        if i == self.options.len() {
            return self.leaf(weight);
        }
        self.run(i + 1, weight)?;
        for k in 0..self.options[i].len() {
            let (root, trim) = self.options[i][k];
            let at = trim.to.0;
            if self.entering[at].len() >= self.demand[at] || self.entering[at].contains(&root) {
                continue;
            }
            let mut positions: Vec<usize> = self.entering[at]
                .iter()
                .chain([&root])
                .map(|&r| self.h.root_position(self.roots[r]).expect("root"))
                .collect();
            positions.sort_unstable();
            if self.matroid.rank_of(&positions) < positions.len() {
                continue;
            }
            self.entering[at].push(root);
            self.chosen.push((i, root, trim));
            self.run(i + 1, weight + self.weights[i])?;
            self.chosen.pop();
            self.entering[at].pop();
        }
        Ok(())
    }

    fn leaf(&mut self, weight: Weight) -> Result<()> {
        let mut arcs: Vec<Vec<TrimmedArc>> = vec![Vec::new(); self.roots.len()];
        for &(e, r, trim) in &self.chosen {
            arcs[r].push(TrimmedArc { element: crate::ElementId(e), from: trim.from, to: trim.to });
        }
        let packing = Packing {
            arborescences: self.roots.iter().zip(arcs).map(|(&r, a)| Arborescence::new(r, a)).collect(),
        };
        if validate_packing(self.h, Some(self.matroid), &packing, self.mode)?.holds() {
            self.best = Some((packing, weight));
        }
        Ok(())
    }
}

/// Solver, condition checker and exhaustive search side by side.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub mode: PackingMode,
    pub solver: Outcome,
    pub condition: Verdict<ConditionViolation>,
    pub optimum: Option<(Packing, Weight)>,
    pub problems: Vec<String>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.problems.is_empty()
    }
}

pub fn cross_check(
    h: &MixedHypergraph,
    m: SharedMatroid,
    weights: &[Weight],
    mode: PackingMode,
    caps: Caps,
) -> Result<CrossCheck> {
    let solver = solve(h, m.clone(), weights, mode)?;
    let condition = check_condition(h, Some(&*m), mode, caps)?;
    let optimum = exhaustive_optimum(h, Some(&*m), weights, mode, caps)?;
    let mut problems = Vec::new();
    if solver.is_feasible() != condition.holds() {
        problems.push(format!(
            "solver feasible: {}, condition holds: {}",
            solver.is_feasible(),
            condition.holds()
        ));
    }
    if solver.is_feasible() != optimum.is_some() {
        problems.push(format!(
            "solver feasible: {}, exhaustive search feasible: {}",
            solver.is_feasible(),
            optimum.is_some()
        ));
    }
    if let Outcome::Optimal { packing, weight } = &solver {
        if let Verdict::Violated(v) = validate_packing(h, Some(&*m), packing, mode)? {
            problems.push(format!("solver packing invalid: {}", v.describe(h)));
        }
        if let Some((_, best)) = &optimum {
            if best != weight {
                problems.push(format!("solver weight {weight}, exhaustive minimum {best}"));
            }
        }
    }
    Ok(CrossCheck { mode, solver, condition, optimum, problems })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::solve_kkt;
    use crate::matroid::shared;
    use crate::ElementId;

    fn e2() -> MixedHypergraph {
        let mut h = MixedHypergraph::new();
        let r1 = h.add_root("r1").unwrap();
        let r2 = h.add_root("r2").unwrap();
        let u = h.add_vertex("u").unwrap();
        let v = h.add_vertex("v").unwrap();
        h.add_arc("r1u", r1, u).unwrap();
        h.add_arc("uv", u, v).unwrap();
        h.add_arc("r2v", r2, v).unwrap();
        h
    }

    fn unit(h: &MixedHypergraph) -> Vec<Weight> {
        vec![Weight::from_integer(1); h.element_count()]
    }

    #[test]
    fn validating_e2() {
        let h = e2();
        let packing = solve_kkt(&h, &unit(&h)).unwrap().packing().unwrap().clone();
        assert_eq!(validate_packing(&h, None, &packing, PackingMode::Reachability), Ok(Verdict::Holds));
        let spanning = validate_packing(&h, None, &packing, PackingMode::Spanning).unwrap();
        assert_eq!(
            spanning,
            Verdict::Violated(PackingViolation::Coverage { root: NodeId(1), node: NodeId(2), expected: true })
        );

        let mut shared_arc = packing.clone();
        let stolen = shared_arc.arborescences[0].arcs[0];
        shared_arc.arborescences[1].arcs.push(stolen);
        assert!(matches!(
            validate_packing(&h, None, &shared_arc, PackingMode::Reachability),
            Ok(Verdict::Violated(PackingViolation::SharedElement { .. }))
        ));

        let mut dangling = packing;
        dangling.arborescences[0].arcs[0].element = ElementId(9);
        assert_eq!(validate_packing(&h, None, &dangling, PackingMode::Reachability), Err(Error::UnknownElement(9)));
    }

    #[test]
    fn cut_conditions_on_e2() {
        let h = e2();
        let caps = Caps::default();
        let Verdict::Violated(v) = check_digraph_condition(&h, None, Condition::SpanningCut, caps).unwrap() else {
            panic!("violated")
        };
        // {u} is entered once but misses both roots.
        assert_eq!(v.witness, Witness::Set(h.set_of([NodeId(2)])));
        assert_eq!((v.lhs, v.rhs), (1, 2));
        assert_eq!(v.reevaluate(&h, None), Ok((1, 2)));
        assert_eq!(check_digraph_condition(&h, None, Condition::ReachabilityCut, caps), Ok(Verdict::Holds));

        let mut single = MixedHypergraph::new();
        let r = single.add_root("r").unwrap();
        let v = single.add_vertex("v").unwrap();
        single.add_arc("rv", r, v).unwrap();
        let free = FreeMatroid::new(1);
        assert_eq!(check_digraph_condition(&single, Some(&free), Condition::MatroidCut, caps), Ok(Verdict::Holds));
    }

    #[test]
    fn biset_conditions() {
        let h = e2();
        let caps = Caps::default();
        assert_eq!(check_biset_condition(&h, None, Condition::ReachabilityBisets, caps), Ok(Verdict::Holds));

        let mut lone = MixedHypergraph::new();
        let r1 = lone.add_root("r1").unwrap();
        lone.add_root("r2").unwrap();
        let v = lone.add_vertex("v").unwrap();
        lone.add_arc("r1v", r1, v).unwrap();
        let Verdict::Violated(violation) =
            check_biset_condition(&lone, None, Condition::MatroidBisets, caps).unwrap()
        else {
            panic!("violated")
        };
        let Witness::Subpartition { bisets, .. } = &violation.witness else { panic!("subpartition") };
        assert_eq!(bisets.len(), 1);
        assert_eq!(bisets[0].wall(), lone.set_of([r1]));
        assert_eq!((violation.lhs, violation.rhs), (0, 1));
        assert_eq!(violation.reevaluate(&lone, None), Ok((0, 1)));

        let mut empty = MixedHypergraph::new();
        empty.add_root("r").unwrap();
        for c in [Condition::MatroidBisets, Condition::ReachabilityBisets] {
            assert_eq!(check_biset_condition(&empty, None, c, caps), Ok(Verdict::Holds));
        }
    }

    #[test]
    fn caps_are_enforced() {
        let mut h = MixedHypergraph::new();
        for i in 0..7 {
            h.add_vertex(format!("v{i}")).unwrap();
        }
        assert!(matches!(
            check_biset_condition(&h, None, Condition::MatroidBisets, Caps::default()),
            Err(Error::CapExceeded { .. })
        ));
        let tight = Caps { nodes: 3, ..Caps::default() };
        assert!(check_digraph_condition(&h, None, Condition::SpanningCut, tight).is_err());
    }

    #[test]
    fn exhaustive_matches_solver_on_e2() {
        let h = e2();
        let free = shared(FreeMatroid::new(2));
        for mode in PackingMode::ALL {
            let report = cross_check(&h, free.clone(), &unit(&h), mode, Caps::default()).unwrap();
            assert!(report.agrees(), "{mode}: {:?}", report.problems);
        }
        let best = exhaustive_optimum(&h, None, &unit(&h), PackingMode::Reachability, Caps::default()).unwrap();
        assert_eq!(best.map(|(_, w)| w), Some(Weight::from_integer(3)));
    }
}
