//! Minimum-weight packing solvers.
//!
//! The matroid-based solver splits every root into simple roots, orients the hyperedges, and
//! looks for a minimum-weight common independent set of size `k|V|` of the bundle-extended count
//! matroid and the matroid allowing `k` dyperedges into each vertex. That set is then decomposed
//! into arborescences. The reachability solver peels a sink component `C`, solves the rest
//! recursively, and finishes `C` with one matroid-based solve on an auxiliary instance.

use alloc::{format, string::String, vec, vec::Vec};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hypercore::{
    map_shape, Dyperedge, ElementId, MixedHypergraph, NodeId, NodeSet, Shape, TrimmedArc,
};
use crate::intersect::min_weight_common_independent;
use crate::matroid::{entering_matroid, parallel_copies, restriction, shared, FreeMatroid, Matroid, SharedMatroid};
use crate::reach::{backward_reachable, sink_component};
use crate::tanigawa::{ExtendedTanigawaMatroid, TanigawaMatroid};
use crate::verify::{validate_packing, PackingMode, Verdict};
use crate::Weight;

/// The elements given to one root, each with the arc it is trimmed to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arborescence {
    pub root: NodeId,
    /// Sorted by element.
    pub arcs: Vec<TrimmedArc>,
}

impl Arborescence {
    pub fn new(root: NodeId, mut arcs: Vec<TrimmedArc>) -> Self {
        arcs.sort_unstable();
        Self { root, arcs }
    }

    /// `V(B_r)`, including the root.
    pub fn nodes(&self, node_count: usize) -> NodeSet {
        let mut set = NodeSet::with_capacity(node_count);
        set.insert(self.root.0);
        for arc in &self.arcs {
            set.insert(arc.from.0);
            set.insert(arc.to.0);
        }
        set
    }
}

/// One arborescence per root, in root order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub arborescences: Vec<Arborescence>,
}

impl Packing {
    /// Every root on its own.
    pub fn singletons(h: &MixedHypergraph) -> Self {
        Self { arborescences: h.roots().map(|r| Arborescence::new(r, Vec::new())).collect() }
    }

    pub fn weight(&self, weights: &[Weight]) -> Weight {
        self.arborescences
            .iter()
            .flat_map(|b| &b.arcs)
            .fold(Weight::zero(), |acc, arc| acc + weights[arc.element.0])
    }

    pub fn get(&self, root: NodeId) -> Option<&Arborescence> {
        self.arborescences.iter().find(|b| b.root == root)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Optimal { packing: Packing, weight: Weight },
    Infeasible,
}

impl Outcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Outcome::Optimal { .. })
    }

    pub fn packing(&self) -> Option<&Packing> {
        match self {
            Outcome::Optimal { packing, .. } => Some(packing),
            Outcome::Infeasible => None,
        }
    }
}

fn check_inputs(h: &MixedHypergraph, m: &dyn Matroid, weights: &[Weight]) -> Result<()> {
    h.require_rooted()?;
    if m.ground_size() != h.root_count() {
        return Err(Error::GroundMismatch(m.ground_size(), h.root_count()));
    }
    if weights.len() != h.element_count() {
        return Err(Error::WeightCount { expected: h.element_count(), got: weights.len() });
    }
    Ok(())
}

fn assert_valid(h: &MixedHypergraph, m: &dyn Matroid, packing: &Packing, mode: PackingMode) -> Result<()> {
    match validate_packing(h, Some(m), packing, mode)? {
        Verdict::Holds => Ok(()),
        Verdict::Violated(v) => Err(Error::Contract(format!("solver produced an invalid packing: {}", v.describe(h)))),
    }
}

/// A simply rooted copy of a rooted hypergraph. Element ids are unchanged.
#[derive(Clone, Debug)]
pub struct SimplifiedRoots {
    pub graph: MixedHypergraph,
    /// The original matroid with each root replaced by parallel copies, one per new root.
    pub matroid: SharedMatroid,
    /// New node to original node; root copies map to their root.
    pub node_origin: Vec<NodeId>,
}

/// Gives every dyperedge leaving a root its own copy of that root. A root without leaving
/// dyperedges keeps a single isolated copy unless it is a loop of the matroid, in which case
/// it disappears.
pub fn simplify_roots(h: &MixedHypergraph, m: SharedMatroid) -> Result<SimplifiedRoots> {
    h.require_rooted()?;
    if m.ground_size() != h.root_count() {
        return Err(Error::GroundMismatch(m.ground_size(), h.root_count()));
    }
    let mut leaving = vec![0usize; h.node_count()];
    for (_, element) in h.elements() {
        if let Shape::Dyperedge(a) = &element.shape {
            for t in a.tail.iter().filter(|t| h.is_root(**t)) {
                leaving[t.0] += 1;
            }
        }
    }
    let mut graph = MixedHypergraph::new();
    let mut node_origin = Vec::new();
    let mut image: Vec<Vec<NodeId>> = vec![Vec::new(); h.node_count()];
    let mut multiplicity = Vec::new();
    for node in h.nodes() {
        let label = h.label(node);
        if !h.is_root(node) {
            image[node.0].push(graph.add_vertex(label)?);
            node_origin.push(node);
            continue;
        }
        let position = h.root_position(node).expect("roots have positions");
        let copies = match leaving[node.0] {
            0 => usize::from(m.rank_of(&[position]) > 0),
            n => n,
        };
        for i in 0..copies {
            let name = if i == 0 { String::from(label) } else { fresh_label(h, &graph, label, i) };
            image[node.0].push(graph.add_root(name)?);
            node_origin.push(node);
        }
        multiplicity.push(copies);
    }
    let mut next = vec![0usize; h.node_count()];
    for (_, element) in h.elements() {
        let shape = map_shape(&element.shape, |n| {
            if h.is_root(n) {
                let copy = image[n.0][next[n.0]];
                next[n.0] += 1;
                copy
            } else {
                image[n.0][0]
            }
        });
        graph.push_unchecked(element.label.clone(), shape);
    }
    let (copies, _) = parallel_copies(m.clone(), &multiplicity)?;
    let matroid = shared(copies);
    if matroid.full_rank() != m.full_rank() {
        return Err(Error::Contract("root splitting changed the matroid rank".into()));
    }
    Ok(SimplifiedRoots { graph, matroid, node_origin })
}

fn fresh_label(h: &MixedHypergraph, g: &MixedHypergraph, base: &str, i: usize) -> String {
    let mut label = format!("{base}#{i}");
    while h.node(&label).is_some() || g.node(&label).is_some() {
        label.push('\'');
    }
    label
}

/// Minimum-weight matroid-based packing of mixed hyperarborescences.
pub fn solve_matroid_based(h: &MixedHypergraph, m: SharedMatroid, weights: &[Weight]) -> Result<Outcome> {
    check_inputs(h, &*m, weights)?;
    let k = m.full_rank();
    if k == 0 || h.vertex_count() == 0 {
        return Ok(Outcome::Optimal { packing: Packing::singletons(h), weight: Weight::zero() });
    }
    let simple = simplify_roots(h, m.clone())?;
    let ext = simple.graph.directed_extension();
    let ext_weights: Vec<Weight> = ext.origin.iter().map(|e| weights[e.0]).collect();
    let counts = ExtendedTanigawaMatroid::new(&simple.graph, &ext, simple.matroid.clone())?;
    let entering = entering_matroid(&ext.graph, k)?;
    let size = k * h.vertex_count();
    let Some(chosen) = min_weight_common_independent(&counts, &entering, &ext_weights, size)? else {
        return Ok(Outcome::Infeasible);
    };
    let chosen: Vec<ElementId> = chosen.into_iter().map(ElementId).collect();
    let split = decompose_dyperedge_set(&ext.graph, simple.matroid.clone(), &chosen)?;

    let mut arcs: Vec<Vec<TrimmedArc>> = vec![Vec::new(); h.node_count()];
    for b in &split.arborescences {
        let root = simple.node_origin[b.root.0];
        for arc in &b.arcs {
            arcs[root.0].push(TrimmedArc {
                element: ext.origin[arc.element.0],
                from: simple.node_origin[arc.from.0],
                to: simple.node_origin[arc.to.0],
            });
        }
    }
    let packing = Packing {
        arborescences: h.roots().map(|r| Arborescence::new(r, core::mem::take(&mut arcs[r.0]))).collect(),
    };
    assert_valid(h, &*m, &packing, PackingMode::MatroidBased)?;
    let weight = packing.weight(weights);
    Ok(Outcome::Optimal { packing, weight })
}

/// Splits a set of dyperedges with exactly `k` entering each vertex, independent in the count
/// matroid, into a matroid-based packing. `d` is a simply rooted dypergraph.
///
/// Each root starts as a copy placed at the head of its chosen dyperedge. A step takes a
/// remaining dyperedge with a copy placed at one of its tail nodes and replaces it by a new
/// parallel copy of that root placed at its head, provided the rest stays independent. A packing
/// of the current instance always offers such a step, so the loop never gets stuck, and the
/// recorded steps link the copies of each root into one arborescence.
pub fn decompose_dyperedge_set(d: &MixedHypergraph, m: SharedMatroid, chosen: &[ElementId]) -> Result<Packing> {
    d.require_simply_rooted()?;
    if m.ground_size() != d.root_count() {
        return Err(Error::GroundMismatch(m.ground_size(), d.root_count()));
    }
    let k = m.full_rank();
    let mut ids = chosen.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut indegree = vec![0usize; d.node_count()];
    let mut remaining: Vec<(ElementId, &Dyperedge)> = Vec::new();
    let mut copies: Vec<(usize, NodeId)> = Vec::new();
    let mut per_root: Vec<Vec<TrimmedArc>> = vec![Vec::new(); d.root_count()];
    for &id in &ids {
        if id.0 >= d.element_count() {
            return Err(Error::UnknownElement(id.0));
        }
        let element = d.element(id);
        let Some(a) = element.shape.as_dyperedge() else {
            return Err(Error::NotDyperedge(element.label.clone()));
        };
        indegree[a.head.0] += 1;
        match d.root_position(a.tail[0]) {
            Some(root) => {
                copies.push((root, a.head));
                per_root[root].push(TrimmedArc { element: id, from: a.tail[0], to: a.head });
            }
            None => remaining.push((id, a)),
        }
    }
    if let Some(v) = d.vertices().find(|v| indegree[v.0] != k) {
        return Err(Error::Contract(format!(
            "vertex `{}` has {} chosen entering dyperedges, expected {k}",
            d.label(v),
            indegree[v.0]
        )));
    }
    if !placed_independent(d, &m, &copies, &remaining)? {
        return Err(Error::Contract("the dyperedge set is dependent in the count matroid".into()));
    }
    while !remaining.is_empty() {
        let step = (0..remaining.len())
            .flat_map(|i| (0..copies.len()).map(move |c| (i, c)))
            .filter(|&(i, c)| remaining[i].1.tail.contains(&copies[c].1))
            .find_map(|(i, c)| {
                let (root, from) = copies[c];
                let mut next = remaining.clone();
                let (_, a) = next.remove(i);
                let mut placed = copies.clone();
                placed.push((root, a.head));
                match placed_independent(d, &m, &placed, &next) {
                    Ok(true) => Some(Ok((i, root, from))),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                }
            });
        let Some(step) = step else {
            return Err(Error::Contract("the dyperedge set admits no decomposition".into()));
        };
        let (i, root, from) = step?;
        let (id, a) = remaining.remove(i);
        copies.push((root, a.head));
        per_root[root].push(TrimmedArc { element: id, from, to: a.head });
    }
    Ok(Packing {
        arborescences: d.roots().zip(per_root).map(|(r, arcs)| Arborescence::new(r, arcs)).collect(),
    })
}

/// Whether placing the given root copies, each by one arc, and adding `arcs` yields an
/// independent set of the count matroid. Copies of one root are parallel; a root with no copy
/// stays as an isolated root so that the rank is unchanged.
fn placed_independent(
    d: &MixedHypergraph,
    m: &SharedMatroid,
    copies: &[(usize, NodeId)],
    arcs: &[(ElementId, &Dyperedge)],
) -> Result<bool> {
    let mut g = MixedHypergraph::new();
    let mut image = vec![NodeId(usize::MAX); d.node_count()];
    for v in d.vertices() {
        image[v.0] = g.add_vertex(format!("v{}", v.0))?;
    }
    let mut multiplicity = vec![0usize; d.root_count()];
    for (root, count) in multiplicity.iter_mut().enumerate() {
        let placements: Vec<NodeId> = copies.iter().filter(|c| c.0 == root).map(|c| c.1).collect();
        *count = placements.len().max(1);
        if placements.is_empty() {
            g.add_root(format!("r{root}"))?;
        }
        for (j, at) in placements.into_iter().enumerate() {
            let r = g.add_root(format!("r{root}.{j}"))?;
            g.add_arc(format!("r{root}.{j}"), r, image[at.0])?;
        }
    }
    for (i, (_, a)) in arcs.iter().enumerate() {
        let tail: Vec<NodeId> = a.tail.iter().map(|t| image[t.0]).collect();
        g.add_dyperedge(format!("a{i}"), tail, image[a.head.0])?;
    }
    let (matroid, _) = parallel_copies(m.clone(), &multiplicity)?;
    let counts = TanigawaMatroid::new(&g, shared(matroid))?;
    counts.independent(&g.element_ids().collect::<Vec<_>>())
}

/// What an element of the auxiliary instance stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedRole {
    /// An element of the original hypergraph lying inside the component.
    Inner(ElementId),
    /// Stand-in for a dyperedge entering the component, with its outside tail replaced by the
    /// terminal of that dyperedge.
    Proxy(ElementId),
    /// Arc from a root to the terminal of a dyperedge whose tail the root already reaches.
    RootLink { root: NodeId, entering: ElementId },
    /// One of the parallel arcs from the head of an entering dyperedge back to its terminal.
    Return(ElementId),
}

/// The instance that finishes a sink component `C` once the rest is packed: `H[C]`, one
/// terminal `t_a` for each dyperedge `a` entering `C`, and the roots that reach `C`.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub graph: MixedHypergraph,
    /// The original matroid restricted to the roots reaching `C`.
    pub matroid: SharedMatroid,
    pub weights: Vec<Weight>,
    pub roles: Vec<ReducedRole>,
    /// Node of the auxiliary instance to node of the original, `None` for terminals.
    pub node_origin: Vec<Option<NodeId>>,
    /// Terminal node of the auxiliary instance for each entering dyperedge.
    pub terminals: Vec<(NodeId, ElementId)>,
}

/// `packing` is a packing of `H − C`, already expressed in the ids of `h`.
pub fn build_reduced_instance(
    h: &MixedHypergraph,
    m: &SharedMatroid,
    weights: &[Weight],
    component: &NodeSet,
    packing: &Packing,
) -> Result<ReducedInstance> {
    h.check_set(component)?;
    for (_, element) in h.elements() {
        let leaves = match &element.shape {
            Shape::Dyperedge(a) => !component.contains(a.head.0) && a.tail.iter().any(|t| component.contains(t.0)),
            Shape::Hyperedge(e) => e.crosses(component),
        };
        if leaves {
            return Err(Error::Contract(format!("element `{}` leaves the sink component", element.label)));
        }
    }
    let reaching = backward_reachable(h, component)?;
    let entering = h.entering_dyperedges(component)?;

    let mut graph = MixedHypergraph::new();
    let mut node_origin = Vec::new();
    let mut image = vec![None; h.node_count()];
    for v in component.ones().map(NodeId) {
        image[v.0] = Some(graph.add_vertex(h.label(v))?);
        node_origin.push(Some(v));
    }
    let mut terminals = Vec::new();
    for &a in &entering {
        let label = fresh_terminal(h, &graph, &h.element(a).label);
        terminals.push((graph.add_vertex(label)?, a));
        node_origin.push(None);
    }
    let mut kept_roots = Vec::new();
    let mut root_positions = Vec::new();
    for r in h.roots().filter(|r| reaching.contains(r.0)) {
        image[r.0] = Some(graph.add_root(h.label(r))?);
        node_origin.push(Some(r));
        kept_roots.push(r);
        root_positions.push(h.root_position(r).expect("root"));
    }
    let matroid = shared(restriction(m.clone(), &root_positions)?);
    let return_count = matroid.full_rank();

    let mut weights2 = Vec::new();
    let mut roles = Vec::new();
    let sub = h.induced(component)?;
    for (id, element) in sub.graph.elements() {
        let original = sub.element_origin[id.0];
        let shape = map_shape(&element.shape, |n| image[sub.node_origin[n.0].0].expect("inside C"));
        graph.push_unchecked(element.label.clone(), shape);
        weights2.push(weights[original.0]);
        roles.push(ReducedRole::Inner(original));
    }
    for &(t, a) in &terminals {
        let dyperedge = h.shape(a).as_dyperedge().expect("entering elements are dyperedges");
        let tail = dyperedge
            .tail
            .iter()
            .filter(|n| component.contains(n.0))
            .map(|n| image[n.0].expect("inside C"))
            .chain([t]);
        let head = image[dyperedge.head.0].expect("head in C");
        graph.add_dyperedge(fresh_element(&graph, &format!("{}*", h.element(a).label)), tail, head)?;
        weights2.push(weights[a.0]);
        roles.push(ReducedRole::Proxy(a));
    }
    for &(t, a) in &terminals {
        let dyperedge = h.shape(a).as_dyperedge().expect("dyperedge");
        for &r in &kept_roots {
            let spanned = packing.get(r).map(|b| b.nodes(h.node_count())).unwrap_or_else(|| h.set_of([r]));
            if dyperedge.tail.iter().any(|n| spanned.contains(n.0)) {
                let label = fresh_element(&graph, &format!("{}>{}", h.label(r), graph.label(t)));
                graph.add_arc(label, image[r.0].expect("kept root"), t)?;
                weights2.push(Weight::zero());
                roles.push(ReducedRole::RootLink { root: r, entering: a });
            }
        }
    }
    for &(t, a) in &terminals {
        let head = image[h.shape(a).as_dyperedge().expect("dyperedge").head.0].expect("head in C");
        for _ in 0..return_count {
            let label = fresh_element(&graph, &format!("{}<{}", graph.label(t), graph.label(head)));
            graph.add_arc(label, head, t)?;
            weights2.push(Weight::zero());
            roles.push(ReducedRole::Return(a));
        }
    }
    Ok(ReducedInstance { graph, matroid, weights: weights2, roles, node_origin, terminals })
}

fn fresh_terminal(h: &MixedHypergraph, g: &MixedHypergraph, element: &str) -> String {
    let mut label = format!("t[{element}]");
    while h.node(&label).is_some() || g.node(&label).is_some() {
        label.push('\'');
    }
    label
}

fn fresh_element(g: &MixedHypergraph, base: &str) -> String {
    g.fresh_element_label(base)
}

/// Combines the packing of `H − C` with the packing of the auxiliary instance: proxies become
/// their original dyperedges, trimmed from a tail node the root already spans when the proxy
/// was trimmed from its terminal, and the auxiliary arcs are dropped.
pub fn merge_packings(
    h: &MixedHypergraph,
    outer: &Packing,
    inner: &Packing,
    reduced: &ReducedInstance,
) -> Result<Packing> {
    let mut arborescences = Vec::new();
    for r in h.roots() {
        let mut arcs = outer.get(r).map(|b| b.arcs.clone()).unwrap_or_default();
        let spanned = outer.get(r).map(|b| b.nodes(h.node_count())).unwrap_or_else(|| h.set_of([r]));
        let image = reduced.node_origin.iter().position(|&o| o == Some(r));
        if let Some(b2) = image.and_then(|i| inner.get(NodeId(i))) {
            for arc in &b2.arcs {
                let to = reduced.node_origin[arc.to.0];
                let from = reduced.node_origin[arc.from.0];
                match reduced.roles[arc.element.0] {
                    ReducedRole::Inner(e) => arcs.push(TrimmedArc {
                        element: e,
                        from: from.expect("inner arcs stay in C"),
                        to: to.expect("inner arcs stay in C"),
                    }),
                    ReducedRole::Proxy(a) => {
                        let from = match from {
                            Some(u) => u,
                            None => h
                                .shape(a)
                                .as_dyperedge()
                                .expect("dyperedge")
                                .tail
                                .iter()
                                .copied()
                                .find(|u| spanned.contains(u.0))
                                .ok_or_else(|| {
                                    Error::Contract(format!(
                                        "no tail node of `{}` is spanned by `{}`",
                                        h.element(a).label,
                                        h.label(r)
                                    ))
                                })?,
                        };
                        arcs.push(TrimmedArc { element: a, from, to: to.expect("heads lie in C") });
                    }
                    ReducedRole::RootLink { .. } | ReducedRole::Return(_) => {}
                }
            }
        }
        arborescences.push(Arborescence::new(r, arcs));
    }
    Ok(Packing { arborescences })
}

/// Minimum-weight matroid-reachability-based packing of mixed hyperarborescences.
pub fn solve_reachability(h: &MixedHypergraph, m: SharedMatroid, weights: &[Weight]) -> Result<Outcome> {
    check_inputs(h, &*m, weights)?;
    match peel(h, &m, weights)? {
        Some(packing) => {
            let weight = packing.weight(weights);
            Ok(Outcome::Optimal { packing, weight })
        }
        None => Ok(Outcome::Infeasible),
    }
}

fn peel(h: &MixedHypergraph, m: &SharedMatroid, weights: &[Weight]) -> Result<Option<Packing>> {
    if h.vertex_count() == 0 {
        return Ok(Some(Packing::singletons(h)));
    }
    let component = sink_component(h)?;
    let rest = h.remove(&component)?;
    for (i, &v) in rest.node_origin.iter().enumerate() {
        let before = backward_reachable(h, &h.set_of([v]))?;
        let after = backward_reachable(&rest.graph, &rest.graph.set_of([NodeId(i)]))?;
        let lifted = h.set_of(after.ones().map(|n| rest.node_origin[n]));
        if lifted != before {
            return Err(Error::Contract(format!(
                "removing a sink component changed the nodes reaching `{}`",
                h.label(v)
            )));
        }
    }
    let rest_weights: Vec<Weight> = rest.element_origin.iter().map(|e| weights[e.0]).collect();
    let Some(partial) = peel(&rest.graph, m, &rest_weights)? else {
        return Ok(None);
    };
    let outer = Packing {
        arborescences: partial
            .arborescences
            .iter()
            .map(|b| {
                Arborescence::new(
                    rest.node_origin[b.root.0],
                    b.arcs
                        .iter()
                        .map(|arc| TrimmedArc {
                            element: rest.element_origin[arc.element.0],
                            from: rest.node_origin[arc.from.0],
                            to: rest.node_origin[arc.to.0],
                        })
                        .collect(),
                )
            })
            .collect(),
    };
    let reduced = build_reduced_instance(h, m, weights, &component, &outer)?;
    let Outcome::Optimal { packing: inner, .. } =
        solve_matroid_based(&reduced.graph, reduced.matroid.clone(), &reduced.weights)?
    else {
        return Ok(None);
    };
    let merged = merge_packings(h, &outer, &inner, &reduced)?;
    assert_valid(h, &**m, &merged, PackingMode::MatroidReachability)?;
    Ok(Some(merged))
}

/// Spanning arborescences: matroid-based with the free matroid on the roots.
pub fn solve_spanning(h: &MixedHypergraph, weights: &[Weight]) -> Result<Outcome> {
    solve_matroid_based(h, shared(FreeMatroid::new(h.root_count())), weights)
}

/// Reachability arborescences: matroid-reachability-based with the free matroid on the roots.
pub fn solve_kkt(h: &MixedHypergraph, weights: &[Weight]) -> Result<Outcome> {
    solve_reachability(h, shared(FreeMatroid::new(h.root_count())), weights)
}

/// Dispatches on the packing requirement. The matroid is ignored by the two plain modes.
pub fn solve(h: &MixedHypergraph, m: SharedMatroid, weights: &[Weight], mode: PackingMode) -> Result<Outcome> {
    match mode {
        PackingMode::Spanning => solve_spanning(h, weights),
        PackingMode::Reachability => solve_kkt(h, weights),
        PackingMode::MatroidBased => solve_matroid_based(h, m, weights),
        PackingMode::MatroidReachability => solve_reachability(h, m, weights),
    }
}
