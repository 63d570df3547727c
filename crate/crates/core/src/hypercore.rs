//! Rooted mixed hypergraphs: vertices and roots, dyperedges and hyperedges, bisets, and the
//! counting predicates the packing conditions are phrased in.
//!
//! Nodes and elements are addressed by dense indices ([`NodeId`], [`ElementId`]) and carry a
//! unique textual label. Parallel elements are allowed; they differ by id.

use alloc::{collections::BTreeMap, format, string::String, vec::Vec};
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of nodes, indexed by [`NodeId::index`].
pub type NodeSet = FixedBitSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Vertex,
    Root,
}

/// A directed hyperedge: a nonempty tail set and a single head outside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyperedge {
    /// Sorted, duplicate free.
    pub tail: Vec<NodeId>,
    pub head: NodeId,
}

impl Dyperedge {
    /// `head ∈ X` and some tail node lies outside `X`.
    pub fn enters(&self, x: &NodeSet) -> bool {
        x.contains(self.head.0) && self.tail.iter().any(|t| !x.contains(t.0))
    }

    /// `head ∈ X_I` and some tail node lies outside `X_O`.
    pub fn enters_biset(&self, biset: &Biset) -> bool {
        biset.inner.contains(self.head.0) && self.tail.iter().any(|t| !biset.outer.contains(t.0))
    }

    pub fn is_arc(&self) -> bool {
        self.tail.len() == 1
    }
}

/// An undirected hyperedge on at least two nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    /// Sorted, duplicate free, at least two entries.
    pub members: Vec<NodeId>,
}

impl Hyperedge {
    /// Meets both `X` and its complement.
    pub fn crosses(&self, x: &NodeSet) -> bool {
        let inside = self.members.iter().filter(|m| x.contains(m.0)).count();
        inside > 0 && inside < self.members.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Dyperedge(Dyperedge),
    Hyperedge(Hyperedge),
}

impl Shape {
    pub fn endpoints(&self) -> impl Iterator<Item = NodeId> + '_ {
        let (nodes, head): (&[NodeId], Option<NodeId>) = match self {
            Shape::Dyperedge(a) => (&a.tail, Some(a.head)),
            Shape::Hyperedge(e) => (&e.members, None),
        };
        nodes.iter().copied().chain(head)
    }

    pub fn as_dyperedge(&self) -> Option<&Dyperedge> {
        match self {
            Shape::Dyperedge(a) => Some(a),
            Shape::Hyperedge(_) => None,
        }
    }

    pub fn as_hyperedge(&self) -> Option<&Hyperedge> {
        match self {
            Shape::Hyperedge(e) => Some(e),
            Shape::Dyperedge(_) => None,
        }
    }

    /// Whether `trim` is a valid trimming of this element.
    pub fn admits(&self, trim: Trim) -> bool {
        match self {
            Shape::Dyperedge(a) => trim.to == a.head && a.tail.contains(&trim.from),
            Shape::Hyperedge(e) => {
                trim.from != trim.to && e.members.contains(&trim.from) && e.members.contains(&trim.to)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub label: String,
    pub shape: Shape,
}

/// The arc an element is replaced by when trimmed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trim {
    pub from: NodeId,
    pub to: NodeId,
}

/// An arc of a trimmed digraph, remembering the element it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrimmedArc {
    pub element: ElementId,
    pub from: NodeId,
    pub to: NodeId,
}

/// A pair of node sets `(outer, inner)` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Biset {
    outer: NodeSet,
    inner: NodeSet,
}

impl Biset {
    pub fn new(outer: NodeSet, inner: NodeSet) -> Result<Self> {
        if !inner.is_subset(&outer) {
            return Err(Error::InvalidBiset("inner set is not contained in the outer set"));
        }
        Ok(Self { outer, inner })
    }

    /// Builds `(inner ∪ wall, inner)`.
    pub fn from_wall(inner: NodeSet, wall: &NodeSet) -> Self {
        let mut outer = inner.clone();
        outer.union_with(wall);
        Self { outer, inner }
    }

    pub fn outer(&self) -> &NodeSet {
        &self.outer
    }

    pub fn inner(&self) -> &NodeSet {
        &self.inner
    }

    pub fn wall(&self) -> NodeSet {
        let mut wall = self.outer.clone();
        wall.difference_with(&self.inner);
        wall
    }
}

/// Bisets whose inner sets subpartition `ground` and whose walls avoid it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisetSubpartition {
    ground: NodeSet,
    bisets: Vec<Biset>,
}

impl BisetSubpartition {
    pub fn new(ground: NodeSet, bisets: Vec<Biset>) -> Result<Self> {
        let mut seen = NodeSet::with_capacity(ground.len());
        for biset in &bisets {
            let inner = biset.inner();
            if inner.is_clear() {
                return Err(Error::InvalidBiset("inner set is empty"));
            }
            if !inner.is_subset(&ground) {
                return Err(Error::InvalidBiset("inner set leaves the ground set"));
            }
            if !biset.wall().is_disjoint(&ground) {
                return Err(Error::InvalidBiset("wall meets the ground set"));
            }
            if let Some(node) = inner.ones().find(|&n| n < seen.len() && seen.contains(n)) {
                return Err(Error::OverlappingParts(node));
            }
            seen.grow(inner.len());
            seen.union_with(inner);
        }
        Ok(Self { ground, bisets })
    }

    pub fn ground(&self) -> &NodeSet {
        &self.ground
    }

    pub fn bisets(&self) -> &[Biset] {
        &self.bisets
    }
}

/// Outcome of [`MixedHypergraph::check_rooted`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rootedness {
    SimplyRooted,
    Rooted,
    NotRooted { root: NodeId, element: ElementId },
}

impl Rootedness {
    pub fn is_rooted(self) -> bool {
        !matches!(self, Rootedness::NotRooted { .. })
    }
}

/// A hypergraph cut out of a larger one, with maps back to the original ids.
#[derive(Clone, Debug)]
pub struct Subhypergraph {
    pub graph: MixedHypergraph,
    /// New node index to original node.
    pub node_origin: Vec<NodeId>,
    /// New element index to original element.
    pub element_origin: Vec<ElementId>,
    /// Original node index to new node, if kept.
    pub node_image: Vec<Option<NodeId>>,
}

/// The dypergraph obtained by replacing every hyperedge by all of its orientations.
#[derive(Clone, Debug)]
pub struct DirectedExtension {
    pub graph: MixedHypergraph,
    /// Extension element index to the element it was derived from.
    pub origin: Vec<ElementId>,
    /// Extension element index to its source hyperedge, for bundle members only.
    pub bundle_of: Vec<Option<ElementId>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MixedHypergraph {
    labels: Vec<String>,
    kinds: Vec<NodeKind>,
    elements: Vec<Element>,
    node_lookup: BTreeMap<String, NodeId>,
    element_lookup: BTreeMap<String, ElementId>,
}

impl MixedHypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<NodeId> {
        self.add_node(label.into(), NodeKind::Vertex)
    }

    pub fn add_root(&mut self, label: impl Into<String>) -> Result<NodeId> {
        self.add_node(label.into(), NodeKind::Root)
    }

    fn add_node(&mut self, label: String, kind: NodeKind) -> Result<NodeId> {
        if self.node_lookup.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let id = NodeId(self.labels.len());
        self.node_lookup.insert(label.clone(), id);
        self.labels.push(label);
        self.kinds.push(kind);
        Ok(id)
    }

    pub fn add_dyperedge(
        &mut self,
        label: impl Into<String>,
        tail: impl IntoIterator<Item = NodeId>,
        head: NodeId,
    ) -> Result<ElementId> {
        let label = label.into();
        let mut tail: Vec<NodeId> = tail.into_iter().collect();
        tail.sort_unstable();
        tail.dedup();
        for &node in tail.iter().chain([&head]) {
            self.check_node(node)?;
        }
        if tail.is_empty() {
            return Err(Error::MalformedElement { label, reason: "empty tail" });
        }
        if tail.contains(&head) {
            return Err(Error::MalformedElement { label, reason: "head lies in the tail" });
        }
        self.push_element(label, Shape::Dyperedge(Dyperedge { tail, head }))
    }

    pub fn add_arc(&mut self, label: impl Into<String>, from: NodeId, to: NodeId) -> Result<ElementId> {
        self.add_dyperedge(label, [from], to)
    }

    pub fn add_hyperedge(
        &mut self,
        label: impl Into<String>,
        members: impl IntoIterator<Item = NodeId>,
    ) -> Result<ElementId> {
        let label = label.into();
        let mut members: Vec<NodeId> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &node in &members {
            self.check_node(node)?;
        }
        if members.len() < 2 {
            return Err(Error::MalformedElement { label, reason: "fewer than two members" });
        }
        self.push_element(label, Shape::Hyperedge(Hyperedge { members }))
    }

    fn push_element(&mut self, label: String, shape: Shape) -> Result<ElementId> {
        if self.element_lookup.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let id = ElementId(self.elements.len());
        self.element_lookup.insert(label.clone(), id);
        self.elements.push(Element { label, shape });
        Ok(id)
    }

    pub(crate) fn fresh_element_label(&self, base: &str) -> String {
        let mut label = String::from(base);
        while self.element_lookup.contains_key(&label) {
            label.push('\'');
        }
        label
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == NodeKind::Vertex).count()
    }

    pub fn root_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == NodeKind::Root).count()
    }

    pub fn kind(&self, node: NodeId) -> NodeKind {
        self.kinds[node.0]
    }

    pub fn is_root(&self, node: NodeId) -> bool {
        self.kinds[node.0] == NodeKind::Root
    }

    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node.0]
    }

    pub fn node(&self, label: &str) -> Option<NodeId> {
        self.node_lookup.get(label).copied()
    }

    pub fn element(&self, id: ElementId) -> &Element {
        &self.elements[id.0]
    }

    pub fn shape(&self, id: ElementId) -> &Shape {
        &self.elements[id.0].shape
    }

    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        self.element_lookup.get(label).copied()
    }

    pub fn elements(&self) -> impl Iterator<Item = (ElementId, &Element)> + '_ {
        self.elements.iter().enumerate().map(|(i, e)| (ElementId(i), e))
    }

    pub fn element_ids(&self) -> impl Iterator<Item = ElementId> {
        (0..self.elements.len()).map(ElementId)
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn vertices(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(|&n| !self.is_root(n))
    }

    /// Roots in node order; position `i` is matroid element `i`.
    pub fn roots(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(|&n| self.is_root(n))
    }

    /// Position of `node` among the roots, which is its index in the root matroid.
    pub fn root_position(&self, node: NodeId) -> Option<usize> {
        self.is_root(node).then(|| self.kinds[..node.0].iter().filter(|&&k| k == NodeKind::Root).count())
    }

    pub fn empty_set(&self) -> NodeSet {
        NodeSet::with_capacity(self.node_count())
    }

    pub fn set_of(&self, nodes: impl IntoIterator<Item = NodeId>) -> NodeSet {
        let mut set = self.empty_set();
        for node in nodes {
            set.insert(node.0);
        }
        set
    }

    pub fn vertex_set(&self) -> NodeSet {
        self.set_of(self.vertices())
    }

    pub fn root_set(&self) -> NodeSet {
        self.set_of(self.roots())
    }

    pub fn all_nodes(&self) -> NodeSet {
        let mut set = self.empty_set();
        set.insert_range(..);
        set
    }

    fn check_node(&self, node: NodeId) -> Result<()> {
        if node.0 < self.node_count() {
            Ok(())
        } else {
            Err(Error::UnknownNode(node.0))
        }
    }

    /// Rejects sets mentioning nodes beyond the hypergraph.
    pub fn check_set(&self, x: &NodeSet) -> Result<()> {
        match x.ones().find(|&n| n >= self.node_count()) {
            Some(n) => Err(Error::UnknownNode(n)),
            None => Ok(()),
        }
    }

    pub fn is_digraph(&self) -> bool {
        self.elements
            .iter()
            .all(|e| matches!(&e.shape, Shape::Dyperedge(a) if a.is_arc()))
    }

    /// `ρ⁻(X)`: dyperedges with head in `X` and some tail node outside it.
    pub fn entering_dyperedges(&self, x: &NodeSet) -> Result<Vec<ElementId>> {
        self.check_set(x)?;
        Ok(self
            .elements()
            .filter(|(_, e)| matches!(&e.shape, Shape::Dyperedge(a) if a.enters(x)))
            .map(|(id, _)| id)
            .collect())
    }

    /// `d⁻(X)`.
    pub fn in_degree(&self, x: &NodeSet) -> Result<usize> {
        Ok(self.entering_dyperedges(x)?.len())
    }

    /// `ρ⁺(X)`: dyperedges entering the complement of `X`.
    pub fn leaving_dyperedges(&self, x: &NodeSet) -> Result<Vec<ElementId>> {
        self.check_set(x)?;
        let mut complement = self.all_nodes();
        complement.difference_with(x);
        self.entering_dyperedges(&complement)
    }

    /// `d_E(X)`: hyperedges meeting both `X` and its complement.
    pub fn hyperedge_degree(&self, x: &NodeSet) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(&e.shape, Shape::Hyperedge(h) if h.crosses(x)))
            .count()
    }

    /// `d⁻(𝖷)`: dyperedges entering the biset.
    pub fn biset_in_degree(&self, biset: &Biset) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(&e.shape, Shape::Dyperedge(a) if a.enters_biset(biset)))
            .count()
    }

    /// `e_E`: hyperedges entering at least one of the parts, each counted once.
    pub fn hyperedges_entering_subpartition(&self, parts: &[NodeSet]) -> Result<usize> {
        let mut seen = self.empty_set();
        for part in parts {
            self.check_set(part)?;
            if let Some(node) = part.ones().find(|&n| seen.contains(n)) {
                return Err(Error::OverlappingParts(node));
            }
            seen.union_with(part);
        }
        Ok(self
            .elements
            .iter()
            .filter(|e| match &e.shape {
                Shape::Hyperedge(h) => parts.iter().any(|p| h.crosses(p)),
                Shape::Dyperedge(_) => false,
            })
            .count())
    }

    /// `N⁻(X)`: the union of `tail(a) − X` over the dyperedges `a` entering `X`.
    pub fn in_neighbours(&self, x: &NodeSet) -> NodeSet {
        let mut out = self.empty_set();
        for element in &self.elements {
            if let Shape::Dyperedge(a) = &element.shape {
                if a.enters(x) {
                    for t in a.tail.iter().filter(|t| !x.contains(t.0)) {
                        out.insert(t.0);
                    }
                }
            }
        }
        out
    }

    /// Heads of the dyperedges leaving `node`.
    pub fn out_neighbours(&self, node: NodeId) -> NodeSet {
        let mut out = self.empty_set();
        for element in &self.elements {
            if let Shape::Dyperedge(a) = &element.shape {
                if a.tail.contains(&node) {
                    out.insert(a.head.0);
                }
            }
        }
        out
    }

    /// `V_Z`: non-root nodes incident to some element of `z`.
    pub fn incident_vertices(&self, z: impl IntoIterator<Item = ElementId>) -> NodeSet {
        let mut out = self.empty_set();
        for id in z {
            for node in self.shape(id).endpoints().filter(|&n| !self.is_root(n)) {
                out.insert(node.0);
            }
        }
        out
    }

    /// `R_Z`: roots incident to some dyperedge of `z`.
    pub fn incident_roots(&self, z: impl IntoIterator<Item = ElementId>) -> NodeSet {
        let mut out = self.empty_set();
        for id in z {
            if let Shape::Dyperedge(a) = self.shape(id) {
                for node in a.tail.iter().chain([&a.head]).filter(|&&n| self.is_root(n)) {
                    out.insert(node.0);
                }
            }
        }
        out
    }

    /// Replaces each chosen element by the arc given for it.
    pub fn trim(&self, choices: &[(ElementId, Trim)]) -> Result<Vec<TrimmedArc>> {
        choices
            .iter()
            .map(|&(id, trim)| {
                if id.0 >= self.element_count() {
                    return Err(Error::UnknownElement(id.0));
                }
                let element = self.element(id);
                if !element.shape.admits(trim) {
                    return Err(Error::InvalidTrim(element.label.clone()));
                }
                Ok(TrimmedArc { element: id, from: trim.from, to: trim.to })
            })
            .collect()
    }

    /// Replaces every hyperedge `e` by its bundle `{(e − v, v) : v ∈ e}`.
    pub fn directed_extension(&self) -> DirectedExtension {
        let mut graph = MixedHypergraph {
            labels: self.labels.clone(),
            kinds: self.kinds.clone(),
            node_lookup: self.node_lookup.clone(),
            ..Default::default()
        };
        let mut origin = Vec::new();
        let mut bundle_of = Vec::new();
        for (id, element) in self.elements() {
            match &element.shape {
                Shape::Dyperedge(_) => {
                    graph.push_unchecked(element.label.clone(), element.shape.clone());
                    origin.push(id);
                    bundle_of.push(None);
                }
                Shape::Hyperedge(h) => {
                    for &head in &h.members {
                        let tail = h.members.iter().copied().filter(|&m| m != head).collect();
                        let label = format!("{}>{}", element.label, self.label(head));
                        graph.push_unchecked(label, Shape::Dyperedge(Dyperedge { tail, head }));
                        origin.push(id);
                        bundle_of.push(Some(id));
                    }
                }
            }
        }
        DirectedExtension { graph, origin, bundle_of }
    }

    /// Pushes an element whose shape is already known to be valid, priming the label on clash.
    pub(crate) fn push_unchecked(&mut self, label: String, shape: Shape) -> ElementId {
        let label = self.fresh_element_label(&label);
        let id = ElementId(self.elements.len());
        self.element_lookup.insert(label.clone(), id);
        self.elements.push(Element { label, shape });
        id
    }

    /// `H[X]`: the nodes of `keep` and every element completely inside them.
    pub fn induced(&self, keep: &NodeSet) -> Result<Subhypergraph> {
        self.check_set(keep)?;
        let mut graph = MixedHypergraph::new();
        let mut node_origin = Vec::new();
        let mut node_image = alloc::vec![None; self.node_count()];
        for node in self.nodes().filter(|n| keep.contains(n.0)) {
            let new = graph.add_node(self.labels[node.0].clone(), self.kinds[node.0])?;
            node_origin.push(node);
            node_image[node.0] = Some(new);
        }
        let mut element_origin = Vec::new();
        for (id, element) in self.elements() {
            if element.shape.endpoints().all(|n| keep.contains(n.0)) {
                let shape = map_shape(&element.shape, |n| node_image[n.0].expect("endpoint kept"));
                graph.push_element(element.label.clone(), shape)?;
                element_origin.push(id);
            }
        }
        Ok(Subhypergraph { graph, node_origin, element_origin, node_image })
    }

    /// `H − C` for a set `C` of non-root nodes.
    pub fn remove(&self, c: &NodeSet) -> Result<Subhypergraph> {
        self.check_set(c)?;
        if let Some(root) = c.ones().map(NodeId).find(|&n| self.is_root(n)) {
            return Err(Error::RootRemoval(self.label(root).into()));
        }
        let mut keep = self.all_nodes();
        keep.difference_with(c);
        self.induced(&keep)
    }

    /// Classifies the designated roots: no entering dyperedge, no hyperedge, and every leaving
    /// dyperedge has the root as its whole tail. Simple roots additionally leave at most once.
    pub fn check_rooted(&self) -> Rootedness {
        let mut simple = true;
        for root in self.roots() {
            let mut leaving = 0;
            for (id, element) in self.elements() {
                let offends = match &element.shape {
                    Shape::Dyperedge(a) => {
                        let in_tail = a.tail.contains(&root);
                        leaving += usize::from(in_tail);
                        a.head == root || (in_tail && a.tail.len() > 1)
                    }
                    Shape::Hyperedge(h) => h.members.contains(&root),
                };
                if offends {
                    return Rootedness::NotRooted { root, element: id };
                }
            }
            simple &= leaving <= 1;
        }
        if simple {
            Rootedness::SimplyRooted
        } else {
            Rootedness::Rooted
        }
    }

    pub fn require_rooted(&self) -> Result<()> {
        match self.check_rooted() {
            Rootedness::NotRooted { root, element } => Err(Error::NotRooted {
                root: self.label(root).into(),
                element: self.element(element).label.clone(),
            }),
            _ => Ok(()),
        }
    }

    pub fn require_simply_rooted(&self) -> Result<()> {
        self.require_rooted()?;
        for root in self.roots() {
            if self.out_degree_of(root) > 1 {
                return Err(Error::NotSimplyRooted(self.label(root).into()));
            }
        }
        Ok(())
    }

    fn out_degree_of(&self, node: NodeId) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(&e.shape, Shape::Dyperedge(a) if a.tail.contains(&node)))
            .count()
    }

    /// Display helper listing node labels of a set.
    pub fn show_set<'a>(&'a self, set: &'a NodeSet) -> impl fmt::Display + 'a {
        ShowSet { graph: self, set }
    }
}

pub(crate) fn map_shape(shape: &Shape, mut f: impl FnMut(NodeId) -> NodeId) -> Shape {
    match shape {
        Shape::Dyperedge(a) => {
            let mut tail: Vec<NodeId> = a.tail.iter().map(|&n| f(n)).collect();
            tail.sort_unstable();
            Shape::Dyperedge(Dyperedge { tail, head: f(a.head) })
        }
        Shape::Hyperedge(h) => {
            let mut members: Vec<NodeId> = h.members.iter().map(|&n| f(n)).collect();
            members.sort_unstable();
            Shape::Hyperedge(Hyperedge { members })
        }
    }
}

struct ShowSet<'a> {
    graph: &'a MixedHypergraph,
    set: &'a NodeSet,
}

impl fmt::Display for ShowSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.set.ones().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.graph.label(NodeId(n)))?;
        }
        f.write_str("}")
    }
}
