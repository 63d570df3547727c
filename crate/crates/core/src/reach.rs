//! Reachability by mixed hyperpaths, strongly connected components and sink components.
//!
//! A dyperedge carries reachability from any of its tail nodes to its head, and a hyperedge
//! from any member to all others, since a hyperpath may trim each element as it likes.

use alloc::{vec, vec::Vec};

use crate::error::{Error, Result};
use crate::hypercore::{ElementId, MixedHypergraph, NodeId, NodeSet, Shape};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Backward,
}

/// `X` together with `U_X` and `P_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachabilityClosure {
    pub source: NodeSet,
    pub forward: NodeSet,
    pub backward: NodeSet,
}

pub fn closure(h: &MixedHypergraph, x: &NodeSet) -> Result<ReachabilityClosure> {
    Ok(ReachabilityClosure {
        source: x.clone(),
        forward: forward_reachable(h, x)?,
        backward: backward_reachable(h, x)?,
    })
}

/// `U_X`: everything reachable from some node of `X`.
pub fn forward_reachable(h: &MixedHypergraph, x: &NodeSet) -> Result<NodeSet> {
    h.check_set(x)?;
    Ok(propagate(h, x, None, Direction::Forward))
}

/// `P_X`: everything from which some node of `X` is reachable.
pub fn backward_reachable(h: &MixedHypergraph, x: &NodeSet) -> Result<NodeSet> {
    h.check_set(x)?;
    Ok(propagate(h, x, None, Direction::Backward))
}

/// Worklist closure. With `within`, only elements whose endpoints all lie in it are used, which
/// is the closure in the induced sub-hypergraph.
fn propagate(h: &MixedHypergraph, x: &NodeSet, within: Option<&NodeSet>, dir: Direction) -> NodeSet {
    let n = h.node_count();
    // Elements triggered by reaching a node.
    let mut triggers: Vec<Vec<ElementId>> = vec![Vec::new(); n];
    for (id, element) in h.elements() {
        if let Some(allowed) = within {
            if !element.shape.endpoints().all(|v| allowed.contains(v.0)) {
                continue;
            }
        }
        match (&element.shape, dir) {
            (Shape::Dyperedge(a), Direction::Forward) => a.tail.iter().for_each(|t| triggers[t.0].push(id)),
            (Shape::Dyperedge(a), Direction::Backward) => triggers[a.head.0].push(id),
            (Shape::Hyperedge(e), _) => e.members.iter().for_each(|m| triggers[m.0].push(id)),
        }
    }
    let mut reached = NodeSet::with_capacity(n);
    let mut fired = vec![false; h.element_count()];
    let mut stack: Vec<usize> = Vec::new();
    for v in x.ones() {
        reached.insert(v);
        stack.push(v);
    }
    while let Some(v) = stack.pop() {
        for &id in &triggers[v] {
            if core::mem::replace(&mut fired[id.0], true) {
                continue;
            }
            let targets: &[NodeId] = match (h.shape(id), dir) {
                (Shape::Dyperedge(a), Direction::Forward) => core::slice::from_ref(&a.head),
                (Shape::Dyperedge(a), Direction::Backward) => &a.tail,
                (Shape::Hyperedge(e), _) => &e.members,
            };
            for t in targets {
                if !reached.put(t.0) {
                    stack.push(t.0);
                }
            }
        }
    }
    reached
}

/// Mutual-reachability classes of all nodes, ordered by smallest member.
pub fn strongly_connected_components(h: &MixedHypergraph) -> Vec<NodeSet> {
    components_within(h, &h.all_nodes())
}

fn components_within(h: &MixedHypergraph, allowed: &NodeSet) -> Vec<NodeSet> {
    let forward: Vec<NodeSet> = (0..h.node_count())
        .map(|v| {
            if allowed.contains(v) {
                propagate(h, &h.set_of([NodeId(v)]), Some(allowed), Direction::Forward)
            } else {
                NodeSet::new()
            }
        })
        .collect();
    let mut assigned = NodeSet::with_capacity(h.node_count());
    let mut classes = Vec::new();
    for v in allowed.ones() {
        if assigned.contains(v) {
            continue;
        }
        let mut class = h.empty_set();
        for u in forward[v].ones().filter(|&u| forward[u].contains(v)) {
            class.insert(u);
        }
        assigned.union_with(&class);
        classes.push(class);
    }
    classes
}

/// Strongly connected components of `H − R`, in the ids of `H`, ordered by smallest member.
pub fn vertex_components(h: &MixedHypergraph) -> Vec<NodeSet> {
    components_within(h, &h.vertex_set())
}

/// A strongly connected component of `H − R` that no dyperedge or hyperedge of `H` leaves.
/// Among several, the one with the smallest member.
pub fn sink_component(h: &MixedHypergraph) -> Result<NodeSet> {
    let vertices = h.vertex_set();
    if vertices.is_clear() {
        return Err(Error::NoComponent);
    }
    vertex_components(h)
        .into_iter()
        .find(|c| is_closed(h, c))
        .ok_or(Error::NoComponent)
}

/// No dyperedge with a tail node in `c` leaves it and no hyperedge crosses it.
fn is_closed(h: &MixedHypergraph, c: &NodeSet) -> bool {
    h.elements().all(|(_, element)| match &element.shape {
        Shape::Dyperedge(a) => c.contains(a.head.0) || a.tail.iter().all(|t| !c.contains(t.0)),
        Shape::Hyperedge(e) => !e.crosses(c),
    })
}
