mod common;

use arbpack_core::reach::{backward_reachable, forward_reachable, sink_component, strongly_connected_components, vertex_components};
use arbpack_core::{MixedHypergraph, NodeId, NodeSet, Shape, Trim};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn params(hyperedges: bool) -> Params {
    Params { vertices: 6, roots: 2, inner: 9, root_arcs: 2, max_tail: 3, hyperedges }
}

/// Reachability by breadth-first search over every trimming of every element.
fn reach_oracle(h: &MixedHypergraph, from: usize) -> Vec<bool> {
    let n = h.node_count();
    let mut arcs = vec![Vec::new(); n];
    for (_, e) in h.elements() {
        for u in e.shape.endpoints() {
            for v in e.shape.endpoints() {
                if e.shape.admits(Trim { from: u, to: v }) {
                    arcs[u.0].push(v.0);
                }
            }
        }
    }
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for &v in &arcs[u] {
            if !std::mem::replace(&mut seen[v], true) {
                stack.push(v);
            }
        }
    }
    seen
}

fn random_set(h: &MixedHypergraph, rng: &mut rand_chacha::ChaCha8Rng) -> NodeSet {
    h.set_of(h.nodes().filter(|_| rng.random_bool(0.4)))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn forward_and_backward_are_dual(seed in any::<u64>()) {
        let h = random_graph(&mut rng(seed), params(true));
        let reach: Vec<Vec<bool>> = (0..h.node_count()).map(|v| reach_oracle(&h, v)).collect();
        for u in h.nodes() {
            let fwd = forward_reachable(&h, &h.set_of([u])).unwrap();
            let bwd = backward_reachable(&h, &h.set_of([u])).unwrap();
            for v in h.nodes() {
                prop_assert_eq!(fwd.contains(v.0), reach[u.0][v.0]);
                prop_assert_eq!(bwd.contains(v.0), reach[v.0][u.0]);
            }
        }
    }

    #[test]
    fn closures_are_closed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = random_graph(&mut r, params(true));
        let x = random_set(&h, &mut r);
        let fwd = forward_reachable(&h, &x).unwrap();
        let bwd = backward_reachable(&h, &x).unwrap();
        prop_assert!(x.is_subset(&fwd) && x.is_subset(&bwd));
        prop_assert!(h.leaving_dyperedges(&fwd).unwrap().is_empty());
        prop_assert_eq!(h.hyperedge_degree(&fwd), 0);
        prop_assert!(h.entering_dyperedges(&bwd).unwrap().is_empty());
        prop_assert_eq!(h.hyperedge_degree(&bwd), 0);
    }

    #[test]
    fn components_are_mutual_reachability_classes(seed in any::<u64>()) {
        let h = random_graph(&mut rng(seed), params(true));
        let reach: Vec<Vec<bool>> = (0..h.node_count()).map(|v| reach_oracle(&h, v)).collect();
        let sccs = strongly_connected_components(&h);
        let mut covered = h.empty_set();
        for c in &sccs {
            prop_assert!(covered.is_disjoint(c));
            covered.union_with(c);
            for u in c.ones() {
                for v in h.nodes() {
                    prop_assert_eq!(c.contains(v.0), reach[u][v.0] && reach[v.0][u]);
                }
            }
        }
        prop_assert_eq!(covered, h.all_nodes());
        // Roots are entered by nothing, so removing them leaves the vertex classes intact.
        let vertex_classes: Vec<NodeSet> =
            sccs.into_iter().filter(|c| c.ones().all(|v| !h.is_root(NodeId(v)))).collect();
        prop_assert_eq!(vertex_components(&h), vertex_classes);
    }

    #[test]
    fn sink_component_is_closed(seed in any::<u64>()) {
        let h = random_graph(&mut rng(seed), params(true));
        let c = sink_component(&h).unwrap();
        prop_assert!(vertex_components(&h).contains(&c));
        prop_assert!(h.leaving_dyperedges(&c).unwrap().is_empty());
        prop_assert_eq!(h.hyperedge_degree(&c), 0);
        prop_assert_eq!(forward_reachable(&h, &c).unwrap(), c.clone());
        // Removing the component keeps every other vertex and every element outside it.
        let rest = h.remove(&c).unwrap();
        prop_assert_eq!(rest.graph.vertex_count(), h.vertex_count() - c.count_ones(..));
        let outside = h.elements().filter(|(_, e)| e.shape.endpoints().all(|n| !c.contains(n.0))).count();
        prop_assert_eq!(rest.graph.element_count(), outside);
    }

    #[test]
    fn leaving_is_entering_the_complement(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = random_graph(&mut r, params(true));
        let x = random_set(&h, &mut r);
        let mut complement = h.all_nodes();
        complement.difference_with(&x);
        prop_assert_eq!(h.leaving_dyperedges(&x).unwrap(), h.entering_dyperedges(&complement).unwrap());
        prop_assert_eq!(h.hyperedge_degree(&x), h.hyperedge_degree(&complement));
    }

    #[test]
    fn trimmings_are_counted(seed in any::<u64>()) {
        let h = random_graph(&mut rng(seed), params(true));
        for (_, e) in h.elements() {
            let admitted = h.nodes()
                .flat_map(|u| h.nodes().map(move |v| Trim { from: u, to: v }))
                .filter(|&t| e.shape.admits(t))
                .count();
            let expected = match &e.shape {
                Shape::Dyperedge(a) => a.tail.len(),
                Shape::Hyperedge(m) => m.members.len() * (m.members.len() - 1),
            };
            prop_assert_eq!(admitted, expected);
        }
    }

    #[test]
    fn extension_is_a_bundle_bijection(seed in any::<u64>()) {
        let h = random_graph(&mut rng(seed), params(true));
        let ext = h.directed_extension();
        let expected: usize = h.elements().map(|(_, e)| match &e.shape {
            Shape::Dyperedge(_) => 1,
            Shape::Hyperedge(m) => m.members.len(),
        }).sum();
        prop_assert_eq!(ext.graph.element_count(), expected);
        prop_assert!(ext.graph.elements().all(|(_, e)| matches!(e.shape, Shape::Dyperedge(_))));
        for (id, e) in ext.graph.elements() {
            let source = &h.element(ext.origin[id.0]).shape;
            match source {
                Shape::Dyperedge(_) => {
                    prop_assert_eq!(&e.shape, source);
                    prop_assert_eq!(ext.bundle_of[id.0], None);
                }
                Shape::Hyperedge(m) => {
                    let a = e.shape.as_dyperedge().unwrap();
                    let mut all = a.tail.clone();
                    all.push(a.head);
                    all.sort();
                    prop_assert_eq!(&all, &m.members);
                    prop_assert_eq!(ext.bundle_of[id.0], Some(ext.origin[id.0]));
                }
            }
        }
        // One orientation per member: distinct heads within a bundle.
        let mut pairs: Vec<_> = ext.graph.elements()
            .filter(|(id, _)| ext.bundle_of[id.0].is_some())
            .map(|(id, e)| (ext.origin[id.0], e.shape.as_dyperedge().unwrap().head))
            .collect();
        let before = pairs.len();
        pairs.sort();
        pairs.dedup();
        prop_assert_eq!(pairs.len(), before);
    }

    #[test]
    fn splitting_a_part_never_lowers_the_hyperedge_count(seed in any::<u64>()) {
        let mut r = rng(seed);
        let h = random_graph(&mut r, params(true));
        let label: Vec<usize> = h.nodes().map(|_| r.random_range(0..4)).collect();
        let parts: Vec<NodeSet> = (0..3)
            .map(|p| h.set_of(h.nodes().filter(|v| label[v.0] == p)))
            .filter(|s| !s.is_clear())
            .collect();
        prop_assume!(!parts.is_empty());
        let before = h.hyperedges_entering_subpartition(&parts).unwrap();
        let mut split = parts.clone();
        let first = split.remove(0);
        let (a, b): (Vec<usize>, Vec<usize>) = first.ones().partition(|_| r.random_bool(0.5));
        for side in [a, b] {
            if !side.is_empty() {
                split.push(h.set_of(side.into_iter().map(NodeId)));
            }
        }
        prop_assert!(h.hyperedges_entering_subpartition(&split).unwrap() >= before);
    }
}
