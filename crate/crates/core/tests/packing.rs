mod common;

use arbpack_core::engine::solve;
use arbpack_core::verify::{
    check_biset_condition, check_condition, check_digraph_condition, cross_check, validate_packing, Caps, Condition, Verdict,
};
use arbpack_core::{MixedHypergraph, NodeId, Outcome, PackingMode};
use common::*;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Reachability requirements are met too easily on sparse instances, so those modes get more
/// roots competing for fewer elements.
fn small(rng: &mut ChaCha8Rng, digraph: bool, mode: PackingMode) -> Instance {
    let crowded = matches!(mode, PackingMode::Reachability | PackingMode::MatroidReachability);
    let p = Params {
        vertices: rng.random_range(1..=3),
        roots: rng.random_range(if crowded { 2..=4 } else { 1..=4 }),
        inner: rng.random_range(1..=if crowded { 3 } else { 5 }),
        root_arcs: if crowded { 3 } else { 2 },
        max_tail: if digraph { 1 } else { 3 },
        hyperedges: !digraph,
    };
    let h = random_graph(rng, p);
    let m = random_matroid(rng, h.root_count());
    let weights = random_weights(rng, h.element_count(), -3, 5);
    Instance { h, m, weights }
}

fn agree(seed: u64, mode: PackingMode) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let digraph = r.random_bool(0.4);
    let inst = small(&mut r, digraph, mode);
    prop_assume!(inst.h.element_count() <= Caps::default().elements);
    let report = cross_check(&inst.h, inst.m.clone(), &inst.weights, mode, Caps::default()).unwrap();
    prop_assert!(report.agrees(), "{:?} on {:?} with {}: {:?}", mode, inst.h, inst.m.describe(), report.problems);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(160) })]

    #[test]
    fn spanning_agrees_with_exhaustive_search(seed in any::<u64>()) {
        agree(seed, PackingMode::Spanning)?;
    }

    #[test]
    fn reachability_agrees_with_exhaustive_search(seed in any::<u64>()) {
        agree(seed, PackingMode::Reachability)?;
    }

    #[test]
    fn matroid_based_agrees_with_exhaustive_search(seed in any::<u64>()) {
        agree(seed, PackingMode::MatroidBased)?;
    }

    #[test]
    fn matroid_reachability_agrees_with_exhaustive_search(seed in any::<u64>()) {
        agree(seed, PackingMode::MatroidReachability)?;
    }

    #[test]
    fn solver_matches_the_condition_on_larger_instances(seed in any::<u64>()) {
        let mut r = rng(seed);
        let digraph = r.random_bool(0.4);
        let p = Params { vertices: 5, roots: r.random_range(1..=4), inner: r.random_range(4..=12), root_arcs: 2, max_tail: if digraph { 1 } else { 3 }, hyperedges: !digraph };
        let h = random_graph(&mut r, p);
        prop_assume!(h.node_count() <= Caps::default().nodes);
        let m = random_matroid(&mut r, h.root_count());
        let w = random_weights(&mut r, h.element_count(), -3, 5);
        for mode in PackingMode::ALL {
            let outcome = solve(&h, m.clone(), &w, mode).unwrap();
            let condition = check_condition(&h, Some(&*m), mode, Caps::default()).unwrap();
            prop_assert_eq!(outcome.is_feasible(), condition.holds(), "{:?} on {:?} with {}", mode, h, m.describe());
            if let Some(p) = outcome.packing() {
                prop_assert_eq!(validate_packing(&h, Some(&*m), p, mode).unwrap(), Verdict::Holds);
            }
        }
    }

    #[test]
    fn cut_and_biset_conditions_agree_on_digraphs(seed in any::<u64>()) {
        let mut r = rng(seed);
        let inst = small(&mut r, true, PackingMode::Spanning);
        let caps = Caps::default();
        let pairs = [
            (Condition::SpanningCut, Condition::MatroidBisets, false),
            (Condition::MatroidCut, Condition::MatroidBisets, true),
            (Condition::ReachabilityCut, Condition::ReachabilityBisets, false),
            (Condition::MatroidReachabilityCut, Condition::ReachabilityBisets, true),
        ];
        let free = arbpack_core::matroid::FreeMatroid::new(inst.h.root_count());
        for (cut, bisets, with_matroid) in pairs {
            let m: &dyn arbpack_core::Matroid = if with_matroid { &*inst.m } else { &free };
            let a = check_digraph_condition(&inst.h, Some(m), cut, caps).unwrap();
            let b = check_biset_condition(&inst.h, Some(m), bisets, caps).unwrap();
            prop_assert_eq!(a.holds(), b.holds(), "{:?} vs {:?} on {:?}", cut, bisets, inst.h);
            for v in [a.violation(), b.violation()].into_iter().flatten() {
                prop_assert_eq!(v.reevaluate(&inst.h, Some(m)).unwrap(), (v.lhs, v.rhs));
                prop_assert!(v.lhs < v.rhs);
            }
        }
    }

    #[test]
    fn extra_elements_keep_spanning_packings_feasible(seed in any::<u64>()) {
        let mut r = rng(seed);
        let digraph = r.random_bool(0.5);
        let inst = small(&mut r, digraph, PackingMode::Spanning);
        let vs: Vec<NodeId> = inst.h.vertices().collect();
        let roots: Vec<NodeId> = inst.h.roots().collect();
        for mode in [PackingMode::Spanning, PackingMode::MatroidBased] {
            let before = solve(&inst.h, inst.m.clone(), &inst.weights, mode).unwrap();
            let mut bigger: MixedHypergraph = inst.h.clone();
            let head = vs[r.random_range(0..vs.len())];
            let mut tail = vs[r.random_range(0..vs.len())];
            if tail == head || r.random_bool(0.5) {
                tail = roots[r.random_range(0..roots.len())];
            }
            bigger.add_arc("extra", tail, head).unwrap();
            let mut weights = inst.weights.clone();
            weights.push(arbpack_core::Weight::from_integer(1));
            let after = solve(&bigger, inst.m.clone(), &weights, mode).unwrap();
            if before.is_feasible() {
                prop_assert!(after.is_feasible());
                // The old packing is still available, so the optimum cannot get worse.
                if let (Outcome::Optimal { weight: w0, .. }, Outcome::Optimal { weight: w1, packing }) = (&before, &after) {
                    prop_assert!(w1 <= w0);
                    prop_assert_eq!(validate_packing(&bigger, Some(&*inst.m), packing, mode).unwrap(), Verdict::Holds);
                }
            }
        }
    }
}

/// The generator must produce both outcomes, each at least one time in twenty, for the agreement tests to mean something.
#[test]
fn generator_mixes_feasible_and_infeasible() {
    for mode in PackingMode::ALL {
        let (mut feasible, mut total, mut arcs) = (0, 0, 0);
        for seed in 0..400 {
            let mut r = rng(seed);
            let digraph = r.random_bool(0.4);
            let inst = small(&mut r, digraph, mode);
            if inst.h.element_count() > Caps::default().elements {
                continue;
            }
            let outcome = solve(&inst.h, inst.m.clone(), &inst.weights, mode).unwrap();
            total += 1;
            if let Some(p) = outcome.packing() {
                feasible += 1;
                arcs += p.arborescences.iter().map(|a| a.arcs.len()).sum::<usize>();
            }
        }
        eprintln!("{}: {feasible}/{total} feasible, {arcs} arcs used", mode.name());
        assert!(feasible * 20 >= total && feasible * 20 <= total * 19, "{}: {feasible}/{total}", mode.name());
        assert!(arcs >= feasible, "{}: feasible packings are mostly trivial", mode.name());
    }
}
