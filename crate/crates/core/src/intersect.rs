//! Matroid intersection by augmenting paths in the exchange graph.
//!
//! For a common independent set `I`, the exchange graph has an arc `y → x` when
//! `I − y + x ∈ M1` and an arc `x → y` when `I − y + x ∈ M2` (`y ∈ I`, `x ∉ I`). Paths run from
//! `{x : I + x ∈ M1}` to `{x : I + x ∈ M2}`. Both directions are read off fundamental circuits,
//! so each round costs two circuit queries per element outside `I`.

use alloc::{collections::VecDeque, format, vec, vec::Vec};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::Weight;

struct ExchangeGraph {
    sources: Vec<bool>,
    sinks: Vec<bool>,
    out: Vec<Vec<usize>>,
}

fn exchange_graph(m1: &dyn Matroid, m2: &dyn Matroid, chosen: &[bool]) -> ExchangeGraph {
    let n = chosen.len();
    let current: Vec<usize> = (0..n).filter(|&e| chosen[e]).collect();
    let mut sources = vec![false; n];
    let mut sinks = vec![false; n];
    let mut out = vec![Vec::new(); n];
    for x in (0..n).filter(|&e| !chosen[e]) {
        match m1.circuit_of(&current, x) {
            None => sources[x] = true,
            Some(c) => c.into_iter().filter(|&y| y != x).for_each(|y| out[y].push(x)),
        }
        match m2.circuit_of(&current, x) {
            None => sinks[x] = true,
            Some(c) => out[x].extend(c.into_iter().filter(|&y| y != x)),
        }
    }
    for arcs in &mut out {
        arcs.sort_unstable();
    }
    ExchangeGraph { sources, sinks, out }
}

fn check_ground(m1: &dyn Matroid, m2: &dyn Matroid) -> Result<usize> {
    if m1.ground_size() != m2.ground_size() {
        return Err(Error::GroundMismatch(m1.ground_size(), m2.ground_size()));
    }
    Ok(m1.ground_size())
}

fn flip(chosen: &mut [bool], path: &[usize]) {
    for &e in path {
        chosen[e] = !chosen[e];
    }
}

fn finish(m1: &dyn Matroid, m2: &dyn Matroid, chosen: &[bool]) -> Result<Vec<usize>> {
    let set: Vec<usize> = (0..chosen.len()).filter(|&e| chosen[e]).collect();
    if m1.rank_of(&set) != set.len() || m2.rank_of(&set) != set.len() {
        return Err(Error::Contract(format!("augmentation produced a dependent set {set:?}")));
    }
    Ok(set)
}

/// A common independent set of maximum size, grown along shortest augmenting paths.
pub fn max_common_independent(m1: &dyn Matroid, m2: &dyn Matroid) -> Result<Vec<usize>> {
    let n = check_ground(m1, m2)?;
    let mut chosen = vec![false; n];
    loop {
        let g = exchange_graph(m1, m2, &chosen);
        let mut pred = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for s in (0..n).filter(|&e| g.sources[e]) {
            seen[s] = true;
            queue.push_back(s);
        }
        let mut end = None;
        while let Some(u) = queue.pop_front() {
            if g.sinks[u] {
                end = Some(u);
                break;
            }
            for &v in &g.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    pred[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let Some(mut node) = end else {
            return finish(m1, m2, &chosen);
        };
        let mut path = vec![node];
        while pred[node] != usize::MAX {
            node = pred[node];
            path.push(node);
        }
        flip(&mut chosen, &path);
    }
}

/// A minimum-weight common independent set of exactly `size` elements, or `None` if no common
/// independent set is that large. Weights may be negative.
///
/// Each round augments along a path minimising total weight change, then the number of
/// elements, then ending at the smallest sink; every intermediate set is of minimum weight
/// among the common independent sets of its size.
pub fn min_weight_common_independent(
    m1: &dyn Matroid,
    m2: &dyn Matroid,
    weights: &[Weight],
    size: usize,
) -> Result<Option<Vec<usize>>> {
    let n = check_ground(m1, m2)?;
    if weights.len() != n {
        return Err(Error::WeightCount { expected: n, got: weights.len() });
    }
    let mut chosen = vec![false; n];
    for _ in 0..size {
        let g = exchange_graph(m1, m2, &chosen);
        let length: Vec<Weight> = (0..n).map(|e| if chosen[e] { -weights[e] } else { weights[e] }).collect();
        let mut dist: Vec<Option<(Weight, usize)>> = vec![None; n];
        let mut pred = vec![usize::MAX; n];
        for s in (0..n).filter(|&e| g.sources[e]) {
            dist[s] = Some((length[s], 1));
        }
        let mut rounds = 0;
        loop {
            let mut changed = false;
            for u in 0..n {
                let Some((du, hu)) = dist[u] else { continue };
                for &v in &g.out[u] {
                    let candidate = (du + length[v], hu + 1);
                    if dist[v].is_none_or(|d| candidate < d) {
                        dist[v] = Some(candidate);
                        pred[v] = u;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
            rounds += 1;
            if rounds > n {
                return Err(Error::Contract("negative cycle in the exchange graph".into()));
            }
        }
        let best = (0..n)
            .filter(|&e| g.sinks[e])
            .filter_map(|e| dist[e].map(|d| (d, e)))
            .min();
        let Some((_, mut node)) = best else {
            return Ok(None);
        };
        let mut path = vec![node];
        while pred[node] != usize::MAX {
            node = pred[node];
            path.push(node);
        }
        flip(&mut chosen, &path);
    }
    finish(m1, m2, &chosen).map(Some)
}

pub fn total_weight(weights: &[Weight], set: &[usize]) -> Weight {
    set.iter().fold(Weight::zero(), |acc, &e| acc + weights[e])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{FreeMatroid, PartitionMatroid, UniformMatroid};

    fn w(values: &[i64]) -> Vec<Weight> {
        values.iter().map(|&v| Weight::from_integer(v)).collect()
    }

    #[test]
    fn maximum_sizes() {
        let free = FreeMatroid::new(2);
        assert_eq!(max_common_independent(&free, &free).unwrap(), [0, 1]);
        assert_eq!(max_common_independent(&free, &UniformMatroid::new(2, 1)).unwrap().len(), 1);
        let p = PartitionMatroid::new(3, &[(vec![0, 1], 1), (vec![2], 1)]).unwrap();
        let best = max_common_independent(&p, &UniformMatroid::new(3, 2)).unwrap();
        assert_eq!(best.len(), 2);
        assert!(best.contains(&2));
    }

    #[test]
    fn weighted() {
        let free = FreeMatroid::new(2);
        let u1 = UniformMatroid::new(2, 1);
        assert_eq!(min_weight_common_independent(&free, &u1, &w(&[3, 1]), 1).unwrap(), Some(vec![1]));
        assert_eq!(min_weight_common_independent(&free, &u1, &w(&[3, 1]), 0).unwrap(), Some(vec![]));
        assert_eq!(min_weight_common_independent(&free, &free, &w(&[-2, 5]), 1).unwrap(), Some(vec![0]));
        assert_eq!(min_weight_common_independent(&free, &u1, &w(&[3, 1]), 2).unwrap(), None);
    }

    #[test]
    fn exact_size_keeps_positive_weights() {
        let free = FreeMatroid::new(3);
        let got = min_weight_common_independent(&free, &free, &w(&[4, -1, 2]), 3).unwrap().unwrap();
        assert_eq!(total_weight(&w(&[4, -1, 2]), &got), Weight::from_integer(5));
    }

    #[test]
    fn mismatched_inputs() {
        let a = FreeMatroid::new(2);
        let b = FreeMatroid::new(3);
        assert_eq!(max_common_independent(&a, &b), Err(Error::GroundMismatch(2, 3)));
        assert!(min_weight_common_independent(&a, &a, &w(&[1]), 1).is_err());
    }
}
