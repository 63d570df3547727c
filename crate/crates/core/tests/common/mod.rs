#![allow(dead_code)]

use arbpack_core::matroid::{shared, ExplicitMatroid, FreeMatroid, Matroid, PartitionMatroid, UniformMatroid};
use arbpack_core::{ElementId, MixedHypergraph, NodeId, SharedMatroid, Shape, Weight};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub vertices: usize,
    pub roots: usize,
    /// Elements not leaving a root.
    pub inner: usize,
    /// Largest number of dyperedges leaving one root.
    pub root_arcs: usize,
    pub max_tail: usize,
    pub hyperedges: bool,
}

pub struct Instance {
    pub h: MixedHypergraph,
    pub m: SharedMatroid,
    pub weights: Vec<Weight>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, p: Params) -> MixedHypergraph {
    let mut h = MixedHypergraph::new();
    let roots: Vec<NodeId> = (0..p.roots).map(|i| h.add_root(format!("r{i}")).unwrap()).collect();
    let vs: Vec<NodeId> = (0..p.vertices).map(|i| h.add_vertex(format!("v{i}")).unwrap()).collect();
    let mut count = 0;
    if !vs.is_empty() {
        for &r in &roots {
            for _ in 0..rng.random_range(0..=p.root_arcs) {
                let v = *vs.choose(rng).unwrap();
                h.add_arc(format!("a{count}"), r, v).unwrap();
                count += 1;
            }
        }
    }
    if vs.len() < 2 {
        return h;
    }
    for _ in 0..p.inner {
        if p.hyperedges && rng.random_bool(0.35) {
            let size = rng.random_range(2..=vs.len().min(3));
            let members: Vec<NodeId> = vs.choose_multiple(rng, size).copied().collect();
            h.add_hyperedge(format!("e{count}"), members).unwrap();
        } else {
            let head = *vs.choose(rng).unwrap();
            let others: Vec<NodeId> = vs.iter().copied().filter(|&v| v != head).collect();
            let size = rng.random_range(1..=p.max_tail.min(others.len()));
            let tail: Vec<NodeId> = others.choose_multiple(rng, size).copied().collect();
            h.add_dyperedge(format!("a{count}"), tail, head).unwrap();
        }
        count += 1;
    }
    h
}

pub fn random_matroid(rng: &mut ChaCha8Rng, n: usize) -> SharedMatroid {
    match rng.random_range(0..4) {
        0 => shared(FreeMatroid::new(n)),
        1 => shared(UniformMatroid::new(n, rng.random_range(0..=n))),
        2 => {
            let blocks = rng.random_range(1..=n.max(1));
            let mut members = vec![Vec::new(); blocks];
            for e in 0..n {
                members[rng.random_range(0..blocks)].push(e);
            }
            let blocks: Vec<(Vec<usize>, usize)> =
                members.into_iter().map(|m| { let c = rng.random_range(0..=m.len()); (m, c) }).collect();
            shared(PartitionMatroid::new(n, &blocks).unwrap())
        }
        _ => {
            let edges: Vec<(usize, usize)> = (0..n).map(|_| (rng.random_range(0..3), rng.random_range(0..3))).collect();
            let g = Graphic::new(3, edges);
            let full = g.full_rank();
            let bases: Vec<Vec<usize>> = subsets(n).filter(|s| s.len() == full && g.rank_of(s) == full).collect();
            shared(ExplicitMatroid::new(n, &bases).unwrap())
        }
    }
}

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    (0..n).map(|_| Weight::from_integer(rng.random_range(lo..=hi))).collect()
}

pub fn random_instance(seed: u64, p: Params) -> Instance {
    let mut rng = rng(seed);
    let h = random_graph(&mut rng, p);
    let m = random_matroid(&mut rng, h.root_count());
    let weights = random_weights(&mut rng, h.element_count(), -5, 5);
    Instance { h, m, weights }
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&e| m >> e & 1 == 1).collect())
}

/// Cycle matroid of a multigraph, loops allowed.
#[derive(Clone, Debug)]
pub struct Graphic {
    nodes: usize,
    edges: Vec<(usize, usize)>,
}

impl Graphic {
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Self {
        Self { nodes, edges }
    }
}

impl Matroid for Graphic {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        let mut parent: Vec<usize> = (0..self.nodes).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        let mut rank = 0;
        for &e in x {
            let (a, b) = self.edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                rank += 1;
            }
        }
        rank
    }

    fn describe(&self) -> String {
        format!("graphic({} edges)", self.edges.len())
    }
}

/// `b(X)` straight from the definition.
pub fn brute_b(h: &MixedHypergraph, m: &dyn Matroid, x: &[usize]) -> i64 {
    let k = m.full_rank() as i64;
    let mut vs = Vec::new();
    let mut roots = Vec::new();
    for &e in x {
        let shape = h.shape(ElementId(e));
        for n in shape.endpoints() {
            if h.is_root(n) {
                if matches!(shape, Shape::Dyperedge(_)) {
                    roots.push(h.root_position(n).unwrap());
                }
            } else {
                vs.push(n);
            }
        }
    }
    vs.sort();
    vs.dedup();
    roots.sort();
    roots.dedup();
    k * (vs.len() as i64 - 1) + m.rank_of(&roots) as i64
}

/// Minimum of `b(Y) − |Y|` over all nonempty `Y ⊆ X`.
pub fn brute_min_deficit(h: &MixedHypergraph, m: &dyn Matroid, x: &[usize]) -> Option<i64> {
    (1u64..1 << x.len())
        .map(|mask| {
            let y: Vec<usize> = (0..x.len()).filter(|&i| mask >> i & 1 == 1).map(|i| x[i]).collect();
            brute_b(h, m, &y) - y.len() as i64
        })
        .min()
}

pub fn brute_independent(h: &MixedHypergraph, m: &dyn Matroid, x: &[usize]) -> bool {
    brute_min_deficit(h, m, x).is_none_or(|d| d >= 0)
}

/// Smallest dependent subset of `I + x` according to `independent`.
pub fn brute_circuit(independent: impl Fn(&[usize]) -> bool, i: &[usize], x: usize) -> Option<Vec<usize>> {
    let mut all = i.to_vec();
    all.push(x);
    all.sort();
    if independent(&all) {
        return None;
    }
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u64..1 << all.len() {
        let s: Vec<usize> = (0..all.len()).filter(|&j| mask >> j & 1 == 1).map(|j| all[j]).collect();
        if !independent(&s) && best.as_ref().is_none_or(|b| s.len() < b.len()) {
            best = Some(s);
        }
    }
    best
}
