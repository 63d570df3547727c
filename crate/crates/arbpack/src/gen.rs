//! Seeded random instances, rooted by construction.

use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::{DyperedgeDoc, HyperedgeDoc, InstanceDoc, MatroidDoc, Rational};
use arbpack_core::Weight;

pub const MAX_VERTICES: usize = 24;
pub const MAX_ROOTS: usize = 32;
pub const MAX_ELEMENTS: usize = 1024;
pub const MAX_WEIGHT: i64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidFamily {
    Free,
    Uniform(usize),
    /// Roots are dealt round robin into one block per capacity.
    Partition(Vec<usize>),
}

impl FromStr for MatroidFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let number = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a count in `{s}`"));
        match kind {
            "free" if arg.is_empty() => Ok(MatroidFamily::Free),
            "uniform" => Ok(MatroidFamily::Uniform(number(arg)?)),
            "partition" if !arg.is_empty() => {
                Ok(MatroidFamily::Partition(arg.split(',').map(number).collect::<Result<_, _>>()?))
            }
            _ => Err(format!("unknown matroid family `{s}`; expected free, uniform:K or partition:C1,C2,...")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub vertices: usize,
    pub roots: usize,
    /// Including the arcs leaving roots.
    pub dyperedges: usize,
    pub hyperedges: usize,
    pub max_tail: usize,
    pub max_members: usize,
    pub matroid: MatroidFamily,
    pub weights: (i64, i64),
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            seed: 0,
            vertices: 4,
            roots: 2,
            dyperedges: 6,
            hyperedges: 1,
            max_tail: 2,
            max_members: 3,
            matroid: MatroidFamily::Free,
            weights: (-5, 5),
        }
    }
}

impl GenParams {
    pub fn check(&self) -> Result<(), String> {
        let within = |what: &str, value: usize, cap: usize| {
            if value > cap {
                Err(format!("{what} is {value}, at most {cap} is supported"))
            } else {
                Ok(())
            }
        };
        within("--vertices", self.vertices, MAX_VERTICES)?;
        within("--roots", self.roots, MAX_ROOTS)?;
        within("--dyperedges", self.dyperedges, MAX_ELEMENTS)?;
        within("--hyperedges", self.hyperedges, MAX_ELEMENTS)?;
        if self.max_tail == 0 || self.max_members < 2 {
            return Err("--max-tail must be at least 1 and --max-members at least 2".into());
        }
        let (lo, hi) = self.weights;
        if lo > hi || lo < -MAX_WEIGHT || hi > MAX_WEIGHT {
            return Err(format!("weight range {lo}:{hi} must be ordered and within ±{MAX_WEIGHT}"));
        }
        if self.dyperedges > 0 && (self.vertices == 0 || (self.vertices == 1 && self.roots == 0)) {
            return Err("dyperedges need a vertex with a root or a second vertex".into());
        }
        if self.hyperedges > 0 && self.vertices < 2 {
            return Err("hyperedges need at least two vertices".into());
        }
        match &self.matroid {
            MatroidFamily::Uniform(k) if *k > self.roots => Err(format!("uniform rank {k} exceeds the {} roots", self.roots)),
            MatroidFamily::Partition(caps) if caps.len() > self.roots.max(1) => {
                Err(format!("{} partition blocks for {} roots", caps.len(), self.roots))
            }
            _ => Ok(()),
        }
    }
}

/// Roots get one leaving arc each, in order, before any other dyperedge; later dyperedges leave
/// a random root a third of the time. Tails of the others are vertex sets, and hyperedges only
/// join vertices, so the result is always rooted.
pub fn generate(p: &GenParams) -> Result<InstanceDoc, String> {
    p.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let vertices: Vec<String> = (0..p.vertices).map(|i| format!("v{i}")).collect();
    let roots: Vec<String> = (0..p.roots).map(|i| format!("r{i}")).collect();
    let mut dyperedges = Vec::with_capacity(p.dyperedges);
    for i in 0..p.dyperedges {
        let from_root = !roots.is_empty() && (i < roots.len() || vertices.len() < 2 || rng.random_bool(1.0 / 3.0));
        let (tail, head) = if from_root {
            let root = if i < roots.len() { roots[i].clone() } else { roots.choose(&mut rng).unwrap().clone() };
            (vec![root], vertices.choose(&mut rng).unwrap().clone())
        } else {
            let head = rng.random_range(0..vertices.len());
            let size = rng.random_range(1..=p.max_tail.min(vertices.len() - 1));
            let mut others: Vec<usize> = (0..vertices.len()).filter(|&v| v != head).collect();
            let mut tail: Vec<usize> = Vec::with_capacity(size);
            for _ in 0..size {
                tail.push(others.swap_remove(rng.random_range(0..others.len())));
            }
            tail.sort_unstable();
            (tail.into_iter().map(|v| vertices[v].clone()).collect(), vertices[head].clone())
        };
        dyperedges.push(DyperedgeDoc { id: format!("a{i}"), tail, head });
    }
    let mut hyperedges = Vec::with_capacity(p.hyperedges);
    for i in 0..p.hyperedges {
        let size = rng.random_range(2..=p.max_members.min(vertices.len()));
        let mut pool: Vec<usize> = (0..vertices.len()).collect();
        let mut members: Vec<usize> = Vec::with_capacity(size);
        for _ in 0..size {
            members.push(pool.swap_remove(rng.random_range(0..pool.len())));
        }
        members.sort_unstable();
        hyperedges.push(HyperedgeDoc { id: format!("e{i}"), members: members.into_iter().map(|v| vertices[v].clone()).collect() });
    }
    let (lo, hi) = p.weights;
    let weights = dyperedges
        .iter()
        .map(|a| a.id.clone())
        .chain(hyperedges.iter().map(|e| e.id.clone()))
        .map(|id| (id, Rational(Weight::from_integer(rng.random_range(lo..=hi)))))
        .collect();
    let matroid = match &p.matroid {
        MatroidFamily::Free => MatroidDoc::Free,
        MatroidFamily::Uniform(k) => MatroidDoc::Uniform { rank: *k },
        MatroidFamily::Partition(caps) => MatroidDoc::Partition {
            blocks: (0..caps.len()).map(|b| roots.iter().skip(b).step_by(caps.len()).cloned().collect()).collect(),
            capacities: caps.clone(),
        },
    };
    Ok(InstanceDoc { vertices, roots, dyperedges, hyperedges, weights, matroid })
}
