//! The count matroid of a simply matroid-rooted mixed hypergraph and its bundle extension.
//!
//! With `k = r_M(R)`, a nonempty element set `X` is assigned
//! `b(X) = k(|V_X| − 1) + r_M(R_X)`, and `X` is independent when `b(Y) ≥ |Y|` for every
//! nonempty `Y ⊆ X`.
//!
//! Independence is decided by enumerating vertex sets `V' ⊆ V_X` and the closed sets
//! `Y(V') = {x ∈ X : every non-root endpoint of x lies in V'}`. In a simply rooted hypergraph an
//! element contributes at most one root, so adding it to a set whose vertex span already covers
//! its non-root endpoints never increases `b(Y) − |Y|`; some minimiser is therefore closed.
//! The cost is exponential in `|V_X|`, which is capped by [`TanigawaMatroid::MAX_VERTICES`].

use alloc::{collections::BTreeMap, format, string::String, vec, vec::Vec};
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::hypercore::{DirectedExtension, ElementId, MixedHypergraph, Shape};
use crate::matroid::{normalize, Matroid, SharedMatroid};

/// A nonempty `Y ⊆ X` with `b(Y) < |Y|`, minimising `b(Y) − |Y|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub set: Vec<ElementId>,
    pub b: i64,
}

#[derive(Debug)]
pub struct TanigawaMatroid {
    matroid: SharedMatroid,
    k: usize,
    /// Non-root endpoints, as positions among the vertices.
    vertices_of: Vec<Vec<usize>>,
    /// Position in the root matroid of the root a dyperedge leaves from.
    root_of: Vec<Option<usize>>,
}

/// One query's elements, with vertices renumbered to bits.
struct Local<'a> {
    elements: &'a [usize],
    masks: Vec<u32>,
    full: u32,
}

impl TanigawaMatroid {
    pub const MAX_VERTICES: usize = 24;

    /// `matroid` lives on the roots of `h`, in root order.
    pub fn new(h: &MixedHypergraph, matroid: SharedMatroid) -> Result<Self> {
        h.require_simply_rooted()?;
        if matroid.ground_size() != h.root_count() {
            return Err(Error::GroundMismatch(matroid.ground_size(), h.root_count()));
        }
        let vertex_count = h.vertex_count();
        if vertex_count > Self::MAX_VERTICES {
            return Err(Error::CapExceeded { what: "vertex count", size: vertex_count, cap: Self::MAX_VERTICES });
        }
        let mut position = vec![usize::MAX; h.node_count()];
        for (i, v) in h.vertices().enumerate() {
            position[v.0] = i;
        }
        let mut vertices_of = Vec::with_capacity(h.element_count());
        let mut root_of = Vec::with_capacity(h.element_count());
        for (_, element) in h.elements() {
            let mut vs: Vec<usize> =
                element.shape.endpoints().filter(|&n| !h.is_root(n)).map(|n| position[n.0]).collect();
            vs.sort_unstable();
            vertices_of.push(vs);
            root_of.push(match &element.shape {
                Shape::Dyperedge(a) => a.tail.iter().find_map(|&t| h.root_position(t)),
                Shape::Hyperedge(_) => None,
            });
        }
        let k = matroid.full_rank();
        Ok(Self { matroid, k, vertices_of, root_of })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn check(&self, x: &[ElementId]) -> Result<Vec<usize>> {
        let raw: Vec<usize> = x.iter().map(|e| e.0).collect();
        normalize(&raw, self.vertices_of.len()).map_err(|_| {
            Error::UnknownElement(raw.iter().copied().find(|&e| e >= self.vertices_of.len()).unwrap_or(0))
        })
    }

    /// `b(X)` for a nonempty `X`.
    pub fn b_value(&self, x: &[ElementId]) -> Result<i64> {
        let x = self.check(x)?;
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.b_of(&x))
    }

    pub(crate) fn b_of(&self, x: &[usize]) -> i64 {
        let mut vs: Vec<usize> = x.iter().flat_map(|&e| self.vertices_of[e].iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        let mut roots: Vec<usize> = x.iter().filter_map(|&e| self.root_of[e]).collect();
        roots.sort_unstable();
        roots.dedup();
        self.k as i64 * (vs.len() as i64 - 1) + self.matroid.rank_of(&roots) as i64
    }

    /// `None` when `X` is independent, otherwise a minimising violating subset.
    pub fn violation(&self, x: &[ElementId]) -> Result<Option<Violation>> {
        let x = self.check(x)?;
        Ok(self.min_closed(&x).map(|(set, b)| Violation { set: set.into_iter().map(ElementId).collect(), b }))
    }

    pub fn independent(&self, x: &[ElementId]) -> Result<bool> {
        Ok(self.violation(x)?.is_none())
    }

    fn localize<'a>(&self, elements: &'a [usize]) -> Local<'a> {
        let mut bit: BTreeMap<usize, u32> = BTreeMap::new();
        let masks = elements
            .iter()
            .map(|&e| {
                self.vertices_of[e].iter().fold(0u32, |m, v| {
                    let next = bit.len() as u32;
                    m | 1 << *bit.entry(*v).or_insert(next)
                })
            })
            .collect();
        let full = if bit.is_empty() { 0 } else { u32::MAX >> (32 - bit.len()) };
        Local { elements, masks, full }
    }

    /// For a vertex set `V'`, the members of `Y(V')` and `b(Y(V')) − |Y(V')|`, provided `Y(V')`
    /// spans exactly `V'`.
    fn closed_value(
        &self,
        local: &Local<'_>,
        span: u32,
        memo: &RefCell<BTreeMap<Vec<usize>, usize>>,
    ) -> Option<(Vec<usize>, i64)> {
        let mut members = Vec::new();
        let mut covered = 0u32;
        let mut roots = Vec::new();
        for (i, &mask) in local.masks.iter().enumerate() {
            if mask & !span == 0 {
                members.push(i);
                covered |= mask;
                roots.extend(self.root_of[local.elements[i]]);
            }
        }
        if covered != span || members.is_empty() {
            return None;
        }
        roots.sort_unstable();
        roots.dedup();
        let rank = *memo.borrow_mut().entry(roots).or_insert_with_key(|r| self.matroid.rank_of(r));
        let b = self.k as i64 * (span.count_ones() as i64 - 1) + rank as i64;
        let deficit = b - members.len() as i64;
        Some((members, deficit))
    }

    /// Minimum of `b(Y) − |Y|` over closed `Y`, if negative. Ties go to the first vertex set
    /// in increasing bitmask order.
    fn min_closed(&self, x: &[usize]) -> Option<(Vec<usize>, i64)> {
        let local = self.localize(x);
        let memo = RefCell::new(BTreeMap::new());
        let mut best: Option<(Vec<usize>, i64, i64)> = None;
        let mut span = 0u32;
        loop {
            span = span.wrapping_sub(local.full) & local.full;
            if span == 0 {
                break;
            }
            if let Some((members, deficit)) = self.closed_value(&local, span, &memo) {
                if deficit < 0 && best.as_ref().is_none_or(|b| deficit < b.2) {
                    let b = deficit + members.len() as i64;
                    best = Some((members.into_iter().map(|i| x[i]).collect(), b, deficit));
                }
            }
        }
        best.map(|(set, b, _)| (set, b))
    }
}

impl Matroid for TanigawaMatroid {
    fn ground_size(&self) -> usize {
        self.vertices_of.len()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        let mut basis: Vec<usize> = Vec::new();
        for &e in x {
            if self.circuit_of(&basis, e).is_none() {
                basis.push(e);
            }
        }
        basis.len()
    }

    fn describe(&self) -> String {
        format!("count matroid (k = {}) on {} elements", self.k, self.vertices_of.len())
    }

    /// The violating sets of `I + x` all contain `x` and are closed under intersection; the
    /// smallest closed one is `W = Y(V*)`. The circuit is `W` without the root elements whose
    /// root is a coloop of `M` restricted to `R_W`, since dropping those keeps `W` violating.
    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        let mut all = independent.to_vec();
        let at = all.partition_point(|&e| e < x);
        all.insert(at, x);
        let local = self.localize(&all);
        let required = local.masks[at];
        let memo = RefCell::new(BTreeMap::new());
        let mut core = u32::MAX;
        let mut found = false;
        let free = local.full & !required;
        let mut extra = 0u32;
        loop {
            let span = extra | required;
            if let Some((_, deficit)) = self.closed_value(&local, span, &memo) {
                if deficit < 0 {
                    core &= span;
                    found = true;
                }
            }
            extra = extra.wrapping_sub(free) & free;
            if extra == 0 {
                break;
            }
        }
        if !found {
            return None;
        }
        let members: Vec<usize> = (0..all.len()).filter(|&i| local.masks[i] & !core == 0).collect();
        let mut roots: Vec<usize> = members.iter().filter_map(|&i| self.root_of[all[i]]).collect();
        roots.sort_unstable();
        let full = self.matroid.rank_of(&roots);
        Some(
            members
                .into_iter()
                .filter(|&i| {
                    let Some(root) = self.root_of[all[i]].filter(|_| i != at) else {
                        return true;
                    };
                    let rest: Vec<usize> = roots.iter().copied().filter(|&r| r != root).collect();
                    self.matroid.rank_of(&rest) == full
                })
                .map(|i| all[i])
                .collect(),
        )
    }
}

/// The count matroid with each hyperedge replaced by its bundle of orientations, which act as
/// parallel copies of it. The ground set is the element set of the directed extension.
#[derive(Debug)]
pub struct ExtendedTanigawaMatroid {
    base: TanigawaMatroid,
    origin: Vec<usize>,
}

impl ExtendedTanigawaMatroid {
    /// `h` is the hypergraph `ext` was derived from.
    pub fn new(h: &MixedHypergraph, ext: &DirectedExtension, matroid: SharedMatroid) -> Result<Self> {
        let base = TanigawaMatroid::new(h, matroid)?;
        Ok(Self { base, origin: ext.origin.iter().map(|e| e.0).collect() })
    }

    pub fn k(&self) -> usize {
        self.base.k
    }

    pub fn base(&self) -> &TanigawaMatroid {
        &self.base
    }

    /// Sorted projection, or `None` if two members of one bundle are present.
    fn project(&self, x: &[usize]) -> Option<Vec<usize>> {
        let mut p: Vec<usize> = x.iter().map(|&e| self.origin[e]).collect();
        p.sort_unstable();
        let before = p.len();
        p.dedup();
        (p.len() == before).then_some(p)
    }

    pub fn independent(&self, x: &[ElementId]) -> Result<bool> {
        let raw: Vec<usize> = x.iter().map(|e| e.0).collect();
        let x = normalize(&raw, self.origin.len()).map_err(|_| Error::UnknownElement(raw.len()))?;
        Ok(self.project(&x).is_some_and(|p| self.base.min_closed(&p).is_none()))
    }
}

impl Matroid for ExtendedTanigawaMatroid {
    fn ground_size(&self) -> usize {
        self.origin.len()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        let mut p: Vec<usize> = x.iter().map(|&e| self.origin[e]).collect();
        p.sort_unstable();
        p.dedup();
        self.base.rank_of(&p)
    }

    fn describe(&self) -> String {
        format!("bundle extension of the {}", self.base.describe())
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        if let Some(&mate) = independent.iter().find(|&&y| self.origin[y] == self.origin[x]) {
            let mut pair = vec![mate, x];
            pair.sort_unstable();
            return Some(pair);
        }
        let projected = self.project(independent).expect("independent sets have one member per bundle");
        let circuit = self.base.circuit_of(&projected, self.origin[x])?;
        let mut out: Vec<usize> = independent
            .iter()
            .copied()
            .chain([x])
            .filter(|&e| circuit.binary_search(&self.origin[e]).is_ok())
            .collect();
        out.sort_unstable();
        Some(out)
    }
}
