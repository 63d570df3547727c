//! Rank oracles for matroids on `0..n` and the compositions the solvers build from them.
//!
//! Sets are passed as slices of element indices. The checked entry points ([`Matroid::rank`],
//! [`Matroid::is_independent`], ...) accept any order and repetitions; the `*_of` methods are
//! the raw oracle and expect strictly increasing, in-range input.

use alloc::{boxed::Box, format, string::String, sync::Arc, vec, vec::Vec};
use core::fmt;

use crate::error::{Error, Result};
use crate::hypercore::{MixedHypergraph, Shape};

pub type SharedMatroid = Arc<dyn Matroid + Send + Sync>;

pub trait Matroid: fmt::Debug {
    fn ground_size(&self) -> usize;

    /// Rank of a strictly increasing set of ground elements.
    fn rank_of(&self, x: &[usize]) -> usize;

    /// Short human-readable description of how the matroid was built.
    fn describe(&self) -> String;

    /// The unique circuit of `independent + x`, or `None` if that set is independent.
    /// `independent` is strictly increasing, independent, and does not contain `x`.
    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        let with_x = insert_sorted(independent, x);
        if self.rank_of(&with_x) == with_x.len() {
            return None;
        }
        let mut circuit: Vec<usize> = independent
            .iter()
            .copied()
            .filter(|&y| {
                let swapped: Vec<usize> = with_x.iter().copied().filter(|&z| z != y).collect();
                self.rank_of(&swapped) == swapped.len()
            })
            .collect();
        circuit.push(x);
        circuit.sort_unstable();
        Some(circuit)
    }

    fn rank(&self, x: &[usize]) -> Result<usize> {
        Ok(self.rank_of(&normalize(x, self.ground_size())?))
    }

    fn is_independent(&self, x: &[usize]) -> Result<bool> {
        let x = normalize(x, self.ground_size())?;
        Ok(self.rank_of(&x) == x.len())
    }

    /// `{y : r(X + y) = r(X)}`.
    fn span(&self, x: &[usize]) -> Result<Vec<usize>> {
        let x = normalize(x, self.ground_size())?;
        let base = self.rank_of(&x);
        Ok((0..self.ground_size())
            .filter(|&y| x.binary_search(&y).is_ok() || self.rank_of(&insert_sorted(&x, y)) == base)
            .collect())
    }

    /// `|X| = r(X) = r(Y)`.
    fn is_basis_of(&self, x: &[usize], y: &[usize]) -> Result<bool> {
        let x = normalize(x, self.ground_size())?;
        let y = normalize(y, self.ground_size())?;
        if !x.iter().all(|e| y.binary_search(e).is_ok()) {
            return Err(Error::NotSubset);
        }
        let rx = self.rank_of(&x);
        Ok(rx == x.len() && rx == self.rank_of(&y))
    }

    fn circuit(&self, independent: &[usize], x: usize) -> Result<Option<Vec<usize>>> {
        let set = normalize(independent, self.ground_size())?;
        check_element(x, self.ground_size())?;
        if self.rank_of(&set) != set.len() {
            return Err(Error::InvalidMatroid("circuit query on a dependent set"));
        }
        if set.binary_search(&x).is_ok() {
            return Err(Error::InvalidMatroid("circuit query with an element already present"));
        }
        Ok(self.circuit_of(&set, x))
    }

    fn full_rank(&self) -> usize {
        let all: Vec<usize> = (0..self.ground_size()).collect();
        self.rank_of(&all)
    }
}

fn check_element(x: usize, len: usize) -> Result<()> {
    if x < len {
        Ok(())
    } else {
        Err(Error::ForeignElement { index: x, len })
    }
}

/// Sorts, deduplicates and range-checks a set.
pub fn normalize(x: &[usize], len: usize) -> Result<Vec<usize>> {
    let mut out = x.to_vec();
    out.sort_unstable();
    out.dedup();
    if let Some(&last) = out.last() {
        check_element(last, len)?;
    }
    Ok(out)
}

pub(crate) fn insert_sorted(x: &[usize], y: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(x.len() + 1);
    let at = x.partition_point(|&z| z < y);
    out.extend_from_slice(&x[..at]);
    out.push(y);
    out.extend_from_slice(&x[at..]);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMatroid {
    n: usize,
}

impl FreeMatroid {
    pub fn new(n: usize) -> Self {
        Self { n }
    }
}

impl Matroid for FreeMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        x.len()
    }

    fn describe(&self) -> String {
        format!("free({})", self.n)
    }

    fn circuit_of(&self, _: &[usize], _: usize) -> Option<Vec<usize>> {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    k: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k }
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        x.len().min(self.k)
    }

    fn describe(&self) -> String {
        format!("uniform({}, {})", self.k, self.n)
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        (independent.len() >= self.k).then(|| insert_sorted(independent, x))
    }
}

/// Each block may contribute at most its capacity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMatroid {
    block_of: Vec<usize>,
    capacities: Vec<usize>,
}

impl PartitionMatroid {
    /// The blocks must partition `0..n`.
    pub fn new(n: usize, blocks: &[(Vec<usize>, usize)]) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (b, (members, _)) in blocks.iter().enumerate() {
            for &e in members {
                check_element(e, n)?;
                if block_of[e] != usize::MAX {
                    return Err(Error::InvalidMatroid("partition blocks overlap"));
                }
                block_of[e] = b;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidMatroid("partition blocks do not cover the ground set"));
        }
        Ok(Self { block_of, capacities: blocks.iter().map(|(_, c)| *c).collect() })
    }

    fn counts(&self, x: &[usize]) -> Vec<usize> {
        let mut counts = vec![0; self.capacities.len()];
        for &e in x {
            counts[self.block_of[e]] += 1;
        }
        counts
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        self.counts(x).iter().zip(&self.capacities).map(|(&c, &cap)| c.min(cap)).sum()
    }

    fn describe(&self) -> String {
        format!("partition({} blocks on {})", self.capacities.len(), self.block_of.len())
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        let block = self.block_of[x];
        let mates: Vec<usize> = independent.iter().copied().filter(|&y| self.block_of[y] == block).collect();
        (mates.len() >= self.capacities[block]).then(|| insert_sorted(&mates, x))
    }
}

/// A matroid given by its list of bases, on at most 64 elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitMatroid {
    n: usize,
    bases: Vec<u64>,
}

impl ExplicitMatroid {
    pub const MAX_GROUND: usize = 64;

    /// Checks the basis exchange axiom.
    pub fn new(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        if n > Self::MAX_GROUND {
            return Err(Error::CapExceeded { what: "explicit matroid ground set", size: n, cap: Self::MAX_GROUND });
        }
        let mut masks = Vec::with_capacity(bases.len());
        for basis in bases {
            let mut mask = 0u64;
            for &e in basis {
                check_element(e, n)?;
                mask |= 1 << e;
            }
            masks.push(mask);
        }
        masks.sort_unstable();
        masks.dedup();
        let Some(first) = masks.first() else {
            return Err(Error::InvalidMatroid("no bases given"));
        };
        let size = first.count_ones();
        if masks.iter().any(|b| b.count_ones() != size) {
            return Err(Error::InvalidMatroid("bases differ in size"));
        }
        for &a in &masks {
            for &b in &masks {
                let mut only_a = a & !b;
                while only_a != 0 {
                    let x = only_a.trailing_zeros();
                    only_a &= only_a - 1;
                    let mut only_b = b & !a;
                    let mut exchanged = false;
                    while only_b != 0 {
                        let y = only_b.trailing_zeros();
                        only_b &= only_b - 1;
                        if masks.binary_search(&((a & !(1 << x)) | (1 << y))).is_ok() {
                            exchanged = true;
                            break;
                        }
                    }
                    if !exchanged {
                        return Err(Error::InvalidMatroid("bases violate the exchange axiom"));
                    }
                }
            }
        }
        Ok(Self { n, bases: masks })
    }

    pub fn bases(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.bases.iter().map(|&b| (0..self.n).filter(|&e| b >> e & 1 == 1).collect())
    }
}

impl Matroid for ExplicitMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        let mask = x.iter().fold(0u64, |m, &e| m | 1 << e);
        self.bases.iter().map(|b| (b & mask).count_ones() as usize).max().unwrap_or(0)
    }

    fn describe(&self) -> String {
        format!("explicit({} bases on {})", self.bases.len(), self.n)
    }
}

/// `M|S`, with `S` renumbered `0..|S|` in the given order.
#[derive(Clone, Debug)]
pub struct Restriction {
    inner: SharedMatroid,
    elements: Vec<usize>,
}

pub fn restriction(inner: SharedMatroid, elements: &[usize]) -> Result<Restriction> {
    for &e in elements {
        check_element(e, inner.ground_size())?;
    }
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidMatroid("restriction lists an element twice"));
    }
    Ok(Restriction { inner, elements: elements.to_vec() })
}

impl Restriction {
    /// Restricted index to index in the underlying matroid.
    pub fn origin(&self) -> &[usize] {
        &self.elements
    }

    fn lift(&self, x: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = x.iter().map(|&e| self.elements[e]).collect();
        out.sort_unstable();
        out
    }
}

impl Matroid for Restriction {
    fn ground_size(&self) -> usize {
        self.elements.len()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        self.inner.rank_of(&self.lift(x))
    }

    fn describe(&self) -> String {
        format!("{} restricted to {} elements", self.inner.describe(), self.elements.len())
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        let lifted = self.inner.circuit_of(&self.lift(independent), self.elements[x])?;
        let mut out: Vec<usize> = independent
            .iter()
            .copied()
            .chain([x])
            .filter(|&e| lifted.binary_search(&self.elements[e]).is_ok())
            .collect();
        out.sort_unstable();
        Some(out)
    }
}

/// Each element replaced by a number of parallel copies (possibly none).
#[derive(Clone, Debug)]
pub struct ParallelCopies {
    inner: SharedMatroid,
    origin: Vec<usize>,
}

/// Copies of element `i` get consecutive indices, in element order. Also returns the
/// copy-to-original map.
pub fn parallel_copies(inner: SharedMatroid, multiplicity: &[usize]) -> Result<(ParallelCopies, Vec<usize>)> {
    if multiplicity.len() != inner.ground_size() {
        return Err(Error::GroundMismatch(multiplicity.len(), inner.ground_size()));
    }
    let origin: Vec<usize> = multiplicity
        .iter()
        .enumerate()
        .flat_map(|(e, &m)| core::iter::repeat_n(e, m))
        .collect();
    Ok((ParallelCopies { inner, origin: origin.clone() }, origin))
}

impl ParallelCopies {
    fn originals(&self, x: &[usize]) -> Vec<usize> {
        // Copies of one element are consecutive, so the image is already sorted.
        let mut out: Vec<usize> = x.iter().map(|&c| self.origin[c]).collect();
        out.dedup();
        out
    }
}

impl Matroid for ParallelCopies {
    fn ground_size(&self) -> usize {
        self.origin.len()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        self.inner.rank_of(&self.originals(x))
    }

    fn describe(&self) -> String {
        format!("{} with parallel copies ({} elements)", self.inner.describe(), self.origin.len())
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        let target = self.origin[x];
        if let Some(&twin) = independent.iter().find(|&&y| self.origin[y] == target) {
            return Some(insert_sorted(&[twin], x));
        }
        let lifted = self.inner.circuit_of(&self.originals(independent), target)?;
        let mut out: Vec<usize> = independent
            .iter()
            .copied()
            .filter(|&e| lifted.binary_search(&self.origin[e]).is_ok())
            .collect();
        out = insert_sorted(&out, x);
        Some(out)
    }
}

/// Disjoint union; the ground set of part `i` follows those of parts `0..i`.
#[derive(Clone, Debug)]
pub struct DirectSum {
    parts: Vec<SharedMatroid>,
    offsets: Vec<usize>,
}

pub fn direct_sum(parts: Vec<SharedMatroid>) -> DirectSum {
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    offsets.push(0);
    for part in &parts {
        offsets.push(offsets.last().unwrap() + part.ground_size());
    }
    DirectSum { parts, offsets }
}

impl DirectSum {
    fn split<'a>(&self, x: &'a [usize]) -> impl Iterator<Item = (usize, Vec<usize>)> + 'a {
        let offsets = self.offsets.clone();
        (0..self.parts.len()).map(move |i| {
            let lo = x.partition_point(|&e| e < offsets[i]);
            let hi = x.partition_point(|&e| e < offsets[i + 1]);
            (i, x[lo..hi].iter().map(|&e| e - offsets[i]).collect())
        })
    }

    fn part_of(&self, x: usize) -> usize {
        self.offsets.partition_point(|&o| o <= x) - 1
    }
}

impl Matroid for DirectSum {
    fn ground_size(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        self.split(x).map(|(i, local)| self.parts[i].rank_of(&local)).sum()
    }

    fn describe(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(|p| p.describe()).collect();
        format!("direct sum [{}]", parts.join(", "))
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        let i = self.part_of(x);
        let offset = self.offsets[i];
        let (_, local) = self.split(independent).nth(i).unwrap();
        let circuit = self.parts[i].circuit_of(&local, x - offset)?;
        Some(circuit.into_iter().map(|e| e + offset).collect())
    }
}

/// On the dyperedges of a simply rooted dypergraph: at most `k` entering each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnteringMatroid {
    head_of: Vec<usize>,
    k: usize,
}

pub fn entering_matroid(d: &MixedHypergraph, k: usize) -> Result<EnteringMatroid> {
    let head_of = d
        .elements()
        .map(|(_, element)| match &element.shape {
            Shape::Dyperedge(a) if !d.is_root(a.head) => Ok(a.head.0),
            _ => Err(Error::NotDyperedge(element.label.clone())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EnteringMatroid { head_of, k })
}

impl Matroid for EnteringMatroid {
    fn ground_size(&self) -> usize {
        self.head_of.len()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        let mut heads: Vec<usize> = x.iter().map(|&e| self.head_of[e]).collect();
        heads.sort_unstable();
        heads.chunk_by(|a, b| a == b).map(|run| run.len().min(self.k)).sum()
    }

    fn describe(&self) -> String {
        format!("entering({})", self.k)
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        let head = self.head_of[x];
        let mates: Vec<usize> = independent.iter().copied().filter(|&y| self.head_of[y] == head).collect();
        (mates.len() >= self.k).then(|| insert_sorted(&mates, x))
    }
}

/// Wraps any matroid into a [`SharedMatroid`].
pub fn shared<M: Matroid + Send + Sync + 'static>(m: M) -> SharedMatroid {
    Arc::new(m)
}

impl Matroid for Box<dyn Matroid + Send + Sync> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn rank_of(&self, x: &[usize]) -> usize {
        (**self).rank_of(x)
    }

    fn describe(&self) -> String {
        (**self).describe()
    }

    fn circuit_of(&self, independent: &[usize], x: usize) -> Option<Vec<usize>> {
        (**self).circuit_of(independent, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
        (0u32..1 << n).map(move |m| (0..n).filter(|&e| m >> e & 1 == 1).collect())
    }

    fn assert_laws(m: &dyn Matroid) {
        let n = m.ground_size();
        assert_eq!(m.rank_of(&[]), 0);
        for x in subsets(n) {
            let rx = m.rank_of(&x);
            assert!(rx <= x.len(), "{}: subcardinal", m.describe());
            for y in 0..n {
                if x.contains(&y) {
                    continue;
                }
                let xy = insert_sorted(&x, y);
                let rxy = m.rank_of(&xy);
                assert!(rxy == rx || rxy == rx + 1, "{}: unit increase", m.describe());
                for z in (y + 1)..n {
                    if x.contains(&z) {
                        continue;
                    }
                    let xz = insert_sorted(&x, z);
                    let xyz = insert_sorted(&xy, z);
                    assert!(
                        rxy + m.rank_of(&xz) >= rx + m.rank_of(&xyz),
                        "{}: submodular",
                        m.describe()
                    );
                }
            }
        }
    }

    fn brute_circuit(m: &dyn Matroid, i: &[usize], x: usize) -> Option<Vec<usize>> {
        let ix = insert_sorted(i, x);
        if m.rank_of(&ix) == ix.len() {
            return None;
        }
        // The unique minimal dependent subset of I + x.
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..1 << ix.len() {
            let s: Vec<usize> = (0..ix.len()).filter(|&j| mask >> j & 1 == 1).map(|j| ix[j]).collect();
            if m.rank_of(&s) < s.len() && best.as_ref().is_none_or(|b| s.len() < b.len()) {
                best = Some(s);
            }
        }
        best
    }

    fn assert_circuits(m: &dyn Matroid) {
        let n = m.ground_size();
        for i in subsets(n).filter(|i| m.rank_of(i) == i.len()) {
            for x in (0..n).filter(|x| !i.contains(x)) {
                assert_eq!(m.circuit_of(&i, x), brute_circuit(m, &i, x), "{} I={i:?} x={x}", m.describe());
            }
        }
    }

    fn fano_like() -> ExplicitMatroid {
        // Rank-2 matroid on 4 elements where 0 and 1 are parallel.
        ExplicitMatroid::new(4, &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap()
    }

    #[test]
    fn concrete_examples() {
        let free = FreeMatroid::new(2);
        assert_eq!(free.rank(&[0, 1]), Ok(2));
        assert_eq!(free.is_independent(&[0, 1]), Ok(true));
        let u1 = UniformMatroid::new(2, 1);
        assert_eq!(u1.rank(&[0, 1]), Ok(1));
        assert_eq!(u1.is_independent(&[0, 1]), Ok(false));
        let ex = ExplicitMatroid::new(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(ex.rank(&[0]), Ok(1));
        assert_eq!(ex.is_independent(&[0]), Ok(true));
        assert_eq!(free.rank(&[2]), Err(Error::ForeignElement { index: 2, len: 2 }));
    }

    #[test]
    fn spans() {
        let free = FreeMatroid::new(3);
        assert_eq!(free.span(&[0, 2]).unwrap(), [0, 2]);
        let u1 = UniformMatroid::new(2, 1);
        assert_eq!(u1.span(&[0]).unwrap(), [0, 1]);
        let loops = ExplicitMatroid::new(3, &[vec![1]]).unwrap();
        assert_eq!(loops.span(&[]).unwrap(), [0, 2]);
    }

    #[test]
    fn bases_of() {
        let free = FreeMatroid::new(2);
        assert_eq!(free.is_basis_of(&[0, 1], &[0, 1]), Ok(true));
        let u1 = UniformMatroid::new(2, 1);
        assert_eq!(u1.is_basis_of(&[0], &[0, 1]), Ok(true));
        let zero = UniformMatroid::new(2, 0);
        assert_eq!(zero.is_basis_of(&[], &[0, 1]), Ok(true));
        assert_eq!(u1.is_basis_of(&[0], &[1]), Err(Error::NotSubset));
    }

    #[test]
    fn restrictions() {
        let free = shared(FreeMatroid::new(4));
        let r = restriction(free, &[1, 3]).unwrap();
        assert_eq!(r.rank_of(&[0, 1]), 2);

        for k in 0..=4 {
            let u = shared(UniformMatroid::new(5, k));
            let r = restriction(u, &[0, 2, 4]).unwrap();
            let expected = UniformMatroid::new(3, k.min(3));
            for x in subsets(3) {
                assert_eq!(r.rank_of(&x), expected.rank_of(&x));
            }
        }

        let ex = fano_like();
        let r = restriction(shared(ex.clone()), &[0, 1, 2]).unwrap();
        // Bases of the restriction: the maximal intersections of bases with {0,1,2}.
        let cut: Vec<u32> = ex.bases.iter().map(|b| (b & 0b111) as u32).collect();
        let best = cut.iter().map(|b| b.count_ones()).max().unwrap();
        for x in subsets(3) {
            let mask = x.iter().fold(0u32, |m, &e| m | 1 << e);
            let brute = cut.iter().filter(|b| b.count_ones() == best).map(|b| (b & mask).count_ones()).max().unwrap();
            assert_eq!(r.rank_of(&x) as u32, brute);
        }
        assert!(restriction(shared(FreeMatroid::new(2)), &[2]).is_err());
    }

    #[test]
    fn parallel_copy_ranks() {
        let (p, origin) = parallel_copies(shared(FreeMatroid::new(1)), &[2]).unwrap();
        assert_eq!(origin, [0, 0]);
        assert_eq!(p.rank_of(&[0, 1]), 1);
        let (p, _) = parallel_copies(shared(UniformMatroid::new(2, 1)), &[2, 1]).unwrap();
        assert_eq!(p.rank_of(&[0, 1, 2]), 1);
        let (p, _) = parallel_copies(shared(fano_like()), &[1, 1, 1, 1]).unwrap();
        for x in subsets(4) {
            assert_eq!(p.rank_of(&x), fano_like().rank_of(&x));
        }
    }

    #[test]
    fn entering_counts() {
        let mut d = MixedHypergraph::new();
        let r = d.add_root("r").unwrap();
        let s = d.add_root("s").unwrap();
        let t = d.add_root("t").unwrap();
        let v = d.add_vertex("v").unwrap();
        let w = d.add_vertex("w").unwrap();
        d.add_arc("a1", r, v).unwrap();
        d.add_arc("a2", s, v).unwrap();
        d.add_arc("a3", t, v).unwrap();
        d.add_arc("b", v, w).unwrap();
        let m1 = entering_matroid(&d, 1).unwrap();
        assert!(m1.is_independent(&[0]).unwrap());
        assert!(!m1.is_independent(&[0, 1]).unwrap());
        assert!(m1.is_independent(&[0, 3]).unwrap());
        assert_eq!(entering_matroid(&d, 2).unwrap().rank(&[0, 1, 2]), Ok(2));
        assert_laws(&entering_matroid(&d, 2).unwrap());
        assert_circuits(&entering_matroid(&d, 2).unwrap());

        let mut bad = MixedHypergraph::new();
        let u = bad.add_vertex("u").unwrap();
        let x = bad.add_vertex("x").unwrap();
        bad.add_hyperedge("e", [u, x]).unwrap();
        assert!(entering_matroid(&bad, 1).is_err());
    }

    #[test]
    fn laws_and_circuits_of_concrete_matroids() {
        let partition = PartitionMatroid::new(6, &[(vec![0, 3], 1), (vec![1, 2, 5], 2), (vec![4], 0)]).unwrap();
        let all: Vec<Box<dyn Matroid + Send + Sync>> = vec![
            Box::new(FreeMatroid::new(5)),
            Box::new(UniformMatroid::new(6, 3)),
            Box::new(UniformMatroid::new(4, 0)),
            Box::new(partition.clone()),
            Box::new(fano_like()),
            Box::new(ExplicitMatroid::new(5, &[vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 4], vec![1, 4], vec![2, 4]]).unwrap()),
        ];
        for m in &all {
            assert_laws(m);
            assert_circuits(m);
        }
        let composed: Vec<Box<dyn Matroid + Send + Sync>> = vec![
            Box::new(restriction(shared(partition.clone()), &[5, 0, 3, 1]).unwrap()),
            Box::new(parallel_copies(shared(fano_like()), &[2, 0, 1, 2]).unwrap().0),
            Box::new(direct_sum(vec![shared(fano_like()), shared(UniformMatroid::new(2, 1))])),
        ];
        for m in &composed {
            assert_laws(m);
            assert_circuits(m);
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(PartitionMatroid::new(3, &[(vec![0, 1], 1)]).is_err());
        assert!(PartitionMatroid::new(2, &[(vec![0, 1], 1), (vec![1], 1)]).is_err());
        assert!(ExplicitMatroid::new(3, &[vec![0, 1], vec![2]]).is_err());
        // {0,1} and {2,3} alone violate exchange.
        assert!(ExplicitMatroid::new(4, &[vec![0, 1], vec![2, 3]]).is_err());
        assert!(ExplicitMatroid::new(2, &[]).is_err());
        assert!(UniformMatroid::new(3, 1).circuit(&[0, 1], 2).is_err());
    }
}
