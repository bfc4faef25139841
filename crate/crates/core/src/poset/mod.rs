//! The order on support τ-tilting pairs and its Hasse quiver.

mod iso;
mod rejection;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::NakayamaAlgebra;
use crate::error::Result;
use crate::tautilt::{Slot, SttPair};

pub use iso::poset_isomorphic;
pub use rejection::{
    classify, classify_n, hasse_rejection, hasse_rejection_with, lift_rejection, rejection_chain, Class, QChoice,
    RejectionRun, RejectionStep,
};

/// Directed graph of covering relations, arrows pointing from the larger
/// element to the smaller one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseQuiver<L> {
    pub vertices: Vec<L>,
    pub arrows: Vec<(usize, usize)>,
}

impl<L> HasseQuiver<L> {
    /// Builds the quiver from strict lower sets: `below[i]` contains every
    /// `j` with `j < i`.
    pub fn from_order(vertices: Vec<L>, below: &[FixedBitSet]) -> Self {
        let arrows = transitive_reduction(below);
        HasseQuiver { vertices, arrows }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Strict lower sets recovered from the arrows.
    pub fn order(&self) -> Vec<FixedBitSet> {
        let k = self.len();
        let mut succ = vec![Vec::new(); k];
        for &(a, b) in &self.arrows {
            succ[a].push(b);
        }
        (0..k)
            .map(|start| {
                let mut seen = FixedBitSet::with_capacity(k);
                let mut stack = succ[start].clone();
                while let Some(x) = stack.pop() {
                    if !seen.put(x) {
                        stack.extend(succ[x].iter().copied());
                    }
                }
                seen
            })
            .collect()
    }

    /// Number of arrows touching each vertex.
    pub fn undirected_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for &(a, b) in &self.arrows {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arrows
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn map_labels<M>(self, f: impl FnMut(L) -> M) -> HasseQuiver<M> {
        HasseQuiver {
            vertices: self.vertices.into_iter().map(f).collect(),
            arrows: self.arrows,
        }
    }
}

impl<L: Ord> HasseQuiver<L> {
    /// Sorts the vertices by label and renumbers the arrows.
    pub fn canonical(self) -> Self {
        let k = self.len();
        let mut perm: Vec<usize> = (0..k).collect();
        perm.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        let mut new_index = vec![0; k];
        for (new, &old) in perm.iter().enumerate() {
            new_index[old] = new;
        }
        let mut slots: Vec<Option<L>> = self.vertices.into_iter().map(Some).collect();
        let vertices = perm
            .iter()
            .map(|&old| slots[old].take().expect("each vertex once"))
            .collect();
        let mut arrows: Vec<(usize, usize)> = self.arrows.iter().map(|&(a, b)| (new_index[a], new_index[b])).collect();
        arrows.sort_unstable();
        HasseQuiver { vertices, arrows }
    }
}

/// Covering pairs `(i, j)` with `j < i` and nothing strictly between.
pub fn transitive_reduction(below: &[FixedBitSet]) -> Vec<(usize, usize)> {
    let mut arrows = Vec::new();
    for (i, lower) in below.iter().enumerate() {
        let mut covers = lower.clone();
        for k in lower.ones() {
            covers.difference_with(&below[k]);
        }
        arrows.extend(covers.ones().map(|j| (i, j)));
    }
    arrows
}

/// `m ≥ n`: every summand of `n` is a quotient of a summand of `m`.
pub fn geq(alg: &NakayamaAlgebra, m: &SttPair, n: &SttPair) -> Result<bool> {
    for x in n.summands.iter() {
        if !alg.in_fac(x, &m.summands)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `m ≤ n`.
pub fn leq(alg: &NakayamaAlgebra, m: &SttPair, n: &SttPair) -> Result<bool> {
    geq(alg, n, m)
}

/// The support τ-tilting pairs of an algebra with their order.
#[derive(Clone, Debug)]
pub struct SttPoset {
    pub elements: Vec<SttPair>,
    /// `below[i]` holds the indices strictly below element `i`.
    pub below: Vec<FixedBitSet>,
}

impl SttPoset {
    pub fn new(alg: &NakayamaAlgebra) -> Self {
        let elements = alg.enumerate_stt();
        let k = elements.len();
        let below = (0..k)
            .into_par_iter()
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(k);
                for j in 0..k {
                    if i != j && geq(alg, &elements[i], &elements[j]).expect("pairs of the same algebra") {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        SttPoset { elements, below }
    }

    pub fn hasse(&self) -> HasseQuiver<SttPair> {
        HasseQuiver::from_order(self.elements.clone(), &self.below)
    }

    /// Checks irreflexivity, antisymmetry and transitivity of the strict order.
    pub fn is_partial_order(&self) -> bool {
        is_strict_order(&self.below)
    }
}

pub fn is_strict_order(below: &[FixedBitSet]) -> bool {
    below.iter().enumerate().all(|(i, lower)| {
        !lower.contains(i) && lower.ones().all(|j| !below[j].contains(i) && below[j].is_subset(lower))
    })
}

/// Hasse quiver computed from the order by Fac inclusion.
pub fn hasse_direct(alg: &NakayamaAlgebra) -> HasseQuiver<SttPair> {
    SttPoset::new(alg).hasse().canonical()
}

/// Lookup of pairs by their almost complete sub-pairs.
pub struct MutationIndex {
    pub pairs: Vec<SttPair>,
    by_almost: HashMap<Vec<Slot>, Vec<usize>>,
}

impl MutationIndex {
    pub fn new(alg: &NakayamaAlgebra) -> Self {
        Self::from_pairs(alg.enumerate_stt())
    }

    pub fn from_pairs(pairs: Vec<SttPair>) -> Self {
        let mut by_almost: HashMap<Vec<Slot>, Vec<usize>> = HashMap::new();
        for (idx, p) in pairs.iter().enumerate() {
            let slots = p.slots();
            for drop in 0..slots.len() {
                let mut key = slots.clone();
                key.remove(drop);
                by_almost.entry(key).or_default().push(idx);
            }
        }
        MutationIndex { pairs, by_almost }
    }

    /// Indices of the pairs containing the given almost complete slot set.
    pub fn completions(&self, almost: &[Slot]) -> &[usize] {
        self.by_almost.get(almost).map_or(&[], Vec::as_slice)
    }

    /// Every almost complete slot set with its completions.
    pub fn almost_complete(&self) -> impl Iterator<Item = (&Vec<Slot>, &Vec<usize>)> {
        self.by_almost.iter()
    }

    /// Replaces `slot` of `pair` by the other completion, if there is one.
    pub fn mutate(&self, pair: &SttPair, slot: &Slot) -> Option<SttPair> {
        let key: Vec<Slot> = pair.slots().into_iter().filter(|s| s != slot).collect();
        self.completions(&key)
            .iter()
            .map(|&i| &self.pairs[i])
            .find(|p| *p != pair)
            .cloned()
    }

    /// All mutations of `pair`, one per slot.
    pub fn mutations(&self, pair: &SttPair) -> Vec<SttPair> {
        pair.slots().iter().filter_map(|s| self.mutate(pair, s)).collect()
    }
}

/// All mutations of a support τ-tilting pair.
pub fn mutations(alg: &NakayamaAlgebra, pair: &SttPair) -> Vec<SttPair> {
    MutationIndex::new(alg).mutations(pair)
}

/// A vertex of a doubled poset: an original element or the added copy of one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Doubled<L> {
    Original(L),
    Copy(L),
}

fn doubled_layout(k: usize, n: &[usize]) -> (Vec<bool>, Vec<usize>) {
    let mut in_n = vec![false; k];
    let mut copy = vec![usize::MAX; k];
    for (pos, &x) in n.iter().enumerate() {
        in_n[x] = true;
        copy[x] = k + pos;
    }
    (in_n, copy)
}

/// Adds a copy of the vertices in `n` on top of them and rewires the
/// arrows. Copies are appended after the originals, in the order of `n`.
pub fn extend_poset<L: Clone>(h: &HasseQuiver<L>, n: &[usize]) -> HasseQuiver<Doubled<L>> {
    let mut n = n.to_vec();
    n.sort_unstable();
    n.dedup();
    let k = h.len();
    let (in_n, copy) = doubled_layout(k, &n);
    let mut arrows = Vec::new();
    for &(a, b) in &h.arrows {
        match (in_n[a], in_n[b]) {
            (false, false) | (true, false) => arrows.push((a, b)),
            (true, true) => {
                arrows.push((a, b));
                arrows.push((copy[a], copy[b]));
            }
            (false, true) => arrows.push((a, copy[b])),
        }
    }
    arrows.extend(n.iter().map(|&x| (copy[x], x)));
    arrows.sort_unstable();
    let vertices = h
        .vertices
        .iter()
        .cloned()
        .map(Doubled::Original)
        .chain(n.iter().map(|&x| Doubled::Copy(h.vertices[x].clone())))
        .collect();
    HasseQuiver { vertices, arrows }
}

/// Strict lower sets of the doubled order on `Ω ⊔ N⁺`, laid out like
/// [`extend_poset`]: `ω ≥ n⁺` for `ω ∉ N` with `ω ≥ n`, `n⁺ ≥ x` whenever
/// `n ≥ x`, `n₁⁺ ≥ n₂⁺` whenever `n₁ ≥ n₂`, closed under transitivity.
pub fn extend_order(below: &[FixedBitSet], n: &[usize]) -> Vec<FixedBitSet> {
    let mut n = n.to_vec();
    n.sort_unstable();
    n.dedup();
    let k = below.len();
    let total = k + n.len();
    let (in_n, copy) = doubled_layout(k, &n);
    let mut out: Vec<FixedBitSet> = (0..total).map(|_| FixedBitSet::with_capacity(total)).collect();
    for x in 0..k {
        for y in below[x].ones() {
            out[x].insert(y);
            if in_n[y] && !in_n[x] {
                out[x].insert(copy[y]);
            }
        }
    }
    for &x in &n {
        out[copy[x]].insert(x);
        for y in below[x].ones() {
            out[copy[x]].insert(y);
            if in_n[y] {
                out[copy[x]].insert(copy[y]);
            }
        }
    }
    // transitive closure
    loop {
        let mut changed = false;
        for x in 0..total {
            let mut acc = out[x].clone();
            for y in out[x].ones() {
                acc.union_with(&out[y]);
            }
            if acc != out[x] {
                out[x] = acc;
                changed = true;
            }
        }
        if !changed {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VertexId;
    use crate::modcat::{BasicModule, Indec};

    fn m(top: u32, len: u32) -> Indec {
        Indec::new(VertexId(top), len)
    }

    fn chain(k: usize) -> Vec<FixedBitSet> {
        (0..k)
            .map(|i| {
                let mut b = FixedBitSet::with_capacity(k);
                b.insert_range(..i);
                b
            })
            .collect()
    }

    #[test]
    fn direct_hasse_examples() {
        let a = NakayamaAlgebra::cyclic(3, 3).unwrap();
        let poset = SttPoset::new(&a);
        assert!(poset.is_partial_order());
        let h = poset.hasse();
        assert_eq!(h.len(), 20);
        assert_eq!(h.arrows.len(), 30);
        assert!(h.undirected_degrees().iter().all(|&d| d == 3));

        let zero = hasse_direct(&NakayamaAlgebra::zero());
        assert_eq!(zero.len(), 1);
        assert!(zero.arrows.is_empty());

        let k = hasse_direct(&NakayamaAlgebra::path_algebra(1).unwrap());
        assert_eq!(k.len(), 2);
        assert_eq!(k.arrows.len(), 1);
        let (top, bottom) = k.arrows[0];
        assert!(k.vertices[top].is_tau_tilting());
        assert!(k.vertices[bottom].summands.is_empty());
    }

    #[test]
    fn top_and_bottom() {
        let a = NakayamaAlgebra::cyclic(3, 3).unwrap();
        let p = SttPoset::new(&a);
        let lam = SttPair::new((1..=3).map(|j| a.projective(VertexId(j))).collect(), []);
        let zero = SttPair::new(BasicModule::empty(), a.vertices().iter().copied());
        let top = p.elements.iter().position(|x| *x == lam).unwrap();
        let bottom = p.elements.iter().position(|x| *x == zero).unwrap();
        assert_eq!(p.below[top].count_ones(..), 19);
        assert_eq!(p.below[bottom].count_ones(..), 0);
        for x in &p.elements {
            assert!(geq(&a, &lam, x).unwrap());
            assert!(leq(&a, &zero, x).unwrap());
        }
    }

    #[test]
    fn mutation_examples() {
        let a = NakayamaAlgebra::cyclic(3, 3).unwrap();
        let idx = MutationIndex::new(&a);
        let lam = SttPair::new((1..=3).map(|j| a.projective(VertexId(j))).collect(), []);
        let at_p1 = idx.mutate(&lam, &Slot::Summand(m(1, 3))).unwrap();
        assert_eq!(
            at_p1,
            SttPair::new([m(2, 1), m(2, 3), m(3, 3)].into_iter().collect(), [])
        );
        for p in &idx.pairs {
            let muts = idx.mutations(p);
            assert_eq!(muts.len(), 3);
            for q in &muts {
                assert!(idx.mutations(q).contains(p));
            }
        }
    }

    #[test]
    fn hasse_neighbours_are_mutations() {
        let a = NakayamaAlgebra::cyclic(4, 4).unwrap();
        let h = hasse_direct(&a);
        let idx = MutationIndex::new(&a);
        for (v, p) in h.vertices.iter().enumerate() {
            let mut from_hasse: Vec<&SttPair> = h.neighbors(v).iter().map(|&w| &h.vertices[w]).collect();
            from_hasse.sort();
            let mut muts = idx.mutations(p);
            muts.sort();
            assert_eq!(from_hasse, muts.iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn doubling_single_vertex() {
        let h = HasseQuiver {
            vertices: vec!["w"],
            arrows: vec![],
        };
        let d = extend_poset(&h, &[0]);
        assert_eq!(d.vertices, vec![Doubled::Original("w"), Doubled::Copy("w")]);
        assert_eq!(d.arrows, vec![(1, 0)]);
        let same = extend_poset(&h, &[]);
        assert_eq!(same.vertices, vec![Doubled::Original("w")]);
        assert!(same.arrows.is_empty());
    }

    #[test]
    fn doubling_diamond() {
        // top > left, right > bottom; double the right and bottom elements
        let below = {
            let mut b: Vec<FixedBitSet> = (0..4).map(|_| FixedBitSet::with_capacity(4)).collect();
            b[0].insert_range(1..4);
            b[1].insert(3);
            b[2].insert(3);
            b
        };
        let h = HasseQuiver::from_order(vec!["top", "left", "right", "bottom"], &below);
        assert_eq!(h.arrows, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        let d = extend_poset(&h, &[2, 3]);
        assert_eq!(d.len(), 6);
        assert_eq!(d.arrows, vec![(0, 1), (0, 4), (1, 5), (2, 3), (4, 2), (4, 5), (5, 3)]);
        let expected = HasseQuiver::from_order(d.vertices.clone(), &extend_order(&below, &[2, 3]));
        let mut arrows = expected.arrows.clone();
        arrows.sort_unstable();
        assert_eq!(arrows, d.arrows);
    }

    #[test]
    fn doubling_through_outside_element() {
        // n1 > w > n2 with n1, n2 doubled
        let below = chain(3);
        let h = HasseQuiver::from_order(vec![0, 1, 2], &below);
        let d = extend_poset(&h, &[0, 2]);
        let order = extend_order(&below, &[0, 2]);
        assert!(is_strict_order(&order));
        let mut expected = transitive_reduction(&order);
        expected.sort_unstable();
        assert_eq!(d.arrows, expected);
    }

    #[test]
    fn canonical_relabels_arrows() {
        let h = HasseQuiver {
            vertices: vec![3, 1, 2],
            arrows: vec![(0, 1), (0, 2), (2, 1)],
        };
        let c = h.canonical();
        assert_eq!(c.vertices, vec![1, 2, 3]);
        assert_eq!(c.arrows, vec![(1, 0), (2, 0), (2, 1)]);
    }
}
