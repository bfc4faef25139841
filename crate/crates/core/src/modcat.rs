//! Indecomposable modules over Nakayama algebras.
//!
//! Every indecomposable is uniserial and determined by its top vertex and
//! its Loewy length, so the module category is handled combinatorially.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{NakayamaAlgebra, Shape, VertexId};
use crate::error::{Error, Result};

/// The uniserial module `P_top / rad^len P_top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Indec {
    pub top: VertexId,
    pub len: u32,
}

impl Indec {
    pub fn new(top: VertexId, len: u32) -> Self {
        Indec { top, len }
    }
}

/// A basic module: a sorted set of pairwise distinct indecomposables.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasicModule(Vec<Indec>);

impl BasicModule {
    pub fn new(summands: impl IntoIterator<Item = Indec>) -> Self {
        let mut v: Vec<Indec> = summands.into_iter().collect();
        v.sort();
        v.dedup();
        BasicModule(v)
    }

    pub fn empty() -> Self {
        BasicModule(Vec::new())
    }

    pub fn summands(&self) -> &[Indec] {
        &self.0
    }

    /// Number of indecomposable summands, `|M|`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, m: &Indec) -> bool {
        self.0.binary_search(m).is_ok()
    }

    pub fn with(&self, m: Indec) -> Self {
        Self::new(self.0.iter().copied().chain(std::iter::once(m)))
    }

    pub fn without(&self, m: &Indec) -> Self {
        BasicModule(self.0.iter().copied().filter(|x| x != m).collect())
    }

    pub fn union(&self, other: &BasicModule) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Indec> {
        self.0.iter()
    }
}

impl FromIterator<Indec> for BasicModule {
    fn from_iter<T: IntoIterator<Item = Indec>>(iter: T) -> Self {
        BasicModule::new(iter)
    }
}

impl NakayamaAlgebra {
    pub fn is_valid_indec(&self, m: &Indec) -> bool {
        self.contains(m.top) && m.len >= 1 && m.len <= self.loewy(m.top)
    }

    fn check(&self, m: &Indec) -> Result<()> {
        if self.is_valid_indec(m) {
            Ok(())
        } else {
            Err(Error::DifferentAlgebra(format!("({}, {})", m.top, m.len)))
        }
    }

    /// Composition factors from the top down.
    pub fn comp_factors(&self, m: &Indec) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(m.len as usize);
        let mut cur = m.top;
        out.push(cur);
        for _ in 1..m.len {
            cur = self.next_down(cur).expect("module longer than its projective cover");
            out.push(cur);
        }
        out
    }

    pub fn socle_vertex(&self, m: &Indec) -> VertexId {
        self.walk_down(m.top, m.len - 1)
            .expect("module longer than its projective cover")
    }

    pub fn is_projective(&self, m: &Indec) -> bool {
        m.len == self.loewy(m.top)
    }

    pub fn projective(&self, v: VertexId) -> Indec {
        Indec::new(v, self.loewy(v))
    }

    /// Whether `Hom(m, n) != 0`.
    pub fn hom_nonzero(&self, m: &Indec, n: &Indec) -> Result<bool> {
        self.check(m)?;
        self.check(n)?;
        Ok(self.hom_nz(m, n))
    }

    /// A nonzero map exists iff some top quotient of `m` of length `t` is the
    /// submodule of `n` of length `t`, i.e. the factor of `n` at depth
    /// `len(n) - t` is the top of `m`.
    pub(crate) fn hom_nz(&self, m: &Indec, n: &Indec) -> bool {
        let factors = self.comp_factors(n);
        let max_t = m.len.min(n.len) as usize;
        (1..=max_t).any(|t| factors[factors.len() - t] == m.top)
    }

    /// The Auslander-Reiten translate; `None` for projectives.
    pub fn tau(&self, m: &Indec) -> Option<Indec> {
        if self.is_projective(m) {
            None
        } else {
            let down = self.next_down(m.top).expect("nonprojective module has a radical");
            Some(Indec::new(down, m.len))
        }
    }

    pub fn is_tau_rigid_indec(&self, m: &Indec) -> bool {
        if self.is_projective(m) {
            return true;
        }
        match self.shape_of(m.top) {
            Shape::Path(_) => true,
            Shape::Cycle(c) => (m.len as usize) < c,
        }
    }

    pub fn pair_tau_rigid(&self, x: &Indec, y: &Indec) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.pair_rigid(x, y))
    }

    pub(crate) fn pair_rigid(&self, x: &Indec, y: &Indec) -> bool {
        self.is_tau_rigid_indec(x)
            && self.is_tau_rigid_indec(y)
            && self.tau(y).is_none_or(|ty| !self.hom_nz(x, &ty))
            && self.tau(x).is_none_or(|tx| !self.hom_nz(y, &tx))
    }

    /// Whether the module is τ-rigid (all summands pairwise, including with themselves).
    pub fn is_tau_rigid(&self, m: &BasicModule) -> bool {
        let s = m.summands();
        s.iter().all(|x| self.is_valid_indec(x))
            && s.iter()
                .enumerate()
                .all(|(i, x)| s[i..].iter().all(|y| self.pair_rigid(x, y)))
    }

    /// `x ∈ Fac(m)`: `x` is a quotient of a single summand.
    pub fn in_fac(&self, x: &Indec, m: &BasicModule) -> Result<bool> {
        self.check(x)?;
        for y in m.iter() {
            self.check(y)?;
        }
        Ok(m.iter().any(|y| y.top == x.top && y.len >= x.len))
    }

    /// Vertices occurring as composition factors of some summand.
    pub fn support(&self, m: &BasicModule) -> BTreeSet<VertexId> {
        m.iter().flat_map(|x| self.comp_factors(x)).collect()
    }

    /// `s(M)`, the number of distinct simple composition factors.
    pub fn support_count(&self, m: &BasicModule) -> usize {
        self.support(m).len()
    }

    /// All indecomposables ordered by `(top, len)`.
    pub fn all_indecs(&self) -> Vec<Indec> {
        self.vertices()
            .iter()
            .flat_map(|&v| (1..=self.loewy(v)).map(move |l| Indec::new(v, l)))
            .collect()
    }

    pub fn all_tau_rigid_indecs(&self) -> Vec<Indec> {
        self.all_indecs()
            .into_iter()
            .filter(|m| self.is_tau_rigid_indec(m))
            .collect()
    }
}

#[cfg(test)]
#[path = "../tests/support/oracle.rs"]
mod oracle;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: u32) -> VertexId {
        VertexId(x)
    }

    fn m(top: u32, len: u32) -> Indec {
        Indec::new(v(top), len)
    }

    fn uniserials(a: &NakayamaAlgebra) -> oracle::Uniserials {
        oracle::Uniserials::new(a.arrows().iter().map(|(s, t)| (s.0, t.0)))
    }

    fn raw(x: &Indec) -> oracle::Module {
        (x.top.0, x.len)
    }

    fn l33() -> NakayamaAlgebra {
        NakayamaAlgebra::cyclic(3, 3).unwrap()
    }

    #[test]
    fn composition_factors() {
        let a = l33();
        assert_eq!(a.comp_factors(&m(1, 3)), vec![v(1), v(3), v(2)]);
        assert_eq!(a.comp_factors(&m(2, 1)), vec![v(2)]);
        assert_eq!(a.socle_vertex(&m(1, 3)), v(2));
        let b = NakayamaAlgebra::cyclic(4, 5).unwrap();
        assert_eq!(b.comp_factors(&m(3, 5)), vec![v(3), v(2), v(1), v(4), v(3)]);
        assert_eq!(b.socle_vertex(&m(3, 5)), v(3));
    }

    #[test]
    fn hom_examples() {
        let a = l33();
        assert!(!a.hom_nonzero(&m(2, 1), &m(1, 2)).unwrap());
        assert!(a.hom_nonzero(&m(1, 3), &m(3, 3)).unwrap());
        assert!(matches!(
            a.hom_nonzero(&m(4, 1), &m(1, 1)),
            Err(Error::DifferentAlgebra(_))
        ));
        for x in a.all_indecs() {
            assert!(a.hom_nonzero(&x, &x).unwrap());
        }
    }

    #[test]
    fn tau_examples() {
        let b = NakayamaAlgebra::cyclic(4, 5).unwrap();
        assert_eq!(b.tau(&m(1, 4)), Some(m(4, 4)));
        assert_eq!(b.tau(&m(2, 1)), Some(m(1, 1)));
        assert_eq!(b.tau(&m(2, 5)), None);
    }

    #[test]
    fn tau_rigid_examples() {
        let a = NakayamaAlgebra::cyclic(3, 4).unwrap();
        assert!(!a.is_tau_rigid_indec(&m(1, 3)));
        assert!(a.is_tau_rigid_indec(&m(1, 4)));
        assert_eq!(a.all_indecs().len(), 12);
        assert_eq!(a.all_tau_rigid_indecs().len(), 9);
        assert_eq!(l33().all_tau_rigid_indecs().len(), 9);
        let ka3 = NakayamaAlgebra::linear(&[1, 2, 3]).unwrap();
        assert!(ka3.all_indecs().iter().all(|x| ka3.is_tau_rigid_indec(x)));
        assert!(NakayamaAlgebra::zero().all_indecs().is_empty());
    }

    #[test]
    fn pair_examples() {
        let a = l33();
        assert!(!a.pair_tau_rigid(&m(1, 1), &m(2, 1)).unwrap());
        assert!(a.pair_tau_rigid(&m(1, 3), &m(2, 3)).unwrap());
        for i in 1..=3 {
            for j in 1..=3 {
                assert!(a.pair_tau_rigid(&m(i, 3), &m(j, 3)).unwrap());
            }
        }
    }

    #[test]
    fn fac_and_support() {
        let a = l33();
        let p1 = BasicModule::new([m(1, 3)]);
        assert!(a.in_fac(&m(1, 1), &p1).unwrap());
        assert!(!a.in_fac(&m(2, 1), &p1).unwrap());
        assert!(a.in_fac(&m(2, 2), &BasicModule::new([m(2, 2)])).unwrap());
        assert_eq!(a.support_count(&p1), 3);
        assert_eq!(a.support_count(&BasicModule::empty()), 0);
        assert_eq!(a.support_count(&BasicModule::new([m(2, 1), m(2, 3)])), 3);
    }

    #[test]
    fn hom_agrees_with_linear_algebra_oracle() {
        let mut algebras = Vec::new();
        for n in 1..=5 {
            for r in 1..=6 {
                algebras.push(NakayamaAlgebra::cyclic(n, r).unwrap());
            }
            for r in 1..=n {
                algebras.push(NakayamaAlgebra::gamma(n, r).unwrap());
            }
        }
        algebras.push(NakayamaAlgebra::cyclic_kupisch(&[2, 3, 3, 4]).unwrap());
        algebras.push(NakayamaAlgebra::cyclic_kupisch(&[1, 2, 3, 2]).unwrap());
        for a in &algebras {
            let data = uniserials(a);
            let indecs = a.all_indecs();
            for x in &indecs {
                for y in &indecs {
                    let dim = data.hom_dim(raw(x), raw(y));
                    assert_eq!(a.hom_nz(x, y), dim > 0, "{a}: {x:?} -> {y:?}");
                    assert_eq!(dim, data.witness_count(raw(x), raw(y)), "{a}: {x:?} -> {y:?}");
                }
            }
        }
    }

    #[test]
    fn tau_rigid_rule_matches_direct_hom() {
        for n in 1..=6 {
            for r in 1..=8 {
                let a = NakayamaAlgebra::cyclic(n, r).unwrap();
                for x in a.all_indecs() {
                    let direct = a.tau(&x).is_none_or(|tx| !a.hom_nz(&x, &tx));
                    assert_eq!(a.is_tau_rigid_indec(&x), direct, "{a} {x:?}");
                }
            }
        }
    }

    #[test]
    fn fac_matches_image_oracle() {
        for (n, r) in [(3, 3), (3, 4), (4, 3), (2, 5)] {
            let a = NakayamaAlgebra::cyclic(n, r).unwrap();
            let data = uniserials(&a);
            let indecs = a.all_indecs();
            for x in &indecs {
                for y in &indecs {
                    for z in &indecs {
                        let module = BasicModule::new([*y, *z]);
                        let raw_summands: Vec<_> = module.iter().map(raw).collect();
                        assert_eq!(
                            a.in_fac(x, &module).unwrap(),
                            data.in_fac(raw(x), &raw_summands),
                            "{a}: {x:?} in Fac({module:?})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hom_from_projective_detects_factor() {
        // Hom(P_j, N) != 0 iff j is a factor of N, once N is not longer than P_j
        let a = NakayamaAlgebra::cyclic_kupisch(&[3, 4, 4, 3]).unwrap();
        for j in a.vertices() {
            let p = a.projective(*j);
            for x in a.all_indecs().iter().filter(|x| x.len <= p.len) {
                assert_eq!(a.hom_nz(&p, x), a.comp_factors(x).contains(j));
            }
        }
    }

    proptest! {
        #[test]
        fn tau_preserves_length(n in 1u32..6, r in 1u32..8) {
            let a = NakayamaAlgebra::cyclic(n, r).unwrap();
            for x in a.all_indecs() {
                if let Some(t) = a.tau(&x) {
                    prop_assert_eq!(t.len, x.len);
                    prop_assert!(a.is_valid_indec(&t));
                }
            }
        }

        #[test]
        fn fac_is_transitive(n in 2u32..5, r in 1u32..6, picks in proptest::collection::vec(0usize..100, 1..4)) {
            let a = NakayamaAlgebra::cyclic(n, r).unwrap();
            let indecs = a.all_indecs();
            let big = BasicModule::new(picks.iter().map(|i| indecs[i % indecs.len()]));
            let small = BasicModule::new(indecs.iter().copied().filter(|x| a.in_fac(x, &big).unwrap()).take(3));
            for x in &indecs {
                if a.in_fac(x, &small).unwrap() {
                    prop_assert!(a.in_fac(x, &big).unwrap());
                }
            }
        }
    }
}
