//! Support τ-tilting pairs and their enumeration.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{NakayamaAlgebra, Shape, VertexId};
use crate::error::{Error, Result};
use crate::modcat::{BasicModule, Indec};

/// A basic support τ-tilting pair `(M, e)`, with `e` given by its vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SttPair {
    pub summands: BasicModule,
    pub killed: Vec<VertexId>,
}

impl SttPair {
    pub fn new(summands: BasicModule, killed: impl IntoIterator<Item = VertexId>) -> Self {
        let killed: BTreeSet<VertexId> = killed.into_iter().collect();
        SttPair {
            summands,
            killed: killed.into_iter().collect(),
        }
    }

    pub fn is_tau_tilting(&self) -> bool {
        self.killed.is_empty()
    }

    /// Total number of slots: summands plus killed vertices.
    pub fn rank(&self) -> usize {
        self.summands.len() + self.killed.len()
    }

    pub fn slots(&self) -> Vec<Slot> {
        self.summands
            .iter()
            .map(|m| Slot::Summand(*m))
            .chain(self.killed.iter().map(|v| Slot::Killed(*v)))
            .collect()
    }
}

/// One indecomposable position of a pair: a module summand or a killed
/// vertex (standing for the shifted projective at that vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Slot {
    Summand(Indec),
    Killed(VertexId),
}

/// Precomputed compatibility data for one algebra.
struct RigidTable {
    indecs: Vec<Indec>,
    /// `compat[i]` holds the indices `j > i` with `indecs[i] ⊕ indecs[j]` τ-rigid.
    compat: Vec<FixedBitSet>,
    /// Support of each indecomposable as a bitset over vertex positions.
    support: Vec<FixedBitSet>,
    vertices: usize,
}

impl RigidTable {
    fn new(alg: &NakayamaAlgebra) -> Self {
        let indecs = alg.all_tau_rigid_indecs();
        let k = indecs.len();
        let pos = |v: VertexId| alg.vertices().binary_search(&v).expect("vertex of algebra");
        let compat = (0..k)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(k);
                for j in i + 1..k {
                    if alg.pair_rigid(&indecs[i], &indecs[j]) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let support = indecs
            .iter()
            .map(|m| {
                let mut s = FixedBitSet::with_capacity(alg.num_vertices());
                for v in alg.comp_factors(m) {
                    s.insert(pos(v));
                }
                s
            })
            .collect();
        RigidTable {
            indecs,
            compat,
            support,
            vertices: alg.num_vertices(),
        }
    }

    /// Depth-first search over τ-rigid sets in increasing index order,
    /// starting from the set `{first}`. Calls `visit` on every set reached.
    fn search_from(&self, first: usize, visit: &mut dyn FnMut(&[usize], &FixedBitSet)) {
        let mut chosen = vec![first];
        let cand = self.compat[first].clone();
        let support = self.support[first].clone();
        self.dfs(&mut chosen, &cand, &support, visit);
    }

    fn dfs(
        &self,
        chosen: &mut Vec<usize>,
        cand: &FixedBitSet,
        support: &FixedBitSet,
        visit: &mut dyn FnMut(&[usize], &FixedBitSet),
    ) {
        visit(chosen, support);
        assert!(
            chosen.len() <= self.vertices,
            "τ-rigid module with more summands than vertices"
        );
        if chosen.len() == self.vertices {
            return;
        }
        for j in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(&self.compat[j]);
            let mut sup = support.clone();
            sup.union_with(&self.support[j]);
            chosen.push(j);
            self.dfs(chosen, &next, &sup, visit);
            chosen.pop();
        }
    }
}

impl NakayamaAlgebra {
    /// The pair determined by `m` if `m` is support τ-tilting.
    pub fn is_support_tau_tilting(&self, m: &BasicModule) -> Option<SttPair> {
        if !self.is_tau_rigid(m) {
            return None;
        }
        let support = self.support(m);
        if support.len() != m.len() {
            return None;
        }
        let killed = self.vertices().iter().copied().filter(|v| !support.contains(v));
        Some(SttPair::new(m.clone(), killed))
    }

    /// Every basic τ-rigid module, including the zero module, in canonical order.
    pub fn enumerate_tau_rigid(&self) -> Vec<BasicModule> {
        let table = RigidTable::new(self);
        let mut out: Vec<BasicModule> = (0..table.indecs.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut found = Vec::new();
                table.search_from(i, &mut |chosen, _| {
                    found.push(BasicModule::new(chosen.iter().map(|&c| table.indecs[c])));
                });
                found
            })
            .collect();
        out.push(BasicModule::empty());
        out.sort();
        out
    }

    /// All basic support τ-tilting pairs in canonical order.
    pub fn enumerate_stt(&self) -> Vec<SttPair> {
        let comps = self.components();
        if comps.len() > 1 {
            let parts: Vec<Vec<SttPair>> = comps.iter().map(|c| c.enumerate_connected()).collect();
            let mut out = vec![SttPair::default()];
            for part in &parts {
                out = out
                    .iter()
                    .flat_map(|acc| {
                        part.iter().map(move |p| {
                            SttPair::new(
                                acc.summands.union(&p.summands),
                                acc.killed.iter().chain(p.killed.iter()).copied(),
                            )
                        })
                    })
                    .collect();
            }
            out.sort();
            return out;
        }
        self.enumerate_connected()
    }

    fn enumerate_connected(&self) -> Vec<SttPair> {
        let table = RigidTable::new(self);
        let verts = self.vertices();
        let to_pair = |chosen: &[usize], support: &FixedBitSet| {
            SttPair::new(
                BasicModule::new(chosen.iter().map(|&c| table.indecs[c])),
                (0..verts.len()).filter(|p| !support.contains(*p)).map(|p| verts[p]),
            )
        };
        let mut out: Vec<SttPair> = (0..table.indecs.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut found = Vec::new();
                table.search_from(i, &mut |chosen, support| {
                    if support.count_ones(..) == chosen.len() {
                        found.push(to_pair(chosen, support));
                    }
                });
                found
            })
            .collect();
        out.push(SttPair::new(BasicModule::empty(), verts.iter().copied()));
        out.sort();
        out
    }

    /// Support τ-tilting pairs with no killed vertex.
    pub fn enumerate_tau_tilt(&self) -> Vec<SttPair> {
        self.enumerate_stt()
            .into_iter()
            .filter(|p| p.is_tau_tilting())
            .collect()
    }

    /// Support τ-tilting pairs with at least one killed vertex.
    pub fn enumerate_ps_tau_tilt(&self) -> Vec<SttPair> {
        self.enumerate_stt()
            .into_iter()
            .filter(|p| !p.is_tau_tilting())
            .collect()
    }

    /// Nonprojective summands.
    pub fn np_part(&self, m: &BasicModule) -> BasicModule {
        m.iter().copied().filter(|x| !self.is_projective(x)).collect()
    }

    /// Projective summands.
    pub fn pr_part(&self, m: &BasicModule) -> BasicModule {
        m.iter().copied().filter(|x| self.is_projective(x)).collect()
    }

    fn require_cyclic_connected(&self) -> Result<()> {
        match self.vertices() {
            [] => Err(Error::NotCyclicConnected),
            [_] => Ok(()),
            vs => match self.shape_of(vs[0]) {
                Shape::Cycle(c) if c == vs.len() => Ok(()),
                _ => Err(Error::NotCyclicConnected),
            },
        }
    }

    /// Shifts each vertex one step along the cycle.
    pub fn phi(&self, killed: &[VertexId]) -> Result<Vec<VertexId>> {
        self.require_cyclic_connected()?;
        let mut out: Vec<VertexId> = killed.iter().map(|&v| self.next_down(v).unwrap_or(v)).collect();
        out.sort();
        Ok(out)
    }

    /// Completes a proper pair without projective summands to a τ-tilting
    /// module by adding the projectives at the shifted killed vertices.
    pub fn lift_2_11(&self, pair: &SttPair) -> Result<SttPair> {
        if pair.killed.is_empty() || !self.pr_part(&pair.summands).is_empty() {
            return Err(Error::NotInDomain(format!("{pair:?}")));
        }
        let extra = self.phi(&pair.killed)?.into_iter().map(|v| self.projective(v));
        Ok(SttPair::new(pair.summands.union(&extra.collect()), []))
    }

    /// Inverse of [`lift_2_11`](Self::lift_2_11): keep the nonprojective part.
    pub fn drop_2_11(&self, pair: &SttPair) -> Result<SttPair> {
        self.require_cyclic_connected()?;
        if !pair.killed.is_empty() {
            return Err(Error::NotInDomain(format!("{pair:?}")));
        }
        let np = self.np_part(&pair.summands);
        let support = self.support(&np);
        Ok(SttPair::new(
            np,
            self.vertices().iter().copied().filter(|v| !support.contains(v)),
        ))
    }

    /// Splits a τ-tilting module over a connected linear algebra into the
    /// index `i` of its class and the remaining τ-tilting module over the
    /// quotient killing `next_down^{i-1}(source)`.
    ///
    /// `i = 1` when no nonprojective summand has the source as top,
    /// otherwise `i` is one more than the largest length of such summands.
    pub fn type_a_split(&self, pair: &SttPair) -> Result<(u32, NakayamaAlgebra, SttPair)> {
        let source = self.linear_source()?;
        if !pair.is_tau_tilting() || self.is_support_tau_tilting(&pair.summands).as_ref() != Some(pair) {
            return Err(Error::NotTauTilting);
        }
        let p_source = self.projective(source);
        if !pair.summands.contains(&p_source) {
            return Err(Error::NotTauTilting);
        }
        let i = pair
            .summands
            .iter()
            .filter(|x| x.top == source && !self.is_projective(x))
            .map(|x| x.len + 1)
            .max()
            .unwrap_or(1);
        let cut = self
            .walk_down(source, i - 1)
            .expect("index within the projective at the source");
        let quotient = self.quotient_by_idempotent(&[cut])?;
        let rest = pair.summands.without(&p_source);
        let inner = quotient.is_support_tau_tilting(&rest).ok_or(Error::NotTauTilting)?;
        if !inner.is_tau_tilting() {
            return Err(Error::NotTauTilting);
        }
        Ok((i, quotient, inner))
    }

    /// Inverse of [`type_a_split`](Self::type_a_split).
    pub fn type_a_join(&self, inner: &SttPair) -> Result<SttPair> {
        let source = self.linear_source()?;
        let joined = inner.summands.with(self.projective(source));
        self.is_support_tau_tilting(&joined)
            .filter(|p| p.is_tau_tilting())
            .ok_or(Error::NotTauTilting)
    }
}
