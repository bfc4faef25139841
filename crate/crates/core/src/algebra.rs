//! Nakayama algebras described by quiver shape and Kupisch series.
//!
//! An algebra is stored as a set of vertex labels, the successor map
//! `next_down` (the target of the unique arrow leaving a vertex) and the
//! Loewy lengths of the indecomposable projectives. Labels are never
//! renumbered, so modules of a quotient can be compared with modules of the
//! algebra they came from.
//!
//! Arrows leaving a vertex whose projective is simple carry no module
//! structure and are dropped on construction. Two algebras are equal when
//! they have the same vertices, effective arrows and Kupisch series.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Label of a vertex (equivalently, of a simple module).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Shape of a connected component of the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// A directed path with this many vertices (a single vertex is a path).
    Path(usize),
    /// An oriented cycle with this many vertices.
    Cycle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NakayamaAlgebra {
    vertices: Vec<VertexId>,
    next_down: BTreeMap<VertexId, VertexId>,
    loewy: BTreeMap<VertexId, u32>,
}

impl NakayamaAlgebra {
    /// Builds an algebra from raw data, normalizing and validating it.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        next_down: BTreeMap<VertexId, VertexId>,
        loewy: BTreeMap<VertexId, u32>,
    ) -> Result<Self> {
        let set: BTreeSet<VertexId> = vertices.into_iter().collect();
        let vertices: Vec<VertexId> = set.iter().copied().collect();
        for v in &vertices {
            match loewy.get(v) {
                None => return Err(Error::InvalidKupisch(format!("no Loewy length for vertex {v}"))),
                Some(0) => return Err(Error::InvalidKupisch(format!("Loewy length of P{v} is 0"))),
                Some(_) => {}
            }
        }
        if let Some(v) = loewy.keys().find(|v| !set.contains(v)) {
            return Err(Error::InvalidKupisch(format!(
                "Loewy length given for unknown vertex {v}"
            )));
        }
        let mut seen_targets = BTreeSet::new();
        for (s, t) in &next_down {
            if !set.contains(s) || !set.contains(t) {
                return Err(Error::InvalidQuiver(format!("arrow {s} -> {t} leaves the vertex set")));
            }
            if !seen_targets.insert(*t) {
                return Err(Error::InvalidQuiver(format!("vertex {t} has two incoming arrows")));
            }
        }
        let next_down = next_down.into_iter().filter(|(s, _)| loewy[s] >= 2).collect();
        let alg = NakayamaAlgebra {
            vertices,
            next_down,
            loewy: loewy.into_iter().filter(|(v, _)| set.contains(v)).collect(),
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Checks the Kupisch admissibility constraints.
    pub fn validate(&self) -> Result<()> {
        for &v in &self.vertices {
            let l = self.loewy[&v];
            match self.next_down.get(&v) {
                Some(t) => {
                    if l > self.loewy[t] + 1 {
                        return Err(Error::InvalidKupisch(format!(
                            "l(P{v}) = {l} exceeds l(P{t}) + 1 = {}",
                            self.loewy[t] + 1
                        )));
                    }
                }
                None if l != 1 => {
                    return Err(Error::InvalidKupisch(format!(
                        "P{v} has Loewy length {l} but {v} has no outgoing arrow"
                    )))
                }
                None => {}
            }
        }
        Ok(())
    }

    /// The zero algebra.
    pub fn zero() -> Self {
        NakayamaAlgebra {
            vertices: Vec::new(),
            next_down: BTreeMap::new(),
            loewy: BTreeMap::new(),
        }
    }

    /// `K Δ_n / J^r`: vertices `1..=n` on one cycle, every projective of Loewy length `r`.
    pub fn cyclic(n: u32, r: u32) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::InvalidKupisch(format!("cyclic({n}, {r}) needs n, r >= 1")));
        }
        Self::cyclic_kupisch(&vec![r; n as usize])
    }

    /// Cyclic quiver on `1..=n` (arrow `j -> j-1`, `1 -> n`) with the given Kupisch series.
    pub fn cyclic_kupisch(kupisch: &[u32]) -> Result<Self> {
        let n = kupisch.len() as u32;
        if n == 0 {
            return Err(Error::InvalidKupisch("empty Kupisch series".into()));
        }
        let vertices: Vec<VertexId> = (1..=n).map(VertexId).collect();
        let next_down = (1..=n)
            .map(|j| (VertexId(j), VertexId(if j == 1 { n } else { j - 1 })))
            .collect();
        let loewy = (1..=n).map(|j| (VertexId(j), kupisch[j as usize - 1])).collect();
        Self::new(vertices, next_down, loewy)
    }

    /// Linear quiver `n -> n-1 -> ... -> 1` with `loewy(j) = kupisch[j-1]`.
    pub fn linear(kupisch: &[u32]) -> Result<Self> {
        let n = kupisch.len() as u32;
        if n == 0 {
            return Ok(Self::zero());
        }
        if kupisch[0] != 1 {
            return Err(Error::InvalidKupisch(format!(
                "linear series must start with 1, got {}",
                kupisch[0]
            )));
        }
        let vertices: Vec<VertexId> = (1..=n).map(VertexId).collect();
        let next_down = (2..=n).map(|j| (VertexId(j), VertexId(j - 1))).collect();
        let loewy = (1..=n).map(|j| (VertexId(j), kupisch[j as usize - 1])).collect();
        Self::new(vertices, next_down, loewy)
    }

    /// `Γ_n^r`, the linear algebra with radical length `r`: `loewy(j) = min(j, r)`.
    pub fn gamma(n: u32, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidKupisch("gamma needs r >= 1".into()));
        }
        let kupisch: Vec<u32> = (1..=n).map(|j| j.min(r)).collect();
        Self::linear(&kupisch)
    }

    /// The hereditary path algebra of a linearly oriented `A_n`.
    pub fn path_algebra(n: u32) -> Result<Self> {
        Self::gamma(n, n.max(1))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.loewy.contains_key(&v)
    }

    /// Loewy length of `P_v`. Panics if `v` is not a vertex.
    pub fn loewy(&self, v: VertexId) -> u32 {
        self.loewy[&v]
    }

    pub fn kupisch(&self) -> &BTreeMap<VertexId, u32> {
        &self.loewy
    }

    /// Target of the arrow leaving `v`, if any.
    pub fn next_down(&self, v: VertexId) -> Option<VertexId> {
        self.next_down.get(&v).copied()
    }

    pub fn arrows(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.next_down
    }

    /// Source of the arrow entering `v`, if any.
    pub fn up(&self, v: VertexId) -> Option<VertexId> {
        self.next_down.iter().find(|(_, t)| **t == v).map(|(s, _)| *s)
    }

    /// `Σ_j loewy(j)`, which is the dimension of the algebra and the number
    /// of indecomposable modules.
    pub fn total_dimension(&self) -> u32 {
        self.loewy.values().sum()
    }

    /// Shape of the connected component containing `v`.
    pub fn shape_of(&self, v: VertexId) -> Shape {
        let mut size = 1;
        let mut cur = v;
        while let Some(next) = self.next_down(cur) {
            if next == v {
                return Shape::Cycle(size);
            }
            size += 1;
            cur = next;
        }
        // walk upwards for the rest of the path
        let mut cur = v;
        while let Some(prev) = self.up(cur) {
            size += 1;
            cur = prev;
        }
        Shape::Path(size)
    }

    /// Number of vertices on the longest directed path starting at `v`, or
    /// `None` if `v` lies on a cycle.
    fn reach(&self, v: VertexId) -> Option<u32> {
        let mut count = 1;
        let mut cur = v;
        while let Some(next) = self.next_down(cur) {
            if next == v {
                return None;
            }
            count += 1;
            cur = next;
        }
        Some(count)
    }

    /// The vertex `steps` arrows below `v`.
    pub fn walk_down(&self, v: VertexId, steps: u32) -> Option<VertexId> {
        let mut cur = v;
        for _ in 0..steps {
            cur = self.next_down(cur)?;
        }
        Some(cur)
    }

    /// Vertices `j` whose projective `P_j` is also injective, found by scanning
    /// all indecomposables for a longer module with the same socle.
    pub fn projective_injectives(&self) -> Result<Vec<VertexId>> {
        if self.is_zero() {
            return Err(Error::ZeroAlgebra);
        }
        let indecs = self.all_indecs();
        let socles: Vec<(VertexId, u32)> = indecs.iter().map(|m| (self.socle_vertex(m), m.len)).collect();
        Ok(self
            .vertices
            .iter()
            .copied()
            .filter(|&j| {
                let pj = crate::modcat::Indec::new(j, self.loewy(j));
                let soc = self.socle_vertex(&pj);
                !socles.iter().any(|&(s, l)| s == soc && l > pj.len)
            })
            .collect())
    }

    /// Closed form: `P_j` is injective iff no arrow enters `j` or the
    /// projective at the vertex above is not longer than `P_j`.
    pub fn projective_injectives_closed_form(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .copied()
            .filter(|&j| match self.up(j) {
                None => true,
                Some(u) => self.loewy(u) <= self.loewy(j),
            })
            .collect()
    }

    pub fn is_projective_injective(&self, j: VertexId) -> bool {
        self.contains(j)
            && match self.up(j) {
                None => true,
                Some(u) => self.loewy(u) <= self.loewy(j),
            }
    }

    /// `Λ / soc P_j` for a projective-injective `P_j`.
    pub fn reject(&self, j: VertexId) -> Result<Self> {
        if !self.is_projective_injective(j) {
            return Err(Error::NotProjectiveInjective(j));
        }
        let mut loewy = self.loewy.clone();
        let l = loewy.get_mut(&j).expect("vertex present");
        *l -= 1;
        if *l == 0 {
            return self.quotient_by_idempotent(&[j]);
        }
        let out = Self::clamped(self.vertices.clone(), self.next_down.clone(), loewy)?;
        debug_assert_eq!(out.total_dimension() + 1, self.total_dimension());
        Ok(out)
    }

    /// `Λ / <e>` where `e` is the sum of the idempotents at `killed`.
    pub fn quotient_by_idempotent(&self, killed: &[VertexId]) -> Result<Self> {
        let killed: BTreeSet<VertexId> = killed.iter().copied().collect();
        if let Some(v) = killed.iter().find(|v| !self.contains(**v)) {
            return Err(Error::DifferentAlgebra(format!("vertex {v}")));
        }
        let vertices: Vec<VertexId> = self.vertices.iter().copied().filter(|v| !killed.contains(v)).collect();
        let next_down = self
            .next_down
            .iter()
            .filter(|(s, t)| !killed.contains(s) && !killed.contains(t))
            .map(|(s, t)| (*s, *t))
            .collect();
        let loewy = self
            .loewy
            .iter()
            .filter(|(v, _)| !killed.contains(v))
            .map(|(v, l)| (*v, *l))
            .collect();
        Self::clamped(vertices, next_down, loewy)
    }

    /// Shrinks every Loewy length to the longest path available below the
    /// vertex, dropping arrows out of simple projectives until stable.
    fn clamped(
        vertices: Vec<VertexId>,
        next_down: BTreeMap<VertexId, VertexId>,
        mut loewy: BTreeMap<VertexId, u32>,
    ) -> Result<Self> {
        let mut alg = NakayamaAlgebra {
            vertices,
            next_down,
            loewy: BTreeMap::new(),
        };
        loop {
            alg.next_down.retain(|s, _| loewy[s] >= 2);
            let mut changed = false;
            for &v in &alg.vertices {
                if let Some(reach) = alg.reach(v) {
                    let l = loewy.get_mut(&v).expect("vertex present");
                    if *l > reach {
                        *l = reach;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        alg.loewy = loewy;
        alg.validate()?;
        Ok(alg)
    }

    /// Connected components, ordered by smallest vertex label.
    pub fn components(&self) -> Vec<NakayamaAlgebra> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &v in &self.vertices {
            if seen.contains(&v) {
                continue;
            }
            let mut members = BTreeSet::new();
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                if !members.insert(x) {
                    continue;
                }
                if let Some(t) = self.next_down(x) {
                    stack.push(t);
                }
                if let Some(s) = self.up(x) {
                    stack.push(s);
                }
            }
            seen.extend(members.iter().copied());
            out.push(self.restrict(&members));
        }
        out
    }

    fn restrict(&self, members: &BTreeSet<VertexId>) -> NakayamaAlgebra {
        NakayamaAlgebra {
            vertices: members.iter().copied().collect(),
            next_down: self
                .next_down
                .iter()
                .filter(|(s, _)| members.contains(s))
                .map(|(s, t)| (*s, *t))
                .collect(),
            loewy: self
                .loewy
                .iter()
                .filter(|(v, _)| members.contains(v))
                .map(|(v, l)| (*v, *l))
                .collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// If the vertices are exactly `1..=n` and every arrow goes `j -> (j-1)_n`,
    /// returns `n`. Cyclic and linear algebras built by the constructors have
    /// this layout, which is what the polygon model needs.
    pub fn polygon_size(&self) -> Option<u32> {
        let n = self.vertices.len() as u32;
        if n == 0 {
            return None;
        }
        let labelled = self.vertices.iter().enumerate().all(|(i, v)| v.0 == i as u32 + 1);
        let arrows_ok = self
            .next_down
            .iter()
            .all(|(s, t)| t.0 == if s.0 == 1 { n } else { s.0 - 1 });
        (labelled && arrows_ok).then_some(n)
    }

    /// Source vertex of a connected linear algebra.
    pub fn linear_source(&self) -> Result<VertexId> {
        if !self.is_connected() {
            return Err(Error::NotLinear);
        }
        let v = self.vertices[0];
        match self.shape_of(v) {
            Shape::Path(_) => Ok(self
                .vertices
                .iter()
                .copied()
                .find(|&x| self.up(x).is_none())
                .expect("a path has a source")),
            Shape::Cycle(_) => Err(Error::NotLinear),
        }
    }

    /// The Loewy lengths listed in label order.
    pub fn kupisch_series(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| self.loewy(*v)).collect()
    }
}

impl fmt::Display for NakayamaAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components()
            .iter()
            .map(|c| {
                let series: Vec<String> = c.vertices.iter().map(|v| format!("{v}:{}", c.loewy(*v))).collect();
                let kind = match c.shape_of(c.vertices[0]) {
                    Shape::Cycle(_) => "cyclic",
                    Shape::Path(_) => "linear",
                };
                format!("{kind}({})", series.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// JSON literal for an algebra.
///
/// ```json
/// {"kind":"cyclic","kupisch":[3,3,3]}
/// {"kind":"linear","kupisch":[1,2,3]}
/// {"kind":"general","vertices":[1,2],"next_down":{"2":1},"loewy":{"1":1,"2":2}}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraLiteral {
    Cyclic {
        kupisch: Vec<u32>,
    },
    Linear {
        kupisch: Vec<u32>,
    },
    General {
        vertices: Vec<u32>,
        #[serde(default)]
        next_down: BTreeMap<String, u32>,
        loewy: BTreeMap<String, u32>,
    },
}

impl AlgebraLiteral {
    pub fn build(&self) -> Result<NakayamaAlgebra> {
        match self {
            AlgebraLiteral::Cyclic { kupisch } => NakayamaAlgebra::cyclic_kupisch(kupisch),
            AlgebraLiteral::Linear { kupisch } => NakayamaAlgebra::linear(kupisch),
            AlgebraLiteral::General {
                vertices,
                next_down,
                loewy,
            } => {
                let label = |key: &String| {
                    key.trim()
                        .parse::<u32>()
                        .map(VertexId)
                        .map_err(|_| Error::Parse(format!("vertex label {key:?} is not a positive integer")))
                };
                let next_down = next_down
                    .iter()
                    .map(|(s, t)| Ok((label(s)?, VertexId(*t))))
                    .collect::<Result<_>>()?;
                let loewy = loewy.iter().map(|(v, l)| Ok((label(v)?, *l))).collect::<Result<_>>()?;
                NakayamaAlgebra::new(vertices.iter().map(|v| VertexId(*v)), next_down, loewy)
            }
        }
    }

    pub fn parse(text: &str) -> Result<NakayamaAlgebra> {
        let lit: AlgebraLiteral = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "algebra literal at line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        lit.build()
    }
}

impl From<&NakayamaAlgebra> for AlgebraLiteral {
    fn from(alg: &NakayamaAlgebra) -> Self {
        AlgebraLiteral::General {
            vertices: alg.vertices.iter().map(|v| v.0).collect(),
            next_down: alg.next_down.iter().map(|(s, t)| (s.to_string(), t.0)).collect(),
            loewy: alg.loewy.iter().map(|(v, l)| (v.to_string(), *l)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u32) -> VertexId {
        VertexId(x)
    }

    #[test]
    fn cyclic_constructors() {
        let a = NakayamaAlgebra::cyclic(3, 3).unwrap();
        assert_eq!(a.kupisch_series(), vec![3, 3, 3]);
        assert_eq!(a.next_down(v(1)), Some(v(3)));
        assert_eq!(a.next_down(v(3)), Some(v(2)));
        assert_eq!(a.shape_of(v(2)), Shape::Cycle(3));

        let k = NakayamaAlgebra::cyclic(1, 1).unwrap();
        assert_eq!(k.num_vertices(), 1);
        assert_eq!(k.loewy(v(1)), 1);
        // arrows out of simple projectives are dropped
        assert_eq!(k.next_down(v(1)), None);

        let loop2 = NakayamaAlgebra::cyclic(1, 2).unwrap();
        assert_eq!(loop2.next_down(v(1)), Some(v(1)));
        assert_eq!(loop2.shape_of(v(1)), Shape::Cycle(1));

        let a45 = NakayamaAlgebra::cyclic(4, 5).unwrap();
        assert_eq!(a45.total_dimension(), 20);
    }

    #[test]
    fn linear_constructor_checks_kupisch() {
        let ka3 = NakayamaAlgebra::linear(&[1, 2, 3]).unwrap();
        assert_eq!(ka3.shape_of(v(1)), Shape::Path(3));
        assert_eq!(ka3.linear_source().unwrap(), v(3));
        assert_eq!(
            NakayamaAlgebra::linear(&[1, 2, 2, 2]).unwrap(),
            NakayamaAlgebra::gamma(4, 2).unwrap()
        );
        assert!(matches!(
            NakayamaAlgebra::linear(&[1, 3]),
            Err(Error::InvalidKupisch(_))
        ));
        assert!(matches!(
            NakayamaAlgebra::linear(&[2, 3]),
            Err(Error::InvalidKupisch(_))
        ));
        assert!(NakayamaAlgebra::cyclic_kupisch(&[2, 4, 3]).is_err());
    }

    #[test]
    fn projective_injectives_examples() {
        let a = NakayamaAlgebra::cyclic(3, 3).unwrap();
        assert_eq!(a.projective_injectives().unwrap(), vec![v(1), v(2), v(3)]);
        let ka3 = NakayamaAlgebra::linear(&[1, 2, 3]).unwrap();
        assert_eq!(ka3.projective_injectives().unwrap(), vec![v(3)]);
        assert_eq!(NakayamaAlgebra::zero().projective_injectives(), Err(Error::ZeroAlgebra));
        // Λ₉ = K(3 -> 2  1) of the worked chain: P3 = 3/2 is the only nonsimple projective-injective
        let l9 = NakayamaAlgebra::linear(&[1, 1, 2]).unwrap();
        assert_eq!(l9.projective_injectives().unwrap(), vec![v(1), v(3)]);
    }

    #[test]
    fn closed_form_agrees_with_socle_scan() {
        for n in 1..=6u32 {
            for series in cyclic_series(n, 7) {
                let a = NakayamaAlgebra::cyclic_kupisch(&series).unwrap();
                assert_eq!(
                    a.projective_injectives().unwrap(),
                    a.projective_injectives_closed_form(),
                    "{series:?}"
                );
            }
            for series in linear_series(n, 7) {
                let a = NakayamaAlgebra::linear(&series).unwrap();
                assert_eq!(
                    a.projective_injectives().unwrap(),
                    a.projective_injectives_closed_form(),
                    "{series:?}"
                );
            }
        }
    }

    fn cyclic_series(n: u32, max: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![1u32; n as usize];
        loop {
            if NakayamaAlgebra::cyclic_kupisch(&cur).is_ok() {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == cur.len() {
                    return out;
                }
                if cur[i] < max {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 1;
                i += 1;
            }
        }
    }

    fn linear_series(n: u32, max: u32) -> Vec<Vec<u32>> {
        fn rec(prefix: &mut Vec<u32>, n: usize, max: u32, out: &mut Vec<Vec<u32>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            let hi = prefix.last().map_or(1, |l| (l + 1).min(max));
            for l in 1..=hi {
                prefix.push(l);
                rec(prefix, n, max, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), n as usize, max, &mut out);
        out
    }

    #[test]
    fn reject_matches_worked_chain() {
        let a = NakayamaAlgebra::cyclic(3, 4).unwrap();
        let b = a.reject(v(1)).unwrap();
        assert_eq!(b.kupisch_series(), vec![3, 4, 4]);
        assert_eq!(b.total_dimension(), 11);
        assert!(matches!(b.reject(v(1)), Err(Error::NotProjectiveInjective(_))));

        let k = NakayamaAlgebra::cyclic(1, 1).unwrap();
        assert!(k.reject(v(1)).unwrap().is_zero());
    }

    #[test]
    fn reject_opens_cycle() {
        // (2,2,3): rejecting at 1 leaves P1 simple and the quiver becomes linear 3 -> 2 -> 1
        let a = NakayamaAlgebra::cyclic_kupisch(&[2, 2, 3]).unwrap();
        let b = a.reject(v(1)).unwrap();
        assert_eq!(b, NakayamaAlgebra::linear(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn repeated_rejection_reaches_zero() {
        let mut a = NakayamaAlgebra::cyclic(3, 4).unwrap();
        let mut steps = 0;
        while !a.is_zero() {
            let dim = a.total_dimension();
            let j = a.projective_injectives().unwrap()[0];
            a = a.reject(j).unwrap();
            assert_eq!(a.total_dimension() + 1, dim);
            steps += 1;
        }
        assert_eq!(steps, 12);
    }

    #[test]
    fn idempotent_quotients() {
        let a = NakayamaAlgebra::cyclic(3, 3).unwrap();
        let q = a.quotient_by_idempotent(&[v(1)]).unwrap();
        assert_eq!(q.vertices(), &[v(2), v(3)]);
        assert_eq!(q.loewy(v(3)), 2);
        assert_eq!(q.loewy(v(2)), 1);
        assert_eq!(q.shape_of(v(2)), Shape::Path(2));
        assert!(a.quotient_by_idempotent(&[v(1), v(2), v(3)]).unwrap().is_zero());
        assert_eq!(a.quotient_by_idempotent(&[]).unwrap(), a);
    }

    #[test]
    fn components_split() {
        let a = NakayamaAlgebra::cyclic(3, 3).unwrap();
        assert_eq!(a.components(), vec![a.clone()]);
        let ka3 = NakayamaAlgebra::linear(&[1, 2, 3]).unwrap();
        let q = ka3.quotient_by_idempotent(&[v(2)]).unwrap();
        let comps = q.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.num_vertices() == 1));
        assert!(NakayamaAlgebra::zero().components().is_empty());
    }

    #[test]
    fn literal_parsing() {
        let a = AlgebraLiteral::parse(r#"{"kind":"cyclic","kupisch":[3,3,3]}"#).unwrap();
        assert_eq!(a, NakayamaAlgebra::cyclic(3, 3).unwrap());
        let b = AlgebraLiteral::parse(r#"{"kind":"linear","kupisch":[1,2,3]}"#).unwrap();
        assert_eq!(b, NakayamaAlgebra::linear(&[1, 2, 3]).unwrap());
        let c = AlgebraLiteral::parse(
            r#"{"kind":"general","vertices":[1,2,3],"next_down":{"2":1,"3":2},"loewy":{"1":1,"2":2,"3":3}}"#,
        )
        .unwrap();
        assert_eq!(c, b);
        let round = serde_json::to_string(&AlgebraLiteral::from(&c)).unwrap();
        assert_eq!(AlgebraLiteral::parse(&round).unwrap(), c);
        match AlgebraLiteral::parse("{\"kind\":\n\"cyclic\", }") {
            Err(Error::Parse(msg)) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn two_incoming_arrows_rejected() {
        let vertices = [v(1), v(2), v(3)];
        let next_down = [(v(2), v(1)), (v(3), v(1))].into_iter().collect();
        let loewy = [(v(1), 1), (v(2), 2), (v(3), 2)].into_iter().collect();
        assert!(matches!(
            NakayamaAlgebra::new(vertices, next_down, loewy),
            Err(Error::InvalidQuiver(_))
        ));
    }
}
