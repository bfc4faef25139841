//! Arcs and triangulations of the once-punctured polygon.
//!
//! Points on the boundary are `1..=n`. An inner arc `<i,j>` runs from `i`
//! to `j` around `t = (j - i)_n` boundary segments (`t = n` when `i = j`,
//! enclosing the puncture); a projective arc `<*,j>` joins the puncture to
//! `j`. Crossing is decided by interval arithmetic on the boundary.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::algebra::{NakayamaAlgebra, VertexId};
use crate::error::{Error, Result};
use crate::modcat::{BasicModule, Indec};
use crate::tautilt::{Slot, SttPair};

/// Representative of `x` modulo `n` in `1..=n`.
pub fn cyc(x: i64, n: u32) -> u32 {
    let n = n as i64;
    ((x - 1).rem_euclid(n) + 1) as u32
}

/// Whether `x` lies in the cyclic interval `[a, b]_n`.
fn within(x: i64, a: i64, b: i64, n: u32) -> bool {
    let n = n as i64;
    (x - a).rem_euclid(n) <= (b - a).rem_euclid(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Arc {
    #[serde(rename = "proj")]
    Projective {
        j: u32,
    },
    Inner {
        i: u32,
        j: u32,
    },
}

impl Arc {
    pub fn inner(i: u32, j: u32) -> Self {
        Arc::Inner { i, j }
    }

    pub fn proj(j: u32) -> Self {
        Arc::Projective { j }
    }

    /// Terminal point.
    pub fn terminal(&self) -> u32 {
        match *self {
            Arc::Projective { j } | Arc::Inner { j, .. } => j,
        }
    }

    /// Number of boundary segments spanned by an inner arc.
    pub fn length(&self, n: u32) -> Option<u32> {
        match *self {
            Arc::Projective { .. } => None,
            Arc::Inner { i, j } => Some(cyc(j as i64 - i as i64, n)),
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, Arc::Projective { .. })
    }

    fn in_polygon(&self, n: u32) -> bool {
        match *self {
            Arc::Projective { j } => (1..=n).contains(&j),
            Arc::Inner { i, j } => n >= 2 && (1..=n).contains(&i) && (1..=n).contains(&j),
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arc::Projective { j } => write!(f, "<*,{j}>"),
            Arc::Inner { i, j } => write!(f, "<{i},{j}>"),
        }
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::Parse(format!("arc {s:?} is not of the form <i,j> or <*,j>")))?;
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("arc {s:?} needs two endpoints")))?;
        let num = |x: &str| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad endpoint {x:?} in arc {s:?}")))
        };
        let j = num(b)?;
        match a.trim() {
            "*" | "•" => Ok(Arc::proj(j)),
            other => Ok(Arc::inner(num(other)?, j)),
        }
    }
}

/// Parses a whitespace separated list of arcs.
pub fn parse_arcs(s: &str) -> Result<Vec<Arc>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let end = rest
            .find('>')
            .ok_or_else(|| Error::Parse(format!("unterminated arc in {s:?}")))?;
        out.push(rest[..=end].parse()?);
        rest = rest[end + 1..].trim_start_matches([' ', ',', '\t', '\n']);
    }
    Ok(out)
}

/// Whether two arcs can be drawn without crossing.
pub fn compatible(a: &Arc, b: &Arc, n: u32) -> bool {
    !crosses(a, b, n)
}

fn crosses(a: &Arc, b: &Arc, n: u32) -> bool {
    match (*a, *b) {
        (Arc::Projective { .. }, Arc::Projective { .. }) => false,
        (Arc::Projective { j: p }, Arc::Inner { i: k, j: l })
        | (Arc::Inner { i: k, j: l }, Arc::Projective { j: p }) => {
            let (k, l) = (k as i64, l as i64);
            within(p as i64, k + 1, l - 1, n)
        }
        (Arc::Inner { i, j }, Arc::Inner { i: k, j: l }) => {
            let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);
            let one = |i: i64, j: i64, k: i64, l: i64| within(j, k + 1, l - 1, n) && within(k + 1, i + 2, j, n);
            one(i, j, k, l) || one(k, l, i, j)
        }
    }
}

/// All admissible arcs of the `n`-gon, projective arcs first.
pub fn all_arcs(n: u32) -> Vec<Arc> {
    let mut out: Vec<Arc> = (1..=n).map(Arc::proj).collect();
    for j in 1..=n {
        for t in 2..=n {
            out.push(Arc::inner(cyc(j as i64 - t as i64, n), j));
        }
    }
    out.sort();
    out
}

/// A maximal set of pairwise compatible arcs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangulation {
    pub n: u32,
    pub arcs: Vec<Arc>,
}

impl Triangulation {
    /// Checks compatibility and cardinality.
    pub fn new(n: u32, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort();
        arcs.dedup();
        if let Some(a) = arcs.iter().find(|a| !a.in_polygon(n)) {
            return Err(Error::NotInDomain(format!("arc {a} on a {n}-gon")));
        }
        for (x, a) in arcs.iter().enumerate() {
            if let Some(b) = arcs[x + 1..].iter().find(|b| crosses(a, b, n)) {
                return Err(Error::NotInDomain(format!("arcs {a} and {b} cross")));
            }
        }
        if arcs.len() != n as usize {
            return Err(Error::NotInDomain(format!(
                "{} arcs do not triangulate a {n}-gon",
                arcs.len()
            )));
        }
        Ok(Triangulation { n, arcs })
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.binary_search(a).is_ok()
    }

    /// Number of inner arcs lying in the fan bounded by `<*,i>`, `<*,j>` and
    /// the boundary from `i` to `j`.
    pub fn fan_count(&self, i: u32, j: u32) -> usize {
        let n = self.n;
        let span = cyc(j as i64 - i as i64, n);
        self.arcs
            .iter()
            .filter(|a| match **a {
                Arc::Projective { .. } => false,
                Arc::Inner { i: k, .. } => {
                    let offset = (k as i64 - i as i64).rem_euclid(n as i64) as u32;
                    offset + a.length(n).unwrap() <= span
                }
            })
            .count()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All triangulations of the `n`-gon.
pub fn enumerate_triangulations(n: u32) -> Vec<Triangulation> {
    enumerate_restricted(n, &vec![n; n as usize])
}

/// Triangulations whose inner arcs ending at `j` have length at most `bounds[j-1]`.
pub fn enumerate_restricted(n: u32, bounds: &[u32]) -> Vec<Triangulation> {
    assert_eq!(bounds.len(), n as usize, "one bound per boundary point");
    let arcs: Vec<Arc> = all_arcs(n)
        .into_iter()
        .filter(|a| {
            a.length(n)
                .is_none_or(|t| t <= bounds[a.terminal() as usize - 1].min(n))
        })
        .collect();
    let k = arcs.len();
    let compat: Vec<FixedBitSet> = (0..k)
        .map(|x| {
            let mut row = FixedBitSet::with_capacity(k);
            for y in x + 1..k {
                if compatible(&arcs[x], &arcs[y], n) {
                    row.insert(y);
                }
            }
            row
        })
        .collect();
    let mut all = FixedBitSet::with_capacity(k);
    all.insert_range(..);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cliques(&compat, &all, &mut chosen, n as usize, &mut |c| {
        let arcs: Vec<Arc> = c.iter().map(|&x| arcs[x]).collect();
        debug_assert!(arcs.iter().any(Arc::is_projective));
        out.push(Triangulation { n, arcs });
    });
    out.sort();
    out
}

fn cliques(
    compat: &[FixedBitSet],
    cand: &FixedBitSet,
    chosen: &mut Vec<usize>,
    size: usize,
    found: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == size {
        found(chosen);
        return;
    }
    if chosen.len() + cand.count_ones(..) < size {
        return;
    }
    for x in cand.ones() {
        let mut next = cand.clone();
        next.intersect_with(&compat[x]);
        chosen.push(x);
        cliques(compat, &next, chosen, size, found);
        chosen.pop();
    }
}

/// Pairs of triangulations (by index) that differ in exactly one arc.
pub fn flip_graph(tris: &[Triangulation]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (x, a) in tris.iter().enumerate() {
        for (y, b) in tris.iter().enumerate().skip(x + 1) {
            let shared = a.arcs.iter().filter(|arc| b.contains(arc)).count();
            if shared + 1 == a.arcs.len() {
                edges.push((x, y));
            }
        }
    }
    edges
}

fn polygon(alg: &NakayamaAlgebra) -> Result<u32> {
    alg.polygon_size().ok_or(Error::NotPolygonal)
}

/// The module attached to an admissible arc.
pub fn arc_to_indec(arc: &Arc, alg: &NakayamaAlgebra) -> Result<Indec> {
    let n = polygon(alg)?;
    if !arc.in_polygon(n) {
        return Err(Error::NotInDomain(format!("arc {arc} on a {n}-gon")));
    }
    let j = VertexId(arc.terminal());
    match arc.length(n) {
        None => Ok(alg.projective(j)),
        Some(t) if t > alg.loewy(j) => Err(Error::ArcTooLong {
            arc: arc.to_string(),
            loewy: alg.loewy(j),
        }),
        Some(t) => Ok(Indec::new(j, t - 1)),
    }
}

/// The arc attached to a τ-rigid indecomposable.
pub fn indec_to_arc(m: &Indec, alg: &NakayamaAlgebra) -> Result<Arc> {
    let n = polygon(alg)?;
    if !alg.is_valid_indec(m) {
        return Err(Error::DifferentAlgebra(format!("({}, {})", m.top, m.len)));
    }
    if alg.is_projective(m) {
        return Ok(Arc::proj(m.top.0));
    }
    if !alg.is_tau_rigid_indec(m) {
        return Err(Error::NotTauRigid(format!("({}, {})", m.top, m.len)));
    }
    let j = m.top.0 as i64;
    Ok(Arc::inner(cyc(j - m.len as i64 - 1, n), m.top.0))
}

pub fn triangulation_to_tau_tilt(x: &Triangulation, alg: &NakayamaAlgebra) -> Result<SttPair> {
    if polygon(alg)? != x.n {
        return Err(Error::NotPolygonal);
    }
    let module: BasicModule = x.arcs.iter().map(|a| arc_to_indec(a, alg)).collect::<Result<_>>()?;
    alg.is_support_tau_tilting(&module)
        .filter(|p| p.is_tau_tilting())
        .ok_or(Error::NotTauTilting)
}

pub fn tau_tilt_to_triangulation(pair: &SttPair, alg: &NakayamaAlgebra) -> Result<Triangulation> {
    let n = polygon(alg)?;
    if !pair.is_tau_tilting() {
        return Err(Error::NotTauTilting);
    }
    let arcs = pair
        .summands
        .iter()
        .map(|m| indec_to_arc(m, alg))
        .collect::<Result<Vec<_>>>()?;
    Triangulation::new(n, arcs)
}

/// Sign of the puncture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedTriangulation {
    pub triangulation: Triangulation,
    pub sign: Sign,
}

impl fmt::Display for SignedTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "{} ({s})", self.triangulation)
    }
}

pub fn enumerate_signed(n: u32) -> Vec<SignedTriangulation> {
    let tris = enumerate_triangulations(n);
    [Sign::Plus, Sign::Minus]
        .into_iter()
        .flat_map(|sign| {
            tris.iter().map(move |t| SignedTriangulation {
                triangulation: t.clone(),
                sign,
            })
        })
        .collect()
}

fn require_long_projectives(alg: &NakayamaAlgebra) -> Result<u32> {
    let n = polygon(alg)?;
    let found = alg.kupisch().values().copied().min().unwrap_or(0);
    if found < n {
        return Err(Error::LoewyTooSmall { needed: n, found });
    }
    Ok(n)
}

/// Support τ-tilting pair of a signed triangulation. With sign `-` each
/// projective arc `<*,j>` kills the vertex `(j+1)_n` instead of adding `P_j`.
pub fn signed_to_stt(sx: &SignedTriangulation, alg: &NakayamaAlgebra) -> Result<SttPair> {
    let n = require_long_projectives(alg)?;
    if sx.triangulation.n != n {
        return Err(Error::NotPolygonal);
    }
    if sx.sign == Sign::Plus {
        return triangulation_to_tau_tilt(&sx.triangulation, alg);
    }
    let mut summands = Vec::new();
    let mut killed = Vec::new();
    for a in &sx.triangulation.arcs {
        match a {
            Arc::Projective { j } => killed.push(VertexId(cyc(*j as i64 + 1, n))),
            inner => summands.push(arc_to_indec(inner, alg)?),
        }
    }
    let pair = SttPair::new(summands.into_iter().collect(), killed);
    match alg.is_support_tau_tilting(&pair.summands) {
        Some(p) if p == pair => Ok(pair),
        _ => Err(Error::NotTauTilting),
    }
}

/// Inverse of [`signed_to_stt`].
pub fn stt_to_signed(pair: &SttPair, alg: &NakayamaAlgebra) -> Result<SignedTriangulation> {
    let n = require_long_projectives(alg)?;
    if pair.is_tau_tilting() {
        return Ok(SignedTriangulation {
            triangulation: tau_tilt_to_triangulation(pair, alg)?,
            sign: Sign::Plus,
        });
    }
    let mut arcs = pair
        .summands
        .iter()
        .map(|m| indec_to_arc(m, alg))
        .collect::<Result<Vec<_>>>()?;
    if arcs.iter().any(Arc::is_projective) {
        return Err(Error::NotInDomain(format!("{pair:?}")));
    }
    arcs.extend(pair.killed.iter().map(|v| Arc::proj(cyc(v.0 as i64 - 1, n))));
    Ok(SignedTriangulation {
        triangulation: Triangulation::new(n, arcs)?,
        sign: Sign::Minus,
    })
}

/// The slot of [`signed_to_stt`] that carries `arc`.
pub fn arc_slot(sx: &SignedTriangulation, arc: &Arc, alg: &NakayamaAlgebra) -> Result<Slot> {
    let n = require_long_projectives(alg)?;
    if !sx.triangulation.contains(arc) {
        return Err(Error::ArcNotPresent(arc.to_string()));
    }
    Ok(match (*arc, sx.sign) {
        (Arc::Projective { j }, Sign::Plus) => Slot::Summand(alg.projective(VertexId(j))),
        (Arc::Projective { j }, Sign::Minus) => Slot::Killed(VertexId(cyc(j as i64 + 1, n))),
        (inner, _) => Slot::Summand(arc_to_indec(&inner, alg)?),
    })
}

/// Flip at `arc`, or pop the sign when `arc` is a projective arc inside a
/// self-folded triangle. On the 1-gon the single projective arc is always
/// popped.
pub fn flip(sx: &SignedTriangulation, arc: &Arc) -> Result<SignedTriangulation> {
    let x = &sx.triangulation;
    if !x.contains(arc) {
        return Err(Error::ArcNotPresent(arc.to_string()));
    }
    let n = x.n;
    if let Arc::Projective { j } = *arc {
        if n == 1 || x.contains(&Arc::inner(j, j)) {
            return Ok(SignedTriangulation {
                triangulation: x.clone(),
                sign: sx.sign.flipped(),
            });
        }
    }
    let rest: Vec<Arc> = x.arcs.iter().copied().filter(|a| a != arc).collect();
    let options: Vec<Arc> = all_arcs(n)
        .into_iter()
        .filter(|b| b != arc && !rest.contains(b) && rest.iter().all(|a| compatible(a, b, n)))
        .collect();
    match options.as_slice() {
        [b] => Ok(SignedTriangulation {
            triangulation: Triangulation::new(n, rest.iter().copied().chain([*b]))?,
            sign: sx.sign,
        }),
        _ => Err(Error::Mismatch(format!(
            "flip of {arc} in {x} has {} candidates",
            options.len()
        ))),
    }
}
