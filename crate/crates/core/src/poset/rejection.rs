//! Building the Hasse quiver by peeling off socles of projective-injectives.

use serde::Serialize;

use super::{extend_poset, HasseQuiver};
use crate::algebra::{NakayamaAlgebra, VertexId};
use crate::error::{Error, Result};
use crate::modcat::Indec;
use crate::tautilt::SttPair;

/// How the projective-injective vertex is picked at each rejection step.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum QChoice {
    /// Smallest projective-injective vertex of the component holding the
    /// smallest vertex.
    #[default]
    SmallestLabel,
    /// Use these vertices in order, then fall back to the smallest label.
    Sequence(Vec<VertexId>),
}

/// How a pair of the quotient lifts back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Class {
    /// Lifts to a single pair with the same module.
    Keep,
    /// Lifts to two pairs: the same module, and the module plus `Q`.
    Split,
    /// Lifts to a single pair where the radical of `Q` is replaced by `Q`.
    Replace,
}

#[derive(Clone, Debug)]
pub struct RejectionStep {
    pub algebra: NakayamaAlgebra,
    pub q: VertexId,
    pub keep: usize,
    pub split: usize,
    pub replace: usize,
}

#[derive(Clone, Debug)]
pub struct RejectionRun {
    pub hasse: HasseQuiver<SttPair>,
    /// Steps from the input algebra down to the last nonzero one.
    pub steps: Vec<RejectionStep>,
}

fn smallest_label(alg: &NakayamaAlgebra) -> VertexId {
    let first = alg.components().into_iter().next().expect("nonzero algebra");
    first
        .projective_injectives_closed_form()
        .into_iter()
        .min()
        .expect("every nonzero Nakayama algebra has a projective-injective")
}

/// The algebras and chosen vertices visited until the zero algebra.
pub fn rejection_chain(alg: &NakayamaAlgebra, choice: &QChoice) -> Result<Vec<(NakayamaAlgebra, VertexId)>> {
    let mut out = Vec::new();
    let mut cur = alg.clone();
    while !cur.is_zero() {
        let q = match choice {
            QChoice::Sequence(seq) if out.len() < seq.len() => seq[out.len()],
            _ => smallest_label(&cur),
        };
        let next = cur.reject(q)?;
        out.push((cur, q));
        cur = next;
    }
    Ok(out)
}

/// Class of a pair of `alg.reject(q)` relative to `alg`.
pub fn classify(alg: &NakayamaAlgebra, q: VertexId, pair: &SttPair) -> Result<Class> {
    if !alg.is_projective_injective(q) {
        return Err(Error::NotProjectiveInjective(q));
    }
    let len = alg.loewy(q);
    if len == 1 {
        return Ok(Class::Split);
    }
    let radical_q = Indec::new(q, len - 1);
    if !pair.summands.contains(&radical_q) {
        return Ok(Class::Keep);
    }
    let socle = alg.socle_vertex(&alg.projective(q));
    Ok(if alg.support(&pair.summands).contains(&socle) {
        Class::Replace
    } else {
        Class::Split
    })
}

/// The quotient's pairs grouped as (keep, split, replace).
pub fn classify_n(alg: &NakayamaAlgebra, q: VertexId) -> Result<(Vec<SttPair>, Vec<SttPair>, Vec<SttPair>)> {
    let quotient = alg.reject(q)?;
    let (mut keep, mut split, mut replace) = (Vec::new(), Vec::new(), Vec::new());
    for pair in quotient.enumerate_stt() {
        match classify(alg, q, &pair)? {
            Class::Keep => keep.push(pair),
            Class::Split => split.push(pair),
            Class::Replace => replace.push(pair),
        }
    }
    Ok((keep, split, replace))
}

fn with_killed(alg: &NakayamaAlgebra, summands: crate::modcat::BasicModule) -> SttPair {
    let support = alg.support(&summands);
    let killed = alg.vertices().iter().copied().filter(|v| !support.contains(v));
    SttPair::new(summands, killed)
}

/// The pairs of `alg` lying over a pair of the quotient.
pub fn lift_rejection(alg: &NakayamaAlgebra, q: VertexId, pair: &SttPair) -> Result<Vec<SttPair>> {
    let proj = alg.projective(q);
    Ok(match classify(alg, q, pair)? {
        Class::Keep => vec![with_killed(alg, pair.summands.clone())],
        Class::Split => vec![
            with_killed(alg, pair.summands.clone()),
            with_killed(alg, pair.summands.with(proj)),
        ],
        Class::Replace => {
            let radical_q = Indec::new(q, proj.len - 1);
            vec![with_killed(alg, pair.summands.without(&radical_q).with(proj))]
        }
    })
}

fn lift_step(
    alg: &NakayamaAlgebra,
    q: VertexId,
    h: HasseQuiver<SttPair>,
) -> Result<(HasseQuiver<SttPair>, RejectionStep)> {
    let classes = h
        .vertices
        .iter()
        .map(|p| classify(alg, q, p))
        .collect::<Result<Vec<_>>>()?;
    let split: Vec<usize> = (0..h.len()).filter(|&i| classes[i] == Class::Split).collect();
    let count = |c: Class| classes.iter().filter(|&&x| x == c).count();
    let step = RejectionStep {
        algebra: alg.clone(),
        q,
        keep: count(Class::Keep),
        split: split.len(),
        replace: count(Class::Replace),
    };
    let proj = alg.projective(q);
    let doubled = extend_poset(&h, &split);
    let mut vertices = Vec::with_capacity(doubled.len());
    for (p, class) in h.vertices.iter().zip(&classes) {
        vertices.push(match class {
            Class::Replace => with_killed(alg, p.summands.without(&Indec::new(q, proj.len - 1)).with(proj)),
            _ => with_killed(alg, p.summands.clone()),
        });
    }
    vertices.extend(
        split
            .iter()
            .map(|&i| with_killed(alg, h.vertices[i].summands.with(proj))),
    );
    debug_assert!(vertices
        .iter()
        .all(|p| alg.is_support_tau_tilting(&p.summands).as_ref() == Some(p)));
    Ok((
        HasseQuiver {
            vertices,
            arrows: doubled.arrows,
        },
        step,
    ))
}

/// Hasse quiver by repeated rejection, using the smallest-label choice.
pub fn hasse_rejection(alg: &NakayamaAlgebra) -> HasseQuiver<SttPair> {
    hasse_rejection_with(alg, &QChoice::SmallestLabel)
        .expect("the smallest-label choice is always projective-injective")
        .hasse
}

/// Hasse quiver by repeated rejection, keeping the steps taken.
pub fn hasse_rejection_with(alg: &NakayamaAlgebra, choice: &QChoice) -> Result<RejectionRun> {
    let chain = rejection_chain(alg, choice)?;
    let mut h = HasseQuiver {
        vertices: vec![SttPair::default()],
        arrows: Vec::new(),
    };
    let mut steps = Vec::with_capacity(chain.len());
    for (a, q) in chain.iter().rev() {
        let (next, step) = lift_step(a, *q, h)?;
        h = next;
        steps.push(step);
    }
    steps.reverse();
    Ok(RejectionRun {
        hasse: h.canonical(),
        steps,
    })
}
