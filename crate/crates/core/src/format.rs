//! Text, JSON and DOT renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraLiteral, NakayamaAlgebra, VertexId};
use crate::error::{Error, Result};
use crate::geometry::Triangulation;
use crate::modcat::{BasicModule, Indec};
use crate::poset::{HasseQuiver, RejectionStep};
use crate::tautilt::SttPair;

/// Composition factors from top to socle, e.g. `2/1/3`.
pub fn indec_text(alg: &NakayamaAlgebra, m: &Indec) -> String {
    let parts: Vec<String> = alg.comp_factors(m).iter().map(|v| v.to_string()).collect();
    parts.join("/")
}

/// Summands joined by ` + `, or `0` for the zero module.
pub fn module_text(alg: &NakayamaAlgebra, m: &BasicModule) -> String {
    if m.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = m.iter().map(|x| indec_text(alg, x)).collect();
    parts.join(" + ")
}

/// The module, followed by the killed vertices when there are any.
pub fn pair_text(alg: &NakayamaAlgebra, p: &SttPair) -> String {
    let mut s = module_text(alg, &p.summands);
    if !p.killed.is_empty() {
        let killed: Vec<String> = p.killed.iter().map(|v| v.to_string()).collect();
        write!(s, " [killed {}]", killed.join(",")).expect("writing to a string");
    }
    s
}

/// Parses `2/1/3`, checking that the factors follow the arrows.
pub fn parse_indec(alg: &NakayamaAlgebra, s: &str) -> Result<Indec> {
    let factors = s
        .split('/')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map(VertexId)
                .map_err(|_| Error::Parse(format!("bad vertex {x:?} in module {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Indec::new(factors[0], factors.len() as u32);
    if !alg.is_valid_indec(&m) || alg.comp_factors(&m) != factors {
        return Err(Error::NotInDomain(format!(
            "{s} is not an indecomposable module of {alg}"
        )));
    }
    Ok(m)
}

/// Parses `2/1/3 + 3`, or `0` for the zero module.
pub fn parse_module(alg: &NakayamaAlgebra, s: &str) -> Result<BasicModule> {
    if s.trim() == "0" {
        return Ok(BasicModule::empty());
    }
    s.split('+').map(|x| parse_indec(alg, x)).collect()
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A Hasse quiver as a DOT digraph with the given vertex labels.
pub fn hasse_dot<L>(h: &HasseQuiver<L>, label: impl Fn(&L) -> String) -> String {
    let mut out = String::from("digraph hasse {\n");
    for (i, v) in h.vertices.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", dot_escape(&label(v))).expect("writing to a string");
    }
    for (a, b) in &h.arrows {
        writeln!(out, "  n{a} -> n{b};").expect("writing to a string");
    }
    out.push_str("}\n");
    out
}

/// The flip graph of a set of triangulations as an undirected DOT graph.
pub fn flip_graph_dot(tris: &[Triangulation], edges: &[(usize, usize)]) -> String {
    let mut out = String::from("graph flips {\n");
    for (i, t) in tris.iter().enumerate() {
        writeln!(out, "  t{i} [label=\"{}\"];", dot_escape(&t.to_string())).expect("writing to a string");
    }
    for (a, b) in edges {
        writeln!(out, "  t{a} -- t{b};").expect("writing to a string");
    }
    out.push_str("}\n");
    out
}

/// One rejection step in serialisable form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub algebra: AlgebraLiteral,
    pub q: VertexId,
    pub keep: usize,
    pub split: usize,
    pub replace: usize,
}

impl From<&RejectionStep> for StepRecord {
    fn from(s: &RejectionStep) -> Self {
        StepRecord {
            algebra: AlgebraLiteral::from(&s.algebra),
            q: s.q,
            keep: s.keep,
            split: s.split,
            replace: s.replace,
        }
    }
}

pub fn step_text(s: &RejectionStep) -> String {
    format!(
        "{}: reject at {} (keep {}, split {}, replace {})",
        s.algebra, s.q, s.keep, s.split, s.replace
    )
}
