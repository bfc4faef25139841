//! Cross-model checks run over whole families of algebras.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::NakayamaAlgebra;
use crate::geometry::{enumerate_restricted, tau_tilt_to_triangulation, triangulation_to_tau_tilt};
use crate::poset::{hasse_direct, hasse_rejection};
use crate::sequences::{enumerate_z_restricted, top_of_triangulation, x_of_sequence};

#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    fn collect(name: &str, results: Vec<Vec<String>>) -> Self {
        Outcome {
            name: name.into(),
            cases: results.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn series(n: u32, lo: u32, hi: u32, first: Option<u32>) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for pos in 0..n {
        let range: Vec<u32> = match (pos, first) {
            (0, Some(f)) => vec![f],
            _ => (lo..=hi).collect(),
        };
        out = out
            .into_iter()
            .flat_map(|p| {
                range.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Cyclic algebras on `n` vertices whose Loewy lengths lie in `lo..=hi`.
pub fn cyclic_algebras(n: u32, lo: u32, hi: u32) -> Vec<NakayamaAlgebra> {
    series(n, lo, hi, None)
        .iter()
        .filter_map(|k| NakayamaAlgebra::cyclic_kupisch(k).ok())
        .collect()
}

/// Linear algebras on `n` vertices whose Loewy lengths are at most `hi`.
pub fn linear_algebras(n: u32, hi: u32) -> Vec<NakayamaAlgebra> {
    series(n, 1, hi, Some(1))
        .iter()
        .filter_map(|k| NakayamaAlgebra::linear(k).ok())
        .collect()
}

/// τ-tilting modules, restricted triangulations and restricted sequences
/// are matched one to one, and both round trips are identities.
pub fn check_triple_bijection(alg: &NakayamaAlgebra) -> Vec<String> {
    let mut fails = Vec::new();
    let n = alg.num_vertices() as u32;
    let bounds = alg.kupisch_series();
    let taus = alg.enumerate_tau_tilt();
    let tris: HashSet<_> = enumerate_restricted(n, &bounds).into_iter().collect();
    let seqs: HashSet<_> = enumerate_z_restricted(n, &bounds).into_iter().collect();
    if taus.len() != tris.len() || taus.len() != seqs.len() {
        fails.push(format!(
            "{alg}: {} modules, {} triangulations, {} sequences",
            taus.len(),
            tris.len(),
            seqs.len()
        ));
        return fails;
    }
    let mut seen_tris = HashSet::new();
    let mut seen_seqs = HashSet::new();
    for t in &taus {
        let x = match tau_tilt_to_triangulation(t, alg) {
            Ok(x) => x,
            Err(e) => {
                fails.push(format!("{alg}: {t:?} has no triangulation: {e}"));
                continue;
            }
        };
        if !tris.contains(&x) {
            fails.push(format!("{alg}: {x} is not admissible"));
        }
        if triangulation_to_tau_tilt(&x, alg).ok().as_ref() != Some(t) {
            fails.push(format!("{alg}: {x} does not map back"));
        }
        let a = top_of_triangulation(&x);
        if !seqs.contains(&a) {
            fails.push(format!("{alg}: {a} is not admissible"));
        }
        if x_of_sequence(&a) != x {
            fails.push(format!("{alg}: {a} does not map back to {x}"));
        }
        seen_seqs.insert(a);
        seen_tris.insert(x);
    }
    if seen_tris.len() != taus.len() || seen_seqs.len() != taus.len() {
        fails.push(format!("{alg}: maps are not injective"));
    }
    fails
}

/// Triple bijection for every cyclic algebra with `n <= n_max` and Loewy
/// lengths up to `n + 2`.
pub fn verify_bijections(n_max: u32) -> Outcome {
    let algs: Vec<NakayamaAlgebra> = (1..=n_max).flat_map(|n| cyclic_algebras(n, 1, n + 2)).collect();
    Outcome::collect(
        "triple bijection",
        algs.par_iter().map(check_triple_bijection).collect(),
    )
}

/// Proper pairs and τ-tilting modules correspond when every Loewy length
/// is at least the number of vertices.
pub fn check_lift_drop(alg: &NakayamaAlgebra) -> Vec<String> {
    let mut fails = Vec::new();
    let stt = alg.enumerate_stt();
    let (tau, proper): (Vec<_>, Vec<_>) = stt.iter().partition(|p| p.is_tau_tilting());
    if stt.len() != 2 * tau.len() {
        fails.push(format!("{alg}: {} pairs but {} τ-tilting", stt.len(), tau.len()));
    }
    for t in &tau {
        match alg.drop_2_11(t).and_then(|p| alg.lift_2_11(&p).map(|back| (p, back))) {
            Ok((p, back)) if back == **t && proper.contains(&&p) => {}
            other => fails.push(format!("{alg}: {t:?} round trip gave {other:?}")),
        }
    }
    for p in &proper {
        match alg.lift_2_11(p).and_then(|t| alg.drop_2_11(&t).map(|back| (t, back))) {
            Ok((t, back)) if back == **p && tau.contains(&&t) => {}
            other => fails.push(format!("{alg}: {p:?} round trip gave {other:?}")),
        }
    }
    fails
}

pub fn verify_lift_drop(n_max: u32) -> Outcome {
    let algs: Vec<NakayamaAlgebra> = (1..=n_max).flat_map(|n| cyclic_algebras(n, n, n + 2)).collect();
    Outcome::collect(
        "proper pairs vs τ-tilting",
        algs.par_iter().map(check_lift_drop).collect(),
    )
}

pub fn check_rejection(alg: &NakayamaAlgebra) -> Vec<String> {
    let direct = hasse_direct(alg);
    let rejection = hasse_rejection(alg);
    if direct == rejection {
        return Vec::new();
    }
    vec![format!(
        "{alg}: direct has {} vertices and {} arrows, rejection has {} and {}",
        direct.len(),
        direct.arrows.len(),
        rejection.len(),
        rejection.arrows.len()
    )]
}

/// Rejection against direct construction on every cyclic and linear
/// algebra with at most `n_max` vertices and Loewy lengths up to `r_max`.
pub fn verify_rejection(n_max: u32, r_max: u32) -> Outcome {
    let algs: Vec<NakayamaAlgebra> = (1..=n_max)
        .flat_map(|n| {
            let mut v = cyclic_algebras(n, 1, r_max);
            v.extend(linear_algebras(n, r_max));
            v
        })
        .collect();
    Outcome::collect("rejection vs direct", algs.par_iter().map(check_rejection).collect())
}
