//! Brute-force linear algebra over uniserial representations.
//!
//! Modules are given as `(top, len)` over a quiver described only by its
//! arrow map, and every homomorphism space is computed by solving the
//! commutativity equations modulo a large prime.

#![allow(dead_code)]

use std::collections::HashMap;

const P: u64 = 1_000_000_007;

pub type Module = (u32, u32);

pub struct Uniserials {
    down: HashMap<u32, u32>,
}

impl Uniserials {
    pub fn new(arrows: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Uniserials {
            down: arrows.into_iter().collect(),
        }
    }

    fn factors(&self, (top, len): Module) -> Vec<u32> {
        let mut out = vec![top];
        while out.len() < len as usize {
            let next = self.down[out.last().unwrap()];
            out.push(next);
        }
        out
    }

    /// Variables are coefficients `c[k][k']` of `f(e_k)` on `e'_k'`, present
    /// only when both basis vectors sit at the same vertex.
    fn hom_system(&self, m: Module, n: Module) -> (Vec<(usize, usize)>, Vec<Vec<u64>>) {
        let fm = self.factors(m);
        let fn_ = self.factors(n);
        let mut vars = Vec::new();
        let mut index = HashMap::new();
        for (k, a) in fm.iter().enumerate() {
            for (kk, b) in fn_.iter().enumerate() {
                if a == b {
                    index.insert((k, kk), vars.len());
                    vars.push((k, kk));
                }
            }
        }
        let mut rows = Vec::new();
        // arrow out of e_k: coefficient of e'_j in f(e_{k+1}) equals that of e'_{j-1} in f(e_k)
        for k in 0..fm.len() {
            for j in 0..fn_.len() {
                let mut row = vec![0u64; vars.len()];
                if k + 1 < fm.len() {
                    if let Some(&x) = index.get(&(k + 1, j)) {
                        row[x] = 1;
                    }
                }
                if j >= 1 {
                    if let Some(&x) = index.get(&(k, j - 1)) {
                        row[x] = (row[x] + P - 1) % P;
                    }
                }
                if row.iter().any(|c| *c != 0) {
                    rows.push(row);
                }
            }
        }
        (vars, rows)
    }

    pub fn hom_dim(&self, m: Module, n: Module) -> usize {
        let (vars, rows) = self.hom_system(m, n);
        vars.len() - rank(rows, vars.len())
    }

    /// Number of lengths `t` for which the top quotient of `m` matches the
    /// length-`t` submodule of `n`.
    pub fn witness_count(&self, m: Module, n: Module) -> usize {
        let fn_ = self.factors(n);
        (1..=m.1.min(n.1) as usize)
            .filter(|t| fn_[fn_.len() - t] == m.0)
            .count()
    }

    fn hom_basis(&self, m: Module, n: Module) -> Vec<Vec<(usize, usize, u64)>> {
        let (vars, rows) = self.hom_system(m, n);
        nullspace(rows, vars.len())
            .into_iter()
            .map(|vec| {
                vars.iter()
                    .zip(vec)
                    .filter(|(_, c)| *c != 0)
                    .map(|(&(k, kk), c)| (k, kk, c))
                    .collect()
            })
            .collect()
    }

    /// `x` lies in `Fac` of the direct sum iff the images of all maps from
    /// the summands span `x`.
    pub fn in_fac(&self, x: Module, summands: &[Module]) -> bool {
        let dim = x.1 as usize;
        let mut images = Vec::new();
        for &y in summands {
            for f in self.hom_basis(y, x) {
                for k in 0..y.1 as usize {
                    let mut v = vec![0u64; dim];
                    for &(src, dst, c) in &f {
                        if src == k {
                            v[dst] = (v[dst] + c) % P;
                        }
                    }
                    images.push(v);
                }
            }
        }
        rank(images, dim) == dim
    }
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(rows: &mut [Vec<u64>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = pow(rows[r][c], P - 2);
        for x in rows[r].iter_mut() {
            *x = *x * inv % P;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot = rows[r].clone();
                for (x, &p) in rows[i].iter_mut().zip(&pivot).take(cols) {
                    *x = (*x + P - f * p % P) % P;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rank(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    rref(&mut rows, cols).len()
}

fn nullspace(mut rows: Vec<Vec<u64>>, cols: usize) -> Vec<Vec<u64>> {
    let pivots = rref(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (P - rows[r][f]) % P;
            }
            v
        })
        .collect()
}
