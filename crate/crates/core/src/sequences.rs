//! Integer sequences summing to `n` and their triangulations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{cyc, Arc, Triangulation};

/// A tuple `(a_1, ..., a_n)` of nonnegative integers with sum `n`.
///
/// The profile `a'_i = Σ_{j≤i} (a_j - 1)` is cached and read periodically,
/// with `a'_0 = a'_n = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct SeqA {
    a: Vec<u32>,
    prime: Vec<i64>,
    norm: i64,
}

impl SeqA {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::NotInDomain("empty sequence".into()));
        }
        let sum: u64 = a.iter().map(|&x| x as u64).sum();
        if sum != n as u64 {
            return Err(Error::NotInDomain(format!("{a:?} sums to {sum}, not {n}")));
        }
        let mut prime = Vec::with_capacity(n + 1);
        prime.push(0i64);
        for &x in &a {
            prime.push(prime.last().unwrap() + x as i64 - 1);
        }
        let norm = *prime[1..].iter().max().expect("nonempty");
        Ok(SeqA { a, prime, norm })
    }

    pub fn n(&self) -> u32 {
        self.a.len() as u32
    }

    pub fn values(&self) -> &[u32] {
        &self.a
    }

    /// `a_p` for `p` in `1..=n`.
    pub fn at(&self, p: u32) -> u32 {
        self.a[p as usize - 1]
    }

    /// `a'_k` for any integer `k`.
    pub fn prime(&self, k: i64) -> i64 {
        self.prime[k.rem_euclid(self.a.len() as i64) as usize]
    }

    /// `max(a'_1, ..., a'_n)`.
    pub fn norm(&self) -> i64 {
        self.norm
    }

    /// `1` if `a'_p` attains the maximum, else `0`.
    pub fn delta(&self, p: u32) -> u32 {
        u32::from(self.prime(p as i64) == self.norm)
    }

    /// Number of inner arcs ending at `l` in the associated triangulation.
    fn inner_count(&self, l: u32) -> u32 {
        self.at(l) - self.delta(l)
    }

    /// Largest `k < l - 1` with `a'_k = a'_{l-1} + s`.
    fn k_s(&self, l: u32, s: u32) -> i64 {
        let l = l as i64;
        let target = self.prime(l - 1) + s as i64;
        (l - self.a.len() as i64..=l - 2)
            .rev()
            .find(|&k| self.prime(k) == target)
            .unwrap_or_else(|| panic!("no k for l = {l}, s = {s} in {:?}", self.a))
    }

    /// Largest length of an inner arc ending at `j` in [`x_of_sequence`], or 0.
    pub fn ell(&self, j: u32) -> u32 {
        match self.inner_count(j) {
            0 => 0,
            c => cyc(j as i64 - self.k_s(j, c), self.n()),
        }
    }
}

impl TryFrom<Vec<u32>> for SeqA {
    type Error = Error;

    fn try_from(a: Vec<u32>) -> Result<Self> {
        SeqA::new(a)
    }
}

impl From<SeqA> for Vec<u32> {
    fn from(s: SeqA) -> Self {
        s.a
    }
}

impl fmt::Display for SeqA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `2,1,0` or `(2,1,0)`.
pub fn parse_seq(s: &str) -> Result<SeqA> {
    let body = s.trim().trim_start_matches('(').trim_end_matches(')');
    let a = body
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad entry {x:?} in sequence {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    SeqA::new(a)
}

/// Number of arcs ending at each boundary point.
pub fn top_of_triangulation(x: &Triangulation) -> SeqA {
    let mut a = vec![0u32; x.n as usize];
    for arc in &x.arcs {
        a[arc.terminal() as usize - 1] += 1;
    }
    SeqA::new(a).expect("a triangulation has n arcs")
}

/// The triangulation with the given terminal-point histogram.
pub fn x_of_sequence(a: &SeqA) -> Triangulation {
    let n = a.n();
    let mut arcs: Vec<Arc> = (1..=n).filter(|&j| a.delta(j) == 1).map(Arc::proj).collect();
    for l in 1..=n {
        for s in 1..=a.inner_count(l) {
            arcs.push(Arc::inner(cyc(a.k_s(l, s), n), l));
        }
    }
    Triangulation::new(n, arcs).expect("the arcs built from a sequence form a triangulation")
}

/// Whether every `ℓ_j(a)` is at most `bounds[j-1]`.
pub fn in_z_restricted(a: &SeqA, bounds: &[u32]) -> bool {
    (1..=a.n()).all(|j| a.ell(j) <= bounds[j as usize - 1])
}

/// All of `𝒵(n)` in lexicographic order.
pub fn enumerate_z(n: u32) -> Vec<SeqA> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == slots {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in 0..=left {
            prefix.push(x);
            rec(prefix, left - x, slots, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), n, n as usize, &mut raw);
    raw.into_iter().map(|a| SeqA::new(a).expect("sums to n")).collect()
}

pub fn enumerate_z_restricted(n: u32, bounds: &[u32]) -> Vec<SeqA> {
    enumerate_z(n)
        .into_iter()
        .filter(|a| in_z_restricted(a, bounds))
        .collect()
}

/// Sequences whose profile never rises above zero.
pub fn enumerate_y(n: u32) -> Vec<SeqA> {
    enumerate_z(n).into_iter().filter(|a| a.norm() == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{enumerate_restricted, enumerate_triangulations};

    fn seq(a: &[u32]) -> SeqA {
        SeqA::new(a.to_vec()).unwrap()
    }

    #[test]
    fn profile() {
        let a = seq(&[2, 1, 0]);
        assert_eq!((1..=3).map(|k| a.prime(k)).collect::<Vec<_>>(), vec![1, 1, 0]);
        assert_eq!(a.prime(-1), 1);
        assert_eq!(a.norm(), 1);
        let b = seq(&[0, 4, 1, 0, 1, 0, 2, 0]);
        assert_eq!(
            (1..=8).map(|k| b.prime(k)).collect::<Vec<_>>(),
            vec![-1, 2, 2, 1, 1, 0, 1, 0]
        );
        assert!(SeqA::new(vec![1, 1]).is_ok());
        assert!(SeqA::new(vec![2, 1]).is_err());
    }

    #[test]
    fn worked_sequences() {
        let x = x_of_sequence(&seq(&[2, 1, 0]));
        assert_eq!(x.arcs, {
            let mut v = vec![Arc::proj(1), Arc::proj(2), Arc::inner(2, 1)];
            v.sort();
            v
        });
        let y = x_of_sequence(&seq(&[0, 3, 0]));
        assert!(y.contains(&Arc::proj(2)) && y.contains(&Arc::inner(3, 2)) && y.contains(&Arc::inner(2, 2)));
        let z = x_of_sequence(&seq(&[0, 4, 1, 0, 1, 0, 2, 0]));
        for a in [Arc::proj(2), Arc::proj(3), Arc::inner(8, 2)] {
            assert!(z.contains(&a), "{z}");
        }
        let ones = x_of_sequence(&seq(&[1, 1, 1, 1]));
        assert!(ones.arcs.iter().all(Arc::is_projective));
    }

    #[test]
    fn ell_values() {
        let ones = seq(&[1, 1, 1]);
        assert!((1..=3).all(|j| ones.ell(j) == 0));
        assert_eq!(seq(&[2, 1, 0]).ell(1), 2);
        assert_eq!(seq(&[0, 3, 0]).ell(2), 3);
    }

    #[test]
    fn tops() {
        for x in enumerate_triangulations(3) {
            if x.arcs == vec![Arc::proj(1), Arc::proj(2), Arc::inner(2, 1)] {
                assert_eq!(top_of_triangulation(&x), seq(&[2, 1, 0]));
            }
        }
        let folded = Triangulation::new(3, [Arc::proj(2), Arc::inner(2, 2), Arc::inner(3, 2)]).unwrap();
        assert_eq!(top_of_triangulation(&folded), seq(&[0, 3, 0]));
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_z(3).len(), 10);
        assert_eq!(enumerate_z_restricted(4, &[4, 4, 4, 4]).len(), 35);
        assert_eq!(enumerate_y(3).len(), 5);
        assert_eq!(enumerate_y(5).len(), 42);
    }

    #[test]
    fn round_trips() {
        for n in 1..=6 {
            let tris = enumerate_triangulations(n);
            let zs = enumerate_z(n);
            assert_eq!(tris.len(), zs.len());
            for a in &zs {
                assert_eq!(&top_of_triangulation(&x_of_sequence(a)), a);
            }
            for x in &tris {
                assert_eq!(&x_of_sequence(&top_of_triangulation(x)), x);
                let a = top_of_triangulation(x);
                for j in 1..=n {
                    assert_eq!(x.contains(&Arc::proj(j)), a.prime(j as i64) == a.norm());
                    let longest = x
                        .arcs
                        .iter()
                        .filter(|arc| arc.terminal() == j)
                        .filter_map(|arc| arc.length(n))
                        .max()
                        .unwrap_or(0);
                    assert_eq!(a.ell(j), longest, "{x} at {j}");
                }
            }
        }
    }

    #[test]
    fn restricted_sets_match() {
        let bounds = [1, 2, 3, 2];
        let tris: Vec<SeqA> = enumerate_restricted(4, &bounds)
            .iter()
            .map(top_of_triangulation)
            .collect();
        let mut zs = enumerate_z_restricted(4, &bounds);
        let mut tris_sorted = tris.clone();
        tris_sorted.sort();
        zs.sort();
        assert_eq!(tris_sorted, zs);
    }

    #[test]
    fn json_is_a_plain_array() {
        let a = seq(&[2, 1, 0]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[2,1,0]");
        let back: SeqA = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<SeqA>("[2,2,0]").is_err());
        assert_eq!(parse_seq("(2, 1, 0)").unwrap(), a);
    }
}
