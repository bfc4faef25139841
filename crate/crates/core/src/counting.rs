//! Closed forms, recurrences and the reference tables of counts.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::NakayamaAlgebra;
use crate::error::Result;

/// `C(2n, n)`.
pub fn central_binomial(n: u32) -> BigUint {
    binomial(2 * n, n)
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigUint {
    central_binomial(n) / (n + 1)
}

/// Number of τ-tilting modules of the linear algebra with radical length
/// `r` on `n` vertices, by splitting off the top of the longest projective.
pub fn count_gamma_recurrence(n: u32, r: u32) -> BigUint {
    assert!(r >= 1, "radical length must be positive");
    let mut memo: Vec<BigUint> = Vec::with_capacity(n as usize + 1);
    memo.push(BigUint::from(1u32));
    for m in 1..=n {
        let total = (1..=r.min(m)).map(|i| catalan(i - 1) * &memo[(m - i) as usize]).sum();
        memo.push(total);
    }
    memo.pop().expect("holds the n = 0 base")
}

/// Support τ-tilting count of the linear algebra with radical length 2:
/// `a(n) = 2 a(n-1) + a(n-2)` from `a(0) = 1`, `a(1) = 2`.
pub fn count_stt_gamma2_jasso(n: u32) -> BigUint {
    let (mut prev, mut cur) = (BigUint::from(1u32), BigUint::from(2u32));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur * 2u32 + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// τ-tilting count of a linear algebra, recursing on the quotients that
/// kill an initial segment of the path starting at the source.
pub fn count_tau_tilt_linear(alg: &NakayamaAlgebra) -> Result<BigUint> {
    let mut total = BigUint::from(1u32);
    for piece in alg.components() {
        total *= count_connected_linear(&piece)?;
    }
    Ok(total)
}

fn count_connected_linear(alg: &NakayamaAlgebra) -> Result<BigUint> {
    let source = alg.linear_source()?;
    let mut killed = Vec::new();
    let mut sum = BigUint::ZERO;
    let mut cur = Some(source);
    for i in 1..=alg.loewy(source) {
        let v = cur.expect("the longest projective fits on the path");
        killed.push(v);
        let rest = alg.quotient_by_idempotent(&killed)?;
        sum += catalan(i - 1) * count_tau_tilt_linear(&rest)?;
        cur = alg.next_down(v);
    }
    Ok(sum)
}

/// Which reference table a value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Table {
    /// τ-tilting modules over the linear algebras.
    TauLinear,
    /// Support τ-tilting modules over the linear algebras.
    SttLinear,
    /// τ-tilting modules over the self-injective cyclic algebras.
    TauCyclic,
    /// Support τ-tilting modules over the self-injective cyclic algebras.
    SttCyclic,
}

// rows are r = 1..=5, columns n = 1..=5
const TAU_LINEAR: [[u64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 2, 3, 5, 8],
    [1, 2, 5, 9, 18],
    [1, 2, 5, 14, 28],
    [1, 2, 5, 14, 42],
];
const STT_LINEAR: [[u64; 5]; 5] = [
    [2, 4, 8, 16, 32],
    [2, 5, 12, 29, 70],
    [2, 5, 14, 37, 98],
    [2, 5, 14, 42, 118],
    [2, 5, 14, 42, 132],
];
const TAU_CYCLIC: [[u64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 3, 4, 7, 11],
    [1, 3, 10, 15, 31],
    [1, 3, 10, 35, 56],
    [1, 3, 10, 35, 126],
];
const STT_CYCLIC: [[u64; 5]; 5] = [
    [2, 4, 8, 16, 32],
    [2, 6, 14, 34, 82],
    [2, 6, 20, 50, 132],
    [2, 6, 20, 70, 182],
    [2, 6, 20, 70, 252],
];

pub const TABLE_RANGE: std::ops::RangeInclusive<u32> = 1..=5;

/// Reference value for `1 <= n, r <= 5`.
pub fn table_value(table: Table, n: u32, r: u32) -> Option<u64> {
    if !TABLE_RANGE.contains(&n) || !TABLE_RANGE.contains(&r) {
        return None;
    }
    let t = match table {
        Table::TauLinear => &TAU_LINEAR,
        Table::SttLinear => &STT_LINEAR,
        Table::TauCyclic => &TAU_CYCLIC,
        Table::SttCyclic => &STT_CYCLIC,
    };
    Some(t[r as usize - 1][n as usize - 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Linear,
    Cyclic,
}

impl Family {
    pub fn build(self, n: u32, r: u32) -> Result<NakayamaAlgebra> {
        match self {
            Family::Linear => NakayamaAlgebra::gamma(n, r),
            Family::Cyclic => NakayamaAlgebra::cyclic(n, r),
        }
    }

    fn tables(self) -> (Table, Table) {
        match self {
            Family::Linear => (Table::TauLinear, Table::SttLinear),
            Family::Cyclic => (Table::TauCyclic, Table::SttCyclic),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Linear => "linear",
            Family::Cyclic => "cyclic",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Enumerated,
    Recurrence,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    Tau,
    Stt,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub method: Method,
    pub quantity: Quantity,
    pub name: &'static str,
    #[serde(serialize_with = "big_as_string")]
    pub value: BigUint,
}

fn big_as_string<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub family: Family,
    pub n: u32,
    pub r: u32,
    pub algebra: String,
    pub tau: u64,
    pub proper: u64,
    pub stt: u64,
    pub expected_tau: Option<u64>,
    pub expected_stt: Option<u64>,
    pub checks: Vec<CrossCheck>,
}

impl CountReport {
    /// Enumerates one algebra and runs every applicable cross-check.
    pub fn compute(family: Family, n: u32, r: u32) -> Result<Self> {
        let alg = family.build(n, r)?;
        let stt = alg.enumerate_stt();
        let tau = stt.iter().filter(|p| p.is_tau_tilting()).count() as u64;
        let stt_count = stt.len() as u64;
        let (tau_table, stt_table) = family.tables();
        let mut checks = Vec::new();
        let mut push = |method, quantity, name, value| {
            checks.push(CrossCheck {
                method,
                quantity,
                name,
                value,
            })
        };
        match family {
            Family::Linear => {
                push(
                    Method::Recurrence,
                    Quantity::Tau,
                    "catalan-weighted",
                    count_gamma_recurrence(n, r),
                );
                push(
                    Method::Recurrence,
                    Quantity::Tau,
                    "source-segment",
                    count_tau_tilt_linear(&alg)?,
                );
                if r == 2 {
                    push(Method::Recurrence, Quantity::Stt, "two-term", count_stt_gamma2_jasso(n));
                }
                if r >= n {
                    push(Method::ClosedForm, Quantity::Tau, "catalan", catalan(n));
                }
                if r == 1 {
                    push(
                        Method::ClosedForm,
                        Quantity::Stt,
                        "semisimple",
                        BigUint::from(2u32).pow(n),
                    );
                }
            }
            Family::Cyclic => {
                if r >= n {
                    push(
                        Method::ClosedForm,
                        Quantity::Stt,
                        "central-binomial",
                        central_binomial(n),
                    );
                    push(Method::ClosedForm, Quantity::Stt, "twice-tau", BigUint::from(2 * tau));
                    push(
                        Method::ClosedForm,
                        Quantity::Tau,
                        "half-binomial",
                        binomial(2 * n - 1, n - 1),
                    );
                }
                if r == 1 {
                    push(
                        Method::ClosedForm,
                        Quantity::Stt,
                        "semisimple",
                        BigUint::from(2u32).pow(n),
                    );
                }
            }
        }
        Ok(CountReport {
            family,
            n,
            r,
            algebra: alg.to_string(),
            tau,
            proper: stt_count - tau,
            stt: stt_count,
            expected_tau: table_value(tau_table, n, r),
            expected_stt: table_value(stt_table, n, r),
            checks,
        })
    }

    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        let tag = format!("{} n={} r={}", self.family, self.n, self.r);
        if let Some(e) = self.expected_tau.filter(|&e| e != self.tau) {
            out.push(format!("{tag}: tau-tilting {} but table has {e}", self.tau));
        }
        if let Some(e) = self.expected_stt.filter(|&e| e != self.stt) {
            out.push(format!("{tag}: support tau-tilting {} but table has {e}", self.stt));
        }
        for c in &self.checks {
            let enumerated = match c.quantity {
                Quantity::Tau => self.tau,
                Quantity::Stt => self.stt,
            };
            if c.value != BigUint::from(enumerated) {
                out.push(format!(
                    "{tag}: {} gives {} but enumeration gives {enumerated}",
                    c.name, c.value
                ));
            }
        }
        out
    }

    pub fn is_ok(&self) -> bool {
        self.mismatches().is_empty()
    }
}

/// Enumerates every table cell for both families.
pub fn verify_tables() -> Vec<CountReport> {
    let cells: Vec<(Family, u32, u32)> = [Family::Linear, Family::Cyclic]
        .into_iter()
        .flat_map(|f| TABLE_RANGE.flat_map(move |r| TABLE_RANGE.map(move |n| (f, n, r))))
        .collect();
    cells
        .into_par_iter()
        .map(|(f, n, r)| CountReport::compute(f, n, r).expect("table algebras are valid"))
        .collect()
}
