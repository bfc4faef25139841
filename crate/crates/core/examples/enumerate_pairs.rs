//! Support τ-tilting pairs of a self-injective cyclic algebra, split into
//! τ-tilting and proper ones.

use nakayama_tilt::format::pair_text;
use nakayama_tilt::{NakayamaAlgebra, Result};

fn main() -> Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let r: u32 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(n);
    let a = NakayamaAlgebra::cyclic(n, r)?;
    let tau = a.enumerate_tau_tilt();
    let proper = a.enumerate_ps_tau_tilt();
    println!("{a}: {} τ-tilting, {} proper", tau.len(), proper.len());
    for p in tau.iter().chain(&proper) {
        println!("  {}", pair_text(&a, p));
    }
    Ok(())
}
