//! Indecomposables, the AR translate and Fac over a small cyclic algebra.

use nakayama_tilt::format::{indec_text, module_text, parse_module};
use nakayama_tilt::{NakayamaAlgebra, Result};

fn main() -> Result<()> {
    let a = NakayamaAlgebra::cyclic(3, 3)?;
    println!("{a}, dimension {}", a.total_dimension());
    for m in a.all_indecs() {
        let tau = a.tau(&m).map_or("0".to_string(), |t| indec_text(&a, &t));
        let rigid = if a.is_tau_rigid_indec(&m) { "τ-rigid" } else { "" };
        println!("  {:<6} τ = {:<6} {rigid}", indec_text(&a, &m), tau);
    }

    let gen = parse_module(&a, "2/1/3 + 3/2/1")?;
    let in_fac: Vec<String> = a
        .all_indecs()
        .iter()
        .filter(|x| a.in_fac(x, &gen).unwrap_or(false))
        .map(|x| indec_text(&a, x))
        .collect();
    println!("Fac({}) contains {}", module_text(&a, &gen), in_fac.join(", "));
    Ok(())
}
