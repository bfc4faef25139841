//! Each τ-tilting module of Λ with all Loewy lengths 4 on 4 vertices, next to
//! its triangulation of the punctured square and its arc-count sequence.

use nakayama_tilt::format::module_text;
use nakayama_tilt::geometry::tau_tilt_to_triangulation;
use nakayama_tilt::sequences::{top_of_triangulation, x_of_sequence};
use nakayama_tilt::{NakayamaAlgebra, Result};

fn main() -> Result<()> {
    let a = NakayamaAlgebra::cyclic(4, 4)?;
    let mut rows = Vec::new();
    for t in a.enumerate_tau_tilt() {
        let x = tau_tilt_to_triangulation(&t, &a)?;
        let seq = top_of_triangulation(&x);
        assert_eq!(x_of_sequence(&seq), x);
        rows.push((seq, x, module_text(&a, &t.summands)));
    }
    rows.sort();
    for (seq, x, m) in &rows {
        println!("{seq:<10} {x:<28} {m}");
    }
    println!("{} rows", rows.len());
    Ok(())
}
