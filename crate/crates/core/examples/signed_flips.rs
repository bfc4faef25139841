//! Flipping arcs of signed triangulations and mutating the matching pairs.

use nakayama_tilt::format::pair_text;
use nakayama_tilt::geometry::{arc_slot, enumerate_signed, flip, signed_to_stt};
use nakayama_tilt::poset::MutationIndex;
use nakayama_tilt::{NakayamaAlgebra, Result};

fn main() -> Result<()> {
    let a = NakayamaAlgebra::cyclic(3, 3)?;
    let idx = MutationIndex::new(&a);
    let signed = enumerate_signed(3);
    println!("{} signed triangulations, {} pairs", signed.len(), idx.pairs.len());
    let sx = &signed[0];
    let pair = signed_to_stt(sx, &a)?;
    println!("{sx}  =  {}", pair_text(&a, &pair));
    for arc in &sx.triangulation.arcs {
        let sy = flip(sx, arc)?;
        let mutated = idx.mutate(&pair, &arc_slot(sx, arc, &a)?).expect("two completions");
        assert_eq!(signed_to_stt(&sy, &a)?, mutated);
        println!("  flip {arc}: {sy}  =  {}", pair_text(&a, &mutated));
    }
    Ok(())
}
