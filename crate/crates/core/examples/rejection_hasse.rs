//! Builds the Hasse quiver by rejecting socles of projective-injectives one
//! at a time, prints the steps, and checks the result against the direct
//! construction. Pass `--dot` for graphviz output.

use nakayama_tilt::format::{hasse_dot, pair_text, step_text};
use nakayama_tilt::poset::{hasse_direct, hasse_rejection_with, poset_isomorphic, QChoice};
use nakayama_tilt::{NakayamaAlgebra, Result, VertexId};

fn main() -> Result<()> {
    let a = NakayamaAlgebra::cyclic(3, 4)?;
    let order = [1, 2, 3, 1, 2, 1, 3, 2, 3].map(VertexId).to_vec();
    let run = hasse_rejection_with(&a, &QChoice::Sequence(order))?;
    for s in &run.steps {
        eprintln!("{}", step_text(s));
    }
    assert_eq!(run.hasse, hasse_direct(&a));
    let smaller = hasse_direct(&NakayamaAlgebra::cyclic(3, 3)?);
    let iso = poset_isomorphic(&run.hasse, &smaller).is_some();
    eprintln!(
        "{} vertices, {} arrows, isomorphic to Loewy length 3: {iso}",
        run.hasse.len(),
        run.hasse.arrows.len()
    );
    if std::env::args().any(|x| x == "--dot") {
        print!("{}", hasse_dot(&run.hasse, |p| pair_text(&a, p)));
    }
    Ok(())
}
