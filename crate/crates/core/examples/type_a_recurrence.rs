//! Splits τ-tilting modules of a linear algebra by the top of the longest
//! projective and compares the Catalan-weighted recurrence with enumeration.

use std::collections::BTreeMap;

use nakayama_tilt::counting::{count_gamma_recurrence, count_tau_tilt_linear};
use nakayama_tilt::format::module_text;
use nakayama_tilt::{NakayamaAlgebra, Result};

fn main() -> Result<()> {
    let a = NakayamaAlgebra::gamma(3, 2)?;
    let mut classes: BTreeMap<u32, Vec<String>> = BTreeMap::new();
    for t in a.enumerate_tau_tilt() {
        let (i, quotient, inner) = a.type_a_split(&t)?;
        assert_eq!(a.type_a_join(&inner)?, t);
        assert!(inner.summands.iter().all(|m| quotient.is_valid_indec(m)));
        classes.entry(i).or_default().push(module_text(&a, &t.summands));
    }
    for (i, ms) in &classes {
        println!("class {i}: {}", ms.join("  |  "));
    }

    for r in 1..=4 {
        for n in 1..=6 {
            let g = NakayamaAlgebra::gamma(n, r)?;
            let enumerated = g.enumerate_tau_tilt().len();
            print!("{:>5}", enumerated);
            assert_eq!(count_gamma_recurrence(n, r), enumerated.into());
            assert_eq!(count_tau_tilt_linear(&g)?, enumerated.into());
        }
        println!("   (r = {r})");
    }
    Ok(())
}
