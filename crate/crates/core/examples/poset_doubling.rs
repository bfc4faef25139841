//! Doubles a subset of a small poset and prints both Hasse quivers.

use fixedbitset::FixedBitSet;
use nakayama_tilt::poset::{extend_poset, Doubled, HasseQuiver};

fn main() {
    // 0 > 1 > 3, 0 > 2 > 3
    let mut below: Vec<FixedBitSet> = (0..4).map(|_| FixedBitSet::with_capacity(4)).collect();
    below[0].insert_range(1..4);
    below[1].insert(3);
    below[2].insert(3);
    let h = HasseQuiver::from_order(vec!["top", "left", "right", "bottom"], &below);
    let d = extend_poset(&h, &[2, 3]);
    let name = |v: &Doubled<&str>| match v {
        Doubled::Original(s) => s.to_string(),
        Doubled::Copy(s) => format!("{s}+"),
    };
    for &(a, b) in &h.arrows {
        println!("{} -> {}", h.vertices[a], h.vertices[b]);
    }
    println!("doubled at right, bottom:");
    for &(a, b) in &d.arrows {
        println!("{} -> {}", name(&d.vertices[a]), name(&d.vertices[b]));
    }
}
