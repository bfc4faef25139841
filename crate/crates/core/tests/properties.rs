mod support;

use proptest::prelude::*;

use fixedbitset::FixedBitSet;
use nakayama_tilt::poset::{
    extend_order, extend_poset, geq, hasse_direct, hasse_rejection, is_strict_order, transitive_reduction, HasseQuiver,
    MutationIndex,
};
use nakayama_tilt::sequences::{top_of_triangulation, x_of_sequence, SeqA};
use nakayama_tilt::{AlgebraLiteral, Indec, NakayamaAlgebra, SttPair};
use support::oracle::Uniserials;

fn cyclic_algebra() -> impl Strategy<Value = NakayamaAlgebra> {
    (1usize..=4)
        .prop_flat_map(|n| prop::collection::vec(1u32..=6, n))
        .prop_filter_map("admissible series", |k| NakayamaAlgebra::cyclic_kupisch(&k).ok())
}

fn uniserials(a: &NakayamaAlgebra) -> Uniserials {
    Uniserials::new(a.arrows().iter().map(|(s, t)| (s.0, t.0)))
}

fn raw(x: &Indec) -> (u32, u32) {
    (x.top.0, x.len)
}

/// Stars and bars: `n - 1` bars among `2n - 1` places.
fn composition(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::sample::subsequence((0..2 * n - 1).collect::<Vec<_>>(), n - 1).prop_map(move |bars| {
        let mut parts = Vec::with_capacity(n);
        let mut prev = -1i64;
        for b in bars.into_iter().map(|b| b as i64).chain([2 * n as i64 - 1]) {
            parts.push((b - prev - 1) as u32);
            prev = b;
        }
        parts
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairs_are_rigid_and_complete(a in cyclic_algebra()) {
        let u = uniserials(&a);
        for p in a.enumerate_stt() {
            prop_assert_eq!(p.summands.len() + p.killed.len(), a.num_vertices());
            for x in p.summands.iter() {
                for y in p.summands.iter() {
                    if let Some(ty) = a.tau(y) {
                        prop_assert_eq!(u.hom_dim(raw(x), raw(&ty)), 0);
                    }
                }
                for &e in &p.killed {
                    prop_assert_eq!(u.hom_dim(raw(&a.projective(e)), raw(x)), 0);
                }
            }
        }
    }

    #[test]
    fn order_agrees_with_image_spans(a in cyclic_algebra()) {
        let u = uniserials(&a);
        let pairs = a.enumerate_stt();
        for m in pairs.iter().step_by(3) {
            let gens: Vec<(u32, u32)> = m.summands.iter().map(raw).collect();
            for n in &pairs {
                let expected = n.summands.iter().all(|x| u.in_fac(raw(x), &gens));
                prop_assert_eq!(geq(&a, m, n).unwrap(), expected);
            }
        }
    }

    #[test]
    fn rejection_builds_the_direct_quiver(a in cyclic_algebra()) {
        prop_assert_eq!(hasse_rejection(&a), hasse_direct(&a));
    }

    #[test]
    fn mutation_is_an_involution(a in cyclic_algebra()) {
        let idx = MutationIndex::new(&a);
        for p in &idx.pairs {
            for slot in p.slots() {
                let q = idx.mutate(p, &slot).expect("every slot mutates");
                prop_assert!(q.slots().iter().filter(|s| !p.slots().contains(s)).count() == 1);
                prop_assert!(idx.mutations(&q).contains(p));
            }
        }
    }

    #[test]
    fn json_round_trips(a in cyclic_algebra()) {
        let lit = AlgebraLiteral::from(&a);
        let text = serde_json::to_string(&lit).unwrap();
        prop_assert_eq!(AlgebraLiteral::parse(&text).unwrap(), a.clone());
        let h = hasse_direct(&a);
        let back: HasseQuiver<SttPair> = serde_json::from_str(&serde_json::to_string(&h).unwrap()).unwrap();
        prop_assert_eq!(back, h);
    }
}

proptest! {
    #[test]
    fn doubling_matches_its_order(
        k in 1usize..=12,
        edges in prop::collection::vec(any::<bool>(), 66),
        marks in prop::collection::vec(any::<bool>(), 12),
    ) {
        let mut below: Vec<FixedBitSet> = (0..k).map(|_| FixedBitSet::with_capacity(k)).collect();
        let mut e = edges.iter();
        for i in 0..k {
            for j in 0..i {
                if *e.next().unwrap() {
                    let lower = below[j].clone();
                    below[i].insert(j);
                    below[i].union_with(&lower);
                }
            }
        }
        let n: Vec<usize> = (0..k).filter(|&i| marks[i]).collect();
        let h = HasseQuiver::from_order(vec![(); k], &below);
        let order = extend_order(&below, &n);
        prop_assert!(is_strict_order(&order));
        let mut expected = transitive_reduction(&order);
        expected.sort_unstable();
        prop_assert_eq!(extend_poset(&h, &n).arrows, expected);
    }

    #[test]
    fn sequences_round_trip(a in (1usize..=8).prop_flat_map(composition)) {
        let s = SeqA::new(a).unwrap();
        prop_assert_eq!(top_of_triangulation(&x_of_sequence(&s)), s);
    }
}
