mod common;

use common::union_closed;
use proptest::prelude::*;
use ucf_core::conjecture::{find_witness, WitnessKind};
use ucf_core::lattice::{order_of_family, BottomPolicy};
use ucf_core::pdensity::{
    count_op_maps, enumerate_op_maps, has_p_density_property, matching_property, p_density,
    poset_filters, type_classes, OpMapSet,
};
use ucf_core::{LatticeView, Poset, Rational, SetFamily};

fn lattice_of(f: &SetFamily) -> Option<LatticeView> {
    let f = f.with_empty();
    (f.len() >= 2).then(|| order_of_family(&f, BottomPolicy::RequireEmpty).unwrap())
}

/// Posets on up to three elements from a strict relation mask, closed
/// transitively; cyclic masks are rejected by `prop_filter_map`.
fn small_poset() -> impl Strategy<Value = Poset> {
    (1usize..=3, 0u64..64).prop_filter_map("not acyclic", |(n, mask)| {
        let rel: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a < b)
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        Poset::from_relations((0..n).map(|i| format!("p{i}")).collect(), &rel).ok()
    })
}

proptest! {
    #[test]
    fn counting_matches_enumeration(f in union_closed(3, 3), p in small_poset()) {
        let Some(l) = lattice_of(&f) else { return Ok(()) };
        let maps = enumerate_op_maps(&p, l.poset()).unwrap();
        prop_assert_eq!(count_op_maps(&p, l.poset()), maps.len() as u128);
        // Brute force: every map [|P|] → L checked for order preservation.
        let n = p.len();
        let total = l.len().pow(n as u32);
        let brute = (0..total)
            .filter(|&code| {
                let map: Vec<usize> = (0..n).map(|i| code / l.len().pow(i as u32) % l.len()).collect();
                (0..n).all(|i| (0..n).all(|j| !p.leq(i, j) || l.leq(map[i], map[j])))
            })
            .count();
        prop_assert_eq!(brute, maps.len());
    }

    #[test]
    fn type_classes_partition_by_filter(f in union_closed(3, 3), p in small_poset()) {
        let Some(l) = lattice_of(&f) else { return Ok(()) };
        let maps = OpMapSet { maps: enumerate_op_maps(&p, l.poset()).unwrap() };
        let filters = poset_filters(&p).unwrap();
        for a in l.join_irreducibles() {
            let classes = type_classes(&l, a, &maps).unwrap();
            let mut seen = vec![0usize; maps.len()];
            for c in &classes {
                prop_assert!(filters.contains(&c.filter));
                for &m in &c.members {
                    seen[m] += 1;
                    let key = (0..p.len()).filter(|&x| l.leq(a, maps.maps[m][x])).fold(0u64, |k, x| k | 1 << x);
                    prop_assert_eq!(key, c.filter);
                }
            }
            prop_assert!(seen.iter().all(|&s| s == 1));
        }
    }

    #[test]
    fn one_point_density_is_filter_fraction(f in union_closed(4, 4)) {
        let Some(l) = lattice_of(&f) else { return Ok(()) };
        let one = Poset::chain(1);
        for a in l.join_irreducibles() {
            let expect = Rational::new(l.filter_of(a).len() as i128, l.len() as i128);
            prop_assert_eq!(p_density(&l, a, &one).unwrap(), expect);
        }
        let verdict = has_p_density_property(&l, &one).unwrap();
        let bridge = find_witness(&f.with_empty(), WitnessKind::Generator).unwrap().satisfied;
        prop_assert_eq!(verdict.holds(), bridge);
    }

    #[test]
    fn matching_implies_density(f in union_closed(3, 3), p in small_poset()) {
        let Some(l) = lattice_of(&f) else { return Ok(()) };
        let count = count_op_maps(&p, l.poset());
        prop_assume!(count <= 5000);
        let bound = Rational::new(1, poset_filters(&p).unwrap().len() as i128);
        for a in l.join_irreducibles() {
            let full = matching_property(&l, a, &p, true).unwrap();
            let part = matching_property(&l, a, &p, false).unwrap();
            if full.holds {
                prop_assert!(part.holds);
            }
            if part.holds {
                prop_assert!(p_density(&l, a, &p).unwrap() <= bound);
            }
        }
    }
}
