#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use ucf_core::{ElementSet, SetFamily, Universe};

pub fn universe(k: usize) -> Arc<Universe> {
    Arc::new(Universe::indexed(k).unwrap())
}

pub fn family(k: usize, masks: &[u64]) -> SetFamily {
    let full = (1u64 << k) - 1;
    SetFamily::new(
        universe(k),
        masks.iter().map(|&m| ElementSet::from_bits(m & full)),
    )
    .unwrap()
}

/// A width and a raw list of member masks for that width.
pub fn raw_family(
    max_width: usize,
    max_members: usize,
) -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1..=max_width).prop_flat_map(move |k| {
        (
            Just(k),
            prop::collection::vec(0u64..1 << k, 1..=max_members),
        )
    })
}

/// Union-closed family generated by a few random sets, with at least one
/// non-empty member.
pub fn union_closed(max_width: usize, max_gens: usize) -> impl Strategy<Value = SetFamily> {
    (1..=max_width).prop_flat_map(move |k| {
        prop::collection::vec(1u64..1 << k, 1..=max_gens)
            .prop_map(move |g| family(k, &g).union_close(false))
    })
}

/// Graph-generated family on `k` vertices: a random non-empty edge set.
pub fn graph(max_vertices: usize) -> impl Strategy<Value = SetFamily> {
    (2..=max_vertices).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let m = pairs.len();
        (1u64..1 << m).prop_map(move |mask| {
            let edges: Vec<ElementSet> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(a, b))| ElementSet::from_indices([a, b]))
                .collect();
            ucf_core::family::graph_family(&universe(n), &edges).unwrap()
        })
    })
}

/// Naive union closure: keep adding pairwise unions until nothing changes.
pub fn naive_closure(members: &[ElementSet]) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = members.to_vec();
    out.sort();
    out.dedup();
    loop {
        let mut next = out.clone();
        for &a in &out {
            for &b in &out {
                next.push(a | b);
            }
        }
        next.sort();
        next.dedup();
        if next == out {
            return out;
        }
        out = next;
    }
}
