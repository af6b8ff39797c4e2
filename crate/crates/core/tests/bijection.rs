//! Exhaustive check that deleting the outer pair of the first component is a
//! bijection from k-component sequences of semi-length n onto sequences of
//! semi-length n-1 with at least k-1 components.

use std::collections::HashSet;

use treewalk_core::rlseq::{
    delete_component_pair, enumerate_sequences, insert_component_pair, DEFAULT_ENUM_CAP,
};
use treewalk_core::RLSequence;

const MAX_N: usize = 8;

fn by_components(n: usize) -> Vec<Vec<RLSequence>> {
    let mut buckets = vec![Vec::new(); n + 1];
    for s in enumerate_sequences(n, DEFAULT_ENUM_CAP).unwrap() {
        buckets[s.component_count()].push(s);
    }
    buckets
}

#[test]
fn deletion_is_bijective_for_every_index() {
    for n in 1..=MAX_N {
        let current = by_components(n);
        let previous = by_components(n - 1);
        for k in 1..=n {
            let target: HashSet<RLSequence> = previous[k - 1..].iter().flatten().copied().collect();
            for i in 1..=k {
                let image: Vec<RLSequence> = current[k]
                    .iter()
                    .map(|w| delete_component_pair(w, i).unwrap())
                    .collect();
                let distinct: HashSet<RLSequence> = image.iter().copied().collect();
                assert_eq!(
                    distinct.len(),
                    image.len(),
                    "not injective: n={n} k={k} i={i}"
                );
                assert_eq!(distinct, target, "wrong image: n={n} k={k} i={i}");
            }
        }
    }
}

#[test]
fn insertion_round_trips_for_all_valid_arguments() {
    for m in 0..MAX_N {
        for alpha in enumerate_sequences(m, DEFAULT_ENUM_CAP).unwrap() {
            let j = alpha.component_count();
            for k in 1..=j + 1 {
                for i in 1..=k {
                    let omega = insert_component_pair(&alpha, i, k).unwrap();
                    assert_eq!(omega.component_count(), k);
                    assert_eq!(delete_component_pair(&omega, i).unwrap(), alpha);
                }
            }
        }
    }
}
