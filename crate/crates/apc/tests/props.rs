//! Property tests for the structural invariants: generator guarantees,
//! partition laws, singularity, canonicalization, and document
//! round-trips.

use std::collections::BTreeSet;

use proptest::prelude::*;

use apc::analysis::{find_good_pairs, parallel_partition, singular_vertices};
use apc::cgs::{generate_no_good_pair, generate_random};
use apc::doc::{parse_instance, render_instance, NamedInstance};
use apc::graph::canonical_cycle;
use apc::VertexId;

fn pair_sizes() -> impl Strategy<Value = Vec<usize>> {
    prop::sample::select(vec![
        vec![4, 4],
        vec![4, 8],
        vec![6, 6],
        vec![6, 12],
        vec![8, 8],
        vec![8, 12],
    ])
}

fn any_sizes() -> impl Strategy<Value = Vec<usize>> {
    prop::sample::select(vec![
        vec![4, 4],
        vec![4, 6],
        vec![6, 8],
        vec![4, 4, 4],
        vec![6, 6, 6],
        vec![4, 6, 8],
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn no_good_pair_generator_keeps_its_promise(sizes in pair_sizes(), seed in 0u64..500) {
        if let Ok(inst) = generate_no_good_pair(&sizes, seed) {
            for i in 0..inst.summand_count() {
                for j in i + 1..inst.summand_count() {
                    prop_assert!(find_good_pairs(&inst, i, j).unwrap().is_empty());
                }
            }
        }
    }

    #[test]
    fn parallel_classes_partition_the_exterior(sizes in pair_sizes(), seed in 0u64..500) {
        if let Ok(inst) = generate_no_good_pair(&sizes, seed) {
            let classes = parallel_partition(&inst, 0, 1).unwrap();
            let n = inst.summand(0).len() / 2;
            let m = inst.summand(1).len() / 2;
            let size = num_integer::lcm(2 * n, 2 * m);
            let mut seen = BTreeSet::new();
            for class in &classes {
                prop_assert_eq!(class.edges.len(), size);
                for i in 0..class.edges.len() {
                    let (_, _, c) = class.edges[i];
                    let (_, _, next) = class.edges[(i + 1) % class.edges.len()];
                    prop_assert_ne!(c, next, "class colors must alternate");
                }
                for (u, v, c) in class.edge_set().iter().map(|&(u, v)| {
                    (u, v, inst.exterior_color(u, v).unwrap())
                }) {
                    prop_assert!(seen.insert((u, v)), "edge {u}-{v} in two classes");
                    let _ = c;
                }
            }
            prop_assert_eq!(seen.len(), inst.exterior_count(), "classes must cover the exterior");
            prop_assert_eq!(classes.len() * size, inst.exterior_count());
        }
    }

    #[test]
    fn admitted_instances_have_no_singular_vertices(sizes in pair_sizes(), seed in 0u64..500) {
        // the generator demands a non-singular vertex on each side, and
        // the parity laws then force every vertex to be non-singular
        if let Ok(inst) = generate_no_good_pair(&sizes, seed) {
            for i in 0..inst.summand_count() {
                for j in 0..inst.summand_count() {
                    if i != j {
                        prop_assert!(singular_vertices(&inst, i, j).unwrap().is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_cycle_is_orientation_invariant(
        len in 2usize..9,
        rot in 0usize..8,
        rev in any::<bool>(),
        base in 0u32..100,
    ) {
        let cycle: Vec<VertexId> = (0..len as u32).map(|i| VertexId(base + i * 3)).collect();
        let mut other = cycle.clone();
        other.rotate_left(rot % len);
        if rev {
            other.reverse();
        }
        prop_assert_eq!(canonical_cycle(&cycle), canonical_cycle(&other));
        let canon = canonical_cycle(&cycle);
        prop_assert_eq!(canonical_cycle(&canon).clone(), canon);
    }

    #[test]
    fn documents_round_trip(sizes in any_sizes(), seed in 0u64..500) {
        let inst = generate_random(&sizes, seed).unwrap();
        let named = NamedInstance::with_default_names(inst);
        let text = render_instance(&named);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &named);
        prop_assert_eq!(render_instance(&back), text);
    }
}
