use proptest::prelude::*;

use partgenus::reduce::{applicable_moves, reduce, DiagramClass};
use partgenus::{classify, parse_partition, OrbitRecord, Partition};

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0..n as u32, n))
        .prop_map(|labels| Partition::from_block_labels(&labels))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn genus_is_bounded(p in partition(16)) {
        let g = p.genus().unwrap();
        prop_assert!(g <= p.genus_max());
        prop_assert_eq!(p.n() + 2 - p.num_parts() - p.face_count(), 2 * g as usize + 1);
    }

    #[test]
    fn genus_is_rotation_invariant(p in partition(14), k in -20i64..20) {
        prop_assert_eq!(p.rotate(k).genus().unwrap(), p.genus().unwrap());
        prop_assert_eq!(p.rotate(k).canonical_form(), p.canonical_form());
    }

    #[test]
    fn orbit_sizes_multiply_to_n(p in partition(14)) {
        let o = OrbitRecord::of(&p);
        prop_assert_eq!(o.orbit_length * o.stabilizer_order, p.n());
        prop_assert_eq!(o.representative.rotate(o.orbit_length as i64), o.representative.clone());
    }

    #[test]
    fn every_move_keeps_the_genus(p in partition(14)) {
        let g = p.genus().unwrap();
        for m in applicable_moves(&p) {
            prop_assert_eq!(m.apply(&p).genus().unwrap(), g);
        }
    }

    #[test]
    fn reduction_ends_at_a_fixed_point(p in partition(14)) {
        let t = reduce(&p);
        prop_assert!(applicable_moves(&t.result).is_empty());
        prop_assert_eq!(classify(&t.result), t.classification);
        prop_assert_eq!(t.classification == DiagramClass::Empty, p.genus().unwrap() == 0);
        prop_assert_eq!(reduce(&t.result).steps.len(), 0);
    }

    #[test]
    fn display_parses_back(p in partition(12)) {
        prop_assert_eq!(parse_partition(&p.to_string()).unwrap(), p);
    }
}

#[test]
fn json_round_trip() {
    let p = parse_partition("1,3,4,6,7|2,5,9|8|10").unwrap();
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(json, r#"{"n":10,"parts":[[1,3,4,6,7],[2,5,9],[8],[10]]}"#);
    assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    assert!(serde_json::from_str::<Partition>(r#"{"n":3,"parts":[[1,2]]}"#).is_err());
}
