use ulrich_core::families::{known_members, FamilyId, FAMILY_NAMES};
use ulrich_core::geometry::{is_ulrich_via_bwb, to_weight, ulrich_identity_check};
use ulrich_core::search::{time_branching_search, Limits};
use ulrich_core::{is_ulrich, FlagType};

/// Three-block types covered by a classification: middle length at most 2,
/// or both outer lengths at most 2.
fn classified_types(max_sum: usize) -> Vec<FlagType> {
    let mut out = Vec::new();
    for s in 3..=max_sum {
        for a in 1..s - 1 {
            for b in 1..s - a {
                let c = s - a - b;
                if b <= 2 || (a <= 2 && c <= 2) {
                    out.push(FlagType::new(vec![a, b, c]).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_equals_family_members() {
    for t in classified_types(16) {
        let r = time_branching_search(&t, Limits::unlimited()).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.classes, known_members(&t), "type {t}");
    }
}

#[test]
fn one_two_k_has_a_second_class_from_the_symmetric_dual() {
    let t: FlagType = "1,2,5".parse().unwrap();
    let members = known_members(&t);
    assert_eq!(members.len(), 2);
    assert!(members[0].symmetric_dual().unwrap().is_equivalent(&members[1]));
}

fn sample_ids() -> Vec<FamilyId> {
    let mut ids = Vec::new();
    for (name, params) in [
        ("one-n-one", "4,1,3"),
        ("one-n-one", "3"),
        ("two-one-k", "0"),
        ("two-one-k", "1"),
        ("one-two-k", "0"),
        ("one-two-k", "1"),
        ("two-param", "0,0"),
        ("two-param", "0,1"),
        ("fundamental-1n2", "2"),
        ("fundamental-1n2", "5"),
        ("elongated", "1,2"),
        ("elongated", "2,1"),
        ("p-u", "1"),
        ("p-u", "3"),
        ("sporadic", "223"),
        ("sporadic", "222"),
    ] {
        ids.push(FamilyId::parse(name, params).unwrap());
    }
    ids
}

#[test]
fn every_family_is_sampled() {
    let ids = sample_ids();
    for name in FAMILY_NAMES {
        assert!(ids.iter().any(|id| id.name() == name), "{name}");
    }
}

#[test]
fn members_are_ulrich_both_ways() {
    for id in sample_ids() {
        let p = id.build().unwrap();
        assert!(is_ulrich(&p).is_ulrich, "{id}: {p}");
        assert!(is_ulrich_via_bwb(&to_weight(&p, true)), "{id}: {p}");
    }
}

#[test]
fn ulrich_identity_for_small_members() {
    for id in sample_ids() {
        let p = id.build().unwrap();
        if p.flag_type().total_length() > 10 {
            continue;
        }
        let check = ulrich_identity_check(&to_weight(&p, true)).unwrap();
        assert!(check.ok, "{id}: {} != {} * {}", check.h0, check.rank, check.degree);
    }
}
