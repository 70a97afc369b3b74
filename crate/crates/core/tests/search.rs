use ehrlab::search::{
    canonical_form, enumerate_posets, scan_idp_partition_polytopes, scan_negative_coefficients,
    with_jobs,
};
use ehrlab::{Poset, ScanReport};
use proptest::prelude::*;

fn poset_strategy(max: usize) -> impl Strategy<Value = (Poset, Vec<usize>)> {
    (1..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::bool::weighted(0.35), n * (n - 1) / 2),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, perm)| {
                let mut rel = Vec::new();
                let mut k = 0;
                for j in 0..n {
                    for i in 0..j {
                        if bits[k] {
                            rel.push((i, j));
                        }
                        k += 1;
                    }
                }
                (Poset::from_covers(n, &rel).unwrap(), perm)
            })
    })
}

#[test]
fn enumeration_counts_up_to_five() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_posets(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 5, 16, 63]);
}

#[test]
fn enumeration_caps() {
    assert!(enumerate_posets(0).is_err());
    assert!(enumerate_posets(8).is_err());
    assert!(scan_idp_partition_polytopes(19, 9, 2).is_err());
    assert!(scan_idp_partition_polytopes(18, 10, 2).is_err());
}

#[test]
fn small_poset_scan() {
    let report = scan_negative_coefficients(4).unwrap();
    assert_eq!(report.examined, 1 + 2 + 5 + 16);
    assert!(report.passed());
}

#[test]
fn small_idp_grid_has_no_violations() {
    let report = scan_idp_partition_polytopes(8, 4, 2).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    assert!(report.examined > 0);
}

#[test]
fn scans_do_not_depend_on_thread_count() {
    let one = with_jobs(Some(1), || scan_negative_coefficients(5))
        .unwrap()
        .unwrap();
    let many = with_jobs(Some(4), || scan_negative_coefficients(5))
        .unwrap()
        .unwrap();
    assert_eq!(one, many);
    let one = with_jobs(Some(1), || scan_idp_partition_polytopes(7, 4, 2))
        .unwrap()
        .unwrap();
    let many = with_jobs(Some(3), || scan_idp_partition_polytopes(7, 4, 2))
        .unwrap()
        .unwrap();
    assert_eq!(one, many);
}

#[test]
fn scan_report_json_is_stable() {
    let report = scan_idp_partition_polytopes(6, 3, 2).unwrap();
    let json = serde_json::to_string_pretty(&report).unwrap();
    assert!(!json.contains("elapsed"));
    let back: ScanReport = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
    assert_eq!(back, report);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_form_ignores_labels((p, perm) in poset_strategy(7)) {
        let c = canonical_form(&p);
        prop_assert_eq!(canonical_form(&p.relabel(&perm)), c.clone());
        prop_assert_eq!(canonical_form(&c.to_poset()), c);
    }

    #[test]
    fn canonical_form_lands_in_the_enumeration((p, _) in poset_strategy(5)) {
        let all = enumerate_posets(p.size()).unwrap();
        prop_assert!(all.contains(&canonical_form(&p)));
    }
}
