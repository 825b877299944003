use vanishoff::harness::{
    analyze, corpus, run_pipeline, verify_corpus, AnalyzeOptions, Provenance, VerifyOptions,
};

#[test]
fn every_entry_matches_its_golden_data() {
    let summary = verify_corpus(&VerifyOptions::default()).unwrap();
    assert_eq!(summary.entries.len(), corpus().len());
    for e in &summary.entries {
        assert!(
            e.passed(),
            "{}: {:?} {:?} {:?}",
            e.name,
            e.diffs,
            e.theorem_failures,
            e.error
        );
        assert!(e.golden_checked > 0, "{} has no golden values", e.name);
    }
}

#[test]
fn golden_values_carry_provenance() {
    for e in corpus() {
        for gold in &e.expected {
            let text = match &gold.provenance {
                Provenance::Published(q) | Provenance::Derived(q) => q,
            };
            assert!(
                !text.trim().is_empty(),
                "{}: {}",
                e.name,
                gold.expect.field()
            );
        }
    }
}

#[test]
fn single_entry_selection() {
    let opts = VerifyOptions {
        only: Some("SmallGroup(32,6)".into()),
        ..VerifyOptions::default()
    };
    let summary = verify_corpus(&opts).unwrap();
    assert_eq!(summary.entries.len(), 1);
    assert_eq!(summary.entries[0].order, Some(32));
    assert!(summary.all_passed());
}

#[test]
fn presented_orders_match_enumeration() {
    for e in corpus() {
        let a = run_pipeline(&e.source, &AnalyzeOptions::default()).unwrap();
        if let Some(n) = a.presented_order {
            assert_eq!(n, a.group.order() as u128, "{}", e.name);
        }
    }
}

#[test]
fn reports_are_reproducible() {
    for e in corpus().into_iter().filter(|e| !e.name.contains("3^7")) {
        let opts = AnalyzeOptions {
            name: Some(e.name.clone()),
            ..AnalyzeOptions::default()
        };
        let first = analyze(&e.source, &opts).unwrap().to_json();
        let second = analyze(&e.source, &opts).unwrap().to_json();
        assert_eq!(first, second, "{}", e.name);
    }
}

#[test]
fn cached_verification_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let opts = VerifyOptions {
        only: Some("SmallGroup(128,36)".into()),
        cache_dir: Some(dir.path().to_path_buf()),
        ..VerifyOptions::default()
    };
    let first = verify_corpus(&opts).unwrap();
    let second = verify_corpus(&opts).unwrap();
    assert!(first.all_passed() && second.all_passed());
    assert_eq!(first, second);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
