use super::*;
use crate::chartab::dixon_character_table;
use crate::testutil::*;

fn dihedral16() -> GroupTable {
    group("gens: a,b,c,d\npow: a^2 = 1\npow: b^2 = c\npow: c^2 = d\npow: d^2 = 1\nconj: b^a = b*c*d\nconj: c^a = c*d")
}

fn g128_36() -> GroupTable {
    group(
        "gens: a,b,c,d,e,f,g\npow: a^2 = d\npow: b^2 = e\npow: c^2 = 1\npow: d^2 = 1\npow: e^2 = 1\npow: f^2 = 1\npow: g^2 = 1\n\
         conj: b^a = b*c\nconj: c^a = c*f\nconj: c^b = c*g\nconj: d^b = d*f\nconj: e^a = e*g",
    )
}

/// Camina elements straight from the definition: the class of `x`,
/// found by conjugating with every element, equals the coset `x G'`,
/// where `G'` is generated by all commutators.
fn brute_camina(g: &GroupTable) -> Vec<Elem> {
    let derived = Subgroup::generated(
        g,
        g.elements()
            .flat_map(|x| g.elements().map(move |y| (x, y)))
            .map(|(x, y)| g.commutator(x, y)),
    );
    g.elements()
        .filter(|&x| {
            let mut class: Vec<Elem> = g.elements().map(|y| g.conj(x, y)).collect();
            class.sort_unstable();
            class.dedup();
            let mut coset: Vec<Elem> = derived
                .elements()
                .into_iter()
                .map(|m| g.mul(x, m))
                .collect();
            coset.sort_unstable();
            class == coset
        })
        .collect()
}

fn brute_v(g: &GroupTable) -> Subgroup {
    let camina = brute_camina(g);
    Subgroup::generated(g, g.elements().filter(|x| !camina.contains(x)))
}

fn profile_of(g: &GroupTable, with_table: bool) -> (VanishingProfile, TheoremReport) {
    let classes = conjugacy_classes(g);
    let table = with_table.then(|| dixon_character_table(g, &classes).unwrap());
    let ctx = Context::new(g, table.as_ref());
    let prof = vanishing_profile(&ctx).unwrap();
    let report = verify_theorems(&ctx, &prof);
    (prof, report)
}

fn words(g: &GroupTable, ws: &[&str]) -> Subgroup {
    Subgroup::generated(g, ws.iter().map(|w| g.element_by_word(w).unwrap()))
}

#[test]
fn camina_elements_match_definition() {
    for g in [
        d8(),
        q8(),
        s3(),
        s4(),
        extraspecial27(),
        g32_6(),
        dihedral16(),
        klein(),
    ] {
        let classes = conjugacy_classes(&g);
        let set = camina_elements(&g, &classes, &derived_subgroup(&g)).unwrap();
        assert_eq!(set.iter().collect::<Vec<_>>(), brute_camina(&g));
    }
}

#[test]
fn abelian_groups_are_all_camina_and_degenerate() {
    let g = cyclic(6);
    let classes = conjugacy_classes(&g);
    assert_eq!(
        camina_elements(&g, &classes, &derived_subgroup(&g))
            .unwrap()
            .len(),
        6
    );
    let v = vanishing_off_group(&g, &classes, VanishingMode::Classwise, None).unwrap();
    assert!(v.subgroup.is_whole());
    assert_eq!(v.degenerate, Some(ABELIAN_MARKER));
    let (prof, report) = profile_of(&g, true);
    assert_eq!(prof.height, 0);
    assert!(!prof.is_camina_group && !prof.is_vz_group);
    assert!(report
        .clauses
        .iter()
        .all(|c| c.verdict == Verdict::NotApplicable));
}

#[test]
fn both_routes_agree_with_brute_force() {
    for g in [
        d8(),
        q8(),
        s3(),
        s4(),
        a5(),
        extraspecial27(),
        g32_6(),
        dihedral16(),
    ] {
        let classes = conjugacy_classes(&g);
        let table = dixon_character_table(&g, &classes).unwrap();
        let a = vanishing_off_group(&g, &classes, VanishingMode::Classwise, None).unwrap();
        let b = vanishing_off_group(&g, &classes, VanishingMode::Charwise, Some(&table)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.subgroup, brute_v(&g));
    }
}

#[test]
fn charwise_requires_table() {
    let g = s3();
    let classes = conjugacy_classes(&g);
    let err = vanishing_off_group(&g, &classes, VanishingMode::Charwise, None).unwrap_err();
    assert!(matches!(err, Error::MissingCharacterTable));
}

#[test]
fn small_group_values() {
    let (prof, _) = profile_of(&s3(), false);
    assert_eq!(prof.v.order(), 3);
    let (prof, _) = profile_of(&a5(), false);
    assert!(prof.v.is_whole());
    assert_eq!(prof.height, 0);
    let (prof, _) = profile_of(&extraspecial27(), false);
    assert_eq!(prof.v.order(), 3);
    assert!(prof.is_camina_group && prof.is_vz_group);
}

#[test]
fn quaternion_flags() {
    let g = q8();
    let (prof, _) = profile_of(&g, true);
    assert_eq!(prof.v.order(), 2);
    assert!(prof.is_camina_group);
    assert!(prof.is_generalized_camina_group);
    assert!(prof.is_vz_group);
    // V_2 = [G', G] = G_3 = 1.
    assert_eq!(prof.v_series.term(2), prof.lower.term(3));
}

#[test]
fn dihedral_sixteen() {
    let g = dihedral16();
    let (prof, report) = profile_of(&g, true);
    assert_eq!(prof.v, words(&g, &["b"]));
    assert_eq!(prof.v.order(), 8);
    let shape = prof.quotient_shape.unwrap();
    assert!(shape.cyclic && shape.order == 2);
    assert!(!prof.is_camina_group);
    assert!(report.all_passed());
}

#[test]
fn series_of_32_6() {
    let g = g32_6();
    let (prof, report) = profile_of(&g, true);
    assert_eq!(prof.v, words(&g, &["c", "d", "e"]));
    assert_eq!(*prof.v_series.term(2), words(&g, &["e"]));
    assert!(prof.v_series.term(3).is_trivial());
    assert_eq!(prof.height, 3);
    let params = prof.parameters.unwrap();
    assert_eq!((params.p, params.n, params.m), (2, 1, 1));
    assert!(prof.centralizer.is_some());
    assert!(
        report.all_passed(),
        "{:?}",
        report.failures().collect::<Vec<_>>()
    );
    for id in [
        "index-square",
        "quotient-degrees",
        "quotient-vz",
        "elementary-factors",
    ] {
        assert_eq!(report.clause(id).unwrap().verdict, Verdict::Pass, "{id}");
    }
}

#[test]
fn centralizer_equals_v_in_128_36() {
    let g = g128_36();
    let (prof, report) = profile_of(&g, true);
    let c = &prof.centralizer.as_ref().unwrap().c;
    assert_eq!(*c, prof.v);
    assert_eq!(prof.v, words(&g, &["c", "d", "e", "f", "g"]));
    let clause = report.clause("centralizer-index").unwrap();
    assert_eq!(clause.verdict, Verdict::Pass);
    assert_eq!(clause.witness["c_equals_v1"], true);
    assert!(
        report.all_passed(),
        "{:?}",
        report.failures().collect::<Vec<_>>()
    );
    let obs = &report.observations[0];
    assert_eq!(obs.value["indices_equal"], true);
}

#[test]
fn height_zero_iff_v_is_whole() {
    for g in [d8(), s3(), a5(), g32_6(), dihedral16()] {
        let (prof, _) = profile_of(&g, false);
        assert_eq!(prof.height == 0, prof.v.is_whole());
        // Recompute: the first index where the series agree is permanent.
        let first_equal = (1..=10)
            .find(|&i| prof.v_series.term(i) == prof.lower.term(i))
            .unwrap();
        assert!((first_equal..=10).all(|i| prof.v_series.term(i) == prof.lower.term(i)));
        assert_eq!(prof.height, first_equal - 1);
    }
}

#[test]
fn gcp_predicates() {
    for g in [d8(), q8(), s3(), s4(), klein()] {
        let classes = conjugacy_classes(&g);
        assert!(is_gcp(&g, &classes, &Subgroup::whole(&g)).unwrap());
        assert_eq!(
            is_gcp(&g, &classes, &Subgroup::trivial(&g)).unwrap(),
            g.is_abelian()
        );
    }
    let g = d8();
    let classes = conjugacy_classes(&g);
    assert!(is_camina_pair(&g, &classes, &center(&g)).unwrap());
    let not_normal = Subgroup::generated(&g, [g.element_by_word("a").unwrap()]);
    assert!(matches!(
        is_gcp(&g, &classes, &not_normal),
        Err(Error::NotNormal)
    ));
}

/// Every subset closed under multiplication and conjugation.
fn brute_normals(g: &GroupTable) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|mask| mask & 1 == 1)
        .filter(|mask| {
            let has = |x: Elem| mask >> x & 1 == 1;
            g.elements().filter(|&x| has(x)).all(|x| {
                g.elements().filter(|&y| has(y)).all(|y| has(g.mul(x, y)))
                    && g.elements().all(|y| has(g.conj(x, y)))
            })
        })
        .count()
}

#[test]
fn normal_subgroup_enumeration() {
    for g in [d8(), q8(), s3(), klein(), cyclic(12)] {
        let classes = conjugacy_classes(&g);
        let normals = normal_subgroups(&g, &classes);
        assert_eq!(normals.len(), brute_normals(&g));
        assert!(normals.iter().all(|n| n.is_normal_exhaustive(&g)));
        assert!(normals[0].is_trivial() && normals.last().unwrap().is_whole());
    }
}

#[test]
fn gcp_family_meets_in_v() {
    for g in [d8(), s4(), g32_6(), dihedral16()] {
        let classes = conjugacy_classes(&g);
        let normals = normal_subgroups(&g, &classes);
        let family = gcp_family(&g, &classes, &normals);
        let meet = family
            .iter()
            .fold(Subgroup::whole(&g), |acc, n| acc.intersection(&g, n));
        assert_eq!(meet, brute_v(&g));
    }
}

#[test]
fn theorem_suite_passes_on_small_groups() {
    for g in [
        d8(),
        q8(),
        s3(),
        s4(),
        a5(),
        extraspecial27(),
        g32_6(),
        dihedral16(),
    ] {
        let (_, report) = profile_of(&g, true);
        assert!(
            report.all_passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn nonsolvable_skips_quotient_structure() {
    let (_, report) = profile_of(&a5(), true);
    let clause = report.clause("quotient-structure").unwrap();
    assert!(!clause.applicable);
    assert_eq!(clause.verdict, Verdict::NotApplicable);
}

#[test]
fn without_table_character_clauses_are_undecided() {
    let (_, report) = profile_of(&g32_6(), false);
    let clause = report.clause("quotient-degrees").unwrap();
    assert!(clause.applicable);
    assert_eq!(clause.verdict, Verdict::NotApplicable);
    assert!(report.all_passed());
}
