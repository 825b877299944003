mod common;

use common::lemmas::{self, Lemma};
use common::{brute_v, nonabelian_up_to, random_pc};
use proptest::prelude::*;
use vanishoff::chartab::dixon_character_table;
use vanishoff::structure::{conjugacy_classes, derived_subgroup};
use vanishoff::vanishing::{vanishing_off_group, VanishingMode};

fn for_groups(max_order: usize, check: Lemma) {
    let groups = nonabelian_up_to(max_order);
    assert!(groups.len() >= 15);
    for (name, g) in groups {
        if let Err(msg) = check(&g) {
            panic!("{name}: {msg}");
        }
    }
}

#[test]
fn camina_characterizations_agree() {
    for_groups(128, lemmas::camina_characterizations);
}

#[test]
fn gcp_family_is_intersection_closed_with_meet_v() {
    for_groups(64, lemmas::gcp_family_meet);
}

#[test]
fn quotient_lemma() {
    for_groups(128, lemmas::quotient_lemma);
}

#[test]
fn commutator_with_overgroups_of_v_is_derived() {
    for_groups(128, lemmas::overgroups_of_v);
}

#[test]
fn nonlinear_characters_vanish_off_v() {
    for_groups(128, lemmas::characters_vanish_off_v);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, max_global_rejects: 4096, ..ProptestConfig::default() })]

    #[test]
    fn random_p_groups_satisfy_vanishing_lemmas(pc in random_pc(128)) {
        let g = pc.group();
        prop_assume!(g.as_ref().is_some_and(|g| !g.is_abelian()));
        let g = g.unwrap();
        for (what, check) in lemmas::ALL {
            prop_assert!(check(&g).is_ok(), "{}: {:?}\n{}", what, check(&g), pc.source());
        }
        let classes = conjugacy_classes(&g);
        let table = dixon_character_table(&g, &classes).unwrap();
        let classwise = vanishing_off_group(&g, &classes, VanishingMode::Classwise, None).unwrap();
        let charwise = vanishing_off_group(&g, &classes, VanishingMode::Charwise, Some(&table)).unwrap();
        prop_assert_eq!(&classwise.subgroup, &charwise.subgroup);
        prop_assert_eq!(&classwise.subgroup, &brute_v(&g, &derived_subgroup(&g)));
    }
}
