//! Exhaustive checks of the vanishing-off lemmas on one group. Each returns
//! a description of the first counterexample.

use std::collections::BTreeSet;

use vanishoff::chartab::{cyclotomic_is_zero, dixon_character_table};
use vanishoff::group::{GroupTable, Subgroup};
use vanishoff::structure::{centralizer, conjugacy_classes, derived_subgroup, quotient};
use vanishoff::vanishing::{camina_elements, gcp_family, is_gcp, normal_subgroups, vanishing_off};

use super::{brute_commutator, brute_v, is_camina};

pub type Check = Result<(), String>;
pub type Lemma = fn(&GroupTable) -> Check;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The four characterizations of a Camina element (class equals coset,
/// centralizer order, commutator surjectivity, vanishing of nonlinear
/// characters) agree with each other and with the library at every element.
pub fn camina_characterizations(g: &GroupTable) -> Check {
    let classes = conjugacy_classes(g);
    let derived = derived_subgroup(g);
    let table = dixon_character_table(g, &classes).map_err(|e| e.to_string())?;
    let derived_set: BTreeSet<_> = derived.elements().into_iter().collect();
    let lib = camina_elements(g, &classes, &derived).map_err(|e| e.to_string())?;
    for x in g.elements() {
        let by_class = is_camina(g, &derived, x);
        let hits: BTreeSet<_> = g.elements().map(|y| g.commutator(x, y)).collect();
        let c = classes.class_of(x);
        let answers = [
            by_class,
            centralizer(g, x).order() == derived.index(),
            derived_set.is_subset(&hits),
            table
                .nonlinear_rows()
                .all(|r| cyclotomic_is_zero(table.value(r, c))),
            lib.contains(x),
        ];
        ensure(answers.iter().all(|&a| a == by_class), || {
            format!(
                "x = {}: class/centralizer/commutators/characters/library = {answers:?}",
                g.label(x)
            )
        })?;
    }
    Ok(())
}

/// The normal subgroups `N ⊇ G'` with `(G, N)` a GCP are closed under
/// intersection and meet in `V(G)`.
pub fn gcp_family_meet(g: &GroupTable) -> Check {
    let classes = conjugacy_classes(g);
    let derived = derived_subgroup(g);
    let normals = normal_subgroups(g, &classes);
    let family: Vec<Subgroup> = normals
        .iter()
        .filter(|n| derived.is_subgroup_of(n))
        .filter(|n| {
            g.elements()
                .filter(|&x| !n.contains(x))
                .all(|x| is_camina(g, &derived, x))
        })
        .cloned()
        .collect();
    ensure(family == gcp_family(g, &classes, &normals), || {
        "library GCP family differs".into()
    })?;
    for n in &normals {
        let gcp = is_gcp(g, &classes, n).map_err(|e| e.to_string())?;
        ensure(gcp == family.contains(n), || {
            format!("is_gcp wrong for N of order {}", n.order())
        })?;
    }
    for a in &family {
        for b in &family {
            let meet = a.intersection(g, b);
            ensure(family.contains(&meet), || {
                format!(
                    "intersection of orders {} and {} is not a GCP",
                    a.order(),
                    b.order()
                )
            })?;
        }
    }
    let meet = family
        .iter()
        .fold(Subgroup::whole(g), |acc, n| acc.intersection(g, n));
    let v = brute_v(g, &derived);
    ensure(meet == v, || {
        format!(
            "meet has order {}, V(G) has order {}",
            meet.order(),
            v.order()
        )
    })
}

/// For every normal `N` with `G/N` nonabelian: `N ≤ V(G)` and the preimage
/// of `V(G/N)` lies in `V(G)`.
pub fn quotient_lemma(g: &GroupTable) -> Check {
    let classes = conjugacy_classes(g);
    let v = brute_v(g, &derived_subgroup(g));
    for n in normal_subgroups(g, &classes) {
        let q = quotient(g, &n).map_err(|e| e.to_string())?;
        if q.group.is_abelian() {
            continue;
        }
        ensure(n.is_subgroup_of(&v), || {
            format!("N of order {} not in V(G)", n.order())
        })?;
        let vq = brute_v(&q.group, &derived_subgroup(&q.group));
        let lib = vanishing_off(&q.group).map_err(|e| e.to_string())?;
        ensure(vq == lib, || {
            format!("library V(G/N) wrong for N of order {}", n.order())
        })?;
        ensure(q.preimage(g, &vq).is_subgroup_of(&v), || {
            format!("V(G/N) not in V(G)/N for N of order {}", n.order())
        })?;
    }
    Ok(())
}

/// `[G, M] = G'` for `M = ⟨V(G), x⟩` and every `x ∉ V(G)`.
pub fn overgroups_of_v(g: &GroupTable) -> Check {
    let derived = derived_subgroup(g);
    let v = vanishing_off(g).map_err(|e| e.to_string())?;
    let whole = Subgroup::whole(g);
    for x in g.elements().filter(|&x| !v.contains(x)) {
        let m = Subgroup::generated(g, v.elements().into_iter().chain([x]));
        ensure(brute_commutator(g, &whole, &m) == derived, || {
            format!("[G, <V, {}>] != G'", g.label(x))
        })?;
    }
    Ok(())
}

/// Every nonlinear irreducible character is zero on every class outside
/// `V(G)`.
pub fn characters_vanish_off_v(g: &GroupTable) -> Check {
    let classes = conjugacy_classes(g);
    let table = dixon_character_table(g, &classes).map_err(|e| e.to_string())?;
    let v = vanishing_off(g).map_err(|e| e.to_string())?;
    for r in table.nonlinear_rows() {
        for c in (0..classes.len()).filter(|&c| !v.contains(classes.representative(c))) {
            ensure(cyclotomic_is_zero(table.value(r, c)), || {
                format!(
                    "character {r} nonzero at {}",
                    g.label(classes.representative(c))
                )
            })?;
        }
    }
    Ok(())
}

pub const ALL: [(&str, Lemma); 5] = [
    ("camina characterizations", camina_characterizations),
    ("GCP family meet", gcp_family_meet),
    ("quotient lemma", quotient_lemma),
    ("overgroups of V(G)", overgroups_of_v),
    ("characters vanish off V(G)", characters_vanish_off_v),
];
