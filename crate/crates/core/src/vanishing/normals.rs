use std::collections::HashSet;

use crate::group::{GroupTable, Subgroup};
use crate::set::ElementSet;
use crate::structure::{derived_subgroup, normal_closure, ClassPartition};
use crate::vanishing::is_gcp;

/// All normal subgroups, as joins of normal closures of single classes.
///
/// Sorted by order, then by least differing member.
pub fn normal_subgroups(g: &GroupTable, classes: &ClassPartition) -> Vec<Subgroup> {
    let mut atoms: Vec<Subgroup> = Vec::new();
    for c in 1..classes.len() {
        let n = normal_closure(g, [classes.representative(c)]);
        if !atoms.contains(&n) {
            atoms.push(n);
        }
    }
    let trivial = Subgroup::trivial(g);
    let mut seen: HashSet<ElementSet> = HashSet::from([trivial.members().clone()]);
    let mut all = vec![trivial];
    let mut head = 0;
    while head < all.len() {
        let current = all[head].clone();
        for a in &atoms {
            if a.is_subgroup_of(&current) {
                continue;
            }
            let j = current.join(g, a);
            if seen.insert(j.members().clone()) {
                all.push(j);
            }
        }
        head += 1;
    }
    all.sort_by(|x, y| {
        x.order()
            .cmp(&y.order())
            .then_with(|| x.elements().cmp(&y.elements()))
    });
    all
}

/// The normal subgroups `N` for which `(G, N)` is a generalized Camina pair.
pub fn gcp_family(g: &GroupTable, classes: &ClassPartition, normals: &[Subgroup]) -> Vec<Subgroup> {
    let derived = derived_subgroup(g);
    normals
        .iter()
        .filter(|n| derived.is_subgroup_of(n))
        .filter(|n| is_gcp(g, classes, n).unwrap_or(false))
        .cloned()
        .collect()
}
