//! The vanishing-off subgroup and everything built on it: Camina elements,
//! the `V_i` series, vanishing height, Camina pairs and triples, and the
//! theorem verifier.

mod normals;
mod profile;
mod theorems;

pub use normals::{gcp_family, normal_subgroups};
pub use profile::{
    vanishing_profile, CentralizerPair, QuotientShape, SeriesParameters, VanishingProfile,
};
pub use theorems::{verify_theorems, Clause, Observation, TheoremReport, Verdict};

use serde::{Deserialize, Serialize};

use crate::chartab::{vanishing_off_character, CharacterTable};
use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable, Subgroup};
use crate::set::ElementSet;
use crate::structure::{
    center, conjugacy_classes, derived_subgroup, lower_central_series, mutual_commutator,
    upper_central_series, ClassPartition, SeriesKind, SeriesReport,
};

/// Marker recorded when `V(G)` is asked of an abelian group.
pub const ABELIAN_MARKER: &str = "not defined (abelian)";

/// Structural data shared by the profile and the theorem checks.
pub struct Context<'a> {
    pub group: &'a GroupTable,
    pub classes: ClassPartition,
    pub derived: Subgroup,
    pub center: Subgroup,
    pub lower: SeriesReport,
    pub upper: SeriesReport,
    pub table: Option<&'a CharacterTable>,
}

impl<'a> Context<'a> {
    pub fn new(group: &'a GroupTable, table: Option<&'a CharacterTable>) -> Self {
        let classes = match table {
            Some(t) => t.classes().clone(),
            None => conjugacy_classes(group),
        };
        Context {
            group,
            classes,
            derived: derived_subgroup(group),
            center: center(group),
            lower: lower_central_series(group),
            upper: upper_central_series(group),
            table,
        }
    }
}

/// How [`vanishing_off_group`] computes `V(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VanishingMode {
    /// Generated by the elements that are not Camina elements.
    Classwise,
    /// Product of `V(χ)` over the nonlinear irreducible characters.
    Charwise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingOff {
    pub subgroup: Subgroup,
    /// Set when the group is abelian and `V(G)` is only conventionally `G`.
    pub degenerate: Option<&'static str>,
}

/// Whether the class of `x` is exactly the coset `x G'`.
fn class_is_coset(
    g: &GroupTable,
    classes: &ClassPartition,
    derived: &Subgroup,
    class: usize,
) -> bool {
    let r = classes.representative(class);
    classes.size(class) == derived.order()
        && derived
            .elements()
            .into_iter()
            .all(|m| classes.class_of(g.mul(r, m)) == class)
}

fn centralizer_order(g: &GroupTable, x: Elem) -> usize {
    g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)).count()
}

/// Elements whose class is the full coset `gG'`.
///
/// Computed once from class/coset comparison and once from centralizer
/// orders; disagreement is reported as an error.
pub fn camina_elements(
    g: &GroupTable,
    classes: &ClassPartition,
    derived: &Subgroup,
) -> Result<ElementSet> {
    let mut set = ElementSet::new(g.order());
    for c in 0..classes.len() {
        let by_coset = class_is_coset(g, classes, derived, c);
        let by_centralizer = centralizer_order(g, classes.representative(c)) == derived.index();
        if by_coset != by_centralizer {
            return Err(Error::OracleMismatch(format!(
                "Camina test disagrees on class of {}",
                g.label(classes.representative(c))
            )));
        }
        if by_coset {
            for &x in classes.class(c) {
                set.insert(x);
            }
        }
    }
    Ok(set)
}

/// `V(G)`, computed either from the classes or from a character table.
pub fn vanishing_off_group(
    g: &GroupTable,
    classes: &ClassPartition,
    mode: VanishingMode,
    table: Option<&CharacterTable>,
) -> Result<VanishingOff> {
    if g.is_abelian() {
        return Ok(VanishingOff {
            subgroup: Subgroup::whole(g),
            degenerate: Some(ABELIAN_MARKER),
        });
    }
    let subgroup = match mode {
        VanishingMode::Classwise => {
            let derived = derived_subgroup(g);
            let camina = camina_elements(g, classes, &derived)?;
            Subgroup::generated(g, g.elements().filter(|&x| !camina.contains(x)))
        }
        VanishingMode::Charwise => {
            let t = table.ok_or(Error::MissingCharacterTable)?;
            t.nonlinear_rows().fold(Subgroup::trivial(g), |acc, row| {
                acc.join(g, &vanishing_off_character(g, t, row))
            })
        }
    };
    Ok(VanishingOff {
        subgroup,
        degenerate: None,
    })
}

/// Classwise `V(G)` of a standalone group, with its own classes.
pub fn vanishing_off(g: &GroupTable) -> Result<Subgroup> {
    let classes = conjugacy_classes(g);
    Ok(vanishing_off_group(g, &classes, VanishingMode::Classwise, None)?.subgroup)
}

/// `V_1 = V`, `V_i = [V_{i-1}, G]`, to stabilization.
pub fn v_series(g: &GroupTable, v: &Subgroup) -> SeriesReport {
    let whole = Subgroup::whole(g);
    SeriesReport::iterate(SeriesKind::VSeries, v.clone(), |h| {
        mutual_commutator(g, h, &whole)
    })
}

/// Largest `i` with `V_i < G_i`, or 0 if the two series agree throughout.
pub fn vanishing_height(lower: &SeriesReport, vs: &SeriesReport) -> usize {
    let depth = lower.stabilization_index().max(vs.stabilization_index()) + 1;
    (1..=depth)
        .filter(|&i| vs.term(i) != lower.term(i))
        .max()
        .unwrap_or(0)
}

/// Every `g ∉ N` is conjugate to all of `gM`.
pub fn is_camina_triple(
    g: &GroupTable,
    classes: &ClassPartition,
    n: &Subgroup,
    m: &Subgroup,
) -> Result<bool> {
    if !n.is_normal() || !m.is_normal() {
        return Err(Error::NotNormal);
    }
    let ms = m.elements();
    // Both subgroups are normal, so testing one element per class suffices.
    Ok((0..classes.len()).all(|c| {
        let r = classes.representative(c);
        n.contains(r) || ms.iter().all(|&y| classes.class_of(g.mul(r, y)) == c)
    }))
}

pub fn is_camina_pair(g: &GroupTable, classes: &ClassPartition, n: &Subgroup) -> Result<bool> {
    is_camina_triple(g, classes, n, n)
}

/// `(G, N)` is a generalized Camina pair.
pub fn is_gcp(g: &GroupTable, classes: &ClassPartition, n: &Subgroup) -> Result<bool> {
    is_camina_triple(g, classes, n, &derived_subgroup(g))
}

#[cfg(test)]
mod tests;
