use serde::{Deserialize, Serialize};

use crate::group::{GroupTable, Subgroup};
use crate::set::ElementSet;
use crate::structure::{center, mutual_commutator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    LowerCentral,
    UpperCentral,
    Derived,
    VSeries,
}

/// Terms of a series from the first term up to stabilization.
///
/// `terms` stops at the first term that equals its successor; every later
/// term is that same subgroup.
#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
}

impl SeriesReport {
    /// Builds a series by iterating `next` until two consecutive terms agree.
    pub fn iterate(
        kind: SeriesKind,
        first: Subgroup,
        mut next: impl FnMut(&Subgroup) -> Subgroup,
    ) -> Self {
        let mut terms = vec![first];
        loop {
            let succ = next(terms.last().unwrap());
            if &succ == terms.last().unwrap() {
                break;
            }
            terms.push(succ);
        }
        SeriesReport { kind, terms }
    }

    /// Term `i`, counted from 1; indices past stabilization return the
    /// stable term.
    pub fn term(&self, i: usize) -> &Subgroup {
        assert!(i >= 1, "series terms are numbered from 1");
        &self.terms[(i - 1).min(self.terms.len() - 1)]
    }

    /// Index of the last distinct term.
    pub fn stabilization_index(&self) -> usize {
        self.terms.len()
    }

    pub fn last(&self) -> &Subgroup {
        self.terms.last().unwrap()
    }

    pub fn reaches_trivial(&self) -> bool {
        self.last().is_trivial()
    }
}

/// `G_1 = G`, `G_i = [G_{i-1}, G]`.
pub fn lower_central_series(g: &GroupTable) -> SeriesReport {
    let whole = Subgroup::whole(g);
    SeriesReport::iterate(SeriesKind::LowerCentral, whole.clone(), |h| {
        mutual_commutator(g, h, &whole)
    })
}

/// `Z_1 = Z(G)`, `Z_i / Z_{i-1} = Z(G / Z_{i-1})`.
pub fn upper_central_series(g: &GroupTable) -> SeriesReport {
    SeriesReport::iterate(SeriesKind::UpperCentral, center(g), |z| {
        // x Z is central in G/Z exactly when [x, s] lies in Z for every generator s.
        let members = ElementSet::from_iter(
            g.order(),
            g.elements().filter(|&x| {
                g.generators()
                    .iter()
                    .all(|&s| z.contains(g.commutator(x, s)))
            }),
        );
        Subgroup::from_members(g, members)
    })
}

/// `G ≥ G' ≥ G'' ≥ ...`
pub fn derived_series(g: &GroupTable) -> SeriesReport {
    SeriesReport::iterate(SeriesKind::Derived, Subgroup::whole(g), |h| {
        mutual_commutator(g, h, h)
    })
}

/// Number of steps the lower central series takes to reach 1, if it does.
pub fn nilpotence_class(lower: &SeriesReport) -> Option<usize> {
    debug_assert_eq!(lower.kind, SeriesKind::LowerCentral);
    lower.reaches_trivial().then(|| lower.terms.len() - 1)
}
