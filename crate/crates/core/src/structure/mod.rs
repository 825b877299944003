//! Conjugacy classes, centralizers, commutator subgroups, the classical
//! series, quotients, and abelian classification.

mod classes;
mod quotient;
mod series;

pub use classes::{conjugacy_classes, ClassPartition};
pub use quotient::{quotient, Quotient};
pub use series::{
    derived_series, lower_central_series, nilpotence_class, upper_central_series, SeriesKind,
    SeriesReport,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable, Subgroup};
use crate::set::ElementSet;

pub fn centralizer(g: &GroupTable, x: Elem) -> Subgroup {
    let members = ElementSet::from_iter(
        g.order(),
        g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)),
    );
    Subgroup::from_members(g, members)
}

/// Elements commuting with every member of `h`.
pub fn centralizer_of(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let members = ElementSet::from_iter(
        g.order(),
        g.elements()
            .filter(|&y| gens.iter().all(|&x| g.mul(x, y) == g.mul(y, x))),
    );
    Subgroup::from_members(g, members)
}

pub fn center(g: &GroupTable) -> Subgroup {
    centralizer_of(g, &Subgroup::whole(g))
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure<I: IntoIterator<Item = Elem>>(g: &GroupTable, seed: I) -> Subgroup {
    let mut h = Subgroup::generated(g, seed);
    loop {
        let missing: Vec<Elem> = h
            .generators()
            .iter()
            .flat_map(|&x| g.generators().iter().map(move |&s| (x, s)))
            .map(|(x, s)| g.conj(x, s))
            .filter(|&c| !h.contains(c))
            .collect();
        if missing.is_empty() {
            return h;
        }
        h = Subgroup::generated(g, h.generators().iter().copied().chain(missing));
    }
}

/// `[A, B]`, generated by all `[a, b]` with `a ∈ A`, `b ∈ B`.
///
/// For normal `A` and `B` this is the normal closure of the commutators of
/// their generators; otherwise every pair is visited.
pub fn mutual_commutator(g: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    if a.is_normal() && b.is_normal() {
        let seed: Vec<Elem> = a
            .generators()
            .iter()
            .flat_map(|&x| b.generators().iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.commutator(x, y))
            .collect();
        normal_closure(g, seed)
    } else {
        mutual_commutator_exhaustive(g, a, b)
    }
}

pub fn mutual_commutator_exhaustive(g: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let bs = b.elements();
    let mut set = ElementSet::new(g.order());
    for x in a.elements() {
        for &y in &bs {
            set.insert(g.commutator(x, y));
        }
    }
    Subgroup::generated(g, set.iter())
}

pub fn derived_subgroup(g: &GroupTable) -> Subgroup {
    let whole = Subgroup::whole(g);
    mutual_commutator(g, &whole, &whole)
}

/// A subgroup re-enumerated as a group in its own right.
#[derive(Debug, Clone)]
pub struct InducedGroup {
    pub group: GroupTable,
    /// `embedding[i]` is the parent element for subgroup element `i`.
    pub embedding: Vec<Elem>,
}

impl InducedGroup {
    /// Parent-side subgroup for a subgroup of the induced group.
    pub fn lift(&self, parent: &GroupTable, h: &Subgroup) -> Subgroup {
        Subgroup::generated(
            parent,
            h.generators().iter().map(|&x| self.embedding[x as usize]),
        )
    }

    /// Induced-side subgroup for a parent subgroup contained in this one.
    pub fn restrict(&self, h: &Subgroup) -> Subgroup {
        let members = ElementSet::from_iter(
            self.embedding.len(),
            self.embedding
                .iter()
                .enumerate()
                .filter(|(_, &x)| h.contains(x))
                .map(|(i, _)| i as Elem),
        );
        Subgroup::from_members(&self.group, members)
    }
}

/// Realizes `h` as a standalone [`GroupTable`] (identity stays at 0).
pub fn subgroup_as_group(g: &GroupTable, h: &Subgroup) -> Result<InducedGroup> {
    let embedding = h.elements();
    let mut local = vec![Elem::MAX; g.order()];
    for (i, &x) in embedding.iter().enumerate() {
        local[x as usize] = i as Elem;
    }
    let m = embedding.len();
    let mut mul = Vec::with_capacity(m * m);
    for &x in &embedding {
        for &y in &embedding {
            mul.push(local[g.mul(x, y) as usize]);
        }
    }
    let generators: Vec<Elem> = h.generators().iter().map(|&x| local[x as usize]).collect();
    let names = h
        .generators()
        .iter()
        .map(|&x| g.label(x).to_string())
        .collect();
    let labels = embedding.iter().map(|&x| g.label(x).to_string()).collect();
    let group = GroupTable::from_parts(mul, generators, names, labels)?;
    Ok(InducedGroup { group, embedding })
}

/// Structure of a finite abelian group as far as the vanishing results need.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianClass {
    pub cyclic: bool,
    pub elementary_abelian: Option<u64>,
    pub trivial: bool,
}

pub fn classify_abelian(g: &GroupTable) -> Result<AbelianClass> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.order() as u64;
    if n == 1 {
        return Ok(AbelianClass {
            cyclic: true,
            elementary_abelian: None,
            trivial: true,
        });
    }
    let orders: Vec<u64> = g.elements().skip(1).map(|x| g.element_order(x)).collect();
    let cyclic = orders.contains(&n);
    let p = orders[0];
    let elementary = (is_prime(p) && orders.iter().all(|&o| o == p)).then_some(p);
    Ok(AbelianClass {
        cyclic,
        elementary_abelian: elementary,
        trivial: false,
    })
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `p` with `n` a power of `p`, if `n > 1` is a prime power.
pub fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}
