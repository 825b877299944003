use crate::group::table::GroupTable;
use crate::group::Elem;
use crate::set::ElementSet;

/// A subgroup of a [`GroupTable`], stored as a membership set.
///
/// Two subgroups compare equal when they have the same members.
#[derive(Clone)]
pub struct Subgroup {
    members: ElementSet,
    generators: Vec<Elem>,
    parent_order: usize,
    normal: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("index", &self.index())
            .field("normal", &self.normal)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Elements reachable from the identity by right multiplication with `gens`.
pub(crate) fn closure(g: &GroupTable, gens: &[Elem]) -> ElementSet {
    let mut set = ElementSet::new(g.order());
    set.insert(0);
    let mut list = vec![0];
    extend_closure(g, &mut set, &mut list, gens, 0);
    set
}

fn extend_closure(
    g: &GroupTable,
    set: &mut ElementSet,
    list: &mut Vec<Elem>,
    gens: &[Elem],
    from: usize,
) {
    let mut head = from;
    while head < list.len() {
        let x = list[head];
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                list.push(y);
            }
        }
        head += 1;
    }
}

impl Subgroup {
    /// Smallest subgroup containing `seed`.
    pub fn generated<I: IntoIterator<Item = Elem>>(g: &GroupTable, seed: I) -> Subgroup {
        let mut set = ElementSet::new(g.order());
        set.insert(0);
        let mut list = vec![0];
        let mut gens = Vec::new();
        for s in seed {
            if set.contains(s) {
                continue;
            }
            gens.push(s);
            extend_closure(g, &mut set, &mut list, &gens, 0);
        }
        Subgroup::with_generators(g, set, gens)
    }

    /// Wraps a member set already known to be a subgroup.
    pub fn from_members(g: &GroupTable, members: ElementSet) -> Subgroup {
        let mut span = ElementSet::new(g.order());
        span.insert(0);
        let mut list = vec![0];
        let mut gens = Vec::new();
        for x in members.iter() {
            if !span.contains(x) {
                gens.push(x);
                extend_closure(g, &mut span, &mut list, &gens, 0);
            }
        }
        debug_assert_eq!(span, members, "member set is not closed");
        Subgroup::with_generators(g, members, gens)
    }

    fn with_generators(g: &GroupTable, members: ElementSet, generators: Vec<Elem>) -> Subgroup {
        let normal = generators.iter().all(|&h| {
            g.generators()
                .iter()
                .all(|&x| members.contains(g.conj(h, x)))
        });
        Subgroup {
            members,
            generators,
            parent_order: g.order(),
            normal,
        }
    }

    pub fn trivial(g: &GroupTable) -> Subgroup {
        Subgroup::generated(g, [])
    }

    pub fn whole(g: &GroupTable) -> Subgroup {
        Subgroup::from_members(g, ElementSet::full(g.order()))
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.order()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent_order
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    /// Members in increasing identifier order.
    pub fn elements(&self) -> Vec<Elem> {
        self.members.iter().collect()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && self.order() < other.order()
    }

    pub fn intersection(&self, g: &GroupTable, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(g, self.members.intersection(&other.members))
    }

    /// `self * other`, the subgroup generated by both.
    pub fn join(&self, g: &GroupTable, other: &Subgroup) -> Subgroup {
        Subgroup::generated(g, self.generators.iter().chain(other.generators()).copied())
    }

    /// Normality by conjugating every member by every element.
    pub fn is_normal_exhaustive(&self, g: &GroupTable) -> bool {
        self.members
            .iter()
            .all(|h| g.elements().all(|x| self.members.contains(g.conj(h, x))))
    }

    /// Labels of the stored generators.
    pub fn generator_labels(&self, g: &GroupTable) -> Vec<String> {
        self.generators
            .iter()
            .map(|&x| g.label(x).to_string())
            .collect()
    }
}
