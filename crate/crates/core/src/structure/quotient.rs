use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable, Subgroup};
use crate::set::ElementSet;

/// A quotient group together with the projection from its parent.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: GroupTable,
    /// `projection[x]` is the coset of parent element `x`.
    pub projection: Vec<Elem>,
    /// Least member of each coset.
    pub representatives: Vec<Elem>,
}

impl Quotient {
    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x as usize]
    }

    /// `H N / N` for a subgroup `H` of the parent.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        Subgroup::generated(
            &self.group,
            h.elements().into_iter().map(|x| self.project(x)),
        )
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, parent: &GroupTable, h: &Subgroup) -> Subgroup {
        let members = ElementSet::from_iter(
            parent.order(),
            parent.elements().filter(|&x| h.contains(self.project(x))),
        );
        Subgroup::from_members(parent, members)
    }
}

/// `G / N`, with cosets numbered by their least member.
pub fn quotient(g: &GroupTable, n: &Subgroup) -> Result<Quotient> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let mut projection = vec![Elem::MAX; g.order()];
    let mut representatives = Vec::new();
    let members = n.elements();
    for x in g.elements() {
        if projection[x as usize] != Elem::MAX {
            continue;
        }
        let id = representatives.len() as Elem;
        representatives.push(x);
        for &m in &members {
            projection[g.mul(x, m) as usize] = id;
        }
    }
    let q = representatives.len();
    let mut mul = Vec::with_capacity(q * q);
    for &a in &representatives {
        for &b in &representatives {
            mul.push(projection[g.mul(a, b) as usize]);
        }
    }
    let mut generators = Vec::new();
    let mut names = Vec::new();
    for (&s, name) in g.generators().iter().zip(g.generator_names()) {
        let image = projection[s as usize];
        if image != 0 && !generators.contains(&image) {
            generators.push(image);
            names.push(name.clone());
        }
    }
    let labels = representatives
        .iter()
        .map(|&r| g.label(r).to_string())
        .collect();
    let mut group = GroupTable::from_parts(mul, generators, names, labels)?;
    if let Some(name) = g.name() {
        group.set_name(format!("{name}/N"));
    }
    Ok(Quotient {
        group,
        projection,
        representatives,
    })
}
