//! Parsing group descriptions and realizing them as enumerated groups.

mod collect;
mod perm;
mod presentation;
mod subgroup;
mod table;

pub use collect::{realize_pc, Collector};
pub use perm::{cycle_string, realize_perm};
pub use presentation::{parse_group_spec, GroupSpec, PcPresentation, PermGenerators, Word};
pub use subgroup::Subgroup;
pub use table::GroupTable;

use crate::error::Result;

/// Element identifier inside a [`GroupTable`]; the identity is 0.
pub type Elem = u32;

/// Default cap on the order of realized groups.
pub const DEFAULT_ORDER_LIMIT: usize = 10_000;

/// Realizes either kind of description.
pub fn realize(spec: &GroupSpec, order_limit: usize) -> Result<GroupTable> {
    match spec {
        GroupSpec::Pc(p) => realize_pc(p, order_limit),
        GroupSpec::Perm(p) => realize_perm(p, order_limit),
    }
}

/// Smallest subgroup of `g` containing `seed`.
pub fn subgroup_generated<I: IntoIterator<Item = Elem>>(g: &GroupTable, seed: I) -> Subgroup {
    Subgroup::generated(g, seed)
}

pub fn element_order(g: &GroupTable, x: Elem) -> u64 {
    g.element_order(x)
}
