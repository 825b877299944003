use crate::group::{Elem, GroupTable};

/// Partition of a group into conjugacy classes.
///
/// Classes are ordered by their least member, which is also the class
/// representative, so class 0 is `{1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    classes: Vec<Vec<Elem>>,
    class_of: Vec<u32>,
    group_order: usize,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &[Elem] {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x as usize] as usize
    }

    pub fn representative(&self, i: usize) -> Elem {
        self.classes[i][0]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Class of the inverses of class `i`.
    pub fn inverse_class(&self, g: &GroupTable, i: usize) -> usize {
        self.class_of(g.inv(self.representative(i)))
    }

    /// Class of `x` as a slice.
    pub fn class_containing(&self, x: Elem) -> &[Elem] {
        &self.classes[self.class_of(x)]
    }
}

/// Exact conjugacy classes by orbit enumeration under the generators.
pub fn conjugacy_classes(g: &GroupTable) -> ClassPartition {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n as Elem {
        if class_of[x as usize] != u32::MAX {
            continue;
        }
        let id = classes.len() as u32;
        class_of[x as usize] = id;
        let mut orbit = vec![x];
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            for &s in g.generators() {
                let z = g.conj(y, s);
                if class_of[z as usize] == u32::MAX {
                    class_of[z as usize] = id;
                    orbit.push(z);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    ClassPartition {
        classes,
        class_of,
        group_order: n,
    }
}
