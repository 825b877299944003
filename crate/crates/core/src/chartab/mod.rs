//! Exact irreducible character tables and the vanishing sets of characters.

mod cyclotomic;
mod dixon;
mod modp;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use dixon::{dixon_character_table, dixon_prime};
pub use modp::PrimeField;

use std::collections::BTreeSet;

use crate::group::{Elem, GroupTable, Subgroup};
use crate::structure::ClassPartition;

/// Irreducible characters (rows) evaluated on conjugacy classes (columns).
///
/// Rows are sorted by degree, then by the canonical reduced coordinates of
/// their values.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    classes: ClassPartition,
    conductor: u32,
    prime: u64,
    matrices_used: usize,
    rows: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    inverse_class: Vec<usize>,
}

impl CharacterTable {
    pub(crate) fn new(
        classes: ClassPartition,
        conductor: u32,
        prime: u64,
        matrices_used: usize,
        rows: Vec<Vec<Cyclotomic>>,
        degrees: Vec<u64>,
        inverse_class: Vec<usize>,
    ) -> Self {
        CharacterTable {
            classes,
            conductor,
            prime,
            matrices_used,
            rows,
            degrees,
            inverse_class,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn classes(&self) -> &ClassPartition {
        &self.classes
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Number of class matrices consumed before every eigenspace split.
    pub fn matrices_used(&self) -> usize {
        self.matrices_used
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.rows[row][class]
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.degrees[row]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn is_linear(&self, row: usize) -> bool {
        self.degrees[row] == 1
    }

    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    pub fn nonlinear_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| !self.is_linear(i))
    }

    /// Elements at which the character of `row` is nonzero.
    pub fn vanishing_set(&self, row: usize) -> Vec<Elem> {
        let mut out: Vec<Elem> = (0..self.classes.len())
            .filter(|&j| !self.rows[row][j].is_zero())
            .flat_map(|j| self.classes.class(j).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks every exactness invariant of the table: shape, degrees in the
    /// first column, `Σ χ(1)^2 = |G|`, the linear count `[G : G']`, degrees
    /// dividing `|G|`, and both orthogonality relations.
    pub fn check(&self, derived_index: usize) -> Result<(), String> {
        let k = self.classes.len();
        let n = self.classes.group_order() as i64;
        if self.rows.len() != k {
            return Err(format!("{} rows for {k} classes", self.rows.len()));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row[0].as_integer() != Some(self.degrees[i] as i64) {
                return Err(format!("row {i}: first column is not the degree"));
            }
            if n % self.degrees[i] as i64 != 0 {
                return Err(format!("row {i}: degree does not divide |G|"));
            }
        }
        if self.degrees.iter().map(|d| d * d).sum::<u64>() != n as u64 {
            return Err("squared degrees do not sum to |G|".into());
        }
        if self.linear_count() != derived_index {
            return Err(format!(
                "{} linear characters but [G:G'] = {derived_index}",
                self.linear_count()
            ));
        }
        let e = self.conductor as usize;
        let sizes = self.classes.sizes();
        let terms: Vec<Vec<Vec<(usize, i64)>>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.terms().collect()).collect())
            .collect();
        let mut acc = vec![0i64; e];
        for a in 0..k {
            for b in a..k {
                acc.fill(0);
                for j in 0..k {
                    let w = sizes[j] as i64;
                    for &(l1, m1) in &terms[a][j] {
                        for &(l2, m2) in &terms[b][j] {
                            acc[(l1 + e - l2) % e] += w * m1 * m2;
                        }
                    }
                }
                if a == b {
                    acc[0] -= n;
                }
                if !Cyclotomic::new(self.conductor, acc.clone()).is_zero() {
                    return Err(format!("rows {a} and {b} are not orthogonal"));
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                acc.fill(0);
                for t in &terms {
                    for &(l1, m1) in &t[c] {
                        for &(l2, m2) in &t[d] {
                            acc[(l1 + e - l2) % e] += m1 * m2;
                        }
                    }
                }
                if c == d {
                    acc[0] -= n / sizes[c] as i64;
                }
                if !Cyclotomic::new(self.conductor, acc.clone()).is_zero() {
                    return Err(format!("columns {c} and {d} are not orthogonal"));
                }
            }
        }
        Ok(())
    }

    pub fn inverse_class(&self, j: usize) -> usize {
        self.inverse_class[j]
    }
}

/// Multiset of degrees and the set `cd(G)`.
pub fn character_degrees(t: &CharacterTable) -> (Vec<u64>, BTreeSet<u64>) {
    let mut multiset = t.degrees().to_vec();
    multiset.sort_unstable();
    let set = multiset.iter().copied().collect();
    (multiset, set)
}

/// `V(χ)`, generated by the elements where `χ` does not vanish.
pub fn vanishing_off_character(g: &GroupTable, t: &CharacterTable, row: usize) -> Subgroup {
    Subgroup::generated(g, t.vanishing_set(row))
}

pub fn cyclotomic_is_zero(v: &Cyclotomic) -> bool {
    v.is_zero()
}
