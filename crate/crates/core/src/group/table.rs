use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::Elem;

const EXHAUSTIVE_ASSOCIATIVITY: usize = 512;
const SAMPLED_TRIPLES: usize = 1_000_000;

/// A fully enumerated finite group with identity at element 0.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    generators: Vec<Elem>,
    generator_names: Vec<String>,
    labels: Vec<String>,
    name: Option<String>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("generators", &self.generator_names)
            .finish()
    }
}

impl GroupTable {
    /// Assembles a table from a row-major multiplication table.
    ///
    /// Only the shape and the identity are checked here; [`validate`](Self::validate)
    /// runs the full group axioms.
    pub fn from_parts(
        mul: Vec<Elem>,
        generators: Vec<Elem>,
        generator_names: Vec<String>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 || mul.len() != n * n {
            return Err(Error::InvalidTable(
                "table shape does not match element count".into(),
            ));
        }
        if generators.len() != generator_names.len() {
            return Err(Error::InvalidTable("one name per generator".into()));
        }
        if let Some(&g) = generators.iter().find(|&&g| g as usize >= n) {
            return Err(Error::BadElement(g));
        }
        let mut inv = vec![Elem::MAX; n];
        for x in 0..n {
            for y in 0..n {
                if mul[x * n + y] == 0 {
                    inv[x] = y as Elem;
                    break;
                }
            }
            if inv[x] == Elem::MAX {
                return Err(Error::InvalidTable(format!("element {x} has no inverse")));
            }
        }
        Ok(GroupTable {
            order: n,
            mul,
            inv,
            generators,
            generator_names,
            labels,
            name: None,
        })
    }

    /// The group with one element.
    pub fn trivial() -> Self {
        GroupTable {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            generators: Vec::new(),
            generator_names: Vec::new(),
            labels: vec!["1".into()],
            name: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x as usize]
    }

    /// `g^{-1} x g`
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x^{-1} y^{-1} x y`
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: Elem, k: u64) -> Elem {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: Elem) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order as Elem)
            .map(|x| self.element_order(x))
            .fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, &a)| {
            self.generators[i + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x as usize]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    /// Evaluates a `*`-separated word over the generator names, e.g. `b*d^2`.
    pub fn element_by_word(&self, word: &str) -> Result<Elem> {
        let word = word.trim();
        if word == "1" || word.is_empty() {
            return Ok(0);
        }
        let mut acc = 0;
        for factor in word.split('*') {
            let (name, exp) = match factor.trim().split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::BadWord(word.to_string()))?,
                ),
                None => (factor.trim(), 1),
            };
            let idx = self
                .generator_names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::BadWord(word.to_string()))?;
            acc = self.mul(acc, self.pow(self.generators[idx], exp));
        }
        Ok(acc)
    }

    /// Checks identity, Latin-square, inverse, associativity and generation.
    ///
    /// Associativity is exhaustive up to order 512 and sampled on 10^6
    /// uniformly drawn triples above that.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n as Elem {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvalidTable(format!("0 is not an identity at {x}")));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                let z = self.mul[x * n + y] as usize;
                if z >= n || seen[z] == x {
                    return Err(Error::InvalidTable(format!("row {x} is not a permutation")));
                }
                seen[z] = x;
            }
        }
        seen.fill(usize::MAX);
        for y in 0..n {
            for x in 0..n {
                let z = self.mul[x * n + y] as usize;
                if seen[z] == y {
                    return Err(Error::InvalidTable(format!(
                        "column {y} is not a permutation"
                    )));
                }
                seen[z] = y;
            }
        }
        for x in 0..n as Elem {
            if self.mul(x, self.inv(x)) != 0 {
                return Err(Error::InvalidTable(format!("bad inverse for {x}")));
            }
        }
        let assoc = |x: Elem, y: Elem, z: Elem| -> Result<()> {
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                Err(Error::InvalidTable(format!(
                    "associativity fails at ({x}, {y}, {z})"
                )))
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for x in 0..n as Elem {
                for y in 0..n as Elem {
                    for z in 0..n as Elem {
                        assoc(x, y, z)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let x = rng.gen_range(0..n) as Elem;
                let y = rng.gen_range(0..n) as Elem;
                let z = rng.gen_range(0..n) as Elem;
                assoc(x, y, z)?;
            }
        }
        let generated = crate::group::subgroup::closure(self, &self.generators);
        if generated.len() != n {
            return Err(Error::InvalidTable(format!(
                "generators span {} of {n} elements",
                generated.len()
            )));
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> GroupTable {
        let mul = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x + y) % 3))
            .collect();
        GroupTable::from_parts(
            mul,
            vec![1],
            vec!["a".into()],
            vec!["1".into(), "a".into(), "a^2".into()],
        )
        .unwrap()
    }

    #[test]
    fn basic_queries() {
        let g = z3();
        g.validate().unwrap();
        assert_eq!(g.inv(1), 2);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.exponent(), 3);
        assert_eq!(g.element_by_word("a^2").unwrap(), 2);
        assert_eq!(g.element_by_word("a*a*a").unwrap(), 0);
        assert!(g.element_by_word("b").is_err());
    }

    #[test]
    fn rejects_non_latin_table() {
        let mul = vec![0, 1, 2, 1, 0, 0, 2, 0, 1];
        let labels = vec!["1".into(), "a".into(), "b".into()];
        let bad =
            GroupTable::from_parts(mul, vec![1, 2], vec!["a".into(), "b".into()], labels).unwrap();
        assert!(matches!(bad.validate(), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn missing_generators_detected() {
        let mul = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x + y) % 3))
            .collect();
        let g = GroupTable::from_parts(
            mul,
            vec![],
            vec![],
            vec!["1".into(), "a".into(), "b".into()],
        )
        .unwrap();
        assert!(g.validate().is_err());
    }
}
