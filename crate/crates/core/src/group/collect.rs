//! Collection in polycyclic presentations, the overlap consistency checks,
//! and realization of a presentation as a full multiplication table.

use crate::error::{Error, Result};
use crate::group::presentation::PcPresentation;
use crate::group::table::GroupTable;
use crate::group::Elem;

const STEP_BUDGET: u64 = 50_000_000;

/// Exponent vector of a normal-form word `g_1^{e_1} ... g_k^{e_k}`.
pub type Exponents = Vec<u32>;

/// Collection from the left over a polycyclic presentation.
pub struct Collector<'a> {
    pres: &'a PcPresentation,
    orders: Vec<u32>,
    /// Letters of the power relation words.
    powers: Vec<Vec<usize>>,
    /// `conj[j][i]` holds the letters of `g_j^{g_i}` for `i < j`.
    conj: Vec<Vec<Vec<usize>>>,
}

fn letters(w: &[(usize, u32)]) -> Vec<usize> {
    w.iter()
        .flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize))
        .collect()
}

impl<'a> Collector<'a> {
    pub fn new(pres: &'a PcPresentation) -> Self {
        let k = pres.generator_count();
        let powers = (0..k).map(|i| letters(pres.power(i))).collect();
        let conj = (0..k)
            .map(|j| {
                (0..j)
                    .map(|i| match pres.conjugate(j, i) {
                        Some(w) => letters(w),
                        None => vec![j],
                    })
                    .collect()
            })
            .collect();
        Collector {
            pres,
            orders: pres.relative_orders().to_vec(),
            powers,
            conj,
        }
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn identity(&self) -> Exponents {
        vec![0; self.rank()]
    }

    /// Multiplies the normal form `e` on the right by the letters of `word`.
    pub fn mul_letters(&self, e: &mut Exponents, word: &[usize]) -> Result<()> {
        let k = self.rank();
        let mut stack: Vec<usize> = word.iter().rev().copied().collect();
        let mut steps = 0u64;
        while let Some(i) = stack.pop() {
            steps += 1;
            if steps > STEP_BUDGET {
                return Err(Error::CollectionBudget { steps });
            }
            let tail_start = stack.len();
            // Move g_i left past every later generator: w g_i = g_i w^{g_i}.
            for j in (i + 1..k).rev() {
                let ej = std::mem::take(&mut e[j]);
                for _ in 0..ej {
                    stack.extend(self.conj[j][i].iter().rev());
                }
            }
            // The conjugated tail was pushed last-generator first, so the
            // stack top now holds the letters of (g_{i+1}^{g_i})^{e_{i+1}}.
            debug_assert!(stack.len() >= tail_start);
            e[i] += 1;
            if e[i] == self.orders[i] {
                e[i] = 0;
                stack.extend(self.powers[i].iter().rev());
            }
        }
        Ok(())
    }

    pub fn mul_exponents(&self, e: &mut Exponents, rhs: &Exponents) -> Result<()> {
        let w = self.letters_of(rhs);
        self.mul_letters(e, &w)
    }

    /// Collected form of a word given as letters.
    pub fn collect(&self, word: &[usize]) -> Result<Exponents> {
        let mut e = self.identity();
        self.mul_letters(&mut e, word)?;
        Ok(e)
    }

    pub fn letters_of(&self, e: &Exponents) -> Vec<usize> {
        e.iter()
            .enumerate()
            .flat_map(|(g, &x)| std::iter::repeat_n(g, x as usize))
            .collect()
    }

    fn text(&self, e: &Exponents) -> String {
        let w: Vec<(usize, u32)> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(g, &x)| (g, x))
            .collect();
        self.pres.word_text(&w)
    }

    fn compare(&self, overlap: String, left: Exponents, right: Exponents) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::Inconsistent {
                overlap,
                left: self.text(&left),
                right: self.text(&right),
            })
        }
    }

    /// Runs the standard overlap tests; the first failing overlap is reported.
    pub fn check_consistency(&self) -> Result<()> {
        let k = self.rank();
        let names = self.pres.names();
        let pow = |g: usize| vec![g; self.orders[g] as usize];
        // g_k (g_j g_i) = (g_k g_j) g_i
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    let left = self.collect(&[l, j, i])?;
                    let mut right = self.collect(&[l])?;
                    let ji = self.collect(&[j, i])?;
                    self.mul_exponents(&mut right, &ji)?;
                    self.compare(
                        format!("{}*{}*{}", names[l], names[j], names[i]),
                        left,
                        right,
                    )?;
                }
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                // (g_j^{m_j}) g_i = g_j^{m_j - 1} (g_j g_i)
                let mut left = self.collect(&self.powers[j])?;
                self.mul_letters(&mut left, &[i])?;
                let mut right = self.collect(&vec![j; self.orders[j] as usize - 1])?;
                let ji = self.collect(&[j, i])?;
                self.mul_exponents(&mut right, &ji)?;
                self.compare(
                    format!("{}^{}*{}", names[j], self.orders[j], names[i]),
                    left,
                    right,
                )?;
                // g_j (g_i^{m_i}) = (g_j g_i) g_i^{m_i - 1}
                let mut left = self.collect(&[j])?;
                let pi = self.collect(&self.powers[i])?;
                self.mul_exponents(&mut left, &pi)?;
                let mut right = self.collect(&[j])?;
                self.mul_letters(&mut right, &pow(i))?;
                self.compare(
                    format!("{}*{}^{}", names[j], names[i], self.orders[i]),
                    left,
                    right,
                )?;
            }
        }
        // g_i (g_i^{m_i}) = (g_i^{m_i}) g_i
        for i in 0..k {
            let mut left = self.collect(&[i])?;
            let pi = self.collect(&self.powers[i])?;
            self.mul_exponents(&mut left, &pi)?;
            let mut right = pi.clone();
            self.mul_letters(&mut right, &[i])?;
            self.compare(
                format!("{}*{}^{}", names[i], names[i], self.orders[i]),
                left,
                right,
            )?;
        }
        Ok(())
    }
}

/// Mixed-radix index of an exponent vector, first generator most significant.
pub fn encode(orders: &[u32], e: &[u32]) -> usize {
    e.iter()
        .zip(orders)
        .fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize)
}

pub fn decode(orders: &[u32], mut id: usize) -> Exponents {
    let mut e = vec![0; orders.len()];
    for (slot, &m) in e.iter_mut().zip(orders).rev() {
        *slot = (id % m as usize) as u32;
        id /= m as usize;
    }
    e
}

/// Realizes a consistent presentation as an enumerated group.
///
/// Elements are the normal forms in lexicographic exponent order, so element
/// 0 is the empty word and the cyclic group `a^5 = 1` multiplies as addition
/// mod 5.
pub fn realize_pc(pres: &PcPresentation, order_limit: usize) -> Result<GroupTable> {
    let order = pres.order();
    if order > order_limit as u128 {
        return Err(Error::OrderLimit {
            order,
            limit: order_limit,
        });
    }
    let n = order as usize;
    let collector = Collector::new(pres);
    collector.check_consistency()?;
    let orders = pres.relative_orders();
    let k = orders.len();

    // right[x * k + i] = x * g_i
    let mut right = vec![0 as Elem; n * k];
    for x in 0..n {
        let base = decode(orders, x);
        for i in 0..k {
            let mut e = base.clone();
            collector.mul_letters(&mut e, &[i])?;
            right[x * k + i] = encode(orders, &e) as Elem;
        }
    }

    // Each y > 0 is y' * g_l where l is its last nonzero exponent.
    let mut mul = vec![0 as Elem; n * n];
    let mut last = vec![(0usize, 0usize); n];
    for (y, slot) in last.iter_mut().enumerate().skip(1) {
        let mut e = decode(orders, y);
        let l = (0..k).rev().find(|&g| e[g] > 0).expect("nonzero element");
        e[l] -= 1;
        *slot = (encode(orders, &e), l);
    }
    for x in 0..n {
        let row = &mut mul[x * n..(x + 1) * n];
        row[0] = x as Elem;
        for y in 1..n {
            let (prev, l) = last[y];
            row[y] = right[row[prev] as usize * k + l];
        }
    }

    let names = pres.names().to_vec();
    let generators: Vec<Elem> = (0..k)
        .map(|i| {
            let mut e = vec![0; k];
            e[i] = 1;
            encode(orders, &e) as Elem
        })
        .collect();
    let labels = (0..n)
        .map(|x| {
            let e = decode(orders, x);
            let w: Vec<(usize, u32)> = e
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(g, &v)| (g, v))
                .collect();
            pres.word_text(&w)
        })
        .collect();
    let table = GroupTable::from_parts(mul, generators, names, labels)?;
    table.validate()?;
    Ok(table)
}
