use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::presentation::PermGenerators;
use crate::group::table::GroupTable;
use crate::group::Elem;

/// Enumerates the group generated by permutations, breadth-first from the
/// identity. Products compose left to right: `(x*y)(p) = y(x(p))`.
pub fn realize_perm(p: &PermGenerators, order_limit: usize) -> Result<GroupTable> {
    let degree = p.degree();
    let identity: Vec<u16> = (0..degree as u16).collect();
    let gens: Vec<&Vec<u16>> = p.generators().iter().collect();

    let mut elements: Vec<Vec<u16>> = vec![identity.clone()];
    let mut index: HashMap<Vec<u16>, Elem> = HashMap::from([(identity, 0)]);
    // parent[y] = (x, s) with y = x * gens[s]
    let mut parent: Vec<(Elem, usize)> = vec![(0, usize::MAX)];
    let mut right: Vec<Vec<Elem>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (s, g) in gens.iter().enumerate() {
            let img: Vec<u16> = elements[head].iter().map(|&q| g[q as usize]).collect();
            let id = match index.get(&img) {
                Some(&id) => id,
                None => {
                    let id = elements.len() as Elem;
                    if elements.len() >= order_limit {
                        return Err(Error::OrderLimit {
                            order: order_limit as u128 + 1,
                            limit: order_limit,
                        });
                    }
                    index.insert(img.clone(), id);
                    elements.push(img);
                    parent.push((head as Elem, s));
                    id
                }
            };
            row.push(id);
        }
        right.push(row);
        head += 1;
    }

    let n = elements.len();
    let mut mul = vec![0 as Elem; n * n];
    for x in 0..n {
        let row = &mut mul[x * n..(x + 1) * n];
        row[0] = x as Elem;
        for y in 1..n {
            let (prev, s) = parent[y];
            row[y] = right[row[prev as usize] as usize][s];
        }
    }

    let mut generators = Vec::new();
    let mut names = Vec::new();
    for (s, g) in gens.iter().enumerate() {
        generators.push(index[*g]);
        names.push(format!("g{}", s + 1));
    }
    let labels = elements.iter().map(|e| cycle_string(e)).collect();
    let table = GroupTable::from_parts(mul, generators, names, labels)?;
    table.validate()?;
    Ok(table)
}

/// Cycle notation on 1-based points; the identity is `()`.
pub fn cycle_string(img: &[u16]) -> String {
    let mut seen = vec![false; img.len()];
    let mut out = String::new();
    for start in 0..img.len() {
        if seen[start] || img[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = img[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
