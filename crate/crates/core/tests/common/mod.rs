#![allow(dead_code)]

pub mod lemmas;

use std::collections::BTreeSet;

use proptest::prelude::*;
use vanishoff::group::{
    parse_group_spec, realize, Elem, GroupTable, Subgroup, DEFAULT_ORDER_LIMIT,
};
use vanishoff::harness::corpus;

pub fn build(source: &str) -> GroupTable {
    let spec = parse_group_spec(source).unwrap_or_else(|e| panic!("{e}\n{source}"));
    realize(&spec, DEFAULT_ORDER_LIMIT).unwrap_or_else(|e| panic!("{e}\n{source}"))
}

fn perm(degree: usize, gens: &[&str]) -> String {
    let mut s = format!("[perm]\ndegree: {degree}\n");
    for g in gens {
        s += &format!("gen: {g}\n");
    }
    s
}

/// Small groups outside the corpus: dihedral, dicyclic, generalized
/// quaternion, Frobenius, modular and a few direct products.
pub fn families() -> Vec<(String, String)> {
    let mut out = Vec::new();
    let perms: &[(&str, usize, &[&str])] = &[
        ("D10", 5, &["(1 2 3 4 5)", "(2 5)(3 4)"]),
        ("D12", 6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"]),
        ("D14", 7, &["(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"]),
        ("A4", 4, &["(1 2 3)", "(1 2)(3 4)"]),
        ("S4", 4, &["(1 2 3 4)", "(1 2)"]),
        ("7:3", 7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
        ("5:4", 5, &["(1 2 3 4 5)", "(2 3 5 4)"]),
        ("S3xS3", 6, &["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"]),
        ("S3xC3", 6, &["(1 2 3)", "(1 2)", "(4 5 6)"]),
        ("A4xC3", 7, &["(1 2 3)", "(1 2)(3 4)", "(5 6 7)"]),
        ("S4xC2", 6, &["(1 2 3 4)", "(1 2)", "(5 6)"]),
        ("D8xC2", 6, &["(1 2 3 4)", "(1 3)", "(5 6)"]),
    ];
    for (name, degree, gens) in perms {
        out.push((name.to_string(), perm(*degree, gens)));
    }
    out.push((
        "Dic3".into(),
        "[pc]\ngens: a,c,b\npow: a^2 = c\npow: c^2 = 1\npow: b^3 = 1\nconj: b^a = b^2\n".into(),
    ));
    out.push((
        "Q16".into(),
        "[pc]\ngens: a,b,c,d\npow: a^2 = d\npow: b^2 = c\npow: c^2 = d\npow: d^2 = 1\n\
         conj: b^a = b*c*d\nconj: c^a = c*d\n"
            .into(),
    ));
    out.push((
        "M16".into(),
        "[pc]\ngens: a,b,c,d\npow: a^2 = 1\npow: b^2 = c\npow: c^2 = d\npow: d^2 = 1\nconj: b^a = b*d\n".into(),
    ));
    out.push((
        "Heis5".into(),
        "[pc]\ngens: a,b,c\npow: a^5 = 1\npow: b^5 = 1\npow: c^5 = 1\nconj: b^a = b*c\n".into(),
    ));
    out
}

/// Corpus groups up to `max_order` together with [`families`] up to the
/// same bound.
pub fn groups_up_to(max_order: usize) -> Vec<(String, GroupTable)> {
    let sources = corpus()
        .into_iter()
        .map(|e| (e.name, e.source))
        .chain(families());
    let mut out = Vec::new();
    for (name, src) in sources {
        let spec = parse_group_spec(&src).unwrap();
        if let Ok(g) = realize(&spec, max_order) {
            out.push((name, g));
        }
    }
    out
}

pub fn nonabelian_up_to(max_order: usize) -> Vec<(String, GroupTable)> {
    groups_up_to(max_order)
        .into_iter()
        .filter(|(_, g)| !g.is_abelian())
        .collect()
}

/// A random polycyclic presentation of a `p`-group whose tails are drawn
/// from later generators. Not every draw is consistent.
#[derive(Debug, Clone)]
pub struct RandomPc {
    pub p: u32,
    pub rank: usize,
    pub powers: Vec<Vec<u32>>,
    pub conjugates: Vec<Vec<u32>>,
}

fn tail(names: &[String], from: usize, exps: &[u32]) -> String {
    let letters: Vec<String> = exps
        .iter()
        .enumerate()
        .skip(from)
        .filter(|&(_, &e)| e > 0)
        .map(|(k, &e)| {
            if e == 1 {
                names[k].clone()
            } else {
                format!("{}^{e}", names[k])
            }
        })
        .collect();
    letters.join("*")
}

impl RandomPc {
    pub fn source(&self) -> String {
        let names: Vec<String> = (0..self.rank)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        let mut s = format!("[pc]\ngens: {}\n", names.join(","));
        for i in 0..self.rank {
            let t = tail(&names, i + 1, &self.powers[i]);
            let rhs = if t.is_empty() { "1".to_string() } else { t };
            s += &format!("pow: {}^{} = {rhs}\n", names[i], self.p);
        }
        let mut k = 0;
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let t = tail(&names, j + 1, &self.conjugates[k]);
                k += 1;
                if !t.is_empty() {
                    s += &format!("conj: {}^{} = {}*{t}\n", names[j], names[i], names[j]);
                }
            }
        }
        s
    }

    /// The realized group, or `None` for an inconsistent draw.
    pub fn group(&self) -> Option<GroupTable> {
        let spec = parse_group_spec(&self.source()).ok()?;
        realize(&spec, DEFAULT_ORDER_LIMIT).ok()
    }
}

/// Random `p`-group presentations with `p ∈ {2, 3}` and order at most
/// `max_order`.
pub fn random_pc(max_order: usize) -> impl Strategy<Value = RandomPc> {
    prop_oneof![Just(2u32), Just(3u32)]
        .prop_flat_map(move |p| {
            let mut max_rank = 0usize;
            while (p as usize).pow(max_rank as u32 + 1) <= max_order {
                max_rank += 1;
            }
            (Just(p), 3usize..=max_rank)
        })
        .prop_flat_map(|(p, rank)| {
            let pairs = rank * (rank - 1) / 2;
            (
                Just(p),
                Just(rank),
                prop::collection::vec(prop::collection::vec(0..p, rank), rank),
                prop::collection::vec(prop::collection::vec(0..p, rank), pairs),
            )
        })
        .prop_map(|(p, rank, powers, conjugates)| RandomPc {
            p,
            rank,
            powers,
            conjugates,
        })
}

pub fn conjugacy_class(g: &GroupTable, x: Elem) -> BTreeSet<Elem> {
    g.elements().map(|y| g.conj(x, y)).collect()
}

pub fn coset(g: &GroupTable, x: Elem, n: &Subgroup) -> BTreeSet<Elem> {
    n.elements().into_iter().map(|m| g.mul(x, m)).collect()
}

/// Camina test straight from the definition: the class of `x` is `xG'`.
pub fn is_camina(g: &GroupTable, derived: &Subgroup, x: Elem) -> bool {
    conjugacy_class(g, x) == coset(g, x, derived)
}

/// `V(G)` as the subgroup generated by the non-Camina elements.
pub fn brute_v(g: &GroupTable, derived: &Subgroup) -> Subgroup {
    Subgroup::generated(g, g.elements().filter(|&x| !is_camina(g, derived, x)))
}

/// `[A, B]` generated by every commutator of a member of `A` with a member
/// of `B`.
pub fn brute_commutator(g: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let bs = b.elements();
    Subgroup::generated(
        g,
        a.elements()
            .into_iter()
            .flat_map(|x| bs.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.commutator(x, y)),
    )
}
