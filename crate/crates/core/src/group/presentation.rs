//! Textual group descriptions and their parser.
//!
//! A file holds one group. The optional header `[pc]` or `[perm]` selects the
//! body grammar; without a header the kind is inferred from the first
//! statement. Statements are separated by newlines or `;`, and `#` starts a
//! comment that runs to the end of the line.
//!
//! ```text
//! [pc]
//! gens: a,b,c,d
//! pow: a^3 = 1
//! pow: b^3 = 1
//! pow: c^3 = 1
//! pow: d^3 = 1
//! conj: b^a = b*c
//! conj: c^a = c*d
//! ```
//!
//! Conjugation relations that are not given are trivial.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A word over the generators: `(generator index, positive exponent)` pairs.
pub type Word = Vec<(usize, u32)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    names: Vec<String>,
    relative_orders: Vec<u32>,
    powers: Vec<Word>,
    /// `(j, i)` with `i < j` maps to the word for `g_j^{g_i}`.
    conjugates: BTreeMap<(usize, usize), Word>,
}

impl PcPresentation {
    /// Builds a presentation from parts, enforcing the later-generator rules.
    pub fn new(
        names: Vec<String>,
        relative_orders: Vec<u32>,
        powers: Vec<Word>,
        conjugates: BTreeMap<(usize, usize), Word>,
    ) -> Result<Self> {
        let k = names.len();
        if relative_orders.len() != k || powers.len() != k {
            return Err(Error::Syntax {
                line: 0,
                column: 0,
                message: "one relative order and power relation per generator".into(),
            });
        }
        let p = PcPresentation {
            names,
            relative_orders,
            powers,
            conjugates,
        };
        for i in 0..k {
            if p.relative_orders[i] < 2 {
                return Err(Error::RelativeOrder {
                    name: p.names[i].clone(),
                    order: p.relative_orders[i] as u64,
                });
            }
            if let Some(&(g, _)) = p.powers[i].iter().find(|&&(g, _)| g <= i) {
                return Err(Error::LaterGenerator {
                    relation: p.power_relation_text(i),
                    offending: p.names[g].clone(),
                });
            }
        }
        for (&(j, i), w) in &p.conjugates {
            if i >= j || j >= k {
                return Err(Error::LaterGenerator {
                    relation: p.conjugate_relation_text(j, i),
                    offending: p.names[i.min(k - 1)].clone(),
                });
            }
            if let Some(&(g, _)) = w.iter().find(|&&(g, _)| g < j) {
                return Err(Error::LaterGenerator {
                    relation: p.conjugate_relation_text(j, i),
                    offending: p.names[g].clone(),
                });
            }
        }
        Ok(p)
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relative_orders(&self) -> &[u32] {
        &self.relative_orders
    }

    /// Right-hand side of `g_i^{m_i}`.
    pub fn power(&self, i: usize) -> &Word {
        &self.powers[i]
    }

    /// Right-hand side of `g_j^{g_i}` if it was given explicitly.
    pub fn conjugate(&self, j: usize, i: usize) -> Option<&Word> {
        self.conjugates.get(&(j, i))
    }

    pub fn conjugates(&self) -> impl Iterator<Item = ((usize, usize), &Word)> {
        self.conjugates.iter().map(|(&k, w)| (k, w))
    }

    /// Product of the relative orders.
    pub fn order(&self) -> u128 {
        self.relative_orders.iter().map(|&m| m as u128).product()
    }

    pub fn word_text(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.names[g].clone()
                } else {
                    format!("{}^{}", self.names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    fn power_relation_text(&self, i: usize) -> String {
        format!(
            "{}^{} = {}",
            self.names[i],
            self.relative_orders[i],
            self.word_text(&self.powers[i])
        )
    }

    fn conjugate_relation_text(&self, j: usize, i: usize) -> String {
        let name = |x: usize| {
            self.names
                .get(x)
                .cloned()
                .unwrap_or_else(|| format!("#{x}"))
        };
        let rhs = self
            .conjugates
            .get(&(j, i))
            .map(|w| self.word_text(w))
            .unwrap_or_default();
        format!("{}^{} = {}", name(j), name(i), rhs)
    }
}

impl fmt::Display for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[pc]")?;
        writeln!(f, "gens: {}", self.names.join(","))?;
        for i in 0..self.names.len() {
            writeln!(f, "pow: {}", self.power_relation_text(i))?;
        }
        for &(j, i) in self.conjugates.keys() {
            writeln!(f, "conj: {}", self.conjugate_relation_text(j, i))?;
        }
        Ok(())
    }
}

/// Permutation generators on the points `1..=degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGenerators {
    degree: usize,
    /// Each generator as its image list on `0..degree`.
    generators: Vec<Vec<u16>>,
}

impl PermGenerators {
    pub fn new(degree: usize, generators: Vec<Vec<u16>>) -> Result<Self> {
        if degree == 0 || degree > u16::MAX as usize {
            return Err(Error::Permutation(format!("unsupported degree {degree}")));
        }
        for g in &generators {
            if g.len() != degree {
                return Err(Error::Permutation("image list has wrong length".into()));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                let x = x as usize;
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Permutation("not a bijection".into()));
                }
            }
        }
        Ok(PermGenerators { degree, generators })
    }

    /// Builds generators from 1-based cycle lists.
    pub fn from_cycles(degree: usize, generators: &[Vec<Vec<usize>>]) -> Result<Self> {
        let mut images = Vec::with_capacity(generators.len());
        for cycles in generators {
            images.push(cycles_to_images(degree, cycles)?);
        }
        PermGenerators::new(degree, images)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<u16>] {
        &self.generators
    }
}

fn cycles_to_images(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<u16>> {
    let mut img: Vec<u16> = (0..degree as u16).collect();
    let mut used = vec![false; degree];
    for cycle in cycles {
        for (pos, &pt) in cycle.iter().enumerate() {
            if pt == 0 || pt > degree {
                return Err(Error::Permutation(format!(
                    "point {pt} outside 1..={degree}"
                )));
            }
            if std::mem::replace(&mut used[pt - 1], true) {
                return Err(Error::Permutation(format!(
                    "point {pt} appears twice; cycles must be disjoint"
                )));
            }
            let next = cycle[(pos + 1) % cycle.len()];
            img[pt - 1] = (next - 1) as u16;
        }
    }
    Ok(img)
}

/// A parsed group description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Pc(PcPresentation),
    Perm(PermGenerators),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Pc,
    Perm,
}

struct Statement<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Statement<'_> {
    fn err(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column + offset,
            message: message.into(),
        }
    }
}

fn statements(text: &str) -> Vec<Statement<'_>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut start = 0;
        for piece in line.split(';') {
            let lead = piece.len() - piece.trim_start().len();
            let trimmed = piece.trim();
            if !trimmed.is_empty() {
                out.push(Statement {
                    line: ln + 1,
                    column: start + lead + 1,
                    text: trimmed,
                });
            }
            start += piece.len() + 1;
        }
    }
    out
}

/// Parses one group description.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let stmts = statements(text);
    let mut kind = None;
    let mut body = Vec::new();
    for s in stmts {
        match s.text {
            "[pc]" | "[perm]" => {
                if kind.is_some() || !body.is_empty() {
                    return Err(s.err(0, "header must appear once, before the body"));
                }
                kind = Some(if s.text == "[pc]" {
                    Kind::Pc
                } else {
                    Kind::Perm
                });
            }
            t if t.starts_with('[') => return Err(s.err(0, format!("unknown header `{t}`"))),
            _ => body.push(s),
        }
    }
    let kind = match kind {
        Some(k) => k,
        None => match body.first().map(|s| key_of(s.text)) {
            Some(Some("degree" | "gen")) => Kind::Perm,
            Some(Some("gens" | "pow" | "conj")) => Kind::Pc,
            Some(_) => return Err(body[0].err(0, "expected `[pc]` or `[perm]` header")),
            None => {
                return Err(Error::Syntax {
                    line: 1,
                    column: 1,
                    message: "empty group description".into(),
                })
            }
        },
    };
    match kind {
        Kind::Pc => parse_pc(&body).map(GroupSpec::Pc),
        Kind::Perm => parse_perm(&body).map(GroupSpec::Perm),
    }
}

fn key_of(text: &str) -> Option<&str> {
    text.split_once(':').map(|(k, _)| k.trim())
}

fn split_stmt<'a>(s: &Statement<'a>) -> Result<(&'a str, &'a str, usize)> {
    let (k, v) = s
        .text
        .split_once(':')
        .ok_or_else(|| s.err(0, "expected `key: value`"))?;
    let offset = k.len() + 1 + (v.len() - v.trim_start().len());
    Ok((k.trim(), v.trim(), offset))
}

fn is_ident(t: &str) -> bool {
    let mut chars = t.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_pc(body: &[Statement<'_>]) -> Result<PcPresentation> {
    let mut names: Option<Vec<String>> = None;
    let mut orders: Vec<Option<u32>> = Vec::new();
    let mut powers: Vec<Word> = Vec::new();
    let mut conj: BTreeMap<(usize, usize), Word> = BTreeMap::new();
    let mut last_line = 1;

    for s in body {
        last_line = s.line;
        let (key, value, off) = split_stmt(s)?;
        match key {
            "gens" => {
                if names.is_some() {
                    return Err(s.err(0, "`gens` given twice"));
                }
                let mut list = Vec::new();
                for name in value.split(',').map(str::trim) {
                    if !is_ident(name) {
                        return Err(s.err(off, format!("invalid generator name `{name}`")));
                    }
                    if list.iter().any(|n: &String| n == name) {
                        return Err(s.err(off, format!("duplicate generator `{name}`")));
                    }
                    list.push(name.to_string());
                }
                orders = vec![None; list.len()];
                powers = vec![Vec::new(); list.len()];
                names = Some(list);
            }
            "pow" | "conj" => {
                let names = names
                    .as_ref()
                    .ok_or_else(|| s.err(0, "`gens` must come before relations"))?;
                let (lhs, rhs) = value
                    .split_once('=')
                    .ok_or_else(|| s.err(off, "expected `lhs = rhs`"))?;
                let (base, exp) = lhs
                    .trim()
                    .split_once('^')
                    .ok_or_else(|| s.err(off, "left side must have the form `x^...`"))?;
                let (base, exp) = (base.trim(), exp.trim());
                let gi = lookup(names, base, s.line)?;
                let rhs_off = off + lhs.len() + 1;
                let word = parse_word(names, rhs.trim(), s, rhs_off)?;
                let rel_text = format!("{} = {}", lhs.trim(), rhs.trim());
                if key == "pow" {
                    let m: u64 = exp
                        .parse()
                        .map_err(|_| s.err(off, format!("invalid exponent `{exp}`")))?;
                    if m < 2 {
                        return Err(Error::RelativeOrder {
                            name: base.into(),
                            order: m,
                        });
                    }
                    let m = u32::try_from(m).map_err(|_| s.err(off, "exponent too large"))?;
                    if orders[gi].is_some() {
                        return Err(s.err(0, format!("second power relation for `{base}`")));
                    }
                    if let Some(&(g, _)) = word.iter().find(|&&(g, _)| g <= gi) {
                        return Err(Error::LaterGenerator {
                            relation: rel_text,
                            offending: names[g].clone(),
                        });
                    }
                    orders[gi] = Some(m);
                    powers[gi] = word;
                } else {
                    let by = lookup(names, exp, s.line)?;
                    if by >= gi {
                        return Err(Error::LaterGenerator {
                            relation: rel_text,
                            offending: names[gi].clone(),
                        });
                    }
                    if let Some(&(g, _)) = word.iter().find(|&&(g, _)| g < gi) {
                        return Err(Error::LaterGenerator {
                            relation: rel_text,
                            offending: names[g].clone(),
                        });
                    }
                    if conj.insert((gi, by), word).is_some() {
                        return Err(s.err(0, format!("second conjugation relation for `{lhs}`")));
                    }
                }
            }
            other => return Err(s.err(0, format!("unexpected key `{other}` in [pc] body"))),
        }
    }
    let names = names.ok_or(Error::Syntax {
        line: last_line,
        column: 1,
        message: "missing `gens` line".into(),
    })?;
    let mut rel = Vec::with_capacity(names.len());
    for (i, o) in orders.iter().enumerate() {
        match o {
            Some(m) => rel.push(*m),
            None => {
                return Err(Error::Syntax {
                    line: last_line,
                    column: 1,
                    message: format!("missing power relation for `{}`", names[i]),
                })
            }
        }
    }
    PcPresentation::new(names, rel, powers, conj)
}

fn lookup(names: &[String], name: &str, line: usize) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::UnknownGenerator {
            name: name.to_string(),
            line,
        })
}

fn parse_word(names: &[String], text: &str, s: &Statement<'_>, off: usize) -> Result<Word> {
    if text == "1" {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| s.err(off, format!("invalid exponent in `{factor}`")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        if !is_ident(name) {
            return Err(s.err(off, format!("invalid word factor `{factor}`")));
        }
        let g = lookup(names, name, s.line)?;
        if exp > 0 {
            word.push((g, exp));
        }
    }
    Ok(word)
}

fn parse_perm(body: &[Statement<'_>]) -> Result<PermGenerators> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Vec<Vec<usize>>> = Vec::new();
    for s in body {
        let (key, value, off) = split_stmt(s)?;
        match key {
            "degree" => {
                if degree.is_some() {
                    return Err(s.err(0, "`degree` given twice"));
                }
                let n: usize = value
                    .parse()
                    .map_err(|_| s.err(off, format!("invalid degree `{value}`")))?;
                if n == 0 {
                    return Err(s.err(off, "degree must be positive"));
                }
                degree = Some(n);
            }
            "gen" => {
                if degree.is_none() {
                    return Err(s.err(0, "`degree` must come before generators"));
                }
                gens.push(parse_cycles(value, s, off)?);
            }
            other => return Err(s.err(0, format!("unexpected key `{other}` in [perm] body"))),
        }
    }
    let degree = degree.ok_or(Error::Syntax {
        line: body.last().map_or(1, |s| s.line),
        column: 1,
        message: "missing `degree` line".into(),
    })?;
    PermGenerators::from_cycles(degree, &gens)
}

fn parse_cycles(text: &str, s: &Statement<'_>, off: usize) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text;
    let mut pos = off;
    loop {
        let trimmed = rest.trim_start();
        pos += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            break;
        }
        if !trimmed.starts_with('(') {
            return Err(s.err(pos, "expected `(`"));
        }
        let close = trimmed
            .find(')')
            .ok_or_else(|| s.err(pos, "unterminated cycle"))?;
        let inner = &trimmed[1..close];
        let mut cycle = Vec::new();
        for tok in inner.split_whitespace() {
            let pt: usize = tok
                .parse()
                .map_err(|_| s.err(pos, format!("invalid point `{tok}`")))?;
            cycle.push(pt);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        pos += close + 1;
        rest = &trimmed[close + 1..];
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    const G81_7: &str = "[pc]
gens: a,b,c,d
pow: a^3 = 1
pow: b^3 = 1
pow: c^3 = 1
pow: d^3 = 1
conj: b^a = b*c
conj: c^a = c*d
";

    #[test]
    fn parses_order_81_presentation() {
        let GroupSpec::Pc(p) = parse_group_spec(G81_7).unwrap() else {
            panic!("expected pc")
        };
        assert_eq!(p.names(), ["a", "b", "c", "d"]);
        assert_eq!(p.relative_orders(), [3, 3, 3, 3]);
        assert_eq!(p.conjugates().count(), 2);
        assert_eq!(p.conjugate(1, 0), Some(&vec![(1, 1), (2, 1)]));
        assert_eq!(p.order(), 81);
    }

    #[test]
    fn relative_order_below_two() {
        let err = parse_group_spec("gens: a; pow: a^1 = 1").unwrap_err();
        assert!(
            matches!(err, Error::RelativeOrder { order: 1, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn perm_block() {
        let GroupSpec::Perm(p) =
            parse_group_spec("[perm]\ndegree: 5; gen: (1 2 3 4 5); gen: (1 2)").unwrap()
        else {
            panic!("expected perm")
        };
        assert_eq!(p.degree(), 5);
        assert_eq!(p.generators().len(), 2);
        assert_eq!(p.generators()[0], vec![1, 2, 3, 4, 0]);
    }

    #[test]
    fn header_inferred_for_perm() {
        assert!(matches!(
            parse_group_spec("degree: 3\ngen: (1 2 3)").unwrap(),
            GroupSpec::Perm(_)
        ));
    }

    #[test]
    fn unknown_generator() {
        let err = parse_group_spec("[pc]\ngens: a,b\npow: a^2 = 1\npow: b^2 = x").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownGenerator {
                name: "x".into(),
                line: 4
            }
        );
    }

    #[test]
    fn power_must_use_later_generators() {
        let err = parse_group_spec("[pc]\ngens: a,b\npow: a^2 = 1\npow: b^2 = a").unwrap_err();
        assert!(matches!(err, Error::LaterGenerator { .. }), "{err:?}");
        let err = parse_group_spec("[pc]\ngens: a,b\npow: a^2 = a\npow: b^2 = 1").unwrap_err();
        assert!(matches!(err, Error::LaterGenerator { .. }), "{err:?}");
    }

    #[test]
    fn conjugate_rhs_must_not_use_earlier_generators() {
        let src = "[pc]\ngens: a,b,c\npow: a^2 = 1\npow: b^2 = 1\npow: c^2 = 1\nconj: c^b = a*c";
        assert!(matches!(
            parse_group_spec(src).unwrap_err(),
            Error::LaterGenerator { .. }
        ));
        let src = "[pc]\ngens: a,b\npow: a^2 = 1\npow: b^2 = 1\nconj: a^b = a";
        assert!(matches!(
            parse_group_spec(src).unwrap_err(),
            Error::LaterGenerator { .. }
        ));
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_group_spec("[pc]\ngens: a\npow a^2 = 1").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 3,
                column: 1,
                message: "expected `key: value`".into()
            }
        );
        let err = parse_group_spec("[perm]\ndegree: 3\ngen: (1 2) 3").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Syntax {
                    line: 3,
                    column: 12,
                    ..
                }
            ),
            "{err:?}"
        );
    }

    #[test]
    fn comments_and_missing_power() {
        let err = parse_group_spec("# c\n[pc]\ngens: a,b # two\npow: a^2 = 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { ref message, .. } if message.contains("`b`")));
    }

    #[test]
    fn non_disjoint_cycles_rejected() {
        assert!(matches!(
            parse_group_spec("[perm]\ndegree: 4\ngen: (1 2)(2 3)").unwrap_err(),
            Error::Permutation(_)
        ));
    }

    #[test]
    fn display_round_trips() {
        let GroupSpec::Pc(p) = parse_group_spec(G81_7).unwrap() else {
            unreachable!()
        };
        let again = parse_group_spec(&p.to_string()).unwrap();
        assert_eq!(again, GroupSpec::Pc(p));
    }
}
