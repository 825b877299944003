use std::fmt;

use serde::{Deserialize, Serialize};

/// Names a subgroup computed by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Term {
    Whole,
    Trivial,
    /// `V_i(G)`, counted from 1.
    V(usize),
    /// `G_i`, the lower central series, counted from 1.
    Lower(usize),
    /// `Z_i`, the upper central series; `Z_0 = 1`.
    Upper(usize),
    Derived,
    Center,
    /// `C/V_3 = C_{G/V_3}(G'/V_3)`.
    C,
    /// `C_G(G')`.
    CentralizerOfDerived,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Whole => write!(f, "G"),
            Term::Trivial => write!(f, "1"),
            Term::V(i) => write!(f, "V_{i}"),
            Term::Lower(i) => write!(f, "G_{i}"),
            Term::Upper(i) => write!(f, "Z_{i}"),
            Term::Derived => write!(f, "G'"),
            Term::Center => write!(f, "Z(G)"),
            Term::C => write!(f, "C"),
            Term::CentralizerOfDerived => write!(f, "C_G(G')"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    CaminaGroup,
    GeneralizedCaminaGroup,
    VzGroup,
    VCyclic,
}

/// One expected fact about a corpus group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expect {
    Order(usize),
    /// The term equals the subgroup generated by these words.
    Generated(Term, Vec<String>),
    Same(Term, Term),
    /// `[outer : inner]`.
    Index(Term, Term, usize),
    Height(usize),
    NilpotenceClass(usize),
    CharacterDegrees(Vec<u64>),
    CaminaElement {
        word: String,
        in_v: Option<bool>,
    },
    Flag(Flag, bool),
}

impl Expect {
    /// Short field name used in diffs.
    pub fn field(&self) -> String {
        match self {
            Expect::Order(_) => "order".into(),
            Expect::Generated(t, _) => t.to_string(),
            Expect::Same(a, b) => format!("{a} = {b}"),
            Expect::Index(a, b, _) => format!("[{a}:{b}]"),
            Expect::Height(_) => "height".into(),
            Expect::NilpotenceClass(_) => "nilpotence class".into(),
            Expect::CharacterDegrees(_) => "cd".into(),
            Expect::CaminaElement { word, .. } => format!("camina {word}"),
            Expect::Flag(flag, _) => format!("{flag:?}"),
        }
    }
}

/// Where a golden value comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Stated in the published example; the string quotes the claim.
    Published(String),
    /// Worked out by hand or by an independent brute-force check.
    Derived(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Golden {
    pub expect: Expect,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub source: String,
    pub expected: Vec<Golden>,
    pub note: Option<String>,
}

impl CorpusEntry {
    fn new(name: &str, source: impl Into<String>) -> Self {
        CorpusEntry {
            name: name.into(),
            source: source.into(),
            expected: Vec::new(),
            note: None,
        }
    }

    fn published(mut self, claim: &str, expect: Expect) -> Self {
        self.expected.push(Golden {
            expect,
            provenance: Provenance::Published(claim.into()),
        });
        self
    }

    fn derived(mut self, why: &str, expect: Expect) -> Self {
        self.expected.push(Golden {
            expect,
            provenance: Provenance::Derived(why.into()),
        });
        self
    }

    fn note(mut self, note: &str) -> Self {
        self.note = Some(note.into());
        self
    }
}

fn gen(term: Term, words: &[&str]) -> Expect {
    Expect::Generated(term, words.iter().map(|w| w.to_string()).collect())
}

fn camina(word: &str, in_v: Option<bool>) -> Expect {
    Expect::CaminaElement {
        word: word.into(),
        in_v,
    }
}

const G64_73: &str = "\
[pc]
# SmallGroup(64,73)
gens: a,b,c,d,e,f
pow: a^2 = 1
pow: b^2 = 1
pow: c^2 = 1
pow: d^2 = 1
pow: e^2 = 1
pow: f^2 = 1
conj: b^a = b*d
conj: c^a = c*e
conj: c^b = c*f
";

const G64_8: &str = "\
[pc]
# SmallGroup(64,8)
gens: a,b,c,d,e,f
pow: a^2 = d
pow: b^2 = 1
pow: c^2 = f
pow: d^2 = 1
pow: e^2 = 1
pow: f^2 = 1
conj: b^a = b*c
conj: c^a = c*e
conj: c^b = c*f
conj: d^b = d*e*f
";

const G81_7: &str = "\
[pc]
# SmallGroup(81,7)
gens: a,b,c,d
pow: a^3 = 1
pow: b^3 = 1
pow: c^3 = 1
pow: d^3 = 1
conj: b^a = b*c
conj: c^a = c*d
";

const G256: &str = "\
[pc]
# SmallGroup(256,16349)
# The published relation c^2 = d*e makes the presentation inconsistent;
# c^2 = e*f is the one-letter repair that keeps every published property.
gens: a,b,c,d,e,f,g,h
pow: a^2 = g
pow: b^2 = 1
pow: c^2 = e*f
pow: d^2 = e
pow: e^2 = 1
pow: f^2 = h
pow: g^2 = 1
pow: h^2 = 1
conj: b^a = b*e
conj: c^a = c*f
conj: c^b = c*e*f
conj: d^a = d*e*f
conj: d^b = d*e
conj: e^a = e*h
conj: f^b = f*h
conj: g^b = g*h
conj: g^c = g*h
";

const G32_6: &str = "\
[pc]
# SmallGroup(32,6)
gens: a,b,c,d,e
pow: a^2 = d
pow: b^2 = 1
pow: c^2 = 1
pow: d^2 = 1
pow: e^2 = 1
conj: b^a = b*c
conj: c^a = c*e
conj: d^b = d*e
";

const G128_36: &str = "\
[pc]
# SmallGroup(128,36)
gens: a,b,c,d,e,f,g
pow: a^2 = d
pow: b^2 = e
pow: c^2 = 1
pow: d^2 = 1
pow: e^2 = 1
pow: f^2 = 1
pow: g^2 = 1
conj: b^a = b*c
conj: c^a = c*f
conj: c^b = c*g
conj: d^b = d*f
conj: e^a = e*g
";

const G128_854: &str = "\
[pc]
# SmallGroup(128,854)
gens: a,b,c,d,e,f,g
pow: a^2 = e
pow: b^2 = 1
pow: c^2 = g
pow: d^2 = 1
pow: e^2 = 1
pow: f^2 = 1
pow: g^2 = 1
conj: b^a = b*d
conj: c^b = c*g
conj: d^a = d*f
conj: e^b = e*f
conj: e^d = e*g
conj: f^a = f*g
";

const G2187: &str = "\
[pc]
# SmallGroup(3^7,194)
gens: a,b,c,d,e,f,g
pow: a^3 = d
pow: b^3 = c
pow: c^3 = e
pow: d^3 = f
pow: e^3 = g
pow: f^3 = 1
pow: g^3 = 1
conj: b^a = b*c
conj: c^a = c*e
conj: d^b = d*e^2
conj: d^c = d*g^2
conj: e^a = e*g
conj: f^b = f*g^2
";

const D8: &str = "\
[pc]
# dihedral group of order 8
gens: a,b,c
pow: a^2 = 1
pow: b^2 = c
pow: c^2 = 1
conj: b^a = b*c
";

const Q8: &str = "\
[pc]
# quaternion group of order 8
gens: a,b,c
pow: a^2 = c
pow: b^2 = c
pow: c^2 = 1
conj: b^a = b*c
";

const S3: &str = "\
[perm]
# symmetric group on 3 points
degree: 3
gen: (1 2 3)
gen: (1 2)
";

const A5: &str = "\
[perm]
# alternating group on 5 points
degree: 5
gen: (1 2 3 4 5)
gen: (1 2 3)
";

const EXTRASPECIAL27: &str = "\
[pc]
# extraspecial group of order 27 and exponent 3
gens: a,b,c
pow: a^3 = 1
pow: b^3 = 1
pow: c^3 = 1
conj: b^a = b*c
";

const D8_X_D8: &str = "\
[pc]
# direct product of two dihedral groups of order 8
gens: a,b,c,d,e,f
pow: a^2 = 1
pow: b^2 = c
pow: c^2 = 1
pow: d^2 = 1
pow: e^2 = f
pow: f^2 = 1
conj: b^a = b*c
conj: e^d = e*f
";

/// Dihedral group of order `2^n`: a reflection `a` and a rotation `b` of
/// order `2^(n-1)` written through its successive squares.
pub fn dihedral_source(n: u32) -> String {
    assert!(n >= 2);
    let rotations: Vec<String> = (0..n - 1)
        .map(|i| ((b'b' + i as u8) as char).to_string())
        .collect();
    let mut s = format!("[pc]\n# dihedral group of order {}\n", 1u64 << n);
    s += &format!("gens: a,{}\n", rotations.join(","));
    s += "pow: a^2 = 1\n";
    for (i, r) in rotations.iter().enumerate() {
        match rotations.get(i + 1) {
            Some(next) => s += &format!("pow: {r}^2 = {next}\n"),
            None => s += &format!("pow: {r}^2 = 1\n"),
        }
    }
    // a inverts every rotation: r^a = r^-1 = r * r^2 * r^4 * ...
    for (i, r) in rotations.iter().enumerate() {
        if i + 1 < rotations.len() {
            s += &format!("conj: {r}^a = {}\n", rotations[i..].join("*"));
        }
    }
    s
}

/// The shipped example corpus with its golden data.
pub fn corpus() -> Vec<CorpusEntry> {
    use Term::*;
    let mut out = vec![
        CorpusEntry::new("SmallGroup(64,73)", G64_73)
            .derived("product of the relative orders", Expect::Order(64))
            .published("We computed that V(G) = G", Expect::Same(V(1), Whole))
            .published(
                "the character degrees of G which were {1, 2}",
                Expect::CharacterDegrees(vec![1, 2]),
            ),
        CorpusEntry::new("SmallGroup(64,8)", G64_8)
            .derived("product of the relative orders", Expect::Order(64))
            .published("we have G = V(G)", Expect::Same(V(1), Whole))
            .published("b and bd are Camina elements of G", camina("b", None))
            .published("b and bd are Camina elements of G", camina("b*d", None)),
    ];
    for n in 4..=6u32 {
        let order = 1usize << n;
        out.push(
            CorpusEntry::new(&format!("D{order}"), dihedral_source(n))
                .derived("product of the relative orders", Expect::Order(order))
                .published(
                    "V(G) is the cyclic subgroup of order 2^(n-1)",
                    Expect::Flag(Flag::VCyclic, true),
                )
                .published(
                    "which of course has index 2 in G",
                    Expect::Index(Whole, V(1), 2),
                )
                .derived(
                    "the rotation b generates the cyclic subgroup of order 2^(n-1)",
                    gen(V(1), &["b"]),
                ),
        );
    }
    out.extend([
        CorpusEntry::new("SmallGroup(81,7)", G81_7)
            .derived("product of the relative orders", Expect::Order(81))
            .published("V(G) = <b, c, d> which has index 3", gen(V(1), &["b", "c", "d"]))
            .published("V(G) = <b, c, d> which has index 3", Expect::Index(Whole, V(1), 3)),
        CorpusEntry::new("SmallGroup(256,16349)", G256)
            .note("relation c^2 = d*e replaced by c^2 = e*f; the published presentation fails the overlap check at c^2*a")
            .derived("product of the relative orders", Expect::Order(256))
            .published("V(G) = <d, e, f, g, h>", gen(V(1), &["d", "e", "f", "g", "h"]))
            .published("so [G:V(G)] = 8", Expect::Index(Whole, V(1), 8))
            .published("We identify dg as a Camina element for G and dg in V(G)", camina("d*g", Some(true))),
        CorpusEntry::new("SmallGroup(32,6)", G32_6)
            .derived("product of the relative orders", Expect::Order(32))
            .published("V(G) = <c, d, e>", gen(V(1), &["c", "d", "e"]))
            .published("so V(G) has index 4", Expect::Index(Whole, V(1), 4))
            .published("G' = <c, e>", gen(Derived, &["c", "e"]))
            .published("V_2(G) = <e>", gen(V(2), &["e"]))
            .published("[G':V_2(G)] = 2", Expect::Index(Derived, V(2), 2))
            .published("G_3 = <e>", gen(Lower(3), &["e"]))
            .published("V_3(G) = 1", gen(V(3), &[]))
            .published("G has vanishing height 3", Expect::Height(3)),
        CorpusEntry::new("SmallGroup(128,36)", G128_36)
            .derived("product of the relative orders", Expect::Order(128))
            .published("V(G) = <c,d,e,f,g> = C_G(G') = C", gen(V(1), &["c", "d", "e", "f", "g"]))
            .published("V(G) = <c,d,e,f,g> = C_G(G') = C", Expect::Same(V(1), CentralizerOfDerived))
            .published("V(G) = <c,d,e,f,g> = C_G(G') = C", Expect::Same(V(1), C))
            .published("G' = <c, f, g>", gen(Derived, &["c", "f", "g"]))
            .published("V_2(G) = <f, g>", gen(V(2), &["f", "g"]))
            .published("G_3 = <f, g>", gen(Lower(3), &["f", "g"]))
            .published("V_3(G) = 1", gen(V(3), &[]))
            .published("[G:V(G)] = [G_3:V_3(G)] = 4", Expect::Index(Whole, V(1), 4))
            .published("[G:V(G)] = [G_3:V_3(G)] = 4", Expect::Index(Lower(3), V(3), 4))
            .published("but [G':V_2(G)] = 2", Expect::Index(Derived, V(2), 2)),
        CorpusEntry::new("SmallGroup(128,854)", G128_854)
            .derived("product of the relative orders", Expect::Order(128))
            .published("G_4 = <g>", gen(Lower(4), &["g"]))
            .published("V_4(G) = 1", gen(V(4), &[]))
            .published("G has nilpotence class 4", Expect::NilpotenceClass(4))
            .published("so G has vanishing height 4", Expect::Height(4))
            .published("V(G) = Z_3(G) = <c,d,e,f,g>", gen(V(1), &["c", "d", "e", "f", "g"]))
            .published("V(G) = Z_3(G) = <c,d,e,f,g>", Expect::Same(V(1), Upper(3))),
        CorpusEntry::new("SmallGroup(3^7,194)", G2187)
            .derived("product of the relative orders", Expect::Order(2187))
            .published("nilpotence class and vanishing height 4", Expect::NilpotenceClass(4))
            .published("nilpotence class and vanishing height 4", Expect::Height(4))
            .published("Z_3(G) = V(G)", gen(V(1), &["c", "d", "e", "f", "g"]))
            .published("Z_3(G) = V(G)", Expect::Same(V(1), Upper(3))),
        CorpusEntry::new("D8", D8)
            .derived("product of the relative orders", Expect::Order(8))
            .derived("extraspecial groups are Camina groups, so V(G) = G' = Z(G) = <c>", gen(V(1), &["c"]))
            .derived("extraspecial groups are Camina groups, so V(G) = G' = Z(G) = <c>", Expect::Same(V(1), Center))
            .derived("V(G) = G'", Expect::Flag(Flag::CaminaGroup, true))
            .derived("V(G) = Z(G)", Expect::Flag(Flag::VzGroup, true))
            .derived("V_2 = [G', G] = 1 < G' = G_2 and V_3 = G_3 = 1", Expect::Height(2)),
        CorpusEntry::new("Q8", Q8)
            .derived("product of the relative orders", Expect::Order(8))
            .derived("extraspecial groups are Camina groups, so V(G) = G' = Z(G) = <c>", gen(V(1), &["c"]))
            .derived("V(G) = G'", Expect::Flag(Flag::CaminaGroup, true))
            .derived("V(G) = Z(G)", Expect::Flag(Flag::VzGroup, true))
            .derived("V(G) = Z(G) G'", Expect::Flag(Flag::GeneralizedCaminaGroup, true))
            .derived("V_2 = [G', G] = 1 < G' = G_2 and V_3 = G_3 = 1", Expect::Height(2)),
        CorpusEntry::new("S3", S3)
            .derived("3! elements", Expect::Order(6))
            .derived("the degree-2 character vanishes exactly on the transpositions", Expect::Index(Whole, V(1), 2))
            .derived("V(G) = A3 = G'", Expect::Same(V(1), Derived))
            .derived("V_1 = A3 < S3 and V_2 = [A3, S3] = A3 = G_2", Expect::Height(1)),
        CorpusEntry::new("A5", A5)
            .derived("5!/2 elements", Expect::Order(60))
            .published("G = V(G) when G is nonsolvable", Expect::Same(V(1), Whole))
            .derived("V(G) = G gives equality at every level", Expect::Height(0)),
        CorpusEntry::new("ExtraspecialGroup(27)", EXTRASPECIAL27)
            .derived("product of the relative orders", Expect::Order(27))
            .derived("extraspecial groups are Camina groups, so V(G) = G' = <c>", gen(V(1), &["c"]))
            .derived("V(G) = G'", Expect::Flag(Flag::CaminaGroup, true))
            .derived("degrees 1 (nine times) and 3 (twice)", Expect::CharacterDegrees(vec![1, 3])),
        CorpusEntry::new("D8xD8", D8_X_D8)
            .derived("product of the relative orders", Expect::Order(64))
            .published("G = A x B with A and B dihedral of order 8, then G = V(G)", Expect::Same(V(1), Whole))
            .derived("degrees are products of {1, 2} with {1, 2}", Expect::CharacterDegrees(vec![1, 2, 4])),
    ]);
    out
}

/// Looks up a corpus entry by its exact name.
pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}
