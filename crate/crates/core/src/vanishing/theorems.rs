use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chartab::CharacterTable;
use crate::group::{GroupTable, Subgroup};
use crate::structure::{
    center, conjugacy_classes, derived_series, derived_subgroup, lower_central_series,
    mutual_commutator, nilpotence_class, prime_power_base, quotient, subgroup_as_group,
    ClassPartition,
};
use crate::vanishing::{
    camina_elements, gcp_family, is_gcp, normal_subgroups, v_series, vanishing_off, Context,
    VanishingProfile,
};

/// Groups above this order skip the checks that enumerate normal subgroups
/// or every overgroup of `V(G)`.
pub const ENUMERATION_CAP: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clause {
    pub id: String,
    pub statement: String,
    /// Whether the hypothesis of the clause held for this group.
    pub applicable: bool,
    pub verdict: Verdict,
    pub witness: Value,
}

/// A computed quantity that is recorded but never asserted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    pub id: String,
    pub statement: String,
    pub value: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub clauses: Vec<Clause>,
    pub observations: Vec<Observation>,
}

impl TheoremReport {
    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

impl Clause {
    fn checked(id: &str, statement: &str, ok: bool, witness: Value) -> Clause {
        Clause {
            id: id.into(),
            statement: statement.into(),
            applicable: true,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness,
        }
    }

    fn inapplicable(id: &str, statement: &str, reason: &str) -> Clause {
        Clause {
            id: id.into(),
            statement: statement.into(),
            applicable: false,
            verdict: Verdict::NotApplicable,
            witness: json!({ "reason": reason }),
        }
    }

    /// Hypothesis holds but the data needed to decide is unavailable.
    fn undecided(id: &str, statement: &str, reason: &str) -> Clause {
        Clause {
            applicable: true,
            ..Clause::inapplicable(id, statement, reason)
        }
    }
}

fn sub(g: &GroupTable, h: &Subgroup) -> Value {
    json!({
        "order": h.order(),
        "generators": h.generators(),
        "words": h.generator_labels(g),
    })
}

fn is_square(n: usize) -> bool {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1).any(|s| s * s == n)
}

/// Whether `x` conjugates onto every element of `x H`, i.e. `{[x, y]} ⊇ H`.
fn commutators_cover(g: &GroupTable, x: u32, h: &Subgroup) -> bool {
    let mut hit = crate::set::ElementSet::new(g.order());
    for y in g.elements() {
        hit.insert(g.commutator(x, y));
    }
    h.elements().into_iter().all(|z| hit.contains(z))
}

const QUOTIENT_STRUCTURE: &str =
    "G nonabelian and solvable implies G/V(G) is cyclic or an elementary abelian p-group";
const SANDWICH: &str = "G_{i+1} <= V_i <= G_i for every i";
const MONOTONE: &str = "V_n < G_n implies V_i < G_i for all i <= n";
const SERIES_QUOTIENT: &str =
    "V_n < G_n implies G/V_n has class n and V_i(G/V_n) = V_i/V_n for i <= n";
const ELEMENTARY: &str =
    "V_2 < G_2 implies every G_i/V_i is an elementary abelian p-group for one prime p";
const PARAMETERS: &str = "V_2 < G_2 implies [G:V_1] = p^(2n) and [G':V_2] = p^m with 1 <= m <= n";
const DEGREES: &str = "V_2 < G_2 implies cd(G/V_2) = {1, p^n}";
const QUOTIENT_VZ: &str = "V_2 < G_2 implies G/V_2 is a VZ-group with V(G/V_2) = V_1/V_2";
const INDEX_SQUARE: &str = "V_3 < G_3 implies [G:V_1] = [G':V_2]^2";
const INTERSECTION_V2: &str = "V_3 < G_3 implies V_2 = Z ∩ G'";
const CENTRALIZER_INDEX: &str = "V_3 < G_3 implies [G:C] = [G':V_2] or C = V_1";
const CENTRALIZER_VANISHING: &str =
    "V_3 < G_3 implies an inclusion between V_1 and V(C); both directions are reported";
const CENTRALIZER_DERIVED: &str =
    "V_3 < G_3 and V_1 < C imply C' = V_2, C/V_3 has class 2, and (C, V_1) is a GCP";
const CENTRALIZER_VZ: &str =
    "V_3 < G_3, V_1 < C and [V_1, C] < V_2 imply [G:C] is a square and C/[V_1, C] is a VZ-group";
const CENTER_BOUND: &str = "G nilpotent of class c implies Z_{c-1} <= V(G)";
const UPPER_STEP: &str = "G' not contained in Z_m implies Z_{m+1} <= V(G)";
const HYPERCENTER: &str = "G not nilpotent implies Z_inf <= V(G)";
const GCP_V: &str = "(G, V(G)) is a generalized Camina pair";
const DERIVED_IN_V: &str = "G' <= V(G)";
const CENTER_IN_V: &str = "Z(G) <= V(G)";
const PRODUCT: &str = "V(G) is the product of V(χ) over nonlinear χ";
const VANISH_OFF: &str = "every nonlinear χ vanishes on G \\ V(G)";
const INDEX_DIVIDES: &str = "[G:V(G)] divides χ(1)^2 for every nonlinear χ";
const EQUIVALENCE: &str = "class(g) = gG', |C_G(g)| = [G:G'], {[g,y]} = G' and χ(g) = 0 for nonlinear χ agree for every g";
const SURJECTIVE: &str = "for g outside V(G) every z in G' is a commutator [g,y]";
const ABOVE_V: &str = "V(G) < M implies [G,M] = G'";
const QUOTIENT_CONTAINMENT: &str = "G/N nonabelian implies N <= V(G) and V(G/N) <= V(G)/N";
const GCP_INTERSECTION: &str = "generalized Camina pairs are closed under intersection";
const GCP_MEET: &str = "V(G) is the intersection of all N with (G, N) a generalized Camina pair";
const P_QUOTIENT: &str = "G nonabelian nilpotent and V(G) < G imply G/V(G) is a p-group";

const ALL_IDS: &[(&str, &str)] = &[
    ("quotient-structure", QUOTIENT_STRUCTURE),
    ("series-sandwich", SANDWICH),
    ("series-monotone", MONOTONE),
    ("series-quotient", SERIES_QUOTIENT),
    ("elementary-factors", ELEMENTARY),
    ("index-parameters", PARAMETERS),
    ("quotient-degrees", DEGREES),
    ("quotient-vz", QUOTIENT_VZ),
    ("index-square", INDEX_SQUARE),
    ("v2-intersection", INTERSECTION_V2),
    ("centralizer-index", CENTRALIZER_INDEX),
    ("centralizer-vanishing", CENTRALIZER_VANISHING),
    ("centralizer-derived", CENTRALIZER_DERIVED),
    ("centralizer-vz", CENTRALIZER_VZ),
    ("center-bound", CENTER_BOUND),
    ("upper-central-step", UPPER_STEP),
    ("hypercenter-bound", HYPERCENTER),
    ("gcp-v", GCP_V),
    ("derived-in-v", DERIVED_IN_V),
    ("center-in-v", CENTER_IN_V),
    ("character-product", PRODUCT),
    ("vanishing-off-v", VANISH_OFF),
    ("index-divides-degrees", INDEX_DIVIDES),
    ("camina-equivalence", EQUIVALENCE),
    ("commutator-surjectivity", SURJECTIVE),
    ("commutator-above-v", ABOVE_V),
    ("quotient-containment", QUOTIENT_CONTAINMENT),
    ("gcp-intersection", GCP_INTERSECTION),
    ("gcp-meet", GCP_MEET),
    ("nilpotent-p-quotient", P_QUOTIENT),
];

/// Checks every clause against the computed profile.
///
/// Each clause gates on its own hypothesis; a failed clause carries the
/// element or subgroup identifiers that witness the failure.
pub fn verify_theorems(ctx: &Context, prof: &VanishingProfile) -> TheoremReport {
    if prof.degenerate.is_some() {
        return TheoremReport {
            clauses: ALL_IDS
                .iter()
                .map(|(id, s)| Clause::inapplicable(id, s, "abelian group"))
                .collect(),
            observations: Vec::new(),
        };
    }
    let mut v = Verifier {
        ctx,
        prof,
        g: ctx.group,
        clauses: Vec::new(),
        observations: Vec::new(),
    };
    v.quotient_structure();
    v.series();
    v.second_term();
    v.third_term();
    v.central_bounds();
    v.basic_lemmas();
    v.character_lemmas();
    v.camina_elements();
    v.enumerated();
    TheoremReport {
        clauses: v.clauses,
        observations: v.observations,
    }
}

struct Verifier<'a> {
    ctx: &'a Context<'a>,
    prof: &'a VanishingProfile,
    g: &'a GroupTable,
    clauses: Vec<Clause>,
    observations: Vec<Observation>,
}

impl Verifier<'_> {
    fn push(&mut self, c: Clause) {
        self.clauses.push(c);
    }

    fn depth(&self) -> usize {
        self.ctx
            .lower
            .stabilization_index()
            .max(self.prof.v_series.stabilization_index())
            + 1
    }

    fn vi(&self, i: usize) -> &Subgroup {
        self.prof.v_series.term(i)
    }

    fn gi(&self, i: usize) -> &Subgroup {
        self.ctx.lower.term(i)
    }

    fn quotient_structure(&mut self) {
        let id = "quotient-structure";
        if !derived_series(self.g).reaches_trivial() {
            return self.push(Clause::inapplicable(id, QUOTIENT_STRUCTURE, "not solvable"));
        }
        let shape = self
            .prof
            .quotient_shape
            .expect("nonabelian profile has a quotient shape");
        let ok = shape.cyclic || shape.elementary_abelian.is_some();
        self.push(Clause::checked(
            id,
            QUOTIENT_STRUCTURE,
            ok,
            json!({ "index": shape.order, "shape": shape.describe(), "v": sub(self.g, &self.prof.v) }),
        ));
    }

    fn series(&mut self) {
        let g = self.g;
        let depth = self.depth();
        let bad = (1..=depth).find(|&i| {
            !(self.gi(i + 1).is_subgroup_of(self.vi(i)) && self.vi(i).is_subgroup_of(self.gi(i)))
        });
        let witness = match bad {
            Some(i) => {
                json!({ "i": i, "v_i": sub(g, self.vi(i)), "g_i": sub(g, self.gi(i)), "g_next": sub(g, self.gi(i + 1)) })
            }
            None => json!({ "terms_checked": depth }),
        };
        self.push(Clause::checked(
            "series-sandwich",
            SANDWICH,
            bad.is_none(),
            witness,
        ));

        let h = self.prof.height;
        let bad = (1..h).find(|&i| self.vi(i) == self.gi(i));
        let witness = match bad {
            Some(i) => json!({ "height": h, "i": i, "v_i": sub(g, self.vi(i)) }),
            None => json!({ "height": h }),
        };
        self.push(Clause::checked(
            "series-monotone",
            MONOTONE,
            bad.is_none(),
            witness,
        ));

        if h == 0 {
            return self.push(Clause::inapplicable(
                "series-quotient",
                SERIES_QUOTIENT,
                "V_i = G_i for every i",
            ));
        }
        let mut failure = None;
        'outer: for n in 1..=h {
            let q = quotient(g, self.vi(n)).expect("V_n is normal");
            let class = nilpotence_class(&lower_central_series(&q.group));
            if class != Some(n) {
                failure = Some(json!({ "n": n, "class": class, "v_n": sub(g, self.vi(n)) }));
                break;
            }
            if q.group.is_abelian() {
                continue;
            }
            let vq = vanishing_off(&q.group).expect("quotient is nonabelian");
            let qs = v_series(&q.group, &vq);
            for i in 1..=n {
                if *qs.term(i) != q.image(self.vi(i)) {
                    failure = Some(json!({ "n": n, "i": i, "v_i": sub(g, self.vi(i)) }));
                    break 'outer;
                }
            }
        }
        let witness = failure.clone().unwrap_or(json!({ "levels": h }));
        self.push(Clause::checked(
            "series-quotient",
            SERIES_QUOTIENT,
            failure.is_none(),
            witness,
        ));
    }

    fn second_term(&mut self) {
        let g = self.g;
        let ids = [
            ("elementary-factors", ELEMENTARY),
            ("index-parameters", PARAMETERS),
            ("quotient-degrees", DEGREES),
            ("quotient-vz", QUOTIENT_VZ),
        ];
        if self.vi(2) == self.gi(2) {
            for (id, s) in ids {
                self.push(Clause::inapplicable(id, s, "V_2 = G_2"));
            }
            return;
        }
        let top = self.prof.v.index() as u64;
        let p = prime_power_base(top);

        // Every G_i/V_i abelian of exponent p.
        let mut failure = None;
        match p {
            None => failure = Some(json!({ "index": top, "v": sub(g, &self.prof.v) })),
            Some(p) => {
                'outer: for i in 1..=self.depth() {
                    let (gi, vi) = (self.gi(i), self.vi(i));
                    for &x in gi.generators() {
                        for &y in gi.generators() {
                            if !vi.contains(g.commutator(x, y)) {
                                failure = Some(json!({ "i": i, "element": x, "other": y }));
                                break 'outer;
                            }
                        }
                    }
                    if let Some(x) = gi
                        .elements()
                        .into_iter()
                        .find(|&x| !vi.contains(g.pow(x, p)))
                    {
                        failure = Some(json!({ "i": i, "element": x, "word": g.label(x) }));
                        break;
                    }
                }
            }
        }
        let witness = failure.clone().unwrap_or(json!({ "p": p }));
        self.push(Clause::checked(
            ids[0].0,
            ids[0].1,
            failure.is_none(),
            witness,
        ));

        let params = self.prof.parameters;
        let ok = params.is_some_and(|s| 1 <= s.m && s.m <= s.n);
        let witness = json!({
            "index_v1": top,
            "index_v2_in_derived": self.gi(2).order() / self.vi(2).order(),
            "parameters": params,
            "v_2": sub(g, self.vi(2)),
        });
        self.push(Clause::checked(ids[1].0, ids[1].1, ok, witness));

        match (self.ctx.table, params) {
            (None, _) => self.push(Clause::undecided(
                ids[2].0,
                ids[2].1,
                "character table not computed",
            )),
            (Some(t), params) => {
                let cd = degrees_with_kernel(t, self.vi(2));
                let want = params.map(|s| vec![1, s.p.pow(s.n)]);
                let ok = want.as_ref() == Some(&cd);
                self.push(Clause::checked(
                    ids[2].0,
                    ids[2].1,
                    ok,
                    json!({ "cd": cd, "expected": want, "v_2": sub(g, self.vi(2)) }),
                ));
            }
        }

        let q = quotient(g, self.vi(2)).expect("V_2 is normal");
        let vq = vanishing_off(&q.group).expect("G/V_2 is nonabelian");
        let zq = center(&q.group);
        let image = q.image(&self.prof.v);
        let ok = vq == zq && vq == image;
        self.push(Clause::checked(
            ids[3].0,
            ids[3].1,
            ok,
            json!({ "v_quotient_order": vq.order(), "center_quotient_order": zq.order(), "v1_over_v2_order": image.order(), "v_2": sub(g, self.vi(2)) }),
        ));
    }

    fn third_term(&mut self) {
        let g = self.g;
        let ids = [
            ("index-square", INDEX_SQUARE),
            ("v2-intersection", INTERSECTION_V2),
            ("centralizer-index", CENTRALIZER_INDEX),
            ("centralizer-vanishing", CENTRALIZER_VANISHING),
            ("centralizer-derived", CENTRALIZER_DERIVED),
            ("centralizer-vz", CENTRALIZER_VZ),
        ];
        let Some(pair) = &self.prof.centralizer else {
            for (id, s) in ids {
                self.push(Clause::inapplicable(id, s, "V_3 = G_3"));
            }
            return;
        };
        let (z, c) = (&pair.z, &pair.c);
        let (v1, v2, v3) = (self.vi(1).clone(), self.vi(2).clone(), self.vi(3).clone());
        let derived = &self.ctx.derived;
        let top = v1.index();
        let lower = derived.order() / v2.order();

        self.push(Clause::checked(
            ids[0].0,
            ids[0].1,
            top == lower * lower,
            json!({ "index_v1": top, "index_v2_in_derived": lower }),
        ));

        let meet = z.intersection(g, derived);
        self.push(Clause::checked(
            ids[1].0,
            ids[1].1,
            meet == v2,
            json!({ "z": sub(g, z), "z_meet_derived": sub(g, &meet), "v_2": sub(g, &v2) }),
        ));

        let c_is_v1 = *c == v1;
        let ok = c.index() == lower || c_is_v1;
        self.push(Clause::checked(
            ids[2].0,
            ids[2].1,
            ok,
            json!({ "index_c": c.index(), "index_v2_in_derived": lower, "c_equals_v1": c_is_v1, "c": sub(g, c) }),
        ));

        let ic = subgroup_as_group(g, c).expect("C is a subgroup");
        let vc = ic.lift(g, &vanishing_off(&ic.group).expect("V(C) is defined"));
        let up = v1.is_subgroup_of(&vc);
        let down = vc.is_subgroup_of(&v1);
        self.push(Clause::checked(
            ids[3].0,
            ids[3].1,
            up || down,
            json!({ "v1_le_vc": up, "vc_le_v1": down, "v_c": sub(g, &vc), "v_1": sub(g, &v1) }),
        ));

        if !v1.is_proper_subgroup_of(c) {
            self.push(Clause::inapplicable(ids[4].0, ids[4].1, "C = V_1"));
            self.push(Clause::inapplicable(ids[5].0, ids[5].1, "C = V_1"));
        } else {
            let cg = &ic.group;
            let c_derived = ic.lift(g, &derived_subgroup(cg));
            let q = quotient(cg, &ic.restrict(&v3)).expect("V_3 is normal in C");
            let class = nilpotence_class(&lower_central_series(&q.group));
            let c_classes = conjugacy_classes(cg);
            let gcp = is_gcp(cg, &c_classes, &ic.restrict(&v1)).expect("V_1 is normal in C");
            let ok = c_derived == v2 && class == Some(2) && gcp;
            self.push(Clause::checked(
                ids[4].0,
                ids[4].1,
                ok,
                json!({ "c_derived": sub(g, &c_derived), "class_c_over_v3": class, "c_v1_gcp": gcp, "c": sub(g, c) }),
            ));

            let k = mutual_commutator(g, &v1, c);
            if !k.is_proper_subgroup_of(&v2) {
                self.push(Clause::inapplicable(ids[5].0, ids[5].1, "[V_1, C] = V_2"));
            } else {
                let q = quotient(cg, &ic.restrict(&k)).expect("[V_1, C] is normal in C");
                let vz = !q.group.is_abelian()
                    && vanishing_off(&q.group).expect("nonabelian") == center(&q.group);
                let square = is_square(c.index());
                self.push(Clause::checked(
                    ids[5].0,
                    ids[5].1,
                    vz && square,
                    json!({ "index_c": c.index(), "square": square, "vz": vz, "v1_c_commutator": sub(g, &k) }),
                ));
            }
        }

        let g3 = self.gi(3);
        self.observations.push(Observation {
            id: "centralizer-equals-v1".into(),
            statement: "C = V_1 compared with [G:V(G)] = [G_3:V_3]".into(),
            value: json!({
                "c_equals_v1": c_is_v1,
                "index_v": top,
                "index_v3_in_g3": g3.order() / v3.order(),
                "indices_equal": top == g3.order() / v3.order(),
            }),
        });
    }

    fn central_bounds(&mut self) {
        let g = self.g;
        let v = &self.prof.v;
        let upper = &self.ctx.upper;
        let z = |m: usize| {
            if m == 0 {
                Subgroup::trivial(g)
            } else {
                upper.term(m).clone()
            }
        };
        match nilpotence_class(&self.ctx.lower) {
            Some(c) => {
                let zc = z(c - 1);
                let ok = zc.is_subgroup_of(v);
                self.push(Clause::checked(
                    "center-bound",
                    CENTER_BOUND,
                    ok,
                    json!({ "class": c, "z": sub(g, &zc), "v": sub(g, v) }),
                ));
                self.push(Clause::inapplicable(
                    "hypercenter-bound",
                    HYPERCENTER,
                    "nilpotent",
                ));
            }
            None => {
                self.push(Clause::inapplicable(
                    "center-bound",
                    CENTER_BOUND,
                    "not nilpotent",
                ));
                let zi = upper.last().clone();
                let ok = zi.is_subgroup_of(v);
                self.push(Clause::checked(
                    "hypercenter-bound",
                    HYPERCENTER,
                    ok,
                    json!({ "hypercenter": sub(g, &zi), "v": sub(g, v) }),
                ));
            }
        }
        let mut checked = Vec::new();
        let mut failure = None;
        for m in 0..=upper.stabilization_index() {
            if self.ctx.derived.is_subgroup_of(&z(m)) {
                continue;
            }
            checked.push(m);
            if !z(m + 1).is_subgroup_of(v) {
                failure = Some(json!({ "m": m, "z_next": sub(g, &z(m + 1)), "v": sub(g, v) }));
                break;
            }
        }
        let witness = failure.clone().unwrap_or(json!({ "levels": checked }));
        self.push(Clause::checked(
            "upper-central-step",
            UPPER_STEP,
            failure.is_none(),
            witness,
        ));
    }

    fn basic_lemmas(&mut self) {
        let g = self.g;
        let v = &self.prof.v;
        let outside = g
            .elements()
            .find(|&x| !v.contains(x) && !self.prof.camina.contains(x));
        let witness = match outside {
            Some(x) => json!({ "element": x, "word": g.label(x) }),
            None => json!({ "v": sub(g, v) }),
        };
        self.push(Clause::checked("gcp-v", GCP_V, outside.is_none(), witness));
        let d = &self.ctx.derived;
        self.push(Clause::checked(
            "derived-in-v",
            DERIVED_IN_V,
            d.is_subgroup_of(v),
            json!({ "derived": sub(g, d), "v": sub(g, v) }),
        ));
        let z = &self.ctx.center;
        self.push(Clause::checked(
            "center-in-v",
            CENTER_IN_V,
            z.is_subgroup_of(v),
            json!({ "center": sub(g, z), "v": sub(g, v) }),
        ));
        match nilpotence_class(&self.ctx.lower) {
            Some(_) if !v.is_whole() => {
                let p = prime_power_base(v.index() as u64);
                self.push(Clause::checked(
                    "nilpotent-p-quotient",
                    P_QUOTIENT,
                    p.is_some(),
                    json!({ "index": v.index(), "p": p }),
                ));
            }
            Some(_) => self.push(Clause::inapplicable(
                "nilpotent-p-quotient",
                P_QUOTIENT,
                "V(G) = G",
            )),
            None => self.push(Clause::inapplicable(
                "nilpotent-p-quotient",
                P_QUOTIENT,
                "not nilpotent",
            )),
        }
    }

    fn character_lemmas(&mut self) {
        let g = self.g;
        let v = &self.prof.v;
        let Some(t) = self.ctx.table else {
            for (id, s) in [
                ("character-product", PRODUCT),
                ("vanishing-off-v", VANISH_OFF),
                ("index-divides-degrees", INDEX_DIVIDES),
            ] {
                self.push(Clause::undecided(id, s, "character table not computed"));
            }
            return;
        };
        let charwise = self
            .prof
            .v_charwise
            .as_ref()
            .expect("table implies charwise V(G)");
        self.push(Clause::checked(
            "character-product",
            PRODUCT,
            charwise == v,
            json!({ "product": sub(g, charwise), "v": sub(g, v) }),
        ));

        let classes = t.classes();
        let bad = t.nonlinear_rows().find_map(|row| {
            (0..classes.len())
                .find(|&c| !v.contains(classes.representative(c)) && !t.value(row, c).is_zero())
                .map(|c| (row, classes.representative(c)))
        });
        let witness = match bad {
            Some((row, x)) => json!({ "character": row, "element": x, "word": g.label(x) }),
            None => json!({ "nonlinear_characters": t.nonlinear_rows().count() }),
        };
        self.push(Clause::checked(
            "vanishing-off-v",
            VANISH_OFF,
            bad.is_none(),
            witness,
        ));

        let index = v.index() as u64;
        let bad = t
            .nonlinear_rows()
            .find(|&row| (t.degree(row) * t.degree(row)) % index != 0);
        let witness = match bad {
            Some(row) => json!({ "character": row, "degree": t.degree(row), "index": index }),
            None => json!({ "index": index }),
        };
        self.push(Clause::checked(
            "index-divides-degrees",
            INDEX_DIVIDES,
            bad.is_none(),
            witness,
        ));
    }

    fn camina_elements(&mut self) {
        let g = self.g;
        let classes: &ClassPartition = &self.ctx.classes;
        let d = &self.ctx.derived;
        let by_coset = camina_elements(g, classes, d);
        let mut failure = None;
        match by_coset {
            Err(e) => failure = Some(json!({ "error": e.to_string() })),
            Ok(set) => {
                for c in 0..classes.len() {
                    let r = classes.representative(c);
                    let camina = set.contains(r);
                    let covers = commutators_cover(g, r, d);
                    let vanishes = self
                        .ctx
                        .table
                        .map(|t| t.nonlinear_rows().all(|row| t.value(row, c).is_zero()));
                    if covers != camina || vanishes.is_some_and(|z| z != camina) {
                        failure = Some(
                            json!({ "element": r, "word": g.label(r), "camina": camina, "commutators_cover": covers, "characters_vanish": vanishes }),
                        );
                        break;
                    }
                }
            }
        }
        let witness = failure.clone().unwrap_or(
            json!({ "classes": classes.len(), "camina_elements": self.prof.camina.len() }),
        );
        self.push(Clause::checked(
            "camina-equivalence",
            EQUIVALENCE,
            failure.is_none(),
            witness,
        ));

        let v = &self.prof.v;
        let bad = (0..classes.len())
            .map(|c| classes.representative(c))
            .find(|&r| !v.contains(r) && !commutators_cover(g, r, d));
        let witness = match bad {
            Some(x) => json!({ "element": x, "word": g.label(x) }),
            None => json!({ "v": sub(g, v) }),
        };
        self.push(Clause::checked(
            "commutator-surjectivity",
            SURJECTIVE,
            bad.is_none(),
            witness,
        ));
    }

    fn enumerated(&mut self) {
        let ids = [
            ("commutator-above-v", ABOVE_V),
            ("quotient-containment", QUOTIENT_CONTAINMENT),
            ("gcp-intersection", GCP_INTERSECTION),
            ("gcp-meet", GCP_MEET),
        ];
        let g = self.g;
        if g.order() > ENUMERATION_CAP {
            for (id, s) in ids {
                self.push(Clause::undecided(
                    id,
                    s,
                    "group order above enumeration cap",
                ));
            }
            return;
        }
        let v = &self.prof.v;
        let d = &self.ctx.derived;

        let bad = g.elements().filter(|&x| !v.contains(x)).find(|&x| {
            let m = v.join(g, &Subgroup::generated(g, [x]));
            mutual_commutator(g, &Subgroup::whole(g), &m) != *d
        });
        let witness = match bad {
            Some(x) => json!({ "element": x, "word": g.label(x) }),
            None => json!({ "overgroups_checked": g.order() - v.order() }),
        };
        self.push(Clause::checked(ids[0].0, ids[0].1, bad.is_none(), witness));

        let classes = &self.ctx.classes;
        let normals = normal_subgroups(g, classes);
        let mut failure = None;
        let mut checked = 0;
        for n in &normals {
            let q = quotient(g, n).expect("normal subgroup");
            if q.group.is_abelian() {
                continue;
            }
            checked += 1;
            let vq = vanishing_off(&q.group).expect("nonabelian quotient");
            if !n.is_subgroup_of(v) || !vq.is_subgroup_of(&q.image(v)) {
                failure = Some(json!({ "n": sub(g, n), "v_quotient_order": vq.order() }));
                break;
            }
        }
        let witness = failure.clone().unwrap_or(
            json!({ "normal_subgroups": normals.len(), "nonabelian_quotients": checked }),
        );
        self.push(Clause::checked(
            ids[1].0,
            ids[1].1,
            failure.is_none(),
            witness,
        ));

        let family = gcp_family(g, classes, &normals);
        let mut failure = None;
        'outer: for (i, a) in family.iter().enumerate() {
            for b in &family[i + 1..] {
                let m = a.intersection(g, b);
                if !is_gcp(g, classes, &m).expect("intersection of normal subgroups") {
                    failure = Some(json!({ "first": sub(g, a), "second": sub(g, b) }));
                    break 'outer;
                }
            }
        }
        let witness = failure
            .clone()
            .unwrap_or(json!({ "family_size": family.len() }));
        self.push(Clause::checked(
            ids[2].0,
            ids[2].1,
            failure.is_none(),
            witness,
        ));

        let meet = family
            .iter()
            .fold(Subgroup::whole(g), |acc, n| acc.intersection(g, n));
        self.push(Clause::checked(
            ids[3].0,
            ids[3].1,
            meet == *v,
            json!({ "meet": sub(g, &meet), "v": sub(g, v), "family_size": family.len() }),
        ));
    }
}

/// Sorted distinct degrees of the characters whose kernel contains `n`.
fn degrees_with_kernel(t: &CharacterTable, n: &Subgroup) -> Vec<u64> {
    let classes = t.classes();
    let inside: Vec<usize> = (0..classes.len())
        .filter(|&c| n.contains(classes.representative(c)))
        .collect();
    let mut out: Vec<u64> = (0..t.len())
        .filter(|&row| {
            inside
                .iter()
                .all(|&c| t.value(row, c).as_integer() == Some(t.degree(row) as i64))
        })
        .map(|row| t.degree(row))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
