use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup, DEFAULT_ORDER_LIMIT};
use crate::harness::corpus::{corpus, CorpusEntry, Expect, Flag, Term};
use crate::harness::{cache_key, run_pipeline, Analysis, AnalyzeOptions, Cache, Report};
use crate::structure::{centralizer_of, nilpotence_class};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Verify only the entry with this exact name.
    pub only: Option<String>,
    pub cache_dir: Option<PathBuf>,
    pub order_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            only: None,
            cache_dir: None,
            order_limit: DEFAULT_ORDER_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    pub field: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub name: String,
    pub order: Option<usize>,
    pub golden_checked: usize,
    pub diffs: Vec<Diff>,
    /// Ids of theorem clauses with a failing verdict.
    pub theorem_failures: Vec<String>,
    pub error: Option<String>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty() && self.theorem_failures.is_empty() && self.error.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub entries: Vec<EntryOutcome>,
}

impl Summary {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

fn resolve(a: &Analysis, term: Term) -> Option<Subgroup> {
    let g = &a.group;
    Some(match term {
        Term::Whole => Subgroup::whole(g),
        Term::Trivial => Subgroup::trivial(g),
        Term::V(i) => a.profile.v_series.term(i).clone(),
        Term::Lower(i) => a.lower.term(i).clone(),
        Term::Upper(0) => Subgroup::trivial(g),
        Term::Upper(i) => a.upper.term(i).clone(),
        Term::Derived => a.derived.clone(),
        Term::Center => a.center.clone(),
        Term::C => a.profile.centralizer.as_ref()?.c.clone(),
        Term::CentralizerOfDerived => centralizer_of(g, &a.derived),
    })
}

fn describe(g: &GroupTable, h: &Subgroup) -> String {
    if h.is_trivial() {
        return "1".into();
    }
    format!(
        "<{}> (order {})",
        h.generator_labels(g).join(", "),
        h.order()
    )
}

fn words_subgroup(g: &GroupTable, words: &[String]) -> std::result::Result<Subgroup, String> {
    let elems = words
        .iter()
        .map(|w| g.element_by_word(w).map_err(|e| e.to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Subgroup::generated(g, elems))
}

/// Compares one expected fact with the analysis; `None` when they agree.
pub fn check_golden(expect: &Expect, a: &Analysis) -> Option<Diff> {
    let g = &a.group;
    let diff = |expected: String, actual: String| {
        Some(Diff {
            field: expect.field(),
            expected,
            actual,
        })
    };
    let unless =
        |ok: bool, expected: String, actual: String| if ok { None } else { diff(expected, actual) };
    let undefined = |t: Term| format!("{t} undefined");
    match expect {
        Expect::Order(n) => unless(g.order() == *n, n.to_string(), g.order().to_string()),
        Expect::Generated(t, words) => {
            let want = match words_subgroup(g, words) {
                Ok(h) => h,
                Err(e) => return diff(format!("<{}>", words.join(", ")), e),
            };
            match resolve(a, *t) {
                Some(h) if h == want => None,
                Some(h) => diff(describe(g, &want), describe(g, &h)),
                None => diff(describe(g, &want), undefined(*t)),
            }
        }
        Expect::Same(s, t) => match (resolve(a, *s), resolve(a, *t)) {
            (Some(x), Some(y)) if x == y => None,
            (Some(x), Some(y)) => diff(
                format!("{s} = {t}"),
                format!("{s} = {}, {t} = {}", describe(g, &x), describe(g, &y)),
            ),
            _ => diff(format!("{s} = {t}"), format!("{} or {} undefined", s, t)),
        },
        Expect::Index(s, t, n) => match (resolve(a, *s), resolve(a, *t)) {
            (Some(x), Some(y)) if y.is_subgroup_of(&x) && x.order() == n * y.order() => None,
            (Some(x), Some(y)) if y.is_subgroup_of(&x) => {
                diff(n.to_string(), (x.order() / y.order()).to_string())
            }
            (Some(_), Some(_)) => diff(n.to_string(), format!("{t} is not contained in {s}")),
            _ => diff(n.to_string(), format!("{} or {} undefined", s, t)),
        },
        Expect::Height(h) => unless(
            a.profile.height == *h,
            h.to_string(),
            a.profile.height.to_string(),
        ),
        Expect::NilpotenceClass(c) => {
            let actual = nilpotence_class(&a.lower);
            unless(actual == Some(*c), c.to_string(), format!("{actual:?}"))
        }
        Expect::CharacterDegrees(cd) => {
            let Some(t) = &a.table else {
                return diff(format!("{cd:?}"), "no character table".into());
            };
            let actual: Vec<u64> = crate::chartab::character_degrees(t).1.into_iter().collect();
            unless(actual == *cd, format!("{cd:?}"), format!("{actual:?}"))
        }
        Expect::CaminaElement { word, in_v } => {
            let x = match g.element_by_word(word) {
                Ok(x) => x,
                Err(e) => return diff(format!("{word} is a Camina element"), e.to_string()),
            };
            let camina = a.profile.camina.contains(x);
            let inside = a.profile.v.contains(x);
            let ok = camina && in_v.is_none_or(|want| want == inside);
            let expected = match in_v {
                Some(true) => "Camina, inside V(G)",
                Some(false) => "Camina, outside V(G)",
                None => "Camina",
            };
            let actual = format!(
                "{}, {} V(G)",
                if camina { "Camina" } else { "not Camina" },
                if inside { "inside" } else { "outside" }
            );
            unless(ok, expected.into(), actual)
        }
        Expect::Flag(flag, want) => {
            let p = &a.profile;
            let actual = match flag {
                Flag::CaminaGroup => p.is_camina_group,
                Flag::GeneralizedCaminaGroup => p.is_generalized_camina_group,
                Flag::VzGroup => p.is_vz_group,
                Flag::VCyclic => {
                    let v = &p.v;
                    v.elements()
                        .into_iter()
                        .any(|x| g.element_order(x) as usize == v.order())
                }
            };
            unless(actual == *want, want.to_string(), actual.to_string())
        }
    }
}

fn verify_entry(entry: &CorpusEntry, opts: &VerifyOptions) -> EntryOutcome {
    let mut out = EntryOutcome {
        name: entry.name.clone(),
        order: None,
        golden_checked: entry.expected.len(),
        diffs: Vec::new(),
        theorem_failures: Vec::new(),
        error: None,
    };
    let aopts = AnalyzeOptions {
        chartab: true,
        cache_dir: opts.cache_dir.clone(),
        order_limit: opts.order_limit,
        name: Some(entry.name.clone()),
        record_timing: false,
    };
    let a = match run_pipeline(&entry.source, &aopts) {
        Ok(a) => a,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.order = Some(a.group.order());
    if let Some(n) = a.presented_order {
        if n != a.group.order() as u128 {
            out.diffs.push(Diff {
                field: "realized order".into(),
                expected: n.to_string(),
                actual: a.group.order().to_string(),
            });
        }
    }
    if let Some(Err(msg)) = &a.table_check {
        out.diffs.push(Diff {
            field: "character table".into(),
            expected: "orthogonal, degrees summing to |G|".into(),
            actual: msg.clone(),
        });
    }
    out.diffs.extend(
        entry
            .expected
            .iter()
            .filter_map(|gold| check_golden(&gold.expect, &a)),
    );
    out.theorem_failures = a.theorems.failures().map(|c| c.id.clone()).collect();
    if let Some(dir) = &opts.cache_dir {
        if let Err(e) = check_cache(&Cache::new(dir), &entry.source, &aopts, &a, &mut out) {
            out.error = Some(e.to_string());
        }
    }
    out
}

/// Stores the fresh report, or compares it with the cached one.
fn check_cache(
    cache: &Cache,
    source: &str,
    opts: &AnalyzeOptions,
    a: &Analysis,
    out: &mut EntryOutcome,
) -> Result<()> {
    let key = cache_key(source, opts);
    let fresh = Report::from_analysis(a, opts.name.as_deref()).to_json();
    match cache.load(&key)? {
        Some(cached) if cached != fresh => out.diffs.push(Diff {
            field: "cached report".into(),
            expected: "byte-identical to a fresh report".into(),
            actual: format!("differs ({} vs {} bytes)", cached.len(), fresh.len()),
        }),
        Some(_) => {}
        None => cache.store(&key, &fresh)?,
    }
    Ok(())
}

/// Verifies the given entries in parallel; outcomes keep the input order.
pub fn verify_entries(entries: &[CorpusEntry], opts: &VerifyOptions) -> Summary {
    Summary {
        entries: entries.par_iter().map(|e| verify_entry(e, opts)).collect(),
    }
}

/// Verifies the shipped corpus, or the single entry named in `opts.only`.
pub fn verify_corpus(opts: &VerifyOptions) -> Result<Summary> {
    let mut entries = corpus();
    if let Some(name) = &opts.only {
        entries.retain(|e| &e.name == name);
        if entries.is_empty() {
            return Err(Error::UnknownEntry(name.clone()));
        }
    }
    Ok(verify_entries(&entries, opts))
}
