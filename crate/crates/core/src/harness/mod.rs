//! The example corpus, the end-to-end analysis pipeline, JSON reports,
//! the on-disk report cache, and corpus verification.

mod cache;
mod corpus;
mod report;
mod verify;

pub use cache::{normalize_source, Cache, CACHE_ENV};
pub use corpus::{
    corpus, corpus_entry, dihedral_source, CorpusEntry, Expect, Flag, Golden, Provenance, Term,
};
pub use report::{
    CentralizerRecord, CharactersSection, CyclotomicRecord, Meta, QuotientRecord, Report,
    StructureSection, SubgroupRecord, VanishingSection, ENGINE_VERSION,
};
pub use verify::{
    check_golden, verify_corpus, verify_entries, Diff, EntryOutcome, Summary, VerifyOptions,
};

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use crate::chartab::{dixon_character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::group::{
    parse_group_spec, realize, GroupSpec, GroupTable, Subgroup, DEFAULT_ORDER_LIMIT,
};
use crate::structure::{conjugacy_classes, derived_series, ClassPartition, SeriesReport};
use crate::vanishing::{
    vanishing_profile, verify_theorems, Context, TheoremReport, VanishingProfile,
};

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Compute the character table (and the clauses that need it).
    pub chartab: bool,
    pub cache_dir: Option<PathBuf>,
    pub order_limit: usize,
    /// Name recorded in the report metadata.
    pub name: Option<String>,
    /// Fill the report's `timing` section; such reports bypass the cache.
    pub record_timing: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            chartab: true,
            cache_dir: None,
            order_limit: DEFAULT_ORDER_LIMIT,
            name: None,
            record_timing: false,
        }
    }
}

/// Everything the pipeline computes for one group.
pub struct Analysis {
    pub kind: &'static str,
    /// Order predicted by the presentation (product of relative orders),
    /// for polycyclic input.
    pub presented_order: Option<u128>,
    pub group: GroupTable,
    pub classes: ClassPartition,
    pub derived: Subgroup,
    pub center: Subgroup,
    pub lower: SeriesReport,
    pub upper: SeriesReport,
    pub derived_series: SeriesReport,
    pub table: Option<CharacterTable>,
    /// Outcome of the exact orthogonality and degree checks on the table.
    pub table_check: Option<std::result::Result<(), String>>,
    pub profile: VanishingProfile,
    pub theorems: TheoremReport,
    pub timing: BTreeMap<String, f64>,
}

fn lap(timing: &mut BTreeMap<String, f64>, stage: &str, start: &mut Instant) {
    let now = Instant::now();
    timing.insert(stage.to_string(), (now - *start).as_secs_f64() * 1e3);
    *start = now;
}

/// Runs parse → realize → structure → character table → profile →
/// theorem checks. Errors carry the name of the failing stage.
pub fn run_pipeline(source: &str, opts: &AnalyzeOptions) -> Result<Analysis> {
    let mut timing = BTreeMap::new();
    let mut clock = Instant::now();
    let spec = parse_group_spec(source).map_err(|e| e.at("parse"))?;
    let (kind, presented_order) = match &spec {
        GroupSpec::Pc(p) => ("pc", Some(p.order())),
        GroupSpec::Perm(_) => ("perm", None),
    };
    lap(&mut timing, "parse", &mut clock);
    let group = realize(&spec, opts.order_limit).map_err(|e| e.at("realize"))?;
    if group.order() == 1 {
        return Err(
            Error::Degenerate("the trivial group has no nonabelian content".into()).at("realize"),
        );
    }
    lap(&mut timing, "realize", &mut clock);
    let table = if opts.chartab {
        let classes = conjugacy_classes(&group);
        Some(dixon_character_table(&group, &classes).map_err(|e| e.at("character table"))?)
    } else {
        None
    };
    lap(&mut timing, "character table", &mut clock);
    let ctx = Context::new(&group, table.as_ref());
    let dseries = derived_series(&group);
    let table_check = table.as_ref().map(|t| t.check(ctx.derived.index()));
    lap(&mut timing, "structure", &mut clock);
    let profile = vanishing_profile(&ctx).map_err(|e| e.at("vanishing"))?;
    lap(&mut timing, "vanishing", &mut clock);
    let theorems = verify_theorems(&ctx, &profile);
    lap(&mut timing, "theorems", &mut clock);
    let Context {
        classes,
        derived,
        center,
        lower,
        upper,
        ..
    } = ctx;
    Ok(Analysis {
        kind,
        presented_order,
        group,
        classes,
        derived,
        center,
        lower,
        upper,
        derived_series: dseries,
        table,
        table_check,
        profile,
        theorems,
        timing,
    })
}

fn cache_key(source: &str, opts: &AnalyzeOptions) -> String {
    Cache::key(
        source,
        &[
            ENGINE_VERSION,
            if opts.chartab {
                "chartab"
            } else {
                "no-chartab"
            },
            opts.name.as_deref().unwrap_or(""),
        ],
    )
}

/// Full analysis of one group description, consulting the cache when one
/// is configured.
pub fn analyze(source: &str, opts: &AnalyzeOptions) -> Result<Report> {
    let cache = (!opts.record_timing)
        .then(|| opts.cache_dir.clone().map(Cache::new))
        .flatten();
    let key = cache_key(source, opts);
    if let Some(c) = &cache {
        if let Some(text) = c.load(&key).map_err(|e| e.at("cache"))? {
            return Report::from_json(&text).map_err(|e| e.at("cache"));
        }
    }
    let analysis = run_pipeline(source, opts)?;
    let mut report = Report::from_analysis(&analysis, opts.name.as_deref());
    if opts.record_timing {
        report.timing = Some(analysis.timing);
    }
    if let Some(c) = &cache {
        c.store(&key, &report.to_json())
            .map_err(|e| e.at("cache"))?;
    }
    Ok(report)
}
