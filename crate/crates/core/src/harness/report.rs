use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chartab::{character_degrees, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::harness::Analysis;
use crate::structure::SeriesReport;
use crate::vanishing::{QuotientShape, SeriesParameters, TheoremReport};

pub const ENGINE_VERSION: &str = concat!("vanishoff ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub order: usize,
    pub index: usize,
    pub normal: bool,
    pub generators: Vec<String>,
    pub elements: Vec<u32>,
}

impl SubgroupRecord {
    pub fn new(g: &GroupTable, h: &Subgroup) -> Self {
        SubgroupRecord {
            order: h.order(),
            index: h.index(),
            normal: h.is_normal(),
            generators: h.generator_labels(g),
            elements: h.elements(),
        }
    }
}

fn series(g: &GroupTable, s: &SeriesReport) -> Vec<SubgroupRecord> {
    s.terms.iter().map(|h| SubgroupRecord::new(g, h)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub name: Option<String>,
    pub engine_version: String,
    pub kind: String,
    pub order: usize,
    pub generators: Vec<String>,
    pub exponent: u64,
    pub abelian: bool,
    pub nilpotent: bool,
    pub nilpotence_class: Option<usize>,
    pub solvable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSection {
    pub class_count: usize,
    pub class_representatives: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub derived: SubgroupRecord,
    pub center: SubgroupRecord,
    pub lower_central: Vec<SubgroupRecord>,
    pub upper_central: Vec<SubgroupRecord>,
    pub derived_series: Vec<SubgroupRecord>,
}

/// A cyclotomic integer as coefficients of `1, ζ, ζ², …` with `ζ` a
/// primitive `conductor`-th root of unity, reduced below `φ(conductor)`
/// and with trailing zeros dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicRecord {
    pub conductor: u32,
    pub coeffs: Vec<i64>,
}

impl From<&Cyclotomic> for CyclotomicRecord {
    fn from(c: &Cyclotomic) -> Self {
        let mut coeffs = c.reduced();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CyclotomicRecord {
            conductor: c.conductor(),
            coeffs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharactersSection {
    pub dixon_prime: u64,
    pub conductor: u32,
    pub matrices_used: usize,
    pub class_count: usize,
    pub degrees: Vec<u64>,
    pub cd: Vec<u64>,
    pub linear_count: usize,
    pub orthogonality_verified: bool,
    /// Rows are irreducible characters, columns follow the class order of
    /// the structure section.
    pub table: Vec<Vec<CyclotomicRecord>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientRecord {
    pub description: String,
    #[serde(flatten)]
    pub shape: QuotientShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerRecord {
    pub z: SubgroupRecord,
    pub c: SubgroupRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingSection {
    pub degenerate: Option<String>,
    pub v: SubgroupRecord,
    /// Whether the classwise and character-theoretic `V(G)` agree; null
    /// when no character table was computed.
    pub routes_agree: Option<bool>,
    pub camina_elements: Vec<u32>,
    pub v_series: Vec<SubgroupRecord>,
    pub height: usize,
    pub is_camina_group: bool,
    pub is_generalized_camina_group: bool,
    pub is_vz_group: bool,
    pub quotient: Option<QuotientRecord>,
    pub parameters: Option<SeriesParameters>,
    pub centralizer: Option<CentralizerRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub structure: StructureSection,
    pub characters: Option<CharactersSection>,
    pub vanishing: VanishingSection,
    pub theorems: TheoremReport,
    /// Wall-clock milliseconds per stage; null unless requested, so that
    /// reports stay reproducible byte for byte.
    pub timing: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn from_analysis(a: &Analysis, name: Option<&str>) -> Report {
        let g = &a.group;
        let prof = &a.profile;
        let meta = Meta {
            name: name.map(str::to_string),
            engine_version: ENGINE_VERSION.to_string(),
            kind: a.kind.to_string(),
            order: g.order(),
            generators: g.generator_names().to_vec(),
            exponent: g.exponent(),
            abelian: g.is_abelian(),
            nilpotent: a.lower.reaches_trivial(),
            nilpotence_class: crate::structure::nilpotence_class(&a.lower),
            solvable: a.derived_series.reaches_trivial(),
        };
        let structure = StructureSection {
            class_count: a.classes.len(),
            class_representatives: (0..a.classes.len())
                .map(|c| g.label(a.classes.representative(c)).to_string())
                .collect(),
            class_sizes: a.classes.sizes(),
            derived: SubgroupRecord::new(g, &a.derived),
            center: SubgroupRecord::new(g, &a.center),
            lower_central: series(g, &a.lower),
            upper_central: series(g, &a.upper),
            derived_series: series(g, &a.derived_series),
        };
        let characters = a.table.as_ref().map(|t| {
            let (degrees, cd) = character_degrees(t);
            CharactersSection {
                dixon_prime: t.prime(),
                conductor: t.conductor(),
                matrices_used: t.matrices_used(),
                class_count: t.len(),
                degrees,
                cd: cd.into_iter().collect(),
                linear_count: t.linear_count(),
                orthogonality_verified: a.table_check.as_ref().is_some_and(|r| r.is_ok()),
                table: t
                    .rows()
                    .iter()
                    .map(|row| row.iter().map(CyclotomicRecord::from).collect())
                    .collect(),
            }
        });
        let vanishing = VanishingSection {
            degenerate: prof.degenerate.map(str::to_string),
            v: SubgroupRecord::new(g, &prof.v),
            routes_agree: prof.v_charwise.as_ref().map(|w| *w == prof.v),
            camina_elements: prof.camina.iter().collect(),
            v_series: series(g, &prof.v_series),
            height: prof.height,
            is_camina_group: prof.is_camina_group,
            is_generalized_camina_group: prof.is_generalized_camina_group,
            is_vz_group: prof.is_vz_group,
            quotient: prof.quotient_shape.map(|shape| QuotientRecord {
                description: shape.describe(),
                shape,
            }),
            parameters: prof.parameters,
            centralizer: prof.centralizer.as_ref().map(|p| CentralizerRecord {
                z: SubgroupRecord::new(g, &p.z),
                c: SubgroupRecord::new(g, &p.c),
            }),
        };
        Report {
            meta,
            structure,
            characters,
            vanishing,
            theorems: a.theorems.clone(),
            timing: None,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
    }
}
