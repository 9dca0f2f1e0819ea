use std::collections::BTreeMap;

use character_table::TableExport;
use serde::{Deserialize, Serialize};
use verifiers::{Verdict, Witness};

pub const BUNDLE_SCHEMA: u32 = 1;

/// Everything computed for one group, cacheable and name-independent.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GroupBundle {
    pub schema: u32,
    pub id: String,
    pub order: u64,
    pub degree: usize,
    pub solvable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supersolvable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wsm: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_skip: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chief_factors: Option<Vec<FactorSummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterSummary>,
    pub verdicts: BTreeMap<String, StoredVerdict>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeSummary {
    pub subgroups: usize,
    pub conjugacy_classes: usize,
    pub maximal_subgroups: usize,
    pub frattini_order: u64,
    pub fitting_order: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FactorSummary {
    pub order: u64,
    pub non_frattini: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CharacterSummary {
    pub degrees: Vec<u64>,
    pub nonvanishing_classes: Vec<usize>,
    pub table: TableExport,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StoredVerdict {
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub observations: Vec<String>,
}

/// Echo of the run configuration, embedded in the report.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConfigEcho {
    pub corpus: String,
    pub theorems: Vec<String>,
    pub lattice_bound: u64,
    pub char_bound: u64,
    pub index_bound: u64,
    pub vector_bound: usize,
    pub jobs: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RemarkSummary {
    pub implication_failures: Vec<String>,
    pub wsm_not_supersolvable: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub groups: usize,
    pub verdicts: BTreeMap<String, VerdictCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supersolvable_remark: Option<RemarkSummary>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerdictEntry {
    pub theorem: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub observations: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GroupEntry {
    pub name: String,
    pub id: String,
    pub order: u64,
    pub degree: usize,
    pub solvable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supersolvable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wsm: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chief_factors: Option<Vec<FactorSummary>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character_degrees: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonvanishing_classes: Option<Vec<usize>>,
    pub verdicts: Vec<VerdictEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Timings {
    pub total_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunReport {
    pub config: ConfigEcho,
    pub summary: Summary,
    pub groups: Vec<GroupEntry>,
}
