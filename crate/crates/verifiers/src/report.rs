use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The statements the harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "B")]
    B,
    #[serde(rename = "C")]
    C,
    #[serde(rename = "key_lemma")]
    KeyLemma,
    #[serde(rename = "lemma_3_1")]
    Lemma31,
    #[serde(rename = "lemma_4_1")]
    Lemma41,
    #[serde(rename = "lemma_4_3")]
    Lemma43,
    #[serde(rename = "remark_supersolvable")]
    RemarkSupersolvable,
    #[serde(rename = "remark_order72")]
    RemarkOrder72,
    #[serde(rename = "remark_nonsolvable")]
    RemarkNonsolvable,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::A,
        TheoremId::B,
        TheoremId::C,
        TheoremId::KeyLemma,
        TheoremId::Lemma31,
        TheoremId::Lemma41,
        TheoremId::Lemma43,
        TheoremId::RemarkSupersolvable,
        TheoremId::RemarkOrder72,
        TheoremId::RemarkNonsolvable,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::C => "C",
            TheoremId::KeyLemma => "key_lemma",
            TheoremId::Lemma31 => "lemma_3_1",
            TheoremId::Lemma41 => "lemma_4_1",
            TheoremId::Lemma43 => "lemma_4_3",
            TheoremId::RemarkSupersolvable => "remark_supersolvable",
            TheoremId::RemarkOrder72 => "remark_order72",
            TheoremId::RemarkNonsolvable => "remark_nonsolvable",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .find(|t| t.as_str() == s)
            .copied()
            .ok_or_else(|| format!("unknown theorem id '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

/// Concrete data that falsifies (or would replay) a check; all group
/// elements are in cycle notation so a failure can be reproduced from the
/// report alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    TheoremB {
        subgroup: Vec<String>,
        bad_members: Vec<Vec<String>>,
    },
    KeyLemma {
        subgroup: Vec<String>,
        maximal_member: Vec<String>,
        non_maximal_member: Vec<String>,
        core_of_subgroup: Vec<String>,
        core_of_member: Vec<String>,
    },
    TheoremC {
        wsm_side: bool,
        module_side: bool,
        failing_factor: Option<usize>,
    },
    TheoremA {
        element: String,
        fitting: Vec<String>,
    },
    Module {
        factor_index: usize,
        detail: String,
    },
    Statement {
        detail: String,
    },
}

/// One check on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group_name: String,
    pub group_id: String,
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub observations: Vec<String>,
}

impl VerificationReport {
    pub fn pass(name: &str, id: &str, theorem: TheoremId) -> Self {
        VerificationReport {
            group_name: name.to_string(),
            group_id: id.to_string(),
            theorem,
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            observations: Vec::new(),
        }
    }

    /// Failures always carry at least one witness.
    pub fn fail(name: &str, id: &str, theorem: TheoremId, witnesses: Vec<Witness>) -> Self {
        assert!(!witnesses.is_empty(), "fail verdicts carry a witness");
        VerificationReport {
            group_name: name.to_string(),
            group_id: id.to_string(),
            theorem,
            verdict: Verdict::Fail,
            witnesses,
            observations: Vec::new(),
        }
    }

    pub fn skipped(name: &str, id: &str, theorem: TheoremId, reason: &str) -> Self {
        VerificationReport {
            group_name: name.to_string(),
            group_id: id.to_string(),
            theorem,
            verdict: Verdict::Skipped {
                reason: reason.to_string(),
            },
            witnesses: Vec::new(),
            observations: Vec::new(),
        }
    }

    pub fn with_observation(mut self, note: String) -> Self {
        self.observations.push(note);
        self
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.verdict, Verdict::Fail)
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.verdict, Verdict::Pass)
    }
}
