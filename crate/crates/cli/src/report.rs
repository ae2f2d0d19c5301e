//! Machine-readable output. Indices refer to the validated problem's sorted
//! weight and root lists.

use nullcone_core::candidates::Candidate;
use nullcone_core::engine::RepTerm;
use nullcone_core::{NullconeSummary, QVec, SignedTree};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub candidates: Vec<JsonCandidate>,
    pub strata: Vec<JsonStratum>,
    pub nullcone: JsonNullcone,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCandidate {
    pub l: QVec,
    #[serde(rename = "M")]
    pub m: Vec<usize>,
    pub stratifying: bool,
    pub tree: SignedTree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonStratum {
    pub l: QVec,
    pub dim: u64,
    #[serde(rename = "open_in_V")]
    pub open_in_v: bool,
    #[serde(rename = "support_V_l")]
    pub support_v_l: Vec<usize>,
    #[serde(rename = "support_V_l_plus")]
    pub support_v_l_plus: Vec<usize>,
    pub levi_roots: Vec<usize>,
    pub parabolic_roots: Vec<usize>,
    pub generic_rep: Vec<RepTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonNullcone {
    pub dim: u64,
    #[serde(rename = "equals_V")]
    pub equals_v: bool,
    pub max_components: Vec<usize>,
}

impl JsonReport {
    pub fn from_summary(s: &NullconeSummary) -> Self {
        JsonReport {
            candidates: s
                .candidates
                .iter()
                .map(|c| JsonCandidate {
                    l: c.candidate.l.clone(),
                    m: c.candidate.support.clone(),
                    stratifying: c.stratifying,
                    tree: c.tree.clone(),
                })
                .collect(),
            strata: s
                .strata
                .iter()
                .map(|st| JsonStratum {
                    l: st.l.clone(),
                    dim: st.dimension,
                    open_in_v: st.is_open_in_v,
                    support_v_l: st.support_v_l.clone(),
                    support_v_l_plus: st.support_v_l_plus.clone(),
                    levi_roots: st.levi_roots.clone(),
                    parabolic_roots: st.parabolic_roots.clone(),
                    generic_rep: st.generic_rep.terms.clone(),
                })
                .collect(),
            nullcone: JsonNullcone {
                dim: s.dim_nullcone,
                equals_v: s.equals_v,
                max_components: s.max_component_indices.clone(),
            },
        }
    }
}

/// Output of the `candidates` command: no trees are grown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCandidateList {
    pub candidates: Vec<JsonBareCandidate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonBareCandidate {
    pub l: QVec,
    #[serde(rename = "M")]
    pub m: Vec<usize>,
    pub roots_negative: usize,
    pub weights_below_one: u64,
    pub equality: bool,
    pub dim: u64,
}

impl JsonCandidateList {
    pub fn new(cs: &[Candidate]) -> Self {
        JsonCandidateList {
            candidates: cs
                .iter()
                .map(|c| JsonBareCandidate {
                    l: c.l.clone(),
                    m: c.support.clone(),
                    roots_negative: c.counts.roots_negative,
                    weights_below_one: c.counts.weights_below_one,
                    equality: c.counts.is_equality(),
                    dim: c.counts.stratum_dimension(),
                })
                .collect(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
