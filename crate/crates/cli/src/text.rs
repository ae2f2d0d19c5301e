//! Human-readable reports.

use std::fmt::Write;

use nullcone_core::candidates::Candidate;
use nullcone_core::{GenericRepresentative, NullconeSummary, ValidatedProblem};

fn index_list(ix: &[usize]) -> String {
    let parts: Vec<String> = ix.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn header(p: &ValidatedProblem) -> String {
    format!(
        "rank {}, dim V = {}, {} distinct weights, {} roots, Weyl generators: {}\n",
        p.rank(),
        p.dim_v(),
        p.weights.len(),
        p.roots.len(),
        p.weyl.generators.len()
    )
}

pub fn weights(p: &ValidatedProblem) -> String {
    let mut s = String::from("weights (index: vector x multiplicity):\n");
    for (i, w) in p.weights.iter().enumerate() {
        let _ = writeln!(s, "  {i:>3}: {} x {}", w.v, w.mult);
    }
    s
}

pub fn candidates(cs: &[Candidate]) -> String {
    let mut s = format!("candidates ({}):\n", cs.len());
    for (i, c) in cs.iter().enumerate() {
        let k = &c.counts;
        let _ = writeln!(
            s,
            "  l_{} = {}  M = {}  negative roots {} <= {} weights below 1{}  dim {}",
            i + 1,
            c.l,
            index_list(&c.support),
            k.roots_negative,
            k.weights_below_one,
            if k.is_equality() { " (equality)" } else { "" },
            k.stratum_dimension()
        );
    }
    s
}

pub fn trees(summary: &NullconeSummary) -> String {
    let mut s = String::new();
    for (i, c) in summary.candidates.iter().enumerate() {
        let _ = writeln!(
            s,
            "tree of l_{} ({}):",
            i + 1,
            if c.stratifying { "stratifying" } else { "not stratifying" }
        );
        for line in c.tree.render().lines() {
            let _ = writeln!(s, "  {line}");
        }
    }
    s
}

pub fn summary(summary: &NullconeSummary) -> String {
    let mut s = String::new();
    let excluded = summary.candidates.iter().filter(|c| !c.stratifying).count();
    let _ = writeln!(
        s,
        "{} candidates, {} strata ({} not stratifying)",
        summary.candidates.len(),
        summary.strata.len(),
        excluded
    );
    for (i, c) in summary.candidates.iter().enumerate() {
        let _ = writeln!(
            s,
            "  l_{} = {}  M = {}  {}",
            i + 1,
            c.candidate.l,
            index_list(&c.candidate.support),
            if c.stratifying { "stratifying" } else { "excluded" }
        );
    }
    let _ = writeln!(s, "strata:");
    for st in &summary.strata {
        let _ = writeln!(
            s,
            "  H[{}]  dim {}{}\n    V[l] = {}  V[l+] = {}\n    levi roots {}  parabolic roots {}\n    representative: {}",
            st.l,
            st.dimension,
            if st.is_open_in_v { "  (open in V)" } else { "" },
            index_list(&st.support_v_l),
            index_list(&st.support_v_l_plus),
            index_list(&st.levi_roots),
            index_list(&st.parabolic_roots),
            st.generic_rep
        );
    }
    if !summary.strata.is_empty() {
        let _ = writeln!(s, "  note: {}", GenericRepresentative::CAVEAT);
    }
    let comps: Vec<String> = summary
        .max_component_indices
        .iter()
        .map(|&i| summary.strata[i].l.to_string())
        .collect();
    let _ = writeln!(
        s,
        "null-cone: dim {}, equals V: {}, maximal components: {}",
        summary.dim_nullcone,
        if summary.equals_v { "yes" } else { "no" },
        if comps.is_empty() { "none".to_string() } else { comps.join(", ") }
    );
    s
}
