use serde::{Deserialize, Serialize};

use crate::geometry::QVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Rooted tree of nested restrictions. A node is minus exactly when some
/// child is plus, so leaves are plus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedTree {
    pub l: QVec,
    pub sign: Sign,
    pub children: Vec<SignedTree>,
}

impl SignedTree {
    pub fn new(l: QVec, children: Vec<SignedTree>) -> Self {
        let sign = if children.iter().any(|c| c.sign == Sign::Plus) {
            Sign::Minus
        } else {
            Sign::Plus
        };
        SignedTree { l, sign, children }
    }

    pub fn leaf(l: QVec) -> Self {
        Self::new(l, Vec::new())
    }

    pub fn is_plus(&self) -> bool {
        self.sign == Sign::Plus
    }

    /// Number of edges on the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(SignedTree::node_count).sum::<usize>()
    }

    /// Structural violations: the local sign rule and plus-child uniqueness.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_violations(&mut out);
        out
    }

    fn collect_violations(&self, out: &mut Vec<String>) {
        let plus_children = self.children.iter().filter(|c| c.is_plus()).count();
        if self.is_plus() != (plus_children == 0) {
            out.push(format!("sign rule broken at {}", self.l));
        }
        if plus_children > 1 {
            out.push(format!("{} has {plus_children} plus children", self.l));
        }
        for c in &self.children {
            c.collect_violations(out);
        }
    }

    /// Indented one-node-per-line rendering.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(&mut s, 0);
        s
    }

    fn render_into(&self, s: &mut String, depth: usize) {
        let sign = if self.is_plus() { '+' } else { '-' };
        s.push_str(&format!("{}[{sign}] {}\n", "  ".repeat(depth), self.l));
        for c in &self.children {
            c.render_into(s, depth + 1);
        }
    }
}
