//! The domination order on a finite family of models, exported as DOT.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linkage::{
    dominates_model, enumerate_models, model_gamma, LinkageClass, SubschemeModel,
};

/// Models of height at most `max_height` with θ in `[lo, hi]`, and every
/// pair `(i, j)`, `i != j`, with model `j` dominating model `i`.
#[derive(Clone, Debug)]
pub struct Poset {
    pub nodes: Vec<SubschemeModel>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Poset {
    pub fn build(class: &Arc<LinkageClass>, max_height: i64, lo: i64, hi: i64) -> Result<Self> {
        let nodes = enumerate_models(class, max_height, lo, hi)?;
        let mut edges = BTreeSet::new();
        for (i, x) in nodes.iter().enumerate() {
            for (j, y) in nodes.iter().enumerate() {
                if i != j && dominates_model(x, y)?.is_some() {
                    edges.insert((i, j));
                }
            }
        }
        Ok(Self { nodes, edges })
    }

    /// Node label: `h`, θ, then `(s0X, s1X, degree)`.
    pub fn label(x: &SubschemeModel) -> String {
        format!(
            "h={} theta={}\\n(s0X={}, s1X={}, deg={})",
            x.h(),
            x.theta(),
            x.s0(),
            x.s1(),
            model_gamma(x).degree()
        )
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph domination {\n");
        for (i, x) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\"];", Self::label(x)).expect("writing to a String");
        }
        for (i, j) in &self.edges {
            writeln!(out, "  n{i} -> n{j};").expect("writing to a String");
        }
        out.push_str("}\n");
        out
    }
}

/// Node labels and edges read back from DOT produced by [`Poset::to_dot`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDot {
    pub labels: Vec<String>,
    pub edges: BTreeSet<(usize, usize)>,
}

fn node_index(token: &str) -> Result<usize> {
    token
        .trim()
        .strip_prefix('n')
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Unknown(format!("DOT node '{token}'")))
}

pub fn parse_dot(text: &str) -> Result<ParsedDot> {
    let mut labels = Vec::new();
    let mut edges = BTreeSet::new();
    for line in text.lines().map(str::trim) {
        let Some(stmt) = line.strip_suffix(';') else {
            continue;
        };
        if let Some((a, b)) = stmt.split_once("->") {
            edges.insert((node_index(a)?, node_index(b)?));
        } else if let Some((node, rest)) = stmt.split_once(" [label=\"") {
            let idx = node_index(node)?;
            if idx != labels.len() {
                return Err(Error::Unknown(format!("DOT node n{idx} out of order")));
            }
            let label = rest
                .strip_suffix("\"]")
                .ok_or_else(|| Error::Unknown(format!("DOT label in '{line}'")))?;
            labels.push(label.to_string());
        }
    }
    if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| i.max(j) >= labels.len()) {
        return Err(Error::Unknown(format!(
            "DOT edge n{i} -> n{j} names an unknown node"
        )));
    }
    Ok(ParsedDot { labels, edges })
}
