//! Hasse-diagram export in the Graphviz DOT textual format, with nodes
//! ranked by the dimension function.

use std::collections::BTreeMap;

use coxkl_core::coxeter::CoxeterSystem;
use coxkl_core::springer::VElement;

use crate::grammar;

/// Renders a digraph whose arrows are the given cover relations
/// `(lower, upper)`; nodes of equal dimension share a rank.
pub fn hasse_dot(
    sys: &CoxeterSystem,
    nodes: &[VElement],
    covers: &[(VElement, VElement)],
) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    let mut ids: BTreeMap<&VElement, usize> = BTreeMap::new();
    for (k, v) in nodes.iter().enumerate() {
        ids.insert(v, k);
        out.push_str(&format!(
            "  n{k} [label=\"{}\\nd={}\"];\n",
            grammar::format_velement(sys, v),
            v.dim()
        ));
    }
    let mut by_dim: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (k, v) in nodes.iter().enumerate() {
        by_dim.entry(v.dim()).or_default().push(k);
    }
    for (_, group) in &by_dim {
        out.push_str("  { rank=same;");
        for k in group {
            out.push_str(&format!(" n{k};"));
        }
        out.push_str(" }\n");
    }
    for (w, v) in covers {
        if let (Some(a), Some(b)) = (ids.get(w), ids.get(v)) {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
    }
    out.push_str("}\n");
    out
}
