//! Graphviz DOT export of Hasse diagrams: cover edges only, drawn from the
//! lower element to the upper one.

use crate::order::Poset;

pub fn poset_to_dot(poset: &Poset, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", name));
    out.push_str("  rankdir=BT;\n");
    for e in poset.elements() {
        out.push_str(&format!("  \"{}\";\n", e));
    }
    for &(lo, hi) in poset.covers() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            poset.element(lo),
            poset.element(hi)
        ));
    }
    out.push_str("}\n");
    out
}
