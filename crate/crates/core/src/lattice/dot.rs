use std::fmt::Write;

use super::SubgroupLattice;

/// Graphviz rendering of the cover relation, one node per subgroup labelled
/// `order:index`. Normal subgroups are boxes, modular ones are filled, and
/// S-quasinormal ones get a double border. Each edge runs from a subgroup up to
/// a subgroup it is maximal in.
pub fn to_dot(lat: &SubgroupLattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", lat.group().name().replace('"', "'")).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [fontname=\"monospace\"];").unwrap();
    for i in 0..lat.len() {
        let mut attrs = vec![format!("label=\"{}:{}\"", lat.order_of(i), i)];
        attrs.push(format!("shape={}", if lat.is_normal(i) { "box" } else { "ellipse" }));
        if lat.is_modular(i) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=\"lightblue\"".into());
        }
        if lat.is_s_quasinormal(i) {
            attrs.push("peripheries=2".into());
        }
        writeln!(out, "  n{i} [{}];", attrs.join(", ")).unwrap();
    }
    for j in 0..lat.len() {
        for &i in lat.maximal_subgroups(j) {
            writeln!(out, "  n{i} -> n{j};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
