//! Hasse diagrams as Graphviz DOT or JSON.

use std::fmt::Write as _;

use evolat_core::lattice::{check_modular_law, find_pentagon, InfiniteLattice, LineFamily, PentagonWitness, SubalgebraLattice};
use evolat_core::regular::PlaneFamily;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HasseFormat {
    Dot,
    Json,
}

pub fn export_hasse(l: &SubalgebraLattice, format: HasseFormat) -> String {
    match format {
        HasseFormat::Dot => to_dot(l),
        HasseFormat::Json => serde_json::to_string_pretty(&to_json(l)).expect("json serializes") + "\n",
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Nodes in lattice order (dimension, then echelon form), one `rank=same`
/// group per dimension, edges along the covering relation.
pub fn to_dot(l: &SubalgebraLattice) -> String {
    let mut out = String::from("digraph subalgebras {\n  rankdir=BT;\n  node [shape=box];\n");
    for i in 0..l.len() {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", i, escape(&l.label(i)));
    }
    for d in 0..=l.algebra().dim() {
        let ids: Vec<String> = (0..l.len()).filter(|&i| l.nodes()[i].dim() == d).map(|i| format!("n{};", i)).collect();
        if !ids.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join(" "));
        }
    }
    for (lo, hi) in l.covers() {
        let _ = writeln!(out, "  n{} -> n{};", lo, hi);
    }
    out.push_str("}\n");
    out
}

fn pentagon_json(w: &PentagonWitness) -> Value {
    json!({"bottom": w.bottom, "x": w.x, "z": w.z, "y": w.y, "top": w.top})
}

pub fn to_json(l: &SubalgebraLattice) -> Value {
    let literal = |x: &evolat_core::Scalar| -> String {
        x.residue()
            .map(|r| r.to_string())
            .or_else(|| x.as_rational().map(|q| evolat_core::scalar::rational_literal(&q)))
            .unwrap_or_else(|| x.to_string())
    };
    let nodes: Vec<Value> = l
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let basis: Vec<Vec<String>> = s.rows().iter().map(|r| r.iter().map(literal).collect()).collect();
            json!({"id": i, "dim": s.dim(), "basis": basis, "label": l.label(i)})
        })
        .collect();
    let covers: Vec<[usize; 2]> = l.covers().into_iter().map(|(a, b)| [a, b]).collect();
    json!({
        "nodes": nodes,
        "covers": covers,
        "modular": check_modular_law(l).0,
        "pentagon": find_pentagon(l).as_ref().map(pentagon_json),
    })
}

/// DOT sketch of an infinite lattice: each family is drawn as a single node.
pub fn infinite_dot(inf: &InfiniteLattice) -> String {
    let e = &inf.algebra;
    let mut labels: Vec<(usize, String)> = vec![(0, "0".into())];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let lines: Vec<usize> = inf
        .lines
        .iter()
        .map(|s| e.format_subspace(s))
        .chain(inf.line_families.iter().map(|f| f.describe(e)))
        .map(|l| {
            labels.push((1, l));
            labels.len() - 1
        })
        .collect();
    let planes: Vec<usize> = inf
        .planes
        .iter()
        .map(|s| e.format_subspace(s))
        .chain(inf.plane_families.iter().map(|f| f.describe(e)))
        .map(|l| {
            labels.push((2, l));
            labels.len() - 1
        })
        .collect();
    labels.push((3, e.format_subspace(&e.whole())));
    let top = labels.len() - 1;
    let np = inf.planes.len();
    let nl = inf.lines.len();
    for (li, &lid) in lines.iter().enumerate() {
        edges.push((0, lid));
        let mut above = false;
        for (pi, &pid) in planes.iter().enumerate() {
            let inside = match (li < nl, pi < np) {
                (true, true) => inf.planes[pi].contains(&inf.lines[li]).unwrap_or(false),
                (true, false) => match &inf.plane_families[pi - np] {
                    PlaneFamily::Pencil { fixed, .. } => {
                        inf.lines[li].contains_vector(fixed)
                    }
                    PlaneFamily::AllPlanes => true,
                },
                (false, true) => match &inf.line_families[li - nl] {
                    LineFamily::InPlane(p) => p == &inf.planes[pi],
                    _ => false,
                },
                (false, false) => false,
            };
            if inside {
                edges.push((lid, pid));
                above = true;
            }
        }
        if !above {
            edges.push((lid, top));
        }
    }
    for &pid in &planes {
        if !edges.iter().any(|&(_, hi)| hi == pid) {
            edges.push((0, pid));
        }
        edges.push((pid, top));
    }
    let mut out = String::from("digraph subalgebras {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, (_, l)) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", i, escape(l));
    }
    for d in 0..=3 {
        let ids: Vec<String> = (0..labels.len()).filter(|&i| labels[i].0 == d).map(|i| format!("n{};", i)).collect();
        if !ids.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join(" "));
        }
    }
    for (lo, hi) in edges {
        let _ = writeln!(out, "  n{} -> n{};", lo, hi);
    }
    out.push_str("}\n");
    out
}
