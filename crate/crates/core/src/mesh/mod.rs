//! Combinatorics of `ZΔ` and of the AR quiver `Γ_Q` inside it.

pub mod coords;
mod functions;
mod gamma;
mod zdelta;

use std::fmt::Write;

pub use functions::{MeshCategory, MeshFunction, MeshValueJson, ObjectMultiset, SummandJson};
pub use gamma::GammaWindow;
pub use zdelta::{Functor, Mesh, ZDelta, ZVertex};

/// Graphviz rendering of `Γ_Q`: one node per vertex placed at
/// `(p, row)`, labelled with its position and dimension vector.
pub fn gamma_to_dot(cat: &MeshCategory) -> String {
    let graph = cat.graph();
    let mut out = String::from("digraph gamma {\n  node [shape=box, fontsize=10];\n");
    for &v in cat.gamma().vertices() {
        let d = cat.dimension_vector_of(v).expect("window vertex");
        let _ = writeln!(
            out,
            "  \"{p}_{a}\" [label=\"v({p},{l})\\n{d}\", pos=\"{p},{row}!\"];",
            p = v.p,
            a = v.a,
            l = graph.label(v.a),
            row = -(v.a as i64),
        );
    }
    for &v in cat.gamma().vertices() {
        for &b in graph.neighbors(v.a) {
            let w = ZVertex::new(v.p + 1, b);
            if cat.gamma().contains(w) {
                let _ = writeln!(out, "  \"{}_{}\" -> \"{}_{}\";", v.p, v.a, w.p, w.a);
            }
        }
    }
    for &m in cat.gamma().meshes() {
        let (l, r) = (m.left(), m.right());
        let _ = writeln!(
            out,
            "  \"{}_{}\" -> \"{}_{}\" [style=dashed, constraint=false];",
            r.p, r.a, l.p, l.a
        );
    }
    out.push_str("}\n");
    out
}
