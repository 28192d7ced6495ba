//! Graphviz DOT export with colors as labels.

use std::fmt::Write;

use crate::coloring::Color;
use crate::graph::Graph;

/// Optional colors to attach; either side may be absent.
#[derive(Debug, Clone, Copy, Default)]
pub struct DotColors<'a> {
    pub vertices: Option<&'a [Color]>,
    pub edges: Option<&'a [Color]>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Render `g` as an undirected DOT graph. Vertex `i` is drawn as
/// `names[i]`; colors become `label` attributes.
pub fn to_dot(g: &Graph, names: &[String], colors: DotColors<'_>) -> String {
    assert_eq!(names.len(), g.vertex_count(), "one name per vertex");
    let mut out = String::from("graph G {\n");
    for (v, name) in names.iter().enumerate() {
        let _ = match colors.vertices {
            Some(c) => writeln!(
                out,
                "  {} [label={}, color_value={}];",
                quote(name),
                quote(&format!("{name}: {}", c[v])),
                c[v]
            ),
            None => writeln!(out, "  {};", quote(name)),
        };
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let _ = match colors.edges {
            Some(c) => writeln!(
                out,
                "  {} -- {} [label={}, color_value={}];",
                quote(&names[a]),
                quote(&names[b]),
                quote(&c[e].to_string()),
                c[e]
            ),
            None => writeln!(out, "  {} -- {};", quote(&names[a]), quote(&names[b])),
        };
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    #[test]
    fn colored_k2() {
        let spec = FamilySpec::Path { n: 2 };
        let g = spec.generate().unwrap();
        let dot = to_dot(
            &g,
            &spec.vertex_names(),
            DotColors {
                vertices: Some(&[1, 3]),
                edges: Some(&[2]),
            },
        );
        assert_eq!(
            dot,
            "graph G {\n  \"v1\" [label=\"v1: 1\", color_value=1];\n  \"v2\" [label=\"v2: 3\", color_value=3];\n  \"v1\" -- \"v2\" [label=\"2\", color_value=2];\n}\n"
        );
    }

    #[test]
    fn plain_wheel_uses_hub_name() {
        let spec = FamilySpec::Wheel { n: 4 };
        let dot = to_dot(&spec.generate().unwrap(), &spec.vertex_names(), DotColors::default());
        assert!(dot.contains("\"u\" -- \"v1\";"));
    }
}
