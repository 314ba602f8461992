//! The hierarchy of hypergeometric orthogonal polynomials as a directed
//! acyclic graph of parameter limits.
//!
//! Nodes are the thirteen classical families; an edge `A -> B` records that
//! `B` arises from `A` by a limiting procedure on parameters.  One of these
//! limits — Wilson polynomials degenerating to Hahn polynomials — is exactly
//! the polynomial shadow of the sphere-to-flat operator contraction verified
//! in [`crate::racah`], and its edge carries that label.

use serde::Serialize;

/// One polynomial family in the hierarchy.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyNode {
    pub name: &'static str,
    /// Hypergeometric type, e.g. `4F3` for Wilson.
    pub kind: &'static str,
}

/// One limit arrow between families.
#[derive(Clone, Debug, Serialize)]
pub struct LimitEdge {
    pub from: &'static str,
    pub to: &'static str,
    /// Extra annotation; set on edges realized by a verified system
    /// contraction.
    pub label: Option<&'static str>,
}

/// The scheme: thirteen families and their limit arrows.
#[derive(Clone, Debug, Serialize)]
pub struct Scheme {
    pub nodes: Vec<FamilyNode>,
    pub edges: Vec<LimitEdge>,
}

/// Build the full scheme.
pub fn scheme() -> Scheme {
    let node = |name, kind| FamilyNode { name, kind };
    let nodes = vec![
        node("Wilson", "4F3"),
        node("Racah", "4F3"),
        node("Continuous dual Hahn", "3F2"),
        node("Continuous Hahn", "3F2"),
        node("Hahn", "3F2"),
        node("Dual Hahn", "3F2"),
        node("Meixner-Pollaczek", "2F1"),
        node("Jacobi", "2F1"),
        node("Meixner", "2F1"),
        node("Krawtchouk", "2F1"),
        node("Laguerre", "1F1"),
        node("Charlier", "2F0"),
        node("Hermite", "2F0"),
    ];
    let plain = |from, to| LimitEdge {
        from,
        to,
        label: None,
    };
    let edges = vec![
        plain("Wilson", "Continuous dual Hahn"),
        plain("Wilson", "Continuous Hahn"),
        plain("Wilson", "Jacobi"),
        // The polynomial limit realized by the S9 -> E1 operator
        // contraction: large third parameter sends the Wilson recurrence
        // to the Hahn recurrence.
        LimitEdge {
            from: "Wilson",
            to: "Hahn",
            label: Some("S9 -> E1"),
        },
        plain("Racah", "Hahn"),
        plain("Racah", "Dual Hahn"),
        plain("Continuous dual Hahn", "Meixner-Pollaczek"),
        plain("Continuous Hahn", "Meixner-Pollaczek"),
        plain("Continuous Hahn", "Jacobi"),
        plain("Hahn", "Jacobi"),
        plain("Hahn", "Meixner"),
        plain("Hahn", "Krawtchouk"),
        plain("Dual Hahn", "Meixner"),
        plain("Dual Hahn", "Krawtchouk"),
        plain("Meixner-Pollaczek", "Laguerre"),
        plain("Meixner-Pollaczek", "Hermite"),
        plain("Jacobi", "Laguerre"),
        plain("Jacobi", "Hermite"),
        plain("Meixner", "Laguerre"),
        plain("Meixner", "Charlier"),
        plain("Krawtchouk", "Charlier"),
        plain("Krawtchouk", "Hermite"),
        plain("Laguerre", "Hermite"),
        plain("Charlier", "Hermite"),
    ];
    Scheme { nodes, edges }
}

impl Scheme {
    /// True when every edge endpoint names a node and no directed cycle
    /// exists.
    pub fn is_acyclic(&self) -> bool {
        let index = |name: &str| self.nodes.iter().position(|n| n.name == name);
        let n = self.nodes.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            match (index(e.from), index(e.to)) {
                (Some(a), Some(b)) => adj[a].push(b),
                _ => return false,
            }
        }
        // Kahn's algorithm: the scheme is acyclic iff all nodes drain.
        let mut indeg = vec![0usize; n];
        for row in &adj {
            for &b in row {
                indeg[b] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &b in &adj[v] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    queue.push(b);
                }
            }
        }
        seen == n
    }

    /// Render as a Graphviz DOT digraph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph askey {\n  rankdir=TB;\n");
        for node in &self.nodes {
            out.push_str(&format!(
                "  \"{}\" [label=\"{}\\n{}\"];\n",
                node.name, node.name, node.kind
            ));
        }
        for e in &self.edges {
            match e.label {
                Some(l) => out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\", penwidth=2];\n",
                    e.from, e.to, l
                )),
                None => out.push_str(&format!("  \"{}\" -> \"{}\";\n", e.from, e.to)),
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_is_a_dag_with_thirteen_families() {
        let s = scheme();
        assert_eq!(s.nodes.len(), 13);
        assert!(s.is_acyclic());
        // Every family except the roots is reachable as a limit.
        for node in &s.nodes {
            let is_root = matches!(node.name, "Wilson" | "Racah");
            let has_parent = s.edges.iter().any(|e| e.to == node.name);
            assert!(is_root || has_parent, "{} unreachable", node.name);
        }
    }

    #[test]
    fn verified_contraction_edge_is_present() {
        let s = scheme();
        let edge = s
            .edges
            .iter()
            .find(|e| e.from == "Wilson" && e.to == "Hahn")
            .expect("missing Wilson -> Hahn edge");
        assert_eq!(edge.label, Some("S9 -> E1"));
        assert!(s.to_dot().contains("S9 -> E1"));
    }
}
