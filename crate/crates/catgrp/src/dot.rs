//! DOT export for group-groupoids: one node per object, one edge per
//! arrow from d0 to d1, labeled by the arrow index. Identity arrows are
//! suppressed unless asked for. Output is byte-stable for a fixed input.

use std::fmt::Write as _;

use crate::gpgd::Gpgd;

pub fn export_dot(g: &Gpgd, include_identities: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", g.name());
    for x in 0..g.objects().order() {
        let _ = writeln!(s, "  {x};");
    }
    let identities: Vec<usize> = (0..g.objects().order()).map(|x| g.eps(x)).collect();
    for a in 0..g.arrows().order() {
        if !include_identities && identities.contains(&a) {
            continue;
        }
        let _ = writeln!(s, "  {} -> {} [label=\"{a}\"];", g.d0(a), g.d1(a));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gpgd::{discrete_gpgd, pair_gpgd, zero_gpgd};
    use crate::group::FiniteGroup;

    fn edge_count(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn edge_counts() {
        // pair(Z2): 2 nodes, 2 non-identity edges.
        let dot = export_dot(&pair_gpgd(&FiniteGroup::cyclic(2)), false);
        assert_eq!(edge_count(&dot), 2);
        assert_eq!(edge_count(&export_dot(&pair_gpgd(&FiniteGroup::cyclic(2)), true)), 4);
        // Zero: 1 node, no edges.
        assert_eq!(edge_count(&export_dot(&zero_gpgd(), false)), 0);
        // Discrete: every arrow is an identity.
        assert_eq!(edge_count(&export_dot(&discrete_gpgd(&FiniteGroup::cyclic(3)), false)), 0);
    }

    #[test]
    fn byte_stable() {
        let g = pair_gpgd(&FiniteGroup::cyclic(3));
        assert_eq!(export_dot(&g, false), export_dot(&g, false));
        assert!(export_dot(&g, false).starts_with("digraph \"pair(Z3)\" {\n  0;\n"));
    }
}
