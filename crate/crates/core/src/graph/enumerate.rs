//! Isomorphism-class enumeration by vertex augmentation.
//!
//! Every graph on `n` vertices is a graph on `n - 1` vertices plus one vertex
//! joined to some subset of the others, so the classes on `n` vertices are
//! the canonical forms of all such extensions of the classes on `n - 1`.
//! Forests are extended by an isolated vertex or a leaf, trees by a leaf.

use std::collections::BTreeMap;

use super::{CanonicalKey, Graph, GraphClass};
use crate::error::Result;
use crate::limits;
use crate::par::{self, Exec};

/// One canonical representative per isomorphism class, sorted by key.
pub fn enumerate_graphs(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    enumerate_graphs_with(n, class, Exec::default())
}

pub fn enumerate_graphs_with(n: usize, class: GraphClass, exec: Exec) -> Result<Vec<Graph>> {
    let limit = match class {
        GraphClass::All => limits::ENUM_ALL_MAX_N,
        GraphClass::Forests | GraphClass::Trees => limits::ENUM_FOREST_MAX_N,
    };
    limits::guard("enumeration vertex count", n, limit)?;
    if n == 0 {
        return Ok(if class == GraphClass::Trees { vec![] } else { vec![Graph::empty(0)?] });
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        let extensions = par::flat_map(exec, &level, |g| extend(g, class, m));
        let classes: BTreeMap<CanonicalKey, ()> = extensions.into_iter().map(|k| (k, ())).collect();
        level = classes.into_keys().map(|k| k.graph()).collect();
    }
    Ok(level)
}

fn extend(g: &Graph, class: GraphClass, m: usize) -> Vec<CanonicalKey> {
    let base = {
        let mut h = Graph::empty(m).expect("guarded");
        for (u, v) in g.edges() {
            h.set_edge(u, v, true);
        }
        h
    };
    let new = m - 1;
    let neighbourhoods: Vec<u16> = match class {
        GraphClass::All => (0..1u16 << (m - 1)).collect(),
        GraphClass::Forests => std::iter::once(0).chain((0..new).map(|v| 1 << v)).collect(),
        GraphClass::Trees => (0..new).map(|v| 1 << v).collect(),
    };
    neighbourhoods
        .into_iter()
        .map(|mask| {
            let mut h = base;
            for v in super::bits(mask) {
                h.set_edge(v, new, true);
            }
            h.key()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_counts() {
        // OEIS A000088, A005195, A000055.
        let all = [1, 2, 4, 11, 34, 156, 1044];
        let forests = [1, 2, 3, 6, 10, 20, 37, 76, 153];
        let trees = [1, 1, 1, 2, 3, 6, 11, 23, 47];
        for n in 1..=7 {
            assert_eq!(enumerate_graphs(n, GraphClass::All).unwrap().len(), all[n - 1], "all n={n}");
        }
        for n in 1..=9 {
            assert_eq!(enumerate_graphs(n, GraphClass::Forests).unwrap().len(), forests[n - 1]);
            assert_eq!(enumerate_graphs(n, GraphClass::Trees).unwrap().len(), trees[n - 1]);
        }
    }

    #[test]
    fn examples() {
        let trees = enumerate_graphs(4, GraphClass::Trees).unwrap();
        assert_eq!(trees.len(), 2);
        assert!(trees.iter().any(|t| t.is_isomorphic(&Graph::path(4).unwrap())));
        assert!(trees.iter().any(|t| t.is_isomorphic(&Graph::star(4).unwrap())));
        assert_eq!(enumerate_graphs(1, GraphClass::All).unwrap().len(), 1);
    }

    #[test]
    fn sorted_and_members() {
        let gs = enumerate_graphs(6, GraphClass::Forests).unwrap();
        assert!(gs.windows(2).all(|w| w[0].key() < w[1].key()));
        assert!(gs.iter().all(|g| g.is_forest() && g.key().graph() == *g));
    }

    #[test]
    fn modes_agree() {
        let a = enumerate_graphs_with(6, GraphClass::All, Exec::Parallel).unwrap();
        let b = enumerate_graphs_with(6, GraphClass::All, Exec::Sequential).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn guard() {
        assert!(enumerate_graphs(10, GraphClass::All).unwrap_err().is_resource());
        assert!(enumerate_graphs(13, GraphClass::Trees).unwrap_err().is_resource());
    }
}
