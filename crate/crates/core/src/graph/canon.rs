//! Canonical labeling by individualization and refinement.
//!
//! The search starts from the unit partition of the vertex set, refines it to
//! an equitable ordered partition, and then branches by individualizing each
//! vertex of the first non-singleton cell. Every leaf is a discrete ordered
//! partition, i.e. a relabeling; the canonical form is the relabeling with the
//! largest adjacency code. Refinement only ever sorts by structural
//! signatures, so the tree of codes is a graph invariant.
//!
//! Two vertices of the target cell that are twins (same neighbourhood apart
//! from each other) are exchanged by an automorphism fixing everything else,
//! so only one of them is branched on.

use std::fmt;

use super::{bits, Graph, MAX_VERTICES};

/// Isomorphism-class key: vertex count plus the canonical adjacency code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    code: u128,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Big-endian byte serialization: `n` followed by the 16-byte code.
    pub fn to_bytes(&self) -> [u8; 17] {
        let mut out = [0u8; 17];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.code.to_be_bytes());
        out
    }

    /// The canonical representative this key encodes.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n).expect("key vertex count is in range");
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    g.set_edge(i, j, true);
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", super::to_graph6(&self.graph()))
    }
}

/// Returns the canonical key and a relabeling `perm` (vertex `v` goes to
/// `perm[v]`) taking `g` to the canonical representative.
pub fn canonical_form(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let n = g.n();
    if n <= 1 {
        return (CanonicalKey { n: n as u8, code: 0 }, (0..n).collect());
    }
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut best: Option<(u128, Vec<u16>)> = None;
    search(g, cells, &mut best);
    let (code, leaf) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, cell) in leaf.iter().enumerate() {
        perm[cell.trailing_zeros() as usize] = pos;
    }
    (CanonicalKey { n: n as u8, code }, perm)
}

fn search(g: &Graph, cells: Vec<u16>, best: &mut Option<(u128, Vec<u16>)>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let code = leaf_code(g, &cells);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, cells));
        }
        return;
    };
    let cell = cells[target];
    let mut seen: u16 = 0;
    for v in bits(cell) {
        if seen & (1 << v) != 0 {
            continue;
        }
        seen |= twins_in(g, cell, v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(1 << v);
        next.push(cell & !(1 << v));
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Vertices of `cell` (including `v`) whose neighbourhood equals `v`'s up to
/// the pair itself.
fn twins_in(g: &Graph, cell: u16, v: usize) -> u16 {
    let nv = g.neighbors_mask(v);
    let mut out = 1 << v;
    for u in bits(cell & !(1 << v)) {
        let mask = !((1u16 << u) | (1u16 << v));
        if g.neighbors_mask(u) & mask == nv & mask {
            out |= 1 << u;
        }
    }
    out
}

/// Splits cells by their neighbour counts into every cell until the ordered
/// partition is equitable. Sub-cells are ordered by signature.
fn refine(g: &Graph, cells: &mut Vec<u16>) {
    loop {
        let snapshot = cells.clone();
        let mut next = Vec::with_capacity(MAX_VERTICES);
        let mut changed = false;
        for &cell in &snapshot {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(Vec<u8>, u16)> = Vec::new();
            for v in bits(cell) {
                let sig: Vec<u8> =
                    snapshot.iter().map(|&c| (g.neighbors_mask(v) & c).count_ones() as u8).collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, m)) => *m |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            if groups.len() > 1 {
                changed = true;
                groups.sort_by(|a, b| a.0.cmp(&b.0));
            }
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn leaf_code(g: &Graph, cells: &[u16]) -> u128 {
    let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn graph_from_bits(n: usize, bits: u32) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits & (1 << k) != 0 {
                    g.set_edge(i, j, true);
                }
                k += 1;
            }
        }
        g
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relabelings_share_keys() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(p3.key(), p3b.key());
        let p4 = Graph::path(4).unwrap();
        let st4 = Graph::star(4).unwrap();
        assert_ne!(p4.key(), st4.key());
    }

    #[test]
    fn relabeling_reaches_representative() {
        for bits in (0u32..(1 << 15)).step_by(97) {
            let g = graph_from_bits(6, bits);
            let (key, perm) = canonical_form(&g);
            assert_eq!(g.relabel(&perm), key.graph());
            // idempotent
            assert_eq!(canonical_form(&key.graph()).0, key);
        }
    }

    #[test]
    fn six_vertex_classes_by_orbit() {
        // Oracle: orbit representative = minimum labeled code over all 720
        // relabelings.
        let perms = permutations(6);
        let mut orbit_reps = HashSet::new();
        let mut keys = HashSet::new();
        for bits in 0u32..(1 << 15) {
            let g = graph_from_bits(6, bits);
            let rep = perms.iter().map(|p| super::super::to_graph6(&g.relabel(p))).min().unwrap();
            orbit_reps.insert(rep);
            keys.insert(g.key());
        }
        assert_eq!(orbit_reps.len(), 156);
        assert_eq!(keys.len(), 156);
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        for n in 1..=16 {
            let e = Graph::empty(n).unwrap();
            let k = Graph::complete(n).unwrap();
            let s = Graph::star(n).unwrap();
            assert_eq!(e.key().graph(), e);
            assert_eq!(k.key().graph(), k);
            assert!(s.key().graph().is_isomorphic(&s));
        }
    }
}
