//! Routing constructions: forests to path and star forms, between forests
//! with the same component partition, cyclic graphs to girth 3, and the
//! re-attachment route behind the deletion-near-contraction relation.
//!
//! Whenever a construction has a free choice it takes the least vertex.

use super::Route;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Routes a forest to a disjoint union of paths with the same partition.
///
/// Each component keeps a path `L` (initially its lexicographically least
/// longest path). While an endpoint of `L` has an off-path neighbour, `L` is
/// extended by it. Otherwise the first interior vertex `L[i]` with an
/// off-path neighbour `w` hands `w` to `L[i - 1]`, which moves the branch one
/// position toward the start of `L`. A branch reaching `L[0]` extends `L`,
/// so the construction terminates after fewer than `n^2` steps.
pub fn route_to_path_form(f: &Graph) -> Result<Route> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut route = Route::trivial(*f);
    for comp in f.components() {
        let mut path = longest_path_in(f, comp);
        loop {
            let g = *route.end();
            let off = |v: usize| g.neighbors_mask(v) & !mask_of(&path);
            if let Some(x) = bits(off(path[0])).next() {
                path.insert(0, x);
                continue;
            }
            let last = *path.last().expect("nonempty path");
            if let Some(x) = bits(off(last)).next() {
                path.push(x);
                continue;
            }
            let Some(i) = (1..path.len()).find(|&i| off(path[i]) != 0) else {
                break;
            };
            let w = bits(off(path[i])).next().expect("nonzero mask");
            route.push_step(path[i], path[i - 1], w)?;
        }
    }
    Ok(route)
}

/// Routes a forest to a disjoint union of stars with the same partition.
///
/// In the first component that is not a star, `c` is its least vertex of
/// maximum degree, `w` the least vertex at distance 2 from `c` and `u` the
/// least common neighbour; the step at `(u, c, w)` moves `w` onto `c`,
/// raising the degree of `c` by one.
pub fn route_to_star_form(f: &Graph) -> Result<Route> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut route = Route::trivial(*f);
    while let Some(comp) = first_non_star(route.end()) {
        let g = *route.end();
        let c = max_degree_vertex(&g, comp);
        let second = bits(g.neighbors_mask(c)).fold(0u16, |m, u| m | g.neighbors_mask(u));
        let w = bits(second & !g.neighbors_mask(c) & !(1 << c)).next().expect("non-star has distance-2 vertex");
        let u = bits(g.neighbors_mask(c) & g.neighbors_mask(w)).next().expect("common neighbour");
        route.push_step(u, c, w)?;
    }
    Ok(route)
}

/// Routes a forest to star form through repeated re-attachment routes: `w`
/// is the least vertex of maximum degree in the first non-star component and
/// `u` its least neighbour of degree at least 2; every other neighbour of `u`
/// moves to `w`.
pub fn route_to_dnc_star_form(f: &Graph) -> Result<Route> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut route = Route::trivial(*f);
    while let Some(comp) = first_non_star(route.end()) {
        let g = *route.end();
        let w = max_degree_vertex(&g, comp);
        let u = g.neighbors(w).find(|&u| g.degree(u) >= 2).expect("non-star component");
        let (piece, _) = dnc_route(&g, w, u)?;
        route = route.concat(piece)?;
    }
    Ok(route)
}

/// The graphs of the relation `X(G) = X(G2) + X(P') - X(N')` produced by
/// [`dnc_route`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DncRelation {
    pub target: Graph,
    /// `G - wu`.
    pub positive: Graph,
    /// `G2 - wu`.
    pub negative: Graph,
}

/// Re-attaches to `w`, one step each in ascending order, every neighbour of
/// `u` other than `w` that is not already adjacent to `w`.
pub fn dnc_route(g: &Graph, w: usize, u: usize) -> Result<(Route, DncRelation)> {
    g.check_vertex(w)?;
    g.check_vertex(u)?;
    if !g.has_edge(w, u) {
        return Err(Error::NotAnEdge(w, u));
    }
    let movable = g.neighbors_mask(u) & !g.neighbors_mask(w) & !(1 << w);
    let mut route = Route::trivial(*g);
    for v in bits(movable) {
        route.push_step(u, w, v)?;
    }
    let target = *route.end();
    let relation = DncRelation { target, positive: g.without_edge(w, u), negative: target.without_edge(w, u) };
    Ok((route, relation))
}

/// `R1 || reverse(R2)` where `R1`, `R2` route `f1`, `f2` to path form.
///
/// The reversed half is relabeled so that it starts where `R1` ends; the
/// route therefore starts at `f1` and ends at a relabeling of `f2`.
pub fn route_between_forests(f1: &Graph, f2: &Graph) -> Result<Route> {
    route_between_with(f1, f2, route_to_path_form)
}

pub(crate) fn route_between_with(f1: &Graph, f2: &Graph, form: fn(&Graph) -> Result<Route>) -> Result<Route> {
    if f1.n() != f2.n() {
        return Err(Error::VertexCountMismatch(f1.n(), f2.n()));
    }
    if !f1.is_forest() || !f2.is_forest() {
        return Err(Error::NotAForest);
    }
    let (p1, p2) = (f1.part(), f2.part());
    if p1 != p2 {
        return Err(Error::PartitionMismatch(p1, p2));
    }
    let r1 = form(f1)?;
    let r2 = form(f2)?;
    let (k1, perm1) = crate::graph::canonical_form(r1.end());
    let (k2, perm2) = crate::graph::canonical_form(r2.end());
    debug_assert_eq!(k1, k2);
    let mut inv1 = vec![0; perm1.len()];
    for (v, &p) in perm1.iter().enumerate() {
        inv1[p] = v;
    }
    let perm: Vec<usize> = perm2.iter().map(|&p| inv1[p]).collect();
    r1.concat(r2.reversed().relabel(&perm))
}

/// Routes a graph with a cycle to a graph of girth 3.
///
/// With `c0 c1 ... c(g-1)` the shortest cycle found by [`Graph::shortest_cycle`],
/// step `i` moves `c1` from `c(i+1)` to `c(i+2)`, shortening the cycle by one.
pub fn route_to_girth3(g: &Graph) -> Result<Route> {
    let cycle = g.shortest_cycle().ok_or(Error::NoCycle)?;
    let len = cycle.len();
    let mut route = Route::trivial(*g);
    for i in 1..=len.saturating_sub(3) {
        route.push_step(cycle[i + 1], cycle[i + 2], cycle[1])?;
    }
    Ok(route)
}

fn mask_of(path: &[usize]) -> u16 {
    path.iter().fold(0, |m, &v| m | 1 << v)
}

/// The lexicographically least longest path inside the tree `comp`.
fn longest_path_in(g: &Graph, comp: u16) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in bits(comp) {
        let mut stack = vec![start];
        extend_paths(g, &mut stack, &mut best);
    }
    best
}

fn extend_paths(g: &Graph, path: &mut Vec<usize>, best: &mut Vec<usize>) {
    if path.len() > best.len() || (path.len() == best.len() && *path < *best) {
        *best = path.clone();
    }
    let last = *path.last().expect("nonempty");
    let used = mask_of(path);
    for v in bits(g.neighbors_mask(last) & !used) {
        path.push(v);
        extend_paths(g, path, best);
        path.pop();
    }
}

fn is_star(g: &Graph, comp: u16) -> bool {
    let size = comp.count_ones() as usize;
    size <= 2 || bits(comp).any(|v| g.degree(v) == size - 1)
}

/// The component (taken in order of least vertex) that is not a star.
fn first_non_star(g: &Graph) -> Option<u16> {
    g.components().into_iter().find(|&c| !is_star(g, c))
}

fn max_degree_vertex(g: &Graph, comp: u16) -> usize {
    let top = bits(comp).map(|v| g.degree(v)).max().expect("nonempty component");
    bits(comp).find(|&v| g.degree(v) == top).expect("maximum attained")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, GraphClass, SpecialKind};
    use crate::symmetric::csf;

    fn march_identity(route: &Route) -> bool {
        let m = route.march();
        let mut rhs = csf(route.end()).unwrap();
        for (p, q) in m.positive.iter().zip(&m.negative) {
            rhs = rhs.add(&csf(p).unwrap()).unwrap().sub(&csf(q).unwrap()).unwrap();
        }
        rhs == csf(route.start()).unwrap()
    }

    fn special(kind: SpecialKind, g: &Graph) -> Graph {
        Graph::special(kind, &g.part()).unwrap()
    }

    #[test]
    fn path_form_examples() {
        let st4 = Graph::star(4).unwrap();
        let r = route_to_path_form(&st4).unwrap();
        assert!(r.is_valid() && r.step_count() >= 1);
        assert!(r.end().is_isomorphic(&Graph::path(4).unwrap()));
        let p4 = Graph::path(4).unwrap();
        assert_eq!(route_to_path_form(&p4).unwrap(), Route::trivial(p4));
        let spider = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (0, 4)]).unwrap();
        let r = route_to_path_form(&spider).unwrap();
        assert!(r.is_valid());
        assert!(r.graphs().iter().all(|g| g.edge_count() == 4));
        assert!(r.end().is_isomorphic(&Graph::path(5).unwrap()));
        assert_eq!(route_to_path_form(&Graph::cycle(3).unwrap()), Err(Error::NotAForest));
    }

    #[test]
    fn star_form_examples() {
        let r = route_to_star_form(&Graph::path(4).unwrap()).unwrap();
        assert!(r.is_valid() && r.step_count() >= 1);
        assert!(r.end().is_isomorphic(&Graph::star(4).unwrap()));
        let st5 = Graph::star(5).unwrap();
        assert_eq!(route_to_star_form(&st5).unwrap().step_count(), 0);
        let f = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let r = route_to_star_form(&f).unwrap();
        assert!(r.graphs().iter().all(|g| g.part() == f.part()));
    }

    #[test]
    fn forms_reach_special_graphs_for_all_forests() {
        for n in 1..=8 {
            for f in enumerate_graphs(n, GraphClass::Forests).unwrap() {
                for (route, kind) in [
                    (route_to_path_form(&f).unwrap(), SpecialKind::PathFamily),
                    (route_to_star_form(&f).unwrap(), SpecialKind::StarFamily),
                    (route_to_dnc_star_form(&f).unwrap(), SpecialKind::StarFamily),
                ] {
                    assert!(route.is_valid());
                    assert_eq!(route.start(), &f);
                    assert!(route.end().is_isomorphic(&special(kind, &f)), "{f:?}");
                    assert!(route.graphs().iter().all(|g| g.part() == f.part() && g.edge_count() == f.edge_count()));
                    if n <= 6 {
                        assert!(march_identity(&route));
                    }
                }
            }
        }
    }

    #[test]
    fn between_forests() {
        let p4 = Graph::path(4).unwrap();
        let st4 = Graph::star(4).unwrap();
        let r = route_between_forests(&p4, &st4).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.start(), &p4);
        assert!(r.end().is_isomorphic(&st4));
        assert!(march_identity(&r));
        assert!(route_between_forests(&st4, &st4).unwrap().is_valid());
        let a = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(route_between_forests(&a, &b), Err(Error::PartitionMismatch(..))));
    }

    #[test]
    fn girth3_examples() {
        let r = route_to_girth3(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(r.step_count(), 2);
        assert_eq!(r.end().girth(), Some(3));
        assert_eq!(r.end().edge_count(), 5);
        assert!(march_identity(&r));
        assert_eq!(route_to_girth3(&Graph::cycle(3).unwrap()).unwrap().step_count(), 0);
        let c4k1 = Graph::cycle(4).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let r = route_to_girth3(&c4k1).unwrap();
        assert_eq!(r.step_count(), 1);
        assert_eq!(r.end().girth(), Some(3));
        assert_eq!(route_to_girth3(&Graph::path(4).unwrap()), Err(Error::NoCycle));
        for g in enumerate_graphs(6, GraphClass::All).unwrap() {
            if let Some(girth) = g.girth() {
                let r = route_to_girth3(&g).unwrap();
                assert!(r.is_valid());
                assert_eq!(r.step_count(), girth - 3);
                assert_eq!(r.end().girth(), Some(3));
            }
        }
    }

    #[test]
    fn dnc_examples() {
        let p4 = Graph::path(4).unwrap();
        let (r, rel) = dnc_route(&p4, 1, 2).unwrap();
        assert_eq!(r.step_count(), 1);
        assert_eq!(rel.target.edges(), vec![(0, 1), (1, 2), (1, 3)]);
        assert_eq!(rel.positive.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(rel.negative.edges(), vec![(0, 1), (1, 3)]);
        let lhs = csf(&p4).unwrap();
        let rhs = csf(&rel.target).unwrap().add(&csf(&rel.positive).unwrap()).unwrap();
        assert_eq!(lhs, rhs.sub(&csf(&rel.negative).unwrap()).unwrap());

        let (r, rel) = dnc_route(&p4, 1, 0).unwrap();
        assert_eq!(r.step_count(), 0);
        assert_eq!(rel.positive, rel.negative);
        let (r, _) = dnc_route(&Graph::complete(3).unwrap(), 0, 1).unwrap();
        assert_eq!(r.step_count(), 0);
        assert_eq!(dnc_route(&p4, 0, 2).unwrap_err(), Error::NotAnEdge(0, 2));
    }

    #[test]
    fn dnc_relation_and_telescoping_on_forests() {
        for n in 2..=7 {
            for f in enumerate_graphs(n, GraphClass::Forests).unwrap() {
                for (w, u) in f.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]) {
                    let (r, rel) = dnc_route(&f, w, u).unwrap();
                    assert!(r.is_valid());
                    let steps = r.steps();
                    for pair in steps.windows(2) {
                        assert_eq!(pair[0].negative_remainder, pair[1].positive_remainder);
                    }
                    if let (Some(first), Some(last)) = (steps.first(), steps.last()) {
                        assert_eq!(first.positive_remainder, rel.positive);
                        assert_eq!(last.negative_remainder, rel.negative);
                    }
                    if n <= 5 {
                        let rhs = csf(&rel.target).unwrap().add(&csf(&rel.positive).unwrap()).unwrap();
                        assert_eq!(csf(&f).unwrap(), rhs.sub(&csf(&rel.negative).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}
