//! Steps, routes and marches.
//!
//! A step rewrites a cherry `v2 - v1 - v3` (with `v2 v3` not an edge) of a
//! graph `G1` into
//!
//! - the target `G2 = G1 - v1v3 + v2v3`,
//! - the positive remainder `P = G1 - v1v2`,
//! - the negative remainder `N = G1 - v1v2 - v1v3 + v2v3`,
//!
//! and the chromatic symmetric functions satisfy `X(G1) = X(G2) + X(P) - X(N)`.
//! Chaining steps gives a route, and summing the relation along a route gives
//! `X(G1) = X(Gk) + sum X(P_i) - sum X(N_i)` (the march identity).

mod basis;
mod expand;
mod forms;

use rand::Rng;

pub use basis::{BasisName, ChromaticBasis};
pub use expand::{
    expand_in_forest_basis, expand_via_linear_solve, truncate_expansion, BasisExpansion, Expander, Strategy,
};
pub use forms::{
    dnc_route, route_between_forests, route_to_dnc_star_form, route_to_girth3, route_to_path_form,
    route_to_star_form, DncRelation,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub source: Graph,
    pub target: Graph,
    pub positive_remainder: Graph,
    pub negative_remainder: Graph,
    /// `(v1, v2, v3)`: `v1` is adjacent to both others, which are not adjacent.
    pub witness: (usize, usize, usize),
}

/// Applies the step at the cherry `v2 - v1 - v3`.
pub fn step(g: &Graph, v1: usize, v2: usize, v3: usize) -> Result<Step> {
    let fail = |reason: String| Error::StepWitness { v1, v2, v3, reason };
    for v in [v1, v2, v3] {
        if v >= g.n() {
            return Err(fail(format!("vertex {v} out of range")));
        }
    }
    if v1 == v2 || v1 == v3 || v2 == v3 {
        return Err(fail("vertices are not distinct".into()));
    }
    if !g.has_edge(v1, v2) {
        return Err(fail(format!("{v1}{v2} is not an edge")));
    }
    if !g.has_edge(v1, v3) {
        return Err(fail(format!("{v1}{v3} is not an edge")));
    }
    if g.has_edge(v2, v3) {
        return Err(fail(format!("{v2}{v3} is an edge")));
    }
    let target = g.without_edge(v1, v3).with_edge(v2, v3);
    let positive_remainder = g.without_edge(v1, v2);
    let negative_remainder = target.without_edge(v1, v2);
    Ok(Step { source: *g, target, positive_remainder, negative_remainder, witness: (v1, v2, v3) })
}

impl Step {
    /// The step from `target` back to `source`; the remainders swap roles.
    pub fn reversed(&self) -> Step {
        let (v1, v2, v3) = self.witness;
        Step {
            source: self.target,
            target: self.source,
            positive_remainder: self.negative_remainder,
            negative_remainder: self.positive_remainder,
            witness: (v2, v1, v3),
        }
    }

    pub fn relabel(&self, perm: &[usize]) -> Step {
        let (v1, v2, v3) = self.witness;
        Step {
            source: self.source.relabel(perm),
            target: self.target.relabel(perm),
            positive_remainder: self.positive_remainder.relabel(perm),
            negative_remainder: self.negative_remainder.relabel(perm),
            witness: (perm[v1], perm[v2], perm[v3]),
        }
    }

    /// Re-derives the step from its witness and compares.
    pub fn is_valid(&self) -> bool {
        let (v1, v2, v3) = self.witness;
        step(&self.source, v1, v2, v3).is_ok_and(|s| s == *self)
    }
}

/// Every ordered witness `(v1, v2, v3)` at which a step can be taken.
pub fn step_witnesses(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for v1 in 0..g.n() {
        for v2 in g.neighbors(v1) {
            for v3 in g.neighbors(v1) {
                if v2 != v3 && !g.has_edge(v2, v3) {
                    out.push((v1, v2, v3));
                }
            }
        }
    }
    out
}

/// A sequence of graphs joined by steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    graphs: Vec<Graph>,
    steps: Vec<Step>,
}

impl Route {
    /// The single-graph route with no steps.
    pub fn trivial(g: Graph) -> Route {
        Route { graphs: vec![g], steps: Vec::new() }
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn start(&self) -> &Graph {
        &self.graphs[0]
    }

    pub fn end(&self) -> &Graph {
        self.graphs.last().expect("route is nonempty")
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Extends the route by a step taken at its current end.
    pub fn push_step(&mut self, v1: usize, v2: usize, v3: usize) -> Result<&Step> {
        let s = step(self.end(), v1, v2, v3)?;
        self.graphs.push(s.target);
        self.steps.push(s);
        Ok(self.steps.last().expect("just pushed"))
    }

    /// `self || other`; `other` must start exactly where `self` ends.
    pub fn concat(mut self, other: Route) -> Result<Route> {
        if other.start() != self.end() {
            return Err(Error::RouteMismatch);
        }
        self.graphs.extend_from_slice(&other.graphs[1..]);
        self.steps.extend(other.steps);
        Ok(self)
    }

    pub fn reversed(&self) -> Route {
        Route {
            graphs: self.graphs.iter().rev().copied().collect(),
            steps: self.steps.iter().rev().map(Step::reversed).collect(),
        }
    }

    pub fn relabel(&self, perm: &[usize]) -> Route {
        Route {
            graphs: self.graphs.iter().map(|g| g.relabel(perm)).collect(),
            steps: self.steps.iter().map(|s| s.relabel(perm)).collect(),
        }
    }

    /// Checks that consecutive graphs are joined by their recorded steps.
    pub fn is_valid(&self) -> bool {
        self.graphs.len() == self.steps.len() + 1
            && self.steps.iter().enumerate().all(|(i, s)| {
                s.is_valid() && s.source == self.graphs[i] && s.target == self.graphs[i + 1]
            })
    }

    pub fn march(&self) -> March {
        march(self)
    }
}

/// The positive and negative remainder sequences of a route.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct March {
    pub positive: Vec<Graph>,
    pub negative: Vec<Graph>,
}

pub fn march(route: &Route) -> March {
    March {
        positive: route.steps.iter().map(|s| s.positive_remainder).collect(),
        negative: route.steps.iter().map(|s| s.negative_remainder).collect(),
    }
}

impl March {
    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }
}

/// Splits `g` at a triangle `e1, e2, e3` into `(g - e1, g - e2, g - e1 - e2)`,
/// for which `X(g) = X(g - e1) + X(g - e2) - X(g - e1 - e2)`.
pub fn triangle_split(
    g: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
    e3: (usize, usize),
) -> Result<(Graph, Graph, Graph)> {
    let edges = [e1, e2, e3];
    for &(u, v) in &edges {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
    }
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    let distinct = norm(e1) != norm(e2) && norm(e1) != norm(e3) && norm(e2) != norm(e3);
    if verts.len() != 3 || !distinct {
        return Err(Error::NotATriangle);
    }
    let g23 = g.without_edge(e1.0, e1.1);
    let g13 = g.without_edge(e2.0, e2.1);
    let g3 = g23.without_edge(e2.0, e2.1);
    Ok((g23, g13, g3))
}

/// The lexicographically least triangle `(a, b, c)`, `a < b < c`.
pub fn first_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    for a in 0..g.n() {
        for b in g.neighbors(a).filter(|&b| b > a) {
            let common = g.neighbors_mask(a) & g.neighbors_mask(b) & !((1u16 << (b + 1)) - 1);
            if common != 0 {
                return Some((a, b, common.trailing_zeros() as usize));
            }
        }
    }
    None
}

/// A route of up to `len` uniformly random steps starting at `g`.
pub fn random_route<R: Rng>(g: &Graph, len: usize, rng: &mut R) -> Route {
    let mut route = Route::trivial(*g);
    for _ in 0..len {
        let witnesses = step_witnesses(route.end());
        if witnesses.is_empty() {
            break;
        }
        let (v1, v2, v3) = witnesses[rng.gen_range(0..witnesses.len())];
        route.push_step(v1, v2, v3).expect("witness is valid");
    }
    route
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::csf;
    use rand::SeedableRng;

    fn step_identity_holds(s: &Step) -> bool {
        let lhs = csf(&s.source).unwrap();
        let rhs = csf(&s.target).unwrap().add(&csf(&s.positive_remainder).unwrap()).unwrap().sub(&csf(&s.negative_remainder).unwrap()).unwrap();
        lhs == rhs
    }

    #[test]
    fn step_on_p3() {
        // a - b - c with a=0, b=1, c=2; (v1, v2, v3) = (b, a, c)
        let p3 = Graph::path(3).unwrap();
        let s = step(&p3, 1, 0, 2).unwrap();
        assert_eq!(s.target.edges(), vec![(0, 1), (0, 2)]);
        let k2k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(s.positive_remainder.is_isomorphic(&k2k1));
        assert!(s.negative_remainder.is_isomorphic(&k2k1));
        assert!(step_identity_holds(&s));
    }

    #[test]
    fn step_on_star_makes_broom() {
        let st4 = Graph::star(4).unwrap();
        let s = step(&st4, 0, 1, 2).unwrap();
        assert_eq!(s.target.edges(), vec![(0, 1), (0, 3), (1, 2)]);
        assert!(s.target.is_isomorphic(&Graph::path(4).unwrap()));
        assert!(step_identity_holds(&s));
    }

    #[test]
    fn step_witness_errors() {
        let p3 = Graph::path(3).unwrap();
        for (w, needle) in [((0, 1, 2), "02 is not an edge"), ((1, 1, 2), "not distinct"), ((1, 0, 5), "out of range")] {
            match step(&p3, w.0, w.1, w.2) {
                Err(Error::StepWitness { reason, .. }) => assert!(reason.contains(needle), "{reason}"),
                other => panic!("{other:?}"),
            }
        }
        let k3 = Graph::complete(3).unwrap();
        assert!(matches!(step(&k3, 0, 1, 2), Err(Error::StepWitness { .. })));
    }

    #[test]
    fn step_conservation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 3..=7 {
            for g in crate::graph::enumerate_graphs(n, crate::graph::GraphClass::All).unwrap().iter().take(60) {
                for (v1, v2, v3) in step_witnesses(g) {
                    let s = step(g, v1, v2, v3).unwrap();
                    assert_eq!(s.target.edge_count(), g.edge_count());
                    assert_eq!(s.target.part(), g.part());
                    assert_eq!(s.positive_remainder.edge_count() + 1, g.edge_count());
                    assert_eq!(s.negative_remainder.edge_count() + 1, g.edge_count());
                    if g.is_forest() {
                        assert_eq!(s.positive_remainder.part().len(), g.part().len() + 1);
                        assert_eq!(s.negative_remainder.part().len(), g.part().len() + 1);
                    }
                    assert_eq!(s.reversed().reversed(), s);
                    assert!(s.reversed().is_valid());
                }
            }
            let r = random_route(&Graph::path(n).unwrap(), 5, &mut rng);
            assert!(r.is_valid());
            assert!(r.reversed().is_valid());
        }
    }

    #[test]
    fn march_examples() {
        let p3 = Graph::path(3).unwrap();
        let mut r = Route::trivial(p3);
        r.push_step(1, 0, 2).unwrap();
        let m = r.march();
        assert_eq!(m.len(), 1);
        assert!(m.positive[0].is_isomorphic(&m.negative[0]));
        assert!(Route::trivial(p3).march().is_empty());
    }

    #[test]
    fn triangle_split_k3() {
        let k3 = Graph::complete(3).unwrap();
        let (a, b, c) = triangle_split(&k3, (0, 1), (0, 2), (1, 2)).unwrap();
        assert!(a.is_isomorphic(&Graph::path(3).unwrap()));
        assert!(b.is_isomorphic(&Graph::path(3).unwrap()));
        assert_eq!(c.edges(), vec![(1, 2)]);
        let lhs = csf(&k3).unwrap();
        let rhs = csf(&a).unwrap().add(&csf(&b).unwrap()).unwrap().sub(&csf(&c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(matches!(triangle_split(&Graph::path(3).unwrap(), (0, 1), (1, 2), (0, 2)), Err(Error::NotAnEdge(0, 2))));
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(triangle_split(&k4, (0, 1), (1, 2), (2, 3)), Err(Error::NotATriangle)));
        assert!(matches!(triangle_split(&k4, (0, 1), (1, 0), (0, 2)), Err(Error::NotATriangle)));
    }

    #[test]
    fn triangle_identity_on_k4_and_paw() {
        let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        for g in [Graph::complete(4).unwrap(), paw] {
            let (a, b, c) = first_triangle(&g).unwrap();
            for (e1, e2, e3) in [((a, b), (a, c), (b, c)), ((b, c), (a, b), (a, c)), ((a, c), (b, c), (a, b))] {
                let (x, y, z) = triangle_split(&g, e1, e2, e3).unwrap();
                let rhs = csf(&x).unwrap().add(&csf(&y).unwrap()).unwrap().sub(&csf(&z).unwrap()).unwrap();
                assert_eq!(csf(&g).unwrap(), rhs);
            }
        }
    }
}
