//! U-polynomials, corner numbers and the comparison of forest expansions
//! with U-polynomial differences.
//!
//! For a graph `G`, `U_G(x, y) = sum_A x_{lambda(A)} (y - 1)^{|A| - n + k(A)}`
//! over edge subsets `A`, where `lambda(A)` is the partition of component
//! sizes of the spanning subgraph `(V, A)` and `k(A)` its number of
//! components. On a forest every exponent is zero and `U_F` reduces to
//! `sum_A x_{lambda(A)}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits;
use crate::partition::{enumerate_partitions, Partition};
use crate::routes::{expand_in_forest_basis, expand_via_linear_solve, BasisExpansion, ChromaticBasis, Strategy};
use crate::symmetric::coeff_map_json;

/// `sum_lambda c_lambda x_lambda` with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    degree: usize,
    coeffs: BTreeMap<Partition, BigUint>,
}

impl UPoly {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> BigUint {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.coeffs.iter()
    }

    /// Sum of all coefficients, i.e. the number of edge subsets.
    pub fn mass(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    pub fn add(&self, other: &UPoly) -> Result<UPoly> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut coeffs = self.coeffs.clone();
        for (l, c) in &other.coeffs {
            *coeffs.entry(l.clone()).or_default() += c;
        }
        Ok(UPoly { degree: self.degree, coeffs })
    }

    /// `[lambda] self - [lambda] other`.
    pub fn coeff_diff(&self, other: &UPoly, lambda: &Partition) -> BigInt {
        BigInt::from(self.coeff(lambda)) - BigInt::from(other.coeff(lambda))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "basis": "x_lambda",
            "coeffs": coeff_map_json(&self.coeffs),
        })
    }
}

/// The two-variable U-polynomial: coefficients indexed by a partition and a
/// power of `(y - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPolyXY {
    degree: usize,
    coeffs: BTreeMap<(Partition, usize), BigUint>,
}

impl UPolyXY {
    pub fn coeff(&self, lambda: &Partition, y_power: usize) -> BigUint {
        self.coeffs.get(&(lambda.clone(), y_power)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, usize, &BigUint)> {
        self.coeffs.iter().map(|((l, p), c)| (l, *p, c))
    }

    /// The terms with `(y - 1)`-power zero, as a one-variable polynomial.
    pub fn acyclic_part(&self) -> UPoly {
        let coeffs = self.coeffs.iter().filter(|((_, p), _)| *p == 0).map(|((l, _), c)| (l.clone(), c.clone())).collect();
        UPoly { degree: self.degree, coeffs }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|((l, p), c)| json!({"partition": l.to_string(), "y_power": p, "coeff": c.to_string()}))
            .collect();
        json!({"degree": self.degree, "basis": "x_lambda", "terms": terms})
    }
}

/// Component sizes of `(V, A)` for the edge subset `mask` of `edges`.
fn subset_shape(n: usize, edges: &[(usize, usize)], mask: u32) -> (Partition, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut cyclomatic = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                cyclomatic += 1;
            } else {
                parent[ru] = rv;
            }
        }
    }
    let mut sizes = vec![0usize; n];
    for v in 0..n {
        sizes[find(&mut parent, v)] += 1;
    }
    (Partition::new(sizes), cyclomatic)
}

fn subsets_up_to(g: &Graph, max_size: usize) -> BTreeMap<(Partition, usize), BigUint> {
    let edges = g.edges();
    let mut counts: BTreeMap<(Partition, usize), u64> = BTreeMap::new();
    for mask in 0u32..(1u32 << edges.len()) {
        if mask.count_ones() as usize <= max_size {
            *counts.entry(subset_shape(g.n(), &edges, mask)).or_insert(0) += 1;
        }
    }
    counts.into_iter().map(|(k, c)| (k, BigUint::from(c))).collect()
}

/// `U_F = sum_A x_{lambda(A)}` over all edge subsets of a forest.
pub fn u_polynomial_forest(f: &Graph) -> Result<UPoly> {
    restricted_u(f, usize::MAX)
}

/// The forest U-polynomial restricted to edge subsets of size at most `k`.
pub fn restricted_u(f: &Graph, k: usize) -> Result<UPoly> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    limits::guard("forest U-polynomial edge count", f.edge_count(), limits::UPOLY_FOREST_MAX_EDGES)?;
    let full = UPolyXY { degree: f.n(), coeffs: subsets_up_to(f, k) };
    Ok(full.acyclic_part())
}

/// The general U-polynomial, with `(y - 1)`-power `|A| - n + k(A)`.
pub fn u_polynomial_general(g: &Graph) -> Result<UPolyXY> {
    limits::guard("U-polynomial edge count", g.edge_count(), limits::UPOLY_GENERAL_MAX_EDGES)?;
    Ok(UPolyXY { degree: g.n(), coeffs: subsets_up_to(g, usize::MAX) })
}

/// A corner number, or `Infinite` when the expansion is the bare basis
/// element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerNumber {
    Finite(usize),
    Infinite,
}

impl CornerNumber {
    /// Whether the level `len` lies within `base + self`.
    pub fn covers(self, len: usize, base: usize) -> bool {
        match self {
            CornerNumber::Finite(k) => len <= base + k,
            CornerNumber::Infinite => true,
        }
    }
}

impl fmt::Display for CornerNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CornerNumber::Finite(k) => write!(f, "{k}"),
            CornerNumber::Infinite => f.write_str("infinite"),
        }
    }
}

/// The corner number read off an expansion of a graph with partition `mu`:
/// the least `k` such that the truncation at level `l(mu) + k` differs from
/// the unit at `mu`.
pub fn corner_number_of(x: &BasisExpansion, mu: &Partition) -> CornerNumber {
    let unit = |l: &Partition| if l == mu { BigRational::one() } else { BigRational::zero() };
    let mut levels: Vec<usize> = enumerate_partitions(mu.weight())
        .expect("weight is within the partition guard")
        .into_iter()
        .filter(|l| x.coeff(l) != unit(l))
        .map(|l| l.len().saturating_sub(mu.len()))
        .collect();
    levels.sort_unstable();
    levels.first().map_or(CornerNumber::Infinite, |&k| CornerNumber::Finite(k))
}

/// Expands `f` by routes when `basis` is a forest-basis, otherwise by an
/// exact linear solve.
fn expand_any(f: &Graph, basis: &ChromaticBasis) -> Result<BasisExpansion> {
    if basis.is_forest_basis() {
        expand_in_forest_basis(f, basis, Strategy::PathRouting)
    } else {
        expand_via_linear_solve(f, basis)
    }
}

/// Returns the basis element at `Part(f)` after checking that both it and
/// `f` are forests on the basis's vertex count.
fn forest_pair<'a>(f: &Graph, basis: &'a ChromaticBasis) -> Result<&'a Graph> {
    if f.n() != basis.degree() {
        return Err(Error::VertexCountMismatch(f.n(), basis.degree()));
    }
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let element = basis.element(&f.part()).expect("basis covers every partition");
    if !element.is_forest() {
        return Err(Error::NonForestBasis);
    }
    Ok(element)
}

pub fn corner_number(f: &Graph, basis: &ChromaticBasis) -> Result<CornerNumber> {
    forest_pair(f, basis)?;
    Ok(corner_number_of(&expand_any(f, basis)?, &f.part()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEquivRow {
    pub lambda: Partition,
    /// `[lambda] X_{F1,B}`.
    pub x_coeff: BigRational,
    /// `[lambda] U_{F1} - [lambda] U_{F2}`.
    pub u_diff: BigInt,
    /// `l(lambda) <= l(mu) + corner`.
    pub in_relative_range: bool,
    /// `l(lambda) <= corner`.
    pub in_absolute_range: bool,
}

impl UEquivRow {
    pub fn agrees(&self) -> bool {
        self.x_coeff == BigRational::from_integer(self.u_diff.clone())
    }
}

/// Comparison of a forest's basis expansion with U-polynomial differences,
/// against the basis element `F2` at its partition `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEquivReport {
    pub mu: Partition,
    pub corner: CornerNumber,
    /// One row per `lambda != mu`, in canonical order.
    pub rows: Vec<UEquivRow>,
    pub mu_x_coeff: BigRational,
    pub mu_u_diff: BigInt,
}

impl UEquivReport {
    pub fn mu_row_holds(&self) -> bool {
        self.mu_x_coeff.is_one() && self.mu_u_diff.is_zero()
    }

    /// Rows in the relative range where the two sides differ.
    pub fn relative_mismatches(&self) -> impl Iterator<Item = &UEquivRow> {
        self.rows.iter().filter(|r| r.in_relative_range && !r.agrees())
    }

    /// Rows in the absolute range where the two sides differ.
    pub fn absolute_mismatches(&self) -> impl Iterator<Item = &UEquivRow> {
        self.rows.iter().filter(|r| r.in_absolute_range && !r.agrees())
    }

    pub fn holds(&self) -> bool {
        self.mu_row_holds() && self.relative_mismatches().next().is_none() && self.absolute_mismatches().next().is_none()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "lambda": r.lambda.to_string(),
                    "x": r.x_coeff.to_string(),
                    "u_diff": r.u_diff.to_string(),
                    "equal": r.agrees(),
                    "relative_range": r.in_relative_range,
                    "absolute_range": r.in_absolute_range,
                })
            })
            .collect();
        json!({
            "mu": self.mu.to_string(),
            "corner": self.corner.to_string(),
            "mu_row": {"x": self.mu_x_coeff.to_string(), "u_diff": self.mu_u_diff.to_string(), "holds": self.mu_row_holds()},
            "rows": rows,
            "holds": self.holds(),
        })
    }
}

pub fn verify_theorem_u_equiv(f1: &Graph, basis: &ChromaticBasis) -> Result<UEquivReport> {
    let f2 = forest_pair(f1, basis)?;
    let mu = f1.part();
    let x = expand_any(f1, basis)?;
    let corner = corner_number_of(&x, &mu);
    let (u1, u2) = (u_polynomial_forest(f1)?, u_polynomial_forest(f2)?);
    let rows = enumerate_partitions(f1.n())?
        .into_iter()
        .filter(|l| *l != mu)
        .map(|l| UEquivRow {
            x_coeff: x.coeff(&l),
            u_diff: u1.coeff_diff(&u2, &l),
            in_relative_range: corner.covers(l.len(), mu.len()),
            in_absolute_range: corner.covers(l.len(), 0),
            lambda: l,
        })
        .collect();
    Ok(UEquivReport {
        mu_x_coeff: x.coeff(&mu),
        mu_u_diff: u1.coeff_diff(&u2, &mu),
        mu,
        corner,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, GraphClass};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn upoly(pairs: &[(&str, u64)]) -> BTreeMap<Partition, BigUint> {
        pairs.iter().map(|&(l, c)| (p(l), BigUint::from(c))).collect()
    }

    #[test]
    fn forest_examples() {
        let k2 = Graph::path(2).unwrap();
        assert_eq!(u_polynomial_forest(&k2).unwrap().coeffs, upoly(&[("1,1", 1), ("2", 1)]));
        let p3 = Graph::path(3).unwrap();
        assert_eq!(u_polynomial_forest(&p3).unwrap().coeffs, upoly(&[("1,1,1", 1), ("2,1", 2), ("3", 1)]));
        let p4 = u_polynomial_forest(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(p4.coeffs, upoly(&[("1,1,1,1", 1), ("2,1,1", 3), ("3,1", 2), ("2,2", 1), ("4", 1)]));
        let st4 = u_polynomial_forest(&Graph::star(4).unwrap()).unwrap();
        assert_eq!(st4.coeff(&p("3,1")), BigUint::from(3u32));
        assert!(st4.coeff(&p("2,2")).is_zero());
        assert_eq!(
            u_polynomial_forest(&Graph::cycle(3).unwrap()).unwrap_err(),
            Error::NotAForest
        );
    }

    #[test]
    fn restricted() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(restricted_u(&p3, 0).unwrap().coeffs, upoly(&[("1,1,1", 1)]));
        assert_eq!(restricted_u(&p3, 1).unwrap().coeffs, upoly(&[("1,1,1", 1), ("2,1", 2)]));
        assert_eq!(restricted_u(&p3, 2).unwrap(), u_polynomial_forest(&p3).unwrap());
    }

    #[test]
    fn general_examples() {
        let k2 = u_polynomial_general(&Graph::path(2).unwrap()).unwrap();
        assert_eq!(k2.terms().count(), 2);
        assert_eq!(k2.coeff(&p("2"), 0), BigUint::one());
        let k3 = u_polynomial_general(&Graph::complete(3).unwrap()).unwrap();
        let want: Vec<(Partition, usize, u64)> =
            vec![(p("3"), 0, 3), (p("3"), 1, 1), (p("2,1"), 0, 3), (p("1,1,1"), 0, 1)];
        let got: Vec<_> = k3.terms().map(|(l, e, c)| (l.clone(), e, u64::try_from(c).unwrap())).collect();
        assert_eq!(got, want);
        assert_eq!(
            k3.to_json().to_string(),
            r#"{"degree":3,"basis":"x_lambda","terms":[{"partition":"3","y_power":0,"coeff":"3"},{"partition":"3","y_power":1,"coeff":"1"},{"partition":"2,1","y_power":0,"coeff":"3"},{"partition":"1,1,1","y_power":0,"coeff":"1"}]}"#
        );
    }

    #[test]
    fn forest_invariants() {
        for n in 1..=7 {
            for f in enumerate_graphs(n, GraphClass::Forests).unwrap() {
                let u = u_polynomial_forest(&f).unwrap();
                assert_eq!(u.mass(), BigUint::one() << f.edge_count());
                assert_eq!(u.coeff(&Partition::ones(n)), BigUint::one());
                assert_eq!(u.coeff(&f.part()), BigUint::one());
                for (l, c) in u.terms() {
                    if l.len() == f.part().len() {
                        assert_eq!(*l == f.part(), c.is_one());
                    }
                }
                let general = u_polynomial_general(&f).unwrap();
                assert!(general.terms().all(|(_, e, _)| e == 0));
                assert_eq!(general.acyclic_part(), u);
            }
        }
    }

    #[test]
    fn corner_examples() {
        let star = ChromaticBasis::star(4).unwrap();
        assert_eq!(corner_number(&Graph::path(4).unwrap(), &star).unwrap(), CornerNumber::Finite(1));
        assert_eq!(corner_number(&Graph::star(4).unwrap(), &star).unwrap(), CornerNumber::Infinite);
        assert_eq!(corner_number(&Graph::cycle(4).unwrap(), &star), Err(Error::NotAForest));
    }

    #[test]
    fn p4_report() {
        let star = ChromaticBasis::star(4).unwrap();
        let r = verify_theorem_u_equiv(&Graph::path(4).unwrap(), &star).unwrap();
        assert!(r.holds());
        assert!(r.mu_row_holds());
        let row = r.rows.iter().find(|row| row.lambda == p("3,1")).unwrap();
        assert_eq!(row.x_coeff, BigRational::from_integer((-1).into()));
        assert_eq!(row.u_diff, BigInt::from(-1));
        let row = r.rows.iter().find(|row| row.lambda == p("2,2")).unwrap();
        assert_eq!(row.u_diff, BigInt::from(1));
        assert!(row.in_relative_range && !row.in_absolute_range);
    }

    #[test]
    fn self_report_is_trivial() {
        let star = ChromaticBasis::star(4).unwrap();
        let f = star.element(&p("3,1")).unwrap();
        let r = verify_theorem_u_equiv(f, &star).unwrap();
        assert_eq!(r.corner, CornerNumber::Infinite);
        assert!(r.rows.iter().all(|row| row.x_coeff.is_zero() && row.u_diff.is_zero()));
    }
}
