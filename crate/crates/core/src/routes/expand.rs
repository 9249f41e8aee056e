//! Expansion of a graph's CSF in a chromatic basis.
//!
//! For a forest-basis the expansion is computed recursively from routes:
//!
//! 1. an edgeless graph is the element for `(1, ..., 1)`;
//! 2. a graph isomorphic to the basis element of its partition is a unit;
//! 3. a forest is routed to that basis element and contributes the unit plus
//!    the expansions of its marched remainders;
//! 4. a graph of girth 3 is split at its least triangle;
//! 5. any other cyclic graph is routed to girth 3 first.
//!
//! Every remainder has fewer edges, or the same edges and more components,
//! so the recursion terminates. Results are memoized by canonical key.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::forms::{route_between_with, route_to_dnc_star_form, route_to_girth3, route_to_path_form, route_to_star_form};
use super::{first_triangle, triangle_split, ChromaticBasis, Route};
use crate::error::{Error, Result};
use crate::graph::{CanonicalKey, Graph};
use crate::limits;
use crate::partition::{enumerate_partitions, Partition};
use crate::symmetric::{coeff_map_json, csf, MPoly};

type Coeffs = BTreeMap<Partition, BigRational>;

/// How forests are routed to basis elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Through the path form of both forests.
    #[default]
    PathRouting,
    /// Through the star form, raising a maximum degree one step at a time.
    StarRouting,
    /// Through the star form, by whole re-attachment routes.
    DncRouting,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::PathRouting, Strategy::StarRouting, Strategy::DncRouting];

    fn form(self) -> fn(&Graph) -> Result<Route> {
        match self {
            Strategy::PathRouting => route_to_path_form,
            Strategy::StarRouting => route_to_star_form,
            Strategy::DncRouting => route_to_dnc_star_form,
        }
    }
}

/// A basis expansion `X(subject) = sum c_lambda X(B_lambda)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: ChromaticBasis,
    pub subject: Graph,
    pub coeffs: BTreeMap<Partition, BigRational>,
}

impl BasisExpansion {
    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Whether the expansion is exactly the basis element at `lambda`.
    pub fn is_unit(&self, lambda: &Partition) -> bool {
        self.coeffs.len() == 1 && self.coeff(lambda).is_one()
    }

    /// `sum c_lambda X(B_lambda)` in the monomial basis.
    pub fn evaluate(&self) -> Result<MPoly> {
        let mut total = MPoly::zero(self.basis.degree());
        for (lambda, c) in &self.coeffs {
            let element = self.basis.element(lambda).expect("coefficient indexes a basis element");
            total = total.add(&csf(element)?.scale(c))?;
        }
        Ok(total)
    }

    /// Re-checks the defining identity against the subject's CSF.
    pub fn verify(&self) -> Result<()> {
        if self.evaluate()? == csf(&self.subject)? {
            Ok(())
        } else {
            Err(Error::IdentityViolated)
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis.name().to_string(),
            "n": self.basis.degree(),
            "coeffs": coeff_map_json(&self.coeffs),
        })
    }
}

/// Memoized route-based expander for one forest-basis and strategy.
#[derive(Debug)]
pub struct Expander<'a> {
    basis: &'a ChromaticBasis,
    strategy: Strategy,
    element_keys: BTreeMap<Partition, CanonicalKey>,
    memo: HashMap<CanonicalKey, Coeffs>,
}

impl<'a> Expander<'a> {
    pub fn new(basis: &'a ChromaticBasis, strategy: Strategy) -> Result<Self> {
        if !basis.is_forest_basis() {
            return Err(Error::NonForestBasis);
        }
        let element_keys = basis.elements().map(|(l, g)| (l.clone(), g.key())).collect();
        Ok(Expander { basis, strategy, element_keys, memo: HashMap::new() })
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn expand(&mut self, g: &Graph) -> Result<BasisExpansion> {
        if g.n() != self.basis.degree() {
            return Err(Error::VertexCountMismatch(g.n(), self.basis.degree()));
        }
        let coeffs = self.coeffs(g)?;
        Ok(BasisExpansion { basis: self.basis.clone(), subject: *g, coeffs })
    }

    fn coeffs(&mut self, g: &Graph) -> Result<Coeffs> {
        let key = g.key();
        if let Some(c) = self.memo.get(&key) {
            return Ok(c.clone());
        }
        limits::guard("expansion memo entries", self.memo.len() + 1, limits::EXPANSION_MEMO_MAX)?;
        let lambda = g.part();
        let mut out = Coeffs::new();
        if g.edge_count() == 0 || self.element_keys.get(&lambda) == Some(&key) {
            out.insert(lambda, BigRational::one());
        } else if g.is_forest() {
            let target = self.basis.element(&lambda).expect("basis covers every partition");
            let route = route_between_with(g, target, self.strategy.form())?;
            out.insert(lambda, BigRational::one());
            self.add_march(&mut out, &route)?;
        } else {
            let route = route_to_girth3(g)?;
            let h = *route.end();
            let (a, b, c) = first_triangle(&h).expect("girth 3");
            let (g23, g13, g3) = triangle_split(&h, (a, b), (a, c), (b, c))?;
            self.accumulate(&mut out, &g23, 1)?;
            self.accumulate(&mut out, &g13, 1)?;
            self.accumulate(&mut out, &g3, -1)?;
            self.add_march(&mut out, &route)?;
        }
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn add_march(&mut self, out: &mut Coeffs, route: &Route) -> Result<()> {
        let march = route.march();
        for (p, n) in march.positive.iter().zip(&march.negative) {
            self.accumulate(out, p, 1)?;
            self.accumulate(out, n, -1)?;
        }
        Ok(())
    }

    fn accumulate(&mut self, out: &mut Coeffs, g: &Graph, sign: i32) -> Result<()> {
        for (lambda, c) in self.coeffs(g)? {
            let entry = out.entry(lambda.clone()).or_insert_with(BigRational::zero);
            *entry += c * BigRational::from_integer(BigInt::from(sign));
            if entry.is_zero() {
                out.remove(&lambda);
            }
        }
        Ok(())
    }
}

/// Route-based expansion in a forest-basis.
pub fn expand_in_forest_basis(g: &Graph, basis: &ChromaticBasis, strategy: Strategy) -> Result<BasisExpansion> {
    Expander::new(basis, strategy)?.expand(g)
}

/// Expansion by solving `sum c_lambda X(B_lambda) = X(g)` exactly in the
/// monomial basis. Works for any chromatic basis.
pub fn expand_via_linear_solve(g: &Graph, basis: &ChromaticBasis) -> Result<BasisExpansion> {
    let n = basis.degree();
    if g.n() != n {
        return Err(Error::VertexCountMismatch(g.n(), n));
    }
    let partitions = enumerate_partitions(n)?;
    let element_csfs: Vec<MPoly> = partitions
        .iter()
        .map(|l| csf(basis.element(l).expect("basis covers every partition")))
        .collect::<Result<_>>()?;
    // Column j of the system is the CSF of element j.
    let a: Vec<Vec<BigRational>> =
        partitions.iter().map(|row| element_csfs.iter().map(|f| f.coeff(row)).collect()).collect();
    let target = csf(g)?;
    let b: Vec<BigRational> = partitions.iter().map(|row| target.coeff(row)).collect();
    let solution = crate::linalg::solve(&a, &b).ok_or(Error::SingularBasis)?;
    let coeffs = partitions.into_iter().zip(solution).filter(|(_, c)| !c.is_zero()).collect();
    Ok(BasisExpansion { basis: basis.clone(), subject: *g, coeffs })
}

/// Keeps the coefficients at partitions of length at most `l(mu) + k`.
pub fn truncate_expansion(x: &BasisExpansion, mu: &Partition, k: usize) -> BasisExpansion {
    let max_len = mu.len() + k;
    BasisExpansion {
        basis: x.basis.clone(),
        subject: x.subject,
        coeffs: x.coeffs.iter().filter(|(l, _)| l.len() <= max_len).map(|(l, c)| (l.clone(), c.clone())).collect(),
    }
}
