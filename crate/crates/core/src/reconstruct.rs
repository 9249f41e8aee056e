//! Induced subgraph censuses, reconstruction of independent-partition counts
//! from `k`-vertex induced subgraphs, and lambda-matrices.
//!
//! For `lambda1` of `n` with reduced weight `m <= k`, let `lambda2` be the
//! partition of `k` with the same parts greater than one. Then
//!
//! ```text
//! c^G_{lambda1} = C(n - m, k - m)^{-1} * sum_H c^H_{lambda2} * (G choose H)
//! ```
//!
//! over the isomorphism classes `H` on `k` vertices, where `(G choose H)`
//! counts the induced copies of `H` in `G`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, to_graph6, CanonicalKey, Graph, GraphClass};
use crate::limits;
use crate::linalg::bareiss_rank;
use crate::par::{self, Exec};
use crate::partition::{enumerate_partitions, Partition};
use crate::symmetric::{stable_partition_census, StablePartitionCensus};

/// Counts `(G choose H)` of the induced `k`-vertex subgraphs of a graph, by
/// isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphCensus {
    k: usize,
    counts: BTreeMap<CanonicalKey, u64>,
}

impl SubgraphCensus {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, h: &Graph) -> u64 {
        self.counts.get(&h.key()).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, u64)> {
        self.counts.iter().map(|(k, &c)| (k, c))
    }

    /// Always `C(n, k)`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

pub fn induced_subgraph_census(g: &Graph, k: usize) -> Result<SubgraphCensus> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::OutOfRange { what: "subgraph size k", value: k, min: 1, max: n });
    }
    let mut counts = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            *counts.entry(g.induced(mask as u16).key()).or_insert(0) += 1;
        }
    }
    Ok(SubgraphCensus { k, counts })
}

/// Every isomorphism class on `k` vertices with its stable-partition census.
#[derive(Debug, Clone)]
pub struct ClassFamily {
    k: usize,
    graphs: Vec<Graph>,
    censuses: Vec<StablePartitionCensus>,
    index: HashMap<CanonicalKey, usize>,
}

impl ClassFamily {
    pub fn new(k: usize) -> Result<Self> {
        Self::new_with(k, Exec::default())
    }

    pub fn new_with(k: usize, exec: Exec) -> Result<Self> {
        let graphs = enumerate_graphs(k, GraphClass::All)?;
        let censuses = par::try_map(exec, &graphs, stable_partition_census)?;
        let index = graphs.iter().enumerate().map(|(i, g)| (g.key(), i)).collect();
        Ok(ClassFamily { k, graphs, censuses, index })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    /// The row of `(G choose H)` over the family, in family order.
    fn subgraph_counts(&self, census: &SubgraphCensus) -> Vec<u64> {
        let mut row = vec![0; self.graphs.len()];
        for (key, c) in census.iter() {
            row[self.index[key]] = c;
        }
        row
    }

    /// `sum_H c^H_{lambda2} (G choose H)`.
    fn weighted_sum(&self, counts: &[u64], lambda2: &Partition) -> BigUint {
        counts.iter().zip(&self.censuses).map(|(&c, census)| BigUint::from(c) * census.get(lambda2)).sum()
    }
}

/// `(m, lambda2)` for a `k`-reducible `lambda1`.
fn reduction(lambda1: &Partition, n: usize, k: usize) -> Result<(usize, Partition)> {
    if lambda1.weight() != n {
        return Err(Error::WeightMismatch(lambda1.weight(), n));
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange { what: "subgraph size k", value: k, min: 1, max: n });
    }
    let m = lambda1.reduced_form().weight();
    let lambda2 = lambda1.s_reduced_form(k).ok_or(Error::NotReducible { m, k })?;
    Ok((m, lambda2))
}

/// The right-hand side of the reconstruction formula.
pub fn reconstruct_coefficient(g: &Graph, lambda1: &Partition, k: usize) -> Result<BigRational> {
    reduction(lambda1, g.n(), k)?;
    reconstruct_coefficient_with(g, lambda1, &ClassFamily::new(k)?)
}

/// As [`reconstruct_coefficient`], with the `k`-vertex family precomputed.
pub fn reconstruct_coefficient_with(g: &Graph, lambda1: &Partition, family: &ClassFamily) -> Result<BigRational> {
    let n = g.n();
    let k = family.k();
    let (m, lambda2) = reduction(lambda1, n, k)?;
    let census = induced_subgraph_census(g, k)?;
    let sum = family.weighted_sum(&family.subgraph_counts(&census), &lambda2);
    let norm = binomial(BigUint::from(n - m), BigUint::from(k - m));
    Ok(BigRational::new(BigInt::from(sum), BigInt::from(norm)))
}

/// Independent-partition counts of a family of graphs on `n` vertices: one row
/// per graph, one column per partition of `n` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaMatrix {
    pub n: usize,
    pub columns: Vec<Partition>,
    pub rows: Vec<Graph>,
    pub entries: Vec<Vec<u64>>,
}

pub fn lambda_matrix(family: &[Graph]) -> Result<LambdaMatrix> {
    lambda_matrix_with(family, Exec::default())
}

pub fn lambda_matrix_with(family: &[Graph], exec: Exec) -> Result<LambdaMatrix> {
    let n = family.first().map_or(0, Graph::n);
    if let Some(g) = family.iter().find(|g| g.n() != n) {
        return Err(Error::VertexCountMismatch(n, g.n()));
    }
    limits::guard("lambda-matrix vertex count", n, limits::LAMBDA_MATRIX_MAX_N)?;
    let columns = enumerate_partitions(n)?;
    let censuses = par::try_map(exec, family, stable_partition_census)?;
    let entries = censuses.iter().map(|c| columns.iter().map(|l| c.get(l)).collect()).collect();
    Ok(LambdaMatrix { n, columns, rows: family.to_vec(), entries })
}

impl LambdaMatrix {
    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        let m: Vec<Vec<BigInt>> = self.entries.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        bareiss_rank(&m)
    }

    /// Square, zero below the diagonal and one on it.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries.len() == self.columns.len()
            && self.entries.iter().enumerate().all(|(i, row)| row[i] == 1 && row[..i].iter().all(|&x| x == 0))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .zip(&self.entries)
            .map(|(g, e)| {
                json!({
                    "graph6": to_graph6(g),
                    "entries": e.iter().map(u64::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "columns": self.columns.iter().map(Partition::to_string).collect::<Vec<_>>(),
            "rows": rows,
            "rank": self.rank(),
        })
    }
}

pub fn exact_rank(m: &LambdaMatrix) -> usize {
    m.rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationColumn {
    pub lambda: Partition,
    /// `sum_H (G choose H) c^H_{lambda2}`.
    pub lhs: BigUint,
    /// `C(n - m, k - m) c^G_lambda`.
    pub rhs: BigUint,
}

/// Per-partition comparison of `(G choose H_j) * M_k` with the scaled census
/// of `G`, over the `k`-reducible partitions of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRelationReport {
    pub k: usize,
    pub columns: Vec<RelationColumn>,
}

impl MatrixRelationReport {
    pub fn holds(&self) -> bool {
        self.columns.iter().all(|c| c.lhs == c.rhs)
    }
}

pub fn verify_matrix_relation(g: &Graph, k: usize) -> Result<MatrixRelationReport> {
    let n = g.n();
    if k < 2 || k >= n {
        return Err(Error::OutOfRange { what: "subgraph size k", value: k, min: 2, max: n.saturating_sub(1) });
    }
    let family = ClassFamily::new(k)?;
    let counts = family.subgraph_counts(&induced_subgraph_census(g, k)?);
    let census = stable_partition_census(g)?;
    let mut columns = Vec::new();
    for lambda in enumerate_partitions(n)? {
        let Ok((m, lambda2)) = reduction(&lambda, n, k) else { continue };
        let lhs = family.weighted_sum(&counts, &lambda2);
        let rhs = binomial(BigUint::from(n - m), BigUint::from(k - m)) * census.get(&lambda);
        columns.push(RelationColumn { lambda, lhs, rhs });
    }
    Ok(MatrixRelationReport { k, columns })
}

/// Whether the reconstruction identity holds for `g`, all `k` and all
/// `k`-reducible partitions, given the families for `k = 1..=n`.
pub fn reconstruction_holds(g: &Graph, families: &[ClassFamily]) -> Result<bool> {
    let census = stable_partition_census(g)?;
    for family in families.iter().filter(|f| f.k() <= g.n()) {
        for lambda in enumerate_partitions(g.n())? {
            if lambda.reduced_form().weight() > family.k() {
                continue;
            }
            let got = reconstruct_coefficient_with(g, &lambda, family)?;
            if got != BigRational::from_integer(BigInt::from(census.get(&lambda))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
