//! Homogeneous symmetric functions in the monomial basis.
//!
//! [`MPoly`] stores `[m_lambda] f` for a degree-`n` symmetric function `f`.
//! The chromatic symmetric function is computed from the stable-partition
//! census: the number of ordered partitions of `V(G)` into independent sets
//! of sizes `lambda_1, ..., lambda_l` is `c_lambda * prod r_i!`, and that is
//! exactly the coefficient of `x_1^lambda_1 ... x_l^lambda_l`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits;
use crate::partition::{factorial, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    degree: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl MPoly {
    pub fn zero(degree: usize) -> Self {
        MPoly { degree, coeffs: BTreeMap::new() }
    }

    /// `m_lambda`.
    pub fn monomial(lambda: Partition) -> Self {
        let mut f = MPoly::zero(lambda.weight());
        f.coeffs.insert(lambda, BigRational::one());
        f
    }

    /// Builds from `(lambda, coefficient)` pairs; every key must have weight
    /// `degree`. Zero coefficients are dropped and repeated keys summed.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut f = MPoly::zero(degree);
        for (lambda, c) in terms {
            if lambda.weight() != degree {
                return Err(Error::WeightMismatch(lambda.weight(), degree));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> MPoly {
        if q.is_zero() {
            return MPoly::zero(self.degree);
        }
        MPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * q)).collect(),
        }
    }

    /// Product in the monomial basis.
    ///
    /// Both factors are read as polynomials in `N = deg f + deg g`
    /// indeterminates, which is enough to determine a degree-`N` symmetric
    /// function. The coefficient of `m_nu` in the product is the coefficient
    /// of the monomial `x^nu`, i.e. the sum of `[x^alpha] f * [x^(nu-alpha)] g`
    /// over exponent vectors `alpha <= nu` of weight `deg f`, where
    /// `[x^alpha] f = [m_sort(alpha)] f`.
    pub fn product(&self, other: &MPoly) -> Result<MPoly> {
        let total = self.degree + other.degree;
        limits::guard("product degree", total, limits::PRODUCT_MAX_DEGREE)?;
        let mut out = MPoly::zero(total);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        for nu in crate::partition::enumerate_partitions(total)? {
            let exps: Vec<usize> = nu.parts().collect();
            let mut acc = BigRational::zero();
            let mut alpha = vec![0usize; exps.len()];
            split_exponents(&exps, 0, self.degree, &mut alpha, &mut |a| {
                let left = Partition::new(a.iter().copied());
                let fa = match self.coeffs.get(&left) {
                    Some(c) => c,
                    None => return,
                };
                let right = Partition::new(exps.iter().zip(a).map(|(e, x)| e - x));
                if let Some(gb) = other.coeffs.get(&right) {
                    acc += fa * gb;
                }
            });
            out.add_term(nu, acc);
        }
        Ok(out)
    }

    /// Evaluates at `x_1 = ... = x_k = 1` and `x_i = 0` for `i > k`.
    pub fn specialize_ones(&self, k: usize) -> BigRational {
        let mut total = BigRational::zero();
        for (lambda, c) in &self.coeffs {
            let l = lambda.len();
            if l > k {
                continue;
            }
            let arrangements = factorial(k) / (factorial(k - l) * lambda.multiplicity_factorial());
            total += c * BigRational::from_integer(BigInt::from(arrangements));
        }
        total
    }

    /// `{"degree": n, "basis": "m", "coeffs": {"2,1": "1", ...}}` with keys in
    /// canonical partition order and exact decimal (or `p/q`) strings.
    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "basis": "m",
            "coeffs": coeff_map_json(&self.coeffs),
        })
    }
}

pub(crate) fn coeff_map_json<V: fmt::Display>(coeffs: &BTreeMap<Partition, V>) -> Value {
    let mut map = Map::new();
    for (k, v) in coeffs {
        map.insert(k.to_string(), Value::String(v.to_string()));
    }
    Value::Object(map)
}

fn split_exponents(
    exps: &[usize],
    idx: usize,
    remaining: usize,
    alpha: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if idx == exps.len() {
        if remaining == 0 {
            visit(alpha);
        }
        return;
    }
    let rest: usize = exps[idx + 1..].iter().sum();
    let lo = remaining.saturating_sub(rest);
    for a in lo..=exps[idx].min(remaining) {
        alpha[idx] = a;
        split_exponents(exps, idx + 1, remaining - a, alpha, visit);
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{}*m[{k}]", c.abs())?;
        }
        Ok(())
    }
}

/// Counts of independent `lambda`-partitions of a graph, `c^G_lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StablePartitionCensus {
    n: usize,
    counts: BTreeMap<Partition, u64>,
}

impl StablePartitionCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, lambda: &Partition) -> u64 {
        self.counts.get(lambda).copied().unwrap_or(0)
    }

    /// Nonzero counts in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }
}

/// Set partitions of `V(G)` into independent sets, tallied by block sizes.
pub fn stable_partition_census(g: &Graph) -> Result<StablePartitionCensus> {
    limits::guard("census vertex count", g.n(), limits::CENSUS_MAX_N)?;
    let mut memo: HashMap<u16, BTreeMap<Partition, u64>> = HashMap::new();
    let counts = census_rec(g, g.vertex_mask(), &mut memo);
    Ok(StablePartitionCensus { n: g.n(), counts })
}

// Partitions of `rest` into independent blocks; the block containing the
// lowest remaining vertex is chosen first, so each set partition is
// generated exactly once.
fn census_rec(g: &Graph, rest: u16, memo: &mut HashMap<u16, BTreeMap<Partition, u64>>) -> BTreeMap<Partition, u64> {
    if rest == 0 {
        return BTreeMap::from([(Partition::empty(), 1)]);
    }
    if let Some(hit) = memo.get(&rest) {
        return hit.clone();
    }
    let v = rest.trailing_zeros() as usize;
    let candidates = rest & !(1 << v) & !g.neighbors_mask(v);
    let mut blocks = Vec::new();
    independent_subsets(g, candidates, 1 << v, &mut blocks);
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    for block in blocks {
        let size = block.count_ones() as usize;
        for (lambda, c) in census_rec(g, rest & !block, memo) {
            let key = lambda.union(&Partition::single(size));
            *out.entry(key).or_insert(0) += c;
        }
    }
    memo.insert(rest, out.clone());
    out
}

fn independent_subsets(g: &Graph, candidates: u16, chosen: u16, out: &mut Vec<u16>) {
    if candidates == 0 {
        out.push(chosen);
        return;
    }
    let u = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << u);
    independent_subsets(g, rest, chosen, out);
    independent_subsets(g, rest & !g.neighbors_mask(u), chosen | (1 << u), out);
}

/// The chromatic symmetric function in the monomial basis.
pub fn csf(g: &Graph) -> Result<MPoly> {
    let census = stable_partition_census(g)?;
    Ok(csf_from_census(&census))
}

pub fn csf_from_census(census: &StablePartitionCensus) -> MPoly {
    let mut f = MPoly::zero(census.n);
    for (lambda, c) in census.iter() {
        let coeff = BigUint::from(c) * lambda.multiplicity_factorial();
        f.coeffs.insert(lambda.clone(), BigRational::from_integer(BigInt::from(coeff)));
    }
    f
}

/// Direct summation over proper colorings with colors `1..=n`: `[m_lambda]`
/// is the number of proper colorings using color `i` exactly `lambda_i`
/// times (and no color beyond `l(lambda)`).
pub fn csf_coloring_oracle(g: &Graph) -> Result<MPoly> {
    let n = g.n();
    limits::guard("coloring oracle vertex count", n, limits::COLORING_ORACLE_MAX_N)?;
    let edges = g.edges();
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut coloring = vec![0usize; n];
    let total = n.pow(n as u32);
    for idx in 0..total {
        let mut x = idx;
        for c in coloring.iter_mut() {
            *c = x % n;
            x /= n;
        }
        if edges.iter().any(|&(u, v)| coloring[u] == coloring[v]) {
            continue;
        }
        let mut usage = vec![0usize; n];
        for &c in &coloring {
            usage[c] += 1;
        }
        let used = usage.iter().take_while(|&&u| u > 0).count();
        if usage[used..].iter().any(|&u| u > 0) || usage[..used].windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        *counts.entry(Partition::new(usage)).or_insert(0) += 1;
    }
    let terms = counts.into_iter().map(|(k, c)| (k, BigRational::from_integer(BigInt::from(c))));
    MPoly::from_terms(n, terms)
}

/// Sum of `[m_lambda]` weighted by `1 / prod r_i!`: the CSF in the augmented
/// monomial basis, equal to the census.
pub fn augmented_coeff(f: &MPoly, lambda: &Partition) -> BigRational {
    f.coeff(lambda) / BigRational::from_integer(BigInt::from(lambda.multiplicity_factorial()))
}
