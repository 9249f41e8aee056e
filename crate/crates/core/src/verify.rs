//! Exhaustive verification suites.
//!
//! Each suite sweeps a family of small graphs, checks one identity exactly and
//! returns a [`SuiteReport`]. Work is spread over graphs with [`par`]; failure
//! lists are assembled in family order, so reports are deterministic.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, parse_graph6, to_graph6, CanonicalKey, Graph, GraphClass, SpecialKind};
use crate::par::{self, Exec};
use crate::partition::{enumerate_partitions, Partition};
use crate::reconstruct::{lambda_matrix_with, reconstruct_coefficient_with, ClassFamily};
use crate::routes::{
    expand_via_linear_solve, random_route, route_to_dnc_star_form, route_to_path_form, route_to_star_form, step,
    step_witnesses, truncate_expansion, BasisName, ChromaticBasis, Expander, Route, Strategy,
};
use crate::symmetric::{csf, csf_coloring_oracle, stable_partition_census, MPoly};
use crate::upoly::{corner_number_of, u_polynomial_forest, verify_theorem_u_equiv, CornerNumber, UPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Oracle,
    Chromatic,
    Step,
    March,
    Expansion,
    Upoly,
    Uequiv,
    Corner,
    Xu,
    Theorem4,
    Ranks,
    Canon,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Oracle,
        Suite::Chromatic,
        Suite::Step,
        Suite::March,
        Suite::Expansion,
        Suite::Upoly,
        Suite::Uequiv,
        Suite::Corner,
        Suite::Xu,
        Suite::Theorem4,
        Suite::Ranks,
        Suite::Canon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Chromatic => "chromatic",
            Suite::Step => "step",
            Suite::March => "march",
            Suite::Expansion => "expansion",
            Suite::Upoly => "upoly",
            Suite::Uequiv => "uequiv",
            Suite::Corner => "corner",
            Suite::Xu => "xu",
            Suite::Theorem4 => "theorem4",
            Suite::Ranks => "ranks",
            Suite::Canon => "canon",
        }
    }

    /// The vertex bound used when none is given.
    pub fn default_n(self) -> usize {
        match self {
            Suite::Oracle | Suite::Theorem4 => 5,
            Suite::Chromatic | Suite::Expansion => 6,
            Suite::Step | Suite::March | Suite::Upoly | Suite::Uequiv | Suite::Corner | Suite::Canon => 7,
            Suite::Xu | Suite::Ranks => 8,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: Option<usize>,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: None, seed: 0x5eed, exec: Exec::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    /// Number of graphs (or routes, or pairs) examined.
    pub items: usize,
    /// Number of individual identities checked.
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let status = if self.passed() { "OK" } else { "FAILED" };
        match self.suite {
            Suite::Theorem4 => {
                format!("graphs={} identities={} failures={}", self.items, status, self.failures.len())
            }
            _ => format!(
                "suite={} n={} items={} checks={} status={} failures={}",
                self.suite,
                self.n,
                self.items,
                self.checks,
                status,
                self.failures.len()
            ),
        }
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let n = config.n.unwrap_or(suite.default_n());
    let mut report = SuiteReport { suite, n, items: 0, checks: 0, failures: Vec::new(), notes: Vec::new() };
    match suite {
        Suite::Oracle => oracle(n, config.exec, &mut report)?,
        Suite::Chromatic => chromatic(n, config.exec, &mut report)?,
        Suite::Step => steps(n, config.exec, &mut report)?,
        Suite::March => marches(n, config, &mut report)?,
        Suite::Expansion => expansions(n, config.exec, &mut report)?,
        Suite::Upoly => upoly_steps(n, config.exec, &mut report)?,
        Suite::Uequiv => uequiv(n, config.exec, &mut report)?,
        Suite::Corner => corners(n, config.exec, &mut report)?,
        Suite::Xu => x_equals_u(n, config.exec, &mut report)?,
        Suite::Theorem4 => theorem4(n, config.exec, &mut report)?,
        Suite::Ranks => ranks(n, config.exec, &mut report)?,
        Suite::Canon => canon(n, config, &mut report)?,
    }
    Ok(report)
}

/// Per-item outcome: number of checks and failure messages.
type Outcome = (usize, Vec<String>);

fn collect(report: &mut SuiteReport, outcomes: Vec<Outcome>) {
    report.items += outcomes.len();
    for (checks, failures) in outcomes {
        report.checks += checks;
        report.failures.extend(failures);
    }
}

fn graphs_up_to(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for m in 1..=n {
        out.extend(enumerate_graphs(m, class)?);
    }
    Ok(out)
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn oracle(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let graphs = graphs_up_to(n, GraphClass::All)?;
    let outcomes = par::try_map(exec, &graphs, |g| -> Result<Outcome> {
        let mut f = Vec::new();
        check(&mut f, csf(g)? == csf_coloring_oracle(g)?, || format!("{}: csf differs from coloring sum", to_graph6(g)));
        Ok((1, f))
    })?;
    collect(report, outcomes);
    Ok(())
}

/// Chromatic polynomial coefficients (constant term first) by deletion and
/// contraction, memoized by isomorphism class.
pub fn chromatic_polynomial(g: &Graph) -> Vec<BigInt> {
    fn go(g: &Graph, memo: &mut HashMap<CanonicalKey, Vec<BigInt>>) -> Vec<BigInt> {
        let key = g.key();
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let edges = g.edges();
        let p = match edges.first() {
            None => {
                let mut p = vec![BigInt::zero(); g.n() + 1];
                p[g.n()] = BigInt::one();
                p
            }
            Some(&(u, v)) => {
                let deleted = go(&g.without_edge(u, v), memo);
                let contracted = go(&contract(g, u, v), memo);
                deleted.iter().enumerate().map(|(i, a)| a - contracted.get(i).cloned().unwrap_or_default()).collect()
            }
        };
        memo.insert(key, p.clone());
        p
    }
    go(g, &mut HashMap::new())
}

/// Merges `v` into `u` (parallel edges collapse) and drops `v`.
fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    let n = g.n();
    let relabel = |x: usize| if x == v { u } else { x };
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| (relabel(a), relabel(b)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (shift(a).min(shift(b)), shift(a).max(shift(b))))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n - 1, &edges).expect("contraction of a simple graph")
}

pub fn evaluate_polynomial(p: &[BigInt], k: usize) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * BigInt::from(k) + c)
}

fn chromatic(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let graphs = enumerate_graphs(n, GraphClass::All)?;
    let outcomes = par::try_map(exec, &graphs, |g| -> Result<Outcome> {
        let f = csf(g)?;
        let poly = chromatic_polynomial(g);
        let mut failures = Vec::new();
        for k in 0..=n {
            let want = BigRational::from_integer(evaluate_polynomial(&poly, k));
            check(&mut failures, f.specialize_ones(k) == want, || format!("{}: chi({k}) mismatch", to_graph6(g)));
        }
        Ok((n + 1, failures))
    })?;
    collect(report, outcomes);
    Ok(())
}

fn step_identity(f1: &MPoly, s: &crate::routes::Step) -> Result<bool> {
    let rhs = csf(&s.target)?.add(&csf(&s.positive_remainder)?)?.sub(&csf(&s.negative_remainder)?)?;
    Ok(*f1 == rhs)
}

fn steps(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let forests = graphs_up_to(n, GraphClass::Forests)?;
    let outcomes = par::try_map(exec, &forests, |g| -> Result<Outcome> {
        let f1 = csf(g)?;
        let mut failures = Vec::new();
        let mut checks = 0;
        // Every ordered triple; invalid ones must be rejected.
        for v1 in 0..g.n() {
            for v2 in 0..g.n() {
                for v3 in 0..g.n() {
                    let valid = v1 != v2
                        && v1 != v3
                        && v2 != v3
                        && g.has_edge(v1, v2)
                        && g.has_edge(v1, v3)
                        && !g.has_edge(v2, v3);
                    checks += 1;
                    match step(g, v1, v2, v3) {
                        Ok(s) => {
                            let ok = valid
                                && step_identity(&f1, &s)?
                                && s.target.part() == g.part()
                                && s.target.edge_count() == g.edge_count()
                                && s.positive_remainder.part().len() == g.part().len() + 1
                                && s.negative_remainder.part().len() == g.part().len() + 1;
                            check(&mut failures, ok, || format!("{}: step ({v1},{v2},{v3})", to_graph6(g)));
                        }
                        Err(Error::StepWitness { .. }) => {
                            check(&mut failures, !valid, || format!("{}: valid witness ({v1},{v2},{v3}) rejected", to_graph6(g)));
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Ok((checks, failures))
    })?;
    collect(report, outcomes);
    Ok(())
}

/// Checks `X(G1) = X(Gk) + sum X(P_i) - sum X(N_i)` along a route.
pub fn march_identity_holds(route: &Route) -> Result<bool> {
    let march = route.march();
    let mut rhs = csf(route.end())?;
    for (p, q) in march.positive.iter().zip(&march.negative) {
        rhs = rhs.add(&csf(p)?)?.sub(&csf(q)?)?;
    }
    Ok(rhs == csf(route.start())?)
}

fn random_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// `count` random routes from seeded random graphs on 3 to `n` vertices,
/// plus every construction route on forests up to `min(n, 6)` vertices.
fn marches(n: usize, config: &SuiteConfig, report: &mut SuiteReport) -> Result<()> {
    const COUNT: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut routes = Vec::with_capacity(COUNT);
    while routes.len() < COUNT {
        let size = rng.gen_range(3..=n.max(3));
        let g = random_graph(size, &mut rng);
        let len = rng.gen_range(1..=6);
        routes.push(random_route(&g, len, &mut rng));
    }
    for f in graphs_up_to(n.min(6), GraphClass::Forests)? {
        routes.push(route_to_path_form(&f)?);
        routes.push(route_to_star_form(&f)?);
        routes.push(route_to_dnc_star_form(&f)?);
    }
    let outcomes = par::try_map(config.exec, &routes, |r| -> Result<Outcome> {
        let mut f = Vec::new();
        let ok = r.is_valid() && march_identity_holds(r)?;
        check(&mut f, ok, || format!("{}: route of {} steps", to_graph6(r.start()), r.step_count()));
        Ok((1, f))
    })?;
    collect(report, outcomes);
    Ok(())
}

fn expansions(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let mut jobs = Vec::new();
    for m in 1..=n {
        for basis in [ChromaticBasis::star(m)?, ChromaticBasis::path(m)?] {
            jobs.push(basis);
        }
    }
    let outcomes = par::try_map(exec, &jobs, |basis| -> Result<Outcome> {
        let mut failures = Vec::new();
        let mut checks = 0;
        let mut expanders: Vec<Expander> =
            Strategy::ALL.iter().map(|&s| Expander::new(basis, s)).collect::<Result<_>>()?;
        for g in enumerate_graphs(basis.degree(), GraphClass::All)? {
            let name = || format!("{} in {} basis", to_graph6(&g), basis.name());
            let solved = expand_via_linear_solve(&g, basis)?;
            checks += 4;
            check(&mut failures, solved.verify().is_ok(), || format!("{}: identity", name()));
            for e in expanders.iter_mut() {
                let x = e.expand(&g)?;
                check(&mut failures, x.coeffs == solved.coeffs, || format!("{}: route/solve disagree", name()));
            }
            let mu = g.part();
            for lambda in solved.coeffs.keys() {
                checks += 1;
                check(&mut failures, lambda.is_refinement_of(&mu)?, || format!("{}: support at {lambda}", name()));
            }
            if g.is_forest() {
                checks += 1;
                check(&mut failures, solved.coeff(&mu).is_one(), || format!("{}: leading coefficient", name()));
            }
        }
        Ok((checks, failures))
    })?;
    report.notes.push(format!("bases={}", jobs.len()));
    collect(report, outcomes);
    report.items = (1..=n).map(|m| enumerate_graphs(m, GraphClass::All).map(|v| v.len())).sum::<Result<usize>>()?;
    Ok(())
}

/// `U(a) + U(d) == U(b) + U(c)`, i.e. `U(a) = U(b) + U(c) - U(d)`.
fn u_relation(a: &Graph, b: &Graph, c: &Graph, d: &Graph) -> Result<bool> {
    let lhs = u_polynomial_forest(a)?.add(&u_polynomial_forest(d)?)?;
    let rhs = u_polynomial_forest(b)?.add(&u_polynomial_forest(c)?)?;
    Ok(lhs == rhs)
}

fn upoly_steps(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let forests = graphs_up_to(n, GraphClass::Forests)?;
    let outcomes = par::try_map(exec, &forests, |g| -> Result<Outcome> {
        let mut failures = Vec::new();
        let mut checks = 0;
        for (v1, v2, v3) in step_witnesses(g) {
            let s = step(g, v1, v2, v3)?;
            checks += 1;
            let ok = u_relation(g, &s.target, &s.positive_remainder, &s.negative_remainder)?;
            check(&mut failures, ok, || format!("{}: U step ({v1},{v2},{v3})", to_graph6(g)));
        }
        // Telescoped along the path-form route.
        let route = route_to_path_form(g)?;
        let march = route.march();
        let mut lhs = u_polynomial_forest(g)?;
        let mut rhs = u_polynomial_forest(route.end())?;
        for (p, q) in march.positive.iter().zip(&march.negative) {
            lhs = lhs.add(&u_polynomial_forest(q)?)?;
            rhs = rhs.add(&u_polynomial_forest(p)?)?;
        }
        checks += 1;
        check(&mut failures, lhs == rhs, || format!("{}: U march", to_graph6(g)));
        let u = u_polynomial_forest(g)?;
        let mu = g.part();
        for (l, c) in u.terms() {
            if l.len() == mu.len() {
                checks += 1;
                check(&mut failures, c.is_one() == (*l == mu), || format!("{}: level-0 U at {l}", to_graph6(g)));
            }
        }
        Ok((checks, failures))
    })?;
    collect(report, outcomes);
    Ok(())
}

fn uequiv(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let forests = graphs_up_to(n, GraphClass::Forests)?;
    let bases: BTreeMap<usize, ChromaticBasis> =
        (1..=n).map(|m| ChromaticBasis::star(m).map(|b| (m, b))).collect::<Result<_>>()?;
    let outcomes = par::try_map(exec, &forests, |f| -> Result<Outcome> {
        let r = verify_theorem_u_equiv(f, &bases[&f.n()])?;
        let mut failures = Vec::new();
        check(&mut failures, r.mu_row_holds(), || format!("{}: mu row", to_graph6(f)));
        for row in r.relative_mismatches() {
            failures.push(format!(
                "{}: relative range at {}: X={} U-diff={}",
                to_graph6(f),
                row.lambda,
                row.x_coeff,
                row.u_diff
            ));
        }
        for row in r.absolute_mismatches() {
            failures.push(format!(
                "{}: absolute range at {}: X={} U-diff={}",
                to_graph6(f),
                row.lambda,
                row.x_coeff,
                row.u_diff
            ));
        }
        Ok((r.rows.len() + 1, failures))
    })?;
    collect(report, outcomes);
    Ok(())
}

/// A forest-basis on 7 vertices with a forest of corner number 2: the
/// star-basis with its `(7)` element replaced by a tree sharing the
/// one-edge-deletion profile of the returned forest.
pub fn corner_two_example() -> Result<(Graph, ChromaticBasis)> {
    let f1 = parse_graph6("F??^O")?;
    let f2 = parse_graph6("F?CmG")?;
    let mut elements: BTreeMap<Partition, Graph> =
        ChromaticBasis::star(7)?.elements().map(|(l, g)| (l.clone(), *g)).collect();
    elements.insert(Partition::single(7), f2);
    let basis = ChromaticBasis::from_elements(7, BasisName::Custom("star-with-F?CmG".into()), elements)?;
    Ok((f1, basis))
}

/// Checks the defining property of a corner number against the truncations.
fn corner_is_consistent(x: &crate::routes::BasisExpansion, mu: &Partition, corner: CornerNumber) -> bool {
    let unit = |t: &crate::routes::BasisExpansion| t.is_unit(mu);
    match corner {
        CornerNumber::Infinite => unit(x),
        CornerNumber::Finite(0) => false,
        CornerNumber::Finite(k) => unit(&truncate_expansion(x, mu, k - 1)) && !unit(&truncate_expansion(x, mu, k)),
    }
}

fn corners(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let forests = graphs_up_to(n, GraphClass::Forests)?;
    let mut bases = BTreeMap::new();
    for m in 1..=n {
        bases.insert(m, (ChromaticBasis::star(m)?, ChromaticBasis::path(m)?));
    }
    let outcomes = par::try_map(exec, &forests, |f| -> Result<(Outcome, [CornerNumber; 2])> {
        let mu = f.part();
        let (star, path) = &bases[&f.n()];
        let mut failures = Vec::new();
        let mut found = [CornerNumber::Infinite; 2];
        for (i, b) in [star, path].into_iter().enumerate() {
            let x = crate::routes::expand_in_forest_basis(f, b, Strategy::PathRouting)?;
            let c = corner_number_of(&x, &mu);
            found[i] = c;
            let is_element = b.element(&mu).is_some_and(|e| e.is_isomorphic(f));
            let ok = corner_is_consistent(&x, &mu, c) && (c == CornerNumber::Infinite) == is_element;
            check(&mut failures, ok, || format!("{}: corner {c} in {} basis", to_graph6(f), b.name()));
        }
        Ok(((2, failures), found))
    })?;
    let mut hist: BTreeMap<CornerNumber, usize> = BTreeMap::new();
    let mut plain = Vec::with_capacity(outcomes.len());
    for (o, found) in outcomes {
        for c in found {
            *hist.entry(c).or_default() += 1;
        }
        plain.push(o);
    }
    collect(report, plain);
    let hist: Vec<String> = hist.iter().map(|(c, k)| format!("{c}:{k}")).collect();
    report.notes.push(format!("star/path corner numbers {}", hist.join(" ")));
    if n >= 7 {
        let (f, basis) = corner_two_example()?;
        let x = crate::routes::expand_in_forest_basis(&f, &basis, Strategy::PathRouting)?;
        let c = corner_number_of(&x, &f.part());
        report.checks += 1;
        let ok = c == CornerNumber::Finite(2) && corner_is_consistent(&x, &f.part(), c);
        check(&mut report.failures, ok, || format!("{}: expected corner 2, got {c}", to_graph6(&f)));
        let r = verify_theorem_u_equiv(&f, &basis)?;
        report.checks += 1;
        check(&mut report.failures, r.holds(), || format!("{}: U-equiv at corner 2", to_graph6(&f)));
        report.notes.push(format!("corner 2: {} in {} basis", to_graph6(&f), basis.name()));
    }
    Ok(())
}

fn x_equals_u(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    for m in 1..=n {
        let forests = enumerate_graphs(m, GraphClass::Forests)?;
        let data = par::try_map(exec, &forests, |f| -> Result<(MPoly, UPoly)> { Ok((csf(f)?, u_polynomial_forest(f)?)) })?;
        // Two partitions of the family agree iff every pair is split the same way.
        let mut checks = 0;
        for i in 0..data.len() {
            for j in i + 1..data.len() {
                checks += 1;
                let same_x = data[i].0 == data[j].0;
                let same_u = data[i].1 == data[j].1;
                check(&mut report.failures, same_x == same_u, || {
                    format!("{} vs {}: X equal {same_x}, U equal {same_u}", to_graph6(&forests[i]), to_graph6(&forests[j]))
                });
            }
        }
        let classes = data.len() - count_duplicates(&data);
        report.notes.push(format!("n={m}: forests={} csf-classes={classes}", forests.len()));
        report.items += forests.len();
        report.checks += checks;
    }
    Ok(())
}

fn count_duplicates(data: &[(MPoly, UPoly)]) -> usize {
    (0..data.len()).filter(|&i| data[..i].iter().any(|d| d.0 == data[i].0)).count()
}

fn theorem4(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    let graphs = enumerate_graphs(n, GraphClass::All)?;
    let families: Vec<ClassFamily> = (1..=n).map(|k| ClassFamily::new_with(k, exec)).collect::<Result<_>>()?;
    let partitions = enumerate_partitions(n)?;
    let outcomes = par::try_map(exec, &graphs, |g| -> Result<Outcome> {
        let census = stable_partition_census(g)?;
        let mut failures = Vec::new();
        let mut checks = 0;
        for family in &families {
            for lambda in partitions.iter().filter(|l| l.reduced_form().weight() <= family.k()) {
                checks += 1;
                let got = reconstruct_coefficient_with(g, lambda, family)?;
                let want = BigRational::from_integer(BigInt::from(census.get(lambda)));
                check(&mut failures, got == want, || {
                    format!("{}: k={} lambda={lambda}: got {got}, want {want}", to_graph6(g), family.k())
                });
            }
        }
        Ok((checks, failures))
    })?;
    collect(report, outcomes);
    Ok(())
}

fn partition_count(n: usize) -> Result<usize> {
    Ok(enumerate_partitions(n)?.len())
}

fn ranks(n: usize, exec: Exec, report: &mut SuiteReport) -> Result<()> {
    for m in 1..=n {
        let p = partition_count(m)?;
        let family: Vec<Graph> = enumerate_partitions(m)?
            .iter()
            .map(|l| Graph::special(SpecialKind::CompleteMultipartite, l))
            .collect::<Result<_>>()?;
        let mat = lambda_matrix_with(&family, exec)?;
        let rank = mat.rank();
        report.checks += 2;
        check(&mut report.failures, mat.is_upper_unitriangular(), || format!("K_lambda n={m}: not unitriangular"));
        check(&mut report.failures, rank == p, || format!("K_lambda n={m}: rank {rank}, want {p}"));
        report.notes.push(format!("K_lambda n={m}: rank={rank} p(n)={p}"));
        report.items += family.len();
    }
    for m in 1..=n.min(7) {
        let p = partition_count(m)?;
        let forests = enumerate_graphs(m, GraphClass::Forests)?;
        let rank = lambda_matrix_with(&forests, exec)?.rank();
        report.checks += 1;
        check(&mut report.failures, rank == p, || format!("forests n={m}: rank {rank}, want {p}"));
        report.notes.push(format!("forests n={m}: rank={rank} p(n)={p}"));
        report.items += forests.len();
    }
    for m in 5..=n.min(8) {
        let want = partition_count(m)? - m + 1;
        let trees = enumerate_graphs(m, GraphClass::Trees)?;
        let rank = lambda_matrix_with(&trees, exec)?.rank();
        report.checks += 1;
        check(&mut report.failures, rank == want, || format!("trees n={m}: rank {rank}, want {want}"));
        report.notes.push(format!("trees n={m}: rank={rank} p(n)-n+1={want}"));
        report.items += trees.len();
    }
    Ok(())
}

/// Backtracking isomorphism test, matching vertices in order and pruning by
/// degree and adjacency to already matched vertices.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u32) -> bool {
        let v = map.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used >> w & 1 == 1 || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                map.push(w);
                if extend(a, b, map, used | 1 << w) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    a.n() == b.n() && a.edge_count() == b.edge_count() && extend(a, b, &mut Vec::new(), 0)
}

fn canon(n: usize, config: &SuiteConfig, report: &mut SuiteReport) -> Result<()> {
    const PAIRS: usize = 10_000;
    let graphs = graphs_up_to(n.min(7), GraphClass::All)?;
    let outcomes = par::try_map(config.exec, &graphs, |g| -> Result<Outcome> {
        let mut f = Vec::new();
        let text = to_graph6(g);
        let back = parse_graph6(&text)?;
        check(&mut f, back == *g && back.key() == g.key(), || format!("{text}: graph6 round trip"));
        Ok((1, f))
    })?;
    collect(report, outcomes);

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut pairs = Vec::with_capacity(PAIRS);
    for _ in 0..PAIRS {
        let size = rng.gen_range(n.clamp(1, 4)..=n.max(1));
        let a = random_graph(size, &mut rng);
        let b = if rng.gen_bool(0.5) {
            let mut perm: Vec<usize> = (0..size).collect();
            perm.shuffle(&mut rng);
            a.relabel(&perm)
        } else {
            // Same vertex and edge count, so only structure can separate them.
            let mut all: Vec<(usize, usize)> = (0..size).flat_map(|u| (u + 1..size).map(move |v| (u, v))).collect();
            all.shuffle(&mut rng);
            Graph::from_edges(size, &all[..a.edge_count()]).expect("valid edges")
        };
        pairs.push((a, b));
    }
    let outcomes = par::try_map(config.exec, &pairs, |(a, b)| -> Result<Outcome> {
        let mut f = Vec::new();
        let same = brute_force_isomorphic(a, b);
        check(&mut f, (a.key() == b.key()) == same, || format!("{} vs {}: key/isomorphism disagree", to_graph6(a), to_graph6(b)));
        Ok((1, f))
    })?;
    let isomorphic = pairs.iter().filter(|(a, b)| brute_force_isomorphic(a, b)).count();
    report.notes.push(format!("random pairs={PAIRS} isomorphic={isomorphic}"));
    collect(report, outcomes);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_polynomial_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        // k(k-1)(k-2) = k^3 - 3k^2 + 2k
        assert_eq!(chromatic_polynomial(&Graph::complete(3).unwrap()), ints(&[0, 2, -3, 1]));
        // k(k-1)^3
        assert_eq!(chromatic_polynomial(&Graph::path(4).unwrap()), ints(&[0, -1, 3, -3, 1]));
        assert_eq!(chromatic_polynomial(&Graph::empty(2).unwrap()), ints(&[0, 0, 1]));
        let c4 = chromatic_polynomial(&Graph::cycle(4).unwrap());
        assert_eq!(evaluate_polynomial(&c4, 3), BigInt::from(18));
    }

    #[test]
    fn brute_force_isomorphism() {
        let p3 = Graph::path(3).unwrap();
        assert!(brute_force_isomorphic(&p3, &Graph::star(3).unwrap()));
        assert!(!brute_force_isomorphic(&Graph::path(4).unwrap(), &Graph::star(4).unwrap()));
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap();
        assert!(!brute_force_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let config = SuiteConfig { n: Some(4), ..SuiteConfig::default() };
            let r = run_suite(suite, &config).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.failures);
        }
    }

    #[test]
    fn reconstruction_summary_line() {
        let r = run_suite(Suite::Theorem4, &SuiteConfig { n: Some(5), ..SuiteConfig::default() }).unwrap();
        assert_eq!(r.summary(), "graphs=34 identities=OK failures=0");
    }

    #[test]
    fn corner_two() {
        let (f, basis) = corner_two_example().unwrap();
        assert!(basis.is_forest_basis());
        assert_eq!(crate::upoly::corner_number(&f, &basis).unwrap(), CornerNumber::Finite(2));
    }
}
