//! Integer partitions.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts. The
//! `Ord` implementation is the canonical order used for every map keyed by
//! partitions in this crate: by weight, then by length (shortest first), then
//! lexicographically descending. For `n = 4` that gives
//! `4, 3+1, 2+2, 2+1+1, 1+1+1+1`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, ParseError, Result};
use crate::limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u8>,
}

impl Partition {
    /// The partition of 0 with no parts.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<u8> = parts
            .into_iter()
            .filter(|&p| p > 0)
            .map(|p| u8::try_from(p).expect("part exceeds 255"))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(1, 1, ..., 1)` of weight `n`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-part partition `(n)`, or the empty partition for `n = 0`.
    pub fn single(n: usize) -> Self {
        Partition::new([n])
    }

    pub fn parts(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.parts.iter().map(|&p| p as usize)
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts[i] as usize
    }

    pub fn weight(&self) -> usize {
        self.parts().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().map_or(0, |&p| p as usize)
    }

    /// Multiplicities `(value, count)` in descending order of value.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for p in self.parts() {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Strips every part equal to 1.
    pub fn reduced_form(&self) -> Partition {
        Partition { parts: self.parts.iter().copied().filter(|&p| p > 1).collect() }
    }

    pub fn is_equivalent(&self, other: &Partition) -> bool {
        self.reduced_form() == other.reduced_form()
    }

    /// The unique partition of `s` equivalent to `self`, if one exists.
    pub fn s_reduced_form(&self, s: usize) -> Option<Partition> {
        let mut reduced = self.reduced_form();
        let m = reduced.weight();
        if m > s {
            return None;
        }
        reduced.parts.extend(std::iter::repeat_n(1, s - m));
        Some(reduced)
    }

    /// `prod r_i!` over the multiplicities `r_i` of the distinct parts.
    pub fn multiplicity_factorial(&self) -> BigUint {
        self.multiplicities().into_iter().map(|(_, r)| factorial(r)).product()
    }

    /// `mu <= lambda`: `lambda` is obtained by summing blocks of `mu`'s parts.
    pub fn is_refinement_of(&self, lambda: &Partition) -> Result<bool> {
        is_refinement(self, lambda)
    }

    /// Sorted multiset union of parts (component partition of a disjoint union).
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.parts().chain(other.parts()))
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.len().cmp(&other.len()))
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Parses `"a,b,c"`; parts must already be weakly decreasing.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || ParseError::InvalidPartition(s.to_string());
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u8 = tok.trim().parse().map_err(|_| bad())?;
            if p == 0 || parts.last().is_some_and(|&last| p > last) {
                return Err(bad());
            }
            parts.push(p);
        }
        Ok(Partition { parts })
    }
}

/// All partitions of `n` in canonical order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    limits::guard("partition weight", n, limits::PARTITION_MAX_N)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<u8>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p as u8);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// Whether `mu` refines `lambda`, i.e. the parts of `mu` can be grouped into
/// blocks whose sums are exactly the parts of `lambda`.
pub fn is_refinement(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch(mu.weight(), lambda.weight()));
    }
    if mu.len() < lambda.len() {
        return Ok(false);
    }
    let mut memo = HashMap::new();
    let capacities: Vec<u8> = lambda.parts.clone();
    Ok(pack(&mu.parts, 0, capacities, &mut memo))
}

// Places mu's parts (largest first) into the remaining capacities of
// lambda's parts; every capacity must end at exactly zero.
fn pack(parts: &[u8], idx: usize, caps: Vec<u8>, memo: &mut HashMap<(usize, Vec<u8>), bool>) -> bool {
    if idx == parts.len() {
        return caps.iter().all(|&c| c == 0);
    }
    let key = (idx, caps);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let caps = &key.1;
    let p = parts[idx];
    let mut found = false;
    let mut tried: Vec<u8> = Vec::new();
    for (i, &c) in caps.iter().enumerate() {
        if c < p || tried.contains(&c) {
            continue;
        }
        tried.push(c);
        let mut next = caps.clone();
        next[i] -= p;
        next.sort_unstable_by(|a, b| b.cmp(a));
        if pack(parts, idx + 1, next, memo) {
            found = true;
            break;
        }
    }
    memo.insert(key, found);
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    // Independent oracle: p(n) via the "largest part at most k" recurrence.
    fn partition_count(n: usize) -> usize {
        let mut table = vec![0usize; n + 1];
        table[0] = 1;
        for k in 1..=n {
            for m in k..=n {
                table[m] += table[m - k];
            }
        }
        table[n]
    }

    #[test]
    fn enumerate_four_in_canonical_order() {
        let got: Vec<String> = enumerate_partitions(4).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p("1")]);
        assert_eq!(enumerate_partitions(7).unwrap().len(), 15);
    }

    #[test]
    fn counts_match_recurrence() {
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30];
        for n in 1..=9 {
            assert_eq!(partition_count(n), expected[n - 1]);
            assert_eq!(enumerate_partitions(n).unwrap().len(), expected[n - 1]);
        }
        for n in 10..=25 {
            assert_eq!(enumerate_partitions(n).unwrap().len(), partition_count(n));
        }
    }

    #[test]
    fn enumerate_guard() {
        assert!(matches!(enumerate_partitions(41), Err(Error::Resource { .. })));
    }

    #[test]
    fn refinement_examples() {
        assert!(is_refinement(&p("2,1,1"), &p("3,1")).unwrap());
        assert!(!is_refinement(&p("2,2"), &p("3,1")).unwrap());
        assert!(is_refinement(&p("3,1"), &p("3,1")).unwrap());
        assert!(is_refinement(&p("2,2,1,1"), &p("3,3")).unwrap());
        assert!(!is_refinement(&p("2,2,2"), &p("3,3")).unwrap());
        assert!(matches!(is_refinement(&p("2,1"), &p("4")), Err(Error::WeightMismatch(3, 4))));
    }

    #[test]
    fn refinement_is_partial_order_with_extremes() {
        for n in 1..=8 {
            let all = enumerate_partitions(n).unwrap();
            let le = |a: &Partition, b: &Partition| is_refinement(a, b).unwrap();
            for a in &all {
                assert!(le(a, a));
                assert!(le(&Partition::ones(n), a));
                assert!(le(a, &Partition::single(n)));
                for b in &all {
                    if a != b && le(a, b) {
                        assert!(!le(b, a), "antisymmetry {a} {b}");
                    }
                    for c in &all {
                        if le(a, b) && le(b, c) {
                            assert!(le(a, c), "transitivity {a} {b} {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_forms() {
        assert_eq!(p("3,2,1,1").reduced_form(), p("3,2"));
        let ones = p("1,1,1").reduced_form();
        assert!(ones.is_empty());
        assert_eq!(ones.weight(), 0);
        assert_eq!(p("4").reduced_form(), p("4"));

        assert_eq!(p("2,1,1,1").s_reduced_form(3), Some(p("2,1")));
        assert_eq!(p("3,2").s_reduced_form(4), None);
        assert_eq!(p("1,1,1").s_reduced_form(1), Some(p("1")));
    }

    #[test]
    fn s_reduced_is_equivalent() {
        for n in 1..=8 {
            for lam in enumerate_partitions(n).unwrap() {
                for s in 0..=n {
                    if let Some(red) = lam.s_reduced_form(s) {
                        assert_eq!(red.weight(), s);
                        assert!(red.is_equivalent(&lam));
                    } else {
                        assert!(lam.reduced_form().weight() > s);
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicity_factorials() {
        assert_eq!(p("2,1,1").multiplicity_factorial(), BigUint::from(2u32));
        assert_eq!(p("1,1,1,1").multiplicity_factorial(), BigUint::from(24u32));
        assert_eq!(p("3,2").multiplicity_factorial(), BigUint::from(1u32));
        assert_eq!(Partition::empty().multiplicity_factorial(), BigUint::from(1u32));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().unwrap().is_empty());
    }
}
