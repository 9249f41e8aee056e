//! Chromatic bases: one graph per partition of `n`, with component partition
//! equal to its index.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::graph::{parse_graph6, Graph, SpecialKind};
use crate::partition::{enumerate_partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasisName {
    Star,
    Path,
    /// Loaded from a basis file at this path.
    File(String),
    Custom(String),
}

impl fmt::Display for BasisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisName::Star => f.write_str("star"),
            BasisName::Path => f.write_str("path"),
            BasisName::File(p) => write!(f, "file:{p}"),
            BasisName::Custom(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticBasis {
    name: BasisName,
    degree: usize,
    elements: BTreeMap<Partition, Graph>,
}

impl ChromaticBasis {
    /// The star-basis `{ST_lambda}`.
    pub fn star(n: usize) -> Result<Self> {
        Self::special(n, SpecialKind::StarFamily, BasisName::Star)
    }

    /// The path-basis `{P_lambda}`.
    pub fn path(n: usize) -> Result<Self> {
        Self::special(n, SpecialKind::PathFamily, BasisName::Path)
    }

    fn special(n: usize, kind: SpecialKind, name: BasisName) -> Result<Self> {
        let elements = enumerate_partitions(n)?
            .into_iter()
            .map(|l| Graph::special(kind, &l).map(|g| (l, g)))
            .collect::<Result<_>>()?;
        Ok(ChromaticBasis { name, degree: n, elements })
    }

    /// Checks that `elements` has exactly one graph on `n` vertices per
    /// partition of `n`, with matching component partition.
    pub fn from_elements(n: usize, name: BasisName, elements: BTreeMap<Partition, Graph>) -> Result<Self> {
        let partitions = enumerate_partitions(n)?;
        for l in &partitions {
            let g = elements.get(l).ok_or_else(|| Error::InvalidBasis(format!("no element for {l}")))?;
            if g.n() != n {
                return Err(Error::InvalidBasis(format!("element for {l} has {} vertices", g.n())));
            }
            if g.part() != *l {
                return Err(Error::InvalidBasis(format!("element for {l} has component partition {}", g.part())));
            }
        }
        if elements.len() != partitions.len() {
            let extra = elements.keys().find(|l| l.weight() != n).expect("extra key has wrong weight");
            return Err(Error::InvalidBasis(format!("partition {extra} is not a partition of {n}")));
        }
        Ok(ChromaticBasis { name, degree: n, elements })
    }

    /// Parses the basis file format: one `lambda ; graph6` line per
    /// partition. Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str, name: BasisName) -> Result<Self> {
        let mut elements = BTreeMap::new();
        let line_err = |line: usize, reason: String| Error::Parse(ParseError::BasisLine { line, reason });
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (l, g6) = line.split_once(';').ok_or_else(|| line_err(i + 1, "expected `lambda ; graph6`".into()))?;
            let lambda: Partition = l.trim().parse().map_err(|e: ParseError| line_err(i + 1, e.to_string()))?;
            let g = parse_graph6(g6.trim()).map_err(|e| line_err(i + 1, e.to_string()))?;
            if elements.insert(lambda.clone(), g).is_some() {
                return Err(line_err(i + 1, format!("duplicate partition {lambda}")));
            }
        }
        let n = elements.keys().next().map(Partition::weight).ok_or_else(|| line_err(0, "empty basis file".into()))?;
        Self::from_elements(n, name, elements)
    }

    pub fn name(&self) -> &BasisName {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn element(&self, lambda: &Partition) -> Option<&Graph> {
        self.elements.get(lambda)
    }

    pub fn elements(&self) -> impl Iterator<Item = (&Partition, &Graph)> {
        self.elements.iter()
    }

    pub fn is_forest_basis(&self) -> bool {
        self.elements.values().all(Graph::is_forest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::to_graph6;

    #[test]
    fn standard_bases() {
        let b = ChromaticBasis::star(4).unwrap();
        assert_eq!(b.elements().count(), 5);
        assert!(b.is_forest_basis());
        assert_eq!(b.element(&Partition::ones(4)).unwrap().edge_count(), 0);
        assert!(b.element(&Partition::single(4)).unwrap().is_isomorphic(&Graph::star(4).unwrap()));
        let p = ChromaticBasis::path(4).unwrap();
        assert!(p.element(&Partition::single(4)).unwrap().is_isomorphic(&Graph::path(4).unwrap()));
        assert_eq!(p.name().to_string(), "path");
    }

    #[test]
    fn parse_file_format() {
        let star = ChromaticBasis::star(3).unwrap();
        let text: String =
            star.elements().map(|(l, g)| format!("{l} ; {}\n", to_graph6(g))).collect::<Vec<_>>().join("# note\n");
        let parsed = ChromaticBasis::parse(&text, BasisName::File("b.txt".into())).unwrap();
        assert_eq!(parsed.name().to_string(), "file:b.txt");
        assert!(parsed.elements().eq(star.elements()));
    }

    #[test]
    fn parse_errors() {
        let bad = |t: &str| ChromaticBasis::parse(t, BasisName::Custom("x".into())).unwrap_err();
        assert!(matches!(bad("3 Bg"), Error::Parse(ParseError::BasisLine { line: 1, .. })));
        assert!(matches!(bad(""), Error::Parse(ParseError::BasisLine { .. })));
        // (3) paired with K2+K1 has the wrong component partition.
        assert!(matches!(bad("3 ; B_\n2,1 ; B_\n1,1,1 ; B?"), Error::InvalidBasis(_)));
        assert!(matches!(bad("3 ; Bg\n1,1,1 ; B?"), Error::InvalidBasis(_)));
        assert!(matches!(bad("3 ; Bg\n3 ; Bw"), Error::Parse(ParseError::BasisLine { line: 2, .. })));
    }

    #[test]
    fn non_forest_basis_is_flagged() {
        let mut elements: BTreeMap<_, _> =
            ChromaticBasis::star(3).unwrap().elements().map(|(l, g)| (l.clone(), *g)).collect();
        elements.insert(Partition::single(3), Graph::complete(3).unwrap());
        let b = ChromaticBasis::from_elements(3, BasisName::Custom("k".into()), elements).unwrap();
        assert!(!b.is_forest_basis());
    }
}
