//! Orbits of the isotropy representation through a normalized base point.
//!
//! The base point `a₀` is encoded by its support: `α_i(a₀) = √−1` for `i` in
//! the support and `0` otherwise. Only the support matters for the tangent and
//! normal decomposition, so general positive values are not modelled.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symspace::{dimension, SymmetricSpace};

/// Non-empty set of simple root indices, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Marking {
    support: BTreeSet<usize>,
    rank: usize,
}

impl Marking {
    pub fn new(rank: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let support: BTreeSet<usize> = support.into_iter().collect();
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        if let Some(&index) = support.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::SupportOutOfRange { index, rank });
        }
        Ok(Self { support, rank })
    }

    pub fn single(rank: usize, node: usize) -> Result<Self> {
        Self::new(rank, [node])
    }

    pub fn full(rank: usize) -> Result<Self> {
        Self::new(rank, 1..=rank)
    }

    /// Parses `"1,2"` or `"{1,2}"`.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let body = text.trim().trim_start_matches('{').trim_end_matches('}');
        let nodes = body
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::InvalidMarking(text.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, nodes)
    }

    /// Every non-empty support, ordered by size, then lexicographically.
    pub fn all(rank: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (1u64..(1 << rank))
            .map(|mask| {
                let support = (0..rank).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                Self { support, rank }
            })
            .collect();
        out.sort_by(|a, b| (a.len(), a.nodes()).cmp(&(b.len(), b.nodes())));
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.support.contains(&node)
    }

    pub fn nodes(&self) -> Vec<usize> {
        self.support.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &Marking) -> bool {
        self.support.is_subset(&other.support)
    }

    /// Bit `i − 1` set for each node `i`.
    pub fn mask(&self) -> u64 {
        self.support.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// 0/1 vector of length `rank`.
    pub fn indicator(&self) -> Vec<u8> {
        (1..=self.rank).map(|i| self.contains(i) as u8).collect()
    }

    /// Image under a node permutation (0-based, as returned by the Satake
    /// automorphism search restricted to the restricted-root nodes).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            support: self.support.iter().map(|&i| perm[i - 1] + 1).collect(),
            rank: self.rank,
        }
    }

    /// True when `α` lies in the tangent space: `Σ_{i ∈ support} n_i(α) > 0`.
    pub fn is_tangent(&self, coeffs: &[i64]) -> bool {
        self.support.iter().map(|&i| coeffs[i - 1]).sum::<i64>() > 0
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Marking {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.nodes().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKind {
    MostSingular,
    TwoNode,
    Intermediate,
    Principal,
}

impl OrbitKind {
    pub fn of(marking: &Marking) -> Self {
        match marking.len() {
            n if n == marking.rank() => OrbitKind::Principal,
            1 => OrbitKind::MostSingular,
            2 => OrbitKind::TwoNode,
            _ => OrbitKind::Intermediate,
        }
    }
}

impl fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitKind::MostSingular => "most_singular",
            OrbitKind::TwoNode => "two_node",
            OrbitKind::Intermediate => "intermediate",
            OrbitKind::Principal => "principal",
        })
    }
}

/// Tangent and normal root-space decomposition of an orbit.
///
/// Root lists hold indices into `space.roots().positive_roots()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGeometry {
    pub tangent_roots: Vec<usize>,
    pub normal_roots: Vec<usize>,
    pub tangent_dim: u64,
    pub normal_dim_in_ambient: u64,
    pub kind: OrbitKind,
}

pub fn orbit_geometry(space: &SymmetricSpace, marking: &Marking) -> Result<OrbitGeometry> {
    check_rank(space, marking)?;
    let mults = space.multiplicities();
    let mut geometry = OrbitGeometry {
        tangent_roots: Vec::new(),
        normal_roots: Vec::new(),
        tangent_dim: 0,
        normal_dim_in_ambient: space.rank() as u64,
        kind: OrbitKind::of(marking),
    };
    for (i, root) in space.roots().positive_roots().iter().enumerate() {
        if marking.is_tangent(&root.simple_coeffs) {
            geometry.tangent_roots.push(i);
            geometry.tangent_dim += mults[i] as u64;
        } else {
            geometry.normal_roots.push(i);
            geometry.normal_dim_in_ambient += mults[i] as u64;
        }
    }
    debug_assert_eq!(geometry.tangent_dim + geometry.normal_dim_in_ambient, dimension(space));
    Ok(geometry)
}

fn check_rank(space: &SymmetricSpace, marking: &Marking) -> Result<()> {
    if marking.rank() != space.rank() {
        return Err(Error::DimensionMismatch {
            expected: space.rank(),
            got: marking.rank(),
        });
    }
    Ok(())
}

/// A single-node orbit is extrinsically symmetric iff the node has
/// coefficient 1 in the highest restricted root.
pub fn is_extrinsically_symmetric(space: &SymmetricSpace, marking: &Marking) -> bool {
    match marking.nodes().as_slice() {
        [i] => space.roots().highest_root().simple_coeffs[i - 1] == 1,
        _ => false,
    }
}

/// Nodes `i` with `n_i(δ) = 1`, 1-based.
pub fn symmetric_nodes(space: &SymmetricSpace) -> Vec<usize> {
    let delta = &space.roots().highest_root().simple_coeffs;
    (1..=space.rank()).filter(|&i| delta[i - 1] == 1).collect()
}

/// Whether enlarging the support from `inner` to `outer` only enlarges the
/// set of tangent roots.
pub fn monotonicity_check(space: &SymmetricSpace, inner: &Marking, outer: &Marking) -> Result<bool> {
    if !inner.is_subset(outer) {
        return Err(Error::NotNested {
            inner: inner.nodes(),
            outer: outer.nodes(),
        });
    }
    let a = orbit_geometry(space, inner)?;
    let b = orbit_geometry(space, outer)?;
    let outer_set: BTreeSet<usize> = b.tangent_roots.into_iter().collect();
    Ok(a.tangent_roots.iter().all(|i| outer_set.contains(i)))
}

/// Output of the `orbit` command.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub space: String,
    pub support: Vec<usize>,
    pub tangent_dim: u64,
    pub codim: u64,
    pub kind: OrbitKind,
    pub symmetric: bool,
}

pub fn orbit_report(space: &SymmetricSpace, marking: &Marking) -> Result<OrbitReport> {
    let g = orbit_geometry(space, marking)?;
    Ok(OrbitReport {
        space: space.label(),
        support: marking.nodes(),
        tangent_dim: g.tangent_dim,
        codim: g.normal_dim_in_ambient,
        kind: g.kind,
        symmetric: is_extrinsically_symmetric(space, marking),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> SymmetricSpace {
        SymmetricSpace::exceptional("G").unwrap()
    }

    #[test]
    fn marking_validation() {
        assert_eq!(Marking::new(3, []), Err(Error::EmptySupport));
        assert!(matches!(Marking::new(3, [4]), Err(Error::SupportOutOfRange { index: 4, .. })));
        assert!(matches!(Marking::new(3, [0]), Err(Error::SupportOutOfRange { index: 0, .. })));
        assert_eq!(Marking::parse(3, "{1, 3}").unwrap().nodes(), vec![1, 3]);
        assert_eq!(Marking::all(3).len(), 7);
        assert_eq!(Marking::all(3)[3].nodes(), vec![1, 2]);
    }

    #[test]
    fn g2_long_node_orbit() {
        let g = orbit_geometry(&g2(), &Marking::single(2, 2).unwrap()).unwrap();
        assert_eq!(g.tangent_dim, 5);
        assert_eq!(g.kind, OrbitKind::MostSingular);
        assert_eq!(g.normal_dim_in_ambient, 3);
    }

    #[test]
    fn full_support_has_no_normal_roots() {
        for s in [g2(), SymmetricSpace::aii(3).unwrap(), SymmetricSpace::exceptional("EIII").unwrap()] {
            let g = orbit_geometry(&s, &Marking::full(s.rank()).unwrap()).unwrap();
            assert!(g.normal_roots.is_empty());
            assert_eq!(g.normal_dim_in_ambient, s.rank() as u64);
            assert_eq!(g.kind, OrbitKind::Principal);
        }
    }

    #[test]
    fn eiii_singular_orbit() {
        let s = SymmetricSpace::exceptional("EIII").unwrap();
        let g = orbit_geometry(&s, &Marking::single(2, 1).unwrap()).unwrap();
        assert_eq!(g.tangent_dim, 21);
    }

    #[test]
    fn symmetric_criterion_examples() {
        let ai = SymmetricSpace::ai(4).unwrap();
        assert!(is_extrinsically_symmetric(&ai, &Marking::single(4, 1).unwrap()));
        let ci = SymmetricSpace::ci(4).unwrap();
        assert!(!is_extrinsically_symmetric(&ci, &Marking::single(4, 1).unwrap()));
        assert!(!is_extrinsically_symmetric(&g2(), &Marking::single(2, 1).unwrap()));
        assert!(!is_extrinsically_symmetric(&ai, &Marking::new(4, [1, 2]).unwrap()));
    }

    #[test]
    fn monotonicity_examples() {
        let a3 = SymmetricSpace::ai(3).unwrap();
        let m = |r, s: &[usize]| Marking::new(r, s.iter().copied()).unwrap();
        assert!(monotonicity_check(&a3, &m(3, &[1]), &m(3, &[1, 2])).unwrap());
        assert!(monotonicity_check(&g2(), &m(2, &[2]), &m(2, &[1, 2])).unwrap());
        let fi = SymmetricSpace::exceptional("FI").unwrap();
        assert!(monotonicity_check(&fi, &m(4, &[1]), &Marking::full(4).unwrap()).unwrap());
        assert!(matches!(
            monotonicity_check(&a3, &m(3, &[1, 3]), &m(3, &[1, 2])),
            Err(Error::NotNested { .. })
        ));
    }

    #[test]
    fn report_fields() {
        let r = orbit_report(&SymmetricSpace::ai(3).unwrap(), &Marking::single(3, 1).unwrap()).unwrap();
        assert_eq!(r.tangent_dim, 3);
        assert_eq!(r.codim, 6);
        assert!(r.symmetric);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"kind\":\"most_singular\""));
    }
}
