//! Diagonal involutions: sign characters on restricted root spaces.
//!
//! A parity vector `c ∈ {0,1}^rank` acts on `p_α` by
//! `ε_c(α) = (−1)^{Σ c_i n_i(α)}`. The canonical involution `e^{π ad a₀}` of
//! an orbit is the character whose `c` is the indicator of the marking.
//! Non-canonical characters are candidates only: the search reports them but
//! does not construct an isometry realizing them.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::{orbit_geometry, Marking};
use crate::rootsys::{Root, RootSystem};
use crate::symspace::SymmetricSpace;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignCharacter {
    c: Vec<u8>,
}

impl SignCharacter {
    pub fn new(c: Vec<u8>) -> Self {
        assert!(c.iter().all(|&b| b <= 1), "parity vector entries must be 0 or 1");
        Self { c }
    }

    pub fn from_mask(rank: usize, mask: u64) -> Self {
        Self::new((0..rank).map(|i| (mask >> i & 1) as u8).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.c
    }

    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn mask(&self) -> u64 {
        self.c.iter().enumerate().fold(0, |m, (i, &b)| m | (b as u64) << i)
    }

    pub fn is_trivial(&self) -> bool {
        self.c.iter().all(|&b| b == 0)
    }

    /// `+1` or `−1` on a root with the given simple coefficients.
    pub fn sign(&self, coeffs: &[i64]) -> i8 {
        let s: i64 = self.c.iter().zip(coeffs).map(|(&c, &n)| c as i64 * n).sum();
        if s.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Image under a node permutation (0-based).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut c = vec![0; self.c.len()];
        for (i, &b) in self.c.iter().enumerate() {
            c[perm[i]] = b;
        }
        Self { c }
    }
}

impl fmt::Display for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.c {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

pub fn evaluate_character(rs: &RootSystem, c: &SignCharacter, alpha: &Root) -> Result<i8> {
    if c.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: c.rank(),
        });
    }
    if alpha.simple_coeffs.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: alpha.simple_coeffs.len(),
        });
    }
    Ok(c.sign(&alpha.simple_coeffs))
}

pub fn canonical_involution(marking: &Marking) -> SignCharacter {
    SignCharacter::new(marking.indicator())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FixedProfile {
    /// Total multiplicity of tangent roots with `ε = +1`.
    pub fixed_tangent_dim: u64,
    /// `ε = +1` on every normal root.
    pub normal_identity: bool,
    /// Total multiplicity of positive roots with `ε = −1`.
    pub neg_mult_total: u64,
    /// `ε = −1` on some tangent root.
    pub nontrivial_on_tangent: bool,
}

pub fn fixed_profile(space: &SymmetricSpace, marking: &Marking, c: &SignCharacter) -> Result<FixedProfile> {
    Ok(CharacterTable::new(space).profile(marking.mask(), c.mask()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingClass {
    Symmetry,
    AlmostSymmetry,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    CanonicalCertified,
    TorusCandidate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub space: String,
    pub support: Marking,
    #[serde(serialize_with = "serialize_bits")]
    pub c: SignCharacter,
    pub class: FindingClass,
    pub certification: Certification,
    pub fixed_tangent_dim: u64,
    pub orbit_dim: u64,
}

fn serialize_bits<S: serde::Serializer>(c: &SignCharacter, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.bits().serialize(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason", content = "k")]
pub enum Rejection {
    NormalNotFixed,
    TrivialCharacter,
    Orientation,
    Coindex(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Finding),
    Rejected(Rejection),
}

impl Outcome {
    pub fn finding(&self) -> Option<&Finding> {
        match self {
            Outcome::Found(f) => Some(f),
            Outcome::Rejected(_) => None,
        }
    }
}

/// Per-root bitmasks for fast character evaluation on one space.
///
/// For a positive root, `odd` has bit `i` set when `n_i` is odd and `support`
/// has bit `i` set when `n_i ≠ 0`; then `ε_c = (−1)^{popcount(c & odd)}` and the
/// root is tangent to the marking `S` iff `support & S ≠ 0`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    rank: usize,
    roots: Vec<(u64, u64, u64)>,
}

impl CharacterTable {
    pub fn new(space: &SymmetricSpace) -> Self {
        let mults = space.multiplicities();
        let roots = space
            .roots()
            .positive_roots()
            .iter()
            .zip(mults)
            .map(|(r, m)| {
                let mut odd = 0;
                let mut nonzero = 0;
                for (i, &n) in r.simple_coeffs.iter().enumerate() {
                    if n % 2 != 0 {
                        odd |= 1 << i;
                    }
                    if n != 0 {
                        nonzero |= 1 << i;
                    }
                }
                (odd, nonzero, m as u64)
            })
            .collect();
        Self {
            rank: space.rank(),
            roots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn profile(&self, marking: u64, c: u64) -> FixedProfile {
        let mut p = FixedProfile {
            fixed_tangent_dim: 0,
            normal_identity: true,
            neg_mult_total: 0,
            nontrivial_on_tangent: false,
        };
        for &(odd, nonzero, m) in &self.roots {
            let negative = (c & odd).count_ones() % 2 == 1;
            let tangent = nonzero & marking != 0;
            if negative {
                p.neg_mult_total += m;
            }
            match (tangent, negative) {
                (true, false) => p.fixed_tangent_dim += m,
                (true, true) => p.nontrivial_on_tangent = true,
                (false, true) => p.normal_identity = false,
                (false, false) => {}
            }
        }
        p
    }

    /// Rejection reason, or the finding class with its fixed tangent dimension.
    ///
    /// The orientation filter applies to non-canonical characters only; the
    /// canonical involution is realized whatever its determinant on `p`.
    pub fn judge(&self, marking: u64, c: u64) -> std::result::Result<(FindingClass, u64), Rejection> {
        let p = self.profile(marking, c);
        if !p.normal_identity {
            return Err(Rejection::NormalNotFixed);
        }
        if !p.nontrivial_on_tangent {
            return Err(Rejection::TrivialCharacter);
        }
        if c != marking && p.neg_mult_total % 2 == 1 {
            return Err(Rejection::Orientation);
        }
        match p.fixed_tangent_dim {
            0 => Ok((FindingClass::Symmetry, 0)),
            1 => Ok((FindingClass::AlmostSymmetry, 1)),
            k => Err(Rejection::Coindex(k)),
        }
    }
}

fn make_finding(space: &SymmetricSpace, marking: &Marking, c: SignCharacter, class: FindingClass, fixed: u64) -> Result<Finding> {
    let certification = if c.bits() == marking.indicator().as_slice() {
        Certification::CanonicalCertified
    } else {
        Certification::TorusCandidate
    };
    Ok(Finding {
        space: space.label(),
        support: marking.clone(),
        c,
        class,
        certification,
        fixed_tangent_dim: fixed,
        orbit_dim: orbit_geometry(space, marking)?.tangent_dim,
    })
}

pub fn classify_character(space: &SymmetricSpace, marking: &Marking, c: &SignCharacter) -> Result<Outcome> {
    if c.rank() != space.rank() || marking.rank() != space.rank() {
        return Err(Error::DimensionMismatch {
            expected: space.rank(),
            got: c.rank().max(marking.rank()),
        });
    }
    if c.is_trivial() {
        return Ok(Outcome::Rejected(Rejection::TrivialCharacter));
    }
    match CharacterTable::new(space).judge(marking.mask(), c.mask()) {
        Ok((class, fixed)) => Ok(Outcome::Found(make_finding(space, marking, c.clone(), class, fixed)?)),
        Err(r) => Ok(Outcome::Rejected(r)),
    }
}

/// Every non-trivial character with its outcome, ordered by `c`.
pub fn torus_outcomes(space: &SymmetricSpace, marking: &Marking) -> Result<Vec<(SignCharacter, Outcome)>> {
    let table = CharacterTable::new(space);
    torus_outcomes_with(&table, space, marking)
}

pub fn torus_outcomes_with(
    table: &CharacterTable,
    space: &SymmetricSpace,
    marking: &Marking,
) -> Result<Vec<(SignCharacter, Outcome)>> {
    let rank = space.rank();
    if marking.rank() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            got: marking.rank(),
        });
    }
    let m = marking.mask();
    let mut out = Vec::with_capacity((1 << rank) - 1);
    for mask in 1u64..(1 << rank) {
        let c = SignCharacter::from_mask(rank, mask);
        let outcome = match table.judge(m, mask) {
            Ok((class, fixed)) => Outcome::Found(make_finding(space, marking, c.clone(), class, fixed)?),
            Err(r) => Outcome::Rejected(r),
        };
        out.push((c, outcome));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// All symmetries and almost symmetries among the sign characters of a marking.
pub fn torus_search(space: &SymmetricSpace, marking: &Marking) -> Result<Vec<Finding>> {
    Ok(torus_outcomes(space, marking)?
        .into_iter()
        .filter_map(|(_, o)| match o {
            Outcome::Found(f) => Some(f),
            Outcome::Rejected(_) => None,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family, RootSystemKind};

    fn m(rank: usize, s: &[usize]) -> Marking {
        Marking::new(rank, s.iter().copied()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let g2 = build_root_system(RootSystemKind::exceptional(Family::G2).unwrap()).unwrap();
        let delta = g2.highest_root().clone();
        assert_eq!(delta.simple_coeffs, vec![3, 2]);
        assert_eq!(evaluate_character(&g2, &SignCharacter::new(vec![0, 1]), &delta), Ok(1));
        for r in g2.positive_roots() {
            assert_eq!(evaluate_character(&g2, &SignCharacter::new(vec![0, 0]), r), Ok(1));
        }
        let a3 = build_root_system(RootSystemKind::new(Family::A, 3).unwrap()).unwrap();
        let r = &a3.positive_roots()[a3.position(&[1, 1, 0]).unwrap()];
        assert_eq!(evaluate_character(&a3, &SignCharacter::new(vec![0, 1, 0]), r), Ok(-1));
        assert!(matches!(
            evaluate_character(&a3, &SignCharacter::new(vec![1, 0]), r),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_on_a2_full() {
        let c = canonical_involution(&m(2, &[1, 2]));
        assert_eq!(c.sign(&[1, 0]), -1);
        assert_eq!(c.sign(&[0, 1]), -1);
        assert_eq!(c.sign(&[1, 1]), 1);
    }

    #[test]
    fn profiles() {
        for q in 2..6 {
            let ci = SymmetricSpace::ci(q).unwrap();
            let mk = m(q, &[1]);
            let p = fixed_profile(&ci, &mk, &canonical_involution(&mk)).unwrap();
            assert_eq!(p.fixed_tangent_dim, 1);
            assert!(p.normal_identity);
        }
        let fi = SymmetricSpace::exceptional("FI").unwrap();
        let mk = m(4, &[2]);
        assert!(fixed_profile(&fi, &mk, &canonical_involution(&mk)).unwrap().fixed_tangent_dim >= 2);
        let aii = SymmetricSpace::aii(3).unwrap();
        for mk in Marking::all(3) {
            for mask in 1..8 {
                let p = fixed_profile(&aii, &mk, &SignCharacter::from_mask(3, mask)).unwrap();
                assert_eq!(p.fixed_tangent_dim % 4, 0);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let g = SymmetricSpace::exceptional("G").unwrap();
        let mk = m(2, &[1]);
        match classify_character(&g, &mk, &canonical_involution(&mk)).unwrap() {
            Outcome::Found(f) => {
                assert_eq!(f.class, FindingClass::AlmostSymmetry);
                assert_eq!(f.fixed_tangent_dim, 1);
                assert_eq!(f.certification, Certification::CanonicalCertified);
            }
            other => panic!("unexpected {other:?}"),
        }
        let ai = SymmetricSpace::ai(4).unwrap();
        let mk = m(4, &[1]);
        let f = classify_character(&ai, &mk, &canonical_involution(&mk)).unwrap();
        assert_eq!(f.finding().unwrap().class, FindingClass::Symmetry);
        let eiv = SymmetricSpace::exceptional("EIV").unwrap();
        for mk in Marking::all(2) {
            for mask in 1..4 {
                let o = classify_character(&eiv, &mk, &SignCharacter::from_mask(2, mask)).unwrap();
                assert!(o.finding().map_or(true, |f| f.class != FindingClass::AlmostSymmetry));
            }
        }
        assert_eq!(
            classify_character(&ai, &mk, &SignCharacter::new(vec![0, 0, 0, 0])).unwrap(),
            Outcome::Rejected(Rejection::TrivialCharacter)
        );
        assert_eq!(
            classify_character(&ai, &mk, &SignCharacter::new(vec![0, 1, 0, 0])).unwrap(),
            Outcome::Rejected(Rejection::NormalNotFixed)
        );
    }

    #[test]
    fn search_examples() {
        let cii = SymmetricSpace::cii(5, 2).unwrap();
        for mk in Marking::all(2) {
            assert!(torus_search(&cii, &mk)
                .unwrap()
                .iter()
                .all(|f| f.class != FindingClass::AlmostSymmetry));
        }
        let evii = SymmetricSpace::exceptional("EVII").unwrap();
        let found = torus_search(&evii, &m(3, &[1])).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].class, FindingClass::AlmostSymmetry);
        assert_eq!(found[0].orbit_dim, 33);
    }

    #[test]
    fn finding_json_shape() {
        let g = SymmetricSpace::exceptional("G").unwrap();
        let f = &torus_search(&g, &m(2, &[1])).unwrap()[0];
        let v = serde_json::to_value(f).unwrap();
        assert_eq!(v["support"], serde_json::json!([1]));
        assert_eq!(v["c"], serde_json::json!([1, 0]));
        assert_eq!(v["class"], "almost_symmetry");
        assert_eq!(v["certification"], "canonical_certified");
    }
}
