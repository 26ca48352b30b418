//! Restricted root systems in exact arithmetic.
//!
//! Every family is generated from its orthogonal-coordinate model (the
//! `θ`-basis for the classical and `BC` systems, the Bourbaki `ε`-models for
//! the exceptional ones), then rewritten in the simple-root basis. Simple
//! roots follow Bourbaki numbering; for `BC_q` the simple system is
//! `θ_i − θ_{i+1}` (i < q) together with `θ_q`, and the roots `2θ_i` are
//! included.
//!
//! No floating point is used anywhere in this module.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

/// Largest rank built by [`build_root_system`]. The catalog never needs more.
pub const DEFAULT_RANK_CEILING: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::BC,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];

    /// Fixed rank of an exceptional family.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::BC => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            f => f.fixed_rank().unwrap(),
        }
    }

    pub fn is_reduced(self) -> bool {
        self != Family::BC
    }

    /// Closed-form number of positive roots.
    pub fn positive_root_count(self, rank: usize) -> usize {
        let q = rank;
        match self {
            Family::A => q * (q + 1) / 2,
            Family::B | Family::C => q * q,
            Family::D => q * (q - 1),
            Family::BC => q * q + q,
            Family::G2 => 6,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown root system family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSystemKind {
    family: Family,
    rank: usize,
}

impl RootSystemKind {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None => rank >= family.min_rank(),
        };
        if !ok {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(Self { family, rank })
    }

    /// Exceptional families carry their rank implicitly.
    pub fn exceptional(family: Family) -> Result<Self> {
        let rank = family
            .fixed_rank()
            .ok_or(Error::InvalidRank { family, rank: 0 })?;
        Self::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_rank().is_some() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}_{}", self.family, self.rank)
        }
    }
}

/// Length class of a root inside its system.
///
/// Simply-laced systems have only `Long`. In `BC_q` the classes are
/// `θ_i` (short), `θ_i ± θ_j` (middle) and `2θ_i` (long); in `C_q` the
/// `θ_i ± θ_j` are short and `2θ_i` long.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    Long,
    Middle,
    Short,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::Long => "long",
            RootClass::Middle => "middle",
            RootClass::Short => "short",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub simple_coeffs: Vec<i64>,
    #[serde(serialize_with = "serialize_rationals")]
    pub ortho_coords: Vec<Rational>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.simple_coeffs.iter().all(|&n| n >= 0) && self.simple_coeffs.iter().any(|&n| n > 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            simple_coeffs: self.simple_coeffs.iter().map(|n| -n).collect(),
            ortho_coords: self.ortho_coords.iter().map(|x| -x).collect(),
        }
    }
}

pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = int(scale);
    v
}

fn combine(a: &[Rational], sa: i64, b: &[Rational], sb: i64) -> Vec<Rational> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * int(sa) + y * int(sb))
        .collect()
}

/// Dimension of the orthogonal-coordinate model.
fn ambient_dim(kind: RootSystemKind) -> usize {
    match kind.family {
        Family::A => kind.rank + 1,
        Family::B | Family::C | Family::D | Family::BC => kind.rank,
        Family::G2 => 3,
        Family::F4 => 4,
        Family::E6 | Family::E7 | Family::E8 => 8,
    }
}

/// Simple roots in orthogonal coordinates, Bourbaki numbering.
fn simple_roots_ortho(kind: RootSystemKind) -> Vec<Vec<Rational>> {
    let q = kind.rank;
    let n = ambient_dim(kind);
    let e = |i: usize| unit(n, i, 1);
    match kind.family {
        Family::A => (0..q).map(|i| combine(&e(i), 1, &e(i + 1), -1)).collect(),
        Family::B | Family::C | Family::BC | Family::D => {
            let mut s: Vec<_> = (0..q - 1)
                .map(|i| combine(&e(i), 1, &e(i + 1), -1))
                .collect();
            s.push(match kind.family {
                Family::C => unit(n, q - 1, 2),
                Family::D => combine(&e(q - 2), 1, &e(q - 1), 1),
                _ => e(q - 1),
            });
            s
        }
        Family::G2 => vec![
            vec![int(1), int(-1), int(0)],
            vec![int(-2), int(1), int(1)],
        ],
        Family::F4 => vec![
            vec![int(0), int(1), int(-1), int(0)],
            vec![int(0), int(0), int(1), int(-1)],
            vec![int(0), int(0), int(0), int(1)],
            vec![half(1), half(-1), half(-1), half(-1)],
        ],
        Family::E6 | Family::E7 | Family::E8 => {
            let mut s = vec![
                {
                    let mut v = vec![half(-1); 8];
                    v[0] = half(1);
                    v[7] = half(1);
                    v
                },
                combine(&e(0), 1, &e(1), 1),
            ];
            for i in 0..6 {
                s.push(combine(&e(i + 1), 1, &e(i), -1));
            }
            s.truncate(q);
            s
        }
    }
}

/// The full root set (both signs) in orthogonal coordinates.
fn all_roots_ortho(kind: RootSystemKind) -> Vec<Vec<Rational>> {
    let q = kind.rank;
    let n = ambient_dim(kind);
    let e = |i: usize| unit(n, i, 1);
    let mut out = Vec::new();
    let mut push_pm = |v: Vec<Rational>| {
        out.push(v.iter().map(|x| -x).collect());
        out.push(v);
    };
    match kind.family {
        Family::A => {
            for i in 0..n {
                for j in i + 1..n {
                    push_pm(combine(&e(i), 1, &e(j), -1));
                }
            }
        }
        Family::B | Family::C | Family::D | Family::BC => {
            for i in 0..q {
                for j in i + 1..q {
                    push_pm(combine(&e(i), 1, &e(j), -1));
                    push_pm(combine(&e(i), 1, &e(j), 1));
                }
                if matches!(kind.family, Family::B | Family::BC) {
                    push_pm(e(i));
                }
                if matches!(kind.family, Family::C | Family::BC) {
                    push_pm(unit(n, i, 2));
                }
            }
        }
        Family::G2 => {
            for i in 0..3 {
                for j in 0..3 {
                    if i < j {
                        push_pm(combine(&e(i), 1, &e(j), -1));
                    }
                }
                let mut v = vec![int(-1); 3];
                v[i] = int(2);
                push_pm(v);
            }
        }
        Family::F4 => {
            for i in 0..4 {
                push_pm(e(i));
                for j in i + 1..4 {
                    push_pm(combine(&e(i), 1, &e(j), -1));
                    push_pm(combine(&e(i), 1, &e(j), 1));
                }
            }
            for signs in 0..16u32 {
                if signs & 1 == 0 {
                    // the sign pattern and its negative are both generated
                    let v = (0..4)
                        .map(|k| if signs >> k & 1 == 1 { half(-1) } else { half(1) })
                        .collect();
                    push_pm(v);
                }
            }
        }
        Family::E6 | Family::E7 | Family::E8 => {
            for i in 0..8 {
                for j in i + 1..8 {
                    push_pm(combine(&e(i), 1, &e(j), -1));
                    push_pm(combine(&e(i), 1, &e(j), 1));
                }
            }
            for signs in 0..256u32 {
                if signs.count_ones() % 2 == 0 && signs & 1 == 0 {
                    let v = (0..8)
                        .map(|k| if signs >> k & 1 == 1 { half(-1) } else { half(1) })
                        .collect();
                    push_pm(v);
                }
            }
            // E6 and E7 are cut out of E8 after conversion to simple coordinates.
        }
    }
    out
}

fn invert(mut m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut inv: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i, 1)).collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Gram matrix of simple roots is non-singular");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col];
        for k in 0..n {
            m[col][k] /= p;
            inv[col][k] /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in 0..n {
                    let (a, b) = (m[col][k], inv[col][k]);
                    m[r][k] -= f * a;
                    inv[r][k] -= f * b;
                }
            }
        }
    }
    inv
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootSystemKind,
    simple_roots: Vec<Root>,
    positive_roots: Vec<Root>,
    cartan_pairings: Vec<Vec<Rational>>,
    highest_root: Root,
    gram_inverse: Vec<Vec<Rational>>,
    index: HashMap<Vec<i64>, usize>,
    class_norms: Vec<(Rational, RootClass)>,
}

/// Builds the root system under [`DEFAULT_RANK_CEILING`].
pub fn build_root_system(kind: RootSystemKind) -> Result<RootSystem> {
    build_root_system_with_ceiling(kind, DEFAULT_RANK_CEILING)
}

pub fn build_root_system_with_ceiling(kind: RootSystemKind, ceiling: usize) -> Result<RootSystem> {
    if kind.rank > ceiling {
        return Err(Error::RankAboveCeiling {
            rank: kind.rank,
            ceiling,
        });
    }
    // E6 and E7 live inside the E8 coordinate model.
    let model = match kind.family {
        Family::E6 | Family::E7 => RootSystemKind::exceptional(Family::E8)?,
        _ => kind,
    };
    let model_simple = simple_roots_ortho(model);
    let gram: Vec<Vec<Rational>> = model_simple
        .iter()
        .map(|a| model_simple.iter().map(|b| dot(a, b)).collect())
        .collect();
    let gram_inv = invert(gram.clone());

    let q = kind.rank;
    let mut positive = Vec::new();
    for v in all_roots_ortho(model) {
        let coeffs = solve_coeffs(&model_simple, &gram_inv, &v)
            .expect("every generated vector lies in the root lattice");
        let nonneg = coeffs.iter().all(|&n| n >= 0);
        let nonpos = coeffs.iter().all(|&n| n <= 0);
        assert!(nonneg ^ nonpos, "root {coeffs:?} is neither positive nor negative");
        if nonneg && coeffs[q..].iter().all(|&n| n == 0) {
            positive.push(Root {
                simple_coeffs: coeffs[..q].to_vec(),
                ortho_coords: v,
            });
        }
    }
    positive.sort_by(|a, b| a.simple_coeffs.cmp(&b.simple_coeffs));
    positive.dedup_by(|a, b| a.simple_coeffs == b.simple_coeffs);

    let simple_ortho = &model_simple[..q];
    let cartan_pairings: Vec<Vec<Rational>> = gram[..q].iter().map(|r| r[..q].to_vec()).collect();
    let gram_inverse = invert(cartan_pairings.clone());
    let simple_roots: Vec<Root> = (0..q)
        .map(|i| {
            let mut c = vec![0; q];
            c[i] = 1;
            Root {
                simple_coeffs: c,
                ortho_coords: simple_ortho[i].clone(),
            }
        })
        .collect();

    let highest_root = positive
        .iter()
        .max_by_key(|r| r.height())
        .cloned()
        .expect("non-empty root system");

    let index = positive
        .iter()
        .enumerate()
        .map(|(i, r)| (r.simple_coeffs.clone(), i))
        .collect();

    let mut norms: Vec<Rational> = positive.iter().map(|r| dot(&r.ortho_coords, &r.ortho_coords)).collect();
    norms.sort();
    norms.dedup();
    let classes: &[RootClass] = match norms.len() {
        1 => &[RootClass::Long],
        2 => &[RootClass::Short, RootClass::Long],
        3 => &[RootClass::Short, RootClass::Middle, RootClass::Long],
        n => unreachable!("root system with {n} root lengths"),
    };
    let class_norms = norms.into_iter().zip(classes.iter().copied()).collect();

    Ok(RootSystem {
        kind,
        simple_roots,
        positive_roots: positive,
        cartan_pairings,
        highest_root,
        gram_inverse,
        index,
        class_norms,
    })
}

/// Coefficients of `v` in the basis `simple`, or `None` if they are not integral
/// or `v` lies outside the span.
fn solve_coeffs(simple: &[Vec<Rational>], gram_inv: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<i64>> {
    let rhs: Vec<Rational> = simple.iter().map(|a| dot(a, v)).collect();
    let coeffs: Vec<Rational> = gram_inv.iter().map(|row| dot(row, &rhs)).collect();
    if !coeffs.iter().all(|c| c.is_integer()) {
        return None;
    }
    let coeffs: Vec<i64> = coeffs.iter().map(|c| c.to_integer()).collect();
    let mut back = vec![Rational::zero(); v.len()];
    for (n, a) in coeffs.iter().zip(simple) {
        for (b, x) in back.iter_mut().zip(a) {
            *b += x * int(*n);
        }
    }
    (back == v).then_some(coeffs)
}

impl RootSystem {
    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    /// Positive roots in lexicographic order of their simple coefficients.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Gram matrix `⟨α_i, α_j⟩` of the simple roots.
    pub fn cartan_pairings(&self) -> &[Vec<Rational>] {
        &self.cartan_pairings
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn position(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Simple-root coefficients recomputed from the orthogonal coordinates of `alpha`.
    pub fn coefficients(&self, alpha: &Root) -> Result<Vec<i64>> {
        let not_root = || Error::NotARoot(alpha.simple_coeffs.clone());
        let simple: Vec<Vec<Rational>> = self.simple_roots.iter().map(|r| r.ortho_coords.clone()).collect();
        if alpha.ortho_coords.len() != simple[0].len() {
            return Err(Error::DimensionMismatch {
                expected: simple[0].len(),
                got: alpha.ortho_coords.len(),
            });
        }
        let coeffs = solve_coeffs(&simple, &self.gram_inverse, &alpha.ortho_coords).ok_or_else(not_root)?;
        if self.is_root(&coeffs) {
            Ok(coeffs)
        } else {
            Err(not_root())
        }
    }

    pub fn to_ortho(&self, coeffs: &[i64]) -> Vec<Rational> {
        let dim = self.simple_roots[0].ortho_coords.len();
        let mut v = vec![Rational::zero(); dim];
        for (n, a) in coeffs.iter().zip(&self.simple_roots) {
            for (x, y) in v.iter_mut().zip(&a.ortho_coords) {
                *x += y * int(*n);
            }
        }
        v
    }

    pub fn inner(&self, a: &Root, b: &Root) -> Rational {
        dot(&a.ortho_coords, &b.ortho_coords)
    }

    /// Coefficients of `alpha` in the fundamental-weight basis:
    /// `m_j = 2⟨α, α_j⟩ / ⟨α_j, α_j⟩`.
    pub fn weight_decomposition(&self, alpha: &Root) -> Vec<Rational> {
        self.simple_roots
            .iter()
            .map(|s| int(2) * self.inner(alpha, s) / self.inner(s, s))
            .collect()
    }

    /// True iff `v` is the coefficient vector of a root (of either sign).
    pub fn is_root(&self, v: &[i64]) -> bool {
        if v.len() != self.rank() {
            return false;
        }
        if self.index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|n| -n).collect();
        self.index.contains_key(&neg)
    }

    pub fn root_class(&self, alpha: &Root) -> RootClass {
        let n = self.inner(alpha, alpha);
        self.class_norms
            .iter()
            .find(|(m, _)| *m == n)
            .map(|(_, c)| *c)
            .expect("root length belongs to the system")
    }

    /// Length classes present, longest first.
    pub fn classes(&self) -> Vec<RootClass> {
        let mut v: Vec<RootClass> = self.class_norms.iter().map(|(_, c)| *c).collect();
        v.sort();
        v
    }

    /// `true` iff every entry of `highest − α` is non-negative for all positive `α`.
    pub fn highest_root_dominates(&self) -> bool {
        self.positive_roots.iter().all(|r| {
            self.highest_root
                .simple_coeffs
                .iter()
                .zip(&r.simple_coeffs)
                .all(|(h, a)| h >= a)
        })
    }

    /// Deterministic JSON array of `{simple_coeffs, ortho_coords}`.
    pub fn dump_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.positive_roots).expect("roots serialize")
    }
}

/// Integer Cartan matrix `a_ij = 2⟨α_i, α_j⟩/⟨α_i, α_i⟩` of a Dynkin diagram.
///
/// Only the simple roots are built, so this works at any rank without the
/// enumeration ceiling. `BC` shares the diagram of `B`.
pub fn cartan_matrix(kind: RootSystemKind) -> Vec<Vec<i64>> {
    let simple = simple_roots_ortho(kind);
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| {
                    let v = int(2) * dot(a, b) / dot(a, a);
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, q: usize) -> RootSystem {
        build_root_system(RootSystemKind::new(f, q).unwrap()).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn a1_has_one_root() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.positive_roots()[0].simple_coeffs, vec![1]);
    }

    #[test]
    fn bc2_roots_match_theta_model() {
        let bc = rs(Family::BC, 2);
        let mut got: Vec<Vec<Rational>> = bc.positive_roots().iter().map(|r| r.ortho_coords.clone()).collect();
        got.sort();
        let mut want = vec![
            vec![q(1), q(-1)],
            vec![q(1), q(1)],
            vec![q(1), q(0)],
            vec![q(0), q(1)],
            vec![q(2), q(0)],
            vec![q(0), q(2)],
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn rank_validation() {
        assert!(matches!(
            RootSystemKind::new(Family::D, 2),
            Err(Error::InvalidRank { family: Family::D, rank: 2 })
        ));
        assert!(RootSystemKind::new(Family::B, 1).is_err());
        assert!(RootSystemKind::new(Family::E6, 7).is_err());
        assert!(RootSystemKind::new(Family::BC, 1).is_ok());
        assert!(RootSystemKind::new(Family::A, 0).is_err());
    }

    #[test]
    fn ceiling_is_configurable() {
        let kind = RootSystemKind::new(Family::A, 9).unwrap();
        assert!(matches!(build_root_system(kind), Err(Error::RankAboveCeiling { .. })));
        let a9 = build_root_system_with_ceiling(kind, 12).unwrap();
        assert_eq!(a9.positive_roots().len(), 45);
    }

    #[test]
    fn coefficients_examples() {
        let a3 = rs(Family::A, 3);
        let r = &a3.positive_roots()[a3.position(&[1, 1, 0]).unwrap()];
        assert_eq!(a3.coefficients(r).unwrap(), vec![1, 1, 0]);

        let g2 = rs(Family::G2, 2);
        assert_eq!(g2.coefficients(g2.highest_root()).unwrap(), vec![3, 2]);

        let f4 = rs(Family::F4, 4);
        assert_eq!(f4.coefficients(f4.highest_root()).unwrap(), vec![2, 3, 4, 2]);
    }

    #[test]
    fn coefficients_rejects_non_roots() {
        let a2 = rs(Family::A, 2);
        let fake = Root {
            simple_coeffs: vec![2, 1],
            ortho_coords: a2.to_ortho(&[2, 1]),
        };
        assert_eq!(a2.coefficients(&fake), Err(Error::NotARoot(vec![2, 1])));
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(Family::A, 4).highest_root().simple_coeffs, vec![1, 1, 1, 1]);
        assert_eq!(rs(Family::C, 3).highest_root().simple_coeffs, vec![2, 2, 1]);
        assert_eq!(rs(Family::G2, 2).highest_root().simple_coeffs, vec![3, 2]);
        for f in Family::ALL {
            let r = rs(f, f.fixed_rank().unwrap_or(4));
            assert!(r.highest_root_dominates(), "{f}");
        }
    }

    #[test]
    fn weight_decomposition_of_highest_root() {
        let f4 = rs(Family::F4, 4);
        assert_eq!(f4.weight_decomposition(f4.highest_root()), vec![q(1), q(0), q(0), q(0)]);
        let a5 = rs(Family::A, 5);
        assert_eq!(
            a5.weight_decomposition(a5.highest_root()),
            vec![q(1), q(0), q(0), q(0), q(1)]
        );
        let c4 = rs(Family::C, 4);
        assert_eq!(c4.weight_decomposition(c4.highest_root()), vec![q(2), q(0), q(0), q(0)]);
    }

    #[test]
    fn is_root_examples() {
        let a2 = rs(Family::A, 2);
        assert!(a2.is_root(&[1, 1]));
        assert!(!a2.is_root(&[2, 1]));
        assert!(a2.is_root(&[-1, -1]));
        assert!(!a2.is_root(&[1]));
        let g2 = rs(Family::G2, 2);
        assert!(g2.is_root(&[2, 1]));
    }

    #[test]
    fn root_classes() {
        let c3 = rs(Family::C, 3);
        let long = &c3.positive_roots()[c3.position(&[2, 2, 1]).unwrap()];
        assert_eq!(c3.root_class(long), RootClass::Long);
        assert_eq!(c3.root_class(&c3.simple_roots()[0]), RootClass::Short);

        let bc2 = rs(Family::BC, 2);
        assert_eq!(bc2.classes(), vec![RootClass::Long, RootClass::Middle, RootClass::Short]);
        assert_eq!(bc2.root_class(&bc2.simple_roots()[0]), RootClass::Middle);
        assert_eq!(bc2.root_class(&bc2.simple_roots()[1]), RootClass::Short);

        let g2 = rs(Family::G2, 2);
        assert_eq!(g2.root_class(&g2.simple_roots()[0]), RootClass::Short);
        assert_eq!(rs(Family::E6, 6).classes(), vec![RootClass::Long]);
    }

    #[test]
    fn cartan_matrices() {
        let g2 = cartan_matrix(RootSystemKind::exceptional(Family::G2).unwrap());
        assert_eq!(g2, vec![vec![2, -3], vec![-1, 2]]);
        let b3 = cartan_matrix(RootSystemKind::new(Family::B, 3).unwrap());
        assert_eq!(b3, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let a18 = cartan_matrix(RootSystemKind::new(Family::A, 18).unwrap());
        assert_eq!(a18.len(), 18);
        let e6 = cartan_matrix(RootSystemKind::exceptional(Family::E6).unwrap());
        assert_eq!(e6[1][3], -1);
        assert_eq!(e6[0][2], -1);
    }

    #[test]
    fn dump_is_deterministic() {
        let f4 = rs(Family::F4, 4);
        let a = serde_json::to_string(&f4.dump_json()).unwrap();
        let b = serde_json::to_string(&rs(Family::F4, 4).dump_json()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"1/2\""));
    }
}
