//! Catalog of irreducible simply-connected compact symmetric spaces of rank ≥ 2.
//!
//! Each entry records its restricted root system, the multiplicity of every
//! root-length class, its Satake diagram and a handful of structural flags.
//! Entries are checked on construction: `dim X = rank + Σ_{α>0} m_α` must
//! equal the independently stored `dim G − dim K`, the stored flags must agree
//! with the multiplicities, and the Satake diagram must have exactly `rank`
//! white-node classes.
//!
//! Rank-one spaces are not part of the catalog.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, cartan_matrix, Family, RootClass, RootSystem, RootSystemKind};

/// Multiplicity of each root-length class of the restricted root system.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityMap(BTreeMap<RootClass, u32>);

impl MultiplicityMap {
    pub fn new(entries: &[(RootClass, u32)]) -> Self {
        Self(entries.iter().copied().collect())
    }

    pub fn uniform(classes: &[RootClass], m: u32) -> Self {
        Self(classes.iter().map(|&c| (c, m)).collect())
    }

    pub fn get(&self, class: RootClass) -> Option<u32> {
        self.0.get(&class).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (RootClass, u32)> + '_ {
        self.0.iter().map(|(c, m)| (*c, *m))
    }

    pub fn all(&self, pred: impl Fn(u32) -> bool) -> bool {
        self.0.values().all(|&m| pred(m))
    }
}

impl Serialize for MultiplicityMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (c, m) in &self.0 {
            map.serialize_entry(&c.to_string(), m)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeColor {
    White,
    Black,
}

/// Ambient Dynkin diagram with black nodes and curved arrows.
///
/// Nodes are numbered from 0 internally; components of a disconnected ambient
/// diagram (the group case) are numbered consecutively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeDiagram {
    components: Vec<RootSystemKind>,
    cartan: Vec<Vec<i64>>,
    colors: Vec<NodeColor>,
    partner: Vec<Option<usize>>,
}

/// A permutation of diagram nodes: `perm[v]` is the image of node `v`.
pub type NodePermutation = Vec<usize>;

impl SatakeDiagram {
    /// `black` and `arrows` use 1-based node numbers.
    pub fn new(components: Vec<RootSystemKind>, black: &[usize], arrows: &[(usize, usize)]) -> Result<Self> {
        let n: usize = components.iter().map(|k| k.rank()).sum();
        let mut cartan = vec![vec![0; n]; n];
        let mut offset = 0;
        for kind in &components {
            let c = cartan_matrix(*kind);
            for (i, row) in c.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    cartan[offset + i][offset + j] = v;
                }
            }
            offset += kind.rank();
        }
        let bad = |detail: String| Error::CatalogIntegrity {
            label: "satake diagram".into(),
            detail,
        };
        let mut colors = vec![NodeColor::White; n];
        for &b in black {
            if b == 0 || b > n {
                return Err(bad(format!("black node {b} out of range")));
            }
            colors[b - 1] = NodeColor::Black;
        }
        let mut partner = vec![None; n];
        for &(a, b) in arrows {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(bad(format!("invalid arrow ({a}, {b})")));
            }
            let (a, b) = (a - 1, b - 1);
            if colors[a] == NodeColor::Black || colors[b] == NodeColor::Black {
                return Err(bad(format!("arrow ({}, {}) touches a black node", a + 1, b + 1)));
            }
            if partner[a].is_some() || partner[b].is_some() {
                return Err(bad(format!("node in more than one arrow at ({}, {})", a + 1, b + 1)));
            }
            partner[a] = Some(b);
            partner[b] = Some(a);
        }
        Ok(Self {
            components,
            cartan,
            colors,
            partner,
        })
    }

    pub fn node_count(&self) -> usize {
        self.colors.len()
    }

    pub fn components(&self) -> &[RootSystemKind] {
        &self.components
    }

    pub fn colors(&self) -> &[NodeColor] {
        &self.colors
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Arrow pairs, 0-based, each listed once with the smaller node first.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter_map(|(a, p)| p.filter(|&b| a < b).map(|b| (a, b)))
            .collect()
    }

    pub fn arrow_partner(&self, node: usize) -> Option<usize> {
        self.partner[node]
    }

    /// White nodes counted up to the arrow relation.
    pub fn white_classes(&self) -> usize {
        (0..self.node_count())
            .filter(|&v| self.colors[v] == NodeColor::White)
            .filter(|&v| self.partner[v].map_or(true, |p| v < p))
            .count()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && (self.cartan[a][b] != 0 || self.partner[a] == Some(b))
    }

    /// All node permutations preserving the Cartan entries (adjacency, bond
    /// multiplicity and direction), the colors and the arrow relation.
    pub fn automorphisms(&self) -> Vec<NodePermutation> {
        let n = self.node_count();
        // Visit nodes so that each one, where possible, has an already placed neighbour.
        let mut order = Vec::with_capacity(n);
        let mut anchor = vec![None; n];
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for w in 0..n {
                    if !seen[w] && self.adjacent(v, w) {
                        seen[w] = true;
                        anchor[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &order, &anchor, &mut perm, &mut used, &mut out);
        out.sort();
        out
    }

    fn extend(
        &self,
        k: usize,
        order: &[usize],
        anchor: &[Option<usize>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<NodePermutation>,
    ) {
        if k == order.len() {
            out.push(perm.clone());
            return;
        }
        let v = order[k];
        let n = self.node_count();
        for w in 0..n {
            if used[w] || self.colors[v] != self.colors[w] {
                continue;
            }
            if let Some(u) = anchor[v] {
                if !self.adjacent(perm[u], w) {
                    continue;
                }
            }
            let consistent = order[..k].iter().all(|&u| {
                let pu = perm[u];
                self.cartan[v][u] == self.cartan[w][pu]
                    && self.cartan[u][v] == self.cartan[pu][w]
                    && (self.partner[v] == Some(u)) == (self.partner[w] == Some(pu))
            });
            if !consistent {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            self.extend(k + 1, order, anchor, perm, used, out);
            used[w] = false;
            perm[v] = usize::MAX;
        }
    }

    /// Sends every white node to itself or to its arrow partner.
    pub fn is_admissible(&self, perm: &[usize]) -> bool {
        (0..self.node_count())
            .filter(|&v| self.colors[v] == NodeColor::White)
            .all(|v| perm[v] == v || self.partner[v] == Some(perm[v]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceFlags {
    pub maximal_rank: bool,
    pub group_case: bool,
    pub splitting_rank: bool,
    pub hermitian: bool,
}

impl SpaceFlags {
    /// Flags implied by the multiplicities alone.
    ///
    /// A space is Hermitian exactly when its restricted system is of type
    /// `C`/`BC` (or `B_2 = C_2`) and the long class has multiplicity one.
    pub fn from_multiplicities(kind: RootSystemKind, mults: &MultiplicityMap) -> Self {
        let cyclic = matches!(kind.family(), Family::C | Family::BC)
            || (kind.family() == Family::B && kind.rank() == 2);
        Self {
            maximal_rank: mults.all(|m| m == 1),
            group_case: mults.all(|m| m == 2),
            splitting_rank: mults.all(|m| m % 2 == 0),
            hermitian: cyclic && mults.get(RootClass::Long) == Some(1),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SymmetricSpace {
    /// Family label without parameters, e.g. `AIII`.
    pub class: String,
    pub parameters: Vec<u32>,
    pub g_name: String,
    pub k_name: String,
    pub mults: MultiplicityMap,
    pub satake: SatakeDiagram,
    /// `dim G − dim K`, stored independently of the root data.
    pub known_dim: u64,
    pub flags: SpaceFlags,
    /// Remarks attached to this entry (isomorphisms, notation caveats).
    pub notes: Vec<&'static str>,
    roots: RootSystem,
}

fn kind(f: Family, q: usize) -> Result<RootSystemKind> {
    RootSystemKind::new(f, q)
}

fn exc(f: Family) -> RootSystemKind {
    RootSystemKind::exceptional(f).expect("exceptional family")
}

fn invalid(family: &str, detail: impl Into<String>) -> Error {
    Error::InvalidParameters {
        family: family.into(),
        detail: detail.into(),
    }
}

use RootClass::{Long, Middle, Short};

struct Entry {
    class: &'static str,
    parameters: Vec<u32>,
    g: String,
    k: String,
    restricted: RootSystemKind,
    mults: MultiplicityMap,
    satake: SatakeDiagram,
    known_dim: u64,
    hermitian: bool,
    notes: Vec<&'static str>,
}

impl Entry {
    fn finish(self) -> Result<SymmetricSpace> {
        let roots = build_root_system(self.restricted)?;
        let mut flags = SpaceFlags::from_multiplicities(self.restricted, &self.mults);
        flags.hermitian = self.hermitian;
        let space = SymmetricSpace {
            class: self.class.to_string(),
            parameters: self.parameters,
            g_name: self.g,
            k_name: self.k,
            mults: self.mults,
            satake: self.satake,
            known_dim: self.known_dim,
            flags,
            notes: self.notes,
            roots,
        };
        space.validate()?;
        Ok(space)
    }
}

fn odd_nodes(upto: usize) -> Vec<usize> {
    (1..=upto).step_by(2).collect()
}

impl SymmetricSpace {
    pub fn label(&self) -> String {
        if self.parameters.is_empty() {
            self.class.clone()
        } else {
            let p: Vec<String> = self.parameters.iter().map(|p| p.to_string()).collect();
            format!("{}({})", self.class, p.join(","))
        }
    }

    /// `(g, k)` with the family parameters left symbolic, e.g. `("sp(q)", "u(q)")`.
    pub fn family_names(&self) -> (String, String) {
        let (g, k) = match self.class.as_str() {
            "AI" => ("su(q+1)", "so(q+1)"),
            "AII" => ("su(2q+2)", "sp(q+1)"),
            "AIII" => ("su(p+q)", "s(u(p)⊕u(q))"),
            "BDI" => ("so(p+q)", "so(p)⊕so(q)"),
            "CI" => ("sp(q)", "u(q)"),
            "CII" => ("sp(p+q)", "sp(p)⊕sp(q)"),
            "DIII" => ("so(2n)", "u(n)"),
            c if c.starts_with("Group-") => ("l⊕l", "l"),
            _ => return (self.g_name.clone(), self.k_name.clone()),
        };
        (g.to_string(), k.to_string())
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn restricted(&self) -> RootSystemKind {
        self.roots.kind()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    /// Multiplicity of the positive root at `index` in `roots().positive_roots()`.
    pub fn multiplicity(&self, index: usize) -> u32 {
        let class = self.roots.root_class(&self.roots.positive_roots()[index]);
        self.mults
            .get(class)
            .unwrap_or_else(|| panic!("{}: no multiplicity for {class} roots", self.label()))
    }

    /// Multiplicities in the order of `roots().positive_roots()`.
    pub fn multiplicities(&self) -> Vec<u32> {
        (0..self.roots.positive_roots().len())
            .map(|i| self.multiplicity(i))
            .collect()
    }

    /// Replaces the multiplicities without re-validating the entry.
    ///
    /// Meant for fault-injection tests of the classifier.
    pub fn with_multiplicities_unchecked(mut self, mults: MultiplicityMap) -> Self {
        self.mults = mults;
        self
    }

    fn validate(&self) -> Result<()> {
        let label = self.label();
        let fail = |detail: String| Error::CatalogIntegrity {
            label: label.clone(),
            detail,
        };
        let classes = self.roots.classes();
        for c in &classes {
            match self.mults.get(*c) {
                Some(m) if m >= 1 => {}
                _ => return Err(fail(format!("missing or zero multiplicity for {c} roots"))),
            }
        }
        if let Some((c, _)) = self.mults.iter().find(|(c, _)| !classes.contains(c)) {
            return Err(fail(format!("multiplicity given for absent class {c}")));
        }
        let computed = dimension(self);
        if computed != self.known_dim {
            return Err(Error::DimensionIntegrity {
                label,
                computed,
                known: self.known_dim,
            });
        }
        let derived = SpaceFlags::from_multiplicities(self.restricted(), &self.mults);
        if derived != self.flags {
            return Err(fail(format!("stored flags {:?} disagree with multiplicities {derived:?}", self.flags)));
        }
        let white = self.satake.white_classes();
        if white != self.rank() {
            return Err(fail(format!(
                "Satake diagram has {white} white classes for restricted rank {}",
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn ai(q: usize) -> Result<Self> {
        if q < 2 {
            return Err(invalid("AI", "rank q must be at least 2"));
        }
        let n = q as u64;
        Entry {
            class: "AI",
            parameters: vec![q as u32],
            g: format!("su({})", q + 1),
            k: format!("so({})", q + 1),
            restricted: kind(Family::A, q)?,
            mults: MultiplicityMap::new(&[(Long, 1)]),
            satake: SatakeDiagram::new(vec![kind(Family::A, q)?], &[], &[])?,
            known_dim: n * (n + 3) / 2,
            hermitian: false,
            notes: vec![],
        }
        .finish()
    }

    pub fn aii(q: usize) -> Result<Self> {
        if q < 2 {
            return Err(invalid("AII", "rank q must be at least 2"));
        }
        let n = q as u64;
        Entry {
            class: "AII",
            parameters: vec![q as u32],
            g: format!("su({})", 2 * q + 2),
            k: format!("sp({})", q + 1),
            restricted: kind(Family::A, q)?,
            mults: MultiplicityMap::new(&[(Long, 4)]),
            satake: SatakeDiagram::new(vec![kind(Family::A, 2 * q + 1)?], &odd_nodes(2 * q + 1), &[])?,
            known_dim: n * (2 * n + 3),
            hermitian: false,
            notes: vec![],
        }
        .finish()
    }

    /// `SU(p+q)/S(U(p)×U(q))`, `p ≥ q ≥ 2`.
    pub fn aiii(p: usize, q: usize) -> Result<Self> {
        if q < 2 || p < q {
            return Err(invalid("AIII", format!("need p >= q >= 2, got ({p}, {q})")));
        }
        let (restricted, mults) = if p == q {
            (kind(Family::C, q)?, MultiplicityMap::new(&[(Short, 2), (Long, 1)]))
        } else {
            (
                kind(Family::BC, q)?,
                MultiplicityMap::new(&[(Middle, 2), (Short, 2 * (p - q) as u32), (Long, 1)]),
            )
        };
        let n = p + q - 1;
        let black: Vec<usize> = (q + 1..p).collect();
        let arrows: Vec<(usize, usize)> = (1..=q).map(|i| (i, p + q - i)).filter(|(a, b)| a < b).collect();
        Entry {
            class: "AIII",
            parameters: vec![p as u32, q as u32],
            g: format!("su({})", p + q),
            k: format!("s(u({p})⊕u({q}))"),
            restricted,
            mults,
            satake: SatakeDiagram::new(vec![kind(Family::A, n)?], &black, &arrows)?,
            known_dim: 2 * (p * q) as u64,
            hermitian: true,
            notes: vec![],
        }
        .finish()
    }

    /// Real Grassmannian `SO(p+q)/SO(p)×SO(q)`, `p ≥ q ≥ 2`, `(p, q) ≠ (2, 2)`.
    ///
    /// `p = q` and `p = q + 1` are the maximal-rank spaces DI and BI; `q = 2`
    /// is Hermitian.
    pub fn bdi(p: usize, q: usize) -> Result<Self> {
        if q < 2 || p < q || (p, q) == (2, 2) {
            return Err(invalid("BDI", format!("need p >= q >= 2 and (p, q) != (2, 2), got ({p}, {q})")));
        }
        let (restricted, mults) = if p == q {
            (kind(Family::D, q)?, MultiplicityMap::new(&[(Long, 1)]))
        } else {
            (
                kind(Family::B, q)?,
                MultiplicityMap::new(&[(Long, 1), (Short, (p - q) as u32)]),
            )
        };
        let n = p + q;
        let satake = if n % 2 == 1 {
            let r = (n - 1) / 2;
            SatakeDiagram::new(vec![kind(Family::B, r)?], &(q + 1..=r).collect::<Vec<_>>(), &[])?
        } else {
            let r = n / 2;
            if q + 1 == r {
                SatakeDiagram::new(vec![kind(Family::D, r)?], &[], &[(r - 1, r)])?
            } else {
                SatakeDiagram::new(vec![kind(Family::D, r)?], &(q + 1..=r).collect::<Vec<_>>(), &[])?
            }
        };
        let mut notes = vec![];
        if (p, q) == (3, 3) {
            notes.push("so(6)/so(3)⊕so(3) ≅ su(4)/so(4): same space as AI(3) in D_3 = A_3 labels");
        }
        Entry {
            class: "BDI",
            parameters: vec![p as u32, q as u32],
            g: format!("so({n})"),
            k: format!("so({p})⊕so({q})"),
            restricted,
            mults,
            satake,
            known_dim: (p * q) as u64,
            hermitian: q == 2,
            notes,
        }
        .finish()
    }

    pub fn ci(q: usize) -> Result<Self> {
        if q < 2 {
            return Err(invalid("CI", "rank q must be at least 2"));
        }
        let mut notes = vec![];
        if q == 2 {
            notes.push("sp(2)/u(2) ≅ so(5)/so(2)⊕so(3): same space as BDI(3,2) in C_2 = B_2 labels");
        }
        Entry {
            class: "CI",
            parameters: vec![q as u32],
            g: format!("sp({q})"),
            k: format!("u({q})"),
            restricted: kind(Family::C, q)?,
            mults: MultiplicityMap::new(&[(Short, 1), (Long, 1)]),
            satake: SatakeDiagram::new(vec![kind(Family::C, q)?], &[], &[])?,
            known_dim: (q * (q + 1)) as u64,
            hermitian: true,
            notes,
        }
        .finish()
    }

    /// Quaternionic Grassmannian `Sp(p+q)/Sp(p)×Sp(q)`, `p ≥ q ≥ 2`.
    pub fn cii(p: usize, q: usize) -> Result<Self> {
        if q < 2 || p < q {
            return Err(invalid("CII", format!("need p >= q >= 2, got ({p}, {q})")));
        }
        let (restricted, mults) = if p == q {
            (kind(Family::C, q)?, MultiplicityMap::new(&[(Short, 4), (Long, 3)]))
        } else {
            (
                kind(Family::BC, q)?,
                MultiplicityMap::new(&[(Middle, 4), (Short, 4 * (p - q) as u32), (Long, 3)]),
            )
        };
        let n = p + q;
        let black: Vec<usize> = (1..=n).filter(|&i| !(i % 2 == 0 && i <= 2 * q)).collect();
        Entry {
            class: "CII",
            parameters: vec![p as u32, q as u32],
            g: format!("sp({n})"),
            k: format!("sp({p})⊕sp({q})"),
            restricted,
            mults,
            satake: SatakeDiagram::new(vec![kind(Family::C, n)?], &black, &[])?,
            known_dim: 4 * (p * q) as u64,
            hermitian: false,
            notes: vec![],
        }
        .finish()
    }

    /// `SO(2n)/U(n)`, `n ≥ 4`.
    pub fn diii(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(invalid("DIII", format!("need n >= 4, got {n}")));
        }
        let q = n / 2;
        let (restricted, mults) = if n % 2 == 0 {
            (kind(Family::C, q)?, MultiplicityMap::new(&[(Short, 4), (Long, 1)]))
        } else {
            (
                kind(Family::BC, q)?,
                MultiplicityMap::new(&[(Middle, 4), (Short, 4), (Long, 1)]),
            )
        };
        let black = odd_nodes(if n % 2 == 0 { n - 1 } else { n - 2 });
        let arrows = if n % 2 == 0 { vec![] } else { vec![(n - 1, n)] };
        let mut notes = vec![];
        if n == 4 {
            notes.push("so(8)/u(4) ≅ so(8)/so(2)⊕so(6) under triality");
        }
        Entry {
            class: "DIII",
            parameters: vec![n as u32],
            g: format!("so({})", 2 * n),
            k: format!("u({n})"),
            restricted,
            mults,
            satake: SatakeDiagram::new(vec![kind(Family::D, n)?], &black, &arrows)?,
            known_dim: (n * (n - 1)) as u64,
            hermitian: true,
            notes,
        }
        .finish()
    }

    /// Exceptional spaces by their Cartan label (`EI` … `EIX`, `FI`, `G`).
    pub fn exceptional(label: &str) -> Result<Self> {
        use Family::*;
        let m = MultiplicityMap::new;
        #[allow(clippy::type_complexity)]
        let (g, k, restricted, mults, ambient, black, arrows, dim, hermitian, notes): (
            &str,
            &str,
            RootSystemKind,
            MultiplicityMap,
            Family,
            &[usize],
            &[(usize, usize)],
            u64,
            bool,
            Vec<&'static str>,
        ) = match label {
            "EI" => ("e6", "sp(4)", exc(E6), m(&[(Long, 1)]), E6, &[], &[], 42, false, vec![]),
            "EII" => (
                "e6",
                "su(6)⊕su(2)",
                exc(F4),
                m(&[(Long, 1), (Short, 2)]),
                E6,
                &[],
                &[(1, 6), (3, 5)],
                40,
                false,
                vec![],
            ),
            "EIII" => (
                "e6",
                "so(10)⊕u(1)",
                kind(BC, 2)?,
                m(&[(Middle, 6), (Short, 8), (Long, 1)]),
                E6,
                &[3, 4, 5],
                &[(1, 6)],
                32,
                true,
                vec!["the singular orbit through α_1 has tangent classes θ_1±θ_2, θ_1, 2θ_1"],
            ),
            "EIV" => ("e6", "f4", kind(A, 2)?, m(&[(Long, 8)]), E6, &[2, 3, 4, 5], &[], 26, false, vec![]),
            "EV" => ("e7", "su(8)", exc(E7), m(&[(Long, 1)]), E7, &[], &[], 70, false, vec![]),
            "EVI" => (
                "e7",
                "so(12)⊕su(2)",
                exc(F4),
                m(&[(Long, 1), (Short, 4)]),
                E7,
                &[2, 5, 7],
                &[],
                64,
                false,
                vec![],
            ),
            "EVII" => (
                "e7",
                "e6⊕u(1)",
                kind(C, 3)?,
                m(&[(Short, 8), (Long, 1)]),
                E7,
                &[2, 3, 4, 5],
                &[],
                54,
                true,
                vec!["C_3 convention: the multiplicity-one class is 2θ_i; the θ_i±θ_j have multiplicity 8"],
            ),
            "EVIII" => ("e8", "so(16)", exc(E8), m(&[(Long, 1)]), E8, &[], &[], 128, false, vec![]),
            "EIX" => (
                "e8",
                "e7⊕su(2)",
                exc(F4),
                m(&[(Long, 1), (Short, 8)]),
                E8,
                &[2, 3, 4, 5],
                &[],
                112,
                false,
                vec![],
            ),
            "FI" => (
                "f4",
                "sp(3)⊕sp(1)",
                exc(F4),
                m(&[(Long, 1), (Short, 1)]),
                F4,
                &[],
                &[],
                28,
                false,
                vec![],
            ),
            "G" => ("g2", "so(4)", exc(G2), m(&[(Long, 1), (Short, 1)]), G2, &[], &[], 8, false, vec![]),
            other => return Err(Error::UnknownSpace(other.to_string())),
        };
        Entry {
            class: match label {
                "EI" => "EI",
                "EII" => "EII",
                "EIII" => "EIII",
                "EIV" => "EIV",
                "EV" => "EV",
                "EVI" => "EVI",
                "EVII" => "EVII",
                "EVIII" => "EVIII",
                "EIX" => "EIX",
                "FI" => "FI",
                _ => "G",
            },
            parameters: vec![],
            g: g.into(),
            k: k.into(),
            restricted,
            mults,
            satake: SatakeDiagram::new(vec![exc(ambient)], black, arrows)?,
            known_dim: dim,
            hermitian,
            notes,
        }
        .finish()
    }

    /// The compact simple group `L` as the symmetric space `L×L/ΔL`.
    pub fn group(l: RootSystemKind) -> Result<Self> {
        let q = l.rank();
        let (name, dim) = match l.family() {
            Family::A => (format!("su({})", q + 1), q * (q + 2)),
            Family::B => (format!("so({})", 2 * q + 1), q * (2 * q + 1)),
            Family::C => (format!("sp({q})"), q * (2 * q + 1)),
            Family::D => (format!("so({})", 2 * q), q * (2 * q - 1)),
            Family::E6 => ("e6".into(), 78),
            Family::E7 => ("e7".into(), 133),
            Family::E8 => ("e8".into(), 248),
            Family::F4 => ("f4".into(), 52),
            Family::G2 => ("g2".into(), 14),
            Family::BC => return Err(invalid("Group", "BC is not the root system of a group")),
        };
        let min = match l.family() {
            Family::C => 3,
            Family::D => 4,
            _ => 2,
        };
        if q < min {
            return Err(invalid("Group", format!("{l} duplicates a smaller-rank family or has rank < 2")));
        }
        let roots = build_root_system(l)?;
        let arrows: Vec<(usize, usize)> = (1..=q).map(|i| (i, q + i)).collect();
        Entry {
            class: "Group",
            parameters: vec![],
            g: format!("{name}⊕{name}"),
            k: name,
            restricted: l,
            mults: MultiplicityMap::uniform(&roots.classes(), 2),
            satake: SatakeDiagram::new(vec![l, l], &[], &arrows)?,
            known_dim: dim as u64,
            hermitian: false,
            notes: vec![],
        }
        .finish()
        .map(|mut s| {
            s.class = format!("Group-{}", l.family());
            if l.family().fixed_rank().is_none() {
                s.parameters = vec![q as u32];
            }
            s
        })
    }

    /// Looks up a space by its printed label, e.g. `AIII(5,2)`, `EVII`, `Group-E6`.
    pub fn from_label(label: &str) -> Result<Self> {
        let unknown = || Error::UnknownSpace(label.to_string());
        let (class, params) = match label.find('(') {
            Some(i) if label.ends_with(')') => {
                let inner = &label[i + 1..label.len() - 1];
                let params = inner
                    .split(',')
                    .map(|s| s.trim().parse::<usize>().map_err(|_| unknown()))
                    .collect::<Result<Vec<_>>>()?;
                (&label[..i], params)
            }
            _ => (label, vec![]),
        };
        match (class, params.as_slice()) {
            ("AI", [q]) => Self::ai(*q),
            ("AII", [q]) => Self::aii(*q),
            ("AIII", [p, q]) => Self::aiii(*p, *q),
            ("BDI", [p, q]) => Self::bdi(*p, *q),
            ("CI", [q]) => Self::ci(*q),
            ("CII", [p, q]) => Self::cii(*p, *q),
            ("DIII", [n]) => Self::diii(*n),
            (c, []) if c.starts_with("Group-") => {
                let f: Family = c["Group-".len()..].parse().map_err(|_| unknown())?;
                Self::group(RootSystemKind::exceptional(f).map_err(|_| unknown())?)
            }
            (c, [q]) if c.starts_with("Group-") => {
                let f: Family = c["Group-".len()..].parse().map_err(|_| unknown())?;
                Self::group(RootSystemKind::new(f, *q).map_err(|_| unknown())?)
            }
            (c, []) => Self::exceptional(c),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for SymmetricSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}/{})", self.label(), self.g_name, self.k_name)
    }
}

/// `dim X = rank + Σ_{α ∈ Δ⁺} m_α`.
pub fn dimension(space: &SymmetricSpace) -> u64 {
    space.rank() as u64 + space.multiplicities().iter().map(|&m| m as u64).sum::<u64>()
}

/// Like [`dimension`] but reports a mismatch with the stored `dim G − dim K`.
pub fn checked_dimension(space: &SymmetricSpace) -> Result<u64> {
    let computed = dimension(space);
    if computed == space.known_dim {
        Ok(computed)
    } else {
        Err(Error::DimensionIntegrity {
            label: space.label(),
            computed,
            known: space.known_dim,
        })
    }
}

pub fn satake_automorphisms(space: &SymmetricSpace) -> Vec<NodePermutation> {
    space.satake.automorphisms()
}

/// Diagram automorphisms that can be induced by an involution acting
/// trivially on the Cartan subspace: every white node goes to itself or to
/// its arrow partner.
pub fn admissible_automorphisms(space: &SymmetricSpace) -> Vec<NodePermutation> {
    space
        .satake
        .automorphisms()
        .into_iter()
        .filter(|p| space.satake.is_admissible(p))
        .collect()
}

pub fn inner_only(space: &SymmetricSpace) -> bool {
    admissible_automorphisms(space).len() == 1
}

/// Every catalog entry with restricted rank in `2..=max_rank`.
///
/// Families with an unbounded second parameter (`AIII`, `BDI`, `CII`) are
/// instantiated at `p ∈ {q, q+1, q+3}`. Ordered by family label, then
/// parameters.
pub fn catalog(max_rank: usize) -> Result<Vec<SymmetricSpace>> {
    if max_rank < 2 {
        return Err(Error::MaxRankTooSmall(max_rank));
    }
    let mut out = Vec::new();
    for q in 2..=max_rank {
        out.push(SymmetricSpace::ai(q)?);
        out.push(SymmetricSpace::aii(q)?);
        out.push(SymmetricSpace::ci(q)?);
        for p in [q, q + 1, q + 3] {
            out.push(SymmetricSpace::aiii(p, q)?);
            out.push(SymmetricSpace::cii(p, q)?);
            if (p, q) != (2, 2) {
                out.push(SymmetricSpace::bdi(p, q)?);
            }
        }
        for f in [Family::A, Family::B, Family::C, Family::D] {
            let min = match f {
                Family::C => 3,
                Family::D => 4,
                _ => 2,
            };
            if q >= min {
                out.push(SymmetricSpace::group(kind(f, q)?)?);
            }
        }
    }
    for n in 4..=2 * max_rank + 1 {
        out.push(SymmetricSpace::diii(n)?);
    }
    for label in ["EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "G"] {
        let s = SymmetricSpace::exceptional(label)?;
        if s.rank() <= max_rank {
            out.push(s);
        }
    }
    for f in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
        if f.fixed_rank().unwrap() <= max_rank {
            out.push(SymmetricSpace::group(exc(f))?);
        }
    }
    out.sort_by(|a, b| (&a.class, &a.parameters).cmp(&(&b.class, &b.parameters)));
    Ok(out)
}

/// One entry of the `catalog --format json` dump.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogRecord {
    pub label: String,
    pub family: String,
    pub rank: usize,
    pub mults: MultiplicityMap,
    pub flags: SpaceFlags,
    pub known_dim: u64,
    pub parameters: Vec<u32>,
}

impl From<&SymmetricSpace> for CatalogRecord {
    fn from(s: &SymmetricSpace) -> Self {
        Self {
            label: s.label(),
            family: s.restricted().family().to_string(),
            rank: s.rank(),
            mults: s.mults.clone(),
            flags: s.flags,
            known_dim: s.known_dim,
            parameters: s.parameters.clone(),
        }
    }
}

pub fn catalog_json(spaces: &[SymmetricSpace]) -> serde_json::Value {
    let records: Vec<CatalogRecord> = spaces.iter().map(CatalogRecord::from).collect();
    serde_json::to_value(records).expect("catalog serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_entry() {
        let g = SymmetricSpace::exceptional("G").unwrap();
        assert_eq!(g.restricted().family(), Family::G2);
        assert!(g.flags.maximal_rank);
        assert_eq!(g.known_dim, 8);
        assert_eq!(dimension(&g), 8);
    }

    #[test]
    fn cii_multiplicities() {
        for (p, q) in [(3, 2), (5, 2), (6, 3)] {
            let s = SymmetricSpace::cii(p, q).unwrap();
            assert_eq!(s.restricted().family(), Family::BC);
            assert_eq!(s.mults.get(Middle), Some(4));
            assert_eq!(s.mults.get(Long), Some(3));
            assert_eq!(s.mults.get(Short), Some(4 * (p - q) as u32));
            assert_eq!(dimension(&s), 4 * (p * q) as u64);
        }
    }

    #[test]
    fn aii_uniform_four() {
        let s = SymmetricSpace::aii(3).unwrap();
        assert!(s.multiplicities().iter().all(|&m| m == 4));
        assert!(s.flags.splitting_rank);
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&SymmetricSpace::exceptional("EIII").unwrap()), 32);
        assert_eq!(dimension(&SymmetricSpace::exceptional("G").unwrap()), 8);
        let su3 = SymmetricSpace::group(RootSystemKind::new(Family::A, 2).unwrap()).unwrap();
        assert_eq!(dimension(&su3), 8);
        assert_eq!(su3.label(), "Group-A(2)");
    }

    #[test]
    fn corrupted_entry_is_rejected() {
        let s = SymmetricSpace::aii(2)
            .unwrap()
            .with_multiplicities_unchecked(MultiplicityMap::new(&[(Long, 1)]));
        assert!(matches!(checked_dimension(&s), Err(Error::DimensionIntegrity { .. })));
        assert!(s.validate().is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(SymmetricSpace::bdi(2, 2).is_err());
        assert!(SymmetricSpace::aiii(2, 3).is_err());
        assert!(SymmetricSpace::diii(3).is_err());
        assert!(SymmetricSpace::ai(1).is_err());
        assert!(matches!(SymmetricSpace::exceptional("FII"), Err(Error::UnknownSpace(_))));
        assert!(matches!(catalog(1), Err(Error::MaxRankTooSmall(1))));
    }

    #[test]
    fn labels_round_trip() {
        for s in catalog(4).unwrap() {
            let again = SymmetricSpace::from_label(&s.label()).unwrap();
            assert_eq!(again.label(), s.label());
            assert_eq!(again.known_dim, s.known_dim);
        }
    }

    #[test]
    fn satake_automorphism_counts() {
        assert_eq!(satake_automorphisms(&SymmetricSpace::ai(3).unwrap()).len(), 2);
        assert_eq!(satake_automorphisms(&SymmetricSpace::exceptional("EVIII").unwrap()).len(), 1);
        assert_eq!(satake_automorphisms(&SymmetricSpace::aii(2).unwrap()).len(), 2);
        assert_eq!(satake_automorphisms(&SymmetricSpace::aii(4).unwrap()).len(), 2);
    }

    #[test]
    fn admissible_automorphism_examples() {
        assert_eq!(admissible_automorphisms(&SymmetricSpace::ai(4).unwrap()).len(), 1);
        assert_eq!(admissible_automorphisms(&SymmetricSpace::aii(3).unwrap()).len(), 1);
        let aiii = admissible_automorphisms(&SymmetricSpace::aiii(5, 2).unwrap());
        assert_eq!(aiii.len(), 2);
        // the non-trivial one swaps each arrow pair α_i ↔ α_{p+q−i}
        assert_eq!(aiii[1], vec![5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn inner_only_examples() {
        assert!(inner_only(&SymmetricSpace::ai(3).unwrap()));
        assert!(inner_only(&SymmetricSpace::exceptional("EIV").unwrap()));
        assert!(!inner_only(&SymmetricSpace::bdi(6, 4).unwrap()));
        assert!(!inner_only(&SymmetricSpace::bdi(5, 3).unwrap()));
        assert!(inner_only(&SymmetricSpace::bdi(4, 4).unwrap()));
        assert!(!inner_only(&SymmetricSpace::exceptional("EIII").unwrap()));
        assert!(!inner_only(&SymmetricSpace::group(RootSystemKind::new(Family::A, 3).unwrap()).unwrap()));
    }

    #[test]
    fn satake_rejects_bad_arrows() {
        let a3 = RootSystemKind::new(Family::A, 3).unwrap();
        assert!(SatakeDiagram::new(vec![a3], &[1], &[(1, 3)]).is_err());
        assert!(SatakeDiagram::new(vec![a3], &[], &[(1, 3), (3, 2)]).is_err());
        assert!(SatakeDiagram::new(vec![a3], &[], &[(2, 2)]).is_err());
    }

    #[test]
    fn catalog_is_sorted_and_validated() {
        let c = catalog(8).unwrap();
        let keys: Vec<_> = c.iter().map(|s| (s.class.clone(), s.parameters.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(c.iter().any(|s| s.label() == "EVIII"));
        assert!(c.iter().any(|s| s.label() == "BDI(5,2)"));
        assert!(!c.iter().any(|s| s.label() == "BDI(2,2)"));
    }
}
