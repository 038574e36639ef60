//! Dynkin graphs of types A, D and E, their orientations, and the
//! integral forms attached to them.
//!
//! Vertices are addressed by index into [`DynkinGraph::labels`]. The
//! canonical labels are:
//!
//! * `A_n`: `a, b, c, ...` along the path (`x1, x2, ...` when `n > 26`);
//! * `D_n`: `c'`, `c''` for the two short branches, `b0 .. b{n-4}` along the
//!   long branch starting at the branch vertex, and `c` at its end;
//! * `E_n`: `e1 .. e{n-1}` along the long row and `f` attached to `e3`.
//!   The index order is `e1, e2, e3, f, e4, ...`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    D,
    E,
}

impl DynkinType {
    pub fn letter(self) -> char {
        match self {
            DynkinType::A => 'A',
            DynkinType::D => 'D',
            DynkinType::E => 'E',
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(DynkinType::A),
            "D" | "d" => Ok(DynkinType::D),
            "E" | "e" => Ok(DynkinType::E),
            other => Err(Error::Orientation(format!("unknown Dynkin type `{other}`"))),
        }
    }
}

/// A Dynkin tree with canonical vertex labels and precomputed distances.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinGraph {
    ty: DynkinType,
    rank: usize,
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    dist: Vec<Vec<usize>>,
}

impl DynkinGraph {
    /// Builds the canonical labeled graph of type `ty` and rank `n`.
    pub fn build(ty: DynkinType, n: usize) -> Result<Self> {
        let legal = match ty {
            DynkinType::A => n >= 1,
            DynkinType::D => n >= 4,
            DynkinType::E => (6..=8).contains(&n),
        };
        if !legal {
            return Err(Error::IllegalRank {
                ty: ty.letter(),
                rank: n,
            });
        }
        let (labels, edges) = match ty {
            DynkinType::A => {
                let labels = if n <= 26 {
                    (0..n)
                        .map(|i| ((b'a' + i as u8) as char).to_string())
                        .collect()
                } else {
                    (1..=n).map(|i| format!("x{i}")).collect()
                };
                (labels, (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
            }
            DynkinType::D => {
                let mut labels = vec!["c'".to_string(), "c''".to_string()];
                labels.extend((0..=n - 4).map(|i| format!("b{i}")));
                labels.push("c".to_string());
                let mut edges = vec![(0, 2), (1, 2)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (labels, edges)
            }
            DynkinType::E => {
                let mut labels = vec!["e1".to_string(), "e2".to_string(), "e3".to_string()];
                labels.push("f".to_string());
                labels.extend((4..n).map(|i| format!("e{i}")));
                let mut edges = vec![(0, 1), (1, 2), (2, 3), (2, 4)];
                edges.extend((4..n - 1).map(|i| (i, i + 1)));
                (labels, edges)
            }
        };
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        let dist = (0..n).map(|s| bfs(&neighbors, s)).collect();
        Ok(DynkinGraph {
            ty,
            rank: n,
            labels,
            edges,
            neighbors,
            dist,
        })
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `A4`, `D6`, ...
    pub fn name(&self) -> String {
        format!("{}{}", self.ty, self.rank)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The open neighbourhood `a⁻`.
    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.neighbors[a]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.neighbors[a].len()
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        self.dist[a][b]
    }

    /// Distance between two vertices given by label.
    pub fn graph_distance(&self, a: &str, b: &str) -> Result<usize> {
        Ok(self.distance(self.index_of(a)?, self.index_of(b)?))
    }

    /// Base vertex anchoring the parity classes of `ZΔ`: `b0` in type D,
    /// the first vertex otherwise.
    pub fn base_vertex(&self) -> usize {
        match self.ty {
            DynkinType::D => 2,
            _ => 0,
        }
    }

    /// The end `c` of the long branch in type D.
    pub fn tail_vertex(&self) -> Option<usize> {
        (self.ty == DynkinType::D).then_some(self.rank - 1)
    }

    /// Vertices `c, c', c''` of a type D graph (where the maximal root is 1).
    pub fn is_branch_end(&self, a: usize) -> bool {
        self.ty == DynkinType::D && (a <= 1 || a == self.rank - 1)
    }

    /// The Coxeter-type constant `n_Δ`.
    pub fn delta_number(&self) -> i64 {
        let n = self.rank as i64;
        match (self.ty, self.rank) {
            (DynkinType::A, _) => n + 1,
            (DynkinType::D, _) => 2 * n - 2,
            (DynkinType::E, 6) => 12,
            (DynkinType::E, 7) => 18,
            (DynkinType::E, _) => 30,
        }
    }

    pub fn maximal_root(&self) -> DimVector {
        let coords = match (self.ty, self.rank) {
            (DynkinType::A, n) => vec![1; n],
            (DynkinType::D, n) => {
                let mut v = vec![1, 1];
                v.extend(std::iter::repeat_n(2, n - 3));
                v.push(1);
                v
            }
            (DynkinType::E, 6) => vec![1, 2, 3, 2, 2, 1],
            (DynkinType::E, 7) => vec![2, 3, 4, 2, 3, 2, 1],
            (DynkinType::E, _) => vec![2, 4, 6, 3, 5, 4, 3, 2],
        };
        DimVector(coords)
    }

    /// The graph involution `φ_Δ` induced by the Nakayama permutation,
    /// as a vertex permutation.
    pub fn phi(&self) -> Vec<usize> {
        let n = self.rank;
        let mut perm: Vec<usize> = (0..n).collect();
        match self.ty {
            DynkinType::A if n >= 2 => perm.reverse(),
            DynkinType::D if n % 2 == 1 => perm.swap(0, 1),
            DynkinType::E if n == 6 => {
                perm.swap(0, 5);
                perm.swap(1, 4);
            }
            _ => {}
        }
        perm
    }

    fn check_len(&self, d: &DimVector) -> Result<()> {
        if d.len() != self.rank {
            return Err(Error::IndexMismatch {
                expected: self.rank,
                got: d.len(),
            });
        }
        Ok(())
    }

    /// The Tits form `q_Δ(d) = Σ d_a² − Σ_{edges} d_a d_b`.
    pub fn tits_form(&self, d: &DimVector) -> Result<i64> {
        self.check_len(d)?;
        let squares: i64 = d.0.iter().map(|x| x * x).sum();
        let edges: i64 = self.edges.iter().map(|&(u, v)| d[u] * d[v]).sum();
        Ok(squares - edges)
    }

    /// All positive roots, by box enumeration under the maximal root.
    /// Sorted by total dimension, then lexicographically.
    pub fn positive_roots(&self) -> Vec<DimVector> {
        let h = self.maximal_root();
        let mut roots = Vec::new();
        let mut d = vec![0i64; self.rank];
        loop {
            let v = DimVector(d.clone());
            if !v.is_zero() && self.tits_form(&v).unwrap() == 1 {
                roots.push(v);
            }
            // odometer increment bounded by h
            let mut i = 0;
            loop {
                if i == self.rank {
                    roots.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.0.cmp(&b.0)));
                    return roots;
                }
                if d[i] < h[i] {
                    d[i] += 1;
                    break;
                }
                d[i] = 0;
                i += 1;
            }
        }
    }
}

fn bfs(neighbors: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; neighbors.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in &neighbors[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// An integer vector indexed by the vertices of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, a: usize) -> Self {
        let mut v = vec![0; n];
        v[a] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn iter(&self) -> impl Iterator<Item = &i64> {
        self.0.iter()
    }
}

impl Index<usize> for DimVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for DimVector {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}

impl Add<&DimVector> for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&DimVector> for &DimVector {
    type Output = DimVector;
    fn sub(self, rhs: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&DimVector> for DimVector {
    fn add_assign(&mut self, rhs: &DimVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&DimVector> for DimVector {
    fn sub_assign(&mut self, rhs: &DimVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &DimVector {
    type Output = DimVector;
    fn neg(self) -> DimVector {
        DimVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&DimVector> for i64 {
    type Output = DimVector;
    fn mul(self, rhs: &DimVector) -> DimVector {
        DimVector(rhs.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An orientation of a Dynkin graph. Arrow `i` orients edge `i` of the
/// graph and is stored as `(source, target)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinQuiver {
    graph: DynkinGraph,
    arrows: Vec<(usize, usize)>,
}

impl DynkinQuiver {
    /// Orients every canonical edge `(u, v)` as `u → v`.
    pub fn with_default_orientation(graph: DynkinGraph) -> Self {
        let arrows = graph.edges().to_vec();
        DynkinQuiver { graph, arrows }
    }

    /// Builds a quiver from an explicit arrow list, which must orient each
    /// edge exactly once.
    pub fn from_arrows(graph: DynkinGraph, arrows: &[(usize, usize)]) -> Result<Self> {
        if arrows.len() != graph.edges().len() {
            return Err(Error::Orientation(format!(
                "expected {} arrows, got {}",
                graph.edges().len(),
                arrows.len()
            )));
        }
        let mut oriented = vec![None; graph.edges().len()];
        for &(s, t) in arrows {
            let i = edge_index(&graph, s, t)?;
            if oriented[i].is_some() {
                return Err(Error::Orientation(format!(
                    "edge {}-{} oriented twice",
                    graph.label(s),
                    graph.label(t)
                )));
            }
            oriented[i] = Some((s, t));
        }
        let arrows = oriented.into_iter().map(Option::unwrap).collect();
        Ok(DynkinQuiver { graph, arrows })
    }

    /// Parses `s>t,s>t,...` over canonical labels. Edges not mentioned keep
    /// the default orientation.
    pub fn parse_orientation(graph: DynkinGraph, arrows_text: &str) -> Result<Self> {
        let mut arrows = graph.edges().to_vec();
        let mut seen = vec![false; arrows.len()];
        for item in arrows_text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let (s, t) = item
                .split_once('>')
                .ok_or_else(|| Error::Orientation(format!("`{item}` is not of the form s>t")))?;
            let s = graph.index_of(s.trim())?;
            let t = graph.index_of(t.trim())?;
            let i = edge_index(&graph, s, t)?;
            if seen[i] {
                return Err(Error::Orientation(format!(
                    "edge in `{item}` oriented twice"
                )));
            }
            seen[i] = true;
            arrows[i] = (s, t);
        }
        Ok(DynkinQuiver { graph, arrows })
    }

    /// All `2^(n-1)` orientations, in a fixed order starting with the
    /// default one.
    pub fn all_orientations(graph: &DynkinGraph) -> Vec<DynkinQuiver> {
        let m = graph.edges().len();
        (0u64..1 << m)
            .map(|mask| {
                let arrows = graph
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                    .collect();
                DynkinQuiver {
                    graph: graph.clone(),
                    arrows,
                }
            })
            .collect()
    }

    pub fn graph(&self) -> &DynkinGraph {
        &self.graph
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.rank()
    }

    /// `s>t,...` form of the orientation.
    pub fn orientation_string(&self) -> String {
        self.arrows
            .iter()
            .map(|&(s, t)| format!("{}>{}", self.graph.label(s), self.graph.label(t)))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// The Euler form `b_Q(d, e) = Σ d_a e_a − Σ_α d_{sα} e_{tα}`.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        let n = self.num_vertices();
        for v in [d, e] {
            if v.len() != n {
                return Err(Error::IndexMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let diag: i64 = d.iter().zip(e.iter()).map(|(a, b)| a * b).sum();
        let arrows: i64 = self.arrows.iter().map(|&(s, t)| d[s] * e[t]).sum();
        Ok(diag - arrows)
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            ty: self.graph.ty(),
            n: self.graph.rank(),
            vertices: self.graph.labels().to_vec(),
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| {
                    [
                        self.graph.label(s).to_string(),
                        self.graph.label(t).to_string(),
                    ]
                })
                .collect(),
        }
    }

    pub fn from_json(json: &QuiverJson) -> Result<Self> {
        let graph = DynkinGraph::build(json.ty, json.n)?;
        if json.vertices != graph.labels() {
            return Err(Error::Orientation(format!(
                "vertex labels {:?} differ from the canonical {:?}",
                json.vertices,
                graph.labels()
            )));
        }
        let arrows = json
            .arrows
            .iter()
            .map(|[s, t]| Ok((graph.index_of(s)?, graph.index_of(t)?)))
            .collect::<Result<Vec<_>>>()?;
        DynkinQuiver::from_arrows(graph, &arrows)
    }
}

fn edge_index(graph: &DynkinGraph, s: usize, t: usize) -> Result<usize> {
    graph
        .edges()
        .iter()
        .position(|&(u, v)| (u, v) == (s, t) || (v, u) == (s, t))
        .ok_or_else(|| {
            Error::Orientation(format!(
                "{} and {} are not adjacent",
                graph.label(s),
                graph.label(t)
            ))
        })
}

/// Serialized form `{type, n, vertices, arrows}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    #[serde(rename = "type")]
    pub ty: DynkinType,
    pub n: usize,
    pub vertices: Vec<String>,
    pub arrows: Vec<[String; 2]>,
}

impl Serialize for DynkinQuiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DynkinQuiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = QuiverJson::deserialize(d)?;
        DynkinQuiver::from_json(&json).map_err(serde::de::Error::custom)
    }
}
