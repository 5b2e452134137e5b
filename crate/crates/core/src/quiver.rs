//! Quivers, dimension vectors, weights and the Euler form.
//!
//! Conventions, fixed here and used everywhere else:
//!
//! - Vertices are 0-based indices `0..k`.
//! - Parallel arrows are stored as counts: the arrow multiset is a map
//!   `(source, target) -> multiplicity`. Only counts ever enter a formula,
//!   so no arrow identities are kept.
//! - The Euler matrix has entries `chi[i][j] = delta_ij - #(arrows i -> j)`:
//!   arrows are counted FROM `i` TO `j`.
//! - A single vertex with no loops counts as strongly connected (via the
//!   empty path); a single vertex with exactly one loop is the smallest
//!   oriented cycle.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dimension vector: one nonnegative integer per vertex.
///
/// The derived `Ord` is lexicographic and is used for deterministic set
/// iteration and output ordering. The componentwise partial order that
/// matters mathematically is [`DimVector::dominated_by`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(Vec<u64>);

impl DimVector {
    pub fn new(coords: Vec<u64>) -> Self {
        DimVector(coords)
    }

    pub fn zeros(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    /// The unit vector `epsilon_v`.
    pub fn unit(len: usize, v: usize) -> Self {
        assert!(v < len, "unit vector index out of range");
        let mut coords = vec![0; len];
        coords[v] = 1;
        DimVector(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    /// Sum of all coordinates.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`. Both vectors must have equal length.
    pub fn dominated_by(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Vertices with a nonzero coordinate.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Componentwise difference; the caller guarantees `other` is dominated.
    pub(crate) fn diff(&self, other: &Self) -> Self {
        debug_assert!(other.dominated_by(self));
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DimVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidArgument(format!("invalid dimension vector `{s}`")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(DimVector(coords))
    }
}

/// An integral weight: one integer per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// The pairing `theta(b) = sum_v theta_v * b_v`.
    pub fn pairing(&self, b: &DimVector) -> Result<i64> {
        if self.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: b.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(b.coords())
            .map(|(&t, &c)| t * c as i64)
            .sum())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("invalid weight `{s}`")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(Weight(coords))
    }
}

/// The Euler form of a quiver as an integer matrix,
/// `chi[i][j] = delta_ij - #(arrows i -> j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl EulerMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    /// The bilinear pairing `a^T * chi * b`.
    pub fn pairing(&self, a: &DimVector, b: &DimVector) -> Result<i64> {
        for v in [a, b] {
            if v.len() != self.size {
                return Err(Error::LengthMismatch {
                    expected: self.size,
                    got: v.len(),
                });
            }
        }
        let right = self.right_apply(b);
        Ok(a.coords()
            .iter()
            .zip(&right)
            .map(|(&c, &r)| c as i64 * r)
            .sum())
    }

    /// The column vector `chi * b`.
    pub(crate) fn right_apply(&self, b: &DimVector) -> Vec<i64> {
        (0..self.size)
            .map(|i| {
                b.coords()
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| self.get(i, j) * c as i64)
                    .sum()
            })
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.size)
            .map(|i| self.entries[i * self.size..(i + 1) * self.size].to_vec())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

/// A finite quiver: `vertices` vertices and a counted multiset of arrows.
/// Loops and parallel arrows are allowed.
///
/// The JSON form is `{"vertices": k, "arrows": [[s, t], ...]}` where a pair
/// repeated `m` times denotes an arrow of multiplicity `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson", into = "QuiverJson")]
pub struct Quiver {
    vertices: usize,
    arrows: BTreeMap<(usize, usize), u64>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (s, t) in arrows {
            *counts.entry((s, t)).or_insert(0) += 1;
        }
        Self::from_counts(vertices, counts)
    }

    pub fn from_counts(vertices: usize, counts: BTreeMap<(usize, usize), u64>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::EmptyQuiver);
        }
        for (&(s, t), _) in &counts {
            for index in [s, t] {
                if index >= vertices {
                    return Err(Error::VertexOutOfRange {
                        index,
                        num_vertices: vertices,
                    });
                }
            }
        }
        let arrows = counts.into_iter().filter(|&(_, m)| m > 0).collect();
        Ok(Quiver { vertices, arrows })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrow_count(&self, source: usize, target: usize) -> u64 {
        self.arrows.get(&(source, target)).copied().unwrap_or(0)
    }

    pub fn num_arrows(&self) -> u64 {
        self.arrows.values().sum()
    }

    /// Iterate over `((source, target), multiplicity)` in sorted order.
    pub fn arrow_counts(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.arrows.iter().map(|(&pair, &m)| (pair, m))
    }

    /// All arrows expanded with multiplicity, in sorted order.
    pub fn arrow_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (&pair, &m) in &self.arrows {
            for _ in 0..m {
                out.push(pair);
            }
        }
        out
    }

    pub fn out_degree(&self, v: usize) -> u64 {
        self.arrows
            .iter()
            .filter(|(&(s, _), _)| s == v)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn in_degree(&self, v: usize) -> u64 {
        self.arrows
            .iter()
            .filter(|(&(_, t), _)| t == v)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn euler_form(&self) -> EulerMatrix {
        let k = self.vertices;
        let mut entries = vec![0i64; k * k];
        for i in 0..k {
            entries[i * k + i] = 1;
        }
        for (&(s, t), &m) in &self.arrows {
            entries[s * k + t] -= m as i64;
        }
        EulerMatrix { size: k, entries }
    }

    fn check_vertex_set(&self, verts: &BTreeSet<usize>) -> Result<()> {
        if verts.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for &v in verts {
            if v >= self.vertices {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    num_vertices: self.vertices,
                });
            }
        }
        Ok(())
    }

    /// Is the subquiver induced on `verts` strongly connected? Arrows with an
    /// endpoint outside `verts` are ignored. A single vertex qualifies.
    pub fn is_strongly_connected(&self, verts: &BTreeSet<usize>) -> Result<bool> {
        self.check_vertex_set(verts)?;
        let start = *verts.iter().next().expect("nonempty");
        let forward = self.reachable_within(start, verts, false);
        if forward.len() != verts.len() {
            return Ok(false);
        }
        let backward = self.reachable_within(start, verts, true);
        Ok(backward.len() == verts.len())
    }

    fn reachable_within(
        &self,
        start: usize,
        verts: &BTreeSet<usize>,
        reverse: bool,
    ) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for (&(s, t), _) in &self.arrows {
                let (from, to) = if reverse { (t, s) } else { (s, t) };
                if from == v && verts.contains(&to) && seen.insert(to) {
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    /// Is the subquiver induced on `verts` a single oriented cycle, i.e.
    /// every vertex has exactly one incoming and one outgoing arrow inside
    /// `verts` and the subquiver is strongly connected? A single vertex with
    /// exactly one loop qualifies.
    pub fn is_single_cycle(&self, verts: &BTreeSet<usize>) -> Result<bool> {
        self.check_vertex_set(verts)?;
        for &v in verts {
            let out: u64 = verts.iter().map(|&t| self.arrow_count(v, t)).sum();
            let inc: u64 = verts.iter().map(|&s| self.arrow_count(s, v)).sum();
            if out != 1 || inc != 1 {
                return Ok(false);
            }
        }
        self.is_strongly_connected(verts)
    }

    /// The subquiver induced on `verts`, with vertices renumbered in sorted
    /// order, together with the map from new indices back to old ones.
    pub fn induced(&self, verts: &BTreeSet<usize>) -> Result<(Quiver, Vec<usize>)> {
        self.check_vertex_set(verts)?;
        let old_of_new: Vec<usize> = verts.iter().copied().collect();
        let new_of_old: BTreeMap<usize, usize> = old_of_new
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut counts = BTreeMap::new();
        for (&(s, t), &m) in &self.arrows {
            if let (Some(&ns), Some(&nt)) = (new_of_old.get(&s), new_of_old.get(&t)) {
                counts.insert((ns, nt), m);
            }
        }
        Ok((Quiver::from_counts(old_of_new.len(), counts)?, old_of_new))
    }

    /// Two vertices `0 -> 1` joined by `n` parallel arrows.
    pub fn kronecker(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPreset(format!("kronecker:{n}")));
        }
        Quiver::new(2, std::iter::repeat((0, 1)).take(n as usize))
    }

    /// An oriented `n`-cycle `0 -> 1 -> ... -> n-1 -> 0`; for `n = 1` this is
    /// a single vertex with one loop.
    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPreset(format!("cyclic:{n}")));
        }
        let n = n as usize;
        Quiver::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// The full bipartite quiver: `p` sources `0..p`, `q` sinks `p..p+q`, and
    /// one arrow from every source to every sink.
    pub fn bipartite(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidPreset(format!("bipartite:{p}:{q}")));
        }
        let (p, q) = (p as usize, q as usize);
        let arrows = (0..p).flat_map(|i| (0..q).map(move |j| (i, p + j)));
        Quiver::new(p + q, arrows)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("quiver serialization cannot fail")
    }
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(json: QuiverJson) -> Result<Self> {
        Quiver::new(json.vertices, json.arrows)
    }
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> Self {
        QuiverJson {
            vertices: q.vertices,
            arrows: q.arrow_list(),
        }
    }
}

/// Preset quiver families, parsed from `kronecker:n`, `cyclic:n` or
/// `bipartite:p:q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Kronecker(u32),
    Cyclic(u32),
    Bipartite(u32, u32),
}

impl Preset {
    pub fn build(self) -> Result<Quiver> {
        match self {
            Preset::Kronecker(n) => Quiver::kronecker(n),
            Preset::Cyclic(n) => Quiver::cyclic(n),
            Preset::Bipartite(p, q) => Quiver::bipartite(p, q),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidPreset(s.to_string());
        let mut parts = s.split(':');
        let name = parts.next().ok_or_else(invalid)?;
        let params: Vec<u32> = parts
            .map(|p| p.parse::<u32>().map_err(|_| invalid()))
            .collect::<Result<_>>()?;
        let preset = match (name, params.as_slice()) {
            ("kronecker", [n]) => Preset::Kronecker(*n),
            ("cyclic", [n]) => Preset::Cyclic(*n),
            ("bipartite", [p, q]) => Preset::Bipartite(*p, *q),
            _ => return Err(invalid()),
        };
        if match preset {
            Preset::Kronecker(n) | Preset::Cyclic(n) => n == 0,
            Preset::Bipartite(p, q) => p == 0 || q == 0,
        } {
            return Err(invalid());
        }
        Ok(preset)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Kronecker(n) => write!(f, "kronecker:{n}"),
            Preset::Cyclic(n) => write!(f, "cyclic:{n}"),
            Preset::Bipartite(p, q) => write!(f, "bipartite:{p}:{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dv(coords: &[u64]) -> DimVector {
        DimVector::new(coords.to_vec())
    }

    #[test]
    fn euler_form_kronecker_3() {
        let q = Quiver::kronecker(3).unwrap();
        assert_eq!(q.euler_form().rows(), vec![vec![1, -3], vec![0, 1]]);
    }

    #[test]
    fn euler_form_cyclic_3() {
        let q = Quiver::cyclic(3).unwrap();
        assert_eq!(
            q.euler_form().rows(),
            vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]
        );
    }

    #[test]
    fn euler_form_one_vertex_two_loops() {
        let q = Quiver::new(1, [(0, 0), (0, 0)]).unwrap();
        assert_eq!(q.euler_form().rows(), vec![vec![-1]]);
    }

    #[test]
    fn euler_pairing_examples() {
        let k3 = Quiver::kronecker(3).unwrap();
        let chi = k3.euler_form();
        assert_eq!(chi.pairing(&dv(&[1, 2]), &dv(&[1, 2])).unwrap(), -1);
        for (n, r) in [(2u32, 1u64), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)] {
            let kn = Quiver::kronecker(n).unwrap();
            let a = dv(&[1, r]);
            let expected = 1 + (r * r) as i64 - (n as u64 * r) as i64;
            assert_eq!(kn.euler_form().pairing(&a, &a).unwrap(), expected);
        }
    }

    #[test]
    fn euler_pairing_length_mismatch() {
        let k2 = Quiver::kronecker(2).unwrap();
        let err = k2
            .euler_form()
            .pairing(&dv(&[1, 2, 3]), &dv(&[1, 2]))
            .unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { .. }));
    }

    #[test]
    fn theta_pairing_examples() {
        let theta = Weight::new(vec![-2, 1]);
        assert_eq!(theta.pairing(&dv(&[1, 2])).unwrap(), 0);
        assert_eq!(theta.pairing(&dv(&[2, 2])).unwrap(), -2);
        assert!(theta.pairing(&dv(&[1])).is_err());
    }

    #[test]
    fn support_examples() {
        assert!(dv(&[0, 0]).support().is_empty());
        assert_eq!(
            dv(&[2, 0, 1]).support().into_iter().collect::<Vec<_>>(),
            vec![0, 2]
        );
    }

    #[test]
    fn strongly_connected_conventions() {
        let single = Quiver::new(1, []).unwrap();
        assert!(single
            .is_strongly_connected(&BTreeSet::from([0]))
            .unwrap());
        let k2 = Quiver::kronecker(2).unwrap();
        assert!(!k2
            .is_strongly_connected(&BTreeSet::from([0, 1]))
            .unwrap());
        let c3 = Quiver::cyclic(3).unwrap();
        assert!(c3
            .is_strongly_connected(&BTreeSet::from([0, 1, 2]))
            .unwrap());
        assert!(!c3.is_strongly_connected(&BTreeSet::from([0, 1])).unwrap());
        assert!(c3.is_strongly_connected(&BTreeSet::from([1])).unwrap());
        assert!(matches!(
            c3.is_strongly_connected(&BTreeSet::new()),
            Err(Error::EmptyVertexSet)
        ));
        assert!(matches!(
            c3.is_strongly_connected(&BTreeSet::from([7])),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn single_cycle_conventions() {
        let loop1 = Quiver::cyclic(1).unwrap();
        assert!(loop1.is_single_cycle(&BTreeSet::from([0])).unwrap());
        let bare = Quiver::new(1, []).unwrap();
        assert!(!bare.is_single_cycle(&BTreeSet::from([0])).unwrap());
        let loops2 = Quiver::new(1, [(0, 0), (0, 0)]).unwrap();
        assert!(!loops2.is_single_cycle(&BTreeSet::from([0])).unwrap());
        let c3 = Quiver::cyclic(3).unwrap();
        assert!(c3.is_single_cycle(&BTreeSet::from([0, 1, 2])).unwrap());
        assert!(!c3.is_single_cycle(&BTreeSet::from([0, 1])).unwrap());
        // Two disjoint 2-cycles: each vertex has in = out = 1 but the
        // subquiver is not strongly connected.
        let two_cycles = Quiver::new(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert!(!two_cycles
            .is_single_cycle(&BTreeSet::from([0, 1, 2, 3]))
            .unwrap());
    }

    #[test]
    fn presets() {
        let k3 = Quiver::kronecker(3).unwrap();
        assert_eq!(k3.num_vertices(), 2);
        assert_eq!(k3.arrow_count(0, 1), 3);
        let b22 = Quiver::bipartite(2, 2).unwrap();
        assert_eq!(b22.num_vertices(), 4);
        assert_eq!(b22.num_arrows(), 4);
        for i in 0..2 {
            for j in 2..4 {
                assert_eq!(b22.arrow_count(i, j), 1);
            }
        }
        assert!(Quiver::kronecker(0).is_err());
        assert!(Quiver::cyclic(0).is_err());
        assert!(Quiver::bipartite(0, 2).is_err());
        assert_eq!("kronecker:3".parse::<Preset>().unwrap(), Preset::Kronecker(3));
        assert_eq!(
            "bipartite:2:3".parse::<Preset>().unwrap(),
            Preset::Bipartite(2, 3)
        );
        assert!("kronecker".parse::<Preset>().is_err());
        assert!("kronecker:0".parse::<Preset>().is_err());
        assert!("mystery:3".parse::<Preset>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::new(3, [(0, 1), (0, 1), (2, 2)]).unwrap();
        let text = q.to_json_string();
        let back = Quiver::from_json_str(&text).unwrap();
        assert_eq!(q, back);
        let parsed =
            Quiver::from_json_str(r#"{"vertices": 2, "arrows": [[0,1],[0,1],[0,1]]}"#).unwrap();
        assert_eq!(parsed, Quiver::kronecker(3).unwrap());
        assert!(Quiver::from_json_str(r#"{"vertices": 0, "arrows": []}"#).is_err());
        assert!(Quiver::from_json_str(r#"{"vertices": 2, "arrows": [[0,5]]}"#).is_err());
    }

    #[test]
    fn bipartite_euler_identity() {
        // chi(alpha_ij, alpha_kl) = delta_ik + delta_jl - 1 where
        // alpha_ij = e_i + e_{p+j}.
        for (p, q) in [(1usize, 1usize), (2, 2), (2, 3), (3, 3), (4, 2)] {
            let quiver = Quiver::bipartite(p as u32, q as u32).unwrap();
            let chi = quiver.euler_form();
            for i in 0..p {
                for j in 0..q {
                    for k in 0..p {
                        for l in 0..q {
                            let mut a = vec![0u64; p + q];
                            a[i] += 1;
                            a[p + j] += 1;
                            let mut b = vec![0u64; p + q];
                            b[k] += 1;
                            b[p + l] += 1;
                            let expected =
                                (i == k) as i64 + (j == l) as i64 - 1;
                            assert_eq!(
                                chi.pairing(&DimVector::new(a), &DimVector::new(b)).unwrap(),
                                expected
                            );
                        }
                    }
                }
            }
        }
    }

    /// Brute-force strong connectivity via transitive closure.
    fn strongly_connected_oracle(q: &Quiver, verts: &BTreeSet<usize>) -> bool {
        let vs: Vec<usize> = verts.iter().copied().collect();
        let n = vs.len();
        let pos = |v: usize| vs.iter().position(|&x| x == v).unwrap();
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            reach[i][i] = true;
        }
        for ((s, t), _) in q.arrow_counts() {
            if verts.contains(&s) && verts.contains(&t) {
                reach[pos(s)][pos(t)] = true;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        (0..n).all(|i| (0..n).all(|j| reach[i][j]))
    }

    fn arb_quiver(max_vertices: usize, max_arrows: usize) -> impl Strategy<Value = Quiver> {
        (1..=max_vertices).prop_flat_map(move |k| {
            proptest::collection::vec((0..k, 0..k), 0..=max_arrows)
                .prop_map(move |arrows| Quiver::new(k, arrows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn strong_connectivity_matches_transitive_closure(q in arb_quiver(5, 8)) {
            let k = q.num_vertices();
            // All nonempty subsets of up to five vertices.
            for mask in 1u32..(1 << k) {
                let verts: BTreeSet<usize> =
                    (0..k).filter(|v| mask & (1 << v) != 0).collect();
                prop_assert_eq!(
                    q.is_strongly_connected(&verts).unwrap(),
                    strongly_connected_oracle(&q, &verts)
                );
            }
        }

        #[test]
        fn euler_pairing_is_bilinear(
            q in arb_quiver(4, 6),
            a in proptest::collection::vec(0u64..4, 4),
            b in proptest::collection::vec(0u64..4, 4),
            c in proptest::collection::vec(0u64..4, 4),
        ) {
            let k = q.num_vertices();
            let chi = q.euler_form();
            let a = DimVector::new(a[..k].to_vec());
            let b = DimVector::new(b[..k].to_vec());
            let c = DimVector::new(c[..k].to_vec());
            let b_plus_c = DimVector::new(
                b.coords().iter().zip(c.coords()).map(|(x, y)| x + y).collect(),
            );
            prop_assert_eq!(
                chi.pairing(&a, &b_plus_c).unwrap(),
                chi.pairing(&a, &b).unwrap() + chi.pairing(&a, &c).unwrap()
            );
            let a_plus_b = DimVector::new(
                a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect(),
            );
            prop_assert_eq!(
                chi.pairing(&a_plus_b, &c).unwrap(),
                chi.pairing(&a, &c).unwrap() + chi.pairing(&b, &c).unwrap()
            );
        }

        #[test]
        fn euler_row_sums_give_out_degrees(q in arb_quiver(5, 8)) {
            let chi = q.euler_form();
            for i in 0..q.num_vertices() {
                let row_deficit: i64 = (0..q.num_vertices())
                    .map(|j| (if i == j { 1 } else { 0 }) - chi.get(i, j))
                    .sum();
                prop_assert_eq!(row_deficit, q.out_degree(i) as i64);
            }
        }
    }
}
