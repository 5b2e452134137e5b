//! Irreducible representations of torus knot groups.
//!
//! The group `<x, y | x^p = y^q central>` acts on an n-dimensional
//! irreducible representation through a pair of semisimple automorphisms:
//! `x` with eigenvalue multiplicities `a = (a_1, ..., a_p)` and `y` with
//! multiplicities `b = (b_1, ..., b_q)`, where `sum a = sum b = n`. Which
//! multiplicity patterns arise from irreducible representations is a purely
//! combinatorial question, and this module answers it three ways:
//!
//! - [`torus_knot_stable`] evaluates a closed-form criterion directly on the
//!   margins;
//! - [`torus_knot_setting`] translates the question into theta-stability of
//!   the dimension vector `(a, b)` on the complete bipartite quiver with
//!   weight `-1` on sources and `+1` on sinks, decidable with the machinery
//!   in [`crate::stability`];
//! - [`torus_knot_stable_via_gamma`] tests a decomposition of `(a, b)` into
//!   one-dimensional pieces through the local quiver [`build_gamma`], whose
//!   vertices are the pq one-dimensional representation types and whose
//!   arrows join types differing in both coordinates.
//!
//! The closed form: a nonzero pattern is irreducible-realizable iff `n = 1`,
//! or `a_i + b_j <= n` for all pairs and the pattern is not a balanced
//! two-by-two split `(n/2, n/2; n/2, n/2)` with `n >= 3`. The balanced
//! exclusion matters: those patterns satisfy the margin bounds yet every
//! candidate representation keeps a proper invariant subspace, as both other
//! routes confirm.

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver, Weight};
use crate::simples::is_simple_dim;

/// Eigenvalue multiplicity margins `(a, b)` with equal sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusKnotDims {
    a: Vec<u64>,
    b: Vec<u64>,
}

impl TorusKnotDims {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidArgument(
                "multiplicity margins must be nonempty".to_string(),
            ));
        }
        let a_total: u64 = a.iter().sum();
        let b_total: u64 = b.iter().sum();
        if a_total != b_total {
            return Err(Error::UnequalMarginSums { a_total, b_total });
        }
        Ok(TorusKnotDims { a, b })
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    /// The common margin sum, i.e. the dimension of the representation.
    pub fn n(&self) -> u64 {
        self.a.iter().sum()
    }

    /// The concatenated dimension vector `(a, b)` on the bipartite quiver.
    pub fn dim_vector(&self) -> DimVector {
        let mut coords = self.a.clone();
        coords.extend_from_slice(&self.b);
        DimVector::new(coords)
    }
}

/// The stability translation: the complete bipartite quiver with `p` sources
/// and `q` sinks, and the weight `-1` on every source, `+1` on every sink.
pub fn torus_knot_setting(p: usize, q: usize) -> Result<(Quiver, Weight)> {
    if p == 0 || q == 0 || p > u32::MAX as usize || q > u32::MAX as usize {
        return Err(Error::InvalidArgument(format!(
            "invalid eigenvalue class counts p = {p}, q = {q}"
        )));
    }
    let quiver = Quiver::bipartite(p as u32, q as u32)?;
    let mut theta = vec![-1i64; p];
    theta.extend(std::iter::repeat(1).take(q));
    Ok((quiver, Weight::new(theta)))
}

/// Closed-form test: does an irreducible representation with these
/// eigenvalue multiplicities exist? Zero margins (`n = 0`) give `false`.
pub fn torus_knot_stable(dims: &TorusKnotDims) -> bool {
    torus_knot_obstruction(dims).is_none()
}

/// Why a multiplicity pattern fails, when it does.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The margins are all zero.
    Empty,
    /// `a_i + b_j > n` for the recorded (0-based) pair, so the two
    /// eigenspaces intersect in every representation and their common lines
    /// generate a proper invariant subspace or split one off.
    MarginBound { i: usize, j: usize, sum: u64 },
    /// Exactly two nonzero entries on each side, all equal to `n/2`, with
    /// `n >= 3`: both automorphisms square to a scalar on a common
    /// two-block structure and a proper invariant subspace always survives.
    BalancedPairs,
}

/// The first obstruction to irreducibility in a fixed scan order, or `None`
/// when the closed-form criterion accepts the pattern.
pub fn torus_knot_obstruction(dims: &TorusKnotDims) -> Option<Obstruction> {
    let n = dims.n();
    if n == 0 {
        return Some(Obstruction::Empty);
    }
    if n == 1 {
        return None;
    }
    for (i, &ai) in dims.a.iter().enumerate() {
        for (j, &bj) in dims.b.iter().enumerate() {
            if ai + bj > n {
                return Some(Obstruction::MarginBound { i, j, sum: ai + bj });
            }
        }
    }
    let a_classes = dims.a.iter().filter(|&&x| x > 0).count();
    let b_classes = dims.b.iter().filter(|&&x| x > 0).count();
    // Under the margin bounds, two nonzero classes on each side force the
    // balanced split (n/2, n/2; n/2, n/2) with n even.
    if a_classes == 2 && b_classes == 2 && n >= 3 {
        return Some(Obstruction::BalancedPairs);
    }
    None
}

/// The interaction quiver of the pq one-dimensional representation types:
/// vertex `(i, j)` sits at index `i * q + j`, and there is one arrow from
/// `(i, j)` to `(k, l)` exactly when `i != k` and `j != l`.
pub fn build_gamma(p: usize, q: usize) -> Result<Quiver> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument(format!(
            "invalid eigenvalue class counts p = {p}, q = {q}"
        )));
    }
    let mut arrows = Vec::new();
    for i in 0..p {
        for j in 0..q {
            for k in 0..p {
                for l in 0..q {
                    if i != k && j != l {
                        arrows.push((i * q + j, k * q + l));
                    }
                }
            }
        }
    }
    Quiver::new(p * q, arrows)
}

/// Decide irreducibility through one explicit decomposition: `m[i][j]`
/// counts the one-dimensional pieces of type `(i, j)`, its rows must sum to
/// `a` and its columns to `b`, and the verdict is whether `m` is a simple
/// dimension vector of [`build_gamma`].
///
/// A `true` answer certifies the pattern; a `false` answer only rules out
/// this particular decomposition.
pub fn torus_knot_stable_via_gamma(dims: &TorusKnotDims, m: &[Vec<u64>]) -> Result<bool> {
    let (p, q) = (dims.p(), dims.q());
    if m.len() != p {
        return Err(Error::InvalidArgument(format!(
            "decomposition has {} rows, expected {p}",
            m.len()
        )));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != q {
            return Err(Error::InvalidArgument(format!(
                "decomposition row {i} has {} entries, expected {q}",
                row.len()
            )));
        }
        let got: u64 = row.iter().sum();
        if got != dims.a[i] {
            return Err(Error::MarginMismatch {
                axis: "row",
                index: i,
                expected: dims.a[i],
                got,
            });
        }
    }
    for j in 0..q {
        let got: u64 = m.iter().map(|row| row[j]).sum();
        if got != dims.b[j] {
            return Err(Error::MarginMismatch {
                axis: "column",
                index: j,
                expected: dims.b[j],
                got,
            });
        }
    }
    let gamma = build_gamma(p, q)?;
    let flat: Vec<u64> = m.iter().flat_map(|row| row.iter().copied()).collect();
    is_simple_dim(&gamma, &DimVector::new(flat))
}

/// A canonical decomposition with the given margins, by the northwest corner
/// rule: scan cells in row-major order and grant each the largest count its
/// remaining row and column sums allow.
pub fn find_decomposition(dims: &TorusKnotDims) -> Vec<Vec<u64>> {
    let (p, q) = (dims.p(), dims.q());
    let mut row_left = dims.a.clone();
    let mut col_left = dims.b.clone();
    let mut m = vec![vec![0u64; q]; p];
    for i in 0..p {
        for j in 0..q {
            let grant = row_left[i].min(col_left[j]);
            m[i][j] = grant;
            row_left[i] -= grant;
            col_left[j] -= grant;
        }
    }
    m
}
