//! Stability of dimension vectors and the local quiver construction.
//!
//! For a weight `theta`, the general representation of dimension `alpha` is:
//!
//! - theta-semistable iff `theta(alpha) = 0` and `theta(beta) >= 0` for every
//!   generic subdimension vector `beta` of `alpha`;
//! - theta-stable iff `theta(alpha) = 0` and `theta(beta) > 0` for every
//!   generic subdimension vector `beta` other than `0` and `alpha`.
//!
//! Given theta-stable dimension vectors `beta_1, ..., beta_r` occurring with
//! multiplicities `m_1, ..., m_r`, the moduli space near the corresponding
//! polystable point looks, up to smooth equivalence, like the moduli of
//! semisimple representations of a small "local" quiver on `r` vertices with
//! `delta_ij - chi(beta_i, beta_j)` arrows from `i` to `j`, at the dimension
//! vector `(m_1, ..., m_r)`. In particular `sum m_i beta_i` is theta-stable
//! exactly when `(m_i)` is a simple dimension vector for the local quiver,
//! which turns stability questions about large vectors into simplicity
//! questions about tiny ones.

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver, Weight};
use crate::schofield::SubdimTable;
use crate::simples::is_simple_dim;

/// A formal sum `m_1 * beta_1 + ... + m_r * beta_r` of dimension vectors
/// with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    parts: Vec<(u64, DimVector)>,
}

impl Decomposition {
    pub fn new(parts: Vec<(u64, DimVector)>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyDecomposition);
        }
        let len = parts[0].1.len();
        for (index, (m, beta)) in parts.iter().enumerate() {
            if *m == 0 {
                return Err(Error::InvalidPart {
                    index,
                    reason: "multiplicity is zero".to_string(),
                });
            }
            if beta.len() != len {
                return Err(Error::InvalidPart {
                    index,
                    reason: format!(
                        "dimension vector has length {}, expected {len}",
                        beta.len()
                    ),
                });
            }
            if beta.is_zero() {
                return Err(Error::InvalidPart {
                    index,
                    reason: "dimension vector is zero".to_string(),
                });
            }
        }
        Ok(Decomposition { parts })
    }

    pub fn parts(&self) -> &[(u64, DimVector)] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The multiplicity vector `(m_1, ..., m_r)`.
    pub fn multiplicities(&self) -> DimVector {
        DimVector::new(self.parts.iter().map(|(m, _)| *m).collect())
    }

    /// The combined vector `sum m_i beta_i`.
    pub fn composite(&self) -> DimVector {
        let len = self.parts[0].1.len();
        let mut total = vec![0u64; len];
        for (m, beta) in &self.parts {
            for (slot, &c) in total.iter_mut().zip(beta.coords()) {
                *slot += m * c;
            }
        }
        DimVector::new(total)
    }
}

/// The output of [`local_quiver`]: a quiver on one vertex per decomposition
/// part, and the multiplicity vector as its dimension vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalQuiverSetting {
    pub quiver: Quiver,
    pub dims: DimVector,
}

fn check_weight(quiver: &Quiver, theta: &Weight) -> Result<()> {
    if theta.len() != quiver.num_vertices() {
        return Err(Error::LengthMismatch {
            expected: quiver.num_vertices(),
            got: theta.len(),
        });
    }
    Ok(())
}

/// Semistability of the general representation, reusing a caller-owned
/// subdimension table.
pub fn is_theta_semistable_with(
    table: &mut SubdimTable,
    theta: &Weight,
    alpha: &DimVector,
) -> Result<bool> {
    check_weight(table.quiver(), theta)?;
    if alpha.len() != theta.len() {
        return Err(Error::LengthMismatch {
            expected: theta.len(),
            got: alpha.len(),
        });
    }
    if alpha.is_zero() {
        return Ok(true);
    }
    if theta.pairing(alpha)? != 0 {
        return Ok(false);
    }
    for beta in table.subdims(alpha)? {
        if theta.pairing(beta)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stability of the general representation, reusing a caller-owned
/// subdimension table. The zero vector is rejected with an error because
/// neither verdict would be meaningful for it.
pub fn is_theta_stable_with(
    table: &mut SubdimTable,
    theta: &Weight,
    alpha: &DimVector,
) -> Result<bool> {
    check_weight(table.quiver(), theta)?;
    if alpha.len() != theta.len() {
        return Err(Error::LengthMismatch {
            expected: theta.len(),
            got: alpha.len(),
        });
    }
    if alpha.is_zero() {
        return Err(Error::ZeroDimVector);
    }
    if theta.pairing(alpha)? != 0 {
        return Ok(false);
    }
    for beta in table.subdims(alpha)? {
        if beta.is_zero() || beta == alpha {
            continue;
        }
        if theta.pairing(beta)? <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does the quiver admit a theta-semistable representation of dimension
/// `alpha`?
pub fn is_theta_semistable_dim(quiver: &Quiver, theta: &Weight, alpha: &DimVector) -> Result<bool> {
    let mut table = SubdimTable::new(quiver.clone());
    is_theta_semistable_with(&mut table, theta, alpha)
}

/// Does the quiver admit a theta-stable representation of dimension `alpha`?
pub fn is_theta_stable_dim(quiver: &Quiver, theta: &Weight, alpha: &DimVector) -> Result<bool> {
    let mut table = SubdimTable::new(quiver.clone());
    is_theta_stable_with(&mut table, theta, alpha)
}

/// The local quiver of a decomposition: one vertex per part, with
/// `delta_ij - chi(beta_i, beta_j)` arrows from `i` to `j`, carrying the
/// multiplicity vector as dimension vector.
///
/// A negative arrow count means the parts cannot all be distinct stable
/// summands of one semistable representation; the offending pair is named in
/// the error.
pub fn local_quiver(quiver: &Quiver, decomposition: &Decomposition) -> Result<LocalQuiverSetting> {
    let chi = quiver.euler_form();
    let parts = decomposition.parts();
    for (index, (_, beta)) in parts.iter().enumerate() {
        if beta.len() != quiver.num_vertices() {
            return Err(Error::InvalidPart {
                index,
                reason: format!(
                    "dimension vector has length {}, expected {}",
                    beta.len(),
                    quiver.num_vertices()
                ),
            });
        }
    }
    let r = parts.len();
    let mut counts = std::collections::BTreeMap::new();
    for i in 0..r {
        for j in 0..r {
            let delta = (i == j) as i64;
            let count = delta - chi.pairing(&parts[i].1, &parts[j].1)?;
            if count < 0 {
                return Err(Error::NegativeArrowCount {
                    from: i,
                    to: j,
                    count,
                });
            }
            if count > 0 {
                counts.insert((i, j), count as u64);
            }
        }
    }
    Ok(LocalQuiverSetting {
        quiver: Quiver::from_counts(r, counts)?,
        dims: decomposition.multiplicities(),
    })
}

/// Decide whether `sum m_i beta_i` is theta-stable by checking that the
/// multiplicity vector is a simple dimension vector of the local quiver.
/// Every part is first verified to be theta-stable itself.
pub fn stable_via_local(
    quiver: &Quiver,
    theta: &Weight,
    decomposition: &Decomposition,
) -> Result<bool> {
    let mut table = SubdimTable::new(quiver.clone());
    for (index, (_, beta)) in decomposition.parts().iter().enumerate() {
        if !is_theta_stable_with(&mut table, theta, beta)? {
            return Err(Error::UnstablePart { index });
        }
    }
    stable_via_local_unchecked(quiver, decomposition)
}

/// Same as [`stable_via_local`] but trusting the caller that every part is
/// theta-stable.
pub fn stable_via_local_unchecked(
    quiver: &Quiver,
    decomposition: &Decomposition,
) -> Result<bool> {
    let setting = local_quiver(quiver, decomposition)?;
    is_simple_dim(&setting.quiver, &setting.dims)
}

/// Dimension of the moduli space of theta-stable representations at a
/// theta-stable dimension vector: `1 - chi(alpha, alpha)`.
///
/// Stability is verified first; a vector that fails it gets
/// [`Error::NotStable`] rather than a meaningless number.
pub fn moduli_dimension(quiver: &Quiver, theta: &Weight, alpha: &DimVector) -> Result<i64> {
    if !is_theta_stable_dim(quiver, theta, alpha)? {
        return Err(Error::NotStable);
    }
    let chi = quiver.euler_form();
    Ok(1 - chi.pairing(alpha, alpha)?)
}

/// All nonzero theta-stable dimension vectors `alpha <= bound`, in
/// lexicographic order. One subdimension table is shared by the whole sweep.
pub fn enumerate_stable_dims(
    quiver: &Quiver,
    theta: &Weight,
    bound: &DimVector,
) -> Result<Vec<DimVector>> {
    check_weight(quiver, theta)?;
    if bound.len() != quiver.num_vertices() {
        return Err(Error::LengthMismatch {
            expected: quiver.num_vertices(),
            got: bound.len(),
        });
    }
    let mut table = SubdimTable::new(quiver.clone());
    // Filling the largest box up front also covers every smaller query.
    table.subdims(bound)?;
    let mut found = Vec::new();
    for alpha in crate::schofield::box_points(bound) {
        if alpha.is_zero() {
            continue;
        }
        if is_theta_stable_with(&mut table, theta, &alpha)? {
            found.push(alpha);
        }
    }
    Ok(found)
}
