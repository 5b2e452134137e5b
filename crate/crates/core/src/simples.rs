//! Dimension vectors of simple representations.
//!
//! A nonzero dimension vector `a` supports a simple representation exactly
//! when either `a` is a unit vector, or the support of `a` is strongly
//! connected and one of the following holds:
//!
//! - the support induces a single oriented cycle and `a` is 1 at every
//!   support vertex, or
//! - the support is not a single oriented cycle and, for every support
//!   vertex `v`, both `chi(e_v, a) <= 0` and `chi(a, e_v) <= 0`, where `chi`
//!   is the Euler form of the subquiver induced on the support.
//!
//! Since `a` vanishes off its support, those pairings agree with the
//! full-quiver Euler pairings against unit vectors at support vertices, which
//! is how they are evaluated here.

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// Does the quiver admit a simple representation of dimension vector `a`?
///
/// Returns `false` for `a = 0`.
pub fn is_simple_dim(quiver: &Quiver, a: &DimVector) -> Result<bool> {
    if a.len() != quiver.num_vertices() {
        return Err(Error::LengthMismatch {
            expected: quiver.num_vertices(),
            got: a.len(),
        });
    }
    if a.is_zero() {
        return Ok(false);
    }
    let support = a.support();
    if support.len() == 1 {
        let v = *support.iter().next().expect("nonempty");
        let loops = quiver.arrow_count(v, v);
        let value = a.get(v);
        // A lone vertex: with no loops only dimension 1 is simple; with one
        // loop (an oriented cycle) again only dimension 1; with two or more
        // loops every dimension works.
        return Ok(match loops {
            0 | 1 => value == 1,
            _ => true,
        });
    }
    if !quiver.is_strongly_connected(&support)? {
        return Ok(false);
    }
    if quiver.is_single_cycle(&support)? {
        return Ok(support.iter().all(|&v| a.get(v) == 1));
    }
    let chi = quiver.euler_form();
    for &v in &support {
        let unit = DimVector::unit(a.len(), v);
        if chi.pairing(&unit, a)? > 0 || chi.pairing(a, &unit)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
