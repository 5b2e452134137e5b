//! Generic subdimension vectors.
//!
//! A dimension vector `beta <= alpha` is a generic subdimension vector of
//! `alpha` when the general representation of dimension `alpha` has a
//! subrepresentation of dimension `beta`. Writing `beta -> alpha` for that
//! relation, it satisfies a self-referential recursion: `beta -> alpha` iff
//! `chi(gamma, alpha - beta) >= 0` for every generic subdimension vector
//! `gamma` of `beta`, with `0 -> alpha` and `alpha -> alpha` always true.
//!
//! [`SubdimTable`] computes the full family `S(beta)` for every `beta` in the
//! box `[0, alpha]` bottom-up and memoizes it. The set `S(beta)` depends only
//! on `beta` and the quiver, never on which `alpha` prompted the question, so
//! one table can be shared across many stability queries on the same quiver.

use std::collections::HashMap;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::quiver::{DimVector, EulerMatrix, Quiver};

/// Cap on the number of lattice points `prod_v (alpha_v + 1)` a single query
/// may enumerate. Each point stores a set of subdimension vectors, so the cap
/// keeps memory and time predictable.
pub const DEFAULT_LATTICE_BUDGET: u128 = 1_000_000;

/// Memoized solver for generic subdimension vector queries on one quiver.
pub struct SubdimTable {
    quiver: Quiver,
    chi: EulerMatrix,
    budget: u128,
    memo: HashMap<DimVector, BTreeSet<DimVector>>,
}

impl SubdimTable {
    pub fn new(quiver: Quiver) -> Self {
        Self::with_budget(quiver, DEFAULT_LATTICE_BUDGET)
    }

    pub fn with_budget(quiver: Quiver, budget: u128) -> Self {
        let chi = quiver.euler_form();
        SubdimTable {
            quiver,
            chi,
            budget,
            memo: HashMap::new(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn euler(&self) -> &EulerMatrix {
        &self.chi
    }

    fn check_input(&self, alpha: &DimVector) -> Result<()> {
        if alpha.len() != self.quiver.num_vertices() {
            return Err(Error::LengthMismatch {
                expected: self.quiver.num_vertices(),
                got: alpha.len(),
            });
        }
        let points: u128 = alpha
            .coords()
            .iter()
            .map(|&c| c as u128 + 1)
            .product();
        if points > self.budget {
            return Err(Error::BudgetExceeded {
                points,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// All generic subdimension vectors of `alpha`, including `0` and
    /// `alpha` itself.
    pub fn subdims(&mut self, alpha: &DimVector) -> Result<&BTreeSet<DimVector>> {
        self.check_input(alpha)?;
        if !self.memo.contains_key(alpha) {
            self.fill_box(alpha);
        }
        Ok(&self.memo[alpha])
    }

    /// Does the general representation of dimension `alpha` have a
    /// subrepresentation of dimension `beta`?
    pub fn is_generic_subdim(&mut self, beta: &DimVector, alpha: &DimVector) -> Result<bool> {
        if beta.len() != alpha.len() {
            return Err(Error::LengthMismatch {
                expected: alpha.len(),
                got: beta.len(),
            });
        }
        if !beta.dominated_by(alpha) {
            return Ok(false);
        }
        Ok(self.subdims(alpha)?.contains(beta))
    }

    /// Compute `S(v)` for every `v` in the box `[0, alpha]`, in order of
    /// increasing total so that each `S(beta)` for `beta <= v`, `beta != v`
    /// is already available.
    fn fill_box(&mut self, alpha: &DimVector) {
        let mut points: Vec<DimVector> = box_points(alpha);
        points.sort_by_key(|v| (v.total(), v.clone()));
        for v in points {
            if self.memo.contains_key(&v) {
                continue;
            }
            let set = self.compute_subdims(&v);
            self.memo.insert(v, set);
        }
    }

    fn compute_subdims(&self, v: &DimVector) -> BTreeSet<DimVector> {
        let mut set = BTreeSet::new();
        for beta in box_points(v) {
            if &beta == v || beta.is_zero() {
                set.insert(beta);
                continue;
            }
            // chi(gamma, v - beta) >= 0 for all gamma in S(beta). The
            // memo already holds S(beta) because beta has smaller total.
            let rest = v.diff(&beta);
            let rhs = self.chi.right_apply(&rest);
            let gammas = &self.memo[&beta];
            let admits = gammas.iter().all(|gamma| {
                let dot: i64 = gamma
                    .coords()
                    .iter()
                    .zip(&rhs)
                    .map(|(&g, &r)| g as i64 * r)
                    .sum();
                dot >= 0
            });
            if admits {
                set.insert(beta);
            }
        }
        set
    }
}

/// All lattice points `0 <= v <= alpha`, componentwise, in lexicographic
/// order.
pub(crate) fn box_points(alpha: &DimVector) -> Vec<DimVector> {
    let mut points = vec![Vec::new()];
    for &bound in alpha.coords() {
        let mut next = Vec::with_capacity(points.len() * (bound as usize + 1));
        for prefix in &points {
            for c in 0..=bound {
                let mut p = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        points = next;
    }
    points.into_iter().map(DimVector::new).collect()
}

/// One-shot convenience wrapper around [`SubdimTable::subdims`].
pub fn generic_subdims(quiver: &Quiver, alpha: &DimVector) -> Result<BTreeSet<DimVector>> {
    let mut table = SubdimTable::new(quiver.clone());
    Ok(table.subdims(alpha)?.clone())
}

/// One-shot convenience wrapper around [`SubdimTable::is_generic_subdim`].
pub fn is_generic_subdim(quiver: &Quiver, beta: &DimVector, alpha: &DimVector) -> Result<bool> {
    let mut table = SubdimTable::new(quiver.clone());
    table.is_generic_subdim(beta, alpha)
}
