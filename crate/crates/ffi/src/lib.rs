//! C ABI over the stability toolkit.
//!
//! Quivers cross the boundary as opaque handles, every fallible call
//! returns a [`QmStatus`], and the most recent failure message is kept
//! per thread for [`qm_last_error_message`]. Vectors are passed as a
//! pointer plus a length; a null data pointer is accepted when the
//! length is zero.
//!
//! Ownership: handles from the `qm_quiver_*` constructors go back to
//! [`qm_quiver_free`], strings from [`qm_quiver_to_json`] go back to
//! [`qm_string_free`]. Handles are not thread-safe; share them only with
//! external synchronization.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;

use quiver_moduli::{
    default_knot_modulus, is_simple_dim, is_theta_semistable_with, is_theta_stable_with,
    local_quiver, moduli_dimension, oracle_simple_exists, oracle_torus_knot_irreducible,
    torus_knot_stable, Decomposition, DimVector, Error, PrimeFieldConfig, Quiver, SubdimTable,
    TorusKnotDims, Weight, DEFAULT_LATTICE_BUDGET,
};

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QmStatus {
    /// The call succeeded and any out-parameters are filled in.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// The inputs were rejected; see `qm_last_error_message`.
    InvalidInput = 2,
    /// The lattice box exceeded the configured enumeration budget.
    BudgetExceeded = 3,
    /// The dimension vector is not stable, so the quantity is undefined.
    NotStable = 4,
}

/// An opaque quiver handle.
pub struct QmQuiver {
    inner: Quiver,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn fail_with(status: QmStatus, message: &str) -> QmStatus {
    let text = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

fn fail_error(err: Error) -> QmStatus {
    let status = match err {
        Error::BudgetExceeded { .. } => QmStatus::BudgetExceeded,
        Error::NotStable => QmStatus::NotStable,
        _ => QmStatus::InvalidInput,
    };
    fail_with(status, &err.to_string())
}

fn null_arg(name: &str) -> QmStatus {
    fail_with(QmStatus::NullPointer, &format!("{name} is null"))
}

fn boxed(quiver: Quiver) -> *mut QmQuiver {
    Box::into_raw(Box::new(QmQuiver { inner: quiver }))
}

fn constructed(result: quiver_moduli::Result<Quiver>) -> *mut QmQuiver {
    clear_error();
    match result {
        Ok(quiver) => boxed(quiver),
        Err(err) => {
            fail_error(err);
            std::ptr::null_mut()
        }
    }
}

unsafe fn slice_or_empty<'a, T>(ptr: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

fn effective_budget(budget: u64) -> u128 {
    if budget == 0 {
        DEFAULT_LATTICE_BUDGET
    } else {
        u128::from(budget)
    }
}

fn oracle_config(modulus: u64, seed: u64, trials: u32, cap: u64) -> PrimeFieldConfig {
    let defaults = PrimeFieldConfig::default();
    PrimeFieldConfig {
        modulus: if modulus == 0 { defaults.modulus } else { modulus },
        seed,
        trials: if trials == 0 { defaults.trials } else { trials },
        cap: if cap == 0 { defaults.cap } else { cap },
    }
}

/// The message attached to the most recent failure on this thread, or
/// null if the last call succeeded. Valid until the next failing call on
/// the same thread.
#[no_mangle]
pub extern "C" fn qm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |text| text.as_ptr())
    })
}

/// A quiver with `vertices` vertices and no arrows yet.
#[no_mangle]
pub extern "C" fn qm_quiver_new(vertices: usize) -> *mut QmQuiver {
    constructed(Quiver::new(vertices, Vec::new()))
}

/// Adds `count` parallel arrows from `source` to `target`.
#[no_mangle]
pub unsafe extern "C" fn qm_quiver_add_arrow(
    quiver: *mut QmQuiver,
    source: usize,
    target: usize,
    count: u64,
) -> QmStatus {
    clear_error();
    let Some(handle) = quiver.as_mut() else {
        return null_arg("quiver handle");
    };
    if count == 0 {
        return QmStatus::Ok;
    }
    let mut counts: BTreeMap<(usize, usize), u64> = handle.inner.arrow_counts().collect();
    *counts.entry((source, target)).or_insert(0) += count;
    match Quiver::from_counts(handle.inner.num_vertices(), counts) {
        Ok(rebuilt) => {
            handle.inner = rebuilt;
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

/// The two-vertex quiver with `n` parallel arrows.
#[no_mangle]
pub extern "C" fn qm_quiver_kronecker(n: u32) -> *mut QmQuiver {
    constructed(Quiver::kronecker(n))
}

/// The oriented cycle on `n` vertices.
#[no_mangle]
pub extern "C" fn qm_quiver_cyclic(n: u32) -> *mut QmQuiver {
    constructed(Quiver::cyclic(n))
}

/// The complete bipartite quiver with `p` sources and `q` sinks.
#[no_mangle]
pub extern "C" fn qm_quiver_bipartite(p: u32, q: u32) -> *mut QmQuiver {
    constructed(Quiver::bipartite(p, q))
}

/// Parses `{"vertices": k, "arrows": [[s, t], ...]}`.
#[no_mangle]
pub unsafe extern "C" fn qm_quiver_from_json(text: *const c_char) -> *mut QmQuiver {
    clear_error();
    if text.is_null() {
        null_arg("json text");
        return std::ptr::null_mut();
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        fail_with(QmStatus::InvalidInput, "json text is not valid UTF-8");
        return std::ptr::null_mut();
    };
    constructed(Quiver::from_json_str(text))
}

/// Renders the quiver in the same JSON shape the parser accepts. Free the
/// result with `qm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn qm_quiver_to_json(quiver: *const QmQuiver) -> *mut c_char {
    clear_error();
    let Some(handle) = quiver.as_ref() else {
        null_arg("quiver handle");
        return std::ptr::null_mut();
    };
    match CString::new(handle.inner.to_json_string()) {
        Ok(text) => text.into_raw(),
        Err(_) => {
            fail_with(QmStatus::InvalidInput, "serialized quiver contained a NUL");
            std::ptr::null_mut()
        }
    }
}

#[no_mangle]
pub unsafe extern "C" fn qm_quiver_num_vertices(quiver: *const QmQuiver) -> usize {
    quiver.as_ref().map_or(0, |handle| handle.inner.num_vertices())
}

/// Number of arrows from `source` to `target`, zero on a null handle or
/// out-of-range vertices.
#[no_mangle]
pub unsafe extern "C" fn qm_quiver_arrow_count(
    quiver: *const QmQuiver,
    source: usize,
    target: usize,
) -> u64 {
    quiver
        .as_ref()
        .map_or(0, |handle| handle.inner.arrow_count(source, target))
}

#[no_mangle]
pub unsafe extern "C" fn qm_quiver_free(quiver: *mut QmQuiver) {
    if !quiver.is_null() {
        drop(Box::from_raw(quiver));
    }
}

#[no_mangle]
pub unsafe extern "C" fn qm_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// The Euler pairing of two dimension vectors.
#[no_mangle]
pub unsafe extern "C" fn qm_euler_pairing(
    quiver: *const QmQuiver,
    left: *const u64,
    left_len: usize,
    right: *const u64,
    right_len: usize,
    out: *mut i64,
) -> QmStatus {
    clear_error();
    let Some(handle) = quiver.as_ref() else {
        return null_arg("quiver handle");
    };
    let (Some(left), Some(right)) = (
        slice_or_empty(left, left_len),
        slice_or_empty(right, right_len),
    ) else {
        return null_arg("dimension vector");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    let chi = handle.inner.euler_form();
    match chi.pairing(
        &DimVector::new(left.to_vec()),
        &DimVector::new(right.to_vec()),
    ) {
        Ok(value) => {
            *out = value;
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

unsafe fn decide_stability(
    quiver: *const QmQuiver,
    theta: *const i64,
    theta_len: usize,
    alpha: *const u64,
    alpha_len: usize,
    budget: u64,
    out: *mut bool,
    strict: bool,
) -> QmStatus {
    clear_error();
    let Some(handle) = quiver.as_ref() else {
        return null_arg("quiver handle");
    };
    let Some(theta) = slice_or_empty(theta, theta_len) else {
        return null_arg("theta");
    };
    let Some(alpha) = slice_or_empty(alpha, alpha_len) else {
        return null_arg("alpha");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    let theta = Weight::new(theta.to_vec());
    let alpha = DimVector::new(alpha.to_vec());
    let mut table = SubdimTable::with_budget(handle.inner.clone(), effective_budget(budget));
    let verdict = if strict {
        is_theta_stable_with(&mut table, &theta, &alpha)
    } else {
        is_theta_semistable_with(&mut table, &theta, &alpha)
    };
    match verdict {
        Ok(value) => {
            *out = value;
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

/// Does a theta-stable representation of dimension `alpha` exist? A
/// `budget` of zero means the default lattice budget.
#[no_mangle]
pub unsafe extern "C" fn qm_is_theta_stable(
    quiver: *const QmQuiver,
    theta: *const i64,
    theta_len: usize,
    alpha: *const u64,
    alpha_len: usize,
    budget: u64,
    out: *mut bool,
) -> QmStatus {
    decide_stability(quiver, theta, theta_len, alpha, alpha_len, budget, out, true)
}

/// Does a theta-semistable representation of dimension `alpha` exist?
#[no_mangle]
pub unsafe extern "C" fn qm_is_theta_semistable(
    quiver: *const QmQuiver,
    theta: *const i64,
    theta_len: usize,
    alpha: *const u64,
    alpha_len: usize,
    budget: u64,
    out: *mut bool,
) -> QmStatus {
    decide_stability(
        quiver, theta, theta_len, alpha, alpha_len, budget, out, false,
    )
}

/// Does a simple representation of dimension `alpha` exist?
#[no_mangle]
pub unsafe extern "C" fn qm_is_simple(
    quiver: *const QmQuiver,
    alpha: *const u64,
    alpha_len: usize,
    out: *mut bool,
) -> QmStatus {
    clear_error();
    let Some(handle) = quiver.as_ref() else {
        return null_arg("quiver handle");
    };
    let Some(alpha) = slice_or_empty(alpha, alpha_len) else {
        return null_arg("alpha");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    match is_simple_dim(&handle.inner, &DimVector::new(alpha.to_vec())) {
        Ok(value) => {
            *out = value;
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

/// Dimension of the moduli space at a theta-stable `alpha`; fails with
/// `NotStable` otherwise.
#[no_mangle]
pub unsafe extern "C" fn qm_moduli_dimension(
    quiver: *const QmQuiver,
    theta: *const i64,
    theta_len: usize,
    alpha: *const u64,
    alpha_len: usize,
    out: *mut i64,
) -> QmStatus {
    clear_error();
    let Some(handle) = quiver.as_ref() else {
        return null_arg("quiver handle");
    };
    let Some(theta) = slice_or_empty(theta, theta_len) else {
        return null_arg("theta");
    };
    let Some(alpha) = slice_or_empty(alpha, alpha_len) else {
        return null_arg("alpha");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    match moduli_dimension(
        &handle.inner,
        &Weight::new(theta.to_vec()),
        &DimVector::new(alpha.to_vec()),
    ) {
        Ok(value) => {
            *out = value;
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

/// Builds the local quiver of a decomposition. `parts` holds `num_parts`
/// rows of `qm_quiver_num_vertices` entries each, row-major, and
/// `multiplicities` one entry per row; the local quiver's dimension
/// vector is exactly `multiplicities`. The new handle goes back to
/// `qm_quiver_free`.
#[no_mangle]
pub unsafe extern "C" fn qm_local_quiver(
    quiver: *const QmQuiver,
    multiplicities: *const u64,
    parts: *const u64,
    num_parts: usize,
    out: *mut *mut QmQuiver,
) -> QmStatus {
    clear_error();
    let Some(handle) = quiver.as_ref() else {
        return null_arg("quiver handle");
    };
    let Some(multiplicities) = slice_or_empty(multiplicities, num_parts) else {
        return null_arg("multiplicities");
    };
    let vertices = handle.inner.num_vertices();
    let Some(parts) = slice_or_empty(parts, num_parts * vertices) else {
        return null_arg("parts");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    let rows: Vec<(u64, DimVector)> = multiplicities
        .iter()
        .zip(parts.chunks(vertices))
        .map(|(&m, row)| (m, DimVector::new(row.to_vec())))
        .collect();
    let decomposition = match Decomposition::new(rows) {
        Ok(d) => d,
        Err(err) => return fail_error(err),
    };
    match local_quiver(&handle.inner, &decomposition) {
        Ok(setting) => {
            *out = boxed(setting.quiver);
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

/// Do the margins `(a; b)` carry an irreducible representation of the
/// free product of cyclic groups of orders `a_len` and `b_len`?
#[no_mangle]
pub unsafe extern "C" fn qm_torus_knot_stable(
    a: *const u64,
    a_len: usize,
    b: *const u64,
    b_len: usize,
    out: *mut bool,
) -> QmStatus {
    clear_error();
    let (Some(a), Some(b)) = (slice_or_empty(a, a_len), slice_or_empty(b, b_len)) else {
        return null_arg("margin vector");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    match TorusKnotDims::new(a.to_vec(), b.to_vec()) {
        Ok(dims) => {
            *out = torus_knot_stable(&dims);
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

/// Finite-field sampling evidence for a simple representation of
/// dimension `alpha`. Zero `modulus`, `trials` or `cap` pick the
/// defaults. True means a certificate was found; false only means no
/// certificate turned up.
#[no_mangle]
pub unsafe extern "C" fn qm_oracle_simple(
    quiver: *const QmQuiver,
    alpha: *const u64,
    alpha_len: usize,
    modulus: u64,
    seed: u64,
    trials: u32,
    cap: u64,
    out: *mut bool,
) -> QmStatus {
    clear_error();
    let Some(handle) = quiver.as_ref() else {
        return null_arg("quiver handle");
    };
    let Some(alpha) = slice_or_empty(alpha, alpha_len) else {
        return null_arg("alpha");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    let config = oracle_config(modulus, seed, trials, cap);
    match oracle_simple_exists(&handle.inner, &DimVector::new(alpha.to_vec()), &config) {
        Ok(verdict) => {
            *out = verdict.as_bool();
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}

/// Finite-field sampling evidence for an irreducible representation with
/// eigenvalue multiplicities `(a; b)`. A zero `modulus` picks the
/// smallest suitable prime above 1000.
#[no_mangle]
pub unsafe extern "C" fn qm_oracle_torus_knot(
    a: *const u64,
    a_len: usize,
    b: *const u64,
    b_len: usize,
    modulus: u64,
    seed: u64,
    trials: u32,
    cap: u64,
    out: *mut bool,
) -> QmStatus {
    clear_error();
    let (Some(a), Some(b)) = (slice_or_empty(a, a_len), slice_or_empty(b, b_len)) else {
        return null_arg("margin vector");
    };
    if out.is_null() {
        return null_arg("out pointer");
    }
    let dims = match TorusKnotDims::new(a.to_vec(), b.to_vec()) {
        Ok(dims) => dims,
        Err(err) => return fail_error(err),
    };
    let modulus = if modulus == 0 {
        match default_knot_modulus(dims.p(), dims.q()) {
            Ok(value) => value,
            Err(err) => return fail_error(err),
        }
    } else {
        modulus
    };
    let config = oracle_config(modulus, seed, trials, cap);
    match oracle_torus_knot_irreducible(&dims, &config) {
        Ok(verdict) => {
            *out = verdict.as_bool();
            QmStatus::Ok
        }
        Err(err) => fail_error(err),
    }
}
