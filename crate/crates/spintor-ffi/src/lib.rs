//! C ABI for the spin-geometry engine.
//!
//! The surface is deliberately small: closed-form bound evaluation, the
//! Killing-number quadratic, opaque handles for the two built-in Stiefel
//! models (spectra, residuals), and the Einstein–Sasaki integrability check.
//!
//! Conventions:
//!
//! - every fallible function returns a [`SpintorStatus`] and writes its
//!   result through out-pointers, which are untouched on failure;
//! - buffers are caller-allocated `(ptr, capacity)` pairs; the written length
//!   is reported through `out_len`;
//! - handles from `spintor_stiefel_new` must be released with
//!   `spintor_stiefel_free`;
//! - panics never unwind across the boundary (they map to
//!   `SPINTOR_STATUS_INTERNAL_PANIC`).

use spintor::error::Error;
use spintor::estimates;
use spintor::homogeneous::ReductiveModel;
use spintor::linalg::hermitian_eigen;
use spintor::spin::{build_spin_rep, SpinRep};
use spintor::verify;
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SpintorStatus {
    /// The call succeeded and all out-parameters are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was out of range or inconsistent.
    InvalidArgument = 2,
    /// The requested dimension is outside the supported range.
    UnsupportedDimension = 3,
    /// The model admits no isotropy-invariant spinors.
    EmptyInvariantSpace = 4,
    /// A caller-provided buffer is too small; nothing was written.
    BufferTooSmall = 5,
    /// An internal invariant failed; the library state is still consistent.
    InternalPanic = 6,
}

fn status_of(err: &Error) -> SpintorStatus {
    match err {
        Error::UnsupportedDimension { .. } => SpintorStatus::UnsupportedDimension,
        Error::EmptyInvariantSpace(_) => SpintorStatus::EmptyInvariantSpace,
        _ => SpintorStatus::InvalidArgument,
    }
}

fn guarded<F: FnOnce() -> SpintorStatus>(body: F) -> SpintorStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => SpintorStatus::InternalPanic,
    }
}

/// An instantiated homogeneous model together with its spin representation.
pub struct SpintorModel {
    model: ReductiveModel,
    rep: SpinRep,
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn spintor_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Universal eigenvalue lower bound (1/4)Scal + (1/8)‖T‖² − (1/4)μ².
#[no_mangle]
pub extern "C" fn spintor_beta_univ(
    n: usize,
    scal_min: f64,
    t_norm_sq: f64,
    mu: f64,
    out: *mut f64,
) -> SpintorStatus {
    guarded(|| {
        if out.is_null() {
            return SpintorStatus::NullArgument;
        }
        let value = estimates::beta_univ(n, scal_min, t_norm_sq, mu);
        unsafe { *out = value };
        SpintorStatus::Ok
    })
}

/// Twistorial eigenvalue lower bound
/// n/(4(n−1))Scal + n(n−5)/(8(n−3)²)‖T‖² + n(4−n)/(4(n−3)²)μ².
#[no_mangle]
pub extern "C" fn spintor_beta_tw(
    n: usize,
    scal_min: f64,
    t_norm_sq: f64,
    mu: f64,
    out: *mut f64,
) -> SpintorStatus {
    guarded(|| {
        if out.is_null() {
            return SpintorStatus::NullArgument;
        }
        match estimates::beta_tw(n, scal_min, t_norm_sq, mu) {
            Ok(value) => {
                unsafe { *out = value };
                SpintorStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Scalar curvature of the family connection, Scal − 24s²‖T‖².
#[no_mangle]
pub extern "C" fn spintor_scal_s(scal_g: f64, s: f64, t_norm_sq: f64) -> f64 {
    estimates::scal_s(scal_g, s, t_norm_sq)
}

/// Real roots of the Killing-number quadratic, ascending.  Writes up to two
/// values; `out_len` receives 0, 1, or 2 (0 means no real Killing number).
#[no_mangle]
pub extern "C" fn spintor_kappa_solutions(
    n: usize,
    scal: f64,
    t_norm_sq: f64,
    mu: f64,
    out: *mut f64,
    capacity: usize,
    out_len: *mut usize,
) -> SpintorStatus {
    guarded(|| {
        if out.is_null() || out_len.is_null() {
            return SpintorStatus::NullArgument;
        }
        match estimates::kappa_solutions(n, scal, t_norm_sq, mu) {
            Ok(roots) => {
                if capacity < roots.len() {
                    return SpintorStatus::BufferTooSmall;
                }
                for (i, root) in roots.iter().enumerate() {
                    unsafe { *out.add(i) = *root };
                }
                unsafe { *out_len = roots.len() };
                SpintorStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Creates a deformed Stiefel model: `which` is 42 for SO(4)/SO(2) or 52 for
/// SO(5)/SO(3), `t` the positive deformation parameter.  The handle must be
/// released with `spintor_stiefel_free`.
#[no_mangle]
pub extern "C" fn spintor_stiefel_new(
    which: u32,
    t: f64,
    out: *mut *mut SpintorModel,
) -> SpintorStatus {
    guarded(|| {
        if out.is_null() {
            return SpintorStatus::NullArgument;
        }
        let model = match which {
            42 => ReductiveModel::stiefel_42(t),
            52 => ReductiveModel::stiefel_52(t),
            _ => return SpintorStatus::InvalidArgument,
        };
        let model = match model {
            Ok(m) => m,
            Err(e) => return status_of(&e),
        };
        let rep = match build_spin_rep(model.n()) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        let handle = Box::new(SpintorModel { model, rep });
        unsafe { *out = Box::into_raw(handle) };
        SpintorStatus::Ok
    })
}

/// Releases a model handle.  Passing null is a no-op.
///
/// # Safety
/// `handle` must be null or a pointer obtained from `spintor_stiefel_new`
/// that has not been freed already.
#[no_mangle]
pub unsafe extern "C" fn spintor_stiefel_free(handle: *mut SpintorModel) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

unsafe fn deref<'a>(handle: *const SpintorModel) -> Option<&'a SpintorModel> {
    unsafe { handle.as_ref() }
}

/// Dimension of the underlying homogeneous space.
///
/// # Safety
/// `handle` must be a live pointer from `spintor_stiefel_new`.
#[no_mangle]
pub unsafe extern "C" fn spintor_stiefel_dim(
    handle: *const SpintorModel,
    out: *mut usize,
) -> SpintorStatus {
    guarded(|| {
        let (Some(h), false) = (unsafe { deref(handle) }, out.is_null()) else {
            return SpintorStatus::NullArgument;
        };
        unsafe { *out = h.model.n() };
        SpintorStatus::Ok
    })
}

/// Riemannian scalar curvature of the model.
///
/// # Safety
/// `handle` must be a live pointer from `spintor_stiefel_new`.
#[no_mangle]
pub unsafe extern "C" fn spintor_stiefel_scal_g(
    handle: *const SpintorModel,
    out: *mut f64,
) -> SpintorStatus {
    guarded(|| {
        let (Some(h), false) = (unsafe { deref(handle) }, out.is_null()) else {
            return SpintorStatus::NullArgument;
        };
        match h.model.scal_g() {
            Ok(value) => {
                unsafe { *out = value };
                SpintorStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Squared norm of the characteristic torsion form.
///
/// # Safety
/// `handle` must be a live pointer from `spintor_stiefel_new`.
#[no_mangle]
pub unsafe extern "C" fn spintor_stiefel_torsion_norm_sq(
    handle: *const SpintorModel,
    out: *mut f64,
) -> SpintorStatus {
    guarded(|| {
        let (Some(h), false) = (unsafe { deref(handle) }, out.is_null()) else {
            return SpintorStatus::NullArgument;
        };
        unsafe { *out = h.model.torsion().norm_sq() };
        SpintorStatus::Ok
    })
}

/// Torsion eigenvalues realized by the isotropy-invariant spinors,
/// descending.
///
/// # Safety
/// `handle` must be a live pointer from `spintor_stiefel_new`; `out` must
/// point to at least `capacity` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn spintor_stiefel_invariant_mus(
    handle: *const SpintorModel,
    out: *mut f64,
    capacity: usize,
    out_len: *mut usize,
) -> SpintorStatus {
    guarded(|| {
        let (Some(h), false) = (unsafe { deref(handle) }, out.is_null() || out_len.is_null())
        else {
            return SpintorStatus::NullArgument;
        };
        let space = match h.model.invariant_spinors(&h.rep) {
            Ok(s) => s,
            Err(e) => return status_of(&e),
        };
        let mus = space.mus();
        if capacity < mus.len() {
            return SpintorStatus::BufferTooSmall;
        }
        for (i, mu) in mus.iter().enumerate() {
            unsafe { *out.add(i) = *mu };
        }
        unsafe { *out_len = mus.len() };
        SpintorStatus::Ok
    })
}

/// Eigenvalues of the characteristic Dirac operator restricted to the
/// invariant spinors, descending.
///
/// # Safety
/// `handle` must be a live pointer from `spintor_stiefel_new`; `out` must
/// point to at least `capacity` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn spintor_stiefel_dirac_eigenvalues(
    handle: *const SpintorModel,
    out: *mut f64,
    capacity: usize,
    out_len: *mut usize,
) -> SpintorStatus {
    guarded(|| {
        let (Some(h), false) = (unsafe { deref(handle) }, out.is_null() || out_len.is_null())
        else {
            return SpintorStatus::NullArgument;
        };
        let ops = match h.model.algebraic_dirac(&h.rep, 0.25) {
            Ok(ops) => ops,
            Err(e) => return status_of(&e),
        };
        let (evals, _) = hermitian_eigen(ops.dslash());
        if capacity < evals.len() {
            return SpintorStatus::BufferTooSmall;
        }
        for (i, ev) in evals.iter().enumerate() {
            unsafe { *out.add(i) = *ev };
        }
        unsafe { *out_len = evals.len() };
        SpintorStatus::Ok
    })
}

/// Largest residual of the Killing equation ∇^s ψ = κ X·ψ for the best
/// invariant candidate spinor at the model's twistorial parameter.
///
/// # Safety
/// `handle` must be a live pointer from `spintor_stiefel_new`.
#[no_mangle]
pub unsafe extern "C" fn spintor_stiefel_killing_residual(
    handle: *const SpintorModel,
    kappa: f64,
    out: *mut f64,
) -> SpintorStatus {
    guarded(|| {
        let (Some(h), false) = (unsafe { deref(handle) }, out.is_null()) else {
            return SpintorStatus::NullArgument;
        };
        let torsion = h.model.torsion();
        let cand = match verify::find_killing_candidate(&h.model, &h.rep, torsion, kappa) {
            Ok(c) => c,
            Err(e) => return status_of(&e),
        };
        match verify::killing_residual(&h.model, &h.rep, torsion, &cand) {
            Ok(report) => {
                unsafe { *out = report.max() };
                SpintorStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Runs the Einstein–Sasaki integrability table.  Writes 1 when every
/// candidate Killing number is excluded (all determinants nonzero), else 0.
#[no_mangle]
pub extern "C" fn spintor_sasaki_check(out_excluded: *mut i32) -> SpintorStatus {
    guarded(|| {
        if out_excluded.is_null() {
            return SpintorStatus::NullArgument;
        }
        let rep = match build_spin_rep(5) {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        match verify::sasaki_nonexistence_report(&rep) {
            Ok(report) => {
                unsafe { *out_excluded = i32::from(report.all_nonzero()) };
                SpintorStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}
