//! C ABI for `ncgabor`.
//!
//! Conventions:
//!
//! * Every fallible call returns an [`NcgStatus`]; on anything but
//!   `NCG_STATUS_OK` a message is available from [`ncg_last_error`] on the
//!   same thread.
//! * Signals of length `n` are `2 * n` doubles, interleaved `re, im`.
//! * Phase-space points are written as interleaved `x, w` pairs of `size_t`.
//! * A [`NcgModule`] is created by [`ncg_module_new`] and released with
//!   [`ncg_module_free`]. Handles are immutable and may be shared between
//!   threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ncgabor::gabor_frames::{canonical_dual, frame_bounds, tight_window, wexler_raz_check};
use ncgabor::lattice::{is_isotropic, parse_lattice, Lattice};
use ncgabor::tf_transforms::{periodized_gaussian, stft};
use ncgabor::{Error, ModulePair, Signal, TorusSize};
use num_complex::Complex64;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    NotAFrame = 4,
    NotInvertible = 5,
    NonConvergence = 6,
    BufferTooSmall = 7,
    Panic = 8,
    Internal = 9,
}

/// Opaque handle: a lattice together with its adjoint.
pub struct NcgModule {
    inner: ModulePair,
}

/// Frame bounds of a Gabor system. Redundancy is `|Lambda| / N` as a
/// reduced fraction.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NcgFrameReport {
    pub lower_bound: f64,
    pub upper_bound: f64,
    /// `INFINITY` when the system is not a frame.
    pub condition_number: f64,
    pub redundancy_numer: usize,
    pub redundancy_denom: usize,
    pub is_frame: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> NcgStatus {
    match err {
        Error::DimensionMismatch { .. } => NcgStatus::DimensionMismatch,
        Error::InvalidTorusSize(_) | Error::InvalidSpec(_) | Error::Parse(_) | Error::Empty(_) => {
            NcgStatus::InvalidArgument
        }
        Error::NotAFrame { .. } => NcgStatus::NotAFrame,
        Error::NotInvertible { .. } | Error::Singular { .. } => NcgStatus::NotInvertible,
        Error::NonConvergence { .. } | Error::NotPositiveDefinite { .. } => NcgStatus::NonConvergence,
        _ => NcgStatus::Internal,
    }
}

/// Runs `body`, recording the error message and turning panics into
/// `NCG_STATUS_PANIC`.
fn guard(body: impl FnOnce() -> Result<(), (NcgStatus, String)>) -> NcgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NcgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside ncgabor");
            NcgStatus::Panic
        }
    }
}

fn fail(err: Error) -> (NcgStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (NcgStatus, String) {
    (NcgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn module<'a>(m: *const NcgModule) -> Result<&'a ModulePair, (NcgStatus, String)> {
    m.as_ref().map(|m| &m.inner).ok_or_else(|| null("module"))
}

unsafe fn read_signal(ptr: *const f64, n: usize, what: &str) -> Result<Signal, (NcgStatus, String)> {
    if ptr.is_null() {
        return Err(null(what));
    }
    let raw = std::slice::from_raw_parts(ptr, 2 * n);
    Signal::new(raw.chunks_exact(2).map(|c| Complex64::new(c[0], c[1])).collect()).map_err(fail)
}

unsafe fn write_complex(out: *mut f64, values: &[Complex64]) {
    let dst = std::slice::from_raw_parts_mut(out, 2 * values.len());
    for (pair, z) in dst.chunks_exact_mut(2).zip(values) {
        pair[0] = z.re;
        pair[1] = z.im;
    }
}

fn check_len(m: &ModulePair, n: usize) -> Result<(), (NcgStatus, String)> {
    let expected = m.size().get();
    if n != expected {
        return Err(fail(Error::DimensionMismatch { expected, found: n }));
    }
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ncg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ncg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses `spec` (`sep:a,b` or `gen:(x,w);...`) on `Z_n x Z_n` and builds the
/// lattice with its adjoint.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_new(n: usize, spec: *const c_char, out: *mut *mut NcgModule) -> NcgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        if spec.is_null() {
            return Err(null("spec"));
        }
        let spec = CStr::from_ptr(spec)
            .to_str()
            .map_err(|_| (NcgStatus::InvalidArgument, "spec is not UTF-8".to_string()))?;
        let size = TorusSize::new(n).map_err(fail)?;
        let lattice = parse_lattice(spec, size).map_err(fail)?;
        *out = Box::into_raw(Box::new(NcgModule { inner: ModulePair::new(lattice) }));
        Ok(())
    })
}

/// # Safety
/// `m` must be NULL or a handle from [`ncg_module_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_free(m: *mut NcgModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// `N`, or 0 for a NULL handle.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_size(m: *const NcgModule) -> usize {
    m.as_ref().map_or(0, |m| m.inner.size().get())
}

/// Number of lattice points, or 0 for a NULL handle.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_lattice_len(m: *const NcgModule) -> usize {
    m.as_ref().map_or(0, |m| m.inner.lattice().len())
}

/// Number of adjoint lattice points, or 0 for a NULL handle.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_adjoint_len(m: *const NcgModule) -> usize {
    m.as_ref().map_or(0, |m| m.inner.adjoint().len())
}

unsafe fn write_points(lattice: &Lattice, out: *mut usize, capacity: usize) -> Result<(), (NcgStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    if capacity < lattice.len() {
        return Err((
            NcgStatus::BufferTooSmall,
            format!("need room for {} points, got {capacity}", lattice.len()),
        ));
    }
    let dst = std::slice::from_raw_parts_mut(out, 2 * lattice.len());
    for (pair, p) in dst.chunks_exact_mut(2).zip(lattice.points()) {
        pair[0] = p.x;
        pair[1] = p.w;
    }
    Ok(())
}

/// Writes the lattice points in ascending order into `out`, which holds
/// `capacity` points (`2 * capacity` entries).
///
/// # Safety
/// `m` must be a live handle and `out` valid for `2 * capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_lattice_points(m: *const NcgModule, out: *mut usize, capacity: usize) -> NcgStatus {
    guard(|| write_points(module(m)?.lattice(), out, capacity))
}

/// Same as [`ncg_module_lattice_points`] for the adjoint lattice.
///
/// # Safety
/// `m` must be a live handle and `out` valid for `2 * capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_adjoint_points(m: *const NcgModule, out: *mut usize, capacity: usize) -> NcgStatus {
    guard(|| write_points(module(m)?.adjoint(), out, capacity))
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncg_module_is_isotropic(m: *const NcgModule, out: *mut bool) -> NcgStatus {
    guard(|| {
        let m = module(m)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = is_isotropic(m.lattice());
        Ok(())
    })
}

/// Frame bounds of the Gabor system of `g` over the module's lattice. A
/// window that is not a frame is reported through `is_frame`, not as an
/// error.
///
/// # Safety
/// `g` must hold `2 * n` doubles and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncg_frame_bounds(
    m: *const NcgModule,
    g: *const f64,
    n: usize,
    out: *mut NcgFrameReport,
) -> NcgStatus {
    guard(|| {
        let m = module(m)?;
        check_len(m, n)?;
        let g = read_signal(g, n, "g")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let report = frame_bounds(&g, m).map_err(fail)?;
        *out = NcgFrameReport {
            lower_bound: report.lower_bound,
            upper_bound: report.upper_bound,
            condition_number: report.condition_number,
            redundancy_numer: *report.redundancy.numer(),
            redundancy_denom: *report.redundancy.denom(),
            is_frame: report.is_frame,
        };
        Ok(())
    })
}

/// Canonical dual window of `g`, written to `out` (`2 * n` doubles).
///
/// # Safety
/// `g` must hold and `out` have room for `2 * n` doubles.
#[no_mangle]
pub unsafe extern "C" fn ncg_canonical_dual(m: *const NcgModule, g: *const f64, n: usize, out: *mut f64) -> NcgStatus {
    guard(|| {
        let m = module(m)?;
        check_len(m, n)?;
        let g = read_signal(g, n, "g")?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_complex(out, canonical_dual(&g, m).map_err(fail)?.values());
        Ok(())
    })
}

/// Canonical tight window of `g`, written to `out` (`2 * n` doubles).
///
/// # Safety
/// `g` must hold and `out` have room for `2 * n` doubles.
#[no_mangle]
pub unsafe extern "C" fn ncg_tight_window(m: *const NcgModule, g: *const f64, n: usize, out: *mut f64) -> NcgStatus {
    guard(|| {
        let m = module(m)?;
        check_len(m, n)?;
        let g = read_signal(g, n, "g")?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_complex(out, tight_window(&g, m).map_err(fail)?.values());
        Ok(())
    })
}

/// Wexler-Raz test of the pair `(g, gamma)`. The call succeeds whether or not
/// the pair passes; the verdict goes to `passes`.
///
/// # Safety
/// `g` and `gamma` must hold `2 * n` doubles; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ncg_wexler_raz(
    m: *const NcgModule,
    g: *const f64,
    gamma: *const f64,
    n: usize,
    max_residual: *mut f64,
    passes: *mut bool,
) -> NcgStatus {
    guard(|| {
        let m = module(m)?;
        check_len(m, n)?;
        let g = read_signal(g, n, "g")?;
        let gamma = read_signal(gamma, n, "gamma")?;
        if max_residual.is_null() || passes.is_null() {
            return Err(null("out"));
        }
        let report = wexler_raz_check(&g, &gamma, m).map_err(fail)?;
        *max_residual = report.max_residual;
        *passes = report.passes;
        Ok(())
    })
}

/// Full STFT of `f` with window `g`. `out` receives `n * n` complex values,
/// row `x`, column `w` (`2 * n * n` doubles).
///
/// # Safety
/// `f` and `g` must hold `2 * n` doubles; `out` must have room for
/// `2 * n * n`.
#[no_mangle]
pub unsafe extern "C" fn ncg_stft(f: *const f64, g: *const f64, n: usize, out: *mut f64) -> NcgStatus {
    guard(|| {
        TorusSize::new(n).map_err(fail)?;
        let f = read_signal(f, n, "f")?;
        let g = read_signal(g, n, "g")?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_complex(out, stft(&f, &g).map_err(fail)?.values());
        Ok(())
    })
}

/// Unit-norm periodized Gaussian of length `n`.
///
/// # Safety
/// `out` must have room for `2 * n` doubles.
#[no_mangle]
pub unsafe extern "C" fn ncg_periodized_gaussian(n: usize, out: *mut f64) -> NcgStatus {
    guard(|| {
        let size = TorusSize::new(n).map_err(fail)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_complex(out, periodized_gaussian(size).values());
        Ok(())
    })
}
