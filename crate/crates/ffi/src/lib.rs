//! C ABI over `partition-forge`.
//!
//! Every fallible call returns a [`PfStatus`]; on failure the message is
//! available from [`pf_last_error`] on the same thread. Sequences and parsed
//! b-files are opaque handles released with their `_free` functions. Strings
//! returned through `char **` belong to the caller and are released with
//! [`pf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use partition_forge::asympt::{self, Index};
use partition_forge::cli::{compare_sequence, parse_bfile, BFileRecord};
use partition_forge::series::{egf_coeffs, ogf_coeffs_euler};
use partition_forge::{AdmissibleTriple, CoeffSequence, Error, Form};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Parse = 4,
    OutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfForm {
    P = 0,
    Q = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfKind {
    /// `n! [z^n] F`
    Egf = 0,
    /// `[z^n] F`, only for `j = 0`
    Ogf = 1,
}

/// Opaque exact coefficient sequence.
pub struct PfSequence {
    inner: CoeffSequence,
}

/// Opaque parsed b-file.
pub struct PfBFile {
    records: Vec<BFileRecord>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PfComparison {
    pub matched_prefix_length: usize,
    pub overlap_length: usize,
    pub offset_applied: i64,
    /// Nonzero when a mismatch was found.
    pub has_mismatch: i32,
    pub mismatch_index: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PfStatus {
    match e {
        Error::InadmissibleTriple { .. }
        | Error::TripleSyntax(_)
        | Error::FormSyntax(_)
        | Error::ZeroArgument
        | Error::RequiresJZero(_) => PfStatus::InvalidArgument,
        Error::BFileSyntax { .. } | Error::NonIncreasingIndex { .. } => PfStatus::Parse,
        Error::TableTooSmall { .. } | Error::OracleBound { .. } => PfStatus::OutOfRange,
        _ => PfStatus::Domain,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (PfStatus, String)>) -> PfStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            PfStatus::Panic
        }
    }
}

fn lift<T>(r: partition_forge::Result<T>) -> Result<T, (PfStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (PfStatus, String) {
    (PfStatus::NullPointer, "null pointer argument".into())
}

fn triple(i: u32, j: u32, k: u32) -> Result<AdmissibleTriple, (PfStatus, String)> {
    lift(AdmissibleTriple::new(i, j, k))
}

fn form(f: PfForm) -> Form {
    match f {
        PfForm::P => Form::P,
        PfForm::Q => Form::Q,
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("decimal text has no nul").into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes coefficients `0..=n` of `P` or `Q` for the triple `(i, j, k)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn pf_sequence_new(
    i: u32,
    j: u32,
    k: u32,
    f: PfForm,
    kind: PfKind,
    n: usize,
    out: *mut *mut PfSequence,
) -> PfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let t = triple(i, j, k)?;
        let inner = match kind {
            PfKind::Egf => lift(egf_coeffs(t, form(f), n))?,
            PfKind::Ogf => lift(ogf_coeffs_euler(t, form(f), n))?,
        };
        *out = Box::into_raw(Box::new(PfSequence { inner }));
        Ok(())
    })
}

/// # Safety
/// `seq` must be null or a live handle from [`pf_sequence_new`].
#[no_mangle]
pub unsafe extern "C" fn pf_sequence_free(seq: *mut PfSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Number of stored coefficients, or 0 for a null handle.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_sequence_len(seq: *const PfSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.inner.len())
}

/// Decimal text of coefficient `index`.
///
/// # Safety
/// `seq` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_sequence_value(
    seq: *const PfSequence,
    index: usize,
    out: *mut *mut c_char,
) -> PfStatus {
    guard(|| {
        let (Some(s), false) = (seq.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let v = s.inner.values.get(index).ok_or_else(|| {
            (
                PfStatus::OutOfRange,
                format!("index {index} beyond degree {}", s.inner.degree()),
            )
        })?;
        *out = to_c_string(v.to_string());
        Ok(())
    })
}

/// The whole sequence in b-file format.
///
/// # Safety
/// `seq` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_sequence_to_bfile(
    seq: *const PfSequence,
    out: *mut *mut c_char,
) -> PfStatus {
    guard(|| {
        let (Some(s), false) = (seq.as_ref(), out.is_null()) else {
            return Err(null());
        };
        *out = to_c_string(s.inner.to_bfile());
        Ok(())
    })
}

/// Parses NUL-terminated b-file text.
///
/// # Safety
/// `text` must be a valid C string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_bfile_parse(text: *const c_char, out: *mut *mut PfBFile) -> PfStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (PfStatus::Parse, "b-file text is not UTF-8".to_string()))?;
        let records = lift(parse_bfile(text))?;
        *out = Box::into_raw(Box::new(PfBFile { records }));
        Ok(())
    })
}

/// # Safety
/// `b` must be null or a live handle from [`pf_bfile_parse`].
#[no_mangle]
pub unsafe extern "C" fn pf_bfile_free(b: *mut PfBFile) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Number of records, or 0 for a null handle.
///
/// # Safety
/// `b` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_bfile_len(b: *const PfBFile) -> usize {
    b.as_ref().map_or(0, |b| b.records.len())
}

/// Compares `seq[n]` with the record at index `n + offset`.
///
/// # Safety
/// Both handles must be live and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_compare(
    seq: *const PfSequence,
    reference: *const PfBFile,
    offset: i64,
    out: *mut PfComparison,
) -> PfStatus {
    guard(|| {
        let (Some(s), Some(b), false) = (seq.as_ref(), reference.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let report = lift(compare_sequence(&s.inner, &b.records, offset))?;
        *out = PfComparison {
            matched_prefix_length: report.matched_prefix_length,
            overlap_length: report.overlap_length,
            offset_applied: report.offset_applied,
            has_mismatch: i32::from(report.first_mismatch.is_some()),
            mismatch_index: report.first_mismatch.map_or(-1, |m| m.index),
        };
        Ok(())
    })
}

/// Principal-branch Lambert W.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_lambert_w(x: f64, out: *mut f64) -> PfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = lift(asympt::lambert_w(x))?;
        Ok(())
    })
}

/// `w_n^2 / ln^2 n` with `w_n = W(e^gamma n)`, taking `ln n`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_kotesovec_ratio(ln_n: f64, out: *mut f64) -> PfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = lift(asympt::kotesovec_ratio(Index::Ln(ln_n)))?;
        Ok(())
    })
}

/// First-order `log [z^n] F(z)`, taking `ln n`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_log_coeff_asymptotic(
    i: u32,
    j: u32,
    k: u32,
    f: PfForm,
    ln_n: f64,
    out: *mut f64,
) -> PfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = lift(asympt::log_coeff_asymptotic(
            triple(i, j, k)?,
            form(f),
            Index::Ln(ln_n),
        ))?;
        Ok(())
    })
}

/// Natural log of the closed-form coefficient estimate, taking `ln n`.
///
/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn pf_coeff_asymptotic_ln(
    i: u32,
    j: u32,
    k: u32,
    f: PfForm,
    ln_n: f64,
    out: *mut f64,
) -> PfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let e = lift(asympt::coeff_asymptotic(
            triple(i, j, k)?,
            form(f),
            Index::Ln(ln_n),
        ))?;
        *out = e.ln_value;
        Ok(())
    })
}
