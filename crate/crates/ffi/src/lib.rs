//! C ABI over `cpt-core`.
//!
//! Every fallible entry point returns a [`CptStatus`] code. Results are
//! returned through opaque handles that the caller releases with the matching
//! `*_free` function. The message of the most recent failure on the calling
//! thread is available from [`cpt_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cpt_core::autosolve::compute_septet;
use cpt_core::catalog::FieldSpec;
use cpt_core::cptgroup::{generate_group, monomial_table, CptGroup};
use cpt_core::golden::{verify_embedded, VerifyReport};
use cpt_core::spinbasis::{build_brauer_weyl_with, BuildOptions};
use cpt_core::Error;

/// Status codes shared by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CptStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Unsupported = 4,
    LimitExceeded = 5,
    OutOfRange = 6,
    Internal = 7,
    Panic = 8,
}

/// Classification of one field: septet, sign vector, group type and table.
pub struct CptClassification {
    field: String,
    generators: usize,
    matrix_dim: usize,
    group: CptGroup,
    septet: [(i8, u32); 7],
    table: [[(i8, u32); 8]; 8],
    group_type: CString,
}

/// Outcome of replaying the embedded reference tables.
pub struct CptVerifyReport {
    report: VerifyReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> CptStatus {
    match e {
        Error::Parse(_) => CptStatus::Parse,
        Error::Unsupported(_) => CptStatus::Unsupported,
        Error::DimensionCap { .. } | Error::GeneratorRange { .. } | Error::SignatureCap { .. } => CptStatus::LimitExceeded,
        _ => CptStatus::Internal,
    }
}

fn fail(status: CptStatus, msg: impl Into<String>) -> CptStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into [`CptStatus::Panic`].
fn guard(f: impl FnOnce() -> CptStatus) -> CptStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(CptStatus::Panic, "panic inside cpt-core"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CptStatus> {
    if s.is_null() {
        return Err(fail(CptStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(CptStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn classify(field: &str, dim_cap: usize) -> Result<CptClassification, CptStatus> {
    let spec: FieldSpec = field.parse().map_err(|e: Error| fail(status_of(&e), e.to_string()))?;
    let m = spec
        .generator_m()
        .ok_or_else(|| fail(CptStatus::Unsupported, format!("{spec} is a scalar field with a trivial CPT group")))?;
    let run = || -> cpt_core::Result<CptClassification> {
        let opts = BuildOptions {
            dim_cap,
            ..BuildOptions::default()
        };
        let g = build_brauer_weyl_with(m, opts)?;
        let septet = compute_septet(&g)?;
        let group = generate_group(&septet)?;
        let members = septet.monomials().map(|x| (x.sign, x.mask));
        let table = monomial_table(&septet).map(|row| row.map(|x| (x.sign, x.mask)));
        let group_type = CString::new(group.group_type.ascii()).unwrap_or_default();
        Ok(CptClassification {
            field: spec.to_string(),
            generators: g.len(),
            matrix_dim: g.dim(),
            group,
            septet: members,
            table,
            group_type,
        })
    };
    run().map_err(|e| fail(status_of(&e), e.to_string()))
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length in bytes.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn cpt_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let bytes = e.borrow();
        let bytes = bytes.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cpt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Classifies `field` (`l=3/2`, `k=3,r=2`, ...) and stores a new handle in `out`.
/// `dim_cap` bounds the matrix dimension; 0 selects the default.
///
/// # Safety
/// `field` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cpt_classify(field: *const c_char, dim_cap: usize, out: *mut *mut CptClassification) -> CptStatus {
    guard(|| {
        if out.is_null() {
            return fail(CptStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let field = match read_str(field) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let cap = if dim_cap == 0 { BuildOptions::default().dim_cap } else { dim_cap };
        match classify(field, cap) {
            Ok(c) => {
                *out = Box::into_raw(Box::new(c));
                CptStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Releases a handle from [`cpt_classify`]. Null is ignored.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cpt_classification_free(h: *mut CptClassification) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn with_handle<T>(h: *const T, f: impl FnOnce(&T) -> CptStatus) -> CptStatus {
    match h.as_ref() {
        Some(h) => f(h),
        None => fail(CptStatus::NullPointer, "null handle"),
    }
}

/// Group type name (`D4xZ2`, `Q4xZ2`, ...), valid while the handle lives.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cpt_classification_group_type(h: *const CptClassification) -> *const c_char {
    h.as_ref().map_or(ptr::null(), |c| c.group_type.as_ptr())
}

/// Number of Clifford generators and the matrix dimension.
///
/// # Safety
/// `h` must be a live handle; outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cpt_classification_dims(h: *const CptClassification, generators: *mut usize, matrix_dim: *mut usize) -> CptStatus {
    with_handle(h, |c| {
        if generators.is_null() || matrix_dim.is_null() {
            return fail(CptStatus::NullPointer, "null output pointer");
        }
        *generators = c.generators;
        *matrix_dim = c.matrix_dim;
        CptStatus::Ok
    })
}

/// Writes the seven squares `W², E², C², Π², K², S², F²` (each +1 or -1).
///
/// # Safety
/// `h` must be a live handle and `signs` point to 7 writable `int8_t`.
#[no_mangle]
pub unsafe extern "C" fn cpt_classification_sign_vector(h: *const CptClassification, signs: *mut i8) -> CptStatus {
    with_handle(h, |c| {
        if signs.is_null() {
            return fail(CptStatus::NullPointer, "null output pointer");
        }
        ptr::copy_nonoverlapping(c.group.sign_vector.0.as_ptr(), signs, 7);
        CptStatus::Ok
    })
}

/// Septet member `index` (0..7 for W, E, C, Π, K, S, F) as a sign and a
/// generator bitmask (bit `j-1` set when `ℰ_j` occurs).
///
/// # Safety
/// `h` must be a live handle; outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cpt_classification_member(h: *const CptClassification, index: usize, sign: *mut i8, mask: *mut u32) -> CptStatus {
    with_handle(h, |c| {
        if sign.is_null() || mask.is_null() {
            return fail(CptStatus::NullPointer, "null output pointer");
        }
        let Some(&(s, m)) = c.septet.get(index) else {
            return fail(CptStatus::OutOfRange, format!("member index {index} outside 0..7"));
        };
        *sign = s;
        *mask = m;
        CptStatus::Ok
    })
}

/// Cell `(row, col)` of the signed multiplication table, rows and columns
/// ordered 1, W, E, C, Π, K, S, F.
///
/// # Safety
/// `h` must be a live handle; outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cpt_classification_cell(
    h: *const CptClassification,
    row: usize,
    col: usize,
    sign: *mut i8,
    mask: *mut u32,
) -> CptStatus {
    with_handle(h, |c| {
        if sign.is_null() || mask.is_null() {
            return fail(CptStatus::NullPointer, "null output pointer");
        }
        if row >= 8 || col >= 8 {
            return fail(CptStatus::OutOfRange, format!("cell ({row},{col}) outside the 8x8 table"));
        }
        (*sign, *mask) = c.table[row][col];
        CptStatus::Ok
    })
}

/// Copies the canonical field name into `buf` (NUL-terminated, truncated to
/// `len`). Returns the full name length in bytes.
///
/// # Safety
/// `h` must be a live handle; `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn cpt_classification_field(h: *const CptClassification, buf: *mut c_char, len: usize) -> usize {
    match h.as_ref() {
        Some(c) => {
            let bytes = c.field.as_bytes();
            if !buf.is_null() && len > 0 {
                let n = bytes.len().min(len - 1);
                ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
                *buf.add(n) = 0;
            }
            bytes.len()
        }
        None => 0,
    }
}

/// Regenerates the embedded reference tables and stores the report in `out`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cpt_verify(out: *mut *mut CptVerifyReport) -> CptStatus {
    guard(|| {
        if out.is_null() {
            return fail(CptStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        match verify_embedded() {
            Ok(report) => {
                *out = Box::into_raw(Box::new(CptVerifyReport { report }));
                CptStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Comparison, difference and unexplained-difference counts.
///
/// # Safety
/// `h` must be a live handle; outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cpt_verify_counts(
    h: *const CptVerifyReport,
    comparisons: *mut usize,
    diffs: *mut usize,
    unexplained: *mut usize,
) -> CptStatus {
    with_handle(h, |r| {
        if comparisons.is_null() || diffs.is_null() || unexplained.is_null() {
            return fail(CptStatus::NullPointer, "null output pointer");
        }
        *comparisons = r.report.comparisons;
        *diffs = r.report.diffs.len();
        *unexplained = r.report.unexplained().count();
        CptStatus::Ok
    })
}

/// True when every difference is covered by a proven erratum.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cpt_verify_passed(h: *const CptVerifyReport) -> bool {
    h.as_ref().is_some_and(|r| r.report.passed())
}

/// Releases a handle from [`cpt_verify`]. Null is ignored.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cpt_verify_free(h: *mut CptVerifyReport) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}
