//! C ABI over `vknot`.
//!
//! Codes and bundles are opaque heap handles. Every fallible call returns a
//! [`VkStatus`] and writes its result through an out pointer; the message of
//! the last failure on the calling thread is available from
//! [`vk_last_error`]. Strings handed out by the library must be released
//! with [`vk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vknot::codec::CodecError;
use vknot::lfpoly::{self, InvariantBundle, Verdict};
use vknot::report::BundleJson;
use vknot::{corpus, transforms, Error, GaussCode};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedToken = 3,
    DuplicateStrand = 4,
    SignMismatch = 5,
    OddOccurrence = 6,
    UnknownCrossing = 7,
    UnknownFixture = 8,
    InvalidArgument = 9,
    Panic = 10,
}

/// Opaque signed Gauss code.
pub struct VkCode(GaussCode);

/// Opaque invariant bundle.
pub struct VkBundle(InvariantBundle);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(VkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Codec(CodecError::MalformedToken { .. }) => VkStatus::MalformedToken,
            Error::Codec(CodecError::DuplicateStrand { .. }) => VkStatus::DuplicateStrand,
            Error::Codec(CodecError::SignMismatch { .. }) => VkStatus::SignMismatch,
            Error::Codec(CodecError::OddOccurrence { .. }) => VkStatus::OddOccurrence,
            Error::UnknownCrossing(_) => VkStatus::UnknownCrossing,
            Error::UnknownFixture(_) => VkStatus::UnknownFixture,
            Error::InvalidSite(_) => VkStatus::InvalidArgument,
        };
        Failure(status, format!("{}: {e}", e.kind()))
    }
}

impl From<CodecError> for Failure {
    fn from(e: CodecError) -> Self {
        Error::from(e).into()
    }
}

fn null() -> Failure {
    Failure(VkStatus::NullPointer, "null pointer argument".into())
}

fn set_error(msg: Option<String>) {
    let msg = msg.map(|m| CString::new(m.replace('\0', " ")).unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> VkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            VkStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            VkStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(VkStatus::InvalidUtf8, format!("InvalidUtf8: {e}")))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    put(out, CString::new(s).unwrap().into_raw())
}

unsafe fn put_code(out: *mut *mut VkCode, code: GaussCode) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(VkCode(code))))
}

/// Parses a signed Gauss code such as `"O1-O2-U1-O3+U2-U4-O4-U3+"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_parse(text: *const c_char, out: *mut *mut VkCode) -> VkStatus {
    guard(|| {
        let code: GaussCode = c_str(text)?.parse()?;
        put_code(out, code)
    })
}

/// # Safety
/// `code` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vk_code_free(code: *mut VkCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Writes the canonical serialization of `code`.
///
/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_serialize(code: *const VkCode, out: *mut *mut c_char) -> VkStatus {
    guard(|| put_string(out, get(code)?.0.serialize()))
}

/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_writhe(code: *const VkCode, out: *mut i64) -> VkStatus {
    guard(|| put(out, get(code)?.0.writhe()))
}

/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_crossing_count(code: *const VkCode, out: *mut usize) -> VkStatus {
    guard(|| put(out, get(code)?.0.crossing_count()))
}

/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_mirror(code: *const VkCode, out: *mut *mut VkCode) -> VkStatus {
    guard(|| put_code(out, transforms::mirror(&get(code)?.0)))
}

/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_reverse(code: *const VkCode, out: *mut *mut VkCode) -> VkStatus {
    guard(|| put_code(out, transforms::reverse(&get(code)?.0)))
}

/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_crossing_change(
    code: *const VkCode,
    label: u32,
    out: *mut *mut VkCode,
) -> VkStatus {
    guard(|| put_code(out, transforms::crossing_change(&get(code)?.0, label)?))
}

/// Smooths crossing `label` against the orientation.
///
/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_code_smooth(code: *const VkCode, label: u32, out: *mut *mut VkCode) -> VkStatus {
    guard(|| put_code(out, transforms::smooth_against(&get(code)?.0, label)?.result))
}

/// # Safety
/// `code` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_bundle_compute(code: *const VkCode, out: *mut *mut VkBundle) -> VkStatus {
    guard(|| put(out, Box::into_raw(Box::new(VkBundle(lfpoly::bundle(&get(code)?.0))))))
}

/// # Safety
/// `bundle` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vk_bundle_free(bundle: *mut VkBundle) {
    if !bundle.is_null() {
        drop(Box::from_raw(bundle));
    }
}

/// Writes the full JSON report.
///
/// # Safety
/// `bundle` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_bundle_to_json(bundle: *const VkBundle, out: *mut *mut c_char) -> VkStatus {
    guard(|| {
        let json = serde_json::to_string(&BundleJson::from(&get(bundle)?.0)).unwrap();
        put_string(out, json)
    })
}

/// Writes the affine index polynomial as display text.
///
/// # Safety
/// `bundle` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_bundle_p(bundle: *const VkBundle, out: *mut *mut c_char) -> VkStatus {
    guard(|| put_string(out, get(bundle)?.0.p.to_string()))
}

/// Writes L^n as display text. `n` must be positive.
///
/// # Safety
/// `bundle` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_bundle_l(bundle: *const VkBundle, n: i64, out: *mut *mut c_char) -> VkStatus {
    guard(|| {
        let b = get(bundle)?;
        positive(n)?;
        put_string(out, b.0.l(n).to_string())
    })
}

/// Writes F^n as display text. `n` must be positive.
///
/// # Safety
/// `bundle` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_bundle_f(bundle: *const VkBundle, n: i64, out: *mut *mut c_char) -> VkStatus {
    guard(|| {
        let b = get(bundle)?;
        positive(n)?;
        put_string(out, b.0.f(n).to_string())
    })
}

fn positive(n: i64) -> Result<(), Failure> {
    if n < 1 {
        return Err(Failure(VkStatus::InvalidArgument, format!("InvalidArgument: n must be positive, got {n}")));
    }
    Ok(())
}

/// Compares two bundles. `distinguished` receives the verdict and `message`
/// a human readable description naming the first separating invariant.
///
/// # Safety
/// Both bundles must be live handles and both out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn vk_distinguish(
    a: *const VkBundle,
    b: *const VkBundle,
    distinguished: *mut bool,
    message: *mut *mut c_char,
) -> VkStatus {
    guard(|| {
        let v = lfpoly::distinguish(&get(a)?.0, &get(b)?.0);
        if distinguished.is_null() || message.is_null() {
            return Err(null());
        }
        put(distinguished, matches!(v, Verdict::Distinguished(_)))?;
        put_string(message, v.to_string())
    })
}

/// Loads a named diagram from the built-in corpus.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_fixture(name: *const c_char, out: *mut *mut VkCode) -> VkStatus {
    guard(|| put_code(out, corpus::fixture(c_str(name)?)?.code))
}

/// Builds the n-twist family member, or its mutant when `mutant` is set.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vk_family_kn(n: usize, mutant: bool, out: *mut *mut VkCode) -> VkStatus {
    guard(|| {
        if n == 0 {
            return Err(Failure(VkStatus::InvalidArgument, "InvalidArgument: n must be positive".into()));
        }
        put_code(out, corpus::family_kn(n, mutant))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn vk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn vk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
