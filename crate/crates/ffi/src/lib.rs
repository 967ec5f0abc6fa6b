//! C interface to the `hirzebruch` library.
//!
//! Every fallible function returns an [`HzStatus`]; on failure a message is
//! kept per thread and can be read with [`hz_last_error`]. Strings handed out
//! by the library are owned by the caller and released with
//! [`hz_string_free`]. Presentations are opaque handles released with
//! [`hz_presentation_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hirzebruch::cohomology::{parse_symbols, CohomologyElement};
use hirzebruch::gw::{f2k_invariant, Gamma, InvariantQuery};
use hirzebruch::quantum::{batyrev_presentation, batyrev_product, m_fold_quantum_product, qh_presentation};
use hirzebruch::ring::serial::{from_json_str, to_json_string};
use hirzebruch::{CurveClass, Error, Presentation, QuantumElement};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HzStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed symbol list, class or JSON.
    Parse = 3,
    /// Odd or negative `kappa`, unsupported factors and similar.
    Domain = 4,
    /// Two computations that must agree did not.
    Mismatch = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HzRing {
    Classical = 0,
    Qh = 1,
    Batyrev = 2,
}

/// Opaque completed presentation.
pub struct HzPresentation {
    inner: Presentation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: HzStatus, msg: String) -> HzStatus {
    set_error(msg);
    status
}

fn from_error(err: Error) -> HzStatus {
    let status = match err {
        Error::Parse(_) => HzStatus::Parse,
        Error::Mismatch(_) => HzStatus::Mismatch,
        _ => HzStatus::Domain,
    };
    fail(status, format!("{}: {err}", err.code()))
}

fn guard(f: impl FnOnce() -> HzStatus) -> HzStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(HzStatus::Panic, "internal panic".into()))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, HzStatus> {
    if s.is_null() {
        return Err(fail(HzStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(HzStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> HzStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            HzStatus::Ok
        }
        Err(_) => fail(HzStatus::Panic, "output contains nul".into()),
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! try_hz {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return from_error(err),
        }
    };
}

macro_rules! require {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(HzStatus::NullArgument, concat!("null ", stringify!($p)).into());
        })+
    };
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next library call on the same thread.
#[no_mangle]
pub extern "C" fn hz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn new_presentation(
    build: impl FnOnce() -> hirzebruch::Result<Presentation>,
    out: *mut *mut HzPresentation,
) -> HzStatus {
    require!(out);
    let inner = try_hz!(build());
    *out = Box::into_raw(Box::new(HzPresentation { inner }));
    HzStatus::Ok
}

/// Quantum cohomology presentation of `F_2k`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_qh_presentation_new(k: u32, out: *mut *mut HzPresentation) -> HzStatus {
    guard(|| new_presentation(|| qh_presentation(k), out))
}

/// Batyrev presentation of `F_kappa`; `kappa` must be even.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_batyrev_presentation_new(kappa: u32, out: *mut *mut HzPresentation) -> HzStatus {
    guard(|| new_presentation(|| batyrev_presentation(kappa), out))
}

/// # Safety
/// `p` must come from a `hz_*_presentation_new` call and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hz_presentation_free(p: *mut HzPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of completed rewrite rules.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hz_presentation_rule_count(p: *const HzPresentation) -> usize {
    p.as_ref().map_or(0, |p| p.inner.completed_rules.len())
}

/// Completed rules, one `lead -> tail` per line.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_presentation_rules(p: *const HzPresentation, out: *mut *mut c_char) -> HzStatus {
    guard(|| {
        require!(p, out);
        let text: String = (*p)
            .inner
            .completed_rules
            .iter()
            .map(|r| format!("{} -> {}\n", r.lead, r.tail))
            .collect();
        write_string(out, text)
    })
}

/// Normal form of an element given as a JSON term list
/// `[{"coeff": c, "z": [e1, e2, e3, e4], "q": [a, b]}, ...]`; the result uses
/// the same encoding.
///
/// # Safety
/// `p` must be a live handle, `terms_json` a nul-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_presentation_normal_form(
    p: *const HzPresentation,
    terms_json: *const c_char,
    out: *mut *mut c_char,
) -> HzStatus {
    guard(|| {
        require!(p, out);
        let json = try_status!(read_str(terms_json));
        let e = try_hz!(from_json_str(json));
        write_string(out, to_json_string(&(*p).inner.normal_form(&e)))
    })
}

/// `Φ^{(r,s)}_{0,m}(insertions..., gamma)` on `F_2k`. `insertions` is a
/// comma-separated symbol list (`Z1`..`Z4`, `pt`, `1`, `X^n`), `gamma` is
/// `"1"` or `"pt"`.
///
/// # Safety
/// String arguments must be nul-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_f2k_invariant(
    k: u32,
    r: i64,
    s: i64,
    insertions: *const c_char,
    gamma: *const c_char,
    out: *mut i64,
) -> HzStatus {
    guard(|| {
        require!(out);
        let symbols = try_hz!(parse_symbols(try_status!(read_str(insertions))));
        let gamma: Gamma = try_hz!(try_status!(read_str(gamma)).parse());
        let classes = symbols.iter().map(|x| x.class(2 * k)).collect();
        let q = InvariantQuery::new(k, CurveClass::new(r, s), classes, gamma);
        *out = try_hz!(f2k_invariant(&q));
        HzStatus::Ok
    })
}

/// Product of the comma-separated `factors` on `F_kappa`, written as JSON
/// terms. `Qh` gives the quantum product in the classical basis (the
/// monomial `Z1*Z4` is the point class) and needs at least two factors;
/// `Qh` and `Batyrev` need even `kappa`.
///
/// # Safety
/// `factors` must be nul-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_product(
    ring: HzRing,
    kappa: u32,
    factors: *const c_char,
    out: *mut *mut c_char,
) -> HzStatus {
    guard(|| {
        require!(out);
        let symbols = try_hz!(parse_symbols(try_status!(read_str(factors))));
        let classes: Vec<CohomologyElement> = symbols.iter().map(|x| x.class(kappa)).collect();
        if ring != HzRing::Classical && !kappa.is_multiple_of(2) {
            return from_error(Error::OddKappa(kappa));
        }
        let e: QuantumElement = match ring {
            HzRing::Classical => classes
                .iter()
                .fold(CohomologyElement::one(), |acc, c| acc.product(c, kappa))
                .to_polynomial(),
            HzRing::Qh => try_hz!(m_fold_quantum_product(kappa / 2, &classes)).into_element(),
            HzRing::Batyrev => try_hz!(batyrev_product(kappa, &classes)),
        };
        write_string(out, to_json_string(&e))
    })
}
