//! C ABI over `twobridge`.
//!
//! Knots are opaque `TbKnot` handles created by `tb_knot_new` / `tb_knot_parse`
//! and released with `tb_knot_free`. Every fallible call returns a `TbStatus`;
//! on failure `tb_last_error` holds a message for the calling thread.
//! Rationals cross the boundary as reduced `(num, den)` pairs with `den > 0`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twobridge::{KnotData, KnotSpec, Rational, Slope, Strictness, TwoBridgeKnot};

/// Result code of every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Inapplicable = 3,
    BufferTooSmall = 4,
    Overflow = 5,
    Internal = 6,
}

/// Opaque knot handle.
pub struct TbKnot {
    data: KnotData,
    label: CString,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TbRational {
    pub num: i64,
    pub den: i64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TbSurface {
    pub boundary_slope: i64,
    /// Twice the surface's weight in the seminorm.
    pub doubled_weight: u64,
    pub is_seifert: bool,
}

/// 0 = no, 1 = yes, 2 = unknown.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TbStrictness {
    No = 0,
    Yes = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TbCasson {
    pub value: TbRational,
    pub seminorm_value: TbRational,
    pub correction: TbRational,
    pub is_boundary_slope: bool,
    pub strictness: TbStrictness,
    pub alexander_ok: bool,
    pub admissible: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).unwrap_or_default());
}

struct Fail(TbStatus, String);

impl From<twobridge::Error> for Fail {
    fn from(e: twobridge::Error) -> Self {
        Fail(TbStatus::InvalidArgument, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TbStatus::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            TbStatus::Internal
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(TbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn knot_ref<'a>(k: *const TbKnot) -> Result<&'a TbKnot, Fail> {
    k.as_ref().ok_or_else(|| null("knot"))
}

unsafe fn out_mut<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

fn to_c(r: &Rational) -> Result<TbRational, Fail> {
    r.to_i64_pair()
        .map(|(num, den)| TbRational { num, den })
        .ok_or_else(|| Fail(TbStatus::Overflow, format!("{r} does not fit in 64 bits")))
}

fn make(knot: TwoBridgeKnot, label: String) -> *mut TbKnot {
    let label = CString::new(label).unwrap_or_default();
    Box::into_raw(Box::new(TbKnot { data: KnotData::new(knot), label }))
}

/// Fill `buf` (capacity `cap`) and report the full length in `len`.
unsafe fn fill<T: Copy>(items: &[T], buf: *mut T, cap: usize, len: *mut usize) -> Result<(), Fail> {
    *out_mut(len, "len")? = items.len();
    if items.is_empty() {
        return Ok(());
    }
    if cap < items.len() {
        return Err(Fail(TbStatus::BufferTooSmall, format!("need {} entries, have {cap}", items.len())));
    }
    if buf.is_null() {
        return Err(null("buffer"));
    }
    ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len());
    Ok(())
}

/// Build K(alpha, beta). Rejects even alpha, non-coprime pairs and the unknot.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_new(alpha: i64, beta: i64, out: *mut *mut TbKnot) -> TbStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        let k = TwoBridgeKnot::normalize(alpha, beta)?;
        *out = make(k, k.to_string());
        Ok(())
    })
}

/// Parse `K(a,b)` or `J(l,m)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_parse(spec: *const c_char, out: *mut *mut TbKnot) -> TbStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        if spec.is_null() {
            return Err(null("spec"));
        }
        let text = CStr::from_ptr(spec)
            .to_str()
            .map_err(|_| Fail(TbStatus::InvalidArgument, "spec is not UTF-8".into()))?;
        let parsed: KnotSpec = text.parse()?;
        *out = make(parsed.knot()?, parsed.to_string());
        Ok(())
    })
}

/// # Safety
/// `k` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_free(k: *mut TbKnot) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// # Safety
/// `k` must be a live handle; out pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_alpha_beta(k: *const TbKnot, alpha: *mut i64, beta: *mut i64) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        *out_mut(alpha, "alpha")? = k.data.knot.alpha();
        *out_mut(beta, "beta")? = k.data.knot.beta();
        Ok(())
    })
}

/// The text the handle was created from, normalized (`K(7,3)`, `J(2,-3)`).
/// Owned by the handle.
///
/// # Safety
/// `k` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tb_knot_label(k: *const TbKnot) -> *const c_char {
    k.as_ref().map_or(ptr::null(), |k| k.label.as_ptr())
}

/// Number of essential surfaces (branched-surface expansions).
///
/// # Safety
/// `k` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn tb_surface_count(k: *const TbKnot) -> usize {
    k.as_ref().map_or(0, |k| k.data.surfaces.len())
}

/// # Safety
/// `k` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_surface_get(k: *const TbKnot, index: usize, out: *mut TbSurface) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        let out = out_mut(out, "out")?;
        let s = k.data.surfaces.get(index).ok_or_else(|| {
            Fail(TbStatus::InvalidArgument, format!("surface index {index} out of range"))
        })?;
        *out = TbSurface { boundary_slope: s.boundary_slope, doubled_weight: s.doubled_weight, is_seifert: s.is_seifert };
        Ok(())
    })
}

/// Seminorm ‖p/q‖ on a reduced slope.
///
/// # Safety
/// `k` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_seminorm(k: *const TbKnot, p: i64, q: i64, out: *mut TbRational) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        let out = out_mut(out, "out")?;
        let s = Slope::new(p, q)?;
        *out = to_c(&k.data.table.eval(&s))?;
        Ok(())
    })
}

/// Casson invariant of the surgery at p/q. The report is always written;
/// the status is `Inapplicable` when the slope is not admissible and the
/// value is only the formula's output.
///
/// # Safety
/// `k` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_casson(k: *const TbKnot, p: i64, q: i64, out: *mut TbCasson) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        let out = out_mut(out, "out")?;
        let s = Slope::new(p, q)?;
        let r = k.data.casson(&s);
        let d = &r.diagnostics;
        *out = TbCasson {
            value: to_c(&r.value)?,
            seminorm_value: to_c(&r.seminorm_value)?,
            correction: to_c(&r.correction)?,
            is_boundary_slope: d.is_boundary_slope,
            strictness: match d.is_strict_boundary_slope {
                Strictness::No => TbStrictness::No,
                Strictness::Yes => TbStrictness::Yes,
                Strictness::Unknown => TbStrictness::Unknown,
            },
            alexander_ok: d.alexander_ok,
            admissible: d.admissible,
        };
        if r.applicable() {
            Ok(())
        } else {
            Err(Fail(TbStatus::Inapplicable, format!("slope {s} is not admissible for {}", k.data.knot)))
        }
    })
}

/// Growth rate λ′ of the Casson invariant along q → ∞.
///
/// # Safety
/// `k` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_lambda_prime(k: *const TbKnot, out: *mut TbRational) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        *out_mut(out, "out")? = to_c(&twobridge::lambda_prime(&k.data.knot))?;
        Ok(())
    })
}

/// M- and L-degrees of the Â-polynomial.
///
/// # Safety
/// `k` must be a live handle; out pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_ahat_degrees(k: *const TbKnot, deg_m: *mut u64, deg_l: *mut u64) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        let d = twobridge::apoly::ahat_degrees_from_table(&k.data.table);
        *out_mut(deg_m, "deg_m")? = d.deg_m;
        *out_mut(deg_l, "deg_l")? = d.deg_l;
        Ok(())
    })
}

/// Alexander polynomial coefficients, constant term first. `len` always
/// receives the full length; a short buffer yields `BufferTooSmall`.
///
/// # Safety
/// `buf` must hold `cap` entries; `len` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_alexander(k: *const TbKnot, buf: *mut i64, cap: usize, len: *mut usize) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        let coeffs = k
            .data
            .alexander
            .delta
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| Fail(TbStatus::Overflow, format!("coefficient {c} overflows"))))
            .collect::<Result<Vec<_>, _>>()?;
        fill(&coeffs, buf, cap, len)
    })
}

/// Exceptional integral slopes where the Casson formula may vanish,
/// ascending. Buffer protocol as for `tb_alexander`.
///
/// # Safety
/// `buf` must hold `cap` entries; `len` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tb_exceptional_slopes(k: *const TbKnot, buf: *mut i64, cap: usize, len: *mut usize) -> TbStatus {
    guard(|| {
        let k = knot_ref(k)?;
        let e: Vec<i64> = twobridge::exceptional_slopes(&k.data.knot).into_iter().collect();
        fill(&e, buf, cap, len)
    })
}

/// Message for the last failed call on this thread ("" after a success).
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn tb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn tb_status_str(s: TbStatus) -> *const c_char {
    let m: &'static CStr = match s {
        TbStatus::Ok => c"ok",
        TbStatus::NullPointer => c"null pointer",
        TbStatus::InvalidArgument => c"invalid argument",
        TbStatus::Inapplicable => c"inapplicable",
        TbStatus::BufferTooSmall => c"buffer too small",
        TbStatus::Overflow => c"overflow",
        TbStatus::Internal => c"internal error",
    };
    m.as_ptr()
}
