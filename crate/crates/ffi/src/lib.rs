//! C ABI for `ulrich-core`.
//!
//! Every fallible function returns an [`UlrichStatus`] and writes its result
//! through an out-pointer, which is left untouched on failure. The message
//! for the last failure on the calling thread is available from
//! [`ulrich_last_error`]. Handles and strings returned by this library must
//! be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ulrich_core::families::FamilyId;
use ulrich_core::geometry::{
    bundle_rank, bwb_cohomology, flag_degree, is_ulrich_via_bwb, CohomologyAnswer,
    PolarizationWeights, SchurWeight,
};
use ulrich_core::search::{enumerate_ulrich, Limits, SearchMode, SearchReport, SearchSpec};
use ulrich_core::{is_ulrich, BlockedPartition, Error, FlagType};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UlrichStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    NotDualizable = 5,
    Family = 6,
    Search = 7,
    OutOfRange = 8,
    Panic = 9,
}

/// A blocked partition.
pub struct UlrichPartition(BlockedPartition);

/// The outcome of an enumeration.
pub struct UlrichReport(SearchReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> UlrichStatus {
    match e {
        Error::Parse { .. } => UlrichStatus::Parse,
        Error::NotDualizable(_) => UlrichStatus::NotDualizable,
        Error::FamilyParams { .. } | Error::UnknownFamily(_) => UlrichStatus::Family,
        Error::Search(_) => UlrichStatus::Search,
        _ => UlrichStatus::InvalidInput,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), UlrichStatus>) -> UlrichStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => UlrichStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            UlrichStatus::Panic
        }
    }
}

fn fail(e: Error) -> UlrichStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(what: &str) -> UlrichStatus {
    set_error(format!("{what} is null"));
    UlrichStatus::NullArgument
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, UlrichStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        UlrichStatus::InvalidUtf8
    })
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, UlrichStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), UlrichStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), UlrichStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("string contains a nul byte");
        UlrichStatus::InvalidInput
    })?;
    put(out, c.into_raw())
}

unsafe fn put_partition(out: *mut *mut UlrichPartition, p: BlockedPartition) -> Result<(), UlrichStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(UlrichPartition(p))));
    Ok(())
}

/// Message for the last failure on this thread; empty if none. Valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn ulrich_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ulrich_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ulrich_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a partition such as `"5|3,-1,-2,-4|-5"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_parse(
    text: *const c_char,
    out: *mut *mut UlrichPartition,
) -> UlrichStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        let p: BlockedPartition = s.parse().map_err(fail)?;
        put_partition(out, p)
    })
}

/// Builds from entries and block lengths.
///
/// # Safety
/// `entries` must point to `sum(lengths)` values and `lengths` to
/// `num_blocks` values.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_new(
    lengths: *const usize,
    num_blocks: usize,
    entries: *const i64,
    num_entries: usize,
    out: *mut *mut UlrichPartition,
) -> UlrichStatus {
    guard(|| {
        if lengths.is_null() || entries.is_null() {
            return Err(null("lengths or entries"));
        }
        let lengths = std::slice::from_raw_parts(lengths, num_blocks).to_vec();
        let entries = std::slice::from_raw_parts(entries, num_entries).to_vec();
        let t = FlagType::new(lengths).map_err(fail)?;
        put_partition(out, BlockedPartition::new(t, entries).map_err(fail)?)
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_free(p: *mut UlrichPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes the `a|b|c` form; release with [`ulrich_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_to_string(
    p: *const UlrichPartition,
    out: *mut *mut c_char,
) -> UlrichStatus {
    guard(|| put_string(out, handle(p, "partition")?.0.to_string()))
}

/// `N`, the sum of `l_i l_j` over pairs of blocks.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_dimension(p: *const UlrichPartition, out: *mut u64) -> UlrichStatus {
    guard(|| put(out, handle(p, "partition")?.0.dimension()))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_len(p: *const UlrichPartition, out: *mut usize) -> UlrichStatus {
    guard(|| put(out, handle(p, "partition")?.0.entries().len()))
}

/// Copies the entries into `buf`, which must hold at least
/// `ulrich_partition_len` values.
///
/// # Safety
/// `p` must be a live handle; `buf` must be writable for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_entries(
    p: *const UlrichPartition,
    buf: *mut i64,
    cap: usize,
) -> UlrichStatus {
    guard(|| {
        let e = handle(p, "partition")?.0.entries();
        if buf.is_null() {
            return Err(null("buf"));
        }
        if cap < e.len() {
            set_error(format!("buffer holds {cap} entries, {} needed", e.len()));
            return Err(UlrichStatus::OutOfRange);
        }
        ptr::copy_nonoverlapping(e.as_ptr(), buf, e.len());
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_is_ulrich(p: *const UlrichPartition, out: *mut bool) -> UlrichStatus {
    guard(|| put(out, is_ulrich(&handle(p, "partition")?.0).is_ulrich))
}

/// Translate so the last entry is 0.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_canonicalize(
    p: *const UlrichPartition,
    out: *mut *mut UlrichPartition,
) -> UlrichStatus {
    guard(|| put_partition(out, handle(p, "partition")?.0.canonicalize()))
}

/// Negate and reverse; the type is reversed.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_symmetric(
    p: *const UlrichPartition,
    out: *mut *mut UlrichPartition,
) -> UlrichStatus {
    guard(|| put_partition(out, handle(p, "partition")?.0.symmetric()))
}

/// Fails with `NotDualizable` when some pair has not met by time `N + 1`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_partition_dual(
    p: *const UlrichPartition,
    out: *mut *mut UlrichPartition,
) -> UlrichStatus {
    guard(|| {
        let d = handle(p, "partition")?.0.dual().map_err(fail)?;
        put_partition(out, d)
    })
}

/// Builds a family member, e.g. `("elongated", "1,2")`.
///
/// # Safety
/// `name` and `params` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_family_build(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut UlrichPartition,
) -> UlrichStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let params = if params.is_null() { "" } else { read_str(params, "params")? };
        let id = FamilyId::parse(name, params).map_err(fail)?;
        put_partition(out, id.build().map_err(fail)?)
    })
}

/// Enumerates the Ulrich classes of a type by time-branching search.
/// `budget_seconds <= 0` means no limit; a capped run still succeeds and
/// reports `exhausted = false`.
///
/// # Safety
/// `lengths` must point to `num_blocks` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_enumerate(
    lengths: *const usize,
    num_blocks: usize,
    budget_seconds: f64,
    out: *mut *mut UlrichReport,
) -> UlrichStatus {
    guard(|| {
        if lengths.is_null() {
            return Err(null("lengths"));
        }
        let t = FlagType::new(std::slice::from_raw_parts(lengths, num_blocks).to_vec()).map_err(fail)?;
        let limits = if budget_seconds > 0.0 {
            Limits::seconds(budget_seconds)
        } else {
            Limits::unlimited()
        };
        let r = enumerate_ulrich(&SearchSpec::new(t, SearchMode::TimeBranching).with_limits(limits))
            .map_err(fail)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        out.write(Box::into_raw(Box::new(UlrichReport(r))));
        Ok(())
    })
}

/// # Safety
/// `r` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ulrich_report_free(r: *mut UlrichReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_report_count(r: *const UlrichReport, out: *mut usize) -> UlrichStatus {
    guard(|| put(out, handle(r, "report")?.0.count))
}

/// Whether the report is a complete classification.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_report_exhausted(r: *const UlrichReport, out: *mut bool) -> UlrichStatus {
    guard(|| put(out, handle(r, "report")?.0.exhausted))
}

/// A copy of class `index` (canonical form, sorted order).
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_report_class(
    r: *const UlrichReport,
    index: usize,
    out: *mut *mut UlrichPartition,
) -> UlrichStatus {
    guard(|| {
        let r = &handle(r, "report")?.0;
        let p = r.classes.get(index).cloned().ok_or_else(|| {
            set_error(format!("class {index} requested, report has {}", r.count));
            UlrichStatus::OutOfRange
        })?;
        put_partition(out, p)
    })
}

unsafe fn weight(lambda: *const c_char) -> Result<SchurWeight, UlrichStatus> {
    SchurWeight::parse(read_str(lambda, "lambda")?).map_err(fail)
}

/// `rk E_λ` in decimal; release with [`ulrich_string_free`].
///
/// # Safety
/// `lambda` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_bundle_rank(lambda: *const c_char, out: *mut *mut c_char) -> UlrichStatus {
    guard(|| put_string(out, bundle_rank(&weight(lambda)?).to_string()))
}

/// `h^0(E_λ)` in decimal; release with [`ulrich_string_free`].
///
/// # Safety
/// `lambda` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_h0(lambda: *const c_char, out: *mut *mut c_char) -> UlrichStatus {
    guard(|| {
        let h0 = match bwb_cohomology(&weight(lambda)?, 0) {
            CohomologyAnswer::Nonzero { q: 0, dim, .. } => dim.to_string(),
            _ => "0".to_string(),
        };
        put_string(out, h0)
    })
}

/// Cohomology of `E_λ(-t)`: writes the degree `q` (or -1 if everything
/// vanishes) and the dimension in decimal (`"0"` if everything vanishes).
///
/// # Safety
/// `lambda` must be a nul-terminated string; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_cohomology(
    lambda: *const c_char,
    twist: i64,
    q_out: *mut i64,
    dim_out: *mut *mut c_char,
) -> UlrichStatus {
    guard(|| {
        let (q, dim) = match bwb_cohomology(&weight(lambda)?, twist) {
            CohomologyAnswer::Vanishes => (-1, "0".to_string()),
            CohomologyAnswer::Nonzero { q, dim, .. } => (q as i64, dim.to_string()),
        };
        if q_out.is_null() {
            return Err(null("q_out"));
        }
        put_string(dim_out, dim)?;
        q_out.write(q);
        Ok(())
    })
}

/// Ulrich test through Borel-Weil-Bott vanishing.
///
/// # Safety
/// `lambda` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_is_ulrich_via_bwb(lambda: *const c_char, out: *mut bool) -> UlrichStatus {
    guard(|| put(out, is_ulrich_via_bwb(&weight(lambda)?)))
}

/// Degree of `F(k_1, ..., k_r; n)` under the polarization with weights
/// `a` (all ones when `a` is null), in decimal.
///
/// # Safety
/// `ks` must point to `r` values and `a`, if non-null, to `r` values;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ulrich_flag_degree(
    ks: *const usize,
    r: usize,
    n: usize,
    a: *const u64,
    out: *mut *mut c_char,
) -> UlrichStatus {
    guard(|| {
        if ks.is_null() {
            return Err(null("ks"));
        }
        let t = FlagType::from_flag(std::slice::from_raw_parts(ks, r), n).map_err(fail)?;
        let w = if a.is_null() {
            PolarizationWeights::ones(r)
        } else {
            PolarizationWeights::new(std::slice::from_raw_parts(a, r).to_vec()).map_err(fail)?
        };
        put_string(out, flag_degree(&t, &w).map_err(fail)?.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn panics_become_a_status() {
        assert_eq!(guard(|| panic!("boom")), UlrichStatus::Panic);
        assert_eq!(unsafe { CStr::from_ptr(ulrich_last_error()) }.to_str().unwrap(), "internal panic");
    }

    #[test]
    fn errors_map_to_codes() {
        let e: Error = "3|x".parse::<BlockedPartition>().unwrap_err();
        assert_eq!(fail(e), UlrichStatus::Parse);
        assert_eq!(guard(|| unsafe { put::<i32>(ptr::null_mut(), 1) }), UlrichStatus::NullArgument);
    }
}
