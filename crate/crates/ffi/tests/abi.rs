use std::ffi::{CStr, CString};
use std::ptr;

use ulrich_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    ulrich_string_free(s);
    out
}

unsafe fn parse(s: &str) -> *mut UlrichPartition {
    let mut p = ptr::null_mut();
    assert_eq!(ulrich_partition_parse(c(s).as_ptr(), &mut p), UlrichStatus::Ok);
    p
}

unsafe fn render(p: *const UlrichPartition) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(ulrich_partition_to_string(p, &mut s), UlrichStatus::Ok);
    take_string(s)
}

#[test]
fn partition_round_trip() {
    unsafe {
        let p = parse("5|3,-1,-2,-4|-5");
        assert_eq!(render(p), "5|3,-1,-2,-4|-5");
        let mut len = 0;
        assert_eq!(ulrich_partition_len(p, &mut len), UlrichStatus::Ok);
        let mut buf = vec![0i64; len];
        assert_eq!(ulrich_partition_entries(p, buf.as_mut_ptr(), len), UlrichStatus::Ok);
        assert_eq!(buf, vec![5, 3, -1, -2, -4, -5]);
        assert_eq!(
            ulrich_partition_entries(p, buf.as_mut_ptr(), len - 1),
            UlrichStatus::OutOfRange
        );

        let mut canon = ptr::null_mut();
        assert_eq!(ulrich_partition_canonicalize(p, &mut canon), UlrichStatus::Ok);
        assert_eq!(render(canon), "10|8,4,3,1|0");
        let mut sym = ptr::null_mut();
        assert_eq!(ulrich_partition_symmetric(p, &mut sym), UlrichStatus::Ok);
        assert_eq!(render(sym), "5|4,2,1,-3|-5");
        ulrich_partition_free(canon);
        ulrich_partition_free(sym);
        ulrich_partition_free(p);
    }
}

#[test]
fn construct_from_arrays() {
    unsafe {
        let lengths = [1usize, 1, 1];
        let entries = [2i64, 1, -2];
        let mut p = ptr::null_mut();
        assert_eq!(
            ulrich_partition_new(lengths.as_ptr(), 3, entries.as_ptr(), 3, &mut p),
            UlrichStatus::Ok
        );
        let mut ok = false;
        assert_eq!(ulrich_partition_is_ulrich(p, &mut ok), UlrichStatus::Ok);
        assert!(ok);
        ulrich_partition_free(p);

        let short = [2i64, 1];
        let mut q = ptr::null_mut();
        assert_eq!(
            ulrich_partition_new(lengths.as_ptr(), 3, short.as_ptr(), 2, &mut q),
            UlrichStatus::InvalidInput
        );
        assert!(q.is_null());
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(ulrich_partition_parse(c("1,2|0").as_ptr(), &mut p), UlrichStatus::InvalidInput);
        assert!(p.is_null());
        let msg = CStr::from_ptr(ulrich_last_error()).to_str().unwrap();
        assert!(msg.contains("decreasing"), "{msg}");

        assert_eq!(ulrich_partition_parse(c("1,x|0").as_ptr(), &mut p), UlrichStatus::Parse);
        assert_eq!(ulrich_partition_parse(ptr::null(), &mut p), UlrichStatus::NullArgument);

        // A pair that has not met by N + 1 cannot be dualized.
        let q = parse("9|0");
        let mut d = ptr::null_mut();
        assert_eq!(ulrich_partition_dual(q, &mut d), UlrichStatus::NotDualizable);
        ulrich_partition_free(q);

        let mut f = ptr::null_mut();
        assert_eq!(
            ulrich_family_build(c("no-such-family").as_ptr(), ptr::null(), &mut f),
            UlrichStatus::Family
        );

        let mut n = 0u64;
        assert_eq!(ulrich_partition_dimension(ptr::null(), &mut n), UlrichStatus::NullArgument);
    }
}

#[test]
fn families_and_duality() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            ulrich_family_build(c("elongated").as_ptr(), c("1,2").as_ptr(), &mut p),
            UlrichStatus::Ok
        );
        assert_eq!(render(p), "12,8|7,6,1,-4,-5|-8");
        let mut d = ptr::null_mut();
        assert_eq!(ulrich_partition_dual(p, &mut d), UlrichStatus::Ok);
        let mut ok = false;
        assert_eq!(ulrich_partition_is_ulrich(d, &mut ok), UlrichStatus::Ok);
        assert!(ok);
        ulrich_partition_free(d);
        ulrich_partition_free(p);
    }
}

#[test]
fn enumeration_report() {
    unsafe {
        let t = [2usize, 2, 2];
        let mut r = ptr::null_mut();
        assert_eq!(ulrich_enumerate(t.as_ptr(), 3, 0.0, &mut r), UlrichStatus::Ok);
        let (mut count, mut done) = (0usize, false);
        assert_eq!(ulrich_report_count(r, &mut count), UlrichStatus::Ok);
        assert_eq!(ulrich_report_exhausted(r, &mut done), UlrichStatus::Ok);
        assert_eq!((count, done), (2, true));
        let mut p = ptr::null_mut();
        assert_eq!(ulrich_report_class(r, 0, &mut p), UlrichStatus::Ok);
        assert_eq!(render(p), "20,12|11,8|6,0");
        ulrich_partition_free(p);
        assert_eq!(ulrich_report_class(r, 2, &mut p), UlrichStatus::OutOfRange);
        ulrich_report_free(r);

        let bad = [1usize, 0, 1];
        assert_eq!(ulrich_enumerate(bad.as_ptr(), 3, 0.0, &mut r), UlrichStatus::InvalidInput);
    }
}

#[test]
fn geometry_numbers() {
    unsafe {
        let lam = c("6|5,2,2,1|1");
        let mut s = ptr::null_mut();
        assert_eq!(ulrich_bundle_rank(lam.as_ptr(), &mut s), UlrichStatus::Ok);
        assert_eq!(take_string(s), "70");
        assert_eq!(ulrich_h0(lam.as_ptr(), &mut s), UlrichStatus::Ok);
        assert_eq!(take_string(s), "17640");
        let ks = [1usize, 5];
        assert_eq!(ulrich_flag_degree(ks.as_ptr(), 2, 6, ptr::null(), &mut s), UlrichStatus::Ok);
        assert_eq!(take_string(s), "252");
        let mut ok = false;
        assert_eq!(ulrich_is_ulrich_via_bwb(lam.as_ptr(), &mut ok), UlrichStatus::Ok);
        assert!(ok);

        let mut q = 0i64;
        assert_eq!(ulrich_cohomology(lam.as_ptr(), 3, &mut q, &mut s), UlrichStatus::Ok);
        assert_eq!((q, take_string(s)), (-1, "0".to_string()));
        assert_eq!(ulrich_cohomology(c("-2|0").as_ptr(), 0, &mut q, &mut s), UlrichStatus::Ok);
        assert_eq!((q, take_string(s)), (1, "1".to_string()));

        let zero = [0u64, 1];
        assert_eq!(ulrich_flag_degree(ks.as_ptr(), 2, 6, zero.as_ptr(), &mut s), UlrichStatus::InvalidInput);
        let v = CStr::from_ptr(ulrich_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
