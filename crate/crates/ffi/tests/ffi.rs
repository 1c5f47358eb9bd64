use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cobweb_core::counting::{fubini, relations_total};
use cobweb_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cobweb_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cobweb_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn parse_matrix(text: &str) -> *mut CobwebMatrix {
    let c = CString::new(text).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_matrix_parse(c.as_ptr(), &mut m) },
        CobwebStatus::Ok
    );
    m
}

fn matrix_text(m: *const CobwebMatrix) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_matrix_to_text(m, &mut s) },
        CobwebStatus::Ok
    );
    take_string(s)
}

fn complete(sizes: &[usize]) -> *mut CobwebChain {
    let mut c = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_chain_complete(sizes.as_ptr(), sizes.len(), &mut c) },
        CobwebStatus::Ok
    );
    c
}

#[test]
fn matrix_lifecycle() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(cobweb_matrix_new(2, 3, &mut m), CobwebStatus::Ok);
        assert_eq!((cobweb_matrix_rows(m), cobweb_matrix_cols(m)), (2, 3));
        assert_eq!(cobweb_matrix_set(m, 1, 2, true), CobwebStatus::Ok);
        let mut v = false;
        assert_eq!(cobweb_matrix_get(m, 1, 2, &mut v), CobwebStatus::Ok);
        assert!(v);
        assert_eq!(matrix_text(m), "2 3\n000\n001\n");
        assert_eq!(cobweb_matrix_get(m, 2, 0, &mut v), CobwebStatus::Bounds);
        assert!(!last_error().is_empty());
        assert_eq!(cobweb_matrix_set(m, 0, 3, true), CobwebStatus::Bounds);
        cobweb_matrix_free(m);
    }
}

#[test]
fn zero_dimension_is_rejected() {
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_matrix_new(0, 3, &mut m) },
        CobwebStatus::Shape
    );
    assert!(m.is_null());
}

#[test]
fn ferrers_analysis_of_crossed_block() {
    let m = parse_matrix("2 3\n101\n110\n");
    unsafe {
        let mut is = true;
        let mut w = CobwebWitness::default();
        assert_eq!(
            cobweb_matrix_is_ferrers(m, &mut is, &mut w),
            CobwebStatus::Ok
        );
        assert!(!is);
        assert_eq!(
            w,
            CobwebWitness {
                r1: 0,
                r2: 1,
                c1: 1,
                c2: 2
            }
        );

        let mut d = 0;
        assert_eq!(
            cobweb_matrix_ferrers_dimension(m, 4, &mut d),
            CobwebStatus::Ok
        );
        assert_eq!(d, 2);
        assert_eq!(
            cobweb_matrix_ferrers_dimension(m, 1, &mut d),
            CobwebStatus::Ok
        );
        assert_eq!(d, 0, "dimension above max_d is reported as 0");

        let mut count = 0;
        let mut done = ptr::null_mut();
        assert_eq!(
            cobweb_matrix_min_completion(m, &mut count, &mut done),
            CobwebStatus::Ok
        );
        assert_eq!(count, 1);
        assert_eq!(matrix_text(done), "2 3\n111\n110\n");
        cobweb_matrix_free(done);
        cobweb_matrix_free(m);
    }
}

#[test]
fn closure_requires_square() {
    let m = parse_matrix("2 3\n101\n110\n");
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_matrix_closure(m, &mut out) },
        CobwebStatus::Shape
    );
    unsafe { cobweb_matrix_free(m) };

    let a = parse_matrix("3 3\n010\n001\n000\n");
    assert_eq!(
        unsafe { cobweb_matrix_closure(a, &mut out) },
        CobwebStatus::Ok
    );
    assert_eq!(matrix_text(out), "3 3\n111\n011\n001\n");
    unsafe {
        cobweb_matrix_free(out);
        cobweb_matrix_free(a);
    }
}

#[test]
fn chain_operations() {
    let a = complete(&[2, 3]);
    let b = complete(&[3, 1]);
    unsafe {
        let mut joined = ptr::null_mut();
        assert_eq!(cobweb_chain_join(a, b, &mut joined), CobwebStatus::Ok);
        assert_eq!(cobweb_chain_vertex_count(joined), 6);

        let mut bad = ptr::null_mut();
        assert_eq!(
            cobweb_chain_join(b, a, &mut bad),
            CobwebStatus::JoinCondition
        );
        assert!(last_error().contains('1') && last_error().contains('2'));

        let mut cut = ptr::null_mut();
        assert_eq!(
            cobweb_chain_delete_arc(joined, 0, 0, 1, &mut cut),
            CobwebStatus::Ok
        );
        let (mut complete_flag, mut cobweb_flag) = (true, false);
        assert_eq!(
            cobweb_chain_is_complete(cut, &mut complete_flag),
            CobwebStatus::Ok
        );
        assert_eq!(
            cobweb_chain_is_cobweb(cut, &mut cobweb_flag),
            CobwebStatus::Ok
        );
        assert!(!complete_flag);
        // [[1,0,1],[1,1,1]] has nested row supports, so it is still Ferrers.
        assert!(cobweb_flag);

        let mut text = ptr::null_mut();
        assert_eq!(cobweb_chain_to_text(cut, &mut text), CobwebStatus::Ok);
        let text = take_string(text);
        assert_eq!(text, "3\n2 3 1\n2 3\n101\n111\n\n3 1\n1\n1\n1\n");

        let c = CString::new(text.clone()).unwrap();
        let mut parsed = ptr::null_mut();
        assert_eq!(
            cobweb_chain_parse(c.as_ptr(), &mut parsed),
            CobwebStatus::Ok
        );
        let mut again = ptr::null_mut();
        assert_eq!(cobweb_chain_to_text(parsed, &mut again), CobwebStatus::Ok);
        assert_eq!(take_string(again), text);

        let mut m = ptr::null_mut();
        assert_eq!(cobweb_chain_biadjacency(parsed, &mut m), CobwebStatus::Ok);
        assert_eq!((cobweb_matrix_rows(m), cobweb_matrix_cols(m)), (5, 4));
        cobweb_matrix_free(m);
        assert_eq!(cobweb_chain_adjacency(parsed, &mut m), CobwebStatus::Ok);
        assert_eq!(cobweb_matrix_rows(m), 6);
        cobweb_matrix_free(m);
        assert_eq!(cobweb_chain_zeta(parsed, &mut m), CobwebStatus::Ok);
        let mut leq = true;
        assert_eq!(cobweb_matrix_get(m, 0, 3, &mut leq), CobwebStatus::Ok);
        assert!(!leq, "arc (0,1) of the first block was deleted");
        cobweb_matrix_free(m);

        for c in [a, b, joined, cut, parsed] {
            cobweb_chain_free(c);
        }
    }
}

#[test]
fn single_level_chain_has_no_biadjacency() {
    let c = complete(&[3]);
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_chain_biadjacency(c, &mut m) },
        CobwebStatus::Argument
    );
    unsafe { cobweb_chain_free(c) };
}

#[test]
fn counts_are_decimal_strings() {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(cobweb_count_cobweb_total(3, &mut s), CobwebStatus::Ok);
        assert_eq!(take_string(s), "13");
        assert_eq!(cobweb_count_cobweb_k(4, 2, &mut s), CobwebStatus::Ok);
        assert_eq!(take_string(s), "14");
        let t = [1usize, 2];
        assert_eq!(
            cobweb_count_cobweb_type(3, t.as_ptr(), 2, &mut s),
            CobwebStatus::Ok
        );
        assert_eq!(take_string(s), "3");
        assert_eq!(
            cobweb_count_cobweb_type(4, t.as_ptr(), 2, &mut s),
            CobwebStatus::Argument
        );
        let t = [2usize, 2];
        assert_eq!(
            cobweb_count_relations_type(t.as_ptr(), 2, &mut s),
            CobwebStatus::Ok
        );
        assert_eq!(take_string(s), "15");
        for n in 1..=6 {
            assert_eq!(cobweb_count_relations_total(n, &mut s), CobwebStatus::Ok);
            assert_eq!(take_string(s), relations_total(n).unwrap().to_string());
            assert_eq!(cobweb_count_cobweb_total(n, &mut s), CobwebStatus::Ok);
            assert_eq!(take_string(s), fubini(n).to_string());
        }
        assert_eq!(cobweb_count_stirling2(5, 2, &mut s), CobwebStatus::Ok);
        assert_eq!(take_string(s), "15");
        assert_eq!(
            cobweb_count_relations_type(ptr::null(), 0, &mut s),
            CobwebStatus::Argument
        );
    }
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(
            cobweb_matrix_parse(ptr::null(), &mut m),
            CobwebStatus::NullPointer
        );
        assert_eq!(
            cobweb_matrix_new(1, 1, ptr::null_mut()),
            CobwebStatus::NullPointer
        );
        let mut v = false;
        assert_eq!(
            cobweb_matrix_get(ptr::null(), 0, 0, &mut v),
            CobwebStatus::NullPointer
        );
        assert_eq!(cobweb_matrix_rows(ptr::null()), 0);
        assert_eq!(cobweb_chain_vertex_count(ptr::null()), 0);
        cobweb_matrix_free(ptr::null_mut());
        cobweb_chain_free(ptr::null_mut());
        cobweb_string_free(ptr::null_mut());
    }
}

#[test]
fn parse_errors_and_invalid_utf8() {
    let bad = CString::new("2 2\n1x\n01\n").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_matrix_parse(bad.as_ptr(), &mut m) },
        CobwebStatus::Parse
    );
    assert!(last_error().contains("line"));
    let raw = CString::new(vec![0xffu8, 0xfe]).unwrap();
    assert_eq!(
        unsafe { cobweb_matrix_parse(raw.as_ptr(), &mut m) },
        CobwebStatus::Utf8
    );
}

#[test]
fn success_clears_last_error() {
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { cobweb_matrix_new(0, 0, &mut m) },
        CobwebStatus::Shape
    );
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { cobweb_matrix_new(1, 1, &mut m) }, CobwebStatus::Ok);
    assert!(last_error().is_empty());
    unsafe { cobweb_matrix_free(m) };
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cobweb.h")).unwrap();
    let source =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 25, "{exports:?}");
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    for ty in [
        "typedef struct CobwebMatrix CobwebMatrix;",
        "typedef struct CobwebChain CobwebChain;",
        "COBWEB_STATUS_JOIN_CONDITION = 5",
    ] {
        assert!(header.contains(ty), "{ty} missing from header");
    }
}
