use std::ffi::{CStr, CString};
use std::ptr;

use corebuilder_ffi::*;

unsafe fn last_error() -> String {
    CStr::from_ptr(cb_last_error()).to_string_lossy().into_owned()
}

unsafe fn path4() -> *mut CbGraph {
    let edges = [0usize, 1, 1, 2, 2, 3];
    let mut g = ptr::null_mut();
    assert_eq!(cb_graph_from_edges(4, edges.as_ptr(), 3, &mut g), CbStatus::Ok);
    g
}

#[test]
fn solve_and_read_the_answer() {
    unsafe {
        let g = path4();
        assert_eq!(cb_graph_vertex_count(g), 4);
        assert_eq!(cb_graph_edge_count(g), 3);
        let mut size = 9;
        assert_eq!(cb_k_core_size(g, 1, &mut size), CbStatus::Ok);
        assert_eq!(size, 4);
        assert_eq!(cb_k_core_size(g, 2, &mut size), CbStatus::Ok);
        assert_eq!(size, 0);

        for algo in [CB_ALGO_AUTO, CB_ALGO_FOREST, CB_ALGO_TREEWIDTH, CB_ALGO_VC, CB_ALGO_ORACLE] {
            let mut a = ptr::null_mut();
            assert_eq!(cb_solve(g, 2, 1, 4, algo, &mut a), CbStatus::Ok);
            assert!(cb_answer_feasible(a));
            assert_eq!(cb_answer_edge_count(a), 1);
            assert_eq!(cb_answer_core_size(a), 4);
            let mut buf = [0usize; 2];
            assert_eq!(cb_answer_edges(a, buf.as_mut_ptr(), 2), CbStatus::Ok);
            assert_eq!(buf, [0, 3]);
            assert_eq!(cb_answer_edges(a, buf.as_mut_ptr(), 1), CbStatus::InvalidInput);
            let mut valid = false;
            assert_eq!(cb_verify(g, 2, 1, 4, buf.as_ptr(), 1, &mut valid), CbStatus::Ok);
            assert!(valid);
            cb_answer_free(a);

            let mut a = ptr::null_mut();
            assert_eq!(cb_solve(g, 2, 0, 4, algo, &mut a), CbStatus::Ok);
            assert!(!cb_answer_feasible(a));
            assert_eq!(cb_answer_edge_count(a), 0);
            assert_eq!(cb_answer_edges(a, ptr::null_mut(), 0), CbStatus::Ok);
            cb_answer_free(a);
        }
        cb_graph_free(g);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut g = ptr::null_mut();
        let edges = [0usize, 1, 1, 0];
        assert_eq!(cb_graph_from_edges(2, edges.as_ptr(), 2, &mut g), CbStatus::InvalidInput);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        let text = CString::new("p edge 3 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(cb_graph_parse(text.as_ptr(), &mut g), CbStatus::Parse);
        assert!(last_error().contains("line 3"), "{}", last_error());

        let text = CString::new("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(cb_graph_parse(text.as_ptr(), &mut g), CbStatus::Ok);
        let mut a = ptr::null_mut();
        assert_eq!(cb_solve(g, 2, 1, 3, 42, &mut a), CbStatus::InvalidInput);
        assert!(last_error().contains("unknown algorithm"));
        assert_eq!(cb_solve(ptr::null(), 2, 1, 3, CB_ALGO_AUTO, &mut a), CbStatus::NullPointer);
        assert_eq!(cb_solve(g, 2, 1, 3, CB_ALGO_FOREST, &mut a), CbStatus::InvalidInput);

        let mut valid = true;
        let bad = [0usize, 1];
        assert_eq!(cb_verify(g, 2, 1, 3, bad.as_ptr(), 1, &mut valid), CbStatus::Ok);
        assert!(!valid);
        assert!(last_error().contains("edge 1 2 already present"), "{}", last_error());
        assert_eq!(cb_verify(g, 2, 0, 3, ptr::null(), 0, &mut valid), CbStatus::Ok);
        assert!(valid);
        cb_graph_free(g);
        cb_graph_free(ptr::null_mut());
        cb_answer_free(ptr::null_mut());
    }
}

#[test]
fn erdos_gallai_over_the_abi() {
    unsafe {
        let mut out = false;
        let d = [3usize, 3, 3, 3];
        assert_eq!(cb_erdos_gallai(d.as_ptr(), 4, &mut out), CbStatus::Ok);
        assert!(out);
        let d = [3usize, 3, 3, 1];
        assert_eq!(cb_erdos_gallai(d.as_ptr(), 4, &mut out), CbStatus::Ok);
        assert!(!out);
        let d = [1usize, 2];
        assert_eq!(cb_erdos_gallai(d.as_ptr(), 2, &mut out), CbStatus::InvalidInput);
        assert_eq!(cb_erdos_gallai(ptr::null(), 0, &mut out), CbStatus::Ok);
        assert!(out);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/corebuilder.h")).unwrap();
    for needle in [
        "#ifndef COREBUILDER_H",
        "typedef struct CbGraph CbGraph;",
        "typedef struct CbAnswer CbAnswer;",
        "CB_STATUS_OK = 0",
        "CB_STATUS_PANIC = 8",
        "#define CB_ALGO_VC 3",
        "const char *cb_last_error(void);",
        "CbStatus cb_graph_from_edges(size_t n, const size_t *edges, size_t m, CbGraph **out);",
        "CbStatus cb_graph_parse(const char *text, CbGraph **out);",
        "void cb_graph_free(CbGraph *graph);",
        "CbStatus cb_k_core_size(const CbGraph *graph, size_t k, size_t *out);",
        "CbAnswer **out);",
        "bool cb_answer_feasible(const CbAnswer *answer);",
        "CbStatus cb_answer_edges(const CbAnswer *answer, size_t *buf, size_t capacity);",
        "CbStatus cb_erdos_gallai(const size_t *degrees, size_t len, bool *out);",
        "cb_verify(",
    ] {
        assert!(header.contains(needle), "header lacks `{needle}`:\n{header}");
    }
}

#[test]
fn header_compiles_as_c() {
    let src = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("use_header.c");
    std::fs::write(
        &src,
        "#include \"corebuilder.h\"\nint main(void) { CbGraph *g = 0; size_t e[2] = {0, 1};\n  return cb_graph_from_edges(2, e, 1, &g) == CB_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", concat!(env!("CARGO_MANIFEST_DIR"), "/include")])
        .arg(&src)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success());
}
