use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use deza_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(deza_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn graph6(g: *const DezaGraph) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { deza_graph_to_graph6(g, &mut s) }, DezaStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { deza_string_free(s) };
    out
}

fn spectrum_pairs(g: *const DezaGraph) -> Vec<(i64, usize)> {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { deza_spectrum(g, &mut s) }, DezaStatus::Ok);
    let out = (0..unsafe { deza_spectrum_len(s) })
        .map(|i| {
            let mut e = DezaSpectrumEntry::default();
            assert_eq!(unsafe { deza_spectrum_entry(s, i, &mut e) }, DezaStatus::Ok);
            assert!(e.certified);
            (e.exact, e.multiplicity)
        })
        .collect();
    unsafe { deza_spectrum_free(s) };
    out
}

#[test]
fn graph6_round_trip_and_recognition() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { deza_graph_lattice(3, &mut g) }, DezaStatus::Ok);
    assert_eq!(unsafe { deza_graph_order(g) }, 9);
    assert!(unsafe { deza_graph_has_edge(g, 0, 1) });
    assert!(!unsafe { deza_graph_has_edge(g, 0, 4) });
    assert!(!unsafe { deza_graph_has_edge(g, 0, 99) });
    let text = CString::new(graph6(g)).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { deza_graph_from_graph6(text.as_ptr(), &mut h) }, DezaStatus::Ok);
    let mut iso = false;
    assert_eq!(unsafe { deza_is_isomorphic(g, h, &mut iso) }, DezaStatus::Ok);
    assert!(iso);
    let mut srg = DezaSrgParameters::default();
    let mut is_srg = false;
    assert_eq!(unsafe { deza_recognize_srg(g, &mut srg, &mut is_srg) }, DezaStatus::Ok);
    assert!(is_srg);
    assert_eq!((srg.n, srg.k, srg.lambda, srg.mu, srg.f, srg.g), (9, 4, 1, 2, 4, 4));
    assert_eq!(spectrum_pairs(g), vec![(4, 1), (1, 4), (-2, 4)]);
    unsafe {
        deza_graph_free(g);
        deza_graph_free(h);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { deza_graph_lattice(1, &mut g) }, DezaStatus::InvalidParameter);
    assert!(g.is_null());
    assert!(last_error().contains("m >= 2"));
    let bad = CString::new("A").unwrap();
    assert_eq!(unsafe { deza_graph_from_graph6(bad.as_ptr(), &mut g) }, DezaStatus::Parse);
    assert_eq!(unsafe { deza_graph_from_graph6(ptr::null(), &mut g) }, DezaStatus::NullPointer);
    assert_eq!(unsafe { deza_graph_lattice(3, ptr::null_mut()) }, DezaStatus::NullPointer);
    let mut p = DezaParameters::default();
    assert_eq!(unsafe { deza_recognize_deza(ptr::null(), &mut p) }, DezaStatus::NullPointer);
    let image = [0usize, 0, 1];
    let mut perm = ptr::null_mut();
    assert_eq!(unsafe { deza_permutation_new(image.as_ptr(), 3, &mut perm) }, DezaStatus::InvalidArgument);
    assert_eq!(unsafe { deza_graph_lattice(3, &mut g) }, DezaStatus::Ok);
    assert!(last_error().is_empty());
    unsafe { deza_graph_free(g) };
    unsafe { deza_graph_free(ptr::null_mut()) };
}

#[test]
fn switchings_through_the_c_interface() {
    let mut l4 = ptr::null_mut();
    assert_eq!(unsafe { deza_graph_lattice(4, &mut l4) }, DezaStatus::Ok);
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { deza_seidel_search(l4, true, 0, &mut w) }, DezaStatus::Ok);
    let mut fpf = false;
    assert_eq!(unsafe { deza_is_seidel_automorphism(l4, w, true, &mut fpf) }, DezaStatus::Ok);
    assert!(fpf);
    let mut image = vec![0usize; unsafe { deza_permutation_len(w) }];
    assert_eq!(unsafe { deza_permutation_image(w, image.as_mut_ptr(), image.len()) }, DezaStatus::Ok);
    assert!(image.iter().enumerate().all(|(v, &x)| x != v && image[x] == v));

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { deza_dual_seidel_switch(l4, w, &mut out) }, DezaStatus::PreconditionViolation);
    assert!(last_error().contains("lambda = mu"));
    let mut p = DezaParameters::default();
    assert_eq!(unsafe { deza_add_permutation(l4, w, &mut out) }, DezaStatus::Ok);
    assert_eq!(unsafe { deza_recognize_deza(out, &mut p) }, DezaStatus::Ok);
    assert_eq!((p.n, p.k, p.b, p.a), (16, 7, 4, 2));
    unsafe { deza_graph_free(out) };
    assert_eq!(unsafe { deza_permutation_shift(l4, w, &mut out) }, DezaStatus::Ok);
    assert_eq!(unsafe { deza_recognize_deza(out, &mut p) }, DezaStatus::Ok);
    assert_eq!((p.n, p.k, p.b, p.a), (16, 7, 4, 2));
    unsafe { deza_graph_free(out) };

    let mut none = ptr::null_mut();
    assert_eq!(unsafe { deza_seidel_search(l4, true, 1_000_000, &mut none) }, DezaStatus::NotFound);
    unsafe {
        deza_permutation_free(w);
        deza_graph_free(l4);
    }
}

#[test]
fn generalised_switching_on_triangular_7() {
    let mut t7 = ptr::null_mut();
    assert_eq!(unsafe { deza_graph_triangular(7, &mut t7) }, DezaStatus::Ok);
    // {a + 1, b + 4} for a, b in 0..3, as vertex indices of T(7)
    let index = |i: usize, j: usize| (i - 1) * 7 - (i - 1) * i / 2 + (j - i - 1);
    let subset: Vec<usize> = (0..9).map(|v| index(v / 3 + 1, v % 3 + 4)).collect();
    let transpose = [0usize, 3, 6, 1, 4, 7, 2, 5, 8];
    let mut p11 = ptr::null_mut();
    assert_eq!(unsafe { deza_permutation_new(transpose.as_ptr(), 9, &mut p11) }, DezaStatus::Ok);
    let mut n1 = ptr::null_mut();
    let status = unsafe {
        deza_gdss_switch(t7, subset.as_ptr(), 9, p11, DezaVariant::N1, DezaGdssMode::Gdss1, &mut n1)
    };
    assert_eq!(status, DezaStatus::Ok, "{}", last_error());
    let mut p = DezaParameters::default();
    assert_eq!(unsafe { deza_recognize_deza(n1, &mut p) }, DezaStatus::Ok);
    assert_eq!((p.n, p.k, p.b, p.a), (21, 10, 5, 4));
    assert_eq!(spectrum_pairs(n1), vec![(10, 1), (3, 4), (2, 3), (-2, 11), (-3, 2)]);
    let mut strict = false;
    assert_eq!(unsafe { deza_is_strictly_deza(n1, &mut strict) }, DezaStatus::Ok);
    assert!(strict);
    let mut canon = ptr::null_mut();
    assert_eq!(unsafe { deza_canonical_graph6(n1, &mut canon) }, DezaStatus::Ok);
    assert!(!unsafe { CStr::from_ptr(canon) }.to_bytes().is_empty());
    unsafe {
        deza_string_free(canon);
        deza_graph_free(n1);
        deza_permutation_free(p11);
        deza_graph_free(t7);
    }
}

fn compiler() -> Option<String> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .map(str::to_string)
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping header check");
        return;
    };
    let header = manifest_dir().join("include/deza.h");
    for lang in ["c", "c++"] {
        let out = Command::new(&cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg(&header)
            .output()
            .unwrap();
        assert!(out.status.success(), "{lang}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

/// Static library built next to this test binary, when cargo produced one.
fn static_library() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libdeza_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let (Some(cc), Some(lib)) = (compiler(), static_library()) else {
        eprintln!("no C compiler or static library; skipping link check");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let out = Command::new(&cc)
        .arg(manifest_dir().join("examples/smoke.c"))
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(Path::new(&exe)).output().unwrap();
    assert!(run.status.success());
    assert_eq!(
        String::from_utf8_lossy(&run.stdout).trim(),
        "(21,10,5,4) 10^1 3^4 2^3 -2^11 -3^2"
    );
}
