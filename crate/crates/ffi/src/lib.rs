//! C interface to the `deza` library.
//!
//! Objects are opaque handles created by `deza_*` constructors and released
//! with the matching `*_free` function. Every fallible call returns a
//! [`DezaStatus`]; on failure [`deza_last_error_message`] describes the error
//! for the calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use deza::classify::{is_strictly_deza, recognize_deza, recognize_srg};
use deza::families::{clebsch_16_10, lattice_graph, rook_2xm, triangular_graph};
use deza::graph6::{from_graph6, to_graph6};
use deza::iso::{canonical_form, is_isomorphic};
use deza::spectra::spectrum;
use deza::switching::{
    find_seidel_automorphisms, is_seidel_automorphism, Construction, GdssMode, Variant,
};
use deza::{induced_embedding, Error, Graph, Permutation};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DezaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    InvalidArgument = 3,
    Parse = 4,
    Overflow = 5,
    NotRegular = 6,
    NotConnected = 7,
    MoreThanTwoValues = 8,
    ChildrenUndefined = 9,
    PreconditionViolation = 10,
    Construction = 11,
    InternalInconsistency = 12,
    UnsupportedSize = 13,
    NotFound = 14,
    Panic = 15,
    Other = 16,
}

/// Selects the generalised switching block condition.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DezaGdssMode {
    /// Strongly regular parent, `P11 M12 M22 = M12 M22`.
    Gdss1 = 1,
    /// Deza parent with strongly regular children, `P11 M11 M12 = M11 M12`.
    Gdss2 = 2,
}

/// Selects which switched matrix is returned.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DezaVariant {
    N1 = 1,
    N2 = 2,
}

/// A simple undirected graph.
pub struct DezaGraph(Graph);

/// A permutation of `{0, .., n - 1}`.
pub struct DezaPermutation(Permutation);

/// Distinct eigenvalues with multiplicities.
pub struct DezaSpectrum(Vec<DezaSpectrumEntry>);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DezaParameters {
    pub n: usize,
    pub k: usize,
    pub b: usize,
    pub a: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DezaSrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
    pub r: f64,
    pub s: f64,
    pub f: usize,
    pub g: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DezaSpectrumEntry {
    pub value: f64,
    /// True when `value` is an integer whose multiplicity was certified exactly.
    pub certified: bool,
    pub exact: i64,
    pub multiplicity: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> DezaStatus {
    match e {
        Error::InvalidParameter(_) => DezaStatus::InvalidParameter,
        Error::InvalidSubset(_) | Error::InvalidArgument(_) => DezaStatus::InvalidArgument,
        Error::Parse { .. } => DezaStatus::Parse,
        Error::Overflow => DezaStatus::Overflow,
        Error::NotRegular => DezaStatus::NotRegular,
        Error::NotConnected => DezaStatus::NotConnected,
        Error::MoreThanTwoValues(_) => DezaStatus::MoreThanTwoValues,
        Error::ChildrenUndefined => DezaStatus::ChildrenUndefined,
        Error::PreconditionViolation(_) => DezaStatus::PreconditionViolation,
        Error::Construction(_) => DezaStatus::Construction,
        Error::InternalInconsistency(_) | Error::CertificationConflict { .. } => {
            DezaStatus::InternalInconsistency
        }
        Error::UnsupportedSize { .. } => DezaStatus::UnsupportedSize,
        _ => DezaStatus::Other,
    }
}

struct Fail(DezaStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(DezaStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics to a status and the thread's error message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> DezaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            DezaStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            DezaStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_graph(out: *mut *mut DezaGraph, g: Graph) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(DezaGraph(g))), "out")
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(DezaStatus::Other, "string contains nul".into()))?;
    put(out, c.into_raw(), "out")
}

unsafe fn slice<'a>(p: *const usize, len: usize, what: &str) -> Result<&'a [usize], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

/// Message describing the last failed call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn deza_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn deza_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_lattice(m: usize, out: *mut *mut DezaGraph) -> DezaStatus {
    guard(|| put_graph(out, lattice_graph(m)?))
}

/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_triangular(n: usize, out: *mut *mut DezaGraph) -> DezaStatus {
    guard(|| put_graph(out, triangular_graph(n)?))
}

/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_rook_2xm(m: usize, out: *mut *mut DezaGraph) -> DezaStatus {
    guard(|| put_graph(out, rook_2xm(m)?))
}

/// The strongly regular graph `(16, 10, 6, 6)`.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_clebsch_16_10(out: *mut *mut DezaGraph) -> DezaStatus {
    guard(|| put_graph(out, clebsch_16_10()))
}

/// Parses a nul-terminated graph6 string.
///
/// # Safety
/// `text` must be a valid C string and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_from_graph6(text: *const c_char, out: *mut *mut DezaGraph) -> DezaStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        put_graph(out, from_graph6(CStr::from_ptr(text).to_bytes())?)
    })
}

/// Writes a newly allocated graph6 string; release it with `deza_string_free`.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_to_graph6(g: *const DezaGraph, out: *mut *mut c_char) -> DezaStatus {
    guard(|| put_string(out, to_graph6(&get(g, "graph")?.0)))
}

/// # Safety
/// `g` must be null or a graph handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_free(g: *mut DezaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_order(g: *const DezaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// False for a null handle or out-of-range vertices.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_has_edge(g: *const DezaGraph, u: usize, v: usize) -> bool {
    g.as_ref()
        .is_some_and(|g| u < g.0.n() && v < g.0.n() && g.0.has_edge(u, v))
}

/// # Safety
/// `g` must be a live graph handle and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_graph_complement(g: *const DezaGraph, out: *mut *mut DezaGraph) -> DezaStatus {
    guard(|| put_graph(out, get(g, "graph")?.0.complement()))
}

/// Fails with a recognition status when the graph is not a Deza graph.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn deza_recognize_deza(g: *const DezaGraph, out: *mut DezaParameters) -> DezaStatus {
    guard(|| {
        let p = recognize_deza(&get(g, "graph")?.0)?;
        put(out, DezaParameters { n: p.n, k: p.k, b: p.b, a: p.a }, "out")
    })
}

/// Sets `*is_srg`; `out` is written only when the graph is strongly regular.
///
/// # Safety
/// `g` must be a live graph handle; `out` and `is_srg` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn deza_recognize_srg(
    g: *const DezaGraph,
    out: *mut DezaSrgParameters,
    is_srg: *mut bool,
) -> DezaStatus {
    guard(|| {
        let found = recognize_srg(&get(g, "graph")?.0);
        if let Some(p) = found {
            let srg = DezaSrgParameters {
                n: p.n,
                k: p.k,
                lambda: p.lambda,
                mu: p.mu,
                r: p.r.value,
                s: p.s.value,
                f: p.f,
                g: p.g,
            };
            put(out, srg, "out")?;
        }
        put(is_srg, found.is_some(), "is_srg")
    })
}

/// # Safety
/// `g` must be a live graph handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn deza_is_strictly_deza(g: *const DezaGraph, out: *mut bool) -> DezaStatus {
    guard(|| put(out, is_strictly_deza(&get(g, "graph")?.0), "out"))
}

/// # Safety
/// `image` must point to `len` readable values and `out` be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_permutation_new(
    image: *const usize,
    len: usize,
    out: *mut *mut DezaPermutation,
) -> DezaStatus {
    guard(|| {
        let p = Permutation::new(slice(image, len, "image")?.to_vec())?;
        put(out, Box::into_raw(Box::new(DezaPermutation(p))), "out")
    })
}

/// # Safety
/// `p` must be null or a permutation handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn deza_permutation_free(p: *mut DezaPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Length of the permutation, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live permutation handle.
#[no_mangle]
pub unsafe extern "C" fn deza_permutation_len(p: *const DezaPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies the image array into `buf`, which must hold `len` entries with
/// `len` equal to the permutation length.
///
/// # Safety
/// `p` must be a live permutation handle and `buf` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn deza_permutation_image(p: *const DezaPermutation, buf: *mut usize, len: usize) -> DezaStatus {
    guard(|| {
        let p = get(p, "permutation")?;
        if len != p.0.len() {
            return Err(Fail(
                DezaStatus::InvalidArgument,
                format!("buffer holds {len} entries, permutation has {}", p.0.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(p.0.image().as_ptr(), buf, len);
        Ok(())
    })
}

/// # Safety
/// `g` and `p` must be live handles and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn deza_is_seidel_automorphism(
    g: *const DezaGraph,
    p: *const DezaPermutation,
    require_fpf: bool,
    out: *mut bool,
) -> DezaStatus {
    guard(|| {
        let found = is_seidel_automorphism(&get(g, "graph")?.0, &get(p, "permutation")?.0, require_fpf);
        put(out, found.is_some(), "out")
    })
}

/// The `index`-th Seidel automorphism in search order; `DEZA_STATUS_NOT_FOUND` past the end.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_seidel_search(
    g: *const DezaGraph,
    require_fpf: bool,
    index: usize,
    out: *mut *mut DezaPermutation,
) -> DezaStatus {
    guard(|| {
        let found = find_seidel_automorphisms(&get(g, "graph")?.0, require_fpf, index.saturating_add(1));
        let w = found
            .into_iter()
            .nth(index)
            .ok_or_else(|| Fail(DezaStatus::NotFound, format!("no Seidel automorphism #{index}")))?;
        put(out, Box::into_raw(Box::new(DezaPermutation(w.perm))), "out")
    })
}

unsafe fn run(c: Construction, out: *mut *mut DezaGraph) -> Result<(), Fail> {
    let (g, _) = c.run()?;
    put_graph(out, g)
}

/// Dual Seidel switching: the graph of `P M`.
///
/// # Safety
/// `g` and `p` must be live handles and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_dual_seidel_switch(
    g: *const DezaGraph,
    p: *const DezaPermutation,
    out: *mut *mut DezaGraph,
) -> DezaStatus {
    guard(|| {
        let c = Construction::DualSeidel {
            parent: get(g, "graph")?.0.clone(),
            perm: get(p, "permutation")?.0.clone(),
        };
        run(c, out)
    })
}

/// Generalised switching on the induced subgraph on `subset` (in that order),
/// with `p11` acting on subset positions.
///
/// # Safety
/// `g` and `p11` must be live handles, `subset` readable for `t` entries and
/// `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_gdss_switch(
    g: *const DezaGraph,
    subset: *const usize,
    t: usize,
    p11: *const DezaPermutation,
    variant: DezaVariant,
    mode: DezaGdssMode,
    out: *mut *mut DezaGraph,
) -> DezaStatus {
    guard(|| {
        let embedding = induced_embedding(&get(g, "graph")?.0, slice(subset, t, "subset")?)?;
        let c = Construction::Gdss {
            embedding,
            p11: get(p11, "permutation")?.0.clone(),
            variant: match variant {
                DezaVariant::N1 => Variant::N1,
                DezaVariant::N2 => Variant::N2,
            },
            mode: match mode {
                DezaGdssMode::Gdss1 => GdssMode::Gdss1,
                DezaGdssMode::Gdss2 => GdssMode::Gdss2,
            },
        };
        run(c, out)
    })
}

/// The graph of `M + P`.
///
/// # Safety
/// `g` and `p` must be live handles and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_add_permutation(
    g: *const DezaGraph,
    p: *const DezaPermutation,
    out: *mut *mut DezaGraph,
) -> DezaStatus {
    guard(|| {
        let c = Construction::AddPermutation {
            parent: get(g, "graph")?.0.clone(),
            perm: get(p, "permutation")?.0.clone(),
        };
        run(c, out)
    })
}

/// The graph of `P (M + I)`.
///
/// # Safety
/// `g` and `p` must be live handles and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_permutation_shift(
    g: *const DezaGraph,
    p: *const DezaPermutation,
    out: *mut *mut DezaGraph,
) -> DezaStatus {
    guard(|| {
        let c = Construction::PermutationShift {
            parent: get(g, "graph")?.0.clone(),
            perm: get(p, "permutation")?.0.clone(),
        };
        run(c, out)
    })
}

/// # Safety
/// `g` must be a live graph handle and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_spectrum(g: *const DezaGraph, out: *mut *mut DezaSpectrum) -> DezaStatus {
    guard(|| {
        let s = spectrum(&get(g, "graph")?.0)?;
        let entries = s
            .entries()
            .iter()
            .map(|e| DezaSpectrumEntry {
                value: e.value,
                certified: e.exact.is_some(),
                exact: e.exact.unwrap_or(0),
                multiplicity: e.multiplicity,
            })
            .collect();
        put(out, Box::into_raw(Box::new(DezaSpectrum(entries))), "out")
    })
}

/// Number of distinct eigenvalues, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn deza_spectrum_len(s: *const DezaSpectrum) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Entries are in decreasing order of eigenvalue.
///
/// # Safety
/// `s` must be a live spectrum handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn deza_spectrum_entry(s: *const DezaSpectrum, i: usize, out: *mut DezaSpectrumEntry) -> DezaStatus {
    guard(|| {
        let s = get(s, "spectrum")?;
        let e = s.0.get(i).copied().ok_or_else(|| {
            Fail(DezaStatus::InvalidArgument, format!("index {i} out of range 0..{}", s.0.len()))
        })?;
        put(out, e, "out")
    })
}

/// # Safety
/// `s` must be null or a spectrum handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn deza_spectrum_free(s: *mut DezaSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Canonical graph6 string; release it with `deza_string_free`.
///
/// # Safety
/// `g` must be a live graph handle and `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn deza_canonical_graph6(g: *const DezaGraph, out: *mut *mut c_char) -> DezaStatus {
    guard(|| put_string(out, canonical_form(&get(g, "graph")?.0)?.graph6))
}

/// # Safety
/// `g1` and `g2` must be live graph handles and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn deza_is_isomorphic(g1: *const DezaGraph, g2: *const DezaGraph, out: *mut bool) -> DezaStatus {
    guard(|| put(out, is_isomorphic(&get(g1, "graph")?.0, &get(g2, "graph")?.0)?, "out"))
}
