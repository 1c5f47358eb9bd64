//! C ABI over `cobweb-core`.
//!
//! Conventions:
//! - Every fallible function returns a [`CobwebStatus`]; results are written
//!   through out-pointers only on [`CobwebStatus::Ok`].
//! - Matrices and chains are opaque handles owned by the caller and released
//!   with [`cobweb_matrix_free`] / [`cobweb_chain_free`].
//! - Strings returned through `char **` are NUL-terminated, owned by the
//!   caller, and released with [`cobweb_string_free`].
//! - After a non-OK status, [`cobweb_last_error_message`] describes the
//!   failure for the calling thread.
//! - Panics never cross the boundary; they are reported as
//!   [`CobwebStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cobweb_core::counting::{
    fubini, multinomial, relations_of_type, relations_total, stirling2, surjection_count,
    CompositionType,
};
use cobweb_core::ferrers::{ferrers_dimension, is_ferrers_dim1, min_completion_to_ferrers};
use cobweb_core::{BigCount, BoolMatrix, Error, LevelSequence};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CobwebStatus {
    Ok = 0,
    NullPointer = 1,
    Shape = 2,
    Argument = 3,
    Bounds = 4,
    JoinCondition = 5,
    Size = 6,
    Parse = 7,
    Utf8 = 8,
    Panic = 9,
}

/// Opaque Boolean matrix handle.
pub struct CobwebMatrix(BoolMatrix);

/// Opaque cobweb chain handle.
pub struct CobwebChain(cobweb_core::CobwebChain);

/// Rows `r1 < r2` and columns `c1 < c2` of a 2×2 permutation submatrix.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CobwebWitness {
    pub r1: usize,
    pub r2: usize,
    pub c1: usize,
    pub c2: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(CobwebStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Shape(_) => CobwebStatus::Shape,
            Error::Argument(_) => CobwebStatus::Argument,
            Error::Bounds(_) => CobwebStatus::Bounds,
            Error::JoinCondition { .. } => CobwebStatus::JoinCondition,
            Error::Size(_) => CobwebStatus::Size,
            Error::Parse { .. } => CobwebStatus::Parse,
        };
        Failure(status, e.to_string())
    }
}

type FfiResult<T = ()> = Result<T, Failure>;

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> FfiResult) -> CobwebStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body))
        .unwrap_or_else(|_| Err(Failure(CobwebStatus::Panic, "internal panic".into())));
    match outcome {
        Ok(()) => {
            set_last_error("");
            CobwebStatus::Ok
        }
        Err(Failure(status, message)) => {
            set_last_error(&message);
            status
        }
    }
}

fn null(name: &str) -> Failure {
    Failure(CobwebStatus::NullPointer, format!("{name} is null"))
}

unsafe fn deref<'a, T>(p: *const T, name: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn deref_mut<'a, T>(p: *mut T, name: &str) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or_else(|| null(name))
}

unsafe fn write<T>(out: *mut T, value: T, name: &str) -> FfiResult {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(CobwebStatus::Utf8, format!("{name}: {e}")))
}

unsafe fn read_slice<'a>(p: *const usize, len: usize, name: &str) -> FfiResult<&'a [usize]> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(name));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_string(out: *mut *mut c_char, s: String, name: &str) -> FfiResult {
    let c = CString::new(s).map_err(|e| Failure(CobwebStatus::Utf8, e.to_string()))?;
    write(out, c.into_raw(), name)
}

unsafe fn write_matrix(out: *mut *mut CobwebMatrix, m: BoolMatrix) -> FfiResult {
    write(out, Box::into_raw(Box::new(CobwebMatrix(m))), "out")
}

unsafe fn write_chain(out: *mut *mut CobwebChain, c: cobweb_core::CobwebChain) -> FfiResult {
    write(out, Box::into_raw(Box::new(CobwebChain(c))), "out")
}

unsafe fn write_count(out: *mut *mut c_char, v: BigCount) -> FfiResult {
    write_string(out, v.to_string(), "out")
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the
/// same thread. Do not free it.
#[no_mangle]
pub extern "C" fn cobweb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cobweb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------- matrices

/// Creates a `rows × cols` zero matrix.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_new(
    rows: usize,
    cols: usize,
    out: *mut *mut CobwebMatrix,
) -> CobwebStatus {
    guard(|| write_matrix(out, BoolMatrix::zeros(rows, cols)?))
}

/// Parses the matrix text format (`R C` header, then `R` lines of `0`/`1`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_parse(
    text: *const c_char,
    out: *mut *mut CobwebMatrix,
) -> CobwebStatus {
    guard(|| write_matrix(out, BoolMatrix::parse_text(read_str(text, "text")?)?))
}

/// Releases a matrix. Null is ignored.
///
/// # Safety
/// `m` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_free(m: *mut CobwebMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Row count, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_rows(m: *const CobwebMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Column count, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_cols(m: *const CobwebMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_get(
    m: *const CobwebMatrix,
    row: usize,
    col: usize,
    out: *mut bool,
) -> CobwebStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        write(out, m.0.try_get(row, col)?, "out")
    })
}

/// # Safety
/// `m` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_set(
    m: *mut CobwebMatrix,
    row: usize,
    col: usize,
    value: bool,
) -> CobwebStatus {
    guard(|| {
        let m = deref_mut(m, "matrix")?;
        m.0.try_get(row, col)?;
        m.0.set(row, col, value);
        Ok(())
    })
}

/// Renders the matrix text format into a new string.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_to_text(
    m: *const CobwebMatrix,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_string(out, deref(m, "matrix")?.0.to_text(), "out"))
}

/// Reflexive-transitive closure (Boolean geometric series) of a square matrix.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_closure(
    m: *const CobwebMatrix,
    out: *mut *mut CobwebMatrix,
) -> CobwebStatus {
    guard(|| write_matrix(out, deref(m, "matrix")?.0.boolean_geometric_series()?))
}

/// Ferrers dimension 1 test. When the matrix is not Ferrers and `witness`
/// is non-null, a forbidden 2×2 submatrix is written there.
///
/// # Safety
/// `m` must be a live handle; `is_ferrers` must be valid for writes;
/// `witness` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_is_ferrers(
    m: *const CobwebMatrix,
    is_ferrers: *mut bool,
    witness: *mut CobwebWitness,
) -> CobwebStatus {
    guard(|| {
        let report = is_ferrers_dim1(&deref(m, "matrix")?.0);
        write(is_ferrers, report.is_dim1, "is_ferrers")?;
        if let (Some(w), false) = (report.witness, witness.is_null()) {
            witness.write(CobwebWitness {
                r1: w.r1,
                r2: w.r2,
                c1: w.c1,
                c2: w.c2,
            });
        }
        Ok(())
    })
}

/// Ferrers dimension, searched up to `max_d`. Writes 0 when the dimension
/// exceeds `max_d`. Matrices above 12 cells yield `COBWEB_STATUS_SIZE`.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_ferrers_dimension(
    m: *const CobwebMatrix,
    max_d: usize,
    out: *mut usize,
) -> CobwebStatus {
    guard(|| {
        let d = ferrers_dimension(&deref(m, "matrix")?.0, max_d)?;
        write(out, d.unwrap_or(0), "out")
    })
}

/// Fewest 0→1 flips making the matrix Ferrers. Writes the flip count and,
/// if `completed` is non-null, the completed matrix.
///
/// # Safety
/// `m` must be a live handle; `count` must be valid for writes; `completed`
/// must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_matrix_min_completion(
    m: *const CobwebMatrix,
    count: *mut usize,
    completed: *mut *mut CobwebMatrix,
) -> CobwebStatus {
    guard(|| {
        let c = min_completion_to_ferrers(&deref(m, "matrix")?.0)?;
        write(count, c.count, "count")?;
        if !completed.is_null() {
            write_matrix(completed, c.completed)?;
        }
        Ok(())
    })
}

// ------------------------------------------------------------------ chains

/// Chain with all-ones blocks over the `len` level sizes in `sizes`.
///
/// # Safety
/// `sizes` must point to `len` readable values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_complete(
    sizes: *const usize,
    len: usize,
    out: *mut *mut CobwebChain,
) -> CobwebStatus {
    guard(|| {
        let levels = LevelSequence::new(read_slice(sizes, len, "sizes")?.to_vec())?;
        write_chain(out, cobweb_core::complete_chain(&levels)?)
    })
}

/// Parses the chain text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_parse(
    text: *const c_char,
    out: *mut *mut CobwebChain,
) -> CobwebStatus {
    guard(|| {
        write_chain(
            out,
            cobweb_core::CobwebChain::parse_text(read_str(text, "text")?)?,
        )
    })
}

/// Releases a chain. Null is ignored.
///
/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_free(c: *mut CobwebChain) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_vertex_count(c: *const CobwebChain) -> usize {
    c.as_ref().map_or(0, |c| c.0.vertex_count())
}

/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_to_text(
    c: *const CobwebChain,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_string(out, deref(c, "chain")?.0.to_text(), "out"))
}

/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_zeta(
    c: *const CobwebChain,
    out: *mut *mut CobwebMatrix,
) -> CobwebStatus {
    guard(|| write_matrix(out, deref(c, "chain")?.0.zeta_matrix()))
}

/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_adjacency(
    c: *const CobwebChain,
    out: *mut *mut CobwebMatrix,
) -> CobwebStatus {
    guard(|| write_matrix(out, deref(c, "chain")?.0.adjacency_matrix()))
}

/// Block-diagonal biadjacency matrix; single-level chains are rejected.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_biadjacency(
    c: *const CobwebChain,
    out: *mut *mut CobwebMatrix,
) -> CobwebStatus {
    guard(|| write_matrix(out, deref(c, "chain")?.0.biadjacency_diag()?))
}

/// Natural join of `a` followed by `b` into a new chain.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_join(
    a: *const CobwebChain,
    b: *const CobwebChain,
    out: *mut *mut CobwebChain,
) -> CobwebStatus {
    guard(|| write_chain(out, deref(a, "a")?.0.natural_join(&deref(b, "b")?.0)?))
}

/// New chain with arc `(row, col)` of block `block` removed.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_delete_arc(
    c: *const CobwebChain,
    block: usize,
    row: usize,
    col: usize,
    out: *mut *mut CobwebChain,
) -> CobwebStatus {
    guard(|| {
        let arcs = [(row, col)].into_iter().collect();
        write_chain(out, deref(c, "chain")?.0.delete_arcs(block, &arcs)?)
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_is_complete(
    c: *const CobwebChain,
    out: *mut bool,
) -> CobwebStatus {
    guard(|| write(out, deref(c, "chain")?.0.is_complete(), "out"))
}

/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_chain_is_cobweb(
    c: *const CobwebChain,
    out: *mut bool,
) -> CobwebStatus {
    guard(|| write(out, deref(c, "chain")?.0.is_cobweb(), "out"))
}

// ---------------------------------------------------------------- counting
//
// Counts are exact and returned as decimal strings.

unsafe fn composition(parts: *const usize, len: usize) -> FfiResult<CompositionType> {
    Ok(CompositionType::new(
        read_slice(parts, len, "parts")?.to_vec(),
    )?)
}

/// Complete cobwebs of type `parts` on `n` vertices (a multinomial).
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_count_cobweb_type(
    n: usize,
    parts: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_count(out, multinomial(n, &composition(parts, len)?)?))
}

/// Complete cobwebs on `n` vertices with `k` levels, `k!·S(n,k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_count_cobweb_k(
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_count(out, surjection_count(n, k)))
}

/// All complete cobwebs on `n` vertices (the Fubini number).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_count_cobweb_total(
    n: usize,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_count(out, fubini(n)))
}

/// Non-empty relations between consecutive levels of type `parts`.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_count_relations_type(
    parts: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_count(out, relations_of_type(&composition(parts, len)?)?))
}

/// Sum of the relations count over every type of `n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_count_relations_total(
    n: usize,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_count(out, relations_total(n)?))
}

/// Stirling number of the second kind `S(n,k)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cobweb_count_stirling2(
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> CobwebStatus {
    guard(|| write_count(out, stirling2(n, k)))
}
