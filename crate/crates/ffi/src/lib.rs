//! C ABI for the clique partitioning toolkit.
//!
//! Conventions:
//! - Objects cross the boundary as opaque handles (`CpInstance`,
//!   `CpSolveReport`) created and freed by this library.
//! - Every fallible call returns a [`CpStatus`]; out-parameters are
//!   written only on `CP_STATUS_OK`. [`cp_last_error_message`] returns a
//!   thread-local description of the most recent failure.
//! - Strings are NUL-terminated UTF-8; weights and objective values are
//!   signed 64-bit integers.
//!
//! The `include/cliquepart.h` header is generated from this file at build
//! time.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use cliquepart::formulation::{build_constraints, count_constraints, total_triples};
use cliquepart::solver::{
    solve_bnb, solve_oracle, solve_vectors, verify_optimal_set_equality,
    verify_reduction_pipeline, SolveLimits, SolveMode, SolveStatus,
};
use cliquepart::{
    gen_modularity, gen_random, gen_sparse, gen_structured, EdgeVector, FormulationKind,
    Partition, Probability, WeightedInstance,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SizeCap = 4,
    IoError = 5,
    Utf8Error = 6,
    InternalPanic = 7,
}

/// Instance family selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpFamily {
    Random = 0,
    Sparse = 1,
    Structured = 2,
    Modularity = 3,
}

/// Formulation selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpKind {
    P = 0,
    Rp = 1,
    Mrp = 2,
    Cp = 3,
    Pcp = 4,
    Frp = 5,
    Pfrp = 6,
    Xfrp = 7,
}

impl From<CpKind> for FormulationKind {
    fn from(k: CpKind) -> FormulationKind {
        match k {
            CpKind::P => FormulationKind::P,
            CpKind::Rp => FormulationKind::Rp,
            CpKind::Mrp => FormulationKind::Mrp,
            CpKind::Cp => FormulationKind::Cp,
            CpKind::Pcp => FormulationKind::Pcp,
            CpKind::Frp => FormulationKind::Frp,
            CpKind::Pfrp => FormulationKind::Pfrp,
            CpKind::Xfrp => FormulationKind::Xfrp,
        }
    }
}

/// Solve engine selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpEngine {
    Oracle = 0,
    Vectors = 1,
    Bnb = 2,
}

/// Termination status of a solve.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpSolveStatus {
    Optimal = 0,
    NodeLimit = 1,
    TimeLimit = 2,
}

/// Opaque weighted instance handle.
pub struct CpInstance {
    inner: WeightedInstance,
}

/// Opaque solve outcome handle.
pub struct CpSolveReport {
    status: CpSolveStatus,
    objective: i64,
    value: i64,
    explored: u64,
    elapsed_secs: f64,
    raw_solution: EdgeVector,
    partition: Partition,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: CpStatus, msg: impl std::fmt::Display) -> CpStatus {
    let text = CString::new(msg.to_string()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
    status
}

fn fail_from(err: cliquepart::Error) -> CpStatus {
    let status = match &err {
        cliquepart::Error::Parse { .. } => CpStatus::ParseError,
        cliquepart::Error::SizeCap { .. } => CpStatus::SizeCap,
        cliquepart::Error::Io(_) => CpStatus::IoError,
        _ => CpStatus::InvalidArgument,
    };
    fail(status, err)
}

/// Description of the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn cp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn guard(body: impl FnOnce() -> CpStatus) -> CpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".to_string());
            fail(CpStatus::InternalPanic, msg)
        }
    }
}

/// # Safety
/// `ptr` must be non-null and valid for reads.
unsafe fn deref<'a, T>(ptr: *const T) -> Option<&'a T> {
    ptr.as_ref()
}

unsafe fn path_from(ptr: *const c_char) -> Result<std::path::PathBuf, CpStatus> {
    if ptr.is_null() {
        return Err(fail(CpStatus::NullPointer, "null path"));
    }
    match CStr::from_ptr(ptr).to_str() {
        Ok(s) => Ok(std::path::PathBuf::from(s)),
        Err(e) => Err(fail(CpStatus::Utf8Error, e)),
    }
}

fn put_instance(out: *mut *mut CpInstance, inst: WeightedInstance) -> CpStatus {
    if out.is_null() {
        return fail(CpStatus::NullPointer, "null out-parameter");
    }
    unsafe { *out = Box::into_raw(Box::new(CpInstance { inner: inst })) };
    CpStatus::Ok
}

/// Generates a random- or sparse-family instance (seeded, deterministic).
///
/// # Safety
/// `out` must be a valid pointer to a `CpInstance*` slot.
#[no_mangle]
pub unsafe extern "C" fn cp_generate(
    family: CpFamily,
    n: u32,
    seed: u64,
    out: *mut *mut CpInstance,
) -> CpStatus {
    guard(|| {
        let built = match family {
            CpFamily::Random => gen_random(n as usize, seed),
            CpFamily::Sparse => gen_sparse(n as usize, seed),
            CpFamily::Structured => {
                gen_structured(n as usize, 5, Probability::new(3, 4).unwrap(), seed)
            }
            CpFamily::Modularity => gen_modularity(n as usize, 2, seed),
        };
        match built {
            Ok(inst) => put_instance(out, inst),
            Err(e) => fail_from(e),
        }
    })
}

/// Generates a structured instance with explicit cluster count and exact
/// within-cluster +1 probability `p_num / p_den`.
///
/// # Safety
/// `out` must be a valid pointer to a `CpInstance*` slot.
#[no_mangle]
pub unsafe extern "C" fn cp_generate_structured(
    n: u32,
    k_clusters: u32,
    p_num: u32,
    p_den: u32,
    seed: u64,
    out: *mut *mut CpInstance,
) -> CpStatus {
    guard(|| {
        let p = match Probability::new(p_num, p_den) {
            Ok(p) => p,
            Err(e) => return fail_from(e),
        };
        match gen_structured(n as usize, k_clusters as usize, p, seed) {
            Ok(inst) => put_instance(out, inst),
            Err(e) => fail_from(e),
        }
    })
}

/// Generates a modularity instance from a preferential-attachment graph
/// with the given attachment parameter.
///
/// # Safety
/// `out` must be a valid pointer to a `CpInstance*` slot.
#[no_mangle]
pub unsafe extern "C" fn cp_generate_modularity(
    n: u32,
    ba_attach: u32,
    seed: u64,
    out: *mut *mut CpInstance,
) -> CpStatus {
    guard(|| match gen_modularity(n as usize, ba_attach as usize, seed) {
        Ok(inst) => put_instance(out, inst),
        Err(e) => fail_from(e),
    })
}

/// Builds a custom instance from `n(n-1)/2` weights in pair-lex order
/// ((0,1), (0,2), ..., (n-2,n-1)).
///
/// # Safety
/// `weights` must point to `len` readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cp_instance_from_weights(
    n: u32,
    weights: *const i64,
    len: usize,
    out: *mut *mut CpInstance,
) -> CpStatus {
    guard(|| {
        if weights.is_null() {
            return fail(CpStatus::NullPointer, "null weights");
        }
        let slice = std::slice::from_raw_parts(weights, len);
        match WeightedInstance::from_weights(n as usize, slice.to_vec()) {
            Ok(inst) => put_instance(out, inst),
            Err(e) => fail_from(e),
        }
    })
}

/// Reads an instance file in the native format.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cp_instance_read_file(
    path: *const c_char,
    out: *mut *mut CpInstance,
) -> CpStatus {
    guard(|| {
        let path = match path_from(path) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match cliquepart::fileio::read_instance_file(&path) {
            Ok(inst) => put_instance(out, inst),
            Err(e) => fail_from(e),
        }
    })
}

/// Writes the instance in the native byte-deterministic format.
///
/// # Safety
/// `inst` must be a live handle; `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn cp_instance_write_file(
    inst: *const CpInstance,
    path: *const c_char,
) -> CpStatus {
    guard(|| {
        let Some(inst) = deref(inst) else {
            return fail(CpStatus::NullPointer, "null instance");
        };
        let path = match path_from(path) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match cliquepart::fileio::write_instance_file(&inst.inner, &path) {
            Ok(_) => CpStatus::Ok,
            Err(e) => fail_from(e),
        }
    })
}

/// Releases an instance handle. Null is a no-op.
///
/// # Safety
/// `inst` must have been produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cp_instance_free(inst: *mut CpInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_instance_vertex_count(inst: *const CpInstance) -> u32 {
    deref(inst).map_or(0, |i| i.inner.n() as u32)
}

/// Weight of the unordered pair `{i,j}`.
///
/// # Safety
/// `inst` must be a live handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn cp_instance_weight(
    inst: *const CpInstance,
    i: u32,
    j: u32,
    out: *mut i64,
) -> CpStatus {
    guard(|| {
        let Some(inst) = deref(inst) else {
            return fail(CpStatus::NullPointer, "null instance");
        };
        if out.is_null() {
            return fail(CpStatus::NullPointer, "null out-parameter");
        }
        let n = inst.inner.n() as u32;
        if i == j || i >= n || j >= n {
            return fail(CpStatus::InvalidArgument, format!("invalid pair ({i},{j}) for n={n}"));
        }
        *out = inst.inner.weight(i as usize, j as usize);
        CpStatus::Ok
    })
}

/// Number of transitivity constraints the kind keeps on this instance.
///
/// # Safety
/// `inst` must be a live handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn cp_count_constraints(
    inst: *const CpInstance,
    kind: CpKind,
    out: *mut u64,
) -> CpStatus {
    guard(|| {
        let Some(inst) = deref(inst) else {
            return fail(CpStatus::NullPointer, "null instance");
        };
        if out.is_null() {
            return fail(CpStatus::NullPointer, "null out-parameter");
        }
        *out = count_constraints(&inst.inner, kind.into()) as u64;
        CpStatus::Ok
    })
}

/// Total orientation count `n(n-1)(n-2)/2` for `n >= 3`.
///
/// # Safety
/// `out` must be a valid slot.
#[no_mangle]
pub unsafe extern "C" fn cp_total_triples(n: u32, out: *mut u64) -> CpStatus {
    guard(|| {
        if out.is_null() {
            return fail(CpStatus::NullPointer, "null out-parameter");
        }
        match total_triples(n as usize) {
            Ok(t) => {
                *out = t;
                CpStatus::Ok
            }
            Err(e) => fail_from(e),
        }
    })
}

/// Writes the kind's LP model (CPLEX dialect) to `path`.
///
/// # Safety
/// `inst` must be a live handle; `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn cp_write_lp_file(
    inst: *const CpInstance,
    kind: CpKind,
    path: *const c_char,
) -> CpStatus {
    guard(|| {
        let Some(inst) = deref(inst) else {
            return fail(CpStatus::NullPointer, "null instance");
        };
        let path = match path_from(path) {
            Ok(p) => p,
            Err(status) => return status,
        };
        let cs = build_constraints(&inst.inner, kind.into());
        match std::fs::write(&path, cliquepart::export::write_lp_string(&cs)) {
            Ok(()) => CpStatus::Ok,
            Err(e) => fail(CpStatus::IoError, e),
        }
    })
}

/// Solves the instance. `node_limit` / `time_limit_ms` of 0 mean
/// unlimited (branch-and-bound only). The report's `value` is the
/// original-scale objective of the repaired (transitively closed) best
/// solution; `objective` is in the engine's own scale.
///
/// # Safety
/// `inst` must be a live handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn cp_solve(
    inst: *const CpInstance,
    engine: CpEngine,
    kind: CpKind,
    node_limit: u64,
    time_limit_ms: u64,
    out: *mut *mut CpSolveReport,
) -> CpStatus {
    guard(|| {
        let Some(inst) = deref(inst) else {
            return fail(CpStatus::NullPointer, "null instance");
        };
        if out.is_null() {
            return fail(CpStatus::NullPointer, "null out-parameter");
        }
        let report = match engine {
            CpEngine::Oracle => solve_oracle(&inst.inner, SolveMode::One),
            CpEngine::Vectors => {
                solve_vectors(&build_constraints(&inst.inner, kind.into()), SolveMode::One)
            }
            CpEngine::Bnb => Ok(solve_bnb(
                &inst.inner,
                SolveLimits {
                    node_limit: (node_limit > 0).then_some(node_limit),
                    time_limit: (time_limit_ms > 0)
                        .then_some(Duration::from_millis(time_limit_ms)),
                },
            )),
        };
        let report = match report {
            Ok(r) => r,
            Err(e) => return fail_from(e),
        };
        let raw = report.solution().clone();
        let repaired = raw.repair_to_clique_partitioning();
        let value = match inst.inner.objective_value(&repaired) {
            Ok(v) => v,
            Err(e) => return fail_from(e),
        };
        let boxed = CpSolveReport {
            status: match report.status {
                SolveStatus::Optimal => CpSolveStatus::Optimal,
                SolveStatus::NodeLimit => CpSolveStatus::NodeLimit,
                SolveStatus::TimeLimit => CpSolveStatus::TimeLimit,
            },
            objective: report.objective,
            value,
            explored: report.explored,
            elapsed_secs: report.elapsed.as_secs_f64(),
            partition: repaired.to_partition(),
            raw_solution: raw,
        };
        *out = Box::into_raw(Box::new(boxed));
        CpStatus::Ok
    })
}

/// Releases a report handle. Null is a no-op.
///
/// # Safety
/// `report` must have been produced by `cp_solve` and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cp_report_free(report: *mut CpSolveReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Original-scale objective of the repaired solution.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_report_value(report: *const CpSolveReport) -> i64 {
    deref(report).map_or(0, |r| r.value)
}

/// Objective in the engine's own scale (perturbation-scaled for the
/// strict kinds under the vectors engine).
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_report_objective(report: *const CpSolveReport) -> i64 {
    deref(report).map_or(0, |r| r.objective)
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_report_status(report: *const CpSolveReport) -> CpSolveStatus {
    deref(report).map_or(CpSolveStatus::Optimal, |r| r.status)
}

/// Nodes or vectors explored.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_report_explored(report: *const CpSolveReport) -> u64 {
    deref(report).map_or(0, |r| r.explored)
}

/// Wall time of the solve in seconds.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_report_elapsed_secs(report: *const CpSolveReport) -> f64 {
    deref(report).map_or(0.0, |r| r.elapsed_secs)
}

/// Number of selected pairs in the unrepaired optimum.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_report_raw_edge_count(report: *const CpSolveReport) -> u64 {
    deref(report).map_or(0, |r| r.raw_solution.count_ones() as u64)
}

/// Block count of the repaired partition.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cp_report_block_count(report: *const CpSolveReport) -> u32 {
    deref(report).map_or(0, |r| r.partition.num_blocks() as u32)
}

/// Block id of `vertex` in the repaired partition (restricted-growth
/// labels: vertex 0 is in block 0).
///
/// # Safety
/// `report` must be a live handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn cp_report_block_of(
    report: *const CpSolveReport,
    vertex: u32,
    out: *mut u32,
) -> CpStatus {
    guard(|| {
        let Some(report) = deref(report) else {
            return fail(CpStatus::NullPointer, "null report");
        };
        if out.is_null() {
            return fail(CpStatus::NullPointer, "null out-parameter");
        }
        match report.partition.block_of().get(vertex as usize) {
            Some(&b) => {
                *out = b as u32;
                CpStatus::Ok
            }
            None => fail(CpStatus::InvalidArgument, format!("vertex {vertex} out of range")),
        }
    })
}

/// Exhaustively checks that the pair-sum reduction preserves the complete
/// optimal set of the full formulation (requires n <= 7).
///
/// # Safety
/// `inst` must be a live handle; `holds` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn cp_verify_optimal_set_equality(
    inst: *const CpInstance,
    holds: *mut bool,
) -> CpStatus {
    guard(|| {
        let Some(inst) = deref(inst) else {
            return fail(CpStatus::NullPointer, "null instance");
        };
        if holds.is_null() {
            return fail(CpStatus::NullPointer, "null out-parameter");
        }
        match verify_optimal_set_equality(&inst.inner) {
            Ok(rep) => {
                *holds = rep.holds;
                CpStatus::Ok
            }
            Err(e) => fail_from(e),
        }
    })
}

/// Checks that every optimum of the strict kind repairs to the oracle
/// optimum (requires n <= 7; kind should be mRP, pCP, or pFRP).
///
/// # Safety
/// `inst` must be a live handle; `ok` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn cp_verify_reduction_pipeline(
    inst: *const CpInstance,
    kind: CpKind,
    ok: *mut bool,
) -> CpStatus {
    guard(|| {
        let Some(inst) = deref(inst) else {
            return fail(CpStatus::NullPointer, "null instance");
        };
        if ok.is_null() {
            return fail(CpStatus::NullPointer, "null out-parameter");
        }
        match verify_reduction_pipeline(&inst.inner, kind.into()) {
            Ok(rep) => {
                *ok = rep.ok;
                CpStatus::Ok
            }
            Err(e) => fail_from(e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn generate_inspect_solve() {
        unsafe {
            let mut inst: *mut CpInstance = ptr::null_mut();
            assert_eq!(cp_generate(CpFamily::Random, 12, 7, &mut inst), CpStatus::Ok);
            assert_eq!(cp_instance_vertex_count(inst), 12);

            let mut w = 0i64;
            assert_eq!(cp_instance_weight(inst, 0, 1, &mut w), CpStatus::Ok);
            assert!(w == 1 || w == -1);

            let mut count = 0u64;
            assert_eq!(cp_count_constraints(inst, CpKind::P, &mut count), CpStatus::Ok);
            assert_eq!(count, 660); // 12 * 11 * 10 / 2

            let mut report: *mut CpSolveReport = ptr::null_mut();
            assert_eq!(cp_solve(inst, CpEngine::Bnb, CpKind::P, 0, 0, &mut report), CpStatus::Ok);
            assert_eq!(cp_report_status(report), CpSolveStatus::Optimal);
            let bnb_value = cp_report_value(report);
            assert!(cp_report_explored(report) > 0);
            cp_report_free(report);

            let mut oracle: *mut CpSolveReport = ptr::null_mut();
            assert_eq!(
                cp_solve(inst, CpEngine::Oracle, CpKind::P, 0, 0, &mut oracle),
                CpStatus::Ok
            );
            assert_eq!(cp_report_value(oracle), bnb_value);
            cp_report_free(oracle);

            cp_instance_free(inst);
        }
    }

    #[test]
    fn file_round_trip_and_lp_export() {
        let dir = tempfile::tempdir().unwrap();
        let inst_path =
            CString::new(dir.path().join("x.cpp").to_str().unwrap()).unwrap();
        let lp_path = CString::new(dir.path().join("x.lp").to_str().unwrap()).unwrap();
        unsafe {
            let mut inst: *mut CpInstance = ptr::null_mut();
            assert_eq!(cp_generate(CpFamily::Sparse, 8, 3, &mut inst), CpStatus::Ok);
            assert_eq!(cp_instance_write_file(inst, inst_path.as_ptr()), CpStatus::Ok);

            let mut back: *mut CpInstance = ptr::null_mut();
            assert_eq!(cp_instance_read_file(inst_path.as_ptr(), &mut back), CpStatus::Ok);
            assert_eq!(cp_instance_vertex_count(back), 8);
            let (mut a, mut b) = (0i64, 0i64);
            cp_instance_weight(inst, 2, 5, &mut a);
            cp_instance_weight(back, 2, 5, &mut b);
            assert_eq!(a, b);

            assert_eq!(cp_write_lp_file(inst, CpKind::Pfrp, lp_path.as_ptr()), CpStatus::Ok);
            let text = std::fs::read_to_string(dir.path().join("x.lp")).unwrap();
            assert!(text.starts_with("Maximize\n"));

            cp_instance_free(inst);
            cp_instance_free(back);
        }
    }

    #[test]
    fn error_paths_set_messages() {
        unsafe {
            let mut inst: *mut CpInstance = ptr::null_mut();
            // generators reject n out of range
            assert_eq!(
                cp_generate(CpFamily::Random, 2, 0, &mut inst),
                CpStatus::InvalidArgument
            );
            let msg = CStr::from_ptr(cp_last_error_message()).to_str().unwrap();
            assert!(msg.contains("outside supported range"), "{msg}");

            assert_eq!(cp_generate(CpFamily::Random, 6, 0, &mut inst), CpStatus::Ok);
            // vectors engine is capped
            let mut big: *mut CpInstance = ptr::null_mut();
            assert_eq!(cp_generate(CpFamily::Random, 30, 0, &mut big), CpStatus::Ok);
            let mut report: *mut CpSolveReport = ptr::null_mut();
            assert_eq!(
                cp_solve(big, CpEngine::Vectors, CpKind::P, 0, 0, &mut report),
                CpStatus::SizeCap
            );

            // null handling
            assert_eq!(cp_instance_vertex_count(ptr::null()), 0);
            let mut w = 0i64;
            assert_eq!(
                cp_instance_weight(ptr::null(), 0, 1, &mut w),
                CpStatus::NullPointer
            );
            assert_eq!(cp_instance_weight(inst, 0, 0, &mut w), CpStatus::InvalidArgument);

            let bad_path = CString::new("/nonexistent/dir/x.cpp").unwrap();
            let mut nothing: *mut CpInstance = ptr::null_mut();
            assert_eq!(
                cp_instance_read_file(bad_path.as_ptr(), &mut nothing),
                CpStatus::IoError
            );

            cp_instance_free(inst);
            cp_instance_free(big);
        }
    }

    #[test]
    fn verification_entry_points() {
        unsafe {
            let mut inst: *mut CpInstance = ptr::null_mut();
            assert_eq!(cp_generate(CpFamily::Sparse, 6, 11, &mut inst), CpStatus::Ok);
            let mut holds = false;
            assert_eq!(cp_verify_optimal_set_equality(inst, &mut holds), CpStatus::Ok);
            assert!(holds);
            let mut ok = false;
            assert_eq!(cp_verify_reduction_pipeline(inst, CpKind::Pfrp, &mut ok), CpStatus::Ok);
            assert!(ok);
            cp_instance_free(inst);
        }
    }

    #[test]
    fn partition_accessors() {
        unsafe {
            let mut inst: *mut CpInstance = ptr::null_mut();
            assert_eq!(cp_generate_structured(12, 3, 1, 1, 5, &mut inst), CpStatus::Ok);
            let mut report: *mut CpSolveReport = ptr::null_mut();
            assert_eq!(cp_solve(inst, CpEngine::Bnb, CpKind::P, 0, 0, &mut report), CpStatus::Ok);
            assert_eq!(cp_report_block_count(report), 3);
            let mut blocks = [0u32; 12];
            for (v, slot) in blocks.iter_mut().enumerate() {
                assert_eq!(cp_report_block_of(report, v as u32, slot), CpStatus::Ok);
            }
            // contiguous planted clusters of size 4
            assert_eq!(&blocks[..4], &[0, 0, 0, 0]);
            assert_eq!(&blocks[4..8], &[1, 1, 1, 1]);
            let mut out_of_range = 0u32;
            assert_eq!(
                cp_report_block_of(report, 99, &mut out_of_range),
                CpStatus::InvalidArgument
            );
            cp_report_free(report);
            cp_instance_free(inst);
        }
    }

    #[test]
    fn header_is_generated() {
        let header = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/cliquepart.h"),
        )
        .unwrap();
        assert!(header.contains("CLIQUEPART_H"));
        assert!(header.contains("typedef struct CpInstance CpInstance;"));
        assert!(header.contains("cp_solve"));
        assert!(header.contains("CP_STATUS_OK"));
    }
}
