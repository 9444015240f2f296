//! C interface to `cclosure`. Objects are opaque handles owned by the
//! caller and released with the matching `*_free`; every fallible call
//! returns a [`CcStatus`] and leaves a message for
//! [`cc_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cclosure::format::{parse, serialize, GraphFile};
use cclosure::kernel::{kernelize, BipartiteMode, KernelOptions};
use cclosure::oracle::{Oracle, HARD_LIMIT};
use cclosure::solver::{solve_ds, solve_tds};
use cclosure::{
    compute_closure, is_c_closed, Color, Error, Instance, KernelOutcome, Problem, Side, Vertex,
    Witness,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    InvalidArgument = 1,
    Precondition = 2,
    InvalidBipartition = 3,
    ResourceLimit = 4,
    Internal = 5,
    Parse = 6,
    Io = 7,
    NullPointer = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcProblem {
    IndependentSet = 0,
    DominatingSet = 1,
    ThresholdDominatingSet = 2,
    BwThresholdDominatingSet = 3,
    InducedMatching = 4,
    IrredundantSet = 5,
}

impl From<CcProblem> for Problem {
    fn from(p: CcProblem) -> Self {
        match p {
            CcProblem::IndependentSet => Problem::IndependentSet,
            CcProblem::DominatingSet => Problem::DominatingSet,
            CcProblem::ThresholdDominatingSet => Problem::ThresholdDominatingSet,
            CcProblem::BwThresholdDominatingSet => Problem::BwThresholdDominatingSet,
            CcProblem::InducedMatching => Problem::InducedMatching,
            CcProblem::IrredundantSet => Problem::IrredundantSet,
        }
    }
}

/// Which kernel `cc_kernelize` runs.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcKernelMode {
    General = 0,
    /// Bipartite kernel, thresholds in the maximum degree.
    BipartiteDelta = 1,
    /// Bipartite kernel, thresholds in the closure.
    BipartiteClosure = 2,
}

/// A graph plus optional coloring and bipartition.
pub struct CcGraph {
    file: GraphFile,
}

pub struct CcKernel {
    c: usize,
    outcome: KernelOutcome,
}

pub struct CcSolution {
    witness: Option<Witness>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CcStatus {
    match e {
        Error::InvalidArgument(_) => CcStatus::InvalidArgument,
        Error::Precondition(_) => CcStatus::Precondition,
        Error::InvalidBipartition(_) => CcStatus::InvalidBipartition,
        Error::ResourceLimit(_) => CcStatus::ResourceLimit,
        Error::Internal(_) => CcStatus::Internal,
        Error::Parse { .. } => CcStatus::Parse,
        Error::Io(_) => CcStatus::Io,
    }
}

fn fail(status: CcStatus, msg: impl Into<String>) -> CcStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, turning errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), CcStatus>) -> CcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(CcStatus::Panic, "panic inside cclosure"),
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, CcStatus>;
}

impl<T> OrStatus<T> for cclosure::Result<T> {
    fn or_status(self) -> Result<T, CcStatus> {
        self.map_err(|e| fail(status_of(&e), e.to_string()))
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, CcStatus> {
    p.as_ref()
        .ok_or_else(|| fail(CcStatus::NullPointer, "null handle"))
}

unsafe fn deref_mut<'a, T>(p: *mut T) -> Result<&'a mut T, CcStatus> {
    p.as_mut()
        .ok_or_else(|| fail(CcStatus::NullPointer, "null handle"))
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), CcStatus> {
    if out.is_null() {
        return Err(fail(CcStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` is NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Graph with vertices `0..n` and no edges.
#[no_mangle]
pub extern "C" fn cc_graph_new(n: usize) -> *mut CcGraph {
    let file = GraphFile::new(cclosure::Graph::with_vertices(n));
    Box::into_raw(Box::new(CcGraph { file }))
}

/// Parses the text format.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_parse(text: *const c_char, out: *mut *mut CcGraph) -> CcStatus {
    guard(|| {
        let text = deref(text)?;
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(CcStatus::InvalidArgument, "input is not UTF-8"))?;
        let file = parse(text).or_status()?;
        store(out, Box::into_raw(Box::new(CcGraph { file })))
    })
}

/// # Safety
/// `g` is NULL or a graph handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_free(g: *mut CcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_add_edge(g: *mut CcGraph, u: u32, v: u32) -> CcStatus {
    guard(|| deref_mut(g)?.file.graph.add_edge(u, v).or_status())
}

/// Marks `v` white (`white` true) or black.
///
/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_set_white(g: *mut CcGraph, v: u32, white: bool) -> CcStatus {
    guard(|| {
        let f = &mut deref_mut(g)?.file;
        f.graph.require(v).or_status()?;
        let color = if white { Color::White } else { Color::Black };
        f.coloring
            .get_or_insert_with(Default::default)
            .set(v, color);
        Ok(())
    })
}

/// Puts `v` on the left (`left` true) or right side.
///
/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_set_left(g: *mut CcGraph, v: u32, left: bool) -> CcStatus {
    guard(|| {
        let f = &mut deref_mut(g)?.file;
        f.graph.require(v).or_status()?;
        let side = if left { Side::Left } else { Side::Right };
        f.bipartition
            .get_or_insert_with(Default::default)
            .set(v, side);
        Ok(())
    })
}

/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_vertex_count(g: *const CcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.file.graph.vertex_count())
}

/// # Safety
/// `g` is a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_edge_count(g: *const CcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.file.graph.edge_count())
}

/// Text serialization; free the result with `cc_string_free`.
///
/// # Safety
/// `g` is a live graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_to_text(g: *const CcGraph, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let f = &deref(g)?.file;
        let text = serialize(&f.graph, f.coloring.as_ref(), f.bipartition.as_ref());
        store(out, into_c_string(text))
    })
}

/// Smallest `c` for which the graph is c-closed.
///
/// # Safety
/// `g` is a live graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_closure(g: *const CcGraph, out: *mut usize) -> CcStatus {
    guard(|| store(out, compute_closure(&deref(g)?.file.graph).c))
}

/// # Safety
/// `g` is a live graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_is_c_closed(g: *const CcGraph, c: usize, out: *mut bool) -> CcStatus {
    guard(|| store(out, is_c_closed(&deref(g)?.file.graph, c).or_status()?))
}

fn instance(f: &GraphFile, problem: CcProblem, k: usize, r: usize) -> Instance {
    let problem = Problem::from(problem);
    let mut inst = Instance::new(problem, f.graph.clone(), k);
    if problem.has_threshold() {
        inst = inst.with_r(r);
    }
    if let Some(col) = &f.coloring {
        inst = inst.with_coloring(col.clone());
    }
    if let Some(parts) = &f.bipartition {
        inst = inst.with_bipartition(parts.clone());
    }
    inst
}

/// Runs a kernel. `r` is ignored for problems without a threshold; `c = 0`
/// uses the graph's own closure.
///
/// # Safety
/// `g` is a live graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_kernelize(
    g: *const CcGraph,
    problem: CcProblem,
    k: usize,
    r: usize,
    c: usize,
    mode: CcKernelMode,
    out: *mut *mut CcKernel,
) -> CcStatus {
    guard(|| {
        let f = &deref(g)?.file;
        let inst = instance(f, problem, k, r);
        let c = if c == 0 {
            compute_closure(&f.graph).c
        } else {
            c
        };
        let opts = KernelOptions {
            bipartite: match mode {
                CcKernelMode::General => None,
                CcKernelMode::BipartiteDelta => Some(BipartiteMode::Delta),
                CcKernelMode::BipartiteClosure => Some(BipartiteMode::Closure),
            },
            ..Default::default()
        };
        let outcome = kernelize(&inst, c, &opts).or_status()?;
        store(out, Box::into_raw(Box::new(CcKernel { c, outcome })))
    })
}

/// # Safety
/// `res` is NULL or a kernel handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_kernel_free(res: *mut CcKernel) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// True if the kernel settled the instance.
///
/// # Safety
/// `res` is a live kernel handle.
#[no_mangle]
pub unsafe extern "C" fn cc_kernel_is_decided(res: *const CcKernel) -> bool {
    res.as_ref().is_some_and(|r| r.outcome.answer().is_some())
}

/// The decision; `Precondition` if the kernel reduced instead.
///
/// # Safety
/// `res` is a live kernel handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_kernel_answer(res: *const CcKernel, out: *mut bool) -> CcStatus {
    guard(|| match deref(res)?.outcome.answer() {
        Some(a) => store(out, a),
        None => Err(fail(
            CcStatus::Precondition,
            "instance was reduced, not decided",
        )),
    })
}

/// Copy of the reduced graph (with its coloring and bipartition) and its
/// budget; `Precondition` if the kernel decided instead.
///
/// # Safety
/// `res` is a live kernel handle; `out_graph` and `out_k` are writable.
#[no_mangle]
pub unsafe extern "C" fn cc_kernel_reduced(
    res: *const CcKernel,
    out_graph: *mut *mut CcGraph,
    out_k: *mut usize,
) -> CcStatus {
    guard(|| match &deref(res)?.outcome {
        KernelOutcome::Reduced { instance, .. } => {
            store(out_k, instance.k)?;
            let file = GraphFile {
                graph: instance.graph.clone(),
                coloring: instance.coloring.clone(),
                bipartition: instance.bipartition.clone(),
            };
            store(out_graph, Box::into_raw(Box::new(CcGraph { file })))
        }
        KernelOutcome::Decided { .. } => Err(fail(
            CcStatus::Precondition,
            "instance was decided, not reduced",
        )),
    })
}

fn copy_witness(
    w: Option<&Witness>,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> Result<(), CcStatus> {
    let flat: Vec<Vertex> = match w {
        None => Vec::new(),
        Some(w) => match (w.vertex_set(), w.edge_set()) {
            (Some(s), _) => s.iter().copied().collect(),
            (_, Some(m)) => m.iter().flat_map(|&(u, v)| [u, v]).collect(),
            _ => Vec::new(),
        },
    };
    unsafe { store(out_len, flat.len())? };
    if flat.len() > cap {
        return Err(fail(
            CcStatus::BufferTooSmall,
            format!("witness needs {} slots", flat.len()),
        ));
    }
    if !flat.is_empty() {
        if buf.is_null() {
            return Err(fail(CcStatus::NullPointer, "null witness buffer"));
        }
        unsafe { ptr::copy_nonoverlapping(flat.as_ptr(), buf, flat.len()) };
    }
    Ok(())
}

/// Witness of a Yes decision: vertex ids, or `u0 v0 u1 v1 …` for induced
/// matchings. `*out_len` receives the required length even when `cap` is
/// too small; it is 0 when there is no witness.
///
/// # Safety
/// `res` is a live kernel handle; `buf` has room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn cc_kernel_witness(
    res: *const CcKernel,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> CcStatus {
    guard(|| copy_witness(deref(res)?.outcome.witness(), buf, cap, out_len))
}

/// Outcome and rule trace as JSON; free with `cc_string_free`.
///
/// # Safety
/// `res` is a live kernel handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_kernel_trace_json(
    res: *const CcKernel,
    out: *mut *mut c_char,
) -> CcStatus {
    guard(|| {
        let res = deref(res)?;
        let mut value = serde_json::to_value(&res.outcome)
            .map_err(|e| fail(CcStatus::Internal, e.to_string()))?;
        value["schema"] = cclosure::verify::SCHEMA.into();
        value["c"] = res.c.into();
        store(out, into_c_string(value.to_string()))
    })
}

/// Exact solver: branching for ds and tds, the exhaustive oracle otherwise.
///
/// # Safety
/// `g` is a live graph handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cc_solve(
    g: *const CcGraph,
    problem: CcProblem,
    k: usize,
    r: usize,
    out: *mut *mut CcSolution,
) -> CcStatus {
    guard(|| {
        let f = &deref(g)?.file;
        let c = compute_closure(&f.graph).c;
        let witness = match problem {
            CcProblem::DominatingSet => solve_ds(&f.graph, c, k).or_status()?.witness,
            CcProblem::ThresholdDominatingSet => solve_tds(&f.graph, c, r, k).or_status()?.witness,
            _ => Oracle::new(HARD_LIMIT)
                .solve(&instance(f, problem, k, r))
                .or_status()?,
        };
        store(out, Box::into_raw(Box::new(CcSolution { witness })))
    })
}

/// # Safety
/// `sol` is NULL or a solution handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_solution_free(sol: *mut CcSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}

/// # Safety
/// `sol` is a live solution handle.
#[no_mangle]
pub unsafe extern "C" fn cc_solution_found(sol: *const CcSolution) -> bool {
    sol.as_ref().is_some_and(|s| s.witness.is_some())
}

/// Same layout as `cc_kernel_witness`.
///
/// # Safety
/// `sol` is a live solution handle; `buf` has room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn cc_solution_witness(
    sol: *const CcSolution,
    buf: *mut u32,
    cap: usize,
    out_len: *mut usize,
) -> CcStatus {
    guard(|| copy_witness(deref(sol)?.witness.as_ref(), buf, cap, out_len))
}
